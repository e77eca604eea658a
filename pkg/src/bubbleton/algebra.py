"""First-order lambda-jets, 2x2 complex matrices and CP^1 lines.

Every scalar slot accepts a Python complex, a numpy array (evaluated
elementwise, so whole grids go through in one call) or a :class:`Jet`
wrapping either of those.  Frame code is written once against this
generic scalar and the lambda-derivative falls out of the arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .errors import NotInSu2, SingularInput, ZeroArgument

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class Jet:
    """A value paired with its first derivative in the spectral parameter."""

    val: Any
    der: Any

    # keep numpy from broadcasting into object arrays of jets
    __array_ufunc__ = None

    @classmethod
    def variable(cls, value) -> "Jet":
        """The spectral parameter itself, seeded with derivative 1."""
        value = np.asarray(value, dtype=complex)
        if value.ndim == 0:
            value = complex(value)
        return cls(value, np.ones_like(value) if np.ndim(value) else 1.0 + 0j)

    @classmethod
    def constant(cls, value) -> "Jet":
        return cls(value, np.zeros_like(value, dtype=complex) if np.ndim(value) else 0j)

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val + other.val, self.der + other.der)
        return Jet(self.val + other, self.der)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.val, -self.der)

    def __sub__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val - other.val, self.der - other.der)
        return Jet(self.val - other, self.der)

    def __rsub__(self, other):
        return Jet(other - self.val, -self.der)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return NotImplemented
        if isinstance(other, Jet):
            return Jet(self.val * other.val, self.der * other.val + self.val * other.der)
        return Jet(self.val * other, self.der * other)

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet":
        inv = 1.0 / self.val
        return Jet(inv, -self.der * inv * inv)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return Jet(self.val / other, self.der / other)

    def __rtruediv__(self, other):
        return other * self.reciprocal()

    def __pow__(self, n: int):
        if not isinstance(n, (int, np.integer)):
            raise TypeError("only integer powers of jets are supported")
        if n < 0:
            return self.reciprocal() ** (-n)
        out = Jet.constant(np.ones_like(self.val))
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"Jet(val={self.val!r}, der={self.der!r})"


def value(x):
    """Strip the derivative part, if any."""
    return x.val if isinstance(x, Jet) else x


def derivative(x):
    """Derivative part; zero for plain scalars."""
    if isinstance(x, Jet):
        return x.der
    return np.zeros_like(x, dtype=complex) if np.ndim(x) else 0j


def _as_complex(a):
    arr = np.asarray(a, dtype=complex)
    # -0.0 imaginary parts would flip the principal root on the negative axis
    arr = arr + 0j
    return arr if arr.ndim else complex(arr)


def principal_sqrt(a, sheet: int = 1):
    """Square root with the cut on the negative real axis and sqrt(1) = 1.

    ``sheet=-1`` selects the other branch.  Jets propagate
    d sqrt(a) = a' / (2 sqrt(a)).
    """
    if isinstance(a, Jet):
        root = principal_sqrt(a.val, sheet)
        return Jet(root, a.der / (2.0 * root))
    a = _as_complex(a)
    if np.any(np.asarray(a) == 0):
        raise ZeroArgument("square root of zero is not differentiable")
    # np.sqrt maps (-1+0j) to 1j, the (-pi, pi] convention
    return sheet * np.sqrt(a)


def cos(a):
    if isinstance(a, Jet):
        return Jet(np.cos(a.val), -np.sin(a.val) * a.der)
    return np.cos(a)


def sin(a):
    if isinstance(a, Jet):
        return Jet(np.sin(a.val), np.cos(a.val) * a.der)
    return np.sin(a)


def conj(a):
    if isinstance(a, Jet):
        raise TypeError("conjugation is not holomorphic in lambda")
    return np.conj(a)


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix [[a, b], [c, d]] over the generic scalar."""

    a: Any
    b: Any
    c: Any
    d: Any

    __array_ufunc__ = None

    @classmethod
    def identity(cls, like=None) -> "Mat2":
        one = np.ones_like(like, dtype=complex) if like is not None and np.ndim(like) else 1.0 + 0j
        zero = one * 0
        return cls(one, zero, zero, one)

    @classmethod
    def diag(cls, p, q) -> "Mat2":
        zero = 0 * value(p)
        return cls(p, zero, zero, q)

    @classmethod
    def from_array(cls, arr) -> "Mat2":
        arr = np.asarray(arr, dtype=complex)
        return cls(arr[..., 0, 0], arr[..., 0, 1], arr[..., 1, 0], arr[..., 1, 1])

    def to_array(self) -> np.ndarray:
        m = self.value()
        a, b, c, d = np.broadcast_arrays(*(np.asarray(e, dtype=complex) for e in (m.a, m.b, m.c, m.d)))
        return np.stack([np.stack([a, b], -1), np.stack([c, d], -1)], -2)

    def entries(self):
        return self.a, self.b, self.c, self.d

    def map(self, fn: Callable) -> "Mat2":
        return Mat2(*(fn(e) for e in self.entries()))

    def value(self) -> "Mat2":
        return self.map(value)

    def jet_part(self) -> "Mat2":
        return self.map(derivative)

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Mat2":
        return self.map(lambda e: -e)

    def __mul__(self, s) -> "Mat2":
        if isinstance(s, Mat2):
            raise TypeError("use @ for matrix products")
        return Mat2(self.a * s, self.b * s, self.c * s, self.d * s)

    __rmul__ = __mul__

    def __truediv__(self, s) -> "Mat2":
        return self * (1.0 / s)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def inv(self) -> "Mat2":
        det = self.det()
        if np.any(np.asarray(value(det)) == 0):
            raise SingularInput("matrix is singular")
        r = 1.0 / det
        return Mat2(self.d * r, -self.b * r, -self.c * r, self.a * r)

    @property
    def H(self) -> "Mat2":
        """Conjugate transpose."""
        return Mat2(conj(self.a), conj(self.c), conj(self.b), conj(self.d))

    def norm(self):
        """Frobenius norm of the value part, elementwise over grids."""
        m = self.value()
        return np.sqrt(sum(np.abs(e) ** 2 for e in m.entries()))

    def max_norm(self) -> float:
        return float(np.max(self.norm()))

    def allclose(self, other: "Mat2", atol: float = 1e-12) -> bool:
        return (self - other).max_norm() <= atol


def matrix_distance(m: Mat2, n: Mat2) -> float:
    return (m - n).max_norm()


@dataclass(frozen=True)
class LineCP1:
    """A point of CP^1, stored as a unit 2-vector (a, b).

    Entries may be arrays, in which case the object is a field of lines.
    """

    a: Any
    b: Any

    @classmethod
    def through(cls, a, b) -> "LineCP1":
        a = np.asarray(a, dtype=complex)
        b = np.asarray(b, dtype=complex)
        n = np.sqrt(np.abs(a) ** 2 + np.abs(b) ** 2)
        if np.any(n == 0):
            raise ValueError("the zero vector does not span a line")
        a, b = a / n, b / n
        if a.ndim == 0:
            return cls(complex(a), complex(b))
        return cls(a, b)

    def same_as(self, other: "LineCP1", tol: float = DEFAULT_TOL) -> bool:
        cross = self.a * other.b - self.b * other.a
        return bool(np.all(np.abs(cross) <= tol))


E1 = LineCP1(1.0 + 0j, 0j)


def hermitian_projection(L: LineCP1) -> Mat2:
    """Orthogonal projection of C^2 onto the line L."""
    a, b = L.a, L.b
    n = np.abs(a) ** 2 + np.abs(b) ** 2
    return Mat2(
        np.abs(a) ** 2 / n + 0j,
        a * np.conj(b) / n,
        np.conj(a) * b / n,
        np.abs(b) ** 2 / n + 0j,
    )


def gram_schmidt_qr(m: Mat2, tol: float = DEFAULT_TOL) -> tuple[Mat2, Mat2]:
    """Factor a unit-determinant matrix as Q R.

    Q is special unitary, R upper triangular with positive real diagonal.
    Orthonormalizes the columns of ``m`` in order.
    """
    if np.any(np.abs(np.asarray(m.det())) <= tol):
        raise SingularInput("Gram-Schmidt needs an invertible matrix")
    c0 = (m.a, m.c)
    c1 = (m.b, m.d)
    r00 = np.sqrt(np.abs(c0[0]) ** 2 + np.abs(c0[1]) ** 2)
    q0 = (c0[0] / r00, c0[1] / r00)
    r01 = np.conj(q0[0]) * c1[0] + np.conj(q0[1]) * c1[1]
    w = (c1[0] - r01 * q0[0], c1[1] - r01 * q0[1])
    r11 = np.sqrt(np.abs(w[0]) ** 2 + np.abs(w[1]) ** 2)
    q1 = (w[0] / r11, w[1] / r11)
    Q = Mat2(q0[0], q1[0], q0[1], q1[1])
    R = Mat2(r00 + 0j, r01, 0 * r00 + 0j, r11 + 0j)
    return Q, R


def r3_to_spinor(v) -> Mat2:
    """(x1, x2, x3) -> [[i x3, -x1 + i x2], [x1 + i x2, -i x3]].

    This is the identification under which the round cylinder of
    radius 1/(2|H|) reads (sin 2 pi x, -2 pi y, 1 - cos 2 pi x)/(2H).
    """
    v = np.asarray(v, dtype=float)
    x1, x2, x3 = v[..., 0], v[..., 1], v[..., 2]
    return Mat2(1j * x3, -x1 + 1j * x2, x1 + 1j * x2, -1j * x3)


def spinor_to_r3(m: Mat2, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Inverse of :func:`r3_to_spinor`; rejects matrices outside su(2).

    The tolerance is relative to the size of the entries.
    """
    m = m.value()
    scale = 1.0 + np.max(m.norm())
    herm = (m + m.H).max_norm()
    tr = float(np.max(np.abs(m.trace())))
    if herm > tol * scale or tr > tol * scale:
        raise NotInSu2(f"not trace-free anti-hermitian (|M + M^H| = {herm:.3e}, |tr| = {tr:.3e})")
    x1 = (np.real(m.c) - np.real(m.b)) / 2
    x2 = (np.imag(m.b) + np.imag(m.c)) / 2
    x3 = (np.imag(m.a) - np.imag(m.d)) / 2
    return np.stack(np.broadcast_arrays(x1, x2, x3), axis=-1)
