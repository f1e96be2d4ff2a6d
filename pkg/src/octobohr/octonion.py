"""Octonion arithmetic built from the quaternion doubling construction.

An octonion is stored as 8 real coordinates in the basis order
(1, i, j, k, l, li, lj, lk), equivalently as a pair of quaternions (a, b)
with product

    (a, b) * (c, d) = (a c - d conj(b), conj(a) d + c b).

The algebra is a real division algebra with multiplicative norm; it is not
associative but is alternative, so any subalgebra generated by two elements
is associative.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import TABLE

__all__ = [
    "Quaternion",
    "Octonion",
    "SlicePoint",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
    "L",
    "LI",
    "LJ",
    "LK",
    "BASIS",
    "oct_mul",
    "oct_conj",
    "oct_norm",
    "oct_inv",
    "associator",
    "slice_decompose",
    "random_imaginary_unit",
    "stack_coords",
]


@dataclass(frozen=True)
class Quaternion:
    """A quaternion w + x i + y j + z k."""

    w: float
    x: float
    y: float
    z: float

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        a, b = self, other
        return Quaternion(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )

    def conj(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        return math.sqrt(self.w**2 + self.x**2 + self.y**2 + self.z**2)

    def to_array(self):
        return np.array([self.w, self.x, self.y, self.z], dtype=np.float64)


def _mul8(x, y):
    return np.einsum("p,q,pqr->r", x, y, TABLE, optimize=True)


class Octonion:
    """Immutable octonion with coordinates in the (1, i, j, k, l, li, lj, lk) basis."""

    __slots__ = ("_c",)

    def __init__(self, *coords):
        if len(coords) == 1:
            arr = np.asarray(coords[0], dtype=np.float64)
        else:
            arr = np.asarray(coords, dtype=np.float64)
        if arr.shape != (8,):
            raise ValueError("an octonion needs exactly 8 real coordinates")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "_c", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    @classmethod
    def from_parts(cls, a, b):
        """Build from the quaternion pair (a, b) representing a + l b."""
        return cls(np.concatenate([a.to_array(), b.to_array()]))

    @classmethod
    def from_real(cls, t):
        arr = np.zeros(8)
        arr[0] = float(t)
        return cls(arr)

    @property
    def coords(self):
        return self._c

    @property
    def re(self):
        return float(self._c[0])

    @property
    def first(self):
        return Quaternion(*self._c[:4])

    @property
    def second(self):
        return Quaternion(*self._c[4:])

    def imag_part(self):
        arr = self._c.copy()
        arr[0] = 0.0
        return Octonion(arr)

    def conj(self):
        arr = -self._c
        arr[0] = self._c[0]
        return Octonion(arr)

    def norm_sq(self):
        return float(np.dot(self._c, self._c))

    def norm(self):
        return math.sqrt(self.norm_sq())

    def inverse(self):
        nsq = self.norm_sq()
        if nsq == 0.0:
            raise ZeroDivisionError("zero divisor query in a division algebra")
        return Octonion(self.conj().coords / nsq)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Octonion(self._c + other._c)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Octonion(self._c - other._c)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Octonion(other._c - self._c)

    def __neg__(self):
        return Octonion(-self._c)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Octonion(self._c * float(other))
        if isinstance(other, Octonion):
            return Octonion(_mul8(self._c, other._c))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Octonion(self._c * float(other))
        if isinstance(other, Octonion):
            return Octonion(_mul8(other._c, self._c))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Octonion(self._c / float(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, float)):
            other = Octonion.from_real(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    __hash__ = None

    def isclose(self, other, tol=1e-12):
        other = _coerce(other)
        return (self - other).norm() <= tol

    def __repr__(self):
        labels = ("", "i", "j", "k", "l", "li", "lj", "lk")
        terms = []
        for value, label in zip(self._c, labels):
            if value != 0.0:
                terms.append("%g%s" % (value, label) if label else "%g" % value)
        return "Octonion(%s)" % (" + ".join(terms) if terms else "0")


def _coerce(value):
    if isinstance(value, Octonion):
        return value
    if isinstance(value, (int, float)):
        return Octonion.from_real(value)
    return None


ZERO = Octonion.from_real(0.0)
ONE = Octonion.from_real(1.0)
I = Octonion(0, 1, 0, 0, 0, 0, 0, 0)
J = Octonion(0, 0, 1, 0, 0, 0, 0, 0)
K = Octonion(0, 0, 0, 1, 0, 0, 0, 0)
L = Octonion(0, 0, 0, 0, 1, 0, 0, 0)
LI = Octonion(0, 0, 0, 0, 0, 1, 0, 0)
LJ = Octonion(0, 0, 0, 0, 0, 0, 1, 0)
LK = Octonion(0, 0, 0, 0, 0, 0, 0, 1)
BASIS = (ONE, I, J, K, L, LI, LJ, LK)


def oct_mul(x, y):
    return x * y


def oct_conj(x):
    return x.conj()


def oct_norm(x):
    return x.norm()


def oct_inv(x):
    return x.inverse()


def associator(x, y, z):
    """(x y) z - x (y z); zero whenever two arguments share a subalgebra."""
    return (x * y) * z - x * (y * z)


@dataclass(frozen=True)
class SlicePoint:
    """Coordinates alpha + beta * unit of a point inside its complex slice."""

    alpha: float
    beta: float
    unit: Octonion

    def recompose(self):
        return Octonion.from_real(self.alpha) + self.unit * self.beta


def slice_decompose(x, real_unit=I):
    """Write x = alpha + beta I with beta >= 0 and I an imaginary unit.

    Real points have no preferred slice; they are assigned ``real_unit``
    (the first basis imaginary by default) with beta = 0.
    """
    alpha = x.re
    imag = x.imag_part()
    beta = imag.norm()
    if beta < 1e-150:
        return SlicePoint(alpha, 0.0, real_unit)
    return SlicePoint(alpha, beta, imag / beta)


def random_imaginary_unit(rng):
    """Draw a uniformly distributed imaginary unit octonion.

    ``rng`` is a numpy Generator or a seed acceptable to default_rng.
    """
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    while True:
        v = rng.standard_normal(7)
        scale = np.linalg.norm(v)
        if scale > 1e-8:
            break
    arr = np.zeros(8)
    arr[1:] = v / scale
    return Octonion(arr)


def stack_coords(octonions):
    """Stack an iterable of octonions into an (n, 8) float array."""
    items = list(octonions)
    out = np.empty((len(items), 8), dtype=np.float64)
    for row, item in enumerate(items):
        out[row] = item.coords
    return out
