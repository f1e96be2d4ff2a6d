"""Truncated slice power series with octonion coefficients on the right.

A series object stores the coefficients a_0 .. a_N of sum_k x^k a_k together
with ``tail_coef``, a sup bound on |a_k| for every k > N.  A tail of 0.0
means the object is an exact polynomial.  Addition, subtraction, scalar
multiplication and coefficient conjugation propagate tail bounds soundly;
the product, normal, reciprocal and derivative operate on the stored
polynomial part and return exact objects (callers attach an analytic tail
bound afterwards via ``with_tail`` when they know one).

Evaluation uses the slice trick: for x = alpha + beta I the powers x^k stay
in the complex slice through I, so with z = alpha + i beta and
z^k = u_k + i v_k,

    f(x) = sum_k u_k a_k + I * (sum_k v_k a_k),

which turns a full evaluation into two real matrix products.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import ACTIVE as _K
from .octonion import Octonion, I as UNIT_I, slice_decompose, stack_coords

__all__ = [
    "SliceSeries",
    "StemValue",
    "evaluate",
    "evaluate_on_slice",
    "slice_product",
    "slice_conj",
    "normal",
    "slice_reciprocal",
    "slice_derivative",
    "stem_components",
    "split_components",
    "splitting_basis",
    "sup_norm_estimate",
    "companion_point",
    "companion_identity_residual",
]

DEFAULT_ORDER = 300


class SliceSeries:
    """Coefficients of a right-coefficient power series, truncated at order N."""

    __slots__ = ("_coeffs", "_tail")

    def __init__(self, coeffs, tail_coef=0.0):
        arr = np.asarray(coeffs, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != 8 or arr.shape[0] == 0:
            raise ValueError("coefficients must form a nonempty (n, 8) array")
        if not (tail_coef >= 0.0):
            raise ValueError("tail_coef must be a nonnegative sup bound")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "_coeffs", arr)
        object.__setattr__(self, "_tail", float(tail_coef))

    def __setattr__(self, name, value):
        raise AttributeError("SliceSeries is immutable")

    @classmethod
    def from_octonions(cls, octonions, tail_coef=0.0):
        return cls(stack_coords(octonions), tail_coef)

    @classmethod
    def from_real(cls, values, tail_coef=0.0):
        values = np.asarray(values, dtype=np.float64)
        arr = np.zeros((values.shape[0], 8))
        arr[:, 0] = values
        return cls(arr, tail_coef)

    @classmethod
    def identity(cls):
        """The series of the variable itself."""
        return cls.from_real([0.0, 1.0])

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def order(self):
        return self._coeffs.shape[0] - 1

    @property
    def tail_coef(self):
        return self._tail

    def coefficient(self, k):
        if 0 <= k <= self.order:
            return Octonion(self._coeffs[k])
        return Octonion(np.zeros(8))

    def abs_coeffs(self):
        return np.linalg.norm(self._coeffs, axis=1)

    def with_tail(self, tail_coef):
        return SliceSeries(self._coeffs, tail_coef)

    def truncated(self, order):
        if order >= self.order:
            return self
        return SliceSeries(self._coeffs[: order + 1], self._tail)

    def padded(self, order):
        if order <= self.order:
            return self
        arr = np.zeros((order + 1, 8))
        arr[: self.order + 1] = self._coeffs
        return SliceSeries(arr, self._tail)

    def tail_majorant(self, r):
        """Upper bound on |sum_{k>N} x^k a_k| at |x| = r < 1."""
        if self._tail == 0.0:
            return 0.0
        if not 0.0 <= r < 1.0:
            raise ValueError("tail majorant requires 0 <= r < 1")
        return self._tail * r ** (self.order + 1) / (1.0 - r)

    def __add__(self, other):
        other = _coerce_series(other)
        if other is None:
            return NotImplemented
        n = max(self.order, other.order)
        return SliceSeries(
            self.padded(n).coeffs + other.padded(n).coeffs,
            self._tail + other._tail,
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_series(other)
        if other is None:
            return NotImplemented
        n = max(self.order, other.order)
        return SliceSeries(
            self.padded(n).coeffs - other.padded(n).coeffs,
            self._tail + other._tail,
        )

    def __rsub__(self, other):
        other = _coerce_series(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return SliceSeries(-self._coeffs, self._tail)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return SliceSeries(self._coeffs * float(other), self._tail * abs(other))
        if isinstance(other, SliceSeries):
            return slice_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return SliceSeries(self._coeffs * float(other), self._tail * abs(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SliceSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self._tail == other._tail
            and bool(np.array_equal(self._coeffs, other._coeffs))
        )

    __hash__ = None

    def __repr__(self):
        return "SliceSeries(order=%d, tail_coef=%g)" % (self.order, self._tail)


def _coerce_series(value):
    if isinstance(value, SliceSeries):
        return value
    if isinstance(value, (int, float)):
        return SliceSeries.from_real([float(value)])
    if isinstance(value, Octonion):
        return SliceSeries(value.coords[None, :])
    return None


def evaluate_on_slice(f, alpha, beta, unit):
    """Evaluate f at the points alpha[m] + beta[m] * unit; returns (m, 8)."""
    alpha = np.ascontiguousarray(alpha, dtype=np.float64)
    beta = np.ascontiguousarray(beta, dtype=np.float64)
    n = f.order + 1
    unit_rows = np.repeat(unit.coords[None, :], n, axis=0)
    icoeffs = _K.mul_batch(unit_rows, f.coeffs)
    return _K.eval_points(f.coeffs, icoeffs, alpha, beta)


def evaluate(f, x):
    """Evaluate the truncated series at a point of the open unit ball."""
    if x.norm() >= 1.0:
        raise ValueError("evaluation requires |x| < 1 (open unit ball)")
    point = slice_decompose(x)
    vals = evaluate_on_slice(
        f, np.array([point.alpha]), np.array([point.beta]), point.unit
    )
    return Octonion(vals[0])


def slice_product(f, g, out_order=None):
    """Convolution product (f * g)_n = sum_k f_k g_{n-k}.

    For exact polynomials the full product degree is kept unless
    ``out_order`` trims it; otherwise only orders computable from the stored
    coefficients are kept (the smaller truncation order).
    """
    exact = f.tail_coef == 0.0 and g.tail_coef == 0.0
    natural = f.order + g.order if exact else min(f.order, g.order)
    n_out = natural if out_order is None else min(out_order, f.order + g.order)
    return SliceSeries(_K.conv(f.coeffs, g.coeffs, n_out + 1))


def slice_conj(f):
    """Coefficientwise conjugate series."""
    arr = -f.coeffs.copy()
    arr[:, 0] = f.coeffs[:, 0]
    return SliceSeries(arr, f.tail_coef)


def normal(f):
    """The symmetrized product f * conj(f); its coefficients are real.

    Floating point leaves dust in the imaginary components (the exact value
    is real because the coefficients pair into conjugate sums); the raw
    convolution is returned so that tests can measure the dust.
    """
    return slice_product(f, slice_conj(f))


def slice_reciprocal(f, out_order=None):
    """Series inverse with respect to the slice product.

    Computed as the real-series reciprocal of the normal, convolved with the
    conjugated coefficients; the result satisfies f * reciprocal = 1 up to
    truncation.
    """
    if out_order is None:
        out_order = f.order
    head = np.linalg.norm(f.coeffs[0])
    if head < 1e-8:
        raise ValueError("reciprocal undefined: the normal vanishes at the origin")
    norm_coeffs = normal(slice_trim(f, out_order)).coeffs[:, 0]
    recip = _K.real_reciprocal(np.ascontiguousarray(norm_coeffs), out_order + 1)
    conj_arr = slice_conj(f).coeffs
    embedded = np.zeros((out_order + 1, 8))
    embedded[:, 0] = recip
    return SliceSeries(_K.conv(embedded, conj_arr, out_order + 1))


def slice_trim(f, order):
    """Polynomial part up to the given order (pads with zeros if shorter)."""
    return f.truncated(order).padded(order).with_tail(0.0)


def slice_derivative(f):
    """Termwise derivative: coefficient k of f' is (k+1) a_{k+1}."""
    if f.order == 0:
        return SliceSeries(np.zeros((1, 8)))
    weights = np.arange(1, f.order + 1, dtype=np.float64)
    return SliceSeries(f.coeffs[1:] * weights[:, None])


@dataclass(frozen=True)
class StemValue:
    """Stem decomposition f(x) = first + unit * second at z = alpha + i beta."""

    first: Octonion
    second: Octonion
    z: complex
    unit: Octonion

    def recompose(self):
        return self.first + self.unit * self.second


def stem_components(f, x):
    """Split f(x) into the two stem components along the slice of x."""
    point = slice_decompose(x)
    z = complex(point.alpha, point.beta)
    powers = np.vander(np.array([z]), f.order + 1, increasing=True)[0]
    first = powers.real @ f.coeffs
    second = powers.imag @ f.coeffs
    return StemValue(Octonion(first), Octonion(second), z, point.unit)


def splitting_basis(unit):
    """Orthonormal real basis (1, I, I1, I*I1, I2, I*I2, I3, I*I3) for a unit I.

    Built deterministically by Gram-Schmidt over the canonical imaginary
    directions, pairing each new direction with its product by I.
    """
    basis = [np.zeros(8), unit.coords.copy()]
    basis[0][0] = 1.0
    candidates = np.eye(8)[1:]
    for cand in candidates:
        if len(basis) == 8:
            break
        v = cand.copy()
        for b in basis:
            v -= np.dot(v, b) * b
        scale = np.linalg.norm(v)
        if scale < 1e-6:
            continue
        v /= scale
        w = (unit * Octonion(v)).coords.copy()
        for b in basis + [v]:
            w -= np.dot(w, b) * b
        wscale = np.linalg.norm(w)
        if wscale < 1e-6:
            raise ValueError("degenerate splitting basis")
        basis.append(v)
        basis.append(w / wscale)
    if len(basis) != 8:
        raise ValueError("failed to complete the splitting basis")
    return np.array(basis)


def split_components(f, unit, z):
    """Four complex component functions of f along the slice of ``unit``.

    Returns (c_0, c_1, c_2, c_3) with
    f(alpha + beta I) = sum_n (Re c_n) B_{2n} + (Im c_n) B_{2n+1}
    in the splitting basis B of the slice, evaluated at z = alpha + i beta.
    """
    basis = splitting_basis(unit)
    powers = np.vander(np.array([z]), f.order + 1, increasing=True)[0]
    value = powers.real @ f.coeffs + (
        powers.imag @ _K.mul_batch(
            np.repeat(unit.coords[None, :], f.order + 1, axis=0), f.coeffs
        )
    )
    comps = basis @ value
    return tuple(complex(comps[2 * n], comps[2 * n + 1]) for n in range(4))


def sup_norm_estimate(f, r, n_units=16, n_angles=32, seed=0):
    """Sampled sup of |f| on the sphere |x| = r.

    Uses the seven canonical imaginary directions plus seeded random units,
    with a uniform angle grid on each slice circle; deterministic for a
    fixed seed.
    """
    from .octonion import BASIS, random_imaginary_unit

    if not 0.0 <= r < 1.0:
        raise ValueError("sup norm estimate requires 0 <= r < 1")
    rng = np.random.default_rng(seed)
    units = list(BASIS[1:][: max(0, min(n_units, 7))])
    while len(units) < n_units:
        units.append(random_imaginary_unit(rng))
    theta = np.linspace(0.0, 2.0 * math.pi, n_angles, endpoint=False)
    alpha = r * np.cos(theta)
    beta = r * np.sin(theta)
    best = 0.0
    for unit in units:
        vals = evaluate_on_slice(f, alpha, beta, unit)
        best = max(best, float(np.sqrt((vals * vals).sum(axis=1)).max()))
    return best


def companion_point(f, x):
    """The point where the reciprocal series takes the value f(...)^{-1}.

    Uses the conjugate-transport formula built from the value of the
    conjugated series at x and the second stem component of f.  Raises when
    the data is singular (vanishing normal or a real-slice value).
    """
    fc = slice_conj(f)
    fcx = evaluate(fc, x)
    second = stem_components(f, x).second
    if fcx.norm() < 1e-8 or second.norm() < 1e-8:
        raise ValueError("identity not testable at this point")
    inner = (x * fcx) * second
    return (fcx.inverse() * inner) * second.inverse()


def companion_identity_residual(f, x, out_order=None):
    """Residual of reciprocal(f)(x) = f(companion_point(f, x))^{-1}."""
    recip = slice_reciprocal(f, out_order)
    moved = companion_point(f, x)
    fval = evaluate(f, moved)
    if fval.norm() < 1e-8:
        raise ValueError("identity not testable at this point")
    return (evaluate(recip, x) - fval.inverse()).norm()
