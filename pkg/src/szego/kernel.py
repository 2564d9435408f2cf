"""Szego kernel of an annulus.

The canonical annulus is ``rho < |z| < 1``.  Its kernel ``S(z, a)`` is
evaluated by four equivalent routes:

* :func:`kernel_series`, the bilateral series in powers of ``conj(a) z``,
* :func:`kernel_series_alternating`, the faster bilateral series with
  alternating terms ``(-1)^n rho^n / (rho^(2n) - conj(a) z)``,
* :func:`kernel_product`, the infinite product, whose only zero in the
  annulus is ``-rho / conj(a)``,
* :func:`kernel_closed_form`, q-gamma and theta functions in base ``rho^2``.

Off-center annuli ``r2 < |z - z0| < r1`` reduce to the canonical one by the
affine map ``(z - z0) / r1``.  The weighted kernel replaces
``1 + rho^(2n+1)`` by ``1 + t rho^(2n)`` and has the same three
representations.

Every evaluator accepts a scalar or an array of points ``z``.
"""
import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConvergenceRegionViolated, DomainViolation, InvalidArgument, PoleHit
from .qseries import POLE_TOL, q_gamma, theta_fn

TWO_PI = 2.0 * math.pi
# |z| slack when deciding whether a point lies on the closed annulus
_BOUNDARY_SLACK = 1e-12


class Method(enum.Enum):
    SERIES = "series4"
    ALTERNATING_SERIES = "series5"
    PRODUCT = "product"
    CLOSED_FORM = "closed"


@dataclass(frozen=True)
class TruncationSpec:
    """Series half-width ``N`` (terms ``-N..N``) and product depth ``P`` (factors ``0..P``)."""

    series_half_width: int = 100
    product_depth: int = 25

    def __post_init__(self):
        if self.series_half_width < 1:
            raise InvalidArgument("series_half_width must be >= 1")
        if self.product_depth < 0:
            raise InvalidArgument("product_depth must be >= 0")


@dataclass(frozen=True)
class AnnulusDomain:
    """Annulus ``rho < |z| < 1`` with kernel anchor ``a``."""

    rho: float
    a: complex

    def __post_init__(self):
        if not 0 < self.rho < 1:
            raise InvalidArgument(f"need 0 < rho < 1, got {self.rho}")
        if not self.rho < abs(self.a) < 1:
            raise InvalidArgument(f"anchor must satisfy rho < |a| < 1, got |a| = {abs(self.a)}")
        object.__setattr__(self, "rho", float(self.rho))
        object.__setattr__(self, "a", complex(self.a))


@dataclass(frozen=True)
class GeneralAnnulusDomain:
    """Annulus ``r2 < |z - z0| < r1`` with anchor ``a``."""

    z0: complex
    r1: float
    r2: float
    a: complex

    def __post_init__(self):
        if not 0 < self.r2 < self.r1:
            raise InvalidArgument(f"need 0 < r2 < r1, got r1={self.r1}, r2={self.r2}")
        if not self.r2 < abs(self.a - self.z0) < self.r1:
            raise InvalidArgument("anchor must lie strictly inside the annulus")

    def canonical(self):
        """Image of the domain under ``z -> (z - z0) / r1``."""
        return AnnulusDomain(rho=self.r2 / self.r1, a=(self.a - self.z0) / self.r1)


@dataclass(frozen=True)
class WeightedKernelParams:
    rho: float
    a: complex
    t: float

    def __post_init__(self):
        if not self.t > 0:
            raise InvalidArgument(f"weight t must be positive, got {self.t}")
        AnnulusDomain(self.rho, self.a)
        object.__setattr__(self, "rho", float(self.rho))
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "t", float(self.t))

    @property
    def domain(self):
        return AnnulusDomain(self.rho, self.a)


@dataclass(frozen=True)
class ClosedFormExponents:
    lam: complex
    mu: complex
    nu: complex


def closed_form_exponents(rho, t=None):
    """q-gamma arguments of the closed forms.

    ``lam`` solves ``rho^(2 lam) = -rho``; ``mu`` and ``nu`` solve
    ``rho^(2 mu) = -t`` and ``rho^(2 nu) = -rho^2 / t`` with the principal
    logarithm.  ``t`` defaults to ``rho``, where all three coincide.
    """
    log_rho = math.log(rho)
    log_t = log_rho if t is None else math.log(t)
    lam = 0.5 + 1j * math.pi / (2 * log_rho)
    mu = (log_t + 1j * math.pi) / (2 * log_rho)
    nu = 1 + (-log_t + 1j * math.pi) / (2 * log_rho)
    return ClosedFormExponents(lam=lam, mu=mu, nu=nu)


def _out(value):
    value = np.asarray(value)
    return complex(value) if value.ndim == 0 else value


def _points(z):
    return np.asarray(z, dtype=complex)


def _check_closed_annulus(rho, z):
    r = np.abs(z)
    if np.any(r < rho * (1 - _BOUNDARY_SLACK)) or np.any(r > 1 + _BOUNDARY_SLACK):
        raise DomainViolation(f"points must satisfy {rho} <= |z| <= 1")


def zero_location(dom):
    """The unique zero ``-rho / conj(a)`` of ``S(., a)`` in the annulus."""
    return complex(-(np.float64(dom.rho) / np.conj(np.complex128(dom.a))))


def kernel_series(dom, z, N=100):
    """``(1/2pi) sum_{n=-N}^{N} (conj(a) z)^n / (1 + rho^(2n+1))`` for ``rho <= |z| <= 1``."""
    z = _points(z)
    _check_closed_annulus(dom.rho, z)
    rho = dom.rho
    x = (np.conj(dom.a) * z)[..., None]
    n = np.arange(1, N + 1)
    pos = x**n / (1.0 + rho ** (2 * n + 1))
    # n = -m rewritten so no power of rho^-1 is formed
    neg = (rho**2 / x) ** n / (rho * (1.0 + rho ** (2 * n - 1)))
    total = 1.0 / (1.0 + rho) + pos.sum(axis=-1) + neg.sum(axis=-1)
    return _out(total / TWO_PI)


def kernel_series_alternating(dom, z, N=50):
    """``(1/2pi) sum_{n=-N}^{N} (-1)^n rho^n / (rho^(2n) - conj(a) z)``.

    Requires ``|conj(a) z| > rho^2``.
    """
    z = _points(z)
    rho = dom.rho
    x = np.conj(dom.a) * z
    if np.any(np.abs(x) <= rho**2):
        raise ConvergenceRegionViolated("alternating series needs |conj(a) z| > rho^2")
    x = x[..., None]
    n = np.arange(0, N + 1)
    den_pos = rho ** (2 * n) - x
    m = n[1:]
    # n = -m:  (-1)^m rho^m / (1 - x rho^(2m))
    den_neg = 1.0 - x * rho ** (2 * m)
    if np.any(np.abs(den_pos) < POLE_TOL) or np.any(np.abs(den_neg) < POLE_TOL):
        raise PoleHit("rho^(2n) - conj(a) z vanishes for a summed n")
    sign = np.where(n % 2 == 0, 1.0, -1.0)
    pos = sign * rho**n / den_pos
    neg = sign[1:] * rho**m / den_neg
    return _out((pos.sum(axis=-1) + neg.sum(axis=-1)) / TWO_PI)


def kernel_product(dom, z, P=25):
    """Truncated infinite product over factors ``n = 0..P``.

    Meaningful for every ``z`` except ``0`` and the poles
    ``rho^(-2n) / conj(a)``, ``rho^(2n+2) / conj(a)``, none of which lies in
    the closed annulus.  Returns exactly zero at :func:`zero_location`.
    """
    z = _points(z)
    if np.any(z == 0):
        raise PoleHit("the product representation has a pole at z = 0")
    rho = dom.rho
    ab = np.conj(np.complex128(dom.a))
    zz = z[..., None]
    x = ab * zz
    k = np.arange(P + 1)
    r0, r1, r2 = rho ** (2 * k), rho ** (2 * k + 1), rho ** (2 * k + 2)
    den_a = 1.0 - x * r0
    den_b = x - r2
    if np.any(np.abs(den_a) < POLE_TOL) or np.any(np.abs(den_b) < POLE_TOL):
        raise PoleHit("product denominator factor vanishes")
    # conj(a) z + rho^(2k+1) factored through z so the k = 0 zero is exact
    num = (1.0 + x * r1) * (ab * (zz + r1 / ab)) * (1.0 - r2) ** 2
    den = den_a * den_b * (1.0 + r1) ** 2
    return _out(np.prod(num / den, axis=-1) / TWO_PI)


def kernel_closed_form(dom, z):
    """Closed form via the q-gamma and modified theta functions in base ``rho^2``."""
    z = _points(z)
    if np.any(z == 0):
        raise PoleHit("the closed form has a pole at z = 0")
    rho = dom.rho
    q = rho**2
    lam = closed_form_exponents(rho).lam
    x = np.conj(dom.a) * z
    prefactor = q_gamma(lam, q) ** 2 / (TWO_PI * np.exp(2 * (1 - lam) * math.log1p(-q)))
    ratio = theta_fn(-rho * x, q) / theta_fn(x, q, guard=True)
    return _out(prefactor * ratio)


_CANONICAL = {
    Method.SERIES: lambda dom, z, tr: kernel_series(dom, z, tr.series_half_width),
    Method.ALTERNATING_SERIES: lambda dom, z, tr: kernel_series_alternating(dom, z, tr.series_half_width),
    Method.PRODUCT: lambda dom, z, tr: kernel_product(dom, z, tr.product_depth),
    Method.CLOSED_FORM: lambda dom, z, tr: kernel_closed_form(dom, z),
}


def evaluate(dom, z, method=Method.PRODUCT, trunc=None):
    """Canonical-annulus kernel by the chosen method."""
    method = Method(method)
    return _CANONICAL[method](dom, z, trunc or TruncationSpec())


def general_annulus_kernel(dom, z, method=Method.PRODUCT, trunc=None):
    """Kernel of ``r2 < |z - z0| < r1`` as ``S((z - z0)/r1, (a - z0)/r1) / r1``."""
    z = _points(z)
    value = evaluate(dom.canonical(), (z - dom.z0) / dom.r1, method, trunc)
    return _out(np.asarray(value) / dom.r1)


def general_zero_location(dom):
    return complex(dom.z0 - dom.r1 * dom.r2 / np.conj(dom.a - dom.z0))


def weighted_kernel_series(par, z, N=100):
    """``(1/2pi) sum_{n=-N}^{N} (conj(a) z)^n / (1 + t rho^(2n))``.

    Requires ``rho^2 < |conj(a) z| < 1``.
    """
    z = _points(z)
    rho, t = par.rho, par.t
    x = np.conj(par.a) * z
    ax = np.abs(x)
    if np.any(ax <= rho**2) or np.any(ax >= 1):
        raise ConvergenceRegionViolated("weighted series needs rho^2 < |conj(a) z| < 1")
    x = x[..., None]
    n = np.arange(1, N + 1)
    pos = x**n / (1.0 + t * rho ** (2 * n))
    neg = (rho**2 / x) ** n / (rho ** (2 * n) + t)
    total = 1.0 / (1.0 + t) + pos.sum(axis=-1) + neg.sum(axis=-1)
    return _out(total / TWO_PI)


def weighted_kernel_product(par, z, P=25):
    """Truncated infinite product for the weighted kernel, factors ``n = 0..P``."""
    z = _points(z)
    if np.any(z == 0):
        raise PoleHit("the product representation has a pole at z = 0")
    rho, t = par.rho, par.t
    x = (np.conj(par.a) * z)[..., None]
    k = np.arange(P + 1)
    r0, r2 = rho ** (2 * k), rho ** (2 * k + 2)
    den_a = 1.0 - x * r0
    den_b = x - r2
    if np.any(np.abs(den_a) < POLE_TOL) or np.any(np.abs(den_b) < POLE_TOL):
        raise PoleHit("product denominator factor vanishes")
    num = (1.0 + t * x * r0) * (x + r2 / t) * (1.0 - r2) ** 2
    den = den_a * den_b * (1.0 + r2 / t) * (1.0 + t * r0)
    return _out(np.prod(num / den, axis=-1) / TWO_PI)


def weighted_kernel_closed_form(par, z):
    z = _points(z)
    if np.any(z == 0):
        raise PoleHit("the closed form has a pole at z = 0")
    rho, t = par.rho, par.t
    q = rho**2
    ex = closed_form_exponents(rho, t)
    x = np.conj(par.a) * z
    prefactor = (q_gamma(ex.mu, q) * q_gamma(ex.nu, q)
                 / (TWO_PI * np.exp((2 - ex.mu - ex.nu) * math.log1p(-q))))
    ratio = theta_fn(-t * x, q) / theta_fn(x, q, guard=True)
    return _out(prefactor * ratio)


def weighted_zero_condition(par, tol=1e-10) -> Optional[complex]:
    """``-rho / conj(a)`` when ``t = rho^(+-(2m+1))``, else ``None``."""
    e = math.log(par.t) / math.log(par.rho)
    m = round(e)
    if abs(e - m) < tol and m % 2 == 1:
        return zero_location(par.domain)
    return None


def weighted_product_zeros(par, closed=True):
    """All zeros of the weighted kernel in the annulus, read off the product factors.

    The factors ``1 + t conj(a) z rho^(2n)`` and ``conj(a) z + rho^(2n+2)/t``
    vanish at ``-1/(t conj(a) rho^(2n))`` and ``-rho^(2n+2)/(t conj(a))``.
    Zeros exist for ``t`` outside the family ``rho^(+-(2m+1))`` too, whenever
    one of these points happens to land inside the annulus for the given
    anchor.  ``closed=True`` keeps points on the boundary circles.
    """
    rho, t = par.rho, par.t
    ab = np.conj(par.a)
    lo, hi = (rho * (1 - _BOUNDARY_SLACK), 1 + _BOUNDARY_SLACK) if closed else (rho, 1.0)
    inside = (lambda r: lo <= r <= hi) if closed else (lambda r: lo < r < hi)
    zeros = []
    n = 0
    while True:
        outer = -1.0 / (t * ab * rho ** (2 * n))
        inner = -(rho ** (2 * n + 2)) / (t * ab)
        for w in (outer, inner):
            if inside(abs(w)):
                zeros.append(complex(w))
        # outer moduli grow and inner moduli shrink with n
        if abs(outer) > hi and abs(inner) < lo:
            return zeros
        n += 1
