"""Basic (q-) special functions.

q-Pochhammer symbols of signed and infinite order, the bilateral series
``1psi1`` with Ramanujan's product evaluation, Cauchy's special case, the
q-gamma function and the modified Jacobi theta function
``theta(x; q) = (x; q)_inf (q/x; q)_inf``.

All functions are pure.  Scalar inputs give Python ``complex`` results;
array inputs (for the argument that is naturally pointwise: ``alpha`` in the
Pochhammer symbols, ``z``/``x`` elsewhere) broadcast and return arrays.
"""
import math
import operator

import numpy as np

from .errors import (
    ConvergenceRegionViolated,
    DivergentProduct,
    DivisionByZeroFactor,
    InvalidArgument,
    PoleHit,
)

INFINITY = math.inf

#: Infinite products stop once |alpha q^k| falls below this.
DEFAULT_CUTOFF = 1e-17
#: A denominator factor smaller than this in modulus is treated as a pole.
POLE_TOL = 1e-14


def _out(value):
    value = np.asarray(value)
    if value.ndim == 0:
        return complex(value)
    return value


def _min_depth(q, cutoff):
    aq = abs(q)
    if aq == 0:
        return 1
    return max(1, math.ceil(math.log(cutoff) / math.log(aq)))


def _qpoch_inf(alpha, q, cutoff=DEFAULT_CUTOFF, guard=False):
    """Truncated (alpha; q)_inf as an ndarray.

    With ``guard=True`` a near-zero factor raises :class:`PoleHit`; used when
    the product sits in a denominator.
    """
    q = complex(q)
    if abs(q) >= 1:
        raise DivergentProduct(f"(alpha; q)_inf requires |q| < 1, got |q| = {abs(q)}")
    alpha = np.asarray(alpha, dtype=complex)
    prod = np.ones_like(alpha)
    depth = _min_depth(q, cutoff)
    k = 0
    while True:
        term = alpha * q**k
        factor = 1.0 - term
        if guard and np.any(np.abs(factor) < POLE_TOL):
            raise PoleHit(f"infinite product factor 1 - alpha q^{k} vanishes")
        prod = prod * factor
        k += 1
        if k >= depth and np.all(np.abs(alpha * q**k) < cutoff):
            return prod


def q_pochhammer(alpha, q, n=INFINITY, cutoff=DEFAULT_CUTOFF):
    """q-shifted factorial ``(alpha; q)_n``.

    Parameters
    ----------
    alpha : complex or array_like
    q : complex
        Base; ``|q| < 1`` is required only for ``n = INFINITY``.
    n : int or INFINITY
        Order.  Negative orders use the reciprocal product
        ``1 / prod_{k=1}^{-n} (1 - alpha q^{-k})``.
    cutoff : float
        Truncation threshold of the infinite product.

    Raises
    ------
    DivisionByZeroFactor
        A negative-order denominator factor vanishes.
    DivergentProduct
        ``n = INFINITY`` with ``|q| >= 1``.
    """
    if n == INFINITY:
        return _out(_qpoch_inf(alpha, q, cutoff))
    n = operator.index(n)
    alpha = np.asarray(alpha, dtype=complex)
    q = complex(q)
    prod = np.ones_like(alpha)
    if n >= 0:
        for k in range(n):
            prod = prod * (1.0 - alpha * q**k)
        return _out(prod)
    for k in range(1, -n + 1):
        factor = 1.0 - alpha * q ** (-k)
        if np.any(np.abs(factor) < POLE_TOL):
            raise DivisionByZeroFactor(
                f"(alpha; q)_{n}: factor 1 - alpha q^-{k} vanishes")
        prod = prod * factor
    return _out(1.0 / prod)


def q_pochhammer_ratio_identity_check(alpha, q, n):
    """Both sides of ``(1 - alpha)/(1 - alpha q^n) = (alpha; q)_n / (alpha q; q)_n``.

    Returns the pair ``(lhs, rhs)``; a test utility, callers compare.
    """
    alpha = complex(alpha)
    q = complex(q)
    den = 1.0 - alpha * q**n
    if abs(den) < POLE_TOL:
        raise DivisionByZeroFactor("1 - alpha q^n vanishes")
    lhs = (1.0 - alpha) / den
    top = q_pochhammer(alpha, q, n)
    bottom = q_pochhammer(alpha * q, q, n)
    if bottom == 0:
        raise DivisionByZeroFactor("(alpha q; q)_n vanishes")
    return lhs, top / bottom


def _check_psi_region(alpha, beta, q, z):
    if abs(q) >= 1:
        raise ConvergenceRegionViolated(f"|q| = {abs(q)} >= 1")
    if alpha == 0:
        raise ConvergenceRegionViolated("alpha = 0 leaves |beta/alpha| undefined")
    inner = abs(beta / alpha)
    az = np.abs(z)
    if np.any(az <= inner) or np.any(az >= 1):
        raise ConvergenceRegionViolated(
            f"need |beta/alpha| = {inner:.6g} < |z| < 1, "
            f"got |z| in [{az.min():.6g}, {az.max():.6g}]")


def psi11(alpha, beta, q, z, N=100):
    """Symmetric partial sum of the bilateral series ``1psi1(alpha; beta; q; z)``.

    Returns ``sum_{n=-N}^{N} (alpha; q)_n / (beta; q)_n z^n``.  Each term is
    built as a running product of consecutive term ratios, which equals the
    quotient of signed-order Pochhammer symbols but does not overflow for
    large ``|n|``.

    Raises
    ------
    ConvergenceRegionViolated
        Unless ``|q| < 1`` and ``|beta/alpha| < |z| < 1``.
    """
    alpha, beta, q = complex(alpha), complex(beta), complex(q)
    z = np.asarray(z, dtype=complex)
    _check_psi_region(alpha, beta, q, z)
    if N < 0:
        raise InvalidArgument("N must be nonnegative")

    ks = np.arange(N)
    qk = q**ks
    up_den = 1.0 - beta * qk
    if np.any(np.abs(up_den) < POLE_TOL):
        raise DivisionByZeroFactor("a factor 1 - beta q^k vanishes")
    up_ratio = (1.0 - alpha * qk) / up_den
    # (alpha;q)_{-m}/(beta;q)_{-m} steps by (q^m - beta)/(q^m - alpha), m >= 1
    qm = q ** (ks + 1)
    down_den = qm - alpha
    if np.any(np.abs(down_den) < POLE_TOL * np.abs(qm)):
        raise DivisionByZeroFactor("a factor 1 - alpha q^-m vanishes")
    down_ratio = (qm - beta) / down_den

    zz = z[..., None]
    pos = np.cumprod(up_ratio * zz, axis=-1)
    neg = np.cumprod(down_ratio / zz, axis=-1)
    total = 1.0 + pos.sum(axis=-1) + neg.sum(axis=-1)
    return _out(total)


def ramanujan_sum(alpha, beta, q, z):
    """Ramanujan's product evaluation of ``1psi1(alpha; beta; q; z)``.

    ``(alpha z)_inf (q/(alpha z))_inf (beta/alpha)_inf (q)_inf`` over
    ``(z)_inf (beta/(alpha z))_inf (q/alpha)_inf (beta)_inf``, all in base q.

    Raises
    ------
    ConvergenceRegionViolated
        Outside ``|beta/alpha| < |z| < 1``.
    PoleHit
        A denominator product vanishes.
    """
    alpha, beta, q = complex(alpha), complex(beta), complex(q)
    z = np.asarray(z, dtype=complex)
    _check_psi_region(alpha, beta, q, z)
    num = (_qpoch_inf(alpha * z, q) * _qpoch_inf(q / (alpha * z), q)
           * _qpoch_inf(beta / alpha, q) * _qpoch_inf(q, q))
    den = (_qpoch_inf(z, q, guard=True) * _qpoch_inf(beta / (alpha * z), q, guard=True)
           * _qpoch_inf(q / alpha, q, guard=True) * _qpoch_inf(beta, q, guard=True))
    return _out(num / den)


def cauchy_sum(alpha, q, z):
    """Closed form of ``sum_n z^n / (1 - alpha q^n)`` (Cauchy's formula).

    Symmetric in ``alpha`` and ``z``.  Requires ``|q| < |z| < 1``.
    """
    alpha, q = complex(alpha), complex(q)
    z = np.asarray(z, dtype=complex)
    if abs(q) >= 1:
        raise ConvergenceRegionViolated(f"|q| = {abs(q)} >= 1")
    az = np.abs(z)
    if np.any(az <= abs(q)) or np.any(az >= 1):
        raise ConvergenceRegionViolated("need |q| < |z| < 1")
    if alpha == 0:
        raise PoleHit("alpha = 0 puts (q/alpha; q)_inf at infinity")
    qq = _qpoch_inf(q, q)
    num = _qpoch_inf(alpha * z, q) * _qpoch_inf(q / (alpha * z), q) * qq**2
    den = (_qpoch_inf(z, q, guard=True) * _qpoch_inf(q / z, q, guard=True)
           * _qpoch_inf(alpha, q, guard=True) * _qpoch_inf(q / alpha, q, guard=True))
    return _out(num / den)


def _check_real_base(q):
    q = float(q)
    if not 0 < q < 1:
        raise InvalidArgument(f"base must satisfy 0 < q < 1, got {q}")
    return q


def q_gamma(x, q):
    """q-gamma function ``(q; q)_inf / (q^x; q)_inf * (1 - q)^(1 - x)``.

    Complex powers use the real logarithm of the positive bases ``q`` and
    ``1 - q``.
    """
    q = _check_real_base(q)
    x = np.asarray(x, dtype=complex)
    qx = np.exp(x * math.log(q))
    try:
        den = _qpoch_inf(qx, q, guard=True)
    except PoleHit as exc:
        raise PoleHit(f"q_gamma pole: q^x hits q^-k for x = {x}") from exc
    out = complex(_qpoch_inf(q, q)) / den * np.exp((1.0 - x) * math.log1p(-q))
    return _out(out)


def theta_fn(x, q, guard=False):
    """Modified Jacobi theta function ``(x; q)_inf (q/x; q)_inf``.

    ``guard=True`` raises :class:`PoleHit` instead of returning a (near) zero,
    for callers that divide by theta.
    """
    q = _check_real_base(q)
    x = np.asarray(x, dtype=complex)
    if np.any(x == 0):
        raise InvalidArgument("theta_fn is undefined at x = 0")
    return _out(_qpoch_inf(x, q, guard=guard) * _qpoch_inf(q / x, q, guard=guard))
