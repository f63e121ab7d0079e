"""Special functions behind the closed-form coverage expressions.

Four ingredients: the pathloss-geometry kernel ``psi``, the Gauss
hypergeometric factor it is built from, Tricomi's confluent hypergeometric
``U``, and the generalized exponential integral ``E_nu``.  Everything is
implemented from the defining series or integral representation so the
library carries no external special-function dependency; the test suite
checks each one against an independent quadrature oracle.

All functions are pure and safe for concurrent use.
"""

from __future__ import annotations

import math

from .errors import DomainError, NumericFailure
from .quadrature import integrate_semi_infinite

_EULER_GAMMA = 0.5772156649015328606065121
_MAX_TERMS = 500_000

# Above this argument psi switches from the hypergeometric series to the
# exact large-z expansion; the Pfaff series needs O(z) terms as its mapped
# argument z/(1+z) approaches 1, while the tail expansion converges
# geometrically in 1/z.
_PSI_TAIL_SWITCH = 50.0


def hyp2f1_family(x: float, alpha: float) -> float:
    """Gauss hypergeometric 2F1(1, 1 - 2/alpha; 2 - 2/alpha; x) for x <= 0.

    Direct Gauss series on (-1, 0], where with b = 1 - 2/alpha the terms
    collapse to b/(b+n) * x^n.  For x <= -1 the Pfaff transformation
    2F1(a,b;c;x) = (1-x)^(-a) 2F1(a, c-b; c; x/(x-1)) maps the argument into
    [1/2, 1) where the series converges.
    """
    if alpha <= 2.0:
        raise DomainError(f"alpha must exceed 2, got {alpha}")
    if x > 0.0:
        raise DomainError(f"argument must be <= 0, got {x}")
    if x == 0.0:
        return 1.0
    b = 1.0 - 2.0 / alpha
    if x > -1.0:
        # alternating series; the tail is bounded by the first omitted term
        total = 0.0
        xn = 1.0
        for n in range(_MAX_TERMS):
            term = b / (b + n) * xn
            total += term
            if abs(term) <= 1e-16 * abs(total):
                return total
            xn *= x
        raise NumericFailure(f"hypergeometric series stalled at x={x}, alpha={alpha}")
    # Pfaff branch: 2F1(1, 1; 2 - 2/alpha; w) / (1 - x) with w = x/(x-1)
    w = x / (x - 1.0)
    c = 2.0 - 2.0 / alpha
    total = 1.0
    term = 1.0
    for n in range(_MAX_TERMS):
        term *= w * (n + 1.0) / (c + n)
        total += term
        if term <= 1e-17 * total:
            return total / (1.0 - x)
    raise NumericFailure(f"Pfaff series stalled at x={x}, alpha={alpha}")


def psi(z: float, alpha: float) -> float:
    """Interference kernel psi(z) = (2z/(alpha-2)) 2F1(1, 1-2/alpha; 2-2/alpha; -z).

    Equals 2 * int_1^inf z v / (v^alpha + z) dv; psi(0) = 0 and psi is
    strictly increasing.  For z above ``_PSI_TAIL_SWITCH`` the equivalent
    exact expansion

        psi(z) = 2 K z^(2/alpha) - 2 sum_{k>=0} (-1)^k z^(-k) / (alpha k + 2),
        K = (pi/alpha) / sin(2 pi/alpha),

    is used instead; it converges geometrically in 1/z and keeps psi cheap at
    the astronomically large arguments the coverage integrals evaluate it at.
    """
    if alpha <= 2.0:
        raise DomainError(f"alpha must exceed 2, got {alpha}")
    if z < 0.0:
        raise DomainError(f"psi argument must be >= 0, got {z}")
    if z == 0.0:
        return 0.0
    if z <= _PSI_TAIL_SWITCH:
        return 2.0 * z / (alpha - 2.0) * hyp2f1_family(-z, alpha)
    big = 2.0 * (math.pi / alpha) / math.sin(2.0 * math.pi / alpha) * z ** (2.0 / alpha)
    corr = 0.0
    zk = 1.0
    for k in range(_MAX_TERMS):
        term = 2.0 * zk / (alpha * k + 2.0)
        if k % 2 == 0:
            corr += term
        else:
            corr -= term
        if term <= 1e-17 * max(corr, 1.0):
            break
        zk /= z
    return big - corr


def tricomi_u(a: float, b: float, z: float) -> float:
    """Tricomi's confluent hypergeometric function via its integral form,

        U(a, b, z) = (1/Gamma(a)) int_0^inf e^(-z t) t^(a-1) (1+t)^(b-a-1) dt,

    valid for a > 0, z > 0.  The integrand is assembled in log space so large
    ``a`` (where Gamma(a) overflows) stays representable.
    """
    if a <= 0.0:
        raise DomainError(f"a must be positive, got {a}")
    if z <= 0.0:
        raise DomainError(f"z must be positive, got {z}")
    if b < 1.0 and z < 1e-8 and (1.0 - b) * math.log(z) < -25.0:
        # z -> 0 limit Gamma(1-b)/Gamma(a+1-b); the z^(1-b) correction is
        # below double precision under the gate above
        return math.exp(math.lgamma(1.0 - b) - math.lgamma(a + 1.0 - b))
    lg_a = math.lgamma(a)
    am1 = a - 1.0
    pw = b - a - 1.0

    def integrand(t: float) -> float:
        if t <= 0.0:
            return 0.0
        expo = -z * t - lg_a + pw * math.log1p(t)
        if am1 != 0.0:
            expo += am1 * math.log(t)
        if expo < -745.0:
            return 0.0
        return math.exp(expo)

    if b >= 1.0:
        scale = max(1.0, a + 1.0) / z
    else:
        scale = max(1.0, a)
    return integrate_semi_infinite(
        integrand, 0.0, scale=scale, rel_tol=1e-11, abs_tol=0.0, max_panels=4096
    )


def exp_integral(nu: float, z: float) -> float:
    """Generalized exponential integral E_nu(z) = int_1^inf e^(-z t) t^(-nu) dt.

    Real order nu, z > 0.  Satisfies nu * E_(nu+1)(z) = e^(-z) - z * E_nu(z).
    Below z = 1e-8 the defining integral is replaced by the series expansion
    about z = 0 (evaluated at a base order near 1, then recursed upward),
    which avoids the huge-t quadrature range.
    """
    if z <= 0.0:
        raise DomainError(f"z must be positive, got {z}")
    if z < 1e-8:
        return _exp_integral_small_z(nu, z)
    scale = max(1.0, 1.0 / z)
    return integrate_semi_infinite(
        lambda t: math.exp(-z * t) * t ** (-nu) if z * t < 745.0 else 0.0,
        1.0,
        scale=scale,
        rel_tol=1e-11,
        abs_tol=0.0,
        max_panels=4096,
    )


def _exp_integral_small_z(nu: float, z: float) -> float:
    # Series about z = 0, truncated far below double precision for z < 1e-8.
    # Integer orders start from E_1; otherwise start from the base order
    # mu = nu - steps in (0.4, 1.5] so Gamma(1 - mu) stays away from poles,
    # with the Gamma term and the k=0 series term combined stably near mu = 1.
    n_int = round(nu)
    if abs(nu - n_int) < 1e-12 and n_int >= 1:
        val = -_EULER_GAMMA - math.log(z) + z - 0.25 * z * z + z ** 3 / 18.0
        mu = 1.0
        steps = n_int - 1
    else:
        steps = max(0, n_int - 1)
        mu = nu - steps
        x = 1.0 - mu  # nonzero by construction
        gx = math.gamma(x)
        head = gx * math.expm1(-x * math.log(z)) + math.expm1(math.lgamma(x + 1.0)) / x
        tail = 0.0
        zk = 1.0
        fact = 1.0
        for k in range(1, 5):
            zk *= -z
            fact *= k
            tail -= zk / (fact * (x + k))
        val = head + tail
    emz = math.exp(-z)
    for _ in range(steps):
        val = (emz - z * val) / mu
        mu += 1.0
    return val
