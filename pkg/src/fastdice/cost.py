"""Expected-bit-cost theory for exact uniform sampling.

The expected bits u(n) used by the optimal sampler equal
``sum_k (2**k mod n) / 2**k``.  Because 2**k mod n is eventually periodic
(pre-period = the power of two in n, period = the multiplicative order of
2 modulo the odd part m), the series has an exact rational value, which
this module computes in closed form.  On top of that sit the toll
t(n) = u(n) - log2(n) in [0, 2], the per-value cost of batched draws
u(n**j)/j, the Knuth-Yao nu function for general biases, and the smooth
approximation log2(n) + constant + P(log2 n), whose Fourier fluctuation P
needs the Riemann zeta function on the line Re(s) = 1 (computed here by
Euler-Maclaurin summation; no external math dependency).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bernoulli import Rational
from .errors import Overflow, PoleAtOne

LN2 = math.log(2.0)
EULER_GAMMA = 0.5772156649015329

# Overflow guard shared with the batch sampler.
_MAX_BATCH_RANGE = 1 << 62

# The float-returning operations fall back from the exact rational path
# to a truncated tail sum when the period is longer than this; the
# fallback's error (< 2**-70) is invisible at double precision.
_PERIOD_CAP = 1 << 16


def _split_power_of_two(n: int) -> tuple[int, int]:
    """n = 2**a * m with m odd; returns (a, m)."""
    a = (n & -n).bit_length() - 1
    return a, n >> a


def _period_of_two(m: int, cap: int | None = None) -> int | None:
    """Multiplicative order of 2 modulo odd m >= 3, or None past cap."""
    x = 2 % m
    d = 1
    while x != 1:
        x = (x << 1) % m
        d += 1
        if cap is not None and d > cap:
            return None
    return d


def _weighted_bit_sum(x: int, width: int) -> int:
    """sum of i * bit_i(x) * 2**i over bit positions i, divide and conquer.

    Splitting x = hi*2**h + lo shifts hi's positions by h, adding
    h * hi * 2**h beyond hi's own weighted sum.  Linearithmic in width,
    which matters when the period (and so x) runs to millions of bits.
    """
    if x == 0:
        return 0
    if width <= 64:
        total = 0
        i = 0
        while x:
            if x & 1:
                total += i << i
            x >>= 1
            i += 1
        return total
    h = width >> 1
    lo = x & ((1 << h) - 1)
    hi = x >> h
    return _weighted_bit_sum(lo, h) + (
        (_weighted_bit_sum(hi, width - h) + h * hi) << h)


def _periodic_cost_part(m: int, d: int) -> Fraction:
    """Exact value of sum_k (2**k mod m) / 2**k for odd m with period d.

    One period of the binary expansion of 1/m is the integer
    E = (2**d - 1) // m.  Position-weighting E's bits turns the doubly
    infinite sum into (m*D + d) / (2**d - 1) with D = d*E - V, V the
    weighted bit sum.  No term-by-term accumulation over the period.
    """
    big = (1 << d) - 1
    e = big // m
    v = _weighted_bit_sum(e, d)
    return Fraction(m * (d * e - v) + d, big)


def _truncated_cost_part(m: int, terms: int) -> Fraction:
    """Partial sum of (2**k mod m) / 2**k over k < terms (tail < m*2**(1-terms))."""
    acc = 0
    r = 1 % m
    for _ in range(terms):
        acc = (acc << 1) + r
        r = (r << 1) % m
    return Fraction(acc, 1 << (terms - 1))


def exact_cost_rational(n: int) -> Fraction:
    """Expected bits of the exact uniform sampler on n values, exactly.

    Runtime and result size grow with the multiplicative order of
    2 mod the odd part of n (worst case about n); use exact_cost when a
    double is enough.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    a, m = _split_power_of_two(n)
    if m == 1:
        return Fraction(a)
    d = _period_of_two(m)
    return a + _periodic_cost_part(m, d)


def cost_partial_sum(n: int, terms: int) -> Fraction:
    """Truncated series for the expected bits, an independent cross-check.

    Direct Horner accumulation of (2**k mod n)/2**k over k < terms;
    differs from the true value by less than n * 2**(1-terms).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if terms < 1:
        raise ValueError("need at least one term")
    return _truncated_cost_part(n, terms)


def exact_cost(n: int) -> float:
    """Expected bits of the exact uniform sampler on n values, as a double.

    Prefers the exact rational path; when the period of 2 mod the odd
    part exceeds 2**16 it switches to a truncated sum whose tail is below
    2**-70, far under double resolution either way.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    a, m = _split_power_of_two(n)
    if m == 1:
        return float(a)
    d = _period_of_two(m, cap=_PERIOD_CAP)
    if d is not None:
        part = _periodic_cost_part(m, d)
    else:
        part = _truncated_cost_part(m, m.bit_length() + 72)
    return a + float(part)


def toll(n: int) -> float:
    """Bits paid beyond the entropy floor: u(n) - log2(n), in [0, 2].

    Exactly zero when n is a power of two.
    """
    return exact_cost(n) - math.log2(n)


def batch_cost(n: int, j: int) -> float:
    """Per-value expected bits when drawing j values as one draw on n**j.

    Equals u(n**j)/j, which sits within 2/j bits of log2(n).

    Raises:
        Overflow: n**j > 2**62 (the sampler could not run the batch).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if j < 1:
        raise ValueError(f"need j >= 1, got {j}")
    power = n ** j
    if power > _MAX_BATCH_RANGE:
        raise Overflow(f"{n}**{j} exceeds 2**62")
    return exact_cost(power) / j


def nu_exact(p: Rational) -> Fraction:
    """Knuth-Yao nu at a rational: sum of frac(2**k * p) / 2**k, exactly.

    nu(p) is the expected flips an optimal sampler spends on an outcome
    of probability p.  Computed from the eventual periodicity of
    2**k * num mod den, like the uniform cost.
    """
    num, den = p.num, p.den
    g = math.gcd(num, den)
    num //= g
    den //= g
    if num == 0 or den == 1:
        return Fraction(0)  # nu(0) = nu(1) = 0
    a, w = _split_power_of_two(den)
    total = Fraction(0)
    if a > 0:
        acc = 0
        r = num % den
        for _ in range(a):
            acc = (acc << 1) + r
            r = (r << 1) % den
        total += Fraction(acc, den << (a - 1))
    if w > 1:
        d = _period_of_two(w)
        acc = 0
        z = num % w
        for _ in range(d):
            acc = (acc << 1) + z
            z = (z << 1) % w
        total += Fraction(acc << 1, (w << a) * ((1 << d) - 1))
    return total


def nu(p: Rational, precision_bits: int = 64) -> float:
    """nu(p) as a double, accurate to better than 2**(1 - precision_bits).

    Rational inputs with an affordable period are computed exactly; a
    denominator whose odd part has multiplicative order beyond 2**16
    falls back to a truncated sum of precision_bits terms, whose tail is
    below 2**(1 - precision_bits) since every term is under 2**-k.
    """
    num, den = p.num, p.den
    g = math.gcd(num, den)
    num //= g
    den //= g
    if num == 0 or den == 1:
        return 0.0
    _, w = _split_power_of_two(den)
    if w == 1 or _period_of_two(w, cap=_PERIOD_CAP) is not None:
        return float(nu_exact(p))
    terms = max(precision_bits, 64)
    acc = 0
    r = num % den
    for _ in range(terms):
        acc = (acc << 1) + r
        r = (r << 1) % den
    return float(Fraction(acc, den << (terms - 1)))


# ---------------------------------------------------------------------------
# Smooth asymptotic: log2 n + constant + P(log2 n)

# Even-index Bernoulli numbers B_2 .. B_14; B_14 only feeds the
# remainder bound for the B_12 truncation.
_BERNOULLI_EVEN = (
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6),
)
_EM_CORRECTIONS = 6  # Bernoulli corrections through B_12


def _em_remainder_bound(s: complex, n_direct: int, corrections: int) -> float:
    """Standard Euler-Maclaurin remainder: the first omitted correction
    times |s + 2R + 1| / (Re(s) + 2R + 1)."""
    two_r = 2 * corrections
    b_next = abs(_BERNOULLI_EVEN[corrections])  # B_{2R+2}
    poch = 1.0
    for i in range(two_r + 1):
        poch *= abs(s + i)
    omitted = (float(b_next) / math.factorial(two_r + 2)) * poch \
        * n_direct ** (-(s.real + two_r + 1))
    return omitted * abs(s + two_r + 1) / (s.real + two_r + 1)


def zeta_complex(s: complex, target_error: float = 1e-12,
                 min_direct_terms: int = 0) -> complex:
    """Riemann zeta on Re(s) > 0 by Euler-Maclaurin summation.

    Direct terms up to an N chosen so the explicit remainder bound drops
    under target_error, then the integral term, the half term, and
    Bernoulli corrections through B_12.  min_direct_terms can force a
    larger N, e.g. to check one truncation against another.

    Raises:
        PoleAtOne: s = 1.
        ValueError: Re(s) <= 0, or target_error unreachable in doubles.
    """
    s = complex(s)
    if s == 1:
        raise PoleAtOne("zeta has its pole at s = 1")
    if s.real <= 0:
        raise ValueError(f"need Re(s) > 0, got {s}")
    for n_direct in (50, 100, 200, 400, 800, 1600, 3200, 6400):
        if n_direct >= min_direct_terms and \
                _em_remainder_bound(s, n_direct, _EM_CORRECTIONS) <= target_error:
            break
    else:
        raise ValueError(f"cannot certify error {target_error} at {s}")

    total = complex(0.0)
    for k in range(1, n_direct):
        total += cmath.exp(-s * math.log(k))
    n_pow_minus_s = cmath.exp(-s * math.log(n_direct))
    total += n_pow_minus_s * n_direct / (s - 1)   # N^(1-s)/(s-1)
    total += n_pow_minus_s / 2                    # N^(-s)/2
    poch = s  # running product s(s+1)...(s+2r-2)
    n_shift = n_pow_minus_s / n_direct            # N^(-s-2r+1), r = 1
    for r in range(1, _EM_CORRECTIONS + 1):
        coeff = float(_BERNOULLI_EVEN[r - 1]) / math.factorial(2 * r)
        total += coeff * poch * n_shift
        poch *= (s + 2 * r - 1) * (s + 2 * r)
        n_shift /= n_direct * n_direct
    return total


@dataclass(frozen=True)
class AsymptoticParams:
    """Parameters of the smooth approximation to u(n)."""

    k_terms: int = 12
    gamma: float = EULER_GAMMA

    @property
    def constant(self) -> float:
        """The n-free term 1/2 + 1/ln2 - gamma/ln2 (about 1.10995)."""
        return 0.5 + (1.0 - self.gamma) / LN2


@lru_cache(maxsize=None)
def _fourier_coefficients(k_terms: int) -> tuple[complex, ...]:
    """zeta(1 + i*tau_k) / (1 + i*tau_k) for k = 1..k_terms,
    tau_k = 2*pi*k / ln2."""
    out = []
    for k in range(1, k_terms + 1):
        s = complex(1.0, 2.0 * math.pi * k / LN2)
        out.append(zeta_complex(s, 1e-13) / s)
    return tuple(out)


def periodic_fluctuation(log2n: float, k_terms: int = 12) -> float:
    """The truncated Fourier fluctuation P evaluated at log2n.

    Convention: the +k term carries exp(-2*pi*i*k*log2n); the -k term is
    its conjugate, so each pair contributes the real combination
    2*(Re c_k * cos + Im c_k * sin) and the total is real by
    construction.  Since k is an integer, only frac(log2n) matters.
    """
    frac = log2n % 1.0
    total = 0.0
    for k, c in enumerate(_fourier_coefficients(k_terms), start=1):
        theta = 2.0 * math.pi * k * frac
        total += 2.0 * (c.real * math.cos(theta) + c.imag * math.sin(theta))
    return -total / LN2


def asymptotic_cost(n: int, params: AsymptoticParams | None = None) -> float:
    """Smooth approximation log2(n) + constant + P(log2 n).

    Good uniformly in n except at the sawtooth jumps (powers of two),
    where a truncated Fourier series necessarily lands near the jump
    midpoint instead of the exact toll 0.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if params is None:
        params = AsymptoticParams()
    log2n = math.log2(n)
    return log2n + params.constant + periodic_fluctuation(log2n, params.k_terms)


@dataclass(frozen=True)
class CostBreakdown:
    """One row of the cost table: u(n) split into floor, toll, and the
    smooth approximation when requested."""

    n: int
    exact_cost: float
    log2n: float
    toll: float
    asymptotic: float | None = None


def cost_breakdown(n: int, params: AsymptoticParams | None = None) -> CostBreakdown:
    """Assemble the cost table row for one n (asymptotic needs n >= 2)."""
    u = exact_cost(n)
    log2n = math.log2(n)
    asym = asymptotic_cost(n, params) if n >= 2 else None
    return CostBreakdown(n=n, exact_cost=u, log2n=log2n, toll=u - log2n,
                         asymptotic=asym)
