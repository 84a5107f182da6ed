"""The SO(3) invariant tau'_r(L(p, q)) for odd r > 1, in closed form.

The invariant branches on c = gcd(p, r):

* c = 1: a Dedekind-sum phase times a quantum-integer ratio in Q(zeta_r).
* c > 1 and c | q* + eta for eta in {+1, -1}: a Gauss-sum expression whose
  root-of-unity phase is assembled from a bracket of fractional powers,
  realized exactly as integer powers of zeta_{p*r} and reduced to a power
  of zeta_r (the reduction must be exact; IntegralityFailure otherwise).
* c > 1 otherwise: zero.

``xi_r`` is the same invariant family evaluated at the untwisted root
e_r; composing it with the Galois substitution z -> z^((1 -+ r)/4) must
reproduce ``tau_prime`` exactly, which is the main internal consistency
check of the package.

Sign convention for the Case 2 bracket: the closed formulas circulate
with inconsistent signs on the bracket exponents.  The default reading
``BRACKET_CALIBRATED`` is the one validated against the independent
numeric oracle (see rt_oracle.bracket_sign_study); the other readings
are kept so the harness can demonstrate that they fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclotomic import Cyclotomic, gauss_sum, root_of_unity
from .errors import (EvenOrder, IntegralityFailure, NonPositiveP, NotCoprime,
                     OrderOne)
from .number_theory import (Residue, bezout_pair, dedekind_sum, jacobi_symbol,
                            mod_inverse, rational_mod)

CASE_ONE = "CaseOne"
CASE_TWO = "CaseTwo"
ZERO = "Zero"

# (sign on the 12*s(q,p) exponent, sign on the two Bezout exponents).
BRACKET_CALIBRATED = (-1, -1)
BRACKET_VARIANTS = ((-1, -1), (1, 1), (-1, 1), (1, -1))


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) with its Bezout data: p*.p + q*.q = 1, 0 < q* < p."""

    p: int
    q: int
    q_star: int
    p_star: int


@dataclass(frozen=True)
class TauPrimeResult:
    value: Cyclotomic
    r: int
    c: int
    branch: str
    eta: int | None = None

    def branch_label(self) -> str:
        if self.branch == CASE_TWO:
            return f"CaseTwo({'+1' if self.eta == 1 else '-1'})"
        return self.branch


def make_lens_space(p: int, q: int) -> LensSpace:
    """Normalize (p, q) and attach the Bezout pair (q*, p*)."""
    if p < 1:
        raise NonPositiveP(f"p must be >= 1, got {p}")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    q %= p
    if p == 1:
        return LensSpace(1, 0, 0, 1)
    q_star = mod_inverse(q, p).value
    p_star = (1 - q_star * q) // p
    return LensSpace(p, q, q_star, p_star)


def _check_order(r: int) -> None:
    if r % 2 == 0:
        raise EvenOrder(f"r must be odd, got {r}")
    if r <= 1:
        raise OrderOne(f"r must exceed 1, got {r}")


def _twelve_s_times_p(L: LensSpace) -> int:
    """The integer 12*s(q,p)*p (the denominator of 12*s divides p)."""
    m = 12 * dedekind_sum(L.q, L.p) * L.p
    if m.denominator != 1:
        raise IntegralityFailure(
            f"12*s({L.q},{L.p})*{L.p} is not an integer: {m}")
    return m.numerator


def three_s_sqrt(L: LensSpace, r: int) -> Residue:
    """The residue of the rational 3*s(q,p) modulo r.

    3*s(q,p) = m/(4p) with m integral, so the residue is m*(4p)' mod r.
    """
    if math.gcd(4 * L.p, r) != 1:
        raise NotCoprime(f"gcd(4*{L.p}, {r}) != 1")
    three_s = 3 * dedekind_sum(L.q, L.p)
    m = three_s * 4 * L.p
    if m.denominator != 1:
        raise IntegralityFailure(
            f"3*s({L.q},{L.p}) does not have denominator dividing 4p")
    res = Residue(m.numerator * mod_inverse(4 * L.p, r).value, r)
    assert res == rational_mod(three_s, r)
    return res


def _branch_eta(L: LensSpace, c: int) -> int | None:
    """eta in {+1, -1} with c | q* + eta, or None (the zero branch)."""
    plus = (L.q_star + 1) % c == 0
    minus = (L.q_star - 1) % c == 0
    assert not (plus and minus), "odd c > 1 cannot divide both q*+-1"
    if plus:
        return 1
    if minus:
        return -1
    return None


def _galois_exponent(r: int) -> int:
    """(1 -+ r)/4 for r = +-1 mod 4; an inverse of 4 modulo r."""
    return (1 - r) // 4 if r % 4 == 1 else (1 + r) // 4


def _bracket_exponent(L: LensSpace, r: int, eta: int,
                      bracket_signs: tuple[int, int],
                      bezout_shift: int) -> int:
    """Exponent E with bracket = zeta_{p*r}^E.

    The three factors contribute, as powers of zeta_{p*r}:
      e_r^(12s)   ->  12*s(q,p)*p          (exactness: denom of 12s | p)
      e_pc^x      ->  x*(r/c)
      e_rc^y      ->  y*(p/c)
    with x = -(r/c)'*(q + q* - eta*p**p) and y = 2*eta*(p/c)'
    for the Bezout pair (p/c)'*(p/c) + (r/c)'*(r/c) = 1.
    """
    p, q, q_star, p_star = L.p, L.q, L.q_star, L.p_star
    c = math.gcd(p, r)
    s12, srest = bracket_signs
    u, v = p // c, r // c
    u1, v1 = bezout_pair(u, v)
    u1 += bezout_shift * v
    v1 -= bezout_shift * u
    e_pc = v * (-v1 * (q + q_star - eta * p_star * p))
    e_rc = u * (2 * eta * u1)
    return (s12 * _twelve_s_times_p(L) + srest * (e_pc + e_rc)) % (p * r)


def case_two_bracket(L: LensSpace, r: int, eta: int,
                     bracket_signs: tuple[int, int] = BRACKET_CALIBRATED,
                     bezout_shift: int = 0) -> Cyclotomic:
    """The Case 2 bracket as an explicit element of Q(zeta_{p*r}).

    Built as a genuine product of roots of unity so its reduction to
    Q(zeta_r) can be exercised through the cyclotomic machinery.
    """
    p, q, q_star, p_star = L.p, L.q, L.q_star, L.p_star
    c = math.gcd(p, r)
    s12, srest = bracket_signs
    u, v = p // c, r // c
    u1, v1 = bezout_pair(u, v)
    u1 += bezout_shift * v
    v1 -= bezout_shift * u
    n = p * r
    b = root_of_unity(n, s12 * _twelve_s_times_p(L))
    b = b * root_of_unity(n, srest * v * (-v1 * (q + q_star - eta * p_star * p)))
    b = b * root_of_unity(n, srest * u * (2 * eta * u1))
    return b


def _bracket_power_of_zeta_r(L: LensSpace, r: int, eta: int,
                             bracket_signs: tuple[int, int],
                             bezout_shift: int) -> int:
    """k with bracket = zeta_r^k; IntegralityFailure if no such k exists."""
    e = _bracket_exponent(L, r, eta, bracket_signs, bezout_shift)
    if e % L.p != 0:
        raise IntegralityFailure(
            f"bracket zeta_{L.p * r}^{e} is not a power of zeta_{r} "
            f"(reading {bracket_signs})")
    return (e // L.p) % r


def _quantum_denominator(r: int, exponent: int) -> Cyclotomic:
    """zeta_r^-exponent - zeta_r^exponent (nonzero for odd r > 1)."""
    return root_of_unity(r, -exponent) - root_of_unity(r, exponent)


def tau_prime(L: LensSpace, r: int,
              bracket_signs: tuple[int, int] = BRACKET_CALIBRATED,
              bezout_shift: int = 0) -> TauPrimeResult:
    """tau'_r(L(p,q)) for odd r > 1, with branch metadata.

    bezout_shift replaces the canonical Bezout pair (u', v') by
    (u' + k*(r/c), v' - k*(p/c)); the value must not depend on it.
    """
    _check_order(r)
    p, q = L.p, L.q
    c = math.gcd(p, r)
    if p == 1:
        return TauPrimeResult(root_of_unity(r, 0), r, 1, CASE_ONE)
    if c == 1:
        tss = three_s_sqrt(L, r).value
        inv2 = mod_inverse(2, r).value
        inv2p = mod_inverse(2 * p, r).value
        ratio = (_quantum_denominator(r, -inv2p)
                 / _quantum_denominator(r, -inv2))
        value = jacobi_symbol(p, r) * root_of_unity(r, -tss) * ratio
        return TauPrimeResult(value, r, 1, CASE_ONE)
    eta = _branch_eta(L, c)
    if eta is None:
        return TauPrimeResult(Cyclotomic.zero(r), r, c, ZERO)
    w = _galois_exponent(r)
    k = _bracket_power_of_zeta_r(L, r, eta, bracket_signs, bezout_shift)
    sign = (-1) ** (((r - 1) // 2) * ((c - 1) // 2))
    jac = (jacobi_symbol(p // c, r // c) * jacobi_symbol(q * w, c))
    inv2 = mod_inverse(2, r).value
    value = (sign * jac * eta
             * root_of_unity(r, k * w)
             * gauss_sum(c).lift(r)
             / _quantum_denominator(r, inv2))
    return TauPrimeResult(value, r, c, CASE_TWO, eta)


def xi_r(L: LensSpace, r: int,
         bracket_signs: tuple[int, int] = BRACKET_CALIBRATED,
         bezout_shift: int = 0) -> Cyclotomic:
    """xi_r(L(p,q), e_r): the invariant at the untwisted root of unity.

    Fractional powers of e_r are realized exactly as integer powers of
    zeta_{p*r}; the scalar factor reduces to a power of zeta_r (checked
    exactly), so the returned value lives in Q(zeta_r).
    """
    _check_order(r)
    p, q, q_star = L.p, L.q, L.q_star
    c = math.gcd(p, r)
    if p == 1:
        return root_of_unity(r, 0)
    if c == 1:
        # scalar e_r^(-12s) * e_p^(r'(q+q*)) = zeta_{pr}^E1 = zeta_r^a
        r_inv = mod_inverse(r, p).value
        e1 = -_twelve_s_times_p(L) + r * r_inv * (q + q_star)
        if e1 % p != 0:
            raise IntegralityFailure(
                f"Case 1 scalar is not a power of zeta_{r}")
        a = (e1 // p) % r
        p_inv = mod_inverse(p, r).value
        ratio = (_quantum_denominator(r, -2 * p_inv)
                 / _quantum_denominator(r, -2))
        return jacobi_symbol(p, r) * root_of_unity(r, a) * ratio
    eta = _branch_eta(L, c)
    if eta is None:
        return Cyclotomic.zero(r)
    k = _bracket_power_of_zeta_r(L, r, eta, bracket_signs, bezout_shift)
    sign = (-1) ** (((r - 1) // 2) * ((c - 1) // 2))
    jac = jacobi_symbol(p // c, r // c) * jacobi_symbol(q, c)
    return (sign * jac * eta
            * root_of_unity(r, k)
            * gauss_sum(c).lift(r)
            / _quantum_denominator(r, 2))


def tau_prime_via_galois(L: LensSpace, r: int,
                         bracket_signs: tuple[int, int] = BRACKET_CALIBRATED,
                         bezout_shift: int = 0) -> Cyclotomic:
    """tau'_r via the Galois route: xi_r followed by z -> z^((1 -+ r)/4).

    Must agree exactly with tau_prime(...).value; this equality exercises
    every exponent identity behind the closed formula.
    """
    _check_order(r)
    value = xi_r(L, r, bracket_signs, bezout_shift)
    return value.galois_apply(_galois_exponent(r) % r)
