"""Torsion-point bound assembly and the supporting threshold machinery.

The headline quantity is a Bezout-style product: the degree of the image of
the ambient abelian variety under multiplication by p, times the degree of a
projectivized jet bundle attached to X. The jet-bundle degree is computed by
two fully independent routes (a combinatorial closed form and a Segre-series
route) that must agree exactly, and under two sign conventions ("paper" keeps
the literal alternating sum, "dual" flips the sign of the scaling variable);
both are always reported, never adjudicated.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .chern import (
    chern_tangent,
    cotangent_chern,
    deg_cotangent,
    frobenius_scale,
    top_integral,
)
from .combinatorics import enumerate_compositions, signed_multinomial, w_coeff, z_coeff
from .errors import InternalConsistencyError, ValidationError
from .primes import is_prime, next_prime

CONVENTIONS = ("paper", "dual")
MODES = ("paper", "dual", "both")

FLAG_PAPER_NONPOSITIVE = "paper_mode_nonpositive"
FLAG_E_BELOW_SIMPLE = "e_below_simple_threshold"
FLAG_UNIFORM_CHECKED = "uniform_specialization_checked"


def _validate_bound_shape(n, c, exponents, d):
    if not isinstance(n, int) or n < 2:
        raise ValidationError("n >= 2 violated")
    if not isinstance(c, int) or not 1 <= c <= n - 1:
        raise ValidationError("1 <= c <= n-1 violated")
    if 2 * c < n:
        raise ValidationError("2c >= n violated")
    exps = tuple(exponents)
    if len(exps) != c:
        raise ValidationError(f"exponents length {len(exps)} != c = {c}")
    if any(not isinstance(e, int) or e < 1 for e in exps):
        raise ValidationError("exponents >= 1 violated")
    if not isinstance(d, int) or d < 1:
        raise ValidationError("degL >= 1 violated")
    return exps


def _sigma(convention):
    if convention not in CONVENTIONS:
        raise ValidationError("convention must be paper|dual")
    return -1 if convention == "paper" else 1


def threshold_debarre(n, c, exponents, d):
    """Prime threshold for the torsion bound: (n-c)**2 times the cotangent degree."""
    exps = _validate_bound_shape(n, c, exponents, d)
    return (n - c) ** 2 * deg_cotangent(n, c, exps, d)


def threshold_lemma_p(n_dim, deg_omega):
    """Prime threshold for the slope argument: dim**2 times the cotangent degree."""
    if not isinstance(n_dim, int) or n_dim < 1:
        raise ValidationError("dimension >= 1 violated")
    if not isinstance(deg_omega, int) or deg_omega < 1:
        raise ValidationError("cotangent degree >= 1 violated")
    return n_dim**2 * deg_omega


def _inner_sum_w(m, c):
    # sum over composition multisets of weight m with per-size weights W_{i,c}
    total = 0
    for beta in enumerate_compositions(m):
        prod = 1
        for i, r in enumerate(beta.multiplicities, start=1):
            if r:
                prod *= w_coeff(i, c) ** r
        total += signed_multinomial(beta) * prod
    return total


def _inner_sum_z(m, c, exponents):
    total = 0
    for beta in enumerate_compositions(m):
        prod = 1
        for i, r in enumerate(beta.multiplicities, start=1):
            if r:
                prod *= z_coeff(i, c, exponents) ** r
        total += signed_multinomial(beta) * prod
    return total


def pex_closed_form_uniform(n, c, e, d, p, convention):
    """Jet-bundle degree, literal alternating-sum closed form, equal exponents."""
    exps = _validate_bound_shape(n, c, (e,) * c, d)
    if not is_prime(p):
        raise ValidationError("p must be prime")
    sigma = _sigma(convention)
    e = exps[0]
    total = 0
    for h in range(n - c + 1):
        m = n - c - h
        total += (
            math.comb(2 * n - 2 * c, h)
            * (sigma * p) ** m
            * _inner_sum_w(m, c)
            * e ** (n - h)
            * d
        )
    return total


def pex_closed_form_general(n, c, exponents, d, p, convention):
    """Jet-bundle degree, closed form for arbitrary exponent sequences."""
    exps = _validate_bound_shape(n, c, exponents, d)
    if not is_prime(p):
        raise ValidationError("p must be prime")
    sigma = _sigma(convention)
    weight = math.prod(exps) * d
    total = 0
    for h in range(n - c + 1):
        m = n - c - h
        total += (
            math.comb(2 * n - 2 * c, h)
            * (sigma * p) ** m
            * _inner_sum_z(m, c, exps)
            * weight
        )
    return total


def _pex_geometric(n, c, exponents, d, p, convention):
    # Segre-series route: invert the p-scaled cotangent Chern series (paper)
    # or its sign-flipped dual, pair against the binomial expansion of the
    # mixed polarization, integrate.
    exps = tuple(exponents)
    dim = n - c
    if convention == "paper":
        base = cotangent_chern(c, exps, dim)
    else:
        base = chern_tangent(c, exps, dim)
    segre = frobenius_scale(base, p).invert()
    ti = top_integral(n, c, exps, d)
    return sum(
        math.comb(2 * n - 2 * c, h) * segre.coefficient(dim - h) * ti
        for h in range(dim + 1)
    )


@dataclass(frozen=True)
class PexTerm:
    """One h-indexed row of the jet-bundle degree sum, both conventions."""

    h: int
    binom_coeff: int
    inner_sum: int
    term_paper: int
    term_dual: int


def pex_terms(n, c, exponents, d, p):
    """Per-h term table of the jet-bundle degree, both sign conventions.

    For constant exponent sequences the rows carry the uniform inner sums and
    the general route is asserted against them row by row; otherwise the rows
    carry the general inner sums.
    """
    exps = _validate_bound_shape(n, c, exponents, d)
    if not is_prime(p):
        raise ValidationError("p must be prime")
    uniform = len(set(exps)) == 1
    weight = math.prod(exps) * d
    rows = []
    for h in range(n - c + 1):
        m = n - c - h
        binom = math.comb(2 * n - 2 * c, h)
        general_inner = _inner_sum_z(m, c, exps)
        general_paper = binom * (-p) ** m * general_inner * weight
        general_dual = binom * p**m * general_inner * weight
        if uniform:
            e = exps[0]
            inner = _inner_sum_w(m, c)
            term_paper = binom * (-p) ** m * inner * e ** (n - h) * d
            term_dual = binom * p**m * inner * e ** (n - h) * d
            if (term_paper, term_dual) != (general_paper, general_dual):
                raise InternalConsistencyError(
                    f"uniform specialization disagrees at h={h}: "
                    f"({term_paper}, {term_dual}) vs ({general_paper}, {general_dual})"
                )
        else:
            inner = general_inner
            term_paper, term_dual = general_paper, general_dual
        rows.append(PexTerm(h, binom, inner, term_paper, term_dual))
    return tuple(rows)


def deg_pex(n, c, exponents, d, p, convention):
    """Jet-bundle degree under one sign convention, dual-path verified.

    The closed-form term sum and the Segre-series route must agree exactly;
    disagreement raises InternalConsistencyError.
    """
    sigma = _sigma(convention)
    rows = pex_terms(n, c, exponents, d, p)
    total = sum(r.term_paper if sigma < 0 else r.term_dual for r in rows)
    geometric = _pex_geometric(n, c, tuple(exponents), d, p, convention)
    if total != geometric:
        raise InternalConsistencyError(
            f"jet-bundle degree ({convention}) disagrees: "
            f"closed form {total}, geometric {geometric}"
        )
    return total


def deg_abelian_bound(n, d, p):
    """Degree bound for the image of the abelian variety under times-p: p**(2n)*d."""
    if not isinstance(n, int) or n < 1:
        raise ValidationError("n >= 1 violated")
    if not isinstance(d, int) or d < 1:
        raise ValidationError("degL >= 1 violated")
    if not is_prime(p):
        raise ValidationError("p must be prime")
    return p ** (2 * n) * d


@dataclass(frozen=True)
class BoundInput:
    """Validated input for the torsion bound pipeline.

    p is either an explicit prime strictly above the threshold or the string
    "auto" (smallest admissible prime is chosen). All comparisons are strict;
    equality with a threshold is rejected.
    """

    n: int
    c: int
    exponents: tuple
    d: int
    p: object = "auto"
    mode: str = "both"

    def __post_init__(self):
        exps = _validate_bound_shape(self.n, self.c, self.exponents, self.d)
        object.__setattr__(self, "exponents", exps)
        if self.mode not in MODES:
            raise ValidationError("mode must be paper|dual|both")
        if self.p != "auto":
            if not isinstance(self.p, int) or isinstance(self.p, bool):
                raise ValidationError("p must be an int or 'auto'")
            if not is_prime(self.p):
                raise ValidationError("p must be prime")
            t = threshold_debarre(self.n, self.c, exps, self.d)
            if not self.p > t:
                raise ValidationError(f"p > threshold violated (threshold {t})")

    @property
    def uniform(self):
        return len(set(self.exponents)) == 1


@dataclass(frozen=True)
class BoundReport:
    """Full audit trail of one torsion-bound computation."""

    n: int
    c: int
    exponents: tuple
    d: int
    p_request: object
    mode: str
    threshold: int
    prime_used: int
    deg_cotangent: int
    w_table: tuple
    terms: tuple
    deg_pex_paper: int
    deg_pex_dual: int
    deg_abelian: int
    bound_paper: int
    bound_dual: int
    flags: frozenset


def torsion_bound(inp):
    """Assemble the torsion-point bound report for a validated input."""
    if not isinstance(inp, BoundInput):
        raise ValidationError("expected a BoundInput")
    n, c, exps, d = inp.n, inp.c, inp.exponents, inp.d
    threshold = threshold_debarre(n, c, exps, d)
    if inp.p == "auto":
        prime_used = next_prime(threshold)
    else:
        prime_used = inp.p
    deg_cot = deg_cotangent(n, c, exps, d)
    terms = pex_terms(n, c, exps, d, prime_used)
    pex_paper = deg_pex(n, c, exps, d, prime_used, "paper")
    pex_dual = deg_pex(n, c, exps, d, prime_used, "dual")
    deg_ab = deg_abelian_bound(n, d, prime_used)
    bound_paper = deg_ab * pex_paper
    bound_dual = deg_ab * pex_dual
    if inp.uniform:
        w_table = tuple(w_coeff(m, c) for m in range(n - c + 1))
    else:
        w_table = tuple(z_coeff(i, c, exps) for i in range(n - c + 1))
    flags = set()
    if bound_paper <= 0:
        flags.add(FLAG_PAPER_NONPOSITIVE)
    if inp.uniform:
        flags.add(FLAG_UNIFORM_CHECKED)
        if exps[0] <= n:
            flags.add(FLAG_E_BELOW_SIMPLE)
    return BoundReport(
        n=n,
        c=c,
        exponents=exps,
        d=d,
        p_request=inp.p,
        mode=inp.mode,
        threshold=threshold,
        prime_used=prime_used,
        deg_cotangent=deg_cot,
        w_table=w_table,
        terms=terms,
        deg_pex_paper=pex_paper,
        deg_pex_dual=pex_dual,
        deg_abelian=deg_ab,
        bound_paper=bound_paper,
        bound_dual=bound_dual,
        flags=frozenset(flags),
    )


@dataclass(frozen=True)
class SlopeChainReport:
    """Exact-rational audit of the slope inequality chain."""

    dim: int
    deg_omega: int
    p: int
    threshold: int
    mu_min: Fraction
    mu_max: Fraction
    above_degree_threshold: bool
    above_semistable_bound: bool
    slope_inequality: bool

    @property
    def all_ok(self):
        return (
            self.above_degree_threshold
            and self.above_semistable_bound
            and self.slope_inequality
        )


def verify_slope_chain(n_dim, deg_omega, p):
    """Check the three inequalities the slope argument reduces to.

    Extremal slopes for a rank <= dim subsheaf of a cotangent bundle of
    degree deg_omega: minimum 1/dim, maximum deg_omega - 1. All arithmetic
    is exact rational.
    """
    threshold = threshold_lemma_p(n_dim, deg_omega)
    if not is_prime(p):
        raise ValidationError("p must be prime")
    mu_min = Fraction(1, n_dim)
    mu_max = Fraction(deg_omega - 1)
    return SlopeChainReport(
        dim=n_dim,
        deg_omega=deg_omega,
        p=p,
        threshold=threshold,
        mu_min=mu_min,
        mu_max=mu_max,
        above_degree_threshold=p > threshold,
        above_semistable_bound=p > 2 * n_dim - 1,
        slope_inequality=(p + 1 - n_dim) * mu_min > n_dim * mu_max,
    )
