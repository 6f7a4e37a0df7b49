"""Composition multisets and the coefficient sums built on them.

A composition multiset of weight m records how many parts of each size a
partition of m has: multiplicities (r_1, r_2, ...) with sum i*r_i = m.
Summing signed multinomials over all of them, with various per-part weights,
yields the closed-form coefficients of inverted power series; the series
module's recurrence is the oracle those sums are tested against.
"""

import itertools
import math
from dataclasses import dataclass

from .errors import ValidationError

# Enumeration is exponential in the weight (partition count); anything past
# this cap is a sign the caller is misusing a desk-scale tool.
MAX_COMPOSITION_WEIGHT = 64


@dataclass(frozen=True)
class CompositionMultiset:
    """Multiplicity vector of a partition: entry i-1 counts parts of size i."""

    multiplicities: tuple

    def __post_init__(self):
        mults = tuple(int(r) for r in self.multiplicities)
        if any(r < 0 for r in mults):
            raise ValidationError("multiplicities must be >= 0")
        object.__setattr__(self, "multiplicities", mults)

    @property
    def weight(self):
        return sum(i * r for i, r in enumerate(self.multiplicities, start=1))

    def parts(self):
        """Expand back to a decreasing list of parts."""
        out = []
        for i, r in enumerate(self.multiplicities, start=1):
            out.extend([i] * r)
        out.reverse()
        return out


def _partitions_desc(m, largest):
    # parts in decreasing order, branching on the largest part first
    if m == 0:
        yield []
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions_desc(m - first, first):
            yield [first] + rest


def enumerate_compositions(m):
    """All composition multisets of weight m, canonically ordered.

    Order: by decreasing largest part (recursive descent). Each multiset is
    padded to length m. The count equals the number of partitions of m.
    """
    if m < 0:
        raise ValidationError("weight must be >= 0")
    if m > MAX_COMPOSITION_WEIGHT:
        raise ValidationError(
            f"composition weight cap exceeded ({MAX_COMPOSITION_WEIGHT})"
        )
    out = []
    for parts in _partitions_desc(m, m):
        mults = [0] * m
        for p in parts:
            mults[p - 1] += 1
        out.append(CompositionMultiset(tuple(mults)))
    return tuple(out)


def _mults(beta):
    if isinstance(beta, CompositionMultiset):
        return beta.multiplicities
    return CompositionMultiset(tuple(beta)).multiplicities


def signed_multinomial(beta):
    """(-1)**(sum r_i) times the multinomial (sum r_i; r_1, r_2, ...)."""
    mults = _mults(beta)
    total = sum(mults)
    coeff = math.factorial(total)
    for r in mults:
        coeff //= math.factorial(r)
    return (-1) ** total * coeff


def binomial_product(c, beta):
    """Product over part sizes j of binom(c, j)**r_j.

    Sizes exceeding c contribute binom(c, j) = 0, which is a value, not an
    error.
    """
    if c < 1:
        raise ValidationError("c must be >= 1")
    mults = _mults(beta)
    out = 1
    for j, r in enumerate(mults, start=1):
        if r:
            out *= math.comb(c, j) ** r
    return out


def w_coeff(m, c):
    """Coefficient m of the inverse of (1+t)**c, by composition sums.

    Definitional route: sum of signed_multinomial(beta) * binomial_product
    over all composition multisets of weight m. Closed form (test identity):
    (-1)**m * binom(c+m-1, m).
    """
    if m < 0:
        raise ValidationError("m must be >= 0")
    if c < 1:
        raise ValidationError("c must be >= 1")
    return sum(
        signed_multinomial(beta) * binomial_product(c, beta)
        for beta in enumerate_compositions(m)
    )


def sym_elementary(values, j):
    """Elementary symmetric polynomial e_j, by direct monomial enumeration.

    Returns 0 for j beyond the number of values.
    """
    vals = tuple(values)
    if j < 0:
        raise ValidationError("symmetric-function degree must be >= 0")
    if j == 0:
        return 1
    if j > len(vals):
        return 0
    return sum(math.prod(combo) for combo in itertools.combinations(vals, j))


def sym_complete(values, i):
    """Complete homogeneous symmetric polynomial h_i, by monomial enumeration."""
    vals = tuple(values)
    if i < 0:
        raise ValidationError("symmetric-function degree must be >= 0")
    if i == 0:
        return 1
    if not vals:
        return 0
    return sum(
        math.prod(combo)
        for combo in itertools.combinations_with_replacement(vals, i)
    )


def z_coeff(i, c, exponents):
    """Coefficient i of the inverse of prod_j (1 + e_j t), by composition sums.

    Per-part weights are elementary symmetric values of the exponents. The
    exponent sequence must have length c. Closed form (test identity):
    (-1)**i * sym_complete(exponents, i).
    """
    if i < 0:
        raise ValidationError("i must be >= 0")
    if c < 1:
        raise ValidationError("c must be >= 1")
    exps = tuple(exponents)
    if len(exps) != c:
        raise ValidationError(f"exponent sequence length {len(exps)} != c = {c}")
    total = 0
    for beta in enumerate_compositions(i):
        prod = 1
        for j, r in enumerate(beta.multiplicities, start=1):
            if r:
                prod *= sym_elementary(exps, j) ** r
        total += signed_multinomial(beta) * prod
    return total


def inverse_series_coeff(head, m):
    """Coefficient m of the inverse of 1 + a_1 t + ... + a_m t^m, closed form.

    head is (a_1, ..., a_m); entries beyond index m are ignored by weight.
    Must agree with TruncatedSeries.invert on the padded series; that
    agreement is a standing test, not an assumption.
    """
    if m < 0:
        raise ValidationError("m must be >= 0")
    a = tuple(head)
    if len(a) < m:
        raise ValidationError(f"head too short: need {m} coefficients, got {len(a)}")
    total = 0
    for beta in enumerate_compositions(m):
        prod = 1
        for i, r in enumerate(beta.multiplicities, start=1):
            if r:
                prod *= a[i - 1] ** r
        total += signed_multinomial(beta) * prod
    return total
