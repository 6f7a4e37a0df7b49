"""Thresholds and the slope inequality chain for one worked case.

Takes n=4, c=2, exponents (3, 3), degL=2: first the admissible-prime
threshold and the bound report at the first prime past it, then the
stricter slope-argument threshold and the three inequalities the slope
chain checks, shown once failing and once passing.
"""

from torbound import (
    BoundInput,
    ValidationError,
    next_prime,
    threshold_debarre,
    threshold_lemma_p,
    torsion_bound,
    verify_slope_chain,
)

n, c, exponents, d = 4, 2, (3, 3), 2

t = threshold_debarre(n, c, exponents, d)
print(f"n={n} c={c} e={exponents} degL={d}")
print(f"admissibility threshold (n-c)^2 * degOmega: {t}")
print(f"first admissible prime: {next_prime(t)}")
print()

for p in (431, 433):
    try:
        BoundInput(n=n, c=c, exponents=exponents, d=d, p=p)
        print(f"p={p}: accepted")
    except ValidationError as exc:
        print(f"p={p}: rejected ({exc})")
print()

report = torsion_bound(BoundInput(n=n, c=c, exponents=exponents, d=d, p=433))
print(f"deg_pex (paper sign) : {report.deg_pex_paper}")
print(f"deg_pex (dual sign)  : {report.deg_pex_dual}")
print(f"ambient degree factor: {report.deg_abelian}")
print(f"bound, dual sign     : {report.bound_dual}")
print(f"flags                : {sorted(report.flags)}")
print()

deg_omega = report.deg_cotangent
lemma = threshold_lemma_p(n, deg_omega)
print(f"slope-argument threshold n^2 * degOmega = {lemma} (stricter than {t})")
for p in (433, next_prime(lemma)):
    chain = verify_slope_chain(n, deg_omega, p)
    print(f"p={p}:")
    print(f"  p > {chain.threshold}"
          f"                : {chain.above_degree_threshold}")
    print(f"  p > 2n-1 = {2 * n - 1}            : {chain.above_semistable_bound}")
    print(f"  (p+1-n)*mu_min = {(p + 1 - n) * chain.mu_min} "
          f"> n*mu_max = {n * chain.mu_max}: {chain.slope_inequality}")
    print(f"  all conditions hold : {chain.all_ok}")
