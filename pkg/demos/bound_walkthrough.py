"""Walk through one torsion-bound computation, printing every intermediate.

The running example is a surface cut out of a 2-dimensional ambient variety
by one hypersurface of squared degree (n=2, c=1, e=2, degL=1) at p=5, the
smallest admissible prime for which the alternating-sign mode goes
negative while the dual convention stays positive.
"""

from torbound import BoundInput, torsion_bound

inp = BoundInput(n=2, c=1, exponents=(2,), d=1, p=5)
rep = torsion_bound(inp)

print("input:")
print(f"  ambient dimension n = {rep.n}, codimension c = {rep.c}")
print(f"  hypersurface exponents = {rep.exponents}, polarization degree = {rep.d}")
print(f"  threshold = {rep.threshold}, prime used = {rep.prime_used}")
print()
print(f"cotangent degree against the polarization: {rep.deg_cotangent}")
print(f"inverse-coefficient table: {rep.w_table}")
print()
print("per-h terms of the jet-bundle degree (both sign conventions):")
print("  h   binom   inner   paper      dual")
for t in rep.terms:
    print(f"  {t.h:<3} {t.binom_coeff:<7} {t.inner_sum:<7} "
          f"{t.term_paper:<10} {t.term_dual}")
print()
print(f"jet-bundle degree: paper {rep.deg_pex_paper}, dual {rep.deg_pex_dual}")
print(f"abelian image degree: {rep.prime_used}^(2*{rep.n}) * {rep.d} = {rep.deg_abelian}")
print()
print(f"bound (paper convention): {rep.bound_paper}")
print(f"bound (dual convention):  {rep.bound_dual}")
print(f"flags: {', '.join(sorted(rep.flags))}")
print()
print("the paper-mode product is nonpositive here, which is why the")
print("report always carries both conventions and flags the sign instead of")
print("silently picking one")
