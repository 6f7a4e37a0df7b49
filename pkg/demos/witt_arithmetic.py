"""Length-2 Witt vectors over F_3: addition with carries, and the ghost map.

The ghost map sends (a0, a1) to a0^3 + 3*a1 in Z/9 and is a ring
isomorphism; the tables below let you check a few carries by eye.
"""

from torbound import FiniteField, WittRing, carry_coefficients

p = 3
ring = WittRing(FiniteField(p))

print(f"carry polynomial coefficients for p={p}: {carry_coefficients(p)}")
print("(meaning P(X,Y) = -(X^2 Y + X Y^2) here)")
print()

elems = list(ring.elements())


def fmt(x):
    return f"({x.a0.lift()},{x.a1.lift()})"


print("addition table (rows + columns):")
print("        " + "  ".join(f"{fmt(y):>6}" for y in elems))
for x in elems:
    row = "  ".join(f"{fmt(x + y):>6}" for y in elems)
    print(f"{fmt(x):>6}  {row}")
print()

print("ghost map to Z/9, in element order:")
print("  " + "  ".join(f"{fmt(x)}->{x.ghost()}" for x in elems))
print()

x, y = ring.element(1, 0), ring.element(1, 0)
s = x + y
print(f"example with a carry: {fmt(x)} + {fmt(y)} = {fmt(s)}")
print(f"  ghost check: ({x.ghost()} + {y.ghost()}) mod 9 = "
      f"{(x.ghost() + y.ghost()) % 9} = ghost{fmt(s)} = {s.ghost()}")
print()

t = ring.element(2, 1)
print(f"frobenius{fmt(t)} = {fmt(t.frobenius())}, "
      f"verschiebung{fmt(t)} = {fmt(t.verschiebung())}")
print(f"F(V(x)) = V(F(x)) = x added to itself {p} times: "
      f"{fmt(t.verschiebung().frobenius())} = {fmt(t.times(p))}")
print()

f9 = FiniteField(3, modulus=(1, 0, 1))
ring9 = WittRing(f9)
i = f9.element((0, 1))
w = ring9.element(i, f9.one)
sq = w * w
print(f"over F_9 = F_3[x]/(x^2+1): (x, 1)^2 has components "
      f"{sq.a0.coeffs} and {sq.a1.coeffs}")
