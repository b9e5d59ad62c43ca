"""
Finite field arithmetic, start to finish
========================================

Every computation in this package happens over a small finite field whose
elements are plain Python ints: the element a0 + a1*p + ... encodes the
polynomial a0 + a1*x + ... over GF(p).  This script builds GF(8), inspects
its multiplicative structure, and then climbs to the quadratic extension
GF(64) used by the realified constructions.
"""

from umconv import field_for_order, make_ext_field, make_field
from umconv.galois import poly_str

# GF(8) = GF(2)[x] / (x^3 + x + 1).  The modulus is chosen automatically as
# the irreducible polynomial of degree 3 with the smallest encoding.
f8 = make_field(2, 3)
print(f"GF(8) modulus: {poly_str(f8, f8.modulus)}")
print(f"primitive element theta = {f8.theta}")

# The powers of theta sweep through every nonzero element exactly once.
powers = [f8.pow(f8.theta, e) for e in range(f8.order - 1)]
print(f"theta^0 .. theta^6 = {powers}")
assert sorted(powers) == list(range(1, 8))

# Arithmetic is exact and total: inverses, negation, and zero behave the
# way the axioms demand.
a, b = 5, 7
print(f"{a} + {b} = {f8.add(a, b)}   {a} * {b} = {f8.mul(a, b)}   "
      f"1/{a} = {f8.inv(a)}")
assert f8.mul(a, f8.inv(a)) == 1
assert f8.add(a, f8.neg(a)) == 0

# field_for_order accepts the order directly and factors it for you.
f9 = field_for_order(9)
print(f"\nGF(9) modulus: {poly_str(f9, f9.modulus)}, theta = {f9.theta}")

# The quadratic extension GF(64) = GF(8)[t] / (t^2 + t + 1) encodes
# a + e*b as a + 8*b, where e is the class of t.
f64 = make_ext_field(f8)
print(f"\nGF(64) modulus: {poly_str(f64.base, f64.modulus, var='t')}")
print(f"primitive element alpha = {f64.theta}")

# beta = alpha^(q-1) generates the subgroup of order q + 1 = 9; it is the
# evaluation-point generator for the length-(q+1) block codes.
beta = f64.beta
order = next(e for e in range(1, 64) if f64.pow(beta, e) == 1)
print(f"beta = alpha^7 = {beta}, multiplicative order {order}")
assert order == 9

# The Frobenius map x -> x^q fixes the base field pointwise and sends
# beta to its inverse, which is what makes the realified parity checks
# expressible over GF(8).
print(f"frobenius(beta) = {f64.frobenius(beta)} = beta^-1 = {f64.inv(beta)}")
assert f64.frobenius(beta) == f64.inv(beta)
for x in range(8):
    assert f64.frobenius(x) == x
print("frobenius fixes GF(8) pointwise: checked")
