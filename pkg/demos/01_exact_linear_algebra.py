#!/usr/bin/env python3
"""Exact scalars and affine feasibility: the kernel everything else reduces to."""

from fractions import Fraction

from sepcat import Field, Matrix, div_by_int, solve_affine

# Rational arithmetic is exact: scalars are reduced fractions.
q = Field.rationals()
a = Matrix(q, [[Fraction(2), Fraction(1)], [Fraction(4), Fraction(3)]])
res = solve_affine(a, [Fraction(1), Fraction(5)])
print("particular solution:", [str(v) for v in res.particular])
print("kernel dimension:", len(res.kernel))

# Over a prime field the same code runs on canonical residues.
f5 = Field.prime(5)
b = Matrix(f5, [[f5.from_int(2), f5.from_int(1)]])
res5 = solve_affine(b, [f5.from_int(1)])
print("over F5:", [str(v) for v in res5.particular], "+ kernel of dim", len(res5.kernel))

# Infeasibility is certified by a rank jump, not a tolerance.
bad = solve_affine(Matrix(f5, [[f5.zero()]]), [f5.one()])
print("0·x = 1 over F5:", bad)

# Integer division respects the characteristic.
f3 = Field.prime(3)
print("1/2 in F3 =", div_by_int(f3.one(), 2))   # 2, since 2·2 = 4 = 1
try:
    div_by_int(Field.prime(2).one(), 2)
except Exception as exc:
    print("1/2 in F2:", type(exc).__name__, "-", exc)
