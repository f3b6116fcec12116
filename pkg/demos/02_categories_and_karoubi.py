#!/usr/bin/env python3
"""Presented k-linear categories, block morphisms, and idempotent splitting."""

from fractions import Fraction

from sepcat import (Field, direct_sum, hom_space_basis, morphism,
                    split_idempotent, validate_presentation)
from sepcat.standard import a2_quiver_category, point_category

# The A2 quiver category: objects 1, 2 and a single arrow a: 1 → 2.
c2 = a2_quiver_category(Field.rationals())
print("A2 presentation valid:", validate_presentation(c2).passed)

# The additive closure works with ordered formal sums and block matrices.
s = direct_sum([c2.obj("1"), c2.obj("2")])
print("Hom(1⊕2, 1⊕2) has dimension", len(hom_space_basis(c2, s, s)))

# Karoubi envelope: split the averaging idempotent e = (1/2)[[1,1],[1,1]].
c1 = point_category(Field.rationals())
pt2 = direct_sum([c1.obj("pt"), c1.obj("pt")])
h = Fraction(1, 2)
e = morphism(c1, pt2, pt2, [[(h,), (h,)], [(h,), (h,)]])
print("e is idempotent:", e @ e == e)
w = split_idempotent(pt2, e)
print("v∘u = Id_small:", w.retraction @ w.section == w.small.identity())
print("u∘v = e:", w.section @ w.retraction == e)
print("the split object is", w.small, "with End of dimension",
      len(hom_space_basis(c1, w.small, w.small)))
