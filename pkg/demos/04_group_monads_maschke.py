#!/usr/bin/env python3
"""Group monads and the Maschke dichotomy for sections of the multiplication."""

from sepcat import (Field, FiniteGroup, GroupAction, equivariant_monad,
                    monad_separability_solve, validate_monad)
from sepcat.standard import point_category

# The group monad sends X to ⊕_{h∈G} ^hX with Kronecker-delta multiplication.
for group, field_spec in [(FiniteGroup.cyclic(2), "Q"),
                          (FiniteGroup.cyclic(3), "Q"),
                          (FiniteGroup.symmetric(3), "Q"),
                          (FiniteGroup.cyclic(2), "F2"),
                          (FiniteGroup.cyclic(3), "F3")]:
    field = Field.from_spec(field_spec)
    cat = point_category(field, name=f"C1/{field_spec}")
    act = GroupAction.trivial(group, cat)
    monad = equivariant_monad(act)
    assert validate_monad(monad).passed
    result = monad_separability_solve(monad)
    verdict = "separable" if hasattr(result, "sigma") else f"NOT separable ({result!r})"
    print(f"{group.name:>5} over {field_spec:>2}: {verdict}")

# The dichotomy is exactly invertibility of |G| in the base field:
# over Q a section always exists, over F_p it exists iff p does not divide |G|.
