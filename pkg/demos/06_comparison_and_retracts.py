#!/usr/bin/env python3
"""The comparison functor: fully faithful on samples, every module a retract
of a free one, and essential preimages in the Karoubi closure."""

from sepcat import (Comparison, Field, FiniteGroup, GroupAction, MModule,
                    check_equiv_up_to_retracts, equivariant_category,
                    essential_preimage, free_module, induce_adjunction,
                    monad_from_adjunction, monad_separability_solve,
                    to_equivariant)
from sepcat.equivariant import character_modules
from sepcat.standard import cyclotomic_point_category

# Z/3 acting trivially on the one-object category with End = Q(ω): its three
# characters 1, ω, ω² are genuinely different module structures on the point.
cw = cyclotomic_point_category()
z3 = FiniteGroup.cyclic(3)
act = GroupAction.trivial(z3, cw)
chars = character_modules(act)
print("characters found:", [m.name for m in chars])

extras = {f"chi{i}": to_equivariant(m, act) for i, m in enumerate(chars)}
adj = induce_adjunction(equivariant_category(act, extra=extras))
monad = monad_from_adjunction(adj)
sigma = monad_separability_solve(monad)
print("monad separable:", hasattr(sigma, "sigma"))

# Sampled equivalence-up-to-retracts content: K fully faithful + retracts.
pcat = adj.G.source
objects = [pcat.obj(l) for l in pcat.objects]
modules = [MModule(monad, m.carrier, m.action, name=m.name) for m in chars]
modules.append(free_module(monad, monad.cat.obj("pt")))
rep = check_equiv_up_to_retracts(adj, sigma, objects, modules)
print("equivalence-up-to-retracts checks pass:", rep.passed)

# Essential preimages: pull the idempotent back through K and split it.
for m in modules[:3]:
    small, i_to, i_from = essential_preimage(adj, sigma, m)
    shape = "plain" if small.idem is None else "with idempotent"
    print(f"preimage of {m.name}: on {'⊕'.join(small.summands)} ({shape}); "
          f"composites are identities: "
          f"{(i_to @ i_from).mor == m.carrier.identity()}")
