"""Workspace files: a single self-describing JSON document declaring fields,
categories, groups, actions, equivariant objects, functors, adjunctions,
monads, modules, complexes and check suites.

Matrices are nested arrays of scalar strings; all cross-references are by
name and must resolve; duplicate names are rejected.
"""

from __future__ import annotations

import json

from .category import CatObject, LinearCategory, Morphism
from .complexes import BoundedComplex, ModuleComplex
from .equivariant import (EquivariantObject, FiniteGroup, GroupAction,
                          equivariant_category, equivariant_monad,
                          induce_adjunction)
from .errors import WorkspaceError
from .functors import Adjunction, Functor, NatTrans, compose_functors
from .modules import MModule, free_module
from .monads import Monad, monad_from_adjunction
from .reports import ValidationReport
from .scalars import Field

SCHEMA = "sepcat-workspace/1"


def _no_duplicates(pairs):
    seen = set()
    out = {}
    for k, v in pairs:
        if k in seen:
            raise WorkspaceError(f"duplicate name {k!r}")
        seen.add(k)
        out[k] = v
    return out


# ------------------------------------------------------------- serialization

def obj_to_json(o: CatObject) -> dict:
    idem = None
    if o.idem is not None:
        field = o.cat.field
        idem = [[[field.fmt(s) for s in vec] for vec in row] for row in o.idem]
    return {"summands": list(o.summands), "idempotent": idem}


def parse_obj(cat: LinearCategory, data) -> CatObject:
    if isinstance(data, list):
        return CatObject(cat, data)
    if not isinstance(data, dict) or "summands" not in data:
        raise WorkspaceError(f"bad object reference {data!r}")
    summands = data["summands"]
    idem = data.get("idempotent")
    if idem is None:
        return CatObject(cat, summands)
    blocks = [[tuple(cat.field.parse(s) for s in vec) for vec in row] for row in idem]
    return CatObject(cat, summands, blocks)


def mor_to_json(m: Morphism) -> dict:
    field = m.cat.field
    return {
        "dom": obj_to_json(m.dom),
        "cod": obj_to_json(m.cod),
        "blocks": [[[field.fmt(s) for s in vec] for vec in row] for row in m.blocks],
    }


def parse_mor(cat: LinearCategory, data, dom: CatObject | None = None,
              cod: CatObject | None = None) -> Morphism:
    if isinstance(data, list):
        blocks_json = data
    elif isinstance(data, dict) and "blocks" in data:
        blocks_json = data["blocks"]
        if dom is None and "dom" in data:
            dom = parse_obj(cat, data["dom"])
        if cod is None and "cod" in data:
            cod = parse_obj(cat, data["cod"])
    else:
        raise WorkspaceError(f"bad morphism {data!r}")
    if dom is None or cod is None:
        raise WorkspaceError("morphism needs explicit dom/cod")
    blocks = [[tuple(cat.field.parse(s) for s in vec) for vec in row]
              for row in blocks_json]
    try:
        return Morphism(cat, dom, cod, blocks)
    except ValueError as exc:
        raise WorkspaceError(f"morphism shape error: {exc}")


# ------------------------------------------------------------------ parsing

class Workspace:
    """A fully resolved, validated declaration graph."""

    def __init__(self, path: str):
        self.path = path
        self.fields: dict[str, Field] = {}
        self.categories: dict[str, LinearCategory] = {}
        self.groups: dict[str, FiniteGroup] = {}
        self.actions: dict[str, GroupAction] = {}
        self.equivariant_objects: dict[str, EquivariantObject] = {}
        self.eqobj_action: dict[str, str] = {}
        self.functors: dict[str, Functor] = {}
        self.nat_transformations: dict[str, NatTrans] = {}
        self.adjunctions: dict[str, Adjunction] = {}
        self.adjunction_meta: dict[str, dict] = {}
        self.monads: dict[str, Monad] = {}
        self.monad_meta: dict[str, dict] = {}
        self.modules: dict[str, MModule] = {}
        self.module_monad_name: dict[str, str] = {}
        self.complexes: dict[str, object] = {}
        self.complex_meta: dict[str, dict] = {}
        self.check_suites: dict[str, list] = {}
        self.order: dict[str, list[str]] = {}
        self._eqcats: dict = {}

    def _ref(self, table: dict, name, kind: str):
        if name not in table:
            raise WorkspaceError(f"unresolved reference to {kind} {name!r}")
        return table[name]

    def field(self, name):
        return self._ref(self.fields, name, "field")

    def category(self, name):
        return self._ref(self.categories, name, "category")

    def group(self, name):
        return self._ref(self.groups, name, "group")

    def action(self, name):
        return self._ref(self.actions, name, "action")

    def adjunction(self, name):
        return self._ref(self.adjunctions, name, "adjunction")

    def monad(self, name):
        return self._ref(self.monads, name, "monad")

    def eqcat_for_action(self, name):
        """The equivariant presentation for an action, with declared extras."""
        if name not in self._eqcats:
            act = self.action(name)
            extras = {label: z for label, z in self.equivariant_objects.items()
                      if self.eqobj_action[label] == name}
            self._eqcats[name] = equivariant_category(act, extra=extras)
        return self._eqcats[name]

    def modules_for_monad_name(self, monad_name) -> dict:
        return {n: m for n, m in self.modules.items()
                if self.module_monad_name[n] == monad_name}

    def monad_names_for_action(self, action_name) -> list[str]:
        out = []
        for n, meta in self.monad_meta.items():
            if meta.get("action") == action_name:
                out.append(n)
        return out


def _parse_category(name, spec, ws) -> LinearCategory:
    field = ws.field(spec["field"])
    objects = spec["objects"]
    label_of = {}
    hom_dims = {}
    pair_of_label = {}
    labels = {}
    for hom in spec.get("homs", []):
        x, y = hom["from"], hom["to"]
        basis = hom["basis"]
        hom_dims[(x, y)] = len(basis)
        for i, lab in enumerate(basis):
            if lab in pair_of_label:
                raise WorkspaceError(f"category {name}: duplicate basis label {lab!r}")
            pair_of_label[lab] = (x, y, i)
            labels[(x, y, i)] = lab

    def combo(pair, data):
        x, y = pair
        d = hom_dims.get((x, y), 0)
        vec = [field.zero()] * d
        for lab, coeff in data.items():
            if lab not in pair_of_label:
                raise WorkspaceError(f"category {name}: unknown basis label {lab!r}")
            lx, ly, i = pair_of_label[lab]
            if (lx, ly) != (x, y):
                raise WorkspaceError(
                    f"category {name}: label {lab!r} does not live in Hom({x}, {y})")
            vec[i] = field.parse(coeff)
        return tuple(vec)

    composition = {}
    for entry in spec.get("compositions", []):
        g, f = entry["g"], entry["f"]
        if g not in pair_of_label or f not in pair_of_label:
            raise WorkspaceError(f"category {name}: unknown basis label in composition")
        fx, fy, fi = pair_of_label[f]
        gy, gz, gi = pair_of_label[g]
        if fy != gy:
            raise WorkspaceError(f"category {name}: {g}∘{f} is not composable")
        key = (fx, fy, gz)
        if key not in composition:
            dyz = hom_dims.get((fy, gz), 0)
            dxy = hom_dims.get((fx, fy), 0)
            dxz = hom_dims.get((fx, gz), 0)
            composition[key] = [[tuple([field.zero()] * dxz) for _ in range(dxy)]
                                for _ in range(dyz)]
        composition[key][gi][fi] = combo((fx, gz), entry["is"])
    identities = {}
    for x, data in spec.get("identities", {}).items():
        identities[x] = combo((x, x), data)
    try:
        return LinearCategory(field, objects, hom_dims, composition, identities,
                              basis_labels=labels, name=name)
    except ValueError as exc:
        raise WorkspaceError(f"category {name}: {exc}")


def _parse_action(name, spec, ws) -> GroupAction:
    group = ws.group(spec["group"])
    cat = ws.category(spec["category"])
    kind = spec.get("kind", "trivial")
    if kind == "trivial":
        return GroupAction.trivial(group, cat, name=name)
    if kind == "permutation":
        perms = {}
        for g in group.elements:
            p = spec.get("objects", {}).get(g)
            if p is None:
                p = {x: x for x in cat.objects}
            perms[g] = p
        return GroupAction.from_permutation(group, cat, perms, name=name)
    if kind == "explicit":
        functors = {}
        for g in group.elements:
            gspec = spec["functors"][g]
            functors[g] = _parse_functor_body(f"{name}[{g}]", gspec, cat, cat, ws)
        return GroupAction(group, cat, functors, name=name)
    raise WorkspaceError(f"action {name}: unknown kind {kind!r}")


def _parse_functor_body(name, spec, source, target, ws) -> Functor:
    object_map = {x: parse_obj(target, ref) for x, ref in spec["objects"].items()}
    hom_map = {}
    for x in source.objects:
        for y in source.objects:
            d = source.hom_dim(x, y)
            if not d:
                continue
            mors = []
            for i in range(d):
                lab = source.basis_label(x, y, i)
                mdata = spec["homs"].get(lab)
                if mdata is None:
                    raise WorkspaceError(f"functor {name}: missing image of {lab!r}")
                mors.append(parse_mor(target, mdata,
                                      dom=object_map[x], cod=object_map[y]))
            hom_map[(x, y)] = tuple(mors)
    return Functor(source, target, object_map, hom_map, name=name)


def _parse_functor(name, spec, ws) -> Functor:
    kind = spec.get("kind", "explicit")
    if kind == "identity":
        return Functor.identity(ws.category(spec["category"]), name=name)
    if kind == "action":
        act = ws.action(spec["action"])
        return act.functors[spec["element"]]
    if kind == "forgetful":
        eqc = ws.eqcat_for_action(spec["action"])
        adj = induce_adjunction(eqc)
        return adj.G
    if kind == "explicit":
        source = ws.category(spec["source"])
        target = ws.category(spec["target"])
        return _parse_functor_body(name, spec, source, target, ws)
    raise WorkspaceError(f"functor {name}: unknown kind {kind!r}")


def _identity_adjunction(cat, name="") -> Adjunction:
    idf = Functor.identity(cat)
    ident = {x: cat.obj(x).identity() for x in cat.objects}
    return Adjunction(idf, idf,
                      NatTrans(idf, compose_functors(idf, idf), dict(ident), name="η"),
                      NatTrans(compose_functors(idf, idf), idf, dict(ident), name="ε"),
                      name=name)


def parse_workspace(path: str, validate: bool = True) -> Workspace:
    """Parse and resolve a workspace file; optionally validate every declaration."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh, object_pairs_hook=_no_duplicates)
    except OSError as exc:
        raise WorkspaceError(f"cannot read workspace: {exc}")
    except json.JSONDecodeError as exc:
        raise WorkspaceError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(raw, dict) or raw.get("schema") != SCHEMA:
        raise WorkspaceError(f"expected a workspace document with schema {SCHEMA!r}")

    ws = Workspace(path)
    ws.order = {section: list(raw.get(section, {})) for section in (
        "fields", "categories", "groups", "actions", "equivariant_objects",
        "functors", "nat_transformations", "adjunctions", "monads", "modules",
        "complexes", "check_suites")}

    for name, spec in raw.get("fields", {}).items():
        try:
            ws.fields[name] = Field.from_spec(spec)
        except ValueError as exc:
            raise WorkspaceError(f"field {name}: {exc}")

    for name, spec in raw.get("categories", {}).items():
        ws.categories[name] = _parse_category(name, spec, ws)

    for name, spec in raw.get("groups", {}).items():
        elements = spec["elements"]
        table = {}
        rows = spec["table"]
        if len(rows) != len(elements) or any(len(r) != len(elements) for r in rows):
            raise WorkspaceError(f"group {name}: table must be |G|×|G|")
        for i, g in enumerate(elements):
            for j, h in enumerate(elements):
                table[(g, h)] = rows[i][j]
        try:
            ws.groups[name] = FiniteGroup(elements, table, unit=spec.get("unit"),
                                          name=name)
        except ValueError as exc:
            raise WorkspaceError(f"group {name}: {exc}")

    for name, spec in raw.get("actions", {}).items():
        ws.actions[name] = _parse_action(name, spec, ws)

    for name, spec in raw.get("equivariant_objects", {}).items():
        act = ws.action(spec["action"])
        carrier = parse_obj(act.base, spec["carrier"])
        alpha = {}
        for g in act.group.elements:
            mdata = spec["alpha"].get(g)
            if mdata is None:
                raise WorkspaceError(f"equivariant object {name}: missing α_{g}")
            cod = act.functors[g].on_object(carrier)
            alpha[g] = parse_mor(act.base, mdata, dom=carrier, cod=cod)
        ws.equivariant_objects[name] = EquivariantObject(act, carrier, alpha, name=name)
        ws.eqobj_action[name] = spec["action"]

    for name, spec in raw.get("functors", {}).items():
        ws.functors[name] = _parse_functor(name, spec, ws)

    for name, spec in raw.get("nat_transformations", {}).items():
        src = ws._ref(ws.functors, spec["source"], "functor")
        dst = ws._ref(ws.functors, spec["target"], "functor")
        if src.source is not dst.source or src.target is not dst.target:
            raise WorkspaceError(f"natural transformation {name}: functors are not parallel")
        comps = {}
        for x in src.source.objects:
            mdata = spec["components"].get(x)
            if mdata is None:
                raise WorkspaceError(f"natural transformation {name}: missing component at {x}")
            comps[x] = parse_mor(src.target, mdata,
                                 dom=src.object_map[x], cod=dst.object_map[x])
        ws.nat_transformations[name] = NatTrans(src, dst, comps, name=name)

    for name, spec in raw.get("adjunctions", {}).items():
        kind = spec.get("kind", "induced")
        if kind == "identity":
            ws.adjunctions[name] = _identity_adjunction(ws.category(spec["category"]),
                                                        name=name)
            ws.adjunction_meta[name] = {"kind": kind, "category": spec["category"]}
        elif kind == "induced":
            eqc = ws.eqcat_for_action(spec["action"])
            ws.adjunctions[name] = induce_adjunction(eqc)
            ws.adjunction_meta[name] = {"kind": kind, "action": spec["action"]}
        else:
            raise WorkspaceError(f"adjunction {name}: unknown kind {kind!r}")

    for name, spec in raw.get("monads", {}).items():
        kind = spec.get("kind", "group")
        if kind == "identity":
            ws.monads[name] = Monad.identity_monad(ws.category(spec["category"]))
            ws.monad_meta[name] = {"kind": kind, "category": spec["category"]}
        elif kind == "group":
            ws.monads[name] = equivariant_monad(ws.action(spec["action"]), name=name)
            ws.monad_meta[name] = {"kind": kind, "action": spec["action"]}
        elif kind == "from_adjunction":
            ws.monads[name] = monad_from_adjunction(ws.adjunction(spec["adjunction"]),
                                                    name=name)
            ws.monad_meta[name] = {"kind": kind, "adjunction": spec["adjunction"]}
        else:
            raise WorkspaceError(f"monad {name}: unknown kind {kind!r}")

    for name, spec in raw.get("modules", {}).items():
        monad = ws.monad(spec["monad"])
        cat = monad.cat
        kind = spec.get("kind", "explicit")
        if kind == "free":
            ws.modules[name] = free_module(monad, parse_obj(cat, spec["on"]), name=name)
        elif kind == "explicit":
            carrier = parse_obj(cat, spec["carrier"])
            action = parse_mor(cat, spec["action"],
                               dom=monad.functor.on_object(carrier), cod=carrier)
            ws.modules[name] = MModule(monad, carrier, action, name=name)
        else:
            raise WorkspaceError(f"module {name}: unknown kind {kind!r}")
        ws.module_monad_name[name] = spec["monad"]

    for name, spec in raw.get("complexes", {}).items():
        if "monad" in spec:
            monad = ws.monad(spec["monad"])
            mods = {}
            for deg, ref in spec.get("modules", {}).items():
                mods[int(deg)] = ws._ref(ws.modules, ref, "module")
            diffs = {}
            for deg, mdata in spec.get("differentials", {}).items():
                n = int(deg)
                if n not in mods or (n + 1) not in mods:
                    raise WorkspaceError(f"complex {name}: differential {n} out of support")
                diffs[n] = parse_mor(monad.cat, mdata,
                                     dom=mods[n].carrier, cod=mods[n + 1].carrier)
            ws.complexes[name] = ModuleComplex(monad, mods, diffs, name=name)
            ws.complex_meta[name] = {"monad": spec["monad"]}
        else:
            cat = ws.category(spec["category"])
            terms = {int(d): parse_obj(cat, ref)
                     for d, ref in spec.get("terms", {}).items()}
            diffs = {}
            for deg, mdata in spec.get("differentials", {}).items():
                n = int(deg)
                dom = terms.get(n, cat.zero_object())
                cod = terms.get(n + 1, cat.zero_object())
                diffs[n] = parse_mor(cat, mdata, dom=dom, cod=cod)
            ws.complexes[name] = BoundedComplex(cat, terms, diffs, name=name)
            ws.complex_meta[name] = {"category": spec["category"]}

    for name, spec in raw.get("check_suites", {}).items():
        if not isinstance(spec, list):
            raise WorkspaceError(f"check suite {name}: expected a list of entries")
        ws.check_suites[name] = spec

    if validate:
        rep = validate_workspace(ws)
        if not rep.passed:
            lines = "; ".join(f"{n}" for n, _ in rep.failures())
            raise WorkspaceError(f"workspace validation failed: {lines}")
    return ws


def validate_workspace(ws: Workspace) -> ValidationReport:
    """Run every declaration's law suite; failures are report content."""
    from .category import validate_presentation
    from .complexes import validate_complex
    from .equivariant import validate_action
    from .functors import validate_adjunction, validate_functor
    from .modules import validate_module
    from .monads import validate_monad

    rep = ValidationReport(f"workspace {ws.path}")
    for name in ws.order.get("categories", []):
        sub = validate_presentation(ws.categories[name])
        rep.record(f"category {name}", sub.passed,
                   "; ".join(n for n, _ in sub.failures()))
    for name in ws.order.get("groups", []):
        sub = ws.groups[name].validate()
        rep.record(f"group {name}", sub.passed, "; ".join(n for n, _ in sub.failures()))
    for name in ws.order.get("actions", []):
        sub = validate_action(ws.actions[name])
        rep.record(f"action {name}", sub.passed, "; ".join(n for n, _ in sub.failures()))
    for name in ws.order.get("equivariant_objects", []):
        sub = ws.equivariant_objects[name].validate()
        rep.record(f"equivariant object {name}", sub.passed,
                   "; ".join(n for n, _ in sub.failures()))
    for name in ws.order.get("functors", []):
        sub = validate_functor(ws.functors[name])
        rep.record(f"functor {name}", sub.passed, "; ".join(n for n, _ in sub.failures()))
    for name in ws.order.get("nat_transformations", []):
        from .functors import validate_nat
        sub = validate_nat(ws.nat_transformations[name])
        rep.record(f"natural transformation {name}", sub.passed,
                   "; ".join(n for n, _ in sub.failures()))
    for name in ws.order.get("adjunctions", []):
        sub = validate_adjunction(ws.adjunctions[name])
        rep.record(f"adjunction {name}", sub.passed,
                   "; ".join(n for n, _ in sub.failures()))
    for name in ws.order.get("monads", []):
        sub = validate_monad(ws.monads[name])
        rep.record(f"monad {name}", sub.passed, "; ".join(n for n, _ in sub.failures()))
    for name in ws.order.get("modules", []):
        sub = validate_module(ws.modules[name])
        rep.record(f"module {name}", sub.passed, "; ".join(n for n, _ in sub.failures()))
    for name in ws.order.get("complexes", []):
        c = ws.complexes[name]
        sub = c.validate() if isinstance(c, ModuleComplex) else validate_complex(c)
        rep.record(f"complex {name}", sub.passed, "; ".join(n for n, _ in sub.failures()))
    return rep


# ------------------------------------------------------------------ witnesses

def witness_to_json(name: str, target: str, witness) -> dict:
    if target == "functor":
        maps = {}
        for (x, y), mat in sorted(witness.maps.items()):
            maps[f"{x}|{y}"] = mat.to_strings()
        return {"schema": "sepcat-witness/1", "kind": "functor-separability",
                "workspace_ref": name, "target": target, "maps": maps}
    if target == "monad":
        comps = {x: mor_to_json(m) for x, m in sorted(witness.sigma.components.items())}
        return {"schema": "sepcat-witness/1", "kind": "monad-section",
                "workspace_ref": name, "target": target, "components": comps}
    raise ValueError(f"unknown witness target {target!r}")


def load_witness(path: str, ws: Workspace):
    """Re-ingest a witness file against its workspace and re-verify its laws."""
    from .functors import SepWitness
    from .linalg import Matrix
    from .monads import MonadSepWitness

    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("schema") != "sepcat-witness/1":
        raise WorkspaceError("not a witness file")
    name = data["workspace_ref"]
    if data["target"] == "functor":
        functor = ws._ref(ws.functors, name, "functor")
        maps = {}
        for key, rows in data["maps"].items():
            x, y = key.split("|", 1)
            d = functor.source.hom_dim(x, y)
            from .category import hom_coord_dim
            amb = hom_coord_dim(functor.target, functor.object_map[x],
                                functor.object_map[y])
            maps[(x, y)] = Matrix.parse(functor.source.field, rows, cols=amb)
        w = SepWitness(functor, maps)
        rep = w.verify()
        return w, rep
    if data["target"] == "monad":
        monad = ws.monad(name)
        comps = {}
        for x, mdata in data["components"].items():
            comps[x] = parse_mor(monad.cat, mdata,
                                 dom=monad.functor.object_map[x],
                                 cod=monad.squared().object_map[x])
        w = MonadSepWitness(monad, NatTrans(monad.functor, monad.squared(), comps,
                                            name="σ"))
        rep = w.verify()
        return w, rep
    raise WorkspaceError(f"unknown witness target {data['target']!r}")
