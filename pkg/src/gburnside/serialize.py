"""JSON input formats and report serialization.

Input schemas:

* groupoid: ``{"objects": n, "morphisms": [{"dom": i, "cod": j}, ...],
  "compose": [[g, f, gf], ...], "identity": [...], "inverse": [...]}``,
  or the shorthands ``{"pair": n}``, ``{"group": {"table": [[...]]}}``,
  ``{"group": {"perm_gens": [[...], ...]}}``, and the combinators
  ``{"disjoint_union": [...]}`` / ``{"product": [...]}``.
* G-set: ``{"fibers": {"0": 2, ...}, "action": {"3": [1, 0], ...}}`` with
  per-morphism image lists; identity morphisms may be omitted.
* G-monoid: a G-set body plus ``{"monoids": {"0": {"table": [[...]],
  "unit": u}, ...}}``, or the shorthand ``{"conjugation": true}``.
* crossed set: a G-set body plus ``{"labels": {"0": [...], ...}}``.
"""

from __future__ import annotations

from .crossed import CrossedGSet
from .groupoid import (
    SENTINEL,
    FiniteGroupoid,
    direct_product,
    disjoint_union,
    from_group,
    group_table_from_perm_gens,
    pair_groupoid,
    validate_groupoid,
)
from .gsets import GMonoid, GSet, Monoid, conjugation_action, trivial_gmonoid


class ParseError(ValueError):
    """Malformed input data; the message names the offending field."""


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise ParseError(message)


def parse_groupoid(obj) -> FiniteGroupoid:
    _expect(isinstance(obj, dict), "groupoid input must be a JSON object")
    if "pair" in obj:
        _expect(isinstance(obj["pair"], int), "field 'pair' must be an integer")
        return pair_groupoid(obj["pair"])
    if "group" in obj:
        spec = obj["group"]
        _expect(isinstance(spec, dict), "field 'group' must be an object")
        if "table" in spec:
            return from_group(spec["table"])
        if "perm_gens" in spec:
            return from_group(group_table_from_perm_gens(spec["perm_gens"]))
        raise ParseError("field 'group' needs 'table' or 'perm_gens'")
    if "disjoint_union" in obj:
        parts = obj["disjoint_union"]
        _expect(isinstance(parts, list) and parts, "field 'disjoint_union' must be a non-empty list")
        return disjoint_union([parse_groupoid(p) for p in parts])[0]
    if "product" in obj:
        parts = obj["product"]
        _expect(isinstance(parts, list) and parts, "field 'product' must be a non-empty list")
        out = parse_groupoid(parts[0])
        for p in parts[1:]:
            out = direct_product(out, parse_groupoid(p))
        return out
    for field in ("objects", "morphisms", "compose", "identity", "inverse"):
        _expect(field in obj, f"groupoid input is missing field '{field}'")
    _expect(isinstance(obj["objects"], int), "field 'objects' must be an integer")
    morphisms = obj["morphisms"]
    _expect(isinstance(morphisms, list), "field 'morphisms' must be a list")
    dom, cod = [], []
    for k, m in enumerate(morphisms):
        _expect(
            isinstance(m, dict) and "dom" in m and "cod" in m,
            f"morphism {k} needs 'dom' and 'cod'",
        )
        dom.append(m["dom"])
        cod.append(m["cod"])
    n_mor = len(morphisms)
    table = [[SENTINEL] * n_mor for _ in range(n_mor)]
    for entry in obj["compose"]:
        _expect(
            isinstance(entry, list) and len(entry) == 3,
            f"compose entry {entry!r} must be [g, f, gf]",
        )
        g, f, gf = entry
        _expect(
            0 <= g < n_mor and 0 <= f < n_mor and 0 <= gf < n_mor,
            f"compose entry {entry!r} references unknown morphisms",
        )
        table[g][f] = gf
    return validate_groupoid(
        FiniteGroupoid(obj["objects"], dom, cod, table, obj["identity"], obj["inverse"])
    )


def _parse_fiber_sizes(obj, g: FiniteGroupoid) -> list[int]:
    fibers = obj["fibers"]
    _expect(isinstance(fibers, dict), "field 'fibers' must be an object")
    sizes = [0] * g.n_objects
    for key, val in fibers.items():
        try:
            x = int(key)
        except ValueError:
            raise ParseError(f"fiber key {key!r} is not an object id") from None
        _expect(0 <= x < g.n_objects, f"fiber key {key!r} is not an object of the groupoid")
        _expect(isinstance(val, int) and val >= 0, f"fiber size at {key!r} must be a non-negative integer")
        sizes[x] = val
    return sizes


def _parse_action(obj, g: FiniteGroupoid, sizes: list[int]) -> list[list[int]]:
    action_spec = obj.get("action", {})
    _expect(isinstance(action_spec, dict), "field 'action' must be an object")
    action: list[list[int] | None] = [None] * g.n_morphisms
    for key, img in action_spec.items():
        try:
            m = int(key)
        except ValueError:
            raise ParseError(f"action key {key!r} is not a morphism id") from None
        _expect(0 <= m < g.n_morphisms, f"action key {key!r} is not a morphism of the groupoid")
        _expect(isinstance(img, list), f"action of morphism {m} must be an image list")
        action[m] = img
    identities = set(g.identity)
    for m in g.morphisms:
        if action[m] is None:
            _expect(
                m in identities,
                f"action of non-identity morphism {m} is missing",
            )
            action[m] = list(range(sizes[g.dom[m]]))
    return action  # type: ignore[return-value]


def parse_gset(obj, g: FiniteGroupoid) -> GSet:
    _expect(isinstance(obj, dict), "G-set input must be a JSON object")
    _expect("fibers" in obj, "G-set input is missing field 'fibers'")
    sizes = _parse_fiber_sizes(obj, g)
    action = _parse_action(obj, g, sizes)
    return GSet(g, [list(range(n)) for n in sizes], action).validate()


def parse_gmonoid(obj, g: FiniteGroupoid) -> GMonoid:
    _expect(isinstance(obj, dict), "G-monoid input must be a JSON object")
    if obj.get("conjugation"):
        return conjugation_action(g)
    if obj.get("trivial"):
        return trivial_gmonoid(g)
    _expect("monoids" in obj, "G-monoid input is missing field 'monoids'")
    monoid_spec = obj["monoids"]
    _expect(isinstance(monoid_spec, dict), "field 'monoids' must be an object")
    monoids: list[Monoid | None] = [None] * g.n_objects
    for key, val in monoid_spec.items():
        try:
            x = int(key)
        except ValueError:
            raise ParseError(f"monoid key {key!r} is not an object id") from None
        _expect(0 <= x < g.n_objects, f"monoid key {key!r} is not an object of the groupoid")
        _expect(
            isinstance(val, dict) and "table" in val and "unit" in val,
            f"monoid at {key!r} needs 'table' and 'unit'",
        )
        monoids[x] = Monoid([list(r) for r in val["table"]], val["unit"])
    for x in g.objects:
        _expect(monoids[x] is not None, f"monoid at object {x} is missing")
    sizes = [m.size for m in monoids]  # type: ignore[union-attr]
    if "fibers" in obj:
        _expect(
            _parse_fiber_sizes(obj, g) == sizes,
            "field 'fibers' disagrees with the monoid tables",
        )
    action = _parse_action(obj, g, sizes)
    return GMonoid(g, monoids, action).validate()


def parse_crossed(obj, g: FiniteGroupoid, weight: GMonoid) -> CrossedGSet:
    _expect(isinstance(obj, dict), "crossed-set input must be a JSON object")
    carrier = parse_gset(obj, g)
    _expect("labels" in obj, "crossed-set input is missing field 'labels'")
    labels_spec = obj["labels"]
    _expect(isinstance(labels_spec, dict), "field 'labels' must be an object")
    labels = [[0] * carrier.size(x) for x in g.objects]
    seen = set()
    for key, val in labels_spec.items():
        try:
            x = int(key)
        except ValueError:
            raise ParseError(f"label key {key!r} is not an object id") from None
        _expect(0 <= x < g.n_objects, f"label key {key!r} is not an object of the groupoid")
        _expect(
            isinstance(val, list) and len(val) == carrier.size(x),
            f"labels at {key!r} must list one weight element per carrier element",
        )
        labels[x] = list(val)
        seen.add(x)
    for x in g.objects:
        _expect(
            carrier.size(x) == 0 or x in seen, f"labels at object {x} are missing"
        )
    return CrossedGSet(carrier, weight, labels).validate()


# -- output ----------------------------------------------------------------------

def groupoid_to_obj(g: FiniteGroupoid) -> dict:
    compose = [
        [gg, f, g.compose_table[gg][f]]
        for gg in g.morphisms
        for f in g.morphisms
        if g.compose_table[gg][f] != SENTINEL
    ]
    return {
        "objects": g.n_objects,
        "morphisms": [{"dom": g.dom[m], "cod": g.cod[m]} for m in g.morphisms],
        "compose": compose,
        "identity": list(g.identity),
        "inverse": list(g.inverse),
    }


def ring_to_obj(ring) -> dict:
    table = [
        [
            [[k, v] for k, v in enumerate(ring.structure_constants[i][j]) if v]
            for j in range(ring.dim)
        ]
        for i in range(ring.dim)
    ]
    return {
        "dim": ring.dim,
        "basis": ring.basis_info,
        "unit": list(ring.unit_vector),
        "table": table,
    }


def hom_to_obj(hom) -> dict:
    return {
        "matrix": [list(r) for r in hom.matrix],
        "verified": dict(hom.verified),
        "source_dim": hom.source.dim,
        "target_dim": hom.target.dim,
    }
