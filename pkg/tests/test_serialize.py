"""JSON input parsing: shorthands, the full groupoid form, functor data,
and error reporting with field context."""

from __future__ import annotations

import pytest

import gburnside as gb
from gburnside.errors import MissingInverse, NotAGroup, NotNatural
from gburnside.serialize import (
    ParseError,
    groupoid_to_obj,
    parse_crossed,
    parse_gmonoid,
    parse_groupoid,
    parse_gset,
)

from conftest import cyclic_table, s3_table


class TestParseGroupoid:
    def test_pair_shorthand(self):
        g = parse_groupoid({"pair": 3})
        assert (g.n_objects, g.n_morphisms) == (3, 9)

    def test_group_table(self):
        g = parse_groupoid({"group": {"table": cyclic_table(2)}})
        assert g.n_morphisms == 2

    def test_group_perm_gens(self):
        g = parse_groupoid({"group": {"perm_gens": [[1, 0, 2], [1, 2, 0]]}})
        assert g.n_morphisms == 6

    def test_disjoint_union_combinator(self):
        g = parse_groupoid(
            {
                "disjoint_union": [
                    {"group": {"table": cyclic_table(2)}},
                    {"group": {"perm_gens": [[1, 0, 2], [1, 2, 0]]}},
                ]
            }
        )
        assert (g.n_objects, g.n_morphisms) == (2, 8)

    def test_product_combinator(self):
        g = parse_groupoid(
            {"product": [{"group": {"table": cyclic_table(2)}}, {"pair": 2}]}
        )
        assert (g.n_objects, g.n_morphisms) == (2, 8)

    def test_full_form_round_trip(self, corpus):
        for name in ("C2", "Pair(3)", "C2+S3"):
            g = corpus[name]
            parsed = parse_groupoid(groupoid_to_obj(g))
            assert parsed == g

    def test_missing_field(self):
        with pytest.raises(ParseError, match="identity"):
            parse_groupoid(
                {"objects": 1, "morphisms": [], "compose": [], "inverse": []}
            )

    def test_bad_group_table(self):
        with pytest.raises(NotAGroup):
            parse_groupoid({"group": {"table": [[0, 1], [1, 1]]}})

    def test_corrupt_full_form_rejected(self, c2):
        obj = groupoid_to_obj(c2)
        obj["inverse"] = [1, 1]
        with pytest.raises(MissingInverse):
            parse_groupoid(obj)

    def test_non_object_input(self):
        with pytest.raises(ParseError):
            parse_groupoid([1, 2, 3])


class TestParseGSet:
    def test_regular_c2(self, c2):
        x = parse_gset({"fibers": {"0": 2}, "action": {"1": [1, 0]}}, c2)
        assert x.size(0) == 2

    def test_identity_defaults(self, c2):
        x = parse_gset({"fibers": {"0": 3}, "action": {"1": [2, 1, 0]}}, c2)
        assert x.action[0] == [0, 1, 2]

    def test_missing_non_identity_action(self, s3):
        with pytest.raises(ParseError, match="non-identity"):
            parse_gset({"fibers": {"0": 1}}, gb.from_group(s3_table()))

    def test_invalid_action_rejected(self, c2):
        with pytest.raises(NotNatural):
            parse_gset({"fibers": {"0": 2}, "action": {"1": [0, 0]}}, c2)

    def test_unknown_object_key(self, c2):
        with pytest.raises(ParseError, match="fiber key"):
            parse_gset({"fibers": {"7": 1}, "action": {}}, c2)


class TestParseGMonoid:
    def test_conjugation_shorthand(self, s3):
        w = parse_gmonoid({"conjugation": True}, s3)
        assert w == gb.conjugation_action(s3)

    def test_trivial_shorthand(self, s3):
        w = parse_gmonoid({"trivial": True}, s3)
        assert w == gb.trivial_gmonoid(s3)

    def test_explicit_monoid(self, c2):
        w = parse_gmonoid(
            {
                "monoids": {"0": {"table": cyclic_table(2), "unit": 0}},
                "action": {"1": [0, 1]},
            },
            c2,
        )
        assert w.size(0) == 2

    def test_fiber_disagreement(self, c2):
        with pytest.raises(ParseError, match="disagrees"):
            parse_gmonoid(
                {
                    "fibers": {"0": 3},
                    "monoids": {"0": {"table": cyclic_table(2), "unit": 0}},
                    "action": {"1": [0, 1]},
                },
                c2,
            )

    def test_missing_monoid(self, corpus):
        g = corpus["C2+S3"]
        with pytest.raises(ParseError, match="missing"):
            parse_gmonoid(
                {
                    "monoids": {"0": {"table": cyclic_table(2), "unit": 0}},
                    "action": {},
                },
                g,
            )


class TestParseCrossed:
    def test_valid_crossed(self, c2):
        conj = gb.conjugation_action(c2)
        c = parse_crossed(
            {
                "fibers": {"0": 2},
                "action": {"1": [1, 0]},
                "labels": {"0": [1, 1]},
            },
            c2,
            conj,
        )
        assert c.label == [[1, 1]]

    def test_unnatural_labels_rejected(self, c2):
        conj = gb.conjugation_action(c2)
        with pytest.raises(NotNatural):
            parse_crossed(
                {
                    "fibers": {"0": 2},
                    "action": {"1": [1, 0]},
                    "labels": {"0": [0, 1]},
                },
                c2,
                conj,
            )

    def test_missing_labels(self, c2):
        conj = gb.conjugation_action(c2)
        with pytest.raises(ParseError, match="labels"):
            parse_crossed(
                {"fibers": {"0": 2}, "action": {"1": [1, 0]}}, c2, conj
            )
