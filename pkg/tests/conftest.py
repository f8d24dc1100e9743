"""Shared corpus: group tables, corpus groupoids, and small helpers."""

from __future__ import annotations

import pytest

import gburnside as gb
from gburnside.gsets import GSet


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def table_product(t1: list[list[int]], t2: list[list[int]]) -> list[list[int]]:
    n2 = len(t2)
    n1 = len(t1)
    out = []
    for a1 in range(n1):
        for a2 in range(n2):
            out.append(
                [t1[a1][b1] * n2 + t2[a2][b2] for b1 in range(n1) for b2 in range(n2)]
            )
    return out


def s3_table() -> list[list[int]]:
    return gb.group_table_from_perm_gens([[1, 0, 2], [1, 2, 0]])


def d4_table() -> list[list[int]]:
    return gb.group_table_from_perm_gens([[1, 2, 3, 0], [0, 3, 2, 1]])


def q8_table() -> list[list[int]]:
    units = ["1", "i", "j", "k"]
    mul_unit = {("1", u): (1, u) for u in units}
    for u in units:
        mul_unit[(u, "1")] = (1, u)
    mul_unit.update(
        {
            ("i", "i"): (-1, "1"),
            ("j", "j"): (-1, "1"),
            ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"),
            ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"),
            ("k", "j"): (-1, "i"),
            ("k", "i"): (1, "j"),
            ("i", "k"): (-1, "j"),
        }
    )
    idx = {
        (s, u): units.index(u) * 2 + (0 if s == 1 else 1)
        for s in (1, -1)
        for u in units
    }
    table = [[0] * 8 for _ in range(8)]
    for (s1, u1), a in idx.items():
        for (s2, u2), b in idx.items():
            s3, u3 = mul_unit[(u1, u2)]
            table[a][b] = idx[(s1 * s2 * s3, u3)]
    return table


GROUP_TABLES_LEQ8 = {
    "trivial": cyclic_table(1),
    "C2": cyclic_table(2),
    "C3": cyclic_table(3),
    "C4": cyclic_table(4),
    "V4": table_product(cyclic_table(2), cyclic_table(2)),
    "C5": cyclic_table(5),
    "C6": cyclic_table(6),
    "S3": s3_table(),
    "C7": cyclic_table(7),
    "C8": cyclic_table(8),
    "C4xC2": table_product(cyclic_table(4), cyclic_table(2)),
    "C2^3": table_product(table_product(cyclic_table(2), cyclic_table(2)), cyclic_table(2)),
    "D4": d4_table(),
    "Q8": q8_table(),
}


def build_corpus() -> dict[str, gb.FiniteGroupoid]:
    c2 = gb.from_group(cyclic_table(2))
    c3 = gb.from_group(cyclic_table(3))
    s3 = gb.from_group(s3_table())
    corpus = {
        "trivial": gb.from_group(cyclic_table(1)),
        "C2": c2,
        "C3": c3,
        "S3": s3,
        "D4": gb.from_group(d4_table()),
        "Q8": gb.from_group(q8_table()),
        "Pair(1)": gb.pair_groupoid(1),
        "Pair(2)": gb.pair_groupoid(2),
        "Pair(3)": gb.pair_groupoid(3),
        "Pair(4)": gb.pair_groupoid(4),
        "C2xPair(2)": gb.direct_product(c2, gb.pair_groupoid(2)),
        "C2+S3": gb.disjoint_union([c2, s3])[0],
        "(C2xPair(2))+C3": gb.disjoint_union(
            [gb.direct_product(c2, gb.pair_groupoid(2)), c3]
        )[0],
    }
    return corpus


@pytest.fixture(scope="session")
def corpus() -> dict[str, gb.FiniteGroupoid]:
    return build_corpus()


@pytest.fixture(scope="session")
def c2() -> gb.FiniteGroupoid:
    return gb.from_group(cyclic_table(2))


@pytest.fixture(scope="session")
def c3() -> gb.FiniteGroupoid:
    return gb.from_group(cyclic_table(3))


@pytest.fixture(scope="session")
def s3() -> gb.FiniteGroupoid:
    return gb.from_group(s3_table())


@pytest.fixture(scope="session")
def s3_perms() -> list[tuple[int, ...]]:
    """Element k of the S3 fixture as a permutation of 3 points, in the
    same breadth-first order used to build its table."""
    gens = [[1, 0, 2], [1, 2, 0]]
    ident = tuple(range(3))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        fresh = []
        for p in frontier:
            for q in gens:
                r = tuple(q[p[i]] for i in range(3))
                if r not in index:
                    index[r] = len(elems)
                    elems.append(r)
                    fresh.append(r)
        frontier = fresh
    return elems


def regular_gset(g: gb.FiniteGroupoid) -> GSet:
    """Left-translation action of a one-object groupoid on its morphisms."""
    assert g.n_objects == 1
    n = g.n_morphisms
    return GSet(
        g, [list(range(n))], [list(g.compose_table[m]) for m in g.morphisms]
    ).validate()


def fixed_points_gset(g: gb.FiniteGroupoid, k: int) -> GSet:
    """k fixed points at every object."""
    return GSet(
        g,
        [list(range(k)) for _ in g.objects],
        [list(range(k)) for _ in g.morphisms],
    ).validate()
