import json

import pytest

from colsym.census import (
    CensusReport,
    Scope,
    TilingKind,
    census,
    colour_permutation,
    colours_transitive,
    compare_reports,
    compose_permutations,
    format_census,
    permutation_homomorphism_check,
    required_words,
)
from colsym.coset import CosetTable
from colsym.errors import DomainError
from colsym.lowindex import oracle_classes
from colsym.presentations import triangle_group
from colsym.subgroups import fixed_cosets, is_orientation_subgroup
from colsym.words import A, B, C, REFLECTIONS


def witness_table(witness, n):
    """Rebuild the coset table encoded by an oracle witness."""
    parts = [witness[i * n : (i + 1) * n] for i in range(3)]
    rows = tuple(tuple(parts[g][i] for g in (A, B, C)) for i in range(n))
    return CosetTable(REFLECTIONS, rows)


@pytest.mark.parametrize("pq", [(4, 3), (4, 4)])
@pytest.mark.parametrize("kind", list(TilingKind))
def test_full_census_against_oracle(pq, kind, provider):
    """Count colourings a second way, from brute-forced subgroups.

    Whether a class admits a coset fixed by the stabilizer words is a
    conjugacy invariant, so checking it on the oracle's witnesses counts
    the same colourings without touching the search code at all.
    """
    p, q = pq
    G = triangle_group(p, q)
    words = required_words(kind, Scope.FULL)
    report = census(p, q, kind, Scope.FULL, 6, classes_provider=provider)
    got = report.multiplicities()
    for k in range(1, 7):
        expected = sum(
            1
            for w in oracle_classes(G, k).witnesses
            if fixed_cosets(witness_table(w, k), words)
        )
        assert got.get(k, 0) == expected


def test_rotation_strategies_agree_euclidean(provider):
    for kind in TilingKind:
        rep = census(
            4, 4, kind, Scope.ROTATION, 6, strategy="both", classes_provider=provider
        )
        assert rep.strategy == "both"


def test_census_entries_shape(provider):
    rep = census(7, 3, TilingKind.PQ, Scope.FULL, 24, classes_provider=provider)
    assert rep.multiplicities() == {1: 1, 8: 1, 15: 1, 22: 1, 24: 1}
    for e in rep.entries:
        assert e.count == len(e.representatives)
        for rec in e.representatives:
            t = rec.table
            assert t.n == e.colours
            # stored representative is re-rooted: its base coset is
            # literally fixed by the stabilizer words
            for w in required_words(TilingKind.PQ, Scope.FULL):
                assert t.apply(0, w) == 0
            assert colours_transitive(t)


def test_rotation_representatives_are_orientation_subgroups(provider):
    rep = census(
        7, 3, TilingKind.LAVES, Scope.ROTATION, 15, classes_provider=provider
    )
    assert rep.multiplicities() == {1: 1, 7: 1, 9: 1, 14: 6, 15: 2}
    for e in rep.entries:
        for rec in e.representatives:
            assert is_orientation_subgroup(rec.table)
            assert rec.table.n == 2 * e.colours
            w = required_words(TilingKind.LAVES, Scope.ROTATION)[0]
            assert rec.table.apply(0, w) == 0


def test_full_contained_in_rotation(provider):
    for kind in TilingKind:
        full = census(7, 3, kind, Scope.FULL, 22, classes_provider=provider)
        rot = census(7, 3, kind, Scope.ROTATION, 22, classes_provider=provider)
        mf, mr = full.multiplicities(), rot.multiplicities()
        for k, c in mf.items():
            assert mr.get(k, 0) >= c


def test_checkerboard_permutations(provider):
    rep = census(4, 4, TilingKind.PQ, Scope.FULL, 2, classes_provider=provider)
    t = rep.entries[-1].representatives[0].table
    assert colour_permutation(t, (A,)) == (1, 0)
    assert colour_permutation(t, (B,)) == (0, 1)
    assert colour_permutation(t, (C,)) == (0, 1)
    assert colour_permutation(t, (A, B, A)) == (0, 1)
    assert permutation_homomorphism_check(t, (A, B), (B, A, C))
    assert compose_permutations((1, 0), (1, 0)) == (0, 1)


def test_format_census_styles(provider):
    rep = census(4, 3, TilingKind.PQ, Scope.FULL, 10, classes_provider=provider)
    plain = format_census(rep, "plain")
    assert plain == "(4^3) full <= 10: 1, 3, 6"

    doc = json.loads(format_census(rep, "json"))
    assert doc["p"] == 4 and doc["q"] == 3
    assert doc["tiling"] == "pq" and doc["scope"] == "full"
    assert doc["entries"] == [
        {"colours": 1, "count": 1},
        {"colours": 3, "count": 1},
        {"colours": 6, "count": 1},
    ]

    csv = format_census(rep, "csv").splitlines()
    assert csv[0] == "p,q,tiling,scope,colours,count"
    assert len(csv) == 4
    assert csv[1] == "4,3,pq,full,1,1"

    with pytest.raises(DomainError):
        format_census(rep, "latex")


def test_compare_reports_trims_to_smaller_bound(provider):
    wide = census(4, 3, TilingKind.PQ, Scope.FULL, 10, classes_provider=provider)
    narrow = census(4, 3, TilingKind.PQ, Scope.FULL, 4, classes_provider=provider)
    assert compare_reports(wide, narrow)


def test_census_rejects_bad_arguments(provider):
    with pytest.raises(DomainError):
        census(7, 3, TilingKind.PQ, Scope.FULL, 0, classes_provider=provider)
    with pytest.raises(DomainError):
        census(
            7, 3, TilingKind.PQ, Scope.ROTATION, 4,
            strategy="c", classes_provider=provider,
        )


def test_required_words():
    assert required_words(TilingKind.PQ, Scope.FULL) == ((B,), (C,))
    assert required_words(TilingKind.QP, Scope.FULL) == ((A,), (B,))
    assert required_words(TilingKind.LAVES, Scope.FULL) == ((A,), (C,))
    assert required_words(TilingKind.PQ, Scope.ROTATION) == ((B, C),)


def test_display_names():
    assert TilingKind.PQ.display(7, 3) == "(7^3)"
    assert TilingKind.QP.display(7, 3) == "(3^7)"
    assert TilingKind.LAVES.display(7, 3) == "[3.7.3.7]"
    assert TilingKind.LAVES.display(3, 8) == "[3.8.3.8]"
