"""Counting perfect colourings of the (p, q) tilings.

A perfect colouring with k colours is determined by an index-k subgroup
S of the symmetry group that contains the stabilizer of one tile: tiles
are cosets, colours are cosets of S, and every symmetry permutes the
colours.  Counting colourings up to recolouring and symmetry therefore
means counting conjugacy classes of subgroups of index at most k that
contain a conjugate of the tile stabilizer.

Three tilings share the same reflection group: the tiling by p-gons
(tile stabilizer <b, c>), its dual by q-gons (<a, b>), and the Laves
tiling by quadrilaterals around the right-angle corner (<a, c>).  The
full scope uses all symmetries; the rotation scope only the
orientation-preserving ones, where the tile stabilizer shrinks to the
single rotation fixing the tile centre.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum

from .coset import CosetTable, canonical_table, reroot
from .errors import DomainError, InternalError
from .lowindex import ClassList, low_index_classes
from .presentations import (
    Presentation,
    triangle_group,
    von_dyck_group,
)
from .subgroups import (
    SubgroupRecord,
    fixed_cosets,
    is_orientation_subgroup,
    transform_subgroup,
)
from .words import A, B, C, XGEN, ZGEN, Word


class TilingKind(Enum):
    PQ = "pq"  # p-gons, q meeting at each vertex
    QP = "qp"  # the dual: q-gons, p at each vertex
    LAVES = "laves"  # quadrilaterals around the right-angle corners

    def display(self, p: int, q: int) -> str:
        if self is TilingKind.PQ:
            return f"({p}^{q})"
        if self is TilingKind.QP:
            return f"({q}^{p})"
        lo, hi = sorted((p, q))
        return f"[{lo}.{hi}.{lo}.{hi}]"


class Scope(Enum):
    FULL = "full"
    ROTATION = "rotation"


def required_words(kind: TilingKind, scope: Scope) -> tuple[Word, ...]:
    """Stabilizer words a colouring subgroup must contain, up to conjugacy.

    Full scope: the two mirrors through the tile centre.  Rotation
    scope: the single rotation about the tile centre (as a reflection
    word; it is a product of two mirrors).
    """
    if scope is Scope.FULL:
        return {
            TilingKind.PQ: ((B,), (C,)),
            TilingKind.QP: ((A,), (B,)),
            TilingKind.LAVES: ((A,), (C,)),
        }[kind]
    return {
        TilingKind.PQ: ((B, C),),
        TilingKind.QP: ((A, B),),
        TilingKind.LAVES: ((A, C),),
    }[kind]


def rotation_required_word(kind: TilingKind) -> Word:
    """The tile-centre rotation in the letters of the rotation group."""
    return {
        TilingKind.PQ: (ZGEN,),
        TilingKind.QP: (XGEN,),
        TilingKind.LAVES: (XGEN, ZGEN),
    }[kind]


@dataclass(frozen=True)
class CensusEntry:
    colours: int
    count: int
    representatives: tuple[SubgroupRecord, ...]


@dataclass(frozen=True)
class CensusReport:
    p: int
    q: int
    kind: TilingKind
    scope: Scope
    max_colours: int
    strategy: str
    entries: tuple[CensusEntry, ...]
    elapsed: float = field(compare=False, default=0.0)

    def multiplicities(self) -> dict[int, int]:
        return {e.colours: e.count for e in self.entries}


def _rerooted_record(t: CosetTable, words) -> SubgroupRecord:
    """Move the table's base point to its smallest coset fixed by `words`.

    Class representatives are canonical tables whose base coset need not
    be fixed by the stabilizer words; colouring machinery needs literal
    membership, so each stored representative is re-rooted first.
    """
    fx = fixed_cosets(t, words)
    if not fx:
        raise InternalError("representative lost its fixed coset")
    return SubgroupRecord.from_table(reroot(t, min(fx)))


def census(
    p: int,
    q: int,
    kind: TilingKind,
    scope: Scope,
    max_colours: int,
    *,
    strategy: str = "a",
    jobs: int = 1,
    node_budget: int | None = None,
    classes_provider=None,
) -> CensusReport:
    """All perfect colourings of the tiling with at most max_colours colours.

    scope=FULL admits every symmetry of the tiling; scope=ROTATION only
    the orientation-preserving ones.  For the rotation scope two
    independent routes exist: strategy "a" enumerates subgroups of the
    full reflection group up to twice the colour bound and keeps the
    orientation-preserving ones; strategy "b" enumerates subgroups of
    the rotation group directly and fuses conjugacy classes that the
    mirror twist identifies.  strategy "both" runs the two and insists
    they agree.  classes_provider(presentation, max_index) -> ClassList
    lets callers interpose a cache.
    """
    if max_colours < 1:
        raise DomainError("max_colours must be at least 1")
    if not isinstance(kind, TilingKind):
        raise DomainError(f"bad tiling kind: {kind!r}")
    if not isinstance(scope, Scope):
        raise DomainError(f"bad scope: {scope!r}")
    provider = classes_provider
    if provider is None:
        provider = lambda pres, n: low_index_classes(
            pres, n, jobs=jobs, node_budget=node_budget
        )

    started = time.perf_counter()
    if scope is Scope.FULL:
        entries = _census_full(p, q, kind, max_colours, provider)
        tag = "a"
    elif strategy == "a":
        entries = _census_rotation_a(p, q, kind, max_colours, provider)
        tag = "a"
    elif strategy == "b":
        entries = _census_rotation_b(p, q, kind, max_colours, provider)
        tag = "b"
    elif strategy == "both":
        ea = _census_rotation_a(p, q, kind, max_colours, provider)
        eb = _census_rotation_b(p, q, kind, max_colours, provider)
        ma = {e.colours: e.count for e in ea}
        mb = {e.colours: e.count for e in eb}
        if ma != mb:
            raise InternalError(
                f"rotation strategies disagree for ({p},{q}) {kind.value}: "
                f"a={ma} b={mb}"
            )
        entries = ea
        tag = "both"
    else:
        raise DomainError(f"unknown strategy {strategy!r}")

    return CensusReport(
        p=p,
        q=q,
        kind=kind,
        scope=scope,
        max_colours=max_colours,
        strategy=tag,
        entries=entries,
        elapsed=time.perf_counter() - started,
    )


def _bucket(records: dict[int, list[SubgroupRecord]]) -> tuple[CensusEntry, ...]:
    return tuple(
        CensusEntry(k, len(recs), tuple(recs))
        for k, recs in sorted(records.items())
    )


def _census_full(p, q, kind, max_colours, provider) -> tuple[CensusEntry, ...]:
    G = triangle_group(p, q)
    words = required_words(kind, Scope.FULL)
    classes = provider(G, max_colours)
    buckets: dict[int, list[SubgroupRecord]] = {}
    for t in classes.tables:
        if fixed_cosets(t, words):
            buckets.setdefault(t.n, []).append(_rerooted_record(t, words))
    return _bucket(buckets)


def _census_rotation_a(p, q, kind, max_colours, provider) -> tuple[CensusEntry, ...]:
    """Rotation scope via the reflection group.

    An index-k subgroup of the rotation half has index 2k in the full
    group, and conjugacy classes taken in the full group are exactly
    what "colourings up to symmetry of the uncoloured tiling" means,
    reflections included.
    """
    G = triangle_group(p, q)
    words = required_words(kind, Scope.ROTATION)
    classes = provider(G, 2 * max_colours)
    buckets: dict[int, list[SubgroupRecord]] = {}
    for t in classes.tables:
        if t.n % 2:
            continue
        if not is_orientation_subgroup(t):
            continue
        if fixed_cosets(t, words):
            buckets.setdefault(t.n // 2, []).append(_rerooted_record(t, words))
    return _bucket(buckets)


def _census_rotation_b(p, q, kind, max_colours, provider) -> tuple[CensusEntry, ...]:
    """Rotation scope via the rotation group itself.

    Classes there are conjugacy classes under rotations only; the mirror
    twist (an outer automorphism) can identify two of them, and such a
    pair is one colouring class of the unoriented tiling.  Fuse before
    counting.
    """
    vd, sigma = von_dyck_group(p, q)
    word = rotation_required_word(kind)
    classes = provider(vd, max_colours)
    qualifying = [t for t in classes.tables if fixed_cosets(t, (word,))]
    slot = {t.rows: i for i, t in enumerate(qualifying)}

    parent = list(range(len(qualifying)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, t in enumerate(qualifying):
        image = transform_subgroup(vd, t, sigma)
        if image.n != t.n:
            raise InternalError("mirror twist changed the index")
        j = slot.get(canonical_table(image).rows)
        if j is None:
            raise InternalError("mirror twist left the qualifying class list")
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    buckets: dict[int, list[SubgroupRecord]] = {}
    for i, t in enumerate(qualifying):
        if find(i) != i:
            continue
        buckets.setdefault(t.n, []).append(_rerooted_record(t, (word,)))
    return _bucket(buckets)


def colour_permutation(t: CosetTable, w: Word) -> tuple[int, ...]:
    """How the symmetry w permutes the colours of t's colouring.

    Colour i is the left coset (word of coset i)S; the symmetry carries
    tile gF to wgF, so colour i goes to the coset reached from i by
    w^-1 on the right.
    """
    iw = t.alphabet.inverse_word(w)
    return tuple(t.apply(i, iw) for i in range(t.n))


def compose_permutations(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """u after v, matching colour_permutation(t, uv)."""
    return tuple(u[v[i]] for i in range(len(u)))


def permutation_homomorphism_check(t: CosetTable, u: Word, v: Word) -> bool:
    """colour_permutation is a homomorphism: uv acts as (u's perm)(v's perm)."""
    return colour_permutation(t, u + v) == compose_permutations(
        colour_permutation(t, u), colour_permutation(t, v)
    )


def colours_transitive(t: CosetTable) -> bool:
    """Can every colour be carried to every other by some symmetry?

    True for any complete transitive table, so this is a diagnostic for
    corrupted inputs rather than a filter.
    """
    n = t.n
    reached = {0}
    stack = [0]
    gens = [
        colour_permutation(t, (c,)) for c in range(t.alphabet.size)
    ]
    while stack:
        i = stack.pop()
        for g in gens:
            j = g[i]
            if j not in reached:
                reached.add(j)
                stack.append(j)
    return len(reached) == n


def compare_reports(ra: CensusReport, rb: CensusReport) -> bool:
    """Same multiplicity at every colour count up to the smaller bound."""
    bound = min(ra.max_colours, rb.max_colours)
    ma = {k: v for k, v in ra.multiplicities().items() if k <= bound}
    mb = {k: v for k, v in rb.multiplicities().items() if k <= bound}
    return ma == mb


def format_census(report: CensusReport, style: str = "plain") -> str:
    """Render a report: 'plain' one-line multiplicity list, 'json', or 'csv'."""
    if style == "plain":
        parts = []
        for e in report.entries:
            parts.append(
                f"{e.colours}^{{{e.count}}}" if e.count >= 2 else str(e.colours)
            )
        label = report.kind.display(report.p, report.q)
        return f"{label} {report.scope.value} <= {report.max_colours}: " + ", ".join(
            parts
        )
    if style == "json":
        import json

        doc = {
            "p": report.p,
            "q": report.q,
            "tiling": report.kind.value,
            "scope": report.scope.value,
            "max_colours": report.max_colours,
            "strategy": report.strategy,
            "entries": [
                {"colours": e.colours, "count": e.count} for e in report.entries
            ],
        }
        return json.dumps(doc, indent=2)
    if style == "csv":
        lines = ["p,q,tiling,scope,colours,count"]
        for e in report.entries:
            lines.append(
                f"{report.p},{report.q},{report.kind.value},"
                f"{report.scope.value},{e.colours},{e.count}"
            )
        return "\n".join(lines)
    raise DomainError(f"unknown format style {style!r}")
