"""Predicates and transforms on subgroups given by their coset tables.

A complete coset table determines its subgroup: the words that fix coset
0.  Schreier generators read the subgroup off the table, membership of
a specific word is one table walk, and conjugation questions reduce to
re-rooting the table at another coset.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coset import CosetTable, default_budget, enumerate_cosets, reroot, standardize
from .errors import DomainError
from .presentations import Presentation, apply_generator_map
from .words import EVEN, Word, free_reduce, sign_parity


def transversal_words(t: CosetTable) -> tuple[Word, ...]:
    """One word per coset carrying coset 0 there; first-visit choices.

    On a standardized table these are exactly the words the scan order
    discovers, so word i ends at coset i.
    """
    m = t.alphabet.size
    words: dict[int, Word] = {0: ()}
    order = [0]
    i = 0
    while i < len(order):
        o = order[i]
        for c in range(m):
            j = t.rows[o][c]
            if j not in words:
                words[j] = words[o] + (c,)
                order.append(j)
        i += 1
    if len(words) != t.n:
        raise DomainError("table is not transitive")
    return tuple(words[i] for i in range(t.n))


def schreier_generators(t: CosetTable) -> tuple[Word, ...]:
    """Generating words for the subgroup that coset 0 stabilizes.

    For each table edge (i, g) -> j the word r_i g r_j^-1 fixes coset 0;
    the nontrivial ones generate.  Freely reduced, deduplicated, in
    table scan order.
    """
    trans = transversal_words(t)
    alphabet = t.alphabet
    m = alphabet.size
    out: list[Word] = []
    seen: set[Word] = set()
    for i in range(t.n):
        for c in range(m):
            j = t.rows[i][c]
            w = free_reduce(trans[i] + (c,) + alphabet.inverse_word(trans[j]), alphabet)
            if w and w not in seen:
                seen.add(w)
                out.append(w)
    return tuple(out)


def fixed_cosets(t: CosetTable, words) -> frozenset[int]:
    """Cosets fixed by every one of the given words.

    Coset i is fixed by w exactly when w lies in the subgroup conjugate
    w_i S w_i^-1 attached to coset i, so a nonempty result says some
    conjugate of S contains all the words.
    """
    out = frozenset(range(t.n))
    for w in words:
        out = frozenset(i for i in out if t.apply(i, w) == i)
    return out


def is_orientation_subgroup(t: CosetTable) -> bool:
    """Does the subgroup consist of orientation-preserving words only?

    Equivalent to the coset graph being bipartite with every generator
    edge crossing sides, since each reflection letter flips orientation.
    Checked by 2-colouring.  Only meaningful over the reflection
    alphabet, where every letter reverses orientation.
    """
    if any(t.alphabet.inv[c] != c for c in range(t.alphabet.size)):
        raise DomainError("orientation test needs the reflection alphabet")
    side = [-1] * t.n
    side[0] = 0
    stack = [0]
    while stack:
        i = stack.pop()
        for c in range(t.alphabet.size):
            j = t.rows[i][c]
            if side[j] == -1:
                side[j] = side[i] ^ 1
                stack.append(j)
            elif side[j] == side[i]:
                return False
    return True


def conjugate_in(s: CosetTable, t: CosetTable) -> bool:
    """Are the subgroups of the two tables conjugate in the big group?

    Conjugates of t's subgroup are the stabilizers of t's cosets, whose
    standardized tables are the re-rootings of t.
    """
    if s.alphabet != t.alphabet or s.n != t.n:
        return False
    ss = standardize(s)
    return any(reroot(t, j).rows == ss.rows for j in range(t.n))


def transform_subgroup(
    pres: Presentation, t: CosetTable, gmap: dict[int, Word]
) -> CosetTable:
    """Coset table of the image of t's subgroup under an endomorphism.

    gmap sends generator letters to words (see apply_generator_map).
    The image is enumerated afresh from the mapped Schreier generators,
    budgeted for the expected index, so for automorphisms the result has
    the same index as t.
    """
    gens = [apply_generator_map(w, gmap, pres.alphabet) for w in schreier_generators(t)]
    return enumerate_cosets(pres, gens, max_cosets=default_budget(t.n))


@dataclass(frozen=True)
class SubgroupRecord:
    """A census representative: table plus the cheap derived facts."""

    table: CosetTable
    index: int
    schreier_gens: tuple[Word, ...]
    orientation: bool

    @classmethod
    def from_table(cls, t: CosetTable) -> "SubgroupRecord":
        gens = schreier_generators(t)
        if any(t.alphabet.inv[c] != c for c in range(t.alphabet.size)):
            orient = True  # a rotation-alphabet subgroup cannot reflect
        else:
            orient = all(sign_parity(w) == EVEN for w in gens)
        return cls(t, t.n, gens, orient)
