"""Coset tables and systematic coset enumeration.

A coset table for a subgroup S of a group G presented on k letters is
an n x k array: rows are cosets (row 0 is S itself), columns follow the
alphabet, and entry (i, g) is the coset S w_i g.  A complete table is a
transitive permutation representation of G on the cosets.

enumerate_cosets is the classic relator-scanning procedure with
coincidence handling: scan every relator at every coset, define new
cosets at scan gaps, and merge cosets identified by a completed scan.
It terminates exactly when the index is finite and the budget suffices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityExceeded, DomainError
from .presentations import Presentation
from .words import Alphabet, Word


@dataclass(frozen=True)
class CosetTable:
    """Immutable complete coset table over a fixed alphabet."""

    alphabet: Alphabet
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def apply(self, i: int, w: Word) -> int:
        """Coset reached from coset i by reading w left to right."""
        rows = self.rows
        for g in w:
            i = rows[i][g]
        return i

    def flat(self) -> tuple[int, ...]:
        """Row-major serialization; the key used for sorting and hashing."""
        return tuple(v for row in self.rows for v in row)


def apply_word(t: CosetTable, i: int, w: Word) -> int:
    return t.apply(i, w)


def default_budget(index_hint: int) -> int:
    """Coset budget for an enumeration whose index is known in advance."""
    return max(1000, 200 * index_hint)


def enumerate_cosets(
    pres: Presentation,
    subgroup_gens: Iterable[Word],
    max_cosets: int | None = None,
) -> CosetTable:
    """Complete standardized coset table of <subgroup_gens> in pres.

    max_cosets bounds the total number of cosets ever defined, dead ones
    included; CapacityExceeded is raised when the bound is hit.  With no
    bound given a generous default is used so that runaway enumerations
    of infinite-index subgroups still terminate with an error.
    """
    if max_cosets is None:
        max_cosets = 1_000_000
    if max_cosets < 1:
        raise DomainError("max_cosets must be positive")

    m = pres.alphabet.size
    inv = pres.alphabet.inv

    table: list[list[int]] = [[-1] * m]
    parent = [0]  # union-find; merged cosets point to a smaller index
    n_total = 1  # live + dead cosets ever defined

    def rep(k: int) -> int:
        r = k
        while parent[r] != r:
            r = parent[r]
        while parent[k] != r:
            parent[k], k = r, parent[k]
        return r

    def define(alpha: int, x: int) -> None:
        nonlocal n_total
        if n_total >= max_cosets:
            raise CapacityExceeded(max_cosets)
        beta = len(table)
        table.append([-1] * m)
        parent.append(beta)
        n_total += 1
        table[alpha][x] = beta
        table[beta][inv[x]] = alpha

    pending: list[int] = []  # dead cosets whose rows still need stripping

    def merge(k: int, l: int) -> None:
        k, l = rep(k), rep(l)
        if k == l:
            return
        if k < l:
            k, l = l, k
        parent[k] = l
        pending.append(k)

    def coincidence(alpha: int, beta: int) -> None:
        merge(alpha, beta)
        while pending:
            gamma = pending.pop()
            row = table[gamma]
            for x in range(m):
                delta = row[x]
                if delta == -1:
                    continue
                table[delta][inv[x]] = -1  # drop the back-reference
                mu, nu = rep(gamma), rep(delta)
                if table[mu][x] != -1:
                    merge(nu, table[mu][x])
                elif table[nu][inv[x]] != -1:
                    merge(mu, table[nu][inv[x]])
                else:
                    table[mu][x] = nu
                    table[nu][inv[x]] = mu

    def scan_and_fill(alpha: int, w: Word) -> None:
        r = len(w)
        if r == 0:
            return
        f, i = alpha, 0
        while True:
            while i < r and table[f][w[i]] != -1:
                f = table[f][w[i]]
                i += 1
            if i == r:
                if f != alpha:
                    coincidence(f, alpha)
                return
            b, j = alpha, r - 1
            while j >= i and table[b][inv[w[j]]] != -1:
                b = table[b][inv[w[j]]]
                j -= 1
            if j < i:
                # both scans met in the middle on the same position
                if f != b:
                    coincidence(f, b)
                return
            if j == i:
                # the gap is a single letter: a forced deduction
                table[f][w[i]] = b
                table[b][inv[w[i]]] = f
                return
            define(f, w[i])

    for w in subgroup_gens:
        scan_and_fill(0, tuple(w))
    alpha = 0
    while alpha < len(table):
        if parent[alpha] == alpha:
            for rel in pres.relators:
                scan_and_fill(alpha, rel)
                if parent[alpha] != alpha:
                    break
        alpha += 1

    live = [k for k in range(len(table)) if parent[k] == k]
    renum = {old: new for new, old in enumerate(live)}
    rows = tuple(
        tuple(renum[rep(table[old][x])] for x in range(m)) for old in live
    )
    return standardize(CosetTable(pres.alphabet, rows))


def _renumber(t: CosetTable, base: int) -> CosetTable:
    """Relabel cosets in first-visit order of a column-ordered BFS from base."""
    m = t.alphabet.size
    rows = t.rows
    order = [base]
    loc = {base: 0}
    i = 0
    while i < len(order):
        row = rows[order[i]]
        for c in range(m):
            w = row[c]
            if w not in loc:
                loc[w] = len(order)
                order.append(w)
        i += 1
    if len(order) != t.n:
        raise DomainError("table is not transitive; cannot renumber")
    new_rows = tuple(tuple(loc[rows[o][c]] for c in range(m)) for o in order)
    return CosetTable(t.alphabet, new_rows)


def standardize(t: CosetTable) -> CosetTable:
    """Renumber so cosets appear in first-visit scan order from coset 0."""
    return _renumber(t, 0)


def reroot(t: CosetTable, base: int) -> CosetTable:
    """Standardized table of the same action with `base` moved to slot 0.

    The result is the table of the conjugate subgroup w S w^-1 where w
    is any word carrying coset 0 to base.
    """
    return _renumber(t, base)


def canonical_table(t: CosetTable) -> CosetTable:
    """Lexicographically least re-rooting; the class representative.

    Two complete tables have equal canonical forms iff their subgroups
    are conjugate, since re-rooting runs over exactly the conjugates.
    """
    best = None
    for base in range(t.n):
        cand = _renumber(t, base)
        if best is None or cand.rows < best.rows:
            best = cand
    return best


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[str, ...]


def validate(t: CosetTable, pres: Presentation) -> ValidationReport:
    """Check totality, inverse consistency, transitivity, relator closure."""
    m = t.alphabet.size
    inv = t.alphabet.inv
    n = t.n
    failures: list[str] = []

    for i, row in enumerate(t.rows):
        if len(row) != m:
            failures.append(f"row {i} has {len(row)} entries, expected {m}")
            return ValidationReport(False, tuple(failures))
        for c in range(m):
            v = row[c]
            if not (0 <= v < n):
                failures.append(f"entry ({i},{t.alphabet.names[c]}) = {v} out of range")
                return ValidationReport(False, tuple(failures))

    for i in range(n):
        for c in range(m):
            j = t.rows[i][c]
            if t.rows[j][inv[c]] != i:
                failures.append(
                    f"inverse mismatch: ({i},{t.alphabet.names[c]}) = {j} but "
                    f"({j},{t.alphabet.names[inv[c]]}) = {t.rows[j][inv[c]]}"
                )
                break
        if failures:
            break

    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for c in range(m):
            j = t.rows[i][c]
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != n:
        failures.append(f"not transitive: {len(seen)} of {n} cosets reachable from 0")

    for rel in pres.relators:
        bad = next((i for i in range(n) if t.apply(i, rel) != i), None)
        if bad is not None:
            failures.append(
                f"relator {t.alphabet.word_str(rel)} does not close at coset {bad}"
            )
            break

    return ValidationReport(not failures, tuple(failures))
