"""Reflection and rotation group presentations for the (p, q) tilings.

The full symmetry group of the tiling by p-gons meeting q at a vertex is
generated by the three reflections in the sides of a right triangle with
angles pi/p and pi/q.  Its orientation-preserving half is generated by
the two rotations x = ab (order q, about the pi/q corner) and z = bc
(order p, about the pi/p corner).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError
from .words import (
    A,
    B,
    C,
    XGEN,
    XINV,
    ZGEN,
    ZINV,
    Alphabet,
    REFLECTIONS,
    ROTATIONS,
    Word,
    free_reduce,
)


class Geometry(Enum):
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class Presentation:
    """A finite presentation over one of the two alphabets.

    Relators are written with positive letters only.  The involution
    relators aa, bb, cc are kept in the relator list even though they
    are not freely reduced words; they carry the torsion that the
    alphabet's inverse pairing alone does not impose on the group.
    """

    alphabet: Alphabet
    relators: tuple[Word, ...]
    name: str

    def __post_init__(self):
        size = self.alphabet.size
        for r in self.relators:
            if not r:
                raise DomainError("empty relator")
            if any(g < 0 or g >= size for g in r):
                raise DomainError(f"relator {r} has letters outside the alphabet")


def _check_pq(p: int, q: int) -> None:
    if not (isinstance(p, int) and isinstance(q, int)):
        raise DomainError("p and q must be integers")
    if p < 3 or q < 3:
        raise DomainError(f"need p, q >= 3, got ({p}, {q})")


def classify_geometry(p: int, q: int) -> Geometry:
    """Sign of 1/p + 1/q - 1/2 decides the geometry; exact arithmetic."""
    _check_pq(p, q)
    s = Fraction(1, p) + Fraction(1, q)
    half = Fraction(1, 2)
    if s > half:
        return Geometry.SPHERICAL
    if s == half:
        return Geometry.EUCLIDEAN
    return Geometry.HYPERBOLIC


def triangle_group(p: int, q: int) -> Presentation:
    """Reflection group <a,b,c | a^2, b^2, c^2, (ab)^q, (ac)^2, (bc)^p>.

    a is the reflection in the triangle side opposite the pi/p corner,
    b opposite the right-angled corner, c opposite the pi/q corner; so
    ab fixes the pi/q corner and bc fixes the pi/p corner.
    """
    _check_pq(p, q)
    relators = (
        (A, A),
        (B, B),
        (C, C),
        (A, B) * q,
        (A, C) * 2,
        (B, C) * p,
    )
    return Presentation(REFLECTIONS, relators, f"triangle-{p}-{q}")


def von_dyck_group(p: int, q: int) -> tuple[Presentation, dict[int, Word]]:
    """Rotation group <x,z | x^q, z^p, (xz)^2> plus its mirror twist.

    Returns the presentation together with the generator map of the
    outer automorphism induced by conjugating with the reflection a:
    x -> x^-1 and z -> x z^-1 x^-1 (since a(bc)a = (ab)(ca)).  Applying
    it to a subgroup tells whether two rotation-conjugacy classes fuse
    under the full reflection group.
    """
    _check_pq(p, q)
    relators = (
        (XGEN,) * q,
        (ZGEN,) * p,
        (XGEN, ZGEN) * 2,
    )
    pres = Presentation(ROTATIONS, relators, f"vondyck-{p}-{q}")
    sigma = {XGEN: (XINV,), ZGEN: (XGEN, ZINV, XINV)}
    return pres, sigma


# How the rotation letters spell out as reflection words.
ROTATION_AS_REFLECTIONS: dict[int, Word] = {
    XGEN: (A, B),
    XINV: (B, A),
    ZGEN: (B, C),
    ZINV: (C, B),
}


def rotation_word_as_reflections(w: Word) -> Word:
    """Rewrite a word over x, X, z, Z as a reduced reflection word."""
    out: list[int] = []
    for g in w:
        out.extend(ROTATION_AS_REFLECTIONS[g])
    return free_reduce(tuple(out), REFLECTIONS)


def apply_generator_map(w: Word, gmap: dict[int, Word], alphabet: Alphabet) -> Word:
    """Image of w under a homomorphism given on generator letters.

    gmap maps each generator column to its image word; inverse columns
    are sent to the inverse of the partner's image.
    """
    inv = alphabet.inv
    out: list[int] = []
    for g in w:
        if g in gmap:
            out.extend(gmap[g])
        else:
            out.extend(alphabet.inverse_word(gmap[inv[g]]))
    return free_reduce(tuple(out), alphabet)
