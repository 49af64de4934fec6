"""Visible (parabolic) subgroups: the subgroup generated by a vertex subset.

For a subset Y of the vertices, the inclusion ``alpha_include`` and the
retraction ``rho_retract`` (kill every generator outside Y) compose to the
identity on words over Y, which is why the subgroup generated by Y is a copy
of the graph group of the induced subgraph on Y.

Membership in the subgroup is decided by the support of the normal form: an
element lies in the subgroup generated by Y iff its canonical word only uses
generators from Y.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InputError
from .graphs import SimpleGraph, induced_subgraph
from .words import NormalWord, Word, normal_form, support

__all__ = [
    "VertexRestriction",
    "alpha_include",
    "rho_retract",
    "is_in_visible",
    "rewrite_in_visible",
]


@dataclass(frozen=True)
class VertexRestriction:
    """An ambient graph together with a vertex subset and its induced graph."""

    ambient: SimpleGraph
    ys: frozenset[str]
    induced: SimpleGraph = field(init=False, compare=False)

    def __init__(self, ambient: SimpleGraph, ys):
        sub = frozenset(ys)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "ys", sub)
        object.__setattr__(self, "induced", induced_subgraph(ambient, sub))


def alpha_include(w: Word, r: VertexRestriction) -> Word:
    """Reinterpret a word over the induced subgraph as a word over the
    ambient graph.  The letters are unchanged; the map is injective on group
    elements because the retraction undoes it."""
    for gen, _ in w.letters:
        if gen not in r.ys:
            raise InputError(f"letter over generator {gen!r} outside the subset")
    return Word(w.letters)


def rho_retract(w: Word, r: VertexRestriction) -> Word:
    """Delete every letter whose generator lies outside the subset.

    This is a homomorphism onto the subgroup: each defining commutation
    relation is either kept intact or killed entirely.
    """
    for gen, _ in w.letters:
        if gen not in r.ambient:
            raise InputError(f"letter over unknown generator {gen!r}")
    return Word(letter for letter in w.letters if letter.gen in r.ys)


def is_in_visible(w: Word, r: VertexRestriction) -> bool:
    """True iff ``w`` represents an element of the subgroup generated by the
    subset."""
    return support(w, r.ambient) <= r.ys


def rewrite_in_visible(w: Word, r: VertexRestriction) -> Optional[NormalWord]:
    """Canonical form of ``w`` as a word over the induced subgraph, or None
    when the element lies outside the subgroup.

    Split off from is_in_visible so that the identity element (whose
    canonical word is empty) is not conflated with non-membership.
    """
    ambient_nf = normal_form(w, r.ambient)
    if any(gen not in r.ys for gen, _ in ambient_nf.letters):
        return None
    return normal_form(ambient_nf, r.induced)
