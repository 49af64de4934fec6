"""The classification of graph groups by intersection behaviour.

For a finite simple graph the following are equivalent, and ``classify``
decides them all at once: the group is Howson (intersections of finitely
generated subgroups stay finitely generated), it is fully residually free, it
is a free product of free-abelian groups, it avoids Z x F2 as a subgroup, and
the graph has no induced path on three vertices.  The report carries a
constructive witness either way: the free-abelian ranks of the free factors,
or an induced-P3 triple.

``embeds_in`` answers "does the group of this pattern embed in the group of
that graph" for the small catalog of patterns where subgroup embedding is
equivalent to induced-subgraph containment.  That equivalence fails in
general (F3 embeds in F2 while a 3-vertex edgeless graph never embeds in a
2-vertex one), so non-catalog patterns are rejected outright.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import InputError
from .graphs import (
    SimpleGraph,
    clique_number,
    complete_decomposition,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    find_induced_embedding,
    find_induced_p3,
    path_graph,
)

__all__ = [
    "ClassificationReport",
    "classify",
    "ExplicitCatalogEntry",
    "catalog_entry",
    "explicit_catalog",
    "embeds_in",
    "max_abelian_rank",
]


@dataclass(frozen=True)
class ClassificationReport:
    """Full verdict for one graph; the five booleans always agree (the last
    one negated) and exactly one witness field is populated."""

    p3_free: bool
    fully_residually_free: bool
    howson: bool
    contains_z_cross_f2: bool
    free_product_of_free_abelian: bool
    factor_ranks: Optional[tuple[int, ...]]
    p3_witness: Optional[tuple[str, str, str]]
    fix_points_fg: bool
    per_points_fg: bool
    max_abelian_rank: int

    def to_json_dict(self) -> dict:
        return {
            "p3_free": self.p3_free,
            "fully_residually_free": self.fully_residually_free,
            "howson": self.howson,
            "contains_z_cross_f2": self.contains_z_cross_f2,
            "free_product_of_free_abelian": self.free_product_of_free_abelian,
            "factor_ranks": list(self.factor_ranks) if self.factor_ranks is not None else None,
            "p3_witness": list(self.p3_witness) if self.p3_witness is not None else None,
            "fix_points_fg": self.fix_points_fg,
            "per_points_fg": self.per_points_fg,
            "max_abelian_rank": self.max_abelian_rank,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def classify(g: SimpleGraph) -> ClassificationReport:
    """Decide every condition of the classification for a finite graph.

    The fixed-point and periodic-point verdicts (finitely generated for every
    endomorphism) coincide with the main verdict on finite graphs and are
    reported as such; no endomorphism computation takes place.
    """
    witness = find_induced_p3(g)
    ranks = complete_decomposition(g)
    good = witness is None
    if good != (ranks is not None):  # pragma: no cover - the two searches agree
        raise AssertionError("P3 search and clique decomposition disagree")
    return ClassificationReport(
        p3_free=good,
        fully_residually_free=good,
        howson=good,
        contains_z_cross_f2=not good,
        free_product_of_free_abelian=good,
        factor_ranks=ranks if good else None,
        p3_witness=witness,
        fix_points_fg=good,
        per_points_fg=good,
        max_abelian_rank=clique_number(g),
    )


def max_abelian_rank(g: SimpleGraph) -> int:
    """Largest rank of a free-abelian subgroup of the graph group: the clique
    number of the graph."""
    return clique_number(g)


@dataclass(frozen=True)
class ExplicitCatalogEntry:
    """A pattern whose group embeds in another graph group exactly when the
    pattern appears as an induced subgraph, with a provenance note."""

    name: str
    pattern: SimpleGraph
    provenance: str


_PROVENANCE = {
    "K": "complete graphs: the maximal free-abelian rank equals the clique number (Kim-Koberda 2013, Lemma 18)",
    "edgeless_0": "the trivial group embeds everywhere and only the empty graph presents it",
    "edgeless_1": "Z embeds exactly in the nontrivial graph groups",
    "edgeless_2": "F2 embeds unless the group is abelian, i.e. unless the graph is complete",
    "P3": "consequence of the Howson classification: Z x F2 embeds iff an induced P3 exists",
    "P4": "Kim-Koberda 2013: embedding of the P4 group forces an induced P4",
    "C4": "Kambites 2009: commuting non-cyclic centralizers force an induced square",
}


def catalog_entry(name: str) -> ExplicitCatalogEntry:
    """Build the catalog entry for one of: K_<n>, P3, P4, C4, edgeless_0,
    edgeless_1, edgeless_2."""
    if name.startswith("K_"):
        try:
            n = int(name[2:])
        except ValueError:
            raise InputError(f"bad complete-graph name {name!r}") from None
        if n < 1:
            raise InputError("K_n needs n >= 1")
        return ExplicitCatalogEntry(name, complete_graph(n, prefix="k"), _PROVENANCE["K"])
    if name.startswith("edgeless_"):
        if name not in ("edgeless_0", "edgeless_1", "edgeless_2"):
            raise InputError(
                f"{name!r} is not explicit: edgeless graphs with 3+ vertices are "
                "not, since F3 embeds in F2"
            )
        n = int(name[len("edgeless_") :])
        return ExplicitCatalogEntry(name, edgeless_graph(n, prefix="e"), _PROVENANCE[name])
    if name == "P3":
        return ExplicitCatalogEntry(name, path_graph(3, prefix="p"), _PROVENANCE["P3"])
    if name == "P4":
        return ExplicitCatalogEntry(name, path_graph(4, prefix="p"), _PROVENANCE["P4"])
    if name == "C4":
        return ExplicitCatalogEntry(name, cycle_graph(4, prefix="c"), _PROVENANCE["C4"])
    raise InputError(
        f"{name!r} is not in the explicit catalog; subgroup embedding between "
        "graph groups is not detectable from induced subgraphs in general"
    )


def explicit_catalog() -> tuple[ExplicitCatalogEntry, ...]:
    """The non-parametric catalog members (complete graphs come from
    catalog_entry('K_n'))."""
    return tuple(
        catalog_entry(n)
        for n in ("edgeless_0", "edgeless_1", "edgeless_2", "P3", "P4", "C4")
    )


def _degree_multiset(g: SimpleGraph) -> tuple[int, ...]:
    return tuple(sorted(len(g.neighbors(v)) for v in g.vertices))


def _entry_shape_ok(entry: ExplicitCatalogEntry) -> bool:
    g = entry.pattern
    n = len(g.vertices)
    e = len(g.edges)
    name = entry.name
    if name == f"K_{n}" and name.startswith("K_"):
        return n >= 1 and e == n * (n - 1) // 2
    if name == f"edgeless_{n}":
        return n <= 2 and e == 0
    if name == "P3":
        return n == 3 and e == 2 and _degree_multiset(g) == (1, 1, 2)
    if name == "P4":
        return n == 4 and e == 3 and _degree_multiset(g) == (1, 1, 2, 2)
    if name == "C4":
        return n == 4 and e == 4 and _degree_multiset(g) == (2, 2, 2, 2)
    return False


def embeds_in(pattern_entry: ExplicitCatalogEntry, host: SimpleGraph) -> bool:
    """True iff the pattern's group embeds in the host's group.

    Only valid for catalog entries; anything else raises, because for general
    graphs subgroup embedding does not reduce to the induced-subgraph
    question.  Complete patterns are answered through the clique number, the
    rest through induced-pattern search.
    """
    if not _entry_shape_ok(pattern_entry):
        raise InputError(
            f"pattern {pattern_entry.name!r} does not match the explicit catalog; "
            "group embedding is not detectable from induced subgraphs in general"
        )
    if pattern_entry.name.startswith("K_"):
        return clique_number(host) >= len(pattern_entry.pattern.vertices)
    return find_induced_embedding(pattern_entry.pattern, host) is not None
