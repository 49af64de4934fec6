import json
import random

import pytest

from pcgroups import (
    ExplicitCatalogEntry,
    InputError,
    catalog_entry,
    classify,
    clique_number,
    complete_graph,
    cycle_graph,
    disjoint_union,
    edgeless_graph,
    embeds_in,
    explicit_catalog,
    find_induced_embedding,
    join,
    max_abelian_rank,
    path_graph,
)
from oracles import all_labeled_graphs, clique_oracle


def P3():
    return path_graph(("a", "b", "c"))


class TestClassify:
    def test_p3_is_not_howson(self):
        report = classify(P3())
        assert not report.howson
        assert report.contains_z_cross_f2
        assert not report.fully_residually_free
        assert not report.free_product_of_free_abelian
        assert report.p3_witness == ("a", "b", "c")
        assert report.factor_ranks is None
        assert report.max_abelian_rank == 2

    def test_clique_union_is_howson(self):
        g = disjoint_union(complete_graph(3, prefix="x"), complete_graph(("q",)))
        report = classify(g)
        assert report.howson and report.fully_residually_free
        assert report.factor_ranks == (3, 1)
        assert report.p3_witness is None
        assert report.max_abelian_rank == 3

    def test_z_cross_f2_itself(self):
        g = join(complete_graph(1, prefix="t"), edgeless_graph(2, prefix="f"))
        report = classify(g)
        assert not report.howson
        assert report.contains_z_cross_f2

    def test_empty_graph(self):
        report = classify(edgeless_graph(0))
        assert report.howson
        assert report.factor_ranks == ()
        assert report.max_abelian_rank == 0

    def test_fix_and_per_track_main_verdict(self):
        for g in (P3(), complete_graph(4), cycle_graph(5)):
            report = classify(g)
            assert report.fix_points_fg == report.howson
            assert report.per_points_fg == report.howson

    def test_equality_chain_exhaustive(self):
        for g in all_labeled_graphs(4):
            r = classify(g)
            assert (
                r.p3_free
                == r.fully_residually_free
                == r.howson
                == r.free_product_of_free_abelian
                == (not r.contains_z_cross_f2)
            )
            assert (r.factor_ranks is None) != (r.p3_witness is None)
            if r.p3_witness is not None:
                x, y, z = r.p3_witness
                assert g.adjacent(x, y) and g.adjacent(y, z) and not g.adjacent(x, z)
            else:
                assert sum(r.factor_ranks) == len(g.vertices)
                assert r.max_abelian_rank == (max(r.factor_ranks) if r.factor_ranks else 0)

    def test_verdict_monotone_under_embedding(self):
        rng = random.Random(61)
        hosts = [g for g in all_labeled_graphs(5) if rng.random() < 0.05]
        patterns = list(all_labeled_graphs(3))
        for host in hosts:
            for pattern in patterns:
                if find_induced_embedding(pattern, host) is None:
                    continue
                if not classify(pattern).howson:
                    assert not classify(host).howson


class TestReportJson:
    def test_key_order_and_values(self):
        d = classify(P3()).to_json_dict()
        assert list(d.keys()) == [
            "p3_free",
            "fully_residually_free",
            "howson",
            "contains_z_cross_f2",
            "free_product_of_free_abelian",
            "factor_ranks",
            "p3_witness",
            "fix_points_fg",
            "per_points_fg",
            "max_abelian_rank",
        ]
        assert d["p3_witness"] == ["a", "b", "c"]
        assert d["factor_ranks"] is None

    def test_ranks_as_descending_array(self):
        g = disjoint_union(complete_graph(2, prefix="x"), complete_graph(3, prefix="y"))
        d = json.loads(classify(g).to_json())
        assert d["factor_ranks"] == [3, 2]
        assert d["p3_witness"] is None


class TestCatalog:
    def test_entries_have_patterns_and_provenance(self):
        for entry in explicit_catalog():
            assert isinstance(entry, ExplicitCatalogEntry)
            assert entry.provenance

    def test_k_n(self):
        entry = catalog_entry("K_4")
        assert len(entry.pattern.vertices) == 4
        assert len(entry.pattern.edges) == 6

    def test_unknown_names_rejected(self):
        with pytest.raises(InputError):
            catalog_entry("Q7")
        with pytest.raises(InputError, match="F3"):
            catalog_entry("edgeless_3")
        with pytest.raises(InputError):
            catalog_entry("K_0")


class TestEmbedsIn:
    def test_p3_into_c4(self):
        assert embeds_in(catalog_entry("P3"), cycle_graph(4))

    def test_k3_not_into_c4(self):
        assert not embeds_in(catalog_entry("K_3"), cycle_graph(4))

    def test_f2_never_into_abelian(self):
        e2 = catalog_entry("edgeless_2")
        for n in range(1, 6):
            assert not embeds_in(e2, complete_graph(n))

    def test_trivial_group_embeds_everywhere(self):
        e0 = catalog_entry("edgeless_0")
        assert embeds_in(e0, edgeless_graph(0))
        assert embeds_in(e0, cycle_graph(4))

    def test_z_embeds_in_nontrivial(self):
        e1 = catalog_entry("edgeless_1")
        assert not embeds_in(e1, edgeless_graph(0))
        assert embeds_in(e1, complete_graph(1))

    def test_p4_and_c4(self):
        assert embeds_in(catalog_entry("P4"), path_graph(5))
        assert not embeds_in(catalog_entry("P4"), cycle_graph(4))
        assert embeds_in(catalog_entry("C4"), cycle_graph(4))
        assert not embeds_in(catalog_entry("C4"), complete_graph(4))

    def test_k_n_matches_clique_number(self):
        for g in all_labeled_graphs(4):
            k = clique_number(g)
            for n in range(1, 6):
                assert embeds_in(catalog_entry(f"K_{n}"), g) == (n <= k)

    def test_forged_entry_rejected(self):
        bogus = ExplicitCatalogEntry("P3", complete_graph(3), "made up")
        with pytest.raises(InputError, match="not detectable"):
            embeds_in(bogus, cycle_graph(4))
        bogus2 = ExplicitCatalogEntry("pentagon", cycle_graph(5), "made up")
        with pytest.raises(InputError):
            embeds_in(bogus2, cycle_graph(5))

    def test_p3_detects_non_howson(self):
        # mirror of the acceptance criterion at small scale
        entry = catalog_entry("P3")
        for g in all_labeled_graphs(4):
            assert embeds_in(entry, g) == (not classify(g).howson)


class TestMaxAbelianRank:
    def test_examples(self):
        assert max_abelian_rank(edgeless_graph(4)) == 1
        assert max_abelian_rank(complete_graph(6)) == 6
        for m in (1, 2, 3):
            for n in (1, 2):
                g = join(complete_graph(m, prefix="z"), edgeless_graph(n, prefix="f"))
                assert max_abelian_rank(g) == m + 1

    def test_against_subset_oracle(self):
        for g in all_labeled_graphs(5):
            assert max_abelian_rank(g) == clique_oracle(g)
