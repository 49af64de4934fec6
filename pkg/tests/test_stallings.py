import random

import pytest

from pcgroups import (
    InputError,
    ParseError,
    Word,
    format_stallings,
    from_generators,
    parse_stallings,
    parse_word,
)
from oracles import free_reduce, random_reduced_word, subgroup_ball

AB = ("a", "b")


def w(text):
    return parse_word(text)


def random_subgroup(rng, max_gens=3, max_len=5):
    gens = []
    for _ in range(rng.randrange(1, max_gens + 1)):
        gens.append(Word(random_reduced_word(rng, "ab", max_len)))
    return gens


class TestFromGenerators:
    def test_whole_f2(self):
        sg = from_generators([w("a"), w("b")], AB)
        assert sg.num_states == 1
        assert sg.transitions == {(0, "a"): 0, (0, "b"): 0}
        assert sg.rank() == 2

    def test_trivial_subgroup(self):
        sg = from_generators([], AB)
        assert sg.num_states == 1
        assert sg.transitions == {}
        assert sg.rank() == 0
        assert sg.member(w(""))
        assert not sg.member(w("a"))

    def test_unreduced_and_trivial_words_ok(self):
        sg1 = from_generators([w("a b b^-1"), w("a a^-1"), w("b")], AB)
        sg2 = from_generators([w("a"), w("b")], AB)
        assert sg1 == sg2

    def test_conjugate_family_is_a_line_of_loops(self):
        for m in (0, 1, 2, 5):
            gens = [w(f"a^{-k} b a^{k}") if k else w("b") for k in range(-m, m + 1)]
            sg = from_generators(gens, AB)
            assert sg.num_states == 2 * m + 1
            b_loops = [(u, v) for (u, g), v in sg.transitions.items() if g == "b"]
            a_edges = [(u, v) for (u, g), v in sg.transitions.items() if g == "a"]
            assert len(b_loops) == 2 * m + 1 and all(u == v for u, v in b_loops)
            assert len(a_edges) == 2 * m and all(u != v for u, v in a_edges)
            assert sg.rank() == 2 * m + 1

    def test_unknown_generator_rejected(self):
        with pytest.raises(InputError, match="'c'"):
            from_generators([w("c")], AB)

    def test_folding_confluent_under_permutation(self):
        rng = random.Random(67)
        for _ in range(50):
            gens = random_subgroup(rng)
            reference = from_generators(gens, AB)
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert from_generators(shuffled, AB) == reference
            # inverting a generator does not change the subgroup either
            flipped = [g.inverse() if rng.random() < 0.5 else g for g in gens]
            assert from_generators(flipped, AB) == reference

    def test_invariant_under_nielsen_moves(self):
        # <u, v>, <u, uv>, <uv, v>, <u^-1, v> ... all present the same
        # subgroup, so they must fold to the identical automaton
        rng = random.Random(68)
        for _ in range(60):
            u = Word(random_reduced_word(rng, "ab", 6))
            v = Word(random_reduced_word(rng, "ab", 6))
            reference = from_generators([u, v], AB)
            for gens in ([u, u * v], [u * v, v], [u, v * u], [~u, v], [u, ~u * v]):
                assert from_generators(gens, AB) == reference


class TestMember:
    def test_empty_word_always(self):
        rng = random.Random(71)
        for _ in range(20):
            sg = from_generators(random_subgroup(rng), AB)
            assert sg.member(w(""))

    def test_a_squared(self):
        sg = from_generators([w("a^2")], AB)
        assert sg.member(w("a^2")) and sg.member(w("a^-4"))
        assert not sg.member(w("a^3")) and not sg.member(w("a"))
        # matches enumeration of <a^2>: six factors reach a^(2j) for |j| <= 6
        ball = subgroup_ball([w("a^2")], 6)
        for k in range(-8, 9):
            word = w(f"a^{k}") if k else w("")
            in_ball = free_reduce(tuple(word.letters)) in ball
            assert in_ball == (k % 2 == 0)
            assert sg.member(word) == in_ball

    def test_excluded_conjugate(self):
        for m in (0, 1, 3):
            gens = [w(f"a^{-k} b a^{k}") if k else w("b") for k in range(-m, m + 1)]
            sg = from_generators(gens, AB)
            assert not sg.member(w(f"a^{m+1} b a^{-(m+1)}"))
            assert not sg.member(w(f"a^{-(m+1)} b a^{m+1}"))

    def test_generators_are_members(self):
        rng = random.Random(73)
        for _ in range(50):
            gens = random_subgroup(rng)
            sg = from_generators(gens, AB)
            for g in gens:
                assert sg.member(g)
                assert sg.member(g.inverse())

    def test_accepts_every_bounded_product(self):
        rng = random.Random(79)
        for _ in range(30):
            gens = random_subgroup(rng)
            sg = from_generators(gens, AB)
            for el in subgroup_ball(gens, 6):
                assert sg.member(Word(el))

    def test_prefix_exponent_negatives(self):
        # independent necessary condition for the conjugate family: inside
        # <a^-k b a^k : |k| <= m> every prefix of a reduced member has
        # a-exponent sum within [-m, m]
        rng = random.Random(83)
        m = 2
        gens = [w(f"a^{-k} b a^{k}") if k else w("b") for k in range(-m, m + 1)]
        sg = from_generators(gens, AB)
        for _ in range(300):
            word = free_reduce(random_reduced_word(rng, "ab", 8))
            if sg.member(Word(word)):
                prefix_sums = [0]
                for gen, sign in word:
                    prefix_sums.append(prefix_sums[-1] + (sign if gen == "a" else 0))
                assert all(-m <= s <= m for s in prefix_sums)

    def test_unknown_letter_rejected(self):
        sg = from_generators([w("a")], AB)
        with pytest.raises(InputError):
            sg.member(w("q"))


class TestRank:
    def test_examples(self):
        assert from_generators([w("a"), w("b")], AB).rank() == 2
        assert from_generators([], AB).rank() == 0
        assert from_generators([w("a^2"), w("b a b^-1")], AB).rank() == 2

    def test_at_most_generator_count(self):
        rng = random.Random(89)
        for _ in range(100):
            gens = random_subgroup(rng)
            assert from_generators(gens, AB).rank() <= len(gens)


class TestIntersect:
    def test_with_whole_group_is_identity(self):
        whole = from_generators([w("a"), w("b")], AB)
        rng = random.Random(97)
        for _ in range(30):
            sg = from_generators(random_subgroup(rng), AB)
            assert whole.intersect(sg) == sg
            assert sg.intersect(whole) == sg

    def test_self_intersection(self):
        rng = random.Random(101)
        for _ in range(30):
            sg = from_generators(random_subgroup(rng), AB)
            assert sg.intersect(sg) == sg

    def test_powers_of_a(self):
        sg1 = from_generators([w("a^2"), w("b")], AB)
        sg2 = from_generators([w("a^3"), w("b")], AB)
        meet = sg1.intersect(sg2)
        assert meet.member(w("a^6")) and meet.member(w("b"))
        assert not meet.member(w("a^2")) and not meet.member(w("a^3"))
        assert meet.rank() == 2

    def test_alphabet_mismatch(self):
        sg1 = from_generators([w("a")], AB)
        sg2 = from_generators([w("a")], ("a", "c"))
        with pytest.raises(InputError):
            sg1.intersect(sg2)

    def test_membership_against_both_sides(self):
        rng = random.Random(103)
        for _ in range(40):
            g1, g2 = random_subgroup(rng), random_subgroup(rng)
            sg1, sg2 = from_generators(g1, AB), from_generators(g2, AB)
            meet = sg1.intersect(sg2)
            assert meet.rank() >= 0
            for _ in range(40):
                word = Word(random_reduced_word(rng, "ab", 8))
                assert meet.member(word) == (sg1.member(word) and sg2.member(word))

    def test_bounded_products_in_both_are_members(self):
        rng = random.Random(107)
        for _ in range(20):
            g1, g2 = random_subgroup(rng), random_subgroup(rng)
            meet = from_generators(g1, AB).intersect(from_generators(g2, AB))
            common = subgroup_ball(g1, 5) & subgroup_ball(g2, 5)
            for el in common:
                assert meet.member(Word(el))


class TestSerialization:
    def test_roundtrip(self):
        rng = random.Random(109)
        for _ in range(40):
            sg = from_generators(random_subgroup(rng), AB)
            assert parse_stallings(format_stallings(sg)) == sg

    def test_base_on_first_line(self):
        sg = from_generators([w("a^2")], AB)
        lines = format_stallings(sg).splitlines()
        assert lines[0] == "0 a b"
        assert len(lines) == 1 + len(sg.transitions)

    def test_bare_base_line_still_parses(self):
        back = parse_stallings("0\n0 a 0\n")
        assert back.alphabet == ("a",) and back.rank() == 1

    def test_parse_rejects_garbage_base(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_stallings("base\n0 a 1\n")

    def test_parse_rejects_bad_arity(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_stallings("0\n0 a\n")

    def test_parse_rejects_unfolded(self):
        with pytest.raises(ParseError, match="not folded"):
            parse_stallings("0\n0 a 1\n0 a 2\n1 b 1\n2 b 2\n")

    def test_parse_rejects_non_core(self):
        with pytest.raises(ParseError, match="core"):
            parse_stallings("0\n0 a 0\n0 b 1\n")

    def test_parse_rejects_disconnected(self):
        with pytest.raises(ParseError, match="connected"):
            parse_stallings("0\n0 a 0\n1 b 1\n")

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_stallings("")

    def test_trivial_roundtrip(self):
        sg = from_generators([], AB)
        back = parse_stallings(format_stallings(sg))
        assert back.num_states == 1 and back.transitions == {}


def test_to_dot_mentions_every_edge():
    sg = from_generators([w("a^2"), w("b")], AB)
    dot = sg.to_dot()
    assert dot.startswith("digraph")
    assert "doublecircle" in dot
    for u, g, v in sg.edges():
        assert f'{u} -> {v} [label="{g}"];' in dot
