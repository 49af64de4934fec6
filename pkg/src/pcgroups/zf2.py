"""A concrete failure of the Howson property inside Z x F2.

Write Z x F2 with central generator t and free generators a, b.  The
subgroups H = <a, b> and K = <ta, b> are both free of rank two, yet their
intersection consists of the words with zero a-exponent sum, i.e. the normal
closure of b in F2, generated by the conjugates a^-k b a^k over all integers
k and by no finite set.

Nothing here asserts the infinite statement directly.  For each bound m,
``certify_not_fg`` builds the Stallings automaton of the 2m+1 conjugates with
|k| <= m, checks that rank grew to 2m+1, and that the next conjugate
a^-(m+1) b a^(m+1) is rejected, so every candidate finite generating set is
defeated at some stage.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import SimpleGraph
from .stallings import StallingsGraph, from_generators
from .words import Word, format_word, normal_form

__all__ = [
    "FREE_ALPHABET",
    "ZF2Element",
    "NonFgCertificate",
    "eval_k_word",
    "intersection_ball",
    "conjugate_generators",
    "certify_not_fg",
]

FREE_ALPHABET = ("a", "b")
_FREE = SimpleGraph(FREE_ALPHABET)


def _a_power(n: int) -> Word:
    sign = 1 if n > 0 else -1
    return Word((("a", sign),) * abs(n))


def _is_reduced(w: Word) -> bool:
    return all(
        not (x.gen == y.gen and x.sign == -y.sign)
        for x, y in zip(w.letters, w.letters[1:])
    )


@dataclass(frozen=True)
class ZF2Element:
    """An element of Z x F2: the t-exponent and a reduced word over a, b."""

    t_exp: int
    word: Word

    def __post_init__(self):
        for gen, _ in self.word.letters:
            if gen not in FREE_ALPHABET:
                raise InputError(f"free part uses unknown generator {gen!r}")
        if not _is_reduced(self.word):
            raise InputError("free part must be freely reduced")

    def __mul__(self, other: "ZF2Element") -> "ZF2Element":
        return ZF2Element(
            self.t_exp + other.t_exp,
            normal_form(self.word * other.word, _FREE),
        )


def eval_k_word(w: Word) -> ZF2Element:
    """Image of a word under a -> ta, b -> b: since t is central, the
    t-exponent is the a-exponent sum of the word and the free part is its
    reduction."""
    t_exp = sum(sign for gen, sign in w.letters if gen == "a")
    return ZF2Element(t_exp, normal_form(w, _FREE))


def intersection_ball(L: int) -> set[Word]:
    """Every nontrivial reduced word of length at most L lying in both
    subgroups, i.e. with zero a-exponent sum."""
    if L < 1:
        raise InputError("ball radius must be >= 1")
    out: set[Word] = set()
    letters = [("a", 1), ("a", -1), ("b", 1), ("b", -1)]

    def grow(seq: list, a_sum: int) -> None:
        if seq and a_sum == 0:
            w = Word(seq)
            assert eval_k_word(w).t_exp == 0
            out.add(w)
        if len(seq) == L:
            return
        for gen, sign in letters:
            if seq and seq[-1] == (gen, -sign):
                continue
            seq.append((gen, sign))
            grow(seq, a_sum + (sign if gen == "a" else 0))
            seq.pop()

    grow([], 0)
    return out


def conjugate_generators(m: int) -> tuple[Word, ...]:
    """The words a^-k b a^k for k = -m..m."""
    if m < 0:
        raise InputError("m must be >= 0")
    return tuple(
        _a_power(-k) * Word.gen("b") * _a_power(k) if k else Word.gen("b")
        for k in range(-m, m + 1)
    )


@dataclass(frozen=True)
class NonFgCertificate:
    """Stage-m evidence that the intersection is not finitely generated:
    the 2m+1 conjugates miss the next one."""

    m: int
    rank: int
    element: Word
    generators: tuple[Word, ...]
    verdict: bool

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "rank": self.rank,
            "element": format_word(self.element),
            "verdict": "not_member" if self.verdict else "member",
        }


def certify_not_fg(m: int) -> NonFgCertificate:
    """Build and check the stage-m certificate.

    Raises RuntimeError if the automaton unexpectedly accepts the excluded
    conjugate; that would mean a bug in the construction, not new mathematics.
    """
    gens = conjugate_generators(m)
    sg: StallingsGraph = from_generators(gens, FREE_ALPHABET)
    element = _a_power(-(m + 1)) * Word.gen("b") * _a_power(m + 1)
    if sg.member(element):
        raise RuntimeError(
            f"stage {m}: the automaton accepted {format_word(element)}; "
            "the folding or membership code is broken"
        )
    return NonFgCertificate(
        m=m,
        rank=sg.rank(),
        element=element,
        generators=gens,
        verdict=True,
    )
