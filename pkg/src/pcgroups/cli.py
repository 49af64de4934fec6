"""Command-line front end.

Results go to stdout as JSON with stable key order; diagnostics go to stderr.
Exit codes: 0 success, 2 malformed input.  Yes/no commands report their
verdict inside the JSON; with ``--exit-status`` they additionally exit 1 on a
negative verdict.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import catalog_entry, classify, embeds_in
from .errors import InputError, ParseError
from .graphs import SimpleGraph, complete_decomposition, find_induced_p3, parse_graph, reflexive_closure_is_transitive
from .stallings import format_stallings, from_generators
from .visible import VertexRestriction, is_in_visible, rewrite_in_visible
from .words import format_word, normal_form, parse_word, support
from .zf2 import certify_not_fg

__all__ = ["run", "main"]


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> SimpleGraph:
    return parse_graph(_read(path))


def _load_words(path: str):
    words = []
    for lineno, line in enumerate(_read(path).splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            words.append(parse_word(stripped))
        except InputError as exc:
            raise ParseError(f"{path}: {exc}", line=lineno) from None
    return words


def _emit(obj, stdout) -> None:
    stdout.write(json.dumps(obj) + "\n")


def _cmd_classify(args, stdout) -> int:
    report = classify(_load_graph(args.graph))
    _emit(report.to_json_dict(), stdout)
    return 0 if report.howson or not args.exit_status else 1


def _cmd_normal_form(args, stdout) -> int:
    g = _load_graph(args.graph)
    nf = normal_form(parse_word(args.word), g)
    _emit(
        {
            "normal_form": format_word(nf),
            "length": len(nf),
            "support": sorted({gen for gen, _ in nf.letters}),
        },
        stdout,
    )
    return 0


def _cmd_equal(args, stdout) -> int:
    g = _load_graph(args.graph)
    left = normal_form(parse_word(args.word1), g)
    right = normal_form(parse_word(args.word2), g)
    verdict = left.letters == right.letters
    _emit(verdict, stdout)
    return 0 if verdict or not args.exit_status else 1


def _cmd_member_visible(args, stdout) -> int:
    g = _load_graph(args.graph)
    r = VertexRestriction(g, args.subset.split())
    w = parse_word(args.word)
    member = is_in_visible(w, r)
    rewritten = rewrite_in_visible(w, r)
    _emit(
        {
            "member": member,
            "rewritten": format_word(rewritten) if rewritten is not None else None,
        },
        stdout,
    )
    return 0 if member or not args.exit_status else 1


def _cmd_embed(args, stdout) -> int:
    entry = catalog_entry(args.pattern)
    verdict = embeds_in(entry, _load_graph(args.graph))
    _emit({"pattern": entry.name, "embeds": verdict}, stdout)
    return 0 if verdict or not args.exit_status else 1


def _cmd_intersect_free(args, stdout) -> int:
    alphabet = args.alphabet.split()
    if not alphabet:
        raise InputError("--alphabet must list at least one generator")
    sg1 = from_generators(_load_words(args.generators1), alphabet)
    sg2 = from_generators(_load_words(args.generators2), alphabet)
    meet = sg1.intersect(sg2)
    for path, text in ((args.out, format_stallings(meet)), (args.dot, meet.to_dot())):
        if not path:
            continue
        try:
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {path}: {exc.strerror}") from None
    _emit(
        {"rank": meet.rank(), "states": meet.num_states, "edges": len(meet.transitions)},
        stdout,
    )
    return 0


def _cmd_demo_nonhowson(args, stdout) -> int:
    if args.m < 0:
        raise InputError("--m must be >= 0")
    _emit(certify_not_fg(args.m).to_json_dict(), stdout)
    return 0


def _cmd_self_check(args, stdout) -> int:
    from itertools import combinations

    names = ("a", "b", "c", "d", "e")
    checked = 0
    disagreements = 0
    for n in range(6):
        verts = names[:n]
        pairs = list(combinations(verts, 2))
        for mask in range(1 << len(pairs)):
            g = SimpleGraph(verts, (p for i, p in enumerate(pairs) if mask >> i & 1))
            checked += 1
            p3_free = find_induced_p3(g) is None
            transitive = reflexive_closure_is_transitive(g)
            decomposes = complete_decomposition(g) is not None
            if not (p3_free == transitive == decomposes):
                disagreements += 1
    _emit(
        {"graphs_checked": checked, "disagreements": disagreements, "ok": disagreements == 0},
        stdout,
    )
    return 0 if disagreements == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcgroups",
        description="Decide Howson / fully residually free / free product of "
        "free-abelian for the group presented by a graph, and work with the "
        "supporting machinery.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full classification report for a graph file")
    p.add_argument("graph")
    p.add_argument("--exit-status", action="store_true", help="exit 1 when not Howson")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("normal-form", help="canonical form of a word over a graph")
    p.add_argument("graph")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_normal_form)

    p = sub.add_parser("equal", help="do two words represent the same element?")
    p.add_argument("graph")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--exit-status", action="store_true", help="exit 1 when unequal")
    p.set_defaults(handler=_cmd_equal)

    p = sub.add_parser(
        "member-visible", help="membership in the subgroup generated by a vertex subset"
    )
    p.add_argument("graph")
    p.add_argument("subset", help="whitespace-separated vertex names")
    p.add_argument("word")
    p.add_argument("--exit-status", action="store_true", help="exit 1 when not a member")
    p.set_defaults(handler=_cmd_member_visible)

    p = sub.add_parser(
        "embed", help="does the catalog pattern's group embed in the graph's group?"
    )
    p.add_argument("pattern", help="K_<n>, P3, P4, C4, edgeless_0, edgeless_1 or edgeless_2")
    p.add_argument("graph")
    p.add_argument("--exit-status", action="store_true", help="exit 1 when it does not embed")
    p.set_defaults(handler=_cmd_embed)

    p = sub.add_parser(
        "intersect-free", help="intersect two subgroups of a free group"
    )
    p.add_argument("--alphabet", required=True, help="whitespace-separated generators")
    p.add_argument("generators1", help="file with one generator word per line")
    p.add_argument("generators2", help="file with one generator word per line")
    p.add_argument("--out", help="write the intersection automaton (text serialization)")
    p.add_argument("--dot", help="write the intersection automaton as DOT")
    p.set_defaults(handler=_cmd_intersect_free)

    p = sub.add_parser(
        "demo-nonhowson", help="stage-m certificate that Z x F2 is not Howson"
    )
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=_cmd_demo_nonhowson)

    p = sub.add_parser(
        "self-check", help="sweep all graphs on <= 5 vertices for classifier agreement"
    )
    p.set_defaults(handler=_cmd_self_check)

    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args, stdout)
    except InputError as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def main() -> int:
    return run()
