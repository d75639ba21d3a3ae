"""``parikhgraph`` command-line tool.

Every verb prints JSON to stdout (DOT for ``build --format dot``) and writes
diagnostics to stderr.  Exit codes: 0 success / suite passed, 1 a
counterexample was found, 2 usage, input or capacity error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import analysis, config, graphs, oracle, parikh, recognition
from .errors import CapacityError, NotRepresentableError, ParikhError
from .graphs import LabeledBipartiteGraph
from .words import Word, ascending, core, core_positions

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # report through our own exit path instead of SystemExit
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _word(args) -> Word:
    return Word.parse(args.word, args.alphabet_size)


def _read_graph(source: str) -> LabeledBipartiteGraph:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}")
    try:
        return LabeledBipartiteGraph.from_json(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{source}: invalid JSON ({exc.msg})")


def _apply_limits(args) -> None:
    """Flags win over the environment: ``--max-vertices`` raises or lowers every graph cap."""
    if getattr(args, "max_vertices", None) is not None and args.verb != "verify":
        os.environ["PARIKH_MAX_VERTICES"] = str(args.max_vertices)


# -- verbs -----------------------------------------------------------------


def cmd_build(args) -> int:
    pg = parikh.parikh_graph(_word(args))
    print(pg.to_dot() if args.format == "dot" else pg.to_json())
    return EXIT_OK


def cmd_synthesize(args) -> int:
    g = _read_graph(args.input)
    if not graphs.is_connected(g):
        w = recognition.synthesize_any(g)
        if w is None:
            raise NotRepresentableError("some component is not a bipartite permutation graph")
        _emit({"word": str(w), "alphabet_size": w.size})
        return EXIT_OK
    result = recognition.synthesize_word(g)
    report = {"word": str(result.word), "alphabet_size": result.word.size}
    if args.trace:
        report["trace"] = result.trace_dict()
        report["embedding"] = {str(v): pv.render(result.word.size) for v, pv in result.mapping.items()}
    _emit(report)
    return EXIT_OK


def recognize_report(g: LabeledBipartiteGraph, arity: str = "any") -> dict:
    report = {"representable": False, "arity": None, "word": None, "strong_ordering": None}
    connected = graphs.is_connected(g)
    if connected:
        ordering = recognition.find_strong_ordering(g)
        report["strong_ordering"] = ordering.to_dict() if ordering else None
    found = None
    if arity in ("2", "any") and connected:
        rec = recognition.recognize_binary(g)
        found = rec.word if rec else None
    if found is None and arity in ("3", "any") and connected:
        rec = recognition.recognize_ternary(g)
        found = rec.word if rec else None
    if found is None and arity == "any":
        found = recognition.synthesize_any(g)
    if found is not None:
        report.update(representable=True, arity=found.size, word=str(found))
    return report


def cmd_recognize(args) -> int:
    _emit(recognize_report(_read_graph(args.input), args.arity))
    return EXIT_OK


def cmd_diameter(args) -> int:
    _emit(analysis.diameter_report(_word(args), strict=False).to_dict())
    return EXIT_OK


def cmd_hamiltonian(args) -> int:
    w = _word(args)
    g = parikh.parikh_graph(w).graph
    report = {"word": str(w), "balanced": len(g.x) == len(g.y), "connected": graphs.is_connected(g),
              "criterion": None, "criterion_value": None}
    if w.size == 2:
        report["criterion"], report["criterion_value"] = "binary-prefix", analysis.binary_hamiltonian(w)
    elif w.size == 3 and report["balanced"] and report["connected"]:
        report["criterion"], report["criterion_value"] = "ternary-position", analysis.ternary_hamiltonian(w)
    elif report["connected"] and parikh.has_contiguous_support(w) and len(set(w.letters)) == w.size:
        ordering = parikh.canonical_strong_ordering(w)
        report["criterion"] = "consecutive-4-cycles"
        report["criterion_value"] = analysis.hamiltonian_via_strong_ordering(g, ordering)
    report["hamiltonian"] = graphs.has_hamiltonian_cycle(g)
    _emit(report)
    return EXIT_OK


def cmd_slender(args) -> int:
    classes = analysis.slender_classes(args.size)
    if args.count:
        print(len(classes))
        return EXIT_OK
    _emit({
        "s": args.size,
        "classes": len(classes),
        "partitions": analysis.partition_count(args.size),
        "words": sorted(str(w) for w in classes.values()),
    })
    return EXIT_OK


def cmd_longest_path(args) -> int:
    w = analysis.longest_path_word(args.arity)
    g = parikh.parikh_graph(w).graph
    _emit({"s": args.arity, "word": str(w), "vertices": len(g), "edges": len(g.edges),
           "is_path": analysis.is_path_graph(g)})
    return EXIT_OK


def cmd_compose(args) -> int:
    words = [Word.parse(text) for text in args.words]
    w = recognition.compose_components(words)
    g = parikh.parikh_graph(w).graph
    _emit({"word": str(w), "alphabet_size": w.size, "components": len(graphs.connected_components(g))})
    return EXIT_OK


def cmd_core(args) -> int:
    w = _word(args)
    pattern = Word.parse(args.pattern, w.size) if args.pattern else ascending(1, w.size, w.size)
    _emit({"word": str(w), "pattern": str(pattern), "core": str(core(w, pattern)),
           "positions": [p + 1 for p in core_positions(w, pattern)]})
    return EXIT_OK


def cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else config.limits().jobs
    if args.suite == "all":
        names = sorted(oracle.SUITES)
    else:
        names = [args.suite]
    status = EXIT_OK
    for name in names:
        sizes = None
        if args.alphabet_size is not None:
            lo = args.min_alphabet_size if args.min_alphabet_size is not None else min(2, args.alphabet_size)
            sizes = (lo, args.alphabet_size)
        lengths = None
        if args.max_len is not None:
            lengths = (args.min_len if args.min_len is not None else 1, args.max_len)
        spec = oracle.EnumerationSpec(name, sizes, lengths, args.max_vertices, jobs)
        result = oracle.run_suite(name, spec)
        for report in result.reports:
            print(report.to_json())
        print(result.to_json())
        if not result.passed:
            status = EXIT_COUNTEREXAMPLE
    return status


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parikhgraph", description="Parikh word representable graphs")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def word_verb(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("word", help="letters (abc...) or comma-separated integers")
        p.add_argument("--alphabet-size", type=int, help="alphabet size (default: largest letter used)")
        p.set_defaults(func=func)
        return p

    p = word_verb("build", cmd_build, "Parikh graph of a word")
    p.add_argument("--format", choices=("json", "dot"), default="json")

    for name, func, help_text in (("synthesize", cmd_synthesize, "representing word for a graph"),
                                  ("recognize", cmd_recognize, "is a graph Parikh word representable?")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", default="-", help="graph JSON file, or - for stdin")
        p.add_argument("--max-vertices", type=int, help="vertex cap for the exponential searches")
        p.set_defaults(func=func)
        if name == "synthesize":
            p.add_argument("--trace", action="store_true", help="include ordering, decomposition and steps")
        else:
            p.add_argument("--arity", choices=("2", "3", "any"), default="any")

    word_verb("diameter", cmd_diameter, "diameter of G(w) against its bound")
    p = word_verb("hamiltonian", cmd_hamiltonian, "Hamiltonicity of G(w): criterion and backtracking")
    p.add_argument("--max-vertices", type=int, help="vertex cap for the backtracking search")
    p = word_verb("core", cmd_core, "v-core of a word")
    p.add_argument("--pattern", help="pattern v (default: a_1 a_2 ... a_s)")

    p = sub.add_parser("slender", help="isomorphism classes of slender Parikh graphs")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print only the number of classes")
    p.set_defaults(func=cmd_slender)

    p = sub.add_parser("longest-path", help="word whose Parikh graph is the longest path")
    p.add_argument("--arity", type=int, required=True)
    p.set_defaults(func=cmd_longest_path)

    p = sub.add_parser("compose", help="combine words into one with disjoint components")
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", required=True, choices=sorted(oracle.SUITES) + ["all"])
    p.add_argument("--max-len", type=int)
    p.add_argument("--min-len", type=int)
    p.add_argument("--alphabet-size", type=int, help="largest alphabet size to enumerate")
    p.add_argument("--min-alphabet-size", type=int)
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    saved = os.environ.get("PARIKH_MAX_VERTICES")
    try:
        args = parser.parse_args(argv)
        _apply_limits(args)
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ParikhError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        if saved is None:
            os.environ.pop("PARIKH_MAX_VERTICES", None)
        else:
            os.environ["PARIKH_MAX_VERTICES"] = saved


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
