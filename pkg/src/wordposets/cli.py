"""Command-line interface.

One command per invocation.  Counting commands print a single decimal
integer; ``--json`` wraps the result as {command, input, value} instead.
Exit codes: 0 success, 1 usage or input error, 2 computation budget
exceeded, 3 oracle cross-check mismatch (``check`` only).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import networks, reduced, trace
from .alphabet import CommutationAlphabet, parse_alphabet
from .coxeter import INFINITY, parse_graph
from .errors import BudgetError, GraphParseError, NotReducedError, SignToleranceError
from .poset import build_word_poset, count_linear_extensions

__all__ = ["run", "main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract here reserves
    # 2 for budget failures, so usage problems become exceptions instead
    def error(self, message):
        raise _UsageError(message)


def _read_file(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_graph(path):
    return parse_graph(_read_file(path))


def _load_alphabet(path):
    return parse_alphabet(_read_file(path))


def _parse_index_word(text):
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError:
        raise _UsageError(
            f"bad word {text!r}: expected space-separated generator indices") from None


def _parse_trace_word(text, alphabet):
    """Space-separated symbols, or one contiguous string of one-character
    symbols when there is no whitespace."""
    tokens = text.split()
    if len(tokens) == 1 and all(ch in alphabet for ch in tokens[0]):
        return tuple(tokens[0])
    return tuple(tokens)


def _parse_label_set(text):
    labels = set()
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok == "inf":
            labels.add(INFINITY)
        else:
            try:
                labels.add(int(tok))
            except ValueError:
                raise _UsageError(f"bad label {tok!r} in --labels") from None
    if not labels:
        raise _UsageError("--labels must name at least one label")
    return labels


def _emit(args, command, payload, value, extra=None):
    if getattr(args, "json", False):
        doc = {"command": command, "input": payload, "value": value}
        if extra:
            doc.update(extra)
        print(json.dumps(doc))
    elif isinstance(value, list):
        for item in value:
            print(item)
    else:
        print(value)


def _cmd_count_classes(args):
    graph = _load_graph(args.graph)
    word = _parse_index_word(args.word)
    value = reduced.count_classes(graph, word)
    _emit(args, "count-classes", {"graph": args.graph, "word": list(word)}, value)
    return 0


def _cmd_count_reduced(args):
    graph = _load_graph(args.graph)
    word = _parse_index_word(args.word)
    value = reduced.count_reduced_words(graph, word)
    _emit(args, "count-reduced", {"graph": args.graph, "word": list(word)}, value)
    return 0


def _cmd_enum_classes(args):
    graph = _load_graph(args.graph)
    word = _parse_index_word(args.word)
    for class_word in reduced.wp_set(graph, word).posets:
        print(" ".join(str(a) for a in class_word))
    return 0


def _cmd_trace_count(args):
    alphabet = _load_alphabet(args.alphabet)
    word = _parse_trace_word(args.word, alphabet)
    value = trace.count_class(word, alphabet)
    _emit(args, "trace-count", {"alphabet": args.alphabet, "word": list(word)}, value)
    return 0


def _cmd_poset(args):
    graph = _load_graph(args.graph)
    word = _parse_index_word(args.word)
    alphabet = CommutationAlphabet.from_coxeter(graph)
    p = build_word_poset(word, alphabet)
    if args.format == "json":
        print(json.dumps(p.to_json_dict()))
    elif args.format == "dot":
        print(p.to_dot(), end="")
    else:
        print(f"elements: {len(p)}")
        print("labels:", " ".join(str(s) for s in p.labels))
        for x, y in p.covers():
            print(f"cover: {x} {y}")
    return 0


def _cmd_pn(args):
    value = networks.p_n(args.n)
    _emit(args, "pn", {"n": args.n}, value)
    return 0


def _cmd_pseq(args):
    values = networks.p_sequence(args.n)
    _emit(args, "pseq", {"n": args.n}, values)
    return 0


def _cmd_limit_bound(args):
    p_m = args.pm if args.pm is not None else networks.p_n(args.m)
    value = networks.limit_lower_bound(args.m, p_m)
    if getattr(args, "json", False):
        _emit(args, "limit-bound", {"m": args.m, "pm": p_m}, value)
    else:
        print(f"{value:.6f}")
    return 0


def _cmd_search_mk(args):
    labels = _parse_label_set(args.labels)
    result = networks.search_M(args.k, labels, args.max_rank)
    extra = {
        "witness_graph": result.graph.to_json_dict(),
        "witness_word": list(result.word),
    }
    _emit(args, "search-mk",
          {"k": args.k, "labels": args.labels, "max_rank": args.max_rank},
          result.value, extra)
    return 0


def _cmd_check(args):
    graph = _load_graph(args.graph)
    word = _parse_index_word(args.word)
    wp = reduced.wp_set(graph, word)
    poset_reduced = sum(count_linear_extensions(p) for p in wp)
    recursion_classes = reduced.count_classes(graph, word)
    oracle_words, oracle_classes = reduced.oracle_reduced(graph, word)
    failed = False

    if poset_reduced == len(oracle_words):
        print(f"reduced-count: PASS ({poset_reduced})")
    else:
        failed = True
        print(f"reduced-count: FAIL (poset route {poset_reduced}, "
              f"oracle {len(oracle_words)})")

    if recursion_classes == oracle_classes == len(wp):
        print(f"class-count: PASS ({recursion_classes})")
    else:
        failed = True
        print(f"class-count: FAIL (recursion {recursion_classes}, "
              f"oracle {oracle_classes}, posets {len(wp)})")

    if not word:
        print("bound: SKIP (identity)")
    elif reduced.bound_check(graph, word):
        print("bound: PASS")
    else:
        failed = True
        print("bound: FAIL")

    return 3 if failed else 0


def _build_parser():
    parser = _Parser(prog="wordposets",
                     description="Commutation classes, word posets, and "
                                 "reduced-word counting.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("count-classes", _cmd_count_classes,
            "number of commutation classes of reduced words")
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")

    p = add("count-reduced", _cmd_count_reduced, "number of reduced words")
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")

    p = add("enum-classes", _cmd_enum_classes,
            "canonical word of every commutation class, one per line")
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True)

    p = add("trace-count", _cmd_trace_count, "size of a commutation class")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")

    p = add("poset", _cmd_poset, "word poset of a word")
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")

    p = add("pn", _cmd_pn, "number of primitive sorting networks on n wires")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("pseq", _cmd_pseq, "sorting network counts for 1..n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("limit-bound", _cmd_limit_bound,
            "lower bound for the growth rate from a known P(m)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pm", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = add("search-mk", _cmd_search_mk,
            "largest class count over elements of length k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--labels", default="2,3,inf")
    p.add_argument("--max-rank", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = add("check", _cmd_check, "cross-check counts against the oracle")
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        # argparse --help exits 0 through here
        return int(exc.code or 0)
    except (GraphParseError, NotReducedError, SignToleranceError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
