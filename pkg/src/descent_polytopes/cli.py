"""Command-line front end.

Exit codes: 0 success / verification passed, 1 verification failed,
2 usage or cap error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import ehrhart, fvector, geometry, inequality
from .algebra import phi_series
from .words import (
    XYWord,
    alternating_word,
    enumerate_factorizations,
    enumerate_words,
    format_set,
    iter_words,
    kappa,
    parse_word,
    word_from_set,
)

METHODS = ("direct", "recurrence", "factorization", "phi", "oracle")
SUITES = ("inequality", "table1", "maxima", "oracle", "ehrhart-pipeline")


class UsageError(Exception):
    pass


def _f_by_method(word: XYWord, method: str) -> list[int]:
    if method == "direct":
        return fvector.f_direct(word).f_vector
    if method == "recurrence":
        return fvector.f_recurrence(word).f_vector
    if method == "factorization":
        return fvector.f_factorization(word).f_vector
    if method == "phi":
        return fvector.f_phi(word).f_vector
    if method == "oracle":
        return geometry.f_vector_oracle(word).f_vector
    raise UsageError(f"unknown method {method!r}")


def _words_from_args(args) -> list[XYWord]:
    words = []
    if args.word is not None:
        words.extend(parse_word(w) for w in args.word)
    if args.set is not None:
        if args.n is None:
            raise UsageError("--set requires --n")
        elems = [int(e) for e in args.set.replace("{", "").replace("}", "").split(",") if e.strip()]
        words.append(word_from_set(args.n, elems))
    elif args.n is not None and args.word is None and getattr(args, "length", None) is None:
        words.extend(enumerate_words(args.n - 1))
    if getattr(args, "length", None) is not None:
        words.extend(enumerate_words(args.length))
    if not words:
        raise UsageError("give --word, --n/--set, or --length")
    return words


def cmd_fvector(args) -> tuple[int, object]:
    methods = METHODS if args.method == "all" else (args.method,)
    rows = []
    ok = True
    for word in _words_from_args(args):
        results = {}
        for m in methods:
            try:
                results[m] = _f_by_method(word, m)
            except ValueError as exc:
                raise UsageError(f"method {m}: {exc}") from None
        row = {"word": word.literal, "set": format_set(word), "n": word.n,
               "f_vector": results[methods[0]], "kappa": kappa(word)}
        if len(methods) > 1:
            row["methods"] = results
            row["agree"] = len({tuple(f) for f in results.values()}) == 1
            ok = ok and row["agree"]
        rows.append(row)
    return (0 if ok else 1), rows


def cmd_ehrhart(args) -> tuple[int, object]:
    rows = []
    for word in _words_from_args(args):
        try:
            row = ehrhart.ehrhart_polynomial(word).to_dict()
            row = {"word": row.pop("word"), "set": format_set(word), **row}
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.r is not None:
            row["r"] = args.r
            row["lattice_points"] = ehrhart.count_lattice_points(word, args.r)
        rows.append(row)
    return 0, rows


def _verify(suite: str, size: int | None) -> dict:
    if suite == "table1":
        rows = inequality.table1_rows()
        bad = next((r for r in rows if not r.ok), None)
        cases = {(r.u_end, r.v_start) for r in rows if r.ok}
        return {"suite": suite, "pass": bad is None, "rows_ok": f"{len(cases)}/9",
                "counterexample": None if bad is None else
                {"u_end": bad.u_end or "1", "v_start": bad.v_start or "1"}}
    if size is None:
        raise UsageError(f"suite {suite} needs --size")
    if suite == "inequality":
        if size > 12:
            raise UsageError("inequality suite is capped at |u|+|v| <= 12")
        checked, bad = inequality.verify_all_inequalities(size)
        return {"suite": suite, "pass": bad is None, "checked": checked,
                "counterexample": None if bad is None else
                {"u": bad.u.literal, "v": bad.v.literal, "difference": str(bad.difference)}}
    if suite == "maxima":
        if size > 12:
            raise UsageError("maxima suite is capped at n <= 12")
        ok, bad_n = inequality.verify_maxima(size)
        return {"suite": suite, "pass": ok, "max_n": size, "counterexample": bad_n}
    if suite == "oracle":
        if size > geometry.LATTICE_CAP:
            raise UsageError(f"oracle suite is capped at length {geometry.LATTICE_CAP}")
        checked = 0
        for word in iter_words(size):
            checked += 1
            if geometry.f_vector_oracle(word) != fvector.f_recurrence(word):
                return {"suite": suite, "pass": False, "checked": checked,
                        "counterexample": word.literal}
        return {"suite": suite, "pass": True, "checked": checked, "counterexample": None}
    if suite == "ehrhart-pipeline":
        if size > ehrhart.SERIES_TRUNC_CAP:
            raise UsageError(f"ehrhart-pipeline suite is capped at length {ehrhart.SERIES_TRUNC_CAP}")
        checked = 0
        for r in range(4):
            series = ehrhart.ehrhart_series(r, size, "I")
            for word in iter_words(size):
                checked += 1
                if series.coeff(word) != ehrhart.count_lattice_points(word, r):
                    return {"suite": suite, "pass": False, "checked": checked,
                            "counterexample": {"word": word.literal, "r": r}}
        return {"suite": suite, "pass": True, "checked": checked, "counterexample": None}
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(args) -> tuple[int, object]:
    report = _verify(args.suite, args.size)
    return (0 if report["pass"] else 1), report


def cmd_enumerate(args) -> tuple[int, object]:
    if args.what == "words":
        if args.length is None:
            raise UsageError("enumerate words needs --length")
        return 0, [{"word": w.literal, "set": format_set(w)} for w in enumerate_words(args.length)]
    words = _words_from_args(args)
    if len(words) != 1:
        raise UsageError(f"enumerate {args.what} takes a single word")
    word = words[0]
    if args.what == "factorizations":
        return 0, [[u.literal for u in f] for f in enumerate_factorizations(word)]
    if args.what == "vertices":
        return 0, [list(p) for p in geometry.enumerate_vertices(word)]
    if args.what == "faces":
        lattice = geometry.face_lattice(word)
        if args.format == "dot":
            return 0, lattice.to_dot()
        return 0, json.loads(lattice.to_json())
    raise UsageError(f"unknown enumeration {args.what!r}")


def cmd_series(args) -> tuple[int, object]:
    if args.trunc is None:
        raise UsageError("series needs --trunc")
    if args.kind == "phi":
        series = phi_series(args.trunc)
    else:
        if args.r is None:
            raise UsageError(f"series {args.kind} needs --r")
        series = ehrhart.ehrhart_series(args.r, args.trunc, args.kind)
    return 0, json.loads(series.to_json())


def _faces_t1(max_n: int) -> list[int]:
    return [int(fvector.f_alternating(n)(1)) for n in range(1, max_n + 1)]


def cmd_sequences(args) -> tuple[int, object]:
    max_n = args.max_n
    if max_n is None or not 1 <= max_n <= 30:
        raise UsageError("--max-n must lie in 1..30")
    if args.which == "faces-t1":
        seq = _faces_t1(max_n)
        from_gf = [int(a) for a in fvector.alternating_gf(max_n, 1)]
        recurrence_ok = all(seq[i] == 3 * seq[i - 1] - 2 * seq[i - 3] for i in range(3, max_n))
        ok = seq == from_gf and recurrence_ok
        return (0 if ok else 1), {"which": "faces-t1", "sequence": seq,
                                  "matches_generating_function": seq == from_gf,
                                  "recurrence_a_n=3a_(n-1)-2a_(n-3)": recurrence_ok}
    if args.which == "fibonacci":
        seq = [fvector.vertex_count(alternating_word(n - 1)) for n in range(1, max_n + 1)]
        fib = [1, 1]
        while len(fib) < max_n + 3:
            fib.append(fib[-1] + fib[-2])
        ok = seq == fib[2:max_n + 2]
        return (0 if ok else 1), {"which": "fibonacci", "sequence": seq, "matches_fibonacci": ok}
    raise UsageError(f"unknown sequence {args.which!r}")


def _render(payload, fmt: str) -> str:
    if isinstance(payload, str):
        return payload + "\n"
    if fmt == "json" or fmt == "dot":
        return json.dumps(payload, indent=2, default=str) + "\n"
    rows = payload if isinstance(payload, list) else [payload]
    if fmt == "csv":
        if rows and isinstance(rows[0], dict) and "f_vector" in rows[0]:
            width = max(len(r["f_vector"]) for r in rows)
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["word", "set", "n"] + [f"f_{i}" for i in range(width)])
            for r in rows:
                writer.writerow([r["word"], r["set"], r["n"]] + r["f_vector"]
                                + [""] * (width - len(r["f_vector"])))
            return buf.getvalue()
        buf = io.StringIO()
        if rows and isinstance(rows[0], dict):
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            for r in rows:
                writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                                 for k, v in r.items()})
        else:
            writer = csv.writer(buf, lineterminator="\n")
            for r in rows:
                writer.writerow(r if isinstance(r, list) else [r])
        return buf.getvalue()
    lines = []
    for r in rows:
        if isinstance(r, dict):
            lines.append("  ".join(f"{k}={v}" for k, v in r.items()))
        else:
            lines.append(" ".join(map(str, r)) if isinstance(r, list) else str(r))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="descent-polytopes",
                                     description="f-vectors and Ehrhart polynomials of descent polytopes")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, words=True):
        if words:
            p.add_argument("--word", action="append",
                           help="xy-word such as xyyx (1 for empty) or a set literal 5:{2,3}; repeatable")
            p.add_argument("--n", type=int, help="dimension; alone, selects all words of length n-1")
            p.add_argument("--set", help="descent set for --n, e.g. 2,3")
            p.add_argument("--length", type=int, help="all words of this length")
        p.add_argument("--format", choices=("json", "csv", "text", "dot"), default="json")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("fvector", help="f-vectors by one or all methods")
    common(p)
    p.add_argument("--method", choices=METHODS + ("all",), default="recurrence")
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("ehrhart", help="Ehrhart polynomial, volume and descent statistic")
    common(p)
    p.add_argument("--r", type=int, help="also report the lattice point count of the r-th dilate")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p, words=False)
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--size", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list words, factorizations, vertices or faces")
    common(p)
    p.add_argument("what", choices=("words", "factorizations", "vertices", "faces"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("series", help="truncated generating series as a word -> coefficient map")
    common(p, words=False)
    p.add_argument("--kind", choices=("phi", "A", "B", "I"), default="phi")
    p.add_argument("--trunc", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("sequences", help="numeric sequences for the alternating words")
    common(p, words=False)
    p.add_argument("which", choices=("faces-t1", "fibonacci"))
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_sequences)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = _render(payload, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
