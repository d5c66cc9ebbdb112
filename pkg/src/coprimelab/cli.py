"""Command-line surface: canonical JSON to stdout, human summary to stderr.

Exit codes: 0 success, 1 invariant failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .automorphisms import factorization_status, nilpotent_decompose, twisted_data
from .corpus import build_glauberman_example, default_corpus, load_instance
from .errors import (CapExceeded, GroupTheoryError, InvalidPermutation, NotBijective,
                     NotHomomorphism, ParseError, UnknownSpec)
from .lie import (build_graded_lie, check_lazard_all, check_riley, extend_and_eigendecompose,
                  jlz_series, verify_eigen_product_rule, verify_np_series)
from .numutil import factorization
from .report import analyze_instance, canonical_json, run_suite

_INPUT_ERRORS = (ParseError, UnknownSpec, InvalidPermutation, NotBijective,
                 NotHomomorphism, CapExceeded, json.JSONDecodeError, KeyError, ValueError)


def _load_file(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top-level JSON value must be an object")
    return data


def _emit(payload: dict) -> None:
    sys.stdout.write(canonical_json(payload) + "\n")


def _detect_p(G) -> Optional[int]:
    fac = factorization(G.order) if G.order > 1 else {}
    return next(iter(fac)) if len(fac) == 1 else None


def cmd_info(args) -> int:
    spec = _load_file(args.file)
    report = analyze_instance(spec, cap=args.cap)
    _emit(report["group"])
    print(f"info: order {report['group']['order']}, exponent {report['group']['exponent']}",
          file=sys.stderr)
    return 0


def cmd_auto(args) -> int:
    spec = _load_file(args.file)
    report = analyze_instance(spec, cap=args.cap)
    if report["automorphism"] is None:
        raise ParseError("input carries no automorphism")
    _emit(report["automorphism"])
    fails = sum(1 for _ in _walk_fails(report["automorphism"]))
    print(f"auto: {'ok' if not fails else f'{fails} failing checks'}", file=sys.stderr)
    return 1 if fails else 0


def _walk_fails(node):
    if isinstance(node, str):
        if node == "fail":
            yield node
    elif isinstance(node, dict):
        for v in node.values():
            yield from _walk_fails(v)
    elif isinstance(node, list):
        for v in node:
            yield from _walk_fails(v)


def cmd_decompose(args) -> int:
    spec = _load_file(args.file)
    G, phi, _ = load_instance(spec, cap=args.cap)
    if phi is None:
        raise ParseError("input carries no automorphism")
    try:
        word = tuple(int(tok) for tok in args.element.split(",") if tok.strip())
    except ValueError as exc:
        raise ParseError(f"bad element word {args.element!r}") from exc
    x = G.evaluate_word(word)
    g, h = nilpotent_decompose(phi, x)
    payload = {
        "element": x, "element_word": list(G.words[x]),
        "twisted_part": g, "twisted_word": list(G.words[g]),
        "fixed_part": h, "fixed_word": list(G.words[h]),
        "verified": "pass" if G.mul(g, h) == x else "fail",
    }
    _emit(payload)
    print(f"decompose: {x} = {g} * {h}", file=sys.stderr)
    return 0 if payload["verified"] == "pass" else 1


def cmd_lie(args) -> int:
    spec = _load_file(args.file)
    G, phi, _ = load_instance(spec, cap=args.cap)
    p = args.p or _detect_p(G)
    if p is None:
        raise ParseError("group order is not a prime power; pass --p")
    series = jlz_series(G, p)
    A = build_graded_lie(series)
    sparse = [[list(k), list(v)] for k, v in sorted(A.brackets.items())]
    payload = {
        "p": p,
        "layer_dims": list(A.dims),
        "np_series": verify_np_series(series)["verdict"],
        "lie_class": A.lie_class_of_generated(),
        "structure_constants": sparse,
        "lazard": check_lazard_all(A)["verdict"],
        "riley": check_riley(G, p, algebra=A)["verdict"],
    }
    _emit(payload)
    print(f"lie: dims {payload['layer_dims']}, class {payload['lie_class']}", file=sys.stderr)
    return 0 if payload["lazard"] == "pass" and payload["riley"] == "pass" else 1


def cmd_eigen(args) -> int:
    spec = _load_file(args.file)
    G, phi, _ = load_instance(spec, cap=args.cap)
    if phi is None:
        raise ParseError("input carries no automorphism")
    p = _detect_p(G)
    if p is None:
        raise ParseError("group order is not a prime power")
    A = build_graded_lie(jlz_series(G, p))
    ext = extend_and_eigendecompose(A, phi, n=args.n)
    payload = {
        "p": p, "n": ext.n, "field_degree": ext.field.k,
        "modulus": list(ext.field.modulus),
        "dims": [list(d) for d in ext.dims],
        "product_rule": verify_eigen_product_rule(ext)["verdict"],
    }
    _emit(payload)
    print(f"eigen: dims {payload['dims']}", file=sys.stderr)
    return 0 if payload["product_rule"] == "pass" else 1


def cmd_glauberman(args) -> int:
    G, phi = build_glauberman_example(cap=args.cap)
    td = twisted_data(phi)
    status = factorization_status(phi)
    verified = "fail"
    if status.witness:
        w = status.witness
        lhs = G.mul(G.inv(w["b"]), phi.table[w["b"]])
        rhs = G.conjugate(w["a"], w["c"])
        verified = "pass" if lhs == rhs == w["twisted_element"] else "fail"
    payload = {
        "group_order": G.order,
        "automorphism_order": phi.order_n,
        "coprime": phi.coprime,
        "fixed_order": td.fixed.order,
        "twisted_size": len(td.twisted),
        "commutator_order": td.commutator_phi.order,
        "product_covers": status.product_covers,
        "criterion_holds": status.criterion_holds,
        "witness": status.witness,
        "witness_verified": verified,
    }
    _emit(payload)
    print(f"glauberman: |G|={G.order}, |fixed|={td.fixed.order}, "
          f"covers={status.product_covers}", file=sys.stderr)
    return 0 if verified == "pass" else 1


def cmd_suite(args) -> int:
    corpus = _load_file(args.file) if args.file else default_corpus()
    bundle, code = run_suite(corpus, jobs=args.jobs, cap=args.cap)
    _emit(bundle)
    s = bundle["summary"]
    print(f"suite: {s['instance_count']} instances, {s['pass']} pass, "
          f"{s['fail']} fail, {s['skipped']} skipped", file=sys.stderr)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coprimelab",
        description="Finite groups with coprime automorphisms: analysis toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument("--cap", type=int, default=None,
                       help="enumeration cap (default 200000)")

    p = sub.add_parser("info", help="group statistics for an instance file")
    p.add_argument("file")
    add_cap(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("auto", help="automorphism analysis for an instance file")
    p.add_argument("file")
    add_cap(p)
    p.set_defaults(func=cmd_auto)

    p = sub.add_parser("decompose", help="twisted*fixed factorization of one element")
    p.add_argument("file")
    p.add_argument("--element", required=True,
                   help="comma-separated signed generator word, e.g. 1,2,-1")
    add_cap(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("lie", help="graded Lie algebra of a p-group instance")
    p.add_argument("file")
    p.add_argument("--p", type=int, default=None)
    add_cap(p)
    p.set_defaults(func=cmd_lie)

    p = sub.add_parser("eigen", help="eigenspace decomposition after scalar extension")
    p.add_argument("file")
    p.add_argument("--n", type=int, default=None)
    add_cap(p)
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("glauberman", help="the affine GF(125) counterexample report")
    add_cap(p)
    p.set_defaults(func=cmd_glauberman)

    p = sub.add_parser("suite", help="run the corpus suite")
    p.add_argument("file", nargs="?", default=None,
                   help="corpus JSON (defaults to the shipped corpus)")
    p.add_argument("--jobs", type=int, default=1)
    add_cap(p)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GroupTheoryError as exc:
        print(f"invariant failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())
