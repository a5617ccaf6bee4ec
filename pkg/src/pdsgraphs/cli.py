"""Command-line front end.

Exit codes: 0 success or valid, 1 verification failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .analysis import graph_report
from .diffsets import parse_set, quadratic_rds, singer_set, verify_perfect, verify_rds
from .errors import BudgetExceeded, InvalidInput, PDSGraphError
from .fields import field_of_order, parse_element, prime_power
from .formats import FORMATS, format_certificate, parse_certificate, read_graph, render
from .graphs import Graph, bilinear_graph, brown_augmented, brown_graph, diff_graph, hybrid_graph, projective_points
from .iso import general_isomorphism, singer_brown_graphs, singer_to_brown, verify_bijection
from .reports import VerificationReport
from .tower import normalize

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2

FAMILIES = ("diff", "brown", "brown-aug", "bilinear", "hybrid")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # one-line diagnostic, exit 2
        raise InvalidInput(message)


def _add_family(p: argparse.ArgumentParser, require_output: bool) -> None:
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--q", type=int, help="prime power q")
    p.add_argument("--set", dest="set_", metavar="RESIDUES", help='difference set, e.g. "0,1,3"')
    p.add_argument("--mod", type=int, help="modulus for --set")
    p.add_argument("--alpha", help="nonzero field element for the bilinear family, e.g. 1 or ζ+1")
    p.add_argument("--format", choices=FORMATS, default=None if require_output else "edges", required=require_output)
    p.add_argument("--out", type=Path, required=require_output, help="output path (default stdout)")
    p.add_argument("--report", action="store_true", help="also print the graph report")
    p.add_argument("--json", action="store_true", help="report as JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pdsgraphs", description="Difference graphs, polarity graphs and their isomorphism certificates.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _add_family(sub.add_parser("build", help="construct a graph family"), require_output=False)
    _add_family(sub.add_parser("export", help="construct and write a graph in a chosen format"), require_output=True)

    verify = sub.add_parser("verify", help="check a difference set or a graph")
    vsub = verify.add_subparsers(dest="target", required=True, parser_class=_Parser)
    pds = vsub.add_parser("pds", help="perfect difference set")
    pds.add_argument("--set", dest="set_", required=True)
    pds.add_argument("--mod", type=int)
    pds.add_argument("--json", action="store_true")
    rds = vsub.add_parser("rds", help="quadratic relative difference set in Z_p x Z_p")
    rds.add_argument("--p", type=int, required=True)
    rds.add_argument("--json", action="store_true")
    vg = vsub.add_parser("graph", help="degree histogram, diameter and Moore gap of a graph file")
    vg.add_argument("file", type=Path)
    vg.add_argument("--expect-diameter", type=int, default=2)
    vg.add_argument("--any-diameter", action="store_true", help="do not fail on the diameter")
    vg.add_argument("--json", action="store_true")

    iso = sub.add_parser("iso", help="isomorphism certificates")
    isub = iso.add_subparsers(dest="target", required=True, parser_class=_Parser)
    sb = isub.add_parser("singer-brown", help="constructive Diff(q) -> B(q) certificate")
    sb.add_argument("--q", type=int, required=True)
    sb.add_argument("--out", type=Path)
    sb.add_argument("--json", action="store_true")
    gen = isub.add_parser("general", help="search for an isomorphism between two graph files")
    gen.add_argument("file_g", type=Path)
    gen.add_argument("file_h", type=Path)
    gen.add_argument("--budget", type=int, default=10**7)
    gen.add_argument("--out", type=Path)
    gen.add_argument("--json", action="store_true")
    chk = isub.add_parser("check", help="verify a certificate between two graph files")
    chk.add_argument("file_g", type=Path)
    chk.add_argument("file_h", type=Path)
    chk.add_argument("certificate", type=Path)
    chk.add_argument("--q", type=int, help="field order for point-valued certificates (target in B(q) vertex order)")
    chk.add_argument("--json", action="store_true")
    return parser


def _family_graph(args: argparse.Namespace) -> Graph:
    fam = args.family
    if fam == "diff":
        if args.set_ is not None:
            return diff_graph(parse_set(args.set_, args.mod))
        if args.q is None:
            raise InvalidInput("build diff needs --q or --set/--mod")
        return diff_graph(singer_set(args.q))
    if args.q is None:
        raise InvalidInput(f"{fam} needs --q")
    if fam == "brown":
        return brown_graph(args.q)
    if fam == "brown-aug":
        return brown_augmented(args.q)
    if fam == "bilinear":
        if args.alpha is None:
            raise InvalidInput("bilinear needs --alpha")
        K = field_of_order(args.q)
        return bilinear_graph(K, parse_element(K, args.alpha))
    return hybrid_graph(args.q)


def _emit_report(data: dict, as_json: bool, stream) -> None:
    if as_json:
        stream.write(json.dumps(data, sort_keys=True, default=str) + "\n")
        return
    for key, value in data.items():
        if isinstance(value, dict):
            value = ",".join(f"{k}:{v}" for k, v in value.items())
        elif isinstance(value, list):
            value = "; ".join(map(str, value)) if value else "-"
        stream.write(f"{key}: {value}\n")


def _emit_verification(report: VerificationReport, as_json: bool) -> int:
    data = report.to_dict()
    if not as_json:
        data = {"kind": report.kind, "valid": report.valid, **report.details, "failures": report.failures}
    _emit_report(data, as_json, sys.stdout)
    return EXIT_OK if report.valid else EXIT_FAILED


def _cmd_build(args: argparse.Namespace) -> int:
    G = _family_graph(args)
    payload = render(G, args.format)
    if args.out is not None:
        args.out.write_bytes(payload)
        report_stream = sys.stdout
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
        report_stream = sys.stderr
    if args.report:
        _emit_report(graph_report(G).to_dict(), args.json, report_stream)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.target == "pds":
        return _emit_verification(verify_perfect(parse_set(args.set_, args.mod)), args.json)
    if args.target == "rds":
        return _emit_verification(verify_rds(quadratic_rds(args.p)), args.json)
    G = read_graph(args.file)
    rep = graph_report(G)
    _emit_report(rep.to_dict(), args.json, sys.stdout)
    if not args.any_diameter and rep.diameter != args.expect_diameter:
        return EXIT_FAILED
    return EXIT_OK


def _write_text(path: Path | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def _cmd_iso(args: argparse.Namespace) -> int:
    if args.target == "singer-brown":
        prime_power(args.q)
        f = singer_to_brown(args.q)
        G, B = singer_brown_graphs(args.q)
        cert = format_certificate(f.mapping, B)
        if args.json:
            if args.out is not None:
                _write_text(args.out, cert)
            summary = {"q": args.q, "source": f.source, "target": f.target, "verified": f.verified,
                       "certificate": cert.splitlines()}
            _emit_report(summary, True, sys.stdout)
        else:
            _write_text(args.out, cert)
            print(f"verified {G.n}-vertex isomorphism {f.source} -> {f.target}", file=sys.stderr)
        return EXIT_OK

    G, H = read_graph(args.file_g), read_graph(args.file_h)
    if args.target == "general":
        try:
            f = general_isomorphism(G, H, budget=args.budget)
        except BudgetExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAILED
        if f is None:
            _emit_report({"isomorphic": False}, args.json, sys.stdout if args.json else sys.stderr)
            return EXIT_FAILED
        cert = format_certificate(f.mapping)
        if args.json:
            if args.out is not None:
                _write_text(args.out, cert)
            _emit_report({"isomorphic": True, "mapping": list(f.mapping)}, True, sys.stdout)
        else:
            _write_text(args.out, cert)
        return EXIT_OK

    K = field_of_order(args.q) if args.q is not None else None
    images = parse_certificate(args.certificate.read_text(encoding="utf-8"), K)
    if images and isinstance(images[0], tuple):
        index = {p: i for i, p in enumerate(projective_points(K))}
        try:
            mapping = [index[normalize(p)] for p in images]  # type: ignore[arg-type]
        except KeyError as exc:
            raise InvalidInput(f"certificate point {exc} is not in PG(2,{args.q})") from None
    else:
        mapping = [int(x) for x in images]  # type: ignore[arg-type]
    return _emit_verification(verify_bijection(G, H, mapping), args.json)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in ("build", "export"):
            return _cmd_build(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_iso(args)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (InvalidInput, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except PDSGraphError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


def main() -> None:
    sys.exit(run())
