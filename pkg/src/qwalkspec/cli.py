"""Command-line front end.

Subcommands:

* ``spectrum`` -- closed-form, char-poly or numeric spectra of A, S+(U),
  S+(U^2), S+(U^3) for graphs from a .g6 file or a generator spec.
* ``verify``   -- run the exact identity and spectrum checks over a corpus.
* ``compare``  -- pairwise cospectrality verdicts for two graphs.
* ``batch``    -- all-pairs comparison over a corpus, grouped by (n, k).

Generator specs use ``name:params`` syntax (``cycle:6``, ``rook:4``,
``paley:13``) so experiments are reproducible from shell history.  Exit
codes: 0 success / all checks pass, 1 check failure or hypothesis violation,
2 usage or parse errors.  Set QWALK_LOG=debug for diagnostics.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import List, Optional, Tuple

from .arcspace import build_arc_space
from .errors import Graph6Error, HypothesisError, ParameterError, ValencyError
from .generators import parse_generator_spec
from .graph6 import read_graph6_file
from .graphs import Graph, adjacency_matrix, is_regular
from .intmat import char_poly, mat_equal
from .invariants import batch_compare, batch_to_csv, batch_to_json, compare, profile
from .jacobi import symmetric_eigenvalues
from .polynomials import CharPoly
from .supports import (
    char_poly_identity_check,
    charpoly_root_multiset,
    closed_form_charpoly_su,
    closed_form_charpoly_su2,
    closed_form_spectrum_su,
    closed_form_spectrum_su2,
    identity_suite,
    su2_via_identity,
    support_u,
    support_u_power,
)

CHECK_NAMES = ("identities", "thm32", "thm41", "thm43", "ihara")


def _setup_logging() -> None:
    level_name = os.environ.get("QWALK_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level_name, logging.WARNING))


def _load_graphs(args) -> List[Tuple[str, Graph]]:
    out: List[Tuple[str, Graph]] = []
    for path in args.input or []:
        out.extend(read_graph6_file(path))
    for spec in args.generate or []:
        out.append((spec, parse_generator_spec(spec)))
    if not out:
        raise ParameterError("no input graphs: pass --input and/or --generate")
    return out


def _resolve_single(token: str) -> Tuple[str, Graph]:
    """A compare operand: an existing .g6 file (with exactly one graph) or a generator spec."""
    if os.path.exists(token):
        graphs = read_graph6_file(token)
        if len(graphs) != 1:
            raise ParameterError(
                f"{token}: compare expects a single-graph file, found {len(graphs)};"
                " use the batch subcommand for corpora"
            )
        return graphs[0]
    return token, parse_generator_spec(token)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_real(x: float) -> str:
    return f"{float(x):.12g}"


def _fmt_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return _fmt_real(z.real)
    return f"{z.real:.12g}{z.imag:+.12g}i"


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


def _spectrum_payload(gid: str, g: Graph, which: str, form: str) -> dict:
    if form == "closed":
        if which == "s1":
            spec = closed_form_spectrum_su(g)
        elif which == "s2":
            spec = closed_form_spectrum_su2(g)
        else:
            raise HypothesisError(
                f"{gid}: no closed form for {which!r}; closed form exists for s1 (k >= 2)"
                " and s2 (k > 2) only"
            )
        return {"id": gid, "which": which, "form": form, "spectrum": spec.to_json()}

    if form == "charpoly":
        cp = _charpoly_of(g, which)
        return {
            "id": gid,
            "which": which,
            "form": form,
            "degree": cp.degree,
            "coefficients": cp.to_json_list(),
        }

    # numeric
    if which == "a":
        vals = [complex(v) for v in symmetric_eigenvalues(adjacency_matrix(g))]
    elif which == "s1":
        try:
            vals = sorted(
                closed_form_spectrum_su(g).numeric_values(),
                key=lambda z: (z.real, z.imag),
            )
        except HypothesisError:
            vals = _sorted_roots(g, which)
    elif which == "s2":
        try:
            vals = sorted(
                closed_form_spectrum_su2(g).numeric_values(),
                key=lambda z: (z.real, z.imag),
            )
        except HypothesisError:
            vals = _sorted_roots(g, which)
    else:
        vals = _sorted_roots(g, which)
    return {
        "id": gid,
        "which": which,
        "form": form,
        "values": [_fmt_complex(v) for v in vals],
    }


def _sorted_roots(g: Graph, which: str) -> list:
    return sorted(
        charpoly_root_multiset(_charpoly_of(g, which)), key=lambda z: (z.real, z.imag)
    )


def _charpoly_of(g: Graph, which: str) -> CharPoly:
    if which == "a":
        return char_poly(adjacency_matrix(g))
    a = build_arc_space(g)
    if which == "s1":
        return char_poly(support_u(a))
    power = {"s2": 2, "s3": 3}[which]
    return char_poly(support_u_power(a, power))


def _spectrum_text(payload: dict) -> str:
    lines = [f"# {payload['id']}  which={payload['which']}  form={payload['form']}"]
    if "spectrum" in payload:
        for e in payload["spectrum"]["entries"]:
            if e["type"] == "rational":
                lines.append(f"value {e['value']}  multiplicity {e['multiplicity']}")
            else:
                tag = "conjugate pair" if e["conjugate"] else "real pair"
                lines.append(
                    f"pair sum={_fmt_real(e['root_sum'])} product={_fmt_real(e['root_product'])}"
                    f"  multiplicity {e['multiplicity']}  ({tag})"
                )
    elif "coefficients" in payload:
        cp = CharPoly.from_json_list(payload["coefficients"])
        lines.append(str(cp))
    else:
        lines.extend(payload["values"])
    return "\n".join(lines) + "\n"


def _spectrum_csv(payloads: List[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "which", "form", "field", "value", "multiplicity"])
    for p in payloads:
        if "spectrum" in p:
            for e in p["spectrum"]["entries"]:
                if e["type"] == "rational":
                    writer.writerow(
                        [p["id"], p["which"], p["form"], "rational", e["value"], e["multiplicity"]]
                    )
                else:
                    writer.writerow(
                        [
                            p["id"],
                            p["which"],
                            p["form"],
                            "quadratic-pair",
                            f"sum={_fmt_real(e['root_sum'])};product={_fmt_real(e['root_product'])}",
                            e["multiplicity"],
                        ]
                    )
        elif "coefficients" in p:
            for i, c in enumerate(p["coefficients"]):
                writer.writerow([p["id"], p["which"], p["form"], f"t^{i}", c, ""])
        else:
            for v in p["values"]:
                writer.writerow([p["id"], p["which"], p["form"], "value", v, 1])
    return buf.getvalue()


def cmd_spectrum(args) -> int:
    graphs = _load_graphs(args)
    payloads = []
    for gid, g in graphs:
        payloads.append(_spectrum_payload(gid, g, args.which, args.form))
    if args.format == "json":
        text = json.dumps(payloads if len(payloads) > 1 else payloads[0], indent=2) + "\n"
    elif args.format == "csv":
        text = _spectrum_csv(payloads)
    else:
        text = "".join(_spectrum_text(p) for p in payloads)
    _emit(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _run_check(check: str, gid: str, g: Graph) -> Tuple[str, str]:
    """Returns (status, detail) with status in PASS/FAIL/SKIP."""
    k = is_regular(g)
    try:
        if check == "identities":
            if k is None or k < 1:
                return "SKIP", "hypothesis: regular graph with k >= 1"
            failed = [name for name, ok in identity_suite(g) if not ok]
            return ("FAIL", ", ".join(failed)) if failed else ("PASS", "")
        if check == "thm32":
            lhs = char_poly(support_u(build_arc_space(g)))
            rhs = closed_form_charpoly_su(g)
            return ("PASS", "") if lhs.coeffs == rhs.coeffs else ("FAIL", "charpoly mismatch")
        if check == "ihara":
            ok = char_poly_identity_check(g)
            return ("PASS", "") if ok else ("FAIL", "factorization mismatch")
        if check == "thm41":
            if k is None or k <= 2:
                return "SKIP", f"hypothesis k>2 (got k={k})"
            a = build_arc_space(g)
            ok = mat_equal(support_u_power(a, 2), su2_via_identity(a))
            return ("PASS", "") if ok else ("FAIL", "S+(U^2) != S+(U)^2 + I")
        if check == "thm43":
            if k is None or k <= 2:
                return "SKIP", f"hypothesis k>2 (got k={k})"
            lhs = char_poly(support_u_power(build_arc_space(g), 2))
            rhs = closed_form_charpoly_su2(g)
            return ("PASS", "") if lhs.coeffs == rhs.coeffs else ("FAIL", "charpoly mismatch")
        raise ParameterError(f"unknown check {check!r}")
    except (HypothesisError, ValencyError) as e:
        return "SKIP", f"hypothesis: {e}"


def cmd_verify(args) -> int:
    graphs = _load_graphs(args)
    wanted = []
    for token in args.checks.split(","):
        token = token.strip().lower()
        if token == "all":
            wanted.extend(CHECK_NAMES)
        elif token in CHECK_NAMES:
            wanted.append(token)
        else:
            raise ParameterError(
                f"unknown check {token!r}; choose from all, {', '.join(CHECK_NAMES)}"
            )
    rows = []
    any_fail = False
    for gid, g in graphs:
        for check in wanted:
            status, detail = _run_check(check, gid, g)
            any_fail = any_fail or status == "FAIL"
            rows.append({"id": gid, "check": check, "status": status, "detail": detail})

    if args.format == "json":
        text = json.dumps({"results": rows}, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "check", "status", "detail"])
        for r in rows:
            writer.writerow([r["id"], r["check"], r["status"], r["detail"]])
        text = buf.getvalue()
    else:
        width = max(len(r["id"]) for r in rows)
        lines = [
            f"{r['id']:<{width}}  {r['check']:<10}  {r['status']:<4}  {r['detail']}".rstrip()
            for r in rows
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 1 if any_fail else 0


# ---------------------------------------------------------------------------
# compare / batch
# ---------------------------------------------------------------------------


def cmd_compare(args) -> int:
    id1, g1 = _resolve_single(args.first)
    id2, g2 = _resolve_single(args.second)
    if id1 == id2:
        id1, id2 = id1 + "#1", id2 + "#2"
    try:
        report = compare(profile(g1, id1), profile(g2, id2))
    except (HypothesisError, ValencyError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id1", "id2", "a", "s1", "s2", "s3", "distinguishing_invariant"])
        writer.writerow(
            [id1, id2]
            + [report.verdicts[w] for w in ("a", "s1", "s2", "s3")]
            + [report.distinguishing_invariant or ""]
        )
        text = buf.getvalue()
    else:
        lines = [f"# {id1} vs {id2}"]
        for which in ("a", "s1", "s2", "s3"):
            lines.append(f"{which:<3} {report.verdicts[which]}")
        lines.append(f"distinguishing invariant: {report.distinguishing_invariant or 'none'}")
        lines.append("note: cospectral on all invariants does not certify isomorphism")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    if args.expect_isomorphic and report.distinguishing_invariant is not None:
        return 1
    return 0


def cmd_batch(args) -> int:
    graphs = _load_graphs(args)
    result = batch_compare(
        graphs, include_cross_class=args.include_cross_class, threads=args.threads
    )
    if args.format == "csv":
        text = batch_to_csv(result)
    elif args.format == "text":
        lines = []
        for r in result.pairs:
            verdict = r.distinguishing_invariant or "cospectral on all"
            lines.append(f"{r.pair[0]} vs {r.pair[1]}: {verdict}")
        for gid, reason in result.skipped:
            lines.append(f"skipped {gid}: {reason}")
        text = ("\n".join(lines) + "\n") if lines else "no comparable pairs\n"
    else:
        text = batch_to_json(result) + "\n"
    _emit(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_io_args(sp, with_inputs: bool = True) -> None:
    if with_inputs:
        sp.add_argument("--input", action="append", metavar="PATH.g6",
                        help="graph6 corpus file, one graph per line (repeatable)")
        sp.add_argument("--generate", action="append", metavar="SPEC",
                        help="generator spec like cycle:6, rook:4, paley:13 (repeatable)")
    sp.add_argument("--format", choices=("json", "csv", "text"), default="text")
    sp.add_argument("--output", metavar="PATH", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwalkspec",
        description="Exact walk-support spectra and cospectrality experiments on regular graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="spectrum of A, S+(U), S+(U^2) or S+(U^3)")
    _add_io_args(sp)
    sp.add_argument("--which", choices=("a", "s1", "s2", "s3"), required=True)
    sp.add_argument("--form", choices=("closed", "charpoly", "numeric"), default="closed",
                    help="closed form (s1, s2 only), exact char poly, or 12-digit numerics")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("verify", help="run exact identity and spectrum checks over a corpus")
    _add_io_args(sp)
    sp.add_argument("--checks", default="all",
                    help="comma-separated: all, identities, thm32, thm41, thm43, ihara "
                         "(arc identities; S+(U) spectrum; squared-support identity; "
                         "S+(U^2) spectrum; char poly factorization)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("compare", help="pairwise cospectrality verdicts for two graphs")
    sp.add_argument("first", help="generator spec or single-graph .g6 file")
    sp.add_argument("second", help="generator spec or single-graph .g6 file")
    sp.add_argument("--expect-isomorphic", action="store_true",
                    help="exit 1 if any invariant distinguishes the pair")
    _add_io_args(sp, with_inputs=False)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("batch", help="all-pairs comparison over a corpus, grouped by (n, k)")
    _add_io_args(sp)
    sp.add_argument("--include-cross-class", action="store_true",
                    help="also report pairs with different (n, k)")
    sp.add_argument("--threads", type=int, default=os.cpu_count(),
                    help="worker threads for profile computation")
    sp.set_defaults(func=cmd_batch)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, ParameterError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except (HypothesisError, ValencyError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
