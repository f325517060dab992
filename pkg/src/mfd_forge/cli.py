"""Command-line front end.

    mfd-forge analyze   --diagram 0,1,1,4,5 [--d 3]
    mfd-forge construct --diagram 1,2,3,4,5,6 --d 4 --field 3^1 [--out code.json]
    mfd-forge verify    --code code.json | --diagram ... --d ... [--cap N] [--trials T]
    mfd-forge repro     f5-mfd-d4 | all

Exit codes: 0 pass, 1 input error, 2 verification failure, 3 enumeration cap
exceeded without --trials.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import ferrers as fd
from . import repro, verify
from .codes import code_from_dict, code_to_json, construct, render_matrix
from .errors import MFDError
from .field import parse_field, parse_modulus

EXIT_OK, EXIT_ERROR, EXIT_FAIL, EXIT_CAP = 0, 1, 2, 3


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.replace(" ", "").split(",") if t)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mfd-forge", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--diagram", help="column counts, e.g. 0,1,1,4,5")
        p.add_argument("--d", type=int, help="minimum rank distance")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", type=Path, help="write output here instead of stdout")

    def field_opts(p):
        p.add_argument("--field", default="2^1", help='base field as "p^e" (default 2^1)')
        p.add_argument("--modulus", help="extension modulus, ascending coefficients: 3,4,0,0,0,1")
        p.add_argument("--basis", help="compatible basis as gamma exponents: 0,2968,1531,...")

    p = sub.add_parser("analyze", help="classify a diagram and tabulate nu bounds")
    common(p)
    p.add_argument("--primes", default="2,3,5", help="primes for p-height and p-classes")

    p = sub.add_parser("construct", help="build a maximum Ferrers diagram code")
    common(p)
    field_opts(p)

    p = sub.add_parser("verify", help="check support, dimension and minimum rank")
    common(p)
    field_opts(p)
    p.add_argument("--code", type=Path, help="JSON code artifact from 'construct'")
    p.add_argument("--cap", type=int, help="exhaustive enumeration cap (env MFD_FORGE_CAP)")
    p.add_argument("--trials", type=int, help="sample this many codewords above the cap")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("repro", help="re-run a pinned worked example")
    p.add_argument("scenario", choices=[*repro.SCENARIOS, "all"])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", type=Path)
    return ap


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.write_text(text if text.endswith("\n") else text + "\n")


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise MFDError(f"{args.command} needs {', '.join(missing)}")


# analyze

def _analyze_text(prof: fd.DiagramProfile) -> str:
    D = prof.diagram
    lines = [f"diagram {D}  (order {D.n}, {prof.size} cells)", D.grid(), f"adjoint {prof.adjoint}"]
    lines.append("classes: " + ", ".join(k.replace("_", " ") for k, v in prof.flags.items() if v)
                 if any(prof.flags.values()) else "classes: none of the monotone/convex classes")
    for p, h in prof.p_heights.items():
        tags = [k.replace("_", " ").replace("p ", f"{p}-") for k, v in prof.p_flags[p].items() if v]
        lines.append(f"p={p}: height {h}, contraction {prof.contractions[p]}"
                     + (f", {', '.join(tags)}" if tags else ""))
    lines.append("d  nu_0..nu_{d-1}            nu_min  nu_MDS  MDS-constructible  singleton j")
    for r in prof.records:
        nu = ",".join(map(str, r.nu))
        sing = ",".join(map(str, r.singleton)) or "-"
        lines.append(f"{r.d:<2} {nu:<26} {r.nu_min:<7} {r.nu_mds:<7} "
                     f"{'yes' if r.mds_constructible else 'no':<18} {sing}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    _need(args, "diagram")
    D = fd.parse_diagram(args.diagram)
    ds = [args.d] if args.d is not None else None
    prof = fd.profile(D, primes=_ints(args.primes), ds=ds)
    text = json.dumps(prof.to_dict(), indent=2) if args.format == "json" else _analyze_text(prof)
    _emit(text, args.out)
    return EXIT_OK


# construct

def _build(args):
    _need(args, "diagram", "d")
    D = fd.parse_diagram(args.diagram)
    modulus = parse_modulus(args.modulus) if args.modulus else None
    basis = _ints(args.basis) if args.basis else None
    return construct(D, args.d, parse_field(args.field), modulus=modulus, basis=basis)


def _code_text(C) -> str:
    lines = [f"code over GF({C.p}^{C.e}) on diagram {C.diagram}, d = {C.d}",
             f"path {C.path}, dimension {C.dimension}"]
    for key, val in C.trace.items():
        if key != "polynomials":
            lines.append(f"  {key}: {val}")
    for t, g in enumerate(C.generators, 1):
        lines += ["", f"generator {t}", render_matrix(g, C.field)]
    return "\n".join(lines)


def cmd_construct(args) -> int:
    C = _build(args)
    text = code_to_json(C, indent=1) if args.format == "json" else _code_text(C)
    _emit(text, args.out)
    return EXIT_OK


# verify

def _report_text(rep: verify.VerificationReport) -> str:
    verdict = "PASS" if rep.passed else "FAIL"
    if rep.passed and not rep.certificate:
        verdict += " (sampled, not a proof)"
    rank = "-" if rep.min_rank is None else rep.min_rank
    bound = " (upper bound)" if rep.min_rank_is_upper_bound else ""
    lines = [
        f"support     {'ok' if rep.support_ok else 'VIOLATED'}",
        f"dimension   {rep.dimension} (bound {rep.expected_dimension})",
        f"min rank    {rank}{bound}, design distance {rep.design_distance}",
        f"method      {rep.method}, {rep.codewords_checked} nonzero codewords",
        f"elapsed     {rep.elapsed:.3f}s",
        *[f"note        {n}" for n in rep.notes],
        verdict,
    ]
    return "\n".join(lines)


def cmd_verify(args) -> int:
    if args.code is not None:
        C = code_from_dict(json.loads(args.code.read_text()))
    else:
        C = _build(args)
    cap = args.cap if args.cap is not None else verify.default_cap()
    if C.dimension and C.q**C.dimension - 1 > cap and args.trials is None:
        sys.stderr.write(f"{C.q**C.dimension - 1} codewords exceed the cap {cap}; "
                         f"raise --cap or pass --trials to sample\n")
        return EXIT_CAP
    # with --code, --diagram/--d override the target stored in the artifact
    D = fd.parse_diagram(args.diagram) if args.diagram else None
    rep = verify.is_mfd(C, D, args.d, cap=cap,
                        trials=args.trials, seed=args.seed, workers=args.workers)
    text = json.dumps(rep.to_dict(), indent=1) if args.format == "json" else _report_text(rep)
    _emit(text, args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


# repro

def cmd_repro(args) -> int:
    names = list(repro.SCENARIOS) if args.scenario == "all" else [args.scenario]
    results = [repro.run(s) for s in names]
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in results], indent=1)
    else:
        text = "\n".join(
            f"{'PASS' if r.passed else 'FAIL'}  {r.scenario}\n" + "\n".join("      " + l for l in r.lines)
            for r in results)
    _emit(text, args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


COMMANDS = {"analyze": cmd_analyze, "construct": cmd_construct, "verify": cmd_verify,
            "repro": cmd_repro}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (MFDError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
