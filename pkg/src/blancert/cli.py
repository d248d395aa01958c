"""Command-line front end and the assembled certificate report.

Reports are JSON documents with sorted keys.  Exact values are printed as
integers or ``p/q`` strings, approximate reals as strings with 15 significant
digits next to the tolerance they were computed to.  Wall-clock timings are
only included with ``--timings`` so that default output is byte-stable.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .certifier import (
    CertificateError,
    StepCertificate,
    certify_base,
    certify_step,
    orbit_sanity,
    preserves_degree_order,
    w_value,
)
from .lattice import (
    LatticeError,
    NuBasis,
    PullbackMatrix,
    charpoly,
    curve_L,
    dynamical_degrees,
    phi_pullback,
    sigma_pullback,
    theta1,
    theta1_inequalities,
    theta_dot_L,
)
from .polyring import PolyError

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULT_PARAMETERS = {"a_2001": 2, "a_1200": 5, "a_1110": 7, "a_1101": 11, "a_0210": 13, "X": 3, "Y": 5}
DEFAULT_TOLERANCES = {"root": 1e-12, "residual": 1e-9, "margin": 1e-6}


class UsageError(Exception):
    pass


# -- formatting ----------------------------------------------------------------------------

def real(x) -> str:
    """Decimal string with 15 significant digits."""
    return f"{float(x):.15g}"


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# -- configuration ---------------------------------------------------------------------------

def load_config(path: str | None) -> tuple[dict[str, int], dict[str, float]]:
    params = dict(DEFAULT_PARAMETERS)
    tols = dict(DEFAULT_TOLERANCES)
    if path is None:
        return params, tols
    cfg = configparser.ConfigParser()
    cfg.optionxform = str
    try:
        with open(path) as fh:
            cfg.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    unknown = set(cfg.sections()) - {"parameters", "tolerances"}
    if unknown:
        raise UsageError(f"unknown config sections {sorted(unknown)}")
    try:
        if cfg.has_section("parameters"):
            for k, v in cfg["parameters"].items():
                key = k if k in ("X", "Y") else "a_" + k.removeprefix("a").removeprefix("_")
                if key not in DEFAULT_PARAMETERS:
                    raise UsageError(f"unknown parameter {k!r}")
                params[key] = int(v)
        if cfg.has_section("tolerances"):
            for k, v in cfg["tolerances"].items():
                if k not in DEFAULT_TOLERANCES:
                    raise UsageError(f"unknown tolerance {k!r}")
                tols[k] = float(v)
    except ValueError as exc:
        raise UsageError(f"bad value in config {path}: {exc}") from exc
    return params, tols


def _parse_order(text: str) -> tuple[int, ...]:
    try:
        order = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad --order {text!r}") from exc
    if not order:
        raise UsageError("--order must list at least one index")
    return order


# -- sections ------------------------------------------------------------------------------------

def lattice_section(k: int, order: Sequence[int], tolerances: dict[str, float]) -> dict:
    if k < 1:
        raise UsageError("--k must be at least 1")
    if any(not 1 <= i <= k for i in order):
        raise UsageError(f"--order entries must lie in 1..{k}")
    tol = Fraction(tolerances["root"]) / 10
    margin, residual_tol = tolerances["margin"], tolerances["residual"]
    M = phi_pullback(order, k)
    nu = NuBasis(k)
    checks = {
        "determinant_unimodular": M.determinant() in (1, -1),
        "involutions_square_to_identity": all(
            sigma_pullback(i, k) @ sigma_pullback(i, k) == PullbackMatrix.identity(k) for i in range(1, k + 1)),
    }
    try:
        N = nu.restrict(M)
        checks["nu_span_invariant"] = True
    except LatticeError:
        N = None
        checks["nu_span_invariant"] = False
    l1, l2 = dynamical_degrees(M, tol)
    doc: dict[str, Any] = {
        "k": k,
        "order": list(order),
        "matrix": M.tolist(),
        "charpoly_low_to_high": charpoly(M),
        "lambda1": real(l1),
        "lambda2": real(l2),
        "lambda1_sq_minus_lambda2": real(l1 * l1 - l2),
        "tolerance": real(tolerances["root"]),
        "derived_values": ["matrix", "charpoly_low_to_high", "lambda1", "lambda2", "alpha"],
    }
    expanding = l1 > 1 + margin
    doc["expanding"] = expanding
    if expanding:
        checks["lambda1_gt_1"] = True
        checks["lambda1_eq_lambda2"] = abs(l1 - l2) < residual_tol
        checks["log_concave"] = l1 * l1 - l2 > margin
        lam, alpha = theta1(M, nu, tol)
        fl = [float(a) for a in alpha]
        doc["alpha"] = [real(a) for a in alpha]
        Na = [sum(N[i][j] * alpha[j] for j in range(k)) for i in range(k)]
        res_nu = max(abs(float(x - lam * a)) for x, a in zip(Na, alpha))
        emb = nu.embed(alpha)
        res_full = max(abs(float(x - lam * y)) for x, y in zip((M @ emb).coords, emb.coords))
        doc["residual_nu"] = real(res_nu)
        doc["residual_full"] = real(res_full)
        checks["residual_nu"] = res_nu < residual_tol
        checks["residual_full"] = res_full < residual_tol
        ineq = theta1_inequalities(alpha)
        margins = [fl[i] - fl[i + 1] for i in range(k - 1)] + [fl[-1]]
        if k >= 2:
            margins.append(fl[0] - fl[1] - 2 * sum(fl[2:]))
        checks["alpha_inequalities"] = all(ineq.values()) and min(margins) > margin
        if k >= 3:
            tdl = theta_dot_L(alpha, k)
            closed = 2 * sum(alpha) - 3 * alpha[0] - alpha[1]
            doc["curve_L"] = str(curve_L(k))
            doc["theta_dot_L"] = real(tdl)
            doc["theta_dot_L_closed_form"] = real(closed)
            checks["theta_dot_L_negative"] = tdl < -margin
            checks["theta_dot_L_matches_closed_form"] = abs(tdl - closed) < Fraction(tolerances["root"])
    doc["checks"] = checks
    doc["passed"] = all(checks.values())
    return doc


def _step_doc(cert: StepCertificate, timings: bool) -> dict:
    doc = {
        "kind": cert.kind,
        "identities": cert.identities,
        "form_conditions": cert.form_conditions,
        "degree_checks": cert.degree_checks,
        "heads": cert.heads,
        "output_degrees": list(cert.output_degrees),
        "term_counts": cert.term_counts,
        "diffs": cert.diffs,
        "passed": cert.passed,
    }
    if timings:
        doc["elapsed_seconds"] = {k: round(v, 3) for k, v in cert.elapsed.items()}
    return doc


def certify_section(mode: str, threads: int = 1, timings: bool = False) -> dict:
    if mode not in ("base", "step", "full"):
        raise UsageError(f"unknown --mode {mode!r}")
    doc: dict[str, Any] = {"mode": mode}
    base = step = None
    if mode in ("base", "full"):
        base = certify_base()
        doc["base"] = _step_doc(base, timings)
    if mode in ("step", "full"):
        step = certify_step(generic=True, threads=threads)
        doc["step"] = _step_doc(step, timings)
    if mode == "full":
        d = base.output_degrees
        inductive = base.passed and step.passed and preserves_degree_order(d)
        doc["inductive"] = inductive
        doc["passed"] = inductive
        doc["verdict"] = "certified" if inductive else "not certified"
    else:
        doc["passed"] = (base or step).passed
    return doc


def orbit_section(params: dict[str, int], n: int) -> dict:
    coeffs = {k: v for k, v in params.items() if k.startswith("a_")}
    if w_value(coeffs) % 2 == 0:
        raise UsageError(f"w = {w_value(coeffs)} is even under this assignment; orbit needs w odd")
    report = orbit_sanity(coeffs, params["X"], params["Y"], n)
    steps = []
    for s in report.steps:
        steps.append({
            "index": s.index,
            "raw_2adic_valuations": list(s.raw_valuations),
            "scale_bits": s.scale.bit_length(),
            "bits": s.bits,
            "residues": {str(m): list(r) for m, r in s.residues.items()},
            "pattern_ok": s.pattern_ok,
        })
    return {
        "parameters": params,
        "w": w_value(coeffs),
        "n": n,
        "steps": steps,
        "contradiction": report.contradiction,
        "pattern_holds": report.pattern_holds,
        "passed": not report.contradiction and report.pattern_holds,
    }


def assemble_report(lattice: dict, certify: dict, params: dict, timings: dict | None = None) -> dict:
    clause1 = {
        "lambda1": lattice["lambda1"],
        "lambda2": lattice["lambda2"],
        "lambda1_sq_minus_lambda2": lattice["lambda1_sq_minus_lambda2"],
        "sign": "positive" if lattice["checks"].get("log_concave") else "non-positive",
    }
    tdl = lattice.get("theta_dot_L")
    clause2 = {
        "alpha": lattice.get("alpha"),
        "theta_dot_L": tdl,
        "sign": "negative" if lattice["checks"].get("theta_dot_L_negative") else "non-negative",
    }
    clause3 = {
        "base": certify.get("base", {}).get("passed", False),
        "step": certify.get("step", {}).get("passed", False),
        "inductive": certify.get("inductive", False),
    }
    certified = (clause1["sign"] == "positive" and clause2["sign"] == "negative"
                 and clause3["base"] and clause3["step"] and clause3["inductive"] and lattice["passed"])
    doc = {
        "schema_version": SCHEMA_VERSION,
        "clause1": clause1,
        "clause2": clause2,
        "clause3": clause3,
        "sections": {"lattice": lattice, "certify": certify},
        "metadata": {"tool_version": __version__, "parameters": params},
        "verdict": "certified" if certified else "not certified",
    }
    if timings is not None:
        doc["metadata"]["elapsed_seconds"] = timings
    return doc


# -- entry point -------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="blancert", description="Exact certificate computations.")
    p.add_argument("--version", action="version", version=f"blancert {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write the JSON document here instead of stdout")
        sp.add_argument("--params", help="config file with [parameters] and [tolerances]")
        sp.add_argument("--tolerance", type=float, help="override the root-bracketing tolerance")
        sp.add_argument("--timings", action="store_true", help="include wall-clock timings (not byte-stable)")

    sp = sub.add_parser("lattice", help="dynamical degrees, theta_1 and the negative curve")
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--order", default="1,2,3")
    common(sp)

    sp = sub.add_parser("certify", help="symbolic base and step certificates")
    sp.add_argument("--mode", choices=("base", "step", "full"), default="full")
    sp.add_argument("--threads", type=int, default=1)
    common(sp)

    sp = sub.add_parser("orbit", help="numeric 2-adic shadow of the orbit")
    sp.add_argument("--n", type=int, default=3, help="number of iterations")
    common(sp)

    sp = sub.add_parser("report", help="assemble the full certificate report")
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--order", default="1,2,3")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--lattice-section", help="reuse a lattice section written by the lattice command")
    sp.add_argument("--certify-section", help="reuse a certify section written by 'certify --mode full'")
    common(sp)
    return p


def _load_section(path: str) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read section {path}: {exc}") from exc
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise UsageError(f"section {path} has schema version {doc.get('schema_version')}, expected {SCHEMA_VERSION}")
    return doc


def _emit(doc: dict, out: str | None):
    text = dumps(doc)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def run(args: argparse.Namespace) -> int:
    params, tols = load_config(args.params)
    if args.tolerance is not None:
        if args.tolerance <= 0:
            raise UsageError("--tolerance must be positive")
        tols["root"] = args.tolerance
    if getattr(args, "threads", 1) < 1:
        raise UsageError("--threads must be at least 1")
    timings = {}

    if args.command == "lattice":
        t = time.perf_counter()
        doc = lattice_section(args.k, _parse_order(args.order), tols)
        timings["lattice"] = time.perf_counter() - t
    elif args.command == "certify":
        doc = certify_section(args.mode, args.threads, args.timings)
    elif args.command == "orbit":
        if args.n < 0:
            raise UsageError("--n must be non-negative")
        doc = orbit_section(params, args.n)
    else:
        t = time.perf_counter()
        if args.lattice_section:
            lat = _load_section(args.lattice_section)["section"]
        else:
            lat = lattice_section(args.k, _parse_order(args.order), tols)
        timings["lattice"] = time.perf_counter() - t
        t = time.perf_counter()
        if args.certify_section:
            cer = _load_section(args.certify_section)["section"]
            if cer.get("mode") != "full":
                raise UsageError("the certify section must come from --mode full")
        else:
            cer = certify_section("full", args.threads, False)
        timings["certify"] = time.perf_counter() - t
        doc = assemble_report(lat, cer, params, {k: round(v, 3) for k, v in timings.items()} if args.timings else None)
        _emit(doc, args.out)
        return EXIT_OK if doc["verdict"] == "certified" else EXIT_FAIL

    wrapped = {"schema_version": SCHEMA_VERSION, "command": args.command, "section": doc}
    if args.timings and timings:
        wrapped["elapsed_seconds"] = {k: round(v, 3) for k, v in timings.items()}
    _emit(wrapped, args.out)
    return EXIT_OK if doc["passed"] else EXIT_FAIL


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return run(args)
    except UsageError as exc:
        print(f"blancert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CertificateError, LatticeError, PolyError) as exc:
        print(f"blancert: assertion failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
