"""Command-line front end: deterministic, machine-readable dumps and checks.

Data goes to stdout, diagnostics to stderr, and a fixed configuration
always produces byte-identical output (floats are printed in their
shortest round-trip form).  Exit codes: 0 success, 1 internal invariant
violation (including any failed `verify` check), 2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .core import Mat2, canonical_necklace, conjugate, word_to_matrix
from .enumeration import (
    EnumerationParams,
    brute_force_classes,
    classes_by_length,
    enumerate_classes,
)
from .stats import cauchy_cdf_compare, density_mod_m
from .symbols import (
    dedekind_sum,
    dedekind_sum_naive,
    phi,
    phi_numeric_oracle,
    psi,
    psi_from_word,
)
from .winding import winding_psi

__all__ = ["RunConfig", "run", "main"]

SCHEMA_VERSION = 1
WORKERS_ENV = "MODKNOTS_WORKERS"

# Default ratio bins for the cauchy report; infinite outer edges make the
# theoretical masses a partition of unity.
_CAUCHY_EDGES = (
    -math.inf, -4.0, -2.0, -1.5, -1.0, -0.75, -0.5, -0.25,
    0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 4.0, math.inf,
)


@dataclass(frozen=True)
class RunConfig:
    command: str
    trace_bound: int | None = None
    length_bound: float | None = None
    modulus: int | None = None
    output_format: str = "csv"
    n_terms: int | None = None
    n_samples: int = 64
    worker_count: int = 1
    oracle_guard: int = 20


def _fmt(value) -> str:
    """Shortest round-trip text for scalars; floats via repr."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit_csv(header, rows, out) -> None:
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(_fmt(x) for x in row) + "\n")


def _emit_json(payload, out) -> None:
    json.dump(payload, out, indent=2, allow_nan=False)
    out.write("\n")


def _json_edge(x: float):
    """Infinite bin edges as strings; strict JSON has no Infinity literal."""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _class_list(config: RunConfig):
    if config.trace_bound is not None:
        return enumerate_classes(
            EnumerationParams(trace_bound=config.trace_bound, worker_count=config.worker_count)
        )
    return classes_by_length(config.length_bound, worker_count=config.worker_count)


def _cmd_enumerate(config: RunConfig, out) -> int:
    records = _class_list(config)
    header = ["necklace", "a", "b", "c", "d", "trace", "length"]
    rows = [
        (r.necklace, r.rep.a, r.rep.b, r.rep.c, r.rep.d, r.spectral.trace, r.spectral.length)
        for r in records
    ]
    if config.output_format == "csv":
        _emit_csv(header, rows, out)
    else:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "enumerate",
                "trace_bound": config.trace_bound,
                "length_bound": config.length_bound,
                "records": [dict(zip(header, row)) for row in rows],
            },
            out,
        )
    return 0


def _cmd_symbols(config: RunConfig, out) -> int:
    records = _class_list(config)
    header = [
        "necklace", "a", "b", "c", "d", "trace", "length", "phi", "psi", "psi_word",
    ]
    rows = []
    for r in records:
        rows.append(
            (
                r.necklace, r.rep.a, r.rep.b, r.rep.c, r.rep.d,
                r.spectral.trace, r.spectral.length,
                phi(r.rep), psi(r.rep), psi_from_word(r.necklace),
            )
        )
    if config.output_format == "csv":
        _emit_csv(header, rows, out)
    else:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "symbols",
                "trace_bound": config.trace_bound,
                "length_bound": config.length_bound,
                "records": [dict(zip(header, row)) for row in rows],
            },
            out,
        )
    return 0


def _cmd_density(config: RunConfig, out) -> int:
    report = density_mod_m(config.trace_bound, config.modulus, worker_count=config.worker_count)
    if config.output_format == "csv":
        header = ["modulus", "trace_bound", "residue", "count", "density", "max_deviation"]
        rows = [
            (report.m, report.nu, k, report.counts[k], report.densities[k], report.max_deviation)
            for k in range(report.m)
        ]
        _emit_csv(header, rows, out)
    else:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "density",
                "modulus": report.m,
                "trace_bound": report.nu,
                "total": report.total,
                "counts": list(report.counts),
                "densities": list(report.densities),
                "max_deviation": report.max_deviation,
            },
            out,
        )
    return 0


def _cmd_cauchy(config: RunConfig, out) -> int:
    report = cauchy_cdf_compare(
        config.length_bound, _CAUCHY_EDGES, worker_count=config.worker_count
    )
    if config.output_format == "csv":
        header = [
            "length_bound", "sample_count", "bin_lo", "bin_hi",
            "empirical", "theoretical", "ks_distance",
        ]
        rows = [
            (report.length_bound, report.sample_count, a, b, emp, theo, report.ks_distance)
            for (a, b, emp, theo) in report.bins
        ]
        _emit_csv(header, rows, out)
    else:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "cauchy",
                "length_bound": report.length_bound,
                "sample_count": report.sample_count,
                "ks_distance": report.ks_distance,
                "bins": [
                    {
                        "lo": _json_edge(a),
                        "hi": _json_edge(b),
                        "empirical": emp,
                        "theoretical": theo,
                    }
                    for (a, b, emp, theo) in report.bins
                ],
            },
            out,
        )
    return 0


def _cmd_winding(config: RunConfig, out) -> int:
    records = _class_list(config)
    n_terms = config.n_terms if config.n_terms is not None else 24
    header = ["necklace", "trace", "psi", "winding", "agree"]
    rows = []
    for r in records:
        expected = psi(r.rep)
        got = winding_psi(r.rep, n=config.n_samples, n_terms=n_terms)
        rows.append((r.necklace, r.spectral.trace, expected, got, expected == got))
    if config.output_format == "csv":
        _emit_csv(header, rows, out)
    else:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "winding",
                "trace_bound": config.trace_bound,
                "records": [dict(zip(header, row)) for row in rows],
            },
            out,
        )
    if not all(row[4] for row in rows):
        print("winding/psi disagreement detected", file=sys.stderr)
        return 1
    return 0


def _verify_checks(config: RunConfig):
    """Yield (name, passed, detail) for the full invariant suite."""
    bound = config.trace_bound if config.trace_bound is not None else 20
    rng = random.Random(20201121)

    classes = enumerate_classes(
        EnumerationParams(trace_bound=bound, worker_count=config.worker_count)
    )

    top = min(bound, config.oracle_guard)
    ok = all(
        enumerate_classes(EnumerationParams(trace_bound=nu))
        == brute_force_classes(nu, guard=config.oracle_guard)
        for nu in range(4, top + 1)
    )
    yield "oracle_equivalence", ok, f"nu in 4..{top}"

    bad = sum(1 for r in classes if psi(r.rep) != psi_from_word(r.necklace))
    yield "psi_word_agreement", bad == 0, f"{len(classes)} classes; {bad} mismatches"

    z = 0.1 + 2j
    words = [
        "".join(rng.choice("LR") for _ in range(rng.randint(1, 8))) for _ in range(25)
    ]
    bad = sum(1 for w in words if phi(word_to_matrix(w)) != phi_numeric_oracle(word_to_matrix(w), z))
    yield "phi_numeric_oracle", bad == 0, f"25 random words; {bad} mismatches"

    pairs = 0
    ok = True
    while pairs < 200:
        h = rng.randint(1, 400)
        k = rng.randint(1, 400)
        if math.gcd(h, k) != 1:
            continue
        pairs += 1
        recip = dedekind_sum(h, k) + dedekind_sum(k, h)
        if recip != Fraction(-1, 4) + Fraction(h * h + k * k + 1, 12 * h * k):
            ok = False
    yield "dedekind_reciprocity", ok, "200 coprime pairs; exact"

    ok = all(
        dedekind_sum(h, k) == dedekind_sum_naive(h, k)
        for k in range(1, 40)
        for h in range(k)
    )
    yield "dedekind_fast_vs_naive", ok, "all h mod k; k < 40"

    ok = True
    for _ in range(50):
        m = word_to_matrix("".join(rng.choice("LR") for _ in range(rng.randint(2, 8))))
        p = word_to_matrix("".join(rng.choice("LR") for _ in range(rng.randint(1, 6))))
        if psi(conjugate(m, p)) != psi(m):
            ok = False
    yield "psi_conjugacy_invariance", ok, "50 random conjugations"

    ok = all(psi(-r.rep) == psi(r.rep) for r in classes)
    yield "psi_projective", ok, "psi(-M) = psi(M) on all classes"

    ok = True
    for m in (2, 3, 5):
        report = density_mod_m(bound, m, classes=classes)
        for k in range(m):
            if report.counts[k] != report.counts[(m - k) % m]:
                ok = False
    yield "mirror_symmetry", ok, "counts of k and -k agree for m in {2;3;5}"

    wind_bound = min(bound, 12)
    wind_classes = [r for r in classes if r.spectral.trace < wind_bound]
    bad = sum(
        1 for r in wind_classes if winding_psi(r.rep, n=config.n_samples) != psi(r.rep)
    )
    yield "winding_agreement", bad == 0, f"{len(wind_classes)} classes below trace {wind_bound}"

    ok = True
    for _ in range(100):
        w = "".join(rng.choice("LR") for _ in range(rng.randint(1, 30)))
        m = word_to_matrix(w)
        if m.a * m.d - m.b * m.c != 1:
            ok = False
        if "L" in w and "R" in w:
            try:
                n1 = canonical_necklace(w)
            except ValueError:
                continue
            if canonical_necklace(n1) != n1:
                ok = False
    yield "word_invariants", ok, "det 1 and necklace idempotence; 100 random words"


def _cmd_verify(config: RunConfig, out) -> int:
    results = list(_verify_checks(config))
    if config.output_format == "csv":
        _emit_csv(
            ["check", "result", "detail"],
            [(name, "PASS" if ok else "FAIL", detail) for name, ok, detail in results],
            out,
        )
    else:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "verify",
                "checks": [
                    {"check": name, "passed": ok, "detail": detail}
                    for name, ok, detail in results
                ],
                "all_passed": all(ok for _, ok, _ in results),
            },
            out,
        )
    if not all(ok for _, ok, _ in results):
        print("verification failed", file=sys.stderr)
        return 1
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "symbols": _cmd_symbols,
    "density": _cmd_density,
    "cauchy": _cmd_cauchy,
    "winding": _cmd_winding,
    "verify": _cmd_verify,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modknots",
        description="Enumerate modular knots and check the Rademacher symbol identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, trace=False, length=False, either=False, modulus=False):
        if either:
            p.add_argument("--trace-bound", type=int, default=None)
            p.add_argument("--length-bound", type=float, default=None)
        elif trace:
            p.add_argument("--trace-bound", type=int, required=True)
        elif length:
            p.add_argument("--length-bound", type=float, required=True)
        if modulus:
            p.add_argument("--mod", type=int, required=True, dest="modulus")
        p.add_argument("--format", choices=("csv", "json"), default="csv", dest="output_format")
        p.add_argument("--workers", type=int, default=None, dest="worker_count")

    p = sub.add_parser("enumerate", help="dump all classes below a trace or length bound")
    add_common(p, either=True)
    p = sub.add_parser("symbols", help="class dump with phi, psi and the word statistic")
    add_common(p, either=True)
    p = sub.add_parser("density", help="distribution of psi mod m below a trace bound")
    add_common(p, trace=True, modulus=True)
    p = sub.add_parser("cauchy", help="psi/length distribution against the arctan law")
    add_common(p, length=True)
    p = sub.add_parser("winding", help="per-class winding numbers against psi")
    add_common(p, trace=True)
    p.add_argument("--n-samples", type=int, default=64)
    p.add_argument("--n-terms", type=int, default=None)
    p = sub.add_parser("verify", help="run the full invariant suite; nonzero exit on failure")
    add_common(p)
    p.add_argument("--trace-bound", type=int, default=20)
    p.add_argument("--oracle-guard", type=int, default=20)
    p.add_argument("--n-samples", type=int, default=64)
    return parser


def parse_config(argv=None) -> RunConfig:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    if ns.command in ("enumerate", "symbols"):
        have_trace = ns.trace_bound is not None
        have_length = getattr(ns, "length_bound", None) is not None
        if have_trace == have_length:
            parser.error("pass exactly one of --trace-bound / --length-bound")
    if getattr(ns, "trace_bound", None) is not None and ns.trace_bound < 3 and ns.command != "verify":
        parser.error("--trace-bound must be >= 3")
    if getattr(ns, "modulus", None) is not None and ns.modulus < 2:
        parser.error("--mod must be >= 2")
    workers = ns.worker_count
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    if workers < 1:
        parser.error("--workers must be >= 1")
    return RunConfig(
        command=ns.command,
        trace_bound=getattr(ns, "trace_bound", None),
        length_bound=getattr(ns, "length_bound", None),
        modulus=getattr(ns, "modulus", None),
        output_format=ns.output_format,
        n_terms=getattr(ns, "n_terms", None),
        n_samples=getattr(ns, "n_samples", 64),
        worker_count=workers,
        oracle_guard=getattr(ns, "oracle_guard", 20),
    )


def run(config: RunConfig, out=None) -> int:
    """Execute one configuration; returns the process exit status."""
    if out is None:
        out = sys.stdout
    handler = _COMMANDS.get(config.command)
    if handler is None:
        print(f"unknown command: {config.command}", file=sys.stderr)
        return 2
    try:
        return handler(config, out)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> None:
    sys.exit(run(parse_config(argv)))


if __name__ == "__main__":
    main()
