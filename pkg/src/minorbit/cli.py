"""Batch verifier and report emission.

For each requested ADE type this runs the full pipeline: root system,
Chevalley basis, split Casimir, quadratic ideal (full image or the
Cartan-pair generators, depending on mode), Cartan restriction,
quotient Hilbert function, and the resolution cohomology model, plus
the matrix-model oracle for family A.  Verification failures are data
in the report; only construction bugs raise.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from typing import Optional

from .chevalley import build_chevalley, casimir_top_eigenvalue, split_casimir, sym2_dim
from .orbit_ideal import (
    CartanPolynomial,
    cartan_pair_generators,
    degree2_ideal,
    projected_span,
    quotient_hilbert,
    span_in_sym2h,
)
from .resolution import betti_numbers, dynkin_tree, euler_characteristic
from .rootsys import (
    InvariantViolation,
    SimpleType,
    build_root_system,
    root_to_weight,
    weyl_dim,
)
from .sln_oracle import oracle_quotient_dims

__all__ = [
    "VerificationReport",
    "ade_types",
    "verify",
    "verify_all",
    "emit_report",
    "main",
]

MODES = ("full", "cartan-pairs", "auto")
FORMATS = ("text", "json")


@dataclass
class VerificationReport:
    family: str
    rank: int
    dim_g: int
    dim_sym2: int
    dim_v2theta: int
    ideal2_dim: Optional[int]
    projected_rank: int
    expected_projected_rank: int
    quotient_hilbert: list
    betti: list
    poincare_coeffs: list
    hikita_match: bool
    oracle_match: Optional[bool]
    mode: str
    timings_ms: dict

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(**d)

    @property
    def passed(self) -> bool:
        return self.hikita_match and self.oracle_match is not False


def _pad(xs: list, length: int) -> list:
    if len(xs) >= length:
        return list(xs[:length])
    return list(xs) + [0] * (length - len(xs))


def verify(t: SimpleType, max_degree: int = 4, mode: str = "auto") -> VerificationReport:
    """Run every check for one type and assemble the report.

    Mode auto picks the full operator image up to rank 6 and the
    Cartan-pair generators beyond, where the symmetric square is too
    large to assemble profitably.
    """
    if max_degree < 2:
        raise ValueError(f"max_degree must be at least 2, got {max_degree}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    chosen = mode if mode != "auto" else ("full" if t.rank <= 6 else "cartan-pairs")

    timings: dict = {}
    last = time.perf_counter()

    def mark(stage: str) -> None:
        nonlocal last
        now = time.perf_counter()
        timings[stage] = round((now - last) * 1000.0, 3)
        last = now

    rs = build_root_system(t)
    mark("root_system")
    L = build_chevalley(rs)
    mark("chevalley")
    Omega = split_casimir(L)
    c = casimir_top_eigenvalue(L)
    mark("casimir")

    n = t.rank
    theta2 = root_to_weight(rs, rs.highest_root).scaled(2)
    dim_v2theta = weyl_dim(rs, theta2)
    expected_rank = n * (n + 1) // 2

    if chosen == "full":
        ideal = degree2_ideal(L, Omega, c)
        ideal2_dim: Optional[int] = ideal.dim
        mark("ideal")
        projected_rank, span = projected_span(L, ideal)
        mark("projection")
    else:
        gens = cartan_pair_generators(L, Omega, c)
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
        for (i, j), g in zip(pairs, gens):
            exp = [0] * n
            exp[i] += 1
            exp[j] += 1
            want = CartanPolynomial({tuple(exp): -c}, 2, n)
            if g != want:
                raise InvariantViolation(
                    f"cartan-pairs stage: generator for pair ({i + 1}, {j + 1}) "
                    f"is not -c h_i h_j"
                )
        ideal2_dim = None
        mark("ideal")
        projected_rank, span = span_in_sym2h(n, gens)
        mark("projection")

    qh = quotient_hilbert(L, span, max_degree)
    mark("quotient")

    tree = dynkin_tree(t)
    model = betti_numbers(tree)
    if euler_characteristic(tree) != model.betti[0] - model.betti[1] + model.betti[2]:
        raise InvariantViolation("resolution stage: Euler characteristic mismatch")
    ring = _pad(model.ring_dims, max_degree + 1)
    hikita_match = list(qh) == ring
    mark("resolution")

    oracle_match: Optional[bool] = None
    if t.family == "A":
        oracle_match = oracle_quotient_dims(n + 1, max_degree) == list(qh)
        mark("oracle")

    return VerificationReport(
        family=t.family,
        rank=t.rank,
        dim_g=rs.dim_g,
        dim_sym2=sym2_dim(rs.dim_g),
        dim_v2theta=dim_v2theta,
        ideal2_dim=ideal2_dim,
        projected_rank=projected_rank,
        expected_projected_rank=expected_rank,
        quotient_hilbert=list(qh),
        betti=list(model.betti),
        poincare_coeffs=list(model.poincare),
        hikita_match=hikita_match,
        oracle_match=oracle_match,
        mode=chosen,
        timings_ms=timings,
    )


def ade_types(max_rank: int) -> list[SimpleType]:
    """Every valid ADE type of rank at most max_rank, A then D then E."""
    if max_rank < 1:
        raise ValueError(f"max_rank must be at least 1, got {max_rank}")
    types = [SimpleType("A", r) for r in range(1, max_rank + 1)]
    types += [SimpleType("D", r) for r in range(4, max_rank + 1)]
    types += [SimpleType("E", r) for r in (6, 7, 8) if r <= max_rank]
    return types


def verify_all(max_rank: int, max_degree: int = 4, mode: str = "auto") -> list:
    """Reports for every ADE type with rank up to max_rank."""
    return [verify(t, max_degree, mode) for t in ade_types(max_rank)]


def _poincare_str(coeffs: list) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            terms.append(f"{c}*t^{k}")
    return " + ".join(terms) if terms else "0"


def emit_report(r: VerificationReport, format: str) -> bytes:
    """Serialize one report; json round-trips, text is a fixed-width table."""
    if format == "json":
        return (json.dumps(r.to_dict(), indent=2) + "\n").encode()
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    rows = [
        f"type: {r.family}{r.rank}",
        f"mode: {r.mode}",
        f"dim_g: {r.dim_g}",
        f"dim_sym2: {r.dim_sym2}",
        f"dim_v2theta: {r.dim_v2theta}",
        f"ideal2_dim: {'-' if r.ideal2_dim is None else r.ideal2_dim}",
        f"projected_rank: {r.projected_rank} (expected {r.expected_projected_rank})",
        f"quotient_hilbert: {tuple(r.quotient_hilbert)}",
        f"betti: {tuple(r.betti)}",
        f"poincare: {_poincare_str(r.poincare_coeffs)}",
        f"hikita_match: {'PASS' if r.hikita_match else 'FAIL'}",
    ]
    if r.oracle_match is not None:
        rows.append(f"oracle_match: {'PASS' if r.oracle_match else 'FAIL'}")
    rows.append(
        "timings_ms: " + " ".join(f"{k}={v}" for k, v in r.timings_ms.items())
    )
    width = max(len(row) for row in rows)
    bar = "+" + "-" * (width + 2) + "+"
    lines = [bar] + [f"| {row.ljust(width)} |" for row in rows] + [bar]
    return ("\n".join(lines) + "\n").encode()


def main(argv: Optional[list] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="hikita-verify",
        description=(
            "Exact-arithmetic check that the quotient of Sym[h] by the "
            "Cartan restriction of the minimal-orbit quadrics matches the "
            "cohomology of the matching Kleinian resolution."
        ),
    )
    parser.add_argument("--family", choices=("A", "D", "E"), help="simple type family")
    parser.add_argument("--rank", type=int, help="rank of the simple type")
    parser.add_argument(
        "--max-degree", type=int, default=4, help="top polynomial degree to compare"
    )
    parser.add_argument("--mode", choices=MODES, default="auto")
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument(
        "--all",
        type=int,
        metavar="MAX_RANK",
        help="verify every ADE type up to this rank instead of a single type",
    )
    args = parser.parse_args(argv)

    if args.all is None and (args.family is None or args.rank is None):
        parser.error("either --all or both --family and --rank are required")

    try:
        if args.all is not None:
            reports = verify_all(args.all, args.max_degree, args.mode)
        else:
            reports = [verify(SimpleType(args.family, args.rank), args.max_degree, args.mode)]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(parser.format_usage(), end="", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3

    if args.format == "json":
        if args.all is not None:
            payload = {"reports": [r.to_dict() for r in reports]}
        else:
            payload = reports[0].to_dict()
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for r in reports:
            sys.stdout.write(emit_report(r, "text").decode())

    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
