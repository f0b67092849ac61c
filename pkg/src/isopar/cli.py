"""Command-line front end: ``isopar {classify,fkm,fiber,enumerate}``.

Every command prints one JSON document (or CSV for ``enumerate --format csv``)
to stdout or to ``--out``.  Exit codes: 0 success / admissible, 1 negative
verdict or failed verification, 2 bad input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import asdict, dataclass

from isopar.classify import (
    DimensionTriple,
    StolzVariant,
    enumerate_fkm,
    stolz,
    theorem_a,
)
from isopar.clifford import build_clifford_system
from isopar.fkm import DegenerateMultiplicity, FkmPolynomial, verify_cartan_munzner
from isopar.geometry import GeometryError, NonConvergence, Tolerances, curvature_report
from isopar.homotopy import (
    FiberConfig,
    fiber_homology,
    fundamental_group,
    poincare_series,
    rational_type,
    table_consistency,
)

SCHEMA_VERSION = "1"
SEED_ENV = "ISOPAR_SEED"

ADMISSIBILITY_NOTE = (
    "admissible = satisfies the necessary conditions on (n; m_+, m_-); "
    "realizability of every admissible triple is claimed but not constructed"
)


@dataclass
class RunConfig:
    seed: int = 0
    samples: int = 100
    tol_cm: float = 1e-9
    tol_cluster: float = 1e-5
    output_path: str | None = None
    format: str = "json"

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if self.tol_cm <= 0 or self.tol_cluster <= 0:
            raise ValueError("tolerances must be > 0")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# serialization


def _format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return json.dumps(None)
    s = format(x, ".17g")
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float written to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, str, bool)) or v is None for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return dumps(obj.item(), indent, _level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit(text: str, cfg: RunConfig) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _envelope(command: str, cfg: RunConfig, **payload) -> dict:
    out = {"schema_version": SCHEMA_VERSION, "command": command}
    config = asdict(cfg)
    config.pop("output_path")
    out["config"] = config
    out.update(payload)
    return out


# ---------------------------------------------------------------------------
# commands


def _stolz_block(n: int, m_plus: int, m_minus: int) -> dict | None:
    if n != 2 * (m_plus + m_minus):
        return None
    hi, lo = max(m_plus, m_minus), min(m_plus, m_minus)
    block = {"dupin": stolz(hi, lo, StolzVariant.Dupin).to_dict(), "homotopy_sphere": None}
    if 2 <= lo < hi:
        block["homotopy_sphere"] = stolz(hi, lo, StolzVariant.HomotopySphere).to_dict()
    return block


def cmd_classify(args, cfg: RunConfig) -> int:
    try:
        triple = DimensionTriple(args.n, args.m_plus, args.m_minus)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    verdict = theorem_a(triple)
    doc = _envelope(
        "classify",
        cfg,
        triple={"n": triple.n, "m_plus": triple.m_plus, "m_minus": triple.m_minus},
        **verdict.to_dict(),
        note=ADMISSIBILITY_NOTE,
    )
    stolz_block = _stolz_block(triple.n, triple.m_plus, triple.m_minus)
    if stolz_block is not None:
        doc["stolz"] = stolz_block
    _emit(dumps(doc), cfg)
    return 0 if verdict.admissible else 1


def cmd_fkm(args, cfg: RunConfig) -> int:
    system = build_clifford_system(args.m, args.k)
    try:
        F = FkmPolynomial(system)
    except DegenerateMultiplicity as exc:
        raise UsageError(f"focal degenerate: {exc}") from exc

    if args.action == "build":
        _emit(dumps(system.to_dict()), cfg)
        return 0

    header = {"m": args.m, "k": args.k, "N": F.N, "n": F.n, "multiplicities": list(F.mult_pair)}
    if args.action == "verify":
        report = verify_cartan_munzner(F, sample_count=cfg.samples, seed=cfg.seed, tol=cfg.tol_cm)
        _emit(dumps(_envelope("fkm verify", cfg, **header, report=report.to_dict())), cfg)
        return 0 if report.passed else 1

    levels = args.level if args.level else [0.0]
    for c in levels:
        if not -1.0 < c < 1.0:
            raise UsageError(f"level must satisfy -1 < c < 1, got {c}")
    tols = Tolerances(cluster=cfg.tol_cluster)
    reports = []
    for c in levels:
        reports.append(curvature_report(F, c, cfg.samples, cfg.seed, tols).to_dict())
    _emit(dumps(_envelope("fkm curvature", cfg, **header, reports=reports)), cfg)
    return 0


def cmd_fiber(args, cfg: RunConfig) -> int:
    a, b, tp, tm = args.m_plus, args.m_minus, args.twist_plus, args.twist_minus
    note = None
    if a < b:
        a, b, tp, tm = b, a, tm, tp
        note = f"reordered to (m_plus, m_minus) = ({a}, {b}) with m_plus >= m_minus"
    try:
        fc = FiberConfig(a, b, tp, tm)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    d = args.max_degree
    types = rational_type(fc, args.homotopy_sphere)
    doc = _envelope(
        "fiber",
        cfg,
        fiber_config={"m_plus": a, "m_minus": b, "twist_plus": tp, "twist_minus": tm},
        pi1=fundamental_group(fc).value,
        homology=[dict(i=i, group=str(g), **g.to_dict()) for i, g in ((i, fiber_homology(fc, i)) for i in range(d + 1))],
        rational_types=[str(t) for t in types],
        poincare_series=poincare_series(types[0], d),
        consistent=not table_consistency(fc, d, args.homotopy_sphere),
    )
    if note:
        doc["note"] = note
    _emit(dumps(doc), cfg)
    return 0


def enumerate_rows(max_dim: int, fkm_only: bool = False, with_stolz: bool = False) -> list[dict]:
    """Admissible triples with ambient dimension n + 1 <= max_dim, FKM sources attached."""
    sources: dict[tuple[int, int, int], list[str]] = {}
    for e in enumerate_fkm(max_dim):
        sources.setdefault((e.n, *e.pair), []).append(f"FKM({e.m},{e.k})")

    keys = set(sources)
    if not fkm_only:
        for n in range(1, max_dim):
            for lo in range(1, n + 1):
                for hi in range(lo, n + 1):
                    s = hi + lo
                    if s > n:
                        break
                    if n in (s, 2 * s) or (hi == lo and n in (3 * lo, 4 * lo, 6 * lo)):
                        keys.add((n, hi, lo))

    rows = []
    for n, hi, lo in sorted(keys):
        verdict = theorem_a(DimensionTriple(n, hi, lo))
        if not verdict.admissible and (n, hi, lo) not in sources:
            continue
        row = {
            "n": n,
            "m_plus": hi,
            "m_minus": lo,
            "sources": sources.get((n, hi, lo), []),
            "cases": sorted(c.value for c in verdict.cases),
            "g": verdict.g,
        }
        if with_stolz:
            row["stolz"] = _stolz_block(n, hi, lo)
        rows.append(row)
    return rows


def cmd_enumerate(args, cfg: RunConfig) -> int:
    if args.max_dim < 4:
        raise UsageError(f"--max-dim must be >= 4, got {args.max_dim}")
    rows = enumerate_rows(args.max_dim, fkm_only=args.fkm, with_stolz=args.stolz)
    if cfg.format == "csv":
        buf = io.StringIO()
        fields = ["n", "m_plus", "m_minus", "sources", "cases", "g"]
        if args.stolz:
            fields += ["stolz_homotopy_sphere", "stolz_dupin"]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            flat = {k: row[k] for k in ("n", "m_plus", "m_minus", "g")}
            flat["sources"] = ";".join(row["sources"])
            flat["cases"] = ";".join(row["cases"])
            if args.stolz:
                st = row["stolz"] or {}
                hs, du = st.get("homotopy_sphere"), st.get("dupin")
                flat["stolz_homotopy_sphere"] = hs["reason"] if hs else ""
                flat["stolz_dupin"] = du["reason"] if du else ""
            writer.writerow(flat)
        _emit(buf.getvalue(), cfg)
    else:
        _emit(dumps(_envelope("enumerate", cfg, max_dim=args.max_dim, rows=rows)), cfg)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help=f"RNG seed (default: ${SEED_ENV} or 0)")
    common.add_argument("--samples", type=_positive_int, default=100)
    common.add_argument("--tol-cm", type=float, default=1e-9, help="relative tolerance for Cartan-Munzner checks")
    common.add_argument("--tol-cluster", type=float, default=1e-5, help="eigenvalue clustering tolerance")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    parser = argparse.ArgumentParser(prog="isopar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="check a triple (n; m_+, m_-)")
    p.add_argument("n", type=_positive_int)
    p.add_argument("m_plus", type=_positive_int)
    p.add_argument("m_minus", type=_positive_int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fkm", parents=[common], help="Clifford-system hypersurfaces")
    p.add_argument("m", type=_positive_int)
    p.add_argument("k", type=_positive_int)
    p.add_argument("action", choices=("build", "verify", "curvature"))
    p.add_argument("--level", type=float, action="append", help="level value c (repeatable)")
    p.set_defaults(func=cmd_fkm)

    p = sub.add_parser("fiber", parents=[common], help="invariants of the homotopy fiber")
    p.add_argument("m_plus", type=_positive_int)
    p.add_argument("m_minus", type=_positive_int)
    p.add_argument("--twist-plus", action="store_true")
    p.add_argument("--twist-minus", action="store_true")
    p.add_argument("--max-degree", type=int, default=20)
    p.add_argument("--homotopy-sphere", action="store_true", help="drop types excluded when DE is a homotopy sphere")
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("enumerate", parents=[common], help="table of admissible and FKM triples")
    p.add_argument("--max-dim", type=int, required=True, help="maximal ambient sphere dimension n + 1")
    p.add_argument("--stolz", action="store_true", help="add the divisibility verdicts")
    p.add_argument("--fkm", action="store_true", help="only rows realized by Clifford systems")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        seed = args.seed if args.seed is not None else _default_seed()
        try:
            cfg = RunConfig(
                seed=seed,
                samples=args.samples,
                tol_cm=args.tol_cm,
                tol_cluster=args.tol_cluster,
                output_path=args.out,
                format=args.format,
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if cfg.format == "csv" and args.command != "enumerate":
            raise UsageError("--format csv is only available for enumerate")
        if getattr(args, "max_degree", 0) < 0:
            raise UsageError("--max-degree must be >= 0")
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"isopar {args.command}: {exc}", file=sys.stderr)
        return 2
    except NonConvergence as exc:
        print(f"isopar {args.command}: {exc} (sample {exc.index})", file=sys.stderr)
        return 3
    except GeometryError as exc:
        print(f"isopar {args.command}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
