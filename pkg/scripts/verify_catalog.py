"""Run the full theorem suite over the catalog and write a JSON report.

    python scripts/verify_catalog.py --max-order 40 --workers 4 --out results/suite40.json
"""
import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from redpower.invariants import Caps
from redpower.theorems import default_catalog, run_suite


@dataclass
class Config:
    max_order: int = 32
    workers: int = 1
    out: str = "results/suite.json"
    perfect_cap: int = 40


def main(cfg: Config) -> int:
    t0 = time.perf_counter()
    catalog = default_catalog(cfg.max_order)
    report = run_suite(catalog, caps=Caps(perfect_cap=cfg.perfect_cap), workers=cfg.workers)
    elapsed = time.perf_counter() - t0
    out = Path(cfg.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(report.to_json(indent=1))
    print(report.to_table())
    print(f"{len(catalog)} groups in {elapsed:.1f}s -> {out}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-order", type=int, default=Config.max_order)
    p.add_argument("--workers", type=int, default=Config.workers)
    p.add_argument("--out", default=Config.out)
    p.add_argument("--perfect-cap", type=int, default=Config.perfect_cap)
    a = p.parse_args()
    raise SystemExit(main(Config(a.max_order, a.workers, a.out, a.perfect_cap)))
