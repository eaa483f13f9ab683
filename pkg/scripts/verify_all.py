"""Run every verification campaign and write one JSON report per campaign."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from domatic_lab.campaigns import CAMPAIGNS, run_campaign


@dataclass
class Config:
    seed: int = 1
    out_dir: Path = Path("reports")
    only: list[str] = field(default_factory=list)
    budget: float | None = None


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out-dir", type=Path, default=Path("reports"))
    ap.add_argument("--only", nargs="*", default=[], choices=sorted(CAMPAIGNS))
    ap.add_argument("--budget", type=float)
    cfg = Config(**vars(ap.parse_args()))

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    failed = []
    for name in cfg.only or list(CAMPAIGNS):
        t0 = time.monotonic()
        rep = run_campaign(name, cfg.seed, cfg.budget)
        (cfg.out_dir / f"{name}.json").write_text(json.dumps(rep.to_json(), indent=2, default=str) + "\n")
        s = rep.summary
        print(f"{name:14s} ok={s['ok']:4d} fail={s['fail']:3d} timeout={s['timeout']:3d}  {time.monotonic() - t0:7.1f}s")
        if not rep.passed:
            failed.append(name)
    if failed:
        print("not passing:", ", ".join(failed))
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
