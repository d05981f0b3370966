"""Tabulate 2-adic valuations of the obstruction terms for several odd c."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from kltheory.genus import two_adic_obstruction


@dataclass
class Config:
    cs: list[int] = field(default_factory=lambda: [3, 5, 7, 9, 15, 17])
    kmax: int = 30


def main(cfg: Config) -> None:
    reports = {c: two_adic_obstruction(c, cfg.kmax) for c in cfg.cs}
    print("k " + " ".join(f"c={c:<4}" for c in cfg.cs))
    for i in range(cfg.kmax):
        print(f"{i + 1:<2}" + "".join(f" {reports[c].rows[i].valuation:<6}" for c in cfg.cs))
    for c, rep in reports.items():
        print(f"c={c}: {rep.conclusion()}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--c", type=int, nargs="+", default=Config().cs)
    ap.add_argument("--kmax", type=int, default=Config.kmax)
    a = ap.parse_args()
    main(Config(a.c, a.kmax))
