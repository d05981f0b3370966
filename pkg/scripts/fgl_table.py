"""Solve the isomorphisms between multiplicative formal group laws and time them."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from kltheory.genus import fgl_isomorphism


@dataclass
class Config:
    kmin: int = 2
    kmax: int = 6
    order: int = 32
    show: int = 10


def main(cfg: Config) -> None:
    for k in range(cfg.kmin, cfg.kmax + 1):
        start = time.perf_counter()
        res = fgl_isomorphism(k, cfg.order)
        elapsed = time.perf_counter() - start
        head = ", ".join(str(c) for c in res.series.coeffs[1 : cfg.show + 1])
        print(f"k={k}  integral={res.integral}  holds={res.verified}  {elapsed:.2f}s  [{head}, ...]")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmin", type=int, default=Config.kmin)
    ap.add_argument("--kmax", type=int, default=Config.kmax)
    ap.add_argument("--order", type=int, default=Config.order)
    a = ap.parse_args()
    main(Config(a.kmin, a.kmax, a.order))
