"""Compare L of a module shifted by 4 with the one-slot rotation of its L-groups."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from kltheory.abelian import render_group
from kltheory.komodule import ko, shift
from kltheory.ltheory import l_groups, rotate


@dataclass
class Config:
    shifts: int = 8


def fmt(types) -> str:
    return "(" + ", ".join(render_group(t) for t in types) + ")"


def main(cfg: Config) -> None:
    for s in range(cfg.shifts):
        m = shift(ko(), s)
        base = l_groups(m).iso_types()
        moved = l_groups(shift(m, 4)).iso_types()
        status = "agree" if moved == rotate(base, 1) else "differ"
        print(f"shift {s}: L = {fmt(base)}  L(shift 4) = {fmt(moved)}  rotation = {fmt(rotate(base, 1))}  {status}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--shifts", type=int, default=Config.shifts)
    main(Config(ap.parse_args().shifts))
