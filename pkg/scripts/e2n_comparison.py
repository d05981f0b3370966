"""Compare the two candidate K-data for the even extension algebras E_2n.

One version has eta = 0 out of degree 6, the other eta != 0. Prints the L-groups
of each and whether a complexification making the Wood sequence exact exists
in the shipped data.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from kltheory.abelian import render_group
from kltheory.catalog import builders
from kltheory.komodule import wood_check
from kltheory.ltheory import l_groups


@dataclass
class Config:
    ns: list[int] = field(default_factory=lambda: [1, 2, 3, 4])


def table(m) -> str:
    return "(" + ", ".join(render_group(g.iso_type) for g in l_groups(m).slots) + ")"


def main(cfg: Config) -> None:
    for n in cfg.ns:
        plain = builders.e_module(n, 0)
        wood = builders.e_wood_complex(n)
        print(f"n={n}  eta6=0: L = {table(plain)}")
        print(f"n={n}  eta6=1: L = {table(wood.real)}  wood sequence: {wood_check(wood).describe()}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=Config().ns)
    main(Config(ap.parse_args().n))
