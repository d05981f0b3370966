"""Run every catalog check and write the report (text, optionally JSON)."""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from kltheory.catalog import verify


@dataclass
class Config:
    name: str | None = None
    json_out: Path | None = None


def main(cfg: Config) -> int:
    rep = verify(cfg.name)
    print(rep.to_text())
    if cfg.json_out is not None:
        cfg.json_out.write_text(json.dumps(rep.to_dict(), indent=2, ensure_ascii=False) + "\n")
    return 0 if rep.passed else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--name")
    ap.add_argument("--json-out", type=Path)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.name, a.json_out)))
