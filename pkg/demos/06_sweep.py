"""A small seeded sweep; the report depends only on the config and the seed."""

import tempfile
from pathlib import Path

from finitetype.sweep import sweep

cfg = {"k1_cases": 10, "k2_cases": 5, "general_cases": 3, "xind_cases": 3, "cequiv_k2_cases": 3, "cequiv_k3_cases": 2}
with tempfile.TemporaryDirectory() as out:
    res = sweep(cfg, seed=3, out=out)
    print(f"{len(res.results)} cases, {len(res.failures)} failures")
    print((Path(out) / "summary.csv").read_text().splitlines()[0])
    print((Path(out) / "summary.csv").read_text().splitlines()[1])
