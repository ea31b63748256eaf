"""Seeded corpus sweeps with JSON and CSV reports.

All random draws happen up front in the parent process, so the report is a
function of (config, seed) alone even when cases run on a process pool.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import random
import shlex
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .braid import BraidWord, parse_braid_word, render_orientation
from .corpus import distinct_same_permutation, random_knot_word, random_same_permutation
from .moves import MoveSpec
from .singular import DEFAULT_CONVENTION, SignConvention
from .verify import check_c_equivalence, check_general, check_theorem, check_x_independence, shrink

log = logging.getLogger(__name__)

DESK_MAX_K = 3

DEFAULTS: dict = {
    "k1_cases": 50,
    "k1_invariants": "c2,j2",
    "k2_cases": 20,
    "k2_invariants": "j3,c2",
    "general_cases": 10,
    "general_invariants": "c2",
    "xind_cases": 10,
    "xind_count": 3,
    "cequiv_k2_cases": 10,
    "cequiv_k3_cases": 10,
    "orientations": "0,1",
    "prefix_len": 4,
    "conv": DEFAULT_CONVENTION.value,
    "singular_rhs": True,
    "shrink": True,
    "force": False,
    "workers": 1,
}


def _coerce(value: str):
    v = value.strip()
    if v.lower() in ("true", "yes", "on"):
        return True
    if v.lower() in ("false", "no", "off"):
        return False
    try:
        return int(v)
    except ValueError:
        return v


def parse_config(text: str) -> dict:
    """JSON object, or flat ``key=value`` lines (``#`` starts a comment)."""
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)
    out = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {n}: expected key=value, got {line!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = _coerce(value)
    return out


def load_config(path: str | Path | None) -> dict:
    cfg = dict(DEFAULTS)
    if path:
        cfg.update(parse_config(Path(path).read_text()))
    return cfg


def _csv_list(value) -> list[str]:
    if isinstance(value, (list, tuple)):
        return [str(v) for v in value]
    return [p.strip() for p in str(value).split(",") if p.strip()]


@dataclass
class Case:
    kind: str  # theorem | general | xind | cequiv
    specs: list[dict]
    T: str
    xs: list[str]
    invariant: str
    n: int
    o: str
    conv: str
    singular_rhs: bool = False

    def spec_objs(self) -> list[MoveSpec]:
        return [MoveSpec(s["k"], s["d"], s["o"]) for s in self.specs]

    def words(self) -> tuple[BraidWord, list[BraidWord]]:
        T = parse_braid_word(self.T, self.n, self.o)
        return T, [parse_braid_word(x, self.n, self.o) for x in self.xs]


@dataclass
class CaseResult:
    case: Case
    passed: bool
    detail: dict = field(default_factory=dict)


def repro_command(case: Case, T: str | None = None, x: str | None = None) -> str:
    T = T if T is not None else case.T
    x = x if x is not None else (case.xs[0] if case.xs else case.T)
    sp = case.specs
    if case.kind == "general":
        d = ";".join(",".join(map(str, s["d"])) for s in sp)
        args = ["general", "--n", str(len(sp)), "--k", str(sp[0]["k"]), f"--d={d}", "--o", case.o]
    else:
        # --d=... keeps argparse from reading a leading -2 as an option
        args = ["check", "--k", str(sp[0]["k"]), "--d=" + ",".join(map(str, sp[0]["d"])), "--o", sp[0]["o"]]
    args += ["--t", T or "e", "--x", x or "e", "--inv", case.invariant, "--conv", case.conv]
    if case.singular_rhs:
        args.append("--singular-rhs")
    return "python -m finitetype " + " ".join(shlex.quote(a) for a in args)


def _random_spec(rng: random.Random, k: int, bit: int) -> MoveSpec:
    return MoveSpec(k, [rng.choice((2, -2)) for _ in range(k + 1)], [bit] * (k + 2))


def plan(cfg: dict, seed: int) -> list[Case]:
    """Draw the whole corpus from one seeded generator."""
    cfg = {**DEFAULTS, **cfg}
    rng = random.Random(seed)
    bits = [int(b) for b in _csv_list(cfg["orientations"])]
    plen = int(cfg["prefix_len"])
    conv = SignConvention(cfg["conv"]).value
    cases: list[Case] = []
    ks = sorted(int(key[1:].split("_")[0]) for key in cfg if key.startswith("k") and key.endswith("_cases"))
    for k in ks:
        count = int(cfg.get(f"k{k}_cases", 0))
        if count <= 0:
            continue
        if k > DESK_MAX_K and not cfg.get("force"):
            log.warning("k=%d exceeds desk-scale budget (k <= %d); skipped, set force=true to run", k, DESK_MAX_K)
            continue
        invs = _csv_list(cfg.get(f"k{k}_invariants", f"j{k + 1}"))
        for _ in range(count):
            bit = rng.choice(bits)
            spec = _random_spec(rng, k, bit)
            T = random_knot_word(rng, k + 2, plen, spec.o)
            x = random_same_permutation(rng, T, rng.randint(0, plen))
            for inv in invs:
                for singular in ((False, True) if cfg.get("singular_rhs") else (False,)):
                    cases.append(
                        Case("theorem", [spec.to_json()], str(T), [str(x)], inv, k + 2, render_orientation(spec.o), conv, singular)
                    )
    for _ in range(int(cfg.get("general_cases", 0))):
        bit = rng.choice(bits)
        specs = [_random_spec(rng, 1, bit) for _ in range(2)]
        n = 6
        o = [bit] * n
        T = random_knot_word(rng, n, plen, o)
        x = random_same_permutation(rng, T, rng.randint(0, plen))
        for inv in _csv_list(cfg.get("general_invariants", "c2")):
            cases.append(Case("general", [s.to_json() for s in specs], str(T), [str(x)], inv, n, render_orientation(o), conv))
    for _ in range(int(cfg.get("xind_cases", 0))):
        bit = rng.choice(bits)
        spec = _random_spec(rng, 1, bit)
        T = random_knot_word(rng, 3, plen, spec.o)
        xs = distinct_same_permutation(rng, T, int(cfg.get("xind_count", 3)))
        cases.append(Case("xind", [spec.to_json()], str(T), [str(x) for x in xs], "c2", 3, render_orientation(spec.o), conv))
    for k, invs in ((2, ["c2"]), (3, ["c2", "j3"])):
        for _ in range(int(cfg.get(f"cequiv_k{k}_cases", 0))):
            bit = rng.choice(bits)
            spec = _random_spec(rng, k, bit)
            T = random_knot_word(rng, k + 2, plen, spec.o)
            for inv in invs:
                cases.append(Case("cequiv", [spec.to_json()], str(T), [], inv, k + 2, render_orientation(spec.o), conv))
    return cases


def run_case(case: Case, do_shrink: bool = True) -> CaseResult:
    specs = case.spec_objs()
    T, xs = case.words()
    if case.kind == "theorem":
        rep = check_theorem(specs[0], T, xs[0], case.invariant, case.conv, case.singular_rhs)
        detail = rep.to_json()
        passed = rep.equal and rep.backend_agree is not False
    elif case.kind == "general":
        rep = check_general(len(specs), specs, T, xs[0], case.invariant, case.conv)
        detail = rep.to_json()
        passed = rep.equal and rep.backend_agree is not False
    elif case.kind == "xind":
        passed, values = check_x_independence(specs[0], T, xs, case.invariant, case.conv)
        detail = {"rhs_values": [str(v) for v in values]}
    elif case.kind == "cequiv":
        ce = check_c_equivalence(specs[0], T, case.invariant)
        passed = ce.equal
        detail = {"value_K": str(ce.value_K), "value_J": str(ce.value_J)}
    else:
        raise ValueError(f"unknown case kind {case.kind!r}")
    if not passed:
        detail["repro"] = repro_command(case)
        if do_shrink and case.kind == "theorem":

            def fails(t, x):
                return not check_theorem(specs[0], t, x, case.invariant, case.conv, case.singular_rhs).equal

            t2, x2 = shrink(T, xs[0], fails)
            detail["minimized"] = {"T": str(t2), "x": str(x2), "repro": repro_command(case, str(t2), str(x2))}
    return CaseResult(case, passed, detail)


def _run_star(args):
    return run_case(*args)


@dataclass
class SweepResult:
    seed: int
    config: dict
    results: list[CaseResult]

    @property
    def failures(self) -> list[CaseResult]:
        return [r for r in self.results if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "config": self.config,
            "cases": len(self.results),
            "failures": len(self.failures),
            "results": [
                {"kind": r.case.kind, "invariant": r.case.invariant, "T": r.case.T, "xs": r.case.xs,
                 "specs": r.case.specs, "singular_rhs": r.case.singular_rhs, "passed": r.passed, "detail": r.detail}
                for r in self.results
            ],
        }

    def csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "kind", "k", "d", "o", "T", "x", "invariant", "variant", "lhs", "rhs", "passed"])
        for i, r in enumerate(self.results):
            c = r.case
            w.writerow([
                i, c.kind, c.specs[0]["k"], ";".join(",".join(map(str, s["d"])) for s in c.specs), c.o, c.T,
                "|".join(c.xs), c.invariant, "singular" if c.singular_rhs else "squared",
                r.detail.get("lhs", r.detail.get("value_K", "")), r.detail.get("rhs", r.detail.get("value_J", "")),
                r.passed,
            ])
        return buf.getvalue()


def sweep(config: dict | None = None, seed: int = 0, out: str | Path | None = None, sweep_cmd: str | None = None) -> SweepResult:
    """Run every case; writes ``report.json`` and ``summary.csv`` under ``out`` if given."""
    cfg = dict(DEFAULTS)
    cfg.update(config or {})
    cases = plan(cfg, seed)
    workers = int(cfg.get("workers", 1))
    jobs = [(c, bool(cfg.get("shrink", True))) for c in cases]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_star, jobs, chunksize=4))
    else:
        results = [run_case(*j) for j in jobs]
    res = SweepResult(seed, cfg, results)
    for r in res.failures:
        r.detail["sweep_repro"] = sweep_cmd or f"python -m finitetype sweep --seed {seed}"
    if out is not None:
        out = Path(out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(json.dumps(res.to_json(), indent=2, sort_keys=True) + "\n")
        (out / "summary.csv").write_text(res.csv())
    return res
