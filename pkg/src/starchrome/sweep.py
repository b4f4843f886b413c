"""Exhaustive sweep of small outerplanar graphs against the known bounds.

Every enumerated graph is solved exactly and lands in an append-only
JSON-lines cache keyed by the canonical graph6 string.  Violations of a
proven theorem are hard failures (they mean the toolkit is wrong);
violations of a conjecture are findings and never fail a run.

The 6 <= chi' <= n-1 window for maximal outerplanar graphs is enforced
where it is coherent: the upper half from n >= 8 (order-7 fans need 7
colors) and the lower half from n >= 5 (the order-4 diamond needs only 4).
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from .errors import BudgetExhausted
from .graph import Graph, canonical_form
from .graph6 import graph6_decode, graph6_encode
from .outerplanar import classify, enumerate_mops, two_connected_spanning_subgraphs
from .solver import Budget, exact_chi_star

CACHE_ENV_VAR = "STARCHROME_CACHE"
DEFAULT_CACHE_NAME = "starchrome-cache.jsonl"
SCHEMA_VERSION = 1

RECORD_FIELDS = (
    "graph6", "n", "m", "max_degree", "diameter", "two_connected", "maximal",
    "subcubic", "outerplanar", "chi_star", "chi_lower", "chi_upper", "bound_margin_conj16",
    "bound_margin_thm110", "bound_margin_conj_d6", "bound_margin_conj_d4",
    "solver_nodes", "elapsed", "status",
)


@dataclass
class SweepRecord:
    graph6: str
    n: int
    m: int
    max_degree: int
    diameter: int | None  # None encodes an infinite diameter
    two_connected: bool
    maximal: bool
    subcubic: bool
    outerplanar: bool
    chi_star: int | None
    chi_lower: int | None
    chi_upper: int | None
    bound_margin_conj16: int | None
    bound_margin_thm110: int | None
    bound_margin_conj_d6: int | None
    bound_margin_conj_d4: int | None
    solver_nodes: int
    elapsed: float
    status: str  # "ok" | "budget_exhausted"

    def to_json(self) -> str:
        data = asdict(self)
        return json.dumps({k: data[k] for k in RECORD_FIELDS}, sort_keys=False)

    @staticmethod
    def from_json(line: str) -> "SweepRecord":
        data = json.loads(line)
        return SweepRecord(**{k: data[k] for k in RECORD_FIELDS})


def default_cache_path() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.cwd() / DEFAULT_CACHE_NAME


class ResultCache:
    """Append-only JSONL log, one record per canonical graph6 key."""

    def __init__(self, path: Path):
        self.path = Path(path)
        self.records: dict[str, SweepRecord] = {}
        if self.path.exists():
            with open(self.path) as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    data = json.loads(line)
                    if "schema" in data:
                        if data["schema"] != SCHEMA_VERSION:
                            raise ValueError(
                                f"cache schema {data['schema']} unsupported"
                            )
                        continue
                    rec = SweepRecord(**{k: data[k] for k in RECORD_FIELDS})
                    self.records[rec.graph6] = rec

    def __contains__(self, key: str) -> bool:
        return key in self.records

    def get(self, key: str) -> SweepRecord | None:
        return self.records.get(key)

    def append(self, rec: SweepRecord) -> None:
        if rec.graph6 in self.records:
            return  # re-solving a cached graph is a no-op
        new_file = not self.path.exists()
        with open(self.path, "a") as fh:
            if new_file:
                fh.write(json.dumps({"schema": SCHEMA_VERSION}) + "\n")
            fh.write(rec.to_json() + "\n")
        self.records[rec.graph6] = rec


def _floor_3halves(delta: int) -> int:
    return (3 * delta) // 2


def _margin(bound: int | None, chi: int | None) -> int | None:
    if bound is None or chi is None:
        return None
    return bound - chi


def solve_record(key: str, budget: Budget, outerplanar_hint: bool | None = None) -> SweepRecord:
    """Classify and exactly solve one canonical graph6 key."""
    g = graph6_decode(key)
    cls = classify(g, outerplanar_hint=outerplanar_hint)
    diam = None if cls.diameter == float("inf") else int(cls.diameter)
    delta = g.max_degree()
    try:
        result = exact_chi_star(g, budget)
        chi: int | None = result.chi
        chi_lower = chi_upper = chi
        nodes, elapsed, status = result.nodes_expanded, result.elapsed, "ok"
    except BudgetExhausted as exc:
        chi = None
        chi_lower, chi_upper = exc.lower_bound, exc.upper_bound
        nodes, elapsed, status = exc.nodes, exc.elapsed, "budget_exhausted"
    conj16 = _floor_3halves(delta) + 1 if cls.outerplanar and delta >= 3 else None
    thm110 = _floor_3halves(delta) + 5 if cls.outerplanar else None
    conj_d6 = delta + 6 if cls.outerplanar and cls.two_connected and delta >= 6 else None
    conj_d4 = delta + 4 if cls.maximal and cls.two_connected and delta >= 6 else None
    return SweepRecord(
        graph6=key,
        n=g.n,
        m=g.m,
        max_degree=delta,
        diameter=diam,
        two_connected=cls.two_connected,
        maximal=cls.maximal,
        subcubic=cls.subcubic,
        outerplanar=cls.outerplanar,
        chi_star=chi,
        chi_lower=chi_lower,
        chi_upper=chi_upper,
        bound_margin_conj16=_margin(conj16, chi),
        bound_margin_thm110=_margin(thm110, chi),
        bound_margin_conj_d6=_margin(conj_d6, chi),
        bound_margin_conj_d4=_margin(conj_d4, chi),
        solver_nodes=nodes,
        elapsed=elapsed,
        status=status,
    )


def proven_bound_violations(rec: SweepRecord) -> list[str]:
    """Checks whose failure means a toolkit bug, not a finding."""
    out = []
    chi = rec.chi_star
    if chi is None:
        return out
    d = rec.max_degree
    if rec.outerplanar and chi > _floor_3halves(d) + 5:
        out.append(f"chi'={chi} exceeds floor(1.5*{d})+5 on an outerplanar graph")
    if rec.subcubic and rec.outerplanar and chi > 5:
        out.append(f"chi'={chi} exceeds 5 on a subcubic outerplanar graph")
    if rec.maximal and rec.n >= 5 and chi < 6:
        out.append(f"chi'={chi} below 6 on a maximal outerplanar graph of order >= 5")
    if rec.maximal and rec.n >= 8 and chi > rec.n - 1:
        out.append(f"chi'={chi} above n-1 on a maximal outerplanar graph of order >= 8")
    return out


def conjecture_violations(rec: SweepRecord) -> list[str]:
    """Checks whose failure would be a publishable finding."""
    out = []
    for name, margin in (
        ("conjecture floor(1.5*D)+1", rec.bound_margin_conj16),
        ("conjecture D+6 (2-connected)", rec.bound_margin_conj_d6),
        ("conjecture D+4 (2-connected maximal)", rec.bound_margin_conj_d4),
    ):
        if margin is not None and margin < 0:
            out.append(f"{name} violated by {-margin}")
    return out


@dataclass
class SweepSummary:
    records: list[SweepRecord]
    solved: int
    from_cache: int
    budget_exhausted: int
    hard_failures: list[tuple[str, str]]
    findings: list[tuple[str, str]]


def _solve_one(args: tuple[str, Budget, bool | None]) -> SweepRecord:
    key, budget, hint = args
    return solve_record(key, budget, outerplanar_hint=hint)


def run_sweep(
    n_max: int,
    cache: ResultCache,
    budget: Budget | None = None,
    expand_subgraphs: bool = False,
    per_n_cap: int = 2000,
    workers: int = 1,
) -> SweepSummary:
    """Enumerate MOPs of orders 4..n_max (optionally their chord-deletion
    closures), solve everything exactly, and collect the bound checks.

    Budget exhaustion marks a record and the sweep continues.  Records are
    emitted to the cache ordered by canonical key within each order.
    """
    budget = budget or Budget()
    targets: list[tuple[str, bool | None]] = []
    seen: set[str] = set()
    for n in range(4, n_max + 1):
        catalog = enumerate_mops(n)
        level: list[tuple[str, bool | None]] = []
        for mop in catalog.members.values():
            graphs: list[tuple[Graph, bool | None]] = [(mop, None)]
            if expand_subgraphs:
                # chord-deleted subgraphs inherit outerplanarity
                for sub in two_connected_spanning_subgraphs(mop, dedupe=True):
                    graphs.append((sub, True))
            for g, hint in graphs:
                key = graph6_encode(canonical_form(g))
                if key not in seen:
                    seen.add(key)
                    level.append((key, hint))
        level.sort(key=lambda item: item[0])
        targets.extend(level[:per_n_cap])

    records: list[SweepRecord] = []
    from_cache = solved = exhausted = 0
    todo = [(key, hint) for key, hint in targets if key not in cache]
    computed: dict[str, SweepRecord] = {}
    if workers > 1 and todo:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for rec in pool.map(
                _solve_one, [(key, budget, hint) for key, hint in todo]
            ):
                computed[rec.graph6] = rec
    else:
        for key, hint in todo:
            computed[key] = solve_record(key, budget, outerplanar_hint=hint)
    for key, _hint in targets:
        cached = cache.get(key)
        if cached is not None:
            records.append(cached)
            from_cache += 1
            continue
        rec = computed[key]
        cache.append(rec)
        records.append(rec)
        solved += 1
        if rec.status == "budget_exhausted":
            exhausted += 1
    hard = [(r.graph6, msg) for r in records for msg in proven_bound_violations(r)]
    findings = [(r.graph6, msg) for r in records for msg in conjecture_violations(r)]
    return SweepSummary(
        records=records,
        solved=solved,
        from_cache=from_cache,
        budget_exhausted=exhausted,
        hard_failures=hard,
        findings=findings,
    )
