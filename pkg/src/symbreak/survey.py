"""Survey runner: every bound checked over exhaustive family enumerations, the
Mycielskian conjecture experiment, and CSV/JSON report emission."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable

from . import constructive as con
from .distinguish import MAX_M_EDGE, MAX_N_VERTEX, distinguishing_index, distinguishing_number
from .errors import DocumentedException, SymbreakError
from .families import (
    complete,
    complete_bipartite,
    cycle,
    enumerate_graphs,
    enumerate_halin_structures,
    enumerate_mops,
    k4_core_graph,
    mycielski_sequence,
    mycielskian,
    path,
    wheel,
)
from .graph import Graph, chromatic_number, clique_number, has_hamiltonian_path, max_degree
from .graph6 import to_graph6
from .group import canonical_form, labeled_stabilizer_is_trivial

SCHEMA = "symbreak.survey/1"
CONJECTURE_SCHEMA = "symbreak.conjecture/1"

CSV_COLUMNS = [
    "family", "n", "m", "graph6", "max_degree", "clique_number", "chromatic_number",
    "D", "D_prime", "checks", "constructive", "exception", "violations", "error", "elapsed_ms",
]

FAMILIES = ("mop", "halin", "mycielski", "clique4", "planar-chi", "known")


@dataclass
class RunConfig:
    family: str
    n_min: int
    n_max: int
    workers: int = 1
    seed: int = 0
    count: int = 20
    max_n_vertex: int = MAX_N_VERTEX
    max_m_edge: int = MAX_M_EDGE

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError(f"bad n range {self.n_min}..{self.n_max}")
        if self.workers < 1 or self.count < 1:
            raise ValueError("workers and count must be positive")


@dataclass
class Check:
    name: str
    bound: int
    value: int | None
    holds: bool
    source: str  # "exact" or the construction that produced the value
    exception: str | None = None

    def encode(self) -> str:
        tag = f"!{self.exception}" if self.exception else ""
        return f"{self.name}:{self.value}<={self.bound}:{'ok' if self.holds else 'FAIL'}:{self.source}{tag}"


@dataclass
class SurveyRow:
    family: str
    n: int
    m: int
    graph6: str
    max_degree: int
    clique_number: int
    chromatic_number: int | None = None
    D: int | None = None
    D_prime: int | None = None
    checks: list[Check] = field(default_factory=list)
    constructive: dict[str, Any] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)
    exception: str | None = None
    error: str | None = None
    elapsed_ms: float = 0.0
    order_key: str = ""

    def violations(self) -> list[Check]:
        return [c for c in self.checks if not c.holds and c.exception is None]

    def csv_record(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "graph6": self.graph6,
            "max_degree": self.max_degree,
            "clique_number": self.clique_number,
            "chromatic_number": "" if self.chromatic_number is None else self.chromatic_number,
            "D": "" if self.D is None else self.D,
            "D_prime": "" if self.D_prime is None else self.D_prime,
            "checks": ";".join(c.encode() for c in self.checks),
            "constructive": ";".join(f"{k}:{v}" for k, v in sorted(self.constructive.items())),
            "exception": self.exception or "",
            "violations": len(self.violations()),
            "error": self.error or "",
            "elapsed_ms": f"{self.elapsed_ms:.1f}",
        }

    def to_json_dict(self, timings: bool = True) -> dict:
        d = asdict(self)
        d.pop("order_key")
        if not timings:
            d.pop("elapsed_ms")
        return d


# -- exception tags ------------------------------------------------------------------

_NAMED = {
    "K3": complete(3),
    "K4": complete(4),
    "W4": wheel(4),
    "W5": wheel(5),
}
_NAMED_CF = {name: canonical_form(g) for name, g in _NAMED.items()}


def _named(g: Graph) -> str | None:
    if g.n > 6:
        return None
    cf = canonical_form(g)
    for name, c in _NAMED_CF.items():
        if c == cf:
            return name
    return None


# -- row builders -----------------------------------------------------------------------


def _base_row(family: str, g: Graph, chi: bool = False) -> SurveyRow:
    row = SurveyRow(
        family=family,
        n=g.n,
        m=g.m,
        graph6=to_graph6(g),
        max_degree=max_degree(g),
        clique_number=clique_number(g)[0],
    )
    if chi and g.n <= 20:
        row.chromatic_number = chromatic_number(g)
    return row


def _exact(row: SurveyRow, g: Graph, cfg: RunConfig, edges: bool = True) -> None:
    if g.n <= cfg.max_n_vertex:
        res = distinguishing_number(g, max_n=cfg.max_n_vertex)
        row.D = res.value
        row.witnesses["D"] = res.witness.to_json_dict()
    if edges and g.m <= cfg.max_m_edge:
        res = distinguishing_index(g, max_m=cfg.max_m_edge)
        row.D_prime = res.value
        row.witnesses["D_prime"] = res.witness.to_json_dict()


def _construct(row: SurveyRow, name: str, build: Callable[[], con.CertifiedLabeling]) -> con.CertifiedLabeling | None:
    try:
        cert = build()
    except DocumentedException as exc:
        cert = exc.witness
        row.constructive[name] = f"exception:{cert.labels_used}"
        row.witnesses[name] = cert.to_json_dict()
        return None
    row.constructive[name] = cert.labels_used
    row.witnesses[name] = cert.to_json_dict()
    return cert


def _mop_row(g: Graph, cfg: RunConfig) -> SurveyRow:
    row = _base_row("mop", g)
    _exact(row, g, cfg)
    row.exception = "K3" if g.n == 3 else None
    vcert = _construct(row, "mop-vertex", lambda: con.mop_vertex_labeling(g))
    ecert = _construct(row, "mop-edge", lambda: con.mop_edge_labeling(g))
    exc = row.exception
    row.checks.append(Check("mop-vertex-le-2", 2, row.D, row.D is not None and row.D <= 2, "exact", exc))
    row.checks.append(Check("mop-edge-le-2", 2, row.D_prime, row.D_prime is not None and row.D_prime <= 2, "exact", exc))
    for name, cert in (("mop-vertex", vcert), ("mop-edge", ecert)):
        if cert is not None:
            row.checks.append(Check(f"{name}-construction", 2, cert.labels_used, cert.labels_used <= 2, name))
    return row


def _halin_row(h, cfg: RunConfig) -> SurveyRow:
    g = h.graph
    row = _base_row("halin", g)
    _exact(row, g, cfg)
    named = _named(g)
    case, bound = con.halin_case(h)
    vcert = _construct(row, case, lambda: con.halin_vertex_labeling(h))
    ecert = _construct(row, "halin-edge", lambda: con.halin_edge_labeling(h))
    if named == "K4":
        row.exception = "K4"
    elif named in ("W4", "W5"):
        row.exception = f"{named}-equality"
    row.checks.append(Check(f"{case}-bound", bound, row.D, row.D is not None and row.D <= bound, "exact",
                            "K4-equality" if named == "K4" else None))
    if vcert is not None:
        row.checks.append(Check(f"{case}-construction", bound, vcert.labels_used, vcert.labels_used <= bound, case))
    row.checks.append(Check("halin-edge-le-2", 2, row.D_prime, row.D_prime is not None and row.D_prime <= 2,
                            "exact", "K4" if named == "K4" else None))
    if ecert is not None:
        row.checks.append(Check("halin-edge-construction", 2, ecert.labels_used, ecert.labels_used <= 2, "halin-edge"))
    if g.n >= 7:
        traceable = has_hamiltonian_path(g, max_n=max(16, g.n))
        row.checks.append(Check("traceable-order-7-edge-le-2", 2, row.D_prime,
                                traceable and row.D_prime is not None and row.D_prime <= 2, "exact"))
    if named == "K4":
        row.checks.append(Check("K4-vertex-equality", 4, row.D, row.D == 4, "exact"))
    if named in ("W4", "W5"):
        row.checks.append(Check(f"{named}-vertex-equality", 3, row.D, row.D == 3, "exact"))
    return row


MYCIELSKI_EXPECTED = {2: (2, None), 3: (3, 3)}


def _mycielski_row(i: int, cfg: RunConfig) -> SurveyRow:
    g = mycielski_sequence(i)
    row = _base_row("mycielski", g)
    row.order_key = f"{i:03d}"
    _exact(row, g, cfg, edges=i > 2)
    want_d, want_dp = MYCIELSKI_EXPECTED.get(i, (2, 2))
    vcert = _construct(row, "mycielski-vertex", lambda: con.mycielski_iterate_labeling(i, "vertex"))
    d_val, d_src = (row.D, "exact") if row.D is not None else (vcert.labels_used, "mycielski-vertex")
    row.checks.append(Check(f"D(M_{i})", want_d, d_val, d_val == want_d, d_src))
    if i > 2:
        ecert = _construct(row, "mycielski-edge", lambda: con.mycielski_iterate_labeling(i, "edge"))
        e_val, e_src = (row.D_prime, "exact") if row.D_prime is not None else (ecert.labels_used, "mycielski-edge")
        row.checks.append(Check(f"D'(M_{i})", want_dp, e_val, e_val == want_dp, e_src))
    return row


def _clique4_row(seed: int, cfg: RunConfig) -> SurveyRow:
    g = k4_core_graph(seed)
    row = _base_row("clique4", g)
    row.order_key = f"{seed:06d}"
    delta = row.max_degree
    cert = _construct(row, "clique4-bfs", lambda: con.clique4_bfs_labeling(g))
    if cert is not None:
        row.checks.append(Check("clique4-construction", delta - 1, cert.labels_used,
                                cert.labels_used <= delta - 1, "clique4-bfs"))
    if g.n <= cfg.max_n_vertex:
        _exact(row, g, cfg, edges=False)
        row.checks.append(Check("clique4-exact", delta - 1, row.D, row.D <= delta - 1, "exact"))
    return row


def _planar_chi_row(family: str, g: Graph, cfg: RunConfig) -> SurveyRow:
    row = _base_row(family, g, chi=True)
    _exact(row, g, cfg, edges=False)
    if row.chromatic_number == 4:
        if row.clique_number != 4:
            # a planar graph with chi = 4 need not contain a K_4
            row.exception = "chi4-without-K4"
        if row.max_degree >= 5:
            row.checks.append(Check("chi4-planar-D-le-delta-1", row.max_degree - 1, row.D,
                                    row.D <= row.max_degree - 1, "exact"))
    return row


def known_values(n_min: int = 3, n_max: int = 12) -> list[tuple[str, Graph, int | None, int | None]]:
    """(name, graph, D, D') for the classical families with published values."""
    rows: list[tuple[str, Graph, int | None, int | None]] = []
    for n in range(max(3, n_min), min(10, n_max) + 1):
        rows.append((f"P{n}", path(n), 2, 2))
    for n in range(max(3, n_min), min(12, n_max) + 1):
        v = 3 if n <= 5 else 2
        rows.append((f"C{n}", cycle(n), v, v))
    for n in range(max(2, n_min), min(7, n_max) + 1):
        rows.append((f"K{n}", complete(n), n, None))
    for p in (4, 5):
        if n_min <= 2 * p <= n_max:
            rows.append((f"K{p},{p}", complete_bipartite(p, p), p + 1, 2))
    if n_min <= 6 <= n_max:
        rows.append(("K3,3", complete_bipartite(3, 3), None, 3))
    return rows


def _known_row(item, cfg: RunConfig) -> SurveyRow:
    name, g, want_d, want_dp = item
    row = _base_row("known", g)
    row.order_key = name
    if want_d is not None:
        res = distinguishing_number(g)
        row.D = res.value
        row.checks.append(Check(f"D({name})", want_d, row.D, row.D == want_d, "exact"))
    if want_dp is not None:
        res = distinguishing_index(g)
        row.D_prime = res.value
        row.checks.append(Check(f"D'({name})", want_dp, row.D_prime, row.D_prime == want_dp, "exact"))
    row.witnesses["name"] = name
    return row


# -- driver --------------------------------------------------------------------------------


def _tasks(cfg: RunConfig) -> list[tuple[str, Any]]:
    fam = cfg.family
    out: list[tuple[str, Any]] = []
    if fam == "mop":
        for n in range(max(3, cfg.n_min), cfg.n_max + 1):
            out.extend(("mop", g) for g in enumerate_mops(n))
    elif fam == "halin":
        for n in range(max(4, cfg.n_min), cfg.n_max + 1):
            out.extend(("halin", h) for h in enumerate_halin_structures(n))
    elif fam == "mycielski":
        out.extend(("mycielski", i) for i in range(max(2, cfg.n_min), cfg.n_max + 1))
    elif fam == "clique4":
        out.extend(("clique4", cfg.seed + k) for k in range(cfg.count))
    elif fam == "planar-chi":
        for n in range(max(4, cfg.n_min), cfg.n_max + 1):
            out.extend(("halin-chi", h.graph) for h in enumerate_halin_structures(n))
            out.extend(("mop-chi", g) for g in enumerate_mops(n))
    elif fam == "known":
        out.extend(("known", item) for item in known_values(cfg.n_min, cfg.n_max))
    return out


def _run_task(task: tuple[str, Any], cfg: RunConfig) -> SurveyRow:
    kind, item = task
    start = time.perf_counter()
    try:
        if kind == "mop":
            row = _mop_row(item, cfg)
        elif kind == "halin":
            row = _halin_row(item, cfg)
        elif kind == "mycielski":
            row = _mycielski_row(item, cfg)
        elif kind == "clique4":
            row = _clique4_row(item, cfg)
        elif kind in ("halin-chi", "mop-chi"):
            row = _planar_chi_row(kind.split("-")[0], item, cfg)
        else:
            row = _known_row(item, cfg)
    except SymbreakError as exc:
        g = item if isinstance(item, Graph) else getattr(item, "graph", None)
        row = SurveyRow(kind, g.n if g else 0, g.m if g else 0, to_graph6(g) if g else "", 0, 0)
        row.error = f"{type(exc).__name__}: {exc}"
    row.elapsed_ms = (time.perf_counter() - start) * 1000
    return row


def _run_task_star(args):
    return _run_task(*args)


def run_survey(cfg: RunConfig) -> list[SurveyRow]:
    tasks = _tasks(cfg)
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            rows = list(pool.map(_run_task_star, [(t, cfg) for t in tasks], chunksize=4))
    else:
        rows = [_run_task(t, cfg) for t in tasks]
    rows.sort(key=lambda r: (r.family, r.n, r.order_key, r.m, r.graph6))
    return rows


def summary(rows: Iterable[SurveyRow]) -> dict[str, int]:
    rows = list(rows)
    return {
        "rows": len(rows),
        "checks": sum(len(r.checks) for r in rows),
        "violations": sum(len(r.violations()) for r in rows),
        "documented_exceptions": sum(1 for r in rows for c in r.checks if c.exception and not c.holds),
        "errors": sum(1 for r in rows if r.error),
    }


def rows_to_csv(rows: Iterable[SurveyRow], timings: bool = True) -> str:
    buf = io.StringIO()
    cols = CSV_COLUMNS if timings else CSV_COLUMNS[:-1]
    writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for r in rows:
        writer.writerow(r.csv_record())
    return buf.getvalue()


def rows_to_json(rows: list[SurveyRow], cfg: RunConfig, timings: bool = True) -> str:
    payload = {
        "schema": SCHEMA,
        "config": asdict(cfg),
        "summary": summary(rows),
        "rows": [r.to_json_dict(timings) for r in rows],
    }
    return json.dumps(payload, indent=1, sort_keys=True)


def reverify_witnesses(rows: Iterable[SurveyRow]) -> list[str]:
    """Re-check every witness written to a report; returns descriptions of failures."""
    from .graph import EdgeLabeling, VertexLabeling
    from .graph6 import from_graph6

    bad = []
    for r in rows:
        if not r.graph6:
            continue
        base = from_graph6(r.graph6)
        for name, w in r.witnesses.items():
            if name == "name":
                continue
            data = w.get("labeling", w) if isinstance(w, dict) else w
            g = base
            if name.startswith("mycielski") and data and len(data) != base.n and "-" not in next(iter(data)):
                continue
            lab = EdgeLabeling.from_mapping(g, data) if "-" in next(iter(data)) else VertexLabeling.from_mapping(g, data)
            if not labeled_stabilizer_is_trivial(g, lab):
                bad.append(f"{r.family} {r.graph6} {name}")
    return bad


# -- conjecture experiment -------------------------------------------------------------------


def conjecture_rows(n_min: int = 3, n_max: int = 6) -> list[dict]:
    """D and D' of every connected graph of order n_min..n_max against its Mycielskian."""
    out = []
    for n in range(max(3, n_min), n_max + 1):
        for g in enumerate_graphs(n):
            mg, _ = mycielskian(g)
            d, dm = distinguishing_number(g), distinguishing_number(mg)
            e, em = distinguishing_index(g), distinguishing_index(mg, max_m=max(MAX_M_EDGE, mg.m))
            out.append({
                "graph6": to_graph6(g),
                "n": g.n,
                "m": g.m,
                "D": d.value,
                "D_mu": dm.value,
                "D_prime": e.value,
                "D_prime_mu": em.value,
                "vertex_violation": dm.value > d.value,
                "edge_violation": em.value > e.value,
            })
    return out


def conjecture_report(n_min: int = 3, n_max: int = 6) -> str:
    rows = conjecture_rows(n_min, n_max)
    payload = {
        "schema": CONJECTURE_SCHEMA,
        "n_range": [n_min, n_max],
        "graphs": len(rows),
        "vertex_violations": [r["graph6"] for r in rows if r["vertex_violation"]],
        "edge_violations": [r["graph6"] for r in rows if r["edge_violation"]],
        "rows": rows,
    }
    return json.dumps(payload, indent=1, sort_keys=True)
