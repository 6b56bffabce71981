"""Verification campaigns with machine-readable reports.

Each campaign produces a VerificationReport holding one record per checked
case.  Cases are either asserted (pass/fail feeds the campaign verdict) or
informative (recorded, never failing).  Printed table values are carried
verbatim with their coordinates; three cells of the published tables are
internally inconsistent with the published quotient polynomials and are
tracked as errata (the recomputed value, confirmed through three independent
routes, is attached and asserted instead; the mismatch with the printed value
is reported, never hidden).
"""

from __future__ import annotations

import csv
import heapq
import io
import json
import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .enumeration import (canonical_form, enumerate_bicyclic, targeted_max_degree_family)
from .graphs import Graph, base_graph, graph_g1, graph_g2, graph_g3, graph_g4
from .spectral import rho_f
from .transforms import kelmans, pendant_shift
from .weights import WeightFunction, check_pstar, parse_weight

THREADS_ENV = "BICYCLIC_SPECTRA_THREADS"


# ---------------------------------------------------------------------------
# Report model
# ---------------------------------------------------------------------------


@dataclass
class CaseRecord:
    case_id: str
    inputs: dict
    computed: dict
    expected: Optional[dict] = None
    passed: Optional[bool] = True  # None marks informative cases
    tolerance: Optional[float] = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "inputs": self.inputs,
            "computed": self.computed,
            "expected": self.expected,
            "passed": self.passed,
            "tolerance": self.tolerance,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    campaign: str
    cases: list[CaseRecord] = field(default_factory=list)
    runtime_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.cases if c.passed is not None)

    def summary(self) -> dict:
        asserted = [c for c in self.cases if c.passed is not None]
        return {
            "total": len(self.cases),
            "asserted": len(asserted),
            "passed": sum(1 for c in asserted if c.passed),
            "failed": sum(1 for c in asserted if not c.passed),
            "informative": len(self.cases) - len(asserted),
            "ok": self.ok,
            "runtime_seconds": round(self.runtime_seconds, 3),
        }

    def to_dict(self) -> dict:
        return {
            "campaign": self.campaign,
            "cases": [c.to_dict() for c in self.cases],
            "summary": self.summary(),
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["case_id", "passed", "tolerance", "note", "inputs", "computed", "expected"])
        for c in self.cases:
            writer.writerow([
                c.case_id,
                "" if c.passed is None else str(c.passed).lower(),
                "" if c.tolerance is None else repr(c.tolerance),
                c.note,
                json.dumps(c.inputs, sort_keys=True),
                json.dumps(c.computed, sort_keys=True),
                "" if c.expected is None else json.dumps(c.expected, sort_keys=True),
            ])
        return buf.getvalue()


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _run_cases(jobs: Sequence[Callable]) -> list:
    """Run independent case jobs, in order, on the configured thread count."""
    workers = _thread_count()
    if workers == 1 or len(jobs) <= 1:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: job(), jobs))


# ---------------------------------------------------------------------------
# Published tables
# ---------------------------------------------------------------------------

TABLE_COLUMNS = ["constant_one", "zagreb1", "hyper_zagreb", "sum_connectivity:a=3"]
COLUMN_DISPLAY = {"constant_one": "1", "zagreb1": "x+y",
                  "hyper_zagreb": "(x+y)^2", "sum_connectivity:a=3": "(x+y)^3"}

# Printed entries, row-major over (G2, G3, G4); bold marks the row maximum of
# each column.  Errata map coordinates to the recomputed reference value
# (exact quotient polynomial + Sturm isolation, LAPACK eigensolve, and an
# independent exact isolation all agree; the printed cells contradict the
# published quotient polynomials phi1/phi2 themselves).
APPENDIX_TABLES = {
    "appendix_n6": {
        "n": 6,
        "printed": {
            "G2": ["2.7039", "17.0855", "111.8198", "749.14"],
            "G3": ["2.7321", "16.3940", "101.8670", "652.82"],
            "G4": ["2.7913", "17.6015", "114.6620", "788.49"],
        },
        "bold": {col: "G4" for col in TABLE_COLUMNS},
        "errata": {
            ("G2", "constant_one"): 2.709275359,
            ("G4", "sum_connectivity:a=3"): 773.479468192,
        },
    },
    "appendix_n7": {
        "n": 7,
        "printed": {
            "G2": ["2.8558", "20.4063", "152.0299", "1159.8"],
            "G3": ["2.8332", "18.6430", "128.7889", "926.19"],
            "G4": ["2.9032", "20.0004", "143.5387", "1131"],
        },
        "bold": {"constant_one": "G4", "zagreb1": "G2",
                 "hyper_zagreb": "G2", "sum_connectivity:a=3": "G2"},
        "errata": {
            ("G4", "sum_connectivity:a=3"): 1076.016339,
        },
    },
}

# Extended-index comparison: bound 0.5*(n-3+1/(n-3))*sqrt(n) against
# rho_ex(G2(n)) for n = 12..20.
EXTENDED_TABLE1 = {
    "n": list(range(12, 21)),
    "bound": ["15.7809", "18.208", "20.7492", "23.3993", "26.1538",
              "29.009", "31.9612", "35.0074", "38.1447"],
    "rho_ex_g2": ["15.8028", "18.2277", "20.7672", "23.4160", "26.1695",
                  "29.0238", "31.9753", "35.0209", "38.1576"],
}

_FAMILY = {"G1": graph_g1, "G2": graph_g2, "G3": graph_g3, "G4": graph_g4}


def printed_tolerance(printed: str, floor: float = 5e-4) -> float:
    """Half a unit in the last printed place, floored at 5e-4."""
    decimals = len(printed.split(".")[1]) if "." in printed else 0
    return max(floor, 0.5 * 10.0 ** (-decimals))


def run_table(table: str) -> VerificationReport:
    """Recompute one published table cell by cell."""
    t0 = time.time()
    if table in APPENDIX_TABLES:
        report = _run_appendix_table(table)
    elif table == "extended_table1":
        report = _run_extended_table1()
    else:
        raise ValueError(f"unknown table {table!r}; choose appendix_n6, appendix_n7, extended_table1")
    report.runtime_seconds = time.time() - t0
    return report


def _run_appendix_table(table: str) -> VerificationReport:
    spec = APPENDIX_TABLES[table]
    n = spec["n"]
    report = VerificationReport(f"tables/{table}")
    computed: dict[tuple[str, str], float] = {}
    for row in ("G2", "G3", "G4"):
        g = _FAMILY[row](n)
        for col, printed in zip(TABLE_COLUMNS, spec["printed"][row]):
            f = parse_weight(col)
            value = rho_f(g, f)
            computed[(row, col)] = value
            tol = printed_tolerance(printed)
            erratum = spec["errata"].get((row, col))
            if erratum is None:
                ok = abs(value - float(printed)) <= tol
                note = ""
                expected = {"table": table, "row": row, "column": COLUMN_DISPLAY[col],
                            "printed": printed}
            else:
                ok = abs(value - erratum) <= tol
                note = (f"printed value {printed} is an erratum (inconsistent with the "
                        f"published quotient polynomial); recomputed reference {erratum}")
                expected = {"table": table, "row": row, "column": COLUMN_DISPLAY[col],
                            "printed": printed, "recomputed": erratum,
                            "matches_printed": abs(value - float(printed)) <= tol}
            report.cases.append(CaseRecord(
                case_id=f"{table}/{row}/{COLUMN_DISPLAY[col]}",
                inputs={"n": n, "graph": row, "weight": col},
                computed={"rho": value},
                expected=expected,
                passed=ok,
                tolerance=tol,
                note=note,
            ))
    for col in TABLE_COLUMNS:
        winner = max(("G2", "G3", "G4"), key=lambda r: computed[(r, col)])
        report.cases.append(CaseRecord(
            case_id=f"{table}/bold/{COLUMN_DISPLAY[col]}",
            inputs={"n": n, "column": col},
            computed={"row_maximum": winner},
            expected={"bold_row": spec["bold"][col]},
            passed=winner == spec["bold"][col],
        ))
    return report


def _run_extended_table1() -> VerificationReport:
    report = VerificationReport("tables/extended_table1")
    ext = WeightFunction("extended")
    for n, bound_printed, rho_printed in zip(
            EXTENDED_TABLE1["n"], EXTENDED_TABLE1["bound"], EXTENDED_TABLE1["rho_ex_g2"]):
        bound = 0.5 * (n - 3 + 1 / (n - 3)) * math.sqrt(n)
        rho = rho_f(graph_g2(n), ext)
        for kind, value, printed in [("bound", bound, bound_printed), ("rho_ex_g2", rho, rho_printed)]:
            tol = printed_tolerance(printed)
            report.cases.append(CaseRecord(
                case_id=f"extended_table1/{kind}/n={n}",
                inputs={"n": n, "quantity": kind},
                computed={"value": value},
                expected={"table": "extended_table1", "row": kind, "column": str(n),
                          "printed": printed},
                passed=abs(value - float(printed)) <= tol,
                tolerance=tol,
            ))
        report.cases.append(CaseRecord(
            case_id=f"extended_table1/bound_below_rho/n={n}",
            inputs={"n": n},
            computed={"bound": bound, "rho_ex_g2": rho},
            expected={"relation": "bound < rho_ex(G2)"},
            passed=bound < rho,
        ))
    return report


# ---------------------------------------------------------------------------
# Extremal campaigns
# ---------------------------------------------------------------------------

SECOND_RANK_THRESHOLDS = {"zagreb1": 10, "hyper_zagreb": 9, "forgotten": 8}


def verify_extremal(n_range: Sequence[int], fs: Sequence[WeightFunction],
                    rank: str = "first", mode: str = "exhaustive",
                    min_gap: float = 1e-9) -> VerificationReport:
    """Extremality of G1 (rank 1) / the second-rank candidates over all classes.

    exhaustive mode enumerates every bicyclic class and ranks spectral radii;
    candidate mode compares G2, G3, G4 directly (the proven candidate set)
    and asserts the known per-weight winner beyond its threshold order.
    Weights failing the P* check are reported as not-applicable.
    """
    if rank not in ("first", "second"):
        raise ValueError("rank must be 'first' or 'second'")
    if mode not in ("exhaustive", "candidate"):
        raise ValueError("mode must be 'exhaustive' or 'candidate'")
    t0 = time.time()
    report = VerificationReport(f"extremal/{mode}/rank={rank}")
    jobs: list[Callable[[], CaseRecord]] = []
    for f in fs:
        pstar = check_pstar(f, d_max=max(max(n_range), 8))
        if not pstar.passes:
            report.cases.append(CaseRecord(
                case_id=f"extremal/{f.label()}/not_applicable",
                inputs={"weight": f.label()},
                computed={"pstar": False, "failed_condition": pstar.failed_condition},
                passed=None,
                note="weight lacks property P*; campaign not applicable",
            ))
            continue
        for n in n_range:
            if mode == "exhaustive":
                jobs.append(lambda n=n, f=f: _exhaustive_case(n, f, rank, min_gap))
            else:
                jobs.append(lambda n=n, f=f: _candidate_case(n, f, rank))
    report.cases.extend(_run_cases(jobs))
    report.runtime_seconds = time.time() - t0
    return report


def _exhaustive_case(n: int, f: WeightFunction, rank: str, min_gap: float) -> CaseRecord:
    rep = enumerate_bicyclic(n, "constructive")
    scored = sorted(((rho_f(g, f), canonical_form(g), g) for g in rep.graphs), reverse=True)
    named = {tag: canonical_form(_FAMILY[tag](n)) if _valid_order(tag, n) else None
             for tag in ("G1", "G2", "G3", "G4")}
    top_rho, top_cert, _ = scored[0]
    gap = top_rho - scored[1][0] if len(scored) > 1 else float("inf")
    if rank == "first":
        ok = top_cert == named["G1"] and gap > min_gap
        note = "" if gap > min_gap else (
            f"near-tie at the top: gap {gap:.3e}; certificates "
            f"{top_cert.hex()} vs {scored[1][1].hex()}")
        # per-base-family maxima (informative): G2 should top the
        # infinity-base classes, G1 the theta-base classes
        family_best = {}
        for rho, cert, g in scored:
            kind = base_graph(g).kind
            if kind not in family_best:
                family_best[kind] = cert
        return CaseRecord(
            case_id=f"extremal/first/{f.label()}/n={n}",
            inputs={"n": n, "weight": f.label(), "classes": rep.count},
            computed={"winner_is_g1": top_cert == named["G1"], "rho_max": top_rho,
                      "gap_to_second": gap,
                      "infinity_base_winner_is_g2":
                          family_best.get("infinity") == named["G2"],
                      "theta_base_winner_is_g1":
                          family_best.get("theta") == named["G1"]},
            expected={"winner": "G1", "unique": True},
            passed=ok,
            note=note,
        )
    second_cert = scored[1][1] if len(scored) > 1 else None
    second_tag = next((t for t in ("G2", "G3", "G4") if named[t] == second_cert), None)
    return CaseRecord(
        case_id=f"extremal/second/{f.label()}/n={n}",
        inputs={"n": n, "weight": f.label(), "classes": rep.count},
        computed={"second_class": second_tag or "other", "rho_second": scored[1][0]},
        expected={"second_in": ["G2", "G3", "G4"]},
        passed=second_tag is not None,
    )


def _valid_order(tag: str, n: int) -> bool:
    return n >= {"G1": 4, "G2": 5, "G3": 5, "G4": 6}[tag]


def _candidate_case(n: int, f: WeightFunction, rank: str) -> CaseRecord:
    rhos = {tag: rho_f(_FAMILY[tag](n), f)
            for tag in ("G2", "G3", "G4") if _valid_order(tag, n)}
    if not rhos:
        return CaseRecord(
            case_id=f"extremal/candidate/{f.label()}/n={n}",
            inputs={"n": n, "weight": f.label(), "rank": rank},
            computed={}, passed=None,
            note="no candidate family exists at this order",
        )
    winner = max(rhos, key=rhos.get)
    threshold = SECOND_RANK_THRESHOLDS.get(f.kind)
    inputs = {"n": n, "weight": f.label(), "rank": rank}
    computed = {"rho": rhos, "winner": winner}
    if threshold is None or n < threshold:
        return CaseRecord(
            case_id=f"extremal/candidate/{f.label()}/n={n}",
            inputs=inputs, computed=computed, passed=None,
            note="below threshold or no stated winner; informative only",
        )
    others = max(v for k, v in rhos.items() if k != "G2")
    ok = winner == "G2" and rhos["G2"] > others + 1e-9
    return CaseRecord(
        case_id=f"extremal/candidate/{f.label()}/n={n}",
        inputs=inputs, computed=computed,
        expected={"winner": "G2", "n_threshold": threshold},
        passed=ok,
    )


# ---------------------------------------------------------------------------
# Randomized transform campaigns
# ---------------------------------------------------------------------------


def random_connected_graph(rng: random.Random, n: int, extra_max: int = 3) -> Graph:
    """Uniform random labeled tree plus a few random extra edges."""
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in prufer:
        degree[x] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in prufer:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    g = Graph.from_edges(n, edges)
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    rng.shuffle(candidates)
    for u, v in candidates[: rng.randint(0, min(extra_max, len(candidates)))]:
        g = g.add_edge(u, v)
    return g


def _random_pendant_shift_instance(rng: random.Random):
    """Graph where (v, u) satisfies the pendant-shift preconditions."""
    common = rng.randint(0, 2)
    edge_uv = rng.random() < 0.7 or common == 0
    a = rng.randint(1, 2)          # pendants at v (the smaller bundle)
    b = rng.randint(a, a + 2)      # pendants at u
    u, v = 0, 1
    n = 2 + common + a + b
    edges = []
    if edge_uv:
        edges.append((u, v))
    idx = 2
    for _ in range(common):
        edges += [(u, idx), (v, idx)]
        idx += 1
    v_pendants = []
    for _ in range(a):
        edges.append((v, idx))
        v_pendants.append(idx)
        idx += 1
    for _ in range(b):
        edges.append((u, idx))
        idx += 1
    return Graph.from_edges(n, edges), v, u, v_pendants[0]


def verify_kelmans(samples: int, n_range: Sequence[int], fs: Sequence[WeightFunction],
                   rng_seed: int, pendant_fraction: float = 0.25) -> VerificationReport:
    """Randomized monotonicity campaign for the two transforms.

    Per weight, `samples` class-changing reroute applications (plus a
    fraction of pendant shifts) are checked for rho' > rho - 1e-9.  Weights
    without P* run informatively: violations are recorded, not failed.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    t0 = time.time()
    report = VerificationReport("kelmans")
    slack = 1e-9
    for f in fs:
        applicable = check_pstar(f, d_max=max(max(n_range) + 2, 8)).passes
        rng = random.Random(f"{rng_seed}/{f.label()}")
        violations = 0
        worst = float("inf")
        used = skipped = disconnected = 0
        attempts_left = 1000 * samples  # identity applications don't count
        while used < samples:
            attempts_left -= 1
            if attempts_left < 0:
                raise RuntimeError("kelmans campaign: too few class-changing samples")
            n = rng.choice(list(n_range))
            g = random_connected_graph(rng, n)
            u = rng.randrange(n)
            v = (u + rng.randrange(1, n)) % n
            out = kelmans(g, u, v)
            if not out.changed:
                skipped += 1
                continue
            used += 1
            if out.disconnects:
                disconnected += 1
            delta = rho_f(out.result, f) - rho_f(g, f)
            worst = min(worst, delta)
            if delta <= -slack:
                violations += 1
        shifts = int(samples * pendant_fraction)
        shift_violations = 0
        shift_used = 0
        while shift_used < shifts:
            g, v, u, w = _random_pendant_shift_instance(rng)
            shifted = pendant_shift(g, v, u, w)
            if canonical_form(shifted) == canonical_form(g):
                continue
            shift_used += 1
            delta = rho_f(shifted, f) - rho_f(g, f)
            worst = min(worst, delta)
            if delta <= -slack:
                shift_violations += 1
        total_violations = violations + shift_violations
        report.cases.append(CaseRecord(
            case_id=f"kelmans/{f.label()}",
            inputs={"weight": f.label(), "samples": samples, "pendant_shifts": shifts,
                    "n_range": [min(n_range), max(n_range)], "seed": rng_seed},
            computed={"violations": violations, "pendant_shift_violations": shift_violations,
                      "worst_delta": worst, "skipped_isomorphic": skipped,
                      "disconnecting_applications": disconnected},
            expected={"violations": 0} if applicable else None,
            passed=(total_violations == 0) if applicable else None,
            tolerance=slack,
            note="" if applicable else "weight lacks P*; monotonicity informative only",
        ))
    report.runtime_seconds = time.time() - t0
    return report


# ---------------------------------------------------------------------------
# Extended-index theorem campaign
# ---------------------------------------------------------------------------


def verify_theorem41(n_range: Sequence[int]) -> VerificationReport:
    """Inequality chain for the extended index on G1/G2 plus the
    degree-(n-2) family bound, over n in [12, 60]."""
    lo, hi = min(n_range), max(n_range)
    if lo < 12 or hi > 60:
        raise ValueError("verify_theorem41 supports 12 <= n <= 60")
    t0 = time.time()
    ext = WeightFunction("extended")
    report = VerificationReport("theorem41")

    def bound(n: int, shift: float) -> float:
        return 0.5 * (n - 0.9) * math.sqrt(n - shift)

    def cases_for(n: int) -> list[CaseRecord]:
        out = []
        rho1 = rho_f(graph_g1(n), ext)
        rho2 = rho_f(graph_g2(n), ext)
        b1, b2 = bound(n, 3.8), bound(n, 5.0)
        out.append(CaseRecord(
            case_id=f"theorem41/chain/n={n}",
            inputs={"n": n},
            computed={"rho_ex_g1": rho1, "upper_bound": b1, "rho_ex_g2": rho2,
                      "lower_bound": b2},
            expected={"relation": "rho_ex(G1) > b(3.8) > rho_ex(G2) > b(5)"},
            passed=rho1 > b1 > rho2 > b2,
        ))
        family = targeted_max_degree_family(n)
        worst = max(rho_f(d, ext) for d in family)
        out.append(CaseRecord(
            case_id=f"theorem41/max_degree_n2/n={n}",
            inputs={"n": n, "classes": len(family)},
            computed={"max_rho_ex": worst, "bound": b2},
            expected={"relation": "every degree-(n-2) class below b(5)",
                      "classes_expected": 9},
            passed=worst < b2 and len(family) == 9,
        ))
        if 12 <= n <= 20:
            t1bound = 0.5 * (n - 3 + 1 / (n - 3)) * math.sqrt(n)
            out.append(CaseRecord(
                case_id=f"theorem41/table1_comparison/n={n}",
                inputs={"n": n},
                computed={"bound": t1bound, "rho_ex_g2": rho2},
                expected={"relation": "bound < rho_ex(G2)"},
                passed=t1bound < rho2,
            ))
        return out

    for batch in _run_cases([lambda n=n: cases_for(n) for n in n_range]):
        report.cases.extend(batch)
    report.runtime_seconds = time.time() - t0
    return report
