"""Exhaustive and instance-level checks of the bi-CM classification of matching powers."""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable

from .graph import (
    DomainError,
    Graph,
    bits,
    complement,
    complete_graph,
    enumerate_graphs,
    graph_name,
    mask_of,
    matching_number,
    path_graph,
    to_graph6,
)
from .homology import (
    DEFAULT_P,
    BiCMReport,
    alexander_dual,
    betti_table,
    bicm_report,
    check_prime,
    depth_equality_check,
    depth_of_quotient,
    depth_via_links,
    is_betti_splitting,
    is_cohen_macaulay,
    split_at,
    stanley_reisner,
)
from .ideal import (
    SquarefreeIdeal,
    edge_ideal,
    ideal_stats,
    matching_power,
    matching_product,
    restrict_ambient,
    squarefree_power,
    squarefree_veronese,
    t_spread_borel,
    uniform_veronese,
    variable_multiply,
)

MAX_THEOREM_N = 7


@dataclass
class Verdict:
    claim_id: str
    passed: bool = True
    instances_checked: int = 0
    witnesses: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    def confirm(self, **record) -> None:
        self.instances_checked += 1
        self.witnesses.append({"kind": "confirmation", **record})

    def refute(self, **record) -> None:
        self.instances_checked += 1
        self.passed = False
        self.witnesses.append({"kind": "counterexample", **record})

    def check(self, ok: bool, **record) -> bool:
        (self.confirm if ok else self.refute)(**record)
        return ok

    @property
    def counterexamples(self) -> list[dict]:
        return [w for w in self.witnesses if w["kind"] == "counterexample"]

    def to_json(self, timings: bool = True) -> dict:
        out = {
            "claim_id": self.claim_id,
            "passed": self.passed,
            "instances_checked": self.instances_checked,
            "details": self.details,
            "witnesses": self.witnesses,
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 4)
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = ""
        if "survivors" in self.details:
            extra = f", survivors: {', '.join(self.details['survivors'])}"
        return f"{self.claim_id}: {status} ({self.instances_checked} instances{extra}, {self.elapsed:.2f}s)"


class _Timer:
    def __init__(self, verdict: Verdict):
        self.verdict = verdict

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.verdict

    def __exit__(self, *exc):
        self.verdict.elapsed = time.perf_counter() - self.t0
        return False


@dataclass
class CrossChecks:
    """Side checks run on every ideal a verifier touches.

    Records Eagon-Reiner agreement (Betti linearity vs CM of the dual) for
    equigenerated ideals, the duality involution, and Auslander-Buchsbaum
    depth against the link-homology depth formula.
    """

    p: int = DEFAULT_P
    eagon_reiner: int = 0
    duality: int = 0
    auslander_buchsbaum: int = 0
    failures: list[dict] = field(default_factory=list)
    _seen: set = field(default_factory=set, repr=False)

    def record(self, ideal: SquarefreeIdeal, report: BiCMReport | None = None) -> None:
        if ideal.is_zero or ideal.is_unit:
            return
        key = (ideal.n, ideal.gens)
        if key in self._seen:
            return
        self._seen.add(key)
        label = ideal.to_json()
        if ideal.is_equigenerated():
            if report is None:
                report = bicm_report(ideal, self.p)
            self.eagon_reiner += 1
            if not report.eagon_reiner_agrees:
                self.failures.append({"check": "eagon_reiner", "ideal": label, **report.to_json()})
        self.duality += 1
        if alexander_dual(alexander_dual(ideal)) != ideal:
            self.failures.append({"check": "duality", "ideal": label})
        self.auslander_buchsbaum += 1
        pd = betti_table(ideal, self.p).projdim + 1
        by_links = depth_via_links(ideal, self.p)
        if by_links + pd != ideal.n:
            self.failures.append({"check": "auslander_buchsbaum", "ideal": label, "pd": pd, "depth": by_links})

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "eagon_reiner_checked": self.eagon_reiner,
            "duality_checked": self.duality,
            "auslander_buchsbaum_checked": self.auslander_buchsbaum,
            "failures": self.failures,
        }


def _note(checks: CrossChecks | None, ideal: SquarefreeIdeal, report: BiCMReport | None = None) -> None:
    if checks is not None:
        checks.record(ideal, report)


# single graphs --------------------------------------------------------------


def all_matching_powers_bicm(g: Graph, p: int = DEFAULT_P, checks: CrossChecks | None = None) -> dict:
    """bi-CM status of I(G)^[k] for every 1 <= k <= nu(G)."""
    check_prime(p)
    if g.has_isolated_vertex():
        raise DomainError("graphs are required to have no isolated vertices")
    nu = matching_number(g)
    per_k = []
    for k in range(1, nu + 1):
        power = matching_power(g, k)
        report = bicm_report(power, p)
        _note(checks, power, report)
        per_k.append({"k": k, **report.to_json()})
    return {"verdict": all(r["bi_cm"] for r in per_k), "nu": nu, "per_k": per_k}


# main theorem -----------------------------------------------------------------


def _classify(args: tuple[str, int]) -> tuple[str, dict]:
    from .graph import from_graph6

    g6, p = args
    return g6, all_matching_powers_bicm(from_graph6(g6), p)


def _read_checkpoint(path: Path) -> dict[str, dict]:
    done: dict[str, dict] = {}
    if not path.exists():
        return done
    for line in path.read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        g6, _, payload = line.partition(" ")
        try:
            done[g6] = json.loads(payload)
        except json.JSONDecodeError:
            # a torn final line from an interrupted write is recomputed
            continue
    return done


def verify_main_theorem(
    n: int,
    p: int = DEFAULT_P,
    *,
    allow_long: bool = False,
    jobs: int = 1,
    checkpoint: str | os.PathLike | None = None,
    checks: CrossChecks | None = None,
) -> Verdict:
    """Sweep every graph on n non-isolated vertices up to isomorphism.

    A graph passes when all its matching powers are bi-CM; the claim holds
    when the passing graphs are exactly the classes of K_n and P_n^c.
    """
    check_prime(p)
    if not 4 <= n <= MAX_THEOREM_N:
        raise DomainError(f"main theorem sweep needs 4 <= n <= {MAX_THEOREM_N}, got {n}")
    if n == MAX_THEOREM_N and not allow_long:
        raise DomainError(f"n = {MAX_THEOREM_N} is long-running; pass allow_long to enable it")
    verdict = Verdict(f"main_theorem[n={n},p={p}]")
    with _Timer(verdict):
        graphs = list(enumerate_graphs(n, no_isolated=True, up_to_iso=True))
        ckpt = Path(checkpoint) if checkpoint else None
        done = _read_checkpoint(ckpt) if ckpt else {}
        todo = [to_graph6(g) for g in graphs if to_graph6(g) not in done]
        results: dict[str, dict] = dict(done)
        handle = ckpt.open("a") if ckpt else None
        try:
            for g6, res in _run_jobs(todo, p, jobs, checks):
                results[g6] = res
                if handle:
                    handle.write(f"{g6} {json.dumps(res, separators=(',', ':'))}\n")
                    handle.write(f"# tally completed={len(results)} total={len(graphs)}\n")
                    handle.flush()
        finally:
            if handle:
                handle.close()

        survivors = []
        log = []
        for g in graphs:
            g6 = to_graph6(g)
            res = results[g6]
            name = graph_name(g)
            expected = name is not None
            record = {"graph6": g6, "edges": g.edges_1(), "name": name, "bi_cm_all_k": res["verdict"],
                      "per_k": [r["bi_cm"] for r in res["per_k"]]}
            log.append(record)
            if res["verdict"]:
                survivors.append(name or g6)
            verdict.check(res["verdict"] == expected, **record)
        verdict.details = {
            "n": n,
            "p": p,
            "classes": len(graphs),
            "survivors": survivors,
            "survivor_count": len(survivors),
        }
        if len(survivors) != 2:
            verdict.passed = False
        if checks is not None:
            verdict.details["cross_checks"] = checks.to_json()
    return verdict


def _run_jobs(todo: list[str], p: int, jobs: int, checks: CrossChecks | None):
    if checks is not None or jobs <= 1 or len(todo) < 2:
        from .graph import from_graph6

        for g6 in todo:
            yield g6, all_matching_powers_bicm(from_graph6(g6), p, checks)
        return
    from multiprocessing import Pool

    with Pool(jobs) as pool:
        yield from pool.imap(_classify, [(g6, p) for g6 in todo], chunksize=4)


def verify_small_cases(p: int = DEFAULT_P) -> Verdict:
    """Graphs on 2 and 3 non-isolated vertices: K2, K3 pass, P3 fails."""
    verdict = Verdict(f"small_cases[p={p}]")
    with _Timer(verdict):
        expect = {"K2": True, "K3": True, "P3": False}
        cases = {"K2": complete_graph(2), "K3": complete_graph(3), "P3": path_graph(3)}
        found = [to_graph6(g) for m in (2, 3) for g in enumerate_graphs(m, no_isolated=True, up_to_iso=True)]
        verdict.check(sorted(found) == sorted(to_graph6(_canon(g)) for g in cases.values()),
                      claim="only K2, P3, K3 on at most three non-isolated vertices", found=found)
        for name, g in cases.items():
            res = all_matching_powers_bicm(g, p)
            verdict.check(res["verdict"] == expect[name], graph=name, bi_cm_all_k=res["verdict"])
    return verdict


def _canon(g: Graph) -> Graph:
    from .graph import canonical_graph

    return canonical_graph(g)


# complete graphs and path complements ---------------------------------------


def verify_prop_kp(n: int, p: int = DEFAULT_P, checks: CrossChecks | None = None) -> Verdict:
    check_prime(p)
    if n < 4:
        raise DomainError("the statement needs n >= 4")
    verdict = Verdict(f"prop_kp[n={n},p={p}]")
    with _Timer(verdict):
        families = {f"K{n}": (complete_graph(n), 1, 1), f"P{n}c": (complement(path_graph(n)), 2, 2)}
        for name, (g, depth_expected, first_veronese_k) in families.items():
            depth = depth_of_quotient(edge_ideal(g), p)
            verdict.check(depth == depth_expected, graph=name, claim="depth S/I(G)", depth=depth,
                          expected=depth_expected)
            for k in range(1, matching_number(g) + 1):
                power = matching_power(g, k)
                if k >= first_veronese_k:
                    target = squarefree_veronese(n, 2 * k)
                    verdict.check(power == target, graph=name, k=k, claim="I(G)^[k] = m^[2k]",
                                  ideal=power.to_json())
                report = bicm_report(power, p)
                _note(checks, power, report)
                verdict.check(report.bi_cm, graph=name, k=k, claim="bi-CM", **report.to_json())
        verdict.details = {"n": n, "p": p}
        if checks is not None:
            verdict.details["cross_checks"] = checks.to_json()
    return verdict


# Veronese minus one generator --------------------------------------------------


def verify_lemma_notcm(n: int, d: int, p: int = DEFAULT_P, checks: CrossChecks | None = None) -> Verdict:
    """M_d minus any single monomial generates a non-Cohen-Macaulay ideal, 1 < d < n."""
    check_prime(p)
    if not 1 < d < n:
        raise DomainError(f"need 1 < d < n, got d={d}, n={n}")
    verdict = Verdict(f"lemma_notcm[n={n},d={d},p={p}]")
    with _Timer(verdict):
        full = squarefree_veronese(n, d)
        for u in full.gens:
            ideal = SquarefreeIdeal(n, tuple(g for g in full.gens if g != u))
            cm = is_cohen_macaulay(ideal, p)
            _note(checks, ideal)
            verdict.check(not cm, removed=[i + 1 for i in bits(u)], cohen_macaulay=cm)
        # after relabeling u = x_{n-d+1}...x_n the ideal is B_1(x_{n-d} u / x_{n-d+1})
        u = mask_of(range(n - d, n))
        v = (u & ~(1 << (n - d))) | (1 << (n - d - 1))
        borel = t_spread_borel(v, (1,) * (d - 1), n)
        rest = SquarefreeIdeal(n, tuple(g for g in full.gens if g != u))
        verdict.check(borel == rest, claim="M_d minus x_{n-d+1}...x_n equals B_1(v)",
                      v=[i + 1 for i in bits(v)])
        verdict.details = {"n": n, "d": d, "p": p, "ideals": len(full.gens)}
        if checks is not None:
            verdict.details["cross_checks"] = checks.to_json()
    return verdict


# identities used inside the proof ---------------------------------------------


def edge_split(g: Graph, v: int) -> tuple[SquarefreeIdeal, Graph] | None:
    """(P, H) with I(G) = x_v P + I(H), H = G minus v, when this is a vertex splitting."""
    ideal = edge_ideal(g)
    split = split_at(ideal, v)
    if split is None:
        return None
    from .graph import delete_vertex

    return split.part1, delete_vertex(g, v)


def _check_power_decomposition(verdict: Verdict, name: str, g: Graph, v: int, p: int,
                               checks: CrossChecks | None) -> None:
    n = g.n
    pp, h = edge_split(g, v)
    ih = edge_ideal(h)
    for k in range(1, matching_number(g) + 1):
        lower = SquarefreeIdeal.unit(n) if k == 1 else squarefree_power(ih, k - 1)
        if lower.is_zero:
            continue
        part1 = variable_multiply(matching_product(pp, lower), v)
        part2 = squarefree_power(ih, k)
        power = matching_power(g, k)
        same = power == part1 + part2
        verdict.check(same, graph=name, vertex=v + 1, k=k, claim="I(G)^[k] = x_v(P*I(H)^[k-1]) + I(H)^[k]")
        if not same:
            continue
        split_ok = is_betti_splitting(power, part1, part2, p)
        _note(checks, power)
        _note(checks, part1)
        _note(checks, part2)
        verdict.check(split_ok, graph=name, vertex=v + 1, k=k, claim="Betti splitting")


def _case21_graph(n: int, i: int) -> Graph:
    """H = P_{n-1}^c on [n-1] joined to vertex n along P_i = (x_j : j != i), 1-indexed i."""
    h = complement(path_graph(n - 1))
    edges = [(a, b) for a, b in h.edges()] + [(j, n - 1) for j in range(n - 1) if j != i - 1]
    return Graph.from_edges(n, edges)


def _case1_graph(n: int) -> Graph:
    """H = K_{n-2} on [n-2], vertex n joined to x_1..x_{n-3} and x_{n-1}."""
    edges = list(combinations(range(n - 2), 2))
    edges += [(j, n - 1) for j in range(n - 3)] + [(n - 2, n - 1)]
    return Graph.from_edges(n, edges)


def verify_proof_identities(n: int, p: int = DEFAULT_P, checks: CrossChecks | None = None) -> Verdict:
    check_prime(p)
    if not 5 <= n <= 8:
        raise DomainError(f"identity checks need 5 <= n <= 8, got {n}")
    verdict = Verdict(f"proof_identities[n={n},p={p}]")
    with _Timer(verdict):
        families = {f"K{n}": complete_graph(n), f"P{n}c": complement(path_graph(n))}
        splits_found = 0
        for name, g in families.items():
            ideal = edge_ideal(g)
            for v in range(n):
                found = edge_split(g, v)
                if found is None:
                    continue
                splits_found += 1
                pp, h = found
                _check_power_decomposition(verdict, name, g, v, p, checks)
                # mu(P) = n - depth K[x without x_v]/I(H)
                ih = edge_ideal(h)
                drop = _drop_variable(ih, v)
                depth_h = depth_of_quotient(drop, p)
                verdict.check(pp.mu == n - depth_h, graph=name, vertex=v + 1, claim="mu(P) = n - depth",
                              mu=pp.mu, depth=depth_h)
                cf = depth_equality_check(ideal, split_at(ideal, v), p)
                verdict.check(cf["holds"], graph=name, vertex=v + 1, claim="depth equality criterion",
                              **{k: list(x) if isinstance(x, tuple) else x for k, x in cf.items()})
        verdict.check(splits_found >= 2, claim="a vertex splitting exists for each family", splits=splits_found)

        m4 = squarefree_veronese(n, 4)
        for i in range(2, n - 1):
            g = _case21_graph(n, i)
            square = matching_power(g, 2)
            missing = mask_of([i - 2, i - 1, i, n - 1])
            target = SquarefreeIdeal(n, tuple(u for u in m4.gens if u != missing))
            verdict.check(square == target, i=i, claim="G(I(G)^[2]) = G(m^[4]) minus x_{i-1}x_ix_{i+1}x_n",
                          graph6=to_graph6(g))
            cm = is_cohen_macaulay(square, p)
            _note(checks, square)
            verdict.check(not cm, i=i, claim="I(G)^[2] not Cohen-Macaulay", cohen_macaulay=cm)

        first = squarefree_veronese(n, 3, within=(1 << (n - 1)) - 1)
        second_core = squarefree_veronese(n, 4, within=(1 << (n - 2)) - 1)
        second = second_core + SquarefreeIdeal(n, (1 << (n - 1),))
        d1 = depth_of_quotient(first, p)
        d2 = depth_of_quotient(second, p)
        verdict.check(d1 == 3, claim="depth S/(x_1..x_{n-1})^[3] = 3", depth=d1)
        verdict.check(d2 == 4, claim="depth S/((x_1..x_{n-2})^[4], x_n) = 4", depth=d2)

        g = _case1_graph(n)
        square = matching_power(g, 2)
        expected = variable_multiply(first, n - 1) + second_core
        verdict.check(square == expected, claim="K_{n-2} extension: I(G)^[2] = x_n(x_1..x_{n-1})^[3] + (x_1..x_{n-2})^[4]",
                      graph6=to_graph6(g))
        cm = is_cohen_macaulay(square, p)
        verdict.check(not cm, claim="K_{n-2} extension: I(G)^[2] not Cohen-Macaulay", cohen_macaulay=cm)
        if n == 5:
            unmixed = stanley_reisner(square).is_pure()
            verdict.check(not unmixed, claim="K_{n-2} extension, n = 5: I(G)^[2] not unmixed", unmixed=unmixed)
        verdict.details = {"n": n, "p": p, "vertex_splittings": splits_found}
        if checks is not None:
            verdict.details["cross_checks"] = checks.to_json()
    return verdict


def _drop_variable(ideal: SquarefreeIdeal, v: int) -> SquarefreeIdeal:
    """Re-index an ideal not involving x_v into n-1 variables."""
    low = (1 << v) - 1
    gens = [(g & low) | ((g >> (v + 1)) << v) for g in ideal.gens]
    return SquarefreeIdeal.from_gens(ideal.n - 1, gens)


def cf_sweep(n: int, p: int = DEFAULT_P) -> Verdict:
    """Depth-equality criterion on every edge-ideal vertex splitting of graphs on n vertices."""
    check_prime(p)
    verdict = Verdict(f"cf_sweep[n={n},p={p}]")
    with _Timer(verdict):
        applicable = 0
        for g in enumerate_graphs(n, no_isolated=True, up_to_iso=True):
            ideal = edge_ideal(g)
            for v in range(n):
                split = split_at(ideal, v)
                if split is None:
                    continue
                cf = depth_equality_check(ideal, split, p)
                if cf["betti_splitting"]:
                    applicable += 1
                    verdict.check(cf["holds"], graph6=to_graph6(g), vertex=v + 1, cohen_macaulay=cf["cohen_macaulay"])
        verdict.details = {"n": n, "p": p, "betti_splittings": applicable}
    return verdict


# conjecture probe ---------------------------------------------------------------


def probe_veronese_conjecture(n: int, d: int, t: int, p: int = DEFAULT_P,
                              checks: CrossChecks | None = None) -> Verdict:
    """bi-CM status of every nonzero squarefree power of the uniform t-spread Veronese ideal."""
    check_prime(p)
    if d < 2 or t < 1 or n <= (d - 1) * t:
        raise DomainError(f"no uniform {t}-spread Veronese ideal of degree {d} in {n} variables")
    verdict = Verdict(f"veronese_probe[n={n},d={d},t={t},p={p}]")
    with _Timer(verdict):
        ideal = uniform_veronese(n, d, t)
        stats = ideal_stats(ideal)
        for k in range(1, stats["monomial_grade"] + 1):
            power = squarefree_power(ideal, k)
            report = bicm_report(power, p)
            _note(checks, power, report)
            verdict.check(report.bi_cm, k=k, generators=power.mu, **report.to_json())
        verdict.details = {"n": n, "d": d, "t": t, "p": p, "ideal": ideal.to_json(),
                           "monomial_grade": stats["monomial_grade"], "in_conjectured_range": d >= t}
    return verdict


def veronese_grid(max_n: int = 7, degrees: Iterable[int] = (2, 3), spreads: Iterable[int] = (1, 2),
                  p: int = DEFAULT_P, checks: CrossChecks | None = None) -> list[Verdict]:
    out = []
    for d in degrees:
        for t in spreads:
            for n in range((d - 1) * t + 1, max_n + 1):
                out.append(probe_veronese_conjecture(n, d, t, p, checks))
    return out


def field_robustness(n: int, primes: Iterable[int] = (2, 3, 5)) -> Verdict:
    """Per-graph bi-CM verdicts of the main sweep agree across characteristics."""
    primes = list(primes)
    verdict = Verdict(f"field_robustness[n={n},p={','.join(map(str, primes))}]")
    with _Timer(verdict):
        per_p = {}
        for p in primes:
            sweep = verify_main_theorem(n, p, allow_long=True)
            per_p[p] = {w["graph6"]: w["per_k"] for w in sweep.witnesses}
        base = per_p[primes[0]]
        for g6, verdicts in base.items():
            others = {p: per_p[p][g6] for p in primes[1:]}
            verdict.check(all(v == verdicts for v in others.values()), graph6=g6, per_k=verdicts,
                          **{f"p{p}": v for p, v in others.items()})
        verdict.details = {"n": n, "primes": primes}
    return verdict
