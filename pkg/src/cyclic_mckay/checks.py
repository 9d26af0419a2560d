"""Cross-validation of the monomial, toric and G-cluster descriptions against each other."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import clusters as cl
from .errors import McKayError
from .group import GroupParams, is_in_sl2, small_groups
from .monomials import (
    g_basis,
    is_special_by_generator_count,
    l_space,
    special_reps,
    surjectivity_oracle,
)
from .quiver import cartan_matrix, is_extended_a_cycle, is_negative_definite, quiver_graph, tensor_matrix
from .resolution import build_resolution, chart_labels, dual_graph, hj_value, in_lattice, pairing

log = logging.getLogger(__name__)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "status": "pass" if self.passed else "fail", "detail": self.detail}


@dataclass
class ValidationReport:
    group: GroupParams
    checks: list[Check] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "group": {"r": self.group.r, "a": self.group.a},
            "status": "pass" if self.ok else "fail",
            "checks": [c.to_dict() for c in self.checks],
            "counts": dict(self.counts),
        }


def _speciality(G):
    specials = set(special_reps(G).specials)
    for i in range(1, G.r):
        votes = (i in specials, is_special_by_generator_count(G, i), surjectivity_oracle(G, i))
        if len(set(votes)) != 1:
            return False, f"rho{i}: B\\L={votes[0]} two-generators={votes[1]} surjective={votes[2]}"
    return True, f"{G.r - 1} nontrivial representations agree"


def _wunram(G):
    res = build_resolution(G)
    n_spec = len(special_reps(G).specials)
    interior = len(res.boundary) - 2
    nums = (n_spec, len(res.hj), len(res.curves), interior)
    labels = sorted(c.special_rep for c in res.curves)
    ok = len(set(nums)) == 1 and labels == list(special_reps(G).specials)
    return ok, f"specials={n_spec} hj={len(res.hj)} curves={len(res.curves)} interior={interior} labels={labels}"


def _cluster_count(G):
    n = len(cl.enumerate_clusters(G))
    s = len(build_resolution(G).curves)
    return n == s + 1, f"clusters={n} curves={s}"


def _regular(G):
    for c in cl.enumerate_clusters(G):
        if sorted(c.chars(G)) != list(range(G.r)) or not c.is_young():
            return False, f"cluster {c.columns} is not a regular-representation Young diagram"
    return True, ""


def _cotangent(G):
    single = 0
    for c in cl.enumerate_clusters(G):
        cot = cl.cotangent_decomposition(G, cl.cluster_ideal(G, c))
        if len(cot) == 2:
            single += 1
        elif len(cot) != 3:
            return False, f"cluster {c.columns} has cotangent {cot}"
    return single == 2, f"{single} clusters with a single nontrivial character"


def _chain(G):
    res = build_resolution(G)
    chain = cl.reconstruct_chain(G, cl.enumerate_clusters(G))
    toric = dual_graph(res.curves).labels
    return chain.nodes == toric, f"clusters {list(chain.nodes)} vs fan {list(toric)}"


def _charts(G):
    res = build_resolution(G)
    clusters = cl.enumerate_clusters(G)
    if len(clusters) != len(res.charts):
        return False, "cluster and chart counts differ"
    for c, chart in zip(clusters, res.charts):
        ideal = cl.cluster_ideal(G, c)
        deform = cl.chart_deformation(G, ideal)
        if deform.at_origin() != ideal.generators:
            return False, f"deformation of {ideal} does not degenerate to it"
        if {deform.alpha_exponent, deform.beta_exponent} != set(chart.dual_pair):
            return False, f"cluster {c.columns} exponents differ from chart {chart.index} {chart.dual_pair}"
        labels = tuple(sorted(set(cl.cotangent_decomposition(G, ideal)[:-1])))
        if labels != chart_labels(res, chart):
            return False, f"cluster {c.columns} labels {labels} vs chart {chart.index}"
    widths = [len(c.columns) for c in clusters]
    if any(x >= y for x, y in zip(widths, widths[1:])):
        return False, f"column counts not strictly increasing along the chain: {widths}"
    return True, f"{len(clusters)} charts"


def _fan(G):
    res = build_resolution(G)
    for chart in res.charts:
        u, v = chart.rays
        if u.p * v.q - u.q * v.p != G.r:
            return False, f"cone {chart.index} has det {u.p * v.q - u.q * v.p}"
        alpha, beta = chart.dual_pair
        for w in (alpha, beta):
            if (w[0] + G.a * w[1]) % G.r:
                return False, f"dual vector {w} not in M"
        if [pairing(G, alpha, u), pairing(G, alpha, v), pairing(G, beta, u), pairing(G, beta, v)] != [1, 0, 0, 1]:
            return False, f"chart {chart.index} dual pair is not the dual basis"
    if not all(in_lattice(G, u) for u in res.boundary):
        return False, "boundary point outside N"
    return True, f"{len(res.charts)} unimodular cones"


def _hj(G):
    res = build_resolution(G)
    if hj_value(res.hj) != Fraction(G.r, G.a):
        return False, f"{list(res.hj)} evaluates to {hj_value(res.hj)}"
    dual = build_resolution(GroupParams(G.r, G.a_inverse)).hj
    if tuple(reversed(res.hj)) != dual:
        return False, f"reversal {list(res.hj)} vs HJ(r/a')={list(dual)}"
    if tuple(-e for e in reversed([c.self_intersection for c in res.curves])) != res.hj:
        return False, "self-intersections read from the y-axis end differ from HJ(r/a)"
    return True, "-".join(map(str, res.hj))


def _definite(G):
    mat = build_resolution(G).intersection_matrix
    return is_negative_definite(mat), ""


def _tensor(G):
    A = tensor_matrix(G)
    r = G.r
    sums = all(sum(row) == 2 for row in A) and all(sum(A[i][j] for i in range(r)) == 2 for j in range(r))
    symmetric = all(A[i][j] == A[j][i] for i in range(r) for j in range(r))
    return sums and symmetric == is_in_sl2(G), f"symmetric={symmetric}"


def _sl2_trichotomy(G):
    b_eq_l = g_basis(G) == l_space(G)
    all_special = len(special_reps(G).specials) == G.r - 1
    sl2 = is_in_sl2(G)
    return b_eq_l == sl2 == all_special, f"B=L:{b_eq_l} SL2:{sl2} all-special:{all_special}"


def _sl2_cartan(G):
    data = cartan_matrix(G)
    return data.opposite, "intersection = -(2I - A)"


def _sl2_corollary(G):
    return cl.an_corollary_check(G), "ideals (x^k, y^(r-k+1), xy)"


def _sl2_quiver(G):
    return is_extended_a_cycle(quiver_graph(G)), f"A~{G.r - 1} cycle"


CHECKS = [
    ("wunram_count", _wunram),
    ("speciality_criteria", _speciality),
    ("cluster_count", _cluster_count),
    ("regular_representation", _regular),
    ("cotangent_special", _cotangent),
    ("chain_agreement", _chain),
    ("chart_agreement", _charts),
    ("unimodular_fan", _fan),
    ("hj_identities", _hj),
    ("negative_definite", _definite),
    ("tensor_matrix", _tensor),
    ("sl2_trichotomy", _sl2_trichotomy),
]

SL2_CHECKS = [
    ("sl2_cartan_opposition", _sl2_cartan),
    ("sl2_an_corollary", _sl2_corollary),
    ("sl2_extended_dynkin", _sl2_quiver),
]


def check_group(G: GroupParams) -> ValidationReport:
    """Run every cross-check; failures are recorded, never raised."""
    report = ValidationReport(G)
    checks = CHECKS + (SL2_CHECKS if is_in_sl2(G) else [])
    for name, fn in checks:
        try:
            passed, detail = fn(G)
        except McKayError as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        report.checks.append(Check(name, bool(passed), detail))
        if not passed:
            log.warning("%s: %s failed: %s", G, name, detail)
    try:
        res = build_resolution(G)
        report.counts = {
            "specials": len(special_reps(G).specials),
            "curves": len(res.curves),
            "clusters": len(cl.enumerate_clusters(G)),
            "hj_length": len(res.hj),
        }
    except McKayError as exc:
        report.checks.append(Check("counts", False, str(exc)))
    return report


def sweep(r_max: int, jobs: int = 1, r_min: int = 2) -> list[ValidationReport]:
    """check_group over every small (r, a) with r <= r_max, in (r, a) order."""
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    groups = list(small_groups(r_max, r_min))
    if jobs == 1:
        return [check_group(G) for G in groups]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(check_group, groups, chunksize=8))
