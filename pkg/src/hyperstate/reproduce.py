"""Reproduction report: recompute every published table and compare.

Each check mirrors one block of the published results at desk scale and
reports PASS/FAIL plus discrepancy notes.  Comparisons that hinge on
suspect published cells (the moment-witness A_4 table, extended sweep
rows) document the disagreement instead of failing: the exact-rational
pipeline and the dual dense/FFT evaluation routes adjudicate which side
is wrong.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import reference_tables as ref
from .coherence import coherence_report
from .hypergraph import (
    Hypergraph,
    canonical_edges,
    complete_k_graph,
    edges_text,
    k_uniform_family,
    parse_edges,
    single_full_edge,
)
from .moments import (
    agarwal_tara,
    m_moment,
    m_moment_oracle,
    mu_moment,
    mu_moment_oracle,
)
from .operators import (
    annihilation,
    gershgorin_bound,
    number_operator,
    number_phase_commutator_dense,
    phase_angles,
    phase_operator_dense,
    quadrature_commutator_expectation,
    variance,
    verify_structure,
)
from .squeezing import squeeze_report
from .state import hypergraph_state
from .sweep import SweepRecord, SweepSummary, dminus1_family, render_results, sweep_family

VALUE_TOL = 1e-3
EXACT_TOL = 1e-9


@dataclass(frozen=True)
class CheckResult:
    key: str
    name: str
    status: str  # "PASS" or "FAIL"
    detail: str
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
            "notes": list(self.notes),
        }


def _result(key: str, name: str, failures: list[str], detail: str, notes: list[str]) -> CheckResult:
    if failures:
        joined = "; ".join(failures[:4]) + ("; ..." if len(failures) > 4 else "")
        return CheckResult(key, name, "FAIL", joined, tuple(notes))
    return CheckResult(key, name, "PASS", detail, tuple(notes))


def _matches_up_to_relabeling(expected: str, candidates: tuple[str, ...], d: int) -> bool:
    """Does some candidate edge set equal ``expected`` after relabeling?"""
    if expected in candidates:
        return True
    expected_edges = canonical_edges(parse_edges(expected))
    candidate_sets = {canonical_edges(parse_edges(c)) for c in candidates}
    if d <= 8:
        for perm in itertools.permutations(range(d)):
            mapped = canonical_edges(tuple(tuple(perm[v] for v in e) for e in expected_edges))
            if mapped in candidate_sets:
                return True
        return False
    # (d-1)-uniform edge sets are relabeling-equivalent iff they have the
    # same edge count (each edge is the complement of one vertex).
    return any(len(c) == len(expected_edges) for c in candidate_sets)


@dataclass
class Reproducer:
    """Runs the reproduction checks, caching family sweeps for reuse."""

    extended: bool = False
    threads: int = 1
    _dminus1_cache: dict[int, tuple[list[SweepRecord], SweepSummary]] = field(default_factory=dict)

    def dminus1(self, d: int) -> tuple[list[SweepRecord], SweepSummary]:
        if d not in self._dminus1_cache:
            self._dminus1_cache[d] = sweep_family(dminus1_family(d), threads=self.threads)
        return self._dminus1_cache[d]

    # --- individual checks -------------------------------------------------

    def check_example_state(self) -> CheckResult:
        g = Hypergraph(4, ref.EXAMPLE_STATE_EDGES)
        psi = hypergraph_state(g)
        signs = tuple(int(round(float(a.real) * 4)) for a in psi)
        failures = []
        if signs != ref.EXAMPLE_STATE_SIGNS:
            failures.append(f"signs {signs} != published {ref.EXAMPLE_STATE_SIGNS}")
        return _result("C1", "example state amplitudes", failures,
                       "all 16 published signs reproduced", [])

    def check_single_full_table(self) -> CheckResult:
        failures = []
        for d, expected in sorted(ref.SINGLE_FULL_S_P.items()):
            got = squeeze_report(single_full_edge(d)).s_p
            if got is None or abs(got - expected) >= VALUE_TOL:
                failures.append(f"d={d}: s_p={got} vs published {expected}")
        return _result("C2", "single full-hyperedge squeezing (d=4..13)", failures,
                       "all 10 published values within 1e-3", [])

    def check_example_statistics(self) -> CheckResult:
        g = Hypergraph(4, ref.EXAMPLE_STATE_EDGES)
        report = squeeze_report(g)
        psi = hypergraph_state(g)
        dense_var_n = variance(number_operator(16), psi)
        failures = []
        for label, got, expected in (
            ("var_p", report.var_p, ref.EXAMPLE_STATE_VAR_P),
            ("var_n", report.var_n, ref.EXAMPLE_STATE_VAR_N),
            ("half_comm", report.half_comm, ref.EXAMPLE_STATE_HALF_COMM),
        ):
            if abs(got - expected) >= VALUE_TOL:
                failures.append(f"{label}={got:.6f} vs published {expected}")
        if abs(dense_var_n - report.var_n) >= EXACT_TOL:
            failures.append(f"dense var_n {dense_var_n!r} != closed form {report.var_n!r}")
        if report.s_p is None or report.s_p <= 0:
            failures.append(f"example state should not be phase squeezed, s_p={report.s_p}")
        return _result("C3", "published example statistics", failures,
                       f"var_p={report.var_p:.4f} var_n={report.var_n} half={report.half_comm:.4f}", [])

    def check_dminus1_extrema(self) -> CheckResult:
        failures: list[str] = []
        notes: list[str] = []
        gated = (5, 6, 7, 8)
        extended = (9, 10, 11, 12) if self.extended else ()
        for d in gated + extended:
            pub_max, pub_max_sets, pub_min, pub_min_sets = ref.DMINUS1_S_P[d]
            summary = self.dminus1(d)[1].metrics["s_p"]
            hard = d in gated
            for label, pub_value, pub_sets, got_value, got_sets in (
                ("max", pub_max, pub_max_sets, summary.max_value, summary.argmax),
                ("min", pub_min, pub_min_sets, summary.min_value, summary.argmin),
            ):
                if got_value is None or abs(got_value - pub_value) >= VALUE_TOL:
                    message = (f"d={d} {label}: computed {got_value} vs published {pub_value}")
                    if hard:
                        failures.append(message)
                    else:
                        notes.append(
                            "suspected misprint in the (d-1)-graph extrema table: " + message
                        )
                set_ok = all(
                    _matches_up_to_relabeling(pub, got_sets, d) for pub in pub_sets
                ) or all(got in pub_sets for got in got_sets)
                if not set_ok:
                    message = f"d={d} {label}: extremal edge sets {got_sets} vs published {pub_sets}"
                    if hard:
                        failures.append(message)
                    else:
                        notes.append("extended row, edge sets differ: " + message)
        scope = "d=5..12" if self.extended else "d=5..8"
        return _result("C4", f"(d-1)-graph squeezing extrema ({scope})", failures,
                       "published extrema and edge sets reproduced", notes)

    def check_complete_k_table(self) -> CheckResult:
        failures = []
        for (d, k), expected in sorted(ref.COMPLETE_K_S_P.items()):
            if d > 8 and not self.extended:
                continue
            got = squeeze_report(complete_k_graph(d, k)).s_p
            if got is None or abs(got - expected) >= VALUE_TOL:
                failures.append(f"d={d},k={k}: s_p={got} vs published {expected}")
        scope = "d<=11" if self.extended else "d<=8"
        return _result("C5", f"complete k-graph squeezing ({scope})", failures,
                       "all populated published cells within 1e-3", [])

    def check_witness_small(self) -> CheckResult:
        from fractions import Fraction

        failures = []
        a2_d2 = agarwal_tara(2, 2)
        if a2_d2.a_n != Fraction(-1, 6):
            failures.append(f"A_2(d=2) = {a2_d2.a_n} != -1/6")
        a2_d3 = agarwal_tara(3, 2)
        if a2_d3.a_n != Fraction(1, 2):
            failures.append(f"A_2(d=3) = {a2_d3.a_n} != 1/2")
        a3_d3 = agarwal_tara(3, 3)
        if a3_d3.det_m != Fraction(-245, 4) or a3_d3.det_mu != Fraction(441, 4):
            failures.append(
                f"n=3, d=3 determinants {a3_d3.det_m}, {a3_d3.det_mu} != -245/4, 441/4"
            )
        for d, expected in ((3, -0.3571), (4, -0.2160), (5, 0.1862)):
            got = float(agarwal_tara(d, 3).a_n)
            if abs(got - expected) >= 1e-4:
                failures.append(f"A_3(d={d}) = {got:.5f} vs published {expected}")
        return _result("C6", "moment witness A_2/A_3 tables", failures,
                       "exact fractions and published decimals agree", [])

    def check_moment_identities(self) -> CheckResult:
        failures = []
        for d in range(1, 7):
            top = (1 << d) - 1
            for k in range(top + 1):
                if m_moment(d, k) != m_moment_oracle(d, k):
                    failures.append(f"m_{k}(d={d}) disagrees with the summation oracle")
                if 1 <= k and mu_moment(d, k) != mu_moment_oracle(d, k):
                    failures.append(f"mu_{k}(d={d}) disagrees with the power-sum oracle")
        # Third route: dense-matrix expectation of the ordered ladder powers,
        # evaluated on two different hypergraphs per d to confirm the moments
        # ignore the edge structure.
        for d in range(2, 6):
            dim = 1 << d
            lower = annihilation(dim)
            for g in (single_full_edge(d), complete_k_graph(d, max(2, d - 1))):
                vec = hypergraph_state(g)
                for k in range(1, dim):
                    vec = lower @ vec
                    dense = float(np.vdot(vec, vec).real)
                    exact = float(m_moment(d, k))
                    if abs(dense - exact) > EXACT_TOL * max(1.0, abs(exact)):
                        failures.append(
                            f"dense <(a+)^{k} a^{k}> on {g.d}-vertex graph differs from exact"
                        )
        notes = [disc.describe() for disc in ref.witness_discrepancies()]
        return _result("C7", "moment identities (three routes, exact)", failures,
                       "product, summation, and dense routes agree for d<=6", notes)

    def check_a4_crosscheck(self) -> CheckResult:
        failures = []
        for d in (3, 4, 5):
            result = agarwal_tara(d, 4)
            m_float = np.array(
                [[float(m_moment(d, i + j)) for j in range(4)] for i in range(4)]
            )
            mu_float = np.array(
                [[float(mu_moment(d, i + j)) if i + j else 1.0 for j in range(4)] for i in range(4)]
            )
            det_m = float(np.linalg.det(m_float))
            det_mu = float(np.linalg.det(mu_float))
            a4_float = det_m / (det_mu - det_m)
            if abs(a4_float - float(result.a_n)) > 1e-9 * max(1.0, abs(float(result.a_n))):
                failures.append(f"d={d}: float-determinant A_4 {a4_float} vs exact {float(result.a_n)}")
        notes = [disc.describe() for disc in ref.witness_discrepancies(n=4)]
        return _result("C8", "A_4 exact vs float determinants", failures,
                       "exact-rational and float evaluations agree to 1e-9", notes)

    def check_coherence(self) -> CheckResult:
        failures: list[str] = []
        notes: list[str] = []
        ln2 = math.log(2.0)
        for d in range(1, 11):
            report = coherence_report(single_full_edge(d) if d > 1 else Hypergraph(1), "number")
            if report.c_l1 != float((1 << d) - 1):
                failures.append(f"d={d}: number-basis c_l1 {report.c_l1!r} != {(1 << d) - 1}")
            if abs(report.c_rel_ent - d * ln2) > 1e-12 * d * ln2:
                failures.append(f"d={d}: number-basis entropy {report.c_rel_ent!r} != {d}*ln2")
        for d, printed in sorted(ref.NUMBER_BASIS_ENTROPY.items()):
            if abs(d * ln2 - printed) >= VALUE_TOL:
                failures.append(f"d={d}: published entropy row {printed} vs {d * ln2:.4f}")
        # Phase-basis extrema over connected (d-1)-graphs; d=4 is the gate,
        # further rows are compared and documented when extended.
        gated = (4,)
        extended_ent = tuple(range(5, 11)) if self.extended else ()
        extended_l1 = tuple(range(5, 9)) if self.extended else ()
        for metric, table, rows in (
            ("c_rel_phase", ref.PHASE_BASIS_ENTROPY, gated + extended_ent),
            ("c_l1_phase", ref.PHASE_BASIS_L1, gated + extended_l1),
        ):
            for d in rows:
                pub_max, pub_max_sets, pub_min, pub_min_sets = table[d]
                summary = self.dminus1(d)[1].metrics[metric]
                hard = d in gated
                for label, pub_value, pub_sets, got_value, got_sets in (
                    ("max", pub_max, pub_max_sets, summary.max_value, summary.argmax),
                    ("min", pub_min, pub_min_sets, summary.min_value, summary.argmin),
                ):
                    ok_value = got_value is not None and abs(got_value - pub_value) < VALUE_TOL
                    ok_sets = all(_matches_up_to_relabeling(p, got_sets, d) for p in pub_sets)
                    if hard and not ok_value:
                        failures.append(
                            f"{metric} d={d} {label}: computed {got_value} vs published {pub_value}"
                        )
                    elif hard and not ok_sets:
                        failures.append(
                            f"{metric} d={d} {label}: edge sets {got_sets} vs published {pub_sets}"
                        )
                    elif not (ok_value and ok_sets):
                        notes.append(
                            f"suspected misprint in the phase-basis {metric} table: d={d} {label} "
                            f"published {pub_value}, computed {got_value}"
                        )
        return _result("C9", "coherence closed forms and phase-basis extrema", failures,
                       "number-basis closed forms exact; published d=4 extrema reproduced", notes)

    def check_structure_suite(self) -> CheckResult:
        failures = []
        rng = np.random.default_rng(20240809)
        for dim in (4, 8, 16, 64, 256):
            phase_op = phase_operator_dense(dim)
            report = verify_structure(phase_op)
            if not (report.hermitian.holds and report.circulant.holds):
                failures.append(f"dim={dim}: phase operator not Hermitian circulant")
            theta = phase_angles(dim)
            fourier = np.exp(
                2j * np.pi * np.outer(np.arange(dim), np.arange(dim)) / dim
            ) / np.sqrt(dim)
            spectral = (fourier * theta) @ fourier.conj().T
            if float(np.max(np.abs(phase_op - spectral))) > 1e-10:
                failures.append(f"dim={dim}: entry formula differs from spectral sum")
            comm = number_phase_commutator_dense(dim)
            comm_report = verify_structure(comm)
            if not (comm_report.skew_hermitian.holds and comm_report.toeplitz.holds):
                failures.append(f"dim={dim}: [N,P] not skew-Hermitian Toeplitz")
            if float(np.max(np.abs(np.diag(comm)))) > 0.0:
                failures.append(f"dim={dim}: [N,P] diagonal not exactly zero")
            eigenvalues = np.linalg.eigvalsh(1j * comm)
            radius = float(np.max(np.abs(eigenvalues)))
            row_sum = float(np.max(np.sum(np.abs(comm), axis=1)))
            if radius > row_sum * (1.0 + 1e-12):
                failures.append(f"dim={dim}: eigenvalue beyond the row-sum Gershgorin bound")
            if radius > np.pi * (dim - 1) ** 2 / 2 + 1e-12:
                failures.append(f"dim={dim}: eigenvalue beyond pi(dim-1)^2/2")
            # FFT application against dense multiplication on random states.
            from .operators import apply_phase_operator

            for _ in range(3):
                state = rng.normal(size=dim) + 1j * rng.normal(size=dim)
                state /= np.linalg.norm(state)
                if float(np.max(np.abs(apply_phase_operator(state) - phase_op @ state))) > 1e-10:
                    failures.append(f"dim={dim}: FFT application differs from dense")
                    break
        # Robertson bound on every swept record.
        checked = 0
        for d in (4, 5, 6, 7, 8):
            for record in self.dminus1(d)[0]:
                var_n, var_p, half = (
                    record.metrics["var_n"], record.metrics["var_p"], record.metrics["half_comm"],
                )
                checked += 1
                if var_n * var_p < half * half * (1.0 - 1e-9):
                    failures.append(f"Robertson violation at d={d}, edges {record.edges}")
        return _result("C10", "phase-operator structure suite", failures,
                       f"structure, spectra, FFT agreement, Robertson on {checked} states", [])

    def check_stated_eigenvalue_bound(self) -> CheckResult:
        failures = []
        notes = [
            "the published closed form 2pi(D-1)^2/(4D^2) drops a D^2 factor in the "
            "row-sum evaluation and cannot bound the spectrum: at D=2 the commutator "
            "is [[0, pi/2], [-pi/2, 0]] with eigenvalues +-pi/2 while the formula "
            "gives pi/8; the published |<[N,P]>| = 2 x 1.8624 at d=4 already exceeds "
            "the formula value 1.3806 there",
            "the matrix row sums themselves, and the corrected relaxation "
            "pi(D-1)^2/2, do bound every eigenvalue (verified in the structure suite)",
        ]
        for dim in (4, 8, 16, 64, 256):
            eigenvalues = np.linalg.eigvalsh(1j * number_phase_commutator_dense(dim))
            radius = float(np.max(np.abs(eigenvalues)))
            bound = gershgorin_bound(dim)
            if radius > bound:
                failures.append(f"dim={dim}: spectral radius {radius:.4f} > stated {bound:.4f}")
        return _result("C10b", "stated eigenvalue bound formula", failures,
                       "eigenvalues within the stated closed form", notes)

    def check_quadrature_claims(self) -> CheckResult:
        failures = []
        notes = []
        states: list[Hypergraph] = []
        for d in (2, 3, 4):
            for k in range(1, d + 1):
                states.extend(k_uniform_family(d, k))
        for d in (5, 6):
            states.append(single_full_edge(d))
            states.extend(itertools.islice(k_uniform_family(d, d - 1), 5))
        for g in states:
            psi = hypergraph_state(g)
            for k in (1, 2):
                value = quadrature_commutator_expectation(psi, k)
                if abs(value) > 1e-10:
                    failures.append(
                        f"<[X^{k},P^{k}]> = {value} on d={g.d}, edges {edges_text(g)}"
                    )
        for g in (single_full_edge(3), Hypergraph(4, ref.EXAMPLE_STATE_EDGES), complete_k_graph(4, 3)):
            psi = hypergraph_state(g)
            for k in (3, 4):
                value = quadrature_commutator_expectation(psi, k)
                notes.append(
                    f"claim verification: <[X^{k},P^{k}]> on d={g.d} edges {edges_text(g)} "
                    f"= {value.real:.6g}{value.imag:+.6g}j"
                    + ("" if abs(value) <= 1e-10 else " (nonzero; the all-k claim fails here)")
                )
        return _result("C11", "quadrature commutator nullity (k=1,2)", failures,
                       f"zero within 1e-10 on {len(states)} hypergraph states", notes)

    def check_no_number_squeezing(self) -> CheckResult:
        failures = []
        notes = []
        count = 0
        reports = []
        for d in (4, 5, 6, 7, 8):
            reports.extend(
                (record.edges, record.metrics["s_n"], d) for record in self.dminus1(d)[0]
            )
        for d in range(2, 9):
            reports.append((edges_text(single_full_edge(d)),
                            squeeze_report(single_full_edge(d)).s_n, d))
            for k in range(2, d + 1):
                g = complete_k_graph(d, k)
                reports.append((edges_text(g), squeeze_report(g).s_n, d))
        for edges, s_n, d in reports:
            if s_n is None:
                notes.append(f"s_n undefined at d={d}, edges {edges}")
                continue
            count += 1
            if s_n < 0:
                failures.append(f"S_N = {s_n} < 0 at d={d}, edges {edges}")
        return _result("C12", "no number squeezing over swept families (d<=8)", failures,
                       f"S_N >= 0 on all {count} swept configurations", notes)

    def check_determinism(self) -> CheckResult:
        failures = []
        family = dminus1_family(6)
        records_1, _ = sweep_family(family, threads=1)
        records_8, _ = sweep_family(family, threads=8)
        for fmt in ("csv", "json"):
            if render_results(records_1, fmt) != render_results(records_8, fmt):
                failures.append(f"{fmt} output differs between 1 and 8 threads")
        return _result("C13", "thread-count determinism", failures,
                       "1-thread and 8-thread sweeps render byte-identically", [])

    # --- driver -------------------------------------------------------------

    def run(self) -> list[CheckResult]:
        return [
            self.check_example_state(),
            self.check_single_full_table(),
            self.check_example_statistics(),
            self.check_dminus1_extrema(),
            self.check_complete_k_table(),
            self.check_witness_small(),
            self.check_moment_identities(),
            self.check_a4_crosscheck(),
            self.check_coherence(),
            self.check_structure_suite(),
            self.check_stated_eigenvalue_bound(),
            self.check_quadrature_claims(),
            self.check_no_number_squeezing(),
            self.check_determinism(),
        ]

    # --- plot series ----------------------------------------------------------

    def plot_series(self) -> dict[str, list[tuple[int, float]]]:
        """Metric-vs-d series for the published scatter figures."""
        series: dict[str, list[tuple[int, float]]] = {}
        series["single_full_s_p"] = [
            (d, squeeze_report(single_full_edge(d)).s_p) for d in range(4, 14)
        ]
        top = 12 if self.extended else 8
        for label, metric in (("s_p", "s_p"), ("entropy", "c_rel_phase"), ("l1", "c_l1_phase")):
            lo: list[tuple[int, float]] = []
            hi: list[tuple[int, float]] = []
            start = 5 if metric == "s_p" else 4
            for d in range(start, top + 1):
                summary = self.dminus1(d)[1].metrics[metric]
                if summary.min_value is not None:
                    lo.append((d, summary.min_value))
                if summary.max_value is not None:
                    hi.append((d, summary.max_value))
            series[f"dminus1_{label}_min"] = lo
            series[f"dminus1_{label}_max"] = hi
        series["number_basis_l1"] = [(d, float((1 << d) - 1)) for d in range(4, 11)]
        series["number_basis_entropy"] = [(d, d * math.log(2.0)) for d in range(4, 11)]
        return series


def run_all(extended: bool = False, threads: int = 1) -> list[CheckResult]:
    return Reproducer(extended=extended, threads=threads).run()


def render_text(results: list[CheckResult]) -> str:
    lines = []
    for result in results:
        lines.append(f"{result.status:4s} {result.key:3s} {result.name}: {result.detail}")
        for note in result.notes:
            lines.append(f"       - {note}")
    failed = sum(1 for r in results if r.status == "FAIL")
    lines.append(
        f"{len(results) - failed}/{len(results)} checks passed"
        + (f", {failed} FAILED" if failed else "")
    )
    return "\n".join(lines) + "\n"
