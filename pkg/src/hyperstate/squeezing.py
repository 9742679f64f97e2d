"""Number/phase statistics and squeezing degrees of hypergraph states.

The degree of squeezing of an observable A against the half commutator
h = |<[N, P]>| / 2 is (Var A - h) / h; negative values signal squeezing.
Number statistics admit closed forms independent of the hypergraph:
mean (2**d - 1)/2 and variance (2**d - 1)(2**d + 1)/12.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .errors import GuardError
from .hypergraph import Hypergraph, edges_text
from .operators import (
    number_phase_commutator_dense,
    number_phase_commutator_expectation,
    phase_angles,
    phase_overlaps,
)
from .state import MAX_QUBITS, hypergraph_state

# Dense evaluation of the number/phase commutator is preferred up to this
# many qubits; beyond it the FFT route is used (tables extend to d = 13).
DENSE_QUBIT_LIMIT = 8

# Below this the commutator expectation counts as vanishing and squeezing
# degrees are undefined (except the var_p = 0 case, which is -1).
HALF_COMM_FLOOR = 1e-14


def number_stats(d: int) -> tuple[float, float]:
    """Closed-form (mean, variance) of the number operator at ``d`` qubits."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    dim = 1 << d
    return (dim - 1) / 2.0, (dim - 1) * (dim + 1) / 12.0


def phase_stats(psi: np.ndarray) -> tuple[float, float]:
    """(mean, variance) of the phase operator from |<theta_m|psi>|**2."""
    theta = phase_angles(len(psi))
    prob = np.abs(phase_overlaps(psi)) ** 2
    mean = float(np.sum(theta * prob))
    second = float(np.sum(theta**2 * prob))
    return mean, second - mean**2


def half_commutator(psi: np.ndarray) -> float:
    """|<[N, P]>| / 2, dense for small dimensions, FFT-applied otherwise."""
    dim = len(psi)
    if dim <= 1 << DENSE_QUBIT_LIMIT:
        comm = number_phase_commutator_dense(dim)
        value = complex(np.vdot(psi, comm @ psi))
    else:
        value = number_phase_commutator_expectation(psi)
    return abs(value) / 2.0


@dataclass(frozen=True)
class SqueezeReport:
    """Number/phase means, variances, and squeezing degrees for one state.

    ``s_n``/``s_p`` are None (undefined) when the commutator expectation
    vanishes, except that var_p = 0 with a vanishing commutator reports
    s_p = -1, the minimum squeezing.
    """

    d: int
    edges: str
    mean_n: float
    var_n: float
    mean_p: float
    var_p: float
    half_comm: float
    s_n: float | None
    s_p: float | None

    def to_dict(self) -> dict:
        return asdict(self)


def squeeze_report(g: Hypergraph) -> SqueezeReport:
    """Assemble the squeezing report of the hypergraph state of ``g``."""
    if g.d > MAX_QUBITS:
        raise GuardError(f"d={g.d} exceeds the {MAX_QUBITS}-qubit state guard")
    psi = hypergraph_state(g)
    mean_n, var_n = number_stats(g.d)
    mean_p, var_p = phase_stats(psi)
    half = half_commutator(psi)
    if half >= HALF_COMM_FLOOR:
        s_n = (var_n - half) / half
        s_p = (var_p - half) / half
    else:
        s_n = None
        s_p = -1.0 if abs(var_p) < HALF_COMM_FLOOR else None
    return SqueezeReport(
        d=g.d,
        edges=edges_text(g),
        mean_n=mean_n,
        var_n=var_n,
        mean_p=mean_p,
        var_p=var_p,
        half_comm=half,
        s_n=s_n,
        s_p=s_p,
    )
