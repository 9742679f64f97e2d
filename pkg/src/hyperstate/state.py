"""Hypergraph state vectors and the circuits that generate them.

The state of a hypergraph ``G`` lives in the 2**d dimensional Hilbert
space: amplitude ``n`` equals ``(-1)**f(n) / sqrt(2**d)`` with ``f`` the
Boolean function of ``G``.  The generating circuit is a layer of Hadamards
followed by one multi-controlled sign flip per hyperedge.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GuardError
from .hypergraph import Hypergraph, boolean_function

# 2**24 amplitudes (256 MiB complex128) is the largest state we build.
MAX_QUBITS = 24
_SIM_MAX_QUBITS = 20

Gate = tuple[str, tuple[int, ...]]


@dataclass(frozen=True)
class CircuitDescription:
    """Gate list preparing a hypergraph state from the all-zeros state.

    Gates are ("H", (v,)) or ("CZ", (v1, ..., vk)); CZ flips the sign of
    the all-ones subspace of the listed qubits.  All Hadamards precede the
    sign flips, one per qubit.
    """

    d: int
    gates: tuple[Gate, ...]

    def __post_init__(self) -> None:
        h_targets = []
        seen_cz = False
        for kind, qubits in self.gates:
            if any(not 0 <= v < self.d for v in qubits):
                raise ValueError(f"gate {kind} {qubits} targets qubit >= d")
            if kind == "H":
                if seen_cz:
                    raise ValueError("H gates must precede all CZ gates")
                h_targets.extend(qubits)
            elif kind == "CZ":
                seen_cz = True
            else:
                raise ValueError(f"unknown gate kind {kind!r}")
        if sorted(h_targets) != list(range(self.d)):
            raise ValueError("expected exactly one H per qubit")


def hypergraph_state(g: Hypergraph) -> np.ndarray:
    """State vector of ``g``: amplitudes (-1)**f(n) / sqrt(2**d)."""
    if g.d > MAX_QUBITS:
        raise GuardError(f"d={g.d} exceeds the {MAX_QUBITS}-qubit state guard")
    signs = 1.0 - 2.0 * boolean_function(g).truth_table.astype(np.float64)
    return (signs / np.sqrt(float(g.dim))).astype(np.complex128)


def emit_circuit(g: Hypergraph) -> CircuitDescription:
    """Generating circuit: d Hadamards, then one sign flip per edge."""
    gates: list[Gate] = [("H", (v,)) for v in range(g.d)]
    gates.extend(("CZ", e) for e in g.edges)
    return CircuitDescription(g.d, tuple(gates))


def circuit_text(circ: CircuitDescription) -> str:
    """One gate per line: ``H <v>`` / ``CZ <v1> <v2> ... <vk>``."""
    return "\n".join(
        f"{kind} " + " ".join(str(v) for v in qubits)
        for kind, qubits in circ.gates
    )


def simulate_circuit(circ: CircuitDescription) -> np.ndarray:
    """Run the circuit on |0...0> with a dense statevector simulator.

    Qubit v acts on the bit of weight 2**(d-1-v), matching the Boolean
    function convention.
    """
    if circ.d > _SIM_MAX_QUBITS:
        raise GuardError(f"d={circ.d} exceeds the {_SIM_MAX_QUBITS}-qubit simulator guard")
    dim = 1 << circ.d
    psi = np.zeros(dim, dtype=np.complex128)
    psi[0] = 1.0
    idx = np.arange(dim)
    for kind, qubits in circ.gates:
        if kind == "H":
            weight = 1 << (circ.d - 1 - qubits[0])
            partner = psi[idx ^ weight]
            high = (idx & weight) != 0
            psi = np.where(high, partner - psi, psi + partner) / np.sqrt(2.0)
        else:
            mask = sum(1 << (circ.d - 1 - v) for v in qubits)
            psi = np.where((idx & mask) == mask, -psi, psi)
    return psi
