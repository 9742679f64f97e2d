"""Moment-based nonclassicality witness with exact rational arithmetic.

For a hypergraph state on d qubits the factorial moments
m_k = <(a-dagger)**k a**k> factor as W_1 W_2 ... W_k with
W_k = k (2**d - k) / (k + 1), and the number-operator moments
mu_k = <N**k> expand over the m_j with Stirling-second-kind coefficients.
Both admit independent summation oracles over the uniform amplitude
distribution: m_k is the mean falling factorial and mu_k the mean power.

The witness A_n = det m / (det mu - det m) is negative for nonclassical
states; it is built from n x n Hankel-type matrices whose (i, j) entry is
the moment of order i + j.  Everything is carried in ``fractions.Fraction``
because the determinants cancel catastrophically in floats; floats appear
only at the presentation edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "w_factor",
    "m_moment",
    "m_moment_oracle",
    "mu_moment",
    "mu_moment_oracle",
    "moment_set",
    "MomentSet",
    "StirlingTable",
    "stirling_coefficients",
    "determinant",
    "AgarwalTaraResult",
    "agarwal_tara",
]


def _check_k(d: int, k: int, low: int) -> None:
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if not low <= k <= (1 << d) - 1:
        raise ValueError(f"k={k} outside [{low}, 2**{d} - 1]")


def w_factor(d: int, k: int) -> Fraction:
    """Normalization factor W_k = k (2**d - k) / (k + 1), exact."""
    _check_k(d, k, 1)
    return Fraction(k * ((1 << d) - k), k + 1)


def m_moment(d: int, k: int) -> Fraction:
    """Factorial moment m_k = W_1 W_2 ... W_k (m_0 = 1), exact."""
    _check_k(d, k, 0)
    out = Fraction(1)
    for i in range(1, k + 1):
        out *= w_factor(d, i)
    return out


def m_moment_oracle(d: int, k: int) -> Fraction:
    """Independent route: mean falling factorial over n = 0 .. 2**d - 1.

    m_k = 2**-d sum_n n (n-1) ... (n-k+1), exact; must equal m_moment.
    """
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    dim = 1 << d
    total = 0
    for n in range(dim):
        term = 1
        for j in range(k):
            term *= n - j
        total += term
    return Fraction(total, dim)


@dataclass(frozen=True)
class StirlingTable:
    """Coefficients S(k, j) of N**k = sum_j S(k, j) (a-dagger)**j a**j.

    Built from S(k, 1) = S(k, k) = 1 and S(k+1, j) = S(k, j-1) + j S(k, j);
    these are the Stirling numbers of the second kind.
    """

    max_k: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, k: int, j: int) -> int:
        if not 1 <= k <= self.max_k:
            raise ValueError(f"k={k} outside [1, {self.max_k}]")
        if not 1 <= j <= k:
            raise ValueError(f"j={j} outside [1, {k}]")
        return self.rows[k - 1][j - 1]


def stirling_coefficients(max_k: int) -> StirlingTable:
    """Triangular table of S(k, j) for 1 <= j <= k <= max_k."""
    if max_k < 1:
        raise ValueError(f"need max_k >= 1, got {max_k}")
    rows: list[tuple[int, ...]] = [(1,)]
    for k in range(1, max_k):
        prev = rows[-1]
        row = [
            (prev[j - 2] if j >= 2 else 0) + (j * prev[j - 1] if j <= k else 0)
            for j in range(1, k + 2)
        ]
        rows.append(tuple(row))
    return StirlingTable(max_k=max_k, rows=tuple(rows))


def mu_moment(d: int, k: int) -> Fraction:
    """Number-operator moment mu_k = sum_j S(k, j) m_j, exact."""
    _check_k(d, k, 1)
    table = stirling_coefficients(k)
    return sum(
        (table.value(k, j) * m_moment(d, j) for j in range(1, k + 1)),
        Fraction(0),
    )


def mu_moment_oracle(d: int, k: int) -> Fraction:
    """Independent route: mu_k = 2**-d sum_n n**k, exact power-sum mean."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    dim = 1 << d
    return Fraction(sum(n**k for n in range(dim)), dim)


@dataclass(frozen=True)
class MomentSet:
    """W, m, and mu sequences for one d, indices 1 .. max_k, exact."""

    d: int
    max_k: int
    w: tuple[Fraction, ...]
    m: tuple[Fraction, ...]
    mu: tuple[Fraction, ...]


def moment_set(d: int, max_k: int) -> MomentSet:
    """Bundle W_k, m_k, mu_k for k = 1 .. max_k."""
    _check_k(d, max_k, 1)
    return MomentSet(
        d=d,
        max_k=max_k,
        w=tuple(w_factor(d, k) for k in range(1, max_k + 1)),
        m=tuple(m_moment(d, k) for k in range(1, max_k + 1)),
        mu=tuple(mu_moment(d, k) for k in range(1, max_k + 1)),
    )


def determinant(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    work = [[Fraction(x) for x in row] for row in matrix]
    sign = 1
    prev = Fraction(1)
    for i in range(n - 1):
        if work[i][i] == 0:
            for r in range(i + 1, n):
                if work[r][i] != 0:
                    work[i], work[r] = work[r], work[i]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                work[r][c] = (work[r][c] * work[i][i] - work[r][i] * work[i][c]) / prev
            work[r][i] = Fraction(0)
        prev = work[i][i]
    return sign * work[n - 1][n - 1]


@dataclass(frozen=True)
class AgarwalTaraResult:
    """Exact witness A_n with the two Hankel determinants behind it."""

    d: int
    n: int
    det_m: Fraction
    det_mu: Fraction
    a_n: Fraction

    @property
    def nonclassical(self) -> bool:
        return self.a_n < 0

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "det_m": float(self.det_m),
            "det_mu": float(self.det_mu),
            "a_n": float(self.a_n),
        }


def agarwal_tara(d: int, n: int) -> AgarwalTaraResult:
    """Witness A_n = det m / (det mu - det m) from n x n moment matrices.

    Requires moments up to order 2n - 2, so 2n - 2 <= 2**d - 1; at d = 2
    this limits the witness to n = 2.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    top = 2 * n - 2
    if top > (1 << d) - 1:
        raise ValueError(
            f"A_{n} needs moments up to order {top}, beyond the 2**{d} - 1 "
            f"available at d={d}"
        )
    m_seq = [m_moment(d, k) for k in range(top + 1)]
    mu_seq = [Fraction(1)] + [mu_moment(d, k) for k in range(1, top + 1)]
    det_m = determinant([[m_seq[i + j] for j in range(n)] for i in range(n)])
    det_mu = determinant([[mu_seq[i + j] for j in range(n)] for i in range(n)])
    if det_mu == det_m:
        raise ArithmeticError("witness undefined: det mu equals det m exactly")
    return AgarwalTaraResult(d=d, n=n, det_m=det_m, det_mu=det_mu, a_n=det_m / (det_mu - det_m))
