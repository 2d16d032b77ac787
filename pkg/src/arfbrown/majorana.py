"""The time-reversal-invariant Majorana chain, exactly.

The state space on n vertices is spanned by the subsets of the vertex
set (dimension 2^n, graded by subset size mod 2).  The Majorana
operators c_v = eps_v + iota_v and d_v = eps_v - iota_v are integer
matrices built from the exterior and interior products with the
alternating sign (-1)^{#elements before v}; the Hamiltonian is

    H = 1/2 sum over edges of (-1)^{t(e)} c_head d_tail

with boundary(e) = head - tail in the chosen orientation.  2H has integer
entries and integer eigenvalues, so the spectrum is computed by a kernel
scan over the integer candidates lambda in [-E, E] (E = number of edge
terms), certified exactly: modular nullities over a large prime are upper
bounds for rational nullities, and a family of them summing to the space's
dimension must be exact.  Ground vectors are integer vectors obtained by
applying the polynomial that kills every other eigenspace, then verified
against (2H - lambda I) by exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded
from .exactla import (
    MOD_PRIMES,
    fraction_rref,
    modular_nullity,
    rational_nullity,
    solve_in_span,
)
from .pin1 import Circle, HasBoundary, Interval

__all__ = [
    "ChainSetup",
    "GroundStateReport",
    "ReferenceModule",
    "IntervalReport",
    "majorana_operators",
    "doubled_hamiltonian",
    "hamiltonian",
    "ground_states",
    "epsilon_operator",
    "reference_module",
    "interval_bimodule_check",
    "CapExceeded",
]

DEFAULT_VERTEX_CAP = 10


class ChainSetup:
    """A circle or interval with edge bits and an orientation.

    Vertices are numbered 0..n-1.  With orientation +1 edge i runs from
    vertex i (tail) to vertex i+1 (head), indices mod n on a circle;
    orientation -1 swaps every tail and head.
    """

    __slots__ = ("_component", "_orientation")

    def __init__(self, component: Circle | Interval, orientation: int = 1):
        if not isinstance(component, (Circle, Interval)):
            raise TypeError("component must be a Circle or an Interval")
        if orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        self._component = component
        self._orientation = orientation

    @classmethod
    def circle(cls, edge_bits: Iterable[int], orientation: int = 1) -> ChainSetup:
        return cls(Circle(edge_bits), orientation)

    @classmethod
    def interval(cls, edge_bits: Iterable[int], orientation: int = 1) -> ChainSetup:
        return cls(Interval(edge_bits), orientation)

    @property
    def component(self) -> Circle | Interval:
        return self._component

    @property
    def orientation(self) -> int:
        return self._orientation

    @property
    def is_circle(self) -> bool:
        return isinstance(self._component, Circle)

    @property
    def edge_bits(self) -> tuple[int, ...]:
        return self._component.edge_bits

    @property
    def vertex_count(self) -> int:
        return self._component.vertex_count

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """(tail, head, bit) per edge, in edge order."""
        bits = self._component.edge_bits
        n = self.vertex_count
        out = []
        for i, bit in enumerate(bits):
            tail, head = i, (i + 1) % n
            if self._orientation == -1:
                tail, head = head, tail
            out.append((tail, head, bit))
        return tuple(out)

    def reversed(self) -> ChainSetup:
        return ChainSetup(self._component, -self._orientation)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ChainSetup)
            and self._component == other._component
            and self._orientation == other._orientation
        )

    def __hash__(self) -> int:
        return hash((self._component, self._orientation))

    def __repr__(self) -> str:
        kind = "circle" if self.is_circle else "interval"
        sign = "+" if self._orientation == 1 else "-"
        return f"ChainSetup({kind} {list(self.edge_bits)}, orientation {sign})"


def _vertex_sign(mask: int, v: int) -> int:
    """(-1)^{#occupied vertices before v}, the alternating-basis sign."""
    return -1 if (mask & ((1 << v) - 1)).bit_count() & 1 else 1


def majorana_operators(
    setup: ChainSetup,
) -> dict[int, tuple[np.ndarray, np.ndarray]]:
    """c_v and d_v for every vertex, as integer matrices on the subsets."""
    n = setup.vertex_count
    dim = 1 << n
    ops: dict[int, tuple[np.ndarray, np.ndarray]] = {}
    for v in range(n):
        c = np.zeros((dim, dim), dtype=np.int64)
        d = np.zeros((dim, dim), dtype=np.int64)
        bit = 1 << v
        for m in range(dim):
            s = _vertex_sign(m, v)
            if m & bit:
                c[m ^ bit, m] = s
                d[m ^ bit, m] = -s
            else:
                c[m | bit, m] = s
                d[m | bit, m] = s
        ops[v] = (c, d)
    return ops


def doubled_hamiltonian(setup: ChainSetup) -> np.ndarray:
    """2H as an exact integer matrix (entries are sums of +-1 terms)."""
    n = setup.vertex_count
    dim = 1 << n
    h = np.zeros((dim, dim), dtype=np.int64)
    for tail, head, bit in setup.edges:
        term_sign = -1 if bit else 1
        tb, hb = 1 << tail, 1 << head
        for m in range(dim):
            s1 = _vertex_sign(m, tail) * (-1 if m & tb else 1)
            m1 = m ^ tb
            s2 = _vertex_sign(m1, head)
            h[m1 ^ hb, m] += term_sign * s1 * s2
    return h


def hamiltonian(setup: ChainSetup) -> np.ndarray:
    """H itself: rational matrix with entries in (1/2) Z."""
    h2 = doubled_hamiltonian(setup)
    out = np.empty(h2.shape, dtype=object)
    for i in range(h2.shape[0]):
        for j in range(h2.shape[1]):
            out[i, j] = Fraction(int(h2[i, j]), 2)
    return out


@dataclass(frozen=True)
class GroundStateReport:
    min_eigenvalue: Fraction
    ground_dimension: int
    ground_parity: str
    spectrum: tuple[tuple[Fraction, int], ...]


def _parity_blocks(
    h2: np.ndarray, n: int
) -> tuple[list[int], np.ndarray, np.ndarray]:
    """Reorder by subset parity and split into the two diagonal blocks."""
    dim = 1 << n
    order = sorted(range(dim), key=lambda m: (m.bit_count() & 1, m))
    perm = np.array(order)
    re = h2[np.ix_(perm, perm)]
    half = dim // 2
    if np.any(re[:half, half:]) or np.any(re[half:, :half]):
        raise ArithmeticError("Hamiltonian does not preserve the grading")
    return order, re[:half, :half], re[half:, half:]


def _certified_nullities(
    block: np.ndarray, candidates: Sequence[int]
) -> dict[int, int]:
    """Exact nullities of (block - lambda I) for each candidate lambda.

    A modular nullity is always >= the rational one, and the rational ones
    sum to the block size because 2H is symmetric with all eigenvalues in
    the candidate list; so a modular family with the right total is exact.
    """
    size = block.shape[0]
    if size == 0:
        return {lam: 0 for lam in candidates}
    ident = np.eye(size, dtype=np.int64)
    for p in MOD_PRIMES:
        nulls = {
            lam: modular_nullity(block - lam * ident, p) for lam in candidates
        }
        if sum(nulls.values()) == size:
            return nulls
    nulls = {
        lam: rational_nullity(block - lam * ident) for lam in candidates
    }
    if sum(nulls.values()) != size:
        raise ArithmeticError("eigenvalue scan does not exhaust the space")
    return nulls


def _sparse_rows(h2: np.ndarray) -> list[list[tuple[int, int]]]:
    return [
        [(int(j), int(h2[i, j])) for j in np.nonzero(h2[i])[0]]
        for i in range(h2.shape[0])
    ]


def _shifted_apply(
    rows: list[list[tuple[int, int]]], vec: list[int], lam: int
) -> list[int]:
    """(2H - lam I) @ vec with unbounded integers."""
    out = [-lam * x for x in vec]
    for i, row in enumerate(rows):
        acc = 0
        for j, v in row:
            if vec[j]:
                acc += v * vec[j]
        out[i] += acc
    return out


def _ground_data(
    setup: ChainSetup, cap: int
) -> tuple[GroundStateReport, list[list[int]]]:
    """The spectral report plus exact integer ground vectors.

    The ground space is the image of prod over other eigenvalues lambda' of
    (2H - lambda' I); applying that polynomial to standard basis vectors
    until ground_dimension independent images appear yields exact integer
    ground vectors, each re-verified as a kernel vector of (2H - lambda I).
    """
    n = setup.vertex_count
    if n > cap:
        raise CapExceeded(f"{n} vertices exceed the configured cap of {cap}")
    edge_terms = len(setup.edges)
    h2 = doubled_hamiltonian(setup)
    dim = 1 << n
    candidates = list(range(-edge_terms, edge_terms + 1, 2))
    _, even_block, odd_block = _parity_blocks(h2, n)
    even_nulls = _certified_nullities(even_block, candidates)
    odd_nulls = _certified_nullities(odd_block, candidates)
    mult = {lam: even_nulls[lam] + odd_nulls[lam] for lam in candidates}
    present = [lam for lam in candidates if mult[lam]]
    lam_min = present[0]
    ground_dim = mult[lam_min]

    shifts = [lam for lam in present if lam != lam_min]
    rows = _sparse_rows(h2)
    vectors: list[list[int]] = []
    pivot_rows: list[tuple[int, list[Fraction]]] = []
    for probe in range(dim):
        if len(vectors) == ground_dim:
            break
        vec = [0] * dim
        vec[probe] = 1
        for lam in shifts:
            vec = _shifted_apply(rows, vec, lam)
        if not any(vec):
            continue
        residual = _shifted_apply(rows, vec, lam_min)
        if any(residual):
            raise ArithmeticError("polynomial image escaped the ground space")
        reduced = [Fraction(x) for x in vec]
        for idx, row in pivot_rows:
            if reduced[idx]:
                f = reduced[idx]
                reduced = [a - f * b for a, b in zip(reduced, row)]
        lead = next((i for i, x in enumerate(reduced) if x), None)
        if lead is None:
            continue
        inv = reduced[lead]
        pivot_rows.append((lead, [x / inv for x in reduced]))
        vectors.append(vec)
    if len(vectors) != ground_dim:
        raise ArithmeticError(
            "found fewer independent ground vectors than the certified nullity"
        )

    even_found = odd_found = 0
    for vec in vectors:
        parities = {m.bit_count() & 1 for m, x in enumerate(vec) if x}
        if len(parities) != 1:
            raise ArithmeticError("ground vector is not grading-homogeneous")
        if parities.pop() == 0:
            even_found += 1
        else:
            odd_found += 1
    if (even_found, odd_found) != (even_nulls[lam_min], odd_nulls[lam_min]):
        raise ArithmeticError("ground parity split disagrees with the scan")

    if even_found and odd_found:
        parity = "mixed"
    elif even_found:
        parity = "even"
    else:
        parity = "odd"
    spectrum = tuple((Fraction(lam, 2), mult[lam]) for lam in present)
    report = GroundStateReport(
        min_eigenvalue=Fraction(lam_min, 2),
        ground_dimension=ground_dim,
        ground_parity=parity,
        spectrum=spectrum,
    )
    return report, vectors


def ground_states(
    setup: ChainSetup, cap: int = DEFAULT_VERTEX_CAP
) -> GroundStateReport:
    """Full spectrum of H with exact multiplicities, plus ground data."""
    report, _ = _ground_data(setup, cap)
    return report


class _SignedPerm:
    """A signed permutation of the subset basis, composed in O(dim)."""

    __slots__ = ("target", "sign")

    def __init__(self, target: list[int], sign: list[int]):
        self.target = target
        self.sign = sign

    @classmethod
    def identity(cls, dim: int) -> _SignedPerm:
        return cls(list(range(dim)), [1] * dim)

    @classmethod
    def vertex_op(cls, n: int, v: int, negative: bool) -> _SignedPerm:
        dim = 1 << n
        bit = 1 << v
        target = [m ^ bit for m in range(dim)]
        sign = []
        for m in range(dim):
            s = _vertex_sign(m, v)
            if negative and (m & bit):
                s = -s
            sign.append(s)
        return cls(target, sign)

    def after(self, first: _SignedPerm) -> _SignedPerm:
        """self composed after first (apply first, then self)."""
        target = [self.target[t] for t in first.target]
        sign = [
            first.sign[m] * self.sign[first.target[m]]
            for m in range(len(target))
        ]
        return _SignedPerm(target, sign)

    def to_matrix(self) -> np.ndarray:
        dim = len(self.target)
        out = np.zeros((dim, dim), dtype=np.int64)
        for m in range(dim):
            out[self.target[m], m] = self.sign[m]
        return out


def epsilon_operator(
    setup: ChainSetup, vertex_order: Sequence[int] | None = None
) -> np.ndarray:
    """The product of d_v c_v over all vertices of a circle.

    The factors d_v c_v commute (they touch disjoint generator pairs), so
    any vertex order gives the same matrix; the result acts on a degree-k
    subset by (-1)^{n-k}.
    """
    if not setup.is_circle:
        raise HasBoundary("the epsilon operator is defined on circles")
    n = setup.vertex_count
    dim = 1 << n
    if vertex_order is None:
        vertex_order = range(n)
    acc = _SignedPerm.identity(dim)
    for v in vertex_order:
        cv = _SignedPerm.vertex_op(n, v, negative=False)
        dv = _SignedPerm.vertex_op(n, v, negative=True)
        acc = dv.after(cv).after(acc)
    return acc.to_matrix()


@dataclass(frozen=True, eq=False)
class ReferenceModule:
    """Operators on the edge-indexed tensor module A.

    A is the tensor product over edges of a two-state factor; its basis is
    indexed by edge subsets (bit i = edge i odd).  c at an edge's head and
    d at its tail act on that edge's factor by the standard odd 2x2
    matrices, extended with the sign (-1)^{#odd factors before the edge}.
    """

    vertex_count: int
    c: dict[int, np.ndarray]
    d: dict[int, np.ndarray]
    epsilon: np.ndarray
    doubled_hamiltonian: np.ndarray


def _factor_matrix(n_factors: int, f: int, negative: bool) -> np.ndarray:
    dim = 1 << n_factors
    out = np.zeros((dim, dim), dtype=np.int64)
    bit = 1 << f
    for m in range(dim):
        sign = -1 if (m & (bit - 1)).bit_count() & 1 else 1
        if negative and (m & bit):
            sign = -sign
        out[m ^ bit, m] = sign
    return out


def reference_module(setup: ChainSetup) -> ReferenceModule:
    """The module A for a circle, with all operators as integer matrices.

    On a circle every vertex heads exactly one edge and tails exactly one,
    so each c_v and d_v acts on a single factor.  2H is diagonal on A and
    epsilon acts on degree-k vectors by (-1)^{k-1}.
    """
    if not setup.is_circle:
        raise HasBoundary("the reference module is built over a circle")
    n = setup.vertex_count
    dim = 1 << n
    c: dict[int, np.ndarray] = {}
    d: dict[int, np.ndarray] = {}
    for idx, (tail, head, _bit) in enumerate(setup.edges):
        c[head] = _factor_matrix(n, idx, negative=False)
        d[tail] = _factor_matrix(n, idx, negative=True)
    h2 = np.zeros((dim, dim), dtype=np.int64)
    for _, (tail, head, bit) in enumerate(setup.edges):
        term = c[head] @ d[tail]
        h2 += -term if bit else term
    eps = np.eye(dim, dtype=np.int64)
    for v in range(n):
        eps = eps @ (d[v] @ c[v])
    return ReferenceModule(
        vertex_count=n, c=c, d=d, epsilon=eps, doubled_hamiltonian=h2
    )


@dataclass(frozen=True)
class IntervalReport:
    ground_dimension: int
    parity_split: tuple[int, int]
    boundary_commutes: bool
    plus_squares_to_identity: bool
    minus_squares_to_minus_identity: bool
    generators_anticommute: bool
    commutant_dimension: int
    irreducible: bool
    passed: bool


def _restrict(
    mat: np.ndarray, vectors: list[list[int]]
) -> list[list[Fraction]]:
    """The matrix of mat on span(vectors), columns in the given basis."""
    k = len(vectors)
    cols = []
    for vec in vectors:
        image = [
            int(sum(int(mat[i, j]) * vec[j] for j in range(len(vec))))
            for i in range(mat.shape[0])
        ]
        coeffs = solve_in_span(vectors, image)
        if coeffs is None:
            raise ArithmeticError("operator does not preserve the ground space")
        cols.append(coeffs)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def _small_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(a)
    return [
        [sum((a[i][l] * b[l][j] for l in range(k)), Fraction(0)) for j in range(k)]
        for i in range(k)
    ]


def _small_eq_scalar(mat: list[list[Fraction]], scalar: int) -> bool:
    k = len(mat)
    return all(
        mat[i][j] == (scalar if i == j else 0) for i in range(k) for j in range(k)
    )


def _commutant_dimension(gens: list[list[list[Fraction]]], k: int) -> int:
    """dim of {M : MG = GM for all G}; the system is rational, so the
    dimension over any extension field equals the rational nullity."""
    rows = []
    for g in gens:
        for i in range(k):
            for j in range(k):
                row = [Fraction(0)] * (k * k)
                for a in range(k):
                    row[i * k + a] += g[a][j]
                    row[a * k + j] -= g[i][a]
                rows.append(row)
    _, pivots = fraction_rref(rows)
    return k * k - len(pivots)


def interval_bimodule_check(
    setup: ChainSetup, cap: int = DEFAULT_VERTEX_CAP
) -> IntervalReport:
    """Boundary Majoranas on an interval: commutation, restriction, and
    irreducibility of the induced module on the 2-dimensional ground space.

    The boundary generators are c at the vertex that heads no edge and d at
    the vertex that tails none; they commute with H exactly, so they act on
    the ground space, and that action should square to +1 and -1, anticommute,
    and generate a module with scalar commutant.
    """
    if setup.is_circle:
        raise ValueError("the bimodule check applies to intervals")
    n = setup.vertex_count
    report, vectors = _ground_data(setup, cap)
    heads = {head for _, head, _ in setup.edges}
    tails = {tail for tail, _, _ in setup.edges}
    (c_vertex,) = set(range(n)) - heads
    (d_vertex,) = set(range(n)) - tails
    ops = majorana_operators(setup)
    c_mat = ops[c_vertex][0]
    d_mat = ops[d_vertex][1]
    h2 = doubled_hamiltonian(setup)
    commutes = bool(
        np.array_equal(c_mat @ h2, h2 @ c_mat)
        and np.array_equal(d_mat @ h2, h2 @ d_mat)
    )

    c_r = _restrict(c_mat, vectors)
    d_r = _restrict(d_mat, vectors)
    k = len(vectors)
    plus_sq = _small_eq_scalar(_small_mul(c_r, c_r), 1)
    minus_sq = _small_eq_scalar(_small_mul(d_r, d_r), -1)
    cd = _small_mul(c_r, d_r)
    dc = _small_mul(d_r, c_r)
    anti = _small_eq_scalar(
        [[cd[i][j] + dc[i][j] for j in range(k)] for i in range(k)], 0
    )
    commutant_dim = _commutant_dimension([c_r, d_r], k)
    irreducible = k == 2 and commutant_dim == 1

    even_found = sum(
        1
        for vec in vectors
        if all(m.bit_count() % 2 == 0 for m, x in enumerate(vec) if x)
    )
    passed = bool(
        report.ground_dimension == 2
        and commutes
        and plus_sq
        and minus_sq
        and anti
        and irreducible
    )
    return IntervalReport(
        ground_dimension=report.ground_dimension,
        parity_split=(even_found, len(vectors) - even_found),
        boundary_commutes=commutes,
        plus_squares_to_identity=plus_sq,
        minus_squares_to_minus_identity=minus_sq,
        generators_anticommute=anti,
        commutant_dimension=commutant_dim,
        irreducible=irreducible,
        passed=passed,
    )
