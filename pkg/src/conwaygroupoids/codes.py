"""Linear codes spanned by design incidence matrices over GF(2) and GF(3).

Everything here is exact: weight enumerators come from full codeword
enumeration, covering radii from an increasing-weight syndrome sweep, and
the distance-partition analysis works per syndrome (distance to the code
and the neighbor profile are constant on cosets of a linear code).

Enumerations are guarded by explicit budgets; exceeding one raises
BudgetExceeded so callers can degrade to a reported skip instead of a
silent wrong answer.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .designs import Hypergraph

CODEWORD_BUDGET = 1 << 24
COSET_BUDGET = 1 << 26
_ENV_BUDGET = "GROUPOID_BUDGET"


class BudgetExceeded(RuntimeError):
    def __init__(self, kind: str, needed: int, limit: int):
        super().__init__(
            f"{kind} enumeration needs {needed} items, budget is {limit}"
        )
        self.kind = kind
        self.needed = needed
        self.limit = limit


def _budget(default: int) -> int:
    value = os.environ.get(_ENV_BUDGET)
    return int(value) if value else default


def _rref(rows: list[list[int]], q: int, n: int) -> tuple[list[tuple[int, ...]], list[int]]:
    """Reduced row echelon form over GF(q); returns (rows, pivot columns)."""
    inv = [0] * q
    for x in range(1, q):
        inv[x] = pow(x, q - 2, q)
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        scale = inv[mat[rank][col]]
        if scale != 1:
            mat[rank] = [(x * scale) % q for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [(a - factor * b) % q for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return [tuple(r) for r in mat[:rank]], pivots


@dataclass(frozen=True)
class LinearCode:
    """A [n, k] code over GF(q), held as a canonical reduced generator matrix."""

    q: int
    n: int
    generator: tuple[tuple[int, ...], ...]
    parity: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.generator)

    @classmethod
    def from_rows(cls, rows, q: int, n: int) -> "LinearCode":
        if q not in (2, 3):
            raise ValueError(f"unsupported field size {q}")
        gen, pivots = _rref([list(r) for r in rows], q, n)
        parity = _null_space(gen, pivots, q, n)
        return cls(q=q, n=n, generator=tuple(gen), parity=tuple(parity))

    def dual(self) -> "LinearCode":
        return LinearCode.from_rows([list(r) for r in self.parity], self.q, self.n)

    def syndrome(self, vector) -> tuple[int, ...]:
        return tuple(
            sum(h[i] * vector[i] for i in range(self.n)) % self.q for h in self.parity
        )

    def contains(self, vector) -> bool:
        return all(x == 0 for x in self.syndrome(vector))

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "length": self.n,
            "dimension": self.k,
            "generator": [list(r) for r in self.generator],
        }


def _null_space(gen: list[tuple[int, ...]], pivots: list[int], q: int, n: int):
    pivot_of_col = {c: r for r, c in enumerate(pivots)}
    free_cols = [c for c in range(n) if c not in pivot_of_col]
    basis = []
    for f in free_cols:
        vec = [0] * n
        vec[f] = 1
        for c, r in pivot_of_col.items():
            vec[c] = (-gen[r][f]) % q
        basis.append(vec)
    reduced, _ = _rref(basis, q, n)
    return reduced


def code_from_design(h: Hypergraph, q: int) -> LinearCode:
    """Row span of the block-point incidence matrix read over GF(q)."""
    if q not in (2, 3):
        raise ValueError(f"unsupported field size {q}")
    rows = []
    for block in h.blocks:
        row = [0] * h.n
        for x in block:
            row[x] = 1
        rows.append(row)
    return LinearCode.from_rows(rows, q, h.n)


def iter_codewords(code: LinearCode, budget: int | None = None):
    """Yield every codeword as a coefficient-free tuple; exact and exhaustive."""
    limit = budget if budget is not None else _budget(CODEWORD_BUDGET)
    total = code.q ** code.k
    if total > limit:
        raise BudgetExceeded("codeword", total, limit)
    words = [tuple([0] * code.n)]
    for row in code.generator:
        grown = []
        for w in words:
            grown.append(w)
            acc = w
            for _ in range(1, code.q):
                acc = tuple((a + b) % code.q for a, b in zip(acc, row))
                grown.append(acc)
        words = grown
    yield from words


@dataclass(frozen=True)
class WeightProfile:
    weight_counts: tuple[tuple[int, int], ...]  # sorted (weight, count) pairs
    degree: int  # number of distinct nonzero weights
    min_distance: int | None

    def counts(self) -> dict[int, int]:
        return dict(self.weight_counts)

    def weights(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.weight_counts if w)


def weight_profile(code: LinearCode, budget: int | None = None) -> WeightProfile:
    counts: dict[int, int] = {}
    if code.q == 2:
        # bitmask fast path
        limit = budget if budget is not None else _budget(CODEWORD_BUDGET)
        total = 1 << code.k
        if total > limit:
            raise BudgetExceeded("codeword", total, limit)
        rows = [sum(1 << i for i, x in enumerate(r) if x) for r in code.generator]
        word = 0
        counts[0] = 1
        for idx in range(1, total):
            bit = (idx & -idx).bit_length() - 1
            word ^= rows[bit]
            w = word.bit_count()
            counts[w] = counts.get(w, 0) + 1
    else:
        for word in iter_codewords(code, budget):
            w = sum(1 for x in word if x)
            counts[w] = counts.get(w, 0) + 1
    nonzero = sorted(w for w in counts if w > 0)
    return WeightProfile(
        weight_counts=tuple(sorted(counts.items())),
        degree=len(nonzero),
        min_distance=nonzero[0] if nonzero else None,
    )


@dataclass(frozen=True)
class CosetTable:
    """Coset leader weights and neighbor profiles, keyed by syndrome."""

    q: int
    n: int
    covering_radius: int
    leader_weight: dict[tuple[int, ...], int]
    neighbor_profile: dict[tuple[int, ...], tuple[int, ...]]


def coset_table(code: LinearCode, budget: int | None = None) -> CosetTable:
    """Sweep vectors by increasing weight until every syndrome has a leader,
    then profile each coset's Hamming neighbors by distance class."""
    q, n = code.q, code.n
    limit = budget if budget is not None else _budget(COSET_BUDGET)
    total = q ** (n - code.k)
    if total > limit:
        raise BudgetExceeded("coset", total, limit)
    columns = [code.syndrome(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]

    def add(s: tuple[int, ...], t: tuple[int, ...], scale: int) -> tuple[int, ...]:
        return tuple((a + scale * b) % q for a, b in zip(s, t))

    zero = tuple([0] * len(code.parity))
    leader: dict[tuple[int, ...], int] = {zero: 0}
    weight = 0
    while len(leader) < total:
        weight += 1
        if weight > n:
            raise AssertionError("syndrome sweep exhausted the space prematurely")
        for support in combinations(range(n), weight):
            for values in product(range(1, q), repeat=weight):
                s = zero
                for i, v in zip(support, values):
                    s = add(s, columns[i], v)
                if s not in leader:
                    leader[s] = weight
                    if len(leader) == total:
                        break
            else:
                continue
            break
    rho = max(leader.values())
    profiles: dict[tuple[int, ...], tuple[int, ...]] = {}
    for s, w in leader.items():
        tally = [0] * (rho + 1)
        for col in columns:
            for v in range(1, q):
                tally[leader[add(s, col, v)]] += 1
        profiles[s] = tuple(tally)
    return CosetTable(
        q=q, n=n, covering_radius=rho, leader_weight=leader, neighbor_profile=profiles
    )


def dual_degree(code: LinearCode, budget: int | None = None) -> int:
    """Number of distinct nonzero weights in the dual code."""
    return weight_profile(code.dual(), budget).degree


def is_uniformly_packed(
    code: LinearCode,
    table: CosetTable | None = None,
    budget: int | None = None,
) -> bool:
    """Wide-sense uniform packing: covering radius equals the dual degree."""
    table = table if table is not None else coset_table(code, budget)
    return table.covering_radius == dual_degree(code, budget)


def is_completely_regular(
    code: LinearCode,
    table: CosetTable | None = None,
    budget: int | None = None,
) -> tuple[bool, tuple | None]:
    """Equitability of the distance partition, checked per distance class.

    Returns (verdict, witness); the witness is a pair of syndromes in one
    class with different neighbor profiles.
    """
    table = table if table is not None else coset_table(code, budget)
    chosen: dict[int, tuple] = {}
    for s, w in table.leader_weight.items():
        profile = table.neighbor_profile[s]
        if w not in chosen:
            chosen[w] = (s, profile)
        elif chosen[w][1] != profile:
            return False, (chosen[w][0], s)
    return True, None


def qary_design_check(
    code: LinearCode, w: int, t: int, budget: int | None = None
) -> tuple[int | None, tuple | None]:
    """Do the weight-w codewords cover every weight-t vertex equally often?

    Covering means agreeing on the vertex's support. Returns (lambda, None)
    on success, else (None, witness) with two vertices covered unequally.
    """
    counts: dict[tuple, int] = {}
    for word in iter_codewords(code, budget):
        if sum(1 for x in word if x) != w:
            continue
        support = tuple(i for i, x in enumerate(word) if x)
        for sub in combinations(support, t):
            key = (sub, tuple(word[i] for i in sub))
            counts[key] = counts.get(key, 0) + 1
    expected_vertices = comb(code.n, t) * (code.q - 1) ** t
    values = set(counts.values())
    if len(counts) == expected_vertices and len(values) == 1:
        return values.pop(), None
    # a concrete unequal pair: something covered most vs. something missing
    covered = max(counts, key=counts.get) if counts else None
    missing = None
    for support in combinations(range(code.n), t):
        for vals in product(range(1, code.q), repeat=t):
            if (support, vals) not in counts:
                missing = (support, vals)
                break
        if missing:
            break
    return None, (covered, missing)


def restrict(code: LinearCode, keep_columns) -> LinearCode:
    cols = list(keep_columns)
    rows = [[r[c] for c in cols] for r in code.generator]
    return LinearCode.from_rows(rows, code.q, len(cols))


def golay_chain() -> dict:
    """From the plane's ternary code down to the perfect [11,6,5] code.

    Verifies the row-sum identity (every codeword's total equals its sum
    over any line), cuts to the subcode whose value at a chosen point is
    minus the total, restricts away that point to land on [12,6,6], then
    punctures once more to [11,6,5] and checks the sphere-packing equality.
    """
    from .designs import pg23

    plane = pg23()
    code = code_from_design(plane, 3)
    line_sum_identity = True
    for word in iter_codewords(code):
        total = sum(word) % 3
        for block in plane.blocks:
            if sum(word[i] for i in block) % 3 != total:
                line_sum_identity = False
                break
        if not line_sum_identity:
            break

    p = 0

    def holder_condition(word) -> int:
        # zero exactly when the value at p is minus the coordinate total
        return (word[p] + sum(word)) % 3

    basis = [list(r) for r in code.generator]
    values = [holder_condition(r) for r in basis]
    pivot = next((i for i, v in enumerate(values) if v), None)
    if pivot is None:
        sub_basis = basis
    else:
        pivot_inv = values[pivot]  # x^-1 = x mod 3
        sub_basis = []
        for i, row in enumerate(basis):
            if i == pivot:
                continue
            if values[i]:
                mult = (values[i] * pivot_inv) % 3
                row = [(a - mult * b) % 3 for a, b in zip(row, basis[pivot])]
            sub_basis.append(row)
    subcode = LinearCode.from_rows(sub_basis, 3, 13)
    if any(holder_condition(wd) for wd in iter_codewords(subcode)):
        raise AssertionError("subcode construction violated its defining condition")

    restricted = restrict(subcode, [c for c in range(13) if c != p])
    wp12 = weight_profile(restricted)
    punctured = restrict(restricted, range(1, 12))
    wp11 = weight_profile(punctured)
    sphere = sum(comb(11, i) * 2 ** i for i in range(3))
    packing_exact = 3 ** 11 == 3 ** punctured.k * sphere
    return {
        "line_sum_identity": line_sum_identity,
        "codewords_checked": 3 ** code.k,
        "plane_code": [code.n, code.k],
        "holder_point": p,
        "restricted": [12, restricted.k, wp12.min_distance],
        "punctured": [11, punctured.k, wp11.min_distance],
        "sphere_packing_exact": packing_exact,
        "is_perfect": packing_exact
        and wp11.min_distance == 5
        and punctured.k == 6,
    }


def analyze(h: Hypergraph, q: int, budget: int | None = None) -> dict:
    """The full per-code report; budget overruns degrade to skip notes."""
    code = code_from_design(h, q)
    report: dict = {
        "label": h.label,
        "field": q,
        "length": code.n,
        "dimension": code.k,
    }
    skips = []
    try:
        wp = weight_profile(code, budget)
        report["min_distance"] = wp.min_distance
        report["weights"] = list(wp.weights())
        report["degree"] = wp.degree
        report["weight_counts"] = {str(w): c for w, c in wp.weight_counts}
    except BudgetExceeded as exc:
        skips.append(str(exc))
    try:
        dual_wp = weight_profile(code.dual(), budget)
        report["dual_weights"] = list(dual_wp.weights())
        report["dual_degree"] = dual_wp.degree
        report["dual_min_distance"] = dual_wp.min_distance
    except BudgetExceeded as exc:
        skips.append(str(exc))
    try:
        table = coset_table(code, budget)
        report["covering_radius"] = table.covering_radius
        if "dual_degree" in report:
            report["uniformly_packed"] = (
                table.covering_radius == report["dual_degree"]
            )
        regular, witness = is_completely_regular(code, table)
        report["completely_regular"] = regular
        if witness:
            report["coset_witness"] = [list(witness[0]), list(witness[1])]
    except BudgetExceeded as exc:
        skips.append(str(exc))
    if skips:
        report["skipped"] = skips
    return report
