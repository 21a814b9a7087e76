"""Quadruple hypergraphs, their structural profile, and the named families.

A hypergraph here is a point count together with a canonically sorted
multiset of 4-element blocks ("lines"). The profile records the predicates
the move machinery cares about: pliability (lines sharing 3 points are
equal), connectivity of the collinearity graph, whether the blocks form a
2-design, supersimplicity, whether the collinear triples form a regular
two-graph, and whether symmetric differences of 2-intersecting blocks stay
in the block set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


@dataclass(frozen=True)
class Hypergraph:
    """Points 0..n-1 plus a canonical multiset of 4-point blocks."""

    n: int
    blocks: tuple[tuple[int, int, int, int], ...]
    label: str = "custom"

    def __post_init__(self):
        canon = []
        for block in self.blocks:
            b = tuple(sorted(block))
            if len(b) != 4 or len(set(b)) != 4:
                raise ValueError(f"block must have 4 distinct points: {block!r}")
            if b[0] < 0 or b[-1] >= self.n:
                raise ValueError(f"block {block!r} out of range for n={self.n}")
            canon.append(b)
        object.__setattr__(self, "blocks", tuple(sorted(canon)))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "blocks": [list(b) for b in self.blocks],
            "label": self.label,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Hypergraph":
        return cls(
            n=data["n"],
            blocks=tuple(tuple(b) for b in data["blocks"]),
            label=data.get("label", "custom"),
        )


@dataclass(frozen=True)
class DesignProfile:
    is_pliable: bool
    is_connected: bool
    lam: int | None  # present iff the blocks form a 2-(n,4,lam) design
    is_supersimple: bool
    is_regular_two_graph: bool
    has_triangle_property: bool


@dataclass(frozen=True)
class TripleSystem:
    """A 2-(n,3,mu) triple system: every point pair lies in exactly mu triples."""

    n: int
    triples: tuple[tuple[int, int, int], ...]
    mu: int

    def __post_init__(self):
        canon = tuple(sorted(tuple(sorted(t)) for t in self.triples))
        if len(set(canon)) != len(canon):
            raise ValueError("triple system has repeated triples")
        object.__setattr__(self, "triples", canon)
        counts: dict[tuple[int, int], int] = {}
        for t in canon:
            for pair in combinations(t, 2):
                counts[pair] = counts.get(pair, 0) + 1
        for a, b in combinations(range(self.n), 2):
            if counts.get((a, b), 0) != self.mu:
                raise ValueError(
                    f"pair ({a},{b}) lies in {counts.get((a, b), 0)} triples, "
                    f"expected mu={self.mu}"
                )

    def triple_set(self) -> frozenset:
        return frozenset(self.triples)


@lru_cache(maxsize=None)
def blocks_through_pair(h: Hypergraph) -> dict[tuple[int, int], tuple]:
    """Map each point pair to the (indices of) blocks containing it."""
    out: dict[tuple[int, int], list[int]] = {}
    for idx, block in enumerate(h.blocks):
        for pair in combinations(block, 2):
            out.setdefault(pair, []).append(idx)
    return {pair: tuple(ids) for pair, ids in out.items()}


@lru_cache(maxsize=None)
def collinearity_neighbors(h: Hypergraph) -> tuple[tuple[int, ...], ...]:
    """For each point, the sorted points sharing a block with it."""
    adj: list[set[int]] = [set() for _ in range(h.n)]
    for block in h.blocks:
        for a, b in combinations(block, 2):
            adj[a].add(b)
            adj[b].add(a)
    return tuple(tuple(sorted(s)) for s in adj)


def is_connected(h: Hypergraph) -> bool:
    if h.n == 0:
        return True
    adj = collinearity_neighbors(h)
    seen = {0}
    queue = [0]
    while queue:
        x = queue.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == h.n


def is_pliable(h: Hypergraph) -> bool:
    """Any two lines sharing at least 3 points must have equal point sets."""
    by_triple: dict[tuple[int, int, int], tuple[int, ...]] = {}
    for block in set(h.blocks):
        for triple in combinations(block, 3):
            other = by_triple.setdefault(triple, block)
            if other != block:
                return False
    return True


def design_lambda(h: Hypergraph) -> int | None:
    """The common pair multiplicity, or None if the blocks are not a 2-design."""
    if not h.blocks or h.n < 2:
        return None
    pairs = blocks_through_pair(h)
    counts = {len(ids) for ids in pairs.values()}
    if len(pairs) != h.n * (h.n - 1) // 2 or len(counts) != 1:
        return None
    return counts.pop()


def collinear_triple_set(h: Hypergraph) -> frozenset:
    triples = set()
    for block in h.blocks:
        triples.update(combinations(block, 3))
    return frozenset(triples)


def is_regular_two_graph(h: Hypergraph) -> bool:
    """Every 4-subset of points contains 0, 2 or 4 collinear triples."""
    triples = collinear_triple_set(h)
    # bitmask per pair: which third points complete it to a collinear triple
    pairmask: dict[tuple[int, int], int] = {}
    for a, b, c in triples:
        pairmask[a, b] = pairmask.get((a, b), 0) | (1 << c)
        pairmask[a, c] = pairmask.get((a, c), 0) | (1 << b)
        pairmask[b, c] = pairmask.get((b, c), 0) | (1 << a)
    empty = 0
    for a, b, c, d in combinations(range(h.n), 4):
        mab = pairmask.get((a, b), empty)
        mac = pairmask.get((a, c), empty)
        mbc = pairmask.get((b, c), empty)
        count = (
            ((mab >> c) & 1)
            + ((mab >> d) & 1)
            + ((mac >> d) & 1)
            + ((mbc >> d) & 1)
        )
        if count & 1:
            return False
    return True


def has_triangle_property(h: Hypergraph) -> bool:
    """Blocks meeting in exactly 2 points have their symmetric difference in the block set."""
    blockset = set(h.blocks)
    blocks = h.blocks
    for ids in blocks_through_pair(h).values():
        for i, j in combinations(ids, 2):
            b1, b2 = set(blocks[i]), set(blocks[j])
            if len(b1 & b2) == 2:
                diff = tuple(sorted(b1 ^ b2))
                if diff not in blockset:
                    return False
    return True


def profile(h: Hypergraph) -> DesignProfile:
    """Compute every structural predicate exactly."""
    lam = design_lambda(h)
    pliable = is_pliable(h)
    simple = len(set(h.blocks)) == len(h.blocks)
    return DesignProfile(
        is_pliable=pliable,
        is_connected=is_connected(h),
        lam=lam,
        is_supersimple=simple and pliable and lam is not None,
        is_regular_two_graph=is_regular_two_graph(h),
        has_triangle_property=has_triangle_property(h),
    )


def collinear_triples(h: Hypergraph) -> TripleSystem:
    """The triples covered by blocks; a supersimple design gives mu = 2*lambda."""
    prof = profile(h)
    if not prof.is_supersimple:
        raise ValueError("collinear triples form a design only for supersimple input")
    triples = sorted(collinear_triple_set(h))
    return TripleSystem(h.n, tuple(triples), mu=2 * prof.lam)


# -- named families ------------------------------------------------------


@lru_cache(maxsize=None)
def pg23() -> Hypergraph:
    """The projective plane of order 3: 13 points, 13 lines of 4 points.

    Points are the projective vectors over GF(3) normalized so that the
    first nonzero coordinate is 1, listed lexicographically; lines are
    indexed the same way and contain the points orthogonal to them.
    """
    points = []
    for x in range(3):
        for y in range(3):
            for z in range(3):
                v = (x, y, z)
                if v == (0, 0, 0):
                    continue
                first = next(c for c in v if c)
                if first == 1:
                    points.append(v)
    points.sort()
    assert len(points) == 13
    index = {v: i for i, v in enumerate(points)}
    blocks = []
    for w in points:
        line = tuple(
            sorted(
                index[v]
                for v in points
                if (v[0] * w[0] + v[1] * w[1] + v[2] * w[2]) % 3 == 0
            )
        )
        blocks.append(line)
    return Hypergraph(13, tuple(blocks), label="pg23")


class QuadraticFormSpace:
    """GF(2)^(2m) with the split quadratic form and its polarization.

    Vectors are integers 0..2^(2m)-1; bit i holds coordinate i+1. The form
    is theta(u) = sum of u_i * u_(m+i), its polarization is
    phi(u, v) = theta(u+v) + theta(u) + theta(v), and theta_v shifts theta
    by phi(., v).
    """

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("m must be at least 1")
        self.m = m
        self.dim = 2 * m
        self.size = 1 << (2 * m)
        self._lo = (1 << m) - 1

    def theta(self, u: int) -> int:
        return ((u & self._lo) & (u >> self.m)).bit_count() & 1

    def phi(self, u: int, v: int) -> int:
        a = ((u & self._lo) & (v >> self.m)).bit_count()
        b = ((v & self._lo) & (u >> self.m)).bit_count()
        return (a + b) & 1

    def theta_shift(self, u: int, v: int) -> int:
        """theta_v(u) = theta(u) + phi(u, v)."""
        return self.theta(u) ^ self.phi(u, v)

    def polarization_identity_holds(self) -> bool:
        """Exhaustive check of theta(u+v) + theta(u) + theta(v) = phi(u, v)."""
        for u in range(self.size):
            tu = self.theta(u)
            for v in range(self.size):
                if self.theta(u ^ v) ^ tu ^ self.theta(v) != self.phi(u, v):
                    return False
        return True

    def vectors_with_theta(self, eps: int) -> list[int]:
        return [v for v in range(self.size) if self.theta(v) == eps]


def _four_subsets_with_zero_sum(vectors: list[int]) -> list[tuple[int, ...]]:
    """All 4-subsets of the given GF(2)-vectors XORing to zero.

    Walks pairs (smaller two elements), inferring the last element from the
    XOR; costs O(|vectors|^3) overall which is fine up to 64 points.
    """
    vecset = set(vectors)
    rank = {v: i for i, v in enumerate(sorted(vectors))}
    out = []
    svecs = sorted(vectors)
    for i, a in enumerate(svecs):
        for j in range(i + 1, len(svecs)):
            b = svecs[j]
            s = a ^ b
            for k in range(j + 1, len(svecs)):
                c = svecs[k]
                d = s ^ c
                if d in vecset and rank[d] > k:
                    out.append((a, b, c, d))
    return out


@lru_cache(maxsize=None)
def boolean_system(m: int) -> Hypergraph:
    """All 4-subsets of GF(2)^m with zero XOR (the affine planes)."""
    if m < 2:
        raise ValueError("boolean system needs m >= 2")
    n = 1 << m
    blocks = _four_subsets_with_zero_sum(list(range(n)))
    return Hypergraph(n, tuple(blocks), label=f"boolean:{m}")


@lru_cache(maxsize=None)
def symplectic_system(m: int) -> Hypergraph:
    """4-subsets of GF(2)^(2m) with zero XOR and zero total theta."""
    if m < 2:
        raise ValueError("symplectic system needs m >= 2")
    space = QuadraticFormSpace(m)
    theta = [space.theta(v) for v in range(space.size)]
    blocks = [
        b
        for b in _four_subsets_with_zero_sum(list(range(space.size)))
        if (theta[b[0]] ^ theta[b[1]] ^ theta[b[2]] ^ theta[b[3]]) == 0
    ]
    return Hypergraph(space.size, tuple(blocks), label=f"symplectic:{m}")


@lru_cache(maxsize=None)
def quadratic_system(m: int, eps: int) -> Hypergraph:
    """Points are the shifted forms theta_v with theta(v) = eps; blocks are
    the zero-XOR 4-subsets of the underlying vectors.

    Defined for m >= 3 and eps in {0, 1}; the degenerate pair (m=2, eps=0)
    is also allowed and realizes the 2-(10,4,2) design.
    """
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    if m < 3 and not (m == 2 and eps == 0):
        raise ValueError("quadratic system needs m >= 3, or m = 2 with eps = 0")
    space = QuadraticFormSpace(m)
    vectors = space.vectors_with_theta(eps)  # ascending; point i is vectors[i]
    index = {v: i for i, v in enumerate(vectors)}
    blocks = [
        tuple(index[v] for v in quad)
        for quad in _four_subsets_with_zero_sum(vectors)
    ]
    return Hypergraph(len(vectors), tuple(blocks), label=f"quadratic:{m}:{eps}")


@lru_cache(maxsize=None)
def pairs_hypergraph(n: int) -> Hypergraph:
    """2n points x_i, y_i with blocks {x_i, y_i, x_j, y_j}; pliable and
    connected but not a 2-design.

    Point x_i is 2i and y_i is 2i+1.
    """
    if n < 3:
        raise ValueError("pairs hypergraph needs n >= 3")
    blocks = [
        (2 * i, 2 * i + 1, 2 * j, 2 * j + 1)
        for i in range(n)
        for j in range(i + 1, n)
    ]
    return Hypergraph(2 * n, tuple(blocks), label=f"pairs:{n}")


def boolean_inflation(n: int, big_blocks, alpha: int) -> Hypergraph:
    """Replace each block of a 2-(n, 2^(alpha+1), 1) design with the boolean
    quadruple system on its points.

    Each block is identified with GF(2)^(alpha+1) through its sorted point
    order; the result is a 2-(n, 4, 2^alpha - 1) design.
    """
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    size = 1 << (alpha + 1)
    canon = [tuple(sorted(b)) for b in big_blocks]
    counts: dict[tuple[int, int], int] = {}
    for block in canon:
        if len(block) != size or len(set(block)) != size:
            raise ValueError(f"block {block!r} must have {size} distinct points")
        if block[0] < 0 or block[-1] >= n:
            raise ValueError(f"block {block!r} out of range")
        for pair in combinations(block, 2):
            counts[pair] = counts.get(pair, 0) + 1
    for a, b in combinations(range(n), 2):
        if counts.get((a, b), 0) != 1:
            raise ValueError(
                f"input is not a 2-(n, {size}, 1) design: pair ({a},{b}) "
                f"covered {counts.get((a, b), 0)} times"
            )
    small = boolean_system(alpha + 1)
    out = []
    for block in canon:
        for quad in small.blocks:
            out.append(tuple(sorted(block[i] for i in quad)))
    return Hypergraph(n, tuple(out), label=f"inflated:{alpha}")
