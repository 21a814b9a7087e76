"""Machinery specific to the projective-plane puzzle on 13 points.

Three pieces live here: the universal donor/recipient analysis of ordered
6-tuples under the full move set, the signed variant whose hole stabilizer
doubles the plain one, and the dualized variant walking point-line flags.

Ordered 6-tuples of distinct points are encoded as base-13 keys below
13^6; donor image sets are bitsets over that key space, small enough
(about 590 KiB each) to intersect exactly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .designs import pg23
from .groupoid import ConwayGroupoid, build_groupoid, groupoid_is_group
from .permgroup import PermutationGroup, reduced_generators
from .perms import Permutation

N_POINTS = 13
KEY_SPACE = 13 ** 6
TUPLE_TOTAL = 13 * 12 * 11 * 10 * 9 * 8  # ordered 6-tuples of distinct points
_POW13 = tuple(13 ** i for i in range(6))


def six_tuple_key(entries) -> int:
    t = tuple(entries)
    if len(t) != 6 or len(set(t)) != 6 or not all(0 <= x < 13 for x in t):
        raise ValueError(f"need 6 distinct points of 0..12, got {t!r}")
    return sum(x * p for x, p in zip(t, _POW13))


def key_to_tuple(key: int) -> tuple[int, ...]:
    out = []
    for _ in range(6):
        out.append(key % 13)
        key //= 13
    return tuple(out)


@lru_cache(maxsize=8)
def plane_groupoid(base: int = 0) -> ConwayGroupoid:
    return build_groupoid(pg23(), base)


def tuple_orbit(gens: list[Permutation], start: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Breadth-first orbit of an ordered tuple under coordinatewise action."""
    raw = [g.images for g in gens]
    seen = {start}
    queue = [start]
    qi = 0
    while qi < len(queue):
        t = queue[qi]
        qi += 1
        for g in raw:
            nt = (g[t[0]], g[t[1]], g[t[2]], g[t[3]], g[t[4]], g[t[5]])
            if nt not in seen:
                seen.add(nt)
                queue.append(nt)
    return queue


def _set_keys(bits: bytearray, reps: list[tuple], orbit: list[tuple]) -> None:
    p0, p1, p2, p3, p4, p5 = _POW13
    for rep in reps:
        for t in orbit:
            k = (
                rep[t[0]] * p0
                + rep[t[1]] * p1
                + rep[t[2]] * p2
                + rep[t[3]] * p3
                + rep[t[4]] * p4
                + rep[t[5]] * p5
            )
            bits[k >> 3] |= 1 << (k & 7)


def donor_image_bitset(g: ConwayGroupoid, p) -> bytearray:
    """Bitset of every tuple reachable from p under the full move set.

    Every move factors through the hole stabilizer followed by a coset
    representative, so the image is the union of the stabilizer orbit
    translated by each representative.
    """
    start = tuple(p)
    six_tuple_key(start)  # validates
    gens = reduced_generators(g.hole_stabilizer)
    orbit = tuple_orbit(gens, start)
    bits = bytearray((KEY_SPACE + 7) // 8)
    _set_keys(bits, [r.images for r in g.coset_reps], orbit)
    return bits


def bitset_count(bits: bytearray) -> int:
    return int.from_bytes(bits, "little").bit_count()


def is_universal_donor(p, g: ConwayGroupoid | None = None) -> bool:
    g = g if g is not None else plane_groupoid()
    return bitset_count(donor_image_bitset(g, p)) == TUPLE_TOTAL


@lru_cache(maxsize=2)
def _line_masks() -> tuple[int, ...]:
    return tuple(sum(1 << x for x in block) for block in pg23().blocks)


def tuple_contains_line(entries) -> bool:
    mask = 0
    for x in entries:
        mask |= 1 << x
    return any(mask & lm == lm for lm in _line_masks())


class DonorAnalysis:
    """Exhaustive donor/recipient classification of all 1,235,520 tuples.

    Donor image sets are constant on hole-stabilizer orbits (composing with
    a stabilizer element permutes the move set), so the sweep walks one
    orbit at a time; recipients are the intersection of all orbit image
    sets.
    """

    def __init__(self, groupoid: ConwayGroupoid | None = None):
        self.groupoid = groupoid if groupoid is not None else plane_groupoid()
        self.base = self.groupoid.base_point
        self._orbits: list[dict] | None = None
        self._recipient_bits: int | None = None

    def _sweep(self) -> None:
        if self._orbits is not None:
            return
        g = self.groupoid
        gens = reduced_generators(g.hole_stabilizer)
        raw_gens = [x.images for x in gens]
        reps = [r.images for r in g.coset_reps]
        visited = bytearray((KEY_SPACE + 7) // 8)
        orbits: list[dict] = []
        recipient: int | None = None
        p0, p1, p2, p3, p4, p5 = _POW13
        for t in permutations(range(N_POINTS), 6):
            k = t[0] * p0 + t[1] * p1 + t[2] * p2 + t[3] * p3 + t[4] * p4 + t[5] * p5
            if visited[k >> 3] & (1 << (k & 7)):
                continue
            # breadth-first orbit of t under the hole stabilizer
            visited[k >> 3] |= 1 << (k & 7)
            queue = [t]
            qi = 0
            while qi < len(queue):
                cur = queue[qi]
                qi += 1
                for gimg in raw_gens:
                    a, b, c, d, e, f = cur
                    nt = (gimg[a], gimg[b], gimg[c], gimg[d], gimg[e], gimg[f])
                    nk = (
                        nt[0] * p0
                        + nt[1] * p1
                        + nt[2] * p2
                        + nt[3] * p3
                        + nt[4] * p4
                        + nt[5] * p5
                    )
                    if not visited[nk >> 3] & (1 << (nk & 7)):
                        visited[nk >> 3] |= 1 << (nk & 7)
                        queue.append(nt)
            bits = bytearray((KEY_SPACE + 7) // 8)
            _set_keys(bits, reps, queue)
            image_size = bitset_count(bits)
            orbits.append(
                {
                    "representative": list(t),
                    "orbit_size": len(queue),
                    "contains_hole": self.base in t,
                    "image_size": image_size,
                    "is_universal_donor": image_size == TUPLE_TOTAL,
                }
            )
            as_int = int.from_bytes(bits, "little")
            recipient = as_int if recipient is None else recipient & as_int
        self._orbits = orbits
        size = (KEY_SPACE + 7) // 8
        self._recipient_bits = (
            recipient.to_bytes(size, "little") if recipient is not None else bytes(size)
        )

    def orbits(self) -> list[dict]:
        self._sweep()
        return self._orbits

    def is_universal_recipient(self, q) -> bool:
        self._sweep()
        k = six_tuple_key(q)
        return bool(self._recipient_bits[k >> 3] & (1 << (k & 7)))

    def report(self) -> dict:
        """Full verification: donors are exactly the hole-containing tuples
        and recipients exactly the line-containing ones."""
        self._sweep()
        orbits = self._orbits
        donor_ok = all(
            o["is_universal_donor"] == o["contains_hole"] for o in orbits
        )
        recipient_bits = self._recipient_bits
        recipient_count = int.from_bytes(recipient_bits, "little").bit_count()
        line_count = 0
        mismatches = 0
        p0, p1, p2, p3, p4, p5 = _POW13
        masks = _line_masks()
        for combo in combinations(range(N_POINTS), 6):
            mask = 0
            for x in combo:
                mask |= 1 << x
            has_line = any(mask & lm == lm for lm in masks)
            if has_line:
                line_count += 720
            for t in permutations(combo):
                k = (
                    t[0] * p0
                    + t[1] * p1
                    + t[2] * p2
                    + t[3] * p3
                    + t[4] * p4
                    + t[5] * p5
                )
                if bool(recipient_bits[k >> 3] & (1 << (k & 7))) != has_line:
                    mismatches += 1
        return {
            "total_tuples": TUPLE_TOTAL,
            "orbit_count": len(orbits),
            "orbit_sizes": [o["orbit_size"] for o in orbits],
            "donor_count": sum(
                o["orbit_size"] for o in orbits if o["is_universal_donor"]
            ),
            "donor_iff_contains_hole": donor_ok,
            "recipient_count": recipient_count,
            "line_containing_count": line_count,
            "recipient_iff_contains_line": mismatches == 0,
            "orbits": orbits,
        }


# -- the signed game -------------------------------------------------------


def negation_involution(n: int = N_POINTS) -> Permutation:
    """The pairing x <-> x+n on 2n signed symbols."""
    return Permutation(tuple(list(range(n, 2 * n)) + list(range(n))))


class SignedPermutation:
    """A permutation of the 2n signed symbols commuting with the negation
    pairing; the quotient action on the n pairs is its unsigned shadow."""

    def __init__(self, perm: Permutation, n: int = N_POINTS):
        if perm.degree != 2 * n:
            raise ValueError(f"expected degree {2 * n}, got {perm.degree}")
        nu = negation_involution(n)
        if nu * perm != perm * nu:
            raise ValueError("permutation does not commute with the negation pairing")
        self.perm = perm
        self.n = n

    def unsigned(self) -> Permutation:
        return Permutation(tuple(self.perm.images[x] % self.n for x in range(self.n)))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return SignedPermutation(self.perm * other.perm, self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPermutation) and self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)


class SignedMoves:
    """Signed plane moves: the moved pair swaps positively, the leftover
    pair of the line swaps with negation.

    Symbols 0..12 are the positive copies, 13..25 the negated ones.
    """

    label = "pg23-signed"

    def __init__(self):
        h = pg23()
        self.num_points = N_POINTS
        self.perm_degree = 2 * N_POINTS
        from .designs import blocks_through_pair, collinearity_neighbors

        self._adj = collinearity_neighbors(h)
        self._pair_blocks = blocks_through_pair(h)
        self._blocks = h.blocks
        self._cache: dict[tuple[int, int], Permutation] = {}

    def neighbors(self, a: int) -> tuple[int, ...]:
        return self._adj[a]

    def move_perm(self, a: int, b: int) -> Permutation:
        if a == b:
            return Permutation.identity(self.perm_degree)
        key = (a, b) if a < b else (b, a)
        cached = self._cache.get(key)
        if cached is None:
            (block_id,) = self._pair_blocks[key]
            c, d = (x for x in self._blocks[block_id] if x not in key)
            imgs = list(range(self.perm_degree))
            imgs[a], imgs[b] = b, a
            imgs[a + 13], imgs[b + 13] = b + 13, a + 13
            imgs[c], imgs[d + 13] = d + 13, c
            imgs[c + 13], imgs[d] = d, c + 13
            cached = Permutation(imgs)
            self._cache[key] = cached
        return cached

    def hole_position(self, perm: Permutation, base: int) -> int | None:
        target = perm.images[base]
        return target if target < N_POINTS else None

    def stabilizer_domain(self, base: int) -> tuple[int, ...]:
        return tuple(
            x for x in range(self.perm_degree) if x != base and x != base + 13
        )


@lru_cache(maxsize=2)
def build_signed_groupoid(base: int = 0) -> ConwayGroupoid:
    return build_groupoid(SignedMoves(), base)


def signed_game_report(base: int = 0) -> dict:
    g = build_signed_groupoid(base)
    pi = g.hole_stabilizer
    plain = plane_groupoid(base).hole_stabilizer
    nu_images = list(range(2 * N_POINTS))
    for x in range(N_POINTS):
        if x != base:
            nu_images[x], nu_images[x + 13] = x + 13, x
    nu = Permutation(nu_images)  # all-negation away from the hole
    central = all(nu * s == s * nu for s in pi.strong_generators)
    quotient_ok = all(
        plain.contains(SignedPermutation(s).unsigned()) for s in pi.strong_generators
    )
    return {
        "hole_stabilizer_order": pi.order(),
        "negation_in_stabilizer": pi.contains(nu),
        "negation_central": central,
        "quotient_order": pi.order() // 2 if pi.contains(nu) else pi.order(),
        "quotient_inside_plain_stabilizer": quotient_ok,
        "groupoid_size": g.groupoid_size(),
        "is_group": groupoid_is_group(g),
    }


# -- the dualized game ------------------------------------------------------


class DualMoves:
    """Walks on the 52 point-line flags of the plane.

    Permutations act on 26 symbols: points 0..12 and lines 13..25. A step
    either slides the point hole along the current line or pivots the line
    hole around the current point; line moves happen in the dual plane
    (the four lines through a point pair up).
    """

    label = "pg23-dual"

    def __init__(self):
        h = pg23()
        self._blocks = h.blocks
        self.flags = tuple(
            (p, j) for j in range(13) for p in self._blocks[j]
        )
        self.flags = tuple(sorted(self.flags))
        self.flag_index = {f: i for i, f in enumerate(self.flags)}
        self.num_points = len(self.flags)  # 52 walk vertices
        self.perm_degree = 26
        self._lines_through = [
            tuple(j for j in range(13) if p in self._blocks[j]) for p in range(13)
        ]
        self._cache: dict[tuple[int, int], Permutation] = {}
        from .groupoid import _hypergraph_moves

        self._point_moves = _hypergraph_moves(h)

    def neighbors(self, f: int) -> tuple[int, ...]:
        p, j = self.flags[f]
        out = []
        for p2 in self._blocks[j]:
            if p2 != p:
                out.append(self.flag_index[p2, j])
        for j2 in self._lines_through[p]:
            if j2 != j:
                out.append(self.flag_index[p, j2])
        return tuple(sorted(out))

    def _line_move(self, j1: int, j2: int) -> Permutation:
        key = (13 + min(j1, j2), 13 + max(j1, j2))
        cached = self._cache.get(key)
        if cached is None:
            (crossing,) = set(self._blocks[j1]) & set(self._blocks[j2])
            j3, j4 = (j for j in self._lines_through[crossing] if j not in (j1, j2))
            imgs = list(range(26))
            imgs[13 + j1], imgs[13 + j2] = 13 + j2, 13 + j1
            imgs[13 + j3], imgs[13 + j4] = 13 + j4, 13 + j3
            cached = Permutation(imgs)
            self._cache[key] = cached
        return cached

    def _point_move(self, p1: int, p2: int) -> Permutation:
        key = (min(p1, p2), max(p1, p2))
        cached = self._cache.get(key)
        if cached is None:
            small = self._point_moves.move_perm(p1, p2)
            cached = Permutation(small.images + tuple(range(13, 26)))
            self._cache[key] = cached
        return cached

    def move_perm(self, f1: int, f2: int) -> Permutation:
        if f1 == f2:
            return Permutation.identity(26)
        (p1, j1), (p2, j2) = self.flags[f1], self.flags[f2]
        if j1 == j2:
            return self._point_move(p1, p2)
        if p1 == p2:
            return self._line_move(j1, j2)
        raise ValueError(f"flags {self.flags[f1]} and {self.flags[f2]} are not adjacent")

    def hole_position(self, perm: Permutation, base: int) -> int | None:
        p, j = self.flags[base]
        tp = perm.images[p]
        tj = perm.images[13 + j] - 13
        if tp >= 13 or tj < 0:
            return None
        return self.flag_index.get((tp, tj))

    def stabilizer_domain(self, base: int) -> tuple[int, ...]:
        p, j = self.flags[base]
        return tuple(x for x in range(26) if x != p and x != 13 + j)


@lru_cache(maxsize=2)
def build_dual_groupoid() -> ConwayGroupoid:
    """Walks start and end at the flag pairing point 0 with its first line."""
    source = DualMoves()
    base_flag = source.flag_index[(0, source._lines_through[0][0])]
    return build_groupoid(source, base_flag)


def dual_game_report() -> dict:
    """Order and orbit structure of the dualized game's hole stabilizer.

    The group fixes the base point and the base line individually, so "the
    action splits into points and lines" is read as: the orbits on the 24
    non-hole symbols are the 12 other points and the 12 other lines. The
    report carries both the refinement check and the exact orbit sizes so
    the stronger literal reading stays visible as data.
    """
    g = build_dual_groupoid()
    pi = g.hole_stabilizer
    source: DualMoves = g.source
    p0, j0 = source.flags[g.base_point]
    domain = g.stabilizer_domain
    orbits = pi.orbits(domain)
    point_side = {x for x in domain if x < 13}
    line_side = {x for x in domain if x >= 13}
    refines = all(
        set(orb) <= point_side or set(orb) <= line_side for orb in orbits
    )
    # restriction to the 12 non-hole points: faithful iff no order is lost
    restricted = PermutationGroup(
        13, [Permutation(s.images[:13]) for s in pi.strong_generators]
    )
    return {
        "base_flag": [p0, j0],
        "hole_stabilizer_order": pi.order(),
        "orbit_count": len(orbits),
        "orbit_sizes": sorted(len(o) for o in orbits),
        "orbits_refine_point_line_split": refines,
        "orbits_are_exactly_the_sides": sorted(map(len, orbits)) == [12, 12],
        "point_restriction_order": restricted.order(),
        "point_restriction_faithful": restricted.order() == pi.order(),
        "groupoid_size": g.groupoid_size(),
    }
