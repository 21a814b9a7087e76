"""Finite permutation groups via a base and strong generating set.

The construction is a deterministic Schreier-Sims: generators are absorbed
one at a time, the base is extended with the smallest point moved by each
new strong generator, and orbits are walked breadth-first with a fixed
generator order. The same generator sequence therefore always yields the
same base, transversals and strong generating set.

Group orders are exact Python integers, so factorial comparisons (for
alternating/symmetric containment) never round.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .perms import Permutation


def _mul(p: tuple, q: tuple) -> tuple:
    # left-to-right: x -> q[p[x]]
    return tuple(q[x] for x in p)


def _inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


class _Level:
    """One stabilizer-chain level: a base point, its generators and transversal."""

    __slots__ = ("point", "gens", "orbit", "tr", "dirty")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[tuple[tuple, tuple]] = []  # (g, g^-1) raw image tuples
        self.orbit: list[int] = [point]
        self.tr: dict[int, tuple[tuple, tuple]] = {}  # pt -> (u, u^-1), point^u = pt
        self.dirty = True


@dataclass(frozen=True)
class BlockSystem:
    """A G-invariant partition of a transitive domain into equal-size blocks."""

    degree: int
    points: tuple[int, ...]
    block_ids: tuple[int, ...]  # aligned with points
    num_blocks: int
    block_size: int

    def block_of(self, point: int) -> int:
        return self.block_ids[self.points.index(point)]

    def blocks(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for pt, b in zip(self.points, self.block_ids):
            out[b].append(pt)
        return [tuple(b) for b in out]

    def is_trivial(self) -> bool:
        return self.num_blocks == 1 or self.block_size == 1


class PermutationGroup:
    """A permutation group with verified stabilizer chain.

    ``generators`` keeps the input generators as given (including redundant
    ones); ``strong_generators`` is the union of the chain levels' generator
    sets.
    """

    def __init__(self, degree: int, generators=(), base_hint=()):
        self.degree = degree
        self._id = tuple(range(degree))
        self._levels: list[_Level] = [_Level(pt) for pt in base_hint]
        self._input: list[Permutation] = []
        self._order: int | None = None
        for g in generators:
            self.extend(g)

    # -- construction -------------------------------------------------

    def extend(self, gen) -> None:
        """Absorb one more generator (a Permutation or raw image tuple)."""
        if isinstance(gen, Permutation):
            raw = gen.images
        else:
            raw = tuple(gen)
            gen = Permutation(raw)
        if len(raw) != self.degree:
            raise ValueError(f"degree mismatch: {len(raw)} vs {self.degree}")
        self._input.append(gen)
        res, stuck = self._sift_raw(raw)
        if res is None:
            return
        self._order = None
        if stuck == len(self._levels):
            self._append_level(res)
        pair = (res, _inv(res))
        for j in range(stuck + 1):
            self._levels[j].gens.append(pair)
            self._levels[j].dirty = True
        self._schreier_sims(stuck)

    def _append_level(self, moved: tuple) -> None:
        point = min(x for x in range(self.degree) if moved[x] != x)
        self._levels.append(_Level(point))

    def _sift_raw(self, p: tuple, start: int = 0) -> tuple[tuple | None, int]:
        """Strip p through the chain; (None, len) if it reduces to identity."""
        for i in range(start, len(self._levels)):
            lvl = self._levels[i]
            pt = p[lvl.point]
            if pt == lvl.point:
                continue
            entry = lvl.tr.get(pt)
            if entry is None:
                return p, i
            uinv = entry[1]
            p = tuple(uinv[x] for x in p)
        if p == self._id:
            return None, len(self._levels)
        return p, len(self._levels)

    def _rebuild_orbit(self, i: int) -> None:
        lvl = self._levels[i]
        if not lvl.dirty:
            return
        ident = self._id
        tr = {lvl.point: (ident, ident)}
        queue = [lvl.point]
        qi = 0
        gens = lvl.gens
        while qi < len(queue):
            pt = queue[qi]
            qi += 1
            u, uinv = tr[pt]
            for g, ginv in gens:
                npt = g[pt]
                if npt not in tr:
                    tr[npt] = (_mul(u, g), _mul(ginv, uinv))
                    queue.append(npt)
        lvl.orbit = queue
        lvl.tr = tr
        lvl.dirty = False

    def _schreier_sims(self, start: int) -> None:
        i = start
        while i >= 0:
            added_at = self._verify_level(i)
            if added_at is None:
                i -= 1
            else:
                i = added_at

    def _verify_level(self, i: int) -> int | None:
        """Sift all Schreier generators of level i through the lower chain.

        Returns the level a new strong generator was added at (at which
        point verification must resume there), or None if the level passed.
        """
        self._rebuild_orbit(i)
        lvl = self._levels[i]
        ident = self._id
        for pt in lvl.orbit:
            u = lvl.tr[pt][0]
            for g, _ in lvl.gens:
                vinv = lvl.tr[g[pt]][1]
                sg = tuple(vinv[g[x]] for x in u)  # u * g * v^-1
                if sg == ident:
                    continue
                res, stuck = self._sift_raw(sg, i + 1)
                if res is None:
                    continue
                if stuck == len(self._levels):
                    self._append_level(res)
                pair = (res, _inv(res))
                for j in range(i + 1, stuck + 1):
                    self._levels[j].gens.append(pair)
                    self._levels[j].dirty = True
                return stuck
        return None

    # -- basic queries --------------------------------------------------

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return tuple(self._input)

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self._levels)

    @property
    def strong_generators(self) -> tuple[Permutation, ...]:
        seen: dict[tuple, None] = {}
        for lvl in self._levels:
            for g, _ in lvl.gens:
                seen.setdefault(g)
        return tuple(Permutation._raw(g) for g in seen)

    def order(self) -> int:
        if self._order is None:
            n = 1
            for i, lvl in enumerate(self._levels):
                self._rebuild_orbit(i)
                n *= len(lvl.orbit)
            self._order = n
        return self._order

    def sift(self, p: Permutation) -> Permutation:
        res, _ = self._sift_raw(p.images)
        return Permutation.identity(self.degree) if res is None else Permutation._raw(res)

    def contains(self, p) -> bool:
        raw = p.images if isinstance(p, Permutation) else tuple(p)
        if len(raw) != self.degree:
            raise ValueError(f"degree mismatch: {len(raw)} vs {self.degree}")
        res, _ = self._sift_raw(raw)
        return res is None

    def __contains__(self, p) -> bool:
        return self.contains(p)

    def transversal(self, i: int) -> dict[int, Permutation]:
        """Coset representatives for the i-th fundamental orbit."""
        self._rebuild_orbit(i)
        return {pt: Permutation._raw(uv[0]) for pt, uv in self._levels[i].tr.items()}

    def verify_chain(self) -> None:
        """Check the structural invariants of the chain; raise on failure."""
        for i, lvl in enumerate(self._levels):
            for g, _ in lvl.gens:
                for j in range(i):
                    b = self._levels[j].point
                    if g[b] != b:
                        raise AssertionError(
                            f"level {i} generator moves earlier base point {b}"
                        )
        for g in self._input:
            if not self.contains(g):
                raise AssertionError("input generator fails the membership test")

    def elements(self, limit: int = 1_000_000):
        """Iterate all elements (transversal products); order() must be <= limit."""
        if self.order() > limit:
            raise ValueError(f"group of order {self.order()} exceeds limit {limit}")
        ident = self._id

        # sifting factors a member as u_(k-1) * ... * u_0 with u_i from the
        # level-i transversal, so enumerate with the deepest level leftmost
        def rec(i: int, acc: tuple):
            if i < 0:
                yield Permutation._raw(acc)
                return
            lvl = self._levels[i]
            self._rebuild_orbit(i)
            for pt in lvl.orbit:
                yield from rec(i - 1, _mul(acc, lvl.tr[pt][0]))

        if not self._levels:
            yield Permutation._raw(ident)
            return
        yield from rec(len(self._levels) - 1, ident)

    # -- orbits and blocks ------------------------------------------------

    def orbit(self, point: int) -> tuple[int, ...]:
        gens = [g.images for g in self._input]
        seen = {point}
        queue = [point]
        qi = 0
        while qi < len(queue):
            pt = queue[qi]
            qi += 1
            for g in gens:
                npt = g[pt]
                if npt not in seen:
                    seen.add(npt)
                    queue.append(npt)
        return tuple(sorted(seen))

    def orbits(self, domain=None) -> tuple[tuple[int, ...], ...]:
        """Orbit partition of the domain (default: all points).

        Raises if the domain is not invariant.
        """
        dom = tuple(range(self.degree)) if domain is None else tuple(sorted(domain))
        domset = set(dom)
        out = []
        left = set(dom)
        while left:
            orb = self.orbit(min(left))
            if not set(orb) <= domset:
                raise ValueError(f"domain is not invariant: orbit {orb} escapes")
            out.append(orb)
            left -= set(orb)
        return tuple(out)

    def is_transitive(self, domain) -> bool:
        dom = set(domain)
        if not dom:
            raise ValueError("empty domain")
        return set(self.orbit(min(dom))) == dom

    def acts_within(self, domain) -> bool:
        """True iff every generator fixes the complement of the domain pointwise."""
        dom = set(domain)
        outside = [x for x in range(self.degree) if x not in dom]
        return all(g.images[x] == x for g in self._input for x in outside)

    def minimal_block(self, a: int, b: int, domain=None) -> BlockSystem:
        """Finest block system (for the action on the domain) merging a and b."""
        dom = tuple(sorted(domain)) if domain is not None else self.orbit(a)
        if not self.is_transitive(dom):
            raise ValueError("minimal_block requires a transitive domain")
        gens = [g.images for g in self._input]
        parent: dict[int, int] = {x: x for x in dom}

        def find(x: int) -> int:
            root = x
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        def union(x: int, y: int) -> int | None:
            rx, ry = find(x), find(y)
            if rx == ry:
                return None
            if rx > ry:
                rx, ry = ry, rx
            parent[ry] = rx
            return ry  # the absorbed representative

        queue = [b]
        union(a, b)
        qi = 0
        while qi < len(queue):
            gamma = queue[qi]
            qi += 1
            delta = find(gamma)
            for g in gens:
                absorbed = union(g[gamma], g[delta])
                if absorbed is not None:
                    queue.append(absorbed)
        reps: dict[int, int] = {}
        ids = []
        for x in dom:
            r = find(x)
            if r not in reps:
                reps[r] = len(reps)
            ids.append(reps[r])
        num = len(reps)
        size = len(dom) // num
        if num * size != len(dom):
            raise AssertionError("block classes are not equal-sized")
        return BlockSystem(self.degree, dom, tuple(ids), num, size)

    def is_primitive(self, domain=None) -> bool:
        dom = tuple(sorted(domain)) if domain is not None else tuple(range(self.degree))
        if not self.is_transitive(dom):
            raise ValueError("primitivity requires a transitive domain")
        if len(dom) <= 2:
            return True
        a = dom[0]
        return all(self.minimal_block(a, b, dom).num_blocks == 1 for b in dom[1:])

    def stabilizer(self, point: int) -> "PermutationGroup":
        chain = PermutationGroup(self.degree, self._input, base_hint=(point,))
        gens = []
        seen = set()
        for lvl in chain._levels[1:]:
            for g, _ in lvl.gens:
                if g not in seen:
                    seen.add(g)
                    gens.append(Permutation._raw(g))
        return PermutationGroup(self.degree, gens)

    def transitivity_degree(self, domain) -> int:
        """Largest k such that the action on the domain is k-transitive."""
        dom = sorted(domain)
        group = self
        k = 0
        while dom:
            pt = dom[0]
            if set(group.orbit(pt)) != set(dom):
                break
            k += 1
            dom = dom[1:]
            if dom:
                group = group.stabilizer(pt)
        return k

    def contains_alternating(self, domain) -> bool:
        """True iff the group induces at least Alt on the domain.

        Requires the group to fix everything outside the domain; the check
        is the exact comparison order >= |domain|!/2.
        """
        dom = tuple(sorted(domain))
        if not self.acts_within(dom):
            return False
        return 2 * self.order() >= factorial(len(dom))

    def __repr__(self) -> str:
        return (
            f"PermutationGroup(degree={self.degree}, order={self.order()}, "
            f"base={list(self.base)})"
        )


def bsgs(generators, degree: int | None = None, base_hint=()) -> PermutationGroup:
    """Build a verified stabilizer chain from a generator sequence."""
    gens = list(generators)
    if degree is None:
        if not gens:
            raise ValueError("cannot infer the degree of an empty generator set")
        first = gens[0]
        degree = first.degree if isinstance(first, Permutation) else len(first)
    return PermutationGroup(degree, gens, base_hint=base_hint)


def reduced_generators(group: PermutationGroup) -> list[Permutation]:
    """A greedily thinned generator list spanning the same group.

    Useful before orbit walks over large point sets, where every extra
    generator multiplies the work.
    """
    probe = PermutationGroup(group.degree)
    kept: list[Permutation] = []
    for g in group.strong_generators:
        if not probe.contains(g):
            probe.extend(g)
            kept.append(g)
    if probe.order() != group.order():
        raise AssertionError("generator reduction lost elements")
    return kept


def closure_elements(generators, limit: int = 2_000_000) -> set[tuple]:
    """Brute-force closure of a generator set under composition.

    Independent of the stabilizer chain; used to cross-check orders.
    """
    gens = [g.images if isinstance(g, Permutation) else tuple(g) for g in generators]
    if not gens:
        raise ValueError("closure of an empty set needs a degree; pass the identity")
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    queue = [ident]
    qi = 0
    while qi < len(queue):
        p = queue[qi]
        qi += 1
        for g in gens:
            npg = _mul(p, g)
            if npg not in seen:
                if len(seen) >= limit:
                    raise ValueError(f"closure exceeded limit {limit}")
                seen.add(npg)
                queue.append(npg)
    return seen
