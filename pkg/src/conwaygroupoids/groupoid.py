"""Elementary moves, move sequences, hole stabilizers and Conway groupoids.

A move source is anything that can play the counter game: it exposes a walk
graph (whose vertices carry the hole) and a permutation per edge. Designs
walk on their points; the signed and dualized variants reuse the same
machinery with a walk graph that differs from the permutation domain.

The hole stabilizer is generated by conjugating each edge move by the
tree paths to its endpoints: every closed walk at the base telescopes into
such conjugates because consecutive tree factors cancel, so finitely many
generators (at most one per edge, plus loops) span the full closed-walk set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import factorial

from .designs import (
    Hypergraph,
    blocks_through_pair,
    collinearity_neighbors,
    design_lambda,
    is_connected,
    profile,
)
from .permgroup import PermutationGroup
from .perms import Permutation


class HypergraphMoves:
    """Move source of a pliable hypergraph: swap a, b and the leftover pair
    of every line through them."""

    def __init__(self, h: Hypergraph):
        from .designs import is_pliable

        if not is_pliable(h):
            raise ValueError("moves are well defined only on pliable hypergraphs")
        self.hypergraph = h
        self.num_points = h.n
        self.perm_degree = h.n
        self.label = h.label
        self._adj = collinearity_neighbors(h)
        self._pair_blocks = blocks_through_pair(h)
        self._cache: dict[tuple[int, int], Permutation] = {}

    def neighbors(self, a: int) -> tuple[int, ...]:
        return self._adj[a]

    def move_perm(self, a: int, b: int) -> Permutation:
        if a == b:
            return Permutation.identity(self.perm_degree)
        key = (a, b) if a < b else (b, a)
        cached = self._cache.get(key)
        if cached is None:
            ids = self._pair_blocks.get(key)
            if not ids:
                raise ValueError(f"non-collinear move [{a},{b}]")
            imgs = list(range(self.perm_degree))
            imgs[a], imgs[b] = b, a
            # repeated lines contribute their leftover pair once
            for block in {self.hypergraph.blocks[i] for i in ids}:
                c, d = (x for x in block if x != a and x != b)
                imgs[c], imgs[d] = d, c
            cached = Permutation(imgs)
            self._cache[key] = cached
        return cached

    def hole_position(self, perm: Permutation, base: int) -> int:
        """Where a move with this permutation carries a hole starting at base."""
        return perm.images[base]

    def stabilizer_domain(self, base: int) -> tuple[int, ...]:
        return tuple(x for x in range(self.num_points) if x != base)


@dataclass
class ConwayGroupoid:
    """A built groupoid: hole stabilizer plus one coset representative per
    walk vertex, reached along a breadth-first spanning tree."""

    source: object
    base_point: int
    hole_stabilizer: PermutationGroup
    coset_reps: tuple[Permutation, ...]
    tree_parent: tuple[int, ...]
    stabilizer_domain: tuple[int, ...]

    @property
    def num_points(self) -> int:
        return self.source.num_points

    @property
    def label(self) -> str:
        return getattr(self.source, "label", "custom")

    def hole_stabilizer_order(self) -> int:
        return self.hole_stabilizer.order()

    def groupoid_size(self) -> int:
        return self.num_points * self.hole_stabilizer.order()

    def rep_target(self, perm: Permutation) -> int:
        """Walk vertex reached from the base by a move with this permutation."""
        return self.source.hole_position(perm, self.base_point)


def elementary_move(h: Hypergraph, a: int, b: int) -> Permutation:
    """The involution swapping a, b and, in each line through both, the
    remaining pair; the identity when a == b."""
    from .designs import is_pliable

    if not is_pliable(h):
        raise ValueError("moves are well defined only on pliable hypergraphs")
    if a == b:
        return Permutation.identity(h.n)
    source = _hypergraph_moves(h)
    return source.move_perm(a, b)


def move(h: Hypergraph, points) -> Permutation:
    """Chain elementary moves along a walk, left to right."""
    seq = list(points)
    if not seq:
        raise ValueError("a move sequence needs at least one point")
    source = _hypergraph_moves(h)
    result = Permutation.identity(h.n)
    for a, b in zip(seq, seq[1:]):
        result = result * source.move_perm(a, b)
    return result


@lru_cache(maxsize=None)
def _hypergraph_moves(h: Hypergraph) -> HypergraphMoves:
    return HypergraphMoves(h)


def build_groupoid(source, base: int = 0) -> ConwayGroupoid:
    """Generate the hole stabilizer at the base vertex and the tree of coset
    representatives."""
    if isinstance(source, Hypergraph):
        source = _hypergraph_moves(source)
    n = source.num_points
    degree = source.perm_degree
    if not 0 <= base < n:
        raise ValueError(f"base vertex {base} out of range")

    # breadth-first spanning tree, neighbors in ascending order
    parent = [-1] * n
    seen = {base}
    order = [base]
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        for y in source.neighbors(x):
            if y not in seen:
                seen.add(y)
                parent[y] = x
                order.append(y)
    if len(order) != n:
        raise ValueError("walk graph is not connected")

    ident = Permutation.identity(degree)
    reps: list[Permutation | None] = [None] * n
    reps[base] = ident
    for x in order[1:]:
        reps[x] = reps[parent[x]] * source.move_perm(parent[x], x)

    group = PermutationGroup(degree)
    seen_gens: set[tuple] = {ident.images}

    def feed(g: Permutation) -> None:
        if g.images not in seen_gens:
            seen_gens.add(g.images)
            group.extend(g)

    for a in range(n):
        loop = source.move_perm(a, a)
        if not loop.is_identity():
            feed(reps[a] * loop * reps[a].inverse())
    for a in range(n):
        ra = reps[a]
        for b in source.neighbors(a):
            if b < a:
                continue
            feed(ra * source.move_perm(a, b) * reps[b].inverse())

    return ConwayGroupoid(
        source=source,
        base_point=base,
        hole_stabilizer=group,
        coset_reps=tuple(reps),
        tree_parent=tuple(parent),
        stabilizer_domain=tuple(source.stabilizer_domain(base)),
    )


def groupoid_is_group(g: ConwayGroupoid) -> bool:
    """Whether the set of all moves from the base is closed under composition.

    Tests t_a * t_b against the coset of the vertex it carries the hole to;
    quadratically many membership sifts instead of generating the closure.
    """
    pi = g.hole_stabilizer
    reps = g.coset_reps
    inv_reps = [r.inverse() for r in reps]
    for ta in reps:
        for tb in reps:
            w = ta * tb
            c = g.rep_target(w)
            if c is None:  # product carries the hole outside the walk graph
                return False
            if not pi.contains(w * inv_reps[c]):
                return False
    return True


def groupoid_group_closure(g: ConwayGroupoid) -> PermutationGroup:
    """The group generated by the groupoid (equals it iff it is a group)."""
    gens = list(g.hole_stabilizer.strong_generators)
    gens.extend(r for r in g.coset_reps if not r.is_identity())
    return PermutationGroup(g.source.perm_degree, gens)


def distinct_elementary_moves(source) -> list[Permutation]:
    """All distinct nontrivial move permutations, loops included."""
    out: dict[tuple, Permutation] = {}
    for a in range(source.num_points):
        loop = source.move_perm(a, a)
        if not loop.is_identity():
            out.setdefault(loop.images, loop)
        for b in source.neighbors(a):
            if b > a:
                m = source.move_perm(a, b)
                if not m.is_identity():
                    out.setdefault(m.images, m)
    return list(out.values())


def _product_order_at_most_3(p: Permutation, q: Permutation) -> bool:
    # ord <= 3 iff all cycle lengths lie in {1,2} or all in {1,3}
    imgs_p, imgs_q = p.images, q.images
    prod = tuple(imgs_q[x] for x in imgs_p)
    seen = bytearray(len(prod))
    has2 = has3 = False
    for i, x in enumerate(prod):
        if seen[i] or x == i:
            continue
        length = 1
        j = x
        while j != i:
            seen[j] = 1
            length += 1
            if length > 3:
                return False
            j = prod[j]
        if length == 2:
            has2 = True
        elif length == 3:
            has3 = True
        if has2 and has3:
            return False
    return True


def is_3_transposition_family(moves) -> bool:
    """Moves are involutions whose pairwise products have order at most 3."""
    moves = list(moves)
    if not all((m * m).is_identity() for m in moves):
        return False
    for i, p in enumerate(moves):
        for q in moves[i + 1 :]:
            if not _product_order_at_most_3(p, q):
                return False
    return True


@dataclass
class GroupoidReport:
    label: str
    base_point: int
    num_points: int
    hole_stabilizer_order: int
    groupoid_size: int
    classification: str
    is_group: bool
    is_3_transposition: bool
    transitivity_degree: int
    hole_stabilizer_parity: str
    groupoid_parity: str

    def to_json(self) -> dict:
        from .reporting import encode_int

        return {
            "label": self.label,
            "base_point": self.base_point,
            "num_points": self.num_points,
            "hole_stabilizer_order": encode_int(self.hole_stabilizer_order),
            "groupoid_size": encode_int(self.groupoid_size),
            "classification": self.classification,
            "is_group": self.is_group,
            "is_3_transposition": self.is_3_transposition,
            "transitivity_degree": self.transitivity_degree,
            "hole_stabilizer_parity": self.hole_stabilizer_parity,
            "groupoid_parity": self.groupoid_parity,
        }


def classify_action(group: PermutationGroup, domain) -> str:
    """Where the action sits on the trivial/intransitive/imprimitive/
    primitive/alternating/symmetric ladder."""
    dom = tuple(sorted(domain))
    if group.order() == 1:
        return "trivial"
    if not group.is_transitive(dom):
        return "intransitive"
    if not group.is_primitive(dom):
        return "transitive-imprimitive"
    if group.acts_within(dom):
        if group.order() == factorial(len(dom)):
            return "symmetric"
        if 2 * group.order() == factorial(len(dom)):
            return "alternating"
    return "primitive"


def classify(g: ConwayGroupoid) -> GroupoidReport:
    pi = g.hole_stabilizer
    dom = g.stabilizer_domain
    moves = distinct_elementary_moves(g.source)
    gen_parities = {p.parity() for p in pi.strong_generators}
    pi_parity = "even" if gen_parities <= {"even"} else "mixed"
    rep_parities = {r.parity() for r in g.coset_reps}
    l_parity = "even" if (gen_parities | rep_parities) <= {"even"} else "mixed"
    return GroupoidReport(
        label=g.label,
        base_point=g.base_point,
        num_points=g.num_points,
        hole_stabilizer_order=pi.order(),
        groupoid_size=g.groupoid_size(),
        classification=classify_action(pi, dom),
        is_group=groupoid_is_group(g),
        is_3_transposition=is_3_transposition_family(moves),
        transitivity_degree=pi.transitivity_degree(dom),
        hole_stabilizer_parity=pi_parity,
        groupoid_parity=l_parity,
    )


def verify_base_independence(h: Hypergraph) -> bool:
    """Hole stabilizers at all base points are conjugate through the walk
    moves connecting the bases (so isomorphic as permutation groups).

    For hypergraphs whose points are pairwise collinear this is a proved
    theorem; for merely connected ones (the coupled-pairs family) it is
    checked here empirically, element by element.
    """
    g0 = build_groupoid(h, 0)
    pi0 = g0.hole_stabilizer
    for b in range(1, h.n):
        gb = build_groupoid(h, b)
        pib = gb.hole_stabilizer
        if pib.order() != pi0.order():
            return False
        conj = g0.coset_reps[b]
        conj_inv = conj.inverse()
        for x in pi0.strong_generators:
            if not pib.contains(conj_inv * x * conj):
                return False
    return True


def closed_triangle_moves_trivial(h: Hypergraph) -> bool:
    """Whether [base, a, b, base] is the identity for every base point and
    every pair a, b sharing a line with it."""
    source = _hypergraph_moves(h)
    for block in h.blocks:
        for inf, a, b in combinations(block, 3):
            w = source.move_perm(inf, a) * source.move_perm(a, b)
            w = w * source.move_perm(b, inf)
            if not w.is_identity():
                return False
    return True


@dataclass
class LawCheck:
    name: str
    applicable: bool
    holds: bool | None
    note: str = ""

    def ok(self) -> bool:
        return (not self.applicable) or bool(self.holds)


@dataclass
class DesignLawReport:
    label: str
    n: int
    lam: int
    checks: list[LawCheck]
    outcome: str = ""

    def all_hold(self) -> bool:
        return all(c.ok() for c in self.checks)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "n": self.n,
            "lambda": self.lam,
            "outcome": self.outcome,
            "all_applicable_hold": self.all_hold(),
            "checks": [
                {
                    "name": c.name,
                    "applicable": c.applicable,
                    "holds": c.holds,
                    "note": c.note,
                }
                for c in self.checks
            ],
        }


def _plane_fingerprint(g: ConwayGroupoid, lam: int) -> bool:
    """Order plus sharp 5-transitivity, the certificate used instead of an
    isomorphism test for the projective-plane hole stabilizer."""
    pi = g.hole_stabilizer
    return (
        g.num_points == 13
        and lam == 1
        and pi.order() == 95_040
        and pi.transitivity_degree(g.stabilizer_domain) == 5
    )


def _family_parameters_match(n: int, lam: int) -> bool:
    """(n, lambda) fingerprint for the three symmetric-difference-closed
    families (boolean, symplectic and quadratic systems)."""
    if n >= 4 and n & (n - 1) == 0:
        m = n.bit_length() - 1
        if lam == (1 << (m - 1)) - 1:  # boolean of order 2^m
            return True
        if m % 2 == 0 and m >= 4 and lam == (1 << (m - 2)) - 1:  # symplectic
            return True
    # quadratic systems: n = 2^(2m-1) +- 2^(m-1); match the constructed lambda
    from .designs import quadratic_system

    for m in range(2, 7):
        for eps in (0, 1):
            if m == 2 and eps == 1:
                continue
            if n == (1 << (2 * m - 1)) + (1 if eps == 0 else -1) * (1 << (m - 1)):
                if lam == design_lambda(quadratic_system(m, eps)):
                    return True
    return False


def design_law_report(h: Hypergraph, groupoid: ConwayGroupoid | None = None) -> DesignLawReport:
    """Evaluate every theorem-shaped implication the catalog is expected to
    satisfy on one supersimple design.

    A check fails only when its hypothesis holds and its conclusion does
    not; inapplicable checks are recorded with holds=None.
    """
    prof = profile(h)
    if not prof.is_supersimple:
        raise ValueError("the law sweep is defined for supersimple designs")
    lam = prof.lam
    n = h.n
    g = groupoid if groupoid is not None else build_groupoid(h, 0)
    pi = g.hole_stabilizer
    dom = g.stabilizer_domain
    checks: list[LawCheck] = []

    def add(name: str, applicable: bool, conclusion, note: str = "") -> None:
        holds = bool(conclusion()) if applicable else None
        checks.append(LawCheck(name, applicable, holds, note))

    add(
        "nontrivial_when_n_gt_2lam_plus_2",
        n > 2 * lam + 2,
        lambda: pi.order() > 1,
    )
    add(
        "transitive_when_n_gt_4lam_plus_1",
        n > 4 * lam + 1,
        lambda: pi.is_transitive(dom),
    )
    add(
        "primitive_when_n_gt_9lam_plus_1",
        n > 9 * lam + 1,
        lambda: pi.is_primitive(dom),
    )
    add(
        "even_or_plane_when_n_gt_9lam2_minus_12lam_plus_5",
        n > 9 * lam * lam - 12 * lam + 5,
        lambda: all(p.parity() == "even" for p in pi.strong_generators)
        or _plane_fingerprint(g, lam),
    )
    add(
        "alternating_when_n_gt_144lam2_plus_120lam_plus_26",
        n > 144 * lam * lam + 120 * lam + 26,
        lambda: pi.contains_alternating(dom),
    )

    triangles_trivial = closed_triangle_moves_trivial(h)
    outcome = ""
    if triangles_trivial:
        if pi.order() == 1:
            outcome = "boolean"
        elif _plane_fingerprint(g, lam):
            outcome = "projective-plane"
        elif pi.contains_alternating(dom):
            outcome = "alternating"
        else:
            outcome = "none"
    add(
        "trichotomy_when_closed_triangles_trivial",
        triangles_trivial,
        lambda: outcome in ("boolean", "projective-plane", "alternating"),
        note=f"outcome={outcome}" if triangles_trivial else "",
    )

    is_group = groupoid_is_group(g)
    if is_group and n > 2 * lam + 2:
        closure = groupoid_group_closure(g)
        add(
            "group_groupoid_is_primitive_on_points",
            True,
            lambda: closure.order() == g.groupoid_size()
            and closure.is_primitive(range(n)),
        )
    else:
        add("group_groupoid_is_primitive_on_points", False, lambda: None)

    rtg = prof.is_regular_two_graph
    tri = prof.has_triangle_property
    add(
        "transitive_when_regular_two_graph",
        rtg and n > 2 * lam + 2,
        lambda: pi.is_transitive(dom),
    )
    add(
        "group_when_regular_two_graph_and_symmetric_difference_closed",
        rtg and tri and n > 2 * lam + 2,
        lambda: is_group,
    )
    add(
        "family_parameters_when_regular_two_graph_and_symmetric_difference_closed",
        rtg and tri,
        lambda: _family_parameters_match(n, lam),
    )
    add(
        "three_transpositions_when_regular_two_graph_and_symmetric_difference_closed",
        rtg and tri and n > 2 * lam + 2,
        lambda: is_3_transposition_family(distinct_elementary_moves(g.source)),
    )

    report = DesignLawReport(label=h.label, n=n, lam=lam, checks=checks, outcome=outcome)
    return report


def brute_force_groupoid(source, base: int = 0, limit: int = 200_000):
    """Breadth-first closure of all move sequences from the base.

    Returns (hole stabilizer elements, groupoid elements) as image-tuple
    sets. Exponential in general; only for cross-checking small instances.
    """
    if isinstance(source, Hypergraph):
        source = _hypergraph_moves(source)
    ident = tuple(range(source.perm_degree))
    seen: dict[tuple, int] = {ident: base}  # permutation -> hole position
    queue = [(ident, base)]
    qi = 0
    while qi < len(queue):
        w, at = queue[qi]
        qi += 1
        successors = list(source.neighbors(at))
        successors.append(at)  # a nontrivial loop move also counts as a step
        for nxt in successors:
            m = source.move_perm(at, nxt)
            if nxt == at and m.is_identity():
                continue
            nw = tuple(m.images[x] for x in w)
            if nw not in seen:
                if len(seen) >= limit:
                    raise ValueError(f"groupoid closure exceeded limit {limit}")
                seen[nw] = source.hole_position(Permutation._raw(nw), base)
                queue.append((nw, seen[nw]))
    pi = {w for w, at in seen.items() if at == base}
    return pi, set(seen)
