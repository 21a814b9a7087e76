"""Pliable functions: move tables over triple systems.

A pliable function assigns a permutation [a,b] to every ordered point pair
so that [a,b] carries a to b, [b,a] is its inverse, and for distinct a, b
the support of [a,b] is exactly {a, b} plus the points completing them to a
triple. The diagonal moves [a,a] must fix a but need not be the identity
(the affine-complement family's are not).

Every pliable function is a move source in the sense of the groupoid
module, so hole stabilizers and groupoids come from the same machinery as
the design case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .designs import Hypergraph, TripleSystem, collinear_triples
from .groupoid import (
    ConwayGroupoid,
    build_groupoid,
    groupoid_group_closure,
    groupoid_is_group,
)
from .perms import Permutation


@dataclass
class PliableFunction:
    triple_system: TripleSystem
    table: dict[tuple[int, int], Permutation]
    label: str = "custom"

    # -- move-source protocol -------------------------------------------

    @property
    def num_points(self) -> int:
        return self.triple_system.n

    @property
    def perm_degree(self) -> int:
        return self.triple_system.n

    def neighbors(self, a: int) -> tuple[int, ...]:
        return tuple(b for b in range(self.num_points) if b != a)

    def move_perm(self, a: int, b: int) -> Permutation:
        return self.table[a, b]

    def hole_position(self, perm: Permutation, base: int) -> int:
        return perm.images[base]

    def stabilizer_domain(self, base: int) -> tuple[int, ...]:
        return tuple(x for x in range(self.num_points) if x != base)


def validate(f: PliableFunction) -> tuple[bool, str]:
    """Check both pliable-function axioms exhaustively over all pairs.

    Returns (True, "") or (False, message naming the first violation).
    """
    n = f.num_points
    triples = f.triple_system.triple_set()
    for a in range(n):
        for b in range(n):
            p = f.table.get((a, b))
            if p is None:
                return False, f"move [{a},{b}] missing from the table"
            if p(a) != b:
                return False, f"move [{a},{b}] sends {a} to {p(a)}, not {b}"
            if p.inverse() != f.table[b, a]:
                return False, f"inverse of [{a},{b}] differs from [{b},{a}]"
            if a != b:
                collinear = {c for c in range(n) if tuple(sorted((a, b, c))) in triples}
                expected = {a, b} | collinear
                if set(p.support()) != expected:
                    return False, (
                        f"support of [{a},{b}] is {sorted(p.support())}, "
                        f"expected {sorted(expected)}"
                    )
    return True, ""


def from_design(h: Hypergraph) -> PliableFunction:
    """The pliable function carried by a supersimple design's moves."""
    from .groupoid import _hypergraph_moves

    ts = collinear_triples(h)  # raises unless supersimple
    source = _hypergraph_moves(h)
    ident = Permutation.identity(h.n)
    table: dict[tuple[int, int], Permutation] = {}
    for a in range(h.n):
        table[a, a] = ident
        for b in range(h.n):
            if a != b:
                table[a, b] = source.move_perm(a, b)
    return PliableFunction(ts, table, label=f"design:{h.label}")


def agrees_with_design(f: PliableFunction, h: Hypergraph, base: int = 0) -> bool:
    """Order equality plus mutual membership of the two hole stabilizers."""
    gd = build_groupoid(h, base)
    gf = build_groupoid(f, base)
    pd, pf = gd.hole_stabilizer, gf.hole_stabilizer
    if pd.order() != pf.order():
        return False
    return all(pf.contains(x) for x in pd.strong_generators) and all(
        pd.contains(x) for x in pf.strong_generators
    )


def from_group(mult_table, label: str = "group") -> PliableFunction:
    """Right-multiplication moves of a finite group given by its table.

    mult_table[a][b] is the product a*b on elements 0..n-1. The triples are
    all 3-subsets (a 2-(n,3,n-2) design), [a,b] is right multiplication by
    a^-1 * b, the groupoid is the right regular copy of the group and the
    hole stabilizer is trivial.
    """
    table = [list(map(int, row)) for row in mult_table]
    n = len(table)
    if n < 3:
        raise ValueError("a triple system needs at least 3 points")
    if any(len(row) != n for row in table) or any(
        not 0 <= x < n for row in table for x in row
    ):
        raise ValueError("multiplication table is not square over 0..n-1")
    identity = None
    for e in range(n):
        if all(table[e][a] == a and table[a][e] == a for a in range(n)):
            identity = e
            break
    if identity is None:
        raise ValueError("multiplication table has no identity element")
    inverse = [None] * n
    for a in range(n):
        for b in range(n):
            if table[a][b] == identity and table[b][a] == identity:
                inverse[a] = b
                break
        if inverse[a] is None:
            raise ValueError(f"element {a} has no inverse")
    for a in range(n):
        for b in range(n):
            tab_ab = table[a][b]
            for c in range(n):
                if table[tab_ab][c] != table[a][table[b][c]]:
                    raise ValueError(f"associativity fails at ({a},{b},{c})")

    triples = tuple(combinations(range(n), 3))
    ts = TripleSystem(n, triples, mu=n - 2)
    moves: dict[tuple[int, int], Permutation] = {}
    for a in range(n):
        for b in range(n):
            g = table[inverse[a]][b]  # a^-1 * b
            moves[a, b] = Permutation(tuple(table[x][g] for x in range(n)))
    return PliableFunction(ts, moves, label=f"group:{label}")


PALEY6_LINES = (
    (0, 1, 2),
    (0, 2, 3),
    (0, 3, 4),
    (0, 4, 5),
    (0, 5, 1),
    (1, 2, 4),
    (2, 3, 5),
    (3, 4, 1),
    (4, 5, 2),
    (5, 1, 3),
)


def paley6() -> PliableFunction:
    """The doubled-pair moves of the unique 2-(6,3,2) triple system."""
    ts = TripleSystem(6, PALEY6_LINES, mu=2)
    through: dict[tuple[int, int], list[tuple]] = {}
    for line in ts.triples:
        for pair in combinations(line, 2):
            through.setdefault(pair, []).append(line)
    table: dict[tuple[int, int], Permutation] = {}
    ident = Permutation.identity(6)
    for a in range(6):
        table[a, a] = ident
        for b in range(6):
            if a == b:
                continue
            pair = (a, b) if a < b else (b, a)
            lines = through[pair]
            c, d = (next(x for x in line if x not in pair) for line in lines)
            table[a, b] = Permutation.from_cycles(6, [(a, b), (c, d)])
    return PliableFunction(ts, table, label="paley6")


def _vec_add(x: int, y: int, k: int) -> int:
    out = 0
    power = 1
    for _ in range(k):
        out += ((x % 3 + y % 3) % 3) * power
        x //= 3
        y //= 3
        power *= 3
    return out


def _vec_neg(x: int, k: int) -> int:
    out = 0
    power = 1
    for _ in range(k):
        out += ((3 - x % 3) % 3) * power
        x //= 3
        power *= 3
    return out


def affine_complement(k: int) -> PliableFunction:
    """Moves over the complement of the affine triple design on GF(3)^k.

    Points are vectors (base-3 encoded), triples are the {a,b,c} with
    a+b+c != 0, and [a,b] maps w to a+b-w away from the unique fixed point
    -a-b. Note [a,b] = [c,d] whenever a+b = c+d, and the diagonal moves
    [a,a] are nontrivial involutions fixing a.
    """
    if k < 2:
        raise ValueError("the affine-complement family needs k >= 2")
    n = 3 ** k
    triples = tuple(
        t
        for t in combinations(range(n), 3)
        if _vec_add(_vec_add(t[0], t[1], k), t[2], k) != 0
    )
    ts = TripleSystem(n, triples, mu=n - 3)
    by_sum: dict[int, Permutation] = {}
    for s in range(n):
        imgs = [_vec_add(s, _vec_neg(w, k), k) for w in range(n)]
        by_sum[s] = Permutation(imgs)
    table = {
        (a, b): by_sum[_vec_add(a, b, k)] for a in range(n) for b in range(n)
    }
    return PliableFunction(ts, table, label=f"affine:{k}")


@dataclass
class PrimitivityReport:
    label: str
    n: int
    mu: int
    is_group: bool
    groupoid_order: int
    primitive: bool | None
    status: str  # "passes" | "not-applicable" | "violation"
    sharp_witness: bool  # 2n == 3*mu, the boundary case
    frontier_applicable: bool  # n > mu + 3 and the groupoid is a group
    frontier_counterexample: bool

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "n": self.n,
            "mu": self.mu,
            "is_group": self.is_group,
            "groupoid_order": self.groupoid_order,
            "primitive": self.primitive,
            "status": self.status,
            "sharp_witness": self.sharp_witness,
            "frontier_applicable": self.frontier_applicable,
            "frontier_counterexample": self.frontier_counterexample,
        }


def primitivity_criterion(
    f: PliableFunction, groupoid: ConwayGroupoid | None = None
) -> PrimitivityReport:
    """Check the primitivity law: a group groupoid over a 2-(n,3,mu) system
    with mu > 4 and 2n > 3*mu must be primitive on the points.

    Also reports the exploratory frontier n > mu + 3 without asserting it.
    """
    g = groupoid if groupoid is not None else build_groupoid(f, 0)
    n, mu = f.num_points, f.triple_system.mu
    is_group = groupoid_is_group(g)
    closure = groupoid_group_closure(g)
    primitive = None
    if is_group and closure.is_transitive(range(n)):
        primitive = closure.is_primitive(range(n))
    applicable = mu > 4 and is_group and 2 * n > 3 * mu
    if not applicable:
        status = "not-applicable"
    elif primitive:
        status = "passes"
    else:
        status = "violation"
    frontier_applicable = is_group and n > mu + 3
    return PrimitivityReport(
        label=f.label,
        n=n,
        mu=mu,
        is_group=is_group,
        groupoid_order=closure.order(),
        primitive=primitive,
        status=status,
        sharp_witness=2 * n == 3 * mu,
        frontier_applicable=frontier_applicable,
        frontier_counterexample=bool(frontier_applicable and primitive is False),
    )
