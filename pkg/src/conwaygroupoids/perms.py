"""Permutations of {0, ..., n-1} with left-to-right composition.

The product convention matches the way moves chain in the counter puzzle:
``p * q`` applies ``p`` first and then ``q``, so ``(p * q)(x) == q(p(x))``.
All structures carry an explicit degree and points are 0-based.
"""

from __future__ import annotations

from math import lcm


class Permutation:
    """Immutable bijection on 0..n-1, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images) -> None:
        imgs = tuple(images)
        n = len(imgs)
        seen = bytearray(n)
        for x in imgs:
            if not isinstance(x, int) or not 0 <= x < n or seen[x]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {imgs!r}")
            seen[x] = 1
        self.images = imgs

    @classmethod
    def _raw(cls, imgs: tuple) -> "Permutation":
        """Wrap an already-validated image tuple without rechecking."""
        p = object.__new__(cls)
        p.images = imgs
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(4, [(0, 1), (2, 3)])``."""
        imgs = list(range(degree))
        touched = set()
        for cycle in cycles:
            for a in cycle:
                if a in touched:
                    raise ValueError(f"cycles are not disjoint at point {a}")
                touched.add(a)
            for a, b in zip(cycle, cycle[1:]):
                imgs[a] = b
            if cycle:
                imgs[cycle[-1]] = cycle[0]
        return cls(imgs)

    @classmethod
    def from_json(cls, data: dict) -> "Permutation":
        imgs = data["images"]
        if data.get("degree", len(imgs)) != len(imgs):
            raise ValueError("degree does not match image list")
        return cls(imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        a, b = self.images, other.images
        if len(a) != len(b):
            raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
        return Permutation._raw(tuple(b[x] for x in a))

    def __pow__(self, e: int) -> "Permutation":
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.degree)
        square = self
        while e:
            if e & 1:
                result = result * square
            square = square * square
            e >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return ``by^-1 * self * by``."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.images) if i != x)

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.images) if i == x)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        out = []
        seen = bytearray(len(self.images))
        for i, x in enumerate(self.images):
            if seen[i] or x == i:
                continue
            cycle = [i]
            j = x
            while j != i:
                seen[j] = 1
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def sign(self) -> int:
        """+1 for even permutations, -1 for odd."""
        swaps = sum(len(c) - 1 for c in self.cycles())
        return -1 if swaps & 1 else 1

    def parity(self) -> str:
        return "even" if self.sign() == 1 else "odd"

    def apply_to_tuple(self, points: tuple[int, ...]) -> tuple[int, ...]:
        imgs = self.images
        return tuple(imgs[x] for x in points)

    def to_json(self) -> dict:
        return {"degree": self.degree, "images": list(self.images)}

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


def product(perms, degree: int | None = None) -> Permutation:
    """Left-to-right product of a sequence of permutations."""
    result = None
    for p in perms:
        result = p if result is None else result * p
    if result is None:
        if degree is None:
            raise ValueError("empty product needs an explicit degree")
        return Permutation.identity(degree)
    return result
