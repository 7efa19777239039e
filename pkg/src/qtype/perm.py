"""Permutations, finite permutation groups, and their action on tensor-power bases.

Points are 0-based internally and 1-based in every piece of text, so
``Permutation.parse("(1 2 3)", 3)`` maps 0 -> 1 -> 2 -> 0.

A permutation pi acts on basis kets by moving the digit at position i to
position pi(i), i.e. ``|i_1 ... i_n> -> |i_{pi^-1(1)} ... i_{pi^-1(n)}>``.
This is a left action: acting by ``pi * tau`` equals acting by tau, then pi.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ConsistencyError, GroupOrderExceeded

DEFAULT_MAX_ORDER = 10080


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images) - 1}: {images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        """Build from 1-based disjoint cycles."""
        images = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            pts = [int(p) - 1 for p in cycle]
            for p in pts:
                if not 0 <= p < n:
                    raise ValueError(f"point {p + 1} outside 1..{n}")
                if p in seen:
                    raise ValueError(f"point {p + 1} appears in two cycles")
                seen.add(p)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Permutation:
        """Parse cycle notation ``"(1 2 3)(4 5)"`` or one-line notation ``"2 3 1 5 4"``.

        Cycle notation needs ``n`` unless the largest point mentioned is meant to be n.
        ``"()"`` is the identity.
        """
        text = text.strip()
        if text.startswith("("):
            if not re.fullmatch(r"(\(\s*(\d+[\s,]*)*\)\s*)+", text):
                raise ValueError(f"malformed cycle notation: {text!r}")
            cycles = [
                [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
                for body in re.findall(r"\(([^()]*)\)", text)
            ]
            largest = max((p for c in cycles for p in c), default=0)
            size = largest if n is None else n
            if largest > size:
                raise ValueError(f"point {largest} outside 1..{size}")
            return cls.from_cycles(cycles, size)
        tokens = [tok for tok in re.split(r"[\s,]+", text) if tok]
        if not tokens or not all(tok.isdigit() for tok in tokens):
            raise ValueError(f"malformed permutation: {text!r}")
        if n is not None and len(tokens) != n:
            raise ValueError(f"one-line notation has {len(tokens)} points, expected {n}")
        return cls(tuple(int(tok) - 1 for tok in tokens))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``(self * other)(i) = self(other(i))``."""
        if other.n != self.n:
            raise ValueError("permutations act on different point sets")
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.n)
        for _ in range(abs(k)):
            result = base * result
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles (0-based), fixed points included as 1-cycles."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.images[i]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.n else 1

    def __str__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in nontrivial)

    def one_line(self) -> str:
        return " ".join(str(i + 1) for i in self.images)


def cycle_count(perm: Permutation) -> int:
    """Number of cycles of ``perm``, fixed points counted as 1-cycles."""
    return len(perm.cycles())


def permutation_character(perm: Permutation, d: int) -> int:
    """Number of basis kets of (C^d)^{(x)n} fixed by ``perm``: d ** cycles."""
    return d ** cycle_count(perm)


def act_on_index(perm: Permutation, digits: Sequence[int]) -> tuple[int, ...]:
    """Output digit at position j is the input digit at position perm^-1(j)."""
    if len(digits) != perm.n:
        raise ValueError(f"index has {len(digits)} digits, permutation acts on {perm.n}")
    out = [0] * perm.n
    for i, v in enumerate(digits):
        out[perm.images[i]] = v
    return tuple(out)


def digits_to_index(digits: Sequence[int], d: int) -> int:
    """Big-endian base-d encoding: the first digit is most significant."""
    index = 0
    for v in digits:
        if not 0 <= v < d:
            raise ValueError(f"digit {v} outside [0, {d})")
        index = index * d + v
    return index


def index_to_digits(index: int, n: int, d: int) -> tuple[int, ...]:
    if not 0 <= index < d**n:
        raise ValueError(f"index {index} outside [0, {d}**{n})")
    digits = [0] * n
    for pos in range(n - 1, -1, -1):
        index, digits[pos] = divmod(index, d)
    return tuple(digits)


def basis_permutation(perm: Permutation, d: int) -> np.ndarray:
    """Vectorized :func:`act_on_index` over all d**n basis indices.

    Returns ``p`` with ``p[x]`` the integer index of ``perm`` applied to ket ``x``.
    """
    n = perm.n
    grid = np.indices((d,) * n).reshape(n, -1) if n else np.zeros((0, 1), dtype=np.int64)
    moved = np.empty_like(grid)
    moved[list(perm.images)] = grid
    weights = d ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (weights @ moved).astype(np.int64)


@dataclass(frozen=True)
class PermutationGroup:
    n: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, perm: object) -> bool:
        return perm in set(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)


def close_group(
    generators: Sequence[Permutation],
    max_order: int = DEFAULT_MAX_ORDER,
    n: int | None = None,
) -> PermutationGroup:
    """Breadth-first closure of ``generators`` under composition.

    Element order is the BFS insertion order starting from the identity with
    generators applied in sorted order, so it is deterministic.
    """
    gens = tuple(generators)
    sizes = {g.n for g in gens}
    if n is not None:
        sizes.add(n)
    if len(sizes) > 1:
        raise ValueError(f"generators act on different point sets: {sorted(sizes)}")
    if not sizes:
        raise ValueError("need at least one generator or an explicit n")
    (points,) = sizes

    ordered = sorted(set(gens))
    identity = Permutation.identity(points)
    seen = {identity}
    elements = [identity]
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in ordered:
            nxt = current * g
            if nxt not in seen:
                seen.add(nxt)
                elements.append(nxt)
                if len(elements) > max_order:
                    raise GroupOrderExceeded(f"group order exceeds max_order={max_order}")
                queue.append(nxt)

    # right multiplication by generators is closed by construction; for a finite
    # set that already implies a group, but check inverses and Lagrange anyway
    if any(e.inverse() not in seen for e in elements):
        raise ConsistencyError("closure is missing inverses")
    if math.factorial(points) % len(elements):
        raise ConsistencyError(f"order {len(elements)} does not divide {points}!")
    return PermutationGroup(n=points, elements=tuple(elements), generators=gens)


def parse_generators(text: str, n: int) -> list[Permutation]:
    """Split a generator list separated by ``;`` (or juxtaposed cycle groups).

    ``"(1 2 3); (1 2)"`` gives two generators, whereas ``"(1 2)(3 4)"`` is one.
    """
    return [Permutation.parse(chunk, n) for chunk in text.split(";") if chunk.strip()]


def trivial_group(n: int) -> PermutationGroup:
    return close_group([], n=n)


def cyclic_group(n: int) -> PermutationGroup:
    """C_n generated by the rotation i -> i+1 (mod n)."""
    return close_group([Permutation(tuple((i + 1) % n for i in range(n)))], n=n)


def symmetric_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> PermutationGroup:
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles([(1, 2)], n))
    if n >= 3:
        gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
    return close_group(gens, max_order=max_order, n=n)
