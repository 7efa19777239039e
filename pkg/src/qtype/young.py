"""Young diagrams, their enumeration, and the two dimension formulas.

Diagrams are kept zero-padded to the ambient local dimension ``d`` so that
the GL(d) product formula can index row pairs ``i < j <= d`` directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ConsistencyError


@dataclass(frozen=True, order=True)
class YoungDiagram:
    """Weakly decreasing row lengths, trailing zero rows retained."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative row length in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"rows must be weakly decreasing: {parts}")

    @property
    def size(self) -> int:
        """Number of boxes."""
        return sum(self.parts)

    @property
    def height(self) -> int:
        """Number of nonzero rows."""
        return sum(1 for p in self.parts if p)

    @property
    def trimmed(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p)

    def padded(self, d: int) -> YoungDiagram:
        """Same diagram with exactly ``d`` rows."""
        if self.height > d:
            raise ValueError(f"{self} has height {self.height} > {d}")
        rows = self.trimmed
        return YoungDiagram(rows + (0,) * (d - len(rows)))

    def conjugate(self) -> tuple[int, ...]:
        rows = self.trimmed
        if not rows:
            return ()
        return tuple(sum(1 for r in rows if r > c) for c in range(rows[0]))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.trimmed)) + ")"


@dataclass(frozen=True)
class DiagramFamily:
    """All diagrams with ``n`` boxes and height at most ``d``."""

    n: int
    d: int
    diagrams: tuple[YoungDiagram, ...]

    def __iter__(self) -> Iterator[YoungDiagram]:
        return iter(self.diagrams)

    def __len__(self) -> int:
        return len(self.diagrams)


def _partitions(n: int, rows: int, largest: int) -> Iterator[tuple[int, ...]]:
    # decreasing lexicographic order, exactly `rows` entries (zero padded)
    if n == 0:
        yield (0,) * rows
        return
    if rows == 0:
        return
    for first in range(min(n, largest), -1, -1):
        if first * rows < n:
            break
        for rest in _partitions(n - first, rows - 1, first):
            yield (first,) + rest


def enumerate_diagrams(n: int, d: int) -> DiagramFamily:
    """Partitions of ``n`` into at most ``d`` parts, zero padded to length ``d``.

    Listed in decreasing lexicographic order, e.g. ``(4,0), (3,1), (2,2)``.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    diagrams = tuple(YoungDiagram(p) for p in _partitions(n, d, n))
    return DiagramFamily(n=n, d=d, diagrams=diagrams)


def _as_diagram(shape: YoungDiagram | Sequence[int]) -> YoungDiagram:
    return shape if isinstance(shape, YoungDiagram) else YoungDiagram(tuple(shape))


def schur_weyl_multiplicity(shape: YoungDiagram | Sequence[int], d: int) -> int:
    """Dimension of the GL(d) irrep V_lambda, i.e. the multiplicity of U_lambda.

    prod_{1<=i<j<=d} (lambda_i - lambda_j + j - i) / (j - i), accumulated as one
    numerator and one denominator and divided once at the end.
    """
    rows = _as_diagram(shape).padded(d).parts
    numerator = 1
    denominator = 1
    for i in range(d):
        for j in range(i + 1, d):
            numerator *= rows[i] - rows[j] + j - i
            denominator *= j - i
    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise ConsistencyError(f"Weyl product for {rows} is not an integer")
    return value


def hook_lengths(shape: YoungDiagram | Sequence[int]) -> list[int]:
    diagram = _as_diagram(shape)
    rows = diagram.trimmed
    cols = diagram.conjugate()
    return [
        (r - c - 1) + (cols[c] - i - 1) + 1
        for i, r in enumerate(rows)
        for c in range(r)
    ]


def hook_dimension(shape: YoungDiagram | Sequence[int]) -> int:
    """Dimension of the S_n irrep U_lambda by the hook length formula."""
    diagram = _as_diagram(shape)
    if diagram.size == 0:
        raise ValueError("hook_dimension needs a nonempty diagram")
    value, remainder = divmod(math.factorial(diagram.size), math.prod(hook_lengths(diagram)))
    if remainder:
        raise ConsistencyError(f"hook formula for {diagram} is not an integer")
    return value


def enumerate_ystar(d: int, max_n: int) -> list[YoungDiagram]:
    """Diagrams of height >= 2 (second row nonempty) with 2..max_n boxes.

    Ordered by box count, then as in :func:`enumerate_diagrams`. Extending
    ``max_n`` only appends.
    """
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2, got {max_n}")
    out = []
    for n in range(2, max_n + 1):
        out.extend(lam for lam in enumerate_diagrams(n, d) if d >= 2 and lam.parts[1] != 0)
    return out
