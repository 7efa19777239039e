"""Closed-form block decompositions of the quotient-type algebras.

Each function returns an :class:`AlgebraDecomposition`, a list of matrix
blocks ``M_m`` with labels. For unordered words the infinite-dimensional
``B(l^2)`` summand is only a flag and the product over Y* is truncated.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Any

from .errors import ConsistencyError, RoundingError
from .numtheory import divisors, is_prime, ramanujan_sum_holder, totient
from .young import (
    YoungDiagram,
    enumerate_diagrams,
    enumerate_ystar,
    hook_dimension,
    schur_weyl_multiplicity,
)

KINDS: tuple[str, ...] = ("unordered", "cycle", "words", "subgroup")

Label = YoungDiagram | int


@dataclass(frozen=True)
class Block:
    """One summand ``M_dimension``.

    ``label`` is a YoungDiagram (unordered, words), the character index k
    (cycle) or a component index (subgroup). ``irrep_dim`` is the dimension of
    the group irrep the block belongs to, when known.
    """

    dimension: int
    label: Label
    irrep_dim: int | None = None


@dataclass(frozen=True)
class AlgebraDecomposition:
    kind: str
    d: int
    blocks: tuple[Block, ...]
    n: int | None = None
    truncated_at: int | None = None
    bounded_operators_summand: bool = False
    # character indices k whose multiplicity vanished (cycle kind only)
    zero_blocks: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if any(b.dimension < 1 for b in self.blocks):
            raise ConsistencyError("every block must have dimension >= 1")

    @property
    def dimensions(self) -> list[int]:
        return [b.dimension for b in self.blocks]

    def multiset(self) -> list[int]:
        """Block dimensions sorted descending; order-independent comparison key."""
        return sorted(self.dimensions, reverse=True)

    def algebra_dimension(self) -> int:
        """Sum of m**2 over the finite blocks."""
        return sum(m * m for m in self.dimensions)

    def render(self, ascii: bool = False) -> str:
        """One-line algebra, e.g. ``M_4 ⊕ M_2 ⊕ M_2``."""
        plus = " (+) " if ascii else " ⊕ "
        terms = [f"M_{m}" for m in self.dimensions]
        if self.bounded_operators_summand:
            terms.insert(0, "B(l^2)" if ascii else "B(ℓ²)")
        return plus.join(terms) if terms else "0"

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind}
        if self.n is not None:
            out["n"] = self.n
        out["d"] = self.d
        if self.truncated_at is not None:
            out["truncated_at"] = self.truncated_at
        out["boundedoperators_summand"] = self.bounded_operators_summand
        out["blocks"] = [_block_to_dict(self.kind, b) for b in self.blocks]
        if self.zero_blocks:
            out["diagnostics"] = {"zero_blocks": [{"k": k} for k in self.zero_blocks]}
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> AlgebraDecomposition:
        kind = data["kind"]
        diagnostics = data.get("diagnostics", {})
        return cls(
            kind=kind,
            d=int(data["d"]),
            n=data.get("n"),
            truncated_at=data.get("truncated_at"),
            bounded_operators_summand=bool(data["boundedoperators_summand"]),
            blocks=tuple(_block_from_dict(kind, b) for b in data["blocks"]),
            zero_blocks=tuple(int(z["k"]) for z in diagnostics.get("zero_blocks", [])),
        )


def _block_to_dict(kind: str, block: Block) -> dict[str, Any]:
    out: dict[str, Any] = {"dim": block.dimension}
    if isinstance(block.label, YoungDiagram):
        out["label"] = list(block.label.parts)
    elif kind == "cycle":
        out["label"] = {"k": block.label}
    else:
        out["label"] = {"component": block.label}
    if block.irrep_dim is not None:
        out["irrep_dim"] = block.irrep_dim
    return out


def _block_from_dict(kind: str, data: dict[str, Any]) -> Block:
    raw = data["label"]
    label: Label
    if isinstance(raw, list):
        label = YoungDiagram(tuple(raw))
    elif "k" in raw:
        label = int(raw["k"])
    else:
        label = int(raw["component"])
    return Block(dimension=int(data["dim"]), label=label, irrep_dim=data.get("irrep_dim"))


def _check_args(n: int, d: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")


def unordered_tuple(n: int, d: int) -> AlgebraDecomposition:
    """Unordered n-tuple of d-level systems: one block M_{m_lambda} per lambda in Y_n."""
    _check_args(n, d)
    blocks = tuple(
        Block(schur_weyl_multiplicity(lam, d), lam, hook_dimension(lam))
        for lam in enumerate_diagrams(n, d)
    )
    return AlgebraDecomposition(kind="unordered", n=n, d=d, blocks=blocks)


def qubit_closed_form(n: int) -> AlgebraDecomposition:
    """Unordered n-tuple of qubits: M_1, M_3, ..., M_{n+1} (n even) or M_2, ..., M_{n+1} (n odd).

    Labelled by the two-row diagram (n - j, j) whose multiplicity is n - 2j + 1,
    listed smallest block first.
    """
    _check_args(n, 2)
    blocks = tuple(
        Block(n - 2 * j + 1, YoungDiagram((n - j, j)))
        for j in range(n // 2, -1, -1)
    )
    return AlgebraDecomposition(kind="unordered", n=n, d=2, blocks=blocks)


def cycle_multiplicities(n: int, d: int) -> list[int]:
    """c_k for k = 0..n-1 via Hoelder's closed form for Ramanujan sums; zeros kept."""
    _check_args(n, d)
    out = []
    for k in range(n):
        total = sum(d ** (n // l) * ramanujan_sum_holder(l, k) for l in divisors(n))
        c_k, remainder = divmod(total, n)
        if remainder or c_k < 0:
            raise ConsistencyError(f"cycle multiplicity for n={n}, d={d}, k={k} is {total}/{n}")
        out.append(c_k)
    return out


def cycle(n: int, d: int) -> AlgebraDecomposition:
    """n-cycle of d-level systems: M_{c_k} for each character k of C_n with c_k > 0."""
    mults = cycle_multiplicities(n, d)
    blocks = tuple(Block(c, k, 1) for k, c in enumerate(mults) if c > 0)
    zeros = tuple(k for k, c in enumerate(mults) if c == 0)
    return AlgebraDecomposition(kind="cycle", n=n, d=d, blocks=blocks, zero_blocks=zeros)


def cycle_dft_oracle(n: int, d: int) -> list[int]:
    """Multiplicities (1/n) sum_j omega^{jk} d^gcd(j,n), as a literal complex sum."""
    _check_args(n, d)
    chi = [d ** math.gcd(j, n) for j in range(n)]
    tol = 1e-6 * d**n
    out = []
    for k in range(n):
        value = sum(cmath.exp(2j * cmath.pi * ((j * k) % n) / n) * chi[j] for j in range(n)) / n
        nearest = round(value.real)
        if abs(value.imag) >= tol or abs(value.real - nearest) >= tol:
            raise RoundingError(f"DFT multiplicity {value} for n={n}, d={d}, k={k} is not integral")
        out.append(nearest)
    return out


def cycle_prime_closed_form(n: int, d: int) -> list[int]:
    """For prime n: (d^n + (n-1)d)/n for k = 0, and (d^n - d)/n for each k > 0."""
    if not is_prime(n):
        raise ValueError(f"n must be prime, got {n}")
    _check_args(n, d)
    trivial, r0 = divmod(d**n + (n - 1) * d, n)
    other, r1 = divmod(d**n - d, n)
    if r0 or r1:
        raise ConsistencyError(f"prime closed form inexact for n={n}, d={d}")
    return [trivial] + [other] * (n - 1)


def necklace_count(n: int, d: int) -> int:
    """Necklaces of n beads in d colours up to rotation: (1/n) sum_{l|n} d^l phi(n/l)."""
    _check_args(n, d)
    count, remainder = divmod(sum(d**l * totient(n // l) for l in divisors(n)), n)
    if remainder:
        raise ConsistencyError(f"necklace sum for n={n}, d={d} not divisible by n")
    return count


def unordered_words(d: int, max_n: int) -> AlgebraDecomposition:
    """B(l^2) plus M_{m_lambda} for lambda in Y*, truncated at ``max_n`` boxes."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    blocks = tuple(Block(schur_weyl_multiplicity(lam, d), lam) for lam in enumerate_ystar(d, max_n))
    return AlgebraDecomposition(
        kind="words",
        d=d,
        blocks=blocks,
        truncated_at=max_n,
        bounded_operators_summand=True,
    )
