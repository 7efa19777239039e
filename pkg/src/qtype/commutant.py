"""Numerical commutant oracle for permutation actions on (C^d)^{(x)n}.

The commutant E = {a : g^-1 a g = a for all g in G} has an exact basis of
indicator matrices, one per orbit of G acting diagonally on index pairs
(r, c). A generic Hermitian element of E has one eigenvalue cluster per
(block, eigenvalue) pair, with cluster multiplicity equal to the irrep
dimension. Clusters belonging to the same matrix block are exactly those
linked by some element of E, which recovers the Artin-Wedderburn blocks.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .decomp import AlgebraDecomposition, Block
from .errors import CapExceededError, ConsistencyError, DegenerateSpectrumError
from .perm import Permutation, PermutationGroup, basis_permutation, permutation_character

logger = logging.getLogger(__name__)

DEFAULT_CAP = 1024
DEFAULT_TOL = 1e-8
DEFAULT_LINK_TOL = 1e-8
MAX_RESEEDS = 3
N_LINK_PROBES = 2


def default_cap() -> int:
    """Ambient-dimension cap, overridable through ``QTYPE_CAP``."""
    raw = os.environ.get("QTYPE_CAP")
    return int(raw) if raw else DEFAULT_CAP


def _check_cap(group: PermutationGroup, d: int, cap: int | None) -> int:
    cap = default_cap() if cap is None else cap
    ambient = d**group.n
    if ambient > cap:
        raise CapExceededError(f"d**n = {ambient} exceeds cap {cap}")
    return ambient


@dataclass(frozen=True)
class PairOrbit:
    representative: tuple[int, int]
    rows: np.ndarray
    cols: np.ndarray

    @property
    def members(self) -> list[tuple[int, int]]:
        return list(zip(self.rows.tolist(), self.cols.tolist()))

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True, eq=False)
class CommutantBasis:
    """Orbit-indicator basis of the commutant.

    ``labels[r, c]`` is the orbit id of the pair (r, c); ids are numbered by
    first appearance in row-major order, so orbit 0 contains (0, 0).
    """

    labels: np.ndarray
    dimension: int
    ambient: int

    def orbit(self, o: int) -> PairOrbit:
        rows, cols = np.nonzero(self.labels == o)
        return PairOrbit((int(rows[0]), int(cols[0])), rows, cols)

    @property
    def orbits(self) -> list[PairOrbit]:
        return [self.orbit(o) for o in range(self.dimension)]

    def indicator(self, o: int) -> np.ndarray:
        return (self.labels == o).astype(float)

    def combine(self, coefficients: np.ndarray) -> np.ndarray:
        """The commutant element sum_o coefficients[o] * A_o."""
        return np.asarray(coefficients)[self.labels]


def commutant_dimension_via_character(group: PermutationGroup, d: int) -> int:
    """(chi, chi) = (1/|G|) sum_g chi(g)^2 with chi the fixed-ket count."""
    total = sum(permutation_character(g, d) ** 2 for g in group)
    value, remainder = divmod(total, group.order)
    if remainder:
        raise ConsistencyError(f"character inner product {total}/{group.order} is not an integer")
    return value


def pair_orbits(group: PermutationGroup, d: int, cap: int | None = None) -> CommutantBasis:
    """Partition all index pairs into orbits of (r, c) -> (g r, g c)."""
    ambient = _check_cap(group, d, cap)
    gens = [g for g in (group.generators or group.elements) if not g.is_identity()]
    size = ambient * ambient
    pair_ids = np.arange(size, dtype=np.int64).reshape(ambient, ambient)
    src, dst = [], []
    for g in gens:
        p = basis_permutation(g, d)
        src.append(pair_ids.ravel())
        dst.append(pair_ids[np.ix_(p, p)].ravel())
    if src:
        edges = coo_matrix(
            (np.ones(len(gens) * size, dtype=np.int8), (np.concatenate(src), np.concatenate(dst))),
            shape=(size, size),
        )
        _, raw = connected_components(edges, directed=True, connection="weak")
    else:
        raw = np.arange(size)
    # renumber by first appearance so the labelling is canonical
    _, first, inverse = np.unique(raw, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first)] = np.arange(len(first))
    labels = rank[inverse].reshape(ambient, ambient)

    dimension = len(first)
    expected = commutant_dimension_via_character(group, d)
    if dimension != expected:
        raise ConsistencyError(f"{dimension} pair orbits but character identity gives {expected}")
    return CommutantBasis(labels=labels, dimension=dimension, ambient=ambient)


def _hermitian_part(basis: CommutantBasis, rng: np.random.Generator) -> np.ndarray:
    coeffs = rng.uniform(1.0, 2.0, basis.dimension) + 1j * rng.uniform(1.0, 2.0, basis.dimension)
    a = basis.combine(coeffs)
    return (a + a.conj().T) / 2


def generic_element(basis: CommutantBasis, seed: int) -> np.ndarray:
    """A generic Hermitian element of the commutant, deterministic in ``seed``.

    X = (A + A^dagger) / 2 with A = sum_o z_o A_o and z_o having real and
    imaginary parts uniform on [1, 2]. Complex coefficients are required:
    with real ones, blocks of complex-conjugate irreps (e.g. for C_3) get
    identical spectra and cannot be told apart.
    """
    x = _hermitian_part(basis, np.random.default_rng(seed))
    if np.max(np.abs(x - x.conj().T)) >= 1e-12:
        raise ConsistencyError("generic element is not Hermitian")
    return x


@dataclass(frozen=True, eq=False)
class EigenCluster:
    value: float
    vectors: np.ndarray

    @property
    def multiplicity(self) -> int:
        return self.vectors.shape[1]

    @property
    def projector(self) -> np.ndarray:
        return self.vectors @ self.vectors.conj().T


@dataclass(frozen=True)
class SpectralBlock:
    size: int
    irrep_dim: int
    clusters: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class BlockSpectrum:
    clusters: list[EigenCluster]
    components: list[tuple[int, ...]]
    blocks: list[SpectralBlock]
    ambient: int
    commutant_dimension: int
    seed: int = field(default=0)

    def multiset(self) -> list[int]:
        return sorted((b.size for b in self.blocks), reverse=True)

    def pairs(self) -> list[tuple[int, int]]:
        """(m, s) per block, sorted descending."""
        return sorted(((b.size, b.irrep_dim) for b in self.blocks), reverse=True)


def cluster_eigenvalues(values: np.ndarray, tol: float) -> list[slice]:
    """Split ascending eigenvalues wherever the gap exceeds tol * spectral range."""
    spread = float(values[-1] - values[0]) if len(values) else 0.0
    threshold = tol * (spread if spread > 0 else 1.0)
    cuts = np.nonzero(np.diff(values) > threshold)[0] + 1
    edges = [0, *cuts.tolist(), len(values)]
    return [slice(a, b) for a, b in zip(edges, edges[1:])]


def _link_components(
    basis: CommutantBasis,
    vectors: np.ndarray,
    slices: list[slice],
    rng: np.random.Generator,
    link_tol: float,
) -> list[tuple[int, ...]]:
    # Linkage by random probe elements of E: P_i B P_j vanishes for a generic B
    # iff it vanishes for every orbit indicator, and probing avoids one
    # N^3 product per orbit.
    k = len(slices)
    starts = np.array([s.start for s in slices])
    linked = np.zeros((k, k), dtype=bool)
    for _ in range(N_LINK_PROBES):
        coeffs = rng.uniform(1.0, 2.0, basis.dimension) + 1j * rng.uniform(1.0, 2.0, basis.dimension)
        coupling = np.abs(vectors.conj().T @ basis.combine(coeffs) @ vectors)
        threshold = link_tol * max(1.0, float(coupling.max()))
        strongest = np.maximum.reduceat(np.maximum.reduceat(coupling, starts, axis=0), starts, axis=1)
        linked |= strongest > threshold
    graph = linked | linked.T
    count, assignment = connected_components(graph, directed=False)
    comps: list[list[int]] = [[] for _ in range(count)]
    for i, c in enumerate(assignment):
        comps[c].append(i)
    return [tuple(c) for c in comps]


def _attempt(
    basis: CommutantBasis, seed: int, attempt: int, tol: float, link_tol: float
) -> BlockSpectrum | None:
    if attempt == 0:
        x = generic_element(basis, seed)
        probe_rng = np.random.default_rng([seed, 0x5EED])
    else:
        rng = np.random.default_rng([seed, attempt])
        x = _hermitian_part(basis, rng)
        probe_rng = rng
    values, vectors = np.linalg.eigh(x)
    slices = cluster_eigenvalues(values, tol)
    clusters = [EigenCluster(float(values[s].mean()), vectors[:, s]) for s in slices]
    components = _link_components(basis, vectors, slices, probe_rng, link_tol)

    blocks = []
    for comp in components:
        mults = {clusters[i].multiplicity for i in comp}
        if len(mults) != 1:
            logger.debug("seed %s attempt %s: unequal multiplicities %s", seed, attempt, mults)
            return None
        blocks.append(SpectralBlock(size=len(comp), irrep_dim=mults.pop(), clusters=comp))
    if sum(b.size * b.irrep_dim for b in blocks) != basis.ambient:
        return None
    if sum(b.size**2 for b in blocks) != basis.dimension:
        logger.debug("seed %s attempt %s: sum m^2 mismatch", seed, attempt)
        return None
    return BlockSpectrum(
        clusters=clusters,
        components=components,
        blocks=blocks,
        ambient=basis.ambient,
        commutant_dimension=basis.dimension,
        seed=seed,
    )


def decompose(
    group: PermutationGroup,
    d: int,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    link_tol: float = DEFAULT_LINK_TOL,
    cap: int | None = None,
    basis: CommutantBasis | None = None,
) -> BlockSpectrum:
    """Recover the block structure of the commutant numerically.

    Retries with fresh randomness up to three times when the spectrum is
    accidentally degenerate, then raises :class:`DegenerateSpectrumError`.
    """
    if basis is None:
        basis = pair_orbits(group, d, cap)
    else:
        _check_cap(group, d, cap)
    for attempt in range(MAX_RESEEDS + 1):
        spectrum = _attempt(basis, seed, attempt, tol, link_tol)
        if spectrum is not None:
            return spectrum
    raise DegenerateSpectrumError(
        f"could not separate blocks for d={d}, |G|={group.order} after {MAX_RESEEDS} reseeds"
    )


def subgroup_decomposition(
    group: PermutationGroup,
    d: int,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    cap: int | None = None,
) -> AlgebraDecomposition:
    """The quotient-type algebra for an arbitrary G <= S_n, via :func:`decompose`.

    Blocks are ordered by (size, irrep dimension) descending and labelled by
    their position in that order, so the output does not depend on ``seed``.
    """
    spectrum = decompose(group, d, seed=seed, tol=tol, cap=cap)
    blocks = tuple(
        Block(dimension=m, label=i, irrep_dim=s) for i, (m, s) in enumerate(spectrum.pairs())
    )
    return AlgebraDecomposition(kind="subgroup", n=group.n, d=d, blocks=blocks)


def conjugation_invariant(basis: CommutantBasis, perm: Permutation, d: int) -> bool:
    """Whether rho(g)^-1 A_o rho(g) = A_o for every orbit indicator at once.

    Conjugation by a basis permutation p is the entry remap A[r, c] -> A[p r, p c],
    so no permutation matrix is built.
    """
    p = basis_permutation(perm, d)
    return bool(np.array_equal(basis.labels[np.ix_(p, p)], basis.labels))
