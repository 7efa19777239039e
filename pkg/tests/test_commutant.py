import numpy as np
import pytest

from qtype import commutant
from qtype.commutant import (
    cluster_eigenvalues,
    commutant_dimension_via_character,
    conjugation_invariant,
    decompose,
    generic_element,
    pair_orbits,
    subgroup_decomposition,
)
from qtype.decomp import cycle, unordered_tuple
from qtype.errors import CapExceededError, DegenerateSpectrumError
from qtype.perm import (
    Permutation,
    basis_permutation,
    close_group,
    cyclic_group,
    parse_generators,
    symmetric_group,
    trivial_group,
)


def _rho(perm, d):
    """Dense permutation matrix with rho e_x = e_{p(x)}."""
    p = basis_permutation(perm, d)
    m = np.zeros((len(p), len(p)))
    m[p, np.arange(len(p))] = 1
    return m


def _commutant_dim_by_linear_algebra(group, d):
    """dim {a : rho(g) a = a rho(g)} as the null space of the stacked commutators."""
    N = d**group.n
    eye = np.eye(N)
    rows = [np.kron(_rho(g, d), eye) - np.kron(eye, _rho(g, d).T) for g in group.generators]
    if not rows:
        return N * N
    return N * N - np.linalg.matrix_rank(np.vstack(rows))


def _dihedral(n):
    return close_group(
        [Permutation(tuple((i + 1) % n for i in range(n))), Permutation(tuple((-i) % n for i in range(n)))]
    )


@pytest.mark.parametrize(
    "group, d, expected",
    [(symmetric_group(2), 2, 10), (cyclic_group(3), 2, 24), (trivial_group(2), 3, 81)],
    ids=["S2", "C3", "trivial"],
)
def test_pair_orbit_examples(group, d, expected):
    basis = pair_orbits(group, d)
    assert basis.dimension == expected
    assert commutant_dimension_via_character(group, d) == expected


def test_character_dimension_examples():
    assert commutant_dimension_via_character(symmetric_group(2), 2) == 10
    assert commutant_dimension_via_character(cyclic_group(3), 2) == 24
    for d in range(1, 6):
        assert commutant_dimension_via_character(trivial_group(1), d) == d * d


_SMALL_GROUPS = {
    "S2": symmetric_group(2),
    "S3": symmetric_group(3),
    "C3": cyclic_group(3),
    "C4": cyclic_group(4),
    "D4": _dihedral(4),
    "trivial": trivial_group(2),
}


@pytest.mark.parametrize(
    "name, d",
    # the dense null-space oracle works on N^2 x N^2 matrices; keep N <= 27
    [(name, d) for name, g in _SMALL_GROUPS.items() for d in (1, 2, 3) if d**g.n <= 27],
)
def test_orbit_count_matches_linear_algebra(name, d):
    group = _SMALL_GROUPS[name]
    assert pair_orbits(group, d).dimension == _commutant_dim_by_linear_algebra(group, d)


def test_orbits_partition_all_pairs():
    basis = pair_orbits(cyclic_group(3), 2)
    orbits = basis.orbits
    assert sum(len(o) for o in orbits) == 64
    members = {pair for o in orbits for pair in o.members}
    assert len(members) == 64
    assert orbits[0].representative == (0, 0)


def test_orbit_indicators_commute_with_group():
    # the defining equalizer property, checked with explicit matrices
    group = cyclic_group(3)
    basis = pair_orbits(group, 2)
    for g in group:
        rho = _rho(g, 2)
        for o in range(basis.dimension):
            a = basis.indicator(o)
            assert np.array_equal(rho.T @ a @ rho, a)


def test_equalizer_membership_exhaustive():
    groups = [symmetric_group(n) for n in range(1, 5)] + [cyclic_group(n) for n in range(1, 9)] + [_dihedral(4)]
    checked = 0
    for group in groups:
        if group.order > 24:
            continue
        for d in range(1, 5):
            if d**group.n > 256:
                continue
            basis = pair_orbits(group, d)
            for g in group:
                assert conjugation_invariant(basis, g, d)
                checked += 1
    assert checked > 100


def test_non_member_detected():
    basis = pair_orbits(cyclic_group(3), 2)
    assert not conjugation_invariant(basis, Permutation.parse("(1 2)", 3), 2)


def test_generic_element_properties():
    group = symmetric_group(2)
    basis = pair_orbits(group, 2)
    x = generic_element(basis, 0)
    sigma = _rho(Permutation.parse("(1 2)"), 2)
    assert np.max(np.abs(x @ sigma - sigma @ x)) < 1e-12
    assert np.max(np.abs(x - x.conj().T)) < 1e-12
    assert np.array_equal(x, generic_element(basis, 0))
    assert not np.array_equal(x, generic_element(basis, 1))


def test_generic_element_is_constant_on_orbits():
    basis = pair_orbits(cyclic_group(4), 2)
    x = generic_element(basis, 3)
    for o in range(basis.dimension):
        values = x[basis.labels == o]
        assert np.allclose(values, values[0], atol=1e-14)


def test_generic_element_trivial_group():
    basis = pair_orbits(trivial_group(2), 2)
    x = generic_element(basis, 7)
    assert x.shape == (4, 4)
    assert len(np.unique(np.round(np.linalg.eigvalsh(x), 10))) == 4


@pytest.mark.parametrize(
    "group, d, expected",
    [
        (symmetric_group(2), 2, [(3, 1), (1, 1)]),
        (cyclic_group(3), 2, [(4, 1), (2, 1), (2, 1)]),
        (symmetric_group(3), 2, [(4, 1), (2, 2)]),
    ],
    ids=["S2", "C3", "S3"],
)
def test_decompose_examples(group, d, expected):
    spectrum = decompose(group, d)
    assert spectrum.pairs() == expected
    assert sum(m * s for m, s in spectrum.pairs()) == d**group.n


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_oracle_matches_schur_weyl(n, d):
    group = symmetric_group(n)
    spectrum = decompose(group, d)
    expected = unordered_tuple(n, d)
    assert spectrum.multiset() == expected.multiset()
    assert spectrum.pairs() == sorted(((b.dimension, b.irrep_dim) for b in expected.blocks), reverse=True)
    assert sum(b.size**2 for b in spectrum.blocks) == commutant_dimension_via_character(group, d)


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_oracle_matches_cycle_formula(n, d):
    assert decompose(cyclic_group(n), d).multiset() == cycle(n, d).multiset()


def test_dihedral_group():
    # D_4 on 4 qubits: 6 necklaces up to rotation and reflection, irreps of dim 1 and 2
    spectrum = decompose(_dihedral(4), 2)
    assert sum(m * s for m, s in spectrum.pairs()) == 16
    assert max(m for m, s in spectrum.pairs() if s == 1) == 6


def test_seed_invariance():
    for group, d in [(symmetric_group(4), 2), (cyclic_group(5), 2), (_dihedral(4), 2), (symmetric_group(3), 3)]:
        results = [decompose(group, d, seed=s) for s in (0, 1, 2)]
        assert results[0].pairs() == results[1].pairs() == results[2].pairs()
        values = [tuple(c.value for c in r.clusters) for r in results]
        assert values[0] != values[1]


def test_cluster_multiplicities_equal_within_component():
    spectrum = decompose(symmetric_group(4), 2)
    for comp, block in zip(spectrum.components, spectrum.blocks):
        assert {spectrum.clusters[i].multiplicity for i in comp} == {block.irrep_dim}


def test_projectors_are_orthogonal():
    spectrum = decompose(cyclic_group(3), 2)
    total = sum(c.projector for c in spectrum.clusters)
    assert np.allclose(total, np.eye(8), atol=1e-10)


def test_cluster_eigenvalues():
    values = np.array([0.0, 1e-12, 1.0, 1.0 + 1e-12, 2.0])
    assert [(s.start, s.stop) for s in cluster_eigenvalues(values, 1e-8)] == [(0, 2), (2, 4), (4, 5)]


def test_cap_exceeded():
    with pytest.raises(CapExceededError):
        pair_orbits(symmetric_group(3), 11)
    with pytest.raises(CapExceededError):
        decompose(cyclic_group(5), 4, cap=100)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("QTYPE_CAP", "10")
    with pytest.raises(CapExceededError):
        pair_orbits(cyclic_group(4), 2)
    monkeypatch.setenv("QTYPE_CAP", "4096")
    assert pair_orbits(cyclic_group(11), 2).ambient == 2048


def test_degenerate_spectrum_after_reseeds(monkeypatch):
    calls = []

    def always_fails(basis, seed, attempt, tol, link_tol):
        calls.append(attempt)
        return None

    monkeypatch.setattr(commutant, "_attempt", always_fails)
    with pytest.raises(DegenerateSpectrumError):
        decompose(cyclic_group(3), 2)
    assert calls == [0, 1, 2, 3]


def test_reseed_recovers_from_one_bad_draw(monkeypatch):
    real = commutant._attempt

    def first_fails(basis, seed, attempt, tol, link_tol):
        return None if attempt == 0 else real(basis, seed, attempt, tol, link_tol)

    monkeypatch.setattr(commutant, "_attempt", first_fails)
    assert decompose(symmetric_group(3), 2).pairs() == [(4, 1), (2, 2)]


def test_subgroup_decomposition():
    group = close_group(parse_generators("(1 2 3)", 3))
    result = subgroup_decomposition(group, 2)
    assert result.kind == "subgroup"
    assert result.dimensions == [4, 2, 2]
    assert [b.label for b in result.blocks] == [0, 1, 2]
    assert subgroup_decomposition(group, 2, seed=5) == result
