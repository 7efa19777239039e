"""Cross-check suites: closed forms against tables, oracles and identities.

Each suite returns a list of :class:`Check` results; nothing raises on a
mismatch, so a report always covers every case.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from . import commutant, decomp
from .errors import QTypeError
from .numtheory import divisors, is_prime, moebius, ramanujan_sum_direct, ramanujan_sum_holder, totient
from .perm import cyclic_group, symmetric_group
from .tables import REFERENCE_TABLES, build_table
from .young import enumerate_diagrams, hook_dimension, schur_weyl_multiplicity

SUITES = ("tables", "oracle", "cycles", "identities")


@dataclass
class Limits:
    oracle_d_max: int = 3
    oracle_n_max: int = 5
    oracle_extra: tuple[tuple[int, int], ...] = ((2, 6),)  # (d, n) pairs for S_n only
    cycle_n_max: int = 12
    cycle_d_max: int = 5
    completeness_d_max: int = 6
    completeness_n_max: int = 8
    arithmetic_n_max: int = 200
    ramanujan_max: int = 64
    qubit_n_max: int = 20
    seed: int = 0


@dataclass
class Check:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, what: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(what)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out


def _roundtrips(result: decomp.AlgebraDecomposition) -> bool:
    text = json.dumps(result.to_dict())
    return decomp.AlgebraDecomposition.from_dict(json.loads(text)) == result


def suite_tables(limits: Limits | None = None) -> list[Check]:
    check = Check("reference tables (pairs, triples, quads; d = 2..10)")
    for which, rows in REFERENCE_TABLES.items():
        computed = build_table(which, min(rows), max(rows)).rows
        for d, expected in rows.items():
            check.expect(computed[d] == expected, f"{which} d={d}: {computed[d]} != {expected}")
    return [check]


def suite_oracle(limits: Limits | None = None) -> list[Check]:
    limits = limits or Limits()
    sym = Check("commutant oracle over S_n == Schur-Weyl blocks")
    dims = Check("sum m^2 == character inner product")
    cyc = Check("commutant oracle over C_n == cycle blocks")
    trip = Check("subgroup JSON round-trip")
    grid = [(d, n) for d in range(1, limits.oracle_d_max + 1) for n in range(1, limits.oracle_n_max + 1)]
    for d, n in grid + [p for p in limits.oracle_extra if p not in grid]:
        group = symmetric_group(n)
        try:
            spectrum = commutant.decompose(group, d, seed=limits.seed)
        except QTypeError as exc:
            sym.expect(False, f"S_{n} d={d}: {exc}")
            continue
        expected = decomp.unordered_tuple(n, d)
        sym.expect(spectrum.multiset() == expected.multiset(), f"S_{n} d={d}: {spectrum.multiset()}")
        # irrep dimensions must match the hook formula too
        pairs = sorted(((b.dimension, b.irrep_dim) for b in expected.blocks), reverse=True)
        sym.expect(spectrum.pairs() == pairs, f"S_{n} d={d}: (m, s) {spectrum.pairs()} != {pairs}")
        dims.expect(
            sum(b.size**2 for b in spectrum.blocks) == commutant.commutant_dimension_via_character(group, d),
            f"S_{n} d={d}",
        )
    for d, n in grid:
        group = cyclic_group(n)
        try:
            result = commutant.subgroup_decomposition(group, d, seed=limits.seed)
        except QTypeError as exc:
            cyc.expect(False, f"C_{n} d={d}: {exc}")
            continue
        cyc.expect(result.multiset() == decomp.cycle(n, d).multiset(), f"C_{n} d={d}: {result.multiset()}")
        dims.expect(
            result.algebra_dimension() == commutant.commutant_dimension_via_character(group, d),
            f"C_{n} d={d}",
        )
        trip.expect(_roundtrips(result), f"C_{n} d={d}")
    return [sym, cyc, dims, trip]


def suite_cycles(limits: Limits | None = None) -> list[Check]:
    limits = limits or Limits()
    dft = Check("Hoelder closed form == DFT character sum")
    prime = Check("prime closed form == cycle")
    neck = Check("necklace count == trivial multiplicity")
    total = Check("sum_k c_k == d^n")
    trip = Check("cycle JSON round-trip")
    for n in range(1, limits.cycle_n_max + 1):
        for d in range(1, limits.cycle_d_max + 1):
            mults = decomp.cycle_multiplicities(n, d)
            try:
                oracle = decomp.cycle_dft_oracle(n, d)
            except QTypeError as exc:
                dft.expect(False, f"n={n} d={d}: {exc}")
            else:
                dft.expect(mults == oracle, f"n={n} d={d}: {mults} != {oracle}")
            if is_prime(n):
                closed = decomp.cycle_prime_closed_form(n, d)
                prime.expect(closed == mults, f"n={n} d={d}: {closed} != {mults}")
            neck.expect(decomp.necklace_count(n, d) == mults[0], f"n={n} d={d}")
            total.expect(sum(mults) == d**n, f"n={n} d={d}: sum {sum(mults)}")
            trip.expect(_roundtrips(decomp.cycle(n, d)), f"n={n} d={d}")
    return [dft, prime, neck, total, trip]


def _forall(check: Check, cases: Iterable, predicate: Callable[..., bool]) -> Check:
    for case in cases:
        args = case if isinstance(case, tuple) else (case,)
        check.expect(predicate(*args), repr(case))
    return check


def suite_identities(limits: Limits | None = None) -> list[Check]:
    limits = limits or Limits()
    nmax = limits.arithmetic_n_max
    rmax = limits.ramanujan_max
    completeness = [
        (d, n) for d in range(1, limits.completeness_d_max + 1) for n in range(1, limits.completeness_n_max + 1)
    ]

    def schur_weyl_count(d: int, n: int) -> bool:
        return sum(schur_weyl_multiplicity(lam, d) * hook_dimension(lam) for lam in enumerate_diagrams(n, d)) == d**n

    def ramanujan_agree(l: int, k: int) -> bool:
        z = ramanujan_sum_direct(l, k)
        exact = ramanujan_sum_holder(l, k)
        return abs(z.imag) < 1e-9 and abs(z.real - round(z.real)) < 1e-7 and round(z.real) == exact

    def words_prefix_stable(d: int) -> bool:
        blocks = [decomp.unordered_words(d, m).blocks for m in range(2, 7)]
        return all(longer[: len(shorter)] == shorter for shorter, longer in zip(blocks, blocks[1:]))

    def unordered_roundtrip(d: int, n: int) -> bool:
        return _roundtrips(decomp.unordered_tuple(n, d))

    return [
        _forall(Check("sum_lambda m_lambda * dim U_lambda == d^n"), completeness, schur_weyl_count),
        _forall(
            Check("sum_{d|n} mu(d) == [n = 1]"),
            range(1, nmax + 1),
            lambda n: sum(moebius(k) for k in divisors(n)) == (n == 1),
        ),
        _forall(
            Check("sum_{d|n} phi(d) == n"),
            range(1, nmax + 1),
            lambda n: sum(totient(k) for k in divisors(n)) == n,
        ),
        _forall(
            Check("Ramanujan sum: Hoelder == direct"),
            [(l, k) for l in range(1, rmax + 1) for k in range(rmax + 1)],
            ramanujan_agree,
        ),
        _forall(Check("c_l(0) == phi(l)"), range(1, rmax + 1), lambda l: ramanujan_sum_holder(l, 0) == totient(l)),
        _forall(
            Check("qubit closed form == Schur-Weyl for d = 2"),
            range(1, limits.qubit_n_max + 1),
            lambda n: decomp.qubit_closed_form(n).multiset() == decomp.unordered_tuple(n, 2).multiset(),
        ),
        _forall(Check("words truncation is prefix stable"), range(1, 6), words_prefix_stable),
        _forall(Check("unordered JSON round-trip"), completeness, unordered_roundtrip),
    ]


SUITE_FUNCTIONS: dict[str, Callable[[Limits | None], list[Check]]] = {
    "tables": suite_tables,
    "oracle": suite_oracle,
    "cycles": suite_cycles,
    "identities": suite_identities,
}


def run_suite(name: str, limits: Limits | None = None) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES for c in SUITE_FUNCTIONS[suite](limits)]
    if name not in SUITE_FUNCTIONS:
        raise ValueError(f"unknown suite {name!r}")
    return SUITE_FUNCTIONS[name](limits)
