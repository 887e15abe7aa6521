"""Acceptance suite: the contract grid, one criterion per test.

Each test prints a single PASS line on success (visible with -s); the
pytest -v report carries the same information per criterion.  All checks
are exact integer comparisons, no tolerances anywhere.
"""

import json
import random
import subprocess
import sys

from planebundles.chern import ChernPair, MonadSpec, monad_cohomology_chern
from planebundles.chow import PBRing, triple_self_product
from planebundles.classify import (
    NO,
    UNKNOWN,
    YES,
    complex_report,
    h_cobordant,
    weak_equivalent,
)
from planebundles.cubic import cubic_discriminant_standard, picard_cubic, picard_discriminant
from planebundles.moduli import EMPTY, POINT, ModuliDim, moduli_dim, non_cobordant_types, q1, stromme_threshold
from planebundles.oracles import iso_equivalence_sweep, orbit_agreement_sweep

CLI = [sys.executable, "-m", "planebundles"]

JSON_SAMPLES = [
    ["normalize", "--pair", "5,6"],
    ["equiv", "--left", "0,0", "--right", "2,1"],
    ["hcob", "--left", "0,1", "--right", "2,2"],
    ["report", "--left", "0,1", "--right", "0,1"],
    ["chow", "--pair", "0,2", "--cube", "1,1"],
    ["moduli", "--pair", "0,0", "--dmax", "3", "--e", "1"],
    ["threshold", "--pair", "0,0"],
    ["types", "--pair", "0,0", "--count", "3"],
    ["monad-check", "--pair", "0,2", "--d", "3"],
    ["line", "--c1", "-1", "--d", "3"],
    ["scan", "--range", "0:0:-2:2"],
    ["verify", "--orbit-bound", "4", "--root-bound", "10",
     "--pair-bound", "2", "--search-bound", "3"],
]


def _report(n: int, label: str) -> None:
    print(f"criterion {n} PASS: {label}")


def test_criterion_01_orbit_sweep_clean_at_bound_12():
    assert orbit_agreement_sweep(12) == (390625, 0)
    _report(1, "orbit oracle agrees with the closed form on [-12,12]^2 pairs")


def test_criterion_02_discriminant_reconciliation_on_grid():
    for c1 in range(-20, 21):
        for c2 in range(-20, 21):
            p = ChernPair(c1, c2)
            value = picard_discriminant(p)
            assert value == c1 * c1 - 4 * c2
            assert cubic_discriminant_standard(picard_cubic(p)) == -27 * value
    _report(2, "standard cubic discriminant is -27 * pair discriminant on [-20,20]^2")


def test_criterion_03_triple_product_matches_closed_form():
    for c1 in range(-8, 9):
        for c2 in range(-8, 9):
            ring = PBRing(ChernPair(c1, c2))
            for a in range(-8, 9):
                for b in range(-8, 9):
                    expected = (
                        3 * a * a * b
                        - 3 * c1 * a * b * b
                        + (c1 * c1 - c2) * b**3
                    )
                    assert triple_self_product(ring, a, b) == expected
    _report(3, "ring-product cube equals the closed cubic form on [-8,8]^4")


def test_criterion_04_monad_cohomology_cancels():
    for d in range(-10, 11):
        for c1 in range(-10, 11):
            for c2 in range(-10, 11):
                bundle = ChernPair(c1, c2)
                assert monad_cohomology_chern(MonadSpec(d, bundle)) == bundle
    _report(4, "monad Chern data cancels back to the input on [-10,10]^3")


def test_criterion_05_moduli_trichotomy():
    assert moduli_dim(ChernPair(0, 0), 0) == POINT
    assert moduli_dim(ChernPair(0, -1), 0) == EMPTY
    assert moduli_dim(ChernPair(0, 1), 0) == ModuliDim("dim", 2)
    for c1 in (0, -1):
        for c2 in range(-10, 11):
            p = ChernPair(c1, c2)
            for d in range(0, 21):
                value = q1(p, d)
                got = moduli_dim(p, d)
                if value < 0:
                    assert got == EMPTY
                elif value == 0:
                    assert got == POINT
                else:
                    assert got == ModuliDim("dim", 3 * value - 1)
    _report(5, "moduli dimension follows the Q1 trichotomy with pinned examples")


def test_criterion_06_threshold_and_types():
    assert stromme_threshold(ChernPair(0, 0)) == 3
    assert non_cobordant_types(ChernPair(0, 0), 3) == [4, 5, 6]
    _report(6, "threshold 3 and types 4,5,6 for the trivial pair")


def test_criterion_07_hcob_tracks_weak_equivalence():
    span = range(-8, 9)
    pairs = [ChernPair(a, b) for a in span for b in span]
    unknown_seen = False
    for p in pairs:
        for q in pairs:
            weak = weak_equivalent(p, q)
            v = h_cobordant(p, q)
            if v.value == YES:
                assert weak.value == YES
            assert (v.value == NO) == (weak.value == NO)
            if v.value == UNKNOWN:
                unknown_seen = True
    assert unknown_seen
    assert h_cobordant(ChernPair(0, 1), ChernPair(0, 1)).value == UNKNOWN
    _report(7, "h-cobordism implies weak equivalence and No states match on [-8,8]^4")


def test_criterion_08_topological_relations_collapse():
    rng = random.Random(20260816)
    for _ in range(10_000):
        p = ChernPair(rng.randint(-40, 40), rng.randint(-40, 40))
        q = ChernPair(rng.randint(-40, 40), rng.randint(-40, 40))
        r = complex_report(p, q)
        weak = r.a1_weak_equivalence
        assert r.homotopy_equivalence == weak
        assert r.diffeomorphism == weak
        assert r.deformation_equivalence == weak
    _report(8, "all four topological relations carry one verdict on 10^4 random pairs")


def test_criterion_09_iso_sweep_clean():
    assert iso_equivalence_sweep(4, 3) == (6561, 0)
    _report(9, "ring and form searches match the discriminant on [-4,4]^2 pairs")


def _run_cli(argv):
    return subprocess.run(
        CLI + argv, capture_output=True, text=True, timeout=120)


def test_criterion_10_cli_end_to_end():
    scan = _run_cli(["scan", "--range", "0:0:-2:2", "--json"])
    assert scan.returncode == 0
    assert len(json.loads(scan.stdout)["orbits"]) == 5

    verify = _run_cli(["verify"])
    assert verify.returncode == 0
    assert verify.stdout.splitlines()[-1] == "3/3 sweeps passed"

    for argv in JSON_SAMPLES:
        first = _run_cli(argv + ["--json"])
        assert first.returncode == 0, (argv, first.stderr)
        payload = json.loads(first.stdout)
        assert payload["schema"] == "1"
        assert payload["command"] == argv[0]
        assert first.stdout == json.dumps(payload, indent=2) + "\n"
        second = _run_cli(argv + ["--json"])
        assert second.stdout == first.stdout
        plain_a = _run_cli(argv)
        plain_b = _run_cli(argv)
        assert plain_a.returncode == 0
        assert plain_a.stdout == plain_b.stdout
    _report(10, "CLI scan, verify, JSON round-trip and byte determinism")
