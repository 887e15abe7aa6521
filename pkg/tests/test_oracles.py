"""Brute-force searches and the sweeps pitting them against the closed forms."""

import pytest
from hypothesis import given, strategies as st

from planebundles.chern import ChernPair, twist
from planebundles.chow import PBRing, pb_mul
from planebundles.cubic import picard_cubic, transform_form
from planebundles.errors import DomainError
from planebundles.oracles import (
    SearchBound,
    gl2z_form_search,
    integer_root_search,
    iso_equivalence_sweep,
    orbit_agreement_sweep,
    orbit_oracle,
    ring_iso_search,
    split_root_agreement_sweep,
)
from planebundles.orbits import orbit_witness

pairs = st.builds(
    ChernPair,
    st.integers(min_value=-10, max_value=10),
    st.integers(min_value=-10, max_value=10),
)


def test_search_bound_validation():
    assert SearchBound(1).b == 1
    with pytest.raises(DomainError):
        SearchBound(0)
    with pytest.raises(DomainError):
        SearchBound(-2)


def test_orbit_oracle_examples():
    assert orbit_oracle(ChernPair(0, 0), ChernPair(2, 2)) is None
    assert orbit_oracle(ChernPair(0, 2), ChernPair(2, 3)) == 1
    assert orbit_oracle(ChernPair(-1, 0), ChernPair(5, 6)) == 3
    assert orbit_oracle(ChernPair(0, 0), ChernPair(1, 0)) is None


@given(pairs, st.integers(min_value=-8, max_value=8))
def test_orbit_oracle_finds_planted_witnesses(p, l):
    assert orbit_oracle(p, twist(p, l)) == l


def test_orbit_agreement_sweep_is_clean():
    assert orbit_agreement_sweep(6) == (28561, 0)


def test_gl2z_form_search_finds_the_twist_substitution():
    f = picard_cubic(ChernPair(0, 0))
    g = picard_cubic(ChernPair(2, 1))
    m = gl2z_form_search(f, g, SearchBound(2))
    assert m is not None
    assert transform_form(f, m) == g
    assert m.entries == (-1, 1, 0, 1)


def test_gl2z_form_search_respects_the_discriminant():
    f = picard_cubic(ChernPair(0, 0))
    g = picard_cubic(ChernPair(0, 1))
    assert gl2z_form_search(f, g, SearchBound(2)) is None


@given(pairs, st.integers(min_value=-2, max_value=2))
def test_gl2z_form_search_certifies_twisted_forms(p, l):
    f = picard_cubic(p)
    g = picard_cubic(twist(p, l))
    m = gl2z_form_search(f, g, SearchBound(abs(l) + 1))
    assert m is not None
    assert transform_form(f, m) == g


def _is_graded_iso(p, q, m):
    ring_q = PBRing(q)
    img_h = ring_q.element((0, m.m00, 0, m.m01, 0, 0))
    img_t = ring_q.element((0, m.m10, 0, m.m11, 0, 0))
    img_h2 = pb_mul(ring_q, img_h, img_h)
    img_h3 = pb_mul(ring_q, img_h2, img_h)
    img_t2 = pb_mul(ring_q, img_t, img_t)
    img_ht = pb_mul(ring_q, img_h, img_t)
    relation = tuple(
        t2 + p.c1 * ht + p.c2 * h2
        for t2, ht, h2 in zip(img_t2.coeffs, img_ht.coeffs, img_h2.coeffs)
    )
    return img_h3.coeffs == (0,) * 6 and not any(relation)


def test_ring_iso_search_finds_twist_isomorphisms():
    p = ChernPair(0, 0)
    for l in (-2, -1, 0, 1, 2):
        q = twist(p, l)
        m = ring_iso_search(p, q, SearchBound(3))
        assert m is not None
        assert _is_graded_iso(p, q, m)


def test_ring_iso_search_separates_orbits():
    assert ring_iso_search(ChernPair(0, 0), ChernPair(0, 1), SearchBound(3)) is None
    assert ring_iso_search(ChernPair(0, 0), ChernPair(1, 0), SearchBound(3)) is None


def test_ring_iso_search_handles_the_sign_dual():
    # (-4, 4) and (4, 4) sit at twist distance 4, beyond bound 3, but the
    # sign swap tau -> -tau' connects the rings directly.
    p, q = ChernPair(-4, 4), ChernPair(4, 4)
    m = ring_iso_search(p, q, SearchBound(3))
    assert m is not None
    assert _is_graded_iso(p, q, m)


def test_integer_root_search_examples():
    assert integer_root_search(ChernPair(5, 6), 10) == [2, 3]
    assert integer_root_search(ChernPair(0, 1), 10) == []
    assert integer_root_search(ChernPair(0, 0), 10) == [0]
    with pytest.raises(DomainError):
        integer_root_search(ChernPair(0, 0), -1)


@given(pairs)
def test_integer_root_search_is_complete_at_its_bound(p):
    dmax = abs(p.c1) + abs(p.c2) + 1
    assert integer_root_search(p, dmax) == integer_root_search(p, dmax + 20)


def test_split_root_agreement_sweep_is_clean():
    assert split_root_agreement_sweep(20) == (1681, 0)


def test_iso_equivalence_sweep_is_clean_at_small_bounds():
    assert iso_equivalence_sweep(2, 3) == (625, 0)


@given(pairs, pairs)
def test_orbit_oracle_matches_the_closed_witness(p, q):
    assert orbit_oracle(p, q) == orbit_witness(p, q)
