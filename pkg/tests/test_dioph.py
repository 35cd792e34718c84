import pytest
from hypothesis import given, strategies as st

from nullcorr.chern import chern_closed_form_p5
from nullcorr.dioph import (
    MSearchExhausted,
    brute_force_triples,
    components_certificate,
    find_M_with_representations,
    piezas_triple,
    representations_x2_3y2,
    triple_family,
)


def test_brute_force_examples():
    assert brute_force_triples(6, 9).triples == ((2, 1, 1),)
    big = brute_force_triples(294, 21609)
    assert set(big.triples) == {(14, 7, 7), (13, 11, 2)}
    assert brute_force_triples(1, 1).triples == ()


def test_brute_force_finds_everything():
    # independent cross-check: full cube scan at small scale
    lam, zeta = 54, 729
    expected = {
        (u, v, w)
        for u in range(8)
        for v in range(u + 1)
        for w in range(v + 1)
        if u * u + v * v + w * w == lam
        and u * u * v * v + u * u * w * w + v * v * w * w == zeta
    }
    assert set(brute_force_triples(lam, zeta).triples) == expected


def test_piezas_examples():
    assert piezas_triple(1, 1, 1, 0) == (2, 1, 1)
    assert piezas_triple(1, 1, 1, 2) == (7, 5, 2)
    assert piezas_triple(1, 1, 1, 4) == (13, 11, 2)


def test_piezas_rejects_degenerate():
    with pytest.raises(ValueError):
        piezas_triple(0, 0, 1, 1)


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
def test_piezas_identities_hold(a, b, x, y):
    if a * (-2 * a - b) - b * (a + 2 * b) == 0:
        return
    u, v, w = piezas_triple(a, b, x, y)  # postconditions assert both identities
    assert u >= v >= w >= 0


def test_representations_examples():
    assert representations_x2_3y2(1) == [(1, 0)]
    assert sorted(representations_x2_3y2(49)) == [(1, 4), (7, 0)]
    assert representations_x2_3y2(2) == []


def test_find_M_examples():
    assert find_M_with_representations(1) == 1
    assert find_M_with_representations(2) == 49


def test_find_M_respects_ceiling():
    with pytest.raises(MSearchExhausted):
        find_M_with_representations(2, max_m=10)


def test_triple_family():
    fam1 = triple_family(1)
    assert (fam1.lam, fam1.zeta) == (6, 9)
    assert fam1.triples == ((2, 1, 1),)

    fam2 = triple_family(2)
    assert (fam2.lam, fam2.zeta) == (294, 21609)
    assert {(14, 7, 7), (13, 11, 2)} <= set(fam2.triples)

    for N in range(1, 5):
        fam = triple_family(N)
        assert fam.count >= N
        # every member is confirmed by the exhaustive oracle
        assert set(fam.triples) == set(
            brute_force_triples(fam.lam, fam.zeta).triples
        )


def test_certificate_one_component():
    cert = components_certificate(1)
    assert cert.c == 11
    assert cert.s == 115
    assert cert.t == 11**4 - 121 * 6 + 9
    assert [(e.a1, e.a2, e.a3) for e in cert.components] == [(2, 1, 1)]


def test_certificate_two_components():
    cert = components_certificate(2)
    assert (cert.c, cert.s, cert.t) == (71, 4747, 23951236)
    assert {(e.a1, e.a2, e.a3) for e in cert.components} == {(14, 7, 7), (13, 11, 2)}
    assert all(cert.c > 5 * e.a1 for e in cert.components)
    assert cert.verified_by_brute_force


def test_certificate_soundness():
    for N in (1, 2, 3):
        cert = components_certificate(N)
        assert cert.count >= N
        for e in cert.components:
            assert chern_closed_form_p5(cert.c, e.a1, e.a2, e.a3) == (
                0,
                cert.s,
                0,
                cert.t,
            )
            assert e.dim_N > 0


def test_certificate_deterministic():
    assert components_certificate(3) == components_certificate(3)
