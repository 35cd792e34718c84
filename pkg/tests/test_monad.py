import pytest

from nullcorr.combinat import h0_line, h0_split, h0_wedge2
from nullcorr.monad import (
    MonadSpec,
    chi_monad,
    cohomology_table,
    default_twist_range,
    h0_E,
    h1_E,
    hilbert_M,
    hilbert_function,
    koszul_alternating_sum,
)
from nullcorr.oracles import hilbert_by_resolution
from nullcorr.selftest import admissible_specs


def test_spec_validation():
    with pytest.raises(ValueError):
        MonadSpec(2, 1, (1, 0, 0))  # c must exceed a_1
    with pytest.raises(ValueError):
        MonadSpec(2, 3, (0, 1, 0))  # not descending
    with pytest.raises(ValueError):
        MonadSpec(2, 3, (1, 0))  # wrong length
    with pytest.raises(ValueError):
        MonadSpec(0, 1, (0,))


def test_generator_degrees_and_socle():
    spec = MonadSpec(2, 2, (1, 0, 0))
    assert sorted(spec.generator_degrees()) == [1, 2, 2, 2, 2, 3]
    assert spec.socle_degree == 6
    assert MonadSpec(2, 1, (0, 0, 0)).socle_degree == 0


def test_hilbert_examples():
    spec = MonadSpec(2, 1, (0, 0, 0))
    assert hilbert_M(spec, 0) == 1
    assert hilbert_M(spec, 1) == 0
    assert hilbert_M(MonadSpec(2, 2, (0, 0, 0)), 3) == 20
    assert hilbert_M(spec, -3) == 0


def test_koszul_examples():
    assert koszul_alternating_sum(MonadSpec(2, 1, (0, 0, 0)), 0) == 1
    assert koszul_alternating_sum(MonadSpec(2, 2, (0, 0, 0)), 3) == 20
    spec = MonadSpec(1, 2, (1, 0))
    assert koszul_alternating_sum(spec, spec.socle_degree) == 1


def test_hilbert_equals_koszul_on_grid():
    for n in (1, 2):
        for spec in admissible_specs(n, 5):
            for j in range(spec.socle_degree + 2):
                assert hilbert_M(spec, j) == koszul_alternating_sum(spec, j)
                assert hilbert_M(spec, j) == hilbert_by_resolution(spec, j)


def test_gorenstein_symmetry_and_socle():
    for n in (1, 2, 3):
        for spec in admissible_specs(n, 4):
            hf = hilbert_function(spec)
            socle = hf.socle_degree
            assert hf(socle) == 1
            assert hf(socle + 1) == 0
            for j in range(socle + 1):
                assert hf(j) == hf(socle - j)


def test_h1_E_examples():
    assert h1_E(MonadSpec(2, 2, (0, 0, 0)), -2) == 1
    assert h1_E(MonadSpec(2, 1, (0, 0, 0)), 0) == 0
    assert h1_E(MonadSpec(2, 1, (0, 0, 0)), -10) == 0


def test_h0_E_examples():
    spec = MonadSpec(2, 1, (0, 0, 0))
    assert h0_E(spec, 1) == 14
    assert h0_E(spec, 0) == 0
    assert h0_E(spec, -50) == 0


def test_corollary_section_counts():
    for spec in admissible_specs(2, 6):
        if spec.c > 2 * spec.a[0] + spec.a[1]:
            assert h0_E(spec, spec.c) == h0_wedge2(spec.bundle_H()) - 1
            assert h0_E(spec, 0) == 0


def test_chi_monad_examples():
    assert chi_monad(MonadSpec(2, 1, (0, 0, 0)), 1) == 14
    assert chi_monad(MonadSpec(2, 2, (0, 0, 0)), 2) == -1
    assert chi_monad(MonadSpec(2, 1, (0, 0, 0)), -3) == 0


def test_chi_monad_remark_formula():
    for spec in admissible_specs(2, 8):
        H = spec.bundle_H()
        expected = h0_split(H, spec.c) - h0_line(spec.ambient_dim, 2 * spec.c) - 1
        assert chi_monad(spec, spec.c) == expected


def test_table_examples():
    spec = MonadSpec(2, 1, (0, 0, 0))
    table = cohomology_table(spec)
    assert table.column(1) == (14, 0, 0, 0, 0, 0)
    assert table.euler(1) == 14
    assert table.entry(5, -7) == 14

    t2 = cohomology_table(MonadSpec(2, 2, (0, 0, 0)), -2, -2)
    assert t2.entry(1, -2) == 1
    assert t2.entry(0, -2) == 0


def test_table_default_range():
    spec = MonadSpec(2, 3, (1, 0, 0))
    table = cohomology_table(spec)
    assert (table.t_min, table.t_max) == default_twist_range(spec) == (-12, 6)


def test_table_rejects_empty_range():
    with pytest.raises(ValueError):
        cohomology_table(MonadSpec(2, 1, (0, 0, 0)), 5, 1)


def test_table_chi_and_duality():
    for n in (1, 2, 3):
        for spec in admissible_specs(n, 3):
            table = cohomology_table(spec)
            N = spec.ambient_dim
            for t in table.twists:
                col = table.column(t)
                assert all(x >= 0 for x in col)
                assert all(col[i] == 0 for i in range(2, 2 * n))
                assert table.euler(t) == chi_monad(spec, t)
                assert col[N] == h0_E(spec, -t - N - 1)
                assert col[2 * n] == h1_E(spec, -t - N - 1)
