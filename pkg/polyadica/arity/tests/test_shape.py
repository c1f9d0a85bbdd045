import logging
from fractions import Fraction

import pytest

from polyadica.arity import shape
from polyadica.arity.shape import LShape, VectorSpaceSignature
from polyadica.errors import NotQuantized, OutOfBounds

logging.disable(logging.INFO)

# (k_rho, ell_mu, ell_id, first three (n_in, n_out) pairs) of the quantization table
QUANTIZATION_ROWS = [
    (2, 1, 1, [(3, 2), (5, 3), (7, 4)]),
    (3, 1, 2, [(4, 2), (7, 3), (10, 4)]),
    (3, 2, 1, [(4, 3), (7, 5), (10, 7)]),
    (4, 1, 3, [(5, 2), (9, 3), (13, 4)]),
    (4, 2, 2, [(3, 2), (5, 3), (7, 4)]),
    (4, 3, 1, [(5, 4), (9, 7), (13, 10)]),
]


class TestLShapes:
    @pytest.mark.parametrize(
        "args, expected",
        [((3, 2, 2), (1, 1)), ((4, 3, 3), (2, 1)), ((6, 1, 6), (1, 0))],
    )
    def test_composition(self, args, expected):
        assert shape.composition_shape(*args) == LShape(*expected)

    def test_composition_not_quantized(self):
        with pytest.raises(NotQuantized) as e:
            shape.composition_shape(4, 2, 3)
        assert e.value.equation == "l1n"
        assert e.value.to_dict()["n_K"] == 4

    @pytest.mark.parametrize(
        "args, expected", [((3, 2, 2), (1, 1)), ((5, 4, 2), (1, 3)), ((2, 1, 2), (1, 0))]
    )
    def test_distributivity(self, args, expected):
        assert shape.distributivity_shape(*args) == LShape(*expected)

    @pytest.mark.parametrize(
        "args, expected", [((3, 2, 2), (1, 1)), ((5, 4, 4), (3, 1)), ((7, 3, 5), (2, 1))]
    )
    def test_algebra(self, args, expected):
        assert shape.algebra_compat_shape(*args) == LShape(*expected)

    def test_bounds(self):
        with pytest.raises(OutOfBounds):
            shape.composition_shape(3, 2, 4)
        with pytest.raises(OutOfBounds):
            shape.composition_shape(65, 2, 2)
        with pytest.raises(OutOfBounds):
            shape.composition_shape(3, 0, 2)
        with pytest.raises(TypeError):
            shape.composition_shape(3.0, 2, 2)

    def test_shape_identity(self):
        for n_K in range(2, 12):
            for k_rho in range(1, 6):
                for n_rho in range(2, n_K + 1):
                    try:
                        s = shape.composition_shape(n_K, k_rho, n_rho)
                    except (NotQuantized, OutOfBounds):
                        continue
                    assert k_rho * n_rho == n_K * s.ell_mu + s.ell_id
                    assert s.places == k_rho


class TestEqualShapes:
    def test_satisfied(self):
        report = shape.equal_lshape_arity_conditions(VectorSpaceSignature(3, 3, 2, 2, 2), n_A=2)
        assert report.valid
        assert report.extra["coincide"]

    def test_violated(self):
        report = shape.equal_lshape_arity_conditions(VectorSpaceSignature(4, 3, 2, 2, 2), n_A=2)
        assert not report.valid
        assert report.witnesses == ["n_K=3 != m_K=4"]

    def test_free_places(self):
        report = shape.equal_lshape_arity_conditions(
            VectorSpaceSignature(5, 5, 3, 4, 3), n_A=3, m_A=7
        )
        assert report.valid
        assert report.extra["shapes"]["composition"] == {"ell_mu": 2, "ell_id": 2}
        assert report.extra["coincide"]

    def test_conditions_match_brute_force(self):
        # coinciding shapes force n_K = m_K and n_rho = n_A
        for n_K in range(2, 8):
            for m_K in range(2, 8):
                for n_rho in range(2, 8):
                    for n_A in range(2, 8):
                        sig = VectorSpaceSignature(m_K, n_K, 2, 2, n_rho)
                        report = shape.equal_lshape_arity_conditions(sig, n_A)
                        if report.extra["coincide"]:
                            assert report.valid


class TestQuantization:
    @pytest.mark.parametrize("k_rho, ell_mu, ell_id, pairs", QUANTIZATION_ROWS)
    def test_table_rows(self, k_rho, ell_mu, ell_id, pairs):
        rows = shape.enumerate_quantized(k_rho, 13)
        for n_in, n_out in pairs:
            assert (ell_mu, ell_id, n_in, n_out) in rows

    def test_k2(self):
        rows = [r for r in shape.enumerate_quantized(2, 7) if r[1] > 0]
        assert rows == [(1, 1, 3, 2), (1, 1, 5, 3), (1, 1, 7, 4)]

    def test_k3(self):
        rows = [r for r in shape.enumerate_quantized(3, 10) if r[1] > 0]
        assert rows == [
            (1, 2, 4, 2),
            (1, 2, 7, 3),
            (1, 2, 10, 4),
            (2, 1, 4, 3),
            (2, 1, 7, 5),
            (2, 1, 10, 7),
        ]

    def test_k1(self):
        assert shape.enumerate_quantized(1, 4) == [(1, 0, 2, 2), (1, 0, 3, 3), (1, 0, 4, 4)]

    def test_table(self):
        df = shape.quantization_table([2, 3, 4], 10, skip_trivial=True)
        assert list(df.columns) == ["k_rho", "ell_mu", "ell_id", "n_K", "n_rho"]
        assert (df["ell_id"] > 0).all()
        assert df.iloc[0].tolist() == [2, 1, 1, 3, 2]
        assert df.to_csv(index=False) == shape.quantization_table([2, 3, 4], 10, True).to_csv(
            index=False
        )


class TestCounts:
    @pytest.mark.parametrize("args, expected", [((2, 1), 1), ((3, 2), 4), ((5, 3), 12)])
    def test_regular_multiaction(self, args, expected):
        assert shape.regular_multiaction_places(*args) == expected

    @pytest.mark.parametrize("args, expected", [((2, 5), 6), ((3, 2), 5), ((3, 0), 1)])
    def test_long_product_length(self, args, expected):
        assert shape.long_product_length(*args) == expected


class TestMappings:
    def test_one_place(self):
        sig = shape.mapping_shape(3, 3, 1, 2, 2)
        assert (sig.ell_mu_k, sig.ell_id_k, sig.ell_mu_f, sig.ell_id_f) == (1, 0, 1, 0)

    def test_two_place(self):
        sig = shape.mapping_shape(3, 2, 2, 1, 2)
        assert (sig.ell_mu_k, sig.ell_id_k, sig.ell_mu_f, sig.ell_id_f) == (1, 1, 2, 0)

    def test_equal_additions(self):
        sig = shape.mapping_shape(3, 3, 2, 1, 2)
        assert (sig.ell_mu_k, sig.ell_id_k) == (2, 0)

    def test_not_quantized(self):
        with pytest.raises(NotQuantized):
            shape.mapping_shape(4, 3, 1, 2, 2)
        with pytest.raises(OutOfBounds):
            shape.mapping_shape(2, 3, 1, 1, 1)

    def test_closed_form_agrees(self):
        for m_V in range(2, 6):
            for m_V_prime in range(2, m_V + 1):
                for k_F in range(1, 5):
                    for k_rho in range(1, 4):
                        for k_rho_prime in range(1, 7):
                            args = (m_V, m_V_prime, k_F, k_rho, k_rho_prime)
                            closed = shape.mapping_closed_form(*args)
                            try:
                                sig = shape.mapping_shape(*args)
                            except NotQuantized:
                                assert any(c.denominator != 1 or c < 0 for c in closed)
                                continue
                            assert closed == tuple(
                                Fraction(x)
                                for x in (sig.ell_mu_k, sig.ell_id_k, sig.ell_mu_f, sig.ell_id_f)
                            )


class TestFunctionals:
    def test_binary(self):
        assert shape.functional_shape(2, 2, 2, 1, 1).to_dict() == {
            "k_L": 1,
            "ell_nu_k": 1,
            "ell_id_nu": 0,
            "ell_mu_h": 1,
            "ell_id_h": 0,
        }

    def test_ternary(self):
        f = shape.functional_shape(2, 3, 3, 2, 2)
        assert (f.ell_nu_k, f.ell_id_nu, f.ell_mu_h, f.ell_id_h) == (1, 1, 1, 1)

    def test_not_quantized(self):
        with pytest.raises(NotQuantized):
            shape.functional_shape(3, 3, 2, 1, 2)

    def test_closed_form_agrees(self):
        f = shape.functional_shape(3, 3, 5, 3, 2)
        assert shape.functional_closed_form(3, 3, 5, 3, 2) == (
            f.ell_nu_k,
            f.ell_id_nu,
            f.ell_mu_h,
            f.ell_id_h,
        )


class TestDualAndSums:
    def test_dual(self):
        assert shape.dual_space_shape(2, 2).to_dict() == {
            "k_L": 1,
            "ell_mu_L": 1,
            "ell_id_L": 0,
            "m_L_rule": "m_L = m_K",
        }
        d = shape.dual_space_shape(4, 3)
        assert (d.k_L, d.ell_mu_L, d.ell_id_L) == (3, 2, 1)
        with pytest.raises(OutOfBounds):
            shape.dual_space_shape(3, 4)

    def test_direct_sum(self):
        mixed = shape.direct_sum_compatible([(3, 1), (3, 1), (2, 1)], 3)
        assert (mixed.compatible, mixed.k_rho, mixed.mode) == (True, 3, "mixed")
        uniform = shape.direct_sum_compatible([(2, 1), (2, 1)], 2)
        assert (uniform.compatible, uniform.k_rho, uniform.mode) == (True, 2, "uniform")
        assert not shape.direct_sum_compatible([(4, 1)], 3).compatible

    def test_tensor(self):
        t = shape.tensor_product_compatible([(3, 1), (3, 1), (2, 1)], 3)
        assert (t.compatible, t.k_rho, t.mode) == (True, 1, "mixed")
        t = shape.tensor_product_compatible([(2, 2), (2, 2)])
        assert (t.compatible, t.k_rho, t.mode) == (True, 2, "uniform")
        t = shape.tensor_product_compatible([(3, 1), (3, 2)])
        assert not t.compatible
        assert "places differ" in t.reason
        assert not shape.tensor_product_compatible([(4, 1)], 3).compatible


class TestInnerPairing:
    @pytest.mark.parametrize("args", [(2, 2, 2, 1, 2), (3, 3, 3, 2, 3)])
    def test_valid(self, args):
        report = shape.inner_pairing_constraints(*args)
        assert report.valid
        assert report.to_dict()["norm"]["valid"]

    def test_invalid(self):
        report = shape.inner_pairing_constraints(3, 4, 3, 2, 3)
        assert not report.valid
        assert "n_K=4 != N=3" in report.witnesses
        assert not report.checks["nkn"]

    def test_norm(self):
        assert shape.norm_constraints(3, 3, 3).valid
        assert not shape.norm_constraints(3, 2, 3).valid


class TestStructures:
    def test_without_shape(self):
        assert shape.check_structure("ring")["valid"]

    def test_vector_space(self):
        report = shape.check_structure("vector-space", n_K=3, m_K=3, k_rho=2, n_rho=2)
        assert report["valid"]
        assert report["shapes"]["distributivity"] == {"ell_mu": 1, "ell_id": 1}

    def test_algebra_failure(self):
        report = shape.check_structure("algebra", n_K=3, m_K=3, k_rho=2, n_rho=2, n_A=4)
        assert not report["valid"]
        assert report["errors"][0]["error"] == "OutOfBounds"

    def test_inner_pairing(self):
        report = shape.check_structure("inner-pairing", m_K=3, n_K=3, m_V=3, k_rho=2, N=3)
        assert report["valid"]

    def test_unknown(self):
        with pytest.raises(ValueError):
            shape.check_structure("lattice")
