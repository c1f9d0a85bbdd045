import logging

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyadica.congruence import (
    CongruenceClass,
    add,
    arity_shape,
    class_table,
    congruence_ring_from,
    equal_arity_invariants,
    is_limiting,
    mul,
    multiplicative_neutral_check,
    multiplicative_querelement,
    neutral_sequence_check,
    querelement,
    same_shape_classes,
    zero_and_unit_analysis,
)
from polyadica.errors import LengthMismatch, NoMultiplicativeArity, NotInCarrier
from polyadica.rings import (
    check_associativity,
    check_closure,
    check_distributivity,
    check_solvability,
    polyadic_power,
)

logging.disable(logging.INFO)

# (a, b) -> (m, n, I, J)
SHAPES = {
    (2, 3): (4, 3, 2, 2),
    (2, 5): (6, 5, 2, 6),
    (2, 6): (4, 3, 1, 1),
    (2, 7): (8, 4, 2, 2),
    (2, 9): (10, 7, 2, 14),
    (2, 10): (6, 5, 1, 3),
    (3, 4): (5, 3, 3, 6),
    (3, 5): (6, 5, 3, 48),
    (3, 8): (9, 3, 3, 3),
    (3, 10): (11, 5, 3, 24),
    (4, 5): (6, 3, 4, 12),
    (4, 6): (4, 2, 2, 2),
    (4, 7): (8, 4, 4, 36),
    (4, 9): (10, 4, 4, 28),
    (5, 7): (8, 7, 5, 11160),
}
WITHOUT_ARITY = [(2, 4), (2, 8), (3, 9), (4, 8)]

classes = st.integers(2, 12).flatmap(
    lambda b: st.builds(CongruenceClass, st.integers(1, b - 1), st.just(b))
)


def shaped(cls):
    try:
        arity_shape(cls)
    except NoMultiplicativeArity:
        return False
    return True


class TestCongruenceClass:
    def test_validation(self):
        with pytest.raises(ValueError):
            CongruenceClass(0, 5)
        with pytest.raises(ValueError):
            CongruenceClass(5, 5)
        with pytest.raises(ValueError):
            CongruenceClass(1, 1)
        with pytest.raises(TypeError):
            CongruenceClass(1.0, 5)

    def test_elements(self):
        cls = CongruenceClass(2, 3)
        assert str(cls) == "[[2]]_3"
        assert [cls.value(k) for k in (-1, 0, 1, 2)] == [-1, 2, 5, 8]
        assert cls.index(-4) == -2
        assert not cls.contains(3)
        with pytest.raises(NotInCarrier):
            cls.index(3)


class TestArityShape:
    @pytest.mark.parametrize("ab, expected", SHAPES.items())
    def test_table_cells(self, ab, expected):
        assert tuple(arity_shape(CongruenceClass(*ab)).to_dict().values()) == expected

    @pytest.mark.parametrize("b", range(2, 12))
    def test_unit_class(self, b):
        shape = arity_shape(CongruenceClass(1, b))
        assert (shape.m, shape.n, shape.I, shape.J) == (b + 1, 2, 1, 0)

    @pytest.mark.parametrize("ab", WITHOUT_ARITY)
    def test_no_multiplicative_arity(self, ab):
        with pytest.raises(NoMultiplicativeArity) as e:
            arity_shape(CongruenceClass(*ab))
        assert e.value.to_dict()["a"] == ab[0]

    @settings(derandomize=True, max_examples=100)
    @given(cls=classes)
    def test_shape_relations(self, cls):
        if not shaped(cls):
            return
        shape = arity_shape(cls)
        a, b = cls.a, cls.b
        assert shape.m * a % b == a % b
        assert pow(a, shape.n, b) == a
        assert b * shape.I == (shape.m - 1) * a
        assert a + b * shape.J == a**shape.n
        assert all(pow(a, n, b) != a for n in range(2, shape.n))


class TestOperations:
    def test_add(self):
        cls = CongruenceClass(2, 3)
        x = add(cls, [0, 1, 2, 3])
        assert x.k == 8
        assert x.value == 2 + 5 + 8 + 11
        with pytest.raises(LengthMismatch):
            add(cls, [0, 1])

    def test_mul(self):
        cls = CongruenceClass(2, 3)
        x = mul(cls, [0, 1, 2])
        assert x.value == 2 * 5 * 8
        assert x.k == 26

    @settings(derandomize=True, max_examples=100)
    @given(cls=classes, k=st.integers(-20, 20))
    def test_querelement(self, cls, k):
        if not shaped(cls):
            return
        m = arity_shape(cls).m
        k_tilde = querelement(cls, k)
        assert add(cls, [k] * (m - 1) + [k_tilde]).k == k
        assert add(cls, [k_tilde] + [k] * (m - 1)).k == k

    def test_neutral_sequence(self):
        cls = CongruenceClass(2, 3)
        assert neutral_sequence_check(cls, [0, -1, -1])
        assert not neutral_sequence_check(cls, [0, 0, 0])
        ks = [0, -1, -1]
        for k in range(-3, 4):
            assert add(cls, ks + [k]).k == k

    def test_ring_axioms(self):
        ring = congruence_ring_from(2, 3)
        assert check_associativity(ring, "addition").holds
        assert check_associativity(ring, "multiplication").holds
        assert check_distributivity(ring).holds
        assert check_solvability(ring).holds
        assert check_closure(ring).holds
        assert ring.querelement(2) == -4
        assert polyadic_power(ring, 2, 1) == ring.closed_form_power(2, 1) == 8
        assert ring.binary_form(1, [2, 5]) == 8 + 125

    @pytest.mark.parametrize("ab", SHAPES)
    def test_closure_and_querelement(self, ab):
        ring = congruence_ring_from(*ab)
        assert check_closure(ring).holds
        for k in range(-3, 4):
            x = ring.element(k)
            assert ring.add([x] * (ring.m - 1) + [ring.querelement(x)]) == x


class TestUnits:
    def test_limiting(self):
        assert is_limiting(CongruenceClass(1, 7))
        assert is_limiting(CongruenceClass(6, 7))
        assert not is_limiting(CongruenceClass(2, 7))

    def test_unit_class(self):
        report = zero_and_unit_analysis(CongruenceClass(1, 5))
        assert report["additive_zero"] is None
        assert report["unit"] == 1
        assert report["querable"] == "all"
        assert report["querelement"] == 1

    def test_minus_one_class(self):
        report = zero_and_unit_analysis(CongruenceClass(4, 5))
        assert (report["m"], report["n"]) == (6, 3)
        assert report["unit"] == -1
        assert report["querable"] == [-1]

    def test_generic_class(self):
        report = zero_and_unit_analysis(CongruenceClass(2, 5))
        assert report["unit"] is None
        assert report["querable"] == []
        assert not report["limiting"]

    def test_multiplicative_querelement(self):
        cls = CongruenceClass(4, 5)
        assert multiplicative_querelement(cls, cls.index(-1)) == cls.index(-1)
        assert multiplicative_querelement(cls, 0) is None
        unit = CongruenceClass(1, 4)
        assert multiplicative_querelement(unit, 3) == 0
        assert multiplicative_neutral_check(unit, [0])
        assert not multiplicative_neutral_check(unit, [1])


class TestSameShape:
    @pytest.mark.parametrize(
        "m, n, expected",
        [
            (6, 3, [(4, 5), (4, 10)]),
            (8, 3, [(6, 7)]),
            (6, 5, [(2, 5), (3, 5), (2, 10), (8, 10)]),
            (3, 2, [(1, 2), (3, 6), (5, 10)]),
        ],
    )
    def test_classes(self, m, n, expected):
        assert same_shape_classes(10, m, n) == [CongruenceClass(*ab) for ab in expected]

    def test_invariants(self):
        verdict = equal_arity_invariants(CongruenceClass(4, 5), CongruenceClass(4, 10))
        assert verdict["holds"]
        assert verdict["common_value"] == 5
        assert verdict["checks"]["I/J = I'/J'"]

    def test_different_residues(self):
        verdict = equal_arity_invariants(CongruenceClass(2, 5), CongruenceClass(3, 5))
        assert verdict["holds"]
        assert "I/J = I'/J'" not in verdict["checks"]

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            equal_arity_invariants(CongruenceClass(2, 3), CongruenceClass(2, 5))


class TestClassTable:
    def test_table(self):
        df = class_table(10)
        assert list(df.columns) == ["a", "b", "m", "n", "I", "J"]
        assert len(df) == 45
        assert df.iloc[0].tolist() == [1, 2, 3, 2, 1, 0]
        rows = {(r.a, r.b): r for r in df.itertuples(index=False)}
        for ab, expected in SHAPES.items():
            assert (rows[ab].m, rows[ab].n, rows[ab].I, rows[ab].J) == expected
        for ab in WITHOUT_ARITY:
            assert rows[ab].m is None

    def test_csv_blanks(self):
        lines = class_table(4).to_csv(index=False).splitlines()
        assert lines[0] == "a,b,m,n,I,J"
        assert "2,4,,,," in lines


TABLE_RINGS = [
    (a, b) for b in range(2, 11) for a in range(1, b) if shaped(CongruenceClass(a, b))
]


class TestTableRingLaws:
    @pytest.mark.parametrize("ab", TABLE_RINGS)
    @settings(derandomize=True, max_examples=500, deadline=None)
    @given(data=st.data())
    def test_querelement_and_closure(self, ab, data):
        ring = congruence_ring_from(*ab)
        indices = st.integers(-10**6, 10**6)
        x = ring.element(data.draw(indices))
        assert ring.contains(ring.querelement(x))
        assert ring.add([x] * (ring.m - 1) + [ring.querelement(x)]) == x
        summands = [ring.element(data.draw(indices)) for _ in range(ring.m)]
        factors = [ring.element(data.draw(indices)) for _ in range(ring.n)]
        assert ring.contains(ring.add(summands))
        assert ring.contains(ring.mul(factors))
