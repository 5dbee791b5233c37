import pytest
from hypothesis import given, settings, strategies as st

from toricpairs.divisor import (
    DivisorError,
    InvariantDivisor,
    SupportSet,
    canonical_divisor,
    divisor,
    divisor_from_document,
    divisor_to_document,
    intersect_curve,
    intersection_matrix,
    is_ample,
    linear_equivalence_witness,
    linearly_equivalent,
    log_anticanonical,
    principal_divisor,
    support_from_document,
    support_to_document,
)
from toricpairs.fan import enumerate_fans, from_gamma_sequence, hirzebruch, projective_plane, validate

from oracles import kleiman_from_matrix

P2 = projective_plane()
SMALL_FANS = [from_gamma_sequence(k) for n in range(3, 8) for k in enumerate_fans(n, 4)]


def test_canonical_divisor():
    assert canonical_divisor(P2).coeffs == (-1, -1, -1)
    assert canonical_divisor(hirzebruch(3)).coeffs == (-1,) * 4
    assert all(c == -1 for c in canonical_divisor(SMALL_FANS[-1]).coeffs)


def test_intersect_curve_examples():
    anti = -canonical_divisor(P2)
    assert [intersect_curve(anti, i) for i in range(3)] == [3, 3, 3]
    zero = divisor(hirzebruch(2), [0, 0, 0, 0])
    assert [intersect_curve(zero, i) for i in range(4)] == [0] * 4


@pytest.mark.parametrize("r", range(5))
@pytest.mark.parametrize("a", [(1, 2, 3, 4), (-2, 0, 5, 1), (0, 1, 1, 0)])
def test_intersect_curve_on_hirzebruch(r, a):
    L = divisor(hirzebruch(r), a)
    a0, a1, a2, a3 = a
    assert intersect_curve(L, 2) == a1 + a3 - r * a2
    assert intersect_curve(L, 0) == a1 + a3 + r * a0
    assert intersect_curve(L, 1) == a0 + a2
    assert intersect_curve(L, 3) == a0 + a2


def test_intersection_matrix_f2_and_p2():
    m = intersection_matrix(hirzebruch(2))
    assert [m[i][i] for i in range(4)] == [2, 0, -2, 0]
    assert m[0][2] == m[2][0] == m[1][3] == m[3][1] == 0
    assert all(m[i][(i + 1) % 4] == 1 for i in range(4))
    assert intersection_matrix(P2) == [[1, 1, 1]] * 3


@pytest.mark.parametrize("fan", SMALL_FANS, ids=lambda f: str(f.gammas))
def test_intersection_matrix_symmetric_and_anticanonical_rows(fan):
    m = intersection_matrix(fan)
    n = fan.n
    assert all(m[i][j] == m[j][i] for i in range(n) for j in range(n))
    assert [sum(row) for row in m] == [2 - g for g in fan.gammas]


coeff_lists = st.lists(st.integers(-6, 6), min_size=7, max_size=7)


@settings(max_examples=200)
@given(st.sampled_from(SMALL_FANS), coeff_lists)
def test_matrix_rows_reproduce_kleiman_numbers(fan, coeffs):
    L = divisor(fan, coeffs[: fan.n])
    m = intersection_matrix(fan)
    for i in range(fan.n):
        assert sum(m[i][k] * L.coeffs[k] for k in range(fan.n)) == intersect_curve(L, i)


@settings(max_examples=200)
@given(st.sampled_from(SMALL_FANS), coeff_lists)
def test_is_ample_matches_matrix_oracle(fan, coeffs):
    L = divisor(fan, coeffs[: fan.n])
    k = kleiman_from_matrix(fan.rays, L.coeffs)
    verdict = is_ample(L)
    assert list(verdict.kleiman) == k
    assert verdict.ample == all(v > 0 for v in k)
    if not verdict.ample:
        assert k[verdict.witness] <= 0
    else:
        assert verdict.witness is None


def test_is_ample_examples():
    assert is_ample(divisor(P2, [1, 1, 1]))
    for r in range(10):
        assert is_ample(divisor(hirzebruch(r), [1, 1, 0, 1]))
        v = is_ample(divisor(hirzebruch(r), [0, 1, 0, 1]))
        assert not v.ample and v.witness in (1, 3)
        assert v.kleiman[1] == v.kleiman[3] == 0


def test_principal_divisor_examples():
    f = hirzebruch(3)
    assert principal_divisor(f, (0, 0)).coeffs == (0, 0, 0, 0)
    assert principal_divisor(f, (1, 0)).coeffs == (0, 1, 0, -1)
    assert principal_divisor(f, (0, 1)).coeffs == (-1, 0, 1, 3)


@settings(max_examples=300)
@given(st.sampled_from(SMALL_FANS), st.integers(-20, 20), st.integers(-20, 20))
def test_principal_divisors_have_degree_zero(fan, x, y):
    P = principal_divisor(fan, (x, y))
    assert all(intersect_curve(P, i) == 0 for i in range(fan.n))


@settings(max_examples=200)
@given(st.sampled_from(SMALL_FANS), coeff_lists, st.integers(-10, 10), st.integers(-10, 10))
def test_ampleness_invariant_under_principal_shift(fan, coeffs, x, y):
    L = divisor(fan, coeffs[: fan.n])
    shifted = L + principal_divisor(fan, (x, y))
    assert is_ample(shifted).kleiman == is_ample(L).kleiman
    assert linear_equivalence_witness(shifted, L) == (x, y)


def test_linear_equivalence_examples():
    p2_anti = divisor(P2, [1, 1, 1])
    assert linearly_equivalent(p2_anti, divisor(P2, [3, 0, 0]))
    for r in range(8):
        f = hirzebruch(r)
        assert linearly_equivalent(divisor(f, [1, 1, 1, 1]), divisor(f, [2, 0, 0, 2 - r]))
        assert not linearly_equivalent(divisor(f, [1, 0, 0, 0]), divisor(f, [0, 1, 0, 0]))


def test_log_anticanonical():
    assert log_anticanonical(P2, {0}).coeffs == (0, 1, 1)
    f = SMALL_FANS[-1]
    assert log_anticanonical(f, set()).coeffs == (1,) * f.n
    assert log_anticanonical(f, range(f.n)).coeffs == (0,) * f.n


def test_support_set_masks():
    f = hirzebruch(1)
    s = SupportSet.from_mask(f, 0b1010)
    assert s.indices == {1, 3} and s.mask == 0b1010
    assert s.complement == {0, 2}
    with pytest.raises(DivisorError):
        SupportSet(f, frozenset({4}))


def test_divisor_validation():
    with pytest.raises(DivisorError):
        divisor(P2, [1, 1])
    with pytest.raises(TypeError):
        divisor(P2, [1, 1, 0.5])
    with pytest.raises(DivisorError):
        divisor(P2, [1, 1, 1]) - divisor(hirzebruch(0), [1, 1, 1, 1])


def test_documents():
    f = hirzebruch(2)
    L = divisor(f, [1, 2, 3, 4])
    assert divisor_to_document(L) == {"coeffs": [1, 2, 3, 4]}
    assert divisor_from_document(f, {"coeffs": [1, 2, 3, 4]}) == L
    s = SupportSet(f, frozenset({2, 0}))
    assert support_to_document(s) == {"delta": [0, 2]}
    assert support_from_document(f, {"delta": [0, 2]}) == s
