import random
from itertools import product as iproduct
from math import gcd

import numpy as np
import pytest

from ringlab.errors import DegreeLimitError, NotApplicableError
from ringlab.ideals import all_ideals, ideal_generate, ideal_product, mcs_from_members, mcs_generate
from ringlab.poly import (
    GATE_FAC,
    GATE_PROPERTY_A,
    NO,
    NO_VIOLATION_UP_TO,
    S_UNIT_ANALYTIC_NO,
    S_UNIT_NO_UP_TO,
    S_UNIT_YES,
    YES_BY_THEOREM,
    Poly,
    PolyIdealSpec,
    bounded_S_r_search,
    constant,
    content_ideal,
    content_set,
    decide_content_S_r,
    dedekind_mertens_check,
    dedekind_mertens_sweep,
    mccoy_regular,
    poly_add,
    poly_eval,
    poly_mul,
    poly_s_unit_check,
)
from ringlab.rings import make_product, make_zn


@pytest.fixture(scope="module")
def z2():
    return make_zn(2)


@pytest.fixture(scope="module")
def z3():
    return make_zn(3)


@pytest.fixture(scope="module")
def z6():
    return make_zn(6)


@pytest.fixture(scope="module")
def z12():
    return make_zn(12)


# -- arithmetic ------------------------------------------------------------------------


def test_square_over_z2(z2):
    f = Poly.make(z2, [1, 1])
    assert poly_mul(f, f).coeffs == (1, 0, 1)


def test_multiply_by_zero(z6):
    f = Poly.make(z6, [1, 2, 3])
    assert poly_mul(f, Poly.make(z6, [])).is_zero()


def test_eval_root(z3):
    f = Poly.make(z3, [2, 1])  # x - 1
    assert poly_eval(f, 1) == 0


def test_add_cancels(z6):
    f = Poly.make(z6, [1, 3])
    g = Poly.make(z6, [5, 3])
    assert poly_add(f, g).coeffs == ()


def test_degree_cap(z2):
    f = Poly.make(z2, [1] + [0] * 4 + [1])  # degree 5
    with pytest.raises(DegreeLimitError):
        poly_mul(f, f)


def test_trailing_zeros_trimmed(z6):
    assert Poly.make(z6, [1, 0, 0]).coeffs == (1,)
    assert Poly.make(z6, [0, 0]).coeffs == ()


def test_text_rendering(z3):
    assert Poly.make(z3, [2, 1]).text() == "x+2"
    assert Poly.make(z3, [0, 2]).text() == "2x"
    assert Poly.make(z3, []).text() == "0"


# -- content ----------------------------------------------------------------------------


def test_content_of_zero(z12):
    zero = Poly.make(z12, [])
    assert content_set(zero) == {0}
    assert content_ideal(zero).members == {0}


def test_content_examples(z12):
    even = content_ideal(Poly.make(z12, [4, 2]))
    assert even.members == ideal_generate(z12, [2]).members
    full = content_ideal(Poly.make(z12, [4, 3]))
    assert full.members == frozenset(range(12))


# -- regularity ---------------------------------------------------------------------------


def test_x_always_regular(z6, z12):
    for R in (z6, z12):
        assert mccoy_regular(Poly.make(R, [0, 1]))


def test_2x_not_regular_over_z4():
    R = make_zn(4)
    assert not mccoy_regular(Poly.make(R, [0, 2]))


def test_x_minus_one_regular_over_z3(z3):
    assert mccoy_regular(Poly.make(z3, [2, 1]))


def _brute_has_annihilator(R, coeffs, gdeg):
    """Direct numpy-batched scan for nonzero g of degree <= gdeg with f*g = 0."""
    gs = np.array(list(iproduct(range(R.size), repeat=gdeg + 1)), dtype=np.intp)
    out = np.zeros((len(gs), len(coeffs) + gdeg), dtype=np.intp)
    for i, a in enumerate(coeffs):
        if a == 0:
            continue
        prod = R.mul[a, gs]
        out[:, i : i + gdeg + 1] = R.add[out[:, i : i + gdeg + 1], prod]
    zero_rows = (out == 0).all(axis=1)
    zero_rows[0] = False  # skip g = 0
    return bool(zero_rows.any())


def _snf_kernel_nontrivial(n, coeffs, gdeg):
    """Does the convolution system f*g = 0 have a nonzero solution mod n?

    Diagonalizes the coefficient matrix with unimodular row/column steps.
    Entries may be reduced mod n throughout: changing the matrix by
    multiples of n never changes the solution set of A g = 0 (mod n), and
    the reduction keeps every pivot below n so the elimination terminates.
    The solution count is the product of gcd(d_i, n) over the diagonal
    (missing diagonal entries count as n); g != 0 exists iff that exceeds 1.
    """
    rows = len(coeffs) + gdeg
    cols = gdeg + 1
    m = [
        [(coeffs[k - j] if 0 <= k - j < len(coeffs) else 0) % n for j in range(cols)]
        for k in range(rows)
    ]
    diag = []
    top = 0
    left = 0
    while top < rows and left < cols:
        best = None
        for i in range(top, rows):
            for j in range(left, cols):
                if m[i][j] != 0 and (best is None or m[i][j] < m[best[0]][best[1]]):
                    best = (i, j)
        if best is None:
            break
        m[top], m[best[0]] = m[best[0]], m[top]
        for row in m:
            row[left], row[best[1]] = row[best[1]], row[left]
        while True:
            progressed = False
            for i in range(top + 1, rows):
                if m[i][left] != 0:
                    q = m[i][left] // m[top][left]
                    for j in range(left, cols):
                        m[i][j] = (m[i][j] - q * m[top][j]) % n
                    if m[i][left] != 0:
                        m[top], m[i] = m[i], m[top]
                        progressed = True
            for j in range(left + 1, cols):
                if m[top][j] != 0:
                    q = m[top][j] // m[top][left]
                    for i in range(top, rows):
                        m[i][j] = (m[i][j] - q * m[i][left]) % n
                    if m[top][j] != 0:
                        for row in m:
                            row[left], row[j] = row[j], row[left]
                        progressed = True
            if not progressed:
                break
        diag.append(m[top][left])
        top += 1
        left += 1
    count = 1
    for j in range(cols):
        d = diag[j] if j < len(diag) else 0
        count *= gcd(d, n) if d else n
    return count > 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_mccoy_matches_direct_search_small(n):
    R = make_zn(n)
    for coeffs in iproduct(range(n), repeat=4):
        f = Poly.make(R, coeffs)
        if f.is_zero():
            continue
        expected = not _brute_has_annihilator(R, f.coeffs, 6)
        assert mccoy_regular(f) == expected


def test_snf_oracle_agrees_with_brute_on_z6():
    rng = random.Random(11)
    R = make_zn(6)
    for _ in range(60):
        coeffs = [rng.randrange(6) for _ in range(3)]
        f = Poly.make(R, coeffs)
        if f.is_zero():
            continue
        assert _snf_kernel_nontrivial(6, f.coeffs, 3) == _brute_has_annihilator(R, f.coeffs, 3)


def test_mccoy_matches_snf_kernel_z6():
    R = make_zn(6)
    for coeffs in iproduct(range(6), repeat=4):
        f = Poly.make(R, coeffs)
        if f.is_zero():
            continue
        assert mccoy_regular(f) == (not _snf_kernel_nontrivial(6, f.coeffs, 6))


def test_mccoy_matches_snf_kernel_z12_sample():
    rng = random.Random(7)
    R = make_zn(12)
    for _ in range(300):
        coeffs = [rng.randrange(12) for _ in range(4)]
        f = Poly.make(R, coeffs)
        if f.is_zero():
            continue
        assert mccoy_regular(f) == (not _snf_kernel_nontrivial(12, f.coeffs, 6))


# -- content-product identity ----------------------------------------------------------------


def test_dm_zero_factor(z6):
    assert dedekind_mertens_check(Poly.make(z6, [1, 2]), Poly.make(z6, []))


def test_dm_worked_example(z6):
    w = Poly.make(z6, [1, 2])
    z = Poly.make(z6, [2, 3])
    assert dedekind_mertens_check(w, z)


def test_dm_constants(z12):
    w = constant(z12, 2)
    z = constant(z12, 3)
    cz = content_ideal(z)
    cw = content_ideal(w)
    both = ideal_product(cz, cw)
    assert both.members == ideal_generate(z12, [6]).members
    assert dedekind_mertens_check(w, z)


@pytest.mark.parametrize("make", [lambda: make_zn(6), lambda: make_zn(12), lambda: make_product(make_zn(2), make_zn(2))])
def test_dm_seeded_sweep(make):
    checked, failure = dedekind_mertens_sweep(make(), 200, 24103)
    assert failure is None and checked == 200


def test_content_submultiplicative(z6):
    rng = random.Random(3)
    for _ in range(100):
        w = Poly.make(z6, [rng.randrange(6) for _ in range(4)])
        z = Poly.make(z6, [rng.randrange(6) for _ in range(4)])
        cwz = content_ideal(poly_mul(w, z)) if not (w.is_zero() or z.is_zero()) else None
        if cwz is None:
            continue
        prod = ideal_product(content_ideal(w), content_ideal(z))
        assert cwz.members <= prod.members


# -- bounded S-r search ------------------------------------------------------------------------


def test_kernel_search_z3(z3):
    spec = PolyIdealSpec.eval_kernel(1, ideal_generate(z3, []))
    S = mcs_generate(z3, [2])
    v = bounded_S_r_search(spec, S, 3)
    assert v.outcome == NO
    assert v.witness_degree == 1
    w, z = v.pair
    assert w.text() == "x+2" and z.text() == "1"
    # replay: the pair genuinely defeats every s
    assert mccoy_regular(w)
    assert poly_eval(poly_mul(w, z), 1) == 0
    for s in S.sorted_members:
        assert poly_eval(poly_mul(constant(z3, s), z), 1) != 0


def test_kernel_search_z2(z2):
    spec = PolyIdealSpec.eval_kernel(1, ideal_generate(z2, []))
    v = bounded_S_r_search(spec, mcs_generate(z2, []), 3)
    assert v.outcome == NO
    assert v.pair[0].text() == "x+1" and v.pair[1].text() == "1"
    assert v.witness_degree == 1


def test_content_zero_ideal_never_violates(z2, z3):
    for R in (z2, z3):
        spec = PolyIdealSpec.content(ideal_generate(R, []))
        for S in (mcs_generate(R, []), mcs_from_members(R, R.units)):
            v = bounded_S_r_search(spec, S, 3)
            assert v.outcome == NO_VIOLATION_UP_TO
            assert v.bound == 3


def test_content_search_on_finite_base_sees_no_violation(z6):
    for A in all_ideals(z6):
        if not A.is_proper():
            continue
        S = mcs_generate(z6, [])
        v = bounded_S_r_search(PolyIdealSpec.content(A), S, 2)
        assert v.outcome == NO_VIOLATION_UP_TO


# -- gate decisions ------------------------------------------------------------------------------


def test_decide_via_property_a_gate(z12):
    A = ideal_generate(z12, [2])
    v = decide_content_S_r(A, mcs_generate(z12, []))
    assert v.outcome == YES_BY_THEOREM
    assert v.gate == GATE_PROPERTY_A  # fac fails on Z12, property A carries it


def test_decide_via_fac_gate(z3):
    A = ideal_generate(z3, [])
    v = decide_content_S_r(A, mcs_generate(z3, [2]))
    assert v.outcome == YES_BY_THEOREM
    assert v.gate == GATE_FAC


def test_decide_falls_back_to_search(z12):
    # fac fails; S contains a zero divisor so the regularity gate closes too
    A = ideal_generate(z12, [3])
    S = mcs_generate(z12, [4])
    v = decide_content_S_r(A, S)
    assert v.gate is None
    assert v.outcome == NO_VIOLATION_UP_TO


def test_decide_disjointness_error(z12):
    A = ideal_generate(z12, [2])
    S = mcs_generate(z12, [2])
    with pytest.raises(NotApplicableError):
        decide_content_S_r(A, S)


def test_gate_coherence_with_bounded_search(z6):
    for A in all_ideals(z6):
        if not A.is_proper():
            continue
        for S in (mcs_generate(z6, []), mcs_from_members(z6, z6.units)):
            if S.members & A.members:
                continue
            v = decide_content_S_r(A, S)
            if v.outcome == YES_BY_THEOREM:
                check = bounded_S_r_search(PolyIdealSpec.content(A), S, 3)
                assert check.outcome == NO_VIOLATION_UP_TO


# -- S-units in the polynomial ring ----------------------------------------------------------------


def test_x_is_analytically_blocked(z3):
    S = mcs_generate(z3, [2])
    res = poly_s_unit_check(Poly.make(z3, [0, 1]), S, 3)
    assert res.kind == S_UNIT_ANALYTIC_NO


def test_constant_in_s_is_an_s_unit(z3):
    S = mcs_generate(z3, [2])
    res = poly_s_unit_check(constant(z3, 2), S, 3)
    assert res.kind == S_UNIT_YES
    assert res.witness.text() == "1"


def test_root_obstruction_reported(z2):
    S = mcs_generate(z2, [])
    res = poly_s_unit_check(Poly.make(z2, [1, 1]), S, 4)
    assert res.kind == S_UNIT_NO_UP_TO
    assert res.obstructions == (1,)
