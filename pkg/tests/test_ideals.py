import pytest

from ringlab.errors import NotProperError
from ringlab.ideals import (
    all_ideals,
    annihilator,
    colon,
    ideal_generate,
    ideal_product,
    ideal_pushforward,
    ideal_sum,
    is_maximal,
    is_prime,
    jacobson_radical,
    localize,
    localize_oracle,
    max_ideals,
    mcs_generate,
    min_primes_over,
    prime_violation,
    s_units,
    spec,
    validate_ideal,
)
from ringlab.rings import find_isomorphism, make_product, make_zn


@pytest.fixture(scope="module")
def z12():
    return make_zn(12)


@pytest.fixture(scope="module")
def z6():
    return make_zn(6)


def test_ideal_generate_two_generators(z12):
    # oracle: all 4a + 6b mod 12
    expected = {(4 * a + 6 * b) % 12 for a in range(12) for b in range(12)}
    ideal = ideal_generate(z12, [4, 6])
    assert ideal.members == expected == {0, 2, 4, 6, 8, 10}


def test_ideal_generate_empty(z12):
    assert ideal_generate(z12, []).members == {0}


def test_ideal_generate_unit(z12):
    assert ideal_generate(z12, [5]).members == frozenset(range(12))


def test_all_ideals_z12(z12):
    lattice = all_ideals(z12)
    # divisor-lattice oracle for Z_12
    expected = [
        frozenset(range(0, 12, d)) if d else frozenset({0}) for d in (0, 6, 4, 3, 2, 1)
    ]
    assert [A.members for A in lattice] == expected
    assert len(lattice) == 6


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_all_ideals_field(p):
    assert len(all_ideals(make_zn(p))) == 2


def test_all_ideals_product_is_componentwise():
    # ideals of a product are products of ideals: 2 x 2 for Z2 x Z2
    R = make_product(make_zn(2), make_zn(2))
    assert len(all_ideals(R)) == 4


def test_annihilator_examples(z12, z6):
    assert annihilator(z12, [4]).members == {y for y in range(12) if (4 * y) % 12 == 0}
    assert annihilator(z12, [4]).members == {0, 3, 6, 9}
    assert annihilator(z12, [0]).members == frozenset(range(12))
    assert annihilator(z6, [2, 3]).members == {0}


def test_colon_examples(z12):
    A4 = ideal_generate(z12, [4])
    assert colon(A4, [2]).members == {0, 2, 4, 6, 8, 10}
    for gens in ([], [6], [4], [2]):
        A = ideal_generate(z12, gens)
        assert colon(A, [1]).members == A.members
    K = [3, 4]
    zero = ideal_generate(z12, [])
    assert colon(zero, K).members == annihilator(z12, K).members


def test_colon_monotone_in_divisor(z12):
    # K inside K' shrinks the colon ideal
    A = ideal_generate(z12, [4])
    singles = [frozenset({x}) for x in range(12)]
    for K in singles:
        for Kp in (K | {y} for y in range(12)):
            assert colon(A, Kp).members <= colon(A, K).members


def test_colon_and_annihilator_are_ideals(z12):
    for K in ([2], [3, 4], [5]):
        validate_ideal(colon(ideal_generate(z12, [4]), K))
        validate_ideal(annihilator(z12, K))


def test_prime_violation_z6(z6):
    zero = ideal_generate(z6, [])
    assert prime_violation(zero) == (2, 3)
    assert not is_prime(zero)


def test_prime_and_maximal_z12(z12):
    A2 = ideal_generate(z12, [2])
    assert is_prime(A2) and is_maximal(A2)
    A4 = ideal_generate(z12, [4])
    assert not is_prime(A4) and not is_maximal(A4)
    assert {A.members for A in spec(z12)} == {
        ideal_generate(z12, [2]).members,
        ideal_generate(z12, [3]).members,
    }
    assert {A.members for A in max_ideals(z12)} == {A.members for A in spec(z12)}


def test_field_zero_ideal_prime():
    R = make_zn(7)
    assert is_prime(ideal_generate(R, []))


def test_min_primes(z6, z12):
    zero6 = ideal_generate(z6, [])
    mins = min_primes_over(zero6)
    assert {A.members for A in mins} == {
        ideal_generate(z6, [2]).members,
        ideal_generate(z6, [3]).members,
    }
    P = ideal_generate(z12, [3])
    assert [A.members for A in min_primes_over(P)] == [P.members]
    assert [A.members for A in min_primes_over(ideal_generate(z12, [4]))] == [
        ideal_generate(z12, [2]).members
    ]
    with pytest.raises(NotProperError):
        min_primes_over(ideal_generate(z12, [1]))


def test_min_primes_are_prime_and_contain(z12):
    for A in all_ideals(z12):
        if not A.is_proper():
            continue
        for P in min_primes_over(A):
            assert is_prime(P)
            assert A.members <= P.members


@pytest.mark.parametrize("n", [4, 6, 12, 16, 30])
def test_every_maximal_is_prime(n):
    R = make_zn(n)
    for M in max_ideals(R):
        assert is_prime(M)


def test_jacobson_radical():
    assert jacobson_radical(make_zn(12)).members == {0, 6}
    assert jacobson_radical(make_zn(7)).members == {0}
    assert jacobson_radical(make_zn(4)).members == {0, 2}


def test_mcs_generate(z12):
    assert mcs_generate(z12, [5]).members == {1, 5}
    assert mcs_generate(z12, []).members == {1}
    assert mcs_generate(z12, [2]).members == {1, 2, 4, 8}


def test_s_units(z12):
    S1 = mcs_generate(z12, [])
    assert s_units(z12, S1) == z12.units
    S4 = mcs_generate(z12, [4])
    assert 4 in s_units(z12, S4)
    Sall = mcs_generate(z12, list(range(12)))
    assert s_units(z12, Sall) == frozenset(range(12))


def test_localize_trivial(z12):
    result = localize(z12, mcs_generate(z12, []))
    assert result.localized.size == 12
    assert sorted(result.map.image) == list(range(12))
    assert result.kernel.members == {0}


def test_localize_z6_at_3(z6):
    result = localize(z6, mcs_generate(z6, [3]))
    assert result.absorbing_idempotent == 3
    assert result.localized.size == 2
    assert result.kernel.members == {0, 2, 4}
    assert find_isomorphism(result.localized, make_zn(2)) is not None


def test_localize_at_existing_unit(z12):
    result = localize(z12, mcs_generate(z12, [5]))
    assert result.localized.size == 12
    assert find_isomorphism(result.localized, z12) is not None


def test_localize_oracle_trivial(z12):
    O = localize_oracle(z12, mcs_generate(z12, []))
    assert O.size == 12
    assert find_isomorphism(O, z12) is not None


def test_localize_oracle_z6(z6):
    O = localize_oracle(z6, mcs_generate(z6, [3]))
    assert O.size == 2


def test_localize_oracle_z12_powers_of_two(z12):
    O = localize_oracle(z12, mcs_generate(z12, [2]))
    assert O.size == 3
    assert find_isomorphism(O, make_zn(3)) is not None


@pytest.mark.parametrize("n", [2, 4, 6, 8, 9, 10, 12, 15, 16])
def test_localize_matches_oracle(n):
    R = make_zn(n)
    for g in range(n):
        S = mcs_generate(R, [g])
        built = localize(R, S).localized
        oracle = localize_oracle(R, S)
        assert built.size == oracle.size
        assert find_isomorphism(built, oracle) is not None


def test_pushforward_zero(z6):
    L = localize(z6, mcs_generate(z6, [3]))
    pushed = ideal_pushforward(L, ideal_generate(z6, []))
    assert pushed.members == {0}


def test_pushforward_kills_kernel_members(z6):
    L = localize(z6, mcs_generate(z6, [3]))
    pushed = ideal_pushforward(L, ideal_generate(z6, [2]))
    assert pushed.members == {0}  # 3*2 = 0 in Z6


def test_pushforward_under_unit_localization(z12):
    L = localize(z12, mcs_generate(z12, [5]))
    A = ideal_generate(z12, [4])
    pushed = ideal_pushforward(L, A)
    labels = {L.localized.labels[m] for m in pushed.members}
    assert labels == {z12.labels[m] for m in A.members}


def test_pushforward_generators_match_full_image(z12):
    for g in (2, 3, 4, 6):
        S = mcs_generate(z12, [g])
        L = localize(z12, S)
        for A in all_ideals(z12):
            pushed = ideal_pushforward(L, A)
            full_image = {int(L.map.image[a]) for a in A.members}
            closure = ideal_generate(L.localized, sorted(full_image))
            assert pushed.members == closure.members


def test_trivial_localization_is_lattice_identity(z12):
    L = localize(z12, mcs_generate(z12, []))
    for A in all_ideals(z12):
        pushed = ideal_pushforward(L, A)
        assert {L.localized.labels[m] for m in pushed.members} == {
            z12.labels[m] for m in A.members
        }


def test_ideal_sum_and_product(z12):
    A = ideal_generate(z12, [4])
    B = ideal_generate(z12, [6])
    assert ideal_sum(A, B).members == {0, 2, 4, 6, 8, 10}
    assert ideal_product(A, B).members == {0}  # 24 = 0 mod 12
    C = ideal_generate(z12, [2])
    assert ideal_product(C, C).members == ideal_generate(z12, [4]).members
