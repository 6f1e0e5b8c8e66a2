from fractions import Fraction

import pytest

import oracles
from weilptb.errors import Infeasible, NotLeviStable
from weilptb.exact import Q_J, Q_ONE, quat
from weilptb.langlands import DivAlg
from weilptb.orbits import (
    KIND_QUAT,
    KIND_RAT,
    ExactMatrix,
    OrbitMatrix,
    PartitionSpec,
    RootDatum,
    block_map,
    chi_composite_check,
    enumerate_J,
    find_positive_witness,
    involution_base,
    is_monomial,
    levi_stable,
    representative_gS,
    root_datum_from_orbit,
    sigma_S_conjugator,
)

F = Fraction


def spec_R(*parts):
    return PartitionSpec(DivAlg.R, parts)


def spec_H(n):
    return PartitionSpec(DivAlg.H, (1,) * n)


def all_specs_up_to(size):
    """Every composition of sizes <= size into parts {1,2}, plus quaternion ranks."""
    specs = []
    for total in range(2, size + 1, 2):
        stack = [()]
        while stack:
            egg = stack.pop()
            s = sum(egg)
            if s == total:
                specs.append(spec_R(*egg))
            elif s < total:
                stack.append(egg + (1,))
                stack.append(egg + (2,))
    for n in range(1, size + 1):
        specs.append(spec_H(n))
    return specs


class TestEnumerate:
    def test_single_discrete_block(self):
        got = enumerate_J(spec_R(2))
        assert [m.S for m in got] == [((2,),)]

    def test_two_characters(self):
        got = enumerate_J(spec_R(1, 1))
        assert [m.S for m in got] == [((0, 1), (1, 0))]

    def test_quaternion_rank_three(self):
        assert len(enumerate_J(spec_H(3))) == 4

    def test_counts_match_bruteforce(self):
        for n in range(1, 6):
            assert len(enumerate_J(spec_H(n))) == oracles.count_involutions(n)
        for n in range(1, 5):
            expected = oracles.count_involutions(2 * n, fixed_point_free=True)
            assert len(enumerate_J(spec_R(*(1,) * (2 * n)))) == expected

    def test_deterministic_order(self):
        a = [m.S for m in enumerate_J(spec_R(2, 1, 1))]
        assert a == sorted(a)


class TestMonomial:
    def test_fixed_discrete_block(self):
        S = enumerate_J(spec_R(2))[0]
        assert is_monomial(S).cycle_string() == "id"

    def test_swap(self):
        S = enumerate_J(spec_R(1, 1))[0]
        assert is_monomial(S).cycle_string() == "(1 2)"

    def test_non_monomial(self):
        S = OrbitMatrix(spec_R(2, 1, 1), ((0, 1, 1), (1, 0, 0), (1, 0, 0)))
        assert is_monomial(S) is None


class TestRepresentatives:
    def test_fixed_block_identity(self):
        S = enumerate_J(spec_R(2))[0]
        assert representative_gS(S) == ExactMatrix.identity(2, KIND_RAT)

    def test_character_swap_identity(self):
        S = enumerate_J(spec_R(1, 1))[0]
        assert representative_gS(S) == ExactMatrix.identity(2, KIND_RAT)

    def test_quaternion_transposition(self):
        S = OrbitMatrix(spec_H(2), ((0, 1), (1, 0)))
        g = representative_gS(S)
        assert g.rows == ((Q_ONE, Q_ONE), (Q_J, -Q_J))

    def test_invertible_and_orthogonal(self):
        for spec in all_specs_up_to(6):
            for S in enumerate_J(spec):
                g = representative_gS(S)
                assert g.is_invertible()
                if spec.D is DivAlg.R:
                    assert g.mul(g.transpose()) == ExactMatrix.identity(g.n, KIND_RAT)
                    assert all(x in (0, 1) for row in g.rows for x in row)


class TestConjugator:
    def test_character_swap(self):
        S = enumerate_J(spec_R(1, 1))[0]
        u = sigma_S_conjugator(S)
        assert u.rows == ((F(0), F(-1)), (F(1), F(0)))

    def test_fixed_block(self):
        S = enumerate_J(spec_R(2))[0]
        assert sigma_S_conjugator(S).rows == ((F(0), F(-1)), (F(1), F(0)))

    def test_quaternion_rank_one(self):
        S = OrbitMatrix(spec_H(1), ((1,),))
        assert sigma_S_conjugator(S).rows == ((quat(0, 1),),)

    def test_square_is_central(self):
        for spec in (spec_R(2, 1, 1), spec_H(3)):
            for S in enumerate_J(spec):
                u = sigma_S_conjugator(S)
                sq = u.mul(u)
                minus_one = ExactMatrix.identity(u.n, u.kind).scaled(
                    F(-1) if u.kind == KIND_RAT else quat(-1)
                )
                assert sq == minus_one


class TestLeviStability:
    def test_swap_is_stable(self):
        assert levi_stable(enumerate_J(spec_R(1, 1))[0]) is True

    def test_non_monomial_unstable(self):
        S = OrbitMatrix(spec_R(2, 1, 1), ((0, 1, 1), (1, 0, 0), (1, 0, 0)))
        assert levi_stable(S) is False

    def test_quaternion_identity_stable(self):
        S = OrbitMatrix(spec_H(2), ((1, 0), (0, 1)))
        assert levi_stable(S) is True

    def test_agreement_on_all_small_specs(self):
        # levi_stable itself cross-checks the two computation paths
        for spec in all_specs_up_to(6):
            for S in enumerate_J(spec):
                assert levi_stable(S) == (is_monomial(S) is not None)


class TestBlockMap:
    def test_character_swap(self):
        S = enumerate_J(spec_R(1, 1))[0]
        bm = block_map(S)
        assert bm.varsigma.cycle_string() == "(1 2)"
        one = ExactMatrix.identity(1, KIND_RAT)
        assert bm.apply(0, one) == one

    def test_fixed_discrete_block(self):
        S = enumerate_J(spec_R(2))[0]
        bm = block_map(S)
        assert bm.varsigma.cycle_string() == "id"
        assert bm.fixed_dims() == (2,)
        # the induced map is conjugation by the rotation by a quarter turn
        c = ExactMatrix(KIND_RAT, ((F(0), F(-1)), (F(1), F(0))))
        cinv = c.inverse()
        x = ExactMatrix(KIND_RAT, ((F(1), F(2)), (F(3), F(4))))
        assert bm.apply(0, x) == c.mul(x).mul(cinv)

    def test_quaternion_rank_one(self):
        S = OrbitMatrix(spec_H(1), ((1,),))
        bm = block_map(S)
        assert bm.varsigma.cycle_string() == "id"
        i = quat(0, 1)
        for q in (quat(1), quat(0, 1), quat(0, 0, 1), quat(2, 3, -1, 5)):
            assert bm.apply(0, q) == i * q * i.inverse()

    def test_requires_monomial(self):
        S = OrbitMatrix(spec_R(2, 1, 1), ((0, 1, 1), (1, 0, 0), (1, 0, 0)))
        with pytest.raises(NotLeviStable):
            block_map(S)

    def test_block_targets_and_fixed_dims(self):
        for spec in all_specs_up_to(6):
            for S in enumerate_J(spec):
                mono = is_monomial(S)
                if mono is None:
                    continue
                bm = block_map(S)
                assert bm.varsigma == mono
                for i, dim in enumerate(bm.fixed_dims()):
                    if mono(i) == i:
                        assert dim == 2
                    else:
                        assert dim is None


class TestChiComposite:
    def test_character_swap(self):
        S = enumerate_J(spec_R(1, 1))[0]
        assert chi_composite_check(S, 0) is True

    def test_quaternion_transposition(self):
        S = OrbitMatrix(spec_H(2), ((0, 1), (1, 0)))
        assert chi_composite_check(S, 0) is True

    def test_fixed_discrete_block(self):
        S = enumerate_J(spec_R(2))[0]
        assert chi_composite_check(S, 0) is True

    def test_all_small_monomial_orbits(self):
        for spec in all_specs_up_to(5):
            for S in enumerate_J(spec):
                mono = is_monomial(S)
                if mono is None:
                    continue
                for i in range(spec.r):
                    if mono(i) >= i:
                        assert chi_composite_check(S, i) is True


class TestWitness:
    def test_negated_swap(self):
        rd = RootDatum(
            rank=2,
            roots={(1, -1), (-1, 1)},
            positive={(1, -1)},
            levi=set(),
            nilradical={(1, -1)},
            sigma=((0, -1), (-1, 0)),
        )
        assert find_positive_witness(rd) == (F(1), F(-1))

    def test_plain_swap_has_empty_cone(self):
        rd = RootDatum(
            rank=2,
            roots={(1, -1), (-1, 1)},
            positive={(1, -1)},
            levi=set(),
            nilradical={(1, -1)},
            sigma=((0, 1), (1, 0)),
        )
        assert find_positive_witness(rd) is None

    def test_full_levi_has_empty_cone(self):
        rd = RootDatum(
            rank=2,
            roots={(1, -1), (-1, 1)},
            positive={(1, -1)},
            levi={(1, -1), (-1, 1)},
            nilradical=set(),
            sigma=((1, 0), (0, 1)),
        )
        assert find_positive_witness(rd) is None

    def test_derived_data_small(self):
        hits = 0
        for spec in all_specs_up_to(4):
            for S in enumerate_J(spec):
                rd = root_datum_from_orbit(S)
                witness = find_positive_witness(rd)
                if witness is None:
                    continue
                hits += 1
                sigma_nil = {rd.apply_sigma(v) for v in rd.nilradical}
                sigma_levi = {rd.apply_sigma(v) for v in rd.levi}
                xi = (
                    (rd.nilradical & sigma_levi)
                    | (sigma_nil & rd.levi)
                    | (rd.nilradical & sigma_nil)
                )
                for alpha in xi:
                    assert sum(a * x for a, x in zip(alpha, witness)) > 0
                assert tuple(rd.apply_sigma(witness)) == witness
                for beta in rd.levi & sigma_levi:
                    assert sum(b * x for b, x in zip(beta, witness)) == 0
        assert hits > 0


class TestExactMatrix:
    def test_quaternion_inverse(self):
        g = ExactMatrix(KIND_QUAT, ((Q_ONE, Q_ONE), (Q_J, -Q_J)))
        assert g.mul(g.inverse()) == ExactMatrix.identity(2, KIND_QUAT)

    def test_complexified_norm(self):
        q = quat(1, 2)
        m = ExactMatrix(KIND_QUAT, ((q,),))
        assert m.complexify().det().re == q.reduced_norm()

    def test_singular_matrix_rejected(self):
        m = ExactMatrix(KIND_RAT, ((F(1), F(2)), (F(2), F(4))))
        with pytest.raises(ZeroDivisionError):
            m.inverse()

    def test_base_involution_squares_to_minus_one(self):
        for spec in (spec_R(1, 1, 1, 1), spec_H(3)):
            w = involution_base(spec)
            sq = w.mul(w)
            scalar = F(-1) if w.kind == KIND_RAT else quat(-1)
            assert sq == ExactMatrix.identity(w.n, w.kind).scaled(scalar)
