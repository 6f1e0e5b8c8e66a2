import itertools

import pytest
from hypothesis import given, settings

import oracles
from strategies import hecke_characters, irr_reps
from weilptb.errors import MixedVariants, NotEligible, NotInT, OddDimension, PreconditionFailed
from weilptb.exact import gr
from weilptb.distinction import (
    Involution,
    abc_bookkeeping,
    abc_prediction,
    check_duality_corollary,
    check_main_theorem,
    enumerate_T,
    epsilon_identity,
    esi_distinguished,
    involutions,
    is_gsp_with_similitude,
    pair_distinguished,
)
from weilptb.langlands import (
    P1,
    P2,
    T,
    DivAlg,
    HeckeCharacter,
    IrrRepGL,
    StandardModule,
    llc,
    make_standard,
)
from weilptb.weil import WeilRep, one_dim, two_dim

HALF = gr("1/2")


def chi(l, eta=0):
    return HeckeCharacter(l, gr(eta) if not hasattr(eta, "re") else eta)


class TestInvolution:
    def test_enumeration_order(self):
        got = [s.perm for s in involutions(3)]
        assert got[0] == (0, 1, 2)
        assert len(got) == 4
        assert got == sorted(got)

    def test_cycle_string(self):
        assert Involution((0, 1)).cycle_string() == "id"
        assert Involution((1, 0, 3, 2)).cycle_string() == "(1 2)(3 4)"

    def test_rejects_non_involution(self):
        with pytest.raises(ValueError):
            Involution((1, 2, 0))


class TestEsiDistinguished:
    def test_real_positive(self):
        assert esi_distinguished(P2(1, 0), chi(4)) is True

    def test_real_small_l(self):
        assert esi_distinguished(P2(3, 0), chi(2)) is False

    def test_quaternion_positive(self):
        assert esi_distinguished(T(1, 0), chi(0)) is True

    def test_quaternion_parity(self):
        assert esi_distinguished(T(2, 0), chi(0)) is False

    def test_exponent_must_match(self):
        assert esi_distinguished(P2(1, HALF), chi(4)) is False
        assert esi_distinguished(P2(1, HALF), chi(4, gr(1))) is True

    def test_p1_not_eligible(self):
        with pytest.raises(NotEligible):
            esi_distinguished(P1(0, 0), chi(1))


class TestPairDistinguished:
    def test_discrete_pair(self):
        assert pair_distinguished(P2(2, 1), P2(2, -1), chi(5)) is True

    def test_character_pair(self):
        assert pair_distinguished(P1(0, 0), P1(1, 0), chi(1)) is True

    def test_weight_mismatch(self):
        assert pair_distinguished(T(1, 0), T(2, 0), chi(0)) is False

    def test_mixed_variants(self):
        with pytest.raises(MixedVariants):
            pair_distinguished(P1(0, 0), P2(1, 0), chi(0))


class TestEnumerateT:
    def test_quaternion_pair(self):
        sm = make_standard(DivAlg.H, [T(1, 0), T(1, 0)])
        got = [s.cycle_string() for s in enumerate_T(sm, chi(0))]
        assert got == ["id", "(1 2)"]

    def test_mixed_module_empty(self):
        sm = make_standard(DivAlg.R, [P2(1, 0), P1(0, 0), P1(1, 0)])
        assert enumerate_T(sm, chi(4)) == []

    def test_empty_module(self):
        sm = StandardModule(DivAlg.R, ())
        got = enumerate_T(sm, chi(0))
        assert len(got) == 1 and got[0].cycle_string() == "id"

    def test_size_invariant_under_reordering(self):
        blocks = [P2(2, 0), P2(2, 0), T(1, 0)]
        c = chi(1)
        sizes = set()
        for perm in itertools.permutations([P2(2, 0), P2(2, 0), P1(0, 0), P1(1, 0)]):
            sm = make_standard(DivAlg.R, perm)
            sizes.add(len(enumerate_T(sm, c)))
        assert len(sizes) == 1


class TestGSp:
    def test_discrete_series(self):
        assert is_gsp_with_similitude(WeilRep.of(two_dim(1, 0)), chi(0)) is True

    def test_two_trivial_lines(self):
        phi = WeilRep.of(one_dim(0, 0), one_dim(0, 0))
        assert is_gsp_with_similitude(phi, chi(0)) is True

    def test_mixed_lines(self):
        phi = WeilRep.of(one_dim(0, 0), one_dim(1, 0))
        assert is_gsp_with_similitude(phi, chi(0)) is False

    def test_odd_dimension(self):
        with pytest.raises(OddDimension):
            is_gsp_with_similitude(WeilRep.of(one_dim(0, 0)), chi(0))

    def test_oracle_on_spec_examples(self):
        cases = [
            (WeilRep.of(two_dim(1, 0)), chi(0)),
            (WeilRep.of(one_dim(0, 0), one_dim(0, 0)), chi(0)),
            (WeilRep.of(one_dim(0, 0), one_dim(1, 0)), chi(0)),
            (WeilRep.of(two_dim(1, 0)), chi(1)),
            (WeilRep.of(two_dim(2, 0)), chi(1)),
            (WeilRep.of(two_dim(2, HALF)), chi(1, gr(1))),
            (WeilRep.of(one_dim(0, 0), one_dim(1, 0)), chi(1)),
            (WeilRep.of(one_dim(0, HALF), one_dim(0, -HALF)), chi(0)),
            (WeilRep.of(two_dim(1, 1), two_dim(1, -1)), chi(0)),
            (WeilRep.of(two_dim(1, 1), two_dim(1, 0)), chi(0)),
        ]
        for phi, c in cases:
            assert is_gsp_with_similitude(phi, c) == oracles.gsp_bruteforce(phi, c), str(phi)

    @given(irr_reps(DivAlg.R, max_blocks=2), hecke_characters)
    @settings(deadline=None, max_examples=50)
    def test_oracle_on_random_small_parameters(self, pi, c):
        phi = llc(pi)
        if phi.dim % 2 or phi.dim > 4:
            return
        try:
            expected = oracles.gsp_bruteforce(phi, c)
        except RuntimeError:
            return
        assert is_gsp_with_similitude(phi, c) == expected


class TestEpsilonIdentity:
    def test_real_case(self):
        lhs, rhs, ok = epsilon_identity(IrrRepGL(DivAlg.R, (P2(1, 0),)), chi(4))
        assert (lhs.sign(), rhs, ok) == (-1, -1, True)

    def test_quaternion_case(self):
        lhs, rhs, ok = epsilon_identity(IrrRepGL(DivAlg.H, (T(1, 0),)), chi(0))
        assert (lhs.sign(), rhs, ok) == (1, 1, True)

    def test_precondition(self):
        with pytest.raises(PreconditionFailed):
            epsilon_identity(IrrRepGL(DivAlg.R, (P2(1, 0),)), chi(1))


class TestAbc:
    def test_quaternion_identity_involution(self):
        sm = make_standard(DivAlg.H, [T(1, 0), T(1, 0)])
        abc = abc_bookkeeping(sm, Involution((0, 1)), chi(0))
        assert abc == (0, 0, 2)
        assert abc_prediction(DivAlg.H, chi(0), abc) == 1

    def test_quaternion_swap(self):
        sm = make_standard(DivAlg.H, [T(1, 0), T(1, 0)])
        abc = abc_bookkeeping(sm, Involution((1, 0)), chi(0))
        assert abc == (0, 1, 0)
        assert abc_prediction(DivAlg.H, chi(0), abc) == 1

    def test_character_pair(self):
        sm = make_standard(DivAlg.R, [P1(0, 0), P1(1, 0)])
        abc = abc_bookkeeping(sm, Involution((1, 0)), chi(1))
        assert abc == (1, 0, 0)
        assert abc_prediction(DivAlg.R, chi(1), abc) == 1

    def test_not_in_set(self):
        sm = make_standard(DivAlg.H, [T(1, 0), T(2, 0)])
        with pytest.raises(NotInT):
            abc_bookkeeping(sm, Involution((1, 0)), chi(0))


class TestCheckMainTheorem:
    def test_quaternion_pair(self):
        report = check_main_theorem(make_standard(DivAlg.H, [T(1, 0), T(1, 0)]), chi(0))
        assert report.hom_upper_bound == 2
        assert report.gsp_ok and report.identity_ok and report.abc_ok
        assert report.epsilon_rhs == 1

    def test_two_discrete_blocks(self):
        report = check_main_theorem(make_standard(DivAlg.R, [P2(1, 0), P2(1, 0)]), chi(0))
        assert [s.cycle_string() for s in report.T_set] == ["(1 2)"]
        assert report.epsilon_lhs.sign() == 1
        assert report.epsilon_rhs == 1
        assert report.identity_ok and report.abc_ok
        assert report.abc == (0, 1, 0)

    def test_empty_set_asserts_nothing(self):
        report = check_main_theorem(make_standard(DivAlg.R, [P2(3, 0)]), chi(2))
        assert report.hom_upper_bound == 0
        assert report.gsp_ok is None and report.identity_ok is None
        assert report.abc is None


class TestDualityCorollary:
    def test_quaternion_pair(self):
        assert check_duality_corollary(make_standard(DivAlg.H, [T(1, 0), T(1, 0)]), chi(0))

    def test_swapped_exponents(self):
        sm = make_standard(DivAlg.R, [P2(2, 1), P2(2, -1)])
        assert check_duality_corollary(sm, chi(5))

    def test_vacuous(self):
        assert check_duality_corollary(make_standard(DivAlg.R, [P2(3, 0)]), chi(2))


def test_esi_equivalence_on_mismatched_exponents():
    # points off the matching-exponent locus: distinction fails and so must
    # the two-condition side
    for D, mk in ((DivAlg.R, P2), (DivAlg.H, T)):
        for k in range(1, 5):
            for l in range(-5, 6):
                block = mk(k, HALF)
                c = chi(l, gr(0))
                lhs = esi_distinguished(block, c)
                pi = IrrRepGL(D, (block,))
                gsp = is_gsp_with_similitude(llc(pi), c)
                rhs = gsp and epsilon_identity(pi, c)[2]
                assert lhs is False
                assert lhs == rhs
