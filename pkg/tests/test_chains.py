from fractions import Fraction as F

import pytest

from mvlogic import (
    Chain,
    ChainLawError,
    IDENTITIES,
    InvalidNegationError,
    InvalidParameterError,
    NoResiduumError,
    NotAnMVChainError,
    UnsupportedChainError,
    chain_from_text,
    chain_to_text,
    check_chain,
    delta_expand,
    make_chain,
    make_rational_chain,
    make_wnm_chain,
    negation_profile,
    ordinal_sum,
    parse,
    residuum_from_star,
    satisfies_identity,
    subchains,
    trivial_chain,
)
from mvlogic.chains import cn_schema, dnm_schema, gn_schema


class TestMakeChain:
    def test_lukasiewicz_2(self):
        c = make_chain("lukasiewicz", 2)
        assert c.carrier == (F(0), F(1, 2), F(1))
        assert c.star(F(1, 2), F(1, 2)) == F(0)
        assert c.implies(F(1, 2), F(0)) == F(1, 2)

    def test_lukasiewicz_matches_mv_formulas(self):
        c = make_chain("lukasiewicz", 5)
        for x in c.carrier:
            for y in c.carrier:
                assert c.star(x, y) == max(F(0), x + y - 1)
                assert c.implies(x, y) == min(F(1), 1 - x + y)

    def test_boolean(self):
        c = make_chain("boolean")
        assert c.size == 2
        assert c.star(F(1), F(1)) == F(1)
        assert c.implies(F(1), F(0)) == F(0)

    def test_dp4_coatom_fixpoint(self):
        c = make_chain("dp", 4)
        coatom = c.carrier[-2]
        assert coatom == F(2, 3)
        assert c.neg(coatom) == coatom

    def test_godel_is_min(self):
        c = make_chain("godel", 5)
        for x in c.carrier:
            for y in c.carrier:
                assert c.star(x, y) == min(x, y)
                assert c.implies(x, y) == (F(1) if x <= y else y)

    def test_element_counts(self):
        assert make_chain("lukasiewicz", 4).size == 5
        assert make_chain("godel", 4).size == 4
        assert make_chain("nm", 4).size == 4
        assert make_chain("dp", 4).size == 4

    def test_invalid_parameter(self):
        with pytest.raises(InvalidParameterError):
            make_chain("godel", 0)
        with pytest.raises(InvalidParameterError):
            make_chain("nosuch", 3)

    def test_trivial(self):
        assert trivial_chain().size == 1


class TestResiduum:
    def test_luk2(self):
        c = make_chain("lukasiewicz", 2)
        table = residuum_from_star(c.star_table, c.carrier)
        assert c.carrier[table[1][0]] == F(1, 2)

    def test_x_le_y_gives_top(self):
        for c in [make_chain("nm", 5), make_chain("dp", 6)]:
            for i, x in enumerate(c.carrier):
                for j, y in enumerate(c.carrier):
                    if x <= y:
                        assert c.implies(x, y) == F(1)

    def test_dp_middle_is_coatom(self):
        c = make_chain("dp", 4)
        coatom = c.carrier[-2]
        for x in c.carrier:
            for y in c.carrier:
                if F(0) < y < x < F(1):
                    assert c.implies(x, y) == coatom

    def test_non_monotone_rejected(self):
        # star(1/2,1/2)=1 on the Luk2 labels is not monotone in the
        # order-compatible sense required for a residuum to exist.
        star = ((0, 0, 0), (0, 2, 1), (0, 1, 2))
        with pytest.raises(NoResiduumError):
            residuum_from_star(star, (F(0), F(1, 2), F(1)))


class TestWnmChain:
    def test_involutive_matches_nm5(self):
        c = make_wnm_chain([4, 3, 2, 1, 0])
        nm5 = make_chain("nm", 5)
        assert c.star_table == nm5.star_table
        assert c.residuum_table == nm5.residuum_table

    def test_godel_negation_gives_min(self):
        k = 5
        neg = [k - 1] + [0] * (k - 1)
        c = make_wnm_chain(neg)
        g = make_chain("godel", k)
        assert c.star_table == g.star_table

    def test_fixpoint_reported(self):
        c = make_wnm_chain([4, 3, 2, 1, 0])
        prof = negation_profile(c)
        assert prof.fixpoint == 2

    def test_invalid_negation(self):
        with pytest.raises(InvalidNegationError):
            make_wnm_chain([0, 1, 2])  # not order-reversing, wrong endpoints
        with pytest.raises(InvalidNegationError):
            make_wnm_chain([2, 0, 1])

    def test_a_plus_idempotent(self):
        for c in [make_wnm_chain([4, 3, 1, 1, 0]), make_wnm_chain([5, 3, 3, 2, 0, 0])]:
            prof = negation_profile(c)
            for i in prof.a_plus:
                assert c.star_table[i][i] == i

    def test_a_plus_is_godel_hoop(self):
        c = make_wnm_chain([5, 3, 3, 2, 0, 0])
        prof = negation_profile(c)
        for i in prof.a_plus:
            for j in prof.a_plus:
                assert c.star_table[i][j] == min(i, j)
                assert c.residuum_table[i][j] in (c.size - 1, j)


class TestOrdinalSum:
    def test_luk2_plus_g2(self):
        s = ordinal_sum(make_chain("lukasiewicz", 2), make_chain("godel", 2))
        assert s.size == 4
        low = s.carrier[1]  # strictly inside the first block
        mid = s.carrier[2]  # second block, below top
        assert s.neg(s.neg(low)) == low
        assert s.neg(s.neg(mid)) == F(1)

    def test_sum_identities(self):
        s = ordinal_sum(make_chain("lukasiewicz", 2), make_chain("godel", 2))
        assert satisfies_identity(s, IDENTITIES["div"])
        assert not satisfies_identity(s, IDENTITIES["inv"])

    def test_trivial_second_is_identity(self):
        a = make_chain("lukasiewicz", 3)
        s = ordinal_sum(a, trivial_chain())
        assert s.star_table == a.star_table

    def test_first_must_be_mv(self):
        with pytest.raises(NotAnMVChainError):
            ordinal_sum(make_chain("godel", 3), make_chain("lukasiewicz", 2))

    def test_double_negation_pattern(self):
        first = make_chain("lukasiewicz", 3)
        s = ordinal_sum(first, make_chain("nm", 4))
        boundary = first.size - 1  # index of the glued element
        for i, x in enumerate(s.carrier):
            if i < boundary:
                assert s.neg(s.neg(x)) == x
            elif x < F(1):
                assert s.neg(s.neg(x)) == F(1)


class TestCheckChain:
    def test_constructors_all_pass(self):
        for fam, n in [("boolean", 2), ("lukasiewicz", 5), ("godel", 6),
                       ("nm", 7), ("dp", 6)]:
            assert check_chain(make_chain(fam, n)).all_pass

    def test_mutated_table_reported(self):
        c = make_chain("lukasiewicz", 2)
        rows = [list(r) for r in c.star_table]
        rows[1][1] = 2  # star(1/2,1/2) := 1
        bad = Chain(name="bad", carrier=c.carrier,
                    star_table=tuple(tuple(r) for r in rows))
        report = check_chain(bad)
        assert not report.all_pass
        laws = {v.law for v in report.violations}
        assert laws & {"monotonicity", "residuation"}


class TestIdentities:
    def test_nm5_wnm(self):
        assert satisfies_identity(make_chain("nm", 5), IDENTITIES["wnm"])

    def test_luk2_fails_id(self):
        assert not satisfies_identity(make_chain("lukasiewicz", 2), IDENTITIES["id"])

    def test_prelinearity_everywhere(self):
        for c in [make_chain("lukasiewicz", 3), make_chain("dp", 5),
                  make_wnm_chain([4, 3, 1, 1, 0])]:
            assert satisfies_identity(c, IDENTITIES["prelinearity"])

    def test_godel_satisfies_id(self):
        assert satisfies_identity(make_chain("godel", 4), IDENTITIES["id"])

    def test_dp_identity(self):
        assert satisfies_identity(make_chain("dp", 5), IDENTITIES["dp"])
        assert not satisfies_identity(make_chain("lukasiewicz", 3), IDENTITIES["dp"])

    def test_inv_on_mv_chains(self):
        assert satisfies_identity(make_chain("lukasiewicz", 4), IDENTITIES["inv"])
        assert satisfies_identity(make_chain("nm", 5), IDENTITIES["inv"])
        assert not satisfies_identity(make_chain("godel", 3), IDENTITIES["inv"])

    def test_parameterized_schemata(self):
        # Lk satisfies c_n iff the subchain sizes allow it; g_n holds on
        # Goedel chains with at most n elements.
        assert satisfies_identity(make_chain("godel", 3), gn_schema(3))
        assert not satisfies_identity(make_chain("godel", 4), gn_schema(3))
        assert isinstance(cn_schema(3), object)
        assert isinstance(dnm_schema(3, 2), object)

    def test_delta_schemata(self):
        c = delta_expand(make_chain("lukasiewicz", 4))
        for name in ["delta1", "delta2", "delta3", "delta4", "delta5"]:
            assert satisfies_identity(c, IDENTITIES[name]), name

    def test_string_lookup(self):
        assert satisfies_identity(make_chain("nm", 4), "wnm")

    def test_rational_family_rejected(self):
        with pytest.raises(UnsupportedChainError):
            satisfies_identity(make_rational_chain("lukasiewicz"), IDENTITIES["wnm"])


class TestNegationProfile:
    def test_nm5(self):
        c = make_chain("nm", 5)
        prof = negation_profile(c)
        assert {c.carrier[i] for i in prof.a_plus} == {F(3, 4), F(1)}
        assert c.carrier[prof.fixpoint] == F(1, 2)

    def test_luk3(self):
        c = make_chain("lukasiewicz", 3)
        prof = negation_profile(c)
        assert prof.fixpoint is None
        assert {c.carrier[i] for i in prof.a_plus} == {F(2, 3), F(1)}

    def test_boolean(self):
        prof = negation_profile(make_chain("boolean"))
        assert prof.fixpoint is None
        assert prof.a_plus == frozenset({1})


class TestSubchains:
    def test_luk6_divisors(self):
        c = make_chain("lukasiewicz", 6)
        sizes = sorted(len(s) for s in subchains(c))
        assert sizes == [2, 3, 4, 7]

    def test_luk_general(self):
        for n in [2, 3, 4]:
            c = make_chain("lukasiewicz", n)
            sizes = {len(s) for s in subchains(c)}
            assert sizes == {k + 1 for k in range(1, n + 1) if n % k == 0}

    def test_boolean_only_itself(self):
        assert subchains(make_chain("boolean")) == [(0, 1)]

    def test_godel_all_supersets_of_bounds(self):
        c = make_chain("godel", 4)
        subs = subchains(c)
        assert len(subs) == 4  # subsets of 2 middle elements
        for s in subs:
            assert 0 in s and c.size - 1 in s


class TestDelta:
    def test_boolean_delta_is_identity(self):
        c = delta_expand(make_chain("boolean"))
        for x in c.carrier:
            assert c.delta(x) == x

    def test_luk2_delta(self):
        c = delta_expand(make_chain("lukasiewicz", 2))
        assert c.delta(F(1, 2)) == F(0)
        assert c.delta(F(1)) == F(1)

    def test_delta1_schema(self):
        c = delta_expand(make_chain("lukasiewicz", 4))
        assert satisfies_identity(c, parse(r"!p \/ ~!p", kind="prop"))


class TestChainFiles:
    def test_round_trip(self):
        for c in [make_chain("nm", 5), delta_expand(make_chain("lukasiewicz", 3))]:
            again = chain_from_text(chain_to_text(c))
            assert again.carrier == c.carrier
            assert again.star_table == c.star_table
            assert again.has_delta == c.has_delta

    def test_law_violation_on_load(self):
        c = make_chain("lukasiewicz", 2)
        text = chain_to_text(c)
        lines = text.splitlines()
        # corrupt the star table row for 1/2: star(1/2,1/2) := 1
        lines[5] = "0 2 1"
        with pytest.raises(ChainLawError) as exc:
            chain_from_text("\n".join(lines) + "\n")
        assert "monotonicity" in str(exc.value) or "residuation" in str(exc.value)

    def test_whitespace_tolerant(self):
        text = chain_to_text(make_chain("lukasiewicz", 2))
        noisy = "\n".join("  " + line + "  " for line in text.splitlines())
        assert chain_from_text(noisy).size == 3


class TestResiduationLaw:
    def test_biconditional_exhaustive(self):
        for c in [make_chain("lukasiewicz", 4), make_chain("dp", 5),
                  make_wnm_chain([4, 3, 1, 1, 0])]:
            for x in c.carrier:
                for y in c.carrier:
                    for z in c.carrier:
                        assert (c.star(z, x) <= y) == (z <= c.implies(x, y))
