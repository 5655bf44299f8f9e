import pytest
from hypothesis import given, settings, strategies as st

import random

from mvlogic import (
    And,
    Atom,
    Bottom,
    Exists,
    Forall,
    Implies,
    Not,
    Or,
    ParseError,
    SignatureError,
    StrongAnd,
    Var,
    desugar,
    free_variables,
    is_classical,
    is_closed,
    parse,
    pretty,
    signature_of,
    universal_closure,
)
from mvlogic.corpus import random_formula, random_propositional


class TestParse:
    def test_quantified_atom(self):
        phi = parse("forall x. exists y. R(x,y)")
        assert phi == Forall("x", Exists("y", Atom("R", ("x", "y"))))
        assert signature_of(phi) == {"R": 2}

    def test_wnm_schema(self):
        phi = parse(r"~(p & q) \/ ((p /\ q) -> (p & q))", kind="prop")
        assert phi == Or(
            Not(StrongAnd(Var("p"), Var("q"))),
            Implies(And(Var("p"), Var("q")), StrongAnd(Var("p"), Var("q"))),
        )

    def test_syntax_error(self):
        with pytest.raises(ParseError):
            parse("p -> -> q", kind="prop")

    def test_error_has_position(self):
        with pytest.raises(ParseError) as exc:
            parse("p -> )", kind="prop")
        assert exc.value.line == 1
        assert exc.value.column > 0

    def test_precedence(self):
        # ~,! > & > /\ > \/ > -> > <->
        phi = parse(r"~p & q /\ r \/ s -> t", kind="prop")
        assert phi == Implies(
            Or(And(StrongAnd(Not(Var("p")), Var("q")), Var("r")), Var("s")),
            Var("t"),
        )

    def test_implies_right_assoc(self):
        phi = parse("p -> q -> r", kind="prop")
        assert phi == Implies(Var("p"), Implies(Var("q"), Var("r")))

    def test_quantifier_binds_weakest(self):
        phi = parse("forall x. P(x) -> Q(x)")
        assert phi == Forall("x", Implies(Atom("P", ("x",)), Atom("Q", ("x",))))

    def test_bot(self):
        assert parse("bot", kind="prop") == Bottom()

    def test_inconsistent_arity(self):
        with pytest.raises(SignatureError):
            signature_of(parse("P(x) /\\ P(x,y)"))

    def test_prop_rejects_quantifier(self):
        with pytest.raises(ParseError):
            parse("forall x. P(x)", kind="prop")


class TestPrettyRoundTrip:
    def test_samples(self):
        for text in [
            "forall x. exists y. R(x,y)",
            r"(P(x) -> Q(x)) <-> ~P(x) \/ Q(x)",
            "bot -> P(y)",
        ]:
            phi = parse(text)
            assert parse(pretty(phi)) == phi

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=150, deadline=None)
    def test_random_fo(self, seed):
        rng = random.Random(seed)
        phi = random_formula(rng, depth=rng.randint(0, 5), allow_delta=True)
        assert parse(pretty(phi)) == phi

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=150, deadline=None)
    def test_random_prop(self, seed):
        rng = random.Random(seed)
        phi = random_propositional(rng, depth=rng.randint(0, 5), allow_delta=True)
        assert parse(pretty(phi), kind="prop") == phi


class TestDesugar:
    def test_neg(self):
        assert desugar(Not(Var("p"))) == Implies(Var("p"), Bottom())

    def test_or(self):
        p, q = Var("p"), Var("q")
        assert desugar(Or(p, q)) == And(
            Implies(Implies(p, q), q), Implies(Implies(q, p), p)
        )

    def test_bottom_fixed(self):
        assert desugar(Bottom()) == Bottom()

    def test_idempotent(self):
        rng = random.Random(3)
        for _ in range(100):
            phi = random_formula(rng, depth=4, allow_delta=True)
            once = desugar(phi)
            assert desugar(once) == once

    def test_no_derived_nodes_left(self):
        rng = random.Random(5)
        from mvlogic.formulas import subformulas, Iff, Delta

        for _ in range(100):
            phi = random_formula(rng, depth=4)
            for node in subformulas(desugar(phi)):
                assert not isinstance(node, (Not, Or, Iff))


class TestClosure:
    def test_single_free(self):
        phi = parse("P(x) -> Q(x)")
        assert universal_closure(phi) == Forall("x", phi)

    def test_closed_unchanged(self):
        phi = parse("forall x. P(x)")
        assert universal_closure(phi) is phi

    def test_first_occurrence_order(self):
        phi = parse("R(x,y)")
        assert universal_closure(phi) == Forall("x", Forall("y", phi))

    def test_output_closed(self):
        rng = random.Random(9)
        for _ in range(100):
            phi = random_formula(rng, depth=4)
            closed = universal_closure(phi)
            assert is_closed(closed)
            assert not free_variables(closed)


class TestIsClassical:
    def test_lem_is_classical(self):
        assert is_classical(parse(r"forall x. (P(x) \/ ~P(x))"))

    def test_strong_and_is_not(self):
        assert not is_classical(parse("P(x) & Q(x)"))

    def test_exists_is_not(self):
        assert not is_classical(parse("exists x. P(x)"))

    def test_implies_is_not(self):
        assert not is_classical(parse("P(x) -> Q(x)"))
