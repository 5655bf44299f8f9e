"""Fixed formula corpora and the seeded random formula generator used
by the verification suites.

The fixed corpus mixes formulas valid on every chain, formulas valid
classically but refutable on fuzzy chains, and plain non-tautologies.
Most use the unary predicates P, Q; a handful use the binary R, kept
rare because exhaustive model scans grow as k^(n^2) in the arity.
"""

from __future__ import annotations

import random

from .formulas import (
    And,
    Atom,
    Bottom,
    Delta,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    StrongAnd,
    parse,
)

DEFAULT_SIGNATURE = {"P": 1, "Q": 1, "R": 2}

# 50 first-order formulas, delta-free.
FIXED_CORPUS_TEXT = [
    # -- valid on every chain (MTL theorems and FO axioms) --
    r"forall x. P(x) -> P(x)",
    r"forall x. (P(x) & Q(x)) -> P(x)",
    r"forall x. (P(x) & Q(x)) -> (Q(x) & P(x))",
    r"forall x. (P(x) /\ Q(x)) -> P(x)",
    r"forall x. (P(x) /\ Q(x)) -> (Q(x) /\ P(x))",
    r"forall x. (P(x) & (P(x) -> Q(x))) -> (Q(x) /\ P(x))",
    r"forall x. (P(x) -> (Q(x) -> P(x)))",
    r"forall x. ((P(x) -> Q(x)) \/ (Q(x) -> P(x)))",
    r"forall x. bot -> P(x)",
    r"forall x. ~(P(x) & ~P(x))",
    r"forall x. P(x) -> ~~P(x)",
    r"forall x. (P(x) -> Q(x)) -> (~Q(x) -> ~P(x))",
    r"forall x. ((P(x) -> Q(x)) -> ((Q(x) -> P(x)) -> (P(x) <-> Q(x))))",
    r"(forall x. P(x)) -> (exists x. P(x))",
    r"(forall x. P(x)) -> P(y)",
    r"P(y) -> (exists x. P(x))",
    r"(forall x. (Q(y) -> P(x))) -> (Q(y) -> (forall x. P(x)))",
    r"(forall x. (P(x) -> Q(y))) -> ((exists x. P(x)) -> Q(y))",
    r"(forall x. (P(x) \/ Q(y))) -> ((forall x. P(x)) \/ Q(y))",
    r"(exists x. P(x)) <-> (exists y. P(y))",
    r"(forall x. (P(x) /\ Q(x))) <-> ((forall x. P(x)) /\ (forall x. Q(x)))",
    r"(exists x. (P(x) \/ Q(x))) <-> ((exists x. P(x)) \/ (exists x. Q(x)))",
    r"(forall x. P(x)) \/ (exists x. ~P(x)) \/ ~(forall x. P(x) \/ ~P(x))",
    r"forall x. forall y. (R(x,y) -> R(x,y))",
    r"forall x. ((forall y. R(x,y)) -> (exists y. R(x,y)))",
    r"(forall x. forall y. R(x,y)) -> (forall y. forall x. R(x,y))",
    r"(exists x. forall y. R(x,y)) -> (forall y. exists x. R(x,y))",
    # -- classically valid, refutable on some fuzzy chains --
    r"forall x. (P(x) \/ ~P(x))",
    r"forall x. (~~P(x) -> P(x))",
    r"forall x. (P(x) -> (P(x) & P(x)))",
    r"forall x. ((P(x) -> Q(x)) -> (~P(x) \/ Q(x)))",
    r"forall x. (~(P(x) /\ Q(x)) -> (~P(x) \/ ~Q(x)))",
    r"forall x. ((P(x) -> Q(x)) \/ (Q(x) -> bot) \/ ~P(x))",
    r"forall x. ~(P(x) <-> ~P(x))",
    r"forall x. ((P(x) & P(x)) <-> (P(x) & P(x) & P(x)))",
    r"forall x. (P(x) \/ (P(x) -> Q(x)) \/ ~Q(x))",
    r"(forall x. (P(x) \/ Q(x))) -> ((forall x. P(x)) \/ (exists x. Q(x) & Q(x)))",
    # -- non-tautologies everywhere --
    r"forall x. P(x)",
    r"exists x. (P(x) & Q(x))",
    r"forall x. (P(x) -> Q(x))",
    r"(exists x. P(x)) -> (forall x. P(x))",
    r"forall x. (P(x) <-> Q(x))",
    r"forall x. ~P(x)",
    r"forall x. (P(x) & P(x))",
    r"(forall y. exists x. R(x,y)) -> (exists x. forall y. R(x,y))",
    r"forall x. exists y. R(x,y)",
    r"exists x. R(x,x)",
    r"forall x. (Q(x) \/ ~P(x))",
    r"(exists x. P(x)) -> (exists x. (P(x) & P(x)))",
    r"forall x. ((P(x) -> Q(x)) -> Q(x))",
]

# 30 classical formulas: only /\, \/, ~, forall, atoms.
CLASSICAL_CORPUS_TEXT = [
    # -- classical tautologies --
    r"forall x. (P(x) \/ ~P(x))",
    r"forall x. ~(P(x) /\ ~P(x))",
    r"forall x. (~(P(x) /\ Q(x)) \/ (P(x) /\ Q(x)))",
    r"forall x. ((P(x) /\ Q(x)) \/ ~P(x) \/ ~Q(x))",
    r"forall x. (~~P(x) \/ ~P(x))",
    r"forall x. (P(x) \/ Q(x) \/ ~P(x))",
    r"forall x. ((P(x) \/ ~Q(x)) \/ (Q(x) /\ ~P(x)))",
    r"(forall x. P(x)) \/ ~(forall x. P(x))",
    r"forall x. (~(P(x) \/ Q(x)) \/ P(x) \/ Q(x))",
    r"forall x. ((P(x) /\ ~P(x)) \/ (Q(x) \/ ~Q(x)))",
    r"forall y. (R(y,y) \/ ~R(y,y))",
    r"forall x. (~P(x) \/ ~~P(x))",
    r"forall x. ((P(x) \/ ~P(x)) /\ (Q(x) \/ ~Q(x)))",
    r"forall x. (P(x) \/ ~(P(x) /\ Q(x)))",
    r"forall x. (~P(x) \/ (P(x) \/ Q(x)))",
    # -- classically refutable --
    r"forall x. P(x)",
    r"forall x. ~P(x)",
    r"forall x. (P(x) /\ Q(x))",
    r"forall x. (P(x) \/ Q(x))",
    r"forall x. (~P(x) \/ Q(x))",
    r"forall x. (P(x) /\ ~Q(x))",
    r"forall x. ~(P(x) \/ Q(x))",
    r"forall x. ~(P(x) /\ Q(x))",
    r"forall x. forall y. R(x,y)",
    r"forall x. ~R(x,x)",
    r"(forall x. P(x)) \/ (forall x. ~P(x))",
    r"forall x. (P(x) \/ (Q(x) /\ ~Q(x)))",
    r"forall x. ((P(x) /\ Q(x)) \/ ~P(x))",
    r"forall x. (~~P(x) /\ ~P(x))",
    r"forall x. ((P(x) \/ Q(x)) /\ ~Q(x))",
]

# Instances of the five quantifier axiom schemata.
FO_AXIOM_INSTANCES_TEXT = {
    "forall1": [
        r"(forall x. P(x)) -> P(y)",
        r"(forall x. R(x,y)) -> R(z,y)",
    ],
    "exists1": [
        r"P(y) -> (exists x. P(x))",
        r"R(y,z) -> (exists x. R(x,z))",
    ],
    "forall2": [
        r"(forall x. (Q(y) -> P(x))) -> (Q(y) -> (forall x. P(x)))",
        r"(forall x. (R(y,y) -> R(x,y))) -> (R(y,y) -> (forall x. R(x,y)))",
    ],
    "exists2": [
        r"(forall x. (P(x) -> Q(y))) -> ((exists x. P(x)) -> Q(y))",
        r"(forall x. (R(x,y) -> Q(y))) -> ((exists x. R(x,y)) -> Q(y))",
    ],
    "forall3": [
        r"(forall x. (P(x) \/ Q(y))) -> ((forall x. P(x)) \/ Q(y))",
        r"(forall x. (R(x,y) \/ P(y))) -> ((forall x. R(x,y)) \/ P(y))",
    ],
}


def fixed_corpus() -> list[Formula]:
    return [parse(t, kind="fo") for t in FIXED_CORPUS_TEXT]


def classical_corpus() -> list[Formula]:
    return [parse(t, kind="fo") for t in CLASSICAL_CORPUS_TEXT]


def fo_axiom_instances() -> dict[str, list[Formula]]:
    return {
        name: [parse(t, kind="fo") for t in texts]
        for name, texts in FO_AXIOM_INSTANCES_TEXT.items()
    }


# ---------------------------------------------------------------------------
# Random formulas


def random_formula(
    rng: random.Random,
    depth: int = 4,
    signature: dict[str, int] | None = None,
    variables: tuple[str, ...] = ("x", "y", "z"),
    allow_delta: bool = False,
    classical: bool = False,
) -> Formula:
    """Seeded random first-order formula over a small fixed signature.

    Connective choice is uniform at every step; leaves are atoms with
    uniformly chosen argument variables (or bot).  May produce free
    variables; close with universal_closure where needed.
    """
    sig = DEFAULT_SIGNATURE if signature is None else signature
    return _random(rng, depth, sig, variables, allow_delta, classical)


def _random(rng, depth, sig, variables, allow_delta, classical):
    def leaf():
        if not classical and rng.random() < 0.1:
            return Bottom()
        pred = rng.choice(sorted(sig))
        args = tuple(rng.choice(variables) for _ in range(sig[pred]))
        return Atom(pred, args)

    if depth <= 0:
        return leaf()
    if classical:
        choices = ["atom", "and", "or", "not", "forall"]
    else:
        choices = [
            "atom", "and", "strong", "or", "implies", "not", "iff",
            "forall", "exists",
        ]
        if allow_delta:
            choices.append("delta")
    kind = rng.choice(choices)
    sub = lambda: _random(rng, depth - 1, sig, variables, allow_delta, classical)
    if kind == "atom":
        return leaf()
    if kind == "and":
        return And(sub(), sub())
    if kind == "strong":
        return StrongAnd(sub(), sub())
    if kind == "or":
        return Or(sub(), sub())
    if kind == "implies":
        return Implies(sub(), sub())
    if kind == "not":
        return Not(sub())
    if kind == "iff":
        return Iff(sub(), sub())
    if kind == "delta":
        return Delta(sub())
    var = rng.choice(variables)
    return Forall(var, sub()) if kind == "forall" else Exists(var, sub())


def random_propositional(
    rng: random.Random,
    depth: int = 4,
    variables: tuple[str, ...] = ("p", "q", "r"),
    allow_delta: bool = False,
) -> Formula:
    """Seeded random propositional formula."""
    from .formulas import Var

    def leaf():
        if rng.random() < 0.1:
            return Bottom()
        return Var(rng.choice(variables))

    if depth <= 0:
        return leaf()
    choices = ["var", "and", "strong", "or", "implies", "not", "iff"]
    if allow_delta:
        choices.append("delta")
    kind = rng.choice(choices)
    sub = lambda: random_propositional(rng, depth - 1, variables, allow_delta)
    if kind == "var":
        return leaf()
    if kind == "and":
        return And(sub(), sub())
    if kind == "strong":
        return StrongAnd(sub(), sub())
    if kind == "or":
        return Or(sub(), sub())
    if kind == "implies":
        return Implies(sub(), sub())
    if kind == "not":
        return Not(sub())
    if kind == "iff":
        return Iff(sub(), sub())
    return Delta(sub())
