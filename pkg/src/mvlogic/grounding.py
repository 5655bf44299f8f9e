"""Coding of first-order formulas over a size-n domain into
propositional formulas, the assignment induced by a model, and the
bounded tautology checker built from them.

An atom P(j1..js) with its arguments instantiated to domain elements
becomes the propositional variable ``p_P_j1_.._js``; quantifiers become
n-fold conjunctions/disjunctions, associated to the right with the
domain index running 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import BaseChain
from .errors import GroundingError
from .formulas import (
    And,
    Atom,
    BINARY,
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
    Var,
    free_variables,
    universal_closure,
)
from .semantics import Model, is_taut_prop


def cell_variable(pred: str, args: tuple[int, ...]) -> str:
    return "_".join(["p", pred] + [str(a) for a in args])


@dataclass(frozen=True)
class GroundedFormula:
    """The propositional coding of a closed formula at domain size n,
    with the legend mapping each variable back to its model cell."""

    formula: Formula
    legend: dict[str, tuple[str, tuple[int, ...]]]
    domain_size: int


def ground(phi: Formula, n: int) -> GroundedFormula:
    """Translate a closed first-order formula to a propositional one
    over domain {1..n}."""
    if n < 1:
        raise GroundingError(f"domain size must be >= 1, got {n}")
    free = free_variables(phi)
    if free:
        raise GroundingError(
            f"formula has free variables {free}; close it first"
        )
    legend: dict[str, tuple[str, tuple[int, ...]]] = {}
    body = _ground(phi, n, {}, legend)
    return GroundedFormula(body, legend, n)


def _ground(phi: Formula, n: int, env: dict[str, int], legend) -> Formula:
    t = type(phi)
    if t is Atom:
        args = tuple(env[x] for x in phi.args)
        name = cell_variable(phi.pred, args)
        legend[name] = (phi.pred, args)
        return Var(name)
    if t is Bottom:
        return phi
    if isinstance(phi, BINARY):
        return t(_ground(phi.left, n, env, legend), _ground(phi.right, n, env, legend))
    if t is Not:
        return Not(_ground(phi.sub, n, env, legend))
    if t is Delta:
        return Delta(_ground(phi.sub, n, env, legend))
    if t is Forall or t is Exists:
        combine = And if t is Forall else Or
        parts = []
        for i in range(1, n + 1):
            parts.append(_ground(phi.body, n, {**env, phi.var: i}, legend))
        out = parts[-1]
        for part in reversed(parts[:-1]):
            out = combine(part, out)
        return out
    raise GroundingError(f"cannot ground node {phi!r}")


def induced_assignment(model: Model) -> dict[str, Fraction]:
    """The evaluation sending each cell variable to the value the model
    stores in that cell; total on any grounding at the model's size."""
    out: dict[str, Fraction] = {}
    for pred, cells in model.tables:
        for args, val in cells:
            out[cell_variable(pred, args)] = val
    return out


@dataclass(frozen=True)
class Verdict:
    """Result of a bounded tautology check.

    is_taut means no refutation up to the bound; otherwise
    refuted_at / witness carry the first failure.  closed_input records
    whether a universal closure was applied to an open input.
    """

    is_taut: bool
    bound: int
    refuted_at: int | None = None
    witness: dict | None = None
    grounded: GroundedFormula | None = None
    closed_input: bool = False

    def describe(self) -> str:
        if self.is_taut:
            return f"taut-up-to-{self.bound}"
        return f"refuted at n={self.refuted_at}"


def taut_upto_grounded(chain: BaseChain, phi: Formula, bound: int) -> Verdict:
    """Check phi over all domain sizes 1..bound through the grounding:
    the verdict is taut-up-to-bound or the first (n, assignment)
    refutation."""
    if bound < 1:
        raise GroundingError(f"bound must be >= 1, got {bound}")
    closed = universal_closure(phi)
    was_open = closed is not phi
    for n in range(1, bound + 1):
        g = ground(closed, n)
        ok, witness = is_taut_prop(chain, g.formula)
        if not ok:
            return Verdict(False, bound, n, witness, g, was_open)
    return Verdict(True, bound, closed_input=was_open)


def witness_model(grounded: GroundedFormula, witness: dict[str, Fraction]) -> Model:
    """Reconstruct a model from a refuting assignment via the legend.

    Cells of the formula's signature that do not occur in the grounding
    default to 0 (they cannot affect the truth value).
    """
    import itertools

    sig: dict[str, int] = {}
    for pred, args in grounded.legend.values():
        sig[pred] = len(args)
    n = grounded.domain_size
    tables: dict[str, dict[tuple[int, ...], Fraction]] = {}
    for pred, arity in sig.items():
        tables[pred] = {
            args: Fraction(0)
            for args in itertools.product(range(1, n + 1), repeat=arity)
        }
    for var, (pred, args) in grounded.legend.items():
        if var in witness:
            tables[pred][args] = witness[var]
    return Model.from_dict(n, tables)
