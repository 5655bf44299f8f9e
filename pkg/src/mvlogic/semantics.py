"""Finite models, formula evaluation, model enumeration and the
propositional tautology check over finite chains.

Quantifiers are evaluated with min/max over the (always finite) domain
{1..n}.  Model enumeration follows a documented canonical order:
predicates sorted by name, cells in lexicographic tuple order, and the
value of the last cell varying fastest through the value set.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .chains import BaseChain, require_finite
from .errors import (
    CapExceededError,
    EvaluationError,
    FormatError,
    SignatureError,
    UnsupportedChainError,
)
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
    Var,
)

ENUM_CAP_ENV = "MVLOGIC_ENUM_CAP"
DEFAULT_ENUM_CAP = 20_000_000


def enumeration_cap() -> int:
    return int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))


@dataclass(frozen=True)
class Model:
    """Finite model: domain {1..n} plus one value table per predicate.

    Tables map argument tuples to chain values; a nullary predicate has
    the single key ().
    """

    domain_size: int
    tables: tuple[tuple[str, tuple[tuple[tuple[int, ...], Fraction], ...]], ...]

    @staticmethod
    def from_dict(
        domain_size: int, tables: dict[str, dict[tuple[int, ...], Fraction]]
    ) -> "Model":
        frozen = tuple(
            (name, tuple(sorted(cells.items())))
            for name, cells in sorted(tables.items())
        )
        return Model(domain_size, frozen)

    def table(self, pred: str) -> dict[tuple[int, ...], Fraction]:
        for name, cells in self.tables:
            if name == pred:
                return dict(cells)
        raise SignatureError(f"model has no table for predicate {pred}")

    def as_dict(self) -> dict[str, dict[tuple[int, ...], Fraction]]:
        return {name: dict(cells) for name, cells in self.tables}

    def signature(self) -> dict[str, int]:
        sig = {}
        for name, cells in self.tables:
            sig[name] = len(cells[0][0]) if cells else 0
        return sig

    def value(self, pred: str, args: tuple[int, ...]) -> Fraction:
        for name, cells in self.tables:
            if name == pred:
                for key, val in cells:
                    if key == args:
                        return val
                raise SignatureError(f"model table {pred} has no cell {args}")
        raise SignatureError(f"model has no table for predicate {pred}")

    def validate(self, chain: BaseChain, sig: dict[str, int] | None = None) -> None:
        """Check totality over the tuple space and carrier membership."""
        tables = self.as_dict()
        if sig is not None:
            for pred, arity in sig.items():
                if pred not in tables:
                    raise SignatureError(f"missing table for predicate {pred}")
                expected = set(
                    itertools.product(range(1, self.domain_size + 1), repeat=arity)
                )
                if set(tables[pred]) != expected:
                    raise SignatureError(
                        f"table for {pred} does not cover all {arity}-tuples"
                    )
        for pred, cells in tables.items():
            for args, val in cells.items():
                if not chain.contains(val):
                    raise SignatureError(
                        f"value {val} of {pred}{args} is not in the carrier "
                        f"of {chain.name}"
                    )


# ---------------------------------------------------------------------------
# Evaluation


def eval_prop(chain: BaseChain, assignment: dict[str, Fraction], phi: Formula):
    """Homomorphic evaluation of a propositional formula.

    \\/ and /\\ are evaluated as lattice join/meet, which on chains
    coincides with their derived definitions; ~a is a => 0.
    """
    t = type(phi)
    if t is Var:
        try:
            return assignment[phi.name]
        except KeyError:
            raise EvaluationError(f"no value assigned to variable {phi.name}")
    if t is Bottom:
        return chain.bottom
    if t is Implies:
        return chain.implies(
            eval_prop(chain, assignment, phi.left),
            eval_prop(chain, assignment, phi.right),
        )
    if t is StrongAnd:
        return chain.star(
            eval_prop(chain, assignment, phi.left),
            eval_prop(chain, assignment, phi.right),
        )
    if t is And:
        return chain.meet(
            eval_prop(chain, assignment, phi.left),
            eval_prop(chain, assignment, phi.right),
        )
    if t is Or:
        return chain.join(
            eval_prop(chain, assignment, phi.left),
            eval_prop(chain, assignment, phi.right),
        )
    if t is Not:
        return chain.neg(eval_prop(chain, assignment, phi.sub))
    if t is Iff:
        a = eval_prop(chain, assignment, phi.left)
        b = eval_prop(chain, assignment, phi.right)
        return chain.meet(chain.implies(a, b), chain.implies(b, a))
    if t is Delta:
        return chain.delta(eval_prop(chain, assignment, phi.sub))
    raise EvaluationError(f"not a propositional node: {phi!r}")


def eval_fo(
    chain: BaseChain,
    model: Model,
    valuation: dict[str, int],
    phi: Formula,
):
    """Truth value of a first-order formula: atoms through the model
    tables, connectives homomorphically, quantifiers as min/max over
    domain variants."""
    tables = model.as_dict()
    n = model.domain_size
    return _eval_fo(chain, tables, n, dict(valuation), phi)


def _eval_fo(chain, tables, n, v, phi):
    t = type(phi)
    if t is Atom:
        try:
            table = tables[phi.pred]
        except KeyError:
            raise SignatureError(f"model has no table for predicate {phi.pred}")
        try:
            args = tuple(v[x] for x in phi.args)
        except KeyError as exc:
            raise EvaluationError(f"unbound free variable {exc.args[0]}")
        try:
            return table[args]
        except KeyError:
            raise SignatureError(f"table {phi.pred} has no cell {args}")
    if t is Bottom:
        return chain.bottom
    if t is Implies:
        return chain.implies(
            _eval_fo(chain, tables, n, v, phi.left),
            _eval_fo(chain, tables, n, v, phi.right),
        )
    if t is StrongAnd:
        return chain.star(
            _eval_fo(chain, tables, n, v, phi.left),
            _eval_fo(chain, tables, n, v, phi.right),
        )
    if t is And:
        return chain.meet(
            _eval_fo(chain, tables, n, v, phi.left),
            _eval_fo(chain, tables, n, v, phi.right),
        )
    if t is Or:
        return chain.join(
            _eval_fo(chain, tables, n, v, phi.left),
            _eval_fo(chain, tables, n, v, phi.right),
        )
    if t is Not:
        return chain.neg(_eval_fo(chain, tables, n, v, phi.sub))
    if t is Iff:
        a = _eval_fo(chain, tables, n, v, phi.left)
        b = _eval_fo(chain, tables, n, v, phi.right)
        return chain.meet(chain.implies(a, b), chain.implies(b, a))
    if t is Delta:
        return chain.delta(_eval_fo(chain, tables, n, v, phi.sub))
    if t is Forall or t is Exists:
        saved = v.get(phi.var)
        best = None
        for el in range(1, n + 1):
            v[phi.var] = el
            val = _eval_fo(chain, tables, n, v, phi.body)
            if best is None:
                best = val
            elif t is Forall:
                best = val if val < best else best
            else:
                best = val if val > best else best
        if saved is None:
            del v[phi.var]
        else:
            v[phi.var] = saved
        return best
    raise EvaluationError(f"not a first-order node: {phi!r}")


# ---------------------------------------------------------------------------
# Propositional tautology check


def compile_prop(chain, phi: Formula, var_pos: dict[str, int]):
    """Compile a propositional formula into a closure over a tuple of
    carrier indices.  The exhaustive scans below stay in the index
    domain, avoiding rational arithmetic in the inner loop."""
    star = chain.star_table
    res = chain.residuum_table
    top = chain.size - 1
    t = type(phi)
    if t is Var:
        i = var_pos[phi.name]
        return lambda a: a[i]
    if t is Bottom:
        return lambda a: 0
    if t is Delta:
        if not chain.has_delta:
            raise UnsupportedChainError(f"chain {chain.name} has no delta operation")
        f = compile_prop(chain, phi.sub, var_pos)
        return lambda a: top if f(a) == top else 0
    if t is Not:
        f = compile_prop(chain, phi.sub, var_pos)
        return lambda a: res[f(a)][0]
    left = compile_prop(chain, phi.left, var_pos)
    right = compile_prop(chain, phi.right, var_pos)
    if t is Implies:
        return lambda a: res[left(a)][right(a)]
    if t is StrongAnd:
        return lambda a: star[left(a)][right(a)]
    if t is And:
        return lambda a: min(left(a), right(a))
    if t is Or:
        return lambda a: max(left(a), right(a))
    if t is Iff:
        def iff(a):
            x, y = left(a), right(a)
            return min(res[x][y], res[y][x])

        return iff
    raise EvaluationError(f"not a propositional node: {phi!r}")


def is_taut_prop(
    chain: BaseChain, phi: Formula
) -> tuple[bool, dict[str, Fraction] | None]:
    """Exhaustive tautology check over a finite chain.

    Returns (True, None) or (False, witness) where the witness is the
    lexicographically first failing assignment (variables sorted by
    name, values in carrier order).
    """
    c = require_finite(chain)
    from .formulas import prop_variables

    names = sorted(prop_variables(phi))
    fn = compile_prop(c, phi, {name: i for i, name in enumerate(names)})
    top = c.size - 1
    for indices in itertools.product(range(c.size), repeat=len(names)):
        if fn(indices) != top:
            witness = {name: c.carrier[i] for name, i in zip(names, indices)}
            return False, witness
    return True, None


# ---------------------------------------------------------------------------
# Model enumeration


def count_models(sig: dict[str, int], n: int, values) -> int:
    k = values if isinstance(values, int) else len(values)
    cells = sum(n**arity for arity in sig.values())
    return k**cells


def enumerate_models(
    sig: dict[str, int],
    n: int,
    values: Iterable[Fraction],
    cap: int | None = None,
) -> Iterator[Model]:
    """All models over domain {1..n} with table values drawn from
    `values`, in canonical order.

    Raises CapExceededError upfront if the model count exceeds the cap
    (MVLOGIC_ENUM_CAP, default 20e6).
    """
    values = tuple(values)
    if not values:
        raise ValueError("value set must be nonempty")
    if n < 1:
        raise ValueError("domain size must be >= 1")
    cap = enumeration_cap() if cap is None else cap
    total = count_models(sig, n, len(values))
    if total > cap:
        raise CapExceededError(
            f"{total} models exceed the enumeration cap {cap}"
        )
    preds = sorted(sig)
    cells = [
        (pred, args)
        for pred in preds
        for args in itertools.product(range(1, n + 1), repeat=sig[pred])
    ]
    for choice in itertools.product(values, repeat=len(cells)):
        tables: dict[str, dict[tuple[int, ...], Fraction]] = {p: {} for p in preds}
        for (pred, args), val in zip(cells, choice):
            tables[pred][args] = val
        yield Model.from_dict(n, tables)


# ---------------------------------------------------------------------------
# Model file format
#
#   mtlmodel 1
#   domain n
#   pred NAME ARITY
#   j1 ... js p/q     (n^arity lines per predicate)


def model_to_text(model: Model) -> str:
    lines = ["mtlmodel 1", f"domain {model.domain_size}"]
    for name, cells in model.tables:
        arity = len(cells[0][0]) if cells else 0
        lines.append(f"pred {name} {arity}")
        for args, val in sorted(cells):
            lines.append(" ".join(str(a) for a in args) + (" " if args else "") + str(val))
    return "\n".join(lines) + "\n"


def model_from_text(text: str) -> Model:
    rows = [line.split() for line in text.splitlines() if line.split()]
    if not rows or rows[0] != ["mtlmodel", "1"]:
        raise FormatError("expected header 'mtlmodel 1'")
    try:
        if rows[1][0] != "domain":
            raise FormatError("expected 'domain n'")
        n = int(rows[1][1])
        tables: dict[str, dict[tuple[int, ...], Fraction]] = {}
        i = 2
        while i < len(rows):
            if rows[i][0] != "pred":
                raise FormatError(f"expected 'pred NAME ARITY', got {rows[i]}")
            name, arity = rows[i][1], int(rows[i][2])
            i += 1
            cells: dict[tuple[int, ...], Fraction] = {}
            for _ in range(n**arity):
                row = rows[i]
                args = tuple(int(tok) for tok in row[:arity])
                cells[args] = Fraction(row[arity])
                i += 1
            tables[name] = cells
    except (IndexError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"malformed model file: {exc}") from exc
    if n < 1:
        raise FormatError("domain size must be >= 1")
    for name, cells in tables.items():
        arity = len(next(iter(cells), ()))
        expected = set(itertools.product(range(1, n + 1), repeat=arity))
        if set(cells) != expected:
            raise FormatError(f"table for {name} does not cover all tuples")
    return Model.from_dict(n, tables)
