"""Formula and model translations between logics.

Covers: the squaring translation that pushes weak-nilpotent-minimum
evaluation into the idempotent part of the chain, the induced model
restriction and Goedel-fragment extraction; the predicate-definedness
guard and the collapse of MV-valued models to Boolean ones; the
double-negation translation; and the delta guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import (
    BaseChain,
    Chain,
    NegationProfile,
    _equally_spaced,
    negation_profile,
    require_finite,
    satisfies_identity,
)
from .errors import NotAnMVChainError, TranslationError
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
    QUANT,
    StrongAnd,
    desugar,
    has_delta,
    is_classical,
    signature_of,
)
from .semantics import Model


def _square(phi: Formula) -> Formula:
    return StrongAnd(phi, phi)


def wnm_star(phi: Formula) -> Formula:
    """Squaring translation: atoms and implications are squared, the
    other primitive connectives and quantifiers pass through.  Derived
    connectives are desugared first; delta is rejected."""
    if has_delta(phi):
        raise TranslationError("the squaring translation is delta-free")
    return _wnm_star(desugar(phi))


def _wnm_star(phi: Formula) -> Formula:
    t = type(phi)
    if t is Atom:
        return _square(phi)
    if t is Bottom:
        return phi
    if t is Implies:
        return _square(Implies(_wnm_star(phi.left), _wnm_star(phi.right)))
    if t in (And, StrongAnd):
        return t(_wnm_star(phi.left), _wnm_star(phi.right))
    if t in (Forall, Exists):
        return t(phi.var, _wnm_star(phi.body))
    raise TranslationError(f"unexpected node after desugaring: {phi!r}")


def _require_wnm(chain: BaseChain) -> Chain:
    c = require_finite(chain)
    if not satisfies_identity(c, "wnm"):
        raise TranslationError(f"{c.name} is not a WNM chain")
    return c


def model_plus(chain: BaseChain, model: Model) -> Model:
    """Restrict a model's values to the idempotent part: cells whose
    value is outside A+ are zeroed."""
    c = _require_wnm(chain)
    profile = negation_profile(c)
    plus_values = {c.carrier[i] for i in profile.a_plus}
    tables = model.as_dict()
    out = {
        pred: {
            args: (val if val in plus_values else Fraction(0))
            for args, val in cells.items()
        }
        for pred, cells in tables.items()
    }
    return Model.from_dict(model.domain_size, out)


@dataclass(frozen=True)
class GodelFragment:
    """The Goedel chain carried by A+ together with 0, plus the order
    embedding from its indices into the source chain's indices."""

    chain: Chain
    embedding: tuple[int, ...]  # fragment index -> source index
    source: Chain

    def embed_value(self, x: Fraction) -> Fraction:
        """Fragment value -> source value."""
        i = self.chain.index(x)
        return self.source.carrier[self.embedding[i]]

    def restrict_value(self, x: Fraction) -> Fraction:
        """Source value in A+ or 0 -> fragment value."""
        i = self.source.index(x)
        try:
            return self.chain.carrier[self.embedding.index(i)]
        except ValueError:
            raise TranslationError(f"{x} is not in the fragment support")

    def translate_model(self, model: Model) -> Model:
        """The restricted model read through the embedding inverse."""
        plus = model_plus(self.source, model)
        out = {
            pred: {args: self.restrict_value(v) for args, v in cells.items()}
            for pred, cells in plus.as_dict().items()
        }
        return Model.from_dict(model.domain_size, out)


def godel_fragment(chain: BaseChain) -> GodelFragment:
    """Extract the Goedel chain with support A+ together with bottom,
    relabeled to equally spaced rationals."""
    c = _require_wnm(chain)
    profile = negation_profile(c)
    support = sorted({0} | set(profile.a_plus))
    k = len(support)
    carrier = _equally_spaced(k)
    table = tuple(tuple(min(i, j) for j in range(k)) for i in range(k))
    godel = Chain(f"godel_fragment({c.name})", carrier, table)
    return GodelFragment(godel, tuple(support), c)


# ---------------------------------------------------------------------------
# Predicate definedness and the MV -> Boolean collapse


def _forall_chain(vars: tuple[str, ...], body: Formula) -> Formula:
    for v in reversed(vars):
        body = Forall(v, body)
    return body


def predef_atom(pred: str, arity: int) -> Formula:
    args = tuple(f"x{i+1}" for i in range(arity))
    atom = Atom(pred, args)
    return _forall_chain(args, Not(Iff(atom, Not(atom))))


def predef(phi: Formula) -> Formula:
    """Conjunction of the definedness guard over the formula's
    predicates, in first-occurrence order; classical input only."""
    if not is_classical(phi):
        raise TranslationError("predef is defined for classical formulas only")
    sig = signature_of(phi)
    if not sig:
        raise TranslationError("formula has no atoms")
    parts = [predef_atom(pred, arity) for pred, arity in sig.items()]
    out = parts[-1]
    for part in reversed(parts[:-1]):
        out = And(part, out)
    return out


def luk_star(phi: Formula) -> Formula:
    """The guarded translation ~PREDEF \\/ (~phi -> phi)."""
    if not is_classical(phi):
        raise TranslationError("luk_star is defined for classical formulas only")
    return Or(Not(predef(phi)), Implies(Not(phi), phi))


def _require_mv(chain: BaseChain) -> Chain:
    c = require_finite(chain)
    if not satisfies_identity(c, "inv"):
        raise NotAnMVChainError(f"{c.name} does not satisfy ~~x -> x")
    return c


def boolean_collapse(chain: BaseChain, model: Model) -> Model:
    """Boolean model with 1 exactly in the cells whose value lies in
    A+; the chain must be an MV-chain."""
    c = _require_mv(chain)
    profile = negation_profile(c)
    plus_values = {c.carrier[i] for i in profile.a_plus}
    out = {
        pred: {
            args: Fraction(1) if val in plus_values else Fraction(0)
            for args, val in cells.items()
        }
        for pred, cells in model.as_dict().items()
    }
    return Model.from_dict(model.domain_size, out)


# ---------------------------------------------------------------------------
# Atom-level guards


def _map_atoms(phi: Formula, fn) -> Formula:
    t = type(phi)
    if t is Atom:
        return fn(phi)
    if isinstance(phi, BINARY):
        return t(_map_atoms(phi.left, fn), _map_atoms(phi.right, fn))
    if t is Not:
        return Not(_map_atoms(phi.sub, fn))
    if t is Delta:
        return Delta(_map_atoms(phi.sub, fn))
    if isinstance(phi, QUANT):
        return t(phi.var, _map_atoms(phi.body, fn))
    return phi


def double_neg(phi: Formula) -> Formula:
    """Replace every atom with its double negation; delta-free input."""
    if has_delta(phi):
        raise TranslationError("the double-negation translation is delta-free")
    return _map_atoms(phi, lambda a: Not(Not(a)))


def delta_guard(phi: Formula) -> Formula:
    """Replace every atom a with !a; the target chain must provide
    delta (checked at evaluation time)."""
    return _map_atoms(phi, Delta)
