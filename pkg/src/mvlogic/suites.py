"""Named verification suites: each one checks a family of exact
identities or bounded equivalences at desk scale and reports failures.

The suites double as the acceptance surface; the CLI exposes them as
``suite <name>`` and the test suite calls them directly.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import corpus
from .chains import (
    BaseChain,
    Chain,
    check_chain,
    delta_expand,
    make_chain,
    make_wnm_chain,
    negation_profile,
    satisfies_identity,
    subchains,
)
from .formulas import (
    Formula,
    free_variables,
    has_delta,
    pretty,
    prop_variables,
    signature_of,
    subformulas,
    universal_closure,
)
from .grounding import ground, induced_assignment, taut_upto_grounded
from .reductions import (
    boolean_collapse,
    delta_guard,
    double_neg,
    godel_fragment,
    luk_star,
    model_plus,
    predef,
    wnm_star,
)
from .search import find_countermodel, lift_prop, taut_upto_direct, verify_certificate
from .semantics import Model, enumerate_models, eval_fo, eval_prop, is_taut_prop


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def case(self, condition: bool, message: str) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.ok else f"FAIL ({len(self.failures)} failures)"
        return f"suite {self.name}: {status}, {self.cases} cases, {self.seconds:.2f}s"


def _timed(fn):
    def wrapper(*args, **kwargs) -> SuiteReport:
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.seconds = time.perf_counter() - t0
        return report

    return wrapper


# ---------------------------------------------------------------------------
# Standard chain zoo


def shipped_chains(max_size: int = 12) -> list[Chain]:
    """One chain per family and size up to max_size carrier elements."""
    out = [make_chain("boolean")]
    out.extend(make_chain("lukasiewicz", n) for n in range(1, max_size))
    for family in ("godel", "nm", "dp"):
        out.extend(make_chain(family, n) for n in range(2, max_size + 1))
    return out


def custom_wnm_chains() -> list[Chain]:
    """Two non-involutive weak negations used by the WNM suites."""
    return [
        make_wnm_chain([4, 3, 1, 1, 0], "wnmA"),
        make_wnm_chain([5, 3, 3, 2, 0, 0], "wnmB"),
    ]


LEMMA_TR_CHAINS = (
    ("boolean", lambda: make_chain("boolean")),
    ("lukasiewicz(2)", lambda: make_chain("lukasiewicz", 2)),
    ("lukasiewicz(3)", lambda: make_chain("lukasiewicz", 3)),
    ("godel(3)", lambda: make_chain("godel", 3)),
    ("godel(4)", lambda: make_chain("godel", 4)),
    ("nm(4)", lambda: make_chain("nm", 4)),
    ("nm(5)", lambda: make_chain("nm", 5)),
    ("dp(4)", lambda: make_chain("dp", 4)),
)


def _verdict_key(v):
    return (v.is_taut, v.refuted_at)


def _all_models(phi: Formula, chain: Chain, max_n: int):
    sig = signature_of(phi)
    for n in range(1, max_n + 1):
        yield from enumerate_models(sig, n, chain.carrier)


def _random_model(rng: random.Random, sig, n: int, carrier) -> Model:
    tables = {}
    for pred, arity in sig.items():
        tables[pred] = {
            args: rng.choice(carrier)
            for args in itertools.product(range(1, n + 1), repeat=arity)
        }
    return Model.from_dict(n, tables)


# ---------------------------------------------------------------------------
# Suites


@_timed
def suite_residuation(max_size: int = 12) -> SuiteReport:
    """Every shipped chain up to max_size passes the exhaustive law
    check, residuation biconditional included."""
    report = SuiteReport("residuation")
    for chain in shipped_chains(max_size):
        result = check_chain(chain)
        report.case(
            result.all_pass,
            f"{chain.name}: " + "; ".join(v.law for v in result.violations),
        )
    return report


@_timed
def suite_lemma_tr(trials: int = 200, seed: int = 7, exhaustive_n: int = 2) -> SuiteReport:
    """First-order truth value equals the grounded propositional value
    under the induced assignment: exhaustive on the fixed corpus at
    n <= exhaustive_n, plus seeded random formulas with sampled models
    at n <= 3."""
    report = SuiteReport("lemma-tr")
    for name, mk in LEMMA_TR_CHAINS:
        chain = mk()
        for phi in corpus.fixed_corpus():
            closed = universal_closure(phi)
            sig = signature_of(closed)
            for n in range(1, exhaustive_n + 1):
                g = ground(closed, n)
                for model in enumerate_models(sig, n, chain.carrier):
                    direct = eval_fo(chain, model, {}, closed)
                    coded = eval_prop(chain, induced_assignment(model), g.formula)
                    report.case(
                        direct == coded,
                        f"{name} {pretty(phi)} n={n}: {direct} != {coded}",
                    )
    rng = random.Random(seed)
    chains = [mk() for _, mk in LEMMA_TR_CHAINS]
    for _ in range(trials):
        chain = rng.choice(chains)
        phi = universal_closure(
            corpus.random_formula(rng, depth=rng.randint(2, 4))
        )
        sig = signature_of(phi)
        n = rng.randint(1, 3)
        for _ in range(3):
            model = _random_model(rng, sig, n, chain.carrier)
            direct = eval_fo(chain, model, {}, phi)
            g = ground(phi, n)
            coded = eval_prop(chain, induced_assignment(model), g.formula)
            report.case(
                direct == coded,
                f"{chain.name} {pretty(phi)} n={n}: {direct} != {coded}",
            )
    return report


@_timed
def suite_lemma_clos(trials: int = 50, seed: int = 11, bound: int = 2) -> SuiteReport:
    """Open formulas and their universal closures get the same bounded
    verdict."""
    report = SuiteReport("lemma-clos")
    rng = random.Random(seed)
    chains = [make_chain("boolean"), make_chain("lukasiewicz", 2), make_chain("godel", 3)]
    produced = 0
    while produced < trials:
        phi = corpus.random_formula(rng, depth=rng.randint(1, 3))
        if not free_variables(phi):
            continue
        produced += 1
        chain = rng.choice(chains)
        open_v = taut_upto_grounded(chain, phi, bound)
        closed_v = taut_upto_grounded(chain, universal_closure(phi), bound)
        report.case(
            _verdict_key(open_v) == _verdict_key(closed_v),
            f"{chain.name} {pretty(phi)}: open {open_v.describe()} "
            f"!= closed {closed_v.describe()}",
        )
    return report


def _wnm_suite_chains() -> list[Chain]:
    return [make_chain("nm", 4), make_chain("nm", 5)] + custom_wnm_chains()


@_timed
def suite_lemma_gc(max_n: int = 2) -> SuiteReport:
    """Squared formulas cannot tell a model from its restriction to the
    idempotent part, and their value lands in A+ u {0}."""
    report = SuiteReport("lemma-gc")
    for chain in _wnm_suite_chains():
        profile = negation_profile(chain)
        allowed = {chain.carrier[i] for i in profile.a_plus} | {chain.bottom}
        for phi in corpus.fixed_corpus():
            closed = universal_closure(phi)
            starred = wnm_star(closed)
            for model in _all_models(closed, chain, max_n):
                a = eval_fo(chain, model, {}, starred)
                b = eval_fo(chain, model_plus(chain, model), {}, starred)
                report.case(
                    a == b and a in allowed,
                    f"{chain.name} {pretty(phi)}: {a} vs {b} (allowed: {a in allowed})",
                )
    return report


@_timed
def suite_lemma_gc1(max_n: int = 2) -> SuiteReport:
    """The restricted value agrees with both the squared and the plain
    formula over the extracted Goedel fragment."""
    report = SuiteReport("lemma-gc1")
    for chain in _wnm_suite_chains():
        frag = godel_fragment(chain)
        for phi in corpus.fixed_corpus():
            closed = universal_closure(phi)
            starred = wnm_star(closed)
            for model in _all_models(closed, chain, max_n):
                restricted = eval_fo(chain, model_plus(chain, model), {}, starred)
                m_prime = frag.translate_model(model)
                over_frag_star = eval_fo(frag.chain, m_prime, {}, starred)
                over_frag = eval_fo(frag.chain, m_prime, {}, closed)
                report.case(
                    frag.restrict_value(restricted) == over_frag_star
                    and over_frag_star == over_frag,
                    f"{chain.name} {pretty(phi)}: {restricted} vs "
                    f"{over_frag_star} vs {over_frag}",
                )
    return report


def _instrumented_values(chain, model, phi):
    """Values of all subformula occurrences at all valuations of the
    formula's variables."""
    vars_ = set()
    for node in subformulas(phi):
        if hasattr(node, "args"):
            vars_.update(node.args)
        if hasattr(node, "var"):
            vars_.add(node.var)
    vars_ = sorted(vars_)
    out = set()
    for values in itertools.product(range(1, model.domain_size + 1), repeat=len(vars_)):
        v = dict(zip(vars_, values))
        for node in subformulas(phi):
            out.add(eval_fo(chain, model, v, node))
    return out


@_timed
def suite_lemma_pred(max_n: int = 2) -> SuiteReport:
    """Definedness guard: positivity is valuation-uniform, and a
    positive guard rules out the negation fixpoint among all subformula
    values."""
    report = SuiteReport("lemma-pred")
    chains = [make_chain("lukasiewicz", 2), make_chain("lukasiewicz", 3)]
    for chain in chains:
        profile = negation_profile(chain)
        fix = None if profile.fixpoint is None else chain.carrier[profile.fixpoint]
        for phi in corpus.classical_corpus():
            guard = predef(phi)
            for model in _all_models(phi, chain, max_n):
                vals = set()
                for values in itertools.product(
                    range(1, model.domain_size + 1), repeat=2
                ):
                    v = {"u1": values[0], "u2": values[1]}
                    vals.add(eval_fo(chain, model, v, guard))
                report.case(
                    len(vals) == 1,
                    f"{chain.name} {pretty(phi)}: guard not valuation-uniform",
                )
                positive = next(iter(vals)) > 0
                if positive and fix is not None:
                    sub_vals = _instrumented_values(chain, model, phi)
                    report.case(
                        fix not in sub_vals,
                        f"{chain.name} {pretty(phi)}: fixpoint {fix} appears "
                        "as a subformula value despite a positive guard",
                    )
    return report


@_timed
def suite_lemma_luk1(max_n: int = 2) -> SuiteReport:
    """With a positive definedness guard, a classical formula lands in
    A+ exactly when it is true in the collapsed Boolean model."""
    report = SuiteReport("lemma-luk1")
    two = make_chain("boolean")
    for chain in [make_chain("lukasiewicz", 2), make_chain("lukasiewicz", 3)]:
        profile = negation_profile(chain)
        plus = {chain.carrier[i] for i in profile.a_plus}
        for phi in corpus.classical_corpus():
            closed = universal_closure(phi)
            guard = predef(phi)
            for model in _all_models(closed, chain, max_n):
                if eval_fo(chain, model, {}, guard) == 0:
                    continue
                val = eval_fo(chain, model, {}, closed)
                collapsed = boolean_collapse(chain, model)
                bool_val = eval_fo(two, collapsed, {}, closed)
                report.case(
                    (val in plus) == (bool_val == 1),
                    f"{chain.name} {pretty(phi)}: {val} in A+ is "
                    f"{val in plus} but collapse gives {bool_val}",
                )
    return report


@_timed
def suite_lemma_luk(bound: int = 3) -> SuiteReport:
    """Guarded translation: classical tautology over the Boolean chain
    iff the translation is a tautology over the MV-chain, at each
    bound, with matching refutation sizes."""
    report = SuiteReport("lemma-luk")
    two = make_chain("boolean")
    for chain in [make_chain("lukasiewicz", 2), make_chain("lukasiewicz", 3)]:
        for phi in corpus.classical_corpus():
            mv = taut_upto_grounded(chain, luk_star(phi), bound)
            boolean = taut_upto_grounded(two, phi, bound)
            report.case(
                _verdict_key(mv) == _verdict_key(boolean),
                f"{chain.name} {pretty(phi)}: {mv.describe()} vs "
                f"boolean {boolean.describe()}",
            )
    return report


def _reduction_suite(name, translate, chain, reference, bound, formulas):
    report = SuiteReport(name)
    for phi in formulas:
        translated = taut_upto_grounded(chain, translate(phi), bound)
        ref = taut_upto_grounded(reference, phi, bound)
        report.case(
            _verdict_key(translated) == _verdict_key(ref),
            f"{pretty(phi)}: translated {translated.describe()} vs "
            f"reference {ref.describe()}",
        )
    return report


@_timed
def suite_thm41_smtl(bound: int = 3) -> SuiteReport:
    """Double negation over a chain with strict negation reduces to the
    Boolean verdicts."""
    return _reduction_suite(
        "thm41-smtl",
        double_neg,
        make_chain("godel", 4),
        make_chain("boolean"),
        bound,
        corpus.fixed_corpus(),
    )


@_timed
def suite_thm41_bl(bound: int = 3) -> SuiteReport:
    """Double negation over an ordinal sum reduces to its first
    (MV-chain) component."""
    from .chains import ordinal_sum

    luk2 = make_chain("lukasiewicz", 2)
    sum_chain = ordinal_sum(luk2, make_chain("godel", 2))
    return _reduction_suite(
        "thm41-bl",
        double_neg,
        sum_chain,
        luk2,
        bound,
        corpus.fixed_corpus(),
    )


@_timed
def suite_thm415_delta(bound: int = 3) -> SuiteReport:
    """Guarding every atom with delta reduces any chain's verdicts to
    the Boolean-with-delta ones."""
    report = SuiteReport("thm415-delta")
    two_delta = delta_expand(make_chain("boolean"))
    targets = [
        delta_expand(make_chain("lukasiewicz", 2)),
        delta_expand(make_chain("lukasiewicz", 3)),
        delta_expand(make_chain("godel", 4)),
    ]
    for chain in targets:
        for phi in corpus.fixed_corpus():
            translated = taut_upto_grounded(chain, delta_guard(phi), bound)
            ref = taut_upto_grounded(two_delta, phi, bound)
            report.case(
                _verdict_key(translated) == _verdict_key(ref),
                f"{chain.name} {pretty(phi)}: {translated.describe()} vs "
                f"{ref.describe()}",
            )
    return report


@_timed
def suite_formula_f() -> SuiteReport:
    """The delta fixpoint criterion: !(p <-> ~p) -> p holds on a
    delta-expanded chain exactly when the chain has no negation
    fixpoint."""
    report = SuiteReport("formula-f")
    for chain in [
        make_chain("lukasiewicz", 2),
        make_chain("lukasiewicz", 3),
        make_chain("nm", 5),
        make_chain("godel", 4),
    ] + shipped_chains(8):
        expanded = delta_expand(chain)
        holds = satisfies_identity(expanded, "f")
        fixpoint_free = negation_profile(chain).fixpoint is None
        report.case(
            holds == fixpoint_free,
            f"{chain.name}: formula (f) holds={holds}, "
            f"fixpoint-free={fixpoint_free}",
        )
    return report


@_timed
def suite_fo_axioms(max_n: int = 2, max_chain_size: int = 5) -> SuiteReport:
    """The five quantifier axiom schemata evaluate to 1 over every
    enumerated model of every shipped small chain."""
    report = SuiteReport("fo-axioms")
    chains = [c for c in shipped_chains(max_chain_size) if c.size <= max_chain_size]
    for chain in chains:
        for name, instances in corpus.fo_axiom_instances().items():
            for phi in instances:
                closed = universal_closure(phi)
                for model in _all_models(closed, chain, max_n):
                    val = eval_fo(chain, model, {}, closed)
                    report.case(
                        val == chain.top,
                        f"{chain.name} {name} {pretty(phi)}: value {val}",
                    )
    return report


@_timed
def suite_divisibility() -> SuiteReport:
    """Subchains of the 7-element Lukasiewicz chain have exactly the
    sizes k+1 for k dividing 6."""
    report = SuiteReport("divisibility")
    luk6 = make_chain("lukasiewicz", 6)
    sizes = sorted({len(s) for s in subchains(luk6)})
    report.case(sizes == [2, 3, 4, 7], f"subchain sizes {sizes} != [2, 3, 4, 7]")
    for n in (2, 3, 4):
        sizes = sorted({len(s) for s in subchains(make_chain("lukasiewicz", n))})
        expected = sorted({k + 1 for k in range(1, n + 1) if n % k == 0})
        report.case(
            sizes == expected,
            f"lukasiewicz({n}) subchain sizes {sizes} != {expected}",
        )
    return report


@_timed
def suite_oracle_agreement() -> SuiteReport:
    """The grounded and the direct bounded tautology checkers agree on
    verdict and refutation bound."""
    report = SuiteReport("oracle-agreement")
    plan = [
        (make_chain("boolean"), 3),
        (make_chain("lukasiewicz", 2), 3),
        (make_chain("godel", 3), 3),
        (make_chain("lukasiewicz", 3), 2),
        (make_chain("nm", 4), 2),
    ]
    for chain, bound in plan:
        for phi in corpus.fixed_corpus():
            grounded = taut_upto_grounded(chain, phi, bound)
            direct = taut_upto_direct(chain, phi, bound)
            report.case(
                _verdict_key(grounded) == _verdict_key(direct),
                f"{chain.name} {pretty(phi)}: grounded {grounded.describe()} "
                f"vs direct {direct.describe()}",
            )
    return report


@_timed
def suite_thm413_demo(bound: int = 3) -> SuiteReport:
    """A propositional separation lifts to a first-order one: the
    lifted formula stays a bounded tautology over the separating chain
    while the other chain yields a verifying singleton countermodel."""
    from .formulas import parse

    report = SuiteReport("thm413-demo")
    phi = parse(r"(x & x) <-> (x & x & x)", kind="prop")
    luk2 = make_chain("lukasiewicz", 2)
    luk3 = make_chain("lukasiewicz", 3)
    ok2, _ = is_taut_prop(luk2, phi)
    ok3, witness = is_taut_prop(luk3, phi)
    report.case(ok2, "x^2 <-> x^3 should be a tautology over lukasiewicz(2)")
    report.case(not ok3, "x^2 <-> x^3 should fail over lukasiewicz(3)")
    psi = lift_prop(phi)
    verdict = taut_upto_direct(luk2, psi, bound)
    report.case(
        verdict.is_taut,
        f"lifted formula not taut up to {bound} over lukasiewicz(2)",
    )
    cert = find_countermodel(luk3, psi, 1)
    report.case(cert is not None, "no countermodel found over lukasiewicz(3)")
    if cert is not None:
        report.case(cert.model.domain_size == 1, "countermodel is not a singleton")
        report.case(verify_certificate(cert, luk3), "certificate failed to verify")
    return report


SUITES = {
    "residuation": suite_residuation,
    "lemma-tr": suite_lemma_tr,
    "lemma-clos": suite_lemma_clos,
    "lemma-gc": suite_lemma_gc,
    "lemma-gc1": suite_lemma_gc1,
    "lemma-pred": suite_lemma_pred,
    "lemma-luk1": suite_lemma_luk1,
    "lemma-luk": suite_lemma_luk,
    "thm41-smtl": suite_thm41_smtl,
    "thm41-bl": suite_thm41_bl,
    "thm415-delta": suite_thm415_delta,
    "formula-f": suite_formula_f,
    "fo-axioms": suite_fo_axioms,
    "divisibility": suite_divisibility,
    "oracle-agreement": suite_oracle_agreement,
    "thm413-demo": suite_thm413_demo,
}
