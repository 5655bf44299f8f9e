"""Bounded countermodel search with verifiable certificates, the
model-enumeration tautology check, and the propositional-to-first-order
lifting.

A certificate embeds everything needed for offline re-checking: the
chain (by name, table hash and inline copy), the closed formula text,
the witness model and the computed truth value, which must be strictly
below 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .chains import BaseChain, Chain, chain_from_text, chain_to_text, require_finite
from .errors import CertificateError, FormatError
from .formulas import (
    Atom,
    Formula,
    Var,
    free_variables,
    parse,
    pretty,
    prop_variables,
    signature_of,
    universal_closure,
)
from .grounding import Verdict
from .semantics import Model, enumerate_models, eval_fo, model_from_text, model_to_text


@dataclass(frozen=True)
class Certificate:
    """Countermodel witness: re-evaluating the formula over the
    embedded model on the identified chain must reproduce the stored
    value, which is strictly below 1."""

    chain_name: str
    chain_hash: str
    formula_text: str
    model: Model
    valuation: dict[str, int]
    value: Fraction
    chain_text: str | None = None  # optional inline copy


def _closed(phi: Formula) -> Formula:
    return universal_closure(phi)


def find_countermodel(
    chain: BaseChain,
    phi: Formula,
    max_size: int,
    values: Iterable[Fraction] | None = None,
) -> Certificate | None:
    """Canonically first countermodel of the universal closure of phi,
    over domains 1..max_size, or None.

    With the full carrier of a finite chain, None means the formula is
    a finite-model tautology up to max_size; over a partial grid a None
    is inconclusive (the caller knows which case it is from the value
    set it passed).
    """
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    if values is None:
        values = require_finite(chain).carrier
    values = tuple(values)
    for v in values:
        if not chain.contains(v):
            raise ValueError(f"grid value {v} is not in the carrier")
    closed = _closed(phi)
    sig = signature_of(closed)
    top = chain.top
    for n in range(1, max_size + 1):
        for model in enumerate_models(sig, n, values):
            val = eval_fo(chain, model, {}, closed)
            if val != top:
                text = chain_to_text(chain) if isinstance(chain, Chain) else None
                return Certificate(
                    chain_name=chain.name,
                    chain_hash=(
                        chain.table_hash() if isinstance(chain, Chain) else "-"
                    ),
                    formula_text=pretty(closed),
                    model=model,
                    valuation={},
                    value=val,
                    chain_text=text,
                )
    return None


def taut_upto_direct(chain: BaseChain, phi: Formula, bound: int) -> Verdict:
    """Bounded tautology check by direct model enumeration over the
    full carrier; mirrors the grounded checker's verdicts."""
    c = require_finite(chain)
    closed = _closed(phi)
    was_open = closed is not phi
    sig = signature_of(closed)
    top = c.top
    for n in range(1, bound + 1):
        for model in enumerate_models(sig, n, c.carrier):
            val = eval_fo(c, model, {}, closed)
            if val != top:
                return Verdict(
                    False, bound, n, {"model": model, "value": val},
                    closed_input=was_open,
                )
    return Verdict(True, bound, closed_input=was_open)


def verify_certificate(cert: Certificate, chain: BaseChain | None = None) -> bool:
    """Re-evaluate the certificate; True iff the value matches exactly
    and is strictly below 1.  A chain disagreeing with the recorded
    hash is a hard error."""
    if chain is None:
        if cert.chain_text is None:
            raise CertificateError("no chain given and no inline copy present")
        chain = chain_from_text(cert.chain_text, cert.chain_name)
    if isinstance(chain, Chain) and cert.chain_hash not in ("-", chain.table_hash()):
        raise CertificateError(
            f"chain hash mismatch: certificate was issued for {cert.chain_name}"
        )
    phi = parse(cert.formula_text, kind="fo")
    if free_variables(phi) and not cert.valuation:
        return False
    val = eval_fo(chain, cert.model, cert.valuation, phi)
    return val == cert.value and val < chain.top


def lift_prop(phi: Formula) -> Formula:
    """Replace each propositional variable with a fresh unary predicate
    applied to its own individual variable, then close universally."""
    names = prop_variables(phi)
    mapping = {
        name: Atom(f"P{i+1}", (f"x{i+1}",)) for i, name in enumerate(names)
    }
    return universal_closure(_lift(phi, mapping))


def _lift(phi: Formula, mapping: dict[str, Atom]) -> Formula:
    from .formulas import BINARY, QUANT, UNARY

    t = type(phi)
    if t is Var:
        return mapping[phi.name]
    if isinstance(phi, BINARY):
        return t(_lift(phi.left, mapping), _lift(phi.right, mapping))
    if isinstance(phi, UNARY):
        return t(_lift(phi.sub, mapping))
    if isinstance(phi, QUANT):
        return t(phi.var, _lift(phi.body, mapping))
    return phi


# ---------------------------------------------------------------------------
# Certificate file format: chain/model sections plus a value trailer.
#
#   mtlcert 1
#   chain NAME HASH
#   formula TEXT
#   begin chain            (optional inline copy)
#   ... chain file lines ...
#   end chain
#   begin model
#   ... model file lines ...
#   end model
#   valuation [x=j ...]
#   value p/q


def certificate_to_text(cert: Certificate) -> str:
    lines = [
        "mtlcert 1",
        f"chain {cert.chain_name} {cert.chain_hash}",
        f"formula {cert.formula_text}",
    ]
    if cert.chain_text is not None:
        lines.append("begin chain")
        lines.extend(cert.chain_text.rstrip("\n").splitlines())
        lines.append("end chain")
    lines.append("begin model")
    lines.extend(model_to_text(cert.model).rstrip("\n").splitlines())
    lines.append("end model")
    lines.append(
        "valuation " + " ".join(f"{k}={v}" for k, v in sorted(cert.valuation.items()))
    )
    lines.append(f"value {cert.value}")
    return "\n".join(lines) + "\n"


def certificate_from_text(text: str) -> Certificate:
    lines = text.splitlines()
    if not lines or lines[0].split() != ["mtlcert", "1"]:
        raise FormatError("expected header 'mtlcert 1'")
    chain_name = chain_hash = formula_text = None
    chain_text = None
    model = None
    valuation: dict[str, int] = {}
    value = None
    i = 1
    try:
        while i < len(lines):
            line = lines[i].strip()
            i += 1
            if not line:
                continue
            if line.startswith("chain "):
                _, chain_name, chain_hash = line.split()
            elif line.startswith("formula "):
                formula_text = line[len("formula "):]
            elif line == "begin chain":
                j = lines.index("end chain", i)
                chain_text = "\n".join(lines[i:j]) + "\n"
                i = j + 1
            elif line == "begin model":
                j = lines.index("end model", i)
                model = model_from_text("\n".join(lines[i:j]) + "\n")
                i = j + 1
            elif line.startswith("valuation"):
                for pair in line.split()[1:]:
                    k, v = pair.split("=")
                    valuation[k] = int(v)
            elif line.startswith("value "):
                value = Fraction(line.split()[1])
            else:
                raise FormatError(f"unexpected line {line!r}")
    except (ValueError, IndexError) as exc:
        raise FormatError(f"malformed certificate: {exc}") from exc
    if None in (chain_name, chain_hash, formula_text, model, value):
        raise FormatError("certificate is missing a required section")
    return Certificate(
        chain_name, chain_hash, formula_text, model, valuation, value, chain_text
    )
