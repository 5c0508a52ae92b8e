"""Shared test machinery: generators and AST transforms.

The assertion generator produces closed, well-sorted ASTs so they both
round-trip through the renderer and evaluate without sort errors.
"""

from __future__ import annotations

import random

from hypothesis import strategies as st

from lifter.lang import (
    AllNumbers,
    AllOccs,
    AllRules,
    AllTerms,
    And,
    Atomic,
    AtomicName,
    BoolLit,
    Imp,
    Modifier,
    Not,
    OccsOf,
    Or,
    Pattern,
    Quant,
    QuantKind,
    SIGNATURES,
    Sort,
    TermsIn,
    domain_sort,
)
from lifter.terms import App, Bound, Const, Free, Lambda, Schematic

_NAMES = ["x0", "x1", "x2", "y0", "y1", "z0"]


def _random_domain(rng: random.Random, env: dict[str, Sort]):
    term_vars = [v for v, s in env.items() if s is Sort.TERM]
    choices = [
        AllNumbers(),
        AllRules(),
        AllTerms(),
        AllOccs(),
        TermsIn(Modifier.INDUCTION),
        TermsIn(Modifier.ARBITRARY),
    ]
    if term_vars:
        choices.append(OccsOf(rng.choice(term_vars)))
    return rng.choice(choices)


def _random_atomic(rng: random.Random, env: dict[str, Sort]):
    by_sort: dict[Sort, list[str]] = {s: [] for s in Sort}
    for var, sort in env.items():
        by_sort[sort].append(var)
    candidates = [
        name
        for name, sig in SIGNATURES.items()
        if all(slot is Pattern or by_sort[slot] for slot in sig)
    ]
    if not candidates:
        return BoolLit(rng.random() < 0.5)
    name = rng.choice(candidates)
    args = tuple(
        rng.choice(list(Pattern)) if slot is Pattern else rng.choice(by_sort[slot])
        for slot in SIGNATURES[name]
    )
    return Atomic(name, args)


def random_assertion(rng: random.Random, env: dict[str, Sort] | None = None, depth: int = 0):
    """A closed, well-sorted assertion; size shrinks as depth grows."""
    env = {} if env is None else env
    if depth >= 5 or rng.random() < 0.2:
        if rng.random() < 0.4:
            return BoolLit(rng.random() < 0.5)
        return _random_atomic(rng, env)
    roll = rng.random()
    if roll < 0.15:
        return Not(random_assertion(rng, env, depth + 1))
    if roll < 0.45:
        shape = rng.choice([And, Or, Imp])
        return shape(
            random_assertion(rng, env, depth + 1),
            random_assertion(rng, env, depth + 1),
        )
    kind = rng.choice([QuantKind.EXISTS, QuantKind.FORALL])
    var = rng.choice(_NAMES)
    domain = _random_domain(rng, env)
    body = random_assertion(rng, {**env, var: domain_sort(domain)}, depth + 1)
    return Quant(kind, var, domain, body)


def random_closed_quant(rng: random.Random) -> Quant:
    kind = rng.choice([QuantKind.EXISTS, QuantKind.FORALL])
    var = rng.choice(_NAMES)
    domain = _random_domain(rng, {})
    body = random_assertion(rng, {var: domain_sort(domain)}, depth=2)
    return Quant(kind, var, domain, body)


@st.composite
def terms_strategy(draw, binders: int = 0, depth: int = 0):
    """Well-formed terms: every de Bruijn index stays under its binders."""
    names = st.text("abcdefg'_", min_size=1, max_size=3)
    options = ["const", "free", "schematic"]
    if binders:
        options.append("bound")
    if depth < 4:
        options += ["lambda", "app", "app"]
    kind = draw(st.sampled_from(options))
    if kind == "const":
        return Const(draw(names))
    if kind == "free":
        return Free(draw(names))
    if kind == "schematic":
        return Schematic(draw(names))
    if kind == "bound":
        return Bound(draw(st.integers(0, binders - 1)))
    if kind == "lambda":
        return Lambda(draw(names), draw(terms_strategy(binders + 1, depth + 1)))
    return App(
        draw(terms_strategy(binders, depth + 1)),
        draw(terms_strategy(binders, depth + 1)),
    )


def desugar_occurrence_quants(node):
    """Rewrite `Q x : term_occurrence IN t : term . B` into the unrestricted
    quantifier guarded by term_occurrence_is_of_term."""
    match node:
        case Quant(kind, var, OccsOf(term_var), body):
            guard = Atomic(AtomicName.TERM_OCCURRENCE_IS_OF_TERM, (var, term_var))
            inner = desugar_occurrence_quants(body)
            if kind is QuantKind.EXISTS:
                return Quant(kind, var, AllOccs(), And(guard, inner))
            return Quant(kind, var, AllOccs(), Imp(guard, inner))
        case Quant(kind, var, domain, body):
            return Quant(kind, var, domain, desugar_occurrence_quants(body))
        case Not(body):
            return Not(desugar_occurrence_quants(body))
        case And(lhs, rhs):
            return And(desugar_occurrence_quants(lhs), desugar_occurrence_quants(rhs))
        case Or(lhs, rhs):
            return Or(desugar_occurrence_quants(lhs), desugar_occurrence_quants(rhs))
        case Imp(lhs, rhs):
            return Imp(desugar_occurrence_quants(lhs), desugar_occurrence_quants(rhs))
        case _:
            return node
