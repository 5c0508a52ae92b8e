"""Higher-order term trees, proof goals, occurrences, and induct arguments.

Terms are curried: an application node has exactly one function and one
argument, and bound variables are de Bruijn indices.  Assertions never see
that shape directly.  They work on the flattened view, where a head and all
of its arguments are siblings of one node, so argument positions and depths
match the way a goal reads when printed.

An Occurrence addresses one node of the flattened tree of one subgoal by
its child-index path from the root.  Two occurrences are equal exactly when
their subgoal index and path are equal, even if they denote equal terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union


def _require_name(name: str) -> None:
    if not isinstance(name, str) or not name:
        raise ValueError("names must be non-empty strings")


@dataclass(frozen=True)
class Const:
    name: str

    def __post_init__(self) -> None:
        _require_name(self.name)


@dataclass(frozen=True)
class Free:
    name: str

    def __post_init__(self) -> None:
        _require_name(self.name)


@dataclass(frozen=True)
class Schematic:
    name: str

    def __post_init__(self) -> None:
        _require_name(self.name)


@dataclass(frozen=True)
class Bound:
    index: int

    def __post_init__(self) -> None:
        if not isinstance(self.index, int) or self.index < 0:
            raise ValueError("bound indices must be natural numbers")


@dataclass(frozen=True)
class Lambda:
    binder: str
    body: "Term"

    def __post_init__(self) -> None:
        _require_name(self.binder)


@dataclass(frozen=True)
class App:
    fun: "Term"
    arg: "Term"


Term = Union[Const, Free, Schematic, Bound, Lambda, App]


def is_well_formed(term: Term, binders: int = 0) -> bool:
    """True when every de Bruijn index is covered by an enclosing Lambda."""
    match term:
        case Bound(index):
            return index < binders
        case Lambda(_, body):
            return is_well_formed(body, binders + 1)
        case App(fun, arg):
            return is_well_formed(fun, binders) and is_well_formed(arg, binders)
        case _:
            return True


@dataclass(frozen=True)
class Atom:
    term: Term


@dataclass(frozen=True)
class AppNode:
    # Child 0 is the head; children 1..k are its arguments, in order.
    children: tuple["FlatNode", ...]

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError("an application node needs a head and at least one argument")


@dataclass(frozen=True)
class LambdaNode:
    binder: str
    body: "FlatNode"


FlatNode = Union[Atom, AppNode, LambdaNode]


def flatten(term: Term) -> FlatNode:
    """Collapse a curried application spine into one node per printed call."""
    match term:
        case App():
            head: Term = term
            args: list[Term] = []
            while isinstance(head, App):
                args.append(head.arg)
                head = head.fun
            args.reverse()
            return AppNode((flatten(head), *(flatten(a) for a in args)))
        case Lambda(binder, body):
            return LambdaNode(binder, flatten(body))
        case _:
            return Atom(term)


def unflatten(node: FlatNode) -> Term:
    """Rebuild the curried term a flattened node denotes."""
    match node:
        case Atom(term):
            return term
        case LambdaNode(binder, body):
            return Lambda(binder, unflatten(body))
        case AppNode(children):
            term = unflatten(children[0])
            for child in children[1:]:
                term = App(term, unflatten(child))
            return term
    raise TypeError(f"not a flattened node: {node!r}")


def node_children(node: FlatNode) -> tuple[FlatNode, ...]:
    match node:
        case AppNode(children):
            return children
        case LambdaNode(_, body):
            return (body,)
        case _:
            return ()


@dataclass(frozen=True)
class Goal:
    subgoals: tuple[Term, ...]

    def __post_init__(self) -> None:
        if not self.subgoals:
            raise ValueError("a goal has at least one subgoal")


@dataclass(frozen=True)
class Occurrence:
    subgoal: int
    path: tuple[int, ...]


def depth_of(occurrence: Occurrence) -> int:
    return len(occurrence.path)


def flatten_subgoal(goal: Goal, subgoal: int) -> FlatNode:
    if not 0 <= subgoal < len(goal.subgoals):
        raise IndexError(f"subgoal index {subgoal} out of range")
    return flatten(goal.subgoals[subgoal])


def enumerate_occurrences(goal: Goal, subgoal: int) -> list[tuple[Occurrence, Term]]:
    """Every node of the flattened subgoal, depth-first, head before arguments.

    Each entry pairs the occurrence with the (re-curried) term it denotes.
    The root comes first; the order is deterministic.
    """
    out: list[tuple[Occurrence, Term]] = []

    def walk(node: FlatNode, path: tuple[int, ...]) -> None:
        out.append((Occurrence(subgoal, path), unflatten(node)))
        for i, child in enumerate(node_children(node)):
            walk(child, path + (i,))

    walk(flatten_subgoal(goal, subgoal), ())
    return out


def enumerate_subterms(goal: Goal) -> list[Term]:
    """Distinct terms denoted by occurrences across all subgoals, in first-seen order."""
    seen: set[Term] = set()
    out: list[Term] = []
    for index in range(len(goal.subgoals)):
        for _, term in enumerate_occurrences(goal, index):
            if term not in seen:
                seen.add(term)
                out.append(term)
    return out


def node_at(goal: Goal, occurrence: Occurrence) -> FlatNode:
    node = flatten_subgoal(goal, occurrence.subgoal)
    for step in occurrence.path:
        children = node_children(node)
        if not 0 <= step < len(children):
            raise IndexError(f"no node at path {occurrence.path} in subgoal {occurrence.subgoal}")
        node = children[step]
    return node


def term_at(goal: Goal, occurrence: Occurrence) -> Term:
    return unflatten(node_at(goal, occurrence))


class ParamPattern(Enum):
    VAR = "var"
    CONSTRUCTOR = "constructor"


@dataclass(frozen=True)
class ClausePattern:
    params: tuple[ParamPattern, ...]


@dataclass(frozen=True)
class Definition:
    """What the proof context records about one defined constant.

    Clauses keep only the left-hand-side parameter shapes: whether each
    parameter of each defining clause is a plain variable or mentions a
    data constructor.  A constant known only by name has no clauses.
    """

    constant_name: str
    is_recursive: bool
    clauses: tuple[ClausePattern, ...] = ()

    def __post_init__(self) -> None:
        _require_name(self.constant_name)
        arities = {len(c.params) for c in self.clauses}
        if len(arities) > 1:
            raise ValueError(f"clauses of '{self.constant_name}' disagree on arity")

    @property
    def arity(self) -> int | None:
        return len(self.clauses[0].params) if self.clauses else None


@dataclass(frozen=True)
class RuleRecord:
    rule_name: str
    derived_from: str

    def __post_init__(self) -> None:
        _require_name(self.rule_name)
        _require_name(self.derived_from)


@dataclass(frozen=True)
class Context:
    definitions: dict[str, Definition]
    rules: dict[str, RuleRecord]

    def __post_init__(self) -> None:
        for rule in self.rules.values():
            if rule.derived_from not in self.definitions:
                raise ValueError(
                    f"rule '{rule.rule_name}' derives from unknown constant '{rule.derived_from}'"
                )


@dataclass(frozen=True)
class InductArgs:
    """The three argument fields handed to the induct method."""

    induction_terms: tuple[Term, ...] = ()
    arbitrary_terms: tuple[Term, ...] = ()
    rules: tuple[str, ...] = ()
