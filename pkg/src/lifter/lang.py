"""The assertion language: concrete syntax, AST, sorts, and rendering.

Grammar (whitespace-insensitive; "(*" ... "*)" comments nest):

    assertion := imp
    imp    := or ( '->' imp )?                      right-associative
    or     := and ( '\\/' and )*
    and    := unary ( '/\\' unary )*
    unary  := 'Not' unary | 'True' | 'False' | quant | atomic | '(' assertion ')'
    quant  := ('EX' | 'ALL') IDENT ':' dom '.' assertion
    dom    := 'number' | 'rule' | 'term' | 'term_occurrence'
            | 'term' 'IN' ('induction_term' | 'arbitrary_term')
            | 'induction_term' | 'arbitrary_term'          sugar for the line above
            | 'term_occurrence' 'IN' IDENT ':' 'term'
    atomic := IDENT INFIX IDENT | PREFIX IDENT
            | CALL '(' arg ( ',' arg )* ')'        arg := IDENT | pattern literal

A quantifier body extends as far right as possible; parentheses cut it off.
Variables range over one of four sorts fixed by the quantifier's domain:
numbers, rule names, terms, or term occurrences.  `sort_check` rejects any
use of a variable at the wrong sort and any unbound variable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .errors import LifterError


class ParseError(LifterError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class SortError(LifterError):
    def __init__(self, message: str, pos: Optional[tuple[int, int]] = None):
        if pos is not None:
            message = f"{pos[0]}:{pos[1]}: {message}"
        super().__init__(message)
        self.pos = pos


class Sort(Enum):
    NUMBER = "number"
    RULE = "rule"
    TERM = "term"
    OCCURRENCE = "term_occurrence"


class Pattern(Enum):
    ALL_ONLY_VAR = "all_only_var"
    ALL_CONSTRUCTOR = "all_constructor"
    MIXED = "mixed"


class Modifier(Enum):
    INDUCTION = "induction_term"
    ARBITRARY = "arbitrary_term"


class QuantKind(Enum):
    EXISTS = "EX"
    FORALL = "ALL"


@dataclass(frozen=True)
class AllNumbers:
    pass


@dataclass(frozen=True)
class AllRules:
    pass


@dataclass(frozen=True)
class AllTerms:
    pass


@dataclass(frozen=True)
class AllOccs:
    pass


@dataclass(frozen=True)
class TermsIn:
    modifier: Modifier


@dataclass(frozen=True)
class OccsOf:
    term_var: str


DomainSpec = Union[AllNumbers, AllRules, AllTerms, AllOccs, TermsIn, OccsOf]


class AtomicName(Enum):
    IS_RULE_OF = "is_rule_of"
    TERM_OCCURRENCE_IS_OF_TERM = "term_occurrence_is_of_term"
    ARE_SAME_TERM = "are_same_term"
    IS_IN_TERM_OCCURRENCE = "is_in_term_occurrence"
    IS_ATOMIC = "is_atomic"
    IS_CONSTANT = "is_constant"
    IS_RECURSIVE_CONSTANT = "is_recursive_constant"
    IS_VARIABLE = "is_variable"
    IS_FREE_VARIABLE = "is_free_variable"
    IS_BOUND_VARIABLE = "is_bound_variable"
    IS_LAMBDA = "is_lambda"
    IS_APPLICATION = "is_application"
    IS_AN_ARGUMENT_OF = "is_an_argument_of"
    IS_NTH_ARGUMENT_OF = "is_nth_argument_of"
    IS_NTH_INDUCTION_TERM = "is_nth_induction_term"
    IS_NTH_ARBITRARY_TERM = "is_nth_arbitrary_term"
    PATTERN_IS = "pattern_is"
    IS_AT_DEEPEST = "is_at_deepest"


# Argument sorts per atomic; the Pattern class itself marks the one slot
# that takes a pattern literal instead of a variable.
SIGNATURES: dict[AtomicName, tuple] = {
    AtomicName.IS_RULE_OF: (Sort.RULE, Sort.OCCURRENCE),
    AtomicName.TERM_OCCURRENCE_IS_OF_TERM: (Sort.OCCURRENCE, Sort.TERM),
    AtomicName.ARE_SAME_TERM: (Sort.TERM, Sort.TERM),
    AtomicName.IS_IN_TERM_OCCURRENCE: (Sort.OCCURRENCE, Sort.OCCURRENCE),
    AtomicName.IS_ATOMIC: (Sort.OCCURRENCE,),
    AtomicName.IS_CONSTANT: (Sort.OCCURRENCE,),
    AtomicName.IS_RECURSIVE_CONSTANT: (Sort.OCCURRENCE,),
    AtomicName.IS_VARIABLE: (Sort.OCCURRENCE,),
    AtomicName.IS_FREE_VARIABLE: (Sort.OCCURRENCE,),
    AtomicName.IS_BOUND_VARIABLE: (Sort.OCCURRENCE,),
    AtomicName.IS_LAMBDA: (Sort.OCCURRENCE,),
    AtomicName.IS_APPLICATION: (Sort.OCCURRENCE,),
    AtomicName.IS_AN_ARGUMENT_OF: (Sort.OCCURRENCE, Sort.OCCURRENCE),
    AtomicName.IS_NTH_ARGUMENT_OF: (Sort.OCCURRENCE, Sort.NUMBER, Sort.OCCURRENCE),
    AtomicName.IS_NTH_INDUCTION_TERM: (Sort.TERM, Sort.NUMBER),
    AtomicName.IS_NTH_ARBITRARY_TERM: (Sort.TERM, Sort.NUMBER),
    AtomicName.PATTERN_IS: (Sort.NUMBER, Sort.OCCURRENCE, Pattern),
    AtomicName.IS_AT_DEEPEST: (Sort.OCCURRENCE,),
}

PREFIX_NAMES = frozenset(
    {
        AtomicName.IS_ATOMIC,
        AtomicName.IS_CONSTANT,
        AtomicName.IS_RECURSIVE_CONSTANT,
        AtomicName.IS_VARIABLE,
        AtomicName.IS_FREE_VARIABLE,
        AtomicName.IS_BOUND_VARIABLE,
        AtomicName.IS_LAMBDA,
        AtomicName.IS_APPLICATION,
        AtomicName.IS_AT_DEEPEST,
    }
)
INFIX_NAMES = frozenset(
    {
        AtomicName.IS_RULE_OF,
        AtomicName.TERM_OCCURRENCE_IS_OF_TERM,
        AtomicName.IS_IN_TERM_OCCURRENCE,
        AtomicName.IS_AN_ARGUMENT_OF,
        AtomicName.IS_NTH_INDUCTION_TERM,
        AtomicName.IS_NTH_ARBITRARY_TERM,
    }
)
CALL_NAMES = frozenset(
    {AtomicName.ARE_SAME_TERM, AtomicName.IS_NTH_ARGUMENT_OF, AtomicName.PATTERN_IS}
)

Position = tuple[int, int]


@dataclass(frozen=True)
class BoolLit:
    value: bool


@dataclass(frozen=True)
class Not:
    body: "Assertion"


@dataclass(frozen=True)
class And:
    lhs: "Assertion"
    rhs: "Assertion"


@dataclass(frozen=True)
class Or:
    lhs: "Assertion"
    rhs: "Assertion"


@dataclass(frozen=True)
class Imp:
    lhs: "Assertion"
    rhs: "Assertion"


@dataclass(frozen=True)
class Quant:
    kind: QuantKind
    var: str
    domain: DomainSpec
    body: "Assertion"
    pos: Optional[Position] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Atomic:
    name: AtomicName
    args: tuple  # variable names (str) and, for pattern_is, one Pattern
    pos: Optional[Position] = field(default=None, compare=False, repr=False)


Assertion = Union[BoolLit, Not, And, Or, Imp, Quant, Atomic]


_ATOMIC_BY_TEXT = {name.value: name for name in AtomicName}
_PATTERN_BY_TEXT = {p.value: p for p in Pattern}
_KEYWORDS = frozenset(
    {"EX", "ALL", "IN", "Not", "True", "False"}
    | {s.value for s in Sort}
    | {m.value for m in Modifier}
    | set(_PATTERN_BY_TEXT)
)
RESERVED_WORDS = _KEYWORDS | set(_ATOMIC_BY_TEXT)


@dataclass(frozen=True)
class Token:
    kind: str  # one of ( ) : . , -> /\ \/ word eof
    text: str
    line: int
    col: int


def _lex(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    line, col = 1, 1

    def step(n: int = 1) -> None:
        nonlocal i, line, col
        for _ in range(n):
            if text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < len(text):
        ch = text[i]
        if ch.isspace():
            step()
            continue
        if text.startswith("(*", i):
            start_line, start_col = line, col
            depth = 0
            while i < len(text):
                if text.startswith("(*", i):
                    depth += 1
                    step(2)
                elif text.startswith("*)", i):
                    depth -= 1
                    step(2)
                    if depth == 0:
                        break
                else:
                    step()
            if depth != 0:
                raise ParseError("unterminated comment", start_line, start_col)
            continue
        if ch in "():.,":
            tokens.append(Token(ch, ch, line, col))
            step()
            continue
        if text.startswith("->", i):
            tokens.append(Token("->", "->", line, col))
            step(2)
            continue
        if text.startswith("/\\", i):
            tokens.append(Token("/\\", "/\\", line, col))
            step(2)
            continue
        if text.startswith("\\/", i):
            tokens.append(Token("\\/", "\\/", line, col))
            step(2)
            continue
        if ch.isalpha() or ch == "_":
            start_line, start_col = line, col
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            step(j - i)
            tokens.append(Token("word", word, start_line, start_col))
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.index = 0

    @property
    def cur(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.cur
        if tok.kind != "eof":
            self.index += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> Token:
        if self.cur.kind != kind:
            raise self.error(f"expected {what or kind!r}")
        return self.advance()

    def at_word(self, text: str) -> bool:
        return self.cur.kind == "word" and self.cur.text == text

    def error(self, message: str) -> ParseError:
        tok = self.cur
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"{message}, found {found}", tok.line, tok.col)

    def ident(self) -> str:
        tok = self.cur
        if tok.kind != "word":
            raise self.error("expected a variable name")
        if tok.text in RESERVED_WORDS:
            raise self.error(f"reserved word '{tok.text}' cannot name a variable")
        self.advance()
        return tok.text

    def imp(self) -> Assertion:
        lhs = self.or_()
        if self.cur.kind == "->":
            self.advance()
            return Imp(lhs, self.imp())
        return lhs

    def or_(self) -> Assertion:
        node = self.and_()
        while self.cur.kind == "\\/":
            self.advance()
            node = Or(node, self.and_())
        return node

    def and_(self) -> Assertion:
        node = self.unary()
        while self.cur.kind == "/\\":
            self.advance()
            node = And(node, self.unary())
        return node

    def unary(self) -> Assertion:
        tok = self.cur
        if tok.kind == "(":
            self.advance()
            node = self.imp()
            self.expect(")", "')'")
            return node
        if tok.kind != "word":
            raise self.error("expected an assertion")
        if tok.text == "Not":
            self.advance()
            return Not(self.unary())
        if tok.text == "True":
            self.advance()
            return BoolLit(True)
        if tok.text == "False":
            self.advance()
            return BoolLit(False)
        if tok.text in ("EX", "ALL"):
            return self.quant()
        name = _ATOMIC_BY_TEXT.get(tok.text)
        if name in PREFIX_NAMES:
            self.advance()
            return Atomic(name, (self.ident(),), (tok.line, tok.col))
        if name in CALL_NAMES:
            self.advance()
            return self.call_atomic(name, tok)
        if name is not None:
            raise self.error(f"'{tok.text}' is written infix between two variables")
        if tok.text in RESERVED_WORDS:
            raise self.error(f"unexpected '{tok.text}'")
        return self.infix_atomic()

    def quant(self) -> Assertion:
        tok = self.advance()
        kind = QuantKind.EXISTS if tok.text == "EX" else QuantKind.FORALL
        var = self.ident()
        self.expect(":", "':'")
        domain = self.domain()
        self.expect(".", "'.'")
        body = self.imp()
        return Quant(kind, var, domain, body, (tok.line, tok.col))

    def domain(self) -> DomainSpec:
        tok = self.cur
        if tok.kind != "word":
            raise self.error("expected a quantifier domain")
        if tok.text == "number":
            self.advance()
            return AllNumbers()
        if tok.text == "rule":
            self.advance()
            return AllRules()
        if tok.text in ("induction_term", "arbitrary_term"):
            self.advance()
            return TermsIn(Modifier(tok.text))
        if tok.text == "term":
            self.advance()
            if not self.at_word("IN"):
                return AllTerms()
            self.advance()
            mod = self.cur
            if mod.kind != "word" or mod.text not in ("induction_term", "arbitrary_term"):
                raise self.error("expected induction_term or arbitrary_term")
            self.advance()
            return TermsIn(Modifier(mod.text))
        if tok.text == "term_occurrence":
            self.advance()
            if not self.at_word("IN"):
                return AllOccs()
            self.advance()
            term_var = self.ident()
            self.expect(":", "':'")
            if not self.at_word("term"):
                raise self.error("expected 'term'")
            self.advance()
            return OccsOf(term_var)
        raise self.error("expected a quantifier domain")

    def call_atomic(self, name: AtomicName, tok: Token) -> Assertion:
        self.expect("(", "'('")
        args: list = [self.call_arg()]
        while self.cur.kind == ",":
            self.advance()
            args.append(self.call_arg())
        self.expect(")", "')'")
        want = len(SIGNATURES[name])
        if len(args) != want:
            raise ParseError(
                f"{name.value} takes {want} arguments, got {len(args)}", tok.line, tok.col
            )
        return Atomic(name, tuple(args), (tok.line, tok.col))

    def call_arg(self):
        tok = self.cur
        if tok.kind == "word" and tok.text in _PATTERN_BY_TEXT:
            self.advance()
            return _PATTERN_BY_TEXT[tok.text]
        return self.ident()

    def infix_atomic(self) -> Assertion:
        first = self.ident()
        tok = self.cur
        name = _ATOMIC_BY_TEXT.get(tok.text) if tok.kind == "word" else None
        if name not in INFIX_NAMES:
            raise self.error(f"expected an infix atomic after '{first}'")
        self.advance()
        second = self.ident()
        return Atomic(name, (first, second), (tok.line, tok.col))


def parse_assertion(text: str) -> Assertion:
    parser = _Parser(_lex(text))
    node = parser.imp()
    if parser.cur.kind != "eof":
        raise parser.error("trailing input after assertion")
    return node


def domain_sort(domain: DomainSpec) -> Sort:
    match domain:
        case AllNumbers():
            return Sort.NUMBER
        case AllRules():
            return Sort.RULE
        case AllTerms() | TermsIn():
            return Sort.TERM
        case AllOccs() | OccsOf():
            return Sort.OCCURRENCE
    raise TypeError(f"not a domain: {domain!r}")


def sort_check(assertion: Assertion) -> Assertion:
    """Verify every variable is bound and used at its binding sort."""
    _check(assertion, {})
    return assertion


def _check(node: Assertion, env: dict[str, Sort]) -> None:
    match node:
        case BoolLit():
            pass
        case Not(body):
            _check(body, env)
        case And(lhs, rhs) | Or(lhs, rhs) | Imp(lhs, rhs):
            _check(lhs, env)
            _check(rhs, env)
        case Quant(_, var, domain, body):
            if isinstance(domain, OccsOf):
                bound = env.get(domain.term_var)
                if bound is None:
                    raise SortError(f"unbound variable '{domain.term_var}'", node.pos)
                if bound is not Sort.TERM:
                    raise SortError(
                        f"'{domain.term_var}' bound at {bound.value}, used at term position",
                        node.pos,
                    )
            _check(body, {**env, var: domain_sort(domain)})
        case Atomic(name, args):
            for slot, arg in zip(SIGNATURES[name], args):
                if slot is Pattern:
                    if not isinstance(arg, Pattern):
                        raise SortError(
                            f"{name.value} needs a pattern literal here", node.pos
                        )
                    continue
                if isinstance(arg, Pattern):
                    raise SortError(
                        f"pattern literal used at {slot.value} position of {name.value}",
                        node.pos,
                    )
                bound = env.get(arg)
                if bound is None:
                    raise SortError(f"unbound variable '{arg}'", node.pos)
                if bound is not slot:
                    raise SortError(
                        f"'{arg}' bound at {bound.value}, used at {slot.value} position",
                        node.pos,
                    )
        case _:
            raise TypeError(f"not an assertion: {node!r}")


def render_domain(domain: DomainSpec) -> str:
    match domain:
        case AllNumbers():
            return "number"
        case AllRules():
            return "rule"
        case AllTerms():
            return "term"
        case AllOccs():
            return "term_occurrence"
        case TermsIn(modifier):
            return f"term IN {modifier.value}"
        case OccsOf(term_var):
            return f"term_occurrence IN {term_var} : term"
    raise TypeError(f"not a domain: {domain!r}")


def render_assertion(assertion: Assertion) -> str:
    """Canonical one-line text; re-parsing yields an equal AST."""
    return _render(assertion, 1, True)


def _render(node: Assertion, min_level: int, tail: bool) -> str:
    # Levels: 1 imp, 2 or, 3 and, 4 unary.  `tail` is true when nothing
    # follows to the right, so a quantifier body may run to the end bare.
    match node:
        case BoolLit(value):
            return "True" if value else "False"
        case Atomic():
            return _render_atomic(node)
        case Not(body):
            return f"Not ( {_render(body, 1, True)} )"
        case Quant(kind, var, domain, body):
            text = f"{kind.value} {var} : {render_domain(domain)} . {_render(body, 1, True)}"
            return text if tail else f"( {text} )"
        case And(lhs, rhs):
            wrap = min_level > 3
            text = f"{_render(lhs, 3, False)} /\\ {_render(rhs, 4, tail or wrap)}"
            return f"( {text} )" if wrap else text
        case Or(lhs, rhs):
            wrap = min_level > 2
            text = f"{_render(lhs, 2, False)} \\/ {_render(rhs, 3, tail or wrap)}"
            return f"( {text} )" if wrap else text
        case Imp(lhs, rhs):
            wrap = min_level > 1
            text = f"{_render(lhs, 2, False)} -> {_render(rhs, 1, tail or wrap)}"
            return f"( {text} )" if wrap else text
    raise TypeError(f"not an assertion: {node!r}")


def _render_atomic(node: Atomic) -> str:
    def arg_text(arg) -> str:
        return arg.value if isinstance(arg, Pattern) else arg

    if node.name in PREFIX_NAMES:
        return f"{node.name.value} {node.args[0]}"
    if node.name in INFIX_NAMES:
        return f"{node.args[0]} {node.name.value} {node.args[1]}"
    inner = " , ".join(arg_text(a) for a in node.args)
    return f"{node.name.value} ( {inner} )"
