"""Claim scripts: a line-oriented DSL for stating and checking configurations.

Grammar (one statement per line, `#` starts a comment):

    field_decl := "field" ("Q" | "Fp" integer)          ; required, first
    let_decl   := "let" name "=" point_lit
    pair_decl  := "pair" name "=" "(" point "," point ")"
    conic_decl := "conic" name "=" ("circle" | "[" scalar*6 "]")
    claim      := "assert" ("involution" pair pair pair
                           | "harmonic" pair pair
                           | "arbre" point ":" pair pair pair
                           | "melange" pair pair
                           | "pappus" point point point point point)
    query      := ("souche" | "classify" | "fixedpoints") pair pair pair
                | "sixth" pair pair point

where point is `inf`, a scalar literal (`n` or `n/d`, evaluated in the
declared field), or a let-bound name.  Scalar literals are evaluated at parse
time, so printing a parsed script and reparsing it yields the same AST.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .errors import (
    DuplicateName,
    FieldRedeclared,
    ScriptSyntaxError,
    UnboundName,
)
from .fields import Field, PrimeField, Q, Scalar
from .plane import Conic

_KEYWORDS = {
    "field", "Q", "Fp", "let", "pair", "conic", "circle", "assert",
    "involution", "harmonic", "arbre", "melange", "pappus",
    "souche", "classify", "fixedpoints", "sixth", "inf",
}

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>[+-]?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<punct>[()=,:/\[\]])"
)


# -- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class ScalarLit:
    value: Scalar

    def text(self, fld: Field) -> str:
        return fld.format(self.value)


@dataclass(frozen=True)
class InfLit:
    def text(self, fld: Field) -> str:
        return "inf"


@dataclass(frozen=True)
class NameRef:
    name: str

    def text(self, fld: Field) -> str:
        return self.name


@dataclass(frozen=True)
class LetDecl:
    name: str
    value: object  # ScalarLit | InfLit
    line: int = dc_field(default=0, compare=False)


@dataclass(frozen=True)
class PairDecl:
    name: str
    a: object
    b: object
    line: int = dc_field(default=0, compare=False)


@dataclass(frozen=True)
class ConicDecl:
    name: str
    circle: bool
    coefficients: tuple | None
    line: int = dc_field(default=0, compare=False)


@dataclass(frozen=True)
class AssertClaim:
    kind: str  # involution | harmonic | arbre | melange | pappus
    pairs: tuple[str, ...]
    points: tuple = ()
    line: int = dc_field(default=0, compare=False)


@dataclass(frozen=True)
class QueryClaim:
    kind: str  # souche | classify | fixedpoints | sixth
    pairs: tuple[str, ...]
    points: tuple = ()
    line: int = dc_field(default=0, compare=False)


@dataclass(frozen=True)
class ClaimScript:
    field: Field
    items: tuple

    def claims(self):
        return [it for it in self.items if isinstance(it, (AssertClaim, QueryClaim))]


# -- tokenizer ----------------------------------------------------------------

class _Line:
    def __init__(self, number: int, raw: str):
        self.number = number
        self.tokens: list[tuple[str, str, int]] = []  # (kind, text, column)
        pos = 0
        body = raw.split("#", 1)[0]
        while pos < len(body):
            m = _TOKEN_RE.match(body, pos)
            if not m:
                raise ScriptSyntaxError(
                    f"unexpected character {body[pos]!r}", number, pos + 1
                )
            pos = m.end()
            if m.lastgroup != "ws":
                self.tokens.append((m.lastgroup, m.group(), m.start() + 1))
        self.cursor = 0

    def peek(self):
        return self.tokens[self.cursor] if self.cursor < len(self.tokens) else None

    def next(self, expected: str):
        tok = self.peek()
        if tok is None:
            raise ScriptSyntaxError(
                f"expected {expected} at end of line", self.number,
                self.tokens[-1][2] + len(self.tokens[-1][1]) if self.tokens else 1,
            )
        self.cursor += 1
        return tok

    def expect_punct(self, ch: str):
        kind, text, col = self.next(repr(ch))
        if kind != "punct" or text != ch:
            raise ScriptSyntaxError(f"expected {ch!r}, found {text!r}", self.number, col)

    def expect_word(self, word: str):
        kind, text, col = self.next(repr(word))
        if kind != "name" or text != word:
            raise ScriptSyntaxError(f"expected {word!r}, found {text!r}", self.number, col)

    def expect_name(self) -> tuple[str, int]:
        kind, text, col = self.next("a name")
        if kind != "name":
            raise ScriptSyntaxError(f"expected a name, found {text!r}", self.number, col)
        if text in _KEYWORDS:
            raise ScriptSyntaxError(f"{text!r} is a reserved word", self.number, col)
        return text, col

    def expect_int(self) -> int:
        kind, text, col = self.next("an integer")
        if kind != "int":
            raise ScriptSyntaxError(f"expected an integer, found {text!r}", self.number, col)
        return int(text)

    def done(self):
        tok = self.peek()
        if tok is not None:
            raise ScriptSyntaxError(f"trailing {tok[1]!r}", self.number, tok[2])


# -- parser -------------------------------------------------------------------

class _Parser:
    def __init__(self, fld: Field):
        self.field = fld
        self.names: dict[str, str] = {}  # name -> "let" | "pair" | "conic"

    def scalar_lit(self, line: _Line) -> ScalarLit:
        n = line.expect_int()
        tok = line.peek()
        if tok is not None and tok[0] == "punct" and tok[1] == "/":
            line.next("'/'")
            kind, text, col = line.next("an integer")
            if kind != "int" or text.startswith(("+", "-")):
                raise ScriptSyntaxError(
                    f"expected a positive denominator, found {text!r}", line.number, col
                )
            d = int(text)
            if d == 0:
                raise ScriptSyntaxError("zero denominator", line.number, col)
            return ScalarLit(self.field.scalar(n) / self.field.scalar(d))
        return ScalarLit(self.field.scalar(n))

    def point_expr(self, line: _Line):
        tok = line.peek()
        if tok is None:
            raise ScriptSyntaxError("expected a point at end of line", line.number, 1)
        kind, text, col = tok
        if kind == "int":
            return self.scalar_lit(line)
        if kind == "name" and text == "inf":
            line.next("'inf'")
            return InfLit()
        if kind == "name":
            name, col = line.expect_name()
            if self.names.get(name) != "let":
                raise UnboundName(f"{name!r} is not a bound scalar", line.number, col)
            return NameRef(name)
        raise ScriptSyntaxError(f"expected a point, found {text!r}", line.number, col)

    def pair_name(self, line: _Line) -> str:
        name, col = line.expect_name()
        if name not in self.names:
            raise UnboundName(f"{name!r} is not bound", line.number, col)
        if self.names[name] != "pair":
            raise ScriptSyntaxError(f"{name!r} is not a pair", line.number, col)
        return name

    def bind(self, name: str, kind: str, line: _Line, col: int):
        if name in self.names:
            raise DuplicateName(f"{name!r} is already bound", line.number, col)
        self.names[name] = kind

    def statement(self, line: _Line):
        kind, text, col = line.next("a statement")
        if kind != "name":
            raise ScriptSyntaxError(f"expected a statement, found {text!r}", line.number, col)
        if text == "field":
            raise FieldRedeclared("field is declared once, first", line.number, col)
        if text == "let":
            name, ncol = line.expect_name()
            line.expect_punct("=")
            value = self.point_expr(line)
            if isinstance(value, NameRef):
                raise ScriptSyntaxError("let binds a literal", line.number, ncol)
            line.done()
            self.bind(name, "let", line, ncol)
            return LetDecl(name, value, line.number)
        if text == "pair":
            name, ncol = line.expect_name()
            line.expect_punct("=")
            line.expect_punct("(")
            a = self.point_expr(line)
            line.expect_punct(",")
            b = self.point_expr(line)
            line.expect_punct(")")
            line.done()
            self.bind(name, "pair", line, ncol)
            return PairDecl(name, a, b, line.number)
        if text == "conic":
            name, ncol = line.expect_name()
            line.expect_punct("=")
            tok = line.peek()
            if tok is not None and tok[0] == "name" and tok[1] == "circle":
                line.next("'circle'")
                line.done()
                self.bind(name, "conic", line, ncol)
                return ConicDecl(name, True, None, line.number)
            line.expect_punct("[")
            coeffs = []
            for _ in range(6):
                coeffs.append(self.scalar_lit(line).value)
            line.expect_punct("]")
            line.done()
            self.bind(name, "conic", line, ncol)
            return ConicDecl(name, False, tuple(coeffs), line.number)
        if text == "assert":
            return self.assertion(line)
        if text in ("souche", "classify", "fixedpoints"):
            names = tuple(self.pair_name(line) for _ in range(3))
            line.done()
            return QueryClaim(text, names, (), line.number)
        if text == "sixth":
            names = tuple(self.pair_name(line) for _ in range(2))
            x = self.point_expr(line)
            line.done()
            return QueryClaim("sixth", names, (x,), line.number)
        raise ScriptSyntaxError(f"unknown statement {text!r}", line.number, col)

    def assertion(self, line: _Line):
        kind, text, col = line.next("an assertion kind")
        if kind != "name":
            raise ScriptSyntaxError(f"expected an assertion kind, found {text!r}", line.number, col)
        if text == "involution":
            names = tuple(self.pair_name(line) for _ in range(3))
            line.done()
            return AssertClaim("involution", names, (), line.number)
        if text == "harmonic":
            names = tuple(self.pair_name(line) for _ in range(2))
            line.done()
            return AssertClaim("harmonic", names, (), line.number)
        if text == "arbre":
            s = self.point_expr(line)
            line.expect_punct(":")
            names = tuple(self.pair_name(line) for _ in range(3))
            line.done()
            return AssertClaim("arbre", names, (s,), line.number)
        if text == "melange":
            names = tuple(self.pair_name(line) for _ in range(2))
            line.done()
            return AssertClaim("melange", names, (), line.number)
        if text == "pappus":
            pts = tuple(self.point_expr(line) for _ in range(5))
            line.done()
            return AssertClaim("pappus", (), pts, line.number)
        raise ScriptSyntaxError(f"unknown assertion {text!r}", line.number, col)


def parse_script(text: bytes | str) -> ClaimScript:
    """Parse a claim script; raises positioned ScriptError subclasses."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ScriptSyntaxError(f"not UTF-8: {exc}", 1, 1) from exc
    lines = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = _Line(i, raw)
        if line.tokens:
            lines.append(line)
    if not lines:
        raise ScriptSyntaxError("empty script (a field declaration is required)", 1, 1)

    first = lines[0]
    kind, word, col = first.next("'field'")
    if kind != "name" or word != "field":
        raise ScriptSyntaxError("the first statement must declare the field", first.number, col)
    kind, name, col = first.next("'Q' or 'Fp'")
    if name == "Q":
        fld: Field = Q
        first.done()
    elif name == "Fp":
        fld = PrimeField(first.expect_int())
        first.done()
    else:
        raise ScriptSyntaxError(f"expected Q or Fp, found {name!r}", first.number, col)

    parser = _Parser(fld)
    items = [parser.statement(line) for line in lines[1:]]
    return ClaimScript(fld, tuple(items))


# -- pretty printer -----------------------------------------------------------

def _point_text(expr, fld: Field) -> str:
    return expr.text(fld)


def statement_text(item, fld: Field) -> str:
    if isinstance(item, LetDecl):
        return f"let {item.name} = {_point_text(item.value, fld)}"
    if isinstance(item, PairDecl):
        return f"pair {item.name} = ({_point_text(item.a, fld)}, {_point_text(item.b, fld)})"
    if isinstance(item, ConicDecl):
        if item.circle:
            return f"conic {item.name} = circle"
        coeffs = " ".join(fld.format(c) for c in item.coefficients)
        return f"conic {item.name} = [{coeffs}]"
    if isinstance(item, AssertClaim):
        if item.kind == "arbre":
            return (
                f"assert arbre {_point_text(item.points[0], fld)} : "
                + " ".join(item.pairs)
            )
        if item.kind == "pappus":
            return "assert pappus " + " ".join(_point_text(p, fld) for p in item.points)
        return f"assert {item.kind} " + " ".join(item.pairs)
    if isinstance(item, QueryClaim):
        if item.kind == "sixth":
            return f"sixth {item.pairs[0]} {item.pairs[1]} {_point_text(item.points[0], fld)}"
        return f"{item.kind} " + " ".join(item.pairs)
    raise TypeError(f"not a statement: {item!r}")


def print_script(script: ClaimScript) -> str:
    """Canonical text of a parsed script (parse . print . parse = parse)."""
    head = "field Q" if script.field == Q else f"field Fp {script.field.p}"
    lines = [head]
    lines.extend(statement_text(item, script.field) for item in script.items)
    return "\n".join(lines) + "\n"
