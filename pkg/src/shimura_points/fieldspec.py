"""Parser and printer for the field-specification language.

    spec   := "Q" | quad | cycsub | comp
    quad   := "Q(" sq { "," sq } ")"        sq := "sqrt(" int ")"
    cycsub := "cycsub(" int ";" int { "," int } ")"
    comp   := "comp(" spec "," spec ")"

Whitespace is ignored. ``Q(sqrt(a),sqrt(b),...)`` is the iterated compositum
of the quadratic fields.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce

from .abfield import (
    RATIONALS,
    AbelianField,
    compositum,
    cyclotomic_subfield,
    quadratic_field,
)


class FieldSpecSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class FieldSpecSemanticError(ValueError):
    pass


@dataclass(frozen=True)
class Rationals:
    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class Quad:
    radicands: tuple[int, ...]

    def __str__(self) -> str:
        return "Q(" + ",".join(f"sqrt({d})" for d in self.radicands) + ")"


@dataclass(frozen=True)
class CycSub:
    modulus: int
    gens: tuple[int, ...]

    def __str__(self) -> str:
        return f"cycsub({self.modulus};" + ",".join(map(str, self.gens)) + ")"


@dataclass(frozen=True)
class Comp:
    left: "FieldSpec"
    right: "FieldSpec"

    def __str__(self) -> str:
        return f"comp({self.left},{self.right})"


FieldSpec = Rationals | Quad | CycSub | Comp

_INT = re.compile(r"-?\d+")


class _Parser:
    def __init__(self, text: str):
        self.original = text
        # keep a map from compacted positions back to the original text
        self.chars = [(i, c) for i, c in enumerate(text) if not c.isspace()]
        self.src = "".join(c for _, c in self.chars)
        self.pos = 0

    def error(self, message: str) -> FieldSpecSyntaxError:
        if self.pos < len(self.chars):
            where = self.chars[self.pos][0]
        else:
            where = len(self.original)
        return FieldSpecSyntaxError(message, self.original, where)

    def peek(self, token: str) -> bool:
        return self.src.startswith(token, self.pos)

    def expect(self, token: str) -> None:
        if not self.peek(token):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def integer(self) -> int:
        m = _INT.match(self.src, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def spec(self) -> FieldSpec:
        if self.peek("comp("):
            self.expect("comp(")
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            return Comp(left, right)
        if self.peek("cycsub("):
            self.expect("cycsub(")
            m = self.integer()
            self.expect(";")
            gens = [self.integer()]
            while self.peek(","):
                self.expect(",")
                gens.append(self.integer())
            self.expect(")")
            return CycSub(m, tuple(gens))
        if self.peek("Q("):
            self.expect("Q(")
            ds = [self.sqrt()]
            while self.peek(","):
                self.expect(",")
                ds.append(self.sqrt())
            self.expect(")")
            return Quad(tuple(ds))
        if self.peek("Q"):
            self.expect("Q")
            return Rationals()
        raise self.error("expected 'Q', 'Q(', 'cycsub(' or 'comp('")

    def sqrt(self) -> int:
        self.expect("sqrt(")
        d = self.integer()
        self.expect(")")
        return d


def parse(text: str) -> FieldSpec:
    parser = _Parser(text)
    ast = parser.spec()
    if parser.pos != len(parser.src):
        raise parser.error("unexpected trailing input")
    return ast


def to_field(ast: FieldSpec) -> AbelianField:
    try:
        if isinstance(ast, Rationals):
            return RATIONALS
        if isinstance(ast, Quad):
            return reduce(compositum, (quadratic_field(d) for d in ast.radicands))
        if isinstance(ast, CycSub):
            if ast.modulus < 1:
                raise ValueError(f"modulus must be positive, got {ast.modulus}")
            return cyclotomic_subfield(ast.modulus, ast.gens)
        return compositum(to_field(ast.left), to_field(ast.right))
    except FieldSpecSemanticError:
        raise
    except ValueError as exc:
        raise FieldSpecSemanticError(f"{ast}: {exc}") from exc


def parse_field_spec(text: str) -> AbelianField:
    return to_field(parse(text))


def canonical(text: str) -> str:
    return str(parse(text))
