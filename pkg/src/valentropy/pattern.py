"""Parser for bracketed parametric vectors such as ``[b,-b-c-d,c,d]``.

Grammar::

    pattern := '[' expr (',' expr)* ']'
    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := coeff | param | coeff '*' param
    coeff   := rational literal (``3``, ``1/2``, ``0.25``)
    param   := one letter a-z

Every entry must be homogeneous linear in the parameters; a nonzero
constant term would not describe a subspace.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import PatternError, PatternSyntaxError

__all__ = ["LinearExpr", "PatternVector", "parse_pattern"]

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?(?:/\d+)?)|(?P<param>[a-z])|(?P<op>[\[\],+\-*]))"
)


@dataclass(frozen=True)
class LinearExpr:
    """A homogeneous linear form: parameter -> rational coefficient (zeros dropped)."""

    coeffs: tuple[tuple[str, Fraction], ...]

    @classmethod
    def from_dict(cls, d: dict[str, Fraction]) -> "LinearExpr":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def coefficient(self, param: str) -> Fraction:
        return dict(self.coeffs).get(param, Fraction(0))

    @property
    def params(self) -> frozenset[str]:
        return frozenset(k for k, _ in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for k, v in self.coeffs:
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            term = k if mag == 1 else f"{mag}*{k}"
            out.append((sign, term))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        return s + "".join(f"{sg}{t}" for sg, t in out[1:])


@dataclass(frozen=True)
class PatternVector:
    entries: tuple[LinearExpr, ...]

    @property
    def params(self) -> tuple[str, ...]:
        """Parameters that occur with a nonzero coefficient, sorted."""
        seen: set[str] = set()
        for e in self.entries:
            seen |= e.params
        return tuple(sorted(seen))

    def __len__(self) -> int:
        return len(self.entries)

    def coefficient_columns(self) -> list[tuple[Fraction, ...]]:
        """One column per parameter: the vector that parameter multiplies."""
        return [tuple(e.coefficient(p) for e in self.entries) for p in self.params]

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.entries) + "]"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise PatternSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind != "op":
            found = "end of input" if kind == "end" else repr(val)
            raise PatternSyntaxError(f"expected {value!r}, found {found}", pos, self.text)

    def parse(self) -> list[tuple[dict[str, Fraction], Fraction, int]]:
        self.expect("[")
        entries = [self.expr()]
        while self.peek()[1] == ",":
            self.take()
            entries.append(self.expr())
        self.expect("]")
        kind, val, pos = self.peek()
        if kind != "end":
            raise PatternSyntaxError(f"trailing input {val!r}", pos, self.text)
        return entries

    def expr(self):
        start = self.peek()[2]
        coeffs: dict[str, Fraction] = {}
        const = Fraction(0)
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        while True:
            param, value = self.term()
            if param is None:
                const += sign * value
            else:
                coeffs[param] = coeffs.get(param, Fraction(0)) + sign * value
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
            else:
                break
        return coeffs, const, start

    def term(self) -> tuple[str | None, Fraction]:
        kind, val, pos = self.take()
        if kind == "param":
            return val, Fraction(1)
        if kind == "num":
            try:
                value = Fraction(val)
            except ZeroDivisionError:
                raise PatternSyntaxError("zero denominator", pos, self.text) from None
            if self.peek()[1] == "*" and self.peek()[0] == "op":
                self.take()
                kind2, val2, pos2 = self.take()
                if kind2 != "param":
                    raise PatternSyntaxError("expected a parameter after '*'", pos2, self.text)
                return val2, value
            return None, value
        found = "end of input" if kind == "end" else repr(val)
        raise PatternSyntaxError(f"expected a number or parameter, found {found}", pos, self.text)


def parse_pattern(text: str) -> PatternVector:
    """Parse ``text`` into a :class:`PatternVector`.

    >>> str(parse_pattern("[b, -b-c-d, c, d]"))
    '[b,-b-c-d,c,d]'
    """
    entries = []
    for k, (coeffs, const, pos) in enumerate(_Parser(text).parse()):
        if const:
            raise PatternError(
                f"non-homogeneous entry {k + 1} (constant term {const}) at position {pos}"
            )
        entries.append(LinearExpr.from_dict(coeffs))
    return PatternVector(tuple(entries))
