"""Text syntax for framed manifolds.

Grammar (whitespace is insignificant)::

    manifold  := <empty> | term ('+' term)*
    term      := [count '*'] generator '[' signed-int ']'
    generator := 'S1' | 'C2xS1' | 'S2s' | 'S1s'
    count     := positive integer

``S2s`` is S(2 sigma) and ``S1s`` is S(1 + sigma).  The grade is never part
of the text; callers supply it.
"""

from __future__ import annotations

import re
from itertools import groupby

from .errors import ParseError
from .grading import FramingGrade
from .manifolds import ComponentKind, FramedComponent, FramedManifold, make_component, normalize

_GENERATORS = sorted((k.token for k in ComponentKind), key=len, reverse=True)
_GENERATOR_RE = re.compile("|".join(re.escape(g) for g in _GENERATORS))
_INT_RE = re.compile(r"\d+")
_SIGNED_RE = re.compile(r"[+-]?\d+")


class _Parser:
    def __init__(self, text: str, grade: FramingGrade):
        self.text = text
        self.grade = grade
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, s: str) -> bool:
        self.skip_ws()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> None:
        if not self.peek(s):
            raise ParseError(self.pos, repr(s), self.text)
        self.pos += len(s)

    def match(self, pattern: re.Pattern, expected: str) -> str:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise ParseError(self.pos, expected, self.text)
        self.pos = m.end()
        return m.group()

    def manifold(self) -> list[FramedComponent]:
        if self.at_end():
            return []
        comps = self.term()
        while not self.at_end():
            self.expect("+")
            comps.extend(self.term())
        return comps

    def term(self) -> list[FramedComponent]:
        count = 1
        self.skip_ws()
        if _INT_RE.match(self.text, self.pos):
            start = self.pos
            count = int(self.match(_INT_RE, "count"))
            if count < 1:
                raise ParseError(start, "positive count", self.text)
            self.expect("*")
        kind = ComponentKind.from_token(self.match(_GENERATOR_RE, "generator (S1, C2xS1, S2s, S1s)"))
        self.expect("[")
        twist = int(self.match(_SIGNED_RE, "signed integer twist"))
        self.expect("]")
        return [make_component(kind, twist, self.grade)] * count


def parse_manifold(text: str, grade: FramingGrade) -> FramedManifold:
    """Parse ``text`` into a manifold of the given grade.

    >>> from c2framed.grading import FramingGrade
    >>> m = parse_manifold("2*S1s[1] + C2xS1[0]", FramingGrade.SIGN_SIGMA)
    >>> [str(c) for c in m]
    ['S1s[1]', 'S1s[1]', 'C2xS1[0]']
    """
    return FramedManifold(grade, tuple(_Parser(text, grade).manifold()))


def format_manifold(m: FramedManifold) -> str:
    """Canonical text for ``m``: normal order, repeats folded into ``k*``.

    The empty manifold formats as the empty string.
    """
    terms = []
    for comp, group in groupby(normalize(m).components):
        k = sum(1 for _ in group)
        terms.append(f"{k}*{comp}" if k > 1 else str(comp))
    return " + ".join(terms)
