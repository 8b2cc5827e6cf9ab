"""Input grammars for presentations, monodromies, mapping-class
expressions, and Laurent polynomials.

Presentations::

    presentation := names '|' [ word (',' word)* ]
    word         := factor*
    factor       := (name | '1' | '(' word ')') ['^' integer]

Monodromies::

    monodromy := surface (';' entry)* [';']
    surface   := 'S' '(' 0 ',' holes ')'
    entry     := 'T' curve
    curve     := 'std' '{' hole (',' hole)* ['/' sides] '}'
               | 'apply' '(' mapclass ',' curve ')'
    mapclass  := factor+                      -- rightmost factor applied first
    factor    := ('T' curve | alias | '(' mapclass ')') ['^' integer]
    alias     := 'Ta' | 'Tb' | 'Tg'           -- family twists, S(0,4) only

``sides`` is one character per skipped hole in increasing order: ``o``
(over: the curve passes over the skipped hole, conjugating the next
generator) or ``u`` (under).

Laurent polynomials::

    poly := ['+'|'-'] term (('+'|'-') term)*
    term := integer ['*'] ['t' ['^' integer]] | 't' ['^' integer]

All parse failures raise :class:`ParseError` carrying 1-based line and
column numbers.
"""

from __future__ import annotations

import re

from .laurent import LaurentPoly
from .lefschetz import PALFSpec, family_twists
from .presentation import Presentation
from .surface import (
    OVER,
    UNDER,
    Curve,
    MappingClass,
    PlanarSurface,
    apply,
    compose,
    dehn_twist,
    power,
    standard_curve,
)
from .words import FreeGroup, Word


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|\d+|[()|,;{}/^*+\-]|\S")


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind: str, text: str, line: int, column: int):
        self.kind = kind  # 'name', 'int', punctuation text, or 'end'
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        pos = 0
        while pos < len(line):
            if line[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(line, pos)
            assert m is not None
            chunk = m.group()
            col = pos + 1
            if chunk[0].isalpha() or chunk[0] == "_":
                kind = "name"
            elif chunk.isdigit():
                kind = "int"
            elif chunk in "()|,;{}/^*+-":
                kind = chunk
            else:
                raise ParseError(f"unexpected character {chunk!r}", lineno, col)
            tokens.append(_Token(kind, chunk, lineno, col))
            pos = m.end()
    physical = text.split("\n")
    tokens.append(_Token("end", "", len(physical), len(physical[-1]) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def error(self, message: str) -> ParseError:
        tok = self.current
        return ParseError(message, tok.line, tok.column)

    def expect(self, kind: str) -> _Token:
        if self.current.kind != kind:
            what = "end of input" if self.current.kind == "end" else repr(self.current.text)
            raise self.error(f"expected {kind!r}, found {what}")
        return self.advance()

    def at_end(self) -> bool:
        return self.current.kind == "end"

    def parse_int(self) -> int:
        negative = False
        if self.current.kind == "-":
            self.advance()
            negative = True
        tok = self.expect("int")
        value = int(tok.text)
        return -value if negative else value


# -- presentations -----------------------------------------------------------

def parse_presentation(text: str) -> Presentation:
    """Parse ``gens | relators`` into a :class:`Presentation`.

    >>> p = parse_presentation("x y | (x y)^2 x (x y)^-2 y^-1")
    >>> (p.rank, len(p.relators))
    (2, 1)
    """
    parser = _Parser(text)
    names = []
    while parser.current.kind == "name":
        names.append(parser.advance().text)
    if len(set(names)) != len(names):
        raise parser.error("duplicate generator name")
    parser.expect("|")
    group = FreeGroup(len(names), tuple(names))
    index = {n: i + 1 for i, n in enumerate(names)}

    relators = []
    if not parser.at_end():
        relators.append(_parse_word(parser, group, index))
        while parser.current.kind == ",":
            parser.advance()
            relators.append(_parse_word(parser, group, index))
    if not parser.at_end():
        raise parser.error(f"unexpected {parser.current.text!r}")
    return Presentation(group, relators)


def _parse_word(parser: _Parser, group: FreeGroup, index: dict[str, int]) -> Word:
    start = parser.pos
    letters = _parse_word_letters(parser, group, index)
    if parser.pos == start:
        raise parser.error(f"expected a relator word, found {parser.current.text or 'end of input'!r}")
    return Word(group, letters)


def _parse_word_letters(parser: _Parser, group: FreeGroup, index: dict[str, int]) -> list[int]:
    letters: list[int] = []
    while True:
        tok = parser.current
        if tok.kind == "name":
            if tok.text not in index:
                raise parser.error(f"unknown generator {tok.text!r}")
            parser.advance()
            base = [index[tok.text]]
        elif tok.kind == "int" and tok.text == "1":
            parser.advance()
            base = []
        elif tok.kind == "(":
            parser.advance()
            base = _parse_word_letters(parser, group, index)
            parser.expect(")")
        else:
            return letters
        if parser.current.kind == "^":
            parser.advance()
            exponent = parser.parse_int()
            if exponent < 0:
                base = [-x for x in reversed(base)]
                exponent = -exponent
            base = base * exponent
        letters.extend(base)


# -- Laurent polynomials -----------------------------------------------------

def parse_laurent(text: str) -> LaurentPoly:
    """Parse a one-variable integer Laurent polynomial in ``t``.

    >>> print(parse_laurent("t^-2 - 2*t^-1 + 3 - 2t + t^2"))
    t^-2 - 2*t^-1 + 3 - 2*t + t^2
    """
    parser = _Parser(text)
    coeffs: dict[int, int] = {}
    first = True
    while not parser.at_end():
        sign = 1
        if parser.current.kind in ("+", "-"):
            sign = -1 if parser.advance().kind == "-" else 1
        elif not first:
            raise parser.error(f"expected '+' or '-', found {parser.current.text!r}")
        coeff, exponent = _parse_laurent_term(parser)
        coeffs[exponent] = coeffs.get(exponent, 0) + sign * coeff
        first = False
    if first:
        raise parser.error("empty polynomial")
    return LaurentPoly(coeffs)


def _parse_laurent_term(parser: _Parser) -> tuple[int, int]:
    tok = parser.current
    coeff = 1
    saw_coeff = False
    if tok.kind == "int":
        parser.advance()
        coeff = int(tok.text)
        saw_coeff = True
        if parser.current.kind == "*":
            parser.advance()
            if not (parser.current.kind == "name" and parser.current.text == "t"):
                raise parser.error("expected 't' after '*'")
    if parser.current.kind == "name":
        if parser.current.text != "t":
            raise parser.error(f"unknown variable {parser.current.text!r}")
        parser.advance()
        exponent = 1
        if parser.current.kind == "^":
            parser.advance()
            exponent = parser.parse_int()
        return coeff, exponent
    if not saw_coeff:
        raise parser.error(f"expected a term, found {tok.text!r}")
    return coeff, 0


# -- monodromies and mapping-class expressions --------------------------------

_ALIASES = {"Ta": 0, "Tb": 1, "Tg": 2}


def parse_monodromy(text: str) -> PALFSpec:
    """Parse a surface header plus twist list into a :class:`PALFSpec`."""
    parser = _Parser(text)
    surface = _parse_surface(parser)
    cycles = []
    while parser.current.kind == ";":
        parser.advance()
        if parser.at_end():
            break
        cycles.append(_parse_entry_curve(parser, surface))
    if not parser.at_end():
        raise parser.error(f"unexpected {parser.current.text!r}")
    return PALFSpec(surface, cycles)


def parse_surface(text: str) -> PlanarSurface:
    parser = _Parser(text)
    surface = _parse_surface(parser)
    if not parser.at_end():
        raise parser.error(f"unexpected {parser.current.text!r}")
    return surface


def parse_mapping_class(text: str, surface: PlanarSurface) -> MappingClass:
    """Parse a mapping-class expression such as ``(Tg Tb)^2`` on a surface."""
    parser = _Parser(text)
    phi = _parse_mapclass(parser, surface)
    if not parser.at_end():
        raise parser.error(f"unexpected {parser.current.text!r}")
    return phi


def _parse_surface(parser: _Parser) -> PlanarSurface:
    tok = parser.expect("name")
    if tok.text != "S":
        raise ParseError(f"expected surface 'S(0,r)', found {tok.text!r}", tok.line, tok.column)
    parser.expect("(")
    genus = parser.parse_int()
    if genus != 0:
        raise parser.error("only genus 0 surfaces are supported")
    parser.expect(",")
    holes = parser.parse_int()
    if holes < 1:
        raise parser.error("surface needs at least one hole")
    parser.expect(")")
    return PlanarSurface(holes)


def _parse_entry_curve(parser: _Parser, surface: PlanarSurface) -> Curve:
    tok = parser.current
    if tok.kind == "name" and tok.text == "T":
        parser.advance()
        return _parse_curve(parser, surface)
    if tok.kind == "name" and tok.text in _ALIASES:
        # alias twists are twists about fixture curves; the cycle is the curve
        raise parser.error("monodromy entries must be 'T <curve>'; aliases appear inside apply(...)")
    raise parser.error(f"expected a twist entry, found {tok.text!r}")


def _parse_curve(parser: _Parser, surface: PlanarSurface) -> Curve:
    tok = parser.expect("name")
    if tok.text == "std":
        parser.expect("{")
        holes = [_parse_hole(parser, surface)]
        while parser.current.kind == ",":
            parser.advance()
            holes.append(_parse_hole(parser, surface))
        sides = None
        if parser.current.kind == "/":
            parser.advance()
            flag_tok = parser.expect("name")
            sides = _decode_sides(parser, holes, flag_tok)
        parser.expect("}")
        try:
            return standard_curve(surface, holes, sides)
        except ValueError as exc:
            raise ParseError(str(exc), tok.line, tok.column) from exc
    if tok.text == "apply":
        parser.expect("(")
        phi = _parse_mapclass(parser, surface)
        parser.expect(",")
        curve = _parse_curve(parser, surface)
        parser.expect(")")
        return apply(phi, curve)
    raise ParseError(f"unknown curve form {tok.text!r}", tok.line, tok.column)


def _parse_hole(parser: _Parser, surface: PlanarSurface) -> int:
    tok = parser.expect("int")
    hole = int(tok.text)
    if not 1 <= hole < surface.holes:
        raise ParseError(f"hole index {hole} out of range on {surface}", tok.line, tok.column)
    return hole


def _decode_sides(parser: _Parser, holes: list[int], tok: _Token) -> dict[int, str]:
    enclosed = sorted(set(holes))
    skipped = [h for h in range(enclosed[0] + 1, enclosed[-1]) if h not in set(enclosed)]
    flags = tok.text
    if len(flags) != len(skipped) or any(c not in "ou" for c in flags):
        raise ParseError(
            f"expected one 'o'/'u' flag per skipped hole {skipped}, got {flags!r}",
            tok.line,
            tok.column,
        )
    return {h: (OVER if c == "o" else UNDER) for h, c in zip(skipped, flags)}


def _parse_mapclass(parser: _Parser, surface: PlanarSurface) -> MappingClass:
    factors = []
    while True:
        tok = parser.current
        if tok.kind == "(":
            parser.advance()
            base = _parse_mapclass(parser, surface)
            parser.expect(")")
        elif tok.kind == "name" and tok.text in _ALIASES:
            if surface.holes != 4:
                raise parser.error(f"alias {tok.text!r} is defined on S(0,4) only")
            parser.advance()
            base = family_twists(surface)[_ALIASES[tok.text]]
        elif tok.kind == "name" and tok.text == "T":
            parser.advance()
            base = dehn_twist(_parse_curve(parser, surface))
        else:
            break
        if parser.current.kind == "^":
            parser.advance()
            base = power(base, parser.parse_int())
        factors.append(base)
    if not factors:
        raise parser.error("expected a mapping-class expression")
    result = factors[0]
    for factor in factors[1:]:
        result = compose(result, factor)
    return result
