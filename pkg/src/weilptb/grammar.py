"""Parameter-expression grammar shared by the CLI and the JSON emitters.

    weil      := term ("+" term)*
    term      := ("phi1" | "phi2") "(" int ";" gauss ")"
    rep       := block ("x" block)*
    block     := ("P1" | "P2" | "T") "(" int ";" gauss ")"
    chi       := "chi" "(" int ";" gauss ")"
    partition := int ("," int)*
    gauss     := rat [("+" | "-") rat "i"]
    rat       := ["-"] digits ["/" digits]

Whitespace is insignificant.  Parse errors carry the byte offset of the
offending token.  Printing produces canonical forms, and parsing a printed
canonical form gives back the original value.
"""

from __future__ import annotations

import warnings
from fractions import Fraction

from .errors import ParseError
from .exact import GaussianRational
from .langlands import DivAlg, EssDiscrete, HeckeCharacter
from .weil import WeilIrred, WeilRep, induce, make_irred
from .weil import CxCharacter

_PUNCT = "();+-/,"


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []  # (kind, value, offset)
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.items.append(("int", text[i:j], i))
                i = j
            elif ch.isalpha():
                j = i
                while j < n and (text[j].isalnum()):
                    j += 1
                self.items.append(("word", text[i:j], i))
                i = j
            elif ch in _PUNCT:
                self.items.append((ch, ch, i))
                i += 1
            else:
                raise ParseError(i, "a token", ch)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        if self.pos < len(self.items):
            return self.items[self.pos]
        return ("eof", "", len(self.text))

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(tok[2], what or repr(kind), tok[1] or "end of input")
        return self.next()

    def expect_word(self, *words: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != "word" or tok[1] not in words:
            raise ParseError(tok[2], " or ".join(words), tok[1] or "end of input")
        return self.next()

    def at_end(self) -> bool:
        return self.pos >= len(self.items)


def _parse_int(toks: _Tokens) -> int:
    neg = False
    if toks.peek()[0] == "-":
        toks.next()
        neg = True
    tok = toks.expect("int", "an integer")
    value = int(tok[1])
    return -value if neg else value


def _parse_rat(toks: _Tokens) -> Fraction:
    num = _parse_int(toks)
    if toks.peek()[0] == "/":
        toks.next()
        den_tok = toks.expect("int", "a denominator")
        den = int(den_tok[1])
        if den == 0:
            raise ParseError(den_tok[2], "a nonzero denominator", "0")
        return Fraction(num, den)
    return Fraction(num)


def _parse_gauss(toks: _Tokens) -> GaussianRational:
    re = _parse_rat(toks)
    kind = toks.peek()[0]
    if kind in ("+", "-"):
        save = toks.pos
        sign = 1 if kind == "+" else -1
        toks.next()
        try:
            im = _parse_rat(toks)
            toks.expect_word("i")
        except ParseError:
            toks.pos = save
            return GaussianRational(re, Fraction(0))
        return GaussianRational(re, sign * im)
    return GaussianRational(re, Fraction(0))


def _parse_args(toks: _Tokens) -> tuple[int, GaussianRational]:
    toks.expect("(")
    k = _parse_int(toks)
    toks.expect(";")
    lam = _parse_gauss(toks)
    toks.expect(")")
    return k, lam


def _parse_weil_term(toks: _Tokens) -> list[WeilIrred]:
    word = toks.expect_word("phi1", "phi2")
    k, lam = _parse_args(toks)
    if word[1] == "phi1":
        return [make_irred(1, k, lam)]
    if k == 0:
        warnings.warn(
            f"phi2(0;{lam}) is reducible; splitting into phi1(0;{lam})+phi1(1;{lam})"
        )
        return list(induce(CxCharacter(0, lam)).summands)
    return [make_irred(2, k, lam)]


def parse_weil(text: str) -> WeilRep:
    toks = _Tokens(text)
    summands = _parse_weil_term(toks)
    while toks.peek()[0] == "+":
        toks.next()
        summands.extend(_parse_weil_term(toks))
    tok = toks.peek()
    if not toks.at_end():
        raise ParseError(tok[2], "'+' or end of input", tok[1])
    return WeilRep(tuple(summands))


def parse_blocks(text: str) -> tuple[EssDiscrete, ...]:
    """A product of blocks, in the order written."""
    toks = _Tokens(text)
    blocks = [_parse_block(toks)]
    while toks.peek()[0] == "word" and toks.peek()[1] == "x":
        toks.next()
        blocks.append(_parse_block(toks))
    tok = toks.peek()
    if not toks.at_end():
        raise ParseError(tok[2], "'x' or end of input", tok[1])
    return tuple(blocks)


def _parse_block(toks: _Tokens) -> EssDiscrete:
    word = toks.expect_word("P1", "P2", "T")
    k, lam = _parse_args(toks)
    try:
        return EssDiscrete(word[1], k, lam)
    except ValueError as exc:
        raise ParseError(word[2], f"a valid {word[1]} block", str(exc)) from exc


def parse_chi(text: str) -> HeckeCharacter:
    toks = _Tokens(text)
    toks.expect_word("chi")
    l, eta = _parse_args(toks)
    tok = toks.peek()
    if not toks.at_end():
        raise ParseError(tok[2], "end of input", tok[1])
    return HeckeCharacter(l, eta)


def parse_partition(text: str) -> tuple[int, ...]:
    toks = _Tokens(text)
    parts = [_parse_int(toks)]
    while toks.peek()[0] == ",":
        toks.next()
        parts.append(_parse_int(toks))
    tok = toks.peek()
    if not toks.at_end():
        raise ParseError(tok[2], "',' or end of input", tok[1])
    return tuple(parts)


def parse_gauss(text: str) -> GaussianRational:
    toks = _Tokens(text)
    value = _parse_gauss(toks)
    tok = toks.peek()
    if not toks.at_end():
        raise ParseError(tok[2], "end of input", tok[1])
    return value


def parse_rational(text: str) -> Fraction:
    toks = _Tokens(text)
    value = _parse_rat(toks)
    tok = toks.peek()
    if not toks.at_end():
        raise ParseError(tok[2], "end of input", tok[1])
    return value


_KINDS = {
    "weil": parse_weil,
    "rep": parse_blocks,
    "chi": parse_chi,
    "partition": parse_partition,
    "gauss": parse_gauss,
    "rat": parse_rational,
}


def parse(text: str, kind: str):
    """Parse text as one of: weil, rep, chi, partition, gauss, rat."""
    try:
        parser = _KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown grammar kind {kind!r}") from None
    return parser(text)


def print_gauss(value: GaussianRational) -> str:
    return str(value)


def print_weil(rep: WeilRep) -> str:
    return "+".join(str(s) for s in rep) if len(rep) else "0"


def print_blocks(blocks) -> str:
    return " x ".join(str(b) for b in blocks)


def print_chi(chi: HeckeCharacter) -> str:
    return str(chi)


def print_partition(parts) -> str:
    return ",".join(str(p) for p in parts)
