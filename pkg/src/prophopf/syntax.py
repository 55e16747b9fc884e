"""Concrete syntax shared by the CLI.

Terms::

    term   := tensor ( "." term )?          # g . f applies f first
    tensor := atom ( "x" tensor )?          # x binds tighter than .
    atom   := mu | eta | delta | eps | S | id(N) | P(N,N) | perm[N,...]
            | mui[N,...] | deltai[N,...] | conv(term,term) | vee(term,term)
            | y(N,N,N,N,N) | "(" term ")"

Words are ``x1 x2^-1`` (empty word ``1``); brackets are
``[x1 x2^-1, x3 | 2 -> 3]``; canonical forms are
``{m:1,n:2,p:[2],q:[1,1],e:[0,1],sigma:[2,1]}``.
"""

from __future__ import annotations

import re

from .canonical import CanonicalForm, make_form
from .errors import ParseError, PropHopfError
from .fcat import FMorphism
from .hterm import Compose, Gen, HTerm, Id, Sym, Tensor, conv, iterated_delta, iterated_mu, perm_term, vee, y_gen
from .perm import Permutation
from .words import Letter, ReducedWord, reduce

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")

_ATOMS = {
    "mu": Gen("mu"),
    "eta": Gen("eta"),
    "delta": Gen("delta"),
    "eps": Gen("eps"),
    "S": Gen("antipode"),
}

_GEN_NAMES = {"mu": "mu", "eta": "eta", "delta": "delta", "eps": "eps", "antipode": "S"}


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            break
        number, name, punct = match.groups()
        if number is not None:
            tokens.append(("num", number))
        elif name is not None:
            tokens.append(("op", "x") if name == "x" else ("name", name))
        elif punct is not None:
            if punct not in "()[],.":
                raise ParseError(f"unexpected character {punct!r} at offset {match.start(3)}")
            tokens.append(("op", punct))
        pos = match.end()
    return tokens


class _TermParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("eof", "")

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, got = self.take()
        if got != value or kind == "eof":
            raise ParseError(f"expected {value!r}, got {got or 'end of input'!r} in {self.text!r}")

    def number(self) -> int:
        kind, value = self.take()
        if kind != "num":
            raise ParseError(f"expected a natural number, got {value or 'end of input'!r}")
        return int(value)

    def numbers(self, open_: str, close: str) -> list[int]:
        self.expect(open_)
        out = []
        if self.peek() == ("op", close):
            self.take()
            return out
        while True:
            out.append(self.number())
            kind, value = self.take()
            if value == close and kind == "op":
                return out
            if value != ",":
                raise ParseError(f"expected ',' or {close!r}, got {value or 'end of input'!r}")

    def parse(self) -> HTerm:
        term = self.term()
        if self.peek()[0] != "eof":
            raise ParseError(f"trailing input at {self.peek()[1]!r} in {self.text!r}")
        return term

    def term(self) -> HTerm:
        left = self.tensor()
        if self.peek() == ("op", "."):
            self.take()
            return Compose(left, self.term())
        return left

    def tensor(self) -> HTerm:
        left = self.atom()
        if self.peek() == ("op", "x"):
            self.take()
            return Tensor(left, self.tensor())
        return left

    def pair(self) -> tuple[HTerm, HTerm]:
        self.expect("(")
        a = self.term()
        self.expect(",")
        b = self.term()
        self.expect(")")
        return a, b

    def atom(self) -> HTerm:
        kind, value = self.take()
        if kind == "op" and value == "(":
            inner = self.term()
            self.expect(")")
            return inner
        if kind != "name":
            raise ParseError(f"expected a term, got {value or 'end of input'!r} in {self.text!r}")
        if value in _ATOMS:
            return _ATOMS[value]
        if value == "id":
            args = self.numbers("(", ")")
            if len(args) != 1:
                raise ParseError("id needs one argument")
            return Id(args[0])
        if value == "P":
            args = self.numbers("(", ")")
            if len(args) != 2:
                raise ParseError("P needs two arguments")
            return Sym(*args)
        if value == "perm":
            try:
                return perm_term(Permutation.of(self.numbers("[", "]")))
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        if value == "mui":
            return iterated_mu(self.numbers("[", "]"))
        if value == "deltai":
            return iterated_delta(self.numbers("[", "]"))
        if value == "y":
            args = self.numbers("(", ")")
            if len(args) != 5:
                raise ParseError("y needs five arguments")
            return y_gen(*args)
        if value == "conv":
            return conv(*self.pair())
        if value == "vee":
            return vee(*self.pair())
        raise ParseError(f"unknown atom {value!r}")


def parse_term(text: str) -> HTerm:
    """Parse a term. Derived forms expand immediately and may raise domain
    errors (e.g. ``conv`` of terms with different boundaries)."""
    try:
        return _TermParser(text).parse()
    except (ParseError, PropHopfError):
        raise
    except (ValueError, RecursionError) as exc:
        raise ParseError(str(exc)) from None


def print_term(t: HTerm) -> str:
    if isinstance(t, Gen):
        return _GEN_NAMES[t.kind]
    if isinstance(t, Id):
        return f"id({t.n})"
    if isinstance(t, Sym):
        return f"P({t.m},{t.n})"
    if isinstance(t, Compose):
        left = print_term(t.left)
        if isinstance(t.left, Compose):
            left = f"({left})"
        return f"{left} . {print_term(t.right)}"
    if isinstance(t, Tensor):
        left = print_term(t.left)
        right = print_term(t.right)
        if isinstance(t.left, (Compose, Tensor)):
            left = f"({left})"
        if isinstance(t.right, Compose):
            right = f"({right})"
        return f"{left} x {right}"
    raise TypeError(f"not a term: {t!r}")


# -- words and brackets -------------------------------------------------------------------

_LETTER = re.compile(r"x(\d+)(\^-1)?$")


def parse_word(text: str, rank: int) -> ReducedWord:
    parts = text.split()
    if parts == ["1"]:
        return ReducedWord(rank, ())
    letters = []
    for part in parts:
        match = _LETTER.match(part)
        if match is None:
            raise ParseError(f"bad letter {part!r}")
        letters.append(Letter(int(match.group(1)), -1 if match.group(2) else 1))
    if not letters:
        raise ParseError("empty word must be written 1")
    return reduce(rank, letters)


_BRACKET = re.compile(r"\s*\[(.*)\|\s*(\d+)\s*->\s*(\d+)\s*\]\s*$", re.S)


def parse_bracket(text: str) -> FMorphism:
    match = _BRACKET.match(text)
    if match is None:
        raise ParseError(f"bad bracket literal {text!r}")
    body, m, n = match.group(1), int(match.group(2)), int(match.group(3))
    chunks = [] if not body.strip() else body.split(",")
    if len(chunks) != m:
        raise ParseError(f"bracket declares {m} words but lists {len(chunks)}")
    return FMorphism(m, n, tuple(parse_word(chunk, n) for chunk in chunks))


# -- canonical records -------------------------------------------------------------------

_FIELD = re.compile(r"(\w+):(\[[\d,]*\]|\d+)")
_FIELDS = ("m", "n", "p", "q", "e", "sigma")


def parse_canonical(text: str) -> CanonicalForm:
    compact = re.sub(r"[\s\"']", "", text)
    if not (compact.startswith("{") and compact.endswith("}")):
        raise ParseError(f"bad canonical record {text!r}")
    values = {}
    for key, raw in _FIELD.findall(compact):
        if raw.startswith("["):
            inner = raw[1:-1]
            values[key] = [int(x) for x in inner.split(",")] if inner else []
        else:
            values[key] = int(raw)
    if sorted(values) != sorted(_FIELDS):
        raise ParseError(f"canonical record needs fields {', '.join(_FIELDS)}")
    if not isinstance(values["m"], int) or not isinstance(values["n"], int):
        raise ParseError("m and n must be numbers")
    try:
        sigma = Permutation.of(values["sigma"])
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return make_form(values["m"], values["n"], values["p"], values["q"], values["e"], sigma)
