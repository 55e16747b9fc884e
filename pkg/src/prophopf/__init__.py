"""Canonical forms and an equality decision procedure for the free symmetric
monoidal category on a commutative Hopf monoid, checked against its model in
finitely generated free groups."""

from .canonical import CanonicalForm, decode, encode, equal, normalize_eval, normalize_rewrite, peel, size, to_words
from .fcat import FMorphism, bracket
from .hterm import Compose, Gen, Id, Sym, Tensor, evaluate, infer_type
from .perm import Permutation, transpose_perm
from .syntax import parse_bracket, parse_canonical, parse_term, print_term
from .words import Letter, ReducedWord, reduce

__all__ = [
    "CanonicalForm",
    "Compose",
    "FMorphism",
    "Gen",
    "Id",
    "Letter",
    "Permutation",
    "ReducedWord",
    "Sym",
    "Tensor",
    "bracket",
    "decode",
    "encode",
    "equal",
    "evaluate",
    "infer_type",
    "normalize_eval",
    "normalize_rewrite",
    "parse_bracket",
    "parse_canonical",
    "parse_term",
    "peel",
    "print_term",
    "reduce",
    "size",
    "to_words",
    "transpose_perm",
]
