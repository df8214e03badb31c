"""Construction DSL: parsing, canonical printing, hashing and compilation.

Grammar (case-insensitive keywords, whitespace ignored between tokens):

    ring   := "z(" INT ")" | "gf(" INT ")"
            | "m(" INT "," ring ")" | "t(" INT "," ring ")"
            | "prod(" ring {"," ring} ")"
            | "quot(" ring ",[" INT {"," INT} "])"
            | "corner(" ring "," INT ")"
            | "triv(" ring ")"
            | "group(" ring "," grp ")"
            | "poly(" ring "," INT ")"
            | "skew(" ring "," endo "," INT ")"
    grp    := gatom {"x" gatom}
    gatom  := "c(" INT ")" | "d(" INT ")" | "q8" | "s(" INT ")" | "@" FILE
    endo   := "id" | "frob" | "@" FILE

File tokens run over [A-Za-z0-9._/~-]. The canonical form is lowercase
with no whitespace, except that a group-product `x` following a file
token is preceded by one space (the file token would swallow it
otherwise); printing then reparsing is the identity.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from . import construct, groups
from .core import ElemSet, TableRing

MAX_EXPR_LENGTH = 4096


class ParseError(ValueError):
    """Syntax error with a byte offset and the expected-token set."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str = ""):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        what = f", found {found!r}" if found else ""
        super().__init__(f"at offset {offset}: expected {' | '.join(self.expected)}{what}")


class RangeError(ValueError):
    """An integer argument violated its range, caught at parse time."""

    def __init__(self, offset: int, message: str):
        self.offset = offset
        super().__init__(f"at offset {offset}: {message}")


class BadElementRefError(ValueError):
    """A quot/corner element index does not exist in the child ring."""


# --- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class Zmod:
    n: int


@dataclass(frozen=True)
class GF:
    q: int


@dataclass(frozen=True)
class MatrixOf:
    k: int
    base: "RingExpr"


@dataclass(frozen=True)
class TriangularOf:
    k: int
    base: "RingExpr"


@dataclass(frozen=True)
class ProdOf:
    factors: tuple["RingExpr", ...]


@dataclass(frozen=True)
class QuotOf:
    base: "RingExpr"
    gens: tuple[int, ...]


@dataclass(frozen=True)
class CornerOf:
    base: "RingExpr"
    idem: int


@dataclass(frozen=True)
class TrivOf:
    base: "RingExpr"


@dataclass(frozen=True)
class GroupRingOf:
    base: "RingExpr"
    group: "GroupExpr"


@dataclass(frozen=True)
class PolyOf:
    base: "RingExpr"
    k: int


@dataclass(frozen=True)
class SkewOf:
    base: "RingExpr"
    endo: "EndoRef"
    k: int


@dataclass(frozen=True)
class CyclicG:
    n: int


@dataclass(frozen=True)
class DihedralG:
    n: int


@dataclass(frozen=True)
class QuaternionG:
    pass


@dataclass(frozen=True)
class SymmetricG:
    n: int


@dataclass(frozen=True)
class ProductG:
    factors: tuple["GroupExpr", ...]


@dataclass(frozen=True)
class FileG:
    path: str


@dataclass(frozen=True)
class NamedEndo:
    name: str  # "id" | "frob"


@dataclass(frozen=True)
class FileEndo:
    path: str


RingExpr = Union[
    Zmod, GF, MatrixOf, TriangularOf, ProdOf, QuotOf, CornerOf, TrivOf, GroupRingOf, PolyOf, SkewOf
]
GroupExpr = Union[CyclicG, DihedralG, QuaternionG, SymmetricG, ProductG, FileG]
EndoRef = Union[NamedEndo, FileEndo]

_FILE_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789._/~-")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, expected: tuple[str, ...]):
        self.skip_ws()
        found = self.text[self.pos : self.pos + 8]
        raise ParseError(self.pos, expected, found)

    def literal(self, lit: str) -> None:
        self.skip_ws()
        if not self.text[self.pos : self.pos + len(lit)].lower() == lit:
            self.fail((repr(lit),))
        self.pos += len(lit)

    def try_literal(self, lit: str) -> bool:
        self.skip_ws()
        if self.text[self.pos : self.pos + len(lit)].lower() == lit:
            self.pos += len(lit)
            return True
        return False

    def ident(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start : self.pos].lower(), start

    def integer(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail(("INT",))
        return int(self.text[start : self.pos]), start

    def file_token(self) -> str:
        self.literal("@")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _FILE_CHARS:
            self.pos += 1
        if self.pos == start:
            self.fail(("FILE",))
        return self.text[start : self.pos]


_RING_KEYWORDS = ("z", "gf", "m", "t", "prod", "quot", "corner", "triv", "group", "poly", "skew")


def _parse_ring(sc: _Scanner) -> RingExpr:
    word, start = sc.ident()
    if word == "z":
        sc.literal("(")
        n, noff = sc.integer()
        sc.literal(")")
        if n < 2:
            raise RangeError(noff, "z(n) requires n >= 2")
        return Zmod(n)
    if word == "gf":
        sc.literal("(")
        q, qoff = sc.integer()
        sc.literal(")")
        if q < 2:
            raise RangeError(qoff, "gf(q) requires q >= 2")
        return GF(q)
    if word in ("m", "t"):
        sc.literal("(")
        k, koff = sc.integer()
        if k < 1:
            raise RangeError(koff, "k must be >= 1")
        sc.literal(",")
        base = _parse_ring(sc)
        sc.literal(")")
        return MatrixOf(k, base) if word == "m" else TriangularOf(k, base)
    if word == "prod":
        sc.literal("(")
        factors = [_parse_ring(sc)]
        while sc.try_literal(","):
            factors.append(_parse_ring(sc))
        sc.literal(")")
        return ProdOf(tuple(factors))
    if word == "quot":
        sc.literal("(")
        base = _parse_ring(sc)
        sc.literal(",")
        sc.literal("[")
        gens = [sc.integer()[0]]
        while sc.try_literal(","):
            gens.append(sc.integer()[0])
        sc.literal("]")
        sc.literal(")")
        return QuotOf(base, tuple(gens))
    if word == "corner":
        sc.literal("(")
        base = _parse_ring(sc)
        sc.literal(",")
        idem = sc.integer()[0]
        sc.literal(")")
        return CornerOf(base, idem)
    if word == "triv":
        sc.literal("(")
        base = _parse_ring(sc)
        sc.literal(")")
        return TrivOf(base)
    if word == "group":
        sc.literal("(")
        base = _parse_ring(sc)
        sc.literal(",")
        grp = _parse_group(sc)
        sc.literal(")")
        return GroupRingOf(base, grp)
    if word == "poly":
        sc.literal("(")
        base = _parse_ring(sc)
        sc.literal(",")
        k, koff = sc.integer()
        sc.literal(")")
        if k < 1:
            raise RangeError(koff, "truncation exponent must be >= 1")
        return PolyOf(base, k)
    if word == "skew":
        sc.literal("(")
        base = _parse_ring(sc)
        sc.literal(",")
        endo = _parse_endo(sc)
        sc.literal(",")
        k, koff = sc.integer()
        sc.literal(")")
        if k < 1:
            raise RangeError(koff, "truncation exponent must be >= 1")
        return SkewOf(base, endo, k)
    sc.pos = start
    sc.fail(_RING_KEYWORDS)


def _parse_gatom(sc: _Scanner) -> GroupExpr:
    # prefix-matched keywords: a following group-product `x` must not be
    # swallowed, so greedy identifier lexing is wrong here (q8xq8)
    sc.skip_ws()
    if sc.peek() == "@":
        return FileG(sc.file_token())
    if sc.text[sc.pos : sc.pos + 2].lower() == "q8":
        sc.pos += 2
        return QuaternionG()
    ch = sc.text[sc.pos : sc.pos + 1].lower()
    if ch in ("c", "d", "s"):
        sc.pos += 1
        sc.literal("(")
        n, noff = sc.integer()
        sc.literal(")")
        if ch == "c":
            if n < 1:
                raise RangeError(noff, "c(n) requires n >= 1")
            return CyclicG(n)
        if ch == "d":
            if n < 1:
                raise RangeError(noff, "d(n) requires n >= 1")
            return DihedralG(n)
        if not 1 <= n <= 4:
            raise RangeError(noff, "s(n) supports 1 <= n <= 4")
        return SymmetricG(n)
    sc.fail(("c", "d", "q8", "s", "@FILE"))


def _parse_group(sc: _Scanner) -> GroupExpr:
    factors = [_parse_gatom(sc)]
    while True:
        sc.skip_ws()
        if sc.pos < len(sc.text) and sc.text[sc.pos] in "xX":
            sc.pos += 1
            factors.append(_parse_gatom(sc))
        else:
            break
    if len(factors) == 1:
        return factors[0]
    return ProductG(tuple(factors))


def _parse_endo(sc: _Scanner) -> EndoRef:
    if sc.peek() == "@":
        return FileEndo(sc.file_token())
    word, start = sc.ident()
    if word in ("id", "frob"):
        return NamedEndo(word)
    sc.pos = start
    sc.fail(("id", "frob", "@FILE"))


def parse(text: str) -> RingExpr:
    """Parse one construction expression."""
    if len(text) > MAX_EXPR_LENGTH:
        raise ParseError(MAX_EXPR_LENGTH, ("shorter input",))
    sc = _Scanner(text)
    expr = _parse_ring(sc)
    if not sc.at_end():
        sc.fail(("end of input",))
    return expr


# --- canonical printing -----------------------------------------------------


def print_canonical(expr) -> str:
    """Lowercase, whitespace-free form; reparsing it rebuilds `expr`."""
    if isinstance(expr, Zmod):
        return f"z({expr.n})"
    if isinstance(expr, GF):
        return f"gf({expr.q})"
    if isinstance(expr, MatrixOf):
        return f"m({expr.k},{print_canonical(expr.base)})"
    if isinstance(expr, TriangularOf):
        return f"t({expr.k},{print_canonical(expr.base)})"
    if isinstance(expr, ProdOf):
        return "prod(" + ",".join(print_canonical(f) for f in expr.factors) + ")"
    if isinstance(expr, QuotOf):
        return f"quot({print_canonical(expr.base)},[" + ",".join(map(str, expr.gens)) + "])"
    if isinstance(expr, CornerOf):
        return f"corner({print_canonical(expr.base)},{expr.idem})"
    if isinstance(expr, TrivOf):
        return f"triv({print_canonical(expr.base)})"
    if isinstance(expr, GroupRingOf):
        return f"group({print_canonical(expr.base)},{print_group(expr.group)})"
    if isinstance(expr, PolyOf):
        return f"poly({print_canonical(expr.base)},{expr.k})"
    if isinstance(expr, SkewOf):
        return f"skew({print_canonical(expr.base)},{print_endo(expr.endo)},{expr.k})"
    raise TypeError(f"not a ring expression: {expr!r}")


def print_group(expr) -> str:
    if isinstance(expr, CyclicG):
        return f"c({expr.n})"
    if isinstance(expr, DihedralG):
        return f"d({expr.n})"
    if isinstance(expr, QuaternionG):
        return "q8"
    if isinstance(expr, SymmetricG):
        return f"s({expr.n})"
    if isinstance(expr, ProductG):
        parts = [print_group(f) for f in expr.factors]
        out = parts[0]
        for prev, part in zip(expr.factors, parts[1:]):
            out += " x" if isinstance(prev, FileG) else "x"
            out += part
        return out
    if isinstance(expr, FileG):
        return f"@{expr.path}"
    raise TypeError(f"not a group expression: {expr!r}")


def print_endo(expr) -> str:
    if isinstance(expr, NamedEndo):
        return expr.name
    if isinstance(expr, FileEndo):
        return f"@{expr.path}"
    raise TypeError(f"not an endomorphism reference: {expr!r}")


def canonical_hash(expr) -> str:
    """Stable digest of the canonical printed form (SHA-256 hex)."""
    return hashlib.sha256(print_canonical(expr).encode("ascii")).hexdigest()


# --- compilation -------------------------------------------------------------


def compile_group(expr, base_dir: Path | None = None) -> groups.GroupTable:
    if isinstance(expr, CyclicG):
        return groups.cyclic(expr.n)
    if isinstance(expr, DihedralG):
        return groups.dihedral(expr.n)
    if isinstance(expr, QuaternionG):
        return groups.quaternion8()
    if isinstance(expr, SymmetricG):
        return groups.symmetric(expr.n)
    if isinstance(expr, ProductG):
        return groups.direct_product([compile_group(f, base_dir) for f in expr.factors])
    if isinstance(expr, FileG):
        path = Path(expr.path)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        return groups.group_from_file(path)
    raise TypeError(f"not a group expression: {expr!r}")


def compile_expr(expr, cap: int | None = None, base_dir: Path | None = None) -> TableRing:
    """Compile an AST to a validated TableRing, tagging it with its text."""
    ring = _compile(expr, cap, base_dir)
    ring.expr_text = print_canonical(expr)
    return ring


def _compile(expr, cap, base_dir) -> TableRing:
    if isinstance(expr, Zmod):
        return construct.build_zmod(expr.n, cap)
    if isinstance(expr, GF):
        return construct.build_gf(expr.q, cap)
    if isinstance(expr, MatrixOf):
        return construct.build_matrix(_compile(expr.base, cap, base_dir), expr.k, cap)
    if isinstance(expr, TriangularOf):
        return construct.build_triangular(_compile(expr.base, cap, base_dir), expr.k, cap)
    if isinstance(expr, ProdOf):
        return construct.build_product([_compile(f, cap, base_dir) for f in expr.factors], cap)
    if isinstance(expr, QuotOf):
        base = _compile(expr.base, cap, base_dir)
        for g in expr.gens:
            if not 0 <= g < base.order:
                raise BadElementRefError(f"generator index {g} not in ring of order {base.order}")
        ideal = construct.ideal_closure(base, ElemSet.of(base, expr.gens), "two-sided")
        return construct.build_quotient(base, ideal, cap)[0]
    if isinstance(expr, CornerOf):
        base = _compile(expr.base, cap, base_dir)
        if not 0 <= expr.idem < base.order:
            raise BadElementRefError(f"idempotent index {expr.idem} not in ring of order {base.order}")
        return construct.build_corner(base, expr.idem, cap)[0]
    if isinstance(expr, TrivOf):
        return construct.build_trivial_extension(_compile(expr.base, cap, base_dir), cap)
    if isinstance(expr, GroupRingOf):
        base = _compile(expr.base, cap, base_dir)
        return construct.build_group_ring(base, compile_group(expr.group, base_dir), cap)
    if isinstance(expr, PolyOf):
        base = _compile(expr.base, cap, base_dir)
        return construct.build_truncated_skew_poly(base, construct.identity_endo(base), expr.k, cap)
    if isinstance(expr, SkewOf):
        base = _compile(expr.base, cap, base_dir)
        if isinstance(expr.endo, NamedEndo):
            if expr.endo.name == "id":
                alpha = construct.identity_endo(base)
            else:
                alpha = construct.frobenius_endo(base)
        else:
            path = Path(expr.endo.path)
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            alpha = construct.endomorphism_from_file(base, path, f"@{expr.endo.path}")
        return construct.build_truncated_skew_poly(base, alpha, expr.k, cap)
    raise TypeError(f"not a ring expression: {expr!r}")


def compile_text(text: str, cap: int | None = None, base_dir: Path | None = None) -> TableRing:
    return compile_expr(parse(text), cap, base_dir)
