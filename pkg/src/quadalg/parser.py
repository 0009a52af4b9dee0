"""Line-oriented presentation file format.

    field Q            (or: field GF 5)
    algebra Sym2
    gens x y
    rel x*y - y*x
    rel 2*x*x + 1/3*y*y

Blank lines and lines starting with ``#`` are ignored.  A term is an
optional coefficient (integer or ``a/b``) followed by exactly two
generators, all joined by ``*``.  ``unparse`` emits the canonical relation
basis, so ``parse(unparse(A))`` reproduces A exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, PrimeField
from .linalg import Subspace
from .presentations import QuadraticPresentation


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _column_of(raw: str, token: str) -> int:
    pos = raw.find(token)
    return pos + 1 if pos >= 0 else 1


def parse(text: str):
    """Parse to (algebra name, QuadraticPresentation)."""
    field = None
    name = None
    labels = None
    rel_rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        keyword = parts[0]
        if keyword == "field":
            if field is not None:
                raise ParseError("duplicate field line", lineno)
            field = _parse_field(parts[1:], lineno, raw)
        elif keyword == "algebra":
            if len(parts) != 2:
                raise ParseError("expected: algebra <name>", lineno)
            name = parts[1]
        elif keyword == "gens":
            if labels is not None:
                raise ParseError("duplicate gens line", lineno)
            if len(parts) == 1:
                raise ParseError("empty generator list", lineno)
            labels = tuple(parts[1:])
            if len(set(labels)) != len(labels):
                raise ParseError("repeated generator name", lineno)
        elif keyword == "rel":
            if field is None or labels is None:
                raise ParseError("rel before field/gens", lineno)
            rel_rows.append(_parse_relation(parts[1:], field, labels,
                                            lineno, raw))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno,
                             _column_of(raw, keyword))
    if field is None:
        raise ParseError("missing field line", 1)
    if labels is None:
        raise ParseError("missing gens line", 1)
    n = len(labels)
    R = Subspace.span(field, rel_rows, n * n)
    return name or "unnamed", QuadraticPresentation(field, labels, R)


def _parse_field(parts, lineno, raw):
    if parts == ["Q"]:
        return QQ
    if len(parts) == 2 and parts[0] == "GF":
        try:
            p = int(parts[1])
        except ValueError:
            raise ParseError(f"bad modulus {parts[1]!r}", lineno,
                             _column_of(raw, parts[1])) from None
        try:
            return PrimeField(p)
        except ValueError:
            raise ParseError(f"modulus {p} is not prime", lineno,
                             _column_of(raw, parts[1])) from None
    raise ParseError("expected: field Q | field GF <p>", lineno)


def _parse_relation(tokens, field, labels, lineno, raw):
    n = len(labels)
    index = {s: i for i, s in enumerate(labels)}
    row = [field.zero] * (n * n)
    sign = 1
    expect_term = True
    for tok in tokens:
        if tok in ("+", "-"):
            if expect_term:
                raise ParseError("two signs in a row", lineno,
                                 _column_of(raw, tok))
            sign = 1 if tok == "+" else -1
            expect_term = True
            continue
        if not expect_term:
            raise ParseError("missing + or - between terms", lineno,
                             _column_of(raw, tok))
        coeff, a, b = _parse_term(tok, index, lineno, raw)
        if sign < 0:
            coeff = -coeff
        pos = a * n + b
        row[pos] = field.add(row[pos], field.coerce(coeff))
        expect_term = False
    if expect_term:
        raise ParseError("empty or dangling relation", lineno)
    return row


def _parse_term(tok, index, lineno, raw):
    pieces = tok.split("*")
    coeff = Fraction(1)
    if pieces and _is_coefficient(pieces[0]):
        coeff = _as_fraction(pieces[0], lineno, raw)
        pieces = pieces[1:]
    if len(pieces) != 2:
        raise ParseError(f"term {tok!r} is not a quadratic word", lineno,
                         _column_of(raw, tok))
    for g in pieces:
        if g not in index:
            raise ParseError(f"unknown generator {g!r}", lineno,
                             _column_of(raw, g))
    return coeff, index[pieces[0]], index[pieces[1]]


def _is_coefficient(piece: str) -> bool:
    head = piece[1:] if piece[:1] == "-" else piece
    return bool(head) and all(ch.isdigit() or ch == "/" for ch in head)


def _as_fraction(piece, lineno, raw):
    try:
        return Fraction(piece)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient {piece!r}", lineno,
                         _column_of(raw, piece)) from None


def _format_coeff(field, c) -> str:
    return str(c)


def unparse(name: str, A: QuadraticPresentation) -> str:
    """Canonical text form; parses back to an equal presentation."""
    lines = []
    if A.field == QQ:
        lines.append("field Q")
    else:
        lines.append(f"field GF {A.field.p}")
    lines.append(f"algebra {name}")
    lines.append("gens " + " ".join(A.labels))
    n = A.n
    for r in range(A.R.dim):
        terms = []
        for pos in range(n * n):
            c = A.R.basis.entry(r, pos)
            if A.field.is_zero(c):
                continue
            word = f"{A.labels[pos // n]}*{A.labels[pos % n]}"
            terms.append((c, word))
        parts = []
        for k, (c, word) in enumerate(terms):
            negative = (not isinstance(A.field, PrimeField)) and c < 0
            mag = -c if negative else c
            body = word if mag == 1 else f"{_format_coeff(A.field, mag)}*{word}"
            if k == 0:
                # a leading negative rides along as a signed coefficient
                parts.append(f"{_format_coeff(A.field, c)}*{word}"
                             if negative else body)
            else:
                parts.append("- " + body if negative else "+ " + body)
        lines.append("rel " + " ".join(parts))
    return "\n".join(lines) + "\n"
