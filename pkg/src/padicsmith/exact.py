"""Exact integer and p-adic primitives shared by the rest of the package.

Everything here is exact by contract: Python ints and fractions.Fraction
only.  No floating point, no numpy.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class MatrixParseError(ValueError):
    """Malformed matrix input; the message carries line/entry diagnostics."""


class UnsupportedSizeError(ValueError):
    """An algorithm intended for small matrices was asked for a large one."""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would exceed its work budget."""


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    """Deterministic primality by trial division (desk-scale inputs)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")


class _Infinity:
    """The valuation of zero.

    A dedicated type rather than a sentinel int so that accidental
    arithmetic comparisons against real valuations cannot go quietly
    wrong.  Compares strictly greater than every int and Fraction,
    equal only to itself.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Infinity)

    def __hash__(self) -> int:
        return hash("padicsmith.INFINITY")

    def _comparable(self, other: object) -> bool:
        return isinstance(other, (int, Fraction, _Infinity))

    def __lt__(self, other: object) -> bool:
        if not self._comparable(other):
            return NotImplemented
        return False

    def __le__(self, other: object) -> bool:
        if not self._comparable(other):
            return NotImplemented
        return isinstance(other, _Infinity)

    def __gt__(self, other: object) -> bool:
        if not self._comparable(other):
            return NotImplemented
        return not isinstance(other, _Infinity)

    def __ge__(self, other: object) -> bool:
        if not self._comparable(other):
            return NotImplemented
        return True

    def __add__(self, other: object):
        if not self._comparable(other):
            return NotImplemented
        return self

    __radd__ = __add__

    def __sub__(self, other: object):
        if isinstance(other, _Infinity):
            raise ArithmeticError("INFINITY - INFINITY is undefined")
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self

    def __reduce__(self):
        return (_infinity_instance, ())


def _infinity_instance() -> "_Infinity":
    return INFINITY


INFINITY = _Infinity()

#: A p-adic valuation: a plain int, or INFINITY for the valuation of zero.
Valuation = int | _Infinity


def val_p(a: int, p: int) -> Valuation:
    """Largest k with p**k dividing a, or INFINITY for a == 0.

    Examples:
        >>> val_p(40952, 2)
        3
        >>> val_p(-27, 3)
        3
        >>> val_p(0, 5)
        INFINITY
    """
    _require_prime(p)
    if a == 0:
        return INFINITY
    a = abs(a)
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def val_p_rat(q: Fraction | int, p: int) -> Valuation:
    """p-adic valuation extended to rationals: val(a/b) = val(a) - val(b)."""
    _require_prime(p)
    q = Fraction(q)
    if q == 0:
        return INFINITY
    num = val_p(q.numerator, p)
    den = val_p(q.denominator, p)
    assert isinstance(num, int) and isinstance(den, int)
    return num - den


@dataclass(frozen=True)
class IntMatrix:
    """A square integer matrix, immutable, entries stored row-major."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"matrix dimension must be >= 1, got {self.n}")
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError(f"expected {self.n} rows of {self.n} entries")
        for r in self.rows:
            for x in r:
                if type(x) is not int:
                    raise ValueError(f"entries must be int, got {x!r}")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        """Build from any iterable of iterables of ints."""
        tup = tuple(tuple(r) for r in rows)
        return cls(len(tup), tup)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls(n, tuple((0,) * n for _ in range(n)))

    @classmethod
    def diagonal(cls, entries) -> "IntMatrix":
        ent = tuple(int(x) for x in entries)
        n = len(ent)
        return cls(n, tuple(tuple(ent[i] if i == j else 0 for j in range(n)) for i in range(n)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        n = self.n
        cols = list(zip(*other.rows))
        return IntMatrix(
            n,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            ),
        )

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_text(self) -> str:
        """Serialize to the plain text wire format (dimension line, then rows)."""
        lines = [str(self.n)]
        lines.extend(" ".join(str(x) for x in r) for r in self.rows)
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "entries": self.to_lists()}


MatrixLike = IntMatrix | Sequence[Sequence[int]]


def _as_matrix(A: MatrixLike) -> IntMatrix:
    """Pass an IntMatrix through; build one from nested rows otherwise."""
    if isinstance(A, IntMatrix):
        return A
    if isinstance(A, str):
        raise ValueError("got a string where a matrix was expected; parse_matrix reads the wire formats")
    return IntMatrix.from_rows(A)


def parse_matrix(text: str) -> IntMatrix:
    """Parse a matrix from either wire format.

    Plain text: first non-blank line is the dimension n, followed by n
    lines of n whitespace-separated integers.  JSON: an object with keys
    "n" and "entries".  The format is auto-detected from the first
    non-whitespace character.  Raises MatrixParseError with line/entry
    diagnostics on malformed input.
    """
    stripped = text.lstrip()
    if not stripped:
        raise MatrixParseError("empty input")
    if stripped[0] in "{[":
        return _parse_matrix_json(text)
    return _parse_matrix_text(text)


def _parse_matrix_json(text: str) -> IntMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
        raise MatrixParseError('JSON matrix must be an object with keys "n" and "entries"')
    n, entries = obj["n"], obj["entries"]
    if not isinstance(n, int) or n < 1:
        raise MatrixParseError(f'"n" must be a positive integer, got {n!r}')
    if not isinstance(entries, list) or len(entries) != n:
        raise MatrixParseError(f'"entries" must be a list of {n} rows')
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixParseError(f"row {i + 1}: expected {n} entries")
        for j, x in enumerate(row):
            if type(x) is not int:
                raise MatrixParseError(f"row {i + 1}, entry {j + 1}: not an integer: {x!r}")
    return IntMatrix.from_rows(entries)


def _parse_matrix_text(text: str) -> IntMatrix:
    numbered = [(i + 1, line) for i, line in enumerate(text.splitlines()) if line.strip()]
    if not numbered:
        raise MatrixParseError("empty input")
    header_no, header = numbered[0]
    tokens = header.split()
    if len(tokens) != 1:
        raise MatrixParseError(f"line {header_no}: expected a single dimension, found {len(tokens)} tokens")
    try:
        n = int(tokens[0])
    except ValueError:
        raise MatrixParseError(f"line {header_no}: dimension is not an integer: {tokens[0]!r}") from None
    if n < 1:
        raise MatrixParseError(f"line {header_no}: dimension must be >= 1, got {n}")
    body = numbered[1:]
    if len(body) != n:
        raise MatrixParseError(f"expected {n} matrix rows, found {len(body)}")
    rows = []
    for line_no, line in body:
        toks = line.split()
        if len(toks) != n:
            raise MatrixParseError(f"line {line_no}: expected {n} entries, found {len(toks)}")
        row = []
        for j, tok in enumerate(toks):
            try:
                row.append(int(tok))
            except ValueError:
                raise MatrixParseError(f"line {line_no}, entry {j + 1}: not an integer: {tok!r}") from None
        rows.append(row)
    return IntMatrix.from_rows(rows)


def rem_pm(A: MatrixLike, p: int, m: int) -> IntMatrix:
    """Entrywise unique non-negative remainder modulo p**m."""
    A = _as_matrix(A)
    _require_prime(p)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    q = p**m
    return IntMatrix(A.n, tuple(tuple(x % q for x in r) for r in A.rows))


def det(A: MatrixLike) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    return _det_rows([list(r) for r in _as_matrix(A).rows])


def _det_rows(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = None
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def rank(A: MatrixLike) -> int:
    """Rank over the rationals, by exact integer elimination with full pivoting."""
    from math import gcd

    A = _as_matrix(A)
    a = [list(row) for row in A.rows]
    n = A.n
    r = 0
    while r < n:
        # locate any nonzero entry in the trailing submatrix, row-major
        pos = None
        for i in range(r, n):
            for j in range(r, n):
                if a[i][j]:
                    pos = (i, j)
                    break
            if pos:
                break
        if pos is None:
            break
        i0, j0 = pos
        if i0 != r:
            a[r], a[i0] = a[i0], a[r]
        if j0 != r:
            for row in a:
                row[r], row[j0] = row[j0], row[r]
        piv = a[r][r]
        for i in range(r + 1, n):
            f = a[i][r]
            if f:
                a[i] = [x * piv - f * y for x, y in zip(a[i], a[r])]
                g = 0
                for x in a[i]:
                    g = gcd(g, x)
                if g > 1:
                    a[i] = [x // g for x in a[i]]
        r += 1
    return r


def valuation_to_json(v: Valuation) -> int | str:
    """JSON rendering of a valuation: plain int, or the string "inf"."""
    return "inf" if isinstance(v, _Infinity) else v


def fraction_to_json(q: Fraction) -> str:
    """JSON rendering of an exact rational as "num/den"."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"
