"""Characteristic polynomials of integer matrices, exactly and division-free.

Coefficients follow the reversed-index convention used throughout the
package: det(xI - A) = x^n + f_1 x^(n-1) + ... + f_n, so f_n is
(-1)^n det(A) and f_i vanishes for i beyond the rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact import MatrixLike, UnsupportedSizeError, _as_matrix, _det_rows

ORACLE_MAX_N = 5


@dataclass(frozen=True)
class CharPoly:
    """Coefficients (f_1, ..., f_n) of det(xI - A), leading term implicit."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(self.coeffs)}")

    def f(self, i: int) -> int:
        """Coefficient of x^(n-i), 1-based."""
        if not 1 <= i <= self.n:
            raise IndexError(f"coefficient index {i} out of range 1..{self.n}")
        return self.coeffs[i - 1]

    @property
    def last_nonzero_index(self) -> int:
        """Largest i with f_i != 0, or 0 when every coefficient vanishes."""
        for i in range(self.n, 0, -1):
            if self.coeffs[i - 1]:
                return i
        return 0

    def to_json_obj(self) -> list[int]:
        """Monic coefficient list [1, f_1, ..., f_n], highest degree first."""
        return [1, *self.coeffs]


def _berkowitz(rows: list[list[int]] | tuple[tuple[int, ...], ...]) -> list[int]:
    """Monic coefficient vector [1, f_1, ..., f_n] of det(xI - A), no divisions.

    Iterates the Berkowitz recurrence from the trailing 1x1 principal
    submatrix outward: each step multiplies the previous coefficient
    vector by a Toeplitz matrix whose column is built from the Krylov
    products R M^j C of the current bordering row and column.
    """
    n = len(rows)
    vec = [1, -rows[n - 1][n - 1]]
    for k in range(2, n + 1):
        top = n - k
        pivot = rows[top][top]
        R = rows[top][top + 1:]
        C = [rows[i][top] for i in range(top + 1, n)]
        width = k - 1
        toep = [1, -pivot]
        w = list(C)
        for j in range(2, k + 1):
            toep.append(-sum(R[i] * w[i] for i in range(width)))
            if j < k:
                w = [
                    sum(rows[top + 1 + i][top + 1 + l] * w[l] for l in range(width))
                    for i in range(width)
                ]
        new = []
        for i in range(k + 1):
            acc = 0
            for j in range(max(0, i - k), min(i, k - 1) + 1):
                acc += toep[i - j] * vec[j]
            new.append(acc)
        vec = new
    return vec


def char_poly(A: MatrixLike) -> CharPoly:
    """Characteristic polynomial of A by the Berkowitz method, O(n^4) exact."""
    A = _as_matrix(A)
    monic = _berkowitz(A.rows)
    return CharPoly(n=A.n, coeffs=tuple(monic[1:]))


def char_poly_minor_oracle(A: MatrixLike) -> CharPoly:
    """Independent charpoly: f_i = (-1)^i times the sum of principal i x i minors.

    Exponential in n, meant purely as a cross-check; refuses n > 5.
    """
    A = _as_matrix(A)
    n = A.n
    if n > ORACLE_MAX_N:
        raise UnsupportedSizeError(f"minor oracle is limited to n <= {ORACLE_MAX_N}, got {n}")
    coeffs = []
    for i in range(1, n + 1):
        total = 0
        for sel in combinations(range(n), i):
            sub = [[A.rows[r][c] for c in sel] for r in sel]
            total += _det_rows(sub)
        coeffs.append(-total if i % 2 else total)
    return CharPoly(n=n, coeffs=tuple(coeffs))
