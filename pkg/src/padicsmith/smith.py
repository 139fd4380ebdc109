"""Smith normal form over the integers and its p-local valuation profiles.

The elimination keeps the divisibility chain as it goes: once a pivot is
settled it divides every entry of the trailing submatrix, so the diagonal
comes out canonical (non-negative, each factor dividing the next) without
a separate fix-up pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .exact import (
    INFINITY,
    IntMatrix,
    MatrixLike,
    UnsupportedSizeError,
    _as_matrix,
    _det_rows,
    _require_prime,
    rem_pm,
    val_p,
)

# Minor-GCD determinantal divisors are combinatorial (sum over C(n,i)^2
# submatrices); past this size they stop being a sane cross-check.
MINOR_ORACLE_MAX_N = 5


@dataclass(frozen=True)
class SmithData:
    """Result of a Smith decomposition P @ A @ Q == diag(s), unimodular P, Q."""

    n: int
    diag: tuple[int, ...]
    P: IntMatrix | None = None
    Q: IntMatrix | None = None

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """The nonzero diagonal entries s_1 | s_2 | ... | s_r."""
        return tuple(d for d in self.diag if d)

    @property
    def dets(self) -> tuple[int, ...]:
        """Determinantal divisors as cumulative products of invariant factors."""
        out = []
        acc = 1
        for s in self.invariant_factors:
            acc *= s
            out.append(acc)
        return tuple(out)

    def to_json_obj(self) -> dict:
        return {
            "s": list(self.invariant_factors),
            "delta": list(self.dets),
            "P": self.P.to_lists() if self.P is not None else None,
            "Q": self.Q.to_lists() if self.Q is not None else None,
        }


@dataclass(frozen=True)
class LocalSmithProfile:
    """Valuations (e_1 <= ... <= e_r) of the invariant factors at a prime p."""

    p: int
    exponents: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def total(self) -> int:
        """Sum of exponents; equals val_p(det) for a nonsingular matrix."""
        return sum(self.exponents)


def smith_form(A: MatrixLike, want_transforms: bool = False) -> SmithData:
    """Canonical Smith normal form of A, optionally with the unimodular pair.

    Pivots are chosen as the smallest nonzero absolute value in the
    trailing submatrix, ties broken row-major.  With want_transforms the
    returned P, Q satisfy P @ A @ Q == diag(s) and det P, det Q == +-1.
    """
    A = _as_matrix(A)
    n = A.n
    a = A.to_lists()
    P = IntMatrix.identity(n).to_lists() if want_transforms else None
    Q = IntMatrix.identity(n).to_lists() if want_transforms else None

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        if P is not None:
            P[i], P[j] = P[j], P[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        if Q is not None:
            for row in Q:
                row[i], row[j] = row[j], row[i]

    def row_sub(i: int, j: int, q: int) -> None:
        # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        if P is not None:
            P[i] = [x - q * y for x, y in zip(P[i], P[j])]

    def col_sub(i: int, j: int, q: int) -> None:
        # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        if Q is not None:
            for row in Q:
                row[i] -= q * row[j]

    def row_add(i: int, j: int) -> None:
        a[i] = [x + y for x, y in zip(a[i], a[j])]
        if P is not None:
            P[i] = [x + y for x, y in zip(P[i], P[j])]

    for t in range(n):
        while True:
            # smallest nonzero |entry| in the trailing submatrix, row-major ties
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    v = abs(a[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                break
            _, bi, bj = best
            if bi != t:
                swap_rows(t, bi)
            if bj != t:
                swap_cols(t, bj)
            piv = a[t][t]
            changed = False
            for i in range(t + 1, n):
                if a[i][t]:
                    row_sub(i, t, a[i][t] // piv)
                    if a[i][t]:
                        changed = True
            for j in range(t + 1, n):
                if a[t][j]:
                    col_sub(j, t, a[t][j] // piv)
                    if a[t][j]:
                        changed = True
            if changed:
                continue
            # row and column are clear; make the pivot divide the rest
            witness = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j] % piv:
                        witness = i
                        break
                if witness is not None:
                    break
            if witness is None:
                break
            row_add(t, witness)
        if a[t][t] == 0:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if P is not None:
                P[t] = [-x for x in P[t]]

    diag = tuple(a[i][i] for i in range(n))
    return SmithData(
        n=n,
        diag=diag,
        P=IntMatrix.from_rows(P) if P is not None else None,
        Q=IntMatrix.from_rows(Q) if Q is not None else None,
    )


def _minor_gcd_dets(A: IntMatrix) -> tuple[int, ...]:
    """Determinantal divisors straight from the definition: gcd of all i x i minors."""
    n = A.n
    if n > MINOR_ORACLE_MAX_N:
        raise UnsupportedSizeError(f"minor-GCD route is limited to n <= {MINOR_ORACLE_MAX_N}, got {n}")
    out = []
    idx = range(n)
    for size in range(1, n + 1):
        g = 0
        for rows_sel in combinations(idx, size):
            for cols_sel in combinations(idx, size):
                sub = [[A.rows[i][j] for j in cols_sel] for i in rows_sel]
                g = gcd(g, _det_rows(sub))
                # gcd 1 cannot shrink further; skip the remaining minors
            if g == 1:
                break
        if g == 0:
            break
        out.append(g)
    return tuple(out)


def determinantal_divisors(A: MatrixLike) -> tuple[int, ...]:
    """Positive gcds of all i x i minors, i = 1..rank.

    Computed from the invariant factor products; for n <= 5 the
    minor-GCD definition is evaluated independently and the two routes
    are required to agree.
    """
    A = _as_matrix(A)
    via_smith = smith_form(A).dets
    if A.n <= MINOR_ORACLE_MAX_N:
        via_minors = _minor_gcd_dets(A)
        if via_minors != via_smith:
            raise AssertionError(
                f"determinantal divisor routes disagree: minors {via_minors} vs products {via_smith}"
            )
    return via_smith


def local_profile(A: MatrixLike, p: int) -> LocalSmithProfile:
    """Valuations of the invariant factors of A at p."""
    _require_prime(p)
    exps = []
    for s in smith_form(A).invariant_factors:
        v = val_p(s, p)
        assert v is not INFINITY
        exps.append(v)
    return LocalSmithProfile(p=p, exponents=tuple(exps))


def smith_profile_mod_pm(A: MatrixLike, p: int, m: int) -> LocalSmithProfile:
    """Smith profile of A over Z/p^m Z.

    Reduces A entrywise mod p^m, takes the integer Smith form of the
    representative, and keeps the exponents below m; diagonal entries
    with valuation >= m are zero in the quotient ring and drop out, so
    the ring rank can be smaller than the integer rank.
    """
    _require_prime(p)
    full = local_profile(rem_pm(A, p, m), p)
    kept = tuple(e for e in full.exponents if e < m)
    return LocalSmithProfile(p=p, exponents=kept)
