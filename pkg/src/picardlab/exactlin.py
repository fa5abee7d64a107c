"""Exact integer linear algebra.

Everything here works on Python integers, but results are bounded to the
signed 64-bit range: any intermediate value outside it raises
:class:`IntegerOverflow` instead of silently growing or wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

INT_MAX = 2**63 - 1


class IntegerOverflow(OverflowError):
    """An exact computation left the signed 64-bit range."""


def _chk(x: int) -> int:
    if x > INT_MAX or x < -INT_MAX:
        raise IntegerOverflow(f"integer {x} exceeds the 64-bit range")
    return x


def _chk_row(row: list[int]) -> list[int]:
    for x in row:
        if x > INT_MAX or x < -INT_MAX:
            raise IntegerOverflow(f"integer {x} exceeds the 64-bit range")
    return row


class IntMatrix:
    """Immutable dense integer matrix."""

    __slots__ = ("_rows", "shape")

    def __init__(self, entries: Iterable[Iterable[int]] = (), cols: int | None = None):
        if isinstance(entries, np.ndarray):
            if entries.ndim != 2:
                raise ValueError("IntMatrix needs a 2-d array")
            cols = entries.shape[1] if cols is None else cols
            entries = entries.tolist()
        rows = tuple(tuple(_chk(int(x)) for x in r) for r in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"expected {cols} columns, got {width}")
            cols = width
        elif cols is None:
            cols = 0
        self._rows = rows
        self.shape = (len(rows), cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, r: int, c: int) -> IntMatrix:
        return cls([[0] * c for _ in range(r)], cols=c)

    @classmethod
    def diag(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self._rows[i][j]
        return self._rows[idx]

    def __iter__(self):
        return iter(self._rows)

    def __len__(self) -> int:
        return self.shape[0]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def to_numpy(self) -> np.ndarray:
        return np.array(self._rows, dtype=np.int64).reshape(self.shape)

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows), cols=self.rows) if self.rows else IntMatrix.zeros(self.cols, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-x for x in r] for r in self._rows], cols=self.cols)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], cols=self.cols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._rows)) if other.rows else [()] * other.cols
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows],
            cols=other.cols,
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(_chk(sum(a * b for a, b in zip(r, v))) for r in self._rows)

    def trace(self) -> int:
        return sum(self._rows[i][i] for i in range(min(self.shape)))

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det(self.tolist())

    def vstack(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return IntMatrix(self._rows + other._rows, cols=self.cols)


def bareiss_det(a: list[list[int]]) -> int:
    """Fraction-free determinant; ``a`` is consumed."""
    n = len(a)
    if n == 0:
        return 1
    a = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _chk((a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _combine(A, i, k, x, y, u, v):
    """Rows i, k <- x*row_i + y*row_k, u*row_i + v*row_k."""
    ri, rk = A[i], A[k]
    A[i] = _chk_row([x * a + y * b for a, b in zip(ri, rk)])
    A[k] = _chk_row([u * a + v * b for a, b in zip(ri, rk)])


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite form: returns (H, U) with U unimodular and U @ m == H.

    Pivots are positive, entries above a pivot lie in [0, pivot), zero rows
    are at the bottom.
    """
    R, C = m.shape
    A = m.tolist()
    U = IntMatrix.identity(R).tolist()
    p = 0
    for j in range(C):
        if p == R:
            break
        for i in range(p + 1, R):
            b = A[i][j]
            if b == 0:
                continue
            a = A[p][j]
            g, x, y = _xgcd(a, b)
            u, v = -b // g, a // g
            _combine(A, p, i, x, y, u, v)
            _combine(U, p, i, x, y, u, v)
        piv = A[p][j]
        if piv == 0:
            continue
        if piv < 0:
            A[p] = [-t for t in A[p]]
            U[p] = [-t for t in U[p]]
            piv = -piv
        for i in range(p):
            q = A[i][j] // piv
            if q:
                A[i] = _chk_row([a - q * b for a, b in zip(A[i], A[p])])
                U[i] = _chk_row([a - q * b for a, b in zip(U[i], U[p])])
        p += 1
    return IntMatrix(A, cols=C), IntMatrix(U, cols=R)


@dataclass(frozen=True)
class SmithForm:
    """Smith normal form ``left @ m @ right == diag(invariants)`` (zero padded)."""

    invariants: tuple[int, ...]
    left_transform: IntMatrix
    right_transform: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariants if d)

    def diagonal(self) -> IntMatrix:
        r, c = self.left_transform.rows, self.right_transform.rows
        rows = [[0] * c for _ in range(r)]
        for i, d in enumerate(self.invariants):
            rows[i][i] = d
        return IntMatrix(rows, cols=c)


def smith_normal_form(m: IntMatrix) -> SmithForm:
    R, C = m.shape
    A = m.tolist()
    L = IntMatrix.identity(R).tolist()
    # right transform kept transposed so column ops become row ops
    Rt = IntMatrix.identity(C).tolist()

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        L[i], L[k] = L[k], L[i]

    def swap_cols(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        Rt[j], Rt[k] = Rt[k], Rt[j]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        A[dst] = _chk_row([a - q * b for a, b in zip(A[dst], A[src])])
        L[dst] = _chk_row([a - q * b for a, b in zip(L[dst], L[src])])

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in A:
            row[dst] = _chk(row[dst] - q * row[src])
        Rt[dst] = _chk_row([a - q * b for a, b in zip(Rt[dst], Rt[src])])

    for t in range(min(R, C)):
        best = None
        for i in range(t, R):
            for j in range(t, C):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            moved = False
            for i in range(t + 1, R):
                if A[i][t]:
                    add_row(i, t, A[i][t] // A[t][t])
                    if A[i][t]:
                        swap_rows(t, i)
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, C):
                if A[t][j]:
                    add_col(j, t, A[t][j] // A[t][t])
                    if A[t][j]:
                        swap_cols(t, j)
                        moved = True
                        break
            if moved:
                continue
            piv = A[t][t]
            bad = next(
                (i for i in range(t + 1, R) for j in range(t + 1, C) if A[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            L[t] = [-x for x in L[t]]

    inv = tuple(A[i][i] for i in range(min(R, C)))
    return SmithForm(inv, IntMatrix(L, cols=R), IntMatrix(Rt, cols=C).T)


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Saturated basis (as rows, in Hermite form) of {x : m @ x == 0}."""
    n = m.cols
    if m.rows == 0:
        return IntMatrix.identity(n)
    H, U = hermite_normal_form(m.T)
    rank = sum(1 for row in H if any(row))
    ker = IntMatrix(U.tolist()[rank:], cols=n)
    if ker.rows == 0:
        return ker
    Hk, _ = hermite_normal_form(ker)
    return IntMatrix([r for r in Hk if any(r)], cols=n)


def solve_integer(m: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """One integer solution of m @ x == b, or None when there is none."""
    snf = smith_normal_form(m)
    c = snf.left_transform.apply(b)
    y = [0] * m.cols
    for i, ci in enumerate(c):
        d = snf.invariants[i] if i < len(snf.invariants) else 0
        if d == 0:
            if ci:
                return None
        elif ci % d:
            return None
        else:
            y[i] = ci // d
    return snf.right_transform.apply(y)


def rank(m: IntMatrix) -> int:
    H, _ = hermite_normal_form(m)
    return sum(1 for row in H if any(row))


# --------------------------------------------------------------------------
# polynomials


class IntPolynomial:
    """Polynomial in t with integer coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> IntPolynomial:
        return cls([0] * k + [a])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(_chk(x + y) for x, y in zip(a, b))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(_chk(x) for x in out)

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod_monic(self, d: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        if not d.is_monic():
            raise ValueError("divisor must be monic")
        r = list(self.coeffs)
        dd = d.degree
        if len(r) - 1 < dd:
            return IntPolynomial(), IntPolynomial(r)
        q = [0] * (len(r) - dd)
        for k in range(len(r) - 1 - dd, -1, -1):
            c = r[k + dd]
            q[k] = c
            if c:
                for i, a in enumerate(d.coeffs):
                    r[k + i] = _chk(r[k + i] - c * a)
        return IntPolynomial(q), IntPolynomial(r[:dd])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or k == 0) else ""
            body = body + mono if body and mono else (body or mono)
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def char_poly(m: IntMatrix) -> IntPolynomial:
    """det(t*I - m) by the Faddeev-LeVerrier recurrence (exact divisions)."""
    if m.rows != m.cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    A = m.tolist()
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        # M <- A @ M + c_prev * I
        M = [
            [_chk(sum(A[i][l] * M[l][j] for l in range(n)) + (c_prev if i == j else 0)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(A[i][l] * M[l][i] for i in range(n) for l in range(n))
        if tr % k:
            raise ArithmeticError("inexact division in Faddeev-LeVerrier")
        coeffs[n - k] = _chk(-tr // k)
    return IntPolynomial(coeffs)


def char_poly_batch(mats: np.ndarray) -> np.ndarray:
    """Characteristic polynomials of a stack of square int matrices.

    Returns an (N, n+1) int64 array of coefficients, constant term first.
    """
    mats = np.asarray(mats, dtype=np.int64)
    N, n, _ = mats.shape
    coeffs = np.zeros((N, n + 1), dtype=np.int64)
    coeffs[:, n] = 1
    M = np.zeros_like(mats)
    eye = np.eye(n, dtype=np.int64)
    amax = max(1, int(np.abs(mats).max(initial=1)))
    for k in range(1, n + 1):
        mmax = int(np.abs(M).max(initial=0))
        cmax = int(np.abs(coeffs[:, n - k + 1]).max(initial=0))
        if n * amax * (n * amax * mmax + cmax) >= 2**62:
            raise IntegerOverflow("characteristic polynomial batch overflow")
        M = mats @ M + coeffs[:, n - k + 1, None, None] * eye
        tr = np.einsum("nij,nji->n", mats, M)
        if np.any(tr % k):
            raise ArithmeticError("inexact division in Faddeev-LeVerrier")
        coeffs[:, n - k] = -tr // k
    return coeffs


def totient(n: int) -> int:
    result, p, m = n, 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    p = IntPolynomial.monomial(d) - IntPolynomial([1])
    for e in divisors(d)[:-1]:
        p, r = p.divmod_monic(cyclotomic(e))
        assert r == 0
    return p


@dataclass(frozen=True)
class CycloFactorization:
    """Product of cyclotomic powers times a leftover polynomial.

    ``factors`` holds (index, multiplicity) pairs, largest index first.
    """

    factors: tuple[tuple[int, int], ...]
    remainder: IntPolynomial = IntPolynomial([1])

    @classmethod
    def from_dict(cls, mult: dict[int, int], remainder: IntPolynomial | None = None) -> CycloFactorization:
        f = tuple(sorted(((d, m) for d, m in mult.items() if m), reverse=True))
        return cls(f, IntPolynomial([1]) if remainder is None else remainder)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def degree(self) -> int:
        return sum(m * totient(d) for d, m in self.factors) + self.remainder.degree

    def expand(self) -> IntPolynomial:
        out = self.remainder
        for d, m in self.factors:
            out = out * cyclotomic(d) ** m
        return out

    def __str__(self) -> str:
        parts = [f"Phi{d}" + (f"^{m}" if m > 1 else "") for d, m in self.factors]
        if self.remainder != 1:
            parts.append(f"({self.remainder})")
        return "*".join(parts) or "1"


def cyclo_factorize(p: IntPolynomial, candidate_indices: Iterable[int]) -> CycloFactorization:
    """Greedily strip cyclotomic factors Phi_d, d in the candidate set."""
    if not p.is_monic():
        raise ValueError("cyclo_factorize needs a monic polynomial")
    mult: dict[int, int] = {}
    for d in sorted(set(candidate_indices), reverse=True):
        phi = cyclotomic(d)
        while p.degree >= phi.degree:
            q, r = p.divmod_monic(phi)
            if r != 0:
                break
            p = q
            mult[d] = mult.get(d, 0) + 1
    return CycloFactorization.from_dict(mult, p)
