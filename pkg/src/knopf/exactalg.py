"""Exact scalars and dense linear algebra over Q and F_p.

Scalars are `fractions.Fraction` over Q (always in lowest terms, positive
denominator) and canonical representatives 0..p-1 (Python/int64) over F_p.
Matrices are numpy arrays: dtype=object holding Fractions over Q, dtype=int64
over F_p with reduction mod p after every operation.  There are no tolerances
anywhere; a pivot is the first nonzero entry, full stop.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import InputError

# int64 safety: row operations form sums of at most ~10^5 products < p^2,
# so p is capped far below overflow.
_MAX_PRIME = 1 << 20


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """The coefficient field: Q (p is None) or F_p for a prime p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if not isinstance(p, int) or not _is_prime(p) or p > _MAX_PRIME:
                raise InputError(f"modulus must be a prime < 2^20, got {p!r}")
        self.p = p

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return self.p or 0

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.p))

    def __repr__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    # -- scalars ---------------------------------------------------------

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def coerce(self, x):
        """Coerce an int/str/Fraction into a canonical scalar of this field."""
        if self.p is not None:
            if isinstance(x, str):
                x = int(x, 10)
            if isinstance(x, (int, np.integer)):
                return int(x) % self.p
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise InputError(f"{x} has no image in F_{self.p}")
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            raise InputError(f"cannot coerce {x!r} into F_{self.p}")
        if isinstance(x, str):
            try:
                return Fraction(x)
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad rational literal {x!r}") from exc
        if isinstance(x, (int, np.integer)):
            return Fraction(int(x))
        if isinstance(x, Fraction):
            return x
        raise InputError(f"cannot coerce {x!r} into Q")

    def fmt(self, x):
        """Serialize a scalar: F_p as int, Q as 'a' or 'a/b'."""
        if self.p is not None:
            return int(x) % self.p
        x = self.coerce(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def inv(self, x):
        if self.p is not None:
            x = int(x) % self.p
            if x == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(x, -1, self.p)
        x = self.coerce(x)
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return Fraction(1) / x

    def neg(self, x):
        if self.p is not None:
            return (-int(x)) % self.p
        return -self.coerce(x)

    # -- arrays ----------------------------------------------------------

    @property
    def dtype(self):
        return np.int64 if self.p is not None else object

    def asarray(self, data) -> np.ndarray:
        """Nested lists (ints/strings/Fractions) to a canonical array."""
        if self.p is not None:
            arr = np.asarray(data)
            if arr.dtype.kind not in "iu":
                flat = [self.coerce(v) for v in np.asarray(data, dtype=object).reshape(-1)]
                arr = np.array(flat, dtype=np.int64).reshape(arr.shape)
            return arr.astype(np.int64) % self.p
        arr = np.empty(np.shape(data), dtype=object)
        flat = np.asarray(data, dtype=object).reshape(-1)
        arr.reshape(-1)[:] = [self.coerce(v) for v in flat]
        return arr

    def zeros(self, shape) -> np.ndarray:
        if self.p is not None:
            return np.zeros(shape, dtype=np.int64)
        arr = np.empty(shape, dtype=object)
        arr.reshape(-1)[:] = [Fraction(0)] * arr.size
        return arr

    def eye(self, n: int) -> np.ndarray:
        arr = self.zeros((n, n))
        for i in range(n):
            arr[i, i] = self.one
        return arr

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr % self.p if self.p is not None else arr


def _float_safe(field: FieldSpec, k: int) -> bool:
    # Sums of k products of residues stay below 2^53, so float64 matmul is
    # exact integer arithmetic; purely a speed lane, never an approximation.
    return field.p is not None and k * (field.p - 1) ** 2 < 2**53


def matmul(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if _float_safe(field, a.shape[-1]):
        out = a.astype(np.float64) @ b.astype(np.float64)
        return np.rint(out).astype(np.int64) % field.p
    return field.reduce(a @ b)


def tensordot(field: FieldSpec, a: np.ndarray, b: np.ndarray, axes) -> np.ndarray:
    if isinstance(axes, (int, np.integer)):
        k = int(np.prod(a.shape[a.ndim - axes :], dtype=np.int64)) if axes else 1
    else:
        k = int(np.prod([a.shape[ax] for ax in np.atleast_1d(axes[0])], dtype=np.int64))
    if k and _float_safe(field, k):
        out = np.tensordot(a.astype(np.float64), b.astype(np.float64), axes)
        return np.rint(out).astype(np.int64) % field.p
    return field.reduce(np.tensordot(a, b, axes))


def kron(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with row-major index pairing (i1*m2+i2, j1*n2+j2)."""
    return field.reduce(np.kron(a, b))


def outer(field: FieldSpec, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return field.reduce(u[:, None] * v[None, :])


def is_zero(arr: np.ndarray) -> bool:
    if arr.dtype == object:
        return all(not v for v in arr.reshape(-1))
    return not arr.any()


def arrays_equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return bool(np.array_equal(a, b)) if a.dtype != object else all(
        x == y for x, y in zip(a.reshape(-1), b.reshape(-1))
    )


def _first_nonzero(col) -> int | None:
    for i, v in enumerate(col):
        if v:
            return i
    return None


def rref(field: FieldSpec, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; pivots are the first nonzero in each column.

    Returns (R, pivot_columns).  Deterministic: no pivot choice beyond
    first-nonzero, so identical inputs give identical outputs.
    """
    a = mat.copy()
    m, n = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        if field.p is not None:
            sub = np.nonzero(a[r:, c])[0]
            hit = int(sub[0]) if sub.size else None
        else:
            hit = _first_nonzero(a[r:, c])
        if hit is None:
            continue
        if hit:
            a[[r, r + hit]] = a[[r + hit, r]]
        inv = field.inv(a[r, c])
        if inv != field.one:
            a[r] = field.reduce(a[r] * inv)
        factors = a[:, c].copy()
        factors[r] = field.zero
        if field.p is not None:
            if factors.any():
                a -= np.outer(factors, a[r])
                a %= field.p
        else:
            for i in range(m):
                if factors[i]:
                    a[i] = a[i] - factors[i] * a[r]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(field: FieldSpec, mat: np.ndarray) -> int:
    return len(rref(field, mat)[1])


def kernel_basis(field: FieldSpec, mat: np.ndarray) -> np.ndarray:
    """Basis of the right null space {v : mat v = 0}, shape (k, n).

    Vectors are ordered by ascending free column; each has a 1 in its own free
    column and 0 in every other free column (echelon-normal form), so equal
    kernels give byte-identical bases.
    """
    r, pivots = rref(field, mat)
    n = mat.shape[1]
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = field.zeros((len(free), n))
    for k, f in enumerate(free):
        basis[k, f] = field.one
        for row_idx, pc in enumerate(pivots):
            basis[k, pc] = field.neg(r[row_idx, f])
    return basis


def solve(field: FieldSpec, mat: np.ndarray, rhs: np.ndarray) -> np.ndarray | None:
    """One solution of mat x = rhs with every free variable set to 0.

    Returns None when the system is inconsistent.
    """
    m, n = mat.shape
    aug = field.zeros((m, n + 1))
    aug[:, :n] = mat
    aug[:, n] = rhs
    r, pivots = rref(field, aug)
    if pivots and pivots[-1] == n:
        return None
    x = field.zeros(n)
    for row_idx, pc in enumerate(pivots):
        x[pc] = r[row_idx, n]
    return x


def invert(field: FieldSpec, mat: np.ndarray) -> np.ndarray | None:
    """Inverse of a square matrix, or None if singular."""
    n = mat.shape[0]
    aug = field.zeros((n, 2 * n))
    aug[:, :n] = mat
    aug[:, n:] = field.eye(n)
    r, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        return None
    return r[:, n:]
