"""Dense exact matrices over Z, Q and F_p.

Storage is a numpy array: ``int64`` over F_p (entries in ``[0, p)``), ``object``
holding Python ints over Z and ``Fraction`` objects over Q.  Matrices are
immutable once built.

Integer kernels (Bareiss determinant, fraction-free inverse) run on int64
while every entry stays below 2**31 in absolute value and fall back to
arbitrary precision as soon as that bound is crossed.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Optional

import numpy as np

from .domains import GF, ZZ, Domain, parse_domain
from .errors import DomainError, NonUnimodularError, ShapeError, SingularMatrixError
from .polyring import Poly

__all__ = [
    "ExactMatrix",
    "identity",
    "zeros",
    "det_exact",
    "leading_principal_minors",
    "charpoly",
    "charpoly_berkowitz",
    "charpoly_hessenberg",
    "inverse",
    "kron",
    "matrix_power",
    "rank",
]

_BAREISS_INT64_BOUND = 1 << 31


class ExactMatrix:
    __slots__ = ("a", "domain")

    def __init__(self, entries, domain: Domain = ZZ, shape=None):
        if isinstance(entries, np.ndarray) and entries.ndim == 2:
            rows = entries.tolist()
        else:
            rows = [list(r) for r in entries]
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        if any(len(r) != shape[1] for r in rows) or len(rows) != shape[0]:
            raise ShapeError("ragged matrix rows")
        conv = domain.convert
        data = [[conv(x) for x in r] for r in rows]
        self.a = _freeze(_array(data, shape, domain))
        self.domain = domain

    @classmethod
    def _wrap(cls, arr: np.ndarray, domain: Domain) -> "ExactMatrix":
        obj = cls.__new__(cls)
        obj.a = _freeze(arr)
        obj.domain = domain
        return obj

    @classmethod
    def from_function(cls, rows: int, cols: int, fn, domain: Domain = ZZ) -> "ExactMatrix":
        return cls([[fn(i, j) for j in range(cols)] for i in range(rows)], domain, shape=(rows, cols))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        x = self.a[ij]
        return int(x) if isinstance(x, np.integer) else x

    def tolist(self) -> List[List]:
        if self.domain.kind == "Fp":
            return self.a.tolist()
        return [list(r) for r in self.a]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.shape == other.shape
            and bool(np.all(self.a == other.a))
        )

    def __hash__(self):
        return hash((self.domain, self.shape, tuple(map(int, self.a.ravel())) if self.domain.kind == "Fp" else tuple(self.a.ravel())))

    def key(self) -> bytes:
        """Hashable canonical key (cheap for F_p matrices)."""
        if self.domain.kind == "Fp":
            return self.a.tobytes()
        return repr(self.tolist()).encode()

    def __repr__(self):
        return f"ExactMatrix({self.tolist()!r}, {self.domain!r})"

    # -- arithmetic ------------------------------------------------------

    def _same(self, other: "ExactMatrix"):
        if not isinstance(other, ExactMatrix):
            raise TypeError("expected an ExactMatrix")
        if other.domain != self.domain:
            raise DomainError(f"domain mismatch: {self.domain!r} vs {other.domain!r}")

    def __add__(self, other):
        self._same(other)
        if self.shape != other.shape:
            raise ShapeError("shape mismatch in addition")
        return ExactMatrix._wrap(_reduce(self.a + other.a, self.domain), self.domain)

    def __sub__(self, other):
        self._same(other)
        if self.shape != other.shape:
            raise ShapeError("shape mismatch in subtraction")
        return ExactMatrix._wrap(_reduce(self.a - other.a, self.domain), self.domain)

    def __neg__(self):
        return ExactMatrix._wrap(_reduce(-self.a, self.domain), self.domain)

    def scale(self, c) -> "ExactMatrix":
        c = self.domain.convert(c)
        return ExactMatrix._wrap(_reduce(self.a * c, self.domain), self.domain)

    def __matmul__(self, other):
        self._same(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        return ExactMatrix._wrap(_matmul(self.a, other.a, self.domain), self.domain)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._wrap(self.a.T.copy(), self.domain)

    def submatrix(self, rows: slice, cols: slice) -> "ExactMatrix":
        return ExactMatrix._wrap(self.a[rows, cols].copy(), self.domain)

    def leading(self, n: int) -> "ExactMatrix":
        return self.submatrix(slice(0, n), slice(0, n))

    def reduce(self, p: int) -> "ExactMatrix":
        """Image over F_p of an integer or p-integral rational matrix."""
        dom = GF(p)
        if self.domain.kind == "Fp":
            raise DomainError("matrix is already over a prime field")
        if self.domain.kind == "Z":
            return ExactMatrix._wrap((self.a % p).astype(np.int64), dom)
        return ExactMatrix(self.tolist(), dom, shape=self.shape)

    def to_domain(self, domain: Domain) -> "ExactMatrix":
        return ExactMatrix(self.tolist(), domain, shape=self.shape)

    def lift(self) -> "ExactMatrix":
        """Integer matrix of symmetric representatives of an F_p matrix."""
        if self.domain.kind != "Fp":
            raise DomainError("lift() needs an F_p matrix")
        p = self.domain.p
        arr = np.where(2 * self.a > p, self.a - p, self.a)
        return ExactMatrix._wrap(arr.astype(object), ZZ)

    def is_symmetric(self) -> bool:
        return self.is_square and bool(np.all(self.a == self.a.T))

    def is_zero(self) -> bool:
        return bool(np.all(self.a == 0))

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "domain": self.domain.tag,
            "entries": [str(x) for r in self.tolist() for x in r],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ExactMatrix":
        dom = parse_domain(obj["domain"])
        r, c = int(obj["rows"]), int(obj["cols"])
        flat = [Fraction(x) for x in obj["entries"]]
        if len(flat) != r * c:
            raise ShapeError("entries length does not match rows*cols")
        return cls([flat[i * c:(i + 1) * c] for i in range(r)], dom, shape=(r, c))


# -- helpers -------------------------------------------------------------


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _array(data, shape, domain: Domain) -> np.ndarray:
    if domain.kind == "Fp":
        return np.array(data, dtype=np.int64).reshape(shape)
    arr = np.empty(shape, dtype=object)
    for i, r in enumerate(data):
        for j, x in enumerate(r):
            arr[i, j] = x
    return arr


def _reduce(arr: np.ndarray, domain: Domain) -> np.ndarray:
    if domain.kind == "Fp":
        return arr % domain.p
    return arr


def _matmul(a: np.ndarray, b: np.ndarray, domain: Domain) -> np.ndarray:
    if domain.kind == "Fp":
        p = domain.p
        if a.shape[1] * (p - 1) ** 2 < (1 << 62):
            return (a @ b) % p
        return (a.astype(object) @ b.astype(object)) % p
    if a.shape[1] == 0:
        out = np.empty((a.shape[0], b.shape[1]), dtype=object)
        out[...] = domain.zero
        return out
    return np.dot(a, b)


def identity(n: int, domain: Domain = ZZ) -> ExactMatrix:
    if domain.kind == "Fp":
        return ExactMatrix._wrap(np.eye(n, dtype=np.int64), domain)
    arr = np.empty((n, n), dtype=object)
    arr[...] = domain.zero
    for i in range(n):
        arr[i, i] = domain.one
    return ExactMatrix._wrap(arr, domain)


def zeros(rows: int, cols: int, domain: Domain = ZZ) -> ExactMatrix:
    if domain.kind == "Fp":
        return ExactMatrix._wrap(np.zeros((rows, cols), dtype=np.int64), domain)
    arr = np.empty((rows, cols), dtype=object)
    arr[...] = domain.zero
    return ExactMatrix._wrap(arr, domain)


def _require_square(M: ExactMatrix):
    if not M.is_square:
        raise ShapeError(f"square matrix required, got {M.rows}x{M.cols}")


def _small_enough(a: np.ndarray) -> bool:
    if a.size == 0:
        return True
    return max(abs(int(a.max())), abs(int(a.min()))) < _BAREISS_INT64_BOUND


# -- integer kernels -----------------------------------------------------


def _bareiss(a: np.ndarray, ncols_pivot: int, pivoting: bool = True):
    """Fraction-free elimination in place on the integer array ``a``.

    Eliminates the first ``ncols_pivot`` columns.  Returns
    ``(a, sign, pivots)`` where ``pivots[k]`` is the k-th Bareiss pivot, i.e.
    the determinant of the leading (k+1)x(k+1) block after row swaps.  A zero
    pivot with ``pivoting=False`` stops early and leaves the list short.
    """
    n = a.shape[0]
    sign = 1
    prev = 1
    pivots = []
    fast = a.dtype == np.int64
    for k in range(min(n, ncols_pivot)):
        if a[k, k] == 0:
            if not pivoting:
                return a, sign, pivots
            nz = np.nonzero(a[k + 1:, k])[0]
            if nz.size == 0:
                pivots.append(0)
                return a, sign, pivots
            r = k + 1 + int(nz[0])
            a[[k, r]] = a[[r, k]]
            sign = -sign
        piv = a[k, k]
        pivots.append(int(piv))
        if k + 1 < n:
            if fast and not _small_enough(a[k:, k:]):
                a = np.array([[int(x) for x in row] for row in a], dtype=object).reshape(a.shape)
                fast = False
            sub = a[k + 1:, k + 1:]
            upd = sub * piv - np.outer(a[k + 1:, k], a[k, k + 1:])
            a[k + 1:, k + 1:] = upd // prev
            a[k + 1:, k] = 0
        prev = int(piv)
    return a, sign, pivots


def _int_array(M: ExactMatrix) -> np.ndarray:
    if _small_enough(M.a):
        return M.a.astype(np.int64)
    return M.a.copy()


def _det_int(M: ExactMatrix) -> int:
    n = M.rows
    if n == 0:
        return 1
    a, sign, pivots = _bareiss(_int_array(M), n)
    if len(pivots) < n or pivots[-1] == 0:
        return 0
    return sign * pivots[-1]


def leading_principal_minors(M: ExactMatrix) -> List:
    """Determinants of the leading k x k blocks, k = 1..n.

    Over Z this is a single Bareiss pass without pivoting; the list stops
    at (and includes) the first vanishing minor.
    """
    _require_square(M)
    n = M.rows
    if M.domain.kind == "Z":
        _, _, pivots = _bareiss(_int_array(M), n, pivoting=False)
        if len(pivots) < n:
            pivots.append(0)
        return pivots
    if M.domain.kind == "Q":
        # leading k x k block of c*M has determinant c**k times the minor
        scaled, c = _clear_denominators(M)
        minors = leading_principal_minors(scaled)
        return [Fraction(d, c ** (k + 1)) for k, d in enumerate(minors)]
    out = []
    for k in range(1, n + 1):
        d = det_exact(M.leading(k))
        out.append(d)
        if d == 0:
            break
    return out


# -- field kernels -------------------------------------------------------


def _field_array(M: ExactMatrix) -> np.ndarray:
    return M.a.copy()


def _inv_scalar(x, domain: Domain):
    if domain.kind == "Fp":
        return pow(int(x), -1, domain.p)
    return 1 / x


def _echelon(a: np.ndarray, domain: Domain, ncols: Optional[int] = None):
    """Row-reduce ``a`` in place (Gauss-Jordan).  Returns (a, pivot_cols, sign)."""
    rows, cols = a.shape
    ncols = cols if ncols is None else ncols
    p = domain.p if domain.kind == "Fp" else None
    r = 0
    sign = 1
    pivcols = []
    for c in range(ncols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
            sign = -sign
        inv = _inv_scalar(a[r, c], domain)
        a[r] = a[r] * inv
        if p:
            a[r] %= p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            a[nzr] = a[nzr] - np.outer(col[nzr], a[r])
            if p:
                a[nzr] %= p
        pivcols.append(c)
        r += 1
    return a, pivcols, sign


def _det_field(M: ExactMatrix):
    n = M.rows
    dom = M.domain
    if n == 0:
        return dom.one
    a = _field_array(M)
    p = dom.p if dom.kind == "Fp" else None
    det = dom.one
    for k in range(n):
        nz = np.nonzero(a[k:, k])[0]
        if nz.size == 0:
            return dom.zero
        i = k + int(nz[0])
        if i != k:
            a[[k, i]] = a[[i, k]]
            det = -det
        piv = a[k, k]
        det = det * piv
        if p:
            det = int(det) % p
        if k + 1 < n:
            f = a[k + 1:, k] * _inv_scalar(piv, dom)
            a[k + 1:, k:] = a[k + 1:, k:] - np.outer(f, a[k, k:])
            if p:
                a[k + 1:, k:] %= p
    return det


# -- public operations ---------------------------------------------------


def det_exact(M: ExactMatrix):
    """Exact determinant; Bareiss over Z, Gaussian elimination over fields."""
    _require_square(M)
    if M.domain.kind == "Z":
        return _det_int(M)
    if M.domain.kind == "Q":
        return _det_rational(M)
    return _det_field(M)


def _det_rational(M: ExactMatrix) -> Fraction:
    # clear denominators, then Bareiss: det(M) = det(c*M) / c**n
    scaled, c = _clear_denominators(M)
    return Fraction(_det_int(scaled), c ** M.rows)


def _clear_denominators(M: ExactMatrix):
    flat = M.a.ravel()
    c = lcm(*{x.denominator for x in flat}) if flat.size else 1
    scaled = np.array([x.numerator * (c // x.denominator) for x in flat], dtype=object).reshape(M.a.shape)
    return ExactMatrix._wrap(scaled, ZZ), c


def charpoly_berkowitz(M: ExactMatrix) -> Poly:
    """Division-free characteristic polynomial det(tI - M) (Berkowitz).

    Works over any commutative ring; used for integer matrices.
    """
    _require_square(M)
    dom = M.domain
    n = M.rows
    a = M.a if dom.kind != "Fp" else M.a.astype(object)
    p = dom.p if dom.kind == "Fp" else None
    # vec holds det(tI - A_r), coefficients high to low
    vec = [dom.one]
    for r in range(n):
        A = a[:r, :r]
        C = a[:r, r]
        R = a[r, :r]
        col = [dom.one, -a[r, r]]
        v = C
        for _ in range(r):
            col.append(-np.dot(R, v))
            v = np.dot(A, v)
            if p:
                v = v % p
        if p:
            col = [int(x) % p for x in col]
        # lower-triangular Toeplitz (r+2) x (r+1) times vec
        new = []
        for i in range(r + 2):
            s = dom.zero
            for j in range(min(i, r) + 1):
                s += col[i - j] * vec[j]
            new.append(s % p if p else s)
        vec = new
    return Poly(list(reversed(vec)), dom)


def _hessenberg(M: ExactMatrix) -> np.ndarray:
    # similarity transform to upper Hessenberg form over F_p
    p = M.domain.p
    h = M.a.copy()
    n = h.shape[0]
    for m in range(1, n - 1):
        nz = np.nonzero(h[m:, m - 1])[0]
        if nz.size == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            h[[m, i]] = h[[i, m]]
            h[:, [m, i]] = h[:, [i, m]]
        inv = pow(int(h[m, m - 1]), -1, p)
        u = (h[m + 1:, m - 1] * inv) % p
        if not u.any():
            continue
        h[m + 1:, :] = (h[m + 1:, :] - np.outer(u, h[m, :])) % p
        h[:, m] = (h[:, m] + h[:, m + 1:] @ u) % p
    return h


def charpoly_hessenberg(M: ExactMatrix) -> Poly:
    """det(tI - M) over F_p via Hessenberg reduction and the column recurrence."""
    _require_square(M)
    if M.domain.kind != "Fp":
        raise DomainError("Hessenberg characteristic polynomial is implemented over F_p")
    p = M.domain.p
    n = M.rows
    h = _hessenberg(M)
    # P[m] = charpoly of the leading m x m block, low-to-high, length n+1
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    for m in range(1, n + 1):
        row = np.zeros(n + 1, dtype=np.int64)
        row[1:] = P[m - 1, :-1]
        row = (row - h[m - 1, m - 1] * P[m - 1]) % p
        # subtract sum_{i<m} h[i-1, m-1] * prod_{j=i}^{m-1} h[j, j-1] * P[i-1]
        if m > 1:
            w = np.zeros(m - 1, dtype=np.int64)
            t = 1
            for i in range(m - 1, 0, -1):
                t = t * int(h[i, i - 1]) % p
                if t == 0:
                    break
                w[i - 1] = t * int(h[i - 1, m - 1]) % p
            if w.any():
                row = (row - w @ P[: m - 1]) % p
        P[m] = row
    return Poly._raw(P[n].tolist(), M.domain)


def charpoly(M: ExactMatrix) -> Poly:
    """Monic characteristic polynomial det(tI - M).

    Hessenberg over F_p, Berkowitz over Z and Q.
    """
    _require_square(M)
    if M.domain.kind == "Fp":
        return charpoly_hessenberg(M)
    return charpoly_berkowitz(M)


def _inverse_field(M: ExactMatrix) -> ExactMatrix:
    n = M.rows
    dom = M.domain
    aug = np.concatenate([M.a, identity(n, dom).a], axis=1)
    if dom.kind != "Fp":
        aug = aug.astype(object)
    aug, piv, _ = _echelon(aug, dom, ncols=n)
    if len(piv) < n:
        raise SingularMatrixError("matrix is singular")
    return ExactMatrix._wrap(aug[:, n:].copy(), dom)


def _inverse_int(M: ExactMatrix) -> ExactMatrix:
    # fraction-free Gauss-Jordan on [M | I]; the right block ends as det * M^{-1}
    n = M.rows
    a = np.concatenate([M.a, identity(n, ZZ).a], axis=1)
    a = a.astype(np.int64) if _small_enough(a) else a.astype(object)
    sign = 1
    prev = 1
    fast = a.dtype == np.int64
    for k in range(n):
        if a[k, k] == 0:
            nz = np.nonzero(a[k + 1:, k])[0]
            if nz.size == 0:
                raise SingularMatrixError("matrix is singular")
            r = k + 1 + int(nz[0])
            a[[k, r]] = a[[r, k]]
            sign = -sign
        if fast and not _small_enough(a):
            a = np.array([[int(x) for x in row] for row in a], dtype=object)
            fast = False
        piv = a[k, k]
        others = np.r_[0:k, k + 1:n]
        upd = a[others] * piv - np.outer(a[others, k], a[k])
        a[others] = upd // prev
        prev = int(piv)
    det = sign * prev
    if det not in (1, -1):
        raise NonUnimodularError(f"integer inverse needs det = +-1, got {det}")
    # after the last step every diagonal entry equals prev
    out = a[:, n:] // prev
    out = np.array([[int(x) for x in row] for row in out], dtype=object).reshape(n, n)
    return ExactMatrix._wrap(out, ZZ)


def inverse(M: ExactMatrix) -> ExactMatrix:
    _require_square(M)
    if M.rows == 0:
        return M
    if M.domain.kind == "Z":
        return _inverse_int(M)
    return _inverse_field(M)


def kron(*mats: ExactMatrix) -> ExactMatrix:
    """Kronecker product of one or more matrices over a common domain."""
    if not mats:
        raise ValueError("kron needs at least one matrix")
    out = mats[0]
    for B in mats[1:]:
        out._same(B)
        out = ExactMatrix._wrap(_reduce(np.kron(out.a, B.a), out.domain), out.domain)
    return out


def matrix_power(M: ExactMatrix, e: int) -> ExactMatrix:
    _require_square(M)
    if e < 0:
        raise ValueError("negative exponent; invert first")
    result = identity(M.rows, M.domain)
    base = M
    while e:
        if e & 1:
            result = result @ base
        e >>= 1
        if e:
            base = base @ base
    return result


def rank(M: ExactMatrix) -> int:
    if not M.domain.is_field:
        raise DomainError("rank() needs a field; convert integer matrices to QQ first")
    if M.rows == 0 or M.cols == 0:
        return 0
    a = _field_array(M)
    _, piv, _ = _echelon(a, M.domain)
    return len(piv)
