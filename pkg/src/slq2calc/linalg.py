"""Exact linear algebra over the scalar field.

Two flavours are provided.  ``Span`` echelonizes sparse dict-vectors (keys
are arbitrary orderable objects, values are scalars) with the pivot chosen
minimal in the key order; it powers subspace membership, dimensions and
coordinates throughout the library.  Dense helpers (rank, nullspace, solve,
matrix products) work on lists of lists of scalars; rank clears row
denominators first and then runs fraction-free (Bareiss) elimination with
lowest-total-degree pivoting to contain expression swell.
"""

from __future__ import annotations

from .scalars import Scalar


def vec_add(u, v):
    out = dict(u)
    for k, c in v.items():
        if k in out:
            w = out[k] + c
            if w.is_zero():
                del out[k]
            else:
                out[k] = w
        else:
            out[k] = c
    return out


def vec_scale(u, c):
    if c.is_zero():
        return {}
    return {k: v * c for k, v in u.items()}


def vec_sub_scaled(u, v, c):
    """u - c*v, in place on a copy of u."""
    out = dict(u)
    for k, w in v.items():
        delta = c * w
        if k in out:
            nv = out[k] - delta
            if nv.is_zero():
                del out[k]
            else:
                out[k] = nv
        else:
            out[k] = -delta
    return out


class Span:
    """Echelonized span of sparse vectors with deterministic minimal pivots."""

    def __init__(self, key=None):
        self.key = key or (lambda k: k)
        self.rows = {}          # pivot -> vector with coefficient 1 at pivot
        self.coords = {}        # pivot -> dict {original index: Scalar}
        self.n_inserted = 0

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows, key=self.key)]

    def reduce(self, v, coord=None):
        """Reduce v against the span; returns (residue, coordinates-used)."""
        v = dict(v)
        used = dict(coord) if coord else {}
        changed = True
        while changed:
            changed = False
            for k in sorted(v, key=self.key):
                row = self.rows.get(k)
                if row is not None:
                    c = v[k]
                    v = vec_sub_scaled(v, row, c)
                    for idx, w in self.coords[k].items():
                        delta = c * w
                        if idx in used:
                            nv = used[idx] - delta
                            if nv.is_zero():
                                del used[idx]
                            else:
                                used[idx] = nv
                        else:
                            used[idx] = -delta
                    changed = True
                    break
        return v, used

    def add(self, v):
        """Insert a vector; returns True if it enlarged the span."""
        idx = self.n_inserted
        self.n_inserted += 1
        res, used = self.reduce(v, {idx: Scalar.one()})
        if not res:
            return False
        pivot = min(res, key=self.key)
        inv = res[pivot].inv()
        self.rows[pivot] = vec_scale(res, inv)
        self.coords[pivot] = {i: c * inv for i, c in used.items()
                              if not c.is_zero()}
        return True

    def contains(self, v):
        res, _ = self.reduce(v)
        return not res

    def coordinates(self, v):
        """Express v in the inserted vectors; None if v is outside the span."""
        res, used = self.reduce(v)
        if res:
            return None
        return {i: -c for i, c in used.items() if not c.is_zero()}

    def equals(self, other):
        if self.dim != other.dim:
            return False
        return all(other.contains(r) for r in self.rows.values())


# -- dense matrices ---------------------------------------------------------

def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    zero = Scalar.zero()
    out = [[zero for _ in range(p)] for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            c = ai[k]
            if c.is_zero():
                continue
            bk = b[k]
            for j in range(p):
                if not bk[j].is_zero():
                    oi[j] = oi[j] + c * bk[j]
    return out

def mat_identity(n):
    one, zero = Scalar.one(), Scalar.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]

def mat_scale(a, c):
    return [[x * c for x in row] for row in a]

def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))

def mat_is_zero(a):
    return all(x.is_zero() for row in a for x in row)

def kron(a, b):
    """Kronecker product acting on the tensor basis e_i (x) e_j."""
    n, m = len(a), len(b)
    out = []
    for i in range(n):
        for k in range(m):
            row = []
            for j in range(n):
                for l in range(m):
                    row.append(a[i][j] * b[k][l])
            out.append(row)
    return out


def rank(matrix):
    """Exact rank through echelonized sparse rows.

    Entries stay canonical gcd-reduced fractions throughout, which keeps
    the elimination exact and the expression sizes contained; pivots are
    the smallest surviving column indices.
    """
    sp = Span()
    r = 0
    for row in matrix:
        v = {j: x for j, x in enumerate(row) if not x.is_zero()}
        if v and sp.add(v):
            r += 1
    return r


def nullspace(matrix):
    """Basis of the right nullspace (list of coordinate dict-vectors)."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    span = Span()
    rows = []
    for r in matrix:
        v = {j: x for j, x in enumerate(r) if not x.is_zero()}
        if v and span.add(dict(v)):
            rows.append(v)
    # reduced row echelon on the independent rows
    piv_of_row = []
    work = [dict(r) for r in rows]
    used = set()
    for i, row in enumerate(work):
        piv = None
        for j in sorted(row):
            if j not in used:
                piv = j
                break
        assert piv is not None
        inv = row[piv].inv()
        work[i] = vec_scale(row, inv)
        for k in range(len(work)):
            if k != i and piv in work[k]:
                work[k] = vec_sub_scaled(work[k], work[i], work[k][piv])
        used.add(piv)
        piv_of_row.append(piv)
    free = [j for j in range(ncols) if j not in used]
    basis = []
    for f in free:
        vec = {f: Scalar.one()}
        for i, piv in enumerate(piv_of_row):
            c = work[i].get(f)
            if c is not None and not c.is_zero():
                vec[piv] = -c
        basis.append(vec)
    return basis


def solve_affine(matrix, rhs):
    """All solutions of matrix*x = rhs.

    Returns (particular, homogeneous basis) with dict-vectors, or None when
    the system is inconsistent.
    """
    if not matrix:
        return {}, []
    ncols = len(matrix[0])
    aug = [row + [b] for row, b in zip(matrix, rhs)]
    work = []
    used = set()
    for r in aug:
        v = {j: x for j, x in enumerate(r) if not x.is_zero()}
        if not v:
            continue
        # reduce against current rref
        for row, piv in work:
            c = v.get(piv)
            if c is not None:
                v = vec_sub_scaled(v, row, c)
        if not v:
            continue
        piv = min(k for k in v if k != ncols) if any(k != ncols for k in v) else ncols
        if piv == ncols:
            return None  # 0 = nonzero
        inv = v[piv].inv()
        v = vec_scale(v, inv)
        for i, (row, p) in enumerate(work):
            c = row.get(piv)
            if c is not None:
                work[i] = (vec_sub_scaled(row, v, c), p)
        work.append((v, piv))
        used.add(piv)
    particular = {}
    for row, piv in work:
        b = row.get(ncols, Scalar.zero())
        if not b.is_zero():
            particular[piv] = b
    free = [j for j in range(ncols) if j not in used]
    basis = []
    for f in free:
        vec = {f: Scalar.one()}
        for row, piv in work:
            c = row.get(f)
            if c is not None and not c.is_zero():
                vec[piv] = -c
        basis.append(vec)
    return particular, basis


def mat_inverse(a):
    n = len(a)
    aug = [list(row) + list(ident_row)
           for row, ident_row in zip(a, mat_identity(n))]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if not aug[i][col].is_zero():
                piv = i
                break
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inv()
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and not aug[i][col].is_zero():
                c = aug[i][col]
                aug[i] = [x - c * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]
