"""Exact integer linear algebra.

Everything here computes over Z (or Q where stated) with arbitrary-precision
Python integers; no floating point is used anywhere.  Matrices are plain
``list[list[int]]`` in row-major order ("IntMatrix").  Vectors are flat
``list[int]`` / ``tuple[int]``.

Smith normal form uses the minimal-absolute-value pivot with a deterministic
tie-break (lowest row, then lowest column).  Matrices with either dimension
at least 64 are routed through a sparse elimination that maintains the same
pivot rule; results of the two paths agree and are cross-checked in tests.

The characteristic polynomial is computed by the Faddeev-LeVerrier
recurrence, which stays in integer arithmetic (every division is exact).
This is O(n^4); callers gate it by matrix size.
"""

from __future__ import annotations

from dataclasses import dataclass

IntMatrix = list  # list[list[int]], row-major


# --------------------------------------------------------------- utilities

def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A):
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def mat_mul(A, B):
    """Dense product; fine for small matrices, avoid for large sparse ones."""
    n, k = len(A), len(B)
    if k == 0 or not B[0]:
        return [[0] * (len(B[0]) if B else 0) for _ in range(n)]
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A, x):
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[c * a for a in row] for row in A]


def mat_eq(A, B):
    return len(A) == len(B) and all(ra == list(rb) for ra, rb in zip(A, B))


def col_dicts(A):
    """Columns of a dense matrix as {row: value} dicts (zero entries absent)."""
    m = len(A)
    n = len(A[0]) if m else 0
    cols = [dict() for _ in range(n)]
    for i in range(m):
        row = A[i]
        for j in range(n):
            if row[j]:
                cols[j][i] = row[j]
    return cols


def sparse_mul_cols(A_cols, B_cols, nrows):
    """Column dicts of A*B given column dicts of A and B."""
    out = []
    for bcol in B_cols:
        acc = {}
        for k, v in bcol.items():
            for i, a in A_cols[k].items():
                w = acc.get(i, 0) + a * v
                if w:
                    acc[i] = w
                else:
                    acc.pop(i, None)
        out.append(acc)
    return out


def dense_from_cols(cols, nrows):
    A = zeros(nrows, len(cols))
    for j, col in enumerate(cols):
        for i, v in col.items():
            A[i][j] = v
    return A


# ----------------------------------------------------------- Smith form

@dataclass
class SnfDecomposition:
    """U*A*V = D with U, V unimodular; ``diag`` holds D's diagonal.

    ``uinv`` and ``vinv`` are the tracked inverses (columns of ``uinv`` are
    the row-basis change needed to read cokernel generators; ``vinv`` maps
    vectors into the column-basis coordinates, e.g. kernel coordinates).
    """

    diag: list
    U: IntMatrix
    uinv: IntMatrix
    V: IntMatrix
    vinv: IntMatrix
    shape: tuple

    @property
    def rank(self):
        return sum(1 for d in self.diag if d != 0)

    @property
    def invariant_factors(self):
        return [d for d in self.diag if d != 0]


_SPARSE_CUTOFF = 64


def smith_normal_form(A, track_u=True, track_v=True):
    """SNF of A.  ``track_u`` / ``track_v`` disable the corresponding basis
    bookkeeping (the fields come back None); elimination itself is identical.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if max(m, n, 1) < _SPARSE_CUTOFF:
        return _snf_dense(A, track_u, track_v)
    return _snf_sparse(A, track_u, track_v)


def _snf_dense(A, track_u=True, track_v=True):
    m = len(A)
    n = len(A[0]) if m else 0
    D = [row[:] for row in A]
    U, Ui = (identity(m), identity(m)) if track_u else (None, None)
    V, Vi = (identity(n), identity(n)) if track_v else (None, None)

    def row_op(i, t, q):  # row_i -= q*row_t ; U likewise; Ui col_t += q col_i
        Di, Dt = D[i], D[t]
        for j in range(n):
            Di[j] -= q * Dt[j]
        if track_u:
            Uirow, Utrow = U[i], U[t]
            for j in range(m):
                Uirow[j] -= q * Utrow[j]
            for r in range(m):
                Ui[r][t] += q * Ui[r][i]

    def col_op(j, t, q):  # col_j -= q*col_t ; V col likewise; Vi row_t += q row_j
        for r in range(m):
            D[r][j] -= q * D[r][t]
        if track_v:
            for r in range(n):
                V[r][j] -= q * V[r][t]
            Vit, Vij = Vi[t], Vi[j]
            for r in range(n):
                Vit[r] += q * Vij[r]

    def swap_rows(i, t):
        D[i], D[t] = D[t], D[i]
        if track_u:
            U[i], U[t] = U[t], U[i]
            for r in range(m):
                Ui[r][i], Ui[r][t] = Ui[r][t], Ui[r][i]

    def swap_cols(j, t):
        for r in range(m):
            D[r][j], D[r][t] = D[r][t], D[r][j]
        if track_v:
            for r in range(n):
                V[r][j], V[r][t] = V[r][t], V[r][j]
            Vi[j], Vi[t] = Vi[t], Vi[j]

    t = 0
    while t < min(m, n):
        # deterministic minimal-|value| pivot, ties: lowest row then column
        best = None
        for i in range(t, m):
            Di = D[i]
            for j in range(t, n):
                v = Di[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(pi, t)
        if pj != t:
            swap_cols(pj, t)
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    if q:
                        row_op(i, t, q)
                    if D[i][t]:  # remainder: smaller pivot available
                        swap_rows(i, t)
                        dirty = True
            # clear row t
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    if q:
                        col_op(j, t, q)
                    if D[t][j]:
                        swap_cols(j, t)
                        dirty = True
            if dirty:
                continue
            # divisibility of the remaining block
            p = D[t][t]
            bad = None
            for i in range(t + 1, m):
                if bad:
                    break
                Di = D[i]
                for j in range(t + 1, n):
                    if Di[j] % p:
                        bad = i
                        break
            if bad is None:
                break
            row_op(t, bad, -1)  # add offending row into pivot row
        if D[t][t] < 0:
            for j in range(n):
                D[t][j] = -D[t][j]
            if track_u:
                for j in range(m):
                    U[t][j] = -U[t][j]
                for r in range(m):
                    Ui[r][t] = -Ui[r][t]
        t += 1
    diag = [D[i][i] for i in range(min(m, n))]
    return SnfDecomposition(diag=diag, U=U, uinv=Ui, V=V, vinv=Vi,
                            shape=(m, n))


def _snf_sparse(A, track_u=True, track_v=True):
    """Same contract as the dense path, tuned for large sparse input.

    The workspace is a dict-of-rows with a column index, pivots are chosen
    by minimal absolute value with a Markowitz fill tie-break (then lowest
    row/column for determinism), and the transforms are kept sparse during
    elimination — naive dense accumulation suffers badly from coefficient
    swell on boundary-style matrices.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = [dict() for _ in range(m)]
    colix = [set() for _ in range(n)]
    for i in range(m):
        Ai = A[i]
        ri = rows[i]
        for j in range(n):
            if Ai[j]:
                ri[j] = Ai[j]
                colix[j].add(i)
    # transforms, sparse: U by rows, U^-1 by columns, V by columns, V^-1 by rows
    Urows = [{i: 1} for i in range(m)] if track_u else None
    Uicols = [{i: 1} for i in range(m)] if track_u else None
    Vcols = [{j: 1} for j in range(n)] if track_v else None
    Virows = [{j: 1} for j in range(n)] if track_v else None

    def _sparse_add(dst, src, q):  # dst += q*src, in place
        for k, v in src.items():
            w = dst.get(k, 0) + q * v
            if w:
                dst[k] = w
            else:
                del dst[k]

    def row_op(i, t, q):  # row_i -= q*row_t ; U row likewise; Ui col_t += q col_i
        ri = rows[i]
        for j, v in list(rows[t].items()):
            w = ri.get(j, 0) - q * v
            if w:
                if j not in ri:
                    colix[j].add(i)
                ri[j] = w
            elif j in ri:
                del ri[j]
                colix[j].discard(i)
        if track_u:
            _sparse_add(Urows[i], Urows[t], -q)
            _sparse_add(Uicols[t], Uicols[i], q)

    def col_op(j, t, q):  # col_j -= q*col_t ; V col likewise; Vi row_t += q row_j
        for i in list(colix[t]):
            ri = rows[i]
            w = ri.get(j, 0) - q * ri[t]
            if w:
                if j not in ri:
                    colix[j].add(i)
                ri[j] = w
            elif j in ri:
                del ri[j]
                colix[j].discard(i)
        if track_v:
            _sparse_add(Vcols[j], Vcols[t], -q)
            _sparse_add(Virows[t], Virows[j], q)

    def swap_rows(i, t):
        rows[i], rows[t] = rows[t], rows[i]
        for j in set(rows[i]) | set(rows[t]):
            if j in rows[i]:
                colix[j].add(i)
            else:
                colix[j].discard(i)
            if j in rows[t]:
                colix[j].add(t)
            else:
                colix[j].discard(t)
        if track_u:
            Urows[i], Urows[t] = Urows[t], Urows[i]
            Uicols[i], Uicols[t] = Uicols[t], Uicols[i]

    def swap_cols(j, t):
        touched = colix[j] | colix[t]
        for i in touched:
            a = rows[i].pop(j, 0)
            b = rows[i].pop(t, 0)
            if b:
                rows[i][j] = b
            if a:
                rows[i][t] = a
        colix[j] = {i for i in touched if j in rows[i]}
        colix[t] = {i for i in touched if t in rows[i]}
        if track_v:
            Vcols[j], Vcols[t] = Vcols[t], Vcols[j]
            Virows[j], Virows[t] = Virows[t], Virows[j]

    t = 0
    lim = min(m, n)
    while t < lim:
        best = None
        for i in range(t, m):
            ri = rows[i]
            if not ri:
                continue
            rfill = len(ri) - 1
            for j, v in ri.items():
                if j < t:
                    continue
                key = (abs(v), rfill * (len(colix[j]) - 1), i, j)
                if best is None or key < best:
                    best = key
        if best is None:
            break
        _, _, pi, pj = best
        if pi != t:
            swap_rows(pi, t)
        if pj != t:
            swap_cols(pj, t)
        while True:
            dirty = False
            pivot = rows[t][t]
            for i in sorted(colix[t]):
                if i <= t:
                    continue
                v = rows[i].get(t, 0)
                if not v:
                    continue
                q = v // pivot
                if q:
                    row_op(i, t, q)
                if rows[i].get(t, 0):
                    swap_rows(i, t)
                    pivot = rows[t][t]
                    dirty = True
            for j in sorted(rows[t]):
                if j <= t:
                    continue
                q = rows[t][j] // pivot
                if q:
                    col_op(j, t, q)
                if rows[t].get(j, 0):
                    swap_cols(j, t)
                    pivot = rows[t][t]
                    dirty = True
            if dirty:
                continue
            p = rows[t][t]
            if p in (1, -1):
                break
            bad = None
            for i in range(t + 1, m):
                for j, v in rows[i].items():
                    if j > t and v % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_op(t, bad, -1)
        if rows[t][t] < 0:
            for j in list(rows[t]):
                rows[t][j] = -rows[t][j]
            if track_u:
                Urows[t] = {k: -v for k, v in Urows[t].items()}
                Uicols[t] = {k: -v for k, v in Uicols[t].items()}
        t += 1
    diag = [rows[i].get(i, 0) for i in range(lim)]

    def _dense_rows(rws, width):
        out = []
        for r in rws:
            row = [0] * width
            for k, v in r.items():
                row[k] = v
            out.append(row)
        return out

    def _dense_cols(cls, height):
        out = [[0] * len(cls) for _ in range(height)]
        for j, c in enumerate(cls):
            for i, v in c.items():
                out[i][j] = v
        return out

    U = _dense_rows(Urows, m) if track_u else None
    Ui = _dense_cols(Uicols, m) if track_u else None
    V = _dense_cols(Vcols, n) if track_v else None
    Vi = _dense_rows(Virows, n) if track_v else None
    return SnfDecomposition(diag=diag, U=U, uinv=Ui, V=V, vinv=Vi,
                            shape=(m, n))


# ------------------------------------------------------- derived operations

def integer_kernel(A, ncols=None):
    """Basis of the saturated kernel lattice {x : A x = 0}, as column vectors.

    Works on the Hermite form of [A^T | I]: combining its rows with
    coefficients x yields [(A x)^T | x], so the Hermite rows whose first
    block vanishes carry a basis of the kernel in their tail.  (The kernel
    is a saturated sublattice, and Hermite rows pivoted past the first block
    span the intersection with it exactly.)  Unlike a Smith-form route this
    needs no divisibility fixups, which is what keeps coefficient growth in
    check on badly conditioned input.  ``ncols`` is only needed when A has
    no rows (shape otherwise ambiguous).
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    if n == 0:
        return []
    if m == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    rows = []
    for j in range(n):
        r = {}
        for i in range(m):
            v = A[i][j]
            if v:
                r[i] = v
        r[m + j] = 1
        rows.append(r)
    ker = []
    for r in row_hnf_sparse(rows):
        if min(r) >= m:
            vec = [0] * n
            for k, v in r.items():
                vec[k - m] = v
            ker.append(vec)
    return ker


def mat_rank(A):
    if not A or not A[0]:
        return 0
    return smith_normal_form(A, track_u=False, track_v=False).rank


def solve_linear_integer(A, b):
    """One integer solution x of A x = b, or None if none exists."""
    snf = smith_normal_form(A)
    return _solve_with_snf(snf, b)


def _solve_with_snf(snf, b):
    m, n = snf.shape
    c = mat_vec(snf.U, list(b))
    y = [0] * n
    for i in range(min(m, n)):
        d = snf.diag[i]
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    for i in range(min(m, n), m):
        if c[i]:
            return None
    return mat_vec(snf.V, y)


def solve_many(A, bs):
    """Solve A x = b for each b in bs, reusing one decomposition."""
    snf = smith_normal_form(A)
    return [_solve_with_snf(snf, b) for b in bs]


def characteristic_polynomial(A):
    """Monic characteristic polynomial of a square A, descending coefficients.

    Faddeev-LeVerrier: M_1 = A, c_1 = -tr M_1,
    M_k = A (M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k (division exact in Z).
    """
    n = len(A)
    if n == 0:
        return [1]
    for row in A:
        if len(row) != n:
            raise ValueError("characteristic_polynomial needs a square matrix")
    coeffs = [1]
    Mk = [row[:] for row in A]
    c = -sum(Mk[i][i] for i in range(n))
    coeffs.append(c)
    for k in range(2, n + 1):
        for i in range(n):
            Mk[i][i] += c
        Mk = mat_mul(A, Mk)
        tr = sum(Mk[i][i] for i in range(n))
        if (-tr) % k:
            raise AssertionError("Faddeev-LeVerrier division not exact")
        c = -tr // k
        coeffs.append(c)
    return coeffs


def rational_eigenspace(A, lam):
    """Primitive integer basis of ker(A - lam*I) over Q (saturated over Z)."""
    n = len(A)
    B = [row[:] for row in A]
    for i in range(n):
        B[i][i] -= lam
    return integer_kernel(B)


def perron_frobenius_vector(A, eigenvalue):
    """The unique (up to sign) primitive eigenvector at ``eigenvalue``.

    Raises NotPrimitiveSpectrum unless the eigenspace is one-dimensional;
    the result is oriented to have positive coordinate sum.
    """
    from .errors import NotPrimitiveSpectrum

    basis = rational_eigenspace(A, eigenvalue)
    if len(basis) != 1:
        raise NotPrimitiveSpectrum(
            f"eigenspace at {eigenvalue} has dimension {len(basis)}, not 1")
    v = basis[0]
    s = sum(v)
    if s == 0:
        raise NotPrimitiveSpectrum(
            f"eigenvector at {eigenvalue} has zero coordinate sum")
    if s < 0:
        v = [-x for x in v]
    return v


# ------------------------------------------------------------ lattice tools

def row_hnf(rows):
    """Canonical row Hermite form of the lattice spanned by ``rows``.

    Returns a list of reduced basis rows with positive pivots, entries above
    each pivot reduced into [0, pivot).  Two generating sets span the same
    lattice iff their forms are equal.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    out = []
    col = 0
    while col < ncols and work:
        live = [r for r in work if r[col]]
        if not live:
            col += 1
            continue
        while True:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            done = True
            for r in live[1:]:
                q = r[col] // piv[col]
                for j in range(col, ncols):
                    r[j] -= q * piv[j]
                if r[col]:
                    done = False
            live = [r for r in live if r[col]]
            if done or len(live) == 1:
                break
        piv = live[0]
        if piv[col] < 0:
            for j in range(ncols):
                piv[j] = -piv[j]
        out.append(piv)
        rest = [r for r in work if r is not piv]
        for r in rest:
            if r[col]:
                q = r[col] // piv[col]
                for j in range(col, ncols):
                    r[j] -= q * piv[j]
        work = [r for r in rest if any(r)]
        col += 1
    # reduce entries above pivots
    out.sort(key=lambda r: next(j for j in range(ncols) if r[j]))
    for idx, piv in enumerate(out):
        pcol = next(j for j in range(ncols) if piv[j])
        for upper in out[:idx]:
            q = upper[pcol] // piv[pcol]
            if q:
                for j in range(pcol, ncols):
                    upper[j] -= q * piv[j]
    return out


def hnf_contains(hnf_rows, vec):
    """Membership of ``vec`` in the lattice given by ``row_hnf`` output."""
    v = list(vec)
    ncols = len(v)
    for piv in hnf_rows:
        pcol = next(j for j in range(ncols) if piv[j])
        if v[pcol] % piv[pcol]:
            return False
        q = v[pcol] // piv[pcol]
        if q:
            for j in range(pcol, ncols):
                v[j] -= q * piv[j]
    return not any(v)


def _sparse_row_sub(r, piv, q):
    """r -= q * piv for sparse row dicts."""
    for k, v in piv.items():
        w = r.get(k, 0) - q * v
        if w:
            r[k] = w
        else:
            r.pop(k, None)


def row_hnf_sparse(rows):
    """Canonical Hermite form of a lattice given by sparse row dicts.

    Same canonical form as ``row_hnf`` (positive pivots, entries above each
    pivot reduced into [0, pivot)), but rows are {col: value} dicts and the
    elimination never touches absent columns.  Output rows are sorted by
    pivot column, so two generating sets span the same lattice iff the
    outputs are equal.
    """
    buckets = {}

    def push(r):
        if r:
            buckets.setdefault(min(r), []).append(r)

    for r in rows:
        if r:
            push(dict(r))
    pivots = []
    while buckets:
        c = min(buckets)
        group = buckets.pop(c)
        while len(group) > 1:
            group.sort(key=lambda r: abs(r[c]))
            piv = group[0]
            nxt = [piv]
            for r in group[1:]:
                q = r[c] // piv[c]
                if q:
                    _sparse_row_sub(r, piv, q)
                if r.get(c):
                    nxt.append(r)
                else:
                    push(r)
            group = nxt
        piv = group[0]
        if piv[c] < 0:
            for k in list(piv):
                piv[k] = -piv[k]
        pivots.append((c, piv))
    pivots.sort()
    for idx in range(len(pivots)):
        c, piv = pivots[idx]
        for jdx in range(idx):
            upper = pivots[jdx][1]
            q = upper.get(c, 0) // piv[c]
            if q:
                _sparse_row_sub(upper, piv, q)
    return [piv for _, piv in pivots]


def hnf_contains_sparse(hnf_rows, vec_dict):
    """Membership of a sparse vector in a ``row_hnf_sparse`` lattice."""
    v = {j: x for j, x in vec_dict.items() if x}
    for piv in hnf_rows:
        pcol = min(piv)
        x = v.get(pcol, 0)
        if x:
            if x % piv[pcol]:
                return False
            _sparse_row_sub(v, piv, x // piv[pcol])
    return not v
