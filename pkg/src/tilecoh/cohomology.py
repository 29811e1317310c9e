"""Integral cohomology of cell complexes and direct limits of induced maps.

Cochain groups C^q are free Z-modules on the q-cells and the coboundary
delta^q is the transpose of the boundary C_{q+1} -> C_q.  H^q is presented
through the Smith form of the incoming coboundary delta^{q-1}: its
nontrivial invariant factors are exactly the torsion of H^q, and a saturated
kernel computation in the complementary coordinates yields the free
generators.  All arithmetic is exact over Z.

A cochain endomorphism (here: the transpose of a substitution's chain map)
descends to each H^q.  The direct limit of H^q -> H^q -> ... is computed by
stabilising the ascending chain of preimage lattices of the relation
lattice; on the stable quotient the induced map is injective, so equality
and divisibility questions in the limit reduce to finite computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import NotACocycle, NotCochainMap
from .intlinalg import (
    hnf_contains_sparse,
    identity,
    integer_kernel,
    mat_mul,
    row_hnf,
    row_hnf_sparse,
    smith_normal_form,
    solve_linear_integer,
    transpose,
    _solve_with_snf,
)


def _dot(row, vec):
    return sum(a * b for a, b in zip(row, vec))


def _apply_cols(cols, vec, nrows):
    """Dense result of (matrix given by column dicts) * vec."""
    out = [0] * nrows
    for j, vj in enumerate(vec):
        if vj:
            for i, a in cols[j].items():
                out[i] += a * vj
    return out


def _apply_cols_sparse(cols, vec_dict):
    out = {}
    for j, vj in vec_dict.items():
        for i, a in cols[j].items():
            w = out.get(i, 0) + a * vj
            if w:
                out[i] = w
            else:
                out.pop(i, None)
    return out


def describe_group(torsion, free_rank):
    """Human-readable shape of ⊕ Z/d_i ⊕ Z^free, e.g. "Z/2^14 + Z/4 + Z^126"."""
    parts = []
    seen = []
    for d in torsion:
        if seen and seen[-1][0] == d:
            seen[-1][1] += 1
        else:
            seen.append([d, 1])
    for d, e in seen:
        parts.append(f"Z/{d}" + (f"^{e}" if e > 1 else ""))
    if free_rank:
        parts.append("Z" + (f"^{free_rank}" if free_rank > 1 else ""))
    return " + ".join(parts) if parts else "0"


# ------------------------------------------------------------------ cochains

@dataclass(frozen=True)
class Cochain:
    degree: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))


def _vector_of(z):
    if isinstance(z, Cochain):
        return list(z.values)
    return list(z)


# ----------------------------------------------------------- cohomology group

@dataclass
class FgAbGroup:
    """H^q presented by generators with relations d_i * (i-th torsion gen) = 0.

    ``express`` maps a cocycle to its (torsion, free) coordinates; torsion
    coordinates are canonicalised into [0, d_i).  Generators are concrete
    cochain vectors.
    """

    degree: int
    n_cochains: int
    torsion: list
    free_rank: int
    torsion_generators: list
    free_generators: list
    _U: list = field(repr=False, default=None)
    _d_in: list = field(repr=False, default=None)
    _rank_in: int = field(repr=False, default=0)
    _tors_idx: list = field(repr=False, default=None)
    _W_snf: object = field(repr=False, default=None)  # None: identity kernel
    _cob_out: list = field(repr=False, default=None)  # delta^q column dicts
    _cob_in: list = field(repr=False, default=None)   # delta^{q-1} column dicts

    def is_cocycle(self, z):
        v = _vector_of(z)
        if len(v) != self.n_cochains:
            raise ValueError(
                f"cochain has length {len(v)}, expected {self.n_cochains}")
        acc = {}
        for j, vj in enumerate(v):
            if vj:
                for i, a in self._cob_out[j].items():
                    w = acc.get(i, 0) + a * vj
                    if w:
                        acc[i] = w
                    else:
                        acc.pop(i, None)
        return not acc

    def express(self, z):
        """(torsion coords, free coords) of a cocycle's class."""
        v = _vector_of(z)
        if len(v) != self.n_cochains:
            raise ValueError(
                f"cochain has length {len(v)}, expected {self.n_cochains}")
        if not self.is_cocycle(v):
            raise NotACocycle(
                f"cochain in degree {self.degree} has nonzero coboundary")
        tors = tuple(
            _dot(self._U[i], v) % self._d_in[i] for i in self._tors_idx)
        rest = [_dot(self._U[i], v)
                for i in range(self._rank_in, self.n_cochains)]
        if self._W_snf is None:
            free = tuple(rest)
        else:
            y = _solve_with_snf(self._W_snf, rest)
            if y is None:
                raise AssertionError(
                    "cocycle fell outside the saturated kernel lattice")
            free = tuple(y)
        return tors, free

    def class_is_zero(self, z):
        tors, free = self.express(z)
        return not any(tors) and not any(free)

    def element(self, tors, free):
        """A cochain representative of the class with the given coordinates."""
        if len(tors) != len(self.torsion) or len(free) != self.free_rank:
            raise ValueError("coordinate lengths do not match the group")
        v = [0] * self.n_cochains
        for c, g in zip(tors, self.torsion_generators):
            if c:
                for i, gi in enumerate(g):
                    v[i] += c * gi
        for c, g in zip(free, self.free_generators):
            if c:
                for i, gi in enumerate(g):
                    v[i] += c * gi
        return v

    def describe(self):
        return describe_group(self.torsion, self.free_rank)


def _coboundary_cols(cx, q):
    """Columns of delta^q: C^q -> C^{q+1}, one {row: coeff} dict per q-cell."""
    cols = [dict() for _ in range(cx.n_cells(q))]
    if 0 <= q < cx.dimension:
        for j, bcol in enumerate(cx.boundary_cols[q + 1]):
            for i, coeff in bcol.items():
                cols[i][j] = coeff
    return cols


def cochain_cohomology(cx, q=None):
    """H^q of the complex (all degrees when ``q`` is None)."""
    if q is None:
        return [cochain_cohomology(cx, k) for k in range(cx.dimension + 1)]
    if not 0 <= q <= cx.dimension:
        raise ValueError(f"degree {q} outside 0..{cx.dimension}")
    n = cx.n_cells(q)
    cob_in = _coboundary_cols(cx, q - 1) if q > 0 else []
    cob_out = _coboundary_cols(cx, q)
    if n == 0:
        return FgAbGroup(degree=q, n_cochains=0, torsion=[], free_rank=0,
                         torsion_generators=[], free_generators=[],
                         _U=[], _d_in=[], _rank_in=0, _tors_idx=[],
                         _W_snf=None, _cob_out=[], _cob_in=cob_in)
    # Present the coboundary image by its canonical triangular lattice basis
    # first: fewer, structured columns keep the Smith reduction from swelling
    # (raw delta^{q-1} columns can blow coefficients up by orders of
    # magnitude on the larger 4-dimensional complexes).
    lat = row_hnf_sparse([dict(c) for c in cob_in if c])
    A_in = [[0] * len(lat) for _ in range(n)]
    for l, row in enumerate(lat):
        for i, v in row.items():
            A_in[i][l] = v
    snf_in = smith_normal_form(A_in, track_v=False)
    r = snf_in.rank
    d_in = list(snf_in.diag)
    tors_idx = [i for i in range(r) if d_in[i] > 1]
    torsion = [d_in[i] for i in tors_idx]
    Ui = snf_in.uinv
    tors_gens = [[Ui[row][i] for row in range(n)] for i in tors_idx]
    # free part: kernel of delta^q restricted to the trailing coordinates
    n_out = cx.n_cells(q + 1)
    tail = range(r, n)
    if n_out == 0:
        W_rows = None
        kernel_dim = n - r
        free_gens = [[Ui[row][i] for row in range(n)] for i in tail]
    else:
        Bred = [[0] * (n - r) for _ in range(n_out)]
        for jj, i in enumerate(tail):
            img = _apply_cols(cob_out, [Ui[row][i] for row in range(n)], n_out)
            for k in range(n_out):
                Bred[k][jj] = img[k]
        Wcols = integer_kernel(Bred, ncols=n - r)
        kernel_dim = len(Wcols)
        W_rows = [[Wcols[j][i] for j in range(kernel_dim)]
                  for i in range(n - r)]
        free_gens = []
        for j in range(kernel_dim):
            g = [0] * n
            for ii, i in enumerate(tail):
                c = Wcols[j][ii]
                if c:
                    for row in range(n):
                        g[row] += c * Ui[row][i]
            free_gens.append(g)
    grp = FgAbGroup(
        degree=q, n_cochains=n, torsion=torsion, free_rank=kernel_dim,
        torsion_generators=tors_gens, free_generators=free_gens,
        _U=snf_in.U, _d_in=d_in, _rank_in=r, _tors_idx=tors_idx,
        _W_snf=None if W_rows is None else smith_normal_form(W_rows),
        _cob_out=cob_out, _cob_in=cob_in)
    return grp


def free_abelian_group(rank):
    """Z^rank presented as a degree-0 cohomology group (standalone limits)."""
    gens = [[1 if i == j else 0 for i in range(rank)] for j in range(rank)]
    return FgAbGroup(degree=0, n_cochains=rank, torsion=[], free_rank=rank,
                     torsion_generators=[], free_generators=gens,
                     _U=identity(rank), _d_in=[], _rank_in=0, _tors_idx=[],
                     _W_snf=None, _cob_out=[dict() for _ in range(rank)],
                     _cob_in=[])


# ------------------------------------------------------------- induced endos

@dataclass
class InducedEndo:
    """Endomorphism induced on H^q, in generator coordinates.

    ``matrix`` acts on (torsion coords ++ free coords); the torsion block is
    reduced modulo the invariant factors.  ``free_matrix`` is the action on
    H^q modulo torsion, suitable for characteristic polynomials.
    """

    group: FgAbGroup
    matrix: list
    torsion_matrix: list
    free_matrix: list
    cochain_cols: list = field(repr=False, default=None)

    @property
    def size(self):
        return len(self.group.torsion) + self.group.free_rank


def induced_cohomology_map(group, matrix, matrix_below=None):
    """Descend a degree-q cochain matrix to H^q.

    ``matrix`` (n_q x n_q, dense rows or column dicts) must commute with the
    coboundaries.  Passing ``matrix_below`` (the degree-(q-1) matrix of the
    same cochain map) lets that check run sparsely; without it the map is
    verified column-by-column on the coboundary lattice, which is fine for
    small complexes but quadratic for large ones.
    """
    n = group.n_cochains
    if matrix and isinstance(matrix[0], dict):
        cols = matrix
    else:
        if len(matrix) != n or (n and len(matrix[0]) != n):
            raise ValueError(f"matrix must be {n}x{n} in degree {group.degree}")
        cols = [dict() for _ in range(n)]
        for i in range(n):
            row = matrix[i]
            for j in range(n):
                if row[j]:
                    cols[j][i] = row[j]
    cob_in = group._cob_in
    if matrix_below is not None:
        if matrix_below and isinstance(matrix_below[0], dict):
            bcols = matrix_below
        else:
            bcols = [dict() for _ in range(len(matrix_below[0]))] \
                if matrix_below else []
            for i in range(len(matrix_below)):
                for j, v in enumerate(matrix_below[i]):
                    if v:
                        bcols[j][i] = v
        for l in range(len(cob_in)):
            lhs = _apply_cols_sparse(cols, cob_in[l])
            rhs = _apply_cols_sparse(cob_in, bcols[l]) if l < len(bcols) \
                else {}
            if lhs != rhs:
                raise NotCochainMap(
                    f"degree {group.degree}: matrix does not commute with "
                    f"the coboundary at basis cochain {l}")
    else:
        # direct check that coboundaries stay coboundaries
        U, d_in, r = group._U, group._d_in, group._rank_in
        for l in range(len(cob_in)):
            img = _apply_cols(cols, _dense_from_dict(cob_in[l], n), n)
            c = [_dot(U[i], img) for i in range(n)]
            ok = all(c[i] % d_in[i] == 0 for i in range(r)) and \
                not any(c[r:])
            if not ok:
                raise NotCochainMap(
                    f"degree {group.degree}: image of coboundary {l} is not "
                    f"a coboundary")
    T = len(group.torsion)
    f = group.free_rank
    columns = []
    for g in group.torsion_generators + group.free_generators:
        img = _apply_cols(cols, g, n)
        try:
            tors, free = group.express(img)
        except NotACocycle as exc:
            raise NotCochainMap(
                f"degree {group.degree}: generator image is not a cocycle "
                f"({exc})") from exc
        columns.append(list(tors) + list(free))
    for j in range(T):
        if any(columns[j][T:]):
            raise NotCochainMap(
                f"degree {group.degree}: torsion generator {j} acquires an "
                f"infinite-order image")
    k = T + f
    mat = [[columns[j][i] for j in range(k)] for i in range(k)]
    tors_block = [[mat[i][j] for j in range(T)] for i in range(T)]
    free_block = [[mat[T + i][T + j] for j in range(f)] for i in range(f)]
    return InducedEndo(group=group, matrix=mat, torsion_matrix=tors_block,
                       free_matrix=free_block, cochain_cols=cols)


def _dense_from_dict(col, n):
    v = [0] * n
    for i, a in col.items():
        v[i] = a
    return v


def cohomology_with_action(cx, cell_map):
    """All H^q plus the endomorphisms induced by a cell map's transposes."""
    groups = cochain_cohomology(cx)
    endos = []
    for q in range(cx.dimension + 1):
        A = transpose(cell_map.matrix(q)) if cx.n_cells(q) else []
        below = transpose(cell_map.matrix(q - 1)) if q > 0 and \
            cx.n_cells(q - 1) else None
        endos.append(induced_cohomology_map(groups[q], A, below))
    return groups, endos


# ------------------------------------------------------------- direct limits

@dataclass(frozen=True, eq=False)
class LimitElement:
    """An element of a direct limit: coordinates placed at a stage.

    [stage, x] and [stage+1, phi(x)] represent the same limit element;
    compare with ``limit_equal``, not ``==``.
    """

    group: object
    stage: int
    coords: tuple


@dataclass(eq=False)
class DirectLimitGroup:
    """lim (G -> G -> ...) presented on the injective stable quotient G'.

    ``torsion``/``free_rank`` describe G'; ``phi`` is the induced (injective)
    endomorphism on its coordinates, torsion rows reduced modulo the
    invariant factors.  Every limit element is a pair (stage, G'-coords).
    """

    torsion: list
    free_rank: int
    phi: list
    stabilized_after: int
    base: InducedEndo = None
    _U_keep: list = field(repr=False, default=None)  # surviving rows of U
    _mods: list = field(repr=False, default=None)  # d_i for torsion, 0 free
    _ambient: int = field(repr=False, default=0)
    _space: str = field(repr=False, default="presentation")

    # -- element constructors ------------------------------------------
    def element_from_cohomology(self, tors, free, stage=0):
        if self._space == "cochain":
            return self.element_from_cochain(
                self.base.group.element(tors, free), stage)
        x = list(tors) + list(free)
        if len(x) != self._ambient:
            raise ValueError(
                f"expected {self._ambient} presentation coordinates")
        u = [_dot(row, x) for row in self._U_keep]
        return LimitElement(self, stage, self._canon(u))

    def element_from_cochain(self, z, stage=0):
        if self._space == "cochain":
            v = _vector_of(z)
            if len(v) != self._ambient:
                raise ValueError(
                    f"cochain has length {len(v)}, expected {self._ambient}")
            u = [_dot(row, v) for row in self._U_keep]
            return LimitElement(self, stage, self._canon(u))
        tors, free = self.base.group.express(z)
        return self.element_from_cohomology(tors, free, stage)

    def element(self, coords, stage=0):
        """An element from coordinates of the stable quotient itself."""
        if len(coords) != len(self._mods):
            raise ValueError(
                f"expected {len(self._mods)} stable-quotient coordinates")
        return LimitElement(self, stage, self._canon(list(coords)))

    def zero(self, stage=0):
        return LimitElement(self, stage, (0,) * len(self._U_keep))

    # -- arithmetic ------------------------------------------------------
    def _canon(self, coords):
        return tuple(c % m if m else c for c, m in zip(coords, self._mods))

    def apply(self, coords):
        out = [_dot(row, coords) for row in self.phi]
        return self._canon(out)

    def shift(self, elem, steps=1):
        if steps < 0:
            raise ValueError("can only shift to later stages")
        c = tuple(elem.coords)
        for _ in range(steps):
            c = self.apply(c)
        return LimitElement(self, elem.stage + steps, c)

    def scale(self, elem, c):
        return LimitElement(self, elem.stage,
                            self._canon([c * x for x in elem.coords]))

    def add(self, a, b):
        s = max(a.stage, b.stage)
        ca = self.shift(a, s - a.stage).coords
        cb = self.shift(b, s - b.stage).coords
        return LimitElement(self, s,
                            self._canon([x + y for x, y in zip(ca, cb)]))

    def torsion_action(self):
        T = len(self.torsion)
        return [[self.phi[i][j] for j in range(T)] for i in range(T)]

    def free_action(self):
        T = len(self.torsion)
        k = len(self._U_keep)
        return [[self.phi[i][j] for j in range(T, k)] for i in range(T, k)]

    def describe(self):
        return describe_group(self.torsion, self.free_rank)


def _preimage_lattice(phi, hnf_rows, k):
    """Row basis of {x : phi x in lattice(hnf_rows)}."""
    r = len(hnf_rows)
    M = [phi[i][:] + [-hnf_rows[l][i] for l in range(r)] for i in range(k)]
    ker = integer_kernel(M, ncols=k + r)
    rows = [col[:k] for col in ker]
    return rows + [list(row) for row in hnf_rows]


def _check_relations_preserved(phi_red, mods):
    """Torsion columns of the reduced map cannot leak into free rows."""
    for a, ma in enumerate(mods):
        for b, mb in enumerate(mods):
            if mb > 1:
                if ma == 0:
                    assert phi_red[a][b] == 0, \
                        "torsion leaked into the free part"
                else:
                    assert (mb * phi_red[a][b]) % ma == 0, \
                        "induced map does not preserve the relation lattice"


def direct_limit_summary(endo, max_steps=64, space="auto"):
    """Stable presentation of lim (H -> H -> ...) under the induced endo.

    Two equivalent routes: ``presentation`` runs the preimage-lattice chain
    in generator coordinates of H^q (k small, dense), while ``cochain`` runs
    it in the cochain module itself, where the endomorphism is sparse.  The
    cochain route applies only when every cochain is a cocycle (delta^q = 0,
    e.g. in the top degree), which is exactly when H^q is the cochain module
    modulo the incoming coboundary lattice.  ``auto`` picks the cochain
    route for large groups whenever it is valid.
    """
    grp = endo.group
    k = len(grp.torsion) + grp.free_rank
    can_cochain = (endo.cochain_cols is not None
                   and all(not c for c in grp._cob_out))
    if space == "auto":
        # the cochain route wins when the group is large relative to the
        # cochain module; past ~500 cochains the per-step Hermite forms
        # dominate either way
        space = ("cochain"
                 if can_cochain and k > 96 and grp.n_cochains <= 512
                 else "presentation")
    elif space == "cochain" and not can_cochain:
        raise ValueError(
            "the cochain-space route needs delta^q = 0 and the inducing "
            "cochain matrix; use space='presentation'")
    elif space not in ("presentation", "cochain"):
        raise ValueError(f"unknown limit space {space!r}")
    if space == "cochain":
        return _limit_cochain_space(endo, max_steps)
    return _limit_presentation_space(endo, max_steps)


def _limit_presentation_space(endo, max_steps):
    ds = list(endo.group.torsion)
    k = len(ds) + endo.group.free_rank
    phi = endo.matrix
    lat = [[ds[i] if j == i else 0 for j in range(k)] for i in range(len(ds))]
    hnf = row_hnf(lat)
    steps = 0
    while True:
        nxt = row_hnf(_preimage_lattice(phi, hnf, k)) if k else []
        if nxt == hnf:
            break
        hnf = nxt
        steps += 1
        if steps > max_steps:
            raise AssertionError(
                f"preimage lattices failed to stabilise in {max_steps} steps")
    rel = [[hnf[l][i] for l in range(len(hnf))] for i in range(k)]
    if hnf:
        snf_rel = smith_normal_form(rel, track_v=False)
        dfull = list(snf_rel.diag) + [0] * (k - len(snf_rel.diag))
        U, Ui = snf_rel.U, snf_rel.uinv
    else:
        dfull = [0] * k
        U, Ui = identity(k), identity(k)
    keep = [i for i in range(k) if dfull[i] != 1]
    mods = [dfull[i] for i in keep]
    psi = mat_mul(mat_mul(U, phi), Ui)
    phi_red = [[psi[a][b] % dfull[a] if dfull[a] else psi[a][b]
                for b in keep] for a in keep]
    _check_relations_preserved(phi_red, mods)
    torsion = [m for m in mods if m > 1]
    free_rank = sum(1 for m in mods if m == 0)
    return DirectLimitGroup(
        torsion=torsion, free_rank=free_rank, phi=phi_red,
        stabilized_after=steps, base=endo, _U_keep=[U[i] for i in keep],
        _mods=mods, _ambient=k, _space="presentation")


def _preimage_lattice_sparse(cols, hnf_rows, n):
    """Sparse rows spanning {x : (cols) x in lattice(hnf_rows)}."""
    r = len(hnf_rows)
    M = [[0] * (n + r) for _ in range(n)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            M[i][j] = v
    for l, row in enumerate(hnf_rows):
        for i, v in row.items():
            M[i][n + l] = -v
    ker = integer_kernel(M, ncols=n + r)
    rows = [{j: c[j] for j in range(n) if c[j]} for c in ker]
    return rows + [dict(row) for row in hnf_rows]


def _limit_cochain_space(endo, max_steps):
    grp = endo.group
    n = grp.n_cochains
    cols = endo.cochain_cols
    hnf = row_hnf_sparse([dict(c) for c in grp._cob_in if c])
    for row in hnf:
        img = _apply_cols_sparse(cols, row)
        if not hnf_contains_sparse(hnf, img):
            raise NotCochainMap(
                f"degree {grp.degree}: coboundary lattice is not preserved")
    steps = 0
    while True:
        nxt = row_hnf_sparse(_preimage_lattice_sparse(cols, hnf, n))
        if nxt == hnf:
            break
        hnf = nxt
        steps += 1
        if steps > max_steps:
            raise AssertionError(
                f"preimage lattices failed to stabilise in {max_steps} steps")
    rel = [[0] * len(hnf) for _ in range(n)]
    for l, row in enumerate(hnf):
        for i, v in row.items():
            rel[i][l] = v
    if hnf:
        snf_rel = smith_normal_form(rel, track_v=False)
        dfull = list(snf_rel.diag) + [0] * (n - len(snf_rel.diag))
        U, Ui = snf_rel.U, snf_rel.uinv
    else:
        dfull = [0] * n
        U, Ui = identity(n), identity(n)
    keep = [i for i in range(n) if dfull[i] != 1]
    mods = [dfull[i] for i in keep]
    U_keep = [U[i] for i in keep]
    # phi' = (U A U^-1) restricted to the surviving coordinates; exploit the
    # sparsity of A by contracting it against the kept rows of U first.
    PA = [[sum(row[i] * v for i, v in cols[j].items()) for j in range(n)]
          for row in U_keep]
    qcols = [[(i, Ui[i][b]) for i in range(n) if Ui[i][b]] for b in keep]
    phi_red = []
    for a in range(len(keep)):
        ra = PA[a]
        ma = mods[a]
        out = [sum(ra[i] * v for i, v in qc) for qc in qcols]
        phi_red.append([x % ma if ma else x for x in out])
    _check_relations_preserved(phi_red, mods)
    torsion = [m for m in mods if m > 1]
    free_rank = sum(1 for m in mods if m == 0)
    return DirectLimitGroup(
        torsion=torsion, free_rank=free_rank, phi=phi_red,
        stabilized_after=steps, base=endo, _U_keep=U_keep,
        _mods=mods, _ambient=n, _space="cochain")


def limit_equal(a, b):
    """Equality of two limit elements (same DirectLimitGroup)."""
    g = a.group
    if b.group is not g:
        raise ValueError("elements live in different limit groups")
    s = max(a.stage, b.stage)
    ca = g.shift(a, s - a.stage).coords
    cb = g.shift(b, s - b.stage).coords
    return ca == cb


class EndoModule:
    """H^q with its induced endomorphism, as a stage-indexed module.

    Carries the same element calculus as DirectLimitGroup (apply, shift,
    scale, add, and the divisibility scans) directly on the presentation of
    H^q, without stabilising the preimage chain first.  This is enough for
    divisibility: [stage, x] is divisible by n in the direct limit iff some
    iterate of x lands in n*H^q, a finite orbit question in H^q / n*H^q —
    tensoring with Z/n commutes with direct limits, so no stable quotient
    is needed.  The price is equality testing: comparing representatives at
    a common stage is sufficient for limit equality but only complete once
    the induced map is injective.  For groups small enough to stabilise,
    prefer ``direct_limit_summary``.
    """

    def __init__(self, endo):
        self.base = endo
        g = endo.group
        self.torsion = list(g.torsion)
        self.free_rank = g.free_rank
        self.phi = endo.matrix
        self.stabilized_after = None  # not stabilised by construction
        self._mods = list(g.torsion) + [0] * g.free_rank

    # -- element constructors ------------------------------------------
    def element_from_cohomology(self, tors, free, stage=0):
        g = self.base.group
        if len(tors) != len(g.torsion) or len(free) != g.free_rank:
            raise ValueError("coordinate lengths do not match the group")
        return LimitElement(self, stage,
                            self._canon(list(tors) + list(free)))

    def element_from_cochain(self, z, stage=0):
        tors, free = self.base.group.express(z)
        return self.element_from_cohomology(tors, free, stage)

    def element(self, coords, stage=0):
        """Same as element_from_cohomology, with the coordinates joined."""
        if len(coords) != len(self._mods):
            raise ValueError(
                f"expected {len(self._mods)} coordinates")
        return LimitElement(self, stage, self._canon(list(coords)))

    def zero(self, stage=0):
        return LimitElement(self, stage, (0,) * len(self._mods))

    # -- arithmetic (same contracts as DirectLimitGroup) -----------------
    def _canon(self, coords):
        return tuple(c % m if m else c for c, m in zip(coords, self._mods))

    def apply(self, coords):
        return self._canon([_dot(row, coords) for row in self.phi])

    def shift(self, elem, steps=1):
        if steps < 0:
            raise ValueError("can only shift to later stages")
        c = tuple(elem.coords)
        for _ in range(steps):
            c = self.apply(c)
        return LimitElement(self, elem.stage + steps, c)

    def scale(self, elem, c):
        return LimitElement(self, elem.stage,
                            self._canon([c * x for x in elem.coords]))

    def add(self, a, b):
        s = max(a.stage, b.stage)
        ca = self.shift(a, s - a.stage).coords
        cb = self.shift(b, s - b.stage).coords
        return LimitElement(self, s,
                            self._canon([x + y for x, y in zip(ca, cb)]))

    def torsion_action(self):
        return [row[:] for row in self.base.torsion_matrix]

    def free_action(self):
        return [row[:] for row in self.base.free_matrix]

    def describe(self):
        return describe_group(self.torsion, self.free_rank)


@dataclass
class TorsionLimitSummary:
    """Stable torsion subgroup of a direct limit, with the induced action."""

    torsion: list
    steps: int
    generators: list  # rows: elements of the torsion subgroup of H^q
    action: list      # matrix of the (bijective) action in generator coords
    _ds: list = field(repr=False, default=None)
    _V: list = field(repr=False, default=None)     # SNF V of the relation matrix
    _diag: list = field(repr=False, default=None)

    def describe(self):
        return describe_group(self.torsion, 0)

    def invariant_coords(self, tors_coords):
        """Coordinates of a torsion element on the stable invariant factors.

        ``tors_coords`` are ambient torsion coordinates (one per invariant
        factor of H^q).  Returns one residue per entry of ``torsion``, or
        None when the element lies outside the stable subgroup.
        """
        t = len(self._ds)
        if len(tors_coords) != t:
            raise ValueError(
                f"expected {t} torsion coordinates, got {len(tors_coords)}")
        if t == 0:
            return ()
        rel = [[self._ds[i] if j == i else 0 for j in range(t)]
               for i in range(t)]
        x = solve_linear_integer(transpose(self.generators + rel),
                                 list(tors_coords))
        if x is None:
            return None
        y = x[:len(self.generators)]
        z = [sum(y[j] * self._V[j][i] for j in range(len(y))) % self._diag[i]
             for i in range(len(self._diag))]
        return tuple(z[i] for i in range(len(self._diag))
                     if self._diag[i] > 1)


def torsion_limit(endo, max_steps=64):
    """lim of the torsion subgroup of H^q under the induced endomorphism.

    The direct limit of the torsion-free quotient is torsion-free, so the
    torsion subgroup of lim H^q is the direct limit of the finite torsion
    subgroup T alone: the descending chain T, phi(T), phi^2(T), ...
    stabilises on a subgroup the map permutes bijectively.  Runs on the
    torsion block only, so it is cheap even when the full group is too
    large to stabilise.
    """
    ds = list(endo.group.torsion)
    t = len(ds)
    if t == 0:
        return TorsionLimitSummary(torsion=[], steps=0, generators=[],
                                   action=[], _ds=[], _V=[], _diag=[])
    phi_t = endo.torsion_matrix
    rel = [[ds[i] if j == i else 0 for j in range(t)] for i in range(t)]
    basis = row_hnf(identity(t) + rel)
    steps = 0
    while True:
        image = [[_dot(phi_t[i], row) % ds[i] for i in range(t)]
                 for row in basis]
        nxt = row_hnf(image + rel)
        if nxt == basis:
            break
        basis = nxt
        steps += 1
        if steps > max_steps:
            raise AssertionError(
                f"torsion images failed to stabilise in {max_steps} steps")
    # invariant factors of basis-lattice / relation-lattice: express each
    # relation row over the basis (integrally solvable since rel ⊆ basis)
    C = []
    for row in rel:
        y = solve_linear_integer(transpose(basis), row)
        assert y is not None, "relation row escaped the stable lattice"
        C.append(y)
    snf_c = smith_normal_form(C, track_u=False)
    torsion = [d for d in snf_c.diag if d > 1]
    action = []
    for row in basis:
        img = [_dot(phi_t[i], row) % ds[i] for i in range(t)]
        y = solve_linear_integer(transpose(basis), img)
        assert y is not None, "stable subgroup is not preserved"
        action.append(y)
    return TorsionLimitSummary(torsion=torsion, steps=steps,
                               generators=basis, action=action,
                               _ds=ds, _V=snf_c.V, _diag=list(snf_c.diag))


@dataclass
class DivisibilityResult:
    n: int
    divisible: bool
    steps: int
    witness: LimitElement
    unique: bool
    orbit: list


def divisible_by(elem, n, max_orbit=100000):
    """Is the limit element divisible by n?  Exact witness when it is.

    Divisibility of [stage, x] by n holds iff some phi-iterate of x becomes
    zero in G'/nG'; the orbit there is finite, so the scan terminates.  The
    witness w satisfies n*w = elem in the limit (verified before returning);
    it is unique iff n is coprime to all invariant factors of G'.
    """
    if n == 0:
        raise ValueError("divisibility by zero is not defined")
    n = abs(n)
    g = elem.group
    mods = [math.gcd(m, n) if m else n for m in g._mods]
    unique = all(math.gcd(m, n) == 1 for m in g.torsion)
    if n == 1:
        return DivisibilityResult(1, True, 0, elem, unique, [])
    x = list(elem.coords)
    seen = {}
    orbit = []
    r = 0
    while True:
        state = tuple(c % m for c, m in zip(x, mods))
        orbit.append(state)
        if not any(state):
            witness = _divisibility_witness(g, x, n, elem.stage + r)
            scaled = g.scale(witness, n)
            assert limit_equal(scaled, elem), "witness failed verification"
            return DivisibilityResult(n, True, r, witness, unique, orbit)
        if state in seen:
            return DivisibilityResult(n, False, r, None, unique, orbit)
        seen[state] = r
        if len(seen) > max_orbit:
            raise AssertionError("divisibility orbit exceeded max_orbit")
        x = list(g.apply(x))
        r += 1


def _divisibility_witness(g, coords, n, stage):
    w = []
    for c, m in zip(coords, g._mods):
        if m == 0:
            assert c % n == 0
            w.append(c // n)
        else:
            gcd = math.gcd(n, m)
            assert c % gcd == 0
            step = m // gcd
            wi = ((c // gcd) * pow(n // gcd, -1, step)) % step if step > 1 \
                else 0
            w.append(wi)
    return LimitElement(g, stage, g._canon(w))


def divisibility_probe(elem, ns=(2, 3, 5, 7)):
    """divisible_by for several n at once."""
    return {n: divisible_by(elem, n) for n in ns}


def eigen_divisibility_certificate(elem, p, depth=3):
    """Certificate for p-divisibility of a limit element, with witness chain.

    The minimal polynomial of the element's orbit in G'/pG' (a vector space
    over F_p) is a power of t exactly when the orbit is nilpotent, i.e. when
    the element is p-divisible in the limit.  On success the certificate
    carries a chain of ``depth`` successive p-th parts, each verified
    exactly; infinite p-divisibility (eigenvalue direction divisible by p)
    shows up as the chain reaching the requested depth.
    """
    from sympy import isprime

    if not isprime(p):
        raise ValueError(f"certificate requires a prime, got {p}")
    g = elem.group
    active = [j for j, m in enumerate(g._mods) if m == 0 or m % p == 0]

    def reduced(coords):
        return [coords[j] % p for j in active]

    def apply_bar(vec):
        full = [0] * len(g._mods)
        for j, val in zip(active, vec):
            full[j] = val
        return reduced(g.apply(full))

    # Krylov sequence; each echelon row remembers its expression over the
    # sequence, so the first dependence yields the minimal polynomial.
    v = reduced(elem.coords)
    echelon = []  # (pivot, vector, combo over v_0..v_t)
    t = 0
    while True:
        vec = [x % p for x in v]
        combo = [0] * t + [1]
        for entry in echelon:
            while len(entry[2]) < len(combo):
                entry[2].append(0)
        for piv, b, cmb in echelon:
            c = vec[piv]
            if c:
                f = (c * pow(b[piv], -1, p)) % p
                vec = [(x - f * y) % p for x, y in zip(vec, b)]
                combo = [(x - f * y) % p for x, y in zip(combo, cmb)]
        if not any(vec):
            minpoly = combo  # sum(minpoly[i] * phi^i) kills the element
            break
        piv = next(i for i, x in enumerate(vec) if x)
        echelon.append((piv, vec, combo))
        v = apply_bar(v)
        t += 1
    nilpotent = all(c % p == 0 for c in minpoly[:-1])
    chain = []
    w = elem
    achieved = 0
    for _ in range(depth):
        res = divisible_by(w, p)
        if not res.divisible:
            break
        w = res.witness
        chain.append({"stage": w.stage, "coords": list(w.coords)})
        achieved += 1
    if depth >= 1:
        assert nilpotent == (achieved >= 1), \
            "certificate disagrees with the direct divisibility scan"
    return {
        "prime": p,
        "element": {"stage": elem.stage, "coords": list(elem.coords)},
        "minimal_polynomial_mod_p": minpoly,
        "orbit_nilpotent": nilpotent,
        "divisible": nilpotent,
        "witness_chain": chain,
        "verified_depth": achieved,
        "requested_depth": depth,
        "group": g.describe(),
    }
