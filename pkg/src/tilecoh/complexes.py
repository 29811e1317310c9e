"""CW models of substitution tiling spaces, with exact integer boundaries.

Two models are built the same way from different carriers:

* the pair-window model ("dual"): one top cell per legal 2-per-axis window,
  i.e. per vertex configuration of the tiling;
* the uncollared prototile model ("ap"): one top cell per color.  Only valid
  when the rule is flagged as forcing its border.

A q-cell is an equivalence class of pairs (carrier, face) where the face
pattern assigns every axis either "spanned" (2) or a fixed side (0 low /
1 high).  Two pairs are identified when their carriers can sit next to each
other in a tiling and the faces land on the same geometric cube; the
identification is generated by single-axis overlaps and closed off by
union-find.  Boundaries and the substitution-induced chain map are computed
on class representatives; well-definedness over every representative can be
checked with verify_complex(..., thorough=True).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BorderNotAsserted,
    ChainMapViolation,
    IllegalFace,
    IncompatibleInvolution,
    NonCommuting,
    OrientationReversingFixedCell,
)
from .rules import substitute_patch
from .windows import build_window_language

SPAN = 2


def span_axes(face):
    return tuple(a for a, f in enumerate(face) if f == SPAN)


def face_degree(face):
    return sum(1 for f in face if f == SPAN)


class _DisjointSet:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller key as root so representatives are canonical
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass
class CellComplexData:
    kind: str
    dimension: int
    cells: list          # per degree q: list of representative pairs
    boundary_cols: list  # per degree q: list over q-cells of {lower_idx: coeff}
    meta: dict = field(default_factory=dict)

    def n_cells(self, q):
        if not 0 <= q <= self.dimension:
            return 0
        return len(self.cells[q])

    def counts(self):
        return tuple(len(c) for c in self.cells)

    def boundary_matrix(self, q):
        """Dense matrix of the boundary C_q -> C_{q-1}."""
        rows = self.n_cells(q - 1)
        cols = self.n_cells(q)
        M = [[0] * cols for _ in range(rows)]
        for j, col in enumerate(self.boundary_cols[q]):
            for i, v in col.items():
                M[i][j] = v
        return M

    def cell_class(self, carrier, face):
        """(degree, index) of the cell containing the pair (carrier, face)."""
        key = self.meta["pair_class"].get((carrier, tuple(face)))
        if key is None:
            raise IllegalFace(f"pair ({carrier}, {tuple(face)}) is not a cell "
                              f"of this complex")
        return key


def _build_glued_complex(rule, kind, carriers, carrier_count, gluings):
    """Shared construction: union-find over (carrier, face) pairs.

    ``gluings`` yields (axis, low_carrier, high_carrier) adjacency facts.
    """
    d = rule.dimension
    faces = list(itertools.product((0, 1, SPAN), repeat=d))
    uf = _DisjointSet()
    for c in range(carrier_count):
        for F in faces:
            uf.add((c, F))

    rest_patterns = list(itertools.product((0, 1, SPAN), repeat=d - 1)) \
        if d > 1 else [()]
    for axis, lo, hi in gluings:
        for rest in rest_patterns:
            f_lo = rest[:axis] + (1,) + rest[axis:]
            f_hi = rest[:axis] + (0,) + rest[axis:]
            uf.union((lo, f_lo), (hi, f_hi))

    groups = {}
    for c in range(carrier_count):
        for F in faces:
            groups.setdefault(uf.find((c, F)), []).append((c, F))

    cells = [[] for _ in range(d + 1)]
    for root, members in groups.items():
        rep = min(members)
        cells[face_degree(rep[1])].append(rep)
    for q in range(d + 1):
        cells[q].sort()

    pair_class = {}
    rep_index = {rep: (face_degree(rep[1]), i)
                 for q in range(d + 1) for i, rep in enumerate(cells[q])}
    for root, members in groups.items():
        rep = min(members)
        where = rep_index[rep]
        for pair in members:
            pair_class[pair] = where

    boundary_cols = [[] for _ in range(d + 1)]
    for q in range(1, d + 1):
        for rep in cells[q]:
            c, F = rep
            col = {}
            spans = span_axes(F)
            for j, a in enumerate(spans):
                sgn = 1 if j % 2 == 0 else -1
                hi = F[:a] + (1,) + F[a + 1:]
                lo = F[:a] + (0,) + F[a + 1:]
                for face, s in ((hi, sgn), (lo, -sgn)):
                    _, idx = pair_class[(c, face)]
                    v = col.get(idx, 0) + s
                    if v:
                        col[idx] = v
                    else:
                        col.pop(idx, None)
            boundary_cols[q].append(col)

    cx = CellComplexData(
        kind=kind, dimension=d, cells=cells, boundary_cols=boundary_cols,
        meta={"rule": rule, "pair_class": pair_class, "carriers": carriers,
              "groups": {min(v): v for v in groups.values()}})
    _check_boundary_squares_to_zero(cx)
    return cx


def _check_boundary_squares_to_zero(cx):
    for q in range(2, cx.dimension + 1):
        lower = cx.boundary_cols[q - 1]
        for j, col in enumerate(cx.boundary_cols[q]):
            acc = {}
            for i, v in col.items():
                for l, w in lower[i].items():
                    acc[l] = acc.get(l, 0) + v * w
            if any(acc.values()):
                raise AssertionError(
                    f"boundary does not square to zero at degree {q}, cell {j}")


def build_dual_complex(rule):
    """The pair-window model: one top cell per legal 2-per-axis window."""
    d = rule.dimension
    lam = rule.expansion
    shapes = [(2,) * d]
    for a in range(d):
        shapes.append(tuple(3 if b == a else 2 for b in range(d)))
    lang = build_window_language(rule, shapes)
    windows = lang.windows((2,) * d)
    index = {w.tobytes(): i for i, w in enumerate(windows)}

    def gluings():
        for a in range(d):
            shape3 = tuple(3 if b == a else 2 for b in range(d))
            for W in lang.windows(shape3):
                sl_lo = tuple(slice(0, 2) if b == a else slice(None)
                              for b in range(d))
                sl_hi = tuple(slice(1, 3) if b == a else slice(None)
                              for b in range(d))
                lo = index[np.ascontiguousarray(W[sl_lo]).tobytes()]
                hi = index[np.ascontiguousarray(W[sl_hi]).tobytes()]
                yield (a, lo, hi)

    cx = _build_glued_complex(rule, "dual", windows, len(windows), gluings())
    cx.meta["window_index"] = index
    return cx


def build_ap_uncollared(rule):
    """The uncollared prototile model; needs rule.forces_border == True."""
    if rule.forces_border is not True:
        raise BorderNotAsserted(
            f"rule {rule.name!r} is not flagged as border-forcing; the "
            f"uncollared model is only a valid quotient then")
    d = rule.dimension
    shapes = [tuple(2 if b == a else 1 for b in range(d)) for a in range(d)]
    lang = build_window_language(rule, shapes)

    def gluings():
        for a in range(d):
            for W in lang.windows(shapes[a]):
                flat = W.reshape(-1)
                yield (a, int(flat[0]), int(flat[1]))

    return _build_glued_complex(rule, "ap", list(rule.colors),
                                len(rule.colors), gluings())


# --------------------------------------------------------------- chain maps

@dataclass
class CellMap:
    """A chain self-map, columns per degree: cols[q][j] = {i: coeff}."""
    cols: list
    source: CellComplexData

    def matrix(self, q):
        n = self.source.n_cells(q)
        M = [[0] * n for _ in range(n)]
        for j, col in enumerate(self.cols[q]):
            for i, v in col.items():
                M[i][j] = v
        return M


def _child_offsets(face, lam):
    ranges = []
    for f in face:
        if f == SPAN:
            ranges.append(range(lam))
        else:
            ranges.append((f * (lam - 1),))
    return itertools.product(*ranges)


def _chain_map_column(cx, rep):
    rule = cx.meta["rule"]
    lam = rule.expansion
    c, F = rep
    col = {}
    if cx.kind == "dual":
        windows = cx.meta["carriers"]
        index = cx.meta["window_index"]
        img = substitute_patch(rule, windows[c]).cells
        for off in _child_offsets(F, lam):
            sl = tuple(slice(o, o + 2) for o in off)
            child = index[np.ascontiguousarray(img[sl]).tobytes()]
            _, idx = cx.meta["pair_class"][(child, F)]
            col[idx] = col.get(idx, 0) + 1
    elif cx.kind == "ap":
        block = rule.block(c)
        for off in _child_offsets(F, lam):
            child = int(block[tuple(off)])
            _, idx = cx.meta["pair_class"][(child, F)]
            col[idx] = col.get(idx, 0) + 1
    else:
        raise ValueError(f"no chain map rule for complex kind {cx.kind!r}")
    return col


def induced_chain_map(cx):
    """The substitution-induced chain self-map of the complex.

    Top cells map to the sub-carriers of their substituted block anchored at
    the low corner; a fixed axis side s contributes the child at offset
    s*(lam-1), so faces follow the faces of the block.
    """
    if cx.kind == "quotient":
        raise ValueError("chain map of a quotient is built by "
                         "quotient_by_involution")
    cols = [[_chain_map_column(cx, rep) for rep in cx.cells[q]]
            for q in range(cx.dimension + 1)]
    cm = CellMap(cols=cols, source=cx)
    _check_chain_map(cx, cm)
    return cm


def _compose_cols(left_cols, right_cols):
    """Columns of (left o right) given columns of each factor."""
    out = []
    for col in right_cols:
        acc = {}
        for k, v in col.items():
            for i, w in left_cols[k].items():
                u = acc.get(i, 0) + v * w
                if u:
                    acc[i] = u
                else:
                    acc.pop(i, None)
        out.append(acc)
    return out


def _check_chain_map(cx, cm):
    for q in range(1, cx.dimension + 1):
        lhs = _compose_cols(cm.cols[q - 1], cx.boundary_cols[q])
        rhs = _compose_cols(cx.boundary_cols[q], cm.cols[q])
        if lhs != rhs:
            raise ChainMapViolation(
                f"substitution image does not commute with the boundary at "
                f"degree {q}")


def verify_complex(cx, thorough=False):
    """Consistency checks; raises on failure, returns a summary dict.

    ``thorough`` recomputes boundary and chain-map columns from every
    member of every equivalence class, not just the canonical
    representative, and confirms they agree.
    """
    _check_boundary_squares_to_zero(cx)
    out = {"boundary_squares_to_zero": True, "cells": cx.counts()}
    if thorough and cx.kind in ("dual", "ap"):
        rule = cx.meta["rule"]
        groups = cx.meta["groups"]
        for q in range(cx.dimension + 1):
            for idx, rep in enumerate(cx.cells[q]):
                base_col = None
                base_map = None
                for member in groups[rep]:
                    col = {}
                    c, F = member
                    spans = span_axes(F)
                    for j, a in enumerate(spans):
                        sgn = 1 if j % 2 == 0 else -1
                        for val, s in ((1, sgn), (0, -sgn)):
                            face = F[:a] + (val,) + F[a + 1:]
                            _, i2 = cx.meta["pair_class"][(c, face)]
                            v = col.get(i2, 0) + s
                            if v:
                                col[i2] = v
                            else:
                                col.pop(i2, None)
                    mcol = _chain_map_column(cx, member)
                    if base_col is None:
                        base_col, base_map = col, mcol
                    elif col != base_col or mcol != base_map:
                        raise AssertionError(
                            f"cell ({q},{idx}) not well defined: member "
                            f"{member} disagrees with representative {rep}")
        out["representatives_consistent"] = True
    return out


# --------------------------------------------------------------- involutions

@dataclass
class CellInvolution:
    """Per degree: target index, sign, and whether the cell folds onto
    itself through a nontrivial permutation of its spanned axes."""
    target: list   # per q: list of ints
    sign: list     # per q: list of +1/-1
    fold: list     # per q: list of bool
    source: CellComplexData
    axis_perm: tuple | None = None
    color_perm: tuple | None = None


def _perm_parity_on(perm, axes):
    """Parity of the permutation induced on the ordered axis list."""
    mapped = [perm[a] for a in axes]
    inv = 0
    for i in range(len(mapped)):
        for j in range(i + 1, len(mapped)):
            if mapped[i] > mapped[j]:
                inv += 1
    return -1 if inv % 2 else 1


def involution_from_symmetry(cx, color_perm=None, axis_perm=None):
    """Build the cell involution induced by a symmetry of the rule.

    The symmetry permutes colors and/or coordinate axes and must commute
    with the substitution; both the pair map and its compatibility with the
    gluing are verified, and IncompatibleInvolution is raised otherwise.
    """
    rule = cx.meta["rule"]
    d = cx.dimension
    m = len(rule.colors)
    cp = tuple(color_perm) if color_perm is not None else tuple(range(m))
    ap = tuple(axis_perm) if axis_perm is not None else tuple(range(d))
    if sorted(cp) != list(range(m)) or any(cp[cp[i]] != i for i in range(m)):
        raise IncompatibleInvolution("color permutation is not an involution")
    if sorted(ap) != list(range(d)) or any(ap[ap[a]] != a for a in range(d)):
        raise IncompatibleInvolution("axis permutation is not an involution")

    # the rule itself must commute with the symmetry
    cpa = np.asarray(cp, dtype=np.int32)
    T = rule.table_array()
    for i in range(m):
        swapped = np.transpose(cpa[T[i]], ap)
        if not np.array_equal(swapped, T[cp[i]]):
            raise IncompatibleInvolution(
                f"rule does not commute with the symmetry at color "
                f"{rule.colors[i]!r}")

    if cx.kind == "dual":
        windows = cx.meta["carriers"]
        index = cx.meta["window_index"]

        def carrier_map(c):
            w2 = cpa[np.transpose(windows[c], ap)]
            key = np.ascontiguousarray(w2).tobytes()
            if key not in index:
                raise IncompatibleInvolution(
                    "symmetry maps a legal window outside the language")
            return index[key]
    elif cx.kind == "ap":
        def carrier_map(c):
            return cp[c]
    else:
        raise IncompatibleInvolution(
            f"cannot derive an involution on complex kind {cx.kind!r}")

    def pair_map(pair):
        c, F = pair
        F2 = tuple(F[ap[e]] for e in range(d))
        return (carrier_map(c), F2)

    pair_class = cx.meta["pair_class"]
    target = [[None] * len(cx.cells[q]) for q in range(d + 1)]
    sign = [[1] * len(cx.cells[q]) for q in range(d + 1)]
    fold = [[False] * len(cx.cells[q]) for q in range(d + 1)]
    for pair, (q, idx) in pair_class.items():
        q2, idx2 = pair_class[pair_map(pair)]
        if q2 != q:
            raise IncompatibleInvolution("symmetry does not preserve degree")
        if target[q][idx] is None:
            target[q][idx] = idx2
        elif target[q][idx] != idx2:
            raise IncompatibleInvolution(
                f"symmetry is not constant on cell classes at degree {q}")
    for q in range(d + 1):
        for idx, rep in enumerate(cx.cells[q]):
            spans = span_axes(rep[1])
            t = target[q][idx]
            if target[q][t] != idx:
                raise IncompatibleInvolution("cell map is not an involution")
            sign[q][idx] = _perm_parity_on(ap, spans)
            if t == idx and any(ap[a] != a for a in spans):
                fold[q][idx] = True

    inv = CellInvolution(target=target, sign=sign, fold=fold, source=cx,
                         axis_perm=ap, color_perm=cp)
    _check_involution_is_chain_map(cx, inv)
    return inv


def _involution_cols(inv, q):
    n = len(inv.target[q])
    return [{inv.target[q][j]: inv.sign[q][j]} for j in range(n)]


def _check_involution_is_chain_map(cx, inv):
    for q in range(1, cx.dimension + 1):
        lhs = _compose_cols(_involution_cols(inv, q - 1), cx.boundary_cols[q])
        rhs = _compose_cols(cx.boundary_cols[q], _involution_cols(inv, q))
        if lhs != rhs:
            raise IncompatibleInvolution(
                f"cell involution does not commute with the boundary at "
                f"degree {q}")


# ----------------------------------------------------------------- quotients

def quotient_by_involution(cx, inv, chain_map=None):
    """Quotient complex of a cell involution, and the induced chain map.

    Free orbits keep their smaller representative.  A cell fixed as a class
    but folded through a nontrivial axis permutation is kept when the
    orientation survives (parity +1) and dropped when the fold reverses
    orientation (its class is 2-torsion in the coinvariants, which the
    quotient discards).  A fixed, unfolded cell with sign -1 cannot occur in
    a quotient complex and raises OrientationReversingFixedCell.

    Returns (quotient_complex, quotient_chain_map_or_None).
    """
    if inv.source is not cx:
        raise IncompatibleInvolution("involution was built for a different "
                                     "complex")
    if chain_map is not None:
        for q in range(cx.dimension + 1):
            lhs = _compose_cols(_involution_cols(inv, q), chain_map.cols[q])
            rhs = _compose_cols(chain_map.cols[q], _involution_cols(inv, q))
            if lhs != rhs:
                raise NonCommuting(
                    f"substitution does not commute with the involution at "
                    f"degree {q}")

    d = cx.dimension
    keep = [[] for _ in range(d + 1)]
    proj = [dict() for _ in range(d + 1)]  # base idx -> (quot idx, coeff)
    fold_info = [dict() for _ in range(d + 1)]
    for q in range(d + 1):
        for j in range(len(cx.cells[q])):
            t = inv.target[q][j]
            s = inv.sign[q][j]
            if t == j:
                if inv.fold[q][j]:
                    if s == 1:
                        k = len(keep[q])
                        keep[q].append(j)
                        proj[q][j] = (k, 1)
                        fold_info[q][k] = True
                    # parity -1 folds die in the torsion-free quotient
                elif s == -1:
                    raise OrientationReversingFixedCell(
                        f"degree-{q} cell {j} is fixed with reversed "
                        f"orientation but no fold structure")
                else:
                    k = len(keep[q])
                    keep[q].append(j)
                    proj[q][j] = (k, 1)
            elif j < t:
                k = len(keep[q])
                keep[q].append(j)
                proj[q][j] = (k, 1)
                proj[q][t] = (k, s)

    def push(q, col):
        out = {}
        for i, v in col.items():
            hit = proj[q].get(i)
            if hit is None:
                continue
            k, c = hit
            u = out.get(k, 0) + c * v
            if u:
                out[k] = u
            else:
                out.pop(k, None)
        return out

    cells = [[cx.cells[q][j] for j in keep[q]] for q in range(d + 1)]
    boundary_cols = [[] for _ in range(d + 1)]
    for q in range(1, d + 1):
        boundary_cols[q] = [push(q - 1, cx.boundary_cols[q][j])
                            for j in keep[q]]

    qx = CellComplexData(
        kind="quotient", dimension=d, cells=cells,
        boundary_cols=boundary_cols,
        meta={"rule": cx.meta["rule"], "base": cx, "involution": inv,
              "kept": keep, "projection": proj, "fold_cells": fold_info,
              "axis_perm": inv.axis_perm})
    _check_boundary_squares_to_zero(qx)

    qmap = None
    if chain_map is not None:
        cols = [[push(q, chain_map.cols[q][j]) for j in keep[q]]
                for q in range(d + 1)]
        qmap = CellMap(cols=cols, source=qx)
        _check_chain_map(qx, qmap)
    return qx, qmap
