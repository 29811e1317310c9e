"""Substitution rules on d-dimensional cube tilings and operations on them.

A rule replaces every unit cube of color ``c`` by a ``lam x ... x lam`` block
of colored unit cubes, the same block wherever the color occurs.  The block
for color ``i`` is stored flattened in ``table[i]``: the cube at digit vector
(c_0, ..., c_{d-1}) sits at index sum(c_a * lam**(d-1-a)), i.e. axis 0 is the
slowest axis and the last axis varies fastest.

Rules are plain data (JSON in, JSON out); geometry lives in LatticePatch,
which wraps an integer numpy array of colors plus its lattice origin.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (
    DimensionOverflow,
    ExpansionMismatch,
    IncompatibleInvolution,
    LengthError,
    RangeError,
    SchemaError,
)

MAX_BLOCK = 1 << 20  # cubes per substituted block, lam**d


@dataclass(frozen=True)
class SubstitutionRule:
    name: str
    dimension: int
    expansion: int
    colors: tuple
    table: tuple  # tuple of tuples, one flattened block per color
    forces_border: bool | None = None

    @property
    def block_shape(self):
        return (self.expansion,) * self.dimension

    def block(self, color_index):
        """The substituted block of one color as a d-dimensional array."""
        return np.asarray(self.table[color_index], dtype=np.int32).reshape(
            self.block_shape)

    def table_array(self):
        """All blocks stacked: shape (m, lam, ..., lam)."""
        m = len(self.colors)
        return np.asarray(self.table, dtype=np.int32).reshape(
            (m,) + self.block_shape)

    def to_json_dict(self):
        out = {
            "name": self.name,
            "dimension": self.dimension,
            "expansion": self.expansion,
            "colors": list(self.colors),
            "table": [list(row) for row in self.table],
        }
        if self.forces_border is not None:
            out["forces_border"] = self.forces_border
        return out


@dataclass(frozen=True)
class ColorInvolution:
    """A color swap, optionally together with a coordinate-axis permutation."""
    color_perm: tuple
    axis_perm: tuple | None = None


@dataclass
class LatticePatch:
    """A filled box of colored unit cubes anchored at ``origin``."""
    cells: np.ndarray
    origin: tuple

    @property
    def shape(self):
        return self.cells.shape


_ALLOWED_KEYS = {"name", "dimension", "expansion", "colors", "table",
                 "forces_border"}
_REQUIRED_KEYS = {"name", "dimension", "expansion", "colors", "table"}


def parse_rule(source):
    """Validate a rule given as a JSON string or an already-decoded dict."""
    if isinstance(source, str):
        try:
            obj = json.loads(source)
        except json.JSONDecodeError as e:
            raise SchemaError(f"rule is not valid JSON: {e}") from None
    elif isinstance(source, dict):
        obj = source
    else:
        raise SchemaError(f"rule must be a JSON object, got {type(source).__name__}")
    if not isinstance(obj, dict):
        raise SchemaError(f"rule must be a JSON object, got {type(obj).__name__}")

    unknown = set(obj) - _ALLOWED_KEYS
    if unknown:
        raise SchemaError(f"unknown rule keys: {sorted(unknown)}")
    missing = _REQUIRED_KEYS - set(obj)
    if missing:
        raise SchemaError(f"missing rule keys: {sorted(missing)}")

    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise SchemaError("rule name must be a non-empty string")
    d = obj["dimension"]
    lam = obj["expansion"]
    if not isinstance(d, int) or isinstance(d, bool):
        raise SchemaError("dimension must be an integer")
    if not isinstance(lam, int) or isinstance(lam, bool):
        raise SchemaError("expansion must be an integer")
    if d < 1:
        raise RangeError(f"dimension must be at least 1, got {d}")
    if lam < 2:
        raise RangeError(f"expansion must be at least 2, got {lam}")
    if lam ** d > MAX_BLOCK:
        raise DimensionOverflow(
            f"block size {lam}^{d} exceeds the supported limit {MAX_BLOCK}")

    colors = obj["colors"]
    if (not isinstance(colors, list) or not colors
            or not all(isinstance(c, str) and c for c in colors)):
        raise SchemaError("colors must be a non-empty list of non-empty strings")
    if len(set(colors)) != len(colors):
        raise SchemaError("color names must be distinct")

    table = obj["table"]
    if not isinstance(table, list):
        raise SchemaError("table must be a list of rows")
    if len(table) != len(colors):
        raise LengthError(
            f"table has {len(table)} rows but there are {len(colors)} colors")
    block = lam ** d
    m = len(colors)
    for i, row in enumerate(table):
        if not isinstance(row, list):
            raise SchemaError(f"table row {i} must be a list")
        if len(row) != block:
            raise LengthError(
                f"table row {i} has {len(row)} entries, expected {lam}^{d} = {block}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise SchemaError(f"table[{i}][{j}] must be an integer")
            if not 0 <= v < m:
                raise RangeError(
                    f"table[{i}][{j}] = {v} is not a color index in [0, {m})")

    fb = obj.get("forces_border")
    if fb is not None and not isinstance(fb, bool):
        raise SchemaError("forces_border must be a boolean")

    return SubstitutionRule(
        name=name, dimension=d, expansion=lam,
        colors=tuple(colors), table=tuple(tuple(r) for r in table),
        forces_border=fb)


def subdivision_matrix(rule):
    """m x m count matrix: entry (i, j) counts color i inside the block of j."""
    m = len(rule.colors)
    S = [[0] * m for _ in range(m)]
    for j, row in enumerate(rule.table):
        for v in row:
            S[v][j] += 1
    return S


def primitivity_check(rule):
    """True iff some power of the subdivision matrix is entrywise positive.

    Checks powers up to the Wielandt bound (m-1)^2 + 1, which is sharp.
    """
    m = len(rule.colors)
    S = np.asarray(subdivision_matrix(rule), dtype=object)
    P = (S > 0).astype(np.uint8)
    reach = P.copy()
    if bool((reach > 0).all()):
        return True
    for _ in range((m - 1) ** 2 + 1):
        reach = (reach @ P > 0).astype(np.uint8)
        if bool((reach > 0).all()):
            return True
    return False


def substitute_patch(rule, patch, steps=1):
    """Apply the rule ``steps`` times to a patch.

    Coordinates scale by the expansion: the cube at p maps onto the block
    [lam*p, lam*p + lam)^d, so the origin multiplies by lam each step.
    """
    if isinstance(patch, LatticePatch):
        cells, origin = patch.cells, patch.origin
    else:
        cells = np.asarray(patch, dtype=np.int32)
        origin = (0,) * cells.ndim
    if cells.ndim != rule.dimension:
        raise RangeError(
            f"patch has {cells.ndim} axes, rule dimension is {rule.dimension}")
    d, lam = rule.dimension, rule.expansion
    T = rule.table_array()
    for _ in range(steps):
        blown = T[cells]  # shape s1..sd, lam..lam
        # interleave block axes behind their patch axes
        order = []
        for a in range(d):
            order.append(a)
            order.append(d + a)
        blown = np.transpose(blown, order)
        cells = blown.reshape(tuple(s * lam for s in cells.shape))
        origin = tuple(lam * o for o in origin)
    return LatticePatch(cells=cells, origin=origin)


def product_rule(r1, r2, name=None):
    """Cartesian product rule on color pairs; expansions must agree."""
    if r1.expansion != r2.expansion:
        raise ExpansionMismatch(
            f"expansions differ: {r1.expansion} vs {r2.expansion}")
    d1, d2 = r1.dimension, r2.dimension
    d = d1 + d2
    lam = r1.expansion
    if lam ** d > MAX_BLOCK:
        raise DimensionOverflow(
            f"product block size {lam}^{d} exceeds the supported limit {MAX_BLOCK}")
    m2 = len(r2.colors)
    colors = [f"{a}*{b}" for a in r1.colors for b in r2.colors]
    T1 = r1.table_array()
    T2 = r2.table_array()
    table = []
    for i1 in range(len(r1.colors)):
        for i2 in range(m2):
            # outer combination: child color index = m2 * c1 + c2
            b = (m2 * T1[i1].astype(np.int64)).reshape(
                T1[i1].shape + (1,) * d2) + T2[i2]
            table.append([int(v) for v in b.reshape(-1)])
    return SubstitutionRule(
        name=name or f"{r1.name}*{r2.name}", dimension=d, expansion=lam,
        colors=tuple(colors), table=tuple(tuple(r) for r in table),
        forces_border=None)


def quotient_rule_by_involution(rule, involution, name=None):
    """Identify colors along an involutive color swap the rule commutes with.

    The swap must satisfy table[swap(i)] = swap(table[i]) entrywise (after
    permuting block coordinates when the involution carries an axis
    permutation); otherwise IncompatibleInvolution is raised.
    """
    perm = tuple(involution.color_perm) if isinstance(
        involution, ColorInvolution) else tuple(involution)
    m = len(rule.colors)
    if sorted(perm) != list(range(m)):
        raise IncompatibleInvolution(
            f"color permutation is not a permutation of 0..{m - 1}")
    for i in range(m):
        if perm[perm[i]] != i:
            raise IncompatibleInvolution("color permutation is not an involution")
    axis_perm = None
    if isinstance(involution, ColorInvolution) and involution.axis_perm:
        axis_perm = tuple(involution.axis_perm)
        if sorted(axis_perm) != list(range(rule.dimension)):
            raise IncompatibleInvolution(
                f"axis permutation is not a permutation of 0..{rule.dimension - 1}")
        for a in range(rule.dimension):
            if axis_perm[axis_perm[a]] != a:
                raise IncompatibleInvolution("axis permutation is not an involution")

    T = rule.table_array()
    pa = np.asarray(perm, dtype=np.int32)
    for i in range(m):
        swapped = pa[T[i]]
        if axis_perm is not None:
            swapped = np.transpose(swapped, axis_perm)
        if not np.array_equal(swapped, T[perm[i]]):
            raise IncompatibleInvolution(
                f"rule does not commute with the involution at color "
                f"{rule.colors[i]!r}")

    reps = sorted({min(i, perm[i]) for i in range(m)})
    rep_index = {r: k for k, r in enumerate(reps)}
    to_class = [rep_index[min(i, perm[i])] for i in range(m)]
    colors = []
    for r in reps:
        if perm[r] == r:
            colors.append(rule.colors[r])
        else:
            colors.append(f"{rule.colors[r]}~{rule.colors[perm[r]]}")
    table = tuple(tuple(to_class[v] for v in rule.table[r]) for r in reps)
    return SubstitutionRule(
        name=name or f"{rule.name}/swap", dimension=rule.dimension,
        expansion=rule.expansion, colors=tuple(colors), table=table,
        forces_border=rule.forces_border)


def derive_window_rule(rule, name=None):
    """The induced rule whose colors are the legal 2^d windows.

    Substituting a window's 2^d patch gives a (2 lam)^d patch; the child
    window with digit vector c (anchored at the low corner) is the 2^d
    sub-block at offset c.  This inherits primitivity from the original rule
    and its tilings are mutually locally derivable with the original ones.
    """
    from .windows import enumerate_legal_windows

    d, lam = rule.dimension, rule.expansion
    if lam ** d > MAX_BLOCK // (1 << d):
        raise DimensionOverflow(
            f"derived block size too large for {lam}^{d} windows")
    windows = enumerate_legal_windows(rule, (2,) * d)
    index = {w.tobytes(): k for k, w in enumerate(windows)}
    offsets = np.stack(np.meshgrid(*[np.arange(lam)] * d, indexing="ij"),
                       axis=-1).reshape(-1, d)
    table = []
    for w in windows:
        big = substitute_patch(rule, w).cells
        row = []
        for off in offsets:
            sl = tuple(slice(int(o), int(o) + 2) for o in off)
            key = np.ascontiguousarray(big[sl]).tobytes()
            row.append(index[key])
        table.append(tuple(row))
    colors = []
    for w in windows:
        flat = "".join(str(int(v)) for v in w.reshape(-1))
        colors.append(f"w{flat}")
    return SubstitutionRule(
        name=name or f"{rule.name}#windows", dimension=d, expansion=lam,
        colors=tuple(colors), table=tuple(table), forces_border=None)


def rule_with_border_flag(rule, forced):
    return replace(rule, forces_border=forced)
