"""Legal local patterns (windows) of a substitution tiling, exactly.

A window of shape (e_1, ..., e_d) is a filled box of colors that occurs
somewhere in some tiling admitted by the rule.  The language is computed by
a closure argument: 2-per-axis windows are closed under "substitute and
rescan", and any requested shape is then read off from a sufficiently deep
substitution of those.  No sampling or cutoffs are involved; the result is
the exact language.

Canonical order everywhere: windows sort by their flattened color tuple
(axis 0 slowest).  All published-data comparisons depend on this order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .errors import DimensionOverflow, MissingShape, NotPrimitive, RangeError
from .rules import primitivity_check, substitute_patch

_SCAN_CELL_CAP = 1 << 26  # cells per scanned patch before giving up


def _scan(arr, shape):
    """All sub-windows of ``arr`` of the given shape, keyed by their bytes."""
    if any(s < t for s, t in zip(arr.shape, shape)):
        return {}
    sw = sliding_window_view(arr, shape)
    flat = sw.reshape((-1,) + tuple(shape))
    out = {}
    for w in flat:
        key = w.tobytes()
        if key not in out:
            out[key] = np.ascontiguousarray(w)
    return out


def _closed_pair_windows(rule):
    """The legal (2, ..., 2)-windows: seed from one substitution step of each
    color, then close under substitute-and-rescan."""
    d = rule.dimension
    shape = (2,) * d
    known = {}
    for c in range(len(rule.colors)):
        known.update(_scan(rule.block(c), shape))
    frontier = list(known.values())
    while frontier:
        fresh = []
        for w in frontier:
            img = substitute_patch(rule, w).cells
            for key, sub in _scan(img, shape).items():
                if key not in known:
                    known[key] = sub
                    fresh.append(sub)
        frontier = fresh
    return known


def _canonical(values):
    return sorted(values, key=lambda w: tuple(int(v) for v in w.reshape(-1)))


@dataclass
class WindowLanguage:
    """Legal windows of one rule for a fixed set of shapes."""
    rule: object
    shapes: dict  # shape tuple -> list of windows in canonical order

    def windows(self, shape):
        shape = tuple(shape)
        if shape not in self.shapes:
            raise MissingShape(
                f"shape {shape} was not requested when the language was built; "
                f"available: {sorted(self.shapes)}")
        return self.shapes[shape]

    def index(self, shape):
        return {w.tobytes(): i for i, w in enumerate(self.windows(shape))}


def build_window_language(rule, shapes, check_primitive=True):
    """Compute the legal windows of every requested shape.

    Shapes are d-tuples of extents >= 1.  The closure runs once on the
    2-per-axis shape; each requested shape is then collected from k-step
    substitutions of those, with k chosen so every extent fits across at
    most two substituted parent cells (lam**k + 1 >= extent).
    """
    d, lam = rule.dimension, rule.expansion
    shapes = [tuple(s) for s in shapes]
    for s in shapes:
        if len(s) != d:
            raise RangeError(f"shape {s} has {len(s)} axes, rule has {d}")
        if any(e < 1 for e in s):
            raise RangeError(f"shape {s} has an extent below 1")
    if check_primitive and not primitivity_check(rule):
        raise NotPrimitive(
            f"rule {rule.name!r} is not primitive; its window language may "
            f"not be well defined")

    pair_shape = (2,) * d
    closed = _closed_pair_windows(rule)
    pairs = _canonical(closed.values())

    out = {}
    for shape in shapes:
        if shape == pair_shape:
            out[shape] = pairs
            continue
        e_max = max(shape)
        k = 0
        while lam ** k + 1 < e_max:
            k += 1
        cells_per_patch = (2 * lam ** k) ** d
        if cells_per_patch > _SCAN_CELL_CAP:
            raise DimensionOverflow(
                f"scanning shape {shape} needs patches of {cells_per_patch} "
                f"cells, above the cap {_SCAN_CELL_CAP}")
        found = {}
        for w in pairs:
            img = substitute_patch(rule, w, steps=k).cells if k else w
            found.update(_scan(img, shape))
        out[shape] = _canonical(found.values())
    return WindowLanguage(rule=rule, shapes=out)


def enumerate_legal_windows(rule, shape, check_primitive=True):
    """Legal windows of one shape, in canonical order."""
    lang = build_window_language(rule, [tuple(shape)],
                                 check_primitive=check_primitive)
    return lang.windows(tuple(shape))


# ------------------------------------------------------------ border forcing

@dataclass
class BorderProbeResult:
    """Outcome of the sufficient-condition border test.

    ``forced`` True means: at ``steps`` substitution steps, for every
    direction, the boundary slab of the substituted block does not depend on
    the color, so every tile's k-step image determines its neighbors there.
    ``forced`` False only means the condition failed up to ``max_steps``
    (witness records a direction and two colors whose slabs differ); it is
    not a proof that the rule fails to force its border.
    """
    forced: bool
    steps: int | None
    witness: dict | None


def border_forcing_probe(rule, max_steps=4):
    d, lam = rule.dimension, rule.expansion
    m = len(rule.colors)
    blocks = [rule.block(c) for c in range(m)]
    last_witness = None
    for k in range(1, max_steps + 1):
        side = lam ** k
        if m * side ** d > _SCAN_CELL_CAP:
            break
        ok = True
        for nu in np.ndindex(*(3,) * d):
            nu = tuple(int(x) - 1 for x in nu)
            if all(x == 0 for x in nu):
                continue
            sl = tuple(
                slice(None) if x == 0 else (slice(0, 1) if x < 0 else
                                            slice(side - 1, side))
                for x in nu)
            ref = blocks[0][sl]
            for c in range(1, m):
                if not np.array_equal(blocks[c][sl], ref):
                    ok = False
                    last_witness = {
                        "direction": nu,
                        "colors": (rule.colors[0], rule.colors[c]),
                        "steps": k,
                    }
                    break
            if not ok:
                break
        if ok:
            return BorderProbeResult(forced=True, steps=k, witness=None)
        if k < max_steps:
            blocks = [substitute_patch(rule, b).cells for b in blocks]
    return BorderProbeResult(forced=False, steps=None, witness=last_witness)
