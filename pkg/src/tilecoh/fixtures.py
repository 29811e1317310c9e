"""Built-in substitution rules.

These are the worked examples the command line ships with: small 1D pairs
and their 2D products, three 2D rules, and a family of 4D rules including a
two-color rule with a fourfold symmetry and a squiral-style rule whose
half-collared quotient is border-forcing.
"""

from __future__ import annotations

import itertools

from . import _tables
from .rules import (
    ColorInvolution,
    SubstitutionRule,
    derive_window_rule,
    parse_rule,
    product_rule,
    quotient_rule_by_involution,
    rule_with_border_flag,
)
from .windows import border_forcing_probe


def _make(name, dimension, expansion, table, colors=None, forces_border=None):
    m = len(table)
    obj = {
        "name": name, "dimension": dimension, "expansion": expansion,
        "colors": colors or [f"c{i}" for i in range(m)],
        "table": [list(r) for r in table],
    }
    if forces_border is not None:
        obj["forces_border"] = forces_border
    return parse_rule(obj)


def chair_rule(d, name=None):
    """2^d-expansion rule with 2^d colors: row i is (0..2^d-1) with the
    entry opposite to i replaced by i."""
    m = 1 << d
    table = []
    for i in range(m):
        row = list(range(m))
        row[m - 1 - i] = i
        table.append(row)
    return _make(name or f"chair-{d}", d, 2, table)


def squiral_rule(d, name=None):
    """Two colors, expansion 3: color i everywhere except at all-even block
    coordinates, which carry the opposite color."""
    table = []
    for i in range(2):
        row = []
        for coord in itertools.product(range(3), repeat=d):
            row.append((i + 1) % 2 if all(c % 2 == 0 for c in coord) else i)
        table.append(row)
    return _make(name or f"squiral-{d}d", d, 3, table)


def torus_rule(d, expansion=3, name=None):
    return _make(name or f"torus-{d}", d, expansion, [[0] * expansion ** d])


def squiral_folded_rule(name="squiral-folded-4d"):
    """Quotient of the half-collared squiral-4d rule by the color swap.

    The color swap acts freely on the legal pair windows; identifying each
    window with its swap halves the color count.  The folded rule forces
    its border (checked by the probe when it can, asserted otherwise).
    """
    base = squiral_rule(4)
    derived = derive_window_rule(base, name="squiral-4d#windows")
    # the swap sends a window-color to the window with all cells swapped
    m = len(derived.colors)
    flip = str.maketrans("01", "10")
    index = {c: i for i, c in enumerate(derived.colors)}
    perm = tuple(index[derived.colors[i].translate(flip)] for i in range(m))
    folded = quotient_rule_by_involution(
        derived, ColorInvolution(color_perm=perm), name=name)
    return rule_with_border_flag(folded, True)


_BUILDERS = {
    "pair5-a": lambda: _make("pair5-a", 1, 5, _tables.PAIR5_A),
    "pair5-b": lambda: _make("pair5-b", 1, 5, _tables.PAIR5_B),
    "pair4-a": lambda: _make("pair4-a", 1, 4, _tables.PAIR4_A),
    "pair4-b": lambda: _make("pair4-b", 1, 4, _tables.PAIR4_B),
    "pair5-product": lambda: product_rule(
        builtin_rule("pair5-a"), builtin_rule("pair5-b"),
        name="pair5-product"),
    "pair4-product": lambda: product_rule(
        builtin_rule("pair4-a"), builtin_rule("pair4-b"),
        name="pair4-product"),
    "three-color-5x5": lambda: _make(
        "three-color-5x5", 2, 5, _tables.THREE_COLOR_5X5),
    "three-color-4x4": lambda: _make(
        "three-color-4x4", 2, 4, _tables.THREE_COLOR_4X4),
    "chair-2": lambda: chair_rule(2),
    "squiral-2d": lambda: squiral_rule(2),
    "squiral-4d": lambda: squiral_rule(4),
    "squiral-folded-4d": squiral_folded_rule,
    "torus-4": lambda: torus_rule(4),
    "checkerboard-4d": lambda: _make(
        "checkerboard-4d", 4, 3, _tables.CHECKERBOARD_4D),
    "squiral3-4d": lambda: _make("squiral3-4d", 4, 3, _tables.SQUIRAL3_4D),
    "twocolor-4d": lambda: _make("twocolor-4d", 4, 3, _tables.TWOCOLOR_4D),
    "center-dot-4d": lambda: _make(
        "center-dot-4d", 4, 3, _tables.CENTER_DOT_4D,
        forces_border=True),
}


def builtin_rule(name):
    if name not in _BUILDERS:
        raise KeyError(f"no built-in rule named {name!r}; "
                       f"known: {', '.join(sorted(_BUILDERS))}")
    return _BUILDERS[name]()


def builtin_rules():
    """Name -> builder map for every shipped rule (builders are lazy; the
    folded squiral rule takes a little while to derive)."""
    return dict(_BUILDERS)
