"""The two-dimensional R-matrix catalog, YBE checking, and symmetries.

Catalog entries are entered as 4x4 tables indexed by index *pairs* ordered
(++, -+, +-, --), i.e. with the first tensor factor as the minor digit.
``_load_pair_table`` reorders both axes into the package's big-endian pair
order on load; the remaining convention freedom (which axis is the input)
is fixed once here and used consistently by every other module, and either
choice yields the same invariants by the transpose symmetry.
"""

from __future__ import annotations

import math

from dataclasses import dataclass

from .errors import DimensionMismatch, NotAUnit, UnknownName
from .ring import Scalar, ScalarContext
from .tensor import (
    SquareMatrix,
    embed_generator,
    invert,
    kron,
    matmul,
    matrix_from_json,
    scalar_scale,
)

# pair order (++, -+, +-, --) -> big-endian pair order (++, +-, -+, --)
_PAIR_REORDER = (0, 2, 1, 3)


def _load_pair_table(ctx, table):
    rows = [
        [table[_PAIR_REORDER[r]][_PAIR_REORDER[c]] for c in range(4)]
        for r in range(4)
    ]
    return SquareMatrix.from_rows(ctx, rows)


@dataclass(frozen=True)
class RMatrixSpec:
    """A named catalog solution with its context and nonsingularity limits."""

    name: str
    base_dim: int
    ctx: ScalarContext
    matrix: SquareMatrix
    constraints: tuple = ()  # (generator, forbidden Scalar) pairs


_CATALOG_TABLES = {
    "R3.1": (
        ("p", "q", "s"),
        [[1, 0, 0, 0], [0, 0, "q", 0], [0, "p", 0, 0], [0, 0, 0, "s"]],
        ("p", "q", "s"),
    ),
    "R2.1": (
        ("p", "q"),
        [[1, 0, 0, 0], [0, 0, "q", 0], [0, "p", "1-p*q", 0], [0, 0, 0, 1]],
        ("p", "q"),
    ),
    "R2.2": (
        ("p", "q"),
        [[1, 0, 0, 0], [0, 0, "q", 0], [0, "p", "1-p*q", 0], [0, 0, 0, "-p*q"]],
        ("p", "q"),
    ),
    "R2.3": (
        ("p", "q"),
        [[1, 1, "p", "q"], [0, 0, 1, 1], [0, 1, 0, "p"], [0, 0, 0, 1]],
        (),
    ),
    "R1.1": (
        ("q",),
        [
            ["1+2*q-q^2", 0, 0, "1-q^2"],
            [0, "1-q^2", "1+q^2", 0],
            [0, "1+q^2", "1-q^2", 0],
            ["1-q^2", 0, 0, "1-2*q-q^2"],
        ],
        ("q",),
    ),
    "R1.2": (
        ("q",),
        [[1, 0, 0, 1], [0, 0, "q", 0], [0, 1, "1-q", 0], [0, 0, 0, "-q"]],
        ("q",),
    ),
    "R1.3": (
        ("q",),
        [[1, 1, -1, "q"], [0, 0, 1, "-q"], [0, 1, 0, "q"], [0, 0, 0, 1]],
        (),
    ),
    "R1.4": (
        ("q",),
        [[0, 0, 0, "q"], [0, 1, 0, 0], [0, 0, 1, 0], ["q", 0, 0, 0]],
        ("q",),
    ),
}

CATALOG_NAMES = tuple(_CATALOG_TABLES)

_cache = {}


def get_rmatrix(name):
    """The named catalog solution over its own fresh-parameter context."""
    if name not in _CATALOG_TABLES:
        raise UnknownName(f"no catalog matrix named {name!r}")
    if name not in _cache:
        gens, table, nonzero = _CATALOG_TABLES[name]
        ctx = ScalarContext(gens)
        matrix = _load_pair_table(ctx, table)
        constraints = tuple((g, ctx.zero()) for g in nonzero)
        _cache[name] = RMatrixSpec(name, 2, ctx, matrix, constraints)
    return _cache[name]


@dataclass(frozen=True)
class YbeCheck:
    ok: bool
    index: tuple = None
    residual: Scalar = None

    def __bool__(self):
        return self.ok


def check_ybe(r, base=None):
    """Braid-form Yang-Baxter check on the triple tensor power.

    Returns a truthy result, or the first violated (row, col) with the
    nonzero residual scalar.
    """
    if base is None:
        base = math.isqrt(r.side)
    if base * base != r.side:
        raise DimensionMismatch(f"side {r.side} is not a perfect square")
    r12 = embed_generator(r, 1, 3, base)
    r23 = embed_generator(r, 2, 3, base)
    lhs = matmul(matmul(r12, r23), r12)
    rhs = matmul(matmul(r23, r12), r23)
    keys = sorted(set(lhs.entries) | set(rhs.entries))
    for key in keys:
        residual = lhs.get(*key) - rhs.get(*key)
        if not residual.is_zero():
            return YbeCheck(False, key, residual)
    return YbeCheck(True)


@dataclass(frozen=True)
class TransformSpec:
    """One of the four YBE-preserving transformations.

    kind 'similarity' uses the unit scalar kappa and invertible Q; 'shift'
    adds n to every tensor index mod the base dimension; 'transpose' and
    'flip' take no data.
    """

    kind: str
    kappa: Scalar = None
    q: SquareMatrix = None
    n: int = 0


def _pair_digits(pos, base):
    return divmod(pos, base)


def transform_rmatrix(r, t, base=None):
    """Apply a TransformSpec; the result is checked to still satisfy the YBE."""
    matrix = r.matrix if isinstance(r, RMatrixSpec) else r
    if base is None:
        base = math.isqrt(matrix.side)
    if t.kind == "similarity":
        if t.kappa is None or not t.kappa.is_unit():
            raise NotAUnit("similarity needs an invertible kappa")
        qq = kron(t.q, t.q)
        out = scalar_scale(matmul(matmul(qq, matrix), invert(qq)), t.kappa)
    elif t.kind == "transpose":
        out = matrix.transpose()
    elif t.kind == "shift":
        entries = {}
        for (row, col), v in matrix.entries.items():
            rk, rl = _pair_digits(row, base)
            ck, cl = _pair_digits(col, base)
            nrow = ((rk + t.n) % base) * base + (rl + t.n) % base
            ncol = ((ck + t.n) % base) * base + (cl + t.n) % base
            entries[(nrow, ncol)] = v
        out = SquareMatrix(matrix.ctx, matrix.side, entries)
    elif t.kind == "flip":
        entries = {}
        for (row, col), v in matrix.entries.items():
            rk, rl = _pair_digits(row, base)
            ck, cl = _pair_digits(col, base)
            entries[(rl * base + rk, cl * base + ck)] = v
        out = SquareMatrix(matrix.ctx, matrix.side, entries)
    else:
        raise UnknownName(f"unknown transformation kind {t.kind!r}")
    verdict = check_ybe(out, base)
    if not verdict:
        raise RuntimeError(
            f"transformed matrix violates the YBE at {verdict.index}"
        )
    return out


def is_spin_preserving(matrix):
    """Whether every nonzero entry conserves the total +-1 spin of its pair."""
    if matrix.side != 4:
        raise DimensionMismatch("spin preservation is defined for side 4")
    for (row, col) in matrix.entries:
        rk, rl = divmod(row, 2)
        ck, cl = divmod(col, 2)
        if rk + rl != ck + cl:
            return False
    return True


def load_rmatrix_json(ctx, obj, checked=True):
    """Load a custom solution from the matrix JSON form.

    When ``checked``, non-solutions of the YBE are rejected.
    """
    matrix = matrix_from_json(ctx, obj)
    base = math.isqrt(matrix.side)
    if base * base != matrix.side:
        raise DimensionMismatch(f"side {matrix.side} is not a perfect square")
    if checked:
        verdict = check_ybe(matrix, base)
        if not verdict:
            raise ValueError(
                f"matrix fails the Yang-Baxter check at {verdict.index}: "
                f"residual {verdict.residual}"
            )
    return matrix
