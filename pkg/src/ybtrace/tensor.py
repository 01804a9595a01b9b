"""Sparse square matrices over exact scalars.

Tensor indices use the big-endian convention: a k-fold index (i1, ..., ik)
with entries in [0, N) maps to position sum(i_m * N^(k-m)), the first factor
most significant.  Entry (r, c) of a matrix is the coefficient of basis
vector r in the image of basis vector c.
"""

from __future__ import annotations

import math

from .errors import (
    ContextMismatch,
    DimensionMismatch,
    InverseOutsideRing,
    NonInvertible,
    NotDivisible,
    PositionOutOfRange,
)
from .ring import scalar_from_json, scalar_to_json, substitute, try_div_exact


def _check_ctx(a, b):
    if a.ctx is not b.ctx and a.ctx != b.ctx:
        raise ContextMismatch("matrix contexts differ")


class SquareMatrix:
    """Immutable sparse square matrix; zero entries are never stored."""

    __slots__ = ("ctx", "side", "entries")

    def __init__(self, ctx, side, entries):
        self.ctx = ctx
        self.side = side
        clean = {}
        for (r, c) in sorted(entries):
            if not (0 <= r < side and 0 <= c < side):
                raise DimensionMismatch(f"index {(r, c)} outside side {side}")
            v = entries[(r, c)]
            if not v.is_zero():
                clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def from_rows(cls, ctx, rows):
        """Build from nested lists; entries may be Scalars, ints, or text."""
        side = len(rows)
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != side:
                raise DimensionMismatch("rows are not square")
            for c, value in enumerate(row):
                if isinstance(value, str):
                    value = ctx.parse(value)
                elif isinstance(value, int):
                    value = ctx.scalar(value)
                if not value.is_zero():
                    entries[(r, c)] = value
        return cls(ctx, side, entries)

    @classmethod
    def identity(cls, ctx, side):
        one = ctx.one()
        return cls(ctx, side, {(k, k): one for k in range(side)})

    @classmethod
    def diagonal(cls, ctx, values):
        vals = [ctx.parse(v) if isinstance(v, str) else v for v in values]
        return cls(ctx, len(vals), {(k, k): v for k, v in enumerate(vals)})

    def get(self, r, c):
        value = self.entries.get((r, c))
        return self.ctx.zero() if value is None else value

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return (
            self.side == other.side
            and self.ctx == other.ctx
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"<SquareMatrix side={self.side} nnz={len(self.entries)}>"

    def transpose(self):
        return SquareMatrix(
            self.ctx, self.side, {(c, r): v for (r, c), v in self.entries.items()}
        )


def matadd(a, b):
    _check_ctx(a, b)
    if a.side != b.side:
        raise DimensionMismatch(f"sides differ: {a.side} vs {b.side}")
    acc = dict(a.entries)
    for key, v in b.entries.items():
        acc[key] = acc[key] + v if key in acc else v
    return SquareMatrix(a.ctx, a.side, acc)


def scalar_scale(a, s):
    if isinstance(s, (int,)):
        s = a.ctx.scalar(s)
    return SquareMatrix(a.ctx, a.side, {k: s * v for k, v in a.entries.items()})


def matmul(a, b):
    _check_ctx(a, b)
    if a.side != b.side:
        raise DimensionMismatch(f"sides differ: {a.side} vs {b.side}")
    b_rows = {}
    for (r, c), v in b.entries.items():
        b_rows.setdefault(r, []).append((c, v))
    acc = {}
    for (r, k), va in a.entries.items():
        row = b_rows.get(k)
        if not row:
            continue
        for c, vb in row:
            key = (r, c)
            prod = va * vb
            if key in acc:
                acc[key] = acc[key] + prod
            else:
                acc[key] = prod
    return SquareMatrix(a.ctx, a.side, acc)


def kron(a, b):
    """Kronecker product; the left factor is most significant."""
    _check_ctx(a, b)
    side = a.side * b.side
    entries = {}
    for (ra, ca), va in a.entries.items():
        for (rb, cb), vb in b.entries.items():
            entries[(ra * b.side + rb, ca * b.side + cb)] = va * vb
    return SquareMatrix(a.ctx, side, entries)


def kron_power(a, n):
    if n == 0:
        return SquareMatrix.identity(a.ctx, 1)
    result = a
    for _ in range(n - 1):
        result = kron(result, a)
    return result


def embed_generator(r, i, n, base=None):
    """Embed a two-slot operator at tensor slots (i, i+1) of an n-fold space.

    Built by index arithmetic over the sparse entries; the identity factors
    are never materialized.
    """
    if base is None:
        base = math.isqrt(r.side)
    if base * base != r.side:
        raise DimensionMismatch(f"side {r.side} is not a perfect square")
    if not 1 <= i <= n - 1:
        raise PositionOutOfRange(f"position {i} outside 1..{n - 1}")
    left = base ** (i - 1)
    right = base ** (n - i - 1)
    entries = {}
    for (rr, rc), v in r.entries.items():
        for a in range(left):
            row_hi = (a * r.side + rr) * right
            col_hi = (a * r.side + rc) * right
            for b in range(right):
                entries[(row_hi + b, col_hi + b)] = v
    return SquareMatrix(r.ctx, base ** n, entries)


def trace(a):
    total = a.ctx.zero()
    for (r, c), v in a.entries.items():
        if r == c:
            total = total + v
    return total


def trace_product(a, b):
    """trace(matmul(a, b)) without forming the product."""
    _check_ctx(a, b)
    if a.side != b.side:
        raise DimensionMismatch(f"sides differ: {a.side} vs {b.side}")
    total = a.ctx.zero()
    for (r, c), va in a.entries.items():
        vb = b.entries.get((c, r))
        if vb is not None:
            total = total + va * vb
    return total


def _split_index(pos, base, arity):
    digits = []
    for _ in range(arity):
        pos, d = divmod(pos, base)
        digits.append(d)
    digits.reverse()
    return tuple(digits)


def partial_trace(a, slots, base):
    """Contract the named tensor slots (1-indexed); returns the rest.

    Tracing every slot yields a 1x1 matrix holding the full trace.
    """
    arity = 0
    side = a.side
    while side > 1:
        if side % base:
            raise DimensionMismatch(f"side {a.side} is not a power of {base}")
        side //= base
        arity += 1
    slots = sorted(set(slots))
    if any(not 1 <= s <= arity for s in slots):
        raise DimensionMismatch(f"slots {slots} outside 1..{arity}")
    keep = [s for s in range(1, arity + 1) if s not in slots]
    out_side = base ** len(keep)
    entries = {}
    for (r, c), v in a.entries.items():
        rd = _split_index(r, base, arity)
        cd = _split_index(c, base, arity)
        if any(rd[s - 1] != cd[s - 1] for s in slots):
            continue
        row = 0
        col = 0
        for s in keep:
            row = row * base + rd[s - 1]
            col = col * base + cd[s - 1]
        key = (row, col)
        if key in entries:
            entries[key] = entries[key] + v
        else:
            entries[key] = v
    return SquareMatrix(a.ctx, out_side, entries)


def matrix_substitute(a, bindings, target=None):
    entries = {}
    ctx = target
    for key, v in a.entries.items():
        image = substitute(v, bindings, target)
        ctx = image.ctx
        entries[key] = image
    if ctx is None:
        ctx = a.ctx if target is None else target
    return SquareMatrix(ctx, a.side, entries)


# -- inversion ----------------------------------------------------------------


def _dense(a):
    zero = a.ctx.zero()
    rows = [[zero] * a.side for _ in range(a.side)]
    for (r, c), v in a.entries.items():
        rows[r][c] = v
    return rows


def _det(rows, cols, ctx):
    """Determinant by expansion along the first remaining row."""
    if len(cols) == 1:
        return rows[0][cols[0]]
    total = ctx.zero()
    sign = 1
    for k, c in enumerate(cols):
        pivot = rows[0][c]
        if not pivot.is_zero():
            rest = cols[:k] + cols[k + 1:]
            minor = _det(rows[1:], rest, ctx)
            term = pivot * minor
            total = total + (term if sign > 0 else -term)
        sign = -sign
    return total


def _invert_adjugate(a):
    rows = _dense(a)
    ctx = a.ctx
    n = a.side
    det = _det(rows, list(range(n)), ctx)
    if det.is_zero():
        raise NonInvertible("matrix is singular")
    entries = {}
    for r in range(n):
        for c in range(n):
            minor_rows = [row for k, row in enumerate(rows) if k != c]
            minor_cols = [k for k in range(n) if k != r]
            cof = _det(minor_rows, minor_cols, ctx)
            if (r + c) % 2:
                cof = -cof
            if cof.is_zero():
                continue
            try:
                entries[(r, c)] = try_div_exact(cof, det)
            except NotDivisible:
                raise InverseOutsideRing(
                    "inverse entries leave the ring (rational functions needed)"
                ) from None
    return SquareMatrix(ctx, n, entries)


def invert(a):
    """Exact inverse by unit-pivot elimination, adjugate fallback for side <= 4.

    Raises NonInvertible for singular input and InverseOutsideRing when an
    entry of the inverse would need a rational-function field.
    """
    n = a.side
    ctx = a.ctx
    work = [dict() for _ in range(n)]
    for (r, c), v in a.entries.items():
        work[r][c] = v
    aug = [{k: ctx.one()} for k in range(n)]
    row_used = [False] * n
    for col in range(n):
        pivot_row = None
        for r in range(n):
            if row_used[r]:
                continue
            v = work[r].get(col)
            if v is not None and v.is_unit():
                pivot_row = r
                break
        if pivot_row is None:
            for r in range(n):
                if not row_used[r] and work[r].get(col) is not None:
                    pivot_row = r
                    break
        if pivot_row is None:
            raise NonInvertible("matrix is singular")
        pivot = work[pivot_row][col]
        if pivot.is_unit():
            inv_piv = pivot ** -1
            work[pivot_row] = {k: inv_piv * v for k, v in work[pivot_row].items()}
            aug[pivot_row] = {k: inv_piv * v for k, v in aug[pivot_row].items()}
        else:
            if n <= 4:
                return _invert_adjugate(a)
            try:
                work[pivot_row] = {
                    k: try_div_exact(v, pivot) for k, v in work[pivot_row].items()
                }
                aug[pivot_row] = {
                    k: try_div_exact(v, pivot) for k, v in aug[pivot_row].items()
                }
            except NotDivisible:
                raise InverseOutsideRing(
                    "no unit pivot and row division failed"
                ) from None
        row_used[pivot_row] = True
        for r in range(n):
            if r == pivot_row:
                continue
            factor = work[r].get(col)
            if factor is None:
                continue
            for k, v in work[pivot_row].items():
                cur = work[r].get(k)
                nxt = (cur - factor * v) if cur is not None else -(factor * v)
                if nxt.is_zero():
                    work[r].pop(k, None)
                else:
                    work[r][k] = nxt
            for k, v in aug[pivot_row].items():
                cur = aug[r].get(k)
                nxt = (cur - factor * v) if cur is not None else -(factor * v)
                if nxt.is_zero():
                    aug[r].pop(k, None)
                else:
                    aug[r][k] = nxt
    # pivot of column c lives in the row whose only work entry is {c: 1}
    entries = {}
    for r in range(n):
        keys = list(work[r].keys())
        if len(keys) != 1 or not work[r][keys[0]].is_one():
            raise NonInvertible("matrix is singular")
        final_row = keys[0]
        for k, v in aug[r].items():
            entries[(final_row, k)] = v
    return SquareMatrix(ctx, n, entries)


# -- JSON form -----------------------------------------------------------------


def matrix_to_json(a):
    return {
        "side": a.side,
        "entries": [
            [r, c, scalar_to_json(a.entries[(r, c)])] for (r, c) in sorted(a.entries)
        ],
    }


def matrix_from_json(ctx, obj):
    entries = {}
    for r, c, sj in obj["entries"]:
        entries[(r, c)] = scalar_from_json(ctx, sj)
    return SquareMatrix(ctx, obj["side"], entries)
