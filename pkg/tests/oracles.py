"""Independent oracles used by the test suite.

These deliberately avoid the library's composition helpers: the YBE oracle
contracts tensor indices with explicit sums over nonzero entries, and the
skein oracle computes the one-variable invariant by descending-diagram
induction on braid closures, using no matrices at all.
"""

from __future__ import annotations


def ybe_residuals(matrix, base):
    """Nonzero entries of R12 R23 R12 - R23 R12 R23, by explicit index sums.

    ``matrix.entries[(row, col)]`` is read as the coefficient sending input
    pair col to output pair row, pairs big-endian.  Returns a dict keyed by
    ((x1,x2,x3),(y1,y2,y3)).
    """
    items = [
        ((divmod(r, base)), (divmod(c, base)), v)
        for (r, c), v in matrix.entries.items()
    ]
    acc = {}

    def add(key, value):
        if key in acc:
            total = acc[key] + value
            if total.is_zero():
                del acc[key]
            else:
                acc[key] = total
        elif not value.is_zero():
            acc[key] = value

    # lhs[(x1,x2,x3),(y1,y2,y3)] = sum R[(x1,x2),(m1,m2)] R[(m2,x3),(n2,y3)]
    #                                  R[(m1,n2),(y1,y2)]
    for (x1, x2), (m1, m2), v1 in items:
        for (r2a, x3), (n2, y3), v2 in items:
            if r2a != m2:
                continue
            v12 = v1 * v2
            for (r3a, r3b), (y1, y2), v3 in items:
                if r3a != m1 or r3b != n2:
                    continue
                add(((x1, x2, x3), (y1, y2, y3)), v12 * v3)
    # rhs[(x1,x2,x3),(y1,y2,y3)] = sum R[(x2,x3),(m2,m3)] R[(x1,m2),(y1,n2)]
    #                                  R[(n2,m3),(y2,y3)]
    for (x2, x3), (m2, m3), v1 in items:
        for (r2a, r2b), (y1, n2), v2 in items:
            if r2b != m2:
                continue
            x1 = r2a
            v12 = v1 * v2
            for (r3a, r3b), (y2, y3), v3 in items:
                if r3a != n2 or r3b != m3:
                    continue
                add(((x1, x2, x3), (y1, y2, y3)), -(v12 * v3))
    return acc


def _closure_visits(strands, word):
    """Crossing visits along the closure traversal, and the component count.

    Components start at their smallest top position, in increasing order.
    Each crossing is visited twice; a visit records (letter index, is_over).
    For a positive letter the strand entering at the higher position passes
    over; negative letters swap the roles.
    """
    visits = []
    seen_tops = set()
    components = 0
    for start in range(1, strands + 1):
        if start in seen_tops:
            continue
        components += 1
        pos = start
        while True:
            seen_tops.add(pos)
            for t, letter in enumerate(word):
                k = abs(letter)
                if pos == k:
                    visits.append((t, letter < 0))
                    pos = k + 1
                elif pos == k + 1:
                    visits.append((t, letter > 0))
                    pos = k
            if pos == start:
                break
    return visits, components


def _first_bad_crossing(strands, word):
    visits, components = _closure_visits(strands, word)
    first_seen = set()
    for t, is_over in visits:
        if t in first_seen:
            continue
        first_seen.add(t)
        if not is_over:
            return t, components
    return None, components


def conway_polynomial(strands, word):
    """Invariant of the braid closure as a dict {z-exponent: int}.

    Induction: switch the first crossing met on its understrand (the switched
    diagram is closer to descending), smooth it (one crossing fewer);
    descending closures are unlinks, valued 1 for one component, else 0.
    """
    memo = {}

    def poly_add(a, b, scale=1):
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + scale * c
            if not out[e]:
                del out[e]
        return out

    def shift(a, by):
        return {e + by: c for e, c in a.items()}

    def rec(word):
        key = word
        if key in memo:
            return memo[key]
        bad, components = _first_bad_crossing(strands_of(word), word)
        if bad is None:
            result = {0: 1} if components == 1 else {}
        else:
            sign = 1 if word[bad] > 0 else -1
            switched = word[:bad] + (-word[bad],) + word[bad + 1:]
            smoothed = word[:bad] + word[bad + 1:]
            # positive bad crossing: f(w) = f(switched) + z f(smoothed)
            result = poly_add(rec(switched), shift(rec(smoothed), 1), sign)
        memo[key] = result
        return result

    def strands_of(_word):
        return strands

    return rec(tuple(word))


def conway_in_t(ctx, poly):
    """Evaluate a {z-exponent: int} polynomial at z = t - 1/t."""
    t = ctx.gen("t")
    z = t - ctx.gen("t", -1)
    total = ctx.zero()
    for e, c in poly.items():
        term = ctx.scalar(c)
        for _ in range(e):
            term = term * z
        total = total + term
    return total


def _state_loops(strands, word, choices):
    """Loop count of one smoothing state of the braid closure diagram."""
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    m = len(word)
    for t, letter in enumerate(word):
        k = abs(letter)
        for j in range(1, strands + 1):
            if j not in (k, k + 1):
                union((t, j), (t + 1, j))
        if choices[t]:
            union((t, k), (t, k + 1))
            union((t + 1, k), (t + 1, k + 1))
        else:
            union((t, k), (t + 1, k))
            union((t, k + 1), (t + 1, k + 1))
    for j in range(1, strands + 1):
        union((m, j), (0, j))
    return len({find(x) for x in list(parent)})


def bracket_jones(ctx_a, strands, word):
    """Normalized bracket-polynomial invariant of the braid closure, in A.

    A planar state sum with no matrices: each crossing is smoothed both
    ways, weighted A or 1/A, each extra loop contributes -A^2 - A^-2, and
    the writhe factor (-A^3)^(-w) normalizes.  The unknot maps to 1.
    """
    a = ctx_a.gen("A")
    delta = ctx_a.parse("-A^2 - A^-2")
    total = ctx_a.zero()
    m = len(word)
    for mask in range(1 << m):
        choices = [(mask >> t) & 1 for t in range(m)]
        weight = ctx_a.one()
        for t, letter in enumerate(word):
            vertical = not choices[t]
            positive = letter > 0
            exponent = 1 if (vertical == positive) else -1
            weight = weight * ctx_a.gen("A", exponent)
        loops = _state_loops(strands, word, choices)
        term = weight
        for _ in range(loops - 1):
            term = term * delta
        total = total + term
    writhe = sum(1 if k > 0 else -1 for k in word)
    from ybtrace.ring import pow_int

    factor = pow_int(ctx_a.parse("-A^3"), -writhe)
    return factor * total


def equal_up_to_unit(a, b):
    """Whether a = (+-) t^k b, including both zero."""
    from ybtrace.ring import try_div_exact
    from ybtrace.errors import NotDivisible

    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    try:
        q = try_div_exact(a, b)
    except NotDivisible:
        return False
    if len(q.terms) != 1:
        return False
    (_, coeff), = q.terms.items()
    return coeff.im == 0 and abs(coeff.re) == 1
