"""Exact scalar arithmetic.

Scalars are Laurent polynomials in named commuting generators with
Gaussian-rational coefficients.  Exponents may be half-integers (stored
doubled), and a context may adjoin square-root symbols whose square rewrites
to a declared radicand.  All values are immutable and kept in canonical
form: no zero coefficients, root exponents reduced to 0 or 1.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ContextMismatch, NotAUnit, NotDivisible, ParseError, UnknownName

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _fraction_sqrt(x):
    """Exact square root of a nonnegative Fraction, or None."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


class GaussianRational:
    """A number a + b*i with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def inverse(self):
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def sqrt(self):
        """Exact square root if one exists in Q(i), else None.  Positive branch."""
        if self.im == 0:
            if self.re >= 0:
                r = _fraction_sqrt(self.re)
                return GaussianRational(r) if r is not None else None
            r = _fraction_sqrt(-self.re)
            return GaussianRational(0, r) if r is not None else None
        return None

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"



class ScalarContext:
    """Declares the generator names and adjoined square roots of a scalar ring.

    ``roots`` is a sequence of ``(name, radicand)`` pairs; each radicand is
    given as scalar text and may reference only generators and roots declared
    before it.  Names must be unique identifiers; ``i`` is reserved for the
    imaginary unit.
    """

    __slots__ = ("generators", "root_names", "names", "_index", "_radicands")

    def __init__(self, generators, roots=()):
        self.generators = tuple(generators)
        self.root_names = tuple(name for name, _ in roots)
        self.names = self.generators + self.root_names
        seen = set()
        for name in self.names:
            if not _NAME_RE.fullmatch(name) or name == "i":
                raise ValueError(f"invalid generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
        self._index = {name: k for k, name in enumerate(self.names)}
        self._radicands = []
        ngens = len(self.generators)
        for j, (name, rad_text) in enumerate(roots):
            rad = self.parse(rad_text) if isinstance(rad_text, str) else rad_text
            if rad.is_zero():
                raise ValueError(f"radicand of {name!r} is zero")
            cut = ngens + j
            for exps in rad.terms:
                if any(exps[k] for k in range(cut, len(self.names))):
                    raise ValueError(
                        f"radicand of {name!r} references a later generator"
                    )
            self._radicands.append(rad)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ScalarContext):
            return NotImplemented
        return (
            self.names == other.names
            and self.generators == other.generators
            and [r.terms for r in self._radicands] == [r.terms for r in other._radicands]
        )

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        roots = ", ".join(f"{n}={r}" for n, r in zip(self.root_names, self._radicands))
        return f"ScalarContext({list(self.generators)!r}" + (f", roots[{roots}])" if roots else ")")

    # -- constructors -----------------------------------------------------

    def zero(self):
        return Scalar(self, {})

    def scalar(self, value, imag=0):
        c = GaussianRational(value, imag)
        if not c:
            return Scalar(self, {})
        return Scalar(self, {(0,) * len(self.names): c})

    def one(self):
        return self.scalar(1)

    def i(self):
        return self.scalar(0, 1)

    def monomial(self, coeff, exponents):
        """Monomial with ``exponents`` a mapping name -> exponent (Fraction ok)."""
        c = coeff if isinstance(coeff, GaussianRational) else GaussianRational(coeff)
        exps = [0] * len(self.names)
        for name, e in exponents.items():
            if name not in self._index:
                raise UnknownName(f"unknown generator {name!r}")
            d = Fraction(e) * 2
            if d.denominator != 1:
                raise NotAUnit(f"exponent {e} of {name!r} is not a half-integer")
            exps[self._index[name]] = int(d)
        return Scalar(self, _canonical(self, [(tuple(exps), c)]))

    def gen(self, name, power=1):
        return self.monomial(1, {name: power})

    def parse(self, text):
        return parse_scalar(self, text)

    def radicand(self, root_name):
        """The declared square of an adjoined root, as a Scalar."""
        if root_name not in self.root_names:
            raise UnknownName(f"unknown root {root_name!r}")
        return self._radicands[self.root_names.index(root_name)]


def _canonical(ctx, items):
    """Merge raw (exps, coeff) pairs into canonical form, reducing roots.

    Root exponents are rewritten into {0, 1} by peeling squares into the
    radicand; negative root powers additionally multiply by the inverse of
    the radicand, which must then be a unit.
    """
    ngens = len(ctx.generators)
    nroots = len(ctx.root_names)
    acc = {}
    pending = list(items)
    while pending:
        exps, coeff = pending.pop()
        if not coeff:
            continue
        bad = -1
        for j in range(nroots - 1, -1, -1):
            d = exps[ngens + j]
            if d not in (0, 2):
                bad = j
                break
        if bad < 0:
            prev = acc.get(exps)
            total = coeff if prev is None else prev + coeff
            if total:
                acc[exps] = total
            elif prev is not None:
                del acc[exps]
            continue
        pos = ngens + bad
        d = exps[pos]
        if d % 2:
            raise NotAUnit(f"fractional power of root {ctx.root_names[bad]!r}")
        k, rho = divmod(d // 2, 2)
        base = list(exps)
        base[pos] = 2 * rho
        factor = pow_int(ctx._radicands[bad], k)
        for fexps, fcoeff in factor.terms.items():
            combined = tuple(b + f for b, f in zip(base, fexps))
            pending.append((combined, coeff * fcoeff))
    return acc


class Scalar:
    """An immutable element of the ring declared by a ScalarContext."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = terms

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self == self.ctx.one()

    def is_unit(self):
        """True when the scalar has an inverse inside the ring."""
        if len(self.terms) != 1:
            return False
        exps = next(iter(self.terms))
        ngens = len(self.ctx.generators)
        for j, name in enumerate(self.ctx.root_names):
            if exps[ngens + j] and not self.ctx._radicands[j].is_unit():
                return False
        return True

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(
                    f"contexts differ: {self.ctx!r} vs {other.ctx!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        big, small = (self.terms, other.terms)
        if len(big) < len(small):
            big, small = small, big
        acc = dict(big)
        for exps, coeff in small.items():
            prev = acc.get(exps)
            total = coeff if prev is None else prev + coeff
            if total:
                acc[exps] = total
            elif prev is not None:
                del acc[exps]
        return Scalar(self.ctx, acc)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return Scalar(self.ctx, {})
        raw = []
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                raw.append((tuple(a + b for a, b in zip(e1, e2)), c1 * c2))
        return Scalar(self.ctx, _canonical(self.ctx, raw))

    __rmul__ = __mul__

    def __pow__(self, k):
        return pow_int(self, k)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"<Scalar {format_scalar(self)}>"


def pow_int(x, k):
    """Exact integer power.  Negative powers require a unit base."""
    if not isinstance(k, int):
        raise TypeError("exponent must be an integer")
    ctx = x.ctx
    if k == 0:
        return ctx.one()
    if k > 0:
        result = None
        base = x
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result
    # negative power: single-term monomial whose root factors are invertible
    if len(x.terms) != 1:
        raise NotAUnit(f"negative power of non-unit {format_scalar(x)}")
    (exps, coeff), = x.terms.items()
    inv_term = (tuple(-e for e in exps), coeff.inverse())
    inv = Scalar(ctx, _canonical(ctx, [inv_term]))
    return pow_int(inv, -k)


def _pow_half(x, doubled):
    """x raised to doubled/2.  Odd values need a monomial with an exact root."""
    if doubled % 2 == 0:
        return pow_int(x, doubled // 2)
    if len(x.terms) != 1:
        raise NotAUnit(f"half power of non-monomial {format_scalar(x)}")
    (exps, coeff), = x.terms.items()
    root_coeff = coeff.sqrt()
    if root_coeff is None or any(e % 2 for e in exps):
        raise NotAUnit(f"no exact square root of {format_scalar(x)}")
    ngens = len(x.ctx.generators)
    if any(exps[k] for k in range(ngens, len(exps))):
        raise NotAUnit(f"half power of root factor in {format_scalar(x)}")
    half = Scalar(x.ctx, {tuple(e // 2 for e in exps): root_coeff})
    return pow_int(x, (doubled - 1) // 2) * half


def substitute(x, bindings, target=None):
    """Homomorphic substitution of generators, followed by canonicalization.

    ``bindings`` maps generator names to scalars (or scalar text) over the
    target context.  Unbound generators map to the target generator of the
    same name.  Adjoined roots map to the declared root of the substituted
    radicand when the target declares one, otherwise to an exact monomial
    square root when that exists.
    """
    ctx = x.ctx
    if target is None:
        target = None
        for value in bindings.values():
            if isinstance(value, Scalar):
                target = value.ctx
                break
        if target is None:
            target = ctx
    images = {}
    for name, value in bindings.items():
        if name not in ctx._index:
            raise UnknownName(f"unknown generator {name!r}")
        if name in ctx.root_names:
            raise UnknownName(f"cannot bind root {name!r} directly")
        img = target.parse(value) if isinstance(value, str) else value
        if img.ctx is not target and img.ctx != target:
            raise ContextMismatch("binding value lies outside the target context")
        images[name] = img
    ngens = len(ctx.generators)
    factor_cache = {}

    def factor_image(pos):
        cached = factor_cache.get(pos)
        if cached is not None:
            return cached
        if pos < ngens:
            name = ctx.generators[pos]
            if name in images:
                image = images[name]
            else:
                if name not in target._index:
                    raise ContextMismatch(
                        f"generator {name!r} missing from target context"
                    )
                image = target.gen(name)
        else:
            # radicands only reference earlier positions, so this terminates
            rad = apply(ctx._radicands[pos - ngens])
            image = None
            for k, tname in enumerate(target.root_names):
                if target._radicands[k] == rad:
                    image = target.gen(tname)
                    break
            if image is None:
                try:
                    image = _pow_half(rad, 1)
                except NotAUnit:
                    raise NotAUnit(
                        "no representation for the square root of "
                        + format_scalar(rad)
                    ) from None
        factor_cache[pos] = image
        return image

    def apply(y):
        result = target.zero()
        for exps, coeff in y.terms.items():
            term = target.scalar(coeff.re, coeff.im)
            for pos, d in enumerate(exps):
                if d:
                    term = term * _pow_half(factor_image(pos), d)
            result = result + term
        return result

    return apply(x)


# -- exact division ---------------------------------------------------------


def _grlex_key(exps):
    return (sum(exps), exps)


def _laurent_div(ctx, num_terms, den_terms):
    """Exact division of root-free term dicts; raises NotDivisible."""
    if not num_terms:
        return {}
    width = len(ctx.names)
    den_min = [min(e[k] for e in den_terms) for k in range(width)]
    num_min = [min(e[k] for e in num_terms) for k in range(width)]
    den0 = {tuple(e[k] - den_min[k] for k in range(width)): c for e, c in den_terms.items()}
    rem = {tuple(e[k] - num_min[k] for k in range(width)): c for e, c in num_terms.items()}
    shift = tuple(n - d for n, d in zip(num_min, den_min))
    lt_den = max(den0, key=_grlex_key)
    lt_den_coeff = den0[lt_den]
    quot = {}
    while rem:
        lt_rem = max(rem, key=_grlex_key)
        diff = tuple(a - b for a, b in zip(lt_rem, lt_den))
        if any(d < 0 for d in diff):
            raise NotDivisible("no exact quotient")
        coeff = rem[lt_rem] * lt_den_coeff.inverse()
        quot[diff] = coeff
        for e, c in den0.items():
            key = tuple(a + b for a, b in zip(diff, e))
            prev = rem.get(key)
            total = (-(coeff * c)) if prev is None else prev - coeff * c
            if total:
                rem[key] = total
            elif prev is not None:
                del rem[key]
    return {tuple(a + b for a, b in zip(e, shift)): c for e, c in quot.items()}


def try_div_exact(num, den):
    """Quotient q with q*den == num, or NotDivisible.

    Denominators containing adjoined roots are first rationalized against
    the root, one root at a time from the innermost extension outward.
    """
    num._coerce(den)
    ctx = num.ctx
    if den.is_zero():
        raise ZeroDivisionError("division by zero scalar")
    if num.is_zero():
        return ctx.zero()
    ngens = len(ctx.generators)
    work_num, work_den = num, den
    for j in range(len(ctx.root_names) - 1, -1, -1):
        pos = ngens + j
        d0_terms, d1_terms = {}, {}
        for exps, coeff in work_den.terms.items():
            if exps[pos]:
                stripped = exps[:pos] + (0,) + exps[pos + 1:]
                d1_terms[stripped] = coeff
            else:
                d0_terms[exps] = coeff
        if not d1_terms:
            continue
        root = ctx.gen(ctx.root_names[j])
        d0 = Scalar(ctx, d0_terms)
        d1 = Scalar(ctx, d1_terms)
        rad = ctx._radicands[j]
        if d0.is_zero():
            work_num = work_num * root
            work_den = d1 * rad
        else:
            conj = d0 - root * d1
            work_num = work_num * conj
            work_den = d0 * d0 - rad * d1 * d1
        if work_den.is_zero():
            raise NotDivisible("denominator is a zero divisor of the root extension")
    # split numerator by root pattern; divide each component
    components = {}
    for exps, coeff in work_num.terms.items():
        pattern = exps[ngens:]
        stripped = exps[:ngens] + (0,) * len(ctx.root_names)
        components.setdefault(pattern, {})[stripped] = coeff
    result = {}
    for pattern, terms in components.items():
        part = _laurent_div(ctx, terms, work_den.terms)
        for exps, coeff in part.items():
            if any(exps[ngens:]):
                raise NotDivisible("no exact quotient")
            result[exps[:ngens] + pattern] = coeff
    quotient = Scalar(ctx, _canonical(ctx, list(result.items())))
    if quotient * den != num:
        raise NotDivisible("no exact quotient")
    return quotient


# -- parsing and formatting ---------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, ctx, text):
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def next(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.next()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self):
        value = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input", pos)
        return value

    def expr(self):
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value in "+-":
            self.next()
            negate = value == "-"
        result = self.term()
        if negate:
            result = -result
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.next()
                rhs = self.term()
                result = result - rhs if value == "-" else result + rhs
            else:
                return result

    def term(self):
        result = self.factor()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.next()
                result = result * self.factor()
            elif kind == "op" and value == "/":
                self.next()
                rhs = self.factor()
                if len(rhs.terms) != 1 or any(next(iter(rhs.terms))):
                    raise ParseError("division only by nonzero constants", pos)
                try:
                    result = result * pow_int(rhs, -1)
                except (NotAUnit, ZeroDivisionError):
                    raise ParseError("division only by nonzero constants", pos) from None
            else:
                return result

    def factor(self):
        base = self.atom()
        kind, value, pos = self.peek()
        if kind == "op" and value == "^":
            self.next()
            doubled = self.exponent()
            try:
                return _pow_half(base, doubled)
            except NotAUnit as exc:
                raise ParseError(str(exc), pos) from None
        return base

    def exponent(self):
        """Integer, or a parenthesized n or n/2, with optional sign."""
        kind, value, pos = self.next()
        sign = 1
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            kind, value, pos = self.next()
        if kind == "int":
            return sign * 2 * value
        if kind == "op" and value == "(":
            kind, value, pos = self.next()
            if kind == "op" and value in "+-":
                sign *= -1 if value == "-" else 1
                kind, value, pos = self.next()
            if kind != "int":
                raise ParseError("expected integer exponent", pos)
            doubled = 2 * value
            kind, nxt, pos = self.next()
            if kind == "op" and nxt == "/":
                kind, den, pos = self.next()
                if kind != "int" or den != 2:
                    raise ParseError("exponent denominator must be 2", pos)
                doubled = value
                kind, nxt, pos = self.next()
            if kind != "op" or nxt != ")":
                raise ParseError("expected ')' in exponent", pos)
            return sign * doubled
        raise ParseError("expected exponent", pos)

    def atom(self):
        kind, value, pos = self.next()
        if kind == "int":
            return self.ctx.scalar(value)
        if kind == "name":
            if value == "i":
                return self.ctx.i()
            if value not in self.ctx._index:
                raise ParseError(f"unknown generator {value!r}", pos)
            return self.ctx.gen(value)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "op" and value == "-":
            return -self.atom()
        raise ParseError("expected a value", pos)


def parse_scalar(ctx, text):
    """Parse scalar text: integers, ``i``, names, ``+ - * / ^``, parentheses.

    Exponents are integers or ``(n/2)``; ``/`` divides by constants only.
    """
    return _Parser(ctx, text).parse()


def _format_coeff(c):
    """Render a Gaussian rational; returns (text, needs_parens_when_multiplied)."""
    if c.im == 0:
        return str(c.re), False
    if c.re == 0:
        if c.im == 1:
            return "i", False
        if c.im == -1:
            return "-i", False
        return f"{c.im}*i", False
    im = f"{c.im}*i" if c.im not in (1, -1) else ("i" if c.im == 1 else "-i")
    if c.im > 0:
        return f"({c.re}+{im})", True
    return f"({c.re}{im})", True


def format_scalar(x):
    """Canonical text form, terms in ascending graded-lexicographic order."""
    if not x.terms:
        return "0"
    names = x.ctx.names
    pieces = []
    for exps in sorted(x.terms, key=_grlex_key):
        coeff = x.terms[exps]
        factors = []
        for name, d in zip(names, exps):
            if d == 0:
                continue
            if d == 2:
                factors.append(name)
            elif d % 2 == 0:
                factors.append(f"{name}^{d // 2}")
            else:
                factors.append(f"{name}^({d}/2)")
        mono = "*".join(factors)
        ctext, wrapped = _format_coeff(coeff)
        if not mono:
            text = ctext
        elif ctext == "1":
            text = mono
        elif ctext == "-1":
            text = "-" + mono
        else:
            text = f"{ctext}*{mono}"
        pieces.append(text)
    out = pieces[0]
    for text in pieces[1:]:
        if text.startswith("-") and not text.startswith("-("):
            out += " - " + text[1:]
        else:
            out += " + " + text
    return out


# -- JSON forms ---------------------------------------------------------------


def scalar_to_json(x):
    """JSON-ready dict: {"terms": [{"re", "im", "exps"}...]} with exact strings."""
    terms = []
    for exps in sorted(x.terms, key=_grlex_key):
        coeff = x.terms[exps]
        entry = {
            "re": str(coeff.re),
            "im": str(coeff.im),
            "exps": {
                name: str(Fraction(d, 2))
                for name, d in zip(x.ctx.names, exps)
                if d
            },
        }
        terms.append(entry)
    return {"terms": terms}


def scalar_from_json(ctx, obj):
    raw = []
    for entry in obj["terms"]:
        coeff = GaussianRational(Fraction(entry.get("re", "0")), Fraction(entry.get("im", "0")))
        exps = [0] * len(ctx.names)
        for name, etext in entry.get("exps", {}).items():
            if name not in ctx._index:
                raise UnknownName(f"unknown generator {name!r}")
            d = Fraction(etext) * 2
            if d.denominator != 1:
                raise ParseError(f"exponent {etext} is not a half-integer")
            exps[ctx._index[name]] = int(d)
        raw.append((tuple(exps), coeff))
    return Scalar(ctx, _canonical(ctx, raw))


def context_to_json(ctx):
    return {
        "generators": list(ctx.generators),
        "roots": [
            {"name": name, "radicand": format_scalar(rad)}
            for name, rad in zip(ctx.root_names, ctx._radicands)
        ],
    }


def context_from_json(obj):
    return ScalarContext(
        obj.get("generators", ()),
        [(r["name"], r["radicand"]) for r in obj.get("roots", ())],
    )

