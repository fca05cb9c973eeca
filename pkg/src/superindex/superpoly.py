"""Laurent polynomials over Z[e]/(e^2 - 1).

``EpsInt`` is the coefficient (and dimension) ring; ``LaurentPoly`` carries
(super)characters in the variables ``x1..xp, y1..yq`` of a :class:`GroupSpec`.
Monomials are exponent tuples; the zero polynomial has no terms.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import BlockViolation, GroupMismatch, NotDivisible, ParseError
from .rootdata import GroupSpec


class EpsInt:
    """``even + odd*e`` with ``e*e = 1``."""

    __slots__ = ("even", "odd")

    def __init__(self, even: int = 0, odd: int = 0):
        object.__setattr__(self, "even", int(even))
        object.__setattr__(self, "odd", int(odd))

    def __setattr__(self, name, value):
        raise AttributeError("EpsInt is immutable")

    @classmethod
    def coerce(cls, v) -> EpsInt:
        if isinstance(v, EpsInt):
            return v
        if isinstance(v, int):
            return cls(v, 0)
        if isinstance(v, tuple) and len(v) == 2:
            return cls(*v)
        raise TypeError(f"cannot convert {v!r} to EpsInt")

    def __add__(self, other):
        other = EpsInt.coerce(other)
        return EpsInt(self.even + other.even, self.odd + other.odd)

    __radd__ = __add__

    def __sub__(self, other):
        other = EpsInt.coerce(other)
        return EpsInt(self.even - other.even, self.odd - other.odd)

    def __rsub__(self, other):
        return EpsInt.coerce(other) - self

    def __neg__(self):
        return EpsInt(-self.even, -self.odd)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return NotImplemented
        other = EpsInt.coerce(other)
        a, b, c, d = self.even, self.odd, other.even, other.odd
        return EpsInt(a * c + b * d, a * d + b * c)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.even or self.odd)

    def __eq__(self, other):
        try:
            other = EpsInt.coerce(other)
        except TypeError:
            return NotImplemented
        return self.even == other.even and self.odd == other.odd

    def __hash__(self):
        return hash((self.even, self.odd))

    def __repr__(self):
        return f"EpsInt({self.even}, {self.odd})"

    def __str__(self):
        return format_coeff(self)

    def super_value(self) -> int:
        """Image under ``e -> -1``."""
        return self.even - self.odd

    def as_tuple(self) -> tuple[int, int]:
        return (self.even, self.odd)

    def is_nonnegative(self) -> bool:
        return self.even >= 0 and self.odd >= 0


ZERO = EpsInt(0, 0)
ONE = EpsInt(1, 0)
EPS = EpsInt(0, 1)


def format_coeff(c: EpsInt) -> str:
    """``3``, ``-e``, ``2e``, ``(1-2e)``."""
    a, b = c.even, c.odd
    if b == 0:
        return str(a)
    odd = {1: "e", -1: "-e"}.get(b, f"{b}e")
    if a == 0:
        return odd
    return f"({a}{'+' if b > 0 else '-'}{abs(b) if abs(b) != 1 else ''}e)"


def parse_coeff(text: str) -> EpsInt:
    """Inverse of :func:`format_coeff`; also accepts ``a+be`` without parentheses."""
    s = text.replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        return ONE
    if re.fullmatch(r"[+-]?\d+", s):
        return EpsInt(int(s), 0)
    m = re.fullmatch(r"([+-]?\d*)e", s)
    if m:
        return EpsInt(0, _odd_part(m.group(1)))
    m = re.fullmatch(r"([+-]?\d+)([+-]\d*)e", s)
    if m:
        return EpsInt(int(m.group(1)), _odd_part(m.group(2)))
    raise ParseError(f"cannot parse coefficient {text!r}")


def _odd_part(s: str) -> int:
    if s in ("", "+"):
        return 1
    if s == "-":
        return -1
    return int(s)


def order_key(exps: tuple[int, ...]):
    """Graded-lex key: total degree, then x1 > ... > xp > y1 > ... > yq."""
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable finitely supported map ``exponent tuple -> EpsInt``."""

    __slots__ = ("group", "terms", "_hash")

    def __init__(self, group: GroupSpec, terms: Mapping[tuple[int, ...], EpsInt] | None = None):
        n = group.nvars
        clean = {}
        for exps, c in (terms or {}).items():
            c = EpsInt.coerce(c)
            if not c:
                continue
            if len(exps) != n:
                raise GroupMismatch(f"monomial {exps} has wrong length for {group}")
            clean[tuple(exps)] = c
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def _raw(cls, group, terms):
        obj = object.__new__(cls)
        object.__setattr__(obj, "group", group)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def zero(cls, group: GroupSpec) -> LaurentPoly:
        return cls._raw(group, {})

    @classmethod
    def constant(cls, group: GroupSpec, c=ONE) -> LaurentPoly:
        return cls(group, {(0,) * group.nvars: c})

    @classmethod
    def monomial(cls, group: GroupSpec, exps: Iterable[int], c=ONE) -> LaurentPoly:
        return cls(group, {tuple(exps): c})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.group, frozenset(self.terms.items()))))
        return self._hash

    def _check(self, other: LaurentPoly):
        if self.group != other.group:
            raise GroupMismatch(f"{self.group} vs {other.group}")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.group, EpsInt.coerce(other))
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._raw(self.group, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.group, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = EpsInt.coerce(other)
            if not c:
                return LaurentPoly.zero(self.group)
            out = {}
            for m, v in self.terms.items():
                v = v * c
                if v:
                    out[m] = v
            return LaurentPoly._raw(self.group, out)
        self._check(other)
        acc: dict[tuple[int, ...], list[int]] = {}
        for m1, c1 in self.terms.items():
            a, b = c1.even, c1.odd
            for m2, c2 in other.terms.items():
                m = tuple(u + v for u, v in zip(m1, m2))
                c, d = c2.even, c2.odd
                slot = acc.get(m)
                if slot is None:
                    acc[m] = [a * c + b * d, a * d + b * c]
                else:
                    slot[0] += a * c + b * d
                    slot[1] += a * d + b * c
        return LaurentPoly._raw(self.group, {m: EpsInt(e, o) for m, (e, o) in acc.items() if e or o})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = LaurentPoly.constant(self.group)
        for _ in range(n):
            out = out * self
        return out

    def sorted_terms(self) -> list[tuple[tuple[int, ...], EpsInt]]:
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple[int, ...], EpsInt]:
        m = max(self.terms, key=order_key)
        return m, self.terms[m]

    def trailing_term(self) -> tuple[tuple[int, ...], EpsInt]:
        m = min(self.terms, key=order_key)
        return m, self.terms[m]

    def coeff(self, exps) -> EpsInt:
        return self.terms.get(tuple(exps), ZERO)

    def max_abs_exponent(self) -> int:
        return max((abs(e) for m in self.terms for e in m), default=0)

    def with_group(self, group: GroupSpec) -> LaurentPoly:
        """Reinterpret in another group with the same variable count (Levi restriction)."""
        if group.nvars != self.group.nvars:
            raise GroupMismatch(f"{self.group} and {group} have different variable counts")
        return LaurentPoly._raw(group, self.terms)

    def __repr__(self):
        return f"LaurentPoly({self.group}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q*b == a`` by leading-term elimination.

    Under either sign of ``e`` the identity holds over the integers, so every
    exponent of ``q`` lies in ``[min(a) - max(b), max(a) - min(b)]`` per
    variable.  Trailing terms alone give no bound because ``(1+e)(1-e) = 0``.
    Candidates leave that box only when the remainder cannot vanish, and
    then :class:`NotDivisible` is raised.
    """
    a._check(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return LaurentPoly.zero(a.group)
    lb, cb = b.leading_term()
    if cb.even and cb.odd:
        if cb.even * cb.even == cb.odd * cb.odd:
            raise NotDivisible(f"leading coefficient {cb} is a zero divisor")
    inv = _unit_inverse(cb)
    lo = [min(m[i] for m in a.terms) - max(m[i] for m in b.terms) for i in range(a.group.nvars)]
    hi = [max(m[i] for m in a.terms) - min(m[i] for m in b.terms) for i in range(a.group.nvars)]
    rem = dict(a.terms)
    quot: dict[tuple[int, ...], EpsInt] = {}
    btems = list(b.terms.items())
    while rem:
        lm = max(rem, key=order_key)
        lc = rem[lm]
        m = tuple(u - v for u, v in zip(lm, lb))
        if any(not l <= v <= h for l, v, h in zip(lo, m, hi)):
            raise NotDivisible("nonzero remainder", remainder_terms=len(rem))
        if inv is None:
            c = _divide_coeff(lc, cb)
        else:
            c = lc * inv
        quot[m] = c
        for mb, c2 in btems:
            mm = tuple(u + v for u, v in zip(m, mb))
            v = rem.get(mm, ZERO) - c * c2
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    return LaurentPoly._raw(a.group, quot)


def _unit_inverse(c: EpsInt) -> EpsInt | None:
    if c in (ONE, EPS):
        return c
    if c in (-ONE, -EPS):
        return c
    return None


def _divide_coeff(a: EpsInt, b: EpsInt) -> EpsInt:
    # Solve b*c = a in Z[e]: split along e = +1 and e = -1 (both must divide).
    plus_a, minus_a = a.even + a.odd, a.even - a.odd
    plus_b, minus_b = b.even + b.odd, b.even - b.odd
    if plus_b == 0 or minus_b == 0 or plus_a % plus_b or minus_a % minus_b:
        raise NotDivisible(f"coefficient {a} not divisible by {b}")
    u, v = plus_a // plus_b, minus_a // minus_b
    if (u + v) % 2:
        raise NotDivisible(f"coefficient {a} not divisible by {b}")
    return EpsInt((u + v) // 2, (u - v) // 2)


def specialize(a: LaurentPoly) -> EpsInt:
    """All variables set to 1: the Z[e]-valued dimension."""
    even = sum(c.even for c in a.terms.values())
    odd = sum(c.odd for c in a.terms.values())
    return EpsInt(even, odd)


def super_eval(a: LaurentPoly) -> int:
    """All variables to 1 and ``e -> -1``: the superdimension."""
    return specialize(a).super_value()


def permute_vars(a: LaurentPoly, w: Iterable[int]) -> LaurentPoly:
    """Send variable ``k`` to variable ``w[k]`` (0-based over ``x1..xp, y1..yq``)."""
    w = tuple(w)
    n, p = a.group.nvars, a.group.p
    if sorted(w) != list(range(n)):
        raise BlockViolation(f"{w} is not a permutation of {n} variables")
    if any((k < p) != (w[k] < p) for k in range(n)):
        raise BlockViolation(f"{w} mixes even and odd variables")
    out = {}
    for m, c in a.terms.items():
        new = [0] * n
        for k, e in enumerate(m):
            new[w[k]] = e
        out[tuple(new)] = c
    return LaurentPoly._raw(a.group, out)


def variable_names(group: GroupSpec) -> list[str]:
    return [f"x{i + 1}" for i in range(group.p)] + [f"y{j + 1}" for j in range(group.q)]


def format_monomial(group: GroupSpec, exps: tuple[int, ...]) -> str:
    parts = []
    for name, e in zip(variable_names(group), exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(a: LaurentPoly) -> str:
    """Canonical text: graded-lex descending, e.g. ``x1^2 + 2e*x1*y1 + y1^2``."""
    if not a:
        return "0"
    out = []
    for i, (m, c) in enumerate(a.sorted_terms()):
        sign = "+"
        if c.even <= 0 and c.odd <= 0:
            sign, c = "-", -c
        mono = format_monomial(a.group, m)
        cs = format_coeff(c)
        if mono:
            body = mono if cs == "1" else f"{cs}*{mono}"
        else:
            body = cs
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def parse_poly(group: GroupSpec, text: str) -> LaurentPoly:
    """Inverse of :func:`format_poly`."""
    names = {n: k for k, n in enumerate(variable_names(group))}
    s = text.strip()
    if s == "0":
        return LaurentPoly.zero(group)
    tokens = re.split(r"\s+([+-])\s+", s)
    chunks = [("+", tokens[0])] + list(zip(tokens[1::2], tokens[2::2]))
    out = LaurentPoly.zero(group)
    for sign, body in chunks:
        neg = sign == "-"
        if body.startswith("-"):
            neg, body = not neg, body[1:]
        factors = body.split("*")
        coeff = ONE
        exps = [0] * group.nvars
        for f in factors:
            m = re.fullmatch(r"([xy]\d+)(?:\^(-?\d+))?", f)
            if m and m.group(1) in names:
                exps[names[m.group(1)]] += int(m.group(2) or 1)
            else:
                coeff = coeff * parse_coeff(f)
        out = out + LaurentPoly.monomial(group, exps, -coeff if neg else coeff)
    return out
