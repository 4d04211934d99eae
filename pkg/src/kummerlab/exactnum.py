"""Exact arithmetic tower: Q(zeta_n), optionally extended by one transcendental.

A FieldElement is a quotient num/den of polynomials in the transcendental
whose coefficients lie in Q(zeta_n).  The denominator is monic and coprime
to the numerator, so two elements are equal exactly when their stored
forms are equal.  Without a transcendental the element is a single
cyclotomic number.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import upoly
from .cyclo import Cyc, cyclo_data, embed_cyc
from .exprparse import Algebra, ExprSyntaxError, UnknownSymbolError, evaluate, parse_tree  # noqa: F401
from .numroots import cyc_sqrt


class DescriptorMismatch(ValueError):
    pass


@dataclass(frozen=True)
class FieldDescriptor:
    cyclotomic_order: int = 1
    transcendental: str | None = None

    def __post_init__(self):
        if self.cyclotomic_order < 1:
            raise ValueError("cyclotomic order must be positive")
        if self.transcendental is not None:
            name = self.transcendental
            if not name.isidentifier() or name == "i" or (name[0] == "z" and name[1:].isdigit()):
                raise ValueError(f"invalid transcendental name {name!r}")

    @property
    def n(self) -> int:
        return self.cyclotomic_order

    @property
    def degree(self) -> int:
        return cyclo_data(self.cyclotomic_order).degree

    def base(self) -> FieldDescriptor:
        """The transcendental-free part."""
        return FieldDescriptor(self.cyclotomic_order)

    def with_order(self, order: int) -> FieldDescriptor:
        return FieldDescriptor(order, self.transcendental)

    # constructors
    def zero(self) -> FieldElement:
        return FieldElement(self, (), _ONE_POLY[self.n], _canonical=True)

    def one(self) -> FieldElement:
        return self.from_int(1)

    def from_int(self, k) -> FieldElement:
        c = Cyc.from_fraction(self.n, Fraction(k))
        return FieldElement(self, upoly.const(c), _ONE_POLY[self.n], _canonical=True)

    def from_cyc(self, c: Cyc) -> FieldElement:
        if c.n != self.n:
            raise DescriptorMismatch("cyclotomic order mismatch")
        return FieldElement(self, upoly.const(c), _ONE_POLY[self.n], _canonical=True)

    def zeta(self, m: int = 1, k: int = 1) -> FieldElement:
        """zeta_m^k, requiring m | n."""
        if self.n % m:
            raise ValueError(f"zeta_{m} is not in Q(zeta_{self.n})")
        return self.from_cyc(Cyc.zeta_power(self.n, (self.n // m) * k))

    def i(self) -> FieldElement:
        return self.zeta(4)

    def gen(self) -> FieldElement:
        if self.transcendental is None:
            raise ValueError("descriptor has no transcendental")
        one = Cyc.one(self.n)
        return FieldElement(self, (Cyc.zero(self.n), one), (one,), _canonical=True)

    def parse(self, text: str, bindings: dict | None = None) -> FieldElement:
        return fe_parse(text, self, bindings)

    def __str__(self) -> str:
        base = "Q" if self.n == 1 else f"Q(z{self.n})"
        return base if self.transcendental is None else f"{base}({self.transcendental})"


class _OnePoly(dict):
    def __missing__(self, n):
        val = (Cyc.one(n),)
        self[n] = val
        return val


_ONE_POLY = _OnePoly()


def _canonicalize(num, den):
    if not den:
        raise ZeroDivisionError("division by zero")
    if not num:
        return (), _ONE_POLY[den[0].n]
    if len(den) > 1 and len(num) > 0:
        g = upoly.gcd(num, den)
        if len(g) > 1:
            num = upoly.divmod_(num, g)[0]
            den = upoly.divmod_(den, g)[0]
    lead = den[-1]
    if not lead.is_one():
        inv = lead.inverse()
        num = upoly.scale(num, inv)
        den = upoly.monic(den)
    return num, den


class FieldElement:
    """Immutable exact field element in canonical reduced form."""

    __slots__ = ("desc", "num", "den", "_hash")

    def __init__(self, desc: FieldDescriptor, num, den, _canonical: bool = False):
        self.desc = desc
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = _canonicalize(upoly.strip(num), upoly.strip(den))
        self._hash = None

    # coercion
    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.desc != self.desc:
                raise DescriptorMismatch(f"{self.desc} vs {other.desc}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.desc.from_int(other)
        return NotImplemented

    # predicates
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return len(self.num) == 1 and len(self.den) == 1 and self.num[0].is_one()

    def is_constant(self) -> bool:
        """True when free of the transcendental."""
        return len(self.num) <= 1 and len(self.den) == 1

    def constant(self) -> Cyc:
        if not self.is_constant():
            raise ValueError("element depends on the transcendental")
        return self.num[0] if self.num else Cyc.zero(self.desc.n)

    def is_rational(self) -> bool:
        return self.is_constant() and self.constant().is_rational()

    def to_fraction(self) -> Fraction:
        return self.constant().to_fraction()

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if len(self.den) == 1 and len(other.den) == 1:
            return FieldElement(self.desc, upoly.add(self.num, other.num), self.den, _canonical=True)
        if self.den == other.den:
            return FieldElement(self.desc, upoly.add(self.num, other.num), self.den)
        num = upoly.add(upoly.mul(self.num, other.den), upoly.mul(other.num, self.den))
        return FieldElement(self.desc, num, upoly.mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.desc, upoly.neg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return self.desc.zero()
        if len(self.den) == 1 and len(other.den) == 1:
            return FieldElement(self.desc, upoly.mul(self.num, other.num), self.den, _canonical=True)
        return FieldElement(self.desc, upoly.mul(self.num, other.num), upoly.mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(self.desc, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.desc.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.desc.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.desc == other.desc and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.desc, self.num, self.den))
        return self._hash

    # normalization helpers
    def sign(self) -> int:
        """Sign of the leading numerator coefficient's first coordinate."""
        return self.num[-1].sign() if self.num else 0

    def height(self) -> int:
        return max(c.height() for c in self.num + self.den) if self.num else 0

    def format(self) -> str:
        return _format_fe(self)

    __str__ = format

    def __repr__(self) -> str:
        return f"FieldElement({self.format()!r} in {self.desc})"

    def embed(self, desc: FieldDescriptor) -> FieldElement:
        """Image in a descriptor with larger cyclotomic order."""
        if desc == self.desc:
            return self
        if desc.transcendental != self.desc.transcendental and self.desc.transcendental is not None:
            raise DescriptorMismatch("transcendental mismatch")
        num = tuple(embed_cyc(c, desc.n) for c in self.num)
        den = tuple(embed_cyc(c, desc.n) for c in self.den)
        return FieldElement(desc, num, den, _canonical=True)


def _format_kpoly(p, var: str) -> tuple[str, int]:
    """Text of a polynomial in var with cyclotomic coefficients; returns (text, term count)."""
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c.is_zero():
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        ctext = c.format()
        if not mono:
            text = ctext
        elif c.is_rational():
            q = c.to_fraction()
            if q == 1:
                text = mono
            elif q == -1:
                text = "-" + mono
            else:
                text = f"{ctext}*{mono}"
        else:
            text = f"({ctext})*{mono}"
        parts.append(text)
    out = parts[0]
    for t in parts[1:]:
        out += t if t.startswith("-") else "+" + t
    return out, len(parts)


def _format_fe(x: FieldElement) -> str:
    if not x.num:
        return "0"
    var = x.desc.transcendental or "_"
    num, nterms = _format_kpoly(x.num, var)
    if len(x.den) == 1:
        return num
    den, dterms = _format_kpoly(x.den, var)
    if nterms > 1 or (len(x.num) == 1 and not x.num[0].is_rational()):
        num = f"({num})"
    if dterms > 1 or len(x.den) > 2:
        den = f"({den})"
    return f"{num}/{den}"


class _FieldAlgebra(Algebra):
    def __init__(self, desc: FieldDescriptor, bindings: dict | None):
        self.desc = desc
        self.bindings = bindings or {}

    def integer(self, k: int):
        return self.desc.from_int(k)

    def symbol(self, name: str, pos: int):
        desc = self.desc
        if name in self.bindings:
            return self.bindings[name]
        if name == desc.transcendental:
            return desc.gen()
        if name == "i":
            if desc.n % 4:
                raise UnknownSymbolError(name, pos)
            return desc.i()
        if name[0] == "z" and name[1:].isdigit():
            m = int(name[1:])
            if m == 0 or desc.n % m:
                raise UnknownSymbolError(name, pos)
            return desc.zeta(m)
        raise UnknownSymbolError(name, pos)

    def divide(self, a, b, pos: int):
        if b.is_zero():
            raise ZeroDivisionError(f"division by zero at position {pos}")
        return a / b


def fe_parse(text: str, desc: FieldDescriptor, bindings: dict | None = None) -> FieldElement:
    """Parse an expression into a canonical FieldElement.

    ``bindings`` maps extra symbol names (e.g. a parameter ``t``) to
    FieldElements of the same descriptor.
    """
    return evaluate(text, _FieldAlgebra(desc, bindings))


def fe_arith(op: str, x: FieldElement, y: FieldElement | None = None):
    if y is not None and x.desc != y.desc:
        raise DescriptorMismatch(f"{x.desc} vs {y.desc}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if op == "eq":
        return x == y
    raise ValueError(f"unknown operation {op!r}")


def fe_sqrt(x: FieldElement) -> FieldElement | None:
    """Square root inside the same field, leading coefficient sign-normalized."""
    if x.is_zero():
        return x
    if x.desc.transcendental is None:
        r = cyc_sqrt(x.num[0])
        return None if r is None else x.desc.from_cyc(r)
    lead = cyc_sqrt(x.num[-1])
    if lead is None:
        return None
    num = upoly.sqrt_poly(x.num, lead)
    if num is None:
        return None
    den = upoly.sqrt_poly(x.den, Cyc.one(x.desc.n))
    if den is None:
        return None
    return FieldElement(x.desc, num, den, _canonical=True)


def fe_specialize(x: FieldElement, value) -> FieldElement:
    """Substitute the transcendental by a constant value.

    The value may live in a larger cyclotomic field, in which case the
    result lies there too.
    """
    if x.desc.transcendental is None:
        raise ValueError("element has no transcendental to specialize")
    if isinstance(value, FieldElement):
        value = value.constant()
    elif isinstance(value, (int, Fraction)):
        value = Cyc.from_fraction(x.desc.n, value)
    order = value.n
    if order % x.desc.n:
        raise DescriptorMismatch("specialization value lies in an incompatible cyclotomic field")
    base = FieldDescriptor(order)
    num = [embed_cyc(c, order) for c in x.num]
    den = [embed_cyc(c, order) for c in x.den]
    d = upoly.evaluate(den, value)
    if d.is_zero():
        raise ZeroDivisionError(f"denominator vanishes at {value.format()}")
    return base.from_cyc(upoly.evaluate(num, value) / d)
