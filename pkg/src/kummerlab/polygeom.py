"""Multivariate polynomials, projective points and projective transformations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from . import linalg
from .exactnum import FieldDescriptor, FieldElement, fe_sqrt
from .exprparse import Algebra, UnknownSymbolError, evaluate

COORDS = ("x0", "x1", "x2", "x3")


def _default_weight(name: str) -> int:
    return 2 if name == "w" else 1


class MultiPoly:
    """Polynomial with FieldElement coefficients over named, weighted variables.

    ``terms`` maps exponent tuples to nonzero coefficients.  Terms are
    ordered graded-lexicographically with the declared variable order.
    """

    __slots__ = ("desc", "variables", "weights", "terms", "_hash")

    def __init__(self, desc: FieldDescriptor, variables=COORDS, terms=None, weights=None):
        self.desc = desc
        self.variables = tuple(variables)
        self.weights = tuple(weights) if weights is not None else tuple(_default_weight(v) for v in self.variables)
        self.terms = {e: c for e, c in (terms or {}).items() if not c.is_zero()}
        self._hash = None

    # construction
    def _new(self, terms) -> MultiPoly:
        p = MultiPoly.__new__(MultiPoly)
        p.desc, p.variables, p.weights, p.terms, p._hash = self.desc, self.variables, self.weights, terms, None
        return p

    @classmethod
    def constant(cls, c: FieldElement, variables=COORDS) -> MultiPoly:
        return cls(c.desc, variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, desc: FieldDescriptor, name: str, variables=COORDS) -> MultiPoly:
        k = list(variables).index(name)
        exps = tuple(1 if j == k else 0 for j in range(len(variables)))
        return cls(desc, variables, {exps: desc.one()})

    @classmethod
    def linear(cls, coeffs, variables=COORDS) -> MultiPoly:
        desc = coeffs[0].desc
        terms = {}
        for k, c in enumerate(coeffs):
            terms[tuple(1 if j == k else 0 for j in range(len(variables)))] = c
        return cls(desc, variables, terms)

    @classmethod
    def parse(cls, text: str, desc: FieldDescriptor, variables=COORDS, bindings=None) -> MultiPoly:
        return evaluate(text, _PolyAlgebra(desc, tuple(variables), bindings))

    def zero(self) -> MultiPoly:
        return self._new({})

    # predicates and structure
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def weighted_degree(self) -> int:
        return max((sum(a * w for a, w in zip(e, self.weights)) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(a * w for a, w in zip(e, self.weights)) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def leading_term(self):
        return self.sorted_terms()[0]

    def coefficient(self, exps) -> FieldElement:
        return self.terms.get(tuple(exps), self.desc.zero())

    def variables_present(self) -> list[int]:
        return [k for k in range(len(self.variables)) if any(e[k] for e in self.terms)]

    # arithmetic
    def _check(self, other: MultiPoly):
        if self.variables != other.variables or self.desc != other.desc:
            raise ValueError("polynomials live in different rings")

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            other = self.desc.from_int(other)
        if isinstance(other, FieldElement):
            return self._new({(0,) * len(self.variables): other} if not other.is_zero() else {})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            if e in terms:
                s = terms[e] + c
                if s.is_zero():
                    del terms[e]
                else:
                    terms[e] = s
            else:
                terms[e] = c
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: FieldElement) -> MultiPoly:
        if c.is_zero():
            return self._new({})
        return self._new({e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            if not isinstance(other, FieldElement):
                other = self.desc.from_int(other)
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                if e in terms:
                    terms[e] = terms[e] + v
                else:
                    terms[e] = v
        return self._new({e: c for e, c in terms.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self._lift(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            c = self.desc.from_int(c)
        return self.scale(c.inverse())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, FieldElement)):
            other = self._lift(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.desc == other.desc and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.desc, self.variables, frozenset(self.terms.items())))
        return self._hash

    # evaluation and substitution
    def evaluate(self, values) -> FieldElement:
        values = list(values)
        powers = [[self.desc.one()] for _ in values]
        acc = self.desc.zero()
        for e, c in self.terms.items():
            term = c
            for k, a in enumerate(e):
                if a:
                    pk = powers[k]
                    while len(pk) <= a:
                        pk.append(pk[-1] * values[k])
                    term = term * pk[a]
            acc = acc + term
        return acc

    def substitute(self, images: dict, variables=None) -> MultiPoly:
        """Replace variable k by the polynomial images[k] (others kept).

        The result lives over ``variables`` (default: those of the images).
        """
        variables = tuple(variables) if variables is not None else next(iter(images.values())).variables
        full = {}
        for k, name in enumerate(self.variables):
            if k in images:
                full[k] = images[k]
            else:
                full[k] = MultiPoly.var(self.desc, name, variables)
        powers = {k: [MultiPoly.constant(self.desc.one(), variables)] for k in full}
        acc = MultiPoly(self.desc, variables)
        for e, c in self.terms.items():
            term = MultiPoly.constant(c, variables)
            for k, a in enumerate(e):
                if a:
                    pk = powers[k]
                    while len(pk) <= a:
                        pk.append(pk[-1] * full[k])
                    term = term * pk[a]
            acc = acc + term
        return acc

    def diff(self, k: int) -> MultiPoly:
        terms = {}
        for e, c in self.terms.items():
            if e[k]:
                e2 = e[:k] + (e[k] - 1,) + e[k + 1:]
                terms[e2] = c * e[k]
        return self._new(terms)

    def embed(self, desc: FieldDescriptor) -> MultiPoly:
        return MultiPoly(desc, self.variables, {e: c.embed(desc) for e, c in self.terms.items()}, self.weights)

    def map_coefficients(self, fn, desc: FieldDescriptor) -> MultiPoly:
        return MultiPoly(desc, self.variables, {e: fn(c) for e, c in self.terms.items()}, self.weights)

    def proportionality(self, other: MultiPoly) -> FieldElement | None:
        """The scalar c with other = c*self, or None."""
        self._check(other)
        if set(self.terms) != set(other.terms) or not self.terms:
            return None
        e0 = next(iter(self.terms))
        c = other.terms[e0] / self.terms[e0]
        for e, v in self.terms.items():
            if v * c != other.terms[e]:
                return None
        return c

    def normalized(self) -> MultiPoly:
        """Scale so that the grlex-leading coefficient is 1."""
        if not self.terms:
            return self
        return self.scale(self.leading_term()[1].inverse())

    def format(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for e, c in self.sorted_terms():
            mono = "*".join(v if a == 1 else f"{v}^{a}" for v, a in zip(self.variables, e) if a)
            ctext = c.format()
            simple = c.is_rational() or not any(ch in ctext[1:] for ch in "+-/")
            if not mono:
                text = ctext if simple else f"({ctext})"
            elif ctext == "1":
                text = mono
            elif ctext == "-1":
                text = "-" + mono
            elif simple:
                text = f"{ctext}*{mono}"
            else:
                text = f"({ctext})*{mono}"
            if out and not text.startswith("-"):
                out += "+"
            out += text
        return out

    __str__ = format

    def __repr__(self) -> str:
        return f"MultiPoly({self.format()!r})"


class _PolyAlgebra(Algebra):
    def __init__(self, desc: FieldDescriptor, variables: tuple, bindings):
        from .exactnum import _FieldAlgebra

        self.desc = desc
        self.variables = variables
        self.scalars = _FieldAlgebra(desc, bindings)

    def integer(self, k: int):
        return MultiPoly.constant(self.desc.from_int(k), self.variables)

    def symbol(self, name: str, pos: int):
        if name in self.variables:
            return MultiPoly.var(self.desc, name, self.variables)
        try:
            return MultiPoly.constant(self.scalars.symbol(name, pos), self.variables)
        except UnknownSymbolError:
            raise

    def divide(self, a, b, pos: int):
        if b.degree() > 0:
            raise ValueError(f"division by a non-constant polynomial at position {pos}")
        if b.is_zero():
            raise ZeroDivisionError(f"division by zero at position {pos}")
        return a.scale(b.coefficient((0,) * len(self.variables)).inverse())


def parse_poly(text: str, desc: FieldDescriptor, variables=COORDS, bindings=None) -> MultiPoly:
    return MultiPoly.parse(text, desc, variables, bindings)


# projective points ---------------------------------------------------------


class ProjPoint:
    """Point of projective space, scaled so the first nonzero coordinate is 1."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords, _canonical: bool = False):
        coords = tuple(coords)
        if not _canonical:
            lead = next((c for c in coords if not c.is_zero()), None)
            if lead is None:
                raise ValueError("the zero vector is not a projective point")
            if not lead.is_one():
                inv = lead.inverse()
                coords = tuple(c * inv for c in coords)
        self.coords = coords
        self._hash = None

    @classmethod
    def parse(cls, texts, desc: FieldDescriptor, bindings=None) -> ProjPoint:
        return cls([desc.parse(t, bindings) for t in texts])

    @property
    def desc(self) -> FieldDescriptor:
        return self.coords[0].desc

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def embed(self, desc: FieldDescriptor) -> ProjPoint:
        return ProjPoint([c.embed(desc) for c in self.coords], _canonical=True)

    def format(self) -> str:
        return "[" + ":".join(c.format() for c in self.coords) + "]"

    __str__ = format

    def __repr__(self) -> str:
        return f"ProjPoint({self.format()})"


# projective transformations ------------------------------------------------


class ProjTransform:
    """Invertible square matrix modulo scalars, normalized by its first nonzero entry."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows, _canonical: bool = False):
        rows = tuple(tuple(r) for r in rows)
        if not _canonical:
            lead = next((c for r in rows for c in r if not c.is_zero()), None)
            if lead is None:
                raise ValueError("zero matrix")
            if not lead.is_one():
                inv = lead.inverse()
                rows = tuple(tuple(c * inv for c in r) for r in rows)
        self.rows = rows
        self._hash = None

    @classmethod
    def parse(cls, rows, desc: FieldDescriptor, bindings=None) -> ProjTransform:
        g = cls([[desc.parse(str(x), bindings) for x in r] for r in rows])
        if g.determinant().is_zero():
            raise ValueError("singular matrix")
        return g

    @classmethod
    def identity(cls, desc: FieldDescriptor, size: int = 4) -> ProjTransform:
        return cls([[desc.one() if i == j else desc.zero() for j in range(size)] for i in range(size)], _canonical=True)

    @property
    def desc(self) -> FieldDescriptor:
        return self.rows[0][0].desc

    @property
    def size(self) -> int:
        return len(self.rows)

    def __mul__(self, other: ProjTransform) -> ProjTransform:
        return ProjTransform(linalg.matmul(self.rows, other.rows))

    def inverse(self) -> ProjTransform:
        return ProjTransform(linalg.inverse(self.rows))

    def __pow__(self, k: int) -> ProjTransform:
        if k < 0:
            return self.inverse() ** (-k)
        result = ProjTransform.identity(self.desc, self.size)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_identity(self) -> bool:
        return self == ProjTransform.identity(self.desc, self.size)

    def apply(self, p: ProjPoint) -> ProjPoint:
        return ProjPoint(linalg.matvec(self.rows, p.coords))

    def determinant(self) -> FieldElement:
        return linalg.det(self.rows)

    def square_scalar(self) -> FieldElement | None:
        """lambda with M^2 = lambda*Id for the stored matrix, or None."""
        sq = linalg.matmul(self.rows, self.rows)
        lam = sq[0][0]
        for i, r in enumerate(sq):
            for j, c in enumerate(r):
                if c != (lam if i == j else self.desc.zero()):
                    return None
        return lam

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjTransform) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def embed(self, desc: FieldDescriptor) -> ProjTransform:
        return ProjTransform([[c.embed(desc) for c in r] for r in self.rows], _canonical=True)

    def format(self) -> str:
        return "[" + "; ".join(" ".join(c.format() for c in r) for r in self.rows) + "]"

    __str__ = format

    def __repr__(self) -> str:
        return f"ProjTransform({self.format()})"


# operations -----------------------------------------------------------------


def poly_apply_transform(F: MultiPoly, g: ProjTransform | list) -> MultiPoly:
    """F(g x): substitute x_i -> sum_j g_ij x_j (a right action)."""
    rows = g.rows if isinstance(g, ProjTransform) else g
    if len(rows) != len(F.variables) or any(w != 1 for w in F.weights):
        raise ValueError("variable count mismatch between polynomial and transformation")
    images = {k: MultiPoly.linear(list(r), F.variables) for k, r in enumerate(rows)}
    return F.substitute(images, F.variables)


@dataclass(frozen=True)
class Elimination:
    """Record of eliminating one variable through a linear relation h = 0."""

    index: int
    name: str
    expression: MultiPoly  # the eliminated variable as a linear form in the others

    def lift(self, ternary: MultiPoly) -> MultiPoly:
        """A polynomial in all variables congruent to the input modulo (h)."""
        return ternary

    def restrict(self, F: MultiPoly) -> MultiPoly:
        return F.substitute({self.index: self.expression}, F.variables)

    def plane_point(self, p) -> list:
        """Plane coordinates of a point of the plane (the eliminated one dropped)."""
        return [c for k, c in enumerate(p) if k != self.index]


def elimination_for(h: MultiPoly) -> Elimination:
    if h.is_zero() or h.degree() != 1 or not h.is_homogeneous():
        raise ValueError("expected a nonzero linear form")
    n = len(h.variables)
    coeffs = [h.coefficient(tuple(1 if j == k else 0 for j in range(n))) for k in range(n)]
    best = max(c.height() for c in coeffs if not c.is_zero())
    k = min(
        (h.variables[j], j) for j, c in enumerate(coeffs) if not c.is_zero() and c.height() == best
    )[1]
    inv = coeffs[k].inverse()
    expr = MultiPoly.linear([-(c * inv) if j != k else h.desc.zero() for j, c in enumerate(coeffs)], h.variables)
    return Elimination(k, h.variables[k], expr)


def restrict_to_plane(F: MultiPoly, h: MultiPoly) -> tuple[MultiPoly, Elimination]:
    rec = elimination_for(h)
    return rec.restrict(F), rec


@dataclass(frozen=True)
class SqrtResult:
    status: str  # "ok", "not_square", "extension_required"
    root: MultiPoly | None = None
    scalar: FieldElement | None = None  # the scalar whose root is missing

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _sqrt_with_lead(q: MultiPoly, lead_root: FieldElement) -> MultiPoly | None:
    """Square root of q with given leading coefficient by grlex term matching."""
    items = q.sorted_terms()
    e0 = items[0][0]
    if any(a % 2 for a in e0):
        return None
    half = tuple(a // 2 for a in e0)
    g = q._new({half: lead_root})
    two_lead_inv = (lead_root + lead_root).inverse()
    rem = q - g * g
    m = sum(half)
    nvars = len(q.variables)
    max_terms = 1
    for k in range(1, nvars):
        max_terms = max_terms * (m + k) // k
    key = lambda e: (sum(e), e)  # noqa: E731
    while not rem.is_zero():
        e, c = max(rem.terms.items(), key=lambda kv: key(kv[0]))
        # next term t satisfies LT(rem) = 2 * LT(g) * t
        t = tuple(a - b for a, b in zip(e, half))
        if any(a < 0 for a in t) or key(t) >= key(half) or len(g.terms) >= max_terms:
            return None
        tp = q._new({t: c * two_lead_inv})
        rem = rem - tp * (g + g + tp)
        g = g + tp
    return g


def poly_sqrt(q: MultiPoly) -> SqrtResult:
    """Square root of a homogeneous polynomial over the coefficient field."""
    if q.is_zero():
        return SqrtResult("ok", q)
    if not q.is_homogeneous() or q.degree() % 2:
        return SqrtResult("not_square")
    lead = q.leading_term()[1]
    r = fe_sqrt(lead)
    if r is not None:
        g = _sqrt_with_lead(q, r)
        return SqrtResult("ok", g) if g is not None else SqrtResult("not_square")
    g = _sqrt_with_lead(q.scale(lead.inverse()), q.desc.one())
    if g is not None:
        return SqrtResult("extension_required", g, lead)
    return SqrtResult("not_square")


@dataclass(frozen=True)
class JacobianData:
    gradient: tuple
    hessian_rank: int

    @property
    def gradient_vanishes(self) -> bool:
        return all(c.is_zero() for c in self.gradient)


def jacobian_at(F: MultiPoly, p: ProjPoint) -> JacobianData:
    """Gradient and Hessian rank at p.

    For a homogeneous F with vanishing gradient at p, Euler's identity puts p
    in the kernel of the 4x4 Hessian, so its rank equals the rank of the
    Hessian of the dehomogenized polynomial in the affine chart of p.
    """
    n = len(F.variables)
    grads = [F.diff(k) for k in range(n)]
    gradient = tuple(g.evaluate(p.coords) for g in grads)
    hess = [[grads[i].diff(j).evaluate(p.coords) for j in range(n)] for i in range(n)]
    return JacobianData(gradient, linalg.rank(hess))


def monomials(nvars: int, degree: int) -> list[tuple]:
    """Exponent vectors of the given degree, in descending grlex order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    return sorted(set(out), reverse=True)


def line_through(p: ProjPoint, q: ProjPoint, F: MultiPoly, variables=("u", "v")) -> MultiPoly:
    """The binary form F(u*p + v*q)."""
    desc = F.desc
    u = MultiPoly.var(desc, variables[0], variables)
    v = MultiPoly.var(desc, variables[1], variables)
    images = {k: u * p[k] + v * q[k] for k in range(len(p))}
    return F.substitute(images, variables)
