"""Coefficient domains: exact rationals, prime fields and their extension towers.

Tower elements are plain nested tuples (ints at the prime-field floor), so they
hash and compare structurally; the tower object itself carries the arithmetic.
Every element handed to a tower operation must already live at that tower's top
level; ``lift`` embeds elements from any prefix tower.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import unipoly
from .errors import UsageError


def is_probable_prime(n):
    """Deterministic Miller-Rabin, exact for every n below 3.3 * 10**24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        y = pow(a, d, n)
        if y == 1 or y == n - 1:
            continue
        for _ in range(s - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


class Domain:
    """Interface shared by all coefficient domains; see the subclasses."""

    is_field = False
    tag = "?"

    def is_one(self, a):
        return a == self.one()

    def coeff_text(self, a):
        """(negative, magnitude-text) for the canonical printer."""
        return False, self.to_text(a)

    def lift(self, a, src):
        """Embed an element of the domain ``src`` into this domain."""
        if src == self:
            return a
        raise UsageError(f"cannot lift elements of {src.tag} into {self.tag}")

    def __repr__(self):
        return self.tag


class Field(Domain):
    """A field, with the trivial Euclidean structure every field carries."""

    is_field = True

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # Euclidean interface: nonzero elements are units, so remainders vanish.
    def euclid_divmod(self, a, b):
        return self.div(a, b), self.zero()

    def is_unit(self, a):
        return not self.is_zero(a)

    def canonical_unit(self, a):
        return a

    def gcd(self, a, b):
        if self.is_zero(a) and self.is_zero(b):
            return self.zero()
        return self.one()

    def xgcd(self, a, b):
        if not self.is_zero(a):
            return self.one(), self.inv(a), self.zero()
        if not self.is_zero(b):
            return self.one(), self.zero(), self.inv(b)
        return self.zero(), self.zero(), self.zero()

    def lcm(self, a, b):
        if self.is_zero(a) or self.is_zero(b):
            return self.zero()
        return self.one()

    def exact_div(self, a, b):
        return self.div(a, b)

    def divides(self, d, a):
        return not self.is_zero(d) or self.is_zero(a)


class RationalField(Field):
    """The rationals, represented by fractions.Fraction."""

    tag = "QQ"
    char = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise UsageError("inverse of zero")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def is_one(self, a):
        return a == 1

    def to_text(self, a):
        return str(a)

    def coeff_text(self, a):
        return a < 0, str(abs(a))

    def sort_key(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


QQ = RationalField()


@dataclass(frozen=True)
class TowerLevel:
    """One extension step: a named generator and its monic minimal polynomial."""

    name: str
    minpoly: tuple

    @property
    def degree(self):
        return len(self.minpoly) - 1


class FieldTower(Field):
    """F_p, or an iterated extension F_p(t1)(t2)... built by ``extend``.

    Elements of the base are ints in [0, p); elements of a k-level tower are
    tuples of (k-1)-level elements in ascending degree order with trailing
    zeros trimmed, so representations are canonical.
    """

    __slots__ = ("p", "levels", "_sub", "_order", "_hash")

    def __init__(self, p, levels=()):
        if not is_probable_prime(p):
            raise UsageError(f"characteristic {p} is not prime")
        self.p = p
        self.levels = tuple(levels)
        if self.levels:
            self._sub = FieldTower(p, self.levels[:-1])
            top = self.levels[-1]
            if top.degree < 2:
                raise UsageError("tower levels must have degree >= 2")
            if not self._sub.is_one(top.minpoly[-1]):
                raise UsageError("tower minimal polynomials must be monic")
            if not unipoly.is_irreducible(top.minpoly, self._sub):
                raise UsageError(f"minimal polynomial of {top.name} is reducible")
            self._order = self._sub.order ** top.degree
        else:
            self._sub = None
            self._order = p
        self._hash = hash((p, self.levels))

    @property
    def char(self):
        return self.p

    @property
    def order(self):
        return self._order

    @property
    def tag(self):
        if not self.levels:
            return f"GF({self.p})"
        return f"GF({self.p})({','.join(lv.name for lv in self.levels)})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldTower)
            and self.p == other.p
            and self.levels == other.levels
        )

    def __hash__(self):
        return self._hash

    # -- element arithmetic --------------------------------------------------

    def zero(self):
        return 0 if not self.levels else ()

    def one(self):
        return 1 if not self.levels else (self._sub.one(),)

    def from_int(self, n):
        if not self.levels:
            return n % self.p
        return unipoly.constant(self._sub.from_int(n), self._sub)

    def is_zero(self, a):
        return a == 0 or a == ()

    def add(self, a, b):
        if not self.levels:
            return (a + b) % self.p
        return unipoly.add(a, b, self._sub)

    def sub(self, a, b):
        if not self.levels:
            return (a - b) % self.p
        return unipoly.sub(a, b, self._sub)

    def mul(self, a, b):
        if not self.levels:
            return a * b % self.p
        prod = unipoly.mul(a, b, self._sub)
        return unipoly.rem(prod, self.levels[-1].minpoly, self._sub)

    def neg(self, a):
        if not self.levels:
            return -a % self.p
        return unipoly.neg(a, self._sub)

    def inv(self, a):
        if self.is_zero(a):
            raise UsageError("inverse of zero")
        if not self.levels:
            return pow(a, -1, self.p)
        d, u, _ = unipoly.xgcd(a, self.levels[-1].minpoly, self._sub)
        assert d == unipoly.one(self._sub)
        return unipoly.rem(u, self.levels[-1].minpoly, self._sub)

    # -- tower structure -----------------------------------------------------

    def extend(self, minpoly, name=None):
        """Adjoin a root of a monic irreducible over this tower's top level."""
        minpoly = unipoly.monic(unipoly.trim(minpoly, self), self)
        if name is None:
            name = f"t{len(self.levels) + 1}"
        return FieldTower(self.p, self.levels + (TowerLevel(name, minpoly),))

    def generator(self):
        """Representation of the top level's adjoined generator."""
        if not self.levels:
            raise UsageError("the prime field has no adjoined generator")
        return (self._sub.zero(), self._sub.one())

    def lift(self, a, src):
        if not isinstance(src, FieldTower) or src.p != self.p:
            raise UsageError(f"cannot lift elements of {src.tag} into {self.tag}")
        k = len(src.levels)
        if self.levels[:k] != src.levels:
            raise UsageError(f"{src.tag} is not a prefix of {self.tag}")
        for _ in range(k, len(self.levels)):
            a = () if (a == 0 or a == ()) else (a,)
        return a

    # -- enumeration ---------------------------------------------------------

    def element(self, i):
        """The i-th element in coordinate-lexicographic order (element(0) = 0)."""
        if not 0 <= i < self.order:
            raise UsageError(f"element index {i} out of range for {self.tag}")
        if not self.levels:
            return i
        sub = self._sub
        coords = []
        while i:
            coords.append(sub.element(i % sub.order))
            i //= sub.order
        return unipoly.trim(coords, sub)

    def index(self, a):
        if not self.levels:
            return a
        sub = self._sub
        total = 0
        for c in reversed(a):
            total = total * sub.order + sub.index(c)
        return total

    def elements(self):
        return (self.element(i) for i in range(self.order))

    def sort_key(self, a):
        return self.index(a)

    # -- printing ------------------------------------------------------------

    def _expand(self, a):
        # map (e_t1, ..., e_tk) -> F_p residue
        if not self.levels:
            return {(): a} if a else {}
        out = {}
        for i, c in enumerate(a):
            for exps, r in self._sub._expand(c).items():
                out[exps + (i,)] = r
        return out

    def to_text(self, a):
        terms = self._expand(a)
        if not terms:
            return "0"
        names = [lv.name for lv in self.levels]
        parts = []
        for exps in sorted(terms, key=lambda e: tuple(reversed(e)), reverse=True):
            c = terms[exps]
            factors = []
            for j, e in enumerate(exps):
                if e:
                    factors.append(names[j] if e == 1 else f"{names[j]}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(c)] + factors))
        return " + ".join(parts)

    def coeff_text(self, a):
        text = self.to_text(a)
        if len(self._expand(a)) > 1:
            text = f"({text})"
        return False, text


def GF(p):
    """The prime field F_p as a zero-level tower."""
    return FieldTower(p)


@dataclass(frozen=True)
class FFElement:
    """A tower element bundled with its tower, for API boundaries and tests."""

    tower: FieldTower
    rep: object

    def _peer(self, other):
        if isinstance(other, FFElement):
            if other.tower != self.tower:
                raise UsageError("elements live in different towers")
            return other.rep
        if isinstance(other, int):
            return self.tower.from_int(other)
        return NotImplemented

    def __add__(self, other):
        rep = self._peer(other)
        if rep is NotImplemented:
            return NotImplemented
        return FFElement(self.tower, self.tower.add(self.rep, rep))

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._peer(other)
        if rep is NotImplemented:
            return NotImplemented
        return FFElement(self.tower, self.tower.sub(self.rep, rep))

    def __rsub__(self, other):
        rep = self._peer(other)
        if rep is NotImplemented:
            return NotImplemented
        return FFElement(self.tower, self.tower.sub(rep, self.rep))

    def __mul__(self, other):
        rep = self._peer(other)
        if rep is NotImplemented:
            return NotImplemented
        return FFElement(self.tower, self.tower.mul(self.rep, rep))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rep = self._peer(other)
        if rep is NotImplemented:
            return NotImplemented
        return FFElement(self.tower, self.tower.div(self.rep, rep))

    def __neg__(self):
        return FFElement(self.tower, self.tower.neg(self.rep))

    def __pow__(self, e):
        return FFElement(self.tower, unipoly.elem_pow(self.rep, e, self.tower))

    def is_zero(self):
        return self.tower.is_zero(self.rep)

    def __str__(self):
        return self.tower.to_text(self.rep)


def enumerate_elements(tower):
    """Yield every tower element in canonical order, starting at zero."""
    for rep in tower.elements():
        yield FFElement(tower, rep)


def adjoin_root(tower, g):
    """Return (tower, root) for an irreducible g over the tower's top level.

    Degree-1 input yields its root in the unchanged tower; higher degrees
    extend the tower by one level whose generator is the root.
    """
    g = unipoly.trim(g, tower)
    if unipoly.deg(g) < 1:
        raise UsageError("cannot adjoin a root of a constant")
    g = unipoly.monic(g, tower)
    if unipoly.deg(g) == 1:
        return tower, FFElement(tower, tower.neg(g[0]))
    if not unipoly.is_irreducible(g, tower):
        raise UsageError("cannot adjoin a root of a reducible polynomial")
    bigger = tower.extend(g)
    return bigger, FFElement(bigger, bigger.generator())


def extended_gcd(f, g, F):
    """Extended gcd with a monic result; rejects the (0, 0) input pair."""
    if unipoly.is_zero(unipoly.trim(f, F)) and unipoly.is_zero(unipoly.trim(g, F)):
        raise UsageError("extended gcd of two zero polynomials")
    return unipoly.xgcd(f, g, F)


def factor_univariate(f, F, rng=None, seed=0):
    """Factor a nonconstant univariate over a finite field; deterministic seed."""
    if rng is None:
        rng = random.Random(seed)
    return unipoly.factor(f, F, rng)


@dataclass(frozen=True)
class UnivariatePolyDomain(Domain):
    """K[x1] as a Euclidean coefficient domain; elements are dense tuples."""

    field: Field
    name: str = "x1"

    @property
    def tag(self):
        return f"{self.field.tag}[{self.name}]"

    @property
    def char(self):
        return self.field.char

    def zero(self):
        return ()

    def one(self):
        return (self.field.one(),)

    def from_int(self, n):
        return unipoly.constant(self.field.from_int(n), self.field)

    def add(self, a, b):
        return unipoly.add(a, b, self.field)

    def sub(self, a, b):
        return unipoly.sub(a, b, self.field)

    def mul(self, a, b):
        return unipoly.mul(a, b, self.field)

    def neg(self, a):
        return unipoly.neg(a, self.field)

    def is_zero(self, a):
        return a == ()

    def is_one(self, a):
        return len(a) == 1 and self.field.is_one(a[0])

    def euclid_divmod(self, a, b):
        return unipoly.divmod_(a, b, self.field)

    def is_unit(self, a):
        return len(a) == 1

    def canonical_unit(self, a):
        """The unit u with a/u monic."""
        return unipoly.constant(unipoly.leading(a), self.field)

    def gcd(self, a, b):
        return unipoly.gcd(a, b, self.field)

    def xgcd(self, a, b):
        return unipoly.xgcd(a, b, self.field)

    def lcm(self, a, b):
        return unipoly.lcm(a, b, self.field)

    def exact_div(self, a, b):
        q, r = unipoly.divmod_(a, b, self.field)
        if r:
            raise UsageError("inexact division in a coefficient ring")
        return q

    def divides(self, d, a):
        if self.is_zero(d):
            return self.is_zero(a)
        return unipoly.divides(d, a, self.field)

    def lift(self, a, src):
        if src == self:
            return a
        if isinstance(src, UnivariatePolyDomain):
            return tuple(self.field.lift(c, src.field) for c in a)
        raise UsageError(f"cannot lift elements of {src.tag} into {self.tag}")

    def to_text(self, a):
        if not a:
            return "0"
        parts = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if self.field.is_zero(c):
                continue
            neg_flag, text = self.field.coeff_text(c)
            power = "" if i == 0 else (self.name if i == 1 else f"{self.name}^{i}")
            if power and (self.field.is_one(c) or text == "1"):
                body = power
            elif power:
                body = f"{text}*{power}"
            else:
                body = text
            if not parts:
                parts.append(("-" if neg_flag else "") + body)
            else:
                parts.append(("- " if neg_flag else "+ ") + body)
        return " ".join(parts)

    def coeff_text(self, a):
        return False, f"({self.to_text(a)})"

    def sort_key(self, a):
        return (len(a), tuple(self.field.sort_key(c) for c in a))
