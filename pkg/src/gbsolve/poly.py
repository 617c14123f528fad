"""Sparse multivariate polynomials and the term orders that rank their terms.

A polynomial is a map from exponent tuples to nonzero coefficients, tagged
with its coefficient domain and variable count.  Term orders are total orders
on exponent tuples; both plain and weighted lexicographic orders support an
arbitrary variable priority so the same machinery serves elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError, ZeroPolynomialError


def exp_add(s, t):
    return tuple(a + b for a, b in zip(s, t))


def exp_sub(s, t):
    return tuple(a - b for a, b in zip(s, t))


def exp_lcm(s, t):
    return tuple(max(a, b) for a, b in zip(s, t))


def exp_divides(s, t):
    """True when the term with exponents s divides the term with exponents t."""
    return all(a <= b for a, b in zip(s, t))


@dataclass(frozen=True)
class TermOrder:
    """Lexicographic or weighted-lexicographic order with a variable priority.

    ``priority`` lists variable indices from most to least significant; the
    default ranks x1 above x2 above later variables.  Weighted orders compare
    the weighted total degree first and fall back to the priority lex order.
    """

    priority: tuple
    weights: tuple = None

    def __post_init__(self):
        n = len(self.priority)
        if sorted(self.priority) != list(range(n)):
            raise UsageError("priority must be a permutation of the variables")
        if self.weights is not None:
            if len(self.weights) != n:
                raise UsageError("one weight per variable is required")
            if any(w <= 0 or w != int(w) for w in self.weights):
                raise UsageError("weights must be positive integers")

    @staticmethod
    def lex(nvars, priority=None):
        if priority is None:
            priority = tuple(range(nvars))
        return TermOrder(tuple(priority))

    @staticmethod
    def weighted(weights, priority=None):
        if priority is None:
            priority = tuple(range(len(weights)))
        return TermOrder(tuple(priority), tuple(int(w) for w in weights))

    @property
    def nvars(self):
        return len(self.priority)

    def key(self, exps):
        """Sort key; larger key means larger term."""
        lexkey = tuple(exps[i] for i in self.priority)
        if self.weights is None:
            return lexkey
        return (sum(w * e for w, e in zip(self.weights, exps)),) + lexkey

    def compare(self, s, t):
        """-1, 0 or 1 as s is below, equal to or above t."""
        if len(s) != self.nvars or len(t) != self.nvars:
            raise UsageError("exponent tuple does not match the order's variables")
        ks, kt = self.key(s), self.key(t)
        return (ks > kt) - (ks < kt)


@dataclass(frozen=True)
class Monomial:
    coefficient: object
    exponents: tuple


class Polynomial:
    """Immutable sparse polynomial over an explicit coefficient domain."""

    __slots__ = ("domain", "nvars", "coeffs", "_hash")

    def __init__(self, domain, nvars, coeffs):
        clean = {}
        for exps, c in coeffs.items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise UsageError("exponent tuple does not match the variable count")
            if any(e < 0 for e in exps):
                raise UsageError("negative exponent")
            if not domain.is_zero(c):
                clean[exps] = c
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, domain, nvars):
        return cls(domain, nvars, {})

    @classmethod
    def constant(cls, domain, nvars, c):
        return cls(domain, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, domain, nvars, i):
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(domain, nvars, {exps: domain.one()})

    @classmethod
    def term(cls, domain, nvars, c, exps):
        return cls(domain, nvars, {tuple(exps): c})

    @classmethod
    def from_dense(cls, domain, nvars, var, coeffs):
        """Build from an ascending univariate coefficient tuple in variable var."""
        terms = {}
        for e, c in enumerate(coeffs):
            exps = tuple(e if j == var else 0 for j in range(nvars))
            terms[exps] = c
        return cls(domain, nvars, terms)

    # -- structure ------------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        if len(self.coeffs) != 1:
            return False
        ((exps, c),) = self.coeffs.items()
        return not any(exps) and self.domain.is_one(c)

    def is_constant(self):
        return all(not any(exps) for exps in self.coeffs)

    def constant_value(self):
        if self.is_zero():
            return self.domain.zero()
        if not self.is_constant():
            raise UsageError("polynomial is not constant")
        return self.coeffs[(0,) * self.nvars]

    def total_degree(self):
        if not self.coeffs:
            return -1
        return max(sum(exps) for exps in self.coeffs)

    def univariate_in(self, var):
        """True when no variable other than var appears (constants qualify)."""
        return all(
            all(e == 0 for j, e in enumerate(exps) if j != var)
            for exps in self.coeffs
        )

    def dense_in(self, var):
        """Ascending coefficient tuple of a polynomial univariate in var."""
        if not self.univariate_in(var):
            raise UsageError("polynomial involves more than one variable")
        if not self.coeffs:
            return ()
        top = max(exps[var] for exps in self.coeffs)
        out = [self.domain.zero()] * (top + 1)
        for exps, c in self.coeffs.items():
            out[exps[var]] = c
        return tuple(out)

    def leading(self, order):
        """Leading monomial under the given order; rejects the zero polynomial."""
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        exps = max(self.coeffs, key=order.key)
        return Monomial(self.coeffs[exps], exps)

    def sorted_terms(self, order):
        """Terms in descending order, the canonical iteration for printing."""
        return [
            (exps, self.coeffs[exps])
            for exps in sorted(self.coeffs, key=order.key, reverse=True)
        ]

    # -- arithmetic -----------------------------------------------------------

    def _check_peer(self, other):
        if not isinstance(other, Polynomial):
            raise UsageError(f"expected a Polynomial, got {type(other).__name__}")
        if other.domain != self.domain:
            raise UsageError(f"domain mismatch: {self.domain.tag} vs {other.domain.tag}")
        if other.nvars != self.nvars:
            raise UsageError("variable count mismatch")

    def __add__(self, other):
        self._check_peer(other)
        dom = self.domain
        out = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            if exps in out:
                out[exps] = dom.add(out[exps], c)
            else:
                out[exps] = c
        return Polynomial(dom, self.nvars, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        dom = self.domain
        return Polynomial(
            dom, self.nvars, {e: dom.neg(c) for e, c in self.coeffs.items()}
        )

    def __mul__(self, other):
        self._check_peer(other)
        dom = self.domain
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                exps = exp_add(e1, e2)
                prod = dom.mul(c1, c2)
                if exps in out:
                    out[exps] = dom.add(out[exps], prod)
                else:
                    out[exps] = prod
        return Polynomial(dom, self.nvars, out)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise UsageError("polynomial powers take a nonnegative integer")
        result = Polynomial.constant(self.domain, self.nvars, self.domain.one())
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scaled(self, c):
        """Multiply every coefficient by the domain element c."""
        dom = self.domain
        return Polynomial(
            dom, self.nvars, {e: dom.mul(v, c) for e, v in self.coeffs.items()}
        )

    def mul_monomial(self, c, exps):
        """Multiply by the monomial c * x**exps."""
        dom = self.domain
        return Polynomial(
            dom,
            self.nvars,
            {exp_add(e, exps): dom.mul(v, c) for e, v in self.coeffs.items()},
        )

    def map_coefficients(self, fn, domain):
        """Apply fn to every coefficient, landing in the given domain."""
        return Polynomial(domain, self.nvars, {e: fn(c) for e, c in self.coeffs.items()})

    # -- variable plumbing ------------------------------------------------------

    def with_new_var(self, index):
        """Insert a fresh (unused) variable slot at the given index."""
        out = {}
        for exps, c in self.coeffs.items():
            out[exps[:index] + (0,) + exps[index:]] = c
        return Polynomial(self.domain, self.nvars + 1, out)

    def drop_var(self, index):
        """Remove a variable slot that no term uses."""
        out = {}
        for exps, c in self.coeffs.items():
            if exps[index] != 0:
                raise UsageError("cannot drop a variable that appears")
            out[exps[:index] + exps[index + 1 :]] = c
        return Polynomial(self.domain, self.nvars - 1, out)

    # -- evaluation ---------------------------------------------------------

    def evaluate_x1(self, a, dom=None):
        """Substitute a for the first variable, landing over dom (>= self.domain)."""
        if dom is None:
            dom = self.domain
        out = {}
        powers = {0: dom.one()}

        def power(e):
            if e not in powers:
                powers[e] = dom.mul(power(e - 1), a)
            return powers[e]

        for exps, c in self.coeffs.items():
            rest = exps[1:]
            val = dom.mul(dom.lift(c, self.domain), power(exps[0]))
            if rest in out:
                out[rest] = dom.add(out[rest], val)
            else:
                out[rest] = val
        return Polynomial(dom, self.nvars - 1, out)

    def evaluate(self, point, dom=None):
        """Evaluate at a full point (a sequence of dom elements)."""
        if dom is None:
            dom = self.domain
        if len(point) != self.nvars:
            raise UsageError("point length does not match the variable count")
        total = dom.zero()
        for exps, c in self.coeffs.items():
            val = dom.lift(c, self.domain)
            for a, e in zip(point, exps):
                if e:
                    val = dom.mul(val, unipow(a, e, dom))
            total = dom.add(total, val)
        return total

    # -- comparison and display -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.domain == other.domain
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        if self._hash is None:
            items = frozenset(self.coeffs.items())
            object.__setattr__(self, "_hash", hash((self.domain, self.nvars, items)))
        return self._hash

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Polynomial({self.domain.tag}, {to_text(self)!r})"


def unipow(a, e, dom):
    """Domain element power (square and multiply)."""
    result = dom.one()
    while e > 0:
        if e & 1:
            result = dom.mul(result, a)
        a = dom.mul(a, a)
        e >>= 1
    return result


def default_names(nvars):
    return tuple(f"x{i + 1}" for i in range(nvars))


def to_text(p, names=None, order=None):
    """Canonical text form: terms descending, ^ for powers, * for products."""
    if names is None:
        names = default_names(p.nvars)
    if order is None:
        order = TermOrder.lex(p.nvars)
    if p.is_zero():
        return "0"
    dom = p.domain
    parts = []
    for exps, c in p.sorted_terms(order):
        negative, text = dom.coeff_text(c)
        factors = []
        for i, e in enumerate(exps):
            if e:
                factors.append(names[i] if e == 1 else f"{names[i]}^{e}")
        if not factors:
            body = text
        elif dom.is_one(c) or text == "1":
            body = "*".join(factors)
        else:
            body = "*".join([text] + factors)
        if not parts:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return " ".join(parts)
