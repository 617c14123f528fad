"""Deciding solvability over finite-field towers, constructively.

``solve`` either certifies that an ideal is trivial (1 as an explicit
combination of the generators) or produces a common zero in a finite
extension tower, eliminating one variable per recursion step:

* the ideal meets K[x1] in a nonconstant polynomial: some root of that
  polynomial keeps the evaluated ideal proper, so substitute it and recurse
  (``find_branch_root``);
* the intersection is zero: compute a strong basis over K[x1], keep x1 away
  from the roots of the leading-coefficient product (``specialization_locus``)
  and substitute; the specialized basis is still a strong basis with no
  constant member, so the smaller ideal stays proper;
* one variable left: any root of the gcd of the generators works.

Every produced point is checked against the original generators before it is
returned.  The same machinery powers ideal intersection through a slack
variable, the coprime splitting of an ideal plus a product, and radical
membership via the usual extra-variable trick.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import unipoly
from .errors import InvariantViolation, UsageError
from .euclidean import (
    specialization_locus,
    specialize_basis,
    strong_buchberger,
    to_coeff_view,
)
from .fields import FFElement, FieldTower, UnivariatePolyDomain, adjoin_root
from .groebner import Ideal, Triviality, eliminate_to_x1, is_trivial, member
from .poly import Polynomial, TermOrder


@dataclass(frozen=True)
class Trivial:
    """The unit ideal, with 1 = sum(certificate[i] * gens[i])."""

    certificate: tuple


@dataclass(frozen=True)
class Point:
    """A common zero, with coordinates in a tower over the input field."""

    tower: FieldTower
    coords: tuple
    verified: bool

    def reps(self):
        return [c.rep for c in self.coords]


@dataclass(frozen=True)
class BranchStep:
    """One variable eliminated: which branch ran and what it chose.

    ``eliminated`` is the monic generator of the ideal's intersection with
    K[x1] at that level (zero on the locus branch), ``chosen`` the value
    substituted for the variable, ``extension`` the enlarged tower when one
    was needed, and ``locus`` the leading-coefficient product avoided on the
    zero-intersection branch.
    """

    var_index: int
    branch: str
    eliminated: Polynomial
    chosen: FFElement
    extension: FieldTower = None
    locus: Polynomial = None


def good_specialization_point(q):
    """Smallest tower element avoiding the roots of q, extending if needed.

    The tower grows by quadratic steps until it has more elements than q has
    roots, so the canonical enumeration is guaranteed to hit a nonroot.
    """
    if not isinstance(q.domain, FieldTower):
        raise UsageError("specialization points live in finite towers")
    if q.is_zero():
        raise UsageError("the zero polynomial vanishes everywhere")
    tower = q.domain
    dense = q.dense_in(0)
    while tower.order <= unipoly.deg(dense):
        tower = tower.extend(unipoly.first_irreducible(2, tower))
    lifted = tuple(tower.lift(c, q.domain) for c in dense)
    for i in range(tower.order):
        a = tower.element(i)
        if not tower.is_zero(unipoly.evaluate(lifted, a, tower)):
            return FFElement(tower, a)
    raise InvariantViolation("a polynomial cannot vanish on a larger field")


def find_branch_root(p, ideal, rng=None):
    """First root of p (canonical factor order) keeping the evaluated ideal proper.

    Returns (root, evaluated ideal); the root's tower is extended beyond the
    ideal's field when the chosen irreducible factor has degree above one.  At
    least one root must work when p generates the intersection of a proper
    ideal with K[x1]; exhausting them all means the inputs did not come from
    that situation, which is an internal error rather than a usage error.
    """
    if rng is None:
        rng = random.Random(0)
    tower = ideal.domain
    if not isinstance(tower, FieldTower):
        raise UsageError("root branching needs a finite coefficient field")
    if p.domain != tower or not p.univariate_in(0):
        raise UsageError("expected a polynomial in x1 over the ideal's field")
    if is_trivial(ideal):
        raise UsageError("the ideal is trivial; there is nothing to branch on")
    dense = p.dense_in(0)
    if unipoly.deg(dense) < 1:
        raise UsageError("a constant has no roots to branch on")
    for g, _mult in unipoly.factor(dense, tower, rng):
        ext, root = adjoin_root(tower, g)
        evaluated = Ideal(
            [h.evaluate_x1(root.rep, ext) for h in ideal.gens],
            domain=ext,
            nvars=ideal.nvars - 1,
        )
        if not is_trivial(evaluated):
            return root, evaluated
    raise InvariantViolation("every root evaluation became trivial")


def _base_point(ideal, rng, trace, depth):
    tower = ideal.domain
    g = ()
    for f in ideal.gens:
        g = unipoly.gcd(g, f.dense_in(0), tower)
    if unipoly.is_zero(g):
        a = FFElement(tower, tower.zero())
        trace.append(BranchStep(depth, "base", Polynomial.zero(tower, 1), a))
        return tower, [a]
    if unipoly.deg(g) == 0:
        raise InvariantViolation("a proper ideal yielded a constant gcd")
    first, _mult = unipoly.factor(g, tower, rng)[0]
    ext, a = adjoin_root(tower, first)
    trace.append(
        BranchStep(
            depth,
            "base",
            Polynomial.from_dense(tower, 1, 0, g),
            a,
            ext if ext != tower else None,
        )
    )
    return ext, [a]


def _point(ideal, rng, trace, depth):
    tower = ideal.domain
    if ideal.nvars == 1:
        return _base_point(ideal, rng, trace, depth)

    p = eliminate_to_x1(ideal)
    if not p.is_zero():
        if p.is_constant():
            raise InvariantViolation("a proper ideal met K[x1] in a constant")
        root, evaluated = find_branch_root(p, ideal, rng)
        trace.append(
            BranchStep(
                depth, "root", p, root, root.tower if root.tower != tower else None
            )
        )
        final, rest = _point(evaluated, rng, trace, depth + 1)
        lifted = FFElement(final, final.lift(root.rep, root.tower))
        return final, [lifted] + rest

    views = [to_coeff_view(g) for g in ideal.gens if not g.is_zero()]
    strong = strong_buchberger(
        views, domain=UnivariatePolyDomain(tower), nvars=ideal.nvars - 1
    )
    q = specialization_locus(strong)
    a = good_specialization_point(q)
    specialized = specialize_basis(strong, a)
    for e in specialized.elements:
        if e.is_constant():
            raise InvariantViolation("a specialized strong basis kept a constant")
    trace.append(
        BranchStep(
            depth,
            "locus",
            Polynomial.zero(tower, 1),
            a,
            a.tower if a.tower != tower else None,
            q,
        )
    )
    evaluated = Ideal(
        specialized.elements, domain=a.tower, nvars=ideal.nvars - 1
    )
    final, rest = _point(evaluated, rng, trace, depth + 1)
    lifted = FFElement(final, final.lift(a.rep, a.tower))
    return final, [lifted] + rest


def solve(ideal, *, seed=0):
    """Trivial-with-certificate or a verified point, plus the branch trace."""
    if not isinstance(ideal.domain, FieldTower):
        raise UsageError("solving needs a finite coefficient field")
    if ideal.nvars < 1:
        raise UsageError("solving needs at least one variable")
    rng = random.Random(seed)
    verdict = is_trivial(ideal)
    if verdict:
        return Trivial(verdict.certificate), []
    trace = []
    tower, coords = _point(ideal, rng, trace, 0)
    reps = [c.rep for c in coords]
    for g in ideal.gens:
        if not tower.is_zero(g.evaluate(reps, tower)):
            raise InvariantViolation("the computed point misses a generator")
    return Point(tower, tuple(coords), True), trace


# -- ideal operations ---------------------------------------------------------


def ideal_intersect(left, right):
    """Intersection via a slack variable: z*I + (1-z)*J, then eliminate z."""
    if left.domain != right.domain or left.nvars != right.nvars:
        raise UsageError("intersection needs ideals in the same ring")
    domain, n = left.domain, left.nvars
    z = Polynomial.variable(domain, n + 1, 0)
    one = Polynomial.constant(domain, n + 1, domain.one())
    gens = [z * g.with_new_var(0) for g in left.gens]
    gens += [(one - z) * g.with_new_var(0) for g in right.gens]
    mixed = Ideal(gens, domain=domain, nvars=n + 1)
    basis = mixed.groebner(TermOrder.lex(n + 1))
    kept = [
        g.drop_var(0)
        for g in basis.elements
        if all(exps[0] == 0 for exps in g.coeffs)
    ]
    return Ideal(kept, domain=domain, nvars=n)


@dataclass(frozen=True)
class CoprimeSplitProof:
    """Exact witnesses for I + <f1*f2> = (I + <f1>) an (I + <f2>).

    ``q1`` and ``q2`` satisfy q1*f1 + q2*f2 = 1.  ``identities`` are pairs of
    equal polynomials in a slack-extended ring expressing each side's extra
    generators through the other side's; ``intersection`` is the computed
    right-hand side and ``equal`` records that both ideals have the same
    reduced basis.
    """

    f1: Polynomial
    f2: Polynomial
    q1: Polynomial
    q2: Polynomial
    identities: tuple
    intersection: Ideal
    equal: bool


def coprime_split_identity(f1, f2, ideal):
    """Split I + <f1*f2> along coprime univariate f1, f2; verify exactly."""
    domain, n = ideal.domain, ideal.nvars
    if f1.domain != domain or f2.domain != domain:
        raise UsageError("the split factors must match the ideal's field")
    if not (f1.univariate_in(0) and f2.univariate_in(0)):
        raise UsageError("the split factors must be univariate in x1")
    d1, d2 = f1.dense_in(0), f2.dense_in(0)
    d, u, v = unipoly.xgcd(d1, d2, domain)
    if unipoly.deg(d) != 0:
        raise UsageError("the split factors must be coprime")
    q1 = Polynomial.from_dense(domain, n, 0, u)
    q2 = Polynomial.from_dense(domain, n, 0, v)

    # slack-extended ring: z tracks which side of the split a witness uses
    z = Polynomial.variable(domain, n + 1, 0)
    one = Polynomial.constant(domain, n + 1, domain.one())
    F1, F2 = f1.with_new_var(0), f2.with_new_var(0)
    Q1, Q2 = q1.with_new_var(0), q2.with_new_var(0)
    prod = F1 * F2
    mixer = Q2 * F2 - z
    identities = (
        (z * F1, prod * Q2 - mixer * F1),
        ((one - z) * F2, prod * Q1 + mixer * F2),
        (prod, (z * F1) * F2 + ((one - z) * F2) * F1),
        (mixer, ((one - z) * F2) * Q2 - (z * F1) * Q1),
    )
    for lhs, rhs in identities:
        if lhs != rhs:
            raise InvariantViolation("a splitting identity failed to balance")

    with_product = Ideal(list(ideal.gens) + [f1 * f2], domain=domain, nvars=n)
    side1 = Ideal(list(ideal.gens) + [f1], domain=domain, nvars=n)
    side2 = Ideal(list(ideal.gens) + [f2], domain=domain, nvars=n)
    both = ideal_intersect(side1, side2)
    equal = all(member(g, both) for g in with_product.gens) and all(
        member(g, with_product) for g in both.gens
    )
    if not equal:
        raise InvariantViolation("the split ideals disagree")
    return CoprimeSplitProof(f1, f2, q1, q2, identities, both, True)


# -- radical membership -------------------------------------------------------


def radical_member(f, ideal):
    """Does some power of f land in the ideal?  Extra-variable triviality test."""
    if f.domain != ideal.domain or f.nvars != ideal.nvars:
        raise UsageError("query polynomial does not match the ideal's ring")
    n = ideal.nvars
    domain = ideal.domain
    y = Polynomial.variable(domain, n + 1, n)
    one = Polynomial.constant(domain, n + 1, domain.one())
    gens = [g.with_new_var(n) for g in ideal.gens]
    gens.append(one - y * f.with_new_var(n))
    verdict = is_trivial(Ideal(gens, domain=domain, nvars=n + 1))
    return Triviality(verdict.trivial, verdict.certificate)


def radical_witness(f, ideal, bound=10):
    """Smallest e <= bound with f**e in the ideal, or None."""
    if bound < 1:
        raise UsageError("the witness bound must be positive")
    power = f
    for e in range(1, bound + 1):
        if member(power, ideal):
            return e
        power = power * f
    return None
