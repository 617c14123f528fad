"""Strong Groebner bases over the Euclidean coefficient ring K[x1].

Polynomials here live in K[x1][x2..xn]: ordinary sparse polynomials whose
coefficient domain is UnivariatePolyDomain(K).  Reduction is strong: a
monomial c*t is rewritten by g only when the term of lm(g) divides t and the
Euclidean quotient of c by the coefficient of lm(g) is nonzero, so remainder
coefficients end up reduced modulo every applicable leading coefficient.
Completion processes both S-polynomials (cancelling leading terms through the
coefficient lcm) and G-polynomials (combining leading coefficients into their
gcd); that pairing is what makes the resulting leading-monomial set strong.
"""

from __future__ import annotations

from . import unipoly
from .errors import SpecializationError, UsageError
from .fields import FFElement, UnivariatePolyDomain
from .groebner import StrongBasis
from .poly import Polynomial, TermOrder, exp_add, exp_divides, exp_lcm, exp_sub


def to_coeff_view(p, name="x1"):
    """Regroup a field polynomial so x1 moves into the coefficients."""
    if not p.domain.is_field:
        raise UsageError("the coefficient view starts from field coefficients")
    if p.nvars < 1:
        raise UsageError("no variable available to absorb")
    dom = UnivariatePolyDomain(p.domain, name)
    groups = {}
    for exps, c in p.coeffs.items():
        groups.setdefault(exps[1:], {})[exps[0]] = c
    out = {}
    for rest, dense in groups.items():
        cs = [p.domain.zero()] * (max(dense) + 1)
        for e, c in dense.items():
            cs[e] = c
        out[rest] = tuple(cs)
    return Polynomial(dom, p.nvars - 1, out)


def from_coeff_view(p):
    """Inverse of to_coeff_view; x1 returns as the first variable."""
    dom = p.domain
    if not isinstance(dom, UnivariatePolyDomain):
        raise UsageError("expected a polynomial over K[x1]")
    field = dom.field
    out = {}
    for rest, cs in p.coeffs.items():
        for e, c in enumerate(cs):
            if not field.is_zero(c):
                out[(e,) + rest] = c
    return Polynomial(field, p.nvars + 1, out)


def normalize_leading_unit(f, order):
    """Scale by a unit of K[x1] so the leading coefficient is monic."""
    m = f.leading(order)
    unit = f.domain.canonical_unit(m.coefficient)
    field = f.domain.field
    return f.scaled(unipoly.constant(field.inv(unipoly.leading(unit)), field))


def _leads(basis, order):
    out = []
    for g in basis:
        if g.is_zero():
            raise UsageError("reduction by a basis containing zero")
        m = g.leading(order)
        out.append((m.exponents, m.coefficient))
    return out


def _strong_divide(f, basis, order, want_cofs):
    dom = f.domain
    lead = _leads(basis, order)
    work = dict(f.coeffs)
    remainder = {}
    cofs = [dict() for _ in basis] if want_cofs else None
    while work:
        t = max(work, key=order.key)
        c = work.pop(t)
        while not dom.is_zero(c):
            for idx, (tg, cg) in enumerate(lead):
                if exp_divides(tg, t):
                    q, r = dom.euclid_divmod(c, cg)
                    if not dom.is_zero(q):
                        break
            else:
                break
            m = exp_sub(t, tg)
            for s, cs in basis[idx].coeffs.items():
                if s == tg:
                    continue
                key = exp_add(s, m)
                nv = dom.sub(work.get(key, dom.zero()), dom.mul(q, cs))
                if dom.is_zero(nv):
                    work.pop(key, None)
                else:
                    work[key] = nv
            if want_cofs:
                cofs[idx][m] = dom.add(cofs[idx].get(m, dom.zero()), q)
            c = r
        if not dom.is_zero(c):
            remainder[t] = c
    rem = Polynomial(dom, f.nvars, remainder)
    if not want_cofs:
        return rem, None
    return rem, tuple(Polynomial(dom, f.nvars, c) for c in cofs)


def strong_reduce(f, basis, order=None):
    """Strong remainder and cofactors with f = sum(cof * g) + remainder."""
    if order is None:
        order = TermOrder.lex(f.nvars)
    return _strong_divide(f, list(basis), order, True)


def strong_normal_form(f, basis, order=None):
    if order is None:
        order = TermOrder.lex(f.nvars)
    return _strong_divide(f, list(basis), order, False)[0]


def spoly(f, g, order):
    """S-polynomial through the coefficient lcm; leading monomials cancel."""
    fm = f.leading(order)
    gm = g.leading(order)
    dom = f.domain
    t = exp_lcm(fm.exponents, gm.exponents)
    l = dom.lcm(fm.coefficient, gm.coefficient)
    return f.mul_monomial(
        dom.exact_div(l, fm.coefficient), exp_sub(t, fm.exponents)
    ) - g.mul_monomial(dom.exact_div(l, gm.coefficient), exp_sub(t, gm.exponents))


def gpoly(f, g, order):
    """G-polynomial: leading coefficients combine into their gcd."""
    fm = f.leading(order)
    gm = g.leading(order)
    dom = f.domain
    t = exp_lcm(fm.exponents, gm.exponents)
    _, u, v = dom.xgcd(fm.coefficient, gm.coefficient)
    return f.mul_monomial(u, exp_sub(t, fm.exponents)) + g.mul_monomial(
        v, exp_sub(t, gm.exponents)
    )


def _strong_divides(dom, lead_a, lead_b):
    (ta, ca), (tb, cb) = lead_a, lead_b
    return exp_divides(ta, tb) and dom.divides(ca, cb)


def strong_buchberger(gens, order=None, *, domain=None, nvars=None):
    """Strong basis over K[x1]; S- and G-pairs are all processed, no skips."""
    gens = list(gens)
    for g in gens:
        if domain is None:
            domain, nvars = g.domain, g.nvars
        elif g.domain != domain or g.nvars != nvars:
            raise UsageError("generators disagree on domain or variables")
    if domain is None:
        raise UsageError("an empty input needs an explicit domain and nvars")
    if not isinstance(domain, UnivariatePolyDomain):
        raise UsageError("strong_buchberger expects K[x1] coefficients")
    if order is None:
        order = TermOrder.lex(nvars)
    if order.nvars != nvars:
        raise UsageError("order does not match the variable count")

    basis = []
    lts = []
    pending = set()

    def push(f):
        f = normalize_leading_unit(f, order)
        j = len(basis)
        for i in range(j):
            pending.add((0, i, j))
            pending.add((1, i, j))
        basis.append(f)
        lts.append(f.leading(order).exponents)

    for g in gens:
        if not g.is_zero():
            push(g)

    def pair_key(entry):
        kind, i, j = entry
        return (order.key(exp_lcm(lts[i], lts[j])), kind, i, j)

    while pending:
        kind, i, j = min(pending, key=pair_key)
        pending.discard((kind, i, j))
        candidate = (spoly if kind == 0 else gpoly)(basis[i], basis[j], order)
        if candidate.is_zero():
            continue
        r = _strong_divide(candidate, basis, order, False)[0]
        if not r.is_zero():
            push(r)

    # conservative minimalization: drop g only when another leading monomial
    # strongly divides lm(g) and g still reduces to zero without it
    elems = list(basis)
    changed = True
    while changed:
        changed = False
        ranked = sorted(
            range(len(elems)),
            key=lambda k: _canonical_key(elems[k], order),
            reverse=True,
        )
        for k in ranked:
            g = elems[k]
            rest = elems[:k] + elems[k + 1 :]
            gl = (g.leading(order).exponents, g.leading(order).coefficient)
            covered = any(
                _strong_divides(domain, (h.leading(order).exponents, h.leading(order).coefficient), gl)
                for h in rest
            )
            if covered and _strong_divide(g, rest, order, False)[0].is_zero():
                elems.pop(k)
                changed = True
                break

    # inter-reduce, but only against unit-coefficient divisors so the
    # strong-basis property survives
    changed = True
    while changed:
        changed = False
        for k in range(len(elems)):
            reducers = [
                h
                for idx, h in enumerate(elems)
                if idx != k and domain.is_unit(h.leading(order).coefficient)
            ]
            if not reducers:
                continue
            r = _strong_divide(elems[k], reducers, order, False)[0]
            if r != elems[k]:
                if r.is_zero():
                    raise AssertionError("minimal strong basis elements cannot vanish")
                elems[k] = normalize_leading_unit(r, order)
                changed = True

    elems.sort(key=lambda g: _canonical_key(g, order), reverse=True)
    return StrongBasis(tuple(elems), order, domain, nvars, certified=True)


def _canonical_key(g, order):
    m = g.leading(order)
    return (order.key(m.exponents), g.domain.sort_key(m.coefficient))


def certify_strong_basis(elements, order):
    """Re-reduce every S- and G-polynomial from scratch; all must vanish."""
    elements = list(elements)
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            for make in (spoly, gpoly):
                c = make(elements[i], elements[j], order)
                if c.is_zero():
                    continue
                if not _strong_divide(c, elements, order, False)[0].is_zero():
                    return False
    return True


def specialization_locus(basis):
    """Product of the basis's leading coefficients, monic, as a K polynomial."""
    dom = basis.domain
    if not isinstance(dom, UnivariatePolyDomain):
        raise UsageError("specialization locus needs a K[x1] basis")
    field = dom.field
    acc = unipoly.one(field)
    for g in basis.elements:
        acc = unipoly.mul(acc, g.leading(basis.order).coefficient, field)
    return Polynomial.from_dense(field, 1, 0, unipoly.monic(acc, field))


def specialize_basis(basis, a, target=None):
    """Evaluate x1 at a point off the locus; the result is still a strong basis.

    The image of each leading coefficient is nonzero, so leading terms (and
    the pair-reduction checks behind ``certified``) carry over without another
    completion run.
    """
    dom = basis.domain
    if not isinstance(dom, UnivariatePolyDomain):
        raise UsageError("specialization needs a K[x1] basis")
    field = dom.field
    if isinstance(a, FFElement):
        if target is None:
            target = a.tower
        a = a.rep
    if target is None:
        target = field
    out = []
    for g in basis.elements:
        lead = g.leading(basis.order).coefficient
        lifted = tuple(target.lift(c, field) for c in lead)
        if target.is_zero(unipoly.evaluate(lifted, a, target)):
            raise SpecializationError(
                "the point is a root of a leading coefficient (locus vanishes)"
            )
    for g in basis.elements:
        terms = {}
        for exps, cs in g.coeffs.items():
            lifted = tuple(target.lift(c, field) for c in cs)
            val = unipoly.evaluate(lifted, a, target)
            if not target.is_zero(val):
                terms[exps] = val
        out.append(Polynomial(target, basis.nvars, terms))
    out.sort(key=lambda g: basis.order.key(g.leading(basis.order).exponents), reverse=True)
    return StrongBasis(tuple(out), basis.order, target, basis.nvars, certified=True)
