"""Buchberger's algorithm and basis services for field coefficients.

Division tracks cofactors so every reduction yields an exact combination
identity; Buchberger can additionally track how each basis element was
assembled from the input generators, which is how triviality certificates
are produced.  Reduced bases are monic, inter-reduced and sorted with the
largest leading term first, so equal ideals print identically.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import unipoly
from .errors import UsageError
from .poly import Polynomial, TermOrder, exp_add, exp_divides, exp_lcm, exp_sub


@dataclass(frozen=True)
class StrongBasis:
    """A computed basis plus the order it was computed under.

    ``certified`` records that the defining pair-reduction checks are known to
    hold (a completed Buchberger run, an independent verification, or a
    specialization that provably preserves the property).  ``lineage`` is
    present on tracked runs: one cofactor vector per element, expressing it in
    terms of the original generators.
    """

    elements: tuple
    order: TermOrder
    domain: object
    nvars: int
    certified: bool = False
    lineage: tuple = None


def _leading(f, order):
    m = f.leading(order)
    return m.exponents, m.coefficient


def _divide(f, basis, order, want_cofs):
    dom = f.domain
    lead = []
    for g in basis:
        if g.is_zero():
            raise UsageError("division by a basis containing zero")
        lead.append(_leading(g, order))
    work = dict(f.coeffs)
    remainder = {}
    cofs = [dict() for _ in basis] if want_cofs else None
    while work:
        t = max(work, key=order.key)
        c = work.pop(t)
        for idx, (lexp, lc) in enumerate(lead):
            if exp_divides(lexp, t):
                u = dom.div(c, lc)
                m = exp_sub(t, lexp)
                for s, cs in basis[idx].coeffs.items():
                    if s == lexp:
                        continue
                    key = exp_add(s, m)
                    nv = dom.sub(work.get(key, dom.zero()), dom.mul(u, cs))
                    if dom.is_zero(nv):
                        work.pop(key, None)
                    else:
                        work[key] = nv
                if want_cofs:
                    cofs[idx][m] = dom.add(cofs[idx].get(m, dom.zero()), u)
                break
        else:
            remainder[t] = c
    rem = Polynomial(dom, f.nvars, remainder)
    if not want_cofs:
        return rem, None
    return rem, tuple(Polynomial(dom, f.nvars, c) for c in cofs)


def reduce(f, basis, order=None):
    """Remainder and cofactors with f = sum(cof * g) + remainder exactly."""
    if order is None:
        order = TermOrder.lex(f.nvars)
    return _divide(f, list(basis), order, True)


def normal_form(f, basis, order=None):
    """Remainder of f on division by the basis, without cofactor bookkeeping."""
    if order is None:
        order = TermOrder.lex(f.nvars)
    return _divide(f, list(basis), order, False)[0]


def spoly(f, g, order):
    """S-polynomial; leading terms cancel by construction."""
    fe, fc = _leading(f, order)
    ge, gc = _leading(g, order)
    t = exp_lcm(fe, ge)
    dom = f.domain
    a = f.mul_monomial(dom.inv(fc), exp_sub(t, fe))
    b = g.mul_monomial(dom.inv(gc), exp_sub(t, ge))
    return a - b


def buchberger(gens, order=None, *, track=False, domain=None, nvars=None):
    """Reduced Groebner basis; with track=True, lineage over the input is kept."""
    gens = list(gens)
    for g in gens:
        if domain is None:
            domain, nvars = g.domain, g.nvars
        elif g.domain != domain or g.nvars != nvars:
            raise UsageError("generators disagree on domain or variables")
    if domain is None:
        raise UsageError("an empty ideal needs an explicit domain and nvars")
    if not domain.is_field:
        raise UsageError("buchberger needs field coefficients")
    if order is None:
        order = TermOrder.lex(nvars)
    if order.nvars != nvars:
        raise UsageError("order does not match the variable count")

    basis = []
    lts = []
    lineage = []
    pending = set()

    def push(f, vec):
        lexp, lc = _leading(f, order)
        inv = domain.inv(lc)
        f = f.scaled(inv)
        if track:
            vec = tuple(v.scaled(inv) for v in vec)
        j = len(basis)
        for i in range(j):
            pending.add((i, j))
        basis.append(f)
        lts.append(lexp)
        lineage.append(vec)

    zero = Polynomial.zero(domain, nvars)
    for k, g in enumerate(gens):
        if g.is_zero():
            continue
        vec = None
        if track:
            vec = tuple(
                Polynomial.constant(domain, nvars, domain.one()) if m == k else zero
                for m in range(len(gens))
            )
        push(g, vec)

    def pair_key(ij):
        i, j = ij
        return (order.key(exp_lcm(lts[i], lts[j])), i, j)

    while pending:
        i, j = min(pending, key=pair_key)
        pending.discard((i, j))
        lcm_ij = exp_lcm(lts[i], lts[j])
        if lcm_ij == exp_add(lts[i], lts[j]):
            continue  # disjoint leading terms: S-polynomial reduces to zero
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not exp_divides(lts[k], lcm_ij):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pending and b not in pending:
                skip = True
                break
        if skip:
            continue
        ui = exp_sub(lcm_ij, lts[i])
        uj = exp_sub(lcm_ij, lts[j])
        s = basis[i].mul_monomial(domain.one(), ui) - basis[j].mul_monomial(
            domain.one(), uj
        )
        r, cofs = _divide(s, basis, order, track)
        if r.is_zero():
            continue
        vec = None
        if track:
            vec = [
                a.mul_monomial(domain.one(), ui) - b.mul_monomial(domain.one(), uj)
                for a, b in zip(lineage[i], lineage[j])
            ]
            for m, cof in enumerate(cofs):
                if cof.is_zero():
                    continue
                vec = [v - cof * lv for v, lv in zip(vec, lineage[m])]
            vec = tuple(vec)
        push(r, vec)

    # minimal basis: drop any element whose leading term another covers
    keep = []
    for idx in sorted(range(len(basis)), key=lambda k: (order.key(lts[k]), k)):
        if not any(exp_divides(lts[k], lts[idx]) for k in keep):
            keep.append(idx)

    final = [basis[k] for k in keep]
    final_lin = [lineage[k] for k in keep] if track else None
    changed = True
    while changed:
        changed = False
        for idx in range(len(final)):
            others = final[:idx] + final[idx + 1 :]
            if not others:
                continue
            r, cofs = _divide(final[idx], others, order, track)
            if r == final[idx]:
                continue
            changed = True
            if r.is_zero():
                raise AssertionError("minimal basis elements cannot vanish")
            lexp, lc = _leading(r, order)
            inv = domain.inv(lc)
            final[idx] = r.scaled(inv)
            if track:
                vec = list(final_lin[idx])
                other_lin = final_lin[:idx] + final_lin[idx + 1 :]
                for cof, lv in zip(cofs, other_lin):
                    if cof.is_zero():
                        continue
                    vec = [v - cof * l for v, l in zip(vec, lv)]
                final_lin[idx] = tuple(v.scaled(inv) for v in vec)

    ranked = sorted(
        range(len(final)),
        key=lambda k: order.key(final[k].leading(order).exponents),
        reverse=True,
    )
    elements = tuple(final[k] for k in ranked)
    lin = tuple(final_lin[k] for k in ranked) if track else None
    return StrongBasis(elements, order, domain, nvars, certified=True, lineage=lin)


def certify_basis(elements, order):
    """Re-check every S-polynomial from scratch, skipping no pairs."""
    elements = list(elements)
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            s = spoly(elements[i], elements[j], order)
            if not _divide(s, elements, order, False)[0].is_zero():
                return False
    return True


class Ideal:
    """A generator list with cached Groebner bases, one per term order."""

    def __init__(self, gens, domain=None, nvars=None):
        self.gens = tuple(gens)
        for g in self.gens:
            if domain is None:
                domain, nvars = g.domain, g.nvars
            elif g.domain != domain or g.nvars != nvars:
                raise UsageError("generators disagree on domain or variables")
        if domain is None:
            raise UsageError("an empty ideal needs an explicit domain and nvars")
        self.domain = domain
        self.nvars = nvars
        self._bases = {}

    def groebner(self, order=None, track=False):
        if order is None:
            order = TermOrder.lex(self.nvars)
        hit = self._bases.get(order)
        if hit is not None and (hit.lineage is not None or not track):
            return hit
        computed = buchberger(
            self.gens, order, track=track, domain=self.domain, nvars=self.nvars
        )
        self._bases[order] = computed
        return computed

    def __repr__(self):
        return f"Ideal({len(self.gens)} gens over {self.domain.tag})"


@dataclass(frozen=True)
class Triviality:
    """Answer to 'is this the unit ideal', with a certificate when it is."""

    trivial: bool
    certificate: tuple = None

    def __bool__(self):
        return self.trivial


def is_trivial(ideal):
    """Decide whether 1 lies in the ideal; on yes, certify 1 = sum(c_i * gen_i)."""
    gb = ideal.groebner()
    if not (len(gb.elements) == 1 and gb.elements[0].is_one()):
        return Triviality(False, None)
    tracked = ideal.groebner(track=True)
    return Triviality(True, tracked.lineage[0])


def member(f, ideal):
    """Ideal membership by reduction to normal form."""
    if f.domain != ideal.domain or f.nvars != ideal.nvars:
        raise UsageError("query polynomial does not match the ideal's ring")
    gb = ideal.groebner()
    if not gb.elements:
        return f.is_zero()
    return normal_form(f, gb.elements, gb.order).is_zero()


def eliminate_to_x1(ideal):
    """Monic generator of the ideal's intersection with K[x1] (zero if empty).

    Uses a lex order ranking x1 below every other variable, collects the
    univariate basis elements and takes their gcd.
    """
    if not ideal.domain.is_field:
        raise UsageError("elimination needs field coefficients")
    n = ideal.nvars
    priority = tuple(range(1, n)) + (0,)
    order = TermOrder.lex(n, priority)
    gb = ideal.groebner(order)
    univariate = [g.dense_in(0) for g in gb.elements if g.univariate_in(0)]
    acc = ()
    for dense in univariate:
        acc = unipoly.gcd(acc, dense, ideal.domain)
    return Polynomial.from_dense(ideal.domain, 1, 0, acc)
