"""Dense univariate polynomial arithmetic over an abstract coefficient field.

A polynomial is a tuple of field elements in ascending degree order with no
trailing zeros; the zero polynomial is the empty tuple.  Every function takes
the field object last.  The factorization routines additionally require a
finite field exposing ``char``, ``order`` and index-based element access.
"""

from __future__ import annotations

import random

from .errors import UsageError


def trim(f, F):
    """Drop trailing zero coefficients, returning the canonical tuple."""
    f = tuple(f)
    n = len(f)
    while n and F.is_zero(f[n - 1]):
        n -= 1
    return f[:n]


def is_zero(f):
    return len(f) == 0


def deg(f):
    """Degree of f, with deg 0 = -1."""
    return len(f) - 1


def constant(c, F):
    return () if F.is_zero(c) else (c,)


def one(F):
    return (F.one(),)


def x(F):
    """The identity polynomial x."""
    return (F.zero(), F.one())


def leading(f):
    if not f:
        raise UsageError("leading coefficient of the zero polynomial")
    return f[-1]


def add(f, g, F):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(out, F)


def neg(f, F):
    return tuple(F.neg(c) for c in f)


def sub(f, g, F):
    return add(f, neg(g, F), F)


def scale(f, c, F):
    if F.is_zero(c):
        return ()
    return trim([F.mul(a, c) for a in f], F)


def mul(f, g, F):
    if not f or not g:
        return ()
    out = [F.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out, F)


def mul_xpow(f, k, F):
    """Multiply by x**k."""
    if not f:
        return ()
    return (F.zero(),) * k + tuple(f)


def poly_pow(f, e, F):
    """f**e by squaring, e >= 0."""
    if e < 0:
        raise UsageError("negative polynomial powers are not defined")
    out = one(F)
    while e > 0:
        if e & 1:
            out = mul(out, f, F)
        f = mul(f, f, F)
        e >>= 1
    return out


def divmod_(f, g, F):
    """Quotient and remainder of f by nonzero g."""
    if not g:
        raise UsageError("univariate division by zero")
    lead_inv = F.inv(g[-1])
    rem = list(f)
    dq = len(f) - len(g)
    if dq < 0:
        return (), tuple(f)
    quo = [F.zero()] * (dq + 1)
    for i in range(dq, -1, -1):
        c = rem[i + len(g) - 1]
        if F.is_zero(c):
            continue
        q = F.mul(c, lead_inv)
        quo[i] = q
        for j, b in enumerate(g):
            rem[i + j] = F.sub(rem[i + j], F.mul(q, b))
    return trim(quo, F), trim(rem, F)


def quo(f, g, F):
    return divmod_(f, g, F)[0]


def rem(f, g, F):
    return divmod_(f, g, F)[1]


def divides(g, f, F):
    """True when g divides f exactly (g nonzero)."""
    return not rem(f, g, F)


def monic(f, F):
    if not f:
        return ()
    if F.is_one(f[-1]):
        return tuple(f)
    return scale(f, F.inv(f[-1]), F)


def gcd(f, g, F):
    """Monic greatest common divisor."""
    while g:
        f, g = g, rem(f, g, F)
    return monic(f, F)


def xgcd(f, g, F):
    """Extended gcd: (d, u, v) with d monic and u*f + v*g = d."""
    r0, r1 = tuple(f), tuple(g)
    u0, u1 = one(F), ()
    v0, v1 = (), one(F)
    while r1:
        q, r = divmod_(r0, r1, F)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(q, u1, F), F)
        v0, v1 = v1, sub(v0, mul(q, v1, F), F)
    if not r0:
        return (), (), ()
    c = F.inv(r0[-1])
    return scale(r0, c, F), scale(u0, c, F), scale(v0, c, F)


def lcm(f, g, F):
    """Monic least common multiple."""
    if not f or not g:
        return ()
    return monic(quo(mul(f, g, F), gcd(f, g, F), F), F)


def evaluate(f, a, F):
    """Evaluate by Horner's rule."""
    acc = F.zero()
    for c in reversed(f):
        acc = F.add(F.mul(acc, a), c)
    return acc


def derivative(f, F):
    out = []
    for i in range(1, len(f)):
        k = F.from_int(i)
        out.append(F.mul(f[i], k))
    return trim(out, F)


def pow_mod(f, e, m, F):
    """f**e modulo m by binary exponentiation."""
    result = rem(one(F), m, F)
    base = rem(f, m, F)
    while e > 0:
        if e & 1:
            result = rem(mul(result, base, F), m, F)
        base = rem(mul(base, base, F), m, F)
        e >>= 1
    return result


def elem_pow(a, e, F):
    """Field element power by binary exponentiation (e >= 0)."""
    result = F.one()
    while e > 0:
        if e & 1:
            result = F.mul(result, a)
        a = F.mul(a, a)
        e >>= 1
    return result


# -- factorization over finite fields ---------------------------------------


def _pth_root(f, F):
    # In char p every f with f' = 0 is g(x**p); the coefficient root is c**(q/p).
    p = F.char
    e = F.order // p
    return trim([elem_pow(f[i], e, F) for i in range(0, len(f), p)], F)


def sqf_list(f, F):
    """Squarefree decomposition of monic f: [(g, e)] with prod g**e = f."""
    n, factors = 1, []
    f = monic(f, F)
    if deg(f) < 1:
        return []
    while True:
        df = derivative(f, F)
        if df:
            g = gcd(f, df, F)
            h = quo(f, g, F)
            i = 1
            while deg(h) > 0:
                gh = gcd(g, h, F)
                part = quo(h, gh, F)
                if deg(part) > 0:
                    factors.append((part, i * n))
                g, h = quo(g, gh, F), gh
                i += 1
            if deg(g) == 0:
                return factors
            f = g
        f = _pth_root(f, F)
        n *= F.char


def ddf(f, F):
    """Distinct-degree split of monic squarefree f: [(product, degree)]."""
    q = F.order
    out = []
    h = rem(x(F), f, F)
    d = 0
    while deg(f) > 0 and 2 * (d + 1) <= deg(f):
        d += 1
        h = pow_mod(h, q, f, F)
        g = gcd(sub(h, x(F), F), f, F)
        if deg(g) > 0:
            out.append((g, d))
            f = quo(f, g, F)
            h = rem(h, f, F)
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def _random_poly(max_deg, F, rng):
    coeffs = [F.element(rng.randrange(F.order)) for _ in range(max_deg + 1)]
    return trim(coeffs, F)


def edf(f, d, F, rng):
    """Equal-degree split of monic squarefree f into its degree-d factors."""
    out = []
    stack = [f]
    while stack:
        h = stack.pop()
        if deg(h) == d:
            out.append(h)
            continue
        g = ()
        while not (0 < deg(g) < deg(h)):
            r = _random_poly(deg(h) - 1, F, rng)
            if deg(r) < 1:
                continue
            if F.char == 2:
                # Trace map over F_2 splits products of degree-d factors.
                k = F.order.bit_length() - 1
                t = r
                cur = r
                for _ in range(d * k - 1):
                    cur = rem(mul(cur, cur, F), h, F)
                    t = add(t, cur, F)
                g = gcd(t, h, F)
            else:
                t = pow_mod(r, (F.order**d - 1) // 2, h, F)
                g = gcd(sub(t, one(F), F), h, F)
        stack.append(g)
        stack.append(quo(h, g, F))
    return out


def factor_key(g, F):
    """Canonical sort key: linear factors by root, others by coefficient index."""
    if deg(g) == 1:
        return (1, (F.sort_key(F.neg(g[0])),))
    return (deg(g), tuple(F.sort_key(c) for c in g[:-1]))


def factor(f, F, rng=None):
    """Factor nonconstant f into [(monic irreducible, multiplicity)], sorted."""
    f = trim(f, F)
    if deg(f) < 1:
        raise UsageError("factorization requires a nonconstant polynomial")
    if rng is None:
        rng = random.Random(0)
    out = []
    for g, e in sqf_list(f, F):
        for part, d in ddf(g, F):
            for irr in edf(part, d, F, rng):
                out.append((monic(irr, F), e))
    return sorted(out, key=lambda ge: factor_key(ge[0], F))


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f, F):
    """Rabin's irreducibility test over a finite field."""
    f = monic(trim(f, F), F)
    n = deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    q = F.order
    xx = rem(x(F), f, F)
    frob = [xx]  # frob[k] = x**(q**k) mod f
    for _ in range(n):
        frob.append(pow_mod(frob[-1], q, f, F))
    if frob[n] != xx:
        return False
    for l in _prime_divisors(n):
        h = sub(frob[n // l], xx, F)
        if deg(gcd(h, f, F)) != 0:
            return False
    return True


def first_irreducible(degree, F):
    """First monic irreducible of the given degree in coefficient-index order."""
    if degree < 1:
        raise UsageError("irreducible polynomials have degree >= 1")
    q = F.order
    for i in range(q**degree):
        coeffs = []
        k = i
        for _ in range(degree):
            coeffs.append(F.element(k % q))
            k //= q
        coeffs.append(F.one())
        g = tuple(coeffs)
        if is_irreducible(g, F):
            return g
    raise UsageError("no irreducible of requested degree")  # unreachable
