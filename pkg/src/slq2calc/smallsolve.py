"""Tiny exact solver for low-degree polynomial systems in few parameters.

The braiding search produces systems of polynomial equations in a handful
of auxiliary parameters (complement coordinates and the second eigenvalue)
with coefficients in Q(i)(s).  They are solved by branching elimination:
variables with univariate equations are bound to the field roots of their
gcd; variables that occur everywhere linearly are cross-eliminated and
deferred; as a last resort one variable is eliminated through resultants.
Deferred variables are back-substituted at the leaves, and every candidate
assignment is verified against the original system, so the elimination
steps only have to preserve solutions, never to avoid spurious ones.
Systems that defy these steps raise ``Unresolved`` rather than guessing.
"""

from __future__ import annotations

from .scalars import Poly, Scalar, scalar_sqrt


class Unresolved(RuntimeError):
    pass


_ZERO_POLY = Poly()


def _as_univariate(eq: Scalar, var: int):
    """Coefficient list (low to high) of eq's numerator in parameter var."""
    coeffs = eq.num.coeffs_in_param(var)
    deg = max(coeffs) if coeffs else 0
    return [Scalar(coeffs[k]) if k in coeffs else Scalar.zero()
            for k in range(deg + 1)]


def _trim_poly(c):
    while c and c[-1].is_zero():
        c.pop()
    return c


def _poly_mod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = lb.inv()
    while a and len(a) - 1 >= db:
        da = len(a) - 1
        c = a[-1] * inv
        for k in range(db + 1):
            a[da - db + k] = a[da - db + k] - c * b[k]
        a = _trim_poly(a)
        if a and len(a) - 1 == da:
            raise Unresolved("polynomial division failed to reduce degree")
    return a


def _poly_divexact(a, b):
    """a // b assuming exact divisibility of coefficient lists."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = lb.inv()
    out = [Scalar.zero()] * (len(a) - db)
    while a and len(a) - 1 >= db:
        da = len(a) - 1
        c = a[-1] * inv
        out[da - db] = c
        for k in range(db + 1):
            a[da - db + k] = a[da - db + k] - c * b[k]
        a = _trim_poly(a)
    if a:
        raise Unresolved("inexact polynomial division")
    return out


def poly_gcd(a, b):
    """Monic gcd of coefficient lists over the scalar field."""
    a = _trim_poly(list(a))
    b = _trim_poly(list(b))
    while b:
        a, b = b, _poly_mod(a, b)
    if a:
        lead = a[-1].inv()
        a = [c * lead for c in a]
    return a


def _derivative(c):
    return [c[k] * Scalar.from_int(k) for k in range(1, len(c))]


def poly_roots(coeffs):
    """Roots inside the field of a coefficient list; may raise Unresolved."""
    c = _trim_poly(list(coeffs))
    if not c:
        raise Unresolved("zero polynomial has every root")
    roots = []
    while c[0].is_zero():
        if not any(r.is_zero() for r in roots):
            roots.append(Scalar.zero())
        c = c[1:]
        if len(c) == 1:
            return roots
    deg = len(c) - 1
    if deg == 0:
        return roots
    if deg == 1:
        roots.append(-c[0] / c[1])
        return roots
    if deg == 2:
        disc = c[1] * c[1] - Scalar.from_int(4) * c[0] * c[2]
        r = scalar_sqrt(disc)
        if r is None:
            return roots
        two_a = c[2] + c[2]
        roots.append((-c[1] + r) / two_a)
        if not r.is_zero():
            roots.append((-c[1] - r) / two_a)
        return roots
    # strip repeated factors and retry
    g = poly_gcd(list(c), _derivative(c))
    if len(g) > 1:
        for r in poly_roots(_poly_divexact(list(c), g)):
            if not any((r - x).is_zero() for x in roots):
                roots.append(r)
        for r in poly_roots(g):
            if not any((r - x).is_zero() for x in roots):
                roots.append(r)
        return roots
    # hunt linear factors through the divisor catalog, then deflate
    found = _rational_function_roots(c)
    if found is None:
        raise Unresolved(f"cannot extract field roots of degree {deg}")
    rem = list(c)
    for r in found:
        rem = _deflate(rem, r)
        if not any((r - x).is_zero() for x in roots):
            roots.append(r)
    if len(rem) - 1 >= 3:
        raise Unresolved(f"irreducible residual of degree {len(rem) - 1}")
    for r in poly_roots(rem):
        if not any((r - x).is_zero() for x in roots):
            roots.append(r)
    return roots


def _deflate(c, r):
    """Exact synthetic division of a coefficient list by (x - r)."""
    n = len(c) - 1
    out = [Scalar.zero()] * n
    b = c[n]
    for k in range(n - 1, -1, -1):
        out[k] = b
        b = c[k] + r * b
    if not b.is_zero():
        raise Unresolved("deflation by a non-root")
    return out


_CATALOG_UNITS = (Scalar.one(), -Scalar.one(), Scalar.i(), -Scalar.i())


def _catalog_factor(p):
    """Factor an s-polynomial as unit * s^k * prod (s^m - u) over the catalog.

    Returns (k, [list of (m, u) factors]) or None if a non-catalog factor
    of positive degree remains.  The catalog covers the cyclotomic-like
    binomials that occur as q-deformation coefficients.
    """
    from .scalars import Poly
    x = Scalar(p)
    mins = p.monomial_mins()
    k = mins[0] if mins else 0
    if k:
        x = x / Scalar.s_power(k)
    factors = []
    deg = x.num.total_degree()
    m = 1
    while m <= x.num.total_degree() and not x.num.is_const():
        hit = False
        for u in _CATALOG_UNITS:
            binom = Scalar.s_power(m) - u
            q = x.num.exact_div(binom.num)
            if q is not None:
                factors.append((m, u))
                x = Scalar(q, x.den)
                hit = True
                break
        if not hit:
            m += 1
    if not x.num.is_const():
        return None
    return k, factors


def _divisor_candidates(p, cap=128):
    """Monic catalog divisors of an s-polynomial (as Scalars)."""
    fac = _catalog_factor(p)
    if fac is None:
        return None
    k, factors = fac
    out = [Scalar.one()]
    for power in range(1, k + 1):
        out.append(Scalar.s_power(power))
        if len(out) > cap:
            return None
    for (m, u) in factors:
        binom = Scalar.s_power(m) - u
        out = out + [d * binom for d in out]
        if len(out) > cap:
            return None
    # dedup
    uniq = []
    for d in out:
        if not any((d - e).is_zero() for e in uniq):
            uniq.append(d)
    return uniq


def _rational_function_roots(c):
    """Roots in Q(i)(s) of a univariate coefficient list, via divisors.

    Uses the rational-root theorem over Q(i)[s]: a root P/Q (up to a
    Gaussian-rational constant) has P dividing the trailing and Q dividing
    the leading coefficient.  Returns verified roots, or None when the
    divisor catalog cannot factor the ends.
    """
    # clear denominators of the coefficients
    den = None
    for x in c:
        if x.is_zero():
            continue
        den = x.den if den is None else _poly_lcm_like(den, x.den)
    polys = []
    for x in c:
        if x.is_zero():
            polys.append(None)
        else:
            q = den.exact_div(x.den)
            polys.append(x.num * q)
    n = len(polys) - 1
    trail = next(p for p in polys if p is not None)
    lead = polys[n]
    ptrail = _divisor_candidates(trail)
    plead = _divisor_candidates(lead)
    if ptrail is None or plead is None:
        return None
    roots = []
    for P in ptrail:
        for Q in plead:
            consts = _constants_for(polys, P, Q)
            if consts is None:
                return None
            for cconst in consts:
                r = cconst * P / Q
                if _is_root(c, r) and not any((r - x).is_zero() for x in roots):
                    roots.append(r)
    return roots


def _poly_lcm_like(a, b):
    q = a.exact_div(b)
    if q is not None:
        return a
    q = b.exact_div(a)
    if q is not None:
        return b
    return a * b


def _constants_for(polys, P, Q):
    """Gaussian constants c with sum_k a_k (cP)^k Q^(n-k) = 0, if finite."""
    n = len(polys) - 1
    # rows: s-exponent -> Q(i)-coefficient polynomial in the constant
    rows = {}
    for k, a in enumerate(polys):
        if a is None:
            continue
        term = a * (P ** k).num * (Q ** (n - k)).num
        for exps, coeff in term.terms.items():
            e = exps[0] if exps else 0
            row = rows.setdefault(e, {})
            row[k] = row.get(k, _zero_gq()) + coeff
    glist = None
    for e, row in rows.items():
        cl = [Scalar.from_gauss(row.get(k, _zero_gq())) for k in range(n + 1)]
        cl = _trim_poly(cl)
        if not cl:
            continue
        glist = cl if glist is None else poly_gcd(glist, cl)
        if glist == [Scalar.one()]:
            return []
    if glist is None:
        return []
    if len(glist) - 1 > 2:
        return []  # cannot happen for a genuine single root; skip pair
    try:
        return poly_roots(glist)
    except Unresolved:
        return []


def _zero_gq():
    from .scalars import GQ_ZERO
    return GQ_ZERO


def _is_root(c, r):
    acc = Scalar.zero()
    power = Scalar.one()
    for x in c:
        acc = acc + x * power
        power = power * r
    return acc.is_zero()


def poly_resultant(a, b):
    """Resultant of two coefficient lists over the scalar field."""
    a = _trim_poly(list(a))
    b = _trim_poly(list(b))
    if not a or not b:
        return Scalar.zero()
    m, n = len(a) - 1, len(b) - 1
    if m == 0:
        return a[0] ** n
    if n == 0:
        return b[0] ** m
    size = m + n
    rows = []
    for k in range(n):
        row = [Scalar.zero()] * size
        for j, c in enumerate(reversed(a)):
            row[k + j] = c
        rows.append(row)
    for k in range(m):
        row = [Scalar.zero()] * size
        for j, c in enumerate(reversed(b)):
            row[k + j] = c
        rows.append(row)
    return _det(rows)


def _det(mat):
    n = len(mat)
    mat = [list(r) for r in mat]
    det = Scalar.one()
    for col in range(n):
        piv = None
        for i in range(col, n):
            if not mat[i][col].is_zero():
                piv = i
                break
        if piv is None:
            return Scalar.zero()
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det = det * mat[col][col]
        inv = mat[col][col].inv()
        for i in range(col + 1, n):
            if mat[i][col].is_zero():
                continue
            f = mat[i][col] * inv
            for j in range(col, n):
                mat[i][j] = mat[i][j] - f * mat[col][j]
    return det


def _params_of(e: Scalar):
    out = set()
    for exps in e.num.terms:
        for i, p in enumerate(exps[1:], start=1):
            if p:
                out.add(i)
    return out


def _complexity(e: Scalar):
    return len(e.num.terms)


def _cross(piv, e, v):
    """Eliminate the linear variable v between piv and e."""
    a0 = Scalar(piv.num.coeffs_in_param(v).get(1, _ZERO_POLY))
    b0 = Scalar(piv.num.coeffs_in_param(v).get(0, _ZERO_POLY))
    a = Scalar(e.num.coeffs_in_param(v).get(1, _ZERO_POLY))
    b = Scalar(e.num.coeffs_in_param(v).get(0, _ZERO_POLY))
    return a0 * b - a * b0


def solve_system(eqs, variables, nonzero=(), max_branches=2048):
    """All solutions (dicts var -> Scalar) of eqs = 0 over the given vars.

    Variables listed in ``nonzero`` are known a priori never to vanish;
    their zero-branches are pruned.  Equations are replaced by their
    numerators up front: parameter-dependent denominators would blow up
    under substitution, and away from their zero locus the zero sets agree.
    """
    original = [Scalar(e.num) for e in eqs if not e.is_zero()]
    nonzero = set(nonzero)
    solutions = []
    stack = [(_dedup(original), {}, [])]
    budget = max_branches
    while stack:
        eqs_cur, assign, deferred = stack.pop()
        budget -= 1
        if budget < 0:
            raise Unresolved("branch budget exceeded")
        eqs_cur = _dedup(e for e in eqs_cur if not e.is_zero())
        if any(not _params_of(e) for e in eqs_cur):
            continue  # a nonzero constant equation: inconsistent branch
        live = sorted({v for e in eqs_cur for v in _params_of(e)
                       if v not in assign})
        if not eqs_cur or not live:
            for cand in _resolve_deferred(assign, deferred):
                if _verify(original, cand):
                    if not any(_same_assignment(cand, s) for s in solutions):
                        solutions.append(cand)
            continue
        if _step_content(eqs_cur, assign, deferred, live, stack, nonzero):
            continue
        if _step_univariate(eqs_cur, assign, deferred, live, stack):
            continue
        if _step_linear(eqs_cur, assign, deferred, live, stack):
            continue
        if _step_resultant(eqs_cur, assign, deferred, live, stack):
            continue
        raise Unresolved("no elimination step applies")
    return solutions


def _dedup(eqs):
    seen = {}
    for e in eqs:
        if e.is_zero():
            continue
        _, lc = e.num.lead()
        inv = lc.inv()
        key = frozenset((exps, (c * inv).a, (c * inv).b, (c * inv).d)
                        for exps, c in e.num.terms.items())
        if key not in seen:
            seen[key] = e
    return list(seen.values())


def _content_var(e: Scalar, live):
    """A live variable dividing every numerator term, if any."""
    for v in live:
        if all((exps[v] if v < len(exps) else 0) >= 1 for exps in e.num.terms):
            return v
    return None


def _strip_var(e: Scalar, v):
    """Divide the numerator by its v-monomial content."""
    mins = min((exps[v] if v < len(exps) else 0) for exps in e.num.terms)
    if mins == 0:
        return e
    terms = {}
    for exps, c in e.num.terms.items():
        ne = list(exps)
        ne[v] -= mins
        key = tuple(ne)
        while key and key[-1] == 0:
            key = key[:-1]
        terms[key] = c
    return Scalar(Poly(terms), e.den)


def _step_content(eqs_cur, assign, deferred, live, stack, nonzero):
    """Branch on a variable that divides some equation outright."""
    for e in eqs_cur:
        v = _content_var(e, live)
        if v is None:
            continue
        if v not in nonzero:
            zero = Scalar.zero()
            stack.append(([x.subs_params({v: zero}) for x in eqs_cur],
                          {**assign, v: zero}, deferred))
        stack.append(([_strip_var(x, v) for x in eqs_cur], assign, deferred))
        return True
    return False


def _step_univariate(eqs_cur, assign, deferred, live, stack):
    for v in live:
        uni = [e for e in eqs_cur if _params_of(e) == {v}]
        if not uni:
            continue
        g = None
        for e in uni:
            cl = _as_univariate(e, v)
            g = cl if g is None else poly_gcd(g, cl)
        if not g:
            continue
        try:
            roots = poly_roots(g)
        except Unresolved:
            continue  # another variable or step may untangle this first
        for root in roots:
            stack.append(([e.subs_params({v: root}) for e in eqs_cur],
                          {**assign, v: root}, deferred))
        return True
    return False


def _step_linear(eqs_cur, assign, deferred, live, stack):
    for v in live:
        occ = [e for e in eqs_cur if v in _params_of(e)]
        if not all(max(e.num.coeffs_in_param(v), default=0) == 1 for e in occ):
            continue
        groups = {}
        for e in occ:
            groups.setdefault(frozenset(_params_of(e)) - {v}, []).append(e)
        new_eqs = [e for e in eqs_cur if v not in _params_of(e)]
        pivots = []
        for es in groups.values():
            es = sorted(es, key=_complexity)
            pivots.append(es[0])
            if len(es) <= 10:
                for i in range(len(es)):
                    for j in range(i + 1, len(es)):
                        new_eqs.append(_cross(es[i], es[j], v))
            else:
                # two pivots crossed against the whole group
                for piv in es[:2]:
                    for e in es:
                        if e is not piv:
                            new_eqs.append(_cross(piv, e, v))
        for i in range(len(pivots)):
            for j in range(i + 1, len(pivots)):
                new_eqs.append(_cross(pivots[i], pivots[j], v))
        stack.append((new_eqs, assign, deferred + [(v, occ)]))
        return True
    return False


def _step_resultant(eqs_cur, assign, deferred, live, stack):
    def vdeg(e, v):
        return max(e.num.coeffs_in_param(v), default=0)

    best = min(live, key=lambda v: max(vdeg(e, v) for e in eqs_cur
                                       if v in _params_of(e)))
    v = best
    occ = sorted([e for e in eqs_cur if v in _params_of(e)], key=_complexity)
    new_eqs = [e for e in eqs_cur if v not in _params_of(e)]
    base = occ[0]
    base_c = _as_univariate(base, v)
    added = False
    for e in occ[1:6]:
        r = poly_resultant(base_c, _as_univariate(e, v))
        if not r.is_zero():
            new_eqs.append(r)
            added = True
    if not added and len(occ) > 1:
        # all tried resultants vanished: try one more pairing
        for i in range(1, min(4, len(occ))):
            for j in range(i + 1, min(5, len(occ))):
                r = poly_resultant(_as_univariate(occ[i], v),
                                   _as_univariate(occ[j], v))
                if not r.is_zero():
                    new_eqs.append(r)
                    added = True
        if not added:
            return False
    stack.append((new_eqs, assign, deferred + [(v, occ)]))
    return True


def _resolve_deferred(assign, deferred):
    """Back-substitute eliminated variables, most recently eliminated first."""
    results = [dict(assign)]
    for v, occ in reversed(deferred):
        nxt = []
        for cand in results:
            vals = _solve_var_under(cand, occ, v)
            for val in vals:
                nxt.append({**cand, v: val})
        results = nxt
    return results


def _solve_var_under(cand, occ, v):
    """Solve the deferred equations for v under a full partial assignment."""
    g = None
    pending = False
    for e in occ:
        sub = e.subs_params(cand)
        if _params_of(sub) - {v}:
            pending = True
            continue
        cl = _as_univariate(sub, v)
        cl = _trim_poly(cl)
        if not cl:
            continue
        if len(cl) == 1:
            return []  # nonzero constant: inconsistent
        g = cl if g is None else poly_gcd(g, cl)
        if g == [Scalar.one()] or (g and len(g) == 1):
            return []
    if g is None:
        if pending:
            raise Unresolved(f"deferred variable p{v} blocked by symbols")
        raise Unresolved(f"variable p{v} is unconstrained")
    return poly_roots(g)


def _verify(eqs, assign):
    for e in eqs:
        v = e.subs_params(assign)
        if _params_of(v) or not v.is_zero():
            return False
    return True


def _same_assignment(a, b):
    if set(a) != set(b):
        return False
    return all((a[k] - b[k]).is_zero() for k in a)
