"""Exact ring arithmetic for the knot invariants.

Three layers live here:

* ``LaurentPoly`` -- sparse integer-coefficient multivariate Laurent
  polynomials.  Python integers never overflow, which the exactness of
  everything downstream depends on.
* ``QuotientRing`` / ``QElement`` -- canonical normal forms in the quotient
  rings used by the surface invariant (tag ``"G"``, variables
  t, p, q, x1..x2g) and the virtual-knot invariant (tag ``"Rprime"``,
  variables t, p, q, s).  Both rings impose

      q*(p - t) = 0          q*q = (1 - t)*(1 - p)

  on the free Laurent ring.
* ``RawRing`` / ``RawElement`` -- the larger ring (tag ``"Rraw"``, variables
  t, p, q, s, r, w) carrying an oriented rewrite system.  Reduction runs to a
  fixpoint; no confluence or canonicity is claimed for it, and none is needed
  by its only consumer (the presentation-matrix export).

Canonical form in the quotient rings.  The two relations let every element be
written A + B*q where B has p eliminated (q*p rewrites to q*t).  That pair is
*not* yet canonical: multiplying the first relation by q and subtracting the
second times (p - t) forces

    (1 - t)*(p - 1)*(p - t) = 0

among q-free elements, so distinct A's can represent equal ring elements.
Writing m = (p - 1)*(p - t) = p^2 - (1+t)*p + t, which is monic in p with
unit constant term, every A divides as A = Q*m + R with deg_p(R) <= 1, and
the class of A modulo (1-t)*m is exactly the pair (R, Q mod (1-t)).  The
canonical representative stored here is therefore

    A_can = (Q at t=1)*m + R

which is unique per ring element; structural equality of (A_can, B) pairs is
ring equality.  Determinants are computed division-free (the rings have zero
divisors, so no elimination with division is sound).
"""

from __future__ import annotations

from dataclasses import dataclass


class VariableSetMismatch(ValueError):
    """Raised when combining polynomials or elements over different rings."""


class NonSquare(ValueError):
    """Raised when a determinant of a non-square matrix is requested."""


class RingMismatch(ValueError):
    """Raised when comparing or combining values from different rings."""


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Sparse Laurent polynomial: map exponent vector -> nonzero int."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        t = {}
        if terms:
            for exps, coef in terms.items():
                if coef:
                    t[tuple(exps)] = coef
        self.terms = t

    # -- constructors

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def const(cls, vars, c):
        n = len(vars)
        return cls(vars, {(0,) * n: c})

    @classmethod
    def monomial(cls, vars, coef=1, **exps):
        vec = [0] * len(vars)
        for name, e in exps.items():
            vec[list(vars).index(name)] = e
        return cls(vars, {tuple(vec): coef})

    # -- predicates / views

    @property
    def is_zero(self):
        return not self.terms

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def exponent_range(self, var):
        """(min, max) exponent of var over all terms; None for zero poly."""
        if not self.terms:
            return None
        i = self.vars.index(var)
        es = [k[i] for k in self.terms]
        return min(es), max(es)

    # -- arithmetic

    def _check(self, other):
        if self.vars != other.vars:
            raise VariableSetMismatch(f"{self.vars} vs {other.vars}")

    def __add__(self, other):
        self._check(other)
        r = dict(self.terms)
        for k, v in other.terms.items():
            nv = r.get(k, 0) + v
            if nv:
                r[k] = nv
            elif k in r:
                del r[k]
        return LaurentPoly(self.vars, r)

    def __neg__(self):
        return LaurentPoly(self.vars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        if not self.terms or not other.terms:
            return LaurentPoly(self.vars)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        r = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                nv = r.get(k, 0) + v1 * v2
                if nv:
                    r[k] = nv
                elif k in r:
                    del r[k]
        return LaurentPoly(self.vars, r)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power on a polynomial")
        result = LaurentPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        if c == 0:
            return LaurentPoly(self.vars)
        return LaurentPoly(self.vars, {k: c * v for k, v in self.terms.items()})

    def shift(self, **exps):
        """Multiply by the monomial with the given exponents."""
        delta = [0] * len(self.vars)
        for name, e in exps.items():
            delta[self.vars.index(name)] = e
        return LaurentPoly(
            self.vars,
            {tuple(x + d for x, d in zip(k, delta)): v for k, v in self.terms.items()},
        )

    # -- substitutions (the few monomial ones the quotient structure needs)

    def subs_to_var(self, src, dst):
        """Replace src^k by dst^k (exponent transfer, e.g. p -> t)."""
        i, j = self.vars.index(src), self.vars.index(dst)
        r = {}
        for k, v in self.terms.items():
            key = list(k)
            key[j] += key[i]
            key[i] = 0
            key = tuple(key)
            nv = r.get(key, 0) + v
            if nv:
                r[key] = nv
            elif key in r:
                del r[key]
        return LaurentPoly(self.vars, r)

    def subs_one(self, var):
        """Set var = 1."""
        i = self.vars.index(var)
        r = {}
        for k, v in self.terms.items():
            key = k[:i] + (0,) + k[i + 1 :]
            nv = r.get(key, 0) + v
            if nv:
                r[key] = nv
            elif key in r:
                del r[key]
        return LaurentPoly(self.vars, r)

    def subs_inverse(self, src, dst):
        """Replace src^k by dst^(-k) (e.g. r -> 1/s)."""
        i, j = self.vars.index(src), self.vars.index(dst)
        r = {}
        for k, v in self.terms.items():
            key = list(k)
            key[j] -= key[i]
            key[i] = 0
            key = tuple(key)
            nv = r.get(key, 0) + v
            if nv:
                r[key] = nv
            elif key in r:
                del r[key]
        return LaurentPoly(self.vars, r)

    def extend_vars(self, vars):
        """Reinterpret over a superset of variables."""
        mapping = [vars.index(v) for v in self.vars]
        n = len(vars)
        r = {}
        for k, v in self.terms.items():
            key = [0] * n
            for pos, e in zip(mapping, k):
                key[pos] = e
            r[tuple(key)] = v
        return LaurentPoly(vars, r)

    # -- ordering / rendering

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order of exponent vectors."""
        return sorted(
            self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True
        )

    def leading_coeff(self):
        st = self.sorted_terms()
        return st[0][1] if st else 0

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in self.sorted_terms():
            factors = []
            for name, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            mag = abs(coef)
            if factors:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = str(mag)
            parts.append(("-" if coef < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"


def divides_exactly(divisor, dividend):
    """Exact-division test of Laurent polynomials over the same variables.

    Returns True iff dividend = h * divisor for some Laurent polynomial h.
    The divisor's leading coefficient must be a unit (+-1), which holds for
    every divisor this package uses.
    """
    if dividend.is_zero:
        return True
    if divisor.is_zero:
        return False
    lead_exp, lead_coef = divisor.sorted_terms()[0]
    if lead_coef not in (1, -1):
        raise ValueError("divisor must have unit leading coefficient")
    rem = dividend
    # each step cancels the graded-lex leading term, so a true multiple
    # terminates after quotient-size many steps; Laurent monomials are not
    # well-ordered, so non-multiples are cut off by the iteration bound
    for _ in range(10000):
        if rem.is_zero:
            return True
        top_exp, top_coef = rem.sorted_terms()[0]
        delta = {v: e - l for v, e, l in zip(rem.vars, top_exp, lead_exp)}
        factor = LaurentPoly.monomial(rem.vars, top_coef * lead_coef, **delta)
        rem = rem - factor * divisor
    return False


# ---------------------------------------------------------------------------
# Quotient rings G and R'


@dataclass(frozen=True)
class QuotientRing:
    """Ring spec for the two quotient rings sharing the q-relations.

    ``extras`` are the invertible passenger variables (x1..x2g or s);
    they commute freely and do not appear in the relations.
    """

    tag: str
    extras: tuple

    @property
    def vars(self):
        # variable order fixed globally: t, p, q, then extras
        return ("t", "p") + self.extras

    @property
    def full_vars(self):
        return ("t", "p", "q") + self.extras

    def zero(self):
        return QElement(self, LaurentPoly.zero(self.vars), LaurentPoly.zero(self.vars))

    def one(self):
        return QElement(self, LaurentPoly.const(self.vars, 1), LaurentPoly.zero(self.vars))

    def a_poly(self, coef=1, **exps):
        return LaurentPoly.monomial(self.vars, coef, **exps)

    def element(self, coef=1, q=0, **exps):
        """Monomial element coef * t^.. p^.. q^q * extras^.."""
        raw = LaurentPoly.monomial(self.full_vars, coef, q=q, **exps)
        return self.from_raw(raw)

    def from_raw(self, raw):
        """Normalize a polynomial over ``full_vars`` into the quotient."""
        if raw.vars != self.full_vars:
            raise VariableSetMismatch(f"{raw.vars} vs {self.full_vars}")
        qi = raw.vars.index("q")
        a = LaurentPoly.zero(self.vars)
        bq = LaurentPoly.zero(self.vars)
        c = _one_minus_t_one_minus_p(self.vars)
        for exps, coef in raw.terms.items():
            k = exps[qi]
            if k < 0:
                raise ValueError("q is not invertible")
            stripped = LaurentPoly(
                self.vars, {exps[:qi] + exps[qi + 1 :]: coef}
            )
            piece = stripped * (c ** (k // 2))
            if k % 2 == 0:
                a = a + piece
            else:
                bq = bq + piece
        return QElement(self, a, bq.subs_to_var("p", "t"))

    def __repr__(self):
        return f"QuotientRing({self.tag})"


def _one_minus_t_one_minus_p(vars):
    one = LaurentPoly.const(vars, 1)
    t = LaurentPoly.monomial(vars, 1, t=1)
    p = LaurentPoly.monomial(vars, 1, p=1)
    return (one - t) * (one - p)


def g_ring(genus):
    """Quotient ring for surface diagrams of the given genus."""
    return QuotientRing("G", tuple(f"x{i}" for i in range(1, 2 * genus + 1)))


def rprime_ring():
    """Quotient ring for the virtual-knot polynomial."""
    return QuotientRing("Rprime", ("s",))


def _divide_by_m(a):
    """Write a = Q*m + R with deg_p(R) in {0, 1}; m = p^2 - (1+t)p + t.

    Returns (Q, R).  Works on Laurent input: monomials with p-exponent >= 2
    reduce top-down via p^2 -> (1+t)p - t, monomials with negative p-exponent
    reduce via p^-1 -> (1+t)/t - p/t.
    """
    vars = a.vars
    pi = vars.index("p")
    q_acc = LaurentPoly.zero(vars)
    work = dict(a.terms)

    def add(d, key, val):
        nv = d.get(key, 0) + val
        if nv:
            d[key] = nv
        elif key in d:
            del d[key]

    progress = True
    while progress:
        progress = False
        for key in list(work.keys()):
            coef = work.get(key, 0)
            if not coef:
                continue
            pe = key[pi]
            if pe >= 2:
                # c*p^e = c*p^(e-2)*(m + (1+t)p - t)
                del work[key]
                base = list(key)
                base[pi] = pe - 2
                q_acc = q_acc + LaurentPoly(vars, {tuple(base): coef})
                k1 = list(base)
                k1[pi] += 1
                add(work, tuple(k1), coef)  # p^(e-1)
                k2 = list(base)
                k2[pi] += 1
                k2[vars.index("t")] += 1
                add(work, tuple(k2), coef)  # t*p^(e-1)
                k3 = list(base)
                k3[vars.index("t")] += 1
                add(work, tuple(k3), -coef)  # -t*p^(e-2)
                progress = True
            elif pe <= -1:
                # c*p^e = c*t^-1*p^(e+1)*(p^-1*m) + c*t^-1*(1+t)*p^(e+1) - c*t^-1*p^(e+2)
                del work[key]
                ti = vars.index("t")
                base = list(key)
                base[ti] -= 1
                q_acc = q_acc + LaurentPoly(vars, {tuple(base): coef})  # t^-1 p^e
                k1 = list(key)
                k1[pi] = pe + 1
                k1[ti] -= 1
                add(work, tuple(k1), coef)
                k2 = list(k1)
                k2[ti] += 1
                add(work, tuple(k2), coef)  # (1+t) part
                k3 = list(key)
                k3[pi] = pe + 2
                k3[ti] -= 1
                add(work, tuple(k3), -coef)
                progress = True
    return q_acc, LaurentPoly(vars, work)


def _m_poly(vars):
    p2 = LaurentPoly.monomial(vars, 1, p=2)
    p = LaurentPoly.monomial(vars, 1, p=1)
    tp = LaurentPoly.monomial(vars, 1, t=1, p=1)
    t = LaurentPoly.monomial(vars, 1, t=1)
    return p2 - p - tp + t


def _canonical_a(a):
    """Canonical representative of a's class modulo (1-t)*(p-1)*(p-t)."""
    q, r = _divide_by_m(a)
    return q.subs_one("t") * _m_poly(a.vars) + r


class QElement:
    """Canonical element A + B*q of a quotient ring.

    Invariants: B is p-free; A is the canonical representative described in
    the module docstring.  Structural equality is ring equality.
    """

    __slots__ = ("ring", "a", "b")

    def __init__(self, ring, a, b, _canonical=False):
        self.ring = ring
        self.a = a if _canonical else _canonical_a(a)
        self.b = b

    def _check(self, other):
        if not isinstance(other, QElement) or other.ring != self.ring:
            raise VariableSetMismatch(f"{self.ring} vs {getattr(other, 'ring', other)}")

    @property
    def is_zero(self):
        return self.a.is_zero and self.b.is_zero

    def __add__(self, other):
        self._check(other)
        # sums of canonical forms stay canonical (division is linear)
        return QElement(self.ring, self.a + other.a, self.b + other.b, _canonical=True)

    def __neg__(self):
        return QElement(self.ring, -self.a, -self.b, _canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        c = _one_minus_t_one_minus_p(self.a.vars)
        a = self.a * other.a + self.b * other.b * c
        abar = self.a.subs_to_var("p", "t")
        obar = other.a.subs_to_var("p", "t")
        b = abar * other.b + obar * self.b
        return QElement(self.ring, a, b)

    def __pow__(self, n):
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, QElement)
            and self.ring == other.ring
            and self.a == other.a
            and self.b == other.b
        )

    __hash__ = None

    # observables used by unit normalization; all are class invariants
    def a_at_t1(self):
        return self.a.subs_one("t")

    def a_at_p1(self):
        return self.a.subs_one("p")

    def a_at_pt(self):
        return self.a.subs_to_var("p", "t")

    def times_unit(self, sign, t_exp, p_exp):
        u = LaurentPoly.monomial(self.a.vars, sign, t=t_exp, p=p_exp)
        return QElement(
            self.ring, self.a * u, self.b * u.subs_to_var("p", "t")
        )

    def times_q(self):
        """Multiply by q: (A + Bq)*q = B*c + (A at p=t)*q."""
        c = _one_minus_t_one_minus_p(self.a.vars)
        return QElement(self.ring, self.b * c, self.a.subs_to_var("p", "t"))

    def to_full_poly(self):
        """Embed back into the free Laurent ring with explicit q."""
        full = self.ring.full_vars
        qi = full.index("q")
        terms = {}
        for k, v in self.a.terms.items():
            terms[k[:qi] + (0,) + k[qi:]] = v
        for k, v in self.b.terms.items():
            key = k[:qi] + (1,) + k[qi:]
            terms[key] = terms.get(key, 0) + v
        return LaurentPoly(full, terms)

    def render(self):
        return self.to_full_poly().render()

    def __repr__(self):
        return f"<{self.ring.tag}: {self.render()}>"


def g_normalize(ring, raw):
    """Normal form of a raw polynomial (over ring.full_vars) in the quotient."""
    return ring.from_raw(raw)


# ---------------------------------------------------------------------------
# The bigger ring for the module presentation (tag "Rraw")


RAW_VARS = ("t", "p", "q", "s", "r", "w")


class RawRing:
    """Quotient of Z[t^±1, q, p^±1, s^±1, r^±1, w] by the eight relations

        q(p-t) = 0           q^2 = (1-t)(1-p)
        w(1-s) = 0           w(t-r) = 0         w(p-r) = 0
        w(ps+q-1) = 0        w(r+q-1) = 0
        w^2 = (1-t)(1-rs)    w^2 = q(1-rs)

    handled as an oriented rewrite list run to a fixpoint.  The difference of
    the two w^2 relations forces (1-rs)q = (1-rs)(1-t), applied last as a
    polynomial-level rule.  The list is not claimed confluent; reduce() is
    idempotent and sends every relation above to zero, which is all the
    presentation export needs.
    """

    tag = "Rraw"
    vars = RAW_VARS

    def zero(self):
        return RawElement(LaurentPoly.zero(RAW_VARS))

    def one(self):
        return RawElement(LaurentPoly.const(RAW_VARS, 1))

    def element(self, coef=1, **exps):
        return RawElement(LaurentPoly.monomial(RAW_VARS, coef, **exps))

    def __repr__(self):
        return "RawRing()"

    def __eq__(self, other):
        return isinstance(other, RawRing)


def _raw_reduce_poly(poly):
    vars = RAW_VARS
    ti, pi, qi, si, ri, wi = (vars.index(v) for v in ("t", "p", "q", "s", "r", "w"))
    one = LaurentPoly.const(vars, 1)
    t = LaurentPoly.monomial(vars, 1, t=1)
    p = LaurentPoly.monomial(vars, 1, p=1)
    rs = LaurentPoly.monomial(vars, 1, r=1, s=1)
    c_tp = (one - t) * (one - p)
    c_trs = (one - t) * (one - rs)

    def monomial_pass(poly):
        out = LaurentPoly.zero(vars)
        for key, coef in poly.terms.items():
            te, pe, qe, se, re, we = (key[i] for i in (ti, pi, qi, si, ri, wi))
            if qe < 0 or we < 0:
                raise ValueError("q and w are not invertible")
            rest = {name: e for name, e in zip(vars, key)}
            piece = None
            if we >= 1:
                # w absorbs: s->1, r->t, p->t, q->(1-t); then w^2 -> (1-t)(1-rs)
                extra = one
                rest["t"] = te + re + pe
                rest["r"] = rest["p"] = rest["s"] = 0
                if qe:
                    rest["q"] = 0
                    extra = extra * ((one - t) ** qe)
                if we >= 2:
                    rest["w"] = we % 2
                    extra = extra * (c_trs ** (we // 2))
                piece = LaurentPoly.monomial(vars, coef, **rest) * extra
            elif qe >= 1:
                extra = one
                if pe:
                    rest["t"] = te + pe
                    rest["p"] = 0
                if qe >= 2:
                    rest["q"] = qe % 2
                    extra = c_tp ** (qe // 2)
                piece = LaurentPoly.monomial(vars, coef, **rest) * extra
            else:
                piece = LaurentPoly(vars, {key: coef})
            out = out + piece
        return out

    prev = None
    cur = poly
    while prev is None or prev.terms != cur.terms:
        prev = cur
        cur = monomial_pass(cur)

    # final polynomial rule: (1-rs)*q -> (1-rs)*(1-t) on the q-linear part.
    # Write the q-part as q*f(t,s,r); divide f by (rs - 1) via r -> 1/s.
    qpart = {}
    rest = {}
    for key, coef in cur.terms.items():
        (qpart if key[qi] == 1 else rest)[key] = coef
    if qpart:
        f = LaurentPoly(vars, {k[:qi] + (0,) + k[qi + 1 :]: v for k, v in qpart.items()})
        remainder = f.subs_inverse("r", "s")
        diff = f - remainder
        if not diff.is_zero:
            g = _exact_div(diff, rs - one)
            new = LaurentPoly(vars, rest)
            new = new + (rs - one) * (one - t) * g
            qshift = {k[:qi] + (1,) + k[qi + 1 :]: v for k, v in remainder.terms.items()}
            new = new + LaurentPoly(vars, qshift)
            # the added q-free part may admit further monomial reduction
            return _raw_reduce_poly(new) if new.terms != cur.terms else new
    return cur


def _exact_div(dividend, divisor):
    """Exact division, divisor with unit leading coefficient."""
    vars = dividend.vars
    lead_exp, lead_coef = divisor.sorted_terms()[0]
    quot = LaurentPoly.zero(vars)
    rem = dividend
    for _ in range(100000):
        if rem.is_zero:
            return quot
        top_exp, top_coef = rem.sorted_terms()[0]
        delta = {v: e - l for v, e, l in zip(vars, top_exp, lead_exp)}
        if top_coef % lead_coef:
            raise ValueError("division is not exact")
        factor = LaurentPoly.monomial(vars, top_coef // lead_coef, **delta)
        quot = quot + factor
        rem = rem - factor * divisor
    raise ValueError("division did not terminate")


class RawElement:
    """Element of the Rraw ring, reduced to rewrite fixpoint on construction."""

    __slots__ = ("poly",)

    def __init__(self, poly, _reduced=False):
        if poly.vars != RAW_VARS:
            raise VariableSetMismatch(f"{poly.vars} vs {RAW_VARS}")
        self.poly = poly if _reduced else _raw_reduce_poly(poly)

    @property
    def is_zero(self):
        return self.poly.is_zero

    def __add__(self, other):
        return RawElement(self.poly + other.poly)

    def __neg__(self):
        return RawElement(-self.poly, _reduced=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RawElement(self.poly * other.poly)

    def __eq__(self, other):
        return isinstance(other, RawElement) and self.poly == other.poly

    __hash__ = None

    def render(self):
        return self.poly.render()

    def __repr__(self):
        return f"<Rraw: {self.render()}>"


def r_reduce(elem):
    """Rewrite-fixpoint reduction; idempotent by construction."""
    if isinstance(elem, RawElement):
        return RawElement(_raw_reduce_poly(elem.poly), _reduced=False)
    return RawElement(elem)


# ---------------------------------------------------------------------------
# Division-free determinants


def det(rows, ring):
    """Determinant via the Berkowitz vector recurrence.

    Uses only ring addition and multiplication; sound over rings with zero
    divisors.  The 0x0 determinant is the ring one.
    """
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise NonSquare(f"{len(row)} entries in a row of a {n}-row matrix")
    if n == 0:
        return ring.one()
    zero, one = ring.zero(), ring.one()

    def dot(u, v):
        acc = zero
        for a, b in zip(u, v):
            if a.is_zero or b.is_zero:
                continue
            acc = acc + a * b
        return acc

    polys = [one, -rows[0][0]]
    for k in range(1, n):
        akk = rows[k][k]
        row_r = rows[k][:k]
        col_s = [rows[i][k] for i in range(k)]
        sub = [row[:k] for row in rows[:k]]
        items = [one, -akk]
        vec = col_s
        for j in range(k):
            items.append(-dot(row_r, vec))
            if j < k - 1:
                vec = [dot(sub[i], vec) for i in range(k)]
        new = []
        for i in range(k + 2):
            acc = zero
            for j in range(min(i, k) + 1):
                if i - j < len(items):
                    it, pj = items[i - j], polys[j]
                    if not (it.is_zero or pj.is_zero):
                        acc = acc + it * pj
            new.append(acc)
        polys = new
    d = polys[n]
    return d if n % 2 == 0 else -d


def cofactor_det(rows, ring):
    """Naive Laplace expansion along the first row; the test oracle."""
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise NonSquare(f"{len(row)} entries in a row of a {n}-row matrix")
    if n == 0:
        return ring.one()
    if n == 1:
        return rows[0][0]
    acc = ring.zero()
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = entry * cofactor_det(minor, ring)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc
