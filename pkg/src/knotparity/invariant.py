"""Invariant values, unit normalization, and equivalence-up-to-units.

The determinants are defined only up to units +- t^a p^b q^c, so values are
stored as a canonical orbit representative plus the unit that was applied.

Choosing the representative needs care because p-multiplication is not a
plain exponent shift in the quotient ring (q*p = q*t mixes the parts, and
the A-part is only defined modulo (1-t)(p-1)(p-t)).  Three specializations
are class invariants of the A-part and transform cleanly under units:

    A at p=1   -- picks up t^a        (fixes a when nonzero)
    A at t=1   -- picks up p^b        (fixes b when nonzero)
    A at p=t   -- picks up t^(a+b)    (as does the q-part B)

Whenever one of the shifts is left free by vanishing observables, the
corresponding unit action is trivial on the element, so pinning the free
exponent to zero still yields a canonical orbit representative: the result
satisfies canonical(u*x) == canonical(x) exactly.  The sign is fixed by
making the leading coefficient positive in the fixed monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import rings
from .matrix import build_M, build_Npp, build_N_presentation
from .parity import parity_map, hierarchy_types


EQUIVALENT = "EquivalentUpToUnits"
DISTINCT = "Distinct"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class UnitRecord:
    sign: int
    t_shift: int
    p_shift: int
    q_power: int = 0


@dataclass(frozen=True)
class InvariantValue:
    tag: str
    element: object          # canonical orbit representative (QElement)
    record: UnitRecord       # element == sign * t^a * p^b * original

    @property
    def is_zero(self):
        return self.element.is_zero

    def original(self):
        """Undo the normalization."""
        r = self.record
        return self.element.times_unit(r.sign, -r.t_shift, -r.p_shift)

    def render(self):
        return self.element.render()


@dataclass(frozen=True)
class ComparisonResult:
    verdict: str
    unit: UnitRecord | None = None
    expressed: str | None = None   # "second_from_first" | "first_from_second"


def _min_exp(poly, var):
    rng = poly.exponent_range(var)
    return None if rng is None else rng[0]


def normalize(elem):
    """Canonical orbit representative under units +- t^a p^b.

    Returns (representative, UnitRecord) with
    representative == sign * t^a * p^b * elem.
    """
    if elem.is_zero:
        return elem, UnitRecord(1, 0, 0)
    o1 = elem.a_at_t1()
    o2 = elem.a_at_p1()
    o3 = elem.a_at_pt()
    alpha = None if o2.is_zero else -_min_exp(o2, "t")
    beta = None if o1.is_zero else -_min_exp(o1, "p")
    mins = []
    if not o3.is_zero:
        mins.append(_min_exp(o3, "t"))
    if not elem.b.is_zero:
        mins.append(_min_exp(elem.b, "t"))
    delta = None if not mins else -min(mins)
    if alpha is None and beta is None:
        alpha, beta = 0, (delta if delta is not None else 0)
    elif alpha is None:
        alpha = (delta - beta) if delta is not None else 0
    elif beta is None:
        beta = (delta - alpha) if delta is not None else 0
    w = elem.times_unit(1, alpha, beta)
    sign = 1
    if w.to_full_poly().leading_coeff() < 0:
        sign = -1
        w = -w
    return w, UnitRecord(sign, alpha, beta)


def make_value(tag, elem):
    w, rec = normalize(elem)
    return InvariantValue(tag, w, rec)


def s_invariant(d):
    """Determinant invariant of a surface diagram, canonicalized."""
    m = build_M(d, parity_map(d))
    return make_value("G", rings.det(list(map(list, m.entries)), m.ring))


def nprime_invariant(d):
    """Hierarchy invariant of a Gauss diagram, canonicalized."""
    m = build_Npp(d, hierarchy_types(d))
    return make_value("Rprime", rings.det(list(map(list, m.entries)), m.ring))


def n_presentation(d):
    """Presentation matrix of the invariant module (export only)."""
    return build_N_presentation(d, hierarchy_types(d))


def _match(a, b):
    """If canonical orbits agree, the unit with b == sign t^a p^b * a."""
    wa, ra = normalize(a)
    wb, rb = normalize(b)
    if wa == wb:
        return UnitRecord(ra.sign * rb.sign, ra.t_shift - rb.t_shift, ra.p_shift - rb.p_shift)
    return None


def compare(first, second):
    """Decide equivalence up to +- t^a p^b q^c with c in {0, 1}.

    Accepts InvariantValue or bare elements over the same ring.  Zero is
    equivalent only to zero.  The q-power is searched in {0, 1} only: as a
    multiplier, q^2 rewrites to the q-free (1-t)(1-p) and stops acting as a
    monomial unit.
    """
    a = first.original() if isinstance(first, InvariantValue) else first
    b = second.original() if isinstance(second, InvariantValue) else second
    if a.ring != b.ring:
        raise rings.RingMismatch(f"{a.ring} vs {b.ring}")
    if a.is_zero or b.is_zero:
        if a.is_zero and b.is_zero:
            return ComparisonResult(EQUIVALENT, UnitRecord(1, 0, 0), "second_from_first")
        return ComparisonResult(DISTINCT)

    unit = _match(a, b)
    if unit is not None:
        _verify(a, b, unit, "second_from_first")
        return ComparisonResult(EQUIVALENT, unit, "second_from_first")
    qa = a.times_q()
    if not qa.is_zero:
        unit = _match(qa, b)
        if unit is not None:
            unit = UnitRecord(unit.sign, unit.t_shift, unit.p_shift, 1)
            _verify(a, b, unit, "second_from_first")
            return ComparisonResult(EQUIVALENT, unit, "second_from_first")
    qb = b.times_q()
    if not qb.is_zero:
        unit = _match(qb, a)
        if unit is not None:
            unit = UnitRecord(unit.sign, unit.t_shift, unit.p_shift, 1)
            _verify(b, a, unit, "first_from_second")
            return ComparisonResult(EQUIVALENT, unit, "first_from_second")
    return ComparisonResult(DISTINCT)


def _verify(src, dst, unit, expressed):
    prod = src
    for _ in range(unit.q_power):
        prod = prod.times_q()
    prod = prod.times_unit(unit.sign, unit.t_shift, unit.p_shift)
    if prod != dst:
        raise AssertionError("unit witness failed verification")
