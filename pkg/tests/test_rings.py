import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotparity.rings import (
    LaurentPoly,
    NonSquare,
    RawRing,
    VariableSetMismatch,
    cofactor_det,
    det,
    divides_exactly,
    g_ring,
    r_reduce,
    rprime_ring,
)


G = g_ring(1)
RP = rprime_ring()
RR = RawRing()


def rand_raw(rng, ring, terms=4, qmax=2):
    raw = LaurentPoly.zero(ring.full_vars)
    exps = {}
    for _ in range(rng.randint(1, terms)):
        for v in ring.full_vars:
            if v == "q":
                exps[v] = rng.randint(0, qmax)
            else:
                exps[v] = rng.randint(-2, 2)
        raw = raw + LaurentPoly.monomial(ring.full_vars, rng.randint(-3, 3), **exps)
    return raw


def rand_elem(rng, ring, terms=4):
    return ring.from_raw(rand_raw(rng, ring, terms))


def rand_matrix_elem(rng, ring):
    """Matrix-entry distribution: sparse, small exponents, ~30% zeros.

    Mirrors the shape of entries the diagram matrices actually produce and
    keeps the cofactor-expansion oracle affordable at size 6.
    """
    if rng.random() < 0.3:
        return ring.zero()
    raw = LaurentPoly.zero(ring.full_vars)
    for _ in range(rng.randint(1, 2)):
        exps = {
            v: (rng.randint(0, 1) if v == "q" else rng.randint(-1, 1))
            for v in ring.full_vars
        }
        raw = raw + LaurentPoly.monomial(ring.full_vars, rng.randint(-2, 2), **exps)
    return ring.from_raw(raw)


# --- plain polynomials -------------------------------------------------------


def test_poly_expansion():
    vars = ("t", "p")
    one = LaurentPoly.const(vars, 1)
    t = LaurentPoly.monomial(vars, 1, t=1)
    p = LaurentPoly.monomial(vars, 1, p=1)
    prod = (one - t) * (one - p)
    assert prod == one - t - p + t * p


def test_poly_add_identity_and_squares():
    vars = ("t", "x1")
    t = LaurentPoly.monomial(vars, 1, t=1)
    xinv = LaurentPoly.monomial(vars, 1, x1=-1)
    zero = LaurentPoly.zero(vars)
    assert (t + zero) == t
    assert (t + xinv) * (t - xinv) == t * t - xinv * xinv


def test_poly_variable_set_mismatch():
    a = LaurentPoly.const(("t",), 1)
    b = LaurentPoly.const(("t", "p"), 1)
    with pytest.raises(VariableSetMismatch):
        a + b


# --- quotient rings ----------------------------------------------------------


def test_quotient_relations():
    one, t, p, q = G.one(), G.element(t=1), G.element(p=1), G.element(q=1)
    assert q * p == t * q
    assert q * q == (one - t) * (one - p)
    assert (one + q) * (one - q) == t + p - t * p


def test_derived_qfree_relation_vanishes():
    one, t, p = G.one(), G.element(t=1), G.element(p=1)
    assert ((one - t) * (p - one) * (p - t)).is_zero


def test_rprime_relations():
    one = RP.one()
    s, q, p, t = (RP.element(**{v: 1}) for v in ("s", "q", "p", "t"))
    assert s * q * p == s * t * q
    assert q * q * RP.element(s=-1) == RP.element(s=-1) * (one - t) * (one - p)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_ring_axioms_on_canonical_forms(seed):
    rng = random.Random(seed)
    ring = G if seed % 2 == 0 else RP
    a, b, c = (rand_elem(rng, ring, 3) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_normalize_is_ring_homomorphism(seed):
    rng = random.Random(seed)
    ring = G if seed % 2 == 0 else RP
    x, y = rand_raw(rng, ring), rand_raw(rng, ring)
    assert ring.from_raw(x * y) == ring.from_raw(x) * ring.from_raw(y)
    assert ring.from_raw(x + y) == ring.from_raw(x) + ring.from_raw(y)


def naive_fixpoint_pair(ring, raw):
    """Oracle: rewrite q^2 -> (1-t)(1-p) and q*p^k -> q*t^k to a fixpoint,
    returning the (A, B) parts without the deeper canonicalization."""
    vars = ring.full_vars
    qi = vars.index("q")
    pi = vars.index("p")
    ti = vars.index("t")
    work = dict(raw.terms)
    changed = True
    while changed:
        changed = False
        for key, coef in list(work.items()):
            if not coef or key not in work:
                continue
            qe, pe = key[qi], key[pi]
            if qe >= 2:
                del work[key]
                base = list(key)
                base[qi] = qe - 2
                for dt, dp, c2 in ((0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)):
                    k2 = list(base)
                    k2[ti] += dt
                    k2[pi] += dp
                    k2 = tuple(k2)
                    work[k2] = work.get(k2, 0) + coef * c2
                    if work[k2] == 0:
                        del work[k2]
                changed = True
            elif qe == 1 and pe != 0:
                del work[key]
                k2 = list(key)
                k2[ti] += pe
                k2[pi] = 0
                k2 = tuple(k2)
                work[k2] = work.get(k2, 0) + coef
                if work[k2] == 0:
                    del work[k2]
                changed = True
    a, b = {}, {}
    for key, coef in work.items():
        stripped = key[:qi] + key[qi + 1 :]
        (a if key[qi] == 0 else b)[stripped] = coef
    av = vars[:qi] + vars[qi + 1 :]
    return LaurentPoly(av, a), LaurentPoly(av, b)


def uc_poly(vars):
    one = LaurentPoly.const(vars, 1)
    t = LaurentPoly.monomial(vars, 1, t=1)
    p = LaurentPoly.monomial(vars, 1, p=1)
    return (one - t) * (p - one) * (p - t)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_normal_form_agrees_with_fixpoint_oracle(seed):
    # the oracle pair equals the canonical pair up to the forced q-free
    # relation (1-t)(p-1)(p-t); B parts agree on the nose
    rng = random.Random(seed)
    ring = G if seed % 2 == 0 else RP
    raw = rand_raw(rng, ring)
    elem = ring.from_raw(raw)
    a_fix, b_fix = naive_fixpoint_pair(ring, raw)
    assert b_fix == elem.b
    assert divides_exactly(uc_poly(elem.a.vars), a_fix - elem.a)


# --- the big ring ------------------------------------------------------------


def test_r_reduce_examples():
    one, t = RR.one(), RR.element(t=1)
    w, s, p, q, r = (RR.element(**{v: 1}) for v in ("w", "s", "p", "q", "r"))
    assert w * s == w
    assert w * RR.element(s=-1) == w
    assert w * p == w * t
    assert w * q == w * (one - t)
    assert r_reduce(w * RR.element(r=-3)) == w * RR.element(t=-3)


def test_r_reduce_kills_every_defining_relation():
    one, t = RR.one(), RR.element(t=1)
    w, s, p, q, r = (RR.element(**{v: 1}) for v in ("w", "s", "p", "q", "r"))
    rs = RR.element(r=1, s=1)
    relations = [
        q * (p - t),
        q * q - (one - t) * (one - p),
        w * (one - s),
        w * (t - r),
        w * w - (one - t) * (one - rs),
        w * (p * s + q - one),
        w * (r + q - one),
        w * (p - r),
        w * w - q * (one - rs),
    ]
    for rel in relations:
        assert rel.is_zero, rel.render()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_r_reduce_idempotent(seed):
    rng = random.Random(seed)
    e = RR.zero()
    for _ in range(rng.randint(1, 4)):
        e = e + RR.element(
            rng.randint(-3, 3),
            t=rng.randint(-1, 1),
            p=rng.randint(-1, 1),
            q=rng.randint(0, 2),
            s=rng.randint(-1, 1),
            r=rng.randint(-1, 1),
            w=rng.randint(0, 2),
        )
    assert r_reduce(e) == e


# --- determinants ------------------------------------------------------------


def test_det_small_shapes():
    rng = random.Random(1)
    a, b, c, d = (rand_elem(rng, G, 2) for _ in range(4))
    assert det([[a]], G) == a
    assert det([[a, b], [c, d]], G) == a * d - b * c
    assert det([], G) == G.one()


def test_det_identity_all_sizes():
    for n in range(0, 9):
        eye = [[G.one() if i == j else G.zero() for j in range(n)] for i in range(n)]
        assert det(eye, G) == G.one()


def test_det_matches_cofactor_oracle():
    rng = random.Random(7)
    for trial in range(20):
        n = rng.randint(1, 5)
        m = [[rand_matrix_elem(rng, G) for _ in range(n)] for _ in range(n)]
        assert det(m, G) == cofactor_det(m, G)


def test_det_row_swap_and_repeated_row():
    rng = random.Random(9)
    n = 5
    m = [[rand_matrix_elem(rng, G) for _ in range(n)] for _ in range(n)]
    swapped = [m[1], m[0]] + m[2:]
    assert det(swapped, G) == -det(m, G)
    repeated = [m[0], m[0]] + m[2:]
    assert det(repeated, G).is_zero


def test_det_rejects_non_square():
    with pytest.raises(NonSquare):
        det([[G.one(), G.zero()]], G)


def test_render_is_deterministic():
    rng = random.Random(3)
    e = rand_elem(rng, G)
    assert e.render() == e.render()
    # fixed order: highest graded-lex monomial first
    one, t = G.one(), G.element(t=1)
    assert (one + t).render() == "t + 1"
    assert (one - t).render() == "-t + 1"
