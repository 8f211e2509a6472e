import random

from hypothesis import given, settings
from hypothesis import strategies as st

from knotparity.diagram import Passage, parse_file, parse_gauss, Diagram
from knotparity.moves import random_diagram
from knotparity.parity import (
    EVEN,
    ODD,
    chord_data,
    gaussian_parity,
    hierarchy_types,
    parity_map,
)

import pathlib

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def brute_interleave_counts(d):
    """Oracle: pairwise chord interleaving by direct position checks."""
    pos = {}
    k = 0
    for tok in d.tokens:
        if isinstance(tok, Passage):
            pos.setdefault(tok.crossing, []).append(k)
            k += 1
    def inter(c1, c2):
        a, b = sorted(pos[c1])
        return sum(1 for x in pos[c2] if a < x < b) == 1
    return {c: sum(inter(c, o) for o in pos if o != c) for c in pos}


def test_virtual_trefoil_counts():
    d = parse_gauss("vtrefoil: O1+ O2+ U1+ U2+")
    cd = chord_data(d)
    assert cd.counts == {1: 1, 2: 1}
    assert cd.interleave(1, 2) and cd.interleave(2, 1)
    assert gaussian_parity(cd) == {1: ODD, 2: ODD}


def test_classical_trefoil_counts_match_oracle():
    d = parse_gauss("trefoil: O1- U2- O3- U1- O2- U3-")
    cd = chord_data(d)
    assert cd.counts == brute_interleave_counts(d) == {1: 2, 2: 2, 3: 2}
    assert set(gaussian_parity(cd).values()) == {EVEN}


def test_single_crossing_loop():
    d = parse_gauss("kink: O1+ U1+")
    assert chord_data(d).counts == {1: 0}


def test_torus_pair_all_even():
    diagrams, _ = parse_file(FIXTURES / "torus_pair.surf")
    assert len(diagrams) == 2
    for d in diagrams:
        assert set(parity_map(d).values()) == {EVEN}


def test_hierarchy_trefoils():
    assert hierarchy_types(parse_gauss("v: O1+ O2+ U1+ U2+")) == {1: 0, 2: 0}
    assert hierarchy_types(parse_gauss("t: O1- U2- O3- U1- O2- U3-")) == {
        1: 2,
        2: 2,
        3: 2,
    }


def _delete_odd_oracle(d):
    """Oracle for types: delete odd crossings from the code and re-run parity."""
    par = parity_map(d)
    types = {c: 0 for c, v in par.items() if v == ODD}
    toks = tuple(
        t
        for t in d.tokens
        if not (isinstance(t, Passage) and par[t.crossing] == ODD)
    )
    if toks or not types:
        projected = Diagram(d.name, d.genus, toks)
        for c, v in parity_map(projected).items():
            types[c] = 1 if v == ODD else 2
    return types


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 8))
def test_hierarchy_matches_deletion_oracle(seed, n):
    rng = random.Random(seed)
    d = random_diagram(rng, n, 0)
    assert hierarchy_types(d) == _delete_odd_oracle(d)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 7), st.integers(0, 2))
def test_parity_independent_of_basepoint_and_numbering(seed, n, genus):
    rng = random.Random(seed)
    d = random_diagram(rng, n, genus)
    base_par, base_ty = parity_map(d), hierarchy_types(d)
    for k in range(1, len(d.tokens), max(1, len(d.tokens) // 3)):
        r = d.rotated(k)
        assert parity_map(r) == base_par
        assert hierarchy_types(r) == base_ty
    ids = d.crossings
    mapping = {c: 100 + c for c in ids}
    rn = d.renumbered(mapping)
    assert parity_map(rn) == {mapping[c]: v for c, v in base_par.items()}
    assert hierarchy_types(rn) == {mapping[c]: v for c, v in base_ty.items()}


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 8))
def test_total_interlacement_even(seed, n):
    rng = random.Random(seed)
    d = random_diagram(rng, n, 0)
    assert sum(chord_data(d).counts.values()) % 2 == 0


def test_type_zero_iff_odd():
    rng = random.Random(5)
    for _ in range(30):
        d = random_diagram(rng, rng.randint(1, 8), 0)
        par, ty = parity_map(d), hierarchy_types(d)
        for c in d.crossings:
            assert (ty[c] == 0) == (par[c] == ODD)
