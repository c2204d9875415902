from itertools import islice, permutations

import pytest

from tddelaunay.represent import Representation, sigma, standardness, standardness_from_complex
from tddelaunay.tdsystem import decide, find_multiflow, verify_multiflow
from tddelaunay.witness import (
    CounterexampleReport,
    candidate_family,
    counterexample_representation,
    deduce_middle_orders,
    exhaustive_middle_orders,
    fixed_multiflow,
)

from oracles import sigma_bruteforce

F = frozenset
MAXIMA = ("a", "b", "c", "d")
# order of e, f, g, h between the three smallest elements and the maximum
TAILS = {"a": tuple("egfh"), "b": tuple("ehfg"), "c": tuple("fgeh"), "d": tuple("fheg")}


@pytest.fixture(scope="module")
def delta():
    return sigma(counterexample_representation())


def test_orders():
    r = counterexample_representation()
    assert r.orders[2] == tuple("abdfgehc")
    assert r.elements == tuple("abcdefgh")


def test_complex_shape(delta):
    assert delta == sigma_bruteforce(counterexample_representation())
    assert len(delta) == 76 and len(delta.nonempty_faces()) == 75
    assert len(delta.edges()) == 23
    four = sorted("".join(sorted(f)) for f in delta.k_faces(3))
    assert four == [
        "abcf", "abdf", "acde", "aceh", "acfh", "adef", "aefh",
        "bcde", "bcef", "bdeg", "bdfg", "befg", "cefh", "defg",
    ]
    assert delta.dimension == 3
    missing = {F(p) for p in ("ag", "bh", "cg", "dh", "gh")}
    assert {F(p) for p in permutations("abcdefgh", 2)} - {F(e) for e in delta.edges()} == missing


@pytest.mark.parametrize("face", ["ebcd", "acde", "abdf", "abcf"])
def test_fourth_smallest_faces(delta, face):
    assert F(face) in delta


@pytest.mark.parametrize("face", ["beg", "hea", "gdf", "chf", "cef", "def", "aef", "bef", "cefh"])
def test_ordering_faces(delta, face):
    assert F(face) in delta


def test_standard(delta):
    assert standardness_from_complex(delta, 4) == MAXIMA
    rep = standardness(counterexample_representation())
    assert rep.is_standard and tuple(sorted(rep.maxima)) == MAXIMA


def test_deduced_middle_orders(delta):
    for tops in permutations(MAXIMA):
        per_order = deduce_middle_orders(delta, tops)
        assert [o for o in per_order] == [[TAILS[t]] for t in tops]


@pytest.mark.parametrize("tops", [tuple("abcd"), tuple("dcba"), tuple("badc")])
def test_exhaustive_agrees(delta, tops):
    assert exhaustive_middle_orders(delta, tops) == [tuple(TAILS[t] for t in tops)]


def test_non_standard_complex_rejected():
    flat = Representation((tuple("abc"),) * 4)
    with pytest.raises(ValueError, match="standard"):
        next(candidate_family(sigma(flat), 4))


def test_raw_family(delta):
    count = 0
    original = counterexample_representation()
    seen_original = False
    for r in candidate_family(delta):
        count += 1
        seen_original |= r == original
    assert count == 24 * 6 ** 4 == 31104
    assert seen_original


def test_sampled_candidates(delta):
    for r in islice(candidate_family(delta), 0, 31104, 997):
        assert sigma(r) == delta
        assert verify_multiflow(r, fixed_multiflow(r))
        m = find_multiflow(r)
        assert m is not None and verify_multiflow(r, m)
        assert not decide(r).feasible


def test_original_certificate():
    r = counterexample_representation()
    m = find_multiflow(r)
    assert verify_multiflow(r, m)
    fixed = fixed_multiflow(r)
    # the LP lands on a positive multiple of the drawn flow
    scale = next(iter(m.flows[0].values())) / next(iter(fixed.flows[0].values()))
    assert all(
        {a: v * scale for a, v in f.items()} == g for f, g in zip(fixed.flows, m.flows)
    )


def test_report_summary():
    report = CounterexampleReport(sigma(counterexample_representation()), 2, 1, False, feasible=["x"])
    text = report.summary()
    assert "raw candidates: 2" in text and "FEASIBLE candidates: ['x']" in text
    assert not report.fixed_flow_all_valid


def test_exhaustive_family_matches(delta):
    fast = {r.orders for r in candidate_family(delta)}
    full = {r.orders for r in candidate_family(delta, exhaustive=True)}
    assert fast == full and len(full) == 31104
