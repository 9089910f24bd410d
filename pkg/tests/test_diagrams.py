"""Diagram builders, family specs, custom loading and Reidemeister moves."""

import json

import pytest

from knotgrowth.diagrams import (
    Crossing,
    Diagram,
    apply_reidemeister,
    build_conway,
    build_conway_mln,
    build_double_twist,
    build_family,
    build_hopf,
    build_torus2,
    build_trivial,
    build_twist,
    conway_with_traces,
    crossing,
    diagram_from_dict,
    diagram_to_dict,
    double_twist_arc_values,
    load_pd,
    parse_family_spec,
    r1_insert,
    r1_remove,
    r2_insert,
    r2_remove,
    r3_move,
)
from knotgrowth.errors import MoveError, ParameterError


def test_crossing_normalizes_under_pair():
    assert Crossing(0, (2, 1)).under == (1, 2)
    assert crossing(5, 7, 3).arcs() == (5, 3, 7)


def test_diagram_validation():
    with pytest.raises(ParameterError):
        Diagram(0, ())
    with pytest.raises(ParameterError):
        Diagram(2, (crossing(0, 1, 2),))
    with pytest.raises(ParameterError):
        Diagram(2, (), arc_names=("a",))


def test_diagram_equality_ignores_crossing_order():
    a = Diagram(3, (crossing(0, 1, 2), crossing(1, 2, 0)))
    b = Diagram(3, (crossing(1, 2, 0), crossing(0, 1, 2)))
    assert a == b
    assert hash(a) == hash(b)
    assert a != Diagram(3, (crossing(0, 1, 2),))


def test_trivial_and_hopf():
    t = build_trivial()
    assert (t.arc_count, t.crossings) == (1, ())
    h = build_hopf()
    assert h == build_torus2(2)
    assert h.arc_count == 2


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_torus_structure(n):
    d = build_torus2(n)
    assert d.arc_count == n
    assert len(d.crossings) == n
    for i, c in enumerate(d.crossings):
        assert c.over == (i + 1) % n
        assert set(c.under) == {i % n, (i + 2) % n} or c.under[0] == c.under[1]
    assert d.has_even_under_parity()


def test_double_twist_structure():
    d = build_double_twist(2, 2)
    assert d.arc_count == 4
    assert len(d.crossings) == 4
    assert d.has_even_under_parity()
    assert double_twist_arc_values(2, 2) == (0, 1, 2, 3)
    assert double_twist_arc_values(2, 4) == (0, 1, 2, 3, 5, 7)
    assert d.arc_names == ("a0", "a1", "a2", "a3")
    # the one-anticlockwise-twist case reduces to the torus braid
    assert build_double_twist(4, 1) == build_torus2(5)
    assert build_twist(3) == build_double_twist(3, 2)


@pytest.mark.parametrize("n,l", [(1, 1), (2, 2), (3, 2), (2, 4), (4, 3)])
def test_double_twist_parity_and_size(n, l):
    d = build_double_twist(n, l)
    assert d.arc_count == n + l
    assert len(d.crossings) == n + l
    assert d.has_even_under_parity()


def test_conway_single_region_is_torus():
    for n in (1, 2, 3):
        assert build_conway((n,)) == build_torus2(n)
    # beyond three crossings the plat labeling differs by a relabeling
    from knotgrowth.presentation import are_isomorphic, presentation_from_diagram

    assert are_isomorphic(
        presentation_from_diagram(build_conway((5,))),
        presentation_from_diagram(build_torus2(5)),
    )


def test_conway_traces_have_region_lengths():
    d, traces = conway_with_traces((2, 1, 2))
    assert [len(t) for t in traces] == [4, 3, 4]
    assert d.arc_count == 5
    assert len(d.crossings) == 5
    assert d.has_even_under_parity()
    assert build_conway_mln(2, 1, 2) == d


def test_conway_rejects_bad_twists():
    with pytest.raises(ParameterError):
        build_conway(())
    with pytest.raises(ParameterError):
        build_conway((2, 0))


def test_parse_family_spec():
    assert parse_family_spec("trivial").kind == "trivial"
    assert parse_family_spec("torus2:5").params == (5,)
    assert parse_family_spec("dtw:2,4").params == (2, 4)
    assert parse_family_spec("conway:2,1,2").params == (2, 1, 2)
    assert parse_family_spec("cmln:1,1,2").params == (1, 1, 2)
    for bad in ("hopf:2", "torus2", "torus2:x", "dtw:2", "nosuch", "cmln:1,2"):
        with pytest.raises(ParameterError):
            parse_family_spec(bad)


def test_build_family_dispatch():
    assert build_family(parse_family_spec("hopf")) == build_hopf()
    assert build_family(parse_family_spec("twist:3")) == build_twist(3)
    assert build_family(parse_family_spec("conway:3")) == build_torus2(3)
    assert build_family(parse_family_spec("cmln:1,1,2")) == build_conway_mln(1, 1, 2)


def test_pd_round_trip(tmp_path):
    d = build_double_twist(2, 2)
    path = tmp_path / "d.json"
    path.write_text(json.dumps(diagram_to_dict(d)))
    loaded = load_pd(path)
    assert loaded == d
    with pytest.raises(ParameterError):
        diagram_from_dict({"arcs": 2, "crossings": [{"over": 5, "under": [0, 1]}]})
    with pytest.raises(ParameterError):
        diagram_from_dict({"crossings": []})


# -- moves --------------------------------------------------------------------


def test_r1_insert_then_remove():
    tre = build_torus2(3)
    for end in (0, 1):
        kinked = apply_reidemeister(tre, r1_insert(0, end=end))
        assert kinked.arc_count == 4
        assert len(kinked.crossings) == 4
        restored = apply_reidemeister(kinked, r1_remove(3))
        assert restored == tre


def test_r1_on_closed_arc():
    knot = apply_reidemeister(build_trivial(), r1_insert(0))
    assert knot.arc_count == 2
    assert knot.crossings == (Crossing(1, (0, 1)),)
    # the formal split leaves arc 0 with a single under-endpoint
    assert not knot.has_even_under_parity()
    assert apply_reidemeister(knot, r1_remove(0)) == build_trivial()
    with pytest.raises(MoveError):
        apply_reidemeister(build_trivial(), r1_insert(0, end=1))


def test_r2_insert_then_remove():
    tre = build_torus2(3)
    pushed = apply_reidemeister(tre, r2_insert(0, 1, end=1))
    assert pushed.arc_count == 5
    assert len(pushed.crossings) == 5
    assert pushed.crossings[3].over == 1 and pushed.crossings[4].over == 1
    restored = apply_reidemeister(pushed, r2_remove(3, 4))
    assert restored == tre


def test_r2_remove_rejects_non_bigons():
    tre = build_torus2(3)
    with pytest.raises(MoveError):
        apply_reidemeister(tre, r2_remove(0, 1))  # over arcs differ
    d = Diagram(4, (crossing(0, 1, 2), crossing(0, 2, 3), crossing(1, 2, 2)))
    # middle arc 2 is used elsewhere
    with pytest.raises(MoveError):
        apply_reidemeister(d, r2_remove(0, 1))


def test_r1_remove_requires_kink():
    tre = build_torus2(3)
    with pytest.raises(MoveError):
        apply_reidemeister(tre, r1_remove(0))
    with pytest.raises(MoveError):
        apply_reidemeister(tre, r1_remove(7))


def test_r3_rewrite_and_involution():
    d = Diagram(6, (crossing(0, 1, 2), crossing(2, 3, 4), crossing(0, 4, 5)))
    e = apply_reidemeister(d, r3_move(0, 1, 2))
    assert e.crossings[1] == Crossing(1, (4, 5))
    assert e.crossings[2] == Crossing(0, (3, 4))
    assert apply_reidemeister(e, r3_move(0, 1, 2)) == d
    # crossing order in the move description is irrelevant
    assert apply_reidemeister(d, r3_move(2, 0, 1)) == e
    with pytest.raises(MoveError):
        apply_reidemeister(build_torus2(3), r3_move(0, 1, 2))


def test_move_descriptions_validate():
    from knotgrowth.diagrams import ReidemeisterMove

    with pytest.raises(ParameterError):
        ReidemeisterMove("r9")
    with pytest.raises(ParameterError):
        ReidemeisterMove("r1", "sideways")
    with pytest.raises(ParameterError):
        ReidemeisterMove("r3", "remove")
    tre = build_torus2(3)
    with pytest.raises(MoveError):
        apply_reidemeister(tre, r1_insert(9))
    with pytest.raises(MoveError):
        apply_reidemeister(tre, r1_insert(0, end=5))
    with pytest.raises(MoveError):
        apply_reidemeister(tre, r2_insert(0, None))
