"""Reading presentations off diagrams and manipulating them."""

import pytest

from knotgrowth.diagrams import Diagram, build_hopf, build_torus2, build_trivial, crossing
from knotgrowth.errors import ParameterError
from knotgrowth.presentation import (
    Presentation,
    are_isomorphic,
    presentation_from_diagram,
)


def test_trefoil_relations():
    pres = presentation_from_diagram(build_torus2(3))
    # crossing (y; x, z) contributes xy=yz and yx=zy
    assert pres.alphabet_size == 3
    assert pres.relations == (
        ((0, 1), (1, 2)),
        ((0, 1), (2, 0)),
        ((0, 2), (1, 0)),
        ((0, 2), (2, 1)),
        ((1, 0), (2, 1)),
        ((1, 2), (2, 0)),
    )
    assert pres.format_word((0, 1)) == "a b"


def test_degenerate_crossings():
    # both under arcs equal: one commuting relation
    hopf = presentation_from_diagram(build_hopf())
    assert hopf.relations == (((0, 1), (1, 0)),)
    # all three arcs equal: no relation at all
    kink = Diagram(1, (crossing(0, 0, 0),))
    assert presentation_from_diagram(kink).relations == ()
    assert presentation_from_diagram(build_trivial()).relations == ()


def test_relation_normalization_and_validation():
    p = Presentation(2, (((1, 0), (0, 1)), ((0, 1), (1, 0))))
    assert p.relations == (((0, 1), (1, 0)),)
    with pytest.raises(ParameterError):
        Presentation(2, (((0,), (0, 1)),))  # not length-preserving
    with pytest.raises(ParameterError):
        Presentation(2, (((0, 2), (1, 0)),))  # letter out of range
    with pytest.raises(ParameterError):
        Presentation(2, (((), ()),))
    with pytest.raises(ParameterError):
        Presentation(0, ())
    with pytest.raises(ParameterError):
        Presentation(2, (), letter_names=("a", "b", "c"))


def test_relabel():
    pres = presentation_from_diagram(build_torus2(3))
    cycled = pres.relabel((1, 2, 0))
    # the trefoil relation set is invariant under the arc cycle
    assert cycled.relations == pres.relations
    assert cycled.letter_names == ("c", "a", "b")
    with pytest.raises(ParameterError):
        pres.relabel((0, 0, 1))


def test_are_isomorphic():
    tre = presentation_from_diagram(build_torus2(3))
    assert are_isomorphic(tre, tre.relabel((2, 0, 1)))
    assert not are_isomorphic(tre, presentation_from_diagram(build_torus2(5)))
    square = presentation_from_diagram(build_torus2(4))
    assert not are_isomorphic(square, presentation_from_diagram(build_hopf()))
    with pytest.raises(ParameterError):
        big = Presentation(10, ())
        are_isomorphic(big, big)


def test_json_round_trip():
    pres = presentation_from_diagram(build_torus2(3))
    again = Presentation.from_dict(pres.to_dict())
    assert again == pres
    with pytest.raises(ParameterError):
        Presentation.from_dict({"relations": []})
    with pytest.raises(ParameterError):
        Presentation.from_dict({"alphabet": 2, "relations": [[[0, 1]]]})
