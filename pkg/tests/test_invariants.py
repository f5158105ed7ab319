from fractions import Fraction as F

import pytest

from morsetwist.catalog import get_example
from morsetwist.errors import ZeroClass
from morsetwist.invariants import (
    check_inequalities,
    hspace_obstruction,
    novikov_numbers,
    parallel_form_obstruction,
    rank_of_class,
)
from morsetwist.morse import LocalSystem

CIRCLE = get_example("circle-std").datum
TORUS = get_example("torus").datum
KLEIN = get_example("klein").datum
GENUS2 = get_example("genus2").datum
RP2 = get_example("rp2").datum


def test_novikov_numbers_torus():
    nn = novikov_numbers(TORUS, (F(1), F(0)))
    assert nn.b == (0, 0, 0) and nn.q == (0, 0, 0) and nn.complete
    nn0 = novikov_numbers(TORUS, (F(0), F(0)))
    assert nn0.b == (1, 2, 1) and nn0.q == (0, 0, 0)


def test_novikov_numbers_klein():
    nn0 = novikov_numbers(KLEIN, (F(0),))
    assert nn0.b == (1, 1, 0) and nn0.q == (0, 1, 0)
    nn = novikov_numbers(KLEIN, (F(2, 3),))
    assert nn.b == (0, 0, 0) and nn.q == (0, 0, 0)


def test_check_inequalities_genus2():
    nn = novikov_numbers(GENUS2, (F(1), F(0), F(0), F(0)))
    rep = check_inequalities((1, 4, 1), nn)
    assert rep.slack == (1, 2, 1)
    assert rep.passed


def test_check_inequalities_circle_and_failure():
    nn = novikov_numbers(CIRCLE, (F(1),))
    rep = check_inequalities((1, 1), nn)
    assert rep.slack == (1, 1) and rep.passed

    nn0 = novikov_numbers(TORUS, (F(0), F(0)))
    rep = check_inequalities((0, 2, 1), nn0)
    assert not rep.passed
    assert rep.slack[0] < 0


def test_hspace_obstruction_matrix():
    assert hspace_obstruction(GENUS2, LocalSystem.exp((F(1), F(0), F(0), F(0)))).triggered
    assert hspace_obstruction(RP2, LocalSystem.unit_rep()).triggered
    assert not hspace_obstruction(TORUS, LocalSystem.exp((F(1), F(0)))).triggered
    assert not hspace_obstruction(TORUS, LocalSystem.trivial()).triggered
    assert hspace_obstruction(get_example("rpn(4)").datum,
                              LocalSystem.unit_rep()).triggered
    assert not hspace_obstruction(get_example("rpn(3)").datum,
                                  LocalSystem.unit_rep()).triggered


def test_hspace_never_triggered_for_trivial():
    for name in ["circle-std", "rp2", "torus", "klein", "genus2"]:
        d = get_example(name).datum
        assert not hspace_obstruction(d, LocalSystem.trivial()).triggered


def test_parallel_form_obstruction():
    v = parallel_form_obstruction(GENUS2, (F(1), F(0), F(0), F(0)))
    assert v.triggered
    assert "Euler" in v.witness
    assert not parallel_form_obstruction(TORUS, (F(1), F(0))).triggered
    with pytest.raises(ZeroClass):
        parallel_form_obstruction(RP2, (F(0),))


def test_rank_of_class():
    assert rank_of_class(CIRCLE, (F(1),)) == 1
    assert rank_of_class(CIRCLE, (F(0),)) == 0
    assert rank_of_class(GENUS2, (F(1), F(1), F(0), F(0))) == 1


def test_novikov_euler_identity():
    from morsetwist.chains import euler_cells
    from morsetwist.morse import build_complex
    for name, cls in [("circle-std", (F(1),)), ("torus", (F(1), F(2))),
                      ("klein", (F(1),)),
                      ("genus2", (F(1), F(-2), F(1, 3), F(0)))]:
        d = get_example(name).datum
        nn = novikov_numbers(d, cls)
        assert nn.complete
        chi = euler_cells(build_complex(d, LocalSystem.trivial()))
        assert sum((-1) ** k * b for k, b in enumerate(nn.b)) == chi


def test_prop_zero_class_matches_int_homology():
    from morsetwist.chains import homology
    from morsetwist.morse import build_complex
    for name in ["circle-std", "rp2", "torus", "klein", "genus2"]:
        d = get_example(name).datum
        zero = (F(0),) * len(d.basis_forms)
        nn = novikov_numbers(d, zero)
        s = homology(build_complex(d, LocalSystem.trivial()))
        assert nn.b == s.betti
        assert nn.q == tuple(len(x.torsion) for x in s.degrees)
