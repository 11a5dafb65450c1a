from fractions import Fraction

import pytest

import pperm


def test_vertices_and_faces():
    assert len(pperm.vertices(2, 2)) == 5
    assert pperm.f_vector(3, 3) == [16, 24, 10, 1]
    assert len(pperm.facets(3, 3)) == 10


def test_volume_engines_agree():
    values = {v for _, v in pperm.nvol_all_methods(3, 3)}
    assert values == {Fraction(129)}
    assert pperm.nvol(4, 2, "oracle") == 77


def test_ehrhart():
    assert pperm.ehrhart(3, 2) == [1, Fraction(9, 2), Fraction(15, 2), 4]
    assert pperm.ehrhart(3, 3, "recurrence") == pperm.ehrhart(3, 3)
    assert pperm.is_conjectural("conjecture")
    # lattice points at t = 1
    assert sum(pperm.ehrhart(3, 2)) == pperm.count_points(3, 2, 1)


def test_polynomials():
    assert pperm.nvol_poly(3) == [-6, -9, 0, 6]
    assert pperm.nvol_poly(2, shifted=True) == [1, 4, 2]
    h = pperm.h_poly(3, 3)
    assert h == h[::-1]


def test_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        pperm.ehrhart(3, 3, "magic")
    with pytest.raises(ValueError):
        pperm.h_poly(0, 2)
