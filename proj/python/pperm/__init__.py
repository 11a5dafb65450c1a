"""Exact invariants of partial permutohedra P(m, n)."""

from fractions import Fraction

from . import _core

__all__ = [
    "vertices",
    "facets",
    "count_points",
    "f_vector",
    "h_poly",
    "nvol",
    "nvol_all_methods",
    "nvol_poly",
    "ehrhart",
    "is_conjectural",
    "draconian_count",
]

vertices = _core.vertices
facets = _core.facets
count_points = _core.count_points
f_vector = _core.f_vector
is_conjectural = _core.is_conjectural
draconian_count = _core.draconian_count


def _frac(s):
    return Fraction(s)


def h_poly(m, n, method="closed"):
    """Coefficients of the h-polynomial, constant term first."""
    return [int(c) for c in _core.h_poly(m, n, method)]


def nvol(m, n, method="recursive"):
    return int(_core.nvol(m, n, method))


def nvol_all_methods(m, n):
    """List of (method, value) pairs, one per applicable engine."""
    return [(name, _frac(v)) for name, v in _core.nvol_all_methods(m, n)]


def nvol_poly(m, shifted=False):
    """v(m, n) as a polynomial in n, or in N = n - m + 1 when shifted."""
    return [_frac(c) for c in _core.nvol_poly(m, shifted)]


def ehrhart(m, n, method="interpolate"):
    return [_frac(c) for c in _core.ehrhart(m, n, method)]
