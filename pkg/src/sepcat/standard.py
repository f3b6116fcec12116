"""Small standard presentations: building blocks for tests, demos and fixtures."""

from __future__ import annotations

from .category import LinearCategory
from .scalars import Field


def point_category(field: Field, name: str = "C1") -> LinearCategory:
    """One object, End = k: the base field as a category."""
    one = field.one()
    return LinearCategory(
        field, ["pt"],
        {("pt", "pt"): 1},
        {("pt", "pt", "pt"): [[(one,)]]},
        {"pt": (one,)},
        basis_labels={("pt", "pt", 0): "id"},
        name=name)


def a2_quiver_category(field: Field, name: str = "C2") -> LinearCategory:
    """Two objects 1 → 2 with a single arrow a, the A2 quiver category."""
    one = field.one()
    return LinearCategory(
        field, ["1", "2"],
        {("1", "1"): 1, ("2", "2"): 1, ("1", "2"): 1},
        {
            ("1", "1", "1"): [[(one,)]],
            ("2", "2", "2"): [[(one,)]],
            ("1", "1", "2"): [[(one,)]],   # a∘id_1 = a
            ("1", "2", "2"): [[(one,)]],   # id_2∘a = a
        },
        {"1": (one,), "2": (one,)},
        basis_labels={("1", "2", 0): "a"},
        name=name)


def two_point_category(field: Field, name: str = "C3") -> LinearCategory:
    """Two objects x, y with End = k each and no cross homs."""
    one = field.one()
    return LinearCategory(
        field, ["x", "y"],
        {("x", "x"): 1, ("y", "y"): 1},
        {("x", "x", "x"): [[(one,)]], ("y", "y", "y"): [[(one,)]]},
        {"x": (one,), "y": (one,)},
        name=name)


def dual_numbers_category(field: Field, name: str = "Cd") -> LinearCategory:
    """One object with End = k[ε]/(ε²), basis {id, ε}."""
    one, zero = field.one(), field.zero()
    table = [
        [(one, zero), (zero, one)],
        [(zero, one), (zero, zero)],
    ]
    return LinearCategory(
        field, ["pt"],
        {("pt", "pt"): 2},
        {("pt", "pt", "pt"): table},
        {"pt": (one, zero)},
        basis_labels={("pt", "pt", 0): "id", ("pt", "pt", 1): "eps"},
        name=name)


def cyclotomic_point_category(field: Field | None = None, name: str = "Cw") -> LinearCategory:
    """One object with End = Q(ω) = Q[w]/(w² + w + 1), basis {1, w}."""
    field = field or Field.rationals()
    if not field.is_rational:
        raise ValueError("the cyclotomic point category is a rational fixture")
    one, zero = field.one(), field.zero()
    minus = -one
    # products in basis {1, w}: 1·1 = 1, 1·w = w·1 = w, w·w = −1 − w
    table = [
        [(one, zero), (zero, one)],
        [(zero, one), (minus, minus)],
    ]
    return LinearCategory(
        field, ["pt"],
        {("pt", "pt"): 2},
        {("pt", "pt", "pt"): table},
        {"pt": (one, zero)},
        basis_labels={("pt", "pt", 0): "1", ("pt", "pt", 1): "w"},
        name=name)
