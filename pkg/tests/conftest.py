"""Shared builders for the standard test algebras."""

from __future__ import annotations

import pytest

from maxsub.algebra import direct_product, make_algebra, matrix_algebra
from maxsub.linalg import GF, QQ, Field
from maxsub.presentations import (
    PathAlgebraPresentation,
    Poset,
    Quiver,
    incidence_algebra,
    path_algebra,
)

A2_QUIVER = Quiver(("1", "2"), (("a", "1", "2"),))
A3_QUIVER = Quiver(("1", "2", "3"), (("a", "1", "2"), ("b", "2", "3")))
A4_QUIVER = Quiver(("1", "2", "3", "4"),
                   (("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")))
KRONECKER_QUIVER = Quiver(("a", "b"), (("al1", "a", "b"), ("al2", "a", "b")))
D4_QUIVER = Quiver(("1", "c", "3", "5"),
                   (("x", "1", "c"), ("y", "3", "c"), ("z", "5", "c")))
D5_QUIVER = Quiver(("1", "2", "c", "4", "5"),
                   (("x", "1", "c"), ("y", "2", "c"),
                    ("z", "c", "4"), ("w", "4", "5")))

CHAIN2_POSET = Poset(("1", "2"), (("1", "2"),))
CHAIN3_POSET = Poset(("1", "2", "3"), (("1", "2"), ("2", "3")))
DIAMOND_POSET = Poset(("1", "2", "3", "4"),
                      (("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")))
ZIGZAG_POSET = Poset(("1", "2", "3", "4", "5"),
                     (("2", "1"), ("2", "3"), ("4", "3"), ("4", "5")))


def quiver_algebra(quiver: Quiver, field: Field):
    return path_algebra(PathAlgebraPresentation(quiver), field)


def f4_algebra():
    """F_4 as a 2-dimensional F_2-algebra, x^2 = x + 1."""
    return make_algebra(GF(2), ["one", "x"], [1, 0],
                        [[[1, 0], [0, 1]], [[0, 1], [1, 1]]], check=True)


def kxk(field: Field):
    return direct_product([matrix_algebra(1, field), matrix_algebra(1, field)])


def kxkxm2(field: Field):
    return direct_product([matrix_algebra(1, field), matrix_algebra(1, field),
                           matrix_algebra(2, field)])


def strip_presentation(alg):
    """The same algebra without its presentation metadata."""
    from maxsub.algebra import Algebra
    return Algebra(alg.field, alg.dim, alg.basis_names, alg.unit, alg.table,
                   None)


@pytest.fixture(scope="session")
def m2q():
    return matrix_algebra(2, QQ)


@pytest.fixture(scope="session")
def m3q():
    return matrix_algebra(3, QQ)


@pytest.fixture(scope="session")
def m2f2():
    return matrix_algebra(2, GF(2))


@pytest.fixture(scope="session")
def a3_q():
    return quiver_algebra(A3_QUIVER, QQ)


@pytest.fixture(scope="session")
def kronecker_q():
    return quiver_algebra(KRONECKER_QUIVER, QQ)


@pytest.fixture(scope="session")
def kronecker_f2():
    return quiver_algebra(KRONECKER_QUIVER, GF(2))


@pytest.fixture(scope="session")
def zigzag_q():
    return incidence_algebra(ZIGZAG_POSET, QQ)
