from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chroma.errors import InvalidPermutationError, ParseError, RegistryError
from chroma.polynomials import (
    Poly,
    VarRegistry,
    add,
    from_json,
    gamma_extract,
    mono_from_exponents,
    mul,
    parse,
    permute_variables,
    render,
    scale,
    to_json,
)

REG = VarRegistry.vertices(range(4))
SUBSETS = VarRegistry.subsets([(1, 2), (1, 3), (2, 3), (1, 4)])


def x(i, e=1, reg=REG):
    return Poly.var(reg, i, e)


def mono(**kw):
    return mono_from_exponents({int(k[1:]): v for k, v in kw.items()})


@st.composite
def polys(draw, reg=REG):
    n = len(reg)
    terms = draw(
        st.dictionaries(
            st.dictionaries(st.integers(0, n - 1), st.integers(1, 4), max_size=3).map(mono_from_exponents),
            st.integers(-(10**20), 10**20),
            max_size=5,
        )
    )
    return Poly(reg, terms)


perms = st.permutations(list(range(len(REG))))


# ---------------------------------------------------------------- arithmetic


def test_arithmetic_examples():
    assert add(x(0), scale(x(0), -1)) == Poly.zero(REG)
    s = x(0) + x(1)
    assert mul(s, s) == x(0, 2) + scale(x(0) * x(1), 2) + x(1, 2)
    assert render(mul(s, s)) == "x0^2 + 2·x0·x1 + x1^2"
    assert render(scale(x(0) * x(1), -1)) == "-x0·x1"
    assert render(Poly.zero(REG)) == "0"


def test_registry_mismatch():
    with pytest.raises(RegistryError):
        x(0) + x(0, reg=SUBSETS)
    with pytest.raises(RegistryError):
        Poly.var(REG, 9)


def test_big_coefficients_are_exact():
    p = scale(x(0), 2**80) * scale(x(1), 3**60)
    assert p.coefficient(mono(x0=1, x1=1)) == 2**80 * 3**60


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly.zero(REG)
    assert p * Poly.one(REG) == p


# ---------------------------------------------------------------- gamma extraction


def test_gamma_examples():
    t = mono(x0=2, x1=1)
    assert gamma_extract(x(0, 2) + x(0) * x(1), t) == 2
    assert gamma_extract(x(2), t) == 0
    assert gamma_extract(scale(x(0), 3) + x(0, 3), mono(x0=2)) == 3


@given(polys(), polys(), st.dictionaries(st.integers(0, 3), st.integers(1, 5)))
def test_gamma_is_additive(p, q, exps):
    t = mono_from_exponents(exps)
    assert gamma_extract(p + q, t) == gamma_extract(p, t) + gamma_extract(q, t)


# ---------------------------------------------------------------- variable permutations


def test_permute_examples():
    assert permute_variables(x(0, 2) * x(1), [1, 0, 2, 3]) == x(1, 2) * x(0)
    assert permute_variables(x(0) + x(1), [1, 0, 2, 3]) == x(0) + x(1)
    assert permute_variables(x(0), [0, 1, 2, 3]) == x(0)
    with pytest.raises(InvalidPermutationError):
        permute_variables(x(0), [0, 0, 1, 2])


@given(polys(), perms, perms)
def test_permutation_group_action(p, sigma, tau):
    composed = [tau[sigma[i]] for i in range(len(sigma))]
    assert permute_variables(permute_variables(p, sigma), tau) == permute_variables(p, composed)


# ---------------------------------------------------------------- text and JSON


@given(polys())
def test_render_parse_round_trip(p):
    assert parse(render(p), REG) == p


@given(polys(SUBSETS))
def test_render_parse_round_trip_subsets(p):
    assert parse(render(p), SUBSETS) == p


def test_subset_variable_names():
    p = x(0, 2, SUBSETS) * x(3, 1, SUBSETS)
    assert render(p) == "x{1,2}^2·x{1,4}"
    assert parse("x{1,2}^2·x{1,4} - 3", SUBSETS) == p - scale(Poly.one(SUBSETS), 3)


def test_parse_errors():
    for bad in ("x0 +", "x0 + y1", "x9"):
        with pytest.raises((ParseError, RegistryError)):
            parse(bad, REG)


@given(polys())
def test_json_round_trip(p):
    data = to_json(p)
    assert all(isinstance(t["coef"], str) for t in data["terms"])
    assert from_json(data) == p
