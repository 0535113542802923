"""Hypothesis strategies for exact values, hyperreals and series."""

from __future__ import annotations

from fractions import Fraction as F

import hypothesis.strategies as st

from omegasum import Hyperreal, SeriesAtom, SeriesExpr

# Bases/ratios kept small so asymptotic behaviour stabilizes quickly in the
# finite-scale dominance checks.
BASES = [F(1, 3), F(1, 2), F(1), F(2), F(3)]
RATIOS = [F(-1), F(1), F(1, 2), F(2), F(3)]


def fractions(max_num: int = 9, max_den: int = 9, nonzero: bool = False):
    numerators = st.integers(-max_num, max_num)
    if nonzero:
        numerators = numerators.filter(lambda n: n != 0)
    return st.builds(F, numerators, st.integers(1, max_den))


def hyper_terms():
    return st.tuples(
        fractions(nonzero=True),
        st.integers(-3, 3),
        st.sampled_from(BASES),
    )


def hyperreals(max_terms: int = 4):
    return st.builds(Hyperreal, st.lists(hyper_terms(), max_size=max_terms))


def series_atoms():
    return st.builds(
        SeriesAtom,
        fractions(nonzero=True, max_den=3),
        st.integers(0, 4),
        st.sampled_from(RATIOS),
    )


@st.composite
def series_exprs(draw, max_atoms: int = 3, max_overrides: int = 3, starts=(1,)):
    start = draw(st.sampled_from(starts))
    atoms = draw(st.lists(series_atoms(), max_size=max_atoms))
    n_over = draw(st.integers(0, max_overrides))
    overrides = {}
    for _ in range(n_over):
        idx = draw(st.integers(start, start + 9))
        overrides[idx] = draw(fractions(max_den=3))
    return SeriesExpr(atoms, start=start, overrides=overrides)
