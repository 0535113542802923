"""Closed-form partial sums and their evaluation at the infinite bound.

For a series with general term ``sum_k c_k * i^{p_k} * r_k^i`` the partial sum
up to an integer index ``n`` has an exact closed form: the ratio-1 atoms
contribute power-sum polynomials, and each atom with ratio ``r != 1``
contributes ``Q(n) * r^n`` where ``Q`` is the degree-``p`` polynomial solving
the discrete antidifference recurrence

    Q(i) - Q(i-1)/r = i^p.

Evaluating the closed form at ``n = omega`` turns the polynomial part into
base-1 hyperreal terms and each ``Q_r(n) * r^n`` into base-``r`` terms.  For
``r = -1`` the sign factor ``(-1)^(omega + offset)`` is taken to vanish, and a
polynomial cofactor does not rescue it (the ``omega * 0`` indeterminate form
resolves to zero), so the whole contribution drops.  Bases in ``(-1, 0)`` can
be treated the same way under the ``"conjecture"`` evaluation mode; bases
below ``-1`` are refused because their magnitude grows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Union

from .errors import DegreeLimit, NegativeBase, NonPositiveRatio
from .hyperreal import Hyperreal, eval_poly_at_shifted_omega
from .polynomial import Polynomial
from .series import SeriesExpr

__all__ = [
    "DEFAULT_MAX_DEGREE",
    "EvalConfig",
    "PartialSumFormula",
    "bernoulli_numbers",
    "faulhaber",
    "antidifference_polygeom",
    "partial_sum_formula",
    "evaluate_at_omega",
    "sum_series",
    "arithmetic_series_value",
    "geometric_series_value",
]

_Scalar = Union[int, Fraction]
_F0 = Fraction(0)

DEFAULT_MAX_DEGREE = 16


@dataclass(frozen=True)
class EvalConfig:
    """Rules for evaluating closed forms at omega.

    ``neg_base_mode`` controls geometric bases r < 0 other than -1:
    ``"error"`` refuses them, ``"conjecture"`` lets bases in (-1, 0) vanish
    like base -1 does.  ``max_degree`` bounds the polynomial degrees solved
    for, to keep accidental huge exact solves from running away.
    """

    neg_base_mode: str = "error"
    max_degree: int = DEFAULT_MAX_DEGREE

    def __post_init__(self):
        if self.neg_base_mode not in ("error", "conjecture"):
            raise ValueError("neg_base_mode must be 'error' or 'conjecture'")
        if self.max_degree < 1:
            raise ValueError("max_degree must be at least 1")


def bernoulli_numbers(n: int) -> list[Fraction]:
    """B_0..B_n as exact fractions via Akiyama-Tanigawa, with B_1 = +1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    row = [_F0] * (n + 1)
    out: list[Fraction] = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out


def faulhaber(p: int, max_degree: int = DEFAULT_MAX_DEGREE) -> Polynomial:
    """The power-sum polynomial F_p with F_p(n) = 1^p + 2^p + ... + n^p.

    Degree p + 1, no constant term, valid for every integer n (with the
    telescoping identity F_p(n) - F_p(n-1) = n^p holding as polynomials).
    """
    if p < 0:
        raise ValueError("p must be >= 0")
    if p > max_degree:
        raise DegreeLimit(f"power {p} exceeds the degree limit {max_degree}")
    bern = bernoulli_numbers(p)
    coeffs = [_F0] * (p + 2)
    for j in range(p + 1):
        coeffs[p + 1 - j] = Fraction(comb(p + 1, j), p + 1) * bern[j]
    return Polynomial(coeffs)


def antidifference_polygeom(
    p: int, r: _Scalar, max_degree: int = DEFAULT_MAX_DEGREE
) -> Polynomial:
    """The degree-p polynomial Q with sum_{i=1}^n i^p r^i = Q(n) r^n - Q(0).

    Solved exactly from the recurrence Q(i) - Q(i-1)/r = i^p by matching
    coefficients from the top degree down (the system is triangular because
    r != 1 keeps the leading factor 1 - 1/r nonzero).
    """
    r = Fraction(r)
    if r == 0 or r == 1:
        raise ValueError("the geometric antidifference needs r != 0, r != 1")
    if p < 0:
        raise ValueError("p must be >= 0")
    if p > max_degree:
        raise DegreeLimit(f"power {p} exceeds the degree limit {max_degree}")
    inv_r = Fraction(1) / r
    lead = 1 - inv_r
    q = [_F0] * (p + 1)
    for j in range(p, -1, -1):
        acc = Fraction(1) if j == p else _F0
        for k in range(j + 1, p + 1):
            acc += inv_r * q[k] * comb(k, j) * (-1) ** (k - j)
        q[j] = acc / lead
    return Polynomial(q)


@dataclass(frozen=True)
class PartialSumFormula:
    """Exact closed form of the partial sums of one series.

    ``formula(n) = poly(n) + sum_r Q_r(n) * r^n + correction`` equals the
    brute-force partial sum for every integer ``n >= valid_from``; the
    correction is the constant contributed by index overrides once all of
    them lie inside the summed range.
    """

    poly: Polynomial
    exp_parts: tuple[tuple[Fraction, Polynomial], ...] = ()
    correction: Fraction = _F0
    valid_from: int = 1
    start: int = 1

    def __call__(self, n: int) -> Fraction:
        total = self.poly(n) + self.correction
        for r, q in self.exp_parts:
            total += q(n) * r**n
        return total


def partial_sum_formula(
    series: SeriesExpr, max_degree: int = DEFAULT_MAX_DEGREE
) -> PartialSumFormula:
    """Build the exact closed form of a series' partial sums.

    Each atom contributes its power-sum or geometric antidifference piece,
    re-anchored to the series' start index; overrides contribute a constant
    correction valid once n passes the last overridden position.
    """
    poly = Polynomial()
    exp: dict[Fraction, Polynomial] = {}
    anchor = series.start - 1
    for atom in series.atoms:
        if atom.power > max_degree:
            raise DegreeLimit(
                f"atom power {atom.power} exceeds the degree limit {max_degree}"
            )
        if atom.ratio == 1:
            f = faulhaber(atom.power, max_degree)
            poly = poly + atom.coeff * f - Polynomial([atom.coeff * f(anchor)])
        else:
            q = antidifference_polygeom(atom.power, atom.ratio, max_degree)
            exp[atom.ratio] = exp.get(atom.ratio, Polynomial()) + atom.coeff * q
            poly = poly - Polynomial([atom.coeff * q(anchor) * atom.ratio**anchor])
    exp_parts = tuple(
        (r, q) for r, q in sorted(exp.items()) if not q.is_zero()
    )
    correction = sum(
        (v - series.general_term_at(i) for i, v in series.overrides.items()), _F0
    )
    valid_from = max([series.start, *series.overrides])
    return PartialSumFormula(poly, exp_parts, correction, valid_from, series.start)


def evaluate_at_omega(
    formula: PartialSumFormula, config: Optional[EvalConfig] = None
) -> Hyperreal:
    """Value of the closed form at n = omega, as an exact hyperreal.

    The polynomial part expands into base-1 terms; ``Q_r(n) * r^n`` with
    r > 0 expands into base-r terms.  Contributions with base -1 vanish
    (together with any polynomial cofactor); other negative bases follow
    ``config.neg_base_mode``.
    """
    cfg = config or EvalConfig()
    value = eval_poly_at_shifted_omega(formula.poly) + Hyperreal.from_rational(
        formula.correction
    )
    for r, q in formula.exp_parts:
        if r > 0:
            value = value + eval_poly_at_shifted_omega(q) * Hyperreal.term(1, 0, r)
        elif r == -1:
            continue
        elif cfg.neg_base_mode == "conjecture" and r > -1:
            continue
        else:
            raise NegativeBase(
                f"cannot evaluate base {r} at omega"
                + (
                    " (its magnitude grows; the vanishing rule does not apply)"
                    if r < -1
                    else " (enable the 'conjecture' evaluation mode)"
                )
            )
    return value


def sum_series(series: SeriesExpr, config: Optional[EvalConfig] = None) -> Hyperreal:
    """Exact hyperreal value of a series: closed form, then evaluation at omega."""
    cfg = config or EvalConfig()
    return evaluate_at_omega(partial_sum_formula(series, cfg.max_degree), cfg)


def arithmetic_series_value(a: _Scalar, d: _Scalar) -> Hyperreal:
    """Value of a + (a+d) + (a+2d) + ... : w*a + w^2*d/2 - w*d/2."""
    a, d = Fraction(a), Fraction(d)
    return Hyperreal.term(d / 2, 2) + Hyperreal.term(a - d / 2, 1)


def geometric_series_value(a: _Scalar, r: _Scalar) -> Hyperreal:
    """Value of a + a*r + a*r^2 + ... for r > 0: a*(1 - r^w)/(1 - r).

    The ratio r = 1 degenerates to a*w.  Ratios r <= 0 are refused here;
    alternating geometric series go through :func:`sum_series`.
    """
    a, r = Fraction(a), Fraction(r)
    if r <= 0:
        raise NonPositiveRatio("the closed geometric form needs a ratio r > 0")
    if r == 1:
        return Hyperreal.term(a, 1)
    scale = a / (1 - r)
    return Hyperreal.from_rational(scale) - Hyperreal.term(scale, 0, r)
