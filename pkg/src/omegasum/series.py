"""Symbolic series with standard bounds and finite manipulations.

A series is summed from a fixed integer start index up to the infinite bound
``omega``.  Its general term is a finite combination of atoms
``c * i^p * r^i`` (``p >= 0``, ``r != 0``); finite edits such as removing a
term or spreading a scalar across positions are recorded as per-index
overrides rather than by rewriting the general term, which keeps the effect
on the partial sums mechanically checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import (
    IndexBeforeStart,
    BoundMismatch,
    NotAPermutation,
    UnsupportedOverride,
    UnsupportedRatio,
)
from .polynomial import Polynomial

__all__ = ["SeriesAtom", "SeriesExpr", "arithmetic_series", "geometric_series"]

_Scalar = Union[int, Fraction]
_F0 = Fraction(0)


@dataclass(frozen=True)
class SeriesAtom:
    """One summand component ``coeff * i^power * ratio^i``."""

    coeff: Fraction
    power: int = 0
    ratio: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "ratio", Fraction(self.ratio))
        if self.power < 0:
            raise ValueError("atom powers must be non-negative integers")
        if self.ratio == 0:
            raise ValueError("atom ratios must be nonzero")

    @property
    def key(self) -> tuple[int, Fraction]:
        return (self.power, self.ratio)

    def value_at(self, i: int) -> Fraction:
        return self.coeff * i**self.power * self.ratio**i


class SeriesExpr:
    """An infinite series: general-term atoms, a start index, overrides.

    The upper bound is always ``omega``.  Overrides equal to the general term
    are dropped during normalization, so structurally equal series compare
    equal.  Instances are immutable; manipulations return new series.
    """

    __slots__ = ("_start", "_atoms", "_overrides")

    def __init__(
        self,
        atoms: Iterable = (),
        start: int = 1,
        overrides: Mapping[int, _Scalar] | None = None,
    ):
        merged: dict[tuple[int, Fraction], Fraction] = {}
        for a in atoms:
            if not isinstance(a, SeriesAtom):
                a = SeriesAtom(*a)
            merged[a.key] = merged.get(a.key, _F0) + a.coeff
        kept = [
            SeriesAtom(c, power, ratio)
            for (power, ratio), c in merged.items()
            if c != 0
        ]
        kept.sort(key=lambda a: a.key, reverse=True)
        self._start = int(start)
        self._atoms = tuple(kept)

        normalized: dict[int, Fraction] = {}
        for idx, val in sorted((overrides or {}).items()):
            idx = int(idx)
            if idx < self._start:
                raise IndexBeforeStart(
                    f"override at index {idx} precedes start {self._start}"
                )
            val = Fraction(val)
            if val != self.general_term_at(idx):
                normalized[idx] = val
        self._overrides = normalized

    # -- inspection ----------------------------------------------------------

    @property
    def start(self) -> int:
        return self._start

    @property
    def atoms(self) -> tuple[SeriesAtom, ...]:
        return self._atoms

    @property
    def overrides(self) -> dict[int, Fraction]:
        return dict(self._overrides)

    def is_zero(self) -> bool:
        return not self._atoms and not self._overrides

    def general_term_at(self, i: int) -> Fraction:
        """Value of the general term at index i, ignoring overrides."""
        return sum((a.value_at(i) for a in self._atoms), _F0)

    def term_at(self, i: int) -> Fraction:
        """Actual term at index i: the override if present, else the general term."""
        if i < self._start:
            raise IndexBeforeStart(f"index {i} precedes start {self._start}")
        if i in self._overrides:
            return self._overrides[i]
        return self.general_term_at(i)

    # -- whole-series operations ----------------------------------------------

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        scalar = Fraction(scalar)
        atoms = [SeriesAtom(a.coeff * scalar, a.power, a.ratio) for a in self._atoms]
        overrides = {i: v * scalar for i, v in self._overrides.items()}
        return SeriesExpr(atoms, self._start, overrides)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, SeriesExpr):
            return NotImplemented
        if self._start != other._start:
            raise BoundMismatch(
                f"cannot add series starting at {self._start} and {other._start}"
            )
        atoms = self._atoms + other._atoms
        overrides = {
            i: self.term_at(i) + other.term_at(i)
            for i in set(self._overrides) | set(other._overrides)
        }
        return SeriesExpr(atoms, self._start, overrides)

    # -- finite manipulations --------------------------------------------------

    def add_into_terms(self, distribution: Mapping[int, _Scalar]) -> "SeriesExpr":
        """Fold a scalar into the series by adding pieces at given positions.

        The series value grows by exactly the sum of the distributed amounts.
        """
        overrides = dict(self._overrides)
        for idx, amount in distribution.items():
            if idx < self._start:
                raise IndexBeforeStart(
                    f"cannot add into index {idx} before start {self._start}"
                )
            overrides[idx] = self.term_at(idx) + Fraction(amount)
        return SeriesExpr(self._atoms, self._start, overrides)

    def remove_term(self, i: int) -> tuple["SeriesExpr", Fraction]:
        """Replace the term at i with zero; return (new series, extracted value)."""
        extracted = self.term_at(i)
        overrides = dict(self._overrides)
        overrides[i] = _F0
        return SeriesExpr(self._atoms, self._start, overrides), extracted

    def rearrange(self, permutation: Mapping[int, int]) -> "SeriesExpr":
        """Permute finitely many terms; ``permutation[i] = j`` moves term i to j.

        Partial sums past the largest touched index, and the value at omega,
        are unchanged exactly.
        """
        sources = set(permutation)
        targets = set(permutation.values())
        if sources != targets or len(targets) != len(permutation):
            raise NotAPermutation("rearrangement must permute a finite index set")
        if any(i < self._start for i in sources):
            raise IndexBeforeStart("rearranged indices must not precede the start")
        moved = {j: self.term_at(i) for i, j in permutation.items()}
        overrides = dict(self._overrides)
        overrides.update(moved)
        return SeriesExpr(self._atoms, self._start, overrides)

    def blank_alternate(self, keep: str) -> "SeriesExpr":
        """Zero out every other term, keeping the given parity ("even" or "odd").

        The general term is multiplied by ((-1)^(i+d) + 1)/2 with d = 0 to keep
        even positions and d = 1 to keep odd ones, so each atom (c, p, r)
        splits into (c/2, p, r) and (+-c/2, p, -r).
        """
        if keep not in ("even", "odd"):
            raise ValueError("keep must be 'even' or 'odd'")
        sign = 1 if keep == "even" else -1
        atoms = []
        for a in self._atoms:
            atoms.append(SeriesAtom(a.coeff / 2, a.power, a.ratio))
            atoms.append(SeriesAtom(a.coeff * sign / 2, a.power, -a.ratio))
        keep_even = keep == "even"
        overrides = {
            i: (v if (i % 2 == 0) == keep_even else _F0)
            for i, v in self._overrides.items()
        }
        return SeriesExpr(atoms, self._start, overrides)

    def stretch2(self, slots: str) -> "SeriesExpr":
        """Space a polynomial series out with zeroes.

        Term j moves to position 2j-1 ("odd" slots) or 2j ("even" slots), and
        the gaps are filled with zeroes.  Only ratio-1 atoms can be stretched
        within rational arithmetic, and overrides have no stretched image.
        """
        if slots not in ("odd", "even"):
            raise ValueError("slots must be 'odd' or 'even'")
        if any(a.ratio != 1 for a in self._atoms):
            raise UnsupportedRatio("only ratio-1 (polynomial) series can be stretched")
        if self._overrides:
            raise UnsupportedOverride("series with overrides cannot be stretched")
        if self._start != 1:
            raise ValueError("stretching is defined for series starting at 1")
        coeffs = [_F0] * (max((a.power for a in self._atoms), default=0) + 1)
        for a in self._atoms:
            coeffs[a.power] += a.coeff
        g = Polynomial(coeffs)
        offset = Fraction(1, 2) if slots == "odd" else _F0
        q = g.compose_affine(Fraction(1, 2), offset)
        sign = -1 if slots == "odd" else 1
        atoms = []
        for k, c in enumerate(q.coeffs):
            atoms.append(SeriesAtom(c / 2, k, Fraction(1)))
            atoms.append(SeriesAtom(c * sign / 2, k, Fraction(-1)))
        return SeriesExpr(atoms, self._start)

    def with_start(self, new_start: int) -> "SeriesExpr":
        """Same general term summed from a different start index.

        The term count at omega becomes omega + (1 - new_start), so the value
        generally changes; existing overrides must stay inside the new range.
        """
        new_start = int(new_start)
        if new_start == self._start:
            return self
        outside = [i for i in self._overrides if i < new_start]
        if outside:
            raise UnsupportedOverride(
                f"overrides at {sorted(outside)} fall before start {new_start}"
            )
        return SeriesExpr(self._atoms, new_start, self._overrides)

    # -- identity ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesExpr):
            return NotImplemented
        return (
            self._start == other._start
            and self._atoms == other._atoms
            and self._overrides == other._overrides
        )

    def __hash__(self) -> int:
        return hash((self._start, self._atoms, tuple(sorted(self._overrides.items()))))

    def __str__(self) -> str:
        text = f"sum(i={self._start}..omega, {_body_text(self._atoms)})"
        if self._overrides:
            inner = ", ".join(f"{i}: {v}" for i, v in self._overrides.items())
            text += f" overriding {{{inner}}}"
        return text

    def __repr__(self) -> str:
        return f"SeriesExpr({self})"


def _body_text(atoms: tuple[SeriesAtom, ...]) -> str:
    """Canonical text of the general term; parseable back when printed alone."""
    if not atoms:
        return "0"
    parts = []
    for k, a in enumerate(atoms):
        body = _atom_body(abs(a.coeff), a.power, a.ratio)
        if k == 0:
            parts.append(body if a.coeff > 0 else "-" + body)
        else:
            parts.append((" + " if a.coeff > 0 else " - ") + body)
    return "".join(parts)


def _atom_body(coeff: Fraction, power: int, ratio: Fraction) -> str:
    factors = []
    symbolic = power != 0 or ratio != 1
    if coeff.numerator != 1 or not symbolic:
        factors.append(str(coeff.numerator))
    if power == 1:
        factors.append("i")
    elif power != 0:
        factors.append(f"i^{power}")
    if ratio != 1:
        if ratio.denominator == 1 and ratio.numerator > 0:
            ratio_text = str(ratio.numerator)
        else:
            ratio_text = f"({ratio})"
        factors.append(f"{ratio_text}^i")
    text = "*".join(factors)
    if coeff.denominator != 1:
        text += f"/{coeff.denominator}"
    return text


def arithmetic_series(a: _Scalar, d: _Scalar) -> SeriesExpr:
    """The series a + (a+d) + (a+2d) + ... with standard bounds."""
    a, d = Fraction(a), Fraction(d)
    return SeriesExpr([SeriesAtom(d, 1), SeriesAtom(a - d, 0)])


def geometric_series(a: _Scalar, r: _Scalar) -> SeriesExpr:
    """The series a + a*r + a*r^2 + ... with standard bounds (r != 0)."""
    a, r = Fraction(a), Fraction(r)
    return SeriesExpr([SeriesAtom(a / r, 0, r)])
