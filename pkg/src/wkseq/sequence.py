"""Symbol windows, distance brackets, and reference sequence generators.

A `SeqWindow` is a finite, exactly-valued view of a one-sided sequence of
rationals in [0, 1].  Distances between points of the shift space use the
summable metric sum |x(i) - y(i)| / 2^i; comparing finite windows of
length k pins that distance inside a closed bracket of width exactly
2^(1-k), which is the only form of distance this package ever reports.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ladder import DomainError, Ladder, Rational, eval_ainf
from .plfunc import PLFunc


class InvalidSpecError(Exception):
    """A classic-generator description failed validation."""


@dataclass(frozen=True)
class SeqWindow:
    """Contiguous slice values[i] = x(offset + i) of a one-sided sequence."""

    offset: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.offset < 0:
            raise ValueError("window offset must be nonnegative")
        if not self.values:
            raise ValueError("window must hold at least one value")
        for v in self.values:
            if not 0 <= v <= 1:
                raise ValueError(f"window value {v} outside [0, 1]")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DistBracket:
    """Closed interval certain to contain an orbit distance."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not 0 <= self.lo <= self.hi <= 2:
            raise ValueError("bracket must satisfy 0 <= lo <= hi <= 2")


def alpha(ladder: Ladder, i: int) -> Fraction:
    """Integer-coordinate sample of the limit profile; defined for i >= 0."""
    if not isinstance(i, int) or i < 0:
        raise DomainError("sequence coordinates are nonnegative integers")
    return eval_ainf(ladder, i)


def alpha_window(ladder: Ladder, start: int, length: int) -> SeqWindow:
    if length < 1:
        raise ValueError("window length must be at least 1")
    return SeqWindow(start, tuple(alpha(ladder, start + i) for i in range(length)))


def shift(window: SeqWindow, k: int) -> SeqWindow:
    """Drop the first k values, advancing the offset by k."""
    if k < 0:
        raise ValueError("shift count must be nonnegative")
    if k >= len(window):
        raise ValueError("shift would leave an empty window")
    return SeqWindow(window.offset + k, window.values[k:])


def bebutov_dist_bracket(x: SeqWindow, y: SeqWindow) -> DistBracket:
    """Bracket the metric between the points the two windows come from.

    The caller is responsible for aligning both windows at the same logical
    coordinate zero (via `shift`); offsets are not compared here.  The
    bracket has width exactly 2^(1-k) for k = min(len x, len y).
    """
    k = min(len(x), len(y))
    lo = Fraction(0)
    for i in range(k):
        lo += abs(x.values[i] - y.values[i]) / Fraction(2) ** i
    return DistBracket(lo, lo + Fraction(2) ** (1 - k))


def constant_window(value: Rational, length: int, offset: int = 0) -> SeqWindow:
    return SeqWindow(offset, (Fraction(value),) * length)


# -- full-shift fixtures ---------------------------------------------------

def full_shift_transitive_point(length: int) -> SeqWindow:
    """Prefix of the concatenation of all binary words in length-lex order.

    Every finite binary word occurs in the full sequence, so this is the
    standard transitive point of the full shift on two symbols.
    """
    if length < 1:
        raise ValueError("window length must be at least 1")
    out: list[Fraction] = []
    width = 1
    zero, one = Fraction(0), Fraction(1)
    while len(out) < length:
        for v in range(1 << width):
            for j in range(width - 1, -1, -1):
                out.append(one if (v >> j) & 1 else zero)
            if len(out) >= length:
                break
        width += 1
    return SeqWindow(0, tuple(out[:length]))


def full_shift_rigidity_witness(n: int, length: int) -> SeqWindow:
    """Prefix of the 2n-periodic point: n zeros then n ones, repeated."""
    if n < 1:
        raise ValueError("block length must be at least 1")
    if length < 2 * n:
        raise ValueError("window must cover at least one full period")
    zero, one = Fraction(0), Fraction(1)
    vals = tuple(one if (i // n) % 2 else zero for i in range(length))
    return SeqWindow(0, vals)


# -- classic two-scale generator ------------------------------------------

@dataclass(frozen=True)
class ClassicKWSpec:
    """Description of the classic construction: a Lipschitz bump on [-1, 1]
    made 2-periodic, read at a list of integer time scales, sup-truncated.
    """

    base: PLFunc
    lipschitz: Fraction
    pj: tuple[int, ...]
    truncation: int

    def validate(self) -> None:
        first, last = self.base.span
        if (first, last) != (Fraction(-1), Fraction(1)):
            raise InvalidSpecError("base profile must span exactly [-1, 1]")
        if self.base.evaluate(first) != self.base.evaluate(last):
            raise InvalidSpecError("base profile endpoints must match")
        if self.lipschitz < 2:
            raise InvalidSpecError("slope budget must be at least 2")
        pts = self.base.breakpoints
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if not 0 <= y0 <= 1 or not 0 <= y1 <= 1:
                raise InvalidSpecError("base profile values must stay in [0, 1]")
            if abs(y1 - y0) > self.lipschitz * (x1 - x0):
                raise InvalidSpecError(
                    f"segment [{x0}, {x1}] exceeds the slope budget"
                )
        if not self.pj:
            raise InvalidSpecError("at least one time scale is required")
        if any(s < 1 for s in self.pj):
            raise InvalidSpecError("time scales must be positive integers")
        if any(b <= a for a, b in zip(self.pj, self.pj[1:])):
            raise InvalidSpecError("time scales must be strictly increasing")
        if not 1 <= self.truncation <= len(self.pj):
            raise InvalidSpecError("truncation must select a nonempty prefix")


def classic_kw_eval(spec: ClassicKWSpec, t: Rational) -> Fraction:
    """Evaluate the truncated sup over the selected time scales."""
    spec.validate()
    t = Fraction(t)
    best = None
    for scale in spec.pj[: spec.truncation]:
        s = t / scale
        folded = (s + 1) % 2 - 1  # periodic representative in [-1, 1)
        v = spec.base.evaluate(folded)
        if best is None or v > best:
            best = v
    return best
