"""Finite certificates for the limit sequence's structural properties.

Each checker evaluates one finite, exactly decidable statement and returns
a report carrying the exact extremal values it saw, the bound it compared
them against, and a pass verdict.  Reports serialize to versioned JSON
with every rational rendered as an exact num/den string.

Two execution strategies appear for the ones-run certificate: small levels
scan every coordinate; large levels certify runs through exact interval
arithmetic on the plateau preimages of the stretched base profile, whose
plateaus are what plant those runs in the first place.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .ladder import (
    DomainError,
    Ladder,
    Rational,
    eval_ainf,
    eval_b,
)

REPORT_SCHEMA = "wk-report/1"

ONE = Fraction(1)


def _frac_str(value: Fraction | None) -> str | None:
    if value is None:
        return None
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RigidityReport:
    """Worst displacement seen when comparing a profile against its 2p[n] shift."""

    n: int
    shift: int
    tested_range: tuple[int, int]
    max_defect: Fraction
    bound: Fraction | None
    passed: bool
    argmax_index: int
    m: int | None = None
    grid_step: Fraction | None = None

    def to_json_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "lemma": "shift-defect" if self.m is not None else "rigidity",
            "n": self.n,
            "m": self.m,
            "shift": self.shift,
            "tested_range": list(self.tested_range),
            "grid_step": _frac_str(self.grid_step),
            "max_defect": _frac_str(self.max_defect),
            "bound": _frac_str(self.bound),
            "argmax_index": self.argmax_index,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class ReturnReport:
    """Exact equality of the sequence with both of its certified return shifts."""

    n: int
    left_shift: int
    right_shift: int
    checked: int
    all_equal: bool
    first_mismatch: int | None

    @property
    def passed(self) -> bool:
        return self.all_equal

    def to_json_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "lemma": "returns",
            "n": self.n,
            "left_shift": self.left_shift,
            "right_shift": self.right_shift,
            "checked": self.checked,
            "all_equal": self.all_equal,
            "first_mismatch": self.first_mismatch,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class OnesRunReport:
    """Syndetic occurrence of long all-ones blocks in an initial window."""

    n: int
    run_length_required: int
    gap_bound: int
    window: tuple[int, int]
    passed: bool
    worst_gap: int
    first_run: tuple[int, int] | None
    runs_found: int
    mode: str

    def to_json_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "lemma": "ones-runs",
            "n": self.n,
            "run_length_required": self.run_length_required,
            "gap_bound": self.gap_bound,
            "window": list(self.window),
            "worst_gap": self.worst_gap,
            "first_run": list(self.first_run) if self.first_run else None,
            "runs_found": self.runs_found,
            "mode": self.mode,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class WMReport:
    """Certified double return: N and N+1 both send the start cylinder home."""

    n: int
    N: int
    agree_len: int
    forward_exact: bool
    backward_exact: bool
    dist_hi: Fraction
    eps: Fraction
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "lemma": "wm-returns",
            "n": self.n,
            "N": self.N,
            "agree_len": self.agree_len,
            "forward_exact": self.forward_exact,
            "backward_exact": self.backward_exact,
            "dist_hi": _frac_str(self.dist_hi),
            "eps": _frac_str(self.eps),
            "pass": self.passed,
        }


# -- shift defect and rigidity --------------------------------------------

def check_shift_defect(
    ladder: Ladder, n: int, m: int, grid_step: Rational
) -> RigidityReport:
    """Bound |b_m(t + 2p[n]) - b_m(t)| on a grid over one full period of b_m.

    Requires the ladder to be populated to depth max(n, m) + 1.  The level-0
    bound is vacuous (no certification threshold exists there); such reports
    carry bound None and pass vacuously.
    """
    if m < n:
        raise DomainError("the periodized level may not be below the shift level")
    ladder.require(max(n, m) + 1)
    grid_step = Fraction(grid_step)
    if grid_step <= 0:
        raise ValueError("grid step must be positive")
    span = ladder.p(m)
    displacement = 2 * ladder.p(n)
    worst = Fraction(0)
    worst_k = 0
    t = Fraction(-span)
    k = 0
    while t <= span:
        defect = abs(eval_b(ladder, m, t + displacement) - eval_b(ladder, m, t))
        if defect > worst:
            worst, worst_k = defect, k
        t += grid_step
        k += 1
    bound = ladder.epsilon(n) if n >= 1 else None
    passed = True if bound is None else worst < bound
    return RigidityReport(
        n=n,
        shift=displacement,
        tested_range=(-span, span),
        max_defect=worst,
        bound=bound,
        passed=passed,
        argmax_index=worst_k,
        m=m,
        grid_step=grid_step,
    )


def check_rigidity(ladder: Ladder, n: int, count: int) -> RigidityReport:
    """Bound |alpha(j + 2p[n]) - alpha(j)| for 0 <= j < count against 1/n."""
    if n < 1:
        raise DomainError("no certification bound exists at level 0")
    if count < 1:
        raise ValueError("need at least one index to check")
    ladder.ensure(n)
    displacement = 2 * ladder.p(n)
    worst = Fraction(0)
    worst_j = 0
    for j in range(count):
        defect = abs(eval_ainf(ladder, j + displacement) - eval_ainf(ladder, j))
        if defect > worst:
            worst, worst_j = defect, j
    bound = ladder.epsilon(n)
    return RigidityReport(
        n=n,
        shift=displacement,
        tested_range=(0, count),
        max_defect=worst,
        bound=bound,
        passed=worst < bound,
        argmax_index=worst_j,
    )


# -- certified returns -----------------------------------------------------

def check_returns(ladder: Ladder, n: int, grid: Iterable[int]) -> ReturnReport:
    """Check alpha(t) = ainf(t - S) = ainf(t + S - 1) with S = 2*splice(n+1).

    Grid points must be integers in [-p[n], p[n]].
    """
    ladder.ensure(n + 1)
    left = 2 * ladder.splice(n + 1)
    bound = ladder.p(n)
    points = sorted(set(int(t) for t in grid))
    if points and (points[0] < -bound or points[-1] > bound):
        bad = points[0] if points[0] < -bound else points[-1]
        raise DomainError(f"grid point {bad} outside [-p[{n}], p[{n}]]")
    mismatch = None
    for t in points:
        here = eval_ainf(ladder, t)
        if eval_ainf(ladder, t - left) != here or eval_ainf(ladder, t + left - 1) != here:
            mismatch = t
            break
    return ReturnReport(
        n=n,
        left_shift=left,
        right_shift=left - 1,
        checked=len(points),
        all_equal=mismatch is None,
        first_mismatch=mismatch,
    )


def check_wm_returns(
    ladder: Ladder, n: int, eps: Rational | None = None
) -> WMReport:
    """Certify that N = 2*splice(n+1) - 1 and N + 1 both return the start
    cylinder: the N-shifted sequence repeats coordinates 0..p[n] exactly,
    and the backward extension by N + 1 shifts onto the sequence exactly.
    """
    ladder.ensure(n + 1)
    p_n = ladder.p(n)
    big_n = 2 * ladder.splice(n + 1) - 1
    if eps is None:
        eps = Fraction(4, 2**p_n)  # twice the unavoidable bracket width
    else:
        eps = Fraction(eps)
        if eps <= 0:
            raise ValueError("tolerance must be positive")
    forward = all(
        eval_ainf(ladder, i + big_n) == eval_ainf(ladder, i) for i in range(p_n + 1)
    )
    backward = all(
        eval_ainf(ladder, i - big_n - 1) == eval_ainf(ladder, i)
        for i in range(p_n + 1)
    )
    dist_hi = Fraction(1, 2**p_n)  # zero partial sum plus tail bound 2^(1-(p_n+1))
    return WMReport(
        n=n,
        N=big_n,
        agree_len=p_n + 1,
        forward_exact=forward,
        backward_exact=backward,
        dist_hi=dist_hi,
        eps=eps,
        passed=forward and backward and dist_hi < eps,
    )


# -- ones runs -------------------------------------------------------------

def _merge_runs(runs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Union of integer intervals; adjacent intervals fuse."""
    out: list[tuple[int, int]] = []
    for u, v in sorted(runs):
        if out and u <= out[-1][1] + 1:
            prev = out[-1]
            if v > prev[1]:
                out[-1] = (prev[0], v)
        else:
            out.append((u, v))
    return out


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _plateau_runs(ladder: Ladder, level: int, lo: int, hi: int) -> list[tuple[int, int]]:
    """Integer intervals of [lo, hi] where the level's stretched copy is 1.

    The periodized base profile is exactly 1 on [2, 4] modulo 6, so after
    stretching by q the plateaus are [(6k+2)q, (6k+4)q].
    """
    q = ladder.stretch(level)
    out = []
    k0 = _ceil_div(lo - 4 * q, 6 * q)
    k1 = (hi - 2 * q) // (6 * q)
    for k in range(k0, k1 + 1):
        u = max(lo, (6 * k + 2) * q)
        v = min(hi, (6 * k + 4) * q)
        if u <= v:
            out.append((u, v))
    return out


def _certified_runs(
    ladder: Ladder, level: int, lo: int, hi: int, prune: int
) -> list[tuple[int, int]]:
    """Certified all-ones integer intervals of the level profile on [lo, hi].

    Sound under-approximation: every returned interval really is identically
    one; intervals shorter than `prune` may be dropped.  Recursion descends
    only while the previous level can still contribute an interval of that
    size, which keeps the work proportional to the number of plateaus in
    range rather than to the length of the range.
    """
    if lo > hi:
        return []
    if level == 0:
        runs = [(u, v) for u, v in ((-3, -2), (2, 3)) if u <= hi and v >= lo]
        return [(max(u, lo), min(v, hi)) for u, v in runs]
    runs = _plateau_runs(ladder, level, lo, hi)
    if 2 * ladder.p(level - 1) + 1 >= prune:
        cut = ladder.splice(level)
        runs += _periodized_runs(ladder, level - 1, lo, min(hi, cut), prune, 0)
        runs += _periodized_runs(ladder, level - 1, max(lo, cut + 1), hi, prune, 1)
    merged = _merge_runs(runs)
    return [r for r in merged if r[1] - r[0] + 1 >= prune]


def _periodized_runs(
    ladder: Ladder, level: int, lo: int, hi: int, prune: int, shift: int
) -> list[tuple[int, int]]:
    """Certified intervals where the periodized level profile, read `shift`
    steps ahead, is identically one."""
    if lo > hi:
        return []
    p = ladder.p(level)
    period = 2 * p
    out = []
    a, b = lo + shift, hi + shift
    for k in range((a + p) // period, (b + p) // period + 1):
        seg_lo = max(a, period * k - p)
        seg_hi = min(b, period * k + p - 1)
        if seg_lo > seg_hi:
            continue
        for u, v in _certified_runs(
            ladder, level, seg_lo - period * k, seg_hi - period * k, prune
        ):
            out.append((u + period * k - shift, v + period * k - shift))
    return out


def _window_coverage(
    runs: list[tuple[int, int]], required: int, window: int, end: int
) -> bool:
    """True iff every length-`window` slice of [0, end] meets a run segment
    of at least `required` consecutive ones."""
    target = end - window + 1
    pos = 0
    for u, v in runs:
        a = max(0, u + required - window)
        b = v - required + 1
        if a > pos:
            return False
        if b >= pos:
            pos = b + 1
        if pos > target:
            return True
    return pos > target


def _worst_gap(runs: list[tuple[int, int]], required: int, end: int) -> int:
    """Largest jump between consecutive starting positions of a required-length
    all-ones block, counting the lead-in from coordinate zero; end + 1 when
    no qualifying run exists."""
    if not runs:
        return end + 1
    worst = runs[0][0]
    for (u0, v0), (u1, _) in zip(runs, runs[1:]):
        worst = max(worst, u1 - (v0 - required + 1))
    return worst


def check_ones_runs(
    ladder: Ladder, n: int, window_end: int, mode: str = "auto"
) -> OnesRunReport:
    """Certify that every length-2p[n] window of the sequence's first
    window_end + 1 coordinates contains at least p[n]/9 consecutive exact
    ones.

    Mode "scan" inspects every coordinate and is exact in both directions;
    mode "plateau" certifies runs through interval arithmetic and can only
    affirm (a False there means the certificate could not be built).  The
    default picks scan at level 1 and plateau above.
    """
    if n < 1:
        raise DomainError("run certificates start at level 1")
    ladder.ensure(n)
    window = 2 * ladder.p(n)
    required = ladder.p(n) // 9
    if 9 * required != ladder.p(n):
        raise AssertionError("level size is always divisible by nine")
    if window_end < window:
        raise ValueError("window_end must cover at least one full window")
    if mode == "auto":
        mode = "scan" if n == 1 else "plateau"
    if mode == "scan":
        runs_all: list[tuple[int, int]] = []
        start = None
        for i in range(window_end + 1):
            if eval_ainf(ladder, i) == ONE:
                if start is None:
                    start = i
            elif start is not None:
                runs_all.append((start, i - 1))
                start = None
        if start is not None:
            runs_all.append((start, window_end))
        runs = [r for r in runs_all if r[1] - r[0] + 1 >= required]
    elif mode == "plateau":
        prune = max(1, required // 8)
        top = ladder.ensure_cover(window_end)
        candidates = _certified_runs(ladder, top, 0, window_end, prune)
        for u, v in candidates:  # spot-check the interval arithmetic
            for probe in (u, (u + v) // 2, v):
                if eval_ainf(ladder, probe) != ONE:
                    raise AssertionError(
                        f"certified interval [{u}, {v}] fails at {probe}"
                    )
        runs = [r for r in candidates if r[1] - r[0] + 1 >= required]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    passed = _window_coverage(runs, required, window, window_end)
    return OnesRunReport(
        n=n,
        run_length_required=required,
        gap_bound=window,
        window=(0, window_end),
        passed=passed,
        worst_gap=_worst_gap(runs, required, window_end),
        first_run=runs[0] if runs else None,
        runs_found=len(runs),
        mode=mode,
    )
