"""Finite-evidence verdicts for orbit-pair relations.

A pair of orbit views can be certified proximal (some time brings them
within tau), delta-separated (some time pushes them at least delta - tau
apart), or jointly recurrent (some time nearly returns both to their
starts).  Every verdict is backed by an explicit witness time and an exact
distance bracket; anything not witnessed within the search horizon is
labeled inconclusive rather than refuted.

Searches scan a closed time range.  The range may be partitioned for
parallel execution; partitioning never changes the result because chunks
are reduced in order and ties always prefer the smallest time.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .ladder import Ladder, Rational, eval_ainf
from .sequence import DistBracket, SeqWindow

PROXIMAL_WITNESSED = "proximal-witnessed"
DELTA_SEPARATED_WITNESSED = "delta-separated-witnessed"
PAIR_RECURRENT_WITNESSED = "pair-recurrent-witnessed"
INCONCLUSIVE = "inconclusive"

ZERO = Fraction(0)


class NotFoundInHorizonError(Exception):
    """The requested pattern does not occur within the search horizon."""


class OrbitSource:
    """Lazy coordinate access to a one-sided orbit point.

    kind is one of "alpha-orbit", "window-file", "full-shift-fixture" or
    "constant"; length is None for sources that can produce arbitrarily
    many coordinates.
    """

    def __init__(
        self,
        kind: str,
        fn: Callable[[int], Fraction],
        length: int | None = None,
        cache: bool = False,
    ):
        self.kind = kind
        self.length = length
        self._fn = fn
        self._cache: dict[int, Fraction] | None = {} if cache else None

    def value(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("orbit coordinates are nonnegative")
        if self.length is not None and i >= self.length:
            raise IndexError(
                f"coordinate {i} beyond orbit data of length {self.length}"
            )
        if self._cache is None:
            return self._fn(i)
        v = self._cache.get(i)
        if v is None:
            v = self._cache[i] = self._fn(i)
        return v


def alpha_source(ladder: Ladder) -> OrbitSource:
    return OrbitSource("alpha-orbit", lambda i: eval_ainf(ladder, i), cache=True)


def window_source(window: SeqWindow, kind: str = "window-file") -> OrbitSource:
    values = window.values
    return OrbitSource(kind, lambda i: values[i], length=len(values))


def fixture_source(window: SeqWindow) -> OrbitSource:
    return window_source(window, kind="full-shift-fixture")


def constant_source(value: Rational) -> OrbitSource:
    v = Fraction(value)
    return OrbitSource("constant", lambda i: v)


def ones_source() -> OrbitSource:
    """The all-ones fixed point, the distinguished target for proximality."""
    return constant_source(1)


def zeros_source() -> OrbitSource:
    return constant_source(0)


@dataclass(frozen=True)
class OrbitView:
    """An orbit source read from a fixed shift onward."""

    source: OrbitSource
    shift: int = 0

    def __post_init__(self):
        if self.shift < 0:
            raise ValueError("view shift must be nonnegative")

    def value(self, i: int) -> Fraction:
        return self.source.value(self.shift + i)

    def max_time(self, k: int) -> int | None:
        """Largest time t for which coordinates t..t+k-1 are available."""
        if self.source.length is None:
            return None
        return self.source.length - self.shift - k


def _check_span(views: Sequence[OrbitView], start: int, horizon: int, k: int) -> None:
    if k < 1:
        raise ValueError("prefix length must be at least 1")
    if start < 0 or horizon < start:
        raise ValueError("need 0 <= start <= horizon")
    for view in views:
        limit = view.max_time(k)
        if limit is not None and horizon > limit:
            raise ValueError(
                f"horizon {horizon} exceeds available data (max {limit})"
            )


def _chunks(start: int, stop: int, parts: int) -> list[tuple[int, int]]:
    total = stop - start + 1
    parts = max(1, min(parts, total))
    size = -(-total // parts)
    out = []
    a = start
    while a <= stop:
        b = min(stop, a + size - 1)
        out.append((a, b))
        a = b + 1
    return out


def _scan_extreme(
    a: OrbitView,
    b: OrbitView,
    start: int,
    horizon: int,
    k: int,
    want_max: bool,
    parallelism: int,
) -> tuple[int, Fraction]:
    """Extremal bracket lower sum over [start, horizon], smallest time on ties.

    Chunked sliding-window evaluation; exact arithmetic makes the chunking
    invisible in the result.  Stops early once the theoretical extreme is
    reached, which can only happen at the smallest qualifying time.
    """
    width = Fraction(2) ** (1 - k)
    extreme = 2 - width if want_max else ZERO
    best_t: int | None = None
    best_lo: Fraction | None = None
    for c0, c1 in _chunks(start, horizon, parallelism):
        diffs = [abs(a.value(i) - b.value(i)) for i in range(c0, c1 + k)]
        lo = sum(
            (d / Fraction(2) ** j for j, d in enumerate(diffs[:k])), ZERO
        )
        t = c0
        while True:
            better = (
                best_lo is None
                or (lo > best_lo if want_max else lo < best_lo)
            )
            if better:
                best_t, best_lo = t, lo
                if lo == extreme:
                    return best_t, best_lo
            if t == c1:
                break
            lo = 2 * (lo - diffs[t - c0]) + diffs[t - c0 + k] * width
            t += 1
    assert best_t is not None and best_lo is not None
    return best_t, best_lo


def prox_defect(
    a: OrbitView,
    b: OrbitView,
    start: int,
    horizon: int,
    k: int,
    parallelism: int = 1,
) -> tuple[int, DistBracket]:
    """Time in [start, horizon] with the smallest distance bracket between
    the two t-shifted views, compared at prefix length k."""
    _check_span([a, b], start, horizon, k)
    t, lo = _scan_extreme(a, b, start, horizon, k, False, parallelism)
    return t, DistBracket(lo, lo + Fraction(2) ** (1 - k))


def sep_sup(
    a: OrbitView,
    b: OrbitView,
    start: int,
    horizon: int,
    k: int,
    parallelism: int = 1,
) -> tuple[int, DistBracket]:
    """Time in [start, horizon] with the largest certified separation."""
    _check_span([a, b], start, horizon, k)
    t, lo = _scan_extreme(a, b, start, horizon, k, True, parallelism)
    return t, DistBracket(lo, lo + Fraction(2) ** (1 - k))


def pair_recur_defect(
    a: OrbitView,
    b: OrbitView,
    start: int,
    horizon: int,
    k: int,
    parallelism: int = 1,
) -> tuple[int, DistBracket]:
    """Time whose shift nearly returns both views to their own start.

    Minimizes the worse of the two self-return brackets; the reported
    bracket is that worse one.
    """
    _check_span([a, b], start, horizon, k)
    width = Fraction(2) ** (1 - k)
    weights = [Fraction(2) ** -i for i in range(k)]
    base_a = [a.value(i) for i in range(k)]
    base_b = [b.value(i) for i in range(k)]
    best_t: int | None = None
    best_lo: Fraction | None = None
    for c0, c1 in _chunks(start, horizon, parallelism):
        for t in range(c0, c1 + 1):
            lo_a = sum(
                (abs(a.value(t + i) - base_a[i]) * weights[i] for i in range(k)),
                ZERO,
            )
            lo_b = sum(
                (abs(b.value(t + i) - base_b[i]) * weights[i] for i in range(k)),
                ZERO,
            )
            lo = max(lo_a, lo_b)
            if best_lo is None or lo < best_lo:
                best_t, best_lo = t, lo
                if lo == ZERO:
                    return best_t, DistBracket(ZERO, width)
    assert best_t is not None and best_lo is not None
    return best_t, DistBracket(best_lo, best_lo + width)


@dataclass(frozen=True)
class PairVerdict:
    """Outcome of the witness searches for one pair of orbit views.

    Witness fields are populated only when the corresponding threshold was
    met; each holds the witness time and the exact bracket value the label
    rests on (upper bound for proximity and recurrence, lower bound for
    separation).  A clause searched without success contributes the
    "inconclusive" label instead of a refutation.
    """

    labels: tuple[str, ...]
    delta: Fraction | None
    horizon: tuple[int, int]
    prefix_len: int
    tau: Fraction
    prox_witness: tuple[int, Fraction] | None
    sep_witness: tuple[int, Fraction] | None
    recur_witness: tuple[int, Fraction] | None
    pair: tuple[int, int] | None = None

    def to_json_dict(self) -> dict:
        def witness(w):
            if w is None:
                return None
            t, value = w
            return {"time": t, "value": f"{value.numerator}/{value.denominator}"}

        return {
            "schema": "wk-report/1",
            "kind": "pair-verdict",
            "labels": list(self.labels),
            "delta": None
            if self.delta is None
            else f"{self.delta.numerator}/{self.delta.denominator}",
            "horizon": list(self.horizon),
            "prefix_len": self.prefix_len,
            "tau": f"{self.tau.numerator}/{self.tau.denominator}",
            "prox_witness": witness(self.prox_witness),
            "sep_witness": witness(self.sep_witness),
            "recur_witness": witness(self.recur_witness),
            "pair": list(self.pair) if self.pair else None,
        }


def _labels(*clauses: tuple[str, bool]) -> tuple[str, ...]:
    out = [name for name, hit in clauses if hit]
    if any(not hit for _, hit in clauses):
        out.append(INCONCLUSIVE)
    return tuple(out)


def classify_pair(
    a: OrbitView,
    b: OrbitView,
    delta: Rational,
    start: int,
    horizon: int,
    k: int,
    tau: Rational,
    parallelism: int = 1,
) -> PairVerdict:
    """Run the three witness searches on one pair and label the outcome."""
    delta, tau = Fraction(delta), Fraction(tau)
    if delta <= 0 or tau <= 0:
        raise ValueError("delta and tau must be positive")
    pt, pbr = prox_defect(a, b, start, horizon, k, parallelism)
    st, sbr = sep_sup(a, b, start, horizon, k, parallelism)
    rt, rbr = pair_recur_defect(a, b, start, horizon, k, parallelism)
    prox_hit = pbr.hi < tau
    sep_hit = sbr.lo >= delta - tau
    recur_hit = rbr.hi < tau
    return PairVerdict(
        labels=_labels(
            (PROXIMAL_WITNESSED, prox_hit),
            (DELTA_SEPARATED_WITNESSED, sep_hit),
            (PAIR_RECURRENT_WITNESSED, recur_hit),
        ),
        delta=delta,
        horizon=(start, horizon),
        prefix_len=k,
        tau=tau,
        prox_witness=(pt, pbr.hi) if prox_hit else None,
        sep_witness=(st, sbr.lo) if sep_hit else None,
        recur_witness=(rt, rbr.hi) if recur_hit else None,
    )


def _joint_prox_to_point(
    x: OrbitSource,
    shifts: tuple[int, int],
    point: OrbitSource,
    horizon: int,
    k: int,
    parallelism: int,
) -> tuple[int, Fraction]:
    """Time minimizing the worse of the two distances from the t-shifted
    views to a fixed target point; returns (time, worse bracket hi)."""
    width = Fraction(2) ** (1 - k)
    weights = [Fraction(2) ** -i for i in range(k)]
    target = [point.value(i) for i in range(k)]
    m, n = shifts
    best_t: int | None = None
    best_lo: Fraction | None = None
    for c0, c1 in _chunks(0, horizon, parallelism):
        for t in range(c0, c1 + 1):
            lo_m = sum(
                (abs(x.value(t + m + i) - target[i]) * weights[i] for i in range(k)),
                ZERO,
            )
            lo_n = sum(
                (abs(x.value(t + n + i) - target[i]) * weights[i] for i in range(k)),
                ZERO,
            )
            lo = max(lo_m, lo_n)
            if best_lo is None or lo < best_lo:
                best_t, best_lo = t, lo
                if lo == ZERO:
                    return best_t, width
    assert best_t is not None and best_lo is not None
    return best_t, best_lo + width


def thmB_witnesses(
    x: OrbitSource,
    fixed_point: OrbitSource,
    pairs: Iterable[tuple[int, int]],
    horizon: int,
    k: int,
    tau: Rational,
    parallelism: int = 1,
) -> list[PairVerdict]:
    """For each pair of distinct shifts of one orbit, search for a time that
    carries both shifted views close to the fixed point (the proximality
    mechanism) and for a joint near-return (the recurrence half)."""
    tau = Fraction(tau)
    if tau <= 0:
        raise ValueError("tau must be positive")
    verdicts = []
    for m, n in pairs:
        if m == n:
            raise ValueError("pairs must use two distinct shifts")
        if m < 0 or n < 0:
            raise ValueError("shifts must be nonnegative")
        hi_shift = max(m, n)
        _check_span(
            [OrbitView(x, hi_shift)], 0, horizon, k
        )
        pt, p_hi = _joint_prox_to_point(
            x, (m, n), fixed_point, horizon, k, parallelism
        )
        rt, rbr = pair_recur_defect(
            OrbitView(x, m), OrbitView(x, n), 1, horizon, k, parallelism
        )
        prox_hit = p_hi < tau
        recur_hit = rbr.hi < tau
        verdicts.append(
            PairVerdict(
                labels=_labels(
                    (PROXIMAL_WITNESSED, prox_hit),
                    (PAIR_RECURRENT_WITNESSED, recur_hit),
                ),
                delta=None,
                horizon=(0, horizon),
                prefix_len=k,
                tau=tau,
                prox_witness=(pt, p_hi) if prox_hit else None,
                sep_witness=None,
                recur_witness=(rt, rbr.hi) if recur_hit else None,
                pair=(m, n),
            )
        )
    return verdicts


def thmC_witnesses(
    x: OrbitSource,
    q: int,
    delta: Rational,
    horizon: int,
    k: int,
    tau: Rational,
    parallelism: int = 1,
) -> PairVerdict:
    """Separate the orbit from its q-shift through an occurrence of the
    alternating-blocks pattern (q zeros, q ones, repeating), then search
    for proximity of the same pair.

    The occurrence must fit inside the horizon: coordinates t .. t+q+k-1
    all lie in [0, horizon].  Raises NotFoundInHorizonError when no such
    occurrence exists.
    """
    delta, tau = Fraction(delta), Fraction(tau)
    if q < 1:
        raise ValueError("block length must be at least 1")
    if delta <= 0 or tau <= 0:
        raise ValueError("delta and tau must be positive")
    need = q + k
    top = horizon - need + 1
    if x.length is not None:
        top = min(top, x.length - need)
    found = None
    if top >= 0:
        for c0, c1 in _chunks(0, top, parallelism):
            for t in range(c0, c1 + 1):
                if all(
                    x.value(t + i) == ((i // q) % 2) for i in range(need)
                ):
                    found = t
                    break
            if found is not None:
                break
    if found is None:
        raise NotFoundInHorizonError(
            f"no block-alternating occurrence of length {need} within horizon {horizon}"
        )
    weights = [Fraction(2) ** -i for i in range(k)]
    sep_lo = sum(
        (abs(x.value(found + i) - x.value(found + q + i)) * weights[i] for i in range(k)),
        ZERO,
    )
    prox_top = top  # same read bounds apply to the shifted pair
    pt, pbr = prox_defect(
        OrbitView(x, 0), OrbitView(x, q), 0, prox_top, k, parallelism
    )
    sep_hit = sep_lo >= delta - tau
    prox_hit = pbr.hi < tau
    return PairVerdict(
        labels=_labels(
            (PROXIMAL_WITNESSED, prox_hit),
            (DELTA_SEPARATED_WITNESSED, sep_hit),
        ),
        delta=delta,
        horizon=(0, horizon),
        prefix_len=k,
        tau=tau,
        prox_witness=(pt, pbr.hi) if prox_hit else None,
        sep_witness=(found, sep_lo) if sep_hit else None,
        recur_witness=None,
        pair=(0, q),
    )
