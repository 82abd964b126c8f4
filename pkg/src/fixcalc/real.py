"""
Fixed points of piecewise-polynomial functions on a closed interval.

The real line is totally ordered, so every point ``x`` is pre-fixed
(``phi(x) < x``), post-fixed (``phi(x) > x``) or fixed, up to a tolerance.
Fixed points (roots of ``phi(x) - x``) and zeros (roots of ``phi(x)``)
are found by separate entry points over one grid-scan-plus-bisection
routine, and never share a code path that could blur the two.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np
from numpy.polynomial import Polynomial

from .errors import ConvergenceError, DomainError

DEFAULT_STEP = 0.01
DEFAULT_TOL = 1e-9
SEAM_TOL = 1e-12
MIN_INTERVAL_RUN = 3
MIN_DERIVATIVE = 1e-12
MONOTONE_SLACK = 1e-12
BISECTION_MAX_ITER = 200


@dataclass(frozen=True)
class Piece:
    lo: float
    hi: float
    coeffs: tuple[float, ...]  # ascending powers
    lo_closed: bool = True
    hi_closed: bool = True

    @property
    def poly(self) -> Polynomial:
        return Polynomial(self.coeffs)

    def contains(self, x: float) -> bool:
        above = x >= self.lo if self.lo_closed else x > self.lo
        below = x <= self.hi if self.hi_closed else x < self.hi
        return above and below


class RealFunctionSpec:
    """A total piecewise-polynomial function on ``[a, b]``.

    Pieces must tile the domain in order.  At each seam exactly one side
    should own the endpoint; if both sides are closed the left piece owns
    it, and if neither is the seam is rejected as a gap.  Pieces must agree
    at every seam to within ``1e-12``.
    """

    def __init__(self, name: str, pieces: Sequence[Piece]):
        if not pieces:
            raise DomainError("a function needs at least one piece")
        pieces = tuple(pieces)
        for p in pieces:
            if not p.lo < p.hi:
                raise DomainError(f"piece [{p.lo}, {p.hi}] of {name!r} is empty")
        if not (pieces[0].lo_closed and pieces[-1].hi_closed):
            raise DomainError(f"domain of {name!r} must be a closed interval")
        for left, right in zip(pieces, pieces[1:]):
            if left.hi != right.lo:
                raise DomainError(f"pieces of {name!r} do not touch at {left.hi} / {right.lo}")
            if not (left.hi_closed or right.lo_closed):
                raise DomainError(f"seam at {left.hi} of {name!r} belongs to no piece")
            lv, rv = float(left.poly(left.hi)), float(right.poly(right.lo))
            if abs(lv - rv) > SEAM_TOL * max(1.0, abs(lv)):
                raise DomainError(
                    f"pieces of {name!r} disagree at seam {left.hi}: {lv!r} vs {rv!r}"
                )
        self.name = name
        self.pieces = pieces
        self._polys = [p.poly for p in pieces]
        self._derivs = [poly.deriv() for poly in self._polys]

    @property
    def domain(self) -> tuple[float, float]:
        return self.pieces[0].lo, self.pieces[-1].hi

    def _index(self, x: float) -> int:
        for i, p in enumerate(self.pieces):
            if p.contains(x):
                return i
        a, b = self.domain
        raise DomainError(f"{x!r} is outside the domain [{a}, {b}] of {self.name!r}")

    def __call__(self, x: float) -> float:
        return float(self._polys[self._index(x)](x))

    def derivative(self, x: float) -> float:
        """Exact derivative of the piece that owns ``x``."""
        return float(self._derivs[self._index(x)](x))

    def __repr__(self):
        return f"RealFunctionSpec({self.name!r}, domain={self.domain})"


def builtin_f() -> RealFunctionSpec:
    """``f(x) = (x-5)**3 - 5x + 29`` on ``[-1, 10]``."""
    return RealFunctionSpec("f", [Piece(-1.0, 10.0, (-96.0, 70.0, -15.0, 1.0))])


def builtin_g() -> RealFunctionSpec:
    """Monotone ``g``: ``x**2/4`` on ``[0,4)``, ``x`` on ``[4,6]``, ``(x-8)**3/4 + 8`` on ``(6,10]``."""
    return RealFunctionSpec("g", [
        Piece(0.0, 4.0, (0.0, 0.0, 0.25), True, False),
        Piece(4.0, 6.0, (0.0, 1.0), True, True),
        Piece(6.0, 10.0, (-120.0, 48.0, -6.0, 0.25), False, True),
    ])


def identity_spec(a: float, b: float) -> RealFunctionSpec:
    return RealFunctionSpec("identity", [Piece(float(a), float(b), (0.0, 1.0))])


def load_function(path) -> RealFunctionSpec:
    """Read a function from JSON.

    ``{"name": "h", "pieces": [{"lo": 0, "hi": 1, "coeffs": [0, 1],
    "lo_closed": true, "hi_closed": true}, ...]}``; coefficients are in
    ascending powers and the closedness flags default to true.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        pieces = [
            Piece(float(p["lo"]), float(p["hi"]), tuple(float(c) for c in p["coeffs"]),
                  bool(p.get("lo_closed", True)), bool(p.get("hi_closed", True)))
            for p in data["pieces"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"cannot read function from {path}: {exc}") from None
    return RealFunctionSpec(str(data.get("name", path.stem)), pieces)


class RealPointClass(str, enum.Enum):
    PRE_FIXED = "pre-fixed"
    POST_FIXED = "post-fixed"
    FIXED = "fixed"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FixedPointResult:
    location: float
    residual: float
    method: str  # "bisection", "newton", "iteration" or "scan"
    iterations: int
    bracket: Optional[tuple[float, float]] = None


@dataclass(frozen=True)
class RootScan:
    points: list[FixedPointResult] = field(default_factory=list)
    intervals: list[tuple[float, float]] = field(default_factory=list)


@dataclass(frozen=True)
class MonotonicityScan:
    holds: bool
    counterexample: Optional[tuple[float, float]]
    pairs_checked: int


def _check_tol(tol):
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")


def classify_point(spec: RealFunctionSpec, x: float, tol: float = DEFAULT_TOL) -> RealPointClass:
    _check_tol(tol)
    r = spec(x) - x
    if abs(r) <= tol:
        return RealPointClass.FIXED
    return RealPointClass.PRE_FIXED if r < 0 else RealPointClass.POST_FIXED


def grid(spec: RealFunctionSpec, step: float) -> np.ndarray:
    """Points ``a, a+step, ...`` up to ``b``, with ``b`` itself always last."""
    if not step > 0:
        raise DomainError(f"step must be positive, got {step}")
    a, b = spec.domain
    n = math.floor((b - a) / step + 1e-9)
    # rounding strips float drift like 7.529999999999999 from decimal steps
    xs = np.round(a + step * np.arange(n + 1), 12)
    xs = xs[xs <= b]
    if b - xs[-1] > 1e-9 * max(1.0, abs(b)):
        xs = np.append(xs, b)
    else:
        xs[-1] = b
    return xs


def _bisect(r: Callable[[float], float], lo: float, hi: float, rlo: float, tol: float):
    iterations = 0
    while True:
        iterations += 1
        mid = 0.5 * (lo + hi)
        rmid = r(mid)
        if abs(rmid) <= tol or mid in (lo, hi) or iterations >= BISECTION_MAX_ITER:
            return mid, rmid, iterations
        if (rmid < 0) == (rlo < 0):
            lo, rlo = mid, rmid
        else:
            hi = mid


def scan_roots(spec: RealFunctionSpec, r: Callable[[float], float], step: float,
               tol: float) -> RootScan:
    """Roots of ``r`` on the grid of ``spec``'s domain.

    Runs of at least three grid points with ``|r| <= tol`` become intervals.
    Shorter runs are isolated roots: refined by bisection when ``r`` changes
    sign across the run, otherwise (a tangency, or a run at the domain edge)
    reported at the best grid point with no bracket.  Every sign change
    between two grid points outside any run is refined by bisection.
    """
    _check_tol(tol)
    xs = grid(spec, step)
    rs = [r(float(x)) for x in xs]
    near = [abs(v) <= tol for v in rs]
    points, intervals = [], []

    def bisected(i, j):
        lo, hi = float(xs[i]), float(xs[j])
        loc, res, its = _bisect(r, lo, hi, rs[i], tol)
        return FixedPointResult(loc, abs(res), "bisection", its, (lo, hi))

    i, n = 0, len(xs)
    while i < n:
        if near[i]:
            j = i
            while j + 1 < n and near[j + 1]:
                j += 1
            if j - i + 1 >= MIN_INTERVAL_RUN:
                intervals.append((float(xs[i]), float(xs[j])))
            else:
                before, after = i - 1, j + 1
                if before >= 0 and after < n and (rs[before] < 0) != (rs[after] < 0):
                    points.append(bisected(before, after))
                else:
                    k = min(range(i, j + 1), key=lambda m: abs(rs[m]))
                    points.append(FixedPointResult(float(xs[k]), abs(rs[k]), "scan", 0, None))
            i = j + 1
            continue
        if i + 1 < n and not near[i + 1] and (rs[i] < 0) != (rs[i + 1] < 0):
            points.append(bisected(i, i + 1))
        i += 1
    points.sort(key=lambda p: p.location)
    return RootScan(points, intervals)


def find_fixed_points(spec: RealFunctionSpec, step: float = DEFAULT_STEP,
                      tol: float = DEFAULT_TOL) -> RootScan:
    return scan_roots(spec, lambda x: spec(x) - x, step, tol)


def find_zeros(spec: RealFunctionSpec, step: float = DEFAULT_STEP,
               tol: float = DEFAULT_TOL) -> list[float]:
    """Isolated zeros of ``spec`` itself (not of ``spec(x) - x``)."""
    return [p.location for p in scan_roots(spec, spec, step, tol).points]


def _in_domain(spec, x):
    a, b = spec.domain
    return a <= x <= b


def newton_fixed_point(spec: RealFunctionSpec, x0: float, tol: float = DEFAULT_TOL,
                       max_iter: int = 50) -> FixedPointResult:
    """Newton's method on ``spec(x) - x`` using exact piece derivatives."""
    _check_tol(tol)
    if max_iter < 1:
        raise DomainError("max_iter must be at least 1")
    if not _in_domain(spec, x0):
        raise DomainError(f"start {x0} is outside the domain of {spec.name!r}")
    x = float(x0)
    trace = [x]
    for k in range(max_iter + 1):
        r = spec(x) - x
        if abs(r) <= tol:
            return FixedPointResult(x, abs(r), "newton", k)
        if k == max_iter:
            break
        dr = spec.derivative(x) - 1.0
        if abs(dr) < MIN_DERIVATIVE:
            raise ConvergenceError(
                f"derivative of phi(x) - x vanishes at {x!r}", "derivative-too-small", trace)
        x = x - r / dr
        trace.append(x)
        if not _in_domain(spec, x):
            raise ConvergenceError(f"Newton iterate {x!r} left the domain", "left-domain", trace)
    raise ConvergenceError(
        f"Newton did not converge within {max_iter} iterations", "non-convergence", trace)


def fixed_point_iteration(spec: RealFunctionSpec, x0: float, tol: float = DEFAULT_TOL,
                          max_iter: int = 100) -> FixedPointResult:
    """Iterate ``x -> spec(x)`` until successive iterates are within ``tol``."""
    _check_tol(tol)
    if max_iter < 1:
        raise DomainError("max_iter must be at least 1")
    if not _in_domain(spec, x0):
        raise DomainError(f"start {x0} is outside the domain of {spec.name!r}")
    x = float(x0)
    trace = [x]
    for k in range(1, max_iter + 1):
        nxt = spec(x)
        trace.append(nxt)
        if not _in_domain(spec, nxt):
            raise ConvergenceError(f"iterate {nxt!r} left the domain", "left-domain", trace)
        if abs(nxt - x) <= tol:
            return FixedPointResult(nxt, abs(spec(nxt) - nxt), "iteration", k)
        x = nxt
    raise ConvergenceError(
        f"iteration did not settle within {max_iter} steps", "non-convergence", trace)


def monotonicity_scan(spec: RealFunctionSpec, samples: int = 1000) -> MonotonicityScan:
    """Check ``phi(x_i) <= phi(x_j) + 1e-12`` for all grid pairs ``i < j``.

    The first violation in lexicographic ``(i, j)`` order is reported.
    """
    if samples < 2:
        raise DomainError("need at least two samples")
    a, b = spec.domain
    xs = np.linspace(a, b, samples)
    vals = np.array([spec(float(x)) for x in xs])
    # suffix_min[i] = min(vals[i:])
    suffix_min = np.minimum.accumulate(vals[::-1])[::-1]
    bad = np.flatnonzero(vals[:-1] > suffix_min[1:] + MONOTONE_SLACK)
    pairs = samples * (samples - 1) // 2
    if bad.size == 0:
        return MonotonicityScan(True, None, pairs)
    i = int(bad[0])
    j = i + 1 + int(np.flatnonzero(vals[i + 1:] < vals[i] - MONOTONE_SLACK)[0])
    return MonotonicityScan(False, (float(xs[i]), float(xs[j])), pairs)


def plot_rows(spec: RealFunctionSpec, step: float = DEFAULT_STEP, tol: float = DEFAULT_TOL):
    """Yield ``(x, phi(x), x, class)`` on the scan grid for overlay plots."""
    for x in grid(spec, step):
        x = float(x)
        yield x, spec(x), x, classify_point(spec, x, tol)
