"""Constructions of sparse stable disc configurations.

Contains the perturbed-curve bridge chain, its symmetric planar completion,
the wall-resting half bridge, the six-disc corner junction, the assembled
stable square configuration, the five-disc square configuration, and the
truncated-hexagonal (3.12.12) tiling configuration.
"""

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .configuration import Configuration
from .geometry import (DEFAULT_TOL, GeometryError, Tolerances, chord_step,
                       circle_circle_intersections, dist)

SQRT3 = math.sqrt(3.0)
F_AT_ZERO = 2.0 + SQRT3        # forced starting height of the upper row
F_LIMIT = 2.0 * SQRT3          # asymptote of the base curve

DEFAULT_LAMBDA = 0.05
DEFAULT_EPS_HI = 50.0


class ConstructionError(ValueError):
    """A construction precondition or postcondition failed."""


class TuningError(ConstructionError):
    """Closure tuning could not bracket a root."""


class AssemblyError(ConstructionError):
    """Square assembly produced an invalid or unstable configuration."""


def _default_base(lam: float) -> Callable[[float], float]:
    def f(x: float) -> float:
        return F_LIMIT + (2.0 - SQRT3) * math.exp(-lam * x)
    return f


@dataclass
class CurveFamily:
    """Strictly convex decreasing curve f plus its epsilon perturbation.

    The perturbed curve is f_eps(x) = (1+eps) f(x) - eps f(0), which keeps
    f_eps(0) = f(0) while lowering the asymptote.  The default base is
    f(x) = 2 sqrt(3) + (2 - sqrt(3)) exp(-lam x).
    """

    lam: float = DEFAULT_LAMBDA
    epsilon: float = 0.0
    base: Callable[[float], float] | None = None

    def __post_init__(self):
        if self.lam <= 0:
            raise ConstructionError("shape parameter lam must be positive")
        if self.epsilon < 0:
            raise ConstructionError("epsilon must be nonnegative")
        if self.base is None:
            self.base = _default_base(self.lam)
        if abs(self.base(0.0) - F_AT_ZERO) > 1e-12:
            raise ConstructionError("base curve must satisfy f(0) = 2 + sqrt(3)")
        if not self.base(1.0) < self.base(0.0):
            raise ConstructionError("base curve must be strictly decreasing")

    def with_epsilon(self, epsilon: float) -> "CurveFamily":
        return CurveFamily(self.lam, epsilon, self.base)


def curve_eval(family: CurveFamily, x: float) -> float:
    """Evaluate the perturbed curve f_eps at x >= 0."""
    if x < 0:
        raise ConstructionError("curve is only defined for x >= 0")
    return (1.0 + family.epsilon) * family.base(x) - family.epsilon * family.base(0.0)


@dataclass
class BridgeChain:
    """The three rows of the bridge: a on the curve, b intermediate, c on
    the axis, plus the index N of the last constructed b and the mirror
    line l at x(b_N)."""

    a: list
    b: list
    c: list
    N: int
    epsilon_used: float
    mirror_x: float
    terminated_at: tuple | None = None


def build_half_chain(family: CurveFamily, max_N: int,
                     tol: Tolerances = DEFAULT_TOL) -> BridgeChain:
    """Grow the chain a_1 = (0, 2+sqrt(3)), b_1 = (0, sqrt(3)), c_1 = (1, 0)
    until max_N rows of b exist or the recursion terminates.

    Each step advances a by a chord of length 2 along the curve, places
    b_{i+1} at the larger-x intersection of the radius-2 circles about
    a_{i+1} and c_i, and drops c_{i+1} onto the axis tangent to b_{i+1}.
    Termination reasons: 'no_b' when a_{i+1} is farther than 4 from c_i,
    'no_c' when b_{i+1} rises above height 2.
    """
    if max_N < 2:
        raise ConstructionError("max_N must be at least 2")

    def f(x):
        return curve_eval(family, x)

    a = [(0.0, f(0.0))]
    b = [(0.0, SQRT3)]
    c = [(1.0, 0.0)]
    term = None
    for i in range(1, max_N):
        xn = chord_step(f, a[-1][0], 2.0, tol)
        an = (xn, f(xn))
        pts = circle_circle_intersections(an, 2.0, c[-1], 2.0, tol)
        if not pts:
            term = ("no_b", i + 1)
            break
        bn = max(pts, key=lambda p: p[0])
        if bn[1] > 2.0:
            a.append(an)
            b.append(bn)
            term = ("no_c", i + 1)
            break
        a.append(an)
        b.append(bn)
        c.append((bn[0] + math.sqrt(4.0 - bn[1] ** 2), 0.0))
    return BridgeChain(a, b, c, len(b), family.epsilon, b[-1][0], term)


def _closure_residual(family: CurveFamily, N: int, epsilon: float,
                      tol: Tolerances) -> float:
    """g(eps) = x(b_N) - x(a_N) - 1; chains that terminate before N take
    the sign of the large-epsilon side."""
    chain = build_half_chain(family.with_epsilon(epsilon), N, tol)
    if chain.terminated_at is not None and chain.N < N:
        return 1.0
    return chain.b[N - 1][0] - chain.a[N - 1][0] - 1.0


def tune_epsilon(family: CurveFamily, N: int, eps_hi: float = DEFAULT_EPS_HI,
                 tol: Tolerances = DEFAULT_TOL) -> tuple[float, BridgeChain]:
    """Find epsilon* closing the bridge at depth N: x(b_N) - x(a_N) = 1.

    Scans 64 log-spaced epsilon values over eight decades up to eps_hi for
    a sign change of the closure residual, then bisects.
    """
    if N < 2:
        raise ConstructionError("N must be at least 2")
    if eps_hi <= 0:
        raise ConstructionError("eps_hi must be positive")

    def g(eps):
        return _closure_residual(family, N, eps, tol)

    probes = [eps_hi * 10.0 ** (-8.0 * (1.0 - k / 63.0)) for k in range(64)]
    lo = hi = None
    prev = None
    for e in probes:
        ge = g(e)
        if prev is not None and prev[1] * ge < 0:
            lo, hi = prev[0], e
            break
        prev = (e, ge)
    if lo is None:
        raise TuningError(
            "no closure bracket for N=%d with eps_hi=%g" % (N, eps_hi))

    glo = g(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if glo * gm <= 0:
            hi = mid
        else:
            lo, glo = mid, gm
        if hi - lo < 1e-16 * max(1.0, hi):
            break
    eps_star = min((lo, hi, 0.5 * (lo + hi)), key=lambda e: abs(g(e)))
    if abs(g(eps_star)) > 10.0 * tol.solver_abs:
        raise TuningError(
            "closure residual %.3g exceeds tolerance at N=%d"
            % (g(eps_star), N))
    chain = build_half_chain(family.with_epsilon(eps_star), N, tol)
    return eps_star, chain


def _check_tuned(chain: BridgeChain, tol: Tolerances):
    res = chain.b[chain.N - 1][0] - chain.a[chain.N - 1][0] - 1.0
    if abs(res) > tol.tangency_rel:
        raise ConstructionError(
            "chain is not tuned: closure residual %.3g" % res)


def _dedup_guard(points: list, allowed_pairs: int, tol: Tolerances):
    """Fail if any two centers nearly coincide; allowed_pairs near-coincident
    pairs are expected shared discs and must be exactly zero here because
    shared discs are never emitted twice."""
    close = 0
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if dist(points[i], points[j]) < 2.0 * tol.solver_abs:
                close += 1
    if close > allowed_pairs:
        raise ConstructionError(
            "unexpected coincident centers: %d pairs" % close)


def complete_symmetric_bridge(chain: BridgeChain,
                              tol: Tolerances = DEFAULT_TOL) -> Configuration:
    """Mirror a tuned chain across the x-axis and across the vertical line l
    through b_N, producing the planar symmetric bridge of 10N - 4 unit discs.
    """
    _check_tuned(chain, tol)
    N = chain.N
    xl = chain.mirror_x
    half = list(chain.a[:N]) + list(chain.b[:N]) + list(chain.c[:N - 1])
    # x-axis mirror duplicates a and b rows; c sits on the axis
    full = list(half) + [(p[0], -p[1]) for p in half if p[1] > 0.0]
    pts = list(full)
    for p in full:
        if abs(p[0] - xl) > tol.solver_abs:
            pts.append((2.0 * xl - p[0], p[1]))
    _dedup_guard(pts, 0, tol)
    if len(pts) != 10 * N - 4:
        raise ConstructionError(
            "bridge disc count %d, expected %d" % (len(pts), 10 * N - 4))
    meta = {"construction": "symmetric-bridge", "N": N,
            "epsilon": chain.epsilon_used, "mirror_x": xl}
    return Configuration(1.0, np.array(pts), None, meta)


def _wall_half_bridge_points(chain: BridgeChain, tol: Tolerances) -> list:
    """Half bridge in the chain frame (c row at y = 0), l-mirrored."""
    N = chain.N
    xl = chain.mirror_x
    half = list(chain.a[:N]) + list(chain.b[:N]) + list(chain.c[:N - 1])
    pts = list(half)
    for p in half:
        if abs(p[0] - xl) > tol.solver_abs:
            pts.append((2.0 * xl - p[0], p[1]))
    return pts


def build_wall_bridge(family: CurveFamily, N: int, wall_y: float = 0.0,
                      eps_hi: float = DEFAULT_EPS_HI,
                      tol: Tolerances = DEFAULT_TOL) -> Configuration:
    """Half bridge resting on a wall: the c row is tangent to the wall,
    which replaces the x-axis mirror; the chain is still mirrored about l.

    The returned box has its bottom edge on the wall; wall_y records where
    the caller's wall sits and is kept as metadata only.  Disc count is
    6N - 3.
    """
    eps, chain = tune_epsilon(family, N, eps_hi, tol)
    pts = _wall_half_bridge_points(chain, tol)
    if len(pts) != 6 * N - 3:
        raise ConstructionError(
            "wall bridge disc count %d, expected %d" % (len(pts), 6 * N - 3))
    margin = 5.0
    # chain frame -> box frame: wall at y=0, generous margins elsewhere
    shifted = [(p[0] + margin, p[1] + 1.0) for p in pts]
    xs = [p[0] for p in shifted]
    ys = [p[1] for p in shifted]
    box = (max(xs) + 1.0 + margin, max(ys) + 1.0 + margin)
    meta = {"construction": "wall-bridge", "N": N, "epsilon": eps,
            "wall_y": wall_y}
    return Configuration(1.0, np.array(shifted), box, meta)


# Corner piece in the frame where the container walls are x=-1 and y=-1.
_JUNCTION = [(0.0, 0.0), (0.0, 2.0), (2.0, 0.0),
             (2.0 + SQRT3, 1.0), (1.0, 2.0 + SQRT3),
             (1.0 + SQRT3, 1.0 + SQRT3)]

# Clamp discs that pin the junction fan and the adjacent bridge ends when
# the square is assembled: one on each wall, two along the diagonal flanks,
# and one on the diagonal itself.
_CLAMPS = [(2.0 + 2.0 * SQRT3, 0.0), (0.0, 2.0 + 2.0 * SQRT3),
           (3.0 + SQRT3, 1.0 + SQRT3), (1.0 + SQRT3, 3.0 + SQRT3),
           (3.0 + SQRT3, 3.0 + SQRT3)]

# Offset of the bridge seed from the corner along each wall: places b_1
# tangent to the wall clamp and a_1 tangent to the flank clamp.
_BRIDGE_OFFSET = 3.0 + 2.0 * SQRT3


def junction_piece() -> Configuration:
    """The six-disc corner junction, boxed with the corner walls tangent to
    its three wall-side discs."""
    pts = [(x + 1.0, y + 1.0) for x, y in _JUNCTION]
    meta = {"construction": "junction"}
    return Configuration(1.0, np.array(pts), (10.0, 10.0), meta)


@dataclass
class AssemblyMetrics:
    """Size and scaling record of an assembled square configuration."""

    n: int
    r: float
    n_times_r: float
    N: int
    epsilon_used: float
    scale: float


def assemble_square(N: int, layout: str = "wall-bridges",
                    lam: float = DEFAULT_LAMBDA,
                    eps_hi: float = DEFAULT_EPS_HI,
                    tol: Tolerances = DEFAULT_TOL
                    ) -> tuple[Configuration, AssemblyMetrics]:
    """Assemble the stable unit-square configuration: four corner clusters
    (junction plus clamp discs) and four wall bridges, scaled to [0,1]^2.

    The result is certified before return: zero overlap violations and
    zero movable discs under the verifier, otherwise AssemblyError.
    """
    if layout == "interior-bridges":
        raise AssemblyError(
            "layout 'interior-bridges' is infeasible: full symmetric "
            "bridges inset from the walls leave the four end discs of every "
            "bridge (a_1, b_1 and mirrors) with open escape cones and no "
            "wall or junction contact to close them; use 'wall-bridges'")
    if layout != "wall-bridges":
        raise AssemblyError("unknown layout %r" % layout)

    family = CurveFamily(lam=lam)
    eps, chain = tune_epsilon(family, N, eps_hi, tol)

    t = _BRIDGE_OFFSET
    xl = t + chain.mirror_x          # mirror line of the bottom bridge
    side = 2.0 * (xl + 1.0)          # walls at -1 and side - 1 (corner frame)
    cx = side / 2.0 - 1.0            # center of the square, corner frame

    bridge_pts = [(p[0] + t, p[1]) for p in
                  _wall_half_bridge_points(chain, tol)]
    cluster = _JUNCTION + _CLAMPS

    pts = []
    for x, y in cluster:
        pts.append((x, y))
        pts.append((2.0 * cx - x, y))
        pts.append((x, 2.0 * cx - y))
        pts.append((2.0 * cx - x, 2.0 * cx - y))
    for x, y in bridge_pts:
        pts.append((x, y))                      # bottom
        pts.append((y, x))                      # left
        pts.append((x, 2.0 * cx - y))           # top
        pts.append((2.0 * cx - y, x))           # right

    n_expected = 24 * N + 32
    if len(pts) != n_expected:
        raise AssemblyError(
            "assembled %d discs, expected %d" % (len(pts), n_expected))
    _dedup_guard(pts, 0, tol)

    # corner frame (walls at -1 .. side-1) -> box frame (0 .. side),
    # then scale the side to 1
    scale = 1.0 / side
    centers = (np.array(pts) + 1.0) * scale
    meta = {"construction": "square", "layout": layout, "N": N,
            "epsilon": eps, "lam": lam, "scale": scale}
    config = Configuration(scale, centers, (1.0, 1.0), meta)

    from .verifier import overlap_audit, verify_stable
    audit = overlap_audit(config, tol)
    if audit.pairs:
        raise AssemblyError(
            "assembly has %d overlapping pairs, worst penetration %.3g"
            % (len(audit.pairs), audit.max_penetration))
    report = verify_stable(config, tol)
    if report.movable_count or report.rattler_count:
        bad = [(v.index, v.witness) for v in report.verdicts
               if v.status != "jammed"]
        raise AssemblyError("assembly is not stable; movable discs "
                            "(index, escape direction): %r" % bad)

    metrics = AssemblyMetrics(config.n, config.radius,
                              config.n * config.radius, N, eps, scale)
    return config, metrics


def five_disc_config() -> Configuration:
    """Five discs of radius (sqrt(2)-1)/2 in the unit square: one centered,
    four pinned into the corners, all tangencies closing the escape cones."""
    r = (math.sqrt(2.0) - 1.0) / 2.0
    pts = [(0.5, 0.5), (r, r), (1.0 - r, r), (r, 1.0 - r),
           (1.0 - r, 1.0 - r)]
    meta = {"construction": "five-disc"}
    return Configuration(r, np.array(pts), (1.0, 1.0), meta)


def tiling_3_12_12(window_half_width: int) -> Configuration:
    """Unit discs at the vertices of the truncated-hexagonal (3.12.12)
    tiling with edge length 2, clipped to a square window.

    window_half_width is measured in tiling edge lengths; the window is the
    square of half-width 2*window_half_width centered on the pattern.
    """
    if window_half_width < 2:
        raise ConstructionError("window_half_width must be at least 2")
    W = 2.0 * window_half_width
    L = 2.0 * (2.0 + SQRT3)              # dodecagon center spacing
    R = math.sqrt(6.0) + math.sqrt(2.0)  # dodecagon circumradius
    offset = (L / 4.0, L / 4.0)
    verts = [(R * math.cos(math.radians(15.0 + 30.0 * k)),
              R * math.sin(math.radians(15.0 + 30.0 * k))) for k in range(12)]

    seen = set()
    pts = []
    row_h = L * SQRT3 / 2.0
    j_span = int((W + R) / row_h) + 2
    for j in range(-j_span, j_span + 1):
        gy = offset[1] + j * row_h
        shear = offset[0] + j * L / 2.0
        i_lo = int(math.floor((-W - R - shear) / L)) - 1
        i_hi = int(math.ceil((W + R - shear) / L)) + 1
        for i in range(i_lo, i_hi + 1):
            gx = shear + i * L
            for vx, vy in verts:
                x, y = gx + vx, gy + vy
                if abs(x) <= W and abs(y) <= W:
                    key = (round(x * 1e9), round(y * 1e9))
                    if key not in seen:
                        seen.add(key)
                        pts.append((x, y))
    meta = {"construction": "tiling-3.12.12",
            "window_half_width": window_half_width, "window": W}
    return Configuration(1.0, np.array(pts), None, meta)


def density(config: Configuration, region: tuple[float, float, float, float]
            ) -> float:
    """Fraction of the rectangle (xmin, ymin, xmax, ymax) covered by discs,
    counting whole discs whose centers lie in the region."""
    xmin, ymin, xmax, ymax = region
    area = (xmax - xmin) * (ymax - ymin)
    if area <= 0:
        raise ConstructionError("region must have positive area")
    if config.n == 0:
        return 0.0
    c = config.centers
    inside = np.sum((c[:, 0] >= xmin) & (c[:, 0] <= xmax) &
                    (c[:, 1] >= ymin) & (c[:, 1] <= ymax))
    return float(inside) * math.pi * config.radius ** 2 / area
