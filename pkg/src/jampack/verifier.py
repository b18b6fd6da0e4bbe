"""Independent stability certification: contact detection, per-disc jamming
verdicts from contact normals, and overlap auditing."""

import math
from dataclasses import dataclass, field

import numpy as np

from .configuration import Configuration
from .geometry import DEFAULT_TOL, Tolerances

TWO_PI = 2.0 * math.pi


class OverlapError(ValueError):
    """Input configuration has penetrating discs."""


@dataclass
class OverlapReport:
    max_penetration: float
    min_gap: float
    pairs: list = field(default_factory=list)


@dataclass
class ContactGraph:
    """Per-disc contact normals (unit vectors pointing from the obstacle
    into the disc center) and the disc-disc contact pair list."""

    normals: list
    pairs: list
    wall_contacts: list


@dataclass
class DiscVerdict:
    index: int
    status: str                      # 'jammed' | 'movable' | 'rattler'
    witness: tuple | None
    contact_count: int


@dataclass
class JammingReport:
    verdicts: list
    jammed_count: int
    movable_count: int
    rattler_count: int
    stable: bool


def overlap_audit(config: Configuration,
                  tol: Tolerances = DEFAULT_TOL) -> OverlapReport:
    """Exact pairwise scan for penetrating disc pairs.

    Penetration beyond 2r*tangency_rel is a violation; min_gap is +inf for
    fewer than two discs.
    """
    c = config.centers
    n = len(c)
    r = config.radius
    if n < 2:
        return OverlapReport(0.0, math.inf, [])
    d = np.sqrt(np.sum((c[:, None, :] - c[None, :, :]) ** 2, axis=2))
    iu = np.triu_indices(n, 1)
    dists = d[iu]
    pens = 2.0 * r - dists
    worst = float(np.max(pens))
    viol = pens > 2.0 * r * tol.tangency_rel
    pairs = [(int(iu[0][k]), int(iu[1][k]), float(dists[k]))
             for k in np.nonzero(viol)[0]]
    return OverlapReport(max(worst, 0.0), float(np.min(dists) - 2.0 * r),
                         pairs)


def contact_graph(config: Configuration,
                  tol: Tolerances = DEFAULT_TOL) -> ContactGraph:
    """Tangency adjacency of a configuration, walls included.

    Disc-disc contacts use the relative tolerance |d - 2r| <= 2r*tangency_rel
    so verdicts survive uniform scaling; wall contacts use gap <=
    r*tangency_rel.  Overlapping input is rejected.
    """
    audit = overlap_audit(config, tol)
    if audit.pairs:
        i, j, d = audit.pairs[0]
        raise OverlapError(
            "discs %d and %d overlap: distance %.17g < 2r, penetration %.3g"
            % (i, j, d, 2.0 * config.radius - d))

    c = config.centers
    n = len(c)
    r = config.radius
    normals = [[] for _ in range(n)]
    wall_contacts = [[] for _ in range(n)]
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            dx = c[i, 0] - c[j, 0]
            dy = c[i, 1] - c[j, 1]
            d = math.hypot(dx, dy)
            if abs(d - 2.0 * r) <= 2.0 * r * tol.tangency_rel:
                normals[i].append((dx / d, dy / d))
                normals[j].append((-dx / d, -dy / d))
                pairs.append((i, j))
    if config.box is not None:
        w, h = config.box
        walls = [("left", (1.0, 0.0), lambda p: p[0]),
                 ("right", (-1.0, 0.0), lambda p: w - p[0]),
                 ("bottom", (0.0, 1.0), lambda p: p[1]),
                 ("top", (0.0, -1.0), lambda p: h - p[1])]
        for i in range(n):
            for name, normal, coord in walls:
                if abs(coord(c[i]) - r) <= r * tol.tangency_rel:
                    normals[i].append(normal)
                    wall_contacts[i].append(name)
    return ContactGraph(normals, pairs, wall_contacts)


def _sorted_angles(normals) -> list:
    return sorted(math.atan2(n[1], n[0]) % TWO_PI for n in normals)


def _largest_gap(angles: list) -> tuple[float, float]:
    """(gap size, gap start angle); ties go to the largest start angle."""
    m = len(angles)
    best = (-1.0, 0.0)
    for k in range(m):
        start = angles[k]
        end = angles[(k + 1) % m]
        gap = (end - start) % TWO_PI
        if m == 1:
            gap = TWO_PI
        if gap > best[0] or (gap == best[0] and start > best[1]):
            best = (gap, start)
    return best


def is_locally_jammed(normals, tol: Tolerances = DEFAULT_TOL) -> DiscVerdict:
    """Verdict for one disc from its contact normals.

    Jammed iff there are at least 3 normals and the largest circular gap
    between consecutive normal directions is < pi - angle_slack; the
    feasible cone {d : d.n >= 0 for all n} is then {0}.  Otherwise movable
    with a witness direction in the feasible cone: the antipode of the
    largest gap's bisector, which bisects the cluster of normals.
    """
    if len(normals) == 0:
        return DiscVerdict(-1, "rattler", (1.0, 0.0), 0)
    angles = _sorted_angles(normals)
    gap, start = _largest_gap(angles)
    if len(normals) >= 3 and gap < math.pi - tol.angle_slack:
        return DiscVerdict(-1, "jammed", None, len(normals))
    witness_angle = (start + gap / 2.0 + math.pi) % TWO_PI
    witness = (math.cos(witness_angle), math.sin(witness_angle))
    return DiscVerdict(-1, "movable", witness, len(normals))


def direction_oracle(normals, K: int = 720,
                     tol: Tolerances = DEFAULT_TOL) -> str:
    """Brute-force jamming check: scan K equally spaced directions and call
    the disc movable iff some direction clears every normal.  Test oracle
    for is_locally_jammed."""
    if K < 360:
        raise ValueError("K must be at least 360")
    if len(normals) == 0:
        return "movable"
    for k in range(K):
        ang = TWO_PI * k / K
        d = (math.cos(ang), math.sin(ang))
        if all(d[0] * n[0] + d[1] * n[1] >= 0.0 for n in normals):
            return "movable"
    return "jammed"


def verify_stable(config: Configuration,
                  tol: Tolerances = DEFAULT_TOL) -> JammingReport:
    """Per-disc jamming verdicts for a whole configuration, walls included.

    The configuration is stable iff no disc is movable or a rattler.
    """
    graph = contact_graph(config, tol)
    verdicts = []
    jammed = movable = rattlers = 0
    for i in range(config.n):
        v = is_locally_jammed(graph.normals[i], tol)
        v.index = i
        verdicts.append(v)
        if v.status == "jammed":
            jammed += 1
        elif v.status == "rattler":
            rattlers += 1
        else:
            movable += 1
    return JammingReport(verdicts, jammed, movable, rattlers,
                         movable == 0 and rattlers == 0)
