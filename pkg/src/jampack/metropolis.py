"""Hard-disc Metropolis chain: single-disc uniform proposals inside a small
disc, accepted only when the move keeps the configuration valid."""

import math
from dataclasses import dataclass, field

import numpy as np

from .configuration import Configuration
from .geometry import DEFAULT_TOL, Tolerances
from .verifier import overlap_audit

RNG_ALGORITHM = "numpy-pcg64"


@dataclass
class ChainParams:
    steps: int
    step_radius: float
    seed: int = 0
    record_interval: int = 10000

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError("steps must be at least 1")
        if not self.step_radius > 0:
            raise ValueError("step_radius must be positive")
        if self.record_interval < 1:
            raise ValueError("record_interval must be at least 1")


@dataclass
class ChainStats:
    proposed: int
    accepted: int
    acceptance_rate: float
    max_center_displacement: float
    trace: list = field(default_factory=list)
    rng_algorithm: str = RNG_ALGORITHM


def _check_valid(config: Configuration, tol: Tolerances):
    audit = overlap_audit(config, tol)
    if audit.pairs:
        i, j, d = audit.pairs[0]
        raise ValueError("invalid configuration: discs %d and %d overlap "
                         "(distance %.17g)" % (i, j, d))
    if config.box is not None:
        w, h = config.box
        r = config.radius
        c = config.centers
        slack = r * tol.tangency_rel
        if (np.any(c[:, 0] < r - slack) or np.any(c[:, 0] > w - r + slack)
                or np.any(c[:, 1] < r - slack)
                or np.any(c[:, 1] > h - r + slack)):
            raise ValueError("invalid configuration: disc outside the box")


def _propose(centers: np.ndarray, radius: float, step_radius: float,
             box, u: np.ndarray) -> tuple[int, float, float, bool]:
    """Evaluate one proposal from three uniform deviates.

    Returns (disc index, new x, new y, accepted).  The displacement is
    uniform in the disc of radius step_radius via polar inversion.
    """
    n = len(centers)
    i = min(int(u[0] * n), n - 1)
    ang = 2.0 * math.pi * u[1]
    rad = step_radius * math.sqrt(u[2])
    x = centers[i, 0] + rad * math.cos(ang)
    y = centers[i, 1] + rad * math.sin(ang)
    if box is not None:
        w, h = box
        if x < radius or x > w - radius or y < radius or y > h - radius:
            return i, x, y, False
    dx = centers[:, 0] - x
    dy = centers[:, 1] - y
    d2 = dx * dx + dy * dy
    d2[i] = math.inf
    if np.min(d2) < 4.0 * radius * radius:
        return i, x, y, False
    return i, x, y, True


def metropolis_step(config: Configuration, params: ChainParams,
                    rng: np.random.Generator
                    ) -> tuple[Configuration, bool]:
    """One proposal: a uniformly chosen disc is moved uniformly within a
    disc of radius step_radius; accepted iff it stays in the box and
    overlaps nothing.  A rejected proposal returns the input unchanged.

    Consumes exactly three uniform deviates from rng, in the same order as
    run_chain, so stepping manually replays a chain trajectory.
    """
    _check_valid(config, DEFAULT_TOL)
    u = rng.random(3)
    i, x, y, ok = _propose(config.centers, config.radius,
                           params.step_radius, config.box, u)
    if not ok:
        return config, False
    out = config.copy()
    out.centers[i, 0] = x
    out.centers[i, 1] = y
    return out, True


def run_chain(config: Configuration, params: ChainParams,
              tol: Tolerances = DEFAULT_TOL
              ) -> tuple[Configuration, ChainStats]:
    """Run the chain for params.steps proposals from a fresh seeded
    generator; deterministic in (config, params)."""
    _check_valid(config, tol)
    rng = np.random.default_rng(params.seed)
    centers = config.centers.copy()
    initial = config.centers.copy()
    r = config.radius
    accepted = 0
    trace = []
    interval_accepted = 0
    done = 0
    batch = 65536
    while done < params.steps:
        m = min(batch, params.steps - done)
        u = rng.random((m, 3))
        for k in range(m):
            i, x, y, ok = _propose(centers, r, params.step_radius,
                                   config.box, u[k])
            if ok:
                centers[i, 0] = x
                centers[i, 1] = y
                accepted += 1
                interval_accepted += 1
            done += 1
            if done % params.record_interval == 0:
                trace.append(interval_accepted / params.record_interval)
                interval_accepted = 0
                snapshot = Configuration(r, centers, config.box,
                                         dict(config.metadata))
                _check_valid(snapshot, tol)
    final = Configuration(r, centers, config.box, dict(config.metadata))
    _check_valid(final, tol)
    disp = float(np.max(np.hypot(centers[:, 0] - initial[:, 0],
                                 centers[:, 1] - initial[:, 1]))) if len(
                                     centers) else 0.0
    stats = ChainStats(params.steps, accepted, accepted / params.steps,
                       disp, trace)
    return final, stats


def shrink_radius(config: Configuration, factor: float) -> Configuration:
    """Same centers, radius multiplied by factor in (0, 1]."""
    if not 0.0 < factor <= 1.0:
        raise ValueError("shrink factor must be in (0, 1]")
    out = config.copy()
    out.radius = config.radius * factor
    return out


def escape_experiment(config: Configuration, factors,
                      params: ChainParams) -> dict:
    """Run the chain from the same seed on copies of the configuration with
    the radius shrunk by each factor; returns {factor: ChainStats}."""
    table = {}
    for f in factors:
        shrunk = shrink_radius(config, f)
        _, stats = run_chain(shrunk, params)
        table[float(f)] = stats
    return table
