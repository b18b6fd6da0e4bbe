"""Disc configuration container shared by construction, verification and
simulation."""

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass
class Configuration:
    """Equal discs at `centers` with common `radius` in an axis-aligned box.

    box is (width, height) with walls at x=0, x=width, y=0, y=height, or
    None for planar (unbounded) configurations.  metadata carries
    construction parameters for reproducibility.
    """

    radius: float
    centers: np.ndarray
    box: tuple[float, float] | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.centers = np.asarray(self.centers, dtype=float).reshape(-1, 2)
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError("radius must be positive and finite")
        if not np.all(np.isfinite(self.centers)):
            raise ValueError("non-finite center coordinate")
        if self.box is not None:
            w, h = self.box
            if not (w > 0 and h > 0):
                raise ValueError("box dimensions must be positive")

    @property
    def n(self) -> int:
        return len(self.centers)

    def scaled(self, factor: float) -> "Configuration":
        """Uniformly scale centers, radius and box by a positive factor."""
        if not factor > 0:
            raise ValueError("scale factor must be positive")
        box = None if self.box is None else (self.box[0] * factor,
                                             self.box[1] * factor)
        return Configuration(self.radius * factor, self.centers * factor,
                             box, dict(self.metadata))

    def translated(self, dx: float, dy: float) -> "Configuration":
        """Translate centers; only meaningful for planar configurations."""
        return Configuration(self.radius, self.centers + [dx, dy],
                             self.box, dict(self.metadata))

    def copy(self) -> "Configuration":
        return Configuration(self.radius, self.centers.copy(), self.box,
                             dict(self.metadata))
