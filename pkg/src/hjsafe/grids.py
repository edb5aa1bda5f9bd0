"""Uniform 2D grids over (altitude, vertical velocity) and bilinear sampling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class OutOfGridError(ValueError):
    """Raised when a query point lies outside the grid extent."""


@dataclass(frozen=True)
class Grid2D:
    """Uniform node-centered grid; axis 0 is x1 (m), axis 1 is x2 (m/s).

    Node counts must be at least 9 per axis so that the WENO5 stencil
    (3 ghost layers each side) stays meaningful.
    """

    x1_min: float
    x1_max: float
    x2_min: float
    x2_max: float
    n1: int
    n2: int

    def __post_init__(self):
        if not (self.x1_min < self.x1_max and self.x2_min < self.x2_max):
            raise ValueError("grid extents must be nonempty intervals")
        if self.n1 < 9 or self.n2 < 9:
            raise ValueError("need at least 9 nodes per axis")

    @property
    def dx1(self) -> float:
        return (self.x1_max - self.x1_min) / (self.n1 - 1)

    @property
    def dx2(self) -> float:
        return (self.x2_max - self.x2_min) / (self.n2 - 1)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n1, self.n2)

    def x1_nodes(self) -> np.ndarray:
        return np.linspace(self.x1_min, self.x1_max, self.n1)

    def x2_nodes(self) -> np.ndarray:
        return np.linspace(self.x2_min, self.x2_max, self.n2)

    def meshgrid(self) -> tuple[np.ndarray, np.ndarray]:
        """(n1, n2) arrays of node coordinates."""
        return np.meshgrid(self.x1_nodes(), self.x2_nodes(), indexing="ij")

    def contains(self, x) -> bool:
        x1, x2 = float(x[0]), float(x[1])
        return (self.x1_min <= x1 <= self.x1_max
                and self.x2_min <= x2 <= self.x2_max)

    def clamp_inside(self, x, margin_cells: float = 1e-9) -> np.ndarray:
        """Nearest point strictly inside the extent (defensive queries)."""
        eps1 = margin_cells * self.dx1
        eps2 = margin_cells * self.dx2
        return np.array([
            min(max(float(x[0]), self.x1_min + eps1), self.x1_max - eps1),
            min(max(float(x[1]), self.x2_min + eps2), self.x2_max - eps2),
        ])

    def _locate(self, x1, x2):
        """Cell index and fractional offset for bilinear interpolation."""
        s = (np.asarray(x1, dtype=float) - self.x1_min) / self.dx1
        t = (np.asarray(x2, dtype=float) - self.x2_min) / self.dx2
        i = np.clip(np.floor(s).astype(int), 0, self.n1 - 2)
        j = np.clip(np.floor(t).astype(int), 0, self.n2 - 2)
        return i, j, s - i, t - j

    def interp(self, field: np.ndarray, x, check: bool = True):
        """Bilinear interpolation of a node field at point(s) x.

        x is a single (2,) point or an (m, 2) array. Raises OutOfGridError
        for queries outside the extent when check is true.
        """
        pts = np.atleast_2d(np.asarray(x, dtype=float))
        x1, x2 = pts[:, 0], pts[:, 1]
        if check:
            tol1 = 1e-12 * max(abs(self.x1_min), abs(self.x1_max), 1.0)
            tol2 = 1e-12 * max(abs(self.x2_min), abs(self.x2_max), 1.0)
            bad = ((x1 < self.x1_min - tol1) | (x1 > self.x1_max + tol1)
                   | (x2 < self.x2_min - tol2) | (x2 > self.x2_max + tol2))
            if np.any(bad):
                k = int(np.argmax(bad))
                raise OutOfGridError(f"query {pts[k]} outside grid extent "
                                     f"[{self.x1_min},{self.x1_max}]x"
                                     f"[{self.x2_min},{self.x2_max}]")
        i, j, u, v = self._locate(x1, x2)
        f = np.asarray(field)
        val = ((1 - u) * (1 - v) * f[i, j] + u * (1 - v) * f[i + 1, j]
               + (1 - u) * v * f[i, j + 1] + u * v * f[i + 1, j + 1])
        if np.isscalar(x[0]) or np.asarray(x).ndim == 1:
            return float(val[0])
        return val
