"""Uncertain vertical-flight dynamics, disturbance bounds, and integration.

The plant is a double integrator in (altitude, vertical velocity) driven by
a normalized thrust command u and an additive, state-dependent acceleration
disturbance d:

    x1' = x2
    x2' = k_T * u + g + k_0 + d

All model error is channeled through d, which is only known to lie in a
per-state interval (a DisturbanceBound). The bound interface, the clamp
projection onto it, and the local-reliability horizon live here too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .grids import Grid2D

GRAVITY = -9.8  # m/s^2


class BlowupError(ArithmeticError):
    """Trajectory integration produced a non-finite state."""


@dataclass(frozen=True)
class AffineVerticalModel:
    """Known part of the quadrotor vertical-flight dynamics.

    k_t is the thrust gain (m/s^2 per unit command), k_0 a thrust offset.
    Defaults put hover at u = (-g - k_0)/k_t = 0.49, interior to [0, 1].
    """

    k_t: float = 20.0
    k_0: float = 0.0
    g: float = GRAVITY
    u_min: float = 0.0
    u_max: float = 1.0

    def __post_init__(self):
        if self.k_t <= 0:
            raise ValueError("thrust gain must be positive")
        if not self.u_min < self.u_max:
            raise ValueError("control interval is empty")
        hover = (-self.g - self.k_0) / self.k_t
        if not self.u_min <= hover <= self.u_max:
            raise ValueError(f"hover command {hover:.3f} outside "
                             f"[{self.u_min}, {self.u_max}]")

    @property
    def hover_command(self) -> float:
        return (-self.g - self.k_0) / self.k_t

    def accel(self, u: float, d: float) -> float:
        """Vertical acceleration for command u and disturbance d."""
        return self.k_t * u + self.g + self.k_0 + d


def eval_dynamics(model: AffineVerticalModel, x, u: float, d: float) -> np.ndarray:
    """State derivative (x2, k_t*u + g + k_0 + d); rejects out-of-range u."""
    if not model.u_min <= u <= model.u_max:
        raise ValueError(f"control {u} outside [{model.u_min}, {model.u_max}]")
    return np.array([float(x[1]), model.accel(u, d)])


# ---------------------------------------------------------------------------
# Disturbance bounds
# ---------------------------------------------------------------------------

class DisturbanceBound:
    """Per-state interval [lower(x), upper(x)] of plausible disturbances."""

    def interval(self, x) -> tuple[float, float]:
        raise NotImplementedError

    def node_intervals(self, grid: Grid2D) -> tuple[np.ndarray, np.ndarray]:
        """Lower/upper fields evaluated at every node of `grid`."""
        raise NotImplementedError

    def project(self, x, d_raw: float) -> float:
        """Nearest point of the interval at x (componentwise clamp)."""
        lo, hi = self.interval(x)
        return min(max(float(d_raw), lo), hi)

    def midpoint(self, x) -> float:
        lo, hi = self.interval(x)
        return 0.5 * (lo + hi)


@dataclass(frozen=True)
class ConstantBound(DisturbanceBound):
    """State-independent interval, e.g. the a-priori +/-1.5 m/s^2 bound."""

    lower: float
    upper: float

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("bound interval is empty")

    def interval(self, x):
        return (self.lower, self.upper)

    def node_intervals(self, grid):
        lo = np.full(grid.shape, self.lower)
        hi = np.full(grid.shape, self.upper)
        return lo, hi


@dataclass(frozen=True)
class GriddedBound(DisturbanceBound):
    """Interval endpoints stored at grid nodes, bilinear between nodes.

    Bilinear interpolation makes the set-valued map Hausdorff-Lipschitz by
    construction, which is what the local-reliability horizon needs.

    `source` optionally retains the posterior the bound was built from
    (plus the z multiplier), so confidence evaluations can use exact
    posterior statistics rather than re-interpolating node values.
    """

    grid: Grid2D
    lower_field: np.ndarray
    upper_field: np.ndarray
    source: Optional[object] = None   # gp.Posterior snapshot, if GP-built
    z: Optional[float] = None

    def __post_init__(self):
        lo = np.asarray(self.lower_field, dtype=float)
        hi = np.asarray(self.upper_field, dtype=float)
        if lo.shape != self.grid.shape or hi.shape != self.grid.shape:
            raise ValueError("bound fields must match grid shape")
        if np.any(lo > hi + 1e-12):
            raise ValueError("lower(x) > upper(x) at some node")
        object.__setattr__(self, "lower_field", lo)
        object.__setattr__(self, "upper_field", hi)

    def interval(self, x):
        lo = self.grid.interp(self.lower_field, x)
        hi = self.grid.interp(self.upper_field, x)
        return (lo, hi)

    def node_intervals(self, grid):
        if (grid.shape == self.grid.shape
                and grid.x1_min == self.grid.x1_min
                and grid.x1_max == self.grid.x1_max
                and grid.x2_min == self.grid.x2_min
                and grid.x2_max == self.grid.x2_max):
            return self.lower_field.copy(), self.upper_field.copy()
        xx1, xx2 = grid.meshgrid()
        pts = np.column_stack([xx1.ravel(), xx2.ravel()])
        lo = self.grid.interp(self.lower_field, pts).reshape(grid.shape)
        hi = self.grid.interp(self.upper_field, pts).reshape(grid.shape)
        return lo, hi


def project_disturbance(bound: DisturbanceBound, x, d_raw: float) -> float:
    """Clamp d_raw to the bound interval at x; identity when inside."""
    return bound.project(x, d_raw)


# ---------------------------------------------------------------------------
# Trajectories
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Trajectory:
    """Fixed-step closed-loop rollout; inputs held constant over each step."""

    times: np.ndarray          # (m+1,)
    states: np.ndarray         # (m+1, 2)
    controls: np.ndarray       # (m,)
    disturbances: np.ndarray   # (m,)

    def __post_init__(self):
        m = len(self.controls)
        if not (len(self.times) == m + 1 == len(self.states)
                and len(self.disturbances) == m):
            raise ValueError("inconsistent trajectory lengths")

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]


def _rk4_step(model, x, u, d, dt):
    k1 = np.array([x[1], model.accel(u, d)])
    x2 = x + 0.5 * dt * k1
    k2 = np.array([x2[1], model.accel(u, d)])
    x3 = x + 0.5 * dt * k2
    k3 = np.array([x3[1], model.accel(u, d)])
    x4 = x + dt * k3
    k4 = np.array([x4[1], model.accel(u, d)])
    return x + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)


def integrate_trajectory(model: AffineVerticalModel,
                         x0,
                         control_policy: Callable[[float, np.ndarray], float],
                         disturbance_fn: Callable[[float, np.ndarray], float],
                         dt: float,
                         horizon: float) -> Trajectory:
    """Fixed-step RK4 rollout with zero-order-hold inputs.

    control_policy(t, x) and disturbance_fn(t, x) are sampled once per step
    and held constant over it. Deterministic: same inputs, same trajectory.
    Raises BlowupError if the state leaves the finite range.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if horizon < dt:
        raise ValueError("horizon shorter than one step")
    n_steps = int(round(horizon / dt))
    times = np.empty(n_steps + 1)
    states = np.empty((n_steps + 1, 2))
    controls = np.empty(n_steps)
    dists = np.empty(n_steps)
    x = np.asarray(x0, dtype=float).copy()
    if not np.all(np.isfinite(x)):
        raise BlowupError(f"non-finite initial state {x}")
    times[0] = 0.0
    states[0] = x
    for k in range(n_steps):
        t = k * dt
        u = float(control_policy(t, x))
        if not model.u_min <= u <= model.u_max:
            raise ValueError(f"control {u} outside "
                             f"[{model.u_min}, {model.u_max}] at t={t:.3f}")
        d = float(disturbance_fn(t, x))
        x = _rk4_step(model, x, u, d, dt)
        if not np.all(np.isfinite(x)):
            raise BlowupError(f"non-finite state at t={t + dt:.4f}")
        times[k + 1] = t + dt
        states[k + 1] = x
        controls[k] = u
        dists[k] = d
    return Trajectory(times, states, controls, dists)


# ---------------------------------------------------------------------------
# Local model reliability
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReliabilityConstants:
    """Lipschitz data for the local-reliability horizon.

    l_d bounds the disturbance function's spatial variation (1/s), l_bound
    the Hausdorff variation of the interval map (1/s), c_f the dynamics
    norm. All must be positive.
    """

    l_d: float = 1.0
    l_bound: float = 0.5
    c_f: float = 12.0

    def __post_init__(self):
        if min(self.l_d, self.l_bound, self.c_f) <= 0:
            raise ValueError("reliability constants must be positive")


def interval_signed_distance(d: float, lo: float, hi: float) -> float:
    """Signed distance of d to [lo, hi]; negative inside, zero on the edge."""
    return max(lo - d, d - hi)


def reliability_horizon(consts: ReliabilityConstants,
                        bound: DisturbanceBound,
                        x,
                        d_meas: float) -> float:
    """Time for which the bound provably keeps capturing d along any motion.

    Zero when the measured disturbance sits on or outside the interval. The
    deeper inside the interval d_meas is, the longer the horizon.
    """
    lo, hi = bound.interval(x)
    s = interval_signed_distance(float(d_meas), lo, hi)
    denom = (consts.l_d + consts.l_bound) * consts.c_f
    return max(0.0, -s) / denom


def dynamics_norm_bound(model: AffineVerticalModel,
                        grid: Grid2D,
                        bound: DisturbanceBound) -> float:
    """sup over grid x input boxes of the Euclidean norm of the derivative.

    Units are mixed (m/s and m/s^2 components); the Euclidean norm over the
    raw components is used and documented per scenario.
    """
    lo, hi = bound.node_intervals(grid)
    _, xx2 = grid.meshgrid()
    acc = np.stack([
        np.abs(model.accel(model.u_min, lo)),
        np.abs(model.accel(model.u_min, hi)),
        np.abs(model.accel(model.u_max, lo)),
        np.abs(model.accel(model.u_max, hi)),
    ]).max(axis=0)
    return float(np.sqrt(xx2 ** 2 + acc ** 2).max())
