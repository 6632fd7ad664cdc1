"""Fractional problem abstraction and the projected proximal gradient solver.

The solver minimizes f(x)/g(x) over a closed convex set by iterating

    x[k+1] = P( x[k] - alpha*grad_f(x[k]) + alpha*(f(x[k])/g(x[k]))*grad_g(x[k]) )

where P is the Euclidean projection onto the feasible set. The step size
must stay below the problem's ``step_bound`` (the reciprocal of the
gradient-Lipschitz constant of the shifted numerator); with that bound the
ratio decreases monotonically along the iterates and the sequence converges
to a fixed point of the update map.

An equivalent "shifted" sweep that subtracts a known lower bound M of the
ratio from the numerator is provided for cross-checking: it produces the
identical iterate sequence but reports nonnegative shifted ratio values.
"""

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import (
    InvalidParameter,
    NumericalBreakdown,
    PositivityViolation,
    ShiftViolation,
)
from .linalg import as_vector


class Status(enum.Enum):
    CONVERGED = "Converged"
    MAX_ITER_REACHED = "MaxIterReached"


@dataclass(frozen=True)
class FractionalProblem:
    """One instance of min f(x)/g(x) over a closed convex set.

    ``projection`` maps any point to the feasible set; ``step_bound`` is the
    supremum of admissible step sizes (1 / Lipschitz constant of the shifted
    numerator's gradient). ``lip_grad_f`` / ``lip_grad_g`` are the gradient
    Lipschitz constants of f and g on the set; the parametric reference
    solver needs them to pick its inner step size.
    """

    eval_f: Callable[[np.ndarray], float]
    eval_g: Callable[[np.ndarray], float]
    grad_f: Callable[[np.ndarray], np.ndarray]
    grad_g: Callable[[np.ndarray], np.ndarray]
    projection: Callable[[np.ndarray], np.ndarray]
    step_bound: float
    dimension: int
    lip_grad_f: Optional[float] = None
    lip_grad_g: Optional[float] = None

    def __post_init__(self):
        if not self.step_bound > 0:
            raise InvalidParameter(f"step_bound must be positive, got {self.step_bound}")
        if self.dimension < 1:
            raise InvalidParameter(f"dimension must be >= 1, got {self.dimension}")

    def ratio(self, x):
        """f(x)/g(x) with positivity and NaN checks."""
        gx = float(self.eval_g(x))
        if math.isnan(gx):
            raise NumericalBreakdown("g(x) evaluated to NaN")
        if gx <= 0.0:
            raise PositivityViolation(f"g(x) = {gx} <= 0; the denominator must stay positive")
        fx = float(self.eval_f(x))
        if math.isnan(fx):
            raise NumericalBreakdown("f(x) evaluated to NaN")
        return fx / gx


@dataclass
class PgaConfig:
    """Step size, stopping rule, and trace switch for one solve.

    ``alpha=None`` selects the default 0.99 * step_bound of the problem.
    Stopping: relative iterate change ||x[k]-x[k-1]|| / ||x[k-1]|| <= tol
    (absolute change when the previous iterate is the zero vector).
    """

    alpha: Optional[float] = None
    tol: float = 1e-5
    max_iter: int = 100_000
    record_trace: bool = False

    def __post_init__(self):
        if self.alpha is not None and not self.alpha > 0:
            raise InvalidParameter(f"alpha must be positive, got {self.alpha}")
        if not self.tol > 0:
            raise InvalidParameter(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise InvalidParameter(f"max_iter must be >= 1, got {self.max_iter}")


@dataclass
class DinkelbachConfig:
    """Outer/inner tolerances and budgets for the parametric reference solver."""

    outer_tol: float = 1e-8
    max_outer: int = 100
    inner_tol: float = 1e-10
    max_inner: int = 100_000
    record_trace: bool = False

    def __post_init__(self):
        for name in ("outer_tol", "max_outer", "inner_tol", "max_inner"):
            if not getattr(self, name) > 0:
                raise InvalidParameter(f"{name} must be positive")


@dataclass
class SolveTrace:
    """Per-iteration history: iterates x[k], ratio values, and step norms.

    ``iterates[i]`` and ``ratios[i]`` are aligned; ``steps[i]`` is the norm
    of the move from iterates[i] to iterates[i+1] (one entry fewer).
    """

    iterates: list = field(default_factory=list)
    ratios: list = field(default_factory=list)
    steps: list = field(default_factory=list)


@dataclass
class SolveResult:
    x_star: np.ndarray
    ratio: float
    iterations: int
    status: Status
    fixed_point_residual: float
    trace: Optional[SolveTrace] = None


def default_alpha(problem, safety=0.99):
    """Step size at the customary safety fraction of the admissible bound."""
    return safety * problem.step_bound


def fixed_point_residual(problem, x, alpha):
    """Distance from x to its own projected-gradient update.

    Zero exactly at fixed points of the iteration map, which are the
    critical points of the constrained ratio.
    """
    if not alpha > 0:
        raise InvalidParameter(f"alpha must be positive, got {alpha}")
    x = as_vector(x)
    c = problem.ratio(x)
    y = problem.projection(x - alpha * problem.grad_f(x) + alpha * c * problem.grad_g(x))
    return float(np.linalg.norm(x - y))


def _resolve_alpha(problem, cfg):
    alpha = cfg.alpha if cfg.alpha is not None else default_alpha(problem)
    if not 0 < alpha < problem.step_bound:
        raise InvalidParameter(
            f"alpha = {alpha} outside the admissible range (0, {problem.step_bound})"
        )
    return alpha


def _check_start(problem, x0):
    x0 = as_vector(x0)
    if x0.shape[0] != problem.dimension:
        raise InvalidParameter(
            f"x0 has length {x0.shape[0]}, problem dimension is {problem.dimension}"
        )
    # infeasible starts are totalized by one projection
    return problem.projection(x0)


def _run_pga(problem, x0, cfg, numerator_grad, ratio_fn):
    """Shared iteration loop; numerator_grad/ratio_fn select plain or shifted form."""
    alpha = _resolve_alpha(problem, cfg)
    x = _check_start(problem, x0)
    trace = SolveTrace() if cfg.record_trace else None

    status = Status.MAX_ITER_REACHED
    iterations = cfg.max_iter
    projection = problem.projection
    grad_g = problem.grad_g
    for k in range(1, cfg.max_iter + 1):
        c = ratio_fn(x)
        step_dir = x - alpha * numerator_grad(x) + (alpha * c) * grad_g(x)
        # a NaN or Inf anywhere makes the sum non-finite
        if not math.isfinite(float(step_dir.sum())):
            raise NumericalBreakdown(f"non-finite update at iteration {k}")
        x_next = projection(step_dir)
        diff = x_next - x
        move = math.sqrt(float(diff @ diff))
        base = math.sqrt(float(x @ x))
        if trace is not None:
            trace.iterates.append(x)
            trace.ratios.append(c)
            trace.steps.append(move)
        rel = move / base if base > 0.0 else move
        x = x_next
        if rel <= cfg.tol:
            status = Status.CONVERGED
            iterations = k
            break
    c_final = ratio_fn(x)
    if trace is not None:
        trace.iterates.append(x)
        trace.ratios.append(c_final)
    return x, c_final, iterations, status, alpha, trace


def pga_solve(problem, x0, cfg=None):
    """Minimize f/g by the projected proximal gradient iteration.

    Parameters
    ----------
    problem : FractionalProblem
    x0 : array_like
        Starting point; projected onto the feasible set before iterating.
    cfg : PgaConfig, optional
        Defaults: alpha = 0.99 * step_bound, tol = 1e-5, max_iter = 1e5.

    Returns
    -------
    SolveResult with the terminal iterate, the ratio value there, the
    iteration count, status, and the fixed-point residual at the terminal
    point. ``result.trace`` is populated when cfg.record_trace is set.
    """
    cfg = cfg or PgaConfig()
    x, c, iterations, status, alpha, trace = _run_pga(
        problem, x0, cfg, problem.grad_f, problem.ratio
    )
    residual = fixed_point_residual(problem, x, alpha)
    return SolveResult(x, c, iterations, status, residual, trace)


def pga_solve_shifted(problem, shift, x0, cfg=None):
    """Run the iteration on the shifted numerator f - shift*g.

    ``shift`` must be a lower bound of f/g on the feasible set, so that the
    shifted ratio stays nonnegative; a negative shifted ratio (beyond
    -1e-10) raises ShiftViolation. The iterate sequence is algebraically
    identical to :func:`pga_solve`; the reported ratios are the shifted ones.
    """
    cfg = cfg or PgaConfig()
    shift = float(shift)

    def shifted_ratio(x):
        c = problem.ratio(x) - shift
        if c < -1e-10:
            raise ShiftViolation(
                f"shifted ratio {c} < 0: {shift} is not a lower bound of f/g"
            )
        return c

    def shifted_grad(x):
        return problem.grad_f(x) - shift * problem.grad_g(x)

    x, c, iterations, status, alpha, trace = _run_pga(
        problem, x0, cfg, shifted_grad, shifted_ratio
    )
    residual = fixed_point_residual(problem, x, alpha)
    return SolveResult(x, c, iterations, status, residual, trace)
