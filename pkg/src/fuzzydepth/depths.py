"""Depth functions for fuzzy sets with respect to an empirical variable.

``projection_depth`` inverts the worst-case robust outlyingness of the
support function over directions and thresholds.  The four L^r-type depths
invert expected distances to the atoms: ``natural_depth`` uses the support
metric rho_r, ``location_depth`` the mid/spread metric d_{r,theta}, and the
raised variants use the r-th powers of those distances.  All five map into
[0, 1], larger meaning more central.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .empirical import _mad_columns, _median_columns
from .exceptions import DimensionMismatch, GridMismatch, OutOfRange
from .fuzzyset import DEFAULT_N_ALPHA, DEFAULT_N_DIR, merge_alphas, uniform_alphas
from .metrics import metric_d_r_theta, metric_rho_r

DEPTH_METHODS = (
    "projection",
    "natural",
    "natural_raised",
    "location",
    "location_raised",
)


def _require_compatible(a, x):
    if a.dim != x.dim:
        raise DimensionMismatch(
            f"query has dimension {a.dim} but the sample has dimension {x.dim}"
        )
    if a.dim == 2 and not a.same_grids(x.atoms[0]):
        raise GridMismatch("query and atoms must share direction and alpha grids")


def outlyingness(a, x, n_alpha=DEFAULT_N_ALPHA):
    """Worst-case robust outlyingness of the support function.

    Over every direction u and threshold alpha, the support value of the
    query is compared with the weighted median of the support marginal of x,
    scaled by the marginal MAD:

        sup |s_A(u, alpha) - med s_X(u, alpha)| / MAD s_X(u, alpha)

    A vanishing MAD contributes nothing when the numerator also vanishes and
    makes the outlyingness infinite otherwise.  For one-dimensional sets the
    supremum is evaluated on the uniform alpha grid augmented with every
    breakpoint of the query and the atoms, which is exact for trapezoidal
    data; planar sets are evaluated on their stored grids.
    """
    _require_compatible(a, x)
    weights = x.weights
    if a.dim == 1:
        grid = merge_alphas(
            uniform_alphas(n_alpha), a.alphas, *(atom.alphas for atom in x.atoms)
        )
        worst = 0.0
        for u in (1.0, -1.0):
            marginals = np.stack([atom.support_on(u, grid) for atom in x.atoms])
            s_a = a.support_on(u, grid)
            worst = max(worst, _worst_ratio(s_a, marginals, weights))
        return worst
    marginals = np.stack([atom.values.reshape(-1) for atom in x.atoms])
    return _worst_ratio(a.values.reshape(-1), marginals, weights)


def _worst_ratio(s_a, marginals, weights):
    lo, hi = _median_columns(marginals, weights)
    med = 0.5 * (lo + hi)
    mad = _mad_columns(marginals, weights, med)
    num = np.abs(s_a - med)
    degenerate = mad == 0.0
    if np.any(degenerate & (num > 0.0)):
        return math.inf
    ratio = np.divide(num, mad, out=np.zeros_like(num), where=~degenerate)
    return float(np.max(ratio))


def projection_depth(a, x, n_alpha=DEFAULT_N_ALPHA):
    """Depth 1 / (1 + outlyingness); infinite outlyingness gives exactly 0."""
    out = outlyingness(a, x, n_alpha=n_alpha)
    if math.isinf(out):
        return 0.0
    return 1.0 / (1.0 + out)


def natural_depth(a, x, r):
    """Depth 1 / (1 + E rho_r(A, X))."""
    _require_compatible(a, x)
    return 1.0 / (1.0 + x.expectation(lambda atom: metric_rho_r(a, atom, r)))


def natural_raised_depth(a, x, r):
    """Depth 1 / (1 + E rho_r(A, X)^r)."""
    _require_compatible(a, x)
    r = float(r)
    return 1.0 / (1.0 + x.expectation(lambda atom: metric_rho_r(a, atom, r) ** r))


def location_depth(a, x, r, theta):
    """Depth 1 / (1 + E d_{r,theta}(A, X))."""
    _require_compatible(a, x)
    return 1.0 / (1.0 + x.expectation(lambda atom: metric_d_r_theta(a, atom, r, theta)))


def location_raised_depth(a, x, r, theta):
    """Depth 1 / (1 + E d_{r,theta}(A, X)^r)."""
    _require_compatible(a, x)
    r = float(r)
    return 1.0 / (
        1.0 + x.expectation(lambda atom: metric_d_r_theta(a, atom, r, theta) ** r)
    )


@dataclass(frozen=True)
class DepthConfig:
    """Method plus parameters for a depth-table run.

    ``theta`` is required by the location methods and must stay unset for the
    others; ``r`` defaults to 1.  Grid sizes apply where a computation needs
    them: ``n_alpha`` to the one-dimensional outlyingness supremum.
    """

    method: str
    r: float = 1.0
    theta: float | None = None
    n_alpha: int = DEFAULT_N_ALPHA
    n_dir: int = DEFAULT_N_DIR

    def __post_init__(self):
        if self.method not in DEPTH_METHODS:
            raise OutOfRange(f"unknown depth method {self.method!r}")
        if not float(self.r) >= 1.0:
            raise OutOfRange(f"r must be at least 1, got {self.r}")
        needs_theta = self.method in ("location", "location_raised")
        if needs_theta and self.theta is None:
            raise OutOfRange(f"method {self.method!r} requires theta")
        if not needs_theta and self.theta is not None:
            raise OutOfRange(f"method {self.method!r} does not accept theta")
        if self.theta is not None and self.theta < 0.0:
            raise OutOfRange(f"theta must be non-negative, got {self.theta}")
        if self.n_alpha < 1:
            raise OutOfRange("n_alpha must be at least 1")

    def depth_function(self):
        """Bind the configuration into a callable (A, X) -> depth."""
        if self.method == "projection":
            return lambda a, x: projection_depth(a, x, n_alpha=self.n_alpha)
        if self.method == "natural":
            return lambda a, x: natural_depth(a, x, self.r)
        if self.method == "natural_raised":
            return lambda a, x: natural_raised_depth(a, x, self.r)
        if self.method == "location":
            return lambda a, x: location_depth(a, x, self.r, self.theta)
        return lambda a, x: location_raised_depth(a, x, self.r, self.theta)


@dataclass(frozen=True)
class DepthReport:
    """Depth values and descending ranks for a list of queries."""

    ids: tuple
    depths: tuple
    ranks: tuple
    method: str
    r: float
    theta: float | None
    n_alpha: int
    n_dir: int

    def to_dict(self):
        return {
            "method": self.method,
            "r": self.r,
            "theta": self.theta,
            "results": [
                {"id": i, "depth": d, "rank": k}
                for i, d, k in zip(self.ids, self.depths, self.ranks)
            ],
        }


def depth_table(x, queries=None, config=None, ids=None):
    """Evaluate one depth method over a list of queries and rank the results.

    Queries default to the atoms of x.  Ranks are descending in depth and
    tied values share their average rank.  The computation is deterministic:
    identical inputs give identical tables.
    """
    if config is None:
        config = DepthConfig(method="projection")
    if queries is None:
        queries = list(x.atoms)
    queries = list(queries)
    if ids is None:
        ids = [f"A{k + 1}" for k in range(len(queries))]
    ids = [str(i) for i in ids]
    if len(ids) != len(queries):
        raise DimensionMismatch("one id per query is required")
    depth_fn = config.depth_function()
    depths = [depth_fn(a, x) for a in queries]
    ranks = rankdata([-d for d in depths], method="average")
    return DepthReport(
        ids=tuple(ids),
        depths=tuple(depths),
        ranks=tuple(float(k) for k in ranks),
        method=config.method,
        r=float(config.r),
        theta=None if config.theta is None else float(config.theta),
        n_alpha=config.n_alpha,
        n_dir=config.n_dir,
    )
