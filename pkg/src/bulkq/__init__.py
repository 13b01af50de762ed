"""Stationary analysis toolkit for the discrete-time bulk-service queue.

Aggregate demand A arrives each period and up to s units are served, so
congestion follows Q_{k+1} = max(Q_k + A_k - s, 0).  The package computes
stationary performance three independent ways and cross-validates them:

* exactly, from the zeros of z^s - A(z) and from contour integrals of the
  stationary transform,
* asymptotically, through heavy-traffic expansions under the capacity
  rule rho = 1 - gamma / s^alpha,
* by seeded Monte Carlo simulation with batch-means confidence intervals.

An M/M/s reference model and a CLI (``bulkq``) for table/figure
reproduction round out the toolkit.
"""

from .model import DemandPgf, QueueInstance, Regime, make_instance, pgf_eval
from .exact import (
    ExactSummary,
    RootSet,
    contour_moments,
    distribution,
    exact_summary,
    find_r0,
    inside_roots,
    mean_exact,
    pgf_product,
    pollaczek_identity_check,
)
from .asymptotics import (
    AsymptoticSummary,
    SaddleInfo,
    grw_consistency,
    mu_corrected_half,
    mu_leading,
    mu_moderate_bound,
    mu_simple,
    mu_standard_saddle,
    mu_three_term,
    p0_leading,
    saddle_point,
    summarize,
    var_leading,
)
from .simulate import SimConfig, SimEstimate, simulate
from .mms import erlang_c_mean_queue, slope_fit
from . import special

__all__ = [
    "DemandPgf",
    "Regime",
    "QueueInstance",
    "make_instance",
    "pgf_eval",
    "RootSet",
    "ExactSummary",
    "find_r0",
    "inside_roots",
    "mean_exact",
    "pgf_product",
    "contour_moments",
    "pollaczek_identity_check",
    "distribution",
    "exact_summary",
    "SaddleInfo",
    "AsymptoticSummary",
    "saddle_point",
    "mu_standard_saddle",
    "mu_leading",
    "mu_simple",
    "mu_three_term",
    "mu_moderate_bound",
    "mu_corrected_half",
    "var_leading",
    "p0_leading",
    "grw_consistency",
    "summarize",
    "SimConfig",
    "SimEstimate",
    "simulate",
    "erlang_c_mean_queue",
    "slope_fit",
    "special",
]

__version__ = "0.1.0"
