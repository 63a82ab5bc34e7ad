"""Information content of observed prices about hidden stochastic volatility."""

__version__ = "0.1.0"

from .transforms import (
    CalendarConvention,
    HestonParams,
    SP500_VIX_PARAMS,
    TransformPoint,
    cf_conditional_returns,
    cf_marginal_returns,
    feller_alpha,
    laplace_joint_given_v0,
    laplace_joint_stationary,
    stationary_pdf,
)
from .stehfest import StehfestScheme, stehfest_invert, stehfest_weights

__all__ = [
    "CalendarConvention",
    "HestonParams",
    "SP500_VIX_PARAMS",
    "TransformPoint",
    "StehfestScheme",
    "cf_conditional_returns",
    "cf_marginal_returns",
    "feller_alpha",
    "laplace_joint_given_v0",
    "laplace_joint_stationary",
    "stationary_pdf",
    "stehfest_invert",
    "stehfest_weights",
]
