"""Observable lower bounds on bipartite convex-roof entanglement measures.

A single expectation value ``<phi|rho|phi>`` against any pure entangled
reference state ``|phi>`` yields closed-form lower bounds on the entanglement
of formation, geometric measure, concurrence, convex-roof extended negativity
and G-concurrence of ``rho``.

>>> from entbound import lambda_from_fidelity, bound_report
>>> rep = bound_report(lambda_from_fidelity(0.9821, 0.75, 2))
>>> round(rep.concurrence_lb, 4)
0.3095
"""

from .curves import (
    BoundReport,
    LambdaValue,
    bound_report,
    co_k,
    co_p,
    co_r,
    cren_bound,
    generic_co_bound,
    k_curve,
    p_curve,
    q_curve,
    r_curve,
)
from .errors import DomainError, EntboundError, InvalidInput, NotEntangled, NumericalFailure
from .linalg import DensityMatrix, PureState, SchmidtVector, schmidt_decompose
from .measures import MeasureKind
from .witness import WitnessSpec, compute_lambda, lambda_from_fidelity, make_witness

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DensityMatrix",
    "DomainError",
    "EntboundError",
    "InvalidInput",
    "LambdaValue",
    "MeasureKind",
    "NotEntangled",
    "NumericalFailure",
    "PureState",
    "SchmidtVector",
    "WitnessSpec",
    "bound_report",
    "co_k",
    "co_p",
    "co_r",
    "compute_lambda",
    "cren_bound",
    "generic_co_bound",
    "k_curve",
    "lambda_from_fidelity",
    "make_witness",
    "p_curve",
    "q_curve",
    "r_curve",
    "schmidt_decompose",
]
