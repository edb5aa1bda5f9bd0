"""hjsafe: robust safe sets, GP disturbance bounds, and supervised safe learning.

Subpackages/modules:
    dynamics    uncertain vertical-flight model, trajectory integration
    reach       grid-based Hamilton-Jacobi-Isaacs safety solver
    gp          Gaussian-process disturbance inference and bound construction
    confidence  online Bayesian validation of the computed guarantees
    supervisor  least-restrictive safety filter around a learning controller
    learner     finite-difference policy-gradient tracking controller
    sim         closed-loop quadrotor vertical-flight simulator + scenarios
    cli         command-line entry points (``hjsafe run|reach|gp``)
"""

__version__ = "0.1.0"
