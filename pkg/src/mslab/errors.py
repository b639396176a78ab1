"""Exception types shared across the laboratory.

Domain violations (a pole on or outside the unit circle, an evaluation point
outside the closed disc, a malformed configuration string) raise plain
``ValueError``.  The classes below mark numerical failures that calling code
may want to distinguish: a certification that could not be established at the
requested truncation or conditioning, and an iteration that ran out of its
sweep budget.
"""

from __future__ import annotations


class CertificationError(RuntimeError):
    """A numerical guarantee could not be certified.

    Raised when a truncation is too short to certify orthonormality, when a
    constraint system is too ill-conditioned to trust, or when a quadrature
    rule is too coarse for the polynomial degree it is asked to integrate.
    """


class ConvergenceError(RuntimeError):
    """An iterative solver exhausted its iteration budget.

    Carries the residual reached so far in ``args`` for diagnostics.
    """
