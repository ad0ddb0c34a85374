"""Qubit-oscillator dynamics with periodically switched coupling.

The package computes the excitation dynamics of N two-level systems coupled
to a single bosonic mode through a cosine-modulated coupling, by five
independent routes (direct integration, Trotterized propagation, Floquet
monodromy analysis, time-domain perturbation theory and Laplace-domain
residue inversion), and cross-validates them against each other.
"""

from qubosc.model import SystemParams, BasisIndex

__all__ = ["SystemParams", "BasisIndex", "__version__"]

__version__ = "0.1.0"
