"""fintopo: an exact engine for finite point-set topology.

Carriers are {0..n-1} with n <= 20, subsets are int bit masks, and all
arithmetic (rational distances, dyadic numerics) is exact.
"""

__version__ = '0.1.0'

from .setops import FiniteMap, PointSetRelation, SetSystem, phi, phi_prime, psi, theta
from .topology import (Topology, compare, discrete_topology, enumerate_topologies,
                       generate_from_base, generate_from_subbase,
                       indiscrete_topology, is_topology, sierpinski)

__all__ = [
    'FiniteMap', 'PointSetRelation', 'SetSystem',
    'phi', 'phi_prime', 'psi', 'theta',
    'Topology', 'compare', 'discrete_topology', 'enumerate_topologies',
    'generate_from_base', 'generate_from_subbase',
    'indiscrete_topology', 'is_topology', 'sierpinski',
]
