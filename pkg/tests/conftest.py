"""Shared helpers: independent oracles used to cross-check the library.

The oracles here deliberately use the definition-by-enumeration route
(subfamilies, direct scans) rather than the fixed-point implementations
in the package, so they can serve as independent references.
"""

from itertools import combinations

from fintopo.setops import SetSystem, full_mask


def all_systems(n):
    """Every set system on {0..n-1} (2^(2^n) of them)."""
    for bits in range(1 << (1 << n)):
        yield SetSystem(n, [m for m in range(1 << n) if bits >> m & 1])


def psi_oracle(system):
    """Intersections of all nonempty subfamilies, by enumeration."""
    out = set()
    sets = system.sets
    for k in range(1, len(sets) + 1):
        for combo in combinations(sets, k):
            cap = combo[0]
            for m in combo[1:]:
                cap &= m
            out.add(cap)
    return SetSystem(system.n, out)


def theta_oracle(system):
    """Unions of all nonempty subfamilies, by enumeration."""
    out = set()
    sets = system.sets
    for k in range(1, len(sets) + 1):
        for combo in combinations(sets, k):
            cup = 0
            for m in combo:
                cup |= m
            out.add(cup)
    return SetSystem(system.n, out)


def phi_oracle(system):
    """Supersets by direct scan over the whole powerset."""
    out = set()
    for cand in range(1 << system.n):
        if any(m & ~cand == 0 for m in system.sets):
            out.add(cand)
    return SetSystem(system.n, out)


def is_topology_oracle(system):
    """Direct axiom scan, closed under all subfamily unions/intersections."""
    members = set(system.sets)
    if 0 not in members or full_mask(system.n) not in members:
        return False
    t = theta_oracle(system)
    p = psi_oracle(system)
    return set(t.sets) <= members and set(p.sets) <= members
