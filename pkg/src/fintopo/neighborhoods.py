"""Neighborhood systems: point relations, set maps, and neighborhood bases.

A neighborhood system is a PointSetRelation N whose section N{x} lists
the neighborhoods of x.  The module validates the characterizing axioms,
reconstructs the topology ({U : U is a neighborhood of each of its
points}), and handles the set-indexed variant M(A) = neighborhoods of
the whole set A, plus neighborhood bases.
"""

from .errors import (NeighborhoodAxiomViolation, NeighborhoodBaseViolation,
                     NotABase, SetMapAxiomViolation, UniverseMismatch)
from .setops import (SetSystem, full_mask, phi, phi_prime, points_of,
                     powerset_system, relation_from_sections)
from .topology import Topology, is_base_of, neighborhood_relation


def check_neighborhood_axioms(rel):
    """None if rel is a neighborhood system, else (axiom, witness).

    Axioms, per point x:
      (i)   N{x} is nonempty,
      (ii)  x belongs to each of its neighborhoods,
      (iii) N{x} is upward closed,
      (iv)  N{x} is closed under pairwise intersection,
      (v)   every U in N{x} contains some V in N{x} with U in N{y}
            for every y in V.
    """
    n = rel.n
    sections = [set(rel.section(x).sets) for x in range(n)]
    for x in range(n):
        sec = sections[x]
        if not sec:
            return ('nonempty', x)
        for u in sec:
            if not u >> x & 1:
                return ('point-membership', (x, u))
        up = set(phi(SetSystem(n, sec)).sets)
        if up != sec:
            return ('upward-closed', (x, min(up - sec)))
        for u in sec:
            for v in sec:
                if u & v not in sec:
                    return ('intersection-closed', (x, u, v))
        for u in sec:
            if not any(all(u in sections[y] for y in points_of(v)) for v in sec):
                return ('interior-witness', (x, u))
    return None


def neighborhood_system_of(topology, kind='all'):
    """The neighborhood relation of a topology (all/open/closed flavour)."""
    return neighborhood_relation(topology, kind)


def topology_from_neighborhoods(rel):
    """Reconstruct the topology: open sets are the sets that are a
    neighborhood of each of their points."""
    verdict = check_neighborhood_axioms(rel)
    if verdict is not None:
        raise NeighborhoodAxiomViolation(*verdict)
    return _reconstruct(rel)


def _reconstruct(rel):
    n = rel.n
    sections = [set(rel.section(x).sets) for x in range(n)]
    opens = [u for u in range(1 << n)
             if all(u in sections[x] for x in points_of(u))]
    return Topology(n, opens, validate=False)


def neighborhoods_of_set(rel, a_mask):
    """Neighborhoods of a set: common neighborhoods of all its points.
    For the empty set this is the full powerset."""
    return rel.meet_section(a_mask)


class SetNeighborhoodMap:
    """M(A) = system of neighborhoods of the subset A, tabulated for all
    2^n subsets."""

    __slots__ = ('n', 'table')

    def __init__(self, n, table):
        table = tuple(sys if isinstance(sys, SetSystem) else SetSystem(n, sys)
                      for sys in table)
        if len(table) != 1 << n:
            raise UniverseMismatch("need one system per subset of the carrier")
        self.n = n
        self.table = table

    def __eq__(self, other):
        return (isinstance(other, SetNeighborhoodMap)
                and self.n == other.n and self.table == other.table)

    def __call__(self, a_mask):
        return self.table[a_mask]

    def __repr__(self):
        return 'SetNeighborhoodMap(%d, <%d systems>)' % (self.n, len(self.table))


def set_map_of(topology):
    """The set-neighborhood map of a topology."""
    rel = neighborhood_relation(topology)
    return SetNeighborhoodMap(topology.n,
                              [neighborhoods_of_set(rel, a) for a in range(1 << topology.n)])


def check_set_map_axioms(smap):
    """None if smap is a set-neighborhood map, else (axiom, witness).

    Axioms: each M(A) contains only supersets of A, is upward closed,
    intersection closed, nonempty, and admits interior witnesses; M of
    the empty set is the powerset; M turns unions into intersections
    (checked through the equivalent singleton decomposition
    M(A) = meet of M({x}) over x in A).
    """
    n = smap.n
    if smap.table[0] != powerset_system(n):
        return ('empty-set-full', 0)
    for a in range(1 << n):
        sec = set(smap.table[a].sets)
        if not sec:
            return ('nonempty', a)
        for u in sec:
            if a & ~u:
                return ('set-membership', (a, u))
        up = set(phi(smap.table[a]).sets)
        if up != sec:
            return ('upward-closed', (a, min(up - sec)))
        for u in sec:
            for v in sec:
                if u & v not in sec:
                    return ('intersection-closed', (a, u, v))
        for u in sec:
            if not any(u in smap.table[v] for v in sec):
                return ('interior-witness', (a, u))
        if a:
            meet = None
            for x in points_of(a):
                pts = set(smap.table[1 << x].sets)
                meet = pts if meet is None else meet & pts
            if sec != meet:
                return ('union-to-intersection', a)
    return None


def relation_from_set_map(smap):
    """Restrict a set map to singletons, yielding the point relation."""
    return relation_from_sections(smap.n,
                                  [smap.table[1 << x] for x in range(smap.n)])


def topology_from_set_map(smap):
    verdict = check_set_map_axioms(smap)
    if verdict is not None:
        raise SetMapAxiomViolation(*verdict)
    return _reconstruct(relation_from_set_map(smap))


def check_neighborhood_base_axioms(rel):
    """None if rel is a neighborhood base, else (axiom, witness).

    Axioms, per point x: B{x} is nonempty; x lies in each member; any
    two members contain a third inside their intersection; every member
    U contains a V in B{x} such that each y in V has a member inside U.
    """
    n = rel.n
    sections = [set(rel.section(x).sets) for x in range(n)]
    for x in range(n):
        sec = sections[x]
        if not sec:
            return ('nonempty', x)
        for u in sec:
            if not u >> x & 1:
                return ('point-membership', (x, u))
        for u in sec:
            for v in sec:
                cap = u & v
                if not any(w & ~cap == 0 for w in sec):
                    return ('meet-refined', (x, u, v))
        for u in sec:
            ok = any(all(any(w & ~u == 0 for w in sections[y]) for y in points_of(v))
                     for v in sec)
            if not ok:
                return ('interior-witness', (x, u))
    return None


def neighborhoods_from_base(rel):
    """The generated neighborhood system: pointwise superset closure."""
    verdict = check_neighborhood_base_axioms(rel)
    if verdict is not None:
        raise NeighborhoodBaseViolation(*verdict)
    return phi_prime(rel)


def topology_from_neighborhood_base(rel):
    return topology_from_neighborhoods(neighborhoods_from_base(rel))


def neighborhood_base_from_topological_base(base, topology):
    """Turn a base of the topology into a neighborhood base:
    B{x} = members of the base containing x."""
    if not is_base_of(base, topology):
        raise NotABase("the system is not a base of the given topology")
    n = topology.n
    pairs = [(x, m) for m in base for x in points_of(m)]
    from .setops import PointSetRelation
    return PointSetRelation(n, pairs)


def compare_by_neighborhoods(t1, t2):
    """t1 is finer than t2 iff, at every point, every t2-neighborhood is
    a t1-neighborhood.  Returns the same classification as compare()."""
    r1 = neighborhood_relation(t1)
    r2 = neighborhood_relation(t2)
    finer = all(r2.section(x) <= r1.section(x) for x in range(t1.n))
    coarser = all(r1.section(x) <= r2.section(x) for x in range(t1.n))
    if finer and coarser:
        return 'equal'
    if finer:
        return 'strictly-finer'
    if coarser:
        return 'strictly-coarser'
    return 'incomparable'
