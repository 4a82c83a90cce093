"""Finite topologies: validation, generation from (sub)bases, closed-set
duality, comparison, and exhaustive enumeration up to n = 5."""

import random

from .errors import (BaseCriterionViolation, CapExceeded, ClosedAxiomViolation,
                     NotABase, SubbaseCriterionViolation, UniverseMismatch)
from .setops import SetSystem, full_mask, phi_prime, psi, relation_from_sections, theta


class Topology:
    """A topology given by its system of open sets."""

    __slots__ = ('n', 'opens')

    def __init__(self, n, opens, validate=True):
        system = opens if isinstance(opens, SetSystem) else SetSystem(n, opens)
        if system.n != n:
            raise UniverseMismatch("open system lives on carrier %d, not %d" % (system.n, n))
        if validate:
            verdict = is_topology(system)
            if verdict is not None:
                axiom, witness = verdict
                raise BaseCriterionViolation(axiom, witness,
                                             "not a topology: %s fails (witness %r)" % (axiom, witness))
        self.n = n
        self.opens = system

    def __eq__(self, other):
        return isinstance(other, Topology) and self.n == other.n and self.opens == other.opens

    def __hash__(self):
        return hash((self.n, self.opens))

    def __repr__(self):
        return 'Topology(%d, %r)' % (self.n, list(self.opens))

    def is_open(self, mask):
        return mask in self.opens

    def is_closed(self, mask):
        return (full_mask(self.n) ^ mask) in self.opens

    def closed_sets(self):
        return self.opens.complements()


def is_topology(system):
    """None if the system is a topology, else (failed-axiom, witness).

    Axioms: (i) contains the empty set and the whole carrier,
    (ii) closed under unions of nonempty subfamilies,
    (iii) closed under intersections of nonempty finite subfamilies.
    Pairwise closure suffices for both on a finite carrier.
    """
    full = full_mask(system.n)
    members = set(system.sets)
    if 0 not in members:
        return ('contains-empty', 0)
    if full not in members:
        return ('contains-whole', full)
    for a in members:
        for b in members:
            if a | b not in members:
                return ('union-closed', (a, b))
            if a & b not in members:
                return ('intersection-closed', (a, b))
    return None


def discrete_topology(n):
    return Topology(n, range(1 << n), validate=False)


def indiscrete_topology(n):
    return Topology(n, [0, full_mask(n)], validate=False)


def sierpinski():
    """Carrier {0,1} with {1} open (and {0} not)."""
    return Topology(2, [0b00, 0b10, 0b11], validate=False)


def is_base_system(system):
    """None, or (criterion, witness) if system fails the base criteria.

    Criteria: the empty set is a member, the members cover the carrier,
    and every pairwise intersection of members is a union of members.
    """
    members = set(system.sets)
    if 0 not in members:
        return ('contains-empty', 0)
    if system.union_mask() != full_mask(system.n):
        return ('covers-carrier', system.union_mask())
    for a in members:
        for b in members:
            cap = a & b
            u = 0
            for m in members:
                if m & ~cap == 0:
                    u |= m
            if u != cap:
                return ('intersections-are-unions', (a, b))
    return None


def generate_from_base(system):
    """The topology with the given base; raises if the criteria fail."""
    verdict = is_base_system(system)
    if verdict is not None:
        raise BaseCriterionViolation(*verdict)
    return Topology(system.n, theta(system), validate=False)


def is_subbase_system(system):
    """None, or the failed subbase criterion.

    Criteria: the system is nonempty, its members cover the carrier, and
    some nonempty subfamily has empty intersection (so the generated
    system picks up the empty set).
    """
    if len(system) == 0:
        return 'nonempty'
    if system.union_mask() != full_mask(system.n):
        return 'covers-carrier'
    if 0 not in psi(system):
        return 'empty-set-reachable'
    return None


def generate_from_subbase(system):
    """The coarsest topology containing the system: theta(psi(system))."""
    verdict = is_subbase_system(system)
    if verdict is not None:
        raise SubbaseCriterionViolation(verdict)
    return Topology(system.n, theta(psi(system)), validate=False)


def is_base_of(system, topology):
    """Whether the system is a base of the given topology."""
    if system.n != topology.n:
        raise UniverseMismatch("carriers differ")
    return (is_base_system(system) is None
            and theta(system) == topology.opens)


def minimal_base(topology):
    """The unique minimal base: opens that are not unions of strictly
    smaller opens (plus the empty set, which every base must contain)."""
    opens = set(topology.opens.sets)
    keep = [0]
    for m in opens:
        if m == 0:
            continue
        u = 0
        for o in opens:
            if o != m and o & ~m == 0:
                u |= o
        if u != m:
            keep.append(m)
    return SetSystem(topology.n, keep)


def is_closed_system(system):
    """None if the system satisfies the closed-set axioms, else (axiom, witness)."""
    full = full_mask(system.n)
    members = set(system.sets)
    if 0 not in members:
        return ('contains-empty', 0)
    if full not in members:
        return ('contains-whole', full)
    for a in members:
        for b in members:
            if a & b not in members:
                return ('intersection-closed', (a, b))
            if a | b not in members:
                return ('union-closed', (a, b))
    return None


def topology_from_closed_system(system):
    """Topology whose closed sets are exactly the given system."""
    verdict = is_closed_system(system)
    if verdict is not None:
        raise ClosedAxiomViolation(*verdict)
    return Topology(system.n, system.complements(), validate=False)


def is_finer(t1, t2):
    """Whether t1 is finer than t2 (every t2-open is t1-open)."""
    return t2.opens <= t1.opens


def compare(t1, t2):
    """'equal', 'strictly-finer', 'strictly-coarser' or 'incomparable'
    (t1 relative to t2)."""
    fine = is_finer(t1, t2)
    coarse = is_finer(t2, t1)
    if fine and coarse:
        return 'equal'
    if fine:
        return 'strictly-finer'
    if coarse:
        return 'strictly-coarser'
    return 'incomparable'


def neighborhood_relation(topology, kind='all'):
    """The neighborhood relation of the topology as a PointSetRelation.

    kind selects all neighborhoods, only the open ones, or only the
    closed ones.
    """
    from .setops import phi  # local import keeps module load order simple
    n = topology.n
    sections = []
    for x in range(n):
        opens_at_x = [u for u in topology.opens if u >> x & 1]
        if kind == 'open':
            sec = SetSystem(n, opens_at_x)
        else:
            sec = phi(SetSystem(n, opens_at_x))
            if kind == 'closed':
                sec = SetSystem(n, [m for m in sec if topology.is_closed(m)])
            elif kind != 'all':
                raise ValueError("kind must be 'all', 'open' or 'closed'")
        sections.append(sec)
    return relation_from_sections(n, sections)


def enumerate_topologies(n, count_only=False, sample_check=None):
    """All topologies on {0..n-1}, canonically sorted.  n <= 5.

    For n <= 4 every subsystem of the powerset is scanned.  For n = 5
    a backtracking search over union- and intersection-closed families
    is used instead.  sample_check, if given, is a fraction of the
    results to re-validate with the axiom checker (returns the count of
    revalidated families alongside).
    """
    if n > 5:
        raise CapExceeded("enumeration supported only for n <= 5")
    if n <= 4:
        results = _enumerate_brute(n)
    else:
        results = _enumerate_backtrack(n)
    if sample_check:
        rng = random.Random(20260824)
        k = max(1, int(len(results) * sample_check))
        for sets in rng.sample(results, k):
            if is_topology(SetSystem(n, sets)) is not None:
                raise AssertionError("enumeration produced a non-topology: %r" % (sets,))
    if count_only:
        return len(results)
    return [Topology(n, SetSystem(n, s), validate=False) for s in results]


def _enumerate_brute(n):
    full = full_mask(n)
    nmasks = 1 << n
    results = []
    # a candidate system is itself a bit mask over the 2^n subset masks
    must = (1 << 0) | (1 << full)
    for sysmask in range(1 << nmasks):
        if sysmask & must != must:
            continue
        members = [m for m in range(nmasks) if sysmask >> m & 1]
        ok = True
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if not (sysmask >> (a | b) & 1) or not (sysmask >> (a & b) & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            results.append(tuple(members))
    return results


def _enumerate_backtrack(n):
    full = full_mask(n)
    order = list(range(1, full))  # intermediate masks, decided in increasing order
    results = []
    included = {0, full}
    excluded = set()
    required = set()

    def rec(i):
        if i == len(order):
            results.append(tuple(sorted(included)))
            return
        m = order[i]
        if m not in required:
            excluded.add(m)
            rec(i + 1)
            excluded.remove(m)
        # try including m: every product with an already-included member
        # must not be an already-rejected (smaller or excluded) mask
        forced = set()
        ok = True
        for a in included:
            for w in (a | m, a & m):
                if w == m or w in included:
                    continue
                if w < m:
                    ok = False
                    break
                forced.add(w)
            if not ok:
                break
        if ok:
            included.add(m)
            was_required = m in required
            required.discard(m)
            added = forced - required
            required.update(added)
            rec(i + 1)
            required.difference_update(added)
            if was_required:
                required.add(m)
            included.discard(m)

    rec(0)
    results.sort()
    return results
