"""Closure, interior, derived set and boundary, plus axiomatic closure
and interior operators given as dense tables over all subsets."""

from .errors import InteriorAxiomViolation, KuratowskiViolation, UniverseMismatch
from .setops import SetSystem, full_mask, points_of
from .topology import Topology, neighborhood_relation


def interior(topology, a_mask):
    """Union of the open subsets of A: the largest open set inside A."""
    u = 0
    for o in topology.opens:
        if o & ~a_mask == 0:
            u |= o
    return u


def closure(topology, a_mask):
    """Intersection of the closed supersets of A."""
    full = full_mask(topology.n)
    c = full
    for o in topology.opens:
        cl = full ^ o
        if a_mask & ~cl == 0:
            c &= cl
    return c


def derived_set(topology, a_mask):
    """Limit points of A: x such that every neighborhood of x meets
    A away from x.  It suffices to check open neighborhoods."""
    n = topology.n
    d = 0
    for x in range(n):
        opens_at_x = [o for o in topology.opens if o >> x & 1]
        if all((a_mask & o) & ~(1 << x) for o in opens_at_x):
            d |= 1 << x
    return d


def boundary(topology, a_mask):
    """Points in the closure of A and of its complement."""
    full = full_mask(topology.n)
    return closure(topology, a_mask) & closure(topology, full ^ a_mask)


def is_dense(topology, a_mask):
    return closure(topology, a_mask) == full_mask(topology.n)


def analyze_subset(topology, a_mask):
    """Interior, closure, derived set, boundary and density of A."""
    return {
        'interior': interior(topology, a_mask),
        'closure': closure(topology, a_mask),
        'derived': derived_set(topology, a_mask),
        'boundary': boundary(topology, a_mask),
        'dense': is_dense(topology, a_mask),
    }


class SubsetOperator:
    """A map P(X) -> P(X) as a dense table indexed by subset mask."""

    __slots__ = ('n', 'table')

    def __init__(self, n, table):
        table = tuple(table)
        if len(table) != 1 << n:
            raise UniverseMismatch("need one value per subset of the carrier")
        full = full_mask(n)
        for v in table:
            if v < 0 or v & ~full:
                raise UniverseMismatch("table value %d outside the carrier" % v)
        self.n = n
        self.table = table

    def __eq__(self, other):
        return (isinstance(other, SubsetOperator)
                and self.n == other.n and self.table == other.table)

    def __hash__(self):
        return hash((self.n, self.table))

    def __call__(self, a_mask):
        return self.table[a_mask]

    def __repr__(self):
        return 'SubsetOperator(%d, %r)' % (self.n, list(self.table))

    def dual(self):
        """g(A) = complement of f(complement of A)."""
        full = full_mask(self.n)
        return SubsetOperator(self.n, [full ^ self.table[full ^ a] for a in range(1 << self.n)])


def closure_operator_of(topology):
    return SubsetOperator(topology.n,
                          [closure(topology, a) for a in range(1 << topology.n)])


def interior_operator_of(topology):
    return SubsetOperator(topology.n,
                          [interior(topology, a) for a in range(1 << topology.n)])


def check_closure_axioms(op):
    """None if op satisfies the closure-operator axioms, else
    (axiom, witness): fixes the empty set, is extensive, distributes
    over pairwise unions, and is idempotent."""
    t = op.table
    if t[0] != 0:
        return ('empty-fixed', 0)
    size = 1 << op.n
    for a in range(size):
        if a & ~t[a]:
            return ('extensive', a)
        if t[t[a]] != t[a]:
            return ('idempotent', a)
    for a in range(size):
        for b in range(size):
            if t[a | b] != t[a] | t[b]:
                return ('additive', (a, b))
    return None


def topology_from_closure_operator(op):
    """The topology whose closed sets are the fixed points of op."""
    verdict = check_closure_axioms(op)
    if verdict is not None:
        raise KuratowskiViolation(*verdict)
    full = full_mask(op.n)
    opens = [full ^ a for a in range(1 << op.n) if op.table[a] == a]
    return Topology(op.n, opens, validate=False)


def check_interior_axioms(op):
    """None if op satisfies the interior-operator axioms, else
    (axiom, witness): fixes the carrier, is contractive, distributes
    over pairwise intersections, and is idempotent."""
    t = op.table
    full = full_mask(op.n)
    if t[full] != full:
        return ('whole-fixed', full)
    size = 1 << op.n
    for a in range(size):
        if t[a] & ~a:
            return ('contractive', a)
        if t[t[a]] != t[a]:
            return ('idempotent', a)
    for a in range(size):
        for b in range(size):
            if t[a & b] != t[a] & t[b]:
                return ('multiplicative', (a, b))
    return None


def topology_from_interior_operator(op):
    """The topology whose open sets are the fixed points of op."""
    verdict = check_interior_axioms(op)
    if verdict is not None:
        raise InteriorAxiomViolation(*verdict)
    opens = [a for a in range(1 << op.n) if op.table[a] == a]
    return Topology(op.n, opens, validate=False)


def enumerate_closure_operators(n):
    """All valid closure-operator tables on n points.

    Additivity together with f(empty) = empty forces
    f(A) = union of f({x}) over x in A, so it is enough to choose, for
    each point, a superset of that point as its singleton image and
    keep the choices whose induced table is idempotent (extensivity and
    additivity hold by construction).
    """
    from itertools import product
    from .setops import supermasks
    size = 1 << n
    choices = [supermasks(1 << x, n) for x in range(n)]
    ops = []
    for pick in product(*choices):
        table = [0] * size
        for a in range(1, size):
            u = 0
            for x in points_of(a):
                u |= pick[x]
            table[a] = u
        if all(table[table[a]] == table[a] for a in range(size)):
            ops.append(SubsetOperator(n, table))
    return ops
