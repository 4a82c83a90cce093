"""Convergence of filters, nets over finite directed sets, and
eventually periodic sequences."""

from .errors import EmptyArgument, NotDirected, UniverseMismatch
from .filters import Filter, generate_filter, is_filter_base
from .setops import SetSystem, full_mask, points_of
from .topology import Topology, neighborhood_relation


def filter_limits(topology, filt):
    """Points whose every neighborhood belongs to the filter."""
    rel = neighborhood_relation(topology)
    lim = 0
    members = set(filt.members.sets)
    for x in range(topology.n):
        if all(u in members for u in rel.section(x)):
            lim |= 1 << x
    return lim


def filter_adherence(topology, filt):
    """Points whose every neighborhood meets every filter member."""
    rel = neighborhood_relation(topology)
    adh = 0
    for x in range(topology.n):
        if all(u & f for u in rel.section(x) for f in filt.members):
            adh |= 1 << x
    return adh


def filter_base_limits(topology, base):
    return filter_limits(topology, generate_filter(base))


class DirectedSet:
    """A finite directed set: reflexive, transitive, every pair bounded
    above.  The order is stored as one 'upper cone' mask per element."""

    __slots__ = ('size', 'up')

    def __init__(self, size, leq_pairs):
        up = [1 << i for i in range(size)]  # reflexivity is implied
        for i, j in leq_pairs:
            if not (0 <= i < size and 0 <= j < size):
                raise UniverseMismatch("pair (%d, %d) outside domain of size %d" % (i, j, size))
            up[i] |= 1 << j
        for i in range(size):
            for j in range(size):
                if up[i] >> j & 1 and up[j] & ~up[i]:
                    raise NotDirected("order not transitive at (%d, %d)" % (i, j))
        for i in range(size):
            for j in range(size):
                if not up[i] & up[j]:
                    raise NotDirected("elements %d and %d have no upper bound" % (i, j))
        self.size = size
        self.up = tuple(up)

    def leq(self, i, j):
        return bool(self.up[i] >> j & 1)

    def __repr__(self):
        return 'DirectedSet(%d)' % self.size


class Net:
    """A net: a map from a finite directed set into the carrier."""

    __slots__ = ('domain', 'values', 'n')

    def __init__(self, domain, values, n):
        values = tuple(values)
        if len(values) != domain.size:
            raise UniverseMismatch("need one value per domain element")
        for v in values:
            if not 0 <= v < n:
                raise UniverseMismatch("value %d outside carrier of size %d" % (v, n))
        self.domain = domain
        self.values = values
        self.n = n

    def tail_mask(self, i):
        """Values taken from position i onward."""
        t = 0
        for j in range(self.domain.size):
            if self.domain.up[i] >> j & 1:
                t |= 1 << self.values[j]
        return t

    def eventually_in(self, u_mask):
        return any(self.tail_mask(i) & ~u_mask == 0 for i in range(self.domain.size))

    def frequently_in(self, u_mask):
        return all(self.tail_mask(i) & u_mask for i in range(self.domain.size))


def net_limits(topology, net):
    """Points x such that the net is eventually in every neighborhood of x."""
    rel = neighborhood_relation(topology)
    lim = 0
    for x in range(topology.n):
        if all(net.eventually_in(u) for u in rel.section(x)):
            lim |= 1 << x
    return lim


def net_cluster_points(topology, net):
    """Points x such that the net is frequently in every neighborhood of x."""
    rel = neighborhood_relation(topology)
    adh = 0
    for x in range(topology.n):
        if all(net.frequently_in(u) for u in rel.section(x)):
            adh |= 1 << x
    return adh


def filter_from_net(net):
    """The filter of tails (superset closure of the tail sets)."""
    tails = SetSystem(net.n, [net.tail_mask(i) for i in range(net.domain.size)])
    return generate_filter(tails)


def net_from_filter_base(base):
    """The canonical net of a filter base.

    Domain elements are pairs (x, B) with x a point of the base member
    B, ordered by reverse inclusion of the member; the net value is x.
    """
    from .errors import FilterBaseViolation
    verdict = is_filter_base(base)
    if verdict is not None:
        raise FilterBaseViolation(*verdict)
    elems = [(x, b) for b in base for x in points_of(b)]
    leq = [(i, j) for i, (_, b) in enumerate(elems)
           for j, (_, c) in enumerate(elems) if c & ~b == 0]
    domain = DirectedSet(len(elems), leq)
    return Net(domain, [x for x, _ in elems], base.n)


def product_directed_set(d1, d2):
    """Componentwise order on the product, row-major indexing."""
    size = d1.size * d2.size
    leq = []
    for i1 in range(d1.size):
        for i2 in range(d2.size):
            for j1 in range(d1.size):
                for j2 in range(d2.size):
                    if d1.leq(i1, j1) and d2.leq(i2, j2):
                        leq.append((i1 * d2.size + i2, j1 * d2.size + j2))
    return DirectedSet(size, leq)


class EventuallyPeriodicSequence:
    """A sequence given by a finite prefix and a repeating cycle."""

    __slots__ = ('pre', 'cycle', 'n')

    def __init__(self, pre, cycle, n):
        pre = tuple(pre)
        cycle = tuple(cycle)
        if not cycle:
            raise EmptyArgument("cycle must be nonempty")
        for v in pre + cycle:
            if not 0 <= v < n:
                raise UniverseMismatch("value %d outside carrier of size %d" % (v, n))
        self.pre = pre
        self.cycle = cycle
        self.n = n

    def value(self, k):
        if k < len(self.pre):
            return self.pre[k]
        return self.cycle[(k - len(self.pre)) % len(self.cycle)]

    def cycle_mask(self):
        m = 0
        for v in self.cycle:
            m |= 1 << v
        return m

    def eventually_in(self, u_mask):
        """The sequence is eventually in U iff every cycle value lies in U."""
        return self.cycle_mask() & ~u_mask == 0

    def frequently_in(self, u_mask):
        """Frequently in U iff some cycle value lies in U."""
        return bool(self.cycle_mask() & u_mask)


def sequence_limits(topology, seq):
    rel = neighborhood_relation(topology)
    lim = 0
    for x in range(topology.n):
        if all(seq.eventually_in(u) for u in rel.section(x)):
            lim |= 1 << x
    return lim


def sequence_cluster_points(topology, seq):
    rel = neighborhood_relation(topology)
    adh = 0
    for x in range(topology.n):
        if all(seq.frequently_in(u) for u in rel.section(x)):
            adh |= 1 << x
    return adh


def sequence_filter(seq):
    """The tail filter of the sequence: supersets of the cycle value set."""
    return generate_filter(SetSystem(seq.n, [seq.cycle_mask()]))
