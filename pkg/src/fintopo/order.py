"""Finite preorders and the interval topology.

A preorder comes in two flavours: 'strict' (transitive, irreflexive,
like <) and 'reflexive' (transitive and reflexive, like <=).  Lower and
upper segments are written ]-inf,x[ = {y : y rel x} and
]x,inf[ = {y : x rel y}; in the reflexive flavour a point may belong to
its own segments.
"""

from .errors import (MissingFullDomain, MissingFullRange, NoFullField,
                     NotDirected, UniverseMismatch)
from .setops import SetSystem, full_mask, points_of, psi, theta
from .topology import Topology


class Preorder:
    __slots__ = ('n', 'succ', 'flavor')

    def __init__(self, n, pairs, flavor):
        if flavor not in ('strict', 'reflexive'):
            raise ValueError("flavor must be 'strict' or 'reflexive'")
        succ = [0] * n
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise UniverseMismatch("pair (%d, %d) outside carrier of size %d" % (i, j, n))
            succ[i] |= 1 << j
        if flavor == 'reflexive':
            for i in range(n):
                if not succ[i] >> i & 1:
                    raise NotDirected("reflexive flavor requires %d rel %d" % (i, i))
        else:
            for i in range(n):
                if succ[i] >> i & 1:
                    raise NotDirected("strict flavor forbids %d rel %d" % (i, i))
        for i in range(n):
            for j in points_of(succ[i]):
                if succ[j] & ~succ[i]:
                    raise NotDirected("relation not transitive at (%d, %d)" % (i, j))
        self.n = n
        self.succ = tuple(succ)
        self.flavor = flavor

    def rel(self, i, j):
        return bool(self.succ[i] >> j & 1)

    def __repr__(self):
        return 'Preorder(%d, %s)' % (self.n, self.flavor)

    def upper_segment(self, x):
        """]x, inf[ = points above x."""
        return self.succ[x]

    def lower_segment(self, x):
        """]-inf, x[ = points below x."""
        m = 0
        for y in range(self.n):
            if self.succ[y] >> x & 1:
                m |= 1 << y
        return m

    def lower_segments(self):
        """The system of lower segments together with the empty set."""
        return SetSystem(self.n, [0] + [self.lower_segment(x) for x in range(self.n)])

    def upper_segments(self):
        return SetSystem(self.n, [0] + [self.upper_segment(x) for x in range(self.n)])


def has_full_domain(p):
    """Every point is below something."""
    return all(p.succ[x] for x in range(p.n))


def has_full_range(p):
    """Every point is above something."""
    return all(p.lower_segment(x) for x in range(p.n))


def has_full_field(p):
    return all(p.succ[x] or p.lower_segment(x) for x in range(p.n))


def is_connective(p):
    """Any two distinct points are comparable."""
    return all(p.rel(x, y) or p.rel(y, x)
               for x in range(p.n) for y in range(p.n) if x != y)


def has_interval_intersection_property(p):
    """Lower and upper segment systems (with the empty set) are fixed
    points of the finite-intersection operator."""
    lo = p.lower_segments()
    up = p.upper_segments()
    return psi(lo) == lo and psi(up) == up


def is_interval_relation(p):
    return (has_interval_intersection_property(p)
            and has_full_domain(p) and has_full_range(p))


def _upper_bounds(p, a_mask):
    """Points u with a rel u or a == u for every a in the set."""
    ub = full_mask(p.n)
    for a in points_of(a_mask):
        ub &= p.succ[a] | (1 << a)
    return ub


def has_lub_property(p):
    """Every nonempty subset with an upper bound has a least upper
    bound: an upper bound below-or-equal every other upper bound."""
    for a_mask in range(1, 1 << p.n):
        ub = _upper_bounds(p, a_mask)
        if not ub:
            continue
        if not any(ub & ~(p.succ[s] | (1 << s)) == 0 for s in points_of(ub)):
            return False
    return True


def relation_properties(p):
    return {
        'transitive': True,  # enforced at construction
        'reflexive': p.flavor == 'reflexive',
        'connective': is_connective(p),
        'full-domain': has_full_domain(p),
        'full-range': has_full_range(p),
        'full-field': has_full_field(p),
        'interval-intersection': has_interval_intersection_property(p),
        'interval-relation': is_interval_relation(p),
        'lub-property': has_lub_property(p),
    }


def _generate(n, subbase):
    return Topology(n, theta(psi(SetSystem(n, subbase))), validate=False)


def interval_topology(p):
    """Generated by the subbase of all lower and upper segments plus
    the empty set.  Requires full field (so the segments cover X)."""
    if not has_full_field(p):
        raise NoFullField("some point is comparable to nothing")
    subbase = {0}
    for x in range(p.n):
        subbase.add(p.lower_segment(x))
        subbase.add(p.upper_segment(x))
    return _generate(p.n, subbase)


def is_order_dense(p, y_mask):
    """Y is order dense: whenever x rel z there is a point of Y
    strictly between them."""
    for x in range(p.n):
        for z in points_of(p.succ[x]):
            if not any(p.rel(x, y) and p.rel(y, z) for y in points_of(y_mask)):
                return False
    return True


def interval_topology_from_dense(p, y_mask):
    """Interval topology generated from segments at points of an order
    dense subset only."""
    if not has_full_field(p):
        raise NoFullField("some point is comparable to nothing")
    subbase = {0}
    for y in points_of(y_mask):
        subbase.add(p.lower_segment(y))
        subbase.add(p.upper_segment(y))
    cover = 0
    for m in subbase:
        cover |= m
    if cover != full_mask(p.n):
        from .errors import SubbaseCriterionViolation
        raise SubbaseCriterionViolation('covers-carrier')
    return _generate(p.n, subbase)


def interval_topology_family(preorders):
    """Interval topology of a family of preorders on a common carrier:
    generated by all segments of all members plus the empty set.
    The family must have full field (segments cover the carrier)."""
    if not preorders:
        raise NoFullField("empty family covers nothing")
    n = preorders[0].n
    subbase = {0}
    cover = 0
    for p in preorders:
        if p.n != n:
            raise UniverseMismatch("family members live on different carriers")
        for x in range(n):
            subbase.add(p.lower_segment(x))
            subbase.add(p.upper_segment(x))
    for m in subbase:
        cover |= m
    if cover != full_mask(n):
        raise NoFullField("family segments do not cover the carrier")
    return _generate(n, subbase)


def pullback_preorder(p, f):
    """The preorder induced along a map: x below y iff f(x) below f(y)."""
    pairs = [(x, y) for x in range(f.n_src) for y in range(f.n_src)
             if p.rel(f(x), f(y))]
    return Preorder(f.n_src, pairs, p.flavor)


def one_sided_topology(p, side):
    """Topology of lower (resp. upper) segments plus the empty set.

    The lower side needs full domain so the lower segments cover X; the
    upper side needs full range.
    """
    if side == 'lower':
        if not has_full_domain(p):
            raise MissingFullDomain("a point with empty upper segment breaks the cover")
        segs = [p.lower_segment(x) for x in range(p.n)]
    elif side == 'upper':
        if not has_full_range(p):
            raise MissingFullRange("a point with empty lower segment breaks the cover")
        segs = [p.upper_segment(x) for x in range(p.n)]
    else:
        raise ValueError("side must be 'lower' or 'upper'")
    return _generate(p.n, [0] + segs)


def segment_system_is_topology(p, side):
    """Whether the one-sided segment system plus {empty, X} is already
    union-closed (hence a topology): true for total orders with the
    least-upper-bound property."""
    segs = p.lower_segments() if side == 'lower' else p.upper_segments()
    system = SetSystem(p.n, list(segs) + [0, full_mask(p.n)])
    return theta(system) == system


def chain(n, flavor='strict'):
    """The total order 0 < 1 < ... < n-1 (or <= in reflexive flavor)."""
    pairs = [(i, j) for i in range(n) for j in range(n)
             if i < j or (flavor == 'reflexive' and i == j)]
    return Preorder(n, pairs, flavor)


def fence(n):
    """A zigzag order: 0 < 1 > 2 < 3 > ...  (strict flavor)."""
    pairs = []
    for i in range(n - 1):
        if i % 2 == 0:
            pairs.append((i, i + 1))
        else:
            pairs.append((i + 1, i))
    # transitive closure is the relation itself for a fence
    return Preorder(n, pairs, 'strict')


def product_preorder(ps):
    """Componentwise comparison on the row-major flattened product."""
    from itertools import product as iproduct
    sizes = [p.n for p in ps]
    total = 1
    for s in sizes:
        total *= s
    points = list(iproduct(*[range(s) for s in sizes]))
    flavor = ps[0].flavor if ps else 'strict'
    pairs = []
    for i, a in enumerate(points):
        for j, b in enumerate(points):
            if i == j:
                continue
            if all(p.rel(x, y) or x == y for p, x, y in zip(ps, a, b)) \
                    and any(p.rel(x, y) for p, x, y in zip(ps, a, b)):
                pairs.append((i, j))
    if flavor == 'reflexive':
        pairs += [(i, i) for i in range(total)]
    return Preorder(total, pairs, flavor)
