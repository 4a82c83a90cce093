"""Continuity of maps between finite spaces: local and global tests,
the equivalent global characterizations, open/closed maps, and
homeomorphisms."""

from itertools import permutations

from .closure import closure
from .convergence import filter_adherence
from .errors import ClusterPreconditionFailed, UniverseCardinalityMismatch, UniverseMismatch
from .setops import FiniteMap, full_mask, points_of
from .topology import Topology, minimal_base, neighborhood_relation


class SpaceMap:
    """A map together with source and target topologies."""

    __slots__ = ('source', 'target', 'f')

    def __init__(self, source, target, f):
        if f.n_src != source.n or f.n_dst != target.n:
            raise UniverseMismatch("map carriers do not match the spaces")
        self.source = source
        self.target = target
        self.f = f

    def __repr__(self):
        return 'SpaceMap(%r)' % (list(self.f.images),)

    def compose(self, other):
        """self after other."""
        if other.target != self.source:
            raise UniverseMismatch("intermediate spaces do not match")
        return SpaceMap(other.source, self.target, self.f.compose(other.f))


def is_continuous(m):
    """Preimage of every target-open set is source-open."""
    return all(m.f.preimage_mask(o) in m.source.opens for o in m.target.opens)


def is_continuous_at(m, x):
    """Preimage of every neighborhood of f(x) is a neighborhood of x.

    Checking open neighborhoods of f(x) suffices: preimages of supersets
    are supersets of preimages.
    """
    fx = m.f(x)
    src_nbh = set(neighborhood_relation(m.source).section(x).sets)
    for u in m.target.opens:
        if u >> fx & 1 and m.f.preimage_mask(u) not in src_nbh:
            return False
    return True


# --- the six global characterizations, each computed independently ---

def continuous_via_opens(m):
    return all(m.f.preimage_mask(o) in m.source.opens for o in m.target.opens)


def continuous_via_subbase(m):
    """Preimages of a subbase of the target are open; the minimal base
    serves as the subbase."""
    sub = minimal_base(m.target)
    return all(m.f.preimage_mask(s) in m.source.opens for s in sub)


def continuous_via_closeds(m):
    return all(m.source.is_closed(m.f.preimage_mask(c))
               for c in m.target.closed_sets())


def continuous_via_neighborhoods(m):
    return all(is_continuous_at(m, x) for x in range(m.source.n))


def continuous_via_filter_transfer(m):
    """For each x and each neighborhood U of f(x) there is a
    neighborhood V of x with f[V] contained in U."""
    src_rel = neighborhood_relation(m.source)
    dst_rel = neighborhood_relation(m.target)
    for x in range(m.source.n):
        vs = src_rel.section(x).sets
        for u in dst_rel.section(m.f(x)):
            if not any(m.f.image_mask(v) & ~u == 0 for v in vs):
                return False
    return True


def continuous_via_closure(m):
    """f[cl(A)] is contained in cl(f[A]) for every subset A."""
    for a in range(1 << m.source.n):
        img = m.f.image_mask(a)
        if m.f.image_mask(closure(m.source, a)) & ~closure(m.target, img):
            return False
    return True


def continuous_via_preimage_closure(m):
    """cl(f^-1[B]) is contained in f^-1[cl(B)] for every target subset B."""
    for b in range(1 << m.target.n):
        pre = m.f.preimage_mask(b)
        if closure(m.source, pre) & ~m.f.preimage_mask(closure(m.target, b)):
            return False
    return True


def continuous_via_preimage_interior(m):
    """f^-1[int(B)] is contained in int(f^-1[B]) for every target subset B."""
    from .closure import interior
    for b in range(1 << m.target.n):
        pre = m.f.preimage_mask(b)
        if m.f.preimage_mask(interior(m.target, b)) & ~interior(m.source, pre):
            return False
    return True


def continuity_characterizations(m):
    """All six global continuity characterizations, computed separately."""
    return {
        'opens': continuous_via_opens(m),
        'subbase': continuous_via_subbase(m),
        'closeds': continuous_via_closeds(m),
        'neighborhoods': continuous_via_neighborhoods(m),
        'filter-transfer': continuous_via_filter_transfer(m),
        'closure': continuous_via_closure(m),
    }


def map_open_closed(m):
    """(open?, closed?) for the map; the open test uses the base
    shortcut (images of a base are open) cross-checked against the
    image of every open."""
    base = minimal_base(m.source)
    via_base = all(m.f.image_mask(b) in m.target.opens for b in base)
    via_all = all(m.f.image_mask(o) in m.target.opens for o in m.source.opens)
    if via_base != via_all:
        raise AssertionError("base shortcut disagrees with the direct open-map test")
    closed = all(m.target.is_closed(m.f.image_mask(c))
                 for c in m.source.closed_sets())
    return via_all, closed


def homeomorphy(m):
    """Bijective with both directions continuous."""
    if not (m.f.is_injective() and m.f.is_surjective()):
        return False
    if not is_continuous(m):
        return False
    inv = SpaceMap(m.target, m.source, m.f.inverse())
    return is_continuous(inv)


def _degree_sequence(t):
    """Per-point count of opens containing the point, sorted."""
    return sorted(sum(1 for o in t.opens if o >> x & 1) for x in range(t.n))


def are_homeomorphic(t1, t2):
    """A homeomorphism witness (FiniteMap) or None.  Carriers <= 6.

    Scans bijections, pruned by open-set counts and by the degree
    sequence (how many opens contain each point), both of which are
    homeomorphism invariants.
    """
    if t1.n != t2.n:
        raise UniverseCardinalityMismatch("carriers have different sizes")
    if t1.n > 6:
        from .errors import CapExceeded
        raise CapExceeded("homeomorphism search capped at 6 points")
    if len(t1.opens) != len(t2.opens):
        return None
    if _degree_sequence(t1) != _degree_sequence(t2):
        return None
    opens2 = set(t2.opens.sets)
    for perm in permutations(range(t1.n)):
        f = FiniteMap(t1.n, t2.n, perm)
        if set(f.image_mask(o) for o in t1.opens) == opens2:
            return f
    return None


def filter_continuity_at(fx, fy, m, x):
    """Whether fy is coarser than the image of fx: every member of fy
    contains the image of some member of fx.

    Preconditions: x is a cluster point of fx in the source and f(x) is
    a cluster point of fy in the target.
    """
    if not filter_adherence(m.source, fx) >> x & 1:
        raise ClusterPreconditionFailed("x is not a cluster point of the source filter")
    if not filter_adherence(m.target, fy) >> m.f(x) & 1:
        raise ClusterPreconditionFailed("f(x) is not a cluster point of the target filter")
    for u in fy.members:
        if not any(m.f.image_mask(v) & ~u == 0 for v in fx.members):
            return False
    return True


def is_continuous_on_closed_pieces(m, pieces):
    """Gluing test: X covered by closed sets, each restriction
    continuous.  Returns the gluing verdict (equivalent to global
    continuity when the pieces are closed and cover X)."""
    from .generated import subspace_topology
    cover = 0
    for a in pieces:
        cover |= a
        if not m.source.is_closed(a):
            raise UniverseMismatch("piece %r is not closed" % a)
    if cover != full_mask(m.source.n):
        raise UniverseMismatch("pieces do not cover the carrier")
    for a in pieces:
        sub, point_map = subspace_topology(m.source, a)
        restricted = FiniteMap(sub.n, m.target.n, [m.f(p) for p in point_map])
        if not is_continuous(SpaceMap(sub, m.target, restricted)):
            return False
    return True
