"""Set systems on a finite carrier, encoded as int bit masks.

The carrier is {0, ..., n-1} with n <= 20.  A subset is an int whose bit i
is set iff point i belongs to the subset.  A set system is a canonical
(sorted, deduplicated) tuple of such masks.  On top of that encoding this
module provides the four structural operators used everywhere else:

  psi        all intersections of nonempty subfamilies
  theta      all unions of nonempty subfamilies
  phi        all supersets of members
  phi_prime  pointwise phi on a point/set relation

The empty intersection and the empty union are never formed: psi and
theta of the empty system are the empty system.
"""

from .errors import CapExceeded, UniverseMismatch

MAX_N = 20


def full_mask(n):
    return (1 << n) - 1


def mask_of(points, n=None):
    """Build a mask from an iterable of point indices."""
    m = 0
    for p in points:
        if p < 0 or (n is not None and p >= n):
            raise UniverseMismatch("point %d outside carrier of size %r" % (p, n))
        m |= 1 << p
    return m


def points_of(mask):
    """Sorted list of point indices of a mask."""
    pts = []
    i = 0
    while mask >> i:
        if mask >> i & 1:
            pts.append(i)
        i += 1
    return pts


def popcount(mask):
    return bin(mask).count('1')


def submasks(mask):
    """All submasks of mask, including 0 and mask itself."""
    out = []
    s = mask
    while True:
        out.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    out.reverse()
    return out


def supermasks(mask, n):
    """All supersets of mask inside the carrier of size n."""
    comp = full_mask(n) & ~mask
    return [mask | s for s in submasks(comp)]


class SetSystem:
    """A canonical family of subsets of {0,...,n-1}."""

    __slots__ = ('n', 'sets')

    def __init__(self, n, sets=()):
        if not 0 <= n <= MAX_N:
            raise CapExceeded("carrier size %d outside 0..%d" % (n, MAX_N))
        full = full_mask(n)
        canon = sorted(set(sets))
        for m in canon:
            if m < 0 or m & ~full:
                raise UniverseMismatch("mask %d not a subset of carrier of size %d" % (m, n))
        self.n = n
        self.sets = tuple(canon)

    def __eq__(self, other):
        return isinstance(other, SetSystem) and self.n == other.n and self.sets == other.sets

    def __hash__(self):
        return hash((self.n, self.sets))

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, mask):
        return mask in set(self.sets)

    def __le__(self, other):
        """Subfamily test (same carrier required)."""
        if self.n != other.n:
            raise UniverseMismatch("carriers differ: %d vs %d" % (self.n, other.n))
        return set(self.sets) <= set(other.sets)

    def __repr__(self):
        return 'SetSystem(%d, %r)' % (self.n, list(self.sets))

    def union_mask(self):
        u = 0
        for m in self.sets:
            u |= m
        return u

    def complements(self):
        """The system of complements of the members."""
        full = full_mask(self.n)
        return SetSystem(self.n, [full ^ m for m in self.sets])

    def with_sets(self, sets):
        return SetSystem(self.n, sets)


def powerset_system(n):
    return SetSystem(n, range(1 << n))


def _check_same_carrier(a, b):
    if a.n != b.n:
        raise UniverseMismatch("carriers differ: %d vs %d" % (a.n, b.n))


def psi(system):
    """All intersections of nonempty subfamilies.

    Computed as the fixed point of adjoining pairwise intersections;
    on a finite carrier this equals the subfamily-enumeration definition.
    """
    return system.with_sets(_pairwise_closure(system.sets, lambda a, b: a & b))


def theta(system):
    """All unions of nonempty subfamilies, via pairwise-union fixed point."""
    return system.with_sets(_pairwise_closure(system.sets, lambda a, b: a | b))


def _pairwise_closure(sets, op):
    members = set(sets)
    frontier = list(members)
    while frontier:
        m = frontier.pop()
        fresh = []
        for a in members:
            c = op(a, m)
            if c not in members:
                fresh.append(c)
        for c in fresh:
            members.add(c)
            frontier.append(c)
    return members


def phi(system):
    """All supersets (within the carrier) of members of the system."""
    out = set()
    for m in system.sets:
        out.update(supermasks(m, system.n))
    return system.with_sets(out)


class PointSetRelation:
    """A relation between points and subsets: a set of (point, mask) pairs.

    Sections come in two flavours: R{x} (the sets related to a point) and
    the derived section over a subset A, R<A> = intersection of the R{x}
    with x in A, plus R[A] = union of those sections.
    """

    __slots__ = ('n', 'pairs')

    def __init__(self, n, pairs=()):
        if not 0 <= n <= MAX_N:
            raise CapExceeded("carrier size %d outside 0..%d" % (n, MAX_N))
        full = full_mask(n)
        canon = sorted(set(pairs))
        for x, m in canon:
            if not 0 <= x < n:
                raise UniverseMismatch("point %d outside carrier of size %d" % (x, n))
            if m < 0 or m & ~full:
                raise UniverseMismatch("mask %d not a subset of carrier of size %d" % (m, n))
        self.n = n
        self.pairs = tuple(canon)

    def __eq__(self, other):
        return (isinstance(other, PointSetRelation)
                and self.n == other.n and self.pairs == other.pairs)

    def __hash__(self):
        return hash((self.n, self.pairs))

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return 'PointSetRelation(%d, %r)' % (self.n, list(self.pairs))

    def section(self, x):
        """R{x}: the system of sets related to point x."""
        return SetSystem(self.n, [m for p, m in self.pairs if p == x])

    def union_section(self, a_mask):
        """R[A]: union of the sections over the points of A."""
        return SetSystem(self.n, [m for p, m in self.pairs if a_mask >> p & 1])

    def meet_section(self, a_mask):
        """R<A>: sets related to *every* point of A.  R<empty> = powerset."""
        if a_mask == 0:
            return powerset_system(self.n)
        sections = [set(self.section(x).sets) for x in points_of(a_mask)]
        common = set.intersection(*sections)
        return SetSystem(self.n, common)


def relation_from_sections(n, sections):
    """Build a relation from a per-point list of systems (index = point)."""
    pairs = []
    for x, sys_x in enumerate(sections):
        for m in sys_x:
            pairs.append((x, m))
    return PointSetRelation(n, pairs)


def phi_prime(relation):
    """Pointwise superset closure: (phi' R){x} = phi(R{x}) for every x."""
    pairs = []
    for x in range(relation.n):
        for m in phi(relation.section(x)):
            pairs.append((x, m))
    return PointSetRelation(relation.n, pairs)


class FiniteMap:
    """A map {0..n_src-1} -> {0..n_dst-1} stored as the tuple of images."""

    __slots__ = ('n_src', 'n_dst', 'images')

    def __init__(self, n_src, n_dst, images):
        images = tuple(images)
        if len(images) != n_src:
            raise UniverseMismatch("expected %d images, got %d" % (n_src, len(images)))
        for y in images:
            if not 0 <= y < n_dst:
                raise UniverseMismatch("image %d outside carrier of size %d" % (y, n_dst))
        self.n_src = n_src
        self.n_dst = n_dst
        self.images = images

    def __eq__(self, other):
        return (isinstance(other, FiniteMap) and self.n_src == other.n_src
                and self.n_dst == other.n_dst and self.images == other.images)

    def __hash__(self):
        return hash((self.n_src, self.n_dst, self.images))

    def __call__(self, x):
        return self.images[x]

    def __repr__(self):
        return 'FiniteMap(%d, %d, %r)' % (self.n_src, self.n_dst, list(self.images))

    def image_mask(self, mask):
        """f[A] as a mask on the target carrier."""
        out = 0
        for x in range(self.n_src):
            if mask >> x & 1:
                out |= 1 << self.images[x]
        return out

    def preimage_mask(self, mask):
        """f^-1[B] as a mask on the source carrier."""
        out = 0
        for x in range(self.n_src):
            if mask >> self.images[x] & 1:
                out |= 1 << x
        return out

    def image_system(self, system):
        """f[[S]]: the system of images of the members of S."""
        _require(system.n == self.n_src, "system lives on the wrong carrier")
        return SetSystem(self.n_dst, [self.image_mask(m) for m in system])

    def preimage_system(self, system):
        """f^-1[[S]]: the system of preimages of the members of S."""
        _require(system.n == self.n_dst, "system lives on the wrong carrier")
        return SetSystem(self.n_src, [self.preimage_mask(m) for m in system])

    def is_surjective(self):
        return self.image_mask(full_mask(self.n_src)) == full_mask(self.n_dst)

    def is_injective(self):
        return len(set(self.images)) == self.n_src

    def compose(self, other):
        """self after other: (self . other)(x) = self(other(x))."""
        _require(other.n_dst == self.n_src, "composition carriers do not match")
        return FiniteMap(other.n_src, self.n_dst,
                         [self.images[y] for y in other.images])

    def inverse(self):
        _require(self.is_injective() and self.is_surjective(), "map is not bijective")
        inv = [0] * self.n_dst
        for x, y in enumerate(self.images):
            inv[y] = x
        return FiniteMap(self.n_dst, self.n_src, inv)


def identity_map(n):
    return FiniteMap(n, n, range(n))


def _require(cond, msg):
    if not cond:
        raise UniverseMismatch(msg)
