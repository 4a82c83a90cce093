"""Filters and filter bases on a finite carrier.

On a finite carrier every filter is principal: it is the superset
closure of its core (the intersection of all members).  This makes the
counting facts exact: there are 2^n - 1 filters on n points, one per
nonempty core, and exactly n ultrafilters (the point filters).
"""

from itertools import product

from .errors import EmptyArgument, EmptyMeet, FilterBaseViolation, NotSurjective, UniverseMismatch
from .setops import SetSystem, full_mask, phi, points_of, psi


def is_filter(system):
    """None if the system is a filter, else (failed-axiom, witness).

    Axioms: (i) the empty set is not a member, (ii) the carrier is a
    member, (iii) closed under pairwise intersection, (iv) closed
    upward under supersets.
    """
    members = set(system.sets)
    if 0 in members:
        return ('no-empty-member', 0)
    if full_mask(system.n) not in members:
        return ('contains-whole', full_mask(system.n))
    for a in members:
        for b in members:
            if a & b not in members:
                return ('intersection-closed', (a, b))
    up = set(phi(system).sets)
    if up != members:
        return ('upward-closed', min(up - members))
    return None


class Filter:
    __slots__ = ('n', 'members')

    def __init__(self, n, members):
        system = members if isinstance(members, SetSystem) else SetSystem(n, members)
        if system.n != n:
            raise UniverseMismatch("member system lives on carrier %d, not %d" % (system.n, n))
        verdict = is_filter(system)
        if verdict is not None:
            raise FilterBaseViolation(*verdict)
        self.n = n
        self.members = system

    def __eq__(self, other):
        return isinstance(other, Filter) and self.n == other.n and self.members == other.members

    def __hash__(self):
        return hash((self.n, self.members))

    def __repr__(self):
        return 'Filter(%d, core=%r)' % (self.n, points_of(self.core()))

    def __contains__(self, mask):
        return mask in self.members

    def core(self):
        """Intersection of all members; nonempty on a finite carrier."""
        c = full_mask(self.n)
        for m in self.members:
            c &= m
        return c

    def is_finer(self, other):
        """Whether this filter is finer than other (contains it)."""
        return other.members <= self.members

    def is_ultrafilter(self):
        """A filter is an ultrafilter iff it contains A or its complement
        for every subset A; on a finite carrier iff its core is a point."""
        full = full_mask(self.n)
        members = set(self.members.sets)
        for a in range(1 << self.n):
            if a not in members and (full ^ a) not in members:
                return False
        return True


def is_filter_base(system):
    """None if the system is a filter base, else the failed condition.

    Conditions: no empty member, at least one member, and every
    pairwise intersection contains a member.  The last is equivalent to
    psi(system) being a subfamily of phi(system).
    """
    members = set(system.sets)
    if len(members) == 0:
        return ('nonempty', None)
    if 0 in members:
        return ('no-empty-member', 0)
    for a in members:
        for b in members:
            cap = a & b
            if not any(c & ~cap == 0 for c in members):
                return ('meet-refined', (a, b))
    return None


def generate_filter(base):
    """The filter generated by a filter base: its superset closure."""
    verdict = is_filter_base(base)
    if verdict is not None:
        raise FilterBaseViolation(*verdict)
    return Filter(base.n, phi(base))


def principal_filter(n, mask):
    """The filter of all supersets of a nonempty set."""
    if mask == 0:
        raise FilterBaseViolation('no-empty-member', 0)
    return Filter(n, phi(SetSystem(n, [mask])))


def point_filter(n, x):
    return principal_filter(n, 1 << x)


def enumerate_filters(n):
    """All filters on the carrier, one per nonempty core."""
    return [principal_filter(n, core) for core in range(1, 1 << n)]


def extend_to_ultrafilter(base):
    """An ultrafilter refining the filter generated by the base.

    Deterministic: the point filter at the smallest point of the core.
    """
    f = generate_filter(base)
    return point_filter(f.n, points_of(f.core())[0])


def supremum_of_filter_bases(bases):
    """Base of the supremum filter: all cross intersections picking one
    member from each base.  Raises EmptyMeet (with the offending
    selection) if some cross intersection is empty, in which case no
    common refinement exists."""
    if not bases:
        raise EmptyArgument("need at least one filter base")
    n = bases[0].n
    for b in bases:
        if b.n != n:
            raise UniverseMismatch("filter bases on different carriers")
        verdict = is_filter_base(b)
        if verdict is not None:
            raise FilterBaseViolation(*verdict)
    meets = set()
    for pick in product(*[b.sets for b in bases]):
        cap = full_mask(n)
        for m in pick:
            cap &= m
        if cap == 0:
            raise EmptyMeet(pick)
        meets.add(cap)
    return SetSystem(n, meets)


def supremum_filter(filters):
    """The coarsest filter finer than all the given ones, if any."""
    base = supremum_of_filter_bases([f.members for f in filters])
    return generate_filter(base)


def image_filter_base(f, base):
    """f[[base]] is a base of the image filter."""
    verdict = is_filter_base(base)
    if verdict is not None:
        raise FilterBaseViolation(*verdict)
    return f.image_system(base)


def image_filter(f, filt):
    return generate_filter(image_filter_base(f, filt.members))


def inverse_image_filter_base(f, base):
    """f^-1[[base]]; requires f surjective so no preimage is empty."""
    if not f.is_surjective():
        raise NotSurjective("inverse image filter needs a surjective map")
    verdict = is_filter_base(base)
    if verdict is not None:
        raise FilterBaseViolation(*verdict)
    return f.preimage_system(base)


def inverse_image_filter(f, filt):
    return generate_filter(inverse_image_filter_base(f, filt.members))
