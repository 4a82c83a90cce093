"""Invariant suites runnable from the CLI (`topo verify --suite NAME`).

Each suite returns pass/fail counts plus the first counterexample,
serialized as a replayable input.
"""

import random
from itertools import product as iproduct

from .errors import CapExceeded
from .setops import FiniteMap, SetSystem, phi, psi, theta
from .topology import enumerate_topologies


class _Tally:
    def __init__(self):
        self.total = 0
        self.failed = 0
        self.first = None

    def record(self, ok, counterexample):
        self.total += 1
        if not ok:
            self.failed += 1
            if self.first is None:
                self.first = counterexample() if callable(counterexample) else counterexample


def _systems(n):
    for bits in range(1 << (1 << n)):
        yield SetSystem(n, [m for m in range(1 << n) if bits >> m & 1])


def _suite_operators(n, tally):
    if n > 3:
        raise CapExceeded("operator suite scans all systems; n <= 3 only")
    from . import jsonio
    for s in _systems(n):
        ps, ts, fs = psi(s), theta(s), phi(s)
        ok = (psi(ps) == ps and theta(ts) == ts and phi(fs) == fs
              and set(psi(ts).sets) <= set(theta(ps).sets)
              and set(psi(fs).sets) <= set(phi(ps).sets))
        tally.record(ok, lambda: jsonio.system_to_json(s))


def _suite_kuratowski(n, tally):
    from . import jsonio
    from .closure import (closure_operator_of, enumerate_closure_operators,
                          topology_from_closure_operator)
    if n > 4:
        raise CapExceeded("closure-operator suite capped at n = 4")
    tops = enumerate_topologies(n)
    for t in tops:
        ok = topology_from_closure_operator(closure_operator_of(t)) == t
        tally.record(ok, lambda: jsonio.topology_to_json(t))
    ops = enumerate_closure_operators(n)
    tally.record(len(ops) == len(tops),
                 {'operator-count': len(ops), 'topology-count': len(tops)})


def _suite_neighborhoods(n, tally):
    from . import jsonio
    from .neighborhoods import (check_neighborhood_axioms, neighborhood_system_of,
                                set_map_of, topology_from_neighborhoods,
                                topology_from_set_map)
    if n > 3:
        raise CapExceeded("neighborhood suite capped at n = 3")
    for t in enumerate_topologies(n):
        rel = neighborhood_system_of(t)
        ok = (check_neighborhood_axioms(rel) is None
              and topology_from_neighborhoods(rel) == t
              and topology_from_set_map(set_map_of(t)) == t)
        tally.record(ok, lambda: jsonio.topology_to_json(t))


def _suite_filters(n, tally):
    from . import jsonio
    from .filters import enumerate_filters, extend_to_ultrafilter
    if n > 4:
        raise CapExceeded("filter suite capped at n = 4")
    filters = enumerate_filters(n)
    tally.record(len(filters) == (1 << n) - 1, {'filter-count': len(filters)})
    ultras = [f for f in filters if f.is_ultrafilter()]
    tally.record(len(ultras) == n, {'ultrafilter-count': len(ultras)})
    for f in filters:
        u = extend_to_ultrafilter(f.members)
        ok = u.is_ultrafilter() and u.is_finer(f)
        tally.record(ok, lambda: jsonio.system_to_json(f.members))


def _suite_continuity(n, tally):
    from . import jsonio
    from .continuity import SpaceMap, continuity_characterizations
    if n > 3:
        raise CapExceeded("continuity suite capped at n = 3")
    tops = enumerate_topologies(n)
    maps = [FiniteMap(n, n, im) for im in iproduct(range(n), repeat=n)]
    for t1 in tops:
        for t2 in tops:
            for f in maps:
                ch = continuity_characterizations(SpaceMap(t1, t2, f))
                tally.record(len(set(ch.values())) == 1,
                             lambda: {'src': jsonio.topology_to_json(t1),
                                      'dst': jsonio.topology_to_json(t2),
                                      'map': {'f': list(f.images)},
                                      'characterizations': ch})


def _suite_convergence(n, tally):
    from . import jsonio
    from .closure import closure
    from .convergence import filter_adherence, filter_limits
    from .filters import enumerate_filters, principal_filter
    if n > 3:
        raise CapExceeded("convergence suite capped at n = 3")
    all_filters = enumerate_filters(n)
    for t in enumerate_topologies(n):
        for a in range(1, 1 << n):
            cl = closure(t, a)
            via_adherence = filter_adherence(t, principal_filter(n, a))
            via_convergence = 0
            for f in all_filters:
                if a in f.members:
                    via_convergence |= filter_limits(t, f)
            tally.record(cl == via_adherence == via_convergence,
                         lambda: {'space': jsonio.topology_to_json(t), 'set': a})


def _suite_metric(n, tally):
    from fractions import Fraction
    from . import jsonio
    from .closure import closure
    from .metric import (PseudoMetric, bounded_equivalents, metric_topology,
                         validate_pseudometric, zero_distance_set)
    if not 1 <= n <= 5:
        raise CapExceeded("metric suite needs 1 <= n <= 5")
    rng = random.Random(101)
    trials = 0
    while trials < 25:
        d = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = Fraction(rng.randint(0, 4), rng.randint(1, 4))
                d[i][j] = d[j][i] = v
        if validate_pseudometric(d)[0] == 'invalid':
            continue
        trials += 1
        m = PseudoMetric(d)
        t = metric_topology(m)
        e, f = bounded_equivalents(m)
        ok = (metric_topology(e) == t and metric_topology(f) == t
              and all(zero_distance_set(m, a) == closure(t, a)
                      for a in range(1, 1 << n)))
        tally.record(ok, lambda: jsonio.metric_to_json(m))


def _suite_numeric(n, tally):
    from .numeric import Dyadic, DyadicPoly, bisection_invert
    rng = random.Random(404)
    for _ in range(200):
        deg = rng.randint(1, 3)
        lead = [abs(Dyadic(rng.randint(-4, 4), rng.randint(-2, 1))) + Dyadic(1)
                for _ in range(deg)]
        coeffs = [Dyadic(rng.randint(-4, 4), rng.randint(-2, 1))] + lead
        p = DyadicPoly(coeffs)  # positive higher coefficients: increasing on [0, 2]
        a, b = Dyadic(0), Dyadic(2)
        w = p(Dyadic(rng.randint(0, 8), -2))
        tol = Dyadic(1, -rng.randint(2, 10))
        trace = []
        r = bisection_invert(p, a, b, w, tol, trace=trace)
        widths_ok = all((y - x).to_fraction() == (b - a).to_fraction() / (1 << (i + 1))
                        for i, (x, y, _, _) in enumerate(trace))
        tally.record(a <= r <= b and widths_ok,
                     lambda: {'poly': [str(c) for c in coeffs], 'w': str(w)})


SUITES = {
    'operators': _suite_operators,
    'kuratowski': _suite_kuratowski,
    'neighborhoods': _suite_neighborhoods,
    'filters': _suite_filters,
    'continuity': _suite_continuity,
    'convergence': _suite_convergence,
    'metric': _suite_metric,
    'numeric': _suite_numeric,
}


def run_suite(name, n):
    tally = _Tally()
    SUITES[name](n, tally)
    return {
        'suite': name,
        'n': n,
        'total': tally.total,
        'passed': tally.total - tally.failed,
        'failed': tally.failed,
        'counterexample': tally.first,
    }
