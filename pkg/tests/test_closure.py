"""Closure/interior/derived/boundary and the axiomatic operators."""

import pytest

from fintopo.closure import (SubsetOperator, analyze_subset, boundary,
                             check_closure_axioms, check_interior_axioms,
                             closure, closure_operator_of, derived_set,
                             enumerate_closure_operators, interior,
                             interior_operator_of, is_dense,
                             topology_from_closure_operator,
                             topology_from_interior_operator)
from fintopo.errors import InteriorAxiomViolation, KuratowskiViolation
from fintopo.setops import full_mask
from fintopo.topology import (Topology, discrete_topology, enumerate_topologies,
                              indiscrete_topology, sierpinski)


class TestPointSetOperations:
    def test_sierpinski_closed_point(self):
        t = sierpinski()  # {1} open, {0} closed
        assert closure(t, 0b01) == 0b01
        assert closure(t, 0b10) == 0b11
        assert interior(t, 0b10) == 0b10
        assert interior(t, 0b01) == 0b00
        assert boundary(t, 0b10) == 0b01
        assert derived_set(t, 0b10) == 0b01

    def test_discrete_everything_clopen(self):
        t = discrete_topology(3)
        for a in range(8):
            assert closure(t, a) == a == interior(t, a)
            assert boundary(t, a) == 0
            assert derived_set(t, a) == 0

    def test_indiscrete(self):
        t = indiscrete_topology(2)
        assert closure(t, 0b01) == 0b11
        assert interior(t, 0b01) == 0
        assert is_dense(t, 0b01)

    def test_analyze_subset_consistency(self):
        t = sierpinski()
        rep = analyze_subset(t, 0b10)
        assert rep == {'interior': 0b10, 'closure': 0b11, 'derived': 0b01,
                       'boundary': 0b01, 'dense': True}


class TestStructuralLaws:
    def test_pointwise_identities_n3(self):
        full = full_mask(3)
        for t in enumerate_topologies(3):
            for a in range(8):
                ca, ia = closure(t, a), interior(t, a)
                # closure of complement is complement of interior
                assert closure(t, full ^ a) == full ^ ia
                assert interior(t, full ^ a) == full ^ ca
                # closure = set plus derived set; = interior plus boundary
                assert ca == a | derived_set(t, a)
                assert ca == ia | boundary(t, a)
                assert boundary(t, a) == ca & closure(t, full ^ a)
                # idempotence and extensivity
                assert closure(t, ca) == ca
                assert interior(t, ia) == ia
                assert a & ~ca == 0 and ia & ~a == 0
                # open/closed characterizations
                assert t.is_open(a) == (ia == a)
                assert t.is_closed(a) == (ca == a)

    def test_distribution_laws_n3(self):
        for t in enumerate_topologies(3):
            for a in range(8):
                for b in range(8):
                    assert closure(t, a | b) == closure(t, a) | closure(t, b)
                    assert interior(t, a & b) == interior(t, a) & interior(t, b)
                    assert closure(t, a & b) & ~(closure(t, a) & closure(t, b)) == 0
                    assert (interior(t, a) | interior(t, b)) & ~interior(t, a | b) == 0

    def test_strictness_witnesses_exist_within_n3(self):
        # closure does not distribute over intersections in general, nor
        # interior over unions; witnesses are found at this scale
        cap_strict = False
        cup_strict = False
        for t in enumerate_topologies(3):
            for a in range(8):
                for b in range(8):
                    if closure(t, a & b) != closure(t, a) & closure(t, b):
                        cap_strict = True
                    if interior(t, a | b) != interior(t, a) | interior(t, b):
                        cup_strict = True
        assert cap_strict and cup_strict


class TestClosureOperators:
    def test_round_trip_n3(self):
        for t in enumerate_topologies(3):
            op = closure_operator_of(t)
            assert check_closure_axioms(op) is None
            assert topology_from_closure_operator(op) == t

    def test_exactly_29_valid_tables_n3(self):
        ops = enumerate_closure_operators(3)
        assert len(ops) == 29
        recon = {topology_from_closure_operator(op) for op in ops}
        assert recon == set(enumerate_topologies(3))
        # converse: each valid table is the closure table of its topology
        for op in ops:
            assert closure_operator_of(topology_from_closure_operator(op)) == op

    def test_355_valid_tables_n4(self):
        assert len(enumerate_closure_operators(4)) == 355

    def test_violations(self):
        op = SubsetOperator(1, [0b1, 0b1])
        assert check_closure_axioms(op)[0] == 'empty-fixed'
        with pytest.raises(KuratowskiViolation):
            topology_from_closure_operator(op)
        op = SubsetOperator(1, [0b0, 0b0])
        assert check_closure_axioms(op)[0] == 'extensive'
        # additive extension of {0}->{0,1}, {1}->{1,2}, {2}->{2} is not
        # idempotent: applying it twice to {0} reaches {0,1,2}
        sing = {1: 0b011, 2: 0b110, 4: 0b100}
        table = [0] * 8
        for a in range(1, 8):
            table[a] = sing[a & -a] | table[a & (a - 1)]
        op = SubsetOperator(3, table)
        assert check_closure_axioms(op)[0] == 'idempotent'
        with pytest.raises(KuratowskiViolation):
            topology_from_closure_operator(op)


class TestInteriorOperators:
    def test_round_trip_n3(self):
        for t in enumerate_topologies(3):
            op = interior_operator_of(t)
            assert check_interior_axioms(op) is None
            assert topology_from_interior_operator(op) == t

    def test_duality(self):
        for t in enumerate_topologies(3):
            cl = closure_operator_of(t)
            inte = interior_operator_of(t)
            assert cl.dual() == inte
            assert inte.dual() == cl
            assert cl.dual().dual() == cl

    def test_violation(self):
        op = SubsetOperator(1, [0, 0])
        assert check_interior_axioms(op)[0] == 'whole-fixed'
        with pytest.raises(InteriorAxiomViolation):
            topology_from_interior_operator(op)

    def test_dual_of_valid_closure_is_valid_interior_n2(self):
        for t in enumerate_topologies(2):
            assert check_interior_axioms(closure_operator_of(t).dual()) is None
