from fractions import Fraction

import pytest

from stonework.contrast import (
    agreement_neighborhood,
    build_contrast,
    contrast_report,
    obstruction_witness,
    rna_certificate,
    table_digest,
)
from stonework.errors import NoWitness, ResourceLimit
from stonework.ultra import check_nonexpansive, nonexpansive_counterexample


def test_smallest_instance_table_written_out():
    inst = build_contrast(1)
    assert inst.carrier_size == 3
    # labels: 0 = tuple (0), 1 = tuple (1) = identity, 2 = segment element 0
    assert inst.monoid.identity == 1
    assert inst.monoid.table == ((0, 0, 2), (0, 1, 2), (2, 2, 2))


def test_cube_metric_first_difference_rule():
    inst = build_contrast(3)
    # tuples (1,0,1) and (1,1,1): first difference at coordinate 2
    a = 0b101
    b = 0b111
    assert inst.metric.d(a, b) == Fraction(1, 2)
    # differing already at coordinate 1
    assert inst.metric.d(0b110, 0b111) == Fraction(1, 1)
    # cube against segment and segment against segment sit at distance 1
    assert inst.metric.d(a, inst.segment_label(2)) == 1
    assert inst.metric.d(inst.segment_label(0), inst.segment_label(1)) == 1


def test_identity_and_sink_behaviour():
    inst = build_contrast(2)
    m = inst.monoid
    for x in range(inst.carrier_size):
        assert m.mul(inst.identity, x) == x
        assert m.mul(x, inst.identity) == x
    for b in range(inst.carrier_size):
        assert m.mul(inst.sink, b) == inst.sink  # segment absorbs on the left


def test_certificate_left_ok_and_right_witness():
    for k in (1, 2, 3):
        inst = build_contrast(k)
        cert = rna_certificate(inst)
        assert cert.ok
        assert check_nonexpansive(inst.monoid, inst.metric, "left")
        if k == 1:
            # every distance is 0 or 1, so nothing can expand
            assert cert.right_witness is None
        else:
            x, y, s = cert.right_witness
            d = inst.metric
            m = inst.monoid
            assert d.d(m.mul(x, s), m.mul(y, s)) > d.d(x, y)


def test_identity_balls_are_submonoids():
    # left-sided ball closure at the identity, for every occurring radius
    from stonework.finmon import is_submonoid

    for k in (1, 2, 3):
        inst = build_contrast(k)
        assert nonexpansive_counterexample(inst.monoid, inst.metric, "left") is None
        for r in [v for v in inst.metric.values() if v > 0]:
            ball = inst.metric.ball(inst.monoid.identity, r)
            assert is_submonoid(inst.monoid, ball)


def test_agreement_neighborhoods():
    inst = build_contrast(3)
    assert len(agreement_neighborhood(inst, 0)) == 8
    assert len(agreement_neighborhood(inst, 2)) == 2
    assert agreement_neighborhood(inst, 3) == [inst.identity]


def test_obstruction_witnesses_all_depths():
    for k in (1, 2, 4, 6):
        inst = build_contrast(k)
        for j in range(k):
            u, nat = obstruction_witness(inst, j)
            assert u in agreement_neighborhood(inst, j)
            assert inst.cube_size <= nat < inst.cube_size + k
            assert inst.monoid.mul(u, nat) == inst.sink
        with pytest.raises(NoWitness):
            obstruction_witness(inst, k)


def test_obstruction_witness_recipe_example():
    # depth 2 at truncation 4: identity with coordinate 4 cleared,
    # multiplied by the segment element reading coordinate 4
    inst = build_contrast(4)
    u, nat = obstruction_witness(inst, 2)
    assert u == inst.identity & ~(1 << 2)
    assert nat == inst.segment_label(2)
    assert inst.monoid.mul(u, nat) == inst.sink


def test_report_shape_and_digest_stability():
    report = contrast_report(2)
    assert report["carrier_size"] == 6
    assert report["certificate"]["left_nonexpansive"] is True
    assert report["certificate"]["right_counterexample"] is not None
    assert len(report["obstruction_witnesses"]) == 2
    inst = build_contrast(2)
    assert report["table_sha256"] == table_digest(inst.monoid)


def test_resource_limit_on_large_truncation():
    with pytest.raises(ResourceLimit):
        build_contrast(8)
    with pytest.raises(ValueError):
        build_contrast(0)
