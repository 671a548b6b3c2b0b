import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mtcbound import corpus
from mtcbound.errors import Degenerate, InputError, SizeLimit
from mtcbound.modular import central_charge, validate_modular, verlinde
from mtcbound.pointed import (
    MetricGroup,
    abelian_double,
    lagrangian_subgroups,
    matches_modular_data,
    metric_modular_data,
    milgram_signature,
    subgroup_indicator,
    validate_metric,
)

from tests.helpers import brute_force_lagrangians, random_metric_group


def toric_mg():
    return corpus.toric_code().metric


def dsem_mg():
    return corpus.double_semion().metric


class TestStructure:
    def test_missing_element_rejected(self):
        with pytest.raises(InputError):
            MetricGroup(orders=(2,), q={(0,): Fraction(0)})

    def test_extra_element_rejected(self):
        with pytest.raises(InputError):
            MetricGroup(
                orders=(2,),
                q={(0,): Fraction(0), (1,): Fraction(0), (2,): Fraction(0)},
            )

    def test_values_reduced_mod_1(self):
        mg = MetricGroup(orders=(2,), q={(0,): Fraction(0), (1,): Fraction(5, 4)})
        assert mg.qval((1,)) == Fraction(1, 4)

    def test_json_round_trip(self):
        mg = dsem_mg()
        again = MetricGroup.from_json_dict(mg.to_json_dict())
        assert again.orders == mg.orders and again.q == mg.q

    def test_bad_json_key(self):
        with pytest.raises(InputError):
            MetricGroup.from_json_dict({"orders": [2], "q": {"x": "0"}})

    def test_bad_json_value(self):
        with pytest.raises(InputError):
            MetricGroup.from_json_dict({"orders": [2], "q": {"0": "1/4", "1": "a/b"}})


class TestValidation:
    def test_fixtures_pass(self):
        for name in ("trivial", "semion", "double_semion", "toric_code", "d_z3"):
            mg = corpus.build(name).metric
            report = validate_metric(mg)
            assert report.ok, (name, report.failed_names())

    def test_linear_form_is_not_quadratic(self):
        # q(x) = x/4 on Z4 fails q(2x) = 4 q(x)
        mg = MetricGroup(orders=(4,), q={(x,): Fraction(x, 4) for x in range(4)})
        report = validate_metric(mg)
        assert "q_is_quadratic" in report.failed_names()

    def test_non_descending_form_rejected(self):
        # q(e) = 1/3 on Z2: 2*2*(1/3) is not an integer
        mg = MetricGroup(orders=(2,), q={(0,): Fraction(0), (1,): Fraction(1, 3)})
        report = validate_metric(mg)
        assert "q_descends_to_quotient" in report.failed_names()

    def test_degenerate_form_flagged_and_raises(self):
        q = {a: Fraction(0) for a in product(range(2), range(2))}
        mg = MetricGroup(orders=(2, 2), q=q)
        assert "nondegenerate" in validate_metric(mg).failed_names()
        with pytest.raises(Degenerate):
            metric_modular_data(mg)
        with pytest.raises(Degenerate):
            milgram_signature(mg)


class TestModularBridge:
    def test_generated_data_validates(self):
        for name in ("semion", "toric_code", "double_semion", "d_z3"):
            md = metric_modular_data(corpus.build(name).metric)
            assert validate_modular(md).ok, name

    def test_verlinde_recovers_group_law(self):
        mg = dsem_mg()
        md = metric_modular_data(mg)
        expected = {
            (mg.index(a), mg.index(b), mg.index(mg.add(a, b))): 1
            for a in mg.elements
            for b in mg.elements
        }
        assert verlinde(md) == expected

    def test_matches_modular_data_rejects_tamper(self):
        mg = toric_mg()
        md = metric_modular_data(mg)
        t = list(md.t)
        t[3] = t[0]
        from mtcbound.modular import ModularData

        bad = ModularData(s=md.s, t=tuple(t), unit_index=md.unit_index, ring=md.ring)
        assert matches_modular_data(mg, md)
        assert not matches_modular_data(mg, bad)


class TestMilgram:
    def test_fixture_signatures(self):
        assert milgram_signature(corpus.semion().metric) == 1
        assert milgram_signature(toric_mg()) == 0
        assert milgram_signature(dsem_mg()) == 0

    def test_against_central_charge_on_random_groups(self):
        rng = random.Random(12345)
        for _ in range(25):
            mg = random_metric_group(rng, max_size=36)
            assert milgram_signature(mg) == central_charge(metric_modular_data(mg))

    @settings(max_examples=40, deadline=None)
    @given(
        a=st.integers(0, 15),
        n=st.sampled_from([2, 3, 4, 5, 7, 8]),
    )
    def test_cyclic_signatures_match(self, a, n):
        # q(x) = a x^2 / (2n) on Z_n, for whatever values of a keep it
        # a nondegenerate quadratic form
        q = {(x,): Fraction(a * x * x, 2 * n) % 1 for x in range(n)}
        mg = MetricGroup(orders=(n,), q=q)
        if not validate_metric(mg).ok:
            return
        assert milgram_signature(mg) == central_charge(metric_modular_data(mg))


class TestLagrangians:
    def test_counts_on_fixtures(self):
        assert lagrangian_subgroups(corpus.semion().metric) == []
        assert len(lagrangian_subgroups(toric_mg())) == 2
        assert len(lagrangian_subgroups(dsem_mg())) == 1
        assert len(lagrangian_subgroups(corpus.d_z3().metric)) == 2

    def test_toric_subgroups_are_the_two_order_two_lines(self):
        subs = lagrangian_subgroups(toric_mg())
        assert subs == [((0, 0), (0, 1)), ((0, 0), (1, 0))]
        assert [subgroup_indicator(toric_mg(), s) for s in subs] == [
            (1, 1, 0, 0),
            (1, 0, 1, 0),
        ]

    def test_double_semion_subgroup_is_the_diagonal(self):
        assert lagrangian_subgroups(dsem_mg()) == [((0, 0), (1, 1))]

    def test_brute_force_oracle_agrees(self):
        rng = random.Random(777)
        checked = 0
        while checked < 12:
            mg = random_metric_group(rng, max_size=16)
            assert lagrangian_subgroups(mg) == brute_force_lagrangians(mg)
            checked += 1

    def test_abelian_double_always_has_the_two_obvious_subgroups(self):
        for orders in ((2,), (3,), (4,), (2, 2)):
            mg = abelian_double(orders)
            subs = lagrangian_subgroups(mg)
            s = len(orders)
            zero = tuple(0 for _ in orders)
            g_side = tuple(sorted(g + zero for g in product(*(range(n) for n in orders))))
            chi_side = tuple(sorted(zero + c for c in product(*(range(n) for n in orders))))
            assert g_side in subs and chi_side in subs
            assert subs

    def test_size_cap(self):
        q = {a: Fraction(0) for a in product(*(range(2) for _ in range(13)))}
        mg = MetricGroup(orders=(2,) * 13, q=q)
        with pytest.raises(SizeLimit):
            lagrangian_subgroups(mg)

    def test_non_square_size_is_empty_fast(self):
        mg = MetricGroup(orders=(2,), q={(0,): Fraction(0), (1,): Fraction(1, 4)})
        assert lagrangian_subgroups(mg) == []
