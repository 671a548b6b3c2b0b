import json
from fractions import Fraction
from itertools import product

import pytest

from mtcbound import corpus
from mtcbound.errors import InputError, SearchBudgetExceeded
from mtcbound.modular import central_charge, double
from mtcbound.obstruction import (
    ObstructionReport,
    candidate_search,
    canonical_double_candidate,
    central_charge_gate,
    fusion_inequality_holds,
    search_budget,
    verdict,
)
from mtcbound.pointed import (
    MetricGroup,
    lagrangian_subgroups,
    metric_modular_data,
    subgroup_indicator,
)


class TestGate:
    def test_semion_fails_with_c_1(self):
        assert central_charge_gate(corpus.semion().modular) == (False, Fraction(1))

    def test_ising_fails_with_c_half(self):
        assert central_charge_gate(corpus.ising().modular) == (False, Fraction(1, 2))

    def test_toric_passes(self):
        passed, c = central_charge_gate(corpus.toric_code().modular)
        assert passed and c == 0

    def test_gated_search_is_empty(self):
        assert candidate_search(corpus.semion().modular) == []
        assert candidate_search(corpus.fibonacci().modular, use_fusion_filter=False) == []


class TestSearch:
    def test_toric_candidates_both_filter_states(self):
        md = corpus.toric_code().modular
        expected = [(1, 0, 1, 0), (1, 1, 0, 0)]
        assert candidate_search(md, use_fusion_filter=False) == expected
        assert candidate_search(md, use_fusion_filter=True) == expected

    def test_double_fibonacci_has_only_the_diagonal(self):
        fib = corpus.fibonacci().modular
        found = candidate_search(double(fib), use_fusion_filter=False)
        assert found == [canonical_double_candidate(fib)] == [(1, 0, 0, 1)]

    def test_double_ising_filter_drops_the_fake(self):
        ising = corpus.ising().modular
        md = double(ising)
        diag = canonical_double_candidate(ising)
        off = candidate_search(md, use_fusion_filter=False)
        on = candidate_search(md, use_fusion_filter=True)
        assert off == sorted([diag, (1, 0, 0, 0, 3, 0, 0, 0, 0)])
        assert on == [diag]

    def test_max_mult_zero_starves_the_search(self):
        md = corpus.toric_code().modular
        # unit keeps multiplicity 1 by definition; everything else is capped
        assert candidate_search(md, use_fusion_filter=False, max_mult=0) == []

    def test_budget_is_enforced(self):
        md = double(corpus.ising().modular)
        with pytest.raises(SearchBudgetExceeded):
            candidate_search(md, budget=3)

    def test_budget_env_parsing(self, monkeypatch):
        monkeypatch.setenv("MTC_SEARCH_BUDGET", "123")
        assert search_budget() == 123
        monkeypatch.setenv("MTC_SEARCH_BUDGET", "zero")
        with pytest.raises(InputError):
            search_budget()
        monkeypatch.setenv("MTC_SEARCH_BUDGET", "-5")
        with pytest.raises(InputError):
            search_budget()
        monkeypatch.delenv("MTC_SEARCH_BUDGET")
        assert search_budget() == 10**8


class TestCanonicalCandidate:
    def test_shapes(self):
        assert canonical_double_candidate(corpus.trivial().modular) == (1,)
        fib = corpus.fibonacci().modular
        assert canonical_double_candidate(fib) == (1, 0, 0, 1)

    def test_member_of_search_output_filter_on_and_off(self):
        for name in ("trivial", "semion", "double_semion", "ising", "fibonacci"):
            base = corpus.build(name).modular
            diag = canonical_double_candidate(base)
            dbl = double(base)
            assert diag in candidate_search(dbl, use_fusion_filter=False), name
            assert diag in candidate_search(dbl, use_fusion_filter=True), name


class TestPointedCrossOracle:
    def test_toric_candidates_are_subgroup_indicators(self):
        mg = corpus.toric_code().metric
        md = metric_modular_data(mg)
        subs = lagrangian_subgroups(mg)
        indicators = sorted(subgroup_indicator(mg, s) for s in subs)
        assert candidate_search(md, use_fusion_filter=False) == indicators

    def test_filter_off_count_can_exceed_the_subgroup_count(self):
        # Z4 x Z4 with q = (x^2 - y^2)/8: the gate passes (signature 0)
        # and the element (2,2) is isotropic with (2,2)+(2,2) = 0, so
        # multiplicity 3 on it satisfies every multiplicity-level
        # condition without any order-4 isotropic subgroup behind it.
        q = {
            (x, y): Fraction(x * x - y * y, 8) % 1
            for x, y in product(range(4), range(4))
        }
        mg = MetricGroup(orders=(4, 4), q=q)
        md = metric_modular_data(mg)
        assert central_charge(md) == 0
        subs = lagrangian_subgroups(mg)
        off = candidate_search(md, use_fusion_filter=False)
        on = candidate_search(md, use_fusion_filter=True)
        assert len(subs) == 2
        assert len(off) == 3
        assert sorted(subgroup_indicator(mg, s) for s in subs) == on

    def test_filter_on_matches_subgroups_on_small_pointed_data(self):
        # with the fusion filter the support is forced to be an
        # isotropic subgroup with multiplicities 1
        import random

        from tests.helpers import random_metric_group

        rng = random.Random(2024)
        for _ in range(10):
            mg = random_metric_group(rng, max_size=36)
            md = metric_modular_data(mg)
            if central_charge(md) != 0:
                continue
            expected = sorted(
                subgroup_indicator(mg, s) for s in lagrangian_subgroups(mg)
            )
            assert candidate_search(md, use_fusion_filter=True) == expected


class TestVerdict:
    def test_fibonacci_no_boundary(self):
        report = verdict(corpus.fibonacci().modular)
        assert report.verdict == "NoBoundary_CentralCharge"
        assert report.central_charge == Fraction(14, 5)
        assert report.exact and not report.candidates

    def test_toric_with_hint_gives_exact_boundaries(self):
        spec = corpus.toric_code()
        report = verdict(spec.modular, pointed_hint=spec.metric)
        assert report.verdict == "ExactBoundaries"
        assert len(report.subgroups) == 2
        assert report.candidates == ((1, 1, 0, 0), (1, 0, 1, 0))
        assert report.exact

    def test_inconsistent_hint_is_rejected(self):
        spec = corpus.toric_code()
        with pytest.raises(InputError):
            verdict(spec.modular, pointed_hint=corpus.double_semion().metric)

    def test_no_candidate_verdict_on_z5(self):
        # q(x) = x^2/5 on Z5 has signature 0, so the gate passes, but
        # |A| = 5 is not a perfect square and no multiplicity vector
        # sums to sqrt(5)
        q = {(x,): Fraction(x * x, 5) % 1 for x in range(5)}
        md = metric_modular_data(MetricGroup(orders=(5,), q=q))
        report = verdict(md)
        assert report.verdict == "NoBoundary_NoCandidate"
        assert report.central_charge == 0
        assert report.exact

    def test_double_ising_candidates_found(self):
        report = verdict(double(corpus.ising().modular))
        assert report.verdict == "CandidatesFound"
        assert not report.exact
        assert len(report.candidates) == 2
        assert report.filtered_candidates == (
            canonical_double_candidate(corpus.ising().modular),
        )

    def test_caveat_always_present(self):
        for report in (
            verdict(corpus.semion().modular),
            verdict(double(corpus.ising().modular)),
        ):
            assert any("mod 8" in c for c in report.caveats)
            assert any("E8" in c for c in report.caveats)

    def test_two_tier_conditions_are_labeled(self):
        report = verdict(double(corpus.ising().modular))
        assert "theorem_level" in report.conditions
        assert "standard_theory_level" in report.conditions
        assert any("central charge" in c for c in report.conditions["theorem_level"])

    def test_reports_are_deterministic(self):
        md = double(corpus.ising().modular)
        a = json.dumps(verdict(md).to_json_dict(), sort_keys=True)
        b = json.dumps(verdict(md).to_json_dict(), sort_keys=True)
        assert a == b


class TestFusionInequality:
    def test_accepts_group_supports(self):
        md = corpus.toric_code().modular
        assert fusion_inequality_holds(md, (1, 1, 0, 0))

    def test_rejects_overweight_multiplicity(self):
        md = corpus.toric_code().modular
        # n_e = 2 forces n_e * n_e = 4 > N_ee^1 * n_1 = 1
        assert not fusion_inequality_holds(md, (1, 2, 0, 0))
