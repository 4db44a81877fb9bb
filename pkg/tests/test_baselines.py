import json
import random
import re

import pytest

from recourse_nlg import (
    Direction,
    ExplanationCase,
    FeatureRecord,
    NoChanges,
    OutcomeLabels,
    PredictedOutcome,
    ValueKind,
    VariantPolicy,
    assemble_explanation,
    extract_changes,
    generate_basexai,
    generate_bxai,
    generate_gbxai,
    render_text,
    spearman_rho,
)

from engine_helpers import random_case_and_taxonomy

OUTCOMES = OutcomeLabels(
    desired="accepted",
    undesired="rejected",
    desired_state_phrase="an accepted application",
    undesired_state_phrase="a rejected application",
)


def _case(features):
    return ExplanationCase(
        dataset_id="demo",
        features=tuple(features),
        outcomes=OUTCOMES,
        predicted_outcome=PredictedOutcome.UNDESIRED,
    )


def _feature(name, query, cf, weight, kind=ValueKind.NUMERIC):
    return FeatureRecord(
        name=name, kind=kind, query_value=query, cf_value=cf, attribution=weight
    )


class TestBxai:
    def test_orders_by_attribution_alone(self):
        case = _case(
            [
                _feature("low", "1", "2", 0.1),
                _feature("high", "3", "4", -0.9),
            ]
        )
        explanation = generate_bxai(case)
        assert [item.sentence.feature_name for item in explanation.body] == ["high", "low"]

    def test_heart_includes_action_on_immutable_feature(self, cases, taxonomies):
        explanation = generate_bxai(cases["heart"], taxonomy=taxonomies["heart"])
        texts = [item.sentence.text for item in explanation.body]
        age_sentences = [text for text in texts if " age " in f" {text} "]
        assert age_sentences and re.fullmatch(
            r"(decrease|reduce) age to 33\.0", age_sentences[0]
        )
        assert taxonomies["heart"].assignments["age"].is_immutable

    def test_rank_correlation_with_weights_is_one(self, cases, taxonomies):
        for dataset in ("heart", "student", "credit"):
            explanation = generate_bxai(cases[dataset])
            positions = list(range(len(explanation.body)))
            weights = [-item.sentence.rank_weight for item in explanation.body]
            assert spearman_rho(positions, weights).rho == pytest.approx(1.0, abs=1e-12)

    def test_zero_changes(self):
        case = _case([_feature("same", "1", "1", 0.4)])
        with pytest.raises(NoChanges):
            generate_bxai(case)

    def test_flat_text_rendering(self, cases, taxonomies):
        text = render_text(generate_bxai(cases["student"], taxonomy=taxonomies["student"]))
        body_line = text.splitlines()[1]
        assert " then " in body_line
        assert body_line.endswith(".")


class TestGbxai:
    def test_two_direction_groups_aggregate(self):
        case = _case(
            [
                _feature("f_one", "1", "5", 0.9),
                _feature("f_two", "9", "2", -0.5),
                _feature("f_three", "1", "7", 0.2),
            ]
        )
        explanation = generate_gbxai(case)
        texts = [item.sentence.text for item in explanation.body]
        assert len(texts) == 2
        assert re.fullmatch(r"(increase|improve|raise) f one & f three to 5 & 7", texts[0])
        assert re.fullmatch(r"(decrease|reduce) f two to 2", texts[1])

    def test_single_direction_single_sentence(self):
        case = _case(
            [
                _feature("a", "1", "5", 0.9),
                _feature("b", "1", "7", 0.2),
            ]
        )
        explanation = generate_gbxai(case)
        assert len(explanation.body) == 1

    def test_group_order_matches_max_weight_oracle(self):
        rng = random.Random(20240901)
        for _ in range(200):
            case, _ = random_case_and_taxonomy(rng, distinct_weights=True)
            explanation = generate_gbxai(case)
            changed = [change for change in extract_changes(case) if change.changed]
            expected_max = {}
            for change in changed:
                weight = abs(change.record.attribution)
                key = change.direction
                expected_max[key] = max(expected_max.get(key, 0.0), weight)
            got_weights = [item.sentence.rank_weight for item in explanation.body]
            assert got_weights == sorted(expected_max.values(), reverse=True)

    def test_directions_never_interleave(self):
        rng = random.Random(7)
        for _ in range(100):
            case, _ = random_case_and_taxonomy(rng)
            explanation = generate_gbxai(case)
            directions = []
            changed = {c.record.name: c.direction for c in extract_changes(case) if c.changed}
            for item in explanation.body:
                names = item.sentence.feature_name.split(",")
                group_directions = {changed[name] for name in names}
                assert len(group_directions) == 1
                directions.append(group_directions.pop())
            assert len(directions) == len(set(directions))


class TestBasexai:
    def test_prologue_counts_per_dataset(self, cases, taxonomies):
        expected = {"heart": 7, "credit": 5, "student": 4}
        for dataset, count in expected.items():
            explanation = generate_basexai(cases[dataset], taxonomies[dataset])
            assert explanation.actionable_count == count
            assert str(count) in explanation.prologue

    def test_every_output_contains_action_on_immutable_feature(self, cases, taxonomies):
        for dataset in ("heart", "student", "credit"):
            explanation = generate_basexai(cases[dataset], taxonomies[dataset])
            assignments = taxonomies[dataset].assignments
            immutable_numbered = [
                item
                for item in explanation.body
                if item.ordinal is not None
                and assignments.get(item.sentence.feature_name) is not None
                and assignments[item.sentence.feature_name].is_immutable
            ]
            assert immutable_numbered, dataset

    def test_count_strictly_exceeds_taxonomy_aware_count(self, cases, taxonomies):
        for dataset in ("heart", "student", "credit"):
            base = generate_basexai(cases[dataset], taxonomies[dataset])
            guided = assemble_explanation(cases[dataset], taxonomies[dataset])
            assert base.actionable_count > guided.actionable_count

    def test_all_mutable_case_matches_taxonomy_aware_body(self):
        from recourse_nlg.taxonomy import ActionabilityCategory, TaxonomyConfig

        case = _case(
            [
                _feature("first", "1", "5", 0.9),
                _feature("second", "9", "2", -0.5),
            ]
        )
        taxonomy = TaxonomyConfig(
            dataset_id="demo",
            assignments={
                "first": ActionabilityCategory.MUTABLE_DIRECTLY,
                "second": ActionabilityCategory.MUTABLE_INDIRECTLY,
            },
            prologue_template="Change {COUNT} attributes.",
            epilogue="Bye.",
        )
        seed = 13
        base = generate_basexai(
            case, taxonomy, seed=seed, policy=VariantPolicy.ALWAYS_CONCISE
        )
        guided = assemble_explanation(
            case, taxonomy, seed=seed, policy=VariantPolicy.ALWAYS_CONCISE
        )
        assert base.body == guided.body

    def test_rendered_like_taxonomy_aware_format(self, cases, taxonomies):
        text = render_text(generate_basexai(cases["student"], taxonomies["student"], seed=0))
        lines = text.splitlines()
        assert lines[1].startswith("1), ")
        assert lines[-1] == "Good luck with your results!"

    def test_json_round_trip(self, cases, taxonomies):
        from recourse_nlg import render_json

        document = json.loads(render_json(generate_basexai(cases["heart"], taxonomies["heart"])))
        assert document["style"] == "base-xai"
        assert all(sentence["ordinal"] for sentence in document["sentences"])
