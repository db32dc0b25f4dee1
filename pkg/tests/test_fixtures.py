"""Bundled labeled corpus: integrity, labels, and golden stability."""

import pytest

from consentaudit import (
    ControlClass,
    Policy,
    compute_components,
    compute_psi,
    default_lexicon,
    detector_predictions,
    least_effort_traverse,
    load_fixture_corpus,
    named_profile,
    parse_snapshot,
    render_event_strip,
    serialize_snapshot,
)

LEX = default_lexicon()
CORPUS = load_fixture_corpus()
BY_ID = {f.fixture_id: f for f in CORPUS}


def test_corpus_count_and_unique_ids():
    assert len(CORPUS) == 60
    assert len(BY_ID) == 60


def test_corpus_spans_archetypes_and_edge_cases():
    archetypes = {f.archetype for f in CORPUS}
    assert {"co_present", "scroll_wall", "accordion", "multi_step",
            "handwritten"} <= archetypes
    # euphemistic gateways that the lexicon leaves unclassified
    assert "gotit_desktop" in BY_ID
    assert "evh_sheet_mobile" in BY_ID
    # disabled control
    disabled = BY_ID["disabled_sham_desktop"].snapshot.node("a03_reject")
    assert not disabled.enabled
    # focus traps
    assert any("trap" in f.fixture_id for f in CORPUS)
    # scrollable surfaces
    assert any(f.snapshot.surface.scrollable for f in CORPUS)


def test_every_fixture_round_trips():
    for f in CORPUS:
        text = serialize_snapshot(f.snapshot)
        assert serialize_snapshot(parse_snapshot(text)) == text


def test_labels_reference_real_initial_pane_controls():
    for f in CORPUS:
        initial = f.snapshot.initial_pane.id
        for node_id, label in f.labels.items():
            node = f.snapshot.node(node_id)
            assert node.pane_id == initial, (f.fixture_id, node_id)
            assert node.interactive, (f.fixture_id, node_id)
            assert ControlClass(label.control_class)


def test_golden_traces_match_engine():
    for f in CORPUS:
        for policy in (Policy.POINTER, Policy.KEYBOARD):
            expected = f.expected[policy.value]
            trace = least_effort_traverse(f.snapshot, policy, LEX)
            comps = compute_components(trace, f.snapshot, LEX)
            assert render_event_strip(trace) == expected.strip, (
                f.fixture_id, policy,
            )
            assert trace.terminal.value == expected.terminal
            assert comps.to_dict() == expected.components
            psi = compute_psi(comps, named_profile("default"))
            assert psi == pytest.approx(expected.psi_default, abs=1e-9)


def test_pinned_strips_for_published_examples():
    acc = BY_ID["acc_cal_desktop"].expected["pointer"]
    assert acc.strip == "EV_SCROLL -> EV_EXPAND -> EV_TOGGLE -> EV_ACTION"
    one_panel = BY_ID["acc_reveal1_desktop"].expected["pointer"]
    assert one_panel.strip == "EV_EXPAND -> EV_TOGGLE -> EV_ACTION"
    flat = BY_ID["ms_panes3_flat_desktop"].expected["pointer"]
    assert flat.strip == "EV_ACTION -> EV_ACTION -> EV_TOGGLE -> EV_ACTION"
    cp = BY_ID["cp_cal_desktop"].expected["pointer"]
    assert cp.strip == "EV_ACTION"


def test_censored_fixture_has_lower_bound_golden():
    f = BY_ID["censored_accept_only"]
    for policy in ("pointer", "keyboard"):
        exp = f.expected[policy]
        assert exp.terminal == "BUDGET_EXHAUSTED"
        assert exp.strip == "[BUDGET_EXHAUSTED]"
        assert exp.components["censored"] is True
        assert exp.psi_default == 0.0


def test_equal_policy_fixture():
    f = BY_ID["copresent_equal"]
    assert f.expected["pointer"].psi_default == pytest.approx(
        f.expected["keyboard"].psi_default
    )


def test_detector_predictions_shape():
    f = BY_ID["sham_reject_desktop"]
    preds = detector_predictions(f, lexicon=LEX)
    assert set(preds) == set(f.labels)
    # the sham divergence is by authored truth, not prediction noise
    assert preds["a03_reject"]["actionable"] is True
    assert f.labels["a03_reject"].actionable is False


def test_known_divergences_are_stable():
    clipped = BY_ID["clipped_reject_desktop"]
    preds = detector_predictions(clipped, lexicon=LEX)
    assert preds["a03_reject"]["visible"] is False
    assert clipped.labels["a03_reject"].visible is True

    occluded = BY_ID["occluded_reject_desktop"]
    preds = detector_predictions(occluded, lexicon=LEX)
    assert preds["a01_reject"]["visible"] is True
    assert occluded.labels["a01_reject"].visible is False

    icon = BY_ID["icon_reject_desktop"]
    preds = detector_predictions(icon, lexicon=LEX)
    assert preds["a05_x"]["actionable"] is False
    assert icon.labels["a05_x"].actionable is True


def test_detector_metrics_cleared_with_margin():
    tallies = {d: {"tp": 0, "fp": 0, "fn": 0, "tn": 0}
               for d in ("visible", "actionable")}
    for f in CORPUS:
        preds = detector_predictions(f, lexicon=LEX)
        for node_id, label in f.labels.items():
            for dim, truth in (("visible", label.visible),
                               ("actionable", label.actionable)):
                pred = preds[node_id][dim]
                key = ("tp" if truth else "fp") if pred else (
                    "fn" if truth else "tn")
                tallies[dim][key] += 1
    vis, act = tallies["visible"], tallies["actionable"]
    assert vis["tp"] / (vis["tp"] + vis["fp"]) >= 0.85
    assert vis["tp"] / (vis["tp"] + vis["fn"]) >= 0.80
    assert act["tp"] / (act["tp"] + act["fp"]) >= 0.80
    assert act["tp"] / (act["tp"] + act["fn"]) >= 0.75
