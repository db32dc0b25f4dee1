"""Report assembly, canonical serialization, summaries, and overlays."""

import json

import pytest

from consentaudit import (
    Policy,
    REPORT_SCHEMA_VERSION,
    evidence_frame,
    least_effort_traverse,
    default_lexicon,
    overlay_svg,
    render_event_strip,
    run_audit,
    summarize_reports,
)
from helpers import co_present_page, dismiss, make_page, node

LEX = default_lexicon()


def test_run_audit_both_policies():
    report = run_audit(
        co_present_page(), policies=(Policy.POINTER, Policy.KEYBOARD)
    )
    assert report.source == "test:page"
    assert [r.policy for r in report.results] == [
        Policy.POINTER, Policy.KEYBOARD,
    ]
    for res in report.results:
        assert res.psi_by_profile.keys() == {"default"}
        assert res.signals is not None
        assert res.signals_error is None
    assert not report.censored


def test_report_document_shape():
    report = run_audit(co_present_page(), profiles=("default", "delay"))
    doc = report.to_dict()
    assert doc["schemaVersion"] == REPORT_SCHEMA_VERSION
    assert doc["config"]["policies"] == ["pointer"]
    assert doc["config"]["profiles"] == ["default", "delay"]
    assert doc["config"]["budget"]["maxInteractions"] == 25
    assert doc["config"]["timing"]["interactionHandlingS"] == 0.1
    assert doc["config"]["lexiconVersion"] == 1
    res = doc["results"][0]
    assert res["strip"] == "EV_ACTION"
    assert res["terminal"] == "ALTERNATIVE_REACHED"
    assert set(res["psiByProfile"]) == {"default", "delay"}
    assert res["components"]["censored"] is False


def test_canonical_json_byte_stable():
    snap = co_present_page()
    a = run_audit(snap, policies=(Policy.POINTER, Policy.KEYBOARD)).canonical_json()
    b = run_audit(snap, policies=(Policy.POINTER, Policy.KEYBOARD)).canonical_json()
    assert a == b
    assert a.endswith("\n")
    doc = json.loads(a)
    assert list(doc) == sorted(doc)


def test_evidence_frame_present_on_success():
    snap = co_present_page()
    trace = least_effort_traverse(snap, Policy.POINTER, LEX)
    frame = evidence_frame(trace, snap)
    assert frame is not None
    assert frame.node_id == "a03_reject"
    assert frame.pane_id == "pane1"
    assert frame.step_index == len(trace.events) - 1
    d = frame.to_dict()
    assert "firedDetectionReasons" in d
    assert d["scrollOffset"] == 0


def test_evidence_frame_absent_when_censored():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 340, 760, 240),
         node("a01_accept", "pane1", "button", 372, 440, 200, 50,
              "Accept all", effects=dismiss())]
    )
    report = run_audit(snap)
    assert report.censored
    res = report.results[0]
    assert res.evidence is None
    assert res.trace.censored
    assert render_event_strip(res.trace) == "[BUDGET_EXHAUSTED]"
    # the report still renders fully
    doc = report.to_dict()
    assert doc["results"][0]["evidence"] is None


def test_provenance_echoed():
    prov = {"kind": "CO_PRESENT", "breakpoint": "desktop", "itemId": "x_001"}
    doc = run_audit(co_present_page(), provenance=prov).to_dict()
    assert doc["provenance"] == prov


def test_summarize_reports_groups_conditions_and_archetypes():
    docs = []
    for kind, bp in (("CO_PRESENT", "desktop"), ("CO_PRESENT", "mobile"),
                     ("SCROLL_WALL", "desktop")):
        report = run_audit(
            co_present_page(),
            policies=(Policy.POINTER, Policy.KEYBOARD),
            provenance={"kind": kind, "breakpoint": bp},
        )
        docs.append(json.loads(report.canonical_json()))
    summary = summarize_reports(docs)
    assert summary["reportCount"] == 3
    conditions = {(c["breakpoint"], c["policy"]) for c in summary["conditions"]}
    assert conditions == {
        ("desktop", "pointer"), ("desktop", "keyboard"),
        ("mobile", "pointer"), ("mobile", "keyboard"),
    }
    kinds = [a["archetype"] for a in summary["archetypes"]]
    assert kinds == sorted(kinds)
    block = summary["archetypes"][0]["psi"]["default"]
    assert set(block) == {"median", "q1", "q3", "iqr", "n"}


def test_summarize_reports_requires_input():
    with pytest.raises(ValueError):
        summarize_reports([])


def test_overlay_svg_highlights_evidence():
    snap = co_present_page()
    trace = least_effort_traverse(snap, Policy.POINTER, LEX)
    svg = overlay_svg(snap, evidence_frame(trace, snap))
    assert svg.startswith("<svg ")
    assert svg.rstrip().endswith("</svg>")
    assert "Reject all" in svg
    assert "#c43c00" in svg  # evidence highlight


def test_overlay_svg_without_evidence_still_renders():
    snap = co_present_page()
    svg = overlay_svg(snap, None)
    assert svg.startswith("<svg ")
    assert "#c43c00" not in svg


def test_overlay_svg_escapes_labels():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 340, 760, 260),
         node("a01_accept", "pane1", "button", 372, 440, 200, 50,
              'Accept "all" & more <now>', effects=dismiss()),
         node("a02_reject", "pane1", "button", 612, 440, 120, 44,
              "Reject all", effects=dismiss())]
    )
    svg = overlay_svg(snap, None)
    assert "<now>" not in svg
    assert "&lt;now&gt;" in svg or "&amp;" in svg
