#!/usr/bin/env python3
"""Builds the labeled fixture corpus bundled with the package.

Regenerates the fixture snapshots (archetype-generator output plus
handwritten pages), derives ground-truth labels, runs the engine under
both policies to freeze expected strips and component vectors, verifies
the hand-derived expectations, and writes everything under
src/consentaudit/fixtures/. Deterministic: rerunning produces identical
bytes.

Ground-truth semantics for the labels:

* visible: the control is effectively visible in the first viewport
  before any interaction. A control clipped by a few pixels still
  counts as visible to a person; one behind an authored backdrop does
  not, even though its geometry alone looks fine. Those judgments are
  recorded here and are deliberately not all reproducible from
  geometry, which is what the detector evaluation measures.
* actionable: one interaction from the initial state gives the user a
  genuine, recognizable non-accepting choice. The control must both
  present itself as such a choice (a euphemistic or unnamed control
  does not) and actually deliver it (a sham reject does not).

Run from the repository root:

    python3 tools/build_fixtures.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from consentaudit import (  # noqa: E402
    ArchetypeKind,
    ArchetypeParams,
    Policy,
    canonical_json,
    default_lexicon,
    generate_archetype,
    render_event_strip,
    run_audit,
    snapshot_from_dict,
    snapshot_to_dict,
)

OUT_DIR = ROOT / "src" / "consentaudit" / "fixtures"

LEX = default_lexicon()

# ---------------------------------------------------------------------------
# helpers for handwritten pages


def n(nid, pane, role, x, y, w, h, label=None, **kw):
    d = {
        "id": nid,
        "paneId": pane,
        "role": role,
        "bounds": {"x": x, "y": y, "w": w, "h": h},
    }
    if label is not None:
        d["label"] = label
    d.update(kw)
    return d


def page(source, note, nodes, *, bp="desktop", panes=("pane1",),
         scrollable=False, scroll_height=None, evh=None, persistent=()):
    width, height = (1440, 900) if bp == "desktop" else (390, 844)
    doc = {
        "version": 1,
        "meta": {
            "source": source,
            "note": note,
            "breakpoint": bp,
            "persistent": list(persistent),
        },
        "viewport": {"width": width, "height": height, "name": bp},
        "surface": {
            "rootNodeId": nodes[0]["id"],
            "scrollable": scrollable,
            "scrollHeight": scroll_height if scroll_height is not None else height,
        },
        "panes": [{"id": p, "initial": i == 0} for i, p in enumerate(panes)],
        "nodes": nodes,
    }
    if evh is not None:
        doc["surface"]["effectiveViewportHeight"] = evh
    return doc


def settings_pane(pane="pane2", x=372, w=696):
    """Minimal granular pane shared by handwritten pages that route
    through a gateway: toggles with short rationales plus a save."""
    return [
        n(f"{pane}_00_back", pane, "button", x, 40, 80, 32, "Back"),
        n(f"{pane}_10_toggle", pane, "toggle", x, 180, 52, 32, "Analytics cookies",
          effects=[{"kind": "toggleState", "target": f"{pane}_10_toggle"}]),
        n(f"{pane}_11_text", pane, "text", x + 60, 180, w - 64, 32,
          "Helps us measure how pages perform.", rationaleFor=f"{pane}_10_toggle"),
        n(f"{pane}_30_save", pane, "button", x, 280, 160, 44, "Save choices",
          emphasisClass="secondary",
          effects=[{"kind": "dismiss", "target": pane}]),
    ]


def L(visible, actionable, control_class):
    return {
        "visible": visible,
        "actionable": actionable,
        "controlClass": control_class,
    }


# ---------------------------------------------------------------------------
# construction-truth labels for generator fixtures

_CLASS_BY_HINT = (
    ("_accept", "accept"),
    ("_reject", "reject"),
    ("_gateway", "settings"),
    ("_save", "save"),
    ("_footer", "reversibility"),
    ("_continue", "settings"),
    ("_sec", "settings"),
    ("_advanced", "settings"),
    ("_back", "unknown"),
    ("_decoy", "unknown"),
    ("_toggle", "unknown"),
)


def _hint_class(node_id: str) -> str:
    for hint, cls in _CLASS_BY_HINT:
        if hint in node_id:
            return cls
    return "unknown"


def generator_truth(snapshot) -> dict:
    """Labels for a clean generator fixture. The generator hides nothing
    from the rules, so construction truth coincides with rule output:
    visible means rendered and fully inside the first viewport, and the
    only actionable-in-one control is a visible enabled genuine reject
    (generator gateways are euphemistically labeled by design and do
    not present themselves as a choice)."""
    from consentaudit import visible_in_viewport

    labels = {}
    initial = snapshot.initial_pane.id
    for node in snapshot.pane_nodes(initial):
        if not node.interactive:
            continue
        vis = node.visible and visible_in_viewport(node, 0, snapshot)
        act = (
            vis
            and node.enabled
            and "_reject" in node.id
            and bool(node.effects)
        )
        labels[node.id] = L(vis, act, _hint_class(node.id))
    return labels


# ---------------------------------------------------------------------------
# fixture inventory

P = ArchetypeParams

GENERATOR_FIXTURES = [
    # (fixture id, kind, params, note)
    ("cp_cal_desktop", ArchetypeKind.CO_PRESENT,
     P(animation_ms_per_gate=770),
     "calibrated co-present: decline feedback is the only timed element"),
    ("cp_cal_mobile", ArchetypeKind.CO_PRESENT,
     P(animation_ms_per_gate=770, breakpoint="mobile"),
     "calibrated co-present at the mobile breakpoint"),
    ("cp_default_desktop", ArchetypeKind.CO_PRESENT, P(),
     "co-present with default decline feedback"),
    ("cp_default_mobile", ArchetypeKind.CO_PRESENT, P(breakpoint="mobile"),
     "co-present, mobile stacked layout"),
    ("cp_anim0_desktop", ArchetypeKind.CO_PRESENT, P(animation_ms_per_gate=0),
     "co-present with instant decline: the PSI floor"),
    ("cp_trap_desktop", ArchetypeKind.CO_PRESENT, P(focus_trap=True),
     "co-present with a roving decoy cluster between accept and reject"),
    ("sw_cal_desktop", ArchetypeKind.SCROLL_WALL, P(scroll_depth_vh=2.12),
     "calibrated scroll wall: reject 2.12 viewports deep"),
    ("sw_cal_mobile", ArchetypeKind.SCROLL_WALL,
     P(scroll_depth_vh=2.12, breakpoint="mobile"),
     "calibrated scroll wall at the mobile breakpoint"),
    ("sw_default_desktop", ArchetypeKind.SCROLL_WALL, P(),
     "scroll wall with the default depth"),
    ("sw_default_mobile", ArchetypeKind.SCROLL_WALL, P(breakpoint="mobile"),
     "scroll wall, mobile"),
    ("sw_shallow_desktop", ArchetypeKind.SCROLL_WALL, P(scroll_depth_vh=1.2),
     "shallow scroll wall: just past one viewport"),
    ("sw_deep_desktop", ArchetypeKind.SCROLL_WALL, P(scroll_depth_vh=2.8),
     "deep scroll wall"),
    ("sw_trap_desktop", ArchetypeKind.SCROLL_WALL, P(focus_trap=True),
     "scroll wall with a decoy cluster in the tab ring"),
    ("acc_cal_desktop", ArchetypeKind.ACCORDION,
     P(reveal_count=2, animation_ms_per_gate=210),
     "calibrated accordion: one scroll, one gated expand, toggle, save"),
    ("acc_cal_mobile", ArchetypeKind.ACCORDION,
     P(reveal_count=2, animation_ms_per_gate=210, breakpoint="mobile"),
     "calibrated accordion at the mobile breakpoint"),
    ("acc_default_desktop", ArchetypeKind.ACCORDION, P(),
     "accordion with default gate duration"),
    ("acc_default_mobile", ArchetypeKind.ACCORDION, P(breakpoint="mobile"),
     "accordion, mobile"),
    ("acc_reveal1_desktop", ArchetypeKind.ACCORDION, P(reveal_count=1),
     "single-panel accordion: expand, toggle, save without scrolling"),
    ("acc_reveal3_desktop", ArchetypeKind.ACCORDION, P(reveal_count=3),
     "split accordion: toggles and save behind separate reveals"),
    ("acc_reveal3_mobile", ArchetypeKind.ACCORDION,
     P(reveal_count=3, breakpoint="mobile"),
     "split accordion, mobile"),
    ("acc_trap_desktop", ArchetypeKind.ACCORDION,
     P(reveal_count=2, focus_trap=True),
     "accordion with a decoy cluster before the panels"),
    ("ms_cal_desktop", ArchetypeKind.MULTI_STEP,
     P(pane_count=2, scroll_depth_vh=1.1, animation_ms_per_gate=175),
     "calibrated two-pane flow: gated continue, scroll to save"),
    ("ms_cal_mobile", ArchetypeKind.MULTI_STEP,
     P(pane_count=2, scroll_depth_vh=1.1, animation_ms_per_gate=175,
       breakpoint="mobile"),
     "calibrated two-pane flow at the mobile breakpoint"),
    ("ms_default_desktop", ArchetypeKind.MULTI_STEP, P(),
     "three-pane flow with default gates"),
    ("ms_default_mobile", ArchetypeKind.MULTI_STEP, P(breakpoint="mobile"),
     "three-pane flow, mobile"),
    ("ms_panes3_flat_desktop", ArchetypeKind.MULTI_STEP,
     P(pane_count=3, scroll_depth_vh=1.0),
     "three panes with the save control above the fold"),
    ("ms_panes4_desktop", ArchetypeKind.MULTI_STEP,
     P(pane_count=4, scroll_depth_vh=1.3),
     "four-pane flow"),
    ("ms_panes4_mobile", ArchetypeKind.MULTI_STEP,
     P(pane_count=4, scroll_depth_vh=1.3, breakpoint="mobile"),
     "four-pane flow, mobile"),
    ("ms_trap_desktop", ArchetypeKind.MULTI_STEP,
     P(pane_count=2, scroll_depth_vh=1.1, focus_trap=True),
     "two-pane flow with a decoy cluster on the final pane"),
    ("ms_trap_mobile", ArchetypeKind.MULTI_STEP,
     P(pane_count=3, scroll_depth_vh=1.2, focus_trap=True,
       breakpoint="mobile"),
     "three-pane flow with a decoy cluster, mobile"),
]


def special_fixtures():
    """Handwritten pages: divergence cases and edge-semantics demos.

    Returns (fixture id, doc, labels, note) tuples.
    """
    out = []

    # -- equal policy cost: the reject is the first tab stop
    doc = page(
        "handwritten:copresent_equal",
        "reject is both adjacent for the pointer and the first tab stop, "
        "so both policies cost one interaction",
        [
            n("a00_root", "pane1", "container", 340, 300, 760, 300),
            n("a01_reject", "pane1", "button", 372, 400, 200, 50, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a02_accept", "pane1", "button", 652, 400, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_body", "pane1", "text", 372, 330, 656, 40,
              "We and our partners store and access information on your device."),
        ],
    )
    out.append((
        "copresent_equal", doc,
        {"a01_reject": L(True, True, "reject"),
         "a02_accept": L(True, False, "accept")},
        "pointer and keyboard land identical traces",
    ))

    # -- no alternative anywhere: the audit censors
    doc = page(
        "handwritten:censored_accept_only",
        "accept-only banner: no reject, settings, or save exists, so the "
        "traversal exhausts its budget and the components are lower bounds",
        [
            n("a00_root", "pane1", "container", 340, 340, 760, 240),
            n("a01_title", "pane1", "text", 372, 370, 656, 36,
              "We value your privacy"),
            n("a02_body", "pane1", "text", 372, 420, 656, 60,
              "By continuing you agree to our use of cookies."),
            n("a03_accept", "pane1", "button", 372, 500, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
    )
    out.append((
        "censored_accept_only", doc,
        {"a03_accept": L(True, False, "accept")},
        "both policies censor with empty traces",
    ))

    # -- accept plus an informational link only: still censored, but the
    # prominence comparison has a (hopeless) alternative to measure
    doc = page(
        "handwritten:info_only",
        "accept with a policy link: the link is informational, not a "
        "choice, so the audit still censors",
        [
            n("a00_root", "pane1", "container", 340, 340, 760, 260),
            n("a01_body", "pane1", "text", 372, 370, 656, 60,
              "We use cookies to improve your experience."),
            n("a02_accept", "pane1", "button", 372, 450, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_policy", "pane1", "link", 372, 530, 120, 20,
              "Privacy policy"),
        ],
    )
    out.append((
        "info_only_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_policy": L(True, False, "informational")},
        "informational links do not end the traversal",
    ))

    # -- clipped reject: a person treats six hidden pixels as visible
    for fid, bp, vh in (("clipped_reject_desktop", "desktop", 900),
                        ("clipped_reject_mobile", "mobile", 844)):
        x = 372 if bp == "desktop" else 24
        w = 200 if bp == "desktop" else 342
        doc = page(
            f"handwritten:{fid}",
            "the reject sits six pixels below the fold; labeled visible and "
            "actionable because a person treats it as on-screen, while the "
            "full-containment rule does not",
            [
                n("a00_root", "pane1", "container", max(0, x - 32), 0,
                  w + 64 if bp == "desktop" else 390, vh + 10),
                n("a01_body", "pane1", "text", x, 40, w, 60,
                  "We and our partners process data to provide ads."),
                n("a02_accept", "pane1", "button", x, 140, w, 50, "Accept all",
                  emphasisClass="primary",
                  effects=[{"kind": "dismiss", "target": "pane1"}]),
                n("a03_reject", "pane1", "button", x, vh - 44, w, 50,
                  "Reject all",
                  effects=[{"kind": "dismiss", "target": "pane1"}]),
            ],
            bp=bp, scrollable=True, scroll_height=vh + 10,
        )
        out.append((
            fid, doc,
            {"a02_accept": L(True, False, "accept"),
             "a03_reject": L(True, True, "reject")},
            "visibility and actionability false negatives by design",
        ))

    # -- occluded controls: geometry alone says visible, the page says no
    doc = page(
        "handwritten:occluded_reject",
        "the reject belongs to the page behind the modal; the backdrop "
        "covers it, so it is labeled neither visible nor actionable even "
        "though its geometry falls inside the first viewport",
        [
            n("a00_root", "pane1", "container", 0, 0, 1440, 900),
            n("a01_reject", "pane1", "button", 372, 500, 120, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a02_backdrop", "pane1", "container", 300, 80, 840, 760),
            n("a03_title", "pane1", "text", 372, 120, 696, 36,
              "Before you continue", parentId="a02_backdrop"),
            n("a04_accept", "pane1", "button", 372, 200, 200, 50, "Accept all",
              emphasisClass="primary", parentId="a02_backdrop",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
    )
    out.append((
        "occluded_reject_desktop", doc,
        {"a01_reject": L(False, False, "reject"),
         "a04_accept": L(True, False, "accept")},
        "visibility and actionability false positives by design",
    ))

    doc = page(
        "handwritten:occluded_gateway",
        "a gateway from the underlying page sits behind the modal backdrop",
        [
            n("a00_root", "pane1", "container", 0, 0, 1440, 900),
            n("a01_gateway", "pane1", "link", 372, 560, 140, 24,
              "Cookie details",
              effects=[{"kind": "navigate", "target": "pane2"}]),
            n("a02_backdrop", "pane1", "container", 300, 80, 840, 760),
            n("a03_accept", "pane1", "button", 372, 200, 200, 50, "Accept all",
              emphasisClass="primary", parentId="a02_backdrop",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a04_reject", "pane1", "button", 652, 200, 120, 44, "Reject all",
              parentId="a02_backdrop",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            *settings_pane(),
        ],
        panes=("pane1", "pane2"),
    )
    out.append((
        "occluded_gateway_desktop", doc,
        {"a01_gateway": L(False, False, "settings"),
         "a03_accept": L(True, False, "accept"),
         "a04_reject": L(True, True, "reject")},
        "a visibility false positive on the buried gateway",
    ))

    # -- sham rejects: present the choice without delivering it
    doc = page(
        "handwritten:sham_reject",
        "the reject dismisses the banner but the page records acceptance "
        "anyway (behavior noted from observation, beyond what the snapshot "
        "can express), so it is labeled not actionable",
        [
            n("a00_root", "pane1", "container", 340, 340, 760, 260),
            n("a01_body", "pane1", "text", 372, 370, 656, 60,
              "We use cookies to personalise content."),
            n("a02_accept", "pane1", "button", 372, 460, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_reject", "pane1", "button", 612, 460, 120, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
    )
    out.append((
        "sham_reject_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_reject": L(True, False, "reject")},
        "an actionability false positive by design",
    ))

    doc = page(
        "handwritten:sham_necessary",
        "the essential-only control reloads the page with consent intact "
        "(observed behavior); labeled not actionable",
        [
            n("a00_root", "pane1", "container", 0, 500, 390, 344),
            n("a01_body", "pane1", "text", 24, 530, 342, 60,
              "We process personal data with your consent."),
            n("a02_accept", "pane1", "button", 24, 610, 342, 48, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_reject", "pane1", "button", 24, 680, 342, 44,
              "Essential only",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
        bp="mobile",
    )
    out.append((
        "sham_necessary_mobile", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_reject": L(True, False, "reject")},
        "an actionability false positive on a reject synonym",
    ))

    # -- unnamed controls: deliver the choice without presenting a name
    doc = page(
        "handwritten:icon_reject",
        "the close glyph rejects non-essential cookies (site-documented) "
        "but exposes no name, so the rules cannot classify it",
        [
            n("a00_root", "pane1", "container", 340, 340, 760, 280),
            n("a01_title", "pane1", "text", 372, 370, 600, 36,
              "We value your privacy"),
            n("a05_x", "pane1", "button", 1040, 356, 24, 24,
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a06_accept", "pane1", "button", 372, 480, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a07_gateway", "pane1", "button", 612, 480, 160, 44,
              "Manage options",
              effects=[{"kind": "navigate", "target": "pane2"}]),
            *settings_pane(),
        ],
        panes=("pane1", "pane2"),
    )
    out.append((
        "icon_reject_desktop", doc,
        {"a05_x": L(True, True, "reject"),
         "a06_accept": L(True, False, "accept"),
         "a07_gateway": L(True, True, "settings")},
        "an actionability false negative on the unnamed reject",
    ))

    doc = page(
        "handwritten:icon_settings",
        "an unnamed gear glyph opens preferences; a real reject is present",
        [
            n("a00_root", "pane1", "container", 340, 340, 760, 280),
            n("a01_gear", "pane1", "button", 1040, 356, 24, 24,
              effects=[{"kind": "navigate", "target": "pane2"}]),
            n("a02_accept", "pane1", "button", 372, 480, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_reject", "pane1", "button", 612, 480, 120, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            *settings_pane(),
        ],
        panes=("pane1", "pane2"),
    )
    out.append((
        "icon_settings_desktop", doc,
        {"a01_gear": L(True, False, "settings"),
         "a02_accept": L(True, False, "accept"),
         "a03_reject": L(True, True, "reject")},
        "an unnamed gateway stays unknown; labels agree it completes nothing",
    ))

    # -- euphemism and synonym coverage
    doc = page(
        "handwritten:gotit",
        "a got-it dismissal with a genuine reject synonym alongside",
        [
            n("a00_root", "pane1", "container", 340, 600, 760, 200),
            n("a01_body", "pane1", "text", 372, 630, 656, 40,
              "This site uses cookies."),
            n("a02_gotit", "pane1", "button", 372, 690, 160, 44, "Got it",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_necessary", "pane1", "button", 572, 690, 160, 44,
              "Only necessary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
    )
    out.append((
        "gotit_desktop", doc,
        {"a02_gotit": L(True, False, "accept"),
         "a03_necessary": L(True, True, "reject")},
        "the euphemistic dismissal is not a choice; the synonym reject is",
    ))

    doc = page(
        "handwritten:necessary_only",
        "accept all against necessary only, both co-present",
        [
            n("a00_root", "pane1", "container", 340, 600, 760, 200),
            n("a01_body", "pane1", "text", 372, 630, 656, 40,
              "Cookies help us deliver our services."),
            n("a02_accept", "pane1", "button", 372, 690, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_necessary", "pane1", "button", 612, 690, 160, 44,
              "Necessary only",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
    )
    out.append((
        "necessary_only_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_necessary": L(True, True, "reject")},
        "reject synonym coverage",
    ))

    # -- partial visibility on non-reject controls
    doc = page(
        "handwritten:clipped_save",
        "the save control is four pixels below the fold with the toggles "
        "above it; a person scans it as visible",
        [
            n("a00_root", "pane1", "container", 340, 0, 760, 920),
            n("a01_title", "pane1", "text", 372, 40, 656, 36,
              "Cookie preferences"),
            n("a10_toggle", "pane1", "toggle", 372, 700, 52, 32,
              "Analytics cookies",
              effects=[{"kind": "toggleState", "target": "a10_toggle"}]),
            n("a11_text", "pane1", "text", 432, 700, 600, 32,
              "Helps us measure how pages perform.", rationaleFor="a10_toggle"),
            n("a20_accept", "pane1", "button", 372, 760, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a30_save", "pane1", "button", 372, 860, 160, 44, "Save choices",
              emphasisClass="secondary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
        scrollable=True, scroll_height=920,
    )
    out.append((
        "clipped_save_desktop", doc,
        {"a10_toggle": L(True, False, "unknown"),
         "a20_accept": L(True, False, "accept"),
         "a30_save": L(True, False, "save")},
        "a visibility false negative on the save control",
    ))

    doc = page(
        "handwritten:clipped_toggle",
        "the advertising toggle straddles the fold",
        [
            n("a00_root", "pane1", "container", 340, 0, 760, 940),
            n("a01_title", "pane1", "text", 372, 40, 656, 36,
              "Cookie preferences"),
            n("a10_toggle", "pane1", "toggle", 372, 600, 52, 32,
              "Analytics cookies",
              effects=[{"kind": "toggleState", "target": "a10_toggle"}]),
            n("a12_toggle", "pane1", "toggle", 372, 884, 52, 32,
              "Advertising cookies",
              effects=[{"kind": "toggleState", "target": "a12_toggle"}]),
            n("a20_accept", "pane1", "button", 372, 680, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a30_save", "pane1", "button", 652, 680, 160, 44, "Save choices",
              emphasisClass="secondary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
        scrollable=True, scroll_height=940,
    )
    out.append((
        "clipped_toggle_desktop", doc,
        {"a10_toggle": L(True, False, "unknown"),
         "a12_toggle": L(True, False, "unknown"),
         "a20_accept": L(True, False, "accept"),
         "a30_save": L(True, False, "save")},
        "a visibility false negative on the straddling toggle",
    ))

    doc = page(
        "handwritten:clipped_gateway",
        "the preferences link is half under the fold on a short sheet",
        [
            n("a00_root", "pane1", "container", 0, 500, 390, 354),
            n("a01_body", "pane1", "text", 24, 530, 342, 80,
              "We and our partners process personal data."),
            n("a02_accept", "pane1", "button", 24, 630, 342, 48, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_reject", "pane1", "button", 24, 700, 342, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a04_gateway", "pane1", "link", 24, 832, 160, 24,
              "Cookie settings",
              effects=[{"kind": "navigate", "target": "pane2"}]),
            *settings_pane(pane="pane2", x=24, w=342),
        ],
        bp="mobile", panes=("pane1", "pane2"),
        scrollable=True, scroll_height=860,
    )
    out.append((
        "clipped_gateway_mobile", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_reject": L(True, True, "reject"),
         "a04_gateway": L(True, False, "settings")},
        "a visibility false negative on the clipped gateway",
    ))

    # -- keyboard semantics demos
    doc = page(
        "handwritten:tabindex_jump",
        "an explicit positive tab index pulls the reject to the front of "
        "the ring even though it renders last",
        [
            n("a00_root", "pane1", "container", 340, 340, 760, 300),
            n("a01_body", "pane1", "text", 372, 370, 656, 40,
              "We store data on your device."),
            n("a02_accept", "pane1", "button", 372, 460, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_gateway", "pane1", "link", 372, 540, 140, 24,
              "Cookie details",
              effects=[{"kind": "navigate", "target": "pane2"}]),
            n("a04_reject", "pane1", "button", 612, 460, 120, 44, "Reject all",
              tabIndex=1, animationMs=300,
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            *settings_pane(),
        ],
        panes=("pane1", "pane2"),
    )
    out.append((
        "tabindex_jump_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_gateway": L(True, False, "settings"),
         "a04_reject": L(True, True, "reject")},
        "keyboard reaches the reject as the free initial stop",
    ))

    doc = page(
        "handwritten:roving_menu",
        "a roving menu sits between the accept and the reject in the ring",
        [
            n("a00_root", "pane1", "container", 340, 300, 760, 360),
            n("a02_accept", "pane1", "button", 372, 360, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a05_menu", "pane1", "container", 372, 440, 500, 24),
            n("a05a_item", "pane1", "link", 372, 440, 90, 20, "About us",
              parentId="a05_menu", rovingTabIndex=True),
            n("a05b_item", "pane1", "link", 492, 440, 90, 20, "Careers",
              parentId="a05_menu", rovingTabIndex=True),
            n("a05c_item", "pane1", "link", 612, 440, 90, 20, "Press",
              parentId="a05_menu", rovingTabIndex=True),
            n("a07_reject", "pane1", "button", 372, 520, 120, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
    )
    out.append((
        "roving_menu_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a05a_item": L(True, False, "unknown"),
         "a05b_item": L(True, False, "unknown"),
         "a05c_item": L(True, False, "unknown"),
         "a07_reject": L(True, True, "reject")},
        "one focus loop charged for passing the decoy cluster",
    ))

    doc = page(
        "handwritten:double_trap",
        "two roving decoy clusters sit between the accept and the reject",
        [
            n("a00_root", "pane1", "container", 340, 260, 760, 420),
            n("a02_accept", "pane1", "button", 372, 320, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a10_nav", "pane1", "container", 372, 400, 500, 24),
            n("a10a_item", "pane1", "link", 372, 400, 90, 20, "About us",
              parentId="a10_nav", rovingTabIndex=True),
            n("a10b_item", "pane1", "link", 492, 400, 90, 20, "Careers",
              parentId="a10_nav", rovingTabIndex=True),
            n("a20_social", "pane1", "container", 372, 450, 500, 24),
            n("a20a_item", "pane1", "link", 372, 450, 90, 20, "Press",
              parentId="a20_social", rovingTabIndex=True),
            n("a20b_item", "pane1", "link", 492, 450, 90, 20, "Imprint",
              parentId="a20_social", rovingTabIndex=True),
            n("a30_reject", "pane1", "button", 372, 540, 120, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
    )
    out.append((
        "double_trap_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a10a_item": L(True, False, "unknown"),
         "a10b_item": L(True, False, "unknown"),
         "a20a_item": L(True, False, "unknown"),
         "a20b_item": L(True, False, "unknown"),
         "a30_reject": L(True, True, "reject")},
        "two focus loops charged on the keyboard route",
    ))

    doc = page(
        "handwritten:dom_first_reject",
        "the reject comes first in document order though it renders below",
        [
            n("a00_root", "pane1", "container", 340, 340, 760, 300),
            n("a01_reject", "pane1", "button", 372, 560, 120, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a02_accept", "pane1", "button", 372, 420, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_body", "pane1", "text", 372, 370, 656, 40,
              "Cookies keep our service running."),
        ],
    )
    out.append((
        "dom_first_reject_desktop", doc,
        {"a01_reject": L(True, True, "reject"),
         "a02_accept": L(True, False, "accept")},
        "document order, not paint order, decides the free initial stop",
    ))

    # -- scroll-window override: a bottom sheet with its own viewport
    doc = page(
        "handwritten:evh_sheet",
        "a bottom sheet scrolls within a 500px window; distances normalize "
        "by the sheet window, not the device viewport",
        [
            n("a00_root", "pane1", "container", 0, 0, 390, 1250),
            n("a01_body", "pane1", "text", 24, 30, 342, 80,
              "We and 57 partners process data under legitimate interest."),
            n("a02_accept", "pane1", "button", 24, 140, 342, 48, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_details", "pane1", "link", 24, 220, 120, 20, "See details",
              effects=[{"kind": "navigate", "target": "pane2"}]),
            n("a04_wall", "pane1", "text", 24, 260, 342, 880,
              "Purpose descriptions follow for each partner."),
            n("a05_reject", "pane1", "button", 24, 1180, 342, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            *settings_pane(pane="pane2", x=24, w=342),
        ],
        bp="mobile", panes=("pane1", "pane2"),
        scrollable=True, scroll_height=1250, evh=500,
    )
    out.append((
        "evh_sheet_mobile", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_details": L(True, False, "settings"),
         "a05_reject": L(False, False, "reject")},
        "effective-viewport normalization on a sheet",
    ))

    doc = page(
        "handwritten:evh_sheet_desktop",
        "a desktop drawer scrolling within a 700px window",
        [
            n("a00_root", "pane1", "container", 340, 0, 760, 2100),
            n("a01_body", "pane1", "text", 372, 40, 656, 80,
              "Our partners rely on consent for the purposes listed."),
            n("a02_accept", "pane1", "button", 372, 160, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_wall", "pane1", "text", 372, 240, 656, 1700,
              "Detailed purpose and partner descriptions."),
            n("a04_reject", "pane1", "button", 372, 2040, 120, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
        scrollable=True, scroll_height=2100, evh=700,
    )
    out.append((
        "evh_sheet_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a04_reject": L(False, False, "reject")},
        "deep drawer: distance normalizes by the 700px window",
    ))

    # -- rhetoric and prominence signal demos
    doc = page(
        "handwritten:rationale_near",
        "toggles visible up front, each with a one-sentence rationale "
        "within reach, and a persistent change-consent link",
        [
            n("a00_root", "pane1", "container", 340, 300, 760, 420),
            n("a01_title", "pane1", "text", 372, 330, 656, 36,
              "Your privacy choices"),
            n("a10_toggle", "pane1", "toggle", 372, 400, 52, 32,
              "Analytics cookies",
              effects=[{"kind": "toggleState", "target": "a10_toggle"}]),
            n("a11_text", "pane1", "text", 432, 400, 560, 32,
              "Helps us measure how pages perform.", rationaleFor="a10_toggle"),
            n("a12_toggle", "pane1", "toggle", 372, 470, 52, 32,
              "Advertising cookies",
              effects=[{"kind": "toggleState", "target": "a12_toggle"}]),
            n("a13_text", "pane1", "text", 432, 470, 560, 32,
              "Funds the service through relevant ads.",
              rationaleFor="a12_toggle"),
            n("a20_accept", "pane1", "button", 372, 550, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a30_reject", "pane1", "button", 612, 550, 120, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a40_footer", "pane1", "link", 372, 640, 150, 20,
              "Change consent"),
        ],
        persistent=("a40_footer",),
    )
    out.append((
        "rationale_near_desktop", doc,
        {"a10_toggle": L(True, False, "unknown"),
         "a12_toggle": L(True, False, "unknown"),
         "a20_accept": L(True, False, "accept"),
         "a30_reject": L(True, True, "reject"),
         "a40_footer": L(True, False, "reversibility")},
        "all three support criteria hold",
    ))

    doc = page(
        "handwritten:rationale_long",
        "same layout but the rationales run past one sentence",
        [
            n("a00_root", "pane1", "container", 340, 300, 760, 420),
            n("a01_title", "pane1", "text", 372, 330, 656, 36,
              "Your privacy choices"),
            n("a10_toggle", "pane1", "toggle", 372, 400, 52, 32,
              "Analytics cookies",
              effects=[{"kind": "toggleState", "target": "a10_toggle"}]),
            n("a11_text", "pane1", "text", 432, 400, 560, 32,
              "We profile reading habits. This funds the site.",
              rationaleFor="a10_toggle"),
            n("a20_accept", "pane1", "button", 372, 550, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a30_reject", "pane1", "button", 612, 550, 120, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a40_footer", "pane1", "link", 372, 640, 150, 20,
              "Change consent"),
        ],
        persistent=("a40_footer",),
    )
    out.append((
        "rationale_long_desktop", doc,
        {"a10_toggle": L(True, False, "unknown"),
         "a20_accept": L(True, False, "accept"),
         "a30_reject": L(True, True, "reject"),
         "a40_footer": L(True, False, "reversibility")},
        "the two-sentence rationale fails the brevity test",
    ))

    doc = page(
        "handwritten:celebratory",
        "celebratory copy beside a dominant accept",
        [
            n("a00_root", "pane1", "container", 340, 300, 760, 360),
            n("a01_cheer", "pane1", "text", 372, 330, 656, 36,
              "You're in control!", celebratory=True),
            n("a02_accept", "pane1", "button", 372, 400, 300, 60, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_reject", "pane1", "button", 712, 410, 100, 36, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
    )
    out.append((
        "celebratory_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_reject": L(True, True, "reject")},
        "all three prominence criteria fire",
    ))

    doc = page(
        "handwritten:salience_tie",
        "accept and reject share size and emphasis; no prominence signal",
        [
            n("a00_root", "pane1", "container", 340, 340, 760, 260),
            n("a01_body", "pane1", "text", 372, 370, 656, 40,
              "Choose how we may use cookies."),
            n("a02_accept", "pane1", "button", 372, 440, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_reject", "pane1", "button", 612, 440, 200, 50, "Reject all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        ],
    )
    out.append((
        "salience_tie_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_reject": L(True, True, "reject")},
        "equal prominence scores zero",
    ))

    doc = page(
        "handwritten:disabled_sham",
        "a disabled reject placebo with the real route behind settings",
        [
            n("a00_root", "pane1", "container", 340, 340, 760, 300),
            n("a01_body", "pane1", "text", 372, 370, 656, 40,
              "Manage your cookie preferences below."),
            n("a02_accept", "pane1", "button", 372, 440, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_reject", "pane1", "button", 612, 440, 120, 44, "Reject all",
              enabled=False),
            n("a04_gateway", "pane1", "button", 372, 540, 160, 44,
              "Cookie settings", emphasisClass="secondary",
              effects=[{"kind": "navigate", "target": "pane2"}]),
            *settings_pane(),
        ],
        panes=("pane1", "pane2"),
    )
    out.append((
        "disabled_sham_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_reject": L(True, False, "reject"),
         "a04_gateway": L(True, True, "settings")},
        "the disabled placebo is inert; the named gateway is the choice",
    ))

    doc = page(
        "handwritten:reversible",
        "a plain pair with a persistent withdraw link",
        [
            n("a00_root", "pane1", "container", 340, 600, 760, 220),
            n("a01_body", "pane1", "text", 372, 630, 656, 40,
              "We use cookies for measurement."),
            n("a02_accept", "pane1", "button", 372, 690, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_reject", "pane1", "button", 612, 690, 120, 44, "Reject all",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a04_withdraw", "pane1", "link", 372, 770, 160, 20,
              "Withdraw consent"),
        ],
        persistent=("a04_withdraw",),
    )
    out.append((
        "reversible_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_reject": L(True, True, "reject"),
         "a04_withdraw": L(True, False, "reversibility")},
        "reversibility detected from the persistent link",
    ))

    doc = page(
        "handwritten:clear_gateway",
        "a clearly named preferences route with no direct reject",
        [
            n("a00_root", "pane1", "container", 340, 600, 760, 200),
            n("a01_body", "pane1", "text", 372, 630, 656, 40,
              "We personalise content with your consent."),
            n("a02_accept", "pane1", "button", 372, 690, 200, 50, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_gateway", "pane1", "button", 612, 690, 180, 44,
              "Manage preferences", emphasisClass="secondary",
              effects=[{"kind": "navigate", "target": "pane2"}]),
            *settings_pane(),
        ],
        panes=("pane1", "pane2"),
    )
    out.append((
        "clear_gateway_desktop", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_gateway": L(True, True, "settings")},
        "a recognizable settings route counts as the alternative",
    ))

    doc = page(
        "handwritten:clear_gateway_mobile",
        "a clearly named preferences route on a mobile sheet",
        [
            n("a00_root", "pane1", "container", 0, 560, 390, 284),
            n("a01_body", "pane1", "text", 24, 590, 342, 60,
              "We personalise content with your consent."),
            n("a02_accept", "pane1", "button", 24, 670, 342, 48, "Accept all",
              emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
            n("a03_gateway", "pane1", "button", 24, 740, 342, 44,
              "Cookie settings",
              effects=[{"kind": "navigate", "target": "pane2"}]),
            *settings_pane(pane="pane2", x=24, w=342),
        ],
        bp="mobile", panes=("pane1", "pane2"),
    )
    out.append((
        "clear_gateway_mobile", doc,
        {"a02_accept": L(True, False, "accept"),
         "a03_gateway": L(True, True, "settings")},
        "mobile variant of the named gateway",
    ))

    return out


# ---------------------------------------------------------------------------
# freezing


def freeze_expectations(snapshot) -> dict:
    expected = {}
    for policy in (Policy.POINTER, Policy.KEYBOARD):
        report = run_audit(snapshot, policies=(policy,), profiles=("default",),
                           lexicon=LEX)
        res = report.results[0]
        expected[policy.value] = {
            "strip": render_event_strip(res.trace),
            "terminal": res.trace.terminal.value,
            "components": res.components.to_dict(),
            "psiDefault": round(res.psi_by_profile["default"], 9),
        }
    return expected


# strips that were derived by hand before the engine ran; the build
# aborts if the engine disagrees
PINNED = {
    ("acc_cal_desktop", "pointer"):
        ("EV_SCROLL -> EV_EXPAND -> EV_TOGGLE -> EV_ACTION", 1.72),
    ("acc_reveal1_desktop", "pointer"):
        ("EV_EXPAND -> EV_TOGGLE -> EV_ACTION", None),
    ("ms_panes3_flat_desktop", "pointer"):
        ("EV_ACTION -> EV_ACTION -> EV_TOGGLE -> EV_ACTION", None),
    ("cp_cal_desktop", "pointer"): ("EV_ACTION", 0.87),
    ("sw_cal_desktop", "pointer"): ("EV_SCROLL -> EV_ACTION", 2.326),
    ("ms_cal_desktop", "pointer"):
        ("EV_ACTION -> EV_SCROLL -> EV_TOGGLE -> EV_ACTION", 1.58),
    ("copresent_equal", "pointer"): ("EV_ACTION", 0.1),
    ("copresent_equal", "keyboard"): ("EV_ACTION", 0.1),
    ("censored_accept_only", "pointer"): ("[BUDGET_EXHAUSTED]", 0.0),
    ("censored_accept_only", "keyboard"): ("[BUDGET_EXHAUSTED]", 0.0),
}


def main() -> int:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    entries = []
    failures = []

    items = []
    for fid, kind, params, note in GENERATOR_FIXTURES:
        snapshot = generate_archetype(kind, params, seed=7)
        items.append((fid, kind.value.lower(), snapshot,
                      generator_truth(snapshot), note))
    for fid, doc, labels, note in special_fixtures():
        snapshot = snapshot_from_dict(doc)
        items.append((fid, "handwritten", snapshot, labels, note))

    for fid, archetype, snapshot, labels, note in items:
        expected = freeze_expectations(snapshot)
        for policy in ("pointer", "keyboard"):
            pin = PINNED.get((fid, policy))
            if pin is None:
                continue
            strip, psi = pin
            got = expected[policy]
            if got["strip"] != strip:
                failures.append(
                    f"{fid}/{policy}: strip {got['strip']!r} != pinned {strip!r}"
                )
            if psi is not None and abs(got["psiDefault"] - psi) > 1e-9:
                failures.append(
                    f"{fid}/{policy}: psi {got['psiDefault']} != pinned {psi}"
                )
        filename = f"{fid}.snapshot.json"
        (OUT_DIR / filename).write_text(
            canonical_json(snapshot_to_dict(snapshot)), encoding="utf-8"
        )
        entries.append({
            "id": fid,
            "file": filename,
            "archetype": archetype,
            "note": note,
            "labels": labels,
            "expected": expected,
        })

    manifest = {
        "version": 1,
        "count": len(entries),
        "fixtures": entries,
    }
    (OUT_DIR / "manifest.json").write_text(
        canonical_json(manifest), encoding="utf-8"
    )

    if failures:
        print("PINNED EXPECTATION FAILURES:")
        for f in failures:
            print("  " + f)
        return 1

    # reload through the shipping loader and score the detector
    from consentaudit import detector_predictions, load_fixture_corpus

    fixtures = load_fixture_corpus()
    tallies = {dim: {"tp": 0, "fp": 0, "fn": 0, "tn": 0}
               for dim in ("visible", "actionable")}
    for fixture in fixtures:
        preds = detector_predictions(fixture, lexicon=LEX)
        for node_id, label in fixture.labels.items():
            for dim, truth in (("visible", label.visible),
                               ("actionable", label.actionable)):
                pred = preds[node_id][dim]
                key = ("tp" if truth else "fp") if pred else ("fn" if truth else "tn")
                tallies[dim][key] += 1

    print(f"wrote {len(entries)} fixtures to {OUT_DIR}")
    for dim, t in tallies.items():
        precision = t["tp"] / (t["tp"] + t["fp"]) if t["tp"] + t["fp"] else None
        recall = t["tp"] / (t["tp"] + t["fn"]) if t["tp"] + t["fn"] else None
        print(f"  {dim}: tp={t['tp']} fp={t['fp']} fn={t['fn']} tn={t['tn']} "
              f"precision={precision:.4f} recall={recall:.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
