"""Least-effort traversal: routes, costs, budgets, keyboard semantics."""

import pytest

from consentaudit import (
    Budget,
    EventKind,
    Policy,
    Terminal,
    TimingConstants,
    compute_components,
    default_lexicon,
    least_effort_traverse,
    render_event_strip,
)
from helpers import (
    co_present_page,
    dismiss,
    make_page,
    navigate,
    node,
    reveal,
    toggle_state,
)

LEX = default_lexicon()


def strip(trace):
    return render_event_strip(trace)


def kinds(trace):
    return [e.kind for e in trace.events]


def test_co_present_single_action():
    trace = least_effort_traverse(co_present_page(), Policy.POINTER, LEX)
    assert strip(trace) == "EV_ACTION"
    assert trace.terminal is Terminal.ALTERNATIVE_REACHED
    assert trace.terminal_node_id == "a03_reject"
    assert trace.scroll_px_total == 0
    assert trace.time_s_total == pytest.approx(0.1)


def test_scroll_cost_and_merge():
    # reject 2000px page; target [1800, 1844) on an 844 viewport
    snap = make_page(
        [node("a00_root", "pane1", "container", 0, 0, 390, 2000),
         node("a01_accept", "pane1", "button", 24, 100, 342, 48,
              "Accept all", effects=dismiss()),
         node("a02_reject", "pane1", "button", 24, 1800, 342, 44,
              "Reject all", effects=dismiss())],
        bp="mobile", scrollable=True, scroll_height=2000,
    )
    trace = least_effort_traverse(snap, Policy.POINTER, LEX)
    assert strip(trace) == "EV_SCROLL -> EV_ACTION"
    # minimum scroll to full visibility: 1844 - 844 = 1000px, one merged event
    assert trace.scroll_px_total == 1000
    scrolls = [e for e in trace.events if e.kind is EventKind.SCROLL]
    assert len(scrolls) == 1
    assert scrolls[0].cost_s == pytest.approx(1000 * 0.05 / 844)
    assert trace.time_s_total == pytest.approx(0.1 + 1000 * 0.05 / 844)


def test_measured_animation_charged_exactly():
    snap = co_present_page()
    timed = make_page(
        [node("a00_root", "pane1", "container", 340, 340, 760, 260),
         node("a01_body", "pane1", "text", 372, 370, 656, 40,
              "We use cookies."),
         node("a02_accept", "pane1", "button", 372, 440, 200, 50,
              "Accept all", emphasisClass="primary", effects=dismiss()),
         node("a03_reject", "pane1", "button", 612, 440, 120, 44,
              "Reject all", animationMs=770, effects=dismiss())]
    )
    base = least_effort_traverse(snap, Policy.POINTER, LEX)
    slow = least_effort_traverse(timed, Policy.POINTER, LEX)
    assert slow.time_s_total == pytest.approx(base.time_s_total + 0.77)


def test_wait_budget_only_for_unmeasured_gates():
    # euphemistic expander so the gate itself is not the terminal
    def expander_page(anim):
        kw = {} if anim == "absent" else {"animationMs": anim}
        return make_page(
            [node("a00_root", "pane1", "container", 340, 300, 760, 400),
             node("a01_accept", "pane1", "button", 372, 340, 200, 50,
                  "Accept all", effects=dismiss()),
             node("a02_more", "pane1", "expander", 372, 420, 160, 32,
                  "Cookie details", effects=reveal("a03_panel"), **kw),
             node("a03_panel", "pane1", "container", 372, 460, 400, 200,
                  visible=False),
             node("a04_reject", "pane1", "button", 392, 480, 120, 44,
                  "Reject all", visible=False, parentId="a03_panel",
                  effects=dismiss())]
        )

    unmeasured = least_effort_traverse(expander_page(None), Policy.POINTER, LEX)
    measured_zero = least_effort_traverse(
        expander_page("absent"), Policy.POINTER, LEX
    )
    measured = least_effort_traverse(expander_page(450), Policy.POINTER, LEX)
    assert strip(unmeasured) == "EV_EXPAND -> EV_ACTION"
    # unmeasured gating transition is charged the 300ms wait budget
    assert unmeasured.time_s_total == pytest.approx(0.2 + 0.3)
    assert measured_zero.time_s_total == pytest.approx(0.2)
    assert measured.time_s_total == pytest.approx(0.2 + 0.45)


def test_unmeasured_dismiss_is_not_gating():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 340, 760, 260),
         node("a01_body", "pane1", "text", 372, 370, 656, 40,
              "We use cookies."),
         node("a02_accept", "pane1", "button", 372, 440, 200, 50,
              "Accept all", emphasisClass="primary", effects=dismiss()),
         node("a03_reject", "pane1", "button", 612, 440, 120, 44,
              "Reject all", animationMs=None, effects=dismiss())]
    )
    trace = least_effort_traverse(snap, Policy.POINTER, LEX)
    # dismiss reveals nothing, so no wait budget even though unmeasured
    assert trace.time_s_total == pytest.approx(0.1)


def test_dismiss_only_page_censors():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 340, 760, 260),
         node("a01_accept", "pane1", "button", 372, 440, 200, 50,
              "Accept all", emphasisClass="primary", effects=dismiss()),
         node("a02_close", "pane1", "button", 1060, 360, 24, 24, "Got it",
              effects=dismiss())]
    )
    for policy in (Policy.POINTER, Policy.KEYBOARD):
        trace = least_effort_traverse(snap, policy, LEX)
        assert trace.terminal is Terminal.BUDGET_EXHAUSTED
        assert trace.events == ()
        assert strip(trace) == "[BUDGET_EXHAUSTED]"


def test_interaction_budget_exhaustion():
    # a chain of panes longer than the interaction budget
    names = [f"pane{i}" for i in range(1, 9)]
    nodes = [node("a00_root", "pane1", "container", 340, 340, 760, 260)]
    for i, pane in enumerate(names):
        if pane != "pane1":
            nodes.append(
                node(f"{pane}_body", pane, "text", 372, 370, 400, 40, "step")
            )
        if i + 1 < len(names):
            nodes.append(
                node(f"{pane}_next", pane, "button", 372, 440, 160, 44,
                     "Continue", effects=navigate(names[i + 1]))
            )
    nodes.append(
        node(f"{names[-1]}_reject", names[-1], "button", 372, 440, 120, 44,
             "Reject all", effects=dismiss(names[-1]))
    )
    snap = make_page(nodes, panes=tuple(names))
    trace = least_effort_traverse(
        snap, Policy.POINTER, LEX, budget=Budget(max_pane_depth=3)
    )
    assert trace.terminal is Terminal.BUDGET_EXHAUSTED


def test_lexicographic_preference_fewest_interactions():
    # route A: scroll far to a reject (1 interaction); route B: two clicks
    # through a settings pane; fewest interactions wins even though
    # route A takes longer
    snap = make_page(
        [node("a00_root", "pane1", "container", 0, 0, 390, 3000),
         node("a01_accept", "pane1", "button", 24, 100, 342, 48,
              "Accept all", effects=dismiss()),
         node("a02_prefs", "pane1", "button", 24, 170, 342, 44,
              "Manage settings", effects=navigate("pane2")),
         node("a03_reject", "pane1", "button", 24, 2900, 342, 44,
              "Reject all", effects=dismiss()),
         node("b01_toggle", "pane2", "toggle", 24, 180, 52, 32,
              "Analytics cookies", effects=toggle_state("b01_toggle")),
         node("b02_save", "pane2", "button", 24, 260, 160, 44,
              "Save choices", effects=dismiss("pane2"))],
        bp="mobile", panes=("pane1", "pane2"),
        scrollable=True, scroll_height=3000,
    )
    trace = least_effort_traverse(snap, Policy.POINTER, LEX)
    # the settings gateway itself is meaningful in one interaction
    assert strip(trace) == "EV_ACTION"
    assert trace.terminal_node_id == "a02_prefs"


def test_tie_breaks_by_node_id():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 340, 760, 260),
         node("a01_accept", "pane1", "button", 372, 400, 200, 50,
              "Accept all", effects=dismiss()),
         node("m_reject", "pane1", "button", 372, 460, 120, 44,
              "Reject all", effects=dismiss()),
         node("z_reject", "pane1", "button", 512, 460, 120, 44,
              "Decline all", effects=dismiss())]
    )
    trace = least_effort_traverse(snap, Policy.POINTER, LEX)
    assert trace.terminal_node_id == "m_reject"


def test_keyboard_free_initial_stop():
    # reject first in document order: zero tab travel
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 340, 760, 260),
         node("a01_reject", "pane1", "button", 372, 500, 120, 44,
              "Reject all", effects=dismiss()),
         node("a02_accept", "pane1", "button", 372, 400, 200, 50,
              "Accept all", effects=dismiss())]
    )
    ptr = least_effort_traverse(snap, Policy.POINTER, LEX)
    kbd = least_effort_traverse(snap, Policy.KEYBOARD, LEX)
    assert strip(ptr) == strip(kbd) == "EV_ACTION"
    assert kbd.time_s_total == pytest.approx(ptr.time_s_total)


def test_keyboard_tab_travel_cost():
    snap = co_present_page()  # accept precedes reject in the ring
    ptr = least_effort_traverse(snap, Policy.POINTER, LEX)
    kbd = least_effort_traverse(snap, Policy.KEYBOARD, LEX)
    assert kbd.time_s_total == pytest.approx(ptr.time_s_total + 0.03)


def test_positive_tab_index_reorders_ring():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 340, 760, 260),
         node("a01_accept", "pane1", "button", 372, 400, 200, 50,
              "Accept all", effects=dismiss()),
         node("a02_reject", "pane1", "button", 612, 400, 120, 44,
              "Reject all", tabIndex=1, effects=dismiss())]
    )
    kbd = least_effort_traverse(snap, Policy.KEYBOARD, LEX)
    ptr = least_effort_traverse(snap, Policy.POINTER, LEX)
    # the explicit tabIndex makes the reject the initial stop
    assert kbd.time_s_total == pytest.approx(ptr.time_s_total)


def test_roving_cluster_counts_one_focus_loop():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 300, 760, 360),
         node("a01_accept", "pane1", "button", 372, 360, 200, 50,
              "Accept all", effects=dismiss()),
         node("a05_menu", "pane1", "container", 372, 440, 500, 24),
         node("a05a_item", "pane1", "link", 372, 440, 90, 20, "About us",
              parentId="a05_menu", rovingTabIndex=True),
         node("a05b_item", "pane1", "link", 492, 440, 90, 20, "Careers",
              parentId="a05_menu", rovingTabIndex=True),
         node("a07_reject", "pane1", "button", 372, 520, 120, 44,
              "Reject all", effects=dismiss())]
    )
    ptr = least_effort_traverse(snap, Policy.POINTER, LEX)
    kbd = least_effort_traverse(snap, Policy.KEYBOARD, LEX)
    assert ptr.focus_loops == 0
    assert kbd.focus_loops == 1
    assert EventKind.FOCUS_LOOP in kinds(kbd)
    assert strip(ptr) == "EV_ACTION"


def test_hidden_reveal_component_counts_material_only():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 200, 760, 560),
         node("a01_accept", "pane1", "button", 372, 240, 200, 50,
              "Accept all", effects=dismiss()),
         node("a02_more", "pane1", "expander", 372, 320, 200, 32,
              "Cookie details", animationMs=0, effects=reveal("a03_panel")),
         node("a03_panel", "pane1", "container", 372, 360, 500, 300,
              visible=False),
         node("a04_toggle", "pane1", "toggle", 392, 380, 52, 32,
              "Analytics cookies", visible=False, parentId="a03_panel",
              effects=toggle_state("a04_toggle")),
         node("a05_save", "pane1", "button", 392, 440, 160, 44,
              "Save choices", visible=False, parentId="a03_panel",
              effects=dismiss())]
    )
    trace = least_effort_traverse(snap, Policy.POINTER, LEX)
    comps = compute_components(trace, snap, LEX)
    assert strip(trace) == "EV_EXPAND -> EV_TOGGLE -> EV_ACTION"
    assert comps.hidden_reveals == 1
    assert comps.focus_loops == 0
    assert comps.distance_vh == 0.0


def test_determinism_identical_traces():
    snap = make_page(
        [node("a00_root", "pane1", "container", 0, 0, 390, 2000),
         node("a01_accept", "pane1", "button", 24, 100, 342, 48,
              "Accept all", effects=dismiss()),
         node("a02_reject", "pane1", "button", 24, 1800, 342, 44,
              "Reject all", effects=dismiss())],
        bp="mobile", scrollable=True, scroll_height=2000,
    )
    a = least_effort_traverse(snap, Policy.KEYBOARD, LEX)
    b = least_effort_traverse(snap, Policy.KEYBOARD, LEX)
    assert a == b
    assert [e.to_dict() for e in a.events] == [e.to_dict() for e in b.events]


def test_budget_and_timing_are_configurable():
    snap = co_present_page()
    slow = least_effort_traverse(
        snap, Policy.POINTER, LEX,
        timing=TimingConstants(interaction_handling_s=1.0),
    )
    assert slow.time_s_total == pytest.approx(1.0)
    assert Budget.max_interactions == 25
    assert Budget.max_pane_depth == 6
    assert Budget.wait_budget_ms == 300
