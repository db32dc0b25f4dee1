"""Randomized invariant checks.

Each test states one structural guarantee and hammers it with generated
inputs. CASE_BUDGET records the example count per property so the
acceptance gate can verify the suite size without re-parsing settings.
"""

from __future__ import annotations

import math

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from consentaudit import (
    PROFILES,
    EventKind,
    Policy,
    PsiComponents,
    Terminal,
    WeightProfile,
    classify_control,
    companion_signals,
    compute_components,
    compute_psi,
    default_lexicon,
    granularity_exposed,
    least_effort_traverse,
    parse_snapshot,
    rank_stability,
    salience,
    sample_weight_profiles,
    serialize_snapshot,
    snapshot_from_dict,
    visible_in_viewport,
)
from consentaudit.sensitivity import AuditedItem
from helpers import dismiss, make_doc, node, reveal

LEXICON = default_lexicon()

CASE_BUDGET = {
    "psi_linear_in_components": 150,
    "psi_delta_doubling": 150,
    "psi_monotone_in_components": 150,
    "uniform_scaling_preserves_ranking": 100,
    "salience_strictly_monotone_in_area": 100,
    "viewport_visibility_single_interval": 60,
    "snapshot_round_trip": 60,
    "classification_pure_in_name_role_lexicon": 100,
    "co_presence_bound": 50,
    "expander_injection_raises_psi": 50,
    "focus_trap_touches_keyboard_only": 40,
    "div_is_aai_minus_csi": 40,
    "support_fractions_order_invariant": 25,
}

TOTAL_CASES = sum(CASE_BUDGET.values())


def suite(name, **kw):
    return settings(
        max_examples=CASE_BUDGET[name],
        deadline=None,
        derandomize=True,
        suppress_health_check=[HealthCheck.too_slow],
        **kw,
    )


# --------------------------------------------------------------------------
# strategies

components_st = st.builds(
    PsiComponents,
    distance_vh=st.floats(0, 50, allow_nan=False, allow_infinity=False),
    time_s=st.floats(0, 300, allow_nan=False, allow_infinity=False),
    focus_loops=st.integers(0, 12),
    hidden_reveals=st.integers(0, 12),
)

weight_st = st.floats(0, 10, allow_nan=False, allow_infinity=False)

profile_st = st.builds(
    WeightProfile,
    name=st.just("sampled"),
    alpha=weight_st,
    beta=weight_st,
    gamma=weight_st,
    delta=weight_st,
)

REJECT_LABELS = ("Reject all", "Decline", "Refuse all", "No thanks",
                 "Only necessary")
ACCEPT_LABELS = ("Accept all", "Allow all", "I agree")
EUPHEMISMS = ("See details", "Learn more", "More information")


def _box(draw, max_w=320, max_h=90):
    w = draw(st.integers(80, max_w))
    h = draw(st.integers(32, max_h))
    x = draw(st.integers(0, 1440 - w))
    y = draw(st.integers(0, 900 - h))
    return x, y, w, h


@st.composite
def co_present_docs(draw):
    """Accept and reject both rendered in the first viewport."""
    ax, ay, aw, ah = _box(draw)
    rx, ry, rw, rh = _box(draw)
    nodes = [
        node("a00_root", "pane1", "container", 0, 0, 1440, 900),
        node("a01_body", "pane1", "text", 40, 40, 600, 30,
             draw(st.sampled_from(("We use cookies.", "Your privacy.", "")))),
        node("a02_accept", "pane1", "button", ax, ay, aw, ah,
             draw(st.sampled_from(ACCEPT_LABELS)),
             emphasisClass=draw(st.sampled_from(("primary", "plain"))),
             effects=dismiss()),
        node("a03_reject", "pane1", "button", rx, ry, rw, rh,
             draw(st.sampled_from(REJECT_LABELS)), effects=dismiss()),
    ]
    return make_doc(nodes)


# --------------------------------------------------------------------------
# PSI arithmetic


@suite("psi_linear_in_components")
@given(a=components_st, b=components_st, profile=profile_st)
def test_psi_linear_in_components(a, b, profile):
    summed = PsiComponents(
        distance_vh=a.distance_vh + b.distance_vh,
        time_s=a.time_s + b.time_s,
        focus_loops=a.focus_loops + b.focus_loops,
        hidden_reveals=a.hidden_reveals + b.hidden_reveals,
    )
    assert math.isclose(
        compute_psi(summed, profile),
        compute_psi(a, profile) + compute_psi(b, profile),
        rel_tol=1e-9, abs_tol=1e-9,
    )


@suite("psi_delta_doubling")
@given(c=components_st, profile=profile_st)
def test_psi_delta_doubling(c, profile):
    doubled = WeightProfile("d2", profile.alpha, profile.beta, profile.gamma,
                            2 * profile.delta)
    gain = compute_psi(c, doubled) - compute_psi(c, profile)
    assert math.isclose(gain, profile.delta * c.hidden_reveals,
                        rel_tol=1e-9, abs_tol=1e-9)


@suite("psi_monotone_in_components")
@given(
    c=components_st,
    profile=profile_st,
    field=st.sampled_from(
        ("distance_vh", "time_s", "focus_loops", "hidden_reveals")
    ),
    bump=st.floats(0.001, 100, allow_nan=False, allow_infinity=False),
)
def test_psi_monotone_in_components(c, profile, field, bump):
    if field in ("focus_loops", "hidden_reveals"):
        bump = max(1, int(bump))
    raised = PsiComponents(**{
        "distance_vh": c.distance_vh,
        "time_s": c.time_s,
        "focus_loops": c.focus_loops,
        "hidden_reveals": c.hidden_reveals,
        field: getattr(c, field) + bump,
    })
    weight = {
        "distance_vh": profile.alpha,
        "time_s": profile.beta,
        "focus_loops": profile.gamma,
        "hidden_reveals": profile.delta,
    }[field]
    lo, hi = compute_psi(c, profile), compute_psi(raised, profile)
    assert hi >= lo
    if weight >= 1e-3:
        assert hi > lo


@suite("uniform_scaling_preserves_ranking")
@given(
    a=components_st,
    b=components_st,
    profile=profile_st,
    scale=st.floats(0.01, 100, allow_nan=False, allow_infinity=False),
)
def test_uniform_scaling_preserves_ranking(a, b, profile, scale):
    scaled = WeightProfile(
        "scaled", scale * profile.alpha, scale * profile.beta,
        scale * profile.gamma, scale * profile.delta,
    )
    pa, pb = compute_psi(a, profile), compute_psi(b, profile)
    sa, sb = compute_psi(a, scaled), compute_psi(b, scaled)
    assert math.isclose(sa, scale * pa, rel_tol=1e-9, abs_tol=1e-9)
    assert math.isclose(sb, scale * pb, rel_tol=1e-9, abs_tol=1e-9)
    if pa > pb + 1e-9:
        assert sa > sb


# --------------------------------------------------------------------------
# geometry


@suite("salience_strictly_monotone_in_area")
@given(
    w1=st.integers(20, 400), h1=st.integers(20, 200),
    w2=st.integers(20, 400), h2=st.integers(20, 200),
    emphasis=st.sampled_from(("plain", "secondary", "primary")),
)
def test_salience_strictly_monotone_in_area(w1, h1, w2, h2, emphasis):
    def button(w, h):
        page = snapshot_from_dict(make_doc([
            node("a00_root", "pane1", "container", 0, 0, 1440, 900),
            node("a01_btn", "pane1", "button", 10, 10, w, h, "Accept all",
                 emphasisClass=emphasis, effects=dismiss()),
        ]))
        return page.node("a01_btn")

    s1, s2 = salience(button(w1, h1)), salience(button(w2, h2))
    if w1 * h1 < w2 * h2:
        assert s1 < s2
    elif w1 * h1 == w2 * h2:
        assert s1 == s2
    else:
        assert s1 > s2


@suite("viewport_visibility_single_interval")
@given(y=st.integers(0, 2900), h=st.integers(10, 1200))
def test_viewport_visibility_single_interval(y, h):
    h = min(h, 3000 - y)
    page = snapshot_from_dict(make_doc(
        [node("a00_root", "pane1", "container", 0, 0, 1440, 3000),
         node("a01_btn", "pane1", "button", 10, y, 120, h, "Reject all",
              effects=dismiss()),
         node("a02_top", "pane1", "text", 10, 10, 300, 20, "head")],
        scrollable=True, scroll_height=3000,
    ))
    target = page.node("a01_btn")
    max_offset = 3000 - 900
    hits = [off for off in range(0, max_offset + 1)
            if visible_in_viewport(target, off, page)]
    if hits:
        assert hits[-1] - hits[0] + 1 == len(hits)  # one contiguous run
    else:
        assert h > 900  # taller than the viewport, never fully contained


# --------------------------------------------------------------------------
# serialization


label_text = st.text(
    alphabet=st.characters(blacklist_categories=("Cs",), max_codepoint=0x2FFF),
    max_size=40,
)


@suite("snapshot_round_trip")
@given(
    body=label_text,
    accept_label=st.sampled_from(ACCEPT_LABELS),
    reject_label=st.sampled_from(REJECT_LABELS),
    bp=st.sampled_from(("desktop", "mobile")),
    scroll_extra=st.integers(0, 2000),
    with_link=st.booleans(),
    data=st.data(),
)
def test_snapshot_round_trip(body, accept_label, reject_label, bp,
                             scroll_extra, with_link, data):
    width, height = (1440, 900) if bp == "desktop" else (390, 844)
    bw = min(width - 20, 320)
    nodes = [
        node("a00_root", "pane1", "container", 0, 0, width, height),
        node("a01_body", "pane1", "text", 10, 40, bw, 30, body),
        node("a02_accept", "pane1", "button", 10, 100, bw, 44, accept_label,
             emphasisClass="primary", effects=dismiss()),
        node("a03_reject", "pane1", "button", 10, 160, bw, 44, reject_label,
             effects=dismiss()),
    ]
    if with_link:
        nodes.append(node("a04_policy", "pane1", "link", 10, 220, bw, 20,
                          "Privacy policy"))
    doc = make_doc(nodes, bp=bp, scrollable=scroll_extra > 0,
                   scroll_height=height + scroll_extra, note=body[:20])
    first = serialize_snapshot(snapshot_from_dict(doc))
    second = serialize_snapshot(parse_snapshot(first))
    assert first == second


# --------------------------------------------------------------------------
# detection


@suite("classification_pure_in_name_role_lexicon")
@given(
    label=st.one_of(
        st.sampled_from(REJECT_LABELS + ACCEPT_LABELS + EUPHEMISMS
                        + ("Privacy policy", "Save choices", "Customize")),
        label_text,
    ),
    accessible=st.one_of(st.none(), st.sampled_from(REJECT_LABELS)),
    role=st.sampled_from(("button", "link")),
    data=st.data(),
)
def test_classification_pure_in_name_role_lexicon(label, accessible, role,
                                                  data):
    def variant():
        x, y, w, h = _box(data.draw)
        kw = {"emphasisClass": data.draw(
            st.sampled_from(("plain", "secondary", "primary")))}
        if accessible is not None:
            kw["accessibleName"] = accessible
        if data.draw(st.booleans()):
            kw["enabled"] = False
        page = snapshot_from_dict(make_doc([
            node("a00_root", "pane1", "container", 0, 0, 1440, 900),
            node("a01_body", "pane1", "text", 0, 0, 200, 20, "x"),
            node("a02_ctl", "pane1", role, x, y, w, h, label, **kw),
        ]))
        return page.node("a02_ctl")

    assert (classify_control(variant(), LEXICON)
            == classify_control(variant(), LEXICON))


# --------------------------------------------------------------------------
# traversal guarantees


@suite("co_presence_bound")
@given(doc=co_present_docs(), policy=st.sampled_from(list(Policy)))
def test_co_presence_bound(doc, policy):
    page = snapshot_from_dict(doc)
    assert granularity_exposed(page, LEXICON, policy)
    trace = least_effort_traverse(page, policy, LEXICON)
    assert trace.terminal is Terminal.ALTERNATIVE_REACHED
    kinds = {e.kind for e in trace.events}
    assert EventKind.SCROLL not in kinds
    assert EventKind.EXPAND not in kinds
    comps = compute_components(trace, page, LEXICON)
    assert comps.distance_vh == 0
    assert comps.hidden_reveals == 0
    for profile in PROFILES.values():
        assert compute_psi(comps, profile) >= profile.beta * comps.time_s


@suite("expander_injection_raises_psi")
@given(
    doc=co_present_docs(),
    euphemism=st.sampled_from(EUPHEMISMS),
    animation=st.sampled_from(("absent", None, 0, 150, 450)),
)
def test_expander_injection_raises_psi(doc, euphemism, animation):
    base = snapshot_from_dict(doc)
    base_trace = least_effort_traverse(base, Policy.POINTER, LEXICON)
    base_comps = compute_components(base_trace, base, LEXICON)

    gated = {k: (v if k != "nodes" else [dict(n) for n in v])
             for k, v in doc.items()}
    for n in gated["nodes"]:
        if n["id"] == "a03_reject":
            n["visible"] = False
    more = node("a04_more", "pane1", "expander", 40, 700, 160, 36, euphemism,
                effects=reveal("a03_reject"))
    if animation != "absent":
        more["animationMs"] = animation
    gated["nodes"].append(more)
    page = snapshot_from_dict(gated)

    assert not granularity_exposed(page, LEXICON, Policy.POINTER)
    trace = least_effort_traverse(page, Policy.POINTER, LEXICON)
    assert trace.terminal is Terminal.ALTERNATIVE_REACHED
    comps = compute_components(trace, page, LEXICON)
    assert comps.hidden_reveals == base_comps.hidden_reveals + 1
    for profile in PROFILES.values():
        if profile.delta > 0:
            assert (compute_psi(comps, profile)
                    > compute_psi(base_comps, profile))


@suite("focus_trap_touches_keyboard_only")
@given(doc=co_present_docs(), decoys=st.integers(2, 4), data=st.data())
def test_focus_trap_touches_keyboard_only(doc, decoys, data):
    trapped = {k: (v if k != "nodes" else list(v)) for k, v in doc.items()}
    trapped["nodes"].append(
        node("a02w_menu", "pane1", "container", 900, 20, 300, 40)
    )
    for i in range(decoys):
        x, y, w, h = _box(data.draw, max_w=120, max_h=40)
        trapped["nodes"].append(
            node(f"a02x_trap{i}", "pane1", "link", x, y, w, h, f"Item {i}",
                 parentId="a02w_menu", rovingTabIndex=True)
        )
    base = snapshot_from_dict(doc)
    page = snapshot_from_dict(trapped)

    ptr_base = least_effort_traverse(base, Policy.POINTER, LEXICON)
    ptr_trap = least_effort_traverse(page, Policy.POINTER, LEXICON)
    assert ptr_trap.events == ptr_base.events
    assert ptr_trap.focus_loops == 0

    kbd_base = least_effort_traverse(base, Policy.KEYBOARD, LEXICON)
    kbd_trap = least_effort_traverse(page, Policy.KEYBOARD, LEXICON)
    assert kbd_trap.focus_loops > kbd_base.focus_loops
    assert kbd_trap.time_s_total > kbd_base.time_s_total

    ptr_b = compute_components(ptr_base, base, LEXICON)
    ptr_t = compute_components(ptr_trap, page, LEXICON)
    kbd_b = compute_components(kbd_base, base, LEXICON)
    kbd_t = compute_components(kbd_trap, page, LEXICON)
    for profile in PROFILES.values():
        assert compute_psi(ptr_t, profile) == compute_psi(ptr_b, profile)
        assert compute_psi(kbd_t, profile) > compute_psi(kbd_b, profile)


# --------------------------------------------------------------------------
# companion signals


@suite("div_is_aai_minus_csi")
@given(doc=co_present_docs(), policy=st.sampled_from(list(Policy)))
def test_div_is_aai_minus_csi(doc, policy):
    page = snapshot_from_dict(doc)
    trace = least_effort_traverse(page, policy, LEXICON)
    comps = compute_components(trace, page, LEXICON)
    signals = companion_signals(page, trace, comps, LEXICON)
    assert signals.div == signals.aai - signals.csi
    assert signals.time_to_primary_s == comps.time_s
    assert signals.distance_to_choice_vh == comps.distance_vh


# --------------------------------------------------------------------------
# robustness bookkeeping


audited_item_st = st.builds(
    AuditedItem,
    item_id=st.uuids().map(str),
    kind=st.sampled_from(
        ("co_present", "scroll_wall", "accordion", "multi_step")
    ),
    breakpoint=st.sampled_from(("desktop", "mobile")),
    policy=st.sampled_from(list(Policy)),
    components=components_st,
)


@suite("support_fractions_order_invariant")
@given(
    items=st.lists(audited_item_st, min_size=4, max_size=10,
                   unique_by=lambda i: i.item_id),
    seed=st.integers(0, 2**16),
    data=st.data(),
)
def test_support_fractions_order_invariant(items, seed, data):
    sample = sample_weight_profiles(20, seed=seed)
    shuffled = data.draw(st.permutations(items))
    assert (rank_stability(tuple(shuffled), sample).to_dict()
            == rank_stability(tuple(items), sample).to_dict())


def test_case_budget_is_at_least_one_thousand():
    assert TOTAL_CASES >= 1000


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
