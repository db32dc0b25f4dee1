"""PSI components, weighting profiles, and companion signals."""

import pytest

from consentaudit import (
    PROFILES,
    Policy,
    PsiComponents,
    WeightProfile,
    companion_signals,
    compute_aai,
    compute_components,
    compute_csi,
    compute_psi,
    default_lexicon,
    least_effort_traverse,
    named_profile,
)
from helpers import co_present_page, dismiss, make_page, node, toggle_state

LEX = default_lexicon()


def audit(snap, policy=Policy.POINTER):
    trace = least_effort_traverse(snap, policy, LEX)
    return trace, compute_components(trace, snap, LEX)


def test_bundled_profiles():
    assert set(PROFILES) == {"default", "accessibility", "delay", "disclosure"}
    assert PROFILES["default"] == WeightProfile("default", 1.0, 1.0, 1.0, 1.0)
    assert PROFILES["accessibility"].gamma == 2.0
    assert PROFILES["delay"].beta == 2.0
    assert PROFILES["disclosure"].delta == 2.0


def test_named_profile_lookup_error():
    assert named_profile("delay") is PROFILES["delay"]
    with pytest.raises(LookupError):
        named_profile("speed")


def test_psi_is_weighted_sum():
    c = PsiComponents(distance_vh=1.5, time_s=0.4, focus_loops=2,
                      hidden_reveals=1, censored=False)
    assert compute_psi(c, PROFILES["default"]) == pytest.approx(4.9)
    assert compute_psi(c, PROFILES["accessibility"]) == pytest.approx(6.9)
    assert compute_psi(c, WeightProfile("zero", 0, 0, 0, 0)) == 0.0


def test_components_from_co_present_trace():
    trace, comps = audit(co_present_page())
    assert comps.distance_vh == 0.0
    assert comps.time_s == pytest.approx(0.1)
    assert comps.focus_loops == 0
    assert comps.hidden_reveals == 0
    assert not comps.censored


def test_distance_normalized_by_effective_viewport():
    snap = make_page(
        [node("a00_root", "pane1", "container", 0, 0, 390, 1250),
         node("a01_accept", "pane1", "button", 24, 100, 342, 48,
              "Accept all", effects=dismiss()),
         node("a02_reject", "pane1", "button", 24, 1180, 342, 44,
              "Reject all", effects=dismiss())],
        bp="mobile", scrollable=True, scroll_height=1250, evh=500,
    )
    trace, comps = audit(snap)
    # minimum offset (1224 - 500 = 724) over the sheet window, not 844
    assert comps.distance_vh == pytest.approx(724 / 500)


def test_censored_components_are_lower_bounds():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 340, 760, 240),
         node("a01_accept", "pane1", "button", 372, 440, 200, 50,
              "Accept all", effects=dismiss())]
    )
    trace, comps = audit(snap)
    assert trace.censored
    assert comps.censored
    assert (comps.distance_vh, comps.time_s, comps.focus_loops,
            comps.hidden_reveals) == (0.0, 0.0, 0, 0)
    # PSI still computes, flagged rather than suppressed
    assert compute_psi(comps, PROFILES["default"]) == 0.0


def test_components_to_dict_rounding():
    c = PsiComponents(distance_vh=1 / 3, time_s=0.123456789123,
                      focus_loops=0, hidden_reveals=0, censored=False)
    d = c.to_dict()
    assert d["distanceVh"] == round(1 / 3, 9)
    assert d["timeS"] == 0.123456789
    assert d["censored"] is False


def test_aai_fires_all_three_criteria():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 300, 760, 360),
         node("a01_cheer", "pane1", "text", 372, 330, 656, 36,
              "You're in control!", celebratory=True),
         node("a02_accept", "pane1", "button", 372, 400, 300, 60,
              "Accept all", emphasisClass="primary", effects=dismiss()),
         node("a03_reject", "pane1", "button", 712, 410, 100, 36,
              "Reject all", effects=dismiss())]
    )
    # salience 300*60*2 = 36000 vs 100*36 = 3600: ratio 10 > 1.5
    assert compute_aai(snap, LEX) == 3


def test_aai_zero_on_equal_prominence():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 340, 760, 260),
         node("a01_accept", "pane1", "button", 372, 440, 200, 50,
              "Accept all", emphasisClass="primary", effects=dismiss()),
         node("a02_reject", "pane1", "button", 612, 440, 200, 50,
              "Reject all", emphasisClass="primary", effects=dismiss())]
    )
    assert compute_aai(snap, LEX) == 0


def test_aai_no_alternative_fires_dominance():
    snap = make_page(
        [node("a00_root", "pane1", "container", 340, 340, 760, 240),
         node("a01_accept", "pane1", "button", 372, 440, 200, 50,
              "Accept all", emphasisClass="primary", effects=dismiss())]
    )
    # no alternative at all: criterion (i) fires by default, (iii) too
    assert compute_aai(snap, LEX) >= 2


def test_csi_criteria():
    base = [
        node("a00_root", "pane1", "container", 340, 300, 760, 420),
        node("a10_toggle", "pane1", "toggle", 372, 400, 52, 32,
             "Analytics cookies", effects=toggle_state("a10_toggle")),
        node("a20_accept", "pane1", "button", 372, 550, 200, 50,
             "Accept all", emphasisClass="primary", effects=dismiss()),
        node("a30_reject", "pane1", "button", 612, 550, 120, 44,
             "Reject all", effects=dismiss()),
        node("a40_footer", "pane1", "link", 372, 640, 150, 20,
             "Change consent"),
    ]
    near = node("a11_text", "pane1", "text", 432, 400, 560, 32,
                "Helps us measure how pages perform.",
                rationaleFor="a10_toggle")
    far = node("a11_text", "pane1", "text", 432, 660, 560, 32,
               "Helps us measure how pages perform.",
               rationaleFor="a10_toggle")
    wordy = node("a11_text", "pane1", "text", 432, 400, 560, 32,
                 "We profile reading habits. This funds the site.",
                 rationaleFor="a10_toggle")

    full = make_page(base + [near], persistent=("a40_footer",))
    assert compute_csi(full, LEX) == 3

    no_persist = make_page(base + [near])
    assert compute_csi(no_persist, LEX) == 2

    distant = make_page(base + [far], persistent=("a40_footer",))
    assert compute_csi(distant, LEX) == 2

    long_winded = make_page(base + [wordy], persistent=("a40_footer",))
    assert compute_csi(long_winded, LEX) == 2


def test_div_is_aai_minus_csi():
    for snap in (
        co_present_page(),
        co_present_page(persistent=()),
    ):
        trace = least_effort_traverse(snap, Policy.POINTER, LEX)
        comps = compute_components(trace, snap, LEX)
        sig = companion_signals(snap, trace, comps, LEX)
        assert sig.div == sig.aai - sig.csi


def test_companion_signal_fields():
    snap = co_present_page()
    trace = least_effort_traverse(snap, Policy.POINTER, LEX)
    comps = compute_components(trace, snap, LEX)
    sig = companion_signals(snap, trace, comps, LEX)
    assert sig.granularity_exposed is True
    assert sig.reversibility is False
    assert sig.time_to_primary_s == pytest.approx(comps.time_s)
    assert sig.distance_to_choice_vh == pytest.approx(comps.distance_vh)
    d = sig.to_dict()
    assert set(d) == {
        "timeToPrimaryS", "distanceToChoiceVh", "granularityExposed",
        "reversibility", "aai", "csi", "div",
    }
