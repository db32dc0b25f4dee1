"""
What counts as a meaningful alternative
=======================================

The detector decides whether a control gives a visitor a genuine
non-accepting choice in one interaction. It works from the label
lexicon, geometry, and declared effects, and it always says why.
"""

from consentaudit import (
    classify_control,
    default_lexicon,
    granularity_exposed,
    initial_state,
    is_meaningful_alternative,
    snapshot_from_dict,
)

lexicon = default_lexicon()


def banner(reject_label, enabled=True, effects=None):
    if effects is None:
        effects = [{"kind": "dismiss", "target": "main"}]
    return snapshot_from_dict({
        "version": 1,
        "meta": {"source": "demo:detector", "note": "",
                 "breakpoint": "desktop", "persistent": []},
        "viewport": {"width": 1440, "height": 900, "name": "desktop"},
        "surface": {"rootNodeId": "n0", "scrollable": False,
                    "scrollHeight": 900},
        "panes": [{"id": "main", "initial": True}],
        "nodes": [
            {"id": "n0", "paneId": "main", "role": "container",
             "bounds": {"x": 300, "y": 300, "w": 800, "h": 260}},
            {"id": "n1", "paneId": "main", "role": "button",
             "label": "Accept all", "emphasisClass": "primary",
             "bounds": {"x": 340, "y": 420, "w": 220, "h": 52},
             "effects": [{"kind": "dismiss", "target": "main"}]},
            {"id": "n2", "paneId": "main", "role": "button",
             "label": reject_label, "enabled": enabled,
             "bounds": {"x": 600, "y": 424, "w": 150, "h": 44},
             "effects": effects},
        ],
    })


# Classification is purely lexical: the same label always lands in the
# same class, whatever the geometry around it.
for label in ("Reject all", "Only necessary", "Cookie settings",
              "Save choices", "Got it", "Privacy policy"):
    page = banner(label)
    print(f"{label!r:20} ->", classify_control(page.node("n2"), lexicon).value)

# A real reject is meaningful; the result carries the reason chain.
page = banner("Reject all")
verdict = is_meaningful_alternative(page.node("n2"), page, lexicon,
                                    initial_state(page))
print("reject:", verdict.meaningful, verdict.reasons)

# A disabled reject is furniture, not a choice.
page = banner("Reject all", enabled=False)
verdict = is_meaningful_alternative(page.node("n2"), page, lexicon,
                                    initial_state(page))
print("disabled reject:", verdict.meaningful, verdict.reasons)

# "Got it" only dismisses; euphemisms never qualify.
page = banner("Got it")
verdict = is_meaningful_alternative(page.node("n2"), page, lexicon,
                                    initial_state(page))
print("got it:", verdict.meaningful, verdict.reasons)

# granularity_exposed is the headline signal: does the first screen,
# before any interaction, already offer a real alternative?
print("granularity exposed:", granularity_exposed(banner("Reject all"),
                                                  lexicon))
print("granularity exposed:", granularity_exposed(banner("Got it"), lexicon))
