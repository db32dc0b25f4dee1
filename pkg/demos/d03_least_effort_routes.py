"""
Least-effort routes through a consent surface
=============================================

The traversal engine plays a determined but minimal visitor: it finds
the cheapest route (fewest interactions, then least scroll, then least
time) from the first-encounter state to the first meaningful
alternative, under a pointer or keyboard policy.
"""

from consentaudit import (
    ArchetypeKind,
    Policy,
    canonical_calibration,
    compute_components,
    default_lexicon,
    generate_archetype,
    least_effort_traverse,
    render_event_strip,
)

lexicon = default_lexicon()
calibration = canonical_calibration()

# The four bundled archetypes cover the common refusal topologies:
# a co-present reject, a scroll wall, an accordion of reveals, and a
# multi-step settings flow.
for kind in (ArchetypeKind.CO_PRESENT, ArchetypeKind.SCROLL_WALL,
             ArchetypeKind.ACCORDION, ArchetypeKind.MULTI_STEP):
    snapshot = generate_archetype(kind, calibration[kind])
    trace = least_effort_traverse(snapshot, Policy.POINTER, lexicon)
    comps = compute_components(trace, snapshot, lexicon)
    print(f"{kind.value:12} {render_event_strip(trace):55} "
          f"D/vh={comps.distance_vh:.2f} T={comps.time_s:.2f}s "
          f"H={comps.hidden_reveals}")

# The same surface can cost more under a keyboard. Focus traps and tab
# travel show up as F loops and extra seconds; the pointer never sees
# them.
snapshot = generate_archetype(
    ArchetypeKind.MULTI_STEP,
    calibration[ArchetypeKind.MULTI_STEP],
)
for policy in (Policy.POINTER, Policy.KEYBOARD):
    trace = least_effort_traverse(snapshot, policy, lexicon)
    comps = compute_components(trace, snapshot, lexicon)
    print(f"{policy.value:9} T={comps.time_s:.3f}s F={comps.focus_loops}")

# When no qualifying route exists the trace is censored: no events, a
# budget marker, and components that read as lower bounds.
from consentaudit import snapshot_from_dict  # noqa: E402

accept_only = snapshot_from_dict({
    "version": 1,
    "meta": {"source": "demo:wall", "note": "", "breakpoint": "desktop",
             "persistent": []},
    "viewport": {"width": 1440, "height": 900, "name": "desktop"},
    "surface": {"rootNodeId": "n0", "scrollable": False, "scrollHeight": 900},
    "panes": [{"id": "main", "initial": True}],
    "nodes": [
        {"id": "n0", "paneId": "main", "role": "container",
         "bounds": {"x": 340, "y": 340, "w": 760, "h": 220}},
        {"id": "n1", "paneId": "main", "role": "button",
         "label": "Accept all", "emphasisClass": "primary",
         "bounds": {"x": 372, "y": 420, "w": 220, "h": 52},
         "effects": [{"kind": "dismiss", "target": "main"}]},
    ],
})
trace = least_effort_traverse(accept_only, Policy.POINTER, lexicon)
print("censored:", trace.censored, "strip:", render_event_strip(trace))
