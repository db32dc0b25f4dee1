"""
Anatomy of a consent-surface snapshot
=====================================

A snapshot is a frozen, serializable description of one consent surface:
viewport, scrollable extent, panes, and a flat node list with geometry.
Everything downstream (detection, traversal, scoring) reads only this.
"""

import json

from consentaudit import (
    parse_snapshot,
    salience,
    serialize_snapshot,
    snapshot_from_dict,
    visible_in_viewport,
)

# A minimal two-button banner. Node order is document order; the first
# pane is the one a visitor sees before any interaction.
doc = {
    "version": 1,
    "meta": {"source": "demo:banner", "note": "", "breakpoint": "desktop",
             "persistent": []},
    "viewport": {"width": 1440, "height": 900, "name": "desktop"},
    "surface": {"rootNodeId": "n0", "scrollable": False, "scrollHeight": 900},
    "panes": [{"id": "main", "initial": True}],
    "nodes": [
        {"id": "n0", "paneId": "main", "role": "container",
         "bounds": {"x": 340, "y": 340, "w": 760, "h": 220}},
        {"id": "n1", "paneId": "main", "role": "button", "label": "Accept all",
         "emphasisClass": "primary",
         "bounds": {"x": 372, "y": 420, "w": 220, "h": 52},
         "effects": [{"kind": "dismiss", "target": "main"}]},
        {"id": "n2", "paneId": "main", "role": "button", "label": "Reject all",
         "bounds": {"x": 620, "y": 424, "w": 130, "h": 44},
         "effects": [{"kind": "dismiss", "target": "main"}]},
    ],
}

snapshot = snapshot_from_dict(doc)

# Serialization is canonical: sorted keys, fixed float formatting, one
# trailing newline. Re-parsing and re-serializing is byte-stable, which
# is what makes golden files trustworthy.
text = serialize_snapshot(snapshot)
assert serialize_snapshot(parse_snapshot(text)) == text
print("canonical bytes:", len(text))

# Geometry helpers answer the two questions the engine keeps asking:
# is this node inside the current viewport window, and how much visual
# weight does it carry?
reject = snapshot.node("n2")
print("reject visible at load:", visible_in_viewport(reject, 0, snapshot))
print("accept salience:", salience(snapshot.node("n1")))
print("reject salience:", salience(reject))

# The validator rejects malformed documents outright rather than
# guessing. A snapshot that loads is a snapshot the engine can audit.
bad = dict(doc, panes=[])
try:
    snapshot_from_dict(bad)
except Exception as exc:
    print("rejected:", type(exc).__name__, "-", str(exc)[:60])

print(json.dumps({"nodes": len(doc["nodes"]), "panes": 1}, indent=2))
