"""Shared builders for test pages.

Keeps the snapshot-document plumbing out of individual tests: `node` and
`make_doc` assemble valid version-1 documents with one or more panes, so
a test states only the geometry it cares about.
"""

from __future__ import annotations

from consentaudit import snapshot_from_dict


def node(nid, pane, role, x, y, w, h, label=None, **kw):
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


def make_doc(nodes, *, bp="desktop", panes=("pane1",), scrollable=False,
             scroll_height=None, evh=None, persistent=(), source="test:page",
             note=""):
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


def make_page(nodes, **kw):
    return snapshot_from_dict(make_doc(nodes, **kw))


def dismiss(pane="pane1"):
    return [{"kind": "dismiss", "target": pane}]


def navigate(pane):
    return [{"kind": "navigate", "target": pane}]


def reveal(target):
    return [{"kind": "reveal", "target": target}]


def toggle_state(target):
    return [{"kind": "toggleState", "target": target}]


def co_present_page(**kw):
    """Accept and reject side by side, both in the first viewport."""
    return make_page(
        [
            node("a00_root", "pane1", "container", 340, 340, 760, 260),
            node("a01_body", "pane1", "text", 372, 370, 656, 40,
                 "We use cookies."),
            node("a02_accept", "pane1", "button", 372, 440, 200, 50,
                 "Accept all", emphasisClass="primary", effects=dismiss()),
            node("a03_reject", "pane1", "button", 612, 440, 120, 44,
                 "Reject all", effects=dismiss()),
        ],
        **kw,
    )
