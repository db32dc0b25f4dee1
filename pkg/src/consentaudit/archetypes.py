"""Parameterized synthetic consent surfaces for the four layout archetypes.

The four kinds share one policy skeleton and one material-choice
inventory: a single accept, a single reject, three category toggles with
one-sentence rationales, a save control, a disclosure path to those
toggles, and a persistent change-consent affordance. The kinds differ
only in layout and interaction structure:

* CO_PRESENT: accept and reject side by side, equally salient, both in
  the landing viewport.
* SCROLL_WALL: reject placed ``scrollDepthVh`` viewports below the fold
  behind policy prose; accept up top.
* ACCORDION: disclosure panels on one pane; toggles and save sit inside
  collapsed panels (split across two panels at revealCount >= 3). Hidden
  content carries its post-expansion geometry, so collapsed siblings may
  overlap it; visual realism is out of scope.
* MULTI_STEP: staged panes behind continuation buttons; the reject on
  the first pane is visible but disabled, toggles are spread across the
  later panes, and the save sits below the fold of the last pane.

``focusTrap`` injects a roving cluster of no-effect link decoys whose
ring position precedes the meaningful alternative, so keyboard traversal
pays one focus loop and pointer traversal is unaffected.

Continuation and disclosure affordances are deliberately labeled outside
the classified vocabulary ("Continue", "Cookie details", category
headers): a settings-classified gateway would itself be a meaningful
alternative and collapse the archetype's staging into one interaction.

Generation is pure: (kind, params, seed) fully determines the document,
with the seed only stamped into provenance. Corpus sampling uses NumPy's
PCG64 generator seeded through SeedSequence spawning, so corpora are
byte-identical across runs for a fixed spec.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from importlib import resources

import numpy as np

from .snapshot import BREAKPOINTS, Snapshot, snapshot_from_dict


class ArchetypeKind(str, Enum):
    SCROLL_WALL = "SCROLL_WALL"
    ACCORDION = "ACCORDION"
    MULTI_STEP = "MULTI_STEP"
    CO_PRESENT = "CO_PRESENT"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ArchetypeParams:
    scroll_depth_vh: float = 1.5  # SCROLL_WALL: reject depth below the fold
    reveal_count: int = 2  # ACCORDION: number of disclosure panels
    pane_count: int = 3  # MULTI_STEP: total panes including the first
    animation_ms_per_gate: int = 250  # gate duration; CO_PRESENT decline feedback
    focus_trap: bool = False
    breakpoint: str = "desktop"

    def validate(self, kind: ArchetypeKind) -> None:
        if self.breakpoint not in BREAKPOINTS:
            raise ValueError(f"unknown breakpoint {self.breakpoint!r}")
        if self.animation_ms_per_gate < 0:
            raise ValueError("animationMsPerGate must be >= 0")
        if kind is ArchetypeKind.SCROLL_WALL and not self.scroll_depth_vh > 1:
            raise ValueError("SCROLL_WALL requires scrollDepthVh > 1")
        if kind is ArchetypeKind.ACCORDION and self.reveal_count < 1:
            raise ValueError("ACCORDION requires revealCount >= 1")
        if kind is ArchetypeKind.MULTI_STEP and self.pane_count < 2:
            raise ValueError("MULTI_STEP requires paneCount >= 2")


# Shared material inventory: (slug, toggle label, one-sentence rationale)
TOGGLE_INVENTORY = (
    ("analytics", "Analytics cookies", "Helps us measure how pages perform."),
    ("advertising", "Advertising cookies", "Allows partners to show relevant ads."),
    ("personalisation", "Personalisation cookies", "Tailors content to your interests."),
)

_TITLE = "We value your privacy"
_BODY = (
    "We and our partners store and access information on your device to "
    "provide and improve this service."
)
_ACCEPT = "Accept all"
_REJECT = "Reject all"
_GATEWAY = "Cookie details"
_SAVE = "Save choices"
_ADVANCED = "Advanced choices"
_FOOTER = "Change consent"
_DECOYS = ("About us", "Careers", "Press")


@dataclass(frozen=True)
class _Layout:
    width: int
    vh: int
    x: int  # content left edge
    content_w: int
    primary_w: int
    primary_h: int
    secondary_w: int
    secondary_h: int
    reject_w: int
    reject_h: int


_LAYOUTS = {
    "desktop": _Layout(1440, 900, 372, 696, 200, 50, 160, 44, 120, 44),
    "mobile": _Layout(390, 844, 24, 342, 342, 48, 342, 44, 342, 44),
}


def _root_box(L: _Layout) -> tuple[int, int]:
    """Dialog frame x and width: content plus padding, clipped to the
    viewport (full-bleed sheets on narrow screens)."""
    x = max(0, L.x - 32)
    right = min(L.width, L.x + L.content_w + 32)
    return x, right - x


def _node(
    nid: str,
    pane: str,
    role: str,
    x: int,
    y: int,
    w: int,
    h: int,
    label: str | None = None,
    **kw,
) -> dict:
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


def _toggle_row(
    prefix: str, pane: str, L: _Layout, y: int, slug: str, label: str,
    rationale: str, visible: bool = True,
) -> list[dict]:
    tid = f"{prefix}_toggle_{slug}"
    text_w = L.content_w - 64
    return [
        _node(tid, pane, "toggle", L.x, y, 52, 32, label,
              visible=visible, effects=[{"kind": "toggleState", "target": tid}]),
        _node(f"{prefix}x_text_{slug}", pane, "text", L.x + 60, y, text_w, 32,
              rationale, visible=visible, rationaleFor=tid),
    ]


def _trap_cluster(prefix: str, pane: str, L: _Layout, y: int) -> list[dict]:
    box = f"{prefix}_trapbox"
    nodes = [_node(box, pane, "container", L.x, y, L.content_w, 24, None)]
    step = L.content_w // len(_DECOYS)
    for i, label in enumerate(_DECOYS):
        nodes.append(
            _node(f"{prefix}{chr(ord('a') + i)}_decoy", pane, "link",
                  L.x + i * step, y, 72, 20, label,
                  parentId=box, rovingTabIndex=True)
        )
    return nodes


def _settings_pane(pane: str, L: _Layout, prefix: str = "b") -> list[dict]:
    """The shared toggle pane reached through the gateway."""
    nodes = [
        _node(f"{prefix}00_back", pane, "button", L.x, 40, 80, 32, "Back"),
        _node(f"{prefix}01_title", pane, "text", L.x, 100, L.content_w, 36,
              "Cookie preferences"),
    ]
    y = 180
    for i, (slug, label, rationale) in enumerate(TOGGLE_INVENTORY):
        nodes.extend(_toggle_row(f"{prefix}{10 + 2 * i}", pane, L, y, slug, label, rationale))
        y += 70
    nodes.append(
        _node(f"{prefix}30_save", pane, "button", L.x, y + 30,
              L.secondary_w, L.secondary_h, _SAVE,
              emphasisClass="secondary", effects=[{"kind": "dismiss", "target": pane}])
    )
    return nodes


def _finish(
    kind: ArchetypeKind,
    params: ArchetypeParams,
    seed: int,
    panes: list[dict],
    nodes: list[dict],
    root_id: str,
    scrollable: bool,
    scroll_height: int,
    persistent: list[str],
) -> Snapshot:
    L = _LAYOUTS[params.breakpoint]
    doc = {
        "version": 1,
        "meta": {
            "source": f"synthetic:{kind.value.lower()}:{seed}",
            "note": f"{kind.value} at {params.breakpoint}",
            "breakpoint": params.breakpoint,
            "persistent": persistent,
        },
        "viewport": {"width": L.width, "height": L.vh, "name": params.breakpoint},
        "surface": {
            "rootNodeId": root_id,
            "scrollable": scrollable,
            "scrollHeight": scroll_height,
        },
        "panes": panes,
        "nodes": nodes,
    }
    return snapshot_from_dict(doc)


# --------------------------------------------------------------------------
# Kind-specific layouts


def _co_present(params: ArchetypeParams, seed: int) -> Snapshot:
    L = _LAYOUTS[params.breakpoint]
    mobile = params.breakpoint == "mobile"
    rx, rw = _root_box(L)
    nodes = [
        _node("a00_root", "pane1", "container", rx, 40, rw, L.vh - 80, None),
        _node("a01_title", "pane1", "text", L.x, 120, L.content_w, 40, _TITLE),
        _node("a02_body", "pane1", "text", L.x, 180, L.content_w, 120, _BODY),
        _node("a03_gateway", "pane1", "link", L.x, 340, 140, 24, _GATEWAY,
              effects=[{"kind": "navigate", "target": "pane2"}]),
    ]
    if mobile:
        accept_xy = (L.x, 560)
        reject_xy = (L.x, 630)
        footer_y = 700
    else:
        accept_xy = (L.x, 400)
        reject_xy = (L.x + L.primary_w + 40, 400)
        footer_y = 480
    nodes.append(
        _node("a04_accept", "pane1", "button", *accept_xy, L.primary_w, L.primary_h,
              _ACCEPT, emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}])
    )
    if params.focus_trap:
        nodes.extend(_trap_cluster("a05", "pane1", L, footer_y + 60))
    # decline feedback carries the calibrated dismiss animation; the route
    # has no gating transition, so this is its only timed element
    nodes.append(
        _node("a07_reject", "pane1", "button", *reject_xy, L.primary_w, L.primary_h,
              _REJECT, emphasisClass="primary",
              animationMs=params.animation_ms_per_gate,
              effects=[{"kind": "dismiss", "target": "pane1"}])
    )
    nodes.append(
        _node("a08_footer", "pane1", "link", L.x, footer_y, 150, 20, _FOOTER)
    )
    nodes.extend(_settings_pane("pane2", L))
    return _finish(
        ArchetypeKind.CO_PRESENT, params, seed,
        [{"id": "pane1", "initial": True}, {"id": "pane2", "initial": False}],
        nodes, "a00_root", False, L.vh, ["a08_footer"],
    )


def _scroll_wall(params: ArchetypeParams, seed: int) -> Snapshot:
    L = _LAYOUTS[params.breakpoint]
    depth_px = round(params.scroll_depth_vh * L.vh)
    reject_bottom = L.vh + depth_px
    rx, rw = _root_box(L)
    nodes = [
        _node("a00_root", "pane1", "container", rx, 0, rw, reject_bottom + 40, None),
        _node("a01_title", "pane1", "text", L.x, 40, L.content_w, 40, _TITLE),
        _node("a02_body", "pane1", "text", L.x, 110, L.content_w, 160, _BODY),
        _node("a03_gateway", "pane1", "link", L.x, 290, 140, 24, _GATEWAY,
              effects=[{"kind": "navigate", "target": "pane2"}]),
        _node("a04_accept", "pane1", "button", L.x, 340, L.primary_w, L.primary_h,
              _ACCEPT, emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
    ]
    if params.focus_trap:
        nodes.extend(_trap_cluster("a10", "pane1", L, 420))
    # the wall: policy prose filling the space above the reject
    y = 470
    block = 0
    while y + 320 < reject_bottom - 70:
        nodes.append(
            _node(f"a20_wall{block:02d}", "pane1", "text", L.x, y, L.content_w, 300,
                  "Full details of processing purposes and retention follow.")
        )
        y += 360
        block += 1
    nodes.append(
        _node("a90_reject", "pane1", "button", L.x, reject_bottom - L.reject_h,
              L.reject_w, L.reject_h, _REJECT, emphasisClass="plain",
              effects=[{"kind": "dismiss", "target": "pane1"}])
    )
    nodes.append(
        _node("a95_footer", "pane1", "link", L.x, reject_bottom + 8, 150, 20, _FOOTER)
    )
    nodes.extend(_settings_pane("pane2", L))
    return _finish(
        ArchetypeKind.SCROLL_WALL, params, seed,
        [{"id": "pane1", "initial": True}, {"id": "pane2", "initial": False}],
        nodes, "a00_root", True, reject_bottom + 42, ["a95_footer"],
    )


def _accordion(params: ArchetypeParams, seed: int) -> Snapshot:
    L = _LAYOUTS[params.breakpoint]
    k = params.reveal_count
    mobile = params.breakpoint == "mobile"
    anim = params.animation_ms_per_gate
    header_h = 56
    spacing = 100 if mobile else 112

    if k == 1:
        header_ys = [360]
    else:
        # the operative panel header straddles the fold: its bottom lands
        # exactly 20% of a viewport below it, forcing one calibrated scroll
        scroll_px = round(0.2 * L.vh)
        last_y = L.vh + scroll_px - header_h
        header_ys = [last_y - spacing * (k - j) for j in range(1, k + 1)]

    rx, rw = _root_box(L)
    nodes = [
        _node("a00_root", "pane1", "container", rx, 0, rw,
              max(880, header_ys[-1] + header_h + 20), None),
        _node("a01_title", "pane1", "text", L.x, 40, L.content_w, 40, _TITLE),
        _node("a02_body", "pane1", "text", L.x, 110, L.content_w, 80, _BODY),
    ]
    if mobile:
        nodes.append(
            _node("a03_accept", "pane1", "button", L.x, 210, L.primary_w,
                  L.primary_h, _ACCEPT, emphasisClass="primary",
                  effects=[{"kind": "dismiss", "target": "pane1"}])
        )
    else:
        nodes.append(
            _node("a03_accept", "pane1", "button", L.x + L.content_w - L.primary_w,
                  210, L.primary_w, L.primary_h, _ACCEPT, emphasisClass="primary",
                  effects=[{"kind": "dismiss", "target": "pane1"}])
        )
    if params.focus_trap:
        nodes.extend(_trap_cluster("a04", "pane1", L, 290))

    # panel content geometry (post-expansion coordinates)
    if k == 1:
        toggle_ys = [432, 480, 528]
        save_y, advanced_y, reject_y = 584, 648, 700
    elif mobile:
        toggle_ys = [600, 656, 712]
        save_y, advanced_y, reject_y = 770, 830, 874
    else:
        toggle_ys = [700, 748, 796]
        save_y, advanced_y, reject_y = 850, 910, 950

    split = k >= 3  # toggles in panel k-1, save behind one more reveal
    for j in range(1, k + 1):
        hid = f"a{10 + 2 * j}_sec{j}"
        body_id = f"a{11 + 2 * j}_sec{j}body"
        nodes.append(
            _node(hid, "pane1", "expander", L.x, header_ys[j - 1], L.content_w,
                  header_h, f"Purpose group {j}", animationMs=anim,
                  effects=[{"kind": "reveal", "target": body_id}])
        )
        carries_toggles = (j == k - 1) if split else (j == k)
        carries_save = j == k
        children: list[dict] = []
        if carries_toggles:
            for i, (slug, label, rationale) in enumerate(TOGGLE_INVENTORY):
                children.extend(
                    _toggle_row(f"{body_id}_{10 + 2 * i}", "pane1", L,
                                toggle_ys[i], slug, label, rationale,
                                visible=False)
                )
        if carries_save:
            children.append(
                _node(f"{body_id}_30_save", "pane1", "button", L.x, save_y,
                      L.secondary_w, L.secondary_h, _SAVE, emphasisClass="secondary",
                      visible=False,
                      effects=[{"kind": "dismiss", "target": "pane1"}])
            )
            adv_body = f"{body_id}_41_advbody"
            children.append(
                _node(f"{body_id}_40_advanced", "pane1", "expander", L.x,
                      advanced_y, 180, 32, _ADVANCED, visible=False,
                      animationMs=anim + 40,
                      effects=[{"kind": "reveal", "target": adv_body}])
            )
            # the advanced subtree hangs off the root, not the panel body:
            # expanding the panel must not transitively reveal the reject
            children.append(
                _node(adv_body, "pane1", "container", L.x, reject_y,
                      L.content_w, 52, None, visible=False,
                      parentId="a00_root")
            )
            children.append(
                _node(f"{body_id}_42_reject", "pane1", "button", L.x, reject_y,
                      L.reject_w, L.reject_h, _REJECT, emphasisClass="plain",
                      visible=False, parentId=adv_body,
                      effects=[{"kind": "dismiss", "target": "pane1"}])
            )
        if not children:
            children.append(
                _node(f"{body_id}_05_text", "pane1", "text", L.x, 600,
                      L.content_w, 40,
                      "These purposes are described in our policy.",
                      visible=False)
            )
        top = min(c["bounds"]["y"] for c in children)
        bottom = max(c["bounds"]["y"] + c["bounds"]["h"] for c in children)
        nodes.append(
            _node(body_id, "pane1", "container", L.x, top, L.content_w,
                  bottom - top, None, visible=False)
        )
        for c in children:
            c.setdefault("parentId", body_id)
        nodes.extend(children)

    nodes.append(
        _node("a80_footer", "pane1", "link", L.x, header_ys[-1] + header_h + 12,
              150, 20, _FOOTER)
    )
    content_bottom = header_ys[-1] + header_h + 40
    scrollable = content_bottom > L.vh
    return _finish(
        ArchetypeKind.ACCORDION, params, seed,
        [{"id": "pane1", "initial": True}],
        nodes, "a00_root", scrollable,
        content_bottom if scrollable else L.vh, ["a80_footer"],
    )


def _multi_step(params: ArchetypeParams, seed: int) -> Snapshot:
    L = _LAYOUTS[params.breakpoint]
    k = params.pane_count
    mobile = params.breakpoint == "mobile"
    anim = params.animation_ms_per_gate
    # saveDepth rides on scrollDepthVh for this kind: the fraction above
    # 1.0 is how far below the last pane's fold the save control sits
    save_depth_px = round(max(0.0, params.scroll_depth_vh - 1.0) * L.vh)

    panes = [{"id": f"pane{j}", "initial": j == 1} for j in range(1, k + 1)]
    step_text = f"Step 1 of {k}"
    if mobile:
        accept_xy = (L.x, 560)
        reject_xy = (L.x, 630)
        cont_y = 700
        footer_y = 770
    else:
        accept_xy = (L.x, 700)
        reject_xy = (L.x + L.primary_w + 40, 700)
        cont_y = 770
        footer_y = 840
    rx, rw = _root_box(L)
    nodes = [
        _node("a00_root", "pane1", "container", rx, 40, rw, L.vh - 80, None),
        _node("a01_title", "pane1", "text", L.x, 120, L.content_w, 40, _TITLE),
        _node("a02_step", "pane1", "text", L.x, 180, L.content_w, 24, step_text,
              celebratory=True),
        _node("a03_body", "pane1", "text", L.x, 220, L.content_w, 100, _BODY),
        _node("a04_accept", "pane1", "button", *accept_xy, L.primary_w,
              L.primary_h, _ACCEPT, emphasisClass="primary",
              effects=[{"kind": "dismiss", "target": "pane1"}]),
        _node("a05_reject", "pane1", "button", *reject_xy, L.reject_w,
              L.reject_h, _REJECT, emphasisClass="plain", enabled=False),
        _node("a06_continue", "pane1", "button", L.x, cont_y, L.secondary_w,
              L.secondary_h, "Continue", emphasisClass="secondary", animationMs=anim,
              effects=[{"kind": "navigate", "target": "pane2"}]),
        _node("a07_footer", "pane1", "link", L.x, footer_y, 150, 20, _FOOTER),
    ]

    # toggle distribution: one per intermediate pane, remainder with the save
    slugs = list(TOGGLE_INVENTORY)
    per_pane: dict[int, list] = {j: [] for j in range(2, k + 1)}
    for j in range(2, k):
        per_pane[j].append(slugs.pop(0))
    per_pane[k].extend(slugs)

    for j in range(2, k + 1):
        p = chr(ord("a") + j - 1)
        pane = f"pane{j}"
        last = j == k
        nodes.append(_node(f"{p}00_back", pane, "button", L.x, 40, 80, 32, "Back"))
        nodes.append(
            _node(f"{p}01_step", pane, "text", L.x, 100, L.content_w, 24,
                  f"Step {j} of {k}", celebratory=True)
        )
        if last and params.focus_trap:
            nodes.extend(_trap_cluster(f"{p}02", pane, L, 140))
        y = 180
        for slug, label, rationale in per_pane[j]:
            idx = next(i for i, t in enumerate(TOGGLE_INVENTORY) if t[0] == slug)
            nodes.extend(
                _toggle_row(f"{p}{10 + 2 * idx}", pane, L, y, slug, label, rationale)
            )
            y += 70
        if last:
            nodes.append(
                _node(f"{p}30_save", pane, "button", L.x,
                      L.vh + save_depth_px - L.secondary_h,
                      L.secondary_w, L.secondary_h, _SAVE, emphasisClass="secondary",
                      effects=[{"kind": "dismiss", "target": pane}])
            )
        else:
            nodes.append(
                _node(f"{p}30_continue", pane, "button", L.x, y + 40,
                      L.secondary_w, L.secondary_h, "Continue",
                      emphasisClass="secondary", animationMs=anim,
                      effects=[{"kind": "navigate", "target": f"pane{j + 1}"}])
            )

    scrollable = save_depth_px > 0
    return _finish(
        ArchetypeKind.MULTI_STEP, params, seed, panes, nodes, "a00_root",
        scrollable, L.vh + save_depth_px if scrollable else L.vh, ["a07_footer"],
    )


_BUILDERS = {
    ArchetypeKind.CO_PRESENT: _co_present,
    ArchetypeKind.SCROLL_WALL: _scroll_wall,
    ArchetypeKind.ACCORDION: _accordion,
    ArchetypeKind.MULTI_STEP: _multi_step,
}


def generate_archetype(
    kind: ArchetypeKind,
    params: ArchetypeParams | None = None,
    seed: int = 0,
) -> Snapshot:
    """Deterministic snapshot for one archetype; the seed is provenance only."""
    params = params or ArchetypeParams()
    params.validate(kind)
    return _BUILDERS[kind](params, seed)


def canonical_calibration() -> dict[ArchetypeKind, ArchetypeParams]:
    """The bundled parameter set reproducing the published base PSI values
    under default weights at the desktop breakpoint."""
    raw = json.loads(
        resources.files("consentaudit").joinpath("data/calibration.json").read_text()
    )
    out: dict[ArchetypeKind, ArchetypeParams] = {}
    for name, fields in raw["archetypes"].items():
        out[ArchetypeKind(name)] = ArchetypeParams(
            scroll_depth_vh=fields.get("scrollDepthVh", 1.5),
            reveal_count=fields.get("revealCount", 2),
            pane_count=fields.get("paneCount", 3),
            animation_ms_per_gate=fields.get("animationMsPerGate", 250),
            focus_trap=fields.get("focusTrap", False),
            breakpoint=fields.get("breakpoint", "desktop"),
        )
    return out


# --------------------------------------------------------------------------
# Corpus


@dataclass(frozen=True)
class CorpusSpec:
    count_per_archetype: int = 50
    seed: int = 20250801
    breakpoints: tuple[str, ...] = ("desktop", "mobile")
    policies: tuple[str, ...] = ("pointer", "keyboard")
    scroll_depth_range: tuple[float, float] = (1.1, 1.6)
    reveal_counts: tuple[int, ...] = (1, 2, 3)
    pane_counts: tuple[int, ...] = (3, 4)
    gate_ms_range: tuple[int, int] = (200, 450)
    save_depth_range: tuple[float, float] = (0.6, 1.2)
    trap_probability: float = 0.8
    co_present_anim_range: tuple[int, int] = (0, 120)
    mobile_scroll_factor: float = 1.3
    mobile_gate_surcharge_ms: int = 60

    def __post_init__(self):
        if self.count_per_archetype <= 0:
            raise ValueError("countPerArchetype must be positive")
        if not self.breakpoints or not self.policies:
            raise ValueError("breakpoints and policies must be non-empty")


@dataclass(frozen=True)
class CorpusItem:
    item_id: str
    kind: ArchetypeKind
    params: ArchetypeParams
    breakpoint: str
    snapshot: Snapshot

    def provenance(self) -> dict:
        return {
            "itemId": self.item_id,
            "kind": self.kind.value,
            "breakpoint": self.breakpoint,
            "params": {
                "scrollDepthVh": self.params.scroll_depth_vh,
                "revealCount": self.params.reveal_count,
                "paneCount": self.params.pane_count,
                "animationMsPerGate": self.params.animation_ms_per_gate,
                "focusTrap": self.params.focus_trap,
                "breakpoint": self.params.breakpoint,
            },
        }


def _draw_params(
    kind: ArchetypeKind, breakpoint: str, spec: CorpusSpec, rng: np.random.Generator
) -> ArchetypeParams:
    mobile = breakpoint == "mobile"
    surcharge = spec.mobile_gate_surcharge_ms if mobile else 0
    gate = int(rng.integers(spec.gate_ms_range[0], spec.gate_ms_range[1] + 1))
    if kind is ArchetypeKind.CO_PRESENT:
        lo, hi = spec.co_present_anim_range
        anim = int(rng.integers(lo, hi + 1)) + surcharge
        return ArchetypeParams(
            animation_ms_per_gate=anim, breakpoint=breakpoint
        )
    if kind is ArchetypeKind.SCROLL_WALL:
        depth = float(rng.uniform(*spec.scroll_depth_range))
        if mobile:
            depth *= spec.mobile_scroll_factor
        return ArchetypeParams(
            scroll_depth_vh=depth,
            animation_ms_per_gate=gate + surcharge,
            breakpoint=breakpoint,
        )
    if kind is ArchetypeKind.ACCORDION:
        return ArchetypeParams(
            reveal_count=int(rng.choice(spec.reveal_counts)),
            animation_ms_per_gate=gate + surcharge,
            breakpoint=breakpoint,
        )
    save_depth = float(rng.uniform(*spec.save_depth_range))
    return ArchetypeParams(
        pane_count=int(rng.choice(spec.pane_counts)),
        scroll_depth_vh=1.0 + save_depth,
        animation_ms_per_gate=gate + surcharge,
        focus_trap=bool(rng.random() < spec.trap_probability),
        breakpoint=breakpoint,
    )


def generate_corpus(spec: CorpusSpec) -> list[CorpusItem]:
    """Seeded synthetic corpus; same spec gives byte-identical documents."""
    kinds = list(ArchetypeKind)
    total = len(kinds) * len(spec.breakpoints) * spec.count_per_archetype
    children = np.random.SeedSequence(spec.seed).spawn(total)
    items: list[CorpusItem] = []
    idx = 0
    for kind in kinds:
        for breakpoint in spec.breakpoints:
            for i in range(spec.count_per_archetype):
                rng = np.random.default_rng(children[idx])
                params = _draw_params(kind, breakpoint, spec, rng)
                item_seed = spec.seed + idx
                snapshot = generate_archetype(kind, params, seed=item_seed)
                items.append(
                    CorpusItem(
                        item_id=f"{kind.value.lower()}_{breakpoint}_{i:03d}",
                        kind=kind,
                        params=params,
                        breakpoint=breakpoint,
                        snapshot=snapshot,
                    )
                )
                idx += 1
    return items
