"""Serialized consent-surface snapshots: document format, validation, geometry.

A snapshot is a static, interaction-free description of a consent interface
at first encounter: a viewport, a scrollable (or fixed) surface, one or more
panes, and a flat list of UI nodes with pixel bounds and declared effects.
Version 1 documents are strict: unknown keys are rejected, every reference
must resolve, and geometry must fit the viewport horizontally.

Key invariants:
  - node ids are unique; panes have exactly one ``initial: true`` entry
  - document order is node-id order (canonical serialization sorts nodes
    by id, so id order is the only order that survives a round trip)
  - ``serialize_snapshot(parse_snapshot(text))`` is canonical: alphabetical
    keys, id-sorted nodes and panes, two-space indent, trailing newline;
    parsing its own output yields a structurally equal snapshot
  - all coordinates are integer pixels, which keeps serialization
    byte-stable across platforms
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

SCHEMA_VERSION = 1

# Named breakpoints used by generators and the CLI.
BREAKPOINTS: dict[str, tuple[int, int]] = {
    "desktop": (1440, 900),
    "mobile": (390, 844),
}


class SnapshotError(ValueError):
    """Base class for snapshot parsing and validation failures."""


class ParseError(SnapshotError):
    """Document is not well-formed or violates the version-1 schema.

    ``path`` points at the offending field (e.g. ``nodes[3].bounds.w``).
    """

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class ValidationError(SnapshotError):
    """Well-formed document with unsatisfiable cross-references or geometry."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class NoSurfaceRootError(ValidationError):
    """The document declares no resolvable consent-surface root."""


class Role(str, Enum):
    BUTTON = "button"
    LINK = "link"
    TOGGLE = "toggle"
    CHECKBOX = "checkbox"
    EXPANDER = "expander"
    TEXT = "text"
    CONTAINER = "container"

    def __str__(self) -> str:  # serialize as bare value
        return self.value


INTERACTIVE_ROLES = frozenset(
    {Role.BUTTON, Role.LINK, Role.TOGGLE, Role.CHECKBOX, Role.EXPANDER}
)

TOGGLE_ROLES = frozenset({Role.TOGGLE, Role.CHECKBOX})


class EffectKind(str, Enum):
    REVEAL = "reveal"  # target node (and subtree) becomes visible
    NAVIGATE = "navigate"  # target pane becomes active
    TOGGLE_STATE = "toggleState"  # target node flips its selection state
    DISMISS = "dismiss"  # target pane (the surface) goes away

    def __str__(self) -> str:
        return self.value


class EmphasisClass(str, Enum):
    PRIMARY = "primary"
    SECONDARY = "secondary"
    PLAIN = "plain"

    def __str__(self) -> str:
        return self.value


# Salience multipliers by emphasis class (defaults; overridable).
@dataclass(frozen=True)
class SalienceWeights:
    primary: float = 2.0
    secondary: float = 1.25
    plain: float = 1.0

    def factor(self, emphasis: EmphasisClass) -> float:
        if emphasis is EmphasisClass.PRIMARY:
            return self.primary
        if emphasis is EmphasisClass.SECONDARY:
            return self.secondary
        return self.plain


@dataclass(frozen=True)
class Bounds:
    """Pixel rectangle; ``x``/``y`` are the top-left corner."""

    x: int
    y: int
    w: int
    h: int

    @property
    def right(self) -> int:
        return self.x + self.w

    @property
    def bottom(self) -> int:
        return self.y + self.h

    def to_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "w": self.w, "h": self.h}


@dataclass(frozen=True)
class Viewport:
    width: int
    height: int
    name: str | None = None

    def to_dict(self) -> dict:
        d: dict = {"width": self.width, "height": self.height}
        if self.name is not None:
            d["name"] = self.name
        return d


@dataclass(frozen=True)
class Pane:
    id: str
    initial: bool = False

    def to_dict(self) -> dict:
        return {"id": self.id, "initial": self.initial}


@dataclass(frozen=True)
class Effect:
    kind: EffectKind
    target: str  # node id for reveal/toggleState, pane id for navigate/dismiss

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "target": self.target}


@dataclass(frozen=True)
class UINode:
    """One interface element.

    ``animationMs`` semantics: a non-negative integer is a measured gate
    duration in milliseconds; ``None`` means the duration was not measured
    (the traversal engine then charges a fixed wait budget, but only for
    activations that gate access to a new pane or reveal).
    """

    id: str
    pane_id: str
    role: Role
    bounds: Bounds
    parent_id: str | None = None
    label: str = ""
    accessible_name: str = ""
    visible: bool = True
    enabled: bool = True
    tab_index: int | None = None
    roving_tab_index: bool = False
    emphasis: EmphasisClass = EmphasisClass.PLAIN
    celebratory: bool = False
    rationale_for: str | None = None
    animation_ms: int | None = 0
    effects: tuple[Effect, ...] = ()

    @property
    def interactive(self) -> bool:
        return self.role in INTERACTIVE_ROLES

    def effect_targets(self, kind: EffectKind) -> tuple[str, ...]:
        return tuple(e.target for e in self.effects if e.kind is kind)

    @property
    def gates(self) -> bool:
        """True when activation opens a pane or reveals content."""
        return any(
            e.kind in (EffectKind.REVEAL, EffectKind.NAVIGATE) for e in self.effects
        )

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "paneId": self.pane_id,
            "parentId": self.parent_id,
            "role": self.role.value,
            "label": self.label,
            "accessibleName": self.accessible_name,
            "bounds": self.bounds.to_dict(),
            "visible": self.visible,
            "enabled": self.enabled,
            "tabIndex": self.tab_index,
            "rovingTabIndex": self.roving_tab_index,
            "emphasisClass": self.emphasis.value,
            "celebratory": self.celebratory,
            "rationaleFor": self.rationale_for,
            "animationMs": self.animation_ms,
            "effects": [e.to_dict() for e in self.effects],
        }


@dataclass(frozen=True)
class Surface:
    root_node_id: str
    scrollable: bool
    scroll_height: int
    effective_viewport_height: int | None = None

    def to_dict(self) -> dict:
        return {
            "rootNodeId": self.root_node_id,
            "scrollable": self.scrollable,
            "scrollHeight": self.scroll_height,
            "effectiveViewportHeight": self.effective_viewport_height,
        }


@dataclass(frozen=True)
class Meta:
    source: str = ""
    note: str = ""
    breakpoint: str = ""
    persistent: tuple[str, ...] = ()  # ids of nodes that outlive the surface

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "note": self.note,
            "breakpoint": self.breakpoint,
            "persistent": sorted(self.persistent),
        }


@dataclass(frozen=True)
class Snapshot:
    """Validated snapshot; nodes and panes are stored in id order."""

    viewport: Viewport
    surface: Surface
    panes: tuple[Pane, ...]
    nodes: tuple[UINode, ...]
    meta: Meta = field(default_factory=Meta)
    unnamed_interactive: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(
            self, "_by_id", {n.id: n for n in self.nodes}
        )
        object.__setattr__(
            self, "_children", _child_map(self.nodes)
        )

    def node(self, node_id: str) -> UINode:
        return self._by_id[node_id]

    def has_node(self, node_id: str) -> bool:
        return node_id in self._by_id

    @property
    def initial_pane(self) -> Pane:
        return next(p for p in self.panes if p.initial)

    def pane_nodes(self, pane_id: str) -> tuple[UINode, ...]:
        return tuple(n for n in self.nodes if n.pane_id == pane_id)

    def subtree_ids(self, node_id: str) -> frozenset[str]:
        """The node and every descendant, following ``parentId`` links."""
        out: set[str] = set()
        stack = [node_id]
        while stack:
            cur = stack.pop()
            if cur in out:
                continue
            out.add(cur)
            stack.extend(self._children.get(cur, ()))
        return frozenset(out)


def _child_map(nodes: tuple[UINode, ...]) -> dict[str, tuple[str, ...]]:
    acc: dict[str, list[str]] = {}
    for n in nodes:
        if n.parent_id is not None:
            acc.setdefault(n.parent_id, []).append(n.id)
    return {k: tuple(sorted(v)) for k, v in acc.items()}


def effective_viewport_height(snapshot: Snapshot) -> int:
    """Scroll-window height: the surface override when the surface itself
    scrolls and declares one, otherwise the device viewport height."""
    s = snapshot.surface
    if s.scrollable and s.effective_viewport_height is not None:
        return s.effective_viewport_height
    return snapshot.viewport.height


def visible_in_viewport(node: UINode, scroll_offset: int, snapshot: Snapshot) -> bool:
    """Full containment at the given scroll offset.

    A node occupying pixel rows [y, y+h) counts as visible only when that
    half-open interval lies inside the viewport rows
    [scrollOffset, scrollOffset + effectiveViewportHeight) and the node's
    columns lie inside [0, viewport.width). Start-inclusive, end-exclusive:
    a node whose bottom edge equals the viewport's bottom boundary fits.
    Partially visible nodes count as not visible.
    """
    if not node.visible:
        return False
    b = node.bounds
    if b.x < 0 or b.right > snapshot.viewport.width:
        return False
    evh = effective_viewport_height(snapshot)
    return b.y >= scroll_offset and b.bottom <= scroll_offset + evh


def salience(node: UINode, weights: SalienceWeights = SalienceWeights()) -> float:
    """Pixel area times the emphasis-class multiplier.

    Only defined for interactive nodes; text and containers have no
    activation salience.
    """
    if not node.interactive:
        raise ValueError(f"salience undefined for non-interactive node {node.id!r}")
    return float(node.bounds.w * node.bounds.h) * weights.factor(node.emphasis)


# --------------------------------------------------------------------------
# Parsing


_TOP_KEYS = {"version", "meta", "viewport", "surface", "panes", "nodes"}
_META_KEYS = {"source", "note", "breakpoint", "persistent"}
_VIEWPORT_KEYS = {"width", "height", "name"}
_SURFACE_KEYS = {"rootNodeId", "scrollable", "scrollHeight", "effectiveViewportHeight"}
_PANE_KEYS = {"id", "initial"}
_NODE_KEYS = {
    "id",
    "paneId",
    "parentId",
    "role",
    "label",
    "accessibleName",
    "bounds",
    "visible",
    "enabled",
    "tabIndex",
    "rovingTabIndex",
    "emphasisClass",
    "celebratory",
    "rationaleFor",
    "animationMs",
    "effects",
}
_BOUNDS_KEYS = {"x", "y", "w", "h"}
_EFFECT_KEYS = {"kind", "target"}


def _require(d: dict, key: str, path: str):
    if key not in d:
        raise ParseError(f"missing required key {key!r}", path)
    return d[key]


def _no_unknown(d: dict, allowed: set[str], path: str):
    unknown = sorted(set(d) - allowed)
    if unknown:
        raise ParseError(f"unknown keys {unknown} (schema version {SCHEMA_VERSION})", path)


def _as_int(value, path: str, minimum: int | None = None) -> int:
    # Accept exact-integer floats; anything else is a schema violation.
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"expected integer, got {type(value).__name__}", path)
    if isinstance(value, float):
        if not value.is_integer():
            raise ParseError(f"expected integer, got {value}", path)
        value = int(value)
    if minimum is not None and value < minimum:
        raise ParseError(f"expected integer >= {minimum}, got {value}", path)
    return value


def _as_str(value, path: str) -> str:
    if not isinstance(value, str):
        raise ParseError(f"expected string, got {type(value).__name__}", path)
    return value


def _as_bool(value, path: str) -> bool:
    if not isinstance(value, bool):
        raise ParseError(f"expected boolean, got {type(value).__name__}", path)
    return value


def _parse_enum(enum_cls, value, path: str):
    try:
        return enum_cls(value)
    except ValueError:
        valid = sorted(e.value for e in enum_cls)
        raise ParseError(f"expected one of {valid}, got {value!r}", path) from None


def _parse_bounds(d, path: str) -> Bounds:
    if not isinstance(d, dict):
        raise ParseError("expected object", path)
    _no_unknown(d, _BOUNDS_KEYS, path)
    return Bounds(
        x=_as_int(_require(d, "x", path), f"{path}.x"),
        y=_as_int(_require(d, "y", path), f"{path}.y"),
        w=_as_int(_require(d, "w", path), f"{path}.w", minimum=0),
        h=_as_int(_require(d, "h", path), f"{path}.h", minimum=0),
    )


def _parse_effect(d, path: str) -> Effect:
    if not isinstance(d, dict):
        raise ParseError("expected object", path)
    _no_unknown(d, _EFFECT_KEYS, path)
    return Effect(
        kind=_parse_enum(EffectKind, _require(d, "kind", path), f"{path}.kind"),
        target=_as_str(_require(d, "target", path), f"{path}.target"),
    )


def _parse_node(d, path: str) -> UINode:
    if not isinstance(d, dict):
        raise ParseError("expected object", path)
    _no_unknown(d, _NODE_KEYS, path)
    anim = d.get("animationMs", 0)
    if anim is not None:
        anim = _as_int(anim, f"{path}.animationMs", minimum=0)
    tab_index = d.get("tabIndex")
    if tab_index is not None:
        tab_index = _as_int(tab_index, f"{path}.tabIndex")
    parent = d.get("parentId")
    if parent is not None:
        parent = _as_str(parent, f"{path}.parentId")
    rationale_for = d.get("rationaleFor")
    if rationale_for is not None:
        rationale_for = _as_str(rationale_for, f"{path}.rationaleFor")
    effects = d.get("effects", [])
    if not isinstance(effects, list):
        raise ParseError("expected array", f"{path}.effects")
    return UINode(
        id=_as_str(_require(d, "id", path), f"{path}.id"),
        pane_id=_as_str(_require(d, "paneId", path), f"{path}.paneId"),
        parent_id=parent,
        role=_parse_enum(Role, _require(d, "role", path), f"{path}.role"),
        label=_as_str(d.get("label", ""), f"{path}.label"),
        accessible_name=_as_str(d.get("accessibleName", ""), f"{path}.accessibleName"),
        bounds=_parse_bounds(_require(d, "bounds", path), f"{path}.bounds"),
        visible=_as_bool(d.get("visible", True), f"{path}.visible"),
        enabled=_as_bool(d.get("enabled", True), f"{path}.enabled"),
        tab_index=tab_index,
        roving_tab_index=_as_bool(d.get("rovingTabIndex", False), f"{path}.rovingTabIndex"),
        emphasis=_parse_enum(
            EmphasisClass, d.get("emphasisClass", "plain"), f"{path}.emphasisClass"
        ),
        celebratory=_as_bool(d.get("celebratory", False), f"{path}.celebratory"),
        rationale_for=rationale_for,
        animation_ms=anim,
        effects=tuple(
            _parse_effect(e, f"{path}.effects[{i}]") for i, e in enumerate(effects)
        ),
    )


def snapshot_from_dict(doc: dict) -> Snapshot:
    """Build and validate a Snapshot from a decoded document."""
    if not isinstance(doc, dict):
        raise ParseError("document root must be an object")
    _no_unknown(doc, _TOP_KEYS, "$")
    version = _require(doc, "version", "$")
    if version != SCHEMA_VERSION:
        raise ParseError(f"unsupported version {version!r}", "$.version")

    vp_doc = _require(doc, "viewport", "$")
    if not isinstance(vp_doc, dict):
        raise ParseError("expected object", "$.viewport")
    _no_unknown(vp_doc, _VIEWPORT_KEYS, "$.viewport")
    name = vp_doc.get("name")
    if name is not None:
        name = _as_str(name, "$.viewport.name")
    viewport = Viewport(
        width=_as_int(_require(vp_doc, "width", "$.viewport"), "$.viewport.width", 1),
        height=_as_int(_require(vp_doc, "height", "$.viewport"), "$.viewport.height", 1),
        name=name,
    )

    sf_doc = _require(doc, "surface", "$")
    if not isinstance(sf_doc, dict):
        raise ParseError("expected object", "$.surface")
    _no_unknown(sf_doc, _SURFACE_KEYS, "$.surface")
    evh = sf_doc.get("effectiveViewportHeight")
    if evh is not None:
        evh = _as_int(evh, "$.surface.effectiveViewportHeight", 1)
    surface = Surface(
        root_node_id=_as_str(_require(sf_doc, "rootNodeId", "$.surface"), "$.surface.rootNodeId"),
        scrollable=_as_bool(_require(sf_doc, "scrollable", "$.surface"), "$.surface.scrollable"),
        scroll_height=_as_int(
            _require(sf_doc, "scrollHeight", "$.surface"), "$.surface.scrollHeight", 1
        ),
        effective_viewport_height=evh,
    )

    meta_doc = doc.get("meta", {})
    if not isinstance(meta_doc, dict):
        raise ParseError("expected object", "$.meta")
    _no_unknown(meta_doc, _META_KEYS, "$.meta")
    persistent = meta_doc.get("persistent", [])
    if not isinstance(persistent, list):
        raise ParseError("expected array", "$.meta.persistent")
    meta = Meta(
        source=_as_str(meta_doc.get("source", ""), "$.meta.source"),
        note=_as_str(meta_doc.get("note", ""), "$.meta.note"),
        breakpoint=_as_str(meta_doc.get("breakpoint", ""), "$.meta.breakpoint"),
        persistent=tuple(
            _as_str(p, f"$.meta.persistent[{i}]") for i, p in enumerate(persistent)
        ),
    )

    panes_doc = _require(doc, "panes", "$")
    if not isinstance(panes_doc, list) or not panes_doc:
        raise ParseError("expected non-empty array", "$.panes")
    panes = []
    for i, p in enumerate(panes_doc):
        path = f"$.panes[{i}]"
        if not isinstance(p, dict):
            raise ParseError("expected object", path)
        _no_unknown(p, _PANE_KEYS, path)
        panes.append(
            Pane(
                id=_as_str(_require(p, "id", path), f"{path}.id"),
                initial=_as_bool(p.get("initial", False), f"{path}.initial"),
            )
        )

    nodes_doc = _require(doc, "nodes", "$")
    if not isinstance(nodes_doc, list):
        raise ParseError("expected array", "$.nodes")
    nodes = [_parse_node(n, f"$.nodes[{i}]") for i, n in enumerate(nodes_doc)]

    return _validate(viewport, surface, tuple(panes), tuple(nodes), meta)


def parse_snapshot(text: str) -> Snapshot:
    """Parse a version-1 snapshot document from JSON text.

    Malformed JSON reports line and column; schema and reference errors
    report the field path.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return snapshot_from_dict(doc)


def _validate(
    viewport: Viewport,
    surface: Surface,
    panes: tuple[Pane, ...],
    nodes: tuple[UINode, ...],
    meta: Meta,
) -> Snapshot:
    pane_ids = [p.id for p in panes]
    if len(set(pane_ids)) != len(pane_ids):
        raise ValidationError("duplicate pane ids", "$.panes")
    initials = [p for p in panes if p.initial]
    if len(initials) != 1:
        raise ValidationError(
            f"expected exactly one initial pane, found {len(initials)}", "$.panes"
        )

    seen: set[str] = set()
    for n in nodes:
        if n.id in seen:
            raise ValidationError(f"duplicate node id {n.id!r}", "$.nodes")
        seen.add(n.id)

    by_id = {n.id: n for n in nodes}
    if surface.root_node_id not in by_id:
        raise NoSurfaceRootError(
            f"surface root {surface.root_node_id!r} does not resolve to a node",
            "$.surface.rootNodeId",
        )

    if viewport.name is not None:
        expected = BREAKPOINTS.get(viewport.name)
        if expected is not None and expected != (viewport.width, viewport.height):
            raise ValidationError(
                f"viewport named {viewport.name!r} must be "
                f"{expected[0]}x{expected[1]}, got {viewport.width}x{viewport.height}",
                "$.viewport",
            )

    evh = (
        surface.effective_viewport_height
        if surface.scrollable and surface.effective_viewport_height is not None
        else viewport.height
    )
    if surface.scrollable and surface.scroll_height < evh:
        raise ValidationError(
            f"scrollHeight {surface.scroll_height} < effective viewport height {evh}",
            "$.surface.scrollHeight",
        )

    pane_set = set(pane_ids)
    unnamed: set[str] = set()
    for i, n in enumerate(nodes):
        path = f"$.nodes[{i}]"
        if n.pane_id not in pane_set:
            raise ValidationError(f"paneId {n.pane_id!r} does not resolve", f"{path}.paneId")
        if n.parent_id is not None and n.parent_id not in by_id:
            raise ValidationError(
                f"parentId {n.parent_id!r} does not resolve", f"{path}.parentId"
            )
        if n.rationale_for is not None and n.rationale_for not in by_id:
            raise ValidationError(
                f"rationaleFor {n.rationale_for!r} does not resolve", f"{path}.rationaleFor"
            )
        # Horizontal overflow is not modeled: wider-than-viewport content is
        # rejected outright rather than silently clipped.
        if n.bounds.x < 0 or n.bounds.right > viewport.width:
            raise ValidationError(
                f"node {n.id!r} exceeds the viewport horizontally "
                f"([{n.bounds.x}, {n.bounds.right}) vs width {viewport.width})",
                f"{path}.bounds",
            )
        for j, e in enumerate(n.effects):
            epath = f"{path}.effects[{j}].target"
            if e.kind in (EffectKind.REVEAL, EffectKind.TOGGLE_STATE):
                if e.target not in by_id:
                    raise ValidationError(
                        f"{e.kind.value} target {e.target!r} is not a node", epath
                    )
            else:
                if e.target not in pane_set:
                    raise ValidationError(
                        f"{e.kind.value} target {e.target!r} is not a pane", epath
                    )
        if n.interactive and not n.accessible_name and not n.label:
            unnamed.add(n.id)  # retained, but flagged for the report

    for i, p in enumerate(meta.persistent):
        if p not in by_id:
            raise ValidationError(
                f"persistent id {p!r} does not resolve", f"$.meta.persistent[{i}]"
            )

    initial_id = initials[0].id
    if not any(n.pane_id == initial_id and n.visible for n in nodes):
        raise ValidationError(
            f"initial pane {initial_id!r} has no visible node", "$.nodes"
        )

    return Snapshot(
        viewport=viewport,
        surface=surface,
        panes=tuple(sorted(panes, key=lambda p: p.id)),
        nodes=tuple(sorted(nodes, key=lambda n: n.id)),
        meta=meta,
        unnamed_interactive=frozenset(unnamed),
    )


# --------------------------------------------------------------------------
# Serialization


def snapshot_to_dict(snapshot: Snapshot) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "meta": snapshot.meta.to_dict(),
        "viewport": snapshot.viewport.to_dict(),
        "surface": snapshot.surface.to_dict(),
        "panes": [p.to_dict() for p in sorted(snapshot.panes, key=lambda p: p.id)],
        "nodes": [n.to_dict() for n in sorted(snapshot.nodes, key=lambda n: n.id)],
    }


def serialize_snapshot(snapshot: Snapshot) -> str:
    """Canonical form: sorted keys, id-sorted nodes, stable byte output."""
    return json.dumps(snapshot_to_dict(snapshot), sort_keys=True, indent=2) + "\n"
