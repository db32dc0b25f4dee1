"""Least-effort traversal of a consent snapshot to the first meaningful
alternative.

The simulated auditor takes the cheapest route that ends in activating a
meaningful alternative, where cost is compared lexicographically:

    (primary interactions, scrolled pixels, elapsed seconds)

with ties broken by the lowest sequence of acted node ids. A primary
interaction is one click, key activation, or toggle flip that changes
surface state; scrolling and focus travel are free in interaction count
but charge pixels and time.

Pointer policy: any fully visible, enabled control is directly clickable;
out-of-view controls are reached by scroll moves (one SCROLL event per
contiguous segment, carrying the exact pixel distance of the minimum
scroll that makes the target fully visible). Non-scrollable surfaces
cannot scroll at all.

Keyboard policy: activation requires focus. Focus is placed on the first
tab-ring stop when a pane opens (modal autofocus, free of charge) and
travels by forward sequential tabbing only; each step costs
``keyStepSeconds``. Rings order stops by ascending positive tabIndex
first, then id order (the document order that survives canonical
serialization). Roving-tabindex siblings collapse to one stop; members
are reached by arrow steps. Focusing an out-of-view control scrolls it
into view, accruing scroll distance exactly like pointer scrolling.

Focus traps: a roving cluster made entirely of link decoys models the
scripted trap that captures sequential focus. Tabbing past it commits the
auditor to one full cycle through the cluster before focus is released:
the cycle emits one FOCUS_LOOP event (return to the cycle's start without
progress) costing the cluster's traversal time. Focus landing inside
freshly revealed content is normal relocation and never counts as a loop;
the cycle detector resets on every progress event (reveal, pane change,
or a meaningful control entering the ring).

Budget semantics: routes above ``maxInteractions`` activations or
``maxPaneDepth`` pane transitions are pruned. When no qualifying route
survives, the audit is censored: the trace carries no events, terminal
``BUDGET_EXHAUSTED``, and all-zero cost components, which are valid lower
bounds. Graph construction aborts with an error past 10,000 states.

Everything here is pure and deterministic: equal inputs give
byte-identical traces.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum

from .detector import (
    DetectionResult,
    LabelLexicon,
    Policy,
    SurfaceState,
    classify_control,
    in_tab_ring,
    is_material_toggle,
    is_meaningful_alternative,
    ControlClass,
)
from .snapshot import (
    EffectKind,
    Snapshot,
    UINode,
    effective_viewport_height,
)

TraversalPolicy = Policy  # the policy enum doubles as the traversal policy


class AuditError(RuntimeError):
    """Raised when the state space exceeds the explosion guard."""


class EventKind(str, Enum):
    SCROLL = "SCROLL"
    EXPAND = "EXPAND"
    TOGGLE = "TOGGLE"
    FOCUS_LOOP = "FOCUS_LOOP"
    ACTION = "ACTION"

    def __str__(self) -> str:
        return self.value


class Terminal(str, Enum):
    ALTERNATIVE_REACHED = "ALTERNATIVE_REACHED"
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TimingConstants:
    """Deterministic per-move costs. All defaults are declared calibration,
    not measured human times."""

    interaction_handling_s: float = 0.100  # per primary interaction
    scroll_s_per_viewport: float = 0.05  # per full viewport height scrolled
    key_step_s: float = 0.03  # per Tab or arrow step


@dataclass(frozen=True)
class Budget:
    max_interactions: int = 25
    max_pane_depth: int = 6
    wait_budget_ms: int = 300  # fallback for gating nodes without a measured duration
    max_states: int = 10_000


@dataclass(frozen=True)
class AuditEvent:
    kind: EventKind
    node_id: str | None = None  # None for SCROLL
    scroll_px: int = 0
    cost_s: float = 0.0

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "nodeId": self.node_id,
            "scrollPx": self.scroll_px,
            "costS": round(self.cost_s, 9),
        }


@dataclass(frozen=True)
class TraversalState:
    """State of the simulated auditor; the identity fields quotient the
    search space, the bookkeeping fields describe the chosen path."""

    pane_id: str
    scroll_offset: int
    revealed: frozenset[str] = frozenset()
    toggled: frozenset[str] = frozenset()
    focus_node: str | None = None  # always None under pointer
    visited_focus: tuple[str, ...] = ()
    interactions_used: int = 0
    elapsed_s: float = 0.0

    def key(self) -> tuple:
        return (
            self.pane_id,
            self.revealed,
            self.toggled,
            self.scroll_offset,
            self.focus_node,
        )


@dataclass(frozen=True)
class EventTrace:
    policy: Policy
    events: tuple[AuditEvent, ...]
    terminal: Terminal
    terminal_node_id: str | None = None
    detection: DetectionResult | None = None
    final_state: TraversalState | None = None

    @property
    def censored(self) -> bool:
        return self.terminal is Terminal.BUDGET_EXHAUSTED

    @property
    def scroll_px_total(self) -> int:
        return sum(e.scroll_px for e in self.events)

    @property
    def time_s_total(self) -> float:
        return sum(e.cost_s for e in self.events)

    @property
    def focus_loops(self) -> int:
        return sum(1 for e in self.events if e.kind is EventKind.FOCUS_LOOP)


def transition_cost(node: UINode, timing: TimingConstants, budget: Budget) -> float:
    """Seconds charged for activating ``node``: fixed handling plus the
    declared animation, or the wait budget when a gating node carries no
    measured duration."""
    anim = node.animation_ms
    if anim is None:
        gate_s = budget.wait_budget_ms / 1000.0 if node.gates else 0.0
    else:
        gate_s = anim / 1000.0
    return timing.interaction_handling_s + gate_s


# --------------------------------------------------------------------------
# Tab ring


@dataclass(frozen=True)
class RingStop:
    """One sequential-focus stop: a lone control or a roving cluster."""

    members: tuple[str, ...]

    @property
    def entry(self) -> str:
        return self.members[0]


def _ring_order_key(node: UINode) -> tuple:
    if node.tab_index is not None and node.tab_index > 0:
        return (0, node.tab_index, node.id)
    return (1, 0, node.id)


def _build_ring(snapshot: Snapshot, state: SurfaceState) -> tuple[RingStop, ...]:
    nodes = [
        n
        for n in snapshot.pane_nodes(state.pane_id)
        if in_tab_ring(n, state)
    ]
    nodes.sort(key=_ring_order_key)
    stops: list[RingStop] = []
    grouped: dict[str, list[str]] = {}
    group_pos: dict[str, int] = {}
    for n in nodes:
        if n.roving_tab_index and n.parent_id is not None:
            if n.parent_id not in grouped:
                grouped[n.parent_id] = []
                group_pos[n.parent_id] = len(stops)
                stops.append(RingStop(members=()))  # placeholder
            grouped[n.parent_id].append(n.id)
        else:
            stops.append(RingStop(members=(n.id,)))
    for parent, members in grouped.items():
        stops[group_pos[parent]] = RingStop(members=tuple(members))
    return tuple(stops)


def _is_trap(stop: RingStop, snapshot: Snapshot) -> bool:
    # A roving cluster of pure link decoys captures sequential focus.
    if len(stop.members) < 2:
        return False
    return all(
        snapshot.node(m).role.value == "link" and not snapshot.node(m).effects
        for m in stop.members
    )


# --------------------------------------------------------------------------
# Edge expansion


@dataclass(frozen=True)
class _Edge:
    events: tuple[AuditEvent, ...]
    dst: TraversalState | None  # None when the edge is terminal
    interactions: int
    scroll_px: int
    time_s: float
    navigated: bool
    detection: DetectionResult | None = None
    acted_node: str | None = None
    final_state: TraversalState | None = None  # set on terminal edges


def _scroll_target(node: UINode, offset: int, evh: int, max_offset: int) -> int | None:
    """Minimal offset that fully shows ``node``, or None when impossible."""
    b = node.bounds
    if b.h > evh:
        return None
    if b.y < offset:
        new = b.y
    elif b.bottom > offset + evh:
        new = b.bottom - evh
    else:
        return offset
    new = max(0, min(new, max_offset))
    if b.y >= new and b.bottom <= new + evh:
        return new
    return None


def _apply_effects(
    node: UINode, state: TraversalState, snapshot: Snapshot
) -> tuple[str, int, frozenset[str], frozenset[str], bool]:
    """Successor (pane, offset, revealed, toggled, navigated) after activation."""
    pane = state.pane_id
    offset = state.scroll_offset
    revealed = set(state.revealed)
    toggled = set(state.toggled)
    navigated = False
    for e in node.effects:
        if e.kind is EffectKind.REVEAL:
            revealed |= snapshot.subtree_ids(e.target)
        elif e.kind is EffectKind.NAVIGATE:
            pane = e.target
            offset = 0  # a fresh pane opens at the top
            navigated = True
        elif e.kind is EffectKind.TOGGLE_STATE:
            toggled ^= {e.target}  # flips are reversible
        # DISMISS closes the surface; the auditor never takes it mid-route.
    return pane, offset, frozenset(revealed), frozenset(toggled), navigated


def _event_kind(node: UINode) -> EventKind:
    kinds = {e.kind for e in node.effects}
    if EffectKind.REVEAL in kinds:
        return EventKind.EXPAND
    if EffectKind.TOGGLE_STATE in kinds:
        return EventKind.TOGGLE
    return EventKind.ACTION


class _Expander:
    """Shared edge enumeration for the graph builder and the search."""

    def __init__(
        self,
        snapshot: Snapshot,
        policy: Policy,
        lexicon: LabelLexicon,
        budget: Budget,
        timing: TimingConstants,
    ):
        self.snapshot = snapshot
        self.policy = policy
        self.lexicon = lexicon
        self.budget = budget
        self.timing = timing
        self.evh = effective_viewport_height(snapshot)
        surface = snapshot.surface
        self.max_offset = (
            max(0, surface.scroll_height - self.evh) if surface.scrollable else 0
        )
        self._ring_cache: dict[tuple, tuple[RingStop, ...]] = {}

    # -- shared helpers --------------------------------------------------

    def surface_state(self, state: TraversalState) -> SurfaceState:
        return SurfaceState(
            pane_id=state.pane_id,
            revealed=state.revealed,
            toggled=state.toggled,
            scroll_offset=state.scroll_offset,
            policy=self.policy,
        )

    def _rendered(self, node: UINode, state: TraversalState) -> bool:
        return node.pane_id == state.pane_id and (
            node.visible or node.id in state.revealed
        )

    def _in_view(self, node: UINode, offset: int) -> bool:
        b = node.bounds
        return (
            b.x >= 0
            and b.right <= self.snapshot.viewport.width
            and b.y >= offset
            and b.bottom <= offset + self.evh
        )

    def initial_state(self) -> TraversalState:
        pane = self.snapshot.initial_pane.id
        focus = None
        if self.policy is Policy.KEYBOARD:
            ring = self.ring(
                SurfaceState(pane_id=pane, policy=self.policy)
            )
            focus = ring[0].entry if ring else None
        return TraversalState(pane_id=pane, scroll_offset=0, focus_node=focus)

    def ring(self, state: SurfaceState) -> tuple[RingStop, ...]:
        key = (state.pane_id, state.revealed)
        cached = self._ring_cache.get(key)
        if cached is None:
            cached = _build_ring(self.snapshot, state)
            self._ring_cache[key] = cached
        return cached

    def _candidates(self, state: TraversalState) -> list[UINode]:
        return [
            n
            for n in self.snapshot.pane_nodes(state.pane_id)
            if n.interactive and n.enabled and self._rendered(n, state)
        ]

    # -- pointer ----------------------------------------------------------

    def _pointer_edges(self, state: TraversalState) -> list[_Edge]:
        edges: list[_Edge] = []
        scroll_offsets: set[int] = set()
        for node in self._candidates(state):
            if self._in_view(node, state.scroll_offset):
                edge = self._activation_edge(state, node, approach=())
                if edge is not None:
                    edges.append(edge)
            elif self.snapshot.surface.scrollable:
                target = _scroll_target(
                    node, state.scroll_offset, self.evh, self.max_offset
                )
                if target is not None and target != state.scroll_offset:
                    scroll_offsets.add(target)
        for offset in sorted(scroll_offsets):
            px = abs(offset - state.scroll_offset)
            cost = px * self.timing.scroll_s_per_viewport / self.evh
            dst = TraversalState(
                pane_id=state.pane_id,
                scroll_offset=offset,
                revealed=state.revealed,
                toggled=state.toggled,
                focus_node=state.focus_node,
                visited_focus=state.visited_focus,
                interactions_used=state.interactions_used,
                elapsed_s=state.elapsed_s + cost,
            )
            edges.append(
                _Edge(
                    events=(AuditEvent(EventKind.SCROLL, None, px, cost),),
                    dst=dst,
                    interactions=0,
                    scroll_px=px,
                    time_s=cost,
                    navigated=False,
                )
            )
        return edges

    # -- keyboard ---------------------------------------------------------

    def _keyboard_edges(self, state: TraversalState) -> list[_Edge]:
        surface = self.surface_state(state)
        ring = self.ring(surface)
        if not ring:
            return []
        # locate current focus in the ring
        focus_idx = 0
        for i, stop in enumerate(ring):
            if state.focus_node in stop.members:
                focus_idx = i
                break
        edges: list[_Edge] = []
        for node in self._candidates(state):
            if not in_tab_ring(node, surface):
                continue
            approach = self._travel(ring, focus_idx, state, node)
            if approach is None:
                continue
            events, key_travel_s, px, new_offset, visited = approach
            edge = self._activation_edge(
                state, node, approach=events,
                key_travel_s=key_travel_s, approach_px=px,
                landing_offset=new_offset, visited=visited,
            )
            if edge is not None:
                edges.append(edge)
        return edges

    def _travel(
        self,
        ring: tuple[RingStop, ...],
        focus_idx: int,
        state: TraversalState,
        target: UINode,
    ) -> tuple[tuple[AuditEvent, ...], float, int, int, tuple[str, ...]] | None:
        """Forward-tab from the focused stop to ``target``.

        Returns (approach events, key-step seconds, scroll px, landing
        offset, visited stop ids); None when the target cannot be brought
        fully into view. Loop and scroll costs ride on the approach events;
        the key-step time is folded into the activation event by the caller.
        """
        n_stops = len(ring)
        target_idx = None
        member_idx = 0
        for i, stop in enumerate(ring):
            if target.id in stop.members:
                target_idx = i
                member_idx = stop.members.index(target.id)
                break
        if target_idx is None:
            return None
        events: list[AuditEvent] = []
        visited: list[str] = []
        steps = 0
        if target_idx == focus_idx:
            current = ring[focus_idx]
            if state.focus_node in current.members:
                steps = abs(member_idx - current.members.index(state.focus_node))
        else:
            tab_steps = (target_idx - focus_idx) % n_stops
            steps = tab_steps + member_idx  # arrows into a roving cluster
            for k in range(1, tab_steps + 1):
                stop = ring[(focus_idx + k) % n_stops]
                visited.append(stop.entry)
                if k < tab_steps and _is_trap(stop, self.snapshot):
                    # Captured: one full cycle back to the cluster start
                    # before focus is released. No progress, one loop.
                    cycle_s = len(stop.members) * self.timing.key_step_s
                    events.append(
                        AuditEvent(EventKind.FOCUS_LOOP, stop.entry, 0, cycle_s)
                    )
        travel_s = steps * self.timing.key_step_s
        # viewport follows the landing target only
        new_offset = state.scroll_offset
        if not self._in_view(target, state.scroll_offset):
            landing = _scroll_target(
                target, state.scroll_offset, self.evh, self.max_offset
            )
            if landing is None or not self._in_view(target, landing):
                return None
            new_offset = landing
            px = abs(new_offset - state.scroll_offset)
            if px:
                cost = px * self.timing.scroll_s_per_viewport / self.evh
                events.append(AuditEvent(EventKind.SCROLL, None, px, cost))
        px_total = sum(e.scroll_px for e in events)
        return tuple(events), travel_s, px_total, new_offset, tuple(visited)

    # -- activation -------------------------------------------------------

    def _activation_edge(
        self,
        state: TraversalState,
        node: UINode,
        approach: tuple[AuditEvent, ...],
        key_travel_s: float = 0.0,
        approach_px: int = 0,
        landing_offset: int | None = None,
        visited: tuple[str, ...] = (),
    ) -> _Edge | None:
        offset = state.scroll_offset if landing_offset is None else landing_offset
        act_state = SurfaceState(
            pane_id=state.pane_id,
            revealed=state.revealed,
            toggled=state.toggled,
            scroll_offset=offset,
            policy=self.policy,
        )
        detection = is_meaningful_alternative(node, self.snapshot, self.lexicon, act_state)
        # focus travel time rides on the activation event
        act_cost = transition_cost(node, self.timing, self.budget) + key_travel_s

        if detection.meaningful:
            events = approach + (AuditEvent(EventKind.ACTION, node.id, 0, act_cost),)
            edge_time = sum(e.cost_s for e in events)
            final = TraversalState(
                pane_id=state.pane_id,
                scroll_offset=offset,
                revealed=state.revealed,
                toggled=state.toggled,
                focus_node=node.id if self.policy is Policy.KEYBOARD else None,
                visited_focus=state.visited_focus + visited + (node.id,)
                if self.policy is Policy.KEYBOARD
                else (),
                interactions_used=state.interactions_used + 1,
                elapsed_s=state.elapsed_s + edge_time,
            )
            return _Edge(
                events=events,
                dst=None,
                interactions=1,
                scroll_px=approach_px,
                time_s=edge_time,
                navigated=False,
                detection=detection,
                acted_node=node.id,
                final_state=final,
            )

        pane, next_offset, revealed, toggled, navigated = _apply_effects(
            node, state, self.snapshot
        )
        if not navigated:
            next_offset = offset
        changed = (
            pane != state.pane_id
            or revealed != state.revealed
            or toggled != state.toggled
        )
        if not changed:
            return None  # no-progress activations never help a shortest route

        events = approach + (AuditEvent(_event_kind(node), node.id, 0, act_cost),)
        edge_time = sum(e.cost_s for e in events)
        focus = None
        visited_focus = ()
        if self.policy is Policy.KEYBOARD:
            if navigated:
                new_ring = self.ring(
                    SurfaceState(
                        pane_id=pane, revealed=revealed, toggled=toggled,
                        policy=self.policy,
                    )
                )
                focus = new_ring[0].entry if new_ring else None
            else:
                focus = node.id
            visited_focus = state.visited_focus + visited + (node.id,)
        dst = TraversalState(
            pane_id=pane,
            scroll_offset=next_offset,
            revealed=revealed,
            toggled=toggled,
            focus_node=focus,
            visited_focus=visited_focus,
            interactions_used=state.interactions_used + 1,
            elapsed_s=state.elapsed_s + edge_time,
        )
        return _Edge(
            events=events,
            dst=dst,
            interactions=1,
            scroll_px=approach_px,
            time_s=edge_time,
            navigated=navigated,
            acted_node=node.id,
        )

    def edges(self, state: TraversalState) -> list[_Edge]:
        if self.policy is Policy.KEYBOARD:
            return self._keyboard_edges(state)
        return self._pointer_edges(state)


# --------------------------------------------------------------------------
# Search


def _merge_scrolls(events: tuple[AuditEvent, ...]) -> tuple[AuditEvent, ...]:
    """Contiguous SCROLL events collapse into one segment."""
    out: list[AuditEvent] = []
    for e in events:
        if out and e.kind is EventKind.SCROLL and out[-1].kind is EventKind.SCROLL:
            prev = out.pop()
            out.append(
                AuditEvent(
                    EventKind.SCROLL,
                    None,
                    prev.scroll_px + e.scroll_px,
                    prev.cost_s + e.cost_s,
                )
            )
        else:
            out.append(e)
    return tuple(out)


def least_effort_traverse(
    snapshot: Snapshot,
    policy: Policy,
    lexicon: LabelLexicon,
    budget: Budget = Budget(),
    timing: TimingConstants = TimingConstants(),
) -> EventTrace:
    """Cheapest route (lexicographic cost) to a meaningful alternative.

    Returns a censored trace (terminal BUDGET_EXHAUSTED, no events) when no
    qualifying route exists within budget.
    """
    ex = _Expander(snapshot, policy, lexicon, budget, timing)
    start = ex.initial_state()

    done = object()  # virtual goal node; popped = cheapest finished route
    counter = 0
    # heap entries: (interactions, px, time, tie, counter, state, navs, events)
    heap: list = [(0, 0, 0.0, (), counter, start, 0, ())]
    best: dict[tuple, tuple] = {start.key(): (0, 0, 0.0, ())}
    best_done: tuple | None = None
    seen_states = 1

    while heap:
        ints, px, time_s, tie, _, state, navs, events = heapq.heappop(heap)
        if state is done:
            edge = navs  # terminal entries smuggle the edge in the navs slot
            return EventTrace(
                policy=policy,
                events=_merge_scrolls(events),
                terminal=Terminal.ALTERNATIVE_REACHED,
                terminal_node_id=edge.acted_node,
                detection=edge.detection,
                final_state=edge.final_state,
            )
        if best.get(state.key(), (ints, px, time_s, tie)) < (ints, px, time_s, tie):
            continue
        for edge in ex.edges(state):
            n_ints = ints + edge.interactions
            if n_ints > budget.max_interactions:
                continue
            n_navs = navs + (1 if edge.navigated else 0)
            if n_navs > budget.max_pane_depth:
                continue
            n_px = px + edge.scroll_px
            n_time = time_s + edge.time_s
            n_tie = tie + tuple(e.node_id or "" for e in edge.events)
            n_events = events + edge.events
            cost = (n_ints, n_px, n_time, n_tie)
            if edge.dst is None:
                if best_done is None or cost < best_done:
                    best_done = cost
                    counter += 1
                    heapq.heappush(
                        heap,
                        (n_ints, n_px, n_time, n_tie, counter, done, edge, n_events),
                    )
                continue
            dst_key = edge.dst.key()
            if dst_key not in best:
                seen_states += 1
                if seen_states > budget.max_states:
                    raise AuditError(
                        f"state-space exceeded: more than {budget.max_states} states"
                    )
            if dst_key not in best or cost < best[dst_key]:
                best[dst_key] = cost
                counter += 1
                heapq.heappush(
                    heap,
                    (n_ints, n_px, n_time, n_tie, counter, edge.dst, n_navs, n_events),
                )

    return EventTrace(
        policy=policy,
        events=(),
        terminal=Terminal.BUDGET_EXHAUSTED,
        final_state=TraversalState(
            pane_id=start.pane_id,
            scroll_offset=0,
            focus_node=start.focus_node,
        ),
    )


# --------------------------------------------------------------------------
# Graph materialization


@dataclass(frozen=True)
class GraphEdge:
    src: int
    dst: int | None  # None marks a terminal activation
    events: tuple[AuditEvent, ...]
    interactions: int
    scroll_px: int
    time_s: float
    acted_node: str | None


@dataclass(frozen=True)
class InteractionGraph:
    states: tuple[TraversalState, ...]
    edges: tuple[GraphEdge, ...]

    def terminal_edges(self) -> tuple[GraphEdge, ...]:
        return tuple(e for e in self.edges if e.dst is None)


def build_interaction_graph(
    snapshot: Snapshot,
    policy: Policy,
    lexicon: LabelLexicon,
    budget: Budget = Budget(),
    timing: TimingConstants = TimingConstants(),
) -> InteractionGraph:
    """Materialize the reachable quotient state space.

    States are quotiented by (active pane, revealed set, toggled set,
    scroll offset, focus node); edges carry the events and costs the
    search would incur.
    """
    ex = _Expander(snapshot, policy, lexicon, budget, timing)
    start = ex.initial_state()
    index: dict[tuple, int] = {start.key(): 0}
    states: list[TraversalState] = [start]
    edges: list[GraphEdge] = []
    frontier: list[tuple[TraversalState, int]] = [(start, 0)]
    while frontier:
        state, navs = frontier.pop(0)
        src = index[state.key()]
        for edge in ex.edges(state):
            if edge.dst is None:
                edges.append(
                    GraphEdge(
                        src=src,
                        dst=None,
                        events=edge.events,
                        interactions=edge.interactions,
                        scroll_px=edge.scroll_px,
                        time_s=edge.time_s,
                        acted_node=edge.acted_node,
                    )
                )
                continue
            if edge.navigated and navs + 1 > budget.max_pane_depth:
                continue
            key = edge.dst.key()
            if key not in index:
                if len(states) + 1 > budget.max_states:
                    raise AuditError(
                        f"state-space exceeded: more than {budget.max_states} states"
                    )
                index[key] = len(states)
                states.append(edge.dst)
                frontier.append((edge.dst, navs + (1 if edge.navigated else 0)))
            edges.append(
                GraphEdge(
                    src=src,
                    dst=index[key],
                    events=edge.events,
                    interactions=edge.interactions,
                    scroll_px=edge.scroll_px,
                    time_s=edge.time_s,
                    acted_node=edge.acted_node,
                )
            )
    return InteractionGraph(states=tuple(states), edges=tuple(edges))


# --------------------------------------------------------------------------
# Hidden-reveal counting


def count_hidden_reveals(
    trace: EventTrace, snapshot: Snapshot, lexicon: LabelLexicon
) -> int:
    """Number of EXPAND/ACTION events on the trace whose effects exposed
    material controls: a REJECT/SETTINGS/SAVE-classified control or a
    category toggle. Purely informational reveals do not count.
    """

    def material(node: UINode) -> bool:
        if not node.enabled:
            return False
        if is_material_toggle(node):
            return True
        return classify_control(node, lexicon) in (
            ControlClass.REJECT,
            ControlClass.SETTINGS,
            ControlClass.SAVE,
        )

    count = 0
    rendered: set[str] = {n.id for n in snapshot.nodes if n.visible}
    for event in trace.events:
        if event.kind not in (EventKind.EXPAND, EventKind.ACTION):
            continue
        if event.node_id is None or not snapshot.has_node(event.node_id):
            continue
        node = snapshot.node(event.node_id)
        exposed: list[UINode] = []
        for target in node.effect_targets(EffectKind.REVEAL):
            for nid in sorted(snapshot.subtree_ids(target)):
                if nid not in rendered:
                    exposed.append(snapshot.node(nid))
                    rendered.add(nid)
        for pane in node.effect_targets(EffectKind.NAVIGATE):
            exposed.extend(snapshot.pane_nodes(pane))
        if any(material(n) for n in exposed):
            count += 1
    return count
