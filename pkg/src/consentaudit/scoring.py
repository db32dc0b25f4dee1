"""PSI scoring: trace components, weighted scalar index, companion signals.

PSI = alpha * D/vh + beta * T + gamma * F + delta * H

where D/vh is cumulative scroll in viewport heights, T elapsed seconds,
F focus loops, H material hidden-reveals. Weighting profiles re-weight
the same frozen components; they never change traversal.

AAI counts assurance cues (0-3): accept salience at least 1.5x its
nearest alternative, celebratory or progress microcopy, and visual
dominance of the accept control in the first viewport. CSI counts
comprehension affordances (0-3): a meaningful alternative exposed up
front, local one-sentence rationales within 120 px of each visible
category toggle, and a persistent change-consent affordance. DIV is
their difference; positive values read as assurance outrunning
comprehension support.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .detector import (
    ControlClass,
    LabelLexicon,
    Policy,
    classify_control,
    detect_reversibility,
    granularity_exposed,
    is_material_toggle,
)
from .snapshot import (
    Bounds,
    SalienceWeights,
    Snapshot,
    UINode,
    effective_viewport_height,
    salience,
    visible_in_viewport,
)
from .traversal import EventKind, EventTrace, Terminal, count_hidden_reveals

RATIONALE_LOCALITY_PX = 120.0
SALIENCE_RATIO = 1.5


class SignalError(ValueError):
    """A companion signal cannot be computed for this snapshot."""


@dataclass(frozen=True)
class PsiComponents:
    distance_vh: float
    time_s: float
    focus_loops: int
    hidden_reveals: int
    censored: bool = False

    def to_dict(self) -> dict:
        return {
            "distanceVh": round(self.distance_vh, 9),
            "timeS": round(self.time_s, 9),
            "focusLoops": self.focus_loops,
            "hiddenReveals": self.hidden_reveals,
            "censored": self.censored,
        }


@dataclass(frozen=True)
class WeightProfile:
    name: str
    alpha: float
    beta: float
    gamma: float
    delta: float

    def __post_init__(self):
        for w in (self.alpha, self.beta, self.gamma, self.delta):
            if w < 0:
                raise ValueError("profile weights must be non-negative")

    def weights(self) -> tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "delta": self.delta,
        }


PROFILES: dict[str, WeightProfile] = {
    "default": WeightProfile("default", 1, 1, 1, 1),
    "accessibility": WeightProfile("accessibility", 1, 1, 2, 1),
    "delay": WeightProfile("delay", 1, 2, 1, 1),
    "disclosure": WeightProfile("disclosure", 1, 1, 1, 2),
}


def named_profile(name: str) -> WeightProfile:
    try:
        return PROFILES[name]
    except KeyError:
        valid = ", ".join(sorted(PROFILES))
        raise LookupError(f"unknown profile {name!r}; valid profiles: {valid}") from None


def compute_components(
    trace: EventTrace, snapshot: Snapshot, lexicon: LabelLexicon
) -> PsiComponents:
    """Fold a trace into the four cost components.

    Censored traces keep whatever accumulated before the budget ran out;
    those components are lower bounds, flagged rather than discarded.
    """
    for event in trace.events:
        if event.node_id is not None and not snapshot.has_node(event.node_id):
            raise ValueError(
                f"trace/snapshot mismatch: event node {event.node_id!r} not in snapshot"
            )
    evh = effective_viewport_height(snapshot)
    return PsiComponents(
        distance_vh=trace.scroll_px_total / evh,
        time_s=trace.time_s_total,
        focus_loops=trace.focus_loops,
        hidden_reveals=count_hidden_reveals(trace, snapshot, lexicon),
        censored=trace.terminal is Terminal.BUDGET_EXHAUSTED,
    )


def compute_psi(components: PsiComponents, profile: WeightProfile) -> float:
    return (
        profile.alpha * components.distance_vh
        + profile.beta * components.time_s
        + profile.gamma * components.focus_loops
        + profile.delta * components.hidden_reveals
    )


# --------------------------------------------------------------------------
# Companion signals


def rect_gap_distance(a: Bounds, b: Bounds) -> float:
    """Euclidean distance between the nearest edges of two rectangles;
    0.0 when they touch or overlap."""
    dx = max(0, a.x - b.right, b.x - a.right)
    dy = max(0, a.y - b.bottom, b.y - a.bottom)
    return math.hypot(dx, dy)


_SENTENCE_BREAK = re.compile(r"[.!?]+")


def sentence_count(text: str) -> int:
    """Terminator runs counted as sentence breaks; unterminated text is
    one sentence."""
    stripped = text.strip()
    if not stripped:
        return 0
    runs = len(_SENTENCE_BREAK.findall(stripped))
    if runs == 0:
        return 1
    # a trailing terminator closes the last sentence rather than opening one
    return runs if stripped[-1] in ".!?" else runs + 1


def _visible_interactive(snapshot: Snapshot, pane_id: str) -> list[UINode]:
    return [
        n
        for n in snapshot.pane_nodes(pane_id)
        if n.interactive
        and n.enabled
        and n.visible
        and visible_in_viewport(n, 0, snapshot)
    ]


def _accept_control(snapshot: Snapshot, lexicon: LabelLexicon) -> UINode:
    """The dominant accept control: max salience, initial pane preferred."""
    weights = SalienceWeights()
    accepts = [
        n
        for n in snapshot.nodes
        if n.interactive
        and n.enabled
        and classify_control(n, lexicon) is ControlClass.ACCEPT
    ]
    initial = snapshot.initial_pane.id
    on_initial = [n for n in accepts if n.pane_id == initial and n.visible]
    pool = on_initial or accepts
    if not pool:
        raise SignalError("no-accept-control")
    pool.sort(key=lambda n: (-salience(n, weights), n.id))
    return pool[0]


def compute_aai(snapshot: Snapshot, lexicon: LabelLexicon | None = None) -> int:
    """Assurance-cue count, one point per fired criterion."""
    if lexicon is None:
        from .detector import default_lexicon

        lexicon = default_lexicon()
    weights = SalienceWeights()
    accept = _accept_control(snapshot, lexicon)
    initial = snapshot.initial_pane.id
    score = 0

    # (i) accept salience > 1.5x the nearest meaningful alternative;
    # a first pane with no alternative at all fires the criterion outright.
    alternatives = [
        n
        for n in snapshot.pane_nodes(initial)
        if n.interactive
        and n.enabled
        and n.visible
        and classify_control(n, lexicon)
        in (ControlClass.REJECT, ControlClass.SETTINGS, ControlClass.SAVE)
    ]
    if not alternatives:
        score += 1
    else:
        alternatives.sort(
            key=lambda n: (rect_gap_distance(accept.bounds, n.bounds), n.id)
        )
        nearest = alternatives[0]
        if salience(accept, weights) / salience(nearest, weights) > SALIENCE_RATIO:
            score += 1

    # (ii) progress or celebratory microcopy on the initial pane
    if any(n.celebratory and n.visible for n in snapshot.pane_nodes(initial)):
        score += 1

    # (iii) accept strictly dominates every other control in the first viewport
    in_view = _visible_interactive(snapshot, initial)
    if accept in in_view:
        accept_sal = salience(accept, weights)
        others = [salience(n, weights) for n in in_view if n.id != accept.id]
        if all(accept_sal > s for s in others):
            score += 1
    return score


def compute_csi(snapshot: Snapshot, lexicon: LabelLexicon) -> int:
    """Comprehension-affordance count, one point per satisfied criterion."""
    score = 0

    # (i) a meaningful alternative is exposed in the landing viewport
    if granularity_exposed(snapshot, lexicon, Policy.POINTER):
        score += 1

    # (ii) every visible category toggle carries a local one-sentence rationale
    initial = snapshot.initial_pane.id
    toggles = [
        n
        for n in snapshot.pane_nodes(initial)
        if is_material_toggle(n) and n.visible and visible_in_viewport(n, 0, snapshot)
    ]
    if toggles:
        rationales: dict[str, list[UINode]] = {}
        for n in snapshot.pane_nodes(initial):
            if n.rationale_for is not None and n.visible:
                rationales.setdefault(n.rationale_for, []).append(n)

        def local(toggle: UINode) -> bool:
            for r in rationales.get(toggle.id, ()):
                text = r.label or r.accessible_name or ""
                if (
                    rect_gap_distance(toggle.bounds, r.bounds) <= RATIONALE_LOCALITY_PX
                    and sentence_count(text) <= 1
                ):
                    return True
            return False

        if any(rationales.get(t.id) for t in toggles) and all(local(t) for t in toggles):
            score += 1

    # (iii) persistent change-consent affordance
    if detect_reversibility(snapshot, lexicon):
        score += 1
    return score


@dataclass(frozen=True)
class CompanionSignals:
    time_to_primary_s: float
    distance_to_choice_vh: float
    granularity_exposed: bool
    reversibility: bool
    aai: int
    csi: int
    div: int

    def to_dict(self) -> dict:
        return {
            "timeToPrimaryS": round(self.time_to_primary_s, 9),
            "distanceToChoiceVh": round(self.distance_to_choice_vh, 9),
            "granularityExposed": self.granularity_exposed,
            "reversibility": self.reversibility,
            "aai": self.aai,
            "csi": self.csi,
            "div": self.div,
        }


def companion_signals(
    snapshot: Snapshot,
    trace: EventTrace,
    components: PsiComponents,
    lexicon: LabelLexicon,
) -> CompanionSignals:
    aai = compute_aai(snapshot, lexicon)
    csi = compute_csi(snapshot, lexicon)
    return CompanionSignals(
        time_to_primary_s=components.time_s,
        distance_to_choice_vh=components.distance_vh,
        granularity_exposed=granularity_exposed(snapshot, lexicon, Policy.POINTER),
        reversibility=detect_reversibility(snapshot, lexicon),
        aai=aai,
        csi=csi,
        div=aai - csi,
    )
