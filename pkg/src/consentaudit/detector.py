"""Rule-based detection of meaningful consent alternatives.

Classifies controls by their accessible name against a phrase lexicon and
decides whether a control is a *meaningful alternative* to blanket
acceptance at a given traversal state. A control qualifies when all four
hold:

  (i)   it classifies as a non-accepting choice (REJECT, SETTINGS, SAVE)
  (ii)  it is fully visible in the viewport at the state's scroll offset
  (iii) it is actionable with one primary interaction under the active
        policy (pointer: directly clickable; keyboard: inside the pane's
        tab ring)
  (iv)  activating it materially advances refusal, narrowing, or revision
        rather than re-presenting the accepting path

Rule (iv) is where dark-pattern edge cases live:
  - a SETTINGS control qualifies only when its effects reveal or navigate
    to at least one REJECT/SAVE control or material toggle (substantive
    advance); a settings door to nowhere does not count
  - a SAVE control qualifies only once the current selection differs from
    blanket acceptance, i.e. at least one material toggle on the same pane
    has been flipped; pressing "Save choices" with everything pre-checked
    merely re-affirms acceptance
  - euphemistic labels ("Manage experience", "Learn more", "Got it")
    classify as UNKNOWN by design, so they never qualify; guessing at
    mislabeled controls is out of scope for a rule-based pass

Occlusion is resolved at capture time: an overlaid control arrives with
``visible: false`` and is excluded by rule (ii). Disabled controls are
excluded by rule (iii). Icon-only controls without an accessible name
classify as UNKNOWN.

Classification is a pure function of (accessibleName, label, role,
lexicon); meaningfulness additionally depends on the immutable state
passed in, never on hidden globals.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .snapshot import (
    TOGGLE_ROLES,
    EffectKind,
    Snapshot,
    UINode,
    visible_in_viewport,
)


class Policy(str, Enum):
    """Input modality the simulated auditor uses."""

    POINTER = "pointer"
    KEYBOARD = "keyboard"

    def __str__(self) -> str:
        return self.value


class ControlClass(str, Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    SETTINGS = "settings"
    SAVE = "save"
    REVERSIBILITY = "reversibility"
    INFORMATIONAL = "informational"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


# Classes that can satisfy rule (i). Order also fixes match precedence when
# a name matches multiple phrase lists.
_PRECEDENCE = (
    ControlClass.REJECT,
    ControlClass.SAVE,
    ControlClass.SETTINGS,
    ControlClass.REVERSIBILITY,
    ControlClass.ACCEPT,
    ControlClass.INFORMATIONAL,
)

NON_ACCEPT_CLASSES = frozenset(
    {ControlClass.REJECT, ControlClass.SETTINGS, ControlClass.SAVE}
)


class LexiconError(ValueError):
    """Lexicon file is malformed or violates the disjointness invariant."""


def _tokens(text: str) -> tuple[str, ...]:
    return tuple(re.findall(r"[a-z0-9]+", text.casefold()))


def _contains_phrase(name_tokens: tuple[str, ...], phrase_tokens: tuple[str, ...]) -> bool:
    # contiguous token subsequence match
    if not phrase_tokens or len(phrase_tokens) > len(name_tokens):
        return False
    span = len(phrase_tokens)
    return any(
        name_tokens[i : i + span] == phrase_tokens
        for i in range(len(name_tokens) - span + 1)
    )


@dataclass(frozen=True)
class LabelLexicon:
    """Phrase lists per control class plus a euphemism deny-list.

    Invariant (validated on load): the ACCEPT list shares no phrase with
    REJECT, SETTINGS, or SAVE, so no name can legally match both sides.
    """

    classes: dict[ControlClass, tuple[str, ...]]
    euphemisms: tuple[str, ...] = ()
    version: int = 1

    def phrases(self, cls: ControlClass) -> tuple[str, ...]:
        return self.classes.get(cls, ())


def lexicon_from_dict(doc: dict) -> LabelLexicon:
    if not isinstance(doc, dict):
        raise LexiconError("lexicon root must be an object")
    unknown = sorted(set(doc) - {"version", "classes", "euphemisms"})
    if unknown:
        raise LexiconError(f"unknown lexicon keys {unknown}")
    classes_doc = doc.get("classes", {})
    if not isinstance(classes_doc, dict):
        raise LexiconError("classes must be an object")
    classes: dict[ControlClass, tuple[str, ...]] = {}
    for key, phrases in classes_doc.items():
        try:
            cls = ControlClass(key)
        except ValueError:
            raise LexiconError(f"unknown control class {key!r}") from None
        if cls is ControlClass.UNKNOWN:
            raise LexiconError("the unknown class cannot carry phrases")
        if not isinstance(phrases, list) or not all(isinstance(p, str) for p in phrases):
            raise LexiconError(f"phrases for {key!r} must be an array of strings")
        classes[cls] = tuple(phrases)
    euphemisms = doc.get("euphemisms", [])
    if not isinstance(euphemisms, list) or not all(isinstance(p, str) for p in euphemisms):
        raise LexiconError("euphemisms must be an array of strings")

    accept = {_tokens(p) for p in classes.get(ControlClass.ACCEPT, ())}
    for cls in (ControlClass.REJECT, ControlClass.SETTINGS, ControlClass.SAVE):
        overlap = accept & {_tokens(p) for p in classes.get(cls, ())}
        if overlap:
            raise LexiconError(
                f"accept phrases overlap {cls.value} phrases: {sorted(overlap)}"
            )
    return LabelLexicon(
        classes=classes,
        euphemisms=tuple(euphemisms),
        version=int(doc.get("version", 1)),
    )


def load_lexicon(text: str) -> LabelLexicon:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LexiconError(f"malformed lexicon JSON: {exc.msg} (line {exc.lineno})") from exc
    return lexicon_from_dict(doc)


def default_lexicon() -> LabelLexicon:
    """The bundled lexicon shipped with the package."""
    text = resources.files("consentaudit").joinpath("data/lexicon.json").read_text("utf-8")
    return load_lexicon(text)


def classify_control(node: UINode, lexicon: LabelLexicon) -> ControlClass:
    """Map a node's accessible name (falling back to label) to a class.

    Euphemism matches win over class matches and return UNKNOWN. Empty
    names return UNKNOWN. Ties across class lists resolve by fixed
    precedence: reject, save, settings, reversibility, accept,
    informational.
    """
    name = node.accessible_name or node.label
    name_tokens = _tokens(name)
    if not name_tokens:
        return ControlClass.UNKNOWN
    for phrase in lexicon.euphemisms:
        if _contains_phrase(name_tokens, _tokens(phrase)):
            return ControlClass.UNKNOWN
    for cls in _PRECEDENCE:
        for phrase in lexicon.phrases(cls):
            if _contains_phrase(name_tokens, _tokens(phrase)):
                return cls
    return ControlClass.UNKNOWN


def is_material_toggle(node: UINode) -> bool:
    """A consent-category switch: a toggle or checkbox that is enabled."""
    return node.role in TOGGLE_ROLES and node.enabled


@dataclass(frozen=True)
class SurfaceState:
    """The slice of traversal state that detection depends on."""

    pane_id: str
    revealed: frozenset[str] = frozenset()
    toggled: frozenset[str] = frozenset()
    scroll_offset: int = 0
    policy: Policy = Policy.POINTER


def initial_state(snapshot: Snapshot, policy: Policy = Policy.POINTER) -> SurfaceState:
    return SurfaceState(pane_id=snapshot.initial_pane.id, policy=policy)


def node_revealed(node: UINode, state: SurfaceState) -> bool:
    """Render-visibility at this state: declared visible or since revealed."""
    return node.visible or node.id in state.revealed


def in_tab_ring(node: UINode, state: SurfaceState) -> bool:
    """Keyboard reachability: rendered, enabled, interactive, and not
    excluded from sequential focus by a negative tabIndex."""
    return (
        node.pane_id == state.pane_id
        and node.interactive
        and node.enabled
        and node_revealed(node, state)
        and (node.tab_index is None or node.tab_index >= 0)
    )


@dataclass(frozen=True)
class DetectionResult:
    node_id: str
    control_class: ControlClass
    meaningful: bool
    reasons: tuple[str, ...]


def _advances(node: UINode, cls: ControlClass, snapshot: Snapshot,
              lexicon: LabelLexicon, state: SurfaceState) -> tuple[bool, str]:
    """Rule (iv): does activation materially advance refusal or narrowing?"""
    if cls is ControlClass.REJECT:
        return True, "advances-refusal"
    if cls is ControlClass.SAVE:
        flipped = any(
            snapshot.node(t).pane_id == node.pane_id for t in state.toggled
        )
        if flipped:
            return True, "advances-narrowed-save"
        return False, "save-without-narrowing"
    # SETTINGS: substantive advance only if its effects expose material
    # controls (reject/save or a category toggle).
    exposed: list[UINode] = []
    for target in node.effect_targets(EffectKind.REVEAL):
        exposed.extend(snapshot.node(i) for i in sorted(snapshot.subtree_ids(target)))
    for pane in node.effect_targets(EffectKind.NAVIGATE):
        exposed.extend(snapshot.pane_nodes(pane))
    for candidate in exposed:
        if candidate.id == node.id or not candidate.enabled:
            continue
        if is_material_toggle(candidate):
            return True, "advances-to-toggles"
        if classify_control(candidate, lexicon) in (ControlClass.REJECT, ControlClass.SAVE):
            return True, "advances-to-choice"
    return False, "settings-without-substance"


def is_meaningful_alternative(
    node: UINode,
    snapshot: Snapshot,
    lexicon: LabelLexicon,
    state: SurfaceState,
) -> DetectionResult:
    """Apply rules (i)-(iv) at the given state.

    Reasons record every fired rule (positive or disqualifying) so audit
    reports can show *why* a control did or did not count.
    """
    cls = classify_control(node, lexicon)
    reasons: list[str] = [f"class-{cls.value}"]

    def fail(reason: str) -> DetectionResult:
        reasons.append(reason)
        return DetectionResult(node.id, cls, False, tuple(reasons))

    if node.pane_id != state.pane_id:
        return fail("inactive-pane")
    if cls not in NON_ACCEPT_CLASSES:
        return fail("not-an-alternative")
    if not node_revealed(node, state):
        return fail("hidden")
    if not visible_in_viewport(
        _rendered(node, state), state.scroll_offset, snapshot
    ):
        return fail("outside-viewport")
    if not node.enabled:
        return fail("disabled")
    if not node.interactive:
        return fail("not-interactive")
    if state.policy is Policy.KEYBOARD and not in_tab_ring(node, state):
        return fail("not-focusable")
    reasons.append("one-interaction")
    ok, why = _advances(node, cls, snapshot, lexicon, state)
    reasons.append(why)
    if not ok:
        return DetectionResult(node.id, cls, False, tuple(reasons))
    return DetectionResult(node.id, cls, True, tuple(reasons))


def _rendered(node: UINode, state: SurfaceState) -> UINode:
    # Revealed nodes pass the geometric check despite visible=false.
    if node.visible or node.id not in state.revealed:
        return node
    return UINode(
        id=node.id, pane_id=node.pane_id, role=node.role, bounds=node.bounds,
        parent_id=node.parent_id, label=node.label,
        accessible_name=node.accessible_name, visible=True, enabled=node.enabled,
        tab_index=node.tab_index, roving_tab_index=node.roving_tab_index,
        emphasis=node.emphasis, celebratory=node.celebratory,
        rationale_for=node.rationale_for, animation_ms=node.animation_ms,
        effects=node.effects,
    )


def granularity_exposed(
    snapshot: Snapshot,
    lexicon: LabelLexicon,
    policy: Policy = Policy.POINTER,
) -> bool:
    """True when a meaningful alternative is already available on the
    initial pane at scroll offset zero, before any interaction."""
    state = initial_state(snapshot, policy)
    return any(
        is_meaningful_alternative(n, snapshot, lexicon, state).meaningful
        for n in snapshot.pane_nodes(state.pane_id)
    )


def detect_reversibility(snapshot: Snapshot, lexicon: LabelLexicon) -> bool:
    """True when a persistent, enabled, visible control offers a way back
    into consent choices after the surface is gone.

    Persistence is declared in ``meta.persistent`` (the capture layer marks
    containers that outlive the dismissible surface). Both REVERSIBILITY
    and SETTINGS labels count: a persistent footer "Cookie settings" link
    reopens choices just as well as "Change consent".
    """
    for node_id in snapshot.meta.persistent:
        node = snapshot.node(node_id)
        if not (node.interactive and node.enabled and node.visible):
            continue
        if classify_control(node, lexicon) in (
            ControlClass.REVERSIBILITY,
            ControlClass.SETTINGS,
        ):
            return True
    return False
