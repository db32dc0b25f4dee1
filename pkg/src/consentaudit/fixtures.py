"""Labeled fixture corpus: authored snapshots with exact ground truth.

Every fixture was written by hand or emitted by the archetype generator
with known parameters, so its labels are correct by construction rather
than by annotation. Each control's label records whether it is fully
visible in the first viewport without any interaction, whether one
interaction from the initial state completes a non-accepting choice,
and its control class. Expected traversal outcomes (event strip,
terminal, component vector, default-profile PSI) are frozen per policy.

The corpus deliberately includes cases where the rule-based detector
disagrees with authored truth: euphemistic labels on real controls,
icon-only controls with no accessible name, controls clipped by a few
pixels at the fold, and controls a backdrop occludes. Those divergences
are what the evaluation metrics measure; they are features of the
corpus, not defects.

Loading is strict: a fixture that fails to parse, a manifest count that
disagrees with the entries, or a label naming a missing node fails the
whole load.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .detector import (
    LabelLexicon,
    Policy,
    SurfaceState,
    default_lexicon,
    is_meaningful_alternative,
    node_revealed,
)
from .snapshot import Snapshot, parse_snapshot, visible_in_viewport

FIXTURE_CORPUS_VERSION = 1


class FixtureError(ValueError):
    """Raised when the bundled fixture corpus is malformed."""


@dataclass(frozen=True)
class ControlLabel:
    visible: bool
    actionable: bool
    control_class: str

    def to_dict(self) -> dict:
        return {
            "visible": self.visible,
            "actionable": self.actionable,
            "controlClass": self.control_class,
        }


@dataclass(frozen=True)
class PolicyExpectation:
    strip: str
    terminal: str
    components: dict
    psi_default: float


@dataclass(frozen=True)
class LabeledFixture:
    fixture_id: str
    archetype: str
    note: str
    snapshot: Snapshot
    labels: dict[str, ControlLabel]
    expected: dict[str, PolicyExpectation]


def _parse_expectation(doc: dict, where: str) -> PolicyExpectation:
    try:
        return PolicyExpectation(
            strip=doc["strip"],
            terminal=doc["terminal"],
            components=doc["components"],
            psi_default=float(doc["psiDefault"]),
        )
    except KeyError as exc:
        raise FixtureError(f"{where}: missing expectation key {exc}") from exc


def load_fixture_corpus() -> tuple[LabeledFixture, ...]:
    """All bundled fixtures, parsed and cross-checked; raises FixtureError
    on any inconsistency."""
    root = resources.files("consentaudit") / "fixtures"
    try:
        manifest = json.loads((root / "manifest.json").read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise FixtureError("fixture manifest missing") from exc

    if manifest.get("version") != FIXTURE_CORPUS_VERSION:
        raise FixtureError(
            f"unsupported fixture corpus version {manifest.get('version')!r}"
        )
    entries = manifest.get("fixtures", [])
    declared = manifest.get("count")
    if declared != len(entries):
        raise FixtureError(
            f"manifest declares {declared} fixtures but lists {len(entries)}"
        )

    fixtures = []
    seen: set[str] = set()
    for entry in entries:
        fid = entry["id"]
        if fid in seen:
            raise FixtureError(f"duplicate fixture id {fid!r}")
        seen.add(fid)
        text = (root / entry["file"]).read_text(encoding="utf-8")
        snapshot = parse_snapshot(text)  # any invalid fixture fails the load
        labels = {
            node_id: ControlLabel(
                visible=bool(l["visible"]),
                actionable=bool(l["actionable"]),
                control_class=str(l["controlClass"]),
            )
            for node_id, l in entry["labels"].items()
        }
        for node_id in labels:
            if not snapshot.has_node(node_id):
                raise FixtureError(f"{fid}: label for missing node {node_id!r}")
        expected = {
            policy: _parse_expectation(doc, f"{fid}/{policy}")
            for policy, doc in entry.get("expected", {}).items()
        }
        fixtures.append(
            LabeledFixture(
                fixture_id=fid,
                archetype=entry.get("archetype", "handwritten"),
                note=entry.get("note", ""),
                snapshot=snapshot,
                labels=labels,
                expected=expected,
            )
        )
    return tuple(fixtures)


def detector_predictions(
    fixture: LabeledFixture,
    policy: Policy = Policy.POINTER,
    lexicon: LabelLexicon | None = None,
) -> dict[str, dict[str, bool]]:
    """Rule-based predictions for every labeled control of one fixture.

    Visibility: rendered on the initial pane and fully inside the first
    viewport with no interaction. Actionability: meaningful under the
    detector at the initial surface state.
    """
    lexicon = lexicon or default_lexicon()
    snapshot = fixture.snapshot
    state = SurfaceState(pane_id=snapshot.initial_pane.id, policy=policy)
    out = {}
    for node_id in fixture.labels:
        node = snapshot.node(node_id)
        on_initial = node.pane_id == state.pane_id
        visible = (
            on_initial
            and node_revealed(node, state)
            and visible_in_viewport(node, 0, snapshot)
        )
        meaningful = (
            on_initial
            and is_meaningful_alternative(node, snapshot, lexicon, state).meaningful
        )
        out[node_id] = {"visible": visible, "actionable": meaningful}
    return out
