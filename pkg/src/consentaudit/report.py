"""Audit orchestration and canonical report documents.

An audit runs the five-step pipeline per policy: parse, traverse,
fold components, score under each requested profile, and attach the
evidence frame marking where a non-accepting alternative first became
visible and actionable. Reports serialize canonically (sorted keys,
two-space indent, floats rounded to nine decimals, trailing newline),
so identical inputs give byte-identical documents; no timestamps.

Censored runs still produce full reports: an unreachable alternative is
an audit finding, not a tool failure. Their evidence frame is absent and
the event strip renders as the budget marker.

The evidence frame is structured (node id, geometry, scroll offset, step
index, fired detection reasons) rather than a screenshot; the optional
SVG overlay draws the same geometry for human reviewers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .detector import LabelLexicon, Policy, default_lexicon
from .scoring import (
    CompanionSignals,
    PsiComponents,
    SignalError,
    WeightProfile,
    companion_signals,
    compute_components,
    compute_psi,
    named_profile,
)
from .snapshot import Bounds, Snapshot
from .stats import median_iqr
from .traversal import (
    Budget,
    EventTrace,
    Terminal,
    TimingConstants,
    least_effort_traverse,
)

REPORT_SCHEMA_VERSION = 1


def render_event_strip(trace: EventTrace) -> str:
    """`EV_<KIND>` tokens joined by ` -> `; censored traces end with the
    budget marker."""
    tokens = [f"EV_{e.kind.value}" for e in trace.events]
    if trace.terminal is Terminal.BUDGET_EXHAUSTED:
        tokens.append("[BUDGET_EXHAUSTED]")
    return " -> ".join(tokens)


@dataclass(frozen=True)
class EvidenceFrame:
    node_id: str
    pane_id: str
    bounds: Bounds
    scroll_offset: int
    step_index: int
    reasons: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "nodeId": self.node_id,
            "paneId": self.pane_id,
            "bounds": self.bounds.to_dict(),
            "scrollOffset": self.scroll_offset,
            "stepIndex": self.step_index,
            "firedDetectionReasons": list(self.reasons),
        }


def evidence_frame(trace: EventTrace, snapshot: Snapshot) -> EvidenceFrame | None:
    """The qualifying step of a finished trace; None when censored."""
    if trace.terminal is not Terminal.ALTERNATIVE_REACHED:
        return None
    node = snapshot.node(trace.terminal_node_id)
    state = trace.final_state
    reasons = trace.detection.reasons if trace.detection is not None else ()
    return EvidenceFrame(
        node_id=node.id,
        pane_id=node.pane_id,
        bounds=node.bounds,
        scroll_offset=state.scroll_offset if state is not None else 0,
        step_index=len(trace.events) - 1,
        reasons=tuple(reasons),
    )


@dataclass(frozen=True)
class PolicyResult:
    policy: Policy
    trace: EventTrace
    components: PsiComponents
    psi_by_profile: dict[str, float]
    signals: CompanionSignals | None
    signals_error: str | None
    evidence: EvidenceFrame | None

    def to_dict(self) -> dict:
        return {
            "policy": self.policy.value,
            "terminal": self.trace.terminal.value,
            "strip": render_event_strip(self.trace),
            "events": [e.to_dict() for e in self.trace.events],
            "components": self.components.to_dict(),
            "psiByProfile": {
                name: round(v, 9) for name, v in sorted(self.psi_by_profile.items())
            },
            "signals": self.signals.to_dict() if self.signals is not None else None,
            "signalsError": self.signals_error,
            "evidence": self.evidence.to_dict() if self.evidence is not None else None,
        }


@dataclass(frozen=True)
class AuditReport:
    source: str
    config: dict
    results: tuple[PolicyResult, ...]
    provenance: dict | None = None

    @property
    def censored(self) -> bool:
        return any(r.trace.censored for r in self.results)

    def to_dict(self) -> dict:
        doc = {
            "schemaVersion": REPORT_SCHEMA_VERSION,
            "source": self.source,
            "config": self.config,
            "results": [r.to_dict() for r in self.results],
        }
        if self.provenance is not None:
            doc["provenance"] = self.provenance
        return doc

    def canonical_json(self) -> str:
        return canonical_json(self.to_dict())


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _resolve_profiles(
    profiles: tuple[WeightProfile | str, ...]
) -> tuple[WeightProfile, ...]:
    return tuple(named_profile(p) if isinstance(p, str) else p for p in profiles)


def run_audit(
    snapshot: Snapshot,
    policies: tuple[Policy, ...] = (Policy.POINTER,),
    profiles: tuple[WeightProfile | str, ...] = ("default",),
    lexicon: LabelLexicon | None = None,
    budget: Budget = Budget(),
    timing: TimingConstants = TimingConstants(),
    provenance: dict | None = None,
) -> AuditReport:
    """Full audit of one parsed snapshot under the given policies."""
    lexicon = lexicon or default_lexicon()
    resolved = _resolve_profiles(profiles)
    results = []
    for policy in policies:
        trace = least_effort_traverse(snapshot, policy, lexicon, budget, timing)
        components = compute_components(trace, snapshot, lexicon)
        psi = {p.name: compute_psi(components, p) for p in resolved}
        signals = None
        signals_error = None
        try:
            signals = companion_signals(snapshot, trace, components, lexicon)
        except SignalError as exc:
            signals_error = str(exc)
        results.append(
            PolicyResult(
                policy=policy,
                trace=trace,
                components=components,
                psi_by_profile=psi,
                signals=signals,
                signals_error=signals_error,
                evidence=evidence_frame(trace, snapshot),
            )
        )
    config = {
        "policies": [p.value for p in policies],
        "profiles": [p.name for p in resolved],
        "budget": {
            "maxInteractions": budget.max_interactions,
            "maxPaneDepth": budget.max_pane_depth,
            "waitBudgetMs": budget.wait_budget_ms,
            "maxStates": budget.max_states,
        },
        "timing": {
            "interactionHandlingS": timing.interaction_handling_s,
            "scrollSPerViewport": timing.scroll_s_per_viewport,
            "keyStepS": timing.key_step_s,
        },
        "lexiconVersion": lexicon.version,
    }
    return AuditReport(
        source=snapshot.meta.source or "unknown",
        config=config,
        results=tuple(results),
        provenance=provenance,
    )


# --------------------------------------------------------------------------
# Corpus summaries


def _quartile_block(values: list[float]) -> dict:
    med, q1, q3 = median_iqr(values)
    return {
        "median": round(med, 9),
        "q1": round(q1, 9),
        "q3": round(q3, 9),
        "iqr": round(q3 - q1, 9),
        "n": len(values),
    }


def summarize_reports(reports: list[dict]) -> dict:
    """Median/IQR table over report documents, grouped by
    (breakpoint x policy) condition and by archetype."""
    if not reports:
        raise ValueError("no reports to summarize")

    rows: list[dict] = []
    for doc in reports:
        prov = doc.get("provenance") or {}
        for res in doc.get("results", ()):
            rows.append(
                {
                    "breakpoint": prov.get("breakpoint", "unknown"),
                    "archetype": prov.get("kind", "unknown"),
                    "policy": res["policy"],
                    "components": res["components"],
                    "psi": res["psiByProfile"],
                }
            )

    def summarize_group(group: list[dict]) -> dict:
        profiles = sorted({name for r in group for name in r["psi"]})
        out = {
            "psi": {
                name: _quartile_block([r["psi"][name] for r in group if name in r["psi"]])
                for name in profiles
            },
            "components": {
                key: _quartile_block([r["components"][key] for r in group])
                for key in ("distanceVh", "timeS", "focusLoops", "hiddenReveals")
            },
        }
        return out

    conditions = sorted({(r["breakpoint"], r["policy"]) for r in rows})
    archetypes = sorted({r["archetype"] for r in rows})
    return {
        "schemaVersion": REPORT_SCHEMA_VERSION,
        "reportCount": len(reports),
        "conditions": [
            {
                "breakpoint": bp,
                "policy": pol,
                **summarize_group(
                    [r for r in rows if r["breakpoint"] == bp and r["policy"] == pol]
                ),
            }
            for bp, pol in conditions
        ],
        "archetypes": [
            {
                "archetype": kind,
                **summarize_group([r for r in rows if r["archetype"] == kind]),
            }
            for kind in archetypes
        ],
    }


# --------------------------------------------------------------------------
# Reviewer overlay


def overlay_svg(snapshot: Snapshot, evidence: EvidenceFrame | None) -> str:
    """Vector rendering of the snapshot geometry with the evidence node
    highlighted; a reviewer aid, not part of the canonical report."""
    vp = snapshot.viewport
    height = max(vp.height, snapshot.surface.scroll_height)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{vp.width}" '
        f'height="{height}" viewBox="0 0 {vp.width} {height}">',
        f'<rect x="0" y="0" width="{vp.width}" height="{height}" fill="#fafafa"/>',
        f'<rect x="0" y="0" width="{vp.width}" height="{vp.height}" '
        f'fill="none" stroke="#888" stroke-dasharray="6 4"/>',
    ]
    pane = snapshot.initial_pane.id
    for node in snapshot.pane_nodes(pane):
        if not node.visible:
            continue
        b = node.bounds
        fill = "#dde6f0" if node.interactive else "#eeeeee"
        parts.append(
            f'<rect x="{b.x}" y="{b.y}" width="{b.w}" height="{b.h}" '
            f'fill="{fill}" stroke="#999"/>'
        )
        if node.label:
            label = node.label[:40].replace("&", "&amp;").replace("<", "&lt;")
            parts.append(
                f'<text x="{b.x + 4}" y="{b.y + 16}" font-size="12" '
                f'fill="#333">{label}</text>'
            )
    if evidence is not None:
        b = evidence.bounds
        parts.append(
            f'<rect x="{b.x - 3}" y="{b.y - 3}" width="{b.w + 6}" height="{b.h + 6}" '
            f'fill="none" stroke="#c43c00" stroke-width="3"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
