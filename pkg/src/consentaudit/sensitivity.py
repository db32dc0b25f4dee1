"""Sensitivity and robustness analyses.

Two families of checks guard the headline orderings. Perturbation
rebuilds a snapshot under a different viewport height or with extra
animation latency on gating controls and re-audits it, asking whether
the archetype ranking moves. Weight robustness leaves the audits alone
and resamples the scoring weights from a Dirichlet prior, asking how
often each claimed ordering holds across the sampled profiles.

Perturbations are pure: factor 1.0 and delta 0 return the input
snapshot unchanged. A viewport perturbation drops the breakpoint name
when the height actually changes (the dimensions no longer match any
named breakpoint) and keeps the surface scroll height at least one
viewport tall. An animation perturbation touches only gating controls
whose duration was measured; unmeasured gates stay unmeasured, since
the wait budget is a cap rather than a quantity to inflate.

Weight resampling recombines stored component vectors instead of
re-auditing: PSI is linear in the weights, so the recombination is
exact, not an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .detector import Policy
from .scoring import PsiComponents, WeightProfile
from .snapshot import Snapshot, snapshot_from_dict, snapshot_to_dict

VIEWPORT_FACTORS = (0.8, 1.0, 1.2)
ANIMATION_DELTAS_MS = (0, 100, 200)

#: Orderings the robustness harness evaluates, keyed by claim name.
CLAIM_NAMES = (
    "coPresentLowest",
    "multiStepHighest",
    "scrollWallOverAccordion",
    "keyboardOverPointer",
    "mobileOverDesktop",
)

_SUPPORT_THRESHOLDS = {
    "coPresentLowest": 0.95,
    "multiStepHighest": 0.90,
    "keyboardOverPointer": 0.90,
}


def perturb_viewport(snapshot: Snapshot, factor: float) -> Snapshot:
    """Same interface under a viewport ``factor`` times as tall."""
    if factor <= 0:
        raise ValueError("viewport factor must be positive")
    if factor == 1.0:
        return snapshot
    doc = snapshot_to_dict(snapshot)
    vp = doc["viewport"]
    new_height = round(vp["height"] * factor)
    if new_height < 1:
        raise ValueError("viewport factor collapses the viewport")
    changed = new_height != vp["height"]
    vp["height"] = new_height
    if changed and vp.get("name") is not None:
        # dimensions no longer match the named breakpoint
        vp.pop("name")
    surface = doc["surface"]
    new_evh = new_height
    if surface.get("scrollable") and surface.get("effectiveViewportHeight") is not None:
        scaled = round(surface["effectiveViewportHeight"] * factor)
        surface["effectiveViewportHeight"] = scaled
        new_evh = scaled
    if surface.get("scrollable"):
        # a shorter wall than one scroll window is not a scrollable surface
        surface["scrollHeight"] = max(surface["scrollHeight"], new_evh)
    return snapshot_from_dict(doc)


def perturb_animation(snapshot: Snapshot, delta_ms: int) -> Snapshot:
    """Adds ``delta_ms`` to every measured gate duration."""
    if delta_ms < 0:
        raise ValueError("animation delta must be non-negative")
    if delta_ms == 0:
        return snapshot
    doc = snapshot_to_dict(snapshot)
    for node_doc, node in zip(doc["nodes"], snapshot.nodes):
        if node.gates and node.animation_ms is not None:
            node_doc["animationMs"] = node.animation_ms + delta_ms
    return snapshot_from_dict(doc)


# --------------------------------------------------------------------------
# Weight-profile resampling


@dataclass(frozen=True)
class ProfileSample:
    profiles: tuple[WeightProfile, ...]
    constrained: bool
    seed: int
    concentration: float


def sample_weight_profiles(
    count: int,
    seed: int,
    constrained: bool = False,
    concentration: float = 1.0,
    scale: float = 4.0,
    max_weight: float = 2.0,
) -> ProfileSample:
    """Random weight profiles from a flat Dirichlet, scaled so the four
    weights sum to ``scale``. Constrained mode rejects draws where any
    single weight exceeds ``max_weight``."""
    if count < 1:
        raise ValueError("need at least one profile")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    profiles = []
    while len(profiles) < count:
        w = rng.dirichlet([concentration] * 4) * scale
        if constrained and float(w.max()) > max_weight:
            continue
        profiles.append(
            WeightProfile(
                name=f"sample{len(profiles):04d}",
                alpha=float(w[0]),
                beta=float(w[1]),
                gamma=float(w[2]),
                delta=float(w[3]),
            )
        )
    return ProfileSample(
        profiles=tuple(profiles),
        constrained=constrained,
        seed=seed,
        concentration=concentration,
    )


# --------------------------------------------------------------------------
# Rank stability over audited corpora


@dataclass(frozen=True)
class AuditedItem:
    """One (item, policy) audit outcome, reduced to what recombination
    needs."""

    item_id: str
    kind: str
    breakpoint: str
    policy: Policy
    components: PsiComponents


def _median(values: list[float]) -> float:
    return float(np.median(values))


def _psi_under(item: AuditedItem, profile: WeightProfile) -> float:
    c = item.components
    return (
        profile.alpha * c.distance_vh
        + profile.beta * c.time_s
        + profile.gamma * c.focus_loops
        + profile.delta * c.hidden_reveals
    )


def _group_medians(
    items: list[AuditedItem], profile: WeightProfile, key
) -> dict[str, float]:
    groups: dict[str, list[float]] = {}
    for item in items:
        groups.setdefault(key(item), []).append(_psi_under(item, profile))
    return {k: _median(v) for k, v in groups.items()}


def _evaluate_claims(
    items: list[AuditedItem], profile: WeightProfile
) -> dict[str, bool | None]:
    by_kind = _group_medians(items, profile, lambda i: i.kind.lower())
    by_policy = _group_medians(items, profile, lambda i: i.policy.value)
    by_breakpoint = _group_medians(items, profile, lambda i: i.breakpoint)

    claims: dict[str, bool | None] = {}

    kinds = set(by_kind)
    if len(kinds) >= 2 and "co_present" in kinds:
        claims["coPresentLowest"] = all(
            by_kind["co_present"] < v
            for k, v in by_kind.items()
            if k != "co_present"
        )
    else:
        claims["coPresentLowest"] = None
    if len(kinds) >= 2 and "multi_step" in kinds:
        claims["multiStepHighest"] = all(
            by_kind["multi_step"] > v
            for k, v in by_kind.items()
            if k != "multi_step"
        )
    else:
        claims["multiStepHighest"] = None
    if {"scroll_wall", "accordion"} <= kinds:
        claims["scrollWallOverAccordion"] = (
            by_kind["scroll_wall"] > by_kind["accordion"]
        )
    else:
        claims["scrollWallOverAccordion"] = None

    if {"keyboard", "pointer"} <= set(by_policy):
        claims["keyboardOverPointer"] = by_policy["keyboard"] > by_policy["pointer"]
    else:
        claims["keyboardOverPointer"] = None

    if {"mobile", "desktop"} <= set(by_breakpoint):
        claims["mobileOverDesktop"] = by_breakpoint["mobile"] > by_breakpoint["desktop"]
    else:
        claims["mobileOverDesktop"] = None

    return claims


@dataclass(frozen=True)
class RobustnessReport:
    supports: dict[str, float | None]
    profile_count: int
    constrained: bool
    seed: int
    item_count: int
    thresholds: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "claims": {
                name: {
                    "support": (
                        round(self.supports[name], 9)
                        if self.supports[name] is not None
                        else None
                    ),
                    "threshold": self.thresholds.get(name),
                    "holds": (
                        None
                        if self.supports[name] is None
                        else self.supports[name] >= self.thresholds[name]
                        if name in self.thresholds
                        else None
                    ),
                }
                for name in CLAIM_NAMES
            },
            "profileCount": self.profile_count,
            "constrained": self.constrained,
            "seed": self.seed,
            "itemCount": self.item_count,
        }


def rank_stability(
    items: list[AuditedItem],
    sample: ProfileSample,
) -> RobustnessReport:
    """Fraction of sampled weight profiles under which each claimed
    ordering of pooled medians holds. Claims whose groups are absent
    from the corpus report ``None``."""
    if not items:
        raise ValueError("no audited items")
    tallies: dict[str, int] = {name: 0 for name in CLAIM_NAMES}
    evaluable: dict[str, bool] = {name: False for name in CLAIM_NAMES}
    for profile in sample.profiles:
        claims = _evaluate_claims(items, profile)
        for name in CLAIM_NAMES:
            verdict = claims[name]
            if verdict is None:
                continue
            evaluable[name] = True
            if verdict:
                tallies[name] += 1
    n = len(sample.profiles)
    supports = {
        name: (tallies[name] / n if evaluable[name] else None)
        for name in CLAIM_NAMES
    }
    return RobustnessReport(
        supports=supports,
        profile_count=n,
        constrained=sample.constrained,
        seed=sample.seed,
        item_count=len(items),
        thresholds=dict(_SUPPORT_THRESHOLDS),
    )


def component_shares(
    items: list[AuditedItem],
    profile: WeightProfile,
) -> dict[str, dict[str, float] | None]:
    """Per archetype, each weighted component's share of mean PSI.

    Shares sum to one exactly because PSI is their sum. A group whose
    mean PSI is zero has no defined decomposition and reports None.
    """
    groups: dict[str, list[AuditedItem]] = {}
    for item in items:
        groups.setdefault(item.kind.lower(), []).append(item)
    out: dict[str, dict[str, float] | None] = {}
    for kind in sorted(groups):
        members = groups[kind]
        parts = {
            "distanceVh": profile.alpha
            * float(np.mean([i.components.distance_vh for i in members])),
            "timeS": profile.beta
            * float(np.mean([i.components.time_s for i in members])),
            "focusLoops": profile.gamma
            * float(np.mean([i.components.focus_loops for i in members])),
            "hiddenReveals": profile.delta
            * float(np.mean([i.components.hidden_reveals for i in members])),
        }
        total = sum(parts.values())
        if total == 0:
            out[kind] = None
            continue
        out[kind] = {k: v / total for k, v in parts.items()}
    return out
