"""Deterministic audits of consent interfaces.

Measures the effort a user must spend to reach a non-accepting choice
on a serialized interface snapshot: least-effort traversal under
pointer and keyboard interaction policies, the PSI effort score and
its companion signals, synthetic archetype generation, sensitivity
analyses, and the supporting statistics.
"""

from .archetypes import (
    ArchetypeKind,
    ArchetypeParams,
    CorpusItem,
    CorpusSpec,
    canonical_calibration,
    generate_archetype,
    generate_corpus,
)
from .detector import (
    ControlClass,
    DetectionResult,
    LabelLexicon,
    LexiconError,
    Policy,
    SurfaceState,
    classify_control,
    default_lexicon,
    detect_reversibility,
    granularity_exposed,
    initial_state,
    is_meaningful_alternative,
    lexicon_from_dict,
    load_lexicon,
    node_revealed,
)
from .fixtures import (
    ControlLabel,
    FixtureError,
    LabeledFixture,
    detector_predictions,
    load_fixture_corpus,
)
from .report import (
    REPORT_SCHEMA_VERSION,
    AuditReport,
    EvidenceFrame,
    PolicyResult,
    canonical_json,
    evidence_frame,
    overlay_svg,
    render_event_strip,
    run_audit,
    summarize_reports,
)
from .scoring import (
    PROFILES,
    CompanionSignals,
    PsiComponents,
    SignalError,
    WeightProfile,
    companion_signals,
    compute_aai,
    compute_components,
    compute_csi,
    compute_psi,
    named_profile,
)
from .sensitivity import (
    ANIMATION_DELTAS_MS,
    CLAIM_NAMES,
    VIEWPORT_FACTORS,
    AuditedItem,
    ProfileSample,
    RobustnessReport,
    component_shares,
    perturb_animation,
    perturb_viewport,
    rank_stability,
    sample_weight_profiles,
)
from .snapshot import (
    Bounds,
    NoSurfaceRootError,
    ParseError,
    Snapshot,
    SnapshotError,
    UINode,
    ValidationError,
    Viewport,
    effective_viewport_height,
    parse_snapshot,
    salience,
    serialize_snapshot,
    snapshot_from_dict,
    snapshot_to_dict,
    visible_in_viewport,
)
from .stats import (
    Confusion2x2,
    cohen_kappa,
    icc_absolute_agreement,
    inverse_normal_cdf,
    median_iqr,
    power_sample_size,
    precision_recall,
)
from .traversal import (
    AuditError,
    AuditEvent,
    Budget,
    EventKind,
    EventTrace,
    InteractionGraph,
    Terminal,
    TimingConstants,
    build_interaction_graph,
    count_hidden_reveals,
    least_effort_traverse,
)

__version__ = "0.1.0"

__all__ = [
    "ArchetypeKind",
    "ArchetypeParams",
    "AuditError",
    "AuditEvent",
    "AuditReport",
    "ANIMATION_DELTAS_MS",
    "AuditedItem",
    "Bounds",
    "Budget",
    "CLAIM_NAMES",
    "CompanionSignals",
    "Confusion2x2",
    "ControlClass",
    "ControlLabel",
    "CorpusItem",
    "CorpusSpec",
    "DetectionResult",
    "EventKind",
    "EventTrace",
    "EvidenceFrame",
    "FixtureError",
    "InteractionGraph",
    "LabelLexicon",
    "LabeledFixture",
    "LexiconError",
    "NoSurfaceRootError",
    "PROFILES",
    "ParseError",
    "Policy",
    "PolicyResult",
    "ProfileSample",
    "REPORT_SCHEMA_VERSION",
    "PsiComponents",
    "RobustnessReport",
    "SignalError",
    "Snapshot",
    "SnapshotError",
    "SurfaceState",
    "Terminal",
    "TimingConstants",
    "UINode",
    "VIEWPORT_FACTORS",
    "ValidationError",
    "Viewport",
    "WeightProfile",
    "build_interaction_graph",
    "canonical_calibration",
    "canonical_json",
    "classify_control",
    "cohen_kappa",
    "companion_signals",
    "component_shares",
    "compute_aai",
    "compute_components",
    "compute_csi",
    "compute_psi",
    "count_hidden_reveals",
    "default_lexicon",
    "detect_reversibility",
    "detector_predictions",
    "effective_viewport_height",
    "evidence_frame",
    "generate_archetype",
    "generate_corpus",
    "granularity_exposed",
    "initial_state",
    "icc_absolute_agreement",
    "inverse_normal_cdf",
    "is_meaningful_alternative",
    "lexicon_from_dict",
    "least_effort_traverse",
    "load_fixture_corpus",
    "load_lexicon",
    "node_revealed",
    "median_iqr",
    "named_profile",
    "overlay_svg",
    "parse_snapshot",
    "perturb_animation",
    "perturb_viewport",
    "power_sample_size",
    "precision_recall",
    "rank_stability",
    "render_event_strip",
    "run_audit",
    "salience",
    "sample_weight_profiles",
    "serialize_snapshot",
    "snapshot_from_dict",
    "snapshot_to_dict",
    "summarize_reports",
    "visible_in_viewport",
]
