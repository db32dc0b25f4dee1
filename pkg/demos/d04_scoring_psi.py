"""
From a trace to a PSI score
===========================

PSI folds a traversal into one number: alpha * D/vh + beta * T +
gamma * F + delta * H. The weights live in named profiles so a study
can state its priorities up front and swap them without re-auditing.
"""

from consentaudit import (
    ArchetypeKind,
    PROFILES,
    Policy,
    canonical_calibration,
    companion_signals,
    compute_components,
    compute_psi,
    default_lexicon,
    generate_archetype,
    least_effort_traverse,
)

lexicon = default_lexicon()
calibration = canonical_calibration()

snapshot = generate_archetype(ArchetypeKind.ACCORDION,
                              calibration[ArchetypeKind.ACCORDION])
trace = least_effort_traverse(snapshot, Policy.POINTER, lexicon)
comps = compute_components(trace, snapshot, lexicon)

print("components:", comps.to_dict())

# Profiles shift emphasis, not substance. The accessibility profile
# doubles the focus-loop weight; the disclosure profile doubles the
# hidden-reveal weight.
for name, profile in PROFILES.items():
    print(f"{name:14} PSI = {compute_psi(comps, profile):.3f}")

# Companion signals answer the questions PSI deliberately folds away:
# how long, how far, was granularity visible at load, is consent
# revisable, and the asymmetry indices.
signals = companion_signals(snapshot, trace, comps, lexicon)
print("time to primary:", signals.time_to_primary_s, "s")
print("distance:", signals.distance_to_choice_vh, "vh")
print("granularity exposed:", signals.granularity_exposed)
print("reversible:", signals.reversibility)
print("AAI:", signals.aai, "CSI:", signals.csi, "DIV:", signals.div)
