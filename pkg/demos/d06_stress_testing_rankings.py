"""
Stress-testing the archetype ranking
====================================

Two robustness questions: does the ranking survive measurement
perturbations (taller viewports, slower animations), and does it
survive reweighting (random Dirichlet profiles)?
"""

import numpy as np

from consentaudit import (
    ANIMATION_DELTAS_MS,
    ArchetypeKind,
    CorpusSpec,
    Policy,
    VIEWPORT_FACTORS,
    canonical_calibration,
    component_shares,
    compute_components,
    compute_psi,
    default_lexicon,
    generate_archetype,
    generate_corpus,
    least_effort_traverse,
    perturb_animation,
    perturb_viewport,
    PROFILES,
    rank_stability,
    sample_weight_profiles,
)
from consentaudit.sensitivity import AuditedItem

lexicon = default_lexicon()
default = PROFILES["default"]


def psi(snapshot):
    trace = least_effort_traverse(snapshot, Policy.POINTER, lexicon)
    return compute_psi(compute_components(trace, snapshot, lexicon), default)


calibration = canonical_calibration()
gallery = {k: generate_archetype(k, calibration[k]) for k in ArchetypeKind}

# Perturbation grid. Taller viewports can only shrink scroll cost;
# slower gates can only add time. The ranking should not care.
print("factor/delta   ", "  ".join(f"{k.value[:6]:>8}" for k in gallery))
for factor in VIEWPORT_FACTORS:
    row = {k: psi(perturb_viewport(s, factor)) for k, s in gallery.items()}
    print(f"viewport x{factor:<4}", "  ".join(f"{row[k]:8.3f}" for k in gallery))
for delta in ANIMATION_DELTAS_MS:
    row = {k: psi(perturb_animation(s, delta)) for k, s in gallery.items()}
    print(f"anim +{delta:<6}ms", "  ".join(f"{row[k]:8.3f}" for k in gallery))

# Weight robustness: audit the seeded corpus once, then recombine the
# frozen components under a thousand random profiles. Support is the
# fraction of profiles under which a claim holds.
rows = []
for item in generate_corpus(CorpusSpec(count_per_archetype=10)):
    for policy in (Policy.POINTER, Policy.KEYBOARD):
        trace = least_effort_traverse(item.snapshot, policy, lexicon)
        comps = compute_components(trace, item.snapshot, lexicon)
        rows.append(AuditedItem(item.item_id, item.kind.value,
                                item.params.breakpoint, policy, comps))

sample = sample_weight_profiles(1000, seed=CorpusSpec().seed)
doc = rank_stability(tuple(rows), sample).to_dict()
for claim, body in sorted(doc["claims"].items()):
    hold = "holds" if body["holds"] else (
        "reported" if body["holds"] is None else "FAILS")
    print(f"{claim:24} support={body['support']:.3f} {hold}")

# Component shares say where each archetype's burden actually lives.
shares = component_shares(tuple(rows), default)
for kind, share in sorted(shares.items()):
    top = max((v, k) for k, v in share.items() if v is not None)
    print(f"{kind:12} dominated by {top[1]} ({top[0]:.0%})")

# A quick numpy cross-check on the sampled weights: they sum to the
# declared scale.
weights = np.array([p.weights() for p in sample.profiles])
assert np.allclose(weights.sum(axis=1), 4.0)
print("sampled profiles:", len(sample.profiles))
