"""
Measurement utilities: agreement, detection quality, and power
==============================================================

The statistics module carries the small, heavily specified numerics the
audits depend on: chance-corrected agreement, precision/recall over a
2x2 confusion, intraclass correlation, quartiles, and a sample-size
calculation for correlation studies.
"""

from consentaudit import (
    Confusion2x2,
    cohen_kappa,
    detector_predictions,
    icc_absolute_agreement,
    inverse_normal_cdf,
    load_fixture_corpus,
    median_iqr,
    power_sample_size,
    precision_recall,
)

# The worked agreement example: two raters, 100 items, kappa 0.70.
confusion = Confusion2x2(40, 5, 10, 45)
print("kappa:", cohen_kappa(confusion))
print("precision/recall:", precision_recall(confusion))

# ICC for continuous double-coding, two-way random effects.
ratings = [[1.0, 1.1], [2.0, 2.1], [3.0, 2.9], [4.0, 4.2]]
print("ICC:", round(icc_absolute_agreement(ratings), 4))

# Sample size for detecting a correlation at alpha 0.05, power 0.80.
for effect in (0.25, 0.30, 0.50):
    print(f"r={effect}: n = {power_sample_size(effect, 0.05, 0.80)}")
print("z(0.975) =", round(inverse_normal_cdf(0.975), 6))

# The bundled labeled fixtures put the detector on the bench: 60 hand
# labeled surfaces, two binary dimensions per control.
counts = {"visible": [0, 0, 0, 0], "actionable": [0, 0, 0, 0]}
for fixture in load_fixture_corpus():
    preds = detector_predictions(fixture)
    for node_id, label in fixture.labels.items():
        for dim in counts:
            truth = getattr(label, dim)
            pred = preds[node_id][dim]
            slot = (0 if truth else 1) if pred else (2 if truth else 3)
            counts[dim][slot] += 1
for dim, (tp, fp, fn, tn) in counts.items():
    p, r = precision_recall(Confusion2x2(tp, fp, fn, tn))
    print(f"{dim:10} P={p:.3f} R={r:.3f}  (tp={tp} fp={fp} fn={fn} tn={tn})")

# Quartiles the way the summaries report them.
median, q1, q3 = median_iqr([0.87, 1.58, 1.72, 2.33])
print("median:", median, "IQR:", round(q3 - q1, 3))
