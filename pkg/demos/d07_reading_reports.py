"""
Reports, summaries, and overlays
================================

run_audit is the one-call front door: it traverses under every requested
policy, scores under every requested profile, and emits a canonical JSON
document. Summaries aggregate many documents; overlays draw the evidence.
"""

import json
import tempfile
from pathlib import Path

from consentaudit import (
    ArchetypeKind,
    CorpusSpec,
    Policy,
    canonical_calibration,
    generate_archetype,
    generate_corpus,
    overlay_svg,
    run_audit,
    summarize_reports,
)

calibration = canonical_calibration()
snapshot = generate_archetype(ArchetypeKind.SCROLL_WALL,
                              calibration[ArchetypeKind.SCROLL_WALL])

report = run_audit(snapshot,
                   policies=(Policy.POINTER, Policy.KEYBOARD),
                   profiles=("default", "accessibility"))

# The document is self-describing: config echo, one result block per
# policy, strip, components, per-profile scores, and the evidence frame
# pointing at the terminal control.
doc = json.loads(report.canonical_json())
print("source:", doc["source"])
for result in doc["results"]:
    print(f"  {result['policy']:9} {result['strip']:30}"
          f" psi={result['psiByProfile']['default']}")
print("evidence node:", doc["results"][0]["evidence"]["nodeId"])

# Byte-identical on rerun; golden files stay quiet.
assert report.canonical_json() == run_audit(
    snapshot, policies=(Policy.POINTER, Policy.KEYBOARD),
    profiles=("default", "accessibility")).canonical_json()

# Summaries group report documents by archetype and condition, with
# median/IQR blocks per group.
docs = []
for item in generate_corpus(CorpusSpec(count_per_archetype=4)):
    r = run_audit(item.snapshot, policies=(Policy.POINTER,),
                  provenance=item.provenance())
    docs.append(json.loads(r.canonical_json()))
summary = summarize_reports(docs)
print("reports summarized:", summary["reportCount"])
for block in summary["archetypes"]:
    quartiles = block["psi"]["default"]
    print(f"  {block['archetype']:12} median={quartiles['median']:.3f}"
          f" iqr={quartiles['iqr']:.3f}")

# The SVG overlay highlights the audited route's terminal control so a
# reviewer can eyeball what the engine acted on.
svg = overlay_svg(snapshot, report.results[0].evidence)
out = Path(tempfile.gettempdir()) / "scroll_wall_overlay.svg"
out.write_text(svg, encoding="utf-8")
print("overlay written:", out, f"({len(svg)} bytes)")
