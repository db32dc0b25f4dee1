"""
The archetype gallery and the synthetic corpus
==============================================

Four parameterized generators cover the refusal topologies the engine
measures. Fixing the parameters gives the calibrated gallery; sampling
them under a seed gives an arbitrarily large, fully reproducible corpus.
"""

from consentaudit import (
    ArchetypeKind,
    ArchetypeParams,
    CorpusSpec,
    Policy,
    canonical_calibration,
    compute_components,
    compute_psi,
    default_lexicon,
    generate_archetype,
    generate_corpus,
    least_effort_traverse,
    PROFILES,
    serialize_snapshot,
)

lexicon = default_lexicon()
default = PROFILES["default"]


def psi(snapshot, policy=Policy.POINTER):
    trace = least_effort_traverse(snapshot, policy, lexicon)
    return compute_psi(compute_components(trace, snapshot, lexicon), default)


# Calibrated gallery: one canonical instance per archetype.
calibration = canonical_calibration()
for kind in ArchetypeKind:
    print(f"{kind.value:12} PSI = {psi(generate_archetype(kind, calibration[kind])):.3f}")

# Parameters are plain data. A deeper scroll wall costs more; the
# generator stays deterministic for a given seed.
shallow = generate_archetype(
    ArchetypeKind.SCROLL_WALL,
    ArchetypeParams(scroll_depth_vh=1.2), seed=7)
deep = generate_archetype(
    ArchetypeKind.SCROLL_WALL,
    ArchetypeParams(scroll_depth_vh=2.8), seed=7)
print("shallow wall:", round(psi(shallow), 3), "deep wall:", round(psi(deep), 3))
again = generate_archetype(
    ArchetypeKind.SCROLL_WALL,
    ArchetypeParams(scroll_depth_vh=2.8), seed=7)
assert serialize_snapshot(deep) == serialize_snapshot(again)

# The default corpus: 50 per archetype per breakpoint, seeded. Item ids
# are stable, so studies can cite individual items.
spec = CorpusSpec(count_per_archetype=3)
items = generate_corpus(spec)
print("corpus items:", len(items))
for item in items[:4]:
    print(" ", item.item_id, item.kind.value, item.params.breakpoint)
