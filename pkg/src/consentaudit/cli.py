"""Command-line driver.

Subcommands: audit one or more snapshot files, generate archetype
snapshots, build and audit a seeded corpus, run sensitivity analyses,
summarize report directories, evaluate detector output against labels,
and size a study for a target correlation.

Exit codes: 0 success; 2 invalid snapshot or input document; 3 snapshot
whose surface root does not resolve; 4 at least one audit censored by
budget (reports are still written; censoring is a finding, not a
failure); 64 usage error.

Option precedence: command line beats the optional JSON config file
(``--config``), which beats built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .archetypes import (
    ArchetypeKind,
    ArchetypeParams,
    CorpusSpec,
    canonical_calibration,
    generate_archetype,
    generate_corpus,
)
from .detector import (
    LabelLexicon,
    LexiconError,
    Policy,
    default_lexicon,
    load_lexicon,
)
from .report import (
    AuditReport,
    canonical_json,
    overlay_svg,
    run_audit,
    summarize_reports,
)
from .scoring import PsiComponents, WeightProfile, named_profile
from .sensitivity import (
    ANIMATION_DELTAS_MS,
    VIEWPORT_FACTORS,
    AuditedItem,
    component_shares,
    perturb_animation,
    perturb_viewport,
    rank_stability,
    sample_weight_profiles,
)
from .snapshot import (
    NoSurfaceRootError,
    SnapshotError,
    parse_snapshot,
    serialize_snapshot,
)
from .stats import (
    Confusion2x2,
    cohen_kappa,
    power_sample_size,
    precision_recall,
)
from .traversal import Budget

EXIT_OK = 0
EXIT_INVALID_SNAPSHOT = 2
EXIT_NO_SURFACE_ROOT = 3
EXIT_CENSORED = 4
EXIT_USAGE = 64

_DEFAULT_SEED = 20250801


class _Parser(argparse.ArgumentParser):
    """argparse with the conventional usage exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _fail(message: str, code: int) -> _CliError:
    return _CliError(message, code)


def _policy_arg(value: str) -> str:
    if value not in ("pointer", "keyboard", "both"):
        raise argparse.ArgumentTypeError(
            f"invalid policy {value!r} (choose pointer, keyboard, both)"
        )
    return value


def _policies(value: str) -> tuple[Policy, ...]:
    if value == "both":
        return (Policy.POINTER, Policy.KEYBOARD)
    return (Policy(value),)


def _profiles(spec: str) -> tuple[WeightProfile, ...]:
    names = [p.strip() for p in spec.split(",") if p.strip()]
    if not names:
        raise _fail("no weighting profile named", EXIT_USAGE)
    try:
        return tuple(named_profile(n) for n in names)
    except LookupError as exc:
        raise _fail(str(exc), EXIT_USAGE) from exc


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise _fail(f"cannot read config {path}: {exc}", EXIT_INVALID_SNAPSHOT) from exc
    if not isinstance(doc, dict):
        raise _fail("config root must be an object", EXIT_INVALID_SNAPSHOT)
    return doc


def _resolve(cli_value, config: dict, key: str, default):
    if cli_value is not None:
        return cli_value
    if key in config:
        return config[key]
    return default


def _lexicon(path: str | None) -> LabelLexicon:
    if path is None:
        return default_lexicon()
    try:
        return load_lexicon(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise _fail(f"cannot read lexicon {path}: {exc}", EXIT_INVALID_SNAPSHOT) from exc
    except LexiconError as exc:
        raise _fail(f"invalid lexicon {path}: {exc}", EXIT_INVALID_SNAPSHOT) from exc


def _read_snapshot(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise _fail(f"cannot read snapshot {path}: {exc}", EXIT_INVALID_SNAPSHOT) from exc
    try:
        return parse_snapshot(text)
    except NoSurfaceRootError as exc:
        raise _fail(f"{path}: {exc}", EXIT_NO_SURFACE_ROOT) from exc
    except SnapshotError as exc:
        raise _fail(f"{path}: {exc}", EXIT_INVALID_SNAPSHOT) from exc


def _emit(doc: dict, out: str | None) -> None:
    text = canonical_json(doc)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8")


def _render_text(report: AuditReport) -> str:
    lines = [f"source: {report.source}"]
    for res in report.results:
        d = res.to_dict()
        lines.append(f"[{d['policy']}] terminal: {d['terminal']}")
        lines.append(f"  strip: {d['strip']}")
        c = d["components"]
        lines.append(
            f"  components: distanceVh={c['distanceVh']} timeS={c['timeS']} "
            f"focusLoops={c['focusLoops']} hiddenReveals={c['hiddenReveals']}"
        )
        for name, value in d["psiByProfile"].items():
            lines.append(f"  psi[{name}] = {value}")
        if d["signals"] is not None:
            s = d["signals"]
            lines.append(
                f"  signals: timeToPrimaryS={s['timeToPrimaryS']} "
                f"aai={s['aai']} csi={s['csi']} div={s['div']} "
                f"reversibility={s['reversibility']}"
            )
        elif d["signalsError"]:
            lines.append(f"  signals: unavailable ({d['signalsError']})")
        if d["evidence"] is not None:
            e = d["evidence"]
            lines.append(
                f"  evidence: node {e['nodeId']} on pane {e['paneId']} "
                f"at offset {e['scrollOffset']} (step {e['stepIndex']})"
            )
        else:
            lines.append("  evidence: none (censored)")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# audit


def _cmd_audit(args) -> int:
    snapshots = list(args.snapshots) + list(args.snapshot_flags or ())
    if not snapshots:
        raise _fail("audit needs at least one snapshot file", EXIT_USAGE)
    config = _load_config(args.config)
    policies = _policies(_resolve(args.policy, config, "policy", "pointer"))
    profiles = _profiles(_resolve(args.profile, config, "profile", "default"))
    lexicon = _lexicon(_resolve(args.lexicon, config, "lexicon", None))
    fmt = _resolve(args.format, config, "format", "report")
    budget = Budget(
        max_interactions=_resolve(
            args.max_interactions, config, "maxInteractions", Budget.max_interactions
        ),
        max_pane_depth=_resolve(
            args.max_pane_depth, config, "maxPaneDepth", Budget.max_pane_depth
        ),
        wait_budget_ms=_resolve(
            args.wait_budget_ms, config, "waitBudgetMs", Budget.wait_budget_ms
        ),
    )

    exit_code = EXIT_OK
    out_dir = Path(args.out) if args.out else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
    for raw in snapshots:
        path = Path(raw)
        snapshot = _read_snapshot(path)
        report = run_audit(
            snapshot,
            policies=policies,
            profiles=profiles,
            lexicon=lexicon,
            budget=budget,
        )
        if report.censored:
            exit_code = EXIT_CENSORED
        stem = path.name.removesuffix(".json").removesuffix(".snapshot")
        if fmt == "text":
            rendered = _render_text(report)
            if out_dir is None:
                sys.stdout.write(rendered)
            else:
                (out_dir / f"{stem}.report.txt").write_text(rendered, encoding="utf-8")
        else:
            rendered = report.canonical_json()
            if out_dir is None:
                sys.stdout.write(rendered)
            else:
                (out_dir / f"{stem}.report.json").write_text(rendered, encoding="utf-8")
        if args.overlay:
            if out_dir is None:
                raise _fail("--overlay requires --out", EXIT_USAGE)
            evidence = next(
                (r.evidence for r in report.results if r.evidence is not None), None
            )
            (out_dir / f"{stem}.overlay.svg").write_text(
                overlay_svg(snapshot, evidence), encoding="utf-8"
            )
    return exit_code


# --------------------------------------------------------------------------
# generate


_KIND_SLUGS = {k.value.lower(): k for k in ArchetypeKind}


def _cmd_generate(args) -> int:
    kinds = (
        list(ArchetypeKind)
        if args.archetype == "all"
        else [_KIND_SLUGS[args.archetype]]
    )
    calibrated = canonical_calibration() if args.calibrated else None
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for kind in kinds:
        if calibrated is not None:
            params = calibrated[kind]
            if args.breakpoint and args.breakpoint != params.breakpoint:
                raise _fail(
                    "calibration is defined at the desktop breakpoint", EXIT_USAGE
                )
        else:
            defaults = ArchetypeParams()
            params = ArchetypeParams(
                scroll_depth_vh=(
                    args.scroll_depth_vh
                    if args.scroll_depth_vh is not None
                    else defaults.scroll_depth_vh
                ),
                reveal_count=(
                    args.reveal_count
                    if args.reveal_count is not None
                    else defaults.reveal_count
                ),
                pane_count=(
                    args.pane_count
                    if args.pane_count is not None
                    else defaults.pane_count
                ),
                animation_ms_per_gate=(
                    args.gate_ms
                    if args.gate_ms is not None
                    else defaults.animation_ms_per_gate
                ),
                focus_trap=args.focus_trap,
                breakpoint=args.breakpoint or "desktop",
            )
        try:
            snapshot = generate_archetype(kind, params, seed=args.seed)
        except ValueError as exc:
            raise _fail(str(exc), EXIT_USAGE) from exc
        name = f"{kind.value.lower()}_{params.breakpoint}.snapshot.json"
        (out_dir / name).write_text(serialize_snapshot(snapshot), encoding="utf-8")
        print(out_dir / name)
    return EXIT_OK


# --------------------------------------------------------------------------
# corpus


def _cmd_corpus(args) -> int:
    breakpoints = (
        ("desktop", "mobile")
        if args.breakpoint in (None, "both")
        else (args.breakpoint,)
    )
    policy_names = _policies(args.policy or "both")
    spec = CorpusSpec(
        count_per_archetype=args.count,
        seed=args.seed,
        breakpoints=breakpoints,
        policies=tuple(p.value for p in policy_names),
    )
    lexicon = _lexicon(args.lexicon)
    profiles = _profiles(args.profile or "default")
    out_dir = Path(args.out)
    snap_dir = out_dir / "snapshots"
    report_dir = out_dir / "reports"
    snap_dir.mkdir(parents=True, exist_ok=True)
    report_dir.mkdir(parents=True, exist_ok=True)

    items = generate_corpus(spec)
    manifest_items = []
    any_censored = False
    for item in items:
        snap_path = snap_dir / f"{item.item_id}.snapshot.json"
        snap_path.write_text(serialize_snapshot(item.snapshot), encoding="utf-8")
        report = run_audit(
            item.snapshot,
            policies=policy_names,
            profiles=profiles,
            lexicon=lexicon,
            provenance=item.provenance(),
        )
        any_censored = any_censored or report.censored
        report_path = report_dir / f"{item.item_id}.report.json"
        report_path.write_text(report.canonical_json(), encoding="utf-8")
        manifest_items.append(
            {
                **item.provenance(),
                "snapshot": str(snap_path.relative_to(out_dir)),
                "report": str(report_path.relative_to(out_dir)),
            }
        )
    manifest = {
        "schemaVersion": 1,
        "seed": spec.seed,
        "countPerArchetype": spec.count_per_archetype,
        "breakpoints": list(spec.breakpoints),
        "policies": list(spec.policies),
        "items": manifest_items,
    }
    (out_dir / "manifest.json").write_text(canonical_json(manifest), encoding="utf-8")
    print(f"wrote {len(items)} items under {out_dir}")
    return EXIT_CENSORED if any_censored else EXIT_OK


# --------------------------------------------------------------------------
# sensitivity


def _audited_items_from_reports(report_dir: Path) -> list[AuditedItem]:
    paths = sorted(report_dir.glob("*.report.json"))
    if not paths:
        raise _fail(f"no reports under {report_dir}", EXIT_INVALID_SNAPSHOT)
    items: list[AuditedItem] = []
    for path in paths:
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise _fail(f"cannot read report {path}: {exc}", EXIT_INVALID_SNAPSHOT)
        prov = doc.get("provenance") or {}
        for res in doc.get("results", ()):
            c = res["components"]
            items.append(
                AuditedItem(
                    item_id=prov.get("itemId", path.stem),
                    kind=prov.get("kind", "unknown"),
                    breakpoint=prov.get("breakpoint", "unknown"),
                    policy=Policy(res["policy"]),
                    components=PsiComponents(
                        distance_vh=c["distanceVh"],
                        time_s=c["timeS"],
                        focus_loops=c["focusLoops"],
                        hidden_reveals=c["hiddenReveals"],
                        censored=c.get("censored", False),
                    ),
                )
            )
    return items


def _cmd_sensitivity(args) -> int:
    if args.grid:
        return _sensitivity_grid(args)
    if args.corpus is None:
        raise _fail("sensitivity needs --corpus DIR (or --grid)", EXIT_USAGE)
    items = _audited_items_from_reports(Path(args.corpus) / "reports")
    sample = sample_weight_profiles(
        count=args.samples, seed=args.seed, constrained=args.constrained
    )
    robustness = rank_stability(items, sample)
    shares = component_shares(items, named_profile("default"))
    doc = robustness.to_dict()
    doc["componentShares"] = {
        kind: (
            {k: round(v, 9) for k, v in share.items()} if share is not None else None
        )
        for kind, share in shares.items()
    }
    _emit(doc, args.out)
    return EXIT_OK


def _sensitivity_grid(args) -> int:
    lexicon = _lexicon(args.lexicon)
    profile = named_profile("default")
    calibration = canonical_calibration()
    cells = [(f, 0) for f in VIEWPORT_FACTORS]
    cells += [(1.0, d) for d in ANIMATION_DELTAS_MS if (1.0, d) not in cells]
    entries = []
    for factor, delta in cells:
        psi: dict[str, float] = {}
        for kind, params in calibration.items():
            snapshot = generate_archetype(kind, params, seed=args.seed)
            snapshot = perturb_viewport(snapshot, factor)
            snapshot = perturb_animation(snapshot, delta)
            report = run_audit(snapshot, profiles=(profile,), lexicon=lexicon)
            psi[kind.value.lower()] = report.results[0].psi_by_profile["default"]
        ranking = sorted(psi, key=lambda k: (-psi[k], k))
        entries.append(
            {
                "viewportFactor": factor,
                "animationDeltaMs": delta,
                "psi": {k: round(v, 9) for k, v in sorted(psi.items())},
                "ranking": ranking,
            }
        )
    _emit(
        {
            "schemaVersion": 1,
            "policy": "pointer",
            "profile": "default",
            "entries": entries,
        },
        args.out,
    )
    return EXIT_OK


# --------------------------------------------------------------------------
# summarize


def _cmd_summarize(args) -> int:
    report_dir = Path(args.reports)
    paths = sorted(report_dir.glob("**/*.report.json"))
    if not paths:
        raise _fail(f"no reports under {report_dir}", EXIT_INVALID_SNAPSHOT)
    docs = []
    for path in paths:
        try:
            docs.append(json.loads(path.read_text(encoding="utf-8")))
        except (OSError, json.JSONDecodeError) as exc:
            raise _fail(f"cannot read report {path}: {exc}", EXIT_INVALID_SNAPSHOT)
    _emit(summarize_reports(docs), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# eval


def _load_flags(path: str) -> dict[str, dict[str, bool]]:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise _fail(f"cannot read {path}: {exc}", EXIT_INVALID_SNAPSHOT) from exc
    if not isinstance(doc, dict):
        raise _fail(f"{path}: root must be an object", EXIT_INVALID_SNAPSHOT)
    out = {}
    for key, flags in doc.items():
        if not isinstance(flags, dict) or not {"visible", "actionable"} <= set(flags):
            raise _fail(
                f"{path}: entry {key!r} needs visible and actionable booleans",
                EXIT_INVALID_SNAPSHOT,
            )
        out[key] = {
            "visible": bool(flags["visible"]),
            "actionable": bool(flags["actionable"]),
        }
    return out


def _metric_block(pairs: list[tuple[bool, bool]]) -> dict:
    tp = sum(1 for t, p in pairs if t and p)
    fp = sum(1 for t, p in pairs if not t and p)
    fn = sum(1 for t, p in pairs if t and not p)
    tn = sum(1 for t, p in pairs if not t and not p)
    confusion = Confusion2x2(true_pos=tp, false_pos=fp, false_neg=fn, true_neg=tn)
    precision, recall = precision_recall(confusion)
    kappa = cohen_kappa(confusion)
    return {
        "confusion": confusion.to_dict(),
        "precision": round(precision, 9) if precision is not None else None,
        "recall": round(recall, 9) if recall is not None else None,
        "kappa": round(kappa, 9) if kappa is not None else None,
    }


def _cmd_eval(args) -> int:
    if args.fixtures:
        from .fixtures import detector_predictions, load_fixture_corpus

        lexicon = _lexicon(args.lexicon)
        policy = Policy(args.policy or "pointer")
        if args.policy == "both":
            raise _fail("eval --fixtures takes a single policy", EXIT_USAGE)
        truth: dict[str, dict[str, bool]] = {}
        predicted: dict[str, dict[str, bool]] = {}
        for fixture in load_fixture_corpus():
            preds = detector_predictions(fixture, policy=policy, lexicon=lexicon)
            for node_id, label in fixture.labels.items():
                key = f"{fixture.fixture_id}/{node_id}"
                truth[key] = {
                    "visible": label.visible,
                    "actionable": label.actionable,
                }
                predicted[key] = preds[node_id]
    else:
        if not args.labels or not args.predictions:
            raise _fail(
                "eval needs --labels and --predictions (or --fixtures)", EXIT_USAGE
            )
        truth = _load_flags(args.labels)
        predicted = _load_flags(args.predictions)
        if set(truth) != set(predicted):
            missing = sorted(set(truth) ^ set(predicted))[:5]
            raise _fail(
                f"label/prediction ids differ (e.g. {missing})", EXIT_INVALID_SNAPSHOT
            )

    keys = sorted(truth)
    doc = {
        "schemaVersion": 1,
        "itemCount": len(keys),
        "dimensions": {
            dim: _metric_block(
                [(truth[k][dim], predicted[k][dim]) for k in keys]
            )
            for dim in ("visible", "actionable")
        },
    }
    _emit(doc, args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# power


def _cmd_power(args) -> int:
    try:
        n = power_sample_size(args.effect, alpha=args.alpha, power=args.target_power)
    except ValueError as exc:
        raise _fail(str(exc), EXIT_USAGE) from exc
    if args.format == "text":
        print(f"n = {n}")
    else:
        _emit(
            {
                "targetCorrelation": args.effect,
                "alpha": args.alpha,
                "power": args.target_power,
                "sampleSize": n,
            },
            args.out,
        )
    return EXIT_OK


# --------------------------------------------------------------------------
# parser assembly


def build_parser() -> _Parser:
    parser = _Parser(prog="consentaudit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_audit = sub.add_parser("audit", help="audit snapshot files")
    p_audit.add_argument("snapshots", nargs="*", metavar="SNAPSHOT")
    p_audit.add_argument(
        "--snapshot",
        action="append",
        dest="snapshot_flags",
        metavar="SNAPSHOT",
        help="snapshot file (may repeat); equivalent to positional arguments",
    )
    p_audit.add_argument("--policy", type=_policy_arg)
    p_audit.add_argument("--profile", help="comma-separated weighting profiles")
    p_audit.add_argument("--lexicon", help="label lexicon JSON file")
    p_audit.add_argument("--config", help="JSON config file")
    p_audit.add_argument("--out", help="directory for report files")
    p_audit.add_argument("--format", choices=("report", "text"))
    p_audit.add_argument("--overlay", action="store_true", help="write SVG overlays")
    p_audit.add_argument("--max-interactions", type=int)
    p_audit.add_argument("--max-pane-depth", type=int)
    p_audit.add_argument("--wait-budget-ms", type=int)
    p_audit.set_defaults(func=_cmd_audit)

    p_gen = sub.add_parser("generate", help="emit archetype snapshots")
    p_gen.add_argument(
        "--archetype",
        choices=sorted(_KIND_SLUGS) + ["all"],
        default="all",
    )
    p_gen.add_argument("--breakpoint", choices=("desktop", "mobile"))
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default=".")
    p_gen.add_argument(
        "--calibrated",
        action="store_true",
        help="use the bundled calibration instead of parameter flags",
    )
    p_gen.add_argument("--scroll-depth-vh", type=float)
    p_gen.add_argument("--reveal-count", type=int)
    p_gen.add_argument("--pane-count", type=int)
    p_gen.add_argument("--gate-ms", type=int)
    p_gen.add_argument("--focus-trap", action="store_true")
    p_gen.set_defaults(func=_cmd_generate)

    p_corpus = sub.add_parser("corpus", help="generate and audit a seeded corpus")
    p_corpus.add_argument("--out", required=True)
    p_corpus.add_argument("--seed", type=int, default=_DEFAULT_SEED)
    p_corpus.add_argument("--count", type=int, default=50, help="items per archetype")
    p_corpus.add_argument("--breakpoint", choices=("desktop", "mobile", "both"))
    p_corpus.add_argument("--policy", type=_policy_arg)
    p_corpus.add_argument("--profile")
    p_corpus.add_argument("--lexicon")
    p_corpus.set_defaults(func=_cmd_corpus)

    p_sens = sub.add_parser("sensitivity", help="robustness analyses")
    p_sens.add_argument("--corpus", help="directory produced by the corpus command")
    p_sens.add_argument("--samples", type=int, default=1000)
    p_sens.add_argument("--seed", type=int, default=_DEFAULT_SEED)
    p_sens.add_argument(
        "--constrained",
        action="store_true",
        help="reject sampled profiles with any weight above 2",
    )
    p_sens.add_argument(
        "--grid",
        action="store_true",
        help="viewport/animation perturbation table on calibrated archetypes",
    )
    p_sens.add_argument("--lexicon")
    p_sens.add_argument("--out")
    p_sens.set_defaults(func=_cmd_sensitivity)

    p_sum = sub.add_parser("summarize", help="median/IQR tables over reports")
    p_sum.add_argument("--reports", required=True)
    p_sum.add_argument("--out")
    p_sum.set_defaults(func=_cmd_summarize)

    p_eval = sub.add_parser("eval", help="detector metrics against labels")
    p_eval.add_argument("--labels")
    p_eval.add_argument("--predictions")
    p_eval.add_argument(
        "--fixtures",
        action="store_true",
        help="evaluate the bundled detector on the bundled fixture corpus",
    )
    p_eval.add_argument("--policy", type=_policy_arg)
    p_eval.add_argument("--lexicon")
    p_eval.add_argument("--out")
    p_eval.set_defaults(func=_cmd_eval)

    p_power = sub.add_parser("power", help="sample size for a target correlation")
    p_power.add_argument("--effect", type=float, required=True)
    p_power.add_argument("--alpha", type=float, default=0.05)
    p_power.add_argument("--target-power", type=float, default=0.8)
    p_power.add_argument("--format", choices=("report", "text"), default="report")
    p_power.add_argument("--out")
    p_power.set_defaults(func=_cmd_power)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"consentaudit: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
