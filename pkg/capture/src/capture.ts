/**
 * First-encounter capture: serialize a live consent surface into a
 * snapshot document without touching the page.
 *
 * The whole pass is observational: computed styles, layout rects,
 * attributes, and text are read; nothing is clicked, focused, scrolled,
 * or written. Interaction semantics therefore come only from declarative
 * markup (see effects.ts); the engine simulates activation later.
 *
 * Pane convention: the surface root is the initial pane (id from its
 * data-pane attribute, "main" otherwise). Each descendant carrying
 * data-pane="id" declares a further, non-initial pane. Hidden styling on
 * a pane container is how pages park inactive panes, so it does not
 * count against the visibility of the pane's content: visibility walks
 * stop at pane boundaries, and pane containers themselves are recorded
 * visible. Geometry of inactive panes is whatever layout reports, so
 * pages that park panes with display:none (collapsing them to zero size)
 * should prefer visibility:hidden if their geometry matters.
 */

import {
  accessibleNameOf,
  emphasisOf,
  isRovingMember,
  labelOf,
  ownText,
  roleOf,
  shouldSkip,
  tabIndexOf,
} from "./accessibility.js";
import { inferEffects, type EffectContext } from "./effects.js";
import { formatIssues, validateSnapshotDocument } from "./schema.js";
import { findSurfaceRoot, waitForQuiet } from "./surface.js";
import { collapse, isCelebratory } from "./lexicon.js";
import { declaredAnimationMs, hiddenBySelf, scrollsVertically } from "./styles.js";
import {
  BREAKPOINTS,
  CaptureError,
  SCHEMA_VERSION,
  normalizeSettings,
  type CaptureSettings,
  type NodeDoc,
  type PageContext,
  type PaneDoc,
  type SnapshotDocument,
  type ViewportDoc,
} from "./types.js";

interface Entry {
  el: Element;
  id: string;
  role: NodeDoc["role"];
  parentId: string | null;
  paneId: string;
}

function viewportFor(settings: CaptureSettings, win: Window): ViewportDoc {
  const known = BREAKPOINTS[settings.breakpoint];
  if (known) {
    return { width: known[0], height: known[1], name: settings.breakpoint };
  }
  return {
    width: Math.max(1, Math.round(win.innerWidth || 1024)),
    height: Math.max(1, Math.round(win.innerHeight || 768)),
    name: settings.breakpoint,
  };
}

function roundRect(el: Element): { x: number; y: number; w: number; h: number } {
  const rect = el.getBoundingClientRect();
  return {
    x: Math.round(rect.left),
    y: Math.round(rect.top),
    w: Math.round(rect.width),
    h: Math.round(rect.height),
  };
}

/** Rounding and scrollbar jitter this small snaps onto the viewport edge. */
const EDGE_JITTER_PX = 2;

/**
 * Snap jitter-scale horizontal overhang onto the viewport edges. Real
 * overhang is kept as measured so validation refuses the capture:
 * geometry that does not fit the declared viewport means the page was
 * laid out for a different one, and clipping it would fabricate a
 * surface nobody saw.
 */
function snapHorizontal(
  rect: { x: number; y: number; w: number; h: number },
  viewportWidth: number,
): { x: number; y: number; w: number; h: number } {
  let { x, w } = rect;
  if (x < 0 && x >= -EDGE_JITTER_PX) {
    w = Math.max(0, w + x);
    x = 0;
  }
  const right = x + w;
  if (right > viewportWidth && right <= viewportWidth + EDGE_JITTER_PX) {
    w = Math.max(0, viewportWidth - x);
  }
  return { x, y: rect.y, w, h: rect.h };
}

function isPaneContainer(el: Element): boolean {
  return el.hasAttribute("data-pane");
}

function visibleOf(el: Element, root: Element): boolean {
  if (el !== root && isPaneContainer(el)) return true;
  let cursor: Element | null = el;
  while (cursor) {
    if (cursor !== el && isPaneContainer(cursor)) break;
    if (hiddenBySelf(cursor)) return false;
    if (cursor === root) break;
    cursor = cursor.parentElement;
  }
  return true;
}

export async function captureSnapshot(
  context: PageContext,
  settingsPartial: Partial<CaptureSettings> = {},
): Promise<SnapshotDocument> {
  const settings = normalizeSettings(settingsPartial);
  const win = context.window;
  const doc = win.document;

  await waitForQuiet(doc, settings.stabilizationMs);
  const root = findSurfaceRoot(doc, settings.rootSelector);

  const viewport = viewportFor(settings, win);
  const rootPaneId = root.getAttribute("data-pane") || "main";

  // Pass 1: choose elements, assign ids, resolve pane membership.
  const entries: Entry[] = [];
  const idOf = new Map<Element, string>();
  const usedIds = new Set<string>();
  let autoCounter = 0;
  const assignId = (el: Element): string => {
    const own = el.id && !usedIds.has(el.id) ? el.id : null;
    let id = own ?? `cap_${String(autoCounter).padStart(3, "0")}`;
    while (usedIds.has(id)) {
      autoCounter += 1;
      id = `cap_${String(autoCounter).padStart(3, "0")}`;
    }
    if (own === null) autoCounter += 1;
    usedIds.add(id);
    return id;
  };

  const panes: PaneDoc[] = [{ id: rootPaneId, initial: true }];

  const walk = (el: Element, parentId: string | null, paneId: string): void => {
    if (shouldSkip(el)) return;
    const isRoot = el === root;
    let role = roleOf(el);
    if (isRoot && role === null) role = "container";
    if (!isRoot && isPaneContainer(el)) {
      role = role === null || role === "text" ? "container" : role;
      panes.push({ id: el.getAttribute("data-pane")!, initial: false });
    }

    let ownId = parentId;
    let ownPane = paneId;
    if (!isRoot && isPaneContainer(el)) {
      ownPane = el.getAttribute("data-pane")!;
    }
    if (role !== null) {
      const id = assignId(el);
      idOf.set(el, id);
      entries.push({ el, id, role, parentId, paneId: ownPane });
      ownId = id;
    }
    for (const child of el.children) walk(child, ownId, ownPane);
  };
  walk(root, null, rootPaneId);

  const paneIds = new Set(panes.map((p) => p.id));
  const byId = new Map(entries.map((e) => [e.id, e.el] as const));
  const effectCtx: EffectContext = {
    nodeIdOf: (el) => idOf.get(el) ?? null,
    paneIdOf: (el) => {
      let cursor: Element | null = el;
      while (cursor && cursor !== root) {
        if (isPaneContainer(cursor)) return cursor.getAttribute("data-pane")!;
        cursor = cursor.parentElement;
      }
      return rootPaneId;
    },
    paneIds,
  };

  // Pass 2: read everything else off each chosen element.
  const nodes: NodeDoc[] = [];
  const nodeById = new Map<string, NodeDoc>();
  for (const entry of entries) {
    const { el, id, role } = entry;
    const effects = inferEffects(el, role, id, effectCtx);

    // A control's activation gate lasts as long as the longest transition
    // it triggers: its own declared duration or any reveal target's.
    let animationMs = declaredAnimationMs(el);
    for (const effect of effects) {
      if (effect.kind !== "reveal") continue;
      const target = byId.get(effect.target);
      if (target) animationMs = Math.max(animationMs, declaredAnimationMs(target));
    }

    const label = labelOf(el, role);
    const node: NodeDoc = {
      id,
      paneId: entry.paneId,
      parentId: entry.parentId,
      role,
      label,
      accessibleName: accessibleNameOf(el, role),
      bounds: snapHorizontal(roundRect(el), viewport.width),
      visible: visibleOf(el, root),
      enabled:
        !el.hasAttribute("disabled") && el.getAttribute("aria-disabled") !== "true",
      tabIndex: tabIndexOf(el),
      rovingTabIndex: isRovingMember(el, root),
      emphasisClass: emphasisOf(el),
      celebratory: isCelebratory(role === "text" ? label : ownText(el)),
      rationaleFor: null,
      animationMs,
      effects,
    };
    nodes.push(node);
    nodeById.set(id, node);
  }

  // Pass 3: attach rationale text to the control it describes.
  for (const entry of entries) {
    const described = entry.el.getAttribute("aria-describedby");
    if (!described) continue;
    for (const refId of described.split(/\s+/).filter(Boolean)) {
      const refEl = doc.getElementById(refId);
      const refNodeId = refEl ? idOf.get(refEl) : undefined;
      const refNode = refNodeId ? nodeById.get(refNodeId) : undefined;
      if (refNode && refNode.role === "text" && refNode.rationaleFor === null) {
        refNode.rationaleFor = entry.id;
        break;
      }
    }
  }

  nodes.sort((a, b) => (a.id < b.id ? -1 : a.id > b.id ? 1 : 0));
  panes.sort((a, b) => (a.id < b.id ? -1 : a.id > b.id ? 1 : 0));

  const rootNodeId = idOf.get(root)!;
  const contentBottom = nodes.reduce(
    (acc, n) => Math.max(acc, n.bounds.y + n.bounds.h),
    0,
  );
  const rootRect = roundRect(root);
  let surface: SnapshotDocument["surface"];
  if (scrollsVertically(root)) {
    const evh = Math.max(1, rootRect.h);
    surface = {
      rootNodeId,
      scrollable: true,
      scrollHeight: Math.max(contentBottom, evh),
      effectiveViewportHeight: evh,
    };
  } else {
    const scrollable = contentBottom > viewport.height;
    surface = {
      rootNodeId,
      scrollable,
      scrollHeight: Math.max(contentBottom, scrollable ? viewport.height : 1),
      effectiveViewportHeight: null,
    };
  }

  const snapshot: SnapshotDocument = {
    version: SCHEMA_VERSION,
    meta: {
      source:
        settings.source ??
        `capture:${collapse(doc.title) || "untitled"}`,
      note: "",
      breakpoint: settings.breakpoint,
      persistent: [],
    },
    viewport,
    surface,
    panes,
    nodes,
  };

  const issues = validateSnapshotDocument(snapshot);
  if (issues.length > 0) {
    throw new CaptureError(
      `captured snapshot failed schema validation: ${formatIssues(issues)}`,
    );
  }
  return snapshot;
}

/** Stable, human-diffable serialization of a snapshot document. */
export function serializeDocument(doc: SnapshotDocument): string {
  return JSON.stringify(doc, null, 2) + "\n";
}
