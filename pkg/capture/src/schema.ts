/**
 * Client-side validator for snapshot documents, mirroring the engine
 * parser's rules so a bad capture fails here, with element context,
 * instead of downstream with a stack trace.
 */

import {
  BREAKPOINTS,
  SCHEMA_VERSION,
  type NodeDoc,
  type SnapshotDocument,
} from "./types.js";

const ROLES = new Set([
  "button", "link", "toggle", "checkbox", "expander", "text", "container",
]);
const EFFECT_KINDS = new Set(["reveal", "navigate", "toggleState", "dismiss"]);
const EMPHASES = new Set(["primary", "secondary", "plain"]);

export interface SchemaIssue {
  path: string;
  nodeId?: string;
  message: string;
}

function isInt(value: unknown): value is number {
  return typeof value === "number" && Number.isInteger(value);
}

/** All schema violations in the document; empty means valid. */
export function validateSnapshotDocument(doc: SnapshotDocument): SchemaIssue[] {
  const issues: SchemaIssue[] = [];
  const flag = (path: string, message: string, nodeId?: string) =>
    issues.push(nodeId !== undefined ? { path, nodeId, message } : { path, message });

  if (doc.version !== SCHEMA_VERSION) {
    flag("$.version", `unsupported version ${doc.version}`);
  }

  const { viewport, surface, panes, nodes } = doc;
  if (!isInt(viewport.width) || viewport.width < 1) {
    flag("$.viewport.width", "expected integer >= 1");
  }
  if (!isInt(viewport.height) || viewport.height < 1) {
    flag("$.viewport.height", "expected integer >= 1");
  }
  if (viewport.name !== undefined) {
    const expected = BREAKPOINTS[viewport.name];
    if (expected && (expected[0] !== viewport.width || expected[1] !== viewport.height)) {
      flag(
        "$.viewport",
        `viewport named ${viewport.name} must be ${expected[0]}x${expected[1]}`,
      );
    }
  }

  const paneIds = new Set<string>();
  let initialCount = 0;
  panes.forEach((pane, i) => {
    if (paneIds.has(pane.id)) flag(`$.panes[${i}]`, `duplicate pane id ${pane.id}`);
    paneIds.add(pane.id);
    if (pane.initial) initialCount += 1;
  });
  if (panes.length === 0) flag("$.panes", "expected non-empty array");
  if (initialCount !== 1) {
    flag("$.panes", `expected exactly one initial pane, found ${initialCount}`);
  }

  const byId = new Map<string, NodeDoc>();
  nodes.forEach((node, i) => {
    if (byId.has(node.id)) {
      flag(`$.nodes[${i}]`, `duplicate node id ${node.id}`, node.id);
    }
    byId.set(node.id, node);
  });

  if (!byId.has(surface.rootNodeId)) {
    flag(
      "$.surface.rootNodeId",
      `surface root ${surface.rootNodeId} does not resolve to a node`,
    );
  }
  if (!isInt(surface.scrollHeight) || surface.scrollHeight < 1) {
    flag("$.surface.scrollHeight", "expected integer >= 1");
  }
  const evh =
    surface.scrollable && surface.effectiveViewportHeight !== null
      ? surface.effectiveViewportHeight
      : viewport.height;
  if (surface.scrollable && surface.scrollHeight < evh) {
    flag(
      "$.surface.scrollHeight",
      `scrollHeight ${surface.scrollHeight} < effective viewport height ${evh}`,
    );
  }

  nodes.forEach((node, i) => {
    const path = `$.nodes[${i}]`;
    const here = (sub: string, message: string) =>
      flag(`${path}${sub}`, message, node.id);

    if (!ROLES.has(node.role)) here(".role", `unknown role ${node.role}`);
    if (!EMPHASES.has(node.emphasisClass)) {
      here(".emphasisClass", `unknown emphasis ${node.emphasisClass}`);
    }
    if (!paneIds.has(node.paneId)) {
      here(".paneId", `paneId ${node.paneId} does not resolve`);
    }
    if (node.parentId !== null && !byId.has(node.parentId)) {
      here(".parentId", `parentId ${node.parentId} does not resolve`);
    }
    if (node.rationaleFor !== null && !byId.has(node.rationaleFor)) {
      here(".rationaleFor", `rationaleFor ${node.rationaleFor} does not resolve`);
    }
    const { x, y, w, h } = node.bounds;
    if (![x, y, w, h].every(isInt) || w < 0 || h < 0) {
      here(".bounds", "bounds must be integers with non-negative size");
    } else if (x < 0 || x + w > viewport.width) {
      here(
        ".bounds",
        `node exceeds the viewport horizontally ([${x}, ${x + w}) vs width ${viewport.width})`,
      );
    }
    if (node.animationMs !== null && (!isInt(node.animationMs) || node.animationMs < 0)) {
      here(".animationMs", "expected null or integer >= 0");
    }
    if (node.tabIndex !== null && !isInt(node.tabIndex)) {
      here(".tabIndex", "expected null or integer");
    }
    node.effects.forEach((effect, j) => {
      const epath = `.effects[${j}]`;
      if (!EFFECT_KINDS.has(effect.kind)) {
        here(`${epath}.kind`, `unknown effect kind ${effect.kind}`);
        return;
      }
      const wantsNode = effect.kind === "reveal" || effect.kind === "toggleState";
      const resolves = wantsNode
        ? byId.has(effect.target)
        : paneIds.has(effect.target);
      if (!resolves) {
        here(
          `${epath}.target`,
          `${effect.kind} target ${effect.target} is not a ${wantsNode ? "node" : "pane"}`,
        );
      }
    });
  });

  const initialPane = panes.find((p) => p.initial);
  if (initialPane && !nodes.some((n) => n.paneId === initialPane.id && n.visible)) {
    flag("$.nodes", `initial pane ${initialPane.id} has no visible node`);
  }

  return issues;
}

export function formatIssues(issues: SchemaIssue[]): string {
  return issues
    .map((issue) =>
      issue.nodeId !== undefined
        ? `${issue.path} (node ${issue.nodeId}): ${issue.message}`
        : `${issue.path}: ${issue.message}`,
    )
    .join("; ");
}
