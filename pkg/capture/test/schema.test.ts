import { describe, expect, it } from "vitest";

import { formatIssues, validateSnapshotDocument } from "../src/schema.js";
import type { NodeDoc, SnapshotDocument } from "../src/types.js";

function node(id: string, overrides: Partial<NodeDoc> = {}): NodeDoc {
  return {
    id,
    paneId: "main",
    parentId: null,
    role: "button",
    label: "Reject all",
    accessibleName: "Reject all",
    bounds: { x: 10, y: 10, w: 100, h: 40 },
    visible: true,
    enabled: true,
    tabIndex: null,
    rovingTabIndex: false,
    emphasisClass: "plain",
    celebratory: false,
    rationaleFor: null,
    animationMs: 0,
    effects: [],
    ...overrides,
  };
}

function doc(overrides: Partial<SnapshotDocument> = {}): SnapshotDocument {
  return {
    version: 1,
    meta: { source: "test", note: "", breakpoint: "desktop", persistent: [] },
    viewport: { width: 1440, height: 900, name: "desktop" },
    surface: {
      rootNodeId: "root",
      scrollable: false,
      scrollHeight: 900,
      effectiveViewportHeight: null,
    },
    panes: [{ id: "main", initial: true }],
    nodes: [node("root", { role: "container", label: "", accessibleName: "" }), node("b1")],
    ...overrides,
  };
}

describe("snapshot document validation", () => {
  it("accepts a well-formed document", () => {
    expect(validateSnapshotDocument(doc())).toEqual([]);
  });

  it("flags an unresolved pane reference with the offending node id", () => {
    const issues = validateSnapshotDocument(
      doc({ nodes: [node("root", { role: "container" }), node("b1", { paneId: "ghost" })] }),
    );
    expect(issues).toHaveLength(1);
    expect(issues[0]!.nodeId).toBe("b1");
    expect(issues[0]!.message).toContain("ghost");
  });

  it("flags horizontal overflow against the viewport", () => {
    const issues = validateSnapshotDocument(
      doc({
        nodes: [
          node("root", { role: "container" }),
          node("b1", { bounds: { x: 1400, y: 10, w: 100, h: 40 } }),
        ],
      }),
    );
    expect(issues.map((i) => i.nodeId)).toEqual(["b1"]);
    expect(issues[0]!.message).toMatch(/exceeds the viewport horizontally/);
  });

  it("requires exactly one initial pane", () => {
    const issues = validateSnapshotDocument(
      doc({
        panes: [
          { id: "main", initial: true },
          { id: "prefs", initial: true },
        ],
      }),
    );
    expect(issues.some((i) => i.message.includes("exactly one initial pane"))).toBe(true);
  });

  it("checks effect target domains: reveal wants a node, dismiss wants a pane", () => {
    const issues = validateSnapshotDocument(
      doc({
        nodes: [
          node("root", { role: "container" }),
          node("b1", {
            effects: [
              { kind: "reveal", target: "main" },
              { kind: "dismiss", target: "b1" },
            ],
          }),
        ],
      }),
    );
    const messages = issues.map((i) => i.message);
    expect(messages.some((m) => m.includes("reveal target main is not a node"))).toBe(true);
    expect(messages.some((m) => m.includes("dismiss target b1 is not a pane"))).toBe(true);
  });

  it("requires the surface root to resolve", () => {
    const issues = validateSnapshotDocument(
      doc({
        surface: {
          rootNodeId: "missing",
          scrollable: false,
          scrollHeight: 900,
          effectiveViewportHeight: null,
        },
      }),
    );
    expect(issues.some((i) => i.path === "$.surface.rootNodeId")).toBe(true);
  });

  it("requires scrollHeight to cover the scroll window", () => {
    const issues = validateSnapshotDocument(
      doc({
        surface: {
          rootNodeId: "root",
          scrollable: true,
          scrollHeight: 500,
          effectiveViewportHeight: 900,
        },
      }),
    );
    expect(issues.some((i) => i.message.includes("scrollHeight 500"))).toBe(true);
  });

  it("rejects named viewports with mismatched dimensions", () => {
    const issues = validateSnapshotDocument(
      doc({ viewport: { width: 1280, height: 900, name: "desktop" } }),
    );
    expect(issues.some((i) => i.message.includes("1440x900"))).toBe(true);
  });

  it("rejects non-integer geometry", () => {
    const issues = validateSnapshotDocument(
      doc({
        nodes: [
          node("root", { role: "container" }),
          node("b1", { bounds: { x: 1.5, y: 0, w: 10, h: 10 } }),
        ],
      }),
    );
    expect(issues.some((i) => i.nodeId === "b1" && i.path.endsWith(".bounds"))).toBe(true);
  });

  it("formats issues with node context", () => {
    const issues = validateSnapshotDocument(
      doc({ nodes: [node("root", { role: "container" }), node("b1", { paneId: "ghost" })] }),
    );
    expect(formatIssues(issues)).toContain("(node b1)");
  });
});
