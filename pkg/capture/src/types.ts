/**
 * Snapshot document model (schema version 1) and capture configuration.
 *
 * The document shape mirrors the audit engine's parser exactly: unknown
 * keys are rejected over there, coordinates are integer pixels, effect
 * targets are node ids for reveal/toggleState and pane ids for
 * navigate/dismiss.
 */

export const SCHEMA_VERSION = 1;

/** Named breakpoints the engine validates by exact dimensions. */
export const BREAKPOINTS: Readonly<Record<string, readonly [number, number]>> = {
  desktop: [1440, 900],
  mobile: [390, 844],
};

export type RoleName =
  | "button"
  | "link"
  | "toggle"
  | "checkbox"
  | "expander"
  | "text"
  | "container";

export type EffectKindName = "reveal" | "navigate" | "toggleState" | "dismiss";

export type EmphasisName = "primary" | "secondary" | "plain";

export interface BoundsDoc {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface EffectDoc {
  kind: EffectKindName;
  target: string;
}

export interface NodeDoc {
  id: string;
  paneId: string;
  parentId: string | null;
  role: RoleName;
  label: string;
  accessibleName: string;
  bounds: BoundsDoc;
  visible: boolean;
  enabled: boolean;
  tabIndex: number | null;
  rovingTabIndex: boolean;
  emphasisClass: EmphasisName;
  celebratory: boolean;
  rationaleFor: string | null;
  animationMs: number | null;
  effects: EffectDoc[];
}

export interface PaneDoc {
  id: string;
  initial: boolean;
}

export interface SurfaceDoc {
  rootNodeId: string;
  scrollable: boolean;
  scrollHeight: number;
  effectiveViewportHeight: number | null;
}

export interface ViewportDoc {
  width: number;
  height: number;
  name?: string;
}

export interface MetaDoc {
  source: string;
  note: string;
  breakpoint: string;
  persistent: string[];
}

export interface SnapshotDocument {
  version: number;
  meta: MetaDoc;
  viewport: ViewportDoc;
  surface: SurfaceDoc;
  panes: PaneDoc[];
  nodes: NodeDoc[];
}

export interface CaptureSettings {
  /** Named breakpoint; known names pin the exact viewport dimensions. */
  breakpoint: string;
  /**
   * Quiet window in milliseconds: capture proceeds once no DOM mutations
   * have been observed for this long. Zero skips the wait entirely.
   */
  stabilizationMs: number;
  /** CSS selector that bypasses surface-root detection when provided. */
  rootSelector?: string;
  /** Recorded as meta.source; defaults to the page title. */
  source?: string;
}

export interface PageContext {
  window: Window & typeof globalThis;
}

export class CaptureError extends Error {
  override name = "CaptureError";
}

export function normalizeSettings(
  partial: Partial<CaptureSettings> = {},
): CaptureSettings {
  const settings: CaptureSettings = {
    breakpoint: partial.breakpoint ?? "desktop",
    stabilizationMs: partial.stabilizationMs ?? 0,
    ...(partial.rootSelector !== undefined ? { rootSelector: partial.rootSelector } : {}),
    ...(partial.source !== undefined ? { source: partial.source } : {}),
  };
  if (!Number.isFinite(settings.stabilizationMs) || settings.stabilizationMs < 0) {
    throw new CaptureError(
      `stabilizationMs must be a non-negative number, got ${partial.stabilizationMs}`,
    );
  }
  if (!settings.breakpoint) {
    throw new CaptureError("breakpoint name must be non-empty");
  }
  return settings;
}
