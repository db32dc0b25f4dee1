export { captureSnapshot, serializeDocument } from "./capture.js";
export { findSurfaceRoot, waitForQuiet } from "./surface.js";
export { validateSnapshotDocument, formatIssues } from "./schema.js";
export type { SchemaIssue } from "./schema.js";
export {
  BREAKPOINTS,
  CaptureError,
  SCHEMA_VERSION,
  normalizeSettings,
} from "./types.js";
export type {
  CaptureSettings,
  PageContext,
  SnapshotDocument,
  NodeDoc,
  PaneDoc,
  EffectDoc,
  BoundsDoc,
  SurfaceDoc,
  ViewportDoc,
  MetaDoc,
  RoleName,
  EffectKindName,
  EmphasisName,
} from "./types.js";
