/**
 * Consent-surface root detection and the stabilization wait.
 *
 * The root heuristic: among overlay-positioned regions (fixed, sticky,
 * or dialog/modal by role), keep those whose subtree text mentions the
 * consent taxonomy, then take the one in the highest z-index band; ties
 * go to the later element in document order, matching paint order for
 * equal z. A selector override bypasses the heuristic entirely.
 */

import { mentionsConsent } from "./lexicon.js";
import { hiddenBySelf, isOverlayPositioned, zIndexOf } from "./styles.js";
import { CaptureError } from "./types.js";

export function findSurfaceRoot(
  doc: Document,
  rootSelector?: string,
): Element {
  if (rootSelector !== undefined) {
    const el = doc.querySelector(rootSelector);
    if (!el) {
      throw new CaptureError(
        `surface root override ${JSON.stringify(rootSelector)} matched nothing`,
      );
    }
    return el;
  }

  const body = doc.body;
  if (!body) throw new CaptureError("document has no body");

  const overlays: Element[] = [];
  for (const el of body.querySelectorAll("*")) {
    if (hiddenBySelf(el)) continue;
    if (isOverlayPositioned(el)) overlays.push(el);
  }

  let best: Element | null = null;
  let bestZ = Number.NEGATIVE_INFINITY;
  let hits = 0;
  for (const el of overlays) {
    if (!mentionsConsent(el.textContent ?? "")) continue;
    hits += 1;
    const z = zIndexOf(el);
    if (z >= bestZ) {
      best = el;
      bestZ = z;
    }
  }
  if (best) return best;

  throw new CaptureError(
    "no consent surface: " +
      `${overlays.length} overlay candidate(s), ${hits} matching the consent lexicon`,
  );
}

/**
 * Resolve once the document has gone `quietMs` without any DOM mutation.
 * Zero resolves immediately. A hard cap guards against pages that never
 * settle; hitting it is an error, not a silent fallthrough.
 */
export function waitForQuiet(
  doc: Document,
  quietMs: number,
  hardCapMs = 10_000,
): Promise<void> {
  if (quietMs <= 0) return Promise.resolve();
  const win = doc.defaultView;
  if (!win) return Promise.resolve();

  return new Promise((resolve, reject) => {
    let quietTimer: ReturnType<Window["setTimeout"]>;
    const observer = new win.MutationObserver(() => {
      win.clearTimeout(quietTimer);
      quietTimer = win.setTimeout(settle, quietMs);
    });
    const capTimer = win.setTimeout(() => {
      observer.disconnect();
      win.clearTimeout(quietTimer);
      reject(
        new CaptureError(`page did not stabilize within ${hardCapMs} ms`),
      );
    }, hardCapMs);
    function settle(): void {
      observer.disconnect();
      win!.clearTimeout(capTimer);
      resolve();
    }
    observer.observe(doc.documentElement ?? doc, {
      subtree: true,
      childList: true,
      attributes: true,
      characterData: true,
    });
    quietTimer = win.setTimeout(settle, quietMs);
  });
}
