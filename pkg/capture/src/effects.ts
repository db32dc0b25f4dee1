/**
 * Effect inference from declarative markup only. Dynamic handlers cannot
 * be observed without interacting with the page, and capture never
 * interacts, so anything not declared here comes out as an empty effect
 * list and the engine treats the control as non-advancing.
 *
 * Recognized markers:
 *   - aria-expanded + aria-controls="id ..."  -> reveal each referenced node
 *   - data-pane-target="paneId"               -> navigate to that pane
 *   - data-dismiss / data-dismiss="paneId"    -> dismiss (default: own pane)
 *   - toggle/checkbox roles                   -> toggleState on themselves
 */

import type { EffectDoc, RoleName } from "./types.js";

export interface EffectContext {
  /** Node id assigned to each captured element. */
  nodeIdOf: (el: Element) => string | null;
  /** Pane the element belongs to. */
  paneIdOf: (el: Element) => string;
  /** Known pane ids, for validating explicit dismiss/navigate targets. */
  paneIds: ReadonlySet<string>;
}

export function inferEffects(
  el: Element,
  role: RoleName,
  selfId: string,
  ctx: EffectContext,
): EffectDoc[] {
  const effects: EffectDoc[] = [];

  if (el.hasAttribute("aria-expanded")) {
    const controls = el.getAttribute("aria-controls") ?? "";
    for (const refId of controls.split(/\s+/).filter(Boolean)) {
      const target = el.ownerDocument.getElementById(refId);
      const targetNodeId = target ? ctx.nodeIdOf(target) : null;
      // References to elements outside the captured surface are dropped;
      // an unverifiable reveal is indistinguishable from no reveal.
      if (targetNodeId) effects.push({ kind: "reveal", target: targetNodeId });
    }
  }

  const paneTarget = el.getAttribute("data-pane-target");
  if (paneTarget && ctx.paneIds.has(paneTarget)) {
    effects.push({ kind: "navigate", target: paneTarget });
  }

  if (el.hasAttribute("data-dismiss")) {
    const explicit = el.getAttribute("data-dismiss") ?? "";
    const target =
      explicit && ctx.paneIds.has(explicit) ? explicit : ctx.paneIdOf(el);
    effects.push({ kind: "dismiss", target });
  }

  if (role === "toggle" || role === "checkbox") {
    effects.push({ kind: "toggleState", target: selfId });
  }

  return effects;
}
