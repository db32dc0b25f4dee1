/**
 * Computed-style readers. Everything here is a pure read; no property is
 * ever written back to the page.
 */

export function computed(el: Element): CSSStyleDeclaration {
  const win = el.ownerDocument.defaultView;
  if (!win) throw new Error("element is not attached to a window");
  return win.getComputedStyle(el);
}

export function zIndexOf(el: Element): number {
  const raw = computed(el).zIndex;
  const parsed = Number.parseInt(raw, 10);
  return Number.isFinite(parsed) ? parsed : 0;
}

export function isOverlayPositioned(el: Element): boolean {
  const position = computed(el).position;
  if (position === "fixed" || position === "sticky") return true;
  const role = el.getAttribute("role");
  if (role === "dialog" || role === "alertdialog") return true;
  return el.getAttribute("aria-modal") === "true";
}

/**
 * True when this element's own styling removes it from rendering.
 *
 * CSS visibility inherits, so a computed "hidden" is attributed to this
 * element only when its parent is not also hidden; otherwise the
 * ancestor that introduced it gets the blame during the visibility walk.
 */
export function hiddenBySelf(el: Element): boolean {
  if (el.hasAttribute("hidden")) return true;
  if (el.getAttribute("aria-hidden") === "true") return true;
  const style = computed(el);
  if (style.display === "none") return true;
  if (style.visibility === "hidden") {
    const parent = el.parentElement;
    return parent === null || computed(parent).visibility !== "hidden";
  }
  return false;
}

export function scrollsVertically(el: Element): boolean {
  const overflowY = computed(el).overflowY;
  return overflowY === "auto" || overflowY === "scroll";
}

/** Parse one CSS time token ("300ms", "0.3s") into milliseconds. */
function parseTimeMs(token: string): number {
  const t = token.trim().toLowerCase();
  const match = /^(-?\d+(?:\.\d+)?)(ms|s)$/.exec(t);
  if (!match) return 0;
  const value = Number.parseFloat(match[1]!);
  const ms = match[2] === "s" ? value * 1000 : value;
  return ms > 0 ? ms : 0;
}

function maxTimeIn(value: string): number {
  let best = 0;
  for (const token of value.split(/[\s,]+/)) {
    best = Math.max(best, parseTimeMs(token));
  }
  return best;
}

/**
 * Longest declared transition or animation duration, in whole
 * milliseconds. Looks at the longhand properties and, because style
 * engines do not always expand shorthands, at the `transition` and
 * `animation` shorthand strings as well.
 */
export function declaredAnimationMs(el: Element): number {
  const style = computed(el);
  const candidates = [
    style.transitionDuration,
    style.animationDuration,
    style.transition,
    style.animation,
  ];
  let best = 0;
  for (const value of candidates) {
    if (value) best = Math.max(best, maxTimeIn(value));
  }
  return Math.round(best);
}
