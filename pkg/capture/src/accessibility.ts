/**
 * Role, name, and focus-order inference from markup and ARIA attributes.
 *
 * Follows the accessible-name precedence that matters for consent
 * controls: aria-label, then aria-labelledby, then an associated
 * <label for=...>, then the title attribute, then visible text.
 */

import { collapse } from "./lexicon.js";
import type { EmphasisName, RoleName } from "./types.js";

const TEXT_TAGS = new Set([
  "p", "span", "h1", "h2", "h3", "h4", "h5", "h6",
  "label", "li", "small", "em", "strong", "b", "i",
]);

const SKIP_TAGS = new Set([
  "script", "style", "template", "link", "meta", "br", "hr", "noscript",
  "title", "head",
]);

export function shouldSkip(el: Element): boolean {
  return SKIP_TAGS.has(el.tagName.toLowerCase());
}

function ariaRole(el: Element): string {
  return (el.getAttribute("role") ?? "").trim().toLowerCase();
}

export function isExpander(el: Element): boolean {
  return el.hasAttribute("aria-expanded");
}

/** Map an element onto the snapshot role vocabulary. */
export function roleOf(el: Element): RoleName | null {
  const tag = el.tagName.toLowerCase();
  const role = ariaRole(el);

  if (isExpander(el)) return "expander";
  if (role === "switch") return "toggle";
  if (role === "checkbox") return "checkbox";
  if (tag === "input") {
    const type = (el.getAttribute("type") ?? "text").toLowerCase();
    if (type === "checkbox") return "checkbox";
    if (type === "button" || type === "submit" || type === "reset") return "button";
    return null; // free-text inputs are not part of the consent model
  }
  if (tag === "button" || role === "button") return "button";
  if (tag === "a" && el.hasAttribute("href")) return "link";
  if (role === "link") return "link";

  if (TEXT_TAGS.has(tag)) return hasOwnText(el) ? "text" : null;
  if (el.children.length > 0) return "container";
  return hasOwnText(el) ? "text" : null;
}

/** Direct (non-descendant) text content, whitespace-collapsed. */
export function ownText(el: Element): string {
  let out = "";
  for (const child of el.childNodes) {
    if (child.nodeType === 3 /* TEXT_NODE */) out += child.textContent ?? "";
  }
  return collapse(out);
}

function hasOwnText(el: Element): boolean {
  return ownText(el).length > 0;
}

export function fullText(el: Element): string {
  return collapse(el.textContent ?? "");
}

/** The visible label: full text for leaf-ish controls, nothing for containers. */
export function labelOf(el: Element, role: RoleName): string {
  if (role === "container") return "";
  if (role === "text") return fullText(el);
  if (el.tagName.toLowerCase() === "input") return "";
  return fullText(el);
}

export function accessibleNameOf(el: Element, role: RoleName): string {
  const ariaLabel = el.getAttribute("aria-label");
  if (ariaLabel && collapse(ariaLabel)) return collapse(ariaLabel);

  const labelledBy = el.getAttribute("aria-labelledby");
  if (labelledBy) {
    const parts: string[] = [];
    for (const refId of labelledBy.split(/\s+/).filter(Boolean)) {
      const ref = el.ownerDocument.getElementById(refId);
      if (ref) parts.push(fullText(ref));
    }
    const joined = collapse(parts.join(" "));
    if (joined) return joined;
  }

  if (el.id) {
    for (const assoc of el.ownerDocument.querySelectorAll("label[for]")) {
      if (assoc.getAttribute("for") !== el.id) continue;
      const text = fullText(assoc);
      if (text) return text;
    }
  }

  const title = el.getAttribute("title");
  if (title && collapse(title)) return collapse(title);

  if (role === "container") return "";
  return fullText(el);
}

export function tabIndexOf(el: Element): number | null {
  const raw = el.getAttribute("tabindex");
  if (raw === null) return null;
  const parsed = Number.parseInt(raw.trim(), 10);
  return Number.isFinite(parsed) ? parsed : null;
}

const ROVING_GROUP_ROLES = new Set([
  "menu", "menubar", "toolbar", "radiogroup", "listbox", "tablist",
]);

/**
 * Roving tab order: an explicit 0/-1 tabindex inside a composite-widget
 * container (menu, toolbar, and friends) signals one ring stop shared by
 * the group.
 */
export function isRovingMember(el: Element, stopAt: Element): boolean {
  const tab = tabIndexOf(el);
  if (tab !== 0 && tab !== -1) return false;
  let cursor: Element | null = el.parentElement;
  while (cursor) {
    if (ROVING_GROUP_ROLES.has(ariaRole(cursor))) return true;
    if (cursor === stopAt) break;
    cursor = cursor.parentElement;
  }
  return false;
}

export function emphasisOf(el: Element): EmphasisName {
  const classes = (el.getAttribute("class") ?? "").toLowerCase();
  const tokens = new Set(classes.split(/\s+/).filter(Boolean));
  for (const token of tokens) {
    if (token === "primary" || token.endsWith("-primary")) return "primary";
  }
  for (const token of tokens) {
    if (token === "secondary" || token.endsWith("-secondary")) return "secondary";
  }
  return "plain";
}
