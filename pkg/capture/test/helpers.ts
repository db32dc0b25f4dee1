/**
 * Test scaffolding: load a bundled page into the jsdom document, give it
 * layout, and arm watchdogs that prove capture never touches the page.
 */

import { readFileSync } from "node:fs";
import { join } from "node:path";
// @ts-expect-error plain-JS helper shared with the golden derivation script
import { installLayout } from "../tools/layout.mjs";
import { vi } from "vitest";

/** Path under the package root; vitest runs with capture/ as cwd. */
export function packagePath(...parts: string[]): string {
  return join(process.cwd(), ...parts);
}

export function pagePath(name: string): string {
  return packagePath("pages", name);
}

/** Replace the whole test document with a bundled page and lay it out. */
export function loadPage(name: string): void {
  const html = readFileSync(pagePath(name), "utf8");
  document.open();
  document.write(html);
  document.close();
  layout();
}

/** (Re)compute rects from authored inline geometry; safe to call again. */
export function layout(): void {
  installLayout(window);
}

export function pageWindow(): Window & typeof globalThis {
  return window;
}

export interface InteractionWatch {
  /** Mutation + interaction evidence collected since arming. */
  report(): { mutations: number; calls: string[] };
  disarm(): void;
}

/**
 * Watch the live document for anything a capture must never do: clicks,
 * focus changes, scrolling, event dispatch, attribute or content writes.
 */
export function armInteractionWatch(): InteractionWatch {
  const calls: string[] = [];
  const spies: Array<{ mockRestore(): void }> = [];
  // spy where the method exists; jsdom leaves some (scrollIntoView) undefined
  const watch = (target: object, method: string): void => {
    const record = target as Record<string, () => unknown>;
    if (typeof record[method] !== "function") return;
    spies.push(
      vi.spyOn(record, method).mockImplementation((): boolean => {
        calls.push(method);
        return true;
      }),
    );
  };

  watch(HTMLElement.prototype, "click");
  watch(HTMLElement.prototype, "focus");
  watch(HTMLElement.prototype, "blur");
  watch(Element.prototype, "scrollIntoView");
  watch(Element.prototype, "setAttribute");
  watch(Element.prototype, "removeAttribute");
  watch(Element.prototype, "dispatchEvent");
  watch(window, "scrollTo");
  watch(window, "scrollBy");

  const observer = new MutationObserver(() => {});
  observer.observe(document.documentElement, {
    subtree: true,
    childList: true,
    attributes: true,
    characterData: true,
    attributeOldValue: true,
  });
  let mutations = 0;

  return {
    report() {
      mutations += observer.takeRecords().length;
      return { mutations, calls: [...calls] };
    },
    disarm() {
      mutations += observer.takeRecords().length;
      observer.disconnect();
      for (const spy of spies) spy.mockRestore();
    },
  };
}
