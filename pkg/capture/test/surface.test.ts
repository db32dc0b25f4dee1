import { describe, expect, it } from "vitest";

import { findSurfaceRoot } from "../src/surface.js";
import { CaptureError } from "../src/types.js";
import { loadPage } from "./helpers.js";

function setBody(html: string): void {
  document.open();
  document.write(`<!doctype html><html><head><title>t</title></head><body>${html}</body></html>`);
  document.close();
}

describe("surface root detection", () => {
  it("finds the consent banner on a bundled page", () => {
    loadPage("copresent.html");
    expect(findSurfaceRoot(document).id).toBe("cb_root");
  });

  it("ignores higher-z overlays that never mention consent", () => {
    setBody(`
      <nav id="chrome" style="position: fixed; z-index: 999">Home News Sport</nav>
      <div id="banner" style="position: fixed; z-index: 10">We use cookies. Accept all?</div>
    `);
    expect(findSurfaceRoot(document).id).toBe("banner");
  });

  it("prefers the highest z-index band among consent candidates", () => {
    setBody(`
      <div id="low" style="position: fixed; z-index: 5">Cookie settings live here</div>
      <div id="high" style="position: fixed; z-index: 50">Manage cookies and consent</div>
    `);
    expect(findSurfaceRoot(document).id).toBe("high");
  });

  it("accepts dialog-role candidates without fixed positioning", () => {
    setBody(`<div id="modal" role="dialog">Your privacy and cookies</div>`);
    expect(findSurfaceRoot(document).id).toBe("modal");
  });

  it("skips hidden candidates", () => {
    setBody(`
      <div id="parked" hidden style="position: fixed; z-index: 99">Cookie consent</div>
      <div id="live" style="position: fixed; z-index: 1">Cookie consent</div>
    `);
    expect(findSurfaceRoot(document).id).toBe("live");
  });

  it("lets a selector override bypass the heuristic", () => {
    setBody(`
      <div id="banner" style="position: fixed">We use cookies</div>
      <section id="inline-consent">Cookie preferences</section>
    `);
    expect(findSurfaceRoot(document, "#inline-consent").id).toBe("inline-consent");
  });

  it("errors when the override matches nothing", () => {
    setBody(`<div style="position: fixed">We use cookies</div>`);
    expect(() => findSurfaceRoot(document, "#nope")).toThrow(CaptureError);
  });

  it("reports a diagnostic when no surface exists", () => {
    loadPage("nobanner.html");
    expect(() => findSurfaceRoot(document)).toThrow(/no consent surface/);
    try {
      findSurfaceRoot(document);
    } catch (err) {
      expect((err as Error).message).toMatch(/candidate/);
    }
  });
});
