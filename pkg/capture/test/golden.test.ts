/**
 * Golden pairings: each bundled page must capture into a schema-valid
 * snapshot whose engine audit reproduces the frozen per-policy event
 * strip, PSI, and component vector, with the capture itself performing
 * zero page interactions.
 */

import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { captureSnapshot, serializeDocument } from "../src/capture.js";
import { validateSnapshotDocument } from "../src/schema.js";
import { armInteractionWatch, loadPage, packagePath, pageWindow } from "./helpers.js";

interface GoldenPolicy {
  strip: string;
  psiDefault: number;
  components: Record<string, unknown>;
}

interface Golden {
  page: string;
  breakpoint: string;
  policies: Record<string, GoldenPolicy>;
}

const GOLDENS = ["copresent", "scrollwall", "accordion", "multistep"];
const scratch = mkdtempSync(join(tmpdir(), "capture-pairing-"));

function readGolden(name: string): Golden {
  const path = packagePath("golden", `${name}.golden.json`);
  return JSON.parse(readFileSync(path, "utf8")) as Golden;
}

describe.each(GOLDENS)("golden pairing: %s", (name) => {
  it("captures without touching the page and audits to the frozen trace", async () => {
    const golden = readGolden(name);
    loadPage(golden.page);

    const watch = armInteractionWatch();
    let snapshot;
    try {
      snapshot = await captureSnapshot(
        { window: pageWindow() },
        { breakpoint: golden.breakpoint, stabilizationMs: 0 },
      );
    } finally {
      // flush pending mutation records before restoring the spies
      await Promise.resolve();
    }
    const evidence = watch.report();
    watch.disarm();

    expect(evidence.calls).toEqual([]);
    expect(evidence.mutations).toBe(0);

    expect(validateSnapshotDocument(snapshot)).toEqual([]);

    const snapshotFile = join(scratch, `${name}.snapshot.json`);
    writeFileSync(snapshotFile, serializeDocument(snapshot));
    const stdout = execFileSync(
      "consentaudit",
      ["audit", snapshotFile, "--policy", "both"],
      { encoding: "utf8" },
    );
    const report = JSON.parse(stdout) as {
      results: Array<{
        policy: string;
        strip: string;
        psiByProfile: { default: number };
        components: Record<string, unknown>;
        terminal: string;
      }>;
    };

    const derived: Record<string, GoldenPolicy> = {};
    for (const result of report.results) {
      expect(result.terminal).toBe("ALTERNATIVE_REACHED");
      derived[result.policy] = {
        strip: result.strip,
        psiDefault: result.psiByProfile.default,
        components: result.components,
      };
    }
    expect(derived).toEqual(golden.policies);
  });
});
