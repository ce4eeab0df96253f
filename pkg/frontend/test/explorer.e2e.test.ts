// End-to-end flow against the real service and the real CLI: load the
// worked mutation example, apply the left move at edge 1's orbit via the
// service, and check the invariant panel reproduces the CLI outputs byte
// for byte; undo restores the initial panel.

import { execFile, spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { promisify } from "node:util";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Client } from "../src/api.js";
import { panelModel, canonicalJson, panelInvariantsAsCli } from "../src/panel.js";
import { radialLayout, renderedOrder } from "../src/layout.js";
import { HistoryTree } from "../src/history.js";
import type { Summary } from "../src/types.js";

const exec = promisify(execFile);
const PORT = 8797;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function cli(...args: string[]): Promise<string> {
  const { stdout } = await exec("python3", ["-m", "fbga.cli", ...args], {
    cwd: join(__dirname, "..", ".."),
  });
  return stdout;
}

beforeAll(async () => {
  server = spawn(
    "python3",
    [
      "-c",
      `import uvicorn; from fbga.service import create_app; uvicorn.run(create_app(), host="127.0.0.1", port=${PORT}, log_level="error")`,
    ],
    { cwd: join(__dirname, "..", ".."), stdio: "ignore" },
  );
  const deadline = Date.now() + 30000;
  for (;;) {
    try {
      await fetch(`${BASE}/sessions/none/graph`);
      break;
    } catch {
      if (Date.now() > deadline) throw new Error("service did not start");
      await new Promise((resolve) => setTimeout(resolve, 200));
    }
  }
}, 40000);

afterAll(() => {
  server?.kill();
});

describe("explorer end-to-end", () => {
  it(
    "reproduces the CLI through the service, and undo restores the panel",
    { timeout: 60000 },
    async () => {
      const client = new Client(BASE);
      const { session_id, summary } = await client.createSession({
        fixture: "kauer-gamma1",
      });
      const history = new HistoryTree<Summary>(summary);
      const initialPanel = panelModel(summary);

      // Panel rows match `fbga invariants fixtures:kauer-gamma1`.
      const cliInvariants = JSON.parse(
        await cli("invariants", "fixtures:kauer-gamma1"),
      );
      expect(panelInvariantsAsCli(initialPanel)).toBe(
        canonicalJson(cliInvariants.vertices),
      );
      expect(initialPanel.isomorphicFixtures).toEqual([
        "fixtures:kauer-gamma1",
      ]);

      // Left move at the orbit of edge 1, through the service.
      const mutated = await client.mutate(
        session_id,
        "1~1'",
        "left",
        summary.version,
      );
      history.push("left at 1~1'", mutated);
      const mutatedPanel = panelModel(mutated);
      expect(mutatedPanel.isomorphicFixtures).toEqual([
        "fixtures:kauer-gamma2",
      ]);

      // The mutated graph and panel match the CLI's `mutate` output.
      const dir = mkdtempSync(join(tmpdir(), "fbga-"));
      const outFile = join(dir, "mutated.json");
      const cliMutate = JSON.parse(
        await cli(
          "mutate",
          "fixtures:kauer-gamma1",
          "--orbit",
          "1~1'",
          "--dir",
          "left",
          "-o",
          outFile,
        ),
      );
      expect(canonicalJson(mutated.graph)).toBe(canonicalJson(cliMutate.graph));
      expect(canonicalJson(mutated.trace)).toBe(canonicalJson(cliMutate.trace));
      const cliAfter = JSON.parse(await cli("invariants", outFile));
      expect(panelInvariantsAsCli(mutatedPanel)).toBe(
        canonicalJson(cliAfter.vertices),
      );

      // The rendered rotation order equals the service payload exactly.
      const layout = radialLayout(mutated.graph);
      for (const [vertex, rot] of Object.entries(mutated.graph.rotation)) {
        expect(renderedOrder(layout, vertex)).toEqual(rot);
      }

      // Undo restores the initial invariant panel byte for byte.
      await client.undo(session_id);
      const restored = history.undo();
      expect(canonicalJson(panelModel(restored))).toBe(
        canonicalJson(initialPanel),
      );
      const fresh = await client.graph(session_id);
      expect(canonicalJson(fresh.graph)).toBe(canonicalJson(summary.graph));
      expect(panelInvariantsAsCli(panelModel(fresh))).toBe(
        canonicalJson(cliInvariants.vertices),
      );

      // Domain errors surface with the server's violation payload.
      await expect(
        client.mutate(session_id, "no-such-edge", "left", fresh.version),
      ).rejects.toMatchObject({ status: 422 });
    },
  );
});
