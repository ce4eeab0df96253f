// Invariant panel view-model. Values are taken verbatim from the
// service payload (exact rational strings included); the only work done
// here is arranging rows, never arithmetic.

import type { InvariantRow, Summary } from "./types.js";

export interface PanelModel {
  rows: InvariantRow[];
  nuOrder: number;
  admissible: boolean;
  orbifoldWitness: string | null;
  tiltingDiscrete: boolean;
  tiltingReason: string;
  isomorphicFixtures: string[];
  version: number;
}

export function panelModel(summary: Summary): PanelModel {
  return {
    rows: summary.invariants,
    nuOrder: summary.nu_order,
    admissible: summary.admissible,
    orbifoldWitness: summary.orbifold_witness,
    tiltingDiscrete: summary.tilting_discrete.flag,
    tiltingReason: summary.tilting_discrete.reason,
    isomorphicFixtures: summary.isomorphic_fixtures,
    version: summary.version,
  };
}

/** Canonical JSON with sorted keys, matching the CLI's serialization. */
export function canonicalJson(value: unknown): string {
  if (Array.isArray(value)) {
    return `[${value.map(canonicalJson).join(", ")}]`;
  }
  if (value !== null && typeof value === "object") {
    const entries = Object.entries(value as Record<string, unknown>)
      .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
      .map(([k, v]) => `${JSON.stringify(k)}: ${canonicalJson(v)}`);
    return `{${entries.join(", ")}}`;
  }
  return JSON.stringify(value);
}

/** The panel rows exactly as the CLI's `invariants` command prints its
 * vertex table (used by the end-to-end comparison). */
export function panelInvariantsAsCli(model: PanelModel): string {
  return canonicalJson(model.rows);
}
