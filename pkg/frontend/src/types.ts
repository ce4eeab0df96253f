// Payload shapes of the fbga service. The explorer displays these
// verbatim; it never computes invariants itself.

export interface GraphJson {
  vertices: { id: string; degree: number }[];
  rotation: Record<string, string[]>;
  pairing: string[][];
  orbifold: boolean;
}

export interface InvariantRow {
  vertex: string;
  val: number;
  o: number;
  n: number;
  F: number;
  m: string; // exact rational, e.g. "2/3"
}

export interface EdgeInfo {
  id: string;
  halves: string[];
  endpoints: string[];
  loop: boolean;
  orbit: string[];
  case: string;
}

export interface TiltInfo {
  flag: boolean;
  reason: string;
  census: {
    betti: number;
    is_tree: boolean;
    cycle_length: number | null;
    at_most_one_odd_no_even: boolean;
  };
}

export interface Summary {
  session_id: string;
  version: number;
  history_length: number;
  graph: GraphJson;
  edges: EdgeInfo[];
  invariants: InvariantRow[];
  nu_order: number;
  admissible: boolean;
  orbifold_witness: string | null;
  tilting_discrete: TiltInfo;
  isomorphic_fixtures: string[];
}

export interface MutateResponse extends Summary {
  trace: Record<string, { from: [string, number]; to: [string, number] }>;
  case: string | null;
  extended: boolean;
}

export interface ReducedResponse {
  admissible: boolean;
  orbit_graph: GraphJson;
  orbifold_edges: string[];
  loops_above: Record<string, string[]>;
  reduced_form: GraphJson;
  reduced_multiplicities: Record<string, string>;
  version: number;
}

export interface WalkJson {
  halves: string[];
  signs: string[];
}

export interface WalksResponse {
  cap: number;
  truncated: boolean;
  count?: number;
  walks?: WalkJson[];
  sets?: number;
  complete_sets?: WalkJson[][];
  version: number;
}
