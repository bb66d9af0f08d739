/* tslint:disable */
/* eslint-disable */

/**
 * Classifies an edge-list graph and returns cliques, certificates and the
 * Hasse forest when one exists.
 */
export function analyze_graph(edges_text: string): string;

/**
 * Samples a patterned SPD matrix for the graph and ordering, decomposes
 * it, and reports the pattern grid, all membership verdicts, the clique
 * determinant table, and counterexample witnesses when the hypotheses
 * fail. An empty ordering falls back to the best available scheme.
 */
export function pattern_report(edges_text: string, ordering_text: string, seed: number): string;

/**
 * Generates a seeded connected homogeneous graph (at most `max_vertices`
 * vertices) and returns the same payload as [`analyze_graph`] plus the
 * edge-list text.
 */
export function random_graph(seed: number, max_vertices: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze_graph: (a: number, b: number) => [number, number];
    readonly pattern_report: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly random_graph: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
