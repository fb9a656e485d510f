/* tslint:disable */
/* eslint-disable */

/**
 * The finite part of `W^⊥x`, with the hypotheses that were checked.
 */
export function finpart(graph: string, x: string): string;

/**
 * The Coxeter presentation of `W^⊥x`.
 */
export function perp(graph: string, x: string): string;

/**
 * Sufficient conditions for reflection independence.
 */
export function reflindep(graph: string): string;

/**
 * Vertex names of a graph, as a JSON array (for the page's vertex picker).
 */
export function vertices(graph: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly finpart: (a: number, b: number, c: number, d: number) => [number, number];
    readonly perp: (a: number, b: number, c: number, d: number) => [number, number];
    readonly reflindep: (a: number, b: number) => [number, number];
    readonly vertices: (a: number, b: number) => [number, number];
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
