/* tslint:disable */
/* eslint-disable */

/**
 * Checks the Fundamental Identity of a ternary bracket given as the body of
 * an `algebra` block (`basis ...` followed by `[a,b,c] = ...` lines), and
 * the Leibniz identity of its algebra of fundamental objects.
 */
export function check_algebra(body: string): string;

/**
 * Runs `tasks` (comma-separated; empty for the extension checks) on a
 * bundled file. Parameters missing from `params` are sampled `samples` times.
 */
export function check_family(name: string, params: string, tasks: string, samples: number, seed: number): string;

/**
 * Names of the bundled problem files.
 */
export function corpus_names(): string;

/**
 * Source text of a bundled file (for display next to the results).
 */
export function corpus_source(name: string): string;

/**
 * Applies the gauge action of `ξ: g → h` to a bundled extension at fixed
 * parameters. `xi` lists the images of the `g` basis vectors, one per line,
 * as whitespace-separated rationals (e.g. `1 0 -1/2`).
 */
export function gauge(name: string, params: string, xi: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly check_algebra: (a: number, b: number) => [number, number];
    readonly check_family: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number];
    readonly corpus_names: () => [number, number];
    readonly corpus_source: (a: number, b: number) => [number, number];
    readonly gauge: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
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
