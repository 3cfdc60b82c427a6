/* tslint:disable */
/* eslint-disable */

/**
 * `[S_quantum, S_model]` at the four given angles.
 */
export function chsh(a: number, a2: number, b: number, b2: number, atoms: number): Float64Array;

/**
 * Rows `(δ, quantum, triangle, discretized model)` for `δ ∈ [0, π)`.
 */
export function correlationCurves(points: number, atoms: number): Float64Array;

/**
 * Rows `(θ, F, F_N)` for `pieces` equal intervals starting at +1.
 */
export function reconstruction(pieces: number, window: number, points: number): Float64Array;

/**
 * Rows `(n, σ_quantum, σ_model)` for `n ∈ [−N, N]`.
 */
export function schmidtWeights(window: number, atoms: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly chsh: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly correlationCurves: (a: number, b: number) => [number, number, number, number];
    readonly reconstruction: (a: number, b: number, c: number) => [number, number, number, number];
    readonly schmidtWeights: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
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
