/* tslint:disable */
/* eslint-disable */

export class BinormalCurves {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    leakage_x(): Float64Array;
    leakage_y(): Float64Array;
    pr_x(): Float64Array;
    pr_y(): Float64Array;
    roc_x(): Float64Array;
    roc_y(): Float64Array;
    readonly auroc: number;
    readonly auroc_closed_form: number;
    readonly kl: number;
    readonly kl_closed_form: number;
}

export class CapPoint {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    admission: number;
    fpr: number;
    intercept: number;
    /**
     * Boundary line `tpr = slope fpr + intercept`.
     */
    slope: number;
    tau: number;
    tpr: number;
}

export class EmpiricalRoc {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    x(): Float64Array;
    y(): Float64Array;
    readonly auroc: number;
    readonly negatives: number;
    readonly positives: number;
    readonly rank_auroc: number;
}

/**
 * ROC, leakage and PR samples plus AUROC and KL for a binormal model.
 */
export function binormal_curves(alpha: number, b: number, pi_p: number): BinormalCurves;

/**
 * Operating point on a binormal ROC where `pi_p tpr + pi_n fpr = m`.
 */
export function capped_admission(alpha: number, b: number, pi_p: number, m: number): CapPoint;

/**
 * Staircase ROC and AUROC for pasted `score,label` lines.
 */
export function empirical_roc(csv: string): EmpiricalRoc;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_binormalcurves_free: (a: number, b: number) => void;
    readonly __wbg_cappoint_free: (a: number, b: number) => void;
    readonly __wbg_empiricalroc_free: (a: number, b: number) => void;
    readonly __wbg_get_cappoint_admission: (a: number) => number;
    readonly __wbg_get_cappoint_fpr: (a: number) => number;
    readonly __wbg_get_cappoint_intercept: (a: number) => number;
    readonly __wbg_get_cappoint_slope: (a: number) => number;
    readonly __wbg_get_cappoint_tau: (a: number) => number;
    readonly __wbg_get_cappoint_tpr: (a: number) => number;
    readonly __wbg_set_cappoint_admission: (a: number, b: number) => void;
    readonly __wbg_set_cappoint_fpr: (a: number, b: number) => void;
    readonly __wbg_set_cappoint_intercept: (a: number, b: number) => void;
    readonly __wbg_set_cappoint_slope: (a: number, b: number) => void;
    readonly __wbg_set_cappoint_tau: (a: number, b: number) => void;
    readonly __wbg_set_cappoint_tpr: (a: number, b: number) => void;
    readonly binormal_curves: (a: number, b: number, c: number) => [number, number, number];
    readonly binormalcurves_auroc: (a: number) => number;
    readonly binormalcurves_auroc_closed_form: (a: number) => number;
    readonly binormalcurves_kl: (a: number) => number;
    readonly binormalcurves_kl_closed_form: (a: number) => number;
    readonly binormalcurves_leakage_x: (a: number) => [number, number];
    readonly binormalcurves_leakage_y: (a: number) => [number, number];
    readonly binormalcurves_pr_x: (a: number) => [number, number];
    readonly binormalcurves_pr_y: (a: number) => [number, number];
    readonly binormalcurves_roc_x: (a: number) => [number, number];
    readonly binormalcurves_roc_y: (a: number) => [number, number];
    readonly capped_admission: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly empirical_roc: (a: number, b: number) => [number, number, number];
    readonly empiricalroc_auroc: (a: number) => number;
    readonly empiricalroc_negatives: (a: number) => number;
    readonly empiricalroc_positives: (a: number) => number;
    readonly empiricalroc_rank_auroc: (a: number) => number;
    readonly empiricalroc_x: (a: number) => [number, number];
    readonly empiricalroc_y: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
