/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_binormalcurves_free: (a: number, b: number) => void;
export const __wbg_cappoint_free: (a: number, b: number) => void;
export const __wbg_empiricalroc_free: (a: number, b: number) => void;
export const __wbg_get_cappoint_admission: (a: number) => number;
export const __wbg_get_cappoint_fpr: (a: number) => number;
export const __wbg_get_cappoint_intercept: (a: number) => number;
export const __wbg_get_cappoint_slope: (a: number) => number;
export const __wbg_get_cappoint_tau: (a: number) => number;
export const __wbg_get_cappoint_tpr: (a: number) => number;
export const __wbg_set_cappoint_admission: (a: number, b: number) => void;
export const __wbg_set_cappoint_fpr: (a: number, b: number) => void;
export const __wbg_set_cappoint_intercept: (a: number, b: number) => void;
export const __wbg_set_cappoint_slope: (a: number, b: number) => void;
export const __wbg_set_cappoint_tau: (a: number, b: number) => void;
export const __wbg_set_cappoint_tpr: (a: number, b: number) => void;
export const binormal_curves: (a: number, b: number, c: number) => [number, number, number];
export const binormalcurves_auroc: (a: number) => number;
export const binormalcurves_auroc_closed_form: (a: number) => number;
export const binormalcurves_kl: (a: number) => number;
export const binormalcurves_kl_closed_form: (a: number) => number;
export const binormalcurves_leakage_x: (a: number) => [number, number];
export const binormalcurves_leakage_y: (a: number) => [number, number];
export const binormalcurves_pr_x: (a: number) => [number, number];
export const binormalcurves_pr_y: (a: number) => [number, number];
export const binormalcurves_roc_x: (a: number) => [number, number];
export const binormalcurves_roc_y: (a: number) => [number, number];
export const capped_admission: (a: number, b: number, c: number, d: number) => [number, number, number];
export const empirical_roc: (a: number, b: number) => [number, number, number];
export const empiricalroc_auroc: (a: number) => number;
export const empiricalroc_negatives: (a: number) => number;
export const empiricalroc_positives: (a: number) => number;
export const empiricalroc_rank_auroc: (a: number) => number;
export const empiricalroc_x: (a: number) => [number, number];
export const empiricalroc_y: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
