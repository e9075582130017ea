/* @ts-self-types="./classleak_wasm.d.ts" */

export class BinormalCurves {
    static __wrap(ptr) {
        const obj = Object.create(BinormalCurves.prototype);
        obj.__wbg_ptr = ptr;
        BinormalCurvesFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        BinormalCurvesFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_binormalcurves_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get auroc() {
        const ret = wasm.binormalcurves_auroc(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get auroc_closed_form() {
        const ret = wasm.binormalcurves_auroc_closed_form(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get kl() {
        const ret = wasm.binormalcurves_kl(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get kl_closed_form() {
        const ret = wasm.binormalcurves_kl_closed_form(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {Float64Array}
     */
    leakage_x() {
        const ret = wasm.binormalcurves_leakage_x(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    leakage_y() {
        const ret = wasm.binormalcurves_leakage_y(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    pr_x() {
        const ret = wasm.binormalcurves_pr_x(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    pr_y() {
        const ret = wasm.binormalcurves_pr_y(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    roc_x() {
        const ret = wasm.binormalcurves_roc_x(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    roc_y() {
        const ret = wasm.binormalcurves_roc_y(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
}
if (Symbol.dispose) BinormalCurves.prototype[Symbol.dispose] = BinormalCurves.prototype.free;

export class CapPoint {
    static __wrap(ptr) {
        const obj = Object.create(CapPoint.prototype);
        obj.__wbg_ptr = ptr;
        CapPointFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        CapPointFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_cappoint_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get admission() {
        const ret = wasm.__wbg_get_cappoint_admission(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get fpr() {
        const ret = wasm.__wbg_get_cappoint_fpr(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get intercept() {
        const ret = wasm.__wbg_get_cappoint_intercept(this.__wbg_ptr);
        return ret;
    }
    /**
     * Boundary line `tpr = slope fpr + intercept`.
     * @returns {number}
     */
    get slope() {
        const ret = wasm.__wbg_get_cappoint_slope(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get tau() {
        const ret = wasm.__wbg_get_cappoint_tau(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get tpr() {
        const ret = wasm.__wbg_get_cappoint_tpr(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set admission(arg0) {
        wasm.__wbg_set_cappoint_admission(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set fpr(arg0) {
        wasm.__wbg_set_cappoint_fpr(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set intercept(arg0) {
        wasm.__wbg_set_cappoint_intercept(this.__wbg_ptr, arg0);
    }
    /**
     * Boundary line `tpr = slope fpr + intercept`.
     * @param {number} arg0
     */
    set slope(arg0) {
        wasm.__wbg_set_cappoint_slope(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set tau(arg0) {
        wasm.__wbg_set_cappoint_tau(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set tpr(arg0) {
        wasm.__wbg_set_cappoint_tpr(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) CapPoint.prototype[Symbol.dispose] = CapPoint.prototype.free;

export class EmpiricalRoc {
    static __wrap(ptr) {
        const obj = Object.create(EmpiricalRoc.prototype);
        obj.__wbg_ptr = ptr;
        EmpiricalRocFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        EmpiricalRocFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_empiricalroc_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get auroc() {
        const ret = wasm.empiricalroc_auroc(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get negatives() {
        const ret = wasm.empiricalroc_negatives(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get positives() {
        const ret = wasm.empiricalroc_positives(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get rank_auroc() {
        const ret = wasm.empiricalroc_rank_auroc(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {Float64Array}
     */
    x() {
        const ret = wasm.empiricalroc_x(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    y() {
        const ret = wasm.empiricalroc_y(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
}
if (Symbol.dispose) EmpiricalRoc.prototype[Symbol.dispose] = EmpiricalRoc.prototype.free;

/**
 * ROC, leakage and PR samples plus AUROC and KL for a binormal model.
 * @param {number} alpha
 * @param {number} b
 * @param {number} pi_p
 * @returns {BinormalCurves}
 */
export function binormal_curves(alpha, b, pi_p) {
    const ret = wasm.binormal_curves(alpha, b, pi_p);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return BinormalCurves.__wrap(ret[0]);
}

/**
 * Operating point on a binormal ROC where `pi_p tpr + pi_n fpr = m`.
 * @param {number} alpha
 * @param {number} b
 * @param {number} pi_p
 * @param {number} m
 * @returns {CapPoint}
 */
export function capped_admission(alpha, b, pi_p, m) {
    const ret = wasm.capped_admission(alpha, b, pi_p, m);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return CapPoint.__wrap(ret[0]);
}

/**
 * Staircase ROC and AUROC for pasted `score,label` lines.
 * @param {string} csv
 * @returns {EmpiricalRoc}
 */
export function empirical_roc(csv) {
    const ptr0 = passStringToWasm0(csv, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
    const len0 = WASM_VECTOR_LEN;
    const ret = wasm.empirical_roc(ptr0, len0);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return EmpiricalRoc.__wrap(ret[0]);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_30c8987f7c2ed4e2: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./classleak_wasm_bg.js": import0,
    };
}

const BinormalCurvesFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_binormalcurves_free(ptr, 1));
const CapPointFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_cappoint_free(ptr, 1));
const EmpiricalRocFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_empiricalroc_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function passStringToWasm0(arg, malloc, realloc) {
    if (realloc === undefined) {
        const buf = cachedTextEncoder.encode(arg);
        const ptr = malloc(buf.length, 1) >>> 0;
        getUint8ArrayMemory0().subarray(ptr, ptr + buf.length).set(buf);
        WASM_VECTOR_LEN = buf.length;
        return ptr;
    }

    let len = arg.length;
    let ptr = malloc(len, 1) >>> 0;

    const mem = getUint8ArrayMemory0();

    let offset = 0;

    for (; offset < len; offset++) {
        const code = arg.charCodeAt(offset);
        if (code > 0x7F) break;
        mem[ptr + offset] = code;
    }
    if (offset !== len) {
        if (offset !== 0) {
            arg = arg.slice(offset);
        }
        ptr = realloc(ptr, len, len = offset + arg.length * 3, 1) >>> 0;
        const view = getUint8ArrayMemory0().subarray(ptr + offset, ptr + len);
        const ret = cachedTextEncoder.encodeInto(arg, view);

        offset += ret.written;
        ptr = realloc(ptr, len, offset, 1) >>> 0;
    }

    WASM_VECTOR_LEN = offset;
    return ptr;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

const cachedTextEncoder = new TextEncoder();

if (!('encodeInto' in cachedTextEncoder)) {
    cachedTextEncoder.encodeInto = function (arg, view) {
        const buf = cachedTextEncoder.encode(arg);
        view.set(buf);
        return {
            read: arg.length,
            written: buf.length
        };
    };
}

let WASM_VECTOR_LEN = 0;

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('classleak_wasm_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
