//! C interface to the lgvx engine.
//!
//! Every entry point returns an [`LgvxStatus`]. Results come back through out
//! pointers; strings are heap-allocated and must be released with
//! [`lgvx_string_free`], handles with their own `_free` function. After a
//! failure [`lgvx_last_error`] describes what went wrong on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use num_bigint::BigInt;

use lgvx::aztec::{aztec_formula, count_tilings_brute, count_tilings_via_paths, AztecRegion};
use lgvx::format::{parse_graph_file, parse_region_file};
use lgvx::pathcount::{brute_force_nonintersecting, matrix_m_with};
use lgvx::{Drawing, Error, Limits, MarkedConfig, WeightPoly};

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LgvxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    LimitExceeded = 5,
    MixedSign = 6,
    Internal = 7,
}

/// Tiling counter selection for [`lgvx_region_count`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LgvxTileMethod {
    Brute = 0,
    Paths = 1,
}

/// A parsed graph file: drawing plus marked points.
pub struct LgvxInstance {
    drawing: Drawing,
    config: MarkedConfig,
}

/// A parsed region file.
pub struct LgvxRegion {
    region: AztecRegion,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(e: Error) -> LgvxStatus {
    set_error(&e.to_string());
    match e {
        Error::Parse { .. } => LgvxStatus::Parse,
        Error::LimitExceeded { .. } => LgvxStatus::LimitExceeded,
        Error::MixedSignDeterminant(_) => LgvxStatus::MixedSign,
        Error::Internal(_) => LgvxStatus::Internal,
        _ => LgvxStatus::InvalidInput,
    }
}

fn null() -> LgvxStatus {
    set_error("null pointer argument");
    LgvxStatus::NullPointer
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, LgvxStatus> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("input is not valid UTF-8");
        LgvxStatus::InvalidUtf8
    })
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> LgvxStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            LgvxStatus::Ok
        }
        Err(_) => {
            set_error("result contains a NUL byte");
            LgvxStatus::Internal
        }
    }
}

/// Message for the most recent failure on this thread. Owned by the library;
/// valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn lgvx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed, or be null.
#[no_mangle]
pub unsafe extern "C" fn lgvx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a graph file.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lgvx_instance_parse(src: *const c_char, out: *mut *mut LgvxInstance) -> LgvxStatus {
    if out.is_null() {
        return null();
    }
    let src = match text(src) {
        Ok(s) => s,
        Err(st) => return st,
    };
    match parse_graph_file(src) {
        Ok((drawing, config)) => {
            *out = Box::into_raw(Box::new(LgvxInstance { drawing, config }));
            LgvxStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// # Safety
/// `inst` must come from [`lgvx_instance_parse`] and not have been freed, or be null.
#[no_mangle]
pub unsafe extern "C" fn lgvx_instance_free(inst: *mut LgvxInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Number of marked start/end pairs, or 0 for a null handle.
///
/// # Safety
/// `inst` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn lgvx_instance_num_pairs(inst: *const LgvxInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.config.n())
}

fn counted(inst: &LgvxInstance, brute: bool) -> Result<WeightPoly, Error> {
    let limits = Limits::from_env();
    if brute {
        brute_force_nonintersecting(&inst.drawing, &inst.config, &limits)
    } else {
        matrix_m_with(&inst.drawing, &inst.config, &limits).map(|r| r.normalized_count)
    }
}

unsafe fn count_impl(inst: *const LgvxInstance, brute: bool, out: *mut *mut c_char) -> LgvxStatus {
    let (Some(inst), false) = (inst.as_ref(), out.is_null()) else {
        return null();
    };
    match counted(inst, brute) {
        Ok(p) => put_string(out, p.to_string()),
        Err(e) => fail(e),
    }
}

/// Weight of the non-intersecting families by the signed determinant, as
/// polynomial text.
///
/// # Safety
/// `inst` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lgvx_instance_count(inst: *const LgvxInstance, out: *mut *mut c_char) -> LgvxStatus {
    count_impl(inst, false, out)
}

/// Same weight by exhaustive enumeration of families.
///
/// # Safety
/// `inst` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lgvx_instance_count_brute(inst: *const LgvxInstance, out: *mut *mut c_char) -> LgvxStatus {
    count_impl(inst, true, out)
}

/// The count evaluated at integer values, one per declared variable in file
/// order, as decimal text.
///
/// # Safety
/// `inst` must be a live handle, `values` must point to `n_values` integers
/// and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lgvx_instance_count_at(
    inst: *const LgvxInstance,
    values: *const i64,
    n_values: usize,
    out: *mut *mut c_char,
) -> LgvxStatus {
    let (Some(inst), false) = (inst.as_ref(), out.is_null()) else {
        return null();
    };
    if values.is_null() && n_values > 0 {
        return null();
    }
    let nvars = inst.drawing.vars().len();
    if n_values != nvars {
        set_error(&format!("expected {nvars} values, got {n_values}"));
        return LgvxStatus::InvalidInput;
    }
    let vals: Vec<BigInt> = if n_values == 0 {
        Vec::new()
    } else {
        std::slice::from_raw_parts(values, n_values)
            .iter()
            .map(|&v| BigInt::from(v))
            .collect()
    };
    match counted(inst, false) {
        Ok(p) => put_string(out, p.eval_slice(&vals).to_string()),
        Err(e) => fail(e),
    }
}

/// Parses a region file.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lgvx_region_parse(src: *const c_char, out: *mut *mut LgvxRegion) -> LgvxStatus {
    if out.is_null() {
        return null();
    }
    let src = match text(src) {
        Ok(s) => s,
        Err(st) => return st,
    };
    match parse_region_file(src) {
        Ok(region) => {
            *out = Box::into_raw(Box::new(LgvxRegion { region }));
            LgvxStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// # Safety
/// `r` must come from [`lgvx_region_parse`] and not have been freed, or be null.
#[no_mangle]
pub unsafe extern "C" fn lgvx_region_free(r: *mut LgvxRegion) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Number of domino tilings as decimal text.
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lgvx_region_count(
    r: *const LgvxRegion,
    method: LgvxTileMethod,
    out: *mut *mut c_char,
) -> LgvxStatus {
    let (Some(r), false) = (r.as_ref(), out.is_null()) else {
        return null();
    };
    let limits = Limits::from_env();
    let n = match method {
        LgvxTileMethod::Brute => count_tilings_brute(&r.region, &limits),
        LgvxTileMethod::Paths => count_tilings_via_paths(&r.region, &limits),
    };
    match n {
        Ok(n) => put_string(out, n.to_string()),
        Err(e) => fail(e),
    }
}

/// Tilings of a mixed Aztec rectangle with four collinear holes at spacings
/// `a, b, c`, as decimal text.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lgvx_aztec_formula(a: u32, b: u32, c: u32, out: *mut *mut c_char) -> LgvxStatus {
    if out.is_null() {
        return null();
    }
    match aztec_formula(a, b, c) {
        Ok(n) => put_string(out, n.to_string()),
        Err(e) => fail(e),
    }
}
