//! C ABI for the centset finite-group library.
//!
//! Conventions:
//! - Groups are opaque [`CentsetGroup`] handles created by the
//!   `centset_group_from_*` constructors and released with
//!   [`centset_group_free`].
//! - Functions return a [`CentsetStatus`]; results go to out-parameters.
//!   On any non-OK status, [`centset_last_error_message`] returns a
//!   thread-local description of the failure.
//! - String results are NUL-terminated, allocated by this library, and must
//!   be released with [`centset_string_free`].
//! - Every entry point catches panics; nothing unwinds across the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use centset::analysis;
use centset::claims::{self, ReportFormat};
use centset::families::{FamilyName, FamilySpec};
use centset::frobenius;
use centset::group::CayleyGroup;
use centset::io;
use centset::isoclinism::{self, IsoclinismVerdict};
use centset::{Config, Error};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentsetStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    BadParams = 3,
    OrderCapExceeded = 4,
    InvalidGroupFile = 5,
    NotNormal = 6,
    SearchBudgetExceeded = 7,
    Panic = 8,
    Other = 9,
}

/// Opaque handle to an immutable finite group.
pub struct CentsetGroup {
    inner: CayleyGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let cleaned: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(cleaned).unwrap());
}

fn status_of(err: &Error) -> CentsetStatus {
    match err {
        Error::BadParams(_) | Error::NotPrime(_) | Error::UnsupportedDegree(_)
        | Error::InvalidPermutation(_) | Error::InvalidAction(_) => CentsetStatus::BadParams,
        Error::OrderCapExceeded { .. } => CentsetStatus::OrderCapExceeded,
        Error::InvalidGroupFile(_) | Error::Io(_) | Error::Json(_) => CentsetStatus::InvalidGroupFile,
        Error::NotNormal => CentsetStatus::NotNormal,
        Error::SearchBudgetExceeded | Error::LatticeBudgetExceeded => {
            CentsetStatus::SearchBudgetExceeded
        }
        Error::ComplementNotFound => CentsetStatus::Other,
    }
}

fn guard(f: impl FnOnce() -> CentsetStatus) -> CentsetStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            CentsetStatus::Panic
        }
    }
}

/// # Safety
/// `ptr` must be NULL or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, CentsetStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(CentsetStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        CentsetStatus::InvalidUtf8
    })
}

fn config_with_cap(order_cap: u32) -> Config {
    let mut cfg = Config::default();
    if order_cap > 0 {
        cfg.order_cap = order_cap as usize;
    }
    cfg
}

fn emit_string(s: String, out: *mut *mut c_char) -> CentsetStatus {
    let cleaned: String = s.chars().filter(|&c| c != '\0').collect();
    let cstr = CString::new(cleaned).unwrap();
    unsafe { *out = cstr.into_raw() };
    CentsetStatus::Ok
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn centset_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a pointer previously returned by a `*_json`
/// function of this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn centset_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a `centset-group-v1` JSON document (permutation, table or family
/// kind). `order_cap` of 0 selects the default (2048).
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be non-NULL.
#[no_mangle]
pub unsafe extern "C" fn centset_group_from_json(
    json: *const c_char,
    order_cap: u32,
    out: *mut *mut CentsetGroup,
) -> CentsetStatus {
    guard(|| {
        if out.is_null() {
            set_error("null out-parameter");
            return CentsetStatus::NullPointer;
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match io::load_str(text, &config_with_cap(order_cap)) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(CentsetGroup { inner: g }));
                CentsetStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Builds a named family, e.g. name `"dihedral"`, params `{"n":8}`.
///
/// # Safety
/// `name` and `params_json` must be valid NUL-terminated strings; `out`
/// must be non-NULL.
#[no_mangle]
pub unsafe extern "C" fn centset_group_from_family(
    name: *const c_char,
    params_json: *const c_char,
    order_cap: u32,
    out: *mut *mut CentsetGroup,
) -> CentsetStatus {
    guard(|| {
        if out.is_null() {
            set_error("null out-parameter");
            return CentsetStatus::NullPointer;
        }
        let name = match read_str(name) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let params_text = match read_str(params_json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let family = match FamilyName::parse(name) {
            Ok(f) => f,
            Err(e) => {
                set_error(&e.to_string());
                return CentsetStatus::BadParams;
            }
        };
        let params = match serde_json::from_str(params_text) {
            Ok(p) => p,
            Err(e) => {
                set_error(&format!("params must be a JSON object of integers: {e}"));
                return CentsetStatus::BadParams;
            }
        };
        match (FamilySpec { name: family, params }).build(config_with_cap(order_cap).order_cap) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(CentsetGroup { inner: g }));
                CentsetStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Releases a group handle. NULL is a no-op.
///
/// # Safety
/// `g` must be NULL or a handle from a constructor, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn centset_group_free(g: *mut CentsetGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn centset_group_order(g: *const CentsetGroup) -> u32 {
    if g.is_null() {
        return 0;
    }
    (*g).inner.order() as u32
}

/// Table lookup `a * b`; element 0 is the identity. Out-of-range arguments
/// return `UINT16_MAX`.
///
/// # Safety
/// `g` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn centset_group_mul(g: *const CentsetGroup, a: u16, b: u16) -> u16 {
    if g.is_null() {
        return u16::MAX;
    }
    let group = &(*g).inner;
    if (a as usize) >= group.order() || (b as usize) >= group.order() {
        return u16::MAX;
    }
    group.mul(a, b)
}

/// Number of distinct element centralizers |Cent(G)|.
///
/// # Safety
/// `g` must be a valid handle; `out` must be non-NULL.
#[no_mangle]
pub unsafe extern "C" fn centset_cent_count(
    g: *const CentsetGroup,
    out: *mut u32,
) -> CentsetStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument");
            return CentsetStatus::NullPointer;
        }
        *out = analysis::centralizer_family(&(*g).inner).count as u32;
        CentsetStatus::Ok
    })
}

/// Whether |Cent(G)| = |G'| + 2 (1 = yes, 0 = no).
///
/// # Safety
/// `g` must be a valid handle; `out` must be non-NULL.
#[no_mangle]
pub unsafe extern "C" fn centset_is_cg(g: *const CentsetGroup, out: *mut i32) -> CentsetStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument");
            return CentsetStatus::NullPointer;
        }
        *out = i32::from(analysis::is_cg(&(*g).inner).is_cg);
        CentsetStatus::Ok
    })
}

/// Full analysis report as a JSON string (same schema as `centset analyze
/// --json`). Free the result with [`centset_string_free`].
///
/// # Safety
/// `g` must be a valid handle; `out` must be non-NULL.
#[no_mangle]
pub unsafe extern "C" fn centset_analyze_json(
    g: *const CentsetGroup,
    out: *mut *mut c_char,
) -> CentsetStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument");
            return CentsetStatus::NullPointer;
        }
        match analysis::analyze(&(*g).inner, &Config::default()) {
            Ok(report) => emit_string(serde_json::to_string(&report).unwrap(), out),
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// The group serialized in `centset-group-v1` table form.
///
/// # Safety
/// `g` must be a valid handle; `out` must be non-NULL.
#[no_mangle]
pub unsafe extern "C" fn centset_group_to_table_json(
    g: *const CentsetGroup,
    out: *mut *mut c_char,
) -> CentsetStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument");
            return CentsetStatus::NullPointer;
        }
        emit_string(io::to_table_json(&(*g).inner), out)
    })
}

/// Frobenius decomposition as JSON, or the string `null` when the group is
/// not Frobenius.
///
/// # Safety
/// `g` must be a valid handle; `out` must be non-NULL.
#[no_mangle]
pub unsafe extern "C" fn centset_frobenius_json(
    g: *const CentsetGroup,
    out: *mut *mut c_char,
) -> CentsetStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null argument");
            return CentsetStatus::NullPointer;
        }
        match frobenius::decompose(&(*g).inner, &Config::default()) {
            Ok(Some(d)) => emit_string(d.to_json().to_string(), out),
            Ok(None) => emit_string("null".to_string(), out),
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Isoclinism test. `verdict` is set to 1 (isoclinic) or 0 (not);
/// `budget` of 0 selects the default search budget.
///
/// # Safety
/// `a` and `b` must be valid handles; `verdict` must be non-NULL.
#[no_mangle]
pub unsafe extern "C" fn centset_are_isoclinic(
    a: *const CentsetGroup,
    b: *const CentsetGroup,
    budget: u64,
    verdict: *mut i32,
) -> CentsetStatus {
    guard(|| {
        if a.is_null() || b.is_null() || verdict.is_null() {
            set_error("null argument");
            return CentsetStatus::NullPointer;
        }
        let budget = if budget == 0 { Config::default().search_budget } else { budget };
        match isoclinism::are_isoclinic(&(*a).inner, &(*b).inner, budget) {
            Ok(IsoclinismVerdict::Isoclinic(_)) => {
                *verdict = 1;
                CentsetStatus::Ok
            }
            Ok(IsoclinismVerdict::NotIsoclinic(reason)) => {
                set_error(&reason.to_string());
                *verdict = 0;
                CentsetStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Runs the claims registry (optionally filtered by an id glob; NULL means
/// all claims) and returns the JSON report. `exit_code` follows the CLI
/// contract: 0 ok, 2 some claim refuted, 1 error.
///
/// # Safety
/// `filter` must be NULL or a valid NUL-terminated string; `out` and
/// `exit_code` must be non-NULL.
#[no_mangle]
pub unsafe extern "C" fn centset_claims_run_json(
    filter: *const c_char,
    jobs: u32,
    out: *mut *mut c_char,
    exit_code: *mut i32,
) -> CentsetStatus {
    guard(|| {
        if out.is_null() || exit_code.is_null() {
            set_error("null out-parameter");
            return CentsetStatus::NullPointer;
        }
        let filter_str = if filter.is_null() {
            None
        } else {
            match read_str(filter) {
                Ok(t) => Some(t),
                Err(s) => return s,
            }
        };
        let report = claims::run_claims(filter_str, jobs.max(1) as usize, &Config::default());
        *exit_code = report.exit_code();
        emit_string(claims::render_report(&report, ReportFormat::Json, false), out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take_string(p: *mut c_char) -> String {
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        centset_string_free(p);
        s
    }

    #[test]
    fn family_handle_lifecycle() {
        unsafe {
            let mut g: *mut CentsetGroup = ptr::null_mut();
            let st = centset_group_from_family(
                cstr("dihedral").as_ptr(),
                cstr("{\"n\":8}").as_ptr(),
                0,
                &mut g,
            );
            assert_eq!(st, CentsetStatus::Ok);
            assert_eq!(centset_group_order(g), 16);
            assert_eq!(centset_group_mul(g, 0, 3), 3);
            assert_eq!(centset_group_mul(g, 200, 0), u16::MAX);

            let mut count = 0u32;
            assert_eq!(centset_cent_count(g, &mut count), CentsetStatus::Ok);
            assert_eq!(count, 6);

            let mut cg = -1i32;
            assert_eq!(centset_is_cg(g, &mut cg), CentsetStatus::Ok);
            assert_eq!(cg, 1);

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(centset_analyze_json(g, &mut json), CentsetStatus::Ok);
            let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
            assert_eq!(report["order"], 16);
            assert_eq!(report["centCount"], 6);

            centset_group_free(g);
        }
    }

    #[test]
    fn json_roundtrip_through_table_form() {
        unsafe {
            let mut g: *mut CentsetGroup = ptr::null_mut();
            assert_eq!(
                centset_group_from_family(
                    cstr("symmetric").as_ptr(),
                    cstr("{\"n\":4}").as_ptr(),
                    0,
                    &mut g,
                ),
                CentsetStatus::Ok
            );
            let mut table_json: *mut c_char = ptr::null_mut();
            assert_eq!(centset_group_to_table_json(g, &mut table_json), CentsetStatus::Ok);
            let text = take_string(table_json);

            let mut g2: *mut CentsetGroup = ptr::null_mut();
            assert_eq!(
                centset_group_from_json(cstr(&text).as_ptr(), 0, &mut g2),
                CentsetStatus::Ok
            );
            assert_eq!(centset_group_order(g2), 24);
            centset_group_free(g);
            centset_group_free(g2);
        }
    }

    #[test]
    fn error_paths_set_messages() {
        unsafe {
            let mut g: *mut CentsetGroup = ptr::null_mut();
            let st = centset_group_from_family(
                cstr("no_such_family").as_ptr(),
                cstr("{}").as_ptr(),
                0,
                &mut g,
            );
            assert_eq!(st, CentsetStatus::BadParams);
            let msg = CStr::from_ptr(centset_last_error_message()).to_str().unwrap();
            assert!(msg.contains("no_such_family"));

            assert_eq!(
                centset_group_from_json(ptr::null(), 0, &mut g),
                CentsetStatus::NullPointer
            );

            let st = centset_group_from_family(
                cstr("symmetric").as_ptr(),
                cstr("{\"n\":6}").as_ptr(),
                100,
                &mut g,
            );
            assert_eq!(st, CentsetStatus::OrderCapExceeded);
        }
    }

    #[test]
    fn frobenius_and_isoclinism() {
        unsafe {
            let mut f21: *mut CentsetGroup = ptr::null_mut();
            centset_group_from_family(
                cstr("frobenius_metacyclic").as_ptr(),
                cstr("{\"p\":7,\"q\":3}").as_ptr(),
                0,
                &mut f21,
            );
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(centset_frobenius_json(f21, &mut json), CentsetStatus::Ok);
            let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
            assert_eq!(v["kernel"]["order"], 7);

            let mut h27: *mut CentsetGroup = ptr::null_mut();
            centset_group_from_family(
                cstr("heisenberg").as_ptr(),
                cstr("{\"p\":3}").as_ptr(),
                0,
                &mut h27,
            );
            let mut s3: *mut CentsetGroup = ptr::null_mut();
            centset_group_from_family(
                cstr("symmetric").as_ptr(),
                cstr("{\"n\":3}").as_ptr(),
                0,
                &mut s3,
            );
            let mut verdict = -1i32;
            assert_eq!(centset_are_isoclinic(h27, s3, 0, &mut verdict), CentsetStatus::Ok);
            assert_eq!(verdict, 0);
            let msg = CStr::from_ptr(centset_last_error_message()).to_str().unwrap();
            assert!(msg.contains("9 != 6"), "{msg}");

            centset_group_free(f21);
            centset_group_free(h27);
            centset_group_free(s3);
        }
    }

    #[test]
    fn claims_through_ffi() {
        unsafe {
            let mut json: *mut c_char = ptr::null_mut();
            let mut code = -1i32;
            let st = centset_claims_run_json(cstr("EX25-q3").as_ptr(), 1, &mut json, &mut code);
            assert_eq!(st, CentsetStatus::Ok);
            assert_eq!(code, 0);
            let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
            assert_eq!(v["summary"]["confirmed"], 1);
        }
    }
}
