//! C ABI for the zeonperm library.
//!
//! Conventions:
//! * matrices travel as opaque `ZpMatrix` handles, created by
//!   [`zp_matrix_parse_json`] and released by [`zp_matrix_free`];
//! * every fallible function returns a [`ZpStatus`] and writes its result
//!   through an out-pointer; polynomials and big integers are rendered as
//!   canonical strings, owned by Rust and released by [`zp_string_free`];
//! * on failure a human-readable message is kept per thread and can be
//!   fetched with [`zp_last_error_message`];
//! * panics never unwind across the boundary; they surface as
//!   `ZP_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;

use zeonperm::derange;
use zeonperm::error::Error;
use zeonperm::exppoly;
use zeonperm::jsonio;
use zeonperm::matrix::ExactMatrix;
use zeonperm::permanent;
use zeonperm::verify;
use zeonperm::zeon;

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZpStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DomainError = 4,
    VerifyFailed = 5,
    Panic = 6,
}

/// Triangle families exposed through the C API.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZpTriangleKind {
    Poly = 0,
    Derangement = 1,
    Arrangement = 2,
}

impl From<ZpTriangleKind> for jsonio::TriangleKind {
    fn from(kind: ZpTriangleKind) -> Self {
        match kind {
            ZpTriangleKind::Poly => jsonio::TriangleKind::Poly,
            ZpTriangleKind::Derangement => jsonio::TriangleKind::Derangement,
            ZpTriangleKind::Arrangement => jsonio::TriangleKind::Arrangement,
        }
    }
}

/// Opaque matrix handle.
pub struct ZpMatrix {
    inner: ExactMatrix,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let stored = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("error").expect("static string"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn status_of(err: &Error) -> ZpStatus {
    match err {
        Error::Parse(_) | Error::Json(_) | Error::Io(_) => ZpStatus::ParseError,
        Error::UnknownSuite(_) => ZpStatus::ParseError,
        _ => ZpStatus::DomainError,
    }
}

fn fail(err: &Error) -> ZpStatus {
    set_error(&err.to_string());
    status_of(err)
}

/// Run a closure, translating panics into `ZP_STATUS_PANIC`.
fn guarded(f: impl FnOnce() -> ZpStatus) -> ZpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            ZpStatus::Panic
        }
    }
}

unsafe fn read_c_str<'a>(text: *const c_char) -> Result<&'a str, ZpStatus> {
    if text.is_null() {
        set_error("null string argument");
        return Err(ZpStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("string is not valid UTF-8");
        ZpStatus::InvalidUtf8
    })
}

fn write_string(out: *mut *mut c_char, value: String) -> ZpStatus {
    if out.is_null() {
        set_error("null output pointer");
        return ZpStatus::NullArgument;
    }
    match CString::new(value) {
        Ok(owned) => {
            unsafe { *out = owned.into_raw() };
            ZpStatus::Ok
        }
        Err(_) => {
            set_error("result contains an interior NUL byte");
            ZpStatus::ParseError
        }
    }
}

fn write_matrix(out: *mut *mut ZpMatrix, value: ExactMatrix) -> ZpStatus {
    if out.is_null() {
        set_error("null output pointer");
        return ZpStatus::NullArgument;
    }
    unsafe { *out = Box::into_raw(Box::new(ZpMatrix { inner: value })) };
    ZpStatus::Ok
}

unsafe fn borrow_matrix<'a>(handle: *const ZpMatrix) -> Result<&'a ExactMatrix, ZpStatus> {
    if handle.is_null() {
        set_error("null matrix handle");
        return Err(ZpStatus::NullArgument);
    }
    Ok(&(*handle).inner)
}

/// Most recent error message on this thread, or NULL if none. The caller
/// owns the returned string and must release it with `zp_string_free`.
#[no_mangle]
pub extern "C" fn zp_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(message) => message.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Release a string allocated by this library. NULL is a no-op.
///
/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn zp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a matrix from the JSON format
/// `{"n": 2, "entries": [["s+t", 1], [0, "t"]]}` (integer or polynomial
/// string entries) into a new handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated C string; `out` must be a valid
/// pointer to a matrix-handle slot.
#[no_mangle]
pub unsafe extern "C" fn zp_matrix_parse_json(
    json: *const c_char,
    out: *mut *mut ZpMatrix,
) -> ZpStatus {
    guarded(|| {
        let text = match read_c_str(json) {
            Ok(text) => text,
            Err(status) => return status,
        };
        match ExactMatrix::from_json_str(text) {
            Ok(matrix) => write_matrix(out, matrix),
            Err(err) => fail(&err),
        }
    })
}

/// Release a matrix handle. NULL is a no-op.
///
/// # Safety
/// `handle` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn zp_matrix_free(handle: *mut ZpMatrix) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Dimension of the matrix; 0 for NULL.
///
/// # Safety
/// `handle` must be a live handle from this library, or NULL.
#[no_mangle]
pub unsafe extern "C" fn zp_matrix_dim(handle: *const ZpMatrix) -> usize {
    if handle.is_null() {
        0
    } else {
        (*handle).inner.dim()
    }
}

/// Canonical JSON rendering of a matrix.
///
/// # Safety
/// `handle` must be a live handle; `out` a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn zp_matrix_to_json(
    handle: *const ZpMatrix,
    out: *mut *mut c_char,
) -> ZpStatus {
    guarded(|| match borrow_matrix(handle) {
        Ok(matrix) => write_string(out, matrix.to_json_string()),
        Err(status) => status,
    })
}

/// Exact permanent, rendered as a canonical polynomial string.
///
/// # Safety
/// `handle` must be a live handle; `out` a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn zp_matrix_permanent(
    handle: *const ZpMatrix,
    out: *mut *mut c_char,
) -> ZpStatus {
    guarded(|| match borrow_matrix(handle) {
        Ok(matrix) => write_string(out, permanent::permanent(matrix).to_string()),
        Err(status) => status,
    })
}

/// The ell-th zeon power (subpermanent matrix) as a new handle.
///
/// # Safety
/// `handle` must be a live handle; `out` a valid matrix-handle slot.
#[no_mangle]
pub unsafe extern "C" fn zp_matrix_zeon_power(
    handle: *const ZpMatrix,
    ell: usize,
    out: *mut *mut ZpMatrix,
) -> ZpStatus {
    guarded(|| {
        let matrix = match borrow_matrix(handle) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        match permanent::zeon_power_perm(matrix, ell) {
            Ok(power) => write_matrix(out, power),
            Err(err) => fail(&err),
        }
    })
}

/// The ell-th zeon power computed by direct zeon-algebra expansion;
/// agrees with `zp_matrix_zeon_power` and exists for cross-checking.
///
/// # Safety
/// `handle` must be a live handle; `out` a valid matrix-handle slot.
#[no_mangle]
pub unsafe extern "C" fn zp_matrix_zeon_power_algebra(
    handle: *const ZpMatrix,
    ell: usize,
    out: *mut *mut ZpMatrix,
) -> ZpStatus {
    guarded(|| {
        let matrix = match borrow_matrix(handle) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        match zeon::induced_matrix_zeon(matrix, ell) {
            Ok(power) => write_matrix(out, power),
            Err(err) => fail(&err),
        }
    })
}

/// Characteristic polynomial of an integer matrix in the variable `x`.
///
/// # Safety
/// `handle` must be a live handle; `out` a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn zp_matrix_charpoly(
    handle: *const ZpMatrix,
    out: *mut *mut c_char,
) -> ZpStatus {
    guarded(|| {
        let matrix = match borrow_matrix(handle) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        match zeonperm::charpoly::charpoly(matrix) {
            Ok(poly) => write_string(out, poly.to_string_with("x")),
            Err(err) => fail(&err),
        }
    })
}

/// The exponential moment polynomial h_{n,m}(s,t) as a canonical string.
///
/// # Safety
/// `out` must be a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn zp_hpoly(n: usize, m: usize, out: *mut *mut c_char) -> ZpStatus {
    guarded(|| write_string(out, exppoly::h_poly(n, m).to_string()))
}

/// Johnson-basis coefficients of (sI + tJ)^(ell) as JSON.
///
/// # Safety
/// `out` must be a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn zp_expand_json(
    n: usize,
    ell: usize,
    out: *mut *mut c_char,
) -> ZpStatus {
    guarded(|| match jsonio::expand_json(n, ell) {
        Ok(text) => write_string(out, text),
        Err(err) => fail(&err),
    })
}

/// Spectrum of (sI + tJ)^(ell) as JSON, symbolic in s and t.
///
/// # Safety
/// `out` must be a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn zp_spectrum_json(
    n: usize,
    ell: usize,
    out: *mut *mut c_char,
) -> ZpStatus {
    guarded(|| match jsonio::spectrum_json(n, ell, None, false) {
        Ok(text) => write_string(out, text),
        Err(err) => fail(&err),
    })
}

/// A triangle (polynomial, derangement, or arrangement) in the
/// zero-padded square CSV layout.
///
/// # Safety
/// `out` must be a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn zp_triangle_csv(
    kind: ZpTriangleKind,
    n: usize,
    out: *mut *mut c_char,
) -> ZpStatus {
    guarded(|| write_string(out, jsonio::triangle_csv(kind.into(), n)))
}

/// D_{n,ell} as a decimal string.
///
/// # Safety
/// `out` must be a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn zp_derangement_number(
    n: usize,
    ell: usize,
    out: *mut *mut c_char,
) -> ZpStatus {
    guarded(|| match derange::derangement_number(n, ell) {
        Ok(value) => write_string(out, value.to_string()),
        Err(err) => fail(&err),
    })
}

/// A_{n,ell} as a decimal string.
///
/// # Safety
/// `out` must be a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn zp_arrangement_number(
    n: usize,
    ell: usize,
    out: *mut *mut c_char,
) -> ZpStatus {
    guarded(|| match derange::arrangement_number(n, ell) {
        Ok(value) => write_string(out, value.to_string()),
        Err(err) => fail(&err),
    })
}

/// Permanent of a matrix evaluated at integer (s, t), as a decimal
/// string. Useful for callers that keep matrices symbolic.
///
/// # Safety
/// `handle` must be a live handle; `out` a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn zp_matrix_permanent_at(
    handle: *const ZpMatrix,
    s: i64,
    t: i64,
    out: *mut *mut c_char,
) -> ZpStatus {
    guarded(|| {
        let matrix = match borrow_matrix(handle) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        let value = permanent::permanent(matrix).eval(&BigInt::from(s), &BigInt::from(t));
        write_string(out, value.to_string())
    })
}

/// Run a named verification suite (see the CLI `verify` command).
/// Returns Ok when every check passes, VerifyFailed otherwise.
///
/// # Safety
/// `suite` must be a valid NUL-terminated C string.
#[no_mangle]
pub unsafe extern "C" fn zp_verify_suite(suite: *const c_char, seed: u64) -> ZpStatus {
    guarded(|| {
        let name = match read_c_str(suite) {
            Ok(name) => name,
            Err(status) => return status,
        };
        match verify::run_suite(name, seed) {
            Ok(results) => {
                let failures: Vec<String> = results
                    .iter()
                    .filter(|r| !r.passed)
                    .map(|r| format!("{}: {}", r.name, r.detail))
                    .collect();
                if failures.is_empty() {
                    ZpStatus::Ok
                } else {
                    set_error(&failures.join("; "));
                    ZpStatus::VerifyFailed
                }
            }
            Err(err) => fail(&err),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn take_string(out: *mut c_char) -> String {
        assert!(!out.is_null());
        let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
        unsafe { zp_string_free(out) };
        text
    }

    #[test]
    fn permanent_through_the_c_api() {
        let json = CString::new(r#"{"n": 3, "entries": [[0,1,1],[1,0,1],[1,1,0]]}"#).unwrap();
        let mut handle: *mut ZpMatrix = ptr::null_mut();
        let status = unsafe { zp_matrix_parse_json(json.as_ptr(), &mut handle) };
        assert_eq!(status, ZpStatus::Ok);
        assert_eq!(unsafe { zp_matrix_dim(handle) }, 3);

        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(unsafe { zp_matrix_permanent(handle, &mut out) }, ZpStatus::Ok);
        assert_eq!(take_string(out), "2");
        unsafe { zp_matrix_free(handle) };
    }

    #[test]
    fn null_arguments_are_reported() {
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            unsafe { zp_matrix_permanent(ptr::null(), &mut out) },
            ZpStatus::NullArgument
        );
        let message = take_string(zp_last_error_message());
        assert!(message.contains("null"));
    }

    #[test]
    fn domain_errors_are_reported() {
        let json = CString::new(r#"{"n": 2, "entries": [[1,0],[0,1]]}"#).unwrap();
        let mut handle: *mut ZpMatrix = ptr::null_mut();
        unsafe { zp_matrix_parse_json(json.as_ptr(), &mut handle) };
        let mut power: *mut ZpMatrix = ptr::null_mut();
        assert_eq!(
            unsafe { zp_matrix_zeon_power(handle, 5, &mut power) },
            ZpStatus::DomainError
        );
        unsafe { zp_matrix_free(handle) };
    }
}
