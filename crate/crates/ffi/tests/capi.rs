//! Integration tests exercising the C surface the way a foreign binding
//! would: through the exported symbols, with explicit ownership of every
//! returned allocation.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use zeonperm_ffi::*;

fn take_string(out: *mut c_char) -> String {
    assert!(!out.is_null());
    let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
    unsafe { zp_string_free(out) };
    text
}

fn parse(json: &str) -> *mut ZpMatrix {
    let json = CString::new(json).unwrap();
    let mut handle: *mut ZpMatrix = ptr::null_mut();
    let status = unsafe { zp_matrix_parse_json(json.as_ptr(), &mut handle) };
    assert_eq!(status, ZpStatus::Ok);
    handle
}

#[test]
fn symbolic_permanent_round_trip() {
    let handle = parse(r#"{"n": 2, "entries": [["s+t", "t"], ["t", "s+t"]]}"#);
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { zp_matrix_permanent(handle, &mut out) }, ZpStatus::Ok);
    assert_eq!(take_string(out), "s^2+2*s*t+2*t^2");

    let mut at: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { zp_matrix_permanent_at(handle, -1, 1, &mut at) },
        ZpStatus::Ok
    );
    assert_eq!(take_string(at), "1");
    unsafe { zp_matrix_free(handle) };
}

#[test]
fn zeon_power_routes_agree() {
    let handle = parse(r#"{"n": 4, "entries": [[0,1,1,1],[1,0,1,1],[1,1,0,1],[1,1,1,0]]}"#);
    let mut by_perm: *mut ZpMatrix = ptr::null_mut();
    let mut by_algebra: *mut ZpMatrix = ptr::null_mut();
    assert_eq!(
        unsafe { zp_matrix_zeon_power(handle, 2, &mut by_perm) },
        ZpStatus::Ok
    );
    assert_eq!(
        unsafe { zp_matrix_zeon_power_algebra(handle, 2, &mut by_algebra) },
        ZpStatus::Ok
    );
    assert_eq!(unsafe { zp_matrix_dim(by_perm) }, 6);

    let mut json_a: *mut c_char = ptr::null_mut();
    let mut json_b: *mut c_char = ptr::null_mut();
    unsafe {
        assert_eq!(zp_matrix_to_json(by_perm, &mut json_a), ZpStatus::Ok);
        assert_eq!(zp_matrix_to_json(by_algebra, &mut json_b), ZpStatus::Ok);
    }
    assert_eq!(take_string(json_a), take_string(json_b));
    unsafe {
        zp_matrix_free(by_perm);
        zp_matrix_free(by_algebra);
        zp_matrix_free(handle);
    }
}

#[test]
fn charpoly_of_worked_example() {
    let handle = parse(
        r#"{"n": 5, "entries": [[0,1,1,1,1],[1,0,1,1,1],[1,1,0,1,1],[1,1,1,0,1],[1,1,1,1,0]]}"#,
    );
    let mut power: *mut ZpMatrix = ptr::null_mut();
    assert_eq!(
        unsafe { zp_matrix_zeon_power(handle, 3, &mut power) },
        ZpStatus::Ok
    );
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { zp_matrix_charpoly(power, &mut out) }, ZpStatus::Ok);
    // the expansion of x^5 (x-32)(x+3)^4
    assert_eq!(
        take_string(out),
        "x^10-20*x^9-330*x^8-1620*x^7-3375*x^6-2592*x^5"
    );
    unsafe {
        zp_matrix_free(power);
        zp_matrix_free(handle);
    }
}

#[test]
fn scalar_tables() {
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { zp_hpoly(2, 1, &mut out) }, ZpStatus::Ok);
    assert_eq!(take_string(out), "s^2*t+4*s*t^2+6*t^3");

    let mut d: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { zp_derangement_number(5, 2, &mut d) }, ZpStatus::Ok);
    assert_eq!(take_string(d), "64");

    let mut a: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { zp_arrangement_number(5, 2, &mut a) }, ZpStatus::Ok);
    assert_eq!(take_string(a), "212");

    let mut csv: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { zp_triangle_csv(ZpTriangleKind::Derangement, 2, &mut csv) },
        ZpStatus::Ok
    );
    assert_eq!(take_string(csv), "1,0,0\n0,1,0\n1,1,2\n");
}

#[test]
fn json_documents() {
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { zp_expand_json(4, 2, &mut out) }, ZpStatus::Ok);
    let text = take_string(out);
    assert!(text.starts_with(r#"{"n":4,"ell":2,"coeffs":"#));

    let mut spec: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { zp_spectrum_json(4, 2, &mut spec) }, ZpStatus::Ok);
    let text = take_string(spec);
    assert!(text.contains(r#""eigenvalue":"s^2+6*s*t+12*t^2","multiplicity":1"#));
}

#[test]
fn error_paths() {
    let bad = CString::new("not json").unwrap();
    let mut handle: *mut ZpMatrix = ptr::null_mut();
    assert_eq!(
        unsafe { zp_matrix_parse_json(bad.as_ptr(), &mut handle) },
        ZpStatus::ParseError
    );
    let message = take_string(zp_last_error_message());
    assert!(!message.is_empty());

    assert_eq!(
        unsafe { zp_matrix_parse_json(ptr::null(), &mut handle) },
        ZpStatus::NullArgument
    );

    let symbolic = parse(r#"{"n": 1, "entries": [["s"]]}"#);
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { zp_matrix_charpoly(symbolic, &mut out) },
        ZpStatus::DomainError
    );
    unsafe { zp_matrix_free(symbolic) };

    let missing = CString::new("no-such-suite").unwrap();
    assert_eq!(
        unsafe { zp_verify_suite(missing.as_ptr(), 0) },
        ZpStatus::ParseError
    );
}

#[test]
fn verify_suite_passes() {
    let suite = CString::new("hpoly").unwrap();
    assert_eq!(unsafe { zp_verify_suite(suite.as_ptr(), 1) }, ZpStatus::Ok);
}

#[test]
fn header_is_generated_and_current() {
    let header = include_str!("../include/zeonperm.h");
    for symbol in [
        "zp_matrix_parse_json",
        "zp_matrix_free",
        "zp_matrix_permanent",
        "zp_matrix_zeon_power",
        "zp_triangle_csv",
        "zp_verify_suite",
        "zp_string_free",
        "ZP_STATUS_OK",
        "ZP_TRIANGLE_KIND_DERANGEMENT",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}
