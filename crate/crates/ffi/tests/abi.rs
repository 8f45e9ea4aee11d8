//! Exercises the C ABI from the Rust side: status codes, ownership
//! hand-off, JSON payload shape, and the generated header.

use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::ptr;

use bcj3_ffi::{
    bcj3_cursor_free, bcj3_cursor_new, bcj3_cursor_next, bcj3_det_term, bcj3_string_free,
    bcj3_term, bcj3_verify, Bcj3Status,
};

/// Takes ownership of an out-string and frees it through the ABI.
unsafe fn take(text: *mut c_char) -> String {
    assert!(!text.is_null());
    let owned = CStr::from_ptr(text).to_string_lossy().into_owned();
    bcj3_string_free(text);
    owned
}

#[test]
fn term_payloads_are_json_with_decimal_components() {
    unsafe {
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(bcj3_term(3, &mut out), Bcj3Status::Ok);
        let payload = take(out);
        let value: serde_json::Value = serde_json::from_str(&payload).unwrap();
        assert_eq!(value["n"], 3);
        assert_eq!(value["w0"], "2");
        assert_eq!(value["w1"], "5");
        assert_eq!(value["w2"], "9");
        assert_eq!(value["w3"], "18");
    }
}

#[test]
fn determinant_route_agrees_with_direct_terms() {
    unsafe {
        for n in [0u64, 1, 5, 9] {
            let mut direct: *mut c_char = ptr::null_mut();
            let mut viadet: *mut c_char = ptr::null_mut();
            assert_eq!(bcj3_term(n, &mut direct), Bcj3Status::Ok);
            assert_eq!(bcj3_det_term(n, &mut viadet), Bcj3Status::Ok);
            assert_eq!(take(direct), take(viadet), "at {n}");
        }
    }
}

#[test]
fn cursor_streams_the_same_terms_as_indexing() {
    unsafe {
        let cursor = bcj3_cursor_new();
        for n in 0..6u64 {
            let mut streamed: *mut c_char = ptr::null_mut();
            let mut indexed: *mut c_char = ptr::null_mut();
            assert_eq!(bcj3_cursor_next(cursor, &mut streamed), Bcj3Status::Ok);
            assert_eq!(bcj3_term(n, &mut indexed), Bcj3Status::Ok);
            assert_eq!(take(streamed), take(indexed), "at {n}");
        }
        bcj3_cursor_free(cursor);
    }
}

#[test]
fn verify_reports_known_and_unknown_names() {
    unsafe {
        let mut out: *mut c_char = ptr::null_mut();
        let name = CString::new("cassini").unwrap();
        assert_eq!(bcj3_verify(name.as_ptr(), &mut out), Bcj3Status::Ok);
        let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(report["verdict"], "refuted");
        assert_eq!(report["counterexample"]["n"], 0);

        let name = CString::new("made_up").unwrap();
        assert_eq!(
            bcj3_verify(name.as_ptr(), &mut out),
            Bcj3Status::UnknownName
        );
        assert!(out.is_null());
    }
}

#[test]
fn null_and_invalid_arguments_are_reported_not_crashed() {
    unsafe {
        assert_eq!(bcj3_term(0, ptr::null_mut()), Bcj3Status::NullArgument);
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            bcj3_verify(ptr::null(), &mut out),
            Bcj3Status::NullArgument
        );
        assert_eq!(
            bcj3_cursor_next(ptr::null_mut(), &mut out),
            Bcj3Status::NullArgument
        );
        let invalid = [0xffu8, 0xfe, 0x00];
        assert_eq!(
            bcj3_verify(invalid.as_ptr().cast(), &mut out),
            Bcj3Status::InvalidUtf8
        );
        bcj3_cursor_free(ptr::null_mut());
        bcj3_string_free(ptr::null_mut());
    }
}

#[test]
fn generated_header_declares_the_full_surface() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("bcj3.h");
    let text = std::fs::read_to_string(header).expect("header is generated at build time");
    for symbol in [
        "Bcj3Status",
        "Bcj3Cursor",
        "bcj3_term",
        "bcj3_det_term",
        "bcj3_verify",
        "bcj3_cursor_new",
        "bcj3_cursor_next",
        "bcj3_cursor_free",
        "bcj3_string_free",
    ] {
        assert!(text.contains(symbol), "header is missing {symbol}");
    }
    assert!(text.contains("BCJ3_H"));
}
