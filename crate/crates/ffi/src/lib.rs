//! C ABI over the exact bicomplex third-order Jacobsthal arithmetic.
//!
//! Conventions: every function returns a status code and writes results
//! through out-pointers; results are UTF-8 JSON strings with the four
//! components as decimal strings, allocated here and released with
//! bcj3_string_free; the cursor is an opaque handle released with
//! bcj3_cursor_free. No call unwinds across the boundary: panics are
//! caught and reported as a status.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bcj3::bcq::{bcj, Bc};
use bcj3::detmat::{bcj_via_det, bicomplex_spec};
use bcj3::identities::{self, GridParams};

/// Result of every ABI call.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Bcj3Status {
    /// The call succeeded and out-parameters are set.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The requested identity name is not registered.
    UnknownName = 3,
    /// Exact arithmetic refused an inversion or pivot.
    NotInvertible = 4,
    /// An internal panic was caught at the boundary.
    Panic = 5,
}

/// Opaque streaming handle over consecutive sequence terms.
pub struct Bcj3Cursor {
    next_index: u64,
    terms: Box<dyn Iterator<Item = Bc>>,
}

fn term_json(n: u64, value: &Bc) -> String {
    serde_json::json!({
        "n": n,
        "w0": value.w0.to_string(),
        "w1": value.w1.to_string(),
        "w2": value.w2.to_string(),
        "w3": value.w3.to_string(),
    })
    .to_string()
}

fn write_string(out: &mut *mut c_char, text: String) -> Bcj3Status {
    match CString::new(text) {
        Ok(text) => {
            *out = text.into_raw();
            Bcj3Status::Ok
        }
        Err(_) => Bcj3Status::Panic,
    }
}

fn guarded(out: Option<&mut *mut c_char>, body: impl FnOnce() -> Result<String, Bcj3Status>) -> Bcj3Status {
    let Some(out) = out else {
        return Bcj3Status::NullArgument;
    };
    *out = std::ptr::null_mut();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(text)) => write_string(out, text),
        Ok(Err(status)) => status,
        Err(_) => Bcj3Status::Panic,
    }
}

/// Writes the n-th bicomplex term as JSON into out_json.
///
/// # Safety
/// out_json must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn bcj3_term(n: u64, out_json: *mut *mut c_char) -> Bcj3Status {
    guarded(out_json.as_mut(), || Ok(term_json(n, &bcj(n))))
}

/// Writes the n-th term computed through the banded determinant; the
/// value agrees with bcj3_term by construction, so this doubles as an
/// end-to-end arithmetic self-check.
///
/// # Safety
/// out_json must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn bcj3_det_term(n: u64, out_json: *mut *mut c_char) -> Bcj3Status {
    guarded(out_json.as_mut(), || {
        let matrix = bcj3::detmat::build_matrix(&bicomplex_spec(), n, &[])
            .map_err(|_| Bcj3Status::NotInvertible)?;
        let det = bcj3::detmat::det_bicomplex(&matrix);
        debug_assert_eq!(det, bcj_via_det(n));
        Ok(term_json(n, &det))
    })
}

/// Runs one registered identity check with default ranges and writes its
/// report as JSON.
///
/// # Safety
/// name must be a valid NUL-terminated string; out_json must be a valid
/// pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn bcj3_verify(
    name: *const c_char,
    out_json: *mut *mut c_char,
) -> Bcj3Status {
    let Some(out) = out_json.as_mut() else {
        return Bcj3Status::NullArgument;
    };
    if name.is_null() {
        *out = std::ptr::null_mut();
        return Bcj3Status::NullArgument;
    }
    let name = CStr::from_ptr(name);
    guarded(Some(out), || {
        let name = name.to_str().map_err(|_| Bcj3Status::InvalidUtf8)?;
        let entry = identities::find(name).ok_or(Bcj3Status::UnknownName)?;
        let report = (entry.run)(&GridParams::default());
        serde_json::to_string(&report).map_err(|_| Bcj3Status::Panic)
    })
}

/// Creates a streaming cursor positioned at term 0.
#[no_mangle]
pub extern "C" fn bcj3_cursor_new() -> *mut Bcj3Cursor {
    let cursor = Bcj3Cursor {
        next_index: 0,
        terms: Box::new(bcj3::bcq::bcj_iter()),
    };
    Box::into_raw(Box::new(cursor))
}

/// Advances the cursor and writes the next term as JSON.
///
/// # Safety
/// cursor must come from bcj3_cursor_new and not have been freed;
/// out_json must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn bcj3_cursor_next(
    cursor: *mut Bcj3Cursor,
    out_json: *mut *mut c_char,
) -> Bcj3Status {
    let Some(cursor) = cursor.as_mut() else {
        return Bcj3Status::NullArgument;
    };
    guarded(out_json.as_mut(), || {
        let n = cursor.next_index;
        let term = cursor.terms.next().expect("sequence is infinite");
        cursor.next_index += 1;
        Ok(term_json(n, &term))
    })
}

/// Releases a cursor; a null pointer is ignored.
///
/// # Safety
/// cursor must come from bcj3_cursor_new and must not be used afterward.
#[no_mangle]
pub unsafe extern "C" fn bcj3_cursor_free(cursor: *mut Bcj3Cursor) {
    if !cursor.is_null() {
        drop(Box::from_raw(cursor));
    }
}

/// Releases a string produced by this library; a null pointer is ignored.
///
/// # Safety
/// text must come from this library and must not be used afterward.
#[no_mangle]
pub unsafe extern "C" fn bcj3_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}
