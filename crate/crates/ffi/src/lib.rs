//! C interface to `springer-core`.
//!
//! Objects are opaque handles created by `*_new`/`*_build` and released with the matching
//! `*_free`. Every fallible call returns a [`SpringerStatus`]; the message of the most recent
//! failure on the calling thread is available from [`springer_last_error`]. Strings returned
//! through out-parameters are owned by the caller and must be released with
//! [`springer_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use springer_core::basis::{build_matrix, verify_basis, RestrictionMatrix};
use springer_core::billey::springer_schubert;
use springer_core::matrix_forms::{circle_weights, count_distinct_highest_forms, rotated_english_sigma};
use springer_core::pinball::{betti_numbers, pinball_table};
use springer_core::rank::rank;
use springer_core::{Error, Partition, Permutation};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpringerStatus {
    Ok = 0,
    InvalidArgument = 1,
    NullPointer = 2,
    BufferTooSmall = 3,
    OutOfRange = 4,
    Internal = 5,
}

/// Opaque partition handle.
pub struct SpringerPartition(Partition);

/// Opaque restriction matrix handle.
pub struct SpringerMatrix(RestrictionMatrix);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let s = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn fail(status: SpringerStatus, msg: impl ToString) -> SpringerStatus {
    set_error(msg);
    status
}

fn from_core(e: Error) -> SpringerStatus {
    fail(SpringerStatus::InvalidArgument, e)
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> SpringerStatus) -> SpringerStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(SpringerStatus::Internal, "internal error"),
    }
}

fn to_c_string(s: String, out: *mut *mut c_char) -> SpringerStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            SpringerStatus::Ok
        }
        Err(_) => fail(SpringerStatus::Internal, "string contains a NUL byte"),
    }
}

unsafe fn slice<'a, T>(p: *const T, len: usize) -> Option<&'a [T]> {
    if p.is_null() && len > 0 {
        None
    } else if len == 0 {
        Some(&[])
    } else {
        Some(std::slice::from_raw_parts(p, len))
    }
}

/// Message for the most recent failure on this thread; valid until the next failing call.
#[no_mangle]
pub extern "C" fn springer_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn springer_status_str(status: SpringerStatus) -> *const c_char {
    let s: &'static CStr = match status {
        SpringerStatus::Ok => c"ok",
        SpringerStatus::InvalidArgument => c"invalid argument",
        SpringerStatus::NullPointer => c"null pointer",
        SpringerStatus::BufferTooSmall => c"buffer too small",
        SpringerStatus::OutOfRange => c"index out of range",
        SpringerStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn springer_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a partition from `len` row lengths.
///
/// # Safety
/// `rows` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn springer_partition_new(
    rows: *const u32,
    len: usize,
    out: *mut *mut SpringerPartition,
) -> SpringerStatus {
    guard(|| {
        if out.is_null() {
            return fail(SpringerStatus::NullPointer, "out is null");
        }
        let Some(rows) = slice(rows, len) else { return fail(SpringerStatus::NullPointer, "rows is null") };
        match Partition::new(rows.iter().map(|&r| r as usize).collect()) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(SpringerPartition(p)));
                SpringerStatus::Ok
            }
            Err(e) => from_core(e),
        }
    })
}

/// Parses a partition such as `"4,2"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn springer_partition_parse(
    text: *const c_char,
    out: *mut *mut SpringerPartition,
) -> SpringerStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(SpringerStatus::NullPointer, "null argument");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(SpringerStatus::InvalidArgument, "text is not UTF-8");
        };
        match s.parse::<Partition>() {
            Ok(p) => {
                *out = Box::into_raw(Box::new(SpringerPartition(p)));
                SpringerStatus::Ok
            }
            Err(e) => from_core(e),
        }
    })
}

/// # Safety
/// `p` must be null or a handle from `springer_partition_new`/`springer_partition_parse`.
#[no_mangle]
pub unsafe extern "C" fn springer_partition_free(p: *mut SpringerPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of boxes.
///
/// # Safety
/// `p` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn springer_partition_size(p: *const SpringerPartition, out: *mut usize) -> SpringerStatus {
    if p.is_null() || out.is_null() {
        return fail(SpringerStatus::NullPointer, "null argument");
    }
    *out = (*p).0.n();
    SpringerStatus::Ok
}

/// Writes the Betti numbers `b_0, b_1, ...` into `buf`.
///
/// `*out_len` always receives the required length; `BufferTooSmall` is returned when `cap` is short.
///
/// # Safety
/// `p` must be a valid handle, `buf` must hold `cap` values and `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn springer_betti_numbers(
    p: *const SpringerPartition,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> SpringerStatus {
    guard(|| {
        if p.is_null() || out_len.is_null() || (buf.is_null() && cap > 0) {
            return fail(SpringerStatus::NullPointer, "null argument");
        }
        let b = match betti_numbers(&(*p).0) {
            Ok(b) => b,
            Err(e) => return from_core(e),
        };
        *out_len = b.len();
        if cap < b.len() {
            return fail(SpringerStatus::BufferTooSmall, format!("need {} values", b.len()));
        }
        for (i, v) in b.iter().enumerate() {
            *buf.add(i) = *v as u64;
        }
        SpringerStatus::Ok
    })
}

/// Number of distinct highest forms of the Jordan matrix of shape `p`.
///
/// # Safety
/// `p` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn springer_highest_form_count(p: *const SpringerPartition, out: *mut u64) -> SpringerStatus {
    guard(|| {
        if p.is_null() || out.is_null() {
            return fail(SpringerStatus::NullPointer, "null argument");
        }
        match count_distinct_highest_forms(&(*p).0) {
            Ok(c) => match u64::try_from(c) {
                Ok(c) => {
                    *out = c;
                    SpringerStatus::Ok
                }
                Err(_) => fail(SpringerStatus::OutOfRange, "count exceeds 64 bits"),
            },
            Err(e) => from_core(e),
        }
    })
}

/// Pinball table under the rotated English reading, as a JSON array.
///
/// # Safety
/// `p` must be a valid handle and `out` writable; free the result with `springer_string_free`.
#[no_mangle]
pub unsafe extern "C" fn springer_pinball_json(p: *const SpringerPartition, out: *mut *mut c_char) -> SpringerStatus {
    guard(|| {
        if p.is_null() || out.is_null() {
            return fail(SpringerStatus::NullPointer, "null argument");
        }
        let lambda = &(*p).0;
        match pinball_table(lambda, &rotated_english_sigma(lambda)) {
            Ok(t) => to_c_string(serde_json::to_string(&t).expect("serializable"), out),
            Err(e) => from_core(e),
        }
    })
}

/// Builds the restriction matrix of `p`.
///
/// # Safety
/// `p` must be a valid handle and `out` writable; free the result with `springer_matrix_free`.
#[no_mangle]
pub unsafe extern "C" fn springer_matrix_build(p: *const SpringerPartition, out: *mut *mut SpringerMatrix) -> SpringerStatus {
    guard(|| {
        if p.is_null() || out.is_null() {
            return fail(SpringerStatus::NullPointer, "null argument");
        }
        match build_matrix(&(*p).0) {
            Ok(m) => {
                *out = Box::into_raw(Box::new(SpringerMatrix(m)));
                SpringerStatus::Ok
            }
            Err(e) => from_core(e),
        }
    })
}

/// # Safety
/// `m` must be null or a handle from `springer_matrix_build`.
#[no_mangle]
pub unsafe extern "C" fn springer_matrix_free(m: *mut SpringerMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows (and columns).
///
/// # Safety
/// `m` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn springer_matrix_size(m: *const SpringerMatrix, out: *mut usize) -> SpringerStatus {
    if m.is_null() || out.is_null() {
        return fail(SpringerStatus::NullPointer, "null argument");
    }
    *out = (*m).0.size();
    SpringerStatus::Ok
}

/// Entry at `(row, col)`, 0-based, as a JSON array of rational strings.
///
/// # Safety
/// `m` must be a valid handle and `out` writable; free the result with `springer_string_free`.
#[no_mangle]
pub unsafe extern "C" fn springer_matrix_entry_json(
    m: *const SpringerMatrix,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> SpringerStatus {
    guard(|| {
        if m.is_null() || out.is_null() {
            return fail(SpringerStatus::NullPointer, "null argument");
        }
        let m = &(*m).0;
        if row >= m.size() || col >= m.size() {
            return fail(SpringerStatus::OutOfRange, format!("({row}, {col}) outside {0}x{0}", m.size()));
        }
        to_c_string(serde_json::to_string(&m.entries[row][col]).expect("serializable"), out)
    })
}

/// The whole matrix as `{"order": [...], "entries": [[...]]}`.
///
/// # Safety
/// `m` must be a valid handle and `out` writable; free the result with `springer_string_free`.
#[no_mangle]
pub unsafe extern "C" fn springer_matrix_json(m: *const SpringerMatrix, out: *mut *mut c_char) -> SpringerStatus {
    guard(|| {
        if m.is_null() || out.is_null() {
            return fail(SpringerStatus::NullPointer, "null argument");
        }
        to_c_string(serde_json::to_string(&(*m).0).expect("serializable"), out)
    })
}

/// Exact rank over `Q(t)`.
///
/// # Safety
/// `m` must be a valid handle; `out_rank` and `out_full` must be writable.
#[no_mangle]
pub unsafe extern "C" fn springer_matrix_rank(
    m: *const SpringerMatrix,
    out_rank: *mut usize,
    out_full: *mut bool,
) -> SpringerStatus {
    guard(|| {
        if m.is_null() || out_rank.is_null() || out_full.is_null() {
            return fail(SpringerStatus::NullPointer, "null argument");
        }
        let r = rank(&(*m).0.entries);
        *out_rank = r.rank;
        *out_full = r.full_column_rank;
        SpringerStatus::Ok
    })
}

/// Runs every basis check; writes the JSON report and whether everything passed.
///
/// # Safety
/// `p` must be a valid handle; `out_json` and `out_verified` must be writable.
#[no_mangle]
pub unsafe extern "C" fn springer_verify_basis_json(
    p: *const SpringerPartition,
    out_json: *mut *mut c_char,
    out_verified: *mut bool,
) -> SpringerStatus {
    guard(|| {
        if p.is_null() || out_json.is_null() || out_verified.is_null() {
            return fail(SpringerStatus::NullPointer, "null argument");
        }
        match verify_basis(&(*p).0) {
            Ok(r) => {
                *out_verified = r.verified();
                to_c_string(serde_json::to_string(&r).expect("serializable"), out_json)
            }
            Err(e) => from_core(e),
        }
    })
}

/// `p_v(u)` under the rotated English weights of `p`, as JSON. `v` and `u` are one-line
/// permutations of length `n`.
///
/// # Safety
/// `p` must be a valid handle, `v` and `u` must hold `n` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn springer_restrict_json(
    p: *const SpringerPartition,
    v: *const u32,
    u: *const u32,
    n: usize,
    out: *mut *mut c_char,
) -> SpringerStatus {
    guard(|| {
        if p.is_null() || out.is_null() {
            return fail(SpringerStatus::NullPointer, "null argument");
        }
        let (Some(v), Some(u)) = (slice(v, n), slice(u, n)) else {
            return fail(SpringerStatus::NullPointer, "null permutation");
        };
        let lambda = &(*p).0;
        let perm = |s: &[u32]| Permutation::new(s.iter().map(|&x| x as usize).collect());
        let res = (|| {
            let wts = circle_weights(lambda, &rotated_english_sigma(lambda))?;
            springer_schubert(&perm(v)?, &perm(u)?, &wts)
        })();
        match res {
            Ok(poly) => to_c_string(serde_json::to_string(&poly).expect("serializable"), out),
            Err(e) => from_core(e),
        }
    })
}
