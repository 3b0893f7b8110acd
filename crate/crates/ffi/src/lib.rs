//! C interface to `sqfree-lab`.
//!
//! Objects are opaque handles created by `*_parse` and released with the
//! matching `*_free`. Every fallible function returns an [`SqfStatus`]; on
//! failure a message is available from [`sqf_last_error_message`] on the same
//! thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sqfree_lab::groebner::{initial_ideal, parse_ideal, specialize, IdealFile, MonomialOrder};
use sqfree_lab::simplicial::{dual_graph, is_buchsbaum, is_cohen_macaulay, reduced_homology, SimplicialComplex};
use sqfree_lab::sqfree::{ccm_verdict, lyubeznik_table, LyubeznikTable, SqfreeError};
use sqfree_lab::workbench::{load_complex, JobError};
use sqfree_lab::{dispatch_field, FieldSpec};

/// Pass as `characteristic` to use the `char:` line of an ideal file (or the rationals).
pub const SQF_CHAR_FROM_INPUT: u32 = u32::MAX;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SqfStatus {
    Ok = 0,
    Internal = 1,
    Parse = 2,
    Precondition = 3,
    NullPointer = 4,
    InvalidArgument = 5,
    BufferTooSmall = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SqfOrder {
    DegRevLex = 0,
    Lex = 1,
}

/// A parsed simplicial complex.
pub struct SqfComplex(SimplicialComplex);

/// A parsed ideal file.
pub struct SqfIdeal(IdealFile);

/// A computed Lyubeznik table.
pub struct SqfLyubeznikTable(LyubeznikTable);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(SqfStatus, String);

impl From<JobError> for Failure {
    fn from(e: JobError) -> Self {
        let status = match e {
            JobError::Io { .. } | JobError::Parse(_) => SqfStatus::Parse,
            JobError::Precondition(_) => SqfStatus::Precondition,
            JobError::Internal(_) => SqfStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

impl From<SqfreeError> for Failure {
    fn from(e: SqfreeError) -> Self {
        JobError::from(e).into()
    }
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SqfStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SqfStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&format!("internal panic: {message}"));
            SqfStatus::Internal
        }
    }
}

fn null() -> Failure {
    Failure(SqfStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(SqfStatus::Parse, "input is not valid UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn field(characteristic: u32) -> Result<FieldSpec, Failure> {
    FieldSpec::new(characteristic as u64).map_err(|e| Failure(SqfStatus::InvalidArgument, e.to_string()))
}

/// Message of the last failure on this thread, or an empty string. The
/// pointer stays valid until the next call into this library on the thread.
#[no_mangle]
pub extern "C" fn sqf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sqf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a complex file, or a squarefree monomial ideal file, into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_complex_parse(text_in: *const c_char, out: *mut *mut SqfComplex) -> SqfStatus {
    guard(|| {
        let t = text(text_in)?;
        let c = load_complex(t)?;
        write(out, Box::into_raw(Box::new(SqfComplex(c))))
    })
}

/// # Safety
/// `complex` must come from [`sqf_complex_parse`] and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sqf_complex_free(complex: *mut SqfComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

/// Vertex count `n` of the ground set.
///
/// # Safety
/// `complex` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_complex_vertex_count(complex: *const SqfComplex, out: *mut usize) -> SqfStatus {
    guard(|| write(out, handle(complex)?.0.vertex_count()))
}

/// Reduced Betti numbers `H~_{-1}, ..., H~_{dim}` written to `dims`. On
/// `BufferTooSmall`, `len` still receives the required length.
///
/// # Safety
/// `dims` must have room for `capacity` entries; `complex` and `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sqf_complex_homology(
    complex: *const SqfComplex,
    characteristic: u32,
    dims: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> SqfStatus {
    guard(|| {
        let c = handle(complex)?;
        let h = reduced_homology(&c.0, field(characteristic)?).map_err(JobError::from)?;
        write(len, h.dims.len())?;
        if capacity < h.dims.len() {
            return Err(Failure(
                SqfStatus::BufferTooSmall,
                format!("{} entries needed", h.dims.len()),
            ));
        }
        if dims.is_null() {
            return Err(null());
        }
        ptr::copy_nonoverlapping(h.dims.as_ptr(), dims, h.dims.len());
        Ok(())
    })
}

/// Reisner's criterion.
///
/// # Safety
/// `complex` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_complex_is_cohen_macaulay(
    complex: *const SqfComplex,
    characteristic: u32,
    out: *mut bool,
) -> SqfStatus {
    guard(|| write(out, is_cohen_macaulay(&handle(complex)?.0, field(characteristic)?)))
}

/// # Safety
/// `complex` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_complex_is_buchsbaum(
    complex: *const SqfComplex,
    characteristic: u32,
    out: *mut bool,
) -> SqfStatus {
    guard(|| write(out, is_buchsbaum(&handle(complex)?.0, field(characteristic)?)))
}

/// Canonical Cohen-Macaulay test. `witness` (may be null) receives the first
/// failing index, or `-1` when the ring is CCM.
///
/// # Safety
/// `complex` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_complex_is_ccm(
    complex: *const SqfComplex,
    characteristic: u32,
    out: *mut bool,
    witness: *mut i32,
) -> SqfStatus {
    guard(|| {
        let c = handle(complex)?;
        let v = ccm_verdict(&c.0, field(characteristic)?)?;
        write(out, v.ccm)?;
        if !witness.is_null() {
            witness.write(v.witness.map_or(-1, |i| i as i32));
        }
        Ok(())
    })
}

/// Number of connected components of the dual graph.
///
/// # Safety
/// `complex` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_complex_dual_graph_components(complex: *const SqfComplex, out: *mut usize) -> SqfStatus {
    guard(|| write(out, dual_graph(&handle(complex)?.0).components))
}

/// Computes the Lyubeznik table into a new handle.
///
/// # Safety
/// `complex` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_lyubeznik_table(
    complex: *const SqfComplex,
    characteristic: u32,
    out: *mut *mut SqfLyubeznikTable,
) -> SqfStatus {
    guard(|| {
        let c = handle(complex)?;
        if c.0.vertex_count() > sqfree_lab::sqfree::MAX_MODULE_VARS {
            return Err(SqfreeError::TooManyVariables(c.0.vertex_count()).into());
        }
        let t = lyubeznik_table(&c.0, field(characteristic)?)?;
        write(out, Box::into_raw(Box::new(SqfLyubeznikTable(t))))
    })
}

/// # Safety
/// `table` must come from [`sqf_lyubeznik_table`] and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sqf_lyubeznik_table_free(table: *mut SqfLyubeznikTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// The Krull dimension `d`; the table is `(d + 1) x (d + 1)`.
///
/// # Safety
/// `table` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_lyubeznik_table_dimension(table: *const SqfLyubeznikTable, out: *mut usize) -> SqfStatus {
    guard(|| write(out, handle(table)?.0.d))
}

/// Entry `λ_{i,j}`.
///
/// # Safety
/// `table` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_lyubeznik_table_get(
    table: *const SqfLyubeznikTable,
    i: usize,
    j: usize,
    out: *mut usize,
) -> SqfStatus {
    guard(|| {
        let t = &handle(table)?.0;
        if i > t.d || j > t.d {
            return Err(Failure(
                SqfStatus::InvalidArgument,
                format!("index ({i}, {j}) outside 0..={}", t.d),
            ));
        }
        write(out, t.get(i, j))
    })
}

/// # Safety
/// `table` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_lyubeznik_table_is_trivial(table: *const SqfLyubeznikTable, out: *mut bool) -> SqfStatus {
    guard(|| write(out, handle(table)?.0.is_trivial()))
}

/// Parses an ideal file into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_ideal_parse(text_in: *const c_char, out: *mut *mut SqfIdeal) -> SqfStatus {
    guard(|| {
        let file = parse_ideal(text(text_in)?).map_err(JobError::from)?;
        write(out, Box::into_raw(Box::new(SqfIdeal(file))))
    })
}

/// # Safety
/// `ideal` must come from [`sqf_ideal_parse`] and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sqf_ideal_free(ideal: *mut SqfIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Minimal generators of the initial ideal as a JSON array of strings, e.g.
/// `["x2*x4","x3*x4"]`. Release the string with [`sqf_string_free`].
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqf_ideal_initial_ideal_json(
    ideal: *const SqfIdeal,
    characteristic: u32,
    order: SqfOrder,
    out: *mut *mut c_char,
) -> SqfStatus {
    guard(|| {
        let file = &handle(ideal)?.0;
        let spec = if characteristic == SQF_CHAR_FROM_INPUT {
            file.characteristic.unwrap_or_default()
        } else {
            field(characteristic)?
        };
        let order = match order {
            SqfOrder::DegRevLex => MonomialOrder::DegRevLex,
            SqfOrder::Lex => MonomialOrder::Lex,
        };
        let precondition = |e: sqfree_lab::groebner::GroebnerError| Failure(SqfStatus::Precondition, e.to_string());
        let j = dispatch_field!(spec, f => {
            let specialized = specialize(&file.ideal, f).map_err(precondition)?;
            initial_ideal(&specialized, order).map_err(precondition)?
        });
        let json = serde_json::to_string(&j.to_strings()).expect("strings serialize");
        let c = CString::new(json).expect("monomials contain no NUL");
        write(out, c.into_raw())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sqf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
