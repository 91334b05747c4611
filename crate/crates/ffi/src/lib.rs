//! C ABI over `numsgp`.
//!
//! Semigroups live behind an opaque [`NumsgpSemigroup`] handle created by
//! [`numsgp_semigroup_new`] and released with [`numsgp_semigroup_free`].
//! Every other call returns a [`NumsgpStatus`] and writes its result through
//! an out-pointer; on failure a message is available from
//! [`numsgp_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use numsgp::{herzog, hilbert, Error, NumericalSemigroup};

/// Opaque semigroup handle.
pub struct NumsgpSemigroup(NumericalSemigroup);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumsgpStatus {
    Ok = 0,
    NullPointer = 1,
    /// Empty list, non-positive entry, gcd > 1 or non-minimal generators.
    InvalidGenerators = 2,
    Overflow = 3,
    NotAnElement = 4,
    IndexOutOfRange = 5,
    PreconditionFailed = 6,
    /// The query needs a non-symmetric three-generated semigroup.
    NotApplicable = 7,
    BufferTooSmall = 8,
    Internal = 9,
    Panic = 10,
}

/// Exponents of the 2x2 matrix whose minors define the semigroup ring.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NumsgpHerzog {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub alpha_p: i64,
    pub beta_p: i64,
    pub gamma_p: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> NumsgpStatus {
    match err {
        Error::Empty
        | Error::NonPositive(_)
        | Error::GcdNotOne { .. }
        | Error::NotMinimal { .. } => NumsgpStatus::InvalidGenerators,
        Error::Overflow(_) => NumsgpStatus::Overflow,
        Error::NotAnElement(_) => NumsgpStatus::NotAnElement,
        Error::IndexOutOfRange { .. } => NumsgpStatus::IndexOutOfRange,
        Error::PreconditionFailed { .. } => NumsgpStatus::PreconditionFailed,
        Error::NotThreeGenerated(_) | Error::SymmetricInput | Error::TieUndefined(_) => {
            NumsgpStatus::NotApplicable
        }
        Error::NoPositiveDecomposition { .. } | Error::InternalInconsistency(_) => {
            NumsgpStatus::Internal
        }
    }
}

enum Failure {
    Status(NumsgpStatus, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn null() -> Failure {
    Failure::Status(NumsgpStatus::NullPointer, "null pointer argument".into())
}

/// Runs `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> NumsgpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NumsgpStatus::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("panic inside numsgp".into());
            NumsgpStatus::Panic
        }
    }
}

unsafe fn handle<'a>(h: *const NumsgpSemigroup) -> Result<&'a NumericalSemigroup, Failure> {
    h.as_ref().map(|h| &h.0).ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

/// Copies `values` into `buf` (capacity `cap`) and stores the needed length
/// in `len`, which is written even when the buffer is too small.
unsafe fn write_slice(
    values: &[i64],
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> Result<(), Failure> {
    write(len, values.len())?;
    if values.len() > cap {
        return Err(Failure::Status(
            NumsgpStatus::BufferTooSmall,
            format!("buffer holds {cap} values, {} needed", values.len()),
        ));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return Err(null());
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    Ok(())
}

/// Creates a semigroup from `len` minimal generators.
///
/// # Safety
/// `gens` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_semigroup_new(
    gens: *const i64,
    len: usize,
    out: *mut *mut NumsgpSemigroup,
) -> NumsgpStatus {
    guard(|| {
        if out.is_null() || (gens.is_null() && len > 0) {
            return Err(null());
        }
        out.write(ptr::null_mut());
        let gens = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(gens, len)
        };
        let h = NumericalSemigroup::new(gens)?;
        out.write(Box::into_raw(Box::new(NumsgpSemigroup(h))));
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `h` must come from [`numsgp_semigroup_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn numsgp_semigroup_free(h: *mut NumsgpSemigroup) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_multiplicity(
    h: *const NumsgpSemigroup,
    out: *mut i64,
) -> NumsgpStatus {
    guard(|| write(out, handle(h)?.multiplicity()))
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_embedding_dimension(
    h: *const NumsgpSemigroup,
    out: *mut usize,
) -> NumsgpStatus {
    guard(|| write(out, handle(h)?.embedding_dimension()))
}

/// Copies the generators into `buf`; `len` receives their number.
///
/// # Safety
/// `h` must be a live handle, `buf` must hold `cap` values and `len` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_generators(
    h: *const NumsgpSemigroup,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> NumsgpStatus {
    guard(|| write_slice(handle(h)?.generators(), buf, cap, len))
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_contains(
    h: *const NumsgpSemigroup,
    n: i64,
    out: *mut bool,
) -> NumsgpStatus {
    guard(|| write(out, handle(h)?.contains(n)))
}

/// Largest integer not in the semigroup (-1 for the naturals).
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_frobenius(
    h: *const NumsgpSemigroup,
    out: *mut i64,
) -> NumsgpStatus {
    guard(|| write(out, handle(h)?.frobenius()))
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_genus(h: *const NumsgpSemigroup, out: *mut i64) -> NumsgpStatus {
    guard(|| write(out, handle(h)?.genus()))
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_is_symmetric(
    h: *const NumsgpSemigroup,
    out: *mut bool,
) -> NumsgpStatus {
    guard(|| write(out, handle(h)?.is_symmetric()))
}

/// Apery set with respect to the element `base`, indexed by residue.
/// `len` receives `base`, also when the buffer is too small.
///
/// # Safety
/// `h` must be a live handle, `buf` must hold `cap` values and `len` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_apery(
    h: *const NumsgpSemigroup,
    base: i64,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> NumsgpStatus {
    guard(|| {
        let table = handle(h)?.apery_set(base)?;
        write_slice(table.omegas(), buf, cap, len)
    })
}

/// First Hilbert coefficient of the semigroup ring.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_e1(h: *const NumsgpSemigroup, out: *mut i64) -> NumsgpStatus {
    guard(|| write(out, hilbert::e1_by_genus(handle(h)?)))
}

/// Herzog matrix exponents; `NotApplicable` unless the semigroup is
/// three-generated and not symmetric.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_herzog(
    h: *const NumsgpSemigroup,
    out: *mut NumsgpHerzog,
) -> NumsgpStatus {
    guard(|| {
        let p = herzog::herzog_parameters(handle(h)?)?;
        write(
            out,
            NumsgpHerzog {
                alpha: p.alpha,
                beta: p.beta,
                gamma: p.gamma,
                alpha_p: p.alpha_p,
                beta_p: p.beta_p,
                gamma_p: p.gamma_p,
            },
        )
    })
}

/// Whether the associated graded ring is Cohen-Macaulay.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsgp_graded_cm(
    h: *const NumsgpSemigroup,
    out: *mut bool,
) -> NumsgpStatus {
    guard(|| write(out, herzog::graded_cm_oracle(handle(h)?)))
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn numsgp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
