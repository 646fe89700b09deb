//! C ABI over `compshuffle`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and released with the
//! matching `*_free`. Every function returns a [`CsStatus`]; on failure the message is
//! available from [`cs_last_error`] on the same thread. Panics never unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use compshuffle::charfunc::{chi, d_alpha_dinv};
use compshuffle::combinat::{Composition, Partition};
use compshuffle::dyck::DyckPath;
use compshuffle::macdonald::{macdonald_h, nabla, nabla_c};
use compshuffle::symfunc::{Basis, SymFunc};
use compshuffle::verify::verify_shuffle;
use compshuffle::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    /// The input was valid but exceeds the enumeration cap.
    TooLarge = 4,
    /// An exact computation failed (inexact division, singular system, ...).
    Computation = 5,
    Panic = 6,
}

/// A Dyck path.
pub struct CsPath(DyckPath);

/// A symmetric function with Laurent polynomial coefficients in q, t.
pub struct CsSymFunc(SymFunc);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> CsStatus {
    match e {
        Error::Parse(_) | Error::LengthMismatch { .. } | Error::SigmaNotDistinct(_) | Error::SizeMismatch(_) => {
            CsStatus::InvalidInput
        }
        Error::CapExceeded { .. } => CsStatus::TooLarge,
        _ => CsStatus::Computation,
    }
}

/// Runs `f`, recording errors and converting panics.
fn guard(f: impl FnOnce() -> Result<(), (CsStatus, String)>) -> CsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CsStatus::Panic
        }
    }
}

fn lib(e: Error) -> (CsStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CsStatus, String) {
    (CsStatus::NullPointer, format!("`{what}` is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (CsStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (CsStatus::InvalidUtf8, format!("`{what}` is not UTF-8")))
}

unsafe fn read_parts<'a>(parts: *const u32, len: usize) -> Result<&'a [u32], (CsStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if parts.is_null() {
        return Err(null("parts"));
    }
    Ok(std::slice::from_raw_parts(parts, len))
}

unsafe fn composition(parts: *const u32, len: usize) -> Result<Composition, (CsStatus, String)> {
    Composition::new(read_parts(parts, len)?.to_vec()).map_err(lib)
}

unsafe fn out_ref<'a, T>(out: *mut T, what: &str) -> Result<&'a mut T, (CsStatus, String)> {
    out.as_mut().ok_or_else(|| null(what))
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message for the last failure on this thread, or null. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn cs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses an NE-string (or a comma-separated area sequence).
///
/// # Safety
/// `text` must be null or a valid C string; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_path_parse(text: *const c_char, out: *mut *mut CsPath) -> CsStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let path: DyckPath = read_str(text, "text")?.parse().map_err(lib)?;
        *out = boxed(CsPath(path));
        Ok(())
    })
}

/// # Safety
/// `path` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cs_path_free(path: *mut CsPath) {
    if !path.is_null() {
        drop(Box::from_raw(path));
    }
}

/// Writes area, dinv and bounce of `path`; any of the outputs may be null.
///
/// # Safety
/// `path` must be a live handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_path_stats(path: *const CsPath, area: *mut usize, dinv: *mut usize, bounce: *mut usize) -> CsStatus {
    guard(|| {
        let p = &path.as_ref().ok_or_else(|| null("path"))?.0;
        if let Some(a) = area.as_mut() {
            *a = p.area();
        }
        if let Some(d) = dinv.as_mut() {
            *d = p.dinv();
        }
        if let Some(b) = bounce.as_mut() {
            *b = p.bounce();
        }
        Ok(())
    })
}

/// The zeta image of `path`, as a new handle.
///
/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_path_zeta(path: *const CsPath, out: *mut *mut CsPath) -> CsStatus {
    guard(|| {
        let p = &path.as_ref().ok_or_else(|| null("path"))?.0;
        *out_ref(out, "out")? = boxed(CsPath(p.zeta()));
        Ok(())
    })
}

/// The NE-string of `path`; release with [`cs_string_free`].
///
/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_path_to_string(path: *const CsPath, out: *mut *mut c_char) -> CsStatus {
    guard(|| {
        let p = &path.as_ref().ok_or_else(|| null("path"))?.0;
        *out_ref(out, "out")? = CString::new(p.to_string()).expect("NE-string").into_raw();
        Ok(())
    })
}

/// The characteristic function of `path`.
///
/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_chi(path: *const CsPath, out: *mut *mut CsSymFunc) -> CsStatus {
    guard(|| {
        let p = &path.as_ref().ok_or_else(|| null("path"))?.0;
        let out = out_ref(out, "out")?;
        *out = boxed(CsSymFunc(chi(p).map_err(lib)?));
        Ok(())
    })
}

/// `D_alpha`, the dinv-weighted sum over paths with touch composition `alpha`.
///
/// # Safety
/// `parts` must point to `len` readable values (or be null with `len == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_d_alpha(parts: *const u32, len: usize, out: *mut *mut CsSymFunc) -> CsStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let alpha = composition(parts, len)?;
        *out = boxed(CsSymFunc(d_alpha_dinv(&alpha).map_err(lib)?));
        Ok(())
    })
}

/// `nabla C_alpha(1)`.
///
/// # Safety
/// As for [`cs_d_alpha`].
#[no_mangle]
pub unsafe extern "C" fn cs_nabla_c(parts: *const u32, len: usize, out: *mut *mut CsSymFunc) -> CsStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let alpha = composition(parts, len)?;
        *out = boxed(CsSymFunc(nabla_c(&alpha).map_err(lib)?));
        Ok(())
    })
}

/// The modified Macdonald polynomial `H_mu`; `parts` may be in any order.
///
/// # Safety
/// As for [`cs_d_alpha`].
#[no_mangle]
pub unsafe extern "C" fn cs_macdonald_h(parts: *const u32, len: usize, out: *mut *mut CsSymFunc) -> CsStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let raw = read_parts(parts, len)?;
        if raw.contains(&0) {
            return Err((CsStatus::InvalidInput, "partition parts must be positive".into()));
        }
        *out = boxed(CsSymFunc(macdonald_h(&Partition::new(raw.to_vec())).map_err(lib)?));
        Ok(())
    })
}

/// `nabla f`.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_nabla(f: *const CsSymFunc, out: *mut *mut CsSymFunc) -> CsStatus {
    guard(|| {
        let f = &f.as_ref().ok_or_else(|| null("f"))?.0;
        let out = out_ref(out, "out")?;
        *out = boxed(CsSymFunc(nabla(f).map_err(lib)?));
        Ok(())
    })
}

/// Parses a symmetric function from its JSON encoding.
///
/// # Safety
/// `json` must be null or a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_symfunc_from_json(json: *const c_char, out: *mut *mut CsSymFunc) -> CsStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let v = serde_json::from_str(read_str(json, "json")?).map_err(|e| (CsStatus::InvalidInput, e.to_string()))?;
        *out = boxed(CsSymFunc(SymFunc::from_json(&v).map_err(lib)?));
        Ok(())
    })
}

/// The JSON encoding of `f` in the Schur basis; release with [`cs_string_free`].
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_symfunc_to_json(f: *const CsSymFunc, out: *mut *mut c_char) -> CsStatus {
    guard(|| {
        let f = &f.as_ref().ok_or_else(|| null("f"))?.0;
        let text = f.convert(Basis::S).to_json().to_string();
        *out_ref(out, "out")? = CString::new(text).expect("JSON has no nul").into_raw();
        Ok(())
    })
}

/// Exact equality of two symmetric functions (in any bases).
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_symfunc_equal(a: *const CsSymFunc, b: *const CsSymFunc, out: *mut bool) -> CsStatus {
    guard(|| {
        let a = &a.as_ref().ok_or_else(|| null("a"))?.0;
        let b = &b.as_ref().ok_or_else(|| null("b"))?.0;
        *out_ref(out, "out")? = a == b;
        Ok(())
    })
}

/// # Safety
/// `f` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cs_symfunc_free(f: *mut CsSymFunc) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs the shuffle check for every composition of `n`; `pass` receives the verdict.
///
/// # Safety
/// `pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_verify_shuffle(n: u32, pass: *mut bool) -> CsStatus {
    guard(|| {
        let pass = out_ref(pass, "pass")?;
        *pass = verify_shuffle(n).map_err(lib)?.pass();
        Ok(())
    })
}
