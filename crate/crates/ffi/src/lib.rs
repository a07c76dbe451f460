//! C ABI over `minaff`.
//!
//! Conventions:
//! * every fallible function returns a [`MinaffStatus`]; on failure the
//!   message is kept per thread and read with [`minaff_last_error`];
//! * results that are not plain integers come back as JSON strings owned by
//!   the library and released with [`minaff_string_free`];
//! * diagrams and graded characters are opaque handles with matching
//!   `*_free` functions. Passing NULL to a free function is a no-op.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use minaff::charalg::{irr_character, tensor_decompose, weyl_dim};
use minaff::graded::{classify_psi, graded_char_m, GradedDecomposition, GradedStatus, LambdaE6};
use minaff::lweight::{min_aff_lweight, Orientation};
use minaff::output::{CharPayload, Document, GradedPayload, MinAffPayload, PsiPayload, RootsPayload, TensorPayload};
use minaff::{DynkinDiagram, Error, WeightVec};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinaffStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotDominant = 3,
    OutOfRange = 4,
    BufferTooSmall = 5,
    Internal = 6,
}

/// Graded character status, mirrored for C callers.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinaffGradedStatus {
    Proved = 0,
    Conjectural = 1,
    UpperBoundOnly = 2,
}

/// Opaque Dynkin diagram.
pub struct MinaffDiagram(DynkinDiagram);

/// Opaque graded character of an E6 module `M(lambda)`.
pub struct MinaffGraded(GradedDecomposition);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> MinaffStatus {
    match e {
        Error::NotDominant(_) => MinaffStatus::NotDominant,
        Error::NodeOutOfRange { .. }
        | Error::OracleOutOfRange { .. }
        | Error::WindowTooSmall { .. }
        | Error::OutsideMultiplicityFree(_) => MinaffStatus::OutOfRange,
        _ => MinaffStatus::InvalidArgument,
    }
}

struct Fail(MinaffStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, records any error and converts panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MinaffStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            MinaffStatus::Ok
        }
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal error");
            MinaffStatus::Internal
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(MinaffStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(MinaffStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn weight_arg(p: *const i64, len: usize, what: &str) -> Result<WeightVec, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    Ok(WeightVec(std::slice::from_raw_parts(p, len).to_vec()))
}

unsafe fn diagram_arg<'a>(d: *const MinaffDiagram) -> Result<&'a DynkinDiagram, Fail> {
    d.as_ref().map(|d| &d.0).ok_or_else(|| null("diagram"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(MinaffStatus::Internal, "interior NUL".into()))?;
    write_out(out, c.into_raw())
}

fn lambda_e6(w: &WeightVec) -> Result<LambdaE6, Fail> {
    Ok(LambdaE6::from_weight(w)?)
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn minaff_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copies the calling thread's last error message into `buf`.
///
/// `*needed` receives the size including the terminating NUL. Returns
/// `BufferTooSmall` (and writes nothing) when `cap` is less than that; an
/// empty string is written when there is no pending error.
///
/// # Safety
/// `buf` must point to `cap` writable bytes; `needed` must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn minaff_last_error(buf: *mut c_char, cap: usize, needed: *mut usize) -> MinaffStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone()).unwrap_or_default();
    let bytes = msg.as_bytes_with_nul();
    if !needed.is_null() {
        *needed = bytes.len();
    }
    if buf.is_null() {
        return MinaffStatus::NullPointer;
    }
    if cap < bytes.len() {
        return MinaffStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(bytes.as_ptr().cast(), buf, bytes.len());
    MinaffStatus::Ok
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn minaff_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a diagram from a type spec such as `E6`, `A3`, `D5` or
/// `edges:1-2,2-3`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_diagram_new(spec: *const c_char, out: *mut *mut MinaffDiagram) -> MinaffStatus {
    guard(|| {
        let spec = str_arg(spec, "spec")?;
        let d = DynkinDiagram::from_type_spec(spec)?;
        write_out(out, Box::into_raw(Box::new(MinaffDiagram(d))))
    })
}

/// # Safety
/// `d` must come from [`minaff_diagram_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn minaff_diagram_free(d: *mut MinaffDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live diagram handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_diagram_rank(d: *const MinaffDiagram, out: *mut usize) -> MinaffStatus {
    guard(|| write_out(out, diagram_arg(d)?.rank()))
}

/// Number of positive roots.
///
/// # Safety
/// `d` must be a live diagram handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_diagram_positive_root_count(d: *const MinaffDiagram, out: *mut usize) -> MinaffStatus {
    guard(|| write_out(out, diagram_arg(d)?.positive_roots().len()))
}

/// Positive roots as a JSON document.
///
/// # Safety
/// `d` must be a live diagram handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_roots_json(d: *const MinaffDiagram, out: *mut *mut c_char) -> MinaffStatus {
    guard(|| {
        let payload = RootsPayload::build(diagram_arg(d)?, false, false)?;
        write_string(out, Document::new("roots", payload).to_json())
    })
}

/// Dimension of `V(hw)` as a decimal string.
///
/// # Safety
/// `hw` must point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_weyl_dim(
    d: *const MinaffDiagram,
    hw: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> MinaffStatus {
    guard(|| {
        let dim = weyl_dim(diagram_arg(d)?, &weight_arg(hw, len, "hw")?)?;
        write_string(out, dim.to_string())
    })
}

/// Multiplicity of `mu` in `V(hw)` as a decimal string.
///
/// # Safety
/// `hw` and `mu` must point to `len` integers each; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_weight_multiplicity(
    d: *const MinaffDiagram,
    hw: *const i64,
    mu: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> MinaffStatus {
    guard(|| {
        let d = diagram_arg(d)?;
        let ch = irr_character(d, &weight_arg(hw, len, "hw")?)?;
        let m = ch.mult(d, &weight_arg(mu, len, "mu")?)?;
        write_string(out, m.to_string())
    })
}

/// Character of `V(hw)` (dominant weights with multiplicities) as JSON.
///
/// # Safety
/// `hw` must point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_character_json(
    d: *const MinaffDiagram,
    hw: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> MinaffStatus {
    guard(|| {
        let payload = CharPayload::build(diagram_arg(d)?, &weight_arg(hw, len, "hw")?, None)?;
        write_string(out, Document::new("char", payload).to_json())
    })
}

/// Decomposition of `V(a) (x) V(b)` as JSON.
///
/// # Safety
/// `a` and `b` must point to `len` integers each; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_tensor_json(
    d: *const MinaffDiagram,
    a: *const i64,
    b: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> MinaffStatus {
    guard(|| {
        let d = diagram_arg(d)?;
        let (a, b) = (weight_arg(a, len, "a")?, weight_arg(b, len, "b")?);
        let list = tensor_decompose(d, &a, &b)?;
        write_string(out, Document::new("tensor", TensorPayload::build(d, &a, &b, &list)?).to_json())
    })
}

/// Highest l-weight of a minimal affinization as JSON. `orientation` is
/// `1` or `-1`.
///
/// # Safety
/// `lambda` must point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_min_aff_json(
    d: *const MinaffDiagram,
    lambda: *const i64,
    len: usize,
    orientation: i32,
    base: i64,
    out: *mut *mut c_char,
) -> MinaffStatus {
    guard(|| {
        let d = diagram_arg(d)?;
        let l = weight_arg(lambda, len, "lambda")?;
        let eps = Orientation::from_sign(orientation as i64)?;
        let ma = min_aff_lweight(d, &l, eps, base)?;
        write_string(out, Document::new("minaff", MinAffPayload::build(d, &l, eps, base, &ma)).to_json())
    })
}

/// Root-set classification for E6 `lambda` (six coordinates) as JSON.
///
/// # Safety
/// `lambda` must point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_psi_json(lambda: *const i64, len: usize, out: *mut *mut c_char) -> MinaffStatus {
    guard(|| {
        let l = lambda_e6(&weight_arg(lambda, len, "lambda")?)?;
        let c = classify_psi(&l)?;
        write_string(out, Document::new("psi", PsiPayload::build(&l.m, &c)).to_json())
    })
}

/// Computes the graded character of the E6 module `M(lambda)`.
///
/// # Safety
/// `lambda` must point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_graded_new(lambda: *const i64, len: usize, out: *mut *mut MinaffGraded) -> MinaffStatus {
    guard(|| {
        let l = lambda_e6(&weight_arg(lambda, len, "lambda")?)?;
        write_out(out, Box::into_raw(Box::new(MinaffGraded(graded_char_m(&l)))))
    })
}

/// # Safety
/// `g` must come from [`minaff_graded_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn minaff_graded_free(g: *mut MinaffGraded) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graded handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_graded_status(g: *const MinaffGraded, out: *mut MinaffGradedStatus) -> MinaffStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graded"))?;
        let s = match g.0.status {
            GradedStatus::Proved => MinaffGradedStatus::Proved,
            GradedStatus::Conjectural => MinaffGradedStatus::Conjectural,
            GradedStatus::UpperBoundOnly => MinaffGradedStatus::UpperBoundOnly,
        };
        write_out(out, s)
    })
}

/// Largest degree with a nonzero component.
///
/// # Safety
/// `g` must be a live graded handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_graded_max_degree(g: *const MinaffGraded, out: *mut u64) -> MinaffStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graded"))?;
        write_out(out, g.0.degrees.keys().next_back().copied().unwrap_or(0))
    })
}

/// Dimension polynomial, e.g. `351 + 27 t`.
///
/// # Safety
/// `g` must be a live graded handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_graded_dimension_polynomial(
    g: *const MinaffGraded,
    out: *mut *mut c_char,
) -> MinaffStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graded"))?;
        write_string(out, g.0.dimension_polynomial()?.to_string())
    })
}

/// Full graded decomposition as JSON, with the dimension polynomial.
///
/// # Safety
/// `g` must be a live graded handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minaff_graded_json(g: *const MinaffGraded, out: *mut *mut c_char) -> MinaffStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graded"))?;
        write_string(out, Document::new("graded", GradedPayload::build(&g.0, true, false)?).to_json())
    })
}
