//! C ABI over `fano-toric`.
//!
//! Polytopes, polytope lists and reports are opaque heap handles owned by
//! the caller and released with the matching `*_free`. Every fallible call
//! returns an [`FtStatus`]; on failure [`ft_last_error_message`] describes
//! the error for the calling thread. Strings returned through out-pointers
//! are released with [`ft_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fano_toric::conjectures::{analyze, AnalysisReport};
use fano_toric::lattice::LatticeVector;
use fano_toric::polytope::{validate_smooth_fano, FanoPolytope};
use fano_toric::shell::{construct, parse, report_json, to_pretty};
use fano_toric::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    SpecError = 4,
    InvalidPolytope = 5,
    InternalError = 6,
    Panic = 7,
}

pub struct FtPolytope(FanoPolytope);

pub struct FtPolytopeList(Vec<FanoPolytope>);

pub struct FtReport(AnalysisReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let msg = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> FtStatus {
    match e {
        Error::Parse { .. } | Error::Shape { .. } => FtStatus::ParseError,
        Error::Spec { .. } => FtStatus::SpecError,
        Error::InvalidPolytope { .. } | Error::NotFanoShape(_) => FtStatus::InvalidPolytope,
        Error::ZeroVector | Error::ShapeMismatch(_) | Error::BadIndex { .. } => {
            FtStatus::InvalidArgument
        }
        _ => FtStatus::InternalError,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (FtStatus, String)>) -> FtStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FtStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside fano-toric");
            FtStatus::Panic
        }
    }
}

fn lib(e: Error) -> (FtStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (FtStatus, String) {
    (FtStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (FtStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (FtStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), (FtStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn ft_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a polytope from `vertex_count` rows of `dim` coordinates stored
/// row-major in `coords`.
///
/// # Safety
/// `name` must be a NUL-terminated string, `coords` must point to
/// `dim * vertex_count` integers and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ft_polytope_from_vertices(
    name: *const c_char,
    dim: usize,
    coords: *const i64,
    vertex_count: usize,
    out: *mut *mut FtPolytope,
) -> FtStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let len = dim.checked_mul(vertex_count).ok_or_else(|| {
            (
                FtStatus::InvalidArgument,
                "coordinate count overflows".to_string(),
            )
        })?;
        if coords.is_null() && len > 0 {
            return Err(null("coords"));
        }
        let flat: &[i64] = if len == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(coords, len)
        };
        let vertices = if dim == 0 {
            Vec::new()
        } else {
            flat.chunks(dim).map(LatticeVector::from_i64s).collect()
        };
        let p = FanoPolytope::new(name, dim, vertices).map_err(lib)?;
        write_out(out, FtPolytope(p))
    })
}

/// Builds a polytope from a family spec such as `product(simplex:2,hexagon)`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ft_polytope_construct(
    spec: *const c_char,
    out: *mut *mut FtPolytope,
) -> FtStatus {
    guard(|| {
        let p = construct(read_str(spec, "spec")?).map_err(lib)?;
        write_out(out, FtPolytope(p))
    })
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ft_polytope_free(p: *mut FtPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Dimension, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ft_polytope_dim(p: *const FtPolytope) -> usize {
    p.as_ref().map_or(0, |p| p.0.dim())
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ft_polytope_vertex_count(p: *const FtPolytope) -> usize {
    p.as_ref().map_or(0, |p| p.0.vertex_count())
}

/// Writes whether `p` satisfies every smooth Fano condition. When it does
/// not, the failures are available from `ft_last_error_message`.
///
/// # Safety
/// `p` must be a live handle and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn ft_polytope_validate(p: *const FtPolytope, valid: *mut bool) -> FtStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("polytope"))?;
        let valid = valid.as_mut().ok_or_else(|| null("output pointer"))?;
        let report = validate_smooth_fano(&p.0);
        *valid = report.is_valid();
        if !*valid {
            set_error(report.summary());
        }
        Ok(())
    })
}

/// Parses polytope text.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ft_polytope_list_parse(
    text: *const c_char,
    out: *mut *mut FtPolytopeList,
) -> FtStatus {
    guard(|| {
        let ps = parse(read_str(text, "text")?).map_err(lib)?;
        write_out(out, FtPolytopeList(ps))
    })
}

/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ft_polytope_list_len(list: *const FtPolytopeList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// Copies entry `index` into a new polytope handle.
///
/// # Safety
/// `list` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ft_polytope_list_get(
    list: *const FtPolytopeList,
    index: usize,
    out: *mut *mut FtPolytope,
) -> FtStatus {
    guard(|| {
        let list = list.as_ref().ok_or_else(|| null("list"))?;
        let p = list.0.get(index).ok_or_else(|| {
            (
                FtStatus::InvalidArgument,
                format!("index {index} out of range for {} polytopes", list.0.len()),
            )
        })?;
        write_out(out, FtPolytope(p.clone()))
    })
}

/// # Safety
/// `list` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ft_polytope_list_free(list: *mut FtPolytopeList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Runs the full analysis. Invalid polytopes still produce a report.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ft_analyze(p: *const FtPolytope, out: *mut *mut FtReport) -> FtStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("polytope"))?;
        let r = analyze(&p.0).map_err(lib)?;
        write_out(out, FtReport(r))
    })
}

/// # Safety
/// `r` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ft_report_free(r: *mut FtReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Picard rank, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ft_report_picard_rank(r: *const FtReport) -> i64 {
    r.as_ref().map_or(0, |r| r.0.picard_rank)
}

/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ft_report_is_valid(r: *const FtReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.is_valid())
}

/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ft_report_minimal_component_count(r: *const FtReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.minimal_components.len())
}

/// Number of violated theorem-level checks; nonzero means a bug.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ft_report_theorem_violations(r: *const FtReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.theorem_violations())
}

/// The report as pretty JSON with sorted keys; free with `ft_string_free`.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ft_report_to_json(r: *const FtReport, out: *mut *mut c_char) -> FtStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("report"))?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let text = to_pretty(&report_json(&r.0));
        let c = CString::new(text).map_err(|e| (FtStatus::InternalError, e.to_string()))?;
        *out = c.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ft_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
