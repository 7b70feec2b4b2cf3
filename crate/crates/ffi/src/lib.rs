//! C interface to `ribbonres`.
//!
//! Every function returns a `RibbonresStatus`; on failure the message is
//! available from `ribbonres_last_error` on the same thread. Handles are
//! opaque and must be released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ribbonres::cli::{self, Command, RunConfig, RunOutcome};
use ribbonres::combinatorics::{count_ssyt, Composition, SkewShape};
use ribbonres::veronese::{self, ResolutionWindow};
use ribbonres::{CoefficientRing, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RibbonresStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Precondition = 3,
    Resource = 4,
    VerificationFailed = 5,
    Internal = 6,
}

/// Minimal free resolution window of a Veronese module.
pub struct RibbonresResolution {
    window: ResolutionWindow,
}

/// Report of a verification run, with its JSON rendering.
pub struct RibbonresReport {
    outcome: RunOutcome,
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> RibbonresStatus {
    match e {
        Error::InvalidComposition(_)
        | Error::UnsupportedDiagram(_)
        | Error::InvalidInput(_)
        | Error::FieldRequired(_)
        | Error::DimensionMismatch(_)
        | Error::Degenerate(_) => RibbonresStatus::InvalidArgument,
        Error::Precondition(_) | Error::NotInSpan(_) | Error::ViolatedFreeness(_) => RibbonresStatus::Precondition,
        Error::Resource(_) | Error::Overflow(_) => RibbonresStatus::Resource,
        Error::Verification(_) | Error::NotAComplex(_) => RibbonresStatus::VerificationFailed,
    }
}

fn guard(f: impl FnOnce() -> Result<(), RibbonresStatus>) -> RibbonresStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            RibbonresStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            RibbonresStatus::Internal
        }
    }
}

fn fail(e: Error) -> RibbonresStatus {
    set_error(&e.to_string());
    status_of(&e)
}

fn null(what: &str) -> RibbonresStatus {
    set_error(&format!("null pointer: {what}"));
    RibbonresStatus::NullPointer
}

unsafe fn parse_ring(ring: *const c_char) -> Result<CoefficientRing, RibbonresStatus> {
    if ring.is_null() {
        return Ok(CoefficientRing::Rationals);
    }
    let s = CStr::from_ptr(ring).to_str().map_err(|_| {
        set_error("ring spec is not UTF-8");
        RibbonresStatus::InvalidArgument
    })?;
    s.parse().map_err(fail)
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn ribbonres_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Number of semistandard fillings of the ribbon with row lengths
/// `parts[0..len]` (bottom row first) using entries `1..=n`.
///
/// # Safety
/// `parts` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_count_ribbon_ssyt(parts: *const usize, len: usize, n: usize, out: *mut u64) -> RibbonresStatus {
    guard(|| {
        if parts.is_null() || out.is_null() {
            return Err(null("parts/out"));
        }
        let alpha = Composition::new(std::slice::from_raw_parts(parts, len).to_vec()).map_err(fail)?;
        *out = count_ssyt(&SkewShape::ribbon(&alpha), n) as u64;
        Ok(())
    })
}

/// Generator degree `di+r` and rank of the `i`-th resolvent of `S^(d,r)`.
///
/// # Safety
/// `degree` and `rank` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_betti(
    d: usize,
    r: usize,
    n: usize,
    i: usize,
    degree: *mut usize,
    rank: *mut usize,
) -> RibbonresStatus {
    guard(|| {
        if degree.is_null() || rank.is_null() {
            return Err(null("degree/rank"));
        }
        let (g, b) = veronese::betti(d, r, n, i).map_err(fail)?;
        *degree = g;
        *rank = b;
        Ok(())
    })
}

/// Builds the resolution window up to homological degree `i_max` and
/// internal degree `deg_max`. `ring` is `"q"`, `"z"` or `"fp:<p>"`; null
/// means `"q"`.
///
/// # Safety
/// `ring` is null or a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_resolution_new(
    d: usize,
    r: usize,
    n: usize,
    ring: *const c_char,
    i_max: usize,
    deg_max: usize,
    out: *mut *mut RibbonresResolution,
) -> RibbonresStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let ring = parse_ring(ring)?;
        let window = veronese::build_resolution(d, r, n, ring, i_max, deg_max).map_err(fail)?;
        *out = Box::into_raw(Box::new(RibbonresResolution { window }));
        Ok(())
    })
}

/// # Safety
/// `h` is null or a handle from `ribbonres_resolution_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_resolution_free(h: *mut RibbonresResolution) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of resolvents in the window (`i_max + 1`).
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_resolution_num_steps(h: *const RibbonresResolution, out: *mut usize) -> RibbonresStatus {
    guard(|| {
        if h.is_null() || out.is_null() {
            return Err(null("handle/out"));
        }
        *out = (*h).window.steps.len();
        Ok(())
    })
}

/// Generator degree and number of generators of resolvent `i`.
///
/// # Safety
/// `h` must be a live handle; `degree` and `generators` writable.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_resolution_step(
    h: *const RibbonresResolution,
    i: usize,
    degree: *mut usize,
    generators: *mut usize,
) -> RibbonresStatus {
    guard(|| {
        if h.is_null() || degree.is_null() || generators.is_null() {
            return Err(null("handle/degree/generators"));
        }
        let h = &*h;
        let step = h.window.steps.get(i).ok_or_else(|| {
            set_error(&format!("step {i} outside the window"));
            RibbonresStatus::InvalidArgument
        })?;
        *degree = step.generator_degree;
        *generators = step.generators;
        Ok(())
    })
}

/// Runs the exactness, minimality, Betti and Euler checks on the window;
/// `passed` receives whether all of them hold.
///
/// # Safety
/// `h` must be a live handle and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_resolution_verify(h: *const RibbonresResolution, passed: *mut bool) -> RibbonresStatus {
    guard(|| {
        if h.is_null() || passed.is_null() {
            return Err(null("handle/passed"));
        }
        let w = &(*h).window;
        let checks = [
            veronese::verify_exactness(w),
            veronese::verify_minimality(w),
            veronese::verify_betti(w),
            veronese::verify_euler(w),
        ];
        let mut ok = true;
        for c in checks {
            ok &= c.map_err(fail)?.passed();
        }
        *passed = ok;
        Ok(())
    })
}

/// Runs the default verification suite for `n` variables over `ring`.
/// A suite with failing checks still returns `RIBBONRES_STATUS_OK`; query
/// `ribbonres_report_passed`.
///
/// # Safety
/// `ring` is null or a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_verify_all(n: usize, ring: *const c_char, out: *mut *mut RibbonresReport) -> RibbonresStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let mut config = RunConfig::new(Command::VerifyAll);
        config.n = n;
        config.ring = parse_ring(ring)?;
        config.timings = false;
        let outcome = cli::run(&config).map_err(fail)?;
        let text = cli::render(&outcome, cli::Format::Json).map_err(fail)?;
        let json = CString::new(text).map_err(|_| {
            set_error("report contains NUL");
            RibbonresStatus::Internal
        })?;
        *out = Box::into_raw(Box::new(RibbonresReport { outcome, json }));
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_report_passed(h: *const RibbonresReport, passed: *mut bool) -> RibbonresStatus {
    guard(|| {
        if h.is_null() || passed.is_null() {
            return Err(null("handle/passed"));
        }
        *passed = (*h).outcome.passed();
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_report_num_checks(h: *const RibbonresReport, out: *mut usize) -> RibbonresStatus {
    guard(|| {
        if h.is_null() || out.is_null() {
            return Err(null("handle/out"));
        }
        *out = (*h).outcome.reports.len();
        Ok(())
    })
}

/// JSON rendering of the report, owned by the handle.
///
/// # Safety
/// `h` must be a live handle; the result is valid until it is freed.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_report_json(h: *const RibbonresReport) -> *const c_char {
    if h.is_null() {
        set_error("null pointer: handle");
        return ptr::null();
    }
    (*h).json.as_ptr()
}

/// # Safety
/// `h` is null or a handle from `ribbonres_verify_all` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ribbonres_report_free(h: *mut RibbonresReport) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}
