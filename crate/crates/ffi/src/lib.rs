//! C ABI over the `diatomic` library.
//!
//! Conventions:
//! - every fallible function returns a [`DiaStatus`] and writes its result
//!   through an out-pointer only on success;
//! - big integers and rationals cross the boundary as decimal strings
//!   (`"12"`, `"7/3"`, `"inf"`);
//! - strings returned to the caller are owned by the caller and must be
//!   released with [`dia_string_free`];
//! - designs are opaque [`DiaDesign`] handles released with
//!   [`dia_design_free`];
//! - after a failure, [`dia_last_error_message`] describes it; the message
//!   is per thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::str::FromStr;

use diatomic::assembly::{assembly_inverse, assembly_of_rational_theta};
use diatomic::derivative::{derivative_at_rational, Verdict};
use diatomic::design::{compose, design_of_theta, parse_design, Design, ThetaValue};
use diatomic::matrix::sdm;
use diatomic::quadratic::{periodic_design_of_sqrt, purity_test, Purity};
use diatomic::sdi::{sdi, stern, SdiAddress};
use diatomic::{Error, ExtRational};
use num_bigint::BigUint;

/// Outcome of an FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiaStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An input string was not valid UTF-8.
    InvalidUtf8 = 2,
    /// An input string did not match the expected grammar.
    Parse = 3,
    /// The input parsed but lies outside the operation's domain.
    Domain = 4,
    /// The input is a special case the operation rejects, such as a
    /// perfect square passed to the square-root design.
    Unsupported = 5,
    /// A Rust panic was caught at the boundary.
    Internal = 6,
}

/// Opaque design handle (finite or eventually periodic).
pub struct DiaDesign {
    inner: Design,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiaPurity {
    Rational = 0,
    PureQuadratic = 1,
    NonPureQuadratic = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiaVerdict {
    DivergesToInfinity = 0,
    ZeroIfDifferentiable = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(DiaStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Syntax(_) => DiaStatus::Parse,
            Error::PerfectSquare(_) => DiaStatus::Unsupported,
            _ => DiaStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> DiaStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            DiaStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal error");
            DiaStatus::Internal
        }
    }
}

/// # Safety
/// `s` must be null or point to a nul-terminated string.
unsafe fn input<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(DiaStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(DiaStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn parse<T: FromStr>(s: &str, what: &str) -> Result<T, Failure> {
    s.trim()
        .parse()
        .map_err(|_| Failure(DiaStatus::Parse, format!("cannot parse {what} from {s:?}")))
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_string(out: *mut *mut c_char, value: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(DiaStatus::NullPointer, "output pointer is null".into()));
    }
    *out = CString::new(value).expect("library output has no nul").into_raw();
    Ok(())
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_design(out: *mut *mut DiaDesign, inner: Design) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(DiaStatus::NullPointer, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(DiaDesign { inner }));
    Ok(())
}

/// # Safety
/// `h` must be null or a live handle from this library.
unsafe fn design<'a>(h: *const DiaDesign) -> Result<&'a Design, Failure> {
    h.as_ref()
        .map(|d| &d.inner)
        .ok_or_else(|| Failure(DiaStatus::NullPointer, "design handle is null".into()))
}

/// # Safety
/// `out` must be null or valid for a write of `T`.
unsafe fn write_value<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(DiaStatus::NullPointer, "output pointer is null".into()));
    }
    *out = value;
    Ok(())
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn dia_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copy of the calling thread's most recent error message, or null if the
/// last call succeeded. Free with `dia_string_free`.
#[no_mangle]
pub extern "C" fn dia_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dia_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a design handle. Null is ignored.
///
/// # Safety
/// `h` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dia_design_free(h: *mut DiaDesign) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Stern's diatomic value `a_m` for a decimal `m`.
///
/// # Safety
/// `m` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_stern(m: *const c_char, out: *mut *mut c_char) -> DiaStatus {
    guard(|| {
        let m: BigUint = parse(input(m, "m")?, "a nonnegative integer")?;
        write_string(out, stern(&m).to_string())
    })
}

/// The value at order `m` of row `depth` of the diatomic table.
///
/// # Safety
/// `m` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_sdi(depth: u64, m: *const c_char, out: *mut *mut c_char) -> DiaStatus {
    guard(|| {
        let m: BigUint = parse(input(m, "m")?, "a nonnegative integer")?;
        write_string(out, sdi(&SdiAddress::new(depth, m))?.to_string())
    })
}

/// Parses a design such as `"11001"`, `"1(10)"` or `"100t"`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_design_parse(text: *const c_char, out: *mut *mut DiaDesign) -> DiaStatus {
    guard(|| {
        let d = parse_design(input(text, "design")?)?;
        write_design(out, d)
    })
}

/// The design whose binary decimal is `theta` (`"a/b"` in `[0, 1]`).
///
/// # Safety
/// `theta` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_design_of_theta(theta: *const c_char, out: *mut *mut DiaDesign) -> DiaStatus {
    guard(|| {
        let t: ThetaValue = input(theta, "theta")?.trim().parse()?;
        write_design(out, design_of_theta(&t))
    })
}

/// Canonical text form of a design.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_design_to_string(h: *const DiaDesign, out: *mut *mut c_char) -> DiaStatus {
    guard(|| write_string(out, design(h)?.to_string()))
}

/// The design's binary decimal as `"a/b"`.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_design_theta(h: *const DiaDesign, out: *mut *mut c_char) -> DiaStatus {
    guard(|| write_string(out, design(h)?.theta().to_string()))
}

/// Whether the design is infinite (eventually periodic).
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_design_is_periodic(h: *const DiaDesign, out: *mut bool) -> DiaStatus {
    guard(|| write_value(out, matches!(design(h)?, Design::Periodic(_))))
}

/// The bitwise conjugate as a new handle.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_design_conjugate(h: *const DiaDesign, out: *mut *mut DiaDesign) -> DiaStatus {
    guard(|| {
        let c = design(h)?.conjugate();
        write_design(out, c)
    })
}

/// Concatenation `first · second`; `first` must be finite.
///
/// # Safety
/// Both handles must be live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_design_compose(
    first: *const DiaDesign,
    second: *const DiaDesign,
    out: *mut *mut DiaDesign,
) -> DiaStatus {
    guard(|| {
        let Design::Finite(f) = design(first)? else {
            return Err(Failure(DiaStatus::Domain, "first design must be finite".into()));
        };
        let d = compose(f, design(second)?)?;
        write_design(out, d)
    })
}

/// The unimodular matrix of a finite design as `"a,b;c,d"`.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_design_matrix(h: *const DiaDesign, out: *mut *mut c_char) -> DiaStatus {
    guard(|| {
        let Design::Finite(f) = design(h)? else {
            return Err(Failure(DiaStatus::Domain, "design must be finite".into()));
        };
        write_string(out, sdm(f)?.to_string())
    })
}

/// The assembly function at a rational `theta`: `"a/b"` for dyadic input,
/// otherwise a description of the quadratic irrational.
///
/// # Safety
/// `theta` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_assembly_eval(theta: *const c_char, out: *mut *mut c_char) -> DiaStatus {
    guard(|| {
        let t: ThetaValue = input(theta, "theta")?.trim().parse()?;
        write_string(out, assembly_of_rational_theta(&t)?.to_string())
    })
}

/// The reduced design whose assembly value is `value` (`"a/b"` or `"inf"`).
///
/// # Safety
/// `value` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_assembly_inverse(value: *const c_char, out: *mut *mut DiaDesign) -> DiaStatus {
    guard(|| {
        let v: ExtRational = input(value, "value")?.trim().parse()?;
        write_design(out, Design::Finite(assembly_inverse(&v)))
    })
}

/// The periodic design whose assembly value is `sqrt(q)`.
///
/// # Safety
/// `q` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_sqrt_design(q: *const c_char, out: *mut *mut DiaDesign) -> DiaStatus {
    guard(|| {
        let v: ExtRational = input(q, "q")?.trim().parse()?;
        write_design(out, Design::Periodic(periodic_design_of_sqrt(&v)?))
    })
}

/// Purity class of the assembly value at `theta`.
///
/// # Safety
/// `theta` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_purity(theta: *const c_char, out: *mut DiaPurity) -> DiaStatus {
    guard(|| {
        let t: ThetaValue = input(theta, "theta")?.trim().parse()?;
        let p = match purity_test(&t) {
            Purity::Rational => DiaPurity::Rational,
            Purity::PureQuadratic => DiaPurity::PureQuadratic,
            Purity::NonPureQuadratic => DiaPurity::NonPureQuadratic,
        };
        write_value(out, p)
    })
}

/// Derivative verdict at a rational `eta` in `(0, 1)`.
///
/// # Safety
/// `eta` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dia_derivative_verdict(eta: *const c_char, out: *mut DiaVerdict) -> DiaStatus {
    guard(|| {
        let t: ThetaValue = input(eta, "eta")?.trim().parse()?;
        let v = match derivative_at_rational(&t)? {
            Verdict::DivergesToInfinity => DiaVerdict::DivergesToInfinity,
            Verdict::ZeroIfDifferentiable => DiaVerdict::ZeroIfDifferentiable,
        };
        write_value(out, v)
    })
}
