//! C interface to `gauss-core`.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free` function. Strings returned through `char **`
//! out-parameters must be released with [`gauss_string_free`]. Every function
//! returns a [`GaussStatus`]; on failure [`gauss_last_error_message`] holds a
//! description for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gauss_core::algebra::integers::format_rational;
use gauss_core::algebra::{ExponentVector, RationalFunction};
use gauss_core::expr::parse_expression;
use gauss_core::gauss::{check_gauss, GaussCheckConfig};
use gauss_core::series::{expand, expand_at_vertex, TruncatedLaurentSeries};
use gauss_core::theory::{classify_linear, minton_decide};
use gauss_core::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    MathError = 4,
    InsufficientTruncation = 5,
    Panic = 6,
}

/// A rational function in normal form.
pub struct GaussRationalFunction(RationalFunction);

/// A truncated Laurent expansion.
pub struct GaussSeries(TruncatedLaurentSeries);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GaussStatus {
    match e {
        Error::Syntax { .. } | Error::UnknownVariable { .. } | Error::NonIntegerExponent { .. } => GaussStatus::ParseError,
        Error::OutOfTruncation(_) => GaussStatus::InsufficientTruncation,
        _ => GaussStatus::MathError,
    }
}

fn fail(e: Error) -> GaussStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn guard(f: impl FnOnce() -> GaussStatus) -> GaussStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            GaussStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, GaussStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(GaussStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        GaussStatus::InvalidUtf8
    })
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> GaussStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            GaussStatus::Ok
        }
        Err(_) => {
            set_error("output contained NUL");
            GaussStatus::MathError
        }
    }
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! non_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            set_error("null pointer argument");
            return GaussStatus::NullPointer;
        }
    };
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gauss_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gauss_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `num / den`. `nvars = 0` uses the largest variable index present.
///
/// # Safety
/// `num` and `den` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gauss_rf_parse(
    num: *const c_char,
    den: *const c_char,
    nvars: usize,
    out: *mut *mut GaussRationalFunction,
) -> GaussStatus {
    guard(|| {
        non_null!(out);
        let num = try_status!(read_str(num));
        let den = try_status!(read_str(den));
        let build = || -> gauss_core::Result<RationalFunction> {
            let (a, b) = (parse_expression(num)?, parse_expression(den)?);
            let n = if nvars == 0 { a.nvars().max(b.nvars()) } else { nvars };
            a.evaluate(n)?.try_div(&b.evaluate(n)?)
        };
        match build() {
            Ok(f) => {
                *out = Box::into_raw(Box::new(GaussRationalFunction(f)));
                GaussStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `f` must be NULL or a handle from [`gauss_rf_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gauss_rf_free(f: *mut GaussRationalFunction) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of variables, or 0 for NULL.
///
/// # Safety
/// `f` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gauss_rf_nvars(f: *const GaussRationalFunction) -> usize {
    f.as_ref().map_or(0, |f| f.0.nvars())
}

/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gauss_rf_to_string(f: *const GaussRationalFunction, out: *mut *mut c_char) -> GaussStatus {
    guard(|| {
        non_null!(f, out);
        write_string(out, (*f).0.to_string())
    })
}

/// Expands at `vertex` (length `vertex_len`), or at the canonical vertex
/// when `vertex` is NULL, up to α-degree `bound`.
///
/// # Safety
/// `f` must be a live handle, `vertex` NULL or readable for `vertex_len`
/// values, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gauss_expand(
    f: *const GaussRationalFunction,
    vertex: *const i64,
    vertex_len: usize,
    bound: i64,
    out: *mut *mut GaussSeries,
) -> GaussStatus {
    guard(|| {
        non_null!(f, out);
        let f = &(*f).0;
        let s = if vertex.is_null() {
            expand(f, bound)
        } else {
            let v = ExponentVector::new(std::slice::from_raw_parts(vertex, vertex_len).to_vec());
            expand_at_vertex(f, &v, bound)
        };
        match s {
            Ok(s) => {
                *out = Box::into_raw(Box::new(GaussSeries(s)));
                GaussStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `s` must be NULL or a handle from [`gauss_expand`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gauss_series_free(s: *mut GaussSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Coefficient at exponent `k` as `"num/den"`.
///
/// # Safety
/// `s` must be a live handle, `k` readable for `len` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gauss_series_coefficient(
    s: *const GaussSeries,
    k: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> GaussStatus {
    guard(|| {
        non_null!(s, k, out);
        let k = ExponentVector::new(std::slice::from_raw_parts(k, len).to_vec());
        if k.len() != (*s).0.nvars() {
            return fail(Error::ExponentLength { expected: (*s).0.nvars(), got: k.to_vec() });
        }
        match (*s).0.coeff(&k) {
            Ok(c) => write_string(out, format_rational(&c)),
            Err(e) => fail(e),
        }
    })
}

/// All stored coefficients, one `k1 … kn : num/den` line each.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gauss_series_dump(s: *const GaussSeries, out: *mut *mut c_char) -> GaussStatus {
    guard(|| {
        non_null!(s, out);
        write_string(out, (*s).0.dump())
    })
}

/// Checks Gauss congruences at the canonical vertex and writes the JSON
/// report. Returns `InsufficientTruncation` (with the report still written)
/// when some prime could not be tested at this bound.
///
/// # Safety
/// `f` must be a live handle, `primes` readable for `nprimes` values and
/// `json_out` writable.
#[no_mangle]
pub unsafe extern "C" fn gauss_check(
    f: *const GaussRationalFunction,
    primes: *const u64,
    nprimes: usize,
    r_max: u32,
    strength: u32,
    bound: i64,
    json_out: *mut *mut c_char,
) -> GaussStatus {
    guard(|| {
        non_null!(f, primes, json_out);
        let f = &(*f).0;
        let cfg = GaussCheckConfig::new(std::slice::from_raw_parts(primes, nprimes).to_vec(), r_max, strength);
        match check_gauss(f, &f.canonical_vertex(), &cfg, bound) {
            Ok(report) => {
                let st = write_string(json_out, report.to_json().to_string());
                if st == GaussStatus::Ok && report.any_insufficient() {
                    set_error("some primes need a larger truncation bound");
                    return GaussStatus::InsufficientTruncation;
                }
                st
            }
            Err(e) => fail(e),
        }
    })
}

/// Decides a univariate function and writes the verdict as JSON.
///
/// # Safety
/// `f` must be a live handle and `json_out` writable.
#[no_mangle]
pub unsafe extern "C" fn gauss_minton(f: *const GaussRationalFunction, json_out: *mut *mut c_char) -> GaussStatus {
    guard(|| {
        non_null!(f, json_out);
        match minton_decide(&(*f).0) {
            Ok(v) => write_string(json_out, serde_json::to_string(&v).expect("serializable")),
            Err(e) => fail(e),
        }
    })
}

/// Decides a function whose denominator is linear in every variable.
///
/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gauss_classify_linear(f: *const GaussRationalFunction, out: *mut bool) -> GaussStatus {
    guard(|| {
        non_null!(f, out);
        let f = &(*f).0;
        match classify_linear(f.numerator(), f.denominator()) {
            Ok(v) => {
                *out = v;
                GaussStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}
