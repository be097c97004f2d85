//! C ABI for the kostka library: opaque polynomial handles, JSON report
//! strings, and integer error codes, so other languages can bind without
//! knowing any Rust types.
//!
//! Conventions:
//! - every function returns a status code ([`KostkaStatus`]) or a pointer
//!   that is null on failure;
//! - the last error message is kept per thread and readable through
//!   [`kostka_last_error`];
//! - strings returned by the library must be freed with
//!   [`kostka_string_free`], polynomial handles with [`kostka_poly_free`].

use kostka::gpring::rmu_decompose;
use kostka::kostka::{charge_kostka, kostka_hook, tilde_transform};
use kostka::partition::Partition;
use kostka::report;
use kostka::verify::{run_all, Level, VerifyOptions};
use kostka::{Error, QPoly};
use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

/// Status codes returned by the C API.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum KostkaStatus {
    Ok = 0,
    /// Malformed input (bad partition string, size mismatch, bad indices).
    InvalidInput = 1,
    /// A mathematical cross-check failed.
    CheckFailed = 2,
    /// A null pointer or non-UTF8 string was passed in.
    BadPointer = 3,
    /// Internal panic; this is a bug.
    Panic = 4,
}

/// Opaque handle around a Laurent polynomial in `q`.
pub struct KostkaPoly(QPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error message").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> KostkaStatus {
    match e {
        Error::InvalidPartition(_)
        | Error::SizeMismatch(..)
        | Error::LengthExceedsRank { .. }
        | Error::IndexOutOfRange { .. }
        | Error::RepeatedPoints => KostkaStatus::InvalidInput,
        _ => KostkaStatus::CheckFailed,
    }
}

/// Last error message for this thread, or null if none.  The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn kostka_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by a `kostka_*` function that
/// documents `kostka_string_free`, and must not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn kostka_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Frees a polynomial handle.
///
/// # Safety
/// `p` must come from a `kostka_*` constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn kostka_poly_free(p: *mut KostkaPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

unsafe fn parse_cstr<'a>(s: *const c_char) -> Result<&'a str, KostkaStatus> {
    if s.is_null() {
        set_error("null pointer".into());
        return Err(KostkaStatus::BadPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string is not valid UTF-8".into());
        KostkaStatus::BadPointer
    })
}

fn guard<T>(f: impl FnOnce() -> Result<T, KostkaStatus>, on_err: T) -> T {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => v,
        Ok(Err(_)) => on_err,
        Err(_) => {
            set_error("internal panic".into());
            on_err
        }
    }
}

fn poly_out(p: QPoly) -> *mut KostkaPoly {
    Box::into_raw(Box::new(KostkaPoly(p)))
}

fn string_out(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), |c| c.into_raw())
}

/// `K_{lambda,(1^N)}(q)` by the hook formula.  Returns null on error.
///
/// # Safety
/// `lambda` must be a valid NUL-terminated string like "2,1".
#[no_mangle]
pub unsafe extern "C" fn kostka_hook_poly(lambda: *const c_char) -> *mut KostkaPoly {
    guard(
        || {
            let l = parse_cstr(lambda)?;
            let lambda = Partition::from_str(l).map_err(|e| {
                set_error(e.to_string());
                status_of(&e)
            })?;
            kostka_hook(&lambda).map(poly_out).map_err(|e| {
                set_error(e.to_string());
                status_of(&e)
            })
        },
        std::ptr::null_mut(),
    )
}

/// `K_{lambda,mu}(q)` by the charge statistic.  Returns null on error.
///
/// # Safety
/// Both arguments must be valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn kostka_charge_poly(
    lambda: *const c_char,
    mu: *const c_char,
) -> *mut KostkaPoly {
    guard(
        || {
            let l = parse_cstr(lambda)?;
            let m = parse_cstr(mu)?;
            let go = || -> kostka::Result<QPoly> {
                charge_kostka(&Partition::from_str(l)?, &Partition::from_str(m)?)
            };
            go().map(poly_out).map_err(|e| {
                set_error(e.to_string());
                status_of(&e)
            })
        },
        std::ptr::null_mut(),
    )
}

/// `~K_{lambda,mu}(q)` from the graded trace decomposition of the
/// Garsia-Procesi ring `R_mu`.  Returns null on error.
///
/// # Safety
/// Both arguments must be valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn kostka_ring_tilde_poly(
    lambda: *const c_char,
    mu: *const c_char,
) -> *mut KostkaPoly {
    guard(
        || {
            let l = parse_cstr(lambda)?;
            let m = parse_cstr(mu)?;
            let go = || -> kostka::Result<QPoly> {
                let lambda = Partition::from_str(l)?;
                let mu = Partition::from_str(m)?;
                if lambda.size() != mu.size() {
                    return Err(Error::SizeMismatch(lambda.to_string(), mu.to_string()));
                }
                Ok(rmu_decompose(&mu)?.component(&lambda))
            };
            go().map(poly_out).map_err(|e| {
                set_error(e.to_string());
                status_of(&e)
            })
        },
        std::ptr::null_mut(),
    )
}

/// `~K(q) = q^{n(mu)} K(1/q)` of an existing polynomial handle.
///
/// # Safety
/// `k` must be a live polynomial handle; `mu` a valid string.
#[no_mangle]
pub unsafe extern "C" fn kostka_tilde_poly(
    k: *const KostkaPoly,
    mu: *const c_char,
) -> *mut KostkaPoly {
    guard(
        || {
            if k.is_null() {
                set_error("null polynomial handle".into());
                return Err(KostkaStatus::BadPointer);
            }
            let m = parse_cstr(mu)?;
            let go = || -> kostka::Result<QPoly> {
                tilde_transform(&(*k).0, &Partition::from_str(m)?)
            };
            go().map(poly_out).map_err(|e| {
                set_error(e.to_string());
                status_of(&e)
            })
        },
        std::ptr::null_mut(),
    )
}

/// Lowest exponent of the polynomial (0 for the zero polynomial).
///
/// # Safety
/// `p` must be a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn kostka_poly_min_exp(p: *const KostkaPoly) -> i64 {
    if p.is_null() {
        return 0;
    }
    (*p).0.min_exp().unwrap_or(0)
}

/// Highest exponent of the polynomial (0 for the zero polynomial).
///
/// # Safety
/// `p` must be a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn kostka_poly_max_exp(p: *const KostkaPoly) -> i64 {
    if p.is_null() {
        return 0;
    }
    (*p).0.max_exp().unwrap_or(0)
}

/// Coefficient of `q^e` as a decimal string; free with
/// [`kostka_string_free`].
///
/// # Safety
/// `p` must be a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn kostka_poly_coeff(p: *const KostkaPoly, e: i64) -> *mut c_char {
    if p.is_null() {
        return std::ptr::null_mut();
    }
    string_out((*p).0.coeff(e).to_string())
}

/// The polynomial as a canonical JSON map `{"exponent": "coefficient"}`;
/// free with [`kostka_string_free`].
///
/// # Safety
/// `p` must be a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn kostka_poly_to_json(p: *const KostkaPoly) -> *mut c_char {
    if p.is_null() {
        return std::ptr::null_mut();
    }
    string_out(report::canonical_json(&report::qpoly_json(&(*p).0)))
}

unsafe fn json_report_out(
    out: *mut *mut c_char,
    body: impl FnOnce() -> kostka::Result<serde_json::Value>,
) -> KostkaStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return KostkaStatus::BadPointer;
    }
    *out = std::ptr::null_mut();
    match body() {
        Ok(v) => {
            *out = string_out(report::canonical_json(&v));
            KostkaStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            status_of(&e)
        }
    }
}

/// JSON report of the Garsia-Procesi ring `R_mu` (Hilbert series, Specht
/// decomposition, filtered dimensions, checks).  On success `*out_json`
/// holds a string to be freed with [`kostka_string_free`].
///
/// # Safety
/// `mu` must be a valid NUL-terminated string; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kostka_ring_report(
    mu: *const c_char,
    out_json: *mut *mut c_char,
) -> KostkaStatus {
    guard(
        || {
            let m = parse_cstr(mu)?;
            Ok(json_report_out(out_json, || {
                let mu = Partition::from_str(m)?;
                report::ring_report(&mu, None, 0)
            }))
        },
        KostkaStatus::Panic,
    )
}

/// JSON report of the fusion product for the composition `mu` and rank `n`.
///
/// # Safety
/// `mu` must be a valid NUL-terminated string; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kostka_fusion_report(
    mu: *const c_char,
    n: c_int,
    out_json: *mut *mut c_char,
) -> KostkaStatus {
    guard(
        || {
            let m = parse_cstr(mu)?;
            Ok(json_report_out(out_json, || {
                let comp = report::parse_mu_composition(m)?;
                report::fusion_report(&comp, n as usize, None, 0)
            }))
        },
        KostkaStatus::Panic,
    )
}

/// JSON report of the reduced wedge decomposition for `N` factors, rank `n`.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kostka_wedge_report(
    n_boxes: c_int,
    n: c_int,
    out_json: *mut *mut c_char,
) -> KostkaStatus {
    guard(
        || Ok(json_report_out(out_json, || report::wedge_report(n_boxes as u32, n as usize, 0))),
        KostkaStatus::Panic,
    )
}

/// JSON report of the W-algebra character and the stabilization sweep.
///
/// # Safety
/// `mu` must be a valid NUL-terminated string; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kostka_winf_report(
    mu: *const c_char,
    n: c_int,
    depth: i64,
    m_max: c_int,
    out_json: *mut *mut c_char,
) -> KostkaStatus {
    guard(
        || {
            let m = parse_cstr(mu)?;
            Ok(json_report_out(out_json, || {
                let mu_bar = Partition::from_str(m)?;
                report::winf_report(&mu_bar, n as usize, None, depth, m_max as u32, 0)
            }))
        },
        KostkaStatus::Panic,
    )
}

/// Runs the verification suite; `level` 0 is quick, anything else full.
/// Returns `Ok` only if every criterion passes; `*out_json` always receives
/// the full report when the computation itself ran.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kostka_verify(level: c_int, out_json: *mut *mut c_char) -> KostkaStatus {
    guard(
        || {
            if out_json.is_null() {
                set_error("null output pointer".into());
                return Err(KostkaStatus::BadPointer);
            }
            let lvl = if level == 0 { Level::Quick } else { Level::Full };
            let results = run_all(lvl, VerifyOptions::default());
            let pass = results.iter().all(|r| r.pass);
            let v = report::verify_report(lvl, &results, 0);
            *out_json = string_out(report::canonical_json(&v));
            if pass {
                Ok(KostkaStatus::Ok)
            } else {
                set_error("verification suite failed".into());
                Ok(KostkaStatus::CheckFailed)
            }
        },
        KostkaStatus::Panic,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take_string(p: *mut c_char) -> String {
        assert!(!p.is_null());
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        kostka_string_free(p);
        s
    }

    #[test]
    fn charge_poly_roundtrip() {
        unsafe {
            let l = cstr("2,1");
            let m = cstr("1,1,1");
            let p = kostka_charge_poly(l.as_ptr(), m.as_ptr());
            assert!(!p.is_null());
            assert_eq!(kostka_poly_min_exp(p), 1);
            assert_eq!(kostka_poly_max_exp(p), 2);
            assert_eq!(take_string(kostka_poly_coeff(p, 1)), "1");
            assert_eq!(take_string(kostka_poly_coeff(p, 7)), "0");
            let json = take_string(kostka_poly_to_json(p));
            assert_eq!(json, r#"{"1":"1","2":"1"}"#);
            kostka_poly_free(p);
        }
    }

    #[test]
    fn hook_and_tilde() {
        unsafe {
            let l = cstr("3");
            let p = kostka_hook_poly(l.as_ptr());
            assert!(!p.is_null());
            assert_eq!(kostka_poly_min_exp(p), 3);
            let m = cstr("1,1,1");
            let t = kostka_tilde_poly(p, m.as_ptr());
            assert!(!t.is_null());
            assert_eq!(take_string(kostka_poly_to_json(t)), r#"{"0":"1"}"#);
            kostka_poly_free(p);
            kostka_poly_free(t);
        }
    }

    #[test]
    fn ring_route_matches_charge_route() {
        unsafe {
            let l = cstr("2,1");
            let m = cstr("2,1");
            let ring = kostka_ring_tilde_poly(l.as_ptr(), m.as_ptr());
            assert!(!ring.is_null());
            assert_eq!(take_string(kostka_poly_to_json(ring)), r#"{"1":"1"}"#);
            kostka_poly_free(ring);
        }
    }

    #[test]
    fn invalid_partition_sets_error() {
        unsafe {
            let l = cstr("1,2");
            let p = kostka_hook_poly(l.as_ptr());
            assert!(p.is_null());
            let err = kostka_last_error();
            assert!(!err.is_null());
            let msg = CStr::from_ptr(err).to_str().unwrap();
            assert!(msg.contains("not weakly decreasing"), "{msg}");
        }
    }

    #[test]
    fn size_mismatch_is_invalid_input() {
        unsafe {
            let l = cstr("2,1");
            let m = cstr("1,1");
            let p = kostka_charge_poly(l.as_ptr(), m.as_ptr());
            assert!(p.is_null());
        }
    }

    #[test]
    fn ring_report_json_parses() {
        unsafe {
            let mu = cstr("2,1");
            let mut out: *mut c_char = std::ptr::null_mut();
            let status = kostka_ring_report(mu.as_ptr(), &mut out);
            assert!(matches!(status, KostkaStatus::Ok));
            let json = take_string(out);
            let v: serde_json::Value = serde_json::from_str(&json).unwrap();
            assert_eq!(v["checks"]["kostka_match"], true);
            assert_eq!(v["hilbert"]["1"], "2");
        }
    }

    #[test]
    fn fusion_report_json_parses() {
        unsafe {
            let mu = cstr("1,1");
            let mut out: *mut c_char = std::ptr::null_mut();
            let status = kostka_fusion_report(mu.as_ptr(), 2, &mut out);
            assert!(matches!(status, KostkaStatus::Ok));
            let json = take_string(out);
            let v: serde_json::Value = serde_json::from_str(&json).unwrap();
            assert_eq!(v["total_dim"], 4);
            assert_eq!(v["decomposition"]["1,1"]["1"], "1");
        }
    }

    #[test]
    fn wedge_report_json_parses() {
        unsafe {
            let mut out: *mut c_char = std::ptr::null_mut();
            let status = kostka_wedge_report(2, 2, &mut out);
            assert!(matches!(status, KostkaStatus::Ok));
            let json = take_string(out);
            let v: serde_json::Value = serde_json::from_str(&json).unwrap();
            assert_eq!(v["checks"]["routes_agree"], true);
        }
    }

    #[test]
    fn null_pointers_are_rejected() {
        unsafe {
            let p = kostka_hook_poly(std::ptr::null());
            assert!(p.is_null());
            let status = kostka_ring_report(std::ptr::null(), std::ptr::null_mut());
            assert!(matches!(status, KostkaStatus::BadPointer));
        }
    }
}
