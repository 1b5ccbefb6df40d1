//! C interface to twistlab.
//!
//! Handles are opaque and owned by the caller once returned; release them with
//! the matching `_free`. Strings returned through `char **` are NUL-terminated,
//! heap-allocated and released with `twistlab_string_free`. Every fallible call
//! returns a `TwistlabStatus`; the message for the last failure on the calling
//! thread is available from `twistlab_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twistlab::braid::{equal_in_group, normal_form, parse_word, BraidWord};
use twistlab::families::{family_script, FamilyId};
use twistlab::moves::{verify_script, Certificate, MoveScript};
use twistlab::seifert::{lt_signature, ratio, seifert_matrix, sigma_hat};
use twistlab::torus::{sigma_hat_torus, TorusParams};
use twistlab::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistlabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotAKnot = 4,
    OnJump = 5,
    InvalidArgument = 6,
    Script = 7,
    Precision = 8,
    Panic = 9,
}

/// A braid word on a fixed number of strands.
pub struct TwistlabWord {
    inner: BraidWord,
}

/// The result of replaying a move script.
pub struct TwistlabCertificate {
    inner: Certificate,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(TwistlabStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let status = match &e {
            Error::UnknownCharacter { .. }
            | Error::IndexOutOfRange { .. }
            | Error::TooFewStrands { .. }
            | Error::Bracket(_) => TwistlabStatus::Parse,
            Error::NotAKnot { .. } => TwistlabStatus::NotAKnot,
            Error::OnJump(_) => TwistlabStatus::OnJump,
            Error::PrecisionExhausted { .. } => TwistlabStatus::Precision,
            Error::Script(_) | Error::Move(_) | Error::Template(_) => TwistlabStatus::Script,
            _ => TwistlabStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(TwistlabStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, recording any failure or panic for `twistlab_last_error`.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> TwistlabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TwistlabStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TwistlabStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(TwistlabStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn word<'a>(p: *const TwistlabWord) -> Result<&'a BraidWord, Fail> {
    p.as_ref().map(|w| &w.inner).ok_or_else(|| null("word"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("no interior NUL in generated text")
        .into_raw()
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn twistlab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn twistlab_status_name(status: TwistlabStatus) -> *const c_char {
    let s: &'static CStr = match status {
        TwistlabStatus::Ok => c"ok",
        TwistlabStatus::NullPointer => c"null pointer",
        TwistlabStatus::InvalidUtf8 => c"invalid UTF-8",
        TwistlabStatus::Parse => c"parse error",
        TwistlabStatus::NotAKnot => c"closure is not a knot",
        TwistlabStatus::OnJump => c"point is a jump of the signature",
        TwistlabStatus::InvalidArgument => c"invalid argument",
        TwistlabStatus::Script => c"script error",
        TwistlabStatus::Precision => c"precision exhausted",
        TwistlabStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn twistlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `a..y`/`A..Y` text (with `^k`) or a signed list like `[1,-2]`.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_word_parse(
    text: *const c_char,
    strands: usize,
    out: *mut *mut TwistlabWord,
) -> TwistlabStatus {
    guard(|| {
        let w = parse_word(c_str(text, "text")?, strands)?;
        write(out, Box::into_raw(Box::new(TwistlabWord { inner: w })))
    })
}

/// # Safety
/// `w` must be null or a handle from `twistlab_word_parse`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn twistlab_word_free(w: *mut TwistlabWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_word_length(
    w: *const TwistlabWord,
    out: *mut usize,
) -> TwistlabStatus {
    guard(|| write(out, word(w)?.len()))
}

/// Number of components of the closure.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_word_components(
    w: *const TwistlabWord,
    out: *mut usize,
) -> TwistlabStatus {
    guard(|| write(out, word(w)?.closure_components()))
}

/// Garside normal form as a letter string; free with `twistlab_string_free`.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_word_normal_form(
    w: *const TwistlabWord,
    out: *mut *mut c_char,
) -> TwistlabStatus {
    guard(|| write(out, owned_string(normal_form(word(w)?).to_word().to_text())))
}

/// Whether two words are the same braid.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_word_equal(
    a: *const TwistlabWord,
    b: *const TwistlabWord,
    out: *mut bool,
) -> TwistlabStatus {
    guard(|| write(out, equal_in_group(word(a)?, word(b)?)))
}

/// Maximum of `|σ_ω|` over the circle, away from roots of the Alexander polynomial.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_word_sigma_hat(
    w: *const TwistlabWord,
    out: *mut i64,
) -> TwistlabStatus {
    guard(|| write(out, sigma_hat(word(w)?)?))
}

/// Signature at `s = num/den`, signed so that positive torus knots are positive.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_word_signature(
    w: *const TwistlabWord,
    num: i64,
    den: i64,
    out: *mut i64,
) -> TwistlabStatus {
    guard(|| {
        if den == 0 {
            return Err(Fail(
                TwistlabStatus::InvalidArgument,
                "zero denominator".into(),
            ));
        }
        let w = word(w)?;
        let components = w.closure_components();
        if components != 1 {
            return Err(Error::NotAKnot { components }.into());
        }
        let v = lt_signature(&seifert_matrix(w)?, &ratio(num, den))?;
        write(out, v.positive_knot_sign())
    })
}

/// `σ̂` of the torus knot `T(p,q)` from its jump formula.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_torus_sigma_hat(p: i64, q: i64, out: *mut i64) -> TwistlabStatus {
    guard(|| write(out, sigma_hat_torus(&TorusParams::new(p, q)?)))
}

/// Script JSON for a named family member; free with `twistlab_string_free`.
///
/// # Safety
/// `family` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_family_script(
    family: *const c_char,
    param: usize,
    out: *mut *mut c_char,
) -> TwistlabStatus {
    guard(|| {
        let id: FamilyId = c_str(family, "family")?.parse()?;
        write(out, owned_string(family_script(id, param)?.to_json()))
    })
}

/// Replays a script given as JSON. A script that fails its claim still yields
/// a certificate; only unreadable scripts return an error.
///
/// # Safety
/// `json` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_verify_script(
    json: *const c_char,
    out: *mut *mut TwistlabCertificate,
) -> TwistlabStatus {
    guard(|| {
        let script = MoveScript::from_json(c_str(json, "json")?)?;
        let cert = verify_script(&script)?;
        write(
            out,
            Box::into_raw(Box::new(TwistlabCertificate { inner: cert })),
        )
    })
}

/// # Safety
/// `c` must be null or a handle from `twistlab_verify_script`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn twistlab_certificate_free(c: *mut TwistlabCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

unsafe fn cert<'a>(p: *const TwistlabCertificate) -> Result<&'a Certificate, Fail> {
    p.as_ref()
        .map(|c| &c.inner)
        .ok_or_else(|| null("certificate"))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_certificate_verified(
    c: *const TwistlabCertificate,
    out: *mut bool,
) -> TwistlabStatus {
    guard(|| write(out, cert(c)?.verified))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_certificate_cost(
    c: *const TwistlabCertificate,
    out: *mut u32,
) -> TwistlabStatus {
    guard(|| write(out, cert(c)?.total_cost))
}

/// Full certificate as JSON; free with `twistlab_string_free`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twistlab_certificate_json(
    c: *const TwistlabCertificate,
    out: *mut *mut c_char,
) -> TwistlabStatus {
    guard(|| write(out, owned_string(cert(c)?.to_json())))
}
