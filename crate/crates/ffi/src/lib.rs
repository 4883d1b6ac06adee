//! C ABI over `revlex-core`.
//!
//! Every fallible entry point returns an [`RvxStatus`] and writes its result
//! through an out-pointer. Handles are opaque and must be released with the
//! matching `*_free` function; strings returned to the caller are released
//! with [`rvx_string_free`]. After a non-OK status, [`rvx_last_error`] gives a
//! message for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use revlex_core::harness;
use revlex_core::poly::parse_polynomial;
use revlex_core::render::{staircase_ascii, staircase_svg};
use revlex_core::{
    buchberger, closed_form_initial_ideal, ClosedFormSpec, Domain, Error, GroebnerBasis, Ideal,
    MonomialIdeal,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RvxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Degenerate = 5,
    Mismatch = 6,
    Panic = 7,
}

/// Polynomial ideal given by generators.
pub struct RvxIdeal(Ideal);

/// Reduced grevlex Gröbner basis.
pub struct RvxGroebner(GroebnerBasis);

/// Monomial ideal stored by its minimal generators.
pub struct RvxMonomialIdeal(MonomialIdeal);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> RvxStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => RvxStatus::Parse,
        Error::Degenerate(_) => RvxStatus::Degenerate,
        Error::Mismatch(_) => RvxStatus::Mismatch,
        _ => RvxStatus::InvalidArgument,
    }
}

struct Fail(RvxStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> RvxStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => RvxStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            RvxStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(RvxStatus::NullPointer, format!("null pointer: {what}"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(RvxStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|e| Fail(RvxStatus::InvalidArgument, e.to_string()))?;
    write_out(out, c.into_raw())
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message for the most recent failure on this thread, or NULL.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rvx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn rvx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an ideal file: a `ring <k> vars over <domain>` header followed by
/// one generator per line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_ideal_parse(
    text: *const c_char,
    out: *mut *mut RvxIdeal,
) -> RvxStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let ideal = Ideal::parse(text)?;
        write_out(out, boxed(RvxIdeal(ideal)))
    })
}

/// # Safety
/// `ideal` must be NULL or a handle from [`rvx_ideal_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rvx_ideal_free(ideal: *mut RvxIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_groebner_basis(
    ideal: *const RvxIdeal,
    out: *mut *mut RvxGroebner,
) -> RvxStatus {
    guard(|| {
        let ideal = handle(ideal, "ideal")?;
        let gb = buchberger(&ideal.0)?;
        write_out(out, boxed(RvxGroebner(gb)))
    })
}

/// # Safety
/// `gb` must be NULL or a handle from [`rvx_groebner_basis`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rvx_groebner_free(gb: *mut RvxGroebner) {
    if !gb.is_null() {
        drop(Box::from_raw(gb));
    }
}

/// # Safety
/// `gb` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_groebner_len(gb: *const RvxGroebner, out: *mut usize) -> RvxStatus {
    guard(|| write_out(out, handle(gb, "gb")?.0.len()))
}

/// Basis in ideal-file form, sorted by ascending leading monomial.
///
/// # Safety
/// `gb` must be a live handle and `out` a valid pointer. Free the result
/// with [`rvx_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rvx_groebner_to_string(
    gb: *const RvxGroebner,
    out: *mut *mut c_char,
) -> RvxStatus {
    guard(|| {
        let gb = &handle(gb, "gb")?.0;
        let text =
            revlex_core::poly::text::format_ideal_text(gb.domain(), gb.nvars(), gb.elements());
        write_string(out, text)
    })
}

/// Ideal membership of one polynomial written in the basis ring.
///
/// # Safety
/// `gb` must be a live handle, `poly` a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_groebner_contains(
    gb: *const RvxGroebner,
    poly: *const c_char,
    out: *mut bool,
) -> RvxStatus {
    guard(|| {
        let gb = &handle(gb, "gb")?.0;
        let f = parse_polynomial(read_str(poly, "poly")?, gb.domain(), gb.nvars())?;
        write_out(out, gb.contains(&f)?)
    })
}

/// # Safety
/// `gb` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_groebner_initial_ideal(
    gb: *const RvxGroebner,
    out: *mut *mut RvxMonomialIdeal,
) -> RvxStatus {
    guard(|| {
        let j = handle(gb, "gb")?.0.initial_ideal();
        write_out(out, boxed(RvxMonomialIdeal(j)))
    })
}

/// Parses `{"nvars": k, "generators": [[e1, .., ek], ..]}`; the generators
/// are minimalized.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_monomial_ideal_from_json(
    json: *const c_char,
    out: *mut *mut RvxMonomialIdeal,
) -> RvxStatus {
    guard(|| {
        let j: MonomialIdeal =
            serde_json::from_str(read_str(json, "json")?).map_err(Error::from)?;
        write_out(out, boxed(RvxMonomialIdeal(j)))
    })
}

/// Initial ideal of two generic binary forms of degrees `n <= m`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_closed_form_initial_ideal(
    n: u32,
    m: u32,
    out: *mut *mut RvxMonomialIdeal,
) -> RvxStatus {
    guard(|| {
        let spec = ClosedFormSpec::new(n, m)?;
        write_out(
            out,
            boxed(RvxMonomialIdeal(closed_form_initial_ideal(spec))),
        )
    })
}

/// Samples a generic pair over the default prime field and reports whether
/// the closed-form basis agrees with Buchberger. A disagreement is reported
/// through `agreement`, not the status.
///
/// # Safety
/// `agreement` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_closed_form_check(
    n: u32,
    m: u32,
    seed: u64,
    agreement: *mut bool,
) -> RvxStatus {
    guard(|| {
        let spec = ClosedFormSpec::new(n, m)?;
        let run = harness::run_closed_form(
            spec,
            Domain::default_prime(),
            seed,
            harness::DEFAULT_MAX_RESAMPLES,
        )?;
        write_out(agreement, run.report.agreement)
    })
}

/// # Safety
/// `ideal` must be NULL or a live monomial ideal handle.
#[no_mangle]
pub unsafe extern "C" fn rvx_monomial_ideal_free(ideal: *mut RvxMonomialIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer. Free the result
/// with [`rvx_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rvx_monomial_ideal_to_json(
    ideal: *const RvxMonomialIdeal,
    out: *mut *mut c_char,
) -> RvxStatus {
    guard(|| {
        let s = serde_json::to_string(&handle(ideal, "ideal")?.0).map_err(Error::from)?;
        write_string(out, s)
    })
}

/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_monomial_ideal_num_generators(
    ideal: *const RvxMonomialIdeal,
    out: *mut usize,
) -> RvxStatus {
    guard(|| write_out(out, handle(ideal, "ideal")?.0.generators().len()))
}

/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_monomial_ideal_is_weakly_revlex(
    ideal: *const RvxMonomialIdeal,
    out: *mut bool,
) -> RvxStatus {
    guard(|| write_out(out, handle(ideal, "ideal")?.0.is_weakly_revlex().holds))
}

/// Revlex test. Artinian ideals are decided exactly; otherwise monomials of
/// degree up to `degree_bound` are examined.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_monomial_ideal_is_revlex(
    ideal: *const RvxMonomialIdeal,
    degree_bound: u32,
    out: *mut bool,
) -> RvxStatus {
    guard(|| write_out(out, handle(ideal, "ideal")?.0.is_revlex(degree_bound).holds))
}

/// Number of standard monomials of an Artinian ideal.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rvx_monomial_ideal_colength(
    ideal: *const RvxMonomialIdeal,
    out: *mut u64,
) -> RvxStatus {
    guard(|| write_out(out, handle(ideal, "ideal")?.0.standard_monomial_count()?))
}

/// # Safety
/// `ideal` must be a live two-variable handle and `out` a valid pointer.
/// Free the result with [`rvx_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rvx_staircase_ascii(
    ideal: *const RvxMonomialIdeal,
    out: *mut *mut c_char,
) -> RvxStatus {
    guard(|| {
        let s = handle(ideal, "ideal")?.0.staircase()?;
        write_string(out, staircase_ascii(&s))
    })
}

/// # Safety
/// `ideal` must be a live two-variable handle and `out` a valid pointer.
/// Free the result with [`rvx_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rvx_staircase_svg(
    ideal: *const RvxMonomialIdeal,
    out: *mut *mut c_char,
) -> RvxStatus {
    guard(|| {
        let s = handle(ideal, "ideal")?.0.staircase()?;
        write_string(out, staircase_svg(&s))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_arguments_are_reported() {
        let mut out: *mut RvxIdeal = ptr::null_mut();
        let st = unsafe { rvx_ideal_parse(ptr::null(), &mut out) };
        assert_eq!(st, RvxStatus::NullPointer);
        let msg = unsafe { CStr::from_ptr(rvx_last_error()) }
            .to_str()
            .unwrap();
        assert!(msg.contains("text"));
        assert!(out.is_null());
    }

    #[test]
    fn closed_form_round_trip() {
        let mut j: *mut RvxMonomialIdeal = ptr::null_mut();
        assert_eq!(
            unsafe { rvx_closed_form_initial_ideal(2, 3, &mut j) },
            RvxStatus::Ok
        );
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(
            unsafe { rvx_monomial_ideal_to_json(j, &mut s) },
            RvxStatus::Ok
        );
        let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
        assert_eq!(text, r#"{"nvars":2,"generators":[[0,4],[1,2],[2,0]]}"#);
        unsafe {
            rvx_string_free(s);
            rvx_monomial_ideal_free(j);
        }
    }

    #[test]
    fn bad_spec_is_invalid_argument() {
        let mut j: *mut RvxMonomialIdeal = ptr::null_mut();
        assert_eq!(
            unsafe { rvx_closed_form_initial_ideal(5, 3, &mut j) },
            RvxStatus::InvalidArgument
        );
        assert!(j.is_null());
    }
}
