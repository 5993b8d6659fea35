//! C interface to monrad.
//!
//! Every fallible call returns a [`MonradStatus`]; on failure the message is
//! available from [`monrad_last_error`] on the same thread. Handles are opaque
//! and must be released with their matching `_free` function. Strings handed
//! out by the library are released with [`monrad_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use monrad::asr::{asr_of_power, AsrSet, Method, PowerKind, SourceIdeal};
use monrad::depth::{depth_from_asr, Field};
use monrad::io::{parse_input, Input, InputFormat};
use monrad::polyhedra::s0_bound;
use monrad::{Error, Hypergraph};

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MonradStatus {
    Ok = 0,
    Io = 1,
    Parse = 2,
    Precondition = 3,
    Budget = 4,
    Invariant = 5,
    NullPointer = 6,
    InvalidUtf8 = 7,
    OutOfRange = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MonradPowerKind {
    Ordinary = 0,
    Symbolic = 1,
}

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MonradMethod {
    BruteForce = 0,
    Polyhedral = 1,
}

/// A monomial ideal, optionally with its primary decomposition.
pub struct MonradIdeal(SourceIdeal);

/// A computed set of associated radicals with their witnesses.
pub struct MonradAsr {
    set: AsrSet,
    rendered: Vec<(CString, CString)>,
}

pub struct MonradHypergraph(Hypergraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MonradStatus {
    match e.exit_code() {
        1 => MonradStatus::Io,
        2 => MonradStatus::Parse,
        4 => MonradStatus::Budget,
        5 => MonradStatus::Invariant,
        _ => MonradStatus::Precondition,
    }
}

struct Fail(MonradStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MonradStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MonradStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            MonradStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(MonradStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null("input string"));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail(MonradStatus::InvalidUtf8, e.to_string()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn owned(s: String) -> *mut c_char {
    CString::new(s).expect("rendered text has no nul").into_raw()
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn monrad_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn monrad_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an ideal from text (`(x1^2*x2, x3)`) or any JSON input format. A
/// hypergraph yields its cover ideal.
///
/// # Safety
/// `src` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monrad_ideal_parse(src: *const c_char, out: *mut *mut MonradIdeal) -> MonradStatus {
    guard(|| {
        let source = parse_input(text(src)?, InputFormat::Auto)?.source()?;
        put(out, Box::into_raw(Box::new(MonradIdeal(source))))
    })
}

/// # Safety
/// `ideal` must be null or come from this library, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn monrad_ideal_free(ideal: *mut MonradIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Minimal generators as text; free with [`monrad_string_free`].
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monrad_ideal_to_string(ideal: *const MonradIdeal, out: *mut *mut c_char) -> MonradStatus {
    guard(|| {
        let i = borrow(ideal, "ideal")?;
        put(out, owned(i.0.ideal().to_string()))
    })
}

/// `I^s` or `I^(s)` as a new handle.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monrad_ideal_power(
    ideal: *const MonradIdeal,
    s: u32,
    kind: MonradPowerKind,
    out: *mut *mut MonradIdeal,
) -> MonradStatus {
    guard(|| {
        let i = borrow(ideal, "ideal")?;
        let p = SourceIdeal::from_ideal(i.0.power(s, power_kind(kind))?)?;
        put(out, Box::into_raw(Box::new(MonradIdeal(p))))
    })
}

fn power_kind(k: MonradPowerKind) -> PowerKind {
    match k {
        MonradPowerKind::Ordinary => PowerKind::Ordinary,
        MonradPowerKind::Symbolic => PowerKind::Symbolic,
    }
}

/// `asr(I^s)` or `asr(I^(s))`.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monrad_asr_compute(
    ideal: *const MonradIdeal,
    s: u32,
    kind: MonradPowerKind,
    method: MonradMethod,
    out: *mut *mut MonradAsr,
) -> MonradStatus {
    guard(|| {
        let i = borrow(ideal, "ideal")?;
        let method = match method {
            MonradMethod::BruteForce => Method::BruteForce,
            MonradMethod::Polyhedral => Method::Polyhedral,
        };
        let set = asr_of_power(&i.0, s, power_kind(kind), method)?;
        let rendered = set
            .witnesses()
            .map(|w| {
                (
                    CString::new(w.radical.to_string()).expect("no nul"),
                    CString::new(w.exponent.to_string()).expect("no nul"),
                )
            })
            .collect();
        put(out, Box::into_raw(Box::new(MonradAsr { set, rendered })))
    })
}

/// # Safety
/// `asr` must be null or come from this library, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn monrad_asr_free(asr: *mut MonradAsr) {
    if !asr.is_null() {
        drop(Box::from_raw(asr));
    }
}

/// Number of members; 0 for a null handle.
///
/// # Safety
/// `asr` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn monrad_asr_len(asr: *const MonradAsr) -> usize {
    asr.as_ref().map_or(0, |a| a.rendered.len())
}

/// Member `index` in canonical order. Both strings are borrowed from the
/// handle and live as long as it does.
///
/// # Safety
/// `asr` must be a live handle; `radical` and `witness` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monrad_asr_member(
    asr: *const MonradAsr,
    index: usize,
    radical: *mut *const c_char,
    witness: *mut *const c_char,
) -> MonradStatus {
    guard(|| {
        let a = borrow(asr, "asr")?;
        let (r, w) = a.rendered.get(index).ok_or_else(|| {
            Fail(MonradStatus::OutOfRange, format!("index {index} out of range for {} members", a.rendered.len()))
        })?;
        put(radical, r.as_ptr())?;
        put(witness, w.as_ptr())
    })
}

/// Hochster depth: the minimum of `depth R/J` over the members. `prime = 0`
/// computes over the rationals, otherwise over GF(prime).
///
/// # Safety
/// `asr` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monrad_depth(asr: *const MonradAsr, prime: u64, out: *mut usize) -> MonradStatus {
    guard(|| {
        let a = borrow(asr, "asr")?;
        let field = match prime {
            0 => Field::Rational,
            p => format!("p:{p}").parse()?,
        };
        put(out, depth_from_asr(&a.set, field)?.depth)
    })
}

/// Parses `{"n": .., "edges": [[1,2], ..]}` (1-based vertices).
///
/// # Safety
/// `src` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monrad_hypergraph_parse(src: *const c_char, out: *mut *mut MonradHypergraph) -> MonradStatus {
    guard(|| {
        let Input::Hypergraph(h) = parse_input(text(src)?, InputFormat::Hypergraph)? else {
            unreachable!("hypergraph format requested")
        };
        put(out, Box::into_raw(Box::new(MonradHypergraph(h))))
    })
}

/// # Safety
/// `h` must be null or come from this library, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn monrad_hypergraph_free(h: *mut MonradHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monrad_hypergraph_is_balanced(h: *const MonradHypergraph, out: *mut bool) -> MonradStatus {
    guard(|| put(out, borrow(h, "hypergraph")?.0.is_balanced()))
}

/// The cover ideal, generated by the minimal vertex covers.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monrad_hypergraph_cover_ideal(
    h: *const MonradHypergraph,
    out: *mut *mut MonradIdeal,
) -> MonradStatus {
    guard(|| {
        let j = borrow(h, "hypergraph")?.0.cover_ideal()?;
        put(out, Box::into_raw(Box::new(MonradIdeal(SourceIdeal::from_ideal(j)?))))
    })
}

/// `⌈n · b^((n+2)/2)⌉`, the power past which symbolic asr sets are constant.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monrad_s0_bound(n: usize, bight: usize, out: *mut u64) -> MonradStatus {
    guard(|| put(out, s0_bound(n, bight)?))
}
