//! C ABI for divisor-lab.
//!
//! Rings and ideals cross the boundary as opaque handles. Every fallible call
//! returns a [`DlStatus`] and writes its result through an out pointer; the
//! message of the last failure on the calling thread is available from
//! [`dl_last_error`]. Strings handed out by the library are freed with
//! [`dl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use divisor_lab::corpus::RingSpec;
use divisor_lab::divisorial::{divisorial, divisorial_via_ext};
use divisor_lab::ideals::{grade, AmbientRing, Ideal};
use divisor_lab::poly::EngineConfig;
use divisor_lab::semigroup::{FracIdeal, NumericalSemigroup};
use divisor_lab::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Unparsable ring, polynomial or ideal text, or an invalid argument.
    InputError = 3,
    /// A Groebner basis computation hit the pair budget.
    BudgetExceeded = 4,
    /// The operation is undefined for the arguments (unit ideal, quotient ring, ...).
    MathError = 5,
    Panic = 6,
}

/// Ambient ring: a polynomial ring, possibly modulo relations.
pub struct DlRing {
    ring: Arc<AmbientRing>,
}

/// Ideal of a [`DlRing`]. Keeps its ring alive on its own.
pub struct DlIdeal {
    ideal: Ideal,
}

/// Which computation of `D(I)` to run.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DlRoute {
    /// `(x : (x : I))` for a maximal regular sequence `x` in `I`.
    Colon = 0,
    /// `Ann(Ext^g(R/I, R))` from a free resolution.
    Ext = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

enum Failure {
    Null,
    Utf8,
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DlStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DlStatus::Ok,
        Ok(Err(Failure::Null)) => {
            set_last_error("null pointer argument");
            DlStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_last_error("string argument is not valid UTF-8");
            DlStatus::InvalidUtf8
        }
        Ok(Err(Failure::Engine(e))) => {
            set_last_error(&e.to_string());
            match e {
                Error::BudgetExceeded(_) => DlStatus::BudgetExceeded,
                e if e.is_input_error() => DlStatus::InputError,
                _ => DlStatus::MathError,
            }
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| payload.downcast_ref::<&str>().copied())
                .unwrap_or("panic");
            set_last_error(&format!("internal panic: {msg}"));
            DlStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null);
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8)
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null);
    }
    out.write(value);
    Ok(())
}

fn boxed_ideal(ideal: Ideal) -> *mut DlIdeal {
    Box::into_raw(Box::new(DlIdeal { ideal }))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failed call on this thread, or NULL after a success.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn dl_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library and not have been freed already. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn dl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a ring from text such as `QQ[x,y]` or `GF(2)[x,y,z]/(x^2 + y^3)`.
/// `order` is `grevlex` or `lex`, NULL meaning `grevlex`. `pair_budget` of 0
/// keeps the default Groebner pair budget.
///
/// # Safety
/// `spec` and `order` (if non-NULL) must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dl_ring_new(
    spec: *const c_char,
    order: *const c_char,
    pair_budget: usize,
    out: *mut *mut DlRing,
) -> DlStatus {
    guard(|| {
        let spec = text(spec)?;
        let order = if order.is_null() { "grevlex" } else { text(order)? };
        let mut config = EngineConfig::default();
        if pair_budget > 0 {
            config.pair_budget = pair_budget;
        }
        let ring = RingSpec::from_text(spec, order)?.build(config)?;
        put(out, Box::into_raw(Box::new(DlRing { ring })))
    })
}

/// # Safety
/// `ring` must come from [`dl_ring_new`] and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn dl_ring_free(ring: *mut DlRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Parses a comma-separated generator list, e.g. `x^2, x*y`.
///
/// # Safety
/// `ring` must be a live handle, `gens` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_ideal_parse(ring: *const DlRing, gens: *const c_char, out: *mut *mut DlIdeal) -> DlStatus {
    guard(|| {
        let ring = handle(ring)?;
        let ideal = ring.ring.parse_ideal(text(gens)?)?;
        put(out, boxed_ideal(ideal))
    })
}

/// # Safety
/// `ideal` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn dl_ideal_free(ideal: *mut DlIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Renders the reduced Groebner basis as `(g1, g2, ...)`. Free the result with [`dl_string_free`].
///
/// # Safety
/// `ideal` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_ideal_to_string(ideal: *const DlIdeal, out: *mut *mut c_char) -> DlStatus {
    guard(|| {
        let ideal = &handle(ideal)?.ideal;
        // Display falls back to the raw generators when the basis fails; surface the error instead.
        ideal.gb()?;
        put(out, owned_string(ideal.to_string()))
    })
}

/// `D(I)` by the chosen route; the grade is written to `grade_out` when it is non-NULL.
///
/// # Safety
/// `ideal` must be a live handle, `out` writable, `grade_out` writable or NULL.
#[no_mangle]
pub unsafe extern "C" fn dl_ideal_divisorial(
    ideal: *const DlIdeal,
    route: DlRoute,
    out: *mut *mut DlIdeal,
    grade_out: *mut usize,
) -> DlStatus {
    guard(|| {
        let ideal = handle(ideal)?;
        let res = match route {
            DlRoute::Colon => divisorial(&ideal.ideal)?,
            DlRoute::Ext => divisorial_via_ext(&ideal.ideal)?,
        };
        if !grade_out.is_null() {
            grade_out.write(res.grade);
        }
        put(out, boxed_ideal(res.d))
    })
}

/// `(I : J)`.
///
/// # Safety
/// Both handles must be live ideals of the same ring; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_ideal_colon(i: *const DlIdeal, j: *const DlIdeal, out: *mut *mut DlIdeal) -> DlStatus {
    guard(|| {
        let c = handle(i)?.ideal.colon(&handle(j)?.ideal)?;
        put(out, boxed_ideal(c))
    })
}

/// `I ∩ J`.
///
/// # Safety
/// Both handles must be live ideals of the same ring; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_ideal_intersect(i: *const DlIdeal, j: *const DlIdeal, out: *mut *mut DlIdeal) -> DlStatus {
    guard(|| {
        let c = handle(i)?.ideal.intersect(&handle(j)?.ideal)?;
        put(out, boxed_ideal(c))
    })
}

/// `(I : J^∞)`; a NULL `j` saturates by the ideal of the variables.
///
/// # Safety
/// `i` must be a live handle, `j` a live handle of the same ring or NULL, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_ideal_saturate(i: *const DlIdeal, j: *const DlIdeal, out: *mut *mut DlIdeal) -> DlStatus {
    guard(|| {
        let i = &handle(i)?.ideal;
        let by = match j.as_ref() {
            Some(j) => j.ideal.clone(),
            None => i.ring().maximal_ideal(),
        };
        let (s, _) = i.saturate(&by)?;
        put(out, boxed_ideal(s))
    })
}

/// Length of a maximal regular sequence in `I`.
///
/// # Safety
/// `ideal` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_ideal_grade(ideal: *const DlIdeal, out: *mut usize) -> DlStatus {
    guard(|| {
        let g = grade(&handle(ideal)?.ideal)?;
        put(out, g)
    })
}

/// Ideal equality, compared through reduced Groebner bases.
///
/// # Safety
/// Both handles must be live ideals of the same ring; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_ideal_equals(i: *const DlIdeal, j: *const DlIdeal, out: *mut bool) -> DlStatus {
    guard(|| {
        let eq = handle(i)?.ideal.equals(&handle(j)?.ideal)?;
        put(out, eq)
    })
}

/// Membership of the polynomial written in `poly`.
///
/// # Safety
/// `ideal` must be a live handle, `poly` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_ideal_contains(ideal: *const DlIdeal, poly: *const c_char, out: *mut bool) -> DlStatus {
    guard(|| {
        let ideal = &handle(ideal)?.ideal;
        let f = ideal.ring().parse_poly(text(poly)?)?;
        put(out, ideal.contains(&f)?)
    })
}

/// `D(I)` for the semigroup ideal generated by `exps` in the numerical
/// semigroup generated by `gens`, rendered like `{10,11,12} ∪ [14,∞)`.
/// Free the result with [`dl_string_free`].
///
/// # Safety
/// `gens` must point to `n_gens` values, `exps` to `n_exps` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_semigroup_divisorial(
    gens: *const u64,
    n_gens: usize,
    exps: *const i64,
    n_exps: usize,
    out: *mut *mut c_char,
) -> DlStatus {
    guard(|| {
        if gens.is_null() || exps.is_null() {
            return Err(Failure::Null);
        }
        let s = NumericalSemigroup::new(std::slice::from_raw_parts(gens, n_gens))?;
        let i = FracIdeal::new(&s, std::slice::from_raw_parts(exps, n_exps))?;
        put(out, owned_string(i.divisorial().to_string()))
    })
}
