use std::ffi::{CStr, CString};
use std::ptr;

use divisor_lab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    dl_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = dl_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

unsafe fn ring(spec: &str) -> *mut DlRing {
    let mut r = ptr::null_mut();
    assert_eq!(dl_ring_new(c(spec).as_ptr(), ptr::null(), 0, &mut r), DlStatus::Ok);
    r
}

unsafe fn ideal(r: *const DlRing, gens: &str) -> *mut DlIdeal {
    let mut i = ptr::null_mut();
    assert_eq!(dl_ideal_parse(r, c(gens).as_ptr(), &mut i), DlStatus::Ok);
    i
}

#[test]
fn divisorial_round_trip() {
    unsafe {
        let r = ring("QQ[x,y]");
        let i = ideal(r, "x^2, x*y");
        for route in [DlRoute::Colon, DlRoute::Ext] {
            let mut d = ptr::null_mut();
            let mut g = 0usize;
            assert_eq!(dl_ideal_divisorial(i, route, &mut d, &mut g), DlStatus::Ok);
            assert_eq!(g, 1);
            let mut s = ptr::null_mut();
            assert_eq!(dl_ideal_to_string(d, &mut s), DlStatus::Ok);
            assert_eq!(take(s), "(x)");
            dl_ideal_free(d);
        }
        assert!(dl_last_error().is_null());
        dl_ideal_free(i);
        dl_ring_free(r);
    }
}

#[test]
fn ideal_operations() {
    unsafe {
        let r = ring("QQ[x,y]");
        let (i, x) = (ideal(r, "x^2, x*y"), ideal(r, "x"));
        let mut out = ptr::null_mut();
        assert_eq!(dl_ideal_colon(i, x, &mut out), DlStatus::Ok);
        let expected = ideal(r, "x, y");
        let mut eq = false;
        assert_eq!(dl_ideal_equals(out, expected, &mut eq), DlStatus::Ok);
        assert!(eq);
        dl_ideal_free(out);

        assert_eq!(dl_ideal_intersect(x, ideal(r, "y"), &mut out), DlStatus::Ok);
        let mut s = ptr::null_mut();
        dl_ideal_to_string(out, &mut s);
        assert_eq!(take(s), "(x*y)");
        dl_ideal_free(out);

        assert_eq!(dl_ideal_saturate(i, ptr::null(), &mut out), DlStatus::Ok);
        dl_ideal_to_string(out, &mut s);
        assert_eq!(take(s), "(x)");
        dl_ideal_free(out);

        let mut member = false;
        assert_eq!(dl_ideal_contains(i, c("x^3 + x*y^5").as_ptr(), &mut member), DlStatus::Ok);
        assert!(member);
        let mut g = 0usize;
        assert_eq!(dl_ideal_grade(expected, &mut g), DlStatus::Ok);
        assert_eq!(g, 2);
        dl_ideal_free(i);
        dl_ideal_free(x);
        dl_ideal_free(expected);
        dl_ring_free(r);
    }
}

#[test]
fn ideals_outlive_their_ring_handle() {
    unsafe {
        let r = ring("GF(2)[x,y,z]");
        let i = ideal(r, "y^2 - x*z, x^3 - y*z, x^2*y - z^2");
        dl_ring_free(r);
        let mut g = 0usize;
        assert_eq!(dl_ideal_grade(i, &mut g), DlStatus::Ok);
        assert_eq!(g, 2);
        dl_ideal_free(i);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(dl_ring_new(c("QQ[x,y").as_ptr(), ptr::null(), 0, &mut r), DlStatus::InputError);
        assert!(!last_error().is_empty());
        assert_eq!(dl_ring_new(ptr::null(), ptr::null(), 0, &mut r), DlStatus::NullPointer);

        let r = ring("QQ[x,y]");
        let mut i = ptr::null_mut();
        assert_eq!(dl_ideal_parse(r, c("x + w").as_ptr(), &mut i), DlStatus::InputError);
        assert!(last_error().contains("unknown variable"));
        let bad = [0xffu8, 0];
        assert_eq!(dl_ideal_parse(r, bad.as_ptr().cast(), &mut i), DlStatus::InvalidUtf8);

        let unit = ideal(r, "1");
        let mut d = ptr::null_mut();
        assert_eq!(dl_ideal_divisorial(unit, DlRoute::Colon, &mut d, ptr::null_mut()), DlStatus::MathError);
        assert_eq!(dl_ideal_divisorial(ptr::null(), DlRoute::Colon, &mut d, ptr::null_mut()), DlStatus::NullPointer);
        dl_ideal_free(unit);
        dl_ring_free(r);

        let mut tight = ptr::null_mut();
        assert_eq!(dl_ring_new(c("QQ[x,y]").as_ptr(), c("lex").as_ptr(), 1, &mut tight), DlStatus::Ok);
        let mut i = ptr::null_mut();
        dl_ideal_parse(tight, c("x^3 - y, x*y^2 - x, y^3 - x^2").as_ptr(), &mut i);
        let mut s = ptr::null_mut();
        assert_eq!(dl_ideal_to_string(i, &mut s), DlStatus::BudgetExceeded);
        dl_ideal_free(i);
        dl_ring_free(tight);
    }
}

#[test]
fn semigroup_divisorial() {
    unsafe {
        let gens = [5u64, 6, 14];
        let exps = [10i64, 11, 12, 19];
        let mut s = ptr::null_mut();
        assert_eq!(dl_semigroup_divisorial(gens.as_ptr(), 3, exps.as_ptr(), 4, &mut s), DlStatus::Ok);
        assert_eq!(take(s), "{10,11,12} ∪ [14,∞)");
        let even = [4u64, 6];
        assert_eq!(dl_semigroup_divisorial(even.as_ptr(), 2, exps.as_ptr(), 4, &mut s), DlStatus::InputError);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(dl_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
