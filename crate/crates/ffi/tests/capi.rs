use std::ffi::{c_char, CStr, CString};
use std::ptr;

use monrad_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn read(p: *const c_char) -> String {
    CStr::from_ptr(p).to_str().unwrap().to_string()
}

#[test]
fn triangle_round_trip() {
    unsafe {
        let mut ideal = ptr::null_mut();
        let src = cstr("(x1*x2, x2*x3, x1*x3)");
        assert_eq!(monrad_ideal_parse(src.as_ptr(), &mut ideal), MonradStatus::Ok);

        let mut text = ptr::null_mut();
        assert_eq!(monrad_ideal_to_string(ideal, &mut text), MonradStatus::Ok);
        assert_eq!(read(text), "(x2*x3, x1*x3, x1*x2)");
        monrad_string_free(text);

        let mut asr = ptr::null_mut();
        let st = monrad_asr_compute(ideal, 2, MonradPowerKind::Symbolic, MonradMethod::Polyhedral, &mut asr);
        assert_eq!(st, MonradStatus::Ok);
        assert_eq!(monrad_asr_len(asr), 7);
        let (mut r, mut w) = (ptr::null(), ptr::null());
        assert_eq!(monrad_asr_member(asr, 0, &mut r, &mut w), MonradStatus::Ok);
        assert_eq!(read(r), "(x1,x2)");
        assert_eq!(read(w), "x3^2");
        assert_eq!(monrad_asr_member(asr, 7, &mut r, &mut w), MonradStatus::OutOfRange);

        let mut depth = 0usize;
        assert_eq!(monrad_depth(asr, 0, &mut depth), MonradStatus::Ok);
        assert_eq!(depth, 1);
        assert_eq!(monrad_depth(asr, 2, &mut depth), MonradStatus::Ok);
        assert_eq!(depth, 1);

        let mut sq = ptr::null_mut();
        assert_eq!(monrad_ideal_power(ideal, 2, MonradPowerKind::Ordinary, &mut sq), MonradStatus::Ok);
        let mut text = ptr::null_mut();
        monrad_ideal_to_string(sq, &mut text);
        assert!(read(text).contains("x1*x2*x3"));
        monrad_string_free(text);

        monrad_asr_free(asr);
        monrad_ideal_free(sq);
        monrad_ideal_free(ideal);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut ideal = ptr::null_mut();
        let bad = cstr("(x1*, x2)");
        assert_eq!(monrad_ideal_parse(bad.as_ptr(), &mut ideal), MonradStatus::Parse);
        assert!(ideal.is_null());
        assert!(read(monrad_last_error()).contains("parse error"));

        assert_eq!(monrad_ideal_parse(ptr::null(), &mut ideal), MonradStatus::NullPointer);

        let sq = cstr("(x1^2, x2)");
        assert_eq!(monrad_ideal_parse(sq.as_ptr(), &mut ideal), MonradStatus::Ok);
        let mut asr = ptr::null_mut();
        let st = monrad_asr_compute(ideal, 1, MonradPowerKind::Symbolic, MonradMethod::Polyhedral, &mut asr);
        assert_eq!(st, MonradStatus::Precondition);
        monrad_ideal_free(ideal);

        assert_eq!(monrad_asr_len(ptr::null()), 0);
        monrad_asr_free(ptr::null_mut());
        monrad_string_free(ptr::null_mut());
    }
}

#[test]
fn hypergraphs_and_bounds() {
    unsafe {
        let mut h = ptr::null_mut();
        let tri = cstr(r#"{"n": 3, "edges": [[1,2],[2,3],[1,3]]}"#);
        assert_eq!(monrad_hypergraph_parse(tri.as_ptr(), &mut h), MonradStatus::Ok);
        let mut balanced = true;
        assert_eq!(monrad_hypergraph_is_balanced(h, &mut balanced), MonradStatus::Ok);
        assert!(!balanced);
        let mut j = ptr::null_mut();
        assert_eq!(monrad_hypergraph_cover_ideal(h, &mut j), MonradStatus::Ok);
        let mut text = ptr::null_mut();
        monrad_ideal_to_string(j, &mut text);
        assert_eq!(read(text), "(x2*x3, x1*x3, x1*x2)");
        monrad_string_free(text);
        monrad_ideal_free(j);
        monrad_hypergraph_free(h);

        let iso = cstr(r#"{"n": 3, "edges": [[1,2]]}"#);
        assert_eq!(monrad_hypergraph_parse(iso.as_ptr(), &mut h), MonradStatus::Ok);
        assert_eq!(monrad_hypergraph_cover_ideal(h, &mut j), MonradStatus::Precondition);
        monrad_hypergraph_free(h);

        let mut s0 = 0u64;
        assert_eq!(monrad_s0_bound(3, 2, &mut s0), MonradStatus::Ok);
        assert_eq!(s0, 17);
        assert_eq!(monrad_s0_bound(3, 3, &mut s0), MonradStatus::Ok);
        assert_eq!(s0, 47);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/monrad.h")).unwrap();
    for f in ["monrad_ideal_parse", "monrad_asr_member", "monrad_depth", "monrad_last_error", "monrad_s0_bound"] {
        assert!(header.contains(f), "{f} missing from header");
    }
    assert!(header.contains("typedef struct MonradIdeal MonradIdeal;"));
    assert!(header.contains("MONRAD_STATUS_OK = 0"));
}
