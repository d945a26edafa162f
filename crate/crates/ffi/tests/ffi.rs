use std::ffi::{CStr, CString};
use std::ptr;

use lgvx_ffi::*;

const WORKED: &str = include_str!("../../core/fixtures/worked_example.graph");

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    lgvx_string_free(s);
    out
}

#[test]
fn worked_example_through_handles() {
    unsafe {
        let src = CString::new(WORKED).unwrap();
        let mut inst = ptr::null_mut();
        assert_eq!(lgvx_instance_parse(src.as_ptr(), &mut inst), LgvxStatus::Ok);
        assert_eq!(lgvx_instance_num_pairs(inst), 2);
        let mut out = ptr::null_mut();
        assert_eq!(lgvx_instance_count(inst, &mut out), LgvxStatus::Ok);
        assert_eq!(take(out), "40*x^5*y^5");
        assert_eq!(lgvx_instance_count_brute(inst, &mut out), LgvxStatus::Ok);
        assert_eq!(take(out), "40*x^5*y^5");
        let vals = [2i64, 1];
        assert_eq!(lgvx_instance_count_at(inst, vals.as_ptr(), 2, &mut out), LgvxStatus::Ok);
        assert_eq!(take(out), "1280");
        assert_eq!(
            lgvx_instance_count_at(inst, vals.as_ptr(), 1, &mut out),
            LgvxStatus::InvalidInput
        );
        lgvx_instance_free(inst);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let src = CString::new("variables x\nvertex a 0 0\nvertex a 1 1\n").unwrap();
        let mut inst = ptr::null_mut();
        assert_eq!(lgvx_instance_parse(src.as_ptr(), &mut inst), LgvxStatus::Parse);
        assert!(inst.is_null());
        let msg = CStr::from_ptr(lgvx_last_error()).to_str().unwrap();
        assert!(msg.contains("line 3"), "{msg}");
        assert_eq!(lgvx_instance_parse(ptr::null(), &mut inst), LgvxStatus::NullPointer);
        let mut out = ptr::null_mut();
        assert_eq!(lgvx_instance_count(ptr::null(), &mut out), LgvxStatus::NullPointer);
        assert_eq!(lgvx_aztec_formula(0, 1, 1, &mut out), LgvxStatus::InvalidInput);
        lgvx_instance_free(ptr::null_mut());
        lgvx_string_free(ptr::null_mut());
    }
}

#[test]
fn regions_and_formula() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(lgvx_aztec_formula(1, 1, 1, &mut out), LgvxStatus::Ok);
        assert_eq!(take(out), "36");
        let src = CString::new("aztec 2 2 full\n").unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(lgvx_region_parse(src.as_ptr(), &mut r), LgvxStatus::Ok);
        assert_eq!(lgvx_region_count(r, LgvxTileMethod::Brute, &mut out), LgvxStatus::Ok);
        assert_eq!(take(out), "8");
        assert_eq!(
            lgvx_region_count(r, LgvxTileMethod::Paths, &mut out),
            LgvxStatus::InvalidInput
        );
        lgvx_region_free(r);
        let src = CString::new("aztec 3 5\n").unwrap();
        assert_eq!(lgvx_region_parse(src.as_ptr(), &mut r), LgvxStatus::Ok);
        assert_eq!(lgvx_region_count(r, LgvxTileMethod::Paths, &mut out), LgvxStatus::Ok);
        assert_eq!(take(out), "1");
        lgvx_region_free(r);
    }
}
