use std::ffi::{c_char, CStr, CString};
use std::ptr;

use compshuffle_ffi::*;

fn path(s: &str) -> *mut CsPath {
    let text = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cs_path_parse(text.as_ptr(), &mut out) }, CsStatus::Ok);
    assert!(!out.is_null());
    out
}

fn take_string(s: *mut c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { cs_string_free(s) };
    owned
}

fn last_error() -> String {
    let p = cs_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn running_example_stats_and_zeta() {
    let p = path("0,0,1,2,2,3,0,1");
    let (mut area, mut dinv, mut bounce) = (0, 0, 0);
    assert_eq!(unsafe { cs_path_stats(p, &mut area, &mut dinv, &mut bounce) }, CsStatus::Ok);
    assert_eq!((area, dinv), (9, 8));

    let mut z = ptr::null_mut();
    assert_eq!(unsafe { cs_path_zeta(p, &mut z) }, CsStatus::Ok);
    let (mut za, mut zb) = (0, 0);
    assert_eq!(unsafe { cs_path_stats(z, &mut za, ptr::null_mut(), &mut zb) }, CsStatus::Ok);
    assert_eq!((za, zb), (dinv, area));

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { cs_path_to_string(p, &mut s) }, CsStatus::Ok);
    assert_eq!(take_string(s), "NENNNENNEEEENNEE");
    unsafe {
        cs_path_free(z);
        cs_path_free(p);
    }
}

#[test]
fn shuffle_identity_through_handles() {
    let alpha = [1u32, 2];
    let (mut d, mut n) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { cs_d_alpha(alpha.as_ptr(), alpha.len(), &mut d) }, CsStatus::Ok);
    assert_eq!(unsafe { cs_nabla_c(alpha.as_ptr(), alpha.len(), &mut n) }, CsStatus::Ok);
    let mut equal = false;
    assert_eq!(unsafe { cs_symfunc_equal(d, n, &mut equal) }, CsStatus::Ok);
    assert!(equal);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { cs_symfunc_to_json(d, &mut json) }, CsStatus::Ok);
    let text = CString::new(take_string(json)).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { cs_symfunc_from_json(text.as_ptr(), &mut back) }, CsStatus::Ok);
    assert_eq!(unsafe { cs_symfunc_equal(d, back, &mut equal) }, CsStatus::Ok);
    assert!(equal);

    let mut pass = false;
    assert_eq!(unsafe { cs_verify_shuffle(3, &mut pass) }, CsStatus::Ok);
    assert!(pass);
    unsafe {
        cs_symfunc_free(d);
        cs_symfunc_free(n);
        cs_symfunc_free(back);
    }
}

#[test]
fn macdonald_and_nabla_handles() {
    let mu = [1u32, 2];
    let (mut h, mut nh) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { cs_macdonald_h(mu.as_ptr(), 2, &mut h) }, CsStatus::Ok);
    assert_eq!(unsafe { cs_nabla(h, &mut nh) }, CsStatus::Ok);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { cs_symfunc_to_json(nh, &mut json) }, CsStatus::Ok);
    let nabla_json: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(nabla_json["basis"], "s");
    let mut chi = ptr::null_mut();
    let p = path("NNEENE");
    assert_eq!(unsafe { cs_chi(p, &mut chi) }, CsStatus::Ok);
    let mut equal = true;
    assert_eq!(unsafe { cs_symfunc_equal(h, chi, &mut equal) }, CsStatus::Ok);
    assert!(!equal);
    unsafe {
        cs_symfunc_free(h);
        cs_symfunc_free(nh);
        cs_symfunc_free(chi);
        cs_path_free(p);
    }
}

#[test]
fn errors_are_codes_with_messages() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cs_path_parse(ptr::null(), &mut out) }, CsStatus::NullPointer);
    assert!(last_error().contains("text"));

    let bad = CString::new("ENNE").unwrap();
    assert_eq!(unsafe { cs_path_parse(bad.as_ptr(), &mut out) }, CsStatus::InvalidInput);
    assert!(out.is_null());

    let invalid = [0xffu8, 0];
    assert_eq!(unsafe { cs_path_parse(invalid.as_ptr().cast(), &mut out) }, CsStatus::InvalidUtf8);

    let zero = [2u32, 0];
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { cs_d_alpha(zero.as_ptr(), 2, &mut f) }, CsStatus::InvalidInput);
    assert_eq!(unsafe { cs_macdonald_h(zero.as_ptr(), 2, &mut f) }, CsStatus::InvalidInput);
    assert_eq!(unsafe { cs_d_alpha(ptr::null(), 3, &mut f) }, CsStatus::NullPointer);

    let big = [11u32];
    assert_eq!(unsafe { cs_d_alpha(big.as_ptr(), 1, &mut f) }, CsStatus::TooLarge);

    let mut pass = false;
    assert_eq!(unsafe { cs_symfunc_equal(ptr::null(), ptr::null(), &mut pass) }, CsStatus::NullPointer);
    unsafe {
        cs_path_free(ptr::null_mut());
        cs_symfunc_free(ptr::null_mut());
        cs_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/compshuffle.h")).unwrap();
    for name in [
        "typedef struct CsPath CsPath",
        "typedef struct CsSymFunc CsSymFunc",
        "CS_STATUS_OK = 0",
        "CS_STATUS_PANIC",
        "cs_last_error",
        "cs_path_parse",
        "cs_chi",
        "cs_nabla_c",
        "cs_symfunc_free",
        "cs_verify_shuffle",
    ] {
        assert!(header.contains(name), "header lacks `{name}`");
    }
}
