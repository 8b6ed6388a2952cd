use std::ffi::{CStr, CString};
use std::ptr;

use schurweyl_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { sw_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sw_last_error()) }.to_str().unwrap().to_owned()
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn version_and_count() {
    let v = unsafe { CStr::from_ptr(sw_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
    let mut out = 0u64;
    assert_eq!(unsafe { sw_diagram_count(4, &mut out) }, SwStatus::Ok);
    assert_eq!(out, 105);
    assert_eq!(unsafe { sw_diagram_count(4, ptr::null_mut()) }, SwStatus::NullPointer);
    assert!(last_error().contains("null"));
}

#[test]
fn e_squared_closes_a_loop() {
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { sw_diagram_generator(1, 1, 3, &mut e) }, SwStatus::Ok);
    let mut sq = ptr::null_mut();
    let mut loops = 0u32;
    assert_eq!(unsafe { sw_diagram_compose(e, e, &mut sq, &mut loops) }, SwStatus::Ok);
    assert_eq!(loops, 1);
    let mut a = ptr::null_mut();
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { sw_diagram_to_json(e, &mut a) }, SwStatus::Ok);
    assert_eq!(unsafe { sw_diagram_to_json(sq, &mut b) }, SwStatus::Ok);
    let (a, b) = (take_string(a), take_string(b));
    assert_eq!(a, b);
    let mut back = ptr::null_mut();
    let json = c(&a);
    assert_eq!(unsafe { sw_diagram_from_json(json.as_ptr(), &mut back) }, SwStatus::Ok);
    unsafe {
        sw_diagram_free(back);
        sw_diagram_free(sq);
        sw_diagram_free(e);
    }
}

#[test]
fn bad_inputs_report_codes() {
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { sw_diagram_generator(1, 3, 3, &mut d) }, SwStatus::OutOfRange);
    assert!(d.is_null());
    assert_eq!(unsafe { sw_diagram_generator(7, 1, 3, &mut d) }, SwStatus::OutOfRange);
    let json = c("[1, 2");
    assert_eq!(unsafe { sw_diagram_from_json(json.as_ptr(), &mut d) }, SwStatus::Parse);
    assert!(!last_error().is_empty());
    let mut e = ptr::null_mut();
    let (f, w) = (c("fp:4"), c("s1"));
    assert_eq!(unsafe { sw_element_from_word(f.as_ptr(), 2, 1, w.as_ptr(), &mut e) }, SwStatus::InvalidField);
    let bytes = [0xffu8, 0];
    assert_eq!(
        unsafe { sw_element_from_word(bytes.as_ptr().cast(), 2, 1, w.as_ptr(), &mut e) },
        SwStatus::InvalidUtf8
    );
}

#[test]
fn element_arithmetic() {
    let q = c("q");
    let (w1, w2) = (c("e1"), c("e1 e1"));
    let (mut a, mut b, mut sum, mut prod) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(sw_element_from_word(q.as_ptr(), 2, -3, w1.as_ptr(), &mut a), SwStatus::Ok);
        assert_eq!(sw_element_from_word(q.as_ptr(), 2, -3, w2.as_ptr(), &mut b), SwStatus::Ok);
        assert_eq!(sw_element_add(a, b, &mut sum), SwStatus::Ok);
        assert_eq!(sw_element_multiply(a, a, &mut prod), SwStatus::Ok);
    }
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sw_element_to_json(sum, &mut s) }, SwStatus::Ok);
    let sum_json: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(sum_json[0][1], "-2/1");
    assert_eq!(unsafe { sw_element_to_json(prod, &mut s) }, SwStatus::Ok);
    let prod_json: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(prod_json[0][1], "-3/1");

    let f3 = c("fp:3");
    let mut other = ptr::null_mut();
    let mut bad = ptr::null_mut();
    unsafe {
        assert_eq!(sw_element_from_word(f3.as_ptr(), 2, -3, w1.as_ptr(), &mut other), SwStatus::Ok);
        assert_eq!(sw_element_add(a, other, &mut bad), SwStatus::InvalidField);
        for h in [a, b, sum, prod, other] {
            sw_element_free(h);
        }
    }
}

#[test]
fn duality_through_the_boundary() {
    let q = c("q");
    let mut r = 0u64;
    assert_eq!(unsafe { sw_phi_rank(q.as_ptr(), 2, 3, &mut r) }, SwStatus::Ok);
    assert_eq!(r, 14);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sw_duality_report(q.as_ptr(), 2, 3, 5000, &mut s) }, SwStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["dim_commutant"], 14);
    assert_eq!(v["kernel_dim"], 1);
    assert_eq!(unsafe { sw_duality_report(q.as_ptr(), 3, 3, 5000, &mut s) }, SwStatus::Guard);
}

#[test]
fn verify_runs_a_suite() {
    let args = c("schur --m 1 --n 2 --field q");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sw_verify(args.as_ptr(), &mut s) }, SwStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["suite"], "schur");
    let bad = c("brauer --n 9");
    assert_ne!(unsafe { sw_verify(bad.as_ptr(), &mut s) }, SwStatus::Ok);
    assert!(s.is_null());
}

#[test]
fn c_program_links_against_the_header() {
    use std::path::PathBuf;
    use std::process::Command;

    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // test binaries live in target/<profile>/deps
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libschurweyl_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: static library or C compiler unavailable");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "[2,1,4,3]");
}
