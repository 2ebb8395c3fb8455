use std::ffi::{c_char, CStr, CString};
use std::ptr;

use jacquet_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    jq_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(jq_last_error()).to_string_lossy().into_owned()
}

unsafe fn default_config() -> *mut JqConfig {
    let mut cfg = ptr::null_mut();
    assert_eq!(jq_config_default(&mut cfg), JqStatus::Ok);
    cfg
}

#[test]
fn cuspidal_jacquet_of_a_product() {
    unsafe {
        let cfg = default_config();
        let (mut a, mut b, mut ab) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(jq_elem_parse(cfg, c("d(rho,0,1)").as_ptr(), &mut a), JqStatus::Ok);
        assert_eq!(jq_elem_parse(cfg, c("c(rho:1)").as_ptr(), &mut b), JqStatus::Ok);
        assert_eq!(jq_elem_product(a, b, &mut ab), JqStatus::Ok);

        let mut s = ptr::null_mut();
        assert_eq!(jq_cuspidal_jacquet(ab, &mut s), JqStatus::Ok);
        assert_eq!(take(s), "1 (1,0,1)\n2 (1,1,0)\n");

        assert_eq!(jq_elem_to_string(ab, &mut s), JqStatus::Ok);
        assert_eq!(take(s), "+ d(rho,0,1) x d(rho,1,1)");

        assert_eq!(jq_mstar(a, &mut s), JqStatus::Ok);
        assert_eq!(take(s).lines().count(), 3);

        for h in [a, b, ab] {
            jq_elem_free(h);
        }
        jq_config_free(cfg);
    }
}

#[test]
fn to_string_round_trips() {
    unsafe {
        let cfg = default_config();
        let (mut x, mut y) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(jq_elem_parse(cfg, c("2*z(rho:0) + d(rho,-1,1)").as_ptr(), &mut x), JqStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(jq_elem_to_string(x, &mut s), JqStatus::Ok);
        let text = take(s);
        assert_eq!(jq_elem_parse(cfg, c(&text).as_ptr(), &mut y), JqStatus::Ok);
        let mut eq = 0;
        assert_eq!(jq_elem_equal(x, y, &mut eq), JqStatus::Ok);
        assert_eq!(eq, 1);
        jq_elem_free(x);
        jq_elem_free(y);
        jq_config_free(cfg);
    }
}

#[test]
fn structure_queries() {
    unsafe {
        let cfg = default_config();
        let mut s = ptr::null_mut();
        assert_eq!(jq_decide(cfg, c("rho,0,0").as_ptr(), c("rho,1,1").as_ptr(), &mut s), JqStatus::Ok);
        assert_eq!(take(s), "length-two: L = + d(rho,0,0) x d(rho,1,1) \u{2212} d(rho,0,1); other = d(rho,0,1)");
        assert_eq!(jq_classify_si(cfg, c("rho:-1/2,rho:1/2").as_ptr(), &mut s), JqStatus::Ok);
        assert_eq!(take(s), "square-integrable: d(rho,-1/2,1/2)");
        let mut si = -1;
        assert_eq!(jq_casselman(cfg, c("rho:1/2,rho:-1/2").as_ptr(), &mut s, &mut si), JqStatus::Ok);
        assert!(take(s).contains("square_integrable: true"));
        assert_eq!(si, 1);
        jq_config_free(cfg);
    }
}

#[test]
fn verify_small_window() {
    unsafe {
        let cfg = default_config();
        let mut s = ptr::null_mut();
        let status = jq_verify(cfg, c("all").as_ptr(), c("range=-1..1,points=2,factors=2").as_ptr(), &mut s);
        assert_eq!(status, JqStatus::Ok);
        assert!(take(s).ends_with("0 failed\n"));
        assert_eq!(jq_verify(cfg, c("nonsense").as_ptr(), ptr::null(), &mut s), JqStatus::Domain);
        jq_config_free(cfg);
    }
}

#[test]
fn configuration_documents() {
    unsafe {
        let mut cfg = ptr::null_mut();
        let doc = c("[line rho]\nsize = 1\ns = 1\n[line sigma]\nsize = 2\ns = 1/2\n");
        assert_eq!(jq_config_parse(doc.as_ptr(), &mut cfg), JqStatus::Ok);
        let mut x = ptr::null_mut();
        assert_eq!(jq_elem_parse(cfg, c("c(rho:1) x c(sigma:0)").as_ptr(), &mut x), JqStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(jq_cuspidal_jacquet(x, &mut s), JqStatus::Ok);
        assert_eq!(take(s), "1 (rho:1,sigma:0)\n1 (sigma:0,rho:1)\n");
        jq_elem_free(x);
        jq_config_free(cfg);

        let mut bad = ptr::null_mut();
        assert_eq!(jq_config_parse(c("[line rho]\nsize = 0\ns = 1\n").as_ptr(), &mut bad), JqStatus::Config);
        assert!(bad.is_null());
        assert!(!last_error().is_empty());
    }
}

#[test]
fn error_codes() {
    unsafe {
        let cfg = default_config();
        let mut x = ptr::null_mut();
        assert_eq!(jq_elem_parse(cfg, c("d(rho,0,1").as_ptr(), &mut x), JqStatus::Parse);
        assert!(last_error().contains("column"));
        assert_eq!(jq_elem_parse(cfg, c("d(rho,0,1/2)").as_ptr(), &mut x), JqStatus::Domain);
        assert_eq!(jq_elem_parse(cfg, c("L(rho,0,0 , rho,2,2)").as_ptr(), &mut x), JqStatus::Domain);
        assert_eq!(jq_elem_parse(ptr::null(), c("1").as_ptr(), &mut x), JqStatus::NullPointer);
        assert_eq!(jq_elem_parse(cfg, ptr::null(), &mut x), JqStatus::NullPointer);
        assert_eq!(jq_elem_parse(cfg, c("1").as_ptr(), ptr::null_mut()), JqStatus::NullPointer);
        let invalid = [0xffu8, 0];
        assert_eq!(jq_elem_parse(cfg, invalid.as_ptr().cast(), &mut x), JqStatus::InvalidUtf8);
        assert!(x.is_null());
        jq_string_free(ptr::null_mut());
        jq_elem_free(ptr::null_mut());
        jq_config_free(cfg);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(jq_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let src = std::env::temp_dir().join(format!("jacquet-header-{}.c", std::process::id()));
    std::fs::write(
        &src,
        "#include \"jacquet.h\"\nint main(void) { JqConfig *c = 0; return jq_config_default(&c) == JQ_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let status =
        match std::process::Command::new("cc").args(["-fsyntax-only", "-Wall", "-I", include]).arg(&src).status() {
            Ok(s) => s,
            Err(_) => return,
        };
    std::fs::remove_file(&src).unwrap();
    assert!(status.success());
}
