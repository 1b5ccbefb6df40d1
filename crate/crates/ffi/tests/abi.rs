use std::ffi::{c_char, CStr, CString};
use std::ptr;

use twistlab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    twistlab_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(twistlab_last_error())
        .to_str()
        .unwrap()
        .to_string()
}

unsafe fn parse(text: &str, strands: usize) -> *mut TwistlabWord {
    let mut w = ptr::null_mut();
    assert_eq!(
        twistlab_word_parse(c(text).as_ptr(), strands, &mut w),
        TwistlabStatus::Ok
    );
    w
}

#[test]
fn word_queries() {
    unsafe {
        let w = parse("(ab)^7", 3);
        let mut n = 0usize;
        assert_eq!(twistlab_word_length(w, &mut n), TwistlabStatus::Ok);
        assert_eq!(n, 14);
        assert_eq!(twistlab_word_components(w, &mut n), TwistlabStatus::Ok);
        assert_eq!(n, 1);
        let mut sh = 0i64;
        assert_eq!(twistlab_word_sigma_hat(w, &mut sh), TwistlabStatus::Ok);
        assert_eq!(sh, 10);
        let mut sig = 0i64;
        assert_eq!(
            twistlab_word_signature(w, 1, 2, &mut sig),
            TwistlabStatus::Ok
        );
        assert_eq!(sig, 8);
        twistlab_word_free(w);
    }
}

#[test]
fn equality_and_normal_form() {
    unsafe {
        let a = parse("ababab", 3);
        let b = parse("aabaab", 3);
        let mut eq = false;
        assert_eq!(twistlab_word_equal(a, b, &mut eq), TwistlabStatus::Ok);
        assert!(eq);
        let mut s = ptr::null_mut();
        assert_eq!(twistlab_word_normal_form(a, &mut s), TwistlabStatus::Ok);
        assert_eq!(take(s), "abaaba");
        twistlab_word_free(a);
        twistlab_word_free(b);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut w = ptr::null_mut();
        assert_eq!(
            twistlab_word_parse(c("ac").as_ptr(), 3, &mut w),
            TwistlabStatus::Parse
        );
        assert!(w.is_null());
        assert!(last_error().contains("out of range"));
        assert_eq!(
            twistlab_word_parse(ptr::null(), 3, &mut w),
            TwistlabStatus::NullPointer
        );

        let link = parse("aa", 2);
        let mut sh = 0i64;
        assert_eq!(
            twistlab_word_sigma_hat(link, &mut sh),
            TwistlabStatus::NotAKnot
        );
        twistlab_word_free(link);

        let trefoil = parse("aaa", 2);
        assert_eq!(
            twistlab_word_signature(trefoil, 1, 6, &mut sh),
            TwistlabStatus::OnJump
        );
        assert_eq!(
            twistlab_word_signature(trefoil, 1, 0, &mut sh),
            TwistlabStatus::InvalidArgument
        );
        assert_eq!(
            twistlab_word_length(trefoil, ptr::null_mut()),
            TwistlabStatus::NullPointer
        );
        twistlab_word_free(trefoil);

        assert_eq!(
            twistlab_torus_sigma_hat(4, 6, &mut sh),
            TwistlabStatus::InvalidArgument
        );
        let name = CStr::from_ptr(twistlab_status_name(TwistlabStatus::OnJump));
        assert_eq!(name.to_str().unwrap(), "point is a jump of the signature");
        twistlab_word_free(ptr::null_mut());
        twistlab_string_free(ptr::null_mut());
    }
}

#[test]
fn torus_values() {
    let mut sh = 0i64;
    unsafe {
        assert_eq!(twistlab_torus_sigma_hat(3, 7, &mut sh), TwistlabStatus::Ok);
    }
    assert_eq!(sh, 10);
}

#[test]
fn family_script_verifies() {
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(
            twistlab_family_script(c("T3_7").as_ptr(), 0, &mut json),
            TwistlabStatus::Ok
        );
        let json = take(json);
        let mut cert = ptr::null_mut();
        assert_eq!(
            twistlab_verify_script(c(&json).as_ptr(), &mut cert),
            TwistlabStatus::Ok
        );
        let (mut ok, mut cost) = (false, 0u32);
        assert_eq!(
            twistlab_certificate_verified(cert, &mut ok),
            TwistlabStatus::Ok
        );
        assert_eq!(
            twistlab_certificate_cost(cert, &mut cost),
            TwistlabStatus::Ok
        );
        assert!(ok);
        assert_eq!(cost, 5);
        let mut text = ptr::null_mut();
        assert_eq!(
            twistlab_certificate_json(cert, &mut text),
            TwistlabStatus::Ok
        );
        assert!(take(text).contains("\"verified\": true"));
        twistlab_certificate_free(cert);

        // a tighter claim still yields a certificate, just not a verified one
        let tight = json.replace("\"cost_bound\": 5", "\"cost_bound\": 4");
        assert_eq!(
            twistlab_verify_script(c(&tight).as_ptr(), &mut cert),
            TwistlabStatus::Ok
        );
        assert_eq!(
            twistlab_certificate_verified(cert, &mut ok),
            TwistlabStatus::Ok
        );
        assert!(!ok);
        twistlab_certificate_free(cert);

        assert_eq!(
            twistlab_verify_script(c("{").as_ptr(), &mut cert),
            TwistlabStatus::Script
        );
        assert_eq!(
            twistlab_family_script(c("T9").as_ptr(), 0, &mut text),
            TwistlabStatus::InvalidArgument
        );
    }
}

#[test]
fn header_is_current_and_compiles() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/twistlab.h")).unwrap();
    for name in [
        "twistlab_word_parse",
        "twistlab_verify_script",
        "TWISTLAB_STATUS_ON_JUMP",
        "typedef struct TwistlabWord TwistlabWord;",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
    let out = std::env::temp_dir().join(format!("twistlab-header-{}.c", std::process::id()));
    std::fs::write(&out, "#include \"twistlab.h\"\nint main(void) { return twistlab_status_name(TWISTLAB_STATUS_OK) == 0; }\n").unwrap();
    let status = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(format!("{dir}/include"))
        .arg(&out)
        .status();
    std::fs::remove_file(&out).unwrap();
    match status {
        Ok(s) => assert!(s.success(), "header does not compile"),
        Err(e) => eprintln!("no C compiler available, skipped syntax check: {e}"),
    }
}
