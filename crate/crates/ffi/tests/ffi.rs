use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hgpoly_ffi::*;

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    hg_string_free(s);
    out
}

#[test]
fn parse_compute_and_free() {
    unsafe {
        let text = CString::new("hypergraph n=3\n1 2 3\n").unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(hg_hypergraph_parse(text.as_ptr(), &mut h), HgStatus::Ok);
        assert_eq!(hg_hypergraph_vertex_count(h), 3);
        assert_eq!(hg_hypergraph_edge_count(h), 1);

        let mut p = ptr::null_mut();
        assert_eq!(hg_polynomial_compute(h, HG_POLY_CHI, &mut p), HgStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(hg_polynomial_to_json(p, HG_BASIS_MONOMIAL, &mut s), HgStatus::Ok);
        assert_eq!(take_string(s), r#"{"basis":"monomial","coeffs":["0","-1","0","1"]}"#);
        assert_eq!(hg_polynomial_evaluate(p, 3, &mut s), HgStatus::Ok);
        assert_eq!(take_string(s), "24");

        assert_eq!(hg_hypergraph_to_json(h, &mut s), HgStatus::Ok);
        assert!(take_string(s).contains("\"n\":3"));
        hg_polynomial_free(p);
        hg_hypergraph_free(h);
    }
}

#[test]
fn sunflower_and_path_share_chi() {
    unsafe {
        let mut sh = ptr::null_mut();
        let spec = CString::new(r#"{"kind":"sunflower","n":7,"p":2,"r":3}"#).unwrap();
        assert_eq!(hg_family_from_json(spec.as_ptr(), &mut sh), HgStatus::Ok);
        let verts: [u32; 9] = [1, 2, 3, 3, 4, 5, 5, 6, 7];
        let sizes: [usize; 3] = [3, 3, 3];
        let mut path = ptr::null_mut();
        assert_eq!(hg_hypergraph_new(7, verts.as_ptr(), sizes.as_ptr(), 3, &mut path), HgStatus::Ok);

        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(hg_polynomial_compute(sh, HG_POLY_CHI, &mut a), HgStatus::Ok);
        assert_eq!(hg_polynomial_compute(path, HG_POLY_CHI, &mut b), HgStatus::Ok);
        let mut same = false;
        assert_eq!(hg_polynomial_equal(a, b, &mut same), HgStatus::Ok);
        assert!(same);
        let mut iso = true;
        assert_eq!(hg_are_isomorphic(sh, path, &mut iso), HgStatus::Ok);
        assert!(!iso);
        let (mut da, mut db) = (0u64, 0u64);
        assert_eq!(hg_canonical_digest(sh, &mut da), HgStatus::Ok);
        assert_eq!(hg_canonical_digest(path, &mut db), HgStatus::Ok);
        assert_ne!(da, db);

        let mut ext = ptr::null_mut();
        assert_eq!(hg_hypergraph_superset_extension(sh, &mut ext), HgStatus::Ok);
        assert_eq!(hg_hypergraph_edge_count(ext), 4);
        let mut c = ptr::null_mut();
        assert_eq!(hg_polynomial_compute(ext, HG_POLY_CHI, &mut c), HgStatus::Ok);
        assert_eq!(hg_polynomial_equal(a, c, &mut same), HgStatus::Ok);
        assert!(same);

        for h in [sh, path, ext] {
            hg_hypergraph_free(h);
        }
        for p in [a, b, c] {
            hg_polynomial_free(p);
        }
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(hg_family_hypercycle(2, 3, &mut h), HgStatus::Validation);
        let msg = CStr::from_ptr(hg_last_error_message()).to_str().unwrap();
        assert!(msg.contains("invalid family"), "{msg}");
        assert!(h.is_null());

        let bad = CString::new("hypergraph n=2\n1 5\n").unwrap();
        assert_eq!(hg_hypergraph_parse(bad.as_ptr(), &mut h), HgStatus::Validation);
        assert_eq!(hg_hypergraph_parse(ptr::null(), &mut h), HgStatus::InvalidArgument);

        let mut s = ptr::null_mut();
        assert_eq!(hg_count_nonisomorphic_uniform(17, 3, &mut s), HgStatus::Feasibility);
        assert_eq!(hg_count_nonisomorphic_uniform(6, 3, &mut s), HgStatus::Ok);
        assert_eq!(take_string(s), "2136");

        assert_eq!(hg_family_sunflower(4, 1, 3, &mut h), HgStatus::Ok);
        let mut p = ptr::null_mut();
        assert_eq!(hg_polynomial_compute(h, 9, &mut p), HgStatus::InvalidArgument);
        assert_eq!(hg_polynomial_compute(h, HG_POLY_MATCH, &mut p), HgStatus::Ok);
        assert_eq!(hg_polynomial_to_json(p, 7, &mut s), HgStatus::InvalidArgument);
        hg_polynomial_free(p);
        hg_hypergraph_free(h);
        hg_hypergraph_free(ptr::null_mut());
        hg_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hgpoly.h")).unwrap();
    for f in [
        "hg_hypergraph_new",
        "hg_hypergraph_parse",
        "hg_hypergraph_free",
        "hg_family_from_json",
        "hg_polynomial_compute",
        "hg_polynomial_equal",
        "hg_canonical_digest",
        "hg_are_isomorphic",
        "hg_last_error_message",
        "hg_string_free",
        "HG_STATUS_BUDGET = 4",
    ] {
        assert!(header.contains(f), "header lacks {f}");
    }
}

/// Compile and run the C smoke test against the static library when a C
/// compiler and the archive are available.
#[test]
fn c_smoke_program() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libhgpoly_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or {} missing", lib.display());
        return;
    }
    let dir = tempfile_dir();
    let bin = dir.join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke test failed to compile");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"basis\":\"monomial\""));
}

fn tempfile_dir() -> PathBuf {
    let d = std::env::temp_dir().join(format!("hgpoly-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}
