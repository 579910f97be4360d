use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ehrgraph_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ehr_string_free(s) };
    out
}

fn last_error() -> String {
    let p = ehr_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn parse(text: &str) -> *mut EhrHypergraph {
    let c = CString::new(text).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { ehr_hypergraph_parse(c.as_ptr(), &mut h) }, EhrStatus::Ok);
    h
}

fn coeffs(a: *const EhrAnalysis, which: EhrPoly) -> Vec<String> {
    let mut n = 0;
    assert_eq!(unsafe { ehr_analysis_coeff_count(a, which, &mut n) }, EhrStatus::Ok);
    (0..n)
        .map(|i| {
            let mut s = ptr::null_mut();
            assert_eq!(unsafe { ehr_analysis_coeff(a, which, i, &mut s) }, EhrStatus::Ok);
            take(s)
        })
        .collect()
}

#[test]
fn analyze_the_triple_system() {
    let h = parse("vertices: 6\nedge: 1 2 6\nedge: 2 3 4\nedge: 4 5 6\n");
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { ehr_analyze(h, ptr::null(), &mut a) }, EhrStatus::Ok);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ehr_analysis_series(a, &mut s) }, EhrStatus::Ok);
    assert_eq!(take(s), "(1+8x+15x^2+8x^3+x^4)/((1-x)^6(1-x^2))");
    assert_eq!(coeffs(a, EhrPoly::Numerator), ["1", "8", "15", "8", "1"]);
    assert_eq!(coeffs(a, EhrPoly::Denominator).len(), 9);

    let mut tu = EhrTu::True;
    assert_eq!(unsafe { ehr_analysis_tu(a, &mut tu) }, EhrStatus::Ok);
    assert_eq!(tu, EhrTu::False);
    let mut integral = true;
    assert_eq!(unsafe { ehr_analysis_integral(a, &mut integral) }, EhrStatus::Ok);
    assert!(!integral);
    let mut pass = false;
    assert_eq!(unsafe { ehr_analysis_all_pass(a, &mut pass) }, EhrStatus::Ok);
    assert!(pass);

    let mut n = 0;
    assert_eq!(unsafe { ehr_analysis_verdict_count(a, &mut n) }, EhrStatus::Ok);
    let mut names = Vec::new();
    for i in 0..n {
        let (mut name, mut v) = (ptr::null_mut(), EhrVerdict::Fail);
        assert_eq!(unsafe { ehr_analysis_verdict(a, i, &mut name, &mut v) }, EhrStatus::Ok);
        assert_ne!(v, EhrVerdict::Fail);
        names.push(take(name));
    }
    assert!(names.iter().any(|n| n == "reciprocity"));
    let mut v = EhrVerdict::Pass;
    assert_eq!(
        unsafe { ehr_analysis_verdict(a, n, ptr::null_mut(), &mut v) },
        EhrStatus::OutOfRange
    );

    let mut j = ptr::null_mut();
    assert_eq!(unsafe { ehr_analysis_json(a, &mut j) }, EhrStatus::Ok);
    assert!(take(j).contains("\"reciprocity_ok\":true"));

    unsafe {
        ehr_analysis_free(a);
        ehr_hypergraph_free(h);
    }
}

#[test]
fn build_generate_and_count() {
    let verts = [1usize, 2, 2, 3];
    let sizes = [2usize, 2];
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { ehr_hypergraph_new(3, verts.as_ptr(), sizes.as_ptr(), 2, &mut h) },
        EhrStatus::Ok
    );
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ehr_count_dilation(h, 2, false, &mut s) }, EhrStatus::Ok);
    assert_eq!(take(s), "14");

    let family = CString::new("path").unwrap();
    let params = [3i64];
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { ehr_hypergraph_generate(family.as_ptr(), params.as_ptr(), 1, &mut g) },
        EhrStatus::Ok
    );
    let (mut t1, mut t2) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(ehr_hypergraph_to_text(h, &mut t1), EhrStatus::Ok);
        assert_eq!(ehr_hypergraph_to_text(g, &mut t2), EhrStatus::Ok);
    }
    assert_eq!(take(t1), take(t2));

    let (mut k, mut r) = (0, 0);
    unsafe {
        assert_eq!(ehr_hypergraph_num_vertices(g, &mut k), EhrStatus::Ok);
        assert_eq!(ehr_hypergraph_num_edges(g, &mut r), EhrStatus::Ok);
    }
    assert_eq!((k, r), (3, 2));

    let mut opts = ehr_options_default();
    opts.has_n_max = true;
    opts.n_max = 3;
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { ehr_analyze(g, &opts, &mut a) }, EhrStatus::FitFailed);
    assert!(a.is_null());
    assert!(last_error().contains("not enough counts"));
    opts.has_n_max = false;
    assert_eq!(unsafe { ehr_analyze(g, &opts, &mut a) }, EhrStatus::Ok);
    let mut vol = ptr::null_mut();
    assert_eq!(unsafe { ehr_analysis_volume(a, &mut vol) }, EhrStatus::Ok);
    assert_eq!(take(vol), "1/3");

    unsafe {
        ehr_analysis_free(a);
        ehr_hypergraph_free(g);
        ehr_hypergraph_free(h);
    }
}

#[test]
fn errors_map_to_status_codes() {
    let mut h = ptr::null_mut();
    let bad = CString::new("vertices: 2\nedge: 1 3\n").unwrap();
    assert_eq!(unsafe { ehr_hypergraph_parse(bad.as_ptr(), &mut h) }, EhrStatus::Parse);
    assert!(last_error().starts_with("line 2"));
    assert!(h.is_null());

    assert_eq!(unsafe { ehr_hypergraph_parse(ptr::null(), &mut h) }, EhrStatus::NullPointer);
    let bytes = [0xffu8, 0];
    assert_eq!(
        unsafe { ehr_hypergraph_parse(bytes.as_ptr().cast(), &mut h) },
        EhrStatus::InvalidUtf8
    );

    let dup = [1usize, 2, 1, 2];
    let sizes = [2usize, 2];
    assert_eq!(
        unsafe { ehr_hypergraph_new(2, dup.as_ptr(), sizes.as_ptr(), 2, &mut h) },
        EhrStatus::Ok
    );
    unsafe { ehr_hypergraph_free(h) };
    assert_eq!(
        unsafe { ehr_hypergraph_new(0, dup.as_ptr(), sizes.as_ptr(), 2, &mut h) },
        EhrStatus::InvalidHypergraph
    );

    let uncovered = parse("vertices: 3\nedge: 1 2\n");
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { ehr_analyze(uncovered, ptr::null(), &mut a) }, EhrStatus::Uncovered);
    let mut opts = ehr_options_default();
    opts.graph_box = true;
    assert_eq!(unsafe { ehr_analyze(uncovered, &opts, &mut a) }, EhrStatus::Ok);
    unsafe { ehr_analysis_free(a) };
    opts.vertex_cap = 1;
    assert_eq!(unsafe { ehr_analyze(uncovered, &opts, &mut a) }, EhrStatus::WorkCap);
    unsafe { ehr_hypergraph_free(uncovered) };

    let fam = CString::new("moebius").unwrap();
    assert_eq!(
        unsafe { ehr_hypergraph_generate(fam.as_ptr(), ptr::null(), 0, &mut h) },
        EhrStatus::InvalidArgument
    );
    let mut n = 0;
    assert_eq!(unsafe { ehr_hypergraph_num_vertices(ptr::null(), &mut n) }, EhrStatus::NullPointer);

    let ok = parse("vertices: 1\nedge: 1\n");
    assert_eq!(unsafe { ehr_hypergraph_num_vertices(ok, ptr::null_mut()) }, EhrStatus::NullPointer);
    assert_eq!(unsafe { ehr_hypergraph_num_vertices(ok, &mut n) }, EhrStatus::Ok);
    assert!(ehr_last_error().is_null());
    unsafe {
        ehr_hypergraph_free(ok);
        ehr_hypergraph_free(ptr::null_mut());
        ehr_analysis_free(ptr::null_mut());
        ehr_string_free(ptr::null_mut());
    }
}
