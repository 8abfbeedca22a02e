use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use spgraph_ffi::*;

const SQUARE: &str = r#"{"vertices":["a","x","y","b"],"edges":[["a","x"],["a","y"],["x","b"],["y","b"]]}"#;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    spg_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = spg_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

unsafe fn instance(graph: &str, json: bool, a: &str, b: &str) -> Result<*mut SpgInstance, SpgStatus> {
    let mut out = ptr::null_mut();
    match spg_instance_parse(c(graph).as_ptr(), json, c(a).as_ptr(), c(b).as_ptr(), &mut out) {
        SpgStatus::Ok => Ok(out),
        s => Err(s),
    }
}

#[test]
fn square_round_trip() {
    unsafe {
        let inst = instance(SQUARE, true, "a", "b").unwrap();
        let mut d = 0;
        assert_eq!(spg_instance_distance(inst, &mut d), SpgStatus::Ok);
        assert_eq!(d, 2);
        let mut h = ptr::null_mut();
        assert_eq!(spg_build(inst, 1000, &mut h), SpgStatus::Ok);
        let (mut n, mut m) = (0, 0);
        assert_eq!(spg_graph_counts(h, &mut n, &mut m), SpgStatus::Ok);
        assert_eq!((n, m), (2, 1));
        let (mut u, mut w, mut i) = (9, 9, 9);
        assert_eq!(spg_graph_edge(h, 0, &mut u, &mut w, &mut i), SpgStatus::Ok);
        assert_eq!((u, w, i), (0, 1, 1));
        assert_eq!(spg_graph_edge(h, 1, &mut u, &mut w, &mut i), SpgStatus::InvalidArgument);

        let mut s = ptr::null_mut();
        assert_eq!(spg_graph_export(h, false, &mut s), SpgStatus::Ok);
        assert!(take(s).contains("\"index\":1"));
        assert_eq!(spg_graph_export(h, true, &mut s), SpgStatus::Ok);
        assert!(take(s).starts_with("graph"));

        assert_eq!(spg_check(h, c("complete_iff_same_index").as_ptr(), &mut s), SpgStatus::Ok);
        assert!(take(s).contains("\"passed\":true"));
        assert_eq!(spg_check(h, c("nope").as_ptr(), &mut s), SpgStatus::InvalidArgument);
        assert!(last_error().contains("nope"));

        spg_graph_free(h);
        spg_instance_free(inst);
    }
}

#[test]
fn edge_list_and_limits() {
    unsafe {
        let inst = instance("a x\na y\nx b\ny b\n", false, "a", "b").unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(spg_build(inst, 1, &mut h), SpgStatus::LimitExceeded);
        assert!(h.is_null());
        assert!(last_error().contains("limit"));
        spg_instance_free(inst);
    }
}

#[test]
fn error_codes() {
    unsafe {
        assert_eq!(instance("{", true, "a", "b").unwrap_err(), SpgStatus::Parse);
        assert_eq!(instance(SQUARE, true, "a", "a").unwrap_err(), SpgStatus::InvalidArgument);
        assert_eq!(instance(SQUARE, true, "a", "zz").unwrap_err(), SpgStatus::InvalidGraph);
        assert_eq!(instance("a a\n", false, "a", "b").unwrap_err(), SpgStatus::Parse);
        let mut out = ptr::null_mut();
        assert_eq!(spg_instance_parse(ptr::null(), true, ptr::null(), ptr::null(), &mut out), SpgStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(
            spg_instance_parse(bad.as_ptr() as *const c_char, true, c("a").as_ptr(), c("b").as_ptr(), &mut out),
            SpgStatus::InvalidUtf8
        );
        let mut d = 0;
        assert_eq!(spg_instance_distance(ptr::null(), &mut d), SpgStatus::NullPointer);

        let apart = instance(r#"{"vertices":["a","b"],"edges":[]}"#, true, "a", "b").unwrap();
        assert_eq!(spg_instance_distance(apart, &mut d), SpgStatus::NoGeodesic);
        let mut h = ptr::null_mut();
        assert_eq!(spg_build(apart, 10, &mut h), SpgStatus::Ok);
        let (mut n, mut m) = (9, 9);
        spg_graph_counts(h, &mut n, &mut m);
        assert_eq!((n, m), (0, 0));
        spg_graph_free(h);
        spg_instance_free(apart);
        spg_instance_free(ptr::null_mut());
        spg_string_free(ptr::null_mut());
    }
}

#[test]
fn checkers_on_built_and_hand_made_graphs() {
    unsafe {
        let k23 = r#"{"vertices":["a","b","1","2","3"],"edges":[["a","1"],["a","2"],["a","3"],["b","1"],["b","2"],["b","3"]]}"#;
        let inst = instance(k23, true, "a", "b").unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(spg_build(inst, 100, &mut h), SpgStatus::Ok);
        let mut s = ptr::null_mut();
        for name in ["p3_c4", "no_induced_c5", "claw_in_c4", "odd_cycle_c4", "girth5_classification"] {
            assert_eq!(spg_check(h, c(name).as_ptr(), &mut s), SpgStatus::Ok, "{name}");
            take(s);
        }
        spg_graph_free(h);
        spg_instance_free(inst);

        let c5 = r#"{"geodesics":[],"edges":[{"u":0,"w":1,"index":1},{"u":1,"w":2,"index":1},{"u":2,"w":3,"index":1},{"u":3,"w":4,"index":1},{"u":0,"w":4,"index":1}]}"#;
        let mut raw = ptr::null_mut();
        assert_eq!(spg_graph_parse(c(c5).as_ptr(), &mut raw), SpgStatus::Ok);
        assert_eq!(spg_check(raw, c("no_induced_c5").as_ptr(), &mut s), SpgStatus::CheckFailed);
        assert!(take(s).contains("\"vertices\":[0,1,2,3,4]"));
        spg_graph_free(raw);
        assert_eq!(spg_graph_parse(c("[").as_ptr(), &mut raw), SpgStatus::Parse);
    }
}

#[test]
fn grid_phi() {
    unsafe {
        let dims = [3usize, 3, 2];
        let mut s = ptr::null_mut();
        assert_eq!(spg_grid_phi(dims.as_ptr(), 3, c("32121231").as_ptr(), &mut s), SpgStatus::Ok);
        assert_eq!(take(s), "(3,2,1,3,1,3,0)");
        assert_eq!(spg_grid_phi(dims.as_ptr(), 3, c("3212123").as_ptr(), &mut s), SpgStatus::InvalidArgument);
        assert_eq!(spg_grid_phi(ptr::null(), 3, c("1").as_ptr(), &mut s), SpgStatus::NullPointer);
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/spgraph.h")).unwrap();
    let source = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 10);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct SpgGraph SpgGraph;"));
    assert!(header.contains("SPG_STATUS_CHECK_FAILED = 8"));
}
