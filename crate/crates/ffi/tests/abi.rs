use std::ffi::{CStr, CString};
use std::ptr;

use sqfree_lab_ffi::*;

const SIMPLY: &str = "vertices: 6\n1 2 3\n1 4 5\n3 4 6\n";
const TORUS: &str = "vertices: 7\n\
    1 2 4\n2 3 5\n3 4 6\n4 5 7\n1 5 6\n2 6 7\n1 3 7\n\
    1 3 4\n2 4 5\n3 5 6\n4 6 7\n1 5 7\n1 2 6\n2 3 7\n";

fn parse(text: &str) -> *mut SqfComplex {
    let text = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sqf_complex_parse(text.as_ptr(), &mut out) }, SqfStatus::Ok);
    assert!(!out.is_null());
    out
}

fn last_error() -> String {
    let p = sqf_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn complex_queries() {
    let c = parse(SIMPLY);
    unsafe {
        let mut n = 0;
        assert_eq!(sqf_complex_vertex_count(c, &mut n), SqfStatus::Ok);
        assert_eq!(n, 6);
        let (mut ccm, mut witness) = (false, 7);
        assert_eq!(sqf_complex_is_ccm(c, 0, &mut ccm, &mut witness), SqfStatus::Ok);
        assert!(ccm);
        assert_eq!(witness, -1);
        let mut cm = true;
        assert_eq!(sqf_complex_is_cohen_macaulay(c, 0, &mut cm), SqfStatus::Ok);
        assert!(!cm);
        let mut components = 0;
        assert_eq!(sqf_complex_dual_graph_components(c, &mut components), SqfStatus::Ok);
        assert_eq!(components, 3);
        let mut table = ptr::null_mut();
        assert_eq!(sqf_lyubeznik_table(c, 0, &mut table), SqfStatus::Ok);
        let (mut d, mut l23, mut l33, mut trivial) = (0, 9, 0, true);
        assert_eq!(sqf_lyubeznik_table_dimension(table, &mut d), SqfStatus::Ok);
        assert_eq!(sqf_lyubeznik_table_get(table, 2, 3, &mut l23), SqfStatus::Ok);
        assert_eq!(sqf_lyubeznik_table_get(table, 3, 3, &mut l33), SqfStatus::Ok);
        assert_eq!(sqf_lyubeznik_table_is_trivial(table, &mut trivial), SqfStatus::Ok);
        assert_eq!((d, l23, l33, trivial), (3, 0, 3, false));
        assert_eq!(sqf_lyubeznik_table_get(table, 4, 0, &mut l23), SqfStatus::InvalidArgument);
        sqf_lyubeznik_table_free(table);
        sqf_complex_free(c);
    }
}

#[test]
fn torus_over_two_fields() {
    let c = parse(TORUS);
    unsafe {
        let mut dims = [0usize; 4];
        let mut len = 0;
        assert_eq!(sqf_complex_homology(c, 0, dims.as_mut_ptr(), dims.len(), &mut len), SqfStatus::Ok);
        assert_eq!((len, dims), (4, [0, 0, 2, 1]));
        assert_eq!(sqf_complex_homology(c, 2, dims.as_mut_ptr(), dims.len(), &mut len), SqfStatus::Ok);
        assert_eq!(dims, [0, 0, 2, 1]);
        let mut b = false;
        assert_eq!(sqf_complex_is_buchsbaum(c, 0, &mut b), SqfStatus::Ok);
        assert!(b);
        let (mut ccm, mut witness) = (true, -1);
        assert_eq!(sqf_complex_is_ccm(c, 0, &mut ccm, &mut witness), SqfStatus::Ok);
        assert!(!ccm);
        assert!(witness >= 0);
        sqf_complex_free(c);
    }
}

#[test]
fn small_buffer_reports_needed_length() {
    let c = parse(TORUS);
    unsafe {
        let mut dims = [0usize; 2];
        let mut len = 0;
        assert_eq!(sqf_complex_homology(c, 0, dims.as_mut_ptr(), 2, &mut len), SqfStatus::BufferTooSmall);
        assert_eq!(len, 4);
        assert_eq!(dims, [0, 0]);
        assert!(last_error().contains('4'));
        assert_eq!(sqf_complex_homology(c, 0, ptr::null_mut(), 0, &mut len), SqfStatus::BufferTooSmall);
        sqf_complex_free(c);
    }
}

#[test]
fn errors_and_null_pointers() {
    unsafe {
        let mut out = ptr::null_mut();
        let bad = CString::new("vertices: 2\n1 3\n").unwrap();
        assert_eq!(sqf_complex_parse(bad.as_ptr(), &mut out), SqfStatus::Parse);
        assert!(out.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(sqf_complex_parse(ptr::null(), &mut out), SqfStatus::NullPointer);
        let good = CString::new(SIMPLY).unwrap();
        assert_eq!(sqf_complex_parse(good.as_ptr(), ptr::null_mut()), SqfStatus::NullPointer);
        let mut n = 0;
        assert_eq!(sqf_complex_vertex_count(ptr::null(), &mut n), SqfStatus::NullPointer);
        let c = parse(SIMPLY);
        let mut b = false;
        assert_eq!(sqf_complex_is_cohen_macaulay(c, 4, &mut b), SqfStatus::InvalidArgument);
        assert!(last_error().contains('4'));
        assert_eq!(sqf_complex_is_cohen_macaulay(c, 0, ptr::null_mut()), SqfStatus::NullPointer);
        sqf_complex_free(c);
        sqf_complex_free(ptr::null_mut());
        sqf_lyubeznik_table_free(ptr::null_mut());
        sqf_ideal_free(ptr::null_mut());
        sqf_string_free(ptr::null_mut());
        let void = parse("vertices: 3\n");
        let mut table = ptr::null_mut();
        assert_eq!(sqf_lyubeznik_table(void, 0, &mut table), SqfStatus::Precondition);
        assert!(table.is_null());
        sqf_complex_free(void);
    }
}

#[test]
fn initial_ideals_as_json() {
    let text = CString::new("vars: 2\nchar: 3\nx1 + x2\nx1 + 4*x2\n").unwrap();
    unsafe {
        let mut ideal = ptr::null_mut();
        assert_eq!(sqf_ideal_parse(text.as_ptr(), &mut ideal), SqfStatus::Ok);
        let json = |characteristic: u32, order: SqfOrder| {
            let mut s = ptr::null_mut();
            assert_eq!(sqf_ideal_initial_ideal_json(ideal, characteristic, order, &mut s), SqfStatus::Ok);
            let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
            sqf_string_free(s);
            owned
        };
        assert_eq!(json(SQF_CHAR_FROM_INPUT, SqfOrder::DegRevLex), r#"["x1"]"#);
        assert_eq!(json(0, SqfOrder::Lex), r#"["x1","x2"]"#);
        assert_eq!(json(5, SqfOrder::DegRevLex), r#"["x1","x2"]"#);
        sqf_ideal_free(ideal);
    }
}

#[test]
fn version_is_the_crate_version() {
    let v = unsafe { CStr::from_ptr(sqf_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sqfree_lab.h")).unwrap();
    let source = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 19, "{exports:?}");
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    for item in ["SQF_STATUS_BUFFER_TOO_SMALL", "SQF_ORDER_LEX", "typedef struct SqfComplex SqfComplex", "SQF_CHAR_FROM_INPUT"] {
        assert!(header.contains(item), "{item} missing from header");
    }
}
