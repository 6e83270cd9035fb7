use std::ffi::{CStr, CString};
use std::ptr;

use fano_toric_ffi::*;

fn last_error() -> String {
    let p = ft_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn construct_and_analyze() {
    let spec = CString::new("product(simplex:2,hexagon)").unwrap();
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(ft_polytope_construct(spec.as_ptr(), &mut p), FtStatus::Ok);
        assert_eq!(ft_polytope_dim(p), 4);
        assert_eq!(ft_polytope_vertex_count(p), 9);
        let mut valid = false;
        assert_eq!(ft_polytope_validate(p, &mut valid), FtStatus::Ok);
        assert!(valid);

        let mut r = ptr::null_mut();
        assert_eq!(ft_analyze(p, &mut r), FtStatus::Ok);
        assert_eq!(ft_report_picard_rank(r), 5);
        assert!(ft_report_is_valid(r));
        assert_eq!(ft_report_minimal_component_count(r), 4);
        assert_eq!(ft_report_theorem_violations(r), 0);

        let mut json = ptr::null_mut();
        assert_eq!(ft_report_to_json(r, &mut json), FtStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        ft_string_free(json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["picard_rank"], 5);
        assert_eq!(v["name"], "product(simplex:2,hexagon)");

        ft_report_free(r);
        ft_polytope_free(p);
    }
}

#[test]
fn from_vertices_and_invalid() {
    let name = CString::new("bad").unwrap();
    let coords = [2i64, 0, 0, 1, -1, -1];
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(
            ft_polytope_from_vertices(name.as_ptr(), 2, coords.as_ptr(), 3, &mut p),
            FtStatus::Ok
        );
        let mut valid = true;
        assert_eq!(ft_polytope_validate(p, &mut valid), FtStatus::Ok);
        assert!(!valid);
        assert!(last_error().contains("not primitive"));

        let mut r = ptr::null_mut();
        assert_eq!(ft_analyze(p, &mut r), FtStatus::Ok);
        assert!(!ft_report_is_valid(r));
        assert_eq!(ft_report_minimal_component_count(r), 0);
        ft_report_free(r);
        ft_polytope_free(p);
    }
}

#[test]
fn parse_list() {
    let text = CString::new(
        "polytope a\ndim 1\nv 1\nv -1\nend\npolytope b\ndim 2\nv 1 0\nv 0 1\nv -1 -1\nend\n",
    )
    .unwrap();
    let mut list = ptr::null_mut();
    unsafe {
        assert_eq!(
            ft_polytope_list_parse(text.as_ptr(), &mut list),
            FtStatus::Ok
        );
        assert_eq!(ft_polytope_list_len(list), 2);
        let mut p = ptr::null_mut();
        assert_eq!(ft_polytope_list_get(list, 1, &mut p), FtStatus::Ok);
        assert_eq!(ft_polytope_dim(p), 2);
        ft_polytope_free(p);
        assert_eq!(
            ft_polytope_list_get(list, 2, &mut p),
            FtStatus::InvalidArgument
        );
        ft_polytope_list_free(list);
    }
}

#[test]
fn error_codes() {
    let mut p = ptr::null_mut();
    let mut list = ptr::null_mut();
    unsafe {
        let bad_spec = CString::new("cube").unwrap();
        assert_eq!(
            ft_polytope_construct(bad_spec.as_ptr(), &mut p),
            FtStatus::SpecError
        );
        assert!(last_error().contains("cube"));

        let bad_text = CString::new("polytope x\ndim 2\nv 1\nend\n").unwrap();
        assert_eq!(
            ft_polytope_list_parse(bad_text.as_ptr(), &mut list),
            FtStatus::ParseError
        );

        assert_eq!(
            ft_polytope_construct(ptr::null(), &mut p),
            FtStatus::NullPointer
        );
        assert_eq!(
            ft_analyze(ptr::null(), ptr::null_mut()),
            FtStatus::NullPointer
        );

        let name = CString::new("x").unwrap();
        let coords = [1i64];
        assert_eq!(
            ft_polytope_from_vertices(name.as_ptr(), 0, coords.as_ptr(), 1, &mut p),
            FtStatus::InvalidArgument
        );

        let ok = CString::new("hexagon").unwrap();
        assert_eq!(ft_polytope_construct(ok.as_ptr(), &mut p), FtStatus::Ok);
        assert!(ft_last_error_message().is_null());
        ft_polytope_free(p);

        assert_eq!(ft_polytope_dim(ptr::null()), 0);
        ft_polytope_free(ptr::null_mut());
        ft_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_api() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/fano_toric.h"))
            .unwrap();
    for f in [
        "ft_polytope_from_vertices",
        "ft_polytope_construct",
        "ft_polytope_list_parse",
        "ft_analyze",
        "ft_report_to_json",
        "ft_string_free",
        "ft_last_error_message",
        "typedef struct FtPolytope FtPolytope;",
        "FT_STATUS_PARSE_ERROR = 3",
    ] {
        assert!(header.contains(f), "{f}");
    }
}
