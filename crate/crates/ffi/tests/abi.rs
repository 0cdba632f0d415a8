use std::ffi::{CStr, CString};
use std::ptr;

use monochrome_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(mono_last_error()).to_string_lossy().into_owned() }
}

#[test]
fn sharpness_round_trip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(mono_gen_sharpness(1, 0, &mut g), MonoStatus::Ok);
        assert_eq!(mono_graph_vertex_count(g), 9);
        assert_eq!(mono_graph_min_degree(g), 4);
        let mut cert = ptr::null_mut();
        let mut k = 0usize;
        assert_eq!(mono_solve_exact(g, 3, &mut cert, &mut k), MonoStatus::Unsat);
        assert!(cert.is_null());
        assert!(last_error().contains("at most 3"));
        assert_eq!(mono_solve_exact(g, 4, &mut cert, &mut k), MonoStatus::Ok);
        assert_eq!(k, 4);
        assert_eq!(mono_certificate_part_count(cert), 4);
        assert_eq!(mono_verify(g, cert), MonoStatus::Ok);

        let json = mono_certificate_to_json(cert);
        let mut back = ptr::null_mut();
        assert_eq!(mono_certificate_from_json(json, &mut back), MonoStatus::Ok);
        assert_eq!(mono_verify(g, back), MonoStatus::Ok);
        mono_string_free(json);
        mono_certificate_free(back);
        mono_certificate_free(cert);
        mono_graph_free(g);
    }
}

#[test]
fn graph_json_and_errors() {
    unsafe {
        let text = CString::new(r#"{"n": 3, "edges": [[0, 1, 0], [1, 2, 0], [0, 2, 0]]}"#).unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(mono_graph_from_json(text.as_ptr(), &mut g), MonoStatus::Ok);
        let back = mono_graph_to_json(g);
        assert_eq!(CStr::from_ptr(back).to_str().unwrap(), r#"{"n":3,"colours":["red","blue"],"edges":[[0,1,0],[0,2,0],[1,2,0]]}"#);
        mono_string_free(back);

        let bad_cert = CString::new(r#"{"parts": [{"colour": 1, "cycle": [0, 1, 2]}]}"#).unwrap();
        let mut c = ptr::null_mut();
        assert_eq!(mono_certificate_from_json(bad_cert.as_ptr(), &mut c), MonoStatus::Ok);
        assert_eq!(mono_verify(g, c), MonoStatus::InvalidCertificate);
        assert!(last_error().contains("colour"));
        mono_certificate_free(c);
        mono_graph_free(g);

        let broken = CString::new("{\"n\": 3,").unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(mono_graph_from_json(broken.as_ptr(), &mut h), MonoStatus::ParseError);
        assert!(h.is_null());
        assert_eq!(mono_graph_from_json(ptr::null(), &mut h), MonoStatus::NullPointer);
        let self_loop = CString::new(r#"{"n": 2, "edges": [[1, 1, 0]]}"#).unwrap();
        assert_eq!(mono_graph_from_json(self_loop.as_ptr(), &mut h), MonoStatus::InvalidGraph);
        assert_eq!(mono_gen_three_colour(0, &mut h), MonoStatus::InvalidArgument);
        assert_eq!(mono_verify(ptr::null(), ptr::null()), MonoStatus::NullPointer);
        assert_eq!(mono_graph_vertex_count(ptr::null()), 0);
    }
}

#[test]
fn heuristic_on_random_instance() {
    unsafe {
        let delta = CString::new("3/4").unwrap();
        let gamma = CString::new("1/48").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(mono_gen_random(30, delta.as_ptr(), 0.5, 9, &mut g), MonoStatus::Ok);
        let mut c = ptr::null_mut();
        let s = mono_solve_heuristic(g, gamma.as_ptr(), &mut c);
        if s == MonoStatus::Ok {
            assert!(mono_certificate_part_count(c) <= 3);
            assert_eq!(mono_verify(g, c), MonoStatus::Ok);
            mono_certificate_free(c);
        } else {
            assert_eq!(s, MonoStatus::HeuristicFailure);
        }
        mono_graph_free(g);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/monochrome.h")).unwrap();
    for name in [
        "MonoGraph",
        "MonoCertificate",
        "MONO_STATUS_OK",
        "MONO_STATUS_UNSAT",
        "mono_graph_from_json",
        "mono_solve_exact",
        "mono_solve_heuristic",
        "mono_verify",
        "mono_last_error",
        "mono_string_free",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
