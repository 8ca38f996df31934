use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use vknot_ffi::*;

fn parse(code: &str) -> *mut VkDiagram {
    let c = CString::new(code).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { vk_diagram_parse(c.as_ptr(), &mut d) }, VkStatus::Ok);
    d
}

fn string(d: *const VkDiagram) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { vk_diagram_to_string(d, &mut s) }, VkStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { vk_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(vk_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn parse_print_and_invariants() {
    let d = parse("O1+ U2+ U1+ O2+");
    assert_eq!(string(d), "O1+ U2+ U1+ O2+");
    let mut canon = ptr::null_mut();
    unsafe {
        assert_eq!(vk_diagram_canonicalize(d, &mut canon), VkStatus::Ok);
        assert_eq!(string(canon), "O1+ O2+ U1+ U2+");
        let (mut j, mut j1, mut n) = (0, 0, 0);
        assert_eq!(vk_odd_writhe(d, &mut j), VkStatus::Ok);
        assert_eq!(vk_n_writhe(d, 1, &mut j1), VkStatus::Ok);
        assert_eq!(vk_diagram_chord_count(d, &mut n), VkStatus::Ok);
        assert_eq!((j, j1, n), (2, 1, 2));
        assert_eq!(vk_n_writhe(d, 0, &mut j1), VkStatus::Parameter);
        assert!(!last_error().is_empty());
        let mut json = ptr::null_mut();
        assert_eq!(vk_invariants_json(d, &mut json), VkStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap();
        assert!(text.starts_with(r#"{"n_writhes":{"1":1,"-1":1}"#), "{text}");
        vk_string_free(json);
        vk_diagram_free(canon);
        vk_diagram_free(d);
    }
}

#[test]
fn moves_and_scripts() {
    let d = parse("O1+ O2+ U1+ U2+");
    let line = CString::new("XI 1").unwrap();
    let script = CString::new("XI 1\nXI 1\n").unwrap();
    let bad = CString::new("XI 1\nR1- c=7\n").unwrap();
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(vk_apply_move(d, line.as_ptr(), &mut m), VkStatus::Ok);
        assert_eq!(string(m), "O1+ U2+ U1+ O2+");
        let mut r = ptr::null_mut();
        assert_eq!(vk_replay_script(d, script.as_ptr(), &mut r), VkStatus::Ok);
        assert_eq!(string(r), string(d));
        let mut none = ptr::null_mut();
        assert_eq!(vk_replay_script(d, bad.as_ptr(), &mut none), VkStatus::Script);
        assert!(none.is_null());
        assert!(last_error().contains("move 2"), "{}", last_error());
        for p in [m, r, d] {
            vk_diagram_free(p);
        }
    }
}

#[test]
fn classification_and_bounds() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(vk_normal_form(5, &mut g), VkStatus::Ok);
        let mut a = 0;
        assert_eq!(vk_classify(g, 2, &mut a), VkStatus::Ok);
        assert_eq!(a, 1);
        assert_eq!(vk_classify(g, 0, &mut a), VkStatus::Parameter);
        let mut e = ptr::null_mut();
        assert_eq!(vk_diagram_random(0, 1, &mut e), VkStatus::Ok);
        let mut lb = 0;
        assert_eq!(vk_lower_bound(g, e, 5, &mut lb), VkStatus::Ok);
        assert_eq!(lb, 1);
        assert_eq!(vk_lower_bound(g, e, 2, &mut lb), VkStatus::Ok);
        assert_eq!(lb, -1);
        vk_diagram_free(g);
        vk_diagram_free(e);
    }
}

#[test]
fn error_statuses() {
    let bad = CString::new("O1+ U1-").unwrap();
    let mut d = ptr::null_mut();
    unsafe {
        assert_eq!(vk_diagram_parse(bad.as_ptr(), &mut d), VkStatus::GaussCode);
        assert!(d.is_null());
        assert_eq!(vk_diagram_parse(ptr::null(), &mut d), VkStatus::NullPointer);
        let raw = [0xffu8, 0];
        assert_eq!(vk_diagram_parse(raw.as_ptr().cast(), &mut d), VkStatus::InvalidUtf8);
        let ok = CString::new("O1+ U1+").unwrap();
        assert_eq!(vk_diagram_parse(ok.as_ptr(), ptr::null_mut()), VkStatus::NullPointer);
        let mut j = 0;
        assert_eq!(vk_odd_writhe(ptr::null(), &mut j), VkStatus::NullPointer);
        vk_diagram_free(ptr::null_mut());
        vk_string_free(ptr::null_mut());
        let g = parse("O1+ U1+");
        assert_eq!(vk_odd_writhe(g, &mut j), VkStatus::Ok);
        assert_eq!(last_error(), "");
        vk_diagram_free(g);
    }
}

#[test]
fn header_declares_every_export() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/vknot.h")).unwrap();
    let src = std::fs::read_to_string(format!("{dir}/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15);
    for f in exports {
        assert!(header.contains(&format!(" {f}(")) || header.contains(&format!("*{f}(")), "{f} missing");
    }
    assert!(header.contains("typedef struct VkDiagram VkDiagram;"));
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", &format!("{dir}/include/vknot.h")])
        .status()
    else {
        eprintln!("no C compiler available");
        return;
    };
    assert!(status.success());
}
