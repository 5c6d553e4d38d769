// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use cubecrux::generators::{grid, path};
use cubecrux::io;
use cubecrux_ffi::*;

fn handle(json: &str) -> *mut CcChart {
    let text = CString::new(json).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cc_chart_from_json(text.as_ptr(), &mut out) }, CC_OK);
    assert!(!out.is_null());
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cc_last_error_message()) }.to_str().unwrap().to_string()
}

fn index(chart: *const CcChart, name: &str) -> usize {
    let name = CString::new(name).unwrap();
    let mut v = usize::MAX;
    assert_eq!(unsafe { cc_chart_vertex_index(chart, name.as_ptr(), &mut v) }, CC_OK);
    v
}

#[test]
fn grid_queries_through_the_handle() {
    let c = handle(&io::chart_to_string(&grid(&[2, 2])));
    unsafe {
        let (mut n, mut w) = (0, 0);
        assert_eq!(cc_chart_num_vertices(c, &mut n), CC_OK);
        assert_eq!(cc_chart_num_walls(c, &mut w), CC_OK);
        assert_eq!((n, w), (9, 4));

        let (a, b, z) = (index(c, "0,0"), index(c, "2,2"), index(c, "2,0"));
        let mut d = CcRational::default();
        assert_eq!(cc_chart_distance(c, a, b, &mut d), CC_OK);
        assert_eq!(d, CcRational { num: 4, den: 1 });

        let mut m = usize::MAX;
        assert_eq!(cc_chart_median(c, a, b, z, &mut m), CC_OK);
        assert_eq!(m, z);

        let mut g = CcRational::default();
        assert_eq!(cc_chart_gromov_product(c, z, a, b, &mut g), CC_OK);
        assert_eq!(g, CcRational { num: 0, den: 1 });

        // Corners of a square around the centre: the two diagonals cross.
        let (p, q, r, s) = (index(c, "0,0"), index(c, "2,2"), index(c, "0,2"), index(c, "2,0"));
        let mut cr = CcRational::default();
        assert_eq!(cc_chart_cross_ratio(c, p, q, r, s, &mut cr), CC_OK);
        let lib = grid(&[2, 2]);
        let expected = lib.cross_ratio(p, q, r, s);
        assert_eq!(cr, CcRational { num: *expected.numer(), den: *expected.denom() });

        let mut opp = false;
        assert_eq!(cc_chart_is_opposite(c, a, b, z, &mut opp), CC_OK);
        assert_eq!(opp, lib.is_opposite(a, b, z).unwrap().opposite);
        cc_chart_free(c);
    }
}

#[test]
fn weights_come_back_as_exact_fractions() {
    let json = r#"{"hyperplanes":[{"id":"e","weight":"2/3"}],
        "vertices":[{"id":"a","signs":{"e":"-"}},{"id":"b","signs":{"e":"+"}}]}"#;
    let c = handle(json);
    let mut d = CcRational::default();
    unsafe {
        assert_eq!(cc_chart_distance(c, 0, 1, &mut d), CC_OK);
        cc_chart_free(c);
    }
    assert_eq!(d, CcRational { num: 2, den: 3 });
}

#[test]
fn errors_carry_library_codes_and_messages() {
    unsafe {
        let bad = CString::new(r#"{"hyperplanes":[{"id":"e","weight":"0"}],"vertices":[{"id":"a","signs":{"e":"-"}},{"id":"b","signs":{"e":"+"}}]}"#).unwrap();
        let mut out = ptr::null_mut();
        let code = cc_chart_from_json(bad.as_ptr(), &mut out);
        assert_eq!(code, 11);
        assert!(out.is_null());
        assert!(last_error().contains("non-positive"));

        let c = handle(&io::chart_to_string(&path(3)));
        let mut d = CcRational::default();
        assert_eq!(cc_chart_distance(c, 0, 99, &mut d), 18);
        let ghost = CString::new("nowhere").unwrap();
        let mut v = 0;
        assert_eq!(cc_chart_vertex_index(c, ghost.as_ptr(), &mut v), 18);
        assert_eq!(cc_chart_distance(c, 0, 1, &mut d), CC_OK);
        assert_eq!(last_error(), "");

        assert_eq!(cc_chart_num_vertices(ptr::null(), &mut v), CC_ERR_NULL);
        assert_eq!(cc_chart_num_vertices(c, ptr::null_mut()), CC_ERR_NULL);
        assert_eq!(cc_chart_from_json(ptr::null(), &mut out), CC_ERR_NULL);
        let invalid = [0xffu8, 0];
        assert_eq!(cc_chart_from_json(invalid.as_ptr().cast(), &mut out), CC_ERR_UTF8);
        cc_chart_free(c);
        cc_chart_free(ptr::null_mut());
        cc_string_free(ptr::null_mut());
    }
}

#[test]
fn json_round_trips_through_the_handle() {
    let text = io::chart_to_string(&grid(&[3, 1]));
    let c = handle(&text);
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(cc_chart_to_json(c, &mut s), CC_OK);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), text);
        cc_string_free(s);
        cc_chart_free(c);
        assert_eq!(CStr::from_ptr(cc_version()).to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_lists_every_export() {
    let header = std::fs::read_to_string(crate_dir().join("include/cubecrux.h")).unwrap();
    let source = std::fs::read_to_string(crate_dir().join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 12);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}

/// Compiles and runs a C client against the static library when a C
/// compiler and the archive are available.
#[test]
fn c_client_links_and_runs() {
    let Some(cc) = ["cc", "gcc", "clang"].into_iter().find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler; skipped");
        return;
    };
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let archive = profile_dir.join("libcubecrux_ffi.a");
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let program = tmp.join("cc_client");
    let syntax = Command::new(cc)
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/client.c"))
        .status()
        .unwrap();
    assert!(syntax.success(), "header does not compile");
    if !archive.exists() {
        eprintln!("{} not built; link step skipped", archive.display());
        return;
    }
    let built = Command::new(cc)
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/client.c"))
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&program)
        .status()
        .unwrap();
    assert!(built.success(), "link failed");
    let out = Command::new(&program).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "d=2/3 code=11 ok");
}
