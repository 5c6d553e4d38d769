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

//! C interface. Charts are opaque handles; every call returns a status code
//! (`CC_OK` or the library error code) and writes results through out
//! pointers. The message of the last failure on the calling thread is
//! available from `cc_last_error_message`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cubecrux::chart::ComplexChart;
use cubecrux::error::Error;
use cubecrux::io;
use cubecrux::weight::Weight;

pub const CC_OK: i32 = 0;
pub const CC_ERR_NULL: i32 = 1;
pub const CC_ERR_UTF8: i32 = 2;
pub const CC_ERR_PANIC: i32 = 3;

/// A validated chart.
pub struct CcChart {
    chart: ComplexChart,
}

/// An exact rational `num / den` with `den > 0`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CcRational {
    pub num: i64,
    pub den: i64,
}

impl From<Weight> for CcRational {
    fn from(w: Weight) -> Self {
        CcRational { num: *w.numer(), den: *w.denom() }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

enum Fail {
    Lib(Error),
    Code(i32, &'static str),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Runs `f`, maps failures and panics to status codes.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            CC_OK
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            e.code()
        }
        Ok(Err(Fail::Code(code, msg))) => {
            set_error(msg.to_string());
            code
        }
        Err(_) => {
            set_error("internal panic".to_string());
            CC_ERR_PANIC
        }
    }
}

unsafe fn chart_ref<'a>(chart: *const CcChart) -> Result<&'a ComplexChart, Fail> {
    chart.as_ref().map(|c| &c.chart).ok_or(Fail::Code(CC_ERR_NULL, "null chart handle"))
}

unsafe fn out_ref<'a, T>(out: *mut T) -> Result<&'a mut T, Fail> {
    out.as_mut().ok_or(Fail::Code(CC_ERR_NULL, "null out pointer"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail::Code(CC_ERR_NULL, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail::Code(CC_ERR_UTF8, "string is not UTF-8"))
}

fn check_vertices(chart: &ComplexChart, vs: &[usize]) -> Result<(), Fail> {
    match vs.iter().find(|&&v| v >= chart.num_vertices()) {
        Some(v) => Err(Error::UnknownVertex(format!("#{v}")).into()),
        None => Ok(()),
    }
}

/// Static, NUL-terminated crate version.
#[no_mangle]
pub extern "C" fn cc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn cc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses and validates a chart from JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_chart_from_json(json: *const c_char, out: *mut *mut CcChart) -> i32 {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let chart = io::chart_from_str(text(json)?)?;
        *out = Box::into_raw(Box::new(CcChart { chart }));
        Ok(())
    })
}

/// Releases a chart. Null is ignored.
///
/// # Safety
/// `chart` must come from `cc_chart_from_json` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cc_chart_free(chart: *mut CcChart) {
    if !chart.is_null() {
        drop(Box::from_raw(chart));
    }
}

/// Canonical JSON of the chart; release it with `cc_string_free`.
///
/// # Safety
/// `chart` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_chart_to_json(chart: *const CcChart, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let out = out_ref(out)?;
        let s = io::chart_to_string(chart_ref(chart)?);
        *out = CString::new(s).map_err(|_| Fail::Code(CC_ERR_UTF8, "interior NUL"))?.into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `chart` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_chart_num_vertices(chart: *const CcChart, out: *mut usize) -> i32 {
    guard(|| {
        *out_ref(out)? = chart_ref(chart)?.num_vertices();
        Ok(())
    })
}

/// # Safety
/// `chart` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_chart_num_walls(chart: *const CcChart, out: *mut usize) -> i32 {
    guard(|| {
        *out_ref(out)? = chart_ref(chart)?.num_walls();
        Ok(())
    })
}

/// Index of the vertex with the given name.
///
/// # Safety
/// `chart` must be a live handle, `name` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cc_chart_vertex_index(chart: *const CcChart, name: *const c_char, out: *mut usize) -> i32 {
    guard(|| {
        *out_ref(out)? = chart_ref(chart)?.find_vertex(text(name)?)?;
        Ok(())
    })
}

/// Weighted distance.
///
/// # Safety
/// `chart` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_chart_distance(chart: *const CcChart, x: usize, y: usize, out: *mut CcRational) -> i32 {
    guard(|| {
        let c = chart_ref(chart)?;
        check_vertices(c, &[x, y])?;
        *out_ref(out)? = c.distance(x, y).into();
        Ok(())
    })
}

/// Median vertex of a triple.
///
/// # Safety
/// `chart` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_chart_median(chart: *const CcChart, x: usize, y: usize, z: usize, out: *mut usize) -> i32 {
    guard(|| {
        let c = chart_ref(chart)?;
        check_vertices(c, &[x, y, z])?;
        *out_ref(out)? = c.median(x, y, z);
        Ok(())
    })
}

/// Gromov product `(x · y)_v`.
///
/// # Safety
/// `chart` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_chart_gromov_product(
    chart: *const CcChart,
    v: usize,
    x: usize,
    y: usize,
    out: *mut CcRational,
) -> i32 {
    guard(|| {
        let c = chart_ref(chart)?;
        check_vertices(c, &[v, x, y])?;
        *out_ref(out)? = c.gromov_product(v, x, y).into();
        Ok(())
    })
}

/// Cross ratio of four vertices.
///
/// # Safety
/// `chart` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_chart_cross_ratio(
    chart: *const CcChart,
    x: usize,
    y: usize,
    z: usize,
    w: usize,
    out: *mut CcRational,
) -> i32 {
    guard(|| {
        let c = chart_ref(chart)?;
        check_vertices(c, &[x, y, z, w])?;
        *out_ref(out)? = c.cross_ratio(x, y, z, w).into();
        Ok(())
    })
}

/// Whether `x` and `y` are opposite at their median with `z`.
///
/// # Safety
/// `chart` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_chart_is_opposite(
    chart: *const CcChart,
    x: usize,
    y: usize,
    z: usize,
    out: *mut bool,
) -> i32 {
    guard(|| {
        let c = chart_ref(chart)?;
        check_vertices(c, &[x, y, z])?;
        *out_ref(out)? = c.is_opposite(x, y, z)?.opposite;
        Ok(())
    })
}
