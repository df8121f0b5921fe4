//! Exercise the C surface through the exported symbols, exactly as a
//! foreign binding would: status codes, JSON payloads, and the memory
//! contract.

use std::ffi::{CStr, CString};

use perazzo_ffi::*;

unsafe fn json_of(report: *mut PzReport) -> serde_json::Value {
    assert!(!report.is_null());
    let text = CStr::from_ptr(pz_report_json(report)).to_str().unwrap().to_owned();
    pz_report_free(report);
    serde_json::from_str(&text).unwrap()
}

#[test]
fn version_is_a_c_string() {
    let v = unsafe { CStr::from_ptr(pz_version()) };
    assert!(!v.to_str().unwrap().is_empty());
}

#[test]
fn cohomology_round_trip() {
    let group = CString::new("((123),1,0)").unwrap();
    let module = CString::new("P").unwrap();
    let report = unsafe { pz_cohomology(group.as_ptr(), module.as_ptr(), 7) };
    assert_eq!(unsafe { pz_report_status(report) }, PZ_OK);
    let v = unsafe { json_of(report) };
    assert_eq!(
        v["checks"][0]["details"]["invariant_factors"],
        serde_json::json!([3])
    );
}

#[test]
fn usage_errors_are_reported_not_panicked() {
    let group = CString::new("((123),1,0)").unwrap();
    let module = CString::new("nosuch").unwrap();
    let report = unsafe { pz_cohomology(group.as_ptr(), module.as_ptr(), 7) };
    assert_eq!(unsafe { pz_report_status(report) }, PZ_USAGE);
    unsafe { pz_report_free(report) };

    let report = unsafe { pz_cohomology(std::ptr::null(), std::ptr::null(), 7) };
    assert_eq!(unsafe { pz_report_status(report) }, PZ_USAGE);
    unsafe { pz_report_free(report) };
}

#[test]
fn snf_of_a_small_matrix() {
    let entries: [i64; 4] = [2, 4, 6, 8];
    let report = unsafe { pz_snf(2, 2, entries.as_ptr()) };
    assert_eq!(unsafe { pz_report_status(report) }, PZ_OK);
    let v = unsafe { json_of(report) };
    assert_eq!(v["rank"], 2);
    assert_eq!(v["invariant_factors"], serde_json::json!(["2", "4"]));

    let empty = unsafe { pz_snf(0, 2, entries.as_ptr()) };
    assert_eq!(unsafe { pz_report_status(empty) }, PZ_USAGE);
    unsafe { pz_report_free(empty) };
}

#[test]
fn torsor_check_passes() {
    let report = pz_torsor_check(7);
    assert_eq!(unsafe { pz_report_status(report) }, PZ_OK);
    let v = unsafe { json_of(report) };
    assert_eq!(v["passed"], true);
}

#[test]
fn chart_census_via_c_surface() {
    let object = CString::new("perazzo").unwrap();
    let report = unsafe { pz_census(object.as_ptr(), 3, 7) };
    assert_eq!(unsafe { pz_report_status(report) }, PZ_OK);
    let v = unsafe { json_of(report) };
    assert_eq!(v["checks"][0]["details"]["fiber_size"], 32);
}

#[test]
fn null_report_accessors_are_safe() {
    unsafe {
        assert_eq!(pz_report_status(std::ptr::null()), PZ_USAGE);
        assert!(pz_report_json(std::ptr::null()).is_null());
        pz_report_free(std::ptr::null_mut());
    }
}

#[test]
fn lattice_suite_through_the_c_surface() {
    let suite = CString::new("lattice").unwrap();
    let report = unsafe { pz_verify(suite.as_ptr(), 7) };
    assert_eq!(unsafe { pz_report_status(report) }, PZ_OK);
    let v = unsafe { json_of(report) };
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() >= 8);
}
