//! C interface for the verification library: every entry point returns an
//! opaque report handle carrying a status code and a JSON document, so
//! bindings in other languages only need four accessor calls.
//!
//! Memory contract: every `*mut PzReport` returned here is owned by the
//! caller and must be released with `pz_report_free`; the string returned
//! by `pz_report_json` borrows from the report and dies with it.

use std::ffi::{CStr, CString};
use std::os::raw::{c_char, c_int};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes mirrored in the generated header.
pub const PZ_OK: c_int = 0;
pub const PZ_CHECK_FAILED: c_int = 1;
pub const PZ_USAGE: c_int = 2;
pub const PZ_PANIC: c_int = 3;

/// Opaque result handle.
pub struct PzReport {
    status: c_int,
    json: CString,
}

fn report_from(status: c_int, json: String) -> *mut PzReport {
    let json = CString::new(json).unwrap_or_else(|_| CString::new("{}").expect("static"));
    Box::into_raw(Box::new(PzReport { status, json }))
}

fn run_cli(args: Vec<String>) -> *mut PzReport {
    let outcome = catch_unwind(AssertUnwindSafe(|| {
        match perazzo::cli::run_from_args(args) {
            Ok((report, code)) => (code, report.to_json_string()),
            Err(usage) => (
                PZ_USAGE,
                serde_json::json!({ "error": usage }).to_string(),
            ),
        }
    }));
    match outcome {
        Ok((code, json)) => report_from(code, json),
        Err(_) => report_from(PZ_PANIC, "{\"error\": \"internal panic\"}".to_string()),
    }
}

/// # Safety
/// `s` must be null or a NUL-terminated string valid for the call.
unsafe fn arg(s: *const c_char) -> Option<String> {
    if s.is_null() {
        return None;
    }
    CStr::from_ptr(s).to_str().ok().map(str::to_owned)
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn pz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Run a verification suite (`all`, `lattice`, `brauer`, `torsor`,
/// `geometry`, `segre`, `bookkeeping`).
///
/// # Safety
/// `suite` must be null (meaning `all`) or a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn pz_verify(suite: *const c_char, seed: u64) -> *mut PzReport {
    let suite = arg(suite).unwrap_or_else(|| "all".to_string());
    run_cli(vec![
        "perazzo".into(),
        "verify".into(),
        suite,
        "--seed".into(),
        seed.to_string(),
    ])
}

/// The subgroup classification table.
#[no_mangle]
pub extern "C" fn pz_brauer_table(seed: u64) -> *mut PzReport {
    run_cli(vec![
        "perazzo".into(),
        "brauer-table".into(),
        "--seed".into(),
        seed.to_string(),
    ])
}

/// First cohomology of the subgroup generated by `group` (cycle notation,
/// semicolon separated) on a named standard module.
///
/// # Safety
/// `group` and `module` must be valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn pz_cohomology(
    group: *const c_char,
    module: *const c_char,
    seed: u64,
) -> *mut PzReport {
    let (group, module) = match (arg(group), arg(module)) {
        (Some(g), Some(m)) => (g, m),
        _ => return report_from(PZ_USAGE, "{\"error\": \"null argument\"}".into()),
    };
    run_cli(vec![
        "perazzo".into(),
        "cohomology".into(),
        "--group".into(),
        group,
        "--module".into(),
        module,
        "--seed".into(),
        seed.to_string(),
    ])
}

/// Chart-map checks (identity, equivariance, double-three, censuses).
#[no_mangle]
pub extern "C" fn pz_torsor_check(seed: u64) -> *mut PzReport {
    run_cli(vec![
        "perazzo".into(),
        "torsor-map".into(),
        "--seed".into(),
        seed.to_string(),
    ])
}

/// Finite-field census for `object` in {"segre", "perazzo"}.
///
/// # Safety
/// `object` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn pz_census(object: *const c_char, q: u32, seed: u64) -> *mut PzReport {
    let Some(object) = arg(object) else {
        return report_from(PZ_USAGE, "{\"error\": \"null argument\"}".into());
    };
    run_cli(vec![
        "perazzo".into(),
        "census".into(),
        "--object".into(),
        object,
        "--q".into(),
        q.to_string(),
        "--seed".into(),
        seed.to_string(),
    ])
}

/// Smith normal form of a row-major integer matrix; the report JSON carries
/// the diagonal, both transforms, and the rank.
///
/// # Safety
/// `entries` must point to `rows * cols` readable values.
#[no_mangle]
pub unsafe extern "C" fn pz_snf(rows: usize, cols: usize, entries: *const i64) -> *mut PzReport {
    if rows == 0 || cols == 0 || entries.is_null() {
        return report_from(PZ_USAGE, "{\"error\": \"empty matrix\"}".into());
    }
    let data: Vec<i64> = std::slice::from_raw_parts(entries, rows * cols).to_vec();
    let outcome = catch_unwind(move || {
        let a = perazzo::exact::IntMatrix::from_fn(rows, cols, |i, j| data[i * cols + j]);
        let s = a.snf();
        let dump = |m: &perazzo::exact::IntMatrix| -> Vec<Vec<String>> {
            (0..m.rows())
                .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
                .collect()
        };
        serde_json::json!({
            "rank": s.rank,
            "invariant_factors": s.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "d": dump(&s.d),
            "u": dump(&s.u),
            "v": dump(&s.v),
        })
        .to_string()
    });
    match outcome {
        Ok(json) => report_from(PZ_OK, json),
        Err(_) => report_from(PZ_PANIC, "{\"error\": \"internal panic\"}".into()),
    }
}

/// Status code of a report (`PZ_OK`, `PZ_CHECK_FAILED`, `PZ_USAGE`,
/// `PZ_PANIC`).
///
/// # Safety
/// `report` must be a live pointer from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn pz_report_status(report: *const PzReport) -> c_int {
    if report.is_null() {
        return PZ_USAGE;
    }
    (*report).status
}

/// Borrowed JSON document of a report, NUL-terminated; valid until
/// `pz_report_free`.
///
/// # Safety
/// `report` must be a live pointer from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn pz_report_json(report: *const PzReport) -> *const c_char {
    if report.is_null() {
        return std::ptr::null();
    }
    (*report).json.as_ptr()
}

/// Release a report.
///
/// # Safety
/// `report` must be a pointer from this library, not yet freed; null is a
/// no-op.
#[no_mangle]
pub unsafe extern "C" fn pz_report_free(report: *mut PzReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
