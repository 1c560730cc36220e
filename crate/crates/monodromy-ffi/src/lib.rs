//! C ABI for the monodromy toolkit.
//!
//! Every entry point returns a [`MonoStatus`] code and hands results back
//! through opaque handles whose strings stay valid until the handle is
//! freed. A thread-local message describes the most recent error. The
//! header `include/monodromy.h` is generated with cbindgen
//! (`cargo run -p monodromy-ffi --example generate_header`).

use monodromy::bmf::{build_bmf, counts, BMFactorization};
use monodromy::homology::compare_surfaces;
use monodromy::layout::{
    half_twist, liftability_class, transported_monodromies, triple_cover_class, ArcId, Layout,
    SurfaceParams,
};
use monodromy::verify::run_suite;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};

/// Status codes mirroring the CLI exit codes.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonoStatus {
    Ok = 0,
    VerifyFailed = 1,
    Invalid = 2,
    Resource = 3,
    Panic = 4,
}

/// An owned text result.
pub struct MonoText {
    text: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let owned = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = owned);
}

fn classify(msg: &str) -> MonoStatus {
    if msg.contains("budget") {
        MonoStatus::Resource
    } else {
        MonoStatus::Invalid
    }
}

/// Message of the most recent error on this thread; valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn mono_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

fn deliver(out: *mut *mut MonoText, text: String) -> MonoStatus {
    if out.is_null() {
        set_error("null output parameter");
        return MonoStatus::Invalid;
    }
    match CString::new(text) {
        Ok(cstring) => {
            let handle = Box::new(MonoText { text: cstring });
            unsafe { *out = Box::into_raw(handle) };
            MonoStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior NUL");
            MonoStatus::Invalid
        }
    }
}

fn guarded(
    out: *mut *mut MonoText,
    f: impl FnOnce() -> Result<String, (MonoStatus, String)> + UnwindSafe,
) -> MonoStatus {
    match catch_unwind(f) {
        Ok(Ok(text)) => deliver(out, text),
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MonoStatus::Panic
        }
    }
}

fn params_from(a: i64, b: i64, c: i64, d: i64) -> Result<SurfaceParams, (MonoStatus, String)> {
    SurfaceParams::new(a, b, c, d).map_err(|e| (MonoStatus::Invalid, e.to_string()))
}

unsafe fn str_arg<'a>(ptr: *const c_char) -> Result<&'a str, (MonoStatus, String)> {
    if ptr.is_null() {
        return Err((MonoStatus::Invalid, "null string argument".into()));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| (MonoStatus::Invalid, "argument is not valid UTF-8".into()))
}

/// The NUL-terminated text of a result handle.
#[no_mangle]
pub extern "C" fn mono_text_get(handle: *const MonoText) -> *const c_char {
    if handle.is_null() {
        return std::ptr::null();
    }
    unsafe { (*handle).text.as_ptr() }
}

/// Free a result handle. Passing NULL is a no-op.
#[no_mangle]
pub extern "C" fn mono_text_free(handle: *mut MonoText) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Counts report for the parameters, as key=value lines.
#[no_mangle]
pub extern "C" fn mono_report(
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    out: *mut *mut MonoText,
) -> MonoStatus {
    guarded(out, || {
        let p = params_from(a, b, c, d)?;
        let fact = build_bmf(p).map_err(|e| (classify(&e.to_string()), e.to_string()))?;
        let report = counts(&fact).map_err(|e| (MonoStatus::Invalid, e.to_string()))?;
        Ok(report.to_text())
    })
}

/// The braid monodromy factorization in the line-oriented text format.
#[no_mangle]
pub extern "C" fn mono_factorization(
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    out: *mut *mut MonoText,
) -> MonoStatus {
    guarded(out, || {
        let p = params_from(a, b, c, d)?;
        let fact = build_bmf(p).map_err(|e| (classify(&e.to_string()), e.to_string()))?;
        Ok(fact.to_text())
    })
}

/// Parse a factorization text and return its normalized form; validates the
/// format and the tag invariants.
///
/// # Safety
/// `text` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn mono_factorization_parse(
    text: *const c_char,
    out: *mut *mut MonoText,
) -> MonoStatus {
    let input = match str_arg(text) {
        Ok(s) => s.to_owned(),
        Err((status, msg)) => {
            set_error(&msg);
            return status;
        }
    };
    guarded(out, move || {
        let fact =
            BMFactorization::parse(&input).map_err(|e| (MonoStatus::Invalid, e.to_string()))?;
        Ok(fact.to_text())
    })
}

/// Run the bundled verification suite. `Ok` when every check passes,
/// `VerifyFailed` otherwise; the text carries one PASS/FAIL line per check
/// either way.
#[no_mangle]
pub extern "C" fn mono_verify_paper(seed: u64, out: *mut *mut MonoText) -> MonoStatus {
    match catch_unwind(|| {
        let results = run_suite(seed);
        let all_pass = results.iter().all(|r| r.passed);
        let mut text = String::new();
        for r in &results {
            if r.passed {
                text.push_str(&format!("PASS {} ({} ms)\n", r.name, r.millis));
            } else {
                text.push_str(&format!("FAIL {}: {}\n", r.name, r.detail));
            }
        }
        (all_pass, text)
    }) {
        Ok((all_pass, text)) => {
            let status = deliver(out, text);
            if status != MonoStatus::Ok {
                return status;
            }
            if all_pass {
                MonoStatus::Ok
            } else {
                set_error("a verification failed");
                MonoStatus::VerifyFailed
            }
        }
        Err(_) => {
            set_error("internal panic");
            MonoStatus::Panic
        }
    }
}

/// Compare the stable-equivalence invariants of two parameter sets. The
/// text is the verdict line of the `compare` command.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub extern "C" fn mono_compare(
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    a2: i64,
    b2: i64,
    c2: i64,
    d2: i64,
    out: *mut *mut MonoText,
) -> MonoStatus {
    guarded(out, || {
        let p1 = params_from(a, b, c, d)?;
        let p2 = params_from(a2, b2, c2, d2)?;
        let (verdict, i1, i2) =
            compare_surfaces(p1, p2).map_err(|e| (MonoStatus::Invalid, e.to_string()))?;
        Ok(format!(
            "{verdict} ({},{}) vs ({},{})\n",
            i1.1 .0, i1.1 .1, i2.1 .0, i2.1 .1
        ))
    })
}

/// Liftability data of an arc, as key=value lines (mirrors `lift-check`).
///
/// # Safety
/// `arc` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn mono_lift_check(
    b: i64,
    d: i64,
    arc: *const c_char,
    power: i32,
    out: *mut *mut MonoText,
) -> MonoStatus {
    let arc_text = match str_arg(arc) {
        Ok(s) => s.to_owned(),
        Err((status, msg)) => {
            set_error(&msg);
            return status;
        }
    };
    guarded(out, move || {
        if b < 1 || d < 1 {
            return Err((
                MonoStatus::Invalid,
                "layout parameters must be positive".into(),
            ));
        }
        let layout = Layout::new(b, d);
        let arc = ArcId::parse(&arc_text).map_err(|e| (MonoStatus::Invalid, e.to_string()))?;
        arc.validate(&layout)
            .map_err(|e| (MonoStatus::Invalid, e.to_string()))?;
        let err = |e: monodromy::LayoutError| (classify(&e.to_string()), e.to_string());
        let class = liftability_class(&layout, arc).map_err(err)?;
        let case = triple_cover_class(&layout, arc).map_err(err)?;
        let (t1, t2) = transported_monodromies(&layout, arc).map_err(err)?;
        let word = half_twist(&layout, arc).map_err(err)?.word();
        Ok(format!(
            "arc={arc}\npower={power}\nliftability_class={class}\npower_liftable={}\ntriple_cover_case={case}\ntransported_monodromies=({t1},{t2})\nhalf_twist_word={word}\n",
            power.rem_euclid(class as i32) == 0
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text_of(handle: *mut MonoText) -> String {
        assert!(!handle.is_null());
        let s = unsafe { CStr::from_ptr(mono_text_get(handle)) }
            .to_str()
            .unwrap()
            .to_owned();
        mono_text_free(handle);
        s
    }

    #[test]
    fn report_round_trip() {
        let mut out: *mut MonoText = std::ptr::null_mut();
        let status = mono_report(3, 3, 3, 3, &mut out);
        assert_eq!(status, MonoStatus::Ok);
        let text = text_of(out);
        assert!(text.contains("k=216"));
        assert!(text.contains("K2=128"));
    }

    #[test]
    fn invalid_params_set_error() {
        let mut out: *mut MonoText = std::ptr::null_mut();
        let status = mono_report(2, 3, 3, 3, &mut out);
        assert_eq!(status, MonoStatus::Invalid);
        let msg = unsafe { CStr::from_ptr(mono_last_error()) }
            .to_str()
            .unwrap();
        assert!(msg.contains("a,b,c,d"));
    }

    #[test]
    fn factorization_parse_round_trip() {
        let mut out: *mut MonoText = std::ptr::null_mut();
        assert_eq!(mono_factorization(3, 3, 3, 3, &mut out), MonoStatus::Ok);
        let text = text_of(out);
        let c_text = CString::new(text.clone()).unwrap();
        let mut out2: *mut MonoText = std::ptr::null_mut();
        let status = unsafe { mono_factorization_parse(c_text.as_ptr(), &mut out2) };
        assert_eq!(status, MonoStatus::Ok);
        assert_eq!(text_of(out2), text);
    }

    #[test]
    fn compare_verdict() {
        let mut out: *mut MonoText = std::ptr::null_mut();
        let status = mono_compare(3, 4, 5, 4, 4, 4, 4, 4, &mut out);
        assert_eq!(status, MonoStatus::Ok);
        assert_eq!(text_of(out), "Distinguished (32,96) vs (64,64)\n");
    }

    #[test]
    fn lift_check_text() {
        let arc = CString::new("q2").unwrap();
        let mut out: *mut MonoText = std::ptr::null_mut();
        let status = unsafe { mono_lift_check(3, 3, arc.as_ptr(), 2, &mut out) };
        assert_eq!(status, MonoStatus::Ok);
        let text = text_of(out);
        assert!(text.contains("liftability_class=2"));
        assert!(text.contains("power_liftable=true"));

        let bad = CString::new("p99").unwrap();
        let mut out: *mut MonoText = std::ptr::null_mut();
        let status = unsafe { mono_lift_check(3, 3, bad.as_ptr(), 1, &mut out) };
        assert_eq!(status, MonoStatus::Invalid);
    }

    #[test]
    fn null_out_param_is_invalid() {
        assert_eq!(
            mono_report(3, 3, 3, 3, std::ptr::null_mut()),
            MonoStatus::Invalid
        );
    }
}
