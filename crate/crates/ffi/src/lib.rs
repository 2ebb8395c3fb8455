//! C ABI for the `jacquet` engine.
//!
//! Line sets and ring elements cross the boundary as opaque handles. Every
//! fallible function returns a [`JqStatus`]; on failure a message is
//! available from [`jq_last_error`] on the same thread. Strings handed out
//! by the library are NUL-terminated, UTF-8 and must be released with
//! [`jq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use jacquet::cli::commands::{casselman_lines, classify_line, decide_line, jacquet_lines, mstar_lines, verify_outcome};
use jacquet::cli::expr::{parse_points, parse_segment};
use jacquet::cli::{parse_config, parse_expr};
use jacquet::criteria::casselman;
use jacquet::format;
use jacquet::structure::classify_square_integrable;
use jacquet::{CuspWord, Error, LineSet, RElem};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Config = 4,
    Domain = 5,
    CheckFailed = 6,
    Panic = 7,
}

/// A validated set of cuspidal lines.
pub struct JqConfig {
    lines: LineSet,
}

/// An element of R, tied to the lines it was parsed against.
pub struct JqElem {
    lines: LineSet,
    value: RElem,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Fail(JqStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Syntax { .. } => JqStatus::Parse,
            Error::Config(_) | Error::InvalidLine(_) => JqStatus::Config,
            _ => JqStatus::Domain,
        };
        Fail(status, e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> JqStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => JqStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            JqStatus::Panic
        }
    }
}

unsafe fn cstr<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(JqStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(JqStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(JqStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(JqStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(JqStatus::NullPointer, "null output pointer".into()));
    }
    *out = CString::new(s).map_err(|_| Fail(JqStatus::Domain, "output contains NUL".into()))?.into_raw();
    Ok(())
}

unsafe fn put_lines(out: *mut *mut c_char, lines: Vec<String>) -> Result<(), Fail> {
    let mut s = lines.join("\n");
    s.push('\n');
    put_string(out, s)
}

/// The message of the last failure on this thread, or null. Valid until the
/// next call into the library on this thread.
#[no_mangle]
pub extern "C" fn jq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn jq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn jq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The single self-dual line `rho` with size 1 and s = 1.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_config_default(out: *mut *mut JqConfig) -> JqStatus {
    guard(|| put(out, JqConfig { lines: LineSet::standard() }))
}

/// Parses a configuration document.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_config_parse(text: *const c_char, out: *mut *mut JqConfig) -> JqStatus {
    guard(|| {
        let lines = parse_config(cstr(text)?)?;
        put(out, JqConfig { lines })
    })
}

/// # Safety
/// `cfg` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn jq_config_free(cfg: *mut JqConfig) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

/// Parses an expression such as `d(rho,0,1) x c(rho:1)`.
///
/// # Safety
/// `cfg` must be a live handle, `expr` a NUL-terminated string and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_elem_parse(cfg: *const JqConfig, expr: *const c_char, out: *mut *mut JqElem) -> JqStatus {
    guard(|| {
        let cfg = handle(cfg)?;
        let value = parse_expr(cstr(expr)?, &cfg.lines)?;
        put(out, JqElem { lines: cfg.lines.clone(), value })
    })
}

/// # Safety
/// `elem` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn jq_elem_free(elem: *mut JqElem) {
    if !elem.is_null() {
        drop(Box::from_raw(elem));
    }
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_elem_product(a: *const JqElem, b: *const JqElem, out: *mut *mut JqElem) -> JqStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        put(out, JqElem { lines: a.lines.clone(), value: &a.value * &b.value })
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_elem_sum(a: *const JqElem, b: *const JqElem, out: *mut *mut JqElem) -> JqStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        put(out, JqElem { lines: a.lines.clone(), value: &a.value + &b.value })
    })
}

/// Whether two elements are equal; writes 1 or 0.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_elem_equal(a: *const JqElem, b: *const JqElem, out: *mut i32) -> JqStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        if out.is_null() {
            return Err(Fail(JqStatus::NullPointer, "null output pointer".into()));
        }
        *out = i32::from(a.value == b.value);
        Ok(())
    })
}

/// The element in expression syntax; parsing it back gives the same element.
///
/// # Safety
/// `elem` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_elem_to_string(elem: *const JqElem, out: *mut *mut c_char) -> JqStatus {
    guard(|| put_string(out, format::relem_inline(&handle(elem)?.value)))
}

/// m*(elem), one `coeff left (x) right` term per line.
///
/// # Safety
/// `elem` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_mstar(elem: *const JqElem, out: *mut *mut c_char) -> JqStatus {
    guard(|| put_lines(out, mstar_lines(&handle(elem)?.value)))
}

/// The minimal Jacquet module of elem, one `coeff word` term per line.
///
/// # Safety
/// `elem` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_cuspidal_jacquet(elem: *const JqElem, out: *mut *mut c_char) -> JqStatus {
    guard(|| put_lines(out, jacquet_lines(&handle(elem)?.value)))
}

/// Irreducibility of d(a) x d(b) for segments written `line,start,end`.
///
/// # Safety
/// `cfg` must be a live handle, `a` and `b` NUL-terminated strings and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_decide(
    cfg: *const JqConfig,
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut c_char,
) -> JqStatus {
    guard(|| {
        let lines = &handle(cfg)?.lines;
        let line = decide_line(&parse_segment(cstr(a)?, lines)?, &parse_segment(cstr(b)?, lines)?);
        put_string(out, line)
    })
}

/// Square-integrable representations supported on a comma-separated point
/// multiset such as `rho:-1/2,rho:1/2`.
///
/// # Safety
/// `cfg` must be a live handle, `points` a NUL-terminated string and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_classify_si(
    cfg: *const JqConfig,
    points: *const c_char,
    out: *mut *mut c_char,
) -> JqStatus {
    guard(|| {
        let lines = &handle(cfg)?.lines;
        let pts = parse_points(cstr(points)?, lines)?;
        put_string(out, classify_line(&classify_square_integrable(&pts, lines)?))
    })
}

/// Casselman test on a comma-separated word. Writes the report and, when
/// `square_integrable` is not null, 1 or 0.
///
/// # Safety
/// `cfg` must be a live handle, `word` a NUL-terminated string, `out` valid
/// for writes and `square_integrable` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_casselman(
    cfg: *const JqConfig,
    word: *const c_char,
    out: *mut *mut c_char,
    square_integrable: *mut i32,
) -> JqStatus {
    guard(|| {
        let lines = &handle(cfg)?.lines;
        let w: CuspWord = parse_points(cstr(word)?, lines)?.into_iter().collect();
        let verdict = casselman(&w)?;
        put_lines(out, casselman_lines(&w)?)?;
        if !square_integrable.is_null() {
            *square_integrable = i32::from(verdict.square_integrable);
        }
        Ok(())
    })
}

/// Runs verification checks. `suite` is a comma-separated list of check
/// names or `all`; `window` may be null for the default window. Returns
/// `CheckFailed` when any check fails; the report is written either way.
///
/// # Safety
/// `cfg` must be a live handle, `suite` a NUL-terminated string, `window`
/// null or a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn jq_verify(
    cfg: *const JqConfig,
    suite: *const c_char,
    window: *const c_char,
    out: *mut *mut c_char,
) -> JqStatus {
    guard(|| {
        let lines = &handle(cfg)?.lines;
        let window = if window.is_null() { None } else { Some(cstr(window)?) };
        let outcome = verify_outcome(cstr(suite)?, window, lines, false)?;
        put_lines(out, outcome.lines)?;
        if outcome.failed {
            return Err(Fail(JqStatus::CheckFailed, "verification failed".into()));
        }
        Ok(())
    })
}
