//! C ABI for `nilcascade`.
//!
//! Orders and linear forms are opaque handles built from JSON. Results come
//! back as JSON strings owned by the library; release them with
//! [`nc_string_free`]. Every call returns an [`NcStatus`]; on failure
//! [`nc_last_error_message`] describes the error for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use nilcascade::cascade::cascade;
use nilcascade::centgen::canonical_generator;
use nilcascade::criterion::nontriviality_verdict;
use nilcascade::linform::LinearForm;
use nilcascade::{Error, OrderSpec, Root};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    NotInCascade = 4,
    Internal = 5,
}

/// Opaque linear order on the indices.
pub struct NcOrder(OrderSpec);

/// Opaque linear form.
pub struct NcLinearForm(LinearForm);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn status_of(e: &Error) -> NcStatus {
    set_error(e.to_string());
    match e {
        Error::NotInCascade(_) => NcStatus::NotInCascade,
        e if e.is_internal() => NcStatus::Internal,
        _ => NcStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> NcStatus) -> NcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            NcStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, NcStatus> {
    if p.is_null() {
        set_error("null pointer argument");
        return Err(NcStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        NcStatus::InvalidUtf8
    })
}

unsafe fn write_json(out: *mut *mut c_char, v: serde_json::Value) -> NcStatus {
    let s = CString::new(v.to_string()).expect("JSON has no NUL bytes");
    *out = s.into_raw();
    NcStatus::Ok
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Parses an order from JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nc_order_from_json(
    json: *const c_char,
    out: *mut *mut NcOrder,
) -> NcStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return NcStatus::NullPointer;
        }
        let s = try_status!(read_str(json));
        match serde_json::from_str::<OrderSpec>(s) {
            Ok(o) => {
                *out = Box::into_raw(Box::new(NcOrder(o)));
                NcStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                NcStatus::InvalidInput
            }
        }
    })
}

/// # Safety
/// `order` must come from [`nc_order_from_json`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nc_order_free(order: *mut NcOrder) {
    if !order.is_null() {
        drop(Box::from_raw(order));
    }
}

/// Parses a linear form from JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nc_linear_form_from_json(
    json: *const c_char,
    out: *mut *mut NcLinearForm,
) -> NcStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return NcStatus::NullPointer;
        }
        let s = try_status!(read_str(json));
        let v: serde_json::Value = match serde_json::from_str(s) {
            Ok(v) => v,
            Err(e) => {
                set_error(e.to_string());
                return NcStatus::InvalidInput;
            }
        };
        match LinearForm::from_json(&v) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(NcLinearForm(f)));
                NcStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `form` must come from [`nc_linear_form_from_json`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nc_linear_form_free(form: *mut NcLinearForm) {
    if !form.is_null() {
        drop(Box::from_raw(form));
    }
}

/// First `limit` cascade roots as `{"roots": [...], "terminated": bool}`.
///
/// # Safety
/// `order` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nc_cascade_json(
    order: *const NcOrder,
    limit: usize,
    out: *mut *mut c_char,
) -> NcStatus {
    guard(|| {
        if order.is_null() || out.is_null() {
            set_error("null pointer argument");
            return NcStatus::NullPointer;
        }
        let c = cascade(&(*order).0, limit);
        write_json(out, serde_json::to_value(c).expect("serializable"))
    })
}

/// Verdict on `I(λ) ≠ 0`, as the CLI prints it.
///
/// # Safety
/// `order` and `form` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nc_criterion_json(
    order: *const NcOrder,
    form: *const NcLinearForm,
    max_window: usize,
    out: *mut *mut c_char,
) -> NcStatus {
    guard(|| {
        if order.is_null() || form.is_null() || out.is_null() {
            set_error("null pointer argument");
            return NcStatus::NullPointer;
        }
        match nontriviality_verdict(&(*order).0, &(*form).0, max_window) {
            Ok(v) => write_json(out, v.to_json()),
            Err(e) => status_of(&e),
        }
    })
}

/// Canonical generator of a cascade root such as `"e3-e4"`.
///
/// # Safety
/// `order` must be a live handle, `root` a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nc_central_generator_json(
    order: *const NcOrder,
    root: *const c_char,
    out: *mut *mut c_char,
) -> NcStatus {
    guard(|| {
        if order.is_null() || out.is_null() {
            set_error("null pointer argument");
            return NcStatus::NullPointer;
        }
        let s = try_status!(read_str(root));
        let beta: Root = match s.parse() {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        match canonical_generator(&beta, &(*order).0) {
            Ok(g) => write_json(
                out,
                serde_json::json!({
                    "beta": g.beta,
                    "step": g.step,
                    "window": g.window.labels(),
                    "xi": g.xi.to_string(),
                    "delta": g.delta.to_string(),
                }),
            ),
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; valid until the next call.
#[no_mangle]
pub extern "C" fn nc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn nc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
