//! C interface to `schurweyl`.
//!
//! Objects cross the boundary as opaque handles that the caller releases
//! with the matching `*_free` function. Every call returns an [`SwStatus`];
//! results are written through out-pointers. Strings returned by the library
//! are NUL-terminated UTF-8 owned by the caller and released with
//! [`sw_string_free`]. After a failing call, [`sw_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use schurweyl::brauer::{double_factorial_odd, BrauerElement, Diagram, Gen, GenKind};
use schurweyl::exactla::{Field, FieldSpec, PrimeField, Rationals};
use schurweyl::hyperalgebra::{duality_report, phi_span};
use schurweyl::{with_field, Error};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidField = 4,
    OutOfRange = 5,
    Dimension = 6,
    Parameter = 7,
    Guard = 8,
    Precondition = 9,
    /// a verification run finished with failed checks
    CheckFailed = 10,
    Panic = 11,
}

impl From<&Error> for SwStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => SwStatus::Parse,
            Error::InvalidField(_) => SwStatus::InvalidField,
            Error::OutOfRange(_) => SwStatus::OutOfRange,
            Error::Dimension(_) => SwStatus::Dimension,
            Error::Parameter(_) => SwStatus::Parameter,
            Error::Guard(_) => SwStatus::Guard,
            Error::Precondition(_) => SwStatus::Precondition,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(SwStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(SwStatus::from(&e), e.to_string())
    }
}

type FfiResult = Result<(), Failure>;

fn guard(body: impl FnOnce() -> FfiResult) -> SwStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SwStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SwStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(SwStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SwStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, v: T, what: &str) -> FfiResult {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("NUL bytes removed").into_raw()
}

/// Message for the most recent failing call on this thread; empty after a
/// success. The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn sw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `(2n-1)!!`, the number of Brauer n-diagrams.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_diagram_count(n: u32, out: *mut u64) -> SwStatus {
    guard(|| {
        let c = u64::try_from(double_factorial_odd(n as usize))
            .map_err(|_| Failure(SwStatus::OutOfRange, format!("(2n-1)!! overflows for n = {n}")))?;
        write_out(out, c, "out")
    })
}

/// A Brauer diagram.
pub struct SwDiagram {
    inner: Diagram,
}

/// Builds a diagram from a JSON array of one-based partners.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_diagram_from_json(json: *const c_char, out: *mut *mut SwDiagram) -> SwStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Failure(SwStatus::Parse, e.to_string()))?;
        let d = Diagram::from_json(&v)?;
        write_out(out, Box::into_raw(Box::new(SwDiagram { inner: d })), "out")
    })
}

/// `s_i` (`kind = 0`) or `e_i` (`kind = 1`) on `n` strands.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_diagram_generator(kind: u32, i: u32, n: u32, out: *mut *mut SwDiagram) -> SwStatus {
    guard(|| {
        let kind = match kind {
            0 => GenKind::S,
            1 => GenKind::E,
            k => return Err(Failure(SwStatus::OutOfRange, format!("generator kind {k}"))),
        };
        let d = Diagram::generator(kind, i as usize, n as usize)?;
        write_out(out, Box::into_raw(Box::new(SwDiagram { inner: d })), "out")
    })
}

/// Stacks `a` on top of `b`; writes the product and the number of closed loops.
///
/// # Safety
/// `a`, `b` must be live handles; `out` and `loops` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_diagram_compose(
    a: *const SwDiagram,
    b: *const SwDiagram,
    out: *mut *mut SwDiagram,
    loops: *mut u32,
) -> SwStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("a"))?;
        let b = b.as_ref().ok_or_else(|| null("b"))?;
        if out.is_null() || loops.is_null() {
            return Err(null("out"));
        }
        let (d, l) = a.inner.compose(&b.inner)?;
        write_out(loops, l as u32, "loops")?;
        write_out(out, Box::into_raw(Box::new(SwDiagram { inner: d })), "out")
    })
}

/// # Safety
/// `d` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_diagram_to_json(d: *const SwDiagram, out: *mut *mut c_char) -> SwStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(|| null("d"))?;
        write_out(out, into_c_string(d.inner.to_json().to_string()), "out")
    })
}

/// # Safety
/// `d` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sw_diagram_free(d: *mut SwDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

enum AnyElement {
    Q(BrauerElement<Rationals>),
    P(BrauerElement<PrimeField>),
}

/// An element of B_n(x) over ℚ or a prime field.
pub struct SwElement {
    inner: AnyElement,
}

fn parse_word(text: &str) -> Result<Vec<Gen>, Error> {
    text.split(|c: char| c.is_whitespace() || c == ',' || c == '*')
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

/// Product of generator letters such as `"s1 e2 s1"` in B_n(x); the empty
/// word gives the identity. `field` is `"q"` or `"fp:P"`.
///
/// # Safety
/// `field` and `word` must be NUL-terminated strings and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_element_from_word(
    field: *const c_char,
    n: u32,
    x: i64,
    word: *const c_char,
    out: *mut *mut SwElement,
) -> SwStatus {
    guard(|| {
        let spec: FieldSpec = read_str(field, "field")?.parse()?;
        let letters = parse_word(read_str(word, "word")?)?;
        let inner = match spec {
            FieldSpec::Rationals => {
                let f = Rationals;
                AnyElement::Q(BrauerElement::word(f, n as usize, f.from_i64(x), &letters)?)
            }
            FieldSpec::Prime(p) => {
                let f = PrimeField::new(p)?;
                AnyElement::P(BrauerElement::word(f, n as usize, f.from_i64(x), &letters)?)
            }
        };
        write_out(out, Box::into_raw(Box::new(SwElement { inner })), "out")
    })
}

fn combine(a: &SwElement, b: &SwElement, op: u8) -> Result<SwElement, Failure> {
    fn apply<F: Field>(a: &BrauerElement<F>, b: &BrauerElement<F>, op: u8) -> Result<BrauerElement<F>, Error> {
        match op {
            b'+' => a.add(b),
            _ => a.multiply(b),
        }
    }
    let inner = match (&a.inner, &b.inner) {
        (AnyElement::Q(a), AnyElement::Q(b)) => AnyElement::Q(apply(a, b, op)?),
        (AnyElement::P(a), AnyElement::P(b)) if a.field() == b.field() => AnyElement::P(apply(a, b, op)?),
        _ => return Err(Failure(SwStatus::InvalidField, "elements live over different fields".into())),
    };
    Ok(SwElement { inner })
}

/// # Safety
/// `a`, `b` must be live handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_element_multiply(a: *const SwElement, b: *const SwElement, out: *mut *mut SwElement) -> SwStatus {
    guard(|| {
        let r = combine(a.as_ref().ok_or_else(|| null("a"))?, b.as_ref().ok_or_else(|| null("b"))?, b'*')?;
        write_out(out, Box::into_raw(Box::new(r)), "out")
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_element_add(a: *const SwElement, b: *const SwElement, out: *mut *mut SwElement) -> SwStatus {
    guard(|| {
        let r = combine(a.as_ref().ok_or_else(|| null("a"))?, b.as_ref().ok_or_else(|| null("b"))?, b'+')?;
        write_out(out, Box::into_raw(Box::new(r)), "out")
    })
}

/// `[[diagram, "coefficient"], ...]` in diagram order.
///
/// # Safety
/// `e` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_element_to_json(e: *const SwElement, out: *mut *mut c_char) -> SwStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("e"))?;
        let v = match &e.inner {
            AnyElement::Q(x) => x.to_json(),
            AnyElement::P(x) => x.to_json(),
        };
        write_out(out, into_c_string(v.to_string()), "out")
    })
}

/// # Safety
/// `e` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sw_element_free(e: *mut SwElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Dimension of the span of the action matrices of all n-diagrams on
/// V^{⊗n}, dim V = 2m.
///
/// # Safety
/// `field` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_phi_rank(field: *const c_char, m: u32, n: u32, out: *mut u64) -> SwStatus {
    guard(|| {
        let spec: FieldSpec = read_str(field, "field")?.parse()?;
        let r = with_field!(spec, f => phi_span(f, m as usize, n as usize).map(|s| s.len()))?;
        write_out(out, r as u64, "out")
    })
}

/// Comparison of the Brauer image with the commutant of the divided powers,
/// as a JSON object.
///
/// # Safety
/// `field` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_duality_report(
    field: *const c_char,
    m: u32,
    n: u32,
    max_dim: u64,
    out: *mut *mut c_char,
) -> SwStatus {
    guard(|| {
        let spec: FieldSpec = read_str(field, "field")?.parse()?;
        let rep = with_field!(spec, f => duality_report(f, m as usize, n as usize, max_dim as usize))?;
        let text = serde_json::to_string(&rep).map_err(|e| Failure(SwStatus::Parse, e.to_string()))?;
        write_out(out, into_c_string(text), "out")
    })
}

/// Runs `schurweyl verify` with whitespace-separated arguments (for example
/// `"duality --m 2 --n 3 --field q"`) and returns the JSON report.
/// Returns [`SwStatus::CheckFailed`] when a check fails; the report is still
/// written.
///
/// # Safety
/// `args` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sw_verify(args: *const c_char, out: *mut *mut c_char) -> SwStatus {
    guard(|| {
        let args = read_str(args, "args")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let mut argv = vec!["schurweyl", "verify"];
        argv.extend(args.split_whitespace());
        argv.extend(["--format", "json", "--no-timing"]);
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = schurweyl::cli::run(argv, &mut stdout, &mut stderr);
        *out = ptr::null_mut();
        match code {
            0 | 1 => {
                write_out(out, into_c_string(String::from_utf8_lossy(&stdout).into_owned()), "out")?;
                if code == 1 {
                    return Err(Failure(SwStatus::CheckFailed, String::from_utf8_lossy(&stderr).trim().to_string()));
                }
                Ok(())
            }
            _ => Err(Failure(SwStatus::Guard, String::from_utf8_lossy(&stderr).trim().to_string())),
        }
    })
}
