//! C interface to `starlike-radius`.
//!
//! Classes and targets are opaque handles created by `sr_class_new` /
//! `sr_target_new` and released with the matching `_free`. Every fallible
//! call returns an `SrStatus`; on failure `sr_last_error_message` holds the
//! text for the calling thread. Strings returned to C are freed with
//! `sr_string_free`. Enum arguments are passed as their integer codes
//! (`SrClassId`, `SrFamily`, `SrVariant`) and checked.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use starlike_radius::verify::verify_cell;
use starlike_radius::{ClassId, ClassSpec, Complex64, Error, Family, Target, Variant, VariantPolicy};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrStatus {
    Ok = 0,
    NullPointer = 1,
    Parameter = 2,
    Domain = 3,
    Unsupported = 4,
    Precondition = 5,
    NoRoot = 6,
    Indeterminate = 7,
    Evaluation = 8,
    NotApplicable = 9,
    Internal = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrClassId {
    G1 = 1,
    G2 = 2,
}

/// Target families in declaration order.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrFamily {
    StarlikeOrder = 0,
    Lemniscate = 1,
    Parabolic = 2,
    Exponential = 3,
    Cardioid = 4,
    Sine = 5,
    Lune = 6,
    RationalR = 7,
    RationalRL = 8,
    StronglyStarlike = 9,
    Nephroid = 10,
    SigmoidSG = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrVariant {
    CenterCorrected = 0,
    Printed = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SrRadiusResult {
    pub rho: f64,
    pub residual: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub iterations: u32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SrDisk {
    pub center: f64,
    pub radius: f64,
}

/// Opaque class handle.
pub struct SrClass(ClassSpec);

/// Opaque target handle.
pub struct SrTarget(Target);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> SrStatus {
    match e {
        Error::Parameter(_) => SrStatus::Parameter,
        Error::Domain(_) => SrStatus::Domain,
        Error::Unsupported(_) => SrStatus::Unsupported,
        Error::Precondition { .. } => SrStatus::Precondition,
        Error::NoRoot { .. } => SrStatus::NoRoot,
        Error::Indeterminate { .. } => SrStatus::Indeterminate,
        Error::Evaluation(_) => SrStatus::Evaluation,
        Error::NotApplicable(_) => SrStatus::NotApplicable,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (SrStatus, String)>) -> SrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SrStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SrStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (SrStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (SrStatus, String) {
    (SrStatus::NullPointer, "null pointer argument".into())
}

fn bad_code(what: &str, code: u32) -> (SrStatus, String) {
    (SrStatus::Parameter, format!("unknown {what} code {code}"))
}

fn class_id(code: u32) -> Result<ClassId, (SrStatus, String)> {
    match code {
        c if c == SrClassId::G1 as u32 => Ok(ClassId::G1),
        c if c == SrClassId::G2 as u32 => Ok(ClassId::G2),
        c => Err(bad_code("class", c)),
    }
}

fn policy(variant: u32, extended: bool) -> Result<VariantPolicy, (SrStatus, String)> {
    let v = match variant {
        c if c == SrVariant::CenterCorrected as u32 => Variant::CenterCorrected,
        c if c == SrVariant::Printed as u32 => Variant::Printed,
        c => return Err(bad_code("variant", c)),
    };
    Ok(VariantPolicy::new(v).extended(extended))
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), (SrStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Creates a class for parameter `b`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sr_class_new(id: u32, b: f64, out: *mut *mut SrClass) -> SrStatus {
    guard(|| {
        let spec = ClassSpec::new(class_id(id)?, b).map_err(lib_err)?;
        write_handle(out, SrClass(spec))
    })
}

/// Creates a class from its coefficient magnitude (`b1` or `b'`).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sr_class_from_coeff_mag(id: u32, coeff_mag: f64, out: *mut *mut SrClass) -> SrStatus {
    guard(|| {
        let spec = ClassSpec::from_coeff_mag(class_id(id)?, coeff_mag).map_err(lib_err)?;
        write_handle(out, SrClass(spec))
    })
}

/// # Safety
/// `class` must come from `sr_class_new` or be null.
#[no_mangle]
pub unsafe extern "C" fn sr_class_free(class: *mut SrClass) {
    if !class.is_null() {
        drop(Box::from_raw(class));
    }
}

/// Coefficient magnitude of the class; NaN for a null handle.
///
/// # Safety
/// `class` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sr_class_coeff_mag(class: *const SrClass) -> f64 {
    class.as_ref().map_or(f64::NAN, |c| c.0.coeff_mag())
}

/// Creates a target. `alpha` is read only for the starlike family and
/// `gamma` only for the strongly starlike family.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sr_target_new(family: u32, alpha: f64, gamma: f64, out: *mut *mut SrTarget) -> SrStatus {
    guard(|| {
        let fam = *Family::ALL.get(family as usize).ok_or_else(|| bad_code("family", family))?;
        let target = match fam {
            Family::StarlikeOrder => Target::starlike(alpha),
            Family::StronglyStarlike => Target::strongly(gamma),
            f => Target::from_family(f, None, None),
        }
        .map_err(lib_err)?;
        write_handle(out, SrTarget(target))
    })
}

/// # Safety
/// `target` must come from `sr_target_new` or be null.
#[no_mangle]
pub unsafe extern "C" fn sr_target_free(target: *mut SrTarget) {
    if !target.is_null() {
        drop(Box::from_raw(target));
    }
}

/// Radius of the class for the target.
///
/// # Safety
/// Handles must be live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sr_compute_radius(
    class: *const SrClass,
    target: *const SrTarget,
    variant: u32,
    extended: bool,
    tol: f64,
    out: *mut SrRadiusResult,
) -> SrStatus {
    guard(|| {
        let (Some(c), Some(t), Some(out)) = (class.as_ref(), target.as_ref(), out.as_mut()) else {
            return Err(null());
        };
        let res = starlike_radius::compute_radius(&c.0, &t.0, policy(variant, extended)?, tol).map_err(lib_err)?;
        *out = SrRadiusResult {
            rho: res.rho,
            residual: res.residual,
            bracket_lo: res.bracket.0,
            bracket_hi: res.bracket.1,
            iterations: res.iterations,
        };
        Ok(())
    })
}

/// Disk containing `z f'(z)/f(z)` on `|z| = r`.
///
/// # Safety
/// `class` must be live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sr_class_disk(class: *const SrClass, r: f64, out: *mut SrDisk) -> SrStatus {
    guard(|| {
        let (Some(c), Some(out)) = (class.as_ref(), out.as_mut()) else {
            return Err(null());
        };
        let d = starlike_radius::class_disk(&c.0, r).map_err(lib_err)?;
        *out = SrDisk { center: d.center, radius: d.radius };
        Ok(())
    })
}

/// Whether `re + i im` is interior to the target domain.
///
/// # Safety
/// `target` must be live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sr_region_contains(target: *const SrTarget, re: f64, im: f64, out: *mut bool) -> SrStatus {
    guard(|| {
        let (Some(t), Some(out)) = (target.as_ref(), out.as_mut()) else {
            return Err(null());
        };
        *out = starlike_radius::region_contains(&t.0, Complex64::new(re, im)).map_err(lib_err)?;
        Ok(())
    })
}

/// Verification report for one cell as a JSON string, to be released with
/// `sr_string_free`. `passed` receives whether all gated checks passed.
///
/// # Safety
/// Handles must be live; `json` and `passed` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sr_verify_json(
    class: *const SrClass,
    target: *const SrTarget,
    variant: u32,
    extended: bool,
    tol: f64,
    samples: u32,
    json: *mut *mut c_char,
    passed: *mut bool,
) -> SrStatus {
    guard(|| {
        let (Some(c), Some(t), false, Some(passed)) = (class.as_ref(), target.as_ref(), json.is_null(), passed.as_mut())
        else {
            return Err(null());
        };
        let report = verify_cell(&c.0, &t.0, policy(variant, extended)?, tol, samples as usize);
        let text = serde_json::to_string(&report).map_err(|e| (SrStatus::Internal, e.to_string()))?;
        *passed = report.passed;
        *json = CString::new(text).map_err(|e| (SrStatus::Internal, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread; valid until the next
/// call. Empty if none failed.
#[no_mangle]
pub extern "C" fn sr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
