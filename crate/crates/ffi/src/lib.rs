//! C ABI over `vknot-core`.
//!
//! Diagrams are opaque `VkDiagram` handles owned by the caller and released
//! with `vk_diagram_free`. Every fallible call returns a `VkStatus`; on
//! failure `vk_last_error` gives a message for the current thread. Strings
//! returned through out-parameters are released with `vk_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use vknot_core::invariants::InvariantReport;
use vknot_core::{
    apply_move, classify_2k_xi, lower_bound_2k, n_writhe, normal_form_diagram, odd_writhe, GaussDiagram, LowerBound,
    Move, MoveError, MoveScript,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    GaussCode = 3,
    Parameter = 4,
    Move = 5,
    Script = 6,
    Internal = 7,
}

/// Opaque diagram handle.
pub struct VkDiagram(GaussDiagram);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(VkStatus, String);

impl From<MoveError> for Failure {
    fn from(e: MoveError) -> Self {
        let status = match e {
            MoveError::Script { .. } | MoveError::Replay { .. } => VkStatus::Script,
            _ => VkStatus::Move,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> VkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            VkStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            VkStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(VkStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(VkStatus::InvalidUtf8, "string is not valid UTF-8".into()))
}

unsafe fn diagram<'a>(p: *const VkDiagram) -> Result<&'a GaussDiagram, Failure> {
    p.as_ref().map(|d| &d.0).ok_or_else(|| Failure(VkStatus::NullPointer, "null diagram".into()))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(VkStatus::NullPointer, "null output pointer".into()));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_diagram(out: *mut *mut VkDiagram, g: GaussDiagram) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(VkDiagram(g))))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(VkStatus::Internal, "interior nul".into()))?;
    put(out, c.into_raw())
}

fn param(e: impl ToString) -> Failure {
    Failure(VkStatus::Parameter, e.to_string())
}

/// Message describing the last failure on this thread, empty after a
/// successful call. Owned by the library and valid until the next call.
#[no_mangle]
pub extern "C" fn vk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `code` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vk_diagram_parse(code: *const c_char, out: *mut *mut VkDiagram) -> VkStatus {
    guard(|| {
        let g = GaussDiagram::parse(text(code)?).map_err(|e| Failure(VkStatus::GaussCode, e.to_string()))?;
        put_diagram(out, g)
    })
}

/// Seeded random diagram with `n` chords.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vk_diagram_random(n: usize, seed: u64, out: *mut *mut VkDiagram) -> VkStatus {
    guard(|| put_diagram(out, GaussDiagram::random(n, seed)))
}

/// Normal form G(a): |a| copies of the virtual trefoil with the sign of `a`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vk_normal_form(a: i64, out: *mut *mut VkDiagram) -> VkStatus {
    guard(|| put_diagram(out, normal_form_diagram(a)))
}

/// # Safety
/// `d` must come from this library and not be freed already. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn vk_diagram_free(d: *mut VkDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `s` must come from this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn vk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vk_diagram_to_string(d: *const VkDiagram, out: *mut *mut c_char) -> VkStatus {
    guard(|| put_string(out, diagram(d)?.to_string()))
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vk_diagram_canonicalize(d: *const VkDiagram, out: *mut *mut VkDiagram) -> VkStatus {
    guard(|| put_diagram(out, diagram(d)?.canonicalize()))
}

/// # Safety
/// `d` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn vk_diagram_chord_count(d: *const VkDiagram, out: *mut usize) -> VkStatus {
    guard(|| put(out, diagram(d)?.chord_count()))
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vk_odd_writhe(d: *const VkDiagram, out: *mut i64) -> VkStatus {
    guard(|| put(out, odd_writhe(diagram(d)?)))
}

/// J_n for `n != 0`; `n == 0` is a parameter error.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vk_n_writhe(d: *const VkDiagram, n: i64, out: *mut i64) -> VkStatus {
    guard(|| put(out, n_writhe(diagram(d)?, n).map_err(param)?))
}

/// Invariant report as a JSON object, freed with `vk_string_free`.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vk_invariants_json(d: *const VkDiagram, out: *mut *mut c_char) -> VkStatus {
    guard(|| {
        let json = serde_json::to_string(&InvariantReport::of(diagram(d)?)).map_err(|e| Failure(VkStatus::Internal, e.to_string()))?;
        put_string(out, json)
    })
}

/// Applies one move given in the line format, e.g. `XI 1`.
///
/// # Safety
/// `d` must be a live handle, `line` nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vk_apply_move(d: *const VkDiagram, line: *const c_char, out: *mut *mut VkDiagram) -> VkStatus {
    guard(|| {
        let m: Move = text(line)?.parse()?;
        put_diagram(out, apply_move(diagram(d)?, &m)?)
    })
}

/// Replays a newline-separated move script.
///
/// # Safety
/// `d` must be a live handle, `script` nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vk_replay_script(d: *const VkDiagram, script: *const c_char, out: *mut *mut VkDiagram) -> VkStatus {
    guard(|| {
        let s = MoveScript::parse(text(script)?)?;
        put_diagram(out, s.replay(diagram(d)?)?)
    })
}

/// Class modulo 2k- and Xi-moves: the reduced `a` of the normal form.
///
/// # Safety
/// `d` must be a live handle and `out_a` writable.
#[no_mangle]
pub unsafe extern "C" fn vk_classify(d: *const VkDiagram, k: u32, out_a: *mut i64) -> VkStatus {
    guard(|| put(out_a, classify_2k_xi(diagram(d)?, k).map_err(param)?.a))
}

/// Lower bound on 2k-move distance. `-1` means the two diagrams are not
/// related by 2k-moves at all.
///
/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vk_lower_bound(g: *const VkDiagram, h: *const VkDiagram, k: u32, out: *mut i64) -> VkStatus {
    guard(|| {
        let v = match lower_bound_2k(diagram(g)?, diagram(h)?, k).map_err(param)? {
            LowerBound::Feasible(n) => n as i64,
            LowerBound::Infeasible => -1,
        };
        put(out, v)
    })
}
