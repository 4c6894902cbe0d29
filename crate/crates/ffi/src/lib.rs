//! C ABI over `psigroup`.
//!
//! Groups are opaque `PsgGroup` handles created by `psg_group_from_spec` or
//! `psg_group_from_table` and released with `psg_group_free`. Every fallible
//! call returns a `PsgStatus` and writes its result through an out pointer;
//! on failure `psg_last_error` describes what went wrong on this thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use psigroup::psi;
use psigroup::structure::{all_subgroups, generated_subgroup, is_nilpotent};
use psigroup::verify::{verify_conjecture, verify_lemma_bounds, verify_theorem};
use psigroup::{Builder, Error, FiniteGroup, DEFAULT_CAP};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    IndexOutOfRange = 3,
    InvalidGroup = 4,
    InvalidSubgroup = 5,
    CapExceeded = 6,
    NotNilpotent = 7,
    Parse = 8,
    Io = 9,
    Internal = 10,
    Panic = 11,
}

/// Which sweep `psg_verify` runs.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsgSuite {
    Theorem = 0,
    Conjecture = 1,
    Lemmas = 2,
}

/// Counts from a verification sweep over one group.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PsgVerifySummary {
    pub pairs_checked: u64,
    pub violations: u64,
    pub equalities: u64,
    pub unexplained_equalities: u64,
}

/// Opaque group handle.
pub struct PsgGroup {
    inner: FiniteGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> PsgStatus {
    match err {
        Error::IndexOutOfRange { .. } => PsgStatus::IndexOutOfRange,
        Error::InvalidSubgroup(_) | Error::NotNormal(_) | Error::NotContained => {
            PsgStatus::InvalidSubgroup
        }
        Error::Validation(_) => PsgStatus::InvalidGroup,
        Error::CapExceeded { .. } | Error::ClosureExceeded { .. } => PsgStatus::CapExceeded,
        Error::NotNilpotent(_) => PsgStatus::NotNilpotent,
        Error::Syntax { .. } | Error::Parse { .. } => PsgStatus::Parse,
        Error::Io { .. } => PsgStatus::Io,
        Error::NotPrime(_)
        | Error::NotDivisor { .. }
        | Error::NotCoprime(..)
        | Error::Domain(_)
        | Error::Overflow(_) => PsgStatus::InvalidArgument,
        _ => PsgStatus::Internal,
    }
}

/// Runs `f`, converting errors and panics into a status and recording the
/// message for `psg_last_error`.
fn guard(f: impl FnOnce() -> Result<(), (PsgStatus, String)>) -> PsgStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PsgStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside psigroup".into());
            PsgStatus::Panic
        }
    }
}

fn lib(err: Error) -> (PsgStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> (PsgStatus, String) {
    (PsgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn group<'a>(g: *const PsgGroup) -> Result<&'a FiniteGroup, (PsgStatus, String)> {
    g.as_ref()
        .map(|g| &g.inner)
        .ok_or_else(|| null("group handle"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (PsgStatus, String)> {
    if out.is_null() {
        return Err(null("out pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_handle(g: FiniteGroup) -> *mut PsgGroup {
    Box::into_raw(Box::new(PsgGroup { inner: g }))
}

/// Builds a group from a spec string such as `dihedral:4` or
/// `product(cyclic:3;sym:3)`. `cap` bounds the order; 0 means the default.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_group_from_spec(
    spec: *const c_char,
    cap: usize,
    out: *mut *mut PsgGroup,
) -> PsgStatus {
    guard(|| {
        if spec.is_null() {
            return Err(null("spec"));
        }
        let text = CStr::from_ptr(spec)
            .to_str()
            .map_err(|_| (PsgStatus::InvalidArgument, "spec is not UTF-8".to_string()))?;
        let spec = psigroup::parse_group_spec(text).map_err(lib)?;
        let cap = if cap == 0 { DEFAULT_CAP } else { cap };
        let g = Builder::new(cap).build(&spec).map_err(lib)?;
        write(out, into_handle(g))
    })
}

/// Builds a group from a row-major `order × order` Cayley table of 0-based
/// indices. The table is validated; the identity is renumbered to 0.
///
/// # Safety
/// `table` must point to `order * order` readable entries and `out` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_group_from_table(
    table: *const u32,
    order: usize,
    out: *mut *mut PsgGroup,
) -> PsgStatus {
    guard(|| {
        if table.is_null() {
            return Err(null("table"));
        }
        let len = order
            .checked_mul(order)
            .ok_or_else(|| (PsgStatus::InvalidArgument, "order overflows".to_string()))?;
        let flat = std::slice::from_raw_parts(table, len);
        let rows: Vec<Vec<usize>> = flat
            .chunks(order.max(1))
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect();
        let g = FiniteGroup::validate(&rows, "table").map_err(|e| lib(e.into()))?;
        write(out, into_handle(g))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn psg_group_free(g: *mut PsgGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_group_order(g: *const PsgGroup, out: *mut usize) -> PsgStatus {
    guard(|| write(out, group(g)?.order()))
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_group_mul(
    g: *const PsgGroup,
    a: usize,
    b: usize,
    out: *mut usize,
) -> PsgStatus {
    guard(|| write(out, group(g)?.mul(a, b).map_err(lib)?))
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_group_element_order(
    g: *const PsgGroup,
    a: usize,
    out: *mut usize,
) -> PsgStatus {
    guard(|| write(out, group(g)?.element_order(a).map_err(lib)?))
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_group_is_nilpotent(g: *const PsgGroup, out: *mut bool) -> PsgStatus {
    guard(|| write(out, is_nilpotent(group(g)?)))
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_group_subgroup_count(
    g: *const PsgGroup,
    out: *mut usize,
) -> PsgStatus {
    guard(|| write(out, all_subgroups(group(g)?).len()))
}

/// Sum of all element orders.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_psi(g: *const PsgGroup, out: *mut u64) -> PsgStatus {
    guard(|| write(out, psi::psi(group(g)?)))
}

/// Sum of relative orders with respect to the subgroup generated by the
/// `len` element indices at `gens`. `len == 0` selects the trivial subgroup.
///
/// # Safety
/// `g` must be a live handle, `gens` must point to `len` readable entries
/// (or may be null when `len == 0`), and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_psi_rel(
    g: *const PsgGroup,
    gens: *const usize,
    len: usize,
    out: *mut u64,
) -> PsgStatus {
    guard(|| {
        let g = group(g)?;
        let gens: &[usize] = if len == 0 {
            &[]
        } else if gens.is_null() {
            return Err(null("generators"));
        } else {
            std::slice::from_raw_parts(gens, len)
        };
        let h = generated_subgroup(g, gens).map_err(lib)?;
        write(out, psi::psi_rel(g, &h).map_err(lib)?)
    })
}

/// Sum of element orders of the cyclic group of order `n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_psi_cyclic(n: u64, out: *mut u64) -> PsgStatus {
    guard(|| write(out, psi::psi_cyclic(n).map_err(lib)?))
}

/// Relative sum for the order-`m` subgroup of the cyclic group of order `n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_psi_rel_cyclic(n: u64, m: u64, out: *mut u64) -> PsgStatus {
    guard(|| write(out, psi::psi_rel_cyclic(n, m).map_err(lib)?))
}

/// Runs one sweep over every subgroup of `g` and reports the counts.
/// `suite` is a `PsgSuite` value; `PSG_SUITE_THEOREM` fails with
/// `PSG_STATUS_NOT_NILPOTENT` on non-nilpotent groups.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psg_verify(
    g: *const PsgGroup,
    suite: u32,
    out: *mut PsgVerifySummary,
) -> PsgStatus {
    guard(|| {
        let g = group(g)?;
        let r = match suite {
            s if s == PsgSuite::Theorem as u32 => verify_theorem(g),
            s if s == PsgSuite::Conjecture as u32 => verify_conjecture(g),
            s if s == PsgSuite::Lemmas as u32 => verify_lemma_bounds(g),
            other => return Err((PsgStatus::InvalidArgument, format!("unknown suite {other}"))),
        }
        .map_err(lib)?;
        write(
            out,
            PsgVerifySummary {
                pairs_checked: r.pairs_checked as u64,
                violations: r.violations as u64,
                equalities: r.equalities as u64,
                unexplained_equalities: r.unexplained_equalities().count() as u64,
            },
        )
    })
}

/// Message for the last failed call on this thread, or null after a
/// successful one. Valid until the next call into this library on the same
/// thread.
#[no_mangle]
pub extern "C" fn psg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn psg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::NotContained), PsgStatus::InvalidSubgroup);
        assert_eq!(
            status_of(&Error::CapExceeded { order: 2, cap: 1 }),
            PsgStatus::CapExceeded
        );
        assert_eq!(
            status_of(&Error::Syntax {
                pos: 0,
                msg: String::new()
            }),
            PsgStatus::Parse
        );
        assert_eq!(
            status_of(&Error::Inconsistent(String::new())),
            PsgStatus::Internal
        );
    }

    #[test]
    fn guard_catches_panics() {
        let s = guard(|| panic!("boom"));
        assert_eq!(s, PsgStatus::Panic);
        assert!(!psg_last_error().is_null());
        assert_eq!(guard(|| Ok(())), PsgStatus::Ok);
        assert!(psg_last_error().is_null());
    }
}
