//! C ABI over the orbit catalog.
//!
//! Every function returns an [`OrbitcohStatus`]; results come back through
//! out-pointers. On failure a message is kept per thread and can be read
//! with [`orbitcoh_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use orbitcoh::rootsys::{fold_e6, CartanType, FoldConvention, FoldingSpec, RootSystem};
use orbitcoh::{Catalog, CohomologyValue, Error};

/// Opaque handle to a loaded catalog.
pub struct OrbitcohCatalog {
    inner: Catalog,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitcohStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownAlgebra = 3,
    LabelParse = 4,
    UnlistedLabel = 5,
    CatalogCorrupt = 6,
    InvalidCartanType = 7,
    InvalidFolding = 8,
    ValidationFailed = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitcohValueKind {
    Exact = 0,
    UpperBound = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> OrbitcohStatus {
    match e {
        Error::UnknownAlgebra(_) => OrbitcohStatus::UnknownAlgebra,
        Error::LabelParse { .. } | Error::LabelLengthMismatch { .. } => OrbitcohStatus::LabelParse,
        Error::UnlistedLabel { .. } => OrbitcohStatus::UnlistedLabel,
        Error::CatalogCorrupt(_) | Error::InconsistentInput(_) => OrbitcohStatus::CatalogCorrupt,
        Error::InvalidCartanType { .. } | Error::UnrecognizedDiagram(_) | Error::ClosureDiverged { .. } => {
            OrbitcohStatus::InvalidCartanType
        }
        Error::InvalidFolding(_) => OrbitcohStatus::InvalidFolding,
    }
}

struct Failure(OrbitcohStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> OrbitcohStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OrbitcohStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            OrbitcohStatus::Panic
        }
    }
}

/// # Safety
/// `p` must be null or point to a NUL-terminated string.
unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(OrbitcohStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(OrbitcohStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `p` must be null or point to a live handle.
unsafe fn handle<'a>(p: *const OrbitcohCatalog) -> Result<&'a Catalog, Failure> {
    p.as_ref()
        .map(|c| &c.inner)
        .ok_or_else(|| Failure(OrbitcohStatus::NullPointer, "catalog handle is null".into()))
}

fn check_out<T>(p: *mut T) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure(
            OrbitcohStatus::NullPointer,
            "output pointer is null".into(),
        ))
    } else {
        Ok(())
    }
}

fn boxed(catalog: Catalog) -> *mut OrbitcohCatalog {
    Box::into_raw(Box::new(OrbitcohCatalog { inner: catalog }))
}

/// Loads the catalog compiled into the library.
///
/// # Safety
/// `out` must be a valid pointer; on success it receives a handle to release
/// with [`orbitcoh_catalog_free`].
#[no_mangle]
pub unsafe extern "C" fn orbitcoh_catalog_load_embedded(out: *mut *mut OrbitcohCatalog) -> OrbitcohStatus {
    guard(|| {
        check_out(out)?;
        *out = boxed(Catalog::embedded().clone());
        Ok(())
    })
}

/// Loads and checks a catalog file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orbitcoh_catalog_load_path(
    path: *const c_char,
    out: *mut *mut OrbitcohCatalog,
) -> OrbitcohStatus {
    guard(|| {
        check_out(out)?;
        let path = text(path, "path")?;
        *out = boxed(Catalog::from_path(path)?);
        Ok(())
    })
}

/// # Safety
/// `catalog` must be null or a handle from a load function, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orbitcoh_catalog_free(catalog: *mut OrbitcohCatalog) {
    if !catalog.is_null() {
        drop(Box::from_raw(catalog));
    }
}

/// # Safety
/// Pointers must be valid; `algebra` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn orbitcoh_orbit_count(
    catalog: *const OrbitcohCatalog,
    algebra: *const c_char,
    out: *mut u32,
) -> OrbitcohStatus {
    guard(|| {
        check_out(out)?;
        let cat = handle(catalog)?;
        *out = cat.orbit_count(text(algebra, "algebra")?)?;
        Ok(())
    })
}

#[derive(Clone, Copy)]
enum Degree {
    One,
    Two,
}

unsafe fn cohomology(
    catalog: *const OrbitcohCatalog,
    algebra: *const c_char,
    label: *const c_char,
    kind: *mut OrbitcohValueKind,
    n: *mut u32,
    degree: Degree,
) -> OrbitcohStatus {
    guard(|| {
        check_out(kind)?;
        check_out(n)?;
        let cat = handle(catalog)?;
        let form = cat.form(text(algebra, "algebra")?)?;
        let label = form.parse_label(text(label, "label")?)?;
        let value = if label.is_zero() {
            let (h1, h2) = orbitcoh::cohomology::zero_orbit_cohomology();
            match degree {
                Degree::One => h1,
                Degree::Two => h2,
            }
        } else {
            let record = form.lookup(&label)?;
            match degree {
                Degree::One => orbitcoh::cohomology::h1(record, form)?,
                Degree::Two => orbitcoh::cohomology::h2(record, form)?,
            }
        };
        *kind = match value {
            CohomologyValue::Exact(_) => OrbitcohValueKind::Exact,
            CohomologyValue::UpperBound(_) => OrbitcohValueKind::UpperBound,
        };
        *n = value.n();
        Ok(())
    })
}

/// Second cohomology of a listed orbit (or the zero orbit).
///
/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn orbitcoh_h2(
    catalog: *const OrbitcohCatalog,
    algebra: *const c_char,
    label: *const c_char,
    kind: *mut OrbitcohValueKind,
    n: *mut u32,
) -> OrbitcohStatus {
    cohomology(catalog, algebra, label, kind, n, Degree::Two)
}

/// First cohomology of a listed orbit (or the zero orbit).
///
/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn orbitcoh_h1(
    catalog: *const OrbitcohCatalog,
    algebra: *const c_char,
    label: *const c_char,
    kind: *mut OrbitcohValueKind,
    n: *mut u32,
) -> OrbitcohStatus {
    cohomology(catalog, algebra, label, kind, n, Degree::One)
}

/// Runs every consistency check. `failures` receives the number of failing
/// checks; the status is `VALIDATION_FAILED` when it is nonzero.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn orbitcoh_validate(
    catalog: *const OrbitcohCatalog,
    failures: *mut u32,
) -> OrbitcohStatus {
    guard(|| {
        check_out(failures)?;
        let report = orbitcoh::validate::validate_all(handle(catalog)?);
        let failed: Vec<&str> = report.failures().map(|c| c.check_id.as_str()).collect();
        *failures = failed.len() as u32;
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Failure(
                OrbitcohStatus::ValidationFailed,
                format!("failed checks: {}", failed.join(", ")),
            ))
        }
    })
}

/// Number of roots of a Cartan type such as `"E8"`.
///
/// # Safety
/// `cartan_type` must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn orbitcoh_root_count(cartan_type: *const c_char, out: *mut u32) -> OrbitcohStatus {
    guard(|| {
        check_out(out)?;
        let t: CartanType = text(cartan_type, "cartan type")?.parse()?;
        *out = RootSystem::new(t)?.roots().len() as u32;
        Ok(())
    })
}

/// Folds E6 under a convention (`"orbit-sum"`, `"orbit-restriction"`,
/// `"twisted-affine"`). The type name is written to `out` and must be released
/// with [`orbitcoh_string_free`].
///
/// # Safety
/// `convention` must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn orbitcoh_fold_e6(
    convention: *const c_char,
    out: *mut *mut c_char,
) -> OrbitcohStatus {
    guard(|| {
        check_out(out)?;
        let conv: FoldConvention = text(convention, "convention")?.parse()?;
        let t = fold_e6(&FoldingSpec::e6(conv))?;
        *out = CString::new(t.to_string())
            .expect("type names have no NUL")
            .into_raw();
        Ok(())
    })
}

/// Message for the last failure on this thread, or an empty string. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn orbitcoh_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orbitcoh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
