//! C ABI over `flatcausal`.
//!
//! Objects are opaque heap handles released with the matching `*_free`
//! function. Every fallible call returns an [`FcStatus`]; on failure the
//! message is available from [`fc_last_error_message`] on the same thread.
//! Matrices cross the boundary as row-major `double` arrays.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use flatcausal::charpoly::{char_polynomial, is_characteristic};
use flatcausal::classify::{affine_spectrum, almost_equivalent, realize, Verdict};
use flatcausal::construction::{example_4d, example_5d, Signature};
use flatcausal::{Error, ManifoldData, Matrix, MatrixParabola, SymMatrix};

/// Opaque characteristic parabola `A + 2sB + s²C`.
pub struct FcParabola(MatrixParabola);

/// Opaque validated manifold data.
pub struct FcManifold(ManifoldData);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FcStatus {
    Ok = 0,
    NullPointer = 1,
    Panic = 2,
    InvalidInput = 3,
    DimensionMismatch = 4,
    NotSymmetric = 5,
    NotPositiveDefinite = 6,
    NotPsd = 7,
    ConvergenceFailure = 8,
    FreenessViolated = 9,
    SignatureInconsistent = 10,
    RankDeficientR = 11,
    SingularLattice = 12,
    ZeroParameter = 13,
    NotDegenerate = 14,
    InvalidCharacteristic = 15,
    NotCharacteristic = 16,
    DegenerateK = 17,
    BadCertificate = 18,
    UnsupportedDimension = 19,
    CSingular = 20,
    SingularA = 21,
    NotSimpleSpectrum = 22,
    Other = 99,
}

impl From<&Error> for FcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DimensionMismatch(_) => FcStatus::DimensionMismatch,
            Error::NotSymmetric { .. } => FcStatus::NotSymmetric,
            Error::NotPositiveDefinite(_) => FcStatus::NotPositiveDefinite,
            Error::NotPsd { .. } => FcStatus::NotPsd,
            Error::ConvergenceFailure { .. } => FcStatus::ConvergenceFailure,
            Error::FreenessViolated { .. } => FcStatus::FreenessViolated,
            Error::SignatureInconsistent(_) => FcStatus::SignatureInconsistent,
            Error::RankDeficientR { .. } => FcStatus::RankDeficientR,
            Error::SingularLattice => FcStatus::SingularLattice,
            Error::ZeroParameter(_) => FcStatus::ZeroParameter,
            Error::NotDegenerate => FcStatus::NotDegenerate,
            Error::InvalidCharacteristic(_) => FcStatus::InvalidCharacteristic,
            Error::NotCharacteristic(_) => FcStatus::NotCharacteristic,
            Error::DegenerateK { .. } => FcStatus::DegenerateK,
            Error::BadCertificate(_) => FcStatus::BadCertificate,
            Error::UnsupportedDimension(_) => FcStatus::UnsupportedDimension,
            Error::CSingular => FcStatus::CSingular,
            Error::SingularA => FcStatus::SingularA,
            Error::NotSimpleSpectrum => FcStatus::NotSimpleSpectrum,
            Error::InvalidInput(_) => FcStatus::InvalidInput,
            _ => FcStatus::Other,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FcSignature {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub k: usize,
}

impl From<Signature> for FcSignature {
    fn from(s: Signature) -> Self {
        Self {
            n: s.n,
            m: s.m,
            r: s.r,
            k: s.k,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct FcCharacteristic {
    pub characteristic: bool,
    pub poabc: bool,
    pub schur_psd: bool,
    pub signature: FcSignature,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FcEquivalence {
    Yes = 0,
    No = 1,
    Unknown = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(e: Error) -> FcStatus {
    let status = FcStatus::from(&e);
    set_error(format!("{}: {e}", e.code()));
    status
}

/// Runs `body`, converting panics into [`FcStatus::Panic`].
fn guard(body: impl FnOnce() -> Result<(), FcStatus>) -> FcStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FcStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic".into());
            FcStatus::Panic
        }
    }
}

fn null() -> FcStatus {
    set_error("null pointer argument".into());
    FcStatus::NullPointer
}

unsafe fn read_matrix(data: *const f64, rows: usize, cols: usize) -> Result<Matrix, FcStatus> {
    if rows * cols == 0 {
        return Ok(Matrix::zeros(rows, cols));
    }
    if data.is_null() {
        return Err(null());
    }
    let values = slice::from_raw_parts(data, rows * cols);
    Ok(Matrix::from_fn(rows, cols, |i, j| values[i * cols + j]))
}

unsafe fn read_sym(data: *const f64, m: usize, tol: f64) -> Result<SymMatrix, FcStatus> {
    SymMatrix::try_from_matrix(&read_matrix(data, m, m)?, tol).map_err(fail)
}

unsafe fn write_matrix(out: *mut f64, m: &Matrix) {
    if !out.is_null() {
        let target = slice::from_raw_parts_mut(out, m.rows() * m.cols());
        for (i, row) in m.to_rows().into_iter().enumerate() {
            target[i * m.cols()..(i + 1) * m.cols()].copy_from_slice(&row);
        }
    }
}

unsafe fn put<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Message of the most recent failure on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn fc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Creates a parabola from three row-major `m×m` symmetric matrices.
///
/// # Safety
/// `a`, `b`, `c` must point to `m*m` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_parabola_new(
    m: usize,
    a: *const f64,
    b: *const f64,
    c: *const f64,
    tol: f64,
    out: *mut *mut FcParabola,
) -> FcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let p = MatrixParabola::new(read_sym(a, m, tol)?, read_sym(b, m, tol)?, read_sym(c, m, tol)?).map_err(fail)?;
        put(out, FcParabola(p));
        Ok(())
    })
}

/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fc_parabola_free(p: *mut FcParabola) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn fc_parabola_dim(p: *const FcParabola) -> usize {
    p.as_ref().map_or(0, |p| p.0.dim())
}

/// Copies the coefficients into caller buffers of `m*m` doubles. Null
/// buffers are skipped.
///
/// # Safety
/// `p` must be a live handle; non-null buffers must hold `m*m` doubles.
#[no_mangle]
pub unsafe extern "C" fn fc_parabola_coefficients(
    p: *const FcParabola,
    a_out: *mut f64,
    b_out: *mut f64,
    c_out: *mut f64,
) -> FcStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        write_matrix(a_out, &p.0.a().to_matrix());
        write_matrix(b_out, &p.0.b().to_matrix());
        write_matrix(c_out, &p.0.c().to_matrix());
        Ok(())
    })
}

/// Validated manifold data: `a_prime` is `m×m`, `a_dblprime` is `r×m`,
/// `lattice` is `m×m`, all row-major.
///
/// # Safety
/// Buffers must hold the stated number of doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_manifold_build(
    n: usize,
    m: usize,
    r: usize,
    a_prime: *const f64,
    a_dblprime: *const f64,
    lattice: *const f64,
    out: *mut *mut FcManifold,
) -> FcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let data = ManifoldData::build(
            n,
            &read_matrix(a_prime, m, m)?,
            &read_matrix(a_dblprime, r, m)?,
            &read_matrix(lattice, m, m)?,
        )
        .map_err(fail)?;
        put(out, FcManifold(data));
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_manifold_example_4d(out: *mut *mut FcManifold) -> FcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        put(out, FcManifold(example_4d()));
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_manifold_example_5d(t: f64, r: f64, out: *mut *mut FcManifold) -> FcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        put(out, FcManifold(example_5d(t, r).map_err(fail)?));
        Ok(())
    })
}

/// # Safety
/// `mf` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fc_manifold_free(mf: *mut FcManifold) {
    if !mf.is_null() {
        drop(Box::from_raw(mf));
    }
}

/// # Safety
/// `mf` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_manifold_signature(mf: *const FcManifold, out: *mut FcSignature) -> FcStatus {
    guard(|| {
        let mf = mf.as_ref().ok_or_else(null)?;
        let out = out.as_mut().ok_or_else(null)?;
        *out = mf.0.signature().into();
        Ok(())
    })
}

/// # Safety
/// `mf` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_char_polynomial(mf: *const FcManifold, out: *mut *mut FcParabola) -> FcStatus {
    guard(|| {
        let mf = mf.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        put(out, FcParabola(char_polynomial(&mf.0)));
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_is_characteristic(
    p: *const FcParabola,
    n: usize,
    tol: f64,
    out: *mut FcCharacteristic,
) -> FcStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        let out = out.as_mut().ok_or_else(null)?;
        let v = is_characteristic(&p.0, n, tol).map_err(fail)?;
        *out = FcCharacteristic {
            characteristic: v.characteristic,
            poabc: v.poabc,
            schur_psd: v.schur_psd,
            signature: v.signature.into(),
        };
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_realize(p: *const FcParabola, n: usize, tol: f64, out: *mut *mut FcManifold) -> FcStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        put(out, FcManifold(realize(&p.0, n, tol).map_err(fail)?));
        Ok(())
    })
}

/// Writes the `m` canonical spectral values to `values_out`.
///
/// # Safety
/// `p` must be a live handle; `values_out` must hold `m` doubles and
/// `degenerate_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_affine_spectrum(
    p: *const FcParabola,
    tol: f64,
    values_out: *mut f64,
    degenerate_out: *mut bool,
) -> FcStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        if values_out.is_null() || degenerate_out.is_null() {
            return Err(null());
        }
        let sp = affine_spectrum(&p.0, tol).map_err(fail)?;
        slice::from_raw_parts_mut(values_out, sp.values.len()).copy_from_slice(&sp.values);
        *degenerate_out = sp.degenerate;
        Ok(())
    })
}

/// Real equivalence of `p1` and `p2` at dimension `n`. On `Yes` the witness
/// is written to `x_out` (`m*m` doubles), `alpha_out` and `beta_out` when
/// those are non-null.
///
/// # Safety
/// Handles must be live; `verdict_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_almost_equivalent(
    p1: *const FcParabola,
    p2: *const FcParabola,
    n: usize,
    tol: f64,
    verdict_out: *mut FcEquivalence,
    x_out: *mut f64,
    alpha_out: *mut f64,
    beta_out: *mut f64,
) -> FcStatus {
    guard(|| {
        let (p1, p2) = (p1.as_ref().ok_or_else(null)?, p2.as_ref().ok_or_else(null)?);
        let verdict_out = verdict_out.as_mut().ok_or_else(null)?;
        *verdict_out = match almost_equivalent(&p1.0, &p2.0, n, tol).map_err(fail)? {
            Verdict::Yes(cert) => {
                write_matrix(x_out, &cert.x);
                if let Some(a) = alpha_out.as_mut() {
                    *a = cert.alpha;
                }
                if let Some(b) = beta_out.as_mut() {
                    *b = cert.beta;
                }
                FcEquivalence::Yes
            }
            Verdict::No(_) => FcEquivalence::No,
            Verdict::Unknown(_) => FcEquivalence::Unknown,
        };
        Ok(())
    })
}
