//! C ABI for the spin-j Chebyshev operator calculus.
//!
//! Conventions:
//! * angular momenta and projections cross the boundary as twice their value
//!   (`twice_j = 3` means `j = 3/2`), so every quantum number is an integer;
//! * every fallible call returns a status code and writes its result through
//!   an out-pointer; `SPINCHEB_STATUS_OK` (0) means success;
//! * matrices are written row-major into caller-allocated buffers of length
//!   `(2j+1)^2`, basis ordered by `m` ascending from `-j`;
//! * the table type is an opaque handle created by `spincheb_cheb_table_new`
//!   and released by `spincheb_cheb_table_free`.

use std::ffi::{c_char, c_double, c_int};

use spincheb::angular::{clebsch_gordan, generalized_character, legendre_p, wigner_small_d};
use spincheb::cheb::{cheb_scalar, ChebTable};
use spincheb::half::HalfInt;
use spincheb::transitions::{
    meckler_probability, spin_flip_extreme, spin_flip_next, TransitionSpec,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum SpinchebStatus {
    /// Success.
    Ok = 0,
    /// A quantum number, rank, or range argument was invalid.
    InvalidArgument = 1,
    /// A required pointer was null.
    NullPointer = 2,
}

/// Opaque table of `f_lambda^(j)(m)` values for one `j`.
pub struct SpinchebChebTable {
    inner: ChebTable,
}

static VERSION: &str = concat!("spincheb/", env!("CARGO_PKG_VERSION"), "\0");

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn spincheb_version() -> *const c_char {
    VERSION.as_ptr() as *const c_char
}

/// Static human-readable message for a status code.
#[no_mangle]
pub extern "C" fn spincheb_status_message(status: c_int) -> *const c_char {
    let msg: &'static str = match status {
        0 => "ok\0",
        1 => "invalid argument\0",
        2 => "null pointer\0",
        _ => "unknown status\0",
    };
    msg.as_ptr() as *const c_char
}

fn write_out(out: *mut c_double, value: f64) -> SpinchebStatus {
    if out.is_null() {
        return SpinchebStatus::NullPointer;
    }
    // SAFETY: caller guarantees `out` points to a writable double.
    unsafe { *out = value };
    SpinchebStatus::Ok
}

/// Chebyshev polynomial of a discrete variable, `f_lambda^(j)(m)`.
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn spincheb_cheb(
    twice_j: c_int,
    lambda: u32,
    twice_m: c_int,
    out: *mut c_double,
) -> SpinchebStatus {
    match cheb_scalar(
        HalfInt::from_twice(twice_j),
        lambda,
        HalfInt::from_twice(twice_m),
    ) {
        Ok(v) => write_out(out, v),
        Err(_) => SpinchebStatus::InvalidArgument,
    }
}

/// Clebsch-Gordan coefficient `C^{c gamma}_{a alpha b beta}`; all quantum
/// numbers are twice their value.
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn spincheb_clebsch_gordan(
    twice_a: c_int,
    twice_alpha: c_int,
    twice_b: c_int,
    twice_beta: c_int,
    twice_c: c_int,
    twice_gamma: c_int,
    out: *mut c_double,
) -> SpinchebStatus {
    match clebsch_gordan(
        HalfInt::from_twice(twice_a),
        HalfInt::from_twice(twice_alpha),
        HalfInt::from_twice(twice_b),
        HalfInt::from_twice(twice_beta),
        HalfInt::from_twice(twice_c),
        HalfInt::from_twice(twice_gamma),
    ) {
        Ok(v) => write_out(out, v),
        Err(_) => SpinchebStatus::InvalidArgument,
    }
}

/// Legendre polynomial `P_l(x)`.
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn spincheb_legendre_p(l: u32, x: c_double, out: *mut c_double) -> SpinchebStatus {
    write_out(out, legendre_p(l, x))
}

/// Generalized character `chi_lambda^(j)(psi)`.
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn spincheb_generalized_character(
    twice_j: c_int,
    lambda: u32,
    psi: c_double,
    out: *mut c_double,
) -> SpinchebStatus {
    match generalized_character(HalfInt::from_twice(twice_j), lambda, psi) {
        Ok(v) => write_out(out, v),
        Err(_) => SpinchebStatus::InvalidArgument,
    }
}

/// Transition probability `P^(j)_{m m'}` at relative axis angle `cos beta`.
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn spincheb_meckler_probability(
    twice_j: c_int,
    twice_m: c_int,
    twice_mp: c_int,
    cos_beta: c_double,
    out: *mut c_double,
) -> SpinchebStatus {
    let spec = match TransitionSpec::from_cos_beta(
        HalfInt::from_twice(twice_j),
        HalfInt::from_twice(twice_m),
        HalfInt::from_twice(twice_mp),
        cos_beta,
    ) {
        Ok(s) => s,
        Err(_) => return SpinchebStatus::InvalidArgument,
    };
    match meckler_probability(&spec) {
        Ok(v) => write_out(out, v),
        Err(_) => SpinchebStatus::InvalidArgument,
    }
}

/// Closed-form extreme spin flip `P^(j)_{j,-j} = sin^{4j}(beta/2)`.
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn spincheb_spin_flip_extreme(
    twice_j: c_int,
    beta: c_double,
    out: *mut c_double,
) -> SpinchebStatus {
    if twice_j < 0 {
        return SpinchebStatus::InvalidArgument;
    }
    write_out(out, spin_flip_extreme(HalfInt::from_twice(twice_j), beta))
}

/// Closed-form next-to-extreme spin flip `P^(j)_{j-1,-(j-1)}`.
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn spincheb_spin_flip_next(
    twice_j: c_int,
    beta: c_double,
    out: *mut c_double,
) -> SpinchebStatus {
    if twice_j < 2 {
        return SpinchebStatus::InvalidArgument;
    }
    write_out(out, spin_flip_next(HalfInt::from_twice(twice_j), beta))
}

/// Reduced rotation matrix `d^j(beta)` written row-major into a
/// caller-allocated buffer of length `(2j+1)^2`.
///
/// # Safety
/// `out` must point to at least `(twice_j + 1)^2` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn spincheb_wigner_small_d(
    twice_j: c_int,
    beta: c_double,
    out: *mut c_double,
) -> SpinchebStatus {
    if out.is_null() {
        return SpinchebStatus::NullPointer;
    }
    let d = match wigner_small_d(HalfInt::from_twice(twice_j), beta) {
        Ok(d) => d,
        Err(_) => return SpinchebStatus::InvalidArgument,
    };
    let dim = d.nrows();
    for r in 0..dim {
        for c in 0..dim {
            // SAFETY: caller guarantees the buffer length.
            unsafe { *out.add(r * dim + c) = d[(r, c)] };
        }
    }
    SpinchebStatus::Ok
}

/// Builds the full `f_lambda^(j)(m)` table; the handle must be released with
/// `spincheb_cheb_table_free`.
///
/// # Safety
/// `out` must point to a writable handle slot.
#[no_mangle]
pub unsafe extern "C" fn spincheb_cheb_table_new(
    twice_j: c_int,
    out: *mut *mut SpinchebChebTable,
) -> SpinchebStatus {
    if out.is_null() {
        return SpinchebStatus::NullPointer;
    }
    match ChebTable::build(HalfInt::from_twice(twice_j)) {
        Ok(inner) => {
            let boxed = Box::new(SpinchebChebTable { inner });
            // SAFETY: out checked non-null above.
            unsafe { *out = Box::into_raw(boxed) };
            SpinchebStatus::Ok
        }
        Err(_) => SpinchebStatus::InvalidArgument,
    }
}

/// Multiplet dimension `2j + 1` of a table.
///
/// # Safety
/// `table` must be a live handle from `spincheb_cheb_table_new`.
#[no_mangle]
pub unsafe extern "C" fn spincheb_cheb_table_dim(
    table: *const SpinchebChebTable,
    out: *mut u32,
) -> SpinchebStatus {
    if table.is_null() || out.is_null() {
        return SpinchebStatus::NullPointer;
    }
    // SAFETY: caller guarantees a live handle.
    let t = unsafe { &*table };
    unsafe { *out = t.inner.j().dimension() as u32 };
    SpinchebStatus::Ok
}

/// Looks up `f_lambda^(j)(m)` in a table.
///
/// # Safety
/// `table` must be a live handle from `spincheb_cheb_table_new`.
#[no_mangle]
pub unsafe extern "C" fn spincheb_cheb_table_value(
    table: *const SpinchebChebTable,
    lambda: u32,
    twice_m: c_int,
    out: *mut c_double,
) -> SpinchebStatus {
    if table.is_null() {
        return SpinchebStatus::NullPointer;
    }
    // SAFETY: caller guarantees a live handle.
    let t = unsafe { &*table };
    let j = t.inner.j();
    let m = HalfInt::from_twice(twice_m);
    if lambda > j.twice() as u32 || !m.is_projection_of(j) {
        return SpinchebStatus::InvalidArgument;
    }
    write_out(out, t.inner.value(lambda, m))
}

/// Releases a table handle; a null pointer is a no-op.
///
/// # Safety
/// `table` must be null or a handle from `spincheb_cheb_table_new` that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn spincheb_cheb_table_free(table: *mut SpinchebChebTable) {
    if !table.is_null() {
        // SAFETY: caller guarantees ownership.
        drop(unsafe { Box::from_raw(table) });
    }
}
