//! C interface to `hgpoly`.
//!
//! Hypergraphs and polynomials are opaque handles owned by the caller and
//! released with the matching `_free` function. Every fallible function
//! returns an [`HgStatus`] and writes its result through an out-pointer;
//! on failure [`hg_last_error_message`] describes the problem. Strings
//! returned by the library must be released with [`hg_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hgpoly::format::{parse_any, to_json};
use hgpoly::iso::{are_isomorphic, canonical_form, count_nonisomorphic_runiform};
use hgpoly::poly::compute;
use hgpoly::{generate_family, Basis, Error, ErrorKind, FamilySpec, GraphPolynomial, Hypergraph, Limits, PolyId};

pub const HG_POLY_CHI: u32 = 0;
pub const HG_POLY_IND: u32 = 1;
pub const HG_POLY_MATCH: u32 = 2;

pub const HG_BASIS_NATIVE: u32 = 0;
pub const HG_BASIS_MONOMIAL: u32 = 1;
pub const HG_BASIS_FALLING: u32 = 2;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgStatus {
    Ok = 0,
    /// Null pointer, bad UTF-8 or an unknown enumeration value.
    InvalidArgument = 1,
    /// The hypergraph or parameters are invalid.
    Validation = 2,
    /// The instance is beyond a feasibility guard.
    Feasibility = 3,
    /// A search budget was exhausted.
    Budget = 4,
    Internal = 5,
}

pub struct HgHypergraph(Hypergraph);

pub struct HgPolynomial(GraphPolynomial);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HgStatus {
    match e.kind() {
        ErrorKind::Validation => HgStatus::Validation,
        ErrorKind::Feasibility => HgStatus::Feasibility,
        ErrorKind::Budget => HgStatus::Budget,
        ErrorKind::Internal => HgStatus::Internal,
    }
}

enum Fail {
    Arg(&'static str),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HgStatus::Ok,
        Ok(Err(Fail::Arg(msg))) => {
            set_error(msg.to_string());
            HgStatus::InvalidArgument
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            HgStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Arg(what))
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail::Arg("null out-pointer"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail::Arg("null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail::Arg("string is not UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no nul bytes").into_raw()
}

fn poly_id(id: u32) -> Result<PolyId, Fail> {
    match id {
        HG_POLY_CHI => Ok(PolyId::Chi),
        HG_POLY_IND => Ok(PolyId::Ind),
        HG_POLY_MATCH => Ok(PolyId::Match),
        _ => Err(Fail::Arg("unknown polynomial id")),
    }
}

fn put_hypergraph(out: *mut *mut HgHypergraph, h: Hypergraph) -> Result<(), Fail> {
    let slot = unsafe { out_ptr(out)? };
    *slot = Box::into_raw(Box::new(HgHypergraph(h)));
    Ok(())
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a hypergraph on `n` vertices. Edge `i` has `sizes[i]` vertices
/// (1-based) stored consecutively in `vertices`.
#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_new(
    n: usize,
    vertices: *const u32,
    sizes: *const usize,
    edge_count: usize,
    out: *mut *mut HgHypergraph,
) -> HgStatus {
    guard(|| {
        let mut edges = Vec::with_capacity(edge_count);
        if edge_count > 0 {
            if sizes.is_null() || vertices.is_null() {
                return Err(Fail::Arg("null edge arrays"));
            }
            let sizes = std::slice::from_raw_parts(sizes, edge_count);
            let total: usize = sizes.iter().sum();
            let flat = std::slice::from_raw_parts(vertices, total);
            let mut at = 0;
            for &s in sizes {
                edges.push(flat[at..at + s].iter().map(|&v| v as usize).collect::<Vec<_>>());
                at += s;
            }
        }
        put_hypergraph(out, Hypergraph::new(n, edges)?)
    })
}

/// Parse the text or JSON hypergraph format.
#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_parse(text: *const c_char, out: *mut *mut HgHypergraph) -> HgStatus {
    guard(|| {
        let s = read_str(text)?;
        put_hypergraph(out, parse_any(s, hgpoly::hypergraph::DEFAULT_MIN_EDGE_SIZE)?)
    })
}

/// Generate a family from its JSON description, e.g.
/// `{"kind":"sunflower","n":7,"p":2,"r":3}`.
#[no_mangle]
pub unsafe extern "C" fn hg_family_from_json(spec: *const c_char, out: *mut *mut HgHypergraph) -> HgStatus {
    guard(|| {
        let s = read_str(spec)?;
        let spec: FamilySpec =
            serde_json::from_str(s).map_err(|e| Error::InvalidFamily(format!("bad family description: {e}")))?;
        put_hypergraph(out, generate_family(&spec)?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_family_sunflower(n: usize, p: usize, r: usize, out: *mut *mut HgHypergraph) -> HgStatus {
    guard(|| put_hypergraph(out, generate_family(&FamilySpec::Sunflower { n, p, r })?))
}

#[no_mangle]
pub unsafe extern "C" fn hg_family_hypercycle(m: usize, r: usize, out: *mut *mut HgHypergraph) -> HgStatus {
    guard(|| put_hypergraph(out, generate_family(&FamilySpec::Hypercycle { m, r })?))
}

/// The hypergraph with a smallest missing proper superset of an edge added;
/// the result has the same chromatic and independence polynomials.
#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_superset_extension(
    h: *const HgHypergraph,
    out: *mut *mut HgHypergraph,
) -> HgStatus {
    guard(|| {
        let h = deref(h, "null hypergraph")?;
        let ext =
            h.0.superset_extension()
                .ok_or(Fail::Lib(Error::InvalidArgument("no edge has a missing proper superset".into())))?;
        put_hypergraph(out, ext)
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_free(h: *mut HgHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Vertex count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_vertex_count(h: *const HgHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.0.n())
}

#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_edge_count(h: *const HgHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.0.edge_count())
}

#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_to_json(h: *const HgHypergraph, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let h = deref(h, "null hypergraph")?;
        *out_ptr(out)? = into_c_string(to_json(&h.0));
        Ok(())
    })
}

/// Compute polynomial `poly` (`HG_POLY_*`) with default limits.
#[no_mangle]
pub unsafe extern "C" fn hg_polynomial_compute(
    h: *const HgHypergraph,
    poly: u32,
    out: *mut *mut HgPolynomial,
) -> HgStatus {
    guard(|| {
        let h = deref(h, "null hypergraph")?;
        let p = compute(poly_id(poly)?, &h.0, &Limits::default())?;
        *out_ptr(out)? = Box::into_raw(Box::new(HgPolynomial(p)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_polynomial_free(p: *mut HgPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// JSON `{"basis":...,"coeffs":[...]}` in basis `HG_BASIS_*`; coefficients
/// are decimal strings.
#[no_mangle]
pub unsafe extern "C" fn hg_polynomial_to_json(p: *const HgPolynomial, basis: u32, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let p = deref(p, "null polynomial")?;
        let q = match basis {
            HG_BASIS_NATIVE => p.0.clone(),
            HG_BASIS_MONOMIAL => p.0.to_basis(Basis::Monomial),
            HG_BASIS_FALLING => p.0.to_basis(Basis::FallingFactorial),
            _ => return Err(Fail::Arg("unknown basis")),
        };
        *out_ptr(out)? = into_c_string(q.to_json());
        Ok(())
    })
}

/// Value at `x` as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn hg_polynomial_evaluate(p: *const HgPolynomial, x: i64, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let p = deref(p, "null polynomial")?;
        *out_ptr(out)? = into_c_string(p.0.evaluate(x).to_string());
        Ok(())
    })
}

/// Exact equality, independent of basis.
#[no_mangle]
pub unsafe extern "C" fn hg_polynomial_equal(
    a: *const HgPolynomial,
    b: *const HgPolynomial,
    out: *mut bool,
) -> HgStatus {
    guard(|| {
        let (a, b) = (deref(a, "null polynomial")?, deref(b, "null polynomial")?);
        *out_ptr(out)? = a.0 == b.0;
        Ok(())
    })
}

/// 64-bit digest of the canonical form; equal for isomorphic hypergraphs.
#[no_mangle]
pub unsafe extern "C" fn hg_canonical_digest(h: *const HgHypergraph, out: *mut u64) -> HgStatus {
    guard(|| {
        let h = deref(h, "null hypergraph")?;
        *out_ptr(out)? = canonical_form(&h.0, &Limits::default())?.digest();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_are_isomorphic(a: *const HgHypergraph, b: *const HgHypergraph, out: *mut bool) -> HgStatus {
    guard(|| {
        let (a, b) = (deref(a, "null hypergraph")?, deref(b, "null hypergraph")?);
        *out_ptr(out)? = are_isomorphic(&a.0, &b.0, &Limits::default())?;
        Ok(())
    })
}

/// Number of non-isomorphic `r`-uniform hypergraphs on `n` vertices, as a
/// decimal string.
#[no_mangle]
pub unsafe extern "C" fn hg_count_nonisomorphic_uniform(n: usize, r: usize, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let c = count_nonisomorphic_runiform(n, r)?;
        *out_ptr(out)? = into_c_string(c.to_string());
        Ok(())
    })
}
