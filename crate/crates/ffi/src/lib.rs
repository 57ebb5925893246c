//! C interface to `czs-core`.
//!
//! Every function returns a [`CzsStatus`]; results come back through out
//! pointers. Circuits are opaque [`CzsCircuit`] handles released with
//! [`czs_circuit_free`], and strings produced here are released with
//! [`czs_string_free`]. After a non-`CZS_STATUS_OK` status,
//! [`czs_last_error_message`] describes the failure on the calling thread.
//! Panics never cross the boundary; they surface as `CZS_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use czs_core::circuit::{parse_circuit, serialize_circuit, Circuit, Topology};
use czs_core::cli::{classify_report, CliError};
use czs_core::entangle::{ghz_circuit, ParamSpec};
use czs_core::group::PairSet;
use czs_core::optimizer::optimize;
use czs_core::sim::{enumerate_group, equivalent};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CzsStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Circuit text or a pair list could not be parsed.
    Parse = 3,
    /// The arguments are outside the supported domain.
    Domain = 4,
    /// An optimized circuit failed re-verification.
    Verification = 5,
    /// A bug inside the library (a caught panic).
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CzsTopology {
    Complete = 0,
    Line = 1,
}

impl From<CzsTopology> for Topology {
    fn from(t: CzsTopology) -> Self {
        match t {
            CzsTopology::Complete => Topology::Complete,
            CzsTopology::Line => Topology::Line,
        }
    }
}

/// Opaque circuit handle.
pub struct CzsCircuit(Circuit);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CzsStatus, String);

impl Failure {
    fn new(status: CzsStatus, message: impl ToString) -> Self {
        Failure(status, message.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `body`, records any failure and converts panics.
fn guard(body: impl FnOnce() -> Outcome) -> CzsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CzsStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal error (panic)".into());
            CzsStatus::Internal
        }
    }
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure::new(CzsStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    non_null(p, name)?;
    CStr::from_ptr(p).to_str().map_err(|_| Failure::new(CzsStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
unsafe fn circuit<'a>(p: *const CzsCircuit, name: &str) -> Result<&'a Circuit, Failure> {
    non_null(p, name)?;
    Ok(&(*p).0)
}

fn string_out(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior nuls removed").into_raw()
}

fn domain(e: impl ToString) -> Failure {
    Failure::new(CzsStatus::Domain, e)
}

/// Message for the last failed call on this thread, or null after a
/// success. The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn czs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses circuit text (`qubits k` header, then `cz i j` / `swap i j` /
/// `h q` / `x q` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn czs_circuit_parse(text: *const c_char, out: *mut *mut CzsCircuit) -> CzsStatus {
    guard(|| {
        non_null(out, "out")?;
        let text = read_str(text, "text")?;
        let c = parse_circuit(text).map_err(|e| Failure::new(CzsStatus::Parse, e))?;
        *out = Box::into_raw(Box::new(CzsCircuit(c)));
        Ok(())
    })
}

/// Releases a circuit handle; null is ignored.
///
/// # Safety
/// `c` must be null or a handle from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn czs_circuit_free(c: *mut CzsCircuit) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of qubits and gates of a circuit.
///
/// # Safety
/// `c` must be a live handle; `qubits` and `gates` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn czs_circuit_shape(c: *const CzsCircuit, qubits: *mut usize, gates: *mut usize) -> CzsStatus {
    guard(|| {
        let c = circuit(c, "circuit")?;
        non_null(qubits, "qubits")?;
        non_null(gates, "gates")?;
        *qubits = c.k();
        *gates = c.len();
        Ok(())
    })
}

/// Serializes a circuit; free the string with [`czs_string_free`].
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn czs_circuit_to_string(c: *const CzsCircuit, out: *mut *mut c_char) -> CzsStatus {
    guard(|| {
        let c = circuit(c, "circuit")?;
        non_null(out, "out")?;
        *out = string_out(serialize_circuit(c));
        Ok(())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn czs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Optimizes a c-Z/SWAP circuit and checks the result against the input.
/// `exact` selects breadth-first search (at most 5 qubits); `budget` bounds
/// the line-topology search.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn czs_optimize(
    c: *const CzsCircuit,
    topology: CzsTopology,
    budget: usize,
    exact: bool,
    out: *mut *mut CzsCircuit,
) -> CzsStatus {
    guard(|| {
        let input = circuit(c, "circuit")?;
        non_null(out, "out")?;
        let result = optimize(input, topology.into(), budget, exact).map_err(domain)?;
        if !equivalent(input, &result).map_err(domain)? {
            return Err(Failure::new(CzsStatus::Verification, "optimized circuit differs from the input"));
        }
        *out = Box::into_raw(Box::new(CzsCircuit(result)));
        Ok(())
    })
}

/// Whether two circuits implement exactly the same unitary.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn czs_equivalent(a: *const CzsCircuit, b: *const CzsCircuit, out: *mut bool) -> CzsStatus {
    guard(|| {
        let (a, b) = (circuit(a, "a")?, circuit(b, "b")?);
        non_null(out, "out")?;
        *out = equivalent(a, b).map_err(domain)?;
        Ok(())
    })
}

/// A circuit preparing GHZ_k from |0…0⟩.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn czs_ghz_circuit(qubits: usize, out: *mut *mut CzsCircuit) -> CzsStatus {
    guard(|| {
        non_null(out, "out")?;
        let c = ghz_circuit(qubits).map_err(domain)?;
        *out = Box::into_raw(Box::new(CzsCircuit(c)));
        Ok(())
    })
}

/// Order and Cayley-graph diameter of the c-Z/SWAP group on `qubits`
/// qubits (at most 5).
///
/// # Safety
/// `order` and `diameter` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn czs_group_stats(
    qubits: usize,
    topology: CzsTopology,
    order: *mut u64,
    diameter: *mut u32,
) -> CzsStatus {
    guard(|| {
        non_null(order, "order")?;
        non_null(diameter, "diameter")?;
        let table = enumerate_group(qubits, topology.into()).map_err(domain)?;
        *order = table.order() as u64;
        *diameter = table.diameter();
        Ok(())
    })
}

/// Classification report for `Z_E ⊗ (a|0⟩ + b|1⟩)` with parameters drawn
/// from `seed`. `pairs` is a list such as `"01,12"`. Free the report with
/// [`czs_string_free`].
///
/// # Safety
/// `pairs` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn czs_classify(
    qubits: usize,
    pairs: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> CzsStatus {
    guard(|| {
        non_null(out, "out")?;
        let pairs = read_str(pairs, "pairs")?;
        let e = PairSet::parse(qubits, pairs).map_err(|e| Failure::new(CzsStatus::Parse, e))?;
        let report = classify_report(&e, &ParamSpec::seeded(qubits, seed)).map_err(|e: CliError| domain(e))?;
        *out = string_out(report.to_string());
        Ok(())
    })
}
