//! C ABI over the monochrome library.
//!
//! Graphs and certificates are opaque handles created and freed by this
//! library. Every function returns a [`MonoStatus`]; on failure the
//! message is available from [`mono_last_error`] on the same thread.
//! Strings returned to the caller are freed with [`mono_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use monochrome::exact_partition::{min_mono_cycle_partition, verify_certificate, PartitionResult};
use monochrome::generators::{gen_random_min_degree, gen_sharpness, gen_three_colour};
use monochrome::graph::io::{graph_to_json, multigraph_from_json};
use monochrome::heuristic::{heuristic_partition, HeuristicOutcome};
use monochrome::rational::parse_rational;
use monochrome::{ColouredMultiGraph, CyclePartitionCertificate, Error};

/// Opaque coloured (multi-)graph.
pub struct MonoGraph(ColouredMultiGraph);

/// Opaque cycle partition certificate.
pub struct MonoCertificate(CyclePartitionCertificate);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGraph = 4,
    TooLarge = 5,
    Unsat = 6,
    HeuristicFailure = 7,
    InvalidCertificate = 8,
    InvalidArgument = 9,
    Internal = 10,
    Panic = 11,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn status_of(e: &Error) -> MonoStatus {
    match e {
        Error::Parse { .. } => MonoStatus::ParseError,
        Error::InvalidGraph(_) => MonoStatus::InvalidGraph,
        Error::InstanceTooLarge { .. } | Error::BlowupTooLarge { .. } => MonoStatus::TooLarge,
        Error::InfeasibleParameters(_) | Error::PreconditionViolated(_) | Error::MinDegreeTooLow { .. } => {
            MonoStatus::InvalidArgument
        }
        _ => MonoStatus::Internal,
    }
}

fn fail(e: &Error) -> MonoStatus {
    set_error(e.to_string());
    status_of(e)
}

fn guard(f: impl FnOnce() -> MonoStatus) -> MonoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("panic inside the library");
            MonoStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, MonoStatus> {
    if p.is_null() {
        set_error("null string");
        return Err(MonoStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string is not UTF-8");
        MonoStatus::InvalidUtf8
    })
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> MonoStatus {
    *out = Box::into_raw(Box::new(value));
    MonoStatus::Ok
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failure on this thread; valid until the next call.
#[no_mangle]
pub extern "C" fn mono_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub unsafe extern "C" fn mono_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses graph JSON (`{"n": .., "edges": [[u, v, colour], ..]}`).
#[no_mangle]
pub unsafe extern "C" fn mono_graph_from_json(json: *const c_char, out: *mut *mut MonoGraph) -> MonoStatus {
    guard(|| {
        if out.is_null() {
            return MonoStatus::NullPointer;
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match multigraph_from_json(text) {
            Ok(g) => put(out, MonoGraph(g)),
            Err(e) => fail(&e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn mono_graph_to_json(g: *const MonoGraph) -> *mut c_char {
    match g.as_ref() {
        Some(g) => owned_string(graph_to_json(g.0.colouring())),
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn mono_graph_free(g: *mut MonoGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn mono_graph_vertex_count(g: *const MonoGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

#[no_mangle]
pub unsafe extern "C" fn mono_graph_min_degree(g: *const MonoGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.min_degree())
}

/// The sharpness construction; `inner` is 0 (red) or 1 (blue).
#[no_mangle]
pub unsafe extern "C" fn mono_gen_sharpness(m: usize, inner: u8, out: *mut *mut MonoGraph) -> MonoStatus {
    guard(|| {
        if out.is_null() {
            return MonoStatus::NullPointer;
        }
        match gen_sharpness(m, inner) {
            Ok(g) => put(out, MonoGraph(g.to_multigraph())),
            Err(e) => fail(&e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn mono_gen_three_colour(m: usize, out: *mut *mut MonoGraph) -> MonoStatus {
    guard(|| {
        if out.is_null() {
            return MonoStatus::NullPointer;
        }
        match gen_three_colour(m) {
            Ok(g) => put(out, MonoGraph(g.to_multigraph())),
            Err(e) => fail(&e),
        }
    })
}

/// Random graph with minimum degree ⌈delta·n⌉; `delta` is a decimal or a
/// fraction such as "3/4".
#[no_mangle]
pub unsafe extern "C" fn mono_gen_random(
    n: usize,
    delta: *const c_char,
    red_bias: f64,
    seed: u64,
    out: *mut *mut MonoGraph,
) -> MonoStatus {
    guard(|| {
        if out.is_null() {
            return MonoStatus::NullPointer;
        }
        let d = match read_str(delta).map(parse_rational) {
            Ok(Ok(d)) => d,
            Ok(Err(e)) => return fail(&e),
            Err(s) => return s,
        };
        match gen_random_min_degree(n, &d, red_bias, seed) {
            Ok(g) => put(out, MonoGraph(g.to_multigraph())),
            Err(e) => fail(&e),
        }
    })
}

/// Exact minimum partition with at most `k_max` parts. Returns
/// `MONO_STATUS_UNSAT` when none exists; `*out` is then left untouched.
#[no_mangle]
pub unsafe extern "C" fn mono_solve_exact(
    g: *const MonoGraph,
    k_max: usize,
    out: *mut *mut MonoCertificate,
    k_star: *mut usize,
) -> MonoStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else { return MonoStatus::NullPointer };
        match min_mono_cycle_partition(&g.0, k_max) {
            Ok(PartitionResult::Sat { k_star: k, certificate }) => {
                if !k_star.is_null() {
                    *k_star = k;
                }
                put(out, MonoCertificate(certificate))
            }
            Ok(PartitionResult::Unsat { k_max }) => {
                set_error(format!("no partition into at most {k_max} monochromatic cycles"));
                MonoStatus::Unsat
            }
            Err(e) => fail(&e),
        }
    })
}

/// Heuristic partition into at most three cycles.
#[no_mangle]
pub unsafe extern "C" fn mono_solve_heuristic(
    g: *const MonoGraph,
    gamma: *const c_char,
    out: *mut *mut MonoCertificate,
) -> MonoStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else { return MonoStatus::NullPointer };
        let gamma = match read_str(gamma).map(parse_rational) {
            Ok(Ok(x)) => x,
            Ok(Err(e)) => return fail(&e),
            Err(s) => return s,
        };
        match heuristic_partition(&g.0, &gamma) {
            Ok(HeuristicOutcome::Certificate { certificate, .. }) => put(out, MonoCertificate(certificate)),
            Ok(HeuristicOutcome::Failure { stage, reason }) => {
                set_error(format!("{}: {reason}", stage.name()));
                MonoStatus::HeuristicFailure
            }
            Err(e) => fail(&e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn mono_certificate_from_json(json: *const c_char, out: *mut *mut MonoCertificate) -> MonoStatus {
    guard(|| {
        if out.is_null() {
            return MonoStatus::NullPointer;
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match CyclePartitionCertificate::from_json(text) {
            Ok(c) => put(out, MonoCertificate(c)),
            Err(e) => fail(&e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn mono_certificate_to_json(c: *const MonoCertificate) -> *mut c_char {
    match c.as_ref() {
        Some(c) => owned_string(c.0.to_json()),
        None => ptr::null_mut(),
    }
}

/// Number of non-empty parts, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn mono_certificate_part_count(c: *const MonoCertificate) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

#[no_mangle]
pub unsafe extern "C" fn mono_certificate_free(c: *mut MonoCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// `MONO_STATUS_OK` when the certificate partitions the graph into
/// monochromatic cycles, `MONO_STATUS_INVALID_CERTIFICATE` otherwise.
#[no_mangle]
pub unsafe extern "C" fn mono_verify(g: *const MonoGraph, c: *const MonoCertificate) -> MonoStatus {
    guard(|| {
        let (Some(g), Some(c)) = (g.as_ref(), c.as_ref()) else { return MonoStatus::NullPointer };
        match verify_certificate(&g.0, &c.0) {
            Ok(()) => MonoStatus::Ok,
            Err(v) => {
                set_error(v.to_string());
                MonoStatus::InvalidCertificate
            }
        }
    })
}
