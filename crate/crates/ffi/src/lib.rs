//! C ABI for the zenomata library.
//!
//! Conventions:
//! - Objects are opaque handles created by `zm_*` constructors and released
//!   by the matching `zm_*_free`; freeing NULL is a no-op.
//! - Fallible calls return a [`ZmStatus`]; on failure the out-parameters are
//!   left untouched and `zm_last_error_message` carries a description until
//!   the next failing call on the same thread.
//! - Returned `char*` values are heap strings owned by the caller and must
//!   be released with `zm_string_free`.
//! - All string parameters are NUL-terminated UTF-8.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use zenomata::automaton::{AutomatonError, ReversibleAutomaton};
use zenomata::logic::{build_partition_logic, experiment_partition, partitions_up_to, LogicError, PartitionLogic};
use zenomata::perm::{PermError, Permutation};
use zenomata::qubit::fixed_point_not;
use zenomata::zeno::{diagonal_adversary, run_zeno, DeciderSpec, ToyProgram, ZenoError, ZenoSchedule};

/// Result code of a fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZmStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text did not parse (file formats, encodings, map notation).
    Parse = 3,
    /// The inputs were well-formed but violated a library contract.
    Domain = 4,
}

/// Opaque reversible automaton handle.
pub struct ZmAutomaton(ReversibleAutomaton);

/// Opaque permutation handle.
pub struct ZmPermutation(Permutation);

/// Opaque partition-logic handle.
pub struct ZmLogic(PartitionLogic);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: ZmStatus, message: impl Into<String>) -> ZmStatus {
    let text = CString::new(message.into().replace('\0', " "))
        .unwrap_or_else(|_| CString::new("error message unavailable").expect("static"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
    status
}

fn automaton_status(err: &AutomatonError) -> ZmStatus {
    match err {
        AutomatonError::Format(_) => ZmStatus::Parse,
        _ => ZmStatus::Domain,
    }
}

fn perm_status(err: &PermError) -> ZmStatus {
    match err {
        PermError::InvalidMap(_) | PermError::InvalidMatrix(_) => ZmStatus::Parse,
        _ => ZmStatus::Domain,
    }
}

fn zeno_status(err: &ZenoError) -> ZmStatus {
    match err {
        ZenoError::InvalidEncoding(_) => ZmStatus::Parse,
        _ => ZmStatus::Domain,
    }
}

fn logic_status(_: &LogicError) -> ZmStatus {
    ZmStatus::Domain
}

/// Reads a UTF-8 argument string.
///
/// # Safety
/// `ptr` must be NULL or point at a NUL-terminated string.
unsafe fn arg_str<'a>(ptr: *const c_char) -> Result<&'a str, ZmStatus> {
    if ptr.is_null() {
        return Err(fail(ZmStatus::NullPointer, "string argument is NULL"));
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|e| fail(ZmStatus::InvalidUtf8, e.to_string()))
}

fn give_string(text: String) -> *mut c_char {
    CString::new(text.replace('\0', " "))
        .expect("NUL bytes stripped")
        .into_raw()
}

/// Writes `value` through `out`.
///
/// # Safety
/// `out` must be NULL or valid for a single write.
unsafe fn give<T>(out: *mut T, value: T) -> ZmStatus {
    if out.is_null() {
        return fail(ZmStatus::NullPointer, "out parameter is NULL");
    }
    unsafe { out.write(value) };
    ZmStatus::Ok
}

/// Message describing the most recent failure on this thread, or NULL.
/// The pointer stays valid until the next failing call on the thread.
#[no_mangle]
pub extern "C" fn zm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |text| text.as_ptr())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be a pointer previously returned by a `zm_*` call and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn zm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

// ---------------------------------------------------------------------------
// automaton
// ---------------------------------------------------------------------------

/// Parses the automaton file format (JSON with states/inputs/delta/lambda)
/// and validates reversibility.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_from_json(
    json: *const c_char,
    out: *mut *mut ZmAutomaton,
) -> ZmStatus {
    let text = match unsafe { arg_str(json) } {
        Ok(text) => text,
        Err(status) => return status,
    };
    match ReversibleAutomaton::from_json(text) {
        Ok(automaton) => unsafe { give(out, Box::into_raw(Box::new(ZmAutomaton(automaton)))) },
        Err(e) => fail(automaton_status(&e), e.to_string()),
    }
}

/// # Safety
/// `automaton` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_free(automaton: *mut ZmAutomaton) {
    if !automaton.is_null() {
        drop(unsafe { Box::from_raw(automaton) });
    }
}

/// Number of states, or 0 for NULL.
///
/// # Safety
/// `automaton` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_state_count(automaton: *const ZmAutomaton) -> usize {
    unsafe { automaton.as_ref() }.map_or(0, |a| a.0.n_states())
}

/// Number of input/output symbols, or 0 for NULL.
///
/// # Safety
/// `automaton` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_input_count(automaton: *const ZmAutomaton) -> usize {
    unsafe { automaton.as_ref() }.map_or(0, |a| a.0.n_inputs())
}

/// Serializes back to the automaton file format. NULL input gives NULL.
///
/// # Safety
/// `automaton` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_to_json(automaton: *const ZmAutomaton) -> *mut c_char {
    unsafe { automaton.as_ref() }
        .map_or(std::ptr::null_mut(), |a| give_string(a.0.to_json()))
}

/// Graphviz rendering of the transition graph. NULL input gives NULL.
///
/// # Safety
/// `automaton` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_to_dot(automaton: *const ZmAutomaton) -> *mut c_char {
    unsafe { automaton.as_ref() }
        .map_or(std::ptr::null_mut(), |a| give_string(a.0.to_dot()))
}

/// One combined step `(state, input) -> (next state, output)`.
///
/// # Safety
/// Pointer arguments must satisfy the module conventions; both out
/// parameters must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_step(
    automaton: *const ZmAutomaton,
    state: *const c_char,
    input: *const c_char,
    out_state: *mut *mut c_char,
    out_output: *mut *mut c_char,
) -> ZmStatus {
    let Some(handle) = (unsafe { automaton.as_ref() }) else {
        return fail(ZmStatus::NullPointer, "automaton handle is NULL");
    };
    let (state, input) = match unsafe { (arg_str(state), arg_str(input)) } {
        (Ok(s), Ok(i)) => (s, i),
        (Err(status), _) | (_, Err(status)) => return status,
    };
    match handle.0.step(state, input) {
        Ok((next, output)) => {
            let status = unsafe { give(out_state, give_string(next)) };
            if status != ZmStatus::Ok {
                return status;
            }
            unsafe { give(out_output, give_string(output)) }
        }
        Err(e) => fail(automaton_status(&e), e.to_string()),
    }
}

/// Runs an input word from a start state. Outputs are returned as a
/// comma-joined list.
///
/// # Safety
/// Pointer arguments must satisfy the module conventions.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_run_word(
    automaton: *const ZmAutomaton,
    start: *const c_char,
    word: *const c_char,
    out_outputs: *mut *mut c_char,
    out_final_state: *mut *mut c_char,
) -> ZmStatus {
    let Some(handle) = (unsafe { automaton.as_ref() }) else {
        return fail(ZmStatus::NullPointer, "automaton handle is NULL");
    };
    let (start, word_text) = match unsafe { (arg_str(start), arg_str(word)) } {
        (Ok(s), Ok(w)) => (s, w),
        (Err(status), _) | (_, Err(status)) => return status,
    };
    let symbols = match handle.0.parse_word(word_text) {
        Ok(symbols) => symbols,
        Err(e) => return fail(automaton_status(&e), e.to_string()),
    };
    match handle.0.run_word(start, &symbols) {
        Ok((outputs, final_state)) => {
            let status = unsafe { give(out_outputs, give_string(outputs.join(","))) };
            if status != ZmStatus::Ok {
                return status;
            }
            unsafe { give(out_final_state, give_string(final_state)) }
        }
        Err(e) => fail(automaton_status(&e), e.to_string()),
    }
}

/// Builds the automaton that undoes every step of the argument.
///
/// # Safety
/// `automaton` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_reverse(
    automaton: *const ZmAutomaton,
    out: *mut *mut ZmAutomaton,
) -> ZmStatus {
    let Some(handle) = (unsafe { automaton.as_ref() }) else {
        return fail(ZmStatus::NullPointer, "automaton handle is NULL");
    };
    unsafe { give(out, Box::into_raw(Box::new(ZmAutomaton(handle.0.reverse())))) }
}

/// Extracts the permutation of `(state, symbol)` pair indices.
///
/// # Safety
/// `automaton` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_permutation(
    automaton: *const ZmAutomaton,
    out: *mut *mut ZmPermutation,
) -> ZmStatus {
    let Some(handle) = (unsafe { automaton.as_ref() }) else {
        return fail(ZmStatus::NullPointer, "automaton handle is NULL");
    };
    unsafe {
        give(
            out,
            Box::into_raw(Box::new(ZmPermutation(handle.0.to_permutation()))),
        )
    }
}

/// Rebuilds an automaton from a pair permutation with canonical names
/// (`s1..`, `1..`); the permutation degree must equal `states * inputs`.
///
/// # Safety
/// `permutation` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_from_permutation(
    permutation: *const ZmPermutation,
    states: usize,
    inputs: usize,
    out: *mut *mut ZmAutomaton,
) -> ZmStatus {
    let Some(handle) = (unsafe { permutation.as_ref() }) else {
        return fail(ZmStatus::NullPointer, "permutation handle is NULL");
    };
    match ReversibleAutomaton::from_permutation(&handle.0, states, inputs) {
        Ok(automaton) => unsafe { give(out, Box::into_raw(Box::new(ZmAutomaton(automaton)))) },
        Err(e) => fail(automaton_status(&e), e.to_string()),
    }
}

/// Groups states by the outputs the word produces; returns the canonical
/// partition rendering such as `{{s1},{s2,s3}}`.
///
/// # Safety
/// Pointer arguments must satisfy the module conventions.
#[no_mangle]
pub unsafe extern "C" fn zm_automaton_experiment(
    automaton: *const ZmAutomaton,
    word: *const c_char,
    out_partition: *mut *mut c_char,
) -> ZmStatus {
    let Some(handle) = (unsafe { automaton.as_ref() }) else {
        return fail(ZmStatus::NullPointer, "automaton handle is NULL");
    };
    let word_text = match unsafe { arg_str(word) } {
        Ok(w) => w,
        Err(status) => return status,
    };
    let symbols = match handle.0.parse_word(word_text) {
        Ok(symbols) => symbols,
        Err(e) => return fail(automaton_status(&e), e.to_string()),
    };
    match experiment_partition(&handle.0, &symbols) {
        Ok(partition) => unsafe { give(out_partition, give_string(partition.to_string())) },
        Err(e) => fail(logic_status(&e), e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// permutation
// ---------------------------------------------------------------------------

/// Parses 1-based one-line notation such as `3,2,4,1`.
///
/// # Safety
/// `one_line` must be a NUL-terminated string; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn zm_permutation_parse(
    one_line: *const c_char,
    out: *mut *mut ZmPermutation,
) -> ZmStatus {
    let text = match unsafe { arg_str(one_line) } {
        Ok(text) => text,
        Err(status) => return status,
    };
    match Permutation::parse_one_line(text) {
        Ok(perm) => unsafe { give(out, Box::into_raw(Box::new(ZmPermutation(perm)))) },
        Err(e) => fail(perm_status(&e), e.to_string()),
    }
}

/// # Safety
/// `permutation` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_permutation_free(permutation: *mut ZmPermutation) {
    if !permutation.is_null() {
        drop(unsafe { Box::from_raw(permutation) });
    }
}

/// Degree, or 0 for NULL.
///
/// # Safety
/// `permutation` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_permutation_degree(permutation: *const ZmPermutation) -> usize {
    unsafe { permutation.as_ref() }.map_or(0, |p| p.0.degree())
}

/// Least power reaching the identity, or 0 for NULL.
///
/// # Safety
/// `permutation` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_permutation_order(permutation: *const ZmPermutation) -> u64 {
    unsafe { permutation.as_ref() }.map_or(0, |p| p.0.order())
}

/// One-line rendering such as `3,2,4,1`. NULL input gives NULL.
///
/// # Safety
/// `permutation` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_permutation_one_line(
    permutation: *const ZmPermutation,
) -> *mut c_char {
    unsafe { permutation.as_ref() }
        .map_or(std::ptr::null_mut(), |p| give_string(p.0.to_string()))
}

/// Composition applying `first`, then `second`.
///
/// # Safety
/// Both handles must be live; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn zm_permutation_compose(
    first: *const ZmPermutation,
    second: *const ZmPermutation,
    out: *mut *mut ZmPermutation,
) -> ZmStatus {
    let (Some(first), Some(second)) = (unsafe { first.as_ref() }, unsafe { second.as_ref() })
    else {
        return fail(ZmStatus::NullPointer, "permutation handle is NULL");
    };
    match first.0.compose(&second.0) {
        Ok(perm) => unsafe { give(out, Box::into_raw(Box::new(ZmPermutation(perm)))) },
        Err(e) => fail(perm_status(&e), e.to_string()),
    }
}

/// The inverse permutation.
///
/// # Safety
/// `permutation` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn zm_permutation_inverse(
    permutation: *const ZmPermutation,
    out: *mut *mut ZmPermutation,
) -> ZmStatus {
    let Some(handle) = (unsafe { permutation.as_ref() }) else {
        return fail(ZmStatus::NullPointer, "permutation handle is NULL");
    };
    unsafe { give(out, Box::into_raw(Box::new(ZmPermutation(handle.0.inverse())))) }
}

// ---------------------------------------------------------------------------
// partition logic
// ---------------------------------------------------------------------------

/// Pastes the experiment partitions of all words up to `max_len` into a
/// partition logic.
///
/// # Safety
/// `automaton` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn zm_logic_build(
    automaton: *const ZmAutomaton,
    max_len: usize,
    out: *mut *mut ZmLogic,
) -> ZmStatus {
    let Some(handle) = (unsafe { automaton.as_ref() }) else {
        return fail(ZmStatus::NullPointer, "automaton handle is NULL");
    };
    let found = match partitions_up_to(&handle.0, max_len) {
        Ok(found) => found,
        Err(e) => return fail(logic_status(&e), e.to_string()),
    };
    let partitions: Vec<_> = found.into_iter().map(|d| d.partition).collect();
    match build_partition_logic(&partitions) {
        Ok(logic) => unsafe { give(out, Box::into_raw(Box::new(ZmLogic(logic)))) },
        Err(e) => fail(logic_status(&e), e.to_string()),
    }
}

/// # Safety
/// `logic` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_logic_free(logic: *mut ZmLogic) {
    if !logic.is_null() {
        drop(unsafe { Box::from_raw(logic) });
    }
}

/// Number of elements, or 0 for NULL.
///
/// # Safety
/// `logic` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_logic_element_count(logic: *const ZmLogic) -> usize {
    unsafe { logic.as_ref() }.map_or(0, |l| l.0.element_count())
}

/// True iff the logic is bottom, top and two incomparable complementary
/// pairs. False for NULL.
///
/// # Safety
/// `logic` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_logic_is_mo2(logic: *const ZmLogic) -> bool {
    unsafe { logic.as_ref() }.is_some_and(|l| l.0.is_mo2())
}

/// A rendered distributivity violation such as `x={s1}, y={s2}, z={s1,s3}`,
/// or NULL when the logic is distributive (or the handle is NULL).
///
/// # Safety
/// `logic` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_logic_nondistributive_triple(
    logic: *const ZmLogic,
) -> *mut c_char {
    let Some(handle) = (unsafe { logic.as_ref() }) else {
        return std::ptr::null_mut();
    };
    match handle.0.find_nondistributive_triple() {
        Some((x, y, z)) => give_string(format!(
            "x={}, y={}, z={}",
            handle.0.render_element(x),
            handle.0.render_element(y),
            handle.0.render_element(z)
        )),
        None => std::ptr::null_mut(),
    }
}

/// Structured text export: element list plus order pairs. NULL input gives
/// NULL.
///
/// # Safety
/// `logic` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn zm_logic_render(logic: *const ZmLogic) -> *mut c_char {
    unsafe { logic.as_ref() }.map_or(std::ptr::null_mut(), |l| give_string(l.0.render()))
}

// ---------------------------------------------------------------------------
// schedules, runs, diagonalization
// ---------------------------------------------------------------------------

/// Proper time after `t` cycles under squeeze factor `k`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn zm_zeno_proper_time(k: f64, t: u64, out: *mut f64) -> ZmStatus {
    match ZenoSchedule::new(k) {
        Ok(schedule) => unsafe { give(out, schedule.proper_time(t)) },
        Err(e) => fail(zeno_status(&e), e.to_string()),
    }
}

/// The finite limit span `k/(1-k)`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn zm_zeno_limit_time(k: f64, out: *mut f64) -> ZmStatus {
    match ZenoSchedule::new(k) {
        Ok(schedule) => unsafe { give(out, schedule.limit_time()) },
        Err(e) => fail(zeno_status(&e), e.to_string()),
    }
}

/// Runs a serialized program under a schedule and returns the outcome as a
/// JSON object (`{"result":"halted",...}`).
///
/// # Safety
/// Pointer arguments must satisfy the module conventions.
#[no_mangle]
pub unsafe extern "C" fn zm_zeno_run(
    program_json: *const c_char,
    input: *const c_char,
    k: f64,
    budget: f64,
    out_outcome: *mut *mut c_char,
) -> ZmStatus {
    let (program_text, input) = match unsafe { (arg_str(program_json), arg_str(input)) } {
        (Ok(p), Ok(i)) => (p, i),
        (Err(status), _) | (_, Err(status)) => return status,
    };
    let schedule = match ZenoSchedule::new(k) {
        Ok(schedule) => schedule,
        Err(e) => return fail(zeno_status(&e), e.to_string()),
    };
    let program = match ToyProgram::decode(program_text) {
        Ok(program) => program,
        Err(e) => return fail(zeno_status(&e), e.to_string()),
    };
    match run_zeno(&program, input, &schedule, budget) {
        Ok(outcome) => {
            let rendered = serde_json::to_string(&outcome).expect("outcome serializes");
            unsafe { give(out_outcome, give_string(rendered)) }
        }
        Err(e) => fail(zeno_status(&e), e.to_string()),
    }
}

/// Confronts a decider (`constant-halts`, `constant-loops`,
/// `step-bounded:N`, `exact-meta`) with its diagonal adversary and returns
/// the certified report as JSON.
///
/// # Safety
/// Pointer arguments must satisfy the module conventions.
#[no_mangle]
pub unsafe extern "C" fn zm_diagonal_report(
    decider: *const c_char,
    out_report: *mut *mut c_char,
) -> ZmStatus {
    let decider_text = match unsafe { arg_str(decider) } {
        Ok(text) => text,
        Err(status) => return status,
    };
    let spec = match DeciderSpec::parse(decider_text) {
        Ok(spec) => spec,
        Err(e) => return fail(zeno_status(&e), e.to_string()),
    };
    let (_, report) = diagonal_adversary(&spec);
    let rendered = serde_json::to_string(&report).expect("report serializes");
    unsafe { give(out_report, give_string(rendered)) }
}

// ---------------------------------------------------------------------------
// qubit fixed point
// ---------------------------------------------------------------------------

/// Amplitudes of the bit-flip fixed point `(|0>+|1>)/sqrt(2)`.
///
/// # Safety
/// All out parameters must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zm_qubit_fixed_point(
    out_a_re: *mut f64,
    out_a_im: *mut f64,
    out_b_re: *mut f64,
    out_b_im: *mut f64,
) -> ZmStatus {
    let (a, b) = fixed_point_not().amplitudes();
    for (out, value) in [
        (out_a_re, a.re),
        (out_a_im, a.im),
        (out_b_re, b.re),
        (out_b_im, b.im),
    ] {
        let status = unsafe { give(out, value) };
        if status != ZmStatus::Ok {
            return status;
        }
    }
    ZmStatus::Ok
}

/// Measurement probabilities of the fixed point (fifty-fifty within float
/// accuracy).
///
/// # Safety
/// Both out parameters must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zm_qubit_fixed_point_probabilities(
    out_p0: *mut f64,
    out_p1: *mut f64,
) -> ZmStatus {
    let (p0, p1) = fixed_point_not().probabilities();
    let status = unsafe { give(out_p0, p0) };
    if status != ZmStatus::Ok {
        return status;
    }
    unsafe { give(out_p1, p1) }
}
