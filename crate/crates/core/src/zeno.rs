//! Geometrically squeezed time schedules and the halting-decider diagonal
//! harness.
//!
//! A schedule with squeeze factor `k` charges the `t`-th machine cycle
//! `k^t` units of outside clock time, so infinitely many cycles fit into
//! the finite span `k/(1-k)`. Toy machines here have finite configuration
//! spaces, which lets a runner with repetition detection realize the
//! "run forever within a finite budget" limit honestly: given at least the
//! limit span, every run ends in a halt or a certified cycle.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Meta-evaluation recursion ceiling for self-referential deciders; when it
/// is exhausted the evaluation assumes divergence to stay total.
pub const META_DEPTH_LIMIT: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZenoError {
    #[error("squeeze factor {0} is outside the open interval (0,1)")]
    InvalidSqueezeFactor(f64),
    #[error("budget {0} must be a nonnegative real")]
    InvalidBudget(f64),
    #[error("invalid encoding: {0}")]
    InvalidEncoding(String),
    #[error("invalid table program: {0}")]
    InvalidProgram(String),
}

/// Geometric proper-time schedule with squeeze factor `0 < k < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoSchedule {
    k: f64,
}

impl ZenoSchedule {
    pub fn new(k: f64) -> Result<Self, ZenoError> {
        if !(k > 0.0 && k < 1.0) {
            return Err(ZenoError::InvalidSqueezeFactor(k));
        }
        Ok(ZenoSchedule { k })
    }

    pub fn squeeze_factor(&self) -> f64 {
        self.k
    }

    /// Outside-clock time after `t` cycles: the partial geometric sum
    /// `k + k^2 + ... + k^t`, computed in closed form.
    pub fn proper_time(&self, t: u64) -> f64 {
        let k = self.k;
        k * (k.powf(t as f64) - 1.0) / (k - 1.0)
    }

    /// The finite span `k/(1-k)` that bounds every partial sum.
    pub fn limit_time(&self) -> f64 {
        self.k / (1.0 - self.k)
    }

    /// Largest cycle count whose proper time fits the budget; `Unbounded`
    /// once the budget covers the limit span.
    pub fn cycles_within(&self, budget: f64) -> Result<CycleBound, ZenoError> {
        if !(budget >= 0.0) {
            return Err(ZenoError::InvalidBudget(budget));
        }
        if budget >= self.limit_time() {
            return Ok(CycleBound::Unbounded);
        }
        let k = self.k;
        // invert the closed form for a guess, then settle locally
        let remainder = 1.0 - budget * (1.0 - k) / k;
        let mut t = if remainder > 0.0 {
            (remainder.ln() / k.ln()).floor().max(0.0) as u64
        } else {
            0
        };
        while self.proper_time(t + 1) <= budget {
            t += 1;
        }
        while t > 0 && self.proper_time(t) > budget {
            t -= 1;
        }
        Ok(CycleBound::Finite(t))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleBound {
    Finite(u64),
    Unbounded,
}

/// What a decider claims about a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Halts,
    Loops,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Halts => write!(f, "halts"),
            Verdict::Loops => write!(f, "loops"),
        }
    }
}

/// A finite-state machine: states `0..states`, a total step map, halting
/// states fixed under the step map, and a start state per input index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableProgram {
    pub states: usize,
    pub step: Vec<usize>,
    pub halting: BTreeSet<usize>,
    pub start: Vec<usize>,
}

impl TableProgram {
    pub fn new(
        states: usize,
        step: Vec<usize>,
        halting: BTreeSet<usize>,
        start: Vec<usize>,
    ) -> Result<Self, ZenoError> {
        let program = TableProgram {
            states,
            step,
            halting,
            start,
        };
        program.validate()?;
        Ok(program)
    }

    fn validate(&self) -> Result<(), ZenoError> {
        if self.states == 0 {
            return Err(ZenoError::InvalidProgram("no states".into()));
        }
        if self.step.len() != self.states {
            return Err(ZenoError::InvalidProgram(format!(
                "step table has {} entries for {} states",
                self.step.len(),
                self.states
            )));
        }
        if let Some(&bad) = self.step.iter().find(|&&s| s >= self.states) {
            return Err(ZenoError::InvalidProgram(format!(
                "step target {bad} out of range"
            )));
        }
        for &h in &self.halting {
            if h >= self.states {
                return Err(ZenoError::InvalidProgram(format!(
                    "halting state {h} out of range"
                )));
            }
            if self.step[h] != h {
                return Err(ZenoError::InvalidProgram(format!(
                    "halting state {h} is not a fixed point"
                )));
            }
        }
        if self.start.is_empty() {
            return Err(ZenoError::InvalidProgram("empty start map".into()));
        }
        if let Some(&bad) = self.start.iter().find(|&&s| s >= self.states) {
            return Err(ZenoError::InvalidProgram(format!(
                "start state {bad} out of range"
            )));
        }
        Ok(())
    }
}

/// The encodable family of total halting deciders.
///
/// Diagonal programs reference their decider by this spec, so a program's
/// serialized form is self-contained and can itself be fed back as input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DeciderSpec {
    /// Claims everything halts.
    ConstantHalts,
    /// Claims nothing halts.
    ConstantLoops,
    /// Simulates up to `bound` steps and claims `Loops` beyond.
    StepBounded { bound: u64 },
    /// Simulates with repetition detection; exact on table programs and on
    /// any diagonal program that does not out-recurse the meta depth limit.
    ExactMeta,
}

impl DeciderSpec {
    /// Total verdict for a serialized program run on an input string.
    pub fn decide(&self, program: &str, input: &str) -> Verdict {
        self.decide_at_depth(program, input, 0)
    }

    fn decide_at_depth(&self, program: &str, input: &str, depth: u32) -> Verdict {
        match self {
            DeciderSpec::ConstantHalts => Verdict::Halts,
            DeciderSpec::ConstantLoops => Verdict::Loops,
            DeciderSpec::StepBounded { bound } => {
                let Ok(decoded) = ToyProgram::decode(program) else {
                    return Verdict::Loops;
                };
                let Ok(machine) = realize(&decoded, input, depth + 1) else {
                    return Verdict::Loops;
                };
                match machine.run(CycleBound::Finite(*bound)) {
                    RawOutcome::Halted { .. } => Verdict::Halts,
                    _ => Verdict::Loops,
                }
            }
            DeciderSpec::ExactMeta => {
                let Ok(decoded) = ToyProgram::decode(program) else {
                    return Verdict::Loops;
                };
                let Ok(machine) = realize(&decoded, input, depth + 1) else {
                    return Verdict::Loops;
                };
                match machine.run(CycleBound::Unbounded) {
                    RawOutcome::Halted { .. } => Verdict::Halts,
                    _ => Verdict::Loops,
                }
            }
        }
    }
}

impl fmt::Display for DeciderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeciderSpec::ConstantHalts => write!(f, "constant-halts"),
            DeciderSpec::ConstantLoops => write!(f, "constant-loops"),
            DeciderSpec::StepBounded { bound } => write!(f, "step-bounded:{bound}"),
            DeciderSpec::ExactMeta => write!(f, "exact-meta"),
        }
    }
}

impl DeciderSpec {
    /// Parses the CLI spelling: `constant-halts`, `constant-loops`,
    /// `step-bounded:N`, `exact-meta`.
    pub fn parse(text: &str) -> Result<Self, ZenoError> {
        match text {
            "constant-halts" => Ok(DeciderSpec::ConstantHalts),
            "constant-loops" => Ok(DeciderSpec::ConstantLoops),
            "exact-meta" => Ok(DeciderSpec::ExactMeta),
            other => {
                if let Some(raw) = other.strip_prefix("step-bounded:") {
                    let bound = raw.parse::<u64>().map_err(|_| {
                        ZenoError::InvalidEncoding(format!("bad step bound {raw:?}"))
                    })?;
                    return Ok(DeciderSpec::StepBounded { bound });
                }
                Err(ZenoError::InvalidEncoding(format!(
                    "unknown decider {other:?}"
                )))
            }
        }
    }
}

/// A runnable program: either an explicit machine table or the diagonal
/// construction over a referenced decider.
///
/// On input `x`, the diagonal program asks its decider about `x` run on
/// `x` and then does the opposite: it spins forever on `halts`, halts
/// immediately on `loops`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ToyProgram {
    Table(TableProgram),
    Diagonal { decider: DeciderSpec },
}

impl ToyProgram {
    /// Canonical serialized form; this string is what deciders consume and
    /// what self-application feeds back in.
    pub fn encode(&self) -> String {
        serde_json::to_string(self).expect("program encodes")
    }

    pub fn decode(text: &str) -> Result<Self, ZenoError> {
        let program: ToyProgram = serde_json::from_str(text)
            .map_err(|e| ZenoError::InvalidEncoding(e.to_string()))?;
        if let ToyProgram::Table(table) = &program {
            table.validate()?;
        }
        Ok(program)
    }
}

/// Result of a scheduled run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum ZenoOutcome {
    /// Reached a halting state after `cycles` steps.
    Halted { cycles: u64, proper_time: f64 },
    /// Revisited a configuration: the run provably never halts.
    NonHalting { cycle_length: u64, cycle_start: u64 },
    /// Ran out of scheduled cycles before deciding.
    Exhausted { cycles_executed: u64 },
}

impl fmt::Display for ZenoOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZenoOutcome::Halted {
                cycles,
                proper_time,
            } => {
                write!(f, "halted at t={cycles}, tau={proper_time}")
            }
            ZenoOutcome::NonHalting {
                cycle_length,
                cycle_start,
            } => write!(
                f,
                "non-halting: cycle of length {cycle_length} from t={cycle_start}"
            ),
            ZenoOutcome::Exhausted { cycles_executed } => {
                write!(f, "exhausted after {cycles_executed} cycles")
            }
        }
    }
}

struct Realized {
    step: Vec<usize>,
    halting: Vec<bool>,
    start: usize,
}

enum RawOutcome {
    Halted { cycles: u64 },
    Cycled { cycle_length: u64, cycle_start: u64 },
    Exhausted { cycles_executed: u64 },
}

impl Realized {
    fn run(&self, bound: CycleBound) -> RawOutcome {
        let mut first_seen: Vec<Option<u64>> = vec![None; self.step.len()];
        let mut state = self.start;
        let mut t: u64 = 0;
        loop {
            if self.halting[state] {
                return RawOutcome::Halted { cycles: t };
            }
            if let Some(first) = first_seen[state] {
                return RawOutcome::Cycled {
                    cycle_length: t - first,
                    cycle_start: first,
                };
            }
            first_seen[state] = Some(t);
            if let CycleBound::Finite(b) = bound {
                if t == b {
                    return RawOutcome::Exhausted { cycles_executed: t };
                }
            }
            state = self.step[state];
            t += 1;
        }
    }
}

fn realize(program: &ToyProgram, input: &str, eval_depth: u32) -> Result<Realized, ZenoError> {
    match program {
        ToyProgram::Table(table) => {
            let index: usize = input.trim().parse().map_err(|_| {
                ZenoError::InvalidEncoding(format!("table input must be an index, got {input:?}"))
            })?;
            let &start = table.start.get(index).ok_or_else(|| {
                ZenoError::InvalidEncoding(format!(
                    "input index {index} out of range for {} start states",
                    table.start.len()
                ))
            })?;
            let mut halting = vec![false; table.states];
            for &h in &table.halting {
                halting[h] = true;
            }
            Ok(Realized {
                step: table.step.clone(),
                halting,
                start,
            })
        }
        ToyProgram::Diagonal { decider } => {
            // eval_depth is the nesting level at which the embedded decider
            // runs; the top-level runner uses 0, so its evaluation is the
            // same one a caller of `decide` observes.
            let verdict = if eval_depth >= META_DEPTH_LIMIT {
                Verdict::Loops
            } else {
                decider.decide_at_depth(input, input, eval_depth)
            };
            Ok(match verdict {
                // claimed to halt: spin on a two-state loop forever
                Verdict::Halts => Realized {
                    step: vec![1, 0],
                    halting: vec![false, false],
                    start: 0,
                },
                // claimed to loop: take one step into a halting state
                Verdict::Loops => Realized {
                    step: vec![1, 1],
                    halting: vec![false, true],
                    start: 0,
                },
            })
        }
    }
}

/// Runs a program under a schedule, executing at most the cycles that fit
/// the proper-time budget. With a budget covering the limit span the run is
/// limit-complete: it always ends in `Halted` or `NonHalting`.
pub fn run_zeno(
    program: &ToyProgram,
    input: &str,
    schedule: &ZenoSchedule,
    budget: f64,
) -> Result<ZenoOutcome, ZenoError> {
    let bound = schedule.cycles_within(budget)?;
    let machine = realize(program, input, 0)?;
    Ok(match machine.run(bound) {
        RawOutcome::Halted { cycles } => ZenoOutcome::Halted {
            cycles,
            proper_time: schedule.proper_time(cycles),
        },
        RawOutcome::Cycled {
            cycle_length,
            cycle_start,
        } => ZenoOutcome::NonHalting {
            cycle_length,
            cycle_start,
        },
        RawOutcome::Exhausted { cycles_executed } => ZenoOutcome::Exhausted { cycles_executed },
    })
}

/// Certified outcome of confronting a decider with its diagonal adversary.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DefeatReport {
    /// The adversary's own encoding, used as both program and input.
    pub adversary: String,
    /// What the decider claims about the self-application.
    pub verdict: Verdict,
    /// What actually happens, from a limit-complete run.
    pub outcome: ZenoOutcome,
    /// True iff the claim contradicts the actual behavior.
    pub defeated: bool,
}

/// Builds the diagonal adversary for a decider and certifies, by running
/// the self-application to completion, that the decider's verdict on it is
/// wrong.
pub fn diagonal_adversary(decider: &DeciderSpec) -> (ToyProgram, DefeatReport) {
    let adversary = ToyProgram::Diagonal {
        decider: decider.clone(),
    };
    let encoding = adversary.encode();
    let verdict = decider.decide(&encoding, &encoding);

    let schedule = ZenoSchedule::new(0.5).expect("valid factor");
    let outcome = run_zeno(&adversary, &encoding, &schedule, schedule.limit_time())
        .expect("self-application runs");
    let defeated = match (verdict, &outcome) {
        (Verdict::Halts, ZenoOutcome::NonHalting { .. }) => true,
        (Verdict::Loops, ZenoOutcome::Halted { .. }) => true,
        _ => false,
    };
    let report = DefeatReport {
        adversary: encoding,
        verdict,
        outcome,
        defeated,
    };
    (adversary, report)
}
