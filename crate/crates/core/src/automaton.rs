//! Reversible Mealy automata: machines over states `S` and symbols `I = O`
//! whose combined update `(s,i) -> (delta(s,i), lambda(s,i))` is a bijection
//! on `S x I`, making every machine a permutation in disguise.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Permutation;

/// Two source pairs landing on the same target pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub first: (String, String),
    pub second: (String, String),
    pub target: (String, String),
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}) and ({},{}) both reach ({},{})",
            self.first.0, self.first.1, self.second.0, self.second.1, self.target.0, self.target.1
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AutomatonError {
    #[error("combined map not injective: {0}")]
    NotInjective(Box<Collision>),
    #[error("missing table entry for state {state}, input {input}")]
    IncompleteTable { state: String, input: String },
    #[error("duplicate table entry for state {state}, input {input}")]
    DuplicateEntry { state: String, input: String },
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("degree {degree} does not factor as {states} states x {inputs} symbols")]
    DimensionMismatch {
        degree: usize,
        states: usize,
        inputs: usize,
    },
    #[error("label vector has {got} entries, automaton has {expected} (state,symbol) pairs")]
    LabelLengthMismatch { got: usize, expected: usize },
    #[error("state list and input list must be nonempty")]
    EmptyAlphabet,
    #[error("duplicate name {0:?}")]
    DuplicateName(String),
    #[error("invalid automaton file: {0}")]
    Format(String),
}

/// A state/symbol pair listed row-major: `(s_1,i_1), (s_1,i_2), ..., (s_2,i_1), ...`
fn pair_index(state: usize, input: usize, n_inputs: usize) -> usize {
    state * n_inputs + input
}

/// Finite Mealy machine with a bijective combined transition/output map.
///
/// Construction validates the bijection, so every value of this type is a
/// reversible automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReversibleAutomaton {
    states: Vec<String>,
    inputs: Vec<String>,
    delta: Vec<usize>,
    lambda: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct AutomatonFile {
    states: Vec<String>,
    inputs: Vec<String>,
    delta: BTreeMap<String, BTreeMap<String, String>>,
    lambda: BTreeMap<String, BTreeMap<String, String>>,
}

impl ReversibleAutomaton {
    /// Builds and validates an automaton from per-state transition tables.
    pub fn from_tables(
        states: Vec<String>,
        inputs: Vec<String>,
        delta: &BTreeMap<String, BTreeMap<String, String>>,
        lambda: &BTreeMap<String, BTreeMap<String, String>>,
    ) -> Result<Self, AutomatonError> {
        if states.is_empty() || inputs.is_empty() {
            return Err(AutomatonError::EmptyAlphabet);
        }
        for names in [&states, &inputs] {
            for (k, name) in names.iter().enumerate() {
                if names[..k].contains(name) {
                    return Err(AutomatonError::DuplicateName(name.clone()));
                }
            }
        }
        let state_index = |name: &str| {
            states
                .iter()
                .position(|s| s == name)
                .ok_or_else(|| AutomatonError::UnknownState(name.to_string()))
        };
        let input_index = |name: &str| {
            inputs
                .iter()
                .position(|i| i == name)
                .ok_or_else(|| AutomatonError::UnknownSymbol(name.to_string()))
        };
        for key in delta.keys().chain(lambda.keys()) {
            state_index(key)?;
        }
        for row in delta.values().chain(lambda.values()) {
            for key in row.keys() {
                input_index(key)?;
            }
        }

        let n_inputs = inputs.len();
        let n_pairs = states.len() * n_inputs;
        let mut dense_delta = Vec::with_capacity(n_pairs);
        let mut dense_lambda = Vec::with_capacity(n_pairs);
        for state in &states {
            for input in &inputs {
                let missing = || AutomatonError::IncompleteTable {
                    state: state.clone(),
                    input: input.clone(),
                };
                let next = delta
                    .get(state)
                    .and_then(|row| row.get(input))
                    .ok_or_else(missing)?;
                let out = lambda
                    .get(state)
                    .and_then(|row| row.get(input))
                    .ok_or_else(missing)?;
                dense_delta.push(state_index(next)?);
                dense_lambda.push(input_index(out)?);
            }
        }

        // occupancy check: the combined map must hit every pair exactly once
        let mut seen: Vec<Option<usize>> = vec![None; n_pairs];
        for src in 0..n_pairs {
            let target = pair_index(dense_delta[src], dense_lambda[src], n_inputs);
            if let Some(prev) = seen[target] {
                return Err(AutomatonError::NotInjective(Box::new(Collision {
                    first: (
                        states[prev / n_inputs].clone(),
                        inputs[prev % n_inputs].clone(),
                    ),
                    second: (
                        states[src / n_inputs].clone(),
                        inputs[src % n_inputs].clone(),
                    ),
                    target: (
                        states[dense_delta[src]].clone(),
                        inputs[dense_lambda[src]].clone(),
                    ),
                })));
            }
            seen[target] = Some(src);
        }

        Ok(ReversibleAutomaton {
            states,
            inputs,
            delta: dense_delta,
            lambda: dense_lambda,
        })
    }

    /// Convenience constructor from flat rows `(state, input, next, output)`.
    pub fn from_rows(
        states: &[&str],
        inputs: &[&str],
        rows: &[(&str, &str, &str, &str)],
    ) -> Result<Self, AutomatonError> {
        let mut delta: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        let mut lambda: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        for &(state, input, next, out) in rows {
            let prev = delta
                .entry(state.to_string())
                .or_default()
                .insert(input.to_string(), next.to_string());
            if prev.is_some() {
                return Err(AutomatonError::DuplicateEntry {
                    state: state.to_string(),
                    input: input.to_string(),
                });
            }
            lambda
                .entry(state.to_string())
                .or_default()
                .insert(input.to_string(), out.to_string());
        }
        Self::from_tables(
            states.iter().map(|s| s.to_string()).collect(),
            inputs.iter().map(|s| s.to_string()).collect(),
            &delta,
            &lambda,
        )
    }

    /// Parses the automaton file format: a JSON object with `states`,
    /// `inputs`, `delta` and `lambda` fields.
    pub fn from_json(text: &str) -> Result<Self, AutomatonError> {
        let file: AutomatonFile =
            serde_json::from_str(text).map_err(|e| AutomatonError::Format(e.to_string()))?;
        Self::from_tables(file.states, file.inputs, &file.delta, &file.lambda)
    }

    pub fn to_json(&self) -> String {
        let mut delta: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        let mut lambda: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        for (s, state) in self.states.iter().enumerate() {
            for (i, input) in self.inputs.iter().enumerate() {
                let idx = pair_index(s, i, self.inputs.len());
                delta
                    .entry(state.clone())
                    .or_default()
                    .insert(input.clone(), self.states[self.delta[idx]].clone());
                lambda
                    .entry(state.clone())
                    .or_default()
                    .insert(input.clone(), self.inputs[self.lambda[idx]].clone());
            }
        }
        let file = AutomatonFile {
            states: self.states.clone(),
            inputs: self.inputs.clone(),
            delta,
            lambda,
        };
        serde_json::to_string_pretty(&file).expect("automaton file serializes")
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn n_states(&self) -> usize {
        self.states.len()
    }

    pub fn n_inputs(&self) -> usize {
        self.inputs.len()
    }

    pub fn state_index(&self, name: &str) -> Result<usize, AutomatonError> {
        self.states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| AutomatonError::UnknownState(name.to_string()))
    }

    pub fn input_index(&self, name: &str) -> Result<usize, AutomatonError> {
        self.inputs
            .iter()
            .position(|i| i == name)
            .ok_or_else(|| AutomatonError::UnknownSymbol(name.to_string()))
    }

    /// The permutation of `S x I` pair indices realized by the combined map.
    pub fn to_permutation(&self) -> Permutation {
        let n_inputs = self.inputs.len();
        let images = self
            .delta
            .iter()
            .zip(&self.lambda)
            .map(|(&s, &i)| pair_index(s, i, n_inputs))
            .collect();
        Permutation::from_images(images).expect("bijective combined map")
    }

    /// Rebuilds an automaton from a pair permutation using canonical names
    /// `s1..sN` and `1..M`.
    pub fn from_permutation(
        perm: &Permutation,
        n_states: usize,
        n_inputs: usize,
    ) -> Result<Self, AutomatonError> {
        let states: Vec<String> = (1..=n_states).map(|k| format!("s{k}")).collect();
        let inputs: Vec<String> = (1..=n_inputs).map(|k| k.to_string()).collect();
        Self::from_permutation_named(perm, states, inputs)
    }

    /// Like [`Self::from_permutation`] with caller-chosen names.
    pub fn from_permutation_named(
        perm: &Permutation,
        states: Vec<String>,
        inputs: Vec<String>,
    ) -> Result<Self, AutomatonError> {
        let n_states = states.len();
        let n_inputs = inputs.len();
        if n_states == 0 || n_inputs == 0 {
            return Err(AutomatonError::EmptyAlphabet);
        }
        if perm.degree() != n_states * n_inputs {
            return Err(AutomatonError::DimensionMismatch {
                degree: perm.degree(),
                states: n_states,
                inputs: n_inputs,
            });
        }
        let mut delta = Vec::with_capacity(perm.degree());
        let mut lambda = Vec::with_capacity(perm.degree());
        for src in 0..perm.degree() {
            let target = perm.apply(src);
            delta.push(target / n_inputs);
            lambda.push(target % n_inputs);
        }
        Ok(ReversibleAutomaton {
            states,
            inputs,
            delta,
            lambda,
        })
    }

    /// One combined step: `(s, i) -> (delta(s,i), lambda(s,i))`.
    pub fn step(&self, state: &str, input: &str) -> Result<(String, String), AutomatonError> {
        let s = self.state_index(state)?;
        let i = self.input_index(input)?;
        let idx = pair_index(s, i, self.inputs.len());
        Ok((
            self.states[self.delta[idx]].clone(),
            self.inputs[self.lambda[idx]].clone(),
        ))
    }

    /// Feeds state and output back as the next input `n` times, recording the
    /// full trajectory of `n + 1` pairs.
    pub fn run_feedback(
        &self,
        state: &str,
        input: &str,
        n: u64,
    ) -> Result<Trajectory, AutomatonError> {
        let s = self.state_index(state)?;
        let i = self.input_index(input)?;
        let n_inputs = self.inputs.len();
        let mut idx = pair_index(s, i, n_inputs);
        let mut steps = Vec::with_capacity(n as usize + 1);
        steps.push(self.pair_labels(idx));
        for _ in 0..n {
            idx = pair_index(self.delta[idx], self.lambda[idx], n_inputs);
            steps.push(self.pair_labels(idx));
        }
        Ok(Trajectory { steps })
    }

    /// The canonical label vector listing all pairs in row-major order.
    pub fn canonical_labels(&self) -> LabelVector {
        LabelVector {
            labels: (0..self.delta.len())
                .map(|idx| self.pair_labels(idx))
                .collect(),
        }
    }

    /// Evolves a label vector `n` steps: the entry at each index is replaced
    /// by the entry at the index reached after `n` combined-map steps.
    pub fn evolve_labels(&self, psi: &LabelVector, n: u64) -> Result<LabelVector, AutomatonError> {
        let n_pairs = self.delta.len();
        if psi.labels.len() != n_pairs {
            return Err(AutomatonError::LabelLengthMismatch {
                got: psi.labels.len(),
                expected: n_pairs,
            });
        }
        let n_inputs = self.inputs.len();
        let step_of = |idx: usize| pair_index(self.delta[idx], self.lambda[idx], n_inputs);
        // map^n as an index table; n is reduced mod the permutation order
        // implicitly by cycling, but a direct repeated square would be
        // overkill at these sizes.
        let mut reached: Vec<usize> = (0..n_pairs).collect();
        for _ in 0..n {
            for slot in reached.iter_mut() {
                *slot = step_of(*slot);
            }
        }
        Ok(LabelVector {
            labels: reached
                .into_iter()
                .map(|idx| psi.labels[idx].clone())
                .collect(),
        })
    }

    /// Standard Mealy run over an input word.
    pub fn run_word(
        &self,
        start: &str,
        word: &[String],
    ) -> Result<(Vec<String>, String), AutomatonError> {
        let mut s = self.state_index(start)?;
        let n_inputs = self.inputs.len();
        let mut outputs = Vec::with_capacity(word.len());
        for symbol in word {
            let i = self.input_index(symbol)?;
            let idx = pair_index(s, i, n_inputs);
            outputs.push(self.inputs[self.lambda[idx]].clone());
            s = self.delta[idx];
        }
        Ok((outputs, self.states[s].clone()))
    }

    /// The automaton realizing the inverse pair permutation: stepping it
    /// undoes [`Self::step`].
    pub fn reverse(&self) -> ReversibleAutomaton {
        Self::from_permutation_named(
            &self.to_permutation().inverse(),
            self.states.clone(),
            self.inputs.clone(),
        )
        .expect("same dimensions")
    }

    /// Splits a word argument into symbols: single characters when every
    /// input symbol is one character, otherwise comma-separated names.
    pub fn parse_word(&self, text: &str) -> Result<Vec<String>, AutomatonError> {
        let symbols: Vec<String> = if self.inputs.iter().all(|i| i.chars().count() == 1) {
            text.chars().map(|c| c.to_string()).collect()
        } else {
            text.split(',').map(|t| t.trim().to_string()).collect()
        };
        for symbol in &symbols {
            self.input_index(symbol)?;
        }
        Ok(symbols)
    }

    /// Graphviz rendering: one node per state, edges labeled `input/output`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
        for state in &self.states {
            let _ = writeln!(out, "  \"{state}\";");
        }
        for (s, state) in self.states.iter().enumerate() {
            for (i, input) in self.inputs.iter().enumerate() {
                let idx = pair_index(s, i, self.inputs.len());
                let _ = writeln!(
                    out,
                    "  \"{state}\" -> \"{}\" [label=\"{input}/{}\"];",
                    self.states[self.delta[idx]], self.inputs[self.lambda[idx]]
                );
            }
        }
        out.push_str("}\n");
        out
    }

    fn pair_labels(&self, idx: usize) -> (String, String) {
        let n_inputs = self.inputs.len();
        (
            self.states[idx / n_inputs].clone(),
            self.inputs[idx % n_inputs].clone(),
        )
    }
}

/// A vector of `(state, symbol)` labels, one per pair index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelVector {
    labels: Vec<(String, String)>,
}

impl LabelVector {
    pub fn new(labels: Vec<(String, String)>) -> Self {
        LabelVector { labels }
    }

    pub fn labels(&self) -> &[(String, String)] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl fmt::Display for LabelVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .labels
            .iter()
            .map(|(s, i)| format!("({s},{i})"))
            .collect();
        write!(f, "{}", rendered.join(" "))
    }
}

/// A feedback run: consecutive pairs related by the combined map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    steps: Vec<(String, String)>,
}

impl Trajectory {
    pub fn steps(&self) -> &[(String, String)] {
        &self.steps
    }

    pub fn last(&self) -> &(String, String) {
        self.steps.last().expect("trajectory has a start pair")
    }
}

impl fmt::Display for Trajectory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .steps
            .iter()
            .map(|(s, i)| format!("({s},{i})"))
            .collect();
        write!(f, "{}", rendered.join(" -> "))
    }
}
