//! Reversible one-to-one computation at desk scale: permutation algebra,
//! reversible Mealy automata and their experiment-induced partition logics,
//! geometrically squeezed schedules with a halting-decider diagonal harness,
//! and the single-qubit fixed point that dissolves the classical paradox.

pub mod automaton;
pub mod logic;
pub mod perm;
pub mod qubit;
pub mod zeno;
