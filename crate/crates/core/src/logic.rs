//! Experimental equivalence classes and their pasted partition logics.
//!
//! Feeding a word into a reversible automaton whose initial state is unknown
//! partitions the state set by output sequence. Each partition generates a
//! Boolean algebra of block unions; pasting several of those algebras
//! together yields a logic that keeps elements from different experiments
//! incomparable and can fail distributivity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::automaton::{AutomatonError, ReversibleAutomaton};

/// Ground sets are stored as bitmasks.
pub const MAX_GROUND_STATES: usize = 16;

/// Hard ceiling on pasted-logic size; beyond this the exhaustive searches
/// stop being desk-scale.
pub const MAX_LOGIC_ELEMENTS: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LogicError {
    #[error("partitions are over different ground sets")]
    GroundMismatch,
    #[error("ground set of {got} states exceeds the cap of {max}")]
    TooManyStates { got: usize, max: usize },
    #[error("pasting produced {got} elements, cap is {max}")]
    TooManyElements { got: usize, max: usize },
    #[error("experiment word must be nonempty")]
    EmptyWord,
    #[error("at least one partition is required")]
    NoPartitions,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

/// A partition of an ordered ground set of states.
///
/// Blocks are kept canonical: each block is a bitmask over ground indices and
/// blocks are ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    ground: Vec<String>,
    blocks: Vec<u64>,
}

fn render_mask(mask: u64, ground: &[String]) -> String {
    let names: Vec<&str> = ground
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, name)| name.as_str())
        .collect();
    format!("{{{}}}", names.join(","))
}

impl Partition {
    pub fn new(ground: Vec<String>, blocks: Vec<Vec<usize>>) -> Result<Self, LogicError> {
        if ground.len() > MAX_GROUND_STATES {
            return Err(LogicError::TooManyStates {
                got: ground.len(),
                max: MAX_GROUND_STATES,
            });
        }
        let mut masks = Vec::with_capacity(blocks.len());
        let mut covered = 0u64;
        for block in &blocks {
            if block.is_empty() {
                return Err(LogicError::InvalidPartition("empty block".into()));
            }
            let mut mask = 0u64;
            for &i in block {
                if i >= ground.len() {
                    return Err(LogicError::InvalidPartition(format!(
                        "state index {i} out of range"
                    )));
                }
                mask |= 1 << i;
            }
            if mask & covered != 0 {
                return Err(LogicError::InvalidPartition("blocks overlap".into()));
            }
            covered |= mask;
            masks.push(mask);
        }
        let full = full_mask(ground.len());
        if covered != full {
            return Err(LogicError::InvalidPartition(format!(
                "blocks cover {} of {} states",
                covered.count_ones(),
                ground.len()
            )));
        }
        masks.sort_by_key(|m| m.trailing_zeros());
        Ok(Partition {
            ground,
            blocks: masks,
        })
    }

    /// Test-friendly constructor from state names.
    pub fn from_names(ground: &[&str], blocks: &[&[&str]]) -> Result<Self, LogicError> {
        let ground_owned: Vec<String> = ground.iter().map(|s| s.to_string()).collect();
        let index = |name: &str| {
            ground_owned
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| LogicError::InvalidPartition(format!("unknown state {name:?}")))
        };
        let blocks = blocks
            .iter()
            .map(|block| block.iter().map(|n| index(n)).collect::<Result<_, _>>())
            .collect::<Result<Vec<Vec<usize>>, _>>()?;
        Partition::new(ground_owned, blocks)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn block_masks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn block_names(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|&mask| {
                self.ground
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, name)| name.clone())
                    .collect()
            })
            .collect()
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Every state alone in its block.
    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.ground.len()
    }

    /// A single block holding the whole ground set.
    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1
    }

    /// True iff every block of `self` lies inside some block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.ground == coarser.ground
            && self
                .blocks
                .iter()
                .all(|&b| coarser.blocks.iter().any(|&c| b & !c == 0))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .blocks
            .iter()
            .map(|&mask| render_mask(mask, &self.ground))
            .collect();
        write!(f, "{{{}}}", rendered.join(","))
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Groups states by the output sequence the word produces from them.
pub fn experiment_partition(
    automaton: &ReversibleAutomaton,
    word: &[String],
) -> Result<Partition, LogicError> {
    if word.is_empty() {
        return Err(LogicError::EmptyWord);
    }
    if automaton.n_states() > MAX_GROUND_STATES {
        return Err(LogicError::TooManyStates {
            got: automaton.n_states(),
            max: MAX_GROUND_STATES,
        });
    }
    let mut classes: BTreeMap<Vec<String>, Vec<usize>> = BTreeMap::new();
    for (idx, state) in automaton.states().iter().enumerate() {
        let (outputs, _) = automaton.run_word(state, word)?;
        classes.entry(outputs).or_default().push(idx);
    }
    Partition::new(
        automaton.states().to_vec(),
        classes.into_values().collect(),
    )
}

/// A deduplicated experiment partition with its shortest witness word
/// (ties broken lexicographically by symbol position).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscoveredPartition {
    pub partition: Partition,
    pub witness: Vec<String>,
}

/// All distinct experiment partitions over nonempty words of length at most
/// `max_len`, in order of first discovery.
pub fn partitions_up_to(
    automaton: &ReversibleAutomaton,
    max_len: usize,
) -> Result<Vec<DiscoveredPartition>, LogicError> {
    if max_len == 0 {
        return Err(LogicError::EmptyWord);
    }
    let symbols = automaton.inputs();
    let mut found: Vec<DiscoveredPartition> = Vec::new();
    let mut word: Vec<usize> = Vec::new();
    for len in 1..=max_len {
        word.clear();
        word.resize(len, 0);
        loop {
            let named: Vec<String> = word.iter().map(|&i| symbols[i].clone()).collect();
            let partition = experiment_partition(automaton, &named)?;
            if !found.iter().any(|d| d.partition == partition) {
                found.push(DiscoveredPartition {
                    partition,
                    witness: named,
                });
            }
            // odometer increment over symbol indices
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                word[pos] += 1;
                if word[pos] < symbols.len() {
                    break;
                }
                word[pos] = 0;
            }
            if word.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(found)
}

/// The pasting of the Boolean algebras generated by a family of partitions.
///
/// Elements are all block unions of each source partition. Two elements are
/// ordered only when one is a sub-union of the other inside at least one
/// common source algebra (transitively closed); plain subset inclusion across
/// different experiments does not count. Complement is set complement.
#[derive(Debug, Clone)]
pub struct PartitionLogic {
    ground: Vec<String>,
    elements: Vec<u64>,
    leq: Vec<Vec<bool>>,
}

pub fn build_partition_logic(partitions: &[Partition]) -> Result<PartitionLogic, LogicError> {
    let first = partitions.first().ok_or(LogicError::NoPartitions)?;
    let ground = first.ground().to_vec();
    if partitions.iter().any(|p| p.ground() != ground) {
        return Err(LogicError::GroundMismatch);
    }

    // every union of blocks, per source
    let mut element_set: BTreeSet<u64> = BTreeSet::new();
    let mut source_algebras: Vec<BTreeSet<u64>> = Vec::with_capacity(partitions.len());
    for partition in partitions {
        let blocks = partition.block_masks();
        let mut algebra = BTreeSet::new();
        for choice in 0u64..(1 << blocks.len()) {
            let mut union = 0u64;
            for (b, &mask) in blocks.iter().enumerate() {
                if choice >> b & 1 == 1 {
                    union |= mask;
                }
            }
            algebra.insert(union);
        }
        element_set.extend(algebra.iter().copied());
        source_algebras.push(algebra);
        if element_set.len() > MAX_LOGIC_ELEMENTS {
            return Err(LogicError::TooManyElements {
                got: element_set.len(),
                max: MAX_LOGIC_ELEMENTS,
            });
        }
    }

    let mut elements: Vec<u64> = element_set.into_iter().collect();
    elements.sort_by_key(|&m| (m.count_ones(), m));
    let index_of: BTreeMap<u64, usize> =
        elements.iter().enumerate().map(|(i, &m)| (m, i)).collect();

    let n = elements.len();
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for algebra in &source_algebras {
        for &x in algebra {
            for &y in algebra {
                if x & !y == 0 {
                    leq[index_of[&x]][index_of[&y]] = true;
                }
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i][k] {
                for j in 0..n {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
    }

    Ok(PartitionLogic {
        ground,
        elements,
        leq,
    })
}

impl PartitionLogic {
    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    /// Element bitmasks in canonical order (by size, then mask value).
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn element_index(&self, mask: u64) -> Option<usize> {
        self.elements.iter().position(|&m| m == mask)
    }

    pub fn render_element(&self, idx: usize) -> String {
        render_mask(self.elements[idx], &self.ground)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Set complement within the ground set; always lands on an element.
    pub fn complement(&self, idx: usize) -> usize {
        let mask = full_mask(self.ground.len()) ^ self.elements[idx];
        self.element_index(mask)
            .expect("source algebras are complement-closed")
    }

    /// Greatest lower bound in the pasted order, when it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.bound(a, b, |x, y| self.leq(x, y))
    }

    /// Least upper bound in the pasted order, when it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.bound(a, b, |x, y| self.leq(y, x))
    }

    fn bound(&self, a: usize, b: usize, below: impl Fn(usize, usize) -> bool) -> Option<usize> {
        let candidates: Vec<usize> = (0..self.elements.len())
            .filter(|&k| below(k, a) && below(k, b))
            .collect();
        candidates
            .iter()
            .copied()
            .find(|&best| candidates.iter().all(|&k| below(k, best)))
    }

    /// Elements covering the bottom: nothing lies strictly between.
    pub fn atoms(&self) -> Vec<usize> {
        let bottom = self.element_index(0).expect("empty set is an element");
        (0..self.elements.len())
            .filter(|&e| e != bottom)
            .filter(|&e| {
                (0..self.elements.len()).all(|f| f == bottom || f == e || !self.leq(f, e))
            })
            .collect()
    }

    /// True iff the logic is exactly bottom, top and four pairwise
    /// incomparable elements forming two complementary pairs.
    pub fn is_mo2(&self) -> bool {
        if self.elements.len() != 6 {
            return false;
        }
        let bottom = 0;
        let top = 5;
        if self.elements[bottom] != 0 || self.elements[top] != full_mask(self.ground.len()) {
            return false;
        }
        let middle = [1, 2, 3, 4];
        for &i in &middle {
            for &j in &middle {
                if i != j && self.leq(i, j) {
                    return false;
                }
            }
        }
        middle.iter().all(|&i| {
            let c = self.complement(i);
            middle.contains(&c) && c != i
        })
    }

    /// Scans all element triples for a distributivity violation
    /// `x /\ (y \/ z) != (x /\ y) \/ (x /\ z)`, skipping triples whose
    /// bounds are undefined. `None` means the exhaustive search found none.
    pub fn find_nondistributive_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.elements.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let Some(yz) = self.join(y, z) else { continue };
                    let Some(lhs) = self.meet(x, yz) else { continue };
                    let Some(xy) = self.meet(x, y) else { continue };
                    let Some(xz) = self.meet(x, z) else { continue };
                    let Some(rhs) = self.join(xy, xz) else { continue };
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Structured text export: elements in canonical order, then all strict
    /// order pairs.
    pub fn render(&self) -> String {
        let mut out = format!("ground: {}\n", self.ground.join(","));
        let _ = writeln!(out, "elements: {}", self.element_count());
        for idx in 0..self.element_count() {
            let _ = writeln!(out, "  {}", self.render_element(idx));
        }
        out.push_str("order:\n");
        for a in 0..self.element_count() {
            for b in 0..self.element_count() {
                if a != b && self.leq(a, b) {
                    let _ = writeln!(
                        out,
                        "  {} <= {}",
                        self.render_element(a),
                        self.render_element(b)
                    );
                }
            }
        }
        out
    }

    /// DOT Hasse diagram over covering edges, drawn bottom-up.
    pub fn to_dot(&self) -> String {
        let n = self.element_count();
        let mut out = String::from("digraph logic {\n  rankdir=BT;\n");
        for idx in 0..n {
            let _ = writeln!(out, "  \"{}\";", self.render_element(idx));
        }
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let covered =
                    (0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !covered {
                    let _ = writeln!(
                        out,
                        "  \"{}\" -> \"{}\";",
                        self.render_element(a),
                        self.render_element(b)
                    );
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::ReversibleAutomaton;
    use crate::perm::Permutation;
    use crate::test_fixtures::table2;
    use proptest::prelude::*;

    fn word(symbols: &str) -> Vec<String> {
        symbols.chars().map(|c| c.to_string()).collect()
    }

    fn v(word_text: &str) -> Partition {
        experiment_partition(&table2(), &word(word_text)).unwrap()
    }

    fn ground3() -> [&'static str; 3] {
        ["s1", "s2", "s3"]
    }

    #[test]
    fn single_symbol_partitions() {
        assert_eq!(
            v("1"),
            Partition::from_names(&ground3(), &[&["s1"], &["s2", "s3"]]).unwrap()
        );
        assert_eq!(
            v("2"),
            Partition::from_names(&ground3(), &[&["s1", "s3"], &["s2"]]).unwrap()
        );
    }

    #[test]
    fn long_words_separate_or_stay() {
        assert!(v("2222").is_discrete());
        assert_eq!(v("1111"), v("1"));
        for n in 1..=16 {
            assert_eq!(v(&"1".repeat(n)), v("1"));
        }
    }

    #[test]
    fn rendering_is_canonical() {
        assert_eq!(v("1").to_string(), "{{s1},{s2,s3}}");
        assert_eq!(v("2").to_string(), "{{s1,s3},{s2}}");
        // construction order of blocks does not matter
        let p = Partition::from_names(&ground3(), &[&["s2", "s3"], &["s1"]]).unwrap();
        assert_eq!(p, v("1"));
    }

    #[test]
    fn empty_word_is_rejected() {
        assert_eq!(
            experiment_partition(&table2(), &[]),
            Err(LogicError::EmptyWord)
        );
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::from_names(&ground3(), &[&["s1"], &["s2"]]).is_err());
        assert!(Partition::from_names(&ground3(), &[&["s1", "s2"], &["s2", "s3"]]).is_err());
        assert!(Partition::from_names(&ground3(), &[&[], &["s1", "s2", "s3"]]).is_err());
    }

    #[test]
    fn discovery_up_to_length_one() {
        let found = partitions_up_to(&table2(), 1).unwrap();
        assert_eq!(found.len(), 2);
        assert_eq!(found[0].partition, v("1"));
        assert_eq!(found[0].witness, word("1"));
        assert_eq!(found[1].partition, v("2"));
        assert_eq!(found[1].witness, word("2"));
    }

    #[test]
    fn discovery_finds_shortest_discrete_witness() {
        // independent oracle: scan all words by (length, lexicographic) order
        let a = table2();
        let mut oracle_witness = None;
        'outer: for len in 1..=4usize {
            let mut idxs = vec![0usize; len];
            loop {
                let named: Vec<String> = idxs.iter().map(|&i| a.inputs()[i].clone()).collect();
                if experiment_partition(&a, &named).unwrap().is_discrete() {
                    oracle_witness = Some(named);
                    break 'outer;
                }
                let mut pos = len;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    idxs[pos] += 1;
                    if idxs[pos] < a.n_inputs() {
                        break;
                    }
                    idxs[pos] = 0;
                }
                if idxs.iter().all(|&i| i == 0) {
                    break;
                }
            }
        }
        assert_eq!(oracle_witness, Some(word("12")));

        let found = partitions_up_to(&a, 4).unwrap();
        let discrete = found
            .iter()
            .find(|d| d.partition.is_discrete())
            .expect("discrete partition reachable");
        assert_eq!(discrete.witness, word("12"));
        // the three distinct partitions of this machine
        assert_eq!(found.len(), 3);
    }

    #[test]
    fn uninformative_automaton_yields_single_block() {
        let a = ReversibleAutomaton::from_permutation(&Permutation::identity(6), 3, 2).unwrap();
        let found = partitions_up_to(&a, 3).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].partition.is_trivial());
    }

    #[test]
    fn pasted_logic_of_the_two_experiments_is_mo2() {
        let logic = build_partition_logic(&[v("1"), v("2")]).unwrap();
        assert_eq!(logic.element_count(), 6);
        assert!(logic.is_mo2());

        let atoms = logic.atoms();
        assert_eq!(atoms.len(), 4);
        for &a in &atoms {
            for &b in &atoms {
                if a != b {
                    assert!(!logic.leq(a, b));
                }
            }
            assert!(atoms.contains(&logic.complement(a)));
        }
    }

    #[test]
    fn mo2_has_a_verified_nondistributive_triple() {
        let logic = build_partition_logic(&[v("1"), v("2")]).unwrap();
        let (x, y, z) = logic.find_nondistributive_triple().expect("nondistributive");
        let yz = logic.join(y, z).unwrap();
        let lhs = logic.meet(x, yz).unwrap();
        let rhs = logic
            .join(logic.meet(x, y).unwrap(), logic.meet(x, z).unwrap())
            .unwrap();
        assert_ne!(lhs, rhs);

        // the documented witness family: an atom against a crossing pair
        let s1 = logic.element_index(0b001).unwrap();
        let s2 = logic.element_index(0b010).unwrap();
        let s13 = logic.element_index(0b101).unwrap();
        let top = logic.join(s13, s2).unwrap();
        assert_eq!(logic.elements()[top], 0b111);
        assert_eq!(logic.meet(s1, top), Some(s1));
        let bottom = logic
            .join(logic.meet(s1, s13).unwrap(), logic.meet(s1, s2).unwrap())
            .unwrap();
        assert_eq!(logic.elements()[bottom], 0);
    }

    #[test]
    fn single_partition_gives_a_boolean_four_algebra() {
        let logic = build_partition_logic(&[v("1")]).unwrap();
        assert_eq!(logic.element_count(), 4);
        assert!(!logic.is_mo2());
        assert_eq!(logic.find_nondistributive_triple(), None);
    }

    #[test]
    fn adding_the_discrete_partition_recovers_boolean_eight() {
        let discrete = v("2222");
        let logic = build_partition_logic(&[v("1"), v("2"), discrete]).unwrap();
        assert_eq!(logic.element_count(), 8);
        assert!(!logic.is_mo2());
        assert_eq!(logic.find_nondistributive_triple(), None);
        // subset order is fully recovered
        let s1 = logic.element_index(0b001).unwrap();
        let s13 = logic.element_index(0b101).unwrap();
        assert!(logic.leq(s1, s13));
    }

    #[test]
    fn ground_mismatch_is_rejected() {
        let other = Partition::from_names(&["t1", "t2", "t3"], &[&["t1", "t2", "t3"]]).unwrap();
        assert!(matches!(
            build_partition_logic(&[v("1"), other]),
            Err(LogicError::GroundMismatch)
        ));
        assert!(matches!(
            build_partition_logic(&[]),
            Err(LogicError::NoPartitions)
        ));
    }

    #[test]
    fn logic_render_and_dot_are_stable() {
        let logic = build_partition_logic(&[v("1"), v("2")]).unwrap();
        let text = logic.render();
        assert!(text.contains("elements: 6"));
        assert!(text.contains("{} <= {s1}"));
        let dot = logic.to_dot();
        assert!(dot.contains("\"{}\" -> \"{s1}\";"));
        // covering edges only: bottom never points straight at the top
        assert!(!dot.contains("\"{}\" -> \"{s1,s2,s3}\";"));
    }

    prop_compose! {
        fn arb_automaton()(n_states in 1usize..=4, n_inputs in 1usize..=3)(
            images in Just((0..n_states * n_inputs).collect::<Vec<usize>>())
                .prop_shuffle(),
            n_states in Just(n_states),
            n_inputs in Just(n_inputs),
        ) -> ReversibleAutomaton {
            let perm = Permutation::from_images(images).unwrap();
            ReversibleAutomaton::from_permutation(&perm, n_states, n_inputs).unwrap()
        }
    }

    fn arb_word(a: &ReversibleAutomaton, max_len: usize) -> impl Strategy<Value = Vec<String>> {
        let symbols: Vec<String> = a.inputs().to_vec();
        prop::collection::vec(prop::sample::select(symbols), 1..=max_len)
    }

    proptest! {
        #[test]
        fn prop_partitions_are_valid_covers(
            (a, w) in arb_automaton().prop_flat_map(|a| {
                let w = arb_word(&a, 6);
                (Just(a), w)
            })
        ) {
            let p = experiment_partition(&a, &w).unwrap();
            let mut union = 0u64;
            for &b in p.block_masks() {
                prop_assert!(b != 0);
                prop_assert_eq!(union & b, 0);
                union |= b;
            }
            prop_assert_eq!(union, full_mask(a.n_states()));
        }

        #[test]
        fn prop_extension_refines(
            (a, u, ext) in arb_automaton().prop_flat_map(|a| {
                let u = arb_word(&a, 3);
                let ext = arb_word(&a, 3);
                (Just(a), u, ext)
            })
        ) {
            let coarse = experiment_partition(&a, &u).unwrap();
            let mut uv = u.clone();
            uv.extend(ext);
            let fine = experiment_partition(&a, &uv).unwrap();
            prop_assert!(fine.refines(&coarse));
        }

        #[test]
        fn prop_logic_complement_involutes_and_reverses(
            a in arb_automaton(), max_len in 1usize..=3
        ) {
            let found = partitions_up_to(&a, max_len).unwrap();
            let partitions: Vec<Partition> =
                found.into_iter().map(|d| d.partition).collect();
            let logic = build_partition_logic(&partitions).unwrap();
            for x in 0..logic.element_count() {
                prop_assert_eq!(logic.complement(logic.complement(x)), x);
                for y in 0..logic.element_count() {
                    if logic.leq(x, y) {
                        prop_assert!(logic.leq(logic.complement(y), logic.complement(x)));
                        // the pasted order never exceeds subset order
                        prop_assert_eq!(logic.elements()[x] & !logic.elements()[y], 0);
                    }
                }
            }
        }
    }
}
