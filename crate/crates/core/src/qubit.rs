//! Single-qubit states and the bit-flip operator.
//!
//! Classically, `not` has no fixed point: flipping 0 gives 1 and flipping 1
//! gives 0, which is what makes the diagonal self-application contradictory.
//! On amplitude pairs the same operator acquires the fixed point
//! `(|0> + |1>)/sqrt(2)`, at the price of a fifty-fifty measurement outcome.

use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

/// Comparison tolerance for norms, residuals and probabilities.
pub const NORM_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QubitError {
    #[error("state norm {0} differs from 1 by more than {NORM_TOL}")]
    NotNormalized(f64),
    #[error("matrix is not unitary: max residual {0}")]
    NotUnitary(f64),
    #[error("cannot normalize the zero vector")]
    ZeroVector,
}

/// Normalized amplitude pair over the basis `|0>`, `|1>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Qubit {
    a: Complex64,
    b: Complex64,
}

impl Qubit {
    pub fn new(a: Complex64, b: Complex64) -> Result<Self, QubitError> {
        let norm_sq = a.norm_sqr() + b.norm_sqr();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(QubitError::NotNormalized(norm_sq.sqrt()));
        }
        Ok(Qubit { a, b })
    }

    /// Rescales an arbitrary nonzero amplitude pair onto the unit sphere.
    pub fn normalized(a: Complex64, b: Complex64) -> Result<Self, QubitError> {
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(QubitError::ZeroVector);
        }
        Ok(Qubit {
            a: a / norm,
            b: b / norm,
        })
    }

    pub fn zero() -> Self {
        Qubit {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    pub fn one() -> Self {
        Qubit {
            a: Complex64::new(0.0, 0.0),
            b: Complex64::new(1.0, 0.0),
        }
    }

    pub fn amplitudes(&self) -> (Complex64, Complex64) {
        (self.a, self.b)
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Qubit) -> Complex64 {
        self.a.conj() * other.a + self.b.conj() * other.b
    }

    /// Born probabilities `(|a|^2, |b|^2)`.
    pub fn probabilities(&self) -> (f64, f64) {
        (self.a.norm_sqr(), self.b.norm_sqr())
    }

    /// Euclidean distance of the amplitude vectors.
    pub fn distance(&self, other: &Qubit) -> f64 {
        ((self.a - other.a).norm_sqr() + (self.b - other.b).norm_sqr()).sqrt()
    }

    /// True iff the states differ only by a global phase.
    pub fn equals_up_to_phase(&self, other: &Qubit, tol: f64) -> bool {
        self.inner(other).norm() >= 1.0 - tol
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // adding 0.0 folds negative zero into plain zero
        write!(
            f,
            "a=({},{}) b=({},{})",
            self.a.re + 0.0,
            self.a.im + 0.0,
            self.b.re + 0.0,
            self.b.im + 0.0
        )
    }
}

/// A 2x2 unitary, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneQubitOperator {
    entries: [[Complex64; 2]; 2],
}

impl OneQubitOperator {
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self, QubitError> {
        // residual of U * U^dagger against the identity
        let mut max_residual = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                let mut sum = Complex64::new(0.0, 0.0);
                for (k, _) in entries.iter().enumerate() {
                    sum += entries[i][k] * entries[j][k].conj();
                }
                let expected = if i == j { 1.0 } else { 0.0 };
                max_residual = max_residual.max((sum - expected).norm());
            }
        }
        if max_residual > NORM_TOL {
            return Err(QubitError::NotUnitary(max_residual));
        }
        Ok(OneQubitOperator { entries })
    }

    /// The bit flip `|1><0| + |0><1|`.
    pub fn not() -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        OneQubitOperator {
            entries: [[zero, one], [one, zero]],
        }
    }

    pub fn identity() -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        OneQubitOperator {
            entries: [[one, zero], [zero, one]],
        }
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.entries
    }

    /// Matrix-vector product; unitarity keeps the result normalized.
    pub fn apply(&self, q: &Qubit) -> Qubit {
        Qubit {
            a: self.entries[0][0] * q.a + self.entries[0][1] * q.b,
            b: self.entries[1][0] * q.a + self.entries[1][1] * q.b,
        }
    }
}

/// The eigensystem of the bit flip: `(+1, (|0>+|1>)/sqrt(2))` and
/// `(-1, (|0>-|1>)/sqrt(2))`.
pub fn eigensystem_not() -> [(f64, Qubit); 2] {
    let amp = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    [
        (1.0, Qubit { a: amp, b: amp }),
        (-1.0, Qubit { a: amp, b: -amp }),
    ]
}

/// The fixed point of the bit flip, its `+1` eigenstate.
pub fn fixed_point_not() -> Qubit {
    eigensystem_not()[0].1
}

/// Exhausts the classical domain `{0,1}` looking for a fixed point of
/// `not`; the returned witness list is empty because none exists.
pub fn classical_fixed_point_search() -> Vec<bool> {
    [false, true].into_iter().filter(|&b| !b == b).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn not_flips_basis_states() {
        let not = OneQubitOperator::not();
        assert!(not.apply(&Qubit::zero()).distance(&Qubit::one()) <= NORM_TOL);
        assert!(not.apply(&Qubit::one()).distance(&Qubit::zero()) <= NORM_TOL);
    }

    #[test]
    fn fixed_point_is_invariant() {
        let not = OneQubitOperator::not();
        let star = fixed_point_not();
        let (a, b) = star.amplitudes();
        assert!((a.re - 0.7071067811865476).abs() <= NORM_TOL);
        assert!((b.re - 0.7071067811865476).abs() <= NORM_TOL);
        assert!(not.apply(&star).distance(&star) <= NORM_TOL);
    }

    #[test]
    fn minus_eigenstate_picks_up_a_sign() {
        let not = OneQubitOperator::not();
        let minus = eigensystem_not()[1].1;
        let flipped = not.apply(&minus);
        let negated = Qubit::new(-minus.amplitudes().0, -minus.amplitudes().1).unwrap();
        assert!(flipped.distance(&negated) <= NORM_TOL);
        // same ray, opposite representative
        assert!(flipped.equals_up_to_phase(&minus, NORM_TOL));
    }

    #[test]
    fn eigensystem_satisfies_the_eigenvalue_equations() {
        let not = OneQubitOperator::not();
        for (value, state) in eigensystem_not() {
            let applied = not.apply(&state);
            let (a, b) = state.amplitudes();
            let scaled = Qubit::new(a * value, b * value).unwrap();
            assert!(applied.distance(&scaled) <= NORM_TOL);
        }
        let [(_, plus), (_, minus)] = eigensystem_not();
        assert!(plus.inner(&minus).norm() <= NORM_TOL);
        assert!(fixed_point_not().equals_up_to_phase(&plus, NORM_TOL));
    }

    #[test]
    fn spectral_reconstruction_recovers_not() {
        let mut sum = [[c(0.0, 0.0); 2]; 2];
        for (value, state) in eigensystem_not() {
            let (a, b) = state.amplitudes();
            let v = [a, b];
            for i in 0..2 {
                for j in 0..2 {
                    sum[i][j] += v[i] * v[j].conj() * value;
                }
            }
        }
        let not = OneQubitOperator::not();
        for i in 0..2 {
            for j in 0..2 {
                assert!((sum[i][j] - not.entries()[i][j]).norm() <= NORM_TOL);
            }
        }
    }

    #[test]
    fn measurement_probability_fixtures() {
        let (p0, p1) = fixed_point_not().probabilities();
        assert!((p0 - 0.5).abs() <= NORM_TOL);
        assert!((p1 - 0.5).abs() <= NORM_TOL);

        assert_eq!(Qubit::zero().probabilities(), (1.0, 0.0));

        // squared moduli by hand: (3/5)^2 = 0.36, |4i/5|^2 = 0.64
        let q = Qubit::new(c(0.6, 0.0), c(0.0, 0.8)).unwrap();
        let (p0, p1) = q.probabilities();
        assert!((p0 - 0.36).abs() <= NORM_TOL);
        assert!((p1 - 0.64).abs() <= NORM_TOL);
    }

    #[test]
    fn classical_search_comes_back_empty() {
        assert!(!false == true);
        assert!(!true == false);
        assert!(classical_fixed_point_search().is_empty());
    }

    #[test]
    fn construction_guards() {
        assert!(Qubit::new(c(1.0, 0.0), c(1.0, 0.0)).is_err());
        assert!(Qubit::normalized(c(0.0, 0.0), c(0.0, 0.0)).is_err());
        let q = Qubit::normalized(c(3.0, 0.0), c(0.0, 4.0)).unwrap();
        assert!((q.probabilities().0 - 0.36).abs() <= NORM_TOL);

        let shear = [[c(1.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
        assert!(matches!(
            OneQubitOperator::new(shear),
            Err(QubitError::NotUnitary(_))
        ));
        assert!(OneQubitOperator::new(*OneQubitOperator::not().entries()).is_ok());
    }

    fn arb_qubit() -> impl Strategy<Value = Qubit> {
        (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)
            .prop_filter_map("nonzero amplitude vector", |(ar, ai, br, bi)| {
                Qubit::normalized(c(ar, ai), c(br, bi)).ok()
            })
    }

    fn arb_unitary() -> impl Strategy<Value = OneQubitOperator> {
        use std::f64::consts::TAU;
        (0.0..TAU, 0.0..TAU, 0.0..TAU, 0.0..TAU).prop_map(|(alpha, beta, gamma, theta)| {
            let phase = |t: f64| Complex64::from_polar(1.0, t);
            OneQubitOperator::new([
                [phase(alpha) * theta.cos(), -phase(beta) * theta.sin()],
                [
                    phase(gamma) * theta.sin(),
                    phase(beta + gamma - alpha) * theta.cos(),
                ],
            ])
            .expect("parametrized unitary")
        })
    }

    proptest! {
        #[test]
        fn prop_unitaries_preserve_norm(op in arb_unitary(), q in arb_qubit()) {
            let (p0, p1) = op.apply(&q).probabilities();
            prop_assert!((p0 + p1 - 1.0).abs() <= NORM_TOL);
            prop_assert!(p0 >= 0.0 && p1 >= 0.0);
        }

        #[test]
        fn prop_not_is_an_involution(q in arb_qubit()) {
            let not = OneQubitOperator::not();
            prop_assert!(not.apply(&not.apply(&q)).distance(&q) <= NORM_TOL);
        }
    }
}
