//! Vacuum-moment recursions for sums of nonsymmetric position operators,
//! exact in λ, plus a pre-scaled floating-point variant for large sums
//! and the combinatorial moments of the limit law.
//!
//! The recursion peels off the first irreducible factor of an admissible
//! labeled partition: a spanning two-block labeled `l`, some outer
//! singletons inside it (forced to the same label), and a remainder
//! partition on the shrunken label set. The count of ways to interleave
//! `j` indistinguishable singletons with a remainder that has `r` outer
//! two-blocks is binom(r+j, j), so the table is refined by `r` (the
//! number of irreducible factors).
//!
//! The variant in which that interleave factor is applied to the whole
//! inner moment instead of the r-refined parts is kept as
//! [`RecursionForm::FactoredSingletons`]; it agrees with enumeration and
//! the operator oracle only for small sizes (it first deviates at size 7
//! for the weakly monotone class with one label, and at size 4 for the
//! monotone class) and exists to witness that defect.

use crate::algebra::{binomial, catalan, LambdaPoly};
use crate::paths::{weighted_count_motzkin, weighted_count_riordan};
use crate::Space;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Seed for the size-one weighted Motzkin polynomial in the Motzkin
/// recursion. `Lambda` is forced by direct enumeration (a single level
/// step carries weight λ); `Zero` reproduces the alternative seeding for
/// comparison and breaks the size-3 moment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotzkinSeed {
    Lambda,
    Zero,
}

/// Recursion form for the multi-label moment tables. `Refined` tracks the
/// number of outer two-blocks and is the product; `FactoredSingletons`
/// multiplies the singleton interleave count into the whole inner moment
/// and is kept only as a defect witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecursionForm {
    Refined,
    FactoredSingletons,
}

/// M_n(λ) through the level-strip/irreducible-factor recursion
/// M_n = λ^n + Σ_{k=0}^{n-2} λ^k Σ_{l=k+2}^{n} M_{n-l}·M_{l-k-2}.
pub fn motzkin_poly_recursive(n: usize) -> LambdaPoly {
    motzkin_poly_recursive_seeded(n, MotzkinSeed::Lambda)
}

pub fn motzkin_poly_recursive_seeded(n: usize, seed: MotzkinSeed) -> LambdaPoly {
    let mut table: Vec<LambdaPoly> = Vec::with_capacity(n + 1);
    table.push(LambdaPoly::one());
    if n >= 1 {
        table.push(match seed {
            MotzkinSeed::Lambda => LambdaPoly::lambda(),
            MotzkinSeed::Zero => LambdaPoly::zero(),
        });
    }
    for size in 2..=n {
        let mut acc = LambdaPoly::lambda_pow(size);
        for k in 0..=(size - 2) {
            let mut inner = LambdaPoly::zero();
            for l in (k + 2)..=size {
                inner = &inner + &(&table[size - l] * &table[l - k - 2]);
            }
            acc = &acc + &inner.shift(k);
        }
        table.push(acc);
    }
    table[n].clone()
}

/// b_{1,n}(λ) through the irreducible-Riordan decomposition
/// b_{1,n} = Σ_{k=2}^{n} b_{1,n-k}·M_{k-2}(λ), seeded b_{1,0}=1, b_{1,1}=0.
pub fn b1_moment(n: usize) -> LambdaPoly {
    b1_moment_seeded(n, MotzkinSeed::Lambda)
}

pub fn b1_moment_seeded(n: usize, seed: MotzkinSeed) -> LambdaPoly {
    let motzkin: Vec<LambdaPoly> = (0..=n.saturating_sub(2))
        .map(|k| motzkin_poly_recursive_seeded(k, seed))
        .collect();
    let mut table: Vec<LambdaPoly> = vec![LambdaPoly::one()];
    if n >= 1 {
        table.push(LambdaPoly::zero());
    }
    for size in 2..=n {
        let mut acc = LambdaPoly::zero();
        for k in 2..=size {
            acc = &acc + &(&table[size - k] * &motzkin[k - 2]);
        }
        table.push(acc);
    }
    table[n].clone()
}

/// Vacuum moments of a single position operator shifted by λ·Identity;
/// these are exactly the weighted Motzkin polynomials.
pub fn vacuum_moments_shifted(n: usize) -> LambdaPoly {
    weighted_count_motzkin(n)
}

/// Exact moment table over the label-set sizes 0..=m and sizes 0..=n_max.
/// The polynomial variable is the intensity carried by every singleton
/// (λ_m for the rescaled sums; substitute a plain λ for fixed-intensity
/// sums).
pub struct MomentTable {
    space: Space,
    /// refined[m'][n'][r]: weighted count of admissible labeled
    /// partitions with exactly r outer two-blocks.
    refined: Vec<Vec<Vec<LambdaPoly>>>,
    /// irreducible[m'][k]: weighted count of irreducible admissible
    /// labeled partitions of size k.
    irreducible: Vec<Vec<LambdaPoly>>,
    totals: Vec<Vec<LambdaPoly>>,
}

impl MomentTable {
    pub fn exact(space: Space, m: usize, n_max: usize) -> MomentTable {
        let rmax = n_max / 2 + 1;
        let zero = LambdaPoly::zero();
        let mut refined = vec![vec![vec![zero.clone(); rmax + 1]; n_max + 1]; m + 1];
        let mut irreducible = vec![vec![zero.clone(); n_max + 1]; m + 1];
        for row in refined.iter_mut() {
            row[0][0] = LambdaPoly::one();
        }
        for size in 2..=n_max {
            // inner weight of one irreducible factor of this size whose
            // interior remainder lives on a label set of size mu; only
            // sizes < size are consulted, so the table is complete here
            let mut inner = vec![zero.clone(); m + 1];
            for (mu, slot) in inner.iter_mut().enumerate() {
                let mut acc = LambdaPoly::zero();
                for j in 0..=(size - 2) {
                    let s = size - 2 - j;
                    let mut interleaved = LambdaPoly::zero();
                    for r in 0..=(s / 2) {
                        let part = &refined[mu][s][r];
                        if part.is_zero() {
                            continue;
                        }
                        interleaved = &interleaved + &part.scale(&binomial((r + j) as u64, j as u64));
                    }
                    acc = &acc + &interleaved.shift(j);
                }
                *slot = acc;
            }
            // sum over the label of the spanning block: prefix sums of
            // the inner weights over the remaining label-set size
            let mut prefix = zero.clone();
            for mp in 0..=m {
                match space {
                    Space::WeaklyMonotone => {
                        // remainder keeps the spanning label available
                        if mp >= 1 {
                            prefix = &prefix + &inner[mp];
                        }
                        irreducible[mp][size] = prefix.clone();
                    }
                    Space::Monotone => {
                        // remainder label set excludes the spanning label
                        irreducible[mp][size] = prefix.clone();
                        prefix = &prefix + &inner[mp];
                    }
                }
            }
            // split off the first irreducible factor
            for mp in 0..=m {
                for r in 1..=rmax {
                    let mut acc = LambdaPoly::zero();
                    for k in 2..=size {
                        let irr = &irreducible[mp][k];
                        let tail = &refined[mp][size - k][r - 1];
                        if irr.is_zero() || tail.is_zero() {
                            continue;
                        }
                        acc = &acc + &(irr * tail);
                    }
                    refined[mp][size][r] = acc;
                }
            }
        }
        let totals = refined
            .iter()
            .map(|row| {
                row.iter()
                    .map(|by_r| {
                        let mut acc = LambdaPoly::zero();
                        for p in by_r {
                            acc = &acc + p;
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        MomentTable { space, refined, irreducible, totals }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    /// Moment of size n for a label set of size m.
    pub fn moment(&self, m: usize, n: usize) -> &LambdaPoly {
        &self.totals[m][n]
    }

    /// Weighted irreducible count of size k for a label set of size m.
    pub fn irreducible(&self, m: usize, k: usize) -> &LambdaPoly {
        &self.irreducible[m][k]
    }

    /// Weighted count restricted to exactly r outer two-blocks.
    pub fn refined(&self, m: usize, n: usize, r: usize) -> &LambdaPoly {
        &self.refined[m][n][r]
    }
}

/// b_{m,n} as an exact polynomial in λ_m.
pub fn wm_moment(m: usize, n: usize) -> LambdaPoly {
    MomentTable::exact(Space::WeaklyMonotone, m, n).moment(m, n).clone()
}

/// g_{m,n} as an exact polynomial in λ_m.
pub fn mono_moment(m: usize, n: usize) -> LambdaPoly {
    MomentTable::exact(Space::Monotone, m, n).moment(m, n).clone()
}

/// Moment table built with the factored-singletons recursion form, the
/// defect witness. Weakly monotone and monotone variants share the shape;
/// the monotone one also keeps the label set un-shrunk, as that form
/// states it.
pub fn moment_factored_singletons(space: Space, m: usize, n: usize) -> LambdaPoly {
    let mut table = vec![vec![LambdaPoly::zero(); n + 1]; m + 1];
    for row in table.iter_mut() {
        row[0] = LambdaPoly::one();
    }
    for np in 2..=n {
        for mp in 1..=m {
            let mut acc = LambdaPoly::zero();
            for k in 2..=np {
                let mut inner_sum = LambdaPoly::zero();
                for l in 1..=mp {
                    let mu = mp - l + 1;
                    let mut inner = table[mu][k - 2].clone();
                    if k >= 3 {
                        for j in 1..=(k - 2) {
                            let s = k - 2 - j;
                            let half = s / 2;
                            let factor = if half >= 1 {
                                let mut coeff = BigInt::zero();
                                for r in 1..=half {
                                    coeff += binomial((r + j) as u64, j as u64);
                                }
                                LambdaPoly::lambda_pow(j).scale(&coeff)
                            } else {
                                LambdaPoly::lambda_pow(j)
                            };
                            inner = &inner + &(&table[mu][s] * &factor);
                        }
                    }
                    inner_sum = &inner_sum + &inner;
                }
                acc = &acc + &(&table[mp][np - k] * &inner_sum);
            }
            table[mp][np] = acc;
        }
    }
    table[m][n].clone()
}

/// Pre-scaled floating-point moment table: entries are
/// b_{m',n'}(λ√m)/m^{n'/2} (or the monotone analogue), kept O(1) so the
/// recursion never overflows doubles even for very large m.
pub struct ScaledMomentTable {
    space: Space,
    m: usize,
    lambda: f64,
    /// refined[m'][n'][r], scaled by the outer m.
    refined: Vec<Vec<Vec<f64>>>,
    totals: Vec<Vec<f64>>,
}

impl ScaledMomentTable {
    pub fn new(space: Space, m: usize, n_max: usize, lambda: f64) -> ScaledMomentTable {
        assert!(m >= 1);
        let rmax = n_max / 2 + 1;
        let mut refined = vec![vec![vec![0.0; rmax + 1]; n_max + 1]; m + 1];
        for row in refined.iter_mut() {
            row[0][0] = 1.0;
        }
        let inv_m = 1.0 / m as f64;
        let lambda_pows: Vec<f64> = (0..=n_max).map(|j| lambda.powi(j as i32)).collect();
        // irreducible[mp][k], filled as the size loop advances
        let mut irreducible = vec![vec![0.0; n_max + 1]; m + 1];
        for size in 2..=n_max {
            let mut inner = vec![0.0; m + 1];
            for (mu, slot) in inner.iter_mut().enumerate() {
                let mut acc = 0.0;
                for j in 0..=(size - 2) {
                    let s = size - 2 - j;
                    let mut interleaved = 0.0;
                    for r in 0..=(s / 2) {
                        let part = refined[mu][s][r];
                        if part == 0.0 {
                            continue;
                        }
                        let c = binomial((r + j) as u64, j as u64).to_f64().unwrap();
                        interleaved += c * part;
                    }
                    acc += lambda_pows[j] * interleaved;
                }
                *slot = acc * inv_m;
            }
            let mut prefix = 0.0;
            for mp in 0..=m {
                match space {
                    Space::WeaklyMonotone => {
                        if mp >= 1 {
                            prefix += inner[mp];
                        }
                        irreducible[mp][size] = prefix;
                    }
                    Space::Monotone => {
                        irreducible[mp][size] = prefix;
                        prefix += inner[mp];
                    }
                }
            }
            for mp in 0..=m {
                for r in 1..=rmax {
                    let mut acc = 0.0;
                    for k in 2..=size {
                        acc += irreducible[mp][k] * refined[mp][size - k][r - 1];
                    }
                    refined[mp][size][r] = acc;
                }
            }
        }
        let totals = refined
            .iter()
            .map(|row| row.iter().map(|by_r| by_r.iter().sum()).collect())
            .collect();
        ScaledMomentTable { space, m, lambda, refined, totals }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn label_count(&self) -> usize {
        self.m
    }

    /// Scaled moment b_{m,n}(λ√m)/m^{n/2} at the full label count.
    pub fn moment(&self, n: usize) -> f64 {
        self.totals[self.m][n]
    }

    pub fn refined(&self, m: usize, n: usize, r: usize) -> f64 {
        self.refined[m][n][r]
    }
}

/// Scaled moment of the normalized sum of m nonsymmetric position
/// operators with intensity λ.
pub fn scaled_moment(space: Space, m: usize, n: usize, lambda: f64) -> f64 {
    ScaledMomentTable::new(space, m, n, lambda).moment(n)
}

/// Per-part factor of the limit moment: the weight contributed by one
/// irreducible factor of size q in the large-m limit.
fn limit_part_factor(q: usize, lambda: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for k in 0..=((q - 2) / 2) {
        let coeff = BigRational::new(
            binomial((q - 2) as u64, 2 * k as u64) * catalan(k as u64),
            BigInt::from(2u64).pow(k as u32),
        );
        let mut pow = BigRational::one();
        for _ in 0..(q - 2 - 2 * k) {
            pow *= lambda;
        }
        acc += coeff * pow;
    }
    acc
}

/// Exact n-th moment of the limit law: sum over compositions of n into
/// parts ≥ 2 of the product of per-part factors (arcsine moments enter
/// through A_k/(k+1) = C_k/2^k).
pub fn limit_moment_rational(n: usize, lambda: &BigRational) -> BigRational {
    let mut table: Vec<BigRational> = vec![BigRational::one()];
    if n >= 1 {
        table.push(BigRational::zero());
    }
    for size in 2..=n {
        let mut acc = BigRational::zero();
        for q in 2..=size {
            let part = limit_part_factor(q, lambda);
            acc += part * &table[size - q];
        }
        table.push(acc);
    }
    table[n].clone()
}

/// Floating-point limit moment.
pub fn limit_moment_combinatorial(n: usize, lambda: f64) -> f64 {
    let mut table: Vec<f64> = vec![1.0];
    if n >= 1 {
        table.push(0.0);
    }
    for size in 2..=n {
        let mut acc = 0.0;
        for q in 2..=size {
            let mut part = 0.0;
            for k in 0..=((q - 2) / 2) {
                let c = (binomial((q - 2) as u64, 2 * k as u64) * catalan(k as u64))
                    .to_f64()
                    .unwrap();
                part += c / 2f64.powi(k as i32) * lambda.powi((q - 2 - 2 * k) as i32);
            }
            acc += part * table[size - q];
        }
        table.push(acc);
    }
    table[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_anc_mono, enumerate_anc_wm, LabeledPartition};

    fn p(coeffs: &[i64]) -> LambdaPoly {
        LambdaPoly::from_i64_coeffs(coeffs)
    }

    fn weighted_sum(class: &[LabeledPartition]) -> LambdaPoly {
        let mut acc = LambdaPoly::zero();
        for lp in class {
            acc = &acc + &LambdaPoly::lambda_pow(lp.singleton_count());
        }
        acc
    }

    #[test]
    fn motzkin_recursion_matches_dp() {
        assert_eq!(motzkin_poly_recursive(0), LambdaPoly::one());
        assert_eq!(motzkin_poly_recursive(2), p(&[1, 0, 1]));
        assert_eq!(motzkin_poly_recursive(3), p(&[0, 3, 0, 1]));
        for n in 0..=30 {
            assert_eq!(motzkin_poly_recursive(n), weighted_count_motzkin(n), "n={n}");
        }
    }

    #[test]
    fn zero_seed_breaks_size_three() {
        assert_eq!(motzkin_poly_recursive_seeded(3, MotzkinSeed::Zero), p(&[0, 1, 0, 1]));
        assert_ne!(
            motzkin_poly_recursive_seeded(3, MotzkinSeed::Zero),
            weighted_count_motzkin(3)
        );
        assert_eq!(b1_moment_seeded(3, MotzkinSeed::Zero), LambdaPoly::zero());
        assert_eq!(b1_moment(3), LambdaPoly::lambda());
    }

    #[test]
    fn b1_recursion_matches_dp() {
        assert_eq!(b1_moment(4), p(&[2, 0, 1]));
        assert_eq!(b1_moment(5), p(&[0, 5, 0, 1]));
        for n in 0..=30 {
            assert_eq!(b1_moment(n), weighted_count_riordan(n), "n={n}");
        }
    }

    #[test]
    fn b1_is_monic_of_degree_n_minus_2() {
        for n in 2..=24 {
            let b = b1_moment(n);
            assert_eq!(b.degree(), Some(n - 2), "n={n}");
            assert!(b.is_monic(), "n={n}");
        }
    }

    #[test]
    fn multi_label_table_reduces_to_single_label() {
        let table = MomentTable::exact(Space::WeaklyMonotone, 1, 14);
        for n in 0..=14 {
            assert_eq!(table.moment(1, n), &b1_moment(n), "n={n}");
        }
        // the irreducible weights of the single-label table are the
        // weighted Motzkin polynomials two sizes down
        for k in 2..=14 {
            assert_eq!(table.irreducible(1, k), &weighted_count_motzkin(k - 2), "k={k}");
        }
    }

    #[test]
    fn table_seed_rows() {
        for space in [Space::WeaklyMonotone, Space::Monotone] {
            let table = MomentTable::exact(space, 3, 6);
            for m in 0..=3 {
                assert_eq!(table.moment(m, 0), &LambdaPoly::one());
                assert_eq!(table.moment(m, 1), &LambdaPoly::zero());
            }
        }
    }

    #[test]
    fn wm_moments_match_enumeration() {
        for m in 1..=3 {
            let table = MomentTable::exact(Space::WeaklyMonotone, m, 10);
            for n in 0..=10 {
                let class = enumerate_anc_wm(m, n).unwrap();
                assert_eq!(table.moment(m, n), &weighted_sum(&class), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn mono_moments_match_enumeration() {
        for m in 1..=3 {
            let table = MomentTable::exact(Space::Monotone, m, 10);
            for n in 0..=10 {
                let class = enumerate_anc_mono(m, n).unwrap();
                assert_eq!(table.moment(m, n), &weighted_sum(&class), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn known_small_moments() {
        assert_eq!(wm_moment(2, 4), p(&[7, 0, 2]));
        assert_eq!(mono_moment(2, 4), p(&[5, 0, 2]));
        assert_eq!(wm_moment(2, 2), p(&[2]));
        assert_eq!(mono_moment(3, 2), p(&[3]));
    }

    #[test]
    fn mono_single_label_is_fibonacci_at_one() {
        let table = MomentTable::exact(Space::Monotone, 1, 20);
        let mut fib = vec![BigInt::from(1), BigInt::zero(), BigInt::from(1)];
        for n in 3..=20 {
            let next = &fib[n - 1] + &fib[n - 2];
            fib.push(next);
        }
        for n in 0..=20 {
            assert_eq!(table.moment(1, n).eval_at_one(), fib[n], "n={n}");
        }
    }

    #[test]
    fn factored_singletons_form_deviates_where_expected() {
        for n in 0..=6 {
            assert_eq!(
                moment_factored_singletons(Space::WeaklyMonotone, 1, n),
                b1_moment(n),
                "n={n}"
            );
        }
        let printed = moment_factored_singletons(Space::WeaklyMonotone, 1, 7);
        let truth = b1_moment(7);
        assert_eq!(truth, p(&[0, 21, 0, 14, 0, 1]));
        assert_eq!(printed, p(&[0, 26, 0, 17, 0, 1]));
        assert_ne!(printed, truth);

        for n in 0..=3 {
            assert_eq!(
                moment_factored_singletons(Space::Monotone, 1, n),
                mono_moment(1, n),
                "n={n}"
            );
        }
        let printed = moment_factored_singletons(Space::Monotone, 1, 4);
        assert_eq!(printed, p(&[2, 0, 1]));
        assert_eq!(mono_moment(1, 4), p(&[1, 0, 1]));
    }

    #[test]
    fn scaled_matches_exact_where_feasible() {
        for space in [Space::WeaklyMonotone, Space::Monotone] {
            for &m in &[1usize, 2, 5, 17, 50] {
                let exact = MomentTable::exact(space, m, 12);
                for &lambda in &[0.5f64, 1.0, 2.0] {
                    let scaled = ScaledMomentTable::new(space, m, 12, lambda);
                    let lam_m = lambda * (m as f64).sqrt();
                    for n in 0..=12 {
                        let reference = exact.moment(m, n).eval_f64(lam_m) / (m as f64).powi(n as i32 / 2)
                            / if n % 2 == 1 { (m as f64).sqrt() } else { 1.0 };
                        let got = scaled.moment(n);
                        let denom = reference.abs().max(1.0);
                        assert!(
                            (got - reference).abs() / denom < 1e-10,
                            "space={space:?} m={m} n={n} λ={lambda}: {got} vs {reference}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn scaled_low_moments_closed_forms() {
        for &m in &[10usize, 100, 10_000] {
            for &lambda in &[0.5f64, 1.0, 2.0] {
                let t = ScaledMomentTable::new(Space::WeaklyMonotone, m, 4, lambda);
                assert_eq!(t.moment(0), 1.0);
                assert_eq!(t.moment(1), 0.0);
                assert!((t.moment(2) - 1.0).abs() < 1e-14);
                assert!((t.moment(3) - lambda).abs() < 1e-13);
                let expected = lambda * lambda + 1.5 + 0.5 / m as f64;
                assert!((t.moment(4) - expected).abs() < 1e-12, "m={m} λ={lambda}");
            }
        }
    }

    #[test]
    fn limit_moments_small() {
        for &lambda in &[0.5f64, 1.0, 2.0] {
            assert_eq!(limit_moment_combinatorial(0, lambda), 1.0);
            assert_eq!(limit_moment_combinatorial(1, lambda), 0.0);
            assert!((limit_moment_combinatorial(2, lambda) - 1.0).abs() < 1e-15);
            assert!((limit_moment_combinatorial(3, lambda) - lambda).abs() < 1e-15);
            assert!(
                (limit_moment_combinatorial(4, lambda) - (lambda * lambda + 1.5)).abs() < 1e-14
            );
        }
        let lam = BigRational::new(BigInt::from(1), BigInt::from(2));
        let l5 = limit_moment_rational(5, &lam);
        // λ³ + 7λ/2 at λ = 1/2 is 1/8 + 7/4 = 15/8
        assert_eq!(l5, BigRational::new(BigInt::from(15), BigInt::from(8)));
        for n in 0..=10 {
            let exact = limit_moment_rational(n, &lam).to_f64().unwrap();
            let float = limit_moment_combinatorial(n, 0.5);
            assert!((exact - float).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn scaled_moments_converge_to_limit() {
        for space in [Space::WeaklyMonotone, Space::Monotone] {
            for &lambda in &[0.5f64, 1.0, 2.0] {
                let mut previous = f64::INFINITY;
                for &m in &[100usize, 1_000, 10_000] {
                    let t = ScaledMomentTable::new(space, m, 8, lambda);
                    let mut worst = 0.0f64;
                    for n in 0..=8 {
                        let err = (t.moment(n) - limit_moment_combinatorial(n, lambda)).abs();
                        worst = worst.max(err);
                    }
                    assert!(worst < previous, "space={space:?} λ={lambda} m={m}");
                    previous = worst;
                    if m == 10_000 {
                        assert!(worst <= 1e-2, "space={space:?} λ={lambda}: {worst}");
                    }
                }
            }
        }
    }
}
