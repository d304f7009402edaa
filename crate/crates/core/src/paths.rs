//! Motzkin and Riordan lattice paths: exhaustive enumeration, λ-weighted
//! counting by dynamic programming, irreducible decomposition, and the
//! identification of level-free words with noncrossing pair partitions.
//!
//! A word over {Up, Level, Down} is a Motzkin path when no prefix dips
//! below the ground line and the final height is zero. Riordan paths are
//! Motzkin paths with no level step on the ground line. Weighted counts
//! attach λ to every level step, so the weighted Riordan count of size n
//! is the n-th vacuum moment of the single nonsymmetric position
//! operator on the weakly monotone Fock space.

use crate::algebra::LambdaPoly;
use crate::partitions::Partition;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

/// Default enumeration cap; weighted counting has no such cap because it
/// never materializes words.
pub const ENUMERATION_CAP: usize = 18;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("size {n} exceeds the enumeration cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("word is not a balanced Motzkin word")]
    Unbalanced,
    #[error("word contains level steps, so it is not a pair-partition word")]
    HasLevelSteps,
}

/// One lattice step. The DFS enumeration order is `Up < Level < Down`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Level,
    Down,
}

impl Step {
    pub fn to_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Level => 'L',
            Step::Down => 'D',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::Up),
            'L' => Some(Step::Level),
            'D' => Some(Step::Down),
            _ => None,
        }
    }

    fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Level => 0,
            Step::Down => -1,
        }
    }
}

/// A word over {U, L, D} that stays at nonnegative height and returns to
/// height zero, i.e. a Motzkin path.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PathWord {
    steps: Vec<Step>,
}

impl PathWord {
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        let mut h = 0i64;
        for s in &steps {
            h += s.delta();
            if h < 0 {
                return Err(PathError::Unbalanced);
            }
        }
        if h != 0 {
            return Err(PathError::Unbalanced);
        }
        Ok(PathWord { steps })
    }

    pub fn empty() -> Self {
        PathWord { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of level steps, the λ-exponent of the word's weight.
    pub fn level_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::Level).count()
    }

    /// True when no level step sits on the ground line and the word is
    /// nonempty-irreducibility is not required.
    pub fn is_riordan(&self) -> bool {
        let mut h = 0i64;
        for s in &self.steps {
            if *s == Step::Level && h == 0 {
                return false;
            }
            h += s.delta();
        }
        true
    }

    /// Parses a word like `"UDULD"`.
    pub fn parse(text: &str) -> Result<Self, PathError> {
        let steps: Option<Vec<Step>> = text.chars().map(Step::from_char).collect();
        PathWord::new(steps.ok_or(PathError::Unbalanced)?)
    }

    pub fn render(&self) -> String {
        self.steps.iter().map(|s| s.to_char()).collect()
    }

    /// Splits the word at every return to the ground line. Ground-level
    /// level steps come out as their own single-step factors; every other
    /// factor is irreducible (touches the ground only at its ends).
    pub fn decompose_irreducible(&self) -> Vec<PathWord> {
        let mut factors = Vec::new();
        let mut current = Vec::new();
        let mut h = 0i64;
        for &s in &self.steps {
            current.push(s);
            h += s.delta();
            if h == 0 {
                factors.push(PathWord { steps: std::mem::take(&mut current) });
            }
        }
        factors
    }

    /// Matches each Up with its closing Down (stack discipline) and
    /// returns the resulting noncrossing pair partition of the positions.
    /// The word must be level-free.
    pub fn to_pair_partition(&self) -> Result<Partition, PathError> {
        if self.steps.iter().any(|s| *s == Step::Level) {
            return Err(PathError::HasLevelSteps);
        }
        let mut stack = Vec::new();
        let mut blocks = Vec::new();
        for (pos, &s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => stack.push(pos + 1),
                Step::Down => {
                    let open = stack.pop().ok_or(PathError::Unbalanced)?;
                    blocks.push(vec![open, pos + 1]);
                }
                Step::Level => unreachable!(),
            }
        }
        if !stack.is_empty() {
            return Err(PathError::Unbalanced);
        }
        Ok(Partition::new(self.len(), blocks).expect("stack matching yields a valid partition"))
    }
}

impl fmt::Debug for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PathWord({})", self.render())
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn enumerate(n: usize, riordan: bool) -> Result<Vec<PathWord>, PathError> {
    if n > ENUMERATION_CAP {
        return Err(PathError::SizeCap { n, cap: ENUMERATION_CAP });
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    dfs(n, 0, riordan, &mut word, &mut out);
    Ok(out)
}

fn dfs(n: usize, height: i64, riordan: bool, word: &mut Vec<Step>, out: &mut Vec<PathWord>) {
    if word.len() == n {
        if height == 0 {
            out.push(PathWord { steps: word.clone() });
        }
        return;
    }
    let remaining = (n - word.len()) as i64;
    // Up < Level < Down gives deterministic lexicographic output.
    for step in [Step::Up, Step::Level, Step::Down] {
        let h = height + step.delta();
        if h < 0 || h > remaining - 1 {
            continue;
        }
        if riordan && step == Step::Level && height == 0 {
            continue;
        }
        word.push(step);
        dfs(n, h, riordan, word, out);
        word.pop();
    }
}

/// All Motzkin words of size n in lexicographic order (Up < Level < Down).
pub fn enumerate_motzkin(n: usize) -> Result<Vec<PathWord>, PathError> {
    enumerate(n, false)
}

/// All Riordan words of size n: Motzkin words with no ground-level level
/// step. Size 0 yields the empty word; size 1 yields nothing.
pub fn enumerate_riordan(n: usize) -> Result<Vec<PathWord>, PathError> {
    enumerate(n, true)
}

/// Weighted count over (position, height) cells; cell values are
/// polynomials in λ, one power per level step. `ground_level_allowed`
/// distinguishes the Motzkin family from the Riordan family.
fn weighted_count(n: usize, ground_level_allowed: bool) -> LambdaPoly {
    // heights never exceed n/2 on a path that must return to zero
    let hmax = n / 2 + 1;
    let mut cur = vec![LambdaPoly::zero(); hmax + 2];
    cur[0] = LambdaPoly::one();
    let lambda = LambdaPoly::lambda();
    for pos in 0..n {
        let remaining = (n - pos) as i64;
        let mut next = vec![LambdaPoly::zero(); hmax + 2];
        for (h, poly) in cur.iter().enumerate() {
            if poly.is_zero() {
                continue;
            }
            let h = h as i64;
            if h + 1 <= remaining - 1 && (h as usize) + 1 <= hmax + 1 {
                let slot = &mut next[(h + 1) as usize];
                *slot = &*slot + poly;
            }
            if h <= remaining - 1 && (ground_level_allowed || h > 0) {
                let weighted = poly * &lambda;
                let slot = &mut next[h as usize];
                *slot = &*slot + &weighted;
            }
            if h >= 1 {
                let slot = &mut next[(h - 1) as usize];
                *slot = &*slot + poly;
            }
        }
        cur = next;
    }
    cur[0].clone()
}

/// M_n(λ): weighted Motzkin count, λ on every level step.
pub fn weighted_count_motzkin(n: usize) -> LambdaPoly {
    weighted_count(n, true)
}

/// b_{1,n}(λ): weighted Riordan count, level steps forbidden on the
/// ground line.
pub fn weighted_count_riordan(n: usize) -> LambdaPoly {
    weighted_count(n, false)
}

/// n-th Motzkin number M_n.
pub fn motzkin_number(n: usize) -> BigInt {
    count_paths(n, true)
}

/// n-th Riordan number R_n (R₀ = 1, R₁ = 0).
pub fn riordan_number(n: usize) -> BigInt {
    count_paths(n, false)
}

fn count_paths(n: usize, ground_level_allowed: bool) -> BigInt {
    let hmax = n / 2 + 1;
    let mut cur = vec![BigInt::zero(); hmax + 2];
    cur[0] = BigInt::from(1);
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); hmax + 2];
        for (h, count) in cur.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            if h + 1 < next.len() {
                next[h + 1] += count;
            }
            if ground_level_allowed || h > 0 {
                next[h] += count;
            }
            if h >= 1 {
                next[h - 1] += count;
            }
        }
        cur = next;
    }
    cur[0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{binomial, catalan};

    #[test]
    fn motzkin_enumeration_small() {
        assert_eq!(enumerate_motzkin(0).unwrap(), vec![PathWord::empty()]);
        let n1 = enumerate_motzkin(1).unwrap();
        assert_eq!(n1.len(), 1);
        assert_eq!(n1[0].render(), "L");
        // Remark formula at n=4: Σ binom(4,2k)C_k = 1+6+2 = 9
        assert_eq!(enumerate_motzkin(4).unwrap().len(), 9);
    }

    #[test]
    fn riordan_enumeration_small() {
        assert_eq!(enumerate_riordan(0).unwrap(), vec![PathWord::empty()]);
        assert!(enumerate_riordan(1).unwrap().is_empty());
        let n2 = enumerate_riordan(2).unwrap();
        assert_eq!(n2.len(), 1);
        assert_eq!(n2[0].render(), "UD");
        assert_eq!(enumerate_riordan(5).unwrap().len(), 6);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        assert_eq!(
            enumerate_motzkin(19),
            Err(PathError::SizeCap { n: 19, cap: 18 })
        );
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        for n in 0..=8 {
            let words = enumerate_motzkin(n).unwrap();
            for w in words.windows(2) {
                assert!(w[0].steps() < w[1].steps(), "order violated at n={n}");
            }
        }
    }

    #[test]
    fn weighted_motzkin_small_values() {
        assert_eq!(weighted_count_motzkin(0), LambdaPoly::one());
        assert_eq!(weighted_count_motzkin(1), LambdaPoly::lambda());
        assert_eq!(weighted_count_motzkin(2), LambdaPoly::from_i64_coeffs(&[1, 0, 1]));
        assert_eq!(weighted_count_motzkin(3), LambdaPoly::from_i64_coeffs(&[0, 3, 0, 1]));
    }

    #[test]
    fn weighted_riordan_small_values() {
        let expected: Vec<LambdaPoly> = [
            vec![1],
            vec![0],
            vec![1],
            vec![0, 1],
            vec![2, 0, 1],
            vec![0, 5, 0, 1],
        ]
        .iter()
        .map(|c| LambdaPoly::from_i64_coeffs(c))
        .collect();
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(&weighted_count_riordan(n), want, "n={n}");
        }
    }

    #[test]
    fn weighted_counts_match_enumeration() {
        for n in 0..=14 {
            let motzkin = enumerate_motzkin(n).unwrap();
            let mut sum = LambdaPoly::zero();
            for w in &motzkin {
                sum = &sum + &LambdaPoly::lambda_pow(w.level_count());
            }
            assert_eq!(weighted_count_motzkin(n), sum, "motzkin n={n}");
            assert_eq!(
                weighted_count_motzkin(n).eval_at_one(),
                BigInt::from(motzkin.len()),
                "motzkin count n={n}"
            );

            let riordan = enumerate_riordan(n).unwrap();
            let mut sum = LambdaPoly::zero();
            for w in &riordan {
                assert!(w.is_riordan());
                sum = &sum + &LambdaPoly::lambda_pow(w.level_count());
            }
            assert_eq!(weighted_count_riordan(n), sum, "riordan n={n}");
        }
    }

    #[test]
    fn motzkin_riordan_number_identity() {
        // M_n = R_n + R_{n+1} and M_n = Σ binom(n,2k)C_k, n ≤ 16
        for n in 0..=16usize {
            let m = motzkin_number(n);
            assert_eq!(m, riordan_number(n) + riordan_number(n + 1), "n={n}");
            let mut sum = BigInt::zero();
            for k in 0..=(n / 2) {
                sum += binomial(n as u64, 2 * k as u64) * catalan(k as u64);
            }
            assert_eq!(m, sum, "n={n}");
        }
        assert_eq!(motzkin_number(4), BigInt::from(9));
        assert_eq!(riordan_number(4), BigInt::from(3));
        assert_eq!(riordan_number(5), BigInt::from(6));
        assert_eq!(riordan_number(0), BigInt::from(1));
        assert_eq!(riordan_number(1), BigInt::zero());
    }

    #[test]
    fn irreducible_decomposition() {
        let w = PathWord::parse("UDULD").unwrap();
        let factors = w.decompose_irreducible();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].render(), "UD");
        assert_eq!(factors[1].render(), "ULD");

        let irr = PathWord::parse("UULDD").unwrap();
        assert_eq!(irr.decompose_irreducible(), vec![irr.clone()]);

        assert!(PathWord::empty().decompose_irreducible().is_empty());

        // ground-level level steps become trivial factors
        let w = PathWord::parse("LUDL").unwrap();
        let rendered: Vec<String> = w.decompose_irreducible().iter().map(|f| f.render()).collect();
        assert_eq!(rendered, vec!["L", "UD", "L"]);
    }

    #[test]
    fn decompose_then_concatenate_is_identity() {
        for n in 0..=12 {
            for w in enumerate_motzkin(n).unwrap() {
                let mut rebuilt = Vec::new();
                for f in w.decompose_irreducible() {
                    rebuilt.extend_from_slice(f.steps());
                }
                assert_eq!(rebuilt, w.steps(), "word {w}");
            }
        }
    }

    #[test]
    fn pair_partition_identification() {
        let nested = PathWord::parse("UUDD").unwrap().to_pair_partition().unwrap();
        assert_eq!(nested.blocks(), &[vec![1, 4], vec![2, 3]]);
        let side = PathWord::parse("UDUD").unwrap().to_pair_partition().unwrap();
        assert_eq!(side.blocks(), &[vec![1, 2], vec![3, 4]]);
        let single = PathWord::parse("UD").unwrap().to_pair_partition().unwrap();
        assert_eq!(single.blocks(), &[vec![1, 2]]);
        assert_eq!(
            PathWord::parse("ULD").unwrap().to_pair_partition(),
            Err(PathError::HasLevelSteps)
        );
    }

    #[test]
    fn pair_partitions_are_noncrossing_pairings() {
        for n in [2usize, 4, 6, 8] {
            for w in enumerate_motzkin(n).unwrap() {
                if w.level_count() > 0 {
                    continue;
                }
                let p = w.to_pair_partition().unwrap();
                assert!(p.is_noncrossing());
                assert!(p.blocks().iter().all(|b| b.len() == 2));
            }
        }
    }

    #[test]
    fn invalid_words_are_rejected() {
        assert_eq!(PathWord::parse("DU"), Err(PathError::Unbalanced));
        assert_eq!(PathWord::parse("UU"), Err(PathError::Unbalanced));
    }
}
