//! Kostant partition functions on complete graphs and Tesler matrix
//! enumeration.
//!
//! `kostant(v)` counts the integer flows on the complete graph `k_m` with
//! netflow `v` (equivalently, the ways to write `v` as a nonnegative
//! combination of the positive roots `e_i − e_j`, `i < j`). The count of
//! Tesler matrices with hook sums `a` is `kostant(a, −Σa)`.
//!
//! Counting processes the vertices in order: at vertex `k` the available
//! supply is the netflow plus the accumulated inflow, and every distribution
//! of that supply over the outgoing edges is explored. Supplies that go
//! negative contribute nothing, which is what makes the same recursion usable
//! for the inner terms of Lidskii expansions where intermediate netflows are
//! negative. States are memoized on the residual netflow suffix — each suffix
//! is itself a Kostant instance on a smaller complete graph — so a single
//! [`KostantSolver`] amortizes work across many related evaluations.

use std::collections::HashMap;

use num::{BigInt, One, Signed, Zero};

use crate::core::{HookSums, TeslerMatrix};
use crate::error::{Error, Result};
use crate::util::WeakCompositions;

/// Netflow vector for `k_m`: `m ≥ 1` integers (possibly negative) summing to zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NetflowVector {
    values: Vec<BigInt>,
}

impl NetflowVector {
    pub fn new(values: Vec<BigInt>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::ShapeMismatch { expected: 1 });
        }
        if !values.iter().sum::<BigInt>().is_zero() {
            return Err(Error::NetflowNotZeroSum);
        }
        Ok(Self { values })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// `(a_1, …, a_n, −Σa)`.
    pub fn from_hooks(a: &HookSums) -> Self {
        let mut values = a.values().to_vec();
        values.push(-a.total());
        Self { values }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    /// Reverse the vector and negate every coordinate. Reversing each flow
    /// shows the Kostant value is invariant under this map.
    pub fn reversed(&self) -> NetflowVector {
        NetflowVector {
            values: self.values.iter().rev().map(|v| -v).collect(),
        }
    }
}

/// Memoized evaluator for Kostant partition functions.
///
/// The memo maps a residual netflow suffix to its flow count; it can be
/// reused across evaluations (the Lidskii sums do so). Not shared between
/// threads; build one per thread when parallelizing.
#[derive(Debug, Default)]
pub struct KostantSolver {
    memo: HashMap<Vec<BigInt>, BigInt>,
}

impl KostantSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn eval(&mut self, v: &NetflowVector) -> BigInt {
        self.count(v.values())
    }

    fn count(&mut self, state: &[BigInt]) -> BigInt {
        if state.len() == 1 {
            return if state[0].is_zero() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        if state[0].is_negative() {
            return BigInt::zero();
        }
        if let Some(hit) = self.memo.get(state) {
            return hit.clone();
        }
        let parts = state.len() - 1;
        let mut total = BigInt::zero();
        for comp in WeakCompositions::new(state[0].clone(), parts) {
            let next: Vec<BigInt> = state[1..]
                .iter()
                .zip(&comp)
                .map(|(w, c)| w + c)
                .collect();
            total += self.count(&next);
        }
        self.memo.insert(state.to_vec(), total.clone());
        total
    }
}

/// Number of integer flows on the complete graph with netflow `v`.
pub fn kostant(v: &NetflowVector) -> BigInt {
    KostantSolver::new().eval(v)
}

/// Checks the reversal invariance `K(a_1,…,a_n,−Σ) = K(Σ,−a_n,…,−a_1)` on
/// `v` and returns the common value.
pub fn kostant_reversed_equal(v: &NetflowVector) -> Result<BigInt> {
    let mut solver = KostantSolver::new();
    let forward = solver.eval(v);
    let backward = solver.eval(&v.reversed());
    if forward != backward {
        return Err(Error::Internal(format!(
            "Kostant reversal mismatch: {forward} vs {backward}"
        )));
    }
    Ok(forward)
}

/// Number of Tesler matrices with hook sums `a`.
pub fn count_tesler(a: &HookSums) -> BigInt {
    kostant(&NetflowVector::from_hooks(a))
}

/// All Tesler matrices with hook sums `a`, in lexicographic order of the
/// flattened rows.
pub fn enumerate_tesler(a: &HookSums) -> Vec<TeslerMatrix> {
    let mut out = Vec::new();
    for_each_tesler(a, |m| out.push(m.clone()));
    out
}

/// Streaming variant of [`enumerate_tesler`]: invokes `emit` once per matrix,
/// in the same canonical order.
pub fn for_each_tesler<F: FnMut(&TeslerMatrix)>(a: &HookSums, mut emit: F) {
    for_each_tesler_while(a, |m| {
        emit(m);
        true
    });
}

/// Like [`for_each_tesler`], but stops early when `emit` returns `false`.
pub fn for_each_tesler_while<F: FnMut(&TeslerMatrix) -> bool>(a: &HookSums, mut emit: F) {
    let n = a.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    // inflow[j] = column sum so far into column j+1 (0-based)
    let mut inflow = vec![BigInt::zero(); n];
    fill_rows(a, n, 0, &mut rows, &mut inflow, &mut |rows| {
        emit(&TeslerMatrix::from_parts_unchecked(
            rows.to_vec(),
            a.clone(),
        ))
    });
}

fn fill_rows(
    a: &HookSums,
    n: usize,
    k: usize,
    rows: &mut Vec<Vec<BigInt>>,
    inflow: &mut [BigInt],
    sink: &mut dyn FnMut(&[Vec<BigInt>]) -> bool,
) -> bool {
    if k == n {
        return sink(rows);
    }
    // Row k+1 distributes a_{k+1} plus the inflow received so far.
    let supply = a.get(k + 1) + &inflow[k];
    for comp in WeakCompositions::new(supply, n - k) {
        for (off, c) in comp.iter().enumerate().skip(1) {
            inflow[k + off] += c;
        }
        rows.push(comp.clone());
        let keep_going = fill_rows(a, n, k + 1, rows, inflow, sink);
        rows.pop();
        for (off, c) in comp.iter().enumerate().skip(1) {
            inflow[k + off] -= c;
        }
        if !keep_going {
            return false;
        }
    }
    true
}

/// Counts Tesler matrices by projecting away the last row: every matrix over
/// `(a_1,…,a_{n-1})` lifts in `∏ (1 + b_{i,i})` ways.
pub fn count_via_projection(a: &HookSums) -> Result<BigInt> {
    let n = a.len();
    if n < 2 {
        return Err(Error::OutOfDomain(
            "projection recursion needs n >= 2".into(),
        ));
    }
    let prefix = HookSums::new(a.values()[..n - 1].to_vec())?;
    let mut total = BigInt::zero();
    for_each_tesler(&prefix, |b| {
        let mut weight = BigInt::one();
        for i in 1..n {
            weight *= b.entry(i, i) + 1;
        }
        total += weight;
    });
    Ok(total)
}

/// The `n!` Tesler matrices with at most one nonzero entry per row, in
/// canonical order. Requires every hook sum positive (those are exactly the
/// cases where these matrices are the vertices of the polytope).
pub fn permutation_teslers(a: &HookSums) -> Result<Vec<TeslerMatrix>> {
    if !a.all_positive() {
        return Err(Error::PositiveHooksRequired);
    }
    let n = a.len();
    let mut out = Vec::new();
    let mut support = vec![0usize; n];
    build_permutation(a, n, 1, &mut support, &mut out);
    out.sort_by_key(|m| m.flatten());
    Ok(out)
}

fn build_permutation(
    a: &HookSums,
    n: usize,
    row: usize,
    support: &mut [usize],
    out: &mut Vec<TeslerMatrix>,
) {
    if row > n {
        // each row's single entry absorbs its full supply
        let mut rows: Vec<Vec<BigInt>> = (0..n).map(|i| vec![BigInt::zero(); n - i]).collect();
        let mut inflow = vec![BigInt::zero(); n + 1];
        for i in 1..=n {
            let value = a.get(i) + &inflow[i];
            let j = support[i - 1];
            inflow[j] += &value;
            rows[i - 1][j - i] = value;
        }
        out.push(TeslerMatrix::from_parts_unchecked(rows, a.clone()));
        return;
    }
    for j in row..=n {
        support[row - 1] = j;
        build_permutation(a, n, row + 1, support, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent oracle: odometer over raw upper-triangular fillings with a
    /// per-row hook-sum check straight from the definition.
    pub(crate) fn brute_force_teslers(a: &HookSums) -> Vec<Vec<Vec<BigInt>>> {
        let n = a.len();
        let bound: BigInt = a.total();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        brute_rows(a, n, &bound, &mut rows, &mut out);
        out
    }

    fn brute_rows(
        a: &HookSums,
        n: usize,
        bound: &BigInt,
        rows: &mut Vec<Vec<BigInt>>,
        out: &mut Vec<Vec<Vec<BigInt>>>,
    ) {
        let k = rows.len();
        if k == n {
            out.push(rows.clone());
            return;
        }
        let width = n - k;
        let mut cells = vec![BigInt::zero(); width];
        loop {
            // row-(k+1) hook sum straight from the definition
            let row_sum: BigInt = cells.iter().sum();
            let col_sum: BigInt = (1..=k).map(|i| &rows[i - 1][k + 1 - i]).sum();
            if row_sum - col_sum == *a.get(k + 1) {
                rows.push(cells.clone());
                brute_rows(a, n, bound, rows, out);
                rows.pop();
            }
            // odometer over [0, bound]^width
            let mut pos = width;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                if cells[pos] < *bound {
                    cells[pos] += 1;
                    for c in cells[pos + 1..].iter_mut() {
                        *c = BigInt::zero();
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn kostant_paper_values() {
        assert_eq!(
            kostant(&NetflowVector::from_ints(&[1, 1, 1, -3]).unwrap()),
            BigInt::from(7)
        );
        assert_eq!(
            kostant(&NetflowVector::from_ints(&[1, -1, 0]).unwrap()),
            BigInt::one()
        );
        assert_eq!(
            kostant(&NetflowVector::from_ints(&[0, 0, 0]).unwrap()),
            BigInt::one()
        );
        assert_eq!(
            kostant(&NetflowVector::from_ints(&[0, 0, 0, 0, 0, 0]).unwrap()),
            BigInt::one()
        );
    }

    #[test]
    fn netflow_must_sum_to_zero() {
        assert!(matches!(
            NetflowVector::from_ints(&[1, 1]),
            Err(Error::NetflowNotZeroSum)
        ));
    }

    #[test]
    fn reversal_examples() {
        let v = NetflowVector::from_ints(&[1, 1, 1, -3]).unwrap();
        assert_eq!(
            v.reversed(),
            NetflowVector::from_ints(&[3, -1, -1, -1]).unwrap()
        );
        assert_eq!(kostant_reversed_equal(&v).unwrap(), BigInt::from(7));
        let w = NetflowVector::from_ints(&[1, -1, 0]).unwrap();
        assert_eq!(kostant_reversed_equal(&w).unwrap(), BigInt::one());
        let z = NetflowVector::from_ints(&[0, 0, 0, 0]).unwrap();
        assert_eq!(kostant_reversed_equal(&z).unwrap(), BigInt::one());
    }

    #[test]
    fn reversal_on_random_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7e51e2);
        for _ in 0..200 {
            let n = rng.random_range(1..=6);
            let hooks: Vec<i64> = (0..n).map(|_| rng.random_range(0..=4)).collect();
            let a = HookSums::from_ints(&hooks).unwrap();
            let v = NetflowVector::from_hooks(&a);
            kostant_reversed_equal(&v).unwrap();
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_tesler(&HookSums::ones(3)), BigInt::from(7));
        assert_eq!(count_tesler(&HookSums::ones(5)), BigInt::from(357));
        assert_eq!(
            count_tesler(&HookSums::from_ints(&[9]).unwrap()),
            BigInt::one()
        );
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for hooks in [
            vec![1, 1],
            vec![1, 0],
            vec![0, 0],
            vec![1, 1, 1],
            vec![2, 0, 1],
            vec![0, 2, 1],
        ] {
            let a = HookSums::from_ints(&hooks).unwrap();
            let listed = enumerate_tesler(&a);
            let mut ours: Vec<Vec<Vec<BigInt>>> =
                listed.iter().map(|m| m.rows().to_vec()).collect();
            let mut brute = brute_force_teslers(&a);
            ours.sort();
            brute.sort();
            assert_eq!(ours, brute, "hooks {hooks:?}");
            assert_eq!(BigInt::from(listed.len()), count_tesler(&a));
        }
    }

    #[test]
    fn enumeration_canonical_order_and_members() {
        let a = HookSums::ones(3);
        let ms = enumerate_tesler(&a);
        assert_eq!(ms.len(), 7);
        let flat: Vec<Vec<BigInt>> = ms.iter().map(|m| m.flatten()).collect();
        let mut sorted = flat.clone();
        sorted.sort();
        assert_eq!(flat, sorted);
        let diag = TeslerMatrix::new(
            vec![
                vec![BigInt::from(1), BigInt::zero(), BigInt::zero()],
                vec![BigInt::from(1), BigInt::zero()],
                vec![BigInt::from(1)],
            ],
            a.clone(),
        )
        .unwrap();
        assert!(ms.contains(&diag));
        let other = TeslerMatrix::new(
            vec![
                vec![BigInt::zero(), BigInt::zero(), BigInt::from(1)],
                vec![BigInt::zero(), BigInt::from(1)],
                vec![BigInt::from(3)],
            ],
            a.clone(),
        )
        .unwrap();
        assert!(ms.contains(&other));
    }

    #[test]
    fn enumeration_small_cases() {
        let a = HookSums::from_ints(&[1, 1]).unwrap();
        let ms = enumerate_tesler(&a);
        let flats: Vec<Vec<BigInt>> = ms.iter().map(|m| m.flatten()).collect();
        assert_eq!(
            flats,
            vec![
                vec![BigInt::zero(), BigInt::from(1), BigInt::from(2)],
                vec![BigInt::from(1), BigInt::zero(), BigInt::from(1)],
            ]
        );
        let zeros = enumerate_tesler(&HookSums::from_ints(&[0, 0]).unwrap());
        assert_eq!(zeros.len(), 1);
        assert!(zeros[0].flatten().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn hook_sums_hold_on_everything_enumerated() {
        for hooks in [vec![1, 1, 1], vec![2, 1, 0], vec![0, 1, 2]] {
            let a = HookSums::from_ints(&hooks).unwrap();
            for m in enumerate_tesler(&a) {
                for k in 1..=a.len() {
                    assert_eq!(
                        crate::core::hook_sum(m.rows(), k).unwrap(),
                        *a.get(k)
                    );
                }
            }
        }
    }

    #[test]
    fn projection_recursion() {
        assert_eq!(
            count_via_projection(&HookSums::ones(3)).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            count_via_projection(&HookSums::ones(4)).unwrap(),
            BigInt::from(40)
        );
        assert_eq!(
            count_via_projection(&HookSums::from_ints(&[1, 0]).unwrap()).unwrap(),
            BigInt::from(2)
        );
        assert!(matches!(
            count_via_projection(&HookSums::from_ints(&[1]).unwrap()),
            Err(Error::OutOfDomain(_))
        ));
    }

    #[test]
    fn permutation_tesler_counts() {
        let two = permutation_teslers(&HookSums::ones(2)).unwrap();
        assert_eq!(two.len(), 2);
        let flats: Vec<Vec<BigInt>> = two.iter().map(|m| m.flatten()).collect();
        assert_eq!(
            flats,
            vec![
                vec![BigInt::zero(), BigInt::from(1), BigInt::from(2)],
                vec![BigInt::from(1), BigInt::zero(), BigInt::from(1)],
            ]
        );
        assert_eq!(permutation_teslers(&HookSums::ones(3)).unwrap().len(), 6);
        assert_eq!(permutation_teslers(&HookSums::ones(4)).unwrap().len(), 24);
        assert!(matches!(
            permutation_teslers(&HookSums::from_ints(&[1, 0]).unwrap()),
            Err(Error::PositiveHooksRequired)
        ));
    }

    #[test]
    fn permutation_teslers_have_single_support_rows() {
        for m in permutation_teslers(&HookSums::from_ints(&[2, 1, 3]).unwrap()).unwrap() {
            for i in 1..=3 {
                let nonzero = m.rows()[i - 1].iter().filter(|v| v.is_positive()).count();
                assert_eq!(nonzero, 1);
            }
        }
    }

    #[test]
    fn bounds_for_ones() {
        // n! <= T_n(1) <= 2^(n choose 2)
        let expected = [1u64, 2, 7, 40, 357, 4820, 96030];
        for n in 2..=7usize {
            let factorial = (1..=n).fold(BigInt::one(), |acc, k| acc * k);
            let t = count_tesler(&HookSums::ones(n));
            assert_eq!(t, BigInt::from(expected[n - 1]));
            assert!(factorial <= t);
            assert!(t <= BigInt::from(2u32).pow((n * (n - 1) / 2) as u32));
        }
    }
}
