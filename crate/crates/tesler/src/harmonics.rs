//! q,t-weighted Tesler sums and their combinatorial oracles.
//!
//! Two weights on Tesler matrices are summed over all-ones hook sums: the
//! Haglund weight, whose total is the bigraded Hilbert series of diagonal
//! harmonics, and the Gorsky-Negut weight, whose total is the q,t-Catalan
//! polynomial. The oracles computing the same polynomials independently are
//! parking functions carrying (dinv, area) and Dyck paths carrying
//! (area, bounce).

use num::{BigInt, One, ToPrimitive, Zero};

use crate::core::{HookSums, TeslerMatrix};
use crate::error::{Error, Result};
use crate::kostant::{for_each_tesler, permutation_teslers};
use crate::qt::{neg_m, qt_bracket, QTPoly};

fn exponent_of(entry: &BigInt) -> Result<u32> {
    entry
        .to_u32()
        .ok_or_else(|| Error::OutOfDomain("matrix entry too large for a q,t exponent".into()))
}

/// Haglund weight `wt(A) = (−M)^{-n} ∏_{a_{ij}>0} (−M)·[a_{ij}]_{q,t}` with
/// `M = (1−q)(1−t)`. The division by `(−M)^n` is performed one exact factor
/// at a time; a nonzero remainder means the matrix had fewer than `n`
/// positive entries.
pub fn haglund_weight(m: &TeslerMatrix) -> Result<QTPoly> {
    let minus_m = neg_m();
    let mut product = QTPoly::one();
    for (_, _, entry) in m.positive_entries() {
        let factor = &minus_m * &qt_bracket(exponent_of(entry)?)?;
        product = &product * &factor;
    }
    for _ in 0..m.n() {
        product = product.exact_div(&minus_m)?;
    }
    Ok(product)
}

/// Bigraded Hilbert series of diagonal harmonics: `Σ wt(A)` over all Tesler
/// matrices with all-ones hook sums.
pub fn hilbert_dh(n: usize) -> Result<QTPoly> {
    if n == 0 {
        return Err(Error::OutOfDomain("need n >= 1".into()));
    }
    let mut total = QTPoly::zero();
    let mut first_error = None;
    for_each_tesler(&HookSums::ones(n), |m| {
        if first_error.is_some() {
            return;
        }
        match haglund_weight(m) {
            Ok(w) => total = &total + &w,
            Err(e) => first_error = Some(e),
        }
    });
    match first_error {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Gorsky-Negut weight
/// `wt'(A) = ∏_{a_{i,i+1}>0} ([a_{i,i+1}+1] − [a_{i,i+1}]) · ∏_{j>i+1, a_{ij}>0} (−M)[a_{ij}]`.
/// Diagonal entries contribute nothing; empty products are 1.
pub fn gorsky_negut_weight(m: &TeslerMatrix) -> Result<QTPoly> {
    let minus_m = neg_m();
    let mut product = QTPoly::one();
    for (i, j, entry) in m.positive_entries() {
        if j == i {
            continue;
        }
        let e = exponent_of(entry)?;
        let factor = if j == i + 1 {
            &qt_bracket(e + 1)? - &qt_bracket(e)?
        } else {
            &minus_m * &qt_bracket(e)?
        };
        product = &product * &factor;
    }
    Ok(product)
}

/// Hilbert series of the diagonal-harmonics alternant: `Σ wt'(A)` over all
/// Tesler matrices with all-ones hook sums; equals the q,t-Catalan
/// polynomial.
pub fn hilbert_alternant(n: usize) -> Result<QTPoly> {
    if n == 0 {
        return Err(Error::OutOfDomain("need n >= 1".into()));
    }
    let mut total = QTPoly::zero();
    let mut first_error = None;
    for_each_tesler(&HookSums::ones(n), |m| {
        if first_error.is_some() {
            return;
        }
        match gorsky_negut_weight(m) {
            Ok(w) => total = &total + &w,
            Err(e) => first_error = Some(e),
        }
    });
    match first_error {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// A parking function: a word `p ∈ [1,n]^n` whose nondecreasing rearrangement
/// `b` satisfies `b_i ≤ i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParkingFunction {
    word: Vec<usize>,
}

impl ParkingFunction {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 || word.iter().any(|&p| p == 0 || p > n) {
            return Err(Error::OutOfDomain("parking values must lie in [1, n]".into()));
        }
        let mut sorted = word.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(i, &b)| b > i + 1) {
            return Err(Error::OutOfDomain("word fails the parking condition".into()));
        }
        Ok(Self { word })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `(dinv, area)` of the labeled-Dyck-path picture: cars sorted by
    /// (column, label) occupy rows bottom-up, row `i` in column `c_i` has
    /// area `i − c_i`; `dinv` counts pairs `i < j` with equal areas and
    /// increasing labels, or areas differing by one and decreasing labels.
    pub fn stats(&self) -> (u64, u64) {
        let mut cars: Vec<(usize, usize)> = self
            .word
            .iter()
            .enumerate()
            .map(|(k, &p)| (p, k + 1))
            .collect();
        cars.sort_unstable();
        let areas: Vec<usize> = cars.iter().enumerate().map(|(i0, &(c, _))| i0 + 1 - c).collect();
        let labels: Vec<usize> = cars.iter().map(|&(_, l)| l).collect();
        let area: u64 = areas.iter().map(|&g| g as u64).sum();
        let mut dinv = 0u64;
        for i in 0..areas.len() {
            for j in (i + 1)..areas.len() {
                if areas[i] == areas[j] && labels[i] < labels[j] {
                    dinv += 1;
                }
                if areas[i] == areas[j] + 1 && labels[i] > labels[j] {
                    dinv += 1;
                }
            }
        }
        (dinv, area)
    }
}

/// All `(n+1)^{n−1}` parking functions of size `n`, by filtering the words in
/// `[1,n]^n`.
pub fn parking_functions(n: usize) -> Vec<ParkingFunction> {
    let mut out = Vec::new();
    let mut word = vec![1usize; n];
    loop {
        if let Ok(pf) = ParkingFunction::new(word.clone()) {
            out.push(pf);
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if word[pos] < n {
                word[pos] += 1;
                for w in word[pos + 1..].iter_mut() {
                    *w = 1;
                }
                break;
            }
        }
    }
}

/// `Σ_π q^{dinv(π)} t^{area(π)}` over all parking functions of size `n`.
pub fn parking_gf(n: usize) -> Result<QTPoly> {
    if n == 0 {
        return Err(Error::OutOfDomain("need n >= 1".into()));
    }
    let mut total = QTPoly::zero();
    for pf in parking_functions(n) {
        let (dinv, area) = pf.stats();
        total.add_term(dinv as u32, area as u32, &BigInt::one());
    }
    Ok(total)
}

/// A Dyck path stored by its area sequence: `a_1 = 0`, `a_{i+1} ≤ a_i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckPath {
    area_seq: Vec<usize>,
}

impl DyckPath {
    pub fn new(area_seq: Vec<usize>) -> Result<Self> {
        if area_seq.is_empty() || area_seq[0] != 0 {
            return Err(Error::OutOfDomain("area sequence must start at 0".into()));
        }
        if area_seq.windows(2).any(|w| w[1] > w[0] + 1) {
            return Err(Error::OutOfDomain("area sequence rises by more than 1".into()));
        }
        Ok(Self { area_seq })
    }

    pub fn area_seq(&self) -> &[usize] {
        &self.area_seq
    }

    pub fn area(&self) -> u64 {
        self.area_seq.iter().map(|&a| a as u64).sum()
    }

    /// The bounce statistic: the bounce ball starts at the origin, rises to
    /// the top of the path's current column, moves east to the diagonal at
    /// `(j, j)`, and repeats; each touch point contributes `n − j`.
    pub fn bounce(&self) -> u64 {
        let n = self.area_seq.len();
        // column of row i (1-based): c_i = i − a_i
        let cols: Vec<usize> = self
            .area_seq
            .iter()
            .enumerate()
            .map(|(i0, &a)| i0 + 1 - a)
            .collect();
        let mut bounce = 0u64;
        let mut pos = 0usize;
        while pos < n {
            let reach = cols.iter().filter(|&&c| c <= pos + 1).count();
            debug_assert!(reach > pos);
            pos = reach;
            bounce += (n - pos) as u64;
        }
        bounce
    }
}

/// All `Cat(n)` Dyck paths of size `n`.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    fn rec(n: usize, seq: &mut Vec<usize>, out: &mut Vec<DyckPath>) {
        if seq.len() == n {
            out.push(DyckPath {
                area_seq: seq.clone(),
            });
            return;
        }
        let cap = seq.last().map_or(0, |&a| a + 1);
        for a in 0..=cap {
            seq.push(a);
            rec(n, seq, out);
            seq.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        // a_1 = 0 is forced; extend one row at a time
        rec(n, &mut vec![0], &mut out);
    }
    out
}

/// `Σ_P q^{area(P)} t^{bounce(P)}` over all Dyck paths of size `n`.
pub fn qt_catalan(n: usize) -> Result<QTPoly> {
    if n == 0 {
        return Err(Error::OutOfDomain("need n >= 1".into()));
    }
    let mut total = QTPoly::zero();
    for p in dyck_paths(n) {
        total.add_term(p.area() as u32, p.bounce() as u32, &BigInt::one());
    }
    Ok(total)
}

/// `Σ ∏ a_{ij}` over the `n!` permutation Tesler matrices with all-ones hook
/// sums; equals `(n+1)^{n−1}`.
pub fn perm_tesler_sum(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfDomain("need n >= 1".into()));
    }
    let mut total = BigInt::zero();
    for m in permutation_teslers(&HookSums::ones(n))? {
        let mut prod = BigInt::one();
        for (_, _, v) in m.positive_entries() {
            prod *= v;
        }
        total += prod;
    }
    Ok(total)
}
