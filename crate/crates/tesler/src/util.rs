//! Shared exact-arithmetic helpers: factorials, binomials, weak compositions.

use num::{BigInt, Integer, One, Signed, Zero};

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient with a nonnegative big-integer top argument.
/// Returns 0 when `k` exceeds `top`.
pub(crate) fn binomial_big(top: &BigInt, k: usize) -> BigInt {
    if top.is_negative() || *top < BigInt::from(k) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (top - BigInt::from(j)) / BigInt::from(j + 1);
    }
    acc
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    binomial_big(&BigInt::from(n), k)
}

/// Multinomial coefficient (Σ parts)! / ∏ parts!.
pub(crate) fn multinomial(parts: &[usize]) -> BigInt {
    let total: usize = parts.iter().sum();
    let mut acc = factorial(total);
    for &p in parts {
        let (q, r) = acc.div_rem(&factorial(p));
        debug_assert!(r.is_zero());
        acc = q;
    }
    acc
}

/// Exact integer division; `None` when the remainder is nonzero.
pub(crate) fn div_exact(n: &BigInt, d: &BigInt) -> Option<BigInt> {
    let (q, r) = n.div_rem(d);
    if r.is_zero() {
        Some(q)
    } else {
        None
    }
}

/// Iterator over weak compositions of `total` into `parts` nonnegative parts,
/// in lexicographic order: (0,…,0,total) first, (total,0,…,0) last.
pub(crate) struct WeakCompositions<T> {
    next: Option<Vec<T>>,
}

impl<T: Integer + Clone> WeakCompositions<T> {
    pub(crate) fn new(total: T, parts: usize) -> Self {
        if parts == 0 {
            let next = if total.is_zero() { Some(Vec::new()) } else { None };
            return Self { next };
        }
        let mut first = vec![T::zero(); parts];
        first[parts - 1] = total;
        Self { next: Some(first) }
    }
}

impl<T: Integer + Clone> Iterator for WeakCompositions<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        let current = self.next.take()?;
        // Successor: move one unit from the rightmost positive part onto the
        // part just left of it, and push the rest of that mass to the end.
        let last = current.len().wrapping_sub(1);
        let pivot = current.iter().rposition(|c| !c.is_zero());
        if let Some(j) = pivot {
            if j > 0 {
                let mut succ = current.clone();
                let mass = succ[j].clone();
                succ[j - 1] = succ[j - 1].clone() + T::one();
                succ[j] = T::zero();
                succ[last] = mass - T::one();
                self.next = Some(succ);
            }
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_lex_order() {
        let all: Vec<Vec<u64>> = WeakCompositions::new(3u64, 3).collect();
        assert_eq!(all.len(), 10); // C(5,2)
        assert_eq!(all.first().unwrap(), &vec![0, 0, 3]);
        assert_eq!(all.last().unwrap(), &vec![3, 0, 0]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        for c in &all {
            assert_eq!(c.iter().sum::<u64>(), 3);
        }
    }

    #[test]
    fn compositions_degenerate() {
        let none: Vec<Vec<u64>> = WeakCompositions::new(0u64, 0).collect();
        assert_eq!(none, vec![Vec::<u64>::new()]);
        assert_eq!(WeakCompositions::new(2u64, 0).count(), 0);
        assert_eq!(WeakCompositions::new(0u64, 4).count(), 1);
        assert_eq!(WeakCompositions::new(5u64, 1).count(), 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(4, 7), BigInt::zero());
        assert_eq!(binomial_big(&BigInt::from(-3), 2), BigInt::zero());
        assert_eq!(multinomial(&[3, 0, 0]), BigInt::one());
        assert_eq!(multinomial(&[2, 1, 0]), BigInt::from(3));
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
