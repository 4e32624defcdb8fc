//! Normalized volumes and lattice-point counts of Tesler polytopes: Lidskii
//! expansions over weak compositions, closed-form products for the all-ones
//! and Chan-Robbins-Yuen cases, the constant-term recursion `C_n(ℓ,a,c)`, and
//! the Morris product `M_n(a,b,c)`.
//!
//! The iterated constant term `L_n(a,c)` is never expanded symbolically; it
//! is evaluated two independent ways — the linear recursion on `C_n(ℓ,a,c)`
//! and the Gamma-function product — and the two are asserted equal.

use num::{pow, BigInt, BigRational, One, Signed, Zero};

use crate::core::HookSums;
use crate::error::{Error, Result};
use crate::gamma::GammaHalf;
use crate::kostant::{for_each_tesler, KostantSolver, NetflowVector};
use crate::util::{binomial_big, div_exact, factorial, multinomial, WeakCompositions};

/// `Cat(i) = binom(2i, i) / (i+1)`.
pub fn catalan(i: usize) -> BigInt {
    let b = crate::util::binomial(2 * i, i);
    div_exact(&b, &BigInt::from(i + 1)).expect("central binomial is divisible by i+1")
}

/// `∏_{i=0}^{count-1} Cat(i)`.
fn catalan_product(count: usize) -> BigInt {
    (0..count).fold(BigInt::one(), |acc, i| acc * catalan(i))
}

/// Normalized volume of the flow polytope with netflow `(a, −Σa)`, by the
/// Lidskii expansion: a sum over weak compositions `i` of `C(n,2)` of
/// `multinomial · ∏ a_k^{i_k} · K(i_1−n+1, …, i_n)`. Compositions putting
/// weight on a zero hook sum are pruned (their power factor vanishes).
pub fn lidskii_volume(a: &HookSums) -> BigInt {
    let n = a.len();
    let total = n * (n - 1) / 2;
    let free: Vec<usize> = (0..n)
        .filter(|&k| a.values()[k].is_positive())
        .collect();
    let mut solver = KostantSolver::new();
    let mut sum = BigInt::zero();
    for comp in WeakCompositions::new(total, free.len()) {
        let mut parts = vec![0usize; n];
        for (slot, &k) in free.iter().enumerate() {
            parts[k] = comp[slot];
        }
        let netflow: Vec<BigInt> = (0..n)
            .map(|k| BigInt::from(parts[k] as i64) - BigInt::from((n - 1 - k) as i64))
            .collect();
        let kostant_value =
            solver.eval(&NetflowVector::new(netflow).expect("offsets sum to zero"));
        if kostant_value.is_zero() {
            continue;
        }
        let mut term = multinomial(&parts) * kostant_value;
        for (value, &count) in a.values().iter().zip(&parts) {
            if count > 0 {
                term *= pow(value.clone(), count);
            }
        }
        sum += term;
    }
    sum
}

/// Lattice-point count `K(a, −Σa)` by the binomial-weighted Lidskii sum
/// `Σ binom(a_1+n−1, i_1) ⋯ binom(a_n, i_n) · K(i_1−n+1, …, i_n)`.
pub fn lidskii_count(a: &HookSums) -> BigInt {
    let n = a.len();
    let total = n * (n - 1) / 2;
    let mut solver = KostantSolver::new();
    let mut sum = BigInt::zero();
    for parts in WeakCompositions::new(total, n) {
        let mut weight = BigInt::one();
        for (k, &count) in parts.iter().enumerate() {
            let top = a.values()[k].clone() + BigInt::from((n - 1 - k) as i64);
            weight *= binomial_big(&top, count);
            if weight.is_zero() {
                break;
            }
        }
        if weight.is_zero() {
            continue;
        }
        let netflow: Vec<BigInt> = (0..n)
            .map(|k| BigInt::from(parts[k] as i64) - BigInt::from((n - 1 - k) as i64))
            .collect();
        let kostant_value =
            solver.eval(&NetflowVector::new(netflow).expect("offsets sum to zero"));
        sum += weight * kostant_value;
    }
    sum
}

/// Volume of the all-ones Tesler polytope through both closed forms —
/// `C(n,2)!·2^{C(n,2)} / ∏ i!` and `f^{staircase} · ∏ Cat(i)` — asserted
/// equal.
pub fn vol_ones_closed(n: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::OutOfDomain("need n >= 1".into()));
    }
    let choose2 = n * (n - 1) / 2;
    let mut numerator = factorial(choose2) * BigInt::from(2u32).pow(choose2 as u32);
    for i in 1..=n {
        numerator = div_exact(&numerator, &factorial(i))
            .ok_or_else(|| Error::Internal("volume product is not integral".into()))?;
    }
    let via_syt = syt_staircase(n) * catalan_product(n);
    if numerator != via_syt {
        return Err(Error::Internal(format!(
            "closed-form volume mismatch: {numerator} vs {via_syt}"
        )));
    }
    Ok(numerator)
}

/// Volume of the Chan-Robbins-Yuen polytope: `∏_{i=0}^{n-2} Cat(i)`, asserted
/// equal to the Lidskii volume of `(1,0,…,0)` and to the Kostant value at
/// `(0,1,…,n−2,−C(n−1,2))`.
pub fn cry_volume(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::OutOfDomain("need n >= 2".into()));
    }
    let product = catalan_product(n - 1);

    let mut hooks = vec![BigInt::zero(); n];
    hooks[0] = BigInt::one();
    let via_lidskii = lidskii_volume(&HookSums::new(hooks)?);
    if via_lidskii != product {
        return Err(Error::Internal(format!(
            "CRY volume mismatch (Lidskii): {via_lidskii} vs {product}"
        )));
    }

    let mut netflow: Vec<BigInt> = (0..=(n - 2)).map(BigInt::from).collect();
    netflow.push(-BigInt::from((n - 1) * (n - 2) / 2));
    let via_kostant = crate::kostant::kostant(&NetflowVector::new(netflow)?);
    if via_kostant != product {
        return Err(Error::Internal(format!(
            "CRY volume mismatch (Kostant): {via_kostant} vs {product}"
        )));
    }
    Ok(product)
}

/// Number of standard Young tableaux of staircase shape `(n−1, n−2, …, 1)`,
/// by the hook-length product `C(n,2)! / ∏_k (2k−1)^{n−k}`.
pub fn syt_staircase(n: usize) -> BigInt {
    let mut value = factorial(n * (n - 1) / 2);
    for k in 1..n {
        let hook_power = pow(BigInt::from(2 * k - 1), n - k);
        value = div_exact(&value, &hook_power)
            .expect("hook-length product divides the factorial");
    }
    value
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// The ratio `C_n(ℓ,a,c) / C_n(ℓ−1,a,c)` prescribed by the linear relation:
/// `(a−1 + c(n−ℓ)/2) / ((a−1)n + c·C(n,2) − ℓ + 1)`. `None` when the
/// denominator vanishes.
fn step_ratio(n: u32, a: u32, c: u32, ell: u32) -> Option<BigRational> {
    let numer = rational((a as i64 - 1) * 2 + c as i64 * (n as i64 - ell as i64))
        / rational(2);
    let den = (a as i64 - 1) * n as i64 + c as i64 * (n as i64 * (n as i64 - 1) / 2)
        - ell as i64
        + 1;
    if den == 0 {
        return None;
    }
    Some(numer / rational(den))
}

/// `C_n(0,a,c)` for `a ≥ 1` by the three-case reduction: lower `a` through
/// `ℓ = n`, lower `n` through `ℓ = n−1` when `a = 1`, bottom out at
/// `C_n(0,1,0) = n!`.
fn c_zero(n: u32, a: u32, c: u32) -> BigRational {
    debug_assert!(a >= 1 && n >= 1);
    if a == 1 {
        if c == 0 || n == 1 {
            return BigRational::from_integer(factorial(n as usize));
        }
        let mut value = c_zero(n - 1, c, c);
        for j in 1..n {
            let r = step_ratio(n, 1, c, j).expect("denominator positive for j < n");
            value /= r;
        }
        value
    } else {
        let mut value = c_zero(n, a - 1, c);
        for j in 1..=n {
            let r = step_ratio(n, a, c, j).expect("denominator positive for a > 1");
            value /= r;
        }
        value
    }
}

/// The constant `C_n(ℓ,a,c)`, evaluated purely through its defining linear
/// relations (no Gamma functions): `C_n(0,1,0) = n!`, `C_n(ℓ,0,c) = 0` for
/// `c > 0`, `C_n(n,a,c) = C_n(0,a−1,c)`, and the stepwise ratio in `ℓ`.
/// Parameter combinations the relations do not reach are rejected.
pub fn c_constant(n: u32, ell: u32, a: u32, c: u32) -> Result<BigRational> {
    if n < 1 {
        return Err(Error::OutOfDomain("need n >= 1".into()));
    }
    if ell > n {
        return Err(Error::OutOfDomain(format!("need 0 <= l <= n, got l = {ell}")));
    }
    if a == 0 {
        if c > 0 {
            return Ok(BigRational::zero());
        }
        return Err(Error::OutOfDomain(
            "C_n(l,0,0) is not determined by the relations".into(),
        ));
    }
    if a == 1 && c == 0 && ell > 0 {
        return Err(Error::OutOfDomain(
            "C_n(l,1,0) with l > 0 is not determined by the relations".into(),
        ));
    }
    let mut value = c_zero(n, a, c);
    for j in 1..=ell {
        match step_ratio(n, a, c, j) {
            Some(r) => value *= r,
            // The stepwise relation degenerates to 0 = 0 here; when the lift
            // reaches l = n the absolute relation C_n(n,a,c) = C_n(0,a−1,c)
            // still applies.
            None if j == ell && ell == n => return c_constant(n, 0, a - 1, c),
            None => {
                return Err(Error::OutOfDomain(format!(
                    "C_{n}({j},{a},{c}) is not determined by the relations"
                )))
            }
        }
    }
    Ok(value)
}

/// `L_n(a,c)`, evaluated two independent ways — `C_n(0,a,c)/n!` via the
/// recursion, and the Gamma product
/// `((a−1)n + c·C(n,2))! ∏_i Γ(1+c/2) / (Γ(1+(i+1)c/2)·Γ(a+ic/2))` — which
/// must agree; the Gamma path must also end with all √π powers cancelled.
pub fn l_value(n: u32, a: u32, c: u32) -> Result<BigRational> {
    if n < 2 || a < 1 {
        return Err(Error::OutOfDomain("need n >= 2 and a >= 1".into()));
    }
    let via_recursion =
        c_constant(n, 0, a, c)? / BigRational::from_integer(factorial(n as usize));

    let exponent = (a as usize - 1) * n as usize + c as usize * (n as usize * (n as usize - 1) / 2);
    let mut product = GammaHalf::from_integer(factorial(exponent));
    let half = |num: i64| BigRational::new(BigInt::from(num), BigInt::from(2));
    for i in 0..n as i64 {
        let top = GammaHalf::gamma(&half(2 + c as i64))?;
        let bottom1 = GammaHalf::gamma(&half(2 + (i + 1) * c as i64))?;
        let bottom2 = GammaHalf::gamma(&half(2 * a as i64 + i * c as i64))?;
        product = product.mul(&top).div(&bottom1)?.div(&bottom2)?;
    }
    let via_gamma = product.to_rational()?;

    if via_recursion != via_gamma {
        return Err(Error::Internal(format!(
            "L_{n}({a},{c}) paths disagree: {via_recursion} vs {via_gamma}"
        )));
    }
    Ok(via_recursion)
}

/// The Morris constant-term value `M_n(a,b,c)` by its Gamma product
/// `∏_j Γ(1+c/2)·Γ(a+b−1+(n+j−1)c/2) / (Γ(1+(j+1)c/2)·Γ(a+jc/2)·Γ(b+jc/2))`.
/// Any Gamma pole (nonpositive argument) is rejected.
pub fn morris_m(n: u32, a: u32, b: u32, c: u32) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::OutOfDomain("need n >= 2".into()));
    }
    let half = |num: i64| BigRational::new(BigInt::from(num), BigInt::from(2));
    let (a, b, c, n) = (a as i64, b as i64, c as i64, n as i64);
    let mut product = GammaHalf::one();
    for j in 0..n {
        let top1 = GammaHalf::gamma(&half(2 + c))?;
        let top2 = GammaHalf::gamma(&half(2 * (a + b - 1) + (n + j - 1) * c))?;
        let bottom1 = GammaHalf::gamma(&half(2 + (j + 1) * c))?;
        let bottom2 = GammaHalf::gamma(&half(2 * a + j * c))?;
        let bottom3 = GammaHalf::gamma(&half(2 * b + j * c))?;
        product = product
            .mul(&top1)
            .mul(&top2)
            .div(&bottom1)?
            .div(&bottom2)?
            .div(&bottom3)?;
    }
    product.to_rational()
}

/// Number of all-ones Tesler matrices supported on the diagonal and
/// superdiagonal (the lattice points of the Pitman-Stanley polytope inside);
/// equals `Cat(n)`.
pub fn pitman_stanley_count(n: usize) -> BigInt {
    let a = HookSums::ones(n);
    let mut count = BigInt::zero();
    for_each_tesler(&a, |m| {
        let banded = m
            .positive_entries()
            .iter()
            .all(|&(i, j, _)| j <= i + 1);
        if banded {
            count += 1;
        }
    });
    count
}
