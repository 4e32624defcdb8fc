//! Self-verification suites: cross-checks between independent computation
//! routes, runnable up to a size bound. The CLI exposes these as `verify`.

use num::{pow, BigInt, BigRational, One};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::core::{
    flow_to_tesler, signature, tesler_to_flow, tesler_to_transportation,
    transportation_to_tesler, HookSums,
};
use crate::error::Result;
use crate::faces;
use crate::harmonics;
use crate::kostant::{
    count_tesler, count_via_projection, enumerate_tesler, kostant_reversed_equal, NetflowVector,
};
use crate::util::factorial;
use crate::volume;

/// Which family of checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Counts,
    Volumes,
    Faces,
    Harmonics,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        match name {
            "all" => Some(Suite::All),
            "counts" => Some(Suite::Counts),
            "volumes" => Some(Suite::Volumes),
            "faces" => Some(Suite::Faces),
            "harmonics" => Some(Suite::Harmonics),
            _ => None,
        }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(results: &mut Vec<CheckResult>, name: &str, body: impl FnOnce() -> Result<String>) {
    let result = match body() {
        Ok(detail) => CheckResult {
            name: name.to_string(),
            passed: true,
            detail,
        },
        Err(e) => CheckResult {
            name: name.to_string(),
            passed: false,
            detail: e.to_string(),
        },
    };
    results.push(result);
}

fn fail(msg: String) -> crate::error::Error {
    crate::error::Error::Internal(msg)
}

const ONES_COUNTS: [u64; 7] = [1, 2, 7, 40, 357, 4820, 96030];

/// Runs the selected suite with sizes capped at `nmax`.
pub fn run_suite(suite: Suite, nmax: usize) -> Vec<CheckResult> {
    let mut results = Vec::new();
    if matches!(suite, Suite::All | Suite::Counts) {
        counts_checks(&mut results, nmax);
    }
    if matches!(suite, Suite::All | Suite::Volumes) {
        volumes_checks(&mut results, nmax);
    }
    if matches!(suite, Suite::All | Suite::Faces) {
        faces_checks(&mut results, nmax);
    }
    if matches!(suite, Suite::All | Suite::Harmonics) {
        harmonics_checks(&mut results, nmax);
    }
    results
}

fn counts_checks(results: &mut Vec<CheckResult>, nmax: usize) {
    let top = nmax.clamp(1, 7);
    check(results, "counts/ones-sequence", || {
        for n in 1..=top {
            let got = count_tesler(&HookSums::ones(n));
            let want = BigInt::from(ONES_COUNTS[n - 1]);
            if got != want {
                return Err(fail(format!("count(1^{n}) = {got}, want {want}")));
            }
        }
        Ok(format!("count(1^n) matches for n = 1..={top}"))
    });

    check(results, "counts/enumeration-agrees", || {
        let mut cases = 0usize;
        for n in 1..=nmax.clamp(1, 4) {
            for_each_hook_vector(n, 2, &mut |a| {
                let listed = enumerate_tesler(a).len();
                let counted = count_tesler(a);
                if BigInt::from(listed) != counted {
                    return Err(fail(format!(
                        "enumeration of {a} found {listed}, count says {counted}"
                    )));
                }
                cases += 1;
                Ok(())
            })?;
        }
        Ok(format!("{cases} hook vectors enumerated and counted"))
    });

    check(results, "counts/projection-recursion", || {
        let mut cases = 0usize;
        for n in 2..=nmax.clamp(2, 4) {
            for_each_hook_vector(n, 2, &mut |a| {
                if count_via_projection(a)? != count_tesler(a) {
                    return Err(fail(format!("projection count differs for {a}")));
                }
                cases += 1;
                Ok(())
            })?;
        }
        Ok(format!("{cases} projection counts agree"))
    });

    check(results, "counts/factorial-bounds", || {
        for n in 2..=top {
            let t = count_tesler(&HookSums::ones(n));
            let lower = factorial(n);
            let upper = BigInt::from(2u32).pow((n * (n - 1) / 2) as u32);
            if t < lower || t > upper {
                return Err(fail(format!("count(1^{n}) = {t} outside [{lower}, {upper}]")));
            }
        }
        Ok(format!("n! <= count(1^n) <= 2^C(n,2) for n = 2..={top}"))
    });

    check(results, "counts/reversal-invariance", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7e51e2);
        for _ in 0..200 {
            let n = rng.random_range(1..=nmax.clamp(1, 6));
            let hooks: Vec<i64> = (0..n).map(|_| rng.random_range(0..=4)).collect();
            let a = HookSums::from_ints(&hooks)?;
            kostant_reversed_equal(&NetflowVector::from_hooks(&a))?;
        }
        Ok("200 random netflow vectors".to_string())
    });

    check(results, "counts/round-trips", || {
        let mut matrices = 0usize;
        for n in 1..=nmax.clamp(1, 4) {
            let a = HookSums::ones(n);
            for m in enumerate_tesler(&a) {
                if flow_to_tesler(&tesler_to_flow(&m))? != m {
                    return Err(fail(format!("flow round trip failed on {a}")));
                }
                if transportation_to_tesler(&tesler_to_transportation(&m)?)? != m {
                    return Err(fail(format!("transportation round trip failed on {a}")));
                }
                matrices += 1;
            }
        }
        Ok(format!("{matrices} matrices round-tripped through both maps"))
    });
}

fn volumes_checks(results: &mut Vec<CheckResult>, nmax: usize) {
    let top = nmax.clamp(2, 6);
    check(results, "volumes/ones-closed-form", || {
        for n in 2..=top {
            let closed = volume::vol_ones_closed(n)?;
            let lidskii = volume::lidskii_volume(&HookSums::ones(n));
            if closed != lidskii {
                return Err(fail(format!("vol(1^{n}): closed {closed} vs Lidskii {lidskii}")));
            }
        }
        Ok(format!("Lidskii matches the closed form for n = 2..={top}"))
    });

    check(results, "volumes/cry-catalan-product", || {
        for n in 2..=top {
            volume::cry_volume(n)?;
        }
        Ok(format!("CRY volume checks pass for n = 2..={top}"))
    });

    check(results, "volumes/staircase-factorization", || {
        for n in 1..=nmax.max(8) {
            volume::vol_ones_closed(n)?;
        }
        Ok(format!("SYT × Catalan factorization holds for n = 1..={}", nmax.max(8)))
    });

    check(results, "volumes/lidskii-count-vs-kostant", || {
        let mut cases = 0usize;
        for n in 1..=nmax.clamp(1, 4) {
            for_each_hook_vector(n, 2, &mut |a| {
                if volume::lidskii_count(a) != count_tesler(a) {
                    return Err(fail(format!("Lidskii count differs for {a}")));
                }
                cases += 1;
                Ok(())
            })?;
        }
        Ok(format!("{cases} Lidskii counts agree with Kostant values"))
    });

    check(results, "volumes/constant-term-paths", || {
        let top_n = nmax.clamp(2, 5) as u32;
        for n in 2..=top_n {
            for a in 1..=3u32 {
                for c in 0..=3u32 {
                    volume::l_value(n, a, c)?;
                }
            }
        }
        Ok(format!("both L_n(a,c) paths agree for n = 2..={top_n}, a,c <= 3"))
    });

    check(results, "volumes/l-equals-volume", || {
        for n in 2..=nmax.clamp(2, 5) {
            let l = volume::l_value(n as u32, 1, 1)?;
            let v = BigRational::from_integer(volume::lidskii_volume(&HookSums::ones(n)));
            if l != v {
                return Err(fail(format!("L_{n}(1,1) = {l} vs volume {v}")));
            }
        }
        Ok("L_n(1,1) equals the all-ones volume".to_string())
    });

    check(results, "volumes/morris-catalan", || {
        for n in 2..=top as u32 {
            let m = volume::morris_m(n, 1, 1, 1)?;
            let prod: BigInt = (0..n as usize).fold(BigInt::one(), |acc, i| acc * volume::catalan(i));
            if m != BigRational::from_integer(prod.clone()) {
                return Err(fail(format!("M_{n}(1,1,1) = {m}, want {prod}")));
            }
        }
        Ok(format!("Morris values match Catalan products for n = 2..={top}"))
    });
}

fn faces_checks(results: &mut Vec<CheckResult>, nmax: usize) {
    let top = nmax.clamp(2, 5);
    check(results, "faces/simplicity-vs-degrees", || {
        let mut cases = 0usize;
        for n in 1..=top {
            for_each_signature(n, &mut |a| {
                let dim = n * (n - 1) / 2;
                let degrees = faces::vertex_degrees(a)?;
                let all_dim = degrees.iter().all(|(_, d)| *d == dim);
                if all_dim != faces::is_simple(a) {
                    return Err(fail(format!(
                        "simplicity mismatch at signature {}",
                        signature(a)
                    )));
                }
                cases += 1;
                Ok(())
            })?;
        }
        Ok(format!("{cases} signatures checked against vertex degrees"))
    });

    check(results, "faces/positive-case", || {
        for n in 1..=top {
            let a = HookSums::ones(n);
            let verts = faces::vertices(&a)?;
            if BigInt::from(verts.len()) != factorial(n) {
                return Err(fail(format!("vertex count of Tes_{n}(1) is {}", verts.len())));
            }
            if faces::f_vector(&a)? != faces::simplex_product_fvector(n) {
                return Err(fail(format!("f-vector of Tes_{n}(1) differs from simplex product")));
            }
            if faces::h_vector(&a)? != faces::mahonian_coeffs(n) {
                return Err(fail(format!("h-vector of Tes_{n}(1) is not Mahonian")));
            }
        }
        Ok(format!("vertices/f/h verified for all-ones hooks, n = 1..={top}"))
    });

    check(results, "faces/plus-zero-plus-case", || {
        for n in 4..=top.max(4) {
            let mut vals = vec![1i64; n];
            vals[1] = 0;
            let a = HookSums::from_ints(&vals)?;
            let verts = faces::vertices(&a)?;
            if BigInt::from(verts.len()) != BigInt::from(2) * factorial(n - 1) {
                return Err(fail(format!("vertex count for +0+^{} is {}", n - 2, verts.len())));
            }
            // (1 + x^{n-1}) · [n-1]!_x
            let base = faces::mahonian_coeffs(n - 1);
            let mut expected = vec![BigInt::from(0); n * (n - 1) / 2 + 1];
            for (i, c) in base.iter().enumerate() {
                expected[i] += c;
                expected[i + n - 1] += c;
            }
            if faces::h_vector(&a)? != expected {
                return Err(fail(format!("h-vector for +0+^{} differs", n - 2)));
            }
        }
        Ok("2(n-1)! vertices and (1+x^(n-1))[n-1]!_x verified".to_string())
    });

    check(results, "faces/zero-dim-incomparable", || {
        let mut cases = 0usize;
        for n in 1..=nmax.clamp(1, 4) {
            for_each_signature_allow_leading_zero(n, &mut |a| {
                let poset = faces::build_face_poset(&faces::reduce_hooks(a))?;
                let zd = poset.indices_of_dim(0);
                for (x, &i) in zd.iter().enumerate() {
                    for &j in &zd[x + 1..] {
                        if poset.leq(i, j) || poset.leq(j, i) {
                            return Err(fail(format!(
                                "comparable zero-dimensional pair for {}",
                                signature(a)
                            )));
                        }
                    }
                }
                cases += 1;
                Ok(())
            })?;
        }
        Ok(format!("{cases} signatures exhaustively checked"))
    });

    check(results, "faces/euler-relation", || {
        let mut cases = 0usize;
        for n in 1..=top {
            for_each_signature(n, &mut |a| {
                let f = faces::f_vector(a)?;
                let mut alt = BigInt::from(0);
                for (i, c) in f.iter().enumerate() {
                    if i % 2 == 0 {
                        alt += c;
                    } else {
                        alt -= c;
                    }
                }
                if alt != BigInt::one() {
                    return Err(fail(format!("Euler relation fails for {}", signature(a))));
                }
                cases += 1;
                Ok(())
            })?;
        }
        Ok(format!("{cases} f-vectors satisfy the Euler relation"))
    });
}

fn harmonics_checks(results: &mut Vec<CheckResult>, nmax: usize) {
    check(results, "harmonics/haglund-vs-parking", || {
        let top = nmax.clamp(1, 5);
        for n in 1..=top {
            if harmonics::hilbert_dh(n)? != harmonics::parking_gf(n)? {
                return Err(fail(format!("Hilbert series mismatch at n = {n}")));
            }
        }
        Ok(format!("Tesler sum equals parking-function sum for n = 1..={top}"))
    });

    check(results, "harmonics/alternant-vs-qt-catalan", || {
        let top = nmax.clamp(1, 6);
        for n in 1..=top {
            if harmonics::hilbert_alternant(n)? != harmonics::qt_catalan(n)? {
                return Err(fail(format!("alternant mismatch at n = {n}")));
            }
        }
        Ok(format!("alternant sum equals q,t-Catalan for n = 1..={top}"))
    });

    check(results, "harmonics/specializations", || {
        let top = nmax.clamp(1, 6);
        let one = BigInt::one();
        for n in 1..=top {
            let h = harmonics::hilbert_dh(n)?;
            if !h.is_symmetric() {
                return Err(fail(format!("Hilbert series not q,t-symmetric at n = {n}")));
            }
            if h.eval(&one, &one) != pow(BigInt::from(n + 1), n - 1) {
                return Err(fail(format!("H(1,1) != (n+1)^(n-1) at n = {n}")));
            }
            let alt = harmonics::hilbert_alternant(n)?;
            if alt.eval(&one, &one) != volume::catalan(n) {
                return Err(fail(format!("alternant(1,1) != Cat(n) at n = {n}")));
            }
        }
        Ok(format!("symmetry and q=t=1 specializations for n = 1..={top}"))
    });

    check(results, "harmonics/permutation-tesler-identity", || {
        let top = nmax.clamp(1, 7);
        for n in 1..=top {
            if harmonics::perm_tesler_sum(n)? != pow(BigInt::from(n + 1), n - 1) {
                return Err(fail(format!("permutation Tesler sum differs at n = {n}")));
            }
        }
        Ok(format!("Σ ∏ entries = (n+1)^(n-1) for n = 1..={top}"))
    });

    check(results, "harmonics/pitman-stanley", || {
        let top = nmax.clamp(1, 7);
        for n in 1..=top {
            if volume::pitman_stanley_count(n) != volume::catalan(n) {
                return Err(fail(format!("banded Tesler count differs at n = {n}")));
            }
        }
        Ok(format!("banded matrices counted by Cat(n) for n = 1..={top}"))
    });
}

/// All hook vectors of length `n` with entries in `0..=max`, in odometer order.
fn for_each_hook_vector(
    n: usize,
    max: i64,
    f: &mut dyn FnMut(&HookSums) -> Result<()>,
) -> Result<()> {
    let mut vals = vec![0i64; n];
    loop {
        f(&HookSums::from_ints(&vals)?)?;
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            if vals[pos] < max {
                vals[pos] += 1;
                for v in vals[pos + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// One representative hook vector per signature of length `n` with a positive
/// first entry.
fn for_each_signature(n: usize, f: &mut dyn FnMut(&HookSums) -> Result<()>) -> Result<()> {
    for bits in 0..(1u32 << (n.saturating_sub(1))) {
        let mut vals = vec![1i64; n];
        for (i, v) in vals.iter_mut().enumerate().skip(1) {
            if (bits >> (i - 1)) & 1 == 0 {
                *v = 0;
            }
        }
        f(&HookSums::from_ints(&vals)?)?;
    }
    Ok(())
}

/// One representative per signature of length `n`, leading zeros included.
fn for_each_signature_allow_leading_zero(
    n: usize,
    f: &mut dyn FnMut(&HookSums) -> Result<()>,
) -> Result<()> {
    for bits in 0..(1u32 << n) {
        let vals: Vec<i64> = (0..n).map(|i| ((bits >> i) & 1) as i64).collect();
        f(&HookSums::from_ints(&vals)?)?;
    }
    Ok(())
}
