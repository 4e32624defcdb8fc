//! Face structure of Tesler polytopes through Tesler tableaux.
//!
//! A 0/1 filling of the reverse staircase is a valid tableau for hook sums
//! `a` when (1) rows with `a_i > 0` are nonzero, (2) a 1 at `(i,j)` forces row
//! `j` nonzero, and (3) rows with `a_j = 0` and an all-zero column above are
//! all zero. The support map is a poset isomorphism from the faces of the
//! polytope (ordered by inclusion) to the tableaux (ordered componentwise), a
//! face's dimension being `Σ (r_i − 1)` over the per-row counts of 1s. Vertex
//! sets, f-vectors, simplicity and h-vectors all come out of this encoding.
//!
//! The poset is only materialized for `n ≤ 6` (the tableau count grows
//! quickly); for strictly positive hook sums and larger `n`, the f-vector
//! falls back to the simplex-product convolution that the positive case is
//! combinatorially isomorphic to.

use num::{BigInt, One, Signed, Zero};

use crate::core::{signature, HookSums, Sign, TeslerMatrix, TeslerTableau};
use crate::error::{Error, Result};
use crate::util::binomial;

/// Largest `n` for which face posets are enumerated explicitly.
pub const MAX_EXPLICIT_N: usize = 6;

/// Tests the three tableau conditions. Errs when the filling does not have
/// the staircase shape of `a`.
pub fn check_tableau(rows: &[Vec<u8>], a: &HookSums) -> Result<bool> {
    let n = a.len();
    if rows.len() != n {
        return Err(Error::ShapeMismatch { expected: n });
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n - i {
            return Err(Error::ShapeMismatch { expected: n });
        }
        if row.iter().any(|&c| c > 1) {
            return Err(Error::ShapeMismatch { expected: n });
        }
    }
    let row_nonzero = |j: usize| rows[j - 1].contains(&1);
    let cell = |i: usize, j: usize| rows[i - 1][j - i];
    for i in 1..=n {
        if a.get(i).is_positive() && !row_nonzero(i) {
            return Ok(false);
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            if cell(i, j) == 1 && !row_nonzero(j) {
                return Ok(false);
            }
        }
    }
    for j in 1..=n {
        if a.get(j).is_zero() && (1..j).all(|i| cell(i, j) == 0) && row_nonzero(j) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the face encoded by `t`: `Σ (r_i − 1)` with `r_i = 1` for
/// zero rows.
pub fn tableau_dim(t: &TeslerTableau) -> usize {
    t.rows()
        .iter()
        .map(|row| {
            let ones = row.iter().filter(|&&c| c == 1).count();
            ones.saturating_sub(1)
        })
        .sum()
}

/// Componentwise maximum of two tableaux over the same hook sums; the result
/// is always a valid tableau.
pub fn tableau_max(t1: &TeslerTableau, t2: &TeslerTableau) -> Result<TeslerTableau> {
    if t1.hooks() != t2.hooks() {
        return Err(Error::HookSumsDiffer);
    }
    let rows: Vec<Vec<u8>> = t1
        .rows()
        .iter()
        .zip(t2.rows())
        .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| *a.max(b)).collect())
        .collect();
    TeslerTableau::new(rows, t1.hooks().clone())
}

/// Strips leading zero hook sums (each leading zero forces a vanishing first
/// row, identifying the polytope with one of size `n−1`). The all-zero vector
/// reduces to the single zero.
pub fn reduce_hooks(a: &HookSums) -> HookSums {
    let lead = a
        .values()
        .iter()
        .position(|v| v.is_positive())
        .unwrap_or(a.len() - 1);
    HookSums::new(a.values()[lead..].to_vec()).expect("suffix is nonempty")
}

fn require_reduced(a: &HookSums) -> Result<()> {
    let point = a.len() == 1 && a.get(1).is_zero();
    if point || a.get(1).is_positive() {
        Ok(())
    } else {
        Err(Error::NotReduced)
    }
}

/// All valid tableaux for `a`, in lexicographic order of the 0/1 string read
/// row-major. Rows are generated top-down: a row whose hook sum is zero and
/// whose column above is empty is forced to vanish, every other row ranges
/// over its nonzero fillings.
pub fn enumerate_tableaux(a: &HookSums) -> Vec<TeslerTableau> {
    let mut out = Vec::new();
    for_each_tableau(a, |rows| {
        out.push(TeslerTableau::from_parts_unchecked(
            rows.to_vec(),
            a.clone(),
        ));
    });
    out
}

fn for_each_tableau<F: FnMut(&[Vec<u8>])>(a: &HookSums, mut sink: F) {
    let n = a.len();
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(n);
    fill_tableau_rows(a, n, 1, &mut rows, &mut sink, &mut |_| true);
}

fn fill_tableau_rows<F: FnMut(&[Vec<u8>])>(
    a: &HookSums,
    n: usize,
    row: usize,
    rows: &mut Vec<Vec<u8>>,
    sink: &mut F,
    row_filter: &mut dyn FnMut(&[u8]) -> bool,
) {
    if row > n {
        sink(rows);
        return;
    }
    let width = n - row + 1;
    let forced_nonzero = a.get(row).is_positive()
        || (1..row).any(|i| rows[i - 1][row - i] == 1);
    if !forced_nonzero {
        let zero_row = vec![0u8; width];
        if row_filter(&zero_row) {
            rows.push(zero_row);
            fill_tableau_rows(a, n, row + 1, rows, sink, row_filter);
            rows.pop();
        }
        return;
    }
    // masks counted MSB-first so the rows come out in lexicographic order
    for mask in 1u32..(1u32 << width) {
        let cells: Vec<u8> = (0..width)
            .map(|b| ((mask >> (width - 1 - b)) & 1) as u8)
            .collect();
        if !row_filter(&cells) {
            continue;
        }
        rows.push(cells);
        fill_tableau_rows(a, n, row + 1, rows, sink, row_filter);
        rows.pop();
    }
}

/// Zero-dimensional tableaux only (at most one 1 per row); cheap at any `n`.
fn zero_dim_tableaux(a: &HookSums) -> Vec<TeslerTableau> {
    let n = a.len();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(n);
    fn rec(a: &HookSums, n: usize, row: usize, rows: &mut Vec<Vec<u8>>, out: &mut Vec<TeslerTableau>) {
        if row > n {
            out.push(TeslerTableau::from_parts_unchecked(rows.to_vec(), a.clone()));
            return;
        }
        let width = n - row + 1;
        let forced_nonzero = a.get(row).is_positive()
            || (1..row).any(|i| rows[i - 1][row - i] == 1);
        if !forced_nonzero {
            rows.push(vec![0u8; width]);
            rec(a, n, row + 1, rows, out);
            rows.pop();
            return;
        }
        for pos in (0..width).rev() {
            let mut cells = vec![0u8; width];
            cells[pos] = 1;
            rows.push(cells);
            rec(a, n, row + 1, rows, out);
            rows.pop();
        }
    }
    rec(a, n, 1, &mut rows, &mut out);
    out.sort_by_key(|t| t.flatten());
    out
}

/// The face poset of the polytope: all tableaux with their dimensions,
/// ordered componentwise on demand.
#[derive(Debug, Clone)]
pub struct FacePoset {
    elements: Vec<TeslerTableau>,
    dims: Vec<usize>,
}

impl FacePoset {
    pub fn elements(&self) -> &[TeslerTableau] {
        &self.elements
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Componentwise order between elements `i` and `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].leq(&self.elements[j])
    }

    pub fn indices_of_dim(&self, d: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.dims[i] == d).collect()
    }

    /// Face counts by dimension `0..=max`, excluding the empty face.
    pub fn f_vector(&self) -> Vec<BigInt> {
        let max_dim = self.dims.iter().copied().max().unwrap_or(0);
        let mut f = vec![BigInt::zero(); max_dim + 1];
        for &d in &self.dims {
            f[d] += 1;
        }
        f
    }
}

/// Builds the explicit face poset. Requires reduced hook sums (`a_1 > 0`, or
/// the single-zero point polytope) and `n ≤ 6`.
pub fn build_face_poset(a: &HookSums) -> Result<FacePoset> {
    require_reduced(a)?;
    if a.len() > MAX_EXPLICIT_N {
        return Err(Error::Unsupported(format!(
            "explicit face posets are limited to n <= {MAX_EXPLICIT_N}"
        )));
    }
    let elements = enumerate_tableaux(a);
    let dims = elements.iter().map(tableau_dim).collect();
    Ok(FacePoset { elements, dims })
}

/// f-vector of the polytope, indexed by dimension `0..=C(n,2)`.
///
/// Uses the explicit poset for `n ≤ 6`; for strictly positive hook sums and
/// larger `n` it convolves simplex f-vectors instead (the face poset of the
/// positive case is the one of `Δ_1 × ⋯ × Δ_{n−1}`).
pub fn f_vector(a: &HookSums) -> Result<Vec<BigInt>> {
    require_reduced(a)?;
    if a.len() <= MAX_EXPLICIT_N {
        let mut f = vec![BigInt::zero(); a.len() * (a.len() - 1) / 2 + 1];
        let n = a.len();
        let mut rows: Vec<Vec<u8>> = Vec::with_capacity(n);
        let mut sink = |rows: &[Vec<u8>]| {
            let d: usize = rows
                .iter()
                .map(|r| r.iter().filter(|&&c| c == 1).count().saturating_sub(1))
                .sum();
            f[d] += 1;
        };
        fill_tableau_rows(a, n, 1, &mut rows, &mut sink, &mut |_| true);
        Ok(f)
    } else if a.all_positive() {
        Ok(simplex_product_fvector(a.len()))
    } else {
        Err(Error::Unsupported(format!(
            "f-vector with zero hook sums is limited to n <= {MAX_EXPLICIT_N}"
        )))
    }
}

/// f-vector of `Δ_1 × Δ_2 × ⋯ × Δ_{n−1}` by convolution of simplex
/// f-polynomials (`Δ_d` has `C(d+1, i+1)` faces of dimension `i`).
pub fn simplex_product_fvector(n: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::one()];
    for d in 1..n {
        let fd: Vec<BigInt> = (0..=d).map(|i| binomial(d + 1, i + 1)).collect();
        acc = poly_mul(&acc, &fd);
    }
    acc
}

/// Vertices of the polytope: for every zero-dimensional tableau the unique
/// matrix supported on its 1-cells, built row by row.
pub fn vertices(a: &HookSums) -> Result<Vec<TeslerMatrix>> {
    require_reduced(a)?;
    let n = a.len();
    let mut out = Vec::new();
    for t in zero_dim_tableaux(a) {
        let mut rows: Vec<Vec<BigInt>> = (0..n).map(|i| vec![BigInt::zero(); n - i]).collect();
        let mut inflow = vec![BigInt::zero(); n + 1];
        for i in 1..=n {
            let supply = a.get(i) + &inflow[i];
            match t.rows()[i - 1].iter().position(|&c| c == 1) {
                Some(off) => {
                    let j = i + off;
                    debug_assert!(supply.is_positive());
                    if j > i {
                        inflow[j] += &supply;
                    }
                    rows[i - 1][off] = supply;
                }
                None => debug_assert!(supply.is_zero()),
            }
        }
        out.push(TeslerMatrix::from_parts_unchecked(rows, a.clone()));
    }
    Ok(out)
}

/// Whether the polytope is simple: always for `n ≤ 3` (after reduction), and
/// otherwise exactly for the signatures `+^n`, `+^{n−1}0`, `+0+^{n−2}`,
/// `+0+^{n−3}0`.
pub fn is_simple(a: &HookSums) -> bool {
    let r = reduce_hooks(a);
    let n = r.len();
    if n <= 3 {
        return true;
    }
    let e = signature(&r);
    let e = e.entries();
    let plus = |range: std::ops::Range<usize>| range.clone().all(|i| e[i] == Sign::Plus);
    let all_plus = plus(0..n);
    let plus_zero_tail = plus(0..n - 1) && e[n - 1] == Sign::Zero;
    let plus_zero_plus = e[1] == Sign::Zero && plus(2..n);
    let plus_zero_plus_zero = e[1] == Sign::Zero && plus(2..n - 1) && e[n - 1] == Sign::Zero;
    all_plus || plus_zero_tail || plus_zero_plus || plus_zero_plus_zero
}

/// Edge count of every vertex, derived from the poset: each 1-dimensional
/// tableau covers exactly two zero-dimensional ones.
pub fn vertex_degrees(a: &HookSums) -> Result<Vec<(TeslerMatrix, usize)>> {
    let poset = build_face_poset(a)?;
    let verts = poset.indices_of_dim(0);
    let edges = poset.indices_of_dim(1);
    let mut degrees = vec![0usize; verts.len()];
    for &e in &edges {
        let below: Vec<usize> = (0..verts.len())
            .filter(|&vi| poset.leq(verts[vi], e))
            .collect();
        if below.len() != 2 {
            return Err(Error::Internal(format!(
                "1-face with {} vertices below",
                below.len()
            )));
        }
        for vi in below {
            degrees[vi] += 1;
        }
    }
    let matrices = vertices(a)?;
    if matrices.len() != verts.len() {
        return Err(Error::Internal(
            "vertex count differs between poset and matrix construction".into(),
        ));
    }
    Ok(matrices.into_iter().zip(degrees).collect())
}

/// h-vector of a simple polytope, via exact expansion of `Σ f_i (x−1)^i`.
/// Leading zeros in `a` are reduced away first.
pub fn h_vector(a: &HookSums) -> Result<Vec<BigInt>> {
    let r = reduce_hooks(a);
    if !is_simple(&r) {
        return Err(Error::OutOfDomain(
            "h-vector is only defined here for simple polytopes".into(),
        ));
    }
    let f = f_vector(&r)?;
    let h = h_from_f(&f);
    if h.iter().any(|c| c.is_negative()) {
        return Err(Error::Internal("negative h-vector entry".into()));
    }
    Ok(h)
}

/// `Σ f_i (x−1)^i` as a coefficient vector.
pub fn h_from_f(f: &[BigInt]) -> Vec<BigInt> {
    let d = f.len() - 1;
    let mut h = vec![BigInt::zero(); d + 1];
    // (x−1)^i expanded with alternating binomials
    for (i, fi) in f.iter().enumerate() {
        for (j, slot) in h.iter_mut().enumerate().take(i + 1) {
            let mut term = binomial(i, j) * fi;
            if (i - j) % 2 == 1 {
                term = -term;
            }
            *slot += term;
        }
    }
    h
}

/// Generating function for outdegree over the `n!` single-support rows
/// (support `{(i, b_i)}` contributes `x^{Σ (n − b_i)}`); the coefficient
/// vector equals the Mahonian distribution `[n]!_x`.
pub fn outdegree_gf(a: &HookSums) -> Result<Vec<BigInt>> {
    if !a.all_positive() {
        return Err(Error::PositiveHooksRequired);
    }
    let n = a.len();
    let mut coeffs = vec![BigInt::zero(); n * (n - 1) / 2 + 1];
    fn rec(n: usize, row: usize, exp: usize, coeffs: &mut [BigInt]) {
        if row > n {
            coeffs[exp] += 1;
            return;
        }
        for b in row..=n {
            rec(n, row + 1, exp + (n - b), coeffs);
        }
    }
    rec(n, 1, 0, &mut coeffs);
    Ok(coeffs)
}

/// Coefficients of `[n]!_x = ∏_{i=1}^n (1 + x + ⋯ + x^{i−1})`.
pub fn mahonian_coeffs(n: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::one()];
    for i in 1..=n {
        let factor = vec![BigInt::one(); i];
        acc = poly_mul(&acc, &factor);
    }
    acc
}

pub(crate) fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
