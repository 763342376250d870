//! Integer linear algebra: Smith normal form over Z with machine-checked
//! postconditions, solution counting for linear systems over finite abelian
//! groups, and dense matrices over prime fields.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::group::{FiniteAbelianGroup, GroupElement};

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
}

/// Dense integer matrix (row-major, arbitrary precision).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntMatrix {
            rows,
            cols,
            data: entries.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += q * row[b]
    fn add_row(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let add = q * self.get(b, j);
            let cur = self.get(a, j) + add;
            self.set(a, j, cur);
        }
    }

    /// col[a] += q * col[b]
    fn add_col(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let add = q * self.get(i, b);
            let cur = self.get(i, a) + add;
            self.set(i, a, cur);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let cur = -self.get(a, j).clone();
            self.set(a, j, cur);
        }
    }

    /// Determinant via fraction-free (Bareiss) elimination; exact.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    m.set(i, j, &num / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }
}

/// Smith normal form `u * a * v = d` with unimodular `u`, `v` and diagonal
/// `d` whose entries are nonnegative and divide each other in order.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let t_max = a.rows.min(a.cols);
    for t in 0..t_max {
        'pivot: loop {
            // Smallest nonzero entry of the remaining submatrix as pivot.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..a.rows {
                for j in t..a.cols {
                    if !d.get(i, j).is_zero()
                        && pivot.map_or(true, |(pi, pj)| {
                            d.get(i, j).abs() < d.get(pi, pj).abs()
                        })
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let (pi, pj) = match pivot {
                Some(p) => p,
                None => break 'pivot, // all zero: done
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Clear column t and row t with truncated-quotient reductions.
            let mut dirty = false;
            for i in t + 1..a.rows {
                if !d.get(i, t).is_zero() {
                    let q = -(d.get(i, t) / d.get(t, t));
                    d.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                    if !d.get(i, t).is_zero() {
                        dirty = true; // smaller remainder became a new pivot candidate
                    }
                }
            }
            for j in t + 1..a.cols {
                if !d.get(t, j).is_zero() {
                    let q = -(d.get(t, j) / d.get(t, t));
                    d.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                    if !d.get(t, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Divisibility: the pivot must divide every remaining entry;
            // pull an offending row up and restart the reduction if not.
            for i in t + 1..a.rows {
                for j in t + 1..a.cols {
                    if !(d.get(i, j) % d.get(t, t)).is_zero() {
                        let one = BigInt::one();
                        d.add_row(t, i, &one);
                        u.add_row(t, i, &one);
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    let snf = Snf { u, d, v };
    check_snf(a, &snf);
    snf
}

/// Machine-checked postconditions, run on every result: `u a v = d`,
/// unimodularity, diagonal shape, and the divisibility chain.
fn check_snf(a: &IntMatrix, snf: &Snf) {
    let prod = snf.u.mul(a).mul(&snf.v);
    assert_eq!(prod, snf.d, "snf: u*a*v != d");
    assert!(
        snf.u.det().abs().is_one(),
        "snf: u is not unimodular"
    );
    assert!(
        snf.v.det().abs().is_one(),
        "snf: v is not unimodular"
    );
    for i in 0..snf.d.rows {
        for j in 0..snf.d.cols {
            if i != j {
                assert!(snf.d.get(i, j).is_zero(), "snf: d not diagonal");
            }
        }
    }
    let diag = snf.diagonal();
    for d in &diag {
        assert!(!d.is_negative(), "snf: negative diagonal entry");
    }
    for w in diag.windows(2) {
        if !w[0].is_zero() {
            assert!(
                (&w[1] % &w[0]).is_zero(),
                "snf: divisibility chain broken"
            );
        } else {
            assert!(w[1].is_zero(), "snf: zero before nonzero on diagonal");
        }
    }
}

/// Counts solutions of `A x = rhs` where each unknown ranges over `group`
/// and the equations are read componentwise in each cyclic factor.
///
/// Returns the exact solution count and, when nonzero, one witness
/// assignment. The count decomposes over cyclic factors; within one factor
/// `Z_q`, after changing variables via the Smith form, equation
/// `d_i y_i = c_i (mod q)` contributes `gcd(d_i, q)` solutions iff
/// `gcd(d_i, q) | c_i` (zero otherwise), free variables contribute `q`.
pub fn count_solutions(
    a: &IntMatrix,
    rhs: &[GroupElement],
    group: &FiniteAbelianGroup,
) -> Result<(BigUint, Option<Vec<GroupElement>>), LinalgError> {
    if rhs.len() != a.rows {
        return Err(LinalgError::Dimension(format!(
            "rhs has {} entries for {} equations",
            rhs.len(),
            a.rows
        )));
    }
    if rhs.iter().any(|e| e.0.len() != group.rank()) {
        return Err(LinalgError::Dimension(
            "rhs element rank differs from group rank".into(),
        ));
    }
    let snf = smith_normal_form(a);
    let k = a.rows.min(a.cols);
    let mut total = BigUint::one();
    // One y per variable and factor; recombined into GroupElements below.
    let mut witness: Vec<Vec<u64>> = vec![vec![0; group.rank()]; a.cols];
    for (f, &q) in group.orders().iter().enumerate() {
        // c' = U * c (mod q)
        let u_mod = reduce_mod(&snf.u, q);
        let c: Vec<u64> = rhs.iter().map(|e| e.0[f] % q).collect();
        let mut cp = vec![0u64; a.rows];
        for i in 0..a.rows {
            let mut acc = 0u64;
            for (j, &cj) in c.iter().enumerate() {
                acc = (acc + u_mod[i * a.rows + j] * cj) % q;
            }
            cp[i] = acc;
        }
        let mut y = vec![0u64; a.cols];
        let mut factor_count = BigUint::one();
        let mut solvable = true;
        for i in 0..k {
            let di = big_mod(snf.d.get(i, i), q);
            let g = if di == 0 { q } else { di.gcd(&q) };
            if cp[i] % g != 0 {
                solvable = false;
                break;
            }
            factor_count *= BigUint::from(g);
            if g == q {
                y[i] = 0; // d_i = 0 mod q and c_i = 0: anything works
            } else {
                let qg = q / g;
                let inv = mod_inverse(di / g % qg, qg).expect("coprime by construction");
                y[i] = (cp[i] / g % qg) * inv % qg;
            }
        }
        if solvable {
            for &ci in cp.iter().skip(k) {
                if ci % q != 0 {
                    solvable = false;
                    break;
                }
            }
        }
        if !solvable {
            return Ok((BigUint::zero(), None));
        }
        for _ in k..a.cols {
            factor_count *= BigUint::from(q);
        }
        // x = V y (mod q)
        let v_mod = reduce_mod(&snf.v, q);
        for i in 0..a.cols {
            let mut acc = 0u64;
            for (j, &yj) in y.iter().enumerate() {
                acc = (acc + v_mod[i * a.cols + j] * yj) % q;
            }
            witness[i][f] = acc;
        }
        total *= factor_count;
    }
    let witness: Vec<GroupElement> = witness.into_iter().map(GroupElement).collect();
    if cfg!(debug_assertions) {
        // The witness must satisfy every equation.
        for (i, target) in rhs.iter().enumerate() {
            let mut acc = group.zero();
            for (j, x) in witness.iter().enumerate() {
                let coef = big_mod_i64(a.get(i, j));
                acc = group.add(&acc, &group.scale(coef, x));
            }
            assert_eq!(&acc, target, "solution witness fails equation {i}");
        }
    }
    Ok((total, Some(witness)))
}

fn reduce_mod(m: &IntMatrix, q: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(m.rows * m.cols);
    for i in 0..m.rows {
        for j in 0..m.cols {
            out.push(big_mod(m.get(i, j), q));
        }
    }
    out
}

fn big_mod(x: &BigInt, q: u64) -> u64 {
    let m = x.mod_floor(&BigInt::from(q));
    let digits = m.to_u64_digits().1;
    digits.first().copied().unwrap_or(0)
}

fn big_mod_i64(x: &BigInt) -> i64 {
    // Only used on original input matrices, whose entries are tiny.
    let m = x.clone();
    let s = m.to_string();
    s.parse::<i64>().expect("input matrix entry fits in i64")
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

// ----- prime field matrices -----

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix over F_p (p prime, entries reduced).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Result<Self, LinalgError> {
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        })
    }

    pub fn identity(p: u64, n: usize) -> Result<Self, LinalgError> {
        let mut m = Self::zero(p, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Result<Self, LinalgError> {
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        Ok(FpMatrix {
            p,
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| x % p).collect(),
        })
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x % self.p;
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols, other.rows);
        let mut out = FpMatrix {
            p: self.p,
            rows: self.rows,
            cols: other.cols,
            data: vec![0; self.rows * other.cols],
        };
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = (out.get(i, j) + a * other.get(k, j)) % self.p;
                    out.data[i * out.cols + j] = cur;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, other.p);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a + self.p - b) % self.p)
            .collect();
        FpMatrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Row echelon reduction; returns (reduced matrix, pivot columns).
    fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&i| m.get(i, col) != 0);
            let pr = match pivot_row {
                Some(pr) => pr,
                None => continue,
            };
            for j in 0..m.cols {
                m.data.swap(row * m.cols + j, pr * m.cols + j);
            }
            let inv = mod_inverse(m.get(row, col), p).expect("prime modulus");
            for j in 0..m.cols {
                let cur = m.get(row, j) * inv % p;
                m.data[row * m.cols + j] = cur;
            }
            for i in 0..m.rows {
                if i != row && m.get(i, col) != 0 {
                    let f = m.get(i, col);
                    for j in 0..m.cols {
                        let cur = (m.get(i, j) + (p - f) * m.get(row, j)) % p;
                        m.data[i * m.cols + j] = cur;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> u64 {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let p = m.p;
        let n = m.rows;
        let mut det = 1u64;
        for col in 0..n {
            let pr = match (col..n).find(|&i| m.get(i, col) != 0) {
                Some(pr) => pr,
                None => return 0,
            };
            if pr != col {
                for j in 0..n {
                    m.data.swap(col * n + j, pr * n + j);
                }
                det = (p - det) % p;
            }
            det = det * m.get(col, col) % p;
            let inv = mod_inverse(m.get(col, col), p).unwrap();
            for i in col + 1..n {
                let f = m.get(i, col) * inv % p;
                if f == 0 {
                    continue;
                }
                for j in col..n {
                    let cur = (m.get(i, j) + (p - f) * m.get(col, j) % p) % p;
                    m.data[i * n + j] = cur;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.det() != 0
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        // Augment with identity and reduce.
        let mut aug = FpMatrix::zero(self.p, n, 2 * n).unwrap();
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut inv = FpMatrix::zero(self.p, n, n).unwrap();
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Basis of the right nullspace `{x : Ax = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut x = vec![0u64; self.cols];
            x[fc] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                // pivot var = -sum(free contributions)
                x[pc] = (self.p - r.get(ri, fc)) % self.p;
            }
            basis.push(x);
        }
        basis
    }

    /// One solution of `Ax = b`, if any.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = FpMatrix::zero(self.p, self.rows, self.cols + 1).unwrap();
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![0u64; self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(ri, self.cols);
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn smith_form_of_known_matrices() {
        // Values fixed by independent computation.
        let cases: Vec<(usize, usize, Vec<i64>, Vec<i64>)> = vec![
            (2, 2, vec![2, 4, 6, 8], vec![2, 4]),
            (2, 2, vec![1, 2, 3, 4], vec![1, 2]),
            (2, 2, vec![2, 0, 0, 3], vec![1, 6]),
            (2, 2, vec![0, 0, 0, 0], vec![0, 0]),
            (3, 3, vec![2, 4, 4, -6, 6, 12, 10, 4, 16], vec![2, 2, 156]),
            (1, 3, vec![4, 6, 10], vec![2]),
            (3, 1, vec![9, 6, 3], vec![3]),
        ];
        for (r, c, entries, want) in cases {
            let a = IntMatrix::from_i64(r, c, &entries);
            let snf = smith_normal_form(&a); // postconditions checked inside
            let got: Vec<i64> = snf
                .diagonal()
                .iter()
                .map(|d| d.to_string().parse().unwrap())
                .collect();
            assert_eq!(got, want, "snf diagonal of {entries:?}");
        }
    }

    #[test]
    fn snf_postconditions_on_random_matrices() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let entries: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-9..=9)).collect();
            let a = IntMatrix::from_i64(rows, cols, &entries);
            smith_normal_form(&a); // panics if any postcondition fails
        }
    }

    /// Brute-force oracle: enumerate all assignments.
    fn count_brute(a: &IntMatrix, rhs: &[GroupElement], group: &FiniteAbelianGroup) -> u64 {
        let elems = group.elements();
        let n = a.cols;
        let mut count = 0;
        let mut idx = vec![0usize; n];
        loop {
            let ok = (0..a.rows).all(|i| {
                let mut acc = group.zero();
                for j in 0..n {
                    let coef: i64 = a.get(i, j).to_string().parse().unwrap();
                    acc = group.add(&acc, &group.scale(coef, &elems[idx[j]]));
                }
                acc == rhs[i]
            });
            if ok {
                count += 1;
            }
            // odometer
            let mut k = 0;
            loop {
                if k == n {
                    return count;
                }
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn solution_counts_match_brute_force() {
        let mut rng = StdRng::seed_from_u64(11);
        let groups = [
            FiniteAbelianGroup::cyclic(2),
            FiniteAbelianGroup::cyclic(3),
            FiniteAbelianGroup::cyclic(4),
            FiniteAbelianGroup::cyclic(6),
            FiniteAbelianGroup::parse("z2xz2").unwrap(),
            FiniteAbelianGroup::parse("z2xz4").unwrap(),
        ];
        for _ in 0..40 {
            let group = &groups[rng.gen_range(0..groups.len())];
            let rows = rng.gen_range(1..=3);
            let cols = rng.gen_range(1..=3);
            let entries: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-4..=4)).collect();
            let a = IntMatrix::from_i64(rows, cols, &entries);
            let rhs: Vec<GroupElement> = (0..rows).map(|_| group.random(&mut rng)).collect();
            let (count, witness) = count_solutions(&a, &rhs, group).unwrap();
            let brute = count_brute(&a, &rhs, group);
            assert_eq!(count, BigUint::from(brute), "system {entries:?} over {group}");
            assert_eq!(witness.is_some(), brute > 0);
        }
    }

    #[test]
    fn unsolvable_system_has_no_witness() {
        // 2x = 1 over Z4 has no solution.
        let a = IntMatrix::from_i64(1, 1, &[2]);
        let group = FiniteAbelianGroup::cyclic(4);
        let (count, witness) =
            count_solutions(&a, &[GroupElement(vec![1])], &group).unwrap();
        assert!(count.is_zero());
        assert!(witness.is_none());
        // 2x = 2 has two (x = 1, 3).
        let (count, witness) =
            count_solutions(&a, &[GroupElement(vec![2])], &group).unwrap();
        assert_eq!(count, BigUint::from(2u32));
        assert!(witness.is_some());
    }

    #[test]
    fn fp_matrix_inverse_and_rank() {
        let m = FpMatrix::from_rows(5, &[vec![1, 2], vec![3, 4]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FpMatrix::identity(5, 2).unwrap());
        assert_eq!(m.rank(), 2);
        assert_eq!(m.det(), (1 * 4 + 5 - (2 * 3) % 5) % 5);

        let singular = FpMatrix::from_rows(3, &[vec![1, 2], vec![2, 4 % 3]]).unwrap();
        // [[1,2],[2,1]] over F_3 has det 1-4 = -3 = 0.
        assert_eq!(singular.det(), 0);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn fp_nullspace_and_solve() {
        let m = FpMatrix::from_rows(2, &[vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for x in &ns {
            for i in 0..m.rows {
                let s: u64 = (0..m.cols).map(|j| m.get(i, j) * x[j]).sum();
                assert_eq!(s % 2, 0);
            }
        }
        let sol = m.solve(&[1, 1]).unwrap();
        assert_eq!((sol[0] + sol[1]) % 2, 1);
        assert_eq!(sol[2], 1);

        let inconsistent = FpMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(inconsistent.solve(&[0, 1]).is_none());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FpMatrix::zero(4, 2, 2).is_err());
        assert!(FpMatrix::identity(6, 3).is_err());
    }
}
