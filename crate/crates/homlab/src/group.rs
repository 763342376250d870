//! Finite abelian groups presented as products of cyclic groups
//! `Z_{n_1} x ... x Z_{n_r}`, with elements stored componentwise.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("cannot parse group name {0:?} (expected forms like \"z2\", \"z4\", \"z2xz2\")")]
    Parse(String),
    #[error("cyclic factor order must be at least 1")]
    ZeroOrder,
}

/// `Z_{orders[0]} x ... x Z_{orders[r-1]}`. `orders` entries are >= 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
}

/// Element of a [`FiniteAbelianGroup`]; component `i` is a residue mod
/// `orders[i]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement(pub Vec<u64>);

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self, GroupError> {
        if orders.iter().any(|&n| n == 0) {
            return Err(GroupError::ZeroOrder);
        }
        Ok(FiniteAbelianGroup { orders })
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(vec![n]).expect("positive order")
    }

    /// Parses names like `z2`, `Z4`, `z2xz2`, `z3*z9`, `2x4`.
    pub fn parse(name: &str) -> Result<Self, GroupError> {
        let mut orders = Vec::new();
        for tok in name.split(|c| c == 'x' || c == 'X' || c == '*') {
            let t = tok.trim().trim_start_matches(['z', 'Z']);
            let n: u64 = t
                .parse()
                .map_err(|_| GroupError::Parse(name.to_string()))?;
            if n == 0 {
                return Err(GroupError::ZeroOrder);
            }
            orders.push(n);
        }
        if orders.is_empty() {
            return Err(GroupError::Parse(name.to_string()));
        }
        Self::new(orders)
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.orders.len()])
    }

    pub fn is_zero(&self, a: &GroupElement) -> bool {
        a.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            self.orders
                .iter()
                .zip(a.0.iter().zip(&b.0))
                .map(|(&n, (&x, &y))| (x + y) % n)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(
            self.orders
                .iter()
                .zip(&a.0)
                .map(|(&n, &x)| (n - x % n) % n)
                .collect(),
        )
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// Integer multiple `k * a` (k may be negative).
    pub fn scale(&self, k: i64, a: &GroupElement) -> GroupElement {
        GroupElement(
            self.orders
                .iter()
                .zip(&a.0)
                .map(|(&n, &x)| {
                    let k = k.rem_euclid(n as i64) as u64;
                    (k * x) % n
                })
                .collect(),
        )
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a GroupElement>>(&self, items: I) -> GroupElement {
        let mut acc = self.zero();
        for x in items {
            acc = self.add(&acc, x);
        }
        acc
    }

    /// All elements in lexicographic component order; `elements()[i]`
    /// corresponds to [`index_of`](Self::index_of) value `i`.
    pub fn elements(&self) -> Vec<GroupElement> {
        let total = self.order() as usize;
        (0..total).map(|i| self.from_index(i)).collect()
    }

    /// Dense index with the last component varying fastest.
    pub fn index_of(&self, a: &GroupElement) -> usize {
        let mut idx = 0usize;
        for (&n, &x) in self.orders.iter().zip(&a.0) {
            idx = idx * n as usize + x as usize;
        }
        idx
    }

    pub fn from_index(&self, mut idx: usize) -> GroupElement {
        let mut comps = vec![0u64; self.orders.len()];
        for i in (0..self.orders.len()).rev() {
            let n = self.orders[i] as usize;
            comps[i] = (idx % n) as u64;
            idx /= n;
        }
        GroupElement(comps)
    }

    pub fn random<R: Rng>(&self, rng: &mut R) -> GroupElement {
        GroupElement(self.orders.iter().map(|&n| rng.gen_range(0..n)).collect())
    }

    /// Largest multiplicity of a prime in `order()`; e.g. 12 = 2^2 * 3 gives 2.
    pub fn max_prime_multiplicity(&self) -> u32 {
        max_prime_multiplicity(self.order())
    }
}

/// Largest exponent in the prime factorization of `n` (0 for n = 1).
pub fn max_prime_multiplicity(mut n: u64) -> u32 {
    let mut best = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            best = best.max(e);
        }
        p += 1;
    }
    if n > 1 {
        best = best.max(1);
    }
    best
}
