//! Dense multilinear tables on `(∧²U)^{⊗p} ⊗ U`.
//!
//! A table of degree `p` stores, for every tuple of `p` canonical pair
//! indices and one basis index of `U`, a value vector of fixed length. Skew
//! symmetry inside each pair slot is a representation invariant: only
//! `i<j` pairs are addressable.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_slice, zeros};
use crate::scalar::Scalar;
use crate::wedge::{canonical_pair, pair_count, pairs};

/// A sparse linear combination of basis indices.
pub type Sparse = Vec<(usize, Scalar)>;

pub(crate) fn sparse_basis(i: usize) -> Sparse {
    vec![(i, Scalar::one())]
}

pub(crate) fn sparse_from(v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// `e_a ∧ v` over `n` basis vectors, as a combination of pair indices.
pub(crate) fn wedge_basis_vec(n: usize, a: usize, v: &[Scalar]) -> Sparse {
    let mut out = Vec::new();
    for (m, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if let Some((p, s)) = canonical_pair(n, a, m) {
            out.push((p, if s > 0 { c.clone() } else { -c }));
        }
    }
    out
}

/// `v ∧ e_b` over `n` basis vectors, as a combination of pair indices.
pub(crate) fn wedge_vec_basis(n: usize, v: &[Scalar], b: usize) -> Sparse {
    let mut out = Vec::new();
    for (m, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if let Some((p, s)) = canonical_pair(n, m, b) {
            out.push((p, if s > 0 { c.clone() } else { -c }));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainTable {
    degree: usize,
    arg_dim: usize,
    value_dim: usize,
    data: Vec<Scalar>,
}

impl CochainTable {
    pub fn zero(degree: usize, arg_dim: usize, value_dim: usize) -> Self {
        let rows = pair_count(arg_dim).pow(degree as u32) * arg_dim;
        CochainTable { degree, arg_dim, value_dim, data: zeros(rows * value_dim) }
    }

    /// Fills every entry from `f(pair indices, last index)`.
    pub fn from_fn(
        degree: usize,
        arg_dim: usize,
        value_dim: usize,
        mut f: impl FnMut(&[usize], usize) -> Vec<Scalar>,
    ) -> Self {
        let mut t = CochainTable::zero(degree, arg_dim, value_dim);
        let np = pair_count(arg_dim);
        let mut idx = vec![0usize; degree];
        for row in 0..t.row_count() {
            let mut r = row / arg_dim;
            for slot in (0..degree).rev() {
                idx[slot] = r % np;
                r /= np;
            }
            let v = f(&idx, row % arg_dim);
            debug_assert_eq!(v.len(), value_dim);
            t.data[row * value_dim..(row + 1) * value_dim].clone_from_slice(&v);
        }
        t
    }

    /// Entries drawn uniformly from `lo..=hi`.
    pub fn random(degree: usize, arg_dim: usize, value_dim: usize, lo: i64, hi: i64, rng: &mut impl Rng) -> Self {
        CochainTable::from_fn(degree, arg_dim, value_dim, |_, _| {
            (0..value_dim).map(|_| Scalar::from_int(rng.gen_range(lo..=hi))).collect()
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn arg_dim(&self) -> usize {
        self.arg_dim
    }

    pub fn value_dim(&self) -> usize {
        self.value_dim
    }

    pub fn row_count(&self) -> usize {
        self.data.len() / self.value_dim.max(1)
    }

    fn row(&self, slots: &[usize], last: usize) -> usize {
        let np = pair_count(self.arg_dim);
        let mut r = 0;
        for &p in slots {
            r = r * np + p;
        }
        r * self.arg_dim + last
    }

    /// Value at canonical pair indices and a last basis index.
    pub fn get(&self, slots: &[usize], last: usize) -> &[Scalar] {
        debug_assert_eq!(slots.len(), self.degree);
        let r = self.row(slots, last);
        &self.data[r * self.value_dim..(r + 1) * self.value_dim]
    }

    pub fn set(&mut self, slots: &[usize], last: usize, value: &[Scalar]) {
        let r = self.row(slots, last);
        self.data[r * self.value_dim..(r + 1) * self.value_dim].clone_from_slice(value);
    }

    /// Value on basis arguments given as ordered index pairs; repeated
    /// indices in a pair give zero and reversed pairs flip the sign.
    pub fn get_ordered(&self, pairs_: &[(usize, usize)], last: usize) -> Vec<Scalar> {
        let mut slots = Vec::with_capacity(pairs_.len());
        let mut sign = 1;
        for &(a, b) in pairs_ {
            match canonical_pair(self.arg_dim, a, b) {
                Some((p, s)) => {
                    slots.push(p);
                    sign *= s;
                }
                None => return zeros(self.value_dim),
            }
        }
        let v = self.get(&slots, last);
        if sign > 0 {
            v.to_vec()
        } else {
            v.iter().map(|c| -c).collect()
        }
    }

    /// Multilinear evaluation with each slot a combination of pair indices
    /// and the last argument a combination of basis indices.
    pub fn eval(&self, slots: &[Sparse], last: &Sparse) -> Vec<Scalar> {
        debug_assert_eq!(slots.len(), self.degree);
        let mut out = zeros(self.value_dim);
        let mut idx = vec![0usize; self.degree];
        self.eval_rec(slots, last, 0, &Scalar::one(), &mut idx, &mut out);
        out
    }

    fn eval_rec(
        &self,
        slots: &[Sparse],
        last: &Sparse,
        depth: usize,
        coef: &Scalar,
        idx: &mut Vec<usize>,
        out: &mut [Scalar],
    ) {
        if depth == slots.len() {
            for (x, c) in last {
                axpy(out, &(coef * c), self.get(idx, *x));
            }
            return;
        }
        for (p, c) in &slots[depth] {
            idx[depth] = *p;
            self.eval_rec(slots, last, depth + 1, &(coef * c), idx, out);
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_slice(&self.data)
    }

    pub fn try_add(&self, other: &CochainTable) -> Result<CochainTable> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(CochainTable { data, ..self.clone() })
    }

    pub fn try_sub(&self, other: &CochainTable) -> Result<CochainTable> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(CochainTable { data, ..self.clone() })
    }

    pub fn scale(&self, s: &Scalar) -> CochainTable {
        CochainTable { data: self.data.iter().map(|c| c * s).collect(), ..self.clone() }
    }

    pub(crate) fn same_shape(&self, other: &CochainTable) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::Degree(format!("degrees {} and {}", self.degree, other.degree)));
        }
        if self.arg_dim != other.arg_dim || self.value_dim != other.value_dim {
            return Err(Error::Shape("cochains over different spaces".into()));
        }
        Ok(())
    }

    /// First entry (in storage order) where the two tables differ.
    pub fn first_difference(&self, other: &CochainTable) -> Option<(Vec<(usize, usize)>, usize)> {
        if self.same_shape(other).is_err() {
            return Some((Vec::new(), 0));
        }
        let ps = pairs(self.arg_dim);
        let mut found = None;
        for_each_row(self.degree, self.arg_dim, |slots, last| {
            if found.is_none() && self.get(slots, last) != other.get(slots, last) {
                found = Some((slots.iter().map(|&p| ps[p]).collect(), last));
            }
        });
        found
    }
}

/// Visits every `(pair indices, last index)` row in storage order.
pub fn for_each_row(degree: usize, arg_dim: usize, mut f: impl FnMut(&[usize], usize)) {
    let np = pair_count(arg_dim);
    crate::wedge::for_each_tuple(np, degree, |slots| {
        for x in 0..arg_dim {
            f(slots, x);
        }
    });
}
