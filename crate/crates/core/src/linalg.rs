//! Basis-indexed vectors and linear maps over exact scalars.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Identifies the space a vector or map lives in. Two spaces are the same
/// iff their identifiers are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceId(Arc<str>);

impl SpaceId {
    pub fn new(name: &str) -> Self {
        SpaceId(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The identifier of `self ⊕ other`.
    pub fn direct_sum(&self, other: &SpaceId) -> SpaceId {
        SpaceId::new(&format!("{}+{}", self.0, other.0))
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn check_space(expected: &SpaceId, found: &SpaceId) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::SpaceMismatch { expected: expected.to_string(), found: found.to_string() })
    }
}

pub(crate) fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

/// `acc += a * x`
pub(crate) fn axpy(acc: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (t, v) in acc.iter_mut().zip(x) {
        t.add_mul(a, v);
    }
}

pub(crate) fn is_zero_slice(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub(crate) fn sub_slices(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// A vector given by its coordinates in the basis of a named space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    space: SpaceId,
    coeffs: Vec<Scalar>,
}

impl Vector {
    pub fn new(space: SpaceId, coeffs: Vec<Scalar>) -> Self {
        Vector { space, coeffs }
    }

    pub fn zero(space: SpaceId, dim: usize) -> Self {
        Vector { space, coeffs: zeros(dim) }
    }

    pub fn basis(space: SpaceId, dim: usize, i: usize) -> Self {
        let mut coeffs = zeros(dim);
        coeffs[i] = Scalar::one();
        Vector { space, coeffs }
    }

    pub fn space(&self) -> &SpaceId {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_slice(&self.coeffs)
    }

    pub fn try_add(&self, other: &Vector) -> Result<Vector> {
        self.compatible(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Vector { space: self.space.clone(), coeffs })
    }

    pub fn try_sub(&self, other: &Vector) -> Result<Vector> {
        self.compatible(other)?;
        Ok(Vector { space: self.space.clone(), coeffs: sub_slices(&self.coeffs, &other.coeffs) })
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector { space: self.space.clone(), coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    fn compatible(&self, other: &Vector) -> Result<()> {
        check_space(&self.space, &other.space)?;
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::Shape(format!(
                "vector lengths {} and {} in space {}",
                self.coeffs.len(),
                other.coeffs.len(),
                self.space
            )));
        }
        Ok(())
    }
}

/// A linear map stored column by column: column `j` is the image of the
/// `j`-th domain basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    domain: SpaceId,
    codomain: SpaceId,
    domain_dim: usize,
    codomain_dim: usize,
    data: Vec<Scalar>,
}

impl LinearMap {
    pub fn zero(domain: SpaceId, domain_dim: usize, codomain: SpaceId, codomain_dim: usize) -> Self {
        LinearMap { domain, codomain, domain_dim, codomain_dim, data: zeros(domain_dim * codomain_dim) }
    }

    pub fn identity(space: SpaceId, dim: usize) -> Self {
        let mut m = LinearMap::zero(space.clone(), dim, space, dim);
        for i in 0..dim {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a map from the images of the domain basis vectors.
    pub fn from_columns(
        domain: SpaceId,
        codomain: SpaceId,
        codomain_dim: usize,
        columns: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        let domain_dim = columns.len();
        let mut data = Vec::with_capacity(domain_dim * codomain_dim);
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != codomain_dim {
                return Err(Error::Shape(format!(
                    "column {j} has length {}, expected {codomain_dim}",
                    col.len()
                )));
            }
            data.extend(col);
        }
        Ok(LinearMap { domain, codomain, domain_dim, codomain_dim, data })
    }

    pub fn domain(&self) -> &SpaceId {
        &self.domain
    }

    pub fn codomain(&self) -> &SpaceId {
        &self.codomain
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    /// Coefficient of the `row`-th codomain basis vector in the image of the
    /// `col`-th domain basis vector.
    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.data[col * self.codomain_dim + row]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.data[col * self.codomain_dim + row] = value;
    }

    pub fn column(&self, col: usize) -> &[Scalar] {
        &self.data[col * self.codomain_dim..(col + 1) * self.codomain_dim]
    }

    pub fn is_zero(&self) -> bool {
        is_zero_slice(&self.data)
    }

    pub fn apply_coeffs(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = zeros(self.codomain_dim);
        for (j, c) in x.iter().enumerate() {
            axpy(&mut out, c, self.column(j));
        }
        out
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        check_space(&self.domain, x.space())?;
        if x.dim() != self.domain_dim {
            return Err(Error::Shape(format!("vector of dim {} for map with domain dim {}", x.dim(), self.domain_dim)));
        }
        Ok(Vector::new(self.codomain.clone(), self.apply_coeffs(x.coeffs())))
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap { data: self.data.iter().map(|c| c * s).collect(), ..self.clone() }
    }

    pub fn try_add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.same_shape(other)?;
        Ok(LinearMap { data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(), ..self.clone() })
    }

    pub fn try_sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.same_shape(other)?;
        Ok(LinearMap { data: sub_slices(&self.data, &other.data), ..self.clone() })
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        check_space(&self.domain, &other.codomain)?;
        let columns = (0..other.domain_dim).map(|j| self.apply_coeffs(other.column(j))).collect();
        LinearMap::from_columns(other.domain.clone(), self.codomain.clone(), self.codomain_dim, columns)
    }

    fn same_shape(&self, other: &LinearMap) -> Result<()> {
        check_space(&self.domain, &other.domain)?;
        check_space(&self.codomain, &other.codomain)?;
        if self.domain_dim != other.domain_dim || self.codomain_dim != other.codomain_dim {
            return Err(Error::Shape("linear maps of different shapes".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_space_checks() {
        let a = Vector::basis(SpaceId::new("g"), 3, 0);
        let b = Vector::basis(SpaceId::new("h"), 3, 1);
        assert!(matches!(a.try_add(&b), Err(Error::SpaceMismatch { .. })));
        let c = Vector::basis(SpaceId::new("g"), 3, 2);
        let s = a.try_add(&c).unwrap();
        assert_eq!(s.coeffs(), &[Scalar::one(), Scalar::zero(), Scalar::one()]);
    }

    #[test]
    fn compose_and_apply() {
        let g = SpaceId::new("g");
        let id = LinearMap::identity(g.clone(), 2);
        let mut swap = LinearMap::zero(g.clone(), 2, g.clone(), 2);
        swap.set(1, 0, Scalar::one());
        swap.set(0, 1, Scalar::one());
        assert_eq!(swap.compose(&swap).unwrap(), id);
        let v = Vector::new(g, vec![Scalar::from_int(3), Scalar::from_int(5)]);
        assert_eq!(swap.apply(&v).unwrap().coeffs(), &[Scalar::from_int(5), Scalar::from_int(3)]);
    }
}
