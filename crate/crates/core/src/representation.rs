//! Representations of 3-Lie algebras, semidirect products, and the cochain
//! complex with its coboundary operator.

use std::fmt;

use crate::algebra::{all_tuples, ThreeLieAlgebra, Verdict};
use crate::cochain::{sparse_basis, sparse_from, CochainTable, Sparse};
use crate::error::{Error, Result};
use crate::linalg::{axpy, check_space, zeros, LinearMap, SpaceId};
use crate::scalar::Scalar;
use crate::wedge::{canonical_pair, pair_count, pairs};

/// A skew linear map `ρ: ∧²g → gl(V)`, stored on canonical pairs `i<j`.
/// The representation identities are certified by [`Representation::rep_defects`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: ThreeLieAlgebra,
    space: SpaceId,
    basis: Vec<String>,
    rho: Vec<LinearMap>,
}

/// Outcome of checking both representation identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepVerdict {
    pub first: Verdict,
    pub second: Verdict,
}

impl RepVerdict {
    pub fn passed(&self) -> bool {
        self.first.passed() && self.second.passed()
    }
}

impl fmt::Display for RepVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "first identity: {}; second identity: {}", self.first, self.second)
    }
}

impl Representation {
    /// The zero representation of `algebra` on a space with the given basis.
    pub fn zero(algebra: ThreeLieAlgebra, space: &str, basis: Vec<String>) -> Self {
        let space = SpaceId::new(space);
        let m = basis.len();
        let rho = vec![LinearMap::zero(space.clone(), m, space.clone(), m); pair_count(algebra.dim())];
        Representation { algebra, space, basis, rho }
    }

    /// `ρ(x, y) = [x, y, ·]` on the algebra itself.
    pub fn adjoint(algebra: ThreeLieAlgebra) -> Self {
        let n = algebra.dim();
        let rho = pairs(n)
            .into_iter()
            .map(|(i, j)| {
                let cols = (0..n).map(|k| algebra.basis_bracket(i, j, k)).collect();
                LinearMap::from_columns(algebra.space().clone(), algebra.space().clone(), n, cols).expect("square")
            })
            .collect();
        Representation { space: algebra.space().clone(), basis: algebra.basis_names().to_vec(), rho, algebra }
    }

    pub fn algebra(&self) -> &ThreeLieAlgebra {
        &self.algebra
    }

    pub fn space(&self) -> &SpaceId {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// Sets `ρ(e_i, e_j)` for `i ≠ j` in either order.
    pub fn set_rho(&mut self, i: usize, j: usize, map: LinearMap) -> Result<()> {
        let n = self.algebra.dim();
        if i >= n || j >= n {
            return Err(Error::Shape(format!("pair ({i},{j}) out of range for dim {n}")));
        }
        check_space(&self.space, map.domain())?;
        check_space(&self.space, map.codomain())?;
        if map.domain_dim() != self.dim() || map.codomain_dim() != self.dim() {
            return Err(Error::Shape("representation map has the wrong size".into()));
        }
        let (p, s) = canonical_pair(n, i, j)
            .ok_or_else(|| Error::Shape(format!("pair ({i},{j}) repeats an index")))?;
        self.rho[p] = if s > 0 { map } else { map.scale(&Scalar::from_int(-1)) };
        Ok(())
    }

    /// `ρ(e_i, e_j)` for any basis indices.
    pub fn rho_basis(&self, i: usize, j: usize) -> LinearMap {
        let n = self.algebra.dim();
        match canonical_pair(n, i, j) {
            Some((p, s)) if s > 0 => self.rho[p].clone(),
            Some((p, _)) => self.rho[p].scale(&Scalar::from_int(-1)),
            None => LinearMap::zero(self.space.clone(), self.dim(), self.space.clone(), self.dim()),
        }
    }

    /// `acc += coef · ρ(e_i, e_j) v`
    pub(crate) fn add_rho_basis(&self, acc: &mut [Scalar], coef: &Scalar, i: usize, j: usize, v: &[Scalar]) {
        if let Some((p, s)) = canonical_pair(self.algebra.dim(), i, j) {
            let c = if s > 0 { coef.clone() } else { -coef };
            for (k, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    axpy(acc, &(&c * x), self.rho[p].column(k));
                }
            }
        }
    }

    /// `ρ(x, y) v` on coefficient vectors.
    pub fn rho_apply(&self, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = zeros(self.dim());
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                self.add_rho_basis(&mut out, &(a * b), i, j, v);
            }
        }
        out
    }

    /// `ρ(x, y)` as a matrix, for coefficient vectors `x, y` of the algebra.
    pub fn rho_of(&self, x: &[Scalar], y: &[Scalar]) -> LinearMap {
        let m = self.dim();
        let cols = (0..m)
            .map(|k| {
                let mut e = zeros(m);
                e[k] = Scalar::one();
                self.rho_apply(x, y, &e)
            })
            .collect();
        LinearMap::from_columns(self.space.clone(), self.space.clone(), m, cols).expect("square")
    }

    /// Checks both representation identities on every basis 4-tuple:
    ///
    /// - `ρ(x1,x2)ρ(x3,x4) = ρ([x1,x2,x3],x4) + ρ(x3,[x1,x2,x4]) + ρ(x3,x4)ρ(x1,x2)`
    /// - `ρ(x1,[x2,x3,x4]) = ρ(x3,x4)ρ(x1,x2) − ρ(x2,x4)ρ(x1,x3) + ρ(x2,x3)ρ(x1,x4)`
    ///
    /// A failing witness carries the defect matrix flattened column by column.
    pub fn rep_defects(&self) -> RepVerdict {
        let n = self.algebra.dim();
        let tuples = all_tuples(n, 4);
        let names = self.algebra.basis_names();
        let unit = |i: usize| {
            let mut v = zeros(n);
            v[i] = Scalar::one();
            v
        };
        let flat = |m: &LinearMap| (0..m.domain_dim()).flat_map(|j| m.column(j).to_vec()).collect::<Vec<_>>();
        let compose = |a: &LinearMap, b: &LinearMap| a.compose(b).expect("same space");
        let first = Verdict::scan(tuples.clone(), names, |t| {
            let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
            let lhs = compose(&self.rho_basis(a, b), &self.rho_basis(c, d));
            let abc = self.algebra.basis_bracket(a, b, c);
            let abd = self.algebra.basis_bracket(a, b, d);
            let rhs = self
                .rho_of(&abc, &unit(d))
                .try_add(&self.rho_of(&unit(c), &abd))
                .and_then(|m| m.try_add(&compose(&self.rho_basis(c, d), &self.rho_basis(a, b))))
                .expect("same space");
            flat(&lhs.try_sub(&rhs).expect("same space"))
        });
        let second = Verdict::scan(tuples, names, |t| {
            let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
            let lhs = self.rho_of(&unit(a), &self.algebra.basis_bracket(b, c, d));
            let rhs = compose(&self.rho_basis(c, d), &self.rho_basis(a, b))
                .try_sub(&compose(&self.rho_basis(b, d), &self.rho_basis(a, c)))
                .and_then(|m| m.try_add(&compose(&self.rho_basis(b, c), &self.rho_basis(a, d))))
                .expect("same space");
            flat(&lhs.try_sub(&rhs).expect("same space"))
        });
        RepVerdict { first, second }
    }

    /// The ternary bracket on `g ⊕ V`:
    /// `[x1+v1, x2+v2, x3+v3] = [x1,x2,x3] + ρ(x1,x2)v3 + ρ(x2,x3)v1 + ρ(x3,x1)v2`.
    pub fn semidirect_product(&self) -> ThreeLieAlgebra {
        let n = self.algebra.dim();
        let m = self.dim();
        let basis: Vec<String> =
            self.algebra.basis_names().iter().chain(&self.basis).cloned().collect();
        let space = self.algebra.space().direct_sum(&self.space);
        let split = |i: usize| {
            let mut x = zeros(n);
            let mut v = zeros(m);
            if i < n {
                x[i] = Scalar::one();
            } else {
                v[i - n] = Scalar::one();
            }
            (x, v)
        };
        ThreeLieAlgebra::from_fn(space.as_str(), basis, |i, j, k| {
            let (x1, v1) = split(i);
            let (x2, v2) = split(j);
            let (x3, v3) = split(k);
            let mut out = self.algebra.bracket_coeffs(&x1, &x2, &x3);
            let mut fiber = self.rho_apply(&x1, &x2, &v3);
            for (t, s) in fiber.iter_mut().zip(self.rho_apply(&x2, &x3, &v1)) {
                *t += s;
            }
            for (t, s) in fiber.iter_mut().zip(self.rho_apply(&x3, &x1, &v2)) {
                *t += s;
            }
            out.extend(fiber);
            out
        })
    }

    /// The coboundary of a cochain with `p` pair slots; the result has `p+1`.
    ///
    /// With `m = p+1`, `X_j = x_j∧y_j` and `z` the last argument:
    /// ```text
    /// δα(X_1..X_m, z) = Σ_{j<k} (−1)^j α(..X̂_j..,[X_j,X_k]_F at k,..,z)
    ///                 + Σ_j (−1)^j α(..X̂_j..,[x_j,y_j,z])
    ///                 + Σ_j (−1)^{j+1} ρ(X_j) α(..X̂_j..,z)
    ///                 + (−1)^{m+1} (ρ(y_m,z) α(X_1..X_{m−1},x_m) + ρ(z,x_m) α(X_1..X_{m−1},y_m))
    /// ```
    pub fn coboundary(&self, a: &Cochain) -> Result<Cochain> {
        check_space(self.algebra.space(), &a.arg_space)?;
        check_space(&self.space, &a.value_space)?;
        let t = &a.table;
        let n = self.algebra.dim();
        if t.arg_dim() != n || t.value_dim() != self.dim() {
            return Err(Error::Shape("cochain does not match the representation".into()));
        }
        let m = t.degree() + 1;
        let ps = pairs(n);
        let fund = self.algebra.fundamental_leibniz();
        let sign = |e: usize| if e.is_multiple_of(2) { Scalar::one() } else { Scalar::from_int(-1) };
        let table = CochainTable::from_fn(m, n, self.dim(), |slots, z| {
            let mut out = zeros(self.dim());
            let args: Vec<Sparse> = slots.iter().map(|&p| sparse_basis(p)).collect();
            let zs = sparse_basis(z);
            for j in 0..m {
                let sj = sign(j + 1);
                let rest: Vec<Sparse> = args.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, s)| s.clone()).collect();
                for k in j + 1..m {
                    let mut inner = rest.clone();
                    inner[k - 1] = sparse_from(fund.basis_bracket(slots[j], slots[k]));
                    axpy(&mut out, &sj, &t.eval(&inner, &zs));
                }
                let (x, y) = ps[slots[j]];
                let xyz = sparse_from(&self.algebra.basis_bracket(x, y, z));
                axpy(&mut out, &sj, &t.eval(&rest, &xyz));
                let val = t.eval(&rest, &zs);
                self.add_rho_basis(&mut out, &sign(j + 2), x, y, &val);
            }
            let (x, y) = ps[slots[m - 1]];
            let head = &args[..m - 1];
            let s = sign(m + 1);
            self.add_rho_basis(&mut out, &s, y, z, &t.eval(head, &sparse_basis(x)));
            self.add_rho_basis(&mut out, &s, z, x, &t.eval(head, &sparse_basis(y)));
            out
        });
        Ok(Cochain { arg_space: a.arg_space.clone(), value_space: a.value_space.clone(), table })
    }
}

/// A cochain on a 3-Lie algebra with values in a representation space: a
/// multilinear map on `degree` wedge-pair slots and one vector slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    arg_space: SpaceId,
    value_space: SpaceId,
    table: CochainTable,
}

impl Cochain {
    pub fn new(arg_space: SpaceId, value_space: SpaceId, table: CochainTable) -> Self {
        Cochain { arg_space, value_space, table }
    }

    pub fn zero(rep: &Representation, degree: usize) -> Self {
        Cochain::new(
            rep.algebra.space().clone(),
            rep.space.clone(),
            CochainTable::zero(degree, rep.algebra.dim(), rep.dim()),
        )
    }

    /// Uniformly random integer coefficients in `lo..=hi`.
    pub fn random(rep: &Representation, degree: usize, lo: i64, hi: i64, rng: &mut impl rand::Rng) -> Self {
        Cochain::new(
            rep.algebra.space().clone(),
            rep.space.clone(),
            CochainTable::random(degree, rep.algebra.dim(), rep.dim(), lo, hi, rng),
        )
    }

    pub fn degree(&self) -> usize {
        self.table.degree()
    }

    pub fn table(&self) -> &CochainTable {
        &self.table
    }

    pub fn arg_space(&self) -> &SpaceId {
        &self.arg_space
    }

    pub fn value_space(&self) -> &SpaceId {
        &self.value_space
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }

    pub fn try_add(&self, other: &Cochain) -> Result<Cochain> {
        self.compatible(other)?;
        Ok(Cochain { table: self.table.try_add(&other.table)?, ..self.clone() })
    }

    pub fn scale(&self, s: &Scalar) -> Cochain {
        Cochain { table: self.table.scale(s), ..self.clone() }
    }

    fn compatible(&self, other: &Cochain) -> Result<()> {
        check_space(&self.arg_space, &other.arg_space)?;
        check_space(&self.value_space, &other.value_space)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn example1() -> ThreeLieAlgebra {
        ThreeLieAlgebra::simple4("g", "x")
    }

    fn one_dim_bad() -> Representation {
        let mut r = Representation::zero(example1(), "V", vec!["w1".into()]);
        r.set_rho(0, 1, LinearMap::identity(SpaceId::new("V"), 1)).unwrap();
        r
    }

    #[test]
    fn rep_defect_examples() {
        let g = example1();
        assert!(Representation::zero(g.clone(), "V", vec!["w1".into(), "w2".into()]).rep_defects().passed());
        assert!(Representation::adjoint(g).rep_defects().passed());
        let bad = one_dim_bad().rep_defects();
        assert!(!bad.passed());
    }

    #[test]
    fn semidirect_product_iff() {
        let g = example1();
        let ab = ThreeLieAlgebra::abelian_numbered("a", "e", 3);
        let sd = Representation::zero(ab, "V", vec!["w1".into(), "w2".into()]).semidirect_product();
        assert_eq!(sd.dim(), 5);
        assert_eq!(sd, ThreeLieAlgebra::abelian("a+V", sd.basis_names().to_vec()));
        let ad = Representation::adjoint(g);
        assert!(ad.rep_defects().passed());
        assert!(ad.semidirect_product().is_three_lie().passed());
        assert!(!one_dim_bad().semidirect_product().is_three_lie().passed());
    }

    #[test]
    fn semidirect_iff_on_random_reps() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = ThreeLieAlgebra::abelian_numbered("g", "x", 3);
        let g = ThreeLieAlgebra::from_fn("g", g.basis_names().to_vec(), |_, _, _| {
            vec![Scalar::one(), Scalar::zero(), Scalar::zero()]
        });
        for _ in 0..10 {
            let mut r = Representation::zero(g.clone(), "V", vec!["w1".into(), "w2".into()]);
            for (i, j) in pairs(3) {
                let cols = (0..2).map(|_| (0..2).map(|_| Scalar::from_int(rand::Rng::gen_range(&mut rng, -1..=1))).collect()).collect();
                r.set_rho(i, j, LinearMap::from_columns(SpaceId::new("V"), SpaceId::new("V"), 2, cols).unwrap()).unwrap();
            }
            assert_eq!(r.rep_defects().passed(), r.semidirect_product().is_three_lie().passed());
        }
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let rep = Representation::adjoint(example1());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for degree in 0..2 {
            let a = Cochain::random(&rep, degree, -3, 3, &mut rng);
            let da = rep.coboundary(&a).unwrap();
            assert_eq!(da.degree(), degree + 1);
            assert!(rep.coboundary(&da).unwrap().is_zero());
        }
    }

    #[test]
    fn coboundary_of_structure_cochain_vanishes() {
        let g = example1();
        let rep = Representation::adjoint(g.clone());
        let ps = pairs(4);
        let mu = CochainTable::from_fn(1, 4, 4, |s, z| g.basis_bracket(ps[s[0]].0, ps[s[0]].1, z));
        let mu = Cochain::new(g.space().clone(), g.space().clone(), mu);
        assert!(rep.coboundary(&mu).unwrap().is_zero());
        assert!(rep.coboundary(&Cochain::zero(&rep, 2)).unwrap().is_zero());
    }

    #[test]
    fn coboundary_is_linear() {
        let rep = Representation::adjoint(example1());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = Cochain::random(&rep, 1, -3, 3, &mut rng);
        let b = Cochain::random(&rep, 1, -3, 3, &mut rng);
        let s = Scalar::ratio(-2, 3).unwrap();
        let lhs = rep.coboundary(&a.try_add(&b.scale(&s)).unwrap()).unwrap();
        let rhs = rep.coboundary(&a).unwrap().try_add(&rep.coboundary(&b).unwrap().scale(&s)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coboundary_rejects_foreign_cochains() {
        let rep = Representation::adjoint(example1());
        let other = Cochain::new(SpaceId::new("h"), SpaceId::new("g"), CochainTable::zero(1, 4, 4));
        assert!(matches!(rep.coboundary(&other), Err(Error::SpaceMismatch { .. })));
    }
}
