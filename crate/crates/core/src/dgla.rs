//! The graded Lie algebra of cochains on a 3-Lie algebra, its differential,
//! Maurer-Cartan elements and gauge transformations, and the dictionary
//! between Maurer-Cartan elements and extension data.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::algebra::ThreeLieAlgebra;
use crate::cochain::{sparse_basis, sparse_from, wedge_basis_vec, wedge_vec_basis, CochainTable, Sparse};
use crate::error::{Error, Result};
use crate::extension::ExtensionDatum;
use crate::linalg::{axpy, zeros, LinearMap};
use crate::scalar::Scalar;
use crate::wedge::{canonical_pair, pairs, permutation_sign};

/// Largest total degree `p + q` supported by [`nr_compose`].
pub const MAX_COMPOSE_DEGREE: usize = 4;

/// The ambient algebra `g ⊕ h` with the direct-sum bracket `μ_g + μ_h`,
/// remembering the split (the basis lists `g` first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    g: ThreeLieAlgebra,
    h: ThreeLieAlgebra,
    sum: ThreeLieAlgebra,
}

impl Ambient {
    pub fn new(g: ThreeLieAlgebra, h: ThreeLieAlgebra) -> Arc<Self> {
        let sum = ExtensionDatum::zero(g.clone(), h.clone()).extension_bracket();
        Arc::new(Ambient { g, h, sum })
    }

    /// A single algebra, viewed as `A ⊕ 0`.
    pub fn single(a: ThreeLieAlgebra) -> Arc<Self> {
        let h = ThreeLieAlgebra::abelian(&format!("0({})", a.space()), Vec::new());
        let sum = a.clone();
        Arc::new(Ambient { g: a, h, sum })
    }

    pub fn g(&self) -> &ThreeLieAlgebra {
        &self.g
    }

    pub fn h(&self) -> &ThreeLieAlgebra {
        &self.h
    }

    pub fn algebra(&self) -> &ThreeLieAlgebra {
        &self.sum
    }

    pub fn dim(&self) -> usize {
        self.sum.dim()
    }

    fn in_h(&self, i: usize) -> bool {
        i >= self.g.dim()
    }
}

/// A cochain on the ambient algebra with values in the ambient algebra:
/// `degree` wedge-pair slots followed by one vector slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCochain {
    ambient: Arc<Ambient>,
    table: CochainTable,
}

/// A permutation of `0..n` increasing on its first `k` and last `n−k`
/// entries, with its sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unshuffle {
    pub split: (usize, usize),
    pub perm: Vec<usize>,
    pub sign: i32,
}

impl Unshuffle {
    /// All `(k, n−k)`-unshuffles, ordered by their first block.
    pub fn all(k: usize, n: usize) -> Vec<Unshuffle> {
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        let mut first: Vec<usize> = (0..k).collect();
        loop {
            let rest = (0..n).filter(|i| !first.contains(i));
            let perm: Vec<usize> = first.iter().copied().chain(rest).collect();
            let sign = permutation_sign(&perm);
            out.push(Unshuffle { split: (k, n - k), perm, sign });
            // next k-subset in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if first[i] < n - k + i {
                    first[i] += 1;
                    for j in i + 1..k {
                        first[j] = first[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

fn sign_of(e: usize) -> Scalar {
    if e.is_multiple_of(2) {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

impl GradedCochain {
    pub fn new(ambient: Arc<Ambient>, table: CochainTable) -> Result<Self> {
        let n = ambient.dim();
        if table.arg_dim() != n || table.value_dim() != n {
            return Err(Error::Shape("cochain table does not match the ambient dimension".into()));
        }
        Ok(GradedCochain { ambient, table })
    }

    pub fn zero(ambient: Arc<Ambient>, degree: usize) -> Self {
        let n = ambient.dim();
        GradedCochain { table: CochainTable::zero(degree, n, n), ambient }
    }

    /// The structure cochain `μ(x∧y, z) = [x, y, z]` of the ambient algebra.
    pub fn structure(ambient: Arc<Ambient>) -> Self {
        let n = ambient.dim();
        let ps = pairs(n);
        let table = CochainTable::from_fn(1, n, n, |s, z| ambient.sum.basis_bracket(ps[s[0]].0, ps[s[0]].1, z));
        GradedCochain { ambient, table }
    }

    /// Uniformly random integer coefficients in `lo..=hi`.
    pub fn random(ambient: Arc<Ambient>, degree: usize, lo: i64, hi: i64, rng: &mut impl Rng) -> Self {
        let n = ambient.dim();
        GradedCochain { table: CochainTable::random(degree, n, n, lo, hi, rng), ambient }
    }

    /// A random element of the restricted subcomplex: values in `h`, zero
    /// on arguments lying entirely in `h`.
    pub fn random_restricted(ambient: Arc<Ambient>, degree: usize, lo: i64, hi: i64, rng: &mut impl Rng) -> Self {
        let n = ambient.dim();
        let ps = pairs(n);
        let table = CochainTable::from_fn(degree, n, n, |slots, last| {
            let all_h = ambient.in_h(last) && slots.iter().all(|&p| ambient.in_h(ps[p].0));
            (0..n)
                .map(|i| {
                    if all_h || !ambient.in_h(i) {
                        Scalar::zero()
                    } else {
                        Scalar::from_int(rng.gen_range(lo..=hi))
                    }
                })
                .collect()
        });
        GradedCochain { table, ambient }
    }

    /// A degree-0 restricted cochain from a linear map `ξ: g → h`.
    pub fn from_map(ambient: Arc<Ambient>, xi: &LinearMap) -> Result<Self> {
        let (n, m) = (ambient.g.dim(), ambient.h.dim());
        if xi.domain_dim() != n || xi.codomain_dim() != m {
            return Err(Error::Shape("map does not send g to h".into()));
        }
        let table = CochainTable::from_fn(0, n + m, n + m, |_, x| {
            let mut v = zeros(n + m);
            if x < n {
                v[n..].clone_from_slice(xi.column(x));
            }
            v
        });
        Ok(GradedCochain { table, ambient })
    }

    /// The linear map `g → h` carried by a degree-0 restricted cochain.
    pub fn to_map(&self) -> Result<LinearMap> {
        if self.degree() != 0 {
            return Err(Error::Degree(format!("expected degree 0, found {}", self.degree())));
        }
        self.require_restricted()?;
        let (n, m) = (self.ambient.g.dim(), self.ambient.h.dim());
        let cols = (0..n).map(|x| self.table.get(&[], x)[n..].to_vec()).collect();
        LinearMap::from_columns(self.ambient.g.space().clone(), self.ambient.h.space().clone(), m, cols)
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn degree(&self) -> usize {
        self.table.degree()
    }

    pub fn table(&self) -> &CochainTable {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }

    fn same_ambient(&self, other: &GradedCochain) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::SpaceMismatch {
                expected: self.ambient.sum.space().to_string(),
                found: other.ambient.sum.space().to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &GradedCochain) -> Result<GradedCochain> {
        self.same_ambient(other)?;
        Ok(GradedCochain { table: self.table.try_add(&other.table)?, ambient: self.ambient.clone() })
    }

    pub fn try_sub(&self, other: &GradedCochain) -> Result<GradedCochain> {
        self.same_ambient(other)?;
        Ok(GradedCochain { table: self.table.try_sub(&other.table)?, ambient: self.ambient.clone() })
    }

    pub fn scale(&self, s: &Scalar) -> GradedCochain {
        GradedCochain { table: self.table.scale(s), ambient: self.ambient.clone() }
    }

    /// Values lie in `h`, and the cochain vanishes when every argument lies in `h`.
    pub fn is_restricted(&self) -> bool {
        self.restriction_violation().is_none()
    }

    fn restriction_violation(&self) -> Option<String> {
        let a = &self.ambient;
        let n = a.dim();
        let ps = pairs(n);
        let names = a.sum.basis_names();
        let mut found = None;
        crate::cochain::for_each_row(self.degree(), n, |slots, last| {
            if found.is_some() {
                return;
            }
            let v = self.table.get(slots, last);
            let mut args: Vec<String> =
                slots.iter().map(|&p| format!("{}^{}", names[ps[p].0], names[ps[p].1])).collect();
            args.push(names[last].clone());
            if v[..a.g.dim()].iter().any(|c| !c.is_zero()) {
                found = Some(format!("value at ({}) has a g-component", args.join(",")));
            } else if a.in_h(last) && slots.iter().all(|&p| a.in_h(ps[p].0)) && v.iter().any(|c| !c.is_zero()) {
                found = Some(format!("nonzero on h-arguments ({})", args.join(",")));
            }
        });
        found
    }

    fn require_restricted(&self) -> Result<()> {
        match self.restriction_violation() {
            None => Ok(()),
            Some(msg) => Err(Error::NotRestricted(msg)),
        }
    }
}

impl fmt::Display for GradedCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.ambient.dim();
        let ps = pairs(n);
        let names = self.ambient.sum.basis_names();
        let mut any = false;
        crate::cochain::for_each_row(self.degree(), n, |slots, last| {
            let v = self.table.get(slots, last);
            if v.iter().all(Scalar::is_zero) {
                return;
            }
            any = true;
            let mut args: Vec<String> =
                slots.iter().map(|&p| format!("{}^{}", names[ps[p].0], names[ps[p].1])).collect();
            args.push(names[last].clone());
            let terms: Vec<String> =
                v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format!("{c}*{}", names[i])).collect();
            let _ = writeln!(f, "({}) -> {}", args.join(","), terms.join(" + "));
        });
        if !any {
            f.write_str("0\n")?;
        }
        Ok(())
    }
}

/// The composition product `α∘β` of cochains of degrees `p` and `q`:
/// ```text
/// (α∘β)(X_1..X_{p+q}, x) =
///   Σ_{k<p} (−1)^{kq} Σ_{σ ∈ unsh(k,q)} sgn σ ·
///       [ α(X_σ(1..k), β(X_σ(k+1..k+q), x_{k+q+1}) ∧ y_{k+q+1}, X_{k+q+2..p+q}, x)
///       + α(X_σ(1..k), x_{k+q+1} ∧ β(X_σ(k+1..k+q), y_{k+q+1}), X_{k+q+2..p+q}, x) ]
///   + (−1)^{pq} Σ_{σ ∈ unsh(p,q)} sgn σ · α(X_σ(1..p), β(X_σ(p+1..p+q), x))
/// ```
/// where `X_i = x_i ∧ y_i`. Total degrees above [`MAX_COMPOSE_DEGREE`] are rejected.
pub fn nr_compose(a: &GradedCochain, b: &GradedCochain) -> Result<GradedCochain> {
    a.same_ambient(b)?;
    let (p, q) = (a.degree(), b.degree());
    if p + q > MAX_COMPOSE_DEGREE {
        return Err(Error::UnsupportedDegree(p + q));
    }
    let n = a.ambient.dim();
    let ps = pairs(n);
    let inner: Vec<(Scalar, Vec<Unshuffle>)> = (0..p).map(|k| (sign_of(k * q), Unshuffle::all(k, k + q))).collect();
    let outer = (sign_of(p * q), Unshuffle::all(p, p + q));
    let (at, bt) = (&a.table, &b.table);
    let table = CochainTable::from_fn(p + q, n, n, |slots, x| {
        let mut out = zeros(n);
        let basis_slots: Vec<Sparse> = slots.iter().map(|&s| sparse_basis(s)).collect();
        for (k, (sk, unsh)) in inner.iter().enumerate() {
            let j = k + q;
            let (xj, yj) = ps[slots[j]];
            for u in unsh {
                let coef = if u.sign > 0 { sk.clone() } else { -sk };
                let head: Vec<usize> = u.perm[..k].iter().map(|&i| slots[i]).collect();
                let bslots: Vec<usize> = u.perm[k..].iter().map(|&i| slots[i]).collect();
                let bx = bt.get(&bslots, xj);
                let by = bt.get(&bslots, yj);
                let mut args: Vec<Sparse> = head.iter().map(|&s| sparse_basis(s)).collect();
                args.push(wedge_vec_basis(n, bx, yj));
                args.extend(basis_slots[j + 1..].iter().cloned());
                axpy(&mut out, &coef, &at.eval(&args, &sparse_basis(x)));
                args[k] = wedge_basis_vec(n, xj, by);
                axpy(&mut out, &coef, &at.eval(&args, &sparse_basis(x)));
            }
        }
        let (so, unsh) = &outer;
        for u in unsh {
            let coef = if u.sign > 0 { so.clone() } else { -so };
            let aslots: Vec<usize> = u.perm[..p].iter().map(|&i| slots[i]).collect();
            let bslots: Vec<usize> = u.perm[p..].iter().map(|&i| slots[i]).collect();
            let bv = sparse_from(bt.get(&bslots, x));
            if bv.is_empty() {
                continue;
            }
            let args: Vec<Sparse> = aslots.iter().map(|&s| sparse_basis(s)).collect();
            axpy(&mut out, &coef, &at.eval(&args, &bv));
        }
        out
    });
    Ok(GradedCochain { table, ambient: a.ambient.clone() })
}

/// The graded commutator `⟦α, β⟧ = α∘β − (−1)^{pq} β∘α`.
pub fn nr_bracket(a: &GradedCochain, b: &GradedCochain) -> Result<GradedCochain> {
    let ab = nr_compose(a, b)?;
    let ba = nr_compose(b, a)?;
    if (a.degree() * b.degree()).is_multiple_of(2) {
        ab.try_sub(&ba)
    } else {
        ab.try_add(&ba)
    }
}

/// `δ̄c = ⟦μ, c⟧` with `μ` the structure cochain of the ambient algebra.
pub fn dgla_differential(c: &GradedCochain) -> Result<GradedCochain> {
    nr_bracket(&GradedCochain::structure(c.ambient.clone()), c)
}

/// The degree-1 cochain `μ_ext − μ_g − μ_h` of an extension datum.
pub fn datum_to_cochain(d: &ExtensionDatum) -> GradedCochain {
    let ambient = Ambient::new(d.g().clone(), d.h().clone());
    datum_to_cochain_in(&ambient, d).expect("ambient built from the datum")
}

/// As [`datum_to_cochain`], over a given ambient (which must be built
/// from the same `g` and `h`).
pub fn datum_to_cochain_in(ambient: &Arc<Ambient>, d: &ExtensionDatum) -> Result<GradedCochain> {
    if ambient.g != *d.g() || ambient.h != *d.h() {
        return Err(Error::Precondition("datum and ambient use different algebras".into()));
    }
    let n = ambient.dim();
    let ext = d.extension_bracket();
    let ps = pairs(n);
    let table = CochainTable::from_fn(1, n, n, |s, z| {
        let (a, b) = ps[s[0]];
        let mut v = ext.basis_bracket(a, b, z);
        for (t, c) in v.iter_mut().zip(ambient.sum.basis_bracket(a, b, z)) {
            *t -= c;
        }
        v
    });
    Ok(GradedCochain { table, ambient: ambient.clone() })
}

/// Reads `(ρ, ν, ω)` back from a restricted, fully skew degree-1 cochain:
/// `ρ(x_i,x_j)v = c(x_i∧x_j, v)`, `ν(x)(u,v) = c(u∧v, x)`, `ω(x,y,z) = c(x∧y, z)`.
pub fn cochain_to_datum(c: &GradedCochain) -> Result<ExtensionDatum> {
    if c.degree() != 1 {
        return Err(Error::Degree(format!("expected degree 1, found {}", c.degree())));
    }
    c.require_restricted()?;
    let a = &c.ambient;
    let n = a.dim();
    let t = &c.table;
    // the extension bracket is fully skew, so only such cochains come from data
    for (pi, &(i, j)) in pairs(n).iter().enumerate() {
        for k in 0..n {
            let (q, s) = match canonical_pair(n, i, k) {
                Some(x) => x,
                None => continue,
            };
            let swapped = t.get(&[q], j);
            let lhs = t.get(&[pi], k);
            let ok = lhs.iter().zip(swapped).all(|(x, y)| if s > 0 { x == &-y } else { x == y });
            if !ok {
                let names = a.sum.basis_names();
                return Err(Error::NotRestricted(format!(
                    "not skew in all three arguments at ({}^{},{})",
                    names[i], names[j], names[k]
                )));
            }
        }
    }
    let (gn, hn) = (a.g.dim(), a.h.dim());
    let mut d = ExtensionDatum::zero(a.g.clone(), a.h.clone());
    let h_part = |v: Vec<Scalar>| v[gn..].to_vec();
    for (i, j) in pairs(gn) {
        for k in 0..hn {
            d.set_rho(i, j, k, h_part(t.get_ordered(&[(i, j)], gn + k)))?;
        }
        for k in j + 1..gn {
            d.set_omega(i, j, k, h_part(t.get_ordered(&[(i, j)], k)))?;
        }
    }
    for x in 0..gn {
        for (u, v) in pairs(hn) {
            d.set_nu(x, u, v, h_part(t.get_ordered(&[(gn + u, gn + v)], x)))?;
        }
    }
    Ok(d)
}

/// `δ̄c + ½⟦c, c⟧`.
pub fn mc_defect(c: &GradedCochain) -> Result<GradedCochain> {
    if c.degree() != 1 {
        return Err(Error::Degree(format!("expected degree 1, found {}", c.degree())));
    }
    let half = Scalar::ratio(1, 2)?;
    dgla_differential(c)?.try_add(&nr_bracket(c, c)?.scale(&half))
}

/// The gauge action of a degree-0 restricted `ξ` on a degree-1 restricted `c`:
/// ```text
/// c' = c + ⟦ξ,c⟧ + ½⟦ξ,⟦ξ,c⟧⟧ − (δ̄ξ + ½⟦ξ,δ̄ξ⟧ + ⅙⟦ξ,⟦ξ,δ̄ξ⟧⟧)
/// ```
/// The exponential series stops there because `ad_ξ` is nilpotent on the
/// restricted subcomplex.
pub fn gauge_transform(xi: &GradedCochain, c: &GradedCochain) -> Result<GradedCochain> {
    if xi.degree() != 0 || c.degree() != 1 {
        return Err(Error::Degree(format!(
            "gauge action needs degrees (0, 1), found ({}, {})",
            xi.degree(),
            c.degree()
        )));
    }
    xi.same_ambient(c)?;
    xi.require_restricted()?;
    c.require_restricted()?;
    let half = Scalar::ratio(1, 2)?;
    let sixth = Scalar::ratio(1, 6)?;
    let xc = nr_bracket(xi, c)?;
    let xxc = nr_bracket(xi, &xc)?;
    let dxi = dgla_differential(xi)?;
    let xdxi = nr_bracket(xi, &dxi)?;
    let xxdxi = nr_bracket(xi, &xdxi)?;
    c.try_add(&xc)?
        .try_add(&xxc.scale(&half))?
        .try_sub(&dxi)?
        .try_sub(&xdxi.scale(&half))?
        .try_sub(&xxdxi.scale(&sixth))
}
