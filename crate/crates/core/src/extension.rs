//! Non-abelian extension data `(ρ, ν, ω)` of a 3-Lie algebra `g` by a
//! 3-Lie algebra `h`, the bracket they induce on `g ⊕ h`, the eleven
//! conditions making that bracket a 3-Lie algebra, and isomorphisms of
//! extensions.

use std::fmt;

use rand::Rng;

use crate::algebra::{is_morphism3, ThreeLieAlgebra, Verdict, Witness};
use crate::error::{Error, Result};
use crate::linalg::{axpy, check_space, is_zero_slice, zeros, LinearMap};
use crate::scalar::Scalar;
use crate::wedge::{canonical_pair, canonical_triple, for_each_tuple, pair_count, triple_count, triple_index};

/// Split extension data on `g ⊕ h`:
///
/// - `ρ: ∧²g → gl(h)`, stored on canonical `g`-pairs;
/// - `ν: g → Hom(∧²h, h)`, stored per `g`-basis index on canonical `h`-pairs;
/// - `ω: ∧³g → h`, stored on canonical `g`-triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionDatum {
    g: ThreeLieAlgebra,
    h: ThreeLieAlgebra,
    rho: Vec<Vec<Vec<Scalar>>>,
    nu: Vec<Vec<Vec<Scalar>>>,
    omega: Vec<Vec<Scalar>>,
}

/// Which summand of `g ⊕ h` an argument of an identity ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    G,
    H,
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

fn nonzero(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero())
}

/// Sums of `(sign, term)` pairs.
fn combine(terms: &[(i64, Vec<Scalar>)], dim: usize) -> Vec<Scalar> {
    let mut out = zeros(dim);
    for (s, t) in terms {
        axpy(&mut out, &Scalar::from_int(*s), t);
    }
    out
}

impl ExtensionDatum {
    /// The zero datum: `g ⊕ h` with the direct-sum bracket.
    pub fn zero(g: ThreeLieAlgebra, h: ThreeLieAlgebra) -> Self {
        let (n, m) = (g.dim(), h.dim());
        ExtensionDatum {
            rho: vec![vec![zeros(m); m]; pair_count(n)],
            nu: vec![vec![zeros(m); pair_count(m)]; n],
            omega: vec![zeros(m); triple_count(n)],
            g,
            h,
        }
    }

    /// A datum with every stored coefficient drawn uniformly from `lo..=hi`.
    pub fn random(g: ThreeLieAlgebra, h: ThreeLieAlgebra, lo: i64, hi: i64, rng: &mut impl Rng) -> Self {
        let mut d = ExtensionDatum::zero(g, h);
        let mut draw = |v: &mut Vec<Scalar>| {
            for c in v.iter_mut() {
                *c = Scalar::from_int(rng.gen_range(lo..=hi));
            }
        };
        d.rho.iter_mut().flatten().for_each(&mut draw);
        d.nu.iter_mut().flatten().for_each(&mut draw);
        d.omega.iter_mut().for_each(&mut draw);
        d
    }

    pub fn g(&self) -> &ThreeLieAlgebra {
        &self.g
    }

    pub fn h(&self) -> &ThreeLieAlgebra {
        &self.h
    }

    fn check_h_value(&self, value: &[Scalar]) -> Result<()> {
        if value.len() != self.h.dim() {
            return Err(Error::Shape(format!("{} coefficients for h of dim {}", value.len(), self.h.dim())));
        }
        Ok(())
    }

    fn check_index(&self, i: usize, dim: usize) -> Result<()> {
        if i >= dim {
            return Err(Error::Shape(format!("basis index {i} out of range for dim {dim}")));
        }
        Ok(())
    }

    /// Sets `ρ(x_i, x_j)(v_k)`; the pair may be given in either order.
    pub fn set_rho(&mut self, i: usize, j: usize, k: usize, value: Vec<Scalar>) -> Result<()> {
        let (n, m) = (self.g.dim(), self.h.dim());
        self.check_index(i.max(j), n)?;
        self.check_index(k, m)?;
        self.check_h_value(&value)?;
        let (p, s) = canonical_pair(n, i, j).ok_or_else(|| Error::Shape(format!("rho pair ({i},{i}) repeats")))?;
        self.rho[p][k] = if s > 0 { value } else { value.into_iter().map(|c| -c).collect() };
        Ok(())
    }

    /// Sets `ν(x_i)(v_a, v_b)`; the `h`-pair may be given in either order.
    pub fn set_nu(&mut self, i: usize, a: usize, b: usize, value: Vec<Scalar>) -> Result<()> {
        let (n, m) = (self.g.dim(), self.h.dim());
        self.check_index(i, n)?;
        self.check_index(a.max(b), m)?;
        self.check_h_value(&value)?;
        let (p, s) = canonical_pair(m, a, b).ok_or_else(|| Error::Shape(format!("nu pair ({a},{a}) repeats")))?;
        self.nu[i][p] = if s > 0 { value } else { value.into_iter().map(|c| -c).collect() };
        Ok(())
    }

    /// Sets `ω(x_i, x_j, x_k)`; any ordering of distinct indices is accepted.
    pub fn set_omega(&mut self, i: usize, j: usize, k: usize, value: Vec<Scalar>) -> Result<()> {
        let n = self.g.dim();
        self.check_index(i.max(j).max(k), n)?;
        self.check_h_value(&value)?;
        let ((a, b, c), s) =
            canonical_triple(i, j, k).ok_or_else(|| Error::Shape(format!("omega triple ({i},{j},{k}) repeats")))?;
        self.omega[triple_index(n, a, b, c)] = if s > 0 { value } else { value.into_iter().map(|c| -c).collect() };
        Ok(())
    }

    /// The same `ρ` and `ν` with `ω = 0`.
    pub fn without_omega(&self) -> Self {
        ExtensionDatum { omega: vec![zeros(self.h.dim()); self.omega.len()], ..self.clone() }
    }

    /// `ρ(x, y) v` on coefficient vectors.
    pub fn rho_apply(&self, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.g.dim();
        let mut out = zeros(self.h.dim());
        for (i, a) in nonzero(x) {
            for (j, b) in nonzero(y) {
                if let Some((p, s)) = canonical_pair(n, i, j) {
                    let ab = if s > 0 { a * b } else { -(a * b) };
                    for (k, c) in nonzero(v) {
                        axpy(&mut out, &(&ab * c), &self.rho[p][k]);
                    }
                }
            }
        }
        out
    }

    /// `ν(x)(u, v)` on coefficient vectors.
    pub fn nu_apply(&self, x: &[Scalar], u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let m = self.h.dim();
        let mut out = zeros(m);
        for (i, a) in nonzero(x) {
            for (k, b) in nonzero(u) {
                for (l, c) in nonzero(v) {
                    if let Some((p, s)) = canonical_pair(m, k, l) {
                        let coef = a * b * c;
                        axpy(&mut out, &if s > 0 { coef } else { -coef }, &self.nu[i][p]);
                    }
                }
            }
        }
        out
    }

    /// `ω(x, y, z)` on coefficient vectors.
    pub fn omega_apply(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let n = self.g.dim();
        let mut out = zeros(self.h.dim());
        for (i, a) in nonzero(x) {
            for (j, b) in nonzero(y) {
                for (k, c) in nonzero(z) {
                    if let Some(((p, q, r), s)) = canonical_triple(i, j, k) {
                        let coef = a * b * c;
                        axpy(&mut out, &if s > 0 { coef } else { -coef }, &self.omega[triple_index(n, p, q, r)]);
                    }
                }
            }
        }
        out
    }

    /// Splits a basis index of `g ⊕ h` into its `g` and `h` components.
    fn split(&self, i: usize) -> (Vec<Scalar>, Vec<Scalar>) {
        let (n, m) = (self.g.dim(), self.h.dim());
        if i < n {
            (unit(n, i), zeros(m))
        } else {
            (zeros(n), unit(m, i - n))
        }
    }

    /// The bracket on `g ⊕ h` (with `g` first in the basis):
    /// ```text
    /// [x1+v1, x2+v2, x3+v3] = [x1,x2,x3]_g + ω(x1,x2,x3)
    ///     + ρ(x1,x2)v3 + ρ(x2,x3)v1 + ρ(x3,x1)v2
    ///     + ν(x1)(v2,v3) + ν(x2)(v3,v1) + ν(x3)(v1,v2) + [v1,v2,v3]_h
    /// ```
    pub fn extension_bracket(&self) -> ThreeLieAlgebra {
        let basis = self.g.basis_names().iter().chain(self.h.basis_names()).cloned().collect();
        let space = self.g.space().direct_sum(self.h.space());
        ThreeLieAlgebra::from_fn(space.as_str(), basis, |i, j, k| {
            let (x1, v1) = self.split(i);
            let (x2, v2) = self.split(j);
            let (x3, v3) = self.split(k);
            let mut out = self.g.bracket_coeffs(&x1, &x2, &x3);
            let fiber = combine(
                &[
                    (1, self.omega_apply(&x1, &x2, &x3)),
                    (1, self.rho_apply(&x1, &x2, &v3)),
                    (1, self.rho_apply(&x2, &x3, &v1)),
                    (1, self.rho_apply(&x3, &x1, &v2)),
                    (1, self.nu_apply(&x1, &v2, &v3)),
                    (1, self.nu_apply(&x2, &v3, &v1)),
                    (1, self.nu_apply(&x3, &v1, &v2)),
                    (1, self.h.bracket_coeffs(&v1, &v2, &v3)),
                ],
                self.h.dim(),
            );
            out.extend(fiber);
            out
        })
    }

    /// Scans an `h`-valued identity over every basis tuple whose arguments
    /// range over the given summands.
    fn scan(&self, sides: &[Side], f: impl Fn(&[Vec<Scalar>]) -> Vec<Scalar>) -> Verdict {
        let (n, m) = (self.g.dim(), self.h.dim());
        let dims: Vec<usize> = sides.iter().map(|s| if *s == Side::G { n } else { m }).collect();
        let mut verdict = Verdict::Pass;
        let total: usize = dims.iter().product();
        if total == 0 {
            return verdict;
        }
        // a mixed-radix tuple over the per-argument dimensions, in lexicographic order
        let max = *dims.iter().max().unwrap_or(&0);
        for_each_tuple(max, sides.len(), |t| {
            if verdict != Verdict::Pass || t.iter().zip(&dims).any(|(i, d)| i >= d) {
                return;
            }
            let args: Vec<Vec<Scalar>> = t.iter().zip(&dims).map(|(&i, &d)| unit(d, i)).collect();
            let d = f(&args);
            if !is_zero_slice(&d) {
                let names = t
                    .iter()
                    .zip(sides)
                    .map(|(&i, s)| match s {
                        Side::G => self.g.basis_names()[i].clone(),
                        Side::H => self.h.basis_names()[i].clone(),
                    })
                    .collect();
                verdict = Verdict::Fail(Witness::with_names(t, names, d));
            }
        });
        verdict
    }

    /// Evaluates the eleven conditions under which the extension bracket
    /// satisfies the Fundamental Identity, together with the Fundamental
    /// Identity of `g` and of `h` themselves.
    ///
    /// Condition `k` is the `h`-component of the Fundamental Identity on
    /// arguments `(a1, a2, a3, a4, a5)` with a fixed pattern of `g`- and
    /// `h`-arguments; the patterns, listed with `x` for `g` and `v` for `h`,
    /// are `xxxxx, xxxxv, xvxxx, xxxvv, xvxxv, vvxxx, xxvvv, xvxvv, vvxxv,
    /// xvvvv, vvxvv`. Every other pattern is one of these up to the skew
    /// symmetry of the identity.
    pub fn extension_defects(&self) -> ExtensionVerdict {
        use Side::{G, H};
        let m = self.h.dim();
        let gb = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| self.g.bracket_coeffs(x, y, z);
        let hb = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| self.h.bracket_coeffs(x, y, z);
        let r = |x: &[Scalar], y: &[Scalar], v: &[Scalar]| self.rho_apply(x, y, v);
        let nu = |x: &[Scalar], u: &[Scalar], v: &[Scalar]| self.nu_apply(x, u, v);
        let w = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| self.omega_apply(x, y, z);
        let c = |terms: &[(i64, Vec<Scalar>)]| combine(terms, m);

        let equations = [
            self.scan(&[G, G, G, G, G], |a| {
                let (x1, x2, x3, x4, x5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                c(&[
                    (1, w(x1, x2, &gb(x3, x4, x5))),
                    (1, r(x1, x2, &w(x3, x4, x5))),
                    (-1, w(&gb(x1, x2, x3), x4, x5)),
                    (-1, r(x4, x5, &w(x1, x2, x3))),
                    (-1, w(x3, &gb(x1, x2, x4), x5)),
                    (1, r(x3, x5, &w(x1, x2, x4))),
                    (-1, w(x3, x4, &gb(x1, x2, x5))),
                    (-1, r(x3, x4, &w(x1, x2, x5))),
                ])
            }),
            self.scan(&[G, G, G, G, H], |a| {
                let (x1, x2, x3, x4, v5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                c(&[
                    (1, r(x1, x2, &r(x3, x4, v5))),
                    (-1, r(&gb(x1, x2, x3), x4, v5)),
                    (1, nu(x4, &w(x1, x2, x3), v5)),
                    (-1, r(x3, &gb(x1, x2, x4), v5)),
                    (-1, nu(x3, &w(x1, x2, x4), v5)),
                    (-1, r(x3, x4, &r(x1, x2, v5))),
                ])
            }),
            self.scan(&[G, H, G, G, G], |a| {
                let (x1, v2, x3, x4, x5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                c(&[
                    (-1, r(x1, &gb(x3, x4, x5), v2)),
                    (1, nu(x1, v2, &w(x3, x4, x5))),
                    (1, r(x4, x5, &r(x1, x3, v2))),
                    (-1, r(x3, x5, &r(x1, x4, v2))),
                    (1, r(x3, x4, &r(x1, x5, v2))),
                ])
            }),
            self.scan(&[G, G, G, H, H], |a| {
                let (x1, x2, x3, v4, v5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                c(&[
                    (1, r(x1, x2, &nu(x3, v4, v5))),
                    (-1, nu(&gb(x1, x2, x3), v4, v5)),
                    (-1, hb(&w(x1, x2, x3), v4, v5)),
                    (-1, nu(x3, &r(x1, x2, v4), v5)),
                    (-1, nu(x3, v4, &r(x1, x2, v5))),
                ])
            }),
            self.scan(&[G, H, G, G, H], |a| {
                let (x1, v2, x3, x4, v5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                c(&[
                    (1, nu(x1, v2, &r(x3, x4, v5))),
                    (-1, nu(x4, &r(x1, x3, v2), v5)),
                    (1, nu(x3, &r(x1, x4, v2), v5)),
                    (-1, r(x3, x4, &nu(x1, v2, v5))),
                ])
            }),
            self.scan(&[H, H, G, G, G], |a| {
                let (v1, v2, x3, x4, x5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                c(&[
                    (1, nu(&gb(x3, x4, x5), v1, v2)),
                    (1, hb(v1, v2, &w(x3, x4, x5))),
                    (-1, r(x4, x5, &nu(x3, v1, v2))),
                    (1, r(x3, x5, &nu(x4, v1, v2))),
                    (-1, r(x3, x4, &nu(x5, v1, v2))),
                ])
            }),
            self.scan(&[G, G, H, H, H], |a| {
                let (x1, x2, v3, v4, v5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                c(&[
                    (1, r(x1, x2, &hb(v3, v4, v5))),
                    (-1, hb(&r(x1, x2, v3), v4, v5)),
                    (-1, hb(v3, &r(x1, x2, v4), v5)),
                    (-1, hb(v3, v4, &r(x1, x2, v5))),
                ])
            }),
            self.scan(&[G, H, G, H, H], |a| {
                let (x1, v2, x3, v4, v5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                c(&[
                    (1, nu(x1, v2, &nu(x3, v4, v5))),
                    (1, hb(&r(x1, x3, v2), v4, v5)),
                    (-1, nu(x3, &nu(x1, v2, v4), v5)),
                    (-1, nu(x3, v4, &nu(x1, v2, v5))),
                ])
            }),
            self.scan(&[H, H, G, G, H], |a| {
                let (v1, v2, x3, x4, v5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                c(&[
                    (1, hb(v1, v2, &r(x3, x4, v5))),
                    (1, nu(x4, &nu(x3, v1, v2), v5)),
                    (-1, nu(x3, &nu(x4, v1, v2), v5)),
                    (-1, r(x3, x4, &hb(v1, v2, v5))),
                ])
            }),
            self.scan(&[G, H, H, H, H], |a| {
                let (x1, v2, v3, v4, v5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                c(&[
                    (1, nu(x1, v2, &hb(v3, v4, v5))),
                    (-1, hb(&nu(x1, v2, v3), v4, v5)),
                    (-1, hb(v3, &nu(x1, v2, v4), v5)),
                    (-1, hb(v3, v4, &nu(x1, v2, v5))),
                ])
            }),
            self.scan(&[H, H, G, H, H], |a| {
                let (v1, v2, x3, v4, v5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                c(&[
                    (1, hb(v1, v2, &nu(x3, v4, v5))),
                    (-1, hb(&nu(x3, v1, v2), v4, v5)),
                    (-1, nu(x3, &hb(v1, v2, v4), v5)),
                    (-1, nu(x3, v4, &hb(v1, v2, v5))),
                ])
            }),
        ];
        ExtensionVerdict { g: self.g.is_three_lie(), h: self.h.is_three_lie(), equations }
    }

    fn same_base(&self, other: &ExtensionDatum) -> Result<()> {
        if self.g != other.g || self.h != other.h {
            return Err(Error::Precondition("extension data over different algebras".into()));
        }
        Ok(())
    }
}

/// Per-condition outcome of [`ExtensionDatum::extension_defects`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionVerdict {
    /// Fundamental Identity of `g`.
    pub g: Verdict,
    /// Fundamental Identity of `h`.
    pub h: Verdict,
    /// The eleven mixed conditions, in order `p1..p11`.
    pub equations: [Verdict; 11],
}

impl ExtensionVerdict {
    pub fn passed(&self) -> bool {
        self.g.passed() && self.h.passed() && self.equations.iter().all(Verdict::passed)
    }

    /// `(label, verdict)` for every condition, in reporting order.
    pub fn labelled(&self) -> Vec<(String, &Verdict)> {
        let mut out = vec![("g".to_string(), &self.g), ("h".to_string(), &self.h)];
        out.extend(self.equations.iter().enumerate().map(|(i, v)| (format!("p{}", i + 1), v)));
        out
    }

    /// Labels of the failing conditions.
    pub fn failing(&self) -> Vec<String> {
        self.labelled().into_iter().filter(|(_, v)| !v.passed()).map(|(l, _)| l).collect()
    }
}

impl fmt::Display for ExtensionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (label, v)) in self.labelled().into_iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{label}: {v}")?;
        }
        Ok(())
    }
}

/// Outcome of the three isomorphism conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoVerdict {
    pub nu: Verdict,
    pub rho: Verdict,
    pub omega: Verdict,
}

impl IsoVerdict {
    pub fn passed(&self) -> bool {
        self.nu.passed() && self.rho.passed() && self.omega.passed()
    }
}

impl fmt::Display for IsoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "iso1: {}; iso2: {}; iso3: {}", self.nu, self.rho, self.omega)
    }
}

fn check_xi(xi: &LinearMap, d: &ExtensionDatum) -> Result<()> {
    check_space(d.g.space(), xi.domain())?;
    check_space(d.h.space(), xi.codomain())?;
    if xi.domain_dim() != d.g.dim() || xi.codomain_dim() != d.h.dim() {
        return Err(Error::Shape("xi does not map g to h".into()));
    }
    Ok(())
}

/// Checks that `ξ: g → h` relates `d1` and `d2` (with `d2` on the left of
/// each difference):
/// ```text
/// ν²(x1)(v2,v3) − ν¹(x1)(v2,v3) = −[ξx1,v2,v3]_h
/// ρ²(x1,x2)v3 − ρ¹(x1,x2)v3 = −ν¹(x1)(ξx2,v3) − ν¹(x2)(v3,ξx1) + [ξx1,ξx2,v3]_h
/// ω²(x1,x2,x3) − ω¹(x1,x2,x3) = −ρ¹(x1,x2)ξx3 − ρ¹(x2,x3)ξx1 − ρ¹(x3,x1)ξx2
///     + ν¹(x1)(ξx2,ξx3) + ν¹(x2)(ξx3,ξx1) + ν¹(x3)(ξx1,ξx2)
///     − [ξx1,ξx2,ξx3]_h + ξ[x1,x2,x3]_g
/// ```
pub fn is_extension_isomorphism(xi: &LinearMap, d1: &ExtensionDatum, d2: &ExtensionDatum) -> Result<IsoVerdict> {
    use Side::{G, H};
    d1.same_base(d2)?;
    check_xi(xi, d1)?;
    let m = d1.h.dim();
    let hb = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| d1.h.bracket_coeffs(x, y, z);
    let c = |terms: &[(i64, Vec<Scalar>)]| combine(terms, m);
    let x = |v: &[Scalar]| xi.apply_coeffs(v);
    let nu = d1.scan(&[G, H, H], |a| {
        let (x1, v2, v3) = (&a[0], &a[1], &a[2]);
        c(&[(1, d2.nu_apply(x1, v2, v3)), (-1, d1.nu_apply(x1, v2, v3)), (1, hb(&x(x1), v2, v3))])
    });
    let rho = d1.scan(&[G, G, H], |a| {
        let (x1, x2, v3) = (&a[0], &a[1], &a[2]);
        c(&[
            (1, d2.rho_apply(x1, x2, v3)),
            (-1, d1.rho_apply(x1, x2, v3)),
            (1, d1.nu_apply(x1, &x(x2), v3)),
            (1, d1.nu_apply(x2, v3, &x(x1))),
            (-1, hb(&x(x1), &x(x2), v3)),
        ])
    });
    let omega = d1.scan(&[G, G, G], |a| {
        let (x1, x2, x3) = (&a[0], &a[1], &a[2]);
        let (y1, y2, y3) = (x(x1), x(x2), x(x3));
        c(&[
            (1, d2.omega_apply(x1, x2, x3)),
            (-1, d1.omega_apply(x1, x2, x3)),
            (1, d1.rho_apply(x1, x2, &y3)),
            (1, d1.rho_apply(x2, x3, &y1)),
            (1, d1.rho_apply(x3, x1, &y2)),
            (-1, d1.nu_apply(x1, &y2, &y3)),
            (-1, d1.nu_apply(x2, &y3, &y1)),
            (-1, d1.nu_apply(x3, &y1, &y2)),
            (1, hb(&y1, &y2, &y3)),
            (-1, x(&d1.g.bracket_coeffs(x1, x2, x3))),
        ])
    });
    Ok(IsoVerdict { nu, rho, omega })
}

/// The map `θ(x + u) = x − ξ(x) + u` on `g ⊕ h`.
pub fn theta(xi: &LinearMap, d: &ExtensionDatum) -> Result<LinearMap> {
    check_xi(xi, d)?;
    let (n, m) = (d.g.dim(), d.h.dim());
    let space = d.g.space().direct_sum(d.h.space());
    let cols = (0..n + m)
        .map(|j| {
            let mut col = zeros(n + m);
            col[j] = Scalar::one();
            if j < n {
                for (a, c) in xi.column(j).iter().enumerate() {
                    col[n + a] -= c;
                }
            }
            col
        })
        .collect();
    LinearMap::from_columns(space.clone(), space, n + m, cols)
}

/// Checks that `θ` is a 3-Lie morphism from the extension bracket of `d2`
/// to that of `d1`; equivalent to [`is_extension_isomorphism`].
pub fn theta_morphism_check(xi: &LinearMap, d1: &ExtensionDatum, d2: &ExtensionDatum) -> Result<Verdict> {
    d1.same_base(d2)?;
    let t = theta(xi, d1)?;
    is_morphism3(&t, &d2.extension_bracket(), &d1.extension_bracket())
}

/// The canonical projection `g ⊕ h → g`.
pub fn projection(d: &ExtensionDatum) -> LinearMap {
    let (n, m) = (d.g.dim(), d.h.dim());
    let cols = (0..n + m).map(|j| if j < n { unit(n, j) } else { zeros(n) }).collect();
    LinearMap::from_columns(d.g.space().direct_sum(d.h.space()), d.g.space().clone(), n, cols).expect("shape")
}

/// The canonical inclusion `h → g ⊕ h`.
pub fn inclusion(d: &ExtensionDatum) -> LinearMap {
    let (n, m) = (d.g.dim(), d.h.dim());
    let cols = (0..m).map(|j| unit(n + m, n + j)).collect();
    LinearMap::from_columns(d.h.space().clone(), d.g.space().direct_sum(d.h.space()), n + m, cols).expect("shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn vec_of(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&c| s(c)).collect()
    }

    fn h3() -> ThreeLieAlgebra {
        ThreeLieAlgebra::abelian_numbered("h", "v", 3)
    }

    /// The 3-dim algebra `[e1,e2,e3] = e1`.
    fn small(space: &str, prefix: &str) -> ThreeLieAlgebra {
        let basis = (1..=3).map(|i| format!("{prefix}{i}")).collect();
        ThreeLieAlgebra::from_fn(space, basis, |_, _, _| vec_of(&[1, 0, 0]))
    }

    /// ρ = 0, ν(x_i)(v2,v3) = r_i v1, ω(x1,x2,x3) = −r1 v1.
    fn nu_family(r: [i64; 3], with_omega: bool) -> ExtensionDatum {
        let mut d = ExtensionDatum::zero(small("g", "x"), small("h", "v"));
        for (i, ri) in r.iter().enumerate() {
            d.set_nu(i, 1, 2, vec_of(&[*ri, 0, 0])).unwrap();
        }
        if with_omega {
            d.set_omega(0, 1, 2, vec_of(&[-r[0], 0, 0])).unwrap();
        }
        d
    }

    #[test]
    fn zero_datum_is_direct_sum() {
        let g = ThreeLieAlgebra::simple4("g", "x");
        let d = ExtensionDatum::zero(g.clone(), h3());
        let e = d.extension_bracket();
        assert_eq!(e.basis_bracket(0, 1, 2), vec_of(&[0, 0, 0, 1, 0, 0, 0]));
        assert_eq!(e.basis_bracket(0, 4, 5), vec_of(&[0; 7]));
        assert!(d.extension_defects().passed());
        assert!(e.is_three_lie().passed());
    }

    #[test]
    fn bracket_entries() {
        let mut d = ExtensionDatum::zero(ThreeLieAlgebra::simple4("g", "x"), h3());
        d.set_nu(0, 0, 1, vec_of(&[1, 0, 0])).unwrap();
        d.set_omega(1, 2, 3, vec_of(&[-1, 1, -1])).unwrap();
        let e = d.extension_bracket();
        // [x1, v1, v2] = ν(x1)(v1,v2)
        assert_eq!(e.basis_bracket(0, 4, 5), vec_of(&[0, 0, 0, 0, 1, 0, 0]));
        // [x2, x3, x4] = x1 + ω(x2,x3,x4)
        assert_eq!(e.basis_bracket(1, 2, 3), vec_of(&[1, 0, 0, 0, -1, 1, -1]));
        // reversed orders absorb signs
        assert_eq!(e.basis_bracket(5, 4, 0), vec_of(&[0, 0, 0, 0, -1, 0, 0]));
    }

    #[test]
    fn certified_family_passes_and_loses_omega() {
        let d = nu_family([1, 2, 3], true);
        let v = d.extension_defects();
        assert!(v.passed(), "{v}");
        assert!(d.extension_bracket().is_three_lie().passed());
        let broken = nu_family([1, 2, 3], false);
        let v = broken.extension_defects();
        assert!(!v.passed());
        assert!(!broken.extension_bracket().is_three_lie().passed());
        assert!(v.g.passed() && v.h.passed());
    }

    #[test]
    fn defects_agree_with_fundamental_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = small("g", "x");
        let h = ThreeLieAlgebra::from_fn("h", h3().basis_names().to_vec(), |_, _, _| vec_of(&[0, 0, 1]));
        let mut passes = 0;
        for trial in 0..40 {
            let d = if trial % 2 == 0 {
                ExtensionDatum::random(g.clone(), h.clone(), -1, 1, &mut rng)
            } else {
                // sparse data pass far more often
                let mut d = ExtensionDatum::zero(g.clone(), h.clone());
                let i = rng.gen_range(0..3);
                d.set_nu(i, 0, 1, vec_of(&[0, 0, rng.gen_range(-1..=1)])).unwrap();
                d
            };
            let ext = d.extension_defects().passed();
            assert_eq!(ext, d.extension_bracket().is_three_lie().passed(), "{d:?}");
            passes += ext as usize;
        }
        assert!(passes > 0);
    }

    #[test]
    fn isomorphism_basics() {
        let d = nu_family([1, 2, 3], true);
        let g = d.g().clone();
        let xi0 = LinearMap::zero(g.space().clone(), 3, d.h().space().clone(), 3);
        assert!(is_extension_isomorphism(&xi0, &d, &d).unwrap().passed());
        assert!(theta_morphism_check(&xi0, &d, &d).unwrap().passed());
        let other = d.without_omega();
        let v = is_extension_isomorphism(&xi0, &d, &other).unwrap();
        assert!(v.nu.passed() && v.rho.passed() && !v.omega.passed());
        assert!(!theta_morphism_check(&xi0, &d, &other).unwrap().passed());
    }

    #[test]
    fn projection_and_inclusion_are_morphisms() {
        let d = nu_family([2, -1, 3], true);
        let e = d.extension_bracket();
        assert!(is_morphism3(&projection(&d), &e, d.g()).unwrap().passed());
        assert!(is_morphism3(&inclusion(&d), d.h(), &e).unwrap().passed());
    }

    #[test]
    fn rejects_mismatched_data() {
        let d1 = nu_family([1, 2, 3], true);
        let d2 = ExtensionDatum::zero(ThreeLieAlgebra::abelian_numbered("g", "x", 3), small("h", "v"));
        let xi = LinearMap::zero(d1.g().space().clone(), 3, d1.h().space().clone(), 3);
        assert!(is_extension_isomorphism(&xi, &d1, &d2).is_err());
        let wrong = LinearMap::zero(d1.h().space().clone(), 3, d1.h().space().clone(), 3);
        assert!(is_extension_isomorphism(&wrong, &d1, &d1).is_err());
    }

    #[test]
    fn setters_absorb_signs() {
        let mut d = ExtensionDatum::zero(ThreeLieAlgebra::simple4("g", "x"), h3());
        d.set_rho(1, 0, 2, vec_of(&[1, 2, 3])).unwrap();
        assert_eq!(d.rho_apply(&unit(4, 0), &unit(4, 1), &unit(3, 2)), vec_of(&[-1, -2, -3]));
        d.set_nu(0, 2, 1, vec_of(&[1, 0, 0])).unwrap();
        assert_eq!(d.nu_apply(&unit(4, 0), &unit(3, 1), &unit(3, 2)), vec_of(&[-1, 0, 0]));
        d.set_omega(2, 1, 0, vec_of(&[0, 1, 0])).unwrap();
        assert_eq!(d.omega_apply(&unit(4, 0), &unit(4, 1), &unit(4, 2)), vec_of(&[0, -1, 0]));
        assert!(d.set_omega(0, 0, 1, vec_of(&[0, 0, 0])).is_err());
        assert!(d.set_rho(0, 1, 3, vec_of(&[0, 0, 0])).is_err());
    }
}
