//! The Leibniz algebra of fundamental objects of an extension `g ⊕ h`,
//! presented as an extension of `∧²g` by `W = ∧²h ⊕ (g⊗h)`.
//!
//! Everything here is built from `(ρ, ν, ω)` directly; the master check
//! [`fundamental_oracle_check`] compares the result with the fundamental
//! algebra of the extension bracket itself, transported along the basis
//! identification `∧²(g⊕h) ≅ W ⊕ ∧²g` that sends `x∧u` (with `x ∈ g`,
//! `u ∈ h`) to `x⊗u` with sign `+1`.

use std::fmt;

use crate::algebra::{LeibnizAlgebra, Verdict, Witness};
use crate::error::{Error, Result};
use crate::extension::ExtensionDatum;
use crate::linalg::{axpy, is_zero_slice, sub_slices, zeros, LinearMap, SpaceId};
use crate::scalar::Scalar;
use crate::wedge::{canonical_pair, pair_count, pair_index, pairs};

/// The basis of `W = ∧²h ⊕ (g⊗h)`: canonical `h`-pairs first
/// (lexicographic), then `x_i⊗v_a` (lexicographic in `(i, a)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WSpace {
    pub g_dim: usize,
    pub h_dim: usize,
}

impl WSpace {
    pub fn dim(&self) -> usize {
        pair_count(self.h_dim) + self.g_dim * self.h_dim
    }

    /// Index of `x_i ⊗ v_a`.
    pub fn tensor_index(&self, i: usize, a: usize) -> usize {
        pair_count(self.h_dim) + i * self.h_dim + a
    }

    pub fn basis_names(&self, d: &ExtensionDatum) -> Vec<String> {
        let (gn, hn) = (d.g().basis_names(), d.h().basis_names());
        let mut out: Vec<String> = pairs(self.h_dim).into_iter().map(|(a, b)| format!("{}^{}", hn[a], hn[b])).collect();
        for x in gn {
            for v in hn {
                out.push(format!("{x}(x){v}"));
            }
        }
        out
    }

    /// `acc += coef · (u ∧ v)` for `u, v ∈ h`.
    fn add_wedge(&self, acc: &mut [Scalar], coef: &Scalar, u: &[Scalar], v: &[Scalar]) {
        for (a, cu) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, cv) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if let Some((p, s)) = canonical_pair(self.h_dim, a, b) {
                    let t = coef * cu * cv;
                    if s > 0 {
                        acc[p] += t;
                    } else {
                        acc[p] -= t;
                    }
                }
            }
        }
    }

    /// `acc += coef · (x ⊗ w)` for `x ∈ g`, `w ∈ h`.
    fn add_tensor(&self, acc: &mut [Scalar], coef: &Scalar, x: &[Scalar], w: &[Scalar]) {
        for (i, cx) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (a, cw) in w.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                acc[self.tensor_index(i, a)] += coef * cx * cw;
            }
        }
    }

    /// A basis element of `W` as either `(u, v)` for `u∧v` or `(x, w)` for `x⊗w`.
    fn element(&self, k: usize) -> WElement {
        let np = pair_count(self.h_dim);
        if k < np {
            let (a, b) = pairs(self.h_dim)[k];
            WElement::Wedge(unit(self.h_dim, a), unit(self.h_dim, b))
        } else {
            let t = k - np;
            WElement::Tensor(unit(self.g_dim, t / self.h_dim), unit(self.h_dim, t % self.h_dim))
        }
    }
}

enum WElement {
    Wedge(Vec<Scalar>, Vec<Scalar>),
    Tensor(Vec<Scalar>, Vec<Scalar>),
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

fn require_certified(d: &ExtensionDatum) -> Result<()> {
    let v = d.extension_defects();
    if v.passed() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "extension datum fails condition(s) {}",
            v.failing().join(",")
        )))
    }
}

/// The bracket `{·,·}` on `W`:
/// ```text
/// {u1∧v1 + x1⊗w1, u2∧v2 + x2⊗w2}
///   = [u1,v1,u2]∧v2 + u2∧[u1,v1,v2] + ν(x2)(u1,v1)∧w2 + x2⊗[u1,v1,w2]
///   + ν(x1)(w1,u2)∧v2 + u2∧ν(x1)(w1,v2) − ρ(x1,x2)(w1)∧w2 + x2⊗ν(x1)(w1,w2)
/// ```
/// Requires `d` to pass [`ExtensionDatum::extension_defects`].
pub fn w_bracket(d: &ExtensionDatum) -> Result<LeibnizAlgebra> {
    require_certified(d)?;
    Ok(w_bracket_unchecked(d))
}

fn w_space_id(d: &ExtensionDatum) -> String {
    format!("W({},{})", d.g().space(), d.h().space())
}

fn w_bracket_unchecked(d: &ExtensionDatum) -> LeibnizAlgebra {
    let w = WSpace { g_dim: d.g().dim(), h_dim: d.h().dim() };
    let h = d.h();
    let one = Scalar::one();
    let mut out = LeibnizAlgebra::abelian(&w_space_id(d), w.basis_names(d));
    for i in 0..w.dim() {
        for j in 0..w.dim() {
            let mut acc = zeros(w.dim());
            match (w.element(i), w.element(j)) {
                (WElement::Wedge(u1, v1), WElement::Wedge(u2, v2)) => {
                    w.add_wedge(&mut acc, &one, &h.bracket_coeffs(&u1, &v1, &u2), &v2);
                    w.add_wedge(&mut acc, &one, &u2, &h.bracket_coeffs(&u1, &v1, &v2));
                }
                (WElement::Wedge(u1, v1), WElement::Tensor(x2, w2)) => {
                    w.add_wedge(&mut acc, &one, &d.nu_apply(&x2, &u1, &v1), &w2);
                    w.add_tensor(&mut acc, &one, &x2, &h.bracket_coeffs(&u1, &v1, &w2));
                }
                (WElement::Tensor(x1, w1), WElement::Wedge(u2, v2)) => {
                    w.add_wedge(&mut acc, &one, &d.nu_apply(&x1, &w1, &u2), &v2);
                    w.add_wedge(&mut acc, &one, &u2, &d.nu_apply(&x1, &w1, &v2));
                }
                (WElement::Tensor(x1, w1), WElement::Tensor(x2, w2)) => {
                    w.add_wedge(&mut acc, &-&one, &d.rho_apply(&x1, &x2, &w1), &w2);
                    w.add_tensor(&mut acc, &one, &x2, &d.nu_apply(&x1, &w1, &w2));
                }
            }
            out.set_bracket(i, j, acc).expect("shape");
        }
    }
    out
}

/// Data `(l, r, ϖ)` of a Leibniz algebra extension of `base` by `fiber`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizExtensionDatum {
    base: LeibnizAlgebra,
    fiber: LeibnizAlgebra,
    l: Vec<LinearMap>,
    r: Vec<LinearMap>,
    varpi: Vec<Vec<Scalar>>,
}

impl LeibnizExtensionDatum {
    /// Assembles a datum from its parts: `l` and `r` give one endomorphism of
    /// the fiber per base basis vector, `varpi` one fiber vector per ordered
    /// pair of base basis vectors (row-major).
    pub fn new(
        base: LeibnizAlgebra,
        fiber: LeibnizAlgebra,
        l: Vec<LinearMap>,
        r: Vec<LinearMap>,
        varpi: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        let (k, s) = (base.dim(), fiber.dim());
        let maps_ok = |m: &[LinearMap]| {
            m.len() == k && m.iter().all(|f| f.domain_dim() == s && f.codomain_dim() == s)
        };
        if !maps_ok(&l) || !maps_ok(&r) || varpi.len() != k * k || varpi.iter().any(|v| v.len() != s) {
            return Err(Error::Shape("Leibniz extension datum has inconsistent sizes".into()));
        }
        Ok(LeibnizExtensionDatum { base, fiber, l, r, varpi })
    }

    pub fn base(&self) -> &LeibnizAlgebra {
        &self.base
    }

    pub fn fiber(&self) -> &LeibnizAlgebra {
        &self.fiber
    }

    /// `ϖ(e_i, e_j)` for base basis vectors.
    pub fn varpi_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.varpi[i * self.base.dim() + j]
    }

    pub fn set_varpi(&mut self, i: usize, j: usize, value: Vec<Scalar>) -> Result<()> {
        let k = self.base.dim();
        if i >= k || j >= k || value.len() != self.fiber.dim() {
            return Err(Error::Shape(format!("varpi entry ({i},{j}) out of range")));
        }
        self.varpi[i * k + j] = value;
        Ok(())
    }

    pub fn l_basis(&self, i: usize) -> &LinearMap {
        &self.l[i]
    }

    pub fn r_basis(&self, i: usize) -> &LinearMap {
        &self.r[i]
    }

    fn combo(&self, maps: &[LinearMap], x: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = zeros(self.fiber.dim());
        for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            axpy(&mut out, c, &maps[i].apply_coeffs(a));
        }
        out
    }

    /// `l_x α`
    pub fn l_apply(&self, x: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.combo(&self.l, x, a)
    }

    /// `r_x α`
    pub fn r_apply(&self, x: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.combo(&self.r, x, a)
    }

    /// `ϖ(x, y)`
    pub fn varpi_apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zeros(self.fiber.dim());
        for (i, a) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(a * b), self.varpi_basis(i, j));
            }
        }
        out
    }
}

/// The maps `ϖ`, `l`, `r` of an extension datum:
/// ```text
/// ϖ(x∧y, z∧t) = −t⊗ω(x,y,z) + z⊗ω(x,y,t)
/// l(x∧y)(u∧v + z⊗w) = ρ(x,y)u∧v + u∧ρ(x,y)v + [x,y,z]_g⊗w + ω(x,y,z)∧w + z⊗ρ(x,y)w
/// r(x∧y)(u∧v + z⊗w) = −y⊗ν(x)(u,v) + x⊗ν(y)(u,v) + y⊗ρ(z,x)w − x⊗ρ(z,y)w
/// ```
/// The base is the fundamental algebra `∧²g` and the fiber is `(W, {·,·})`.
pub fn build_l_r_varpi(d: &ExtensionDatum) -> Result<LeibnizExtensionDatum> {
    require_certified(d)?;
    Ok(build_unchecked(d))
}

fn build_unchecked(d: &ExtensionDatum) -> LeibnizExtensionDatum {
    let (g, n, m) = (d.g(), d.g().dim(), d.h().dim());
    let w = WSpace { g_dim: n, h_dim: m };
    let wid = SpaceId::new(&w_space_id(d));
    let one = Scalar::one();
    let gp = pairs(n);
    let mut l = Vec::with_capacity(gp.len());
    let mut r = Vec::with_capacity(gp.len());
    for &(a, b) in &gp {
        let (x, y) = (unit(n, a), unit(n, b));
        let mut lcols = Vec::with_capacity(w.dim());
        let mut rcols = Vec::with_capacity(w.dim());
        for k in 0..w.dim() {
            let mut lc = zeros(w.dim());
            let mut rc = zeros(w.dim());
            match w.element(k) {
                WElement::Wedge(u, v) => {
                    w.add_wedge(&mut lc, &one, &d.rho_apply(&x, &y, &u), &v);
                    w.add_wedge(&mut lc, &one, &u, &d.rho_apply(&x, &y, &v));
                    w.add_tensor(&mut rc, &-&one, &y, &d.nu_apply(&x, &u, &v));
                    w.add_tensor(&mut rc, &one, &x, &d.nu_apply(&y, &u, &v));
                }
                WElement::Tensor(z, t) => {
                    w.add_tensor(&mut lc, &one, &g.bracket_coeffs(&x, &y, &z), &t);
                    w.add_wedge(&mut lc, &one, &d.omega_apply(&x, &y, &z), &t);
                    w.add_tensor(&mut lc, &one, &z, &d.rho_apply(&x, &y, &t));
                    w.add_tensor(&mut rc, &one, &y, &d.rho_apply(&z, &x, &t));
                    w.add_tensor(&mut rc, &-&one, &x, &d.rho_apply(&z, &y, &t));
                }
            }
            lcols.push(lc);
            rcols.push(rc);
        }
        l.push(LinearMap::from_columns(wid.clone(), wid.clone(), w.dim(), lcols).expect("square"));
        r.push(LinearMap::from_columns(wid.clone(), wid.clone(), w.dim(), rcols).expect("square"));
    }
    let mut varpi = Vec::with_capacity(gp.len() * gp.len());
    for &(a, b) in &gp {
        for &(c, e) in &gp {
            let (x, y, z, t) = (unit(n, a), unit(n, b), unit(n, c), unit(n, e));
            let mut v = zeros(w.dim());
            w.add_tensor(&mut v, &-&one, &t, &d.omega_apply(&x, &y, &z));
            w.add_tensor(&mut v, &one, &z, &d.omega_apply(&x, &y, &t));
            varpi.push(v);
        }
    }
    LeibnizExtensionDatum { base: g.fundamental_leibniz(), fiber: w_bracket_unchecked(d), l, r, varpi }
}

/// Per-condition outcome of [`leibniz_extension_defects`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizExtVerdict {
    /// Leibniz identity of the base.
    pub base: Verdict,
    /// Leibniz identity of the fiber.
    pub fiber: Verdict,
    /// The seven compatibility conditions, in the order of [`LEIBNIZ_CONDITIONS`].
    pub conditions: [Verdict; 7],
}

/// Labels of the seven compatibility conditions.
pub const LEIBNIZ_CONDITIONS: [&str; 7] = ["l-der", "r-der", "left-cen1", "rep1", "rep2", "left-cen2", "cocycle"];

impl LeibnizExtVerdict {
    pub fn passed(&self) -> bool {
        self.base.passed() && self.fiber.passed() && self.conditions.iter().all(Verdict::passed)
    }

    pub fn labelled(&self) -> Vec<(String, &Verdict)> {
        let mut out = vec![("base".to_string(), &self.base), ("fiber".to_string(), &self.fiber)];
        out.extend(LEIBNIZ_CONDITIONS.iter().zip(&self.conditions).map(|(l, v)| (l.to_string(), v)));
        out
    }

    pub fn failing(&self) -> Vec<String> {
        self.labelled().into_iter().filter(|(_, v)| !v.passed()).map(|(l, _)| l).collect()
    }
}

impl fmt::Display for LeibnizExtVerdict {
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

#[derive(Clone, Copy, PartialEq, Eq)]
enum Arg {
    Base,
    Fiber,
}

fn scan(e: &LeibnizExtensionDatum, args: &[Arg], f: impl Fn(&[Vec<Scalar>]) -> Vec<Scalar>) -> Verdict {
    let (k, s) = (e.base.dim(), e.fiber.dim());
    let dims: Vec<usize> = args.iter().map(|a| if *a == Arg::Base { k } else { s }).collect();
    let mut idx = vec![0usize; args.len()];
    if dims.contains(&0) {
        return Verdict::Pass;
    }
    loop {
        let vals: Vec<Vec<Scalar>> = idx.iter().zip(&dims).map(|(&i, &d)| unit(d, i)).collect();
        let d = f(&vals);
        if !is_zero_slice(&d) {
            let names = idx
                .iter()
                .zip(args)
                .map(|(&i, a)| match a {
                    Arg::Base => e.base.basis_names()[i].clone(),
                    Arg::Fiber => e.fiber.basis_names()[i].clone(),
                })
                .collect();
            return Verdict::Fail(Witness::with_names(&idx, names, d));
        }
        let mut pos = args.len();
        loop {
            if pos == 0 {
                return Verdict::Pass;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < dims[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Checks the conditions under which the bracket
/// `[x+α, y+β] = [x,y] + ϖ(x,y) + l_xβ + r_yα + [α,β]` is a Leibniz algebra:
/// ```text
/// l-der      l_x[α,β] = [l_xα,β] + [α,l_xβ]
/// r-der      r_x[α,β] = [α,r_xβ] − [β,r_xα]
/// left-cen1  [l_xα + r_xα, β] = 0
/// rep1       [l_x,l_y] − l_{[x,y]} = ad^L_{ϖ(x,y)}
/// rep2       [l_x,r_y] − r_{[x,y]} = ad^R_{ϖ(x,y)}
/// left-cen2  r_y(r_xα + l_xα) = 0
/// cocycle    l_xϖ(y,z) − l_yϖ(x,z) − r_zϖ(x,y) = ϖ([x,y],z) − ϖ(x,[y,z]) + ϖ(y,[x,z])
/// ```
/// together with the Leibniz identity of base and fiber.
pub fn leibniz_extension_defects(e: &LeibnizExtensionDatum) -> LeibnizExtVerdict {
    use Arg::{Base, Fiber};
    let s = e.fiber.dim();
    let fb = |a: &[Scalar], b: &[Scalar]| e.fiber.bracket_coeffs(a, b);
    let kb = |a: &[Scalar], b: &[Scalar]| e.base.bracket_coeffs(a, b);
    let l = |x: &[Scalar], a: &[Scalar]| e.l_apply(x, a);
    let r = |x: &[Scalar], a: &[Scalar]| e.r_apply(x, a);
    let w = |x: &[Scalar], y: &[Scalar]| e.varpi_apply(x, y);
    let c = |terms: &[(i64, Vec<Scalar>)]| {
        let mut out = zeros(s);
        for (sg, t) in terms {
            axpy(&mut out, &Scalar::from_int(*sg), t);
        }
        out
    };
    let add = |a: &[Scalar], b: &[Scalar]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let conditions = [
        scan(e, &[Base, Fiber, Fiber], |v| {
            let (x, a, b) = (&v[0], &v[1], &v[2]);
            c(&[(1, l(x, &fb(a, b))), (-1, fb(&l(x, a), b)), (-1, fb(a, &l(x, b)))])
        }),
        scan(e, &[Base, Fiber, Fiber], |v| {
            let (x, a, b) = (&v[0], &v[1], &v[2]);
            c(&[(1, r(x, &fb(a, b))), (-1, fb(a, &r(x, b))), (1, fb(b, &r(x, a)))])
        }),
        scan(e, &[Base, Fiber, Fiber], |v| {
            let (x, a, b) = (&v[0], &v[1], &v[2]);
            fb(&add(&l(x, a), &r(x, a)), b)
        }),
        scan(e, &[Base, Base, Fiber], |v| {
            let (x, y, a) = (&v[0], &v[1], &v[2]);
            c(&[(1, l(x, &l(y, a))), (-1, l(y, &l(x, a))), (-1, l(&kb(x, y), a)), (-1, fb(&w(x, y), a))])
        }),
        scan(e, &[Base, Base, Fiber], |v| {
            let (x, y, a) = (&v[0], &v[1], &v[2]);
            c(&[(1, l(x, &r(y, a))), (-1, r(y, &l(x, a))), (-1, r(&kb(x, y), a)), (-1, fb(a, &w(x, y)))])
        }),
        scan(e, &[Base, Base, Fiber], |v| {
            let (x, y, a) = (&v[0], &v[1], &v[2]);
            r(y, &add(&r(x, a), &l(x, a)))
        }),
        scan(e, &[Base, Base, Base], |v| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            c(&[
                (1, l(x, &w(y, z))),
                (-1, l(y, &w(x, z))),
                (-1, r(z, &w(x, y))),
                (-1, w(&kb(x, y), z)),
                (1, w(x, &kb(y, z))),
                (-1, w(y, &kb(x, z))),
            ])
        }),
    ];
    LeibnizExtVerdict { base: e.base.is_leibniz(), fiber: e.fiber.is_leibniz(), conditions }
}

/// The Leibniz algebra on `fiber ⊕ base` (fiber first in the basis):
/// `[x+α, y+β] = [x,y] + ϖ(x,y) + l_xβ + r_yα + [α,β]`.
pub fn assemble_leibniz_extension(e: &LeibnizExtensionDatum) -> LeibnizAlgebra {
    let (k, s) = (e.base.dim(), e.fiber.dim());
    let names: Vec<String> = e.fiber.basis_names().iter().chain(e.base.basis_names()).cloned().collect();
    let space = e.fiber.space().direct_sum(e.base.space());
    let mut out = LeibnizAlgebra::abelian(space.as_str(), names);
    let split = |i: usize| if i < s { (zeros(k), unit(s, i)) } else { (unit(k, i - s), zeros(s)) };
    for i in 0..s + k {
        let (x, a) = split(i);
        for j in 0..s + k {
            let (y, b) = split(j);
            let mut fiber = e.varpi_apply(&x, &y);
            for t in [e.l_apply(&x, &b), e.r_apply(&y, &a), e.fiber.bracket_coeffs(&a, &b)] {
                axpy(&mut fiber, &Scalar::one(), &t);
            }
            fiber.extend(e.base.bracket_coeffs(&x, &y));
            out.set_bracket(i, j, fiber).expect("shape");
        }
    }
    out
}

/// Position in `W ⊕ ∧²g` of each canonical pair of `g ⊕ h`.
fn transport_indices(n: usize, m: usize) -> Vec<usize> {
    let w = WSpace { g_dim: n, h_dim: m };
    pairs(n + m)
        .into_iter()
        .map(|(a, b)| match (a < n, b < n) {
            (true, true) => w.dim() + pair_index(n, a, b),
            (true, false) => w.tensor_index(a, b - n),
            _ => pair_index(m, a - n, b - n),
        })
        .collect()
}

/// Compares the fundamental algebra of the extension bracket of `d`,
/// transported to `W ⊕ ∧²g`, with [`assemble_leibniz_extension`] of
/// [`build_l_r_varpi`]: structure constants must agree exactly. A failing
/// witness names the first basis pair (in the `W ⊕ ∧²g` order) where they
/// differ, with the difference `transported − assembled`.
pub fn fundamental_oracle_check(d: &ExtensionDatum) -> Result<Verdict> {
    let e = build_l_r_varpi(d)?;
    let assembled = assemble_leibniz_extension(&e);
    let direct = d.extension_bracket().fundamental_leibniz();
    let (n, m) = (d.g().dim(), d.h().dim());
    let pos = transport_indices(n, m);
    let total = pos.len();
    let mut transported = vec![vec![zeros(total); total]; total];
    for p in 0..total {
        for q in 0..total {
            let v = direct.basis_bracket(p, q);
            let mut t = zeros(total);
            for (i, c) in v.iter().enumerate() {
                t[pos[i]] = c.clone();
            }
            transported[pos[p]][pos[q]] = t;
        }
    }
    let names = assembled.basis_names();
    for (i, row) in transported.iter().enumerate() {
        for (j, t) in row.iter().enumerate() {
            let diff = sub_slices(t, assembled.basis_bracket(i, j));
            if !is_zero_slice(&diff) {
                return Ok(Verdict::Fail(Witness::new(&[i, j], names, diff)));
            }
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ThreeLieAlgebra;

    fn vec_of(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&c| Scalar::from_int(c)).collect()
    }

    fn small(space: &str, prefix: &str) -> ThreeLieAlgebra {
        let basis = (1..=3).map(|i| format!("{prefix}{i}")).collect();
        ThreeLieAlgebra::from_fn(space, basis, |_, _, _| vec_of(&[1, 0, 0]))
    }

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
    fn w_space_layout() {
        let w = WSpace { g_dim: 3, h_dim: 3 };
        assert_eq!(w.dim(), 3 + 9);
        assert_eq!(w.tensor_index(0, 0), 3);
        assert_eq!(w.tensor_index(2, 1), 3 + 7);
        let names = w.basis_names(&nu_family([1, 2, 3], true));
        assert_eq!(names[0], "v1^v2");
        assert_eq!(names[3], "x1(x)v1");
    }

    #[test]
    fn w_bracket_examples() {
        let d = nu_family([1, 2, 3], true);
        let wb = w_bracket(&d).unwrap();
        let w = WSpace { g_dim: 3, h_dim: 3 };
        let v23 = pair_index(3, 1, 2);
        // {v2∧v3, x1⊗v1} = ν(x1)(v2,v3)∧v1 + x1⊗[v2,v3,v1] = v1∧v1 + x1⊗v1
        let mut want = zeros(w.dim());
        want[w.tensor_index(0, 0)] = Scalar::one();
        assert_eq!(wb.basis_bracket(v23, w.tensor_index(0, 0)), &want[..]);
        assert!(wb.is_leibniz().passed());
        // zero datum, pure ∧²h arguments: fundamental bracket of h
        let z = ExtensionDatum::zero(small("g", "x"), small("h", "v"));
        let wz = w_bracket(&z).unwrap();
        let fh = z.h().fundamental_leibniz();
        for p in 0..3 {
            for q in 0..3 {
                assert_eq!(&wz.basis_bracket(p, q)[..3], fh.basis_bracket(p, q));
            }
        }
    }

    #[test]
    fn refuses_uncertified_data() {
        let bad = nu_family([1, 2, 3], false);
        assert!(matches!(w_bracket(&bad), Err(Error::Precondition(_))));
        assert!(matches!(fundamental_oracle_check(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn oracle_and_conditions_on_certified_data() {
        for d in [nu_family([1, 2, 3], true), nu_family([-2, 0, 5], true), ExtensionDatum::zero(small("g", "x"), small("h", "v"))] {
            assert!(fundamental_oracle_check(&d).unwrap().passed());
            let e = build_l_r_varpi(&d).unwrap();
            let v = leibniz_extension_defects(&e);
            assert!(v.passed(), "{v}");
            assert!(assemble_leibniz_extension(&e).is_leibniz().passed());
        }
    }

    #[test]
    fn varpi_entries() {
        let d = nu_family([1, 2, 3], true);
        let e = build_l_r_varpi(&d).unwrap();
        let w = WSpace { g_dim: 3, h_dim: 3 };
        // ϖ(x1∧x2, x3∧x1) = −x1⊗ω(x1,x2,x3) + x3⊗ω(x1,x2,x1) = x1⊗v1
        let (p12, p13) = (pair_index(3, 0, 1), pair_index(3, 0, 2));
        let mut want = zeros(w.dim());
        want[w.tensor_index(0, 0)] = Scalar::from_int(-1);
        assert_eq!(e.varpi_basis(p12, p13), &want[..]);
    }

    #[test]
    fn perturbed_varpi_breaks_cocycle() {
        let d = nu_family([1, 2, 3], true);
        let mut e = build_l_r_varpi(&d).unwrap();
        let w = WSpace { g_dim: 3, h_dim: 3 };
        let mut v = e.varpi_basis(0, 1).to_vec();
        v[w.tensor_index(1, 0)] += Scalar::one();
        e.set_varpi(0, 1, v).unwrap();
        let verdict = leibniz_extension_defects(&e);
        assert!(!verdict.conditions[6].passed());
        assert!(!verdict.passed());
        assert!(!assemble_leibniz_extension(&e).is_leibniz().passed());
    }

    #[test]
    fn zero_datum_over_abelian_algebras() {
        let d = ExtensionDatum::zero(
            ThreeLieAlgebra::abelian_numbered("g", "x", 3),
            ThreeLieAlgebra::abelian_numbered("h", "v", 2),
        );
        let e = build_l_r_varpi(&d).unwrap();
        assert!(leibniz_extension_defects(&e).passed());
        assert!(e.varpi.iter().all(|v| is_zero_slice(v)));
        assert!(fundamental_oracle_check(&d).unwrap().passed());
    }
}
