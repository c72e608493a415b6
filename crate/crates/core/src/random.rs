//! Seeded generators for test data: random brackets and extension data,
//! certified data obtained as gauge orbits, and single-entry perturbations.

use rand::Rng;

use crate::algebra::ThreeLieAlgebra;
use crate::dgla::{cochain_to_datum, datum_to_cochain, gauge_transform, GradedCochain};
use crate::error::Result;
use crate::extension::ExtensionDatum;
use crate::linalg::LinearMap;
use crate::scalar::Scalar;

fn coeffs(n: usize, lo: i64, hi: i64, rng: &mut impl Rng) -> Vec<Scalar> {
    (0..n).map(|_| Scalar::from_int(rng.gen_range(lo..=hi))).collect()
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// A skew ternary bracket with uniformly random integer structure constants.
/// It need not satisfy the Fundamental Identity.
pub fn random_bracket(space: &str, prefix: &str, n: usize, lo: i64, hi: i64, rng: &mut impl Rng) -> ThreeLieAlgebra {
    let basis = (1..=n).map(|i| format!("{prefix}{i}")).collect();
    ThreeLieAlgebra::from_fn(space, basis, |_, _, _| coeffs(n, lo, hi, rng))
}

/// A random linear map `g → h`.
pub fn random_xi(d: &ExtensionDatum, lo: i64, hi: i64, rng: &mut impl Rng) -> LinearMap {
    let (n, m) = (d.g().dim(), d.h().dim());
    let cols = (0..n).map(|_| coeffs(m, lo, hi, rng)).collect();
    LinearMap::from_columns(d.g().space().clone(), d.h().space().clone(), m, cols).expect("column lengths")
}

/// The datum obtained from `d` by the gauge action of `ξ`.
pub fn gauge_datum(xi: &LinearMap, d: &ExtensionDatum) -> Result<ExtensionDatum> {
    let c = datum_to_cochain(d);
    let x = GradedCochain::from_map(c.ambient().clone(), xi)?;
    cochain_to_datum(&gauge_transform(&x, &c)?)
}

/// A point of the gauge orbit of `base` under a random `ξ` with entries in
/// `lo..=hi`. Certified whenever `base` is.
pub fn certified_from(base: &ExtensionDatum, lo: i64, hi: i64, rng: &mut impl Rng) -> Result<ExtensionDatum> {
    let xi = random_xi(base, lo, hi, rng);
    gauge_datum(&xi, base)
}

/// `d` with one randomly chosen structure entry of `ρ`, `ν` or `ω` shifted by
/// `±1` in one coordinate. The skew partner of the entry moves with it.
pub fn perturb(d: &ExtensionDatum, rng: &mut impl Rng) -> ExtensionDatum {
    let (n, m) = (d.g().dim(), d.h().dim());
    let mut out = d.clone();
    let delta = if rng.gen_bool(0.5) { Scalar::one() } else { -Scalar::one() };
    let coord = rng.gen_range(0..m.max(1));
    let bump = |mut v: Vec<Scalar>| {
        v[coord] += &delta;
        v
    };
    let choices = [n >= 2 && m >= 1, n >= 1 && m >= 2, n >= 3 && m >= 1];
    let kinds: Vec<usize> = (0..3).filter(|&k| choices[k]).collect();
    if kinds.is_empty() {
        return out;
    }
    match kinds[rng.gen_range(0..kinds.len())] {
        0 => {
            let i = rng.gen_range(0..n - 1);
            let j = rng.gen_range(i + 1..n);
            let k = rng.gen_range(0..m);
            let cur = d.rho_apply(&unit(n, i), &unit(n, j), &unit(m, k));
            out.set_rho(i, j, k, bump(cur)).expect("in range");
        }
        1 => {
            let i = rng.gen_range(0..n);
            let a = rng.gen_range(0..m - 1);
            let b = rng.gen_range(a + 1..m);
            let cur = d.nu_apply(&unit(n, i), &unit(m, a), &unit(m, b));
            out.set_nu(i, a, b, bump(cur)).expect("in range");
        }
        _ => {
            let i = rng.gen_range(0..n - 2);
            let j = rng.gen_range(i + 1..n - 1);
            let k = rng.gen_range(j + 1..n);
            let cur = d.omega_apply(&unit(n, i), &unit(n, j), &unit(n, k));
            out.set_omega(i, j, k, bump(cur)).expect("in range");
        }
    }
    out
}
