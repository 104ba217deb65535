//! Spectral operators and the sharp derivative/potential/Laplacian bounds.
//!
//! Homogeneous multipliers excise the zero frequency; zero-mean input is the
//! periodic analogue of working modulo polynomials, and a nonzero mean is
//! rejected where the symbol is undefined at `k = 0`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signal::{apply_multiplier, idft, Grid, Multiplier, Signal, Spectrum};
use crate::smoothness::{modulus_frac_l2, modulus_or_zero};

/// Spectral operator selector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum OperatorSpec {
    /// `D^m`: symbol `(ik)^m`.
    Derivative(u32),
    /// Riesz potential `J_σ`: symbol `|k|^σ`, zero at `k = 0`.
    Riesz(f64),
    /// Bessel potential `I_σ`: symbol `(1+k²)^{σ/2}`.
    Bessel(f64),
    /// Fractional Laplacian `(-Δ)^s` (`solve = false`) or its inverse
    /// (`solve = true`): symbol `|k|^{±2s}`, `0 < s < 1`.
    FracLap { s: f64, solve: bool },
}

impl OperatorSpec {
    fn needs_zero_mean(&self) -> bool {
        match *self {
            OperatorSpec::Riesz(sigma) => sigma < 0.0,
            OperatorSpec::FracLap { .. } => true,
            _ => false,
        }
    }

    fn multiplier(&self) -> Result<Multiplier> {
        Ok(match *self {
            OperatorSpec::Derivative(m) => {
                Multiplier::new(format!("derivative({m})"), move |k| {
                    Complex64::new(0.0, k as f64).powu(m)
                })
            }
            OperatorSpec::Riesz(sigma) => Multiplier::real(format!("riesz({sigma})"), move |k| {
                if k == 0 {
                    0.0
                } else {
                    (k.abs() as f64).powf(sigma)
                }
            }),
            OperatorSpec::Bessel(sigma) => Multiplier::real(format!("bessel({sigma})"), move |k| {
                (1.0 + (k * k) as f64).powf(sigma / 2.0)
            }),
            OperatorSpec::FracLap { s, solve } => {
                if !(s > 0.0 && s < 1.0) {
                    return Err(Error::BadOrder(format!("fractional order s = {s} outside (0,1)")));
                }
                let e = if solve { -2.0 * s } else { 2.0 * s };
                Multiplier::real(format!("fraclap({s},solve={solve})"), move |k| {
                    if k == 0 {
                        0.0
                    } else {
                        (k.abs() as f64).powf(e)
                    }
                })
            }
        })
    }
}

/// Applies the operator's symbol to a spectrum.
pub fn apply_operator(f: &Spectrum, op: &OperatorSpec) -> Result<Spectrum> {
    if op.needs_zero_mean() && !f.has_zero_mean() {
        return Err(Error::ZeroModeError);
    }
    Ok(apply_multiplier(f, &op.multiplier()?))
}

/// Realizes a spectrum at a grid level at least `min_level` (alias-free).
pub(crate) fn realize_at_least(f: &Spectrum, min_level: u32) -> Result<(Grid, Signal)> {
    let natural = f.natural_grid();
    let grid = if natural.level() >= min_level { natural } else { Grid::new(min_level)? };
    Ok((grid, idft(f, grid)?))
}

/// Both sides of the derivative-vs-modulus inequality:
/// `ω_k(f^{(m)}, t)_p` against `(∫_0^t (u^{-m} ω_{k+m}(f,u)_p)^q du/u)^{1/q}`
/// (dyadic in `u`).
pub fn trebels_bound(f: &Spectrum, k: u32, m: u32, t: f64, p: f64, q: f64) -> Result<(f64, f64)> {
    let deriv = apply_operator(f, &OperatorSpec::Derivative(m))?;
    let (_, df) = realize_at_least(&deriv, crate::norms::DEFAULT_LEVELS)?;
    let lhs = modulus_or_zero(&df, k, t, p)?;

    let (grid, sf) = realize_at_least(f, crate::norms::DEFAULT_LEVELS)?;
    let i_max = crate::norms::modulus_j_max(grid);
    let mut terms = Vec::new();
    for i in 0..=i_max {
        let u = 0.5f64.powi(i as i32);
        if u > t {
            continue;
        }
        terms.push(u.powi(-(m as i32)) * modulus_or_zero(&sf, k + m, u, p)?);
    }
    let rhs = crate::norms::ell_q(terms.into_iter(), q);
    Ok((lhs, rhs))
}

/// Both sides of the fractional-Laplacian regularity equivalence at `p = 2`:
/// `(∫_0^t (ξ^{-2s} ω_{λ+2s}(u,ξ)₂)² dξ/ξ)^{1/2}` for the solution `u` of
/// `(-Δ)^s u = f`, against `ω_λ(f,t)₂`.
pub fn fraclap_equiv(f: &Spectrum, s: f64, lambda: f64, t: f64) -> Result<(f64, f64)> {
    if !(lambda > 0.0) {
        return Err(Error::BadOrder(format!("needs λ > 0, got {lambda}")));
    }
    let u = apply_operator(f, &OperatorSpec::FracLap { s, solve: true })?;
    let i_min = (-t.log2()).ceil().max(0.0) as i32;
    let mut sum = 0.0;
    for i in i_min..(i_min + 14) {
        let xi = 0.5f64.powi(i);
        if xi > t {
            continue;
        }
        let w = xi.powf(-2.0 * s) * modulus_frac_l2(&u, lambda + 2.0 * s, xi)?;
        sum += w * w;
    }
    let lhs = sum.sqrt();
    let rhs = modulus_frac_l2(f, lambda, t)?;
    Ok((lhs, rhs))
}

/// Riesz-potential analogue: `ω_α(J_σ f, t)₂` against
/// `(∫_0^t (u^{-σ} ω_{α+σ}(f,u)₂)² du/u)^{1/2}` (dyadic).
pub fn riesz_equiv_bound(f: &Spectrum, sigma: f64, alpha: f64, t: f64) -> Result<(f64, f64)> {
    if !(sigma > 0.0 && alpha > 0.0) {
        return Err(Error::BadOrder("needs σ, α > 0".into()));
    }
    let jf = apply_operator(f, &OperatorSpec::Riesz(sigma))?;
    let lhs = modulus_frac_l2(&jf, alpha, t)?;
    let rhs = frac_marchaud_block(f, sigma, alpha, t)?;
    Ok((lhs, rhs))
}

/// Bessel-potential analogue with the inhomogeneous `min{1,t^α}‖·‖₂` terms.
pub fn bessel_equiv_bound(f: &Spectrum, sigma: f64, alpha: f64, t: f64) -> Result<(f64, f64)> {
    if !(sigma > 0.0 && alpha > 0.0) {
        return Err(Error::BadOrder("needs σ, α > 0".into()));
    }
    let lf = apply_operator(f, &OperatorSpec::Bessel(sigma))?;
    let cap = t.powf(alpha).min(1.0);
    let lhs = cap * lf.l2_norm() + modulus_frac_l2(&lf, alpha, t)?;
    let rhs = cap * f.l2_norm() + frac_marchaud_block(f, sigma, alpha, t)?;
    Ok((lhs, rhs))
}

fn frac_marchaud_block(f: &Spectrum, sigma: f64, alpha: f64, t: f64) -> Result<f64> {
    let i_min = (-t.log2()).ceil().max(0.0) as i32;
    let mut sum = 0.0;
    for i in i_min..(i_min + 14) {
        let u = 0.5f64.powi(i);
        if u > t {
            continue;
        }
        let w = u.powf(-sigma) * modulus_frac_l2(f, alpha + sigma, u)?;
        sum += w * w;
    }
    Ok(sum.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::random_band_limited;
    use std::f64::consts::PI;

    fn rel_err(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn derivative_of_cosine_is_minus_sine() {
        let d = apply_operator(&Spectrum::cosine(1, 1.0), &OperatorSpec::Derivative(1)).unwrap();
        assert!((d.coeff(1) - Complex64::new(0.0, 0.5)).norm() < 1e-15);
        assert!((d.coeff(-1) - Complex64::new(0.0, -0.5)).norm() < 1e-15);
    }

    #[test]
    fn bessel_scales_cosine() {
        let b = apply_operator(&Spectrum::cosine(1, 1.0), &OperatorSpec::Bessel(1.0)).unwrap();
        assert!(rel_err(b.coeff(1).re, 2f64.sqrt() / 2.0) < 1e-14);
    }

    #[test]
    fn fraclap_solve_divides_by_symbol() {
        let g = apply_operator(
            &Spectrum::cosine(2, 1.0),
            &OperatorSpec::FracLap { s: 0.5, solve: true },
        )
        .unwrap();
        assert!(rel_err(g.coeff(2).re, 0.25) < 1e-14); // (1/2)/|2| = 1/4
    }

    #[test]
    fn zero_mode_is_rejected() {
        let f = Spectrum::constant(Complex64::new(1.0, 0.0));
        assert!(matches!(
            apply_operator(&f, &OperatorSpec::FracLap { s: 0.5, solve: false }),
            Err(Error::ZeroModeError)
        ));
        assert!(matches!(
            apply_operator(&f, &OperatorSpec::Riesz(-1.0)),
            Err(Error::ZeroModeError)
        ));
        // Positive-order Riesz is fine (symbol vanishes at 0).
        assert!(apply_operator(&f, &OperatorSpec::Riesz(1.0)).is_ok());
    }

    #[test]
    fn bessel_lift_round_trip_is_identity() {
        let f = random_band_limited(4, 64, 1.2);
        let up = apply_operator(&f, &OperatorSpec::Bessel(0.7)).unwrap();
        let back = apply_operator(&up, &OperatorSpec::Bessel(-0.7)).unwrap();
        for (k, c) in f.iter() {
            assert!((back.coeff(k) - c).norm() <= 1e-12 * c.norm());
        }
    }

    #[test]
    fn trebels_closed_form_on_cosine() {
        // k = m = 1, p = q = 2, f = cos x: both sides from the symbol.
        let f = Spectrum::cosine(1, 1.0);
        let (lhs, rhs) = trebels_bound(&f, 1, 1, 0.5, 2.0, 2.0).unwrap();
        // lhs = ω₁(-sin x, ½)₂ — same closed form as for cos.
        let grid = Grid::new(crate::norms::DEFAULT_LEVELS).unwrap();
        let step = grid.step();
        let h = (0.5 / step).floor() * step;
        assert!(rel_err(lhs, 2.0 * (h / 2.0).sin() * PI.sqrt()) < 1e-10);
        // rhs: (Σ_{u=2^{-i}≤1/2} (u^{-1}·ω₂(cos,u))²)^{1/2} with
        // ω₂(cos,u) = (2 sin(h_u/2))²√π.
        let mut sum = 0.0;
        for i in 1..=crate::norms::modulus_j_max(grid) {
            let u = 0.5f64.powi(i as i32);
            let h = (u / step).floor() * step;
            let w = u.powi(-1) * (2.0 * (h / 2.0).sin()).powi(2) * PI.sqrt();
            sum += w * w;
        }
        assert!(rel_err(rhs, sum.sqrt()) < 1e-10);

        // Constant input: both sides vanish.
        let c = Spectrum::constant(Complex64::new(1.0, 0.0));
        let (l, r) = trebels_bound(&c, 1, 1, 0.5, 2.0, 2.0).unwrap();
        assert_eq!((l, r), (0.0, 0.0));
    }

    #[test]
    fn trebels_rhs_monotone_in_q() {
        // ℓ_q norms shrink as q grows: the q = ∞ bound sits below q = 2.
        let f = LacunaryHelper::spectrum();
        let (_, rhs2) = trebels_bound(&f, 1, 1, 0.5, 2.0, 2.0).unwrap();
        let (_, rhs_inf) = trebels_bound(&f, 1, 1, 0.5, 2.0, f64::INFINITY).unwrap();
        assert!(rhs_inf < rhs2);
    }

    struct LacunaryHelper;
    impl LacunaryHelper {
        fn spectrum() -> Spectrum {
            let mut entries = Vec::new();
            for j in 2..7 {
                let k = 1i64 << j;
                let c = Complex64::new(0.5 / (1.0 + j as f64), 0.0);
                entries.push((k, c));
                entries.push((-k, c));
            }
            Spectrum::from_coeffs(entries)
        }
    }

    #[test]
    fn fraclap_equiv_single_mode() {
        // cos x, s = 1/2: u = cos x; both sides are explicit.
        let f = Spectrum::cosine(1, 1.0);
        let (lhs, rhs) = fraclap_equiv(&f, 0.5, 1.0, 0.5).unwrap();
        assert!(lhs > 0.0 && rhs > 0.0);
        let ratio: f64 = lhs / rhs;
        assert!(ratio.max(1.0 / ratio) < 20.0);

        let zero = Spectrum::new();
        let (l, r) = fraclap_equiv(&zero, 0.5, 1.0, 0.5).unwrap();
        assert_eq!((l, r), (0.0, 0.0));
    }
}
