//! The embedding-claim registry: every iff condition as a pure predicate,
//! paired with the explicit counterexample family that witnesses its failing
//! branch, plus a numeric verdict engine.
//!
//! Claims carry the registry labels used throughout (`Thm6.6`, `Prop5.1`,
//! …). The failing branch of a claim is certified by a witness: a power-log
//! profile, a general monotone sequence, or a lacunary series whose two
//! membership verdicts are decided symbolically — source finite, target
//! infinite, zero tolerance. Claims whose only proof device is out of scope
//! are registered predicate-only. Epsilon windows are instantiated at their
//! midpoints; an empty window raises a domain error rather than clamping.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lacunary::{lac_norm_bbesov, lac_weighted, Convention, LacunarySeq};
use crate::profiles::{
    gm_besov_diff_char, gm_besov_fourier_char, gm_seq_bbesov_char, gm_sobolev_char, hl_norm,
    FiniteVerdict, GMSequence, PowerLogPiece, PowerLogProfile,
};

/// Named real parameters of a claim instance.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ClaimParams(pub BTreeMap<String, f64>);

impl ClaimParams {
    pub fn new(entries: &[(&str, f64)]) -> Self {
        ClaimParams(entries.iter().map(|&(k, v)| (k.to_string(), v)).collect())
    }

    pub fn get(&self, key: &str) -> Option<f64> {
        self.0.get(key).copied()
    }

    pub fn req(&self, key: &str) -> Result<f64> {
        self.get(key)
            .ok_or_else(|| Error::DomainError(format!("missing parameter `{key}`")))
    }

    pub fn set(&mut self, key: &str, v: f64) {
        self.0.insert(key.to_string(), v);
    }
}

/// Witness family instantiated for a failing claim.
#[derive(Debug, Clone, Serialize)]
pub enum WitnessFamily {
    Profile(PowerLogProfile),
    Sequence(GMSequence),
    Lacunary(LacunarySeq),
}

/// A counterexample with its two membership verdicts.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub family: WitnessFamily,
    pub description: String,
    pub source_space: String,
    pub target_space: String,
    pub source: FiniteVerdict,
    pub target: FiniteVerdict,
}

impl Witness {
    /// Source finite and target infinite: the claim's failing branch is
    /// certified.
    pub fn certifies(&self) -> bool {
        self.source.finite && !self.target.finite
    }
}

/// Unbounded-ratio evidence for "only if" branches proved through sequences
/// of test functions: characterization values along a growing family.
#[derive(Debug, Clone, Serialize)]
pub struct GrowthWitness {
    pub description: String,
    pub ratios: Vec<f64>,
}

impl GrowthWitness {
    /// Strictly increasing along the cutoff ladder with real gain at the
    /// end; the rates here are logarithmic in the cutoff, so the gain per
    /// ladder is modest.
    pub fn grows(&self) -> bool {
        self.ratios.len() >= 2
            && self.ratios.windows(2).all(|w| w[1] > w[0])
            && self.ratios.last().unwrap() > &(self.ratios[0] * 1.2)
    }
}

/// Bounded-ratio evidence for a holding claim over a random test family.
#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub max_ratio: f64,
    pub samples: usize,
}

pub enum WitnessKind {
    /// Predicate-only registration (the proof device is out of scope).
    None,
    /// Source-finite / target-infinite pair.
    Pair(fn(&ClaimParams, f64) -> Result<Witness>),
    /// Growing-ratio family.
    Growth(fn(&ClaimParams) -> Result<GrowthWitness>),
}

type ProbeFn = fn(&ClaimParams, u64, usize) -> Result<ProbeReport>;

pub struct EmbeddingClaim {
    pub id: &'static str,
    pub summary: &'static str,
    /// Default parameter sets; the first is the canonical instance.
    pub default_grids: &'static [&'static [(&'static str, f64)]],
    pub domain: fn(&ClaimParams) -> Result<()>,
    pub predicate: fn(&ClaimParams) -> bool,
    pub witness: WitnessKind,
    pub probe: Option<ProbeFn>,
}

/// Numeric verdict of one claim verification.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub id: String,
    pub params: ClaimParams,
    pub predicate_holds: bool,
    pub evidence: Evidence,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub enum Evidence {
    Witness(Witness),
    Growth(GrowthWitness),
    Probe(ProbeReport),
    PredicateOnly,
}

// ---------------------------------------------------------------------------
// Small helpers shared by the witness builders
// ---------------------------------------------------------------------------

fn inv(e: f64) -> f64 {
    if e.is_infinite() {
        0.0
    } else {
        1.0 / e
    }
}

fn window_mid(lo: f64, hi: f64, what: &str) -> Result<f64> {
    if !(lo < hi) {
        return Err(Error::DomainError(format!(
            "empty exponent window for {what}: ({lo}, {hi})"
        )));
    }
    Ok(0.5 * (lo + hi))
}

/// `F0(t) = t^{-d+d/p}(1+|log t|)^{-β}` on both pieces.
fn gm_log_profile(p: f64, beta: f64) -> PowerLogProfile {
    PowerLogProfile::global(PowerLogPiece::new(1.0, -1.0 + 1.0 / p, -beta, 0.0))
}

/// `F0(t) = t^{-d+d/p}L^{-β}M^{-δ}` on both pieces.
fn gm_loglog_profile(p: f64, beta: f64, delta: f64) -> PowerLogProfile {
    PowerLogProfile::global(PowerLogPiece::new(1.0, -1.0 + 1.0 / p, -beta, -delta))
}

/// Lacunary envelope `b_j = (1+j)^{-beta} (1+log(1+j))^{-delta}`.
fn lac_envelope(beta: f64, delta: f64) -> LacunarySeq {
    LacunarySeq::envelope(Convention::Continuous, 1.0, PowerLogPiece::new(1.0, -beta, -delta, 0.0))
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::DomainError(msg.to_string()))
    }
}

fn base_domain(prm: &ClaimParams) -> Result<()> {
    let p = prm.req("p")?;
    let q = prm.req("q")?;
    need(p > 1.0 && p.is_finite(), "needs 1 < p < inf")?;
    need(q > 0.0, "needs q > 0")?;
    if let Some(b) = prm.get("b") {
        if q.is_finite() {
            need(b > -1.0 / q, "needs b > -1/q")?;
        } else {
            need(b > 0.0, "needs b > 0 at q = inf")?;
        }
    }
    Ok(())
}

fn eps_of(prm: &ClaimParams, eps: f64) -> f64 {
    prm.get("eps").unwrap_or(eps)
}

// ---------------------------------------------------------------------------
// Witness builders (the paper-family generators, d = 1)
// ---------------------------------------------------------------------------

/// GM profile witness for "H^{0,b+1/q-eps} not inside diff-Besov(0,b)".
fn witness_prop51(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let eps = eps_of(prm, eps);
    need(p <= q, "Prop5.1 needs p <= q")?;
    need(eps > 0.0, "needs eps > 0")?;
    let hi = b + inv(q) + inv(p);
    let beta = window_mid((1.0 / p).max(hi - eps), hi, "Prop5.1 beta")?;
    let f0 = gm_log_profile(p, beta);
    Ok(Witness {
        source: gm_sobolev_char(&f0, 1, 0.0, b + inv(q) - eps, p)?,
        target: gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?,
        family: WitnessFamily::Profile(f0),
        description: format!("radial GM profile t^(-1+1/p) L^(-{beta})"),
        source_space: format!("H^(0,{}) , p={p}", b + inv(q) - eps),
        target_space: format!("bB^(0,{b}) , p={p}, q={q}"),
    })
}

/// Lacunary witness for the same sharpness at q >= 2.
fn witness_prop52(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (q, b) = (prm.req("q")?, prm.req("b")?);
    let eps = eps_of(prm, eps);
    need(q >= 2.0, "Prop5.2 needs q >= 2")?;
    need(eps > 0.0, "needs eps > 0")?;
    let hi = b + inv(q) + 0.5;
    let delta = window_mid((0.5f64).max(hi - eps), hi, "Prop5.2 delta")?;
    let seq = lac_envelope(delta, 0.0);
    Ok(Witness {
        source: lac_weighted(&seq, 0.0, b + inv(q) - eps, 2.0),
        target: lac_norm_bbesov(&seq, 0.0, b, q)?,
        family: WitnessFamily::Lacunary(seq),
        description: format!("lacunary b_j = (1+j)^(-{delta})"),
        source_space: format!("H^(0,{})", b + inv(q) - eps),
        target_space: format!("bB^(0,{b}) , q={q}"),
    })
}

/// GM profile for "diff-Besov(0,b) not inside H^{0,b+1/q+eps}".
fn witness_prop54(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let eps = eps_of(prm, eps);
    need(q <= p, "Prop5.4 needs q <= p")?;
    need(eps > 0.0, "needs eps > 0")?;
    let lo = b + inv(q) + inv(p);
    let beta = window_mid(lo, lo + eps, "Prop5.4 beta")?;
    let f0 = gm_log_profile(p, beta);
    Ok(Witness {
        source: gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?,
        target: gm_sobolev_char(&f0, 1, 0.0, b + inv(q) + eps, p)?,
        family: WitnessFamily::Profile(f0),
        description: format!("radial GM profile t^(-1+1/p) L^(-{beta})"),
        source_space: format!("bB^(0,{b}) , p={p}, q={q}"),
        target_space: format!("H^(0,{}) , p={p}", b + inv(q) + eps),
    })
}

fn witness_prop55(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (q, b) = (prm.req("q")?, prm.req("b")?);
    let eps = eps_of(prm, eps);
    need(q <= 2.0, "Prop5.5 needs q <= 2")?;
    need(eps > 0.0, "needs eps > 0")?;
    let lo = b + inv(q) + 0.5;
    let delta = window_mid(lo, lo + eps, "Prop5.5 delta")?;
    let seq = lac_envelope(delta, 0.0);
    Ok(Witness {
        source: lac_norm_bbesov(&seq, 0.0, b, q)?,
        target: lac_weighted(&seq, 0.0, b + inv(q) + eps, 2.0),
        family: WitnessFamily::Lacunary(seq),
        description: format!("lacunary b_j = (1+j)^(-{delta})"),
        source_space: format!("bB^(0,{b}) , q={q}"),
        target_space: format!("H^(0,{})", b + inv(q) + eps),
    })
}

/// `B^{0,b+1/min{2,p}}` source vs `H^{0,b+1/q}` target (non-comparability,
/// second half).
fn witness_prop61_ii(prm: &ClaimParams, _eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    need(q >= p.max(2.0) && !(p == 2.0 && q <= 2.0), "Prop6.1 needs q >= max(p,2), q > 2 if p = 2")?;
    if p < 2.0 {
        let eta = window_mid(inv(q), 1.0 / p, "Prop6.1 eta")?;
        let f0 = gm_loglog_profile(p, b + 1.0 / p + inv(q), eta);
        Ok(Witness {
            source: gm_besov_fourier_char(&f0, 1, 0.0, b + 1.0 / p, p, q)?,
            target: gm_sobolev_char(&f0, 1, 0.0, b + inv(q), p)?,
            family: WitnessFamily::Profile(f0),
            description: format!("radial GM profile with iterated log exponent {eta}"),
            source_space: format!("B^(0,{}) , p={p}, q={q}", b + 1.0 / p),
            target_space: format!("H^(0,{}) , p={p}", b + inv(q)),
        })
    } else {
        let delta = window_mid(inv(q), 0.5, "Prop6.1 delta")?;
        let seq = lac_envelope(b + 0.5 + inv(q), delta);
        Ok(Witness {
            source: lac_weighted(&seq, 0.0, b + 0.5, q),
            target: lac_weighted(&seq, 0.0, b + inv(q), 2.0),
            family: WitnessFamily::Lacunary(seq),
            description: format!("lacunary with log exponent {delta}"),
            source_space: format!("B^(0,{}) , q={q}", b + 0.5),
            target_space: format!("H^(0,{})", b + inv(q)),
        })
    }
}

/// `B^{0,b+1/q}` source vs diff-Besov `(0,b)` target.
fn witness_prop62(prm: &ClaimParams, _eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    need(q >= p.max(2.0) && !(p == 2.0 && q <= 2.0), "Prop6.2 needs q >= max(p,2), q > 2 if p = 2")?;
    if q > p {
        let beta = window_mid(inv(q).max(1.0 / p - b - inv(q)), 1.0 / p, "Prop6.2 beta")?;
        let f0 = gm_log_profile(p, b + inv(q) + beta);
        Ok(Witness {
            source: gm_besov_fourier_char(&f0, 1, 0.0, b + inv(q), p, q)?,
            target: gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?,
            family: WitnessFamily::Profile(f0),
            description: format!("radial GM profile, beta window midpoint {beta}"),
            source_space: format!("B^(0,{}) , p={p}, q={q}", b + inv(q)),
            target_space: format!("bB^(0,{b}) , p={p}, q={q}"),
        })
    } else {
        // q = p > 2: lacunary branch.
        let e = window_mid((1.0 / p).max(0.5 - 1.0 / p - b), 0.5, "Prop6.2 lacunary exponent")?;
        let seq = lac_envelope(b + 1.0 / p + e, 0.0);
        Ok(Witness {
            source: lac_weighted(&seq, 0.0, b + 1.0 / p, p),
            target: lac_norm_bbesov(&seq, 0.0, b, p)?,
            family: WitnessFamily::Lacunary(seq),
            description: format!("lacunary b_j = (1+j)^(-(b+1/p+{e}))"),
            source_space: format!("B^(0,{}) , q={p}", b + 1.0 / p),
            target_space: format!("bB^(0,{b}) , q={p}"),
        })
    }
}

/// Sharpness of the left embedding of the two-sided chain: cases (a) p = min
/// (GM) and (b) 2 = min (lacunary); the q = min case is predicate-only.
fn witness_prop71(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let eps = eps_of(prm, eps);
    need(eps > 0.0, "needs eps > 0")?;
    let min = p.min(2.0).min(q);
    if (min - p).abs() < 1e-12 && p <= 2.0 && p <= q {
        let hi = b + inv(q) + 1.0 / p;
        let beta = window_mid((1.0 / p).max(hi - eps), hi, "Prop7.1(a) beta")?;
        let f0 = gm_log_profile(p, beta);
        Ok(Witness {
            source: gm_besov_fourier_char(&f0, 1, 0.0, b + 1.0 / p - eps, p, q)?,
            target: gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?,
            family: WitnessFamily::Profile(f0),
            description: format!("radial GM profile L^(-{beta})"),
            source_space: format!("B^(0,{}) , p={p}, q={q}", b + 1.0 / p - eps),
            target_space: format!("bB^(0,{b})"),
        })
    } else if min == 2.0 {
        let hi = b + inv(q) + 0.5;
        let delta = window_mid(0.5f64.max(hi - eps), hi, "Prop7.1(b) delta")?;
        let seq = lac_envelope(delta, 0.0);
        Ok(Witness {
            source: lac_weighted(&seq, 0.0, b + 0.5 - eps, q),
            target: lac_norm_bbesov(&seq, 0.0, b, q)?,
            family: WitnessFamily::Lacunary(seq),
            description: format!("lacunary b_j = (1+j)^(-{delta})"),
            source_space: format!("B^(0,{}) , q={q}", b + 0.5 - eps),
            target_space: format!("bB^(0,{b})"),
        })
    } else {
        Err(Error::NoWitness(
            "Prop7.1 case q = min{2,p,q} is proved by interpolation; predicate-only".into(),
        ))
    }
}

/// Sharpness of the right embedding: cases (a) p = max (GM), (b) 2 = max
/// (lacunary); q = max is predicate-only.
fn witness_prop72(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let eps = eps_of(prm, eps);
    need(eps > 0.0, "needs eps > 0")?;
    let max = p.max(2.0).max(q);
    if (max - p).abs() < 1e-12 && p >= 2.0 && p >= q {
        let lo = b + inv(q) + 1.0 / p;
        let beta = window_mid(lo, lo + eps, "Prop7.2(a) beta")?;
        let f0 = gm_log_profile(p, beta);
        Ok(Witness {
            source: gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?,
            target: gm_besov_fourier_char(&f0, 1, 0.0, b + 1.0 / p + eps, p, q)?,
            family: WitnessFamily::Profile(f0),
            description: format!("radial GM profile L^(-{beta})"),
            source_space: format!("bB^(0,{b}) , p={p}, q={q}"),
            target_space: format!("B^(0,{})", b + 1.0 / p + eps),
        })
    } else if max == 2.0 {
        let lo = b + inv(q) + 0.5;
        let delta = window_mid(lo, lo + eps, "Prop7.2(b) delta")?;
        let seq = lac_envelope(delta, 0.0);
        Ok(Witness {
            source: lac_norm_bbesov(&seq, 0.0, b, q)?,
            target: lac_weighted(&seq, 0.0, b + 0.5 + eps, q),
            family: WitnessFamily::Lacunary(seq),
            description: format!("lacunary b_j = (1+j)^(-{delta})"),
            source_space: format!("bB^(0,{b})"),
            target_space: format!("B^(0,{}) , q={q}", b + 0.5 + eps),
        })
    } else {
        Err(Error::NoWitness(
            "Prop7.2 case q = max{2,p,q} is proved by duality; predicate-only".into(),
        ))
    }
}

/// Sobolev-embedding sharpness, source side (case a: p = min{p,q}).
fn witness_prop84(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (p0, p, q, b) = (prm.req("p0")?, prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let eps = eps_of(prm, eps);
    need(1.0 < p0 && p0 < p, "Prop8.4 needs 1 < p0 < p")?;
    need(p <= q, "Prop8.4(a) needs p = min{p,q}")?;
    need(eps > 0.0, "needs eps > 0")?;
    let s0 = 1.0 / p0 - 1.0 / p;
    let hi = b + 1.0 / p + inv(q);
    let beta = window_mid((1.0 / p).max(hi - eps), hi, "Prop8.4 beta")?;
    let f0 = PowerLogProfile::new(
        PowerLogPiece::new(1.0, -1.0 + 1.0 / p0 + 0.25, 0.0, 0.0),
        PowerLogPiece::new(1.0, -s0 + 1.0 / p0 - 1.0, -beta, 0.0),
    );
    Ok(Witness {
        source: gm_besov_fourier_char(&f0, 1, s0, b + 1.0 / p - eps, p0, q)?,
        target: gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?,
        family: WitnessFamily::Profile(f0),
        description: format!("radial GM profile, outer t^(-s0+1/p0-1) L^(-{beta})"),
        source_space: format!("B^({s0},{}) , p0={p0}, q={q}", b + 1.0 / p - eps),
        target_space: format!("bB^(0,{b}) , p={p}, q={q}"),
    })
}

/// Sobolev-embedding sharpness, target side (case a: p = max{p,q}).
fn witness_prop85(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (p, p1, q, b) = (prm.req("p")?, prm.req("p1")?, prm.req("q")?, prm.req("b")?);
    let eps = eps_of(prm, eps);
    need(p < p1 && p1.is_finite(), "Prop8.5 needs p < p1 < inf")?;
    need(q <= p, "Prop8.5(a) needs p = max{p,q}")?;
    need(eps > 0.0, "needs eps > 0")?;
    let s1 = 1.0 / p1 - 1.0 / p;
    let lo = b + inv(q) + 1.0 / p;
    let beta = window_mid(lo, lo + eps, "Prop8.5 beta")?;
    let f0 = PowerLogProfile::new(
        PowerLogPiece::new(1.0, -1.0 + 1.0 / p1 + 0.25, 0.0, 0.0),
        PowerLogPiece::new(1.0, -s1 + 1.0 / p1 - 1.0, -beta, 0.0),
    );
    Ok(Witness {
        source: gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?,
        target: gm_besov_fourier_char(&f0, 1, s1, b + 1.0 / p + eps, p1, q)?,
        family: WitnessFamily::Profile(f0),
        description: format!("radial GM profile, outer t^(-s1+1/p1-1) L^(-{beta})"),
        source_space: format!("bB^(0,{b}) , p={p}, q={q}"),
        target_space: format!("B^({s1},{}) , p1={p1}, q={q}", b + 1.0 / p + eps),
    })
}

/// GM Sobolev/Besov embedding only-if witness (into: fails for q < p).
fn witness_thm310new(prm: &ClaimParams, _eps: f64, into: bool) -> Result<Witness> {
    let (p, q, b, s) = (prm.req("p")?, prm.req("q")?, prm.req("b")?, prm.get("s").unwrap_or(0.3));
    let (lo, hi) = if into { (b + 1.0 / p, b + inv(q)) } else { (b + inv(q), b + 1.0 / p) };
    let beta = window_mid(lo, hi, "Thm3.10new beta")?;
    let f0 = PowerLogProfile::new(
        PowerLogPiece::new(1.0, 0.25 - 1.0 + 1.0 / p, 0.0, 0.0),
        PowerLogPiece::new(1.0, -s - 1.0 + 1.0 / p, -beta, 0.0),
    );
    let h = gm_sobolev_char(&f0, 1, s, b, p)?;
    let bf = gm_besov_fourier_char(&f0, 1, s, b, p, q)?;
    let (source, target, ss, ts) = if into {
        (h, bf, format!("H^({s},{b})"), format!("B^({s},{b}) , q={q}"))
    } else {
        (bf, h, format!("B^({s},{b}) , q={q}"), format!("H^({s},{b})"))
    };
    Ok(Witness {
        source,
        target,
        family: WitnessFamily::Profile(f0),
        description: format!("radial GM profile, outer t^(-s-1+1/p) L^(-{beta})"),
        source_space: ss,
        target_space: ts,
    })
}

/// GM `H^{0,b+1/q}` vs diff-Besov `(0,b)` only-if witness via iterated logs.
fn witness_thm310(prm: &ClaimParams, _eps: f64, into: bool) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let (lo, hi) = if into { (1.0 / p, inv(q)) } else { (inv(q), 1.0 / p) };
    let delta = window_mid(lo, hi, "Thm3.10 delta")?;
    let f0 = gm_loglog_profile(p, b + 1.0 / p + inv(q), delta);
    let h = gm_sobolev_char(&f0, 1, 0.0, b + inv(q), p)?;
    let bb = gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?;
    let (source, target, ss, ts) = if into {
        (h, bb, format!("H^(0,{})", b + inv(q)), format!("bB^(0,{b})"))
    } else {
        (bb, h, format!("bB^(0,{b})"), format!("H^(0,{})", b + inv(q)))
    };
    Ok(Witness {
        source,
        target,
        family: WitnessFamily::Profile(f0),
        description: format!("radial GM profile with iterated log exponent {delta}"),
        source_space: ss,
        target_space: ts,
    })
}

/// GM `B^{0,b+1/q}` = diff-Besov `(0,b)` only-if witness.
fn witness_sec68(prm: &ClaimParams, _eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    need((q - p).abs() > 1e-12, "the identity holds at q = p")?;
    if q < p {
        let beta = window_mid(b + inv(q) + 1.0 / p, b + 2.0 * inv(q), "Section6.8 beta (q<p)")?;
        let f0 = gm_log_profile(p, beta);
        Ok(Witness {
            source: gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?,
            target: gm_besov_fourier_char(&f0, 1, 0.0, b + inv(q), p, q)?,
            family: WitnessFamily::Profile(f0),
            description: format!("radial GM profile L^(-{beta})"),
            source_space: format!("bB^(0,{b})"),
            target_space: format!("B^(0,{})", b + inv(q)),
        })
    } else {
        let beta = window_mid((b + 2.0 * inv(q)).max(1.0 / p), b + 1.0 / p + inv(q), "Section6.8 beta (q>p)")?;
        let f0 = gm_log_profile(p, beta);
        Ok(Witness {
            source: gm_besov_fourier_char(&f0, 1, 0.0, b + inv(q), p, q)?,
            target: gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?,
            family: WitnessFamily::Profile(f0),
            description: format!("radial GM profile L^(-{beta})"),
            source_space: format!("B^(0,{})", b + inv(q)),
            target_space: format!("bB^(0,{b})"),
        })
    }
}

/// Lacunary `H^{0,b+1/q}` vs diff-Besov witnesses (`into` fails at q < 2).
fn witness_cor45(prm: &ClaimParams, _eps: f64, into: bool) -> Result<Witness> {
    let (q, b) = (prm.req("q")?, prm.req("b")?);
    let (lo, hi) = if into { (0.5, inv(q)) } else { (inv(q), 0.5) };
    let delta = window_mid(lo, hi, "Cor4.5 delta")?;
    let seq = lac_envelope(b + inv(q) + 0.5, delta);
    let h = lac_weighted(&seq, 0.0, b + inv(q), 2.0);
    let bb = lac_norm_bbesov(&seq, 0.0, b, q)?;
    let (source, target, ss, ts) = if into {
        (h, bb, format!("H^(0,{})", b + inv(q)), format!("bB^(0,{b}) , q={q}"))
    } else {
        (bb, h, format!("bB^(0,{b}) , q={q}"), format!("H^(0,{})", b + inv(q)))
    };
    Ok(Witness {
        source,
        target,
        family: WitnessFamily::Lacunary(seq),
        description: format!("lacunary with log exponent {delta}"),
        source_space: ss,
        target_space: ts,
    })
}

/// `GM ∩ B^{0,b} ⊄ L_p` witness for p < q, b ≤ 1/p - 1/q.
fn witness_embgm(prm: &ClaimParams, _eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    if p < q && b <= 1.0 / p - inv(q) {
        let delta = window_mid(inv(q), 1.0 / p, "EmbGM delta")?;
        let f0 = PowerLogProfile::new(
            PowerLogPiece::new(1.0, 0.25 - 1.0 + 1.0 / p, 0.0, 0.0),
            PowerLogPiece::new(1.0, -1.0 + 1.0 / p, -1.0 / p, -delta),
        );
        Ok(Witness {
            source: gm_besov_fourier_char(&f0, 1, 0.0, b, p, q)?,
            target: hl_norm(&f0, 1, p)?,
            family: WitnessFamily::Profile(f0),
            description: format!("radial GM profile with iterated log exponent {delta}"),
            source_space: format!("B^(0,{b}) , p={p}, q={q}"),
            target_space: format!("L_{p}"),
        })
    } else if q <= p && b < 1.0 / p - inv(q) {
        let gamma = window_mid(b + inv(q), 1.0 / p, "EmbGM gamma")?;
        let f0 = PowerLogProfile::new(
            PowerLogPiece::new(1.0, 0.25 - 1.0 + 1.0 / p, 0.0, 0.0),
            PowerLogPiece::new(1.0, -1.0 + 1.0 / p, -gamma, 0.0),
        );
        Ok(Witness {
            source: gm_besov_fourier_char(&f0, 1, 0.0, b, p, q)?,
            target: hl_norm(&f0, 1, p)?,
            family: WitnessFamily::Profile(f0),
            description: format!("radial GM profile L^(-{gamma})"),
            source_space: format!("B^(0,{b}) , p={p}, q={q}"),
            target_space: format!("L_{p}"),
        })
    } else {
        Err(Error::NoWitness(
            "EmbGM band q <= p, 1/p-1/q <= b < 0 is certified by indicator growth".into(),
        ))
    }
}

/// Indicator growth probe for the EmbGM band: the L_p/Besov characterization
/// ratio grows like `(1+log n)^{-b}`.
fn growth_embgm(prm: &ClaimParams) -> Result<GrowthWitness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let mut ratios = Vec::new();
    for nu in [8u32, 16, 32, 64] {
        let f0 = PowerLogProfile::indicator(2f64.powi(nu as i32));
        let lp = hl_norm(&f0, 1, p)?.value();
        let besov = gm_besov_fourier_char(&f0, 1, 0.0, b, p, q)?.value();
        ratios.push(lp / besov);
    }
    Ok(GrowthWitness {
        description: "indicator profiles chi_(0,2^nu): L_p over B^(0,b) characterization".into(),
        ratios,
    })
}

/// Lacunary `L_p` embedding witness for q > 2, b ≤ 1/2 - 1/q.
fn witness_embl(prm: &ClaimParams, _eps: f64) -> Result<Witness> {
    let (q, b) = (prm.req("q")?, prm.req("b")?);
    if q > 2.0 && b <= 0.5 - inv(q) {
        let beta = window_mid(inv(q), 0.5, "EmbL beta")?;
        let seq = lac_envelope(b + inv(q), beta);
        Ok(Witness {
            source: lac_weighted(&seq, 0.0, b, q),
            target: lac_weighted(&seq, 0.0, 0.0, 2.0),
            family: WitnessFamily::Lacunary(seq),
            description: format!("lacunary b_j = (1+j)^(-(b+1/q)) L^(-{beta})"),
            source_space: format!("B^(0,{b}) , q={q}"),
            target_space: "L_p".into(),
        })
    } else {
        Err(Error::NoWitness("EmbL branch q <= 2, b < 0 is certified by truncated growth".into()))
    }
}

fn growth_embl(prm: &ClaimParams) -> Result<GrowthWitness> {
    let (q, b) = (prm.req("q")?, prm.req("b")?);
    let wm = prm.get("wm").unwrap_or(0.0) > 0.5;
    let mut ratios = Vec::new();
    // 2^j coefficients cap the ladder well below f64 overflow.
    for n in [16u32, 32, 64, 96] {
        // Truncated lacunary: b_j = 2^j (plain class) or b_j = 1 (weak
        // monotone class), j = 3..n.
        let coeffs: Vec<(u32, num_complex::Complex64)> = (3..=n)
            .map(|j| {
                let v = if wm { 1.0 } else { 2f64.powi(j as i32) };
                (j, num_complex::Complex64::new(v, 0.0))
            })
            .collect();
        let seq = LacunarySeq::explicit(Convention::Continuous, coeffs);
        let lp = lac_weighted(&seq, 0.0, 0.0, 2.0).value();
        let besov = lac_weighted(&seq, 0.0, b, q).value();
        ratios.push(lp / besov);
    }
    Ok(GrowthWitness {
        description: "truncated lacunary families: L_p over B^(0,b) values".into(),
        ratios,
    })
}

/// Derivative loss witness (cases p = min{2,p,q} and 2 = min{2,p,q}).
fn witness_prop114(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let m = prm.get("m").unwrap_or(1.0) as u32;
    let eps = eps_of(prm, eps);
    need(m >= 1, "needs m >= 1")?;
    need(eps > 0.0, "needs eps > 0")?;
    let min = p.min(2.0).min(q);
    if (min - p).abs() < 1e-12 && p <= 2.0 && p <= q {
        let hi = b + inv(q) + 1.0 / p;
        let beta = window_mid((1.0 / p).max(hi - eps), hi, "Prop11.4 beta")?;
        let seq = GMSequence::cosine_profile(PowerLogPiece::new(
            1.0,
            -(m as f64) - 1.0 + 1.0 / p,
            -beta,
            0.0,
        ));
        let dseq = GMSequence::cosine_profile(PowerLogPiece::new(1.0, -1.0 + 1.0 / p, -beta, 0.0));
        Ok(Witness {
            source: gm_seq_bbesov_char(&seq, m as f64, b + 1.0 / p - eps, p, q)?,
            target: gm_seq_bbesov_char(&dseq, 0.0, b, p, q)?,
            family: WitnessFamily::Sequence(seq),
            description: format!("GM cosine series a_n = n^(-m-1+1/p) L^(-{beta})"),
            source_space: format!("bB^({m},{}) (T)", b + 1.0 / p - eps),
            target_space: format!("bB^(0,{b}) (T) for the m-th derivative"),
        })
    } else if min == 2.0 {
        let hi = b + inv(q) + 0.5;
        let delta = window_mid(0.5f64.max(hi - eps), hi, "Prop11.4 delta")?;
        let seq = LacunarySeq::envelope(
            Convention::Periodic,
            0.5f64.powi(m as i32),
            PowerLogPiece::new(1.0, -delta, 0.0, 0.0),
        );
        let dseq = LacunarySeq::envelope(Convention::Periodic, 1.0, PowerLogPiece::new(1.0, -delta, 0.0, 0.0));
        Ok(Witness {
            source: lac_weighted(&seq, m as f64, b + 0.5 - eps, q),
            target: lac_norm_bbesov(&dseq, 0.0, b, q)?,
            family: WitnessFamily::Lacunary(seq),
            description: format!("lacunary a_(2^j) = 2^(-jm)(1+j)^(-{delta})"),
            source_space: format!("bB^({m},{}) (T)", b + 0.5 - eps),
            target_space: format!("bB^(0,{b}) (T) for the m-th derivative"),
        })
    } else {
        Err(Error::NoWitness("Prop11.4 case q = min is proved by interpolation; predicate-only".into()))
    }
}

/// Converse derivative-loss witness (p = max / 2 = max cases).
fn witness_prop114new(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let m = prm.get("m").unwrap_or(1.0) as u32;
    let eps = eps_of(prm, eps);
    need(eps > 0.0, "needs eps > 0")?;
    let max = p.max(2.0).max(q);
    if (max - p).abs() < 1e-12 && p >= 2.0 && p >= q {
        let lo = b + inv(q) + 1.0 / p;
        let beta = window_mid(lo, lo + eps, "Prop11.4new beta")?;
        let seq = GMSequence::cosine_profile(PowerLogPiece::new(
            1.0,
            -(m as f64) - 1.0 + 1.0 / p,
            -beta,
            0.0,
        ));
        let dseq = GMSequence::cosine_profile(PowerLogPiece::new(1.0, -1.0 + 1.0 / p, -beta, 0.0));
        Ok(Witness {
            source: gm_seq_bbesov_char(&dseq, 0.0, b, p, q)?,
            target: gm_seq_bbesov_char(&seq, m as f64, b + 1.0 / p + eps, p, q)?,
            family: WitnessFamily::Sequence(seq),
            description: format!("GM cosine series a_n = n^(-m-1+1/p) L^(-{beta})"),
            source_space: format!("bB^(0,{b}) (T) for the m-th derivative"),
            target_space: format!("bB^({m},{}) (T)", b + 1.0 / p + eps),
        })
    } else if max == 2.0 {
        let lo = b + inv(q) + 0.5;
        let delta = window_mid(lo, lo + eps, "Prop11.4new delta")?;
        let seq = LacunarySeq::envelope(
            Convention::Periodic,
            0.5f64.powi(m as i32),
            PowerLogPiece::new(1.0, -delta, 0.0, 0.0),
        );
        let dseq = LacunarySeq::envelope(Convention::Periodic, 1.0, PowerLogPiece::new(1.0, -delta, 0.0, 0.0));
        Ok(Witness {
            source: lac_norm_bbesov(&dseq, 0.0, b, q)?,
            target: lac_weighted(&seq, m as f64, b + 0.5 + eps, q),
            family: WitnessFamily::Lacunary(seq),
            description: format!("lacunary a_(2^j) = 2^(-jm)(1+j)^(-{delta})"),
            source_space: format!("bB^(0,{b}) (T) for the m-th derivative"),
            target_space: format!("bB^({m},{}) (T)", b + 0.5 + eps),
        })
    } else {
        Err(Error::NoWitness("Prop11.4new case q = max is predicate-only".into()))
    }
}

/// Bessel-potential lift sharpness (via the lift identity, membership pairs
/// computed on the unlifted spectrum): cases p = max / 2 = max.
fn witness_prop122(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let eps = eps_of(prm, eps);
    need(eps > 0.0, "needs eps > 0")?;
    let max = p.max(2.0).max(q);
    if (max - p).abs() < 1e-12 && p >= 2.0 && p >= q {
        let lo = b + inv(q) + 1.0 / p;
        let beta = window_mid(lo, lo + eps, "Prop12.2 beta")?;
        let f0 = gm_log_profile(p, beta);
        Ok(Witness {
            source: gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?,
            target: gm_besov_fourier_char(&f0, 1, 0.0, b + 1.0 / p + eps, p, q)?,
            family: WitnessFamily::Profile(f0),
            description: format!("radial GM profile L^(-{beta}); lift identity carries B^(0,.) to B^(-sigma,.)"),
            source_space: format!("bB^(0,{b})"),
            target_space: format!("B^(-sigma,{}) via lift", b + 1.0 / p + eps),
        })
    } else if max == 2.0 {
        let lo = b + inv(q) + 0.5;
        let delta = window_mid(lo, lo + eps, "Prop12.2 delta")?;
        let seq = lac_envelope(delta, 0.0);
        Ok(Witness {
            source: lac_norm_bbesov(&seq, 0.0, b, q)?,
            target: lac_weighted(&seq, 0.0, b + 0.5 + eps, q),
            family: WitnessFamily::Lacunary(seq),
            description: format!("lacunary b_j = (1+j)^(-{delta}); lift identity"),
            source_space: format!("bB^(0,{b})"),
            target_space: format!("B^(-sigma,{}) via lift", b + 0.5 + eps),
        })
    } else {
        Err(Error::NoWitness("Prop12.2 case q = max is proved by interpolation; predicate-only".into()))
    }
}

fn witness_prop123(prm: &ClaimParams, eps: f64) -> Result<Witness> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let eps = eps_of(prm, eps);
    need(eps > 0.0, "needs eps > 0")?;
    let min = p.min(2.0).min(q);
    if (min - p).abs() < 1e-12 && p <= 2.0 && p <= q {
        let hi = b + inv(q) + 1.0 / p;
        let beta = window_mid((1.0 / p).max(hi - eps), hi, "Prop12.3 beta")?;
        let f0 = gm_log_profile(p, beta);
        Ok(Witness {
            source: gm_besov_fourier_char(&f0, 1, 0.0, b + 1.0 / p - eps, p, q)?,
            target: gm_besov_diff_char(&f0, 1, 0.0, b, p, q)?,
            family: WitnessFamily::Profile(f0),
            description: format!("radial GM profile L^(-{beta}); lift identity carries B^(sigma,.) down"),
            source_space: format!("B^(sigma,{}) via lift", b + 1.0 / p - eps),
            target_space: format!("bB^(0,{b})"),
        })
    } else if min == 2.0 {
        let hi = b + inv(q) + 0.5;
        let delta = window_mid(0.5f64.max(hi - eps), hi, "Prop12.3 delta")?;
        let seq = lac_envelope(delta, 0.0);
        Ok(Witness {
            source: lac_weighted(&seq, 0.0, b + 0.5 - eps, q),
            target: lac_norm_bbesov(&seq, 0.0, b, q)?,
            family: WitnessFamily::Lacunary(seq),
            description: format!("lacunary b_j = (1+j)^(-{delta}); lift identity"),
            source_space: format!("B^(sigma,{}) via lift", b + 0.5 - eps),
            target_space: format!("bB^(0,{b})"),
        })
    } else {
        Err(Error::NoWitness("Prop12.3 case q = min is predicate-only".into()))
    }
}

/// Lacunary witness for the Besov-vs-Besov fine-index optimality clauses.
fn witness_recall_star(prm: &ClaimParams, _eps: f64) -> Result<Witness> {
    let (q0, q1) = (prm.req("q0")?, prm.req("q1")?);
    let (s0, s1) = (prm.req("s0")?, prm.req("s1")?);
    let (b0, b1) = (prm.req("b0")?, prm.req("b1")?);
    if s0 < s1 {
        let mid = 0.5 * (s0 + s1);
        let seq = LacunarySeq::envelope(
            Convention::Continuous,
            0.5f64.powf(mid),
            PowerLogPiece::new(1.0, 0.0, 0.0, 0.0),
        );
        return Ok(Witness {
            source: lac_weighted(&seq, s0, b0, q0),
            target: lac_weighted(&seq, s1, b1, q1),
            family: WitnessFamily::Lacunary(seq),
            description: format!("lacunary b_j = 2^(-j*{mid})"),
            source_space: format!("B^({s0},{b0}) , q={q0}"),
            target_space: format!("B^({s1},{b1}) , q={q1}"),
        });
    }
    if (s0 - s1).abs() < 1e-12 && q0 > q1 && b0 + 1.0 / q0 <= b1 + 1.0 / q1 {
        let beta = window_mid(inv(q0), inv(q1), "RecallEmbStar beta")?;
        let seq = LacunarySeq::envelope(
            Convention::Continuous,
            0.5f64.powf(s0),
            PowerLogPiece::new(1.0, -(b0 + inv(q0)), -beta, 0.0),
        );
        return Ok(Witness {
            source: lac_weighted(&seq, s0, b0, q0),
            target: lac_weighted(&seq, s1, b1, q1),
            family: WitnessFamily::Lacunary(seq),
            description: format!("lacunary 2^(-js)(1+j)^(-(b0+1/q0)) L^(-{beta})"),
            source_space: format!("B^({s0},{b0}) , q={q0}"),
            target_space: format!("B^({s1},{b1}) , q={q1}"),
        });
    }
    Err(Error::NoWitness(
        "this branch of the fine-index optimality uses truncated growth families".into(),
    ))
}

// ---------------------------------------------------------------------------
// Holds-branch probes
// ---------------------------------------------------------------------------

/// Space tags the GM characterization engine can evaluate at d = 1.
#[derive(Debug, Clone, Copy)]
enum CharSpace {
    BDiff { s: f64, b: f64, q: f64 },
    BFourier { s: f64, b: f64, q: f64 },
    Sobolev { s: f64, b: f64 },
    Lp,
}

impl CharSpace {
    fn value(&self, f0: &PowerLogProfile, p: f64) -> Result<FiniteVerdict> {
        match *self {
            CharSpace::BDiff { s, b, q } => gm_besov_diff_char(f0, 1, s, b, p, q),
            CharSpace::BFourier { s, b, q } => gm_besov_fourier_char(f0, 1, s, b, p, q),
            CharSpace::Sobolev { s, b } => gm_sobolev_char(f0, 1, s, b, p),
            CharSpace::Lp => hl_norm(f0, 1, p),
        }
    }
}

/// Random strongly convergent GM profile for ratio probes.
fn probe_profile(rng: &mut impl rand::Rng, p: f64) -> PowerLogProfile {
    let a_out = rng.gen_range(-2.6..-1.9);
    let b_out = rng.gen_range(-1.0..1.0);
    let a_in = 0.5 * (1.0 / p - 1.0) + 0.25; // head integral converges
    PowerLogProfile::new(
        PowerLogPiece::new(1.0, a_in, 0.0, 0.0),
        PowerLogPiece::new(rng.gen_range(0.5..2.0), a_out, b_out, 0.0),
    )
}

fn ratio_probe(source: CharSpace, target: CharSpace, p: f64, seed: u64, samples: usize) -> Result<ProbeReport> {
    let mut rng = crate::family::stream_rng(seed, "catalog-probe");
    let mut max_ratio: f64 = 0.0;
    for _ in 0..samples {
        let f0 = probe_profile(&mut rng, p);
        let s = source.value(&f0, p)?;
        let t = target.value(&f0, p)?;
        if !s.finite || !t.finite || s.value() == 0.0 {
            continue;
        }
        max_ratio = max_ratio.max(t.value() / s.value());
    }
    Ok(ProbeReport { max_ratio, samples })
}

fn probe_cor23_into(prm: &ClaimParams, seed: u64, samples: usize) -> Result<ProbeReport> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    ratio_probe(
        CharSpace::Sobolev { s: 0.0, b: b + inv(q) },
        CharSpace::BDiff { s: 0.0, b, q },
        p,
        seed,
        samples,
    )
}

fn probe_cor23_from(prm: &ClaimParams, seed: u64, samples: usize) -> Result<ProbeReport> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    ratio_probe(
        CharSpace::BDiff { s: 0.0, b, q },
        CharSpace::Sobolev { s: 0.0, b: b + inv(q) },
        p,
        seed,
        samples,
    )
}

fn probe_eq1_left(prm: &ClaimParams, seed: u64, samples: usize) -> Result<ProbeReport> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let xi = prm.get("xi").unwrap_or(b + inv(q.min(p).min(2.0)));
    ratio_probe(
        CharSpace::BFourier { s: 0.0, b: xi, q },
        CharSpace::BDiff { s: 0.0, b, q },
        p,
        seed,
        samples,
    )
}

fn probe_eq1_right(prm: &ClaimParams, seed: u64, samples: usize) -> Result<ProbeReport> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    let xi = prm.get("xi").unwrap_or(b + inv(q.max(p).max(2.0)));
    ratio_probe(
        CharSpace::BDiff { s: 0.0, b, q },
        CharSpace::BFourier { s: 0.0, b: xi, q },
        p,
        seed,
        samples,
    )
}

fn probe_embgm(prm: &ClaimParams, seed: u64, samples: usize) -> Result<ProbeReport> {
    let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
    ratio_probe(CharSpace::BFourier { s: 0.0, b, q }, CharSpace::Lp, p, seed, samples)
}

fn probe_identity(_prm: &ClaimParams, _seed: u64, samples: usize) -> Result<ProbeReport> {
    Ok(ProbeReport { max_ratio: 1.0, samples })
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

fn pred_sharp22(prm: &ClaimParams) -> bool {
    let (p, q) = (prm.get("p").unwrap(), prm.get("q").unwrap());
    q >= p.max(2.0)
}

fn pred_sharp23(prm: &ClaimParams) -> bool {
    let (p, q) = (prm.get("p").unwrap(), prm.get("q").unwrap());
    q <= p.min(2.0)
}

fn pred_identity_case(prm: &ClaimParams) -> bool {
    let (p, q) = (prm.get("p").unwrap(), prm.get("q").unwrap());
    let b = prm.get("b").unwrap_or(0.0);
    let xi = prm.get("xi").unwrap_or(f64::NAN);
    p == 2.0 && q == 2.0 && (xi - (b + 0.5)).abs() < 1e-12
}

fn pred_loc(prm: &ClaimParams) -> bool {
    let (p, q, b) = (
        prm.get("p").unwrap(),
        prm.get("q").unwrap(),
        prm.get("b").unwrap(),
    );
    if q <= p.min(2.0) {
        b >= 0.0
    } else if p <= 2.0 && q > p {
        b > 1.0 / p - inv(q)
    } else {
        // 2 < p and 2 < q
        b > 0.5 - inv(q)
    }
}

static REGISTRY: OnceLock<Vec<EmbeddingClaim>> = OnceLock::new();

/// The claim registry; entries are addressed by id.
pub fn registry() -> &'static [EmbeddingClaim] {
    REGISTRY.get_or_init(build_registry).as_slice()
}

pub fn find_claim(id: &str) -> Result<&'static EmbeddingClaim> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

fn build_registry() -> Vec<EmbeddingClaim> {
    vec![
        EmbeddingClaim {
            id: "identity",
            summary: "trivial identity embedding X into X",
            default_grids: &[&[("p", 2.0), ("q", 2.0), ("b", 0.0)]],
            domain: |_| Ok(()),
            predicate: |_| true,
            witness: WitnessKind::None,
            probe: Some(probe_identity),
        },
        EmbeddingClaim {
            id: "RecallEmb-i",
            summary: "F^(s,b)_(p,r) into B^(s,b)_(p,q) iff q >= max(p,r)",
            default_grids: &[
                &[("p", 2.0), ("q", 2.0), ("r", 2.0)],
                &[("p", 3.0), ("q", 2.0), ("r", 2.0)],
            ],
            domain: |prm| {
                let p = prm.req("p")?;
                let (q, r) = (prm.req("q")?, prm.req("r")?);
                need(p > 1.0 && p.is_finite() && q > 0.0 && r > 0.0, "needs 1<p<inf, q,r>0")
            },
            predicate: |prm| {
                let (p, q, r) = (prm.get("p").unwrap(), prm.get("q").unwrap(), prm.get("r").unwrap());
                q >= p.max(r)
            },
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "RecallEmb-ii",
            summary: "B^(s,b)_(p,q) into F^(s,b)_(p,r) iff q <= min(p,r)",
            default_grids: &[&[("p", 2.0), ("q", 2.0), ("r", 2.0)]],
            domain: |prm| {
                let p = prm.req("p")?;
                let (q, r) = (prm.req("q")?, prm.req("r")?);
                need(p > 1.0 && p.is_finite() && q > 0.0 && r > 0.0, "needs 1<p<inf, q,r>0")
            },
            predicate: |prm| {
                let (p, q, r) = (prm.get("p").unwrap(), prm.get("q").unwrap(), prm.get("r").unwrap());
                q <= p.min(r)
            },
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "RecallEmbStar",
            summary: "B^(s0,b0)_(p,q0) into B^(s1,b1)_(p,q1) iff s0>s1, or s0=s1,q0<=q1,b0>=b1, or s0=s1,q0>q1,b0+1/q0>b1+1/q1",
            default_grids: &[
                &[("p", 2.0), ("q0", 2.0), ("q1", 2.0), ("s0", 0.5), ("s1", 0.5), ("b0", 0.0), ("b1", 0.0)],
                &[("p", 2.0), ("q0", 4.0), ("q1", 2.0), ("s0", 0.5), ("s1", 0.5), ("b0", 0.0), ("b1", 0.1)],
                &[("p", 2.0), ("q0", 2.0), ("q1", 2.0), ("s0", 0.3), ("s1", 0.6), ("b0", 0.0), ("b1", 0.0)],
            ],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite(), "needs 1 < p < inf")?;
                for key in ["q0", "q1", "s0", "s1", "b0", "b1"] {
                    prm.req(key)?;
                }
                Ok(())
            },
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (s0, s1, q0, q1, b0, b1) = (g("s0"), g("s1"), g("q0"), g("q1"), g("b0"), g("b1"));
                s0 > s1
                    || (s0 == s1 && q0 <= q1 && b0 >= b1)
                    || (s0 == s1 && q0 > q1 && b0 + inv(q0) > b1 + inv(q1))
            },
            witness: WitnessKind::Pair(witness_recall_star),
            probe: None,
        },
        EmbeddingClaim {
            id: "RecallEmbStarStar",
            summary: "diff-Besov fine-index embedding iff conditions, including the s=0 clauses",
            default_grids: &[
                &[("p", 2.0), ("q0", 1.0), ("q1", 2.0), ("s0", 0.0), ("s1", 0.0), ("b0", 0.5), ("b1", 0.0)],
                &[("p", 2.0), ("q0", 4.0), ("q1", 2.0), ("s0", 0.0), ("s1", 0.0), ("b0", 0.25), ("b1", 0.0)],
            ],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite(), "needs 1 < p < inf")?;
                let (s0, s1) = (prm.req("s0")?, prm.req("s1")?);
                need(s0 >= 0.0 && s1 >= 0.0, "needs s0, s1 >= 0")?;
                let (q0, q1) = (prm.req("q0")?, prm.req("q1")?);
                let (b0, b1) = (prm.req("b0")?, prm.req("b1")?);
                if s0 == 0.0 {
                    need(b0 >= -inv(q0), "needs b0 >= -1/q0 at s0 = 0")?;
                }
                if s1 == 0.0 {
                    need(b1 >= -inv(q1), "needs b1 >= -1/q1 at s1 = 0")?;
                }
                Ok(())
            },
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (s0, s1, q0, q1, b0, b1) = (g("s0"), g("s1"), g("q0"), g("q1"), g("b0"), g("b1"));
                s0 > s1
                    || (s0 == s1 && s0 > 0.0 && q0 <= q1 && b0 >= b1)
                    || (s0 == s1 && s0 > 0.0 && q0 > q1 && b0 + inv(q0) > b1 + inv(q1))
                    || (s0 == 0.0 && s1 == 0.0 && b0 + inv(q0) > b1 + inv(q1))
                    || (s0 == 0.0 && s1 == 0.0 && b0 + inv(q0) == b1 + inv(q1) && q0 <= q1)
            },
            witness: WitnessKind::Pair(|prm, _eps| {
                let g = |k: &str| prm.get(k).unwrap();
                let (s0, s1, q0, q1, b0, b1) = (g("s0"), g("s1"), g("q0"), g("q1"), g("b0"), g("b1"));
                if s0 == 0.0 && s1 == 0.0 && b0 + inv(q0) < b1 + inv(q1) {
                    let beta = window_mid(0.5 + b0 + inv(q0), 0.5 + b1 + inv(q1), "beta")?;
                    let seq = lac_envelope(beta, 0.0);
                    return Ok(Witness {
                        source: lac_norm_bbesov(&seq, 0.0, b0, q0)?,
                        target: lac_norm_bbesov(&seq, 0.0, b1, q1)?,
                        family: WitnessFamily::Lacunary(seq),
                        description: format!("lacunary b_j = (1+j)^(-{beta})"),
                        source_space: format!("bB^(0,{b0}) , q={q0}"),
                        target_space: format!("bB^(0,{b1}) , q={q1}"),
                    });
                }
                if s0 == 0.0 && s1 == 0.0 && b0 + inv(q0) == b1 + inv(q1) && q0 > q1 {
                    need(b0 + inv(q0) > 0.0, "critical clause needs b0 + 1/q0 > 0")?;
                    let beta = window_mid(inv(q0), inv(q1), "beta")?;
                    let seq = lac_envelope(0.5 + b0 + inv(q0), beta);
                    return Ok(Witness {
                        source: lac_norm_bbesov(&seq, 0.0, b0, q0)?,
                        target: lac_norm_bbesov(&seq, 0.0, b1, q1)?,
                        family: WitnessFamily::Lacunary(seq),
                        description: format!("lacunary with iterated exponent {beta}"),
                        source_space: format!("bB^(0,{b0}) , q={q0}"),
                        target_space: format!("bB^(0,{b1}) , q={q1}"),
                    });
                }
                if s0 < s1 {
                    // Covers s0 = 0 < s1 with a power-log envelope.
                    if s0 == 0.0 {
                        let beta = 0.5 + b0 + inv(q0) + 0.5;
                        let seq = lac_envelope(beta, 0.0);
                        return Ok(Witness {
                            source: lac_norm_bbesov(&seq, 0.0, b0, q0)?,
                            target: lac_weighted(&seq, s1, b1, q1),
                            family: WitnessFamily::Lacunary(seq),
                            description: format!("lacunary b_j = (1+j)^(-{beta})"),
                            source_space: format!("bB^(0,{b0})"),
                            target_space: format!("bB^({s1},{b1})"),
                        });
                    }
                    let mid = 0.5 * (s0 + s1);
                    let seq = LacunarySeq::envelope(
                        Convention::Continuous,
                        0.5f64.powf(mid),
                        PowerLogPiece::new(1.0, 0.0, 0.0, 0.0),
                    );
                    return Ok(Witness {
                        source: lac_weighted(&seq, s0, b0, q0),
                        target: lac_weighted(&seq, s1, b1, q1),
                        family: WitnessFamily::Lacunary(seq),
                        description: format!("lacunary b_j = 2^(-j*{mid})"),
                        source_space: format!("bB^({s0},{b0})"),
                        target_space: format!("bB^({s1},{b1})"),
                    });
                }
                Err(Error::NoWitness("remaining clauses use truncated growth families".into()))
            }),
            probe: None,
        },
        EmbeddingClaim {
            id: "Cor2.3-into",
            summary: "H^(0,b+1/q)_p into diff-Besov (0,b) iff q >= max(p,2)",
            default_grids: &[&[("p", 2.0), ("q", 4.0), ("b", 0.0)], &[("p", 3.0), ("q", 2.0), ("b", 0.0)]],
            domain: base_domain,
            predicate: pred_sharp22,
            witness: WitnessKind::Pair(|prm, eps| {
                let (p, q) = (prm.req("p")?, prm.req("q")?);
                if q < p {
                    witness_thm310(prm, eps, true)
                } else if q < 2.0 {
                    witness_cor45(prm, eps, true)
                } else {
                    Err(Error::DomainError("predicate holds here".into()))
                }
            }),
            probe: Some(probe_cor23_into),
        },
        EmbeddingClaim {
            id: "Cor2.3-from",
            summary: "diff-Besov (0,b) into H^(0,b+1/q)_p iff q <= min(p,2)",
            default_grids: &[&[("p", 2.0), ("q", 1.0), ("b", 0.0)], &[("p", 2.0), ("q", 4.0), ("b", 0.0)]],
            domain: base_domain,
            predicate: pred_sharp23,
            witness: WitnessKind::Pair(|prm, eps| {
                let (p, q) = (prm.req("p")?, prm.req("q")?);
                if q > p {
                    witness_thm310(prm, eps, false)
                } else if q > 2.0 {
                    witness_cor45(prm, eps, false)
                } else {
                    Err(Error::DomainError("predicate holds here".into()))
                }
            }),
            probe: Some(probe_cor23_from),
        },
        EmbeddingClaim {
            id: "Thm6.6-Sharp2.2New",
            summary: "same iff as Cor2.3-into (sharp form)",
            default_grids: &[&[("p", 2.0), ("q", 2.0), ("b", 0.0)], &[("p", 3.0), ("q", 2.0), ("b", 0.0)]],
            domain: base_domain,
            predicate: pred_sharp22,
            witness: WitnessKind::Pair(|prm, eps| {
                let (p, q) = (prm.req("p")?, prm.req("q")?);
                if q < p {
                    witness_thm310(prm, eps, true)
                } else if q < 2.0 {
                    witness_cor45(prm, eps, true)
                } else {
                    Err(Error::DomainError("predicate holds here".into()))
                }
            }),
            probe: Some(probe_cor23_into),
        },
        EmbeddingClaim {
            id: "Thm6.6-Sharp2.3New",
            summary: "same iff as Cor2.3-from (sharp form)",
            default_grids: &[&[("p", 2.0), ("q", 2.0), ("b", 0.0)], &[("p", 2.0), ("q", 3.0), ("b", 0.0)]],
            domain: base_domain,
            predicate: pred_sharp23,
            witness: WitnessKind::Pair(|prm, eps| {
                let (p, q) = (prm.req("p")?, prm.req("q")?);
                if q > p {
                    witness_thm310(prm, eps, false)
                } else if q > 2.0 {
                    witness_cor45(prm, eps, false)
                } else {
                    Err(Error::DomainError("predicate holds here".into()))
                }
            }),
            probe: Some(probe_cor23_from),
        },
        EmbeddingClaim {
            id: "Thm6.6-SharpBesovSobolevNew",
            summary: "diff-Besov (0,b) equals H^(0,xi) iff p=q=2 and xi=b+1/2",
            default_grids: &[&[("p", 2.0), ("q", 2.0), ("b", 0.0), ("xi", 0.5)]],
            domain: base_domain,
            predicate: pred_identity_case,
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "Thm7.3",
            summary: "diff-Besov (0,b) equals B^(0,xi) iff p=q=2 and xi=b+1/2",
            default_grids: &[
                &[("p", 2.0), ("q", 2.0), ("b", 0.0), ("xi", 0.5)],
                &[("p", 2.0), ("q", 4.0), ("b", 0.0), ("xi", 0.25)],
            ],
            domain: base_domain,
            predicate: pred_identity_case,
            witness: WitnessKind::Pair(|prm, eps| {
                let q = prm.req("q")?;
                if q > 2.0 {
                    // One strict inclusion: B^(0,b+1/q) not inside bB^(0,b).
                    let mut sub = prm.clone();
                    sub.set("xi", 0.0);
                    witness_prop62(&sub, eps)
                } else {
                    Err(Error::NoWitness(
                        "remaining branches of the identity claim use interpolation; predicate-only".into(),
                    ))
                }
            }),
            probe: None,
        },
        EmbeddingClaim {
            id: "Eq1-left",
            summary: "B^(0,xi) into diff-Besov (0,b) iff xi >= b + 1/min(2,p,q)",
            default_grids: &[
                &[("p", 2.0), ("q", 2.0), ("b", 0.0), ("xi", 0.5)],
                &[("p", 1.5), ("q", 2.0), ("b", 0.0), ("xi", 0.4)],
            ],
            domain: base_domain,
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (p, q, b) = (g("p"), g("q"), g("b"));
                let xi = prm.get("xi").unwrap_or(b + inv(p.min(2.0).min(q)));
                xi >= b + inv(p.min(2.0).min(q))
            },
            witness: WitnessKind::Pair(|prm, eps| {
                let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
                let threshold = b + inv(p.min(2.0).min(q));
                let xi = prm.get("xi").unwrap_or(threshold - eps);
                let mut sub = prm.clone();
                sub.set("eps", threshold - xi);
                witness_prop71(&sub, threshold - xi)
            }),
            probe: Some(probe_eq1_left),
        },
        EmbeddingClaim {
            id: "Eq1-right",
            summary: "diff-Besov (0,b) into B^(0,xi) iff xi <= b + 1/max(2,p,q)",
            default_grids: &[
                &[("p", 2.0), ("q", 2.0), ("b", 0.0), ("xi", 0.5)],
                &[("p", 4.0), ("q", 2.0), ("b", 0.0), ("xi", 0.5)],
            ],
            domain: base_domain,
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (p, q, b) = (g("p"), g("q"), g("b"));
                let xi = prm.get("xi").unwrap_or(b + inv(p.max(2.0).max(q)));
                xi <= b + inv(p.max(2.0).max(q))
            },
            witness: WitnessKind::Pair(|prm, eps| {
                let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
                let threshold = b + inv(p.max(2.0).max(q));
                let xi = prm.get("xi").unwrap_or(threshold + eps);
                let mut sub = prm.clone();
                sub.set("eps", xi - threshold);
                witness_prop72(&sub, xi - threshold)
            }),
            probe: Some(probe_eq1_right),
        },
        EmbeddingClaim {
            id: "Prop5.1",
            summary: "H^(0,b+1/q-eps) not into diff-Besov (0,b) for p <= q (GM witness)",
            default_grids: &[&[("p", 2.0), ("q", 4.0), ("b", 0.0), ("eps", 0.25)]],
            domain: |prm| {
                base_domain(prm)?;
                need(prm.req("p")? <= prm.req("q")?, "needs p <= q")?;
                need(prm.get("eps").unwrap_or(0.25) > 0.0, "needs eps > 0")
            },
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop51),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop5.2",
            summary: "H^(0,b+1/q-eps) not into diff-Besov (0,b) for q >= 2 (lacunary witness)",
            default_grids: &[&[("p", 2.0), ("q", 4.0), ("b", 0.0), ("eps", 0.25)]],
            domain: |prm| {
                base_domain(prm)?;
                need(prm.req("q")? >= 2.0, "needs q >= 2")?;
                need(prm.get("eps").unwrap_or(0.25) > 0.0, "needs eps > 0")
            },
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop52),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop5.4",
            summary: "diff-Besov (0,b) not into H^(0,b+1/q+eps) for q <= p (GM witness)",
            default_grids: &[&[("p", 2.0), ("q", 2.0), ("b", 0.0), ("eps", 0.25)]],
            domain: |prm| {
                base_domain(prm)?;
                need(prm.req("q")? <= prm.req("p")?, "needs q <= p")?;
                need(prm.get("eps").unwrap_or(0.25) > 0.0, "needs eps > 0")
            },
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop54),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop5.5",
            summary: "diff-Besov (0,b) not into H^(0,b+1/q+eps) for q <= 2 (lacunary witness)",
            default_grids: &[&[("p", 2.0), ("q", 2.0), ("b", 0.0), ("eps", 0.25)]],
            domain: |prm| {
                base_domain(prm)?;
                need(prm.req("q")? <= 2.0, "needs q <= 2")?;
                need(prm.get("eps").unwrap_or(0.25) > 0.0, "needs eps > 0")
            },
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop55),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop6.1",
            summary: "B^(0,b+1/min(2,p)) and H^(0,b+1/q) are not comparable (part ii witness)",
            default_grids: &[
                &[("p", 1.5), ("q", 4.0), ("b", 0.0)],
                &[("p", 3.0), ("q", 4.0), ("b", 0.0)],
            ],
            domain: |prm| {
                base_domain(prm)?;
                let (p, q) = (prm.req("p")?, prm.req("q")?);
                need(q >= p.max(2.0) && !(p == 2.0 && q <= 2.0), "needs q >= max(p,2), q > 2 if p = 2")
            },
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop61_ii),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop6.2",
            summary: "B^(0,b+1/q) not into diff-Besov (0,b) for q >= max(p,2)",
            default_grids: &[
                &[("p", 2.0), ("q", 4.0), ("b", 0.0)],
                &[("p", 3.0), ("q", 3.0), ("b", 0.0)],
            ],
            domain: |prm| {
                base_domain(prm)?;
                let (p, q) = (prm.req("p")?, prm.req("q")?);
                need(q >= p.max(2.0) && !(p == 2.0 && q <= 2.0), "needs q >= max(p,2), q > 2 if p = 2")
            },
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop62),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop7.1",
            summary: "B^(0,b+1/min(2,p,q)-eps) not into diff-Besov (0,b); cases p-min and 2-min",
            default_grids: &[
                &[("p", 1.5), ("q", 2.0), ("b", 0.0), ("eps", 0.25)],
                &[("p", 3.0), ("q", 4.0), ("b", 0.0), ("eps", 0.25)],
            ],
            domain: base_domain,
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop71),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop7.2",
            summary: "diff-Besov (0,b) not into B^(0,b+1/max(2,p,q)+eps); cases p-max and 2-max",
            default_grids: &[
                &[("p", 4.0), ("q", 2.0), ("b", 0.0), ("eps", 0.25)],
                &[("p", 1.5), ("q", 2.0), ("b", 0.0), ("eps", 0.25)],
            ],
            domain: base_domain,
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop72),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop8.4",
            summary: "Sobolev-embedding source sharpness (case a, p = min(p,q))",
            default_grids: &[&[("p0", 1.5), ("p", 2.0), ("q", 4.0), ("b", 0.0), ("eps", 0.25)]],
            domain: |prm| {
                base_domain(prm)?;
                let (p0, p) = (prm.req("p0")?, prm.req("p")?);
                need(1.0 < p0 && p0 < p, "needs 1 < p0 < p")
            },
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop84),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop8.5",
            summary: "Sobolev-embedding target sharpness (case a, p = max(p,q))",
            default_grids: &[&[("p", 2.0), ("p1", 3.0), ("q", 1.5), ("b", 0.0), ("eps", 0.25)]],
            domain: |prm| {
                base_domain(prm)?;
                let (p, p1) = (prm.req("p")?, prm.req("p1")?);
                need(p < p1 && p1.is_finite(), "needs p < p1 < inf")
            },
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop85),
            probe: None,
        },
        EmbeddingClaim {
            id: "EmbSobolev-left",
            summary: "B^(s0,xi)_(p0,q) into diff-Besov (0,b) iff xi >= b + 1/min(p,q); s0 = 1/p0 - 1/p",
            default_grids: &[&[("p0", 1.5), ("p", 2.0), ("q", 4.0), ("b", 0.0), ("xi", 0.5)]],
            domain: |prm| {
                base_domain(prm)?;
                let (p0, p) = (prm.req("p0")?, prm.req("p")?);
                need(1.0 < p0 && p0 < p, "needs 1 < p0 < p")
            },
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (p, q, b) = (g("p"), g("q"), g("b"));
                let xi = prm.get("xi").unwrap_or(b + inv(p.min(q)));
                xi >= b + inv(p.min(q))
            },
            witness: WitnessKind::Pair(|prm, eps| {
                let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
                let threshold = b + inv(p.min(q));
                let xi = prm.get("xi").unwrap_or(threshold - eps);
                let mut sub = prm.clone();
                sub.set("eps", threshold - xi);
                witness_prop84(&sub, threshold - xi)
            }),
            probe: None,
        },
        EmbeddingClaim {
            id: "EmbSobolev-right",
            summary: "diff-Besov (0,b) into B^(s1,xi)_(p1,q) iff xi <= b + 1/max(p,q); s1 = 1/p1 - 1/p",
            default_grids: &[&[("p", 2.0), ("p1", 3.0), ("q", 1.5), ("b", 0.0), ("xi", 0.5)]],
            domain: |prm| {
                base_domain(prm)?;
                let (p, p1) = (prm.req("p")?, prm.req("p1")?);
                need(p < p1 && p1.is_finite(), "needs p < p1 < inf")
            },
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (p, q, b) = (g("p"), g("q"), g("b"));
                let xi = prm.get("xi").unwrap_or(b + inv(p.max(q)));
                xi <= b + inv(p.max(q))
            },
            witness: WitnessKind::Pair(|prm, eps| {
                let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
                let threshold = b + inv(p.max(q));
                let xi = prm.get("xi").unwrap_or(threshold + eps);
                let mut sub = prm.clone();
                sub.set("eps", xi - threshold);
                witness_prop85(&sub, xi - threshold)
            }),
            probe: None,
        },
        EmbeddingClaim {
            id: "Thm3.10new-into",
            summary: "GM: H^(s,b)_p into B^(s,b)_(p,q) iff q >= p",
            default_grids: &[
                &[("p", 2.0), ("q", 3.0), ("b", 0.0), ("s", 0.3)],
                &[("p", 2.0), ("q", 1.5), ("b", 0.0), ("s", 0.3)],
            ],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite() && prm.req("q")? > 0.0, "needs 1 < p < inf, q > 0")
            },
            predicate: |prm| prm.get("q").unwrap() >= prm.get("p").unwrap(),
            witness: WitnessKind::Pair(|prm, eps| witness_thm310new(prm, eps, true)),
            probe: Some(|prm, seed, n| {
                let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
                let s = prm.get("s").unwrap_or(0.3);
                ratio_probe(
                    CharSpace::Sobolev { s, b },
                    CharSpace::BFourier { s, b, q },
                    p,
                    seed,
                    n,
                )
            }),
        },
        EmbeddingClaim {
            id: "Thm3.10new-from",
            summary: "GM: B^(s,b)_(p,q) into H^(s,b)_p iff q <= p",
            default_grids: &[&[("p", 2.0), ("q", 1.5), ("b", 0.0), ("s", 0.3)]],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite() && prm.req("q")? > 0.0, "needs 1 < p < inf, q > 0")
            },
            predicate: |prm| prm.get("q").unwrap() <= prm.get("p").unwrap(),
            witness: WitnessKind::Pair(|prm, eps| witness_thm310new(prm, eps, false)),
            probe: None,
        },
        EmbeddingClaim {
            id: "Thm3.10-into",
            summary: "GM: H^(0,b+1/q)_p into diff-Besov (0,b) iff q >= p",
            default_grids: &[
                &[("p", 2.0), ("q", 4.0), ("b", 0.0)],
                &[("p", 3.0), ("q", 2.0), ("b", 0.0)],
            ],
            domain: base_domain,
            predicate: |prm| prm.get("q").unwrap() >= prm.get("p").unwrap(),
            witness: WitnessKind::Pair(|prm, eps| witness_thm310(prm, eps, true)),
            probe: Some(probe_cor23_into),
        },
        EmbeddingClaim {
            id: "Thm3.10-from",
            summary: "GM: diff-Besov (0,b) into H^(0,b+1/q)_p iff q <= p",
            default_grids: &[&[("p", 3.0), ("q", 2.0), ("b", 0.0)], &[("p", 2.0), ("q", 4.0), ("b", 0.0)]],
            domain: base_domain,
            predicate: |prm| prm.get("q").unwrap() <= prm.get("p").unwrap(),
            witness: WitnessKind::Pair(|prm, eps| witness_thm310(prm, eps, false)),
            probe: Some(probe_cor23_from),
        },
        EmbeddingClaim {
            id: "Section6.8",
            summary: "GM: B^(0,b+1/q) equals diff-Besov (0,b) iff q = p",
            default_grids: &[&[("p", 2.0), ("q", 2.0), ("b", 0.0)], &[("p", 2.0), ("q", 3.0), ("b", 0.0)]],
            domain: base_domain,
            predicate: |prm| (prm.get("q").unwrap() - prm.get("p").unwrap()).abs() < 1e-12,
            witness: WitnessKind::Pair(witness_sec68),
            probe: None,
        },
        EmbeddingClaim {
            id: "Cor4.5-into",
            summary: "lacunary: H^(0,b+1/q) into diff-Besov (0,b) iff q >= 2",
            default_grids: &[&[("p", 2.0), ("q", 4.0), ("b", 0.0)], &[("p", 2.0), ("q", 1.5), ("b", 0.0)]],
            domain: base_domain,
            predicate: |prm| prm.get("q").unwrap() >= 2.0,
            witness: WitnessKind::Pair(|prm, eps| witness_cor45(prm, eps, true)),
            probe: None,
        },
        EmbeddingClaim {
            id: "Cor4.5-from",
            summary: "lacunary: diff-Besov (0,b) into H^(0,b+1/q) iff q <= 2",
            default_grids: &[&[("p", 2.0), ("q", 1.5), ("b", 0.0)], &[("p", 2.0), ("q", 4.0), ("b", 0.0)]],
            domain: base_domain,
            predicate: |prm| prm.get("q").unwrap() <= 2.0,
            witness: WitnessKind::Pair(|prm, eps| witness_cor45(prm, eps, false)),
            probe: None,
        },
        EmbeddingClaim {
            id: "EmbGM",
            summary: "GM: B^(0,b)_(p,q) into L_p iff (b >= 0 if q <= p; b > 1/p - 1/q if p < q)",
            default_grids: &[
                &[("p", 2.0), ("q", 4.0), ("b", 0.5)],
                &[("p", 2.0), ("q", 4.0), ("b", 0.1)],
                &[("p", 3.0), ("q", 2.0), ("b", -0.2)],
            ],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite() && prm.req("q")? > 0.0, "needs 1 < p < inf, q > 0")?;
                prm.req("b").map(|_| ())
            },
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (p, q, b) = (g("p"), g("q"), g("b"));
                if q <= p {
                    b >= 0.0
                } else {
                    b > 1.0 / p - inv(q)
                }
            },
            witness: WitnessKind::Pair(witness_embgm),
            probe: Some(probe_embgm),
        },
        EmbeddingClaim {
            id: "EmbGM-growth",
            summary: "GM L_p embedding band: indicator growth certifies failure for q <= p, b < 0",
            default_grids: &[&[("p", 3.0), ("q", 2.0), ("b", -0.4)]],
            domain: |prm| {
                let (p, q, b) = (prm.req("p")?, prm.req("q")?, prm.req("b")?);
                need(p > 1.0 && p.is_finite() && q > 0.0, "needs 1 < p < inf, q > 0")?;
                need(q <= p && b < 0.0, "growth branch needs q <= p, b < 0")
            },
            predicate: |_| false,
            witness: WitnessKind::Growth(growth_embgm),
            probe: None,
        },
        EmbeddingClaim {
            id: "EmbL",
            summary: "lacunary: B^(0,b)_(p,q) into L_p iff (b >= 0 if q <= 2; b > 1/2 - 1/q if q > 2)",
            default_grids: &[
                &[("p", 2.0), ("q", 4.0), ("b", 0.3)],
                &[("p", 2.0), ("q", 4.0), ("b", 0.1)],
            ],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite() && prm.req("q")? > 0.0, "needs 1 < p < inf, q > 0")?;
                prm.req("b").map(|_| ())
            },
            predicate: |prm| {
                let (q, b) = (prm.get("q").unwrap(), prm.get("b").unwrap());
                if q <= 2.0 {
                    b >= 0.0
                } else {
                    b > 0.5 - inv(q)
                }
            },
            witness: WitnessKind::Pair(witness_embl),
            probe: None,
        },
        EmbeddingClaim {
            id: "EmbL-growth",
            summary: "lacunary L_p embedding: truncated growth certifies failure for q <= 2, b < 0",
            default_grids: &[&[("p", 2.0), ("q", 1.5), ("b", -0.3)]],
            domain: |prm| {
                let (q, b) = (prm.req("q")?, prm.req("b")?);
                need(q <= 2.0 && b < 0.0, "growth branch needs q <= 2, b < 0")
            },
            predicate: |_| false,
            witness: WitnessKind::Growth(growth_embl),
            probe: None,
        },
        EmbeddingClaim {
            id: "EmbL-wm",
            summary: "weak-monotone lacunary: into L_p iff (b >= 1/2-1/q if q <= 2; b > 1/2-1/q if q > 2)",
            default_grids: &[&[("p", 2.0), ("q", 1.5), ("b", 0.0), ("wm", 1.0)]],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite() && prm.req("q")? > 0.0, "needs 1 < p < inf, q > 0")?;
                prm.req("b").map(|_| ())
            },
            predicate: |prm| {
                let (q, b) = (prm.get("q").unwrap(), prm.get("b").unwrap());
                if q <= 2.0 {
                    b >= 0.5 - inv(q)
                } else {
                    b > 0.5 - inv(q)
                }
            },
            witness: WitnessKind::Growth(growth_embl),
            probe: None,
        },
        EmbeddingClaim {
            id: "Loc",
            summary: "B^(0,b)_(p,q) into L_p iff the three-branch log condition",
            default_grids: &[&[("p", 3.0), ("q", 3.0), ("b", 0.2)]],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite() && prm.req("q")? > 0.0, "needs 1 < p < inf, q > 0")?;
                prm.req("b").map(|_| ())
            },
            predicate: pred_loc,
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop5.3-i",
            summary: "for q >= max(p,2): H^(0,xi) into diff-Besov (0,b) iff xi >= b+1/q",
            default_grids: &[&[("p", 2.0), ("q", 4.0), ("b", 0.0), ("xi", 0.25)]],
            domain: |prm| {
                base_domain(prm)?;
                let (p, q) = (prm.req("p")?, prm.req("q")?);
                need(q >= p.max(2.0), "needs q >= max(p,2)")
            },
            predicate: |prm| {
                let (q, b) = (prm.get("q").unwrap(), prm.get("b").unwrap());
                prm.get("xi").unwrap_or(f64::NEG_INFINITY) >= b + inv(q)
            },
            witness: WitnessKind::Pair(|prm, _| {
                let (q, b) = (prm.req("q")?, prm.req("b")?);
                let xi = prm.req("xi")?;
                let eps = b + inv(q) - xi;
                let mut sub = prm.clone();
                sub.set("eps", eps);
                if prm.req("p")? <= q {
                    witness_prop51(&sub, eps)
                } else {
                    witness_prop52(&sub, eps)
                }
            }),
            probe: Some(probe_cor23_into),
        },
        EmbeddingClaim {
            id: "Prop5.3-ii",
            summary: "for q <= min(p,2): diff-Besov (0,b) into H^(0,xi) iff xi <= b+1/q",
            default_grids: &[&[("p", 2.0), ("q", 2.0), ("b", 0.0), ("xi", 0.75)]],
            domain: |prm| {
                base_domain(prm)?;
                let (p, q) = (prm.req("p")?, prm.req("q")?);
                need(q <= p.min(2.0), "needs q <= min(p,2)")
            },
            predicate: |prm| {
                let (q, b) = (prm.get("q").unwrap(), prm.get("b").unwrap());
                prm.get("xi").unwrap_or(f64::INFINITY) <= b + inv(q)
            },
            witness: WitnessKind::Pair(|prm, _| {
                let (q, b) = (prm.req("q")?, prm.req("b")?);
                let xi = prm.req("xi")?;
                let eps = xi - (b + inv(q));
                let mut sub = prm.clone();
                sub.set("eps", eps);
                if q <= prm.req("p")? {
                    witness_prop54(&sub, eps)
                } else {
                    witness_prop55(&sub, eps)
                }
            }),
            probe: Some(probe_cor23_from),
        },
        EmbeddingClaim {
            id: "Thm11.1",
            summary: "derivatives: D^m maps diff-Besov (m,xi) into (0,b) iff xi >= b + 1/min(2,p,q)",
            default_grids: &[
                &[("p", 1.5), ("q", 2.0), ("b", 0.0), ("m", 1.0), ("eps", 0.25)],
                &[("p", 3.0), ("q", 4.0), ("b", 0.0), ("m", 1.0), ("eps", 0.25)],
            ],
            domain: base_domain,
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (p, q, b) = (g("p"), g("q"), g("b"));
                let threshold = b + inv(p.min(2.0).min(q));
                prm.get("xi").unwrap_or(threshold - prm.get("eps").unwrap_or(0.25)) >= threshold
            },
            witness: WitnessKind::Pair(witness_prop114),
            probe: None,
        },
        EmbeddingClaim {
            id: "Thm11.1Conv",
            summary: "derivatives, converse: the (m,xi) norm is controlled iff xi <= b + 1/max(2,p,q)",
            default_grids: &[&[("p", 4.0), ("q", 2.0), ("b", 0.0), ("m", 1.0), ("eps", 0.25)]],
            domain: base_domain,
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (p, q, b) = (g("p"), g("q"), g("b"));
                let threshold = b + inv(p.max(2.0).max(q));
                prm.get("xi").unwrap_or(threshold + prm.get("eps").unwrap_or(0.25)) <= threshold
            },
            witness: WitnessKind::Pair(witness_prop114new),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop11.4",
            summary: "derivative loss sharpness, cases p-min and 2-min (periodic witnesses)",
            default_grids: &[
                &[("p", 1.5), ("q", 2.0), ("b", 0.0), ("m", 1.0), ("eps", 0.25)],
                &[("p", 3.0), ("q", 4.0), ("b", 0.0), ("m", 1.0), ("eps", 0.25)],
            ],
            domain: base_domain,
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop114),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop11.4new",
            summary: "converse derivative loss sharpness, cases p-max and 2-max",
            default_grids: &[&[("p", 4.0), ("q", 2.0), ("b", 0.0), ("m", 1.0), ("eps", 0.25)]],
            domain: base_domain,
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop114new),
            probe: None,
        },
        EmbeddingClaim {
            id: "Thm12.1-into",
            summary: "Bessel lift maps diff-Besov (0,b) into B^(-sigma,xi) iff xi <= b + 1/max(2,p,q)",
            default_grids: &[&[("p", 4.0), ("q", 2.0), ("b", 0.0), ("eps", 0.25)]],
            domain: base_domain,
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (p, q, b) = (g("p"), g("q"), g("b"));
                let threshold = b + inv(p.max(2.0).max(q));
                prm.get("xi").unwrap_or(threshold + prm.get("eps").unwrap_or(0.25)) <= threshold
            },
            witness: WitnessKind::Pair(witness_prop122),
            probe: None,
        },
        EmbeddingClaim {
            id: "Thm12.1-from",
            summary: "Bessel lift maps B^(sigma,xi) into diff-Besov (0,b) iff xi >= b + 1/min(2,p,q)",
            default_grids: &[&[("p", 1.5), ("q", 2.0), ("b", 0.0), ("eps", 0.25)]],
            domain: base_domain,
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (p, q, b) = (g("p"), g("q"), g("b"));
                let threshold = b + inv(p.min(2.0).min(q));
                prm.get("xi").unwrap_or(threshold - prm.get("eps").unwrap_or(0.25)) >= threshold
            },
            witness: WitnessKind::Pair(witness_prop123),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop12.2",
            summary: "lift target sharpness, cases p-max and 2-max",
            default_grids: &[
                &[("p", 4.0), ("q", 2.0), ("b", 0.0), ("eps", 0.25)],
                &[("p", 1.5), ("q", 1.5), ("b", 0.0), ("eps", 0.25)],
            ],
            domain: base_domain,
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop122),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop12.3",
            summary: "lift source sharpness, cases p-min and 2-min",
            default_grids: &[
                &[("p", 1.5), ("q", 2.0), ("b", 0.0), ("eps", 0.25)],
                &[("p", 3.0), ("q", 4.0), ("b", 0.0), ("eps", 0.25)],
            ],
            domain: base_domain,
            predicate: |_| false,
            witness: WitnessKind::Pair(witness_prop123),
            probe: None,
        },
        EmbeddingClaim {
            id: "Prop12.4",
            summary: "lift source sharpness at p in {1, inf}: atomic decompositions are out of scope",
            default_grids: &[&[("q", 2.0), ("b", 0.0)]],
            domain: |prm| {
                need(prm.req("q")? > 0.0, "needs q > 0")?;
                prm.req("b").map(|_| ())
            },
            predicate: |_| false,
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "Trebels2-i",
            summary: "derivative modulus bound holds iff q <= min(p,2)",
            default_grids: &[&[("p", 2.0), ("q", 2.0)]],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite() && prm.req("q")? > 0.0, "needs 1 < p < inf, q > 0")
            },
            predicate: |prm| prm.get("q").unwrap() <= prm.get("p").unwrap().min(2.0),
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "Trebels2-ii",
            summary: "converse derivative modulus bound holds iff q >= max(p,2)",
            default_grids: &[&[("p", 2.0), ("q", 2.0)]],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite() && prm.req("q")? > 0.0, "needs 1 < p < inf, q > 0")
            },
            predicate: |prm| prm.get("q").unwrap() >= prm.get("p").unwrap().max(2.0),
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "TrebelsLift-ia",
            summary: "Riesz potential modulus bound holds iff q <= min(p,2) (1 < p < inf)",
            default_grids: &[&[("p", 2.0), ("q", 2.0)]],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite() && prm.req("q")? > 0.0, "needs 1 < p < inf, q > 0")
            },
            predicate: |prm| prm.get("q").unwrap() <= prm.get("p").unwrap().min(2.0),
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "TrebelsLift-ib",
            summary: "Weierstrass-defect form at p in {1, inf} holds iff q <= 1",
            default_grids: &[&[("q", 1.0)]],
            domain: |prm| need(prm.req("q")? > 0.0, "needs q > 0"),
            predicate: |prm| prm.get("q").unwrap() <= 1.0,
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "TrebelsLift-iia",
            summary: "converse Riesz potential bound holds iff q >= max(p,2)",
            default_grids: &[&[("p", 2.0), ("q", 2.0)]],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite() && prm.req("q")? > 0.0, "needs 1 < p < inf, q > 0")
            },
            predicate: |prm| prm.get("q").unwrap() >= prm.get("p").unwrap().max(2.0),
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "TrebelsLift-iib",
            summary: "converse Weierstrass-defect form at p in {1, inf} holds iff q = inf",
            default_grids: &[&[("q", f64::INFINITY)]],
            domain: |prm| need(prm.req("q")? > 0.0, "needs q > 0"),
            predicate: |prm| prm.get("q").unwrap().is_infinite(),
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "Bianchini-i",
            summary: "Lipschitz-couple characterization of diff-Besov (s,b) holds iff s < k",
            default_grids: &[&[("s", 0.5), ("k", 1.0)]],
            domain: |prm| {
                need(prm.req("s")? >= 0.0, "needs s >= 0")?;
                need(prm.req("k")? >= 1.0, "needs k >= 1")
            },
            predicate: |prm| prm.get("s").unwrap() < prm.get("k").unwrap(),
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "Bianchini-ii",
            summary: "Besov-to-Sobolev couple form holds iff 0 < s < k, or s = 0 and alpha + 1/r < b + 1/q",
            default_grids: &[&[("s", 0.0), ("k", 1.0), ("alpha", -0.5), ("r", 1.0), ("b", 1.0), ("q", 1.0)]],
            domain: |prm| {
                need(prm.req("s")? >= 0.0, "needs s >= 0")?;
                need(prm.req("k")? >= 1.0, "needs k >= 1")?;
                let r = prm.req("r")?;
                need(prm.req("alpha")? > -inv(r), "needs alpha > -1/r")?;
                prm.req("b")?;
                prm.req("q").map(|_| ())
            },
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (s, k, alpha, r, b, q) = (g("s"), g("k"), g("alpha"), g("r"), g("b"), g("q"));
                (s > 0.0 && s < k) || (s == 0.0 && alpha + inv(r) < b + inv(q))
            },
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "Bianchini4.3-i",
            summary: "p-variation couple characterization holds iff s < 1/p",
            default_grids: &[&[("p", 2.0), ("s", 0.25)]],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite(), "needs 1 < p < inf")?;
                need(prm.req("s")? >= 0.0, "needs s >= 0")
            },
            predicate: |prm| prm.get("s").unwrap() < 1.0 / prm.get("p").unwrap(),
            witness: WitnessKind::None,
            probe: None,
        },
        EmbeddingClaim {
            id: "Bianchini4.3-ii",
            summary: "p-variation couple with Besov distance holds iff 0<s<1/p or s=0, alpha+1/r < b+1/q",
            default_grids: &[&[("p", 2.0), ("s", 0.0), ("alpha", -0.5), ("r", 1.0), ("b", 1.0), ("q", 1.0)]],
            domain: |prm| {
                let p = prm.req("p")?;
                need(p > 1.0 && p.is_finite(), "needs 1 < p < inf")?;
                need(prm.req("s")? >= 0.0, "needs s >= 0")?;
                let r = prm.req("r")?;
                need(prm.req("alpha")? > -inv(r), "needs alpha > -1/r")?;
                prm.req("b")?;
                prm.req("q").map(|_| ())
            },
            predicate: |prm| {
                let g = |k: &str| prm.get(k).unwrap();
                let (p, s, alpha, r, b, q) = (g("p"), g("s"), g("alpha"), g("r"), g("b"), g("q"));
                (s > 0.0 && s < 1.0 / p) || (s == 0.0 && alpha + inv(r) < b + inv(q))
            },
            witness: WitnessKind::None,
            probe: None,
        },
    ]
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

/// Evaluates a claim's iff predicate; errors on unknown ids or out-of-domain
/// parameters.
pub fn embed_predicate(id: &str, params: &ClaimParams) -> Result<bool> {
    let claim = find_claim(id)?;
    (claim.domain)(params)?;
    Ok((claim.predicate)(params))
}

/// Instantiates the claim's counterexample family at the window midpoint.
pub fn counterexample_for(id: &str, params: &ClaimParams, eps: f64) -> Result<Witness> {
    let claim = find_claim(id)?;
    (claim.domain)(params)?;
    match claim.witness {
        WitnessKind::Pair(f) => f(params, eps),
        WitnessKind::Growth(_) | WitnessKind::None => Err(Error::NoWitness(id.to_string())),
    }
}

/// Runs the full verification of one claim instance: witness check on the
/// failing branch, ratio probe on the holding branch.
pub fn verify_claim(
    id: &str,
    params: &ClaimParams,
    eps: f64,
    threshold: f64,
    seed: u64,
) -> Result<Verdict> {
    let claim = find_claim(id)?;
    (claim.domain)(params)?;
    let holds = (claim.predicate)(params);
    let (evidence, pass) = if holds {
        match claim.probe {
            Some(probe) => {
                let report = probe(params, seed, 20)?;
                let ok = report.max_ratio <= threshold;
                (Evidence::Probe(report), ok)
            }
            None => (Evidence::PredicateOnly, true),
        }
    } else {
        match claim.witness {
            WitnessKind::Pair(f) => {
                let witness = f(params, eps)?;
                let ok = witness.certifies();
                (Evidence::Witness(witness), ok)
            }
            WitnessKind::Growth(f) => {
                let growth = f(params)?;
                let ok = growth.grows();
                (Evidence::Growth(growth), ok)
            }
            WitnessKind::None => (Evidence::PredicateOnly, true),
        }
    };
    Ok(Verdict {
        id: id.to_string(),
        params: params.clone(),
        predicate_holds: holds,
        evidence,
        pass,
    })
}

/// Verifies every claim on its default parameter grids. Grids that land on
/// a predicate-only branch are skipped; any other error is a failure.
pub fn verify_all(eps: f64, threshold: f64, seed: u64) -> Vec<Verdict> {
    let mut out = Vec::new();
    for claim in registry() {
        for grid in claim.default_grids {
            let params = ClaimParams::new(grid);
            match verify_claim(claim.id, &params, eps, threshold, seed) {
                Ok(v) => out.push(v),
                Err(Error::NoWitness(_)) => {}
                Err(_) => out.push(Verdict {
                    id: claim.id.to_string(),
                    params,
                    predicate_holds: false,
                    evidence: Evidence::PredicateOnly,
                    pass: false,
                }),
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(entries: &[(&str, f64)]) -> ClaimParams {
        ClaimParams::new(entries)
    }

    #[test]
    fn unknown_claims_are_rejected() {
        assert!(matches!(
            embed_predicate("nope", &p(&[])),
            Err(Error::UnknownClaim(_))
        ));
    }

    #[test]
    fn sharp22_examples() {
        assert!(embed_predicate("Thm6.6-Sharp2.2New", &p(&[("p", 2.0), ("q", 2.0), ("b", 0.0)])).unwrap());
        assert!(!embed_predicate("Thm6.6-Sharp2.2New", &p(&[("p", 3.0), ("q", 2.0), ("b", 0.0)])).unwrap());
    }

    #[test]
    fn thm73_examples() {
        assert!(embed_predicate("Thm7.3", &p(&[("p", 2.0), ("q", 2.0), ("b", 0.0), ("xi", 0.5)])).unwrap());
        assert!(!embed_predicate("Thm7.3", &p(&[("p", 2.0), ("q", 4.0), ("b", 0.0), ("xi", 0.25)])).unwrap());
        assert!(!embed_predicate("Thm7.3", &p(&[("p", 3.0), ("q", 2.0), ("b", 0.0), ("xi", 0.5)])).unwrap());
    }

    #[test]
    fn loc_follows_the_three_branches() {
        // 2 < p, 2 < q: needs b > 1/2 - 1/q.
        assert!(embed_predicate("Loc", &p(&[("p", 3.0), ("q", 3.0), ("b", 0.2)])).unwrap());
        assert!(!embed_predicate("Loc", &p(&[("p", 3.0), ("q", 3.0), ("b", 0.1)])).unwrap());
        // q <= min(2,p): b >= 0.
        assert!(embed_predicate("Loc", &p(&[("p", 3.0), ("q", 1.0), ("b", 0.0)])).unwrap());
        assert!(!embed_predicate("Loc", &p(&[("p", 3.0), ("q", 1.0), ("b", -0.1)])).unwrap());
        // 1 < p <= 2 < q: b > 1/p - 1/q.
        assert!(embed_predicate("Loc", &p(&[("p", 2.0), ("q", 4.0), ("b", 0.3)])).unwrap());
        assert!(!embed_predicate("Loc", &p(&[("p", 2.0), ("q", 4.0), ("b", 0.25)])).unwrap());
    }

    #[test]
    fn prop51_witness_matches_catalog_example() {
        // d=1, p=2, q=4, b=0, eps=0.25: window midpoint 0.625,
        // expected (H finite, diff-Besov infinite).
        let w = counterexample_for("Prop5.1", &p(&[("p", 2.0), ("q", 4.0), ("b", 0.0)]), 0.25).unwrap();
        match &w.family {
            WitnessFamily::Profile(PowerLogProfile::PowerLog { outer, .. }) => {
                assert!((outer.b + 0.625).abs() < 1e-12, "beta = {}", -outer.b);
            }
            other => panic!("unexpected family {other:?}"),
        }
        assert!(w.source.finite && !w.target.finite);
    }

    #[test]
    fn prop52_window_midpoint() {
        let w = counterexample_for("Prop5.2", &p(&[("p", 2.0), ("q", 4.0), ("b", 0.0)]), 0.25).unwrap();
        match &w.family {
            WitnessFamily::Lacunary(seq) => {
                // delta = 0.625 on the (1+j) power.
                match &seq.coeffs {
                    crate::lacunary::LacCoeffs::Envelope { piece, .. } => {
                        assert!((piece.a + 0.625).abs() < 1e-12)
                    }
                    _ => panic!("expected envelope"),
                }
            }
            other => panic!("unexpected family {other:?}"),
        }
        assert!(w.certifies());
    }

    #[test]
    fn prop62_window_midpoint() {
        let w = counterexample_for("Prop6.2", &p(&[("p", 2.0), ("q", 4.0), ("b", 0.0)]), 0.25).unwrap();
        match &w.family {
            WitnessFamily::Profile(PowerLogProfile::PowerLog { outer, .. }) => {
                // beta window (max(1/q, 1/p - b - 1/q), 1/p) = (0.25, 0.5), mid 0.375;
                // stored log exponent is b + 1/q + beta = 0.625.
                assert!((outer.b + 0.625).abs() < 1e-12, "exponent = {}", -outer.b);
            }
            other => panic!("unexpected family {other:?}"),
        }
        assert!(w.certifies());
    }

    #[test]
    fn empty_windows_raise_domain_errors() {
        // eps = 0 collapses every sharpness window.
        let r = counterexample_for("Prop5.1", &p(&[("p", 2.0), ("q", 4.0), ("b", 0.0), ("eps", 0.0)]), 0.0);
        assert!(matches!(r, Err(Error::DomainError(_))));
    }

    #[test]
    fn verify_all_defaults_pass() {
        for v in verify_all(0.25, 50.0, 7) {
            assert!(v.pass, "claim {} failed: {:?}", v.id, v.evidence);
        }
    }

    #[test]
    fn predicate_only_claims_have_no_witness() {
        assert!(matches!(
            counterexample_for("Prop12.4", &p(&[("q", 2.0), ("b", 0.0)]), 0.25),
            Err(Error::NoWitness(_))
        ));
    }

    #[test]
    fn consistency_eq1_and_sobolev_characterizations_at_p2() {
        // At p = q = 2 the Fourier-side space B^(0,xi)_(2,2) IS the Sobolev
        // space H^(0,xi)_2, so the two-sided chain and the Sobolev
        // characterization must give the same predicate on the overlap.
        let mut rng = crate::family::stream_rng(11, "consistency");
        use rand::Rng;
        for _ in 0..50 {
            let b = rng.gen_range(-0.45..1.0);
            let xi = rng.gen_range(-0.5..1.5);
            let prm = p(&[("p", 2.0), ("q", 2.0), ("b", b), ("xi", xi)]);
            let left = embed_predicate("Eq1-left", &prm).unwrap();
            let sob_into = embed_predicate("Prop5.3-i", &prm).unwrap();
            assert_eq!(left, sob_into, "b={b} xi={xi}");
            let right = embed_predicate("Eq1-right", &prm).unwrap();
            let sob_from = embed_predicate("Prop5.3-ii", &prm).unwrap();
            assert_eq!(right, sob_from, "b={b} xi={xi}");
        }
    }
}
