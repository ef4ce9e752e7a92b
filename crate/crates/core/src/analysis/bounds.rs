use serde::Serialize;

use crate::error::{Error, Result};

/// Local-sparseness constant: sets of at most `δn` vertices in a random
/// d-regular graph span at most `c|S|` edges whp, where
/// `δ = (c^c / (3 e^(1+c) d^c))^(1/(c-1))`.
///
/// Evaluated in log space. The value is astronomically small at desk-scale
/// parameters (≈ 9.3e-18 at d = 5, c = 1.125).
pub fn delta_lemma4(d: f64, c: f64) -> Result<f64> {
    if d.is_nan() || d < 2.0 {
        return Err(Error::invalid(format!("delta needs d >= 2, got {d}")));
    }
    if !(c > 1.0 && c < d) {
        return Err(Error::invalid(format!("delta needs 1 < c < d, got c = {c}, d = {d}")));
    }
    let ln = ((1.0f64 / 3.0).ln() + c * c.ln() - (1.0 + c) - c * d.ln()) / (c - 1.0);
    Ok(ln.exp())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CycleBoundInput {
    pub c1: f64,
    pub c2: f64,
    pub k: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "kebab-case")]
pub enum CycleBound {
    /// Every graph with `e(G) >= c1 n` whose sets of at most `k` vertices
    /// span at most `c2 |S|` edges has a cycle at least this long.
    Guaranteed(f64),
    /// `(k/2 - 1)(sqrt(c1/c2) - 1) < 2`: no conclusion; carries the value.
    HypothesisFailed(f64),
}

impl CycleBound {
    pub fn value(self) -> f64 {
        match self {
            CycleBound::Guaranteed(v) | CycleBound::HypothesisFailed(v) => v,
        }
    }

    pub fn guaranteed(self) -> Option<f64> {
        match self {
            CycleBound::Guaranteed(v) => Some(v),
            CycleBound::HypothesisFailed(_) => None,
        }
    }
}

/// `(k/2 - 1)(sqrt(c1/c2) - 1)`, the guaranteed cycle length when it is at
/// least 2. Requires `c1 > c2 > 1`.
pub fn cycle_bound(input: CycleBoundInput) -> Result<CycleBound> {
    let CycleBoundInput { c1, c2, k } = input;
    if !(c2 > 1.0 && c1 > c2) {
        return Err(Error::invalid(format!("cycle bound needs c1 > c2 > 1, got c1 = {c1}, c2 = {c2}")));
    }
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::invalid(format!("cycle bound needs a positive finite k, got {k}")));
    }
    let value = (k / 2.0 - 1.0) * ((c1 / c2).sqrt() - 1.0);
    Ok(if value >= 2.0 {
        CycleBound::Guaranteed(value)
    } else {
        CycleBound::HypothesisFailed(value)
    })
}

/// Constants of the linear-cycle argument for one model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Gamma {
    /// Majority-color edge density.
    pub c1: f64,
    /// Local density cap.
    pub c2: f64,
    /// Degree fed to [`delta_lemma4`].
    pub d: f64,
    pub delta: f64,
}

impl Gamma {
    /// `γn = (δn/2 - 1)(sqrt(c1/c2) - 1)`; negative at desk-scale `n`.
    pub fn gamma_n(&self, n: f64) -> f64 {
        (self.delta * n / 2.0 - 1.0) * ((self.c1 / self.c2).sqrt() - 1.0)
    }

    /// The same bound with the locality scale `k` supplied directly.
    pub fn bound_at(&self, k: f64) -> Result<CycleBound> {
        cycle_bound(CycleBoundInput {
            c1: self.c1,
            c2: self.c2,
            k,
        })
    }
}

/// `r` colors on a `(2r+1)`-regular graph: `c1 = 1 + 1/(2r)`,
/// `c2 = 1 + 1/(4r)`, `d = 2r + 1`.
pub fn gamma_regular(r: u32) -> Result<Gamma> {
    if r < 2 {
        return Err(Error::invalid(format!("gamma needs r >= 2, got {r}")));
    }
    let rf = f64::from(r);
    let (c1, c2, d) = (1.0 + 1.0 / (2.0 * rf), 1.0 + 1.0 / (4.0 * rf), 2.0 * rf + 1.0);
    Ok(Gamma {
        c1,
        c2,
        d,
        delta: delta_lemma4(d, c2)?,
    })
}

/// `r` colors on an `(r+1)`-out graph: `c1 = 1 + 1/r`, `c2 = 1 + 1/(2r)`.
/// The `(r+1)`-out graph has `(r+1)n` edges; δ is evaluated with
/// `d = r + 1`.
pub fn gamma_kout(r: u32) -> Result<Gamma> {
    if r < 2 {
        return Err(Error::invalid(format!("gamma needs r >= 2, got {r}")));
    }
    let rf = f64::from(r);
    let (c1, c2, d) = (1.0 + 1.0 / rf, 1.0 + 1.0 / (2.0 * rf), rf + 1.0);
    Ok(Gamma {
        c1,
        c2,
        d,
        delta: delta_lemma4(d, c2)?,
    })
}
