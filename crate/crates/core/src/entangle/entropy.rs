use serde::Serialize;

use crate::numerics::Spectrum;

use super::EntangleError;

/// `2 ln 2 − (3/4) ln 3`, the limit value shared by the entropy asymptotics.
pub fn entropy_limit() -> f64 {
    2.0 * std::f64::consts::LN_2 - 0.75 * 3f64.ln()
}

/// Binary entropy `−ν ln ν − (1−ν) ln(1−ν)` in nats, with `0 ln 0 = 0`.
pub fn binary_entropy(nu: f64) -> f64 {
    let term = |x: f64| if x <= 0.0 { 0.0 } else { -x * x.ln() };
    term(nu) + term(1.0 - nu)
}

/// Von Neumann entropy `S = Σ_ν m_ν H₂(ν)` of a correlation-matrix spectrum.
///
/// Values within `tol` of `[0, 1]` are clamped into it; anything further out is
/// rejected.
pub fn entropy(spectrum: &Spectrum, tol: f64) -> Result<f64, EntangleError> {
    let mut s = 0.0;
    for v in &spectrum.values {
        if v.value < -tol || v.value > 1.0 + tol || !v.value.is_finite() {
            return Err(EntangleError::InvalidSpectrum { value: v.value });
        }
        s += v.multiplicity as f64 * binary_entropy(v.value.clamp(0.0, 1.0));
    }
    Ok(s)
}

/// A finite mode of the entanglement Hamiltonian.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EntanglementMode {
    pub nu: f64,
    /// `ω = ln((1 − ν)/ν)`
    pub omega: f64,
    #[serde(rename = "mult")]
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntanglementHamiltonian {
    pub modes: Vec<EntanglementMode>,
    /// Eigenvalues outside `[ε, 1 − ε]`, counted with multiplicity; their `ω` is infinite
    /// and they carry no entropy.
    pub excluded: usize,
}

/// Single-particle spectrum of `h = ln((1 − C)/C)`.
pub fn entanglement_hamiltonian(spectrum: &Spectrum, eps: f64) -> EntanglementHamiltonian {
    let mut modes = Vec::new();
    let mut excluded = 0;
    for v in &spectrum.values {
        if v.value < eps || v.value > 1.0 - eps {
            excluded += v.multiplicity;
        } else {
            modes.push(EntanglementMode {
                nu: v.value,
                omega: ((1.0 - v.value) / v.value).ln(),
                multiplicity: v.multiplicity,
            });
        }
    }
    EntanglementHamiltonian { modes, excluded }
}
