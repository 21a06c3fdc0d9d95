//! Shapes of the small-t heat trace expansion. Coefficients are not computed.

use serde::Serialize;

use super::report::SingularityReport;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum HeatFamily {
    /// t^{(−n+k)/2}, k ≥ 0; coefficients depend only on local data.
    HalfIntegerPowers,
    /// b log t.
    LogT,
    /// b̃_k (log t)^{−1−k}, k ≥ 0.
    InverseLogPowers,
    /// d̃_k (log t)^{−k}, k ≥ 1 (decomposable case).
    DecomposableInverseLog,
    /// c̃_{ξk} t^ξ (log t)^k for k = 0..=max_log_power; `vanishing` lists k
    /// with c̃_{ξk} = 0.
    PolePowers { xi: f64, label: String, max_log_power: u32, vanishing: Vec<u32> },
    /// d̃_{ξk} t^ξ (log t)^{−ℓ_ξ−k}, k ≥ 0.
    LogPowers { xi: f64, label: String, first_inverse_power: i32 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HeatLedger {
    pub families: Vec<HeatFamily>,
}

impl HeatLedger {
    pub fn has_log_families(&self) -> bool {
        self.families.iter().any(|f| matches!(f, HeatFamily::LogPowers { .. }))
    }
}

/// Families present in the expansion; a decomposable L gives the reduced
/// form with single powers t^ξ.
pub fn heat_structure(report: &SingularityReport) -> HeatLedger {
    let mut families = vec![HeatFamily::HalfIntegerPowers, HeatFamily::LogT];
    if report.decomposable_view.is_some() {
        let f_nonzero =
            report.decomposable_view.as_ref().is_some_and(|v| v.f_coeffs.iter().any(|c| c.norm() > 0.0));
        if f_nonzero {
            families.push(HeatFamily::DecomposableInverseLog);
        }
        for p in &report.poles {
            let xi = -p.location;
            families.push(HeatFamily::PolePowers {
                xi,
                label: p.label.clone(),
                max_log_power: 0,
                vanishing: if (xi - 1.0).abs() < 1e-9 { vec![0] } else { vec![] },
            });
        }
        return HeatLedger { families };
    }
    let zero_logs = report.logs.iter().any(|l| l.location == 0.0);
    if report.log_at_zero_coeff != 0 || zero_logs {
        families.push(HeatFamily::InverseLogPowers);
    }
    for p in &report.poles {
        let xi = -p.location;
        let max_log_power = p.order;
        let mut vanishing = Vec::new();
        if (xi - 1.0).abs() < 1e-9 {
            vanishing.push(0);
        }
        if !p.integer_flag {
            vanishing.push(max_log_power);
        }
        families.push(HeatFamily::PolePowers { xi, label: p.label.clone(), max_log_power, vanishing });
    }
    for l in report.logs.iter().filter(|l| l.location < 0.0) {
        families.push(HeatFamily::LogPowers { xi: -l.location, label: l.label.clone(), first_inverse_power: l.ell });
    }
    HeatLedger { families }
}
