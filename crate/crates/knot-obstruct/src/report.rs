//! Stable JSON form of an obstruction report.
//!
//! Field order is declaration order and every collection is sorted on the
//! way in, so identical inputs serialize to identical bytes.

use serde::Serialize;

use crate::cyclotomic::CyclotomicFactorization;
use crate::knot::KnotSum;
use crate::obstruction::ObstructionReport;

#[derive(Serialize)]
pub struct JsonReport {
    pub schema_version: u32,
    pub input: String,
    pub tau: i64,
    pub alexander_coeffs: Vec<String>,
    pub factorization: Vec<FactorEntry>,
    pub jumps: Vec<JumpEntry>,
    pub forced_factor: Vec<FactorEntry>,
    pub forced_degree: u64,
    pub checks: Vec<CheckEntry>,
    pub verdict: String,
}

#[derive(Serialize)]
pub struct FactorEntry {
    pub n: u64,
    pub exp: u32,
}

#[derive(Serialize)]
pub struct JumpEntry {
    pub num: i64,
    pub den: i64,
    pub jump: i64,
}

#[derive(Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub outcome: String,
    pub reason: String,
}

fn factor_entries(f: &CyclotomicFactorization) -> Vec<FactorEntry> {
    f.iter().map(|(n, exp)| FactorEntry { n, exp }).collect()
}

impl JsonReport {
    pub fn new(input: &KnotSum, report: &ObstructionReport) -> JsonReport {
        JsonReport {
            schema_version: 1,
            input: input.to_string(),
            tau: report.tau,
            alexander_coeffs: report
                .alexander
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            factorization: factor_entries(&report.factorization),
            jumps: report
                .spectrum
                .iter()
                .map(|(x, &jump)| JumpEntry {
                    num: x.numerator(),
                    den: x.denominator(),
                    jump,
                })
                .collect(),
            forced_factor: factor_entries(&report.forced_factor),
            forced_degree: report.forced_degree,
            checks: report
                .checks
                .iter()
                .map(|c| CheckEntry {
                    name: c.name.to_string(),
                    outcome: c.outcome.to_string(),
                    reason: c.reason.clone(),
                })
                .collect(),
            verdict: report.verdict.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
