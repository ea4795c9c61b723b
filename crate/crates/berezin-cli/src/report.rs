//! Output documents for map, solve, and verify runs.
//!
//! Every document mirrors the action-file layout and adds a partition
//! tower section; solve and verify runs also carry a residuals section.
//! Serialization is deterministic: struct fields keep their declared
//! order and sparse blocks are sorted by key.

use action_map::{ActionSpec, PartitionTower};
use grassmann_core::scalar::rat_str;
use integral_equation::ResidualSet;
use serde::Serialize;

use crate::actionfile::{constant_to_field, matrix_strings, spec_to_file, ActionFile, ConstantField};

/// Result of applying the map: the effective action plus the partition
/// tower of the input action.
#[derive(Serialize)]
pub struct MapDocument {
    #[serde(flatten)]
    pub action: ActionFile,
    pub partition_tower: Vec<Vec<Vec<String>>>,
    pub method: String,
    #[serde(rename = "A0_float", skip_serializing_if = "Option::is_none")]
    pub a0_float: Option<f64>,
}

/// A solved member of the rescaling family, its partition tower, and the
/// residuals of the brute-force verification.
#[derive(Serialize)]
pub struct SolveDocument {
    #[serde(flatten)]
    pub action: ActionFile,
    pub partition_tower: Vec<Vec<Vec<String>>>,
    pub mu: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<String>,
    pub residuals: ResidualsSection,
    pub outcome: String,
}

/// Blockwise residuals of the rescaling equation plus the constant shift.
#[derive(Serialize)]
pub struct ResidualsSection {
    #[serde(rename = "R2")]
    pub r2: Vec<Vec<String>>,
    #[serde(rename = "R4", skip_serializing_if = "Option::is_none")]
    pub r4: Option<Vec<Vec<String>>>,
    #[serde(rename = "R6", skip_serializing_if = "Option::is_none")]
    pub r6: Option<Vec<Vec<String>>>,
    #[serde(rename = "R8", skip_serializing_if = "Option::is_none")]
    pub r8: Option<String>,
    pub delta_f: ConstantField,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_f_float: Option<f64>,
}

/// Aggregate of an oracle-equivalence run: both routes on seeded random
/// actions, the final effective action, and the largest blockwise gaps
/// seen between the routes.
#[derive(Serialize)]
pub struct VerifyDocument {
    pub n: u8,
    pub trials: u32,
    pub seed: u64,
    pub agreements: u32,
    pub all_equal: bool,
    pub final_action: ActionFile,
    pub partition_tower: Vec<Vec<Vec<String>>>,
    pub residuals: MethodGaps,
}

/// Largest absolute differences between the closed-form and brute-force
/// blocks across a verify run.
#[derive(Serialize)]
pub struct MethodGaps {
    #[serde(rename = "A0_equal")]
    pub a0_equal: bool,
    #[serde(rename = "R2")]
    pub r2: String,
    #[serde(rename = "R4")]
    pub r4: String,
    #[serde(rename = "R6", skip_serializing_if = "Option::is_none")]
    pub r6: Option<String>,
    #[serde(rename = "R8", skip_serializing_if = "Option::is_none")]
    pub r8: Option<String>,
}

/// Tower levels as nested arrays of rational strings, level 0 first.
pub fn tower_strings(tower: &PartitionTower) -> Vec<Vec<Vec<String>>> {
    tower.levels.iter().map(matrix_strings).collect()
}

pub fn map_document(
    eff: &ActionSpec,
    tower: &PartitionTower,
    method: &str,
    float: bool,
) -> MapDocument {
    MapDocument {
        action: spec_to_file(eff),
        partition_tower: tower_strings(tower),
        method: method.to_string(),
        a0_float: float.then(|| eff.a0.to_f64()),
    }
}

pub fn residuals_section(res: &ResidualSet, float: bool) -> ResidualsSection {
    ResidualsSection {
        r2: matrix_strings(&res.r2),
        r4: res.r4.as_ref().map(matrix_strings),
        r6: res.r6.as_ref().map(matrix_strings),
        r8: res.r8.as_ref().map(rat_str),
        delta_f: constant_to_field(&res.delta_f),
        delta_f_float: float.then(|| res.delta_f.to_f64()),
    }
}

pub fn solve_document(
    spec: &ActionSpec,
    tower: &PartitionTower,
    mu: String,
    kappa: Option<String>,
    residuals: ResidualsSection,
) -> SolveDocument {
    SolveDocument {
        action: spec_to_file(spec),
        partition_tower: tower_strings(tower),
        mu,
        kappa,
        residuals,
        outcome: "Solution".to_string(),
    }
}

/// Pretty JSON with a trailing newline; byte-stable for equal inputs.
pub fn render_pretty<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents always serialize");
    text.push('\n');
    text
}
