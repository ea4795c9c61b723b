//! JSON action files with exact rational coefficient blocks.
//!
//! A file carries the pair count `n`, the constant block `A0` as a rational
//! string with optional formal log terms, the quadratic block `A2` as an
//! n x n array of rational strings, the higher blocks `A4`/`A6` as sparse
//! objects keyed by strings like `"12,13"` (row subset before the comma,
//! column subset after it, digits strictly increasing on each side), and
//! the octic entry `A8` as a rational string. Blocks that vanish
//! identically are omitted on output; parsing restores them as zero blocks
//! of the right shape, so printing followed by parsing is the identity on
//! actions and parsing followed by printing is the identity on canonical
//! documents.

use std::collections::BTreeMap;
use std::path::Path;

use action_map::ActionSpec;
use grassmann_core::scalar::{parse_rat, rat_str};
use grassmann_core::{GrandConstant, Scalar};
use matrix_kit::{binomial, k_subsets, subset_position, RatMatrix};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Serialized form of an action. Field names match the document keys.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionFile {
    pub n: u8,
    #[serde(rename = "A0", default, skip_serializing_if = "Option::is_none")]
    pub a0: Option<ConstantField>,
    #[serde(rename = "A2")]
    pub a2: Vec<Vec<String>>,
    #[serde(rename = "A4", default, skip_serializing_if = "Option::is_none")]
    pub a4: Option<BTreeMap<String, String>>,
    #[serde(rename = "A6", default, skip_serializing_if = "Option::is_none")]
    pub a6: Option<BTreeMap<String, String>>,
    #[serde(rename = "A8", default, skip_serializing_if = "Option::is_none")]
    pub a8: Option<String>,
}

/// A formal constant: a plain rational string when it has no log terms,
/// otherwise an object with the rational part and the list of log terms.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConstantField {
    Plain(String),
    WithLogs {
        rational: String,
        logs: Vec<LogTerm>,
    },
}

/// One `coeff * ln(argument)` summand of a formal constant.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LogTerm {
    #[serde(rename = "ln")]
    pub argument: String,
    pub coeff: String,
}

fn parse_scalar(s: &str, what: &str) -> Result<Scalar, String> {
    parse_rat(s).ok_or_else(|| format!("{what}: cannot parse '{s}' as a rational p/q"))
}

/// Renders a formal constant in canonical form, log bases ascending.
pub fn constant_to_field(c: &GrandConstant) -> ConstantField {
    if c.is_rational_only() {
        ConstantField::Plain(rat_str(c.rational_part()))
    } else {
        ConstantField::WithLogs {
            rational: rat_str(c.rational_part()),
            logs: c
                .log_terms()
                .map(|(base, coeff)| LogTerm {
                    argument: base.to_string(),
                    coeff: rat_str(coeff),
                })
                .collect(),
        }
    }
}

/// Rebuilds a formal constant; log arguments may be any nonzero rationals
/// and are canonicalized to signed prime bases.
pub fn field_to_constant(field: &ConstantField) -> Result<GrandConstant, String> {
    match field {
        ConstantField::Plain(s) => Ok(GrandConstant::from_rational(parse_scalar(s, "A0")?)),
        ConstantField::WithLogs { rational, logs } => {
            let mut acc = GrandConstant::from_rational(parse_scalar(rational, "A0 rational part")?);
            for term in logs {
                let arg = parse_scalar(&term.argument, "A0 log argument")?;
                if arg.is_zero() {
                    return Err("A0 log argument must be nonzero".into());
                }
                let coeff = parse_scalar(&term.coeff, "A0 log coefficient")?;
                acc = acc.add(&GrandConstant::ln_scaled(&arg, &coeff));
            }
            Ok(acc)
        }
    }
}

/// The matrix as rows of canonical rational strings.
pub fn matrix_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| rat_str(m.get(i, j))).collect())
        .collect()
}

fn subset_digits(subset: &[u8]) -> String {
    subset.iter().map(|d| char::from(b'0' + d)).collect()
}

fn parse_side(side: &str, n: u8, k: usize, key: &str) -> Result<Vec<u8>, String> {
    let mut out: Vec<u8> = Vec::with_capacity(k);
    for ch in side.chars() {
        let d = ch
            .to_digit(10)
            .ok_or_else(|| format!("key '{key}': '{ch}' is not a digit"))? as u8;
        if d == 0 || d > n {
            return Err(format!("key '{key}': index {d} outside 1..={n}"));
        }
        if out.last().is_some_and(|&last| d <= last) {
            return Err(format!("key '{key}': indices must increase strictly"));
        }
        out.push(d);
    }
    if out.len() != k {
        return Err(format!(
            "key '{key}': want {k} indices per side, got {}",
            out.len()
        ));
    }
    Ok(out)
}

fn block_to_map(m: &RatMatrix, n: u8, k: u8) -> Option<BTreeMap<String, String>> {
    let subsets = k_subsets(n, k);
    let mut out = BTreeMap::new();
    for (i, row) in subsets.iter().enumerate() {
        for (j, col) in subsets.iter().enumerate() {
            let v = m.get(i, j);
            if !v.is_zero() {
                let key = format!("{},{}", subset_digits(row), subset_digits(col));
                out.insert(key, rat_str(v));
            }
        }
    }
    (!out.is_empty()).then_some(out)
}

fn map_to_block(
    map: &BTreeMap<String, String>,
    n: u8,
    k: u8,
    label: &str,
) -> Result<RatMatrix, String> {
    let dim = binomial(n as usize, k as usize);
    let mut m = RatMatrix::zeros(dim, dim);
    for (key, value) in map {
        let (left, right) = key
            .split_once(',')
            .ok_or_else(|| format!("{label} key '{key}': want 'rows,cols'"))?;
        let row = parse_side(left, n, k as usize, key)?;
        let col = parse_side(right, n, k as usize, key)?;
        m.set(
            subset_position(n, &row),
            subset_position(n, &col),
            parse_scalar(value, label)?,
        );
    }
    Ok(m)
}

/// Canonical document for an action: zero blocks and the zero constant are
/// dropped, all entries in lowest terms.
pub fn spec_to_file(spec: &ActionSpec) -> ActionFile {
    ActionFile {
        n: spec.n,
        a0: (!spec.a0.is_zero()).then(|| constant_to_field(&spec.a0)),
        a2: matrix_strings(&spec.a2),
        a4: spec.a4.as_ref().and_then(|m| block_to_map(m, spec.n, 2)),
        a6: spec.a6.as_ref().and_then(|m| block_to_map(m, spec.n, 3)),
        a8: spec
            .a8
            .as_ref()
            .and_then(|v| (!v.is_zero()).then(|| rat_str(v))),
    }
}

/// Rebuilds the action, restoring omitted blocks as zeros and checking
/// every shape.
pub fn file_to_spec(file: &ActionFile) -> Result<ActionSpec, String> {
    let n = file.n;
    if !(1..=5).contains(&n) {
        return Err(format!("pair count n = {n} outside 1..=5"));
    }
    if file.a2.len() != n as usize || file.a2.iter().any(|row| row.len() != n as usize) {
        return Err(format!("A2 must be an {n} x {n} array of rational strings"));
    }
    let mut a2 = RatMatrix::zeros(n as usize, n as usize);
    for (i, row) in file.a2.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            a2.set(i, j, parse_scalar(s, "A2")?);
        }
    }
    if file.a4.is_some() && n < 2 {
        return Err("A4 present but a single pair carries no quartic terms".into());
    }
    if file.a6.is_some() && n < 3 {
        return Err("A6 present but fewer than three pairs carry no sextic terms".into());
    }
    if file.a8.is_some() && n != 4 {
        return Err("A8 present but only four pairs store an octic entry".into());
    }
    let a0 = match &file.a0 {
        None => GrandConstant::zero(),
        Some(field) => field_to_constant(field)?,
    };
    let a4 = if n >= 2 {
        Some(match &file.a4 {
            Some(map) => map_to_block(map, n, 2, "A4")?,
            None => RatMatrix::zeros(binomial(n as usize, 2), binomial(n as usize, 2)),
        })
    } else {
        None
    };
    let a6 = if n >= 3 {
        Some(match &file.a6 {
            Some(map) => map_to_block(map, n, 3, "A6")?,
            None => RatMatrix::zeros(binomial(n as usize, 3), binomial(n as usize, 3)),
        })
    } else {
        None
    };
    let a8 = if n == 4 {
        Some(match &file.a8 {
            Some(s) => parse_scalar(s, "A8")?,
            None => Scalar::zero(),
        })
    } else {
        None
    };
    let spec = ActionSpec {
        n,
        a0,
        a2,
        a4,
        a6,
        a8,
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

/// Reads and parses an action document.
pub fn read_action_file(path: &Path) -> Result<ActionFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use grassmann_core::scalar::int;

    fn quartic_sample() -> ActionSpec {
        let mut a4 = RatMatrix::zeros(1, 1);
        a4.set(0, 0, int(-3));
        ActionSpec {
            n: 2,
            a0: GrandConstant::ln_scaled(&int(2), &int(-2)),
            a2: RatMatrix::identity(2),
            a4: Some(a4),
            a6: None,
            a8: None,
        }
    }

    #[test]
    fn print_then_parse_is_the_identity_on_actions() {
        let spec = quartic_sample();
        let file = spec_to_file(&spec);
        assert_eq!(file_to_spec(&file).unwrap(), spec);
    }

    #[test]
    fn canonical_documents_survive_a_parse_print_cycle() {
        let text = serde_json::to_string_pretty(&spec_to_file(&quartic_sample())).unwrap();
        let parsed: ActionFile = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&spec_to_file(&file_to_spec(&parsed).unwrap()))
            .unwrap();
        assert_eq!(text, again);
    }

    #[test]
    fn log_terms_canonicalize_on_parse() {
        let field = ConstantField::WithLogs {
            rational: "0".into(),
            logs: vec![LogTerm {
                argument: "4".into(),
                coeff: "2".into(),
            }],
        };
        let c = field_to_constant(&field).unwrap();
        assert_eq!(c, GrandConstant::ln_scaled(&int(2), &int(4)));
        match constant_to_field(&c) {
            ConstantField::WithLogs { rational, logs } => {
                assert_eq!(rational, "0");
                assert_eq!(logs.len(), 1);
                assert_eq!(logs[0].argument, "2");
                assert_eq!(logs[0].coeff, "4");
            }
            other => panic!("expected log terms, got {other:?}"),
        }
    }

    #[test]
    fn malformed_keys_are_rejected() {
        let mut file = spec_to_file(&quartic_sample());
        for bad in ["21,12", "1,12", "12;12", "13,12x", "102,12"] {
            let mut map = BTreeMap::new();
            map.insert(bad.to_string(), "1".to_string());
            file.a4 = Some(map);
            assert!(file_to_spec(&file).is_err(), "key '{bad}' must be rejected");
        }
    }

    #[test]
    fn misplaced_blocks_are_rejected() {
        let mut file = spec_to_file(&quartic_sample());
        file.a8 = Some("1".into());
        assert!(file_to_spec(&file).is_err());
        let ragged = ActionFile {
            n: 2,
            a0: None,
            a2: vec![vec!["1".into()], vec!["0".into(), "1".into()]],
            a4: None,
            a6: None,
            a8: None,
        };
        assert!(file_to_spec(&ragged).is_err());
    }
}
