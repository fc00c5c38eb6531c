//! 2-D parameter-region sweeps.
//!
//! A [`SliceSpec`] fixes three of the five parameters and sweeps the other
//! two over exact rational grids (`start + k·(stop-start)/steps`, no
//! floating steps, so every cell is exactly reproducible). Each cell gets
//! all four predicate verdicts, optional chain checks, and optional disk
//! evidence; cells are evaluated concurrently and written to pre-indexed
//! slots, so results are identical for any worker count.
//!
//! CSV column order (fixed): `a,b,c,d,e`, then per predicate its
//! sub-inequality columns in statement order (`thm1_c1..c4`, `thm2_c1..c4`,
//! `thm3_c1..c5`, `thm4_c1..c4`) with `thm{i}_ok` after each group, the
//! variant flags `thm3_with_thm1` and `thm4_proof_conditions`, then —
//! when enabled — `fejer`, `ozaki` (chain checks on the normalized prefix)
//! and `disk_ctc_log`, `disk_starlike` (positivity flags), and finally
//! `classification`. Invalid cells print empty strings in result columns.

use crate::analytic::{ks_star_evidence, EvalOptions, GridSpec};
use crate::criteria::{
    check_fejer, check_ozaki, predicate, LemmaVerdict, PredicateVerdict, Theorem,
    FLAG_PROOF_CONDITIONS, FLAG_WITH_THM1,
};
use crate::params::ParameterSet;
use crate::rational::{rational_serde, Rational};
use crate::series::{build_sequence, SequenceKind};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// One of the five parameter names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamName {
    A,
    B,
    C,
    D,
    E,
}

impl ParamName {
    pub const ALL: [ParamName; 5] = [
        ParamName::A,
        ParamName::B,
        ParamName::C,
        ParamName::D,
        ParamName::E,
    ];

    pub fn parse(text: &str) -> Option<ParamName> {
        match text.trim().to_ascii_lowercase().as_str() {
            "a" => Some(ParamName::A),
            "b" => Some(ParamName::B),
            "c" => Some(ParamName::C),
            "d" => Some(ParamName::D),
            "e" => Some(ParamName::E),
            _ => None,
        }
    }
}

impl fmt::Display for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParamName::A => "a",
            ParamName::B => "b",
            ParamName::C => "c",
            ParamName::D => "d",
            ParamName::E => "e",
        })
    }
}

/// One swept axis: exact rational endpoints and a step count. `steps = 0`
/// denotes a degenerate single-value axis (then `start = stop`); otherwise
/// `start < stop` and the axis takes `steps + 1` values.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AxisSpec {
    pub name: ParamName,
    #[serde(with = "rational_serde")]
    pub start: Rational,
    #[serde(with = "rational_serde")]
    pub stop: Rational,
    pub steps: usize,
}

impl AxisSpec {
    fn value(&self, k: usize) -> Rational {
        if self.steps == 0 {
            return self.start.clone();
        }
        let fraction = Rational::new(BigInt::from(k as u64), BigInt::from(self.steps as u64));
        &self.start + (&self.stop - &self.start) * fraction
    }
}

/// Per-cell analysis switches.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanOptions {
    /// Run the chain checks on each valid cell's normalized prefix.
    pub run_lemmas: bool,
    /// Prefix length for the chain checks.
    pub lemma_length: usize,
    /// Sample the two membership functionals on each valid cell (costly).
    pub run_disk: bool,
    pub grid: GridSpec,
    #[serde(with = "rational_serde")]
    pub tol: Rational,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            run_lemmas: false,
            lemma_length: 200,
            run_disk: false,
            grid: GridSpec::default(),
            tol: EvalOptions::default().tol,
        }
    }
}

/// Serde adapter for the fixed-parameter map, keeping the exact `p/q`
/// string form of each value.
mod fixed_map_serde {
    use super::{ParamName, Rational};
    use crate::rational::parse_rational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<ParamName, Rational>,
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        let as_strings: BTreeMap<ParamName, String> =
            map.iter().map(|(k, v)| (*k, v.to_string())).collect();
        as_strings.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> Result<BTreeMap<ParamName, Rational>, D::Error> {
        let as_strings = BTreeMap::<ParamName, String>::deserialize(de)?;
        as_strings
            .into_iter()
            .map(|(k, v)| Ok((k, parse_rational(&v).map_err(serde::de::Error::custom)?)))
            .collect()
    }
}

/// A 2-D slice of the parameter space: three fixed values and two axes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SliceSpec {
    #[serde(with = "fixed_map_serde")]
    pub fixed: BTreeMap<ParamName, Rational>,
    pub axes: [AxisSpec; 2],
    pub options: ScanOptions,
}

/// Scan-construction errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("parameter {name} must appear exactly once between fixed values and axes")]
    NameCoverage { name: String },
    #[error("axis {name}: start {start} must be below stop {stop} (or steps = 0 with start = stop)")]
    BadAxisRange {
        name: String,
        start: String,
        stop: String,
    },
    #[error("unknown target condition {name:?}")]
    UnknownCondition { name: String },
}

impl SliceSpec {
    /// Validates name coverage and axis ranges.
    pub fn new(
        fixed: BTreeMap<ParamName, Rational>,
        axes: [AxisSpec; 2],
        options: ScanOptions,
    ) -> Result<Self, ScanError> {
        for name in ParamName::ALL {
            let in_fixed = fixed.contains_key(&name) as usize;
            let on_axes = axes.iter().filter(|a| a.name == name).count();
            if in_fixed + on_axes != 1 {
                return Err(ScanError::NameCoverage {
                    name: name.to_string(),
                });
            }
        }
        for axis in &axes {
            let well_formed = if axis.steps == 0 {
                axis.start == axis.stop
            } else {
                axis.start < axis.stop
            };
            if !well_formed {
                return Err(ScanError::BadAxisRange {
                    name: axis.name.to_string(),
                    start: axis.start.to_string(),
                    stop: axis.stop.to_string(),
                });
            }
        }
        Ok(SliceSpec {
            fixed,
            axes,
            options,
        })
    }

    /// Number of cells, `(steps₁+1)·(steps₂+1)`.
    pub fn cell_count(&self) -> usize {
        (self.axes[0].steps + 1) * (self.axes[1].steps + 1)
    }

    fn tuple_at(&self, k0: usize, k1: usize) -> [Rational; 5] {
        let v0 = self.axes[0].value(k0);
        let v1 = self.axes[1].value(k1);
        let mut out: [Option<Rational>; 5] = [None, None, None, None, None];
        let slot = |name: ParamName| name as usize;
        out[slot(self.axes[0].name)] = Some(v0);
        out[slot(self.axes[1].name)] = Some(v1);
        for (name, value) in &self.fixed {
            out[slot(*name)] = Some(value.clone());
        }
        out.map(|v| v.expect("name coverage validated at construction"))
    }
}

/// Summary class of a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Classification {
    /// No predicate holds and no (requested) empirical support.
    #[serde(rename = "all-fail")]
    AllFail,
    /// At least one predicate holds; empirical evidence absent or negative.
    #[serde(rename = "predicate-only")]
    PredicateOnly,
    /// At least one predicate holds and the sampled functionals are positive.
    #[serde(rename = "predicate+empirical")]
    PredicateEmpirical,
    /// No predicate holds but the sampled functionals are positive.
    #[serde(rename = "empirical-only")]
    EmpiricalOnly,
    /// The tuple violates the parameter invariants (or the predicates
    /// reject it).
    #[serde(rename = "invalid")]
    Invalid,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::AllFail => "all-fail",
            Classification::PredicateOnly => "predicate-only",
            Classification::PredicateEmpirical => "predicate+empirical",
            Classification::EmpiricalOnly => "empirical-only",
            Classification::Invalid => "invalid",
        })
    }
}

/// Positivity summary of the two sampled membership functionals.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmpiricalSummary {
    pub ctc_log_positive: bool,
    pub ctc_log_min: String,
    pub starlike_positive: bool,
    pub starlike_min: String,
}

impl EmpiricalSummary {
    pub fn supported(&self) -> bool {
        self.ctc_log_positive && self.starlike_positive
    }
}

/// All results attached to one grid cell.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CellRecord {
    /// The five parameter values of this cell, in (a, b, c, d, e) order.
    pub values: [String; 5],
    /// Validated parameters; `None` for invalid cells.
    pub params: Option<ParameterSet>,
    /// Verdicts in theorem order T1..T4; `None` for invalid cells.
    pub verdicts: Option<Vec<PredicateVerdict>>,
    pub lemma_results: Option<BTreeMap<String, LemmaVerdict>>,
    pub empirical: Option<EmpiricalSummary>,
    pub classification: Classification,
}

impl CellRecord {
    fn verdict(&self, theorem: Theorem) -> Option<&PredicateVerdict> {
        self.verdicts
            .as_ref()
            .map(|v| &v[theorem.number() as usize - 1])
    }
}

/// A completed scan: the slice, row-major cells (outer axis first), and
/// per-class counts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanResult {
    pub spec: SliceSpec,
    pub cells: Vec<CellRecord>,
    pub summary: BTreeMap<Classification, usize>,
}

fn classify(cell_valid: bool, predicate_hit: bool, empirical: Option<&EmpiricalSummary>) -> Classification {
    if !cell_valid {
        return Classification::Invalid;
    }
    let empirical_hit = empirical.map(EmpiricalSummary::supported);
    match (predicate_hit, empirical_hit) {
        (true, Some(true)) => Classification::PredicateEmpirical,
        (true, _) => Classification::PredicateOnly,
        (false, Some(true)) => Classification::EmpiricalOnly,
        (false, _) => Classification::AllFail,
    }
}

fn evaluate_cell(spec: &SliceSpec, k0: usize, k1: usize) -> CellRecord {
    let tuple = spec.tuple_at(k0, k1);
    let values = tuple.clone().map(|v| v.to_string());
    let [a, b, c, d, e] = tuple;
    let params = match ParameterSet::new(a, b, c, d, e) {
        Ok(p) => p,
        Err(_) => {
            return CellRecord {
                values,
                params: None,
                verdicts: None,
                lemma_results: None,
                empirical: None,
                classification: Classification::Invalid,
            }
        }
    };
    let verdicts: Result<Vec<PredicateVerdict>, _> = Theorem::ALL
        .iter()
        .map(|&t| predicate(t, &params))
        .collect();
    let verdicts = match verdicts {
        Ok(v) => v,
        Err(_) => {
            // series-level valid but rejected by the predicates (d or e ≤ 0)
            return CellRecord {
                values,
                params: Some(params),
                verdicts: None,
                lemma_results: None,
                empirical: None,
                classification: Classification::Invalid,
            };
        }
    };
    let predicate_hit = verdicts.iter().any(|v| v.overall);

    let lemma_results = if spec.options.run_lemmas {
        let seq = build_sequence(&params, spec.options.lemma_length, SequenceKind::Normalized);
        let mut map = BTreeMap::new();
        if let Ok(v) = check_fejer(&seq) {
            map.insert("fejer".to_owned(), v);
        }
        if let Ok(v) = check_ozaki(&seq) {
            map.insert("ozaki".to_owned(), v);
        }
        Some(map)
    } else {
        None
    };

    let empirical = if spec.options.run_disk {
        let opts = EvalOptions {
            tol: spec.options.tol.clone(),
            ..EvalOptions::default()
        };
        match ks_star_evidence(&params, SequenceKind::Normalized, &spec.options.grid, &opts) {
            Ok((ctc, star)) => Some(EmpiricalSummary {
                ctc_log_positive: ctc.positive,
                ctc_log_min: format!("{:.16e}", ctc.min_value.to_f64()),
                starlike_positive: star.positive,
                starlike_min: format!("{:.16e}", star.min_value.to_f64()),
            }),
            Err(_) => None,
        }
    } else {
        None
    };

    let classification = classify(true, predicate_hit, empirical.as_ref());
    CellRecord {
        values,
        params: Some(params),
        verdicts: Some(verdicts),
        lemma_results,
        empirical,
        classification,
    }
}

/// Runs the scan. Cells are evaluated concurrently into pre-indexed slots
/// (outer axis 1, inner axis 2), so the output is deterministic for any
/// worker count; invalid tuples are recorded, never fatal.
pub fn run_scan(spec: &SliceSpec) -> ScanResult {
    let inner = spec.axes[1].steps + 1;
    let cells: Vec<CellRecord> = (0..spec.cell_count())
        .into_par_iter()
        .map(|k| evaluate_cell(spec, k / inner, k % inner))
        .collect();
    let mut summary = BTreeMap::new();
    for cell in &cells {
        *summary.entry(cell.classification).or_insert(0) += 1;
    }
    ScanResult {
        spec: spec.clone(),
        cells,
        summary,
    }
}

/// A named condition a scan cell can satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionName {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    /// Statement parts of T3 together with the full T1 condition set.
    Thm3WithThm1,
    /// Statement parts of T4 together with its proof-condition pair.
    Thm4WithProofConditions,
}

impl ConditionName {
    pub fn parse(text: &str) -> Result<Self, ScanError> {
        match text.trim().to_ascii_lowercase().as_str() {
            "thm1" => Ok(ConditionName::Thm1),
            "thm2" => Ok(ConditionName::Thm2),
            "thm3" => Ok(ConditionName::Thm3),
            "thm4" => Ok(ConditionName::Thm4),
            "thm3_with_thm1" => Ok(ConditionName::Thm3WithThm1),
            "thm4_with_proof_conditions" => Ok(ConditionName::Thm4WithProofConditions),
            other => Err(ScanError::UnknownCondition {
                name: other.to_owned(),
            }),
        }
    }

    pub fn satisfied_by(self, cell: &CellRecord) -> bool {
        let overall = |t: Theorem| cell.verdict(t).map(|v| v.overall).unwrap_or(false);
        match self {
            ConditionName::Thm1 => overall(Theorem::T1),
            ConditionName::Thm2 => overall(Theorem::T2),
            ConditionName::Thm3 => overall(Theorem::T3),
            ConditionName::Thm4 => overall(Theorem::T4),
            ConditionName::Thm3WithThm1 => cell
                .verdict(Theorem::T3)
                .and_then(|v| v.flag(FLAG_WITH_THM1))
                .unwrap_or(false),
            ConditionName::Thm4WithProofConditions => cell
                .verdict(Theorem::T4)
                .map(|v| v.overall && v.flag(FLAG_PROOF_CONDITIONS).unwrap_or(false))
                .unwrap_or(false),
        }
    }
}

impl fmt::Display for ConditionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConditionName::Thm1 => "thm1",
            ConditionName::Thm2 => "thm2",
            ConditionName::Thm3 => "thm3",
            ConditionName::Thm4 => "thm4",
            ConditionName::Thm3WithThm1 => "thm3_with_thm1",
            ConditionName::Thm4WithProofConditions => "thm4_with_proof_conditions",
        })
    }
}

/// First cell (row-major order) whose named condition holds, if any.
pub fn find_satisfying(spec: &SliceSpec, target: ConditionName) -> Option<ParameterSet> {
    let result = run_scan(spec);
    result
        .cells
        .iter()
        .find(|cell| target.satisfied_by(cell))
        .and_then(|cell| cell.params.clone())
}

impl ScanResult {
    /// Fixed, documented CSV header for this scan's option set.
    pub fn csv_header(&self) -> String {
        let mut cols: Vec<String> = ["a", "b", "c", "d", "e"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let group_sizes = [(1usize, 4usize), (2, 4), (3, 5), (4, 4)];
        for (t, parts) in group_sizes {
            for i in 1..=parts {
                cols.push(format!("thm{t}_c{i}"));
            }
            cols.push(format!("thm{t}_ok"));
        }
        cols.push("thm3_with_thm1".to_owned());
        cols.push("thm4_proof_conditions".to_owned());
        if self.spec.options.run_lemmas {
            cols.push("fejer".to_owned());
            cols.push("ozaki".to_owned());
        }
        if self.spec.options.run_disk {
            cols.push("disk_ctc_log".to_owned());
            cols.push("disk_starlike".to_owned());
        }
        cols.push("classification".to_owned());
        cols.join(",")
    }

    /// Deterministic CSV rendering: exact `p/q` parameter strings, `true`/
    /// `false` flags, one row per cell in scan order.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.csv_header());
        out.push('\n');
        for cell in &self.cells {
            let mut fields: Vec<String> = cell.values.to_vec();
            let blank = |fields: &mut Vec<String>, n: usize| {
                fields.extend(std::iter::repeat(String::new()).take(n))
            };
            match &cell.verdicts {
                Some(verdicts) => {
                    for verdict in verdicts {
                        for part in &verdict.parts {
                            fields.push(part.satisfied.to_string());
                        }
                        fields.push(verdict.overall.to_string());
                    }
                    fields.push(
                        verdicts[2]
                            .flag(FLAG_WITH_THM1)
                            .unwrap_or(false)
                            .to_string(),
                    );
                    fields.push(
                        verdicts[3]
                            .flag(FLAG_PROOF_CONDITIONS)
                            .unwrap_or(false)
                            .to_string(),
                    );
                }
                None => blank(&mut fields, 4 + 1 + 4 + 1 + 5 + 1 + 4 + 1 + 2),
            }
            if self.spec.options.run_lemmas {
                match &cell.lemma_results {
                    Some(map) => {
                        for key in ["fejer", "ozaki"] {
                            fields.push(
                                map.get(key)
                                    .map(|v| v.holds.to_string())
                                    .unwrap_or_default(),
                            );
                        }
                    }
                    None => blank(&mut fields, 2),
                }
            }
            if self.spec.options.run_disk {
                match &cell.empirical {
                    Some(e) => {
                        fields.push(e.ctc_log_positive.to_string());
                        fields.push(e.starlike_positive.to_string());
                    }
                    None => blank(&mut fields, 2),
                }
            }
            fields.push(cell.classification.to_string());
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    /// Counts cells in each classification, recomputed from the cells.
    pub fn recount(&self) -> BTreeMap<Classification, usize> {
        let mut counts = BTreeMap::new();
        for cell in &self.cells {
            *counts.entry(cell.classification).or_insert(0) += 1;
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn unit_box(steps: usize) -> SliceSpec {
        let mut fixed = BTreeMap::new();
        fixed.insert(ParamName::A, int(1));
        fixed.insert(ParamName::B, int(1));
        fixed.insert(ParamName::C, int(1));
        SliceSpec::new(
            fixed,
            [
                AxisSpec {
                    name: ParamName::D,
                    start: int(1),
                    stop: int(3),
                    steps,
                },
                AxisSpec {
                    name: ParamName::E,
                    start: int(1),
                    stop: int(3),
                    steps,
                },
            ],
            ScanOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn three_by_three_box_counts() {
        let result = run_scan(&unit_box(2));
        assert_eq!(result.cells.len(), 9);
        let thm1_true = result
            .cells
            .iter()
            .filter(|c| ConditionName::Thm1.satisfied_by(c))
            .count();
        assert_eq!(thm1_true, 8, "only d = e = 1 fails");
        // the combined third condition set holds exactly at the borderline
        // tuples (d,e) = (1,2) and (2,1), where the series degenerates to
        // -log(1-z) (nA_n ≡ 1) and every bound polynomial vanishes
        let thm3_combined: Vec<&CellRecord> = result
            .cells
            .iter()
            .filter(|c| ConditionName::Thm3WithThm1.satisfied_by(c))
            .collect();
        assert_eq!(thm3_combined.len(), 2);
        let hits: Vec<(&str, &str)> = thm3_combined
            .iter()
            .map(|c| (c.values[3].as_str(), c.values[4].as_str()))
            .collect();
        assert_eq!(hits, vec![("1", "2"), ("2", "1")]);
    }

    #[test]
    fn cells_match_direct_predicate_calls() {
        let result = run_scan(&unit_box(2));
        for cell in &result.cells {
            let params = cell.params.as_ref().unwrap();
            for (i, theorem) in Theorem::ALL.iter().enumerate() {
                let direct = predicate(*theorem, params).unwrap();
                let from_scan = &cell.verdicts.as_ref().unwrap()[i];
                assert_eq!(direct.overall, from_scan.overall);
                assert_eq!(direct.parts.len(), from_scan.parts.len());
                for (p1, p2) in direct.parts.iter().zip(&from_scan.parts) {
                    assert_eq!(p1.lhs, p2.lhs);
                    assert_eq!(p1.rhs, p2.rhs);
                }
            }
        }
    }

    #[test]
    fn find_satisfying_row_major_order() {
        let spec = unit_box(2);
        let found = find_satisfying(&spec, ConditionName::Thm1).unwrap();
        // row-major: (d=1,e=1) fails, (d=1,e=2) is the first hit
        assert_eq!(found.d(), &int(1));
        assert_eq!(found.e(), &int(2));
        // the combined condition set's first hit is the same borderline cell
        let combined = find_satisfying(&spec, ConditionName::Thm3WithThm1).unwrap();
        assert_eq!((combined.d(), combined.e()), (&int(1), &int(2)));
        // single-cell probe: de < 3abc
        let mut fixed = BTreeMap::new();
        fixed.insert(ParamName::A, int(1));
        fixed.insert(ParamName::B, int(1));
        fixed.insert(ParamName::C, int(1));
        let point = SliceSpec::new(
            fixed,
            [
                AxisSpec {
                    name: ParamName::D,
                    start: int(1),
                    stop: int(1),
                    steps: 0,
                },
                AxisSpec {
                    name: ParamName::E,
                    start: int(1),
                    stop: int(1),
                    steps: 0,
                },
            ],
            ScanOptions::default(),
        )
        .unwrap();
        assert_eq!(find_satisfying(&point, ConditionName::Thm2), None);
    }

    #[test]
    fn degenerate_single_cell_scan() {
        let mut fixed = BTreeMap::new();
        fixed.insert(ParamName::A, int(1));
        fixed.insert(ParamName::B, int(1));
        fixed.insert(ParamName::C, int(1));
        let spec = SliceSpec::new(
            fixed,
            [
                AxisSpec {
                    name: ParamName::D,
                    start: int(2),
                    stop: int(2),
                    steps: 0,
                },
                AxisSpec {
                    name: ParamName::E,
                    start: int(2),
                    stop: int(2),
                    steps: 0,
                },
            ],
            ScanOptions::default(),
        )
        .unwrap();
        let result = run_scan(&spec);
        assert_eq!(result.cells.len(), 1);
        assert!(ConditionName::Thm1.satisfied_by(&result.cells[0]));
    }

    #[test]
    fn rejects_bad_specs() {
        let mut fixed = BTreeMap::new();
        fixed.insert(ParamName::A, int(1));
        fixed.insert(ParamName::B, int(1));
        // c missing entirely
        let err = SliceSpec::new(
            fixed.clone(),
            [
                AxisSpec {
                    name: ParamName::D,
                    start: int(1),
                    stop: int(3),
                    steps: 2,
                },
                AxisSpec {
                    name: ParamName::E,
                    start: int(1),
                    stop: int(3),
                    steps: 2,
                },
            ],
            ScanOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, ScanError::NameCoverage { .. }));

        fixed.insert(ParamName::C, int(1));
        let err = SliceSpec::new(
            fixed,
            [
                AxisSpec {
                    name: ParamName::D,
                    start: int(3),
                    stop: int(1),
                    steps: 2,
                },
                AxisSpec {
                    name: ParamName::E,
                    start: int(1),
                    stop: int(3),
                    steps: 2,
                },
            ],
            ScanOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, ScanError::BadAxisRange { .. }));
    }

    #[test]
    fn invalid_cells_are_recorded_not_fatal() {
        let mut fixed = BTreeMap::new();
        fixed.insert(ParamName::B, int(1));
        fixed.insert(ParamName::C, int(1));
        fixed.insert(ParamName::E, int(2));
        // a sweeps through 0 (invalid) and d through -1 (pole)
        let spec = SliceSpec::new(
            fixed,
            [
                AxisSpec {
                    name: ParamName::A,
                    start: int(0),
                    stop: int(1),
                    steps: 1,
                },
                AxisSpec {
                    name: ParamName::D,
                    start: int(-1),
                    stop: int(1),
                    steps: 2,
                },
            ],
            ScanOptions::default(),
        )
        .unwrap();
        let result = run_scan(&spec);
        assert_eq!(result.cells.len(), 6);
        let invalid = result
            .cells
            .iter()
            .filter(|c| c.classification == Classification::Invalid)
            .count();
        // a = 0 row: all 3 invalid; a = 1 row: d = -1 pole and d = 0 pole
        // are invalid, d = 1 valid
        assert_eq!(invalid, 5);
        assert_eq!(result.summary[&Classification::Invalid], 5);
        assert_eq!(result.recount(), result.summary);
    }

    #[test]
    fn classification_branches() {
        let hit = EmpiricalSummary {
            ctc_log_positive: true,
            ctc_log_min: "1e0".into(),
            starlike_positive: true,
            starlike_min: "1e0".into(),
        };
        let miss = EmpiricalSummary {
            ctc_log_positive: true,
            ctc_log_min: "1e0".into(),
            starlike_positive: false,
            starlike_min: "-1e0".into(),
        };
        assert_eq!(classify(false, true, None), Classification::Invalid);
        assert_eq!(classify(true, true, None), Classification::PredicateOnly);
        assert_eq!(classify(true, false, None), Classification::AllFail);
        assert_eq!(
            classify(true, true, Some(&hit)),
            Classification::PredicateEmpirical
        );
        assert_eq!(classify(true, true, Some(&miss)), Classification::PredicateOnly);
        assert_eq!(
            classify(true, false, Some(&hit)),
            Classification::EmpiricalOnly
        );
        assert_eq!(classify(true, false, Some(&miss)), Classification::AllFail);
    }

    #[test]
    fn scan_with_lemmas_and_disk_evidence() {
        let mut fixed = BTreeMap::new();
        fixed.insert(ParamName::A, int(1));
        fixed.insert(ParamName::B, int(1));
        fixed.insert(ParamName::C, int(1));
        let mut options = ScanOptions::default();
        options.run_lemmas = true;
        options.lemma_length = 40;
        options.run_disk = true;
        options.grid = GridSpec {
            n_r: 4,
            n_theta: 8,
            r_max: crate::rational::ratio(3, 4),
        };
        let spec = SliceSpec::new(
            fixed,
            [
                AxisSpec {
                    name: ParamName::D,
                    start: int(2),
                    stop: int(2),
                    steps: 0,
                },
                AxisSpec {
                    name: ParamName::E,
                    start: int(2),
                    stop: int(2),
                    steps: 0,
                },
            ],
            options,
        )
        .unwrap();
        let result = run_scan(&spec);
        let cell = &result.cells[0];
        let lemmas = cell.lemma_results.as_ref().unwrap();
        assert!(lemmas["fejer"].holds && lemmas["ozaki"].holds);
        let empirical = cell.empirical.as_ref().unwrap();
        assert!(empirical.supported());
        assert_eq!(cell.classification, Classification::PredicateEmpirical);
        let header = result.to_csv();
        let header = header.lines().next().unwrap();
        assert!(header.contains("fejer,ozaki"));
        assert!(header.contains("disk_ctc_log,disk_starlike"));
    }

    #[test]
    fn csv_is_deterministic_and_documented() {
        let result = run_scan(&unit_box(1));
        let csv1 = result.to_csv();
        let csv2 = run_scan(&unit_box(1)).to_csv();
        assert_eq!(csv1, csv2);
        let header = csv1.lines().next().unwrap();
        assert!(header.starts_with("a,b,c,d,e,thm1_c1"));
        assert!(header.ends_with("classification"));
        let width = header.split(',').count();
        for line in csv1.lines().skip(1) {
            assert_eq!(line.split(',').count(), width);
        }
    }
}
