//! Input documents describing a finite space.

use std::collections::HashSet;

use fintop::decomp::Decomposition;
use fintop::{alexandrov, validate_topology, Error, FiniteTopology, PointSet, Preorder};
use serde::{Deserialize, Serialize};

use crate::Failure;

pub const CLOSURE_TAG: &str = "reflexive-transitive";

/// A space given by its open sets, or by generating pairs of its
/// specialization preorder.
#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub points: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Optional decomposition into blocks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<usize>>>,
}

/// A validated document.
#[derive(Clone, Debug)]
pub struct Space {
    pub top: FiniteTopology,
    pub labels: Option<Vec<String>>,
    pub decomposition: Option<Decomposition>,
}

impl SpaceDoc {
    pub fn from_topology(top: &FiniteTopology) -> Self {
        SpaceDoc {
            points: top.len(),
            opens: Some(top.opens().iter().map(|u| u.to_vec()).collect()),
            ..SpaceDoc::default()
        }
    }

    pub fn parse(text: &str) -> Result<Space, Failure> {
        let doc: SpaceDoc = serde_json::from_str(text).map_err(|e| Failure::usage(format!("invalid document: {e}")))?;
        doc.build()
    }

    pub fn build(&self) -> Result<Space, Failure> {
        let n = self.points;
        if n > fintop::pointset::MAX_POINTS {
            return Err(Failure::usage(format!("{n} points exceed the supported maximum")));
        }
        let set = |xs: &[usize]| -> Result<PointSet, Failure> {
            match xs.iter().find(|&&x| x >= n) {
                Some(&x) => Err(Failure::usage(format!("point {x} is outside a universe of {n} points"))),
                None => Ok(PointSet::from_indices(n, xs.iter().copied())),
            }
        };
        let top = match (&self.opens, &self.leq) {
            (Some(opens), None) => {
                if self.closure.is_some() {
                    return Err(Failure::usage("closure applies only to leq".into()));
                }
                let family = opens.iter().map(|u| set(u)).collect::<Result<Vec<_>, _>>()?;
                validate_topology(n, family).map_err(Failure::invalid)?
            }
            (None, Some(pairs)) => {
                if self.closure.as_deref() != Some(CLOSURE_TAG) {
                    return Err(Failure::usage(format!("leq requires \"closure\": \"{CLOSURE_TAG}\"")));
                }
                for p in pairs {
                    set(p)?;
                }
                let pre = Preorder::closure_of(n, pairs.iter().map(|p| (p[0], p[1]))).map_err(Failure::invalid)?;
                alexandrov(&pre)
            }
            _ => return Err(Failure::usage("exactly one of opens and leq is required".into())),
        };
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(Failure::usage(format!("{} labels for {n} points", labels.len())));
            }
            let mut seen = HashSet::new();
            if let Some(l) = labels.iter().find(|l| !seen.insert(l.as_str())) {
                return Err(Failure::usage(format!("duplicate label {l:?}")));
            }
        }
        let decomposition = match &self.blocks {
            None => None,
            Some(blocks) => {
                let blocks = blocks.iter().map(|b| set(b)).collect::<Result<Vec<_>, _>>()?;
                Some(Decomposition::new(n, blocks).map_err(Failure::invalid)?)
            }
        };
        Ok(Space { top, labels: self.labels.clone(), decomposition })
    }
}

/// Machine-readable name of a validation error.
pub fn error_code(e: &Error) -> &'static str {
    match e {
        Error::TooManyPoints(_) => "too_many_points",
        Error::PointOutOfRange { .. } => "point_out_of_range",
        Error::UniverseMismatch { .. } => "universe_mismatch",
        Error::MissingEmptyOrFull => "missing_empty_or_full",
        Error::NotClosedUnderUnion(..) => "not_closed_under_union",
        Error::NotClosedUnderIntersection(..) => "not_closed_under_intersection",
        Error::NotReflexive(_) => "not_reflexive",
        Error::NotTransitive(..) => "not_transitive",
        Error::OverlappingBlocks(_) => "overlapping_blocks",
        Error::UncoveredPoint(_) => "uncovered_point",
        Error::EmptyBlock => "empty_block",
        Error::SizeTooLarge(_) => "size_too_large",
        Error::NotPointLevel(_) => "not_point_level",
    }
}

/// The offending sets or points of a validation error, if any.
pub fn error_witness(e: &Error) -> Option<serde_json::Value> {
    use serde_json::json;
    match e {
        Error::NotClosedUnderUnion(u, v) | Error::NotClosedUnderIntersection(u, v) => Some(json!([u, v])),
        Error::PointOutOfRange { point, .. } => Some(json!([point])),
        Error::OverlappingBlocks(x) | Error::UncoveredPoint(x) | Error::NotReflexive(x) => Some(json!([x])),
        Error::NotTransitive(x, y, z) => Some(json!([x, y, z])),
        _ => None,
    }
}
