//! Screening single-unknot contact surgery diagrams as candidates for a
//! contact version of the Kirby move that adds or removes a ±1-framed unknot.
//!
//! A candidate is contact `n`-surgery on a Legendrian unknot with `tb = -m`
//! where `n = m ± 1`, so that it is topologically a ±1-surgery on an unknot
//! and gives back the 3-sphere. `C1` holds the `n = m - 1` diagrams and `C2`
//! the `n = m + 1` ones. For each (±1)-surgery presentation the topological
//! framing unknot `(tb -1, rot 0)` is followed through the surgery; a
//! Bennequin violation afterwards certifies an overtwisted result.
//!
//! A branch that passes is only *consistent* with the standard tight
//! structure. Tightness of those branches is known from outside this crate
//! and is never computed here.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::det;
use crate::legendrian::{
    kirby_topological_condition, validate_unknot, ExternalKnot, LegendrianUnknot, Sign,
};
use crate::presentation::{enumerate_presentations, linking_matrix};
use crate::transform::{bennequin, post_surgery_invariants, BennequinVerdict};

pub const ZERO_SURGERY_REASON: &str = "contact 0-surgery yields an overtwisted contact structure";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Collection {
    C1,
    C2,
    #[serde(rename = "rejected")]
    Rejected,
}

impl Collection {
    pub fn name(self) -> &'static str {
        match self {
            Collection::C1 => "C1",
            Collection::C2 => "C2",
            Collection::Rejected => "rejected",
        }
    }
}

/// Contact `n`-surgery on a Legendrian unknot with `tb = -m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CandidateDiagram {
    pub m: i64,
    pub n: i64,
    pub rot: i64,
    /// Sign of the equivalent topological surgery.
    pub branch: Sign,
}

impl CandidateDiagram {
    pub fn knot(&self) -> LegendrianUnknot {
        LegendrianUnknot::new(-self.m, self.rot).expect("validated by the gate")
    }

    pub fn collection(&self) -> Collection {
        match self.branch {
            Sign::Minus => Collection::C1,
            Sign::Plus => Collection::C2,
        }
    }

    pub fn mirror(&self) -> Self {
        CandidateDiagram {
            rot: -self.rot,
            ..*self
        }
    }
}

/// Rotation number used when none is given: `-(m - 1)`.
pub fn default_rot(m: i64) -> i64 {
    1 - m
}

/// Admits a diagram only if it meets the necessary conditions for a
/// candidate.
pub fn gate(m: i64, n: i64, rot: i64) -> Result<CandidateDiagram> {
    if m < 1 {
        return Err(Error::GateRejection(format!("m >= 1 fails (m = {m})")));
    }
    if n < 0 {
        return Err(Error::GateRejection(format!("n >= 0 fails (n = {n})")));
    }
    let branch = kirby_topological_condition(m, n).ok_or_else(|| {
        Error::GateRejection(format!(
            "topological condition n = m ± 1 fails (m = {m}, n = {n})"
        ))
    })?;
    if let Err(Error::InvalidLegendrian { condition, .. }) = validate_unknot(-m, rot) {
        return Err(Error::GateRejection(format!(
            "Legendrian unknot (tb {}, rot {rot}) violates {condition}",
            -m
        )));
    }
    Ok(CandidateDiagram { m, n, rot, branch })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    OvertwistedCertified,
    ConsistentWithStandardTight,
}

impl VerdictStatus {
    pub fn name(self) -> &'static str {
        match self {
            VerdictStatus::OvertwistedCertified => "overtwisted-certified",
            VerdictStatus::ConsistentWithStandardTight => "consistent-with-standard-tight",
        }
    }
}

/// Verdict on one (±1)-surgery presentation of a candidate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PresentationVerdict {
    pub sign_choice: Vec<Sign>,
    /// Determinant of the linking matrix; absent for contact 0-surgery.
    pub det: Option<i64>,
    pub tb_new: Option<i64>,
    pub rot_new: Option<i64>,
    pub bennequin: Option<BennequinVerdict>,
    pub status: VerdictStatus,
    pub reason: String,
}

impl PresentationVerdict {
    pub fn label(&self) -> String {
        Sign::format_seq(&self.sign_choice)
    }

    pub fn survives(&self) -> bool {
        self.status == VerdictStatus::ConsistentWithStandardTight
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CandidateReport {
    pub diagram: CandidateDiagram,
    pub collection: Collection,
    pub verdicts: Vec<PresentationVerdict>,
    /// Some presentation is consistent with the standard tight 3-sphere.
    pub survives: bool,
    pub summary: String,
}

/// Runs every (±1)-surgery presentation of a gated diagram and decides each.
pub fn classify(d: &CandidateDiagram) -> Result<CandidateReport> {
    let collection = d.collection();
    let verdicts = if d.n == 0 {
        vec![PresentationVerdict {
            sign_choice: Vec::new(),
            det: None,
            tb_new: None,
            rot_new: None,
            bennequin: None,
            status: VerdictStatus::OvertwistedCertified,
            reason: ZERO_SURGERY_REASON.to_string(),
        }]
    } else {
        let r = Ratio::from_integer(BigInt::from(d.n));
        let ext = ExternalKnot::framing_unknot(d.branch);
        enumerate_presentations(d.knot(), &r)?
            .iter()
            .map(|p| {
                let det = det(&linking_matrix(p))
                    .to_i64()
                    .ok_or_else(|| Error::InvalidInput("determinant out of range".into()))?;
                let inv = post_surgery_invariants(p, &ext)?;
                let check = bennequin(inv.tb_new, inv.rot_new);
                let (status, reason) = if check.satisfied {
                    (
                        VerdictStatus::ConsistentWithStandardTight,
                        "framing unknot satisfies the Bennequin inequality; tightness is asserted externally, not computed"
                            .to_string(),
                    )
                } else {
                    (
                        VerdictStatus::OvertwistedCertified,
                        format!(
                            "framing unknot bounds a disk with tb {} + |rot {}| > -1",
                            inv.tb_new, inv.rot_new
                        ),
                    )
                };
                Ok(PresentationVerdict {
                    sign_choice: p.sign_choice.clone(),
                    det: Some(det),
                    tb_new: Some(inv.tb_new),
                    rot_new: Some(inv.rot_new),
                    bennequin: Some(check),
                    status,
                    reason,
                })
            })
            .collect::<Result<Vec<_>>>()?
    };

    let survivors = verdicts.iter().filter(|v| v.survives()).count();
    let survives = survivors > 0;
    let summary = if survives {
        format!(
            "{}: {survivors} of {} presentation(s) consistent with the standard tight 3-sphere; survives as a potential contact Kirby move of type 1",
            collection.name(),
            verdicts.len()
        )
    } else {
        format!(
            "{}: every presentation is overtwisted; not a contact Kirby move of type 1",
            collection.name()
        )
    };

    Ok(CandidateReport {
        diagram: *d,
        collection,
        verdicts,
        survives,
        summary,
    })
}

/// Reports for `(m, m-1)` and `(m, m+1)` for every `1 ≤ m ≤ m_max`, in that order.
pub fn emit_table(m_max: i64) -> Result<Vec<CandidateReport>> {
    (1..=m_max)
        .flat_map(|m| [(m, m - 1), (m, m + 1)])
        .map(|(m, n)| classify(&gate(m, n, default_rot(m))?))
        .collect()
}

/// Magnitude check used by callers that want the homology-sphere condition.
pub fn is_unimodular(v: &PresentationVerdict) -> bool {
    v.det.is_some_and(|d| d.abs() == 1)
}
