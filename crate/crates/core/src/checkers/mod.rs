//! Structural predicates on finite Q-categories.
//!
//! Most checks have two arms: a criteria arm built on a characterization
//! (tensors and joins, preservation of cotensors and meets, …) and a
//! brute-force arm that enumerates weights or candidate adjoints. With
//! [`Arm::Both`] the two must agree or [`Error::Disagreement`] is returned.

mod cauchy;
mod completeness;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcat::DEFAULT_ENUMERATION_CAP;

pub use cauchy::{
    check_cotensor_scott_continuity, check_inclusion_left_adjoint, check_lambda_gamma, check_net,
    directed_subsets, forward_cauchy_weights, gamma_of, ideals, is_continuous_qcat, is_directed,
    lambda_of, NetIndex, NetReport,
};
pub use completeness::{
    is_cocomplete, is_complete, is_completely_codistributive, is_completely_distributive,
    sup_functor,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arm {
    #[default]
    Criteria,
    BruteForce,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Criteria,
    BruteForce,
    BothAgree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub arm: Arm,
    pub cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            arm: Arm::Criteria,
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl CheckOptions {
    pub fn with_arm(arm: Arm) -> Self {
        CheckOptions {
            arm,
            ..Self::default()
        }
    }
}

/// A counterexample, with objects, weights and quantale elements given by
/// their labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    NoTensor {
        p: String,
        x: String,
    },
    NoCotensor {
        p: String,
        x: String,
    },
    NoJoin {
        objects: Vec<String>,
    },
    NoMeet {
        objects: Vec<String>,
    },
    NoSup {
        weight: String,
    },
    NoInf {
        coweight: String,
    },
    CotensorNotPreserved {
        p: String,
        weight: String,
    },
    MeetNotPreserved {
        weights: Vec<String>,
    },
    NoLeftAdjoint {
        object: String,
    },
    LambdaGamma {
        law: String,
        ideal: Option<Vec<String>>,
        weight: Option<String>,
    },
    ContinuityGap {
        x: String,
        weight: String,
        lhs: String,
        rhs: String,
    },
    NotScottContinuous {
        p: String,
        directed: Vec<String>,
    },
}

impl Witness {
    /// The same counterexample read in the opposite category.
    pub(crate) fn dual(self) -> Witness {
        match self {
            Witness::NoTensor { p, x } => Witness::NoCotensor { p, x },
            Witness::NoCotensor { p, x } => Witness::NoTensor { p, x },
            Witness::NoJoin { objects } => Witness::NoMeet { objects },
            Witness::NoMeet { objects } => Witness::NoJoin { objects },
            Witness::NoSup { weight } => Witness::NoInf { coweight: weight },
            Witness::NoInf { coweight } => Witness::NoSup { weight: coweight },
            other => other,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerReport {
    pub verdict: bool,
    pub method: Method,
    pub witness: Option<Witness>,
}

type ArmResult = Result<(bool, Option<Witness>)>;

/// Runs the requested arm(s). The criteria arm's witness is preferred.
fn run_arms(
    check: &str,
    arm: Arm,
    criteria: impl FnOnce() -> ArmResult,
    brute: impl FnOnce() -> ArmResult,
) -> Result<CheckerReport> {
    match arm {
        Arm::Criteria => {
            let (verdict, witness) = criteria()?;
            Ok(CheckerReport {
                verdict,
                method: Method::Criteria,
                witness,
            })
        }
        Arm::BruteForce => {
            let (verdict, witness) = brute()?;
            Ok(CheckerReport {
                verdict,
                method: Method::BruteForce,
                witness,
            })
        }
        Arm::Both => {
            let (c, cw) = criteria()?;
            let (b, bw) = brute()?;
            if c != b {
                return Err(Error::Disagreement {
                    check: check.to_string(),
                    criteria: c,
                    brute_force: b,
                });
            }
            Ok(CheckerReport {
                verdict: c,
                method: Method::BothAgree,
                witness: cw.or(bw),
            })
        }
    }
}

fn brute_only(f: impl FnOnce() -> ArmResult) -> Result<CheckerReport> {
    let (verdict, witness) = f()?;
    Ok(CheckerReport {
        verdict,
        method: Method::BruteForce,
        witness,
    })
}
