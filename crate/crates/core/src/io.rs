//! JSON file formats for graphs, tangles, weights and reports.
//!
//! Vertex lists are always written sorted; rationals are `"p/q"` strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::decider::{Synthesis, WeightFunction};
use crate::error::{Error, Result};
use crate::oracle::{CountLawReport, VerificationReport};
use crate::ratlp::format_rational;
use crate::sepsys::{GroundSystem, Mode, Separation};
use crate::tangles::{induce_from_set, induce_from_weights, maximal_elements, Induced, Orientation, TangleCertificate, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub mode: Mode,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<Vec<String>>,
}

impl GraphJson {
    pub fn to_ground(&self) -> Result<GroundSystem> {
        GroundSystem::new(self.mode, self.vertices.iter().cloned(), self.edges.iter().cloned())
    }

    pub fn from_ground(g: &GroundSystem) -> Self {
        GraphJson {
            mode: g.mode(),
            vertices: g.names().to_vec(),
            edges: g.edges().iter().map(|&e| g.names_of(e)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationJson {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
}

impl SeparationJson {
    pub fn from_separation(g: &GroundSystem, s: &Separation) -> Self {
        SeparationJson {
            a: g.names_of(s.small()),
            b: g.names_of(s.big()),
        }
    }

    pub fn to_separation(&self, g: &GroundSystem) -> Result<Separation> {
        g.separation(&self.a, &self.b)
    }
}

fn separations_json(g: &GroundSystem, seps: &[Separation]) -> Vec<SeparationJson> {
    seps.iter().map(|s| SeparationJson::from_separation(g, s)).collect()
}

/// A tangle file: explicit maximal elements, or a majority-vote generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum TangleJson {
    Explicit {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        maximal: Vec<SeparationJson>,
    },
    MajoritySet {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        #[serde(rename = "X")]
        x: Vec<String>,
    },
    MajorityWeights {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        w: BTreeMap<String, u64>,
    },
}

impl TangleJson {
    pub fn explicit(g: &GroundSystem, o: &Orientation) -> Self {
        TangleJson::Explicit {
            k: Some(o.k()),
            maximal: separations_json(g, &maximal_elements(o)),
        }
    }

    pub fn k(&self) -> Option<usize> {
        match self {
            TangleJson::Explicit { k, .. }
            | TangleJson::MajoritySet { k, .. }
            | TangleJson::MajorityWeights { k, .. } => *k,
        }
    }

    /// Builds the orientation for parameter `k`. A `k` stored in the file
    /// must agree; majority generators must not tie.
    pub fn resolve(&self, g: &GroundSystem, k: usize) -> Result<Orientation> {
        if let Some(file_k) = self.k() {
            if file_k != k {
                return Err(Error::MalformedOrientation(format!(
                    "tangle file is for k = {file_k}, asked for k = {k}"
                )));
            }
        }
        let induced = match self {
            TangleJson::Explicit { maximal, .. } => {
                let maximal = maximal
                    .iter()
                    .map(|s| s.to_separation(g))
                    .collect::<Result<Vec<_>>>()?;
                return Orientation::downward_closure(g, k, &maximal);
            }
            TangleJson::MajoritySet { x, .. } => induce_from_set(g, k, g.vertex_set(x)?)?,
            TangleJson::MajorityWeights { w, .. } => {
                induce_from_weights(g, k, &WeightFunction::from_named(g, w)?)?
            }
        };
        match induced {
            Induced::Decided(o) => Ok(o),
            Induced::Ties(ties) => Err(Error::MalformedOrientation(format!(
                "majority vote ties on {} separation(s), first {}",
                ties.len(),
                g.display(&ties[0])
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TieReportJson {
    pub ties: Vec<SeparationJson>,
}

impl TieReportJson {
    pub fn new(g: &GroundSystem, ties: &[Separation]) -> Self {
        TieReportJson {
            ties: separations_json(g, ties),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceJson {
    pub n: usize,
    pub x: Vec<String>,
    pub branch: String,
    pub bumped: bool,
    pub bumped_vertex: Option<String>,
    pub epsilon: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsJson {
    pub weights: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceJson>,
}

impl WeightsJson {
    pub fn from_synthesis(g: &GroundSystem, syn: &Synthesis) -> Self {
        let p = &syn.provenance;
        WeightsJson {
            weights: syn.weights.to_named(g),
            provenance: Some(ProvenanceJson {
                n: p.maximals.len(),
                x: p.x.iter().map(format_rational).collect(),
                branch: p.branch.as_str().to_string(),
                bumped: p.bumped_vertex.is_some(),
                bumped_vertex: p.bumped_vertex.map(|v| g.name(v).to_string()),
                epsilon: p.epsilon.as_ref().map(format_rational),
            }),
        }
    }

    pub fn to_weights(&self, g: &GroundSystem) -> Result<WeightFunction> {
        WeightFunction::from_named(g, &self.weights)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationJson {
    pub kind: String,
    pub separations: Vec<SeparationJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub verdict: bool,
    pub witness: Option<ViolationJson>,
}

impl CertificateJson {
    pub fn new(g: &GroundSystem, cert: &TangleCertificate) -> Self {
        let witness = cert.witness.as_ref().map(|v| {
            let (kind, seps): (&str, Vec<Separation>) = match v {
                Violation::Cover(t) => ("cover", t.to_vec()),
                Violation::Inconsistent { larger, smaller } => {
                    ("inconsistent", vec![*larger, smaller.inverse()])
                }
                Violation::CornerReversal {
                    first,
                    second,
                    corner,
                } => ("corner-reversal", vec![*first, *second, *corner]),
                Violation::Irregular(s) => ("irregular", vec![*s]),
            };
            ViolationJson {
                kind: kind.to_string(),
                separations: separations_json(g, &seps),
            }
        });
        CertificateJson {
            verdict: cert.verdict,
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeciderWitnessJson {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
    pub w_a: u128,
    pub w_b: u128,
    pub in_tangle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub ok: bool,
    pub checked: usize,
    pub witness: Option<DeciderWitnessJson>,
}

impl VerificationJson {
    pub fn new(g: &GroundSystem, r: &VerificationReport) -> Self {
        VerificationJson {
            ok: r.ok,
            checked: r.checked,
            witness: r.witness.as_ref().map(|w| DeciderWitnessJson {
                a: g.names_of(w.separation.small()),
                b: g.names_of(w.separation.big()),
                w_a: w.weight_small,
                w_b: w.weight_big,
                in_tangle: w.in_orientation,
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationListJson {
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separations: Option<Vec<SeparationJson>>,
}

impl SeparationListJson {
    pub fn new(g: &GroundSystem, seps: &[Separation], count_only: bool) -> Self {
        SeparationListJson {
            count: seps.len(),
            separations: (!count_only).then(|| separations_json(g, seps)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleListJson {
    pub count: usize,
    pub tangles: Vec<TangleJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Search01Json {
    pub found: bool,
    #[serde(rename = "X")]
    pub x: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountLawJson {
    pub ok: bool,
    pub enumerated: usize,
    pub brute_force: usize,
    pub formula: u128,
}

impl From<&CountLawReport> for CountLawJson {
    fn from(r: &CountLawReport) -> Self {
        CountLawJson {
            ok: r.ok,
            enumerated: r.enumerated,
            brute_force: r.brute_force,
            formula: r.formula,
        }
    }
}
