//! Structured command output. Every report serializes to JSON and renders as text.

use serde::{Deserialize, Serialize};

use bilip_core::lipschitz::{
    CertificateKind, DegreeReport, MultiplicityReport, NormalityProxyReport, SecantRoute, Verdict,
};
use bilip_core::sampler::DistortionReport;
use bilip_core::{GroebnerBasis, Ideal};

/// Exit code for a completed run whose verification failed.
pub const VERIFICATION_FAILED: u8 = 5;

pub trait Report: Serialize {
    fn text(&self) -> String;

    fn exit_code(&self) -> u8 {
        0
    }
}

fn join_lines(items: &[String]) -> String {
    if items.is_empty() {
        "0".to_string()
    } else {
        items.join("\n")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealReport {
    pub ring: Vec<String>,
    pub generators: Vec<String>,
}

impl IdealReport {
    pub fn new(ideal: &Ideal) -> Self {
        IdealReport {
            ring: ideal.ring().variables().to_vec(),
            generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
        }
    }
}

impl Report for IdealReport {
    fn text(&self) -> String {
        join_lines(&self.generators)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisReport {
    pub order: String,
    pub basis: Vec<String>,
}

impl BasisReport {
    pub fn new(order: &str, gb: &GroebnerBasis) -> Self {
        BasisReport {
            order: order.to_string(),
            basis: gb.elements().iter().map(|g| g.to_string()).collect(),
        }
    }
}

impl Report for BasisReport {
    fn text(&self) -> String {
        join_lines(&self.basis)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalFormReport {
    pub polynomial: String,
    pub normal_form: String,
    pub member: bool,
}

impl Report for NormalFormReport {
    fn text(&self) -> String {
        self.normal_form.clone()
    }
}

/// A single integer invariant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValueReport {
    pub quantity: String,
    pub value: u64,
}

impl Report for ValueReport {
    fn text(&self) -> String {
        self.value.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SecantReport {
    pub route: SecantRoute,
    pub ring: Vec<String>,
    pub generators: Vec<String>,
    /// Σ is all of projective space.
    pub everything: bool,
}

impl Report for SecantReport {
    fn text(&self) -> String {
        join_lines(&self.generators)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub verdict: Verdict,
    pub matrix: Vec<Vec<String>>,
}

impl Report for CertifyReport {
    fn text(&self) -> String {
        self.verdict.to_string()
    }
}

impl Report for DegreeReport {
    fn text(&self) -> String {
        let mut s = format!(
            "deg X={} deg Γ={} deg Y={} certified={}",
            self.degree_source, self.degree_graph, self.degree_image, self.certified
        );
        if self.certificate == CertificateKind::Numeric {
            s.push_str(" (numeric certificate)");
        }
        if self.violated() {
            s.push_str("\nFAILED: degrees differ under a certified map");
        }
        s
    }

    fn exit_code(&self) -> u8 {
        if self.violated() {
            VERIFICATION_FAILED
        } else {
            0
        }
    }
}

impl Report for MultiplicityReport {
    fn text(&self) -> String {
        let mut s = format!(
            "mult X={} mult Γ={} mult Y={} certified={}",
            self.mult_source, self.mult_graph, self.mult_image, self.certified
        );
        if self.violated() {
            s.push_str("\nFAILED: multiplicities differ under a certified map");
        }
        s
    }

    fn exit_code(&self) -> u8 {
        if self.violated() {
            VERIFICATION_FAILED
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Certified,
    Embedding,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub target: usize,
    pub seed: u64,
    pub status: SearchStatus,
    pub attempts: usize,
    pub matrix: Option<Vec<Vec<String>>>,
    pub secant_route: Option<SecantRoute>,
    /// Tangent dimensions at the origin, when it lies on `X`.
    pub source_tangent_dim: Option<usize>,
    pub image_tangent_dim: Option<usize>,
}

impl Report for SearchReport {
    fn text(&self) -> String {
        let mut s = match self.status {
            SearchStatus::Certified => format!("certified after {} attempt(s)", self.attempts),
            SearchStatus::Embedding => "target ≥ ambient dimension: padded identity".to_string(),
            SearchStatus::Inconclusive => format!("inconclusive after {} attempt(s)", self.attempts),
        };
        if let Some(m) = &self.matrix {
            for row in m {
                s.push('\n');
                s.push_str(&row.join(" "));
            }
        }
        if let (Some(a), Some(b)) = (self.source_tangent_dim, self.image_tangent_dim) {
            s.push_str(&format!("\ntangent dim at 0: source {a}, image {b}"));
        }
        s
    }

    fn exit_code(&self) -> u8 {
        if self.status == SearchStatus::Inconclusive {
            VERIFICATION_FAILED
        } else {
            0
        }
    }
}

impl Report for NormalityProxyReport {
    fn text(&self) -> String {
        let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        format!(
            "cone tangent dim={} image tangent dim={} certified={}\n{}",
            self.cone_tangent_dim,
            show(self.image_tangent_dim),
            self.projection.is_some(),
            self.conclusion
        )
    }

    fn exit_code(&self) -> u8 {
        if self.tangent_dim_drops {
            0
        } else {
            VERIFICATION_FAILED
        }
    }
}

impl Report for DistortionReport {
    fn text(&self) -> String {
        let mut s = self.to_csv();
        if self.skipped > 0 {
            s.push_str(&format!("# skipped {} degenerate pair(s)\n", self.skipped));
        }
        s.trim_end().to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CloudReport {
    pub directions: Vec<Vec<f64>>,
    /// Largest relative residual against the symbolic secant cone, if computed.
    pub residual: Option<f64>,
}

impl Report for CloudReport {
    fn text(&self) -> String {
        let mut lines: Vec<String> = self
            .directions
            .iter()
            .map(|d| d.iter().map(f64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        if let Some(r) = self.residual {
            lines.push(format!("# max residual {r:e}"));
        }
        lines.join("\n")
    }
}
