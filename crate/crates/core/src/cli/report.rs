//! Command reports: stable-keyed JSON and plain-text tables.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::classify::ClassificationRecord;
use crate::hilbert::{zpoly, HilbertData};
use crate::module::PresInvariants;
use crate::rr_depth::{DeltaReport, DepthReport, RRReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsSection {
    #[serde(flatten)]
    pub presentation: PresInvariants,
    pub multiplicity: i64,
    /// `e(M) >= μ·i(M)`.
    pub e_bound_ok: bool,
    pub free_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSection {
    pub form: String,
    pub trials: usize,
    pub b_vector: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifySection {
    pub a_tuple: Vec<u32>,
    pub free_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub record: Option<ClassificationRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub instance: String,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap_used: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub h: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case_id: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<String>,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub compute_us: u64,
    pub total_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub instance: String,
    pub p: u32,
    pub seed: u64,
    pub cap_used: u32,
    pub escalations: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub superficial: Option<Vec<WitnessSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratliff_rush: Option<RRReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<DepthReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<DeltaReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassifySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<Vec<VerifyRow>>,
    pub timings: Timings,
}

impl Report {
    pub fn new(command: &str, instance: &str, p: u32, seed: u64) -> Self {
        Report {
            command: command.into(),
            instance: instance.into(),
            p,
            seed,
            cap_used: 0,
            escalations: 0,
            invariants: None,
            hilbert: None,
            superficial: None,
            ratliff_rush: None,
            depth: None,
            delta: None,
            classification: None,
            verify: None,
            timings: Timings::default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| writeln!(out, "{k:<22} {v}").unwrap();
        line("command", self.command.clone());
        line("instance", self.instance.clone());
        line("p", self.p.to_string());
        line("seed", self.seed.to_string());
        line("cap", format!("{} ({} escalations)", self.cap_used, self.escalations));
        if let Some(inv) = &self.invariants {
            line("mu", inv.presentation.mu.to_string());
            line("i(M)", inv.presentation.i_m.to_string());
            line("ord det phi", inv.presentation.det_order.to_string());
            line("e(M)", inv.multiplicity.to_string());
            line("e >= mu*i", format!("{} ({} >= {})", inv.e_bound_ok, inv.multiplicity, inv.presentation.e_bound));
            line("free rank", inv.free_rank.to_string());
        }
        if let Some(h) = &self.hilbert {
            line("dim", h.r.to_string());
            if !h.hilbert_samuel.is_empty() {
                line("H (Hilbert-Samuel)", list(&h.hilbert_samuel));
                line("L (graded lengths)", list(&h.graded_lengths));
            }
            line("h", zpoly::format(&h.h_coeffs));
            line("e_0..e_r", list(&h.e));
        }
        if let Some(ws) = &self.superficial {
            for (i, w) in ws.iter().enumerate() {
                line(&format!("x_{}", i + 1), format!("{}  (trial {})", w.form, w.trials));
                line(&format!("b(x_{})", i + 1), list(&w.b_vector));
            }
        }
        if let Some(rr) = &self.ratliff_rush {
            line("RR excess R_n", list(&rr.excess));
            line("r_M", zpoly::format(&rr.r_coeffs));
            line("h~", zpoly::format(&rr.h_tilde));
        }
        if let Some(d) = &self.depth {
            line("depth G(M)", d.depth.to_string());
            for (c, h) in d.h_chain.iter().enumerate() {
                line(&format!("h(M_{c})"), zpoly::format(h));
            }
            line("witnesses", d.witnesses.join(", "));
            line("Singh checks", format!("{} hold", d.singh.iter().filter(|s| s.holds()).count()));
        }
        if let Some(d) = &self.delta {
            line("delta", d.delta.to_string());
            line("delta per n", list(&d.per_n));
            line("reduction number", d.reduction_number.to_string());
        }
        if let Some(c) = &self.classification {
            line("a-tuple", list(&c.a_tuple));
            line("free rank", c.free_rank.to_string());
            match &c.record {
                Some(r) => {
                    line("case", r.case_id.clone());
                    line("e(M)", r.e_m.to_string());
                    line("h", zpoly::format(&r.h));
                    line("depth G(M)", r.depth.to_string());
                    line("table consistent", r.theorem_ok.to_string());
                }
                None => line("case", "not applicable".into()),
            }
        }
        if let Some(rows) = &self.verify {
            for r in rows {
                let status = if r.ok { "PASS" } else { "FAIL" };
                let mut v = status.to_string();
                if let Some(d) = r.depth {
                    write!(v, "  depth {d}").unwrap();
                }
                if !r.h.is_empty() {
                    write!(v, "  h = {}", zpoly::format(&r.h)).unwrap();
                }
                if let Some(c) = &r.case_id {
                    write!(v, "  case {c}").unwrap();
                }
                if let Some(c) = r.cap_used {
                    write!(v, "  cap {c}").unwrap();
                }
                write!(v, "  {:.1} ms", r.elapsed_us as f64 / 1000.0).unwrap();
                line(&r.instance, v);
                for m in &r.mismatches {
                    line("", format!("  {m}"));
                }
            }
        }
        line(
            "time",
            format!(
                "{:.1} ms compute, {:.1} ms total",
                self.timings.compute_us as f64 / 1000.0,
                self.timings.total_us as f64 / 1000.0
            ),
        );
        out
    }
}

fn list<T: ToString>(v: &[T]) -> String {
    let items: Vec<String> = v.iter().map(T::to_string).collect();
    format!("[{}]", items.join(", "))
}
