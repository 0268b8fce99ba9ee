//! Structured evaluation reports with deterministic text, CSV and JSON
//! rendering, plus the complex-number grammar used by the command line.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexField {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexField {
    fn from(z: Complex64) -> Self {
        ComplexField { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RepresentationResult {
    pub representation: String,
    pub value: ComplexField,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct OracleField {
    pub value: ComplexField,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportStatus {
    Ok,
    DegenerateRouted,
    Failed,
}

impl ReportStatus {
    pub fn label(&self) -> &'static str {
        match self {
            ReportStatus::Ok => "ok",
            ReportStatus::DegenerateRouted => "degenerate_routed",
            ReportStatus::Failed => "failed",
        }
    }
}

/// One machine-readable block per evaluated quantity.
#[derive(Debug, Clone, Serialize)]
pub struct EvaluationReport {
    pub quantity: String,
    pub parameters: BTreeMap<String, ComplexField>,
    pub results: Vec<RepresentationResult>,
    pub oracle: Option<OracleField>,
    pub max_pairwise_disagreement: f64,
    pub status: ReportStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!(
                "unknown format '{other}' (expected text, csv or json)"
            )),
        }
    }
}

/// 17-significant-digit scientific rendering; lossless on round trip.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Print a complex value in the `RE+IMi` grammar the CLI parses.
pub fn format_complex(z: Complex64) -> String {
    let im = format_f64(z.im);
    if z.im >= 0.0 || im.starts_with('-') {
        let sep = if im.starts_with('-') { "" } else { "+" };
        format!("{}{sep}{im}i", format_f64(z.re))
    } else {
        format!("{}{im}i", format_f64(z.re))
    }
}

/// Parse `RE`, `RE+IMi`, `RE-IMi` or `IMi`, with exponent notation allowed
/// in both parts.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // find the sign separating the real and imaginary parts, skipping
        // a leading sign and exponent signs
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx] as char;
            if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => {
                let re: f64 = body[..idx]
                    .parse()
                    .map_err(|_| format!("bad real part in '{s}'"))?;
                let im_str = &body[idx..];
                let im: f64 = if im_str == "+" {
                    1.0
                } else if im_str == "-" {
                    -1.0
                } else {
                    im_str
                        .parse()
                        .map_err(|_| format!("bad imaginary part in '{s}'"))?
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = if body.is_empty() {
                    1.0
                } else {
                    body.parse()
                        .map_err(|_| format!("bad imaginary part in '{s}'"))?
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = s.parse().map_err(|_| format!("bad number '{s}'"))?;
        Ok(Complex64::new(re, 0.0))
    }
}

impl EvaluationReport {
    pub fn new(quantity: &str) -> Self {
        EvaluationReport {
            quantity: quantity.to_string(),
            parameters: BTreeMap::new(),
            results: Vec::new(),
            oracle: None,
            max_pairwise_disagreement: 0.0,
            status: ReportStatus::Ok,
        }
    }

    pub fn with_param(mut self, name: &str, value: Complex64) -> Self {
        self.parameters.insert(name.to_string(), value.into());
        self
    }

    pub fn push_result(&mut self, representation: &str, value: Complex64, err: f64, terms: usize) {
        self.results.push(RepresentationResult {
            representation: representation.to_string(),
            value: value.into(),
            abs_error_estimate: err,
            terms_used: terms,
        });
    }

    /// Largest pairwise distance among representations and the oracle,
    /// relative to the largest magnitude present (or absolute below 1).
    pub fn finalize(&mut self, tolerance: f64) {
        let mut values: Vec<Complex64> = self
            .results
            .iter()
            .map(|r| Complex64::new(r.value.re, r.value.im))
            .collect();
        if let Some(o) = &self.oracle {
            values.push(Complex64::new(o.value.re, o.value.im));
        }
        let scale = values
            .iter()
            .map(|v| v.norm())
            .fold(0.0f64, f64::max)
            .max(1.0);
        let mut worst = 0.0f64;
        for i in 0..values.len() {
            for j in (i + 1)..values.len() {
                worst = worst.max((values[i] - values[j]).norm() / scale);
            }
        }
        self.max_pairwise_disagreement = worst;
        if self.status == ReportStatus::Ok && worst > tolerance {
            self.status = ReportStatus::Failed;
        }
    }

    fn params_packed(&self) -> String {
        self.parameters
            .iter()
            .map(|(k, v)| format!("{k}={}", format_complex(Complex64::new(v.re, v.im))))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => serde_json::to_string_pretty(self).expect("report serializes"),
            OutputFormat::Csv => {
                let mut out =
                    String::from("quantity,params,representation,value_re,value_im,err,terms\n");
                for r in &self.results {
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{}\n",
                        self.quantity,
                        self.params_packed(),
                        r.representation,
                        format_f64(r.value.re),
                        format_f64(r.value.im),
                        format_f64(r.abs_error_estimate),
                        r.terms_used
                    ));
                }
                if let Some(o) = &self.oracle {
                    out.push_str(&format!(
                        "{},{},QUADRATURE,{},{},{},{}\n",
                        self.quantity,
                        self.params_packed(),
                        format_f64(o.value.re),
                        format_f64(o.value.im),
                        format_f64(o.abs_error_estimate),
                        o.evaluations
                    ));
                }
                out
            }
            OutputFormat::Text => {
                let mut out = format!("quantity {}\n", self.quantity);
                for (k, v) in &self.parameters {
                    out.push_str(&format!(
                        "param {k} {}\n",
                        format_complex(Complex64::new(v.re, v.im))
                    ));
                }
                for r in &self.results {
                    out.push_str(&format!(
                        "representation {} value_re {} value_im {} err {} terms {}\n",
                        r.representation,
                        format_f64(r.value.re),
                        format_f64(r.value.im),
                        format_f64(r.abs_error_estimate),
                        r.terms_used
                    ));
                }
                if let Some(o) = &self.oracle {
                    out.push_str(&format!(
                        "oracle value_re {} value_im {} err {} evaluations {}\n",
                        format_f64(o.value.re),
                        format_f64(o.value.im),
                        format_f64(o.abs_error_estimate),
                        o.evaluations
                    ));
                }
                out.push_str(&format!(
                    "max_pairwise_disagreement {}\n",
                    format_f64(self.max_pairwise_disagreement)
                ));
                out.push_str(&format!("status {}\n", self.status.label()));
                out
            }
        }
    }
}
