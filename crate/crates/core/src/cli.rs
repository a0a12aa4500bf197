//! Command-line surface and JSON interchange documents.
//!
//! Every command returns an [`Outcome`] rather than printing, so the binary is
//! a thin wrapper and tests can drive commands in-process. Exit codes: `0`
//! success, `2` invalid input or gate rejection, `3` arithmetic impossibility
//! (singular linking matrix, non-integral invariant).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{det, format_ratio, parse_ratio};
use crate::kirby::{classify, default_rot, emit_table, gate, CandidateReport, VerdictStatus};
use crate::legendrian::{validate_unknot, ExternalKnot, LegendrianUnknot, Sign};
use crate::presentation::{convert, enumerate_presentations, expand_negative, linking_matrix};
use crate::transform::{bennequin, post_surgery_invariants};
use crate::{Int, Presentation, Rational};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ARITHMETIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "contact-kirby",
    version,
    about = "Contact (±1)-surgery presentations and Kirby-move candidate screening for Legendrian unknots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Table,
}

#[derive(Debug, clap::Args)]
pub struct DiagramArgs {
    /// Thurston–Bennequin number of the surgery knot
    #[arg(long, allow_hyphen_values = true, required_unless_present = "input")]
    pub tb: Option<i64>,
    /// Rotation number of the surgery knot
    #[arg(long, allow_hyphen_values = true, required_unless_present = "input")]
    pub rot: Option<i64>,
    /// Contact surgery coefficient, `p/q` or an integer
    #[arg(long, allow_hyphen_values = true, required_unless_present = "input")]
    pub coeff: Option<String>,
    /// Stabilization signs over {+,-}; selects a single presentation
    #[arg(long, allow_hyphen_values = true)]
    pub signs: Option<String>,
    /// Read the diagram from a JSON document instead
    #[arg(long, conflicts_with_all = ["tb", "rot", "coeff", "signs"])]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Negative continued fraction expansion of a negative rational
    Expand {
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Contact (±1)-surgery presentations with linking matrices
    Convert {
        #[command(flatten)]
        diagram: DiagramArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Invariants of an external Legendrian unknot after the surgery
    Analyze {
        #[command(flatten)]
        diagram: DiagramArgs,
        /// Linking number of the external unknot with the surgery knot
        #[arg(long, allow_hyphen_values = true)]
        lk: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = -1)]
        ext_tb: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        ext_rot: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Screen contact n-surgery on an unknot with tb = -m
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Rotation number; defaults to -(m - 1)
        #[arg(long, allow_hyphen_values = true)]
        rot: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Screen every n = m ± 1 diagram for 1 <= m <= m-max
    Table {
        #[arg(long)]
        m_max: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Captured result of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(err: &Error) -> Self {
        let code = if err.is_arithmetic() {
            EXIT_ARITHMETIC
        } else {
            EXIT_INVALID
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

// ---------------------------------------------------------------------------
// documents

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub tb: i64,
    pub rot: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefficientDoc {
    Integer(i64),
    Text(String),
}

impl CoefficientDoc {
    pub fn parse(&self) -> Result<Rational> {
        match self {
            CoefficientDoc::Integer(v) => Ok(Rational::from_integer(Int::from(*v))),
            CoefficientDoc::Text(s) => parse_ratio(s),
        }
    }
}

/// A contact surgery on a single Legendrian unknot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDocument {
    pub knot: KnotDoc,
    pub coefficient: CoefficientDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<String>,
}

impl DiagramDocument {
    /// Validated knot, coefficient and optional sign vector.
    pub fn resolve(&self) -> Result<(LegendrianUnknot, Rational, Option<Vec<Sign>>)> {
        if self.knot.kind != "unknot" {
            return Err(Error::InvalidInput(format!(
                "unsupported knot type `{}`",
                self.knot.kind
            )));
        }
        let knot = validate_unknot(self.knot.tb, self.knot.rot)?;
        let r = self.coefficient.parse()?;
        let signs = self.signs.as_deref().map(Sign::parse_seq).transpose()?;
        Ok((knot, r, signs))
    }

    /// Same diagram with the coefficient written canonically.
    fn canonical(&self, r: &Rational) -> DiagramDocument {
        DiagramDocument {
            knot: self.knot.clone(),
            coefficient: CoefficientDoc::Text(format_ratio(r)),
            signs: self.signs.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationsDoc {
    pub positive: usize,
    pub negative: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub index: usize,
    pub tb: i64,
    pub rot: i64,
    pub contact_coeff: i64,
    pub topological_coeff: i64,
    pub parent: Option<usize>,
    pub stabilizations: StabilizationsDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BennequinDoc {
    pub satisfied: bool,
    pub slack: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExternalResultDoc {
    pub tb_new: i64,
    pub rot_new: i64,
    pub bennequin: BennequinDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub signs: String,
    pub components: Vec<ComponentDoc>,
    pub linking_matrix: Vec<Vec<i64>>,
    pub det: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub external: Option<ExternalResultDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExternalKnotDoc {
    pub tb: i64,
    pub rot: i64,
    pub lk: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandDocument {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub coefficients: Vec<i64>,
    /// `[a₁+1, a₂, …]` evaluated back; equals `input`.
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub command: String,
    pub input: DiagramDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub external_knot: Option<ExternalKnotDoc>,
    pub presentations: Vec<PresentationDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramSummaryDoc {
    pub m: i64,
    pub n: i64,
    pub tb: i64,
    pub rot: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub signs: String,
    pub det: Option<i64>,
    pub tb_new: Option<i64>,
    pub rot_new: Option<i64>,
    pub bennequin: Option<BennequinDoc>,
    pub status: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateDoc {
    pub diagram: DiagramSummaryDoc,
    pub collection: String,
    pub verdicts: Vec<VerdictDoc>,
    pub survives: bool,
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDocument {
    pub schema_version: u32,
    pub command: String,
    pub reports: Vec<CandidateDoc>,
}

/// Pretty JSON with a trailing newline; field order follows the structs.
pub fn to_canonical_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn to_i64(v: &Int, what: &str) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::InvalidInput(format!("{what} {v} exceeds the 64-bit output range")))
}

pub fn presentation_doc(p: &Presentation) -> Result<PresentationDoc> {
    let m = linking_matrix(p);
    let linking_matrix = m
        .rows()
        .map(|row| row.iter().map(|x| to_i64(x, "matrix entry")).collect())
        .collect::<Result<Vec<Vec<i64>>>>()?;
    Ok(PresentationDoc {
        signs: p.label(),
        components: p
            .components
            .iter()
            .map(|c| ComponentDoc {
                index: c.index,
                tb: c.knot.tb(),
                rot: c.knot.rot(),
                contact_coeff: c.contact_sign.value(),
                topological_coeff: c.topological_coefficient(),
                parent: c.parent,
                stabilizations: StabilizationsDoc {
                    positive: c.stabs_pos,
                    negative: c.stabs_neg,
                },
            })
            .collect(),
        linking_matrix,
        det: to_i64(&det(&m), "determinant")?,
        external: None,
        verdict: None,
    })
}

pub fn candidate_doc(r: &CandidateReport) -> CandidateDoc {
    CandidateDoc {
        diagram: DiagramSummaryDoc {
            m: r.diagram.m,
            n: r.diagram.n,
            tb: -r.diagram.m,
            rot: r.diagram.rot,
        },
        collection: r.collection.name().to_string(),
        verdicts: r
            .verdicts
            .iter()
            .map(|v| VerdictDoc {
                signs: v.label(),
                det: v.det,
                tb_new: v.tb_new,
                rot_new: v.rot_new,
                bennequin: v.bennequin.map(|b| BennequinDoc {
                    satisfied: b.satisfied,
                    slack: b.slack,
                }),
                status: v.status.name().to_string(),
                reason: v.reason.clone(),
            })
            .collect(),
        survives: r.survives,
        summary: r.summary.clone(),
    }
}

// ---------------------------------------------------------------------------
// commands

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                Outcome::ok(rendered)
            } else {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: rendered,
                }
            }
        }
    }
}

pub fn execute(command: &Command) -> Outcome {
    let result = match command {
        Command::Expand { r, format } => cmd_expand(r, *format),
        Command::Convert { diagram, format } => {
            load_diagram(diagram).and_then(|doc| cmd_convert(&doc, *format))
        }
        Command::Analyze {
            diagram,
            lk,
            ext_tb,
            ext_rot,
            format,
        } => load_diagram(diagram).and_then(|doc| {
            let ext = ExternalKnotDoc {
                tb: *ext_tb,
                rot: *ext_rot,
                lk: *lk,
            };
            cmd_analyze(&doc, &ext, *format)
        }),
        Command::Classify { m, n, rot, format } => cmd_classify(*m, *n, *rot, *format),
        Command::Table { m_max, format } => cmd_table(i64::from(*m_max), *format),
    };
    match result {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::failure(&e),
    }
}

fn load_diagram(args: &DiagramArgs) -> Result<DiagramDocument> {
    if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        return serde_json::from_str(&text)
            .map_err(|e| Error::InvalidInput(format!("malformed diagram document: {e}")));
    }
    match (args.tb, args.rot, &args.coeff) {
        (Some(tb), Some(rot), Some(coeff)) => Ok(DiagramDocument {
            knot: KnotDoc {
                kind: "unknot".into(),
                tb,
                rot,
            },
            coefficient: CoefficientDoc::Text(coeff.clone()),
            signs: args.signs.clone(),
        }),
        _ => Err(Error::InvalidInput(
            "need --tb, --rot and --coeff, or --input".into(),
        )),
    }
}

pub fn cmd_expand(r: &str, format: Format) -> Result<String> {
    let value: Rational = parse_ratio(r)?;
    let cf = expand_negative(&value)?;
    let back = cf.value()?;
    debug_assert_eq!(back, value);
    let coefficients = cf
        .coeffs()
        .iter()
        .map(|c| to_i64(c, "coefficient"))
        .collect::<Result<Vec<_>>>()?;
    Ok(match format {
        Format::Json => to_canonical_json(&ExpandDocument {
            schema_version: SCHEMA_VERSION,
            command: "expand".into(),
            input: format_ratio(&value),
            coefficients,
            value: format_ratio(&back),
        }),
        Format::Table => {
            let mut shifted = coefficients.clone();
            shifted[0] += 1;
            format!(
                "{cf}\ncheck: {} = {}\n",
                bracket(&shifted),
                format_ratio(&back)
            )
        }
    })
}

fn bracket(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn presentations_for(
    k: LegendrianUnknot,
    r: &Rational,
    signs: &Option<Vec<Sign>>,
) -> Result<Vec<Presentation>> {
    match signs {
        Some(s) => Ok(vec![convert(k, r, s)?]),
        None => enumerate_presentations(k, r),
    }
}

pub fn convert_report(doc: &DiagramDocument) -> Result<ReportDocument> {
    let (k, r, signs) = doc.resolve()?;
    let presentations = presentations_for(k, &r, &signs)?
        .iter()
        .map(presentation_doc)
        .collect::<Result<Vec<_>>>()?;
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION,
        command: "convert".into(),
        input: doc.canonical(&r),
        external_knot: None,
        presentations,
    })
}

pub fn cmd_convert(doc: &DiagramDocument, format: Format) -> Result<String> {
    let report = convert_report(doc)?;
    Ok(match format {
        Format::Json => to_canonical_json(&report),
        Format::Table => render_report(&report),
    })
}

pub fn analyze_report(doc: &DiagramDocument, ext: &ExternalKnotDoc) -> Result<ReportDocument> {
    let (k, r, signs) = doc.resolve()?;
    let external = ExternalKnot::new(validate_unknot(ext.tb, ext.rot)?, ext.lk);
    let presentations = presentations_for(k, &r, &signs)?
        .iter()
        .map(|p| {
            let mut d = presentation_doc(p)?;
            let inv = post_surgery_invariants(p, &external)?;
            let check = bennequin(inv.tb_new, inv.rot_new);
            d.verdict = Some(if check.satisfied {
                "Bennequin inequality satisfied".to_string()
            } else {
                "Bennequin inequality violated".to_string()
            });
            d.external = Some(ExternalResultDoc {
                tb_new: inv.tb_new,
                rot_new: inv.rot_new,
                bennequin: BennequinDoc {
                    satisfied: check.satisfied,
                    slack: check.slack,
                },
            });
            Ok(d)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION,
        command: "analyze".into(),
        input: doc.canonical(&r),
        external_knot: Some(ext.clone()),
        presentations,
    })
}

pub fn cmd_analyze(doc: &DiagramDocument, ext: &ExternalKnotDoc, format: Format) -> Result<String> {
    let report = analyze_report(doc, ext)?;
    Ok(match format {
        Format::Json => to_canonical_json(&report),
        Format::Table => render_report(&report),
    })
}

pub fn cmd_classify(m: i64, n: i64, rot: Option<i64>, format: Format) -> Result<String> {
    let d = gate(m, n, rot.unwrap_or_else(|| default_rot(m)))?;
    let report = classify(&d)?;
    Ok(render_candidates("classify", &[report], format))
}

pub fn cmd_table(m_max: i64, format: Format) -> Result<String> {
    let reports = emit_table(m_max)?;
    Ok(render_candidates("table", &reports, format))
}

fn render_candidates(command: &str, reports: &[CandidateReport], format: Format) -> String {
    match format {
        Format::Json => to_canonical_json(&ClassifyDocument {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            reports: reports.iter().map(candidate_doc).collect(),
        }),
        Format::Table => render_candidate_table(reports),
    }
}

// ---------------------------------------------------------------------------
// text rendering

fn render_report(report: &ReportDocument) -> String {
    let mut out = String::new();
    let input = &report.input;
    let coeff = match &input.coefficient {
        CoefficientDoc::Integer(v) => v.to_string(),
        CoefficientDoc::Text(s) => s.clone(),
    };
    let _ = writeln!(
        out,
        "contact {coeff}-surgery on Legendrian unknot (tb {}, rot {}): {} presentation(s)",
        input.knot.tb,
        input.knot.rot,
        report.presentations.len()
    );
    if let Some(ext) = &report.external_knot {
        let _ = writeln!(
            out,
            "external unknot: tb {}, rot {}, lk {}",
            ext.tb, ext.rot, ext.lk
        );
    }
    for p in &report.presentations {
        let label = if p.signs.is_empty() {
            "(no stabilizations)"
        } else {
            &p.signs
        };
        let _ = writeln!(out, "\npresentation {label}");
        let _ = writeln!(
            out,
            "  {:>3} {:>5} {:>5} {:>8} {:>5} {:>7} {:>6}",
            "#", "tb", "rot", "contact", "top", "parent", "stabs"
        );
        for c in &p.components {
            let parent = c.parent.map_or("-".to_string(), |x| x.to_string());
            let _ = writeln!(
                out,
                "  {:>3} {:>5} {:>5} {:>8} {:>5} {:>7} {:>6}",
                c.index,
                c.tb,
                c.rot,
                format!("{:+}", c.contact_coeff),
                c.topological_coeff,
                parent,
                format!(
                    "+{}/-{}",
                    c.stabilizations.positive, c.stabilizations.negative
                )
            );
        }
        let _ = writeln!(out, "  linking matrix (det {}):", p.det);
        for row in &p.linking_matrix {
            let _ = writeln!(out, "    {}", bracket(row));
        }
        if let Some(e) = &p.external {
            let _ = writeln!(
                out,
                "  tb_new {}, rot_new {}, Bennequin slack {} ({})",
                e.tb_new,
                e.rot_new,
                e.bennequin.slack,
                if e.bennequin.satisfied {
                    "satisfied"
                } else {
                    "violated"
                }
            );
        }
    }
    out
}

fn branch_cell(v: &crate::kirby::PresentationVerdict) -> String {
    let status = match v.status {
        VerdictStatus::OvertwistedCertified => "overtwisted",
        VerdictStatus::ConsistentWithStandardTight => "tight (asserted)",
    };
    match (v.tb_new, v.rot_new) {
        (Some(tb), Some(rot)) => {
            let label = if v.sign_choice.is_empty() {
                "·".to_string()
            } else {
                v.label()
            };
            format!("{label}: ({tb}, {rot}) {status}")
        }
        _ => format!("0-surgery: {status}"),
    }
}

fn render_candidate_table(reports: &[CandidateReport]) -> String {
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            [
                r.diagram.m.to_string(),
                r.diagram.n.to_string(),
                r.collection.name().to_string(),
                r.verdicts
                    .iter()
                    .map(branch_cell)
                    .collect::<Vec<_>>()
                    .join("; "),
                if r.survives { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    let header = [
        "m",
        "n",
        "collection",
        "branches (tb_new, rot_new)",
        "survivor",
    ];
    let mut widths = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: [&str; 5]| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            let pad = w - cell.chars().count();
            if i < 2 {
                s.push_str(&" ".repeat(pad));
                s.push_str(cell);
            } else {
                s.push_str(cell);
                if i < 4 {
                    s.push_str(&" ".repeat(pad));
                }
            }
            if i < 4 {
                s.push_str("  ");
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header);
    for row in &rows {
        out.push_str(&line([&row[0], &row[1], &row[2], &row[3], &row[4]]));
    }
    for r in reports.iter().filter(|r| r.survives) {
        let _ = writeln!(out, "m={} n={}: {}", r.diagram.m, r.diagram.n, r.summary);
    }
    out
}
