//! Report types shared by every output format.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use starconf::decomp::{ContainmentReport, Rational};
use starconf::resolution::{HbVerification, ResolutionShape};
use starconf::star::WkStep;
use starconf::Limits;

use crate::export::ExportReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Failed,
    Usage,
    Resource,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Usage => 2,
            Status::Resource => 3,
        }
    }
}

/// What every JSON report looks like.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub command: String,
    pub caps: Limits,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<CommandResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonReport {
    pub s: usize,
    pub c: usize,
    pub n: usize,
    pub generator_count: usize,
    pub generators: Vec<String>,
    pub h_vector: Vec<i64>,
    pub expected_h_vector: Vec<i64>,
    pub degree: i64,
    pub alpha: u32,
    pub eagon_northcott_ranks: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicReport {
    pub s: usize,
    pub c: usize,
    pub l: u32,
    pub generator_count: usize,
    pub generators_by_degree: Vec<(u32, usize)>,
    pub generators: Vec<String>,
    pub alpha: u32,
    pub omega: u32,
    pub alpha_formula: u32,
    pub omega_formula: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HvectorReport {
    pub s: usize,
    pub c: usize,
    pub l: u32,
    pub h_vector: Vec<i64>,
    pub degree: i64,
    /// Closed form, available for `l = 1` and `l = 2`.
    pub formula: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub s: usize,
    pub c: usize,
    pub symbolic_square: ResolutionShape,
    pub symbolic_square_euler: bool,
    pub skeleton: ResolutionShape,
    pub skeleton_euler: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HbReport {
    pub matrix: Vec<Vec<String>>,
    pub predicted_family: Vec<String>,
    pub verification: HbVerification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompReport {
    pub s: usize,
    pub c: usize,
    pub l: u32,
    pub power_decomposition: bool,
    pub saturation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentPair {
    pub s: usize,
    pub c: usize,
    pub m: u32,
    pub r: u32,
    pub contained: bool,
    /// Closed-form prediction of non-containment (`c = N - 1`, `N >= 3` only).
    pub criterion_not_contained: Option<bool>,
    pub floor_criterion_not_contained: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidReport {
    pub s: usize,
    pub c: usize,
    pub facet_count: usize,
    pub is_matroid: bool,
    pub stanley_reisner_matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WkReport {
    pub s: usize,
    pub l: u32,
    /// `W_0` is the `l`-th symbolic power of the codimension-2 skeleton.
    pub start_is_symbolic: bool,
    /// `W_s` is the `(l + 2)`-nd symbolic power.
    pub end_is_symbolic: bool,
    pub steps: Vec<WkStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommandResult {
    Skeleton(SkeletonReport),
    Symbolic(SymbolicReport),
    Hvector(HvectorReport),
    Betti(BettiReport),
    Hb(HbReport),
    Decomp(DecompReport),
    Containment(ContainmentPair),
    Scan(ContainmentReport),
    Matroid(MatroidReport),
    Wk(WkReport),
    Export(ExportReport),
}

fn ratio(q: &Rational) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn pairs(v: &[(u32, u32)]) -> String {
    v.iter()
        .map(|(m, r)| format!("({m},{r})"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn list<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

impl CommandResult {
    /// `None` when every check passed, otherwise the failed check and its witness.
    pub fn failure(&self) -> Option<String> {
        match self {
            CommandResult::Skeleton(r) => (r.h_vector != r.expected_h_vector).then(|| {
                format!(
                    "h-vector ({}) differs from binom(t+c-1, c-1): ({})",
                    list(&r.h_vector),
                    list(&r.expected_h_vector)
                )
            }),
            CommandResult::Symbolic(r) => {
                (r.alpha != r.alpha_formula || r.omega != r.omega_formula).then(|| {
                    format!(
                        "degrees (alpha, omega) = ({}, {}) but formulas give ({}, {})",
                        r.alpha, r.omega, r.alpha_formula, r.omega_formula
                    )
                })
            }
            CommandResult::Hvector(r) => match &r.formula {
                Some(f) if f != &r.h_vector => Some(format!(
                    "h-vector ({}) differs from the closed form ({})",
                    list(&r.h_vector),
                    list(f)
                )),
                _ => None,
            },
            CommandResult::Betti(r) => (!r.symbolic_square_euler || !r.skeleton_euler).then(|| {
                "alternating sum of the claimed resolution differs from the series numerator"
                    .to_string()
            }),
            CommandResult::Hb(r) => {
                let v = &r.verification;
                if !v.non_monomial_rows.is_empty() {
                    Some(format!(
                        "minors deleting rows {} are not signed monomials",
                        list(&v.non_monomial_rows)
                    ))
                } else if !v.family_matches {
                    Some("minor monomials differ from the predicted family".to_string())
                } else if !v.ideal_matches {
                    Some("minor ideal differs from the symbolic power".to_string())
                } else {
                    None
                }
            }
            CommandResult::Decomp(r) => match (r.power_decomposition, r.saturation) {
                (true, true) => None,
                (false, _) => {
                    Some("power differs from the intersection of symbolic powers".to_string())
                }
                (true, false) => {
                    Some("saturation differs from the symbolic intersection".to_string())
                }
            },
            CommandResult::Containment(r) => {
                let mut bad = Vec::new();
                if r.criterion_not_contained == Some(r.contained) {
                    bad.push("closed-form criterion");
                }
                if r.floor_criterion_not_contained == Some(r.contained) {
                    bad.push("floor criterion");
                }
                (!bad.is_empty()).then(|| {
                    format!(
                        "{} disagrees with the computed containment at (m,r) = ({},{})",
                        bad.join(" and "),
                        r.m,
                        r.r
                    )
                })
            }
            CommandResult::Scan(r) => {
                let mut bad = Vec::new();
                if let (Some(w), Some(rho)) = (&r.empirical_sup, &r.rho_exact) {
                    if w.ratio > *rho {
                        bad.push(format!(
                            "empirical sup {} at ({},{}) exceeds exact resurgence {}",
                            ratio(&w.ratio),
                            w.m,
                            w.r,
                            ratio(rho)
                        ));
                    }
                }
                if !r.criterion_mismatches.is_empty() {
                    bad.push(format!(
                        "closed-form criterion disagrees at {}",
                        pairs(&r.criterion_mismatches)
                    ));
                }
                if !r.floor_criterion_mismatches.is_empty() {
                    bad.push(format!(
                        "floor criterion disagrees at {}",
                        pairs(&r.floor_criterion_mismatches)
                    ));
                }
                (!bad.is_empty()).then(|| bad.join("; "))
            }
            CommandResult::Matroid(r) => (!r.is_matroid || !r.stanley_reisner_matches).then(|| {
                "skeleton complex is not a matroid or its Stanley-Reisner ideal differs".to_string()
            }),
            CommandResult::Wk(r) => {
                if !r.start_is_symbolic || !r.end_is_symbolic {
                    return Some(
                        "chain endpoints are not the expected symbolic powers".to_string(),
                    );
                }
                r.steps
                    .iter()
                    .find(|st| !st.holds())
                    .map(|st| format!("step W_{} -> W_{} fails: {:?}", st.k, st.k + 1, st))
            }
            CommandResult::Export(_) => None,
        }
    }

    pub fn render_text(&self) -> String {
        let mut o = String::new();
        match self {
            CommandResult::Skeleton(r) => {
                let _ = writeln!(o, "skeleton s={} c={} (in P^{})", r.s, r.c, r.n);
                let _ = writeln!(
                    o,
                    "generators ({}): {}",
                    r.generator_count,
                    r.generators.join(", ")
                );
                let _ = writeln!(o, "alpha: {}", r.alpha);
                let _ = writeln!(o, "h-vector: ({})", list(&r.h_vector));
                let _ = writeln!(o, "expected: ({})", list(&r.expected_h_vector));
                let _ = writeln!(o, "degree: {}", r.degree);
                let _ = writeln!(
                    o,
                    "Eagon-Northcott ranks: {}",
                    list(&r.eagon_northcott_ranks)
                );
            }
            CommandResult::Symbolic(r) => {
                let _ = writeln!(o, "symbolic power s={} c={} l={}", r.s, r.c, r.l);
                let hist: Vec<String> = r
                    .generators_by_degree
                    .iter()
                    .map(|(d, n)| format!("{n} in degree {d}"))
                    .collect();
                let _ = writeln!(o, "generators ({}): {}", r.generator_count, hist.join(", "));
                let _ = writeln!(o, "alpha: {} (formula {})", r.alpha, r.alpha_formula);
                let _ = writeln!(o, "omega: {} (formula {})", r.omega, r.omega_formula);
                for g in &r.generators {
                    let _ = writeln!(o, "  {g}");
                }
            }
            CommandResult::Hvector(r) => {
                let _ = writeln!(
                    o,
                    "h-vector s={} c={} l={}: ({})",
                    r.s,
                    r.c,
                    r.l,
                    list(&r.h_vector)
                );
                if let Some(f) = &r.formula {
                    let _ = writeln!(o, "closed form: ({})", list(f));
                }
                let _ = writeln!(o, "degree: {}", r.degree);
            }
            CommandResult::Betti(r) => {
                let _ = writeln!(o, "symbolic square s={} c={}", r.s, r.c);
                write_shape(&mut o, &r.symbolic_square);
                let _ = writeln!(o, "euler check: {}", r.symbolic_square_euler);
                let _ = writeln!(o, "skeleton (Eagon-Northcott)");
                write_shape(&mut o, &r.skeleton);
                let _ = writeln!(o, "euler check: {}", r.skeleton_euler);
            }
            CommandResult::Hb(r) => {
                let v = &r.verification;
                let _ = writeln!(o, "Delta_{} for s={}: {}x{}", v.m, v.s, v.rows, v.cols);
                for row in &r.matrix {
                    let _ = writeln!(o, "  [{}]", row.join(", "));
                }
                let _ = writeln!(o, "maximal minors (deleted row: minor)");
                for e in &v.minors {
                    let _ = writeln!(o, "  {}: {}", e.deleted_row, e.text);
                }
                let _ = writeln!(o, "predicted family: {}", r.predicted_family.join(", "));
                let _ = writeln!(o, "family matches: {}", v.family_matches);
                let _ = writeln!(o, "ideal equals symbolic power: {}", v.ideal_matches);
            }
            CommandResult::Decomp(r) => {
                let _ = writeln!(o, "decomposition s={} c={} l={}", r.s, r.c, r.l);
                let _ = writeln!(o, "power equals intersection: {}", r.power_decomposition);
                let _ = writeln!(o, "saturation equals symbolic part: {}", r.saturation);
            }
            CommandResult::Containment(r) => {
                let _ = writeln!(
                    o,
                    "I^({}) in I^{} for s={} c={}: {}",
                    r.m, r.r, r.s, r.c, r.contained
                );
                if let Some(p) = r.criterion_not_contained {
                    let _ = writeln!(o, "closed-form criterion predicts contained: {}", !p);
                }
                if let Some(p) = r.floor_criterion_not_contained {
                    let _ = writeln!(o, "floor criterion predicts contained: {}", !p);
                }
            }
            CommandResult::Scan(r) => write_scan(&mut o, r),
            CommandResult::Matroid(r) => {
                let _ = writeln!(
                    o,
                    "skeleton complex s={} c={}: {} facets",
                    r.s, r.c, r.facet_count
                );
                let _ = writeln!(o, "matroid: {}", r.is_matroid);
                let _ = writeln!(
                    o,
                    "Stanley-Reisner ideal equals skeleton ideal: {}",
                    r.stanley_reisner_matches
                );
            }
            CommandResult::Wk(r) => {
                let _ = writeln!(o, "W_k chain s={} l={}", r.s, r.l);
                let _ = writeln!(o, "W_0 is I^({}): {}", r.l, r.start_is_symbolic);
                let _ = writeln!(o, "W_{} is I^({}): {}", r.s, r.l + 2, r.end_is_symbolic);
                let _ = writeln!(o, "k  deg W_k  formula  deg W_k+1  predicted  link  HF");
                for st in &r.steps {
                    let _ = writeln!(
                        o,
                        "{}  {}  {}  {}  {}  {}  {}",
                        st.k,
                        st.degree_k,
                        st.formula_k,
                        st.degree_next,
                        st.predicted_next,
                        st.ideal_identity,
                        st.hf_identity
                    );
                }
            }
            CommandResult::Export(r) => {
                o.push_str(&r.script);
            }
        }
        o
    }
}

fn write_shape(o: &mut String, shape: &ResolutionShape) {
    for (i, module) in shape.modules.iter().enumerate() {
        let parts: Vec<String> = module.iter().map(|(a, r)| format!("R({a})^{r}")).collect();
        let _ = writeln!(o, "  F{}: {}", i + 1, parts.join(" + "));
    }
}

fn write_scan(o: &mut String, r: &ContainmentReport) {
    let _ = writeln!(
        o,
        "containment I^(m) in I^r, s={} c={}, m <= {}, r <= {}",
        r.s, r.c, r.m_max, r.r_max
    );
    let _ = writeln!(o, "rows m, columns r; '+' contained, '.' not");
    let header: String = (1..=r.r_max).map(|x| format!("{x:>3}")).collect();
    let _ = writeln!(o, "    {header}");
    for m in 1..=r.m_max {
        let row: String = r
            .cells
            .iter()
            .filter(|c| c.m == m)
            .map(|c| format!("{:>3}", if c.contained { "+" } else { "." }))
            .collect();
        let _ = writeln!(o, "{m:>3} {row}");
    }
    match &r.empirical_sup {
        Some(w) => {
            let _ = writeln!(
                o,
                "empirical sup: {} at (m,r) = ({},{})",
                ratio(&w.ratio),
                w.m,
                w.r
            );
        }
        None => {
            let _ = writeln!(o, "empirical sup: none (everything contained)");
        }
    }
    let _ = writeln!(o, "lower bound: {}", ratio(&r.lower_bound));
    match &r.rho_exact {
        Some(q) => {
            let _ = writeln!(o, "exact resurgence: {}", ratio(q));
        }
        None => {
            let _ = writeln!(o, "exact resurgence: unknown");
        }
    }
    if let Some(a) = r.criterion_agrees {
        let _ = writeln!(o, "closed-form criterion agrees: {a}");
    }
    if let Some(a) = r.floor_criterion_agrees {
        let _ = writeln!(o, "floor criterion agrees: {a}");
    }
}

/// CSV rows `m,r,contained,ratio_num,ratio_den` with the ratio in lowest terms.
pub fn scan_csv(r: &ContainmentReport) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["m", "r", "contained", "ratio_num", "ratio_den"])?;
    for c in &r.cells {
        let q = Rational::new(c.m as i64, c.r as i64);
        w.write_record([
            c.m.to_string(),
            c.r.to_string(),
            c.contained.to_string(),
            q.numer().to_string(),
            q.denom().to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
