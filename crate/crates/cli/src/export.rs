//! Scripts for Macaulay2 and Singular that test the conjectured primary
//! decomposition of `I_{V_c}^l` for arbitrary linear forms.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use starconf::util::subsets;
use starconf::Error;

type Q = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    M2,
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportReport {
    pub target: Target,
    pub s: usize,
    pub c: usize,
    pub l: u32,
    pub n: usize,
    pub warnings: Vec<String>,
    pub script: String,
}

/// Parse `"a,b,c;d,e,f"`: one coefficient tuple per form, rationals allowed.
pub fn parse_forms(text: &str) -> Result<Vec<Vec<Q>>, Error> {
    text.split(';')
        .map(|form| {
            form.split(',')
                .map(|x| {
                    x.trim().parse::<Q>().map_err(|_| {
                        Error::usage(format!(
                            "malformed coefficient {:?} in form {:?}",
                            x.trim(),
                            form
                        ))
                    })
                })
                .collect()
        })
        .collect()
}

/// The coordinate forms `x_0, ..., x_{s-1}`.
pub fn coordinate_forms(s: usize) -> Vec<Vec<Q>> {
    (0..s)
        .map(|i| (0..s).map(|j| Q::from_integer((i == j) as i64)).collect())
        .collect()
}

fn proportional(a: &[Q], b: &[Q]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| a[i] * b[j] == a[j] * b[i]))
}

fn render_form(coeffs: &[Q]) -> String {
    let mut out = String::new();
    for (i, &q) in coeffs.iter().enumerate() {
        if q == Q::from_integer(0) {
            continue;
        }
        let mag = if q < Q::from_integer(0) { -q } else { q };
        if out.is_empty() {
            if q < Q::from_integer(0) {
                out.push('-');
            }
        } else {
            out.push_str(if q < Q::from_integer(0) { " - " } else { " + " });
        }
        if mag != Q::from_integer(1) {
            let _ = write!(out, "{mag}*");
        }
        let _ = write!(out, "x{i}");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

struct Syntax {
    comment: &'static str,
}

impl Target {
    fn syntax(self) -> Syntax {
        match self {
            Target::M2 => Syntax { comment: "--" },
            Target::Singular => Syntax { comment: "//" },
        }
    }
}

pub fn export_script(
    target: Target,
    s: usize,
    c: usize,
    l: u32,
    n: Option<usize>,
    forms: Option<&[Vec<Q>]>,
) -> Result<ExportReport, Error> {
    if s < 2 {
        return Err(Error::usage(format!("need at least 2 forms, got s = {s}")));
    }
    if l == 0 {
        return Err(Error::usage("power exponent must be at least 1"));
    }
    let coordinate;
    let forms = match forms {
        Some(f) => f,
        None => {
            coordinate = coordinate_forms(s);
            &coordinate[..]
        }
    };
    if forms.len() != s {
        return Err(Error::usage(format!(
            "expected {s} forms, got {}",
            forms.len()
        )));
    }
    let width = forms[0].len();
    if width < 2 || forms.iter().any(|f| f.len() != width) {
        return Err(Error::usage(
            "every form needs the same number (at least 2) of coefficients",
        ));
    }
    let n_amb = width - 1;
    if let Some(n) = n {
        if n != n_amb {
            return Err(Error::usage(format!(
                "forms have {width} coefficients, so they live in P^{n_amb}, not P^{n}"
            )));
        }
    }
    if c < 1 || c > n_amb || n_amb >= s {
        return Err(Error::usage(format!(
            "need 1 <= c <= n < s, got c = {c}, n = {n_amb}, s = {s}"
        )));
    }
    let mut warnings = Vec::new();
    for i in 0..s {
        if forms[i].iter().all(|q| *q == Q::from_integer(0)) {
            warnings.push(format!("form L{i} is zero"));
        }
        for j in i + 1..s {
            if proportional(&forms[i], &forms[j]) {
                warnings.push(format!(
                    "forms L{i} and L{j} are dependent; the hyperplanes do not meet properly"
                ));
            }
        }
    }

    let big_n = s - 1;
    let syn = target.syntax();
    let vars: Vec<String> = (0..=n_amb).map(|i| format!("x{i}")).collect();
    let rendered: Vec<String> = forms.iter().map(|f| render_form(f)).collect();
    let component = |sub: &[usize]| -> String {
        let gens: Vec<&str> = sub.iter().map(|&i| rendered[i].as_str()).collect();
        format!("ideal({})", gens.join(", "))
    };
    let intersection = |k: usize, power: u32| -> String {
        let parts: Vec<String> = subsets(s, k)
            .iter()
            .map(|sub| {
                if power == 1 {
                    component(sub)
                } else {
                    format!("{}^{power}", component(sub))
                }
            })
            .collect();
        format!("intersect({})", parts.join(", "))
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} s = {s} hyperplanes in P^{n_amb}, codimension c = {c}, power l = {l}",
        syn.comment
    );
    let _ = writeln!(
        out,
        "{} tests I^l == intersect_(j=0..{}) I_(V_(c+j))^((j+1) l) cap M^({} l)",
        syn.comment,
        n_amb - c,
        big_n - c + 2
    );
    for w in &warnings {
        let _ = writeln!(out, "{} warning: {w}", syn.comment);
    }
    let m_exp = (big_n - c + 2) as u32 * l;
    let rhs_parts: Vec<String> = (0..=n_amb - c)
        .map(|j| intersection(c + j, (j as u32 + 1) * l))
        .chain(std::iter::once(format!("M^{m_exp}")))
        .collect();
    match target {
        Target::M2 => {
            let _ = writeln!(out, "R = QQ[{}];", vars.join(", "));
            let _ = writeln!(out, "M = ideal vars R;");
            let _ = writeln!(out, "I = {};", intersection(c, 1));
            let _ = writeln!(out, "lhs = I^{l};");
            let _ = writeln!(out, "rhs = intersect({});", rhs_parts.join(", "));
            let _ = writeln!(out, "print(lhs == rhs);");
        }
        Target::Singular => {
            let _ = writeln!(out, "ring R = 0, ({}), dp;", vars.join(", "));
            let _ = writeln!(out, "ideal M = maxideal(1);");
            let _ = writeln!(out, "ideal I = {};", intersection(c, 1));
            let _ = writeln!(out, "ideal lhs = std(I^{l});");
            let _ = writeln!(out, "ideal rhs = std(intersect({}));", rhs_parts.join(", "));
            let _ = writeln!(
                out,
                "print((size(reduce(lhs, rhs)) == 0) && (size(reduce(rhs, lhs)) == 0));"
            );
        }
    }
    Ok(ExportReport {
        target,
        s,
        c,
        l,
        n: n_amb,
        warnings,
        script: out,
    })
}
