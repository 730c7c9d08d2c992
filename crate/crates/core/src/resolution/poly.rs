use std::collections::BTreeMap;
use std::fmt;

use crate::exponents::ExponentTuple;

/// Sparse polynomial with integer coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePoly {
    arity: usize,
    terms: BTreeMap<ExponentTuple, i64>,
}

impl SparsePoly {
    pub fn zero(arity: usize) -> Self {
        SparsePoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::monomial(1, ExponentTuple::one(arity))
    }

    pub fn monomial(coeff: i64, mono: ExponentTuple) -> Self {
        let arity = mono.arity();
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(mono, coeff);
        }
        SparsePoly { arity, terms }
    }

    pub fn variable(arity: usize, i: usize) -> Self {
        Self::monomial(1, ExponentTuple::variable(arity, i))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentTuple, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// `Some((coeff, monomial))` when the polynomial is a single term.
    pub fn as_term(&self) -> Option<(i64, &ExponentTuple)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(m, &c)| (c, m))
    }

    /// `Some((sign, monomial))` when the polynomial is `±` a monomial.
    pub fn as_signed_monomial(&self) -> Option<(i8, &ExponentTuple)> {
        match self.as_term()? {
            (1, m) => Some((1, m)),
            (-1, m) => Some((-1, m)),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.arity, other.arity);
        for (m, &c) in &other.terms {
            let e = self.terms.entry(m.clone()).or_insert(0);
            *e += c;
            if *e == 0 {
                self.terms.remove(m);
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let e = out.terms.entry(a.mul(b)).or_insert(0);
                *e += x * y;
            }
        }
        out.terms.retain(|_, c| *c != 0);
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degree first; within a degree, canonical order
        let mut terms: Vec<(&ExponentTuple, i64)> = self.terms().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mag, m.is_one()) {
                (1, true) => write!(f, "1")?,
                (1, false) => write!(f, "{m}")?,
                (_, true) => write!(f, "{mag}")?,
                (_, false) => write!(f, "{mag}*{m}")?,
            }
        }
        Ok(())
    }
}
