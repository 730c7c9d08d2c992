//! Hilbert functions, h-vectors and degrees of monomial quotients `R/I`.
//!
//! The Hilbert series of `R/I` is `N(t) / (1 - t)^s`. The numerator `N` is
//! computed exactly by pivoting on a variable power `p`:
//! `N(I) = N(I + (p)) + t^{deg p} N(I : p)`, bottoming out at ideals whose
//! generators have pairwise disjoint support. Every Hilbert-function value is
//! read off `N`; [`standard_monomial_count`] is the brute-force count used to
//! cross-check it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::{minimalize_unchecked, ExponentTuple, MonomialIdeal};
use crate::limits::Limits;
use crate::star::StarConfig;
use crate::util::binom;

/// Dense integer polynomial in one variable, lowest degree first, no trailing zeros.
pub type UniPoly = Vec<i64>;

fn trim(mut p: UniPoly) -> UniPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(acc: &mut UniPoly, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn mul(a: &[i64], b: &[i64]) -> UniPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// `p / (1 - t)` when exact.
fn divide_one_minus_t(p: &[i64]) -> Option<UniPoly> {
    if p.iter().sum::<i64>() != 0 {
        return None;
    }
    let mut acc = 0;
    let mut q: UniPoly = p
        .iter()
        .map(|&c| {
            acc += c;
            acc
        })
        .collect();
    q.pop();
    Some(trim(q))
}

fn support_mask(g: &ExponentTuple) -> u64 {
    g.exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |m, (i, _)| m | (1 << i))
}

fn numerator_rec(arity: usize, gens: Vec<ExponentTuple>) -> UniPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let masks: Vec<u64> = gens.iter().map(support_mask).collect();
    let mut seen = 0u64;
    let mut coprime = true;
    for &m in &masks {
        if seen & m != 0 {
            coprime = false;
            break;
        }
        seen |= m;
    }
    if coprime {
        return gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            mul(&acc, &f)
        });
    }
    // pivot on the variable shared by the most generators, at its least positive exponent
    let (var, _) = (0..arity)
        .map(|v| (v, masks.iter().filter(|&&m| m & (1 << v) != 0).count()))
        .max_by_key(|&(v, n)| (n, std::cmp::Reverse(v)))
        .expect("arity is positive");
    let e = gens
        .iter()
        .map(|g| g.exps()[var])
        .filter(|&x| x > 0)
        .min()
        .expect("pivot variable occurs");
    let pivot = {
        let mut ex = vec![0; arity];
        ex[var] = e;
        ExponentTuple::new(ex)
    };
    let mut with_pivot: Vec<ExponentTuple> = gens
        .iter()
        .filter(|g| g.exps()[var] == 0)
        .cloned()
        .collect();
    with_pivot.push(pivot.clone());
    let quotient: Vec<ExponentTuple> = gens.iter().map(|g| g.saturating_quotient(&pivot)).collect();
    let quotient = minimalize_unchecked(arity, quotient).gens().to_vec();

    let mut out = numerator_rec(arity, with_pivot);
    let q = numerator_rec(arity, quotient);
    add_shifted(&mut out, &q, e as usize);
    trim(out)
}

/// Exact numerator `N(t)` with `HS(R/I) = N(t) / (1 - t)^s`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> UniPoly {
    numerator_rec(ideal.arity(), ideal.gens().to_vec())
}

/// The numerator, failing if its degree exceeds `cap` (default: the ideal's degree cap).
pub fn series_numerator(ideal: &MonomialIdeal, cap: Option<usize>) -> Result<UniPoly> {
    let cap = cap.unwrap_or_else(|| Limits::default().degree_cap_for(omega_or_zero(ideal)));
    let n = hilbert_numerator(ideal);
    if n.len() > cap + 1 {
        return Err(Error::resource(
            format!("series numerator of degree {}", n.len() - 1),
            cap as u64,
        ));
    }
    Ok(n)
}

fn omega_or_zero(ideal: &MonomialIdeal) -> usize {
    ideal.omega().unwrap_or(0) as usize
}

/// Hilbert function of `R/I` backed by its series numerator.
#[derive(Debug, Clone)]
pub struct HilbertFunction {
    arity: usize,
    numerator: UniPoly,
}

impl HilbertFunction {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        HilbertFunction {
            arity: ideal.arity(),
            numerator: hilbert_numerator(ideal),
        }
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// `dim_k (R/I)_d`; zero for negative `d`.
    pub fn at(&self, d: i64) -> i64 {
        if d < 0 {
            return 0;
        }
        let s = self.arity as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(k, &n)| n * binom(d - k as i64 + s - 1, s - 1))
            .sum()
    }
}

/// Number of degree-`d` monomials outside `I`.
pub fn hilbert_function(ideal: &MonomialIdeal, d: i64) -> i64 {
    HilbertFunction::new(ideal).at(d)
}

/// Brute-force count of degree-`d` monomials outside `I`.
pub fn standard_monomial_count(ideal: &MonomialIdeal, d: u32) -> u64 {
    let trie = ideal.trie();
    let arity = ideal.arity();
    let mut cur = vec![0u32; arity];
    let mut count = 0;
    fn walk(
        i: usize,
        left: u32,
        cur: &mut Vec<u32>,
        trie: &crate::exponents::DivisorTrie,
        count: &mut u64,
    ) {
        if i + 1 == cur.len() {
            cur[i] = left;
            if !trie.contains_divisor_of(&ExponentTuple::new(&cur[..])) {
                *count += 1;
            }
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            walk(i + 1, left - e, cur, trie, count);
        }
    }
    walk(0, d, &mut cur, &trie, &mut count);
    count
}

/// `h`-vector: the `(s - c)`-fold first difference of the Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVector {
    pub entries: Vec<i64>,
    pub codim: usize,
}

impl HVector {
    /// Sum of the entries: the degree of an ACM scheme with this h-vector.
    pub fn degree(&self) -> i64 {
        self.entries.iter().sum()
    }
}

pub fn h_vector(ideal: &MonomialIdeal, c: usize) -> Result<HVector> {
    h_vector_with(ideal, c, &Limits::default())
}

/// Difference the Hilbert function `s - c` times (with `H(-1) = 0`) up to the
/// degree cap. Fails unless the result is zero from some degree below the cap on.
pub fn h_vector_with(ideal: &MonomialIdeal, c: usize, limits: &Limits) -> Result<HVector> {
    let s = ideal.arity();
    if c > s {
        return Err(Error::usage(format!(
            "codimension {c} exceeds {s} variables"
        )));
    }
    let cap = limits.degree_cap_for(omega_or_zero(ideal));
    let hf = HilbertFunction::new(ideal);
    let mut seq: Vec<i64> = (0..=cap as i64).map(|d| hf.at(d)).collect();
    for _ in 0..s - c {
        let mut prev = 0;
        for v in seq.iter_mut() {
            let cur = *v;
            *v -= prev;
            prev = cur;
        }
    }
    let mut exact = hf.numerator.clone();
    for _ in 0..c {
        exact = match divide_one_minus_t(&exact) {
            Some(q) => q,
            None => {
                return Err(Error::resource(
                    format!("h-vector in codimension {c} does not stabilize"),
                    cap as u64,
                ))
            }
        };
    }
    if exact.len() > cap {
        return Err(Error::resource(
            format!("h-vector of length {}", exact.len()),
            cap as u64,
        ));
    }
    let entries = trim(seq);
    debug_assert_eq!(entries, exact);
    Ok(HVector { entries, codim: c })
}

/// Degree of an unmixed codimension-`c` scheme: the sum of its h-vector.
pub fn degree(ideal: &MonomialIdeal, c: usize) -> Result<i64> {
    Ok(h_vector(ideal, c)?.degree())
}

/// `(1, c, C(c+1, 2), ..., C(s-1, c-1))`: entries `C(t + c - 1, c - 1)` for `t = 0..=s-c`.
pub fn generic_hvector(cfg: &StarConfig) -> HVector {
    let (s, c) = (cfg.s() as i64, cfg.c() as i64);
    HVector {
        entries: (0..=s - c).map(|t| binom(t + c - 1, c - 1)).collect(),
        codim: cfg.c(),
    }
}

/// Predicted h-vector of the symbolic square: the generic values through
/// degree `s - c`, then `C(s, c - 1)` through degree `2s - 2c + 1`.
pub fn ss_hvector_formula(cfg: &StarConfig) -> HVector {
    let (s, c) = (cfg.s() as i64, cfg.c() as i64);
    HVector {
        entries: (0..=2 * s - 2 * c + 1)
            .map(|t| {
                if t <= s - c {
                    binom(t + c - 1, c - 1)
                } else {
                    binom(s, c - 1)
                }
            })
            .collect(),
        codim: cfg.c(),
    }
}

/// Check `h_{C'}(t) = h_S(t) - h_S(t - d) + h_C(t - d)` for `t = 0..=cap`,
/// where `I_{C'} = F I_C + I_S` with `deg F = d`. The default cap is
/// `4 (1 + omega) + d` over the three ideals.
pub fn bdg_hf_check(
    i_s: &MonomialIdeal,
    i_c: &MonomialIdeal,
    d: u32,
    i_result: &MonomialIdeal,
    cap: Option<usize>,
) -> Result<bool> {
    if i_s.arity() != i_c.arity() || i_s.arity() != i_result.arity() {
        return Err(Error::usage("ideals in the link must share their arity"));
    }
    let cap = cap.unwrap_or_else(|| {
        let w = [i_s, i_c, i_result]
            .iter()
            .map(|i| omega_or_zero(i))
            .max()
            .unwrap_or(0);
        4 * (1 + w) + d as usize
    });
    let (hs, hc, hr) = (
        HilbertFunction::new(i_s),
        HilbertFunction::new(i_c),
        HilbertFunction::new(i_result),
    );
    let d = d as i64;
    Ok((0..=cap as i64).all(|t| hr.at(t) == hs.at(t) - hs.at(t - d) + hc.at(t - d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::{skeleton_ideal, symbolic_power};

    fn cfg(s: usize, c: usize) -> StarConfig {
        StarConfig::new(s, c).unwrap()
    }

    #[test]
    fn hilbert_function_examples() {
        assert_eq!(hilbert_function(&MonomialIdeal::zero(3), 2), 6);
        assert_eq!(hilbert_function(&MonomialIdeal::unit(3), 4), 0);
        assert_eq!(hilbert_function(&skeleton_ideal(&cfg(4, 2)), 3), 16);
    }

    #[test]
    fn numerator_examples() {
        assert!(hilbert_numerator(&MonomialIdeal::unit(3)).is_empty());
        assert_eq!(hilbert_numerator(&MonomialIdeal::zero(3)), vec![1]);
        // skeleton (4,2): N(1) = 0, -N'(1) gives degree (dim 2 means N = (1-t)^2 h)
        let n = hilbert_numerator(&skeleton_ideal(&cfg(4, 2)));
        assert_eq!(n.iter().sum::<i64>(), 0);
        let h = h_vector(&skeleton_ideal(&cfg(4, 2)), 2).unwrap();
        assert_eq!(h.degree(), 6);
        let mut q = n.clone();
        for _ in 0..2 {
            q = divide_one_minus_t(&q).unwrap();
        }
        assert_eq!(q.iter().sum::<i64>(), 6);
    }

    #[test]
    fn numerator_agrees_with_enumeration() {
        let ideals = [
            skeleton_ideal(&cfg(4, 2)),
            symbolic_power(&cfg(4, 2), 2).unwrap(),
            symbolic_power(&cfg(5, 3), 2).unwrap(),
            MonomialIdeal::from_generators(
                3,
                [ExponentTuple::new([2, 1, 0]), ExponentTuple::new([0, 3, 1])],
            )
            .unwrap(),
        ];
        for i in &ideals {
            let hf = HilbertFunction::new(i);
            for d in 0..12 {
                assert_eq!(
                    hf.at(d as i64),
                    standard_monomial_count(i, d) as i64,
                    "{i} at {d}"
                );
            }
        }
    }

    #[test]
    fn worked_example_hvectors() {
        assert_eq!(
            h_vector(&skeleton_ideal(&cfg(7, 3)), 3).unwrap().entries,
            vec![1, 3, 6, 10, 15]
        );
        assert_eq!(
            h_vector(&skeleton_ideal(&cfg(7, 2)), 2).unwrap().entries,
            vec![1, 2, 3, 4, 5, 6]
        );
        assert_eq!(
            h_vector(&symbolic_power(&cfg(7, 3), 2).unwrap(), 3)
                .unwrap()
                .entries,
            vec![1, 3, 6, 10, 15, 21, 21, 21, 21, 21]
        );
    }

    #[test]
    fn formulas() {
        assert_eq!(generic_hvector(&cfg(4, 2)).entries, vec![1, 2, 3]);
        assert_eq!(generic_hvector(&cfg(7, 3)).entries, vec![1, 3, 6, 10, 15]);
        assert_eq!(
            ss_hvector_formula(&cfg(7, 3)).entries,
            vec![1, 3, 6, 10, 15, 21, 21, 21, 21, 21]
        );
        assert_eq!(ss_hvector_formula(&cfg(7, 3)).degree(), 140);
        for s in 2..=10 {
            for c in 1..s {
                let k = cfg(s, c);
                assert_eq!(generic_hvector(&k).degree(), binom(s as i64, c as i64));
                assert_eq!(
                    ss_hvector_formula(&k).degree(),
                    (c as i64 + 1) * binom(s as i64, c as i64)
                );
            }
        }
    }

    #[test]
    fn degenerate_symbolic_square() {
        // s = c + 1: the skeleton has h-vector (1, c); its symbolic square is
        // (1, c, binom(c+1, 2), binom(c+1, 2)), not (1, c)
        for c in 2..6 {
            let k = cfg(c + 1, c);
            let c = c as i64;
            assert_eq!(generic_hvector(&k).entries, vec![1, c]);
            let pair = binom(c + 1, 2);
            assert_eq!(ss_hvector_formula(&k).entries, vec![1, c, pair, pair]);
            let h = h_vector(&symbolic_power(&k, 2).unwrap(), k.c()).unwrap();
            assert_eq!(h.entries, vec![1, c, pair, pair]);
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&skeleton_ideal(&cfg(4, 2)), 2).unwrap(), 6);
        assert_eq!(
            degree(&symbolic_power(&cfg(4, 2), 2).unwrap(), 2).unwrap(),
            18
        );
        for s in 2..=7 {
            for c in 1..s {
                assert_eq!(
                    degree(&skeleton_ideal(&cfg(s, c)), c).unwrap(),
                    binom(s as i64, c as i64)
                );
            }
        }
    }

    #[test]
    fn wrong_codimension_does_not_stabilize() {
        // asserting a codimension above the true one leaves a nonzero tail
        let err = h_vector(&skeleton_ideal(&cfg(5, 3)), 4).unwrap_err();
        assert_eq!(err.kind(), "resource");
        assert!(h_vector(&MonomialIdeal::zero(3), 1).is_err());
        assert!(h_vector(&MonomialIdeal::zero(3), 4).is_err());
    }

    #[test]
    fn skeleton_recursion_satisfies_link_identity() {
        // I_{V_c}(s) = x_{s-1} I_{V_c}(s-1) + I_{V_{c-1}}(s-1)
        for s in 4..=7 {
            for c in 2..s - 1 {
                let c_part = skeleton_ideal(&cfg(s - 1, c)).extend_to(s).unwrap();
                let s_part = skeleton_ideal(&cfg(s - 1, c - 1)).extend_to(s).unwrap();
                let built = c_part
                    .scale(&ExponentTuple::variable(s, s - 1))
                    .unwrap()
                    .sum(&s_part)
                    .unwrap();
                let full = skeleton_ideal(&cfg(s, c));
                assert_eq!(built, full);
                assert!(bdg_hf_check(&s_part, &c_part, 1, &full, None).unwrap());
            }
        }
    }

    #[test]
    fn trivial_link() {
        let i = skeleton_ideal(&cfg(4, 2));
        let shifted = i
            .scale(&ExponentTuple::variable(4, 0))
            .unwrap()
            .sum(&i)
            .unwrap();
        assert_eq!(shifted, i);
        assert!(bdg_hf_check(&i, &i, 1, &i, None).unwrap());
        let wrong = skeleton_ideal(&cfg(4, 3));
        assert!(!bdg_hf_check(&i, &i, 1, &wrong, None).unwrap());
    }
}
