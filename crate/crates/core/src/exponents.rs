//! Monomials as exponent tuples and monomial ideals as minimal generating antichains.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::par;

type Exps = SmallVec<[u32; 8]>;

/// A monomial `x0^e0 * ... * x{s-1}^e{s-1}` stored as its exponents.
///
/// Ordering is graded lexicographic: lower total degree first, and within a
/// degree the tuple with the larger leading exponent first (`x0^2 < x0*x1 < x1^2`).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentTuple {
    exps: Exps,
}

impl ExponentTuple {
    pub fn new(exps: impl AsRef<[u32]>) -> Self {
        ExponentTuple {
            exps: Exps::from_slice(exps.as_ref()),
        }
    }

    /// The monomial `1`.
    pub fn one(arity: usize) -> Self {
        ExponentTuple {
            exps: smallvec::smallvec![0; arity],
        }
    }

    /// The variable `x_i`.
    pub fn variable(arity: usize, i: usize) -> Self {
        let mut t = Self::one(arity);
        t.exps[i] = 1;
        t
    }

    /// Squarefree product of the listed variables.
    pub fn squarefree(arity: usize, support: &[usize]) -> Self {
        let mut t = Self::one(arity);
        for &i in support {
            t.exps[i] = 1;
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::usage(format!(
                "arity mismatch: {} vs {}",
                self.arity(),
                other.arity()
            )));
        }
        Ok(())
    }

    /// `self | other`, i.e. componentwise `self <= other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_arity(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        ExponentTuple {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Self {
        ExponentTuple {
            exps: self.exps.iter().map(|a| a * k).collect(),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        ExponentTuple {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Componentwise `max(self - other, 0)`: the generator of `(self) : other`.
    pub fn saturating_quotient(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        ExponentTuple {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// Exponents sorted ascending.
    pub fn sorted_exps(&self) -> Exps {
        let mut e = self.exps.clone();
        e.sort_unstable();
        e
    }

    /// Embed into `arity` variables, padding the new trailing variables with zero exponents.
    pub fn extend_to(&self, arity: usize) -> Self {
        let mut exps = self.exps.clone();
        exps.resize(arity.max(self.arity()), 0);
        ExponentTuple { exps }
    }
}

impl Ord for ExponentTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity()
            .cmp(&other.arity())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for ExponentTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Default, Debug, Clone)]
struct TrieNode {
    children: Vec<(u32, TrieNode)>,
}

/// Prefix tree over exponent tuples answering "does some stored tuple divide `m`?"
/// without scanning every stored tuple.
#[derive(Debug, Clone)]
pub struct DivisorTrie {
    arity: usize,
    root: TrieNode,
    len: usize,
}

impl DivisorTrie {
    pub fn new(arity: usize) -> Self {
        DivisorTrie {
            arity,
            root: TrieNode::default(),
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn insert(&mut self, t: &ExponentTuple) {
        debug_assert_eq!(t.arity(), self.arity);
        let mut node = &mut self.root;
        let mut fresh = false;
        for &e in t.exps() {
            let pos = match node.children.binary_search_by_key(&e, |(k, _)| *k) {
                Ok(p) => p,
                Err(p) => {
                    node.children.insert(p, (e, TrieNode::default()));
                    fresh = true;
                    p
                }
            };
            node = &mut node.children[pos].1;
        }
        if fresh || (self.len == 0 && self.arity == 0) {
            self.len += 1;
        }
    }

    pub fn contains_divisor_of(&self, m: &ExponentTuple) -> bool {
        debug_assert_eq!(m.arity(), self.arity);
        if self.len == 0 {
            return false;
        }
        fn walk(node: &TrieNode, m: &[u32]) -> bool {
            match m.split_first() {
                None => true,
                Some((&head, rest)) => {
                    for (e, child) in &node.children {
                        if *e > head {
                            break;
                        }
                        if walk(child, rest) {
                            return true;
                        }
                    }
                    false
                }
            }
        }
        walk(&self.root, m.exps())
    }
}

/// A monomial ideal in a fixed number of variables, stored as its minimal
/// generators in graded lexicographic order. Structural equality is ideal equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MonomialIdeal {
    arity: usize,
    gens: Vec<ExponentTuple>,
}

/// The divisibility-minimal elements of `tuples`, as an ideal.
pub fn minimalize(
    arity: usize,
    tuples: impl IntoIterator<Item = ExponentTuple>,
) -> Result<MonomialIdeal> {
    let mut cands: Vec<ExponentTuple> = tuples.into_iter().collect();
    if let Some(bad) = cands.iter().find(|t| t.arity() != arity) {
        return Err(Error::usage(format!(
            "mixed arity: expected {arity}, found tuple of arity {}",
            bad.arity()
        )));
    }
    Ok(minimalize_unchecked(arity, std::mem::take(&mut cands)))
}

pub(crate) fn minimalize_unchecked(arity: usize, mut cands: Vec<ExponentTuple>) -> MonomialIdeal {
    cands.sort_unstable();
    cands.dedup();
    let mut trie = DivisorTrie::new(arity);
    let mut gens = Vec::new();
    // ascending degree: any proper divisor of a candidate has already been seen
    for c in cands {
        if !trie.contains_divisor_of(&c) {
            trie.insert(&c);
            gens.push(c);
        }
    }
    MonomialIdeal { arity, gens }
}

impl MonomialIdeal {
    fn check_arity_positive(arity: usize) -> Result<()> {
        if arity == 0 {
            return Err(Error::usage("arity must be positive"));
        }
        Ok(())
    }

    pub fn zero(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            gens: Vec::new(),
        }
    }

    pub fn unit(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            gens: vec![ExponentTuple::one(arity)],
        }
    }

    pub fn from_generators(
        arity: usize,
        gens: impl IntoIterator<Item = ExponentTuple>,
    ) -> Result<Self> {
        Self::check_arity_positive(arity)?;
        minimalize(arity, gens)
    }

    /// The prime `(x_i : i in vars)`.
    pub fn generated_by_variables(arity: usize, vars: &[usize]) -> Result<Self> {
        Self::check_arity_positive(arity)?;
        if let Some(&v) = vars.iter().find(|&&v| v >= arity) {
            return Err(Error::usage(format!(
                "variable index {v} out of range for arity {arity}"
            )));
        }
        Ok(minimalize_unchecked(
            arity,
            vars.iter()
                .map(|&v| ExponentTuple::variable(arity, v))
                .collect(),
        ))
    }

    /// The irrelevant ideal `(x0, ..., x{s-1})`.
    pub fn irrelevant(arity: usize) -> Result<Self> {
        let all: Vec<usize> = (0..arity).collect();
        Self::generated_by_variables(arity, &all)
    }

    /// `M^t`, generated by every monomial of degree `t`.
    pub fn irrelevant_power(arity: usize, t: u32) -> Result<Self> {
        Self::check_arity_positive(arity)?;
        let mut gens = Vec::new();
        let mut cur = vec![0u32; arity];
        fn fill(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentTuple>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(ExponentTuple::new(&cur[..]));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                fill(i + 1, left - e, cur, out);
            }
        }
        fill(0, t, &mut cur, &mut gens);
        gens.sort_unstable();
        Ok(MonomialIdeal { arity, gens })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn gens(&self) -> &[ExponentTuple] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check_arity(&self, other_arity: usize) -> Result<()> {
        if self.arity != other_arity {
            return Err(Error::usage(format!(
                "arity mismatch: {} vs {}",
                self.arity, other_arity
            )));
        }
        Ok(())
    }

    pub fn trie(&self) -> DivisorTrie {
        let mut t = DivisorTrie::new(self.arity);
        for g in &self.gens {
            t.insert(g);
        }
        t
    }

    pub fn member(&self, mu: &ExponentTuple) -> Result<bool> {
        self.check_arity(mu.arity())?;
        Ok(self.gens.iter().any(|g| g.divides_unchecked(mu)))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_arity(other.arity)?;
        let cands = par::flat_map(&self.gens, |g| {
            other.gens.iter().map(|h| g.mul(h)).collect::<Vec<_>>()
        });
        Ok(minimalize_unchecked(self.arity, cands))
    }

    /// `I^l`; `I^0` is the unit ideal.
    pub fn power(&self, l: u32) -> Self {
        let mut acc = Self::unit(self.arity);
        for _ in 0..l {
            acc = acc.multiply(self).expect("same arity");
        }
        acc
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_arity(other.arity)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let cands = par::flat_map(&self.gens, |g| {
            other.gens.iter().map(|h| g.lcm(h)).collect::<Vec<_>>()
        });
        Ok(minimalize_unchecked(self.arity, cands))
    }

    /// Fold a family of ideals by pairwise intersection, smallest first.
    /// The empty intersection is the unit ideal.
    pub fn intersect_all(arity: usize, ideals: impl IntoIterator<Item = Self>) -> Result<Self> {
        let mut ideals: Vec<Self> = ideals.into_iter().collect();
        ideals.sort_by_key(|i| i.len());
        let mut acc = Self::unit(arity);
        for i in ideals {
            acc = acc.intersect(&i)?;
        }
        Ok(acc)
    }

    /// `I : mu`.
    pub fn colon_monomial(&self, mu: &ExponentTuple) -> Result<Self> {
        self.check_arity(mu.arity())?;
        Ok(minimalize_unchecked(
            self.arity,
            self.gens
                .iter()
                .map(|g| g.saturating_quotient(mu))
                .collect(),
        ))
    }

    /// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_arity(other.arity)?;
        let parts: Vec<Self> = other
            .gens
            .iter()
            .map(|g| self.colon_monomial(g))
            .collect::<Result<_>>()?;
        Self::intersect_all(self.arity, parts)
    }

    /// `I : J^infinity`, iterating `I : J` to its fixed point.
    pub fn saturate(&self, other: &Self) -> Result<Self> {
        self.check_arity(other.arity)?;
        if other.is_zero() {
            return Err(Error::usage("cannot saturate by the zero ideal"));
        }
        let mut cur = self.clone();
        loop {
            let next = cur.colon(other)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Whether `other` is a subset of `self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_arity(other.arity)?;
        let trie = self.trie();
        Ok(par::all(&other.gens, |g| trie.contains_divisor_of(g)))
    }

    /// Least generator degree.
    pub fn alpha(&self) -> Result<u32> {
        self.gens
            .iter()
            .map(|g| g.degree())
            .min()
            .ok_or_else(|| Error::domain("alpha of the zero ideal"))
    }

    /// Largest minimal-generator degree.
    pub fn omega(&self) -> Result<u32> {
        self.gens
            .iter()
            .map(|g| g.degree())
            .max()
            .ok_or_else(|| Error::domain("omega of the zero ideal"))
    }

    /// Number of minimal generators in each degree, ascending.
    pub fn degree_histogram(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for g in &self.gens {
            let d = g.degree();
            match out.last_mut() {
                Some((deg, n)) if *deg == d => *n += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    /// Embed into more variables (new trailing variables do not occur).
    pub fn extend_to(&self, arity: usize) -> Result<Self> {
        if arity < self.arity {
            return Err(Error::usage(format!(
                "cannot embed arity {} into {arity}",
                self.arity
            )));
        }
        Ok(minimalize_unchecked(
            arity,
            self.gens.iter().map(|g| g.extend_to(arity)).collect(),
        ))
    }

    /// `mu * I`.
    pub fn scale(&self, mu: &ExponentTuple) -> Result<Self> {
        self.check_arity(mu.arity())?;
        Ok(MonomialIdeal {
            arity: self.arity,
            gens: {
                let mut g: Vec<_> = self.gens.iter().map(|g| g.mul(mu)).collect();
                g.sort_unstable();
                g
            },
        })
    }

    /// `I + J`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_arity(other.arity)?;
        Ok(minimalize_unchecked(
            self.arity,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
