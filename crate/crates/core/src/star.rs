//! Star configurations in the monomial model.
//!
//! The `s` hyperplanes are the coordinate hyperplanes `x_i = 0` of `P^{s-1}`,
//! indexed `0..s`. Hyperplane `H_{i+1}` / form `L_{i+1}` in one-based notation
//! is variable `x_i` here. The codimension-`c` skeleton is the union of all
//! `c`-fold intersections; its ideal is generated by the squarefree monomials
//! of degree `s - c + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::{minimalize_unchecked, ExponentTuple, MonomialIdeal};
use crate::hilbert;
use crate::limits::{Limits, MAX_COMPLEX_VERTICES};
use crate::par;
use crate::util::{binom, subsets};

/// `s` hyperplanes, codimension `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarConfig {
    s: usize,
    c: usize,
    /// Reported ambient dimension `n` (`c <= n < s`). Only used for reporting:
    /// initial degrees and generator counts do not depend on it.
    ambient: Option<usize>,
}

impl StarConfig {
    pub fn new(s: usize, c: usize) -> Result<Self> {
        if s < 2 {
            return Err(Error::usage(format!(
                "need at least 2 hyperplanes, got s = {s}"
            )));
        }
        if c < 1 || c >= s {
            return Err(Error::usage(format!(
                "codimension must satisfy 1 <= c <= s - 1, got s = {s}, c = {c}"
            )));
        }
        Ok(StarConfig {
            s,
            c,
            ambient: None,
        })
    }

    pub fn with_ambient(self, n: usize) -> Result<Self> {
        if n < self.c || n >= self.s {
            return Err(Error::usage(format!(
                "ambient dimension must satisfy c <= n < s, got n = {n} (s = {}, c = {})",
                self.s, self.c
            )));
        }
        Ok(StarConfig {
            ambient: Some(n),
            ..self
        })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn c(&self) -> usize {
        self.c
    }

    /// Ambient dimension; defaults to the monomial model `N = s - 1`.
    pub fn ambient(&self) -> usize {
        self.ambient.unwrap_or(self.s - 1)
    }

    /// Degree of every minimal generator of the skeleton ideal.
    pub fn initial_degree(&self) -> u32 {
        (self.s - self.c + 1) as u32
    }
}

fn check_power(l: u32) -> Result<()> {
    if l == 0 {
        return Err(Error::usage("symbolic power exponent must be at least 1"));
    }
    Ok(())
}

/// Ideal of the codimension-`c` skeleton: all squarefree monomials of degree `s - c + 1`.
pub fn skeleton_ideal(cfg: &StarConfig) -> MonomialIdeal {
    let gens = subsets(cfg.s, cfg.s - cfg.c + 1)
        .into_iter()
        .map(|sub| ExponentTuple::squarefree(cfg.s, &sub))
        .collect();
    minimalize_unchecked(cfg.s, gens)
}

/// Whether `mu` lies in the `l`-th symbolic power: its `c` smallest exponents sum to at least `l`.
pub fn symbolic_member(mu: &ExponentTuple, cfg: &StarConfig, l: u32) -> Result<bool> {
    check_power(l)?;
    if mu.arity() != cfg.s {
        return Err(Error::usage(format!(
            "arity mismatch: monomial has {} variables, configuration has {}",
            mu.arity(),
            cfg.s
        )));
    }
    Ok(threshold_member(mu.exps(), cfg.c, l))
}

fn threshold_member(exps: &[u32], c: usize, l: u32) -> bool {
    let mut e: smallvec::SmallVec<[u32; 8]> = smallvec::SmallVec::from_slice(exps);
    e.sort_unstable();
    e[..c].iter().sum::<u32>() >= l
}

/// Decode `index` as a base-`radix` digit string of length `arity`.
fn decode(mut index: u64, radix: u64, arity: usize) -> smallvec::SmallVec<[u32; 8]> {
    let mut out = smallvec::smallvec![0u32; arity];
    for slot in out.iter_mut().rev() {
        *slot = (index % radix) as u32;
        index /= radix;
    }
    out
}

/// Minimal generators of an upward-closed set of monomials, found by scanning
/// `{0..=bound}^arity`. `member` must be upward closed and every minimal
/// element must lie in the box.
fn enumerate_minimal<F>(
    arity: usize,
    bound: u32,
    limits: &Limits,
    member: F,
) -> Result<MonomialIdeal>
where
    F: Fn(&[u32]) -> bool + Sync + Send,
{
    let radix = bound as u64 + 1;
    let total = (0..arity).try_fold(1u64, |acc, _| acc.checked_mul(radix));
    let total = match total {
        Some(t) if t <= limits.enumeration => t,
        _ => {
            return Err(Error::resource(
                format!("enumeration of {{0..{bound}}}^{arity}"),
                limits.enumeration,
            ))
        }
    };
    let gens = par::filter_map_range(total, |idx| {
        let mut e = decode(idx, radix, arity);
        if !member(&e) {
            return None;
        }
        for i in 0..arity {
            if e[i] > 0 {
                e[i] -= 1;
                let below = member(&e);
                e[i] += 1;
                if below {
                    return None;
                }
            }
        }
        Some(ExponentTuple::new(&e[..]))
    });
    limits.check_generators("enumerated ideal", gens.len())?;
    Ok(minimalize_unchecked(arity, gens))
}

/// `I^{(l)}` with default limits.
pub fn symbolic_power(cfg: &StarConfig, l: u32) -> Result<MonomialIdeal> {
    symbolic_power_with(cfg, l, &Limits::default())
}

/// `I^{(l)}` by threshold enumeration. Minimal generators never have an
/// exponent above `l`, so the box `{0..=l}^s` suffices.
pub fn symbolic_power_with(cfg: &StarConfig, l: u32, limits: &Limits) -> Result<MonomialIdeal> {
    check_power(l)?;
    let c = cfg.c;
    enumerate_minimal(cfg.s, l, limits, |e| threshold_member(e, c, l))
}

/// `I^{(l)}` as the intersection of `(x_{i1}, ..., x_{ic})^l` over all `c`-subsets.
/// Slower than [`symbolic_power`]; kept as an independent route.
pub fn symbolic_power_by_intersection(cfg: &StarConfig, l: u32) -> Result<MonomialIdeal> {
    check_power(l)?;
    let parts = subsets(cfg.s, cfg.c)
        .into_iter()
        .map(|sub| MonomialIdeal::generated_by_variables(cfg.s, &sub).map(|p| p.power(l)))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(cfg.s, parts)
}

/// `alpha(I^{(l)}) = (q + 1) s - c + r` where `l = q c + r`, `1 <= r <= c`.
pub fn alpha_symbolic_formula(cfg: &StarConfig, l: u32) -> Result<u32> {
    check_power(l)?;
    let (s, c) = (cfg.s as u32, cfg.c as u32);
    let q = (l - 1) / c;
    let r = l - q * c;
    Ok((q + 1) * s - c + r)
}

/// `omega(I^{(l)}) = l (s - c + 1)`.
pub fn omega_symbolic_formula(cfg: &StarConfig, l: u32) -> Result<u32> {
    check_power(l)?;
    Ok(l * cfg.initial_degree())
}

/// `I_{V_{c-1}} ⊆ I_{V_c}^{(2)}`.
pub fn check_lemma_contain(cfg: &StarConfig) -> Result<bool> {
    if cfg.c < 2 {
        return Err(Error::usage(
            "containment of the codimension c-1 skeleton needs c >= 2",
        ));
    }
    let lower = skeleton_ideal(&StarConfig::new(cfg.s, cfg.c - 1)?);
    symbolic_power(cfg, 2)?.contains(&lower)
}

/// A simplicial complex given by its facets, stored as vertex bitmasks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<u32>,
}

fn mask_of(face: &[usize]) -> u32 {
    face.iter().fold(0u32, |m, &v| m | (1 << v))
}

fn vertices_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|v| mask & (1 << v) != 0).collect()
}

/// Keep the inclusion-maximal masks, sorted.
fn maximal_masks(mut masks: Vec<u32>) -> Vec<u32> {
    masks.sort_unstable();
    masks.dedup();
    let keep: Vec<u32> = masks
        .iter()
        .copied()
        .filter(|&m| !masks.iter().any(|&o| o != m && o & m == m))
        .collect();
    keep
}

impl SimplicialComplex {
    pub fn new(vertex_count: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if vertex_count == 0 || vertex_count > MAX_COMPLEX_VERTICES {
            return Err(Error::resource(
                format!("simplicial complex on {vertex_count} vertices"),
                MAX_COMPLEX_VERTICES as u64,
            ));
        }
        for f in facets {
            if let Some(&v) = f.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::usage(format!(
                    "vertex {v} out of range for {vertex_count} vertices"
                )));
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            facets: maximal_masks(facets.iter().map(|f| mask_of(f)).collect()),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| vertices_of(m)).collect()
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        self.is_face_mask(mask_of(face))
    }

    fn is_face_mask(&self, m: u32) -> bool {
        self.facets.iter().any(|&f| f & m == m)
    }

    /// Facets of the restriction to the vertex set `w`.
    fn restriction_facets(&self, w: u32) -> Vec<u32> {
        maximal_masks(self.facets.iter().map(|&f| f & w).collect())
    }

    /// Minimal non-faces as squarefree monomials.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let n = self.vertex_count;
        let gens = (0u32..1 << n)
            .filter(|&m| {
                !self.is_face_mask(m)
                    && (0..n)
                        .filter(|v| m & (1 << v) != 0)
                        .all(|v| self.is_face_mask(m & !(1 << v)))
            })
            .map(|m| ExponentTuple::squarefree(n, &vertices_of(m)))
            .collect();
        minimalize_unchecked(n, gens)
    }
}

/// The complete complex of dimension `s - c - 1` on `s` vertices: facets are all `(s - c)`-subsets.
pub fn skeleton_complex(cfg: &StarConfig) -> Result<SimplicialComplex> {
    SimplicialComplex::new(cfg.s, &subsets(cfg.s, cfg.s - cfg.c))
}

/// Every vertex-induced subcomplex is pure.
pub fn is_matroid(complex: &SimplicialComplex) -> bool {
    let n = complex.vertex_count;
    let subsets: Vec<u32> = (0u32..1 << n).collect();
    par::all(&subsets, |&w| {
        let facets = complex.restriction_facets(w);
        let sizes: Vec<u32> = facets.iter().map(|f| f.count_ones()).collect();
        sizes.windows(2).all(|p| p[0] == p[1])
    })
}

fn check_wk(s: usize, l: u32, k: usize) -> Result<()> {
    if s < 3 {
        return Err(Error::usage(format!(
            "codimension-2 chain needs s >= 3, got {s}"
        )));
    }
    check_power(l)?;
    if k > s {
        return Err(Error::usage(format!("chain index k = {k} exceeds s = {s}")));
    }
    Ok(())
}

/// Exponent on the pair prime `(x_i, x_j)`, `i < j`, in `I_{W_k}`.
pub fn wk_pair_exponent(l: u32, k: usize, i: usize, j: usize) -> u32 {
    debug_assert!(i < j);
    if j < k {
        l + 2
    } else if i < k {
        l + 1
    } else {
        l
    }
}

/// `I_{W_k}`: the intersection of `(x_i, x_j)^{a_ij}` with `a_ij = l + 2` when
/// both indices are below `k`, `l + 1` when exactly one is, and `l` otherwise.
pub fn wk_ideal(s: usize, l: u32, k: usize) -> Result<MonomialIdeal> {
    check_wk(s, l, k)?;
    let parts = subsets(s, 2)
        .into_iter()
        .map(|p| {
            MonomialIdeal::generated_by_variables(s, &p)
                .map(|q| q.power(wk_pair_exponent(l, k, p[0], p[1])))
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(s, parts)
}

/// `deg W_k = C(k,2) C(l+3,2) + k (s-k) C(l+2,2) + C(s-k,2) C(l+1,2)`.
pub fn wk_degree_formula(s: usize, l: u32, k: usize) -> i64 {
    let (s, l, k) = (s as i64, l as i64, k as i64);
    binom(k, 2) * binom(l + 3, 2)
        + k * (s - k) * binom(l + 2, 2)
        + binom(s - k, 2) * binom(l + 1, 2)
}

/// Degree of `∩ (x_i, x_j)^{a_ij}` as the sum of local multiplicities `C(a_ij + 1, 2)`.
pub fn wk_multiplicity_sum(s: usize, l: u32, k: usize) -> i64 {
    subsets(s, 2)
        .iter()
        .map(|p| binom(wk_pair_exponent(l, k, p[0], p[1]) as i64 + 1, 2))
        .sum()
}

/// The link monomial `x_0^{l+2} ... x_{k-1}^{l+2} x_{k+1}^{l+1} ... x_{s-1}^{l+1}` (no `x_k`).
pub fn wk_link_monomial(s: usize, l: u32, k: usize) -> ExponentTuple {
    let exps: Vec<u32> = (0..s)
        .map(|i| match i.cmp(&k) {
            std::cmp::Ordering::Less => l + 2,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => l + 1,
        })
        .collect();
    ExponentTuple::new(exps)
}

/// Outcome of one basic-double-link step `W_k -> W_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WkStep {
    pub k: usize,
    /// `x_k I_{W_k} + (link monomial) == I_{W_{k+1}}`.
    pub ideal_identity: bool,
    pub degree_k: i64,
    pub degree_next: i64,
    /// `deg W_k + k (l + 2) + (s - k - 1)(l + 1)`.
    pub predicted_next: i64,
    /// Closed form for `deg W_k`.
    pub formula_k: i64,
    /// Multiplicity sum for `deg W_k`.
    pub multiplicity_k: i64,
    /// Hilbert-function identity of the link at every degree up to the cap.
    pub hf_identity: bool,
    /// `I_{W_{k+1}} ⊆ I_{W_k}`.
    pub chain_inclusion: bool,
}

impl WkStep {
    pub fn holds(&self) -> bool {
        self.ideal_identity
            && self.hf_identity
            && self.chain_inclusion
            && self.degree_next == self.predicted_next
            && self.degree_k == self.formula_k
            && self.degree_k == self.multiplicity_k
    }
}

/// Check the step `W_k -> W_{k+1}` of the codimension-2 chain.
pub fn wk_step_check(s: usize, l: u32, k: usize) -> Result<WkStep> {
    check_wk(s, l, k)?;
    if k >= s {
        return Err(Error::usage(format!(
            "step index k = {k} must be below s = {s}"
        )));
    }
    let current = wk_ideal(s, l, k)?;
    let next = wk_ideal(s, l, k + 1)?;
    let link = MonomialIdeal::from_generators(s, [wk_link_monomial(s, l, k)])?;
    let built = current.scale(&ExponentTuple::variable(s, k))?.sum(&link)?;
    let degree_k = hilbert::degree(&current, 2)?;
    let degree_next = hilbert::degree(&next, 2)?;
    let (si, li, ki) = (s as i64, l as i64, k as i64);
    let hf_identity = hilbert::bdg_hf_check(&link, &current, 1, &built, None)?;
    Ok(WkStep {
        k,
        ideal_identity: built == next,
        degree_k,
        degree_next,
        predicted_next: degree_k + ki * (li + 2) + (si - ki - 1) * (li + 1),
        formula_k: wk_degree_formula(s, l, k),
        multiplicity_k: wk_multiplicity_sum(s, l, k),
        hf_identity,
        chain_inclusion: current.contains(&next)?,
    })
}
