//! Primary decomposition of ordinary powers of the skeleton, saturation, and
//! the containment problem `I^{(m)} ⊆ I^r` behind the resurgence.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::MonomialIdeal;
use crate::limits::Limits;
use crate::par;
use crate::star::{skeleton_ideal, symbolic_power_with, StarConfig};

pub type Rational = Ratio<i64>;

fn check_l(l: u32) -> Result<()> {
    if l == 0 {
        return Err(Error::usage("power exponent must be at least 1"));
    }
    Ok(())
}

/// The symbolic components of `I^l`: `I_{V_{c+j}}^{((j+1) l)}` for `j = 0..=N-c`.
fn symbolic_components(cfg: &StarConfig, l: u32, limits: &Limits) -> Result<Vec<MonomialIdeal>> {
    let s = cfg.s();
    let n = s - 1;
    (0..=n - cfg.c())
        .map(|j| {
            symbolic_power_with(
                &StarConfig::new(s, cfg.c() + j)?,
                (j as u32 + 1) * l,
                limits,
            )
        })
        .collect()
}

/// `∩_{j=0}^{N-c} I_{V_{c+j}}^{((j+1) l)} ∩ M^{(N-c+2) l}` with `N = s - 1`.
pub fn rhs_decomposition(cfg: &StarConfig, l: u32) -> Result<MonomialIdeal> {
    rhs_decomposition_with(cfg, l, &Limits::default())
}

pub fn rhs_decomposition_with(cfg: &StarConfig, l: u32, limits: &Limits) -> Result<MonomialIdeal> {
    check_l(l)?;
    let s = cfg.s();
    let t = (s - cfg.c() + 1) as u32 * l;
    let mut parts = symbolic_components(cfg, l, limits)?;
    parts.push(MonomialIdeal::irrelevant_power(s, t)?);
    let out = MonomialIdeal::intersect_all(s, parts)?;
    limits.check_generators("decomposition", out.len())?;
    Ok(out)
}

fn ordinary_power(cfg: &StarConfig, l: u32, limits: &Limits) -> Result<MonomialIdeal> {
    limits.check_power(cfg.s(), l)?;
    let p = skeleton_ideal(cfg).power(l);
    limits.check_generators("ordinary power", p.len())?;
    Ok(p)
}

/// `I^l` equals [`rhs_decomposition`].
pub fn verify_power_decomposition(cfg: &StarConfig, l: u32, limits: &Limits) -> Result<bool> {
    check_l(l)?;
    Ok(ordinary_power(cfg, l, limits)? == rhs_decomposition_with(cfg, l, limits)?)
}

/// `sat(I^l)` equals the symbolic part of the decomposition (no `M` factor).
pub fn verify_saturation(cfg: &StarConfig, l: u32, limits: &Limits) -> Result<bool> {
    check_l(l)?;
    let s = cfg.s();
    let sat = ordinary_power(cfg, l, limits)?.saturate(&MonomialIdeal::irrelevant(s)?)?;
    let sym = MonomialIdeal::intersect_all(s, symbolic_components(cfg, l, limits)?)?;
    Ok(sat == sym)
}

/// `I^{(m)} ⊆ I^r`.
pub fn symbolic_in_power(cfg: &StarConfig, m: u32, r: u32, limits: &Limits) -> Result<bool> {
    if m == 0 || r == 0 {
        return Err(Error::usage("m and r must be at least 1"));
    }
    let power = ordinary_power(cfg, r, limits)?;
    power.contains(&symbolic_power_with(cfg, m, limits)?)
}

/// For `c = N - 1`, `s = N + 1`: true exactly when
/// `m / r < (3 - (2N - 4) / ((N - 1) r)) (N - 1) / (N + 1)`, i.e. `I^{(m)}` is NOT in `I^r`.
pub fn criterion(n: u32, m: u32, r: u32) -> Result<bool> {
    if n < 3 {
        return Err(Error::usage(format!(
            "the containment criterion needs N >= 3, got {n}"
        )));
    }
    if m == 0 || r == 0 {
        return Err(Error::usage("m and r must be at least 1"));
    }
    let (n, m, r) = (n as i64, m as i64, r as i64);
    let lhs = Rational::new(m, r);
    let rhs = (Rational::from_integer(3) - Rational::new(2 * n - 4, (n - 1) * r))
        * Rational::new(n - 1, n + 1);
    Ok(lhs < rhs)
}

/// The same non-containment test without dropping the floor in the initial
/// degree: for `c = N - 1`, `I^{(m)}` is NOT in `I^r` iff `m < r`, or
/// `m + ceil(m / (N - 1)) < 2r`, or `alpha(I^{(m)}) = m + 2 + 2 floor((m - 1) / (N - 1)) < 3r`.
/// [`criterion`] replaces the floor by the exact quotient and so misses cells
/// where the floor makes the difference, such as `(N, m, r) = (3, 4, 3)`.
pub fn criterion_with_floor(n: u32, m: u32, r: u32) -> Result<bool> {
    if n < 3 {
        return Err(Error::usage(format!(
            "the containment criterion needs N >= 3, got {n}"
        )));
    }
    if m == 0 || r == 0 {
        return Err(Error::usage("m and r must be at least 1"));
    }
    let (n, m, r) = (n as u64, m as u64, r as u64);
    let alpha = m + 2 + 2 * ((m - 1) / (n - 1));
    Ok(m < r || m + m.div_ceil(n - 1) < 2 * r || alpha < 3 * r)
}

/// Exact resurgence where it is known: `c = N`, `c = N - 1` (`N >= 3`) and `c = 1`.
pub fn rho_exact(cfg: &StarConfig) -> Option<Rational> {
    let n = cfg.s() as i64 - 1;
    let c = cfg.c() as i64;
    if c == n {
        Some(Rational::new(2 * n, n + 1))
    } else if c == n - 1 && n >= 3 {
        Some(Rational::new(3 * (n - 1), n + 1))
    } else if c == 1 {
        Some(Rational::from_integer(1))
    } else {
        None
    }
}

/// `c (s - c + 1) / s`.
pub fn lower_bound(cfg: &StarConfig) -> Rational {
    let (s, c) = (cfg.s() as i64, cfg.c() as i64);
    Rational::new(c * (s - c + 1), s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub m: u32,
    pub r: u32,
    pub contained: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupWitness {
    pub ratio: Rational,
    pub m: u32,
    pub r: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentReport {
    pub s: usize,
    pub c: usize,
    pub m_max: u32,
    pub r_max: u32,
    /// Ordered by `m`, then `r`.
    pub cells: Vec<Cell>,
    /// Largest `m / r` over non-contained cells; ties go to the first cell.
    pub empirical_sup: Option<SupWitness>,
    pub lower_bound: Rational,
    pub rho_exact: Option<Rational>,
    /// For `c = N - 1`, `N >= 3`: every cell agrees with [`criterion`]. Otherwise absent.
    pub criterion_agrees: Option<bool>,
    /// Cells that disagree with [`criterion`].
    pub criterion_mismatches: Vec<(u32, u32)>,
    /// As `criterion_agrees`, against [`criterion_with_floor`].
    pub floor_criterion_agrees: Option<bool>,
    pub floor_criterion_mismatches: Vec<(u32, u32)>,
}

impl ContainmentReport {
    /// Agreement with both criteria (when they apply) and the sup not above the exact value.
    pub fn consistent(&self) -> bool {
        let under = match (&self.empirical_sup, &self.rho_exact) {
            (Some(w), Some(rho)) => w.ratio <= *rho,
            _ => true,
        };
        under && self.criterion_agrees != Some(false) && self.floor_criterion_agrees != Some(false)
    }
}

type Agreement = (Option<bool>, Vec<(u32, u32)>);

pub fn resurgence_scan(
    cfg: &StarConfig,
    m_max: u32,
    r_max: u32,
    limits: &Limits,
) -> Result<ContainmentReport> {
    if m_max == 0 || r_max == 0 {
        return Err(Error::usage("mmax and rmax must be at least 1"));
    }
    let s = cfg.s();
    limits.check_power(s, r_max)?;
    let ms: Vec<u32> = (1..=m_max).collect();
    let rs: Vec<u32> = (1..=r_max).collect();
    let symbolic: Vec<MonomialIdeal> = par::map(&ms, |&m| symbolic_power_with(cfg, m, limits))
        .into_iter()
        .collect::<Result<_>>()?;
    // I^r built incrementally, each from the previous
    let base = skeleton_ideal(cfg);
    let mut powers: Vec<MonomialIdeal> = Vec::with_capacity(rs.len());
    let mut acc = MonomialIdeal::unit(s);
    for _ in &rs {
        acc = acc.multiply(&base)?;
        limits.check_generators("ordinary power", acc.len())?;
        powers.push(acc.clone());
    }
    let tries: BTreeMap<u32, _> = rs
        .iter()
        .map(|&r| (r, powers[r as usize - 1].trie()))
        .collect();

    let pairs: Vec<(u32, u32)> = ms
        .iter()
        .flat_map(|&m| rs.iter().map(move |&r| (m, r)))
        .collect();
    let cells: Vec<Cell> = par::map(&pairs, |&(m, r)| {
        let trie = &tries[&r];
        let contained = symbolic[m as usize - 1]
            .gens()
            .iter()
            .all(|g| trie.contains_divisor_of(g));
        Cell { m, r, contained }
    });

    let mut empirical_sup: Option<SupWitness> = None;
    for cell in cells.iter().filter(|c| !c.contained) {
        let ratio = Rational::new(cell.m as i64, cell.r as i64);
        if empirical_sup.is_none_or(|w| ratio > w.ratio) {
            empirical_sup = Some(SupWitness {
                ratio,
                m: cell.m,
                r: cell.r,
            });
        }
    }

    let n = s as u32 - 1;
    let applies = n >= 3 && cfg.c() as u32 == n - 1;
    let compare = |test: fn(u32, u32, u32) -> Result<bool>| -> Result<Agreement> {
        if !applies {
            return Ok((None, Vec::new()));
        }
        let mut bad = Vec::new();
        for cell in &cells {
            if test(n, cell.m, cell.r)? == cell.contained {
                bad.push((cell.m, cell.r));
            }
        }
        Ok((Some(bad.is_empty()), bad))
    };
    let (criterion_agrees, criterion_mismatches) = compare(criterion)?;
    let (floor_criterion_agrees, floor_criterion_mismatches) = compare(criterion_with_floor)?;

    Ok(ContainmentReport {
        s,
        c: cfg.c(),
        m_max,
        r_max,
        cells,
        empirical_sup,
        lower_bound: lower_bound(cfg),
        rho_exact: rho_exact(cfg),
        criterion_agrees,
        criterion_mismatches,
        floor_criterion_agrees,
        floor_criterion_mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: usize, c: usize) -> StarConfig {
        StarConfig::new(s, c).unwrap()
    }

    #[test]
    fn decomposition_small() {
        let lim = Limits::default();
        assert_eq!(
            rhs_decomposition(&cfg(4, 2), 1).unwrap(),
            skeleton_ideal(&cfg(4, 2))
        );
        for (s, c, l) in [(4, 2, 2), (5, 3, 2), (4, 2, 3), (4, 3, 2), (3, 2, 3)] {
            assert!(
                verify_power_decomposition(&cfg(s, c), l, &lim).unwrap(),
                "{s} {c} {l}"
            );
            assert!(
                verify_saturation(&cfg(s, c), l, &lim).unwrap(),
                "{s} {c} {l}"
            );
        }
        assert!(verify_saturation(&cfg(5, 2), 1, &lim).unwrap());
        assert!(rhs_decomposition(&cfg(4, 2), 0).is_err());
    }

    #[test]
    fn criterion_values() {
        assert!(!criterion(3, 1, 1).unwrap());
        assert!(criterion(3, 12, 10).unwrap());
        assert!(criterion(2, 1, 1).is_err());
        // right side at r = 1 is exactly 1 for every N
        for n in 3..10 {
            assert!(!criterion(n, 1, 1).unwrap());
            assert!(criterion(n, 1, 2).unwrap());
        }
    }

    #[test]
    fn floor_criterion_differs_only_at_floor_cells() {
        assert!(criterion_with_floor(3, 4, 3).unwrap());
        assert!(!criterion(3, 4, 3).unwrap());
        assert!(criterion_with_floor(3, 12, 10).unwrap());
        assert!(!criterion_with_floor(3, 1, 1).unwrap());
        // the floor only ever adds non-containments
        for n in 3..7 {
            for m in 1..40 {
                for r in 1..20 {
                    if criterion(n, m, r).unwrap() {
                        assert!(criterion_with_floor(n, m, r).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn exact_resurgence() {
        assert_eq!(rho_exact(&cfg(4, 2)), Some(Rational::new(3, 2)));
        assert_eq!(rho_exact(&cfg(4, 3)), Some(Rational::new(3, 2)));
        assert_eq!(rho_exact(&cfg(5, 3)), Some(Rational::new(9, 5)));
        assert_eq!(rho_exact(&cfg(6, 1)), Some(Rational::from_integer(1)));
        assert_eq!(rho_exact(&cfg(6, 3)), None);
        // N = 2, c = 1 is c = N - 1 but below the criterion's range
        assert_eq!(rho_exact(&cfg(3, 1)), Some(Rational::from_integer(1)));
        assert_eq!(lower_bound(&cfg(4, 3)), Rational::new(3, 2));
        assert_eq!(lower_bound(&cfg(7, 1)), Rational::from_integer(1));
    }

    #[test]
    fn single_containments() {
        let lim = Limits::default();
        let c = cfg(4, 2);
        assert!(symbolic_in_power(&c, 1, 1, &lim).unwrap());
        assert!(symbolic_in_power(&c, 3, 2, &lim).unwrap());
        assert!(!symbolic_in_power(&c, 2, 3, &lim).unwrap());
        assert!(symbolic_in_power(&c, 0, 1, &lim).is_err());
        // the witness pair needs r = 10, past the default cap
        assert_eq!(
            symbolic_in_power(&c, 12, 10, &lim).unwrap_err().kind(),
            "resource"
        );
        let wide = Limits {
            max_power: Some(10),
            ..lim
        };
        assert!(!symbolic_in_power(&c, 12, 10, &wide).unwrap());
    }

    #[test]
    fn scan_matches_criterion() {
        let rep = resurgence_scan(&cfg(4, 2), 12, 6, &Limits::default()).unwrap();
        assert_eq!(rep.cells.len(), 72);
        assert_eq!(rep.floor_criterion_mismatches, vec![]);
        assert_eq!(rep.floor_criterion_agrees, Some(true));
        // the closed form misses (4, 3): alpha(I^(4)) = 8 < 9 = alpha(I^3)
        assert_eq!(rep.criterion_mismatches, vec![(4, 3)]);
        assert!(!rep.consistent());
        for r in 1..=6 {
            let col: Vec<bool> = rep
                .cells
                .iter()
                .filter(|c| c.r == r)
                .map(|c| c.contained)
                .collect();
            // monotone in m, and never contained for m < r
            assert!(col.windows(2).all(|w| !w[0] || w[1]));
            assert!(col[..r as usize - 1].iter().all(|&x| !x));
        }
    }

    #[test]
    fn scan_c_equals_n() {
        let rep = resurgence_scan(&cfg(4, 3), 10, 5, &Limits::default()).unwrap();
        assert_eq!(rep.criterion_agrees, None);
        let sup = rep.empirical_sup.unwrap();
        assert!(sup.ratio <= Rational::new(3, 2));
        assert!(sup.ratio >= Rational::new(1, 1));
        assert!(resurgence_scan(&cfg(4, 3), 5, 9, &Limits::default()).is_err());
    }
}
