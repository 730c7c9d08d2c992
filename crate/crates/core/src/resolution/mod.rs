//! Graded Betti data for the skeleton and its symbolic square, and the
//! Hilbert-Burch matrices of the codimension-2 symbolic powers.

pub mod hilbert_burch;
pub mod matrix;
pub mod poly;

use serde::{Deserialize, Serialize};

pub use hilbert_burch::{
    hb_matrix, hb_shape, maximal_minors, predicted_minor_family, verify_hb, HbVerification,
    MinorEntry,
};
pub use matrix::{determinant, SymbolicMatrix};
pub use poly::SparsePoly;

use crate::error::{Error, Result};
use crate::exponents::MonomialIdeal;
use crate::hilbert::{series_numerator, UniPoly};
use crate::star::StarConfig;
use crate::util::binom;

/// Rank of the `i`-th module in the Eagon-Northcott resolution of the skeleton.
pub fn en_rank(s: usize, c: usize, i: usize) -> Result<i64> {
    if c == 0 || c > s || i == 0 || i > c {
        return Err(Error::usage(format!(
            "en_rank needs 1 <= i <= c <= s, got s = {s}, c = {c}, i = {i}"
        )));
    }
    let (s, c, i) = (s as i64, c as i64, i as i64);
    Ok(binom(s, s - c + i) * binom(s - c + i - 1, i - 1))
}

/// `modules[i - 1]` lists the `(twist, rank)` summands of `F_i`, ascending in degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionShape {
    pub modules: Vec<Vec<(i64, i64)>>,
}

impl ResolutionShape {
    pub fn length(&self) -> usize {
        self.modules.len()
    }

    /// `1 + sum_i (-1)^i sum r t^{-twist}`, trimmed.
    pub fn k_polynomial(&self) -> UniPoly {
        let top = self
            .modules
            .iter()
            .flatten()
            .map(|&(a, _)| (-a) as usize)
            .max()
            .unwrap_or(0);
        let mut k = vec![0i64; top + 1];
        k[0] = 1;
        for (idx, module) in self.modules.iter().enumerate() {
            let sign = if (idx + 1) % 2 == 0 { 1 } else { -1 };
            for &(a, r) in module {
                k[(-a) as usize] += sign * r;
            }
        }
        while k.last() == Some(&0) {
            k.pop();
        }
        k
    }
}

/// Resolution of the symbolic square of the codimension-`c` skeleton.
pub fn ss_resolution(cfg: &StarConfig) -> Result<ResolutionShape> {
    let (s, c) = (cfg.s() as i64, cfg.c() as i64);
    if c < 2 {
        return Err(Error::usage(format!(
            "symbolic square resolution needs 2 <= c <= s - 1, got c = {c}"
        )));
    }
    let mut modules = Vec::with_capacity(c as usize);
    for i in 1..=c {
        let m_i = if i == 1 {
            binom(s, s - c + 1)
        } else {
            binom(s, s - c + i) * (binom(s - c + i - 1, i - 1) + binom(s - c + i - 1, i - 2))
        };
        let n_i = if i < c {
            binom(s, s - c + 1 + i) * binom(s - c + i, i - 1)
        } else {
            0
        };
        let mut f = Vec::new();
        if n_i > 0 {
            f.push((-(s - c + 1 + i), n_i));
        }
        if m_i > 0 {
            f.push((-(2 * s - 2 * c + 1 + i), m_i));
        }
        modules.push(f);
    }
    Ok(ResolutionShape { modules })
}

/// Eagon-Northcott shape of the skeleton itself: `F_i = R(-(s-c+i))^{en_rank}`.
pub fn skeleton_resolution(cfg: &StarConfig) -> Result<ResolutionShape> {
    let (s, c) = (cfg.s(), cfg.c());
    let modules = (1..=c)
        .map(|i| Ok(vec![(-((s - c + i) as i64), en_rank(s, c, i)?)]))
        .collect::<Result<_>>()?;
    Ok(ResolutionShape { modules })
}

/// Does the alternating sum of the claimed resolution reproduce the series numerator of `S/I`?
pub fn euler_check(shape: &ResolutionShape, ideal: &MonomialIdeal) -> Result<bool> {
    if shape
        .modules
        .iter()
        .flatten()
        .any(|&(a, r)| a > 0 || r <= 0)
    {
        return Ok(false);
    }
    Ok(shape.k_polynomial() == series_numerator(ideal, None)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::{skeleton_ideal, symbolic_power};

    #[test]
    fn en_ranks() {
        assert_eq!(en_rank(7, 2, 1).unwrap(), 7);
        assert_eq!(en_rank(7, 2, 2).unwrap(), 6);
        for c in 1..6 {
            for i in 1..=c {
                assert_eq!(en_rank(c, c, i).unwrap(), binom(c as i64, i as i64));
            }
        }
        for s in 2..9usize {
            for c in 1..s {
                let cfg = StarConfig::new(s, c).unwrap();
                assert_eq!(en_rank(s, c, 1).unwrap(), skeleton_ideal(&cfg).len() as i64);
            }
        }
        assert!(en_rank(5, 2, 3).is_err());
        assert!(en_rank(5, 2, 0).is_err());
    }

    #[test]
    fn worked_example_resolution() {
        let shape = ss_resolution(&StarConfig::new(7, 3).unwrap()).unwrap();
        assert_eq!(
            shape.modules,
            vec![
                vec![(-6, 7), (-10, 21)],
                vec![(-7, 6), (-11, 42)],
                vec![(-12, 21)],
            ]
        );
    }

    #[test]
    fn last_module_has_no_low_summand() {
        for s in 3..9 {
            for c in 2..s {
                let shape = ss_resolution(&StarConfig::new(s, c).unwrap()).unwrap();
                let last = shape.modules.last().unwrap();
                assert_eq!(last.len(), 1);
                assert_eq!(last[0].0, -((2 * s - c + 1) as i64));
            }
        }
        assert!(ss_resolution(&StarConfig::new(5, 1).unwrap()).is_err());
    }

    #[test]
    fn first_module_matches_generator_degrees() {
        for s in 3..=6 {
            for c in 2..s {
                let cfg = StarConfig::new(s, c).unwrap();
                let shape = ss_resolution(&cfg).unwrap();
                let hist: Vec<(i64, i64)> = symbolic_power(&cfg, 2)
                    .unwrap()
                    .degree_histogram()
                    .into_iter()
                    .map(|(d, n)| (-(d as i64), n as i64))
                    .collect();
                assert_eq!(shape.modules[0], hist, "s={s} c={c}");
            }
        }
    }

    #[test]
    fn euler_consistency() {
        for s in 3..=6 {
            for c in 2..s {
                let cfg = StarConfig::new(s, c).unwrap();
                let ideal = symbolic_power(&cfg, 2).unwrap();
                assert!(euler_check(&ss_resolution(&cfg).unwrap(), &ideal).unwrap());
                let sk = skeleton_ideal(&cfg);
                assert!(euler_check(&skeleton_resolution(&cfg).unwrap(), &sk).unwrap());
            }
        }
        let cfg = StarConfig::new(7, 3).unwrap();
        assert!(euler_check(
            &ss_resolution(&cfg).unwrap(),
            &symbolic_power(&cfg, 2).unwrap()
        )
        .unwrap());
    }

    #[test]
    fn perturbed_rank_fails() {
        let cfg = StarConfig::new(4, 2).unwrap();
        let ideal = symbolic_power(&cfg, 2).unwrap();
        let shape = ss_resolution(&cfg).unwrap();
        for i in 0..shape.modules.len() {
            for j in 0..shape.modules[i].len() {
                for delta in [-1, 1] {
                    let mut bad = shape.clone();
                    bad.modules[i][j].1 += delta;
                    assert!(!euler_check(&bad, &ideal).unwrap());
                }
            }
        }
    }
}
