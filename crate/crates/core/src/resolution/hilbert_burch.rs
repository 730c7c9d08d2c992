//! Hilbert-Burch matrices `Δ_m` for symbolic powers of the codimension-2 skeleton.
//!
//! With `h_i = x_i`, `P = x_0 ... x_{s-1}` and `P_i = P / x_i`, the blocks are
//! `B = (-P_0 ... -P_{s-1})` (1 x s), `C = diag(h_i)`, `E = -diag(P_i)` and the
//! s x (s-1) bidiagonal `D` with `-h_i` on the diagonal and `h_{i+1}` below it.
//! For `m = 2r` the layout is `B` over `r` block rows `[.. C E ..]`; for
//! `m = 2r + 1` it is `[D E 0 ..]` over `r` block rows `[0 .. C E ..]`.

use serde::{Deserialize, Serialize};

use super::matrix::{determinant, SymbolicMatrix};
use super::poly::SparsePoly;
use crate::error::{Error, Result};
use crate::exponents::{ExponentTuple, MonomialIdeal};
use crate::limits::MAX_DET_DIM;
use crate::par;
use crate::star::{symbolic_power, StarConfig};

fn product_all(s: usize) -> ExponentTuple {
    ExponentTuple::new(vec![1u32; s])
}

fn product_except(s: usize, i: usize) -> ExponentTuple {
    let mut e = vec![1u32; s];
    e[i] = 0;
    ExponentTuple::new(e)
}

/// Shape `(rows, cols)` of `Δ_m`.
pub fn hb_shape(s: usize, m: u32) -> (usize, usize) {
    let r = (m / 2) as usize;
    if m.is_multiple_of(2) {
        (s * r + 1, s * r)
    } else {
        (s * (r + 1), s * (r + 1) - 1)
    }
}

pub fn hb_matrix(s: usize, m: u32) -> Result<SymbolicMatrix> {
    if s < 2 {
        return Err(Error::usage(format!("need at least 2 forms, got s = {s}")));
    }
    if m < 2 {
        return Err(Error::usage(format!(
            "Hilbert-Burch matrix needs m >= 2 (m = 1 is the skeleton itself), got {m}"
        )));
    }
    let (rows, cols) = hb_shape(s, m);
    let mut mat = SymbolicMatrix::zeros(rows, cols, s);
    let h = |i: usize| SparsePoly::variable(s, i);
    let p_i = |i: usize| SparsePoly::monomial(1, product_except(s, i));
    let r = (m / 2) as usize;

    // C at (row0, col0), E immediately to its right
    let put_c_e = |mat: &mut SymbolicMatrix, row0: usize, col0: usize, with_e: bool| {
        for i in 0..s {
            mat.set(row0 + i, col0 + i, h(i));
            if with_e {
                mat.set(row0 + i, col0 + s + i, p_i(i).neg());
            }
        }
    };

    if m.is_multiple_of(2) {
        for i in 0..s {
            mat.set(0, i, p_i(i).neg());
        }
        for j in 0..r {
            put_c_e(&mut mat, 1 + s * j, s * j, j + 1 < r);
        }
    } else {
        for i in 0..s {
            if i + 1 < s {
                mat.set(i, i, h(i).neg());
            }
            if i > 0 {
                mat.set(i, i - 1, h(i));
            }
        }
        // E of the first block row sits right after D
        if r > 0 {
            for i in 0..s {
                mat.set(i, s - 1 + i, p_i(i).neg());
            }
        }
        for j in 1..=r {
            put_c_e(&mut mat, s * j, s - 1 + s * (j - 1), j < r);
        }
    }
    Ok(mat)
}

/// Determinants of the square submatrices obtained by deleting one row, in row order.
pub fn maximal_minors(m: &SymbolicMatrix) -> Result<Vec<SparsePoly>> {
    if m.rows() != m.cols() + 1 {
        return Err(Error::usage(format!(
            "maximal minors need rows = cols + 1, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if m.cols() > MAX_DET_DIM {
        return Err(Error::resource(
            format!("maximal minors of a {}x{} matrix", m.rows(), m.cols()),
            MAX_DET_DIM as u64,
        ));
    }
    let rows: Vec<usize> = (0..m.rows()).collect();
    par::map(&rows, |&r| determinant(&m.without_row(r)))
        .into_iter()
        .collect()
}

/// The predicted minor family, sorted: `P^{r-k} P_i^{2k}` (with `P^r` for
/// `k = 0`) when `m = 2r`, and `P^{r-k} P_i^{2k+1}` when `m = 2r + 1`.
pub fn predicted_minor_family(s: usize, m: u32) -> Vec<ExponentTuple> {
    let r = m / 2;
    let p = product_all(s);
    let mut out = Vec::new();
    if m.is_multiple_of(2) {
        out.push(p.pow(r));
        for k in 1..=r {
            for i in 0..s {
                out.push(p.pow(r - k).mul(&product_except(s, i).pow(2 * k)));
            }
        }
    } else {
        for k in 0..=r {
            for i in 0..s {
                out.push(p.pow(r - k).mul(&product_except(s, i).pow(2 * k + 1)));
            }
        }
    }
    out.sort_unstable();
    out
}

/// One maximal minor: the deleted row and, when it is `±` a monomial, its sign and monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorEntry {
    pub deleted_row: usize,
    pub sign: Option<i8>,
    pub monomial: Option<ExponentTuple>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HbVerification {
    pub s: usize,
    pub m: u32,
    pub rows: usize,
    pub cols: usize,
    pub minors: Vec<MinorEntry>,
    /// Rows whose minor is not a signed monomial.
    pub non_monomial_rows: Vec<usize>,
    /// Minor monomials equal the predicted family as sets.
    pub family_matches: bool,
    /// The ideal of the minors equals `I^{(m)}` for the codimension-2 skeleton.
    pub ideal_matches: bool,
}

impl HbVerification {
    pub fn holds(&self) -> bool {
        self.non_monomial_rows.is_empty() && self.family_matches && self.ideal_matches
    }
}

pub fn verify_hb(s: usize, m: u32) -> Result<HbVerification> {
    let cfg = StarConfig::new(s, 2)?;
    let mat = hb_matrix(s, m)?;
    let minors = maximal_minors(&mat)?;
    let entries: Vec<MinorEntry> = minors
        .iter()
        .enumerate()
        .map(|(row, p)| {
            let sm = p.as_signed_monomial();
            MinorEntry {
                deleted_row: row,
                sign: sm.map(|(sg, _)| sg),
                monomial: sm.map(|(_, mono)| mono.clone()),
                text: p.to_string(),
            }
        })
        .collect();
    let non_monomial_rows: Vec<usize> = entries
        .iter()
        .filter(|e| e.monomial.is_none())
        .map(|e| e.deleted_row)
        .collect();
    let mut found: Vec<ExponentTuple> = entries.iter().filter_map(|e| e.monomial.clone()).collect();
    found.sort_unstable();
    found.dedup();
    let family_matches = non_monomial_rows.is_empty() && found == predicted_minor_family(s, m);
    let ideal_matches = non_monomial_rows.is_empty()
        && MonomialIdeal::from_generators(s, found)? == symbolic_power(&cfg, m)?;
    Ok(HbVerification {
        s,
        m,
        rows: mat.rows(),
        cols: mat.cols(),
        minors: entries,
        non_monomial_rows,
        family_matches,
        ideal_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let d = hb_matrix(4, 2).unwrap();
        assert_eq!((d.rows(), d.cols()), (5, 4));
        let d = hb_matrix(4, 3).unwrap();
        assert_eq!((d.rows(), d.cols()), (8, 7));
        let d = hb_matrix(4, 4).unwrap();
        assert_eq!((d.rows(), d.cols()), (9, 8));
        assert!(hb_matrix(4, 1).is_err());
        assert!(hb_matrix(1, 2).is_err());
    }

    #[test]
    fn block_entries() {
        let d = hb_matrix(4, 2).unwrap();
        for i in 0..4 {
            let (sign, mono) = d.get(0, i).as_signed_monomial().unwrap();
            assert_eq!(sign, -1);
            assert_eq!(mono.degree(), 3);
            assert_eq!(mono.exps()[i], 0);
            assert_eq!(d.get(1 + i, i), &SparsePoly::variable(4, i));
        }
        let d = hb_matrix(4, 3).unwrap();
        // D: -h_i on the diagonal, h_{i+1} below
        assert_eq!(d.get(0, 0), &SparsePoly::variable(4, 0).neg());
        assert_eq!(d.get(1, 0), &SparsePoly::variable(4, 1));
        assert_eq!(d.get(3, 2), &SparsePoly::variable(4, 3));
        assert!(d.get(0, 3).as_signed_monomial().is_some()); // E block starts at column s - 1
        assert!(d.get(3, 3).is_zero());
        assert_eq!(d.get(4, 3), &SparsePoly::variable(4, 0)); // C block
    }

    #[test]
    fn every_entry_is_a_signed_monomial_or_zero() {
        for (s, m) in [(3, 2), (4, 3), (4, 4), (5, 5)] {
            let d = hb_matrix(s, m).unwrap();
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    let e = d.get(r, c);
                    assert!(e.is_zero() || e.as_signed_monomial().is_some());
                }
            }
        }
    }

    #[test]
    fn minors_s4_m2() {
        let minors = maximal_minors(&hb_matrix(4, 2).unwrap()).unwrap();
        assert_eq!(minors.len(), 5);
        let mut monos: Vec<ExponentTuple> = minors
            .iter()
            .map(|p| p.as_signed_monomial().unwrap().1.clone())
            .collect();
        monos.sort_unstable();
        let mut expected = vec![ExponentTuple::new([1, 1, 1, 1])];
        for i in 0..4 {
            let mut e = vec![2u32; 4];
            e[i] = 0;
            expected.push(ExponentTuple::new(e));
        }
        expected.sort_unstable();
        assert_eq!(monos, expected);
        assert_eq!(predicted_minor_family(4, 2), expected);
    }

    #[test]
    fn minors_s4_m3() {
        let minors = maximal_minors(&hb_matrix(4, 3).unwrap()).unwrap();
        assert_eq!(minors.len(), 8);
        let mut monos: Vec<ExponentTuple> = minors
            .iter()
            .map(|p| p.as_signed_monomial().unwrap().1.clone())
            .collect();
        monos.sort_unstable();
        let mut expected = Vec::new();
        for i in 0..4 {
            let mut pp = vec![2u32; 4];
            pp[i] = 1;
            expected.push(ExponentTuple::new(pp));
            let mut cube = vec![3u32; 4];
            cube[i] = 0;
            expected.push(ExponentTuple::new(cube));
        }
        expected.sort_unstable();
        assert_eq!(monos, expected);
    }

    #[test]
    fn minor_counts() {
        for s in 3..6 {
            for m in 2..6u32 {
                let r = (m / 2) as usize;
                let want = if m % 2 == 0 { s * r + 1 } else { s * (r + 1) };
                assert_eq!(predicted_minor_family(s, m).len(), want);
                assert_eq!(hb_shape(s, m).0, want);
            }
        }
    }

    #[test]
    fn verification() {
        for (s, m) in [(4, 2), (5, 3), (4, 4)] {
            let v = verify_hb(s, m).unwrap();
            assert!(v.holds(), "{v:?}");
        }
        assert!(verify_hb(2, 2).is_err());
    }

    #[test]
    fn maximal_minor_shape_mismatch() {
        let m = SymbolicMatrix::zeros(3, 3, 2);
        assert_eq!(maximal_minors(&m).unwrap_err().kind(), "usage");
    }
}
