//! Test-only oracles, deliberately independent of the crate's elimination
//! and conversion code paths.
#![allow(dead_code)]

use contact_kirby::{Int, IntMatrix, Matrix, Rational, RationalMatrix};
use num_traits::{One, Zero};

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

pub fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
}

fn minor(rows: &[Vec<Int>], skip_row: usize, skip_col: usize) -> Vec<Vec<Int>> {
    rows.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(rows: &[Vec<Int>]) -> Int {
    match rows.len() {
        0 => Int::one(),
        1 => rows[0][0].clone(),
        n => (0..n).fold(Int::zero(), |acc, j| {
            let term = rows[0][j].clone() * cofactor_det(&minor(rows, 0, j));
            if j % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        }),
    }
}

/// Inverse as adjugate / determinant.
pub fn adjugate_inverse(m: &IntMatrix) -> Option<RationalMatrix> {
    let rows = m.to_rows();
    let d = cofactor_det(&rows);
    if d.is_zero() {
        return None;
    }
    let n = rows.len();
    Some(Matrix::from_fn(n, |i, j| {
        // (adj M)_{ij} = (-1)^{i+j} det(minor_{ji})
        let c = cofactor_det(&minor(&rows, j, i));
        let c = if (i + j) % 2 == 0 { c } else { -c };
        Rational::new(c, d.clone())
    }))
}

/// Linking matrix of the (m+1)-component chain for contact (m+1)-surgery on
/// an unknot with tb = -m, written entry by entry from its closed form.
pub fn closed_form_m(m: i64) -> IntMatrix {
    let n = (m + 1) as usize;
    Matrix::from_fn(n, |i, j| {
        int(match (i, j) {
            (0, 0) => -m + 1,
            (0, _) | (_, 0) => -m,
            _ if i == j => -m - 2,
            _ => -m - 1,
        })
    })
}

/// Closed-form inverse of [`closed_form_m`].
pub fn closed_form_m_inv(m: i64) -> IntMatrix {
    let n = (m + 1) as usize;
    Matrix::from_fn(n, |i, j| {
        int(match (i, j) {
            (0, 0) => m * m + m + 1,
            (0, _) | (_, 0) => -m,
            _ if i == j => 0,
            _ => 1,
        })
    })
}

/// Hand derivation of ⟨C, M⁻¹L⟩ for the chain with the single zigzag of
/// sign `s`: M⁻¹L = (m+1, -1, …, -1) and C = (1-m, 1-m+s, …, 1-m+s), so the
/// pairing is (1-m)(m+1) - m(1-m+s).
pub fn hand_rot_pairing(m: i64, s: i64) -> i64 {
    (1 - m) * (m + 1) - m * (1 - m + s)
}
