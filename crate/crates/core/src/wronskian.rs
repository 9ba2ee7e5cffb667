//! Normalized Wronskians of binary forms and linear dependence.

use crate::binform::BinaryForm;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{factorial, Scalar};

fn check_family(forms: &[BinaryForm]) -> Result<usize> {
    let first = forms.first().ok_or(Error::EmptyList)?;
    let n = first.order();
    if let Some(bad) = forms.iter().find(|f| f.order() != n) {
        return Err(Error::OrderMismatch {
            expected: n,
            found: bad.order(),
        });
    }
    Ok(n)
}

/// Determinant of a square matrix whose entries are forms.
///
/// Laplace expansion memoized over column subsets, `O(s 2^s)` products.
/// All entries must share one order.
pub fn form_determinant(entries: &[Vec<BinaryForm>]) -> BinaryForm {
    let s = entries.len();
    if s == 0 {
        return BinaryForm::one();
    }
    let entry_order = entries[0][0].order();
    let mut table: Vec<Option<BinaryForm>> = vec![None; 1 << s];
    table[0] = Some(BinaryForm::one());
    for mask in 1usize..(1 << s) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = BinaryForm::zero(entry_order * (row + 1));
        for c in 0..s {
            if mask & (1 << c) == 0 {
                continue;
            }
            let rest = mask & !(1 << c);
            let minor = table[rest].as_ref().expect("filled in increasing order");
            if minor.is_zero() || entries[row][c].is_zero() {
                continue;
            }
            let inversions = (rest >> (c + 1)).count_ones();
            let term = entries[row][c].multiply(minor);
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            acc.add_scaled(&crate::scalar::int(sign), &term)
                .expect("orders agree");
        }
        table[mask] = Some(acc);
    }
    table.pop().flatten().expect("full mask computed")
}

/// `W(F_1..F_s) = ((n-s+1)!/n!)^s det(d^(s-1) F_i / dx1^(s-j) dx2^(j-1))`
/// for `s` forms of common order `n`, `1 <= s <= n + 1`.
///
/// The result has order `s (n - s + 1)` and vanishes exactly when the forms
/// are linearly dependent.
pub fn wronskian(forms: &[BinaryForm]) -> Result<BinaryForm> {
    let n = check_family(forms)?;
    let s = forms.len();
    if s > n + 1 {
        return Err(Error::OutOfRange {
            what: "number of forms in a Wronskian",
            value: s,
            min: 1,
            max: n + 1,
        });
    }
    let entries: Vec<Vec<BinaryForm>> = forms
        .iter()
        .map(|f| (0..s).map(|c| f.partial_derivative(s - 1 - c, c)).collect())
        .collect();
    let det = form_determinant(&entries);
    let base = Scalar::new(factorial(n + 1 - s), factorial(n));
    let norm = (0..s).fold(Scalar::from_integer(1.into()), |acc, _| acc * &base);
    Ok(det.scale(&norm))
}

/// The `s x (n+1)` matrix whose rows are the coefficient vectors.
pub fn coefficient_matrix(forms: &[BinaryForm]) -> Result<Matrix> {
    let n = check_family(forms)?;
    Ok(Matrix::from_rows(
        forms.iter().map(|f| f.coeffs().to_vec()).collect(),
        n + 1,
    ))
}

/// Linear dependence by exact rank of the coefficient matrix. This does not
/// go through the Wronskian, so the two can check each other.
pub fn is_dependent(forms: &[BinaryForm]) -> Result<bool> {
    Ok(coefficient_matrix(forms)?.rank() < forms.len())
}
