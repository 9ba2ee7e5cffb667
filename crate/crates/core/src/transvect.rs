//! Transvectants of binary forms.

use num::traits::Zero;

use crate::binform::BinaryForm;
use crate::scalar::{binomial, factorial, falling, sign_pow, Scalar};

/// The `k`-th transvectant
///
/// ```text
/// (E, F)_k = (e-k)! (f-k)! / (e! f!)
///            * sum_i (-1)^i binom(k, i) d^k E / dx1^(k-i) dx2^i * d^k F / dx1^i dx2^(k-i)
/// ```
///
/// of forms of orders `e` and `f`. The result has order `e + f - 2k`. For
/// `k > min(e, f)` the transvectant vanishes and the zero form of order 0 is
/// returned.
pub fn transvectant(e: &BinaryForm, f: &BinaryForm, k: usize) -> BinaryForm {
    let (eo, fo) = (e.order(), f.order());
    if k > eo.min(fo) {
        return BinaryForm::zero(0);
    }
    let mut sum = BinaryForm::zero(eo + fo - 2 * k);
    for i in 0..=k {
        let de = e.partial_derivative(k - i, i);
        if de.is_zero() {
            continue;
        }
        let df = f.partial_derivative(i, k - i);
        if df.is_zero() {
            continue;
        }
        let weight = sign_pow(i) * Scalar::from_integer(binomial(k, i));
        sum.add_scaled(&weight, &de.multiply(&df))
            .expect("orders agree");
    }
    let norm = Scalar::new(
        factorial(eo - k) * factorial(fo - k),
        factorial(eo) * factorial(fo),
    );
    sum.scale(&norm)
}

/// Coefficient of `x1^(e+f-2k-t) x2^t`, `t = i + j - k`, in
/// `(x1^(e-i) x2^i, x1^(f-j) x2^j)_k`. Zero when the indices do not fit.
///
/// This is the only coefficient that can be nonzero, since a transvectant of
/// monomials is again a monomial.
pub fn monomial_transvectant(e: usize, i: usize, f: usize, j: usize, k: usize) -> Scalar {
    if k > e.min(f) || i + j < k {
        return Scalar::zero();
    }
    let mut sum = num::BigInt::zero();
    for l in 0..=k {
        // d^k/dx1^(k-l) dx2^l of x1^(e-i) x2^i, and d^k/dx1^l dx2^(k-l) of x1^(f-j) x2^j
        let a = falling(e - i, k - l) * falling(i, l);
        let b = falling(f - j, l) * falling(j, k - l);
        let term = binomial(k, l) * a * b;
        if l % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Scalar::new(
        sum * factorial(e - k) * factorial(f - k),
        factorial(e) * factorial(f),
    )
}
