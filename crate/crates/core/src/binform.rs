//! Binary forms with exact rational coefficients.
//!
//! A form of order `d` is stored densely as `c_0, ..., c_d` with
//! `f = sum_j c_j x1^(d-j) x2^j`. This is the raw monomial basis: no binomial
//! weights are folded into the coefficients. The binomially weighted
//! convention `f = sum_j binom(d, j) a_j x1^(d-j) x2^j` is only available
//! through [`BinaryForm::to_binomial`] and [`BinaryForm::from_binomial`].

use std::fmt;
use std::ops::{Mul, Neg};

use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial, falling, int, Scalar};

/// A homogeneous polynomial in `x1, x2` of a fixed order.
///
/// The order is part of the value: the zero form of order 3 differs from the
/// zero form of order 5.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyForm);
        }
        Ok(Self { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Scalar::zero(); order + 1],
        }
    }

    /// The constant form `1` of order zero.
    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self { coeffs: vec![c] }
    }

    /// The monomial `x1^(order-j) x2^j`.
    pub fn monomial(order: usize, j: usize) -> Self {
        assert!(j <= order, "monomial index {j} exceeds order {order}");
        let mut f = Self::zero(order);
        f.coeffs[j] = Scalar::one();
        f
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Scalar {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                expected: self.order(),
                found: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// In-place `self += factor * other`. Orders must agree.
    pub fn add_scaled(&mut self, factor: &Scalar, other: &Self) -> Result<()> {
        self.check_same_order(other)?;
        if factor.is_zero() {
            return Ok(());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += factor * b;
            }
        }
        Ok(())
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Polynomial product; the order of the result is the sum of the orders.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order() + other.order());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// `d^(k1+k2) f / dx1^k1 dx2^k2`.
    ///
    /// Differentiating more times than the order yields the zero form of
    /// order 0.
    pub fn partial_derivative(&self, k1: usize, k2: usize) -> Self {
        let d = self.order();
        if k1 + k2 > d {
            return Self::zero(0);
        }
        let order = d - k1 - k2;
        let coeffs = (0..=order)
            .map(|t| {
                // x1^(d-j) x2^j with j = t + k2
                let j = t + k2;
                let c = &self.coeffs[j];
                if c.is_zero() {
                    return Scalar::zero();
                }
                c * Scalar::from_integer(falling(d - j, k1) * falling(j, k2))
            })
            .collect();
        Self { coeffs }
    }

    /// The form `f(a x1 + b x2, c x1 + d x2)` for `g = [[a, b], [c, d]]`.
    ///
    /// Substituting `g` and then `h` equals substituting the product `g h`.
    pub fn substitute(&self, g: &Mat2) -> Self {
        let d = self.order();
        let first = Self {
            coeffs: vec![g.alpha.clone(), g.beta.clone()],
        };
        let second = Self {
            coeffs: vec![g.gamma.clone(), g.delta.clone()],
        };
        let first_pows = powers(&first, d);
        let second_pows = powers(&second, d);
        let mut out = Self::zero(d);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = first_pows[d - j].multiply(&second_pows[j]);
            out.add_scaled(c, &term).expect("orders agree");
        }
        out
    }

    /// The normalized `k`-th polarization
    /// `((n-k)!/n!) (y1 d/dx1 + y2 d/dx2)^k f`, a form of bidegree `(n-k, k)`.
    pub fn polarize(&self, k: usize) -> Result<BiForm> {
        let n = self.order();
        if k > n {
            return Err(Error::OutOfRange {
                what: "polarization index",
                value: k,
                min: 0,
                max: n,
            });
        }
        let norm = Scalar::new(factorial(n - k), factorial(n));
        let xorder = n - k;
        let mut coeffs = vec![vec![Scalar::zero(); k + 1]; xorder + 1];
        for j in 0..=k {
            let weight = &norm * Scalar::from_integer(binomial(k, j));
            let part = self.partial_derivative(k - j, j);
            for (i, c) in part.coeffs.iter().enumerate() {
                coeffs[i][j] = c * &weight;
            }
        }
        Ok(BiForm {
            xorder,
            yorder: k,
            coeffs,
        })
    }

    /// The binomially weighted coefficients `a_j = c_j / binom(d, j)`.
    pub fn to_binomial(&self) -> Vec<Scalar> {
        let d = self.order();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c / Scalar::from_integer(binomial(d, j)))
            .collect()
    }

    /// Builds `sum_j binom(d, j) a_j x1^(d-j) x2^j`.
    pub fn from_binomial(weighted: Vec<Scalar>) -> Result<Self> {
        let d = weighted.len().checked_sub(1).ok_or(Error::EmptyForm)?;
        Self::new(
            weighted
                .into_iter()
                .enumerate()
                .map(|(j, a)| a * Scalar::from_integer(binomial(d, j)))
                .collect(),
        )
    }

    /// Evaluates at a point, mostly useful for spot checks.
    pub fn evaluate(&self, x1: &Scalar, x2: &Scalar) -> Scalar {
        let d = self.order();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * pow(x1, d - j) * pow(x2, j))
            .fold(Scalar::zero(), |acc, t| acc + t)
    }
}

fn pow(x: &Scalar, e: usize) -> Scalar {
    (0..e).fold(Scalar::one(), |acc, _| acc * x)
}

fn powers(base: &BinaryForm, up_to: usize) -> Vec<BinaryForm> {
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(BinaryForm::one());
    for i in 1..=up_to {
        let next = out[i - 1].multiply(base);
        out.push(next);
    }
    out
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;

    fn mul(self, rhs: &BinaryForm) -> BinaryForm {
        self.multiply(rhs)
    }
}

impl Neg for &BinaryForm {
    type Output = BinaryForm;

    fn neg(self) -> BinaryForm {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for BinaryForm {
    type Output = BinaryForm;

    fn neg(self) -> BinaryForm {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e1: usize, e2: usize) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("x1", e1), ("x2", e2)] {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{name}")?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Renders as a polynomial expression, e.g. `3*x1^2*x2 - 1/2*x2^3`.
impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.order();
        let mut wrote = false;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            wrote = true;
            if d == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write_monomial(f, d - j, j)?;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A bihomogeneous form in `x` and `y`. Entry `(i, j)` multiplies
/// `x1^(xorder-i) x2^i y1^(yorder-j) y2^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiForm {
    xorder: usize,
    yorder: usize,
    coeffs: Vec<Vec<Scalar>>,
}

impl BiForm {
    pub fn xorder(&self) -> usize {
        self.xorder
    }

    pub fn yorder(&self) -> usize {
        self.yorder
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i][j]
    }

    /// Sets `y := x`.
    pub fn restitute(&self) -> BinaryForm {
        let mut out = BinaryForm::zero(self.xorder + self.yorder);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out.coeffs[i + j] += c;
            }
        }
        out
    }

    /// Reads the form as a polynomial in `y` alone; only meaningful when
    /// the `x`-order is zero.
    pub fn in_y(&self) -> Option<BinaryForm> {
        (self.xorder == 0).then(|| BinaryForm {
            coeffs: self.coeffs[0].clone(),
        })
    }
}

/// A 2x2 matrix acting on `(x1, x2)` by substitution. Singular matrices are
/// rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    alpha: Scalar,
    beta: Scalar,
    gamma: Scalar,
    delta: Scalar,
    det: Scalar,
}

impl Mat2 {
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar, delta: Scalar) -> Result<Self> {
        let det = &alpha * &delta - &beta * &gamma;
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Self {
            alpha,
            beta,
            gamma,
            delta,
            det,
        })
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64, delta: i64) -> Result<Self> {
        Self::new(int(alpha), int(beta), int(gamma), int(delta))
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1).expect("nonsingular")
    }

    pub fn entries(&self) -> [&Scalar; 4] {
        [&self.alpha, &self.beta, &self.gamma, &self.delta]
    }

    pub fn det(&self) -> &Scalar {
        &self.det
    }

    pub fn is_unimodular(&self) -> bool {
        self.det.is_one()
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.alpha * &rhs.alpha + &self.beta * &rhs.gamma,
            &self.alpha * &rhs.beta + &self.beta * &rhs.delta,
            &self.gamma * &rhs.alpha + &self.delta * &rhs.gamma,
            &self.gamma * &rhs.beta + &self.delta * &rhs.delta,
        )
        .expect("product of nonsingular matrices is nonsingular")
    }
}
