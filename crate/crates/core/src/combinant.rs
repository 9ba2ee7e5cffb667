//! Wronskian combinants and the differential operator they define.
//!
//! For `r` forms `A_1..A_r` of order `d` the Wronskian combinants `C_q`,
//! `q in {0, 2, 3, .., r}`, are the unique forms of orders `r(d-r+1) - 2q`
//! with
//!
//! ```text
//! W(A_1, .., A_r, F) = sum_q (C_q, F)_(r-q)      for every d-ic F.
//! ```
//!
//! They are computed here by solving that identity as an exact linear system
//! in the unknown coefficients of the `C_q`. A transvectant of monomials is a
//! monomial, so the system splits into small independent blocks: the unknown
//! coefficient `i` of `C_q` only meets equations where the output index `t`
//! and the monomial `F = x1^(d-j) x2^j` satisfy `t - j = i + q - r`.

use std::collections::BTreeMap;

use num::traits::Zero;

use crate::binform::{BinaryForm, Mat2};
use crate::error::{Error, Result};
use crate::grassmann::Subspace;
use crate::linalg::Matrix;
use crate::scalar::{int, sign_pow, Scalar};
use crate::transvect::{monomial_transvectant, transvectant};
use crate::wronskian::{is_dependent, wronskian};

/// Order `r(d-r+1) - 2q` of the slot `q`, or `None` when it is negative.
pub fn component_order(r: usize, d: usize, q: usize) -> Option<usize> {
    (r * (d + 1 - r.min(d + 1))).checked_sub(2 * q)
}

/// The slots `q in {0} u {2..r}` of a combinant family, ascending.
///
/// A slot is present when `(E_q, F)_(r-q)` can be nonzero, i.e. its order
/// is at least `r - q`. For `d > r` this is every `q`; for `d = r` only
/// `q = 0` survives (the other transvectants vanish identically, and so do
/// the corresponding combinants).
pub fn slots(r: usize, d: usize) -> Vec<usize> {
    (0..=r)
        .filter(|&q| q != 1 && component_order(r, d, q).is_some_and(|e| e + q >= r))
        .collect()
}

/// Order of `psi_E(F)`, that is `(r+1)(d-r)`.
pub fn psi_order(r: usize, d: usize) -> usize {
    (r + 1) * (d - r)
}

fn check_shape(r: usize, d: usize) -> Result<()> {
    if r == 0 || r > d {
        return Err(Error::OutOfRange {
            what: "number of forms r",
            value: r,
            min: 1,
            max: d,
        });
    }
    Ok(())
}

/// A family `{E_q}` indexed like the Wronskian combinants of `r` binary
/// `d`-ics. Slot `1` never exists; slots of negative order are absent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombinantVector {
    r: usize,
    d: usize,
    components: BTreeMap<usize, BinaryForm>,
}

impl CombinantVector {
    pub fn new(r: usize, d: usize, components: BTreeMap<usize, BinaryForm>) -> Result<Self> {
        check_shape(r, d)?;
        let expected = slots(r, d);
        if let Some(&q) = components.keys().find(|q| !expected.contains(q)) {
            return Err(Error::InvalidSlot { q, r, d });
        }
        for q in expected {
            let want = component_order(r, d, q).expect("listed slot");
            match components.get(&q) {
                None => return Err(Error::MissingSlot { q }),
                Some(f) if f.order() != want => {
                    return Err(Error::OrderMismatch {
                        expected: want,
                        found: f.order(),
                    })
                }
                Some(_) => {}
            }
        }
        Ok(Self { r, d, components })
    }

    pub fn zero(r: usize, d: usize) -> Result<Self> {
        check_shape(r, d)?;
        let components = slots(r, d)
            .into_iter()
            .map(|q| (q, BinaryForm::zero(component_order(r, d, q).unwrap())))
            .collect();
        Ok(Self { r, d, components })
    }

    /// Splits a concatenated coefficient vector (slots ascending) back into
    /// components.
    pub fn from_concatenated(r: usize, d: usize, values: &[Scalar]) -> Result<Self> {
        check_shape(r, d)?;
        let total: usize = slots(r, d)
            .iter()
            .map(|&q| component_order(r, d, q).unwrap() + 1)
            .sum();
        if values.len() != total {
            return Err(Error::OrderMismatch {
                expected: total,
                found: values.len(),
            });
        }
        let mut rest = values;
        let mut components = BTreeMap::new();
        for q in slots(r, d) {
            let len = component_order(r, d, q).unwrap() + 1;
            let (head, tail) = rest.split_at(len);
            components.insert(q, BinaryForm::new(head.to_vec())?);
            rest = tail;
        }
        Ok(Self { r, d, components })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, q: usize) -> Option<&BinaryForm> {
        self.components.get(&q)
    }

    pub fn components(&self) -> &BTreeMap<usize, BinaryForm> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(BinaryForm::is_zero)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self {
            r: self.r,
            d: self.d,
            components: self
                .components
                .iter()
                .map(|(&q, f)| (q, f.scale(k)))
                .collect(),
        }
    }

    /// Applies the same substitution to every component.
    pub fn substitute(&self, g: &Mat2) -> Self {
        Self {
            r: self.r,
            d: self.d,
            components: self
                .components
                .iter()
                .map(|(&q, f)| (q, f.substitute(g)))
                .collect(),
        }
    }

    /// All coefficients, slots in ascending order.
    pub fn concatenated(&self) -> Vec<Scalar> {
        self.components
            .values()
            .flat_map(|f| f.coeffs().iter().cloned())
            .collect()
    }
}

/// Solves `W(A_1..A_r, F) = sum_q (C_q, F)_(r-q)` for the requested slots.
///
/// Any `q <= r` of nonnegative order may be requested, including `q = 1`.
/// A slot whose transvectant `(C_q, F)_(r-q)` vanishes identically (only
/// possible when `d = r`) is not determined by the identity and is returned
/// as zero. Fails if the system is inconsistent or underdetermined.
pub fn extract_components(
    forms: &[BinaryForm],
    requested: &[usize],
) -> Result<BTreeMap<usize, BinaryForm>> {
    let r = forms.len();
    let d = forms.first().ok_or(Error::EmptyList)?.order();
    check_shape(r, d)?;
    let m = psi_order(r, d);

    let mut orders = BTreeMap::new();
    for &q in requested {
        let e = match component_order(r, d, q) {
            Some(e) if q <= r => e,
            _ => return Err(Error::InvalidSlot { q, r, d }),
        };
        orders.insert(q, e);
    }

    let mut family = forms.to_vec();
    family.push(BinaryForm::zero(d));
    let targets = (0..=d)
        .map(|j| {
            family[r] = BinaryForm::monomial(d, j);
            wronskian(&family)
        })
        .collect::<Result<Vec<_>>>()?;

    let active: Vec<(usize, usize)> = orders
        .iter()
        .map(|(&q, &e)| (q, e))
        .filter(|&(q, e)| r - q <= e)
        .collect();

    let mut solved: BTreeMap<usize, Vec<Scalar>> = orders
        .iter()
        .map(|(&q, &e)| (q, vec![Scalar::zero(); e + 1]))
        .collect();

    // Block w collects the equations (j, t) with t - j = w - r.
    let w_min = r as i64 - d as i64;
    let w_max = (m + r) as i64;
    for w in w_min..=w_max {
        let unknowns: Vec<(usize, usize, usize)> = active
            .iter()
            .filter_map(|&(q, e)| {
                let i = w - q as i64;
                (0..=e as i64).contains(&i).then_some((q, e, i as usize))
            })
            .collect();
        let equations: Vec<(usize, usize)> = (0..=d)
            .filter_map(|j| {
                let t = j as i64 + w - r as i64;
                (0..=m as i64).contains(&t).then_some((j, t as usize))
            })
            .collect();
        let rhs: Vec<Scalar> = equations
            .iter()
            .map(|&(j, t)| targets[j].coeff(t).clone())
            .collect();
        if unknowns.is_empty() {
            if rhs.iter().any(|x| !x.is_zero()) {
                return Err(Error::Unsolvable(format!(
                    "weight block {w} has no unknowns but a nonzero right-hand side"
                )));
            }
            continue;
        }
        let rows = equations
            .iter()
            .map(|&(j, _)| {
                unknowns
                    .iter()
                    .map(|&(q, e, i)| monomial_transvectant(e, i, d, j, r - q))
                    .collect()
            })
            .collect();
        let block = Matrix::from_rows(rows, unknowns.len());
        let (solution, rank) = block.solve(&rhs);
        let solution = solution.ok_or_else(|| {
            Error::Unsolvable(format!("weight block {w} is inconsistent"))
        })?;
        if rank < unknowns.len() {
            return Err(Error::Unsolvable(format!(
                "weight block {w} is underdetermined (rank {rank} < {})",
                unknowns.len()
            )));
        }
        for (&(q, _, i), x) in unknowns.iter().zip(solution) {
            solved.get_mut(&q).expect("requested slot")[i] = x;
        }
    }

    solved
        .into_iter()
        .map(|(q, c)| Ok((q, BinaryForm::new(c)?)))
        .collect()
}

/// The Wronskian combinants of `r` forms of order `d`, `1 <= r <= d`.
///
/// Linearly dependent input gives the zero vector. The result is
/// multilinear and alternating in the forms, so a change of basis by an
/// `r x r` matrix `M` multiplies it by `det M`.
pub fn wronskian_combinants(forms: &[BinaryForm]) -> Result<CombinantVector> {
    let d = forms.first().ok_or(Error::EmptyList)?.order();
    let r = forms.len();
    check_shape(r, d)?;
    if let Some(bad) = forms.iter().find(|f| f.order() != d) {
        return Err(Error::OrderMismatch {
            expected: d,
            found: bad.order(),
        });
    }
    let components = extract_components(forms, &slots(r, d))?;
    CombinantVector::new(r, d, components)
}

/// `psi_E(F) = sum_q (E_q, F)_(r-q)`, a form of order `(r+1)(d-r)`.
pub fn psi_apply(e: &CombinantVector, f: &BinaryForm) -> Result<BinaryForm> {
    if f.order() != e.d {
        return Err(Error::OrderMismatch {
            expected: e.d,
            found: f.order(),
        });
    }
    let mut out = BinaryForm::zero(psi_order(e.r, e.d));
    for (&q, eq) in &e.components {
        let k = e.r - q;
        if k > eq.order() {
            continue;
        }
        out.add_scaled(&Scalar::from_integer(1.into()), &transvectant(eq, f, k))?;
    }
    Ok(out)
}

/// Matrix of a linear map between coefficient spaces of forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub domain_order: usize,
    pub codomain_order: usize,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn apply(&self, f: &BinaryForm) -> Result<BinaryForm> {
        if f.order() != self.domain_order {
            return Err(Error::OrderMismatch {
                expected: self.domain_order,
                found: f.order(),
            });
        }
        BinaryForm::new(self.matrix.mul_vec(f.coeffs()))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Kernel basis in reduced row echelon form.
    pub fn kernel(&self) -> Matrix {
        self.matrix.kernel()
    }

    pub fn kernel_forms(&self) -> Vec<BinaryForm> {
        let k = self.kernel();
        (0..k.rows())
            .map(|i| BinaryForm::new(k.row(i).to_vec()).expect("nonempty row"))
            .collect()
    }
}

/// Matrix of `psi_E`; column `j` holds `psi_E(x1^(d-j) x2^j)`.
pub fn psi_matrix(e: &CombinantVector) -> LinearMap {
    let columns = (0..=e.d)
        .map(|j| {
            psi_apply(e, &BinaryForm::monomial(e.d, j))
                .expect("order matches")
                .into_coeffs()
        })
        .collect();
    let codomain_order = psi_order(e.r, e.d);
    LinearMap {
        domain_order: e.d,
        codomain_order,
        matrix: Matrix::from_columns(columns, codomain_order + 1),
    }
}

/// `Gamma_p(B; A_1..A_r) = sum_i (-1)^(i+1) (B, A_i)_p W(A_1..^A_i..A_r)`.
///
/// For `r = 1` the Wronskian of the empty family is the constant 1.
pub fn gamma(b: &BinaryForm, forms: &[BinaryForm], p: usize) -> Result<BinaryForm> {
    let d = forms.first().ok_or(Error::EmptyList)?.order();
    if let Some(bad) = forms.iter().find(|f| f.order() != d) {
        return Err(Error::OrderMismatch {
            expected: d,
            found: bad.order(),
        });
    }
    let n = b.order();
    if p > d.min(n) {
        return Err(Error::OutOfRange {
            what: "transvectant index p",
            value: p,
            min: 0,
            max: d.min(n),
        });
    }
    let r = forms.len();
    let deleted_order = (r - 1) * (d + 2).saturating_sub(r);
    let mut sum = BinaryForm::zero(n + d - 2 * p + deleted_order);
    for i in 0..r {
        let rest: Vec<BinaryForm> = forms
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != i)
            .map(|(_, f)| f.clone())
            .collect();
        let minor = if rest.is_empty() {
            BinaryForm::one()
        } else {
            wronskian(&rest)?
        };
        let term = transvectant(b, &forms[i], p).multiply(&minor);
        sum.add_scaled(&sign_pow(i), &term)?;
    }
    Ok(sum)
}

/// Outcome of checking the three `Gamma_p` identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeypropReport {
    /// `Gamma_p = 0` for every `0 <= p <= r - 2`.
    pub vanishing: bool,
    /// `Gamma_(r-1) = (-1)^(r-1) B W(A_1..A_r)`.
    pub product: bool,
    /// `Gamma_r = (-1)^(r-1) r (B, W(A_1..A_r))_1`.
    pub jacobian: bool,
}

impl KeypropReport {
    pub fn all(&self) -> bool {
        self.vanishing && self.product && self.jacobian
    }
}

pub fn verify_keyprop(b: &BinaryForm, forms: &[BinaryForm]) -> Result<KeypropReport> {
    let r = forms.len();
    let d = forms.first().ok_or(Error::EmptyList)?.order();
    let bound = d.min(b.order());
    if r > bound {
        return Err(Error::OutOfRange {
            what: "number of forms r",
            value: r,
            min: 1,
            max: bound,
        });
    }
    let mut vanishing = true;
    for p in 0..r.saturating_sub(1) {
        vanishing &= gamma(b, forms, p)?.is_zero();
    }
    let w = wronskian(forms)?;
    let sign = sign_pow(r - 1);
    let product = gamma(b, forms, r - 1)? == b.multiply(&w).scale(&sign);
    let jacobian =
        gamma(b, forms, r)? == transvectant(b, &w, 1).scale(&(sign * int(r as i64)));
    Ok(KeypropReport {
        vanishing,
        product,
        jacobian,
    })
}

/// A subspace together with the scalar relating its combinants to a given
/// family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recovery {
    pub subspace: Subspace,
    pub k: Scalar,
}

/// Recovers `Lambda` and `k` with `E = k C(Lambda)` from the polynomial
/// solutions of `psi_E(F) = 0`.
///
/// `C(Lambda)` is taken with respect to the canonical basis of `Lambda`
/// (see [`Subspace::combinants`]).
pub fn recover_subspace(e: &CombinantVector) -> Result<Recovery> {
    if e.is_zero() {
        return Err(Error::ZeroCombinants);
    }
    let kernel = psi_matrix(e).kernel_forms();
    if kernel.len() != e.r {
        return Err(Error::NotInImage {
            kernel_dim: kernel.len(),
            r: e.r,
        });
    }
    let subspace = Subspace::new(&kernel)?;
    let c = subspace.combinants()?;
    let (e0, c0) = (e.get(0).expect("slot 0"), c.get(0).expect("slot 0"));
    let idx = c0
        .coeffs()
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::Inconsistent("Wronskian of a basis vanished".into()))?;
    let k = e0.coeff(idx) / c0.coeff(idx);
    if k.is_zero() || c.scale(&k) != *e {
        return Err(Error::Inconsistent(
            "combinant family is not proportional to the recovered one".into(),
        ));
    }
    Ok(Recovery { subspace, k })
}

/// Exact coefficients of a target in terms of candidate forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpression {
    pub coefficients: Vec<Scalar>,
    /// Whether the candidates are linearly independent; if not, the free
    /// coordinates are set to zero.
    pub independent: bool,
}

pub fn express_in_basis(
    target: &BinaryForm,
    candidates: &[BinaryForm],
) -> Result<BasisExpression> {
    let n = target.order();
    if candidates.is_empty() {
        return Err(Error::EmptyList);
    }
    if let Some(bad) = candidates.iter().find(|f| f.order() != n) {
        return Err(Error::OrderMismatch {
            expected: n,
            found: bad.order(),
        });
    }
    let columns = candidates.iter().map(|f| f.coeffs().to_vec()).collect();
    let (solution, _) = Matrix::from_columns(columns, n + 1).solve(target.coeffs());
    Ok(BasisExpression {
        coefficients: solution.ok_or(Error::OutsideSpan)?,
        independent: !is_dependent(candidates)?,
    })
}
