//! Subspaces of binary forms, the map sending a subspace to the projective
//! class of its Wronskian combinants, and the rank test for its image.

use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Signed, Zero};

use crate::binform::{BinaryForm, Mat2};
use crate::combinant::{
    psi_matrix, recover_subspace, wronskian_combinants, CombinantVector, Recovery,
};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::wronskian::coefficient_matrix;

/// An `r`-dimensional subspace of the binary `d`-ics.
///
/// Equality compares the reduced row echelon form of the coefficient
/// matrix, so two subspaces are equal iff they have the same span.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Vec<BinaryForm>,
    canonical: Matrix,
}

impl Subspace {
    /// Canonicalizes the span of linearly independent forms.
    pub fn new(forms: &[BinaryForm]) -> Result<Self> {
        let coeffs = coefficient_matrix(forms)?;
        let canonical = coeffs.rref();
        if canonical.rows() < forms.len() {
            return Err(Error::DependentForms);
        }
        Ok(Self {
            basis: forms.to_vec(),
            canonical,
        })
    }

    pub fn dim(&self) -> usize {
        self.canonical.rows()
    }

    pub fn order(&self) -> usize {
        self.canonical.cols() - 1
    }

    /// The basis this subspace was built from.
    pub fn basis(&self) -> &[BinaryForm] {
        &self.basis
    }

    pub fn canonical(&self) -> &Matrix {
        &self.canonical
    }

    /// Rows of the canonical matrix as forms.
    pub fn canonical_forms(&self) -> Vec<BinaryForm> {
        self.canonical
            .row_vecs()
            .into_iter()
            .map(|row| BinaryForm::new(row).expect("nonempty row"))
            .collect()
    }

    /// Wronskian combinants of the canonical basis.
    pub fn combinants(&self) -> Result<CombinantVector> {
        wronskian_combinants(&self.canonical_forms())
    }

    pub fn contains(&self, f: &BinaryForm) -> bool {
        if f.order() != self.order() {
            return false;
        }
        let mut forms = self.canonical_forms();
        forms.push(f.clone());
        coefficient_matrix(&forms).expect("orders agree").rank() == self.dim()
    }

    /// The subspace `{ f(g x) : f in self }`.
    pub fn substitute(&self, g: &Mat2) -> Self {
        let moved: Vec<BinaryForm> = self.basis.iter().map(|f| f.substitute(g)).collect();
        Self::new(&moved).expect("substitution by an invertible matrix preserves rank")
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for Subspace {}

pub fn canonicalize(forms: &[BinaryForm]) -> Result<Subspace> {
    Subspace::new(forms)
}

/// A point of the projective space of combinant families, stored as the
/// unique primitive integer vector with positive leading entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    r: usize,
    d: usize,
    vector: Vec<BigInt>,
}

impl ProjectivePoint {
    pub fn from_combinants(c: &CombinantVector) -> Result<Self> {
        let vector = normalize(&c.concatenated()).ok_or(Error::ZeroCombinants)?;
        Ok(Self {
            r: c.r(),
            d: c.d(),
            vector,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vector(&self) -> &[BigInt] {
        &self.vector
    }

    /// The normalized representative as a combinant family.
    pub fn to_combinants(&self) -> CombinantVector {
        let values: Vec<Scalar> = self
            .vector
            .iter()
            .map(|x| Scalar::from_integer(x.clone()))
            .collect();
        CombinantVector::from_concatenated(self.r, self.d, &values)
            .expect("shape recorded at construction")
    }
}

/// Clears denominators, divides by the content and makes the first nonzero
/// entry positive. `None` for the zero vector.
pub fn normalize(values: &[Scalar]) -> Option<Vec<BigInt>> {
    let lead = values.iter().find(|x| !x.is_zero())?;
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = values
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if lead.is_negative() { -BigInt::one() } else { BigInt::one() };
    let scale = gcd * sign;
    Some(ints.into_iter().map(|x| x / &scale).collect())
}

/// The projective class of the Wronskian combinants of a subspace.
pub fn pluecker_point(subspace: &Subspace) -> Result<ProjectivePoint> {
    ProjectivePoint::from_combinants(&subspace.combinants()?)
}

pub fn equal_points(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<bool> {
    if (p.r, p.d) != (q.r, q.d) {
        return Err(Error::ShapeMismatch {
            r1: p.r,
            d1: p.d,
            r2: q.r,
            d2: q.d,
        });
    }
    Ok(p.vector == q.vector)
}

/// Rank test for membership in the image of the combinant map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub rank: usize,
    pub kernel_dim: usize,
    /// `d - r + 1`; the family lies in the image iff `rank <= threshold`.
    pub threshold: usize,
    pub in_image: bool,
    pub recovery: Option<Recovery>,
}

pub fn image_membership(e: &CombinantVector) -> Result<Membership> {
    if e.is_zero() {
        return Err(Error::ZeroCombinants);
    }
    let rank = psi_matrix(e).rank();
    let threshold = e.d() - e.r() + 1;
    let in_image = rank <= threshold;
    let recovery = if in_image {
        Some(recover_subspace(e)?)
    } else {
        None
    };
    Ok(Membership {
        rank,
        kernel_dim: e.d() + 1 - rank,
        threshold,
        in_image,
        recovery,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::transvect::transvectant;

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c).unwrap()
    }

    #[test]
    fn canonical_row_order() {
        let s = Subspace::new(&[BinaryForm::monomial(4, 4), BinaryForm::monomial(4, 0)]).unwrap();
        assert_eq!(s.canonical_forms(), vec![BinaryForm::monomial(4, 0), BinaryForm::monomial(4, 4)]);
    }

    #[test]
    fn basis_independence() {
        let a1 = form(&[1, 2, 0, -1]);
        let a2 = form(&[0, 3, 1, 1]);
        let s = Subspace::new(&[a1.clone(), a2.clone()]).unwrap();
        let t = Subspace::new(&[a1.clone(), a1.add(&a2).unwrap()]).unwrap();
        assert_eq!(s, t);
        assert_eq!(s.canonical(), t.canonical());
        assert!(s.contains(&a1.scale(&int(3)).sub(&a2).unwrap()));
        assert!(!s.contains(&BinaryForm::monomial(3, 3)));
        assert_eq!(Subspace::new(&[a1.clone(), a1.scale(&int(2))]), Err(Error::DependentForms));
    }

    #[test]
    fn pure_powers_point() {
        for d in 3..7 {
            let a = [BinaryForm::monomial(d, 0), BinaryForm::monomial(d, d)];
            let s = Subspace::new(&a).unwrap();
            let c = s.combinants().unwrap();
            let k = ratio(2 - d as i64, 4 * d as i64 - 6);
            assert_eq!(c.get(0).unwrap(), &transvectant(&a[0], &a[1], 1));
            assert_eq!(c.get(2).unwrap(), &transvectant(&a[0], &a[1], 3).scale(&k));
            let p = pluecker_point(&s).unwrap();
            assert_eq!(p, ProjectivePoint::from_combinants(&c.scale(&int(-5))).unwrap());
        }
    }

    #[test]
    fn normalization() {
        let v = vec![int(0), ratio(-2, 3), int(4), ratio(1, 6)];
        let n = normalize(&v).unwrap();
        assert_eq!(n, vec![0, 4, -24, -1].into_iter().map(BigInt::from).collect::<Vec<_>>());
        let again: Vec<Scalar> = n.iter().map(|x| Scalar::from_integer(x.clone())).collect();
        assert_eq!(normalize(&again).unwrap(), n);
        assert_eq!(normalize(&[int(0), int(0)]), None);
    }

    #[test]
    fn points_compare_projectively() {
        let s = Subspace::new(&[form(&[1, 0, 2, 1]), form(&[0, 1, 1, -1])]).unwrap();
        let t = Subspace::new(&[form(&[1, 0, 2, 1]), form(&[0, 1, 1, 0])]).unwrap();
        let c = s.combinants().unwrap();
        let p = pluecker_point(&s).unwrap();
        let p3 = ProjectivePoint::from_combinants(&c.scale(&int(3))).unwrap();
        assert!(equal_points(&p, &p3).unwrap());
        assert!(equal_points(&p, &p).unwrap());
        assert!(!equal_points(&p, &pluecker_point(&t).unwrap()).unwrap());
        let other = pluecker_point(&Subspace::new(&[form(&[1, 0, 0, 0, 1])]).unwrap()).unwrap();
        assert!(matches!(equal_points(&p, &other), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn membership_for_genuine_and_truncated() {
        let s = Subspace::new(&[form(&[1, 0, 2, 1, 0]), form(&[0, 1, 1, -1, 3])]).unwrap();
        let c = s.combinants().unwrap();
        let m = image_membership(&c).unwrap();
        assert!(m.in_image);
        assert_eq!(m.rank, 4 - 2 + 1);
        assert_eq!(m.recovery.unwrap(), Recovery { subspace: s.clone(), k: int(1) });
        // keep C_0, zero out C_2
        let mut comps = c.components().clone();
        comps.insert(2, BinaryForm::zero(comps[&2].order()));
        let truncated = CombinantVector::new(2, 4, comps).unwrap();
        let m = image_membership(&truncated).unwrap();
        assert!(!m.in_image);
        assert!(m.rank > m.threshold);
        assert!(m.recovery.is_none());
    }

    #[test]
    fn point_round_trips_through_recovery() {
        let s = Subspace::new(&[form(&[2, 0, 1, 0, 0, 3]), form(&[0, 1, 0, 1, 1, 0]), form(&[1, 1, 1, 0, 0, 0])]).unwrap();
        let p = pluecker_point(&s).unwrap();
        let rec = recover_subspace(&p.to_combinants()).unwrap();
        assert_eq!(rec.subspace, s);
        assert_eq!(s.combinants().unwrap().scale(&rec.k), p.to_combinants());
    }
}
