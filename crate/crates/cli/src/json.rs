//! JSON encodings. Rationals are strings, `"p"` or `"p/q"`.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};
use wcomb_core::scalar::{format_scalar, Scalar};
use wcomb_core::{BinaryForm, CombinantVector, ProjectivePoint};

use crate::parse::Convention;

#[derive(Serialize)]
pub struct FormJson {
    pub order: usize,
    pub coeffs: Vec<String>,
}

pub fn form(f: &BinaryForm, conv: Convention) -> FormJson {
    let values = match conv {
        Convention::Raw => f.coeffs().to_vec(),
        Convention::Binomial => f.to_binomial(),
    };
    FormJson {
        order: f.order(),
        coeffs: values.iter().map(format_scalar).collect(),
    }
}

pub fn forms(fs: &[BinaryForm], conv: Convention) -> Vec<FormJson> {
    fs.iter().map(|f| form(f, conv)).collect()
}

pub fn scalar(x: &Scalar) -> String {
    format_scalar(x)
}

#[derive(Serialize)]
pub struct FamilyJson {
    pub r: usize,
    pub d: usize,
    #[serde(serialize_with = "string_keys")]
    pub components: BTreeMap<usize, FormJson>,
}

// keys as strings, in numeric order
fn string_keys<S: Serializer>(map: &BTreeMap<usize, FormJson>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(map.iter().map(|(q, f)| (q.to_string(), f)))
}

pub fn family(c: &CombinantVector, conv: Convention) -> FamilyJson {
    FamilyJson {
        r: c.r(),
        d: c.d(),
        components: c
            .components()
            .iter()
            .map(|(&q, f)| (q, form(f, conv)))
            .collect(),
    }
}

#[derive(Serialize)]
pub struct PointJson {
    pub r: usize,
    pub d: usize,
    pub point: Vec<String>,
    pub family: FamilyJson,
}

pub fn point(p: &ProjectivePoint, conv: Convention) -> PointJson {
    PointJson {
        r: p.r(),
        d: p.d(),
        point: p.vector().iter().map(|x| x.to_string()).collect(),
        family: family(&p.to_combinants(), conv),
    }
}
