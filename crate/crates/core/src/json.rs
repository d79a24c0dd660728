//! Wire formats.
//!
//! Exact values never pass through floating point: integers are
//! emitted as arbitrary-precision JSON integer literals and rationals
//! as `[num, den]` pairs. Elements carry their ring tag and a sparse
//! `{"elementIndex": coefficient}` map — plain integers for `Int`,
//! `[num, den]` for `Rat`, `[re_num, re_den, im_num, im_den]` for
//! `GaussRat`. The float ring is a computation-only ring and has no
//! wire form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::algebra::{AlgElem, AlgMat};
use crate::dynamics::{Decision, ExpansivityReport, Route, Witness};
use crate::invertibility::RightInvertibilityWitness;
use crate::modules::{ModulePresentation, TorusPoint};
use crate::scalar::{Ring, Scalar};
use crate::semigroup::{FiniteSemigroup, LeftCover};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonError(pub String);

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for JsonError {}

fn err(msg: impl Into<String>) -> JsonError {
    JsonError(msg.into())
}

pub fn bigint_to_number(v: &BigInt) -> Number {
    Number::from_string_unchecked(v.to_string())
}

pub fn number_to_bigint(n: &Number) -> Result<BigInt, JsonError> {
    BigInt::from_str(n.as_str()).map_err(|_| err(format!("not an integer: {n}")))
}

fn value_to_bigint(v: &Value) -> Result<BigInt, JsonError> {
    match v {
        Value::Number(n) => number_to_bigint(n),
        _ => Err(err(format!("expected an integer, found {v}"))),
    }
}

/// A rational carried as `[num, den]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalValue(pub BigRational);

impl Serialize for RationalValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pair = vec![
            Value::Number(bigint_to_number(self.0.numer())),
            Value::Number(bigint_to_number(self.0.denom())),
        ];
        pair.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalValue {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let values = Vec::<Value>::deserialize(deserializer)?;
        rational_from_values(&values).map(RationalValue).map_err(serde::de::Error::custom)
    }
}

fn rational_from_values(values: &[Value]) -> Result<BigRational, JsonError> {
    if values.len() != 2 {
        return Err(err("a rational is a [num, den] pair"));
    }
    let num = value_to_bigint(&values[0])?;
    let den = value_to_bigint(&values[1])?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// An integer carried as a bare JSON integer literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntValue(pub BigInt);

impl Serialize for IntValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Value::Number(bigint_to_number(&self.0)).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntValue {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        value_to_bigint(&v).map(IntValue).map_err(serde::de::Error::custom)
    }
}

/// Sparse element: ring tag plus `{"index": coefficient}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawElem {
    pub ring: Ring,
    pub coeffs: BTreeMap<String, Value>,
}

impl RawElem {
    pub fn from_elem(e: &AlgElem) -> Result<RawElem, JsonError> {
        let mut coeffs = BTreeMap::new();
        for (s, c) in e.support() {
            let value = match c {
                Scalar::Int(v) => Value::Number(bigint_to_number(v)),
                Scalar::Rat(v) => Value::Array(vec![
                    Value::Number(bigint_to_number(v.numer())),
                    Value::Number(bigint_to_number(v.denom())),
                ]),
                Scalar::Gauss(re, im) => Value::Array(vec![
                    Value::Number(bigint_to_number(re.numer())),
                    Value::Number(bigint_to_number(re.denom())),
                    Value::Number(bigint_to_number(im.numer())),
                    Value::Number(bigint_to_number(im.denom())),
                ]),
                Scalar::Cplx(_) => {
                    return Err(err("the float ring has no wire form"));
                }
            };
            coeffs.insert(s.to_string(), value);
        }
        Ok(RawElem { ring: e.ring(), coeffs })
    }

    pub fn bind(&self, sg: &Arc<FiniteSemigroup>) -> Result<AlgElem, JsonError> {
        let mut entries = Vec::with_capacity(self.coeffs.len());
        for (key, value) in &self.coeffs {
            let index: usize =
                key.parse().map_err(|_| err(format!("bad element index {key:?}")))?;
            if index >= sg.size() {
                return Err(err(format!(
                    "element index {index} out of range for size {}",
                    sg.size()
                )));
            }
            let scalar = match self.ring {
                Ring::Int => match value {
                    Value::Array(parts) => {
                        let r = rational_from_values(parts)?;
                        if !r.is_integer() {
                            return Err(err(format!("non-integer Int coefficient {r}")));
                        }
                        Scalar::Int(r.to_integer())
                    }
                    _ => Scalar::Int(value_to_bigint(value)?),
                },
                Ring::Rat => match value {
                    Value::Array(parts) => Scalar::Rat(rational_from_values(parts)?),
                    _ => return Err(err("Rat coefficients are [num, den] pairs")),
                },
                Ring::GaussRat => match value {
                    Value::Array(parts) if parts.len() == 4 => {
                        let re = rational_from_values(&parts[0..2])?;
                        let im = rational_from_values(&parts[2..4])?;
                        Scalar::Gauss(re, im)
                    }
                    _ => {
                        return Err(err(
                            "GaussRat coefficients are [re_num, re_den, im_num, im_den]",
                        ))
                    }
                },
                Ring::Float64Complex => {
                    return Err(err("the float ring has no wire form"));
                }
            };
            entries.push((index, scalar));
        }
        Ok(AlgElem::from_coeffs(sg.clone(), self.ring, entries))
    }
}

/// `{"rows": n, "cols": k, "entries": [[elem, ...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawMat {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<RawElem>>,
}

impl RawMat {
    pub fn from_mat(m: &AlgMat) -> Result<RawMat, JsonError> {
        let entries = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| RawElem::from_elem(m.entry(i, j))).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Ok(RawMat { rows: m.rows(), cols: m.cols(), entries })
    }

    pub fn bind(&self, sg: &Arc<FiniteSemigroup>) -> Result<AlgMat, JsonError> {
        if self.rows == 0 || self.cols == 0 {
            return Err(err("matrices must be non-empty"));
        }
        if self.entries.len() != self.rows
            || self.entries.iter().any(|row| row.len() != self.cols)
        {
            return Err(err("entry grid does not match rows x cols"));
        }
        let mut flat = Vec::with_capacity(self.rows * self.cols);
        for row in &self.entries {
            for raw in row {
                let e = raw.bind(sg)?;
                if e.ring() != self.entries[0][0].ring {
                    return Err(err("matrix entries must share one ring"));
                }
                flat.push(e);
            }
        }
        Ok(AlgMat::from_entries(self.rows, self.cols, flat))
    }
}

/// `{"coords": [[num, den], ...]}` in the documented flattening.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawPoint {
    pub coords: Vec<RationalValue>,
}

impl RawPoint {
    pub fn from_point(p: &TorusPoint) -> RawPoint {
        RawPoint { coords: p.coords().iter().cloned().map(RationalValue).collect() }
    }

    pub fn bind(&self, n: usize, m: usize) -> Result<TorusPoint, JsonError> {
        if self.coords.len() != n * m {
            return Err(err(format!(
                "expected {} coordinates, found {}",
                n * m,
                self.coords.len()
            )));
        }
        Ok(TorusPoint::new(n, m, self.coords.iter().map(|r| r.0.clone()).collect()))
    }
}

/// `(S, n, k, A)` as a document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub semigroup: FiniteSemigroup,
    pub n: usize,
    pub k: usize,
    #[serde(rename = "A")]
    pub matrix: RawMat,
}

impl PresentationDoc {
    pub fn from_presentation(p: &ModulePresentation) -> Result<PresentationDoc, JsonError> {
        Ok(PresentationDoc {
            semigroup: (**p.semigroup()).clone(),
            n: p.ambient_rank(),
            k: p.generator_count(),
            matrix: RawMat::from_mat(p.matrix())?,
        })
    }

    pub fn bind(&self) -> Result<ModulePresentation, JsonError> {
        if self.matrix.rows != self.n || self.matrix.cols != self.k {
            return Err(err("matrix shape disagrees with (n, k)"));
        }
        let sg = self.semigroup.clone().into_shared();
        let mat = self.matrix.bind(&sg)?;
        if mat.ring() != Ring::Int {
            return Err(err("presentations are integral"));
        }
        Ok(ModulePresentation::new(mat))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessDoc {
    AnnihilatorFunctional { coords: Vec<RationalValue> },
    SeparationPair { x: RawPoint, y: RawPoint },
}

impl WitnessDoc {
    pub fn from_witness(w: &Witness) -> WitnessDoc {
        match w {
            Witness::AnnihilatorFunctional(coords) => WitnessDoc::AnnihilatorFunctional {
                coords: coords.iter().cloned().map(RationalValue).collect(),
            },
            Witness::SeparationPair { x, y } => WitnessDoc::SeparationPair {
                x: RawPoint::from_point(x),
                y: RawPoint::from_point(y),
            },
        }
    }

    pub fn bind(&self, n: usize, m: usize) -> Result<Witness, JsonError> {
        Ok(match self {
            WitnessDoc::AnnihilatorFunctional { coords } => {
                if coords.len() != n * m {
                    return Err(err("functional has the wrong length"));
                }
                Witness::AnnihilatorFunctional(coords.iter().map(|r| r.0.clone()).collect())
            }
            WitnessDoc::SeparationPair { x, y } => {
                Witness::SeparationPair { x: x.bind(n, m)?, y: y.bind(n, m)? }
            }
        })
    }
}

/// Expansivity report document; all rationals `[num, den]`, witnesses
/// verbatim so third parties can recheck the certificates.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDoc {
    pub decision: Decision,
    pub route: Route,
    pub cover: Option<LeftCover>,
    pub annihilator_trivial: bool,
    pub optimal_constant: Option<RationalValue>,
    pub theoretical_bound: Option<RationalValue>,
    pub witness: Option<WitnessDoc>,
    pub invariant_factors: Vec<IntValue>,
    pub free_rank: usize,
    pub dual_size: Option<IntValue>,
}

impl ReportDoc {
    pub fn from_report(r: &ExpansivityReport) -> ReportDoc {
        ReportDoc {
            decision: r.decision,
            route: r.route,
            cover: r.cover.clone(),
            annihilator_trivial: r.annihilator_trivial,
            optimal_constant: r.optimal_constant.clone().map(RationalValue),
            theoretical_bound: r.theoretical_bound.clone().map(RationalValue),
            witness: r.witness.as_ref().map(WitnessDoc::from_witness),
            invariant_factors: r.invariant_factors.iter().cloned().map(IntValue).collect(),
            free_rank: r.free_rank,
            dual_size: r.dual_size.clone().map(IntValue),
        }
    }

    pub fn bind(&self, n: usize, m: usize) -> Result<ExpansivityReport, JsonError> {
        Ok(ExpansivityReport {
            decision: self.decision,
            route: self.route,
            cover: self.cover.clone(),
            annihilator_trivial: self.annihilator_trivial,
            optimal_constant: self.optimal_constant.clone().map(|r| r.0),
            theoretical_bound: self.theoretical_bound.clone().map(|r| r.0),
            witness: self.witness.as_ref().map(|w| w.bind(n, m)).transpose()?,
            invariant_factors: self.invariant_factors.iter().map(|v| v.0.clone()).collect(),
            free_rank: self.free_rank,
            dual_size: self.dual_size.clone().map(|v| v.0),
        })
    }
}

/// Right-invertibility certificate document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvertibilityWitnessDoc {
    pub b: RawMat,
    pub c: RawMat,
    pub x: RawMat,
    pub m: IntValue,
    pub identity: RawMat,
}

impl InvertibilityWitnessDoc {
    pub fn from_witness(w: &RightInvertibilityWitness) -> Result<Self, JsonError> {
        Ok(InvertibilityWitnessDoc {
            b: RawMat::from_mat(&w.b)?,
            c: RawMat::from_mat(&w.c)?,
            x: RawMat::from_mat(&w.x)?,
            m: IntValue(w.m.clone()),
            identity: RawMat::from_mat(&w.identity)?,
        })
    }

    pub fn bind(
        &self,
        sg: &Arc<FiniteSemigroup>,
    ) -> Result<RightInvertibilityWitness, JsonError> {
        Ok(RightInvertibilityWitness {
            b: self.b.bind(sg)?,
            c: self.c.bind(sg)?,
            x: self.x.bind(sg)?,
            m: self.m.0.clone(),
            identity: self.identity.bind(sg)?,
        })
    }
}
