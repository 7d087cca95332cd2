//! Wire formats.
//!
//! Series: `{"valdim": m, "kmin": k, "coeffs": [[[re, im], …m], …]}` with one
//! inner array per frequency starting at `kmin`. Symbols:
//! `{"rows": r, "cols": c, "kmin": k, "coeffs": [[[[re, im], …c], …r], …]}`.
//! Doubles are written in shortest round-trip form and parsed exactly, so
//! finite values survive a round trip bit for bit.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::series::VecTrigPoly;
use super::symbol::MatSymbol;
use crate::error::{Error, Result};
use crate::CMatrix;

type Pair = [f64; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesJson {
    pub valdim: usize,
    pub kmin: i64,
    pub coeffs: Vec<Vec<Pair>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolJson {
    pub rows: usize,
    pub cols: usize,
    pub kmin: i64,
    pub coeffs: Vec<Vec<Vec<Pair>>>,
}

fn pair(z: &Complex64) -> Pair {
    [z.re, z.im]
}

fn complex(p: &Pair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

impl From<&VecTrigPoly> for SeriesJson {
    fn from(f: &VecTrigPoly) -> Self {
        SeriesJson {
            valdim: f.valdim(),
            kmin: f.kmin(),
            coeffs: f
                .iter()
                .map(|(_, c)| c.iter().map(pair).collect())
                .collect(),
        }
    }
}

impl TryFrom<SeriesJson> for VecTrigPoly {
    type Error = Error;

    fn try_from(j: SeriesJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| c.iter().map(complex).collect())
            .collect();
        VecTrigPoly::new(j.valdim, j.kmin, coeffs)
    }
}

impl From<&MatSymbol> for SymbolJson {
    fn from(g: &MatSymbol) -> Self {
        SymbolJson {
            rows: g.rows(),
            cols: g.cols(),
            kmin: g.kmin(),
            coeffs: g
                .iter()
                .map(|(_, m)| {
                    (0..m.nrows())
                        .map(|r| (0..m.ncols()).map(|c| pair(&m[(r, c)])).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

impl TryFrom<SymbolJson> for MatSymbol {
    type Error = Error;

    fn try_from(j: SymbolJson) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(j.coeffs.len());
        for m in &j.coeffs {
            if m.len() != j.rows || m.iter().any(|row| row.len() != j.cols) {
                return Err(Error::Dimension(format!(
                    "symbol coefficient is not {}×{}",
                    j.rows, j.cols
                )));
            }
            coeffs.push(CMatrix::from_fn(j.rows, j.cols, |r, c| complex(&m[r][c])));
        }
        MatSymbol::new(j.kmin, coeffs)
    }
}

impl Serialize for VecTrigPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.flat_coeffs().iter().any(|z| !z.is_finite()) {
            return Err(serde::ser::Error::custom("non-finite coefficient"));
        }
        SeriesJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for VecTrigPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SeriesJson::deserialize(d)?;
        VecTrigPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for MatSymbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self
            .iter()
            .flat_map(|(_, m)| m.iter())
            .any(|z| !z.is_finite())
        {
            return Err(serde::ser::Error::custom("non-finite coefficient"));
        }
        SymbolJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MatSymbol {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymbolJson::deserialize(d)?;
        MatSymbol::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl VecTrigPoly {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl MatSymbol {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
