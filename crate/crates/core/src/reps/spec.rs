//! Named-or-explicit representation specifications, the JSON form consumed
//! by the CLI: `{"name": "eta1_prime", "n": 4, "params": {"v": "t"}}` or
//! `{"n": 3, "images": {"s1": <matrix>, ...}}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{
    eta1, eta1_prime, eta2, eta2_prime, from_images, upsilon, Eta1PrimeParams, Eta2PrimeParams,
    Representation, UpsilonParams,
};
use crate::error::{Error, Result};
use crate::linalg::MatrixJson;
use crate::ring::{GaussianRational, LaurentPoly, Ring};
use crate::words::{Generator, Mode};

/// A representation over one of the two scalar rings.
#[derive(Debug, Clone)]
pub enum AnyRepresentation {
    Laurent(Representation<LaurentPoly>),
    Gaussian(Representation<GaussianRational>),
}

impl AnyRepresentation {
    pub fn n(&self) -> usize {
        match self {
            AnyRepresentation::Laurent(r) => r.n(),
            AnyRepresentation::Gaussian(r) => r.n(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepSpecJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<BTreeMap<String, MatrixJson>>,
}

impl RepSpecJson {
    fn param(&self, key: &str) -> Result<&str> {
        self.params
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::Constraint(format!("missing parameter `{key}`")))
    }

    fn laurent(&self, key: &str) -> Result<LaurentPoly> {
        LaurentPoly::parse(self.param(key)?)
    }

    fn laurent_or(&self, key: &str, default: &str) -> Result<LaurentPoly> {
        match self.params.get(key) {
            Some(s) => LaurentPoly::parse(s),
            None => LaurentPoly::parse(default),
        }
    }

    fn gaussian(&self, key: &str) -> Result<GaussianRational> {
        GaussianRational::parse(self.param(key)?)
    }

    /// Builds the representation. `mode` selects the monoid/group flavor
    /// where the distinction matters (the η₂′ τ-block inverse).
    pub fn build(&self, mode: Mode) -> Result<AnyRepresentation> {
        if let Some(images) = &self.images {
            return build_explicit(self.n, images);
        }
        let name = self
            .name
            .as_deref()
            .ok_or_else(|| Error::Constraint("spec needs either `name` or `images`".into()))?;
        match name {
            "eta1" => Ok(AnyRepresentation::Laurent(eta1(self.n)?)),
            "eta2" => Ok(AnyRepresentation::Laurent(eta2(self.n, &self.laurent("f")?)?)),
            "eta1p" | "eta1_prime" => {
                let params = Eta1PrimeParams::new(self.laurent("v")?)?;
                Ok(AnyRepresentation::Laurent(eta1_prime(self.n, &params)?))
            }
            "eta2p" | "eta2_prime" => {
                let params = Eta2PrimeParams::new(
                    self.laurent("f")?,
                    self.laurent_or("w", "0")?,
                    self.laurent_or("y", "0")?,
                    self.laurent("v")?,
                )?;
                Ok(AnyRepresentation::Laurent(eta2_prime(self.n, &params, mode)?))
            }
            "upsilon" => {
                let family: u8 = self
                    .param("family")?
                    .parse()
                    .map_err(|_| Error::Constraint("family must be 1..=6".into()))?;
                let params = match family {
                    1 => UpsilonParams::Family1 {
                        b: self.gaussian("b")?,
                        x: self.gaussian("x")?,
                        y: self.gaussian("y")?,
                        v: self.gaussian("v")?,
                    },
                    2 => UpsilonParams::Family2 {
                        a: self.gaussian("a")?,
                        b: self.gaussian("b")?,
                        c: self.gaussian("c")?,
                        v: self.gaussian("v")?,
                    },
                    3 => UpsilonParams::Family3 {
                        a: self.gaussian("a")?,
                        b: self.gaussian("b")?,
                        c: self.gaussian("c")?,
                        v: self.gaussian("v")?,
                    },
                    4 => UpsilonParams::Family4 { v: self.gaussian("v")? },
                    5 => UpsilonParams::Family5 { v: self.gaussian("v")? },
                    6 => UpsilonParams::Family6,
                    _ => return Err(Error::Constraint("family must be 1..=6".into())),
                };
                Ok(AnyRepresentation::Gaussian(upsilon(self.n, &params)?))
            }
            other => Err(Error::Constraint(format!("unknown representation `{other}`"))),
        }
    }
}

fn build_explicit(n: usize, images: &BTreeMap<String, MatrixJson>) -> Result<AnyRepresentation> {
    let mut rings = images.values().map(|m| m.ring.as_str());
    let ring = rings.next().ok_or_else(|| Error::Constraint("empty image map".into()))?;
    if !rings.all(|r| r == ring) {
        return Err(Error::Parse("explicit images mix scalar rings".into()));
    }
    match ring {
        name if name == LaurentPoly::NAME => {
            let map = parse_images::<LaurentPoly>(images)?;
            Ok(AnyRepresentation::Laurent(from_images(n, map)?))
        }
        name if name == GaussianRational::NAME => {
            let map = parse_images::<GaussianRational>(images)?;
            Ok(AnyRepresentation::Gaussian(from_images(n, map)?))
        }
        other => Err(Error::Parse(format!("unknown ring tag `{other}`"))),
    }
}

fn parse_images<R: Ring>(
    images: &BTreeMap<String, MatrixJson>,
) -> Result<BTreeMap<Generator, crate::linalg::Matrix<R>>> {
    images
        .iter()
        .map(|(tok, mj)| Ok((Generator::parse(tok)?, mj.to_matrix::<R>()?)))
        .collect()
}
