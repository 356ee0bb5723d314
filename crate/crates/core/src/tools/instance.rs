//! JSON instance files.
//!
//! Polynomials are arrays of base-field values, lowest degree first; each
//! value is an integer whose bit `i` is the coefficient of `w^i`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::ToolError;
use crate::curve::{AffinePlace, CurveModel, FunctionRep, InfinitePlace, Place};
use crate::engine::InstanceSpec;
use crate::galois::{ExtField, FieldSpec, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub field: FieldDef,
    pub curve: CurveDef,
    pub n: usize,
    #[serde(rename = "Q")]
    pub q: QDef,
    pub d1_modulus: Vec<u32>,
    pub d2_modulus: Vec<u32>,
    pub basis: Vec<FunctionDef>,
    pub places: Vec<PlaceDef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDef {
    pub k: u8,
    pub modulus_bits: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDef {
    pub rhs_num: Vec<u32>,
    pub rhs_den: Vec<u32>,
    pub genus: usize,
}

/// The place `Q = (modulus(x), y_den(x) y + y_num(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QDef {
    pub modulus: Vec<u32>,
    pub y_num: Vec<u32>,
    pub y_den: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionDef {
    pub ay: Vec<u32>,
    pub b: Vec<u32>,
    pub den: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlaceKind {
    Affine,
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceDef {
    pub kind: PlaceKind,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue_modulus: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_img: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_img: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch_y0: Option<u32>,
    pub label: String,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, ToolError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Builds the in-memory instance; does not run [`InstanceSpec::validate`].
    pub fn to_spec(&self, name: &str) -> Result<InstanceSpec, ToolError> {
        let base = FieldSpec::new(self.field.k, self.field.modulus_bits)?;
        let poly = |bits: &[u32]| Poly::from_bits(base, bits);
        let curve = CurveModel::new(poly(&self.curve.rhs_num)?, poly(&self.curve.rhs_den)?, self.curve.genus)?;
        let q = AffinePlace::from_ideal(&curve, &poly(&self.q.modulus)?, &poly(&self.q.y_num)?, &poly(&self.q.y_den)?, "Q")?;
        let basis = self
            .basis
            .iter()
            .map(|f| Ok(FunctionRep::new(poly(&f.ay)?, poly(&f.b)?, poly(&f.den)?)?))
            .collect::<Result<Vec<_>, ToolError>>()?;
        let candidates = self
            .places
            .iter()
            .map(|p| place_from_def(&curve, base, p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(InstanceSpec {
            name: name.to_string(),
            curve,
            n: self.n,
            q,
            d1_den: poly(&self.d1_modulus)?,
            d2_den: poly(&self.d2_modulus)?,
            basis,
            candidates,
        })
    }
}

fn place_from_def(curve: &CurveModel, base: FieldSpec, p: &PlaceDef) -> Result<Place, ToolError> {
    let missing = |field: &'static str| ToolError::MissingField { label: p.label.clone(), field };
    match p.kind {
        PlaceKind::Infinite => {
            if p.degree != 1 {
                return Err(ToolError::PlaceDegree { label: p.label.clone(), declared: p.degree, actual: 1 });
            }
            let branch = p.branch_y0.ok_or_else(|| missing("branch_y0"))?;
            Ok(Place::Infinite(InfinitePlace::new(curve, branch, &p.label)?))
        }
        PlaceKind::Affine => {
            let modulus = p.residue_modulus.as_ref().ok_or_else(|| missing("residue_modulus"))?;
            let residue = ExtField::new(Poly::from_bits(base, modulus)?)?;
            if residue.degree() != p.degree {
                return Err(ToolError::PlaceDegree { label: p.label.clone(), declared: p.degree, actual: residue.degree() });
            }
            let x = residue.from_bits(p.x_img.as_ref().ok_or_else(|| missing("x_img"))?)?;
            let y = residue.from_bits(p.y_img.as_ref().ok_or_else(|| missing("y_img"))?)?;
            Ok(Place::Affine(AffinePlace::new(curve, residue, x, y, &p.label)?))
        }
    }
}

/// Reads, builds and validates an instance file.
pub fn load_instance(path: impl AsRef<Path>) -> Result<InstanceSpec, ToolError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| ToolError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let name = path.file_stem().map_or("instance".into(), |s| s.to_string_lossy().into_owned());
    parse_instance(&text, &name)
}

/// Parses, builds and validates instance JSON.
pub fn parse_instance(text: &str, name: &str) -> Result<InstanceSpec, ToolError> {
    let spec = InstanceFile::parse(text)?.to_spec(name)?;
    spec.validate()?;
    Ok(spec)
}

/// The three instances shipped with the crate.
pub mod bundled {
    use super::*;

    pub const F16_13_JSON: &str = include_str!("../../instances/f16_13.json");
    pub const F4_5_JSON: &str = include_str!("../../instances/f4_5.json");
    pub const F2_5_JSON: &str = include_str!("../../instances/f2_5.json");

    pub const NAMES: [&str; 3] = ["f16_13", "f4_5", "f2_5"];

    pub fn json(name: &str) -> Option<&'static str> {
        match name {
            "f16_13" => Some(F16_13_JSON),
            "f4_5" => Some(F4_5_JSON),
            "f2_5" => Some(F2_5_JSON),
            _ => None,
        }
    }

    /// `F_{16^13}` on `y^2 + y = x^5`.
    pub fn f16_13() -> InstanceSpec {
        parse_instance(F16_13_JSON, "f16_13").expect("bundled instance is valid")
    }

    /// `F_{4^5}` on `y^2 + y = x/(x^3+x+1)`.
    pub fn f4_5() -> InstanceSpec {
        parse_instance(F4_5_JSON, "f4_5").expect("bundled instance is valid")
    }

    /// `F_{2^5}` on `y^2 + y = x/(x^3+x+1)`.
    pub fn f2_5() -> InstanceSpec {
        parse_instance(F2_5_JSON, "f2_5").expect("bundled instance is valid")
    }

    pub fn all() -> Vec<InstanceSpec> {
        vec![f16_13(), f4_5(), f2_5()]
    }
}
