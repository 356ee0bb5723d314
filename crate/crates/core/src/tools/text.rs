//! Element text: comma-separated coordinates, constant term first, each a
//! decimal integer whose bits are the base-field coefficients.

use super::ToolError;
use crate::galois::{FieldElement, FieldSpec};

pub fn parse_element(base: FieldSpec, n: usize, text: &str) -> Result<Vec<FieldElement>, ToolError> {
    let coords = text
        .split(',')
        .map(|s| {
            let s = s.trim();
            let v: u32 = s.parse().map_err(|_| ToolError::ElementText(format!("not an integer: {s:?}")))?;
            base.elem(v).map_err(|e| ToolError::ElementText(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != n {
        return Err(ToolError::ElementText(format!("expected {n} coordinates, got {}", coords.len())));
    }
    Ok(coords)
}

pub fn format_element(z: &[FieldElement]) -> String {
    z.iter().map(|c| c.bits().to_string()).collect::<Vec<_>>().join(",")
}
