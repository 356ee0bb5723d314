#![allow(dead_code)]

use chudnovsky::galois::{FieldElement, FieldSpec};
use chudnovsky::CompiledInstance;

pub fn coords(f: FieldSpec, bits: &[u32]) -> Vec<FieldElement> {
    bits.iter().map(|&b| f.elem(b).unwrap()).collect()
}

/// Sum of `a^i b^j` terms in the instance field; `None` for a coefficient of 1.
pub fn expr(ci: &CompiledInstance, terms: &[(Option<u64>, u128)]) -> Vec<FieldElement> {
    let ext = ci.field();
    let b = ext.generator();
    let mut acc = ext.zero();
    for &(ae, be) in terms {
        let coeff = ci.base().gen_pow(ae.unwrap_or(0));
        let term = ext.scale(&ext.pow(&b, be).unwrap(), coeff).unwrap();
        acc = ext.add(&acc, &term).unwrap();
    }
    acc.coeffs().to_vec()
}

/// Padded coordinate vector of length `n`.
pub fn padded(f: FieldSpec, n: usize, bits: &[u32]) -> Vec<FieldElement> {
    let mut v = bits.to_vec();
    v.resize(n, 0);
    coords(f, &v)
}

pub struct Vector {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
    pub z: Vec<u32>,
    /// The product as printed, `(a exponent, b exponent)` per term.
    pub terms: Vec<(Option<u64>, u128)>,
}

fn v(x: &[u32], y: &[u32], z: &[u32], terms: &[(Option<u64>, u128)]) -> Vector {
    Vector { x: x.to_vec(), y: y.to_vec(), z: z.to_vec(), terms: terms.to_vec() }
}

/// Published test vectors, coordinates frozen from the schoolbook oracle.
pub fn vectors(name: &str) -> Vec<Vector> {
    match name {
        "f16_13" => vec![
            v(&[2, 1], &[1, 2, 2], &[2, 5, 6, 2], &[(Some(1), 3), (Some(5), 2), (Some(8), 1), (Some(1), 0)]),
            v(&[0, 0, 0, 0, 0, 1], &[1, 0, 0, 4, 1], &[0, 0, 0, 0, 0, 1, 0, 0, 4, 1], &[(None, 9), (Some(2), 8), (None, 5)]),
            v(&[0, 2, 1, 0, 2], &[0, 2, 1, 0, 2], &[0, 0, 4, 0, 1, 0, 0, 0, 4], &[(Some(2), 8), (None, 4), (Some(2), 2)]),
            v(
                &[0, 2, 1, 0, 2, 0, 0, 1, 0, 0, 0, 0, 2],
                &[0, 2, 1, 0, 2],
                &[2, 5, 8, 6, 5, 14, 10, 8, 5, 4, 1, 5, 2],
                &[
                    (Some(1), 12), (Some(8), 11), (None, 10), (Some(2), 9), (Some(8), 8), (Some(3), 7), (Some(9), 6),
                    (Some(11), 5), (Some(8), 4), (Some(5), 3), (Some(3), 2), (Some(8), 1), (Some(1), 0),
                ],
            ),
        ],
        "f4_5" => vec![
            v(&[2, 1], &[1, 2, 2], &[2, 2, 1, 2], &[(Some(1), 3), (None, 2), (Some(1), 1), (Some(1), 0)]),
            v(&[1, 2, 3, 1, 2], &[1, 0, 0, 3, 1], &[2, 0, 3, 0, 1], &[(None, 4), (Some(2), 2), (Some(1), 0)]),
            v(&[0, 2, 1, 0, 2], &[0, 2, 1, 0, 2], &[1, 3, 3, 3], &[(Some(2), 3), (Some(2), 2), (Some(2), 1), (None, 0)]),
        ],
        "f2_5" => vec![
            v(&[1, 1], &[1, 1, 1], &[1, 0, 0, 1], &[(None, 5)]),
            v(&[0, 0, 0, 0, 1], &[0, 0, 1, 1], &[1, 1, 1, 1, 1], &[(None, 20)]),
            v(&[1, 1, 0, 1], &[1, 1, 0, 1], &[1, 1, 1, 0, 1], &[(None, 21)]),
        ],
        _ => unreachable!("unknown instance {name}"),
    }
}
