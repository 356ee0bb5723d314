//! Fixed-cost bilinear multiplication kernels for residue fields of degree
//! 1, 2 and 4, and the grouped componentwise product built from them.
//!
//! Every kernel is a straight-line program: its bilinear cost is charged
//! in full whatever the operand values. Multiplications by the constant
//! coefficients of a residue modulus are linear and are not charged.

use thiserror::Error;

use crate::galois::{ExtElement, ExtField, FieldElement, GaloisError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error("no kernel for residue degree {0}")]
    UnsupportedDegree(usize),
    #[error("kernel of degree {kernel} applied to a residue field of degree {residue}")]
    DegreeMismatch { kernel: usize, residue: usize },
    #[error("operand vectors have length {got}, plan covers {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Counts products of an `x`-dependent and a `y`-dependent base-field value.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct BilinearCounter {
    pub bilinear_mults: u64,
}

impl BilinearCounter {
    pub fn new() -> Self {
        Self::default()
    }

    fn mul(&mut self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.bilinear_mults += 1;
        a * b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kernel {
    Direct,
    Karatsuba2,
    Karatsuba4,
}

impl Kernel {
    pub fn for_degree(d: usize) -> Result<Self, KernelError> {
        match d {
            1 => Ok(Kernel::Direct),
            2 => Ok(Kernel::Karatsuba2),
            4 => Ok(Kernel::Karatsuba4),
            _ => Err(KernelError::UnsupportedDegree(d)),
        }
    }

    pub fn degree(self) -> usize {
        match self {
            Kernel::Direct => 1,
            Kernel::Karatsuba2 => 2,
            Kernel::Karatsuba4 => 4,
        }
    }

    /// Bilinear cost `mu(d)`.
    pub fn cost(self) -> u64 {
        match self {
            Kernel::Direct => 1,
            Kernel::Karatsuba2 => 3,
            Kernel::Karatsuba4 => 9,
        }
    }
}

/// Largest `mu(i)/i` over supported kernel degrees `i <= r`.
pub fn max_cost_ratio(r: usize) -> f64 {
    [1, 2, 4]
        .into_iter()
        .filter(|&d| d <= r)
        .map(|d| Kernel::for_degree(d).unwrap().cost() as f64 / d as f64)
        .fold(0.0, f64::max)
}

pub fn mul_d1(a: FieldElement, b: FieldElement, c: &mut BilinearCounter) -> FieldElement {
    c.mul(a, b)
}

/// `(a0 + a1 t)(b0 + b1 t)` as an unreduced degree-2 polynomial, three products.
fn kara2(a: [FieldElement; 2], b: [FieldElement; 2], c: &mut BilinearCounter) -> [FieldElement; 3] {
    let lo = c.mul(a[0], b[0]);
    let hi = c.mul(a[1], b[1]);
    let mid = c.mul(a[0] + a[1], b[0] + b[1]) + lo + hi;
    [lo, mid, hi]
}

/// Reduces a product polynomial modulo a monic residue modulus of degree `d`.
fn reduce(ext: &ExtField, mut prod: Vec<FieldElement>) -> ExtElement {
    let d = ext.degree();
    let m = ext.modulus().coeffs();
    for top in (d..prod.len()).rev() {
        let c = prod[top];
        if c.is_zero() {
            continue;
        }
        for j in 0..d {
            let v = c * m[j];
            prod[top - d + j] += v;
        }
        prod[top] = c + c;
    }
    prod.truncate(d);
    ext.from_coords(prod).expect("length d")
}

fn check(ext: &ExtField, kernel: usize, a: &ExtElement, b: &ExtElement) -> Result<(), KernelError> {
    if ext.degree() != kernel {
        return Err(KernelError::DegreeMismatch { kernel, residue: ext.degree() });
    }
    ext.from_coords(a.coeffs().to_vec())?;
    ext.from_coords(b.coeffs().to_vec())?;
    Ok(())
}

pub fn mul_d2(ext: &ExtField, a: &ExtElement, b: &ExtElement, c: &mut BilinearCounter) -> Result<ExtElement, KernelError> {
    check(ext, 2, a, b)?;
    let (a, b) = (a.coeffs(), b.coeffs());
    let p = kara2([a[0], a[1]], [b[0], b[1]], c);
    Ok(reduce(ext, p.to_vec()))
}

/// Two-level Karatsuba: split into halves in `t^2`, three degree-2 products.
pub fn mul_d4(ext: &ExtField, a: &ExtElement, b: &ExtElement, c: &mut BilinearCounter) -> Result<ExtElement, KernelError> {
    check(ext, 4, a, b)?;
    let (a, b) = (a.coeffs(), b.coeffs());
    let (a0, a1) = ([a[0], a[1]], [a[2], a[3]]);
    let (b0, b1) = ([b[0], b[1]], [b[2], b[3]]);
    let lo = kara2(a0, b0, c);
    let hi = kara2(a1, b1, c);
    let mid = kara2([a0[0] + a1[0], a0[1] + a1[1]], [b0[0] + b1[0], b0[1] + b1[1]], c);

    let zero = ext.base().zero();
    let mut prod = vec![zero; 7];
    for i in 0..3 {
        prod[i] += lo[i];
        prod[i + 2] += mid[i] + lo[i] + hi[i];
        prod[i + 4] += hi[i];
    }
    Ok(reduce(ext, prod))
}

/// One contiguous block of rows handled by a single kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelGroup {
    pub offset: usize,
    pub width: usize,
    pub kernel: Kernel,
    pub residue: ExtField,
}

/// Per-place kernel assignment over the rows of the evaluation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelPlan {
    groups: Vec<KernelGroup>,
    len: usize,
}

impl KernelPlan {
    /// Lays out one group per residue field, in order.
    pub fn new(residues: Vec<ExtField>) -> Result<Self, KernelError> {
        let mut groups = Vec::with_capacity(residues.len());
        let mut offset = 0;
        for residue in residues {
            let width = residue.degree();
            let kernel = Kernel::for_degree(width)?;
            groups.push(KernelGroup { offset, width, kernel, residue });
            offset += width;
        }
        Ok(Self { groups, len: offset })
    }

    pub fn groups(&self) -> &[KernelGroup] {
        &self.groups
    }

    /// Total number of coordinates covered.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn total_cost(&self) -> u64 {
        self.groups.iter().map(|g| g.kernel.cost()).sum()
    }

    pub fn max_degree(&self) -> usize {
        self.groups.iter().map(|g| g.width).max().unwrap_or(0)
    }

    /// Componentwise product in `prod_i F_{q^{d_i}}`.
    pub fn hadamard(
        &self,
        u: &[FieldElement],
        v: &[FieldElement],
        c: &mut BilinearCounter,
    ) -> Result<Vec<FieldElement>, KernelError> {
        for got in [u.len(), v.len()] {
            if got != self.len {
                return Err(KernelError::LengthMismatch { expected: self.len, got });
            }
        }
        let mut out = Vec::with_capacity(self.len);
        for g in &self.groups {
            let span = g.offset..g.offset + g.width;
            match g.kernel {
                Kernel::Direct => out.push(mul_d1(u[g.offset], v[g.offset], c)),
                Kernel::Karatsuba2 | Kernel::Karatsuba4 => {
                    let a = g.residue.from_coords(u[span.clone()].to_vec())?;
                    let b = g.residue.from_coords(v[span].to_vec())?;
                    let r = if g.kernel == Kernel::Karatsuba2 {
                        mul_d2(&g.residue, &a, &b, c)?
                    } else {
                        mul_d4(&g.residue, &a, &b, c)?
                    };
                    out.extend_from_slice(r.coeffs());
                }
            }
        }
        Ok(out)
    }
}
