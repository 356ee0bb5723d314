//! Binary finite fields `GF(2^k)`, univariate polynomials over them, and
//! extensions `F_q[t]/(m(t))` presented by an irreducible modulus.
//!
//! Base-field elements are bit vectors: bit `i` is the coefficient of `w^i`
//! where `w` is a root of the field's defining polynomial. Extension elements
//! are coordinate vectors in the power basis `1, t, ..., t^{d-1}`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus {modulus:#b} is not an irreducible polynomial of degree {k} over F_2")]
    InvalidFieldModulus { k: u8, modulus: u32 },
    #[error("value {value} is out of range for GF(2^{k})")]
    OutOfRange { value: u32, k: u8 },
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("extension modulus is not irreducible")]
    ReducibleModulus,
    #[error("expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Degree of a bit polynomial; `None` for zero.
fn bit_degree(p: u32) -> Option<u32> {
    (p != 0).then(|| 31 - p.leading_zeros())
}

fn clmul_reduce(mut a: u32, mut b: u32, k: u8, modulus: u32) -> u32 {
    let mut r = 0u32;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if (a >> k) & 1 == 1 {
            a ^= modulus;
        }
    }
    r
}

fn bit_poly_rem(mut a: u32, m: u32) -> u32 {
    let dm = bit_degree(m).expect("nonzero modulus");
    while let Some(da) = bit_degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

/// Trial division by every polynomial of degree `1..=k/2`; fine for `k <= 16`.
fn bit_poly_irreducible(p: u32) -> bool {
    let Some(d) = bit_degree(p) else {
        return false;
    };
    if d == 0 {
        return false;
    }
    for cand in 2u32..(1 << (d / 2 + 1)) {
        if bit_degree(cand).unwrap() >= 1 && bit_poly_rem(p, cand) == 0 {
            return false;
        }
    }
    true
}

/// A binary field `GF(2^k) = F_2[w]/(modulus(w))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    k: u8,
    modulus: u32,
}

impl FieldSpec {
    pub const F2: FieldSpec = FieldSpec { k: 1, modulus: 0b11 };
    /// `F_2[w]/(w^2 + w + 1)`.
    pub const F4: FieldSpec = FieldSpec { k: 2, modulus: 0b111 };
    /// `F_2[w]/(w^4 + w + 1)`.
    pub const F16: FieldSpec = FieldSpec { k: 4, modulus: 0b10011 };

    pub fn new(k: u8, modulus: u32) -> Result<Self, GaloisError> {
        let ok = (1..=16).contains(&k)
            && bit_degree(modulus) == Some(u32::from(k))
            && bit_poly_irreducible(modulus);
        if !ok {
            return Err(GaloisError::InvalidFieldModulus { k, modulus });
        }
        Ok(Self { k, modulus })
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements `q = 2^k`.
    pub fn order(&self) -> u32 {
        1 << self.k
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { spec: *self, bits: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { spec: *self, bits: 1 }
    }

    /// The class of `w`; a primitive element for every bundled field.
    pub fn generator(&self) -> FieldElement {
        if self.k == 1 {
            self.one()
        } else {
            FieldElement { spec: *self, bits: 0b10 }
        }
    }

    pub fn elem(&self, bits: u32) -> Result<FieldElement, GaloisError> {
        if bits >> self.k != 0 {
            return Err(GaloisError::OutOfRange { value: bits, k: self.k });
        }
        Ok(FieldElement { spec: *self, bits: bits as u16 })
    }

    /// `generator^e`.
    pub fn gen_pow(&self, e: u64) -> FieldElement {
        self.generator().pow(e)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |b| FieldElement { spec: *self, bits: b as u16 })
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})[{:#b}]", self.k, self.modulus)
    }
}

/// An element of a [`FieldSpec`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    bits: u16,
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn bits(&self) -> u32 {
        u32::from(self.bits)
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    pub fn try_add(self, rhs: Self) -> Result<Self, GaloisError> {
        if self.spec != rhs.spec {
            return Err(GaloisError::FieldMismatch);
        }
        Ok(Self { spec: self.spec, bits: self.bits ^ rhs.bits })
    }

    pub fn try_mul(self, rhs: Self) -> Result<Self, GaloisError> {
        if self.spec != rhs.spec {
            return Err(GaloisError::FieldMismatch);
        }
        let bits = clmul_reduce(self.bits(), rhs.bits(), self.spec.k, self.spec.modulus);
        Ok(Self { spec: self.spec, bits: bits as u16 })
    }

    /// Inverse by the extended Euclidean algorithm on bit polynomials.
    pub fn inv(self) -> Result<Self, GaloisError> {
        if self.is_zero() {
            return Err(GaloisError::DivisionByZero);
        }
        let (mut u, mut v) = (self.bits(), self.spec.modulus);
        let (mut g1, mut g2) = (1u32, 0u32);
        while u != 1 {
            let du = bit_degree(u).unwrap();
            let dv = bit_degree(v).unwrap();
            if du < dv {
                std::mem::swap(&mut u, &mut v);
                std::mem::swap(&mut g1, &mut g2);
                continue;
            }
            let j = du - dv;
            u ^= v << j;
            g1 ^= g2 << j;
        }
        Ok(Self { spec: self.spec, bits: g1 as u16 })
    }

    pub fn square(self) -> Self {
        self * self
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }
}

impl Add for FieldElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.try_add(rhs).expect("field mismatch in addition")
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Mul for FieldElement {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.try_mul(rhs).expect("field mismatch in multiplication")
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

/// Univariate polynomial over a [`FieldSpec`]; `coeffs[j]` multiplies `x^j`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and [`Poly::degree`] returns `None` for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: FieldSpec, coeffs: Vec<FieldElement>) -> Result<Self, GaloisError> {
        if coeffs.iter().any(|c| c.spec != field) {
            return Err(GaloisError::FieldMismatch);
        }
        let mut p = Self { field, coeffs };
        p.trim();
        Ok(p)
    }

    pub fn from_bits(field: FieldSpec, bits: &[u32]) -> Result<Self, GaloisError> {
        let coeffs = bits.iter().map(|&b| field.elem(b)).collect::<Result<Vec<_>, _>>()?;
        Self::new(field, coeffs)
    }

    pub fn zero(field: FieldSpec) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        let mut p = Self { field: c.spec, coeffs: vec![c] };
        p.trim();
        p
    }

    /// `c * x^e`.
    pub fn monomial(c: FieldElement, e: usize) -> Self {
        let mut coeffs = vec![c.spec.zero(); e + 1];
        coeffs[e] = c;
        let mut p = Self { field: c.spec, coeffs };
        p.trim();
        p
    }

    pub fn x(field: FieldSpec) -> Self {
        Self::monomial(field.one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn to_bits(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.bits()).collect()
    }

    pub fn coeff(&self, j: usize) -> FieldElement {
        self.coeffs.get(j).copied().unwrap_or(self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    fn check_field(&self, other: &Self) -> Result<(), GaloisError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GaloisError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GaloisError> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|j| self.coeff(j) + other.coeff(j)).collect();
        Ok(Self::new(self.field, coeffs).expect("same field"))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GaloisError> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new(self.field, out).expect("same field"))
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| a * c).collect();
        Self::new(self.field, coeffs).expect("same field")
    }

    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), GaloisError> {
        self.check_field(divisor)?;
        let dd = divisor.degree().ok_or(GaloisError::DivisionByZero)?;
        let lead_inv = divisor.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let Some(dr) = self.degree() else {
            return Ok((Self::zero(self.field), Self::zero(self.field)));
        };
        if dr < dd {
            return Ok((Self::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); dr - dd + 1];
        for shift in (0..=dr - dd).rev() {
            let c = rem[shift + dd] * lead_inv;
            if c.is_zero() {
                continue;
            }
            quot[shift] = c;
            for (j, &m) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] += c * m;
            }
        }
        Ok((Self::new(self.field, quot)?, Self::new(self.field, rem)?))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, GaloisError> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self, GaloisError> {
        self.check_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.make_monic())
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic (or zero).
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self), GaloisError> {
        self.check_field(other)?;
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.add(&q.mul(&s1)?)?;
            let t = t0.add(&q.mul(&t1)?)?;
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => Ok((r0, s0, t0)),
            Some(l) => {
                let li = l.inv()?;
                Ok((r0.scale(li), s0.scale(li), t0.scale(li)))
            }
        }
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    /// Horner evaluation at an extension element, coefficients lifted into `ext`.
    pub fn eval_ext(&self, ext: &ExtField, z: &ExtElement) -> Result<ExtElement, GaloisError> {
        if self.field != ext.base() {
            return Err(GaloisError::FieldMismatch);
        }
        ext.check(z)?;
        let mut acc = ext.zero();
        for &c in self.coeffs.iter().rev() {
            acc = ext.mul_schoolbook(&acc, z)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Self) -> Result<Self, GaloisError> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(modulus)?;
            }
            base = base.mul(&base)?.rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Rabin's test: `x^{q^d} = x mod p` and `gcd(x^{q^{d/r}} - x, p) = 1`
    /// for every prime `r | d`.
    pub fn is_irreducible(&self) -> Result<bool, GaloisError> {
        if !self.is_monic() {
            return Err(GaloisError::NotMonic);
        }
        let d = self.degree().unwrap();
        if d == 0 {
            return Err(GaloisError::ConstantPolynomial);
        }
        if d == 1 {
            return Ok(true);
        }
        let q = u128::from(self.field.order());
        let x = Self::x(self.field).rem(self)?;
        // frob[j] = x^{q^j} mod p
        let mut frob = Vec::with_capacity(d + 1);
        frob.push(x.clone());
        for j in 1..=d {
            let next = frob[j - 1].pow_mod(q, self)?;
            frob.push(next);
        }
        if frob[d] != x {
            return Ok(false);
        }
        for r in prime_factors(d) {
            let h = frob[d / r].add(&x)?;
            if h.gcd(self)?.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.to_bits())
    }
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `F_q[t]/(m(t))` for a monic irreducible `m` of degree `d`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtField {
    modulus: Poly,
}

/// Coordinates in the power basis of an [`ExtField`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtElement {
    coeffs: Vec<FieldElement>,
}

impl ExtElement {
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn to_bits(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.bits()).collect()
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_bits())
    }
}

impl ExtField {
    pub fn new(modulus: Poly) -> Result<Self, GaloisError> {
        if !modulus.is_irreducible()? {
            return Err(GaloisError::ReducibleModulus);
        }
        Ok(Self { modulus })
    }

    pub fn base(&self) -> FieldSpec {
        self.modulus.field()
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub(crate) fn check(&self, z: &ExtElement) -> Result<(), GaloisError> {
        if z.coeffs.len() != self.degree() {
            return Err(GaloisError::LengthMismatch { expected: self.degree(), got: z.coeffs.len() });
        }
        if z.coeffs.iter().any(|c| c.spec() != self.base()) {
            return Err(GaloisError::FieldMismatch);
        }
        Ok(())
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement { coeffs: vec![self.base().zero(); self.degree()] }
    }

    pub fn one(&self) -> ExtElement {
        self.lift(self.base().one())
    }

    /// The class of `t`.
    pub fn generator(&self) -> ExtElement {
        self.reduce(&Poly::x(self.base())).expect("same field")
    }

    pub fn lift(&self, c: FieldElement) -> ExtElement {
        let mut z = self.zero();
        z.coeffs[0] = c;
        z
    }

    /// Reduces a polynomial in `t` modulo the defining polynomial.
    pub fn reduce(&self, p: &Poly) -> Result<ExtElement, GaloisError> {
        let r = p.rem(&self.modulus)?;
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(self.degree(), self.base().zero());
        Ok(ExtElement { coeffs })
    }

    pub fn from_coords(&self, coeffs: Vec<FieldElement>) -> Result<ExtElement, GaloisError> {
        let z = ExtElement { coeffs };
        self.check(&z)?;
        Ok(z)
    }

    /// Accepts fewer than `d` values and pads with zeros.
    pub fn from_bits(&self, bits: &[u32]) -> Result<ExtElement, GaloisError> {
        if bits.len() > self.degree() {
            return Err(GaloisError::LengthMismatch { expected: self.degree(), got: bits.len() });
        }
        let mut coeffs = bits.iter().map(|&b| self.base().elem(b)).collect::<Result<Vec<_>, _>>()?;
        coeffs.resize(self.degree(), self.base().zero());
        Ok(ExtElement { coeffs })
    }

    pub fn to_coords(&self, z: &ExtElement) -> Vec<FieldElement> {
        z.coeffs.clone()
    }

    pub fn to_poly(&self, z: &ExtElement) -> Poly {
        Poly::new(self.base(), z.coeffs.clone()).expect("checked element")
    }

    pub fn add(&self, a: &ExtElement, b: &ExtElement) -> Result<ExtElement, GaloisError> {
        self.check(a)?;
        self.check(b)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| x + y).collect();
        Ok(ExtElement { coeffs })
    }

    pub fn scale(&self, a: &ExtElement, c: FieldElement) -> Result<ExtElement, GaloisError> {
        self.check(a)?;
        Ok(ExtElement { coeffs: a.coeffs.iter().map(|&x| x * c).collect() })
    }

    /// Schoolbook product followed by reduction; the reference multiplication.
    pub fn mul_schoolbook(&self, a: &ExtElement, b: &ExtElement) -> Result<ExtElement, GaloisError> {
        self.check(a)?;
        self.check(b)?;
        let d = self.degree();
        let mut prod = vec![self.base().zero(); 2 * d - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        self.reduce(&Poly::new(self.base(), prod)?)
    }

    pub fn square(&self, a: &ExtElement) -> Result<ExtElement, GaloisError> {
        self.mul_schoolbook(a, a)
    }

    pub fn pow(&self, a: &ExtElement, mut e: u128) -> Result<ExtElement, GaloisError> {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_schoolbook(&acc, &base)?;
            }
            base = self.square(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Inverse via the extended Euclidean algorithm over `F_q[t]`.
    pub fn inv(&self, a: &ExtElement) -> Result<ExtElement, GaloisError> {
        self.check(a)?;
        if a.is_zero() {
            return Err(GaloisError::DivisionByZero);
        }
        let (g, s, _) = self.to_poly(a).ext_gcd(&self.modulus)?;
        debug_assert_eq!(g.degree(), Some(0));
        self.reduce(&s)
    }

    pub fn div(&self, a: &ExtElement, b: &ExtElement) -> Result<ExtElement, GaloisError> {
        self.mul_schoolbook(a, &self.inv(b)?)
    }

    /// `z^q`, the generator of `Gal(F_{q^d}/F_q)`.
    pub fn frobenius(&self, z: &ExtElement) -> Result<ExtElement, GaloisError> {
        self.pow(z, u128::from(self.base().order()))
    }

    /// `Tr_{F_{q^d}/F_2}(z) = sum over i < k*d of z^{2^i}`, returned in `F_2`.
    pub fn absolute_trace(&self, z: &ExtElement) -> Result<FieldElement, GaloisError> {
        self.check(z)?;
        let steps = usize::from(self.base().k()) * self.degree();
        let mut acc = self.zero();
        let mut w = z.clone();
        for _ in 0..steps {
            acc = self.add(&acc, &w)?;
            w = self.square(&w)?;
        }
        debug_assert!(acc.coeffs[1..].iter().all(|c| c.is_zero()) && acc.coeffs[0].bits() <= 1);
        FieldSpec::F2.elem(acc.coeffs[0].bits())
    }

    /// Degree over `F_q` of the smallest subfield containing all of `zs`.
    pub fn subfield_degree(&self, zs: &[&ExtElement]) -> Result<usize, GaloisError> {
        let d = self.degree();
        for e in (1..=d).filter(|e| d.is_multiple_of(*e)) {
            let mut fixed = true;
            for z in zs {
                let mut w = (*z).clone();
                for _ in 0..e {
                    w = self.frobenius(&w)?;
                }
                if &w != *z {
                    fixed = false;
                    break;
                }
            }
            if fixed {
                return Ok(e);
            }
        }
        Ok(d)
    }
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[t]/{:?}", self.base(), self.modulus)
    }
}
