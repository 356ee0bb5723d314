//! Dense matrices over a binary base field, with multiplication counting.

use thiserror::Error;

use crate::galois::{FieldElement, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("entries belong to a different field")]
    FieldMismatch,
}

/// Row-major `rows x cols` matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

/// Counts base-field products charged to the current step.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct CountingContext {
    pub scalar_mults: u64,
}

impl CountingContext {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Matrix {
    pub fn zeros(spec: FieldSpec, rows: usize, cols: usize) -> Self {
        Self { spec, rows, cols, entries: vec![spec.zero(); rows * cols] }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(spec, n, n);
        for i in 0..n {
            m.set(i, i, spec.one());
        }
        m
    }

    pub fn from_rows(spec: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, got: row.len() });
            }
            if row.iter().any(|e| e.spec() != spec) {
                return Err(LinalgError::FieldMismatch);
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { spec, rows: rows.len(), cols, entries })
    }

    pub fn from_bits(spec: FieldSpec, rows: &[&[u32]]) -> Result<Self, LinalgError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&b| spec.elem(b).map_err(|_| LinalgError::FieldMismatch)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Self::from_rows(spec, rows)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row[dst] += factor * row[src]`.
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: FieldElement) {
        for c in 0..self.cols {
            let v = self.get(src, c) * factor;
            self.entries[dst * self.cols + c] += v;
        }
    }

    fn scale_row(&mut self, r: usize, factor: FieldElement) {
        for c in 0..self.cols {
            self.entries[r * self.cols + c] *= factor;
        }
    }

    /// Reduces in place to reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            self.scale_row(r, inv);
            for i in 0..self.rows {
                let f = self.get(i, c);
                if i != r && !f.is_zero() {
                    self.add_row_multiple(i, r, f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Gauss-Jordan on `[m | I]`.
    pub fn invert(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.spec, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, self.spec.one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(LinalgError::Singular);
        }
        let mut inv = Self::zeros(self.spec, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Ok(inv)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        if self.spec != other.spec {
            return Err(LinalgError::FieldMismatch);
        }
        let mut out = Self::zeros(self.spec, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// The first `k` rows.
    pub fn top_rows(&self, k: usize) -> Result<Matrix, LinalgError> {
        if k > self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, got: k });
        }
        Ok(Self {
            spec: self.spec,
            rows: k,
            cols: self.cols,
            entries: self.entries[..k * self.cols].to_vec(),
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<Matrix, LinalgError> {
        if let Some(&bad) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: bad + 1 });
        }
        let mut out = Self::zeros(self.spec, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.spec)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

fn check_len(m: &Matrix, v: &[FieldElement]) -> Result<(), LinalgError> {
    if v.len() != m.cols {
        return Err(LinalgError::DimensionMismatch { expected: m.cols, got: v.len() });
    }
    if v.iter().any(|e| e.spec() != m.spec) {
        return Err(LinalgError::FieldMismatch);
    }
    Ok(())
}

fn dot_over(m: &Matrix, r: usize, v: &[FieldElement], cols: impl Iterator<Item = usize>) -> FieldElement {
    cols.fold(m.spec.zero(), |acc, c| acc + m.get(r, c) * v[c])
}

/// `m * v`. With `skip_zero`, only nonzero entries of `v` are multiplied and counted.
pub fn mat_vec(
    m: &Matrix,
    v: &[FieldElement],
    ctx: &mut CountingContext,
    skip_zero: bool,
) -> Result<Vec<FieldElement>, LinalgError> {
    check_len(m, v)?;
    let cols: Vec<usize> = (0..m.cols).filter(|&c| !skip_zero || !v[c].is_zero()).collect();
    ctx.scalar_mults += (m.rows * cols.len()) as u64;
    Ok((0..m.rows).map(|r| dot_over(m, r, v, cols.iter().copied())).collect())
}

/// `m * v` restricted to a fixed column support.
///
/// Entries of `v` outside `support` must be zero. Counts `rows * |support|`
/// whatever the values, so the count is a property of the support alone.
pub fn mat_vec_support(
    m: &Matrix,
    v: &[FieldElement],
    support: &[usize],
    ctx: &mut CountingContext,
) -> Result<Vec<FieldElement>, LinalgError> {
    check_len(m, v)?;
    if let Some(&bad) = support.iter().find(|&&c| c >= m.cols) {
        return Err(LinalgError::DimensionMismatch { expected: m.cols, got: bad + 1 });
    }
    debug_assert!((0..m.cols).all(|c| support.contains(&c) || v[c].is_zero()));
    ctx.scalar_mults += (m.rows * support.len()) as u64;
    Ok((0..m.rows).map(|r| dot_over(m, r, v, support.iter().copied())).collect())
}

/// First `rows_needed` components of `m * v`.
pub fn mat_vec_partial(
    m: &Matrix,
    v: &[FieldElement],
    rows_needed: usize,
    ctx: &mut CountingContext,
) -> Result<Vec<FieldElement>, LinalgError> {
    check_len(m, v)?;
    if rows_needed > m.rows {
        return Err(LinalgError::DimensionMismatch { expected: m.rows, got: rows_needed });
    }
    ctx.scalar_mults += (rows_needed * m.cols) as u64;
    Ok((0..rows_needed).map(|r| dot_over(m, r, v, 0..m.cols)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn random_matrix(spec: FieldSpec, rows: usize, cols: usize, bits: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(spec, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let b = bits[(r * cols + c) % bits.len()] % spec.order();
                m.set(r, c, spec.elem(b).unwrap());
            }
        }
        m
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(FieldSpec::F16, 3).rank(), 3);
        assert_eq!(Matrix::zeros(FieldSpec::F4, 2, 2).rank(), 0);
        let m = Matrix::from_bits(FieldSpec::F2, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn invert_examples() {
        let id = Matrix::identity(FieldSpec::F16, 4);
        assert_eq!(id.invert().unwrap(), id);

        let d = Matrix::from_bits(FieldSpec::F4, &[&[2, 0], &[0, 3]]).unwrap();
        let di = Matrix::from_bits(FieldSpec::F4, &[&[3, 0], &[0, 2]]).unwrap();
        assert_eq!(d.invert().unwrap(), di);

        let u = Matrix::from_bits(FieldSpec::F2, &[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(u.invert().unwrap(), u);
        assert_eq!(u.mul(&u).unwrap(), Matrix::identity(FieldSpec::F2, 2));

        let s = Matrix::from_bits(FieldSpec::F2, &[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(s.invert(), Err(LinalgError::Singular));
    }

    #[test]
    fn mat_vec_counts() {
        let f = FieldSpec::F16;
        let id = Matrix::identity(f, 3);
        let v: Vec<_> = [3, 0, 7].iter().map(|&b| f.elem(b).unwrap()).collect();
        let mut ctx = CountingContext::new();
        assert_eq!(mat_vec(&id, &v, &mut ctx, false).unwrap(), v);
        assert_eq!(ctx.scalar_mults, 9);

        let mut ctx = CountingContext::new();
        let zero = vec![f.zero(); 3];
        assert_eq!(mat_vec(&id, &zero, &mut ctx, true).unwrap(), zero);
        assert_eq!(ctx.scalar_mults, 0);

        let mut ctx = CountingContext::new();
        mat_vec(&id, &v, &mut ctx, true).unwrap();
        assert_eq!(ctx.scalar_mults, 6);

        let mut ctx = CountingContext::new();
        assert!(mat_vec(&id, &v[..2], &mut ctx, false).is_err());
    }

    #[test]
    fn mat_vec_support_counts_structurally() {
        let f = FieldSpec::F4;
        let m = random_matrix(f, 4, 5, &[1, 2, 3, 0, 1, 3, 2]);
        let v: Vec<_> = [1, 0, 0, 2, 0].iter().map(|&b| f.elem(b).unwrap()).collect();
        let mut ctx = CountingContext::new();
        let got = mat_vec_support(&m, &v, &[0, 1, 3], &mut ctx).unwrap();
        assert_eq!(ctx.scalar_mults, 12);
        let mut ctx2 = CountingContext::new();
        assert_eq!(got, mat_vec(&m, &v, &mut ctx2, false).unwrap());
    }

    #[test]
    fn mat_vec_partial_examples() {
        let f = FieldSpec::F2;
        let m = random_matrix(f, 11, 11, &[1, 0, 1, 1, 0]);
        let v = vec![f.one(); 11];
        let mut ctx = CountingContext::new();
        let full = mat_vec(&m, &v, &mut ctx, false).unwrap();
        let mut ctx = CountingContext::new();
        assert_eq!(mat_vec_partial(&m, &v, 11, &mut ctx).unwrap(), full);
        let mut ctx = CountingContext::new();
        assert_eq!(mat_vec_partial(&m, &v, 9, &mut ctx).unwrap(), full[..9]);
        assert_eq!(ctx.scalar_mults, 99);
        let mut ctx = CountingContext::new();
        assert!(mat_vec_partial(&m, &v, 0, &mut ctx).unwrap().is_empty());
        assert_eq!(ctx.scalar_mults, 0);
    }

    proptest! {
        #[test]
        fn invert_is_two_sided(bits in prop::collection::vec(0u32..16, 36)) {
            let m = random_matrix(FieldSpec::F16, 6, 6, &bits);
            let id = Matrix::identity(FieldSpec::F16, 6);
            match m.invert() {
                Ok(inv) => {
                    prop_assert_eq!(m.mul(&inv).unwrap(), id.clone());
                    prop_assert_eq!(inv.mul(&m).unwrap(), id);
                }
                Err(e) => {
                    prop_assert_eq!(e, LinalgError::Singular);
                    prop_assert!(m.rank() < 6);
                }
            }
        }

        #[test]
        fn rank_invariant_under_row_ops(
            bits in prop::collection::vec(0u32..4, 30),
            a in 0usize..5, b in 0usize..5, f in 1u32..4,
        ) {
            let spec = FieldSpec::F4;
            let m = random_matrix(spec, 5, 6, &bits);
            let r = m.rank();
            let mut swapped = m.clone();
            swapped.swap_rows(a, b);
            prop_assert_eq!(swapped.rank(), r);
            if a != b {
                let mut added = m.clone();
                added.add_row_multiple(a, b, spec.elem(f).unwrap());
                prop_assert_eq!(added.rank(), r);
            }
        }

        #[test]
        fn skip_zero_counts_rows_times_nonzeros(bits in prop::collection::vec(0u32..2, 8)) {
            let f = FieldSpec::F2;
            let m = random_matrix(f, 3, 8, &[1, 1, 0, 1]);
            let v: Vec<_> = bits.iter().map(|&b| f.elem(b).unwrap()).collect();
            let nz = bits.iter().filter(|&&b| b != 0).count() as u64;
            let mut ctx = CountingContext::new();
            mat_vec(&m, &v, &mut ctx, true).unwrap();
            prop_assert_eq!(ctx.scalar_mults, 3 * nz);
        }
    }
}
