//! Setup and execution of the asymmetric interpolation multiplication.
//!
//! Setup picks evaluation places, builds the evaluation matrix `T` of the
//! basis `f_1..f_N` (`N = 2n + g - 1`) and keeps the first `2n - 1` rows of
//! `T^{-1}`. A product then costs two structured matrix-vector products,
//! one componentwise product in the residue fields, one partial
//! matrix-vector product, and a multiplication-free recombination.

use thiserror::Error;

use crate::curve::{eval_at_q, AffinePlace, CurveError, CurveModel, FunctionRep, Place};
use crate::galois::{ExtField, FieldElement, FieldSpec, GaloisError, Poly};
use crate::kernels::{max_cost_ratio, BilinearCounter, KernelError, KernelPlan};
use crate::linalg::{mat_vec_partial, mat_vec_support, CountingContext, LinalgError, Matrix};

/// Upper bound on rank evaluations spent searching for a place selection.
pub const SELECTION_BUDGET: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("basis must have 2n+g-1 = {expected} functions, found {got}")]
    BasisLength { expected: usize, got: usize },
    #[error("first basis function must be the constant 1")]
    FirstBasisNotOne,
    #[error("place Q must have degree n = {expected}, found {got}")]
    QDegree { expected: usize, got: usize },
    #[error("{which} modulus must have degree n+g-1 = {expected}, found {got:?}")]
    DivisorDegree { which: &'static str, expected: usize, got: Option<usize> },
    #[error("{which} modulus is not monic irreducible")]
    DivisorReducible { which: &'static str },
    #[error("D1 and D2 moduli coincide")]
    EquivalentDivisors,
    #[error("place {0} lies in the support of D1 or D2")]
    SupportCollision(String),
    #[error("place {0} is listed twice")]
    DuplicatePlace(String),
    #[error("polynomial data is not over the instance base field")]
    FieldMismatch,
    #[error("no subset of candidate places has total degree {target}")]
    UnreachableDegreeSum { target: usize },
    #[error("no full-rank place selection found after {evaluated} rank evaluations")]
    NoFullRankSelection { evaluated: usize },
    #[error("good-basis check failed at f_{index}")]
    GoodBasis { index: usize },
    #[error("operand must have {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Everything that defines an instance before setup.
#[derive(Debug, Clone)]
pub struct InstanceSpec {
    pub name: String,
    pub curve: CurveModel,
    pub n: usize,
    pub q: AffinePlace,
    pub d1_den: Poly,
    pub d2_den: Poly,
    pub basis: Vec<FunctionRep>,
    pub candidates: Vec<Place>,
}

impl InstanceSpec {
    pub fn base(&self) -> FieldSpec {
        self.curve.base()
    }

    pub fn genus(&self) -> usize {
        self.curve.genus()
    }

    /// `N = 2n + g - 1`, the dimension of the interpolation space.
    pub fn dim(&self) -> usize {
        2 * self.n + self.genus() - 1
    }

    /// Checks the structural hypotheses, returning the first violation.
    pub fn validate(&self) -> Result<(), EngineError> {
        let base = self.base();
        let dim = self.dim();
        if self.basis.len() != dim {
            return Err(EngineError::BasisLength { expected: dim, got: self.basis.len() });
        }
        if self.basis.iter().any(|f| f.field() != base)
            || self.d1_den.field() != base
            || self.d2_den.field() != base
            || self.q.residue().base() != base
        {
            return Err(EngineError::FieldMismatch);
        }
        if !self.basis[0].is_one() {
            return Err(EngineError::FirstBasisNotOne);
        }
        if self.q.degree() != self.n {
            return Err(EngineError::QDegree { expected: self.n, got: self.q.degree() });
        }
        let ddeg = self.n + self.genus() - 1;
        for (which, d) in [("D1", &self.d1_den), ("D2", &self.d2_den)] {
            if d.degree() != Some(ddeg) {
                return Err(EngineError::DivisorDegree { which, expected: ddeg, got: d.degree() });
            }
            if !d.is_monic() || !d.is_irreducible()? {
                return Err(EngineError::DivisorReducible { which });
            }
        }
        if self.d1_den == self.d2_den {
            return Err(EngineError::EquivalentDivisors);
        }
        self.check_support(&self.q)?;
        for (i, p) in self.candidates.iter().enumerate() {
            if let Place::Affine(a) = p {
                self.check_support(a)?;
            }
            if self.candidates[..i].iter().any(|o| o.same_point(p)) {
                return Err(EngineError::DuplicatePlace(p.label().to_string()));
            }
        }
        Ok(())
    }

    fn check_support(&self, p: &AffinePlace) -> Result<(), EngineError> {
        for d in [&self.d1_den, &self.d2_den] {
            if d.eval_ext(p.residue(), p.x_img())?.is_zero() {
                return Err(EngineError::SupportCollision(p.label().to_string()));
            }
        }
        Ok(())
    }

    /// Residue-basis coordinates of `f_i(P)` for every basis function, as
    /// `deg P` rows of `N` entries.
    fn place_rows(&self, p: &Place) -> Result<Vec<Vec<FieldElement>>, EngineError> {
        let d = p.degree();
        let mut rows = vec![Vec::with_capacity(self.dim()); d];
        for f in &self.basis {
            let v = self.curve.eval(f, p)?;
            for (r, row) in rows.iter_mut().enumerate() {
                row.push(v[r]);
            }
        }
        Ok(rows)
    }
}

impl Place {
    fn same_point(&self, other: &Place) -> bool {
        match (self, other) {
            (Place::Affine(a), Place::Affine(b)) => {
                a.residue() == b.residue() && a.x_img() == b.x_img() && a.y_img() == b.y_img()
            }
            (Place::Infinite(a), Place::Infinite(b)) => a.branch_y0() == b.branch_y0(),
            _ => false,
        }
    }
}

/// What `f_j(Q)` must be for a good basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoodBasisTarget {
    /// `alpha^k`, the `(k+1)`-th canonical basis vector.
    Canonical(usize),
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodBasisCheck {
    /// 1-based function index.
    pub index: usize,
    pub target: GoodBasisTarget,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodBasisReport {
    pub checks: Vec<GoodBasisCheck>,
}

impl GoodBasisReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&GoodBasisCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// `f_j(Q) = alpha^{j-1}` for `j <= n`, `alpha^{j-n}` for `n < j < 2n`,
/// and `0` for the remaining `g` functions.
pub fn verify_good_basis(spec: &InstanceSpec) -> GoodBasisReport {
    let n = spec.n;
    let ext = spec.q.residue();
    let checks = spec
        .basis
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let index = i + 1;
            let target = if index <= n {
                GoodBasisTarget::Canonical(index - 1)
            } else if index < 2 * n {
                GoodBasisTarget::Canonical(index - n)
            } else {
                GoodBasisTarget::Zero
            };
            let expected = match target {
                GoodBasisTarget::Canonical(k) if k < ext.degree() => {
                    let mut z = ext.zero().coeffs().to_vec();
                    z[k] = ext.base().one();
                    Some(z)
                }
                GoodBasisTarget::Canonical(_) => None,
                GoodBasisTarget::Zero => Some(ext.zero().coeffs().to_vec()),
            };
            let pass = match (eval_at_q(f, &spec.q), expected) {
                (Ok(v), Some(e)) => v.coeffs() == e.as_slice(),
                _ => false,
            };
            GoodBasisCheck { index, target, pass }
        })
        .collect();
    GoodBasisReport { checks }
}

/// `(x_1..x_n, 0, ..., 0)`.
pub fn embed_x(x: &[FieldElement], n: usize, g: usize) -> Vec<FieldElement> {
    let zero = x.first().map_or(FieldSpec::F2.zero(), |e| e.spec().zero());
    let mut v = vec![zero; 2 * n + g - 1];
    v[..x.len()].copy_from_slice(x);
    v
}

/// `(y_1, 0 [n-1 times], y_2..y_n, 0 [g times])`.
pub fn embed_y(y: &[FieldElement], n: usize, g: usize) -> Vec<FieldElement> {
    let zero = y.first().map_or(FieldSpec::F2.zero(), |e| e.spec().zero());
    let mut v = vec![zero; 2 * n + g - 1];
    if let Some((&first, rest)) = y.split_first() {
        v[0] = first;
        v[n..n + rest.len()].copy_from_slice(rest);
    }
    v
}

/// Exact multiplication counts of one product, by step.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpReport {
    /// Scalar products in the two evaluation matrix-vector products.
    pub step1_scalar: u64,
    /// Bilinear products in the residue-field kernels.
    pub step2_bilinear: u64,
    /// Scalar products in the partial interpolation.
    pub step3_scalar: u64,
    /// Products in the final recombination (always zero).
    pub step5_scalar: u64,
}

impl OpReport {
    pub fn total(&self) -> u64 {
        self.step1_scalar + self.step2_bilinear + self.step3_scalar + self.step5_scalar
    }

    /// `2n(2n+g-1)`.
    pub fn expected_step1(n: usize, g: usize) -> u64 {
        (2 * n * (2 * n + g - 1)) as u64
    }

    /// `(2n-1)(2n+g-1)`.
    pub fn expected_step3(n: usize, g: usize) -> u64 {
        ((2 * n - 1) * (2 * n + g - 1)) as u64
    }

    /// `8n^2 + n(4g-5) + (2n+2g-2+r) max_{i<=r} mu(i)/i`.
    pub fn aggregate_bound(n: usize, g: usize, r: usize) -> f64 {
        let (n, g) = (n as f64, g as f64);
        8.0 * n * n + n * (4.0 * g - 5.0) + (2.0 * n + 2.0 * g - 2.0 + r as f64) * max_cost_ratio(r)
    }
}

/// A set-up instance; immutable and shareable across threads.
#[derive(Debug, Clone)]
pub struct CompiledInstance {
    spec: InstanceSpec,
    selected: Vec<usize>,
    t: Matrix,
    t_inv_top: Matrix,
    plan: KernelPlan,
    rank: usize,
    good_basis: GoodBasisReport,
    x_support: Vec<usize>,
    y_support: Vec<usize>,
    rank_evaluations: usize,
}

/// Validates, selects places, builds `T` and `T^{-1}`, and checks the basis.
///
/// Selection is the first subset, in listed order, whose degrees sum to `N`
/// and whose rows give a full-rank `T` (depth-first, at most
/// [`SELECTION_BUDGET`] rank evaluations).
pub fn compile(spec: InstanceSpec) -> Result<CompiledInstance, EngineError> {
    spec.validate()?;
    let good_basis = verify_good_basis(&spec);
    if let Some(fail) = good_basis.first_failure() {
        return Err(EngineError::GoodBasis { index: fail.index });
    }

    let dim = spec.dim();
    let base = spec.base();
    let rows = spec
        .candidates
        .iter()
        .map(|p| spec.place_rows(p))
        .collect::<Result<Vec<_>, _>>()?;
    let degrees: Vec<usize> = spec.candidates.iter().map(Place::degree).collect();

    let mut search = Search { rows: &rows, degrees: &degrees, base, dim, evaluated: 0, chosen: Vec::new() };
    let selected = match search.dfs(0, 0) {
        Some(sel) => sel,
        None if !subset_sum_reachable(&degrees, dim) => {
            return Err(EngineError::UnreachableDegreeSum { target: dim });
        }
        None => return Err(EngineError::NoFullRankSelection { evaluated: search.evaluated }),
    };
    let rank_evaluations = search.evaluated;

    let t = assemble(&rows, &selected, base)?;
    let rank = t.rank();
    let t_inv_top = t.invert()?.top_rows(2 * spec.n - 1)?;
    let residues = selected
        .iter()
        .map(|&i| match &spec.candidates[i] {
            Place::Affine(a) => Ok(a.residue().clone()),
            Place::Infinite(_) => ExtField::new(Poly::x(base)),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let plan = KernelPlan::new(residues)?;

    let n = spec.n;
    let x_support = (0..n).collect();
    let y_support = std::iter::once(0).chain(n..2 * n - 1).collect();
    Ok(CompiledInstance {
        spec,
        selected,
        t,
        t_inv_top,
        plan,
        rank,
        good_basis,
        x_support,
        y_support,
        rank_evaluations,
    })
}

struct Search<'a> {
    rows: &'a [Vec<Vec<FieldElement>>],
    degrees: &'a [usize],
    base: FieldSpec,
    dim: usize,
    evaluated: usize,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn dfs(&mut self, start: usize, sum: usize) -> Option<Vec<usize>> {
        if sum == self.dim {
            if self.evaluated >= SELECTION_BUDGET {
                return None;
            }
            self.evaluated += 1;
            let t = assemble(self.rows, &self.chosen, self.base).ok()?;
            return (t.rank() == self.dim).then(|| self.chosen.clone());
        }
        for i in start..self.degrees.len() {
            if self.evaluated >= SELECTION_BUDGET {
                return None;
            }
            if sum + self.degrees[i] > self.dim {
                continue;
            }
            self.chosen.push(i);
            let found = self.dfs(i + 1, sum + self.degrees[i]);
            self.chosen.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

fn subset_sum_reachable(degrees: &[usize], target: usize) -> bool {
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=target).rev() {
            reach[s] |= reach[s - d];
        }
    }
    reach[target]
}

fn assemble(rows: &[Vec<Vec<FieldElement>>], selected: &[usize], base: FieldSpec) -> Result<Matrix, LinalgError> {
    let stacked = selected.iter().flat_map(|&i| rows[i].iter().cloned()).collect();
    Matrix::from_rows(base, stacked)
}

impl CompiledInstance {
    pub fn spec(&self) -> &InstanceSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn genus(&self) -> usize {
        self.spec.genus()
    }

    pub fn base(&self) -> FieldSpec {
        self.spec.base()
    }

    /// The field `F_{q^n}` the engine multiplies in.
    pub fn field(&self) -> &ExtField {
        self.spec.q.residue()
    }

    pub fn selected_places(&self) -> impl Iterator<Item = &Place> {
        self.selected.iter().map(|&i| &self.spec.candidates[i])
    }

    pub fn selected_indices(&self) -> &[usize] {
        &self.selected
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    pub fn t_inv_top(&self) -> &Matrix {
        &self.t_inv_top
    }

    pub fn plan(&self) -> &KernelPlan {
        &self.plan
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn good_basis(&self) -> &GoodBasisReport {
        &self.good_basis
    }

    pub fn rank_evaluations(&self) -> usize {
        self.rank_evaluations
    }

    /// `(offset, width)` of each selected place's rows in `T`.
    pub fn row_groups(&self) -> Vec<(usize, usize)> {
        self.plan.groups().iter().map(|g| (g.offset, g.width)).collect()
    }

    /// Whether `sum deg P_i > 2n + 2g - 2` holds for the selection.
    ///
    /// This is a sufficient condition for injectivity of the evaluation map;
    /// the full-rank check on `T` is what setup actually relies on.
    pub fn injectivity_inequality_holds(&self) -> bool {
        let total: usize = self.selected_places().map(Place::degree).sum();
        total > 2 * self.n() + 2 * self.genus() - 2
    }

    /// The counts every call to [`CompiledInstance::multiply`] reports.
    pub fn expected_report(&self) -> OpReport {
        let (n, g) = (self.n(), self.genus());
        OpReport {
            step1_scalar: OpReport::expected_step1(n, g),
            step2_bilinear: self.plan.total_cost(),
            step3_scalar: OpReport::expected_step3(n, g),
            step5_scalar: 0,
        }
    }

    pub fn aggregate_bound(&self) -> f64 {
        OpReport::aggregate_bound(self.n(), self.genus(), self.plan.max_degree())
    }

    fn check_operand(&self, v: &[FieldElement]) -> Result<(), EngineError> {
        if v.len() != self.n() {
            return Err(EngineError::LengthMismatch { expected: self.n(), got: v.len() });
        }
        if v.iter().any(|e| e.spec() != self.base()) {
            return Err(EngineError::FieldMismatch);
        }
        Ok(())
    }

    /// Product of two elements given by coordinates in `1, alpha, ..., alpha^{n-1}`.
    pub fn multiply(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<(Vec<FieldElement>, OpReport), EngineError> {
        self.check_operand(x)?;
        self.check_operand(y)?;
        let (n, g) = (self.n(), self.genus());

        let mut step1 = CountingContext::new();
        let zx = mat_vec_support(&self.t, &embed_x(x, n, g), &self.x_support, &mut step1)?;
        let zy = mat_vec_support(&self.t, &embed_y(y, n, g), &self.y_support, &mut step1)?;

        let mut step2 = BilinearCounter::new();
        let u = self.plan.hadamard(&zx, &zy, &mut step2)?;

        let mut step3 = CountingContext::new();
        let w = mat_vec_partial(&self.t_inv_top, &u, 2 * n - 1, &mut step3)?;

        let step5 = CountingContext::new();
        let z = recombine(&w, n);

        let report = OpReport {
            step1_scalar: step1.scalar_mults,
            step2_bilinear: step2.bilinear_mults,
            step3_scalar: step3.scalar_mults,
            step5_scalar: step5.scalar_mults,
        };
        Ok((z, report))
    }

    /// Schoolbook product in the same field, for cross-checking.
    pub fn reference(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<Vec<FieldElement>, EngineError> {
        self.check_operand(x)?;
        self.check_operand(y)?;
        let ext = self.field();
        let p = ext.mul_schoolbook(&ext.from_coords(x.to_vec())?, &ext.from_coords(y.to_vec())?)?;
        Ok(p.coeffs().to_vec())
    }
}

/// `z_1 = w_1`, `z_j = w_j + w_{n+j-1}`: additions only.
fn recombine(w: &[FieldElement], n: usize) -> Vec<FieldElement> {
    let mut z = w[..n].to_vec();
    for j in 1..n {
        z[j] += w[n + j - 1];
    }
    z
}

/// Coordinates of `x * y` in `F_q[t]/(qpoly)`, by schoolbook multiplication.
pub fn reference_mul(qpoly: &Poly, x: &[FieldElement], y: &[FieldElement]) -> Result<Vec<FieldElement>, EngineError> {
    let ext = ExtField::new(qpoly.clone())?;
    for v in [x, y] {
        if v.len() != ext.degree() {
            return Err(EngineError::LengthMismatch { expected: ext.degree(), got: v.len() });
        }
    }
    let p = ext.mul_schoolbook(&ext.from_coords(x.to_vec())?, &ext.from_coords(y.to_vec())?)?;
    Ok(p.coeffs().to_vec())
}
