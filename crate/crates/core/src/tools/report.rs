//! Verification, self-test and benchmark reports over compiled instances.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::text::format_element;
use super::ToolError;
use crate::curve::Place;
use crate::engine::{compile, verify_good_basis, CompiledInstance, InstanceSpec, OpReport};
use crate::galois::{FieldElement, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        write!(f, "overall: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

pub fn random_element(rng: &mut impl Rng, base: FieldSpec, n: usize) -> Vec<FieldElement> {
    (0..n).map(|_| base.elem(rng.random_range(0..base.order())).expect("in range")).collect()
}

/// Runs every static and dynamic check on an instance.
pub fn verify(spec: &InstanceSpec) -> VerifyReport {
    let mut r = VerifyReport::default();
    let dim = spec.dim();

    match spec.validate() {
        Ok(()) => r.push("structure", true, format!("n = {}, g = {}, {} basis functions", spec.n, spec.genus(), dim)),
        Err(e) => r.push("structure", false, e.to_string()),
    }
    for (name, p) in [("Q", spec.q.residue().modulus()), ("D1", &spec.d1_den), ("D2", &spec.d2_den)] {
        let ok = p.is_monic() && p.is_irreducible().unwrap_or(false);
        r.push(format!("irreducible {name}"), ok, format!("degree {}", p.degree().unwrap_or(0)));
    }
    let q = &spec.q;
    let on = spec.curve.on_curve(q.residue(), q.x_img(), q.y_img()).unwrap_or(false);
    r.push("on-curve Q", on, "");
    for p in &spec.candidates {
        if let Place::Affine(a) = p {
            let on = spec.curve.on_curve(a.residue(), a.x_img(), a.y_img()).unwrap_or(false);
            let free = [&spec.d1_den, &spec.d2_den]
                .iter()
                .all(|d| d.eval_ext(a.residue(), a.x_img()).is_ok_and(|v| !v.is_zero()));
            r.push(format!("on-curve {}", a.label()), on, format!("degree {}", a.degree()));
            r.push(format!("support {}", a.label()), free, "");
        }
    }
    for c in verify_good_basis(spec).checks {
        r.push(format!("good-basis f_{}", c.index), c.pass, format!("{:?}", c.target));
    }

    let ci = match compile(spec.clone()) {
        Ok(ci) => ci,
        Err(e) => {
            r.push("compile", false, e.to_string());
            return r;
        }
    };
    let labels: Vec<&str> = ci.selected_places().map(Place::label).collect();
    r.push("compile", true, format!("places {}", labels.join(",")));
    r.push("rank(T)", ci.rank() == dim, format!("{} of {}", ci.rank(), dim));

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut oracle_ok = true;
    let mut counts_ok = true;
    let expected = ci.expected_report();
    for _ in 0..32 {
        let x = random_element(&mut rng, ci.base(), ci.n());
        let y = random_element(&mut rng, ci.base(), ci.n());
        match (ci.multiply(&x, &y), ci.reference(&x, &y)) {
            (Ok((z, rep)), Ok(w)) => {
                oracle_ok &= z == w;
                counts_ok &= rep == expected;
            }
            _ => oracle_ok = false,
        }
    }
    r.push("oracle spot-check", oracle_ok, "32 seeded pairs");
    r.push(
        "op counts",
        counts_ok,
        format!(
            "step1 {} step2 {} step3 {} step5 {}",
            expected.step1_scalar, expected.step2_bilinear, expected.step3_scalar, expected.step5_scalar
        ),
    );
    let bound = ci.aggregate_bound();
    r.push("aggregate bound", expected.total() as f64 <= bound, format!("{} <= {}", expected.total(), bound));
    r.push(
        "injectivity inequality (advisory)",
        true,
        format!("holds = {}; injectivity certified by rank", ci.injectivity_inequality_holds()),
    );
    r
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub x: Vec<FieldElement>,
    pub y: Vec<FieldElement>,
    pub expected: Vec<FieldElement>,
    pub got: Vec<FieldElement>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x = {} y = {} expected {} got {}",
            format_element(&self.x),
            format_element(&self.y),
            format_element(&self.expected),
            format_element(&self.got)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestReport {
    pub trials: usize,
    pub first_mismatch: Option<Mismatch>,
    pub report: OpReport,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the engine with the schoolbook product on seeded random pairs.
pub fn selftest(ci: &CompiledInstance, trials: usize, seed: u64) -> Result<SelftestReport, ToolError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ci.expected_report();
    for done in 0..trials {
        let x = random_element(&mut rng, ci.base(), ci.n());
        let y = random_element(&mut rng, ci.base(), ci.n());
        let (got, rep) = ci.multiply(&x, &y)?;
        let expected = ci.reference(&x, &y)?;
        report = rep;
        if got != expected {
            return Ok(SelftestReport { trials: done + 1, first_mismatch: Some(Mismatch { x, y, expected, got }), report });
        }
    }
    Ok(SelftestReport { trials, first_mismatch: None, report })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub reps: usize,
    pub median: Duration,
    pub reference_median: Duration,
    pub report: OpReport,
}

/// Median wall time of the engine and of the schoolbook product.
pub fn bench(ci: &CompiledInstance, reps: usize) -> Result<BenchReport, ToolError> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let reps = reps.max(1);
    let pairs: Vec<_> = (0..reps)
        .map(|_| (random_element(&mut rng, ci.base(), ci.n()), random_element(&mut rng, ci.base(), ci.n())))
        .collect();
    let mut engine = Vec::with_capacity(reps);
    let mut reference = Vec::with_capacity(reps);
    let mut report = OpReport::default();
    for (x, y) in &pairs {
        let start = Instant::now();
        let (z, rep) = ci.multiply(x, y)?;
        engine.push(start.elapsed());
        std::hint::black_box(z);
        report = rep;

        let start = Instant::now();
        std::hint::black_box(ci.reference(x, y)?);
        reference.push(start.elapsed());
    }
    Ok(BenchReport { reps, median: median(&mut engine), reference_median: median(&mut reference), report })
}

fn median(v: &mut [Duration]) -> Duration {
    v.sort();
    v[v.len() / 2]
}

/// The operation counts of one product on this instance.
pub fn counts(ci: &CompiledInstance) -> Result<OpReport, ToolError> {
    let one: Vec<FieldElement> = (0..ci.n()).map(|i| if i == 0 { ci.base().one() } else { ci.base().zero() }).collect();
    Ok(ci.multiply(&one, &one)?.1)
}
