//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use chudnovsky::curve::CurveModel;
use chudnovsky::engine::{compile, reference_mul};
use chudnovsky::galois::{FieldSpec, Poly};
use chudnovsky::kernels::{mul_d1, mul_d2, mul_d4, BilinearCounter, Kernel};
use chudnovsky::tools::{bundled, check_total_split, random_element, split_search};
use chudnovsky::CompiledInstance;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{expr, padded, vectors};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn criterion_vectors(instances: &[CompiledInstance]) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for ci in instances {
        let (f, n) = (ci.base(), ci.n());
        for v in vectors(&ci.spec().name) {
            let want = padded(f, n, &v.z);
            let (z, _) = ci.multiply(&padded(f, n, &v.x), &padded(f, n, &v.y)).unwrap();
            if z != want || want != expr(ci, &v.terms) {
                return outcome(false, format!("{} vector {} differs", ci.spec().name, checked));
            }
            checked += 1;
        }
        let probe = padded(f, n, &[1, 1]);
        if reference_mul(ci.field().modulus(), &probe, &probe).unwrap() != ci.multiply(&probe, &probe).unwrap().0 {
            return outcome(false, format!("{} oracle disagrees", ci.spec().name));
        }
    }
    let elapsed = start.elapsed();
    outcome(elapsed.as_secs_f64() < 1.0, format!("{checked} vectors exact in {elapsed:?}"))
}

fn criterion_oracle(instances: &[CompiledInstance]) -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for ci in instances {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let start = Instant::now();
        for _ in 0..1000 {
            let x = random_element(&mut rng, ci.base(), ci.n());
            let y = random_element(&mut rng, ci.base(), ci.n());
            let got = ci.multiply(&x, &y).unwrap().0;
            if got != ci.reference(&x, &y).unwrap() {
                return outcome(false, format!("{} mismatch", ci.spec().name));
            }
        }
        let elapsed = start.elapsed();
        pass &= elapsed.as_secs_f64() < 5.0;
        details.push(format!("{} {:?}", ci.spec().name, elapsed));
    }
    outcome(pass, format!("1000 pairs each: {}", details.join(", ")))
}

fn criterion_rank(instances: &[CompiledInstance]) -> Outcome {
    let ranks: Vec<usize> = instances.iter().map(CompiledInstance::rank).collect();
    outcome(ranks == [27, 11, 11], format!("rank(T) = {ranks:?}"))
}

fn criterion_good_basis(instances: &[CompiledInstance]) -> Outcome {
    let pass = instances.iter().all(|ci| ci.good_basis().passed() && ci.good_basis().checks.len() == ci.spec().dim());
    let counts: Vec<usize> = instances.iter().map(|ci| ci.good_basis().checks.len()).collect();
    outcome(pass, format!("functions checked {counts:?}"))
}

fn criterion_counts(instances: &[CompiledInstance]) -> Outcome {
    // step1 is 2n(2n+g-1), which evaluates to 702/110/110
    let want = [(702, 27, 675), (110, 12, 99), (110, 18, 99)];
    let mut got = Vec::new();
    for ci in instances {
        let one = padded(ci.base(), ci.n(), &[1]);
        let (_, r) = ci.multiply(&one, &one).unwrap();
        if r.step5_scalar != 0 {
            return outcome(false, "recombination used multiplications");
        }
        got.push((r.step1_scalar, r.step2_bilinear, r.step3_scalar));
    }
    outcome(got == want, format!("(step1, step2, step3) = {got:?}"))
}

fn criterion_bound(instances: &[CompiledInstance]) -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for ci in instances {
        let total = ci.expected_report().total();
        let bound = ci.aggregate_bound();
        pass &= total as f64 <= bound;
        details.push(format!("{total} <= {bound}"));
    }
    outcome(pass, details.join(", "))
}

fn criterion_split() -> Outcome {
    let f16 = bundled::f16_13();
    let q_ok = check_total_split(&f16.curve, f16.q.residue().modulus()).unwrap_or(false);
    let curve = CurveModel::rational_rhs(FieldSpec::F2);
    let target = Poly::from_bits(FieldSpec::F2, &[1, 0, 0, 1, 0, 1]).unwrap();
    let found = split_search(&curve, 5, 0, 0).contains(&target);
    outcome(q_ok && found, format!("F16 place splits: {q_ok}; x^5+x^3+1 found by scan: {found}"))
}

fn criterion_properties(instances: &[CompiledInstance]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = 0usize;
    let mut cases = 0usize;

    // kernels against the schoolbook product on every residue field in use
    for ci in instances {
        for g in ci.plan().groups() {
            let e = &g.residue;
            let q = e.base().order();
            let pairs = match g.kernel {
                Kernel::Karatsuba4 => 10_000,
                _ => 256,
            };
            for _ in 0..pairs {
                let a = e.from_bits(&(0..g.width).map(|_| rng.random_range(0..q)).collect::<Vec<_>>()).unwrap();
                let b = e.from_bits(&(0..g.width).map(|_| rng.random_range(0..q)).collect::<Vec<_>>()).unwrap();
                let mut c = BilinearCounter::new();
                let got = match g.kernel {
                    Kernel::Direct => e.from_coords(vec![mul_d1(a.coeffs()[0], b.coeffs()[0], &mut c)]).unwrap(),
                    Kernel::Karatsuba2 => mul_d2(e, &a, &b, &mut c).unwrap(),
                    Kernel::Karatsuba4 => mul_d4(e, &a, &b, &mut c).unwrap(),
                };
                cases += 1;
                if got != e.mul_schoolbook(&a, &b).unwrap() || c.bilinear_mults != g.kernel.cost() {
                    failures += 1;
                }
            }
        }
    }

    // commutativity, identity and absorbing laws through the engine
    for ci in instances {
        let one = padded(ci.base(), ci.n(), &[1]);
        let zero = padded(ci.base(), ci.n(), &[]);
        for _ in 0..200 {
            let x = random_element(&mut rng, ci.base(), ci.n());
            let y = random_element(&mut rng, ci.base(), ci.n());
            let m = |a: &[_], b: &[_]| ci.multiply(a, b).unwrap().0;
            cases += 1;
            if m(&x, &y) != m(&y, &x) || m(&x, &one) != x || m(&x, &zero) != zero {
                failures += 1;
            }
        }
    }

    // local series at the two infinite branches
    for base in [FieldSpec::F2, FieldSpec::F4] {
        let curve = CurveModel::rational_rhs(base);
        for branch in 0..2 {
            for precision in 1..48 {
                let y = curve.branch_series(base.elem(branch).unwrap(), precision).unwrap();
                let c = curve.rhs_series(precision).unwrap();
                let residual_zero = (0..precision).all(|k| {
                    let sq = if k % 2 == 0 { y[k / 2].square() } else { base.zero() };
                    (sq + y[k] + c[k]).is_zero()
                });
                cases += 1;
                failures += usize::from(!residual_zero);
            }
        }
    }

    outcome(failures == 0, format!("{cases} cases, {failures} failures"))
}

fn main() -> ExitCode {
    let instances: Vec<CompiledInstance> = bundled::all().into_iter().map(|s| compile(s).unwrap()).collect();
    let results = [
        ("1 published test vectors", criterion_vectors(&instances)),
        ("2 oracle equivalence", criterion_oracle(&instances)),
        ("3 rank certificates", criterion_rank(&instances)),
        ("4 good-basis certificates", criterion_good_basis(&instances)),
        ("5 operation accounting", criterion_counts(&instances)),
        ("6 aggregate bound", criterion_bound(&instances)),
        ("7 splitting criterion", criterion_split()),
        ("8 property suites", criterion_properties(&instances)),
    ];
    let mut all = true;
    for (name, r) in &results {
        println!("criterion {name}: {} ({})", if r.pass { "PASS" } else { "FAIL" }, r.detail);
        all &= r.pass;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
