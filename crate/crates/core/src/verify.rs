//! End-to-end checks of the library against its brute-force oracles.
//!
//! Each check returns a [`CheckOutcome`]; the acceptance test suite runs them at
//! full size and the CLI `verify` command runs them under a weight budget.

use std::time::{Duration, Instant};

use rand::Rng;
use serde::Serialize;

use crate::constants::{
    box_op, decode, enumerate_generators, rewrite_in_generators, symbolic_leading_monomial,
    t_sequence, MarkedPoly,
};
use crate::deriv::{
    delta_degree, exp, log_auto, t1_scaling, weitzenbock, Automorphism, Derivation, DEFAULT_CAP,
};
use crate::error::Result;
use crate::ncalg::{rat, NCPoly, Rational};
use crate::oracle::{
    ak_basis, compare_kernels, delta_power_kernel_dimension, graded_kernel_basis, recover_scalar,
    rfn_span_dimension, span_dimension, verify_freeness, KernelComparison,
};
use crate::random;

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl CheckOutcome {
    pub fn within_time(&self) -> bool {
        self.elapsed_ms <= self.limit_ms
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] {}. {} ({} ms / limit {} ms): {}",
            if self.passed && self.within_time() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.limit_ms,
            self.detail
        )
    }
}

/// Size parameters. [`Budget::full`] matches the acceptance targets.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Budget {
    pub weight_max: usize,
    pub seed: u64,
    pub cases: usize,
}

impl Budget {
    pub fn full() -> Self {
        Budget { weight_max: 12, seed: 2019, cases: 50 }
    }

    fn cap(&self, n: usize) -> usize {
        n.min(self.weight_max)
    }
}

fn timed<F: FnOnce() -> Result<(bool, String)>>(id: usize, name: &str, limit: Duration, body: F) -> CheckOutcome {
    let start = Instant::now();
    let (passed, detail) = match body() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome {
        id,
        name: name.to_string(),
        passed,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
        limit_ms: limit.as_millis(),
    }
}

fn x_plus(a: i64, b: i64) -> NCPoly {
    &NCPoly::x_pow(1).scale(&rat(a, 1)) + &NCPoly::x_pow(2).scale(&rat(b, 1))
}

/// The five test functions `1, X, X^2, 1 + X, X + X^2`.
pub fn sample_fs() -> Vec<NCPoly> {
    vec![
        NCPoly::one(),
        NCPoly::x(),
        NCPoly::x_pow(2),
        &NCPoly::one() + &NCPoly::x(),
        x_plus(1, 1),
    ]
}

/// 1. `T_1, ..., T_4` are constants for each sample `f`.
pub fn constants_certification() -> CheckOutcome {
    timed(1, "T-sequence constants", Duration::from_secs(5), || {
        let mut count = 0;
        for f in sample_fs() {
            let d = Derivation::triangular(f.clone());
            for i in 1..=4 {
                if !d.derive(&t_sequence(i, &f)).is_zero() {
                    return Ok((false, format!("Δ(T_{i}) != 0 for f = {f}")));
                }
                count += 1;
            }
        }
        Ok((true, format!("{count} elements verified")))
    })
}

/// One (m, f, N_max) configuration of the kernel/generator comparison.
pub fn kernel_vs_generators(m: usize, f: &NCPoly, n_max: usize) -> Result<(bool, String, Vec<usize>)> {
    let d = Derivation::triangular(f.clone());
    let table = enumerate_generators(m, f, n_max)?;
    let mut dims = Vec::new();
    for n in 0..=n_max {
        let kb = graded_kernel_basis(&d, m, n)?;
        let sd = span_dimension(&table, n)?;
        if kb.dimension() != sd {
            return Ok((false, format!("f = {f}, N = {n}: kernel dim {} != span dim {sd}", kb.dimension()), dims));
        }
        for v in &kb.basis {
            let r = rewrite_in_generators(v, &table)?;
            if r.evaluate(&table) != *v {
                return Ok((false, format!("f = {f}, N = {n}: rewrite of {v} does not round trip"), dims));
            }
        }
        dims.push(kb.dimension());
    }
    Ok((true, String::new(), dims))
}

/// 2. Kernel equals the algebra generated by the enumerated generators.
pub fn kernel_equals_rf(budget: &Budget) -> CheckOutcome {
    timed(2, "kernel = R_F", Duration::from_secs(120), || {
        let configs = [
            (1, NCPoly::x(), budget.cap(7)),
            (1, &NCPoly::one() + &NCPoly::x(), budget.cap(7)),
            (2, NCPoly::x_pow(2), budget.cap(8)),
            (2, x_plus(1, 1), budget.cap(8)),
        ];
        let mut details = Vec::new();
        for (m, f, n) in configs {
            let (ok, msg, dims) = kernel_vs_generators(m, &f, n)?;
            if !ok {
                return Ok((false, msg));
            }
            details.push(format!("m={m} f={f}: {dims:?}"));
        }
        Ok((true, details.join("; ")))
    })
}

/// 3. Generator leading monomials form a code and decoding inverts the
///    symbolic leading monomial.
pub fn freeness(budget: &Budget) -> CheckOutcome {
    timed(3, "freeness and unique bracketing", Duration::from_secs(60), || {
        let n = budget.cap(10);
        for m in 0..=2 {
            let table = enumerate_generators(m, &NCPoly::x_pow(m), n)?;
            if !verify_freeness(&table, n) {
                return Ok((false, format!("leading monomials for m = {m} are not a code")));
            }
        }
        let mut decoded = 0;
        for (m, w) in [(1, budget.cap(10)), (2, budget.cap(12))] {
            let table = enumerate_generators(m, &NCPoly::x_pow(m), w)?;
            for e in table.entries.iter().filter(|e| e.bw.is_boxed()) {
                let lm = symbolic_leading_monomial(&e.bw, m)?;
                if lm != e.lm {
                    return Ok((false, format!("symbolic LM of {} is {lm}, actual {}", e.bw, e.lm)));
                }
                if decode(&lm, m)? != e.bw {
                    return Ok((false, format!("decode({lm}) != {}", e.bw)));
                }
                decoded += 1;
            }
        }
        Ok((true, format!("codes verified to weight {n}; {decoded} generators decoded")))
    })
}

/// 4. Equal kernels exactly for proportional derivations.
pub fn same_kernel(budget: &Budget) -> CheckOutcome {
    timed(4, "same kernel iff proportional", Duration::from_secs(30), || {
        let n = budget.cap(6);
        let d1 = weitzenbock(1);
        for alpha in [rat(3, 1), rat(-1, 2), rat(7, 5)] {
            let d2 = d1.scale(&alpha);
            if compare_kernels(&d1, &d2, 1, n)? != KernelComparison::Equal {
                return Ok((false, format!("kernels of δ1 and {alpha}·δ1 differ")));
            }
            let got = recover_scalar(&d1, &d2, n)?;
            if got != alpha {
                return Ok((false, format!("recovered {got}, expected {alpha}")));
            }
        }
        match compare_kernels(&d1, &weitzenbock(2), 1, n)? {
            KernelComparison::Equal => Ok((false, "δ1 and δ2 reported equal".into())),
            KernelComparison::Witness { weight, poly, in_first } => {
                let (own, other) = if in_first { (d1.clone(), weitzenbock(2)) } else { (weitzenbock(2), d1.clone()) };
                let ok = own.derive(&poly).is_zero() && !other.derive(&poly).is_zero();
                Ok((ok, format!("scalars recovered; δ1/δ2 witness at weight {weight}: {poly}")))
            }
        }
    })
}

/// 5. The common kernel of the `δ_m` family and its switch is `K[T1]`.
pub fn absolute_constants(budget: &Budget) -> CheckOutcome {
    timed(5, "AK = K[T1]", Duration::from_secs(60), || {
        let n = budget.cap(6);
        let t1 = NCPoly::t1();
        let expected: Vec<NCPoly> = (0..=n / 2).rev().map(|k| t1.pow(k)).collect();
        for big_m in [n.max(6), n.max(6) + 2] {
            let got = ak_basis(big_m, n)?;
            if got != expected {
                return Ok((false, format!("M = {big_m}: basis of size {} differs from powers of T1", got.len())));
            }
        }
        Ok((true, format!("basis {{1, T1, ..., T1^{}}} at degree <= {n}, stable in M", n / 2)))
    })
}

/// 6. `ker Δ^n` equals the span of bracketed words with fewer than `n` free `Y`s.
pub fn rfn_spans(budget: &Budget) -> CheckOutcome {
    timed(6, "R_F^n = ker Δ^n", Duration::from_secs(60), || {
        let n_max = budget.cap(5);
        let table = enumerate_generators(1, &NCPoly::x(), n_max.max(1))?;
        let d = weitzenbock(1);
        let mut dims = Vec::new();
        for n in [2, 3] {
            for w in 0..=n_max {
                let span = rfn_span_dimension(n, 1, w, &table)?;
                let null = delta_power_kernel_dimension(&d, n, 1, w)?;
                if span != null {
                    return Ok((false, format!("n = {n}, N = {w}: span {span} != null space {null}")));
                }
                dims.push(span);
            }
        }
        Ok((true, format!("dimensions {dims:?}")))
    })
}

/// 7. `∇_r(⊡(V2 Y U2)) = ⊡(∇_r(V2 Y U2)) - ∇_l(V2 Y U2)[Y, F]` on random monomials.
pub fn nabla_identity(budget: &Budget) -> CheckOutcome {
    timed(7, "∇ commutation identity", Duration::from_secs(10), || {
        let mut rng = random::rng(budget.seed ^ 0x7);
        let fs = [NCPoly::x(), NCPoly::x_pow(2), &NCPoly::one() + &NCPoly::x()];
        let one = NCPoly::one();
        let pairs = 2 * budget.cases;
        for _ in 0..pairs {
            let v2 = NCPoly::word(random::word(&mut rng, 4));
            let u2 = NCPoly::word(random::word(&mut rng, 4));
            let marked = MarkedPoly::new(&v2, &u2);
            for f in &fs {
                let lhs = marked.boxed(f).nabla_r(&one, f);
                let rhs = &box_op(&marked.nabla_r(&one, f), f) - &(&marked.nabla_l(&one, f) * &NCPoly::y().commutator(f));
                if lhs != rhs {
                    return Ok((false, format!("fails for V2 = {v2}, U2 = {u2}, F = {f}")));
                }
            }
        }
        Ok((true, format!("{pairs} pairs x {} choices of F", fs.len())))
    })
}

fn scaled_exp(d: &Derivation, c: &Rational) -> Result<Automorphism> {
    Automorphism::exponential(d.scale(c), DEFAULT_CAP)
}

/// 8. Leibniz rule, degree function, exp/log and the action on `T1`.
pub fn analytic_properties(budget: &Budget) -> CheckOutcome {
    timed(8, "derivation properties", Duration::from_secs(30), || {
        let mut rng = random::rng(budget.seed);
        let cases = budget.cases;
        for _ in 0..cases {
            let d = Derivation::new(random::poly(&mut rng, 3, 3), random::poly(&mut rng, 3, 3));
            let (p, q) = (random::poly(&mut rng, 5, 4), random::poly(&mut rng, 5, 4));
            if d.derive(&(&p * &q)) != &(&d.derive(&p) * &q) + &(&p * &d.derive(&q)) {
                return Ok((false, format!("Leibniz fails for p = {p}, q = {q}")));
            }
        }
        for _ in 0..cases {
            let d = weitzenbock(rng.gen_range(0..=3));
            let (p, q) = (random::poly(&mut rng, 5, 4), random::poly(&mut rng, 5, 4));
            let deg = |r: &NCPoly| delta_degree(&d, r, DEFAULT_CAP);
            let (dp, dq) = (deg(&p)?, deg(&q)?);
            let prod_ok = deg(&(&p * &q))? == dp.zip(dq).map(|(a, b)| a + b);
            let sum = deg(&(&p + &q))?;
            let sum_ok = sum <= dp.max(dq) && (dp == dq || sum == dp.max(dq));
            let dp_img = d.derive(&p);
            let derived_ok = dp_img.is_zero() || deg(&dp_img)? == dp.map(|k| k - 1);
            if !(prod_ok && sum_ok && derived_ok) {
                return Ok((false, format!("degree identities fail for p = {p}, q = {q}")));
            }
        }
        for _ in 0..cases {
            let d = random::lnd(&mut rng, 3);
            let (p, q) = (random::poly(&mut rng, 4, 3), random::poly(&mut rng, 4, 3));
            let lhs = exp(&d, &(&p * &q), DEFAULT_CAP)?;
            if lhs != &exp(&d, &p, DEFAULT_CAP)? * &exp(&d, &q, DEFAULT_CAP)? {
                return Ok((false, format!("exp not multiplicative for p = {p}, q = {q}")));
            }
        }
        for _ in 0..cases {
            let d = random::lnd(&mut rng, 3);
            let (lambda, mu) = (random::rational(&mut rng), random::rational(&mut rng));
            let composed = scaled_exp(&d, &lambda)?.compose(&scaled_exp(&d, &mu)?);
            let direct = scaled_exp(&d, &(&lambda + &mu))?;
            if composed.image_x() != direct.image_x() || composed.image_y() != direct.image_y() {
                return Ok((false, format!("exp(λD)exp(μD) != exp((λ+μ)D) for λ = {lambda}, μ = {mu}")));
            }
        }
        for _ in 0..cases {
            let d = random::lnd(&mut rng, 4);
            let a = Automorphism::exponential(d.clone(), DEFAULT_CAP)?;
            if log_auto(&a, DEFAULT_CAP)? != d {
                return Ok((false, format!("log(exp(D)) != D for D(Y) = {}", d.image_y)));
            }
            if t1_scaling(&a)? != rat(1, 1) {
                return Ok((false, "exp(D) rescales T1".into()));
            }
        }
        Ok((true, format!("6 properties x {cases} cases")))
    })
}

pub fn run_all(budget: &Budget) -> Vec<CheckOutcome> {
    vec![
        constants_certification(),
        kernel_equals_rf(budget),
        freeness(budget),
        same_kernel(budget),
        absolute_constants(budget),
        rfn_spans(budget),
        nabla_identity(budget),
        analytic_properties(budget),
    ]
}
