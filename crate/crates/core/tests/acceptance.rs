//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

use seqlab_core::binet::{
    binet_coefficients, binet_eval, functional_equation_check, resolvent_coefficient, roots,
    unit_root_expansion_exact, unit_root_expansion_residual,
};
use seqlab_core::cfinite::{kbonacci, partial_sum};
use seqlab_core::exactalg::{frac, rat};
use seqlab_core::hadamard::{hadamard_product, shifted_product_gf};
use seqlab_core::identity::{
    equivalence_check, express_in_shift_basis, schumacher_rhs_gf, split_pole_at_one,
    sum_of_squares_identity, verify_schumacher,
};
use seqlab_core::{BigRational, Polynomial, RationalFunction};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const D4: [i64; 11] = [1, -2, -4, -6, -12, 4, 6, 0, 2, 0, -1];
const D5: [i64; 16] = [1, -2, -4, -7, -14, -28, 4, 6, 0, 4, 10, 0, -1, 0, 0, -1];

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c.iter().copied())
}

fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
    RationalFunction::reduce(p(n), p(d)).expect("valid generating function")
}

fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| rat(x)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn golden_square() -> Outcome {
    let start = Instant::now();
    let f = kbonacci(4).map_err(err)?.to_gf();
    let got = hadamard_product(&f, &f).map_err(err)?.gf;
    let elapsed = start.elapsed();
    let want = rf(&[0, 1, -1, -2, -2, -2, 1, 1], &D4);
    ensure(got == want, || format!("got {got}"))?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("{got} in {elapsed:?}"))
}

fn golden_shifted() -> Outcome {
    let a = shifted_product_gf(&kbonacci(4).map_err(err)?, 0, -2).map_err(err)?;
    ensure(a == rf(&[0, 2], &D4), || format!("h = 4: got {a}"))?;
    let b = shifted_product_gf(&kbonacci(5).map_err(err)?, 0, -3).map_err(err)?;
    ensure(b == rf(&[0, 4], &D5), || format!("h = 5: got {b}"))?;
    Ok("2z/D4 and 4z/D5".into())
}

fn sums_of_squares(h: usize) -> Result<RationalFunction, String> {
    let f = kbonacci(h).map_err(err)?.to_gf();
    Ok(partial_sum(&hadamard_product(&f, &f).map_err(err)?.gf))
}

fn partial_sum_split() -> Outcome {
    let (c4, rest4) = split_pole_at_one(&sums_of_squares(4)?).map_err(err)?;
    ensure(c4 == frac(1, 3), || format!("h = 4 constant {c4}"))?;
    let num = p(&[0, 2, 1, -1, -1, 5, 4, 1, 1, -1, -1]);
    let want = RationalFunction::reduce(num, p(&D4).scale(&rat(3))).map_err(err)?;
    ensure(rest4 == want, || format!("h = 4 remainder {rest4}"))?;
    let (c5, _) = split_pole_at_one(&sums_of_squares(5)?).map_err(err)?;
    ensure(c5 == frac(3, 8), || format!("h = 5 constant {c5}"))?;
    Ok("constants 1/3 and 3/8, degree-10 remainder exact".into())
}

fn shift_basis_coefficients() -> Outcome {
    let cases: [(usize, i64, &[i64], BigRational); 2] = [
        (4, 2, &[2, 1, -1, -1, 5, 4, 1, 1, -1, -1], frac(1, 3)),
        (
            5,
            3,
            &[-5, -3, 1, 4, 2, -34, -30, -20, -20, -16, 6, 6, 3, 3, 3],
            frac(1, 8),
        ),
    ];
    let mut failures = Vec::new();
    for (h, k, lambda, factor) in cases {
        let s = kbonacci(h).map_err(err)?;
        let (_, rest) = split_pole_at_one(&sums_of_squares(h)?).map_err(err)?;
        // t_n = u_n u_(n+k) / m has generating function z/D
        let product = shifted_product_gf(&s, 0, -k).map_err(err)?;
        let basis =
            RationalFunction::reduce(Polynomial::z(), product.den().clone()).map_err(err)?;
        let (g, l) = express_in_shift_basis(&rest, &basis).map_err(err)?;
        if g != factor || l != ints(lambda) {
            let shown: Vec<String> = l.iter().map(ToString::to_string).collect();
            failures.push(format!(
                "h = {h}: got factor {g} with [{}], expected factor {factor} with {lambda:?}",
                shown.join(",")
            ));
        }
    }
    if failures.is_empty() {
        Ok("h = 4 and h = 5 match".into())
    } else {
        Err(failures.join("; "))
    }
}

fn schumacher() -> Outcome {
    let start = Instant::now();
    let check = verify_schumacher(200).map_err(err)?;
    ensure(check.max_abs_discrepancy.is_zero(), || {
        format!("discrepancy {}", check.max_abs_discrepancy)
    })?;
    ensure(check.range_checked == (1, 200), || {
        format!("range {:?}", check.range_checked)
    })?;
    let rhs = schumacher_rhs_gf().map_err(err)?;
    ensure(rhs == sums_of_squares(4)?, || "GF-level mismatch".into())?;
    let report = sum_of_squares_identity(4).map_err(err)?;
    ensure(equivalence_check(&report, &rhs), || {
        "equivalence_check returned false".into()
    })?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!(
        "n = 1..200 exact, GF equal, equivalent; {elapsed:?}"
    ))
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn tetranacci_numerics() -> Outcome {
    let r = roots(4).map_err(err)?;
    let want = [
        c(1.0, 0.0),
        c(-0.114070631164587, -1.21674600397435),
        c(-1.29064880134671, 0.0),
        c(-0.114070631164587, 1.21674600397435),
        c(0.518790063675884, 0.0),
    ];
    for (i, (got, w)) in r.iter().zip(want).enumerate() {
        ensure((got - w).norm() < 1e-12, || {
            format!("r_{i} = {got}, expected {w}")
        })?;
    }
    let d = binet_coefficients(4, &kbonacci(4).map_err(err)?).map_err(err)?;
    let k = &d.coefficients;
    let named = [
        ("A", k[4], c(0.293813062773642, 0.0)),
        ("C", k[1], c(-0.0504502052166080, -0.169681902881564)),
        ("D", k[2], c(-0.192912652340427, 0.0)),
        ("E", k[3], c(-0.0504502052166080, 0.169681902881564)),
    ];
    for (name, got, w) in named {
        ensure((got - w).norm() < 1e-10, || {
            format!("{name} = {got}, expected {w}")
        })?;
    }
    ensure(k[0].norm() < 1e-10, || format!("|B| = {:e}", k[0].norm()))?;
    Ok("five roots within 1e-12, A..E within 1e-10".into())
}

fn binet_agreement() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for h in 2..=6 {
        let s = kbonacci(h).map_err(err)?;
        let d = binet_coefficients(h, &s).map_err(err)?;
        for (n, u) in s.terms(41).iter().enumerate() {
            let u = u.to_f64().expect("finite");
            let v = binet_eval(&d, n as u32).map_err(err)?.re;
            let rel = (v - u).abs() / u.max(1.0);
            worst = worst.max(rel);
            ensure(rel <= 1e-8, || format!("h = {h}, n = {n}: {v} vs {u}"))?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(2))?;
    Ok(format!("worst scaled error {worst:.1e}; {elapsed:?}"))
}

fn eigenvalue_oracle(h: usize) -> Vec<Complex64> {
    // companion matrix of z^(h+1) - 2z + 1
    let n = h + 1;
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    m[(0, n - 1)] = -1.0;
    m[(1, n - 1)] = 2.0;
    m.complex_eigenvalues().iter().copied().collect()
}

fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    for x in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .expect("equal sizes");
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}

fn root_certificates() -> Outcome {
    for h in 2..=8usize {
        let r = roots(h).map_err(err)?;
        for (i, x) in r.iter().enumerate() {
            let res = (1.0 - 2.0 * x + x.powi(h as i32 + 1)).norm();
            ensure(res < 1e-10, || {
                format!("h = {h}, root {i}: residual {res:e}")
            })?;
        }
        let dist = multiset_distance(&r, &eigenvalue_oracle(h));
        ensure(dist < 1e-8, || {
            format!("h = {h}: eigenvalue distance {dist:e}")
        })?;

        let hi = h as i64;
        let fe = functional_equation_check(
            Rational64::from_integer(hi + 1),
            c(0.5f64.powi(h as i32 + 1), 0.0),
        )
        .map_err(err)?;
        ensure(fe < 1e-10, || format!("h = {h}, t = h+1: {fe:e}"))?;
        let base = 0.5f64.powf((h + 1) as f64 / h as f64);
        for j in 0..h {
            let x = Complex64::from_polar(base, 2.0 * std::f64::consts::PI * j as f64 / h as f64);
            let fe = functional_equation_check(Rational64::new(hi + 1, hi), x).map_err(err)?;
            ensure(fe < 1e-10, || format!("h = {h}, j = {j}: {fe:e}"))?;
        }
    }
    Ok("h = 2..8 certified, eigenvalues within 1e-8, functional equations within 1e-10".into())
}

fn resolvent() -> Outcome {
    for h in 2..=6usize {
        let mut den = vec![0i64; h + 2];
        den[0] = 1;
        den[1] = -2;
        den[h + 1] = 1;
        let exact = rf(&[1], &den).series_prefix(31);
        for (n, e) in exact.iter().enumerate() {
            let e = e.to_f64().expect("finite");
            let v = resolvent_coefficient(h, n as u32).map_err(err)?;
            let rel = (v - e).norm() / e.abs().max(1.0);
            ensure(rel <= 1e-8, || format!("h = {h}, n = {n}: {v} vs {e}"))?;
        }
    }
    Ok("h = 2..6, n <= 30 within relative 1e-8".into())
}

fn small_gf() -> impl Strategy<Value = RationalFunction> {
    (
        prop::collection::vec(-3i64..=3, 0..=3),
        prop::collection::vec(-3i64..=3, 1..=2),
        1i64..=3,
    )
        .prop_map(|(num, tail, scale)| {
            let mut den = vec![scale];
            den.extend(tail);
            let num = Polynomial::from_ints(num);
            let den = Polynomial::from_ints(den);
            RationalFunction::reduce(num, den).expect("den(0) != 0")
        })
}

fn hadamard_properties() -> Outcome {
    let start = Instant::now();
    let mut runner = TestRunner::deterministic();
    let strategy = (small_gf(), small_gf());
    let ones = RationalFunction::ones();
    for case in 0..200 {
        let (f, g) = strategy
            .new_tree(&mut runner)
            .map_err(|e| format!("generator: {e}"))?
            .current();
        let fg = hadamard_product(&f, &g)
            .map_err(|e| format!("case {case}: {f} ⊙ {g}: {e}"))?
            .gf;
        let (a, b, h) = (
            f.series_prefix(30),
            g.series_prefix(30),
            fg.series_prefix(30),
        );
        for n in 0..30 {
            ensure(h[n] == &a[n] * &b[n], || {
                format!("case {case}: {f} ⊙ {g} differs at n = {n}")
            })?;
        }
        let gf = hadamard_product(&g, &f).map_err(err)?.gf;
        ensure(fg == gf, || {
            format!("case {case}: not commutative for {f}, {g}")
        })?;
        let fo = hadamard_product(&f, &ones).map_err(err)?.gf;
        ensure(fo == f, || {
            format!("case {case}: ones is not neutral for {f}")
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("200 pairs; {elapsed:?}"))
}

fn discrepancy_oracles() -> Outcome {
    // n^2 6^n from (2z/(1-2z)^2) ⊙ (3z/(1-3z)^2)
    let f = RationalFunction::reduce(p(&[0, 2]), p(&[1, -2]).pow(2)).map_err(err)?;
    let g = RationalFunction::reduce(p(&[0, 3]), p(&[1, -3]).pow(2)).map_err(err)?;
    let h = hadamard_product(&f, &g).map_err(err)?.gf;
    let brute: Vec<BigRational> = (0..25i64)
        .map(|n| rat(n * n) * rat(6).pow(n as i32))
        .collect();
    ensure(h.series_prefix(25) == brute, || {
        "product prefix is not n^2 6^n".into()
    })?;
    let derived = RationalFunction::reduce(p(&[0, 6, 36]), p(&[1, -6]).pow(3)).map_err(err)?;
    ensure(h == derived, || format!("got {h}"))?;

    for h in 2..=8 {
        ensure(unit_root_expansion_exact(h, 60).map_err(err)?, || {
            format!("h = {h}: coefficient identity fails")
        })?;
        let res = unit_root_expansion_residual(h, 0.5).map_err(err)?;
        ensure(res < 1e-12, || format!("h = {h}: residual {res:e}"))?;
    }
    Ok("n^2 6^n has denominator (1-6z)^3; j = 0 expansion holds exactly".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("golden square generating function", golden_square),
        ("golden shifted products", golden_shifted),
        ("partial-sum split", partial_sum_split),
        ("shift-basis coefficients", shift_basis_coefficients),
        ("Tetranacci sum-of-squares evaluation", schumacher),
        ("order-4 roots and coefficients", tetranacci_numerics),
        ("Binet agreement", binet_agreement),
        ("root certificates", root_certificates),
        ("resolvent coefficients", resolvent),
        ("Hadamard properties", hadamard_properties),
        ("discrepancy oracles", discrepancy_oracles),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
