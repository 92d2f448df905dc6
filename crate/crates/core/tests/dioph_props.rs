use dioexp_core::dioph::{
    best_approx_exhaustive, best_approx_lll, dirichlet_check, fit_exponent, flow_trace,
    is_lll_reduced, lll_reduce, real_f64, real_int, to_f64, BestApproxRecord, Method,
    MethodChoice, RealMatrix,
};
use dioexp_core::exactlin::{determinant, rat, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Convergent pairs `(F_{i+1}, F_i)` of the golden ratio.
fn fibonacci_pairs(limit: i64) -> Vec<(i64, i64)> {
    let (mut a, mut b) = (1i64, 1i64);
    let mut out = Vec::new();
    while b <= limit {
        out.push((b, a));
        (a, b) = (b, a + b);
    }
    out
}

#[test]
fn golden_shell_minimizers_are_convergents() {
    let t = 1_000_000u64;
    let mat = RealMatrix::parse("1 phi", 128).unwrap();
    let records = best_approx_exhaustive(&mat, t).unwrap();
    // Within a dyadic shell the last convergent is the best approximation.
    let mut expect: Vec<Vec<i64>> = Vec::new();
    let mut last_shell = None;
    for (p, q) in fibonacci_pairs(t as i64) {
        let shell = 64 - (p as u64 - 1).leading_zeros();
        if last_shell == Some(shell) {
            expect.pop();
        }
        expect.push(vec![p, -q]);
        last_shell = Some(shell);
    }
    let got: Vec<Vec<i64>> = records.iter().map(|r| r.q.clone()).collect();
    assert_eq!(got, expect);
    let est = fit_exponent(&records, (1, t)).unwrap();
    assert!((0.9..=1.1).contains(&est.beta_hat), "{}", est.beta_hat);
}

#[test]
fn golden_envelope_and_bounded_systole() {
    let mat = RealMatrix::parse("1 phi", 128).unwrap();
    let rep = dirichlet_check(&mat, 10_000, 0.15, MethodChoice::Auto).unwrap();
    assert!((0.9..=1.1).contains(&rep.envelope_exponent), "{}", rep.envelope_exponent);
    assert!(rep.pigeonhole_ok && rep.floor_ok);
    let trace = flow_trace(&mat, 2.0 * (10_000f64).ln(), 6).unwrap();
    assert!(trace.iter().all(|p| p.log_systole() > -1.0));
}

#[test]
fn rational_relation_is_infinite_everywhere() {
    let mat = RealMatrix::parse("1 1/2", 128).unwrap();
    let rep = dirichlet_check(&mat, 1000, 0.15, MethodChoice::Auto).unwrap();
    assert!(rep.is_infinite());
    for recs in [best_approx_exhaustive(&mat, 1000).unwrap(), best_approx_lll(&mat, 1000).unwrap()] {
        assert_eq!(recs.last().unwrap().q, vec![1, -2]);
        assert!(fit_exponent(&recs, (1, 1000)).unwrap().is_infinite());
    }
}

#[test]
fn methods_agree_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for i in 0..6 {
        let (m, n) = [(1, 2), (2, 1), (1, 1)][i % 3];
        let mat = RealMatrix::random(m, m + n, &mut rng, 128).unwrap();
        let a = best_approx_exhaustive(&mat, 500).unwrap();
        let b = best_approx_lll(&mat, 500).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.q, y.q);
            assert!(((x.quality_f64() - y.quality_f64()) / x.quality_f64()).abs() < 1e-9);
        }
    }
}

fn records(qualities: &[f64]) -> Vec<BestApproxRecord> {
    qualities
        .iter()
        .enumerate()
        .map(|(j, &q)| BestApproxRecord {
            q: vec![1 << j],
            norm: 1 << j,
            quality: real_f64(q, 128),
            exact_quality: None,
            method: Method::Exhaustive,
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fit_is_scale_invariant(
        logs in prop::collection::vec(-3.0f64..0.0, 6..14),
        e in -40i32..40,
        c in 0.01f64..100.0,
    ) {
        let mut q = 1.0;
        let qualities: Vec<f64> = logs.iter().map(|l| { q *= l.exp(); q }).collect();
        let base = fit_exponent(&records(&qualities), (1, u64::MAX)).unwrap();
        let mut scaled = records(&qualities);
        for r in &mut scaled {
            r.quality = &r.quality * real_f64(2f64.powi(e), 128);
        }
        let two = fit_exponent(&scaled, (1, u64::MAX)).unwrap();
        prop_assert_eq!(base.beta_hat.to_bits(), two.beta_hat.to_bits());
        let mut any = records(&qualities);
        for r in &mut any {
            r.quality = &r.quality * real_f64(c, 128);
        }
        let other = fit_exponent(&any, (1, u64::MAX)).unwrap();
        prop_assert!((base.beta_hat - other.beta_hat).abs() < 1e-12);
    }

    #[test]
    fn lll_transform_is_unimodular(rows in prop::collection::vec(prop::collection::vec(-60i64..=60, 4), 4)) {
        let exact: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        prop_assume!(determinant(&exact) != rat(0));
        let basis: Vec<Vec<_>> =
            rows.iter().map(|r| r.iter().map(|&x| real_int(x as i128, 128)).collect()).collect();
        let out = lll_reduce(&basis, 0.99, 128).unwrap();
        let t: Vec<Vec<Rational>> =
            out.transform.iter().map(|r| r.iter().map(|&x| rat(x as i64)).collect()).collect();
        let det = determinant(&t);
        prop_assert!(det == rat(1) || det == rat(-1));
        for (i, trow) in out.transform.iter().enumerate() {
            for j in 0..4 {
                let v: i128 = trow.iter().zip(&rows).map(|(a, r)| a * r[j] as i128).sum();
                prop_assert_eq!(to_f64(&out.basis[i][j]), v as f64);
            }
        }
        prop_assert!(is_lll_reduced(&out.basis, 0.99, 1e-9));
    }

    #[test]
    fn records_strictly_improve(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cols = rng.gen_range(2..=3);
        let mat = RealMatrix::random(1, cols, &mut rng, 128).unwrap();
        let recs = best_approx_exhaustive(&mat, 300).unwrap();
        for w in recs.windows(2) {
            prop_assert!(w[0].norm < w[1].norm && w[1].quality < w[0].quality);
            prop_assert!(w[0].shell() < w[1].shell());
        }
        for r in &recs {
            prop_assert!(r.q.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0));
            prop_assert_eq!(r.q.iter().map(|c| c.unsigned_abs()).max().unwrap(), r.norm);
        }
    }
}
