use dioexp_core::exactlin::{rat, ratio, Rational, RationalMatrix, RationalSubspace};
use dioexp_core::pencil::{
    bounds, enumerate_rational_pencils, hull_span, obstruction_holds, pencil_contains,
    pencil_exponent, primitive_vectors, Exponent, MatrixFamily, Pencil,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RationalMatrix {
    let data = (0..rows * cols).map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
    RationalMatrix::new(rows, cols, data).unwrap()
}

/// `(2, 2)` matrices sending `span{e1, e2, e3}` into the line `span{(1, 1)}`.
fn line_pencil_member(rng: &mut ChaCha8Rng) -> RationalMatrix {
    let a: Vec<Rational> = (0..3).map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
    let (b1, b2) = (rat(rng.gen_range(-9..=9)), rat(rng.gen_range(10..=19)));
    RationalMatrix::from_rows(vec![
        vec![a[0].clone(), a[1].clone(), a[2].clone(), b1],
        vec![a[0].clone(), a[1].clone(), a[2].clone(), b2],
    ])
    .unwrap()
}

fn small_subspaces(dim: usize) -> Vec<RationalSubspace> {
    let vs: Vec<Vec<Rational>> =
        primitive_vectors(dim, 1).iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect();
    let mut out = vec![RationalSubspace::zero(dim)];
    for i in 0..vs.len() {
        out.push(RationalSubspace::span(dim, &vs[i..=i]).unwrap());
        for j in i + 1..vs.len() {
            let w = RationalSubspace::span(dim, &[vs[i].clone(), vs[j].clone()]).unwrap();
            if !out.contains(&w) {
                out.push(w);
            }
        }
    }
    out
}

#[test]
fn phi_is_monotone_and_submodular() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let samples = (0..3).map(|_| random_matrix(&mut rng, 2, 4)).collect();
    let f = MatrixFamily::new(2, 2, samples, "random").unwrap();
    let subs = small_subspaces(4);
    let phi: Vec<usize> = subs.iter().map(|w| f.phi(w).unwrap()).collect();
    for i in 0..subs.len() {
        for j in 0..subs.len() {
            if subs[i].is_subspace_of(&subs[j]) {
                assert!(phi[i] <= phi[j]);
            }
            if i < j {
                let s = f.phi(&subs[i].sum(&subs[j]).unwrap()).unwrap();
                let t = f.phi(&subs[i].intersect(&subs[j]).unwrap()).unwrap();
                assert!(s + t <= phi[i] + phi[j], "{} {}", subs[i], subs[j]);
            }
        }
    }
}

#[test]
fn constructed_line_pencil_is_found() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let samples = (0..6).map(|_| line_pencil_member(&mut rng)).collect();
    let f = MatrixFamily::new(2, 2, samples, "line pencil").unwrap();
    let w = RationalSubspace::span_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]).unwrap();
    let list = enumerate_rational_pencils(&f, 1).unwrap();
    assert_eq!(list[0], Pencil { w: w.clone(), r: 1 });
    assert_eq!(pencil_exponent(&list[0]), Exponent::Finite(rat(2)));
    let b = bounds(&f, 1).unwrap();
    assert_eq!(b.lower, Exponent::Finite(rat(2)));
    assert!(pencil_contains(&f, &Pencil::new(w, 1).unwrap()).unwrap());
}

#[test]
fn hull_members_lie_in_every_containing_pencil() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let samples: Vec<RationalMatrix> = (0..5).map(|_| line_pencil_member(&mut rng)).collect();
    let f = MatrixFamily::new(2, 2, samples, "line pencil").unwrap();
    let hull = hull_span(&f).unwrap();
    let pencils: Vec<Pencil> = enumerate_rational_pencils(&f, 1)
        .unwrap()
        .into_iter()
        .filter(|p| pencil_contains(&f, p).unwrap())
        .collect();
    assert!(!pencils.is_empty());
    let mut tested = 0;
    for _ in 0..20 {
        let m = line_pencil_member(&mut rng);
        if hull.contains(&m).unwrap() {
            tested += 1;
            let single = MatrixFamily::new(2, 2, vec![m], "member").unwrap();
            for p in &pencils {
                assert!(pencil_contains(&single, p).unwrap());
            }
        }
    }
    assert!(tested > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn enumerated_pencils_are_obstructions(seed in any::<u64>(), kill in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut samples: Vec<RationalMatrix> = (0..3).map(|_| random_matrix(&mut rng, 1, 3)).collect();
        if kill {
            // Force the kernel vector (1, 1, -1) into every sample.
            for s in &mut samples {
                let v = s.get(0, 0) + s.get(0, 1);
                s.set(0, 2, v);
            }
        }
        let f = MatrixFamily::new(1, 2, samples, "random").unwrap();
        let dirichlet = Exponent::Finite(f.dirichlet());
        for p in enumerate_rational_pencils(&f, 1).unwrap() {
            prop_assert!(obstruction_holds(p.w.dim(), p.r, 1, 2));
            prop_assert!(pencil_exponent(&p) > dirichlet);
            prop_assert!(pencil_contains(&f, &p).unwrap());
        }
        let (b1, b2) = (bounds(&f, 1).unwrap(), bounds(&f, 2).unwrap());
        prop_assert!(b1.lower >= dirichlet);
        prop_assert!(b2.lower >= b1.lower);
        prop_assert_eq!(b1.lower.is_infinite(), kill);
    }

    #[test]
    fn containment_is_monotone_in_r(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples = (0..2).map(|_| line_pencil_member(&mut rng)).collect();
        let f = MatrixFamily::new(2, 2, samples, "line pencil").unwrap();
        for w in small_subspaces(4).into_iter().filter(|w| !w.is_zero()) {
            let mut inside = false;
            for r in 0..=w.dim() {
                let now = pencil_contains(&f, &Pencil::new(w.clone(), r).unwrap()).unwrap();
                prop_assert!(!inside || now);
                inside = now;
            }
            prop_assert!(inside);
        }
    }
}
