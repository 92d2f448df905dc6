use dioexp_core::exactlin::{
    image_dim, kernel, rank, rank_of_rows, ratio, Rational, RationalMatrix, RationalSubspace,
};
use num_traits::Zero;
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(entry(), r * c)
            .prop_map(move |data| RationalMatrix::new(r, c, data).unwrap())
    })
}

fn subspace(ambient: usize) -> impl Strategy<Value = RationalSubspace> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, ambient), 0..=ambient).prop_map(
        move |rows| {
            let rows: Vec<Vec<Rational>> =
                rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
            RationalSubspace::span(ambient, &rows).unwrap()
        },
    )
}

fn plane() -> impl Strategy<Value = RationalSubspace> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 2).prop_map(|rows| {
        let rows: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
        RationalSubspace::span(4, &rows).unwrap()
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix(4, 5)) {
        let k = kernel(&m);
        prop_assert_eq!(rank(&m) + k.dim(), m.cols());
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rank_agrees_with_row_rank(m in matrix(4, 4)) {
        prop_assert_eq!(rank(&m), rank_of_rows(&m.row_vecs()));
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn modularity_and_symmetry(a in subspace(4), b in subspace(4)) {
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert_eq!(&s, &b.sum(&a).unwrap());
        prop_assert_eq!(&i, &b.intersect(&a).unwrap());
        prop_assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
        prop_assert!(a.is_subspace_of(&s) && b.is_subspace_of(&s));
    }

    #[test]
    fn canonical_form_is_basis_independent(a in subspace(4)) {
        let mut rows = a.basis().to_vec();
        rows.reverse();
        if let Some(first) = rows.first().cloned() {
            let last = rows.len() - 1;
            rows[last] = rows[last].iter().zip(&first).map(|(x, y)| x + y + y).collect();
        }
        prop_assert_eq!(RationalSubspace::span(4, &rows).unwrap(), a);
    }

    #[test]
    fn pluecker_separates_planes(a in plane(), b in plane()) {
        prop_assume!(a.dim() == 2 && b.dim() == 2);
        prop_assert_eq!(a == b, a.pluecker().unwrap() == b.pluecker().unwrap());
    }

    #[test]
    fn full_space_image_is_rank(m in matrix(3, 4)) {
        prop_assert_eq!(image_dim(&m, &RationalSubspace::full(m.cols())).unwrap(), rank(&m));
        prop_assert_eq!(image_dim(&m, &kernel(&m)).unwrap(), 0);
    }
}
