use grassbgg::algebra::{fixture_abelian, fixture_ideal_quotient, fixture_product_of_curves};
use grassbgg::basis::binomial;
use grassbgg::bgg::{build_complex, exactness_at};
use grassbgg::bivector::{min_rank_in_subspace, pfaffian, secant_membership, skew_normal_form, SearchMode};
use grassbgg::{Bivector, ExactMatrix, ExteriorElement, Field, FieldScalar};
use proptest::prelude::*;

const F: Field = Field::Rational;

fn ints(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, len)
}

fn element(q: usize, deg: usize, c: &[i64]) -> ExteriorElement {
    let coords: Vec<FieldScalar> = c.iter().map(|&x| F.from_i64(x)).collect();
    ExteriorElement::from_coords(F, q, deg, &coords).unwrap()
}

fn skew(q: usize, c: &[i64]) -> ExactMatrix {
    Bivector::from_coords(F, q, &c.iter().map(|&x| F.from_i64(x)).collect::<Vec<_>>()).unwrap().matrix().clone()
}

fn square(n: usize, c: &[i64]) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, F, |i, j| F.from_i64(c[i * n + j]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wedge_graded_commutative(a in 1usize..=3, b in 1usize..=3, seed in ints(64)) {
        let q = 6;
        let x = element(q, a, &seed[..binomial(q, a)]);
        let y = element(q, b, &seed[20..20 + binomial(q, b)]);
        let sign = F.from_i64(if a * b % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(x.wedge(&y).unwrap(), y.wedge(&x).unwrap().scale(&sign).unwrap());
    }

    #[test]
    fn wedge_associative(c in ints(6 + 15 + 6)) {
        let x = element(6, 1, &c[..6]);
        let y = element(6, 2, &c[6..21]);
        let z = element(6, 1, &c[21..]);
        prop_assert_eq!(x.wedge(&y).unwrap().wedge(&z).unwrap(), x.wedge(&y.wedge(&z).unwrap()).unwrap());
    }

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..7, c in ints(42)) {
        let m = ExactMatrix::from_fn(rows, cols, F, |i, j| F.from_i64(c[i * cols + j]));
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in kernel {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(FieldScalar::is_zero));
        }
    }

    #[test]
    fn psi_antisymmetric(i in 0usize..5, j in 0usize..5) {
        let k = element(5, 2, &[1, 0, 0, 0, 0, 0, 0, 1, 0, 0]);
        for a in [fixture_product_of_curves(2, 3).unwrap(), fixture_ideal_quotient(5, 3, &[k]).unwrap()] {
            let unit = |n: usize| (0..5).map(|t| F.from_i64((t == n) as i64)).collect::<Vec<_>>();
            let ij = a.multiply(1, &unit(i), &unit(j)).unwrap();
            let ji = a.multiply(1, &unit(j), &unit(i)).unwrap();
            prop_assert!(ij.iter().zip(&ji).all(|(x, y)| (x + y).is_zero()));
        }
    }

    #[test]
    fn rank_is_congruence_invariant(c in ints(15), m in ints(36)) {
        let a = Bivector::from_matrix(skew(6, &c)).unwrap();
        let g = square(6, &m);
        prop_assume!(g.rank() == 6);
        prop_assert_eq!(a.congruent(&g).unwrap().rank(), a.rank());
    }

    #[test]
    fn pfaffian_squared_is_det(n in 1usize..=4, c in ints(28)) {
        let q = 2 * n;
        let a = skew(q, &c[..binomial(q, 2)]);
        let pf = pfaffian(&a).unwrap();
        prop_assert_eq!(&pf * &pf, a.det().unwrap());
    }

    #[test]
    fn normal_form_recomposes(q in 2usize..=7, c in ints(21)) {
        let v = Bivector::from_matrix(skew(q, &c[..binomial(q, 2)])).unwrap();
        let nf = skew_normal_form(&v).unwrap();
        prop_assert_eq!(nf.vectors.len(), v.rank());
        prop_assert_eq!(nf.recompose(F, q).unwrap(), v.to_exterior());
        for k in 0..=q / 2 {
            prop_assert_eq!(secant_membership(&v, k).unwrap(), v.rank() <= 2 * k);
        }
    }

    #[test]
    fn complex_squares_to_zero(q in 3usize..=5, r in 1usize..=3, dim in 1usize..=3, c in ints(15)) {
        prop_assume!(dim <= q);
        let a = fixture_abelian(q).unwrap();
        let w = ExactMatrix::from_fn(dim, q, F, |i, j| F.from_i64(c[i * q + j]));
        prop_assume!(w.rank() == dim);
        let cx = build_complex(&a, &w, r).unwrap();
        for pair in cx.mus.windows(2) {
            prop_assert!(pair[1].mul(&pair[0]).unwrap().is_zero());
        }
    }

    #[test]
    fn exactness_is_basis_independent(c in ints(12), g in ints(4)) {
        let a = fixture_product_of_curves(2, 4).unwrap();
        let w = ExactMatrix::from_fn(2, 6, F, |i, j| F.from_i64(c[i * 6 + j]));
        let g = square(2, &g);
        prop_assume!(w.rank() == 2 && g.rank() == 2);
        let w2 = g.mul(&w).unwrap();
        let e1 = exactness_at(&build_complex(&a, &w, 2).unwrap());
        let e2 = exactness_at(&build_complex(&a, &w2, 2).unwrap());
        prop_assert_eq!(e1, e2);
    }

    #[test]
    fn exhaustive_minimum_ignores_basis_order(c in ints(30)) {
        let k: Vec<Bivector> = c.chunks(10).map(|ch| Bivector::from_matrix(skew(5, ch)).unwrap()).collect();
        let coords: Vec<Vec<FieldScalar>> = k.iter().map(Bivector::to_coords).collect();
        prop_assume!(ExactMatrix::from_rows(F, coords).unwrap().rank() == 3);
        let mode = SearchMode::ExhaustiveFp { p: 7, budget: 1000 };
        let forward = min_rank_in_subspace(&k, &mode);
        let reversed: Vec<Bivector> = k.iter().rev().cloned().collect();
        let backward = min_rank_in_subspace(&reversed, &mode);
        // a basis that degenerates mod 7 is rejected either way
        match (forward, backward) {
            (Ok(f), Ok(b)) => {
                prop_assert_eq!(f.min_rank, b.min_rank);
                prop_assert!(f.recheck(&k).unwrap());
            }
            (f, b) => prop_assert_eq!(f.is_err(), b.is_err()),
        }
    }
}
