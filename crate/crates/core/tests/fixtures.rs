use grassbgg::algebra::{fixture_abelian, fixture_product_of_curves, fixture_quotient, format};
use grassbgg::bgg::{build_complex, exactness_at};
use grassbgg::bivector::{
    confirm_over_rationals, min_rank_in_subspace, secant_membership, skew_normal_form, SearchMode,
};
use grassbgg::random::random_subspace;
use grassbgg::verify::{kernel_psi2, verify, Status, VerifyOptions};
use grassbgg::{Bivector, ExactMatrix, ExteriorElement, Field};

const F: Field = Field::Rational;

fn e(q: usize, i: usize, j: usize) -> ExteriorElement {
    ExteriorElement::monomial(F, q, &[i, j]).unwrap()
}

#[test]
fn product_two_three_kernel_has_rank_two_in_second_factor() {
    let a = fixture_product_of_curves(2, 3).unwrap();
    let k = kernel_psi2(&a).unwrap();
    assert_eq!(k.len(), 4);
    let c = min_rank_in_subspace(&k, &SearchMode::ExhaustiveFp { p: 5, budget: 1000 }).unwrap();
    assert_eq!(c.min_rank, Some(2));
    assert_eq!(c.per_prime[0].points, 156);
    let w = c.witness.as_ref().unwrap().to_exterior();
    assert!(w.terms().all(|(key, _)| key.iter().all(|&i| i >= 2)), "{w}");
    let (_, lifted) = confirm_over_rationals(&c, &k).unwrap().unwrap();
    assert_eq!(lifted.rank(), 2);
}

#[test]
fn one_dimensional_subspaces() {
    let k = [Bivector::from_exterior(&e(4, 0, 1)).unwrap()];
    let c = min_rank_in_subspace(&k, &SearchMode::consensus()).unwrap();
    assert_eq!(c.min_rank, Some(2));
    assert_eq!(c.witness.unwrap().to_exterior().to_string(), "1*e0^e1");

    let k = [Bivector::from_exterior(&e(4, 0, 1).try_add(&e(4, 2, 3)).unwrap()).unwrap()];
    assert_eq!(min_rank_in_subspace(&k, &SearchMode::consensus()).unwrap().min_rank, Some(4));
}

#[test]
fn seeded_rank_four_normal_form() {
    let x = random_subspace(6, 4, 3).unwrap();
    let vec = |i: usize| ExteriorElement::vector(F, x.row(i)).unwrap();
    let v = vec(0).wedge(&vec(1)).unwrap().try_add(&vec(2).wedge(&vec(3)).unwrap()).unwrap();
    let v = Bivector::from_exterior(&v).unwrap();
    assert_eq!(v.rank(), 4);
    let nf = skew_normal_form(&v).unwrap();
    assert_eq!(nf.vectors.len(), 4);
    assert_eq!(nf.recompose(F, 6).unwrap(), v.to_exterior());
    assert_eq!(ExactMatrix::from_rows(F, nf.vectors.clone()).unwrap().rank(), 4);
}

#[test]
fn top_secant_contains_everything() {
    for q in 2..=7 {
        let coords: Vec<_> = (0..q * (q - 1) / 2).map(|i| F.from_i64(i as i64 * 7 % 5 - 2)).collect();
        let v = Bivector::from_coords(F, q, &coords).unwrap();
        assert!(secant_membership(&v, q / 2).unwrap());
    }
}

#[test]
fn quotient_round_trips_through_text() {
    let k = e(5, 0, 1).try_add(&e(5, 2, 3)).unwrap();
    let a = fixture_quotient(5, 3, &[k]).unwrap();
    let text = format::serialize(&a).unwrap();
    assert_eq!(format::parse(&text).unwrap(), a);
}

#[test]
fn coordinate_plane_in_product_is_not_exact() {
    let a = fixture_product_of_curves(2, 2).unwrap();
    let w = ExactMatrix::from_ints(F, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
    let rep = exactness_at(&build_complex(&a, &w, 2).unwrap());
    assert!(rep.injective_at_0);
    assert_eq!(rep.exact_middle_degrees, vec![false]);
}

#[test]
fn anisotropic_pencil_shows_the_finite_field_caveat() {
    // Pf(s(e01 + e23) + t(e02 + 13 e13)) = s^2 - 13 t^2 has no zero over Q,
    // F_5, F_7 or F_11, but does over C: the certified min rank 4 overstates
    // the complex one, and the bound for r = 1 fails
    let k = [
        e(4, 0, 1).try_add(&e(4, 2, 3)).unwrap(),
        e(4, 0, 2).try_add(&e(4, 1, 3).scale(&F.from_i64(13)).unwrap()).unwrap(),
    ];
    let a = fixture_quotient(4, 3, &k).unwrap();
    let out = verify(&a, &VerifyOptions::default()).unwrap();
    assert_eq!(out.certificate.as_ref().unwrap().min_rank, Some(4));
    assert_eq!(out.status, Status::Violated);
    assert_eq!(out.status.exit_code(), 2);
}

#[test]
fn verify_is_deterministic() {
    let a = fixture_abelian(5).unwrap();
    let opts = VerifyOptions { seed: 11, ..VerifyOptions::default() };
    assert_eq!(verify(&a, &opts).unwrap().report.to_string(), verify(&a, &opts).unwrap().report.to_string());
}
