use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use quiver_hall::gfq::{Matrix, Prime};
use quiver_hall::hall::{q_power, HallAlgebra};
use quiver_hall::quiver::Quiver;

mod common;
use common::{all_morphisms, invertible_from_seed};

fn algebra(name: &str, q: u32, bound: usize) -> HallAlgebra {
    HallAlgebra::new(
        Quiver::builtin(name).unwrap(),
        Prime::new(q).unwrap(),
        bound,
    )
    .unwrap()
}

/// `Σ_E P^E_{MN} / a_E = q^{dim Ext¹(M,N) - dim Hom(M,N)}`: extensions of `M` by `N`, counted
/// two ways.
#[test]
fn extension_count_matches_ext_dimension() {
    for (name, q) in [("a2", 2), ("a2", 3), ("a3", 2), ("a3", 3), ("d4", 2)] {
        let h = algebra(name, q, 4);
        let reg = h.registry().clone();
        for m in reg.classes_up_to(4) {
            for n in reg.classes_up_to(4) {
                let d = &reg.class(m).dims + &reg.class(n).dims;
                if d.total() > 4 {
                    continue;
                }
                let mut sum = BigRational::zero();
                for &e in reg.classes_of(&d).unwrap() {
                    sum += BigRational::new(h.exact_pair_count(e, m, n).unwrap(), h.aut(e));
                }
                let (rm, rn) = (&reg.class(m).representative, &reg.class(n).representative);
                let k = rm.ext1_dim(rn).unwrap() as i64 - rm.hom_dim(rn).unwrap() as i64;
                assert_eq!(
                    sum,
                    q_power(q, k),
                    "{name} q={q} M={} N={}",
                    reg.class(m).label,
                    reg.class(n).label
                );
            }
        }
    }
}

/// Coefficients of `[M]·[N]` are exactly the subobject counts `g^E_{MN}`.
#[test]
fn product_coefficients_are_subobject_counts() {
    let h = algebra("a3", 3, 4);
    let reg = h.registry().clone();
    for m in reg.classes_up_to(2) {
        for n in reg.classes_up_to(2) {
            let prod = h.multiply(&h.basis(m), &h.basis(n)).unwrap();
            for (e, c) in prod.terms() {
                assert!(c.is_integer());
                assert_eq!(
                    c.to_integer(),
                    BigInt::from(h.hall_number(e, m, n).unwrap())
                );
            }
        }
    }
}

/// Subobject and quotient classes do not depend on the basis chosen for the subspaces.
#[test]
fn sub_and_quotient_ignore_the_chosen_basis() {
    let h = algebra("a3", 2, 3);
    let reg = h.registry().clone();
    let p = reg.prime();
    let mut checked = 0;
    for e in reg.classes_up_to(3) {
        let re = &reg.class(e).representative;
        for n in reg.classes_up_to(3) {
            let rn = &reg.class(n).representative;
            for f in all_morphisms(rn, re) {
                if !f.iter().zip(&rn.dims().0).all(|(fv, &k)| fv.rank() == k) {
                    continue;
                }
                // Rows of f_v^T span the image of f at v.
                let bases: Vec<Matrix> = f.iter().map(Matrix::transpose).collect();
                let (sub, quot) = re
                    .sub_and_quotient(&bases)
                    .unwrap()
                    .expect("image is a subrepresentation");
                let changed: Vec<Matrix> = bases
                    .iter()
                    .enumerate()
                    .map(|(v, b)| invertible_from_seed(p, b.rows(), 7 + v as u64).mul(b))
                    .collect();
                let (sub2, quot2) = re.sub_and_quotient(&changed).unwrap().unwrap();
                assert_eq!(reg.canonical_class(&sub).unwrap(), n);
                assert_eq!(reg.canonical_class(&sub2).unwrap(), n);
                assert_eq!(
                    reg.canonical_class(&quot).unwrap(),
                    reg.canonical_class(&quot2).unwrap()
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn dependent_bases_are_rejected() {
    let h = algebra("a2", 2, 2);
    let reg = h.registry().clone();
    let e = reg.by_label("(1,1)").unwrap();
    let p = Prime::new(2).unwrap();
    let twice = Matrix::from_entries(p, 2, 1, &[1, 1]).unwrap();
    let one = Matrix::from_entries(p, 1, 1, &[1]).unwrap();
    assert!(reg
        .class(e)
        .representative
        .sub_and_quotient(&[twice, one])
        .is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coproduct_is_grade_preserving(i in 0usize..1000, q in prop_oneof![Just(2u32), Just(3)]) {
        let h = algebra("a3", q, 4);
        let classes = h.registry().classes_up_to(4);
        let e = classes[i % classes.len()];
        for ((a, b), _) in h.comultiply_basis(e).unwrap().terms() {
            prop_assert_eq!(&h.grade(a) + &h.grade(b), h.grade(e));
        }
        // Counit on either side recovers [E].
        let delta = h.comultiply_basis(e).unwrap();
        let zero = h.registry().zero();
        prop_assert_eq!(delta.coefficient(zero, e), BigRational::from_integer(1.into()));
        prop_assert_eq!(delta.coefficient(e, zero), BigRational::from_integer(1.into()));
    }
}

#[test]
fn unit_and_counit_axioms() {
    for (name, q) in [("a2", 3), ("a3", 2), ("d4", 2)] {
        let h = algebra(name, q, 4);
        let zero = h.registry().zero();
        let one = h.unit();
        for e in h.registry().classes_up_to(4) {
            let v = h.basis(e);
            assert_eq!(h.multiply(&one, &v).unwrap(), v);
            assert_eq!(h.multiply(&v, &one).unwrap(), v);
            // (ε ⊗ id)Δ[E] = [E] = (id ⊗ ε)Δ[E]
            let delta = h.comultiply_basis(e).unwrap();
            let mut left = h.zero();
            let mut right = h.zero();
            for ((a, b), c) in delta.terms() {
                if a == zero {
                    left.add_term(b, c.clone());
                }
                if b == zero {
                    right.add_term(a, c.clone());
                }
            }
            assert_eq!(left, v);
            assert_eq!(right, v);
        }
    }
}
