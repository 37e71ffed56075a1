mod common;

use lcd_core::algebra::{Field, Form, Matrix};
use lcd_core::equiv::{apply_monomial, are_equivalent_k2};
use lcd_core::profile::ColumnProfile;
use lcd_core::LinearCode;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field_form() -> impl Strategy<Value = (Field, Form)> {
    prop_oneof![
        Just((Field::Gf2, Form::Euclidean)),
        Just((Field::Gf3, Form::Euclidean)),
        Just((Field::Gf4, Form::Euclidean)),
        Just((Field::Gf4, Form::Hermitian)),
    ]
}

fn monomial_pair() -> impl Strategy<Value = (Field, Form)> {
    prop_oneof![
        Just((Field::Gf2, Form::Euclidean)),
        Just((Field::Gf3, Form::Euclidean)),
        Just((Field::Gf4, Form::Hermitian)),
    ]
}

fn setup(seed: u64, field: Field, max_n: usize) -> (ChaCha8Rng, LinearCode) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 1 + (seed as usize % max_n);
    let k = 1 + (seed as usize / max_n) % n;
    let code = common::random_code(&mut rng, field, k, n);
    (rng, code)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lcd_iff_trivial_hull((field, form) in field_form(), seed in any::<u64>()) {
        let (_, code) = setup(seed, field, 8);
        prop_assert_eq!(code.is_lcd(form).unwrap(), code.hull_dim(form).unwrap() == 0);
    }

    #[test]
    fn dual_dimension_and_involution((field, form) in field_form(), seed in any::<u64>()) {
        let (_, code) = setup(seed, field, 8);
        let dual = code.dual(form).unwrap();
        prop_assert_eq!(dual.k(), code.n() - code.k());
        if !dual.is_zero_code() {
            prop_assert!(dual.dual(form).unwrap().same_code(&code));
            for r in code.generator().row_vecs() {
                for s in dual.generator().row_vecs() {
                    prop_assert!(field.inner(form, &s, &r).is_zero());
                }
            }
        }
    }

    #[test]
    fn euclidean_hull_of_dual(field in prop::sample::select(Field::ALL.to_vec()), seed in any::<u64>()) {
        let (_, code) = setup(seed, field, 8);
        let dual = code.dual(Form::Euclidean).unwrap();
        if !dual.is_zero_code() {
            prop_assert_eq!(code.hull_dim(Form::Euclidean).unwrap(), dual.hull_dim(Form::Euclidean).unwrap());
        }
    }

    #[test]
    fn lcd_ignores_change_of_basis((field, form) in field_form(), seed in any::<u64>()) {
        let (mut rng, code) = setup(seed, field, 8);
        let u = common::random_invertible(&mut rng, field, code.k());
        let other = LinearCode::new(u.mul(code.generator()).unwrap()).unwrap();
        prop_assert!(other.same_code(&code));
        prop_assert_eq!(other.is_lcd(form).unwrap(), code.is_lcd(form).unwrap());
    }

    #[test]
    fn griesmer_inequality(field in prop::sample::select(Field::ALL.to_vec()), seed in any::<u64>()) {
        let (_, code) = setup(seed, field, 9);
        let d = code.min_distance().unwrap();
        let q = field.q();
        let needed: usize = (0..code.k() as u32).map(|i| d.div_ceil(q.pow(i))).sum();
        prop_assert!(code.n() >= needed);
    }

    #[test]
    fn weight_distribution_totals(field in prop::sample::select(Field::ALL.to_vec()), seed in any::<u64>()) {
        let (_, code) = setup(seed, field, 8);
        let wd = code.weight_distribution().unwrap();
        prop_assert_eq!(wd.total(), (field.q() as u64).pow(code.k() as u32));
        prop_assert_eq!(wd.count(0), 1);
        prop_assert_eq!(wd.min_nonzero_weight(), Some(code.min_distance().unwrap()));
    }

    #[test]
    fn monomial_maps_preserve_gram_det((field, form) in monomial_pair(), seed in any::<u64>()) {
        let (mut rng, code) = setup(seed, field, 8);
        let map = common::random_map(&mut rng, field, code.n());
        let image = apply_monomial(&code, &map).unwrap();
        prop_assert_eq!(image.weight_distribution().unwrap(), code.weight_distribution().unwrap());
        prop_assert_eq!(
            image.gram(form).unwrap().det().unwrap(),
            code.gram(form).unwrap().det().unwrap()
        );
    }

    #[test]
    fn profile_formulas_match_matrices((field, form) in field_form(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 2 + seed as usize % 11;
        let code = common::random_code(&mut rng, field, 2, n);
        let p = ColumnProfile::of_matrix(code.generator()).unwrap();
        let q = LinearCode::new(p.to_matrix().unwrap()).unwrap();
        prop_assert_eq!(ColumnProfile::of_matrix(q.generator()).unwrap(), p.clone());
        prop_assert_eq!(p.gram(form).unwrap(), code.gram(form).unwrap());
        prop_assert_eq!(p.min_weight().unwrap(), code.min_distance().unwrap());
    }

    #[test]
    fn k2_equivalence_is_an_equivalence(field in prop::sample::select(Field::ALL.to_vec()), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 2 + seed as usize % 7;
        let a = common::random_code(&mut rng, field, 2, n);
        let b = apply_monomial(&a, &common::random_map(&mut rng, field, n)).unwrap();
        let u = common::random_invertible(&mut rng, field, 2);
        let c = LinearCode::new(u.mul(b.generator()).unwrap()).unwrap();
        let d = common::random_code(&mut rng, field, 2, n);
        prop_assert!(are_equivalent_k2(&a, &a).unwrap());
        prop_assert!(are_equivalent_k2(&a, &b).unwrap());
        prop_assert!(are_equivalent_k2(&b, &a).unwrap());
        prop_assert!(are_equivalent_k2(&a, &c).unwrap());
        prop_assert_eq!(are_equivalent_k2(&a, &d).unwrap(), are_equivalent_k2(&d, &c).unwrap());
    }

    #[test]
    fn det_is_multiplicative(field in prop::sample::select(Field::ALL.to_vec()), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = 1 + seed as usize % 5;
        let a = common::random_matrix(&mut rng, field, k, k);
        let b = common::random_matrix(&mut rng, field, k, k);
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), field.mul(a.det().unwrap(), b.det().unwrap()));
        prop_assert_eq!(a.rank(), a.transpose().rank());
        prop_assert_eq!(a.det().unwrap().is_zero(), a.rank() < k);
        let r = a.rref().matrix;
        prop_assert_eq!(r.rref().matrix, r);
        let _ = Matrix::identity(field, k);
    }
}
