mod common;

use flatcausal::charpoly::{char_polynomial, check_positive_all_s, is_characteristic, q_direct, q_from_parabola};
use flatcausal::classify::{
    affine_spectrum, apply_certificate, realize, verify_equivalence, EquivalenceCertificate,
};
use flatcausal::construction::{check_free, ManifoldData};
use flatcausal::minkowski::{l0, Vector};
use flatcausal::symmat::{
    congruence, det_poly, pd_inv_sqrt, psd_sqrt, rank_tol, sym_eig, Matrix, SymMatrix,
};
use flatcausal::MatrixParabola;
use proptest::prelude::*;
use rand::Rng;

use common::*;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(64)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn eigen_decomposition_reconstructs(seed in any::<u64>(), m in 1usize..6) {
        let mut rng = rng(seed);
        let s = random_sym(&mut rng, m, 3.0);
        let eig = sym_eig(&s).unwrap();
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(eig.reconstruct().max_abs_diff(&s) <= 1e-12 * s.scale());
        let q = &eig.vectors.transpose() * &eig.vectors;
        prop_assert!(q.max_abs_diff(&Matrix::identity(m)) <= 1e-12);
    }

    #[test]
    fn square_roots_square_back(seed in any::<u64>(), m in 1usize..5) {
        let mut rng = rng(seed);
        let g = conditioned(&mut rng, m, 10.0);
        let a = SymMatrix::symmetrized(&(&g.transpose() * &g));
        let root = psd_sqrt(&a).unwrap().to_matrix();
        prop_assert!(SymMatrix::symmetrized(&(&root * &root)).max_abs_diff(&a) <= 1e-10 * a.scale());
        let inv = pd_inv_sqrt(&a, 1e-9).unwrap();
        prop_assert!(congruence(&a, &inv.to_matrix()).unwrap().max_abs_diff(&SymMatrix::identity(m)) <= 1e-9);
    }

    #[test]
    fn determinant_polynomial_interpolates(seed in any::<u64>(), s in -3.0f64..3.0) {
        let mut rng = rng(seed);
        let (p, _) = random_parabola(&mut rng, 3, 5.0);
        let det = det_poly(&p).unwrap();
        let direct = p.at(s).to_matrix().det();
        prop_assert!((det.eval(s) - direct).abs() <= 1e-8 * (1.0 + direct.abs()) * p.scale().powi(p.dim() as i32));
    }

    #[test]
    fn parabola_matches_gram_oracle(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let d = random_data(&mut rng, 3, 30.0);
        let p = char_polynomial(&d.build());
        let oracle = gram_oracle(&d);
        prop_assert!(p.max_abs_diff(&oracle) <= 1e-10 * oracle.scale());
    }

    #[test]
    fn rank_of_c_counts_degeneracy(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let d = random_data(&mut rng, 3, 10.0);
        let data = d.build();
        let p = char_polynomial(&data);
        prop_assert_eq!(p.dim() - rank_tol(p.c(), 1e-9), data.signature().k);
    }

    #[test]
    fn shift_along_v1_shifts_parameter(seed in any::<u64>(), beta in -2.0f64..2.0) {
        let mut rng = rng(seed);
        let data = random_data(&mut rng, 3, 5.0).build();
        let p = char_polynomial(&data);
        let z: Vec<i64> = (0..data.m()).map(|_| rng.gen_range(-2..=2)).collect();
        let v = Vector::from((0..data.n()).map(|_| rng.gen_range(-1.0..1.0)).collect::<Vec<_>>());
        let shifted = v.axpy(beta, &data.frame().v1());
        let zf: Vec<f64> = z.iter().map(|&c| c as f64).collect();
        let lhs = q_direct(&data, &z, &shifted).unwrap();
        let expected = p.quadratic_form(l0(&v) + beta, &zf);
        prop_assert!((lhs - expected).abs() <= 1e-9 * (1.0 + lhs.abs()));
        let base = q_from_parabola(&p, &z, &v);
        prop_assert!((base - p.quadratic_form(l0(&v), &zf)).abs() <= 1e-12 * (1.0 + base.abs()));
    }

    #[test]
    fn rescaling_the_null_pair_rescales_the_parameter(seed in any::<u64>(), t in 0.2f64..5.0, s in -2.0f64..2.0) {
        let mut rng = rng(seed);
        let d = random_data(&mut rng, 3, 5.0);
        let p = char_polynomial(&d.build());
        let scaled = ManifoldData::build(d.n, &d.a_prime.scale(1.0 / t), &d.a_dblprime.scale(1.0 / t), &d.lattice).unwrap();
        let q = char_polynomial(&scaled);
        prop_assert!(q.at(t * s).max_abs_diff(&p.at(s)) <= 1e-10 * p.scale() * (1.0 + s * s));
    }

    #[test]
    fn round_trip_through_realize(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let d = random_data(&mut rng, 3, 100.0);
        let p = char_polynomial(&d.build());
        let back = realize(&p, d.n, 1e-9).unwrap();
        prop_assert!(check_free(&back));
        prop_assert!(char_polynomial(&back).max_abs_diff(&p) <= 1e-8 * p.scale());
        prop_assert_eq!(back.signature(), d.build().signature());
    }

    #[test]
    fn normalizations(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (p, _) = random_parabola(&mut rng, 3, 10.0);
        let m = p.dim();
        let a_half = pd_inv_sqrt(p.a(), 1e-9).unwrap().to_matrix();
        prop_assert!(congruence(p.a(), &a_half).unwrap().max_abs_diff(&SymMatrix::identity(m)) <= 1e-9);
        let c_half = pd_inv_sqrt(p.c(), 1e-9).unwrap().to_matrix();
        prop_assert!(congruence(p.c(), &c_half).unwrap().max_abs_diff(&SymMatrix::identity(m)) <= 1e-8);
    }

    #[test]
    fn sum_of_squares_identity(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (p, _) = random_parabola(&mut rng, 3, 10.0);
        let m = p.dim();
        let inv = pd_inv_sqrt(p.a(), 1e-9).unwrap().to_matrix();
        let root = psd_sqrt(p.a()).unwrap().to_matrix();
        let bt = congruence(p.b(), &inv).unwrap().to_matrix();
        let ct = congruence(p.c(), &inv).unwrap().to_matrix();
        let g = ct.sub(&(&bt * &bt));
        for s in [-2.0, -0.5, 0.0, 1.0, 3.0] {
            let lin = Matrix::identity(m).add(&bt.scale(s));
            let inner = (&lin * &lin).add(&g.scale(s * s));
            let rebuilt = SymMatrix::symmetrized(&(&(&root * &inner) * &root));
            prop_assert!(rebuilt.max_abs_diff(&p.at(s)) <= 1e-8 * p.at(s).scale());
        }
    }

    #[test]
    fn pencil_spectrum_is_real(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (p, _) = random_parabola(&mut rng, 2, 10.0);
        prop_assume!(p.dim() == 2);
        let ci = p.c().to_matrix().inverse().unwrap();
        let bc = &p.b().to_matrix() * &ci;
        let (tr, det) = (bc.trace(), bc.det());
        let disc = tr * tr - 4.0 * det;
        prop_assert!(disc >= -1e-9 * (1.0 + tr * tr));
        let root = disc.max(0.0).sqrt();
        let direct = [(tr - root) / 2.0, (tr + root) / 2.0];
        let raw = affine_spectrum(&p, 1e-9).unwrap().raw;
        for (a, b) in direct.iter().zip(&raw) {
            prop_assert!((a - b).abs() <= 1e-7 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn equivalence_implies_equal_invariants(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (p, n) = random_parabola(&mut rng, 3, 10.0);
        let x = random_invertible(&mut rng, p.dim());
        let cert = EquivalenceCertificate::new(x, rng.gen_range(0.2..5.0), rng.gen_range(-3.0..3.0), false).unwrap();
        let q = apply_certificate(&p, &cert).unwrap();
        prop_assert!(verify_equivalence(&p, &q, &cert, n, 1e-9).unwrap());
        let vp = is_characteristic(&p, n, 1e-9).unwrap();
        let vq = is_characteristic(&q, n, 1e-9).unwrap();
        prop_assert_eq!(vp.signature, vq.signature);
        let (sp, sq) = (affine_spectrum(&p, 1e-9).unwrap(), affine_spectrum(&q, 1e-9).unwrap());
        prop_assert!(sp.matches(&sq, 1e-7, false));
    }

    #[test]
    fn freeness_agrees_with_positivity(seed in any::<u64>(), violate in any::<bool>()) {
        let mut rng = rng(seed);
        let data = if violate { random_violator(&mut rng, 10.0).parts() } else { random_data(&mut rng, 3, 10.0).build() };
        prop_assert_eq!(check_free(&data), !violate);
        prop_assert_eq!(check_positive_all_s(&char_polynomial(&data), 1e-9), !violate);
    }

    #[test]
    fn full_schur_rank_routes_agree(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let m = rng.gen_range(1..=3);
        let g = conditioned(&mut rng, m, 5.0);
        let a = SymMatrix::symmetrized(&(&g.transpose() * &g));
        let b = random_sym(&mut rng, m, 1.0);
        let d = conditioned(&mut rng, m, 5.0);
        let inv = a.to_matrix().inverse().unwrap();
        let bm = b.to_matrix();
        let c = SymMatrix::symmetrized(&(&(&bm * &inv) * &bm).add(&(&d.transpose() * &d)));
        let p = MatrixParabola::new(a, b, c).unwrap();
        let v = is_characteristic(&p, 2 * m + 2, 1e-9).unwrap();
        prop_assert_eq!(v.signature.r, m);
        prop_assert!(v.characteristic);
        prop_assert!(v.poabc);
    }
}
