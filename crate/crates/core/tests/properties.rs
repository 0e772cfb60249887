//! Property tests for algebraic identities across modules.

mod common;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;
use triangulant::exterior::{binomial, compound, is_invariant_subspace, leibniz_action};
use triangulant::linalg::{charpoly, determinant, determinant_gauss, inverse, kernel_basis, rank};
use triangulant::mub::{basis_to_unitary, triangulant_bound_check, OrthonormalBasis};
use triangulant::spectra::{delta_r, g_factor};
use triangulant::triangulant::{conjugated_diagonal, triangulant};
use triangulant::triangulant_k::{triangulant_k, triangulant_k_diagdiag};
use triangulant::{FieldDescriptor, FieldValue, Matrix};

fn rat() -> FieldDescriptor {
    FieldDescriptor::Rational
}

fn int_matrix(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(lo..=hi, n * n).prop_map(move |v| {
        let rows: Vec<&[i64]> = v.chunks(n).collect();
        Matrix::from_i64(rat(), &rows).unwrap()
    })
}

fn sized_matrix(sizes: std::ops::RangeInclusive<usize>, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    sizes.prop_flat_map(move |n| int_matrix(n, lo, hi))
}

fn sized_pair(sizes: std::ops::RangeInclusive<usize>, lo: i64, hi: i64) -> impl Strategy<Value = (Matrix, Matrix)> {
    sizes.prop_flat_map(move |n| (int_matrix(n, lo, hi), int_matrix(n, lo, hi)))
}

fn distinct(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<FieldValue>> {
    Just((lo..=hi).collect::<Vec<i64>>())
        .prop_shuffle()
        .prop_map(move |v| v[..n].iter().map(|&x| rat().from_i64(x)).collect())
}

fn fraction() -> impl Strategy<Value = (i64, i64)> {
    (-50i64..=50, 1i64..=30)
}

fn scalar_triple(field: FieldDescriptor) -> impl Strategy<Value = [FieldValue; 3]> {
    let one = move |(n, d): (i64, i64), (m, e): (i64, i64)| {
        let text = match field {
            FieldDescriptor::GaussianRational => {
                let sign = if m < 0 { '-' } else { '+' };
                format!("{n}/{d}{sign}{}/{e}i", m.abs())
            }
            FieldDescriptor::PrimeField { .. } => n.to_string(),
            _ => format!("{n}/{d}"),
        };
        field.parse(&text).unwrap()
    };
    ((fraction(), fraction()), (fraction(), fraction()), (fraction(), fraction()))
        .prop_map(move |(a, b, c)| [one(a.0, a.1), one(b.0, b.1), one(c.0, c.1)])
}

fn exact_fields() -> impl Strategy<Value = FieldDescriptor> {
    prop_oneof![
        Just(FieldDescriptor::Rational),
        Just(FieldDescriptor::GaussianRational),
        Just(FieldDescriptor::prime(101).unwrap()),
        Just(FieldDescriptor::prime(7).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(triple in exact_fields().prop_flat_map(scalar_triple)) {
        let [a, b, c] = triple;
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn parse_format_round_trip(triple in exact_fields().prop_flat_map(scalar_triple)) {
        for v in triple {
            let field = v.descriptor();
            prop_assert_eq!(field.parse(&v.to_string()).unwrap(), v);
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in int_matrix(4, -5, 5), b in int_matrix(4, -5, 5)) {
        let ab = determinant(&a.matmul(&b).unwrap()).unwrap();
        prop_assert_eq!(ab, &determinant(&a).unwrap() * &determinant(&b).unwrap());
    }

    #[test]
    fn determinant_matches_reference(a in sized_matrix(1..=5, -9, 9)) {
        let reference = det_elim(&to_q(&a));
        prop_assert_eq!(value_q(&determinant(&a).unwrap()), reference.clone());
        prop_assert_eq!(value_q(&determinant_gauss(&a)), reference);
    }

    #[test]
    fn prime_field_determinant_reduces(a in int_matrix(3, -9, 9)) {
        let p = 13u64;
        let f = FieldDescriptor::prime(p).unwrap();
        let rows: Vec<Vec<FieldValue>> =
            a.to_rows().iter().map(|r| r.iter().map(|v| f.parse(&v.to_string()).unwrap()).collect()).collect();
        let reduced = Matrix::from_rows(f, rows).unwrap();
        let over_q = det_elim(&to_q(&a)).to_integer();
        let expected = ((over_q % p as i64) + p as i64) % p as i64;
        prop_assert_eq!(determinant(&reduced).unwrap(), f.from_i64(expected.try_into().unwrap()));
    }

    #[test]
    fn charpoly_trace_and_determinant(a in sized_matrix(1..=5, -6, 6)) {
        let n = a.rows();
        let p = charpoly(&a).unwrap();
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert_eq!(p.coeff(n - 1), -a.trace().unwrap());
        let sign = if n % 2 == 0 { rat().one() } else { -rat().one() };
        prop_assert_eq!(&sign * &p.coeff(0), determinant(&a).unwrap());
        // Cayley-Hamilton, evaluated with the reference arithmetic
        let qa = to_q(&a);
        let mut acc = vec![vec![q(0); n]; n];
        for (i, c) in p.coeffs().iter().enumerate() {
            let term = power(&qa, i);
            for r in 0..n {
                for s in 0..n {
                    acc[r][s] += &term[r][s] * value_q(c);
                }
            }
        }
        prop_assert!(acc.iter().flatten().all(|x| x.is_zero()));
    }

    #[test]
    fn kernel_vectors_are_annihilated(a in (2usize..=5, 1usize..=4).prop_flat_map(|(n, r)| {
        let r = r.min(n);
        (prop::collection::vec(-4i64..=4, n * r), prop::collection::vec(-4i64..=4, r * n))
            .prop_map(move |(x, y)| {
                let xm = Matrix::from_i64(rat(), &x.chunks(r).collect::<Vec<_>>()).unwrap();
                let ym = Matrix::from_i64(rat(), &y.chunks(n).collect::<Vec<_>>()).unwrap();
                xm.matmul(&ym).unwrap()
            })
    })) {
        let kernel = kernel_basis(&a);
        prop_assert_eq!(kernel.len() + rank(&a), a.cols());
        prop_assert_eq!(rank(&a), common::rank(&to_q(&a)));
        for v in &kernel {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(FieldValue::is_zero));
        }
    }

    #[test]
    fn triangulant_matches_reference((a, b) in sized_pair(1..=3, -5, 5)) {
        prop_assert_eq!(value_q(&triangulant(&a, &b).unwrap().value), triangulant_ref(&to_q(&a), &to_q(&b)));
    }

    #[test]
    fn triangulant_homogeneity((a, b) in sized_pair(2..=3, -4, 4), s in 2i64..=5) {
        let n = a.rows();
        let t = triangulant(&a, &b).unwrap().value;
        let s = rat().from_i64(s);
        let factor = s.pow((n * binomial(n, 2)) as u64);
        prop_assert_eq!(triangulant(&a.scale(&s).unwrap(), &b).unwrap().value, &factor * &t);
        prop_assert_eq!(triangulant(&a, &b.scale(&s).unwrap()).unwrap().value, &factor * &t);
    }

    #[test]
    fn triangulant_transpose_and_conjugation(
        (a, b, p) in (2usize..=3).prop_flat_map(|n| (int_matrix(n, -4, 4), int_matrix(n, -4, 4), int_matrix(n, -3, 3)))
    ) {
        let t = triangulant(&a, &b).unwrap().value;
        prop_assert_eq!(triangulant(&a.transpose(), &b.transpose()).unwrap().value, triangulant(&b, &a).unwrap().value);
        if !determinant(&p).unwrap().is_zero() {
            let pi = inverse(&p).unwrap();
            let conj = |m: &Matrix| pi.matmul(m).unwrap().matmul(&p).unwrap();
            prop_assert_eq!(triangulant(&conj(&a), &conj(&b)).unwrap().value, t);
        }
    }

    #[test]
    fn compound_matches_reference_and_is_multiplicative(
        (p, r, k) in (2usize..=4).prop_flat_map(|n| (int_matrix(n, -4, 4), int_matrix(n, -4, 4), 1..=n))
    ) {
        let c = compound(&p, k).unwrap();
        prop_assert_eq!(to_q(&c), compound_ref(&to_q(&p), k));
        let pr = compound(&p.matmul(&r).unwrap(), k).unwrap();
        prop_assert_eq!(pr, c.matmul(&compound(&r, k).unwrap()).unwrap());
    }

    #[test]
    fn wedge_action_matches_reference(
        (a, k) in (2usize..=5).prop_flat_map(|n| (int_matrix(n, -5, 5), 1..=n))
    ) {
        let l = leibniz_action(&a, k).unwrap();
        prop_assert_eq!(to_q(&l), wedge_action(&to_q(&a), k));
        prop_assert_eq!(leibniz_action(&a.transpose(), k).unwrap(), l.transpose());
    }

    #[test]
    fn invariant_subspace_coefficients(
        (a, k) in (3usize..=4).prop_flat_map(|n| (int_matrix(n, -3, 3), 1..n)),
        p in int_matrix(4, -2, 2),
    ) {
        // a block upper triangular matrix keeps span(e_1..e_k) invariant
        let n = a.rows();
        let mut block = a.clone();
        for i in k..n {
            for j in 0..k {
                block[(i, j)] = rat().zero();
            }
        }
        let p = p.select(&(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
        prop_assume!(!determinant(&p).unwrap().is_zero());
        let conj = p.matmul(&block).unwrap().matmul(&inverse(&p).unwrap()).unwrap();
        let basis: Vec<Vec<FieldValue>> = (0..k).map(|j| p.column(j)).collect();
        let report = is_invariant_subspace(&conj, &basis).unwrap();
        prop_assert!(report.invariant);
        prop_assert_eq!(report.plucker_consistent, Some(true));
        // det(I + x A|_V) = 1 + sum e_i x^i at a few points
        let top: QMat = to_q(&block)[..k].iter().map(|r| r[..k].to_vec()).collect();
        for x in [1i64, 2, -3] {
            let shifted: QMat = (0..k)
                .map(|i| (0..k).map(|j| if i == j { q(1) } else { q(0) } + q(x) * &top[i][j]).collect())
                .collect();
            let series = report.e_values.iter().enumerate().fold(q(1), |acc, (i, e)| acc + value_q(e) * pow(&q(x), i + 1));
            prop_assert_eq!(det_elim(&shifted), series);
        }
    }

    #[test]
    fn delta_r_properties(eigs in (4usize..=6).prop_flat_map(|n| distinct(n, -15, 15)), s in 2i64..=4) {
        let n = eigs.len();
        let mut reversed = eigs.clone();
        reversed.reverse();
        for r in 1..=n / 2 {
            let d = delta_r(rat(), &eigs, r).unwrap();
            prop_assert_eq!(value_q(&d), common::delta_r(&eigs_q(&eigs), r));
            let flipped = delta_r(rat(), &reversed, r).unwrap();
            if r == 1 {
                // reversal is a product of floor(n/2) transpositions
                let sign = if (n / 2) % 2 == 0 { rat().one() } else { -rat().one() };
                prop_assert_eq!(flipped, &sign * &d);
            } else {
                prop_assert_eq!(flipped, d.clone());
                let scaled: Vec<FieldValue> = eigs.iter().map(|e| e * &rat().from_i64(s)).collect();
                let degree = binomial(n, 2 * r) * binomial(2 * r, r) / 2;
                prop_assert_eq!(delta_r(rat(), &scaled, r).unwrap(), &rat().from_i64(s).pow(degree as u64) * &d);
            }
        }
        for k in 0..=n {
            prop_assert_eq!(g_factor(rat(), &eigs, k).unwrap(), g_factor(rat(), &eigs, n - k).unwrap());
        }
    }

    #[test]
    fn diagdiag_formula_matches_evaluation(
        eigs_a in distinct(3, -6, 6),
        bs in distinct(3, -6, 6),
        p in int_matrix(3, -3, 3),
        k in 1usize..=2,
    ) {
        prop_assume!(!determinant(&p).unwrap().is_zero());
        let a = conjugated_diagonal(&eigs_a, &p).unwrap();
        let b = Matrix::diag(rat(), &bs).unwrap();
        let formula = triangulant_k_diagdiag(&eigs_a, &p, &bs, k).unwrap();
        prop_assert_eq!(formula, triangulant_k(&a, &b, k).unwrap().value);
    }

    #[test]
    fn rotated_hadamard_is_not_saturated(angle in 0.05f64..0.7) {
        use num_complex::Complex64;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let (c, sn) = (angle.cos(), angle.sin());
        // rotate the Hadamard basis inside its own span by a small angle
        let h = [[s, s], [s, -s]];
        let col = |j: usize| -> Vec<Complex64> {
            let (u, v) = ([h[0][0], h[1][0]], [h[0][1], h[1][1]]);
            let w = if j == 0 { [c * u[0] - sn * v[0], c * u[1] - sn * v[1]] } else { [sn * u[0] + c * v[0], sn * u[1] + c * v[1]] };
            w.iter().map(|&x| Complex64::new(x, 0.0)).collect()
        };
        let rotated = OrthonormalBasis::new(vec![col(0), col(1)], 1e-12).unwrap();
        let check = triangulant_bound_check(
            &basis_to_unitary(&OrthonormalBasis::standard(2)),
            &basis_to_unitary(&rotated),
        ).unwrap();
        prop_assert!(!check.saturated);
        prop_assert!(check.magnitude < check.bound * (1.0 - 1e-6));
    }
}

fn eigs_q(values: &[FieldValue]) -> Vec<Q> {
    values.iter().map(value_q).collect()
}
