//! The closed form for T(A, diag(b)) against the direct determinant.

use triangulant::fixtures::{distinct_values, random_matrix, rng};
use triangulant::triangulant::{delta_product, triangulant, triangulant_diag_formula, vandermonde_det};
use triangulant::{FieldDescriptor, Matrix};

fn main() -> triangulant::Result<()> {
    let q = FieldDescriptor::Rational;
    let mut r = rng(42);
    for n in 2..=4 {
        let a = random_matrix(&mut r, n, -5..=5);
        let bs = distinct_values(&mut r, n, -9..=9);
        let formula = triangulant_diag_formula(&a, &bs)?;
        let direct = triangulant(&a, &Matrix::diag(q, &bs)?)?.value;
        println!(
            "n={n}: Delta(A) = {}, V(b) = {}, formula = {formula}, direct = {direct}",
            delta_product(&a)?,
            vandermonde_det(q, &bs),
        );
        assert_eq!(formula, direct);
    }
    Ok(())
}
