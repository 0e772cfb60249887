//! Computes T(A,B) for a few small pairs and shows when it vanishes.
//!
//! Run with `cargo run --example first_triangulant`.

use triangulant::triangulant::{block_matrix_m, triangulant, triangulant_with};
use triangulant::{FieldDescriptor, Matrix};

fn main() -> triangulant::Result<()> {
    let q = FieldDescriptor::Rational;
    let a = Matrix::from_i64(q, &[&[1, 1], &[0, 1]])?;
    let b = Matrix::from_i64(q, &[&[1, 0], &[1, 1]])?;
    println!("M(A,B) =\n{}", block_matrix_m(&a, &b)?);
    println!("T(A,B) = {}", triangulant(&a, &b)?.value);

    // (1,-1) is a left eigenvector of X and (1,1) a right eigenvector of B2;
    // they pair to zero, so the triangulant vanishes
    let x = Matrix::from_i64(q, &[&[0, 1], &[1, 0]])?;
    let b2 = Matrix::from_i64(q, &[&[1, 0], &[-1, 2]])?;
    let report = triangulant_with(&x, &b2, true)?;
    println!("T(X,B2) = {}, dim ker M = {:?}", report.value, report.kernel_dim);

    // the same definition works over a prime field
    let f7 = FieldDescriptor::prime(7)?;
    let a7 = Matrix::from_i64(f7, &[&[1, 2, 0], &[0, 3, 1], &[5, 0, 1]])?;
    let b7 = Matrix::from_i64(f7, &[&[2, 0, 1], &[1, 1, 0], &[0, 4, 3]])?;
    println!("T over F_7 = {}", triangulant(&a7, &b7)?.value);
    Ok(())
}
