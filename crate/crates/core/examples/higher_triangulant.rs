//! T_k through each evaluation layer, and the closed form for diagonal B.

use triangulant::fixtures::{diagonalizable, ints, jordan_matrix, random_matrix, rng};
use triangulant::triangulant::conjugated_diagonal;
use triangulant::triangulant_k::{triangulant_k, triangulant_k_diagdiag};
use triangulant::{FieldDescriptor, Matrix};

fn main() -> triangulant::Result<()> {
    let q = FieldDescriptor::Rational;
    let mut r = rng(3);
    let a = diagonalizable(&mut r, 3, -6..=6, -2..=2);
    let b = diagonalizable(&mut r, 3, -6..=6, -2..=2);
    for k in 0..=3 {
        let t = triangulant_k(&a.matrix, &b.matrix, k)?;
        println!("k={k}: T_k = {} via {:?}", t.value, t.method);
    }

    let derogatory = Matrix::diag(q, &ints(&[1, 1, 2]))?;
    let t = triangulant_k(&random_matrix(&mut r, 3, -4..=4), &derogatory, 1)?;
    println!("B = diag(1,1,2): T_1 = {} via {:?}", t.value, t.method);

    let jordan = jordan_matrix(&[(1, 2), (3, 1)]);
    let t = triangulant_k(&random_matrix(&mut r, 3, -4..=4), &jordan, 2)?;
    println!("Jordan B: T_2 = {} via {:?}", t.value, t.method);

    let p = Matrix::from_i64(q, &[&[2, 1, 1], &[1, 1, 3], &[1, 3, 1]])?;
    let (ea, eb) = (ints(&[1, 2, 4]), ints(&[0, 3, 5]));
    let formula = triangulant_k_diagdiag(&ea, &p, &eb, 2)?;
    let evaluated = triangulant_k(&conjugated_diagonal(&ea, &p)?, &Matrix::diag(q, &eb)?, 2)?.value;
    println!("closed form {formula} vs evaluation {evaluated}");
    Ok(())
}
