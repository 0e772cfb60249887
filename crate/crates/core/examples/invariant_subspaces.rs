//! Vanishing of T_k against its invariant-subspace characterizations.

use triangulant::fixtures::{forced_zero_minor_pair, rng};
use triangulant::linalg::krylov_dim;
use triangulant::triangulant_k::{make_intersecting_pair, theorem_k_krylov_check, theorem_k_oracle, triangulant_k};
use triangulant::{FieldDescriptor, Matrix};

fn main() -> triangulant::Result<()> {
    let q = FieldDescriptor::Rational;
    let x = Matrix::from_i64(q, &[&[0, 1], &[1, 0]])?;
    let z = Matrix::from_i64(q, &[&[1, 0], &[0, -1]])?;
    let b = Matrix::from_i64(q, &[&[1, 0], &[-1, 2]])?;
    for (name, other) in [("Z", &z), ("B", &b)] {
        let o = theorem_k_oracle(&x, other, 1)?;
        println!(
            "X vs {name}: T_1 = {}, degenerate pair: {} witness {:?}",
            triangulant_k(&x, other, 1)?.value,
            o.degenerate_pair_exists,
            o.witness
        );
    }

    let mut r = rng(11);
    let f = forced_zero_minor_pair(&mut r, 4, 2);
    let o = theorem_k_oracle(&f.a, &f.b, 2)?;
    println!(
        "forced minor P[{:?}|{:?}] = 0: T_2 = {}, witness {:?}",
        f.rows,
        f.cols,
        triangulant_k(&f.a, &f.b, 2)?.value,
        o.witness
    );

    let (a, b) = make_intersecting_pair(4, 2, 5)?;
    println!("intersecting pair: T_2 = {}", triangulant_k(&a, &b, 2)?.value);

    let a = Matrix::from_i64(q, &[&[0, 1], &[0, 0]])?;
    let b = Matrix::from_i64(q, &[&[1, 0], &[0, 2]])?;
    let v = vec![q.one(), q.zero()];
    println!("Krylov dims {} and {}: {:?}", krylov_dim(&a, &v)?, krylov_dim(&b, &v)?, theorem_k_krylov_check(&a, &b, 1, &v)?);
    Ok(())
}
