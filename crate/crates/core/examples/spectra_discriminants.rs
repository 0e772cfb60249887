//! Exact spectra, higher discriminants and the correction factor G_k.

use triangulant::spectra::{delta_r, discriminant_d, g_factor, g_factor_matrix, kdelta_identity_check, spectrum};
use triangulant::fixtures::ints;
use triangulant::{FieldDescriptor, Matrix};

fn main() -> triangulant::Result<()> {
    let q = FieldDescriptor::Rational;
    let a = Matrix::from_i64(q, &[&[2, 1, 0], &[1, 2, 0], &[0, 0, 5]])?;
    let s = spectrum(&a, None)?;
    println!("charpoly {} split={} eigenvalues:", s.charpoly.pretty(), s.split);
    for e in &s.eigenvalues {
        println!("  {} (algebraic {}, geometric {})", e.value, e.algebraic_mult, e.geometric_mult);
    }

    let eigs = ints(&[0, 1, 2, 4]);
    println!("D = {}", discriminant_d(q, &eigs));
    println!("delta_2 = {}", delta_r(q, &eigs, 2)?);
    println!("G_2 = {}", g_factor(q, &eigs, 2)?);
    println!("subset-sum identity holds: {}", kdelta_identity_check(q, &eigs, 2)?.holds);

    // a matrix whose characteristic polynomial x^4 + 2x + 2 has no rational
    // roots still gets an exact G_2 through discriminants of A_r
    let companion = Matrix::from_i64(q, &[&[0, 0, 0, -2], &[1, 0, 0, -2], &[0, 1, 0, 0], &[0, 0, 1, 0]])?;
    let g = g_factor_matrix(&companion, 2, None)?.expect("determined");
    println!("non-split companion: G_2 = {} via {:?}", g.value, g.route);

    let rotation = Matrix::from_i64(q, &[&[0, 1], &[-1, 0]])?;
    println!("rotation splits over Q: {}", spectrum(&rotation, None)?.split);
    println!("over Q(i): {:?}", spectrum(&Matrix::from_i64(FieldDescriptor::GaussianRational, &[&[0, 1], &[-1, 0]])?, None)?
        .eigenvalue_list()
        .map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()));
    Ok(())
}
