//! Wedge actions, compound matrices, Pluecker coordinates and invariant subspaces.

use triangulant::exterior::{compound, graded_action, is_invariant_subspace, leibniz_action, plucker, SubsetIndexer};
use triangulant::linalg::determinant;
use triangulant::{FieldDescriptor, Matrix};

fn main() -> triangulant::Result<()> {
    let q = FieldDescriptor::Rational;
    let a = Matrix::from_i64(q, &[&[2, 1, 0], &[0, 3, 1], &[0, 0, 5]])?;
    let idx = SubsetIndexer::new(3, 2)?;
    println!("2-subsets of [3]: {:?}", idx.subsets());
    println!("A_2 (Leibniz action) =\n{}", leibniz_action(&a, 2)?);
    println!("C_2(A) (compound) =\n{}", compound(&a, 2)?);
    assert_eq!(graded_action(&a, 2, 2)?, compound(&a, 2)?);

    let c = compound(&a, 2)?;
    println!("det C_2(A) = {} = det(A)^2 = {}", determinant(&c)?, determinant(&a)?.pow(2));

    // span(e1, e2) is invariant for an upper triangular matrix
    let e = |i: usize| (0..3).map(|j| q.from_i64(i64::from(i == j))).collect::<Vec<_>>();
    let v = vec![e(0), e(1)];
    println!("Pluecker coordinates of span(e1,e2): {:?}", plucker(&v, 2)?.coords.iter().map(ToString::to_string).collect::<Vec<_>>());
    let report = is_invariant_subspace(&a, &v)?;
    println!(
        "invariant: {}, e_i: {:?}, Pluecker eigen test: {:?}",
        report.invariant,
        report.e_values.iter().map(ToString::to_string).collect::<Vec<_>>(),
        report.plucker_consistent
    );
    Ok(())
}
