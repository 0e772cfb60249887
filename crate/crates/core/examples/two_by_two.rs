//! In size 2 the triangulant is the determinant of the commutator.

use triangulant::fixtures::{random_matrix, rng};
use triangulant::triangulant::triangulant_2x2_identities;

fn main() -> triangulant::Result<()> {
    let mut r = rng(7);
    for _ in 0..5 {
        let a = random_matrix(&mut r, 2, -9..=9);
        let b = random_matrix(&mut r, 2, -9..=9);
        let ids = triangulant_2x2_identities(&a, &b)?;
        println!(
            "T = {}, det[A,B] = {}, tr(A[A,B]B) = {}, [A,B]^2 = 0: {}",
            ids.t, ids.det_comm, ids.trace_form, ids.comm_square_zero
        );
        assert!(ids.all_equal());
    }
    Ok(())
}
