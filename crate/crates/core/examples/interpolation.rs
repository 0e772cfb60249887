//! When a correction factor vanishes, T_k is recovered by interpolating
//! along a random line through the pair.

use std::time::Instant;

use triangulant::fixtures::{ints, random_matrix, rng};
use triangulant::spectra::g_factor;
use triangulant::triangulant_k::{is_derogatory, triangulant_k_degree, triangulant_k_with, TriangulantKOptions};
use triangulant::{FieldDescriptor, Matrix};

fn main() -> triangulant::Result<()> {
    let q = FieldDescriptor::Rational;
    let eigs = ints(&[0, 1, 2, 3]);
    println!("G_2(diag(0,1,2,3)) = {} since 0+3 = 1+2", g_factor(q, &eigs, 2)?);
    let b = Matrix::diag(q, &eigs)?;
    let mut r = rng(1);
    let a = loop {
        let a = random_matrix(&mut r, 4, -3..=3);
        if !is_derogatory(&a, None)? {
            break a;
        }
    };
    println!("degree bound per argument: {}", triangulant_k_degree(4, 2));
    for seed in [1, 2] {
        let start = Instant::now();
        let t = triangulant_k_with(&a, &b, 2, &TriangulantKOptions { seed, ..Default::default() })?;
        println!(
            "seed {seed}: T_2 = {} via {:?} from {:?} samples in {:.1?}",
            t.value,
            t.method,
            t.samples_used,
            start.elapsed()
        );
    }
    Ok(())
}
