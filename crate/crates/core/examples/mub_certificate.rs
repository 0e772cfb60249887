//! Weyl-Heisenberg bases and the triangulant bound |T| <= n^(n^2/2).

use triangulant::fixtures::rng;
use triangulant::mub::{check_unbiased, clock, random_unitary, shift, triangulant_bound_check, weyl_heisenberg_bases, OrthonormalBasis};

fn main() -> triangulant::Result<()> {
    let c = triangulant_bound_check(&clock(3), &shift(3))?;
    println!("clock/shift n=3: |T| = {:.6}, bound {:.6}, saturated {}", c.magnitude, c.bound, c.saturated);

    for p in [2u64, 3, 5] {
        let bases = weyl_heisenberg_bases(p)?;
        let mut worst: f64 = 0.0;
        let mut saturated = true;
        for i in 0..bases.len() {
            for j in i + 1..bases.len() {
                let cert = check_unbiased(&bases[i], &bases[j], 1e-9)?;
                worst = worst.max(cert.max_deviation);
                saturated &= cert.saturated;
            }
        }
        println!("p={p}: {} bases, max deviation {worst:.2e}, all saturated {saturated}", bases.len());
    }

    let same = check_unbiased(&OrthonormalBasis::standard(3), &OrthonormalBasis::standard(3), 1e-9)?;
    println!("standard vs standard: verdict {}, |T| = {:.3e}", same.verdict, same.triangulant_magnitude);

    let mut r = rng(9);
    let (a, b) = (random_unitary(&mut r, 3), random_unitary(&mut r, 3));
    let c = triangulant_bound_check(&a, &b)?;
    println!("random unitaries: |T| / bound = {:.4}", c.magnitude / c.bound);
    Ok(())
}
