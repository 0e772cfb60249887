//! Reading and writing the matrix and basis-collection file formats.

use triangulant::io::{bases_from_str, bases_to_value, matrix_from_str, matrix_to_value};
use triangulant::mub::OrthonormalBasis;
use triangulant::triangulant::triangulant;

fn main() -> triangulant::Result<()> {
    let a = matrix_from_str(r#"{"field": {"kind": "gaussian_rational"}, "rows": 2, "cols": 2, "entries": [["1+i", "1/2"], ["0", "-3i"]]}"#)?;
    let b = matrix_from_str(r#"{"field": {"kind": "gaussian_rational"}, "rows": 2, "cols": 2, "entries": [["2", "0"], ["1", "i"]]}"#)?;
    println!("T = {}", triangulant(&a, &b)?.value);
    println!("{}", serde_json::to_string_pretty(&matrix_to_value(&a))?);

    let collection = bases_to_value(&[OrthonormalBasis::standard(2), OrthonormalBasis::fourier(2)]);
    let text = serde_json::to_string(&collection)?;
    let back = bases_from_str(&text, 1e-12)?;
    println!("collection round trip: {} bases of dimension {}", back.len(), back[0].dimension());
    Ok(())
}
