// Prime-field arithmetic and exact subspace operations.

use gradedepth::arith::{echelonize, kernel, subspace_combine, Combine, PrimeField};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = PrimeField::new(32003)?;
    let a = 12345;
    assert_eq!(f.mul(a, f.inv(a)), 1);
    assert_eq!(f.to_signed(f.from_i64(-7)), -7);

    // span{(1,1,0), (0,1,1)} and span{(1,0,0)} inside k^3
    let u = echelonize(&f, &[vec![1, 1, 0], vec![0, 1, 1]], 3)?;
    let v = echelonize(&f, &[vec![1, 0, 0]], 3)?;
    let sum = subspace_combine(&f, &u, &v, Combine::Sum)?;
    let meet = subspace_combine(&f, &u, &v, Combine::Intersect)?;
    println!("dim U = {}, dim V = {}, dim U+V = {}, dim U∩V = {}", u.dim(), v.dim(), sum.dim(), meet.dim());
    assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());

    // x + y + z = 0 has a two-dimensional solution space
    let ker = kernel(&f, &[vec![1, 1, 1]], 3);
    println!("kernel basis: {ker:?}");
    assert_eq!(ker.len(), 2);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("exact_arith example");
}
