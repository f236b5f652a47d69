use std::time::Instant;

use exlat_core::eigen::{eigenvalues, RationalMatrix};
use exlat_core::engine::{get_basis, BoundStrategy};
use num_bigint::BigInt;
use num_rational::BigRational;

fn m(rows: &[&[i64]]) -> RationalMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect()
}

#[test]
fn five_by_five_lattice_has_rank_one() {
    let a = m(&[
        &[4, 226, 2, 1, -117],
        &[1, 126, 1, 0, -64],
        &[0, -91, 0, -1, 46],
        &[0, 80, 1, 0, -40],
        &[4, 232, 2, 1, -120],
    ]);
    let t = Instant::now();
    let ev = eigenvalues(&a).unwrap();
    assert_eq!(ev.len(), 5);
    let r = get_basis(&ev, BoundStrategy::default()).unwrap();
    eprintln!("{:?} {:?} {:?}", r.basis.vectors, r.independent, t.elapsed());
    assert_eq!(r.basis.rank(), 1);
    let mut e: Vec<i64> = r.basis.vectors[0].entries().iter().map(|x| i64::try_from(x).unwrap().abs()).collect();
    e.sort();
    assert_eq!(e, vec![0, 0, 1, 1, 1]);
}
