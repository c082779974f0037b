//! Arithmetic equivalence of forms and automorphism groups.
//!
//! Run with `cargo run --example arithmetic_equivalence`.

use ldomain::delaunay::QuadForm;
use ldomain::exact::IntMatrix;
use ldomain::ltype::{arithmetically_equivalent, fingerprint, stabilizer};

fn main() {
    let a = QuadForm::from_rows(&[vec![2, 1], vec![1, 2]]).unwrap();
    let b = QuadForm::from_rows(&[vec![2, -1], vec![-1, 2]]).unwrap();
    println!("A2 vs its mirror: {:?}", arithmetically_equivalent(&a, &b));

    let d4 = QuadForm::from_rows(&[vec![4, 2, 2, 2], vec![2, 2, 1, 1], vec![2, 1, 2, 1], vec![2, 1, 1, 2]]).unwrap();
    let p = IntMatrix::from_rows(&[[1, 2, 0, -1], [0, 1, 1, 0], [1, 2, 1, 2], [0, 0, 0, 1]]);
    assert_eq!(p.determinant().abs(), 1);
    let moved = d4.transform(&p);
    println!("D4 moved by P: {moved:?}");
    let w = arithmetically_equivalent(&d4, &moved).expect("equivalent by construction");
    println!("recovered witness {w:?}, check {}", d4.transform(&w) == moved);
    let fp = fingerprint(&d4);
    println!("invariants: det {}, min norm {} attained {} times", fp.det, fp.min_norm, fp.min_count);

    for (name, rows) in [
        ("Z2", vec![vec![1, 0], vec![0, 1]]),
        ("A2", vec![vec![2, 1], vec![1, 2]]),
        ("A3", vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]),
        ("D4", vec![vec![4, 2, 2, 2], vec![2, 2, 1, 1], vec![2, 1, 2, 1], vec![2, 1, 1, 2]]),
    ] {
        println!("|Aut({name})| = {}", stabilizer(&QuadForm::from_rows(&rows).unwrap()).len());
    }

    let z2 = QuadForm::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
    println!("A2 vs Z2: {:?}", arithmetically_equivalent(&a, &z2));
}
