//! Delaunay stars of a few classical lattices, and point location.
//!
//! Run with `cargo run --example delaunay_star`.

use ldomain::delaunay::{delaunay_cell, delaunay_star, minimal_vectors, QuadForm};
use ldomain::exact::rat_frac;

fn show(name: &str, rows: &[Vec<i64>]) {
    let a = QuadForm::from_rows(rows).expect("positive definite");
    let star = delaunay_star(&a);
    let (m, mins) = minimal_vectors(&a);
    println!(
        "{name}: det {}, min norm {m} ({} vectors), {} cells around 0, simplicial = {}",
        a.determinant(),
        mins.len(),
        star.cells.len(),
        star.simplicial
    );
    for c in star.translation_classes() {
        println!("  class {:?}", c.vertices());
    }
}

fn main() {
    show("A2", &[vec![2, 1], vec![1, 2]]);
    show("Z2", &[vec![1, 0], vec![0, 1]]);
    show("A3", &[vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]);
    show("D4", &[vec![4, 2, 2, 2], vec![2, 2, 1, 1], vec![2, 1, 2, 1], vec![2, 1, 1, 2]]);

    let a2 = QuadForm::from_rows(&[vec![2, 1], vec![1, 2]]).unwrap();
    let p = [rat_frac(1, 3), rat_frac(1, 5)];
    println!("A2 cell containing (1/3, 1/5): {:?}", delaunay_cell(&a2, &p).unwrap().vertices());
    let edge = [rat_frac(1, 2), rat_frac(0, 1)];
    println!("A2 at (1/2, 0): {}", delaunay_cell(&a2, &edge).unwrap_err());
}
