//! Hypermetric facet lists for 3 to 6 points and membership tests.
//!
//! Run with `cargo run --example hypermetric_facets`.

use ldomain::exact::rat;
use ldomain::hyp::{classify, covariance, hyp_facet_orbits, hyp_facets, Hypermetric};

fn main() {
    for m in 3..=6 {
        let orbits = hyp_facet_orbits(m).unwrap();
        println!("{m} points: {} facets in {} orbits", hyp_facets(m).unwrap().len(), orbits.len());
        for (z, size) in orbits {
            println!("  z = {z:?}  orbit size {size}");
        }
    }

    let ones = Hypermetric::from_fn(5, |_, _| rat(1));
    println!("all distances 1 on 5 points: {:?}", classify(&ones).unwrap());
    let cut = Hypermetric::cut(5, &[1, 3]);
    println!("cut {{1,3}} on 5 points: {:?}", classify(&cut).unwrap());
    let bad = Hypermetric::new(3, vec![rat(1), rat(1), rat(3)]).unwrap();
    println!("distances (1, 1, 3) on 3 points: {:?}", classify(&bad).unwrap());

    let d4 = Hypermetric::from_fn(5, |i, j| if (i, j) == (0, 1) { rat(4) } else { rat(2) });
    println!("(4,2,...,2) on 5 points: {:?}, covariance {:?}", classify(&d4).unwrap(), covariance(&d4, 0).to_rows());
}
