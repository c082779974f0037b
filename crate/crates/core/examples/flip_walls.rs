//! Walls of an L-domain and flips across them.
//!
//! Run with `cargo run --example flip_walls`.

use ldomain::hyp::{principal_domain, OrderSpec};
use ldomain::ltype::flip_record;

fn main() {
    let rec = principal_domain(&OrderSpec::identity(3)).unwrap();
    println!("principal domain of (1 2 3): rays {:?}", rec.key());
    for (f, functional) in rec.cone.facets().iter().enumerate() {
        let polys = &rec.wall_map[f];
        if rec.hyp_boundary[f] {
            println!("facet {f} {functional:?}: hypermetric boundary");
            continue;
        }
        println!("facet {f} {functional:?}: wall, {} repartitioning polytope(s)", polys.len());
        for p in polys {
            println!("  points {:?} dependence {:?}", p.points, p.dependence);
        }
        let next = flip_record(&rec, f).unwrap();
        println!("  neighbor rays {:?}", next.key());
        let neg: Vec<i64> = functional.iter().map(|x| -x).collect();
        let back = flip_record(&next, next.cone.facet_index(&neg).unwrap()).unwrap();
        println!("  flipping back returns: {}", back.key() == rec.key());
    }
}
