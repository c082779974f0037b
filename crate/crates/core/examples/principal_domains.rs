//! Principal L-domains of the hypermetric cone, one per order of the points
//! up to reversal.
//!
//! Run with `cargo run --release --example principal_domains -- 4`.

use ldomain::hyp::{canonical_orders, principal_domain};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let orders = canonical_orders(n);
    println!("n = {n}: {} orders up to reversal", orders.len());
    for o in &orders {
        let rec = principal_domain(o).expect("principal domain");
        let walls = rec.interior_walls().len();
        println!(
            "order {:?}: {} rays, {} facets ({} on the hypermetric boundary, {walls} walls), {} cells, main simplex {}",
            o.order(),
            rec.cone.rays().len(),
            rec.cone.facets().len(),
            rec.hyp_boundary_facets().len(),
            rec.star.cells.len(),
            rec.star.has_main_simplex()
        );
        println!("  interior form {:?}", rec.interior_form);
    }
}
