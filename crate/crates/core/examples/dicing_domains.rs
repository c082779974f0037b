//! Graphic and cographic unimodular systems, their duals, dicing domains
//! and 0/1 representations.
//!
//! Run with `cargo run --example dicing_domains`.

use ldomain::unimod::{
    cographic_system, dicing_domain, dual_system, graphic_system, is_01, is_01_representable, Graph, Matroid,
    VectorSystem,
};

fn report(name: &str, u: &VectorSystem) {
    let cone = dicing_domain(u).expect("unimodular");
    print!(
        "{name}: {} vectors in dim {}, dicing domain with {} rays and {} facets (dim {})",
        u.len(),
        u.dim(),
        cone.rays().len(),
        cone.facets().len(),
        cone.span_dim()
    );
    match is_01_representable(u) {
        Some(_) if is_01(u) => println!(", already 0/1"),
        Some(w) => println!(", 0/1 after {w:?}: {:?}", u.transformed(&w).vectors()),
        None => println!(", no 0/1 representation"),
    }
}

fn main() {
    let k4 = Graph::complete(4);
    let g = graphic_system(&k4);
    report("Gr(K4)", &g);
    let c = cographic_system(&k4).unwrap();
    report("CoGr(K4)", &c);
    let d = dual_system(&g).unwrap();
    report("Gr(K4)*", &d);
    println!(
        "  dual of Gr(K4) is CoGr(K4) as a matroid: {}",
        Matroid::of_vectors(&d).is_isomorphic(&Matroid::of_vectors(&c))
    );

    report("Gr(K5-1)", &graphic_system(&Graph::k5_minus_edge()));
    report("CoGr(K33)", &cographic_system(&Graph::k33()).unwrap());

    let a2 = VectorSystem::new(2, vec![vec![1, 0], vec![0, 1], vec![1, -1]]).unwrap();
    report("A2 with (1,-1)", &a2);
}
