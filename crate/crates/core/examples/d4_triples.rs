//! The 64 triples of free roots of D4, their ranks, and the matroid left
//! after removing each triple.
//!
//! Run with `cargo run --example d4_triples`.

use std::collections::BTreeMap;

use ldomain::unimod::{
    circuit_size_counts, classify_max_unimodular_d4, triple_rank, D4Roots, Graph, Matroid, VectorSystem,
};

fn main() {
    let roots = D4Roots::new();
    let mut census: BTreeMap<(usize, String), usize> = BTreeMap::new();
    for t in roots.triples() {
        let r = triple_rank(&t);
        let kind = classify_max_unimodular_d4(&roots, &t).expect("unimodular complement");
        *census.entry((r.rank, format!("{kind:?}"))).or_insert(0) += 1;
    }
    for ((rank, kind), k) in &census {
        println!("rank {rank}: {k} triples, complement is {kind}");
    }

    let t = &roots.triples()[0];
    let u = VectorSystem::new(4, roots.complement(t)).unwrap();
    let m = Matroid::of_vectors(&u);
    println!("triple {t:?}: circuit sizes {:?}", circuit_size_counts(&m));

    for (name, g) in [("K33", Graph::k33()), ("(K5-1)*", Graph::k5_minus_edge_dual())] {
        let m = Matroid::of_vectors(&ldomain::unimod::graphic_system(&g));
        let cuts3 = m.cocircuits().iter().filter(|c| c.count_ones() == 3).count();
        println!("{name}: {cuts3} three-edge cuts");
    }
}
