//! Enumerate all primitive L-domains in the hypermetric cone for small n
//! and report counts, orbits, L-types and (for n = 4) the type census.
//!
//! Run with `cargo run --release --example enumerate_hyp -- 4`.

use std::collections::BTreeMap;

use ldomain::enumerate::{classify_type_dim4, ltype_classes, traverse, TraverseOptions};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let jobs = std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1);
    let (reg, report) = match traverse(n, &TraverseOptions { jobs, ..Default::default() }) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    print!("{}", report.to_text());
    println!("runtime {:.2?}", report.runtime);

    for (k, class) in ltype_classes(&reg).iter().enumerate() {
        let rep = &reg.records[class[0]];
        let fp = &rep.fingerprint;
        println!(
            "L-type {k}: {} domains, interior form det {}, min norm {} ({} vectors)",
            class.len(),
            fp.det,
            fp.min_norm,
            fp.min_count
        );
    }
    if n == 4 {
        let mut by_type: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for (i, rec) in reg.records.iter().enumerate() {
            by_type.entry(classify_type_dim4(rec).map_or("?", |t| t.name())).or_default().push(i);
        }
        for (t, ids) in by_type {
            println!("type {t}: {} domains, first few {:?}", ids.len(), &ids[..ids.len().min(6)]);
        }
    }
}
