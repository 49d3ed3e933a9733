#![allow(dead_code)]

use std::sync::OnceLock;

use chordal_betti::GluingSpec;

/// Every valid spec with at most 3 cliques of sizes 2..=5 on at most 10 vertices.
pub fn family() -> &'static [GluingSpec] {
    static FAMILY: OnceLock<Vec<GluingSpec>> = OnceLock::new();
    FAMILY.get_or_init(|| {
        let mut out = Vec::new();
        for e in 1..=3usize {
            let sizes: Vec<Vec<usize>> = (0..e).fold(vec![vec![]], |acc, _| {
                acc.into_iter()
                    .flat_map(|p: Vec<usize>| {
                        (2..=5).map(move |x| {
                            let mut p = p.clone();
                            p.push(x);
                            p
                        })
                    })
                    .collect()
            });
            for n in sizes {
                let gluings: Vec<Vec<usize>> = (1..e).fold(vec![vec![]], |acc, m| {
                    acc.into_iter()
                        .flat_map(|p: Vec<usize>| {
                            (0..n[m]).map(move |x| {
                                let mut p = p.clone();
                                p.push(x);
                                p
                            })
                        })
                        .collect()
                });
                for r in gluings {
                    if let Ok(spec) = GluingSpec::new(&n, &r) {
                        if spec.n_vertices() <= 10 {
                            out.push(spec);
                        }
                    }
                }
            }
        }
        out
    })
}

pub fn example() -> GluingSpec {
    GluingSpec::new(&[3, 5, 6], &[2, 3]).unwrap()
}
