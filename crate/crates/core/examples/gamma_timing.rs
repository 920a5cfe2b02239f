use std::time::Instant;

use totring::domin::{gamma_exact, SolveOptions};
use totring::graph::TotalGraph;
use totring::ring::{make_ring, RingSpec};

fn main() {
    let parallel = std::env::args().any(|a| a == "--parallel");
    let specs = [
        RingSpec::mat(2, RingSpec::Gf { p: 2, k: 1 }),
        RingSpec::mat(2, RingSpec::Zn(4)),
        RingSpec::mat(3, RingSpec::Gf { p: 2, k: 1 }),
        RingSpec::mat(2, RingSpec::Gf { p: 3, k: 1 }),
        RingSpec::mat(2, RingSpec::Gf { p: 2, k: 2 }),
    ];
    for spec in specs {
        let r = make_ring(&spec).unwrap();
        let g = TotalGraph::build(&r);
        let t = Instant::now();
        let e = gamma_exact(&g, &SolveOptions { parallel, ..Default::default() }).unwrap();
        println!("{spec}: gamma={} lb={} greedy={} in {:.2?}", e.gamma, e.lower_bound, e.greedy, t.elapsed());
    }
}
