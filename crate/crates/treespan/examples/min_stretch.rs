//! Minimum stretch across the fixture zoo and a random instance. Cycles are
//! the worst case: the only spanning tree of C_n is a path with stretch n-1.

use treespan::fixtures;
use treespan::min_stretch;
use treespan::outerplanar::{random_outerplanar, Fraction};

fn main() {
    let zoo = [
        ("triangle", fixtures::cycle(3)),
        ("C8", fixtures::cycle(8)),
        ("square + chord", fixtures::d4()),
        ("fan on 5", fixtures::fan5()),
        ("hexagon + 3 chords", fixtures::hex6()),
        ("bowtie", fixtures::bowtie()),
    ];
    for (name, g) in zoo {
        let r = min_stretch(&g).unwrap();
        println!("{name:20} n={} m={} min stretch {}", g.n(), g.m(), r.t);
    }

    let g = random_outerplanar(1000, Fraction::new(1, 2), 42);
    let r = min_stretch(&g).unwrap();
    println!("random n=1000 half the chords: min stretch {}", r.t);
    for (i, b) in r.blocks.iter().enumerate().take(3) {
        println!(
            "  block {i}: {} vertices, {} edges, solved at t={}",
            b.vertex_count,
            b.edge_count,
            b.t.unwrap()
        );
    }
}
