//! Seeded random outerplanar graphs: a convex polygon split by non-crossing
//! chords, with a dial for how many of the possible chords survive.

use treespan::min_stretch;
use treespan::outerplanar::{outerplane_embed, random_outerplanar, Fraction};

fn main() {
    println!("n=40, sweeping the chord fraction:");
    for chords in ["0", "1/4", "1/2", "3/4", "1"] {
        let frac: Fraction = chords.parse().unwrap();
        let g = random_outerplanar(40, frac, 7);
        let t = min_stretch(&g).unwrap().t;
        println!(
            "  chords {chords:>3}: m={} faces={} min stretch {t}",
            g.m(),
            outerplane_embed(&g).unwrap().faces().len()
        );
    }

    let a = random_outerplanar(1000, Fraction::new(1, 3), 99);
    let b = random_outerplanar(1000, Fraction::new(1, 3), 99);
    println!("same seed reproduces the graph: {}", a.edges() == b.edges());

    let c = random_outerplanar(1000, Fraction::new(1, 3), 100);
    println!("next seed differs: {}", a.edges() != c.edges());
}
