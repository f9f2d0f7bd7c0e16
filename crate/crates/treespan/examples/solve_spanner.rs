//! Decide whether a tree t-spanner exists and build one, then read the
//! stretch certificate edge by edge.

use treespan::fixtures;
use treespan::io::render_result;
use treespan::tree_t_spanner;

fn main() {
    let g = fixtures::hex6();

    for t in [2, 3] {
        println!("--- hexagon with three chords, t = {t}");
        let r = tree_t_spanner(&g, t).unwrap();
        print!("{}", render_result(&g, &r));
        if let Some(cert) = &r.certificate {
            for &(e, detour) in cert.per_edge() {
                let (u, v) = g.endpoints(e);
                println!("dropped edge ({u},{v}) detours through {detour} tree edges");
            }
        }
    }
}
