//! Doubling benchmark on maximal instances. Times should roughly double with
//! n for both the single query and the full binary search.

use treespan::bench::benchmark;

fn main() {
    let report = benchmark(&[25_000, 50_000, 100_000], 3, 1007);
    print!("{}", report.render());

    for pair in report.rows.windows(2) {
        println!(
            "n {} -> {}: solve x{:.2}, minstretch x{:.2}",
            pair[0].n,
            pair[1].n,
            pair[1].solve_ms / pair[0].solve_ms,
            pair[1].min_stretch_ms / pair[0].min_stretch_ms
        );
    }
}
