//! Command-line front end. Exit codes: 0 solved or verified, 1 no spanner
//! within the bound (or a failed verification), 2 input outside the solvable
//! class, 3 unreadable or malformed input.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use treespan::bench::{benchmark, DEFAULT_RUNS, DEFAULT_SIZES};
use treespan::io::{
    graph_to_text, parse_graph_file, parse_tree_file, render_result,
    result_json,
};
use treespan::outerplanar::{random_outerplanar, Fraction};
use treespan::solver::canonical_blocks;
use treespan::{min_stretch, tree_t_spanner, Graph, SpanningTree};

#[derive(Parser)]
#[command(name = "treespan", version, about = "tree spanners of outerplanar graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether a spanning tree with stretch at most t exists, and print one
    Solve {
        /// Graph file: "n m" header, then one "u v" line per edge
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        json: bool,
    },
    /// Find the minimum stretch spanning tree
    Minstretch {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compute the exact stretch of a given spanning tree
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Tree file: one "u v" line per tree edge
        #[arg(long)]
        tree: PathBuf,
        /// Also require the stretch to stay within this bound
        #[arg(long)]
        t: Option<u32>,
        /// Also check the per-block canonical shape
        #[arg(long)]
        check_canonical: bool,
    },
    /// Generate a random connected outerplanar graph on stdout
    Gen {
        #[arg(long)]
        n: usize,
        /// Fraction of the possible chords to keep, e.g. 1/2, 0.3, or 1
        #[arg(long, default_value = "1")]
        chords: Fraction,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Time solve and minstretch across instance sizes
    Bench {
        /// Comma-separated vertex counts
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_RUNS)]
        runs: usize,
        #[arg(long)]
        json: bool,
    },
}

fn read(path: &PathBuf) -> Result<String, u8> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        3
    })
}

fn load_graph(path: &PathBuf) -> Result<Graph, u8> {
    parse_graph_file(&read(path)?).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        3
    })
}

fn run(cmd: Cmd) -> u8 {
    match cmd {
        Cmd::Solve { input, t, json } => {
            let Ok(g) = load_graph(&input) else { return 3 };
            let clock = Instant::now();
            match tree_t_spanner(&g, t) {
                Ok(r) => {
                    let ms = clock.elapsed().as_secs_f64() * 1e3;
                    if json {
                        println!("{}", result_json(&g, &r, Some(ms)));
                    } else {
                        print!("{}", render_result(&g, &r));
                    }
                    u8::from(!r.exists())
                }
                Err(e) => {
                    eprintln!("{e}");
                    2
                }
            }
        }
        Cmd::Minstretch { input, json } => {
            let Ok(g) = load_graph(&input) else { return 3 };
            let clock = Instant::now();
            match min_stretch(&g) {
                Ok(r) => {
                    let ms = clock.elapsed().as_secs_f64() * 1e3;
                    if json {
                        println!("{}", result_json(&g, &r, Some(ms)));
                    } else {
                        print!("{}", render_result(&g, &r));
                    }
                    0
                }
                Err(e) => {
                    eprintln!("{e}");
                    2
                }
            }
        }
        Cmd::Verify { input, tree, t, check_canonical } => {
            let Ok(g) = load_graph(&input) else { return 3 };
            let ids = match read(&tree).map(|text| parse_tree_file(&text, &g)) {
                Ok(Ok(ids)) => ids,
                Ok(Err(e)) => {
                    eprintln!("{}: {e}", tree.display());
                    return 3;
                }
                Err(code) => return code,
            };
            let tree = match SpanningTree::build(&g, &ids) {
                Ok(tree) => tree,
                Err(e) => {
                    eprintln!("{e}");
                    return 1;
                }
            };
            let cert = treespan::graph::stretch(&g, &tree);
            println!("stretch {}", cert.t());
            if let Some(e) = cert.witness() {
                let (u, v) = g.endpoints(e);
                println!("witness {u} {v}");
            }
            let mut failed = false;
            if let Some(bound) = t {
                let ok = cert.t() <= bound;
                println!("within_bound {}", if ok { "yes" } else { "no" });
                failed |= !ok;
            }
            if check_canonical {
                match canonical_blocks(&g, &tree) {
                    Ok(reports) => {
                        for (i, report) in reports {
                            let ok = report.is_canonical();
                            println!(
                                "block {i} canonical {}",
                                if ok { "yes" } else { "no" }
                            );
                            failed |= !ok;
                        }
                    }
                    Err(e) => {
                        eprintln!("{e}");
                        return 2;
                    }
                }
            }
            u8::from(failed)
        }
        Cmd::Gen { n, chords, seed } => {
            if n < 3 {
                eprintln!("need at least 3 vertices, got {n}");
                return 3;
            }
            print!("{}", graph_to_text(&random_outerplanar(n, chords, seed)));
            0
        }
        Cmd::Bench { sizes, runs, json } => {
            let sizes = sizes.unwrap_or_else(|| DEFAULT_SIZES.to_vec());
            let report = benchmark(&sizes, runs.max(1), 1007);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render());
            }
            0
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse().cmd))
}
