//! The supply/demand tree partition solver on its own: split a tree so that
//! each part holds exactly one supply covering its demands.

use treespan::sdpartition::{solve_sd, verify_sd, SDInstance};

fn main() {
    // a path of demands fed from both ends
    let text = "\
6
S 4 D 2 D 1 D 2 D 1 S 3
0 1
1 2
2 3
3 4
4 5
";
    let inst = SDInstance::from_text(text).unwrap();
    println!("instance:\n{}", inst.to_text());

    let p = solve_sd(&inst).unwrap();
    println!("parts (supply listed first): {:?}", p.parts);
    verify_sd(&inst, &p).unwrap();
    println!("verified: connected, one supply each, within capacity");

    // shrink one supply until the same tree stops being coverable
    let tight = "\
6
S 4 D 2 D 1 D 2 D 1 S 1
0 1
1 2
2 3
3 4
4 5
";
    let inst = SDInstance::from_text(tight).unwrap();
    match solve_sd(&inst) {
        Ok(p) => println!("unexpected: {:?}", p.parts),
        Err(e) => println!("with the right supply at 1: infeasible, {e}"),
    }
}
