//! Run every verification suite at reduced bounds.

use bypass_thh::suite::{run_all, SuiteConfig};

fn main() {
    let cfg = SuiteConfig {
        max_edges: 3,
        max_vertices: 2,
        ..SuiteConfig::default()
    };
    let checks = run_all(&cfg);
    for c in &checks {
        println!("[{}] {}", c.criterion, c.line());
    }
    if checks.iter().any(|c| !c.pass) {
        std::process::exit(1);
    }
}
