//! Acceptance run: one PASS/FAIL line per check, grouped by criterion.
//! All counts are exact (tolerance 0).
//!
//! Snark orders above `GIRTHGEN_ACCEPT_SNARK_ORDER` (default 24) are
//! reported as failing "not run" lines and are not asserted.

use girthgen::generate::BASE_CACHE_ENV;
use girthgen::verify::{self, Check, Options};
use girthgen::Result;

const SNARK_ORDER_ENV: &str = "GIRTHGEN_ACCEPT_SNARK_ORDER";

type Criterion = (u8, &'static str, Box<dyn Fn() -> Result<Vec<Check>>>);

fn criteria(opts: Options) -> Vec<Criterion> {
    vec![
        (
            1,
            "base counts against brute force",
            Box::new(|| verify::base_counts(&[4, 6, 8, 10, 12])),
        ),
        (
            2,
            "girth >= 5",
            Box::new(move || verify::run_suite("girth5", opts)),
        ),
        (
            3,
            "girth >= 6, tripod and H",
            Box::new(|| verify::girth6(&[24, 26])),
        ),
        (4, "girth >= 7, H", Box::new(|| verify::girth7(&[30, 32]))),
        (
            5,
            "snark counts",
            Box::new(move || verify::snarks(opts.max_snark_order)),
        ),
        (
            6,
            "look-ahead equivalence",
            Box::new(|| {
                verify::lookahead(
                    &[10, 12, 14, 16, 18, 20, 22, 24],
                    &[14, 16, 18, 20, 22, 24, 26],
                )
            }),
        ),
        (
            7,
            "appendix fixtures",
            Box::new(move || verify::run_suite("appendix", opts)),
        ),
        (8, "canonicity", Box::new(|| Ok(verify::canonicity(100)))),
        (9, "reducibility", Box::new(|| Ok(verify::reducibility(20)))),
    ]
}

fn main() {
    let cache = tempfile::tempdir_in(env!("CARGO_TARGET_TMPDIR")).unwrap();
    std::env::set_var(BASE_CACHE_ENV, cache.path());
    let max_snark_order = std::env::var(SNARK_ORDER_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(24);
    let opts = Options {
        full: false,
        max_snark_order,
    };

    let mut failed = Vec::new();
    for (id, title, run) in criteria(opts) {
        let start = std::time::Instant::now();
        let checks = run().unwrap_or_else(|e| panic!("criterion {id} ({title}): {e}"));
        for c in &checks {
            println!("[{id}] {c}");
            let skipped = c.actual.starts_with("not run");
            if !c.pass && !(id == 5 && skipped) {
                failed.push(format!("[{id}] {c}"));
            }
        }
        println!(
            "[{id}] {title}: {} checks in {:.1?}",
            checks.len(),
            start.elapsed()
        );
    }
    if !failed.is_empty() {
        eprintln!("failed checks:\n{}", failed.join("\n"));
        std::process::exit(1);
    }
    println!("acceptance: all asserted checks passed");
}
