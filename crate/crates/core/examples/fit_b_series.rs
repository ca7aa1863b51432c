// Fits the universal series `B1`, `B2` from plane Severi degrees and checks
// that every admissible pair of degrees agrees.
//
// ```sh
// cargo run --release --example fit_b_series -- 20 11 12
// ```

use nodalgen::severi::MemoCache;
use nodalgen::universal::{default_degrees, fit_from_severi};

pub fn run_example(max_delta: usize, degrees: &[u32]) -> nodalgen::Result<()> {
    let cache = MemoCache::new();
    let fit = fit_from_severi(max_delta, degrees, &cache)?;
    println!("degrees {:?}, {} pair solutions, consistent: {}", fit.degrees, fit.report.len(), fit.is_consistent());
    println!("B1 = {}", fit.b.b1);
    println!("B2 = {}", fit.b.b2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_delta: usize = args.next().map(|a| a.parse().expect("integer")).unwrap_or(8);
    let mut degrees: Vec<u32> = args.map(|a| a.parse().expect("integer")).collect();
    if degrees.is_empty() {
        degrees = default_degrees(max_delta);
    }
    run_example(max_delta, &degrees)
}
