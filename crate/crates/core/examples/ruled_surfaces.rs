// Predicted nodal curve counts for `nF + mE` on the Hirzebruch surface
// `Sigma_e`, flagged with the range in which they are expected to be actual
// counts.
//
// ```sh
// cargo run --release --example ruled_surfaces -- 1 4 2
// ```

use nodalgen::severi::MemoCache;
use nodalgen::surfaces::ruled_predictions;
use nodalgen::universal::{default_degrees, fit_from_severi};

pub fn run_example(e: i64, n: i64, m: i64) -> nodalgen::Result<()> {
    let delta_max = 8;
    let b = fit_from_severi(delta_max, &default_degrees(delta_max), &MemoCache::new())?.b;
    println!("Sigma_{e}, L = {n}F + {m}E");
    for p in ruled_predictions(e, n, m, delta_max, &b)? {
        let note = if p.valid { "" } else { "  (outside the validity range)" };
        println!("  delta = {}: {}{note}", p.delta, p.value);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    match args[..] {
        [e, n, m] => run_example(e, n, m),
        _ => run_example(0, 2, 3),
    }
}
