// Runs the reproduction checks from library code and prints the same
// report as `nodalgen verify`.
//
// ```sh
// cargo run --release --example verify_report -- full
// ```

use nodalgen::cli::{run_verify, Format, Level};
use nodalgen::severi::MemoCache;

pub fn run_example(level: Level) -> nodalgen::Result<()> {
    let report = run_verify(level, &MemoCache::new());
    print!("{}", report.rendered()?.render(Format::Text)?);
    if !report.passed {
        return Err(nodalgen::Error::InvalidInput("some checks failed".into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    let level = match std::env::args().nth(1).as_deref() {
        Some("full") => Level::Full,
        _ => Level::Quick,
    };
    run_example(level)
}
