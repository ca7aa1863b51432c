// Persisting relative Severi degrees between runs. The cache file is plain
// text, one `d:delta:alpha|beta=value` line per entry.
//
// ```sh
// cargo run --release --example memo_cache -- /tmp/severi.cache
// ```

use std::path::Path;

use nodalgen::severi::{severi_degree, MemoCache};

pub fn run_example(path: &Path) -> nodalgen::Result<()> {
    let cache = if path.exists() { MemoCache::load(path)? } else { MemoCache::new() };
    println!("loaded {} entries", cache.len());
    let n = severi_degree(8, 10, &cache);
    println!("N(8, 10) = {n}");
    cache.save(path)?;
    println!("saved {} entries to {}", cache.len(), path.display());

    let reloaded = MemoCache::load(path)?;
    assert_eq!(severi_degree(8, 10, &reloaded), n);
    assert_eq!(reloaded.len(), cache.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "severi.cache".into());
    run_example(Path::new(&path))
}
