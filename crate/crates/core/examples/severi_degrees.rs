// Plane Severi degrees from the Caporaso–Harris recursion.
//
// ```sh
// cargo run --release --example severi_degrees -- 8 14
// ```

use nodalgen::severi::{severi_table, MemoCache};

pub fn run_example(d_max: u32, delta_max: u32) -> nodalgen::Result<()> {
    let cache = MemoCache::new();
    let table = severi_table(d_max, delta_max, &cache);
    for d in 1..=d_max {
        let row: Vec<String> = table.row(d).iter().map(|n| n.to_string()).collect();
        println!("d={d:2}: {}", row.join(" "));
    }
    println!("{} relative degrees cached", cache.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().expect("integer argument"));
    let d_max = args.next().unwrap_or(6);
    let delta_max = args.next().unwrap_or(8);
    run_example(d_max, delta_max)
}
