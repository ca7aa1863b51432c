// Genus 2 curves on abelian surfaces. A polarisation of type `(1, n)` holds
// `n^2 sigma_1(n)` of them, the `q^n` coefficient of `D^2G2`. Higher genus
// counts come from `DG2^r D^2G2`, or equivalently from `(1/z) D exp(DG2 z)`.
//
// ```sh
// cargo run --release --example abelian_genus_two -- 12
// ```

use nodalgen::surfaces::{abelian_egf_check, abelian_genus2_count, abelian_genus_series};

pub fn run_example(n_max: i64) -> nodalgen::Result<()> {
    let s = abelian_genus_series(0, n_max + 1);
    for n in 1..=n_max {
        let count = s.count(n)?;
        println!("(1,{n}): {count} genus 2 curves");
        assert_eq!(count, abelian_genus2_count(n as u64).into());
    }
    for r in 1..3 {
        let s = abelian_genus_series(r, n_max + 1);
        println!("genus {} through {r} points: {}", s.genus(), s.series);
    }
    println!("generating function identity holds: {}", abelian_egf_check(n_max + 1, 4));
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    let n = std::env::args().nth(1).map(|a| a.parse().expect("integer")).unwrap_or(8);
    run_example(n)
}
