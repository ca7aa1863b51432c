// Curves on Enriques surfaces, `sum_l n_r(l) q^l = DG2^r (D^2G2 / Delta)^(1/2)`,
// computed both from the closed form and from the general generating
// function with `K^2 = 0`, `c2 = 12`.
//
// ```sh
// cargo run --release --example enriques_curves -- 10
// ```

use nodalgen::surfaces::{enriques_genus_series, GenusTag};
use nodalgen::universal::{nr_series, BSeriesPair};

pub fn run_example(order: i64) -> nodalgen::Result<()> {
    let geom = GenusTag::Enriques.geometry(0);
    // K^2 = 0 and L.K = 0, so B1 and B2 drop out
    let b = BSeriesPair::trivial(order + 2);
    for r in 0..3 {
        let closed = enriques_genus_series(r, order);
        let general = nr_series(&geom, 0, r, &b, order)?;
        assert_eq!(closed.series, general.truncate(order));
        println!("genus {}: {}", closed.genus(), closed.series);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    let order = std::env::args().nth(1).map(|a| a.parse().expect("integer")).unwrap_or(8);
    run_example(order)
}
