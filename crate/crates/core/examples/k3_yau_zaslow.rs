// Curves on K3 surfaces: `sum_l n_r(l) q^l = DG2^r / Delta`, where `n_r(l)`
// counts genus `r` curves in a class with `L^2 = 2l` through `r` points.
// For `r = 0` these are the rational curve counts `1, 24, 324, 3200, ...`.
//
// ```sh
// cargo run --release --example k3_yau_zaslow -- 12
// ```

use nodalgen::surfaces::k3_genus_series;

pub fn run_example(order: i64) -> nodalgen::Result<()> {
    for r in 0..3 {
        let s = k3_genus_series(r, order);
        println!("genus {}: {}", s.genus(), s.series);
    }
    let rational = k3_genus_series(0, order);
    println!("rational curves in a hyperplane class of a quartic (l = 2): {}", rational.count(2)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    let order = std::env::args().nth(1).map(|a| a.parse().expect("integer")).unwrap_or(8);
    run_example(order)
}
