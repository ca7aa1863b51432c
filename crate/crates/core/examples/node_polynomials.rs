// Node polynomials of the plane. `P_delta(d)` counts `delta`-nodal degree `d`
// curves through the right number of points once `delta <= 2d - 2`. Its
// leading coefficients have the shape
// `p_mu(delta) = 3^(delta - [mu/2]) Q_mu(delta) / ((delta - [(mu+1)/2])! mu!)`
// with `Q_mu` an integer polynomial of degree `[mu/2]`.
//
// ```sh
// cargo run --release --example node_polynomials -- 10
// ```

use nodalgen::severi::{severi_degree, MemoCache};
use nodalgen::surfaces::{node_polynomials, qmu_extract, split_two_three};
use nodalgen::universal::{default_degrees, fit_from_severi};
use nodalgen::Rational;

pub fn run_example(mu_max: usize) -> nodalgen::Result<()> {
    let cache = MemoCache::new();
    let order = mu_max / 2 * 2 + 2;
    let b = fit_from_severi(order, &default_degrees(order), &cache)?.b;

    for p in node_polynomials(4, &b)? {
        println!("P_{}(d) = {}", p.delta, p.poly.display_in("d"));
        let d = p.delta as u32 + 1;
        let n = Rational::from_integer(severi_degree(d, p.delta as u32, &cache).into());
        assert_eq!(p.eval(d as i64), n);
    }
    for mu in 0..=mu_max {
        let (sign, a, c, rest) = split_two_three(&qmu_extract(mu, &b)?);
        println!("Q_{mu} = {sign} * 2^{a} * 3^{c} * ({})", rest.display_in("delta"));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    let mu = std::env::args().nth(1).map(|a| a.parse().expect("integer")).unwrap_or(8);
    run_example(mu)
}
