// Exact truncated Laurent series: arithmetic, `exp`/`log`, composition and
// re-expansion in powers of another series.
//
// ```sh
// cargo run --release --example series_arithmetic
// ```

use nodalgen::modforms::{delta, dg2};
use nodalgen::qseries::rat;
use nodalgen::QSeries;

pub fn run_example() -> nodalgen::Result<()> {
    let p = 8;
    let inv = delta(p + 2).inverse()?;
    println!("1/Delta = {inv}");

    let f = QSeries::from_integers(0, &[1, 1, 2, 5, 14, 42, 132, 429], p);
    let log = f.log()?;
    println!("log f = {log}");
    assert_eq!(log.exp()?, f);
    println!("sqrt f = {}", f.pow_rational(&rat(1, 2))?);

    let q = QSeries::<nodalgen::Rational>::q(p);
    let geometric = QSeries::from_integers(0, &[1; 8], p);
    println!("1/(1-x) at x = q + q^2: {}", geometric.compose(&(&q + &(&q * &q)))?);

    // q itself in powers of x = DG2
    let x = dg2(p);
    let c = q.expand_in_base(&x)?;
    let c: Vec<String> = c.iter().map(|r| r.to_string()).collect();
    println!("q = sum c_k DG2^k with c = [{}]", c.join(", "));
    println!("as JSON: {}", f.to_json().replace('\n', " "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    run_example()
}
