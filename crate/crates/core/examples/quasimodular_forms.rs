// The quasimodular forms behind the generating function: Eisenstein series,
// the discriminant and the derivatives of `G2`.
//
// ```sh
// cargo run --release --example quasimodular_forms -- 10
// ```

use nodalgen::modforms::{delta, delta_pentagonal, eisenstein, form, FormName};
use nodalgen::qseries::int;

pub fn run_example(order: i64) -> nodalgen::Result<()> {
    for name in FormName::ALL {
        println!("{name} = {}", form(name, order));
    }
    // 1728 Delta = E4^3 - E6^2 with E4 = 240 G4, E6 = -504 G6
    let e4 = eisenstein(4, order)?.scale(&int(240));
    let e6 = eisenstein(6, order)?.scale(&int(-504));
    let lhs = &(&(&e4 * &e4) * &e4) - &(&e6 * &e6);
    assert_eq!(lhs, delta(order).scale(&int(1728)));
    assert_eq!(delta(order), delta_pentagonal(order));
    println!("E4^3 - E6^2 = 1728 Delta to q^{}", order - 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    let order = std::env::args().nth(1).map(|a| a.parse().expect("integer")).unwrap_or(8);
    run_example(order)
}
