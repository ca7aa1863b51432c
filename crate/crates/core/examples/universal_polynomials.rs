// Universal polynomials `T_delta(L^2, L.K, K^2, c2)` and their values on a
// few surfaces.
//
// ```sh
// cargo run --release --example universal_polynomials -- 4
// ```

use nodalgen::severi::MemoCache;
use nodalgen::universal::{default_degrees, fit_from_severi, tdelta_evaluate, tdelta_universal, SurfaceGeometry};

pub fn run_example(max_delta: usize) -> nodalgen::Result<()> {
    let fit = fit_from_severi(max_delta, &default_degrees(max_delta), &MemoCache::new())?;
    let table = tdelta_universal(&fit.b, max_delta)?;
    for (delta, t) in table.polys.iter().enumerate() {
        println!("T_{delta} = {t}");
    }

    let surfaces = [
        ("quartic plane curves", SurfaceGeometry::new(16, -12, 9, 3)),
        ("(2,2) curves on P1 x P1", SurfaceGeometry::new(8, -8, 8, 4)),
        ("hyperplane sections of a quintic surface", SurfaceGeometry::new(5, 5, 5, 55)),
    ];
    for (name, geom) in surfaces {
        let t = tdelta_evaluate(&geom, &fit.b, max_delta)?;
        let by_poly: Vec<_> = table.polys.iter().map(|p| p.eval(&geom.values())).collect();
        assert_eq!(t, by_poly);
        let t: Vec<String> = t.iter().map(|v| v.to_string()).collect();
        println!("{name}: {}", t.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nodalgen::Result<()> {
    let n = std::env::args().nth(1).map(|a| a.parse().expect("integer")).unwrap_or(3);
    run_example(n)
}
