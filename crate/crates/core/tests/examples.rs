mod severi_degrees {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/severi_degrees.rs"));
}
mod fit_b_series {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fit_b_series.rs"));
}
mod universal_polynomials {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/universal_polynomials.rs"));
}
mod k3_yau_zaslow {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/k3_yau_zaslow.rs"));
}
mod abelian_genus_two {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/abelian_genus_two.rs"));
}
mod enriques_curves {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/enriques_curves.rs"));
}
mod node_polynomials {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/node_polynomials.rs"));
}
mod ruled_surfaces {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ruled_surfaces.rs"));
}
mod quasimodular_forms {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quasimodular_forms.rs"));
}
mod series_arithmetic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/series_arithmetic.rs"));
}
mod memo_cache {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/memo_cache.rs"));
}
mod verify_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_report.rs"));
}

#[test]
fn severi_degrees_runs() {
    severi_degrees::run_example(5, 6).expect("severi example");
}

#[test]
fn fit_b_series_runs() {
    fit_b_series::run_example(6, &[4, 5, 6]).expect("fit example");
}

#[test]
fn universal_polynomials_runs() {
    universal_polynomials::run_example(3).expect("universal example");
}

#[test]
fn k3_runs() {
    k3_yau_zaslow::run_example(6).expect("k3 example");
}

#[test]
fn abelian_runs() {
    abelian_genus_two::run_example(8).expect("abelian example");
}

#[test]
fn enriques_runs() {
    enriques_curves::run_example(6).expect("enriques example");
}

#[test]
fn node_polynomials_runs() {
    node_polynomials::run_example(4).expect("node polynomial example");
}

#[test]
fn ruled_surfaces_runs() {
    ruled_surfaces::run_example(1, 4, 2).expect("ruled example");
}

#[test]
fn quasimodular_forms_runs() {
    quasimodular_forms::run_example(12).expect("forms example");
}

#[test]
fn series_arithmetic_runs() {
    series_arithmetic::run_example().expect("series example");
}

#[test]
fn memo_cache_runs_twice() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("severi.cache");
    memo_cache::run_example(&path).expect("first run");
    memo_cache::run_example(&path).expect("second run from the saved cache");
}

#[test]
fn verify_report_runs() {
    verify_report::run_example(nodalgen::cli::Level::Quick).expect("quick verify passes");
}
