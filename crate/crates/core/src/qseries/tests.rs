use super::*;
use proptest::prelude::*;

fn s(start: i64, c: &[i64], p: i64) -> QSeries {
    QSeries::from_integers(start, c, p)
}

fn ints(x: &[Rational]) -> Vec<i64> {
    x.iter().map(|r| i64::try_from(r.to_integer()).unwrap()).collect()
}

/// q^-1 prod_{k>=1} (1-q^k)^-24 by plain integer convolution, as coefficients from q^-1.
fn inverse_delta_oracle(n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n];
    out[0] = 1;
    for k in 1..n {
        // multiply by (1 - q^k)^-1 twenty-four times
        for _ in 0..24 {
            for i in k..n {
                out[i] += out[i - k];
            }
        }
    }
    out
}

#[test]
fn add_cancels_and_takes_min_precision() {
    let a = s(1, &[1, 1], 3);
    let b = s(1, &[-1], 3);
    assert_eq!(&a + &b, s(2, &[1], 3));

    let one = QSeries::<Rational>::one(5);
    let z = QSeries::zero(2);
    assert_eq!(&one + &z, QSeries::one(2));

    let lo = s(-1, &[1], 2);
    let hi = s(1, &[1], 2);
    let sum = &lo + &hi;
    assert_eq!(sum.valuation(), -1);
    assert_eq!(ints(sum.coefficients()), vec![1, 0, 1]);
}

#[test]
fn mul_examples() {
    let a = s(0, &[1, 1], 3);
    let b = s(0, &[1, -1], 3);
    assert_eq!(&a * &b, s(0, &[1, 0, -1], 3));

    let qinv = s(-1, &[1], 5);
    let q = s(1, &[1], 7);
    assert_eq!((&qinv * &q).coeff(0).unwrap(), int(1));

    let x = s(0, &[1, 24, 324], 3);
    let y = s(1, &[1, -24, 252], 4);
    let prod = &x * &y;
    assert_eq!(prod.precision(), 4);
    assert_eq!(prod, s(1, &[1, 0, 0], 4));
}

#[test]
fn div_examples() {
    let dg2 = s(1, &[1, 6, 12], 4);
    let q = s(1, &[1], 10);
    assert_eq!(dg2.div_series(&q).unwrap(), s(0, &[1, 6, 12], 3));

    let geo = QSeries::<Rational>::one(4).div_series(&s(0, &[1, -1], 4)).unwrap();
    assert_eq!(geo, s(0, &[1, 1, 1, 1], 4));

    let delta = s(1, &[1, -24, 252, -1472], 5);
    let inv = delta.inverse().unwrap();
    assert_eq!(inv.valuation(), -1);
    assert_eq!(inv.precision(), 3);
    let oracle = inverse_delta_oracle(4);
    assert_eq!(ints(inv.coefficients()), oracle);
    assert_eq!(oracle, vec![1, 24, 324, 3200]);

    assert!(matches!(
        QSeries::<Rational>::one(3).div_series(&QSeries::zero(3)),
        Err(Error::DivisionByZeroSeries)
    ));
}

#[test]
fn derivation_examples() {
    let g2 = QSeries::new(0, vec![rat(-1, 24), int(1), int(3), int(4)], 4);
    assert_eq!(g2.derivative(), s(1, &[1, 6, 12], 4));
    assert!(QSeries::<Rational>::constant(rat(5, 7), 6).derivative().is_zero());
    assert_eq!(s(-1, &[1], 3).derivative(), s(-1, &[-1], 3));
}

#[test]
fn exp_log_examples() {
    let e = s(1, &[1], 3).exp().unwrap();
    assert_eq!(e, QSeries::new(0, vec![int(1), int(1), rat(1, 2)], 3));
    assert_eq!(QSeries::<Rational>::zero(4).exp().unwrap(), QSeries::one(4));
    assert_eq!(s(1, &[6, -6, 28], 4).exp().unwrap(), s(0, &[1, 6, 12, 28], 4));
    assert!(matches!(s(0, &[1, 1], 3).exp(), Err(Error::PositiveValuationRequired(0))));

    assert_eq!(s(0, &[1, 6, 12, 28], 4).log().unwrap(), s(1, &[6, -6, 28], 4));
    assert!(QSeries::<Rational>::one(5).log().unwrap().is_zero());
    let f = s(1, &[3, 0, 5], 6);
    assert_eq!(f.exp().unwrap().log().unwrap(), f);
    assert!(matches!(s(0, &[2, 1], 3).log(), Err(Error::UnitConstantTermRequired)));
}

#[test]
fn pow_examples() {
    // D^2 G2 / Delta = 1 + 36 q + ..., square root 1 + 18 q
    let a = s(0, &[1, 36], 2);
    assert_eq!(a.pow_rational(&rat(1, 2)).unwrap(), s(0, &[1, 18], 2));
    assert_eq!(s(0, &[1, 1], 10).pow_int(3).unwrap(), s(0, &[1, 3, 3, 1], 10));
    let inv = s(1, &[1, -24, 252], 4).pow_int(-2).unwrap();
    assert_eq!(inv.valuation(), -2);
    assert!(matches!(s(0, &[2, 1], 3).pow_rational(&rat(1, 2)), Err(Error::UnitConstantTermRequired)));
}

#[test]
fn compose_examples() {
    let x2 = s(2, &[1], 6);
    let g = s(1, &[1, 1], 6);
    assert_eq!(x2.compose(&g).unwrap(), s(2, &[1, 2, 1], 6));

    let f = s(0, &[3, 1, 4, 1, 5], 5);
    assert_eq!(f.compose(&s(1, &[1], 5)).unwrap(), f);

    let inv = s(1, &[1, -6, 60], 4);
    let dg2 = s(1, &[1, 6, 12, 28], 5);
    assert_eq!(inv.compose(&dg2).unwrap(), s(1, &[1], 4));

    assert!(matches!(f.compose(&s(0, &[1, 1], 4)), Err(Error::PositiveValuationRequired(0))));
    assert!(matches!(s(-1, &[1], 3).compose(&g), Err(Error::NegativeValuationUnsupported(-1))));
}

#[test]
fn expand_in_base_examples() {
    let g = s(1, &[1, 6, 12, 28], 6);
    let c = g.expand_in_base(&g).unwrap();
    assert_eq!(ints(&c), vec![0, 1, 0, 0, 0, 0]);

    // q = g / (1 + g) for g = q / (1 - q)
    let g = s(1, &[1, 1, 1, 1, 1, 1], 7);
    let c = s(1, &[1], 7).expand_in_base(&g).unwrap();
    assert_eq!(ints(&c), vec![0, 1, -1, 1, -1, 1, -1]);

    assert!(matches!(
        g.expand_in_base(&s(2, &[1], 5)),
        Err(Error::BaseValuationMustBeOne(2))
    ));
    assert!(matches!(
        g.expand_in_base(&s(1, &[0], 5)),
        Err(Error::BaseValuationMustBeOne(_))
    ));
}

#[test]
fn expand_half_log_dg2_gives_c1() {
    // sigma_1(n) * n for n = 1..7
    let dg2 = s(1, &[1, 6, 12, 28, 30, 72, 56], 8);
    let half_log = dg2.shift(-1).log().unwrap().scale(&rat(1, 2));
    let a = half_log.expand_in_base(&dg2).unwrap();
    let b = half_log.expand_in_base_residue(&dg2).unwrap();
    assert_eq!(a, b);
    assert_eq!(ints(&a[..4]), vec![0, 3, -21, 230]);
}

#[test]
fn coeff_access() {
    let inv = s(1, &[1, -24, 252], 4).inverse().unwrap();
    assert_eq!(inv.coeff(-1).unwrap(), int(1));
    assert_eq!(s(1, &[1, 6, 12, 28, 30], 6).coeff(4).unwrap(), int(28));
    assert_eq!(QSeries::<Rational>::zero(3).coeff(0).unwrap(), int(0));
    assert!(matches!(inv.coeff(5), Err(Error::OutOfPrecision { n: 5, .. })));
}

#[test]
fn json_round_trip() {
    let a = QSeries::new(-1, vec![int(1), rat(-3, 4), int(0), rat(12345678901, 2)], 3);
    let doc = a.to_document();
    assert_eq!(doc.coefficients, vec!["1", "-3/4", "0", "12345678901/2"]);
    assert_eq!(QSeries::<Rational>::from_json(&a.to_json()).unwrap(), a);
    let z = QSeries::<Rational>::zero(4);
    assert_eq!(QSeries::<Rational>::from_json(&z.to_json()).unwrap(), z);
}

#[test]
fn display() {
    let a = s(-1, &[1, 24, 324], 2);
    assert_eq!(a.to_string(), "q^-1 + 24 + 324*q + O(q^2)");
    assert_eq!(QSeries::<Rational>::zero(3).to_string(), "O(q^3)");
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| rat(n, d))
}

fn series(min_val: i64, max_val: i64) -> impl Strategy<Value = QSeries> {
    (min_val..=max_val, 2i64..=20).prop_flat_map(move |(v, p)| {
        let len = (p - v).max(1) as usize;
        proptest::collection::vec(small_rational(), len).prop_map(move |c| QSeries::new(v, c, p.max(v + 1)))
    })
}

fn unit_leading(v: i64) -> impl Strategy<Value = QSeries> {
    (2i64..=14, 1i64..=9).prop_flat_map(move |(p, lead)| {
        let len = (p - v).max(1) as usize;
        proptest::collection::vec(small_rational(), len - 1).prop_map(move |rest| {
            let mut c = vec![int(lead)];
            c.extend(rest);
            QSeries::new(v, c, v + len as i64)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn exp_log_round_trip(f in series(1, 1)) {
        prop_assert_eq!(f.exp().unwrap().log().unwrap(), f);
    }

    #[test]
    fn base_expansion_round_trip(f in series(0, 2), g in unit_leading(1)) {
        let c = f.expand_in_base(&g).unwrap();
        let p = f.precision().min(g.precision());
        prop_assert_eq!(c.len() as i64, p);
        prop_assert_eq!(QSeries::from_base_expansion(&c, &g, p), f.truncate(p));
    }

    #[test]
    fn residue_and_elimination_agree(f in series(0, 2), g in unit_leading(1)) {
        prop_assert_eq!(f.expand_in_base(&g).unwrap(), f.expand_in_base_residue(&g).unwrap());
    }

    #[test]
    fn leibniz(a in series(-2, 3), b in series(-2, 3)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_root_squares_back(tail in proptest::collection::vec(small_rational(), 1..15)) {
        let mut c = vec![int(1)];
        c.extend(tail);
        let p = c.len() as i64;
        let a = QSeries::new(0, c, p);
        let r = a.pow_rational(&rat(1, 2)).unwrap();
        prop_assert_eq!(&r * &r, a);
    }

    #[test]
    fn inverse_is_inverse(a in unit_leading(-1)) {
        let prod = &a * &a.inverse().unwrap();
        prop_assert_eq!(prod.clone(), QSeries::one(prod.precision()));
    }
}
