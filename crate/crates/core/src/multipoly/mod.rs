//! Exact polynomials used as series coefficients: [`Poly4`] in the four
//! intersection numbers `(L^2, L.K, K^2, c2)` and univariate [`Poly1`].

mod poly1;
mod poly4;

pub use poly1::Poly1;
pub use poly4::{Exponent, Poly4, Poly4Document, VARIABLES};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::qseries::{int, rat, Coefficient, Rational, TextCoefficient};
    use proptest::prelude::*;

    fn sample() -> Poly4 {
        // 3x + 2y + t
        Poly4::linear([int(3), int(2), int(0), int(1)], int(0))
    }

    #[test]
    fn ring_operations() {
        let (x, y) = (Poly4::x(), Poly4::y());
        let lhs = (x.clone() + y.clone()) * (x.clone() - y.clone());
        let rhs = x.mul_ref(&x) - y.mul_ref(&y);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 2);

        let half = sample().scale(&rat(1, 2));
        assert_eq!(half, Poly4::linear([rat(3, 2), int(1), int(0), rat(1, 2)], int(0)));
        assert_eq!(sample().mul_ref(&sample()).degree(), Some(2));
        assert_eq!((sample() - sample()).degree(), None);
    }

    #[test]
    fn evaluation() {
        let d = int(3);
        let at = [&d * &d, -int(3) * &d, int(9), int(3)];
        assert_eq!(sample().eval(&at), int(12));
        assert_eq!(Poly4::constant(int(1)).eval(&at), int(1));
        assert_eq!(Poly4::x().eval(&[int(10), int(0), int(0), int(0)]), int(10));
    }

    #[test]
    fn plane_specialization() {
        assert_eq!(sample().specialize_p2(), Poly1::from_integers(&[3, -6, 3]));
        assert_eq!(Poly4::t().specialize_p2(), Poly1::from_integers(&[3]));
        assert_eq!(Poly4::x().mul_ref(&Poly4::y()).specialize_p2(), Poly1::from_integers(&[0, 0, 0, -3]));
    }

    #[test]
    fn interpolation() {
        let p = Poly1::interpolate(&[(int(0), int(1)), (int(1), int(1))]).unwrap();
        assert_eq!(p, Poly1::from_integers(&[1]));
        let p = Poly1::interpolate(&[(int(0), int(0)), (int(1), int(1)), (int(2), int(4))]).unwrap();
        assert_eq!(p, Poly1::from_integers(&[0, 0, 1]));
        assert!(matches!(
            Poly1::interpolate(&[(int(1), int(0)), (int(1), int(2))]),
            Err(Error::DuplicateAbscissa(_))
        ));

        // Q_8 = -2^4 (282855 d^4 - 931146 d^3 + 417490 d^2 + 425202 d + 1141616)
        let q8 = Poly1::from_integers(&[1141616, 425202, 417490, -931146, 282855]).scale(&int(-16));
        let pts: Vec<(Rational, Rational)> = (4..9).map(|k| (int(k), q8.eval(&int(k)))).collect();
        assert_eq!(Poly1::interpolate(&pts).unwrap(), q8);
    }

    #[test]
    fn text_formats() {
        let p = Poly4::from_terms([([2, 0, 0, 1], rat(-3, 2)), ([1, 0, 0, 0], int(3)), ([0; 4], int(7))]);
        assert_eq!(p.to_string(), "-3/2 * x^2 t + 3 * x + 7");
        assert_eq!(Poly4::parse_text(&p.to_text()).unwrap(), p);
        let doc = p.to_document();
        assert_eq!(doc.terms, vec!["-3/2 * x^2 t", "3 * x", "7"]);
        assert_eq!(Poly4::from_document(&doc).unwrap(), p);
        assert_eq!(Poly4::parse_text("0").unwrap(), Poly4::default());

        let q = Poly1::from_integers(&[3, -6, 3]);
        assert_eq!(q.to_string(), "3*d^2 + -6*d + 3");
        assert_eq!(Poly1::parse_text(&q.to_text()).unwrap(), q);
    }

    fn poly4() -> impl Strategy<Value = Poly4> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3, 0u32..3), -50i64..50, 1i64..10), 0..8)
            .prop_map(|ts| Poly4::from_terms(ts.into_iter().map(|((a, b, c, d), n, m)| ([a, b, c, d], rat(n, m)))))
    }

    proptest! {
        #[test]
        fn specialize_then_eval(p in poly4(), d in -20i64..20) {
            let d = int(d);
            let direct = p.eval(&[&d * &d, -int(3) * &d, int(9), int(3)]);
            prop_assert_eq!(p.specialize_p2().eval(&d), direct);
        }

        #[test]
        fn interpolation_reproduces_samples(ys in proptest::collection::vec(-1000i64..1000, 1..8)) {
            let pts: Vec<(Rational, Rational)> = ys.iter().enumerate().map(|(i, &y)| (int(i as i64 * 2 - 3), int(y))).collect();
            let p = Poly1::interpolate(&pts).unwrap();
            for (x, y) in &pts {
                prop_assert_eq!(&p.eval(x), y);
            }
            prop_assert!(p.degree().map_or(true, |d| d < pts.len()));
        }
    }
}
