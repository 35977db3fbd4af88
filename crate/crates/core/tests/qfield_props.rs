use iet::{QuadNum, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn qnum(d: i64) -> impl Strategy<Value = QuadNum> {
    (rat(), rat()).prop_map(move |(p, q)| QuadNum::new(p, q, d).unwrap())
}

fn field() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![2i64, 3, 5, 7, 13])
}

/// Sign from a 100-digit enclosure of √d.
fn sign_oracle(x: &QuadNum) -> Option<i32> {
    let scale = BigInt::from(10).pow(100);
    let s = (BigInt::from(x.d()) * &scale * &scale).sqrt();
    let lo = Rational::new(s.clone(), scale.clone());
    let hi = Rational::new(s + 1, scale);
    let a = x.p() + x.q() * &lo;
    let b = x.p() + x.q() * &hi;
    let zero = Rational::from_integer(0.into());
    if x.q() == &zero {
        return Some(if a > zero { 1 } else if a < zero { -1 } else { 0 });
    }
    if a > zero && b > zero {
        Some(1)
    } else if a < zero && b < zero {
        Some(-1)
    } else {
        None
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms((x, y, z) in field().prop_flat_map(|d| (qnum(d), qnum(d), qnum(d)))) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.recip().unwrap(), QuadNum::one());
            prop_assert_eq!(y.checked_div(&x).unwrap() * x.clone(), y.clone());
            prop_assert!(x.norm() != Rational::from_integer(0.into()));
        }
    }

    #[test]
    fn sign_matches_the_enclosure(x in field().prop_flat_map(qnum)) {
        let oracle = sign_oracle(&x);
        prop_assert!(oracle.is_some(), "enclosure too coarse for {}", x);
        prop_assert_eq!(x.signum(), oracle.unwrap());
    }

    #[test]
    fn order_is_total_and_compatible((x, y, z) in field().prop_flat_map(|d| (qnum(d), qnum(d), qnum(d)))) {
        let n = [x < y, x == y, x > y].iter().filter(|b| **b).count();
        prop_assert_eq!(n, 1);
        if x <= y && y <= z {
            prop_assert!(x <= z);
        }
        if x < y {
            prop_assert!(&x + &z < &y + &z);
        }
        prop_assert_eq!(x < y, (&y - &x).is_positive());
    }

    #[test]
    fn floor_brackets(x in field().prop_flat_map(qnum)) {
        let f = QuadNum::rational(Rational::from_integer(x.floor()));
        prop_assert!(f <= x);
        prop_assert!(x < &f + &QuadNum::one());
        prop_assert_eq!(x.ceil() - x.floor(), BigInt::from(if x.is_integral() && x.is_rational() { 0 } else { 1 }));
    }

    #[test]
    fn text_round_trip(x in field().prop_flat_map(qnum)) {
        let back: QuadNum = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn height_is_subadditive((m1, n1, m2, n2) in (-500i64..500, -500i64..500, -500i64..500, -500i64..500), d in field()) {
        let x = QuadNum::new(Rational::from_integer(m1.into()), Rational::from_integer(n1.into()), d).unwrap();
        let y = QuadNum::new(Rational::from_integer(m2.into()), Rational::from_integer(n2.into()), d).unwrap();
        let h = |v: &QuadNum| v.height().unwrap().0;
        prop_assert!(h(&(&x + &y)) <= h(&x) + h(&y));
        prop_assert_eq!(h(&-x.clone()), h(&x));
        prop_assert_eq!(h(&x), BigInt::from(m1.abs().max(n1.abs())));
    }

    #[test]
    fn clearing_denominators((a, b) in (qnum(5), qnum(5))) {
        let (v, k) = iet::qfield::clear_denominators(&[a.clone(), b.clone()]).unwrap();
        prop_assert!(v.iter().all(QuadNum::is_integral));
        prop_assert_eq!(&v[0], &a.scale(&k));
        prop_assert_eq!(&v[1], &b.scale(&k));
    }
}
