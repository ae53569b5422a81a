mod common;

use common::*;
use farey_axis::{cf_of_rational, cf_of_surd, matrix_of_sequence, ExtRational, QuadraticSurd};
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sequence_matrices_multiply(s in positive_sequence(6, 9), t in positive_sequence(6, 9)) {
        let joined: Vec<u64> = s.iter().chain(&t).copied().collect();
        let prod = &matrix_of_sequence(&s).unwrap() * &matrix_of_sequence(&t).unwrap();
        prop_assert_eq!(matrix_of_sequence(&joined).unwrap(), prod);
    }

    #[test]
    fn sequence_matrices_are_monotone(pairs in prop::collection::vec((1u64..9, 0u64..4), 1..8)) {
        let small: Vec<u64> = pairs.iter().map(|p| p.0).collect();
        let large: Vec<u64> = pairs.iter().map(|p| p.0 + p.1).collect();
        prop_assert!(matrix_of_sequence(&large).unwrap().dominates(&matrix_of_sequence(&small).unwrap()));
    }

    #[test]
    fn determinant_sign(s in positive_sequence(9, 9)) {
        let sign = if s.len() % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(matrix_of_sequence(&s).unwrap().det(), BigInt::from(sign));
    }

    #[test]
    fn rational_round_trip(p in -2_000_000i64..2_000_000, q in 1i64..=1_000_000) {
        let v = ExtRational::new(p, q).unwrap();
        let cf = cf_of_rational(&v).unwrap();
        prop_assert_eq!(cf.to_rational(), Some(v));
        if cf.preperiod.len() > 1 {
            prop_assert!(cf.preperiod.last().unwrap() >= &BigInt::from(2));
        }
    }

    #[test]
    fn attracting_point_expands_to_the_sequence(s in even_sequence(4, 9)) {
        let m = matrix_of_sequence(&s).unwrap();
        let (a, c, d) = (&m.a, &m.c, &m.d);
        let disc = (a + d) * (a + d) - 4;
        let x = QuadraticSurd::new(a - d, disc, c * 2).unwrap();
        let cf = cf_of_surd(&x);
        prop_assert!(cf.preperiod.is_empty());
        let period = cf.period_u64().unwrap();
        prop_assert_eq!(s.len() % period.len(), 0);
        let repeated: Vec<u64> = period.iter().cycle().take(s.len()).copied().collect();
        prop_assert_eq!(repeated, s);
    }
}
