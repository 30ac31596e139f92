use num_bigint::BigInt;
use proptest::prelude::*;

use pbw_core::linalg::{rank, SparseMatrix, SparseVec, Subspace};
use pbw_core::presentation::parse_poly;
use pbw_core::rewrite::RewriteSystem;
use pbw_core::{Alphabet, CentralValue, Field, Gf101, NCPoly, Rational, Word};

fn alphabet() -> Alphabet {
    Alphabet::new(["x", "y", "z"]).unwrap()
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..3, 0..=max_len).prop_map(|l| Word::from_letters(&l))
}

fn gf_poly(max_len: usize) -> impl Strategy<Value = NCPoly<Gf101>> {
    prop::collection::vec((word(max_len), 1i64..101), 0..5)
        .prop_map(|ts| NCPoly::from_terms(ts.into_iter().map(|(w, c)| (w, Gf101::from_i64(c)))))
}

fn q_poly(max_len: usize) -> impl Strategy<Value = NCPoly<Rational>> {
    prop::collection::vec((word(max_len), -20i64..20, 1i64..7), 0..5).prop_map(|ts| {
        NCPoly::from_terms(ts.into_iter().map(|(w, n, d)| {
            (w, Rational::from_fraction(&BigInt::from(n), &BigInt::from(d)).unwrap())
        }))
    })
}

fn homogeneous(d: usize) -> impl Strategy<Value = NCPoly<Gf101>> {
    prop::collection::vec((prop::collection::vec(0u8..2, d), 1i64..101), 1..4).prop_map(|ts| {
        NCPoly::from_terms(ts.into_iter().map(|(l, c)| (Word::from_letters(&l), Gf101::from_i64(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_is_associative(a in gf_poly(3), b in gf_poly(3), c in gf_poly(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in gf_poly(3), b in gf_poly(3), c in gf_poly(3)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn additive_group(a in gf_poly(4), b in gf_poly(4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &NCPoly::one(), a);
    }

    #[test]
    fn dehomogenizing_at_one_inverts_homogenization(f in q_poly(4)) {
        prop_assume!(!f.is_zero());
        let h = f.homogenize().unwrap();
        prop_assert!(h.is_homogeneous());
        prop_assert_eq!(h.evaluate_central(CentralValue::One), f);
    }

    #[test]
    fn dehomogenizing_at_zero_keeps_the_top(f in q_poly(4)) {
        prop_assume!(!f.is_zero());
        let h = f.homogenize().unwrap();
        prop_assert_eq!(h.evaluate_central(CentralValue::Zero), f.top_component().unwrap());
    }

    #[test]
    fn printing_then_parsing_round_trips(f in q_poly(4)) {
        let ab = alphabet();
        let text = f.display(&ab).to_string();
        let back: NCPoly<Rational> = parse_poly(&text, &ab).unwrap();
        prop_assert_eq!(back, f, "{}", text);
    }

    #[test]
    fn printing_then_parsing_round_trips_mod_p(f in gf_poly(4)) {
        let ab = alphabet();
        let text = f.display(&ab).to_string();
        let back: NCPoly<Gf101> = parse_poly(&text, &ab).unwrap();
        prop_assert_eq!(back, f, "{}", text);
    }

    /// The normal form is idempotent, differs from the input by an ideal
    /// element, and `u g v` always reduces to zero.
    #[test]
    fn normal_forms(g in homogeneous(2), h in homogeneous(3), f in gf_poly(5), u in word(2), v in word(1)) {
        let gb = RewriteSystem::complete(&[g.clone(), h], 2, 7, false);
        let f = NCPoly::from_terms(f.terms().filter(|(w, _)| w.letters().iter().all(|&l| l < 2)).map(|(w, c)| (w.clone(), *c)));
        let nf = gb.normal_form(&f).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(gb.contains(&(&f - &nf)).unwrap());
        let u = Word::from_letters(&u.letters().iter().map(|l| l % 2).collect::<Vec<_>>());
        prop_assert!(gb.normal_form(&g.sandwich(&u, &v)).unwrap().is_zero());
        for (w, _) in nf.terms() {
            prop_assert!(gb.is_normal(w));
        }
    }

    /// rank + nullity = rows, and the kernel really is killed.
    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(0i64..101, 5), 0..7)) {
        let dense: Vec<Vec<Gf101>> = rows.iter().map(|r| r.iter().map(|&v| Gf101::from_i64(v)).collect()).collect();
        let m = SparseMatrix::from_dense(&dense);
        let k = pbw_core::linalg::kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.dim(), rows.len());
        for b in k.basis() {
            prop_assert!(m.apply(b).is_zero());
        }
    }

    /// `dim(U + W) + dim(U ∩ W) = dim U + dim W`.
    #[test]
    fn grassmann(a in prop::collection::vec(prop::collection::vec(0i64..3, 4), 0..4),
                 b in prop::collection::vec(prop::collection::vec(0i64..3, 4), 0..4)) {
        let span = |rows: &Vec<Vec<i64>>| Subspace::from_vectors(4, rows.iter().map(|r| {
            SparseVec::from_dense(&r.iter().map(|&v| Gf101::from_i64(v)).collect::<Vec<_>>())
        }));
        let (u, w) = (span(&a), span(&b));
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(i.is_subspace_of(&u).unwrap() && i.is_subspace_of(&w).unwrap());
    }
}
