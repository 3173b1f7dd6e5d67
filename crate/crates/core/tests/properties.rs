use proptest::prelude::*;

use coxtrace::characters::{character_of_element, coxeter_class, trace_report};
use coxtrace::combinatorics::{Bipartition, Partition, Symbol, SymbolType};
use coxtrace::exactnum::{int, Cyclotomic, Field, Rational};
use coxtrace::groups::CoxeterDatum;
use coxtrace::hecke::{hecke_coxeter_trace, seminormal_model, QFraction};
use num_traits::{One, Zero};

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn cyclotomic(m: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(-5i64..=5, m as usize).prop_map(move |c| {
        Cyclotomic::from_power_coeffs(m, c.into_iter().map(int).collect::<Vec<Rational>>())
    })
}

fn classical_datum() -> impl Strategy<Value = CoxeterDatum> {
    prop_oneof![
        (1usize..=6).prop_map(CoxeterDatum::a),
        (1usize..=6).prop_map(CoxeterDatum::b),
        (4usize..=6).prop_map(CoxeterDatum::d),
    ]
}

proptest! {
    #[test]
    fn symbol_normalization_is_idempotent(a in partition(5), b in partition(5), k in 0usize..5) {
        for bp in [Bipartition::new(a.clone(), b.clone()), Bipartition::new(a.clone(), Partition::empty())] {
            for kind in [SymbolType::B, SymbolType::D] {
                let s: Symbol = Symbol::from_bipartition(&bp, kind);
                prop_assert_eq!(s.normalize(), s.clone());
                prop_assert_eq!(s.shift(k).normalize(), s.normalize());
                prop_assert_eq!(s.shift(k).normalize().normalize(), s.clone());
            }
        }
    }

    #[test]
    fn cyclotomic_field_axioms(
        (x, y, z) in prop::sample::select(vec![3u32, 4, 5, 7, 8, 12])
            .prop_flat_map(|m| (cyclotomic(m), cyclotomic(m), cyclotomic(m)))
    ) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, Cyclotomic::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inverse(), Cyclotomic::one());
        }
    }

    #[test]
    fn coxeter_class_is_order_independent(d in classical_datum(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let order = coxtrace::verify::random_order(&d, &mut rng);
        let w = d.coxeter_element(&order).unwrap();
        prop_assert_eq!(w.cycle_type(), coxeter_class(&d).unwrap());
        prop_assert_eq!(w.order(), d.coxeter_number());
        let report = trace_report(&d).unwrap();
        for e in report.entries.iter().take(12) {
            prop_assert_eq!(character_of_element(&d, &e.label, &w).unwrap(), e.trace);
        }
    }

    #[test]
    fn hecke_trace_is_order_independent(lam in partition(5), seed in any::<u64>()) {
        use rand::SeedableRng;
        let n = lam.size();
        prop_assume!(n >= 2);
        let d = CoxeterDatum::a(n - 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let model = seminormal_model(n, &lam).unwrap();
        let base = hecke_coxeter_trace(&model, &d.natural_order()).unwrap();
        let order = coxtrace::verify::random_order(&d, &mut rng);
        let other = hecke_coxeter_trace(&model, &order).unwrap();
        prop_assert_eq!(base.trace_poly, other.trace_poly);
    }

    #[test]
    fn cyclotomic_denominators_match_generic_fractions(
        a in prop::collection::vec((1usize..=6, 0usize..=4, -3i64..=3), 1..5)
    ) {
        // sums of c q^k / (q^d - 1), in both representations
        let mut fast = QFraction::zero();
        let mut slow = coxtrace::exactnum::RationalFunction::from_rational(Rational::zero());
        for (d, k, c) in a {
            let term = QFraction::from_int(c) * QFraction::q_pow(k) * QFraction::recip_q_pow_minus_one(d);
            slow = slow + term.to_rational_function();
            fast = fast + term;
        }
        prop_assert_eq!(fast.to_rational_function(), slow);
    }
}
