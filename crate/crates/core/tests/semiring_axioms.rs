use proptest::prelude::*;
use semiring_pss::laws::{self, LawOutcome};
use semiring_pss::sample::Sampler;
use semiring_pss::{Comparison, Instance, Value};

fn instances() -> Vec<Instance> {
    vec![
        Instance::Naturals,
        Instance::RatPlus,
        Instance::Boolean,
        Instance::TropicalRat,
        Instance::TropicalInt,
        Instance::opposite(Instance::RatPlus),
        Instance::opposite(Instance::TropicalInt),
        Instance::product(Instance::RatPlus, Instance::TropicalRat).unwrap(),
        Instance::lexicographic(Instance::RatPlus, Instance::TropicalRat).unwrap(),
        Instance::LeadingTerm,
        Instance::DualNumbers,
    ]
}

fn semifields() -> Vec<Instance> {
    instances().into_iter().filter(Instance::is_semifield).collect()
}

fn triple(f: &Instance, seed: u64) -> (Value, Value, Value) {
    let mut s = Sampler::new(seed);
    (s.element(f, 0.1), s.element(f, 0.1), s.element(f, 0.1))
}

fn le(f: &Instance, a: &Value, b: &Value) -> bool {
    f.compare(a, b).unwrap().is_le()
}

fn assert_not_violated(name: &str, f: &Instance, out: LawOutcome) {
    assert!(!out.is_violated(), "{name} violated in {f}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn commutative_semiring(i in 0usize..11, seed: u64) {
        let f = &instances()[i];
        let (a, b, c) = triple(f, seed);
        prop_assert_eq!(f.add(&a, &b).unwrap(), f.add(&b, &a).unwrap());
        prop_assert_eq!(f.mul(&a, &b).unwrap(), f.mul(&b, &a).unwrap());
        let ab_c = f.add(&f.add(&a, &b).unwrap(), &c).unwrap();
        prop_assert_eq!(ab_c, f.add(&a, &f.add(&b, &c).unwrap()).unwrap());
        let ab_c = f.mul(&f.mul(&a, &b).unwrap(), &c).unwrap();
        prop_assert_eq!(ab_c, f.mul(&a, &f.mul(&b, &c).unwrap()).unwrap());
        let lhs = f.mul(&a, &f.add(&b, &c).unwrap()).unwrap();
        let rhs = f.add(&f.mul(&a, &b).unwrap(), &f.mul(&a, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(f.add(&a, &f.zero()).unwrap(), a.clone());
        prop_assert_eq!(f.mul(&a, &f.one()).unwrap(), a.clone());
        prop_assert!(f.is_zero(&f.mul(&a, &f.zero()).unwrap()));
    }

    #[test]
    fn order_is_compatible(i in 0usize..11, seed: u64) {
        let f = &instances()[i];
        let (a, b, c) = triple(f, seed);
        prop_assert_eq!(f.compare(&a, &a).unwrap(), Comparison::Equivalent);
        if le(f, &a, &b) {
            prop_assert!(le(f, &f.add(&a, &c).unwrap(), &f.add(&b, &c).unwrap()));
            prop_assert!(le(f, &f.mul(&a, &c).unwrap(), &f.mul(&b, &c).unwrap()));
            if le(f, &b, &c) {
                prop_assert!(le(f, &a, &c));
            }
        }
        prop_assert_eq!(f.compare(&a, &b).unwrap(), f.compare(&b, &a).unwrap().reverse());
    }

    #[test]
    fn inverses_in_semifields(i in 0usize..8, seed: u64) {
        let fs = semifields();
        let f = &fs[i % fs.len()];
        let x = Sampler::new(seed).nonzero(f);
        let xi = f.inv(&x).unwrap();
        prop_assert_eq!(f.mul(&x, &xi).unwrap(), f.one());
        prop_assert_eq!(f.pow(&x, -3).unwrap(), f.pow(&xi, 3).unwrap());
    }

    #[test]
    fn order_laws(i in 0usize..8, seed: u64, n in 0u64..6, m in 1u64..6) {
        let fs = semifields();
        let f = &fs[i % fs.len()];
        let mut s = Sampler::new(seed);
        let (a, x, y) = (s.nonzero(f), s.nonzero(f), s.nonzero(f));
        let r: Vec<Value> = (0..3).map(|_| s.element(f, 0.3)).collect();
        assert_not_violated("sharpen_add", f, laws::sharpen_add(f, &a, &x, &y, m).unwrap());
        assert_not_violated("fourier", f, laws::fourier(f, &r, &x, &y).unwrap());
        assert_not_violated("geom_fourier", f, laws::geom_fourier(f, &x, &y, m).unwrap());
        assert_not_violated("cancel1", f, laws::cancel1(f, &x, &y, n).unwrap());
        assert_not_violated("cancel2", f, laws::cancel2(f, &a, &x, &y, n).unwrap());
        assert_not_violated("norder", f, laws::norder(f, &x, n).unwrap());
        assert_not_violated("other_power_lemma", f, laws::other_power_lemma(f, &x, n, m).unwrap());
        assert_not_violated("nonarctic_bound", f, laws::nonarctic_bound(f, &x, n).unwrap());
    }

    #[test]
    fn tropical_sums_are_maxima(seed: u64) {
        let f = Instance::TropicalRat;
        let mut s = Sampler::new(seed);
        let (x, y) = (s.nonzero(&f), s.nonzero(&f));
        prop_assert_eq!(laws::tropical_add_full(&f, &x, &y).unwrap(), LawOutcome::Holds);
    }
}

#[test]
fn geom_fourier_detects_order_on_sampled_pairs() {
    let f = Instance::RatPlus;
    let mut s = Sampler::new(3);
    let mut holds = 0;
    for _ in 0..200 {
        let (x, y) = (s.nonzero(&f), s.nonzero(&f));
        if laws::geom_fourier(&f, &x, &y, 3).unwrap() == LawOutcome::Holds {
            holds += 1;
        }
    }
    assert_eq!(holds, 200);
}
