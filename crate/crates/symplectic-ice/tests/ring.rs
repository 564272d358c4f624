use num_bigint::BigInt;
use proptest::prelude::*;
use symplectic_ice::exactring::RawMonomial;
use symplectic_ice::{Rational, Ring, RingElem, Specialization};

const R: usize = 2;

fn ring_for(n: u32) -> Ring {
    Ring::new(n, R).unwrap()
}

/// A term as (coefficient, v, z1, z2, g-index, g-exponent).
fn term() -> impl Strategy<Value = (i64, i32, i32, i32, i64, i32)> {
    (-3i64..=3, 0i32..=2, -2i32..=2, -2i32..=2, 0i64..5, 0i32..=2)
}

fn build(ring: Ring, terms: &[(i64, i32, i32, i32, i64, i32)]) -> RingElem {
    terms.iter().fold(ring.zero(), |acc, &(c, v, z1, z2, a, e)| {
        acc + ring.monomial(v, &[z1, z2], &[(a, e)]).scale(&BigInt::from(c))
    })
}

fn elem() -> impl Strategy<Value = Vec<(i64, i32, i32, i32, i64, i32)>> {
    prop::collection::vec(term(), 0..4)
}

fn modulus() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![1u32, 3, 5])
}

fn sp(seed: u64, n: u32) -> Specialization {
    Specialization::random(seed, n, R)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2500))]

    #[test]
    fn associativity(n in modulus(), a in elem(), b in elem(), c in elem()) {
        let ring = ring_for(n);
        let (a, b, c) = (build(ring, &a), build(ring, &b), build(ring, &c));
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn distributivity(n in modulus(), a in elem(), b in elem(), c in elem()) {
        let ring = ring_for(n);
        let (a, b, c) = (build(ring, &a), build(ring, &b), build(ring, &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, ring.zero());
        prop_assert_eq!(&a * &ring.one(), a.clone());
    }

    #[test]
    fn normal_form_confluence(
        n in modulus(),
        v in -2i32..=2,
        g in prop::collection::vec(-2i32..=3, 5),
        order in prop::collection::vec(0usize..16, 0..40),
    ) {
        let ring = ring_for(n);
        let mut raw = RawMonomial::new(ring);
        raw.v = v;
        raw.z = vec![1, -1];
        for (a, &e) in g.iter().enumerate().take(n as usize) {
            raw = raw.g(a as i64, e);
        }
        let direct: RingElem = raw.clone().normalize();
        let mut steps = order.into_iter();
        loop {
            let options = raw.applicable();
            if options.is_empty() {
                break;
            }
            let pick = steps.next().unwrap_or(0) % options.len();
            raw.apply(options[pick]);
        }
        prop_assert_eq!(raw.normalize::<BigInt>(), direct);
    }

    #[test]
    fn specialization_is_a_homomorphism(n in modulus(), a in elem(), b in elem(), c in elem(), seed in 0u64..1000) {
        let ring = ring_for(n);
        let (a, b, c) = (build(ring, &a), build(ring, &b), build(ring, &c));
        let s = sp(seed, n);
        prop_assert!(s.check());
        let lhs: Rational = (&(&a * &b) + &c).specialize(&s);
        prop_assert_eq!(lhs, a.specialize(&s) * b.specialize(&s) + c.specialize(&s));
    }

    #[test]
    fn text_and_json_round_trip(n in modulus(), a in elem()) {
        let ring = ring_for(n);
        let a = build(ring, &a);
        prop_assert_eq!(RingElem::parse(ring, &a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(RingElem::from_json(ring, &a.to_json()).unwrap(), a);
    }
}

#[test]
fn gauss_relations() {
    let ring = Ring::new(3, 2).unwrap();
    let g0: RingElem = ring.g(0);
    assert_eq!(g0, -ring.v::<BigInt>());
    assert_eq!(ring.g::<BigInt>(1) * ring.g(2), ring.v());
    let raw: RingElem = RawMonomial::new(ring).g(1, 2).g(2, 1).normalize();
    assert_eq!(raw, ring.v::<BigInt>() * ring.g(1));
    assert_eq!(ring.g::<BigInt>(1) * ring.z(1) * (ring.g::<BigInt>(2) * ring.z(2)), ring.v::<BigInt>() * ring.z(1) * ring.z(2));
    // g is periodic mod n.
    assert_eq!(ring.g::<BigInt>(4), ring.g(1));
    let one = Ring::new(1, 1).unwrap();
    assert_eq!(one.g::<BigInt>(5), -one.v::<BigInt>());
}

#[test]
fn canonical_forms() {
    let ring = Ring::new(3, 2).unwrap();
    let z1: RingElem = ring.z(1);
    assert_eq!((&z1 - &ring.v()) + ring.v(), z1);
    let direct: RingElem = ring.z_pow(1, 3) - ring.v::<BigInt>() * ring.z_pow(2, 3);
    let built = &z1 * &ring.z_pow(1, 2) - ring.z_pow::<BigInt>(2, 3) * ring.v();
    assert_eq!(built, direct);
    let e: RingElem = ring.v::<BigInt>().pow(2) * ring.z_pow(1, -3) * ring.g(2);
    assert_eq!((-e.clone()).to_string(), "-1*v^2*g2*z1^-3");
    assert_eq!(RingElem::parse(ring, "-1*v^2*z1^-3*g2").unwrap(), -e.clone());
    let json = (-e).to_json();
    assert_eq!(json.to_string(), r#"[{"c":-1,"g":[0,1],"v":2,"z":[-3,0]}]"#);
    assert!(Ring::new(4, 1).is_err());
}

#[test]
fn specialization_examples() {
    let q = |p: i64, d: i64| Rational::new(BigInt::from(p), BigInt::from(d));
    assert!(Specialization::new(3, q(1, 2), vec![q(0, 1)], vec![q(3, 1)]).is_err());
    let s = Specialization::new(3, q(1, 2), vec![q(2, 1)], vec![q(3, 1)]).unwrap();
    assert_eq!(s.g[2], q(1, 6));
    let ring = Ring::new(3, 1).unwrap();
    let g12: RingElem = ring.g::<BigInt>(1) * ring.g(2);
    assert_eq!(g12.specialize(&s), q(1, 2));
    let z: RingElem = ring.z_pow(1, -1) + ring.g(2) * ring.z(1);
    assert_eq!(z.specialize(&s), q(5, 6));
    let g0: RingElem = RawMonomial::new(ring).g(0, 1).normalize();
    assert_eq!(g0.specialize(&s), q(-1, 2));
    assert_eq!(sp(0, 3), sp(0, 3));
    assert_ne!(sp(0, 3), sp(1, 3));
    assert!(sp(7, 5).check());
}
