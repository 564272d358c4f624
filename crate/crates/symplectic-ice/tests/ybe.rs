use symplectic_ice::model::{DecoratedSpin, Spin};
use symplectic_ice::ybe::{
    all_cases, appendix_fixtures, check_fixture, parse_fixtures, side_states, verify_all, verify_all_with, ybe_diagrams,
    ybe_sides, YbeCase,
};
use symplectic_ice::{RIce, Ring, RingElem, Variant};

fn spins(s: &str) -> [Spin; 6] {
    let v: Vec<Spin> = s.chars().map(|c| Spin::from_char(c).unwrap()).collect();
    v.try_into().unwrap()
}

#[test]
fn exhaustive_standard_n1_n3() {
    for ice in RIce::ALL {
        for n in [1, 3] {
            let rep = verify_all(ice, n, Variant::Standard).unwrap();
            assert_eq!(rep.cases, 64 * (n as usize).pow(4));
            assert!(rep.failures.is_empty(), "{ice} n={n}: {:?}", rep.failures.first());
        }
    }
}

#[test]
fn exhaustive_doubled_and_modified_n3() {
    for ice in RIce::ALL {
        for variant in [Variant::GDoubled, Variant::Modified] {
            let rep = verify_all(ice, 3, variant).unwrap();
            assert!(rep.failures.is_empty(), "{ice} {variant:?}: {:?}", rep.failures.first());
        }
    }
}

#[test]
fn random_specializations_agree() {
    let rep = verify_all_with(RIce::DG, 3, Variant::Standard, 11, 50).unwrap();
    assert!(rep.passed());
}

#[test]
fn odd_plus_count_gives_zero() {
    let ring = Ring::new(3, 2).unwrap();
    for c in all_cases(RIce::GD, 3).iter().filter(|c| c.plus_count() % 2 == 1) {
        let (l, r) = ybe_sides(ring, c, Variant::Standard).unwrap();
        assert!(l.is_zero() && r.is_zero());
    }
}

#[test]
fn dd_case_two_has_no_states() {
    let ring = Ring::new(3, 2).unwrap();
    for d in 0..81u32 {
        let c = YbeCase { ice: RIce::DD, eps: spins("+++--+"), decs: [d / 27, d / 9 % 3, d / 3 % 3, d % 3] };
        let (l, r) = ybe_diagrams(ring, &c);
        assert!(side_states(&l, Variant::Standard).is_empty());
        assert!(side_states(&r, Variant::Standard).is_empty());
    }
}

#[test]
fn dd_case_six() {
    let n = 3;
    let ring = Ring::new(n, 2).unwrap();
    let v: RingElem = ring.v();
    let one: RingElem = ring.one();
    for a in 0..n {
        let c = YbeCase { ice: RIce::DD, eps: spins("-+++-+"), decs: [a, 0, 0, (a + 1) % n] };
        let (l, r) = ybe_diagrams(ring, &c);
        let ls = side_states(&l, Variant::Standard);
        let rs = side_states(&r, Variant::Standard);
        let total = |s: &[([DecoratedSpin; 3], RingElem)]| s.iter().fold(ring.zero(), |acc: RingElem, (_, w)| acc + w);
        assert_eq!(total(&ls), total(&rs));
        if a != 0 {
            let expected = (&one - &v) * ring.z_pow(1, n as i32 - a as i32 + 1) * ring.z_pow(2, a as i32);
            assert_eq!(ls.len(), 1);
            assert_eq!(ls[0].1, expected);
            assert_eq!(rs.len(), 1);
        } else {
            let z1n = ring.z_pow(1, n as i32);
            let z2n = ring.z_pow(2, n as i32);
            let mut ws: Vec<RingElem> = ls.iter().map(|(_, w)| w.clone()).collect();
            ws.sort_by_key(|w| w.to_string());
            let mut expected = vec![(&one - &v) * (&z1n - &z2n) * ring.z(1), (&one - &v) * ring.z(1) * z2n.clone()];
            expected.sort_by_key(|w| w.to_string());
            assert_eq!(ws, expected);
            assert_eq!(total(&ls), (&one - &v) * ring.z_pow(1, n as i32 + 1));
        }
    }
}

#[test]
fn n1_degenerates() {
    for ice in RIce::ALL {
        assert!(verify_all(ice, 1, Variant::Modified).unwrap().failures.is_empty());
    }
}

#[test]
fn appendix_tables() {
    let fx = appendix_fixtures();
    assert_eq!(fx.len(), 147);
    for ice in [RIce::DD, RIce::DG, RIce::GD] {
        assert!(fx.iter().filter(|f| f.ice == ice).count() >= 45);
    }
    assert_eq!(fx.iter().map(|f| f.errata.len()).sum::<usize>(), 10);
    for f in &fx {
        let mut instances = 0;
        for n in [3, 5] {
            let (k, problems) = check_fixture(f, n).unwrap();
            assert!(problems.is_empty(), "{problems:#?}");
            instances += k;
        }
        assert!(instances > 0, "{} {} never instantiated", f.ice, f.name);
    }
}

#[test]
fn appendix_dd_case3() {
    let fx = appendix_fixtures();
    let f = fx.iter().find(|f| f.ice == RIce::DD && f.name == "3").unwrap();
    assert_eq!((f.lhs.len(), f.rhs.len()), (1, 2));
    let ring = Ring::new(3, 2).unwrap();
    let env = symplectic_ice::expr::Env::new(ring);
    let w: RingElem = env.ring_value(&f.lhs[0].weight).unwrap();
    assert_eq!(w, RingElem::parse(ring, "z1^3*z2 + -1*v*z1^3*z2").unwrap());
    let (k, problems) = check_fixture(f, 3).unwrap();
    assert_eq!((k, problems.len()), (1, 0));
}

#[test]
fn fixture_mismatch_is_reported() {
    let text = "case DD 1\nboundary +0 +0 + +0 +0 +\nlhs +0 +0 : z1^n - v z2^n\nrhs +0 +0 : z1^n - z2^n\n";
    let f = &parse_fixtures(text).unwrap()[0];
    let (_, problems) = check_fixture(f, 3).unwrap();
    assert_eq!(problems.len(), 1);
    assert!(problems[0].contains("rhs"));
    assert!(parse_fixtures("lhs +0 +0 : 1\n").is_err());
    assert!(parse_fixtures("case XX 1\n").is_err());
}
