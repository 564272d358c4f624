use symplectic_ice::enumerate::{enumerate_states, partition_function};
use symplectic_ice::model::{build_lattice, DecoratedSpin, Spin};
use symplectic_ice::relations::*;
use symplectic_ice::{Ring, RingElem, Variant};

fn ds(s: &str) -> DecoratedSpin {
    let spin = Spin::from_char(s.chars().next().unwrap()).unwrap();
    DecoratedSpin::new(spin, s[1..].parse().unwrap())
}

#[test]
fn caduceus_constant_ratio() {
    for n in [1, 3] {
        let rep = caduceus_check(n).unwrap();
        assert!(rep.passed(), "n={n}: {:?}", rep.to_json());
        assert_eq!(rep.distinct(), 1);
        // All four spin patterns of the bends occur.
        let mut patterns: Vec<String> =
            rep.cases.iter().map(|(l, _)| l.split(' ').map(|t| &t[..1]).collect::<String>()).collect();
        patterns.sort();
        patterns.dedup();
        assert_eq!(patterns, vec!["+-+-", "+--+", "-++-", "-+-+"]);
    }
}

#[test]
fn caduceus_four_states() {
    let ring = Ring::new(3, 2).unwrap();
    let (i5, _) = caduceus_diagrams(ring, [ds("+0"), ds("-0"), ds("-0"), ds("+1")]);
    assert_eq!(enumerate_states(&i5).len(), 4);
    let ratio = caduceus_ratio(3, [ds("+0"), ds("-0"), ds("-0"), ds("+1")]).unwrap().unwrap();
    assert!(ratio == symplectic_ice::exactring::Fraction::from_poly(caduceus_constant(&ring)));
}

#[test]
fn caduceus_n1_matches_specialized_constant() {
    let ring = Ring::new(1, 2).unwrap();
    let r = caduceus_ratio(1, [ds("+0"), ds("-0"), ds("+0"), ds("-0")]).unwrap().unwrap();
    let v: RingElem = ring.v();
    let zi = |e| ring.z_pow(1, e);
    let zj = |e| ring.z_pow(2, e);
    let p = (zj(-1) - &v * &zi(1)) * (zi(-1) - &v * &zj(1)) * (zi(1) - &v * &zj(1)) * (zi(-1) - &v * &zj(-1));
    assert!(r == symplectic_ice::exactring::Fraction::from_poly(p));
}

#[test]
fn fish_constants() {
    for n in [1, 3, 5] {
        for kind in FishKind::ALL {
            let rep = fish_check(kind, n).unwrap();
            assert!(rep.passed(), "{} n={n}: {:?}", kind.name(), rep.to_json());
            let spins: Vec<&str> = rep.cases.iter().map(|(l, _)| if l.starts_with('-') { "-+" } else { "+-" }).collect();
            assert!(spins.contains(&"-+") && spins.contains(&"+-"));
        }
    }
}

#[test]
fn fish_examples() {
    let ring = Ring::new(3, 1).unwrap();
    let d = fish_diagram(ring, FishKind::DG, ds("-0"), ds("+0"));
    assert_eq!(enumerate_states(&d).len(), 2);
    let z = partition_function(&d, Variant::Standard).unwrap().total;
    assert!(!z.is_zero());
    // The ΓΔ relation with ε = (−, +) divides by the bend carrying g(0) = −v.
    let r = fish_ratio(FishKind::GD, 3, ds("-0"), ds("+1")).unwrap().unwrap();
    assert!(r == symplectic_ice::exactring::Fraction::from_poly(fish_constant(&ring, FishKind::GD)));
    assert_eq!("dg".parse::<FishKind>().unwrap(), FishKind::DG);
}

fn lambdas() -> Vec<Vec<u32>> {
    vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 1]]
}

#[test]
fn transposition_all_residues() {
    for lam in lambdas() {
        let spec = build_lattice(2, 3, &lam).unwrap();
        for c in all_residue_vectors(2, 3) {
            let id = transposition_identity(&spec, 1, &c).unwrap();
            assert!(id.holds(), "λ={lam:?} c={c:?}");
        }
    }
    let spec = build_lattice(2, 1, &[1, 0]).unwrap();
    assert!(check_transposition(&spec, 1, &[0, 0]).unwrap());
    assert!(check_transposition(&spec, 2, &[0, 0]).is_err());
}

#[test]
fn inverse_all_residues() {
    for r in [1usize, 2] {
        let mut ls: Vec<Vec<u32>> = lambdas();
        if r == 1 {
            ls = vec![vec![0], vec![1], vec![2]];
        }
        for lam in ls {
            let spec = build_lattice(r, 3, &lam).unwrap();
            for c in all_residue_vectors(r, 3) {
                assert!(check_inverse(&spec, &c).unwrap(), "r={r} λ={lam:?} c={c:?}");
            }
        }
    }
}

#[test]
fn row_change() {
    for (r, lam) in [(1, vec![0]), (1, vec![1]), (2, vec![0, 0]), (2, vec![1, 0]), (2, vec![1, 1])] {
        let rep = check_row_change(&build_lattice(r, 3, &lam).unwrap()).unwrap();
        assert!(rep.passed(), "r={r} λ={lam:?}: {rep:?}");
        assert!(rep.nonzero > 0);
    }
}

#[test]
fn tau_against_table() {
    for n in [1, 3] {
        for ci in 0..n {
            for cj in 0..n {
                let m = tau_match(ci, cj, n).unwrap();
                assert!(m.passed(), "{ci} {cj}: {:?}", m.entries);
            }
        }
    }
    let ring = Ring::new(3, 2).unwrap();
    let x = symplectic_ice::exactring::Fraction::new(ring.z_pow(2, 3), ring.z_pow(1, 3));
    let one = symplectic_ice::exactring::Fraction::from_poly(ring.one());
    let v = ring.v();
    let den = one.add(&x.mul_poly(&-v.clone())).inv();
    // c_i > c_j
    let t1 = tau_normalized(&ring, 1, 2, 0).unwrap();
    assert!(t1 == x.mul_poly(&(ring.one() - v.clone())).mul(&den));
    // c_i = c_j
    let s = tau_normalized(&ring, 1, 1, 1).unwrap().add(&tau_normalized(&ring, 2, 1, 1).unwrap());
    assert!(s == x.add(&symplectic_ice::exactring::Fraction::from_poly(-v)).mul(&den));
}

#[test]
fn modified_tables_reproduced() {
    for n in [1, 3, 5] {
        assert_eq!(check_modified_tables(n).unwrap(), Vec::<String>::new());
    }
}

#[test]
fn flipped_gamma_delta_bend_excludes_the_dead_subcase() {
    use symplectic_ice::weights::bend_weight;
    use symplectic_ice::BendKind;
    // (b+, a-) with a + b ≡ 1 and a ≢ 0 must never carry weight.
    for n in [3u32, 5, 7] {
        let ring = Ring::new(n, 1).unwrap();
        let z = ring.z(1);
        for a in 1..n {
            let b = (n + 1 - a) % n;
            let up = DecoratedSpin::new(Spin::Plus, b);
            let low = DecoratedSpin::new(Spin::Minus, a);
            assert!(bend_weight(&ring, BendKind::GammaDeltaFlipped, up, low, &z).is_zero(), "n={n} a={a}");
        }
        let up = DecoratedSpin::new(Spin::Plus, 1);
        let low = DecoratedSpin::new(Spin::Minus, 0);
        assert!(!bend_weight(&ring, BendKind::GammaDeltaFlipped, up, low, &z).is_zero());
    }
}
