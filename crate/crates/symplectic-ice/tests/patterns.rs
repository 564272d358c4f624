use symplectic_ice::enumerate::{lattice_diagram, lattice_states, state_weight};
use symplectic_ice::model::build_lattice;
use symplectic_ice::patterns::{
    enumerate_patterns, g_full, g_tilde, gamma_tilde, h_tilde, pattern_to_state, state_to_pattern, stats, top_row, Entry,
    GTPattern,
};
use symplectic_ice::{Ring, RingElem, Variant};

fn specs() -> Vec<(usize, Vec<u32>)> {
    let mut out = vec![(1, vec![0]), (1, vec![1]), (1, vec![2])];
    for l1 in 0..=2u32 {
        for l2 in 0..=l1 {
            out.push((2, vec![l1, l2]));
        }
    }
    out.extend([(3, vec![0, 0, 0]), (3, vec![1, 0, 0]), (3, vec![1, 1, 0]), (3, vec![1, 1, 1]), (3, vec![2, 1, 1])]);
    out
}

fn example_pattern() -> GTPattern {
    GTPattern { r: 3, a: vec![vec![5, 3, 2], vec![4, 1], vec![2]], b: vec![vec![4, 2, 0], vec![3, 1], vec![0]] }
}

#[test]
fn rank_one_patterns() {
    let ps = enumerate_patterns(&[1]).unwrap();
    assert_eq!(ps.len(), 2);
    let bs: Vec<i64> = ps.iter().map(|p| p.b[0][0]).collect();
    assert!(bs.contains(&0) && bs.contains(&1));

    let p11 = GTPattern { r: 1, a: vec![vec![1]], b: vec![vec![1]] };
    let st = stats(&p11);
    assert_eq!((st.v[&(1, 1)], st.w[&(1, 1)], st.u[&(1, 1)]), (0, -1, -1));

    let ring = Ring::new(3, 1).unwrap();
    let p10 = GTPattern { r: 1, a: vec![vec![1]], b: vec![vec![0]] };
    assert_eq!(gamma_tilde(&ring, &p10, &stats(&p10), Entry::B(1, 1)), ring.g(2));
    assert_eq!(gamma_tilde(&ring, &p11, &stats(&p11), Entry::B(1, 1)), ring.one());

    // The state whose row-1 vertex is b1 ('-' passes straight down) is (1;1).
    let spec = build_lattice(1, 3, &[0]).unwrap();
    for s in lattice_states(&spec) {
        let p = state_to_pattern(&spec, &s).unwrap();
        let straight = s.vert[1][0].is_minus();
        assert_eq!(p == p11, straight);
    }
}

#[test]
fn invalid_patterns_rejected() {
    assert!(!GTPattern { r: 2, a: vec![vec![2, 1], vec![0]], b: vec![vec![2, 0], vec![0]] }.is_valid());
    assert!(!GTPattern { r: 1, a: vec![vec![1]], b: vec![vec![2]] }.is_valid());
    assert!(enumerate_patterns(&[1, 2]).is_err());
    for p in enumerate_patterns(&[3, 2, 1]).unwrap() {
        assert!((0..3).all(|i| p.a(i, 3) != 0));
    }
}

#[test]
fn rank_three_example_pattern() {
    let spec = build_lattice(3, 3, &[2, 1, 1]).unwrap();
    let p = example_pattern();
    assert!(p.is_valid());
    let st = pattern_to_state(&spec, &p).unwrap();
    assert_eq!(state_to_pattern(&spec, &st).unwrap(), p);
    assert_eq!(p.to_string(), "5 3 2 / 4 2 0 / 4 1 / 3 1 / 2 / 0");
    assert_eq!(stats(&p).v[&(1, 3)], 4);
}

#[test]
fn bijection_and_counts() {
    for (r, lam) in specs() {
        let spec = build_lattice(r, 3, &lam).unwrap();
        let states = lattice_states(&spec);
        let patterns = enumerate_patterns(&top_row(&spec)).unwrap();
        assert_eq!(states.len(), patterns.len(), "r={r} λ={lam:?}");
        let mut seen: Vec<GTPattern> = Vec::new();
        for s in &states {
            let p = state_to_pattern(&spec, s).unwrap();
            assert_eq!(&pattern_to_state(&spec, &p).unwrap(), s);
            seen.push(p);
        }
        seen.sort();
        let mut all = patterns.clone();
        all.sort();
        assert_eq!(seen, all);
    }
}

#[test]
fn weight_equals_g_tilde_times_z_monomial() {
    for n in [1, 3] {
        for (r, lam) in specs() {
            let spec = build_lattice(r, n, &lam).unwrap();
            let ring = Ring::new(n, r).unwrap();
            let d = lattice_diagram(&spec).unwrap();
            for s in lattice_states(&spec) {
                let p = state_to_pattern(&spec, &s).unwrap();
                let st = stats(&p);
                let w = state_weight(&d, &s, Variant::Standard);
                let zmon = (1..=r).fold(ring.one(), |acc: RingElem, i| acc * ring.z_pow(i, st.u[&(i, i)] as i32));
                assert_eq!(g_tilde(&ring, &p) * zmon, w, "n={n} r={r} λ={lam:?} pattern {p}");
                if !w.is_zero() {
                    for i in 1..=r {
                        assert_eq!(w.z_degree(i), Some(st.u[&(i, i)] as i32));
                    }
                }
            }
        }
    }
}

#[test]
fn pattern_statistics_identities() {
    for (r, lam) in specs() {
        let spec = build_lattice(r, 3, &lam).unwrap();
        for p in enumerate_patterns(&top_row(&spec)).unwrap() {
            let st = stats(&p);
            let wt: Vec<i64> = (1..=r).rev().map(|i| st.u[&(i, i)]).collect();
            assert_eq!(st.wt, wt);
            for i in 1..=r {
                for j in i..=r {
                    assert_eq!(st.u[&(i, j)], st.v[&(i, r)] + st.w[&(i, j)]);
                }
            }
            let lhs: i64 = st.k.iter().sum();
            let rhs: i64 = (1..=r)
                .map(|i| (i + 1..=r).map(|j| st.u[&(i, j)]).sum::<i64>() + (i..=r).map(|j| st.v[&(i, j)]).sum::<i64>())
                .sum();
            assert_eq!(lhs, rhs, "pattern {p}");
        }
    }
}

#[test]
fn unnormalized_gamma_and_h_tilde() {
    let ring = Ring::new(3, 2).unwrap();
    let top = [3, 1];
    let ps = enumerate_patterns(&top).unwrap();
    let h = h_tilde(&ring, &top).unwrap();
    let total = h.values().fold(ring.zero(), |a: RingElem, b| a + b);
    let direct = ps.iter().fold(ring.zero(), |a: RingElem, p| a + g_tilde(&ring, p));
    assert_eq!(total, direct);
    for p in &ps {
        let st = stats(p);
        let shift: i64 = (1..=2).map(|i| (i + 1..=2).map(|j| st.u[&(i, j)]).sum::<i64>() + (i..=2).map(|j| st.v[&(i, j)]).sum::<i64>()).sum();
        assert_eq!(g_full(&ring, p) * ring.v().pow(shift), g_tilde(&ring, p));
    }
}
