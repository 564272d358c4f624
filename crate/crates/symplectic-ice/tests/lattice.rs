mod common;

use common::oracle;
use symplectic_ice::enumerate::{lattice_diagram, lattice_states, partition_function, state_weight};
use symplectic_ice::model::{build_lattice, compute_charges, decorations, is_admissible, left_residues, IceState};
use symplectic_ice::{LatticeSpec, Ring, RingElem, Spin, Variant};

fn to_raw(st: &IceState) -> oracle::RawState {
    let b = |row: &Vec<Spin>| row.iter().map(|s| s.is_minus()).collect::<Vec<_>>();
    oracle::RawState { h: st.h.iter().map(b).collect(), v: st.vert.iter().map(b).collect() }
}

fn small_specs() -> Vec<(usize, Vec<u32>)> {
    vec![
        (1, vec![0]),
        (1, vec![1]),
        (1, vec![2]),
        (2, vec![0, 0]),
        (2, vec![1, 0]),
        (2, vec![1, 1]),
    ]
}

#[test]
fn build_lattice_boundaries() {
    let s = build_lattice(3, 3, &[2, 1, 1]).unwrap();
    assert_eq!(s.cols, 5);
    assert_eq!(s.top_columns(), vec![5, 3, 2]);
    assert_eq!(build_lattice(1, 3, &[0]).unwrap().top_columns(), vec![1]);
    assert_eq!(build_lattice(2, 3, &[0, 0]).unwrap().top_columns(), vec![2, 1]);
    assert!(build_lattice(1, 4, &[0]).is_err());
    assert!(build_lattice(2, 3, &[0, 1]).is_err());
    assert!(build_lattice(1, 3, &[1, 0]).is_err());
}

#[test]
fn rank_one_partition_function() {
    for n in [1, 3, 5] {
        let spec = build_lattice(1, n, &[0]).unwrap();
        let ring = Ring::new(n, 1).unwrap();
        let d = lattice_diagram(&spec).unwrap();
        let res = partition_function(&d, Variant::Standard).unwrap();
        let expected: RingElem = ring.z_pow(1, -1) + ring.g(2) * ring.z(1);
        assert_eq!(res.total, expected);
        assert_eq!(res.state_count, 2);
    }
    let spec = build_lattice(1, 3, &[0]).unwrap();
    let d = lattice_diagram(&spec).unwrap();
    let res = partition_function(&d, Variant::Standard).unwrap();
    assert_eq!(res.total.to_string(), "z1^-1 + g2*z1");
    let ring = Ring::new(3, 1).unwrap();
    assert_eq!(res.by_residue.len(), 2);
    assert_eq!(res.by_residue[&vec![1]], ring.z_pow(1, -1));
    assert_eq!(res.by_residue[&vec![0]], ring.g(2) * ring.z(1));
}

#[test]
fn rank_one_c2_state_has_bend_charge_one() {
    let spec = build_lattice(1, 3, &[0]).unwrap();
    let states = lattice_states(&spec);
    let residues: Vec<Vec<u32>> = states.iter().map(|s| left_residues(&spec, s)).collect();
    assert!(residues.contains(&vec![0]) && residues.contains(&vec![1]));
    // The c2 vertex in row 1 has '-' on top, '+' on the left, so the right edge is '-'.
    let st = states.iter().find(|s| s.h[0][1] == Spin::Minus).unwrap();
    assert_eq!(compute_charges(&spec, st).bend, vec![1]);
}

/// The state of the rank-three example with top row 5 3 2.
fn example_state(spec: &LatticeSpec) -> IceState {
    let p = symplectic_ice::patterns::GTPattern {
        r: 3,
        a: vec![vec![5, 3, 2], vec![4, 1], vec![2]],
        b: vec![vec![4, 2, 0], vec![3, 1], vec![0]],
    };
    symplectic_ice::patterns::pattern_to_state(spec, &p).unwrap()
}

#[test]
fn example_charges() {
    let spec = build_lattice(3, 3, &[2, 1, 1]).unwrap();
    let st = example_state(&spec);
    assert!(is_admissible(&spec, &st));
    let ch = compute_charges(&spec, &st);
    assert_eq!(ch.h[0], vec![0, 1, 1, 2, 3, 4]);
    assert_eq!(ch.bend[0], 4);
    assert_eq!(ch.h[1], vec![9, 8, 7, 6, 5, 5]);
    for (k, row) in ch.h.iter().enumerate() {
        if k % 2 == 0 {
            assert_eq!(row[0], 0);
        }
    }
}

#[test]
fn lattice_diagram_shape() {
    use symplectic_ice::enumerate::NodeKind;
    let spec = build_lattice(3, 3, &[2, 1, 1]).unwrap();
    let d = lattice_diagram(&spec).unwrap();
    let grid = d.nodes.iter().filter(|n| matches!(n.kind, NodeKind::Grid(_))).count();
    let bends = d.nodes.iter().filter(|n| matches!(n.kind, NodeKind::Bend(..))).count();
    assert_eq!((grid, bends), (30, 3));
}

#[test]
fn equal_bend_spins_are_inadmissible() {
    let spec = build_lattice(1, 3, &[0]).unwrap();
    let mut st = lattice_states(&spec)[0].clone();
    st.h[1][1] = st.h[0][1];
    assert!(!is_admissible(&spec, &st));
}

#[test]
fn engine_matches_oracle() {
    for (r, lam) in small_specs() {
        for n in [1, 3] {
            let l = oracle::lattice(r, n, &lam);
            if oracle::interior_edges(&l) > 20 {
                continue;
            }
            let spec = build_lattice(r, n, &lam).unwrap();
            let mut mine: Vec<_> = lattice_states(&spec).iter().map(to_raw).collect();
            mine.sort();
            let theirs = oracle::all_states(&l);
            assert_eq!(mine, theirs, "state sets differ for r={r} λ={lam:?}");
            let d = lattice_diagram(&spec).unwrap();
            assert_eq!(partition_function(&d, Variant::Standard).unwrap().total, oracle::partition(&l), "r={r} λ={lam:?} n={n}");
            for st in lattice_states(&spec) {
                assert_eq!(state_weight(&d, &st, Variant::Standard), oracle::weight(&l, &to_raw(&st)));
            }
        }
    }
}

#[test]
fn by_residue_sums_to_total() {
    for (r, lam) in small_specs() {
        let spec = build_lattice(r, 3, &lam).unwrap();
        let d = lattice_diagram(&spec).unwrap();
        let res = partition_function(&d, Variant::Standard).unwrap();
        let sum = res.by_residue.values().fold(Ring::new(3, r).unwrap().zero(), |a: RingElem, b| a + b);
        assert_eq!(sum, res.total);
    }
}

#[test]
fn charge_divisibility_on_nonzero_states() {
    for (r, lam) in small_specs().into_iter().chain([(2, vec![2, 1]), (3, vec![1, 1, 0])]) {
        let n = 3;
        let spec = build_lattice(r, n, &lam).unwrap();
        let d = lattice_diagram(&spec).unwrap();
        for st in lattice_states(&spec) {
            let ch = compute_charges(&spec, &st);
            let dec = decorations(&spec, &st);
            for k in 0..spec.rows() {
                for x in 0..=spec.cols {
                    assert_eq!(dec[k][x].dec as i64, ch.h[k][x].rem_euclid(n as i64));
                }
            }
            if state_weight(&d, &st, Variant::Standard).is_zero() {
                continue;
            }
            for k in 0..spec.rows() {
                for x in 0..=spec.cols {
                    let delta = k % 2 == 0;
                    let s = st.h[k][x];
                    if (delta && s == Spin::Plus) || (!delta && s == Spin::Minus) {
                        assert_eq!(ch.h[k][x] % n as i64, 0, "row {k} edge {x}");
                    }
                }
            }
        }
    }
}

#[test]
fn swap_pair_is_involution() {
    let spec = build_lattice(2, 3, &[1, 0]).unwrap();
    let d = lattice_diagram(&spec).unwrap();
    let twice = d.swap_pair(1).swap_pair(1);
    assert_eq!(format!("{:?}", twice.nodes), format!("{:?}", d.nodes));
    assert_eq!(spec.swap_pair(2).swap_pair(2), spec);
}

#[test]
fn swapped_rank_one_lattice() {
    let spec = build_lattice(1, 3, &[0]).unwrap();
    let ring = Ring::new(3, 1).unwrap();
    let d = lattice_diagram(&spec.swap_pair(1)).unwrap();
    let z = partition_function(&d, Variant::Standard).unwrap().total;
    // Row 1 now carries z_1^{-1}, row 1bar carries z_1 and the bend is flipped.
    assert_eq!(z, ring.z(1) + ring.g(2) * ring.z_pow(1, -1));
}
