//! Diagrams of grid vertices, bends and R-vertices, and the engine that sums
//! over their admissible states.
//!
//! Lattice diagrams are enumerated row by row (the right spin of a vertex is
//! forced by the other three) and decorated from the charges. Other diagrams
//! have no global charge, so the decorations of their free horizontal edges
//! are enumerated over `[0, n)` and filtered by the weight tables.

use std::collections::BTreeMap;

use crate::exactring::Fraction;
use crate::model::{self, DecoratedSpin, IceState, LatticeSpec, Spin};
use crate::weights::{self, BendKind, RIce, Variant, VertexKind};
use crate::{Error, Ring, RingElem, RingFrac};

/// `z_i` or `z_i^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Spectral {
    pub i: usize,
    pub inv: bool,
}

impl Spectral {
    pub fn z(i: usize) -> Spectral {
        Spectral { i, inv: false }
    }
    pub fn zinv(i: usize) -> Spectral {
        Spectral { i, inv: true }
    }
    pub fn elem(self, ring: &Ring) -> RingElem {
        ring.z_pow(self.i, if self.inv { -1 } else { 1 })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    /// Slots: top, right, bottom, left.
    Grid(VertexKind),
    /// Slots: upper, lower. Carries the pair index.
    Bend(BendKind, usize),
    /// Slots: NW, NE, SE, SW.
    R(RIce, Spectral, Spectral),
}

impl NodeKind {
    pub fn arity(self) -> usize {
        match self {
            NodeKind::Bend(..) => 2,
            _ => 4,
        }
    }

    fn slot_decorated(self, slot: usize) -> bool {
        match self {
            NodeKind::Grid(_) => slot == 1 || slot == 3,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Node {
    pub kind: NodeKind,
    /// Edge ids attached to each slot.
    pub slots: Vec<usize>,
    /// Always use the `g(a) -> g(2a)` weights.
    pub doubled: bool,
    /// Use them under [`Variant::GDoubled`].
    pub doubling_region: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: String,
    pub decorated: bool,
    /// Boundary value; `None` for interior edges.
    pub fixed: Option<DecoratedSpin>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    pub ring: Ring,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    /// Set for full lattices, whose decorations come from charges.
    pub lattice: Option<LatticeSpec>,
}

impl Diagram {
    pub fn new(ring: Ring) -> Diagram {
        Diagram { ring, nodes: Vec::new(), edges: Vec::new(), lattice: None }
    }

    pub fn edge(&mut self, label: impl Into<String>) -> usize {
        self.edges.push(Edge { label: label.into(), decorated: false, fixed: None });
        self.edges.len() - 1
    }

    pub fn boundary(&mut self, label: impl Into<String>, value: DecoratedSpin) -> usize {
        let e = self.edge(label);
        self.edges[e].fixed = Some(value);
        e
    }

    pub fn node(&mut self, kind: NodeKind, slots: &[usize]) -> usize {
        assert_eq!(slots.len(), kind.arity(), "wrong number of slots");
        for (k, &e) in slots.iter().enumerate() {
            if kind.slot_decorated(k) {
                self.edges[e].decorated = true;
            }
        }
        self.nodes.push(Node { kind, slots: slots.to_vec(), doubled: false, doubling_region: true });
        self.nodes.len() - 1
    }

    /// Every interior edge meets exactly two slots, every boundary edge one.
    pub fn validate(&self) -> Result<(), Error> {
        let mut uses = vec![0usize; self.edges.len()];
        for nd in &self.nodes {
            for &e in &nd.slots {
                uses[e] += 1;
            }
        }
        for (e, edge) in self.edges.iter().enumerate() {
            let want = if edge.fixed.is_some() { 1 } else { 2 };
            if uses[e] != want {
                return Err(Error::Invalid(format!("edge '{}' is attached {} times", edge.label, uses[e])));
            }
        }
        Ok(())
    }

    pub fn free_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].fixed.is_none()).collect()
    }

    fn effective_variant(&self, node: &Node, variant: Variant) -> Variant {
        match variant {
            Variant::Modified => Variant::Modified,
            _ if node.doubled || (variant == Variant::GDoubled && node.doubling_region) => Variant::GDoubled,
            _ => Variant::Standard,
        }
    }

    /// Weight of one node given the values on all edges.
    pub fn node_weight(&self, node: usize, values: &[DecoratedSpin], variant: Variant) -> RingElem {
        let nd = &self.nodes[node];
        let ring = &self.ring;
        let val = |k: usize| values[nd.slots[k]];
        let var = self.effective_variant(nd, variant);
        match nd.kind {
            NodeKind::Grid(kind) => {
                weights::grid_weight_decorated(ring, kind, val(0).spin, val(1), val(2).spin, val(3), var)
            }
            NodeKind::Bend(kind, i) => weights::bend_weight(ring, kind, val(0), val(1), &ring.z(i)),
            NodeKind::R(ice, s1, s2) => {
                let quad = [val(0), val(1), val(2), val(3)];
                weights::r_weight(ring, ice, quad, &s1.elem(ring), &s2.elem(ring), var)
            }
        }
    }

    /// Modified weight of one node (grid and R-vertices only).
    pub fn node_weight_modified(&self, node: usize, values: &[DecoratedSpin]) -> Result<RingFrac, Error> {
        let nd = &self.nodes[node];
        let ring = &self.ring;
        let val = |k: usize| values[nd.slots[k]];
        match nd.kind {
            NodeKind::Grid(kind) => Ok(Fraction::from_poly(weights::grid_weight_decorated(
                ring,
                kind,
                val(0).spin,
                val(1),
                val(2).spin,
                val(3),
                Variant::Modified,
            ))),
            NodeKind::R(ice, s1, s2) => {
                let quad = [val(0), val(1), val(2), val(3)];
                Ok(weights::modified_r_weight(ring, ice, quad, &s1.elem(ring), &s2.elem(ring)))
            }
            NodeKind::Bend(..) => Err(Error::Config("modified weights are not defined for bends".into())),
        }
    }

    /// Interchange rows `i` and `ī`: every grid vertex indexed by `i` switches
    /// to the inverse spectral parameter and the bend of pair `i` flips.
    pub fn swap_pair(&self, i: usize) -> Diagram {
        let mut out = self.clone();
        for nd in &mut out.nodes {
            match &mut nd.kind {
                NodeKind::Grid(kind) if kind.index() == i => {
                    *kind = VertexKind::new(kind.ice(), i, !kind.inv());
                }
                NodeKind::Bend(kind, j) if *j == i => *kind = kind.flipped(),
                _ => {}
            }
        }
        if let Some(spec) = &out.lattice {
            out.lattice = Some(spec.swap_pair(i));
        }
        out
    }
}

/// Ids of the lattice edges inside a lattice diagram.
struct LatticeIds {
    h: Vec<Vec<usize>>,
    vert: Vec<Vec<usize>>,
}

fn lattice_ids(spec: &LatticeSpec) -> LatticeIds {
    let rows = spec.rows();
    let cols = spec.cols;
    let mut next = 0;
    let mut take = || {
        next += 1;
        next - 1
    };
    let vert = (0..=rows).map(|_| (0..cols).map(|_| take()).collect()).collect();
    let h = (0..rows).map(|_| (0..=cols).map(|_| take()).collect()).collect();
    LatticeIds { h, vert }
}

/// The lattice as a diagram: `2r · cols` grid vertices and `r` bends.
pub fn lattice_diagram(spec: &LatticeSpec) -> Result<Diagram, Error> {
    let ring = Ring::new(spec.n, spec.r)?;
    let mut d = Diagram::new(ring);
    let rows = spec.rows();
    let cols = spec.cols;
    let ids = lattice_ids(spec);
    for k in 0..=rows {
        for x in 0..cols {
            let label = format!("v{k},{x}");
            if k == 0 {
                let s = if spec.top[x] { Spin::Minus } else { Spin::Plus };
                d.boundary(label, DecoratedSpin::new(s, 0));
            } else if k == rows {
                d.boundary(label, DecoratedSpin::plus(0));
            } else {
                d.edge(label);
            }
        }
    }
    for k in 0..rows {
        for x in 0..=cols {
            let label = format!("h{k},{x}");
            if x == 0 {
                d.boundary(label, DecoratedSpin::plus(0));
            } else {
                d.edge(label);
            }
        }
    }
    for k in 0..rows {
        let row = spec.row(k);
        let pair = &spec.pairs[k / 2];
        for x in 0..cols {
            let kind = VertexKind::new(row.ice, row.pair, row.inv);
            let nd = d.node(NodeKind::Grid(kind), &[ids.vert[k][x], ids.h[k][x + 1], ids.vert[k + 1][x], ids.h[k][x]]);
            d.nodes[nd].doubled = pair.doubled;
            d.nodes[nd].doubling_region = k / 2 + 1 == spec.r;
        }
    }
    for (p, pair) in spec.pairs.iter().enumerate() {
        let nd = d.node(NodeKind::Bend(pair.bend, p + 1), &[ids.h[2 * p][cols], ids.h[2 * p + 1][cols]]);
        d.nodes[nd].doubling_region = p + 1 == spec.r;
    }
    // Boundary edges on the left carry decoration 0 (charge 0 for Δ rows);
    // Γ rows are decorated from the charges at evaluation time.
    d.lattice = Some(spec.clone());
    d.validate()?;
    Ok(d)
}

/// All admissible states of a lattice, in lexicographic order of the
/// vertical spins read row by row, left to right (`+` first).
pub fn lattice_states(spec: &LatticeSpec) -> Vec<IceState> {
    let rows = spec.rows();
    let cols = spec.cols;
    let mut st = IceState { h: vec![vec![Spin::Plus; cols + 1]; rows], vert: vec![vec![Spin::Plus; cols]; rows + 1] };
    for x in 0..cols {
        st.vert[0][x] = if spec.top[x] { Spin::Minus } else { Spin::Plus };
    }
    let mut out = Vec::new();
    fn rec(spec: &LatticeSpec, st: &mut IceState, k: usize, x: usize, out: &mut Vec<IceState>) {
        let rows = spec.rows();
        let cols = spec.cols;
        if x == cols {
            if k % 2 == 1 && st.h[k][cols] == st.h[k - 1][cols] {
                return;
            }
            if k + 1 == rows {
                out.push(st.clone());
            } else {
                rec(spec, st, k + 1, 0, out);
            }
            return;
        }
        let plus = |s: Spin| (s == Spin::Plus) as i32;
        let incoming = plus(st.vert[k][x]) + plus(st.h[k][x]);
        for bottom in [Spin::Plus, Spin::Minus] {
            if k + 1 == rows && bottom == Spin::Minus {
                continue;
            }
            let right = match incoming - plus(bottom) {
                1 => Spin::Plus,
                0 => Spin::Minus,
                _ => continue,
            };
            st.vert[k + 1][x] = bottom;
            st.h[k][x + 1] = right;
            rec(spec, st, k, x + 1, out);
        }
    }
    rec(spec, &mut st, 0, 0, &mut out);
    out
}

/// Edge values of a lattice state in its diagram, decorated by the charges.
pub fn lattice_edge_values(spec: &LatticeSpec, state: &IceState) -> Vec<DecoratedSpin> {
    let ids = lattice_ids(spec);
    let decs = model::decorations(spec, state);
    let mut vals = vec![DecoratedSpin::plus(0); (spec.rows() + 1) * spec.cols + spec.rows() * (spec.cols + 1)];
    for (k, row) in ids.vert.iter().enumerate() {
        for (x, &e) in row.iter().enumerate() {
            vals[e] = DecoratedSpin::new(state.vert[k][x], 0);
        }
    }
    for (k, row) in ids.h.iter().enumerate() {
        for (x, &e) in row.iter().enumerate() {
            vals[e] = decs[k][x];
        }
    }
    vals
}

/// Boltzmann weight of a lattice state.
pub fn state_weight(diagram: &Diagram, state: &IceState, variant: Variant) -> RingElem {
    let spec = diagram.lattice.as_ref().expect("lattice diagram");
    let vals = lattice_edge_values(spec, state);
    let ring = &diagram.ring;
    let mut w = ring.one();
    for nd in 0..diagram.nodes.len() {
        let x = diagram.node_weight(nd, &vals, variant);
        if x.is_zero() {
            return x;
        }
        w = w * x;
    }
    w
}

/// One admissible assignment of a diagram: values on every edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    pub values: Vec<DecoratedSpin>,
}

/// Admissible states in canonical order. For a lattice these are the
/// spin-admissible states; otherwise the assignments of nonzero weight.
pub fn enumerate_states(diagram: &Diagram) -> Vec<Assignment> {
    if let Some(spec) = &diagram.lattice {
        return lattice_states(spec).iter().map(|s| Assignment { values: lattice_edge_values(spec, s) }).collect();
    }
    let mut out = Vec::new();
    generic_walk(diagram, &|nd, vals| diagram.node_weight(nd, vals, Variant::Standard), &mut |vals, _w: &RingElem| {
        out.push(Assignment { values: vals.to_vec() })
    });
    out
}

/// Weight algebra the generic engine multiplies in.
pub trait Weight: Clone {
    fn one(ring: &Ring) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Weight for RingElem {
    fn one(ring: &Ring) -> Self {
        ring.one()
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        RingElem::is_zero(self)
    }
}

impl Weight for RingFrac {
    fn one(ring: &Ring) -> Self {
        Fraction::from_poly(ring.one())
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn is_zero(&self) -> bool {
        RingFrac::is_zero(self)
    }
}

/// Depth-first search over the free edges of a non-lattice diagram. Each
/// node is weighed as soon as all of its edges are assigned; zero weights
/// prune.
pub fn generic_walk<W: Weight>(
    diagram: &Diagram,
    weigh: &dyn Fn(usize, &[DecoratedSpin]) -> W,
    visit: &mut dyn FnMut(&[DecoratedSpin], &W),
) {
    let ring = &diagram.ring;
    let free = diagram.free_edges();
    let pos: Vec<Option<usize>> = {
        let mut p = vec![None; diagram.edges.len()];
        for (k, &e) in free.iter().enumerate() {
            p[e] = Some(k);
        }
        p
    };
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); free.len() + 1];
    for (i, nd) in diagram.nodes.iter().enumerate() {
        let last = nd.slots.iter().filter_map(|&e| pos[e]).max();
        ready[last.map_or(0, |k| k + 1)].push(i);
    }
    let mut vals: Vec<DecoratedSpin> =
        diagram.edges.iter().map(|e| e.fixed.unwrap_or(DecoratedSpin::plus(0))).collect();
    let mut w = W::one(ring);
    for &nd in &ready[0] {
        let x = weigh(nd, &vals);
        if x.is_zero() {
            return;
        }
        w = w.times(&x);
    }
    #[allow(clippy::too_many_arguments)]
    fn rec<W: Weight>(
        d: &Diagram,
        free: &[usize],
        ready: &[Vec<usize>],
        k: usize,
        vals: &mut Vec<DecoratedSpin>,
        w: &W,
        weigh: &dyn Fn(usize, &[DecoratedSpin]) -> W,
        visit: &mut dyn FnMut(&[DecoratedSpin], &W),
    ) {
        if k == free.len() {
            visit(vals, w);
            return;
        }
        let e = free[k];
        let decs = if d.edges[e].decorated { d.ring.n } else { 1 };
        for spin in [Spin::Plus, Spin::Minus] {
            for dec in 0..decs {
                vals[e] = DecoratedSpin::new(spin, dec);
                let mut w2 = w.clone();
                let mut alive = true;
                for &nd in &ready[k + 1] {
                    let x = weigh(nd, vals);
                    if x.is_zero() {
                        alive = false;
                        break;
                    }
                    w2 = w2.times(&x);
                }
                if alive {
                    rec(d, free, ready, k + 1, vals, &w2, weigh, visit);
                }
            }
        }
    }
    rec(diagram, &free, &ready, 0, &mut vals, &w, weigh, visit);
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartitionResult {
    pub total: RingElem,
    /// Lattices only: keyed by the residues of the leftmost `ī`-row charges.
    pub by_residue: BTreeMap<Vec<u32>, RingElem>,
    pub state_count: usize,
}

/// Sum of the weights of all states (standard or g-doubled weights).
pub fn partition_function(diagram: &Diagram, variant: Variant) -> Result<PartitionResult, Error> {
    if variant == Variant::Modified {
        if diagram.lattice.is_some() || diagram.nodes.iter().any(|n| matches!(n.kind, NodeKind::Bend(..))) {
            return Err(Error::Config("modified weights are defined for grid and R-vertices only".into()));
        }
        return Err(Error::Config("use partition_function_modified for modified weights".into()));
    }
    let ring = &diagram.ring;
    let mut total = ring.zero();
    let mut by_residue = BTreeMap::new();
    let mut state_count = 0;
    if let Some(spec) = &diagram.lattice {
        for st in lattice_states(spec) {
            state_count += 1;
            let w = state_weight(diagram, &st, variant);
            let key = model::left_residues(spec, &st);
            let slot = by_residue.entry(key).or_insert_with(|| ring.zero());
            *slot = &*slot + &w;
            total = total + w;
        }
    } else {
        generic_walk(diagram, &|nd, vals| diagram.node_weight(nd, vals, variant), &mut |_, w: &RingElem| {
            state_count += 1;
            total = &total + w;
        });
    }
    Ok(PartitionResult { total, by_residue, state_count })
}

/// Partition function with modified weights, for diagrams without bends.
pub fn partition_function_modified(diagram: &Diagram) -> Result<(RingFrac, usize), Error> {
    if diagram.nodes.iter().any(|n| matches!(n.kind, NodeKind::Bend(..))) {
        return Err(Error::Config("modified weights are defined for grid and R-vertices only".into()));
    }
    let ring = &diagram.ring;
    let mut total = Fraction::from_poly(ring.zero());
    let mut count = 0;
    generic_walk(diagram, &|nd, vals| diagram.node_weight_modified(nd, vals).expect("no bends"), &mut |_, w: &RingFrac| {
        count += 1;
        total = total.add(w);
    });
    Ok((total, count))
}

/// Nonzero-weight states of a non-lattice diagram with their weights.
pub fn weighted_states(diagram: &Diagram, variant: Variant) -> Vec<(Assignment, RingElem)> {
    let mut out = Vec::new();
    generic_walk(diagram, &|nd, vals| diagram.node_weight(nd, vals, variant), &mut |vals, w: &RingElem| {
        out.push((Assignment { values: vals.to_vec() }, w.clone()))
    });
    out
}
