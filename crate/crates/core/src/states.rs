//! Kauffman states and everything read off them: state circles, the graph
//! H of circles and segments, state graphs, adequacy, homogeneity, Euler
//! data, fibers and Turaev genus.

use std::collections::BTreeMap;

use num_rational::Rational64;

use crate::diagram::{Faces, LinkDiagram, UnionFind};
use crate::error::{Error, Result};

pub use crate::diagram::Smoothing;

/// A choice of smoothing at every crossing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct State {
    pub choice: Vec<Smoothing>,
}

impl State {
    pub fn uniform(s: Smoothing, crossings: usize) -> Self {
        State { choice: vec![s; crossings] }
    }

    pub fn all_a(crossings: usize) -> Self {
        Self::uniform(Smoothing::A, crossings)
    }

    pub fn all_b(crossings: usize) -> Self {
        Self::uniform(Smoothing::B, crossings)
    }

    /// Bit `x` set means crossing `x` takes the B-smoothing.
    pub fn from_bits(bits: u64, crossings: usize) -> Self {
        State { choice: (0..crossings).map(|x| if bits >> x & 1 == 1 { Smoothing::B } else { Smoothing::A }).collect() }
    }

    /// The Seifert state: the oriented smoothing everywhere.
    pub fn seifert(d: &LinkDiagram) -> Self {
        State { choice: d.signs().iter().map(|&s| if s > 0 { Smoothing::A } else { Smoothing::B }).collect() }
    }

    pub fn len(&self) -> usize {
        self.choice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choice.is_empty()
    }

    pub fn count(&self, s: Smoothing) -> usize {
        self.choice.iter().filter(|&&c| c == s).count()
    }
}

/// State circles as cyclic walks of half-edges.
#[derive(Debug, Clone)]
pub struct StateCircles {
    /// Circle of every half-edge.
    pub circle_of: Vec<usize>,
    /// Each circle as the sequence of half-edges it runs through.
    pub walks: Vec<Vec<usize>>,
}

impl StateCircles {
    pub fn count(&self) -> usize {
        self.walks.len()
    }
}

/// Circles plus one segment per crossing, with the complementary regions
/// of the circles on the sphere.
#[derive(Debug, Clone)]
pub struct StateGraphH {
    pub state: State,
    pub circles: StateCircles,
    /// Circles joined by the segment at each crossing.
    pub segments: Vec<(usize, usize)>,
    /// Complementary region of each face of the diagram.
    pub region_of_face: Vec<usize>,
    pub region_count: usize,
    /// Region containing each segment.
    pub segment_region: Vec<usize>,
    pub faces: Faces,
}

/// G_sigma: circles as vertices, crossings as edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateGraph {
    pub vertices: usize,
    /// Endpoints of the edge of each crossing.
    pub edges: Vec<(usize, usize)>,
}

/// G'_sigma: parallel edges collapsed, crossing ids kept per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedStateGraph {
    pub vertices: usize,
    /// Distinct edges `(u, v)` with `u <= v`.
    pub edges: Vec<(usize, usize)>,
    /// Crossings collapsed into each edge.
    pub classes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerData {
    pub v: usize,
    pub e: usize,
    pub e_reduced: usize,
    pub chi: i64,
    pub chi_reduced: i64,
    pub chi_minus: i64,
    pub chi_plus: i64,
    pub chi_minus_reduced: i64,
    pub chi_plus_reduced: i64,
    pub n_sep: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub is_fiber: bool,
    /// Present only for fibered knots.
    pub genus: Option<Rational64>,
}

/// Smooths every crossing per `state` and builds H.
pub fn resolve(d: &LinkDiagram, state: &State) -> Result<StateGraphH> {
    let c = d.crossing_count();
    if state.len() != c {
        return Err(Error::StateSize { expected: c, got: state.len() });
    }
    let mut circle_of = vec![usize::MAX; 4 * c];
    let mut walks = Vec::new();
    for h0 in 0..4 * c {
        if circle_of[h0] != usize::MAX {
            continue;
        }
        let id = walks.len();
        let mut walk = Vec::new();
        let mut h = h0;
        while circle_of[h] == usize::MAX {
            let g = d.partner(h);
            circle_of[h] = id;
            circle_of[g] = id;
            walk.push(h);
            walk.push(g);
            h = 4 * (g / 4) + state.choice[g / 4].mate(g % 4);
        }
        walks.push(walk);
    }
    for _ in 0..d.free_loops() {
        walks.push(Vec::new());
    }
    let segments = (0..c).map(|x| (circle_of[4 * x], circle_of[4 * x + 2])).collect();

    let faces = d.faces();
    let mut uf = UnionFind::new(faces.count());
    for x in 0..c {
        let [q1, q2] = state.choice[x].merged_corners();
        uf.union(faces.corner(x, q1), faces.corner(x, q2));
    }
    let (region_of_face, region_count) = uf.labels();
    let segment_region = (0..c).map(|x| region_of_face[faces.corner(x, state.choice[x].merged_corners()[0])]).collect();
    Ok(StateGraphH {
        state: state.clone(),
        circles: StateCircles { circle_of, walks },
        segments,
        region_of_face,
        region_count,
        segment_region,
        faces,
    })
}

/// Collapses circles to vertices, then removes duplicate edges.
pub fn state_graph(h: &StateGraphH) -> (StateGraph, ReducedStateGraph) {
    let g = StateGraph { vertices: h.circles.count(), edges: h.segments.clone() };
    let r = g.reduced();
    (g, r)
}

/// Resolves and collapses in one step.
pub fn graphs(d: &LinkDiagram, state: &State) -> Result<(StateGraphH, StateGraph, ReducedStateGraph)> {
    let h = resolve(d, state)?;
    let (g, r) = state_graph(&h);
    Ok((h, g, r))
}

/// No edge of G_sigma is a loop.
pub fn adequacy(g: &StateGraph) -> bool {
    g.edges.iter().all(|&(u, v)| u != v)
}

/// Within every complementary region of the state circles all segments
/// carry the same label.
pub fn homogeneity(d: &LinkDiagram, state: &State) -> Result<bool> {
    Ok(is_homogeneous(&resolve(d, state)?))
}

pub fn is_homogeneous(h: &StateGraphH) -> bool {
    let mut label: Vec<Option<Smoothing>> = vec![None; h.region_count];
    for (x, &r) in h.segment_region.iter().enumerate() {
        let s = h.state.choice[x];
        match label[r] {
            Some(t) if t != s => return false,
            _ => label[r] = Some(s),
        }
    }
    true
}

pub fn euler_data(g: &StateGraph, r: &ReducedStateGraph) -> EulerData {
    let v = g.vertices as i64;
    let chi = v - g.edges.len() as i64;
    let chi_reduced = v - r.edges.len() as i64;
    EulerData {
        v: g.vertices,
        e: g.edges.len(),
        e_reduced: r.edges.len(),
        chi,
        chi_reduced,
        chi_minus: (-chi).max(0),
        chi_plus: chi.max(0),
        chi_minus_reduced: (-chi_reduced).max(0),
        chi_plus_reduced: chi_reduced.max(0),
        n_sep: r.bridge_count(),
    }
}

/// The state surface is orientable iff G_sigma is bipartite.
pub fn orientability(g: &StateGraph) -> bool {
    let mut adj = vec![Vec::new(); g.vertices];
    for &(u, v) in &g.edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut colour = vec![u8::MAX; g.vertices];
    for s in 0..g.vertices {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[u];
                    stack.push(w);
                } else if colour[w] == colour[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Fiber test for an adequate homogeneous state: the state surface is a
/// fiber iff G'_sigma is a tree.
pub fn fiber_report(d: &LinkDiagram, state: &State) -> Result<FiberReport> {
    let (h, g, r) = graphs(d, state)?;
    if !adequacy(&g) || !is_homogeneous(&h) {
        return Err(Error::NotAdequateOrHomogeneous);
    }
    let is_fiber = r.is_tree();
    let genus = (is_fiber && d.component_count() == 1).then(|| {
        let chi = g.vertices as i64 - g.edges.len() as i64;
        Rational64::new(1 - chi, 2)
    });
    Ok(FiberReport { is_fiber, genus })
}

/// Genus of the Turaev surface, `(2 + c - v_A - v_B) / 2`.
pub fn turaev_genus(d: &LinkDiagram) -> i64 {
    let c = d.crossing_count();
    let va = resolve(d, &State::all_a(c)).expect("state sized to diagram").circles.count();
    let vb = resolve(d, &State::all_b(c)).expect("state sized to diagram").circles.count();
    (2 + c as i64 - va as i64 - vb as i64) / 2
}

/// For a homogeneous state the state surface is essential iff the state is
/// adequate.
pub fn essentiality(d: &LinkDiagram, state: &State) -> Result<bool> {
    let (h, g, _) = graphs(d, state)?;
    if !is_homogeneous(&h) {
        return Err(Error::NotHomogeneous);
    }
    Ok(adequacy(&g))
}

impl StateGraph {
    pub fn reduced(&self) -> ReducedStateGraph {
        let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (x, &(u, v)) in self.edges.iter().enumerate() {
            classes.entry((u.min(v), u.max(v))).or_default().push(x);
        }
        let (edges, classes) = classes.into_iter().unzip();
        ReducedStateGraph { vertices: self.vertices, edges, classes }
    }

    pub fn has_loop(&self) -> bool {
        !adequacy(self)
    }
}

impl ReducedStateGraph {
    fn components_without(&self, skip: Option<usize>) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if Some(i) != skip {
                uf.union(u, v);
            }
        }
        uf.labels().1
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(None) == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.vertices
    }

    /// Number of separating edges.
    pub fn bridge_count(&self) -> usize {
        let base = self.components_without(None);
        (0..self.edges.len())
            .filter(|&i| self.edges[i].0 != self.edges[i].1 && self.components_without(Some(i)) > base)
            .count()
    }

    /// Multiplicity of each collapsed edge.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Path graph test (a tree with maximum degree 2).
    pub fn is_path(&self) -> bool {
        let mut deg = vec![0; self.vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        self.is_tree() && deg.iter().all(|&d| d <= 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::{parse_braid, parse_pd};

    fn braid(s: &str) -> LinkDiagram {
        LinkDiagram::braid_closure(&parse_braid(s).unwrap()).unwrap()
    }

    fn figure8() -> LinkDiagram {
        LinkDiagram::from_pd(&parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap()).unwrap()
    }

    fn counts(d: &LinkDiagram, s: &State) -> (usize, usize, usize) {
        let (_, g, r) = graphs(d, s).unwrap();
        (g.vertices, g.edges.len(), r.edges.len())
    }

    #[test]
    fn trefoil_states() {
        let t = braid("B2: s1^3");
        assert_eq!(counts(&t, &State::all_a(3)), (3, 3, 3));
        assert_eq!(counts(&t, &State::all_b(3)), (2, 3, 1));
        let (_, g, r) = graphs(&t, &State::all_a(3)).unwrap();
        let e = euler_data(&g, &r);
        assert_eq!((e.chi, e.chi_minus_reduced, e.n_sep), (0, 0, 0));
        assert!(adequacy(&g));
        assert!(!orientability(&g));
        let (_, g, r) = graphs(&t, &State::all_b(3)).unwrap();
        let e = euler_data(&g, &r);
        assert_eq!((e.chi, e.chi_reduced, e.n_sep), (-1, 1, 1));
        assert!(orientability(&g));
    }

    #[test]
    fn figure8_states() {
        let d = figure8();
        assert_eq!(d.component_count(), 1);
        assert_eq!(counts(&d, &State::all_a(4)), (3, 4, 3));
        assert_eq!(counts(&d, &State::all_b(4)), (3, 4, 3));
        assert_eq!(turaev_genus(&d), 0);
    }

    #[test]
    fn unknot_state() {
        let u = LinkDiagram::unknot();
        let h = resolve(&u, &State::all_a(0)).unwrap();
        assert_eq!(h.circles.count(), 1);
        assert_eq!(h.region_count, 2);
        assert_eq!(turaev_genus(&u), 0);
    }

    #[test]
    fn kink_is_inadequate_on_one_side() {
        let d = LinkDiagram::from_pd(&parse_pd("X(1,2,2,1)").unwrap()).unwrap();
        let (_, ga, _) = graphs(&d, &State::all_a(1)).unwrap();
        let (_, gb, _) = graphs(&d, &State::all_b(1)).unwrap();
        assert_ne!(adequacy(&ga), adequacy(&gb));
    }

    #[test]
    fn regions_number_circles_plus_one() {
        let d = braid("B3: s1^2 s2^-3 s1 s2^-1");
        for bits in 0..1u64 << d.crossing_count() {
            let h = resolve(&d, &State::from_bits(bits, d.crossing_count())).unwrap();
            assert_eq!(h.region_count, h.circles.count() + 1);
        }
    }

    #[test]
    fn fiber_of_torus_braids() {
        for q in 2..8 {
            let d = braid(&format!("B2: s1^{q}"));
            let f = fiber_report(&d, &State::all_b(q)).unwrap();
            assert!(f.is_fiber);
            if q % 2 == 1 {
                assert_eq!(f.genus, Some(Rational64::from_integer((q as i64 - 1) / 2)));
            } else {
                assert_eq!(f.genus, None);
            }
        }
        let t = braid("B2: s1^3");
        assert!(!fiber_report(&t, &State::all_a(3)).unwrap().is_fiber);
    }

    #[test]
    fn seifert_state_of_positive_braid_is_all_b() {
        let d = braid("B3: s1^3 s2^4");
        assert_eq!(State::seifert(&d), State::all_b(7));
    }

    #[test]
    fn essentiality_needs_homogeneity() {
        let t = braid("B2: s1^3");
        assert_eq!(essentiality(&t, &State::all_a(3)), Ok(true));
        let kink = LinkDiagram::from_pd(&parse_pd("X(1,2,2,1)").unwrap()).unwrap();
        let bad = if adequacy(&graphs(&kink, &State::all_a(1)).unwrap().1) { State::all_b(1) } else { State::all_a(1) };
        assert_eq!(essentiality(&kink, &bad), Ok(false));
    }
}
