//! Combinatorial shadow of the polyhedral decomposition of the all-A state:
//! polyhedral regions, non-prime arcs, lower polyhedra, 2-edge loops,
//! spanning counts and the guts interval.

use crate::diagram::{LinkDiagram, Orientation, Smoothing, TwistAnalysis, UnionFind, Wiring};
use crate::error::{Error, Result};
use crate::states::{self, State, StateGraph, StateGraphH};

/// A complementary region of the all-A circles.
#[derive(Debug, Clone)]
pub struct PolyhedralRegion {
    pub id: usize,
    /// Circles bordering the region.
    pub circles: Vec<usize>,
    /// Crossings whose segments lie in the region.
    pub segments: Vec<usize>,
}

impl PolyhedralRegion {
    pub fn is_trivial(&self) -> bool {
        self.segments.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct NonprimeCensus {
    pub arc_count: usize,
    pub none_exist: bool,
    /// One alternating diagram per lower polyhedron.
    pub lower_polyhedra: Vec<LinkDiagram>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoEdgeLoop {
    /// Crossing ids of the two parallel edges, ascending.
    pub edges: (usize, usize),
    pub circles: (usize, usize),
    pub same_twist_region: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanningCounts {
    pub e_a: usize,
    pub e_a_reduced: usize,
    pub b_a: usize,
    pub m_a: usize,
    pub n_sep: usize,
    /// `||E_l|| = e_A - e'_A + n_sep`.
    pub e_l: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GutsJustification {
    Tree,
    Montesinos,
    OnlyBigonLoops,
    NoNonPrimeArcs,
    Generic,
}

impl GutsJustification {
    pub fn name(self) -> &'static str {
        match self {
            GutsJustification::Tree => "Tree",
            GutsJustification::Montesinos => "Montesinos",
            GutsJustification::OnlyBigonLoops => "OnlyBigonLoops",
            GutsJustification::NoNonPrimeArcs => "NoNonPrimeArcs",
            GutsJustification::Generic => "Generic",
        }
    }
}

/// Bounds on the negative Euler characteristic of the guts of `M_A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GutsInterval {
    pub lo: i64,
    pub hi: i64,
    pub exact: bool,
    pub justification: GutsJustification,
}

/// What the caller knows about a Montesinos diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MontesinosHint {
    pub reduced_admissible: bool,
    pub positive_tangles: usize,
}

/// All complementary regions of the circles of `h`, trivial ones included.
pub fn regions(h: &StateGraphH) -> Vec<PolyhedralRegion> {
    let mut out: Vec<PolyhedralRegion> =
        (0..h.region_count).map(|id| PolyhedralRegion { id, circles: Vec::new(), segments: Vec::new() }).collect();
    for (x, &r) in h.segment_region.iter().enumerate() {
        out[r].segments.push(x);
    }
    // an arc of the diagram lies on one circle and borders the faces of its
    // two darts
    for (dart, &f) in h.faces.face_of.iter().enumerate() {
        let c = h.circles.circle_of[dart];
        let r = &mut out[h.region_of_face[f]];
        if !r.circles.contains(&c) {
            r.circles.push(c);
        }
    }
    for r in &mut out {
        r.circles.sort_unstable();
    }
    out
}

/// The alternating diagram obtained by restoring the crossings in `subset`
/// on the circles of `h` and forgetting every other segment.
pub fn restricted_diagram(d: &LinkDiagram, h: &StateGraphH, subset: &[usize]) -> Result<LinkDiagram> {
    let c = d.crossing_count();
    let mut w = Wiring::new();
    let mut ends: Vec<Option<[usize; 4]>> = vec![None; c];
    for &x in subset {
        ends[x] = Some(w.crossing());
    }
    for walk in &h.circles.walks {
        // walk = [h0, g0, h1, g1, ...] with g_i = partner(h_i) and h_{i+1}
        // the smoothing mate of g_i
        let mut visits: Vec<(usize, usize)> = Vec::new();
        for i in 0..walk.len() / 2 {
            let g = walk[2 * i + 1];
            let next = walk[(2 * i + 2) % walk.len()];
            if ends[g / 4].is_some() {
                visits.push((g, next));
            }
        }
        for i in 0..visits.len() {
            let depart = visits[i].1;
            let arrive = visits[(i + 1) % visits.len()].0;
            let pd = ends[depart / 4].expect("visited crossing restored")[depart % 4];
            let pa = ends[arrive / 4].expect("visited crossing restored")[arrive % 4];
            w.wire(pd, pa);
        }
    }
    w.assemble(Orientation::Free)
}

/// Biconnected components of a multigraph, as lists of edge indices.
fn blocks(vertices: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertices];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        if u != v {
            adj[v].push((u, i));
        }
    }
    let mut disc = vec![usize::MAX; vertices];
    let mut low = vec![0; vertices];
    let mut time = 0;
    let mut stack: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    let mut used = vec![false; edges.len()];

    // iterative DFS: frame = (vertex, parent edge, next adjacency index)
    for root in 0..vertices {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, pe, ref mut idx)) = frames.last_mut() {
            if *idx < adj[u].len() {
                let (v, e) = adj[u][*idx];
                *idx += 1;
                if e == pe || used[e] {
                    continue;
                }
                used[e] = true;
                stack.push(e);
                if disc[v] == usize::MAX {
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    frames.push((v, e, 0));
                } else {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        block.sort_unstable();
                        out.push(block);
                    }
                }
            }
        }
        // loops at an isolated root stay on the stack
        if !stack.is_empty() {
            let mut block: Vec<usize> = std::mem::take(&mut stack);
            block.sort_unstable();
            out.push(block);
        }
    }
    out
}

/// Maximal non-prime arc count and the resulting lower polyhedra.
pub fn nonprime_census(d: &LinkDiagram, h: &StateGraphH, regions: &[PolyhedralRegion]) -> Result<NonprimeCensus> {
    let mut arc_count = 0;
    let mut lower = Vec::new();
    for r in regions.iter().filter(|r| !r.is_trivial()) {
        // G_R on the circles touched by segments of R
        let mut index = std::collections::BTreeMap::new();
        let mut local_edges = Vec::with_capacity(r.segments.len());
        for &x in &r.segments {
            let (a, b) = h.segments[x];
            let n = index.len();
            let ia = *index.entry(a).or_insert(n);
            let n = index.len();
            let ib = *index.entry(b).or_insert(n);
            local_edges.push((ia, ib));
        }
        let nv = index.len();
        let mut uf = UnionFind::new(nv);
        for &(a, b) in &local_edges {
            uf.union(a, b);
        }
        let components = uf.labels().1;
        let bs = blocks(nv, &local_edges);
        arc_count += (components - 1) + (bs.len() - components);
        for b in bs {
            let subset: Vec<usize> = b.iter().map(|&i| r.segments[i]).collect();
            lower.push(restricted_diagram(d, h, &subset)?);
        }
    }
    Ok(NonprimeCensus { arc_count, none_exist: arc_count == 0, lower_polyhedra: lower })
}

/// Every unordered pair of parallel non-loop edges of G_A.
pub fn two_edge_loops(g: &StateGraph, twist: &TwistAnalysis) -> Vec<TwoEdgeLoop> {
    let r = g.reduced();
    let mut out = Vec::new();
    for (&(u, v), class) in r.edges.iter().zip(&r.classes) {
        if u == v {
            continue;
        }
        for i in 0..class.len() {
            for j in i + 1..class.len() {
                let (x, y) = (class[i], class[j]);
                out.push(TwoEdgeLoop {
                    edges: (x, y),
                    circles: (u, v),
                    same_twist_region: twist.region_of[x] == twist.region_of[y],
                });
            }
        }
    }
    out
}

/// Twist regions of length at least 2 whose A-resolution is short: the
/// A-smoothings merge the region's bigons, so all its edges in G_A join the
/// same two circles.
pub fn a_regions(twist: &TwistAnalysis) -> Vec<usize> {
    twist.regions.iter().enumerate().filter(|(_, t)| t.len() > 1 && t.is_short(Smoothing::A)).map(|(i, _)| i).collect()
}

pub fn spanning_counts(d: &LinkDiagram) -> Result<SpanningCounts> {
    let (_, g, r) = states::graphs(d, &State::all_a(d.crossing_count()))?;
    if !states::adequacy(&g) {
        return Err(Error::NotAdequate);
    }
    let twist = d.twist_regions();
    let b_a: usize = a_regions(&twist).iter().map(|&i| twist.regions[i].len() - 1).sum();
    let e_a = g.edges.len();
    let e_a_reduced = r.edges.len();
    let n_sep = r.bridge_count();
    Ok(SpanningCounts { e_a, e_a_reduced, b_a, m_a: e_a - e_a_reduced - b_a, n_sep, e_l: e_a - e_a_reduced + n_sep })
}

/// Interval for the negative Euler characteristic of the guts of `M_A`;
/// the first applicable rule wins.
pub fn guts_interval(d: &LinkDiagram, hint: Option<MontesinosHint>) -> Result<GutsInterval> {
    let (h, g, r) = states::graphs(d, &State::all_a(d.crossing_count()))?;
    if !states::adequacy(&g) {
        return Err(Error::NotAdequate);
    }
    if !r.is_connected() {
        return Err(Error::NotConnected);
    }
    let chi_minus = (r.edges.len() as i64 - r.vertices as i64).max(0);
    let exact = |v: i64, j| GutsInterval { lo: v, hi: v, exact: true, justification: j };
    if r.is_tree() {
        return Ok(exact(0, GutsJustification::Tree));
    }
    if let Some(m) = hint {
        if m.reduced_admissible && m.positive_tangles >= 3 {
            return Ok(exact(chi_minus, GutsJustification::Montesinos));
        }
    }
    let prime = d.primeness().is_prime;
    let twist = d.twist_regions();
    if prime && two_edge_loops(&g, &twist).iter().all(|l| l.same_twist_region) {
        return Ok(exact(chi_minus, GutsJustification::OnlyBigonLoops));
    }
    if prime && nonprime_census(d, &h, &regions(&h))?.none_exist {
        let m_a = spanning_counts(d)?.m_a as i64;
        let lo = (chi_minus - 8 * m_a).max(0);
        return Ok(GutsInterval {
            lo,
            hi: chi_minus,
            exact: lo == chi_minus,
            justification: GutsJustification::NoNonPrimeArcs,
        });
    }
    Ok(GutsInterval { lo: 0, hi: chi_minus, exact: chi_minus == 0, justification: GutsJustification::Generic })
}

/// Same interval for `M_B`, through the mirror image.
pub fn guts_interval_b(d: &LinkDiagram, hint: Option<MontesinosHint>) -> Result<GutsInterval> {
    guts_interval(&d.mirror(), hint)
}

/// Removes crossing `x`, which must lie in an A-region, by its A-smoothing;
/// the twist region loses one crossing and G_A loses one parallel edge.
pub fn remove_bigon(d: &LinkDiagram, x: usize) -> Result<LinkDiagram> {
    d.smooth_crossing(x, Smoothing::A)
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

    fn census(d: &LinkDiagram) -> NonprimeCensus {
        let h = states::resolve(d, &State::all_a(d.crossing_count())).unwrap();
        nonprime_census(d, &h, &regions(&h)).unwrap()
    }

    #[test]
    fn blocks_of_small_graphs() {
        assert_eq!(blocks(3, &[(0, 1), (1, 2), (2, 0)]).len(), 1);
        assert_eq!(blocks(3, &[(0, 1), (1, 2)]).len(), 2);
        assert_eq!(blocks(3, &[(0, 1), (0, 1), (1, 2), (1, 2)]).len(), 2);
        assert_eq!(blocks(2, &[(0, 1), (0, 1), (0, 1)]).len(), 1);
        let b = blocks(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn figure8_polyhedra() {
        let d = figure8();
        let h = states::resolve(&d, &State::all_a(4)).unwrap();
        let nontrivial = regions(&h).into_iter().filter(|r| !r.is_trivial()).count();
        assert_eq!(nontrivial, 1);
        let c = census(&d);
        assert_eq!(c.arc_count, 0);
        assert_eq!(c.lower_polyhedra.len(), 1);
        assert_eq!(c.lower_polyhedra[0].crossing_count(), 4);
        let gi = guts_interval(&d, None).unwrap();
        assert_eq!((gi.lo, gi.hi, gi.justification), (0, 0, GutsJustification::OnlyBigonLoops));
    }

    #[test]
    fn trefoil_polyhedra() {
        let t = braid("B2: s1^3");
        assert_eq!(census(&t).arc_count, 0);
        let (_, g, _) = states::graphs(&t, &State::all_a(3)).unwrap();
        assert!(two_edge_loops(&g, &t.twist_regions()).is_empty());
        let s = spanning_counts(&t).unwrap();
        assert_eq!((s.m_a, s.e_l), (0, 0));
        let gi = guts_interval(&t, None).unwrap();
        assert_eq!((gi.lo, gi.hi, gi.exact), (0, 0, true));
        assert_eq!(gi.justification, GutsJustification::OnlyBigonLoops);
    }

    #[test]
    fn hopf_counts() {
        let hopf = braid("B2: s1^2");
        let s = spanning_counts(&hopf).unwrap();
        assert_eq!((s.e_a, s.e_a_reduced, s.b_a, s.m_a), (2, 1, 1, 0));
        let (_, g, _) = states::graphs(&hopf, &State::all_a(2)).unwrap();
        let loops = two_edge_loops(&g, &hopf.twist_regions());
        assert_eq!(loops.len(), 1);
        assert!(loops[0].same_twist_region);
    }

    #[test]
    fn trefoil_all_b_is_tree() {
        let t = braid("B2: s1^-3");
        let gi = guts_interval(&t, None).unwrap();
        assert_eq!(gi.justification, GutsJustification::Tree);
    }
}
