//! Planar 4-valent link diagrams.
//!
//! Crossing `x` owns half-edges `4x..4x+4`, one per slot, in counterclockwise
//! order. Slot 0 is the incoming under-strand, slot 2 the outgoing
//! under-strand; the over-strand uses slots 1 and 3. A crossing is positive
//! (right-handed) when the over-strand runs from slot 3 to slot 1.
//!
//! Arcs are stored as an involution `partner` on half-edges.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::notation::{BraidWord, PDCode};

/// Which way a crossing is smoothed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    /// Slot joined to `slot` when the crossing is smoothed this way.
    ///
    /// A joins slots (0,1) and (2,3); B joins (1,2) and (3,0).
    #[inline]
    pub fn mate(self, slot: usize) -> usize {
        match self {
            Smoothing::A => slot ^ 1,
            Smoothing::B => {
                if slot % 2 == 1 {
                    (slot + 1) % 4
                } else {
                    (slot + 3) % 4
                }
            }
        }
    }

    /// The two corners (indexed by their first slot) merged by this smoothing.
    #[inline]
    pub fn merged_corners(self) -> [usize; 2] {
        match self {
            Smoothing::A => [1, 3],
            Smoothing::B => [0, 2],
        }
    }

    pub fn other(self) -> Self {
        match self {
            Smoothing::A => Smoothing::B,
            Smoothing::B => Smoothing::A,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    partner: Vec<usize>,
    signs: Vec<i8>,
    free_loops: usize,
}

/// Face structure of the diagram on the sphere.
#[derive(Debug, Clone)]
pub struct Faces {
    /// Face of each dart (half-edge read as "leaving its crossing").
    pub face_of: Vec<usize>,
    /// Corner count of each face.
    pub sizes: Vec<usize>,
}

impl Faces {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    /// Face holding the corner of crossing `x` between slots `q` and `q+1`.
    #[inline]
    pub fn corner(&self, x: usize, q: usize) -> usize {
        self.face_of[4 * x + (q + 1) % 4]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistRegion {
    /// Crossing ids, ascending.
    pub crossings: Vec<usize>,
    /// Smoothings whose resolution of the region is short, i.e. merges its
    /// bigons. Empty for a single crossing; both when every face around a
    /// 2-crossing chain is a bigon.
    pub short: Vec<Smoothing>,
}

impl TwistRegion {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn is_short(&self, s: Smoothing) -> bool {
        self.short.contains(&s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistAnalysis {
    pub regions: Vec<TwistRegion>,
    pub twist_number: usize,
    pub twist_reduced: bool,
    /// Region index of every crossing.
    pub region_of: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Primeness {
    pub is_prime: bool,
    pub has_nugatory: bool,
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    /// Dense relabelling of the classes, numbered by first appearance.
    pub(crate) fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut map = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut next = 0;
        for (i, slot) in out.iter_mut().enumerate() {
            let r = self.find(i);
            if map[r] == usize::MAX {
                map[r] = next;
                next += 1;
            }
            *slot = map[r];
        }
        (out, next)
    }
}

/// How `Wiring::assemble` picks strand directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Orientation {
    /// Slot 0 of every crossing is already the incoming under-strand.
    Fixed,
    /// Any consistent orientation; slots are rotated by 0 or 2 to fit.
    Free,
}

/// Scratch construction: crossings whose ends are points, joined by wires
/// through any number of pass-through points.
#[derive(Debug, Default, Clone)]
pub(crate) struct Wiring {
    crossings: Vec<[usize; 4]>,
    end_of: Vec<Option<usize>>,
    wires: Vec<(usize, usize)>,
    over_hint: Vec<Option<usize>>,
}

impl Wiring {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn point(&mut self) -> usize {
        self.end_of.push(None);
        self.end_of.len() - 1
    }

    /// Adds a crossing; returns its ends listed counterclockwise with the
    /// under-strand on positions 0 and 2.
    pub(crate) fn crossing(&mut self) -> [usize; 4] {
        let x = self.crossings.len();
        let ends = [0, 1, 2, 3].map(|k| {
            let p = self.point();
            self.end_of[p] = Some(4 * x + k);
            p
        });
        self.crossings.push(ends);
        self.over_hint.push(None);
        ends
    }

    /// Records which over slot (1 or 3) is incoming, used only when the
    /// over-strand's component never passes under.
    pub(crate) fn hint_over(&mut self, x: usize, slot: usize) {
        self.over_hint[x] = Some(slot);
    }

    pub(crate) fn wire(&mut self, a: usize, b: usize) {
        self.wires.push((a, b));
    }

    pub(crate) fn assemble(&self, mode: Orientation) -> Result<LinkDiagram> {
        let n = self.end_of.len();
        let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (w, &(a, b)) in self.wires.iter().enumerate() {
            inc[a].push(w);
            inc[b].push(w);
        }
        let c = self.crossings.len();
        let mut partner = vec![usize::MAX; 4 * c];
        let mut seen_wire = vec![false; self.wires.len()];
        for (p, end) in self.end_of.iter().enumerate() {
            let Some(h) = *end else { continue };
            if inc[p].len() != 1 {
                return Err(Error::Disconnected);
            }
            let mut at = p;
            let mut via = inc[p][0];
            loop {
                seen_wire[via] = true;
                let (a, b) = self.wires[via];
                let next = if a == at { b } else { a };
                if let Some(g) = self.end_of[next] {
                    partner[h] = g;
                    break;
                }
                if inc[next].len() != 2 {
                    return Err(Error::Disconnected);
                }
                via = if inc[next][0] == via { inc[next][1] } else { inc[next][0] };
                at = next;
            }
        }
        let free_loops = count_free_loops(&self.wires, &inc, &seen_wire);
        if c == 0 {
            return match free_loops {
                1 => Ok(LinkDiagram::unknot()),
                _ => Err(Error::Disconnected),
            };
        }
        if free_loops > 0 {
            return Err(Error::Disconnected);
        }
        orient(partner, mode, &self.over_hint)
    }
}

fn count_free_loops(wires: &[(usize, usize)], inc: &[Vec<usize>], seen: &[bool]) -> usize {
    let mut seen = seen.to_vec();
    let mut loops = 0;
    for w in 0..wires.len() {
        if seen[w] {
            continue;
        }
        loops += 1;
        let mut stack = vec![w];
        while let Some(v) = stack.pop() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            let (a, b) = wires[v];
            stack.extend(inc[a].iter().chain(&inc[b]).copied().filter(|&u| !seen[u]));
        }
    }
    loops
}

/// Chooses strand directions, rotates crossings so slot 0 is the incoming
/// under-strand, derives signs, and validates the result.
fn orient(partner: Vec<usize>, mode: Orientation, over_hint: &[Option<usize>]) -> Result<LinkDiagram> {
    let c = partner.len() / 4;
    // entering slot of each pass: [under pass, over pass]
    let mut under_in = vec![usize::MAX; c];
    let mut over_in = vec![usize::MAX; c];
    let assigned = |under_in: &[usize], over_in: &[usize], h: usize| {
        let (x, p) = (h / 4, h % 4);
        if p % 2 == 0 {
            under_in[x] != usize::MAX
        } else {
            over_in[x] != usize::MAX
        }
    };
    for h0 in 0..4 * c {
        if assigned(&under_in, &over_in, h0) {
            continue;
        }
        let passes = walk(&partner, h0);
        let start = match mode {
            // any under pass fixes the direction: slot 0 of its crossing
            // is where the strand enters
            Orientation::Fixed => passes
                .iter()
                .find(|&&h| h % 2 == 0)
                .map(|&h| 4 * (h / 4))
                .or_else(|| passes.iter().find_map(|&h| over_hint[h / 4].map(|s| 4 * (h / 4) + s)))
                .unwrap_or(h0),
            Orientation::Free => h0,
        };
        for h in walk(&partner, start) {
            let (x, p) = (h / 4, h % 4);
            if p % 2 == 0 {
                if mode == Orientation::Fixed && p != 0 {
                    return Err(Error::InconsistentOrientation(x));
                }
                under_in[x] = p;
            } else {
                over_in[x] = p;
            }
        }
    }
    let rot: Vec<usize> = under_in.clone();
    let relabel = |h: usize| 4 * (h / 4) + (h % 4 + 4 - rot[h / 4]) % 4;
    let mut new_partner = vec![0; 4 * c];
    for h in 0..4 * c {
        new_partner[relabel(h)] = relabel(partner[h]);
    }
    let signs = (0..c).map(|x| if (over_in[x] + 4 - rot[x]) % 4 == 3 { 1 } else { -1 }).collect();
    let d = LinkDiagram { partner: new_partner, signs, free_loops: 0 };
    d.validate()?;
    Ok(d)
}

/// Entering half-edges of a strand, starting by entering at `h`.
fn walk(partner: &[usize], h: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = h;
    loop {
        out.push(cur);
        let exit = 4 * (cur / 4) + (cur % 4 + 2) % 4;
        cur = partner[exit];
        if cur == h {
            return out;
        }
    }
}

impl LinkDiagram {
    /// The crossingless circle.
    pub fn unknot() -> Self {
        LinkDiagram { partner: Vec::new(), signs: Vec::new(), free_loops: 1 }
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    /// Half-edge at the other end of the arc leaving `h`.
    #[inline]
    pub fn partner(&self, h: usize) -> usize {
        self.partner[h]
    }

    /// +1 for a right-handed crossing, -1 for a left-handed one.
    #[inline]
    pub fn sign(&self, x: usize) -> i8 {
        self.signs[x]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// Closed crossingless loops (only the unknot has one).
    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Incoming over slot of crossing `x`.
    #[inline]
    pub fn over_in(&self, x: usize) -> usize {
        if self.signs[x] > 0 {
            3
        } else {
            1
        }
    }

    fn validate(&self) -> Result<()> {
        let c = self.crossing_count();
        let mut uf = UnionFind::new(c);
        for h in 0..4 * c {
            uf.union(h / 4, self.partner[h] / 4);
        }
        if (0..c).any(|x| uf.find(x) != 0) {
            return Err(Error::Disconnected);
        }
        let faces = self.faces().count();
        if faces != c + 2 {
            return Err(Error::NonPlanar { crossings: c, faces });
        }
        Ok(())
    }

    /// Builds the diagram of a PD code.
    pub fn from_pd(code: &PDCode) -> Result<Self> {
        code.validate()?;
        if code.crossings.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut w = Wiring::new();
        let mut first: HashMap<u64, usize> = HashMap::new();
        for t in &code.crossings {
            let ends = w.crossing();
            let x = w.crossings.len() - 1;
            let (j, l) = (t[1], t[3]);
            if j == l + 1 || l > j + 1 {
                w.hint_over(x, 3);
            } else {
                w.hint_over(x, 1);
            }
            for k in 0..4 {
                match first.remove(&t[k]) {
                    Some(p) => w.wire(p, ends[k]),
                    None => {
                        first.insert(t[k], ends[k]);
                    }
                }
            }
        }
        w.assemble(Orientation::Fixed)
    }

    /// PD code with arcs numbered consecutively along each component.
    pub fn to_pd(&self) -> PDCode {
        let c = self.crossing_count();
        let mut label = vec![0u64; 4 * c];
        let mut next = 1;
        for h0 in 0..4 * c {
            if label[h0] != 0 || !self.is_entering(h0) {
                continue;
            }
            let strand = walk(&self.partner, h0);
            for &h in &strand {
                let exit = 4 * (h / 4) + (h % 4 + 2) % 4;
                label[exit] = next;
                label[self.partner[exit]] = next;
                next += 1;
            }
        }
        PDCode { crossings: (0..c).map(|x| [0, 1, 2, 3].map(|k| label[4 * x + k])).collect() }
    }

    /// True when the strand through `h` enters its crossing there.
    pub fn is_entering(&self, h: usize) -> bool {
        let (x, p) = (h / 4, h % 4);
        p == 0 || p == self.over_in(x)
    }

    /// Standard closure of a braid, strands running upward.
    ///
    /// A positive letter is the crossing whose B-smoothing follows the
    /// strand orientation.
    pub fn braid_closure(b: &BraidWord) -> Result<Self> {
        let mut w = Wiring::new();
        let bottom: Vec<usize> = (0..b.strands).map(|_| w.point()).collect();
        let mut top = bottom.clone();
        for &(i, e) in &b.letters {
            for _ in 0..e.unsigned_abs() {
                let ends = w.crossing();
                // ends listed counterclockwise from the incoming under end
                let x = w.crossings.len() - 1;
                let (sw, se, ne, nw) = if e > 0 {
                    w.hint_over(x, 1);
                    (ends[0], ends[1], ends[2], ends[3])
                } else {
                    w.hint_over(x, 3);
                    (ends[3], ends[0], ends[1], ends[2])
                };
                w.wire(top[i - 1], sw);
                w.wire(top[i], se);
                top[i - 1] = nw;
                top[i] = ne;
            }
        }
        for s in 0..b.strands {
            w.wire(top[s], bottom[s]);
        }
        w.assemble(Orientation::Fixed)
    }

    /// Blackboard-framed `n`-cable: every arc replaced by `n` parallel copies.
    pub fn cable(&self, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidCableCount(n));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let c = self.crossing_count();
        if c == 0 {
            return Err(Error::Disconnected);
        }
        let id = |x: usize, i: usize, j: usize| x * n * n + i * n + j;
        let mut partner = vec![0; 4 * c * n * n];
        let mut link = |a: usize, b: usize| {
            partner[a] = b;
            partner[b] = a;
        };
        // Grid crossing (i, j): over copy i (south to north), under copy j
        // (west to east); slots keep the original meaning.
        for x in 0..c {
            for i in 0..n {
                for j in 0..n {
                    if i + 1 < n {
                        link(4 * id(x, i, j) + 2, 4 * id(x, i + 1, j));
                    }
                    if j + 1 < n {
                        link(4 * id(x, i, j) + 1, 4 * id(x, i, j + 1) + 3);
                    }
                }
            }
        }
        // Boundary half-edge of copy k leaving crossing x through slot p,
        // copies counted from the left looking outward.
        let boundary = |x: usize, p: usize, k: usize| match p {
            0 => 4 * id(x, 0, n - 1 - k),
            1 => 4 * id(x, n - 1 - k, n - 1) + 1,
            2 => 4 * id(x, n - 1, k) + 2,
            _ => 4 * id(x, k, 0) + 3,
        };
        for h in 0..4 * c {
            let g = self.partner[h];
            if h < g {
                for k in 0..n {
                    link(boundary(h / 4, h % 4, k), boundary(g / 4, g % 4, n - 1 - k));
                }
            }
        }
        let signs = (0..c * n * n).map(|y| self.signs[y / (n * n)]).collect();
        let d = LinkDiagram { partner, signs, free_loops: 0 };
        d.validate()?;
        Ok(d)
    }

    /// Mirror image: over and under swapped at every crossing.
    pub fn mirror(&self) -> Self {
        let c = self.crossing_count();
        // the old incoming over slot becomes the new slot 0
        let shift: Vec<usize> = (0..c).map(|x| self.over_in(x)).collect();
        let relabel = |h: usize| 4 * (h / 4) + (h % 4 + 4 - shift[h / 4]) % 4;
        let mut partner = vec![0; 4 * c];
        for h in 0..4 * c {
            partner[relabel(h)] = relabel(self.partner[h]);
        }
        LinkDiagram { partner, signs: self.signs.iter().map(|s| -s).collect(), free_loops: self.free_loops }
    }

    /// Half-edge of `mirror()` corresponding to half-edge `h` of `self`.
    pub fn mirror_half_edge(&self, h: usize) -> usize {
        4 * (h / 4) + (h % 4 + 4 - self.over_in(h / 4)) % 4
    }

    /// Number of link components #K.
    pub fn component_count(&self) -> usize {
        let c = self.crossing_count();
        let mut uf = UnionFind::new(4 * c);
        for h in 0..4 * c {
            uf.union(h, self.partner[h]);
            uf.union(h, 4 * (h / 4) + (h % 4 + 2) % 4);
        }
        uf.labels().1 + self.free_loops
    }

    /// Component index of every half-edge.
    pub fn component_of(&self) -> Vec<usize> {
        let c = self.crossing_count();
        let mut uf = UnionFind::new(4 * c);
        for h in 0..4 * c {
            uf.union(h, self.partner[h]);
            uf.union(h, 4 * (h / 4) + (h % 4 + 2) % 4);
        }
        uf.labels().0
    }

    pub fn faces(&self) -> Faces {
        let n = self.partner.len();
        let mut face_of = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        for h0 in 0..n {
            if face_of[h0] != usize::MAX {
                continue;
            }
            let f = sizes.len();
            let mut size = 0;
            let mut h = h0;
            while face_of[h] == usize::MAX {
                face_of[h] = f;
                size += 1;
                let g = self.partner[h];
                h = 4 * (g / 4) + (g % 4 + 1) % 4;
            }
            sizes.push(size);
        }
        if n == 0 {
            sizes = vec![0, 0];
        }
        Faces { face_of, sizes }
    }

    /// Crossings at the corners of each face, one entry per corner.
    pub fn face_crossings(&self, faces: &Faces) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); faces.count()];
        for (h, &f) in faces.face_of.iter().enumerate() {
            out[f].push(h / 4);
        }
        out
    }

    /// Maximal bigon chains, the twist number and twist-reducedness.
    pub fn twist_regions(&self) -> TwistAnalysis {
        let c = self.crossing_count();
        let faces = self.faces();
        let mut chains = UnionFind::new(c);
        // corner parity of a bigon decides which smoothing is short
        let mut parities: Vec<[bool; 2]> = vec![[false; 2]; c];
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); faces.count()];
        for (h, &f) in faces.face_of.iter().enumerate() {
            if faces.sizes[f] == 2 {
                members[f].push(h);
            }
        }
        for darts in members.iter().filter(|m| m.len() == 2) {
            let (x, y) = (darts[0] / 4, darts[1] / 4);
            if x == y {
                continue;
            }
            chains.union(x, y);
            for &h in darts {
                // dart (x, p) closes the corner between slots p-1 and p
                parities[h / 4][(h % 4 + 3) % 2] = true;
            }
        }
        let (region_of, count) = chains.labels();
        let mut regions: Vec<TwistRegion> =
            (0..count).map(|_| TwistRegion { crossings: Vec::new(), short: Vec::new() }).collect();
        let mut seen = vec![[false; 2]; count];
        for x in 0..c {
            regions[region_of[x]].crossings.push(x);
            for par in 0..2 {
                seen[region_of[x]][par] |= parities[x][par];
            }
        }
        for (r, par) in regions.iter_mut().zip(&seen) {
            // A merges the odd corners, so bigons on odd corners open up
            if r.crossings.len() > 1 {
                if par[1] {
                    r.short.push(Smoothing::A);
                }
                if par[0] {
                    r.short.push(Smoothing::B);
                }
            }
        }

        let mut twist = UnionFind::new(c);
        let mut by_pair: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for x in 0..c {
            for q in 0..2 {
                let (f, g) = (faces.corner(x, q), faces.corner(x, q + 2));
                if f == g {
                    continue;
                }
                let key = (f.min(g), f.max(g));
                match by_pair.get(&key) {
                    Some(&y) => {
                        twist.union(x, y);
                    }
                    None => {
                        by_pair.insert(key, x);
                    }
                }
            }
        }
        let twist_classes = twist.labels().1;
        TwistAnalysis { twist_number: count, twist_reduced: twist_classes == count, regions, region_of }
    }

    /// Prime and nugatory tests via faces: two distinct arcs bounding the
    /// same pair of faces give a circle meeting the diagram twice with
    /// crossings on both sides.
    pub fn primeness(&self) -> Primeness {
        let c = self.crossing_count();
        let faces = self.faces();
        let has_nugatory =
            (0..c).any(|x| faces.corner(x, 0) == faces.corner(x, 2) || faces.corner(x, 1) == faces.corner(x, 3));
        let mut seen = std::collections::HashSet::new();
        let mut is_prime = true;
        for h in 0..4 * c {
            let g = self.partner[h];
            if h < g {
                let (f1, f2) = (faces.face_of[h], faces.face_of[g]);
                if !seen.insert((f1.min(f2), f1.max(f2))) {
                    is_prime = false;
                    break;
                }
            }
        }
        Primeness { is_prime, has_nugatory }
    }

    /// Arcs as pairs of half-edges `(h, partner(h))` with `h < partner(h)`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len()).filter(|&h| h < self.partner[h]).map(|h| (h, self.partner[h])).collect()
    }

    /// Removes crossing `x` by smoothing it.
    pub fn smooth_crossing(&self, x: usize, s: Smoothing) -> Result<Self> {
        let c = self.crossing_count();
        let mut w = Wiring::new();
        let mut point = vec![0; 4 * c];
        for y in 0..c {
            if y == x {
                for k in 0..4 {
                    point[4 * y + k] = w.point();
                }
            } else {
                let ends = w.crossing();
                point[4 * y..4 * y + 4].copy_from_slice(&ends);
            }
        }
        for h in 0..4 * c {
            let g = self.partner[h];
            if h < g {
                w.wire(point[h], point[g]);
            }
        }
        for k in 0..4 {
            let m = s.mate(k);
            if k < m {
                w.wire(point[4 * x + k], point[4 * x + m]);
            }
        }
        w.assemble(Orientation::Free)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::{parse_braid, parse_pd};

    fn braid(s: &str) -> LinkDiagram {
        LinkDiagram::braid_closure(&parse_braid(s).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_pd() {
        let d = LinkDiagram::from_pd(&parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.faces().count(), 5);
        assert_eq!(d.writhe(), -3);
    }

    #[test]
    fn kink() {
        let d = LinkDiagram::from_pd(&parse_pd("X(1,2,2,1)").unwrap()).unwrap();
        assert_eq!(d.component_count(), 1);
        let p = d.primeness();
        assert!(p.has_nugatory);
        assert!(p.is_prime);
    }

    #[test]
    fn braid_examples() {
        let t = braid("B2: s1^3");
        assert_eq!((t.crossing_count(), t.component_count()), (3, 1));
        assert_eq!(t.twist_regions().twist_number, 1);
        assert_eq!(t.writhe(), -3);
        assert_eq!(braid("B2: s1^4").component_count(), 2);
        let d = braid("B3: s1^3 s2^3");
        assert_eq!((d.crossing_count(), d.component_count()), (6, 1));
        assert_eq!(d.twist_regions().twist_number, 2);
    }

    #[test]
    fn disconnected_braid_rejected() {
        assert_eq!(LinkDiagram::braid_closure(&parse_braid("B3: s1^3").unwrap()), Err(Error::Disconnected));
    }

    #[test]
    fn mirror_involution() {
        let d = braid("B3: s1^3 s2^-2 s1 s2^-1");
        assert_eq!(d.mirror().mirror(), d);
        assert_eq!(braid("B2: s1^3").mirror(), braid("B2: s1^-3"));
    }

    #[test]
    fn cable_counts() {
        let t = braid("B2: s1^3");
        assert_eq!(t.cable(1).unwrap(), t);
        let t2 = t.cable(2).unwrap();
        assert_eq!(t2.crossing_count(), 12);
        assert_eq!(t2.component_count(), 2);
        assert_eq!(t.cable(3).unwrap().component_count(), 3);
        assert_eq!(t.cable(0), Err(Error::InvalidCableCount(0)));
    }

    #[test]
    fn pd_round_trip() {
        let d = braid("B3: s1^2 s2^-3 s1^-1 s2");
        assert_eq!(LinkDiagram::from_pd(&d.to_pd()).unwrap(), d);
    }

    #[test]
    fn smoothing_mates() {
        for s in [Smoothing::A, Smoothing::B] {
            for k in 0..4 {
                assert_eq!(s.mate(s.mate(k)), k);
                assert_ne!(s.mate(k), k);
                assert_ne!(s.mate(k), (k + 2) % 4);
            }
        }
        assert_eq!(Smoothing::B.mate(0), 3);
        assert_eq!(Smoothing::B.mate(1), 2);
    }
}
