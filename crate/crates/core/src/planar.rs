//! Mutable working form of a diagram used by the skein algorithms.
//!
//! Arc labels are arbitrary; slot 0 of every crossing is the incoming
//! under-arc and slot 2 the outgoing one. Smoothing removes a crossing and
//! merges the arcs it joins, counting closed loops that appear.

use std::collections::{HashMap, VecDeque};

use crate::diagram::{DiagramError, LinkDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Xing {
    pub s: [u32; 4],
    /// Over-strand runs slot 3 → slot 1.
    pub positive: bool,
}

impl Xing {
    pub fn over_in(&self) -> usize {
        if self.positive {
            3
        } else {
            1
        }
    }

    pub fn over_out(&self) -> usize {
        if self.positive {
            1
        } else {
            3
        }
    }

    pub fn is_incoming(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in()
    }

    /// Over and under exchanged; the new under-strand enters at slot 0.
    pub fn switched(&self) -> Xing {
        let [a, b, c, d] = self.s;
        if self.positive {
            Xing { s: [d, a, b, c], positive: false }
        } else {
            Xing { s: [b, c, d, a], positive: true }
        }
    }
}

pub(crate) const A_PAIRS: [(usize, usize); 2] = [(0, 1), (2, 3)];
pub(crate) const B_PAIRS: [(usize, usize); 2] = [(0, 3), (1, 2)];

#[derive(Clone, Debug, Default)]
pub(crate) struct Planar {
    pub xs: Vec<Xing>,
    /// Crossing-free circles.
    pub loops: usize,
}

impl Planar {
    /// Removes crossing `i`, joining the slot pairs; returns the number of
    /// closed loops created.
    pub fn remove_joining(&mut self, i: usize, pairs: [(usize, usize); 2]) -> usize {
        let x = self.xs.remove(i);
        let mut l = x.s;
        let mut made = 0;
        for (p, q) in pairs {
            let (keep, gone) = (l[p], l[q]);
            if keep == gone {
                made += 1;
                continue;
            }
            for y in &mut self.xs {
                for s in &mut y.s {
                    if *s == gone {
                        *s = keep;
                    }
                }
            }
            for s in &mut l {
                if *s == gone {
                    *s = keep;
                }
            }
        }
        self.loops += made;
        made
    }

    /// Orientation-respecting smoothing: incoming under joins outgoing over.
    pub fn smooth_oriented(&mut self, i: usize) -> usize {
        if self.xs[i].positive {
            self.remove_joining(i, A_PAIRS)
        } else {
            self.remove_joining(i, B_PAIRS)
        }
    }

    pub fn switch(&mut self, i: usize) {
        self.xs[i] = self.xs[i].switched();
    }

    fn occurrences(&self) -> HashMap<u32, [(usize, usize); 2]> {
        let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (x, c) in self.xs.iter().enumerate() {
            for (s, &l) in c.s.iter().enumerate() {
                occ.entry(l).or_default().push((x, s));
            }
        }
        occ.into_iter()
            .map(|(l, v)| {
                assert_eq!(v.len(), 2, "arc {l} must have two ends");
                (l, [v[0], v[1]])
            })
            .collect()
    }

    /// Successor arc along the orientation, and the crossing/slot where each
    /// arc ends.
    fn orientation(&self) -> (HashMap<u32, u32>, HashMap<u32, (usize, usize)>) {
        let mut next = HashMap::new();
        let mut end = HashMap::new();
        for (x, c) in self.xs.iter().enumerate() {
            next.insert(c.s[0], c.s[2]);
            next.insert(c.s[c.over_in()], c.s[c.over_out()]);
            end.insert(c.s[0], (x, 0));
            end.insert(c.s[c.over_in()], (x, c.over_in()));
        }
        (next, end)
    }

    /// Oriented components as arc sequences, ordered by smallest label and
    /// each starting from its smallest label.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let (next, _) = self.orientation();
        let mut labels: Vec<u32> = next.keys().copied().collect();
        labels.sort_unstable();
        let mut seen = std::collections::HashSet::new();
        let mut comps = Vec::new();
        for l in labels {
            if seen.contains(&l) {
                continue;
            }
            let mut comp = vec![l];
            seen.insert(l);
            let mut cur = next[&l];
            while cur != l {
                seen.insert(cur);
                comp.push(cur);
                cur = next[&cur];
            }
            comps.push(comp);
        }
        comps
    }

    /// First crossing met on its under-strand when traversing components from
    /// their smallest labels; `None` for a descending diagram.
    pub fn first_non_descending(&self) -> Option<usize> {
        let (next, end) = self.orientation();
        let mut seen = vec![false; self.xs.len()];
        for comp in self.components() {
            let start = comp[0];
            let mut cur = start;
            loop {
                let (x, s) = end[&cur];
                if !seen[x] {
                    if s == 0 {
                        return Some(x);
                    }
                    seen[x] = true;
                }
                cur = next[&cur];
                if cur == start {
                    break;
                }
            }
        }
        None
    }

    /// Faces as cycles of darts `(crossing, slot)` meaning "leave the crossing
    /// through this slot"; each face lies to the left of its darts.
    pub fn faces(&self) -> Vec<Vec<(usize, usize)>> {
        let occ = self.occurrences();
        let mut used = vec![[false; 4]; self.xs.len()];
        let mut faces = Vec::new();
        for x0 in 0..self.xs.len() {
            for s0 in 0..4 {
                if used[x0][s0] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut x, mut s) = (x0, s0);
                while !used[x][s] {
                    used[x][s] = true;
                    face.push((x, s));
                    let o = occ[&self.xs[x].s[s]];
                    let (nx, ns) = if o[0] == (x, s) { o[1] } else { o[0] };
                    x = nx;
                    s = (ns + 3) % 4;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Relabels arcs 1..2n consecutively along components and validates.
    pub fn to_diagram(&self) -> Result<LinkDiagram, DiagramError> {
        let mut relabel = HashMap::new();
        let mut next_label = 1u32;
        for comp in self.components() {
            for l in comp {
                relabel.insert(l, next_label);
                next_label += 1;
            }
        }
        let crossings = self.xs.iter().map(|x| x.s.map(|l| relabel[&l])).collect();
        let hint: Vec<bool> = self.xs.iter().map(|x| x.positive).collect();
        LinkDiagram::from_parts(crossings, self.loops, Some(&hint))
    }

    pub fn max_label(&self) -> u32 {
        self.xs.iter().flat_map(|x| x.s).max().unwrap_or(0)
    }

    /// Relabeling-invariant key of the crossings (loops excluded). With
    /// `oriented`, crossing signs are part of the key; without, the two
    /// rotations of a tuple that fix its strands are identified.
    pub fn canonical_key(&self, oriented: bool) -> Vec<u32> {
        let n = self.xs.len();
        if n == 0 {
            return Vec::new();
        }
        let occ = self.occurrences();
        let rotations: &[usize] = if oriented { &[0] } else { &[0, 2] };
        let mut best: Option<Vec<u32>> = None;
        for start in 0..n {
            for &rot in rotations {
                let code = self.encode_from(start, rot, oriented, &occ);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
        best.unwrap_or_default()
    }

    fn encode_from(
        &self,
        start: usize,
        rot: usize,
        oriented: bool,
        occ: &HashMap<u32, [(usize, usize); 2]>,
    ) -> Vec<u32> {
        let n = self.xs.len();
        let mut rotation: Vec<Option<usize>> = vec![None; n];
        let mut label: HashMap<u32, u32> = HashMap::with_capacity(2 * n);
        let mut code = Vec::with_capacity(n * 5 + 1);
        let mut queue = VecDeque::new();
        rotation[start] = Some(rot);
        queue.push_back(start);
        let mut next_unvisited = 0;
        loop {
            let Some(x) = queue.pop_front() else {
                // Next connected piece: first unvisited crossing in list order.
                while next_unvisited < n && rotation[next_unvisited].is_some() {
                    next_unvisited += 1;
                }
                if next_unvisited == n {
                    break;
                }
                rotation[next_unvisited] = Some(0);
                queue.push_back(next_unvisited);
                code.push(u32::MAX);
                continue;
            };
            let r = rotation[x].expect("queued crossings have a rotation");
            for k in 0..4 {
                let slot = (r + k) % 4;
                let arc = self.xs[x].s[slot];
                let fresh = label.len() as u32 + 1;
                let id = *label.entry(arc).or_insert(fresh);
                code.push(id);
                let o = occ[&arc];
                let (y, t) = if o[0] == (x, slot) { o[1] } else { o[0] };
                if rotation[y].is_none() {
                    rotation[y] = Some(if oriented { 0 } else { t & !1 });
                    queue.push_back(y);
                }
            }
            if oriented {
                code.push(self.xs[x].positive as u32);
            }
        }
        code
    }
}
