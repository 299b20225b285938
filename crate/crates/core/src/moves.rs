//! Reidemeister moves and braid closures for producing related diagrams,
//! plus the bundled corpus of small knots and links.

use rand::Rng;

use crate::diagram::{parse_link_line, validate, DiagramError, LinkDiagram};
use crate::planar::{Planar, Xing};

/// Shape of an inserted first-Reidemeister kink, named by its sign and by
/// whether the strand first passes under or over itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kink {
    PosUnderFirst,
    NegUnderFirst,
    NegOverFirst,
    PosOverFirst,
}

impl Kink {
    pub const ALL: [Kink; 4] = [Kink::PosUnderFirst, Kink::NegUnderFirst, Kink::NegOverFirst, Kink::PosOverFirst];

    pub fn sign(self) -> i32 {
        match self {
            Kink::PosUnderFirst | Kink::PosOverFirst => 1,
            Kink::NegUnderFirst | Kink::NegOverFirst => -1,
        }
    }

    /// Crossing for the strand `e1 → (loop l) → e2`.
    fn crossing(self, e1: u32, l: u32, e2: u32) -> Xing {
        match self {
            Kink::PosUnderFirst => Xing { s: [e1, e2, l, l], positive: true },
            Kink::NegUnderFirst => Xing { s: [e1, l, l, e2], positive: false },
            Kink::NegOverFirst => Xing { s: [l, e1, e2, l], positive: false },
            Kink::PosOverFirst => Xing { s: [l, l, e2, e1], positive: true },
        }
    }
}

/// Inserts a kink on arc `label`. On a crossingless diagram the kink is
/// drawn on one of the free unknots.
pub fn add_kink(d: &LinkDiagram, label: u32, kink: Kink) -> Result<LinkDiagram, DiagramError> {
    let mut p = d.to_planar();
    if p.xs.is_empty() {
        if p.loops == 0 {
            return Err(DiagramError::InvalidSelection("no strand to kink".into()));
        }
        p.loops -= 1;
        p.xs.push(kink.crossing(1, 2, 1));
        return p.to_diagram();
    }
    let max = p.max_label();
    if label == 0 || label > max {
        return Err(DiagramError::LabelOutOfRange { label, max });
    }
    let (l, e2) = (max + 1, max + 2);
    // The end of `label` where it enters a crossing now carries `e2`.
    let (xi, slot) =
        p.xs.iter()
            .enumerate()
            .flat_map(|(i, x)| (0..4).map(move |s| (i, s, x)))
            .find(|&(_, s, x)| x.s[s] == label && x.is_incoming(s))
            .map(|(i, s, _)| (i, s))
            .expect("every arc enters some crossing");
    p.xs[xi].s[slot] = e2;
    p.xs.push(kink.crossing(label, l, e2));
    p.to_diagram()
}

/// Closure of a braid on `strands` strands; letter `±i` is `σ_i^{±1}`.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<LinkDiagram, DiagramError> {
    let mut next = 1u32;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let init: Vec<u32> = (0..strands).map(|_| fresh()).collect();
    let mut cur = init.clone();
    let mut xs = Vec::new();
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(DiagramError::InvalidSelection(format!("generator {g} on {strands} strands")));
        }
        let (l, r) = (cur[i - 1], cur[i]);
        let (nw, ne) = (fresh(), fresh());
        xs.push(if g > 0 {
            Xing { s: [r, ne, nw, l], positive: true }
        } else {
            Xing { s: [l, r, ne, nw], positive: false }
        });
        cur[i - 1] = nw;
        cur[i] = ne;
    }
    let mut loops = 0;
    for p in 0..strands {
        if cur[p] == init[p] {
            loops += 1;
            continue;
        }
        for x in &mut xs {
            for s in &mut x.s {
                if *s == cur[p] {
                    *s = init[p];
                }
            }
        }
    }
    Planar { xs, loops }.to_diagram()
}

/// Random braid word of `len` letters on `strands ≥ 2` strands.
pub fn random_braid<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

/// Pair of braid words whose closures differ by one Reidemeister move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidPair {
    pub strands: usize,
    pub before: Vec<i32>,
    pub after: Vec<i32>,
}

/// Inserts `σ_i^{ε} σ_i^{−ε}` at `pos`: a second Reidemeister move.
pub fn r2_insert(word: &[i32], pos: usize, letter: i32) -> Vec<i32> {
    let mut w = word.to_vec();
    w.splice(pos..pos, [letter, -letter]);
    w
}

/// Replaces `σ_i σ_{i+1} σ_i` by `σ_{i+1} σ_i σ_{i+1}` (and the mirrored
/// variants) at `pos` when possible: a third Reidemeister move.
pub fn r3_slide(word: &[i32], pos: usize) -> Option<Vec<i32>> {
    let t = word.get(pos..pos + 3)?;
    let (a, b, c) = (t[0], t[1], t[2]);
    let same_sign = a.signum() == b.signum() && b.signum() == c.signum();
    if !(same_sign && a == c && (a.abs() - b.abs()).abs() == 1) {
        return None;
    }
    let mut w = word.to_vec();
    w.splice(pos..pos + 3, [b, a, b]);
    Some(w)
}

/// Markov stabilization `w ↦ w σ_n^{±1}` on `n + 1` strands: a first
/// Reidemeister move on the closure.
pub fn stabilize(strands: usize, word: &[i32], positive: bool) -> (usize, Vec<i32>) {
    let mut w = word.to_vec();
    let n = strands as i32;
    w.push(if positive { n } else { -n });
    (strands + 1, w)
}

/// Random braid with an R2 or R3 move applied; R3 words are seeded with a
/// triple so that a slide is always available.
pub fn random_r2_pair<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidPair {
    let before = random_braid(rng, strands, len);
    let pos = rng.gen_range(0..=before.len());
    let letter = random_braid(rng, strands, 1)[0];
    BraidPair { strands, after: r2_insert(&before, pos, letter), before }
}

pub fn random_r3_pair<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidPair {
    assert!(strands >= 3, "a third move needs three strands");
    let mut before = random_braid(rng, strands, len);
    let i = rng.gen_range(1..strands as i32 - 1);
    let (a, b) = if rng.gen_bool(0.5) { (i, i + 1) } else { (i + 1, i) };
    let s = if rng.gen_bool(0.5) { 1 } else { -1 };
    let pos = rng.gen_range(0..=before.len());
    before.splice(pos..pos, [s * a, s * b, s * a]);
    let after = r3_slide(&before, pos).expect("seeded triple");
    BraidPair { strands, before, after }
}

const CORPUS: &str = include_str!("../data/corpus.pd");

/// Bundled knots and links as `(name, diagram)`; the name is the trailing
/// comment of each line.
pub fn corpus() -> Vec<(String, LinkDiagram)> {
    CORPUS
        .lines()
        .filter_map(|line| {
            let spec = parse_link_line(line).expect("corpus lines parse")?;
            let name = line.split_once('#').map_or("", |(_, c)| c).trim().to_string();
            let d = validate(&spec.code, spec.extra_unknots).expect("corpus lines validate");
            Some((name, d))
        })
        .collect()
}

pub fn corpus_entry(name: &str) -> Option<LinkDiagram> {
    corpus().into_iter().find(|(n, _)| n == name).map(|(_, d)| d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{a_pow, state_sum};

    #[test]
    fn kinks_have_their_sign() {
        let t = LinkDiagram::parse("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)", 0).unwrap();
        for k in Kink::ALL {
            for label in 1..=6 {
                let d = add_kink(&t, label, k).unwrap();
                assert_eq!(d.writhe(), t.writhe() + k.sign());
                assert_eq!(d.num_components(), 1);
            }
            let u = add_kink(&LinkDiagram::unknot(), 1, k).unwrap();
            assert_eq!((u.num_crossings(), u.writhe(), u.extra_unknots()), (1, k.sign(), 0));
        }
    }

    #[test]
    fn kink_factor() {
        let t = LinkDiagram::parse("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)", 0).unwrap();
        let base = state_sum(&t).into_poly().unwrap();
        for k in Kink::ALL {
            let d = add_kink(&t, 3, k).unwrap();
            let factor = -a_pow(3 * k.sign());
            assert_eq!(state_sum(&d).into_poly().unwrap(), &factor * &base);
        }
    }

    #[test]
    fn closures() {
        let t = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!((t.num_crossings(), t.num_components(), t.writhe()), (3, 1, 3));
        let h = braid_closure(2, &[1, 1]).unwrap();
        assert_eq!(h.num_components(), 2);
        let u = braid_closure(3, &[1]).unwrap();
        assert_eq!((u.num_components(), u.extra_unknots()), (2, 1));
        assert!(braid_closure(2, &[2]).is_err());
    }

    #[test]
    fn slides() {
        assert_eq!(r3_slide(&[1, 2, 1], 0), Some(vec![2, 1, 2]));
        assert_eq!(r3_slide(&[-2, -1, -2], 0), Some(vec![-1, -2, -1]));
        assert_eq!(r3_slide(&[1, -2, 1], 0), None);
        assert_eq!(r2_insert(&[1], 1, -2), vec![1, -2, 2]);
    }

    #[test]
    fn corpus_loads() {
        let c = corpus();
        assert!(c.len() >= 15);
        assert!(corpus_entry("3_1").is_some());
    }
}
