//! Planar-diagram (PD) codes: parsing, validation and basic interrogation.
//!
//! A crossing `X(a,b,c,d)` lists its four edge labels counterclockwise,
//! starting from the incoming under-edge `a`; the under-strand leaves on `c`.
//! Edge labels run consecutively along each oriented component, so the
//! orientation (and therefore every crossing sign) is recoverable from the
//! labels. The over-strand of a positive crossing runs `d → b`.

use std::fmt;

use thiserror::Error;

use crate::planar::{Planar, Xing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Expected(&'static str),
    BadLabel(String),
    Arity(usize),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Expected(what) => write!(f, "expected {what}"),
            ParseErrorKind::BadLabel(s) => write!(f, "`{s}` is not a positive integer label"),
            ParseErrorKind::Arity(k) => write!(f, "crossing has {k} labels, expected 4"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: {kind}", pos + 1)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("edge label {label} outside 1..={max}")]
    LabelOutOfRange { label: u32, max: u32 },
    #[error("edge label {label} appears {count} times, expected 2")]
    LabelMultiplicity { label: u32, count: usize },
    #[error("component {component} is traversed in both directions by its crossings")]
    InconsistentOrientation { component: usize },
    #[error("edge labels of component {component} are not consecutive along the strand")]
    InconsistentLabeling { component: usize },
    #[error("sign of crossing {crossing} cannot be determined from the labels")]
    UndecidableSign { crossing: usize },
    #[error("diagram is not planar ({faces} faces, expected {expected})")]
    NonPlanar { faces: usize, expected: usize },
    #[error("crossing index {index} out of range for {len} crossings")]
    NoSuchCrossing { index: usize, len: usize },
    #[error("invalid crossing selection: {0}")]
    InvalidSelection(String),
}

/// Syntactically well-formed PD code; no semantic checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PdCode {
    pub crossings: Vec<[u32; 4]>,
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "X({a},{b},{c},{d})")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(ch) = self.src[self.pos..].chars().next() {
            if ch.is_whitespace() {
                self.pos += ch.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, ch: char, what: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            Ok(())
        } else {
            Err(ParseError { pos: self.pos, kind: ParseErrorKind::Expected(what) })
        }
    }

    fn label(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let tok: String = self.src[start..]
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '-' || *c == '+' || *c == '.')
            .collect();
        if tok.is_empty() {
            return Err(ParseError { pos: start, kind: ParseErrorKind::Expected("an edge label") });
        }
        self.pos += tok.len();
        match tok.parse::<u32>() {
            Ok(v) if v > 0 && tok.chars().all(|c| c.is_ascii_digit()) => Ok(v),
            _ => Err(ParseError { pos: start, kind: ParseErrorKind::BadLabel(tok) }),
        }
    }
}

/// Parses `X(a,b,c,d),X(...)...`; whitespace is ignored and the empty
/// string is the empty code.
pub fn parse_pd(text: &str) -> Result<PdCode, ParseError> {
    let mut cur = Cursor { src: text, pos: 0 };
    let mut crossings = Vec::new();
    if cur.peek().is_none() {
        return Ok(PdCode { crossings });
    }
    loop {
        let entry_start = {
            cur.skip_ws();
            cur.pos
        };
        cur.expect('X', "`X(`")?;
        cur.expect('(', "`(`")?;
        let mut labels = vec![cur.label()?];
        while cur.peek() == Some(',') {
            cur.pos += 1;
            labels.push(cur.label()?);
        }
        cur.expect(')', "`,` or `)`")?;
        if labels.len() != 4 {
            return Err(ParseError { pos: entry_start, kind: ParseErrorKind::Arity(labels.len()) });
        }
        crossings.push([labels[0], labels[1], labels[2], labels[3]]);
        match cur.peek() {
            None => break,
            Some(',') => cur.pos += 1,
            Some(_) => return Err(ParseError { pos: cur.pos, kind: ParseErrorKind::Expected("`,` or end of input") }),
        }
    }
    Ok(PdCode { crossings })
}

/// One line of a link file: `[U<k>;] <pd>`, with `#` starting a comment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkSpec {
    pub code: PdCode,
    pub extra_unknots: usize,
}

/// Returns `Ok(None)` for blank and comment-only lines.
pub fn parse_link_line(line: &str) -> Result<Option<LinkSpec>, ParseError> {
    let body = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let trimmed_start = body.len() - body.trim_start().len();
    let body_t = body.trim();
    if body_t.is_empty() {
        return Ok(None);
    }
    let mut extra = 0;
    let mut pd_part = body_t;
    let mut offset = trimmed_start;
    if let Some(rest) = body_t.strip_prefix('U') {
        let semi = rest.find(';').ok_or(ParseError {
            pos: trimmed_start + 1,
            kind: ParseErrorKind::Expected("`;` after the unknot count"),
        })?;
        let count = rest[..semi].trim();
        extra = count
            .parse::<usize>()
            .map_err(|_| ParseError { pos: trimmed_start + 1, kind: ParseErrorKind::BadLabel(count.to_string()) })?;
        pd_part = &rest[semi + 1..];
        offset = trimmed_start + 2 + semi;
    }
    let code = parse_pd(pd_part).map_err(|e| ParseError { pos: e.pos + offset, ..e })?;
    Ok(Some(LinkSpec { code, extra_unknots: extra }))
}

/// A validated oriented link diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    positive: Vec<bool>,
    components: Vec<Vec<u32>>,
    extra_unknots: usize,
}

/// Orientation is part of [`LinkDiagram`]; the alias names the role.
pub type OrientedDiagram = LinkDiagram;

/// Checks every [`LinkDiagram`] invariant, traces components and derives
/// crossing signs. `extra_unknots` adds crossing-free circles.
pub fn validate(code: &PdCode, extra_unknots: usize) -> Result<LinkDiagram, DiagramError> {
    LinkDiagram::from_parts(code.crossings.clone(), extra_unknots, None)
}

impl LinkDiagram {
    pub fn parse(text: &str, extra_unknots: usize) -> Result<Self, DiagramError> {
        validate(&parse_pd(text)?, extra_unknots)
    }

    /// Parses one link-file line; blank lines yield `Ok(None)`.
    pub fn from_line(line: &str) -> Result<Option<Self>, DiagramError> {
        match parse_link_line(line)? {
            Some(spec) => Ok(Some(validate(&spec.code, spec.extra_unknots)?)),
            None => Ok(None),
        }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn unlink(n: usize) -> Self {
        LinkDiagram { crossings: vec![], positive: vec![], components: vec![], extra_unknots: n }
    }

    /// Validation with optional explicit over-strand directions
    /// (`positive[i]` means the over-strand of crossing `i` runs d → b).
    /// The hint settles orientation of components that never pass under.
    pub(crate) fn from_parts(
        crossings: Vec<[u32; 4]>,
        extra_unknots: usize,
        hint: Option<&[bool]>,
    ) -> Result<Self, DiagramError> {
        let n = crossings.len();
        let max = 2 * n as u32;
        let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 2 * n + 1];
        for (x, tuple) in crossings.iter().enumerate() {
            for (s, &l) in tuple.iter().enumerate() {
                if l == 0 || l > max {
                    return Err(DiagramError::LabelOutOfRange { label: l, max });
                }
                occ[l as usize].push((x, s));
            }
        }
        for (l, o) in occ.iter().enumerate().skip(1) {
            if o.len() != 2 {
                return Err(DiagramError::LabelMultiplicity { label: l as u32, count: o.len() });
            }
        }
        let other = |l: u32, here: (usize, usize)| -> (usize, usize) {
            let o = &occ[l as usize];
            if o[0] == here {
                o[1]
            } else {
                o[0]
            }
        };

        // passes[x][k]: strand k (0 = under, 1 = over) of crossing x visited
        let mut visited = vec![[false; 2]; n];
        let mut positive = vec![false; n];
        let mut components = Vec::new();
        for x0 in 0..n {
            for k0 in 0..2 {
                if visited[x0][k0] {
                    continue;
                }
                // Walk entering (x0, k0) and leaving through the opposite slot.
                let mut arcs = Vec::new();
                let mut entries = Vec::new();
                let (mut x, mut s) = (x0, k0);
                loop {
                    visited[x][s % 2] = true;
                    entries.push((x, s));
                    let out = (s + 2) % 4;
                    let l = crossings[x][out];
                    arcs.push(l);
                    let (nx, ns) = other(l, (x, out));
                    x = nx;
                    s = ns;
                    if (x, s) == (x0, k0) {
                        break;
                    }
                }
                let comp = components.len();
                let mut forward_votes = 0;
                let mut backward_votes = 0;
                for &(x, s) in &entries {
                    match s {
                        0 => forward_votes += 1,
                        2 => backward_votes += 1,
                        _ => {
                            if let Some(h) = hint {
                                let over_in = if h[x] { 3 } else { 1 };
                                if s == over_in {
                                    forward_votes += 1;
                                } else {
                                    backward_votes += 1;
                                }
                            }
                        }
                    }
                }
                if forward_votes > 0 && backward_votes > 0 {
                    return Err(DiagramError::InconsistentOrientation { component: comp });
                }
                let reversed: Vec<u32> = {
                    // Walking backwards visits the same arcs in reverse order.
                    let mut r = arcs.clone();
                    r.reverse();
                    r
                };
                let forward = if forward_votes > 0 {
                    true
                } else if backward_votes > 0 {
                    false
                } else {
                    let f = consecutive(&arcs);
                    let b = consecutive(&reversed);
                    match (f, b) {
                        (true, true) => return Err(DiagramError::UndecidableSign { crossing: entries[0].0 }),
                        (true, false) => true,
                        (false, true) => false,
                        (false, false) => return Err(DiagramError::InconsistentLabeling { component: comp }),
                    }
                };
                let seq = if forward { arcs } else { reversed };
                if !consecutive(&seq) {
                    return Err(DiagramError::InconsistentLabeling { component: comp });
                }
                for &(x, s) in &entries {
                    if s % 2 == 1 {
                        // Entering slot along the orientation.
                        let entry = if forward { s } else { (s + 2) % 4 };
                        positive[x] = entry == 3;
                    }
                }
                if let Some(h) = hint {
                    debug_assert!(entries.iter().all(|&(x, s)| s % 2 == 0 || positive[x] == h[x]));
                }
                let min_pos = seq.iter().enumerate().min_by_key(|(_, &l)| l).map(|(i, _)| i).unwrap_or(0);
                let mut seq = seq;
                seq.rotate_left(min_pos);
                components.push(seq);
            }
        }
        components.sort_by_key(|c| c[0]);

        let d = LinkDiagram { crossings, positive, components, extra_unknots };
        d.check_planar()?;
        Ok(d)
    }

    fn check_planar(&self) -> Result<(), DiagramError> {
        let n = self.crossings.len();
        if n == 0 {
            return Ok(());
        }
        let p = self.to_planar();
        let faces = p.faces().len();
        // Connected pieces of the underlying 4-valent graph.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let mut first_seen: Vec<Option<usize>> = vec![None; 2 * n + 1];
        for (x, t) in self.crossings.iter().enumerate() {
            for &l in t {
                match first_seen[l as usize] {
                    None => first_seen[l as usize] = Some(x),
                    Some(y) => {
                        let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                        parent[a] = b;
                    }
                }
            }
        }
        let pieces = (0..n).filter(|&x| find(&mut parent, x) == x).count();
        let expected = n + 2 * pieces;
        if faces != expected {
            return Err(DiagramError::NonPlanar { faces, expected });
        }
        Ok(())
    }

    pub(crate) fn to_planar(&self) -> Planar {
        Planar {
            xs: self.crossings.iter().zip(&self.positive).map(|(&s, &positive)| Xing { s, positive }).collect(),
            loops: self.extra_unknots,
        }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn extra_unknots(&self) -> usize {
        self.extra_unknots
    }

    /// Components that pass through at least one crossing, each as its edge
    /// labels in orientation order starting from the smallest label.
    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    /// All components, crossing-free circles included.
    pub fn num_components(&self) -> usize {
        self.components.len() + self.extra_unknots
    }

    pub fn is_empty(&self) -> bool {
        self.num_components() == 0
    }

    pub fn sign(&self, crossing: usize) -> i32 {
        if self.positive[crossing] {
            1
        } else {
            -1
        }
    }

    pub fn signs(&self) -> Vec<i32> {
        (0..self.crossings.len()).map(|i| self.sign(i)).collect()
    }

    /// Tait number: the sum of crossing signs.
    pub fn writhe(&self) -> i32 {
        self.signs().iter().sum()
    }

    pub fn component_of_label(&self, label: u32) -> Option<usize> {
        self.components.iter().position(|c| c.contains(&label))
    }

    /// Components of the under- and over-strand of a crossing.
    pub fn crossing_components(&self, crossing: usize) -> (usize, usize) {
        let t = self.crossings[crossing];
        (self.component_of_label(t[0]).expect("validated"), self.component_of_label(t[1]).expect("validated"))
    }

    /// Symmetric matrix of pairwise linking numbers; crossing-free circles
    /// get zero rows after the traced components.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let k = self.num_components();
        let mut twice = vec![vec![0i64; k]; k];
        for i in 0..self.crossings.len() {
            let (u, o) = self.crossing_components(i);
            if u != o {
                twice[u][o] += self.sign(i) as i64;
                twice[o][u] += self.sign(i) as i64;
            }
        }
        twice.iter().map(|row| row.iter().map(|x| x / 2).collect()).collect()
    }

    /// The diagram with crossing `i` changed (over and under exchanged).
    pub fn switch_crossing(&self, i: usize) -> Result<Self, DiagramError> {
        if i >= self.crossings.len() {
            return Err(DiagramError::NoSuchCrossing { index: i, len: self.crossings.len() });
        }
        let mut d = self.clone();
        let x = Xing { s: d.crossings[i], positive: d.positive[i] }.switched();
        d.crossings[i] = x.s;
        d.positive[i] = x.positive;
        Ok(d)
    }

    /// Mirror image: every crossing switched, every sign negated.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        for i in 0..d.crossings.len() {
            let x = Xing { s: d.crossings[i], positive: d.positive[i] }.switched();
            d.crossings[i] = x.s;
            d.positive[i] = x.positive;
        }
        d
    }

    /// Labels of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = 2 * self.crossings.len() as u32;
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|t| t.map(|l| l + shift)));
        let mut positive = self.positive.clone();
        positive.extend_from_slice(&other.positive);
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|c| c.iter().map(|l| l + shift).collect()));
        LinkDiagram { crossings, positive, components, extra_unknots: self.extra_unknots + other.extra_unknots }
    }

    /// Oriented smoothing of crossing `i`, relabelled consecutively.
    pub fn smooth_oriented(&self, i: usize) -> Result<Self, DiagramError> {
        if i >= self.crossings.len() {
            return Err(DiagramError::NoSuchCrossing { index: i, len: self.crossings.len() });
        }
        let mut p = self.to_planar();
        p.smooth_oriented(i);
        p.to_diagram()
    }

    pub fn pd_code(&self) -> PdCode {
        PdCode { crossings: self.crossings.clone() }
    }
}

impl fmt::Display for LinkDiagram {
    /// Renders in the link-file line format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.extra_unknots > 0 {
            write!(f, "U{};", self.extra_unknots)?;
        }
        write!(f, "{}", self.pd_code())
    }
}

/// `labels` is a rotation of `m, m+1, ..., m+len-1`.
fn consecutive(labels: &[u32]) -> bool {
    let Some(start) = labels.iter().enumerate().min_by_key(|(_, &l)| l).map(|(i, _)| i) else {
        return true;
    };
    let m = labels[start];
    (0..labels.len()).all(|k| labels[(start + k) % labels.len()] == m + k as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub const TREFOIL: &str = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";
    pub const HOPF: &str = "X(1,3,2,4),X(3,1,4,2)";
    pub const FIGURE_EIGHT: &str = "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)";

    #[test]
    fn parse_examples() {
        let c = parse_pd(TREFOIL).unwrap();
        assert_eq!(c.crossings.len(), 3);
        assert_eq!(c.crossings[1], [3, 6, 4, 1]);
        assert_eq!(parse_pd("").unwrap().crossings.len(), 0);
        assert_eq!(parse_pd("   ").unwrap().crossings.len(), 0);
        let spaced = parse_pd(" X( 1 ,4, 2,5) ,\n X(3,6,4,1), X(5,2,6,3) ").unwrap();
        assert_eq!(spaced, c);
        assert_eq!(c.to_string(), TREFOIL);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_pd("X(1,2,3)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Arity(3));
        assert_eq!(e.pos, 0);
        let e = parse_pd("X(1,2,3,4),X(1,a,3,4)").unwrap_err();
        assert_eq!(e.pos, 15);
        assert!(matches!(e.kind, ParseErrorKind::BadLabel(_)));
        let e = parse_pd("X(1,2,3,4) X(1,2,3,4)").unwrap_err();
        assert_eq!(e.pos, 11);
        assert!(parse_pd("X(0,1,2,3)").is_err());
        assert!(parse_pd("X(-1,1,2,3)").is_err());
        assert!(parse_pd("X(1,2,3,4").is_err());
    }

    #[test]
    fn link_lines() {
        assert_eq!(parse_link_line("  # comment").unwrap(), None);
        assert_eq!(parse_link_line("").unwrap(), None);
        let s = parse_link_line("U2;").unwrap().unwrap();
        assert_eq!((s.extra_unknots, s.code.crossings.len()), (2, 0));
        let s = parse_link_line("U1; X(1,3,2,4),X(3,1,4,2) # hopf + circle").unwrap().unwrap();
        assert_eq!((s.extra_unknots, s.code.crossings.len()), (1, 2));
        let e = parse_link_line("U1; X(1,2)").unwrap_err();
        assert_eq!(e.pos, 4);
    }

    #[test]
    fn validate_examples() {
        let t = LinkDiagram::parse(TREFOIL, 0).unwrap();
        assert_eq!(t.num_components(), 1);
        assert_eq!(t.num_crossings(), 3);
        assert_eq!(t.components()[0], vec![1, 2, 3, 4, 5, 6]);
        let h = LinkDiagram::parse(HOPF, 0).unwrap();
        assert_eq!(h.num_components(), 2);
        assert_eq!(h.components(), &[vec![1, 2], vec![3, 4]]);
        let e = LinkDiagram::parse("X(1,4,2,5),X(3,6,4,1),X(5,2,6,7)", 0).unwrap_err();
        assert!(matches!(e, DiagramError::LabelOutOfRange { label: 7, .. }));
        let e = LinkDiagram::parse("X(1,4,2,5),X(3,6,4,1),X(5,2,6,6)", 0).unwrap_err();
        assert!(matches!(e, DiagramError::LabelMultiplicity { .. }));
    }

    #[test]
    fn inconsistent_labels_rejected() {
        // Trefoil with labels 2 and 3 swapped along the strand.
        let e = LinkDiagram::parse("X(1,4,3,5),X(2,6,4,1),X(5,3,6,2)", 0).unwrap_err();
        assert!(matches!(e, DiagramError::InconsistentLabeling { .. }), "{e:?}");
        // Under-strand directions disagree along the component.
        let e = LinkDiagram::parse("X(2,4,1,5),X(3,6,4,1),X(5,2,6,3)", 0).unwrap_err();
        assert!(
            matches!(e, DiagramError::InconsistentOrientation { .. } | DiagramError::InconsistentLabeling { .. }),
            "{e:?}"
        );
    }

    #[test]
    fn non_planar_rejected() {
        // Gauss word O1 O2 U1 U2 has no planar realization.
        let e = LinkDiagram::parse("X(1,3,2,4),X(2,4,3,1)", 0).unwrap_err();
        assert!(matches!(e, DiagramError::NonPlanar { .. }), "{e:?}");
    }

    #[test]
    fn writhe_examples() {
        let t = LinkDiagram::parse(TREFOIL, 0).unwrap();
        assert_eq!(t.writhe(), -3);
        assert_eq!(t.mirror().writhe(), 3);
        assert_eq!(LinkDiagram::unknot().writhe(), 0);
        assert_eq!(LinkDiagram::parse(FIGURE_EIGHT, 0).unwrap().writhe(), 0);
    }

    #[test]
    fn kink_is_positive() {
        let k = LinkDiagram::parse("X(1,1,2,2)", 0).unwrap();
        assert_eq!(k.writhe(), 1);
        assert_eq!(k.num_components(), 1);
    }

    #[test]
    fn linking_examples() {
        let h = LinkDiagram::parse(HOPF, 0).unwrap();
        let m = h.linking_matrix();
        assert_eq!(m[0][1].abs(), 1);
        assert_eq!(m[0][1], m[1][0]);
        assert_eq!(m[0][0], 0);
        assert_eq!(LinkDiagram::parse(TREFOIL, 0).unwrap().linking_matrix(), vec![vec![0]]);
        assert_eq!(LinkDiagram::unlink(2).linking_matrix(), vec![vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn mirror_is_involution() {
        for code in [TREFOIL, HOPF, FIGURE_EIGHT] {
            let d = LinkDiagram::parse(code, 0).unwrap();
            let m = d.mirror();
            assert_eq!(m.mirror(), d);
            assert_eq!(m.writhe(), -d.writhe());
            // The mirror is itself a valid PD code.
            assert_eq!(validate(&m.pd_code(), 0).unwrap(), m);
        }
        assert_eq!(LinkDiagram::unlink(0).mirror(), LinkDiagram::unlink(0));
    }

    #[test]
    fn union_examples() {
        let t = LinkDiagram::parse(TREFOIL, 0).unwrap();
        let h = LinkDiagram::parse(HOPF, 0).unwrap();
        assert_eq!(t.disjoint_union(&LinkDiagram::unlink(0)), t);
        assert_eq!(LinkDiagram::unknot().disjoint_union(&LinkDiagram::unknot()).num_components(), 2);
        let u = t.disjoint_union(&h);
        assert_eq!((u.num_components(), u.num_crossings()), (3, 5));
        assert_eq!(validate(&u.pd_code(), 0).unwrap(), u);
    }

    #[test]
    fn switching_a_crossing() {
        let t = LinkDiagram::parse(TREFOIL, 0).unwrap();
        let s = t.switch_crossing(0).unwrap();
        assert_eq!(s.writhe(), -1);
        assert_eq!(validate(&s.pd_code(), 0).unwrap(), s);
        assert!(t.switch_crossing(3).is_err());
    }

    #[test]
    fn label_occurrences_invariant() {
        for code in [TREFOIL, HOPF, FIGURE_EIGHT] {
            let d = LinkDiagram::parse(code, 0).unwrap();
            let n = d.num_crossings();
            let mut counts = vec![0; 2 * n + 1];
            for t in d.crossings() {
                for &l in t {
                    counts[l as usize] += 1;
                }
            }
            assert_eq!(counts.iter().sum::<usize>(), 4 * n);
            assert!(counts[1..].iter().all(|&c| c == 2));
        }
    }
}
