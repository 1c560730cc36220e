//! The combinatorial model of the reference fibre: 4(b+d) labeled punctures
//! on a line, the catalog of named arcs with concrete half-twist words, the
//! covering monodromy to S4, monodromy transport along arcs, and liftability.
//!
//! Puncture order, left to right:
//! D'_{2d}, D''_{2d}, ..., D'_1, D''_1, B'_1, B''_1, ..., B'_{2b}, B''_{2b}.
//! The figure's two rows are flattened to one line with the primed puncture
//! before the double-primed one inside each cable; this makes the in-cable
//! arcs p_i, q_j single standard generators.
//!
//! Arc words. An arc between positions k < l passing the punctures strictly
//! in between is encoded by a conjugated generator
//! `(sigma_{l-1}^{e} ... sigma_{k+1}^{e}) sigma_k (...)^-1`, with `e = -1`
//! for a puncture the arc passes over and `e = +1` for one it passes under.
//! (With the Artin convention of [`crate::artin`] fixed, the sign of the
//! over-passage is forced by the triangle relation
//! `s_{a_ij} s_{a_jk} = s_{a_jk} s_{a_ik}`, which fails verbatim for the
//! mirror choice.) Families p, q, a, b, c, d, u' and u are plain over-arcs.
//! The flattening isotopy rotates each cable pair, which sends u''_{ij}
//! below the puncture B'_i as it enters B''_i; and s_{ij} is the outer
//! conjugate u' u'' u u''^-1 u'^-1 of the middle arc, so that the
//! cusp-cluster block u^3, s, u'^3, u''^3 is the image of the four-strand
//! normal form s2^3, s1 s3 s2 s3^-1 s1^-1, s1^3, s3^3 under the chain
//! homomorphism sigma_1 -> u', sigma_2 -> u, sigma_3 -> u''. These choices
//! are forced: in the variant grid over passing sides of u, u', u'' they
//! are the only ones satisfying both the liftability table (u-family 3,
//! s 1) and the chain braid relations that transport the cusp-cluster
//! normal form.

use crate::artin::{act_on_word, FreeWord};
use crate::braid::BraidWord;
use crate::error::LayoutError;
use crate::perm::{s4_to_s3, Perm};
use std::fmt;

/// The four cover parameters, all at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

/// The two parameter regimes excluded by the monodromy-group description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionalCase {
    /// c = 2a and d = 2b.
    CaseI,
    /// a = 2c and b = 2d.
    CaseII,
}

impl SurfaceParams {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, LayoutError> {
        if a < 3 || b < 3 || c < 3 || d < 3 {
            return Err(LayoutError::InvalidParams { a, b, c, d });
        }
        Ok(SurfaceParams { a, b, c, d })
    }

    pub fn exceptional_case(&self) -> Option<ExceptionalCase> {
        if self.c == 2 * self.a && self.d == 2 * self.b {
            Some(ExceptionalCase::CaseI)
        } else if self.a == 2 * self.c && self.b == 2 * self.d {
            Some(ExceptionalCase::CaseII)
        } else {
            None
        }
    }

    pub fn layout(&self) -> Layout {
        Layout::new(self.b, self.d)
    }

    /// Strands of the braid group the factorization lives in.
    pub fn strand_count(&self) -> usize {
        4 * (self.b + self.d) as usize
    }
}

/// A puncture of the reference fibre.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Puncture {
    pub kind: CableKind,
    /// Cable index: 1..=2b for B, 1..=2d for D.
    pub index: usize,
    /// Primed (true) or double-primed (false).
    pub primed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CableKind {
    B,
    D,
}

impl fmt::Display for Puncture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            CableKind::B => "B",
            CableKind::D => "D",
        };
        let tick = if self.primed { "'" } else { "''" };
        write!(f, "{kind}{tick}{}", self.index)
    }
}

/// Puncture layout for parameters (b, d).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layout {
    pub b: i64,
    pub d: i64,
}

impl Layout {
    pub fn new(b: i64, d: i64) -> Self {
        assert!(b >= 1 && d >= 1);
        Layout { b, d }
    }

    pub fn puncture_count(&self) -> usize {
        4 * (self.b + self.d) as usize
    }

    /// 1-based position of a puncture on the line.
    pub fn position(&self, p: Puncture) -> usize {
        let d = self.d as usize;
        let prime_offset = if p.primed { 1 } else { 2 };
        match p.kind {
            // D cables run left to right from index 2d down to 1
            CableKind::D => 2 * (2 * d - p.index) + prime_offset,
            CableKind::B => 4 * d + 2 * (p.index - 1) + prime_offset,
        }
    }

    pub fn puncture_at(&self, pos: usize) -> Puncture {
        assert!(pos >= 1 && pos <= self.puncture_count());
        let d = self.d as usize;
        let primed = pos % 2 == 1;
        if pos <= 4 * d {
            Puncture {
                kind: CableKind::D,
                index: 2 * d - (pos - 1) / 2,
                primed,
            }
        } else {
            Puncture {
                kind: CableKind::B,
                index: (pos - 4 * d - 1) / 2 + 1,
                primed,
            }
        }
    }

    /// The covering monodromy: transposition attached to each puncture.
    pub fn theta(&self, p: Puncture) -> Perm {
        match (p.kind, p.primed) {
            (CableKind::D, true) => Perm::transposition(4, 1, 2),
            (CableKind::D, false) => Perm::transposition(4, 3, 4),
            (CableKind::B, true) => Perm::transposition(4, 1, 3),
            (CableKind::B, false) => Perm::transposition(4, 2, 4),
        }
    }

    /// theta extended to free words on the punctures (position-indexed).
    pub fn theta_of_free_word(&self, w: &FreeWord) -> Perm {
        let mut acc = Perm::identity(4);
        for &l in w.letters() {
            let t = self.theta(self.puncture_at(l.unsigned_abs() as usize));
            // transpositions are involutions, the sign of the letter is moot
            acc = acc.then(&t);
        }
        acc
    }

    /// Product of theta over all punctures in layout order.
    pub fn theta_total_product(&self) -> Perm {
        let mut acc = Perm::identity(4);
        for pos in 1..=self.puncture_count() {
            acc = acc.then(&self.theta(self.puncture_at(pos)));
        }
        acc
    }

    /// All arcs of the catalog.
    pub fn catalog(&self) -> Vec<ArcId> {
        let (b2, d2) = (2 * self.b as usize, 2 * self.d as usize);
        let mut out = Vec::new();
        for i in 1..=b2 {
            out.push(ArcId::P(i));
        }
        for j in 1..=d2 {
            out.push(ArcId::Q(j));
        }
        for i in 1..b2 {
            for j in i + 1..=b2 {
                out.push(ArcId::A(i, j));
                out.push(ArcId::C(i, j));
            }
        }
        for i in 1..d2 {
            for j in i + 1..=d2 {
                out.push(ArcId::B(i, j));
                out.push(ArcId::D(i, j));
            }
        }
        for i in 1..=b2 {
            for j in 1..=d2 {
                out.push(ArcId::UPrime(i, j));
                out.push(ArcId::USecond(i, j));
                out.push(ArcId::U(i, j));
                out.push(ArcId::S(i, j));
            }
        }
        out
    }

    /// One line per puncture: `pos<TAB>label<TAB>transposition`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for pos in 1..=self.puncture_count() {
            let p = self.puncture_at(pos);
            s.push_str(&format!("{pos}\t{p}\t{}\n", self.theta(p)));
        }
        s
    }
}

/// A named arc of the catalog.
///
/// Index conventions: `A`/`C` join B-cables i < j, `B`/`D` join D-cables
/// i < j, and the mixed families carry (B-index, D-index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcId {
    P(usize),
    Q(usize),
    A(usize, usize),
    B(usize, usize),
    C(usize, usize),
    D(usize, usize),
    UPrime(usize, usize),
    USecond(usize, usize),
    U(usize, usize),
    S(usize, usize),
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcId::P(i) => write!(f, "p{i}"),
            ArcId::Q(j) => write!(f, "q{j}"),
            ArcId::A(i, j) => write!(f, "a[{i},{j}]"),
            ArcId::B(i, j) => write!(f, "b[{i},{j}]"),
            ArcId::C(i, j) => write!(f, "c[{i},{j}]"),
            ArcId::D(i, j) => write!(f, "d[{i},{j}]"),
            ArcId::UPrime(i, j) => write!(f, "u'[{i},{j}]"),
            ArcId::USecond(i, j) => write!(f, "u''[{i},{j}]"),
            ArcId::U(i, j) => write!(f, "u[{i},{j}]"),
            ArcId::S(i, j) => write!(f, "s[{i},{j}]"),
        }
    }
}

impl ArcId {
    pub fn parse(text: &str) -> Result<ArcId, LayoutError> {
        let bad = || LayoutError::ParseArc {
            text: text.to_string(),
        };
        let text = text.trim();
        if let Some(rest) = text.strip_prefix('p') {
            if !rest.starts_with('[') {
                return rest.parse().map(ArcId::P).map_err(|_| bad());
            }
        }
        if let Some(rest) = text.strip_prefix('q') {
            if !rest.starts_with('[') {
                return rest.parse().map(ArcId::Q).map_err(|_| bad());
            }
        }
        let (family, rest) = if let Some(r) = text.strip_prefix("u''") {
            ("u''", r)
        } else if let Some(r) = text.strip_prefix("u'") {
            ("u'", r)
        } else if let Some(r) = text.strip_prefix('u') {
            ("u", r)
        } else if let Some(r) = text.strip_prefix('a') {
            ("a", r)
        } else if let Some(r) = text.strip_prefix('b') {
            ("b", r)
        } else if let Some(r) = text.strip_prefix('c') {
            ("c", r)
        } else if let Some(r) = text.strip_prefix('d') {
            ("d", r)
        } else if let Some(r) = text.strip_prefix('s') {
            ("s", r)
        } else {
            return Err(bad());
        };
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let mut parts = inner.split(',');
        let i: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let j: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(match family {
            "a" => ArcId::A(i, j),
            "b" => ArcId::B(i, j),
            "c" => ArcId::C(i, j),
            "d" => ArcId::D(i, j),
            "u'" => ArcId::UPrime(i, j),
            "u''" => ArcId::USecond(i, j),
            "u" => ArcId::U(i, j),
            "s" => ArcId::S(i, j),
            _ => unreachable!(),
        })
    }

    /// Endpoints in the family's own order (B-endpoint first for the mixed
    /// families, as in the arc table).
    pub fn endpoints(&self) -> (Puncture, Puncture) {
        let bp = |index, primed| Puncture {
            kind: CableKind::B,
            index,
            primed,
        };
        let dp = |index, primed| Puncture {
            kind: CableKind::D,
            index,
            primed,
        };
        match *self {
            ArcId::P(i) => (bp(i, true), bp(i, false)),
            ArcId::Q(j) => (dp(j, true), dp(j, false)),
            ArcId::A(i, j) => (bp(i, true), bp(j, true)),
            ArcId::C(i, j) => (bp(i, false), bp(j, false)),
            ArcId::B(i, j) => (dp(i, true), dp(j, true)),
            ArcId::D(i, j) => (dp(i, false), dp(j, false)),
            ArcId::UPrime(i, j) => (bp(i, true), dp(j, true)),
            ArcId::USecond(i, j) => (bp(i, false), dp(j, false)),
            ArcId::U(i, j) => (bp(i, true), dp(j, false)),
            ArcId::S(i, j) => (bp(i, false), dp(j, true)),
        }
    }

    pub fn validate(&self, layout: &Layout) -> Result<(), LayoutError> {
        let (b2, d2) = (2 * layout.b as usize, 2 * layout.d as usize);
        let ok = match *self {
            ArcId::P(i) => i >= 1 && i <= b2,
            ArcId::Q(j) => j >= 1 && j <= d2,
            ArcId::A(i, j) | ArcId::C(i, j) => i >= 1 && i < j && j <= b2,
            ArcId::B(i, j) | ArcId::D(i, j) => i >= 1 && i < j && j <= d2,
            ArcId::UPrime(i, j) | ArcId::USecond(i, j) | ArcId::U(i, j) | ArcId::S(i, j) => {
                i >= 1 && i <= b2 && j >= 1 && j <= d2
            }
        };
        if ok {
            Ok(())
        } else {
            Err(LayoutError::InvalidArc {
                arc: self.to_string(),
                b: layout.b,
                d: layout.d,
            })
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            ArcId::P(_) => "p",
            ArcId::Q(_) => "q",
            ArcId::A(..) => "a",
            ArcId::B(..) => "b",
            ArcId::C(..) => "c",
            ArcId::D(..) => "d",
            ArcId::UPrime(..) => "u'",
            ArcId::USecond(..) => "u''",
            ArcId::U(..) => "u",
            ArcId::S(..) => "s",
        }
    }
}

/// A half-twist in structured form: conjugator g and core index k, standing
/// for the word g sigma_k g^-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfTwist {
    pub conjugator: BraidWord,
    pub core: usize,
}

impl HalfTwist {
    pub fn word(&self) -> BraidWord {
        let n = self.conjugator.strand_count();
        self.conjugator
            .compose(&BraidWord::gen(n, self.core))
            .and_then(|w| w.compose(&self.conjugator.inverse()))
            .expect("uniform strand count")
    }

    /// The half-twist raised to an integer power, as a word.
    pub fn power(&self, e: i32) -> BraidWord {
        let n = self.conjugator.strand_count();
        self.conjugator
            .compose(&BraidWord::gen_pow(n, self.core, e))
            .and_then(|w| w.compose(&self.conjugator.inverse()))
            .expect("uniform strand count")
    }
}

/// Conjugated-generator word for an arc from position k to position l > k,
/// passing the puncture at position p (k < p < l) over (`sign(p) = +1`) or
/// under (`sign(p) = -1`).
fn passage_arc(n: usize, k: usize, l: usize, sign: impl Fn(usize) -> i32) -> HalfTwist {
    assert!(k < l && l <= n);
    let mut letters = Vec::with_capacity(l - 1 - k);
    for p in (k + 1..l).rev() {
        letters.push(sign(p) * p as i32);
    }
    HalfTwist {
        conjugator: BraidWord::new(n, letters).expect("indices in range"),
        core: k,
    }
}

fn over_arc(n: usize, k: usize, l: usize) -> HalfTwist {
    passage_arc(n, k, l, |_| -1)
}

/// Over-arc of a family whose indices grow leftward (b and d): traversed
/// right to left, its crossing resolution mirrors.
fn over_arc_mirrored(n: usize, k: usize, l: usize) -> HalfTwist {
    passage_arc(n, k, l, |_| 1)
}

/// The concrete half-twist word of an arc.
///
/// The mixed families are anchored at the local cusp-cluster block between
/// cables D_1 and B_1 and carried to higher indices by the quadrangle
/// conjugations (c_t a_t)^-1 along the B side and (d_t b_t) along the D
/// side. Those conjugators are liftable, so the transported monodromies of
/// the whole family coincide with the base block's.
pub fn half_twist(layout: &Layout, arc: ArcId) -> Result<HalfTwist, LayoutError> {
    arc.validate(layout)?;
    let n = layout.puncture_count();
    let (e1, e2) = arc.endpoints();
    let (p1, p2) = (layout.position(e1), layout.position(e2));
    let (k, l) = (p1.min(p2), p1.max(p2));
    Ok(match arc {
        ArcId::P(_) | ArcId::Q(_) | ArcId::A(..) | ArcId::C(..) => over_arc(n, k, l),
        ArcId::B(..) | ArcId::D(..) => over_arc_mirrored(n, k, l),
        ArcId::UPrime(i, j) | ArcId::USecond(i, j) | ArcId::U(i, j) | ArcId::S(i, j) => {
            let base = cluster_base_twist(layout, arc)?;
            if (i, j) == (1, 1) {
                base
            } else {
                let steps = orbit_conjugator(layout, i, j)?;
                HalfTwist {
                    conjugator: steps
                        .compose(&base.conjugator)
                        .expect("uniform strand count"),
                    core: base.core,
                }
            }
        }
    })
}

/// The four arcs of the cusp-cluster block at (i, j) = (1, 1). The middle
/// arc u is the bare generator between D''_1 and B'_1; u' passes under its
/// twin D''_1, u'' under B'_1; s is the outer conjugate of u in the chain.
fn cluster_base_twist(layout: &Layout, arc: ArcId) -> Result<HalfTwist, LayoutError> {
    let n = layout.puncture_count();
    let mid = 4 * layout.d as usize; // position of D''_1
    Ok(match arc {
        ArcId::UPrime(..) => passage_arc(n, mid - 1, mid + 1, |_| -1),
        ArcId::USecond(..) => passage_arc(n, mid, mid + 2, |_| 1),
        ArcId::U(..) => over_arc(n, mid, mid + 1),
        ArcId::S(..) => {
            let up = cluster_base_twist(layout, ArcId::UPrime(1, 1))?;
            let us = cluster_base_twist(layout, ArcId::USecond(1, 1))?;
            let outer = up.word().compose(&us.word()).expect("uniform strand count");
            HalfTwist {
                conjugator: outer,
                core: mid,
            }
        }
        _ => unreachable!("cluster base only covers the mixed families"),
    })
}

/// Product of the orbit-step conjugators carrying the (1,1) block to (i,j):
/// first along the B side, then along the D side.
fn orbit_conjugator(layout: &Layout, i: usize, j: usize) -> Result<BraidWord, LayoutError> {
    let n = layout.puncture_count();
    let mut word = BraidWord::identity(n);
    for t in 1..i {
        let ca = half_twist(layout, ArcId::C(t, t + 1))?
            .word()
            .compose(&half_twist(layout, ArcId::A(t, t + 1))?.word())
            .expect("uniform strand count");
        word = ca.inverse().compose(&word).expect("uniform strand count");
    }
    for t in 1..j {
        let db = half_twist(layout, ArcId::D(t, t + 1))?
            .word()
            .compose(&half_twist(layout, ArcId::B(t, t + 1))?.word())
            .expect("uniform strand count");
        word = db.compose(&word).expect("uniform strand count");
    }
    Ok(word)
}

/// The endpoint monodromies transported along the arc to a common base
/// point: with the arc in structured form g sigma_k g^-1, these are the
/// theta-images of the free loops g(x_k), g(x_{k+1}). Returned in the
/// family's endpoint order.
pub fn transported_monodromies(layout: &Layout, arc: ArcId) -> Result<(Perm, Perm), LayoutError> {
    let ht = half_twist(layout, arc)?;
    let image = |k: usize| -> Result<Perm, LayoutError> {
        let w = act_on_word(&ht.conjugator, &FreeWord::generator(k))?;
        Ok(layout.theta_of_free_word(&w))
    };
    let left = image(ht.core)?;
    let right = image(ht.core + 1)?;
    // mixed families list the B-endpoint (the right-hand one) first
    Ok(match arc {
        ArcId::UPrime(..) | ArcId::USecond(..) | ArcId::U(..) | ArcId::S(..) => (right, left),
        _ => (left, right),
    })
}

/// Minimal liftable power of the half-twist for the 4-sheeted cover:
/// 1 if the transported transpositions are equal, 2 if disjoint, 3 if they
/// do not commute.
pub fn liftability_class(layout: &Layout, arc: ArcId) -> Result<u8, LayoutError> {
    let (t1, t2) = transported_monodromies(layout, arc)?;
    Ok(if t1 == t2 {
        1
    } else if t1.commutes_with(&t2) {
        2
    } else {
        3
    })
}

/// Behaviour of the arc preimage on the associated triple cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleCoverCase {
    /// A single arc through both ramification points; no cycle.
    I,
    /// A cycle through both ramification points plus a residual arc.
    II,
}

impl fmt::Display for TripleCoverCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TripleCoverCase::I => write!(f, "i"),
            TripleCoverCase::II => write!(f, "ii"),
        }
    }
}

pub fn triple_cover_class(layout: &Layout, arc: ArcId) -> Result<TripleCoverCase, LayoutError> {
    let (t1, t2) = transported_monodromies(layout, arc)?;
    Ok(if s4_to_s3(&t1) == s4_to_s3(&t2) {
        TripleCoverCase::II
    } else {
        TripleCoverCase::I
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::braids_equal;

    fn layout33() -> Layout {
        Layout::new(3, 3)
    }

    #[test]
    fn positions_round_trip() {
        let l = Layout::new(3, 4);
        for pos in 1..=l.puncture_count() {
            assert_eq!(l.position(l.puncture_at(pos)), pos);
        }
        // leftmost is D'_{2d}, rightmost is B''_{2b}
        assert_eq!(l.puncture_at(1).to_string(), "D'8");
        assert_eq!(l.puncture_at(l.puncture_count()).to_string(), "B''6");
    }

    #[test]
    fn theta_product_is_identity() {
        for (b, d) in [(3, 3), (3, 5), (4, 6)] {
            assert!(Layout::new(b, d).theta_total_product().is_identity());
        }
    }

    #[test]
    fn arc_text_round_trip() {
        let l = layout33();
        for arc in l.catalog() {
            let parsed = ArcId::parse(&arc.to_string()).unwrap();
            assert_eq!(parsed, arc);
        }
        assert!(ArcId::parse("z[1,2]").is_err());
        assert!(ArcId::parse("p[1,2]").is_err());
        assert!(ArcId::parse("a[1]").is_err());
    }

    #[test]
    fn in_cable_arcs_are_single_generators() {
        let l = layout33();
        let p1 = half_twist(&l, ArcId::P(1)).unwrap().word();
        assert_eq!(p1, BraidWord::gen(l.puncture_count(), 4 * 3 + 1));
        let q1 = half_twist(&l, ArcId::Q(1)).unwrap().word();
        assert_eq!(q1, BraidWord::gen(l.puncture_count(), 4 * 3 - 1));
    }

    #[test]
    fn over_arc_spans_positions() {
        // a_{1,2} spans B'_1..B'_2 passing over B''_1
        let l = layout33();
        let ht = half_twist(&l, ArcId::A(1, 2)).unwrap();
        let m = l.position(Puncture {
            kind: CableKind::B,
            index: 1,
            primed: true,
        });
        assert_eq!(ht.core, m);
        assert_eq!(ht.conjugator.letters(), [-((m + 1) as i32)]);
    }

    #[test]
    fn triangle_relation_orientation() {
        // the displayed triangle relation holds verbatim for the catalog
        let l = layout33();
        let tw = |arc: ArcId| half_twist(&l, arc).unwrap().word();
        let lhs = tw(ArcId::A(1, 2)).compose(&tw(ArcId::A(2, 3))).unwrap();
        let rhs = tw(ArcId::A(2, 3)).compose(&tw(ArcId::A(1, 3))).unwrap();
        assert!(braids_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn transported_monodromy_examples() {
        let l = layout33();
        let t12 = Perm::transposition(4, 1, 2);
        let t13 = Perm::transposition(4, 1, 3);
        let t24 = Perm::transposition(4, 2, 4);

        for i in 1..=6 {
            assert_eq!(
                transported_monodromies(&l, ArcId::P(i)).unwrap(),
                (t13.clone(), t24.clone())
            );
        }
        for (i, j) in [(1, 2), (1, 4), (2, 5)] {
            let (u, v) = transported_monodromies(&l, ArcId::A(i, j)).unwrap();
            assert_eq!(u, v);
            assert_eq!(u, t13);
        }
        // u'_{1,1} carries non-commuting transpositions, the B-endpoint
        // reported first; the pair is ((13),(12)) up to transport base point
        let (u, v) = transported_monodromies(&l, ArcId::UPrime(1, 1)).unwrap();
        assert!(!u.commutes_with(&v));
        assert_eq!(v, t12);
    }

    #[test]
    fn liftability_table() {
        let l = layout33();
        for arc in l.catalog() {
            let expected = match arc {
                ArcId::A(..) | ArcId::B(..) | ArcId::C(..) | ArcId::D(..) | ArcId::S(..) => 1,
                ArcId::P(_) | ArcId::Q(_) => 2,
                ArcId::U(..) | ArcId::UPrime(..) | ArcId::USecond(..) => 3,
            };
            assert_eq!(
                liftability_class(&l, arc).unwrap(),
                expected,
                "liftability of {arc}"
            );
        }
    }

    #[test]
    fn triple_cover_cases() {
        let l = layout33();
        assert_eq!(triple_cover_class(&l, ArcId::UPrime(1, 2)).unwrap(), TripleCoverCase::I);
        assert_eq!(triple_cover_class(&l, ArcId::U(1, 1)).unwrap(), TripleCoverCase::I);
        assert_eq!(triple_cover_class(&l, ArcId::P(2)).unwrap(), TripleCoverCase::II);
        assert_eq!(triple_cover_class(&l, ArcId::A(1, 3)).unwrap(), TripleCoverCase::II);
        assert_eq!(triple_cover_class(&l, ArcId::S(1, 1)).unwrap(), TripleCoverCase::II);
    }

    #[test]
    fn local_cusp_cluster_chain_relations() {
        // the chain u' - u - u'' generates a braid-relation-satisfying triple,
        // which is what lets the local cusp-cluster block be transported
        let l = layout33();
        for (i, j) in [(1, 1), (1, 2), (2, 1), (3, 3)] {
            let up = half_twist(&l, ArcId::UPrime(i, j)).unwrap().word();
            let um = half_twist(&l, ArcId::U(i, j)).unwrap().word();
            let us = half_twist(&l, ArcId::USecond(i, j)).unwrap().word();
            let pair = |x: &BraidWord, y: &BraidWord| {
                braids_equal(&x.compose(y).unwrap(), &y.compose(x).unwrap()).unwrap()
            };
            let braid_rel = |x: &BraidWord, y: &BraidWord| {
                let lhs = x.compose(y).unwrap().compose(x).unwrap();
                let rhs = y.compose(x).unwrap().compose(y).unwrap();
                braids_equal(&lhs, &rhs).unwrap()
            };
            assert!(pair(&up, &us), "u' and u'' commute ({i},{j})");
            assert!(braid_rel(&up, &um), "u'-u braid relation ({i},{j})");
            assert!(braid_rel(&um, &us), "u-u'' braid relation ({i},{j})");
        }
    }

    #[test]
    fn dump_format() {
        let text = Layout::new(3, 3).dump();
        let first = text.lines().next().unwrap();
        assert_eq!(first, "1\tD'6\t(1 2)");
        assert_eq!(text.lines().count(), 24);
        assert!(text.lines().all(|l| l.split('\t').count() == 3));
    }

    #[test]
    fn exceptional_cases() {
        assert_eq!(
            SurfaceParams::new(3, 3, 6, 6).unwrap().exceptional_case(),
            Some(ExceptionalCase::CaseI)
        );
        assert_eq!(
            SurfaceParams::new(6, 6, 3, 3).unwrap().exceptional_case(),
            Some(ExceptionalCase::CaseII)
        );
        assert_eq!(SurfaceParams::new(3, 3, 3, 3).unwrap().exceptional_case(), None);
        assert!(SurfaceParams::new(2, 3, 3, 3).is_err());
    }
}
