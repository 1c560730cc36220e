//! Hurwitz moves, simultaneous conjugation, stabilization by admissible
//! pairs, replayable proof scripts, and bounded orbit search.

use crate::artin::{artin_action, braids_equal};
use crate::braid::{delta4, BraidWord};
use crate::error::{BraidError, MoveError};
use crate::layout::{transported_monodromies, ArcId, Layout};
use std::collections::HashMap;
use std::fmt;

/// A factorization: an ordered list of braid factors of uniform strand count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    strand_count: usize,
    factors: Vec<BraidWord>,
}

impl Factorization {
    pub fn new(strand_count: usize, factors: Vec<BraidWord>) -> Result<Self, BraidError> {
        for f in &factors {
            if f.strand_count() != strand_count {
                return Err(BraidError::StrandCountMismatch {
                    left: strand_count,
                    right: f.strand_count(),
                });
            }
        }
        Ok(Factorization {
            strand_count,
            factors,
        })
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn factors(&self) -> &[BraidWord] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> BraidWord {
        BraidWord::product(self.strand_count, self.factors.iter()).expect("uniform strand count")
    }

    /// Factorwise group equality.
    pub fn equals(&self, other: &Factorization) -> Result<bool, BraidError> {
        if self.strand_count != other.strand_count || self.factors.len() != other.factors.len() {
            return Ok(false);
        }
        for (u, v) in self.factors.iter().zip(&other.factors) {
            if !braids_equal(u, v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiset of S_n conjugacy classes (cycle types) of the factors'
    /// permutation images; a slide invariant.
    pub fn permutation_class_multiset(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self
            .factors
            .iter()
            .map(|f| f.permutation().cycle_type())
            .collect();
        v.sort();
        v
    }
}

/// One rewriting move on a factorization. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// (a_i, a_{i+1}) -> (a_i a_{i+1} a_i^-1, a_i)
    Slide(usize),
    /// (a_i, a_{i+1}) -> (a_{i+1}, a_{i+1}^-1 a_i a_{i+1})
    SlideInv(usize),
    /// Conjugate every factor by g.
    ConjAll(BraidWord),
    /// Insert the pair (beta, beta^-1) before position i.
    Create(usize, BraidWord),
    /// Remove the mutually inverse factors at positions i, i+1.
    Cancel(usize),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Slide(i) => write!(f, "slide {i}"),
            Move::SlideInv(i) => write!(f, "slide- {i}"),
            Move::ConjAll(g) => write!(f, "conj {g}"),
            Move::Create(i, b) => write!(f, "create {i} {b}"),
            Move::Cancel(i) => write!(f, "cancel {i}"),
        }
    }
}

pub fn apply_move(f: &Factorization, m: &Move) -> Result<Factorization, MoveError> {
    let n = f.strand_count;
    let len = f.factors.len();
    let mut factors = f.factors.clone();
    match m {
        Move::Slide(i) => {
            let i = *i;
            if i < 1 || i + 1 > len {
                return Err(MoveError::PositionOutOfRange { position: i, len });
            }
            let (a, b) = (factors[i - 1].clone(), factors[i].clone());
            factors[i - 1] = a.compose(&b)?.compose(&a.inverse())?.free_reduce();
            factors[i] = a;
        }
        Move::SlideInv(i) => {
            let i = *i;
            if i < 1 || i + 1 > len {
                return Err(MoveError::PositionOutOfRange { position: i, len });
            }
            let (a, b) = (factors[i - 1].clone(), factors[i].clone());
            factors[i - 1] = b.clone();
            factors[i] = b.inverse().compose(&a)?.compose(&b)?.free_reduce();
        }
        Move::ConjAll(g) => {
            for w in factors.iter_mut() {
                *w = w.conjugate_by(g)?.free_reduce();
            }
        }
        Move::Create(i, beta) => {
            let i = *i;
            if i < 1 || i > len + 1 {
                return Err(MoveError::PositionOutOfRange { position: i, len });
            }
            if beta.strand_count() != n {
                return Err(BraidError::StrandCountMismatch {
                    left: n,
                    right: beta.strand_count(),
                }
                .into());
            }
            factors.insert(i - 1, beta.inverse());
            factors.insert(i - 1, beta.clone());
        }
        Move::Cancel(i) => {
            let i = *i;
            if i < 1 || i + 1 > len {
                return Err(MoveError::PositionOutOfRange { position: i, len });
            }
            let prod = factors[i - 1].compose(&factors[i])?;
            if !braids_equal(&prod, &BraidWord::identity(n))? {
                return Err(MoveError::CancelNotInverse { position: i });
            }
            factors.remove(i);
            factors.remove(i - 1);
        }
    }
    Ok(Factorization {
        strand_count: n,
        factors,
    })
}

/// A replayable sequence of moves.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MoveScript {
    pub moves: Vec<Move>,
}

impl MoveScript {
    pub fn apply(&self, start: &Factorization) -> Result<Factorization, MoveError> {
        let mut cur = start.clone();
        for m in &self.moves {
            cur = apply_move(&cur, m)?;
        }
        Ok(cur)
    }

    /// One move per line, in the script file syntax.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for m in &self.moves {
            out.push_str(&format!("{m}\n"));
        }
        out
    }

    /// Parse the line-oriented script syntax:
    /// `slide <i>`, `slide- <i>`, `conj <word>`, `create <i> <word>`,
    /// `cancel <i>`.
    pub fn parse(n: usize, text: &str) -> Result<MoveScript, BraidError> {
        let mut moves = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || BraidError::Parse {
                token: line.to_string(),
            };
            let (head, rest) = line.split_once(char::is_whitespace).ok_or_else(bad)?;
            let rest = rest.trim();
            let mv = match head {
                "slide" => Move::Slide(rest.parse().map_err(|_| bad())?),
                "slide-" => Move::SlideInv(rest.parse().map_err(|_| bad())?),
                "conj" => Move::ConjAll(BraidWord::parse(n, rest)?),
                "create" => {
                    let (i, w) = rest.split_once(char::is_whitespace).ok_or_else(bad)?;
                    Move::Create(i.parse().map_err(|_| bad())?, BraidWord::parse(n, w.trim())?)
                }
                "cancel" => Move::Cancel(rest.parse().map_err(|_| bad())?),
                _ => return Err(bad()),
            };
            moves.push(mv);
        }
        Ok(MoveScript { moves })
    }
}

/// Replay `script` from `start`; true iff the result equals `end` factorwise.
pub fn verify_script(
    start: &Factorization,
    script: &MoveScript,
    end: &Factorization,
) -> Result<bool, MoveError> {
    let got = script.apply(start)?;
    Ok(got.equals(end)?)
}

/// True iff g commutes with w.
pub fn centralizes(g: &BraidWord, w: &BraidWord) -> Result<bool, BraidError> {
    braids_equal(&g.compose(w)?, &w.compose(g)?)
}

/// A twist given in structured form: an arc of the catalog and an exponent.
/// Admissibility is decided on this structured data only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuredTwist {
    pub arc: ArcId,
    pub exponent: i32,
}

/// A full twist is admissible when its exponent is ±2 and the transported
/// endpoint monodromies of its arc are disjoint transpositions.
pub fn is_admissible_pair(layout: &Layout, twist: &StructuredTwist) -> Result<bool, crate::error::LayoutError> {
    if twist.exponent.abs() != 2 {
        return Ok(false);
    }
    let (t1, t2) = transported_monodromies(layout, twist.arc)?;
    Ok(t1 != t2 && t1.commutes_with(&t2))
}

/// Outcome of a bounded orbit search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A verified script carrying the start to the target.
    Found(MoveScript),
    /// The full orbit graph within the move menu was explored: no path.
    NoPath,
    /// A depth or node bound was hit before exhausting the graph.
    BoundExceeded,
    /// The products differ, so no Slide/SlideInv/Create/Cancel path exists.
    ProductMismatch,
}

/// Which moves the search may use.
#[derive(Debug, Clone, Default)]
pub struct MoveMenu {
    pub slides: bool,
    pub slide_invs: bool,
    /// Conjugators available to ConjAll.
    pub conj_all: Vec<BraidWord>,
    /// Words available to Create (inserted at every position).
    pub create: Vec<BraidWord>,
    pub cancel: bool,
}

impl MoveMenu {
    pub fn slides_only() -> Self {
        MoveMenu {
            slides: true,
            slide_invs: true,
            ..Default::default()
        }
    }
}

/// Canonical form for deduplication: the tuple of reduced Artin images of
/// all factors. Returns `None` when the letter budget is hit; the search
/// prunes such nodes and reports the truncation through its outcome.
fn canonical_key(f: &Factorization) -> Result<Option<Vec<Vec<i32>>>, BraidError> {
    let mut key = Vec::with_capacity(f.factors.len() + 1);
    key.push(vec![f.strand_count as i32]);
    for w in &f.factors {
        let auto = match artin_action(w) {
            Ok(a) => a,
            Err(BraidError::LetterBudget { .. }) => return Ok(None),
            Err(e) => return Err(e),
        };
        for img in auto.images() {
            key.push(img.letters().to_vec());
        }
        key.push(vec![0]); // factor separator
    }
    Ok(Some(key))
}

/// Factor words longer than this are not expanded further by the search;
/// iterated slides triple word lengths, and nodes past this size cannot be
/// fingerprinted within the letter budget anyway.
const SEARCH_WORD_CAP: usize = 512;

/// Breadth-first search for a move script from `start` to `target`.
///
/// Deterministic: the frontier is expanded in insertion order and moves are
/// enumerated in a fixed order, so the result is the lexicographically least
/// among the shortest scripts for that enumeration. Absence of a script is
/// only a statement about the explored graph.
pub fn orbit_search(
    start: &Factorization,
    target: &Factorization,
    menu: &MoveMenu,
    depth_bound: usize,
    node_bound: usize,
) -> Result<SearchOutcome, MoveError> {
    if start.strand_count() != target.strand_count() {
        return Err(MoveError::Braid(BraidError::StrandCountMismatch {
            left: start.strand_count(),
            right: target.strand_count(),
        }));
    }
    // Slide-type moves and Create/Cancel preserve the product; when the menu
    // has no ConjAll the mismatch is decisive and reported up front.
    if menu.conj_all.is_empty() && !braids_equal(&start.product(), &target.product())? {
        return Ok(SearchOutcome::ProductMismatch);
    }

    let target_key = canonical_key(target)?.ok_or(BraidError::LetterBudget {
        budget: crate::artin::letter_budget(),
    })?;
    let start_key = canonical_key(start)?.ok_or(BraidError::LetterBudget {
        budget: crate::artin::letter_budget(),
    })?;
    if start_key == target_key {
        return Ok(SearchOutcome::Found(MoveScript::default()));
    }

    // node -> (parent index, move that produced it)
    let mut seen: HashMap<Vec<Vec<i32>>, usize> = HashMap::new();
    let mut nodes: Vec<(Factorization, Option<(usize, Move)>, usize)> =
        vec![(start.clone(), None, 0)];
    seen.insert(start_key, 0);
    let mut head = 0usize;
    let mut truncated = false;

    while head < nodes.len() {
        let (cur, _, depth) = nodes[head].clone();
        if depth >= depth_bound {
            truncated = true;
            head += 1;
            continue;
        }
        let mut moves: Vec<Move> = Vec::new();
        let len = cur.len();
        if menu.slides {
            for i in 1..len {
                moves.push(Move::Slide(i));
            }
        }
        if menu.slide_invs {
            for i in 1..len {
                moves.push(Move::SlideInv(i));
            }
        }
        for g in &menu.conj_all {
            moves.push(Move::ConjAll(g.clone()));
        }
        for b in &menu.create {
            for i in 1..=len + 1 {
                moves.push(Move::Create(i, b.clone()));
            }
        }
        if menu.cancel {
            for i in 1..len {
                let prod = cur.factors()[i - 1].compose(&cur.factors()[i])?;
                if braids_equal(&prod, &BraidWord::identity(cur.strand_count()))? {
                    moves.push(Move::Cancel(i));
                }
            }
        }
        for mv in moves {
            let next = apply_move(&cur, &mv)?;
            if next.factors().iter().any(|w| w.len() > SEARCH_WORD_CAP) {
                truncated = true;
                continue;
            }
            let Some(key) = canonical_key(&next)? else {
                truncated = true;
                continue;
            };
            if seen.contains_key(&key) {
                continue;
            }
            if key == target_key {
                // reconstruct the script through the parent chain
                let mut rev = vec![mv];
                let mut at = head;
                while let (_, Some((parent, m)), _) = &nodes[at] {
                    rev.push(m.clone());
                    at = *parent;
                }
                rev.reverse();
                return Ok(SearchOutcome::Found(MoveScript { moves: rev }));
            }
            if nodes.len() >= node_bound {
                return Ok(SearchOutcome::BoundExceeded);
            }
            seen.insert(key, nodes.len());
            nodes.push((next, Some((head, mv)), depth + 1));
        }
        head += 1;
    }
    Ok(if truncated {
        SearchOutcome::BoundExceeded
    } else {
        SearchOutcome::NoPath
    })
}

/// A bundled equivalence chain: a start factorization, the move script,
/// and the expected end; used by the built-in verification suite.
pub struct BuiltinChain {
    pub name: &'static str,
    pub start: Factorization,
    pub script: MoveScript,
    pub end: Factorization,
}

fn w4(s: &str) -> BraidWord {
    BraidWord::parse(4, s).expect("static word")
}

fn fact4(words: &[&str]) -> Factorization {
    Factorization::new(4, words.iter().map(|s| w4(s)).collect()).expect("static factorization")
}

/// The cusp-cluster normal form s2^3 o s1 s3 s2 s3^-1 s1^-1 o s1^3 o s3^3.
pub fn cusp_cluster_normal_form() -> Factorization {
    fact4(&["s2 s2 s2", "s1 s3 s2 s3^-1 s1^-1", "s1 s1 s1", "s3 s3 s3"])
}

/// The vertical-tangency cluster factorization
/// s1^-1 s2 s1 o s2^-1 s3 s2 o s1^-1 s2 s1 o s2^-1 s3 s2.
pub fn vt_cluster_factorization() -> Factorization {
    fact4(&["s1^-1 s2 s1", "s2^-1 s3 s2", "s1^-1 s2 s1", "s2^-1 s3 s2"])
}

fn conj_fact(f: &Factorization, g: &BraidWord) -> Factorization {
    Factorization::new(
        f.strand_count(),
        f.factors()
            .iter()
            .map(|w| w.conjugate_by(g).expect("uniform strand count"))
            .collect(),
    )
    .expect("uniform strand count")
}

/// The built-in equivalence chains, with explicit move directions that make
/// each one replay to its stated conjugate.
pub fn builtin_chains() -> Vec<BuiltinChain> {
    let start1 = cusp_cluster_normal_form();
    // chain to the (s1^-1 s2 s1)-conjugate of the cusp-cluster normal form
    let chain_inner = BuiltinChain {
        name: "cusp-cluster chain to s1^-1 s2 s1 conjugate",
        start: start1.clone(),
        script: MoveScript {
            moves: vec![
                Move::SlideInv(2),
                Move::SlideInv(1),
                Move::SlideInv(2),
                Move::SlideInv(3),
                Move::Slide(2),
                Move::Slide(2),
            ],
        },
        end: conj_fact(&start1, &w4("s1^-1 s2 s1")),
    };
    // chain to the Delta_4 conjugate: exchanging the commuting tail factors
    let chain_delta = BuiltinChain {
        name: "cusp-cluster chain to Delta_4 conjugate",
        start: start1.clone(),
        script: MoveScript {
            moves: vec![Move::Slide(3)],
        },
        end: conj_fact(&start1, &delta4(4)),
    };
    // vt-cluster: simultaneous conjugation by s1^2 plus the double slide
    // carries the factorization to its Delta_4 conjugate
    let start2 = vt_cluster_factorization();
    let chain_vt = BuiltinChain {
        name: "vt-cluster chain to Delta_4 conjugate",
        start: start2.clone(),
        script: MoveScript {
            moves: vec![
                Move::ConjAll(w4("s1 s1")),
                Move::Slide(1),
                Move::Slide(3),
            ],
        },
        end: conj_fact(&start2, &delta4(4)),
    };
    // stabilization chain: simultaneous conjugation by s1^2 from creation,
    // slides and cancellation of the admissible pair alone
    let chain_stab = BuiltinChain {
        name: "stabilization chain realizing s1^2 conjugation",
        start: start2.clone(),
        script: MoveScript {
            moves: vec![
                Move::Create(1, w4("s1^-1 s1^-1")),
                Move::Slide(2),
                Move::Slide(3),
                Move::Slide(4),
                Move::Slide(5),
                Move::Slide(5),
                Move::Slide(4),
                Move::Slide(3),
                Move::Slide(2),
                Move::Slide(1),
                Move::Cancel(1),
            ],
        },
        end: conj_fact(&start2, &w4("s1 s1")),
    };
    vec![chain_inner, chain_delta, chain_vt, chain_stab]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::Layout;

    fn f4(words: &[&str]) -> Factorization {
        fact4(words)
    }

    #[test]
    fn slide_definition() {
        let f = f4(&["s1", "s2"]);
        let g = apply_move(&f, &Move::Slide(1)).unwrap();
        assert_eq!(g.factors()[0], w4("s1 s2 s1^-1"));
        assert_eq!(g.factors()[1], w4("s1"));
    }

    #[test]
    fn slide_then_inverse_is_identity() {
        let f = f4(&["s1 s2", "s3 s1^-1", "s2 s2"]);
        for i in 1..=2 {
            let g = apply_move(&f, &Move::Slide(i)).unwrap();
            let h = apply_move(&g, &Move::SlideInv(i)).unwrap();
            assert!(h.equals(&f).unwrap());
        }
    }

    #[test]
    fn create_then_cancel_restores() {
        let f = f4(&["s1", "s2"]);
        let g = apply_move(&f, &Move::Create(1, w4("s1 s1"))).unwrap();
        assert_eq!(g.len(), 4);
        let h = apply_move(&g, &Move::Cancel(1)).unwrap();
        assert!(h.equals(&f).unwrap());
        // cancel on a non-inverse pair is rejected
        assert!(matches!(
            apply_move(&f, &Move::Cancel(1)),
            Err(MoveError::CancelNotInverse { .. })
        ));
    }

    #[test]
    fn product_is_slide_invariant_and_conj_covariant() {
        let f = f4(&["s1 s2", "s3", "s2 s2 s1^-1"]);
        let p = f.product();
        for mv in [Move::Slide(1), Move::Slide(2), Move::SlideInv(2)] {
            let g = apply_move(&f, &mv).unwrap();
            assert!(braids_equal(&g.product(), &p).unwrap());
        }
        let g = apply_move(&f, &Move::ConjAll(w4("s2 s1"))).unwrap();
        assert!(braids_equal(&g.product(), &p.conjugate_by(&w4("s2 s1")).unwrap()).unwrap());
    }

    #[test]
    fn permutation_class_multiset_is_slide_invariant() {
        let f = f4(&["s1 s2", "s3", "s2 s2 s1^-1"]);
        let classes = f.permutation_class_multiset();
        let g = apply_move(&f, &Move::Slide(2)).unwrap();
        assert_eq!(g.permutation_class_multiset(), classes);
    }

    #[test]
    fn builtin_chains_verify() {
        for chain in builtin_chains() {
            assert!(
                verify_script(&chain.start, &chain.script, &chain.end).unwrap(),
                "chain failed: {}",
                chain.name
            );
        }
    }

    #[test]
    fn vt_cluster_product_and_centralizer() {
        let f = vt_cluster_factorization();
        let target = delta4(4)
            .compose(&w4("s1^-1 s1^-1 s3^-1 s3^-1"))
            .unwrap()
            .pow(2);
        assert!(braids_equal(&f.product(), &target).unwrap());
        assert!(centralizes(&delta4(4), &target).unwrap());
        assert!(centralizes(&w4("s1"), &target).unwrap());
    }

    #[test]
    fn cusp_cluster_centralizer_members() {
        let p = cusp_cluster_normal_form().product();
        assert!(braids_equal(&p, &w4("s2 s2 s2 s1 s3 s2 s1 s1 s3 s3")).unwrap());
        assert!(centralizes(&delta4(4), &p).unwrap());
        assert!(centralizes(&w4("s1^-1 s2 s1"), &p).unwrap());
    }

    #[test]
    fn admissibility() {
        let l = Layout::new(3, 3);
        assert!(is_admissible_pair(&l, &StructuredTwist { arc: ArcId::P(2), exponent: 2 }).unwrap());
        assert!(is_admissible_pair(&l, &StructuredTwist { arc: ArcId::Q(1), exponent: -2 }).unwrap());
        assert!(!is_admissible_pair(&l, &StructuredTwist { arc: ArcId::A(1, 2), exponent: 2 }).unwrap());
        assert!(!is_admissible_pair(&l, &StructuredTwist { arc: ArcId::P(1), exponent: 1 }).unwrap());
    }

    #[test]
    fn search_finds_trivial_and_short_scripts() {
        let f = f4(&["s1", "s2"]);
        match orbit_search(&f, &f, &MoveMenu::slides_only(), 5, 1000).unwrap() {
            SearchOutcome::Found(s) => assert!(s.moves.is_empty()),
            other => panic!("expected empty script, got {other:?}"),
        }
        let g = apply_move(&f, &Move::Slide(1)).unwrap();
        match orbit_search(&f, &g, &MoveMenu::slides_only(), 5, 1000).unwrap() {
            SearchOutcome::Found(s) => {
                assert_eq!(s.moves.len(), 1);
                assert!(verify_script(&f, &s, &g).unwrap());
            }
            other => panic!("expected script of length 1, got {other:?}"),
        }
    }

    #[test]
    fn search_reports_product_mismatch() {
        let f = Factorization::new(3, vec![BraidWord::parse(3, "s1").unwrap(), BraidWord::parse(3, "s2").unwrap()]).unwrap();
        let g = Factorization::new(3, vec![BraidWord::parse(3, "s2").unwrap(), BraidWord::parse(3, "s1").unwrap()]).unwrap();
        assert_eq!(
            orbit_search(&f, &g, &MoveMenu::slides_only(), 3, 1000).unwrap(),
            SearchOutcome::ProductMismatch
        );
    }

    #[test]
    fn search_finds_builtin_chain_within_depth() {
        let chains = builtin_chains();
        let chain = &chains[0];
        match orbit_search(&chain.start, &chain.end, &MoveMenu::slides_only(), 12, 200_000).unwrap()
        {
            SearchOutcome::Found(s) => {
                assert!(s.moves.len() <= 6);
                assert!(verify_script(&chain.start, &s, &chain.end).unwrap());
            }
            other => panic!("expected a script, got {other:?}"),
        }
    }

    #[test]
    fn script_text_round_trip() {
        let script = MoveScript {
            moves: vec![
                Move::Slide(2),
                Move::SlideInv(1),
                Move::ConjAll(w4("s1 s1")),
                Move::Create(3, w4("s2")),
                Move::Cancel(3),
            ],
        };
        let text = script.to_text();
        assert_eq!(MoveScript::parse(4, &text).unwrap(), script);
    }
}
