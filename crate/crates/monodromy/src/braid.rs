//! Words in the standard generators of the disk braid group on n strands.
//!
//! A word stores its letters verbatim; group-level equality is decided by the
//! Artin action in [`crate::artin`]. Letters are encoded as nonzero integers,
//! `+i` for the generator exchanging strands i, i+1 and `-i` for its inverse.

use crate::error::BraidError;
use crate::perm::Perm;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strand_count: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        BraidWord {
            strand_count: n,
            letters: Vec::new(),
        }
    }

    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        for &l in &letters {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i >= n {
                return Err(BraidError::LetterOutOfRange { letter: l, strand_count: n });
            }
        }
        Ok(BraidWord {
            strand_count: n,
            letters,
        })
    }

    /// sigma_i (1-based).
    pub fn gen(n: usize, i: usize) -> Self {
        Self::new(n, vec![i as i32]).expect("generator index out of range")
    }

    /// sigma_i^k (k may be negative).
    pub fn gen_pow(n: usize, i: usize, k: i32) -> Self {
        let letter = if k >= 0 { i as i32 } else { -(i as i32) };
        Self::new(n, vec![letter; k.unsigned_abs() as usize]).expect("generator index out of range")
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strand_count != other.strand_count {
            return Err(BraidError::StrandCountMismatch {
                left: self.strand_count,
                right: other.strand_count,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strand_count: self.strand_count,
            letters,
        })
    }

    /// Concatenation of many words of a common strand count.
    pub fn product<'a>(n: usize, words: impl IntoIterator<Item = &'a BraidWord>) -> Result<BraidWord, BraidError> {
        let mut acc = BraidWord::identity(n);
        for w in words {
            acc = acc.compose(w)?;
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strand_count: self.strand_count,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// g self g^-1.
    pub fn conjugate_by(&self, g: &BraidWord) -> Result<BraidWord, BraidError> {
        g.compose(self)?.compose(&g.inverse())
    }

    /// self^k for k in Z.
    pub fn pow(&self, k: i32) -> BraidWord {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strand_count: self.strand_count,
            letters,
        }
    }

    /// Cancel adjacent sigma_i sigma_i^-1 pairs. This is a word-level
    /// simplification only; it does not decide group equality.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strand_count: self.strand_count,
            letters: out,
        }
    }

    /// Image under the abelianization Br_n -> Z.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Image under Br_n -> S_n (strand s starts at position s; the letter
    /// sigma_i^±1 exchanges the strands currently at positions i, i+1).
    pub fn permutation(&self) -> Perm {
        let mut at_position: Vec<usize> = (0..self.strand_count).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at_position.swap(i, i + 1);
        }
        // at_position[p] = strand ending at position p; permutation maps start -> end
        let mut images = vec![0usize; self.strand_count];
        for (pos, &strand) in at_position.iter().enumerate() {
            images[strand] = pos;
        }
        Perm::from_images_zero_based(images)
    }

    /// Linking matrix of the closure, indexed by closure components.
    ///
    /// Components are the cycles of [`Self::permutation`]; the entry for a
    /// pair of distinct components is half the signed count of crossings
    /// between strands of the two components, and diagonal entries are zero.
    /// Returns the component list (strand sets, 1-based) and the matrix.
    pub fn linking_matrix(&self) -> (Vec<Vec<usize>>, Vec<Vec<i64>>) {
        let components = self.permutation().cycles();
        let mut comp_of_strand = vec![0usize; self.strand_count];
        for (ci, comp) in components.iter().enumerate() {
            for &s in comp {
                comp_of_strand[s - 1] = ci;
            }
        }
        let m = components.len();
        let mut twice_lk = vec![vec![0i64; m]; m];
        let mut at_position: Vec<usize> = (0..self.strand_count).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (s, t) = (at_position[i], at_position[i + 1]);
            let (cs, ct) = (comp_of_strand[s], comp_of_strand[t]);
            if cs != ct {
                let sign = l.signum() as i64;
                twice_lk[cs][ct] += sign;
                twice_lk[ct][cs] += sign;
            }
            at_position.swap(i, i + 1);
        }
        let lk = twice_lk
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| {
                        debug_assert!(x % 2 == 0, "inter-component crossings come in pairs");
                        x / 2
                    })
                    .collect()
            })
            .collect();
        (components, lk)
    }

    /// Parse the whitespace-separated syntax `s<i>` / `s<i>^-1`, with `e` for
    /// the empty word.
    pub fn parse(n: usize, text: &str) -> Result<BraidWord, BraidError> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens == ["e"] {
            return Ok(BraidWord::identity(n));
        }
        let mut letters = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let bad = || BraidError::Parse {
                token: tok.to_string(),
            };
            let rest = tok.strip_prefix('s').ok_or_else(bad)?;
            let (digits, sign) = match rest.strip_suffix("^-1") {
                Some(d) => (d, -1i32),
                None => (rest, 1i32),
            };
            let i: i32 = digits.parse().map_err(|_| bad())?;
            if i < 1 {
                return Err(bad());
            }
            letters.push(sign * i);
        }
        BraidWord::new(n, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, &l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord[n={}]({})", self.strand_count, self)
    }
}

/// Delta_4 = s1 s2 s3 s1 s2 s1, the half twist on four strands (here in Br_n
/// on the first four strands when n >= 4).
pub fn delta4(n: usize) -> BraidWord {
    BraidWord::new(n, vec![1, 2, 3, 1, 2, 1]).expect("n must be at least 4")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn parse_print_round_trip() {
        for text in ["e", "s1", "s2 s2 s2 s1 s3 s2 s3^-1 s1^-1"] {
            let word = w(4, text);
            assert_eq!(word.to_string(), text);
            assert_eq!(w(4, &word.to_string()), word);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(BraidWord::parse(4, "s0").is_err());
        assert!(BraidWord::parse(4, "s4").is_err());
        assert!(BraidWord::parse(4, "x1").is_err());
        assert!(BraidWord::parse(4, "s1^2").is_err());
    }

    #[test]
    fn compose_is_concatenation() {
        let a = w(4, "s2 s2 s2");
        let b = w(4, "s1 s3 s2 s3^-1 s1^-1");
        assert_eq!(a.compose(&b).unwrap(), w(4, "s2 s2 s2 s1 s3 s2 s3^-1 s1^-1"));
        assert_eq!(a.compose(&BraidWord::identity(4)).unwrap(), a);
        assert!(a.compose(&BraidWord::identity(5)).is_err());
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(BraidWord::identity(4).exponent_sum(), 0);
        assert_eq!(w(4, "s2 s2 s2 s1 s3 s2 s1 s1 s3 s3").exponent_sum(), 10);
        let word = delta4(4)
            .pow(2)
            .compose(&BraidWord::gen_pow(4, 1, -2))
            .unwrap()
            .compose(&BraidWord::gen_pow(4, 3, -2))
            .unwrap();
        assert_eq!(word.exponent_sum(), 8);
    }

    #[test]
    fn permutations() {
        assert!(w(4, "s1 s1").permutation().is_identity());
        assert_eq!(w(4, "s1").permutation(), Perm::transposition(4, 1, 2));
        // Delta_4 reverses the strand order
        assert_eq!(format!("{}", delta4(4).permutation()), "(1 4)(2 3)");
    }

    #[test]
    fn linking_of_torus_closures() {
        let (comps, lk) = BraidWord::gen_pow(2, 1, 4).linking_matrix();
        assert_eq!(comps.len(), 2);
        assert_eq!(lk[0][1], 2);
        assert_eq!(lk[0][0], 0);

        let (comps, lk) = BraidWord::identity(2).linking_matrix();
        assert_eq!(comps.len(), 2);
        assert!(lk.iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn free_reduction() {
        assert_eq!(w(4, "s1 s2 s2^-1 s1^-1 s3").free_reduce(), w(4, "s3"));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_word(n: usize) -> impl Strategy<Value = BraidWord> {
            prop::collection::vec((1..n as i32, prop::bool::ANY), 0..24).prop_map(move |ls| {
                BraidWord::new(n, ls.into_iter().map(|(i, s)| if s { i } else { -i }).collect())
                    .unwrap()
            })
        }

        proptest! {
            #[test]
            fn parse_print_round_trips(word in arb_word(6)) {
                let text = word.to_string();
                prop_assert_eq!(BraidWord::parse(6, &text).unwrap(), word);
            }

            #[test]
            fn inverse_reduces_to_identity(word in arb_word(5)) {
                let reduced = word.compose(&word.inverse()).unwrap().free_reduce();
                prop_assert!(reduced.is_empty());
            }

            #[test]
            fn permutation_is_homomorphic(u in arb_word(6), v in arb_word(6)) {
                let uv = u.compose(&v).unwrap();
                prop_assert_eq!(uv.permutation(), u.permutation().then(&v.permutation()));
            }

            #[test]
            fn linking_matrix_is_symmetric(word in arb_word(6)) {
                let (_, lk) = word.linking_matrix();
                for i in 0..lk.len() {
                    prop_assert_eq!(lk[i][i], 0);
                    for j in 0..lk.len() {
                        prop_assert_eq!(lk[i][j], lk[j][i]);
                    }
                }
            }
        }
    }
}
