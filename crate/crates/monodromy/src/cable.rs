//! The 2-cable subgroup CBr_n of Br_2n.
//!
//! CBr_n is generated by the image of the 2-cable homomorphism together with
//! the half-twists inside each cable, and splits as Z^n ⋊ Br_n. Elements are
//! always carried in structured (witnessed) form; there is no membership test
//! for raw words.

use crate::braid::BraidWord;
use crate::error::BraidError;

/// Image of sigma_j under the 2-cable homomorphism Br_n -> Br_2n:
/// sigma'_j = sigma_{2j} sigma_{2j-1} sigma_{2j+1} sigma_{2j}.
pub fn cable_generator(n: usize, j: usize) -> BraidWord {
    assert!(j >= 1 && j < n, "cable generator index out of range");
    let j = j as i32;
    BraidWord::new(2 * n, vec![2 * j, 2 * j - 1, 2 * j + 1, 2 * j]).expect("valid by construction")
}

/// The 2-cable homomorphism on words: sigma_j^±1 -> cable_generator(j)^±1.
pub fn cable_embed(w: &BraidWord) -> BraidWord {
    let n = w.strand_count();
    let mut out = BraidWord::identity(2 * n);
    for &l in w.letters() {
        let g = cable_generator(n, l.unsigned_abs() as usize);
        let g = if l > 0 { g } else { g.inverse() };
        out = out.compose(&g).expect("uniform strand count");
    }
    out
}

/// One letter of a witnessed CBr_n word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CableLetter {
    /// Half-twist inside cable k (1-based), i.e. sigma_{2k-1} in Br_2n.
    InCable { cable: usize, sign: i8 },
    /// Cable generator sigma'_j.
    Cable { index: usize, sign: i8 },
}

/// A word in the generators {in-cable half-twists} ∪ {cable generators}; the
/// structured form is the membership witness for CBr_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CBrWord {
    pub cable_count: usize,
    pub letters: Vec<CableLetter>,
}

impl CBrWord {
    pub fn new(cable_count: usize, letters: Vec<CableLetter>) -> Result<Self, BraidError> {
        for &l in &letters {
            let ok = match l {
                CableLetter::InCable { cable, sign } => {
                    cable >= 1 && cable <= cable_count && sign.abs() == 1
                }
                CableLetter::Cable { index, sign } => {
                    index >= 1 && index < cable_count && sign.abs() == 1
                }
            };
            if !ok {
                return Err(BraidError::LetterOutOfRange {
                    letter: 0,
                    strand_count: 2 * cable_count,
                });
            }
        }
        Ok(CBrWord {
            cable_count,
            letters,
        })
    }

    /// Expand the witness to a word in Br_2n.
    pub fn expand(&self) -> BraidWord {
        let n = self.cable_count;
        let mut out = BraidWord::identity(2 * n);
        for &l in &self.letters {
            let piece = match l {
                CableLetter::InCable { cable, sign } => {
                    BraidWord::gen_pow(2 * n, 2 * cable - 1, sign as i32)
                }
                CableLetter::Cable { index, sign } => {
                    let g = cable_generator(n, index);
                    if sign > 0 {
                        g
                    } else {
                        g.inverse()
                    }
                }
            };
            out = out.compose(&piece).expect("uniform strand count");
        }
        out
    }

    /// The natural projection CBr_n -> Br_n: delete in-cable letters, send
    /// cable generators to the standard generators.
    pub fn project(&self) -> BraidWord {
        let mut letters = Vec::new();
        for &l in &self.letters {
            if let CableLetter::Cable { index, sign } = l {
                letters.push(sign as i32 * index as i32);
            }
        }
        BraidWord::new(self.cable_count, letters).expect("valid by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::braids_equal;

    #[test]
    fn quoted_generator_word() {
        assert_eq!(cable_generator(2, 1), BraidWord::parse(4, "s2 s1 s3 s2").unwrap());
    }

    #[test]
    fn cable_generator_permutation() {
        for (n, j) in [(2, 1), (3, 1), (3, 2), (4, 3)] {
            let p = cable_generator(n, j).permutation();
            assert_eq!(p.apply(2 * j - 1), 2 * j + 1);
            assert_eq!(p.apply(2 * j + 1), 2 * j - 1);
            assert_eq!(p.apply(2 * j), 2 * j + 2);
            assert_eq!(p.apply(2 * j + 2), 2 * j);
        }
    }

    #[test]
    fn cable_generator_permutes_in_cable_twists() {
        // conjugation by sigma'_1 carries the in-cable twist of cable 1 to
        // that of cable 2
        let g = cable_generator(2, 1);
        let lhs = BraidWord::gen(4, 1).conjugate_by(&g).unwrap();
        assert!(braids_equal(&lhs, &BraidWord::gen(4, 3)).unwrap());
    }

    #[test]
    fn in_cable_twists_commute() {
        let a = BraidWord::gen(6, 1);
        let b = BraidWord::gen(6, 5);
        assert!(braids_equal(&a.compose(&b).unwrap(), &b.compose(&a).unwrap()).unwrap());
    }

    #[test]
    fn embed_is_homomorphic_and_projects_back() {
        let u = BraidWord::parse(3, "s1 s2^-1 s1").unwrap();
        let v = BraidWord::parse(3, "s2 s1").unwrap();
        let uv = u.compose(&v).unwrap();
        assert_eq!(
            cable_embed(&uv),
            cable_embed(&u).compose(&cable_embed(&v)).unwrap()
        );
        assert_eq!(cable_embed(&BraidWord::identity(3)), BraidWord::identity(6));

        // section property through the witness
        let witness = CBrWord::new(
            3,
            uv.letters()
                .iter()
                .map(|&l| CableLetter::Cable {
                    index: l.unsigned_abs() as usize,
                    sign: l.signum() as i8,
                })
                .collect(),
        )
        .unwrap();
        assert_eq!(witness.expand(), cable_embed(&uv));
        assert_eq!(witness.project(), uv);
    }

    #[test]
    fn in_cable_twist_projects_to_identity() {
        let w = CBrWord::new(
            2,
            vec![
                CableLetter::InCable { cable: 1, sign: 1 },
                CableLetter::InCable { cable: 1, sign: 1 },
            ],
        )
        .unwrap();
        assert_eq!(w.project(), BraidWord::identity(2));
    }
}
