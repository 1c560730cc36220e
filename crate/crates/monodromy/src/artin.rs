//! The Artin action of Br_n on the free group F_n and the equality oracle.
//!
//! Convention, fixed here once for the whole crate: the generator acts by
//!
//! ```text
//! sigma_i:  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i,   others fixed,
//! ```
//!
//! and a word acts letter by letter with the *last* letter applied first, so
//! that `artin_action(compose(u, v)) = artin_action(u) o artin_action(v)`
//! (composition `(f o g)(x) = f(g(x))`). The action is faithful, which makes
//! letter-exact comparison of reduced images a complete equality test.
//!
//! Free words are reduced eagerly after every substitution. Pathological
//! growth is cut off by a letter budget (default 10^6 letters, overridable
//! through the `MONODROMY_LETTER_BUDGET` environment variable) and surfaces
//! as a clean resource error.

use crate::braid::BraidWord;
use crate::error::BraidError;
use std::fmt;
use std::sync::OnceLock;

pub const DEFAULT_LETTER_BUDGET: usize = 1_000_000;

static LETTER_BUDGET: OnceLock<usize> = OnceLock::new();

/// The active letter budget. Read from `MONODROMY_LETTER_BUDGET` once.
pub fn letter_budget() -> usize {
    *LETTER_BUDGET.get_or_init(|| {
        std::env::var("MONODROMY_LETTER_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_LETTER_BUDGET)
    })
}

/// A freely reduced word in F_n; letter `+k`/`-k` is the k-th free generator
/// (1-based) or its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn generator(k: usize) -> Self {
        FreeWord {
            letters: vec![k as i32],
        }
    }

    pub fn from_letters(letters: Vec<i32>) -> Self {
        let mut w = FreeWord { letters: Vec::with_capacity(letters.len()) };
        for l in letters {
            w.push(l);
        }
        w
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

    fn push(&mut self, letter: i32) {
        debug_assert!(letter != 0);
        if self.letters.last() == Some(&-letter) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    fn extend_reduced(&mut self, other: &FreeWord) {
        for &l in &other.letters {
            self.push(l);
        }
    }

    fn extend_inverse_reduced(&mut self, other: &FreeWord) {
        for &l in other.letters.iter().rev() {
            self.push(-l);
        }
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({:?})", self.letters)
    }
}

/// An automorphism of F_n given by the reduced images of the generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    strand_count: usize,
    images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(n: usize) -> Self {
        FreeAutomorphism {
            strand_count: n,
            images: (1..=n).map(FreeWord::generator).collect(),
        }
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.letters() == [(k + 1) as i32])
    }

    /// Image of a free word under the automorphism.
    pub fn apply(&self, w: &FreeWord, budget: usize) -> Result<FreeWord, BraidError> {
        let mut out = FreeWord::default();
        for &l in w.letters() {
            let image = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.extend_reduced(image);
            } else {
                out.extend_inverse_reduced(image);
            }
            if out.len() > budget {
                return Err(BraidError::LetterBudget { budget });
            }
        }
        Ok(out)
    }

    /// self o other (apply `other` first).
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<FreeAutomorphism, BraidError> {
        let budget = letter_budget();
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w, budget))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FreeAutomorphism {
            strand_count: self.strand_count,
            images,
        })
    }
}

impl fmt::Debug for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeAutomorphism(n={})", self.strand_count)?;
        for (k, w) in self.images.iter().enumerate() {
            write!(f, " x{}->{:?}", k + 1, w.letters())?;
        }
        Ok(())
    }
}

/// Apply one braid letter to a free word: substitute the generator images of
/// sigma_i^(±1) into `w`, reducing as we go.
fn apply_letter(letter: i32, w: &FreeWord, budget: usize) -> Result<FreeWord, BraidError> {
    let i = letter.unsigned_abs() as i32;
    let mut out = FreeWord::default();
    let emit = |l: i32, out: &mut FreeWord| {
        out.push(l);
    };
    for &l in w.letters() {
        let k = l.abs();
        if k == i {
            if letter > 0 {
                // x_i -> x_i x_{i+1} x_i^-1
                if l > 0 {
                    emit(i, &mut out);
                    emit(i + 1, &mut out);
                    emit(-i, &mut out);
                } else {
                    emit(i, &mut out);
                    emit(-(i + 1), &mut out);
                    emit(-i, &mut out);
                }
            } else {
                // sigma_i^-1: x_i -> x_{i+1}
                emit(l.signum() * (i + 1), &mut out);
            }
        } else if k == i + 1 {
            if letter > 0 {
                // x_{i+1} -> x_i
                emit(l.signum() * i, &mut out);
            } else {
                // sigma_i^-1: x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
                if l > 0 {
                    emit(-(i + 1), &mut out);
                    emit(i, &mut out);
                    emit(i + 1, &mut out);
                } else {
                    emit(-(i + 1), &mut out);
                    emit(-i, &mut out);
                    emit(i + 1, &mut out);
                }
            }
        } else {
            emit(l, &mut out);
        }
        if out.len() > budget {
            return Err(BraidError::LetterBudget { budget });
        }
    }
    Ok(out)
}

/// Image of a single free word under the action of a braid word
/// (last letter of the braid word acts first).
pub fn act_on_word(w: &BraidWord, x: &FreeWord) -> Result<FreeWord, BraidError> {
    let budget = letter_budget();
    let mut cur = x.clone();
    for &l in w.letters().iter().rev() {
        cur = apply_letter(l, &cur, budget)?;
    }
    Ok(cur)
}

/// The Artin automorphism of a braid word.
///
/// Built by folding letters left to right with composition on the right,
/// which touches only the two images the letter acts on.
pub fn artin_action(w: &BraidWord) -> Result<FreeAutomorphism, BraidError> {
    let n = w.strand_count();
    let budget = letter_budget();
    let mut images: Vec<FreeWord> = (1..=n).map(FreeWord::generator).collect();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        if l > 0 {
            // phi o sigma_i: x_i -> phi(x_i x_{i+1} x_i^-1), x_{i+1} -> phi(x_i)
            let mut new_i = images[i].clone();
            new_i.extend_reduced(&images[i + 1]);
            new_i.extend_inverse_reduced(&images[i]);
            if new_i.len() > budget {
                return Err(BraidError::LetterBudget { budget });
            }
            images.swap(i, i + 1);
            images[i] = new_i;
        } else {
            // phi o sigma_i^-1: x_i -> phi(x_{i+1}), x_{i+1} -> phi(x_{i+1}^-1 x_i x_{i+1})
            let mut new_next = FreeWord::default();
            new_next.extend_inverse_reduced(&images[i + 1]);
            new_next.extend_reduced(&images[i]);
            new_next.extend_reduced(&images[i + 1]);
            if new_next.len() > budget {
                return Err(BraidError::LetterBudget { budget });
            }
            images.swap(i, i + 1);
            images[i + 1] = new_next;
        }
    }
    Ok(FreeAutomorphism {
        strand_count: n,
        images,
    })
}

/// True iff the braid word acts trivially, i.e. represents the identity.
pub fn is_identity_braid(w: &BraidWord) -> Result<bool, BraidError> {
    // test generators one at a time so a budget blowup on a later generator
    // cannot mask an early mismatch
    for k in 1..=w.strand_count() {
        let image = act_on_word(w, &FreeWord::generator(k))?;
        if image.letters() != [k as i32] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Group-level equality via faithfulness of the Artin action.
pub fn braids_equal(u: &BraidWord, v: &BraidWord) -> Result<bool, BraidError> {
    if u.strand_count() != v.strand_count() {
        return Err(BraidError::StrandCountMismatch {
            left: u.strand_count(),
            right: v.strand_count(),
        });
    }
    is_identity_braid(&u.compose(&v.inverse())?.free_reduce())
}
