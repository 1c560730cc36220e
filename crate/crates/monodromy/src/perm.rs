//! Permutations of {1..n} and the S4 -> S3 quotient by the Klein four-group.

use std::fmt;

/// A permutation of {1..n}, stored as 0-based images.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Transposition (i j), 1-based.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= n && j <= n && i != j);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Perm { images }
    }

    pub fn from_images_zero_based(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &im in &images {
            assert!(im < images.len() && !seen[im], "not a permutation");
            seen[im] = true;
        }
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// self followed by other: (self * other)(x) = other(self(x)).
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Perm { images }
    }

    /// g self g^-1.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(self);
            k += 1;
        }
        k
    }

    /// True if the permutation is a transposition.
    pub fn is_transposition(&self) -> bool {
        self.images.iter().enumerate().filter(|(i, &im)| *i != im).count() == 2
    }

    /// The two points (1-based) moved by a transposition.
    pub fn moved_pair(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (1..=self.degree()).filter(|&x| self.apply(x) != x).collect();
        match moved.as_slice() {
            [i, j] => Some((*i, *j)),
            _ => None,
        }
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.then(other) == other.then(self)
    }

    /// Cycles of the permutation (1-based), singletons included, each cycle
    /// starting at its least element, cycles sorted by least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Sorted cycle lengths, identifying the S_n-conjugacy class.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable();
        t
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The quotient S4 -> S3 with kernel the Klein four-group, realized as the
/// action of S4 on the three partitions of {1,2,3,4} into pairs:
/// 1 <-> {12|34}, 2 <-> {13|24}, 3 <-> {14|23}.
pub fn s4_to_s3(g: &Perm) -> Perm {
    assert_eq!(g.degree(), 4);
    // partition k is determined by the partner of 1 (0-based here):
    // partner 2 -> partition 0, partner 3 -> partition 1, partner 4 -> partition 2
    let partition_of = |pair_of_one: usize| pair_of_one - 2;
    let mut images = vec![0usize; 3];
    for partner in 2..=4 {
        // apply g to the pair {1, partner}; the image partition is named by
        // the partner of 1 in the image
        let a = g.apply(1);
        let b = g.apply(partner);
        let (x, y) = if a == 1 || b == 1 {
            (a, b)
        } else {
            // the image pair does not contain 1; its complement does
            let mut rest: Vec<usize> = (1..=4).filter(|&t| t != a && t != b).collect();
            rest.sort_unstable();
            (rest[0], rest[1])
        };
        let partner_of_one = if x == 1 { y } else { x };
        images[partition_of(partner)] = partition_of(partner_of_one);
    }
    Perm::from_images_zero_based(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize, j: usize) -> Perm {
        Perm::transposition(4, i, j)
    }

    #[test]
    fn klein_group_is_kernel() {
        for (i, j, k, l) in [(1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3)] {
            let v = t(i, j).then(&t(k, l));
            assert!(s4_to_s3(&v).is_identity());
        }
        assert!(s4_to_s3(&Perm::identity(4)).is_identity());
    }

    #[test]
    fn same_coset_same_image() {
        assert_eq!(s4_to_s3(&t(1, 2)), s4_to_s3(&t(3, 4)));
        assert_eq!(s4_to_s3(&t(1, 3)), s4_to_s3(&t(2, 4)));
        assert_eq!(s4_to_s3(&t(1, 4)), s4_to_s3(&t(2, 3)));
        assert_ne!(s4_to_s3(&t(1, 2)), s4_to_s3(&t(1, 3)));
    }

    #[test]
    fn surjection_is_homomorphism() {
        let gens = [t(1, 2), t(2, 3), t(3, 4)];
        for g in &gens {
            for h in &gens {
                assert_eq!(s4_to_s3(&g.then(h)), s4_to_s3(g).then(&s4_to_s3(h)));
            }
        }
    }

    #[test]
    fn product_of_noncommuting_transpositions_has_order_three() {
        let g = t(1, 2).then(&t(1, 3));
        assert_eq!(s4_to_s3(&g).order(), 3);
    }

    #[test]
    fn cycle_decomposition() {
        let g = t(1, 4).then(&t(2, 3));
        assert_eq!(g.cycle_type(), vec![2, 2]);
        assert_eq!(format!("{g}"), "(1 4)(2 3)");
    }
}
