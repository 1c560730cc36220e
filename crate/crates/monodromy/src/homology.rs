//! Z/2 homology of the associated triple cover: the distinguished basis,
//! intersection and quadratic forms, cycle classes of arcs, symplectic
//! transvections, the rho invariant, and the stable-equivalence comparator.

use crate::error::{HomologyError, LayoutError};
use crate::layout::{triple_cover_class, ArcId, SurfaceParams, TripleCoverCase};
use std::fmt;

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Vector {
    len: usize,
    bits: Vec<u64>,
}

impl GF2Vector {
    pub fn zero(len: usize) -> Self {
        GF2Vector {
            len,
            bits: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, k: usize) -> Self {
        let mut v = Self::zero(len);
        v.set(k, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, k: usize) -> bool {
        debug_assert!(k < self.len);
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn set(&mut self, k: usize, value: bool) {
        debug_assert!(k < self.len);
        if value {
            self.bits[k / 64] |= 1 << (k % 64);
        } else {
            self.bits[k / 64] &= !(1 << (k % 64));
        }
    }

    pub fn add_assign(&mut self, other: &GF2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn plus(&self, other: &GF2Vector) -> GF2Vector {
        let mut v = self.clone();
        v.add_assign(other);
        v
    }

    pub fn dot(&self, other: &GF2Vector) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u32;
        for (a, b) in self.bits.iter().zip(&other.bits) {
            acc ^= (a & b).count_ones() & 1;
        }
        acc == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&k| self.get(k)).collect()
    }
}

impl fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.len {
            write!(f, "{}", u8::from(self.get(k)))?;
        }
        Ok(())
    }
}

/// A matrix over GF(2), stored by rows.
#[derive(Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: Vec<GF2Vector>,
}

impl GF2Matrix {
    pub fn zero(n: usize) -> Self {
        GF2Matrix {
            rows: vec![GF2Vector::zero(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for k in 0..n {
            m.rows[k].set(k, true);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.rows[i].set(j, v);
    }

    pub fn row(&self, i: usize) -> &GF2Vector {
        &self.rows[i]
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &GF2Vector) -> GF2Vector {
        let mut out = GF2Vector::zero(self.dim());
        for (i, row) in self.rows.iter().enumerate() {
            out.set(i, row.dot(v));
        }
        out
    }

    pub fn multiply(&self, other: &GF2Matrix) -> GF2Matrix {
        let n = self.dim();
        let mut out = GF2Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = false;
                for k in 0..n {
                    acc ^= self.get(i, k) && other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn transpose(&self) -> GF2Matrix {
        let n = self.dim();
        let mut out = GF2Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Solve M x = rhs by Gaussian elimination; `None` when singular.
    pub fn solve(&self, rhs: &GF2Vector) -> Option<GF2Vector> {
        let n = self.dim();
        let mut m = self.rows.clone();
        let mut b = rhs.clone();
        let mut pivot_col_of_row = vec![usize::MAX; n];
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| m[r].get(col)) else {
                continue;
            };
            m.swap(row, p);
            let (bi, bp) = (b.get(row), b.get(p));
            b.set(row, bp);
            b.set(p, bi);
            for r in 0..n {
                if r != row && m[r].get(col) {
                    let src = m[row].clone();
                    m[r].add_assign(&src);
                    let v = b.get(r) ^ b.get(row);
                    b.set(r, v);
                }
            }
            pivot_col_of_row[row] = col;
            row += 1;
            if row == n {
                break;
            }
        }
        if row < n {
            // singular: consistent only if the remaining rhs rows vanish
            for r in row..n {
                if b.get(r) {
                    return None;
                }
            }
            return None;
        }
        let mut x = GF2Vector::zero(n);
        for r in 0..n {
            x.set(pivot_col_of_row[r], b.get(r));
        }
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        let n = self.dim();
        let mut m = self.rows.clone();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| m[r].get(col)) else {
                return false;
            };
            m.swap(row, p);
            for r in 0..n {
                if r != row && m[r].get(col) {
                    let src = m[row].clone();
                    m[r].add_assign(&src);
                }
            }
            row += 1;
        }
        true
    }

    /// Row bitstrings, one row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            s.push_str(&format!("{r:?}\n"));
        }
        s
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// The distinguished homology basis: cycle classes over the arcs
/// a_3..a_{2b-1}, p_{2b}, c_{2b-1}..c_1, s, b_1..b_{2d-1}, q_{2d},
/// d_{2d-1}..d_2, in this order. Dimension 4b+4d-4.
pub fn homology_basis(params: SurfaceParams) -> Vec<ArcId> {
    let (b2, d2) = (2 * params.b as usize, 2 * params.d as usize);
    let mut out = Vec::with_capacity(2 * b2 + 2 * d2 - 4);
    for i in 3..b2 {
        out.push(ArcId::A(i, i + 1));
    }
    out.push(ArcId::P(b2));
    for i in (1..b2).rev() {
        out.push(ArcId::C(i, i + 1));
    }
    out.push(ArcId::S(1, 1));
    for j in 1..d2 {
        out.push(ArcId::B(j, j + 1));
    }
    out.push(ArcId::Q(d2));
    for j in (2..d2).rev() {
        out.push(ArcId::D(j, j + 1));
    }
    out
}

pub fn basis_dim(params: SurfaceParams) -> usize {
    (4 * params.b + 4 * params.d - 4) as usize
}

/// Index of the basis vector carried by p_{2b}; the functional delta_p reads
/// this coordinate.
pub fn p_index(params: SurfaceParams) -> usize {
    2 * params.b as usize - 3
}

pub fn q_index(params: SurfaceParams) -> usize {
    // a-run (2b-3) + p + c-run (2b-1) + s + b-run (2d-1)
    (2 * params.b as usize - 3) + 1 + (2 * params.b as usize - 1) + 1 + (2 * params.d as usize - 1)
}

/// The intersection matrix of the basis: tridiagonal with zero diagonal and
/// ones on the secondary diagonals.
pub fn gram_matrix(params: SurfaceParams) -> GF2Matrix {
    let n = basis_dim(params);
    let mut g = GF2Matrix::zero(n);
    for i in 0..n - 1 {
        g.set(i, i + 1, true);
        g.set(i + 1, i, true);
    }
    g
}

/// The quadratic form: upper triangular with Q_ii = 1 and
/// Q_ij = <v_i, v_j> for i < j.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadForm {
    upper: GF2Matrix,
}

pub fn quad_form(params: SurfaceParams) -> QuadForm {
    let n = basis_dim(params);
    let mut q = GF2Matrix::zero(n);
    for i in 0..n {
        q.set(i, i, true);
        if i + 1 < n {
            q.set(i, i + 1, true);
        }
    }
    QuadForm { upper: q }
}

impl QuadForm {
    pub fn dim(&self) -> usize {
        self.upper.dim()
    }

    pub fn matrix(&self) -> &GF2Matrix {
        &self.upper
    }

    /// q(x) = sum_{i<=j} Q_ij x_i x_j. With the tridiagonal upper form this
    /// is the weight of x plus the number of adjacent index pairs in x.
    pub fn eval(&self, x: &GF2Vector) -> bool {
        let mut acc = false;
        let support = x.support();
        for (idx, &i) in support.iter().enumerate() {
            acc ^= self.upper.get(i, i);
            for &j in &support[idx + 1..] {
                acc ^= self.upper.get(i, j);
            }
        }
        acc
    }

    /// The polarized bilinear form q(x+y) + q(x) + q(y).
    pub fn polarize(&self, x: &GF2Vector, y: &GF2Vector) -> bool {
        self.eval(&x.plus(y)) ^ self.eval(x) ^ self.eval(y)
    }
}

/// Mod-2 pairing of the cycle over a case-ii arc with the cycle over a basis
/// arc: one for each shared endpoint, plus the parity of interior crossings
/// in the two-row planar model (arcs along the rows arch over the cables
/// strictly between their endpoints). Interior crossings with the arc s are
/// the fixed special values: s crosses each of p_1, a_1, q_1, d_1 once on
/// its way from D'_1 over the B-row and back under the D''-row, and so it
/// also crosses every longer a_{1j} and d_{1j}; its other interior crossing
/// parities vanish. Endpoints s shares (with q_1, p_1, b_{1j}, c_{1j}) count
/// on top of that, which is what keeps the classes of the p and q arcs in
/// the transvection orbits of p_{2b} and q_{2d}.
fn pairing_with_basis_arc(params: SurfaceParams, v: ArcId, w: ArcId) -> bool {
    let crossings = if let ArcId::S(1, 1) = w {
        match v {
            ArcId::P(1) | ArcId::Q(1) | ArcId::A(1, _) | ArcId::D(1, _) => 1,
            _ => 0,
        }
    } else {
        interior_crossings(params, v, w)
    };
    let shared = shared_endpoints(v, w);
    (shared + crossings) % 2 == 1
}

fn shared_endpoints(v: ArcId, w: ArcId) -> usize {
    let (v1, v2) = v.endpoints();
    let (w1, w2) = w.endpoints();
    [v1, v2]
        .iter()
        .filter(|p| **p == w1 || **p == w2)
        .count()
}

/// Cable coordinate on the real axis: D-cables left of B-cables.
fn cable_x(params: SurfaceParams, p: crate::layout::Puncture) -> i64 {
    match p.kind {
        crate::layout::CableKind::D => 2 * params.d - p.index as i64 + 1,
        crate::layout::CableKind::B => 2 * params.d + p.index as i64,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Band {
    Top,    // arcs on the primed row (a, b)
    Bottom, // arcs on the double-primed row (c, d)
    Vertical,
}

fn band(arc: ArcId) -> Band {
    match arc {
        ArcId::A(..) | ArcId::B(..) => Band::Top,
        ArcId::C(..) | ArcId::D(..) => Band::Bottom,
        _ => Band::Vertical,
    }
}

/// Interior crossing parity in the two-row model. Row arcs rise above the
/// whole configuration exactly over the cables strictly between their
/// endpoints; vertical arcs stay inside their cable.
fn interior_crossings(params: SurfaceParams, v: ArcId, w: ArcId) -> usize {
    let (bv, bw) = (band(v), band(w));
    if bv == Band::Vertical || bw == Band::Vertical {
        return 0;
    }
    let span = |arc: ArcId| {
        let (p1, p2) = arc.endpoints();
        let (x1, x2) = (cable_x(params, p1), cable_x(params, p2));
        (x1.min(x2), x1.max(x2))
    };
    let (v1, v2) = span(v);
    let (w1, w2) = span(w);
    match (bv, bw) {
        // same band: over-arcs cross once iff the endpoint intervals
        // strictly interlock
        (Band::Top, Band::Top) | (Band::Bottom, Band::Bottom) => {
            usize::from(v1 < w1 && w1 < v2 && v2 < w2 || w1 < v1 && v1 < w2 && w2 < v2)
        }
        // opposite bands: a bottom arc reaches above the top row only over
        // its strict interior, crossing a top arc once per top endpoint
        // strictly inside it
        (Band::Top, Band::Bottom) => {
            (usize::from(w1 < v1 && v1 < w2) + usize::from(w1 < v2 && v2 < w2)) % 2
        }
        (Band::Bottom, Band::Top) => {
            (usize::from(v1 < w1 && w1 < v2) + usize::from(v1 < w2 && w2 < v2)) % 2
        }
        _ => 0,
    }
}

/// The cycle class of a case-ii arc in the distinguished basis.
///
/// Basis arcs map to unit vectors; every other case-ii arc is the unique
/// solution x of Gram * x = (pairings with the basis arcs). Case-i arcs
/// (the u family) carry no cycle and are rejected.
pub fn class_of_arc(params: SurfaceParams, arc: ArcId) -> Result<GF2Vector, HomologyError> {
    let layout = params.layout();
    arc.validate(&layout)?;
    if triple_cover_class(&layout, arc)? == TripleCoverCase::I {
        return Err(HomologyError::CaseIArc {
            arc: arc.to_string(),
        });
    }
    let basis = homology_basis(params);
    if let Some(k) = basis.iter().position(|&b| b == arc) {
        return Ok(GF2Vector::unit(basis.len(), k));
    }
    let mut rhs = GF2Vector::zero(basis.len());
    for (k, &w) in basis.iter().enumerate() {
        rhs.set(k, pairing_with_basis_arc(params, arc, w));
    }
    gram_matrix(params)
        .solve(&rhs)
        .ok_or_else(|| HomologyError::Layout(LayoutError::InvalidArc {
            arc: arc.to_string(),
            b: params.b,
            d: params.d,
        }))
}

/// Print a class as a sum of basis labels, `0` when empty.
pub fn class_to_text(params: SurfaceParams, x: &GF2Vector) -> String {
    let basis = homology_basis(params);
    let mut parts = Vec::new();
    for k in x.support() {
        let arc = basis[k];
        let label = match arc {
            ArcId::A(i, _) => format!("a~{i}"),
            ArcId::B(j, _) => format!("b~{j}"),
            ArcId::C(i, _) => format!("c~{i}"),
            ArcId::D(j, _) => format!("d~{j}"),
            ArcId::P(i) => format!("p~{i}"),
            ArcId::Q(j) => format!("q~{j}"),
            ArcId::S(..) => "s~".to_string(),
            _ => arc.to_string(),
        };
        parts.push(label);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// The transvection T_w: z -> z + <w,z> w, as a matrix.
pub fn transvection(params: SurfaceParams, w: &GF2Vector) -> GF2Matrix {
    let gram = gram_matrix(params);
    let gw = gram.apply(w);
    let n = w.len();
    let mut t = GF2Matrix::identity(n);
    for i in 0..n {
        if w.get(i) {
            for j in 0..n {
                if gw.get(j) {
                    let cur = t.get(i, j);
                    t.set(i, j, cur ^ true);
                }
            }
        }
    }
    t
}

/// One letter of a structured monodromy word: an arc with a power.
pub type GeneratorLetter = (ArcId, i32);

/// Image in Sp(H_1(Y, Z/2)) of a structured word in the monodromy-group
/// generator letters together with the stabilizing half-twists on p and q
/// arcs. Case-ii letters at odd powers map to the transvection on the arc's
/// class, even powers of case-ii letters and cubes (or any multiple of
/// three) on case-i letters map to the identity; anything else does not lift.
pub fn symplectic_image(
    params: SurfaceParams,
    word: &[GeneratorLetter],
) -> Result<GF2Matrix, HomologyError> {
    let layout = params.layout();
    let mut acc = GF2Matrix::identity(basis_dim(params));
    for &(arc, power) in word {
        arc.validate(&layout)?;
        let case = triple_cover_class(&layout, arc)?;
        let factor = match case {
            TripleCoverCase::I => {
                if power.rem_euclid(3) != 0 {
                    return Err(HomologyError::NotLiftable {
                        arc: arc.to_string(),
                        power,
                    });
                }
                // the lift of the cube is a half twist on the arc preimage,
                // isotopic to the identity on homology
                None
            }
            TripleCoverCase::II => {
                if power.rem_euclid(2) == 0 {
                    None
                } else {
                    Some(transvection(params, &class_of_arc(params, arc)?))
                }
            }
        };
        if let Some(t) = factor {
            acc = acc.multiply(&t);
        }
    }
    Ok(acc)
}

/// rho(x) = delta_p(x) + q(x), the coordinate at p~_{2b} plus the quadratic
/// form.
pub fn rho(params: SurfaceParams, x: &GF2Vector) -> bool {
    x.get(p_index(params)) ^ quad_form(params).eval(x)
}

/// The transvection generators of Gamma: classes of the adjacent a, b, c, d
/// arcs and of s.
pub fn gamma_generator_classes(params: SurfaceParams) -> Result<Vec<GF2Vector>, HomologyError> {
    let (b2, d2) = (2 * params.b as usize, 2 * params.d as usize);
    let mut arcs = Vec::new();
    for i in 1..b2 {
        arcs.push(ArcId::A(i, i + 1));
        arcs.push(ArcId::C(i, i + 1));
    }
    for j in 1..d2 {
        arcs.push(ArcId::B(j, j + 1));
        arcs.push(ArcId::D(j, j + 1));
    }
    arcs.push(ArcId::S(1, 1));
    arcs.into_iter().map(|a| class_of_arc(params, a)).collect()
}

/// True iff rho separates the node orbits: rho takes different values on
/// the classes of p_{2b} and q_{2d}, and is invariant under every
/// Gamma-generator transvection (checked on all basis vectors).
pub fn orbits_separated(params: SurfaceParams) -> Result<bool, HomologyError> {
    let n = basis_dim(params);
    let p_class = class_of_arc(params, ArcId::P(2 * params.b as usize))?;
    let q_class = class_of_arc(params, ArcId::Q(2 * params.d as usize))?;
    if rho(params, &p_class) == rho(params, &q_class) {
        return Ok(false);
    }
    for w in gamma_generator_classes(params)? {
        let t = transvection(params, &w);
        for k in 0..n {
            let e = GF2Vector::unit(n, k);
            if rho(params, &t.apply(&e)) != rho(params, &e) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The stable-equivalence invariant: the strand count together with the
/// unordered pair of absolute weighted node counts.
pub fn stable_invariant(params: SurfaceParams) -> Result<(usize, (i64, i64)), HomologyError> {
    if !orbits_separated(params)? {
        // the pair is only an invariant once the two node classes differ
        return Err(HomologyError::Layout(LayoutError::InvalidParams {
            a: params.a,
            b: params.b,
            c: params.c,
            d: params.d,
        }));
    }
    let (a, b, c, d) = (params.a, params.b, params.c, params.d);
    let wp = (8 * a * b - 2 * (a * d + b * c)).abs();
    let wq = (8 * c * d - 2 * (a * d + b * c)).abs();
    Ok((params.strand_count(), (wp.min(wq), wp.max(wq))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareVerdict {
    Distinguished,
    NotDistinguished,
    Inconclusive,
}

impl fmt::Display for CompareVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompareVerdict::Distinguished => write!(f, "Distinguished"),
            CompareVerdict::NotDistinguished => write!(f, "NotDistinguished"),
            CompareVerdict::Inconclusive => write!(f, "Inconclusive"),
        }
    }
}

/// The parameter symmetries that leave the covering unchanged: the role swap
/// (a,b,c,d) -> (c,d,a,b) and the factor swap (a,b,c,d) -> (b,a,d,c).
pub fn symmetry_orbit(p: SurfaceParams) -> Vec<SurfaceParams> {
    let tuple = |a, b, c, d| SurfaceParams { a, b, c, d };
    vec![
        p,
        tuple(p.c, p.d, p.a, p.b),
        tuple(p.b, p.a, p.d, p.c),
        tuple(p.d, p.c, p.b, p.a),
    ]
}

/// Compare two parameter sets: `NotDistinguished` for symmetry-equivalent
/// parameters, `Distinguished` when the strand counts or invariant pairs
/// differ, `Inconclusive` otherwise.
pub fn compare_surfaces(
    p1: SurfaceParams,
    p2: SurfaceParams,
) -> Result<(CompareVerdict, (usize, (i64, i64)), (usize, (i64, i64))), HomologyError> {
    let inv1 = stable_invariant(p1)?;
    let inv2 = stable_invariant(p2)?;
    if symmetry_orbit(p1).contains(&p2) {
        return Ok((CompareVerdict::NotDistinguished, inv1, inv2));
    }
    if inv1 != inv2 {
        Ok((CompareVerdict::Distinguished, inv1, inv2))
    } else {
        Ok((CompareVerdict::Inconclusive, inv1, inv2))
    }
}
