//! Bigraded arithmetic over the coefficient ring F2[τ,ρ].
//!
//! τ sits in bidegree (0,1) and ρ in bidegree (1,1), so every homogeneous
//! component of the coefficient ring is 0- or 1-dimensional over F2: the
//! monomial τ^a ρ^b of bidegree (s,w) exists iff s ≥ 0 and w ≥ s, and then
//! a = w−s, b = s. Matrix entries are therefore single monomials, and every
//! degreewise computation reduces to bit-packed F2 linear algebra.
//!
//! Kernels of homogeneous maps between graded free modules are computed by a
//! module Buchberger run (position-over-term, graded-lex on (τ,ρ)) over the
//! graph of the map; the result is a certified generating set, minimalized by
//! Gröbner membership. Degree windows are used only for cross-checks.

use crate::f2::BitMatrix;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use thiserror::Error;

/// Bidegree (s, w): cohomological degree and motivic weight.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct BiDegree {
    pub s: i32,
    pub w: i32,
}

impl BiDegree {
    pub const ZERO: BiDegree = BiDegree { s: 0, w: 0 };

    pub fn new(s: i32, w: i32) -> Self {
        BiDegree { s, w }
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.s + o.s, self.w + o.w)
    }
}

impl Sub for BiDegree {
    type Output = BiDegree;
    fn sub(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.s - o.s, self.w - o.w)
    }
}

impl Neg for BiDegree {
    type Output = BiDegree;
    fn neg(self) -> BiDegree {
        BiDegree::new(-self.s, -self.w)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s, self.w)
    }
}

/// A homogeneous element of F2[τ,ρ]: zero, or τ^a ρ^b.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(Option<(u32, u32)>);

impl Monomial {
    pub fn zero() -> Self {
        Monomial(None)
    }

    pub fn one() -> Self {
        Monomial(Some((0, 0)))
    }

    pub fn tau() -> Self {
        Monomial(Some((1, 0)))
    }

    pub fn rho() -> Self {
        Monomial(Some((0, 1)))
    }

    /// τ^a ρ^b.
    pub fn tau_rho(a: u32, b: u32) -> Self {
        Monomial(Some((a, b)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_none()
    }

    pub fn is_one(&self) -> bool {
        self.0 == Some((0, 0))
    }

    /// Exponents (a, b) of τ^a ρ^b, if nonzero.
    pub fn exponents(&self) -> Option<(u32, u32)> {
        self.0
    }

    pub fn bidegree(&self) -> Option<BiDegree> {
        self.0
            .map(|(a, b)| BiDegree::new(b as i32, (a + b) as i32))
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        match (self.0, o.0) {
            (Some((a, b)), Some((c, d))) => Monomial(Some((a + c, b + d))),
            _ => Monomial(None),
        }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        match (self.0, o.0) {
            (Some((a, b)), Some((c, d))) => a <= c && b <= d,
            _ => false,
        }
    }

    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        match (self.0, o.0) {
            (Some((a, b)), Some((c, d))) if c <= a && d <= b => Monomial(Some((a - c, b - d))).into(),
            _ => None,
        }
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        match (self.0, o.0) {
            (Some((a, b)), Some((c, d))) => Monomial(Some((a.max(c), b.max(d)))),
            _ => Monomial(None),
        }
    }

    /// Graded-lex order on nonzero monomials: total degree first, then τ-exponent.
    fn grlex(&self, o: &Monomial) -> std::cmp::Ordering {
        let (a, b) = self.0.expect("grlex on zero");
        let (c, d) = o.0.expect("grlex on zero");
        (a + b, a).cmp(&(c + d, c))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => write!(f, "0"),
            Some((0, 0)) => write!(f, "1"),
            Some((a, b)) => {
                let mut parts = Vec::new();
                match a {
                    0 => {}
                    1 => parts.push("t".to_string()),
                    _ => parts.push(format!("t^{a}")),
                }
                match b {
                    0 => {}
                    1 => parts.push("r".to_string()),
                    _ => parts.push(format!("r^{b}")),
                }
                write!(f, "{}", parts.join(" "))
            }
        }
    }
}

/// The unique monomial of bidegree d, if one exists.
pub fn monomial_for_degree(d: BiDegree) -> Option<Monomial> {
    if d.s >= 0 && d.w >= d.s {
        Some(Monomial::tau_rho((d.w - d.s) as u32, d.s as u32))
    } else {
        None
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("inhomogeneous entry at ({row},{col}): monomial {found} has bidegree {got}, expected {expected}")]
    Inhomogeneous {
        row: usize,
        col: usize,
        found: String,
        got: BiDegree,
        expected: BiDegree,
    },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// A homogeneous F2[τ,ρ]-linear map between graded free modules.
///
/// Rows index domain generators and columns codomain generators; the matrix
/// acts on row vectors. entry(i,j) is the coefficient of codomain generator j
/// in the image of domain generator i and, when nonzero, has bidegree
/// rowdeg(i) + shift − coldeg(j).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMatrix {
    row_degrees: Vec<BiDegree>,
    col_degrees: Vec<BiDegree>,
    shift: BiDegree,
    rows: Vec<Vec<(usize, Monomial)>>,
}

impl GradedMatrix {
    pub fn zero(row_degrees: Vec<BiDegree>, col_degrees: Vec<BiDegree>, shift: BiDegree) -> Self {
        let rows = vec![Vec::new(); row_degrees.len()];
        GradedMatrix {
            row_degrees,
            col_degrees,
            shift,
            rows,
        }
    }

    pub fn identity(degrees: Vec<BiDegree>) -> Self {
        let rows = (0..degrees.len())
            .map(|i| vec![(i, Monomial::one())])
            .collect();
        GradedMatrix {
            row_degrees: degrees.clone(),
            col_degrees: degrees,
            shift: BiDegree::ZERO,
            rows,
        }
    }

    /// Builds from (row, col, monomial) triples, accumulating duplicates mod 2
    /// and checking homogeneity.
    pub fn from_triples(
        row_degrees: Vec<BiDegree>,
        col_degrees: Vec<BiDegree>,
        shift: BiDegree,
        triples: impl IntoIterator<Item = (usize, usize, Monomial)>,
    ) -> Result<Self, CoeffError> {
        let mut acc: BTreeMap<(usize, usize), Monomial> = BTreeMap::new();
        for (i, j, m) in triples {
            if m.is_zero() {
                continue;
            }
            if i >= row_degrees.len() || j >= col_degrees.len() {
                return Err(CoeffError::ShapeMismatch(format!(
                    "entry ({i},{j}) outside {}x{}",
                    row_degrees.len(),
                    col_degrees.len()
                )));
            }
            match acc.remove(&(i, j)) {
                None => {
                    acc.insert((i, j), m);
                }
                Some(prev) => {
                    if prev != m {
                        return Err(CoeffError::ShapeMismatch(format!(
                            "conflicting monomials at ({i},{j})"
                        )));
                    }
                    // prev + m = 0 mod 2: entry cancels
                }
            }
        }
        let mut rows = vec![Vec::new(); row_degrees.len()];
        for ((i, j), m) in acc {
            let expected = row_degrees[i] + shift - col_degrees[j];
            let got = m.bidegree().unwrap();
            if got != expected {
                return Err(CoeffError::Inhomogeneous {
                    row: i,
                    col: j,
                    found: m.to_string(),
                    got,
                    expected,
                });
            }
            rows[i].push((j, m));
        }
        Ok(GradedMatrix {
            row_degrees,
            col_degrees,
            shift,
            rows,
        })
    }

    pub fn row_degrees(&self) -> &[BiDegree] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[BiDegree] {
        &self.col_degrees
    }

    pub fn shift(&self) -> BiDegree {
        self.shift
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Monomial {
        self.rows[i]
            .iter()
            .find(|(c, _)| *c == j)
            .map(|(_, m)| *m)
            .unwrap_or_else(Monomial::zero)
    }

    pub fn row(&self, i: usize) -> &[(usize, Monomial)] {
        &self.rows[i]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, Monomial)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |&(j, m)| (i, j, m)))
    }

    /// Composition "self, then g" (self: A→B, g: B→C); shifts add.
    pub fn then(&self, g: &GradedMatrix) -> Result<GradedMatrix, CoeffError> {
        if self.col_degrees != g.row_degrees {
            return Err(CoeffError::ShapeMismatch(
                "inner degrees do not match in composition".into(),
            ));
        }
        let mut triples = Vec::new();
        for i in 0..self.nrows() {
            for &(k, m) in &self.rows[i] {
                for &(j, n) in &g.rows[k] {
                    triples.push((i, j, m.mul(&n)));
                }
            }
        }
        GradedMatrix::from_triples(
            self.row_degrees.clone(),
            g.col_degrees.clone(),
            self.shift + g.shift,
            triples,
        )
    }

    pub fn add(&self, o: &GradedMatrix) -> Result<GradedMatrix, CoeffError> {
        if self.row_degrees != o.row_degrees
            || self.col_degrees != o.col_degrees
            || self.shift != o.shift
        {
            return Err(CoeffError::ShapeMismatch("addition shape mismatch".into()));
        }
        GradedMatrix::from_triples(
            self.row_degrees.clone(),
            self.col_degrees.clone(),
            self.shift,
            self.triples().chain(o.triples()),
        )
    }

    /// Left-multiply every entry by a nonzero monomial; the shift absorbs its degree.
    pub fn scale(&self, m: Monomial) -> GradedMatrix {
        assert!(!m.is_zero(), "scale by zero monomial");
        let d = m.bidegree().unwrap();
        GradedMatrix {
            row_degrees: self.row_degrees.clone(),
            col_degrees: self.col_degrees.clone(),
            shift: self.shift + d,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&(j, e)| (j, m.mul(&e))).collect())
                .collect(),
        }
    }

    /// Same entries, all generator degrees translated by d (the shift is unchanged).
    pub fn translate_degrees(&self, d: BiDegree) -> GradedMatrix {
        GradedMatrix {
            row_degrees: self.row_degrees.iter().map(|&x| x + d).collect(),
            col_degrees: self.col_degrees.iter().map(|&x| x + d).collect(),
            shift: self.shift,
            rows: self.rows.clone(),
        }
    }

    /// The F2 matrix of the map from the degree-d component of the domain to
    /// the degree-(d + shift) component of the codomain, in the bases listed
    /// by [`component_basis`].
    pub fn realize(&self, d: BiDegree) -> BitMatrix {
        let dom = component_basis(&self.row_degrees, d);
        let cod = component_basis(&self.col_degrees, d + self.shift);
        let mut cod_pos: Vec<Option<usize>> = vec![None; self.col_degrees.len()];
        for (p, &(j, _)) in cod.iter().enumerate() {
            cod_pos[j] = Some(p);
        }
        let mut m = BitMatrix::zeros(dom.len(), cod.len());
        for (p, &(i, mono)) in dom.iter().enumerate() {
            for &(j, e) in &self.rows[i] {
                let prod = mono.mul(&e);
                if let Some(q) = cod_pos[j] {
                    // prod is automatically the unique monomial in that slot
                    debug_assert_eq!(Some(prod), monomial_for_degree(d + self.shift - self.col_degrees[j]));
                    m.set(p, q, true);
                }
            }
        }
        m
    }
}

/// Basis of the degree-d component of a free module: (generator index, the
/// unique monomial landing there), in generator order.
pub fn component_basis(degrees: &[BiDegree], d: BiDegree) -> Vec<(usize, Monomial)> {
    degrees
        .iter()
        .enumerate()
        .filter_map(|(i, &g)| monomial_for_degree(d - g).map(|m| (i, m)))
        .collect()
}

/// Degreewise dimensions of the free module on `degrees` over a rectangular window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertWindow {
    pub lo: BiDegree,
    pub hi: BiDegree,
    pub dims: BTreeMap<BiDegree, usize>,
}

pub fn hilbert_window(degrees: &[BiDegree], lo: BiDegree, hi: BiDegree) -> HilbertWindow {
    let mut dims = BTreeMap::new();
    for s in lo.s..=hi.s {
        for w in lo.w..=hi.w {
            let d = BiDegree::new(s, w);
            dims.insert(d, component_basis(degrees, d).len());
        }
    }
    HilbertWindow { lo, hi, dims }
}

// ---------------------------------------------------------------------------
// Syzygies
// ---------------------------------------------------------------------------

/// A homogeneous element of a graded free module, stored as its nonzero
/// coordinates (position, monomial), sorted by position.
#[derive(Clone, PartialEq, Eq, Debug)]
struct HVec {
    degree: BiDegree,
    terms: Vec<(usize, Monomial)>,
}

impl HVec {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term under position-over-term (earlier positions dominate).
    fn lt(&self) -> (usize, Monomial) {
        self.terms[0]
    }

    fn xor_add(&self, o: &HVec) -> HVec {
        debug_assert_eq!(self.degree, o.degree);
        let mut terms = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), o.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(p, m)), Some(&&(q, n))) => {
                    if p < q {
                        terms.push((p, m));
                        a.next();
                    } else if q < p {
                        terms.push((q, n));
                        b.next();
                    } else {
                        debug_assert_eq!(m, n, "same slot, same degree: monomials must agree");
                        a.next();
                        b.next();
                    }
                }
                (Some(_), None) => {
                    terms.extend(a.by_ref().copied());
                    break;
                }
                (None, Some(_)) => {
                    terms.extend(b.by_ref().copied());
                    break;
                }
                (None, None) => break,
            }
        }
        HVec {
            degree: self.degree,
            terms,
        }
    }

    fn scale(&self, m: &Monomial) -> HVec {
        HVec {
            degree: self.degree + m.bidegree().unwrap(),
            terms: self
                .terms
                .iter()
                .map(|&(p, e)| (p, m.mul(&e)))
                .collect(),
        }
    }
}

/// Top-reduce v against basis (a Gröbner basis for membership tests).
fn reduce(mut v: HVec, basis: &[HVec]) -> HVec {
    'outer: while !v.is_zero() {
        let (p, m) = v.lt();
        for g in basis {
            let (q, n) = g.lt();
            if q == p && n.divides(&m) {
                let factor = m.div(&n).unwrap();
                v = v.xor_add(&g.scale(&factor));
                continue 'outer;
            }
        }
        break;
    }
    v
}

/// Buchberger for submodules of graded free modules over F2[τ,ρ], with
/// position-over-term order (graded-lex on monomials).
fn groebner(mut basis: Vec<HVec>) -> Vec<HVec> {
    basis.retain(|v| !v.is_zero());
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (pi, mi) = basis[i].lt();
        let (pj, mj) = basis[j].lt();
        if pi != pj {
            continue;
        }
        let l = mi.lcm(&mj);
        let s = basis[i]
            .scale(&l.div(&mi).unwrap())
            .xor_add(&basis[j].scale(&l.div(&mj).unwrap()));
        let r = reduce(s, &basis);
        if !r.is_zero() {
            let k = basis.len();
            for t in 0..k {
                pairs.push((t, k));
            }
            basis.push(r);
        }
    }
    basis
}

fn member(v: &HVec, gb: &[HVec]) -> bool {
    reduce(v.clone(), gb).is_zero()
}

/// Minimal homogeneous generating set of the kernel of a homogeneous map,
/// returned as the inclusion matrix (rows = kernel generators, columns = the
/// domain generators of f, shift (0,0)).
///
/// The kernel of a map of graded free modules over the graded local ring
/// F2[τ,ρ] is free, so the minimal generating set is a basis. Correctness is
/// certified by the Buchberger computation on the graph module: codomain
/// positions dominate, so Gröbner elements supported on the domain positions
/// generate exactly the syzygy module.
pub fn syzygy_basis(f: &GradedMatrix) -> GradedMatrix {
    let ng = f.ncols();
    // Graph vectors (f(e_i), e_i) in G ⊕ F with G-positions first.
    let mut start = Vec::new();
    for i in 0..f.nrows() {
        let mut terms: Vec<(usize, Monomial)> = f.rows[i].clone();
        terms.push((ng + i, Monomial::one()));
        start.push(HVec {
            degree: f.row_degrees[i] + f.shift,
            terms,
        });
    }
    let gb = groebner(start);
    let mut syz: Vec<HVec> = gb
        .into_iter()
        .filter(|v| !v.is_zero() && v.lt().0 >= ng)
        .map(|v| HVec {
            degree: v.degree - f.shift,
            terms: v.terms.iter().map(|&(p, m)| (p - ng, m)).collect(),
        })
        .collect();
    syz.sort_by_key(|v| (v.degree, v.terms.clone()));
    syz.dedup();

    // Drop generators already in the module generated by the others.
    let mut keep: Vec<HVec> = syz;
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..keep.len() {
            let others: Vec<HVec> = keep
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, v)| v.clone())
                .collect();
            if others.is_empty() {
                continue;
            }
            let gb = groebner(others.clone());
            if member(&keep[i], &gb) {
                keep.remove(i);
                changed = true;
                break;
            }
        }
    }

    let row_degrees: Vec<BiDegree> = keep.iter().map(|v| v.degree).collect();
    GradedMatrix::from_triples(
        row_degrees,
        f.row_degrees.clone(),
        BiDegree::ZERO,
        keep.iter()
            .enumerate()
            .flat_map(|(i, v)| v.terms.iter().map(move |&(p, m)| (i, p, m))),
    )
    .expect("syzygy generators are homogeneous by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: i32, w: i32) -> BiDegree {
        BiDegree::new(s, w)
    }

    #[test]
    fn monomial_for_degree_cases() {
        assert_eq!(monomial_for_degree(d(0, 0)), Some(Monomial::one()));
        assert_eq!(monomial_for_degree(d(1, 1)), Some(Monomial::rho()));
        assert_eq!(monomial_for_degree(d(0, 1)), Some(Monomial::tau()));
        // (2,1) would need b=2, a=−1
        assert_eq!(monomial_for_degree(d(2, 1)), None);
        assert_eq!(monomial_for_degree(d(-1, 0)), None);
        assert_eq!(
            monomial_for_degree(d(2, 5)),
            Some(Monomial::tau_rho(3, 2))
        );
    }

    #[test]
    fn monomial_bidegree_roundtrip() {
        for a in 0..5u32 {
            for b in 0..5u32 {
                let m = Monomial::tau_rho(a, b);
                assert_eq!(monomial_for_degree(m.bidegree().unwrap()), Some(m));
            }
        }
    }

    fn mul_by(m: Monomial) -> GradedMatrix {
        // multiplication R → R by a monomial
        GradedMatrix::from_triples(
            vec![d(0, 0)],
            vec![d(0, 0)],
            m.bidegree().unwrap(),
            [(0, 0, m)],
        )
        .unwrap()
    }

    #[test]
    fn compose_identity_and_monomials() {
        let f = mul_by(Monomial::tau());
        let id = GradedMatrix::identity(vec![d(0, 0)]);
        assert_eq!(id.then(&f).unwrap(), f);
        assert_eq!(f.then(&id).unwrap(), f);
        let g = mul_by(Monomial::rho());
        let fg = f.then(&g).unwrap();
        assert_eq!(fg.entry(0, 0), Monomial::tau_rho(1, 1));
        assert_eq!(fg.shift(), d(1, 2));
    }

    #[test]
    fn koszul_composite_is_zero() {
        // R → R² by (τ, ρ) followed by R² → R by (ρ, τ)ᵗ: τρ + ρτ = 0.
        let first = GradedMatrix::from_triples(
            vec![d(0, 0)],
            vec![d(0, 1), d(1, 1)],
            d(1, 2),
            [(0, 0, Monomial::rho()), (0, 1, Monomial::tau())],
        )
        .unwrap();
        let second = GradedMatrix::from_triples(
            vec![d(0, 1), d(1, 1)],
            vec![d(1, 2)],
            d(1, 2),
            [(0, 0, Monomial::rho()), (1, 0, Monomial::tau())],
        )
        .unwrap();
        assert!(first.then(&second).unwrap().is_zero());
    }

    #[test]
    fn inhomogeneous_entry_rejected() {
        let r = GradedMatrix::from_triples(
            vec![d(0, 0)],
            vec![d(0, 0)],
            d(1, 0),
            [(0, 0, Monomial::tau())],
        );
        assert!(matches!(r, Err(CoeffError::Inhomogeneous { .. })));
    }

    #[test]
    fn realize_multiplication_by_tau() {
        let f = mul_by(Monomial::tau());
        // degree (0,1): τ-slot maps to τ² slot
        let m = f.realize(d(0, 1));
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert!(m.get(0, 0));
        // degree (1,0): empty component
        let m = f.realize(d(1, 0));
        assert_eq!(m.rows(), 0);
        // zero matrix realizes to zero
        let z = GradedMatrix::zero(vec![d(0, 0)], vec![d(0, 0)], d(0, 1));
        assert!(z.realize(d(0, 1)).is_zero());
    }

    #[test]
    fn realize_functorial() {
        let f = mul_by(Monomial::tau());
        let g = mul_by(Monomial::rho());
        let fg = f.then(&g).unwrap();
        for s in 0..4 {
            for w in 0..4 {
                let dd = d(s, w);
                let lhs = fg.realize(dd);
                let rhs = f.realize(dd).mul(&g.realize(dd + f.shift()));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn hilbert_window_free_rank_one() {
        let h = hilbert_window(&[d(0, 0)], d(0, 0), d(1, 1));
        assert_eq!(h.dims[&d(0, 0)], 1);
        assert_eq!(h.dims[&d(0, 1)], 1);
        assert_eq!(h.dims[&d(1, 1)], 1);
        assert_eq!(h.dims[&d(1, 0)], 0);
        let empty = hilbert_window(&[], d(0, 0), d(2, 2));
        assert!(empty.dims.values().all(|&v| v == 0));
    }

    #[test]
    fn syzygy_koszul() {
        // f = (τ ρ): R² → R. Kernel generated by (ρ, τ).
        let f = GradedMatrix::from_triples(
            vec![d(0, 1), d(1, 1)],
            vec![d(0, 0)],
            d(0, 0),
            [(0, 0, Monomial::tau()), (1, 0, Monomial::rho())],
        )
        .unwrap();
        let k = syzygy_basis(&f);
        assert_eq!(k.nrows(), 1);
        assert_eq!(k.row_degrees()[0], d(1, 2));
        assert_eq!(k.entry(0, 0), Monomial::rho());
        assert_eq!(k.entry(0, 1), Monomial::tau());
        assert!(k.then(&f).unwrap().is_zero());
    }

    #[test]
    fn syzygy_identity_empty() {
        let id = GradedMatrix::identity(vec![d(0, 0), d(1, 0)]);
        let k = syzygy_basis(&id);
        assert_eq!(k.nrows(), 0);
    }

    #[test]
    fn syzygy_projection() {
        // f: R² → R killing the second generator: kernel = e₂.
        let f = GradedMatrix::from_triples(
            vec![d(0, 0), d(2, 1)],
            vec![d(0, 0)],
            d(0, 0),
            [(0, 0, Monomial::one())],
        )
        .unwrap();
        let k = syzygy_basis(&f);
        assert_eq!(k.nrows(), 1);
        assert_eq!(k.row_degrees()[0], d(2, 1));
        assert_eq!(k.entry(0, 1), Monomial::one());
    }

    /// Brute-force cross-check: realized syzygy span = degreewise kernel.
    fn check_syzygy_window(f: &GradedMatrix, lo: BiDegree, hi: BiDegree) {
        let k = syzygy_basis(f);
        assert!(k.then(f).unwrap().is_zero());
        for s in lo.s..=hi.s {
            for w in lo.w..=hi.w {
                let dd = d(s, w);
                let span = k.realize(dd);
                let fm = f.realize(dd);
                let ker = fm.kernel();
                // same dimension and containment both ways
                let span_rank = span.rank();
                let ker_rank = ker.len();
                assert_eq!(
                    span_rank, ker_rank,
                    "syzygy span vs kernel at {dd}: {span_rank} vs {ker_rank}"
                );
                for i in 0..span.rows() {
                    assert!(span.row(i).apply(&fm).is_zero());
                }
            }
        }
    }

    #[test]
    fn syzygy_vs_bruteforce_small() {
        let f = GradedMatrix::from_triples(
            vec![d(0, 1), d(1, 1), d(0, 0)],
            vec![d(0, 0), d(0, 1)],
            d(0, 1),
            [
                (0, 0, Monomial::tau_rho(2, 0)),
                (0, 1, Monomial::tau()),
                (1, 0, Monomial::tau_rho(0, 1)),
                (2, 1, Monomial::one()),
            ],
        )
        .unwrap();
        check_syzygy_window(&f, d(0, 0), d(6, 6));
    }
}
