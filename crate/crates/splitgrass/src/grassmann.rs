//! Plücker coordinates for subspaces of projective space.
//!
//! A codimension-d subspace of P^N is stored by its d x (N+1) matrix of
//! defining equations, and its Plücker coordinates are the d x d maximal
//! minors of that equation matrix, listed over strictly increasing column
//! tuples in lexicographic order (p_{01..}, p_{01..(d+1)}, ...). This is the
//! convention under which the banded-matrix minors of the Veronese embedding
//! come out exactly as displayed elsewhere in the crate; it differs from
//! basis-matrix coordinates by the usual complementary-index duality.

use std::collections::HashMap;
use std::fmt;

use crate::comb::{binomial, increasing_tuples};
use crate::exactla::{FieldSpec, Mat, Scalar, VecSubspace};
use crate::{Error, Result};

/// Bijection between increasing d-tuples from 0..m and 0..C(m,d)-1 in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct TupleIndex {
    m: usize,
    k: usize,
    tuples: Vec<Vec<usize>>,
    positions: HashMap<Vec<usize>, usize>,
}

impl TupleIndex {
    pub fn new(m: usize, k: usize) -> Self {
        let tuples = increasing_tuples(m, k);
        let positions = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        TupleIndex { m, k, tuples, positions }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuple(&self, i: usize) -> &[usize] {
        &self.tuples[i]
    }

    pub fn position(&self, t: &[usize]) -> Option<usize> {
        self.positions.get(t).copied()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// A linear subspace of P^N of projective dimension N - d, defined by d
/// independent equations on the coordinates z0..zN.
#[derive(Debug, Clone)]
pub struct Subspace {
    equations: Mat,
}

impl Subspace {
    /// Wraps an equation matrix; rows must be independent.
    pub fn from_equations(equations: Mat) -> Result<Self> {
        if equations.rows() == 0 || equations.cols() == 0 {
            return Err(Error::InvalidInput("empty equation matrix".into()));
        }
        if equations.rank() != equations.rows() {
            return Err(Error::InvalidInput(
                "defining equations must be linearly independent".into(),
            ));
        }
        Ok(Subspace { equations })
    }

    pub fn from_int_equations(field: FieldSpec, rows: &[Vec<i64>]) -> Result<Self> {
        Subspace::from_equations(Mat::from_int_rows(field, rows)?)
    }

    /// The subspace spanned by the given points (as vectors in K^{N+1});
    /// equations are the nullspace of the span.
    pub fn from_spanning_points(
        ambient_cols: usize,
        field: FieldSpec,
        points: &[Vec<Scalar>],
    ) -> Result<Self> {
        let span = VecSubspace::from_spanning(ambient_cols, field, points)?;
        Subspace::from_span(&span)
    }

    pub fn from_span(span: &VecSubspace) -> Result<Self> {
        if span.dim() == 0 {
            return Err(Error::InvalidInput(
                "the empty projective set has no defining subspace here".into(),
            ));
        }
        let eqs = span.basis().nullspace();
        if eqs.is_empty() {
            return Err(Error::InvalidInput(
                "the whole space cannot be represented (no equations)".into(),
            ));
        }
        Subspace::from_equations(Mat::from_rows(span.field(), eqs)?)
    }

    pub fn equations(&self) -> &Mat {
        &self.equations
    }

    pub fn field(&self) -> FieldSpec {
        self.equations.field()
    }

    /// N for the ambient P^N.
    pub fn ambient_n(&self) -> usize {
        self.equations.cols() - 1
    }

    pub fn codim(&self) -> usize {
        self.equations.rows()
    }

    /// Projective dimension N - codim.
    pub fn proj_dim(&self) -> usize {
        self.ambient_n() - self.codim()
    }

    /// The solution set as a linear subspace of K^{N+1}.
    pub fn vec_subspace(&self) -> VecSubspace {
        let ns = self.equations.nullspace();
        VecSubspace::from_spanning(self.equations.cols(), self.field(), &ns)
            .expect("nullspace vectors have ambient length")
    }

    /// Set-theoretic equality (row spaces of the equation matrices agree).
    pub fn same_subspace(&self, other: &Subspace) -> Result<bool> {
        if self.equations.cols() != other.equations.cols()
            || self.field() != other.field()
        {
            return Err(Error::InvalidInput("ambient mismatch".into()));
        }
        let a = VecSubspace::from_spanning(
            self.equations.cols(),
            self.field(),
            &self.equations.row_vecs(),
        )?;
        let b = VecSubspace::from_spanning(
            other.equations.cols(),
            other.field(),
            &other.equations.row_vecs(),
        )?;
        Ok(a == b)
    }

    /// Intersection of two subspaces (union of the equation systems).
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.equations.cols() != other.equations.cols() {
            return Err(Error::InvalidInput("ambient mismatch".into()));
        }
        let stacked = self.equations.vstack(&other.equations)?;
        let span = VecSubspace::from_spanning(
            stacked.cols(),
            stacked.field(),
            &stacked.row_vecs(),
        )?;
        Subspace::from_equations(Mat::from_rows(stacked.field(), span.basis_rows())?)
    }

    /// Membership of a projective point.
    pub fn contains_point(&self, point: &[Scalar]) -> Result<bool> {
        if point.len() != self.equations.cols() {
            return Err(Error::InvalidInput("point has wrong ambient dimension".into()));
        }
        Ok(self.equations.mul_vec(point).iter().all(Scalar::is_zero))
    }
}

/// A vector of Plücker coordinates: the maximal minors of a d x (N+1)
/// equation matrix, indexed by increasing column d-tuples in lex order.
#[derive(Debug, Clone, PartialEq)]
pub struct PlueckerVec {
    m: usize,
    d: usize,
    field: FieldSpec,
    coords: Vec<Scalar>,
}

impl PlueckerVec {
    pub fn new(m: usize, d: usize, field: FieldSpec, coords: Vec<Scalar>) -> Result<Self> {
        let expect = binomial(m, d) as usize;
        if coords.len() != expect {
            return Err(Error::InvalidInput(format!(
                "expected {expect} coordinates for C({m},{d}), got {}",
                coords.len()
            )));
        }
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(Error::InvalidInput(format!(
                "mixed-field coordinates: expected {field}, found {}",
                bad.field()
            )));
        }
        Ok(PlueckerVec { m, d, field, coords })
    }

    pub fn from_ints(m: usize, d: usize, field: FieldSpec, coords: &[i64]) -> Result<Self> {
        PlueckerVec::new(
            m,
            d,
            field,
            coords.iter().map(|&c| Scalar::from_int(c, field)).collect(),
        )
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Coordinate for an arbitrary (possibly unsorted) tuple, with the sign
    /// of the sorting permutation; repeated indices give zero.
    pub fn coord_signed(&self, tuple: &[usize]) -> Scalar {
        let (sorted, sign) = sort_with_sign(tuple);
        if sign == 0 {
            return Scalar::zero(self.field);
        }
        let idx = TupleIndex::new(self.m, self.d);
        let pos = idx.position(&sorted).expect("tuple within range");
        let c = self.coords[pos].clone();
        if sign < 0 {
            -&c
        } else {
            c
        }
    }

    /// Tests all quadratic shuffle relations; their common vanishing
    /// characterizes vectors that arise as the minors of some matrix.
    pub fn is_decomposable(&self) -> bool {
        !self.is_zero() && self.shuffle_violation().is_none()
    }

    /// First violated shuffle relation, as ((d-1)-tuple, (d+1)-tuple), if any.
    pub fn shuffle_violation(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let d = self.d;
        let small = increasing_tuples(self.m, d - 1);
        let big = increasing_tuples(self.m, d + 1);
        let idx = TupleIndex::new(self.m, d);
        for a in &small {
            for b in &big {
                let mut acc = Scalar::zero(self.field);
                for (k, &bk) in b.iter().enumerate() {
                    // p_{a, bk} (signed) * p_{b without bk}
                    let mut t1 = a.clone();
                    t1.push(bk);
                    let (s1, sg1) = sort_with_sign(&t1);
                    if sg1 == 0 {
                        continue;
                    }
                    let c1 = &self.coords[idx.position(&s1).expect("in range")];
                    let t2: Vec<usize> = b
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != k)
                        .map(|(_, &v)| v)
                        .collect();
                    let c2 = &self.coords[idx.position(&t2).expect("in range")];
                    let mut term = c1 * c2;
                    if (sg1 < 0) ^ (k % 2 == 1) {
                        term = -&term;
                    }
                    acc = &acc + &term;
                }
                if !acc.is_zero() {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    /// Projective equality: equal up to one nonzero scalar.
    pub fn proj_equal(&self, other: &PlueckerVec) -> Result<bool> {
        if self.m != other.m || self.d != other.d || self.field != other.field {
            return Err(Error::InvalidInput("shape or field mismatch".into()));
        }
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ok(true),
            (true, false) | (false, true) => return Ok(false),
            _ => {}
        }
        let i = self
            .coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero vector");
        if other.coords[i].is_zero() {
            return Ok(false);
        }
        let lambda = &other.coords[i] / &self.coords[i];
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| &(a * &lambda) == b))
    }

    /// Reconstructs the subspace with these Plücker coordinates.
    ///
    /// Requires a decomposable vector; the returned equations are normalized
    /// to the identity on the first nonzero coordinate's column tuple.
    pub fn subspace_of(&self) -> Result<Subspace> {
        if self.is_zero() {
            return Err(Error::NotDecomposable("zero vector".into()));
        }
        if let Some((a, b)) = self.shuffle_violation() {
            return Err(Error::NotDecomposable(format!(
                "shuffle relation violated at ({a:?}, {b:?})"
            )));
        }
        let idx = TupleIndex::new(self.m, self.d);
        let i0 = self
            .coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero vector");
        let base = idx.tuple(i0).to_vec();
        let pinv = self.coords[i0].inv();
        let mut rows = Vec::with_capacity(self.d);
        for t in 0..self.d {
            let mut row = vec![Scalar::zero(self.field); self.m];
            for c in 0..self.m {
                if let Some(slot) = base.iter().position(|&b| b == c) {
                    row[c] = if slot == t {
                        Scalar::one(self.field)
                    } else {
                        Scalar::zero(self.field)
                    };
                } else {
                    let mut tuple = base.clone();
                    tuple[t] = c;
                    row[c] = &self.coord_signed(&tuple) * &pinv;
                }
            }
            rows.push(row);
        }
        Subspace::from_equations(Mat::from_rows(self.field, rows)?)
    }
}

/// All maximal minors of a matrix with rows <= cols, in lexicographic order
/// of the column tuples. Used both for equation matrices (Plücker
/// coordinates as above) and for basis matrices (classical coordinates).
pub fn maximal_minors(m: &Mat) -> Vec<Scalar> {
    let k = m.rows();
    let idx = TupleIndex::new(m.cols(), k);
    (0..idx.len())
        .map(|i| {
            let cols = idx.tuple(i);
            let sub: Vec<Vec<Scalar>> = (0..k)
                .map(|r| cols.iter().map(|&c| m.get(r, c).clone()).collect())
                .collect();
            Mat::from_rows(m.field(), sub)
                .expect("square minor")
                .det()
        })
        .collect()
}

/// Plücker coordinates of a subspace: maximal minors of its equation matrix.
pub fn pluecker_of(s: &Subspace) -> PlueckerVec {
    let coords = maximal_minors(s.equations());
    PlueckerVec::new(s.equations().cols(), s.equations().rows(), s.field(), coords)
        .expect("minor count matches the binomial")
}

fn sort_with_sign(tuple: &[usize]) -> (Vec<usize>, i32) {
    let mut v = tuple.to_vec();
    let mut sign = 1;
    // insertion sort, counting swaps
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return (v, 0);
        }
    }
    (v, sign)
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

impl fmt::Display for PlueckerVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(Scalar::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl PlueckerVec {
    /// Labeled rendering like `[p_{012}=1, p_{013}=0, ...]`; requires
    /// single-digit column indices (m <= 10).
    pub fn to_labeled_string(&self) -> Result<String> {
        if self.m > 10 {
            return Err(Error::InvalidInput(
                "labeled format needs single-digit indices (m <= 10)".into(),
            ));
        }
        let idx = TupleIndex::new(self.m, self.d);
        let parts: Vec<String> = (0..idx.len())
            .map(|i| {
                let label: String = idx.tuple(i).iter().map(|c| c.to_string()).collect();
                format!("p_{{{label}}}={}", self.coords[i])
            })
            .collect();
        Ok(format!("[{}]", parts.join(", ")))
    }
}

/// Parses either the plain ordered list `[a, b, ...]` (which must match the
/// lexicographic coordinate order) or the labeled form `[p_{012}=a, ...]`
/// (unlisted coordinates default to zero). Rational entries only.
pub fn parse_pluecker(input: &str, m: usize, d: usize) -> Result<PlueckerVec> {
    let text = input.trim();
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse("expected a [...] bracketed vector".into()))?;
    let field = FieldSpec::Rational;
    let idx = TupleIndex::new(m, d);
    let entries: Vec<&str> = inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if entries.is_empty() {
        return Err(Error::Parse("empty vector".into()));
    }
    let labeled = entries[0].starts_with("p_");
    let mut coords = vec![Scalar::zero(field); idx.len()];
    if labeled {
        if m > 10 {
            return Err(Error::Parse("labeled format needs m <= 10".into()));
        }
        for e in entries {
            let (label, value) = e
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected p_{{...}}=value in '{e}'")))?;
            let digits = label
                .trim()
                .strip_prefix("p_{")
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("bad label '{label}'")))?;
            let tuple: Vec<usize> = digits
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|v| v as usize)
                        .ok_or_else(|| Error::Parse(format!("bad index digit '{c}'")))
                })
                .collect::<Result<_>>()?;
            if tuple.len() != d {
                return Err(Error::Parse(format!(
                    "label '{label}' has {} indices, expected {d}",
                    tuple.len()
                )));
            }
            let pos = idx
                .position(&tuple)
                .ok_or_else(|| Error::Parse(format!("label '{label}' is not increasing/in range")))?;
            coords[pos] = crate::polyalg::parse_rational(value.trim())?;
        }
    } else {
        if entries.len() != idx.len() {
            return Err(Error::Parse(format!(
                "expected {} coordinates, got {}",
                idx.len(),
                entries.len()
            )));
        }
        for (i, e) in entries.iter().enumerate() {
            coords[i] = crate::polyalg::parse_rational(e)?;
        }
    }
    PlueckerVec::new(m, d, field, coords)
}
