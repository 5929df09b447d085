//! Homogeneous polynomials in x0..xn with exact coefficients.
//!
//! Monomials of a fixed degree are ordered graded-lex with x0 > x1 > ... > xn,
//! so for n = 2, d = 3 the order is x0^3, x0^2*x1, x0^2*x2, x0*x1^2, ...,
//! x2^3. `MonomialIndex` realizes the order as a bijection with 0..C(n+d,d)-1.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed};

use crate::comb::{binomial, exponent_tuples};
use crate::exactla::{FieldSpec, Mat, Scalar};
use crate::{Error, Result};

/// Bijection between exponent tuples of a fixed degree and their positions in
/// graded-lex order (x0 largest).
#[derive(Debug, Clone)]
pub struct MonomialIndex {
    nvars: usize,
    degree: u32,
    tuples: Vec<Vec<u32>>,
    positions: BTreeMap<Vec<u32>, usize>,
}

impl MonomialIndex {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let tuples = exponent_tuples(nvars, degree);
        let positions = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        MonomialIndex { nvars, degree, tuples, positions }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn tuple(&self, i: usize) -> &[u32] {
        &self.tuples[i]
    }

    pub fn position(&self, tuple: &[u32]) -> Option<usize> {
        self.positions.get(tuple).copied()
    }
}

/// A homogeneous polynomial of known degree; no zero coefficients are stored,
/// and the zero polynomial is an empty term map carrying its nominal degree.
#[derive(Debug, Clone, PartialEq)]
pub struct HomPoly {
    nvars: usize,
    degree: u32,
    field: FieldSpec,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl HomPoly {
    pub fn zero(nvars: usize, degree: u32, field: FieldSpec) -> Self {
        HomPoly { nvars, degree, field, terms: BTreeMap::new() }
    }

    /// Single monomial c * x^e; a zero coefficient yields the zero polynomial.
    pub fn monomial(nvars: usize, exponents: &[u32], coeff: Scalar) -> Result<Self> {
        if exponents.len() != nvars {
            return Err(Error::InvalidInput(format!(
                "exponent tuple has arity {} but the polynomial has {nvars} variables",
                exponents.len()
            )));
        }
        let degree = exponents.iter().sum();
        let mut p = HomPoly::zero(nvars, degree, coeff.field());
        if !coeff.is_zero() {
            p.terms.insert(exponents.to_vec(), coeff);
        }
        Ok(p)
    }

    /// The linear form c0*x0 + ... + cn*xn.
    pub fn linear_form(coeffs: &[Scalar]) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("linear form needs at least one variable".into()));
        }
        let field = coeffs[0].field();
        let nvars = coeffs.len();
        let mut p = HomPoly::zero(nvars, 1, field);
        for (i, c) in coeffs.iter().enumerate() {
            if c.field() != field {
                return Err(Error::InvalidInput("mixed-field coefficients".into()));
            }
            if !c.is_zero() {
                let mut e = vec![0u32; nvars];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        Ok(p)
    }

    pub fn linear_form_int(coeffs: &[i64], field: FieldSpec) -> Self {
        let cs: Vec<Scalar> = coeffs.iter().map(|&c| Scalar::from_int(c, field)).collect();
        HomPoly::linear_form(&cs).expect("integer linear form is well-formed")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex descending order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Scalar {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    fn insert_add(&mut self, e: Vec<u32>, c: Scalar) {
        debug_assert_eq!(e.iter().sum::<u32>(), self.degree);
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let s = &*existing + &c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = s;
                }
            }
            None => {
                if !c.is_zero() {
                    self.terms.insert(e, c);
                }
            }
        }
    }

    pub fn add(&self, other: &HomPoly) -> HomPoly {
        assert_eq!(self.nvars, other.nvars, "arity mismatch in add");
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &HomPoly) -> HomPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HomPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> HomPoly {
        if s.is_zero() {
            return HomPoly::zero(self.nvars, self.degree, self.field);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = &*c * s;
        }
        out
    }

    pub fn multiply(&self, other: &HomPoly) -> HomPoly {
        assert_eq!(self.nvars, other.nvars, "arity mismatch in multiply");
        let mut out = HomPoly::zero(self.nvars, self.degree + other.degree, self.field);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_add(e, c1 * c2);
            }
        }
        out
    }

    pub fn power(&self, k: u32) -> HomPoly {
        let mut acc = HomPoly::monomial(self.nvars, &vec![0; self.nvars], Scalar::one(self.field))
            .expect("constant one");
        for _ in 0..k {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> HomPoly {
        assert!(var < self.nvars, "variable index out of range");
        let newdeg = self.degree.saturating_sub(1);
        let mut out = HomPoly::zero(self.nvars, newdeg, self.field);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[var] -= 1;
            out.insert_add(ne, c * &Scalar::from_int(e[var] as i64, self.field));
        }
        out
    }

    /// Coefficient vector in the graded-lex order of `idx`.
    pub fn coeff_vector(&self, idx: &MonomialIndex) -> Result<Vec<Scalar>> {
        if idx.nvars() != self.nvars || idx.degree() != self.degree {
            return Err(Error::InvalidInput(format!(
                "index is for {} vars degree {}, polynomial has {} vars degree {}",
                idx.nvars(),
                idx.degree(),
                self.nvars,
                self.degree
            )));
        }
        let mut v = vec![Scalar::zero(self.field); idx.len()];
        for (e, c) in &self.terms {
            let pos = idx.position(e).expect("stored tuple is in the index");
            v[pos] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coeff_vector(idx: &MonomialIndex, v: &[Scalar], field: FieldSpec) -> Result<Self> {
        if v.len() != idx.len() {
            return Err(Error::InvalidInput(format!(
                "coefficient vector length {} does not match index size {}",
                v.len(),
                idx.len()
            )));
        }
        let mut p = HomPoly::zero(idx.nvars(), idx.degree(), field);
        for (i, c) in v.iter().enumerate() {
            if c.field() != field {
                return Err(Error::InvalidInput("mixed-field coefficients".into()));
            }
            if !c.is_zero() {
                p.terms.insert(idx.tuple(i).to_vec(), c.clone());
            }
        }
        Ok(p)
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::InvalidInput(format!(
                "evaluation point has arity {}, polynomial has {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut acc = Scalar::zero(self.field);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (p, &exp) in point.iter().zip(e.iter()) {
                if exp > 0 {
                    t = &t * &p.pow(exp);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Substitutes x_i -> (row i of `a`) . (y0..y_{m-1}); `a` is
    /// nvars x m, and the result is a form of the same degree in m variables.
    pub fn compose_linear(&self, a: &Mat) -> Result<HomPoly> {
        if a.rows() != self.nvars {
            return Err(Error::InvalidInput(format!(
                "substitution matrix has {} rows, polynomial has {} variables",
                a.rows(),
                self.nvars
            )));
        }
        let m = a.cols();
        let rows: Vec<HomPoly> = (0..self.nvars)
            .map(|i| {
                let coeffs: Vec<Scalar> = (0..m).map(|j| a.get(i, j).clone()).collect();
                HomPoly::linear_form(&coeffs)
            })
            .collect::<Result<_>>()?;
        let mut out = HomPoly::zero(m, self.degree, self.field);
        for (e, c) in &self.terms {
            let mut t = HomPoly::monomial(m, &vec![0; m], c.clone())?;
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    t = t.multiply(&rows[i].power(exp));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Exact division: returns q with self = q * divisor, or an error when the
    /// divisor does not divide. The quotient is re-multiplied as a final check.
    pub fn divide_exact(&self, divisor: &HomPoly) -> Result<HomPoly> {
        if divisor.is_zero() {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        }
        if divisor.nvars != self.nvars {
            return Err(Error::InvalidInput("arity mismatch in division".into()));
        }
        if divisor.degree > self.degree {
            return Err(Error::NotDivisible(format!(
                "divisor degree {} exceeds dividend degree {}",
                divisor.degree, self.degree
            )));
        }
        let qdeg = self.degree - divisor.degree;
        let mut q = HomPoly::zero(self.nvars, qdeg, self.field);
        let mut rem = self.clone();
        let (ge, gc) = divisor.leading().expect("nonzero divisor");
        while let Some((le, lc)) = rem.leading() {
            let mut diff = Vec::with_capacity(self.nvars);
            for (a, b) in le.iter().zip(ge.iter()) {
                if a < b {
                    return Err(Error::NotDivisible(
                        "leading term not divisible by divisor's leading term".into(),
                    ));
                }
                diff.push(a - b);
            }
            let t = HomPoly::monomial(self.nvars, &diff, lc / gc)?;
            rem = rem.sub(&t.multiply(divisor));
            q = q.add(&t);
        }
        // exactness double-check by re-multiplication
        if q.multiply(divisor) != *self {
            return Err(Error::NotDivisible("re-multiplication check failed".into()));
        }
        Ok(q)
    }
}

/// Determinant of a small square matrix of polynomials (Laplace expansion
/// along the first row). Entries must share arity and degree.
pub fn poly_det(entries: &[Vec<HomPoly>]) -> HomPoly {
    let n = entries.len();
    assert!(n > 0, "empty polynomial determinant");
    assert!(entries.iter().all(|r| r.len() == n), "non-square input");
    let nvars = entries[0][0].nvars();
    let edeg = entries[0][0].degree();
    let field = entries[0][0].field();
    if n == 1 {
        return entries[0][0].clone();
    }
    let mut acc = HomPoly::zero(nvars, edeg * n as u32, field);
    for (j, e) in entries[0].iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        let minor: Vec<Vec<HomPoly>> = entries[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = e.multiply(&poly_det(&minor));
        acc = if j % 2 == 0 { acc.add(&cof) } else { acc.sub(&cof) };
    }
    acc
}

/// Rank of the (n+1) x C(n+d-1, d-1) matrix whose rows are the coefficient
/// vectors of the first partials. A value <= 2 means the form can be written
/// in two variables after a linear change of coordinates, hence is a product
/// of linear forms over the algebraic closure.
pub fn essential_vars_rank(f: &HomPoly) -> usize {
    if f.is_zero() || f.degree() == 0 {
        return 0;
    }
    let idx = MonomialIndex::new(f.nvars(), f.degree() - 1);
    let rows: Vec<Vec<Scalar>> = (0..f.nvars())
        .map(|i| f.partial(i).coeff_vector(&idx).expect("partials share the index"))
        .collect();
    Mat::from_rows(f.field(), rows)
        .expect("partial rows are rectangular")
        .rank()
}

/// Hessian determinant: det of the matrix of second partials.
pub fn hessian(f: &HomPoly) -> HomPoly {
    let n = f.nvars();
    let grid: Vec<Vec<HomPoly>> = (0..n)
        .map(|i| {
            let fi = f.partial(i);
            (0..n).map(|j| fi.partial(j)).collect()
        })
        .collect();
    poly_det(&grid)
}

/// Decides whether a nonzero ternary cubic is a product of three linear forms
/// (over the algebraic closure): this holds exactly when its Hessian
/// determinant is a scalar multiple of the cubic itself, the zero Hessian
/// (cone case, two essential variables) included. Implemented as a rank <= 1
/// test on the two stacked coefficient vectors.
pub fn splits_ternary_cubic(f: &HomPoly) -> Result<bool> {
    if f.nvars() != 3 || f.degree() != 3 {
        return Err(Error::InvalidInput(format!(
            "expected a ternary cubic, got {} variables degree {}",
            f.nvars(),
            f.degree()
        )));
    }
    if f.is_zero() {
        return Err(Error::InvalidInput("zero polynomial has no splitting type".into()));
    }
    let h = hessian(f);
    let idx = MonomialIndex::new(3, 3);
    let rows = vec![h.coeff_vector(&idx)?, f.coeff_vector(&idx)?];
    Ok(Mat::from_rows(f.field(), rows)?.rank() <= 1)
}

/// Rank of the symmetric Gram matrix of a quadratic form. Rank <= 2 means the
/// quadric is a product of two linear forms over the closure.
pub fn conic_rank(f: &HomPoly) -> Result<usize> {
    if f.degree() != 2 {
        return Err(Error::InvalidInput(format!(
            "expected a quadratic form, got degree {}",
            f.degree()
        )));
    }
    let n = f.nvars();
    let two_inv = Scalar::from_int(2, f.field()).inv();
    let mut g = Mat::zeros(n, n, f.field());
    for i in 0..n {
        for j in 0..n {
            let mut e = vec![0u32; n];
            e[i] += 1;
            e[j] += 1;
            let c = f.coeff(&e);
            *g.get_mut(i, j) = if i == j { c } else { &c * &two_inv };
        }
    }
    Ok(g.rank())
}

// ---------------------------------------------------------------------------
// text format: terms like `-2*x1^3 + 6*x1^2*x2`, variables x0..x9,
// integer or rational coefficients; printing round-trips exactly.
// ---------------------------------------------------------------------------

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms_desc() {
            let (neg, mag) = match c {
                Scalar::Rat(r) => (r.is_negative(), Scalar::Rat(r.abs())),
                other => (false, other.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &exp)| exp > 0)
                .map(|(i, &exp)| {
                    if exp == 1 {
                        format!("x{i}")
                    } else {
                        format!("x{i}^{exp}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Parses the polynomial text format over the rationals.
///
/// The zero polynomial parses as "0" with nominal degree 0; all other inputs
/// must be homogeneous in variables x0..x{nvars-1}.
pub fn parse_poly(input: &str, nvars: usize) -> Result<HomPoly> {
    if nvars == 0 || nvars > 10 {
        return Err(Error::Parse("variable count must be between 1 and 10".into()));
    }
    let field = FieldSpec::Rational;
    // split into signed terms at top level
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if compact == "0" {
        return Ok(HomPoly::zero(nvars, 0, field));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = false;
    let mut chars = compact.chars().peekable();
    // leading sign
    if let Some(&c) = chars.peek() {
        if c == '-' {
            sign = true;
            chars.next();
        } else if c == '+' {
            chars.next();
        }
    }
    let mut prev: Option<char> = None;
    for c in chars {
        if (c == '+' || c == '-') && !matches!(prev, Some('^') | Some('/') | Some('*')) {
            if cur.is_empty() {
                return Err(Error::Parse("dangling sign".into()));
            }
            terms.push((sign, std::mem::take(&mut cur)));
            sign = c == '-';
        } else {
            cur.push(c);
        }
        prev = Some(c);
    }
    if cur.is_empty() {
        return Err(Error::Parse("trailing sign".into()));
    }
    terms.push((sign, cur));

    let mut degree: Option<u32> = None;
    let mut poly: Option<HomPoly> = None;
    for (neg, text) in terms {
        let (coeff, exps) = parse_term(&text, nvars)?;
        let d: u32 = exps.iter().sum();
        match degree {
            None => degree = Some(d),
            Some(existing) if existing != d => {
                return Err(Error::Parse(format!(
                    "non-homogeneous input: saw degrees {existing} and {d}"
                )));
            }
            _ => {}
        }
        let c = if neg { -&coeff } else { coeff };
        let mono = HomPoly::monomial(nvars, &exps, c)?;
        poly = Some(match poly {
            None => mono,
            Some(p) => p.add(&mono),
        });
    }
    Ok(poly.expect("at least one term"))
}

fn parse_term(text: &str, nvars: usize) -> Result<(Scalar, Vec<u32>)> {
    let mut coeff = Scalar::one(FieldSpec::Rational);
    let mut exps = vec![0u32; nvars];
    for atom in text.split('*') {
        if atom.is_empty() {
            return Err(Error::Parse(format!("empty factor in term '{text}'")));
        }
        if let Some(rest) = atom.strip_prefix('x') {
            let (var_s, exp_s) = match rest.split_once('^') {
                Some((v, e)) => (v, Some(e)),
                None => (rest, None),
            };
            let var: usize = var_s
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable '{atom}'")))?;
            if var >= nvars {
                return Err(Error::Parse(format!(
                    "variable x{var} out of range for {nvars} variables"
                )));
            }
            let exp: u32 = match exp_s {
                Some(e) => e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{atom}'")))?,
                None => 1,
            };
            exps[var] += exp;
        } else {
            let r = parse_rational(atom)?;
            coeff = &coeff * &r;
        }
    }
    Ok((coeff, exps))
}

pub fn parse_rational(text: &str) -> Result<Scalar> {
    let make = |s: &str| {
        BigInt::from_str(s).map_err(|_| Error::Parse(format!("bad integer '{s}'")))
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let d = make(den)?;
            if d == BigInt::from(0) {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Scalar::Rat(BigRational::new(make(num)?, d)))
        }
        None => Ok(Scalar::Rat(BigRational::from_integer(make(text)?))),
    }
}

/// Multinomial coefficient of an exponent tuple: (sum e_i)! / prod e_i!.
pub fn multinomial_of(exponents: &[u32]) -> Scalar {
    Scalar::from_int(
        crate::comb::multinomial(exponents) as i64,
        FieldSpec::Rational,
    )
}

/// Number of monomials of the given degree: C(nvars - 1 + degree, degree).
pub fn monomial_count(nvars: usize, degree: u32) -> u64 {
    binomial(nvars - 1 + degree as usize, degree as usize)
}
