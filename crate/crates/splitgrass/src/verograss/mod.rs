//! The d-uple embedding of P^n realized inside G(n-1, n+d-1).
//!
//! A linear form with coefficients u_0..u_n determines a d x (n+d) banded
//! matrix whose rows are shifted copies of (u_0, ..., u_n). Read as
//! equations, those rows cut out an (n-1)-plane in P^{n+d-1}, and the d x d
//! maximal minors of the matrix are its Pluecker coordinates. The minors are
//! degree-d polynomials in u, so collecting their coefficients gives a
//! square change of basis between Pluecker coordinates and the coefficients
//! of a degree-d form; [`Identification`] packages that matrix and its
//! inverse, pinned so that a d-th power of a linear form maps exactly to the
//! banded-minor vector of that form.

pub mod binary;
pub mod curve;

pub use binary::BinaryForm;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::comb::multinomial;
use crate::exactla::{FieldSpec, Mat, Scalar, VecSubspace};
use crate::grassmann::{PlueckerVec, TupleIndex};
use crate::polyalg::{poly_det, HomPoly, MonomialIndex};
use crate::{Error, Result};

/// The d x (n+d) matrix whose row i carries `coeffs` in columns i..=i+n.
pub fn banded_matrix(coeffs: &[Scalar], d: usize) -> Result<Mat> {
    if coeffs.is_empty() || d == 0 {
        return Err(Error::InvalidInput("banded matrix needs coefficients and d >= 1".into()));
    }
    let field = coeffs[0].field();
    if coeffs.iter().any(|c| c.field() != field) {
        return Err(Error::InvalidInput("mixed-field coefficients".into()));
    }
    let n = coeffs.len() - 1;
    let cols = n + d;
    let mut rows = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = vec![Scalar::zero(field); cols];
        row[i..=i + n].clone_from_slice(coeffs);
        rows.push(row);
    }
    Mat::from_rows(field, rows)
}

/// The same matrix with symbolic entries: each slot holds the linear form
/// u_j in n+1 variables (or zero off the band).
fn banded_matrix_symbolic(n: usize, d: usize, field: FieldSpec) -> Vec<Vec<HomPoly>> {
    let cols = n + d;
    let mut rows = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = Vec::with_capacity(cols);
        for c in 0..cols {
            if c >= i && c - i <= n {
                let mut exps = vec![0u32; n + 1];
                exps[c - i] = 1;
                row.push(HomPoly::monomial(n + 1, &exps, Scalar::one(field)).expect("monomial"));
            } else {
                row.push(HomPoly::zero(n + 1, 1, field));
            }
        }
        rows.push(row);
    }
    rows
}

/// All d x d minors of the symbolic banded matrix, as degree-d polynomials
/// in u_0..u_n, listed in lexicographic column-tuple order.
pub fn symbolic_minors(n: usize, d: usize, field: FieldSpec) -> Vec<HomPoly> {
    let sym = banded_matrix_symbolic(n, d, field);
    let ti = TupleIndex::new(n + d, d);
    let mut out = Vec::with_capacity(ti.len());
    for i in 0..ti.len() {
        let tuple = ti.tuple(i);
        let sub: Vec<Vec<HomPoly>> = (0..d)
            .map(|r| tuple.iter().map(|&c| sym[r][c].clone()).collect())
            .collect();
        out.push(poly_det(&sub));
    }
    out
}

/// Pluecker vector of the (n-1)-plane attached to the linear form with the
/// given coefficients, computed directly from the numeric banded matrix.
pub fn linear_form_to_pluecker(coeffs: &[Scalar], d: usize) -> Result<PlueckerVec> {
    let m = banded_matrix(coeffs, d)?;
    let minors = crate::grassmann::maximal_minors(&m);
    PlueckerVec::new(coeffs.len() - 1 + d, d, coeffs[0].field(), minors)
}

/// Same, starting from a degree-1 polynomial.
pub fn veronese_point(l: &HomPoly, d: usize) -> Result<PlueckerVec> {
    if l.degree() != 1 {
        return Err(Error::InvalidInput(format!(
            "expected a linear form, got degree {}",
            l.degree()
        )));
    }
    let idx = MonomialIndex::new(l.nvars(), 1);
    linear_form_to_pluecker(&l.coeff_vector(&idx)?, d)
}

/// Default size guard: the identification matrix has C(n+d, d) rows, and its
/// exact inverse is cached, so runaway sizes are rejected unless forced.
const SIZE_GUARD: usize = 6;

/// The exact linear change of basis between Pluecker coordinates on
/// G(n-1, n+d-1) and coefficient vectors of degree-d forms in n+1 variables.
#[derive(Debug)]
pub struct Identification {
    n: usize,
    d: usize,
    field: FieldSpec,
    minors: Vec<HomPoly>,
    monomials: MonomialIndex,
    tuples: TupleIndex,
    /// coefficient vector of the form = to_poly * pluecker coordinates
    to_poly: Mat,
    /// pluecker coordinates = to_pluecker * coefficient vector
    to_pluecker: Mat,
}

type CacheKey = (usize, usize, FieldSpec);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<Identification>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<Identification>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Identification {
    /// The cached identification for (n, d); rejects n or d above
    /// [`SIZE_GUARD`] (use [`Identification::get_large`] to override).
    pub fn get(n: usize, d: usize, field: FieldSpec) -> Result<Arc<Identification>> {
        if n > SIZE_GUARD || d > SIZE_GUARD {
            return Err(Error::UnsupportedSize(format!(
                "identification for n = {n}, d = {d} exceeds the default guard \
                 (both must be <= {SIZE_GUARD}); use get_large to override"
            )));
        }
        Identification::get_large(n, d, field)
    }

    /// Same as [`Identification::get`] without the size guard.
    pub fn get_large(n: usize, d: usize, field: FieldSpec) -> Result<Arc<Identification>> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidInput("need n >= 1 and d >= 1".into()));
        }
        field.validate()?;
        let key = (n, d, field);
        if let Some(hit) = cache().lock().expect("identification cache").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let built = Arc::new(Identification::build(n, d, field)?);
        cache()
            .lock()
            .expect("identification cache")
            .insert(key, Arc::clone(&built));
        Ok(built)
    }

    fn build(n: usize, d: usize, field: FieldSpec) -> Result<Identification> {
        let minors = symbolic_minors(n, d, field);
        let monomials = MonomialIndex::new(n + 1, d as u32);
        let tuples = TupleIndex::new(n + d, d);
        let size = tuples.len();
        assert_eq!(monomials.len(), size, "minor/monomial count mismatch");

        // M[I][alpha] = coefficient of u^alpha in the minor p_I
        let mut data = Vec::with_capacity(size * size);
        for minor in &minors {
            data.extend(minor.coeff_vector(&monomials)?);
        }
        let m = Mat::new(size, size, field, data)?;
        let m_inv = m.inverse()?;

        let mut diag = Mat::zeros(size, size, field);
        let mut diag_inv = Mat::zeros(size, size, field);
        for i in 0..size {
            let c = Scalar::from_int(multinomial(monomials.tuple(i)) as i64, field);
            *diag.get_mut(i, i) = c.clone();
            *diag_inv.get_mut(i, i) = c.inv();
        }

        let to_poly = diag.mul(&m_inv)?;
        let to_pluecker = m.mul(&diag_inv)?;
        Ok(Identification {
            n,
            d,
            field,
            minors,
            monomials,
            tuples,
            to_poly,
            to_pluecker,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// The symbolic minors p_I(u), in lexicographic tuple order.
    pub fn minors(&self) -> &[HomPoly] {
        &self.minors
    }

    pub fn monomials(&self) -> &MonomialIndex {
        &self.monomials
    }

    pub fn tuples(&self) -> &TupleIndex {
        &self.tuples
    }

    /// Matrix sending Pluecker coordinates to polynomial coefficients.
    pub fn to_poly_matrix(&self) -> &Mat {
        &self.to_poly
    }

    /// Matrix sending polynomial coefficients to Pluecker coordinates.
    pub fn to_pluecker_matrix(&self) -> &Mat {
        &self.to_pluecker
    }

    /// The degree-d form a Pluecker vector corresponds to. Pinned so the
    /// image of a linear form's plane maps to the exact d-th power.
    pub fn polynomial_of(&self, pv: &PlueckerVec) -> Result<HomPoly> {
        if pv.m() != self.n + self.d || pv.d() != self.d {
            return Err(Error::InvalidInput(format!(
                "Pluecker vector for G({}, {}) fed to the (n, d) = ({}, {}) identification",
                pv.d() as i64 - 1,
                pv.m() as i64 - 1,
                self.n,
                self.d
            )));
        }
        if pv.field() != self.field {
            return Err(Error::InvalidInput("field mismatch".into()));
        }
        let coeffs = self.to_poly.mul_vec(pv.coords());
        HomPoly::from_coeff_vector(&self.monomials, &coeffs, self.field)
    }

    /// The Pluecker vector a degree-d form corresponds to.
    pub fn pluecker_of(&self, f: &HomPoly) -> Result<PlueckerVec> {
        if f.nvars() != self.n + 1 || f.degree() != self.d as u32 {
            return Err(Error::InvalidInput(format!(
                "degree-{} form in {} variables fed to the (n, d) = ({}, {}) identification",
                f.degree(),
                f.nvars(),
                self.n,
                self.d
            )));
        }
        if f.field() != self.field {
            return Err(Error::InvalidInput("field mismatch".into()));
        }
        let c = f.coeff_vector(&self.monomials)?;
        PlueckerVec::new(self.n + self.d, self.d, self.field, self.to_pluecker.mul_vec(&c))
    }

    /// Image of a subspace of the Pluecker ambient space on the polynomial
    /// side: each basis vector is mapped through the identification.
    pub fn poly_span_of(&self, span: &VecSubspace) -> Result<VecSubspace> {
        self.map_span(span, &self.to_poly)
    }

    /// Image of a subspace of coefficient space on the Pluecker side.
    pub fn pluecker_span_of(&self, span: &VecSubspace) -> Result<VecSubspace> {
        self.map_span(span, &self.to_pluecker)
    }

    fn map_span(&self, span: &VecSubspace, map: &Mat) -> Result<VecSubspace> {
        if span.ambient_dim() != map.cols() || span.field() != self.field {
            return Err(Error::InvalidInput(
                "subspace does not live in the identification's ambient space".into(),
            ));
        }
        let rows: Vec<Vec<Scalar>> = span
            .basis_rows()
            .iter()
            .map(|r| map.mul_vec(r))
            .collect();
        VecSubspace::from_spanning(map.rows(), self.field, &rows)
    }
}

/// Affine span, in Pluecker coordinates, of the order-`k` jets of the
/// minors parameterization at the linear form `l`: the row space of all
/// partial derivatives of order at most `k` of the minor polynomials,
/// evaluated at the coefficients of `l`. Order 0 recovers the point itself,
/// order 1 the affine tangent space; through the identification this span
/// matches the coefficient span of `{l^{d-k} * m}` over degree-`k`
/// monomials `m`.
pub fn veronese_jet_span(l: &HomPoly, d: usize, k: u32) -> Result<VecSubspace> {
    if l.degree() != 1 || l.is_zero() {
        return Err(Error::InvalidInput("need a nonzero linear form".into()));
    }
    if k as usize > d {
        return Err(Error::InvalidInput(format!(
            "jet order {k} exceeds degree {d}"
        )));
    }
    let n = l.nvars() - 1;
    let field = l.field();
    let ident = Identification::get_large(n, d, field)?;
    let point = l.coeff_vector(&MonomialIndex::new(n + 1, 1))?;
    let mut rows = Vec::new();
    for order in 0..=k {
        let orders = MonomialIndex::new(n + 1, order);
        for b in 0..orders.len() {
            let beta = orders.tuple(b);
            let mut row = Vec::with_capacity(ident.minors().len());
            for p in ident.minors() {
                let mut derived = p.clone();
                for (var, &times) in beta.iter().enumerate() {
                    for _ in 0..times {
                        derived = derived.partial(var);
                    }
                }
                row.push(derived.eval(&point)?);
            }
            rows.push(row);
        }
    }
    VecSubspace::from_spanning(ident.minors().len(), field, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse_poly;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, q())
    }

    #[test]
    fn minor_table_for_cubic_surface_case() {
        let minors = symbolic_minors(2, 3, q());
        let expected = [
            "x0^3",
            "x0^2*x1",
            "x0^2*x2",
            "x0*x1^2 - x0^2*x2",
            "x0*x1*x2",
            "x0*x2^2",
            "x1^3 - 2*x0*x1*x2",
            "x1^2*x2 - x0*x2^2",
            "x1*x2^2",
            "x2^3",
        ];
        assert_eq!(minors.len(), expected.len());
        for (got, want) in minors.iter().zip(expected) {
            assert_eq!(got, &parse_poly(want, 3).unwrap(), "minor {want}");
        }
    }

    #[test]
    fn minor_table_for_conic_case() {
        let minors = symbolic_minors(1, 2, q());
        let expected = ["x0^2", "x0*x1", "x1^2"];
        for (got, want) in minors.iter().zip(expected) {
            assert_eq!(got, &parse_poly(want, 2).unwrap());
        }
    }

    #[test]
    fn identification_rows_for_cubic_case() {
        let id = Identification::get(2, 3, q()).unwrap();
        // expected nonzero entries of to_poly, one row per degree-3 monomial
        let rows: &[(&[u32], &[(&[usize], i64)])] = &[
            (&[3, 0, 0], &[(&[0, 1, 2], 1)]),
            (&[2, 1, 0], &[(&[0, 1, 3], 3)]),
            (&[2, 0, 1], &[(&[0, 1, 4], 3)]),
            (&[1, 2, 0], &[(&[0, 2, 3], 3), (&[0, 1, 4], 3)]),
            (&[1, 1, 1], &[(&[0, 2, 4], 6)]),
            (&[1, 0, 2], &[(&[0, 3, 4], 3)]),
            (&[0, 3, 0], &[(&[1, 2, 3], 1), (&[0, 2, 4], 2)]),
            (&[0, 2, 1], &[(&[0, 3, 4], 3), (&[1, 2, 4], 3)]),
            (&[0, 1, 2], &[(&[1, 3, 4], 3)]),
            (&[0, 0, 3], &[(&[2, 3, 4], 1)]),
        ];
        for (alpha, combos) in rows {
            let r = id.monomials().position(alpha).unwrap();
            for c in 0..id.tuples().len() {
                let want = combos
                    .iter()
                    .find(|(t, _)| id.tuples().position(t) == Some(c))
                    .map_or(0, |&(_, v)| v);
                assert_eq!(
                    id.to_poly_matrix().get(r, c),
                    &s(want),
                    "row {alpha:?}, col {c}"
                );
            }
        }
    }

    #[test]
    fn matrices_are_mutually_inverse() {
        for (n, d) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
            let id = Identification::get(n, d, q()).unwrap();
            let prod = id.to_poly_matrix().mul(id.to_pluecker_matrix()).unwrap();
            let size = id.tuples().len();
            assert_eq!(prod, Mat::identity(size, q()));
        }
    }

    #[test]
    fn powers_of_linear_forms_map_to_banded_minors() {
        let fields = [q(), FieldSpec::Prime(crate::exactla::DEFAULT_PRIME)];
        let cases: &[(usize, usize, &[i64])] = &[
            (1, 3, &[2, -1]),
            (2, 2, &[1, 4, -3]),
            (2, 3, &[2, 1, 5]),
            (3, 2, &[1, -2, 0, 7]),
        ];
        for field in fields {
            for &(n, d, coeffs) in cases {
                let id = Identification::get(n, d, field).unwrap();
                let l = HomPoly::linear_form_int(coeffs, field);
                let pv = veronese_point(&l, d).unwrap();
                assert!(pv.is_decomposable(), "image must land in the Grassmannian");
                assert_eq!(id.polynomial_of(&pv).unwrap(), l.power(d as u32));
                assert!(id
                    .pluecker_of(&l.power(d as u32))
                    .unwrap()
                    .proj_equal(&pv)
                    .unwrap());
            }
        }
    }

    #[test]
    fn split_cubic_line_worked_example() {
        let id = Identification::get(2, 3, q()).unwrap();
        let pv =
            PlueckerVec::from_ints(5, 3, q(), &[0, 0, 0, 2, -1, 0, -4, 2, 0, 0]).unwrap();
        assert!(pv.is_decomposable());

        let f = id.polynomial_of(&pv).unwrap();
        let product = HomPoly::linear_form_int(&[0, 1, 0], q())
            .multiply(&HomPoly::linear_form_int(&[1, -1, 0], q()))
            .multiply(&HomPoly::linear_form_int(&[0, 1, -1], q()));
        assert_eq!(f, product.scale(&s(6)));

        // and back: the split cubic lands on that same line
        let back = id.pluecker_of(&product).unwrap();
        assert!(back.proj_equal(&pv).unwrap());
    }

    #[test]
    fn symbolic_and_numeric_minors_agree() {
        for (n, d) in [(2, 3), (3, 2)] {
            let minors = symbolic_minors(n, d, q());
            let u: Vec<Scalar> = (0..=n as i64).map(|i| s(3 * i - 2)).collect();
            let pv = linear_form_to_pluecker(&u, d).unwrap();
            for (i, minor) in minors.iter().enumerate() {
                assert_eq!(&minor.eval(&u).unwrap(), &pv.coords()[i]);
            }
        }
    }

    #[test]
    fn guard_and_cache_behavior() {
        assert!(matches!(
            Identification::get(7, 2, q()),
            Err(Error::UnsupportedSize(_))
        ));
        let a = Identification::get(1, 2, q()).unwrap();
        let b = Identification::get(1, 2, q()).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        let err = a
            .polynomial_of(&PlueckerVec::from_ints(4, 2, q(), &[1, 0, 0, 0, 0, 0]).unwrap());
        assert!(err.is_err());
    }

    #[test]
    fn jet_spans_match_polynomial_osculating_spans() {
        // The derivative span of the minors map must agree, through the
        // identification, with the span of l^{d-k} times degree-k monomials.
        for field in [q(), FieldSpec::Prime(crate::exactla::DEFAULT_PRIME)] {
            let l = HomPoly::linear_form_int(&[2, -1, 3], field);
            for (d, k) in [(2usize, 0u32), (2, 1), (3, 1), (3, 2)] {
                let jets = veronese_jet_span(&l, d, k).unwrap();
                let ident = Identification::get(2, d, field).unwrap();
                let on_poly_side = ident.poly_span_of(&jets).unwrap();
                let osc = crate::terracini::veronese_osc_span(&l, d as u32, k).unwrap();
                assert_eq!(on_poly_side, osc, "d={d} k={k}");
                assert_eq!(jets.dim(), osc.dim());
                // And back again through the inverse direction.
                assert_eq!(ident.pluecker_span_of(&osc).unwrap(), jets);
            }
        }
        // Order-0 jets are the Veronese point itself.
        let l = HomPoly::linear_form_int(&[1, 2, 2], q());
        let jets = veronese_jet_span(&l, 3, 0).unwrap();
        assert_eq!(jets.dim(), 1);
        let pv = veronese_point(&l, 3).unwrap();
        assert!(jets.contains(pv.coords()).unwrap());
    }
}
