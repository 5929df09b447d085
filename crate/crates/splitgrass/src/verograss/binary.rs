//! Binary forms c0*t0^m + c1*t0^(m-1)*t1 + ... + cm*t1^m with exact gcds.
//!
//! The gcd works by splitting off the t0-power (trailing zero coefficients
//! after dehomogenization) and running the Euclidean algorithm on the
//! dehomogenized polynomials, re-homogenizing at the end. Quotients are
//! normalized along the way so rational coefficients stay small.

use crate::exactla::{FieldSpec, Scalar};
use crate::{Error, Result};

/// A binary form of nominal degree coeffs.len() - 1; all-zero coefficients
/// represent the zero form.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm {
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("binary form needs coefficients".into()));
        }
        let field = coeffs[0].field();
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::InvalidInput("mixed-field coefficients".into()));
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_ints(coeffs: &[i64], field: FieldSpec) -> Self {
        BinaryForm {
            coeffs: coeffs.iter().map(|&c| Scalar::from_int(c, field)).collect(),
        }
    }

    /// The product of the linear forms (b*t0 - a*t1) over the points [a : b].
    pub fn from_roots(points: &[[Scalar; 2]], field: FieldSpec) -> Self {
        let mut acc = BinaryForm {
            coeffs: vec![Scalar::one(field)],
        };
        for p in points {
            let lin = BinaryForm {
                coeffs: vec![p[1].clone(), -&p[0]],
            };
            acc = acc.multiply(&lin);
        }
        acc
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn field(&self) -> FieldSpec {
        self.coeffs[0].field()
    }

    /// Nominal degree (length - 1); meaningful also for the zero form.
    pub fn nominal_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn eval(&self, t: &[Scalar; 2]) -> Scalar {
        let m = self.nominal_degree() as u32;
        let mut acc = Scalar::zero(self.field());
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = &(c * &t[0].pow(m - i as u32)) * &t[1].pow(i as u32);
            acc = &acc + &term;
        }
        acc
    }

    pub fn multiply(&self, other: &BinaryForm) -> BinaryForm {
        let field = self.field();
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut out = vec![Scalar::zero(field); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        BinaryForm { coeffs: out }
    }

    /// Greatest common divisor, normalized so the highest nonzero
    /// coefficient is 1. gcd with the zero form returns the other input
    /// (normalized); gcd of two zero forms is the zero form of degree 0.
    pub fn gcd(&self, other: &BinaryForm) -> BinaryForm {
        let field = self.field();
        match (self.is_zero(), other.is_zero()) {
            (true, true) => {
                return BinaryForm {
                    coeffs: vec![Scalar::zero(field)],
                }
            }
            (true, false) => return other.normalized(),
            (false, true) => return self.normalized(),
            _ => {}
        }
        // split off t0^a and dehomogenize (t0 = 1, x = t1)
        let (a1, p1) = self.dehomogenize();
        let (a2, p2) = other.dehomogenize();
        let g = univ_gcd(p1, p2);
        let t0_mult = a1.min(a2);
        // t0^t0_mult * homog(g): coefficient of t1^i stays at index i, the
        // extra t0 power only raises the total degree
        let mut coeffs = vec![Scalar::zero(field); t0_mult + g.len()];
        for (i, c) in g.into_iter().enumerate() {
            coeffs[i] = c;
        }
        BinaryForm { coeffs }.normalized()
    }

    pub fn gcd_degree(&self, other: &BinaryForm) -> usize {
        let g = self.gcd(other);
        if g.is_zero() {
            0
        } else {
            g.true_degree()
        }
    }

    /// Degree of the nonzero homogeneous form (its nominal degree).
    /// Panics on the zero form.
    pub fn true_degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of the zero form");
        self.nominal_degree()
    }

    /// True when `self` divides `other` exactly. Uses that the gcd divides
    /// `self`, so equal degrees force gcd ~ self, which in turn divides
    /// `other`.
    pub fn divides(&self, other: &BinaryForm) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        if other.is_zero() {
            return true;
        }
        self.gcd(other).true_degree() == self.true_degree()
    }

    fn normalized(&self) -> BinaryForm {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self
            .coeffs
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .expect("nonzero form");
        let inv = lead.inv();
        BinaryForm {
            coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
        }
    }

    /// Returns (a, p) with self = t0^a * homog(p), p ascending in x = t1.
    fn dehomogenize(&self) -> (usize, Vec<Scalar>) {
        assert!(!self.is_zero());
        let m = self.nominal_degree();
        let hi = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        (m - hi, self.coeffs[..=hi].to_vec())
    }
}

/// Euclidean gcd of univariate polynomials (ascending coefficients, no
/// trailing-zero padding guaranteed by `trim`), monic-normalized per step.
fn univ_gcd(a: Vec<Scalar>, b: Vec<Scalar>) -> Vec<Scalar> {
    let mut a = trim(a);
    let mut b = trim(b);
    while !b.is_empty() {
        let r = univ_rem(&a, &b);
        a = b;
        b = trim(r);
        // monic normalization controls coefficient growth
        if let Some(lead) = b.last().cloned() {
            let inv = lead.inv();
            for c in &mut b {
                *c = &*c * &inv;
            }
        }
    }
    if let Some(lead) = a.last().cloned() {
        let inv = lead.inv();
        for c in &mut a {
            *c = &*c * &inv;
        }
    }
    a
}

fn univ_rem(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().expect("nonzero divisor");
    while r.len() > db {
        let f = r.last().expect("trimmed remainder") / lead;
        let shift = r.len() - 1 - db;
        for (i, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                r[shift + i] = &r[shift + i] - &(&f * bc);
            }
        }
        r.pop(); // leading term cancels exactly
        while r.last().is_some_and(Scalar::is_zero) {
            r.pop();
        }
    }
    r
}

fn trim(mut v: Vec<Scalar>) -> Vec<Scalar> {
    while v.last().is_some_and(Scalar::is_zero) {
        v.pop();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, q())
    }

    #[test]
    fn roots_product_and_eval() {
        // roots [1:0] and [0:1]: (0*t0 - 1*t1)... point [a:b] gives b*t0 - a*t1
        let pts = [[s(1), s(0)], [s(0), s(1)]];
        let f = BinaryForm::from_roots(&pts, q());
        // (0*t0 - 1*t1)(1*t0 - 0*t1) = -t0*t1
        assert_eq!(f.coeffs(), &[s(0), s(-1), s(0)]);
        assert!(f.eval(&[s(1), s(0)]).is_zero());
        assert!(f.eval(&[s(0), s(1)]).is_zero());
        assert!(!f.eval(&[s(1), s(1)]).is_zero());
    }

    #[test]
    fn gcd_with_t0_and_t1_factors() {
        // f = t0^3 (t0 - 2 t1) = t0^4 - 2 t0^3 t1, g = t0^2 t1^2
        let f = BinaryForm::from_ints(&[1, -2, 0, 0, 0], q());
        let g = BinaryForm::from_ints(&[0, 0, 1, 0, 0], q());
        let d = f.gcd(&g);
        // gcd = t0^2
        assert_eq!(d.coeffs(), &[s(1), s(0), s(0)]);
        // then gcd with t1^3 (t1 - 2 t0) = -2 t0 t1^3 + t1^4 is 1
        let h = BinaryForm::from_ints(&[0, 0, 0, -2, 1], q());
        let e = d.gcd(&h);
        assert_eq!(e.true_degree(), 0);
    }

    #[test]
    fn gcd_of_shifted_products() {
        let a = [[s(1), s(1)], [s(1), s(2)], [s(2), s(1)]];
        let b = [[s(1), s(1)], [s(1), s(2)], [s(3), s(1)]];
        let f = BinaryForm::from_roots(&a, q());
        let g = BinaryForm::from_roots(&b, q());
        let d = f.gcd(&g);
        let shared = BinaryForm::from_roots(&[[s(1), s(1)], [s(1), s(2)]], q());
        assert_eq!(d.true_degree(), 2);
        assert!(shared.divides(&f));
        assert!(shared.divides(&g));
        assert!(shared.divides(&d) && d.divides(&shared));
    }

    #[test]
    fn zero_form_cases() {
        let z = BinaryForm::from_ints(&[0, 0, 0], q());
        let f = BinaryForm::from_ints(&[2, 0, 1], q());
        assert!(z.is_zero());
        assert_eq!(z.gcd(&f).coeffs(), &[s(2), s(0), s(1)]);
        assert!(f.divides(&z));
        assert!(!z.divides(&f));
    }

    #[test]
    fn divides_cases() {
        let f = BinaryForm::from_ints(&[1, 1], q()); // t0 + t1
        let g = BinaryForm::from_ints(&[1, 2, 1], q()); // (t0 + t1)^2
        assert!(f.divides(&g));
        assert!(!g.divides(&f));
        let h = BinaryForm::from_ints(&[1, 0, 1], q());
        assert!(!f.divides(&h));
    }

    #[test]
    fn multiply_then_gcd_recovers_common_factor() {
        let common = BinaryForm::from_ints(&[2, -3, 1], q());
        let f = common.multiply(&BinaryForm::from_ints(&[1, 5], q()));
        let g = common.multiply(&BinaryForm::from_ints(&[4, 1, 1], q()));
        let d = f.gcd(&g);
        assert_eq!(d.true_degree(), 2);
        assert!(common.divides(&d));
    }
}
