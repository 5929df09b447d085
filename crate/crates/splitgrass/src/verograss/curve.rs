//! The rational normal curve t -> (t0^N, t0^(N-1) t1, ..., t1^N) in P^N:
//! points, osculating frames, spans of divisors, and the divisor a linear
//! subspace cuts on the curve.

use super::binary::BinaryForm;
use crate::exactla::{FieldSpec, Mat, Scalar, VecSubspace};
use crate::grassmann::Subspace;
use crate::{Error, Result};

/// The curve point for the parameter [t0 : t1], as a vector in K^{N+1}.
pub fn rnc_point(t: &[Scalar; 2], degree: usize) -> Vec<Scalar> {
    let n = degree as u32;
    (0..=n)
        .map(|i| &t[0].pow(n - i) * &t[1].pow(i))
        .collect()
}

/// Rows spanning the osculating k-plane of the degree-N curve at [t0 : t1]
/// (k + 1 rows; k = 0 is the point itself, k = 1 the tangent line, ...).
///
/// For t0 != 0 the rows are the derivatives of s -> (1, s, ..., s^N) at
/// s = t1/t0; for [0 : 1] the osculating k-plane is spanned by the last
/// k + 1 coordinate vectors.
pub fn osc_frame(t: &[Scalar; 2], k: usize, degree: usize) -> Result<Vec<Vec<Scalar>>> {
    let field = t[0].field();
    if t[0].is_zero() && t[1].is_zero() {
        return Err(Error::InvalidInput("[0 : 0] is not a projective point".into()));
    }
    if k > degree {
        return Err(Error::InvalidInput(format!(
            "osculating order {k} exceeds curve degree {degree}"
        )));
    }
    let np1 = degree + 1;
    let mut rows = Vec::with_capacity(k + 1);
    if t[0].is_zero() {
        for j in 0..=k {
            let mut row = vec![Scalar::zero(field); np1];
            row[degree - j] = Scalar::one(field);
            rows.push(row);
        }
        return Ok(rows);
    }
    let s = &t[1] / &t[0];
    for j in 0..=k {
        let mut row = vec![Scalar::zero(field); np1];
        for (i, slot) in row.iter_mut().enumerate().skip(j) {
            let c = Scalar::from_int(falling(i as u64, j as u64), field);
            *slot = &c * &s.pow((i - j) as u32);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// i * (i-1) * ... * (i-k+1); the empty product for k = 0.
fn falling(i: u64, k: u64) -> i64 {
    let mut acc: u128 = 1;
    for step in 0..k {
        acc *= (i - step) as u128;
    }
    assert!(acc <= i64::MAX as u128, "falling factorial overflow");
    acc as i64
}

/// The linear span of the given distinct curve points, as a subspace of P^N.
/// Rejects repeated parameters: spans of non-reduced divisors need
/// osculating data, not a plain point span.
pub fn span_of_points(
    params: &[[Scalar; 2]],
    degree: usize,
    field: FieldSpec,
) -> Result<Subspace> {
    if params.is_empty() {
        return Err(Error::InvalidInput("no points to span".into()));
    }
    for p in params {
        if p[0].is_zero() && p[1].is_zero() {
            return Err(Error::InvalidInput("[0 : 0] is not a projective point".into()));
        }
    }
    for i in 0..params.len() {
        for j in i + 1..params.len() {
            let det = &(&params[i][0] * &params[j][1]) - &(&params[i][1] * &params[j][0]);
            if det.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "repeated curve point at positions {i} and {j}"
                )));
            }
        }
    }
    let pts: Vec<Vec<Scalar>> = params.iter().map(|t| rnc_point(t, degree)).collect();
    Subspace::from_spanning_points(degree + 1, field, &pts)
}

/// Restriction of one linear equation (coefficient row in K^{N+1}) to the
/// curve. Substituting z_i = t0^(N-i) t1^i makes the row itself the
/// coefficient vector of the resulting binary form of degree N.
pub fn restrict_row(row: &[Scalar]) -> Result<BinaryForm> {
    BinaryForm::new(row.to_vec())
}

/// The divisor the subspace cuts on the degree-N curve, as the gcd of the
/// restricted defining equations. The subspace must live in P^N with
/// N = `degree`.
pub fn curve_divisor(sub: &Subspace, degree: usize) -> Result<BinaryForm> {
    if sub.ambient_n() != degree {
        return Err(Error::InvalidInput(format!(
            "subspace of P^{} paired with a degree-{} curve",
            sub.ambient_n(),
            degree
        )));
    }
    let eqs = sub.equations();
    let mut gcd: Option<BinaryForm> = None;
    for r in 0..eqs.rows() {
        let form = restrict_row(eqs.row(r))?;
        gcd = Some(match gcd {
            None => form,
            Some(g) => g.gcd(&form),
        });
    }
    gcd.ok_or_else(|| Error::InvalidInput("subspace with no equations".into()))
}

/// Degree of the divisor the subspace cuts on the curve; `degree + 1`
/// in the degenerate all-equations-vanish case (cannot occur for a
/// subspace with a full-rank equation matrix, kept for totality).
pub fn curve_intersection_degree(sub: &Subspace, degree: usize) -> Result<usize> {
    let g = curve_divisor(sub, degree)?;
    if g.is_zero() {
        Ok(degree + 1)
    } else {
        Ok(g.true_degree())
    }
}

/// The span of the osculating frames at several distinct parameters, i.e.
/// the span of the divisor sum_i (k_i + 1) [t_i] on the curve.
pub fn span_of_osculating(
    params: &[([Scalar; 2], usize)],
    degree: usize,
    field: FieldSpec,
) -> Result<Subspace> {
    let mut all_rows: Vec<Vec<Scalar>> = Vec::new();
    for (t, k) in params {
        all_rows.extend(osc_frame(t, *k, degree)?);
    }
    let span = VecSubspace::from_spanning(degree + 1, field, &all_rows)?;
    Subspace::from_span(&span)
}

/// Convenience: the matrix whose rows are an osculating frame.
pub fn osc_frame_mat(t: &[Scalar; 2], k: usize, degree: usize) -> Result<Mat> {
    Mat::from_rows(t[0].field(), osc_frame(t, k, degree)?)
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
    fn curve_point_values() {
        let p = rnc_point(&[s(1), s(2)], 3);
        assert_eq!(p, vec![s(1), s(2), s(4), s(8)]);
        let inf = rnc_point(&[s(0), s(1)], 3);
        assert_eq!(inf, vec![s(0), s(0), s(0), s(1)]);
    }

    #[test]
    fn tangent_frames_at_zero_and_infinity() {
        let f0 = osc_frame(&[s(1), s(0)], 1, 4).unwrap();
        assert_eq!(f0[0], vec![s(1), s(0), s(0), s(0), s(0)]);
        assert_eq!(f0[1], vec![s(0), s(1), s(0), s(0), s(0)]);
        let finf = osc_frame(&[s(0), s(1)], 1, 4).unwrap();
        assert_eq!(finf[0], vec![s(0), s(0), s(0), s(0), s(1)]);
        assert_eq!(finf[1], vec![s(0), s(0), s(0), s(1), s(0)]);

        // span of both tangent lines in P^4: the hyperplane z2 = 0
        let joint = span_of_osculating(
            &[([s(1), s(0)], 1), ([s(0), s(1)], 1)],
            4,
            q(),
        )
        .unwrap();
        let expected =
            Subspace::from_int_equations(q(), &[vec![0, 0, 1, 0, 0]]).unwrap();
        assert!(joint.same_subspace(&expected).unwrap());
    }

    #[test]
    fn osc_frame_spans_are_scale_invariant() {
        let a = osc_frame(&[s(2), s(3)], 2, 5).unwrap();
        let b = osc_frame(&[s(-4), s(-6)], 2, 5).unwrap();
        let va = VecSubspace::from_spanning(6, q(), &a).unwrap();
        let vb = VecSubspace::from_spanning(6, q(), &b).unwrap();
        assert_eq!(va, vb);
        assert_eq!(va.dim(), 3);
    }

    #[test]
    fn osculating_plane_cuts_triple_point() {
        // independent oracle for the frame formula: the osculating 2-plane
        // at [1:2] must cut the divisor 3 * [1:2] and nothing more
        let plane = span_of_osculating(&[([s(1), s(2)], 2)], 5, q()).unwrap();
        assert_eq!(plane.proj_dim(), 2);
        let div = curve_divisor(&plane, 5).unwrap();
        let cube = BinaryForm::from_roots(
            &[[s(1), s(2)], [s(1), s(2)], [s(1), s(2)]],
            q(),
        );
        assert!(cube.divides(&div) && div.divides(&cube));
    }

    #[test]
    fn secant_line_cuts_degree_two() {
        // span of the curve points at [1:0] and [0:1] on the twisted cubic:
        // the line z1 = z2 = 0, cutting the divisor [1:0] + [0:1]
        let line = span_of_points(&[[s(1), s(0)], [s(0), s(1)]], 3, q()).unwrap();
        let expected = Subspace::from_int_equations(
            q(),
            &[vec![0, 1, 0, 0], vec![0, 0, 1, 0]],
        )
        .unwrap();
        assert!(line.same_subspace(&expected).unwrap());
        let div = curve_divisor(&line, 3).unwrap();
        let t0t1 = BinaryForm::from_ints(&[0, 1, 0], q());
        assert!(t0t1.divides(&div) && div.divides(&t0t1));
        assert_eq!(curve_intersection_degree(&line, 3).unwrap(), 2);
    }

    #[test]
    fn tangent_line_cuts_double_point() {
        let frame = osc_frame(&[s(1), s(1)], 1, 3).unwrap();
        assert_eq!(frame[0], vec![s(1), s(1), s(1), s(1)]);
        assert_eq!(frame[1], vec![s(0), s(1), s(2), s(3)]);
        let line = Subspace::from_spanning_points(4, q(), &frame).unwrap();
        let div = curve_divisor(&line, 3).unwrap();
        let double = BinaryForm::from_roots(&[[s(1), s(1)], [s(1), s(1)]], q());
        assert!(double.divides(&div) && div.divides(&double));
    }

    #[test]
    fn osculating_span_matches_point_count() {
        // 2 + 2 + 1 = 5 conditions on the degree-5 curve: a hyperplane in P^5
        let sub = span_of_osculating(
            &[([s(1), s(0)], 1), ([s(1), s(1)], 1), ([s(0), s(1)], 0)],
            5,
            q(),
        )
        .unwrap();
        assert_eq!(sub.proj_dim(), 4);
        assert_eq!(curve_intersection_degree(&sub, 5).unwrap(), 5);
    }

    #[test]
    fn repeated_points_rejected() {
        let err = span_of_points(&[[s(1), s(2)], [s(2), s(4)]], 4, q());
        assert!(err.is_err());
        let err2 = osc_frame(&[s(0), s(0)], 1, 3);
        assert!(err2.is_err());
        let err3 = osc_frame(&[s(1), s(0)], 4, 3);
        assert!(err3.is_err());
    }
}
