//! Secant-variety dimension counts for split, Veronese, and Grassmann
//! varieties.
//!
//! The engine samples random points on a variety, builds the affine tangent
//! (or osculating) span at each point from explicit product formulas, stacks
//! the spans for `s` points, and reads the secant dimension off the rank.
//! Ranks at sampled points are lower bounds for the generic rank, so a run
//! that reaches the expected dimension certifies non-defectivity, while a
//! run that stays below it only *observes* a defect.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{Serialize, Serializer};

use crate::comb::binomial;
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Mat, Scalar, VecSubspace};
use crate::grassmann::maximal_minors;
use crate::polyalg::{monomial_count, HomPoly, MonomialIndex};

/// One of the three projective varieties handled by the dimension engine.
///
/// All dimensions reported elsewhere are projective. `Grassmann { k, n }`
/// is the variety of projective `k`-planes in projective `n`-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarietySpec {
    /// Degree-`d` forms in `n + 1` variables that split into linear factors.
    Split { n: usize, d: usize },
    /// `d`-th powers of linear forms in `n + 1` variables.
    Veronese { n: usize, d: usize },
    /// Projective `k`-planes in projective `n`-space.
    Grassmann { k: usize, n: usize },
}

impl VarietySpec {
    /// Validates parameter ranges.
    pub fn validate(&self) -> Result<()> {
        match *self {
            VarietySpec::Split { n, d } | VarietySpec::Veronese { n, d } => {
                if n == 0 || d == 0 {
                    return Err(Error::InvalidInput(format!(
                        "variety parameters must be positive, got n={n}, d={d}"
                    )));
                }
            }
            VarietySpec::Grassmann { k, n } => {
                if n == 0 || k >= n {
                    return Err(Error::InvalidInput(format!(
                        "Grassmann parameters need 0 <= k < n, got k={k}, n={n}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Projective dimension of the variety itself.
    pub fn variety_dim(&self) -> usize {
        match *self {
            VarietySpec::Split { n, d } => n * d,
            VarietySpec::Veronese { n, .. } => n,
            VarietySpec::Grassmann { k, n } => (k + 1) * (n - k),
        }
    }

    /// Projective dimension of the ambient space of the embedding.
    pub fn ambient_dim(&self) -> usize {
        match *self {
            VarietySpec::Split { n, d } | VarietySpec::Veronese { n, d } => {
                monomial_count(n + 1, d as u32) as usize - 1
            }
            VarietySpec::Grassmann { k, n } => binomial(n + 1, k + 1) as usize - 1,
        }
    }

    /// Expected projective dimension of the span of `s` points' tangent
    /// spaces: `min(ambient, s * dim + s - 1)`.
    pub fn expected_secant_dim(&self, s: usize) -> usize {
        self.ambient_dim().min(s * self.variety_dim() + s - 1)
    }
}

impl fmt::Display for VarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VarietySpec::Split { n, d } => write!(f, "split(n={n},d={d})"),
            VarietySpec::Veronese { n, d } => write!(f, "veronese(n={n},d={d})"),
            VarietySpec::Grassmann { k, n } => write!(f, "grassmann(k={k},N={n})"),
        }
    }
}

impl Serialize for VarietySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Human-readable field descriptor used in reports.
pub fn field_label(field: FieldSpec) -> String {
    match field {
        FieldSpec::Rational => "rational".to_string(),
        FieldSpec::Prime(p) => format!("prime:{p}"),
    }
}

/// Affine tangent span of the split variety at the product of the given
/// linear forms: the row space of the coefficient vectors of
/// `x_i * prod_{k != j} L_k` over all variables `i` and factors `j`.
pub fn split_tangent_span(forms: &[HomPoly]) -> Result<VecSubspace> {
    let (ambient, field, rows) = split_tangent_rows(forms)?;
    VecSubspace::from_spanning(ambient, field, &rows)
}

fn split_tangent_rows(forms: &[HomPoly]) -> Result<(usize, FieldSpec, Vec<Vec<Scalar>>)> {
    let d = forms.len();
    if d == 0 {
        return Err(Error::InvalidInput("need at least one linear factor".into()));
    }
    let nvars = forms[0].nvars();
    let field = forms[0].field();
    for l in forms {
        if l.degree() != 1 || l.nvars() != nvars || l.field() != field {
            return Err(Error::InvalidInput(
                "factors must be linear forms in the same variables and field".into(),
            ));
        }
        if l.is_zero() {
            return Err(Error::InvalidInput("zero linear factor".into()));
        }
    }
    let idx = MonomialIndex::new(nvars, d as u32);
    let mut rows = Vec::with_capacity(d * nvars);
    for j in 0..d {
        let mut partial_product = HomPoly::monomial(nvars, &vec![0; nvars], Scalar::from_int(1, field))?;
        for (k, l) in forms.iter().enumerate() {
            if k != j {
                partial_product = partial_product.multiply(l);
            }
        }
        for i in 0..nvars {
            let mut exps = vec![0u32; nvars];
            exps[i] = 1;
            let xi = HomPoly::monomial(nvars, &exps, Scalar::from_int(1, field))?;
            rows.push(xi.multiply(&partial_product).coeff_vector(&idx)?);
        }
    }
    Ok((idx.len(), field, rows))
}

/// Affine tangent span of the degree-`d` Veronese variety at `[L^d]`.
pub fn veronese_tangent_span(l: &HomPoly, d: u32) -> Result<VecSubspace> {
    veronese_osc_span(l, d, 1)
}

/// Affine span of the order-`k` osculating space of the degree-`d` Veronese
/// variety at `[L^d]`: the coefficient span of `L^{d-k} * m` over all
/// monomials `m` of degree `k`. Has dimension `C(n+k, k)` for `L != 0`.
pub fn veronese_osc_span(l: &HomPoly, d: u32, k: u32) -> Result<VecSubspace> {
    let (ambient, field, rows) = veronese_osc_rows(l, d, k)?;
    VecSubspace::from_spanning(ambient, field, &rows)
}

fn veronese_osc_rows(l: &HomPoly, d: u32, k: u32) -> Result<(usize, FieldSpec, Vec<Vec<Scalar>>)> {
    if l.degree() != 1 || l.is_zero() {
        return Err(Error::InvalidInput("need a nonzero linear form".into()));
    }
    if k > d {
        return Err(Error::InvalidInput(format!(
            "osculating order {k} exceeds degree {d}"
        )));
    }
    let nvars = l.nvars();
    let field = l.field();
    let idx = MonomialIndex::new(nvars, d);
    let kidx = MonomialIndex::new(nvars, k);
    let base = l.power(d - k);
    let mut rows = Vec::with_capacity(kidx.len());
    for m in 0..kidx.len() {
        let mono = HomPoly::monomial(nvars, kidx.tuple(m), Scalar::from_int(1, field))?;
        rows.push(base.multiply(&mono).coeff_vector(&idx)?);
    }
    Ok((idx.len(), field, rows))
}

/// Affine tangent span of the Grassmannian of `(k+1)`-row spaces at the row
/// space of `basis`, in the coordinates given by maximal minors of the
/// matrix (increasing column tuples in lexicographic order): the span of the
/// minor vectors of `basis` with one row replaced by each standard basis
/// vector in turn.
pub fn grassmann_tangent_span(basis: &Mat) -> Result<VecSubspace> {
    let (ambient, field, rows) = grassmann_tangent_rows(basis)?;
    VecSubspace::from_spanning(ambient, field, &rows)
}

fn grassmann_tangent_rows(basis: &Mat) -> Result<(usize, FieldSpec, Vec<Vec<Scalar>>)> {
    let r = basis.rows();
    let cols = basis.cols();
    let field = basis.field();
    if r == 0 || r > cols {
        return Err(Error::InvalidInput(format!(
            "basis must have 1..=cols rows, got {r} rows and {cols} columns"
        )));
    }
    let span = VecSubspace::from_spanning(
        cols,
        field,
        &(0..r).map(|i| basis.row(i).to_vec()).collect::<Vec<_>>(),
    )?;
    if span.dim() != r {
        return Err(Error::InvalidInput("basis rows are dependent".into()));
    }
    let ambient = binomial(cols, r) as usize;
    let mut rows = Vec::with_capacity(r * cols);
    for j in 0..r {
        for i in 0..cols {
            let mut replaced = basis.clone();
            for c in 0..cols {
                *replaced.get_mut(j, c) = Scalar::from_int(if c == i { 1 } else { 0 }, field);
            }
            rows.push(maximal_minors(&replaced));
        }
    }
    Ok((ambient, field, rows))
}

/// Random linear form in `nvars` variables with integer coefficients in
/// `[-bound, bound]`, resampled until nonzero.
pub fn random_linear_form<R: Rng>(
    rng: &mut R,
    nvars: usize,
    bound: i64,
    field: FieldSpec,
) -> HomPoly {
    loop {
        let coeffs: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-bound..=bound)).collect();
        if coeffs.iter().any(|&c| c != 0) {
            return HomPoly::linear_form_int(&coeffs, field);
        }
    }
}

/// Random integer point with coordinates in `[-bound, bound]`, nonzero.
pub fn random_point<R: Rng>(rng: &mut R, len: usize, bound: i64, field: FieldSpec) -> Vec<Scalar> {
    loop {
        let coords: Vec<i64> = (0..len).map(|_| rng.gen_range(-bound..=bound)).collect();
        if coords.iter().any(|&c| c != 0) {
            return coords
                .iter()
                .map(|&c| Scalar::from_int(c, field))
                .collect();
        }
    }
}

/// Outcome of a secant-dimension sampling run.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SecantReport {
    pub variety: VarietySpec,
    pub s: usize,
    pub ambient_proj_dim: usize,
    pub variety_proj_dim: usize,
    pub expected_proj_dim: usize,
    pub computed_proj_dim: usize,
    /// `expected - computed` at the sampled points. Positive values observe
    /// a defect; they do not certify one.
    pub defect_observed: usize,
    pub defective_observed: bool,
    pub trials: u32,
    pub field: String,
    pub seed: u64,
    /// `Some(true)` when a rational-arithmetic pass reproduced the
    /// prime-field rank; `None` for single-field runs.
    pub rational_confirmed: Option<bool>,
}

impl SecantReport {
    fn new(
        variety: VarietySpec,
        s: usize,
        computed: usize,
        trials: u32,
        field: String,
        seed: u64,
        rational_confirmed: Option<bool>,
    ) -> Self {
        let ambient = variety.ambient_dim();
        let expected = variety.expected_secant_dim(s);
        assert!(computed <= expected && expected <= ambient);
        SecantReport {
            variety,
            s,
            ambient_proj_dim: ambient,
            variety_proj_dim: variety.variety_dim(),
            expected_proj_dim: expected,
            computed_proj_dim: computed,
            defect_observed: expected - computed,
            defective_observed: computed < expected,
            trials,
            field,
            seed,
            rational_confirmed,
        }
    }
}

/// Sampling parameters for [`secant_dimension`].
#[derive(Debug, Clone, Copy)]
pub struct SecantOptions {
    pub trials: u32,
    pub field: FieldSpec,
    pub seed: u64,
    /// Coordinates are drawn uniformly from `[-bound, bound]`.
    pub bound: i64,
}

impl Default for SecantOptions {
    fn default() -> Self {
        SecantOptions {
            trials: 20,
            field: FieldSpec::Prime(crate::exactla::DEFAULT_PRIME),
            seed: 0,
            bound: 50,
        }
    }
}

/// Largest supported affine ambient dimension for sampling runs.
const MAX_AMBIENT: u64 = 20_000;

fn trial_rng(seed: u64, trial: u32) -> ChaCha8Rng {
    // Derive an independent stream per (seed, trial) so concurrent or
    // early-stopped runs see identical samples.
    ChaCha8Rng::seed_from_u64(seed ^ (trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn tangent_rows_at_random_point<R: Rng>(
    variety: &VarietySpec,
    rng: &mut R,
    bound: i64,
    field: FieldSpec,
) -> Result<(usize, Vec<Vec<Scalar>>)> {
    match *variety {
        VarietySpec::Split { n, d } => {
            let forms: Vec<HomPoly> = (0..d)
                .map(|_| random_linear_form(rng, n + 1, bound, field))
                .collect();
            let (ambient, _, rows) = split_tangent_rows(&forms)?;
            Ok((ambient, rows))
        }
        VarietySpec::Veronese { n, d } => {
            let l = random_linear_form(rng, n + 1, bound, field);
            let (ambient, _, rows) = veronese_osc_rows(&l, d as u32, 1)?;
            Ok((ambient, rows))
        }
        VarietySpec::Grassmann { k, n } => {
            loop {
                let data: Vec<Scalar> = (0..(k + 1) * (n + 1))
                    .map(|_| Scalar::from_int(rng.gen_range(-bound..=bound), field))
                    .collect();
                let m = Mat::new(k + 1, n + 1, field, data)?;
                match grassmann_tangent_rows(&m) {
                    Ok((ambient, _, rows)) => return Ok((ambient, rows)),
                    // Dependent rows: a measure-zero draw; sample again.
                    Err(Error::InvalidInput(_)) => continue,
                    Err(e) => return Err(e),
                }
            }
        }
    }
}

/// Rank of the stacked tangent spans at `s` random points, maximized over
/// `trials` independent draws, reported as a projective dimension. Stops
/// early once the expected dimension is reached, since the maximum can only
/// stay there.
pub fn secant_dimension(
    variety: VarietySpec,
    s: usize,
    opts: &SecantOptions,
) -> Result<SecantReport> {
    variety.validate()?;
    if s == 0 {
        return Err(Error::InvalidInput("need at least one point".into()));
    }
    if opts.trials == 0 {
        return Err(Error::InvalidInput("need at least one trial".into()));
    }
    let computed = best_rank_over_trials(&variety, s, opts)?;
    Ok(SecantReport::new(
        variety,
        s,
        computed - 1,
        opts.trials,
        field_label(opts.field),
        opts.seed,
        None,
    ))
}

fn best_rank_over_trials(variety: &VarietySpec, s: usize, opts: &SecantOptions) -> Result<usize> {
    let ambient_affine = variety.ambient_dim() as u64 + 1;
    if ambient_affine > MAX_AMBIENT {
        return Err(Error::UnsupportedSize(format!(
            "ambient dimension {ambient_affine} exceeds the sampling limit {MAX_AMBIENT}"
        )));
    }
    let expected_affine = variety.expected_secant_dim(s) + 1;
    let mut best = 0usize;
    for trial in 0..opts.trials {
        let mut rng = trial_rng(opts.seed, trial);
        let mut rows = Vec::new();
        for _ in 0..s {
            let (_, mut point_rows) =
                tangent_rows_at_random_point(variety, &mut rng, opts.bound, opts.field)?;
            rows.append(&mut point_rows);
        }
        // Only the dimension of the joint span matters here, so take the
        // matrix rank directly; over the rationals that runs fraction-free
        // elimination instead of echelonizing with explicit fractions.
        let rank = Mat::from_rows(opts.field, rows)?.rank();
        best = best.max(rank);
        if best == expected_affine {
            break;
        }
    }
    Ok(best)
}

/// Prime-field sampling run followed by a rational-arithmetic confirmation
/// pass. The report carries the maximum rank seen over both passes and
/// records whether the rational pass reproduced it.
pub fn secant_dimension_confirmed(
    variety: VarietySpec,
    s: usize,
    opts: &SecantOptions,
    rational_trials: u32,
) -> Result<SecantReport> {
    variety.validate()?;
    if s == 0 || opts.trials == 0 || rational_trials == 0 {
        return Err(Error::InvalidInput(
            "need at least one point and one trial in each field".into(),
        ));
    }
    let prime_field = match opts.field {
        FieldSpec::Prime(_) => opts.field,
        FieldSpec::Rational => FieldSpec::Prime(crate::exactla::DEFAULT_PRIME),
    };
    let prime_rank = best_rank_over_trials(
        &variety,
        s,
        &SecantOptions {
            field: prime_field,
            ..*opts
        },
    )?;
    let rational_rank = best_rank_over_trials(
        &variety,
        s,
        &SecantOptions {
            field: FieldSpec::Rational,
            trials: rational_trials,
            ..*opts
        },
    )?;
    let computed = prime_rank.max(rational_rank);
    Ok(SecantReport::new(
        variety,
        s,
        computed - 1,
        opts.trials + rational_trials,
        format!("{}+rational", field_label(prime_field)),
        opts.seed,
        Some(rational_rank == computed),
    ))
}

/// Codimension `C(n+2-2s, 2)` of the `(s-1)`-st secant variety of the
/// degree-2 split variety of projective `n`-space (equivalently of the
/// Grassmannian of lines in projective `(n+1)`-space).
pub fn split2_codim_formula(n: usize, s: usize) -> usize {
    assert!(2 * s <= n + 2, "formula needs 2s <= n+2");
    binomial(n + 2 - 2 * s, 2) as usize
}

/// Outcome of [`multilinear_independence_witness`].
#[derive(Debug, Clone, serde::Serialize)]
pub struct IndependenceWitness {
    /// `d * n + 1`: the number of product forms, all of which must be
    /// independent for the witness to hold.
    pub expected_rank: usize,
    pub rank: usize,
    /// Every required hyperplane through the prescribed points exists and
    /// is unique.
    pub hyperplanes_unique: bool,
    /// The base hyperplane avoids every `Q`-point.
    pub base_nonvanishing: bool,
    /// The replacement hyperplanes vanish where they are built to vanish.
    pub vanishing_pattern: bool,
}

impl IndependenceWitness {
    pub fn holds(&self) -> bool {
        self.hyperplanes_unique
            && self.base_nonvanishing
            && self.vanishing_pattern
            && self.rank == self.expected_rank
    }

    fn failed(expected_rank: usize) -> Self {
        IndependenceWitness {
            expected_rank,
            rank: 0,
            hyperplanes_unique: false,
            base_nonvanishing: false,
            vanishing_pattern: false,
        }
    }
}

/// Unique hyperplane through the given points of projective `(len-1)`-space,
/// as a coefficient vector, or `None` when the points do not span one.
pub fn hyperplane_through(field: FieldSpec, points: &[Vec<Scalar>]) -> Result<Option<Vec<Scalar>>> {
    if points.is_empty() {
        return Err(Error::InvalidInput("need at least one point".into()));
    }
    let ambient = points[0].len();
    for p in points {
        if p.len() != ambient {
            return Err(Error::InvalidInput("points of mixed lengths".into()));
        }
        if p.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidInput("zero vector is not a point".into()));
        }
    }
    let span = VecSubspace::from_spanning(ambient, field, points)?;
    if span.dim() + 1 != ambient {
        return Ok(None);
    }
    // The annihilator of a codimension-1 row space is one equation; read it
    // off the reduced basis by solving for a complementary coordinate.
    let basis = span.basis();
    let mut pivots = vec![false; ambient];
    for r in 0..basis.rows() {
        let lead = (0..ambient)
            .find(|&c| !basis.get(r, c).is_zero())
            .expect("reduced basis row cannot be zero");
        pivots[lead] = true;
    }
    let free = (0..ambient).find(|&c| !pivots[c]).expect("codim 1 leaves one free column");
    let mut eq = vec![Scalar::from_int(0, field); ambient];
    eq[free] = Scalar::from_int(-1, field);
    for r in 0..basis.rows() {
        let lead = (0..ambient).find(|&c| !basis.get(r, c).is_zero()).unwrap();
        // Row-reduce form: coefficient on the free column, normalized by the pivot.
        eq[lead] = basis.get(r, free) / basis.get(r, lead);
    }
    Ok(Some(eq))
}

fn eval_form(coeffs: &[Scalar], point: &[Scalar]) -> Scalar {
    let mut acc = Scalar::from_int(0, coeffs[0].field());
    for (c, x) in coeffs.iter().zip(point) {
        acc = &acc + &(c * x);
    }
    acc
}

/// Builds `d*n + 1` product-of-hyperplane multilinear forms from `d` points
/// `Q` and `n` points `P` of projective `n`-space and checks that their
/// one-jets at `(Q_1, ..., Q_d)` are independent: the base form multiplies
/// the hyperplane through all of `P` across the `d` slots, and each
/// replacement form swaps one `P`-point for one `Q`-point. Degenerate
/// configurations (no unique hyperplane, or a `Q`-point on the base
/// hyperplane) are reported as a failed witness rather than an error.
pub fn multilinear_independence_witness(
    q_points: &[Vec<Scalar>],
    p_points: &[Vec<Scalar>],
) -> Result<IndependenceWitness> {
    let d = q_points.len();
    let n = p_points.len();
    if d == 0 || n == 0 {
        return Err(Error::InvalidInput("need at least one point in each family".into()));
    }
    let field = q_points[0][0].field();
    for pt in q_points.iter().chain(p_points) {
        if pt.len() != n + 1 {
            return Err(Error::InvalidInput(format!(
                "points must have {} coordinates",
                n + 1
            )));
        }
    }
    let expected_rank = d * n + 1;

    let base = match hyperplane_through(field, p_points)? {
        Some(h) => h,
        None => return Ok(IndependenceWitness::failed(expected_rank)),
    };
    let base_nonvanishing = q_points.iter().all(|q| !eval_form(&base, q).is_zero());
    if !base_nonvanishing {
        return Ok(IndependenceWitness {
            base_nonvanishing,
            hyperplanes_unique: true,
            ..IndependenceWitness::failed(expected_rank)
        });
    }

    // hyperplanes[0] is the base; then one per (dropped P-point, Q-point).
    let mut hyperplanes = vec![base];
    let mut vanishing_pattern = true;
    for i in 0..n {
        for q in q_points {
            let mut pts: Vec<Vec<Scalar>> = Vec::with_capacity(n);
            for (t, p) in p_points.iter().enumerate() {
                if t != i {
                    pts.push(p.clone());
                }
            }
            pts.push(q.clone());
            let h = match hyperplane_through(field, &pts)? {
                Some(h) => h,
                None => return Ok(IndependenceWitness::failed(expected_rank)),
            };
            for pt in &pts {
                if !eval_form(&h, pt).is_zero() {
                    vanishing_pattern = false;
                }
            }
            hyperplanes.push(h);
        }
    }

    // One-jet of prod_j H(u_j) at (Q_1, ..., Q_d): the gradient in slot j
    // is prod_{k != j} H(Q_k) times the hyperplane's coefficient vector.
    // Values are slot-wise Euler combinations of the gradients, so gradient
    // rank equals one-jet rank.
    let mut rows = Vec::with_capacity(hyperplanes.len());
    for h in &hyperplanes {
        let values: Vec<Scalar> = q_points.iter().map(|q| eval_form(h, q)).collect();
        let mut row = Vec::with_capacity(d * (n + 1));
        for j in 0..d {
            let mut factor = Scalar::from_int(1, field);
            for (k, v) in values.iter().enumerate() {
                if k != j {
                    factor = &factor * v;
                }
            }
            for c in h {
                row.push(&factor * c);
            }
        }
        rows.push(row);
    }
    let rank = VecSubspace::from_spanning(d * (n + 1), field, &rows)?.dim();
    Ok(IndependenceWitness {
        expected_rank,
        rank,
        hyperplanes_unique: true,
        base_nonvanishing: true,
        vanishing_pattern,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::DEFAULT_PRIME;

    const Q: FieldSpec = FieldSpec::Rational;
    const P: FieldSpec = FieldSpec::Prime(DEFAULT_PRIME);

    fn lf(coeffs: &[i64]) -> HomPoly {
        HomPoly::linear_form_int(coeffs, Q)
    }

    #[test]
    fn variety_dimensions() {
        let cases = [
            (VarietySpec::Split { n: 2, d: 3 }, 6, 9),
            (VarietySpec::Split { n: 3, d: 4 }, 12, 34),
            (VarietySpec::Veronese { n: 2, d: 3 }, 2, 9),
            (VarietySpec::Grassmann { k: 2, n: 6 }, 12, 34),
            (VarietySpec::Grassmann { k: 1, n: 3 }, 4, 5),
        ];
        for (spec, dim, ambient) in cases {
            spec.validate().unwrap();
            assert_eq!(spec.variety_dim(), dim, "{spec}");
            assert_eq!(spec.ambient_dim(), ambient, "{spec}");
        }
        assert_eq!(
            VarietySpec::Grassmann { k: 2, n: 6 }.expected_secant_dim(3),
            34
        );
        assert!(VarietySpec::Grassmann { k: 3, n: 3 }.validate().is_err());
        assert!(VarietySpec::Split { n: 0, d: 2 }.validate().is_err());
    }

    #[test]
    fn split_tangent_span_single_factor_is_whole_degree_one_space() {
        let span = split_tangent_span(&[lf(&[1, 2, -1])]).unwrap();
        assert_eq!(span.dim(), 3);
    }

    #[test]
    fn split_tangent_span_generic_pair_has_affine_dim_five() {
        let span = split_tangent_span(&[lf(&[1, 2, 3]), lf(&[1, -1, 4])]).unwrap();
        assert_eq!(span.dim(), 5);
    }

    #[test]
    fn split_tangent_span_drops_on_repeated_factor() {
        let span = split_tangent_span(&[lf(&[1, 0, 0]), lf(&[1, 0, 0])]).unwrap();
        assert_eq!(span.dim(), 3);
        assert!(split_tangent_span(&[lf(&[1, 0, 0]), HomPoly::linear_form_int(&[0, 0, 0], Q)])
            .is_err());
    }

    #[test]
    fn veronese_osc_span_dimensions() {
        let l = lf(&[2, -1, 3]);
        assert_eq!(veronese_osc_span(&l, 3, 0).unwrap().dim(), 1);
        assert_eq!(veronese_tangent_span(&l, 3).unwrap().dim(), 3);
        assert_eq!(veronese_osc_span(&l, 3, 2).unwrap().dim(), 6);
        assert_eq!(veronese_osc_span(&l, 3, 3).unwrap().dim(), 10);
        assert!(veronese_osc_span(&l, 3, 4).is_err());
    }

    #[test]
    fn veronese_tangent_span_at_coordinate_form() {
        // At x0 the tangent span is generated by x0^3, x0^2 x1, x0^2 x2.
        let span = veronese_tangent_span(&lf(&[1, 0, 0]), 3).unwrap();
        let idx = MonomialIndex::new(3, 3);
        for exps in [[3u32, 0, 0], [2, 1, 0], [2, 0, 1]] {
            let v = HomPoly::monomial(3, &exps, Scalar::from_int(1, Q))
                .unwrap()
                .coeff_vector(&idx)
                .unwrap();
            assert!(span.contains(&v).unwrap());
        }
        let outside = HomPoly::monomial(3, &[1, 2, 0], Scalar::from_int(1, Q))
            .unwrap()
            .coeff_vector(&idx)
            .unwrap();
        assert!(!span.contains(&outside).unwrap());
    }

    #[test]
    fn grassmann_tangent_span_at_coordinate_plane() {
        // Lines in projective 3-space at the span of e0, e1: tuple order
        // 01, 02, 03, 12, 13, 23. Every coordinate vector except e_{23}
        // lies in the tangent span.
        let basis = Mat::from_rows(
            Q,
            vec![
                vec![1, 0, 0, 0].iter().map(|&c| Scalar::from_int(c, Q)).collect(),
                vec![0, 1, 0, 0].iter().map(|&c| Scalar::from_int(c, Q)).collect(),
            ],
        )
        .unwrap();
        let span = grassmann_tangent_span(&basis).unwrap();
        assert_eq!(span.dim(), 5);
        for (t, inside) in [(0, true), (1, true), (2, true), (3, true), (4, true), (5, false)] {
            let mut v = vec![Scalar::from_int(0, Q); 6];
            v[t] = Scalar::from_int(1, Q);
            assert_eq!(span.contains(&v).unwrap(), inside, "tuple index {t}");
        }
    }

    #[test]
    fn grassmann_tangent_span_rejects_dependent_basis() {
        let basis = Mat::from_rows(
            Q,
            vec![
                vec![Scalar::from_int(1, Q), Scalar::from_int(2, Q), Scalar::from_int(3, Q)],
                vec![Scalar::from_int(2, Q), Scalar::from_int(4, Q), Scalar::from_int(6, Q)],
            ],
        )
        .unwrap();
        assert!(grassmann_tangent_span(&basis).is_err());
    }

    #[test]
    fn secant_of_one_point_is_the_variety() {
        let opts = SecantOptions {
            trials: 2,
            field: P,
            ..Default::default()
        };
        for spec in [
            VarietySpec::Split { n: 2, d: 3 },
            VarietySpec::Veronese { n: 3, d: 2 },
            VarietySpec::Grassmann { k: 2, n: 6 },
        ] {
            let report = secant_dimension(spec, 1, &opts).unwrap();
            assert_eq!(report.computed_proj_dim, spec.variety_dim(), "{spec}");
            assert!(!report.defective_observed);
        }
    }

    #[test]
    fn grassmann_two_six_three_points_is_defective() {
        let opts = SecantOptions {
            trials: 4,
            field: P,
            ..Default::default()
        };
        let report = secant_dimension(VarietySpec::Grassmann { k: 2, n: 6 }, 3, &opts).unwrap();
        assert_eq!(report.expected_proj_dim, 34);
        assert_eq!(report.computed_proj_dim, 33);
        assert_eq!(report.defect_observed, 1);
        assert!(report.defective_observed);
    }

    #[test]
    fn split_three_four_with_three_points_fills() {
        let opts = SecantOptions {
            trials: 3,
            field: P,
            ..Default::default()
        };
        let report = secant_dimension(VarietySpec::Split { n: 3, d: 4 }, 3, &opts).unwrap();
        assert_eq!(report.ambient_proj_dim, 34);
        assert_eq!(report.computed_proj_dim, 34);
        assert!(!report.defective_observed);
    }

    #[test]
    fn confirmed_run_records_rational_agreement() {
        let opts = SecantOptions {
            trials: 2,
            field: P,
            seed: 7,
            ..Default::default()
        };
        let report =
            secant_dimension_confirmed(VarietySpec::Grassmann { k: 2, n: 6 }, 3, &opts, 1).unwrap();
        assert_eq!(report.computed_proj_dim, 33);
        assert_eq!(report.rational_confirmed, Some(true));
        assert!(report.field.contains("rational"));
    }

    #[test]
    fn computed_dimension_is_monotone_in_s() {
        let opts = SecantOptions {
            trials: 2,
            field: P,
            ..Default::default()
        };
        let spec = VarietySpec::Split { n: 2, d: 2 };
        let mut last = 0;
        for s in 1..=3 {
            let r = secant_dimension(spec, s, &opts).unwrap();
            assert!(r.computed_proj_dim >= last);
            last = r.computed_proj_dim;
        }
        // Two generic pairs of lines span the whole space of conics.
        assert_eq!(last, 5);
    }

    #[test]
    fn codim_formula_values() {
        assert_eq!(split2_codim_formula(5, 2), 3);
        assert_eq!(split2_codim_formula(3, 2), 0);
        assert_eq!(split2_codim_formula(8, 2), 15);
        assert_eq!(split2_codim_formula(2, 2), 0);
    }

    #[test]
    fn codim_formula_matches_sampled_ranks_for_small_cases() {
        let opts = SecantOptions {
            trials: 3,
            field: P,
            ..Default::default()
        };
        for (n, s) in [(3usize, 2usize), (4, 2), (5, 2)] {
            let split = secant_dimension(VarietySpec::Split { n, d: 2 }, s, &opts).unwrap();
            let grass =
                secant_dimension(VarietySpec::Grassmann { k: 1, n: n + 1 }, s, &opts).unwrap();
            let codim = split2_codim_formula(n, s);
            assert_eq!(split.ambient_proj_dim - split.computed_proj_dim, codim);
            assert_eq!(grass.ambient_proj_dim - grass.computed_proj_dim, codim);
        }
    }

    fn int_points(field: FieldSpec, pts: &[&[i64]]) -> Vec<Vec<Scalar>> {
        pts.iter()
            .map(|p| p.iter().map(|&c| Scalar::from_int(c, field)).collect())
            .collect()
    }

    #[test]
    fn hyperplane_through_points() {
        let pts = int_points(Q, &[&[1, 0, 0], &[0, 1, 0]]);
        let h = hyperplane_through(Q, &pts).unwrap().unwrap();
        // Unique up to scale: must vanish on both points and not on e2.
        assert!(eval_form(&h, &pts[0]).is_zero());
        assert!(eval_form(&h, &pts[1]).is_zero());
        assert!(!eval_form(&h, &int_points(Q, &[&[0, 0, 1]])[0]).is_zero());

        // Dependent points span less than a hyperplane.
        let dep = int_points(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 0, 0]]);
        assert!(hyperplane_through(Q, &dep).unwrap().is_none());
    }

    #[test]
    fn independence_witness_holds_for_generic_configurations() {
        // n = 2, d = 3. No two Q-points may be collinear with a P-point.
        let p_pts = int_points(Q, &[&[1, 0, 0], &[0, 1, 0]]);
        let q_pts = int_points(Q, &[&[1, 1, 1], &[1, 2, 3], &[3, 1, 2]]);
        let w = multilinear_independence_witness(&q_pts, &p_pts).unwrap();
        assert_eq!(w.expected_rank, 7);
        assert_eq!(w.rank, 7);
        assert!(w.holds());

        // n = 3, d = 3: ten independent one-jets.
        let p_pts = int_points(P, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        let q_pts = int_points(P, &[&[1, 1, 1, 1], &[1, 2, 3, 5], &[2, -1, 1, 3]]);
        let w = multilinear_independence_witness(&q_pts, &p_pts).unwrap();
        assert_eq!(w.expected_rank, 10);
        assert!(w.holds());
    }

    #[test]
    fn independence_witness_fails_on_degenerate_input() {
        // Dependent P-points: no unique hyperplane, reported not crashed.
        let p_pts = int_points(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 0, 0]]);
        let q_pts = int_points(Q, &[&[1, 1, 1, 1], &[1, 2, 3, 1], &[2, -1, 1, 3]]);
        let w = multilinear_independence_witness(&q_pts, &p_pts).unwrap();
        assert!(!w.holds());
        assert!(!w.hyperplanes_unique);

        // A Q-point on the base hyperplane.
        let p_pts = int_points(Q, &[&[1, 0, 0], &[0, 1, 0]]);
        let q_pts = int_points(Q, &[&[1, 1, 0], &[1, 2, 1], &[2, 1, 1]]);
        let w = multilinear_independence_witness(&q_pts, &p_pts).unwrap();
        assert!(!w.holds());
        assert!(w.hyperplanes_unique);
        assert!(!w.base_nonvanishing);

        // Two Q-points collinear with a P-point: every structural check
        // passes but the one-jets degenerate, so the rank drops.
        let p_pts = int_points(Q, &[&[1, 0, 0], &[0, 1, 0]]);
        let q_pts = int_points(Q, &[&[1, 1, 1], &[1, 2, 1], &[2, 1, 1]]);
        let w = multilinear_independence_witness(&q_pts, &p_pts).unwrap();
        assert!(w.hyperplanes_unique && w.base_nonvanishing && w.vanishing_pattern);
        assert!(w.rank < w.expected_rank);
        assert!(!w.holds());
    }
}
