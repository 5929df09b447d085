//! End-to-end acceptance battery. One test per criterion; each prints its
//! elapsed time (visible with `--nocapture`). Frozen values appear inline;
//! sampled computations run with fixed seeds so every run is reproducible.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use splitgrass::checks::{
    check_codim_grid, check_ehrenborg_cases, check_five_lines, proportional_polys, standard_suite,
    triple_tangent_plane,
};
use splitgrass::comb::binomial;
use splitgrass::exactla::{FieldSpec, Scalar, VecSubspace, DEFAULT_PRIME};
use splitgrass::grassmann::{pluecker_of, PlueckerVec, Subspace};
use splitgrass::polyalg::{parse_poly, splits_ternary_cubic, HomPoly, MonomialIndex};
use splitgrass::terracini::{secant_dimension, SecantOptions, VarietySpec};
use splitgrass::verograss::curve::curve_intersection_degree;
use splitgrass::verograss::{veronese_jet_span, veronese_point, Identification};

fn done(name: &str, start: Instant) {
    println!("{name}: PASS in {:.2}s", start.elapsed().as_secs_f64());
}

fn random_form(rng: &mut impl Rng, nvars: usize, degree: u32, field: FieldSpec) -> HomPoly {
    loop {
        let idx = splitgrass::polyalg::MonomialIndex::new(nvars, degree);
        let coeffs: Vec<Scalar> = (0..idx.len())
            .map(|_| Scalar::from_int(rng.gen_range(-9..=9), field))
            .collect();
        if coeffs.iter().any(|c| !c.is_zero()) {
            return HomPoly::from_coeff_vector(&idx, &coeffs, field).expect("shape fits");
        }
    }
}

fn random_linear(rng: &mut impl Rng, nvars: usize, field: FieldSpec) -> HomPoly {
    random_form(rng, nvars, 1, field)
}

#[test]
fn criterion_01_cubic_minor_table() {
    let start = Instant::now();
    let field = FieldSpec::Rational;
    let ident = Identification::get(2, 3, field).unwrap();
    let expected = [
        ("012", "x0^3"),
        ("013", "x0^2*x1"),
        ("014", "x0^2*x2"),
        ("023", "-x0^2*x2 + x0*x1^2"),
        ("024", "x0*x1*x2"),
        ("034", "x0*x2^2"),
        ("123", "-2*x0*x1*x2 + x1^3"),
        ("124", "-x0*x2^2 + x1^2*x2"),
        ("134", "x1*x2^2"),
        ("234", "x2^3"),
    ];
    assert_eq!(ident.tuples().len(), expected.len());
    for (i, (tuple, poly)) in expected.iter().enumerate() {
        let label: String =
            ident.tuples().tuple(i).iter().map(|c| c.to_string()).collect();
        assert_eq!(&label, tuple);
        let want = parse_poly(poly, 3).unwrap();
        assert_eq!(ident.minors()[i], want, "minor at tuple {tuple}");
    }
    done("criterion 01 (cubic minor table)", start);
}

#[test]
fn criterion_02_random_form_round_trips() {
    let start = Instant::now();
    let field = FieldSpec::Rational;

    // two frozen rows of the coefficient-from-Pluecker matrix: the x1^3
    // coefficient of the form attached to p is p_123 + 2*p_024, and the
    // x0*x1^2 coefficient is 3*(p_023 + p_014)
    let ident = Identification::get(2, 3, field).unwrap();
    let row = |alpha: &[u32]| {
        let i = ident.monomials().position(alpha).unwrap();
        let m = ident.to_poly_matrix();
        (0..m.cols()).map(|j| m.get(i, j).clone()).collect::<Vec<_>>()
    };
    let tuple_pos = |t: &[usize]| ident.tuples().position(t).unwrap();
    let expect_row = |alpha: &[u32], entries: &[(&[usize], i64)]| {
        let got = row(alpha);
        for (j, val) in got.iter().enumerate() {
            let want = entries
                .iter()
                .find(|(t, _)| tuple_pos(t) == j)
                .map_or(0, |&(_, v)| v);
            assert_eq!(val, &Scalar::from_int(want, field), "entry {j} of row {alpha:?}");
        }
    };
    expect_row(&[0, 3, 0], &[(&[1, 2, 3], 1), (&[0, 2, 4], 2)]);
    expect_row(&[1, 2, 0], &[(&[0, 2, 3], 3), (&[0, 1, 4], 3)]);

    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for (n, d) in [(2usize, 3usize), (3, 2), (1, 4)] {
        let ident = Identification::get(n, d, field).unwrap();
        for _ in 0..20 {
            // an arbitrary form survives the two-way translation exactly
            let f = random_form(&mut rng, n + 1, d as u32, field);
            let pv = ident.pluecker_of(&f).unwrap();
            assert_eq!(ident.polynomial_of(&pv).unwrap(), f);

            // a power of a linear form lands on the decomposable locus and
            // agrees with the minors of its banded matrix
            let l = random_linear(&mut rng, n + 1, field);
            let cube = l.power(d as u32);
            let pv = ident.pluecker_of(&cube).unwrap();
            assert!(pv.is_decomposable());
            assert!(pv.proj_equal(&veronese_point(&l, d).unwrap()).unwrap());
        }
    }
    done("criterion 02 (random form round trips)", start);
}

#[test]
fn criterion_03_triple_tangent_line() {
    let start = Instant::now();
    let field = FieldSpec::Rational;
    let frozen_line = Subspace::from_int_equations(
        field,
        &[vec![1, -2, 0, 0, 0], vec![0, 0, 1, 0, 0], vec![0, 0, 0, -2, 1]],
    )
    .unwrap();
    let frozen_pv =
        PlueckerVec::from_ints(5, 3, field, &[0, 0, 0, 2, -1, 0, -4, 2, 0, 0]).unwrap();

    // the split cubic x1*(x0 - x1)*(x1 - x2), expanded, maps to the frozen
    // vector, which is decomposable, comes back as the frozen line, and
    // that line misses the quartic curve entirely
    let cubic = parse_poly("x0*x1^2 - x0*x1*x2 - x1^3 + x1^2*x2", 3).unwrap();
    let ident = Identification::get(2, 3, field).unwrap();
    let pv = ident.pluecker_of(&cubic).unwrap();
    assert!(pv.proj_equal(&frozen_pv).unwrap());
    assert!(pv.is_decomposable());
    let line = pv.subspace_of().unwrap();
    assert!(line.same_subspace(&frozen_line).unwrap());
    assert_eq!(curve_intersection_degree(&line, 4).unwrap(), 0);

    // the same line arises by intersecting tangent hyperplanes at the
    // parameters [1:0], [0:1], [1:1], and the cubic splits as predicted
    let one = Scalar::one(field);
    let zero = Scalar::zero(field);
    let y = [
        [one.clone(), zero.clone()],
        [zero.clone(), one.clone()],
        [one.clone(), one.clone()],
    ];
    let t = triple_tangent_plane(&[], &y, field).unwrap();
    assert!(t.plane.same_subspace(&frozen_line).unwrap());
    assert!(t.pluecker.proj_equal(&frozen_pv).unwrap());
    assert!(proportional_polys(&t.cubic, &cubic));
    assert!(splits_ternary_cubic(&t.cubic).unwrap());
    let product = t.factors[0].multiply(&t.factors[1]).multiply(&t.factors[2]);
    assert!(proportional_polys(&product, &t.cubic));
    done("criterion 03 (triple tangent line)", start);
}

#[test]
fn criterion_04_five_line_family() {
    let start = Instant::now();
    let res = check_five_lines(&[2, 3]).unwrap();
    assert!(res.passed, "witnesses: {:?}", res.witnesses);
    done("criterion 04 (five line family)", start);
}

#[test]
fn criterion_05_grassmann_split_comparison() {
    let start = Instant::now();
    let res = check_ehrenborg_cases(20, 3, 0).unwrap();
    assert!(res.passed, "witnesses: {:?}", res.witnesses);
    let observed = &res.params["observed"];
    assert_eq!(observed["grassmann(k=2,N=6) s=3"]["computed"], 33);
    assert_eq!(observed["split(n=3,d=4) s=3"]["computed"], 34);
    assert_eq!(observed["split(n=4,d=3) s=3"]["computed"], 34);
    done("criterion 05 (grassmann vs split dimensions)", start);
}

#[test]
fn criterion_06_codimension_grid() {
    let start = Instant::now();
    let res = check_codim_grid(8, 20, 3, 6, 0).unwrap();
    assert!(res.passed, "witnesses: {:?}", res.witnesses);
    done("criterion 06 (codimension grid to n = 8)", start);
}

#[test]
fn criterion_07_expected_dimensions() {
    let start = Instant::now();
    let opts = SecantOptions {
        trials: 20,
        field: FieldSpec::Prime(DEFAULT_PRIME),
        seed: 0,
        bound: 50,
    };
    for (n, d, s) in [(3usize, 3usize, 2usize), (4, 5, 2), (6, 3, 3), (7, 4, 3)] {
        let rep = secant_dimension(VarietySpec::Split { n, d }, s, &opts).unwrap();
        assert_eq!(
            rep.computed_proj_dim, rep.expected_proj_dim,
            "split(n={n},d={d}) at s={s}"
        );
    }
    done("criterion 07 (expected dimensions hold)", start);
}

#[test]
fn criterion_08_jet_spans() {
    let start = Instant::now();
    let field = FieldSpec::Rational;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 1..=3usize {
        for d in 2..=4usize {
            let ident = Identification::get(n, d, field).unwrap();
            for _ in 0..5 {
                let l = random_linear(&mut rng, n + 1, field);
                let m = random_linear(&mut rng, n + 1, field);
                let mut prev_dim = 0usize;
                for k in 0..=2u32 {
                    let jet = veronese_jet_span(&l, d, k).unwrap();
                    // one basis direction per degree-k monomial
                    assert_eq!(jet.dim() as u64, binomial(n + k as usize, n));
                    assert!(jet.dim() >= prev_dim);
                    prev_dim = jet.dim();

                    // translated to the polynomial side, the order-k jet
                    // span equals the coefficient span of l^(d-k) times the
                    // degree-k monomials, as an exact subspace
                    let translated = ident.poly_span_of(&jet).unwrap();
                    let degree_k = MonomialIndex::new(n + 1, k);
                    let rows: Vec<Vec<Scalar>> = (0..degree_k.len())
                        .map(|i| {
                            let mono = HomPoly::monomial(
                                n + 1,
                                degree_k.tuple(i),
                                Scalar::one(field),
                            )
                            .unwrap();
                            l.power(d as u32 - k)
                                .multiply(&mono)
                                .coeff_vector(ident.monomials())
                                .unwrap()
                        })
                        .collect();
                    let expected =
                        VecSubspace::from_spanning(translated.ambient_dim(), field, &rows)
                            .unwrap();
                    assert_eq!(translated, expected, "n={n} d={d} k={k}");

                    // the point itself sits inside every jet span; the span
                    // lives in Pluecker coordinates, so translate first
                    let point = ident.pluecker_of(&l.power(d as u32)).unwrap();
                    assert!(jet.contains(point.coords()).unwrap());
                }
                // first-order term of (l + t*m)^d lies in the order-1 span
                let jet1 = veronese_jet_span(&l, d, 1).unwrap();
                let deriv = ident
                    .pluecker_of(&l.power(d as u32 - 1).multiply(&m))
                    .unwrap();
                assert!(jet1.contains(deriv.coords()).unwrap());
                // second-order term lies in the order-2 span
                let jet2 = veronese_jet_span(&l, d, 2).unwrap();
                let second = ident
                    .pluecker_of(&l.power(d as u32 - 2).multiply(&m).multiply(&m))
                    .unwrap();
                assert!(jet2.contains(second.coords()).unwrap());
            }
        }
    }
    done("criterion 08 (jet span consistency)", start);
}

#[test]
fn criterion_09_scenario_battery() {
    let start = Instant::now();
    let results = standard_suite(0).unwrap();
    assert!(!results.is_empty());
    for res in &results {
        assert!(res.passed, "{} {} witnesses: {:?}", res.scenario, res.params, res.witnesses);
    }
    done("criterion 09 (scenario battery)", start);
}

#[test]
fn criterion_10_randomized_properties() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let q = FieldSpec::Rational;
    let p = FieldSpec::Prime(DEFAULT_PRIME);
    let mut cases = 0usize;

    // exact division undoes multiplication
    for _ in 0..50 {
        let f = random_form(&mut rng, 3, 2, q);
        let g = random_form(&mut rng, 3, 1, q);
        assert_eq!(f.multiply(&g).divide_exact(&g).unwrap(), f);
        cases += 1;
    }
    // Euler relation: sum_i x_i * df/dx_i = deg * f
    for _ in 0..50 {
        let f = random_form(&mut rng, 3, 3, q);
        let mut sum = HomPoly::zero(3, 3, q);
        for i in 0..3 {
            let mut e = vec![0u32; 3];
            e[i] = 1;
            let xi = HomPoly::monomial(3, &e, Scalar::one(q)).unwrap();
            sum = sum.add(&xi.multiply(&f.partial(i)));
        }
        assert_eq!(sum, f.scale(&Scalar::from_int(3, q)));
        cases += 1;
    }
    // rank over a prime field never exceeds rank over the rationals
    for _ in 0..50 {
        let rows: Vec<Vec<i64>> = (0..4)
            .map(|_| (0..5).map(|_| rng.gen_range(-50..=50)).collect())
            .collect();
        let rq = splitgrass::exactla::Mat::from_int_rows(q, &rows).unwrap().rank();
        let rp = splitgrass::exactla::Mat::from_int_rows(p, &rows).unwrap().rank();
        assert!(rp <= rq);
        assert_eq!(rq, rp, "entries this small cannot drop rank modulo the default prime");
        cases += 1;
    }
    // images of spans round-trip through Pluecker coordinates
    let mut hits = 0;
    while hits < 50 {
        let rows: Vec<Vec<i64>> = (0..2)
            .map(|_| (0..5).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let Ok(sub) = Subspace::from_int_equations(q, &rows) else { continue };
        if sub.codim() != 2 {
            continue;
        }
        let pv = pluecker_of(&sub);
        assert!(pv.is_decomposable());
        assert!(pv.subspace_of().unwrap().same_subspace(&sub).unwrap());
        hits += 1;
        cases += 1;
    }
    assert!(cases >= 200, "only {cases} property cases ran");
    done("criterion 10 (randomized properties)", start);
}
