//! Acceptance battery. Each test prints one PASS line when its criterion
//! holds exactly (integer arithmetic, tolerance zero); run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qcpb::{
    anticanonical_degree, batyrev_presentation, binomial, classical_normal_form, classical_rules,
    hypothesis_report, incident_line_class, integrate_grassmannian, known_invariants,
    moduli_dimension, normalized_split_bundles, proved_regime_bundles, quantum_normal_form,
    quantum_product, quantum_rules, ring_vars, run_sweep, tangent_presentation,
    verify_presentation, w_classical_pairing, w_double_sum, w_generating_function,
    w_schubert_integral, BundleSpec, CurveClass, IntPoly, RewriteRules, SweepBounds,
};

fn split(n: u32, m: &[i64]) -> BundleSpec {
    BundleSpec::split(n, m.to_vec()).unwrap()
}

#[test]
fn criterion_1_product_form_sweep() {
    let start = Instant::now();
    let bounds = SweepBounds::default();
    let entries = run_sweep(&bounds).unwrap();
    assert!(entries.len() >= 30, "sweep unexpectedly small: {}", entries.len());
    for entry in &entries {
        assert!(
            entry.passed(),
            "verification failed for {}: {:?}",
            entry.bundle,
            entry.report
        );
    }
    let worked = [split(3, &[1, 2]), split(4, &[1, 1, 3])];
    for b in worked {
        assert!(entries.iter().any(|e| e.bundle == b), "{b} missing from sweep");
    }
    println!(
        "PASS [1/8] product-form verification sweep: {} bundles (n <= 6, r <= 5, twists <= 5) \
         all pass the battery in {:.1}s",
        entries.len(),
        start.elapsed().as_secs_f64()
    );
}

#[test]
fn criterion_2_three_way_coefficient_agreement() {
    let bundles = proved_regime_bundles(&SweepBounds::default());
    let mut coefficients = 0usize;
    for bundle in &bundles {
        for i in 0..=(bundle.c1() - bundle.r() as i64) {
            let series = w_generating_function(bundle, i).unwrap();
            let double = w_double_sum(bundle, i).unwrap();
            let geometric = w_schubert_integral(bundle, i).unwrap();
            assert_eq!(series, double, "double sum differs at i={i} on {bundle}");
            assert_eq!(series, geometric, "integral differs at i={i} on {bundle}");
            coefficients += 1;
        }
    }
    println!(
        "PASS [2/8] three-way coefficient agreement on {} proved-regime bundles \
         ({coefficients} coefficients)",
        bundles.len()
    );
}

#[test]
fn criterion_3_classical_pairing_agreement() {
    let bundles: Vec<BundleSpec> = normalized_split_bundles(&SweepBounds::default())
        .into_iter()
        .filter(|b| hypothesis_report(b).gw_series_bound.holds)
        .collect();
    let mut coefficients = 0usize;
    for bundle in &bundles {
        for i in 0..=(bundle.c1() - bundle.r() as i64) {
            let series = w_generating_function(bundle, i).unwrap();
            let pairing = w_classical_pairing(bundle, i).unwrap();
            assert_eq!(series, pairing, "pairing differs at i={i} on {bundle}");
            coefficients += 1;
        }
    }
    assert!(bundles.len() >= proved_regime_bundles(&SweepBounds::default()).len());
    println!(
        "PASS [3/8] classical pairing agrees on {} series-regime bundles \
         ({coefficients} coefficients)",
        bundles.len()
    );
}

#[test]
fn criterion_4_tangent_rings() {
    for n in 2..=6u32 {
        let bundle = BundleSpec::tangent(n).unwrap();
        let pres = tangent_presentation(n).unwrap();
        let report = verify_presentation(&pres, &bundle).unwrap();
        assert!(report.all_passed(), "tangent n={n}: {:?}", report);

        let expected = if n % 2 == 0 { 2 } else { 0 };
        let mut q_exp = vec![0u32; 3];
        q_exp[2] = n;
        assert_eq!(
            pres.relations[1].rhs.coefficient(&q_exp),
            BigInt::from(expected),
            "second-relation constant at n={n}"
        );

        // Independent assembly: the constant is 1 plus an alternating sum of
        // binomial coefficients, each weighted by a descendant count of 1.
        let mut assembled = BigInt::from(1);
        for i in 0..=n {
            let count = BigInt::from(1);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            assembled += sign * binomial((n + 1) as i64, i) * count;
        }
        assert_eq!(assembled, BigInt::from(expected), "assembled constant at n={n}");
    }
    println!(
        "PASS [4/8] tangent rings n=2..6 verified; second-relation constant equals 1+(-1)^n, \
         independently assembled from unit counts and binomials"
    );
}

/// Dense bivariate polynomials over i128, indexed [alpha_exp][beta_exp].
/// A deliberately separate implementation used as the integration oracle.
mod dense {
    pub type Poly = Vec<Vec<i128>>;

    pub fn mul(x: &Poly, y: &Poly) -> Poly {
        let rows = x.len() + y.len() - 1;
        let cols = x[0].len() + y[0].len() - 1;
        let mut out = vec![vec![0i128; cols]; rows];
        for (i, xr) in x.iter().enumerate() {
            for (j, &xv) in xr.iter().enumerate() {
                if xv == 0 {
                    continue;
                }
                for (k, yr) in y.iter().enumerate() {
                    for (l, &yv) in yr.iter().enumerate() {
                        out[i + k][j + l] += xv * yv;
                    }
                }
            }
        }
        out
    }

    /// sum_{t < p} alpha^t beta^{p-1-t}
    pub fn sigma(p: usize) -> Poly {
        let mut out = vec![vec![0i128; p]; p];
        for t in 0..p {
            out[t][p - 1 - t] = 1;
        }
        out
    }

    /// -(1/2) [alpha^n beta^n] (alpha - beta)^2 P
    pub fn integrate(p: &Poly, n: usize) -> i128 {
        let square = vec![vec![0, 0, 1], vec![0, -2, 0], vec![1, 0, 0]];
        let full = mul(p, &square);
        let c = full
            .get(n)
            .and_then(|row| row.get(n))
            .copied()
            .unwrap_or(0);
        assert!(c % 2 == 0, "integrand coefficient must be even");
        -c / 2
    }
}

fn partitions_into_parts(total: u32, max_part: u32) -> Vec<Vec<u32>> {
    fn go(total: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = max_part.min(total);
        for part in (1..=top).rev() {
            prefix.push(part);
            go(total - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, max_part, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_5_schubert_oracle() {
    let mut products = 0usize;
    for n in 2..=6u32 {
        for partition in partitions_into_parts(2 * n - 2, n - 1) {
            // One incident-line factor per part; part = degree = p - 1.
            let mut library = incident_line_class(partition[0] + 1, n).unwrap();
            let mut oracle = dense::sigma(partition[0] as usize + 1);
            for &part in &partition[1..] {
                library = library
                    .checked_mul(&incident_line_class(part + 1, n).unwrap())
                    .unwrap();
                oracle = dense::mul(&oracle, &dense::sigma(part as usize + 1));
            }
            let got = integrate_grassmannian(&library).unwrap();
            let want = dense::integrate(&oracle, n as usize);
            assert_eq!(got, BigInt::from(want), "n={n}, partition {partition:?}");
            products += 1;
        }
    }
    // The two classical values, explicitly.
    let sigma1 = |n| incident_line_class(2, n).unwrap();
    let sq = sigma1(2).checked_mul(&sigma1(2)).unwrap();
    assert_eq!(integrate_grassmannian(&sq).unwrap(), BigInt::from(1));
    let quad = sigma1(3)
        .checked_mul(&sigma1(3))
        .unwrap()
        .checked_mul(&sigma1(3).checked_mul(&sigma1(3)).unwrap())
        .unwrap();
    assert_eq!(integrate_grassmannian(&quad).unwrap(), BigInt::from(2));
    println!(
        "PASS [5/8] line-incidence integrals match the dense expansion oracle on {products} \
         degree-(2n-2) products, n <= 6, including sigma_1^2 = 1 and sigma_1^4 = 2"
    );
}

#[test]
fn criterion_6_known_invariant_constants() {
    let find = |bundle: &BundleSpec, id: &str| {
        known_invariants(bundle)
            .into_iter()
            .find(|k| k.id == id)
            .unwrap()
    };

    let worked = split(3, &[1, 2]);
    let fiber = find(&worked, "fiber-point-incidence");
    assert!(fiber.applicable);
    assert_eq!(fiber.value, Some(1));
    let vanishing = find(&worked, "fiber-low-xi-vanishing");
    assert!(vanishing.applicable);
    assert_eq!(vanishing.value, Some(0));
    let leading = find(&worked, "section-leading");
    assert!(leading.applicable);
    assert_eq!(leading.value, Some(1));
    for id in ["tangent-hyperplane", "tangent-point"] {
        let row = find(&worked, id);
        assert!(!row.applicable);
        assert_eq!(row.value, None);
    }

    // c1 = 2r: the leading-count lemma no longer applies.
    let boundary = split(2, &[1, 3]);
    let gated = find(&boundary, "section-leading");
    assert!(!gated.applicable);
    assert_eq!(gated.value, None);

    for n in 2..=6u32 {
        let tangent = BundleSpec::tangent(n).unwrap();
        assert_eq!(find(&tangent, "tangent-hyperplane").value, Some(n as i64));
        assert_eq!(find(&tangent, "tangent-point").value, Some(1));
        assert_eq!(find(&tangent, "fiber-point-incidence").value, Some(1));
    }
    println!(
        "PASS [6/8] known invariant constants (1, 0, 1, n, 1) and applicability flags reproduced"
    );
}

fn interleaving_suite(rules: &RewriteRules, n: u32, r: u32, trials: usize, rng: &mut ChaCha8Rng) {
    use rand::Rng;
    let vars = ring_vars();
    for _ in 0..trials {
        let a = rng.gen_range(0..=2 * n);
        let b = rng.gen_range(0..=2 * r);
        let c = rng.gen_range(0..=2u32);
        let monom = IntPoly::monomial(&vars, &[a, b, c], 1);
        let deterministic = rules.reduce(&monom);
        let randomized = rules.reduce_randomized(&monom, rng);
        assert_eq!(randomized, deterministic, "h^{a} xi^{b} q^{c}");
        assert!(rules.is_reduced(&deterministic));
    }
}

#[test]
fn criterion_7_structural_battery() {
    // Confluence: 1000 randomized interleavings per representative ring.
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    let rings: Vec<(RewriteRules, u32, u32)> = vec![
        (
            quantum_rules(&batyrev_presentation(&split(3, &[1, 2])).unwrap()).unwrap(),
            3,
            2,
        ),
        (
            quantum_rules(&batyrev_presentation(&split(4, &[1, 1, 3])).unwrap()).unwrap(),
            4,
            3,
        ),
        (
            quantum_rules(&tangent_presentation(2).unwrap()).unwrap(),
            2,
            2,
        ),
        (
            quantum_rules(&tangent_presentation(5).unwrap()).unwrap(),
            5,
            5,
        ),
        (classical_rules(&split(3, &[1, 2, 4])), 3, 3),
    ];
    for (rules, n, r) in &rings {
        interleaving_suite(rules, *n, *r, 1000, &mut rng);
    }

    // Quantum minus classical lies in (q), over every basis pair of two
    // representative rings.
    for (bundle, pres) in [
        (split(3, &[1, 2]), batyrev_presentation(&split(3, &[1, 2])).unwrap()),
        (
            BundleSpec::tangent(2).unwrap(),
            tangent_presentation(2).unwrap(),
        ),
    ] {
        let vars = ring_vars();
        for (i, j) in pres.basis() {
            for (k, l) in pres.basis() {
                let x = quantum_normal_form(&IntPoly::monomial(&vars, &[i, j, 0], 1), &pres)
                    .unwrap();
                let y = quantum_normal_form(&IntPoly::monomial(&vars, &[k, l, 0], 1), &pres)
                    .unwrap();
                let quantum = quantum_product(&x, &y, &pres).unwrap().to_poly();
                let product = IntPoly::monomial(&vars, &[i + k, j + l, 0], 1);
                let classical = classical_normal_form(&product, &bundle).unwrap().to_poly();
                let difference = quantum.checked_sub(&classical).unwrap();
                for (exps, _) in difference.terms() {
                    assert!(
                        exps[2] >= 1,
                        "difference outside (q) at basis pair ({i},{j}),({k},{l}) on {bundle}"
                    );
                }
            }
        }
    }

    // Moduli dimension identity across the sweep: for splitting degrees at
    // or above the top twist, the dimension is the anticanonical degree of
    // the degree-(1, m - c1) class plus dim P(V).
    let mut identities = 0usize;
    for bundle in proved_regime_bundles(&SweepBounds::default()) {
        let m = bundle.twists().unwrap();
        let top = *m.last().unwrap();
        let n = bundle.n() as i64;
        let r = bundle.r() as i64;
        for deg in top..top + 3 {
            let via_formula = moduli_dimension(&bundle, deg).unwrap();
            let class = CurveClass::new(1, deg - bundle.c1());
            let via_degree = anticanonical_degree(&bundle, &class) + (n + r - 1);
            assert_eq!(via_formula, via_degree, "degree {deg} on {bundle}");
            identities += 1;
        }
        assert_eq!(
            moduli_dimension(&bundle, 1).unwrap(),
            2 * n + bundle.min_twist_count() as i64,
            "minimal-degree dimension on {bundle}"
        );
    }

    println!(
        "PASS [7/8] structural battery: 1000 interleavings on each of {} rings agree, \
         quantum-classical differences lie in (q), {identities} moduli dimension identities hold",
        rings.len()
    );
}

#[test]
fn criterion_8_uniform_plus_one_displays() {
    let mut checked = 0usize;
    for r in 2..=5u32 {
        for n in r..=6 {
            let mut m = vec![1i64; r as usize - 1];
            m.push(2);
            let pres = batyrev_presentation(&split(n, &m)).unwrap();
            assert_eq!(
                pres.kind,
                qcpb::RingKind::QuantumVerified,
                "n={n}, r={r} should sit in the proved regime"
            );
            assert_eq!(
                pres.relations[0].display,
                format!("h^{} = (xi - 2*h)*q^{}", n + 1, n),
            );
            let factors = if r == 2 {
                "(xi - h)*(xi - 2*h)".to_string()
            } else {
                format!("(xi - h)^{}*(xi - 2*h)", r - 1)
            };
            assert_eq!(pres.relations[1].display, format!("{factors} = q^{r}"));
            checked += 1;
        }
    }
    println!(
        "PASS [8/8] {checked} uniform-plus-one bundles print the factored relations \
         h^(n+1) = (xi - 2*h)*q^n and (xi - h)^(r-1)*(xi - 2*h) = q^r, 2 <= r <= n <= 6"
    );
}
