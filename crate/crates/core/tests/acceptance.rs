//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Criterion 4 is asserted exactly as stated and is expected to fail: the
//! congruence π ≡ ν² (mod P⁵) for r = 7 is solvable (Norm(π) = −7 ≡ 25
//! (mod 32) is an odd-square class, and the exhaustive scan produces an
//! explicit witness), so "π, d, πd all non-squares" cannot hold. The test
//! prints the witness rather than weakening the assertion.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fermat_rrp::arith;
use fermat_rrp::criteria::{
    check_cor_q_prime_d, check_cor_quadratic, check_thm2_hypotheses, norm_reduction_filter,
    Assertions, NormFilter, Verdict, H_PLUS_ODD_TABLE,
};
use fermat_rrp::frey::{
    build_frey_55p, build_frey_rrp, f_k, legendre_identities, phi_r_eval,
    short_weierstrass_invariants,
};
use fermat_rrp::numfield::{
    element_valuation, is_square_in_residue_ring, splitting_type, NumberField, ResidueRing,
};
use fermat_rrp::search::{verify_vacuity, SearchBox, SolutionFilter};
use fermat_rrp::sunit::{descent_step, enumerate_sunit, integral_form, SUnitConfig};
use fermat_rrp::{NumberFieldDesc, PrimeData};

struct Criterion {
    number: u32,
    name: &'static str,
    budget_secs: f64,
    started: Instant,
}

impl Criterion {
    fn start(number: u32, name: &'static str, budget_secs: f64) -> Self {
        Criterion {
            number,
            name,
            budget_secs,
            started: Instant::now(),
        }
    }

    fn finish(self, ok: bool, detail: &str) {
        let elapsed = self.started.elapsed().as_secs_f64();
        println!(
            "criterion {:>2} ({}): {} [{:.2}s / {:.0}s]{}{}",
            self.number,
            self.name,
            if ok { "PASS" } else { "FAIL" },
            elapsed,
            self.budget_secs,
            if detail.is_empty() { "" } else { " — " },
            detail
        );
        assert!(
            elapsed < self.budget_secs,
            "criterion {} exceeded its {}s budget ({elapsed:.2}s)",
            self.number,
            self.budget_secs
        );
        assert!(ok, "criterion {} failed: {detail}", self.number);
    }
}

#[test]
fn criterion_01_paper_example_regression() {
    let c = Criterion::start(1, "cor-q-prime-d example regression", 5.0);
    let expected_7: Vec<u64> = vec![5, 37, 53];
    let expected_11: Vec<u64> = vec![5, 13, 29, 37, 53];
    let mut ok = true;
    let mut detail = String::new();
    for (r, expected) in [(7u64, &expected_7), (11, &expected_11)] {
        let passing: Vec<u64> = arith::primes_up_to(53)
            .into_iter()
            .filter(|&d| d > 2)
            .filter(|&d| check_cor_q_prime_d(r, d).unwrap().passed())
            .collect();
        if passing != *expected {
            ok = false;
            detail = format!("r = {r}: got {passing:?}, expected {expected:?}");
        }
    }
    for d in arith::primes_up_to(9_999).into_iter().filter(|&d| d > 2) {
        if check_cor_q_prime_d(5, d).unwrap().passed() {
            ok = false;
            detail = format!("r = 5 passed at d = {d}");
            break;
        }
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_02_unit_d_list_is_computationally_verified() {
    let c = Criterion::start(2, "unit-d list: 2 inert, r ≢ 1 (mod 8)", 5.0);
    let mut ok = H_PLUS_ODD_TABLE.len() == 21;
    let mut detail = String::new();
    for &r in H_PLUS_ODD_TABLE.iter() {
        let inert = arith::order_mod_pm1(2, r).unwrap() == (r - 1) / 2;
        if !inert || r % 8 == 1 {
            ok = false;
            detail = format!("r = {r}: inert = {inert}, r mod 8 = {}", r % 8);
        }
        // cross-check through the splitting machinery
        let desc = NumberFieldDesc::real_cyclotomic(r).unwrap();
        let p2 = splitting_type(2, &desc).unwrap();
        if p2.g != 1 || p2.e != 1 {
            ok = false;
            detail = format!("r = {r}: splitting gives (e,f,g) = ({},{},{})", p2.e, p2.f, p2.g);
        }
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_03_quadratic_examples() {
    let c = Criterion::start(3, "quadratic-field examples", 1.0);
    let mut ok = true;
    let mut detail = String::new();
    let conds = [
        "r_inert_in_K",
        "r_not_1_mod_8",
        "r_not_t_mod_8",
        "unique_prime_above_2",
    ];
    for (t, r) in [(2u64, 5u64), (2, 11), (2, 13), (5, 7)] {
        let rep = check_cor_quadratic(t, r, &Assertions::default()).unwrap();
        for name in conds {
            if rep.condition(name).unwrap().verdict != Verdict::Pass {
                ok = false;
                detail = format!("(t, r) = ({t}, {r}) failed {name}");
            }
        }
    }
    let rep = check_cor_quadratic(2, 7, &Assertions::default()).unwrap();
    if rep.condition("r_inert_in_K").unwrap().verdict != Verdict::Fail {
        ok = false;
        detail = "(2, 7) did not fail inertness".into();
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_04_prop_condition_3_for_7_5() {
    let c = Criterion::start(4, "π, d, πd non-squares in O/P⁵ for (r,d) = (7,5)", 60.0);
    let field = NumberField::real_cyclotomic(7).unwrap();
    let p2 = splitting_type(2, field.desc()).unwrap();
    let ring = ResidueRing::new(&p2, 5, &field).unwrap();
    assert_eq!(ring.size(), num_bigint::BigUint::from(1u32 << 15));

    let pi = field.sub(&field.theta(), &field.from_int(2));
    let d = field.from_int(5);
    let pid = field.mul(&pi, &d);

    let mut ok = true;
    let mut detail = String::new();
    for (label, el) in [("π", &pi), ("d", &d), ("πd", &pid)] {
        let img = ring.from_field_element(el, &field).unwrap();
        let (is_sq, witness) = is_square_in_residue_ring(&img, &ring).unwrap();
        let (filter, fw) = norm_reduction_filter(el, 5, &field).unwrap();
        // the filter must never contradict the enumeration
        if filter == NormFilter::Excluded && is_sq {
            ok = false;
            detail = format!("{label}: filter excluded an actual square");
        }
        println!(
            "  {label}: square = {is_sq}{}, filter = {filter:?} ({fw})",
            witness
                .as_ref()
                .map(|w| format!(" with ν = {w}"))
                .unwrap_or_default()
        );
        if is_sq {
            ok = false;
            detail = format!(
                "{label} IS a square in O/P⁵ (witness ν = {}); the stated \
                 expectation 'all non-squares' is unattainable",
                witness.unwrap()
            );
        }
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_05_frey_identity_suite() {
    let c = Criterion::start(5, "Frey invariant identities", 30.0);
    let q = NumberField::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(5005);
    let mut checked = 0;
    while checked < 1000 {
        let a = rng.gen_range(-50..=50i64);
        let b = rng.gen_range(-50..=50i64);
        if a + b == 0 {
            continue;
        }
        checked += 1;
        let curve = build_frey_55p(&q, &q.from_int(a), &q.from_int(b)).unwrap();
        let (a2, a4) = curve.model_coefficients(&q);
        let (c4_std, delta_std) = short_weierstrass_invariants(&q, &a2, &a4);
        assert_eq!(curve.c4, c4_std, "(a,b) = ({a},{b})");
        assert_eq!(curve.delta, delta_std, "(a,b) = ({a},{b})");
        let j_delta = q.mul(&curve.j, &curve.delta);
        let c4_cubed = q.mul(&q.mul(&curve.c4, &curve.c4), &curve.c4);
        assert_eq!(j_delta, c4_cubed, "(a,b) = ({a},{b})");
    }

    let fld = NumberField::real_cyclotomic(5).unwrap();
    let p2 = splitting_type(2, fld.desc()).unwrap();
    let c2 = fld.from_int(2);
    let sixteen = BigRational::from(BigInt::from(16));
    let mut built = 0;
    while built < 100 {
        let coords: Vec<i64> = (0..2).map(|_| rng.gen_range(-25..=25)).collect();
        let a = fld.from_int_coords(&coords).unwrap();
        let coords: Vec<i64> = (0..2).map(|_| rng.gen_range(-25..=25)).collect();
        let b = fld.from_int_coords(&coords).unwrap();
        if a.is_zero() || b.is_zero() || fld.add(&a, &b).is_zero() {
            continue;
        }
        let admissible = (0..=2).any(|k| {
            f_k(&fld, &a, &b, k)
                .ok()
                .and_then(|fk| element_valuation(&fk, &p2, &fld).ok().flatten())
                .is_some_and(|v| v > 0)
        });
        if !admissible {
            continue;
        }
        built += 1;
        let curve = build_frey_rrp(&fld, &a, &b, &c2, &p2).unwrap();
        let sum = fld.add(&fld.add(&curve.big_a, &curve.big_b), &curve.big_c);
        assert!(sum.is_zero(), "A + B + C != 0");
        let abc = fld.mul(&fld.mul(&curve.big_a, &curve.big_b), &curve.big_c);
        let expect = fld.scale(&fld.mul(&abc, &abc), &sixteen);
        assert_eq!(curve.delta, expect, "Δ != 2^4 (ABC)^2");
    }
    c.finish(true, "1000 5-5-p instances, 100 (r,r,p) instances");
}

#[test]
fn criterion_06_phi5_congruence_lemma() {
    let c = Criterion::start(6, "φ₅(a,b) ≡ 5a²b² (mod q²) when q | a+b", 5.0);
    let q_field = NumberField::rationals();
    let primes = arith::primes_up_to(97);
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    for i in 0..500 {
        let q = primes[i % primes.len()];
        let a = rng.gen_range(-400..=400i64);
        let m = rng.gen_range(-6..=6i64);
        let b = m * q as i64 - a; // forces q | a + b
        let phi = phi_r_eval(&q_field, &q_field.from_int(a), &q_field.from_int(b), 5)
            .unwrap()
            .as_rational()
            .unwrap()
            .to_integer();
        let rhs = BigInt::from(5) * BigInt::from(a).pow(2) * BigInt::from(b).pow(2);
        let q2 = BigInt::from(q) * BigInt::from(q);
        use num_integer::Integer;
        assert!(
            (phi - rhs).mod_floor(&q2) == BigInt::from(0),
            "q = {q}, (a, b) = ({a}, {b})"
        );
    }
    c.finish(true, "500 samples");
}

#[test]
fn criterion_07_legendre_identities() {
    let c = Criterion::start(7, "Legendre j-invariant identities", 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let one = BigRational::from(BigInt::from(1));
    let mut tested = 0;
    while tested < 200 {
        let n = rng.gen_range(-90..=90i64);
        let d = rng.gen_range(1..=60i64);
        let lam = BigRational::new(BigInt::from(n), BigInt::from(d));
        if lam == BigRational::from(BigInt::from(0)) || lam == one {
            continue;
        }
        tested += 1;
        let rep = legendre_identities(&lam).unwrap();
        assert!(rep.equal, "forms disagree at λ = {lam}");
        let complement = legendre_identities(&(&one - &lam)).unwrap().j_lambda;
        let reciprocal = legendre_identities(&lam.recip()).unwrap().j_lambda;
        assert_eq!(rep.j_lambda, complement, "λ = {lam}");
        assert_eq!(rep.j_lambda, reciprocal, "λ = {lam}");
    }
    c.finish(true, "200 samples with the S₃ symmetry");
}

#[test]
fn criterion_08_s_unit_suite() {
    let c = Criterion::start(8, "S-unit enumeration, integral form, descent", 10.0);
    // golden set for S = {2, 3}, bound 8: the 21 solutions, by value of λ
    let golden: Vec<(i64, i64)> = vec![
        (-8, 1),
        (-3, 1),
        (-2, 1),
        (-1, 1),
        (-1, 2),
        (-1, 3),
        (-1, 8),
        (1, 9),
        (1, 4),
        (1, 3),
        (1, 2),
        (2, 3),
        (3, 4),
        (8, 9),
        (9, 8),
        (4, 3),
        (3, 2),
        (2, 1),
        (3, 1),
        (4, 1),
        (9, 1),
    ];
    let mut golden: Vec<BigRational> = golden
        .into_iter()
        .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect();
    golden.sort();

    let cfg = SUnitConfig::new(NumberFieldDesc::rationals(), vec![2, 3])
        .unwrap()
        .with_bound(8);
    let sols = enumerate_sunit(&cfg).unwrap();
    let mut found: Vec<BigRational> = sols
        .iter()
        .map(|s| s.lambda_rational().unwrap())
        .collect();
    found.sort();
    assert_eq!(found, golden, "golden S-unit set drifted");

    let field = NumberField::rationals();
    let p2 = splitting_type(2, field.desc()).unwrap();
    for s in &sols {
        let t = integral_form(s, &p2, &field).unwrap();
        let vmax = |x: &fermat_rrp::sunit::SUnitSolution| {
            let vl = arith::rat_valuation(&x.lambda_rational().unwrap(), 2).unwrap();
            let vm = arith::rat_valuation(&x.mu_rational().unwrap(), 2).unwrap();
            vl.abs().max(vm.abs())
        };
        assert_eq!(vmax(s), vmax(&t), "integral form changed the bound value");
        let tt = integral_form(&t, &p2, &field).unwrap();
        assert_eq!(tt.lambda, t.lambda, "integral form is not idempotent");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let one = BigRational::from(BigInt::from(1));
    let mut tested = 0;
    while tested < 100 {
        let n = rng.gen_range(-200..=200i64);
        let d = rng.gen_range(1..=80i64);
        let g = BigRational::new(BigInt::from(n), BigInt::from(d));
        if g == BigRational::from(BigInt::from(0)) || g == one || g == -one.clone() {
            continue;
        }
        tested += 1;
        let (l, m) = descent_step(&g).unwrap();
        assert_eq!(&l + &m, one, "descent identity failed at γ = {g}");
    }
    c.finish(true, "21-solution golden set stable");
}

#[test]
fn criterion_09_thm2_hypothesis_boundary() {
    let c = Criterion::start(9, "even-d hypotheses at d = ±2^m", 1.0);
    let mut ok = true;
    let mut detail = String::new();
    for m in [5u32, 6] {
        for sign in [1i64, -1] {
            let d = BigInt::from(sign) * BigInt::from(2).pow(m);
            if !check_thm2_hypotheses(&d).unwrap().passed() {
                ok = false;
                detail = format!("d = {sign}·2^{m} should pass");
            }
        }
    }
    for sign in [1i64, -1] {
        let d = BigInt::from(sign) * BigInt::from(16);
        if check_thm2_hypotheses(&d).unwrap().passed() {
            ok = false;
            detail = format!("d = {sign}·2^4 should fail the strict boundary");
        }
    }
    c.finish(ok, &detail);
}

#[test]
fn criterion_10_search_vacuity() {
    let c = Criterion::start(10, "search vacuity for (r,d,p) = (7,5,13), H = 60", 60.0);
    let the_box = SearchBox::new(
        NumberFieldDesc::rationals(),
        7,
        13,
        BigInt::from(5),
        60,
        SolutionFilter::TwoDividesC,
    )
    .unwrap();
    let rep = verify_vacuity(&the_box).unwrap();
    let ok = rep.hits.is_empty() && rep.parity_implication_violations == Some(0);
    c.finish(
        ok,
        &format!(
            "{} solutions scanned, {} filter hits, parity violations: {:?}",
            rep.total_solutions,
            rep.hits.len(),
            rep.parity_implication_violations
        ),
    );
}

#[test]
fn criterion_11_valuation_engine_cross_check() {
    let c = Criterion::start(11, "Hensel vs coordinate-min vs norm valuations", 10.0);
    for r in [5u64, 7] {
        let fld = NumberField::real_cyclotomic(r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1100 + r);
        // 2 and 3 are inert in both fields
        for q in [2u64, 3] {
            let p: PrimeData = splitting_type(q, fld.desc()).unwrap();
            assert_eq!((p.e, p.g), (1, 1), "q = {q} must be inert in r = {r}");
            let mut tested = 0;
            while tested < 200 {
                let coords: Vec<i64> = (0..fld.degree())
                    .map(|_| rng.gen_range(-300..=300))
                    .collect();
                if coords.iter().all(|&x| x == 0) {
                    continue;
                }
                tested += 1;
                let x = fld.from_int_coords(&coords).unwrap();
                let hensel = element_valuation(&x, &p, &fld).unwrap().unwrap();
                let coord_min = coords
                    .iter()
                    .filter(|&&v| v != 0)
                    .map(|&v| arith::int_valuation(&BigInt::from(v), q).unwrap())
                    .min()
                    .unwrap();
                assert_eq!(hensel, coord_min, "r = {r}, q = {q}, {coords:?}");
                let norm_v = arith::rat_valuation(&fld.norm(&x), q).unwrap();
                assert_eq!(
                    (p.f as i64) * hensel,
                    norm_v,
                    "f·v != v_q(Norm) at r = {r}, q = {q}"
                );
            }
        }
    }
    c.finish(true, "200 elements per (field, prime)");
}
