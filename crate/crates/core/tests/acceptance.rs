//! Acceptance suite. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; any failure gives a nonzero exit status.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symdet_core::basis::{reduce_full, spoly};
use symdet_core::{
    a_l_ideal, buchberger, colength_local, colength_truncated_oracle, expected_codim, hankel_example, kernel_locus_ideal,
    mixed_polar_degree, mora_normal_form, parse_polynomial, polar_degree_hypersurface, polar_is_empty,
    total_polar_degree_corank2, Colength, GenericityOptions, IdealSpec, Limits, MixedCase, MonomialOrder, SymPolyMatrix,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn vars(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

fn ideal_from(gens: &[String], names: &[String], label: &str) -> IdealSpec {
    IdealSpec::parse(gens, names.to_vec(), label).expect("valid ideal")
}

fn local(ideal: &IdealSpec) -> Colength {
    colength_local(ideal, Limits::default()).expect("within caps").value
}

fn oracle(ideal: &IdealSpec) -> Colength {
    colength_truncated_oracle(ideal, 40).expect("oracle stabilizes").value
}

fn sym(names: &[&str], rows: &[&[&str]]) -> SymPolyMatrix {
    let v: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let e: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
    SymPolyMatrix::build(&v, &e).expect("valid matrix")
}

fn example_opts(trials: usize) -> GenericityOptions {
    GenericityOptions { trials, seed: 2024, ..Default::default() }
}

fn example_ideals() -> Vec<(&'static str, IdealSpec, u64)> {
    let f = hankel_example();
    vec![
        ("A_1 of (3,1)", a_l_ideal(&f, 3, 1, 1).unwrap(), 3),
        ("A_1 of (2,2)", a_l_ideal(&f, 2, 2, 1).unwrap(), 12),
        ("A_2 of (2,2)", a_l_ideal(&f, 2, 2, 2).unwrap(), 2),
    ]
}

fn criterion_1() -> Outcome {
    let mut got = Vec::new();
    for (name, ideal, expected) in example_ideals() {
        let start = std::time::Instant::now();
        let c = local(&ideal);
        ensure!(c == Colength::Finite(expected), "{name}: colength {c}, expected {expected}");
        ensure!(start.elapsed().as_secs() < 5, "{name}: took {:?}", start.elapsed());
        got.push(format!("{name}={c}"));
    }
    Ok(got.join(", "))
}

fn criterion_2() -> Outcome {
    let f = hankel_example();
    let opts = example_opts(2);
    let r31 = mixed_polar_degree(&f, 3, 1, &opts).map_err(|e| e.to_string())?;
    ensure!(r31.degree == 3, "deg Γ_{{3,1}} = {}", r31.degree);
    ensure!(r31.case == MixedCase::RowBound, "(3,1) case {:?}", r31.case);
    let r22 = mixed_polar_degree(&f, 2, 2, &opts).map_err(|e| e.to_string())?;
    ensure!(r22.case == MixedCase::RowBound, "(2,2) case {:?}", r22.case);
    let levels: Vec<(u64, i8)> = r22.per_level.iter().map(|l| (l.colength, l.sign)).collect();
    ensure!(levels == vec![(12, 1), (2, -1)], "(2,2) levels {levels:?}");
    ensure!(r22.degree == 10, "deg Γ_{{2,2}} = {}", r22.degree);
    Ok("Γ_{3,1}=3, Γ_{2,2}=12-2=10, both RowBound".into())
}

fn criterion_3() -> Outcome {
    let r = total_polar_degree_corank2(&hankel_example(), &example_opts(2)).map_err(|e| e.to_string())?;
    let terms: Vec<(usize, usize, u64, u64)> = r.terms.iter().map(|t| (t.i, t.j, t.binomial, t.mixed_degree)).collect();
    let expected = vec![(0, 4, 1, 0), (1, 3, 4, 3), (2, 2, 6, 10), (3, 1, 4, 3), (4, 0, 1, 0)];
    ensure!(terms == expected, "terms {terms:?}");
    ensure!(r.pre_halving_sum == Some(84), "pre-halving sum {:?}", r.pre_halving_sum);
    ensure!(r.pre_halving_sum.unwrap() % 2 == 0, "odd sum");
    ensure!(r.degree == 42, "total {}", r.degree);
    // C(4,1) = C(4,3) and Γ_{1,3} = Γ_{3,1}, so the halved sum reads 4*3 + 3*10
    ensure!(4 * 3 + 3 * 10 == r.degree, "decomposition");
    Ok("84/2 = 4*3 + 3*10 = 42, Γ_{4,0}=Γ_{0,4}=0".into())
}

#[allow(clippy::needless_range_loop)]
fn random_symmetric(rng: &mut ChaCha8Rng) -> SymPolyMatrix {
    let n = rng.gen_range(2..=4);
    let q = rng.gen_range(1..=4);
    let names = vars("x", q);
    let mut rows = vec![vec![String::new(); n]; n];
    for a in 0..n {
        for b in a..n {
            let mut terms = Vec::new();
            for _ in 0..rng.gen_range(1..=3) {
                let c: i64 = rng.gen_range(-3..=3);
                let v = &names[rng.gen_range(0..q)];
                let e = rng.gen_range(1..=2);
                terms.push(format!("({c})*{v}^{e}"));
            }
            rows[a][b] = terms.join(" + ");
            rows[b][a] = rows[a][b].clone();
        }
    }
    SymPolyMatrix::build(&names, &rows).expect("valid")
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let opts = GenericityOptions::default();
    let mut calls = 0;
    for _ in 0..10 {
        let f = random_symmetric(&mut rng);
        for i in 0..=f.n() + 1 {
            for (a, b) in [(i, 0), (0, i)] {
                let r = mixed_polar_degree(&f, a, b, &opts).map_err(|e| e.to_string())?;
                ensure!(r.degree == 0, "({a},{b}) degree {}", r.degree);
                ensure!(r.colength_evaluations == 0, "({a},{b}) evaluated {} ideals", r.colength_evaluations);
                ensure!(r.case == MixedCase::IZero, "({a},{b}) case {:?}", r.case);
                calls += 1;
            }
        }
    }
    Ok(format!("{calls} calls on 10 matrices, 0 ideal computations"))
}

fn random_local_ideal(rng: &mut ChaCha8Rng) -> IdealSpec {
    let q = rng.gen_range(1..=3);
    let names = vars("y", q);
    let monomial = |rng: &mut ChaCha8Rng, degree: u32| {
        let mut e = vec![0u32; q];
        for _ in 0..degree {
            e[rng.gen_range(0..q)] += 1;
        }
        let parts: Vec<String> = e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(k, x)| format!("{}^{x}", names[k])).collect();
        parts.join("*")
    };
    let mut gens = Vec::new();
    for name in &names {
        let m = rng.gen_range(1..=4);
        let mut g = format!("{name}^{m}");
        for _ in 0..rng.gen_range(0..=3) {
            let c: i64 = rng.gen_range(-4..=4);
            let d = rng.gen_range(m + 1..=m + 3);
            g.push_str(&format!(" + ({c})*{}", monomial(rng, d)));
        }
        gens.push(g);
    }
    for _ in 0..rng.gen_range(0..=2) {
        let mut g = String::new();
        for t in 0..rng.gen_range(1..=3) {
            let c: i64 = rng.gen_range(1..=5);
            let d = rng.gen_range(1..=4);
            if t > 0 {
                g.push_str(" - ");
            }
            g.push_str(&format!("{c}*{}", monomial(rng, d)));
        }
        gens.push(g);
    }
    ideal_from(&gens, &names, "random local")
}

fn criterion_5() -> Outcome {
    for (name, ideal, _) in example_ideals() {
        let (a, b) = (local(&ideal), oracle(&ideal));
        ensure!(a == b, "{name}: Mora {a}, oracle {b}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut values = Vec::new();
    for k in 0..25 {
        let ideal = random_local_ideal(&mut rng);
        let (a, b) = (local(&ideal), oracle(&ideal));
        ensure!(a == b, "random ideal {k} {:?}: Mora {a}, oracle {b}", ideal.generator_strings());
        ensure!(a != Colength::Infinite, "random ideal {k} not zero-dimensional");
        values.push(a.to_string());
    }
    Ok(format!("3 example ideals + 25 random ideals agree (random colengths {})", values.join(" ")))
}

fn criterion_6() -> Outcome {
    // a random congruence can be non-generic (the ideal then becomes
    // positive-dimensional); only finite values are compared
    let f = hankel_example();
    let opts = GenericityOptions { trials: 6, seed: 606, ..Default::default() };
    let mut notes = Vec::new();
    for ((i, j), expected) in [((3, 1), 3), ((2, 2), 10)] {
        let r = mixed_polar_degree(&f, i, j, &opts).map_err(|e| e.to_string())?;
        ensure!(r.trials[0].value == Some(expected), "({i},{j}) identity gave {:?}", r.trials[0].value);
        let random: Vec<_> = r.trials.iter().skip(1).collect();
        let finite: Vec<u64> = random.iter().filter_map(|t| t.value).collect();
        ensure!(finite.len() >= 3, "({i},{j}) only {} finite random trials", finite.len());
        ensure!(finite.iter().all(|&v| v == expected), "({i},{j}) random trials gave {finite:?}");
        ensure!(r.disagreements.is_empty(), "({i},{j}) disagreements {:?}", r.disagreements);
        notes.push(format!("Γ_{{{i},{j}}}={expected} on {} random congruences ({} non-generic)", finite.len(), random.len() - finite.len()));
    }
    Ok(notes.join(", "))
}

fn criterion_7() -> Outcome {
    let f = sym(&["x", "y"], &[&["x", "y"], &["y", "-x"]]);
    let r = polar_degree_hypersurface(&f, &GenericityOptions::default()).map_err(|e| e.to_string())?;
    let h = r.hypersurface.as_ref().ok_or("no detail")?;
    ensure!(h.factor == 2, "factor {}", h.factor);
    ensure!(r.degree == 2, "degree {}", r.degree);
    let checked = oracle(&kernel_locus_ideal(&f, &h.w).map_err(|e| e.to_string())?);
    ensure!(checked == Colength::Finite(1), "oracle colength {checked}");
    let wide = sym(&["x", "y", "z"], &[&["x", "y"], &["y", "z"]]);
    let r = polar_degree_hypersurface(&wide, &GenericityOptions::default()).map_err(|e| e.to_string())?;
    ensure!(r.degree == 0, "q > n gave {}", r.degree);
    Ok("2 = 2^1 * 1 (oracle colength 1), q > n gives 0".into())
}

fn criterion_8() -> Outcome {
    let c = expected_codim(4, 2).map_err(|e| e.to_string())?;
    ensure!(c == 3, "expected_codim(4,2) = {c}");
    for l in 0..=10 {
        let e = polar_is_empty(4, 2, l).map_err(|e| e.to_string())?;
        ensure!(e == (l <= 2), "polar_is_empty(4,2,{l}) = {e}");
    }
    Ok("codim 3, empty exactly for l <= 2".into())
}

fn brute_force(gens: &[Vec<u32>], q: usize, bound: u32) -> u64 {
    let mut count = 0;
    let mut e = vec![0u32; q];
    loop {
        if !gens.iter().any(|g| g.iter().zip(&e).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == q {
                return count;
            }
            e[k] += 1;
            if e[k] < bound {
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    let names = vars("x", 5);
    let mut ideals: Vec<IdealSpec> = example_ideals().into_iter().map(|p| p.1).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    ideals.extend((0..10).map(|_| random_local_ideal(&mut rng)));
    ideals.push(ideal_from(&["x1 + x2 + x3".into(), "x1*x2 + x2*x3 + x3*x1".into(), "x1*x2*x3 - 1".into()], &names[..3], "cyclic"));
    for ideal in &ideals {
        let b = buchberger(ideal, MonomialOrder::DegRevLex, Limits::default()).map_err(|e| e.to_string())?;
        let g = b.basis();
        for (a, f) in g.iter().enumerate() {
            for h in &g[a + 1..] {
                ensure!(reduce_full(&spoly(f, h), g).is_zero(), "S-polynomial of {} not reduced to 0", ideal.label());
                checked += 1;
            }
        }
        for f in ideal.generators() {
            ensure!(reduce_full(&f.with_order(MonomialOrder::DegRevLex), g).is_zero(), "generator not in basis ideal");
        }
    }

    let x = vec!["x".to_string()];
    let f = parse_polynomial("x", &x).unwrap();
    let g = parse_polynomial("x - x^2", &x).unwrap();
    let nf = mora_normal_form(&f, &[g], MonomialOrder::NegDegRevLex, Limits::default()).map_err(|e| e.to_string())?;
    ensure!(nf.is_zero(), "x mod (x - x^2) = {}", nf.display_with(&x));

    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for k in 0..50 {
        let q = rng.gen_range(1..=3);
        let mut gens: Vec<Vec<u32>> = (0..q)
            .map(|v| (0..q).map(|w| if v == w { rng.gen_range(1..=5) } else { 0 }).collect())
            .collect();
        for _ in 0..rng.gen_range(0..=4) {
            gens.push((0..q).map(|_| rng.gen_range(0..=4)).collect());
        }
        let strings: Vec<String> = gens
            .iter()
            .map(|e| {
                let parts: Vec<String> = e.iter().enumerate().filter(|(_, &p)| p > 0).map(|(v, p)| format!("x{}^{p}", v + 1)).collect();
                if parts.is_empty() { "1".to_string() } else { parts.join("*") }
            })
            .collect();
        let ideal = ideal_from(&strings, &names[..q], "monomial");
        let c = local(&ideal);
        let expected = brute_force(&gens, q, 6);
        ensure!(c == Colength::Finite(expected), "monomial ideal {k} {strings:?}: {c} vs {expected}");
    }
    Ok(format!("{checked} S-polynomials reduce to 0, Mora unit case ok, 50 staircases match"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 example colengths", criterion_1),
        ("2 example mixed polar degrees", criterion_2),
        ("3 example total polar degree", criterion_3),
        ("4 vanishing for j = 0", criterion_4),
        ("5 oracle equivalence", criterion_5),
        ("6 genericity stability", criterion_6),
        ("7 hypersurface case", criterion_7),
        ("8 formula predicates", criterion_8),
        ("9 engine soundness", criterion_9),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
