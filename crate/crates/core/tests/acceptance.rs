//! Acceptance checks.  Each test prints one `PASS`/`FAIL` line.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use cremona::algebra::{Mobius, RatFunc, UniPoly};
use cremona::birmap::{commutator, word_eval, Bindings, BirMap, Caps, JonqMap, MapWord};
use cremona::dynamics::{
    classify_growth, degree_sequence, degree_sequence_jonq, degree_sequence_projective, GrowthClass,
};
use cremona::heisenberg::{
    build_family, claim_solve, commutator_constant, distortion_identity, relation_system_check, satisfies_claim,
    verify_embedding, verify_family, FamilySpec, RelationParams, VerifyOptions,
};
use cremona::io::{
    parse_birat, parse_family_args, parse_map, parse_maps_file, parse_ratfunc, parse_scalar, render_birat,
    render_family, render_map, render_unipoly,
};
use cremona::GaussRational;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use rand_chacha::ChaCha8Rng;

type G = GaussRational;

fn g(n: i64) -> G {
    G::from(n)
}

fn q(n: i64, d: i64) -> G {
    g(n) / g(d)
}

fn map(text: &str) -> BirMap<G> {
    parse_map(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn corpus(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn report(label: &str, check: impl FnOnce()) {
    let outcome = catch_unwind(AssertUnwindSafe(check));
    let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
    // written to the handle directly so the line shows without --nocapture
    let _ = writeln!(std::io::stderr(), "acceptance {verdict}: {label}");
    if let Err(e) = outcome {
        std::panic::resume_unwind(e);
    }
}

#[test]
fn commutator_identities() {
    report("1 commutator identities", || {
        let cases = [
            ("(x, x*y)", "(2*x, x*y)", "(x, 2*y)"),
            ("(x + y^2, y + 1)", "(x + y, y)", "(x - 1, y)"),
            ("(-x, x*y)", "(2*x, x^2*y)", "(x, 2*y)"),
            ("(2*x, x*y)", "(3*x, x*y)", "(x, 3/2*y)"),
        ];
        for (f, gg, want) in cases {
            let start = Instant::now();
            let h = commutator(&map(f), &map(gg)).unwrap();
            assert!(start.elapsed() < Duration::from_secs(1), "[{f}, {gg}] took {:?}", start.elapsed());
            // structural equality of canonical triples, no tolerance involved
            assert_eq!(h.to_proj(), map(want).to_proj(), "[{f}, {gg}] = {}", render_map(&h));
        }
        let spec = FamilySpec::TorusGen {
            lambda: g(2),
            delta: g(3),
            c: RatFunc::x(),
            d: RatFunc::x(),
        };
        assert_eq!(commutator_constant(&spec).unwrap(), q(3, 2));
    });
}

#[test]
fn negative_control() {
    report("2 negative control", || {
        let r = verify_embedding(&map("(x + y^2, y)"), &map("(x, y + 1)"), &VerifyOptions::default()).unwrap();
        assert_eq!(r.h.to_proj(), map("(x + 2*y - 1, y)").to_proj());
        assert!(r.fh_commutes);
        assert!(!r.gh_commutes);
        assert!(!r.faithful);
    });
}

#[test]
fn degree_growth() {
    report("3 degree growth", || {
        let start = Instant::now();
        let caps = Caps::default();
        let twist = map("(x, x*y)");
        let BirMap::Jonq(j) = &twist else {
            panic!("(x, x*y) should parse to normal form")
        };
        let fast = degree_sequence_jonq(j, 20, &caps).unwrap();
        let slow = degree_sequence_projective(&j.to_proj(), 20, &caps).unwrap();
        let expected: Vec<u32> = (2..=21).collect();
        assert_eq!(fast.degrees, expected);
        assert_eq!(slow.degrees, fast.degrees);
        assert_eq!(classify_growth(&fast.degrees).unwrap().class, GrowthClass::Linear);

        let henon = degree_sequence(&map("(y, y^2 + x)"), 8, &caps).unwrap();
        assert_eq!(henon.degrees, (1..=8).map(|n| 1u32 << n).collect::<Vec<_>>());
        let r = classify_growth(&henon.degrees).unwrap();
        assert_eq!(r.class, GrowthClass::Exponential);
        let lambda = r.dyn_degree_estimate.unwrap();
        assert!((1.99..=2.01).contains(&lambda), "λ ≈ {lambda}");

        let inv = degree_sequence(&map("(1/x, 1/y)"), 8, &caps).unwrap();
        assert_eq!(inv.degrees, [2, 1, 2, 1, 2, 1, 2, 1]);
        assert_eq!(classify_growth(&inv.degrees).unwrap().class, GrowthClass::Bounded);
        assert!(start.elapsed() < Duration::from_secs(10), "took {:?}", start.elapsed());
    });
}

#[test]
fn claim_solver() {
    report("4 claim solver", || {
        let cases: [(&str, i64, &[&str]); 3] = [("3 + 2*x", 2, &["x + 3"]), ("3 - 2*x", 4, &["x^2 - 2*x + 1"]), ("x + 1", 2, &[])];
        for (mu, l2, basis) in cases {
            let m = Mobius::from_ratfunc(&parse_ratfunc(mu, "x").unwrap()).unwrap();
            for max_deg in [2, 4, 6] {
                let sol = claim_solve(&m, &g(l2), max_deg).unwrap();
                assert_eq!(sol.dimension, basis.len(), "µ = {mu}, max_deg {max_deg}");
                let got: Vec<String> = sol.basis.iter().map(|p| render_unipoly(p, "x")).collect();
                assert_eq!(got, basis);
                for p in &sol.basis {
                    assert!(satisfies_claim(p, &m, &g(l2)));
                }
            }
        }
    });
}

#[test]
fn distortion() {
    report("5 distortion identity", || {
        let (f, gg) = (map("(x, x*y)"), map("(2*x, x*y)"));
        let h = commutator(&f, &gg).unwrap();
        for k in 1..=5 {
            assert!(distortion_identity(&f, &gg, &h, k).unwrap(), "k = {k}");
        }
    });
}

#[test]
fn relation_system() {
    report("6 relation system", || {
        let mut p = RelationParams {
            lambda: g(2),
            mu: Mobius::scaling(g(3)).unwrap(),
            gamma: g(1),
            beta: q(3, 2),
            a: RatFunc::x(),
            b: RatFunc::x(),
        };
        assert_eq!(relation_system_check(&p).unwrap(), [true; 5]);
        p.beta = g(1);
        assert_eq!(relation_system_check(&p).unwrap(), [true, true, true, true, false]);
    });
}

fn small(rng: &mut ChaCha8Rng, nonzero: bool) -> G {
    loop {
        let v = q(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        if !nonzero || v != g(0) {
            return v;
        }
    }
}

fn random_generator(rng: &mut ChaCha8Rng) -> JonqMap<G> {
    if rng.gen_bool(0.5) {
        JonqMap::diagonal(small(rng, true), small(rng, true)).unwrap()
    } else {
        let deg = rng.gen_range(0..=2);
        let coeffs: Vec<G> = (0..=deg).map(|_| small(rng, false)).collect();
        JonqMap::elementary(small(rng, true), UniPoly::from_coeffs(coeffs), small(rng, true), small(rng, false)).unwrap()
    }
}

#[test]
fn oracle_equivalence() {
    report("7 normal form agrees with projective composition", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let names = ["a", "b", "c"];
        for trial in 0..100 {
            let mut fast = Bindings::new();
            let mut slow = Bindings::new();
            for name in names {
                let j = random_generator(&mut rng);
                slow.insert_with_inverse(name, BirMap::Proj(j.to_proj()), BirMap::Proj(j.inverse().to_proj()));
                fast.insert(name, BirMap::Jonq(j));
            }
            let len = rng.gen_range(1..=6);
            let letters: Vec<(&str, i64)> = (0..len)
                .map(|_| (names[rng.gen_range(0..names.len())], if rng.gen_bool(0.5) { 1 } else { -1 }))
                .collect();
            let word = MapWord::new(letters.iter().copied());
            let a = word_eval(&word, &fast).unwrap();
            let b = word_eval(&word, &slow).unwrap();
            assert!(matches!(a, BirMap::Jonq(_)) && matches!(b, BirMap::Proj(_)));
            assert!(a.same_map(&b), "trial {trial}: {letters:?}: {} vs {}", render_map(&a), render_map(&b));
        }
    });
}

struct Instance {
    spec: FamilySpec<G>,
    faithful: bool,
    growth: Option<Vec<GrowthClass>>,
}

fn class(s: &str) -> GrowthClass {
    serde_json::from_value(serde_json::Value::String(s.to_string())).unwrap_or_else(|_| panic!("class {s}"))
}

/// The `family` lines of the shipped batch corpus with their expectations.
fn family_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for line in corpus("instances.batch").lines() {
        let words = shlex::split(line).unwrap();
        if words.first().map(String::as_str) != Some("family") {
            continue;
        }
        let mut faithful = None;
        let mut growth = None;
        let mut params = Vec::new();
        for w in &words[2..] {
            match w.split_once('=') {
                Some(("expect", v)) => faithful = Some(v == "faithful"),
                Some(("growth", v)) => growth = Some(v.split(',').map(class).collect()),
                _ if w.starts_with("--") => {}
                _ => params.push(w.clone()),
            }
        }
        out.push(Instance {
            spec: parse_family_args(&words[1], &params).unwrap_or_else(|e| panic!("{line}: {e}")),
            faithful: faithful.expect("every instance states its verdict"),
            growth,
        });
    }
    out
}

#[test]
fn no_hyperbolic_maps_in_families() {
    report("8 family instances: no exponential growth, twists linear, elliptic bounded", || {
        let instances = family_instances();
        assert!(instances.len() >= 30);
        let variants: std::collections::BTreeSet<&str> = instances.iter().map(|i| i.spec.variant_name()).collect();
        assert_eq!(variants.len(), 7, "{variants:?}");
        let opts = VerifyOptions::default();
        let reports: Vec<_> = instances.par_iter().map(|i| verify_family(&i.spec, &opts).unwrap()).collect();
        for (inst, r) in instances.iter().zip(reports) {
            let label = render_family(&inst.spec);
            assert_eq!(r.faithful, inst.faithful, "{label}: {:?}", r.failures);
            let classes = [r.growth_f.class, r.growth_g.class, r.growth_h.class];
            if r.faithful {
                assert!(!classes.contains(&GrowthClass::Exponential), "{label}: {classes:?}");
            }
            if let Some(want) = &inst.growth {
                assert_eq!(&classes[..], &want[..], "{label}");
            }
        }
    });
}

#[test]
fn parser_round_trip() {
    report("9 parser round trip", || {
        let text = corpus("expressions.txt");
        let exprs: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
        assert!(exprs.len() >= 50);
        for e in exprs {
            let value = parse_birat(e).unwrap_or_else(|err| panic!("{e}: {err}"));
            let rendered = render_birat(&value);
            let again = parse_birat(&rendered).unwrap_or_else(|err| panic!("{e} -> {rendered}: {err}"));
            assert_eq!(again, value, "{e} -> {rendered}");
            assert_eq!(render_birat(&again), rendered);
        }
        let scalars = ["1 + i", "-3/4", "(2 - i)/5", "i^3"];
        for s in scalars {
            let v = parse_scalar(s).unwrap();
            assert_eq!(parse_scalar(&v.to_string()).unwrap(), v);
        }

        let shapes = parse_maps_file(&corpus("shapes.maps")).unwrap();
        for prefix in ["pgl3", "elema", "elemb", "torus1", "torus2", "order2", "torusgen", "monomial"] {
            assert!(shapes.iter().any(|m| m.name.starts_with(prefix)), "no {prefix} shape");
        }
        for m in &shapes {
            let rendered = render_map(&m.map);
            let again = map(&rendered);
            assert_eq!(again, m.map, "{} -> {rendered}", m.text);
            assert_eq!(render_map(&again), rendered);
        }
        for inst in family_instances() {
            let text = render_family(&inst.spec);
            let words = shlex::split(&text).unwrap();
            let again = parse_family_args(&words[1], &words[2..]).unwrap();
            assert_eq!(again, inst.spec, "{text}");
            build_family(&again).unwrap();
        }
    });
}
