use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use negcat_core::ambient::{is_hom_exact, Ambient, Mor};
use negcat_core::derived::{DInd, DerivedCat};
use negcat_core::fg::functor_law_suite;
use negcat_core::intermediate::{enumerate_torsion_free, f_of, induced_intermediate};
use negcat_core::linalg::Field;
use negcat_core::presets;
use negcat_core::typea::{
    ext1_dim, ext1_dim_rep, hom_dim, hom_dim_oracle, Interval, Representation,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn negcat(out: &Path, args: &[&str]) -> Result<Value, String> {
    let status = Command::new(env!("CARGO_BIN_EXE_negcat"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .map_err(|e| format!("spawning negcat: {e}"))?;
    if !status.status.success() {
        return Err(format!(
            "`negcat {}` exited with {:?}: {}",
            args.join(" "),
            status.status.code(),
            String::from_utf8_lossy(&status.stderr).trim()
        ));
    }
    let text = std::fs::read_to_string(out.join("report.json")).map_err(|e| e.to_string())?;
    let report: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    ensure(
        report["passed"] == true,
        format!("`{}` reported passed=false", args.join(" ")),
    )?;
    Ok(report["results"].clone())
}

fn strings(v: &Value) -> BTreeSet<String> {
    v.as_array()
        .map(|a| {
            a.iter()
                .filter_map(|s| s.as_str().map(str::to_owned))
                .collect()
        })
        .unwrap_or_default()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn red_nine() -> BTreeSet<String> {
    set(&[
        "(0,3)", "(0,11)", "(0,15)", "(4,11)", "(4,15)", "(5,8)", "(8,11)", "(8,15)", "(12,15)",
    ])
}

fn census(out: &Path) -> Check {
    let r = negcat(out, &["indecs"])?;
    ensure(r["count"] == 36, format!("count {}", r["count"]))?;
    ensure(
        r["census_matches_lifts"] == true,
        "census disagrees with lifts",
    )?;
    let all = strings(&r["diagonals"]);
    ensure(all.len() == 36, "duplicate diagonals")?;
    ensure(red_nine().is_subset(&all), "closure diagonals missing")?;
    Ok("36 indecomposables, closure and SMS diagonals present".into())
}

fn sms_and_closure(out: &Path) -> Check {
    let s = negcat(out, &["sms-check"])?;
    ensure(
        s["is_sms"] == true && s["orthogonal"] == true,
        "SMS check failed",
    )?;
    let c = negcat(out, &["closure"])?;
    ensure(
        strings(&c["indecomposables"]) == red_nine(),
        "closure differs",
    )?;
    Ok("SMS verified, extension closure has the nine expected diagonals".into())
}

fn e_check(out: &Path) -> Check {
    for amb in ["orbit", "derived"] {
        let r = negcat(out, &["e-check", "--max", "2", "--ambient", amb])?;
        ensure(r["holds"] == true, format!("{amb}: E_m fails"))?;
    }
    Ok("E_1 and E_2 hold in both ambients".into())
}

fn star(out: &Path) -> Check {
    let keys = ["factorization", "star_equality", "epi_condition"];
    let mut seen = Vec::new();
    for amb in ["orbit", "derived"] {
        let r = negcat(out, &["star-report", "--ambient", amb])?;
        let row: Vec<Value> = keys.iter().map(|k| r[*k].clone()).collect();
        ensure(row.iter().all(|b| *b == true), format!("{amb}: {row:?}"))?;
        ensure(
            strings(&r["sigma_a_star_a"]) == strings(&r["a_star_sigma_a"]),
            format!("{amb}: the two star products differ"),
        )?;
        if amb == "derived" {
            ensure(
                strings(&r["mixed"]).is_empty(),
                "derived: mixed objects present",
            )?;
            let union = set(&["[2,2]", "[2,3]", "[3,3]", "Σ[2,2]", "Σ[2,3]", "Σ[3,3]"]);
            ensure(
                strings(&r["sigma_a_star_a"]) == union,
                "derived: ΣA∗A ≠ A ∪ ΣA",
            )?;
        } else {
            ensure(
                strings(&r["mixed"]) == set(&["(1,8)"]),
                "orbit: mixed set differs",
            )?;
        }
        seen.push(row);
    }
    ensure(seen[0] == seen[1], "ambients disagree")?;
    Ok("three equivalent conditions hold and agree in both ambients".into())
}

fn bijection(out: &Path) -> Check {
    let t = negcat(out, &["torf-enum"])?;
    ensure(t["count"] == 37, format!("torf count {}", t["count"]))?;
    let b = negcat(out, &["bijection"])?;
    for k in [
        "applicable",
        "round_trip_torsion_free",
        "round_trip_intermediate",
        "verified",
    ] {
        ensure(b[k] == true, format!("bijection: {k} is false"))?;
    }
    ensure(
        b["torsion_free_count"] == 37 && b["intermediate_count"] == 37,
        "bijection counts differ from 37",
    )?;
    let pairs = b["matching"].as_array().cloned().unwrap_or_default();
    let left: BTreeSet<u64> = pairs.iter().filter_map(|p| p[0].as_u64()).collect();
    let right: BTreeSet<u64> = pairs.iter().filter_map(|p| p[1].as_u64()).collect();
    ensure(
        pairs.len() == 37 && left.len() == 37 && right.len() == 37,
        "matching is not a permutation",
    )?;
    ensure(
        b["unmatched_torsion_free"]
            .as_array()
            .is_some_and(Vec::is_empty)
            && b["unmatched_intermediate"]
                .as_array()
                .is_some_and(Vec::is_empty),
        "unmatched candidates",
    )?;
    Ok("37 torsion-free classes in bijection with 37 intermediate categories".into())
}

fn orbit_intermediate(out: &Path) -> Check {
    let r = negcat(out, &["intermediate"])?;
    let expect = set(&[
        "(0,3)", "(0,11)", "(0,15)", "(1,4)", "(1,8)", "(1,12)", "(4,11)", "(4,15)", "(5,8)",
        "(5,12)", "(8,11)", "(8,15)", "(9,12)", "(12,15)",
    ]);
    ensure(strings(&r["induced"]) == expect, "induced set differs")?;
    ensure(r["is_intermediate"] == true, "not intermediate")?;
    ensure(
        r["matches_triangle_construction"] == true,
        "triangle construction differs",
    )?;
    Ok("induced intermediate category has the 14 expected diagonals".into())
}

/// Torsion-free classes of the interval modules of `A_n`, using only the
/// interval rules: submodules of `[lo,hi]` are `[c,hi]`, and the middle term of
/// a nonsplit extension of `x` by `y` is `[x.lo, y.hi] ⊕ [y.lo, x.hi]`.
fn interval_torsion_free_count(n: usize) -> usize {
    let all = Interval::all(n);
    let mut extensions = Vec::new();
    for &x in &all {
        for &y in &all {
            if ext1_dim(x, y) > 0 {
                let mut mid = vec![Interval::new(x.lo, y.hi)];
                if y.lo <= x.hi {
                    mid.push(Interval::new(y.lo, x.hi));
                }
                extensions.push((x, y, mid));
            }
        }
    }
    let mut count = 0;
    for mask in 0u32..(1 << all.len()) {
        let s: Vec<Interval> = (0..all.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| all[i])
            .collect();
        let sub_closed = s
            .iter()
            .all(|m| (m.lo..=m.hi).all(|c| s.contains(&Interval::new(c, m.hi))));
        let ext_closed = extensions
            .iter()
            .filter(|(x, y, _)| s.contains(x) && s.contains(y))
            .all(|(_, _, mid)| mid.iter().all(|z| s.contains(z)));
        if sub_closed && ext_closed {
            count += 1;
        }
    }
    count
}

fn derived_intermediate(out: &Path) -> Check {
    let r = negcat(out, &["intermediate", "--ambient", "derived"])?;
    let expect = set(&["[2,2]", "[2,3]", "[3,3]", "Σ[2,3]", "Σ[3,3]"]);
    ensure(strings(&r["induced"]) == expect, "induced set differs")?;
    let t = negcat(out, &["torf-enum", "--ambient", "derived"])?;
    let oracle = interval_torsion_free_count(2);
    ensure(
        t["count"] == oracle as u64,
        format!("torf count {} vs interval oracle {oracle}", t["count"]),
    )?;
    ensure(oracle == 5, format!("oracle gives {oracle}"))?;
    Ok("derived induced category and 5 torsion-free classes match the interval oracle".into())
}

fn snake(out: &Path) -> Check {
    let mut nonzero = Vec::new();
    for (amb, seed) in [("orbit", "2024"), ("derived", "2025")] {
        let r = negcat(
            out,
            &[
                "snake-suite",
                "--count",
                "200",
                "--seed",
                seed,
                "--ambient",
                amb,
            ],
        )?;
        ensure(
            r["triangles"] == 200,
            format!("{amb}: {} triangles", r["triangles"]),
        )?;
        nonzero.push(r["nonzero_delta"].as_u64().unwrap_or(0));
    }
    ensure(
        nonzero.iter().all(|&k| k > 0),
        "connecting map never nonzero",
    )?;
    Ok(format!(
        "seven-term sequences exact on 200 triangles per ambient (nonzero δ: {} / {})",
        nonzero[0], nonzero[1]
    ))
}

fn functors() -> Check {
    let d = presets::derived_ambient(2);
    let dsub = presets::derived_subcat(&d).map_err(|e| e.to_string())?;
    let dr = functor_law_suite(&d, &dsub, 9, 100);
    ensure(dr.passed(), format!("derived: {dr:?}"))?;
    let o = presets::orbit_ambient(2).map_err(|e| e.to_string())?;
    let osub = presets::orbit_subcat(&o, &presets::orbit_sms()).map_err(|e| e.to_string())?;
    let or = functor_law_suite(&o, &osub, 9, 100);
    ensure(or.passed(), format!("orbit: {or:?}"))?;
    for fc in enumerate_torsion_free(&d, &dsub) {
        let c = induced_intermediate(&d, &dsub, &fc);
        let back: BTreeSet<_> = f_of(&d, &dsub, &c).into_iter().collect();
        ensure(
            back == fc.iter().copied().collect(),
            "derived round trip fails",
        )?;
    }
    Ok("F and G respect identities, composition and naturality on 100 pairs per ambient".into())
}

fn random_obj<I: Clone>(rng: &mut ChaCha8Rng, pool: &[I]) -> Vec<I> {
    (0..rng.gen_range(1..=2))
        .map(|_| pool[rng.gen_range(0..pool.len())].clone())
        .collect()
}

fn random_mor<A: Ambient>(a: &A, rng: &mut ChaCha8Rng, x: &[A::Ind], y: &[A::Ind]) -> Mor<A::Ind> {
    let z = Mor::zero(a, x, y);
    let p = a.field().prime();
    let v: Vec<u32> = (0..z.dim()).map(|_| rng.gen_range(0..p)).collect();
    z.with_flat(&v)
}

fn closed_forms() -> Check {
    let mut pairs = 0;
    for p in [2, 3] {
        let field = Field::new(p);
        for n in 1..=6 {
            let all = Interval::all(n);
            for &x in &all {
                let rx = Representation::interval(field, n, x);
                for &y in &all {
                    let ry = Representation::interval(field, n, y);
                    ensure(
                        hom_dim(x, y) == hom_dim_oracle(&rx, &ry),
                        format!("Hom {x:?} {y:?}"),
                    )?;
                    ensure(
                        ext1_dim(x, y) == ext1_dim_rep(x, &ry),
                        format!("Ext {x:?} {y:?}"),
                    )?;
                    pairs += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let d = DerivedCat::new(Field::new(3), 3);
    let pool = d.indecomposables_in(-1, 1);
    let probes = d.indecomposables_in(-3, 3);
    for _ in 0..40 {
        let (x, y) = (random_obj(&mut rng, &pool), random_obj(&mut rng, &pool));
        let f = random_mor(&d, &mut rng, &x, &y);
        let tri = d.cone_triangle(&f);
        ensure(is_hom_exact(&d, &tri, &probes), "derived cone not exact")?;
    }
    let o = presets::orbit_ambient(2).map_err(|e| e.to_string())?;
    let opool: Vec<DInd> = o.probe_set();
    let mut cones = 0;
    for _ in 0..40 {
        let (x, y) = (random_obj(&mut rng, &opool), random_obj(&mut rng, &opool));
        let f = random_mor(&o, &mut rng, &x, &y);
        if let Some(tri) = o.triangle(&f) {
            ensure(o.diagonals(&tri.z) == o.cone_c(&f), "orbit cone differs")?;
            ensure(is_hom_exact(&o, &tri, &opool), "orbit cone not exact")?;
            cones += 1;
        }
    }
    ensure(cones >= 20, format!("only {cones} orbit cones built"))?;
    Ok(format!(
        "closed forms match oracles on {pairs} pairs, 40 + {cones} cones Hom-exact"
    ))
}

fn monoid(out: &Path) -> Check {
    for (amb, bound) in [("derived", "6"), ("orbit", "4")] {
        let r = negcat(out, &["monoid", "--ambient", amb, "--bound", bound])?;
        ensure(r["verified"] == true, format!("{amb}: not verified"))?;
        ensure(
            r["unknowns"] == 0,
            format!("{amb}: {} unknowns", r["unknowns"]),
        )?;
    }
    Ok("localized monoid isomorphism verified on the balls of degree 6 and 4".into())
}

fn main() -> ExitCode {
    let dir = tempfile::tempdir().expect("temporary directory");
    let out = dir.path();
    let criteria: Vec<Criterion> = vec![
        ("indecomposable census", Box::new(|| census(out))),
        (
            "simple-minded system and closure",
            Box::new(|| sms_and_closure(out)),
        ),
        ("vanishing conditions", Box::new(|| e_check(out))),
        ("star-product report", Box::new(|| star(out))),
        ("torsion-free bijection", Box::new(|| bijection(out))),
        (
            "orbit intermediate category",
            Box::new(|| orbit_intermediate(out)),
        ),
        (
            "derived intermediate category",
            Box::new(|| derived_intermediate(out)),
        ),
        ("snake lemma suite", Box::new(|| snake(out))),
        ("functor laws and round trips", Box::new(functors)),
        ("closed forms and cones", Box::new(closed_forms)),
        ("monoid localization", Box::new(|| monoid(out))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = check();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(msg) => println!("PASS criterion {:>2} {name}: {msg} ({secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {msg} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
