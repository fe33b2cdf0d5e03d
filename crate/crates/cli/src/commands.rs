use std::collections::BTreeMap;
use std::fmt::Display;

use anyhow::bail;
use negcat_core::abelian::{is_orthogonal_collection, is_sms, is_sms_combinatorial, AbelianSubcat};
use negcat_core::ambient::{keys, Ambient};
use negcat_core::derived::{DInd, DerivedCat};
use negcat_core::error::NegcatError;
use negcat_core::fg::{fg_decompose, snake_suite, star_equality_report};
use negcat_core::intermediate::{
    bijection_check, enumerate_torsion_free, f_of, induced_intermediate,
    induced_intermediate_by_triangles, is_intermediate, is_torsion_free,
};
use negcat_core::linalg::Field;
use negcat_core::monoid::localization_iso_check;
use negcat_core::orbit::{Diagonal, OrbitCat};
use negcat_core::{abelian, presets};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::{parse, svg, UsageError};

/// Result of one subcommand: report body, verdict, and an optional line for
/// standard output.
pub struct Outcome {
    pub results: Value,
    pub passed: bool,
    pub stdout: Option<String>,
    pub files: Vec<(String, String)>,
}

impl Outcome {
    fn new(results: Value, passed: bool) -> Self {
        Outcome {
            results,
            passed,
            stdout: None,
            files: Vec::new(),
        }
    }
}

pub fn names<K: Display>(ks: &[K]) -> Vec<String> {
    ks.iter().map(ToString::to_string).collect()
}

fn class_names<K: Display>(cs: &[Vec<K>]) -> Vec<Vec<String>> {
    cs.iter().map(|c| names(c)).collect()
}

/// Ambient, abelian subcategory and optional torsion-free class.
pub struct Setup<A: Ambient> {
    pub amb: A,
    pub simples: Vec<A::Key>,
    pub sub: AbelianSubcat<A::Key>,
    pub fclass: Option<Vec<A::Key>>,
}

impl<A: Ambient> Setup<A>
where
    A::Key: Display,
{
    fn require_fclass(&self) -> anyhow::Result<&[A::Key]> {
        match &self.fclass {
            Some(f) => Ok(f),
            None => bail!(UsageError("--fclass is required for this ambient".into())),
        }
    }
}

/// Parsed orbit inputs: the category, the candidate simples and the optional
/// torsion-free class. No check is made that the simples form an SMS.
pub fn orbit_inputs(
    cfg: &RunConfig,
) -> anyhow::Result<(OrbitCat, Vec<Diagonal>, Option<Vec<Diagonal>>)> {
    let amb = OrbitCat::new(cfg.w, cfg.n, Field::new(cfg.prime))
        .map_err(|e| UsageError(e.to_string()))?;
    let preset = cfg.w == 3 && cfg.n == 4;
    let parse_list = |v: &[String]| -> anyhow::Result<Vec<Diagonal>> {
        v.iter().map(|t| parse::diagonal(amb.ctx(), t)).collect()
    };
    let simples = match &cfg.sms {
        Some(v) => parse_list(v)?,
        None if preset => presets::orbit_sms(),
        None => bail!(UsageError(
            "--sms is required unless w = 3 and n = 4".into()
        )),
    };
    let fclass = match &cfg.fclass {
        Some(v) => Some(parse_list(v)?),
        None if preset && cfg.sms.is_none() => Some(presets::orbit_fclass()),
        None => None,
    };
    Ok((amb, simples, fclass))
}

pub fn orbit_setup(cfg: &RunConfig) -> anyhow::Result<Setup<OrbitCat>> {
    let (amb, simples, fclass) = orbit_inputs(cfg)?;
    if !is_sms_combinatorial(&amb, &simples) {
        bail!(NegcatError::Verification(
            "the given diagonals do not form a simple-minded system".into()
        ));
    }
    let sub = presets::orbit_subcat(&amb, &simples)?;
    Ok(Setup {
        amb,
        simples,
        sub,
        fclass,
    })
}

pub fn derived_setup(cfg: &RunConfig) -> anyhow::Result<Setup<DerivedCat>> {
    let amb = DerivedCat::new(Field::new(cfg.prime), cfg.n).with_window(-cfg.radius, cfg.radius);
    let preset = cfg.n == 3;
    let parse_list = |v: &[String]| -> anyhow::Result<Vec<DInd>> {
        v.iter().map(|t| parse::derived_object(cfg.n, t)).collect()
    };
    let simples = match &cfg.sms {
        Some(v) => parse_list(v)?,
        None if preset => presets::derived_simples(),
        None => bail!(UsageError("--sms is required unless n = 3".into())),
    };
    let fclass = match &cfg.fclass {
        Some(v) => Some(parse_list(v)?),
        None if preset && cfg.sms.is_none() => Some(presets::derived_fclass()),
        None => None,
    };
    if !is_orthogonal_collection(&amb, &simples, 1) {
        bail!(UsageError(
            "the given objects are not pairwise Hom-orthogonal bricks".into()
        ));
    }
    let sub = abelian::extension_closure(&amb, &simples, 2)?;
    Ok(Setup {
        amb,
        simples,
        sub,
        fclass,
    })
}

pub fn closure<A: Ambient>(s: &Setup<A>) -> Outcome
where
    A::Key: Display,
{
    let classes: BTreeMap<String, &Vec<u32>> = s
        .sub
        .class_vectors
        .iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    Outcome::new(
        json!({
            "simples": names(&s.simples),
            "indecomposables": names(&s.sub.indecomposables),
            "count": s.sub.indecomposables.len(),
            "class_vectors": classes,
        }),
        true,
    )
}

pub fn e_check<A: Ambient>(s: &Setup<A>, max: usize) -> Outcome
where
    A::Key: Display,
{
    let per: Vec<bool> = (1..=max)
        .map(|m| abelian::satisfies_en(&s.amb, &s.sub, m))
        .collect();
    let holds = per.iter().all(|&b| b);
    Outcome::new(
        json!({ "max": max, "holds": holds, "by_degree": per }),
        holds,
    )
}

pub fn star_report<A: Ambient>(s: &Setup<A>) -> Outcome
where
    A::Key: Display,
{
    let r = star_equality_report(&s.amb, &s.sub, 2);
    let passed = r.all_agree();
    Outcome::new(
        json!({
            "factorization": r.factorization,
            "star_equality": r.star_equality,
            "epi_condition": r.epi_condition,
            "all_agree": passed,
            "sigma_a_star_a": names(&r.sigma_a_star_a),
            "a_star_sigma_a": names(&r.a_star_sigma_a),
            "mixed": names(&r.mixed),
        }),
        passed,
    )
}

pub fn fg<A: Ambient>(s: &Setup<A>, objects: Option<Vec<A::Key>>) -> Outcome
where
    A::Key: Display,
{
    let objs = objects.unwrap_or_else(|| negcat_core::fg::sigma_a_star_a(&s.amb, &s.sub));
    let mut rows = Vec::new();
    let mut passed = true;
    for k in &objs {
        match fg_decompose(&s.amb, &s.sub, &[s.amb.canonical(k)]) {
            Some(d) => rows.push(json!({
                "object": k.to_string(),
                "F": names(&keys(&s.amb, &d.f_part)),
                "G": names(&keys(&s.amb, &d.g_part)),
            })),
            None => {
                passed = false;
                rows.push(json!({ "object": k.to_string(), "F": null, "G": null }));
            }
        }
    }
    Outcome::new(json!({ "decompositions": rows }), passed)
}

pub fn snake<A: Ambient>(s: &Setup<A>, seed: u64, count: usize) -> anyhow::Result<Outcome>
where
    A::Key: Display,
{
    let r = snake_suite(&s.amb, &s.sub, seed, count)?;
    Ok(Outcome::new(
        json!({
            "triangles": r.triangles,
            "rejected": r.rejected,
            "exactness_failures": r.exactness_failures,
            "mono_start_failures": r.mono_start_failures,
            "epi_end_failures": r.epi_end_failures,
            "class_sum_failures": r.class_sum_failures,
            "nonzero_delta": r.nonzero_delta,
        }),
        r.passed(),
    ))
}

pub fn torf_enum<A: Ambient>(s: &Setup<A>) -> Outcome
where
    A::Key: Display,
{
    let tf = enumerate_torsion_free(&s.amb, &s.sub);
    let mut o = Outcome::new(
        json!({ "count": tf.len(), "classes": class_names(&tf) }),
        true,
    );
    o.stdout = Some(tf.len().to_string());
    o
}

pub fn intermediate<A: Ambient>(s: &Setup<A>) -> anyhow::Result<Outcome>
where
    A::Key: Display,
{
    let f = s.require_fclass()?;
    if !s.sub.contains_all(f) {
        bail!(UsageError(
            "--fclass must consist of indecomposables of A".into()
        ));
    }
    let torsion_free = is_torsion_free(&s.amb, &s.sub, f);
    let c = induced_intermediate(&s.amb, &s.sub, f);
    let by_triangles = induced_intermediate_by_triangles(&s.amb, &s.sub, f, 2) == c;
    let intermediate = is_intermediate(&s.amb, &s.sub, &c);
    let mut fs = f.to_vec();
    fs.sort();
    let round_trip = f_of(&s.amb, &s.sub, &c) == fs;
    let sf: Vec<A::Key> = fs
        .iter()
        .map(|k| s.amb.key(&s.amb.shift_ind(&s.amb.canonical(k), 1)))
        .collect();
    let extra: Vec<A::Key> = c
        .iter()
        .filter(|k| !s.sub.contains(k) && !sf.contains(k))
        .cloned()
        .collect();
    Ok(Outcome::new(
        json!({
            "fclass": names(&fs),
            "torsion_free": torsion_free,
            "induced": names(&c),
            "count": c.len(),
            "sigma_f": names(&sf),
            "extra": names(&extra),
            "matches_triangle_construction": by_triangles,
            "is_intermediate": intermediate,
            "round_trip": round_trip,
        }),
        torsion_free && by_triangles && intermediate && round_trip,
    ))
}

pub fn bijection<A: Ambient>(s: &Setup<A>) -> Outcome
where
    A::Key: Display,
{
    let star = star_equality_report(&s.amb, &s.sub, 2);
    let r = bijection_check(&s.amb, &s.sub, star.star_equality);
    let mut o = Outcome::new(
        json!({
            "applicable": r.applicable,
            "torsion_free_count": r.torsion_free.len(),
            "intermediate_count": r.intermediate.len(),
            "matching": r.matching,
            "unmatched_torsion_free": r.unmatched_torsion_free,
            "unmatched_intermediate": r.unmatched_intermediate,
            "round_trip_torsion_free": r.round_trip_torsion_free,
            "round_trip_intermediate": r.round_trip_intermediate,
            "verified": r.verified(),
            "torsion_free": class_names(&r.torsion_free),
            "intermediate": class_names(&r.intermediate),
        }),
        r.verified(),
    );
    o.stdout = Some(format!(
        "{} = {}",
        r.torsion_free.len(),
        r.intermediate.len()
    ));
    o
}

pub fn monoid<A: Ambient>(s: &Setup<A>, bound: u32) -> anyhow::Result<Outcome>
where
    A::Key: Display,
{
    let f = s.require_fclass()?;
    if !is_torsion_free(&s.amb, &s.sub, f) {
        bail!(UsageError("--fclass is not a torsion-free class".into()));
    }
    let c = induced_intermediate(&s.amb, &s.sub, f);
    let r = localization_iso_check(&s.amb, &s.sub, f, &c, bound)?;
    Ok(Outcome::new(
        json!({
            "bound": r.bound,
            "generators_a": names(&r.generators_a),
            "generators_c": names(&r.generators_c),
            "relations_c": r.relations_c,
            "free_on_simples": r.free_on_simples,
            "inverse_respects_relations": r.inverse_respects_relations,
            "ball_size": r.ball_size,
            "well_defined": r.well_defined,
            "injective": r.injective,
            "surjective": r.surjective,
            "unknowns": r.unknowns,
            "verified": r.verified(),
        }),
        r.verified(),
    ))
}

pub fn indecs(cfg: &RunConfig, count_only: bool) -> anyhow::Result<Outcome> {
    let amb = OrbitCat::new(cfg.w, cfg.n, Field::new(cfg.prime))
        .map_err(|e| UsageError(e.to_string()))?;
    let mut all = amb.ctx().all_indecomposables();
    all.sort();
    let mut from_lifts: Vec<Diagonal> = amb.probe_set().iter().map(|x| amb.key(x)).collect();
    from_lifts.sort();
    from_lifts.dedup();
    let consistent = from_lifts == all;
    let mut o = Outcome::new(
        json!({ "count": all.len(), "diagonals": names(&all), "census_matches_lifts": consistent }),
        consistent,
    );
    if count_only {
        o.stdout = Some(all.len().to_string());
    }
    Ok(o)
}

pub fn arquiver(cfg: &RunConfig) -> anyhow::Result<Outcome> {
    let amb = OrbitCat::new(cfg.w, cfg.n, Field::new(cfg.prime))
        .map_err(|e| UsageError(e.to_string()))?;
    let q = amb.ar_quiver();
    let mut in_rows: Vec<Diagonal> = q.rows.iter().flatten().copied().collect();
    in_rows.sort();
    let mut images: Vec<Diagonal> = q.tau.values().copied().collect();
    images.sort();
    let passed = in_rows == q.vertices && images == q.vertices && q.tau.len() == q.vertices.len();
    let arrows: Vec<[String; 2]> = q
        .arrows
        .iter()
        .map(|(u, v)| [u.to_string(), v.to_string()])
        .collect();
    let tau: BTreeMap<String, String> = q
        .tau
        .iter()
        .map(|(u, v)| (u.to_string(), v.to_string()))
        .collect();
    let rows: Vec<Vec<String>> = q.rows.iter().map(|r| names(r)).collect();
    Ok(Outcome::new(
        json!({
            "vertices": names(&q.vertices),
            "arrows": arrows,
            "tau": tau,
            "rows": rows,
            "row_count": q.rows.len(),
        }),
        passed,
    ))
}

pub fn sms_check(amb: &OrbitCat, simples: &[Diagonal]) -> Outcome {
    let combinatorial = is_sms_combinatorial(amb, simples);
    let lifts = amb.lift_obj(simples).expect("admissible");
    let orthogonal = is_orthogonal_collection(amb, &lifts, amb.ctx().w);
    let holds = is_sms(amb, simples);
    Outcome::new(
        json!({
            "sms": names(simples),
            "combinatorial": combinatorial,
            "orthogonal": orthogonal,
            "is_sms": holds,
        }),
        holds && combinatorial == orthogonal,
    )
}

pub fn draw(s: &Setup<OrbitCat>) -> Outcome {
    let ctx = s.amb.ctx();
    let highlights = s.fclass.clone().unwrap_or_default();
    let polygon = svg::render_polygon(ctx.big_n, &s.simples, &[]);
    let q = s.amb.ar_quiver();
    let mut colours: BTreeMap<Diagonal, &str> = BTreeMap::new();
    let mut extra = Vec::new();
    let mut sigma_f = Vec::new();
    if let Some(f) = &s.fclass {
        let c = induced_intermediate(&s.amb, &s.sub, f);
        sigma_f = f.iter().map(|d| s.amb.shift_diag(*d, 1)).collect();
        for d in &c {
            if !s.sub.contains(d) && !sigma_f.contains(d) {
                colours.insert(*d, "#17becf");
                extra.push(*d);
            }
        }
        for d in &sigma_f {
            colours.insert(*d, "#2ca02c");
        }
    }
    for d in &s.sub.indecomposables {
        colours.insert(*d, "#d62728");
    }
    let ar = svg::render_ar(&q, &colours);
    let fclass_polygon = svg::render_polygon(ctx.big_n, &s.sub.indecomposables, &highlights);
    let mut o = Outcome::new(
        json!({
            "polygon_vertices": ctx.big_n,
            "sms": names(&s.simples),
            "red": names(&s.sub.indecomposables),
            "green": names(&sigma_f),
            "cyan": names(&extra),
            "files": ["polygon.svg", "abelian.svg", "ar.svg"],
        }),
        true,
    );
    o.files = vec![
        ("polygon.svg".into(), polygon),
        ("abelian.svg".into(), fclass_polygon),
        ("ar.svg".into(), ar),
    ];
    o
}
