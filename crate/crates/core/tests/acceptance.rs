//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Every check is exact. Each criterion also has a wall-clock budget; running
//! over it is a failure too.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use multicirc::graph::{cartesian_product, complete, complete_bipartite, gq22_voltage, line_graph, triangular};
use multicirc::isoreg::{
    edge_iso_params, is_k_isoregular, is_locally_3isoregular_at, iso_profile, nonedge_iso_params,
    subconstituent_characterization, t_vertex_condition, IsoType,
};
use multicirc::paramtheory::{
    certify_range, edge_relations_check, even_m_candidates, feasible_local_params, nonedge_relations_check,
    replay_batch, Claim, EvenFamily, LocalParamSolution, Verdict,
};
use multicirc::search::{
    confirm_nonexistence_bicirc_odd, search, search_tricirculant_srg, with_jobs, SearchResult, SearchSpec,
};
use multicirc::srg::is_nontrivial_srg;
use multicirc::{decode_graph6, encode_graph6, is_isomorphic, srg_params, Graph, NamedGraph, SrgParams};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn named(tag: NamedGraph) -> Graph {
    tag.build().expect("corpus graphs build")
}

fn srg(n: u64, k: u64, l: u64, m: u64) -> SrgParams {
    SrgParams::new(n, k, l, m)
}

fn size3(g: &Graph) -> Option<[usize; 4]> {
    iso_profile(g, 3).ok().flatten()?.size3()
}

fn edge_verdicts(g: &Graph) -> Vec<Option<(u64, u64, u64)>> {
    g.edges()
        .map(|(x, y)| edge_iso_params(g, x, y).unwrap().map(|p| (p.q, p.r, p.w)))
        .collect()
}

fn nonedge_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n).flat_map(|x| (x + 1..n).map(move |z| (x, z))).filter(|&(x, z)| !g.has_edge(x, z)).collect()
}

fn criterion_1() -> Outcome {
    let expected = [
        (NamedGraph::Petersen, srg(10, 3, 0, 1)),
        (NamedGraph::Clebsch, srg(16, 5, 0, 2)),
        (NamedGraph::K4xK4, srg(16, 6, 2, 2)),
        (NamedGraph::ShrikhandeA, srg(16, 6, 2, 2)),
        (NamedGraph::ShrikhandeB, srg(16, 6, 2, 2)),
        (NamedGraph::GQ22, srg(15, 6, 1, 3)),
        (NamedGraph::T7, srg(21, 10, 5, 4)),
    ];
    for (tag, p) in expected {
        ensure!(srg_params(&named(tag)) == Some(p), "{tag}: {:?} != {p:?}", srg_params(&named(tag)));
    }
    let k4 = complete(4).unwrap();
    ensure!(is_isomorphic(&named(NamedGraph::K4xK4), &cartesian_product(&k4, &k4).unwrap()).is_some(), "k4xk4 symbol is not K4□K4");
    let gq = gq22_voltage();
    let t6c = triangular(6).unwrap().complement();
    let lk6c = line_graph(&complete(6).unwrap()).unwrap().complement();
    ensure!(is_isomorphic(&gq, &t6c).is_some(), "gq22 voltage graph is not complement(T(6))");
    ensure!(is_isomorphic(&t6c, &lk6c).is_some(), "complement(T(6)) is not complement(L(K6))");
    Ok(())
}

fn criterion_2() -> Outcome {
    ensure!(size3(&named(NamedGraph::Clebsch)) == Some([0, 0, 0, 1]), "clebsch profile {:?}", size3(&named(NamedGraph::Clebsch)));
    ensure!(size3(&named(NamedGraph::K4xK4)) == Some([1, 0, 1, 0]), "k4xk4 profile {:?}", size3(&named(NamedGraph::K4xK4)));

    let shr = is_k_isoregular(&named(NamedGraph::ShrikhandeA), 3).unwrap();
    ensure!(!shr.isoregular, "shrikhande reported 3-isoregular");
    let k12 = shr.violations.iter().find(|w| w.iso_type == IsoType::K12).ok_or("no K1,2 witness for shrikhande")?;
    let vals: BTreeSet<usize> = [k12.first_valency, k12.second_valency].into();
    ensure!(vals == BTreeSet::from([0, 1]), "shrikhande K1,2 witness valencies {vals:?}");
    ensure!(!is_k_isoregular(&named(NamedGraph::ShrikhandeB), 3).unwrap().isoregular, "shrikhande-b reported 3-isoregular");

    ensure!(is_k_isoregular(&named(NamedGraph::C5), 3).unwrap().isoregular, "c5 not 3-isoregular");
    for p in [13, 17] {
        ensure!(!is_k_isoregular(&named(NamedGraph::Paley(p)), 3).unwrap().isoregular, "paley({p}) reported 3-isoregular");
    }

    let pet = named(NamedGraph::Petersen);
    ensure!(edge_verdicts(&pet).iter().all(Option::is_some), "some petersen edge is not 3-isoregular");
    ensure!(
        nonedge_pairs(&pet).iter().all(|&(x, z)| nonedge_iso_params(&pet, x, z).unwrap().is_none()),
        "some petersen non-edge is 3-isoregular"
    );

    let t6c = named(NamedGraph::T6Complement);
    ensure!(edge_verdicts(&t6c).iter().all(|v| *v == Some((0, 0, 1))), "complement(T(6)) edges are not all (0,0,1)");
    for x in 0..t6c.order() {
        ensure!(!is_locally_3isoregular_at(&t6c, x).unwrap().locally_3isoregular, "complement(T(6)) locally 3-isoregular at {x}");
    }

    let t7 = named(NamedGraph::T7);
    ensure!(edge_verdicts(&t7).iter().all(Option::is_none), "some T(7) edge is 3-isoregular");
    Ok(())
}

fn criterion_3() -> Outcome {
    let mut measured = 0;
    for tag in NamedGraph::CORPUS {
        let g = named(tag);
        let Some(p) = srg_params(&g) else { continue };
        for (x, y) in g.edges() {
            if let Some(e) = edge_iso_params(&g, x, y).unwrap() {
                measured += 1;
                ensure!(edge_relations_check(&p, e.q as i64, e.r as i64, e.w as i64), "{tag}: edge ({x},{y}) {e:?} breaks the edge relations");
            }
        }
        for (x, z) in nonedge_pairs(&g) {
            if let Some(e) = nonedge_iso_params(&g, x, z).unwrap() {
                measured += 1;
                ensure!(nonedge_relations_check(&p, e.rp as i64, e.wp as i64, e.v as i64), "{tag}: non-edge ({x},{z}) {e:?} breaks the non-edge relations");
            }
        }
        if is_nontrivial_srg(&g) {
            let sub = subconstituent_characterization(&g).unwrap();
            let iso = is_k_isoregular(&g, 3).unwrap().isoregular;
            ensure!(sub == iso, "{tag}: subconstituent characterization {sub} vs 3-isoregular {iso}");
        }
    }
    ensure!(measured > 0, "no 3-isoregular pair measured");
    for tag in NamedGraph::CORPUS {
        let g = named(tag);
        let t3 = t_vertex_condition(&g, 3).unwrap().holds;
        ensure!(t3 == srg_params(&g).is_some(), "{tag}: 3-vertex condition {t3} disagrees with strong regularity");
    }
    ensure!(t_vertex_condition(&named(NamedGraph::Petersen), 4).unwrap().holds, "petersen fails the 4-vertex condition");
    Ok(())
}

fn tuples(sols: &[LocalParamSolution]) -> Vec<(u64, u64, u64, Option<u64>)> {
    sols.iter().map(|s| (s.q, s.r, s.w, s.v)).collect()
}

fn criterion_4() -> Outcome {
    let cases = [
        (srg(16, 6, 2, 2), vec![(1, 0, 1, Some(0))]),
        (srg(16, 5, 0, 2), vec![(0, 0, 0, Some(1))]),
        (srg(10, 3, 0, 1), vec![]),
    ];
    for (p, want) in cases {
        let got = tuples(&feasible_local_params(&p).map_err(|e| e.to_string())?);
        ensure!(got == want, "{p:?}: {got:?} != {want:?}");
    }
    for (family, p) in [(EvenFamily::B, srg(16, 6, 2, 2)), (EvenFamily::C, srg(16, 10, 6, 6))] {
        let cand = even_m_candidates(2, family).map_err(|e| e.to_string())?;
        let got = feasible_local_params(&p).map_err(|e| e.to_string())?;
        ensure!(got.len() == 1 && got[0].matches(&cand), "{family:?} at m = 2: candidate {cand:?} vs solver {:?}", tuples(&got));
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let runs = [(Claim::BicircOdd, 2, 200), (Claim::FamilyB, 3, 199), (Claim::FamilyC, 3, 199), (Claim::Tri1, -50, 50), (Claim::Tri2, -50, 50)];
    for (claim, lo, hi) in runs {
        let batch = certify_range(claim, lo, hi).map_err(|e| e.to_string())?;
        for c in &batch.certificates {
            let odd_only = matches!(claim, Claim::FamilyB | Claim::FamilyC);
            ensure!(!odd_only || c.index % 2 == 1, "{claim} #{}: even index certified", c.index);
            match (claim, &c.verdict) {
                (Claim::Tri1, Verdict::Solution { solution }) => {
                    ensure!(c.index == -1, "{claim} #{}: unexpected solution", c.index);
                    ensure!((solution.q, solution.r, solution.w) == (0, 0, 1), "{claim} #-1: solution {solution:?}");
                }
                (Claim::Tri1, _) => ensure!(c.index != -1, "{claim} #-1: no solution"),
                (Claim::Tri2, Verdict::Degenerate { .. }) => {}
                (_, v) => ensure!(v.is_contradiction(), "{claim} #{}: {v:?}", c.index),
            }
        }
        if matches!(claim, Claim::FamilyB | Claim::FamilyC) {
            ensure!(batch.certificates.len() == 99, "{claim}: {} certificates", batch.certificates.len());
        }
        let text = serde_json::to_string(&batch).map_err(|e| e.to_string())?;
        let back = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let report = replay_batch(&back);
        ensure!(report.ok(), "{claim}: replay failures {:?}", report.failures);
    }
    Ok(())
}

fn iso3_names(r: &SearchResult) -> BTreeSet<String> {
    r.classes
        .iter()
        .filter(|c| c.isoregular3)
        .map(|c| {
            let name = c.name.clone().unwrap_or_else(|| c.graph6.clone());
            name.strip_prefix("complement(").and_then(|s| s.strip_suffix(')')).map(str::to_string).unwrap_or(name)
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let mut full = SearchSpec::bicirculant(8);
    full.prune = false;
    let r = search(&full).map_err(|e| e.to_string())?;
    ensure!(r.stats.candidates == 65_536, "n = 8: {} candidates", r.stats.candidates);
    let names = iso3_names(&r);
    ensure!(names == BTreeSet::from(["clebsch".to_string(), "k4xk4".to_string()]), "n = 8 3-isoregular classes {names:?}");
    let a = r.class_of(&named(NamedGraph::ShrikhandeA)).ok_or("shrikhande-a has no class")?;
    let b = r.class_of(&named(NamedGraph::ShrikhandeB)).ok_or("shrikhande-b has no class")?;
    ensure!(a == b, "shrikhande symbols in classes {a} and {b}");
    ensure!(!r.classes[a].isoregular3, "shrikhande class marked 3-isoregular");

    for n in [5, 7, 13] {
        let r = confirm_nonexistence_bicirc_odd(n).map_err(|e| e.to_string())?;
        ensure!(r.stats.iso3_survivors == 0, "n = {n}: {} 3-isoregular survivors", r.stats.iso3_survivors);
        let s = r.structure.as_ref().ok_or("no structure check")?;
        ensure!(s.checked == r.survivors.len() && s.violations.is_empty(), "n = {n}: structure {s:?}");
        if n == 13 {
            ensure!(r.classes.iter().any(|c| c.params == srg(26, 10, 3, 4)), "n = 13: no SRG(26,10,3,4) class");
        }
    }

    let r = search_tricirculant_srg(5, srg(15, 6, 1, 3)).map_err(|e| e.to_string())?;
    let gq = gq22_voltage();
    let class = r.class_of(&gq).ok_or("tricirculant n = 5: no gq22 class")?;
    ensure!(r.classes[class].name.as_deref() == Some("gq22"), "gq22 class named {:?}", r.classes[class].name);
    Ok(())
}

fn criterion_7() -> Outcome {
    let mut corpus: Vec<(String, Graph)> = NamedGraph::CORPUS.iter().map(|t| (t.tag(), named(*t))).collect();
    corpus.push(("k4,4".into(), complete_bipartite(4, 4).unwrap()));
    corpus.push(("line(k4,4)".into(), line_graph(&complete_bipartite(4, 4).unwrap()).unwrap()));
    for (tag, g) in &corpus {
        let text = encode_graph6(g);
        let back = decode_graph6(&text).map_err(|e| format!("{tag}: {e}"))?;
        ensure!(&back == g, "{tag}: graph6 round trip changed the graph");
        ensure!(encode_graph6(&back) == text, "{tag}: graph6 text not stable");
    }
    let spec = SearchSpec::bicirculant(8).with_iso3();
    let reports: Vec<String> = [1, 2, 4]
        .into_iter()
        .map(|j| with_jobs(Some(j), || search(&spec).map(|r| r.to_json_lines())))
        .collect::<Result<Result<_, _>, _>>()
        .and_then(|r| r)
        .map_err(|e| e.to_string())?;
    ensure!(reports.windows(2).all(|w| w[0] == w[1]), "search reports differ across job counts");
    let batches: Vec<String> = [1, 3]
        .into_iter()
        .map(|j| with_jobs(Some(j), || certify_range(Claim::Tri2, -20, 20).map(|b| serde_json::to_string(&b).unwrap())))
        .collect::<Result<Result<_, _>, _>>()
        .and_then(|r| r)
        .map_err(|e| e.to_string())?;
    ensure!(batches[0] == batches[1], "certificate batches differ across job counts");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("named-graph ground truth", criterion_1, 1),
        ("3-isoregularity verdicts", criterion_2, 5),
        ("local-parameter relations", criterion_3, 5),
        ("solver/oracle agreement", criterion_4, 1),
        ("certificates and replay", criterion_5, 10),
        ("exhaustive searches", criterion_6, 900),
        ("format fidelity", criterion_7, 1),
    ];
    let mut failed = 0;
    for (i, (what, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= Duration::from_secs(budget) {
                Ok(())
            } else {
                Err(format!("over the {budget} s budget"))
            }
        });
        let time = format!("{:.2} s / {budget} s", elapsed.as_secs_f64());
        match outcome {
            Ok(()) => println!("criterion {} PASS  {what}  [{time}]", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {} FAIL  {what}  [{time}]  {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
