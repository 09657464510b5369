mod common;

use qindex::patterns::{contains_cycle_bruteforce, PatternQuery};
use qindex::search::{
    count_sharded, enumerate, enumerate_audited, find_extremal, find_extremal_sharded, partition_jobs,
    run_job, AuditOptions, EnumerationSpec, Job, Objective,
};
use qindex::spectra::q_index;
use qindex::verify::report::{csv_row, to_csv, CSV_TIMING_FROM};
use qindex::verify::{
    probe_conjecture, run_suite, verify_theorem_c4, verify_theorem_c5, ClaimId, ConjectureKind, SuiteConfig,
    Verdict,
};
use qindex::{graph6, Error};

fn count(spec: &EnumerationSpec) -> u64 {
    enumerate(spec, |_| {}).unwrap()
}

#[test]
fn unfiltered_counts_match_the_dedup_oracle() {
    for n in 1..=6 {
        let oracle = common::brute_classes(n, |_| true).len() as u64;
        assert_eq!(count(&EnumerationSpec::new(n)), oracle, "n = {n}");
        let connected = common::brute_classes(n, |g| g.is_connected()).len() as u64;
        assert_eq!(count(&EnumerationSpec::new(n).connected(true)), connected, "n = {n}");
    }
}

#[test]
fn filtered_counts_match_the_dedup_oracle() {
    for k in 3..=6 {
        for n in 1..=6 {
            let oracle = common::brute_classes(n, |g| !contains_cycle_bruteforce(g, k)).len() as u64;
            let spec = EnumerationSpec::new(n).forbid_cycle(k).unwrap();
            assert_eq!(count(&spec), oracle, "C{k}-free, n = {n}");
        }
    }
}

#[test]
fn filtered_counts_match_the_atlas_table() {
    let tables = [
        (3, common::ATLAS_C3_FREE),
        (4, common::ATLAS_C4_FREE),
        (5, common::ATLAS_C5_FREE),
        (6, common::ATLAS_C6_FREE),
    ];
    for (k, row) in tables {
        for (i, &want) in row.iter().enumerate() {
            let spec = EnumerationSpec::new(i + 1).forbid_cycle(k).unwrap();
            assert_eq!(count(&spec), want, "C{k}-free, n = {}", i + 1);
        }
    }
    assert_eq!(count(&EnumerationSpec::new(8).forbid_cycle(4).unwrap()), common::NX_C4_FREE_8);
    assert_eq!(count(&EnumerationSpec::new(8).forbid_cycle(5).unwrap()), common::NX_C5_FREE_8);
}

#[test]
fn mixed_filters_and_paths() {
    // forest-like: no C3 and no C4 and no C5 on 6 vertices
    let spec = EnumerationSpec::new(6)
        .forbid_cycle(3)
        .unwrap()
        .forbid_cycle(4)
        .unwrap()
        .forbid_cycle(5)
        .unwrap();
    let oracle = common::brute_classes(6, |g| (3..=5).all(|k| !contains_cycle_bruteforce(g, k))).len() as u64;
    assert_eq!(count(&spec), oracle);

    let p4 = PatternQuery::path(4).unwrap();
    let spec = EnumerationSpec::new(6).forbid(p4);
    let oracle = common::brute_classes(6, |g| !p4.occurs_in(g)).len() as u64;
    assert_eq!(count(&spec), oracle);
}

#[test]
fn audited_runs_see_each_class_once() {
    let audit = AuditOptions { distinct_forms: true, sample_every: 1 };
    assert_eq!(enumerate_audited(&EnumerationSpec::new(7), audit, |_| {}).unwrap(), 1044);
    for k in [4, 5, 6] {
        let spec = EnumerationSpec::new(8).forbid_cycle(k).unwrap();
        enumerate_audited(&spec, AuditOptions::full(), |g| {
            assert!(!contains_cycle_bruteforce(g, k));
        })
        .unwrap();
    }
}

#[test]
fn shard_decompositions_agree() {
    let spec = EnumerationSpec::new(8);
    for shards in [1, 2, 3, 7, 16, 50] {
        assert_eq!(count_sharded(&spec, shards).unwrap().iter().sum::<u64>(), 12346, "{shards} shards");
    }
    let spec = EnumerationSpec::new(9).forbid_cycle(5).unwrap();
    let single = find_extremal(&spec, Objective::Q).unwrap();
    for shards in [2, 5, 11] {
        let split = find_extremal_sharded(&spec, Objective::Q, shards).unwrap();
        assert_eq!(split.maximizer_graph6, single.maximizer_graph6);
        assert_eq!(split.max_value, single.max_value);
        assert_eq!(split.graphs_examined, single.graphs_examined);
    }
}

#[test]
fn jobs_serialize_and_rerun() {
    let spec = EnumerationSpec::new(7).forbid_cycle(4).unwrap();
    let jobs = partition_jobs(&spec, 4).unwrap();
    let mut total = 0;
    for job in &jobs {
        let text = serde_json::to_string(job).unwrap();
        let back: Job = serde_json::from_str(&text).unwrap();
        total += run_job(&spec, &back, |_| {}).unwrap();
    }
    assert_eq!(total, common::ATLAS_C4_FREE[6]);
}

#[test]
fn c4_free_maximum_increases_with_order() {
    let mut last = f64::NEG_INFINITY;
    for n in 4..=9 {
        let out = find_extremal(&EnumerationSpec::new(n).forbid_cycle(4).unwrap(), Objective::Q).unwrap();
        assert!(out.max_value > last, "n = {n}");
        last = out.max_value;
    }
}

#[test]
fn mu_search_respects_the_bound_skip() {
    // compare the pruned search against a direct scan
    let spec = EnumerationSpec::new(7).forbid_cycle(6).unwrap();
    let out = find_extremal(&spec, Objective::Mu).unwrap();
    let mut best = f64::NEG_INFINITY;
    enumerate(&spec, |g| best = best.max(qindex::spectra::mu_index(g).unwrap().value)).unwrap();
    assert!((out.max_value - best).abs() < 1e-12);
    assert!(out.spectra_evaluated <= out.graphs_examined);
}

#[test]
fn resource_guard() {
    assert!(matches!(count_sharded(&EnumerationSpec::new(11), 2), Err(Error::Infeasible(_))));
    assert!(matches!(
        find_extremal(&EnumerationSpec::new(13).forbid_cycle(4).unwrap(), Objective::Q),
        Err(Error::Infeasible(_))
    ));
    assert!(matches!(verify_theorem_c4(13), Err(Error::Infeasible(_))));
}

#[test]
fn theorem_witnesses_recompute() {
    for n in 4..=8 {
        for cert in [verify_theorem_c4(n).unwrap()].into_iter().chain(verify_theorem_c5(n.max(5)).ok()) {
            assert_eq!(cert.verdict, Verdict::Holds, "{} n = {}", cert.claim, cert.n);
            for w in &cert.witnesses {
                let g = graph6::decode(w).unwrap();
                assert_eq!(&graph6::encode(&g), w);
                let q = q_index(&g).unwrap().value;
                assert!((q - cert.max_value.unwrap()).abs() <= 1e-10);
            }
        }
    }
}

#[test]
fn conjecture_probes_never_fail() {
    for kind in [ConjectureKind::OddQ, ConjectureKind::EvenQ, ConjectureKind::EvenMu] {
        for n in 5..=8 {
            let c = probe_conjecture(kind, n, 2).unwrap();
            assert_eq!(c.verdict, Verdict::ReportOnly);
            assert!(c.gap.unwrap() >= -1e-9);
        }
    }
    assert!(probe_conjecture(ConjectureKind::OddQ, 7, 1).is_err());
}

#[test]
fn suite_rows_are_reproducible() {
    let cfg = SuiteConfig::parse("claims = THM1, THM2, MANTEL-Q, CONJ3\nthm1.n = 4..8\nthm2.n = 5..8\nshards = 3", None)
        .unwrap();
    let strip = |certs: &[qindex::verify::Certificate]| -> Vec<Vec<String>> {
        certs.iter().map(|c| csv_row(c)[..CSV_TIMING_FROM].to_vec()).collect()
    };
    let a = run_suite(&cfg).unwrap();
    let b = run_suite(&cfg).unwrap();
    assert_eq!(strip(&a), strip(&b));
    assert!(a.iter().all(|c| c.verdict != Verdict::Fails));
    assert_eq!(a[0].claim, ClaimId::Thm1);
    assert!(to_csv(&a).unwrap().lines().count() == a.len() + 1);
}

#[test]
fn suite_writes_configured_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("suite.cfg");
    std::fs::write(&cfg_path, "claims = PROP2\nprop2.n = 4..10\noutput.csv = r.csv\noutput.json = r.json\n").unwrap();
    let cfg = SuiteConfig::load(cfg_path.to_str().unwrap()).unwrap();
    let certs = run_suite(&cfg).unwrap();
    assert_eq!(certs.len(), 7);
    let csv = std::fs::read_to_string(dir.path().join("r.csv")).unwrap();
    assert_eq!(csv.lines().count(), 8);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 7);
}
