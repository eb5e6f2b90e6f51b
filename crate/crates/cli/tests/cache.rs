use std::fs;

use pq_cli::cache::{Cache, CACHE_VERSION};
use pq_cli::{cache_key, run, Command, RunConfig};
use pq_core::poset::PosetKind;

#[test]
fn put_then_get_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let c = Cache::new(dir.path());
    let key = Cache::key(&["Sym(5)", "homology"]);
    assert_eq!(c.get(&key), None);
    let payload = r#"{"degrees":{"1":{"rank":16,"torsion":[]}},"euler":-16}"#;
    c.put(&key, payload).unwrap();
    assert_eq!(c.get(&key).as_deref(), Some(payload));
    let leftovers: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .filter(|e| e.as_ref().unwrap().file_name().to_string_lossy().ends_with(".tmp"))
        .collect();
    assert!(leftovers.is_empty());
}

#[test]
fn version_bump_is_a_miss() {
    let dir = tempfile::tempdir().unwrap();
    let key = Cache::key(&["x"]);
    Cache::new(dir.path()).put(&key, "1").unwrap();
    assert_eq!(Cache::with_version(dir.path(), "pq-cache v2").get(&key), None);
    assert_eq!(Cache::new(dir.path()).get(&key).as_deref(), Some("1"));
}

#[test]
fn foreign_and_corrupt_files_are_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let c = Cache::new(dir.path());
    let key = Cache::key(&["y"]);
    fs::write(dir.path().join("README"), "not a cache entry").unwrap();
    fs::write(dir.path().join(format!("{key}.json")), format!("{CACHE_VERSION}\n{{truncated")).unwrap();
    assert_eq!(c.get(&key), None);
    let (v, hit) = c.get_or_put::<()>(&key, || Ok("[1,2]".into())).unwrap();
    assert_eq!((v.as_str(), hit), ("[1,2]", false));
    let (_, hit) = c.get_or_put::<()>(&key, || unreachable!()).unwrap();
    assert!(hit);
}

fn homology_config(dir: &std::path::Path, group: &str, p: u64, kind: PosetKind) -> RunConfig {
    let mut c = RunConfig::new(Command::Homology);
    c.group = Some(group.into());
    c.p = Some(p);
    c.kind = Some(kind);
    c.cache_dir = Some(dir.to_path_buf());
    c.no_timing = true;
    c
}

#[test]
fn cold_and_warm_runs_agree() {
    let dir = tempfile::tempdir().unwrap();
    for (g, p) in [("Sym(5)", 2), ("Alt(6)", 3), ("PSL(3,2)", 2)] {
        for kind in [PosetKind::Quillen, PosetKind::Brown, PosetKind::Bouc] {
            let cfg = homology_config(dir.path(), g, p, kind);
            let cold = run(&cfg);
            assert_eq!(cold.exit_code, 0, "{}", cold.json);
            let key = cache_key(&cfg).unwrap();
            assert!(Cache::new(dir.path()).get(&key).is_some());
            let warm = run(&cfg);
            assert_eq!(cold.json, warm.json);
        }
    }
}

#[test]
fn key_depends_on_caps_and_kind() {
    let dir = tempfile::tempdir().unwrap();
    let a = homology_config(dir.path(), "Sym(5)", 2, PosetKind::Quillen);
    let mut b = a.clone();
    b.limits.simplices = 10;
    let mut c = a.clone();
    c.kind = Some(PosetKind::Bouc);
    let mut d = a.clone();
    d.group = Some(" Sym( 5 )".into());
    let ka = cache_key(&a).unwrap();
    assert_ne!(ka, cache_key(&b).unwrap());
    assert_ne!(ka, cache_key(&c).unwrap());
    // Specs are canonicalised before hashing.
    if let Ok(kd) = cache_key(&d) {
        assert_eq!(ka, kd);
    }
}
