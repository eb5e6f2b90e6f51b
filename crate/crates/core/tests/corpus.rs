//! Property suites over the small-group corpus.

use pq_core::catalog::build;
use pq_core::group::p_part;
use pq_core::lie::{run_verifier, Instance, Verdict};
use pq_core::Limits;

const Q8: &str = "Perm[(1 2 3 4)(5 6 7 8),(1 5 3 7)(2 8 4 6)]";

fn corpus() -> Vec<String> {
    let mut v: Vec<String> = (3..=6).map(|n| format!("Sym({n})")).collect();
    v.extend((4..=6).map(|n| format!("Alt({n})")));
    v.extend((3..=12).map(|n| format!("Dih({n})")));
    v.push("SL(2,3)".into());
    v.push(Q8.into());
    v.extend([4, 5, 7, 8, 9].map(|q| format!("PSL(2,{q})")));
    v.push("PSL(3,2)".into());
    v
}

fn instances() -> Vec<Instance> {
    let lim = Limits::default();
    let mut out = Vec::new();
    for spec in corpus() {
        let g = build(&spec, &lim).unwrap();
        for p in [2u64, 3, 5] {
            if p_part(g.group.order() as u64, p) > 1 {
                out.push(Instance::new(g.clone(), p, lim));
            }
        }
    }
    out
}

fn check_all(id: &str) {
    let mut ran = 0;
    for inst in instances() {
        let r = run_verifier(id, &inst).unwrap_or_else(|e| panic!("{id} on {}: {e}", inst.name()));
        assert_ne!(r.verdict, Verdict::Fail, "{id} on {}: {r:?}", inst.name());
        if r.verdict == Verdict::Pass {
            ran += 1;
        }
    }
    assert!(ran > 0, "{id} never applied");
}

#[test]
fn q8_is_quaternion() {
    let g = build(Q8, &Limits::default()).unwrap();
    assert_eq!(g.group.order(), 8);
    assert_eq!(pq_core::group::order_p_elements(&g.group, 2).len(), 1);
}

#[test]
fn quillen_brown_bouc_agree() {
    check_all("equivalences");
}

#[test]
fn nontrivial_p_core_gives_acyclic_posets() {
    check_all("contractible");
}

#[test]
fn fixed_points_match_centralisers() {
    check_all("fixed-points");
}

#[test]
fn euler_pipelines_agree() {
    check_all("euler");
    check_all("bouc-euler");
}

#[test]
fn core_and_relabeling_preserve_homology() {
    check_all("core-reduce");
}
