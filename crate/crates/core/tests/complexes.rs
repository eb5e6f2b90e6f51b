use pq_core::catalog::build;
use pq_core::complex::{homology, is_cohen_macaulay, mv_rank_identity_check, order_complex};
use pq_core::group::p_core;
use pq_core::lie::{bucket_members, classify_f, find_scnl, Bucket, LabeledComplex};
use pq_core::poset::{bouc_poset, mixed_poset, quillen_poset};
use pq_core::Limits;

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn building_of_psl32() {
    let g = build("PSL(3,2)", &lim()).unwrap();
    let k = order_complex(&bouc_poset(&g.group, 2, &lim()).unwrap().poset, &lim()).unwrap();
    // 7 points, 7 lines, 21 flags.
    assert_eq!(k.face_counts(), vec![35, 42]);
    let h = homology(&k, &lim()).unwrap();
    assert_eq!(h.rational_degrees(), vec![1]);
    assert_eq!(h.rank(1), 8);
    assert!(is_cohen_macaulay(&k, &lim()).unwrap().holds);
}

#[test]
fn quillen_complex_of_alt5() {
    let g = build("Alt(5)", &lim()).unwrap();
    let k = order_complex(&quillen_poset(&g.group, 2, &lim()).unwrap().poset, &lim()).unwrap();
    assert_eq!(k.face_counts(), vec![20, 15]);
    assert_eq!(homology(&k, &lim()).unwrap().rank(0), 4);
}

#[test]
fn extension_by_field_involutions_as_mayer_vietoris() {
    let g = build("Sym(5)", &lim()).unwrap();
    let h = find_scnl(&g, 2).unwrap();
    let cls = classify_f(&g.group, &h.group, 2, None, None, &lim()).unwrap();
    let ff = bucket_members(&g.group, &cls, Bucket::F);
    let l = LabeledComplex::from_poset(&bouc_poset(&h.group, 2, &lim()).unwrap(), &lim()).unwrap();
    let k = l.extend(&ff.iter().collect::<Vec<_>>(), &lim()).unwrap();
    let base: Vec<u32> = (0..l.labels.len() as u32).collect();
    let mv = mv_rank_identity_check(&k.complex, &base, &lim()).unwrap();
    assert!(mv.holds, "{mv:?}");
    assert!(mv.euler_identity);
}

#[test]
fn mixed_poset_models_quillen_poset() {
    for (spec, p) in [("Sym(5)", 2), ("Sym(6)", 2), ("PSigmaL(2,4)", 2)] {
        let g = build(spec, &lim()).unwrap();
        let h = g.base_subgroup();
        let m = mixed_poset(h, &g.group, p, &lim()).unwrap();
        let a = quillen_poset(&g.group, p, &lim()).unwrap();
        let hm = homology(&order_complex(&m.poset, &lim()).unwrap(), &lim()).unwrap();
        let ha = homology(&order_complex(&a.poset, &lim()).unwrap(), &lim()).unwrap();
        assert!(hm.same_betti(&ha), "{spec}");
    }
}

#[test]
fn p_core_cone() {
    let g = build("Sym(4)", &lim()).unwrap();
    assert!(!p_core(&g.group, 2).is_trivial());
    let k = order_complex(&quillen_poset(&g.group, 2, &lim()).unwrap().poset, &lim()).unwrap();
    assert!(homology(&k, &lim()).unwrap().is_acyclic());
}
