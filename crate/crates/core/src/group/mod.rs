//! Permutation groups with explicit element enumeration.

mod ambient;
mod handle;
pub mod ops;
mod perm;

pub use ambient::PermGroup;
pub use handle::GroupHandle;
pub use ops::{
    center, centralizer, check_prime, centralizer_of_element, conjugate, conjugates, intersection,
    is_elementary_abelian, is_normal, is_prime, is_self_centralising, join, normalizer,
    normalizes, o_p_prime_residual, omega1, order_p_elements, p_core, p_part,
    subgroup_conjugacy_orbits, sylow_subgroup, SubgroupOrbit, SubgroupSet,
};
pub use perm::Permutation;

use crate::Result;

/// Enumerates `<gens>` and returns it as a handle on itself.
pub fn enumerate(gens: &[Permutation], cap: usize) -> Result<GroupHandle> {
    let amb = PermGroup::generate(gens, cap)?;
    Ok(GroupHandle::whole(&amb))
}

/// Finds the ambient index of a permutation.
pub fn element(g: &GroupHandle, p: &Permutation) -> Option<u32> {
    g.ambient().index_of(p.images())
}

/// The subgroup of `g` generated by explicit permutations.
pub fn subgroup(g: &GroupHandle, gens: &[Permutation]) -> Option<GroupHandle> {
    let idx: Option<Vec<u32>> = gens.iter().map(|p| element(g, p)).collect();
    Some(GroupHandle::generated_by(g.ambient(), &idx?))
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;

    pub fn cyc(pts: &[usize], n: usize) -> Permutation {
        Permutation::from_cycles(n, &[pts.to_vec()]).unwrap()
    }

    pub fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cs: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cs).unwrap()
    }

    pub fn sym(n: usize) -> GroupHandle {
        let all: Vec<usize> = (0..n).collect();
        enumerate(&[cyc(&[0, 1], n), cyc(&all, n)], 1 << 22).unwrap()
    }

    pub fn alt(n: usize) -> GroupHandle {
        let gens: Vec<Permutation> = (2..n).map(|i| cyc(&[0, 1, i], n)).collect();
        enumerate(&gens, 1 << 22).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn enumeration_orders() {
        assert_eq!(sym(3).order(), 6);
        assert_eq!(alt(5).order(), 60);
        assert_eq!(sym(5).order(), 120);
    }

    #[test]
    fn enumeration_is_lexicographic_and_deterministic() {
        let g = sym(4);
        let amb = g.ambient();
        for k in 1..amb.order() as u32 {
            assert!(amb.images(k - 1) < amb.images(k));
        }
        assert!(amb.permutation(0).is_identity());
        let g2 = sym(4);
        assert_eq!(g.elements(), g2.elements());
    }

    #[test]
    fn cap_is_a_clean_error() {
        let gens = [cyc(&[0, 1], 6), cyc(&[0, 1, 2, 3, 4, 5], 6)];
        assert_eq!(PermGroup::generate(&gens, 100).unwrap_err(), crate::Error::CapExceeded { cap: 100 });
    }

    #[test]
    fn centralizer_examples() {
        let s4 = sym(4);
        let t = element(&s4, &cyc(&[0, 1], 4)).unwrap();
        assert_eq!(centralizer_of_element(&s4, t).order(), 4);
        let a5 = alt(5);
        let x = element(&a5, &perm(5, &[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!(centralizer_of_element(&a5, x).order(), 4);
        let c = enumerate(&[cyc(&[0, 1, 2, 3, 4, 5], 6)], 100).unwrap();
        assert_eq!(centralizer(&c, &c), c);
    }

    #[test]
    fn normalizer_examples() {
        let s4 = sym(4);
        let c4 = subgroup(&s4, &[cyc(&[0, 1, 2, 3], 4)]).unwrap();
        assert_eq!(normalizer(&s4, &c4).order(), 8);
        assert_eq!(normalizer(&s4, &s4), s4);
        let s5 = sym(5);
        let c2 = subgroup(&s5, &[cyc(&[0, 1], 5)]).unwrap();
        assert_eq!(normalizer(&s5, &c2).order(), 12);
    }

    #[test]
    fn sylow_examples() {
        assert_eq!(sylow_subgroup(&sym(4), 2).order(), 8);
        let c6 = enumerate(&[cyc(&[0, 1, 2, 3, 4, 5], 6)], 100).unwrap();
        assert!(sylow_subgroup(&c6, 5).is_trivial());
        let s6 = sym(6);
        for p in [2, 3, 5] {
            let s = sylow_subgroup(&s6, p);
            assert_eq!(s.order() as u64, p_part(720, p));
            assert_eq!(conjugates(&s6, &s).len() as u64 % p, 1);
        }
    }

    #[test]
    fn p_core_examples() {
        let s4 = sym(4);
        let v4 = p_core(&s4, 2);
        let expected = subgroup(&s4, &[perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])]).unwrap();
        assert_eq!(v4, expected);
        assert!(p_core(&sym(5), 2).is_trivial());
        let p = sylow_subgroup(&s4, 2);
        assert_eq!(p_core(&p, 2), p);
    }

    #[test]
    fn residual_and_omega() {
        let s3 = sym(3);
        assert_eq!(o_p_prime_residual(&s3, 3).order(), 3);
        assert_eq!(o_p_prime_residual(&s3, 2), s3);
        let c4 = enumerate(&[cyc(&[0, 1, 2, 3], 4)], 100).unwrap();
        assert_eq!(omega1(&c4, 2).order(), 2);
        assert_eq!(omega1(&sym(5), 2).order(), 120);
    }

    #[test]
    fn orbit_examples() {
        let s5 = sym(5);
        let transpositions: Vec<GroupHandle> = order_p_elements(&s5, 2)
            .into_iter()
            .filter(|&x| s5.ambient().permutation(x).cycles().len() == 1)
            .map(|x| GroupHandle::generated_by(s5.ambient(), &[x]))
            .collect();
        let orbits = subgroup_conjugacy_orbits(&s5, &transpositions).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].size(), 10);

        let s4 = sym(4);
        let d8 = sylow_subgroup(&s4, 2);
        let all = SubgroupSet::new(conjugates(&s4, &d8));
        let orbits = all.orbits(&s4).unwrap();
        assert_eq!((orbits.len(), orbits[0].size()), (1, 3));
        let rep = &all.members[orbits[0].representative];
        assert!(all.members.iter().all(|m| rep <= m));

        let v4 = SubgroupSet::new(vec![p_core(&s4, 2)]);
        assert_eq!(v4.orbits(&s4).unwrap()[0].size(), 1);
        assert!(subgroup_conjugacy_orbits(&s4, &[d8]).is_err());
    }

    #[test]
    fn self_centralising_examples() {
        let s5 = sym(5);
        let a5 = subgroup(&s5, &[cyc(&[0, 1, 2], 5), cyc(&[0, 1, 2, 3, 4], 5)]).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(is_self_centralising(&s5, &a5));
        assert!(is_self_centralising(&s5, &s5));
        let v = enumerate(&[cyc(&[0, 1], 4), cyc(&[2, 3], 4)], 10).unwrap();
        let first = subgroup(&v, &[cyc(&[0, 1], 4)]).unwrap();
        assert!(!is_self_centralising(&v, &first));
    }

    fn check_normal_random(g: &GroupHandle, s: &GroupHandle, idx: &[usize]) {
        for &i in idx {
            let x = g.elements()[i % g.order()];
            assert_eq!(&conjugate(s, x), s);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]
        #[test]
        fn characteristic_subgroups_are_normal(idx in prop::collection::vec(0usize..10_000, 20)) {
            for g in [sym(4), sym(5), alt(5)] {
                for p in [2u64, 3] {
                    check_normal_random(&g, &p_core(&g, p), &idx);
                    check_normal_random(&g, &omega1(&g, p), &idx);
                    check_normal_random(&g, &o_p_prime_residual(&g, p), &idx);
                }
            }
        }

        #[test]
        fn centralizer_inside_normalizer(i in 0usize..120, j in 0usize..120) {
            let g = sym(5);
            let s = GroupHandle::generated_by(g.ambient(), &[g.elements()[i], g.elements()[j]]);
            prop_assert!(centralizer(&g, &s).is_subgroup_of(&normalizer(&g, &s)));
            prop_assert_eq!(g.order() % s.order(), 0);
        }
    }
}
