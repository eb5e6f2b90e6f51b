use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rustc_hash::FxHashSet;

use super::{PermGroup, Permutation};

/// A subgroup of an enumerated ambient group, stored as its sorted element
/// indices plus a generating set. Equality is element-set equality.
#[derive(Clone)]
pub struct GroupHandle {
    ambient: Arc<PermGroup>,
    elements: Arc<[u32]>,
    generators: Arc<[u32]>,
}

impl GroupHandle {
    fn from_parts(ambient: &Arc<PermGroup>, elements: Vec<u32>, generators: Vec<u32>) -> Self {
        assert!(
            !elements.is_empty() && ambient.order().is_multiple_of(elements.len()),
            "subgroup order {} does not divide {}",
            elements.len(),
            ambient.order()
        );
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        GroupHandle { ambient: ambient.clone(), elements: elements.into(), generators: generators.into() }
    }

    pub fn whole(ambient: &Arc<PermGroup>) -> Self {
        let elements = (0..ambient.order() as u32).collect();
        Self::from_parts(ambient, elements, ambient.generators().to_vec())
    }

    pub fn trivial(ambient: &Arc<PermGroup>) -> Self {
        Self::from_parts(ambient, vec![0], Vec::new())
    }

    /// The subgroup generated by the given ambient element indices.
    pub fn generated_by(ambient: &Arc<PermGroup>, gens: &[u32]) -> Self {
        let mut gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let elements = closure(ambient, &gens);
        Self::from_parts(ambient, elements, gens)
    }

    /// Wraps a set of element indices already known to be a subgroup.
    /// A generating set is chosen greedily in element order.
    pub fn from_elements(ambient: &Arc<PermGroup>, mut elements: Vec<u32>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let gens = greedy_generators(ambient, &elements, |_| true);
        Self::from_parts(ambient, elements, gens)
    }

    /// Wraps a subgroup whose elements and generators are both known.
    pub fn from_elements_and_generators(
        ambient: &Arc<PermGroup>,
        mut elements: Vec<u32>,
        generators: Vec<u32>,
    ) -> Self {
        elements.sort_unstable();
        Self::from_parts(ambient, elements, generators)
    }

    pub fn ambient(&self) -> &Arc<PermGroup> {
        &self.ambient
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn permutations(&self) -> Vec<Permutation> {
        self.elements.iter().map(|&k| self.ambient.permutation(k)).collect()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &GroupHandle) -> bool {
        self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.generators.iter().all(|&g| other.contains(g))
    }

    /// Same element set and same ambient group.
    pub fn same_ambient(&self, other: &GroupHandle) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient)
    }
}

impl PartialEq for GroupHandle {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for GroupHandle {}

impl Hash for GroupHandle {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state)
    }
}

impl PartialOrd for GroupHandle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on sorted element sets.
impl Ord for GroupHandle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements.cmp(&other.elements)
    }
}

impl fmt::Debug for GroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHandle(order={}, gens={:?})", self.order(), &self.generators[..])
    }
}

/// Sorted elements of the subgroup generated by `gens`.
pub(crate) fn closure(ambient: &PermGroup, gens: &[u32]) -> Vec<u32> {
    let mut seen: FxHashSet<u32> = FxHashSet::default();
    seen.insert(0);
    let mut queue = vec![0u32];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for &g in gens {
            let y = ambient.mul(x, g);
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    queue
}

/// Picks generators among `elements` satisfying `keep`, in order, each one
/// outside the closure of the previous ones. Stops once the closure reaches
/// the full set when every element is eligible.
pub(crate) fn greedy_generators(
    ambient: &PermGroup,
    elements: &[u32],
    keep: impl Fn(u32) -> bool,
) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut current: FxHashSet<u32> = FxHashSet::default();
    current.insert(0);
    for &x in elements {
        if current.len() == elements.len() {
            break;
        }
        if x == 0 || !keep(x) || current.contains(&x) {
            continue;
        }
        gens.push(x);
        current = closure(ambient, &gens).into_iter().collect();
    }
    gens
}
