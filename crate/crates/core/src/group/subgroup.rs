use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use super::{Group, GroupId};
use crate::bitset::ElementSet;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::modp;

/// A subgroup of a specific parent [`Group`], stored as its sorted members.
///
/// Subgroups order canonically by size and then lexicographically by member
/// list, which is the order every enumeration returns.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: GroupId,
    set: ElementSet,
    members: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.members.len(), &self.members).cmp(&(other.members.len(), &other.members))
    }
}

/// Outcome of [`Subgroup::elementary_abelian`]: `|H| = p^k`. The trivial
/// subgroup is reported with `p = None, k = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementaryAbelian {
    pub p: Option<u64>,
    pub k: u32,
}

impl Subgroup {
    fn from_set(g: &Group, set: ElementSet) -> Subgroup {
        let members: Vec<usize> = set.iter().collect();
        debug_assert_eq!(g.order() % members.len(), 0, "Lagrange");
        Subgroup { parent: g.id(), set, members }
    }

    /// Validates that `members` is a subgroup of `g`.
    pub fn new(g: &Group, members: impl IntoIterator<Item = usize>) -> Result<Subgroup> {
        let set = ElementSet::from_iter(g.order(), members.into_iter().filter(|&x| x < g.order()));
        let s = Subgroup::from_set(g, set);
        if !s.contains(0) {
            return Err(Error::PreconditionViolated("subset does not contain the identity".into()));
        }
        for &a in &s.members {
            if !s.contains(g.inv(a)) {
                return Err(Error::PreconditionViolated(format!("not closed under inverse at {a}")));
            }
            for &b in &s.members {
                if !s.contains(g.mul(a, b)) {
                    return Err(Error::PreconditionViolated(format!("not closed at ({a}, {b})")));
                }
            }
        }
        assert_eq!(g.order() % s.order(), 0, "Lagrange");
        Ok(s)
    }

    pub fn whole(g: &Group) -> Subgroup {
        Subgroup::from_set(g, ElementSet::from_iter(g.order(), 0..g.order()))
    }

    pub fn trivial(g: &Group) -> Subgroup {
        Subgroup::from_set(g, ElementSet::from_iter(g.order(), [0]))
    }

    /// Smallest subgroup containing `gens`, by breadth-first closure.
    pub fn generated(g: &Group, gens: &[usize]) -> Subgroup {
        Subgroup::from_set(g, closure(g, gens))
    }

    pub fn parent(&self) -> GroupId {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }

    pub(crate) fn check_parent(&self, g: &Group) -> Result<()> {
        if self.parent != g.id() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn intersect(&self, g: &Group, other: &Subgroup) -> Subgroup {
        Subgroup::from_set(g, self.set.intersect(&other.set))
    }

    /// Subgroup generated by both.
    pub fn join(&self, g: &Group, other: &Subgroup) -> Subgroup {
        let mut gens = small_generating_set(g, self);
        gens.extend(small_generating_set(g, other));
        Subgroup::generated(g, &gens)
    }

    pub fn is_normal(&self, g: &Group) -> bool {
        let cd = g.classes();
        self.members.iter().all(|&x| cd.class(cd.class_of(x)).iter().all(|&y| self.contains(y)))
    }

    pub fn is_abelian(&self, g: &Group) -> bool {
        self.members.iter().all(|&a| self.members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        modp::prime_power(self.order() as u64).map_or(self.order() == 1, |(q, _)| q == p)
    }

    pub fn is_cyclic(&self, g: &Group) -> bool {
        self.members.iter().any(|&x| g.element_order(x) == self.order())
    }

    /// `Some` iff the subgroup is abelian and every non-identity element has
    /// the same prime order `p`.
    pub fn elementary_abelian(&self, g: &Group) -> Option<ElementaryAbelian> {
        if self.is_trivial() {
            return Some(ElementaryAbelian { p: None, k: 0 });
        }
        let p = g.element_order(self.members[1]);
        if !modp::is_prime(p as u64) {
            return None;
        }
        if !self.members[1..].iter().all(|&x| g.element_order(x) == p) || !self.is_abelian(g) {
            return None;
        }
        let k = modp::valuation(self.order() as u64, p as u64);
        Some(ElementaryAbelian { p: Some(p as u64), k })
    }

    /// The subgroup as a group in its own right, with members relabelled
    /// `0..|H|` in increasing order. Returns the group and the embedding
    /// (new index -> parent index).
    pub fn to_group(&self, g: &Group) -> (Group, Vec<usize>) {
        let m = self.order();
        let mut pos = vec![usize::MAX; g.order()];
        for (i, &x) in self.members.iter().enumerate() {
            pos[x] = i;
        }
        let mut mult = Vec::with_capacity(m * m);
        for &a in &self.members {
            for &b in &self.members {
                mult.push(pos[g.mul(a, b)] as u32);
            }
        }
        let mut h = Group::from_flat(m, mult).expect("a subgroup is a group");
        if let Some(labels) = g.labels() {
            h = h.with_labels(self.members.iter().map(|&x| labels[x].clone()).collect());
        }
        (h, self.members.clone())
    }
}

/// Closure of `gens` under multiplication.
pub(crate) fn closure(g: &Group, gens: &[usize]) -> ElementSet {
    let mut set = ElementSet::new(g.order());
    set.insert(0);
    let mut list = vec![0usize];
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for &s in gens {
            let b = g.mul(a, s);
            if set.insert(b) {
                list.push(b);
            }
        }
        i += 1;
    }
    set
}

/// Greedy generating set: repeatedly adjoin the smallest member not yet in
/// the span.
pub(crate) fn small_generating_set(g: &Group, h: &Subgroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = closure(g, &gens);
    while span.len() < h.order() {
        let x = *h.members().iter().find(|&&x| !span.contains(x)).expect("span is proper");
        gens.push(x);
        span = closure(g, &gens);
    }
    gens
}

pub fn centralizer(g: &Group, x: usize) -> Subgroup {
    let set = ElementSet::from_iter(g.order(), (0..g.order()).filter(|&h| g.mul(h, x) == g.mul(x, h)));
    let c = Subgroup::from_set(g, set);
    assert_eq!(g.classes().size(g.classes().class_of(x)) * c.order(), g.order(), "orbit-stabilizer");
    c
}

/// Elements of `within` commuting with every member of `h`.
pub fn centralizer_in(g: &Group, h: &Subgroup, within: &Subgroup) -> Subgroup {
    let set = ElementSet::from_iter(
        g.order(),
        within.members().iter().copied().filter(|&y| h.members().iter().all(|&x| g.mul(x, y) == g.mul(y, x))),
    );
    Subgroup::from_set(g, set)
}

pub fn center(g: &Group) -> Subgroup {
    let w = Subgroup::whole(g);
    centralizer_in(g, &w, &w)
}

/// Subgroup generated by all commutators `[a, b]` with `a, b` in `h`.
pub fn commutator_subgroup(g: &Group, h: &Subgroup) -> Subgroup {
    let mut comms = ElementSet::new(g.order());
    for &a in h.members() {
        for &b in h.members() {
            comms.insert(g.commutator(a, b));
        }
    }
    let gens: Vec<usize> = comms.iter().filter(|&x| x != 0).collect();
    Subgroup::generated(g, &gens)
}

/// Orders of the derived series `G, G', G'', ...` until it stabilises.
pub fn derived_series_orders(g: &Group) -> Vec<usize> {
    let mut h = Subgroup::whole(g);
    let mut out = vec![h.order()];
    loop {
        let d = commutator_subgroup(g, &h);
        if d.order() == h.order() {
            return out;
        }
        out.push(d.order());
        h = d;
    }
}

/// All normal subgroups, built as joins of normal closures of conjugacy
/// classes; returned in canonical order.
pub fn normal_subgroups(g: &Group) -> Vec<Subgroup> {
    let cd = g.classes();
    let mut closures: Vec<Subgroup> = Vec::new();
    for c in 1..cd.len() {
        let ncl = Subgroup::generated(g, cd.class(c));
        if !closures.contains(&ncl) {
            closures.push(ncl);
        }
    }
    let mut seen: HashSet<Subgroup> = HashSet::new();
    let trivial = Subgroup::trivial(g);
    seen.insert(trivial.clone());
    let mut queue = VecDeque::from([trivial]);
    while let Some(h) = queue.pop_front() {
        for m in &closures {
            if m.is_subgroup_of(&h) {
                continue;
            }
            // product of normal subgroups is the set of products
            let mut set = ElementSet::new(g.order());
            for &a in h.members() {
                for &b in m.members() {
                    set.insert(g.mul(a, b));
                }
            }
            let k = Subgroup::from_set(g, set);
            if seen.insert(k.clone()) {
                queue.push_back(k);
            }
        }
    }
    let mut out: Vec<Subgroup> = seen.into_iter().collect();
    out.sort();
    out
}

struct Found {
    sub: Subgroup,
    gens: Vec<usize>,
}

/// Join-closure search: every subgroup containing `base`, generated by
/// `base` and elements of `within`, whose every step satisfies `keep`.
fn search<F: Fn(&ElementSet, usize) -> bool>(g: &Group, base: &Subgroup, within: &Subgroup, keep: F) -> Vec<Subgroup> {
    // cyclic subgroups of `within`, one generator each
    let mut cyclic_gens: Vec<usize> = Vec::new();
    let mut cyclic_seen: HashSet<ElementSet> = HashSet::new();
    for &x in within.members() {
        if cyclic_seen.insert(closure(g, &[x])) {
            cyclic_gens.push(x);
        }
    }
    let base_gens = small_generating_set(g, base);
    let mut seen: HashSet<ElementSet> = HashSet::new();
    seen.insert(base.set.clone());
    let mut found = vec![Found { sub: base.clone(), gens: base_gens }];
    let mut i = 0;
    while i < found.len() {
        for &z in &cyclic_gens {
            if found[i].sub.contains(z) {
                continue;
            }
            let mut gens = found[i].gens.clone();
            gens.push(z);
            let set = closure(g, &gens);
            let size = set.len();
            if seen.contains(&set) || !keep(&set, size) {
                continue;
            }
            seen.insert(set.clone());
            found.push(Found { sub: Subgroup::from_set(g, set), gens });
        }
        i += 1;
    }
    let mut out: Vec<Subgroup> = found.into_iter().map(|f| f.sub).collect();
    out.sort();
    out
}

/// All subgroups of `g` in canonical order.
pub fn enumerate_subgroups(g: &Group, cfg: &Config) -> Result<Vec<Subgroup>> {
    cfg.check_order(g.order())?;
    let w = Subgroup::whole(g);
    Ok(search(g, &Subgroup::trivial(g), &w, |_, _| true))
}

/// All subgroups `K` with `base <= K <= within`, in canonical order.
pub fn subgroups_between(g: &Group, base: &Subgroup, within: &Subgroup, cfg: &Config) -> Result<Vec<Subgroup>> {
    cfg.check_order(g.order())?;
    if !base.is_subgroup_of(within) {
        return Ok(Vec::new());
    }
    Ok(search(g, base, within, |_, _| true))
}

/// All `p`-subgroups of `within` (including the trivial one).
pub fn p_subgroups(g: &Group, within: &Subgroup, p: u64, cfg: &Config) -> Result<Vec<Subgroup>> {
    cfg.check_order(g.order())?;
    let is_p_power = |n: usize| n == 1 || modp::prime_power(n as u64).is_some_and(|(q, _)| q == p);
    Ok(search(g, &Subgroup::trivial(g), within, |_, size| is_p_power(size)))
}

/// The first Sylow `p`-subgroup in canonical subgroup order.
pub fn sylow_subgroup(g: &Group, p: u64, cfg: &Config) -> Result<Subgroup> {
    let target = p.pow(modp::valuation(g.order() as u64, p)) as usize;
    let w = Subgroup::whole(g);
    let subs = p_subgroups(g, &w, p, cfg)?;
    Ok(subs.into_iter().find(|s| s.order() == target).expect("Sylow's theorem"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::group::{cyclic, direct_product};

    #[test]
    fn generated_subgroups() {
        let g = families::frobenius_group(5).unwrap();
        assert!(Subgroup::generated(&g, &[]).is_trivial());
        let five = (0..g.order()).find(|&x| g.element_order(x) == 5).unwrap();
        assert_eq!(Subgroup::generated(&g, &[five]).order(), 5);
        let d8 = families::dihedral(4);
        let invs: Vec<usize> = (1..8).filter(|&x| d8.element_order(x) == 2).collect();
        // two non-commuting reflections generate the whole group
        let (a, b) = invs
            .iter()
            .flat_map(|&a| invs.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| d8.mul(a, b) != d8.mul(b, a))
            .unwrap();
        assert_eq!(Subgroup::generated(&d8, &[a, b]).order(), 8);
    }

    #[test]
    fn centralizers() {
        let q8 = families::quaternion8();
        assert_eq!(centralizer(&q8, 0).order(), 8);
        let z = center(&q8);
        assert_eq!(z.order(), 2);
        assert_eq!(centralizer(&q8, z.members()[1]).order(), 8);
        let g = families::symplectic_family(3, 1, 1).unwrap();
        let x = (1..g.order()).find(|&x| g.element_order(x) == 3 && g.classes().size(g.classes().class_of(x)) == 2).unwrap();
        assert_eq!(centralizer(&g, x).order(), 27);
    }

    #[test]
    fn commutator_subgroups() {
        let z4 = cyclic(4);
        assert!(commutator_subgroup(&z4, &Subgroup::whole(&z4)).is_trivial());
        let s3 = families::symmetric3();
        let d = commutator_subgroup(&s3, &Subgroup::whole(&s3));
        assert_eq!(d.order(), 3);
        assert_eq!(derived_series_orders(&s3), vec![6, 3, 1]);
    }

    #[test]
    fn subgroup_counts() {
        let cfg = Config::default();
        assert_eq!(enumerate_subgroups(&cyclic(3), &cfg).unwrap().len(), 2);
        assert_eq!(enumerate_subgroups(&families::quaternion8(), &cfg).unwrap().len(), 6);
        assert_eq!(enumerate_subgroups(&families::dihedral(4), &cfg).unwrap().len(), 10);
        let tight = Config { order_bound: 4, ..cfg };
        assert!(matches!(
            enumerate_subgroups(&cyclic(8), &tight),
            Err(Error::OrderBoundExceeded { order: 8, bound: 4 })
        ));
    }

    #[test]
    fn canonical_order_is_size_then_members() {
        let subs = enumerate_subgroups(&direct_product(&cyclic(2), &cyclic(2)), &Config::default()).unwrap();
        let sizes: Vec<usize> = subs.iter().map(Subgroup::order).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 4]);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn normal_subgroup_lists() {
        let z3 = cyclic(3);
        assert_eq!(normal_subgroups(&z3).len(), 2);
        let s3 = families::symmetric3();
        assert_eq!(normal_subgroups(&s3).iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 3, 6]);
    }

    #[test]
    fn sylow_subgroups() {
        let cfg = Config::default();
        let d8 = families::dihedral(4);
        assert_eq!(sylow_subgroup(&d8, 2, &cfg).unwrap().order(), 8);
        let g = families::frobenius_group(5).unwrap();
        let s5 = sylow_subgroup(&g, 5, &cfg).unwrap();
        assert_eq!(s5.order(), 5);
        assert!(s5.is_normal(&g));
        let g54 = families::symplectic_family(3, 1, 1).unwrap();
        assert_eq!(sylow_subgroup(&g54, 3, &cfg).unwrap().order(), 27);
        assert!(sylow_subgroup(&g54, 5, &cfg).unwrap().is_trivial());
    }

    #[test]
    fn elementary_abelian_detection() {
        let t = Group::trivial();
        assert_eq!(Subgroup::whole(&t).elementary_abelian(&t), Some(ElementaryAbelian { p: None, k: 0 }));
        let z4 = cyclic(4);
        assert_eq!(Subgroup::whole(&z4).elementary_abelian(&z4), None);
        let g = families::heisenberg27();
        let z = center(&g);
        let x = (0..27).find(|&x| !z.contains(x)).unwrap();
        let h = Subgroup::generated(&g, &[z.members()[1], x]);
        assert_eq!(h.elementary_abelian(&g), Some(ElementaryAbelian { p: Some(3), k: 2 }));
    }

    #[test]
    fn to_group_embeds_consistently() {
        let g = families::frobenius_group(5).unwrap();
        let cfg = Config::default();
        let n = sylow_subgroup(&g, 5, &cfg).unwrap();
        let (h, emb) = n.to_group(&g);
        assert_eq!(h.order(), 5);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(emb[h.mul(a, b)], g.mul(emb[a], emb[b]));
            }
        }
    }
}
