use std::collections::BTreeMap;

use serde::Serialize;

use super::subgroup::{center, derived_series_orders, small_generating_set};
use super::{Group, Subgroup};
use crate::config::Config;
use crate::error::Result;

/// Isomorphism invariants compared before any search.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// (element order, count)
    pub element_orders: Vec<(usize, usize)>,
    pub class_sizes: Vec<usize>,
    pub center_order: usize,
    pub derived_series: Vec<usize>,
    /// (element order, class size, count)
    pub order_class_profile: Vec<(usize, usize, usize)>,
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    let mut profile: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let cd = g.classes();
    for x in g.elements() {
        *hist.entry(g.element_order(x)).or_default() += 1;
        *profile.entry(element_invariant(g, x)).or_default() += 1;
    }
    let mut class_sizes = cd.sizes();
    class_sizes.sort_unstable();
    Fingerprint {
        order: g.order(),
        element_orders: hist.into_iter().collect(),
        class_sizes,
        center_order: center(g).order(),
        derived_series: derived_series_orders(g),
        order_class_profile: profile.into_iter().map(|((o, c), k)| (o, c, k)).collect(),
    }
}

fn element_invariant(g: &Group, x: usize) -> (usize, usize) {
    let cd = g.classes();
    (g.element_order(x), cd.size(cd.class_of(x)))
}

/// Backtracking search for isomorphisms `g1 -> g2` over images of a greedy
/// generating set of `g1`. `visit` receives each verified isomorphism and
/// returns whether to keep searching.
fn search(g1: &Group, g2: &Group, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let n = g1.order();
    let gens = small_generating_set(g1, &Subgroup::whole(g1));
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let want = element_invariant(g1, s);
            g2.elements().filter(|&y| element_invariant(g2, y) == want).collect()
        })
        .collect();
    let mut state = State { map: vec![usize::MAX; n], used: vec![false; n], mapped: vec![0] };
    state.map[0] = 0;
    state.used[0] = true;
    let mut images = Vec::with_capacity(gens.len());
    rec(g1, g2, &gens, &candidates, &mut images, &mut state, visit);
}

struct State {
    map: Vec<usize>,
    used: Vec<bool>,
    mapped: Vec<usize>,
}

fn rec(
    g1: &Group,
    g2: &Group,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    st: &mut State,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let i = images.len();
    if i == gens.len() {
        debug_assert_eq!(st.mapped.len(), g1.order());
        let ok = (0..g1.order()).all(|a| (0..g1.order()).all(|b| st.map[g1.mul(a, b)] == g2.mul(st.map[a], st.map[b])));
        assert!(ok, "extension produced a non-homomorphism");
        return visit(&st.map);
    }
    for &y in &candidates[i] {
        if st.used[y] {
            continue;
        }
        images.push(y);
        let mark = st.mapped.len();
        if extend(g1, g2, gens, images, st) && !rec(g1, g2, gens, candidates, images, st, visit) {
            return false;
        }
        for &x in &st.mapped[mark..] {
            st.used[st.map[x]] = false;
            st.map[x] = usize::MAX;
        }
        st.mapped.truncate(mark);
        images.pop();
    }
    true
}

/// Extends the partial map over the span of the assigned generators.
/// Returns false on a conflict or a non-injective assignment.
fn extend(g1: &Group, g2: &Group, gens: &[usize], images: &[usize], st: &mut State) -> bool {
    let k = images.len();
    let mut idx = 0;
    while idx < st.mapped.len() {
        let a = st.mapped[idx];
        for j in 0..k {
            let b = g1.mul(a, gens[j]);
            let target = g2.mul(st.map[a], images[j]);
            if st.map[b] != usize::MAX {
                if st.map[b] != target {
                    return false;
                }
            } else {
                if st.used[target] {
                    return false;
                }
                st.map[b] = target;
                st.used[target] = true;
                st.mapped.push(b);
            }
        }
        idx += 1;
    }
    true
}

/// An isomorphism `g1 -> g2` (as an element map) if one exists.
pub fn isomorphism(g1: &Group, g2: &Group, cfg: &Config) -> Result<Option<Vec<usize>>> {
    cfg.check_order(g1.order())?;
    cfg.check_order(g2.order())?;
    if fingerprint(g1) != fingerprint(g2) {
        return Ok(None);
    }
    let mut found = None;
    search(g1, g2, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    Ok(found)
}

/// Every automorphism of `g`, as element maps, starting with the identity.
pub fn automorphisms(g: &Group, cfg: &Config) -> Result<Vec<Vec<usize>>> {
    cfg.check_order(g.order())?;
    let mut out = Vec::new();
    search(g, g, &mut |m| {
        out.push(m.to_vec());
        true
    });
    out.sort();
    Ok(out)
}

impl Group {
    pub fn is_isomorphic(&self, other: &Group, cfg: &Config) -> Result<bool> {
        Ok(isomorphism(self, other, cfg)?.is_some())
    }
}
