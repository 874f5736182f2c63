use super::{Group, Subgroup};
use crate::error::{Error, Result};

/// Cyclic group `Z/n` with element `i` the residue `i`.
pub fn cyclic(n: usize) -> Group {
    assert!(n >= 1);
    let mult = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
    Group::from_flat(n, mult).expect("cyclic table is a group").with_name(format!("C{n}"))
}

/// `A x B`, element `(a, b)` at index `b * |A| + a`.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    let (na, nb) = (a.order(), b.order());
    let trivial_action = vec![(0..na).collect::<Vec<_>>(); nb];
    let g = semidirect_product(a, b, &trivial_action).expect("trivial action is an action");
    g.with_name(format!("{} x {}", a.display_name(), b.display_name()))
}

impl Group {
    /// Semidirect product `N ⋊ H` with `action[h]` the automorphism of `N`
    /// by which `h` acts.
    ///
    /// The element `(n, h)` has index `h * |N| + n` and the product is
    /// `(n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2)`; `N` is therefore
    /// the block of indices `0..|N|`. The action is verified to be a
    /// homomorphism into `Aut(N)` before the table is built.
    pub fn semidirect_product(n: &Group, h: &Group, action: &[Vec<usize>]) -> Result<Group> {
        semidirect_product(n, h, action)
    }
}

pub(crate) fn semidirect_product(n: &Group, h: &Group, action: &[Vec<usize>]) -> Result<Group> {
    let (nn, nh) = (n.order(), h.order());
    if action.len() != nh {
        return Err(Error::NotAnAction(format!("expected {nh} automorphisms, got {}", action.len())));
    }
    for (hi, phi) in action.iter().enumerate() {
        if phi.len() != nn || phi.iter().any(|&x| x >= nn) {
            return Err(Error::NotAnAction(format!("map for {hi} is not a map on N")));
        }
        let mut hit = vec![false; nn];
        for &x in phi {
            if std::mem::replace(&mut hit[x], true) {
                return Err(Error::NotAnAction(format!("map for {hi} is not injective")));
            }
        }
        for a in 0..nn {
            for b in 0..nn {
                if phi[n.mul(a, b)] != n.mul(phi[a], phi[b]) {
                    return Err(Error::NotAnAction(format!("map for {hi} is not a homomorphism at ({a}, {b})")));
                }
            }
        }
    }
    for h1 in 0..nh {
        for h2 in 0..nh {
            let h12 = h.mul(h1, h2);
            if (0..nn).any(|x| action[h12][x] != action[h1][action[h2][x]]) {
                return Err(Error::NotAnAction(format!("action is not a homomorphism at ({h1}, {h2})")));
            }
        }
    }
    let size = nn * nh;
    let mut mult = Vec::with_capacity(size * size);
    for x in 0..size {
        let (h1, n1) = (x / nn, x % nn);
        for y in 0..size {
            let (h2, n2) = (y / nn, y % nn);
            let nprod = n.mul(n1, action[h1][n2]);
            let hprod = h.mul(h1, h2);
            mult.push((hprod * nn + nprod) as u32);
        }
    }
    Group::from_flat(size, mult)
}

/// A quotient group together with the projection from the parent.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Group,
    /// parent element -> coset index
    pub projection: Vec<usize>,
    /// coset index -> members in the parent, sorted
    pub cosets: Vec<Vec<usize>>,
}

impl Group {
    /// `G / N` on cosets ordered by their minimal element (so `N` itself is
    /// coset `0`).
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        n.check_parent(self)?;
        if !n.is_normal(self) {
            return Err(Error::NotNormal(format!("subgroup of order {} in {}", n.order(), self.display_name())));
        }
        let mut projection = vec![usize::MAX; self.order()];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for g in 0..self.order() {
            if projection[g] != usize::MAX {
                continue;
            }
            let idx = cosets.len();
            let mut coset: Vec<usize> = n.members().iter().map(|&m| self.mul(g, m)).collect();
            coset.sort_unstable();
            for &x in &coset {
                projection[x] = idx;
            }
            cosets.push(coset);
        }
        let q = cosets.len();
        let mult = (0..q)
            .flat_map(|a| {
                let cosets = &cosets;
                let projection = &projection;
                (0..q).map(move |b| projection[self.mul(cosets[a][0], cosets[b][0])] as u32)
            })
            .collect();
        let group = Group::from_flat(q, mult)?.with_name(format!("{} / N{}", self.display_name(), n.order()));
        Ok(Quotient { group, projection, cosets })
    }
}
