use super::SubgroupFunction;
use crate::config::Config;
use crate::cyclotomic::Cyclotomic;
use crate::error::Result;
use crate::group::{commutator_subgroup, Group, GroupId, Subgroup};

/// A degree-one character of a subgroup `H`: `φ(h) = ζ_o^exps[i]` for the
/// `i`-th member `h` of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCharacter {
    parent: GroupId,
    members: Vec<usize>,
    order: u32,
    exps: Vec<u32>,
}

impl LinearCharacter {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// `o` such that every value is an `o`-th root of unity.
    pub fn root_order(&self) -> u32 {
        self.order
    }

    /// Exponent of `ζ_o` at the `i`-th member.
    pub fn exponent_at(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Whether `φ` is trivial on every member of `k` that lies in `H`.
    pub fn is_trivial_on(&self, k: &Subgroup) -> bool {
        self.members.iter().zip(&self.exps).all(|(&x, &e)| e == 0 || !k.contains(x))
    }

    /// Whether the exponents define a homomorphism `H -> Z/o`.
    pub fn is_homomorphism(&self, g: &Group) -> bool {
        let pos = |x: usize| self.members.binary_search(&x).unwrap();
        let o = self.order;
        self.members.iter().enumerate().all(|(i, &a)| {
            self.members.iter().enumerate().all(|(j, &b)| self.exps[pos(g.mul(a, b))] == (self.exps[i] + self.exps[j]) % o)
        })
    }

    /// The values as a function on `H` over conductor `m` (a multiple of
    /// [`root_order`](Self::root_order)).
    pub fn to_function(&self, g: &Group, m: u32) -> SubgroupFunction {
        assert_eq!(m % self.order, 0, "conductor must be a multiple of the root order");
        let step = (m / self.order) as i64;
        let values = self.exps.iter().map(|&e| Cyclotomic::root(m, e as i64 * step)).collect();
        SubgroupFunction { parent: g.id(), members: self.members.clone(), values }
    }
}

/// A basis of a finite abelian group: elements whose orders multiply to
/// the group order and whose powers give every element exactly once.
///
/// The first basis element is the smallest-index element of maximal order;
/// the rest lift a basis of the quotient by the cyclic subgroup it
/// generates.
fn abelian_basis(q: &Group) -> Vec<usize> {
    if q.order() == 1 {
        return Vec::new();
    }
    let max = *q.element_orders().iter().max().unwrap();
    let g1 = q.elements().find(|&x| q.element_order(x) == max).unwrap();
    let c = Subgroup::generated(q, &[g1]);
    let quot = q.quotient(&c).expect("abelian groups have normal subgroups");
    let mut basis = vec![g1];
    for b in abelian_basis(&quot.group) {
        let o = quot.group.element_order(b) as i64;
        let x = quot.cosets[b][0];
        let y = q.pow(x, o);
        let t = (0..max as i64).find(|&t| q.pow(g1, t) == y).expect("x^o lies in <g1>");
        // maximality of ord(g1) forces o | t
        assert_eq!(t % o, 0, "lift exponent");
        basis.push(q.mul(x, q.pow(g1, -(t / o))));
    }
    basis
}

/// All degree-one characters of `h`, one for each element of the dual of
/// `H/[H,H]`, listed lexicographically by their exponents on a cyclic
/// basis of the abelianization (so the trivial character is first).
pub fn degree_one_characters(g: &Group, h: &Subgroup, cfg: &Config) -> Result<Vec<LinearCharacter>> {
    h.check_parent(g)?;
    cfg.check_order(h.order())?;
    let (hg, _) = h.to_group(g);
    let derived = commutator_subgroup(&hg, &Subgroup::whole(&hg));
    let ab = hg.quotient(&derived)?;
    let q = &ab.group;
    let basis = abelian_basis(q);
    let orders: Vec<usize> = basis.iter().map(|&b| q.element_order(b)).collect();
    let e = orders.first().copied().unwrap_or(1);
    debug_assert_eq!(orders.iter().product::<usize>(), q.order());

    // coordinates of every element of q on the basis
    let mut coords = vec![Vec::new(); q.order()];
    let mut tuple = vec![0usize; basis.len()];
    loop {
        let x = basis.iter().zip(&tuple).fold(0, |acc, (&b, &a)| q.mul(acc, q.pow(b, a as i64)));
        debug_assert!(coords[x].is_empty() || basis.is_empty());
        coords[x] = tuple.clone();
        if !odometer(&mut tuple, &orders) {
            break;
        }
    }

    let mut out = Vec::with_capacity(q.order());
    let mut js = vec![0usize; basis.len()];
    loop {
        let exps = (0..h.order())
            .map(|i| {
                let a = &coords[ab.projection[i]];
                let s: usize = js.iter().zip(a).zip(&orders).map(|((&j, &ai), &oi)| j * ai * (e / oi)).sum();
                (s % e) as u32
            })
            .collect();
        out.push(LinearCharacter { parent: g.id(), members: h.members().to_vec(), order: e as u32, exps });
        if !odometer(&mut js, &orders) {
            break;
        }
    }
    Ok(out)
}

/// Advances `t` lexicographically (last coordinate fastest) below `bounds`;
/// false once it wraps around.
fn odometer(t: &mut [usize], bounds: &[usize]) -> bool {
    for i in (0..t.len()).rev() {
        t[i] += 1;
        if t[i] < bounds[i] {
            return true;
        }
        t[i] = 0;
    }
    false
}
