//! Finite groups given by explicit Cayley tables.
//!
//! Elements are indices `0..n`; index `0` is always the identity. Every
//! [`Group`] is axiom-checked when it is built, after which all derived
//! data (inverses, element orders, conjugacy classes) is computed lazily
//! and cached.

mod classes;
mod construct;
mod iso;
pub(crate) mod subgroup;

pub use classes::ClassData;
pub use construct::{cyclic, direct_product, Quotient};
pub use iso::{automorphisms, fingerprint, isomorphism, Fingerprint};
pub use subgroup::{
    center, centralizer, centralizer_in, commutator_subgroup, derived_series_orders, enumerate_subgroups,
    normal_subgroups, p_subgroups, subgroups_between, sylow_subgroup, ElementaryAbelian, Subgroup,
};
pub(crate) use subgroup::small_generating_set;

use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::error::{Axiom, Error, Result};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Identity of a constructed group, used to reject mixing subgroups or
/// characters of different groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupId(u64);

#[derive(Debug)]
pub struct Group {
    id: GroupId,
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
    name: Option<String>,
    orders: OnceLock<Vec<usize>>,
    classes: OnceLock<ClassData>,
}

impl Clone for Group {
    fn clone(&self) -> Self {
        Group {
            id: self.id,
            order: self.order,
            mult: self.mult.clone(),
            inv: self.inv.clone(),
            labels: self.labels.clone(),
            name: self.name.clone(),
            orders: self.orders.clone(),
            classes: self.classes.clone(),
        }
    }
}

impl Group {
    /// Builds a group from a row-major Cayley table, checking every axiom.
    ///
    /// Index `0` must be the two-sided identity. Rows and columns must be
    /// permutations, and the operation must be associative; the first
    /// violation found is reported together with a witness triple.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup { axiom: Axiom::Range, a: 0, b: 0, c: 0 });
        }
        let mut mult = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup { axiom: Axiom::Range, a, b: row.len(), c: n });
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= n {
                    return Err(Error::NotAGroup { axiom: Axiom::Range, a, b, c });
                }
                mult.push(c as u32);
            }
        }
        Self::from_flat(n, mult)
    }

    pub(crate) fn from_flat(n: usize, mult: Vec<u32>) -> Result<Group> {
        debug_assert_eq!(mult.len(), n * n);
        let at = |a: usize, b: usize| mult[a * n + b] as usize;
        for a in 0..n {
            if at(0, a) != a {
                return Err(Error::NotAGroup { axiom: Axiom::Identity, a: 0, b: a, c: at(0, a) });
            }
            if at(a, 0) != a {
                return Err(Error::NotAGroup { axiom: Axiom::Identity, a, b: 0, c: at(a, 0) });
            }
        }
        // latin square: every row and column is a permutation
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let c = at(a, b);
                if seen[c] == a {
                    return Err(Error::NotAGroup { axiom: Axiom::Latin, a, b, c });
                }
                seen[c] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let c = at(a, b);
                if seen[c] == b {
                    return Err(Error::NotAGroup { axiom: Axiom::Latin, a, b, c });
                }
                seen[c] = b;
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let b = (0..n).find(|&b| at(a, b) == 0).expect("latin rows contain the identity");
            if at(b, a) != 0 {
                return Err(Error::NotAGroup { axiom: Axiom::Inverse, a, b, c: at(b, a) });
            }
            inv[a] = b as u32;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAGroup { axiom: Axiom::Associativity, a, b, c });
                    }
                }
            }
        }
        Ok(Group {
            id: GroupId(NEXT_ID.fetch_add(1, Ordering::Relaxed)),
            order: n,
            mult,
            inv,
            labels: None,
            name: None,
            orders: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    pub fn trivial() -> Group {
        Group::from_flat(1, vec![0]).expect("trivial group")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = Some(name.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Group {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("group of order {}", self.order))
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.element_order(a) as i64;
        let k = k.rem_euclid(o);
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a b a^-1 b^-1`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_orders(&self) -> &[usize] {
        self.orders.get_or_init(|| {
            (0..self.order)
                .map(|a| {
                    let mut k = 1;
                    let mut x = a;
                    while x != 0 {
                        x = self.mul(x, a);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders()[a]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.element_orders().iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn classes(&self) -> &ClassData {
        self.classes.get_or_init(|| ClassData::compute(self))
    }

    /// Writes the Cayley-table text format: `n`, then `n` rows of indices,
    /// then one `# label i name` line per labelled element.
    pub fn to_cayley_text(&self) -> String {
        let n = self.order;
        let mut s = format!("{n}\n");
        for a in 0..n {
            let row: Vec<String> = (0..n).map(|b| self.mul(a, b).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        if let Some(labels) = &self.labels {
            for (i, l) in labels.iter().enumerate() {
                let _ = writeln!(s, "# label {i} {l}");
            }
        }
        s
    }

    /// Strict parser for [`Group::to_cayley_text`] output.
    pub fn from_cayley_text(text: &str) -> Result<Group> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad order line: {e}")))?;
        let mut table = Vec::with_capacity(n);
        let mut labels: Vec<Option<String>> = vec![None; n];
        let mut any_label = false;
        for line in lines {
            if let Some(rest) = line.strip_prefix('#') {
                let mut parts = rest.trim().splitn(3, ' ');
                if parts.next() != Some("label") {
                    return Err(Error::Parse(format!("unknown directive: {line}")));
                }
                let i: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .filter(|&i| i < n)
                    .ok_or_else(|| Error::Parse(format!("bad label index: {line}")))?;
                let name = parts.next().unwrap_or("").to_string();
                labels[i] = Some(name);
                any_label = true;
                continue;
            }
            if table.len() == n {
                return Err(Error::Parse(format!("more than {n} table rows")));
            }
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}"))))
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::Parse(format!("row {} has {} entries, expected {n}", table.len(), row.len())));
            }
            table.push(row);
        }
        if table.len() != n {
            return Err(Error::Parse(format!("expected {n} rows, found {}", table.len())));
        }
        let g = Group::from_table(table)?;
        if any_label {
            let labels = labels
                .into_iter()
                .enumerate()
                .map(|(i, l)| l.unwrap_or_else(|| i.to_string()))
                .collect();
            Ok(g.with_labels(labels))
        } else {
            Ok(g)
        }
    }

    /// Same multiplication table (identical, not merely isomorphic).
    pub fn same_table(&self, other: &Group) -> bool {
        self.mult == other.mult
    }
}
