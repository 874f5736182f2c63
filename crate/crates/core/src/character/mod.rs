//! Class functions, characters and exact character tables.

mod dixon;
mod linear;

pub use dixon::{dixon_char_table, dixon_prime};
pub use linear::{degree_one_characters, LinearCharacter};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cyclotomic::{Accumulator, Cyclotomic};
use crate::error::{Error, Result};
use crate::group::{Group, GroupId, Subgroup};
use crate::modp;

/// A function on the conjugacy classes of a group, one value per class in
/// canonical class order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassFunction {
    group: GroupId,
    values: Vec<Cyclotomic>,
}

/// Characters are class functions; irreducibility is a property of how
/// they were obtained, not of the type.
pub type Character = ClassFunction;

impl ClassFunction {
    pub fn new(g: &Group, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != g.classes().len() {
            return Err(Error::PreconditionViolated(format!(
                "{} values for {} classes",
                values.len(),
                g.classes().len()
            )));
        }
        Ok(ClassFunction { group: g.id(), values })
    }

    /// Class function from one integer per class.
    pub fn from_integers(g: &Group, values: &[i128]) -> Result<Self> {
        let m = g.exponent() as u32;
        Self::new(g, values.iter().map(|&v| Cyclotomic::from_int(m, v)).collect())
    }

    pub fn trivial(g: &Group) -> Self {
        let m = g.exponent() as u32;
        ClassFunction { group: g.id(), values: vec![Cyclotomic::one(m); g.classes().len()] }
    }

    /// Character of the regular representation: `|G|` at the identity and
    /// `0` elsewhere.
    pub fn regular(g: &Group) -> Self {
        let m = g.exponent() as u32;
        let mut values = vec![Cyclotomic::zero(m); g.classes().len()];
        values[0] = Cyclotomic::from_int(m, g.order() as i128);
        ClassFunction { group: g.id(), values }
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    /// Degree as a positive integer, if it is one.
    pub fn integer_degree(&self) -> Option<u64> {
        self.degree().to_integer().filter(|&d| d > 0).map(|d| d as u64)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(ClassFunction { group: self.group, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product (the character of a tensor product).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, num: i128, den: i128) -> Self {
        ClassFunction { group: self.group, values: self.values.iter().map(|v| v.scale(num, den)).collect() }
    }

    /// Values lifted to conductor `m` (a multiple of every current one).
    pub fn lift(&self, m: u32) -> Self {
        ClassFunction { group: self.group, values: self.values.iter().map(|v| v.lift(m)).collect() }
    }

    pub fn conj(&self) -> Self {
        ClassFunction { group: self.group, values: self.values.iter().map(Cyclotomic::conj).collect() }
    }

    /// `{g : χ(g) = χ(1)}`
    pub fn kernel(&self, g: &Group) -> Result<Subgroup> {
        self.check(g)?;
        let cd = g.classes();
        let d = self.degree();
        let members = g.elements().filter(|&x| self.values[cd.class_of(x)] == *d);
        Subgroup::new(g, members)
    }

    pub(crate) fn check(&self, g: &Group) -> Result<()> {
        if self.group != g.id() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }
}

/// `(a, b)_G = |G|^-1 Σ_g a(g) conj(b(g))`, exactly.
pub fn inner_product(g: &Group, a: &ClassFunction, b: &ClassFunction) -> Result<Cyclotomic> {
    a.check(g)?;
    b.check(g)?;
    let cd = g.classes();
    let m = a.values.iter().chain(&b.values).fold(1u32, |m, v| num_integer::lcm(m, v.conductor()));
    let mut acc = Accumulator::new(m);
    for c in 0..cd.len() {
        let term = &a.values[c].lift(m) * &b.values[c].lift(m).conj();
        acc.add_rotated(&term, 0, cd.size(c) as i128);
    }
    Ok(acc.finish().scale(1, g.order() as i128))
}

/// A function on the elements of a subgroup (in parent indices), such as
/// a restriction or a character of the subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupFunction {
    parent: GroupId,
    members: Vec<usize>,
    values: Vec<Cyclotomic>,
}

impl SubgroupFunction {
    pub fn new(g: &Group, h: &Subgroup, values: Vec<Cyclotomic>) -> Result<Self> {
        h.check_parent(g)?;
        if values.len() != h.order() {
            return Err(Error::PreconditionViolated("one value per subgroup element".into()));
        }
        Ok(SubgroupFunction { parent: g.id(), members: h.members().to_vec(), values })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Value at the parent element `x`, if `x` is in the subgroup.
    pub fn at(&self, x: usize) -> Option<&Cyclotomic> {
        self.members.binary_search(&x).ok().map(|i| &self.values[i])
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }
}

/// Restriction of a class function of `g` to the elements of `h`.
pub fn restrict(g: &Group, chi: &ClassFunction, h: &Subgroup) -> Result<SubgroupFunction> {
    chi.check(g)?;
    let cd = g.classes();
    let values = h.members().iter().map(|&x| chi.values[cd.class_of(x)].clone()).collect();
    SubgroupFunction::new(g, h, values)
}

/// `(a, b)_H` for two functions on the same subgroup.
pub fn subgroup_inner_product(a: &SubgroupFunction, b: &SubgroupFunction) -> Result<Cyclotomic> {
    if a.parent != b.parent || a.members != b.members {
        return Err(Error::GroupMismatch);
    }
    let m = a.values.iter().chain(&b.values).fold(1u32, |m, v| num_integer::lcm(m, v.conductor()));
    let mut acc = Accumulator::new(m);
    for (x, y) in a.values.iter().zip(&b.values) {
        acc.add_rotated(&(&x.lift(m) * &y.lift(m).conj()), 0, 1);
    }
    Ok(acc.finish().scale(1, a.order() as i128))
}

/// `Ind_H^G φ (g) = |H|^-1 Σ_{x in G} φ°(x g x^-1)`, with `φ°` zero off `H`.
pub fn induce_character(g: &Group, h: &Subgroup, phi: &SubgroupFunction) -> Result<ClassFunction> {
    h.check_parent(g)?;
    if phi.parent != g.id() || phi.members != h.members() {
        return Err(Error::GroupMismatch);
    }
    let m = phi.values.iter().fold(g.exponent() as u32, |m, v| num_integer::lcm(m, v.conductor()));
    let cd = g.classes();
    let values = (0..cd.len())
        .map(|c| {
            // each conjugate y of the representative is hit |C_G(rep)| times
            let mut acc = Accumulator::new(m);
            for &y in cd.class(c) {
                if let Some(v) = phi.at(y) {
                    acc.add_rotated(&v.lift(m), 0, 1);
                }
            }
            let centralizer = (g.order() / cd.size(c)) as i128;
            acc.finish().scale(centralizer, h.order() as i128)
        })
        .collect();
    ClassFunction::new(g, values)
}

/// Irreducible characters of a group together with its class data.
///
/// Characters are ordered by degree; within a degree the trivial character
/// comes first and the rest follow in descending order of their value
/// vectors.
#[derive(Debug, Clone)]
pub struct CharTable {
    group: GroupId,
    group_name: String,
    order: usize,
    class_sizes: Vec<usize>,
    representative_orders: Vec<usize>,
    power_maps: BTreeMap<u64, Vec<usize>>,
    conductor: u32,
    prime: u64,
    characters: Vec<Character>,
}

impl CharTable {
    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn character(&self, i: usize) -> &Character {
        &self.characters[i]
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.integer_degree().expect("irreducible degrees are positive integers")).collect()
    }

    /// Degrees with multiplicity, sorted.
    pub fn degree_multiset(&self) -> Vec<u64> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// The prime used by the modular eigenspace computation.
    pub fn dixon_prime(&self) -> u64 {
        self.prime
    }

    /// Indices of the irreducibles of degree `d`.
    pub fn of_degree(&self, d: u64) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.characters[i].integer_degree() == Some(d)).collect()
    }

    /// Coefficients `(f, χ_i)` of `f` against every irreducible.
    pub fn decompose(&self, g: &Group, f: &ClassFunction) -> Result<Vec<Cyclotomic>> {
        self.characters.iter().map(|chi| inner_product(g, f, chi)).collect()
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            group: self.group_name.clone(),
            order: self.order,
            exponent: self.conductor,
            dixon_prime: self.prime,
            class_sizes: self.class_sizes.clone(),
            representative_orders: self.representative_orders.clone(),
            power_maps: self.power_maps.iter().map(|(p, v)| (p.to_string(), v.clone())).collect(),
            characters: self
                .characters
                .iter()
                .map(|c| c.values.iter().map(Cyclotomic::coefficient_strings).collect())
                .collect(),
        }
    }

    /// Plain-text rendering, one row per character.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> =
            self.characters.iter().map(|c| c.values.iter().map(|v| v.to_string()).collect()).collect();
        let cols = self.class_sizes.len();
        let mut width = vec![0usize; cols];
        for (j, w) in width.iter_mut().enumerate() {
            *w = cells.iter().map(|r| r[j].len()).max().unwrap_or(0).max(self.class_sizes[j].to_string().len()).max(2);
        }
        let mut s = format!("{} (order {}, conductor {}, prime {})\n", self.group_name, self.order, self.conductor, self.prime);
        let row = |label: &str, items: &[String]| {
            let body: Vec<String> = items.iter().zip(&width).map(|(x, &w)| format!("{x:>w$}")).collect();
            format!("{label:<6}{}\n", body.join("  "))
        };
        let sizes: Vec<String> = self.class_sizes.iter().map(|x| x.to_string()).collect();
        let orders: Vec<String> = self.representative_orders.iter().map(|x| x.to_string()).collect();
        s.push_str(&row("size", &sizes));
        s.push_str(&row("order", &orders));
        for (i, r) in cells.iter().enumerate() {
            s.push_str(&row(&format!("X.{}", i + 1), r));
        }
        s
    }
}

/// Serialized form of a [`CharTable`]; each character is a list of values,
/// each value the power-basis coefficients over `Q(ζ_exponent)` as
/// rational strings.
#[derive(Debug, Clone, Serialize)]
pub struct TableJson {
    pub group: String,
    pub order: usize,
    pub exponent: u32,
    pub dixon_prime: u64,
    pub class_sizes: Vec<usize>,
    pub representative_orders: Vec<usize>,
    pub power_maps: BTreeMap<String, Vec<usize>>,
    pub characters: Vec<Vec<Vec<String>>>,
}

/// `⋂_{ψ ≠ χ} ker ψ` over the other irreducibles of the table: the largest
/// subgroup acting trivially on every simple module except possibly the
/// one of `χ = table.character(index)`.
pub fn gagola_kernel(g: &Group, table: &CharTable, index: usize) -> Result<Subgroup> {
    if table.group != g.id() {
        return Err(Error::GroupMismatch);
    }
    let cd = g.classes();
    let members = g.elements().filter(|&x| {
        let c = cd.class_of(x);
        table.characters.iter().enumerate().all(|(i, psi)| i == index || psi.values[c] == *psi.degree())
    });
    Subgroup::new(g, members)
}

pub(crate) fn power_maps_by_prime(g: &Group) -> BTreeMap<u64, Vec<usize>> {
    let cd = g.classes();
    modp::prime_factors(g.order() as u64)
        .into_iter()
        .map(|p| (p, (0..cd.len()).map(|c| cd.power_map(c, p as i64)).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Config;
    use crate::families;
    use crate::group::{cyclic, normal_subgroups};

    fn table(g: &Group) -> CharTable {
        dixon_char_table(g, &Config::default()).unwrap()
    }

    fn ints(c: &Character) -> Vec<i128> {
        c.values().iter().map(|v| v.to_integer().expect("integer value")).collect()
    }

    #[test]
    fn trivial_group_table() {
        let t = table(&Group::trivial());
        assert_eq!(t.degrees(), vec![1]);
    }

    #[test]
    fn symmetric3_table() {
        let g = families::symmetric3();
        let t = table(&g);
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        assert_eq!(ints(t.character(0)), vec![1, 1, 1]);
        // classes: identity, 3-cycles (size 2), transpositions (size 3)
        assert_eq!(ints(t.character(1)), vec![1, 1, -1]);
        assert_eq!(ints(t.character(2)), vec![2, -1, 0]);
    }

    #[test]
    fn order_eight_degrees() {
        for g in [families::dihedral(4), families::quaternion8()] {
            assert_eq!(table(&g).degrees(), vec![1, 1, 1, 1, 2]);
        }
    }

    #[test]
    fn frobenius_twelve_values() {
        let g = families::frobenius_group(4).unwrap();
        let t = table(&g);
        assert_eq!(t.degrees(), vec![1, 1, 1, 3]);
        assert_eq!(ints(t.character(3)), vec![3, -1, 0, 0]);
    }

    #[test]
    fn cyclic_table_is_roots_of_unity() {
        let g = cyclic(5);
        let t = table(&g);
        assert_eq!(t.len(), 5);
        let values: std::collections::BTreeSet<Cyclotomic> = t.characters().iter().map(|c| c.value(1).clone()).collect();
        let roots: std::collections::BTreeSet<Cyclotomic> = (0..5).map(|j| Cyclotomic::root(5, j)).collect();
        assert_eq!(values, roots);
    }

    #[test]
    fn regular_character_and_orthogonality() {
        let g = families::frobenius_group(5).unwrap();
        let t = table(&g);
        let rho = ClassFunction::regular(&g);
        let one = ClassFunction::trivial(&g);
        assert_eq!(inner_product(&g, &rho, &one).unwrap(), Cyclotomic::one(1));
        let coeffs = t.decompose(&g, &rho).unwrap();
        for (c, chi) in coeffs.iter().zip(t.characters()) {
            assert_eq!(c, chi.degree());
        }
        // column orthogonality
        let cd = g.classes();
        for a in 0..cd.len() {
            for b in 0..cd.len() {
                let s = t.characters().iter().fold(Cyclotomic::zero(1), |s, chi| &s + &(chi.value(a) * &chi.value(b).conj()));
                let want = if a == b { (g.order() / cd.size(a)) as i128 } else { 0 };
                assert_eq!(s, Cyclotomic::from_int(1, want));
            }
        }
    }

    #[test]
    fn induced_from_translations() {
        // F3 ⋊ F3^x: inducing a nontrivial character of the translations
        let g = families::frobenius_group(3).unwrap();
        let h = Subgroup::new(&g, 0..3).unwrap();
        let phi = SubgroupFunction::new(&g, &h, (0..3).map(|j| Cyclotomic::root(3, j)).collect()).unwrap();
        let ind = induce_character(&g, &h, &phi).unwrap();
        // classes of AGL(1,3): identity, translations, reflections
        assert_eq!(ints(&ind), vec![2, -1, 0]);
        assert_eq!(inner_product(&g, &ind, &ind).unwrap(), Cyclotomic::one(1));
        let perm = induce_character(&g, &h, &restrict(&g, &ClassFunction::trivial(&g), &h).unwrap()).unwrap();
        assert_eq!(perm.degree().to_integer(), Some(2));
    }

    #[test]
    fn frobenius_reciprocity() {
        let g = families::frobenius_group(5).unwrap();
        let t = table(&g);
        let cfg = Config::default();
        for h in crate::group::enumerate_subgroups(&g, &cfg).unwrap() {
            for phi in degree_one_characters(&g, &h, &cfg).unwrap() {
                let phi = phi.to_function(&g, t.conductor());
                let ind = induce_character(&g, &h, &phi).unwrap();
                for chi in t.characters() {
                    let lhs = inner_product(&g, &ind, chi).unwrap();
                    let rhs = subgroup_inner_product(&phi, &restrict(&g, chi, &h).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn kernels() {
        let g = families::frobenius_group(5).unwrap();
        let t = table(&g);
        let big = t.of_degree(4)[0];
        assert_eq!(gagola_kernel(&g, &t, big).unwrap().order(), 5);
        let z4 = cyclic(4);
        let t4 = table(&z4);
        for i in 0..4 {
            assert!(gagola_kernel(&z4, &t4, i).unwrap().is_trivial());
        }
        assert!(normal_subgroups(&g).contains(&t.character(big).kernel(&g).unwrap()));
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let a = cyclic(3);
        let b = cyclic(3);
        let x = ClassFunction::trivial(&a);
        let y = ClassFunction::trivial(&b);
        assert!(matches!(inner_product(&a, &x, &y), Err(Error::GroupMismatch)));
    }

    #[test]
    fn json_shape() {
        let g = families::frobenius_group(5).unwrap();
        let j = serde_json::to_value(table(&g).to_json()).unwrap();
        assert_eq!(j["order"], 20);
        assert_eq!(j["class_sizes"], serde_json::json!([1, 4, 5, 5, 5]));
        assert!(j["power_maps"]["2"].is_array());
        assert_eq!(j["characters"][4][1][0], "-1");
    }
}
