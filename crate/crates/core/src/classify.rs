//! Complete classification of groups with an irreducible of degree `d`
//! and `n = d(d + e)` for `e <= 3`, plus the bound arithmetic for larger
//! `e`.

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::Zero;
use serde::Serialize;

use crate::character::{dixon_char_table, gagola_kernel, CharTable};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::families::{self, small_group_catalog};
use crate::gagola::{check_conditions, factorial_quotient};
use crate::group::{center, commutator_subgroup, enumerate_subgroups, normal_subgroups, small_generating_set, Group, Subgroup};
use crate::modp;

/// `(d, n)` pairs allowed by the factorial and `d = e` cases, sorted by `d`.
/// Each pair carries the names of the cases that produce it.
pub fn factorial_case_candidates(e: u64) -> Vec<(u64, u64, Vec<&'static str>)> {
    assert!(e >= 1, "e must be positive");
    let q = factorial_quotient(e);
    let mut out: Vec<(u64, u64, Vec<&'static str>)> = Vec::new();
    // d + e <= (2e - 1)!/e; stop once d + e exceeds the quotient
    let mut d = 1u64;
    while BigUint::from(d + e) <= q {
        if (&q % BigUint::from(d + e)).is_zero() {
            out.push((d, d * (d + e), vec!["factorial"]));
        }
        d += 1;
    }
    match out.iter_mut().find(|c| c.0 == e) {
        Some(c) => c.2.insert(0, "d_equals_e"),
        None => out.push((e, 2 * e * e, vec!["d_equals_e"])),
    }
    out.sort_by_key(|c| c.0);
    out
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Exact values of the bounds on `n` for a given `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub e: u64,
    /// `((2e)!)^2`
    pub factorial_squared: String,
    /// `e^(4e^2)` as `(base, exponent)` together with its decimal length.
    pub power_base: u64,
    pub power_exponent: u64,
    pub power_digits: usize,
    /// `e^6`, the bound in the normal-subgroup case when `e` is not a power
    /// of 2.
    pub e_sixth: Option<String>,
    /// `(2e)! <= (2e)^(2e) <= (e^2)^(e^2)` and `((2e)!)^2 <= e^(4e^2)`.
    pub chain_holds: bool,
}

pub fn bound_check(e: u64) -> BoundReport {
    assert!(e > 1, "bounds are stated for e > 1");
    let f = factorial(2 * e);
    let two_e_pow = BigUint::from(2 * e).pow((2 * e) as u32);
    let e2_pow = BigUint::from(e * e).pow((e * e) as u32);
    let big = BigUint::from(e).pow((4 * e * e) as u32);
    let sq = &f * &f;
    let chain_holds = f <= two_e_pow && two_e_pow <= e2_pow && sq <= big;
    BoundReport {
        e,
        factorial_squared: sq.to_string(),
        power_base: e,
        power_exponent: 4 * e * e,
        power_digits: big.to_string().len(),
        e_sixth: (!e.is_power_of_two()).then(|| BigUint::from(e).pow(6).to_string()),
        chain_holds,
    }
}

/// Result of the Sylow argument on a candidate `(d, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "snake_case")]
pub enum PrunerVerdict {
    RuledOut(String),
    NeedsEnumeration(String),
}

/// For prime `d`: if the Sylow `d`-subgroup is forced to be normal (its
/// count must divide the index and be `1 mod d`) and is abelian (order
/// `d` or `d^2`), then `d` must divide its index; report a contradiction
/// when it does not.
pub fn sylow_pruner(d: u64, n: u64) -> PrunerVerdict {
    if !modp::is_prime(d) || n % d != 0 {
        return PrunerVerdict::NeedsEnumeration(format!("d = {d} is not a prime dividing n = {n}"));
    }
    let v = modp::valuation(n, d);
    let index = n / d.pow(v);
    let counts: Vec<u64> = (1..=index).filter(|t| index % t == 0 && t % d == 1).collect();
    if counts != [1] {
        return PrunerVerdict::NeedsEnumeration(format!(
            "Sylow {d}-subgroup count may be any of {counts:?} (divisors of {index} that are 1 mod {d})"
        ));
    }
    if v > 2 {
        return PrunerVerdict::NeedsEnumeration(format!("normal Sylow {d}-subgroup of order {d}^{v} need not be abelian"));
    }
    if index % d == 0 {
        return PrunerVerdict::NeedsEnumeration(format!("{d} divides the index {index} of the normal Sylow subgroup"));
    }
    PrunerVerdict::RuledOut(format!(
        "the Sylow {d}-subgroup is normal (only 1 of the divisors of {index} is 1 mod {d}) and abelian, \
         so d = {d} would divide its index {index}"
    ))
}

/// A group realizing a candidate, with enough structure to identify it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizedGroup {
    /// 1-based position in the catalog of its order, if it came from one.
    pub catalog_index: Option<usize>,
    pub name: String,
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    pub center_order: usize,
    pub derived_order: usize,
    /// Orders of a greedy generating set.
    pub generator_orders: Vec<usize>,
    /// Orders of the pairwise commutators of those generators.
    pub commutator_orders: Vec<usize>,
    /// (element order, count)
    pub element_orders: Vec<(usize, usize)>,
    pub degrees: Vec<u64>,
    /// Values of the realizing character on the classes, as strings.
    pub character: Vec<String>,
    /// Outcome of the structural conditions on the kernel subgroup, when
    /// that subgroup is nontrivial.
    pub normal_subgroup_conditions: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Realized { groups: Vec<RealizedGroup> },
    RuledOut { argument: String, confirmed_by_enumeration: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateReport {
    pub d: u64,
    pub n: u64,
    pub cases: Vec<&'static str>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub e: u64,
    /// Divisors of `(2e - 1)!/e` (empty for `e = 0`).
    pub factorial_divisors: Vec<u64>,
    pub candidates: Vec<CandidateReport>,
    pub bounds: Option<BoundReport>,
    /// Whether some realized `n` attains `((2e)!)^2`.
    pub bound_attained: bool,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn realized(&self) -> impl Iterator<Item = &RealizedGroup> {
        self.candidates.iter().flat_map(|c| match &c.verdict {
            Verdict::Realized { groups } => groups.as_slice(),
            Verdict::RuledOut { .. } => &[],
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("e = {}\n", self.e);
        if !self.factorial_divisors.is_empty() {
            s += &format!("divisors of (2e-1)!/e: {:?}\n", self.factorial_divisors);
        }
        s += &format!("{:>5} {:>6}  {:<28} verdict\n", "d", "n", "cases");
        for c in &self.candidates {
            let verdict = match &c.verdict {
                Verdict::Realized { groups } => {
                    let names: Vec<String> = groups
                        .iter()
                        .map(|g| match g.catalog_index {
                            Some(i) => format!("{} [#{i}]", g.name),
                            None => g.name.clone(),
                        })
                        .collect();
                    format!("realized by {}", names.join(", "))
                }
                Verdict::RuledOut { argument, confirmed_by_enumeration } => {
                    let conf = if *confirmed_by_enumeration { "; confirmed by enumeration" } else { "" };
                    format!("ruled out: {argument}{conf}")
                }
            };
            s += &format!("{:>5} {:>6}  {:<28} {}\n", c.d, c.n, c.cases.join(","), verdict);
        }
        for g in self.realized() {
            s += &format!(
                "  {}: order {}, exponent {}, |Z| = {}, |G'| = {}, generators of orders {:?}, commutators of orders {:?}\n",
                g.name, g.order, g.exponent, g.center_order, g.derived_order, g.generator_orders, g.commutator_orders
            );
        }
        if let Some(b) = &self.bounds {
            s += &format!(
                "bounds: ((2e)!)^2 = {}, e^(4e^2) = {}^{} ({} digits)",
                b.factorial_squared, b.power_base, b.power_exponent, b.power_digits
            );
            if let Some(e6) = &b.e_sixth {
                s += &format!(", e^6 = {e6}");
            }
            s += &format!("; chain holds: {}\n", b.chain_holds);
            s += &format!("bound attained by a realized group: {}\n", self.bound_attained);
        }
        for note in &self.notes {
            s += &format!("note: {note}\n");
        }
        s
    }
}

fn describe(g: &Group, catalog_index: Option<usize>, table: &CharTable, chi: usize, cfg: &Config) -> Result<RealizedGroup> {
    let w = Subgroup::whole(g);
    let gens = small_generating_set(g, &w);
    let mut commutator_orders = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            commutator_orders.push(g.element_order(g.commutator(a, b)));
        }
    }
    let fp = crate::group::fingerprint(g);
    let kernel = gagola_kernel(g, table, chi)?;
    let normal_subgroup_conditions =
        if kernel.is_trivial() { None } else { Some(check_conditions(g, &kernel, cfg)?.passed()) };
    Ok(RealizedGroup {
        catalog_index,
        name: g.display_name(),
        order: g.order(),
        abelian: g.is_abelian(),
        exponent: g.exponent(),
        center_order: center(g).order(),
        derived_order: commutator_subgroup(g, &w).order(),
        generator_orders: gens.iter().map(|&x| g.element_order(x)).collect(),
        commutator_orders,
        element_orders: fp.element_orders,
        degrees: table.degree_multiset(),
        character: table.character(chi).values().iter().map(|v| v.to_string()).collect(),
        normal_subgroup_conditions,
    })
}

/// An irreducible of degree `d`, preferring one whose kernel subgroup is
/// nontrivial.
fn pick_character(g: &Group, table: &CharTable, d: u64) -> Result<Option<usize>> {
    let all = table.of_degree(d);
    for &i in &all {
        if !gagola_kernel(g, table, i)?.is_trivial() {
            return Ok(Some(i));
        }
    }
    Ok(all.first().copied())
}

/// Catalog groups of order `n` with an irreducible of degree `d`.
fn enumerate_realizations(n: u64, d: u64, cfg: &Config) -> Result<Vec<RealizedGroup>> {
    let mut out = Vec::new();
    for (i, g) in small_group_catalog(n as usize)?.iter().enumerate() {
        let table = dixon_char_table(g, cfg)?;
        if let Some(chi) = pick_character(g, &table, d)? {
            out.push(describe(g, Some(i + 1), &table, chi, cfg)?);
        }
    }
    Ok(out)
}

fn divisors(q: u64) -> Vec<u64> {
    (1..=q).filter(|t| q % t == 0).collect()
}

/// Every group of order 18 in the catalog has an abelian normal subgroup of
/// index 2.
fn order18_abelian_index_two() -> Result<bool> {
    Ok(small_group_catalog(18)?
        .iter()
        .all(|g| normal_subgroups(g).iter().any(|n| n.order() == 9 && n.is_abelian(g))))
}

/// All groups with an irreducible of degree `d` where `n = d(d + e)`,
/// mechanically, for `e <= 3`. For `e = 1` the family is infinite and the
/// report lists its members up to `q = 9`.
pub fn classify_e(e: u64, cfg: &Config) -> Result<ClassificationReport> {
    if e > 3 {
        return Err(Error::UnsupportedE(e));
    }
    let mut notes = Vec::new();
    let mut candidates = Vec::new();
    let factorial_divisors = if e == 0 { Vec::new() } else { divisors(factorial_quotient(e).try_into().unwrap()) };

    match e {
        0 => {
            candidates.push(CandidateReport {
                d: 1,
                n: 1,
                cases: vec!["d_squared_equals_n"],
                verdict: Verdict::Realized { groups: enumerate_realizations(1, 1, cfg)? },
            });
            notes.push("d >= 2 is impossible: the trivial character gives n >= 1 + d^2 > d^2".into());
        }
        1 => {
            for q in [2u64, 3, 4, 5, 7, 8, 9] {
                let g = families::frobenius_group(q)?;
                let table = dixon_char_table(&g, cfg)?;
                let d = q - 1;
                let chi = pick_character(&g, &table, d)?
                    .ok_or_else(|| Error::InternalInconsistency(format!("AGL(1,{q}) has no degree {d}")))?;
                candidates.push(CandidateReport {
                    d,
                    n: q * d,
                    cases: vec!["normal_subgroup"],
                    verdict: Verdict::Realized { groups: vec![describe(&g, None, &table, chi, cfg)?] },
                });
            }
            notes.push("e = 1 exactly when n = q(q-1) for a prime power q; the family continues beyond q = 9".into());
        }
        _ => {
            let mut list = factorial_case_candidates(e);
            // normal-subgroup case: e = p^m
            let (p, m) = modp::prime_power(e).expect("e = 2, 3 is a prime power");
            let k = 1;
            if p == 2 {
                notes.push("normal-subgroup case with p = 2: N = [C, C] has index 4 in C, so N is cyclic and k = 1".into());
            } else {
                notes.push(format!("normal-subgroup case: k < 2m = {} forces k = 1", 2 * m));
            }
            let q = p.pow(k);
            let (dn, nn) = (e * (q - 1), e * e * q * (q - 1));
            match list.iter_mut().find(|c| c.0 == dn) {
                Some(c) => c.2.push("normal_subgroup"),
                None => list.push((dn, nn, vec!["normal_subgroup"])),
            }
            list.sort_by_key(|c| c.0);

            for (d, n, cases) in list {
                let verdict = if small_group_catalog(n as usize).is_ok() {
                    let groups = enumerate_realizations(n, d, cfg)?;
                    if !groups.is_empty() {
                        Verdict::Realized { groups }
                    } else if e == 3 && d == 3 {
                        if !order18_abelian_index_two()? {
                            return Err(Error::InternalInconsistency("order-18 group without abelian index-2 subgroup".into()));
                        }
                        Verdict::RuledOut {
                            argument: "every group of order 18 has an abelian normal subgroup of index 2, and 3 does not divide 2"
                                .into(),
                            confirmed_by_enumeration: true,
                        }
                    } else {
                        match sylow_pruner(d, n) {
                            PrunerVerdict::RuledOut(r) => Verdict::RuledOut { argument: r, confirmed_by_enumeration: true },
                            PrunerVerdict::NeedsEnumeration(_) => Verdict::RuledOut {
                                argument: format!("no group of order {n} in the complete catalog has an irreducible of degree {d}"),
                                confirmed_by_enumeration: true,
                            },
                        }
                    }
                } else {
                    match sylow_pruner(d, n) {
                        PrunerVerdict::RuledOut(r) => Verdict::RuledOut { argument: r, confirmed_by_enumeration: false },
                        PrunerVerdict::NeedsEnumeration(r) => {
                            return Err(Error::InternalInconsistency(format!(
                                "candidate (d, n) = ({d}, {n}) is neither enumerable nor pruned: {r}"
                            )))
                        }
                    }
                };
                candidates.push(CandidateReport { d, n, cases, verdict });
            }
        }
    }

    let bounds = (e > 1).then(|| bound_check(e));
    let bound_attained = bounds.as_ref().is_some_and(|b| {
        candidates.iter().any(|c| matches!(c.verdict, Verdict::Realized { .. }) && c.n.to_string() == b.factorial_squared)
    });
    if let Some(b) = &bounds {
        let limit: BigUint = b.factorial_squared.parse().expect("decimal");
        for c in &candidates {
            if matches!(c.verdict, Verdict::Realized { .. }) && BigUint::from(c.n) > limit {
                return Err(Error::InternalInconsistency(format!("realized n = {} exceeds ((2e)!)^2", c.n)));
            }
        }
    }
    Ok(ClassificationReport { e, factorial_divisors, candidates, bounds, bound_attained, notes })
}

/// Whether `g` has an irreducible of degree `floor(sqrt |G|)`. When it
/// does, `g` is checked to be cyclic of order at most 3, nonabelian of
/// order 8, or of order `d(d + 1)`.
pub fn floor_sqrt_corollary_check(g: &Group, cfg: &Config) -> Result<bool> {
    let n = g.order() as u64;
    let d = n.sqrt();
    let table = dixon_char_table(g, cfg)?;
    let has = !table.of_degree(d).is_empty();
    if has {
        let cyclic_small = n <= 3 && Subgroup::whole(g).is_cyclic(g);
        let q8_like = n == 8 && !g.is_abelian();
        if !(cyclic_small || q8_like || d * (d + 1) == n) {
            return Err(Error::InternalInconsistency(format!(
                "{} has an irreducible of degree floor(sqrt {n}) outside the expected families",
                g.display_name()
            )));
        }
    }
    Ok(has)
}

/// For a group with an irreducible of degree `d` and `n = d(d + 1)`,
/// `d > 1`: the set `N` where the character is `-1`, together with 1, is a
/// normal subgroup of order `d + 1` with a complement of order `d` acting
/// freely and transitively on `N - {1}` by conjugation.
pub fn doubly_transitive_check(g: &Group, table: &CharTable, chi: usize, cfg: &Config) -> Result<bool> {
    let n = g.order() as u64;
    let c = table.character(chi);
    let d = c.integer_degree().unwrap_or(0);
    if d < 2 || d * (d + 1) != n {
        return Err(Error::PreconditionViolated(format!("need d > 1 with d(d+1) = |G|, got d = {d}")));
    }
    let cd = g.classes();
    let minus_one: Vec<usize> = g.elements().filter(|&x| c.value(cd.class_of(x)).to_integer() == Some(-1)).collect();
    let members = std::iter::once(0).chain(minus_one);
    let nsub = match Subgroup::new(g, members) {
        Ok(s) => s,
        Err(_) => return Ok(false),
    };
    if nsub.order() as u64 != d + 1 || !nsub.is_normal(g) {
        return Ok(false);
    }
    let complement =
        enumerate_subgroups(g, cfg)?.into_iter().find(|h| h.order() as u64 == d && h.intersect(g, &nsub).is_trivial());
    let Some(h) = complement else { return Ok(false) };
    let x = nsub.members()[1];
    let mut orbit: Vec<usize> = h.members().iter().map(|&y| g.conj(y, x)).collect();
    orbit.sort_unstable();
    orbit.dedup();
    Ok(orbit.len() as u64 == d && orbit.iter().all(|&y| y != 0 && nsub.contains(y)))
}
