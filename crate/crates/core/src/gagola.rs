//! Groups with a nontrivial normal subgroup `N` acting trivially on every
//! simple module but one: class-pattern tests, the four structural
//! conditions on `(N, C, p, k, m)`, and the case split for a given
//! irreducible character.

use num_bigint::BigUint;
use num_integer::Roots;
use serde::Serialize;

use crate::character::{
    dixon_char_table, restrict, subgroup_inner_product, CharTable, Character, LinearCharacter, SubgroupFunction,
};
use crate::config::Config;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{
    centralizer, centralizer_in, commutator_subgroup, normal_subgroups, subgroups_between, Group, Subgroup,
};
use crate::modp;

fn check_normal_nontrivial(g: &Group, n: &Subgroup) -> Result<()> {
    n.check_parent(g)?;
    if !n.is_normal(g) {
        return Err(Error::NotNormal(format!("subgroup of order {} in {}", n.order(), g.display_name())));
    }
    if n.is_trivial() {
        return Err(Error::PreconditionViolated("N must be nontrivial".into()));
    }
    Ok(())
}

/// Whether the classes of `g` are exactly `{1}`, `N - {1}`, and the full
/// preimages of the nontrivial classes of `G/N`.
pub fn class_pattern_check(g: &Group, n: &Subgroup) -> Result<bool> {
    check_normal_nontrivial(g, n)?;
    let cd = g.classes();
    for c in 1..cd.len() {
        let class = cd.class(c);
        if n.contains(class[0]) {
            if class.len() != n.order() - 1 {
                return Ok(false);
            }
        } else if !class.iter().all(|&y| n.members().iter().all(|&z| cd.class_of(g.mul(y, z)) == c)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Index of the unique irreducible of `table` whose kernel misses part of
/// `n`, if there is exactly one.
///
/// The answer is cross-checked against [`class_pattern_check`]; the two
/// always agree for a correct table.
pub fn acts_trivially_except_one(g: &Group, table: &CharTable, n: &Subgroup) -> Result<Option<usize>> {
    check_normal_nontrivial(g, n)?;
    if table.group() != g.id() {
        return Err(Error::GroupMismatch);
    }
    let cd = g.classes();
    let n_classes: Vec<usize> = n.members().iter().map(|&x| cd.class_of(x)).collect();
    let moved: Vec<usize> = (0..table.len())
        .filter(|&i| {
            let chi = table.character(i);
            n_classes.iter().any(|&c| chi.value(c) != chi.degree())
        })
        .collect();
    let found = if moved.len() == 1 { Some(moved[0]) } else { None };
    if found.is_some() != class_pattern_check(g, n)? {
        return Err(Error::InternalInconsistency(
            "character table and class pattern disagree on the normal subgroup".into(),
        ));
    }
    Ok(found)
}

/// One evaluated condition with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub id: u8,
    pub pass: bool,
    pub witness: String,
}

/// A consequence checked on a passing certificate. `applies` is false when
/// the hypothesis of the statement does not hold for this instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceCheck {
    pub id: &'static str,
    pub applies: bool,
    pub pass: bool,
    pub witness: String,
}

/// Evidence for or against the four structural conditions on `(G, N)`.
#[derive(Debug, Clone, Serialize)]
pub struct GagolaCertificate {
    pub group: String,
    pub n: usize,
    pub d: Option<u64>,
    pub e: Option<u64>,
    pub p: Option<u64>,
    pub k: Option<u32>,
    pub m: Option<u32>,
    pub normal_subgroup: Vec<usize>,
    pub x: usize,
    pub centralizer: Vec<usize>,
    pub conditions: Vec<Condition>,
    /// Every nontrivial element of `N` has a centralizer of the same order.
    pub centralizer_invariance: bool,
    /// Irreducible degrees of `G` are those of `G/N` plus one copy of `d`.
    /// `None` when `d` is undefined.
    pub character_degree_check: Option<bool>,
    pub instance_checks: Vec<InstanceCheck>,
}

impl GagolaCertificate {
    /// All four conditions hold.
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("certificate serializes")
    }

    pub fn to_text(&self) -> String {
        let opt = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
        let mut s = format!(
            "group {} (order {}), |N| = {}, x = {}, |C| = {}\n",
            self.group,
            self.n,
            self.normal_subgroup.len(),
            self.x,
            self.centralizer.len()
        );
        s += &format!(
            "p = {}, k = {}, m = {}, d = {}, e = {}\n",
            opt(self.p),
            opt(self.k.map(u64::from)),
            opt(self.m.map(u64::from)),
            opt(self.d),
            opt(self.e)
        );
        for c in &self.conditions {
            s += &format!("  ({}) {}  {}\n", c.id, if c.pass { "pass" } else { "FAIL" }, c.witness);
        }
        s += &format!("  centralizer orders constant on N-1: {}\n", self.centralizer_invariance);
        if let Some(b) = self.character_degree_check {
            s += &format!("  degrees(G) = degrees(G/N) + {{d}}: {b}\n");
        }
        for c in &self.instance_checks {
            if c.applies {
                s += &format!("  {}: {}  {}\n", c.id, if c.pass { "pass" } else { "FAIL" }, c.witness);
            }
        }
        s += if self.passed() { "all conditions hold\n" } else { "conditions fail\n" };
        s
    }
}

fn p_part(n: u64, p: u64) -> u64 {
    p.pow(modp::valuation(n, p))
}

/// `m` with `p^m = e`, if any.
fn log_exact(e: u64, p: u64) -> Option<u32> {
    let m = modp::valuation(e, p);
    (p.pow(m) == e).then_some(m)
}

/// Evaluates the four structural conditions on `(G, N)` with `x` the
/// smallest nontrivial element of `N` and `C` its centralizer:
///
/// 1. `N` is elementary abelian of order `p^k`;
/// 2. `|C| = p^k e^2` and `d = e(p^k - 1)`, where `e^2 = n / (p^k(p^k - 1))`;
/// 3. `C` is a Sylow `p`-subgroup and `e = p^m`;
/// 4. every `H` with `N <= H <= C` and `|H| > p^(k+m)` has `N <= [H, H]`.
///
/// Failures are reported in the certificate rather than as errors.
pub fn check_conditions(g: &Group, n: &Subgroup, cfg: &Config) -> Result<GagolaCertificate> {
    check_normal_nontrivial(g, n)?;
    cfg.check_order(g.order())?;
    let order = g.order() as u64;
    let x = n.members()[1];
    let c = centralizer(g, x);
    let mut conditions = Vec::with_capacity(4);

    // (1)
    let (p, k) = match n.elementary_abelian(g) {
        Some(ea) => {
            let p = ea.p.expect("N is nontrivial");
            conditions.push(Condition { id: 1, pass: true, witness: format!("|N| = {p}^{}", ea.k) });
            (Some(p), Some(ea.k))
        }
        None => {
            let witness = match n.members()[1..].iter().find(|&&y| !modp::is_prime(g.element_order(y) as u64)) {
                Some(&y) => format!("element {} has order {}", g.label(y), g.element_order(y)),
                None => "N is not elementary abelian".to_string(),
            };
            conditions.push(Condition { id: 1, pass: false, witness });
            (None, None)
        }
    };

    // (2)
    let mut e = None;
    let mut d = None;
    match (p, k) {
        (Some(p), Some(k)) => {
            let q = p.pow(k);
            let denom = q * (q - 1);
            let square = (order % denom == 0).then(|| order / denom).filter(|&s| s.sqrt() * s.sqrt() == s);
            match square {
                Some(s) => {
                    let ev = s.sqrt();
                    e = Some(ev);
                    d = Some(ev * (q - 1));
                    let want = q * ev * ev;
                    let pass = c.order() as u64 == want;
                    conditions.push(Condition {
                        id: 2,
                        pass,
                        witness: format!("e = {ev}, d = {}, |C| = {} (need {want})", ev * (q - 1), c.order()),
                    });
                }
                None => conditions.push(Condition {
                    id: 2,
                    pass: false,
                    witness: format!("n / (p^k (p^k - 1)) = {order} / {denom} is not a perfect square"),
                }),
            }
        }
        _ => conditions.push(Condition { id: 2, pass: false, witness: "requires condition 1".into() }),
    }

    // (3)
    let mut m = None;
    match (p, e) {
        (Some(p), Some(ev)) => {
            let sylow = p_part(order, p);
            let is_sylow = c.order() as u64 == sylow;
            m = log_exact(ev, p);
            let pass = is_sylow && m.is_some();
            let witness = match m {
                Some(mv) => format!("|C| = {} vs Sylow order {sylow}; e = {p}^{mv}", c.order()),
                None => format!("|C| = {} vs Sylow order {sylow}; e = {ev} is not a power of {p}", c.order()),
            };
            conditions.push(Condition { id: 3, pass, witness });
        }
        _ => conditions.push(Condition { id: 3, pass: false, witness: "requires conditions 1 and 2".into() }),
    }

    // (4)
    match (p, k, m) {
        (Some(p), Some(k), Some(mv)) if n.is_subgroup_of(&c) => {
            let floor = p.pow(k + mv) as usize;
            let mut checked = 0;
            let mut failure = None;
            for h in subgroups_between(g, n, &c, cfg)? {
                if h.order() <= floor {
                    continue;
                }
                checked += 1;
                if !n.is_subgroup_of(&commutator_subgroup(g, &h)) {
                    failure = Some(h);
                    break;
                }
            }
            let cond = match failure {
                None => Condition {
                    id: 4,
                    pass: true,
                    witness: format!("{checked} subgroups of order > {floor} all have N in their commutator subgroup"),
                },
                Some(h) => Condition {
                    id: 4,
                    pass: false,
                    witness: format!("H of order {} (members {:?}) has N not inside [H,H]", h.order(), h.members()),
                },
            };
            conditions.push(cond);
        }
        _ => conditions.push(Condition { id: 4, pass: false, witness: "requires conditions 1-3".into() }),
    }

    let c_order = c.order();
    let centralizer_invariance = n.members()[1..].iter().all(|&y| centralizer(g, y).order() == c_order);

    let character_degree_check = match d {
        Some(dv) => {
            let mut want = dixon_char_table(&g.quotient(n)?.group, cfg)?.degree_multiset();
            want.push(dv);
            want.sort_unstable();
            Some(dixon_char_table(g, cfg)?.degree_multiset() == want)
        }
        None => None,
    };

    let mut cert = GagolaCertificate {
        group: g.display_name(),
        n: g.order(),
        d,
        e,
        p,
        k,
        m,
        normal_subgroup: n.members().to_vec(),
        x,
        centralizer: c.members().to_vec(),
        conditions,
        centralizer_invariance,
        character_degree_check,
        instance_checks: Vec::new(),
    };
    if cert.passed() {
        let (p, k, m, d, e) = (p.unwrap(), k.unwrap(), m.unwrap(), d.unwrap(), e.unwrap());
        let q = p.pow(k);
        if order != e * e * q * (q - 1) || d != e * (q - 1) || e != p.pow(m) {
            return Err(Error::InternalInconsistency("passing certificate violates its arithmetic".into()));
        }
        cert.instance_checks = instance_checks(g, n, &c, p, k, m);
    }
    Ok(cert)
}

/// Certificate for the first nontrivial normal subgroup (in canonical
/// order) that satisfies all four conditions, or for the smallest one if
/// none does.
pub fn search_certificate(g: &Group, cfg: &Config) -> Result<GagolaCertificate> {
    cfg.check_order(g.order())?;
    let mut first = None;
    for n in normal_subgroups(g).into_iter().filter(|n| !n.is_trivial()) {
        let cert = check_conditions(g, &n, cfg)?;
        if cert.passed() {
            return Ok(cert);
        }
        first.get_or_insert(cert);
    }
    first.ok_or_else(|| Error::PreconditionViolated("the trivial group has no nontrivial normal subgroup".into()))
}

/// Consequences of the conditions, checked on a passing instance with
/// `N`, `C`, `p`, `k`, `m` as in [`check_conditions`].
fn instance_checks(g: &Group, n: &Subgroup, c: &Subgroup, p: u64, k: u32, m: u32) -> Vec<InstanceCheck> {
    let e = p.pow(m);
    let odd_part = e > 1 && !e.is_power_of_two();
    let cn = centralizer_in(g, n, c);
    let schreier = (p.pow(m + 1) * m as u64 + 1) as u128;
    let taussky = taussky_check(g, c);
    vec![
        InstanceCheck {
            id: "centralizer_of_n_in_c_exceeds_n",
            applies: odd_part,
            pass: !odd_part || cn.order() > n.order(),
            witness: format!("|C_C(N)| = {}, |N| = {}", cn.order(), n.order()),
        },
        InstanceCheck {
            id: "k_less_than_2m",
            applies: odd_part,
            pass: !odd_part || k < 2 * m,
            witness: format!("k = {k}, m = {m}"),
        },
        InstanceCheck {
            id: "two_group_commutator_cyclic",
            applies: taussky.is_some(),
            pass: taussky.unwrap_or(true),
            witness: format!("|C| = {}", c.order()),
        },
        InstanceCheck {
            id: "schreier_rank_bound",
            applies: m >= 1,
            pass: m == 0 || u128::from(k) <= schreier,
            witness: format!("k = {k} <= p^(m+1) m + 1 = {schreier}"),
        },
    ]
}

/// For a 2-group `c` whose commutator subgroup has index 4: whether that
/// commutator subgroup is cyclic. `None` when the hypothesis fails.
pub fn taussky_check(g: &Group, c: &Subgroup) -> Option<bool> {
    if c.order() < 4 || !c.is_p_group(2) {
        return None;
    }
    let d = commutator_subgroup(g, c);
    (c.order() == 4 * d.order()).then(|| d.is_cyclic(g))
}

/// Which of the three cases hold for an irreducible of degree `d` in a
/// group of order `n = d(d + e)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum TrichotomyCase {
    DEqualsE,
    /// `d + e` divides `(2e - 1)! / e` (decimal string). For `e = 0` the
    /// quotient is taken to be 1 and `d + e = 1` divides it.
    Factorial { divisor: u64, quotient: String },
    /// The largest subgroup acting trivially on every other simple module.
    NormalSubgroup { order: usize, members: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trichotomy {
    pub d: u64,
    pub e: u64,
    pub n: u64,
    pub cases: Vec<TrichotomyCase>,
}

/// `(2e - 1)! / e`, or 1 for `e = 0`.
pub fn factorial_quotient(e: u64) -> BigUint {
    if e == 0 {
        return BigUint::from(1u32);
    }
    (1..2 * e).filter(|&i| i != e).map(BigUint::from).product()
}

/// Reports every case that holds for `table.character(index)`; at least
/// one always does.
pub fn trichotomy(g: &Group, table: &CharTable, index: usize) -> Result<Trichotomy> {
    let chi = table.character(index);
    let d = chi.integer_degree().ok_or_else(|| Error::PreconditionViolated("degree must be a positive integer".into()))?;
    let n = g.order() as u64;
    if n % d != 0 {
        return Err(Error::InternalInconsistency(format!("degree {d} does not divide {n}")));
    }
    let e = n / d - d;
    let mut cases = Vec::new();
    if d == e {
        cases.push(TrichotomyCase::DEqualsE);
    }
    let quotient = factorial_quotient(e);
    if (&quotient % BigUint::from(d + e)) == BigUint::from(0u32) {
        cases.push(TrichotomyCase::Factorial { divisor: d + e, quotient: quotient.to_string() });
    }
    let kernel = crate::character::gagola_kernel(g, table, index)?;
    if !kernel.is_trivial() {
        cases.push(TrichotomyCase::NormalSubgroup { order: kernel.order(), members: kernel.members().to_vec() });
    }
    if cases.is_empty() {
        return Err(Error::InternalInconsistency(format!("no case holds for d = {d}, e = {e}")));
    }
    Ok(Trichotomy { d, e, n, cases })
}

/// `(χ, φ)_H` for the character `chi` attached to `N`, asserting it equals
/// `e |N| / |H|` and is an integer. `phi` must be nontrivial on `H ∩ N`.
pub fn star_integrality(
    g: &Group,
    n: &Subgroup,
    chi: &Character,
    h: &Subgroup,
    phi: &LinearCharacter,
) -> Result<Cyclotomic> {
    check_normal_nontrivial(g, n)?;
    h.check_parent(g)?;
    if phi.members() != h.members() {
        return Err(Error::GroupMismatch);
    }
    if phi.is_trivial_on(n) {
        return Err(Error::PreconditionViolated("φ is trivial on H ∩ N".into()));
    }
    let d = chi.integer_degree().ok_or_else(|| Error::PreconditionViolated("χ(1) must be an integer".into()))?;
    let e = (g.order() as u64 / d) - d;
    let res: SubgroupFunction = restrict(g, chi, h)?;
    let value = subgroup_inner_product(&res, &phi.to_function(g, phi.root_order()))?;
    let want = Cyclotomic::from_rational(1, (e * n.order() as u64) as i128, h.order() as i128);
    if value != want || !value.is_integer() {
        return Err(Error::InternalInconsistency(format!(
            "(χ, φ)_H = {value}, expected the integer e|N|/|H| = {want}"
        )));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::degree_one_characters;
    use crate::families;
    use crate::group::{cyclic, direct_product};

    fn cfg() -> Config {
        Config::default()
    }

    fn order54_gagola() -> (Group, Subgroup) {
        let g = families::symplectic_family(3, 1, 1).unwrap();
        let n = families::symplectic_center_coordinate(&g, 3);
        (g, n)
    }

    #[test]
    fn class_pattern_examples() {
        let g = families::frobenius_group(5).unwrap();
        let n = Subgroup::new(&g, 0..5).unwrap();
        assert!(class_pattern_check(&g, &n).unwrap());

        let v4 = direct_product(&cyclic(2), &cyclic(2));
        for n in normal_subgroups(&v4).into_iter().filter(|n| n.order() == 2) {
            // in an abelian group N - {1} is a single class, but the
            // outside classes are singletons, not cosets
            assert!(!class_pattern_check(&v4, &n).unwrap());
        }

        let (g, n) = order54_gagola();
        assert!(class_pattern_check(&g, &n).unwrap());
        let cd = g.classes();
        assert_eq!(cd.size(cd.class_of(n.members()[1])), 2);
    }

    #[test]
    fn non_normal_is_rejected() {
        let s3 = families::symmetric3();
        let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let h = Subgroup::generated(&s3, &[t]);
        assert!(matches!(class_pattern_check(&s3, &h), Err(Error::NotNormal(_))));
    }

    #[test]
    fn unique_moved_character() {
        let g = families::frobenius_group(4).unwrap();
        let t = dixon_char_table(&g, &cfg()).unwrap();
        let n = Subgroup::new(&g, 0..4).unwrap();
        let i = acts_trivially_except_one(&g, &t, &n).unwrap().unwrap();
        assert_eq!(t.character(i).integer_degree(), Some(3));

        let c2 = cyclic(2);
        let t = dixon_char_table(&c2, &cfg()).unwrap();
        let i = acts_trivially_except_one(&c2, &t, &Subgroup::whole(&c2)).unwrap().unwrap();
        assert_eq!(t.character(i).value(1).to_integer(), Some(-1));

        let c3 = cyclic(3);
        let t = dixon_char_table(&c3, &cfg()).unwrap();
        assert_eq!(acts_trivially_except_one(&c3, &t, &Subgroup::whole(&c3)).unwrap(), None);

        let (g, n) = order54_gagola();
        let t = dixon_char_table(&g, &cfg()).unwrap();
        let i = acts_trivially_except_one(&g, &t, &n).unwrap().unwrap();
        assert_eq!(t.character(i).integer_degree(), Some(6));
    }

    #[test]
    fn certificate_for_symplectic_group() {
        let (g, n) = order54_gagola();
        let cert = check_conditions(&g, &n, &cfg()).unwrap();
        assert!(cert.passed(), "{}", cert.to_text());
        assert_eq!((cert.p, cert.k, cert.m), (Some(3), Some(1), Some(1)));
        assert_eq!((cert.d, cert.e), (Some(6), Some(3)));
        assert_eq!(cert.character_degree_check, Some(true));
        assert!(cert.centralizer_invariance);
        assert!(cert.instance_checks.iter().all(|c| c.pass));
        let json = cert.to_json();
        for key in ["group", "n", "d", "e", "p", "k", "m", "conditions", "character_degree_check"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn certificate_for_frobenius_group() {
        let g = families::frobenius_group(5).unwrap();
        let n = Subgroup::new(&g, 0..5).unwrap();
        let cert = check_conditions(&g, &n, &cfg()).unwrap();
        assert!(cert.passed());
        assert_eq!((cert.p, cert.k, cert.m, cert.e), (Some(5), Some(1), Some(0), Some(1)));
    }

    #[test]
    fn cyclic_nine_fails_with_witness() {
        let g = cyclic(9);
        let n = Subgroup::generated(&g, &[3]);
        let cert = check_conditions(&g, &n, &cfg()).unwrap();
        assert!(!cert.passed());
        assert!(cert.conditions[0].pass);
        assert!(!cert.conditions[1].pass);
        assert!(cert.conditions[1].witness.contains("perfect square"));
        assert_eq!(cert.character_degree_check, None);
    }

    #[test]
    fn symplectic_family_passes_in_small_cases() {
        for (p, w) in [(3, 1), (2, 1), (2, 2)] {
            let g = families::symplectic_family(p, w, 1).unwrap();
            let n = families::symplectic_center_coordinate(&g, p as usize);
            let cert = check_conditions(&g, &n, &cfg()).unwrap();
            assert!(cert.passed(), "p={p} w={w}\n{}", cert.to_text());
            assert_eq!(cert.character_degree_check, Some(true));
        }
    }

    #[test]
    fn search_finds_the_passing_subgroup() {
        let (g, n) = order54_gagola();
        let cert = search_certificate(&g, &cfg()).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.normal_subgroup, n.members());
        let cert = search_certificate(&cyclic(9), &cfg()).unwrap();
        assert!(!cert.passed());
        assert_eq!(cert.normal_subgroup.len(), 3);
    }

    #[test]
    fn trichotomy_examples() {
        let c3 = cyclic(3);
        let t = dixon_char_table(&c3, &cfg()).unwrap();
        let tri = trichotomy(&c3, &t, 0).unwrap();
        assert_eq!((tri.d, tri.e), (1, 2));
        assert_eq!(tri.cases, vec![TrichotomyCase::Factorial { divisor: 3, quotient: "3".into() }]);

        let q8 = families::quaternion8();
        let t = dixon_char_table(&q8, &cfg()).unwrap();
        let tri = trichotomy(&q8, &t, 4).unwrap();
        assert_eq!(tri.cases[0], TrichotomyCase::DEqualsE);
        assert!(matches!(tri.cases.last(), Some(TrichotomyCase::NormalSubgroup { order: 2, .. })));

        let (g, _) = order54_gagola();
        let t = dixon_char_table(&g, &cfg()).unwrap();
        let six = t.of_degree(6)[0];
        let tri = trichotomy(&g, &t, six).unwrap();
        assert_eq!(tri.cases.len(), 1);
        assert!(matches!(tri.cases[0], TrichotomyCase::NormalSubgroup { order: 3, .. }));
    }

    #[test]
    fn factorial_quotients() {
        assert_eq!(factorial_quotient(2), BigUint::from(3u32));
        assert_eq!(factorial_quotient(3), BigUint::from(40u32));
        assert_eq!(factorial_quotient(1), BigUint::from(1u32));
    }

    #[test]
    fn star_values() {
        let (g, n) = order54_gagola();
        let t = dixon_char_table(&g, &cfg()).unwrap();
        let chi = t.character(t.of_degree(6)[0]).clone();
        let phis = degree_one_characters(&g, &n, &cfg()).unwrap();
        for phi in phis.iter().filter(|p| !p.is_trivial()) {
            assert_eq!(star_integrality(&g, &n, &chi, &n, phi).unwrap().to_integer(), Some(3));
        }
        let c = centralizer(&g, n.members()[1]);
        for phi in degree_one_characters(&g, &c, &cfg()).unwrap() {
            assert!(matches!(
                star_integrality(&g, &n, &chi, &c, &phi),
                Err(Error::PreconditionViolated(_))
            ));
        }

        let f5 = families::frobenius_group(5).unwrap();
        let n5 = Subgroup::new(&f5, 0..5).unwrap();
        let t = dixon_char_table(&f5, &cfg()).unwrap();
        let chi = t.character(t.of_degree(4)[0]).clone();
        let phi = degree_one_characters(&f5, &n5, &cfg()).unwrap().remove(1);
        assert_eq!(star_integrality(&f5, &n5, &chi, &n5, &phi).unwrap().to_integer(), Some(1));
    }

    #[test]
    fn taussky_on_order_eight() {
        for g in small(8) {
            let w = Subgroup::whole(&g);
            let r = taussky_check(&g, &w);
            if g.is_abelian() {
                assert_eq!(r, None);
            } else {
                assert_eq!(r, Some(true));
            }
        }
    }

    fn small(order: usize) -> Vec<Group> {
        families::small_group_catalog(order).unwrap()
    }
}
