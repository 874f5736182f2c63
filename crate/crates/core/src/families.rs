//! Constructors for the named families and the small-order catalog.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::group::{automorphisms, cyclic, direct_product, Group, Subgroup};
use crate::modp;

/// Symmetric group on three letters as `C3 ⋊ C2`.
pub fn symmetric3() -> Group {
    dihedral(3).with_name("S3")
}

/// Dihedral group of order `2n`: rotations are `0..n`, reflections `n..2n`.
pub fn dihedral(n: usize) -> Group {
    let inversion: Vec<usize> = (0..n).map(|x| (n - x) % n).collect();
    let action = vec![(0..n).collect(), inversion];
    Group::semidirect_product(&cyclic(n), &cyclic(2), &action)
        .expect("inversion is an automorphism")
        .with_name(format!("D{}", 2 * n))
}

/// Quaternion group `{±1, ±i, ±j, ±k}`, element `2u + s` is `(-1)^s` times
/// unit `u` of `(1, i, j, k)`.
pub fn quaternion8() -> Group {
    // unit products: (sign, unit) of e_a * e_b for a, b in 1, i, j, k
    let unit = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (0, x),
            (x, y) if x == y => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let table = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (s, u) = unit(x / 2, y / 2);
                    2 * u + (s + x % 2 + y % 2) % 2
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    Group::from_table(table).expect("quaternion table").with_name("Q8").with_labels(labels)
}

/// Extraspecial group of order 27 and exponent 3, as `C3^2 ⋊ C3` with
/// `(a, b) -> (a + b, b)`.
pub fn heisenberg27() -> Group {
    let v = direct_product(&cyclic(3), &cyclic(3));
    // element (a, b) has index 3b + a
    let action: Vec<Vec<usize>> =
        (0..3).map(|h| (0..9).map(|x| 3 * (x / 3) + (x % 3 + h * (x / 3)) % 3).collect()).collect();
    Group::semidirect_product(&v, &cyclic(3), &action).expect("shear action").with_name("He3")
}

/// Extraspecial group of order 27 and exponent 9, as `C9 ⋊ C3` with
/// `x -> 4x`.
pub fn extraspecial27_exp9() -> Group {
    let action: Vec<Vec<usize>> = (0..3).map(|h| (0..9).map(|x| x * 4usize.pow(h) % 9).collect()).collect();
    Group::semidirect_product(&cyclic(9), &cyclic(3), &action).expect("x -> 4x").with_name("C9:C3")
}

fn additive_group(f: &Field) -> Group {
    let q = f.order() as usize;
    let table = (0..q)
        .map(|a| (0..q).map(|b| f.add(FieldElement(a as u32), FieldElement(b as u32)).0 as usize).collect())
        .collect();
    Group::from_table(table).expect("additive group of a field")
}

/// `F_q ⋊ F_q^×` with the units acting by multiplication.
///
/// The translation `x` has index `x` (field encoding) and the unit
/// `γ^j` of the fixed generator `γ` sits in block `j`. For `q = 2` the
/// complement is trivial and the result is cyclic of order 2.
pub fn frobenius_group(q: u64) -> Result<Group> {
    let f = Field::of_order(q)?;
    let n = additive_group(&f);
    let units = f.units();
    let qm1 = (q - 1) as usize;
    let action: Vec<Vec<usize>> = (0..qm1)
        .map(|j| {
            let c = f.pow(units.generator, j as u64);
            (0..q as u32).map(|x| f.mul(c, FieldElement(x)).0 as usize).collect()
        })
        .collect();
    Ok(Group::semidirect_product(&n, &cyclic(qm1), &action)?.with_name(format!("AGL(1,{q})")))
}

/// [`symplectic_family_with`] under the default configuration.
pub fn symplectic_family(p: u64, dim_w: usize, kdim: u32) -> Result<Group> {
    symplectic_family_with(p, dim_w, kdim, &Config::default())
}

/// The group on `k × W × W^∨ × k^×` for `k = GF(p^kdim)` and
/// `W = k^dim_w`.
///
/// It is built as a semidirect product: the inner group on triples has
/// law `(a, v, f)(b, w, g) = (a + b + f(w), v + w, f + g)` and the unit
/// `c` acts by `(a, v, f) -> (ca, cv, f)`, giving the full law
/// `(a, v, f, c)(b, w, g, d) = (a + cb + c f(w), v + cw, f + g, cd)`.
///
/// The triple `(a, v, f)` has index `a + q·idx(v) + q^(1+dim_w)·idx(f)`
/// where vectors are read base `q`, so the centre coordinate `k` is the
/// block `0..q` and the inner group is `0..q^(1+2 dim_w)`.
pub fn symplectic_family_with(p: u64, dim_w: usize, kdim: u32, cfg: &Config) -> Result<Group> {
    if !modp::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    assert!(dim_w >= 1 && kdim >= 1);
    let f = Field::new(p, kdim)?;
    let q = f.order() as usize;
    let wsize = q.pow(dim_w as u32);
    let inner = q * wsize * wsize;
    cfg.check_order(inner * (q - 1))?;

    let vec_of = |idx: usize| -> Vec<FieldElement> {
        let mut x = idx;
        (0..dim_w)
            .map(|_| {
                let d = x % q;
                x /= q;
                FieldElement(d as u32)
            })
            .collect()
    };
    let vec_idx = |v: &[FieldElement]| v.iter().rev().fold(0usize, |acc, e| acc * q + e.0 as usize);
    let split = |x: usize| (FieldElement((x % q) as u32), vec_of(x / q % wsize), vec_of(x / (q * wsize)));
    let join = |a: FieldElement, v: &[FieldElement], g: &[FieldElement]| a.0 as usize + q * vec_idx(v) + q * wsize * vec_idx(g);
    let eval = |phi: &[FieldElement], w: &[FieldElement]| phi.iter().zip(w).fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
    let vadd = |v: &[FieldElement], w: &[FieldElement]| -> Vec<FieldElement> { v.iter().zip(w).map(|(&x, &y)| f.add(x, y)).collect() };
    let vscale = |c: FieldElement, v: &[FieldElement]| -> Vec<FieldElement> { v.iter().map(|&x| f.mul(c, x)).collect() };

    let table: Vec<Vec<usize>> = (0..inner)
        .map(|x| {
            let (a, v, phi) = split(x);
            (0..inner)
                .map(|y| {
                    let (b, w, g) = split(y);
                    let first = f.add(f.add(a, b), eval(&phi, &w));
                    join(first, &vadd(&v, &w), &vadd(&phi, &g))
                })
                .collect()
        })
        .collect();
    let heis = Group::from_table(table)?;
    let units = f.units();
    let action: Vec<Vec<usize>> = (0..q - 1)
        .map(|j| {
            let c = f.pow(units.generator, j as u64);
            (0..inner)
                .map(|x| {
                    let (a, v, phi) = split(x);
                    join(f.mul(c, a), &vscale(c, &v), &phi)
                })
                .collect()
        })
        .collect();
    let g = Group::semidirect_product(&heis, &cyclic(q - 1), &action)?;

    // at c = d = 1 the law must read (a + b + f(w), v + w, f + g)
    for x in 0..inner {
        let (a, v, phi) = split(x);
        for y in 0..inner {
            let (b, w, gg) = split(y);
            let printed = join(f.add(f.add(a, b), eval(&phi, &w)), &vadd(&v, &w), &vadd(&phi, &gg));
            if g.mul(x, y) != printed {
                return Err(Error::InternalInconsistency(format!("unit-scalar law differs at ({x}, {y})")));
            }
        }
    }
    let labels = (0..g.order())
        .map(|x| {
            let (a, v, phi) = split(x % inner);
            let c = f.pow(units.generator, (x / inner) as u64);
            let show = |u: &[FieldElement]| u.iter().map(|e| e.0.to_string()).collect::<Vec<_>>().join(",");
            format!("({};{};{};{})", a.0, show(&v), show(&phi), c.0)
        })
        .collect();
    let name = if kdim == 1 { format!("Sp(p={p},w={dim_w})") } else { format!("Sp(p={p},w={dim_w},k={kdim})") };
    Ok(g.with_name(name).with_labels(labels))
}

/// The normal subgroup `k` of a [`symplectic_family`] group (its first
/// `q` elements).
pub fn symplectic_center_coordinate(g: &Group, q: usize) -> Subgroup {
    Subgroup::new(g, 0..q).expect("k coordinate is a subgroup")
}

/// Representatives of the `Aut(n)`-conjugacy classes of automorphisms of
/// order dividing 2, identity first.
fn involution_classes(n: &Group, cfg: &Config) -> Result<Vec<Vec<usize>>> {
    let auts = automorphisms(n, cfg)?;
    let id: Vec<usize> = (0..n.order()).collect();
    let inverse = |a: &[usize]| {
        let mut inv = vec![0; a.len()];
        for (x, &y) in a.iter().enumerate() {
            inv[y] = x;
        }
        inv
    };
    let mut reps = vec![id.clone()];
    let mut covered = std::collections::HashSet::new();
    for alpha in &auts {
        if *alpha == id || covered.contains(alpha) || (0..n.order()).any(|x| alpha[alpha[x]] != x) {
            continue;
        }
        for beta in &auts {
            let bi = inverse(beta);
            let conj: Vec<usize> = (0..n.order()).map(|x| beta[alpha[bi[x]]]).collect();
            covered.insert(conj);
        }
        reps.push(alpha.clone());
    }
    Ok(reps)
}

/// `N ⋊ C2` for each involution class of `Aut(N)`.
fn split_by_c2(n: &Group, cfg: &Config) -> Result<Vec<Group>> {
    let reps = involution_classes(n, cfg)?;
    let many = reps.len() > 2;
    let base = n.display_name();
    reps.iter()
        .enumerate()
        .map(|(i, alpha)| {
            let id: Vec<usize> = (0..n.order()).collect();
            let g = Group::semidirect_product(n, &cyclic(2), &[id, alpha.clone()])?;
            let name = match (i, many) {
                (0, _) => format!("{base} x C2"),
                (_, false) => format!("({base}):C2"),
                (i, true) => format!("({base}):C2 #{i}"),
            };
            Ok(g.with_name(name))
        })
        .collect()
}

/// Every homomorphism `src -> dst`, as element maps.
pub fn homomorphisms(src: &Group, dst: &Group) -> Vec<Vec<usize>> {
    let gens = crate::group::small_generating_set(src, &Subgroup::whole(src));
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    loop {
        if let Some(m) = extend_to_hom(src, dst, &gens, &images) {
            out.push(m);
        }
        // odometer over image tuples
        let mut i = 0;
        loop {
            if i == images.len() {
                out.sort();
                return out;
            }
            images[i] += 1;
            if images[i] < dst.order() {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

fn extend_to_hom(src: &Group, dst: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; src.order()];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let a = queue[i];
        for (&s, &t) in gens.iter().zip(images) {
            let b = src.mul(a, s);
            let want = dst.mul(map[a], t);
            if map[b] == usize::MAX {
                map[b] = want;
                queue.push(b);
            } else if map[b] != want {
                return None;
            }
        }
        i += 1;
    }
    let ok = src.elements().all(|a| src.elements().all(|b| map[src.mul(a, b)] == dst.mul(map[a], map[b])));
    ok.then_some(map)
}

fn dedupe(groups: Vec<Group>, cfg: &Config) -> Result<Vec<Group>> {
    let mut out: Vec<Group> = Vec::new();
    for g in groups {
        let mut new = true;
        for h in &out {
            if g.is_isomorphic(h, cfg)? {
                new = false;
                break;
            }
        }
        if new {
            out.push(g);
        }
    }
    Ok(out)
}

/// Orders with a complete catalog.
pub const CATALOG_ORDERS: [usize; 10] = [1, 2, 3, 4, 8, 10, 18, 27, 40, 54];

/// Number of isomorphism classes for each catalog order.
pub fn expected_catalog_size(order: usize) -> Option<usize> {
    Some(match order {
        1 | 2 | 3 => 1,
        4 => 2,
        8 => 5,
        10 => 2,
        18 => 5,
        27 => 5,
        40 => 14,
        54 => 15,
        _ => return None,
    })
}

fn order8() -> Vec<Group> {
    vec![
        cyclic(8),
        direct_product(&cyclic(4), &cyclic(2)),
        direct_product(&direct_product(&cyclic(2), &cyclic(2)), &cyclic(2)),
        dihedral(4),
        quaternion8(),
    ]
}

fn order27() -> Vec<Group> {
    vec![
        cyclic(27),
        direct_product(&cyclic(9), &cyclic(3)),
        direct_product(&direct_product(&cyclic(3), &cyclic(3)), &cyclic(3)),
        heisenberg27(),
        extraspecial27_exp9(),
    ]
}

fn build_catalog(order: usize, cfg: &Config) -> Result<Vec<Group>> {
    let raw = match order {
        1 => vec![Group::trivial().with_name("C1")],
        2 | 3 => vec![cyclic(order)],
        4 => vec![cyclic(4), direct_product(&cyclic(2), &cyclic(2))],
        8 => order8(),
        10 => split_by_c2(&cyclic(5), cfg)?,
        18 => {
            let mut v = split_by_c2(&cyclic(9), cfg)?;
            v.extend(split_by_c2(&direct_product(&cyclic(3), &cyclic(3)), cfg)?);
            v
        }
        27 => order27(),
        40 => {
            // Sylow 5 is normal (n_5 | 8, n_5 = 1 mod 5), so G = C5 ⋊ P
            let z5 = cyclic(5);
            let z4 = cyclic(4);
            let mut v = Vec::new();
            for p in order8() {
                let pname = p.display_name();
                let homs = homomorphisms(&p, &z4);
                for (i, psi) in homs.iter().enumerate() {
                    // 2 generates the units mod 5; psi(x) = j acts as x -> 2^j x
                    let action: Vec<Vec<usize>> =
                        psi.iter().map(|&j| (0..5).map(|x| x * 2usize.pow(j as u32) % 5).collect()).collect();
                    let g = Group::semidirect_product(&z5, &p, &action)?;
                    let name = if i == 0 { format!("C5 x {pname}") } else { format!("C5:{pname} #{i}") };
                    v.push(g.with_name(name));
                }
            }
            v
        }
        54 => {
            let mut v = Vec::new();
            for n in order27() {
                v.extend(split_by_c2(&n, cfg)?);
            }
            v
        }
        _ => return Err(Error::UnsupportedOrder(order)),
    };
    let out = dedupe(raw, cfg)?;
    let expected = expected_catalog_size(order).expect("supported order");
    if out.len() != expected {
        return Err(Error::InternalInconsistency(format!(
            "catalog of order {order} has {} groups, expected {expected}",
            out.len()
        )));
    }
    Ok(out)
}

/// Isomorphism-class representatives of every group of a supported order
/// (see [`CATALOG_ORDERS`]), built from cyclic, direct and semidirect
/// products and deduplicated. Results are cached per order.
pub fn small_group_catalog(order: usize) -> Result<Vec<Group>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Vec<Group>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&order) {
        return Ok(v.clone());
    }
    if expected_catalog_size(order).is_none() {
        return Err(Error::UnsupportedOrder(order));
    }
    let built = build_catalog(order, &Config::default())?;
    Ok(cache.lock().unwrap().entry(order).or_insert(built).clone())
}

/// Group specification used by the command line:
/// `frobenius:q=5`, `symplectic:p=3,w=1[,k=2]`, `catalog:54/7` (1-based),
/// `cayley:<path>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Frobenius { q: u64 },
    Symplectic { p: u64, w: usize, k: u32 },
    Catalog { order: usize, index: usize },
    Cayley { path: String },
}

impl FamilySpec {
    pub fn build(&self, cfg: &Config) -> Result<Group> {
        let g = match self {
            FamilySpec::Frobenius { q } => frobenius_group(*q)?,
            FamilySpec::Symplectic { p, w, k } => symplectic_family_with(*p, *w, *k, cfg)?,
            FamilySpec::Catalog { order, index } => {
                let cat = small_group_catalog(*order)?;
                let len = cat.len();
                cat.into_iter()
                    .nth(index - 1)
                    .ok_or_else(|| Error::Parse(format!("catalog:{order} has {len} groups, index {index} out of range")))?
            }
            FamilySpec::Cayley { path } => Group::from_cayley_text(&std::fs::read_to_string(path)?)?,
        };
        cfg.check_order(g.order())?;
        Ok(g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Frobenius { q } => write!(f, "frobenius:q={q}"),
            FamilySpec::Symplectic { p, w, k: 1 } => write!(f, "symplectic:p={p},w={w}"),
            FamilySpec::Symplectic { p, w, k } => write!(f, "symplectic:p={p},w={w},k={k}"),
            FamilySpec::Catalog { order, index } => write!(f, "catalog:{order}/{index}"),
            FamilySpec::Cayley { path } => write!(f, "cayley:{path}"),
        }
    }
}

fn parse_params(s: &str) -> Result<BTreeMap<&str, u64>> {
    s.split(',')
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))?;
            let v = v.trim().parse().map_err(|_| Error::Parse(format!("bad value in {kv:?}")))?;
            Ok((k.trim(), v))
        })
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
        let spec = match kind {
            "frobenius" => {
                let params = parse_params(rest)?;
                if params.keys().any(|&k| k != "q") {
                    return Err(Error::Parse(format!("frobenius takes only q: {s:?}")));
                }
                let q = *params.get("q").ok_or_else(|| Error::Parse("frobenius needs q".into()))?;
                if modp::prime_power(q).is_none() {
                    return Err(Error::NotPrimePower(q));
                }
                FamilySpec::Frobenius { q }
            }
            "symplectic" => {
                let params = parse_params(rest)?;
                if params.keys().any(|&k| !matches!(k, "p" | "w" | "k")) {
                    return Err(Error::Parse(format!("symplectic takes p, w, k: {s:?}")));
                }
                let p = *params.get("p").ok_or_else(|| Error::Parse("symplectic needs p".into()))?;
                let w = *params.get("w").ok_or_else(|| Error::Parse("symplectic needs w".into()))?;
                let k = params.get("k").copied().unwrap_or(1);
                if !modp::is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                if w == 0 || k == 0 {
                    return Err(Error::Parse("w and k must be positive".into()));
                }
                FamilySpec::Symplectic { p, w: w as usize, k: k as u32 }
            }
            "catalog" => {
                let (o, i) = rest.split_once('/').ok_or_else(|| Error::Parse(format!("expected order/index in {s:?}")))?;
                let order: usize = o.parse().map_err(|_| Error::Parse(format!("bad order {o:?}")))?;
                let index: usize = i.parse().map_err(|_| Error::Parse(format!("bad index {i:?}")))?;
                let size = expected_catalog_size(order).ok_or(Error::UnsupportedOrder(order))?;
                if index == 0 || index > size {
                    return Err(Error::Parse(format!("catalog:{order} index must be in 1..={size}")));
                }
                FamilySpec::Catalog { order, index }
            }
            "cayley" if !rest.is_empty() => FamilySpec::Cayley { path: rest.to_string() },
            _ => return Err(Error::Parse(format!("unknown group spec {s:?}"))),
        };
        Ok(spec)
    }
}
