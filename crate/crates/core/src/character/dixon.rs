//! Dixon's method: central characters as common eigenvectors of the class
//! matrices over `F_l`, lifted to exact cyclotomic values.

use super::{power_maps_by_prime, CharTable, ClassFunction};
use crate::config::Config;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::modp::{self, Matrix};

/// Smallest prime `l = 1 (mod exponent)` with `l > 2 sqrt(order)`.
pub fn dixon_prime(order: usize, exponent: usize) -> u64 {
    let e = exponent as u64;
    (1u64..)
        .map(|t| t * e + 1)
        .find(|&l| l * l > 4 * order as u64 && modp::is_prime(l))
        .expect("Dirichlet")
}

/// `a[i][j][k]`: number of `x` in class `i` with `x^-1 z_k` in class `j`,
/// where `z_k` is the representative of class `k`.
fn structure_constants(g: &Group) -> Vec<Vec<Vec<u64>>> {
    let cd = g.classes();
    let r = cd.len();
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for k in 0..r {
        let z = cd.representative(k);
        for x in g.elements() {
            let j = cd.class_of(g.mul(g.inv(x), z));
            a[cd.class_of(x)][j][k] += 1;
        }
    }
    a
}

/// Splits `space` (RREF rows) into eigenspaces of `m`, which must leave it
/// invariant. Eigenvalues are visited in increasing order.
fn split(space: &Matrix, pivots: &[usize], m: &Matrix, l: u64) -> Result<Vec<(Matrix, Vec<usize>)>> {
    let d = space.len();
    let r = m.len();
    // image of each basis vector, in basis coordinates (the pivot entries)
    let images: Vec<Vec<u64>> = space
        .iter()
        .map(|b| (0..r).map(|i| (0..r).fold(0, |acc, k| modp::add(acc, modp::mul(m[i][k], b[k], l), l))).collect())
        .collect();
    let restricted: Matrix = (0..d).map(|s| (0..d).map(|t| images[t][pivots[s]]).collect()).collect();
    let poly = modp::charpoly(&restricted, l);
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in modp::roots(&poly, l) {
        let shifted: Matrix = (0..d)
            .map(|s| (0..d).map(|t| if s == t { modp::sub(restricted[s][t], lambda, l) } else { restricted[s][t] }).collect())
            .collect();
        let coords = modp::nullspace(&shifted, d, l);
        let mut vecs: Matrix = coords
            .iter()
            .map(|c| (0..r).map(|k| (0..d).fold(0, |acc, t| modp::add(acc, modp::mul(c[t], space[t][k], l), l))).collect())
            .collect();
        let piv = modp::rref(&mut vecs, l);
        total += vecs.len();
        out.push((vecs, piv));
    }
    if total != d {
        return Err(Error::InternalInconsistency(format!(
            "class matrix is not diagonalizable mod {l} on a {d}-dimensional space"
        )));
    }
    Ok(out)
}

/// The complex irreducible characters of `g`, exactly.
///
/// Central characters are found as common eigenvectors of the class
/// matrices over `F_l`; each value `χ(g)` is then recovered from the
/// multiplicities of the eigenvalues of `g`, which are obtained mod `l` by
/// a discrete Fourier inversion along the power map and lift uniquely
/// because they lie in `0..=χ(1) < l/2`. Values live in `Q(ζ_exp)`. The
/// result is checked for exact orthonormality before it is returned.
pub fn dixon_char_table(g: &Group, cfg: &Config) -> Result<CharTable> {
    cfg.check_order(g.order())?;
    let n = g.order();
    let cd = g.classes();
    let r = cd.len();
    let exp = g.exponent();
    let l = dixon_prime(n, exp);
    let a = structure_constants(g);

    let mut spaces: Vec<(Matrix, Vec<usize>)> = {
        let mut id: Matrix = (0..r).map(|i| (0..r).map(|k| u64::from(i == k)).collect()).collect();
        let piv = modp::rref(&mut id, l);
        vec![(id, piv)]
    };
    for i in 1..r {
        if spaces.iter().all(|(s, _)| s.len() == 1) {
            break;
        }
        let m: Matrix = (0..r).map(|j| (0..r).map(|k| a[i][j][k] % l).collect()).collect();
        let mut next = Vec::new();
        for (s, piv) in spaces {
            if s.len() == 1 {
                next.push((s, piv));
            } else {
                next.extend(split(&s, &piv, &m, l)?);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|(s, _)| s.len() != 1) {
        return Err(Error::InternalInconsistency("class matrices do not separate the central characters".into()));
    }

    let sizes = cd.sizes();
    let root = modp::pow(modp::primitive_root(l), (l - 1) / exp as u64, l);
    let m = exp as u32;
    let mut characters = Vec::with_capacity(r);
    for (s, _) in &spaces {
        let v = &s[0];
        if v[0] == 0 {
            return Err(Error::InternalInconsistency("central character vanishes at the identity".into()));
        }
        let inv0 = modp::inv(v[0], l);
        let omega: Vec<u64> = v.iter().map(|&x| modp::mul(x, inv0, l)).collect();
        // Σ_k ω_k ω_{k'} / |K_k| = n / d^2
        let s_sum = (0..r).fold(0, |acc, k| {
            let t = modp::mul(omega[k], omega[cd.inverse(k)], l);
            modp::add(acc, modp::mul(t, modp::inv(sizes[k] as u64 % l, l), l), l)
        });
        if s_sum == 0 {
            return Err(Error::InternalInconsistency("degree equation has no solution".into()));
        }
        let d2 = modp::mul(n as u64 % l, modp::inv(s_sum, l), l);
        let d = (1..=l / 2)
            .find(|&d| modp::mul(d, d, l) == d2)
            .ok_or_else(|| Error::InternalInconsistency("degree is not a square mod l".into()))?;
        // χ(g_k) mod l
        let theta: Vec<u64> =
            (0..r).map(|k| modp::mul(modp::mul(d, omega[k], l), modp::inv(sizes[k] as u64 % l, l), l)).collect();
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let o = g.element_order(cd.representative(k));
            let w = modp::pow(root, (exp / o) as u64, l);
            let o_inv = modp::inv(o as u64 % l, l);
            let mut full = vec![0i128; exp];
            for j in 0..o {
                // μ_j = o^-1 Σ_t θ(g^t) w^(-jt)
                let mut mu = 0;
                for t in 0..o {
                    let wt = modp::pow(w, ((o - j) * t % o) as u64, l);
                    mu = modp::add(mu, modp::mul(theta[cd.power_map(k, t as i64)], wt, l), l);
                }
                let mu = modp::mul(mu, o_inv, l);
                if mu > d {
                    return Err(Error::InternalInconsistency(format!(
                        "eigenvalue multiplicity {mu} exceeds degree {d} mod {l}"
                    )));
                }
                full[j * (exp / o)] = mu as i128;
            }
            values.push(Cyclotomic::from_full(m, &full, 1));
        }
        characters.push(ClassFunction::new(g, values)?);
    }

    let trivial = ClassFunction::trivial(g);
    characters.sort_by(|x, y| {
        let dx = x.degree().to_integer();
        let dy = y.degree().to_integer();
        dx.cmp(&dy).then_with(|| (*y == trivial).cmp(&(*x == trivial))).then_with(|| y.values().cmp(x.values()))
    });

    // exact orthonormality
    for (i, x) in characters.iter().enumerate() {
        for (j, y) in characters.iter().enumerate().skip(i) {
            let ip = super::inner_product(g, x, y)?;
            let want = i128::from(i == j);
            if ip.to_integer() != Some(want) {
                return Err(Error::InternalInconsistency(format!("(χ{i}, χ{j}) = {ip}, expected {want}")));
            }
        }
    }
    let sum_sq: i128 = characters.iter().map(|c| c.degree().to_integer().unwrap().pow(2)).sum();
    if sum_sq != n as i128 {
        return Err(Error::InternalInconsistency(format!("sum of squared degrees {sum_sq} != {n}")));
    }

    Ok(CharTable {
        group: g.id(),
        group_name: g.display_name(),
        order: n,
        class_sizes: sizes,
        representative_orders: cd.representatives().iter().map(|&x| g.element_order(x)).collect(),
        power_maps: power_maps_by_prime(g),
        conductor: m,
        prime: l,
        characters,
    })
}
