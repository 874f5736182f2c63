//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's class, subgroup or table code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use chardeg::{CharTable, Group};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Conjugacy classes by direct orbit computation, each sorted, listed in
/// order of their least element.
pub fn brute_classes(g: &Group) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let orbit: BTreeSet<usize> = (0..n).map(|y| g.mul(g.mul(y, x), g.inv(y))).collect();
        for &z in &orbit {
            seen[z] = true;
        }
        out.push(orbit.into_iter().collect());
    }
    out
}

/// Smallest subset containing `gens` and closed under multiplication.
pub fn closure(g: &Group, gens: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    set.insert(0);
    loop {
        let cur: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &cur {
            for &b in &cur {
                set.insert(g.mul(a, b));
            }
        }
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}

/// Every subgroup generated by at most `max_gens` elements.
pub fn subgroups_by_closure(g: &Group, max_gens: usize) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let mut out = BTreeSet::new();
    out.insert(vec![0]);
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_gens {
        let mut next = Vec::new();
        for gens in &frontier {
            let start = gens.last().map_or(0, |&l| l + 1);
            for x in start..n {
                let mut g2 = gens.clone();
                g2.push(x);
                out.insert(closure(g, &g2));
                next.push(g2);
            }
        }
        frontier = next;
    }
    out
}

/// Class multiplication coefficients `a[i][j][k]`: the number of pairs
/// `(x, y)` in `K_i x K_j` with `xy` equal to a fixed element of `K_k`.
fn class_coefficients(g: &Group, classes: &[Vec<usize>]) -> Vec<Vec<Vec<f64>>> {
    let r = classes.len();
    let mut class_of = vec![0; g.order()];
    for (c, cl) in classes.iter().enumerate() {
        for &x in cl {
            class_of[x] = c;
        }
    }
    let mut a = vec![vec![vec![0.0; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            for &x in &classes[i] {
                for &y in &classes[j] {
                    let k = class_of[g.mul(x, y)];
                    a[i][j][k] += 1.0;
                }
            }
            for k in 0..r {
                a[i][j][k] /= classes[k].len() as f64;
            }
        }
    }
    a
}

/// Character table by floating-point diagonalization of a random
/// combination of class matrices. Columns follow `brute_classes(g)`.
pub fn float_table(g: &Group, classes: &[Vec<usize>]) -> Vec<Vec<Complex64>> {
    let r = classes.len();
    let n = g.order() as f64;
    let a = class_coefficients(g, classes);
    // A_i[j][k] = a_ijk; the central characters are common right
    // eigenvectors with eigenvalue omega_i.
    let weights: Vec<f64> = (0..r).map(|i| 1.0 + (i as f64 * 0.7548776662).fract() * 3.1 + (i as f64).sqrt() * 0.37).collect();
    let m = DMatrix::from_fn(r, r, |j, k| (0..r).map(|i| weights[i] * a[i][j][k]).sum::<f64>());
    let lambdas = m.complex_eigenvalues();
    let mc: DMatrix<Complex64> = m.map(|x| Complex64::new(x, 0.0));
    let mut rows = Vec::new();
    for lambda in lambdas.iter() {
        let shifted = &mc - DMatrix::<Complex64>::identity(r, r) * *lambda;
        let svd = shifted.svd(false, true);
        let vt = svd.v_t.expect("right singular vectors");
        let (best, _) = svd
            .singular_values
            .iter()
            .enumerate()
            .min_by(|x, y| x.1.partial_cmp(y.1).unwrap())
            .unwrap();
        let v: Vec<Complex64> = (0..r).map(|k| vt[(best, k)].conj()).collect();
        let omega: Vec<Complex64> = v.iter().map(|x| x / v[0]).collect();
        let s: f64 = omega.iter().zip(classes).map(|(w, cl)| w.norm_sqr() / cl.len() as f64).sum();
        let d = (n / s).sqrt();
        rows.push(omega.iter().zip(classes).map(|(w, cl)| w * d / cl.len() as f64).collect());
    }
    rows
}

/// Largest entry-wise distance between the exact table and the float
/// oracle after matching rows, or `None` if some exact row has no float
/// counterpart within `tol`. Also requires the float degrees to round to
/// the exact ones.
pub fn compare_with_float(g: &Group, table: &CharTable, tol: f64) -> Option<f64> {
    let classes = brute_classes(g);
    let float = float_table(g, &classes);
    if float.len() != table.len() {
        return None;
    }
    let column: Vec<usize> = (0..classes.len())
        .map(|c| {
            let rep = g.classes().representative(c);
            classes.iter().position(|cl| cl.contains(&rep)).unwrap()
        })
        .collect();
    let mut used = vec![false; float.len()];
    let mut worst: f64 = 0.0;
    for chi in table.characters() {
        let exact: Vec<Complex64> = chi
            .values()
            .iter()
            .map(|v| {
                let (re, im) = v.to_complex();
                Complex64::new(re, im)
            })
            .collect();
        let mut hit = None;
        for (i, row) in float.iter().enumerate() {
            if used[i] {
                continue;
            }
            let deg = row[column[0]].re;
            if (deg.round() - deg).abs() > tol || deg.round() != exact[0].re.round() {
                continue;
            }
            let dist = exact.iter().enumerate().map(|(c, x)| (x - row[column[c]]).norm()).fold(0.0, f64::max);
            if dist <= tol {
                hit = Some((i, dist));
                break;
            }
        }
        let (i, dist) = hit?;
        used[i] = true;
        worst = worst.max(dist);
    }
    Some(worst)
}

/// Catalog groups of order at most `bound`, with their catalog labels.
pub fn catalog_up_to(bound: usize) -> Vec<(String, Group)> {
    let mut out = Vec::new();
    for &order in chardeg::families::CATALOG_ORDERS.iter().filter(|&&o| o <= bound) {
        for (i, g) in chardeg::families::small_group_catalog(order).unwrap().into_iter().enumerate() {
            out.push((format!("catalog:{order}/{}", i + 1), g));
        }
    }
    out
}
