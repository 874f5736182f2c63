//! Arithmetic and dense linear algebra over a prime field `F_l`.
//!
//! Moduli are kept below 2^32 so that every product fits in a `u64`.
//! Matrices are row-major `Vec<Vec<u64>>` with entries already reduced.

pub type Matrix = Vec<Vec<u64>>;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factors of `n` in increasing order, without multiplicity.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Returns `(p, k)` with `n = p^k`, `k >= 1`, if `n` is a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = prime_factors(n);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        m /= p;
        k += 1;
    }
    Some((p, k))
}

/// Exponent of `p` in `n`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

#[inline]
pub fn mul(a: u64, b: u64, l: u64) -> u64 {
    a * b % l
}

#[inline]
pub fn add(a: u64, b: u64, l: u64) -> u64 {
    let s = a + b;
    if s >= l {
        s - l
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, l: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + l - b
    }
}

pub fn pow(mut base: u64, mut exp: u64, l: u64) -> u64 {
    let mut acc = 1 % l;
    base %= l;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, l);
        }
        base = mul(base, base, l);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `l`.
pub fn inv(a: u64, l: u64) -> u64 {
    debug_assert!(a % l != 0, "inverse of zero");
    pow(a, l - 2, l)
}

/// Reduce a signed integer into `0..l`.
pub fn from_i128(a: i128, l: u64) -> u64 {
    a.rem_euclid(l as i128) as u64
}

/// Smallest generator of the multiplicative group of `F_l`.
pub fn primitive_root(l: u64) -> u64 {
    if l == 2 {
        return 1;
    }
    let factors = prime_factors(l - 1);
    (2..l)
        .find(|&g| factors.iter().all(|&q| pow(g, (l - 1) / q, l) != 1))
        .expect("a prime field has a primitive root")
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix, l: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let s = inv(m[r][c], l);
        for x in m[r].iter_mut() {
            *x = mul(*x, s, l);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in c..cols {
                    let t = mul(f, m[r][j], l);
                    m[i][j] = sub(m[i][j], t, l);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank(m: &Matrix, l: u64) -> usize {
    let mut m = m.clone();
    rref(&mut m, l).len()
}

/// Basis (as rows) of the right null space `{v : m v = 0}`.
pub fn nullspace(m: &Matrix, cols: usize, l: u64) -> Matrix {
    let mut r = m.clone();
    let pivots = rref(&mut r, l);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = sub(0, row[f], l);
            }
            v
        })
        .collect()
}

/// `a * b` for compatible matrices.
pub fn mat_mul(a: &Matrix, b: &Matrix, l: u64) -> Matrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            let mut out = vec![0u64; cols];
            for k in 0..inner {
                if row[k] == 0 {
                    continue;
                }
                for (o, &bv) in out.iter_mut().zip(&b[k]) {
                    *o = (*o + row[k] * bv) % l;
                }
            }
            out
        })
        .collect()
}

/// Characteristic polynomial `det(xI - m)`, coefficients low degree first,
/// via Hessenberg reduction.
pub fn charpoly(m: &Matrix, l: u64) -> Vec<u64> {
    let n = m.len();
    let mut h = m.clone();
    // reduce to upper Hessenberg form by similarity transforms
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if p != j + 1 {
            h.swap(p, j + 1);
            for row in h.iter_mut() {
                row.swap(p, j + 1);
            }
        }
        let pinv = inv(h[j + 1][j], l);
        for i in j + 2..n {
            if h[i][j] == 0 {
                continue;
            }
            let f = mul(h[i][j], pinv, l);
            for c in 0..n {
                let t = mul(f, h[j + 1][c], l);
                h[i][c] = sub(h[i][c], t, l);
            }
            for row in h.iter_mut() {
                let t = mul(f, row[i], l);
                row[j + 1] = add(row[j + 1], t, l);
            }
        }
    }
    // recurrence for the characteristic polynomials of leading principal blocks
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // p_{k+1} = (x - h[k][k]) p_k - sum_{i<k} h[i][k] * prod_{j=i+1..k} h[j][j-1] * p_i
        let mut next = vec![0u64; k + 2];
        for (d, &c) in polys[k].iter().enumerate() {
            next[d + 1] = add(next[d + 1], c, l);
            next[d] = sub(next[d], mul(c, h[k][k], l), l);
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul(prod, h[i + 1][i], l);
            let coef = mul(h[i][k], prod, l);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub(next[d], mul(coef, c, l), l);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub fn poly_eval(p: &[u64], x: u64, l: u64) -> u64 {
    p.iter().rev().fold(0, |acc, &c| add(mul(acc, x, l), c, l))
}

/// Distinct roots of `p` in `F_l`, by exhaustive evaluation.
pub fn roots(p: &[u64], l: u64) -> Vec<u64> {
    (0..l).filter(|&x| poly_eval(p, x, l) == 0).collect()
}
