//! Polynomials over 𝔽_p as `u64` vectors, constant term first.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Zp = Vec<u64>;

pub fn trim(a: &mut Zp) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn pow_mod_int(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod_int(a, p - 2, p)
}

pub fn deg(a: &Zp) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn is_one(a: &Zp) -> bool {
    a.len() == 1 && a[0] == 1
}

pub fn add(a: &Zp, b: &Zp, p: u64) -> Zp {
    let n = a.len().max(b.len());
    let mut c: Zp = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut c);
    c
}

pub fn sub(a: &Zp, b: &Zp, p: u64) -> Zp {
    let n = a.len().max(b.len());
    let mut c: Zp = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut c);
    c
}

pub fn mul(a: &Zp, b: &Zp, p: u64) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % p;
        }
    }
    trim(&mut c);
    c
}

pub fn scale(a: &Zp, k: u64, p: u64) -> Zp {
    let mut c: Zp = a.iter().map(|&x| x * k % p).collect();
    trim(&mut c);
    c
}

pub fn monic(a: &Zp, p: u64) -> Zp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => scale(a, inv(l, p), p),
    }
}

pub fn div_rem(a: &Zp, d: &Zp, p: u64) -> (Zp, Zp) {
    let dd = deg(d).expect("division by zero polynomial");
    let li = inv(d[dd], p);
    let mut r = a.clone();
    if r.len() <= dd {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - dd];
    for i in (0..q.len()).rev() {
        let k = r[i + dd] * li % p;
        if k == 0 {
            continue;
        }
        for (j, &y) in d.iter().enumerate() {
            r[i + j] = (r[i + j] + p - k * y % p) % p;
        }
        q[i] = k;
    }
    r.truncate(dd);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub fn rem(a: &Zp, d: &Zp, p: u64) -> Zp {
    div_rem(a, d, p).1
}

pub fn gcd(a: &Zp, b: &Zp, p: u64) -> Zp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn ext_gcd(a: &Zp, b: &Zp, p: u64) -> (Zp, Zp, Zp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let l = inv(*r0.last().unwrap(), p);
    (scale(&r0, l, p), scale(&s0, l, p), scale(&t0, l, p))
}

pub fn derivative(a: &Zp, p: u64) -> Zp {
    let mut c: Zp = a.iter().enumerate().skip(1).map(|(i, &x)| (i as u64 % p) * x % p).collect();
    trim(&mut c);
    c
}

pub fn pow_mod(base: &Zp, mut e: u128, m: &Zp, p: u64) -> Zp {
    let mut acc = rem(&vec![1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        e >>= 1;
        if e > 0 {
            b = rem(&mul(&b, &b, p), m, p);
        }
    }
    acc
}

/// Squarefree decomposition of a monic polynomial: `(factor, multiplicity)`.
pub fn squarefree(f: &Zp, p: u64) -> Vec<(Zp, usize)> {
    let mut out = Vec::new();
    sqf_rec(f, p, 1, &mut out);
    out.sort_by_key(|(_, m)| *m);
    out
}

fn pth_root(f: &Zp, p: u64) -> Zp {
    // coefficients are fixed by Frobenius in the prime field
    f.iter().step_by(p as usize).copied().collect()
}

fn sqf_rec(f: &Zp, p: u64, mult: usize, out: &mut Vec<(Zp, usize)>) {
    if deg(f).unwrap_or(0) == 0 {
        return;
    }
    let fp = derivative(f, p);
    if fp.is_empty() {
        sqf_rec(&pth_root(f, p), p, mult * p as usize, out);
        return;
    }
    let mut c = gcd(f, &fp, p);
    let mut w = div_rem(f, &c, p).0;
    let mut i = 1;
    while !is_one(&w) {
        let y = gcd(&w, &c, p);
        let z = div_rem(&w, &y, p).0;
        if deg(&z).unwrap_or(0) > 0 {
            out.push((monic(&z, p), i * mult));
        }
        i += 1;
        w = y;
        c = div_rem(&c, &w, p).0;
    }
    if !is_one(&c) {
        sqf_rec(&pth_root(&c, p), p, mult * p as usize, out);
    }
}

/// Distinct-degree factorization of a squarefree monic polynomial.
pub fn distinct_degree(f: &Zp, p: u64) -> Vec<(Zp, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = vec![0, 1];
    let mut h = rem(&x, &f, p);
    let mut i = 0;
    while deg(&f).unwrap_or(0) >= 2 * (i + 1) {
        i += 1;
        h = pow_mod(&h, p as u128, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if !is_one(&g) {
            f = div_rem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, i));
        }
    }
    if deg(&f).unwrap_or(0) > 0 {
        let d = deg(&f).unwrap();
        out.push((f, d));
    }
    out
}

fn random_poly(n: usize, p: u64, rng: &mut ChaCha8Rng) -> Zp {
    let mut a: Zp = (0..n).map(|_| rng.gen_range(0..p)).collect();
    trim(&mut a);
    a
}

/// Splits a product of distinct monic irreducibles of degree `d`.
pub fn equal_degree(f: &Zp, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Zp> {
    let n = deg(f).unwrap();
    if n == d {
        return vec![f.clone()];
    }
    loop {
        let a = random_poly(n, p, rng);
        if deg(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace a + a^2 + … + a^(2^(d-1))
            let mut t = a.clone();
            let mut s = rem(&a, f, p);
            for _ in 1..d {
                s = rem(&mul(&s, &s, p), f, p);
                t = add(&t, &s, p);
            }
            rem(&t, f, p)
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + … + p^(d-1)))^((p-1)/2)
            let mut r = rem(&a, f, p);
            let mut s = r.clone();
            for _ in 1..d {
                s = pow_mod(&s, p as u128, f, p);
                r = rem(&mul(&r, &s, p), f, p);
            }
            sub(&pow_mod(&r, ((p - 1) / 2) as u128, f, p), &vec![1], p)
        };
        let g = gcd(&b, f, p);
        let dg = deg(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let h = div_rem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&monic(&h, p), d, p, rng));
            return out;
        }
    }
}

/// Complete factorization of a monic polynomial into monic irreducibles.
pub fn factor_monic(f: &Zp, p: u64, rng: &mut ChaCha8Rng) -> Vec<(Zp, usize)> {
    let mut out = Vec::new();
    for (g, m) in squarefree(f, p) {
        for (h, d) in distinct_degree(&g, p) {
            for q in equal_degree(&h, d, p, rng) {
                out.push((q, m));
            }
        }
    }
    out.sort();
    out
}

/// Irreducibility of a monic squarefree polynomial via its distinct-degree
/// signature.
pub fn is_irreducible(f: &Zp, p: u64) -> bool {
    let Some(n) = deg(f) else { return false };
    if n == 0 {
        return false;
    }
    let sqf = squarefree(f, p);
    sqf.len() == 1 && sqf[0].1 == 1 && {
        let dd = distinct_degree(f, p);
        dd.len() == 1 && dd[0].1 == n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn frobenius_polynomial_splits_completely() {
        let p = 7;
        let mut f = vec![0u64; 8];
        f[7] = 1;
        f[1] = p - 1;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fs = factor_monic(&f, p, &mut rng);
        assert_eq!(fs.len(), 7);
        assert!(fs.iter().all(|(g, m)| g.len() == 2 && *m == 1));
    }

    #[test]
    fn inseparable_powers() {
        let p = 5;
        // (x + 1)^5 · (x^2 + 2)
        let mut f = vec![1u64];
        for _ in 0..5 {
            f = mul(&f, &vec![1, 1], p);
        }
        f = mul(&f, &vec![2, 0, 1], p);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fs = factor_monic(&f, p, &mut rng);
        assert_eq!(fs, vec![(vec![1, 1], 5), (vec![2, 0, 1], 1)]);
        assert!(is_irreducible(&vec![2, 0, 1], p));
    }

    #[test]
    fn characteristic_two() {
        let p = 2;
        // x^4 + x = x (x + 1) (x^2 + x + 1)
        let f = vec![0, 1, 0, 0, 1];
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let fs = factor_monic(&f, p, &mut rng);
        assert_eq!(fs, vec![(vec![0, 1], 1), (vec![1, 1], 1), (vec![1, 1, 1], 1)]);
    }
}
