//! Univariate factorization over 𝔽_p and ℚ.

pub mod zp;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::{Integer};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::upoly::UPoly;

/// Largest degree accepted by the factorization over ℚ.
pub const RATIONAL_DEGREE_CAP: usize = 24;

const EDF_SEED: u64 = 0x5eed;

/// Factors `q` into monic irreducibles with multiplicities. The product of
/// the factors raised to their multiplicities is `monic(q)`. Factors are
/// sorted by multiplicity, then degree, then coefficients.
pub fn factor_univariate(q: &UPoly) -> Result<Vec<(UPoly, usize)>> {
    let field = q.field().clone();
    match q.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok(Vec::new()),
        _ => {}
    }
    let mut out = match &field {
        Field::Prime(p) => factor_fp(q, *p as u64),
        Field::Rational => factor_q(q)?,
        Field::Function(_) => return Err(Error::UnsupportedField(format!("cannot factor over {field}"))),
    };
    out.sort_by(|(a, m), (b, n)| {
        m.cmp(n).then(a.degree().cmp(&b.degree())).then_with(|| a.to_string().cmp(&b.to_string()))
    });
    Ok(out)
}

fn to_zp(q: &UPoly) -> zp::Zp {
    let mut v: zp::Zp = q.coeffs().iter().map(|c| c.as_prime_value().unwrap() as u64).collect();
    zp::trim(&mut v);
    v
}

fn from_zp(field: &Field, v: &zp::Zp) -> UPoly {
    UPoly::new(field, v.iter().map(|&c| field.from_i64(c as i64)).collect())
}

fn factor_fp(q: &UPoly, p: u64) -> Vec<(UPoly, usize)> {
    let field = q.field();
    let f = zp::monic(&to_zp(q), p);
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    zp::factor_monic(&f, p, &mut rng).into_iter().map(|(g, m)| (from_zp(field, &g), m)).collect()
}

/// Yun's squarefree decomposition over a field of characteristic 0.
fn squarefree_char0(f: &UPoly) -> Vec<(UPoly, usize)> {
    let f = f.monic();
    let fp = f.derivative();
    let b = f.gcd(&fp);
    let mut c = f.div_exact(&b);
    let mut d = fp.div_exact(&b).sub(&c.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while c.degree().unwrap_or(0) > 0 {
        let a = c.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a);
        d = d.div_exact(&a).sub(&c.derivative());
        i += 1;
    }
    out
}

fn factor_q(q: &UPoly) -> Result<Vec<(UPoly, usize)>> {
    let d = q.degree().unwrap();
    if d > RATIONAL_DEGREE_CAP {
        return Err(Error::DegreeCapExceeded(d, RATIONAL_DEGREE_CAP));
    }
    let field = q.field();
    let mut out = Vec::new();
    for (g, m) in squarefree_char0(q) {
        for h in factor_squarefree_z(&primitive_integer(&g)) {
            let coeffs: Vec<FieldElement> =
                h.iter().map(|c| FieldElement::Rational(BigRational::from_integer(c.clone()))).collect();
            out.push((UPoly::new(field, coeffs).monic(), m));
        }
    }
    Ok(out)
}

type ZPoly = Vec<BigInt>;

fn primitive_integer(g: &UPoly) -> ZPoly {
    let qs: Vec<BigRational> = g.coeffs().iter().map(|c| c.as_rational().unwrap()).collect();
    let den = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: ZPoly = qs.iter().map(|q| (q * BigRational::from_integer(den.clone())).to_integer()).collect();
    primitive_part(&ints)
}

fn primitive_part(a: &ZPoly) -> ZPoly {
    let c = a.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if a.last().is_some_and(|l| l.is_negative()) { -BigInt::one() } else { BigInt::one() };
    a.iter().map(|x| x / &c * &sign).collect()
}

fn ztrim(a: &mut ZPoly) {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    ztrim(&mut c);
    c
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let mut c: ZPoly = (0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect();
    ztrim(&mut c);
    c
}

fn zmod(a: &ZPoly, m: &BigInt) -> ZPoly {
    let mut c: ZPoly = a.iter().map(|x| x.mod_floor(m)).collect();
    ztrim(&mut c);
    c
}

fn symmetric(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut c: ZPoly = a
        .iter()
        .map(|x| {
            let r = x.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    ztrim(&mut c);
    c
}

fn to_p(a: &ZPoly, p: u64) -> zp::Zp {
    let pb = BigInt::from(p);
    let mut v: zp::Zp = a.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect();
    zp::trim(&mut v);
    v
}

fn from_p(a: &zp::Zp) -> ZPoly {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

/// Exact division in ℤ[x].
fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - db];
    let lb = b.last().unwrap();
    for i in (0..q.len()).rev() {
        let (k, rest) = r[i + db].div_rem(lb);
        if !rest.is_zero() {
            return None;
        }
        if k.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] -= &k * y;
        }
        q[i] = k;
    }
    if r.iter().any(|x| !x.is_zero()) {
        return None;
    }
    ztrim(&mut q);
    Some(q)
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Factors a squarefree primitive integer polynomial into primitive
/// irreducibles with positive leading coefficients.
fn factor_squarefree_z(f: &ZPoly) -> Vec<ZPoly> {
    let d = f.len() - 1;
    if d <= 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().clone();
    let p = small_primes()
        .find(|&p| {
            if (&lc % BigInt::from(p)).is_zero() {
                return false;
            }
            let fp = to_p(f, p);
            zp::deg(&zp::gcd(&fp, &zp::derivative(&fp, p), p)) == Some(0)
        })
        .unwrap();
    let fbar = zp::monic(&to_p(f, p), p);
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    let modular: Vec<zp::Zp> = zp::factor_monic(&fbar, p, &mut rng).into_iter().map(|(g, _)| g).collect();
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // coefficient bound for factors of lc·f
    let norm = f.iter().map(|c| c * c).fold(BigInt::zero(), |a, b| a + b).sqrt() + 1;
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << d) * norm;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_lift_all(f, &modular, p, k);
    recombine(f, lifted, &pk)
}

/// Lifts `f ≡ lc(f)·Π factors (mod p)` to monic factors modulo `p^k`.
fn hensel_lift_all(f: &ZPoly, factors: &[zp::Zp], p: u64, k: u32) -> Vec<ZPoly> {
    let pk = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let inv = lc.modinv(&pk).unwrap();
        return vec![zmod(&f.iter().map(|c| c * &inv).collect(), &pk)];
    }
    let g = &factors[0];
    let mut h = vec![1u64];
    for q in &factors[1..] {
        h = zp::mul(&h, q, p);
    }
    let (g, h) = hensel_two(f, g, &h, p, k);
    let mut out = vec![g];
    out.extend(hensel_lift_all(&h, &factors[1..], p, k));
    out
}

/// Lifts `f ≡ g·lc(f)·h (mod p)` with `g`, `h` monic and coprime to
/// `f ≡ G·H (mod p^k)`, `G` monic.
fn hensel_two(f: &ZPoly, g: &zp::Zp, h: &zp::Zp, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let pb = BigInt::from(p);
    let lc = f.last().unwrap().clone();
    let mut gz = from_p(g);
    let lc_p = lc.mod_floor(&pb).to_u64().unwrap();
    let mut hz = from_p(&zp::scale(h, lc_p, p));
    *hz.last_mut().unwrap() = lc.clone();
    let hbar = to_p(&hz, p);
    let (_, _, t) = zp::ext_gcd(g, &hbar, p);
    let mut q = pb.clone();
    for _ in 1..k {
        let diff = zsub(f, &zmul(&gz, &hz));
        let e: ZPoly = diff.iter().map(|c| c / &q).collect();
        let ebar = to_p(&e, p);
        let gbar = to_p(&gz, p);
        let hb = to_p(&hz, p);
        let dg = zp::rem(&zp::mul(&t, &ebar, p), &gbar, p);
        let (dh, r) = zp::div_rem(&zp::sub(&ebar, &zp::mul(&hb, &dg, p), p), &gbar, p);
        debug_assert!(r.is_empty());
        let next = &q * &pb;
        gz = zmod(&add_scaled(&gz, &from_p(&dg), &q), &next);
        hz = add_scaled(&hz, &from_p(&dh), &q);
        // keep lc(h) = lc(f) exactly while reducing the rest
        let top = hz.len() - 1;
        for c in hz[..top].iter_mut() {
            *c = c.mod_floor(&next);
        }
        hz[top] = lc.clone();
        q = next;
    }
    (gz, hz)
}

fn add_scaled(a: &ZPoly, b: &ZPoly, k: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    (0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z) * k).collect()
}

fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, pk: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut cur = f.clone();
    let mut s = 1;
    'outer: while 2 * s <= lifted.len() {
        for subset in (0..lifted.len()).combinations(s) {
            let lc = cur.last().unwrap().clone();
            let mut g: ZPoly = vec![lc];
            for &i in &subset {
                g = zmod(&zmul(&g, &lifted[i]), pk);
            }
            let g = primitive_part(&symmetric(&g, pk));
            if let Some(q) = zdiv_exact(&cur, &g) {
                out.push(g);
                cur = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        s += 1;
    }
    if cur.len() > 1 {
        out.push(primitive_part(&cur));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> UPoly {
        UPoly::from_i64(&Field::Rational, c)
    }

    fn product(fs: &[(UPoly, usize)]) -> UPoly {
        let mut acc = UPoly::one(&Field::Rational);
        for (g, m) in fs {
            for _ in 0..*m {
                acc = acc.mul(g);
            }
        }
        acc
    }

    #[test]
    fn rational_basics() {
        assert_eq!(factor_univariate(&q(&[-1, -1, 0, 1])).unwrap(), vec![(q(&[-1, -1, 0, 1]), 1)]);
        assert_eq!(factor_univariate(&q(&[0, -1, 1])).unwrap(), vec![(q(&[0, 1]), 1), (q(&[-1, 1]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_style_recombination() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
        let f = q(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_univariate(&f).unwrap(), vec![(f.clone(), 1)]);
        // (x^2 - 2)(x^2 - 3)(x + 5)^2 (3x - 1)
        let g = q(&[-2, 0, 1]).mul(&q(&[-3, 0, 1])).mul(&q(&[5, 1])).mul(&q(&[5, 1])).mul(&q(&[-1, 3]));
        let fs = factor_univariate(&g).unwrap();
        assert_eq!(fs.len(), 4);
        assert_eq!(product(&fs), g.monic());
    }

    #[test]
    fn degree_cap() {
        let mut c = vec![0i64; 26];
        c[25] = 1;
        c[0] = 1;
        assert_eq!(factor_univariate(&q(&c)), Err(Error::DegreeCapExceeded(25, 24)));
    }

    #[test]
    fn function_field_is_rejected() {
        let k = Field::function(["c"]);
        let f = UPoly::new(&k, vec![k.one(), k.one()]);
        assert!(matches!(factor_univariate(&f), Err(Error::UnsupportedField(_))));
    }
}
