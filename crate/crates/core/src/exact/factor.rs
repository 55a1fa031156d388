//! Factorization over the rationals: modular factorization (distinct-degree
//! plus Cantor-Zassenhaus), Hensel lifting and factor recombination.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::UPoly;
use crate::error::{Error, Result};

/// Monic irreducible factors with multiplicities, sorted by degree and then
/// coefficients. The product of `factor^mult` equals `f` up to a rational unit.
pub fn factor_rational(f: &UPoly) -> Result<Vec<(UPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for g in factor_squarefree(&part) {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
    Ok(out)
}

fn cmp_poly(a: &UPoly, b: &UPoly) -> std::cmp::Ordering {
    a.deg().cmp(&b.deg()).then_with(|| {
        for k in (0..=a.deg()).rev() {
            let o = a.coeff(k).cmp(&b.coeff(k));
            if o.is_ne() {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// Irreducible monic factors of a squarefree polynomial of degree >= 1.
pub fn factor_squarefree(f: &UPoly) -> Vec<UPoly> {
    let f = f.monic();
    if f.deg() <= 1 {
        return vec![f];
    }
    let mut out = Vec::new();
    let mut f = f;
    // Split off x, which keeps the constant term nonzero below.
    if f.coeff(0).is_zero() {
        out.push(UPoly::x());
        f = f.exact_quo(&UPoly::x());
        if f.deg() == 0 {
            return out;
        }
    }
    if f.deg() == 1 {
        out.push(f);
        return out;
    }
    let big = f.primitive_integer();
    for g in zassenhaus(&big) {
        out.push(UPoly::from_bigints(&g).monic());
    }
    out
}

type IPoly = Vec<BigInt>;

fn zassenhaus(f: &IPoly) -> Vec<IPoly> {
    let n = f.len() - 1;
    let lc = f[n].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    // Pick the prime giving the fewest modular factors among a few candidates.
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce(f, p);
        if fp_gcd(&fp, &fp_deriv(&fp, p), p).len() > 1 {
            continue;
        }
        let facs = fp_factor(&fp, p, &mut rng);
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().map_or(true, |(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, modular) = best.expect("no suitable prime");

    // p^k > 2 |lc| 2^n (n+1) |f|_inf bounds every coefficient of lc * factor.
    let norm = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * BigInt::from(n + 1) * norm;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, &modular, p, k);
    recombine(f.clone(), lifted, &pk)
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..2000).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

// ---- polynomials over F_p, lowest degree first, trimmed ----

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn reduce(f: &IPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
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
    trim(c)
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty());
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let inv = inv_mod(*b.last().unwrap(), p);
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * bj % p) % p;
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    fp_divrem(a, b, p).1
}

fn fp_monic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|x| x * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// `(s, t)` with `s*a + t*b = 1` for coprime `a`, `b`.
fn fp_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(r0.len(), 1, "factors not coprime mod p");
    let inv = inv_mod(r0[0], p);
    let sc = |v: Vec<u64>| trim(v.into_iter().map(|x| x * inv % p).collect());
    (sc(s0), sc(t0))
}

fn fp_deriv(a: &[u64], p: u64) -> Vec<u64> {
    trim(a.iter().enumerate().skip(1).map(|(k, &c)| (k as u64 % p) * c % p).collect())
}

fn fp_powmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let base = fp_rem(base, m, p);
    for i in (0..e.bits()).rev() {
        result = fp_rem(&fp_mul(&result, &result, p), m, p);
        if e.bit(i) {
            result = fp_rem(&fp_mul(&result, &base, p), m, p);
        }
    }
    result
}

/// Monic irreducible factors of a squarefree polynomial over F_p.
fn fp_factor(f: &[u64], p: u64, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    let f = fp_monic(f, p);
    let mut out = Vec::new();
    for (g, d) in fp_ddf(&f, p) {
        fp_edf(&g, d, p, rng, &mut out);
    }
    out
}

fn fp_ddf(f: &[u64], p: u64) -> Vec<(Vec<u64>, usize)> {
    let x = vec![0u64, 1];
    let pe = BigUint::from(p);
    let mut res = Vec::new();
    let mut f = f.to_vec();
    let mut h = fp_rem(&x, &f, p);
    let mut i = 1;
    while f.len() - 1 >= 2 * i {
        h = fp_powmod(&h, &pe, &f, p);
        let g = fp_gcd(&fp_sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            f = fp_divrem(&f, &g, p).0;
            h = fp_rem(&h, &f, p);
            res.push((g, i));
        }
        i += 1;
    }
    if f.len() > 1 {
        let d = f.len() - 1;
        res.push((f, d));
    }
    res
}

fn fp_edf(g: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Vec<u64>>) {
    let n = g.len() - 1;
    if n == d {
        out.push(g.to_vec());
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Vec<u64> = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &e, g, p), &[1], p);
        let h = fp_gcd(&b, g, p);
        if h.len() > 1 && h.len() < g.len() {
            let q = fp_divrem(g, &h, p).0;
            fp_edf(&h, d, p, rng, out);
            fp_edf(&fp_monic(&q, p), d, p, rng, out);
            return;
        }
    }
}

// ---- Hensel lifting over Z/p^k ----

fn to_big(a: &[u64]) -> IPoly {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

fn big_mul(a: &IPoly, b: &IPoly, m: &BigInt) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c.into_iter().map(|x| x.mod_floor(m)).collect()
}

fn big_sub(a: &IPoly, b: &IPoly, m: &BigInt) -> IPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            (x - y).mod_floor(m)
        })
        .collect()
}

/// Lifts `f = lc * prod g_i (mod p)` to monic `g_i` modulo `p^k`.
fn hensel_lift(f: &IPoly, gs: &[Vec<u64>], p: u64, k: u32) -> Vec<IPoly> {
    let pb = BigInt::from(p);
    let pk = pb.pow(k);
    let lc = f.last().unwrap().clone();
    let mut target: IPoly = f.iter().map(|c| c.mod_floor(&pk)).collect();
    let mut out = Vec::new();
    for i in 0..gs.len() - 1 {
        let g0 = &gs[i];
        let mut h0 = vec![lc.mod_floor(&pb).to_u64().unwrap()];
        for g in &gs[i + 1..] {
            h0 = fp_mul(&h0, g, p);
        }
        let (_, t) = fp_ext_gcd(g0, &h0, p);
        let mut g = to_big(g0);
        let mut h = to_big(&h0);
        let mut pj = pb.clone();
        for _ in 1..k {
            let next = &pj * &pb;
            let diff = big_sub(&target, &big_mul(&g, &h, &next), &next);
            let e: Vec<u64> = trim(diff.iter().map(|c| (c / &pj).mod_floor(&pb).to_u64().unwrap()).collect());
            let tau = fp_rem(&fp_mul(&t, &e, p), g0, p);
            let sigma = fp_divrem(&fp_sub(&e, &fp_mul(&tau, &h0, p), p), g0, p).0;
            let step = |v: &IPoly, dv: &[u64]| -> IPoly {
                let n = v.len().max(dv.len());
                (0..n)
                    .map(|j| {
                        let a = v.get(j).cloned().unwrap_or_default();
                        let b = dv.get(j).map(|&x| BigInt::from(x)).unwrap_or_default();
                        (a + b * &pj).mod_floor(&next)
                    })
                    .collect()
            };
            g = step(&g, &tau);
            h = step(&h, &sigma);
            pj = next;
        }
        out.push(g);
        target = h;
    }
    // The last factor is target / lc, made monic modulo p^k.
    let inv = lc.mod_floor(&pk).modinv(&pk).expect("lc invertible mod p^k");
    out.push(target.iter().map(|c| (c * &inv).mod_floor(&pk)).collect());
    out
}

fn symmetric(a: &IPoly, m: &BigInt) -> IPoly {
    let half = m / 2;
    let mut v: IPoly = a
        .iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn primitive(a: &IPoly) -> IPoly {
    let g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if a.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    a.iter().map(|c| c / &g * &sign).collect()
}

/// Exact quotient `a / b` over Z, or `None`.
fn int_divide(a: &IPoly, b: &IPoly) -> Option<IPoly> {
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(q)
}

fn recombine(mut f: IPoly, mut lifted: Vec<IPoly>, pk: &BigInt) -> Vec<IPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        let r = lifted.len();
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let lc = f.last().unwrap().clone();
            let mut cand = vec![lc.mod_floor(pk)];
            for &i in &combo {
                cand = big_mul(&cand, &lifted[i], pk);
            }
            let cand = primitive(&symmetric(&cand, pk));
            if let Some(q) = int_divide(&f, &cand) {
                out.push(cand);
                f = q;
                let mut keep = Vec::new();
                for (i, g) in lifted.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(g);
                    }
                }
                lifted = keep;
                found = true;
                break;
            }
            if !next_combination(&mut combo, r) {
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    out.push(primitive(&f));
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn fourth_roots_of_unity() {
        let f = factor_rational(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1), (p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn repeated_and_irreducible() {
        assert_eq!(factor_rational(&p(&[1, 0, 2, 0, 1])).unwrap(), vec![(p(&[1, 0, 1]), 2)]);
        assert_eq!(factor_rational(&p(&[-2, 0, 1])).unwrap(), vec![(p(&[-2, 0, 1]), 1)]);
        assert_eq!(factor_rational(&p(&[5])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn quartic_irreducible_mod_every_prime_splits() {
        // x^4 + 1 is irreducible over Q yet splits modulo every prime.
        assert_eq!(factor_rational(&p(&[1, 0, 0, 0, 1])).unwrap(), vec![(p(&[1, 0, 0, 0, 1]), 1)]);
        // x^4 - 10x^2 + 1, minimal polynomial of sqrt(2) + sqrt(3)
        assert_eq!(factor_rational(&p(&[1, 0, -10, 0, 1])).unwrap().len(), 1);
    }

    #[test]
    fn non_monic_products() {
        // (2x + 3)(3x^2 - 5)(x - 7)
        let f = &(&p(&[3, 2]) * &p(&[-5, 0, 3])) * &p(&[-7, 1]);
        let fac = factor_rational(&f).unwrap();
        assert_eq!(fac.len(), 3);
        let prod = fac.iter().fold(UPoly::one(), |acc, (g, _)| &acc * g);
        assert_eq!(prod, f.monic());
    }
}
