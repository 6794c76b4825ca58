//! Word-sized modular arithmetic shared by the prime-field domains and the
//! modular resultant kernel.

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime `p`; `None` for zero.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller-Rabin for all 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime divisors of `n`, ascending, by trial division.
pub fn prime_factors_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of `a` modulo the prime `p`.
pub fn multiplicative_order(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let mut ord = p - 1;
    for q in prime_factors_u64(p - 1) {
        while ord.is_multiple_of(q) && pow_mod(a, ord / q, p) == 1 {
            ord /= q;
        }
    }
    Some(ord)
}

/// Smallest generator of the multiplicative group of `F_p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors_u64(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("a prime field has a primitive root")
}

/// Odd primes in `[lo, hi]`, ascending.
pub fn odd_primes_between(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo.max(3)..=hi).filter(|&n| n % 2 == 1 && is_prime_u64(n))
}

/// Interpolation primes: descending from 2^31, all above 2^30.
pub fn large_primes() -> impl Iterator<Item = u64> {
    let lo = 1u64 << 30;
    (lo..(1u64 << 31))
        .rev()
        .filter(|&n| n % 2 == 1 && is_prime_u64(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_range() {
        let sieve: Vec<u64> = (0..200).filter(|&n| is_prime_u64(n)).collect();
        let naive: Vec<u64> = (0..200u64)
            .filter(|&n| n >= 2 && (2..n).all(|d| n % d != 0))
            .collect();
        assert_eq!(sieve, naive);
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(3_215_031_751));
    }

    #[test]
    fn inverses_and_orders() {
        for a in 1..17 {
            assert_eq!(mul_mod(a, inv_mod(a, 17).unwrap(), 17), 1);
        }
        assert_eq!(inv_mod(0, 17), None);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(prime_factors_u64(360), vec![2, 3, 5]);
    }
}
