//! Polynomials over GF(2) packed into `u64`, bit `i` holding the coefficient of `z^i`.

pub(crate) fn degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

/// Carry-less product. Both operands must have degree below 32.
pub(crate) fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

pub(crate) fn rem(mut a: u64, modulus: u64) -> u64 {
    let dm = degree(modulus).expect("zero modulus");
    while let Some(da) = degree(a) {
        if da < dm {
            break;
        }
        a ^= modulus << (da - dm);
    }
    a
}

pub(crate) fn mulmod(a: u64, b: u64, modulus: u64) -> u64 {
    rem(clmul(a, b), modulus)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn proper_divisors(n: u32) -> Vec<u32> {
    (1..n).filter(|k| n % k == 0).collect()
}

/// Rabin-style irreducibility test: `z^(2^n) ≡ z (mod p)` and
/// `gcd(z^(2^k) - z, p) = 1` for every proper divisor `k` of `n = deg p`.
pub(crate) fn is_irreducible(p: u64) -> bool {
    let n = match degree(p) {
        Some(0) | None => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let divisors = proper_divisors(n);
    let mut power = 0b10u64; // z^(2^0)
    for k in 1..=n {
        power = mulmod(power, power, p);
        if divisors.contains(&k) && gcd(p, power ^ 0b10) != 1 {
            return false;
        }
    }
    power == rem(0b10, p)
}

/// Distinct prime factors by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
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
