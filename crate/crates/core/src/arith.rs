//! Small integer helpers shared across modules.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`. `a` must be nonzero mod p.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Multiplicative order of `a` modulo `n`, for gcd(a, n) = 1.
pub fn mult_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut k = 1;
    let mut x = a % n;
    while x != 1 {
        x = ((x as u128 * a as u128) % n as u128) as u64;
        k += 1;
    }
    k
}

/// If `q` is a positive power of `p`, returns the exponent.
pub fn log_exact(q: u64, p: u64) -> Option<usize> {
    if p < 2 || q < p {
        return None;
    }
    let mut n = 0;
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
        n += 1;
    }
    (x == 1).then_some(n)
}

/// Classification of a positive integer as a prime power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PGroupKind {
    No,
    Yes(u64),
    Trivial,
}

pub fn classify_order(order: usize) -> PGroupKind {
    if order == 1 {
        return PGroupKind::Trivial;
    }
    let f = factorize(order as u64);
    if f.len() == 1 {
        PGroupKind::Yes(f[0].0)
    } else {
        PGroupKind::No
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_number_theory() {
        assert!(is_prime(2) && is_prime(97) && !is_prime(1) && !is_prime(91));
        assert_eq!(factorize(1533), vec![(3, 1), (7, 1), (73, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(mult_order(2, 7), 3);
        assert_eq!(log_exact(8, 2), Some(3));
        assert_eq!(log_exact(6, 2), None);
        assert_eq!(classify_order(1), PGroupKind::Trivial);
        assert_eq!(classify_order(8), PGroupKind::Yes(2));
        assert_eq!(classify_order(6), PGroupKind::No);
    }
}
