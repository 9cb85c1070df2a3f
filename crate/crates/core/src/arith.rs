//! Small number-theoretic helpers shared by the group and graph code.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorisation by trial division, as `(prime, exponent)` pairs in
/// increasing prime order. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The set of primes dividing `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// If `n` is `p^k` with `k >= 1`, returns `p`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient is defined for positive integers");
    factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Multiplicative order of `k` modulo `m`, if `k` is a unit.
pub fn multiplicative_order(k: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(k % m, m) != 1 {
        return None;
    }
    let mut x = k % m;
    let mut ord = 1;
    while x != 1 {
        x = x * (k % m) % m;
        ord += 1;
    }
    Some(ord)
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_totient(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn totient_matches_brute_force() {
        assert_eq!(totient(1), 1);
        assert_eq!(brute_totient(6), 2);
        assert_eq!(totient(6), 2);
        assert_eq!(brute_totient(9), 6);
        assert_eq!(totient(9), 6);
        for n in 1..=500 {
            assert_eq!(totient(n), brute_totient(n), "n = {n}");
        }
    }

    #[test]
    fn factorize_reassembles() {
        for n in 1..=2000u64 {
            let back: u64 = factorize(n).iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(back, n);
            assert!(factorize(n).iter().all(|&(p, _)| is_prime(p)));
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power_base(1), None);
        assert_eq!(prime_power_base(8), Some(2));
        assert_eq!(prime_power_base(27), Some(3));
        assert_eq!(prime_power_base(12), None);
    }

    #[test]
    fn unit_orders() {
        assert_eq!(multiplicative_order(3, 8), Some(2));
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(2, 4), None);
        assert_eq!(pow_mod(2, 10, 1000), 24);
        assert_eq!(lcm(4, 6), 12);
    }
}
