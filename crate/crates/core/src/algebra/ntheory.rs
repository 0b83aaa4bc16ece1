//! Small number-theoretic helpers on machine integers.

use num_integer::Integer;

/// Divisors of `n` in ascending order. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            low.push(i);
            if i != n / i {
                high.push(n / i);
            }
        }
        i += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// Prime factorisation as `(prime, exponent)` pairs, primes ascending.
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

/// The Möbius function. Panics on `n == 0`.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius: n must be positive");
    let mut sign = 1;
    for (_, e) in factorize(n) {
        if e > 1 {
            return 0;
        }
        sign = -sign;
    }
    sign
}

/// Euler's totient. Panics on `n == 0`.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient: n must be positive");
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// gcd of a list; the gcd of the empty list is 0.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |g, &v| g.gcd(&v))
}

/// lcm of a list; the lcm of the empty list is 1.
pub fn lcm_all(values: &[u64]) -> u64 {
    values.iter().fold(1, |l, &v| l.lcm(&v))
}
