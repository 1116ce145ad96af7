//! Small integer helpers shared by the field, formula and scan code.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Returns `(p, k)` with `n = p^k`, `p` prime, `k >= 1`.
pub fn prime_power(n: u128) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > n {
        // n itself is prime
        return u64::try_from(n).ok().map(|n| (n, 1));
    }
    let mut rest = n;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p as u64, k))
}

pub fn is_prime_power(n: u128) -> bool {
    prime_power(n).is_some()
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

pub fn checked_pow(base: u128, exp: u32) -> Option<u128> {
    base.checked_pow(exp)
}

/// Multiplicative order of `a` modulo `m` (requires gcd(a, m) = 1).
pub fn mult_order(a: u64, m: u64) -> Option<u64> {
    if m < 2 || gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * (a % m) % m;
        k += 1;
    }
    Some(k)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Binomial coefficient, `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Prime powers in `[2, max]`, increasing.
pub fn prime_powers_upto(max: u64) -> Vec<u64> {
    (2..=max).filter(|&n| is_prime_power(n as u128)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_powers() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_power(4096), Some((2, 12)));
        assert_eq!(prime_power(89 * 89), Some((89, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(119 * 119), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_powers_upto(16), vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), Some(15));
        assert_eq!(binomial(4, 3), Some(4));
        assert_eq!(binomial(3, 5), Some(0));
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(2, 5), Some(4));
        assert_eq!(mult_order(2, 7), Some(3));
        assert_eq!(mult_order(2, 4), None);
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
    }
}
