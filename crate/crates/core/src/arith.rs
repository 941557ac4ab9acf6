//! Small modular-arithmetic helpers shared by the parameter code.

use num_integer::Integer;

/// `gcd` with the convention `gcd(0, m) = m`; the result is non-negative.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// gcd of a list, `gcd() = 0`.
pub fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Least non-negative residue of `a` modulo `n`.
pub fn modn(a: i64, n: u32) -> u32 {
    a.rem_euclid(n as i64) as u32
}

/// Representative of `a mod n` in the half-open interval `(-n/2, n/2]`.
pub fn symmetric(a: i64, n: u32) -> i64 {
    let n = n as i64;
    let r = a.rem_euclid(n);
    if 2 * r > n {
        r - n
    } else {
        r
    }
}

/// Residues in `[0, n)` coprime to `n`. For `n = 1` this is `[0]`, the single residue.
pub fn units(n: u32) -> Vec<u32> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&u| gcd(u as i64, n as i64) == 1).collect()
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    units(n).len() as u32
}

/// Additive order of the residue `a` in `Z_n`.
pub fn additive_order(a: i64, n: u32) -> u32 {
    (n as i64 / gcd(a, n as i64)) as u32
}
