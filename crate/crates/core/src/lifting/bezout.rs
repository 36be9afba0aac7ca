use num_integer::Integer;
use serde::Serialize;

use super::LiftingError;

/// Positive `u, v` with `vn − 4um² = sign`, and `N = 4um² + vn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BezoutWitness {
    pub m: u64,
    pub n: u64,
    pub u: u64,
    pub v: u64,
    pub sign: i8,
    #[serde(rename = "N")]
    pub big_n: u64,
}

impl BezoutWitness {
    /// Re-checks the defining identities in `i128`.
    pub fn is_valid(&self) -> bool {
        let four_um2 = 4 * self.u as i128 * (self.m as i128).pow(2);
        let vn = self.v as i128 * self.n as i128;
        self.u > 0
            && self.v > 0
            && vn - four_um2 == self.sign as i128
            && self.big_n as i128 == four_um2 + vn
    }
}

/// Witness with the least `u > 0`, ties broken by the least `v`.
///
/// For each sign `s`, `vn − 4um² = s` forces `u ≡ −s·(4m²)⁻¹ (mod n)`; the
/// least positive such `u` then determines `v`.
pub fn bezout_uv(m: u64, n: u64) -> Result<BezoutWitness, LiftingError> {
    if n % 2 == 0 {
        return Err(LiftingError::EvenN(n));
    }
    if m == 0 || m.gcd(&n) != 1 {
        return Err(LiftingError::NotCoprime { m, n });
    }
    let n_i = n as i128;
    let four_m2 = 4 * (m as i128).pow(2);
    let eg = four_m2.mod_floor(&n_i).extended_gcd(&n_i);
    debug_assert_eq!(eg.gcd, 1);
    let inv = eg.x.mod_floor(&n_i);
    let mut best: Option<BezoutWitness> = None;
    for sign in [1i8, -1] {
        let r = (-(sign as i128) * inv).mod_floor(&n_i);
        let u = if r == 0 { n_i } else { r };
        let v = (u * four_m2 + sign as i128) / n_i;
        let w = BezoutWitness {
            m,
            n,
            u: u as u64,
            v: v as u64,
            sign,
            big_n: (u * four_m2 + v * n_i) as u64,
        };
        debug_assert!(w.is_valid());
        if best.is_none_or(|b| (w.u, w.v) < (b.u, b.v)) {
            best = Some(w);
        }
    }
    Ok(best.expect("two candidates"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(m: u64, n: u64) -> Option<(u64, u64, i8)> {
        for u in 1..=200u64 {
            for v in 1..=20_000u64 {
                let d = v as i128 * n as i128 - 4 * u as i128 * (m as i128).pow(2);
                if d == 1 || d == -1 {
                    return Some((u, v, d as i8));
                }
                if d > 1 {
                    break;
                }
            }
        }
        None
    }

    #[test]
    fn examples() {
        let w = bezout_uv(1, 3).unwrap();
        assert_eq!((w.u, w.v, w.sign, w.big_n), (1, 1, -1, 7));
        let w = bezout_uv(2, 5).unwrap();
        assert_eq!((w.u, w.v, w.sign, w.big_n), (1, 3, -1, 31));
        let w = bezout_uv(1, 5).unwrap();
        assert_eq!((w.u, w.v, w.sign, w.big_n), (1, 1, 1, 9));
    }

    #[test]
    fn errors() {
        assert_eq!(bezout_uv(2, 4), Err(LiftingError::EvenN(4)));
        assert_eq!(bezout_uv(3, 9), Err(LiftingError::NotCoprime { m: 3, n: 9 }));
    }

    #[test]
    fn agrees_with_brute_force() {
        for m in 1..=6u64 {
            for n in (1..=41u64).step_by(2) {
                if m.gcd(&n) != 1 {
                    continue;
                }
                let w = bezout_uv(m, n).unwrap();
                assert!(w.is_valid());
                assert_eq!(Some((w.u, w.v, w.sign)), brute(m, n), "m={m} n={n}");
            }
        }
    }
}
