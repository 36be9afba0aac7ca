//! Induced maps of the group operations on homotopy groups, one degree at a
//! time. Each formula is stated on the generators of the tabulated groups,
//! with integer coefficients reduced modulo the target orders.
//!
//! Groups are products of cyclic "slots"; a trivial slot contributes no
//! generator, so e.g. `π₄Sp(2) × π₄O(9)` is just `ℤ/2`.

use num_bigint::BigInt;
use num_integer::Integer;

use super::{AbHom, InducedError};
use crate::homotopy::{pi_o, pi_psp, pi_so, pi_sp, FgAbGroup, TableAnswer};
use crate::linalg::IntMatrix;

fn tabulated(answer: TableAnswer, what: String) -> Result<FgAbGroup, InducedError> {
    match answer.as_group() {
        Some(g) => Ok(g.clone()),
        None => Err(InducedError::OutOfRange {
            op: "table",
            bound: format!("{what} is {}", answer.group),
        }),
    }
}

fn sp(i: u64, n: u64) -> Result<FgAbGroup, InducedError> {
    tabulated(pi_sp(i, n), format!("pi_{i} Sp({n})"))
}

fn psp(i: u64, n: u64) -> Result<FgAbGroup, InducedError> {
    tabulated(pi_psp(i, n), format!("pi_{i} PSp({n})"))
}

fn o(i: u64, n: u64) -> Result<FgAbGroup, InducedError> {
    tabulated(pi_o(i, n), format!("pi_{i} O({n})"))
}

fn so(i: u64, n: u64) -> Result<FgAbGroup, InducedError> {
    tabulated(pi_so(i, n), format!("pi_{i} SO({n})"))
}

/// Builds the hom from a coefficient table indexed by (target slot, source
/// slot), dropping trivial slots.
fn emit(sources: &[FgAbGroup], targets: &[FgAbGroup], coeffs: &[&[i128]]) -> Result<AbHom, InducedError> {
    debug_assert!(sources.iter().chain(targets).all(|g| g.rank() <= 1));
    debug_assert_eq!(coeffs.len(), targets.len());
    let live_s: Vec<usize> = (0..sources.len()).filter(|&k| !sources[k].is_trivial()).collect();
    let live_t: Vec<usize> = (0..targets.len()).filter(|&k| !targets[k].is_trivial()).collect();
    let m = IntMatrix::from_fn(live_t.len(), live_s.len(), |r, c| {
        BigInt::from(coeffs[live_t[r]][live_s[c]])
    });
    let s_refs: Vec<&FgAbGroup> = sources.iter().collect();
    let t_refs: Vec<&FgAbGroup> = targets.iter().collect();
    AbHom::new(FgAbGroup::product(&s_refs), FgAbGroup::product(&t_refs), m)
}

fn out_of_range(op: &'static str, bound: impl Into<String>) -> InducedError {
    InducedError::OutOfRange {
        op,
        bound: bound.into(),
    }
}

fn require(cond: bool, op: &'static str, bound: &str) -> Result<(), InducedError> {
    if cond {
        Ok(())
    } else {
        Err(out_of_range(op, bound))
    }
}

pub const RANGE_DIRECT_SUM: &str = "i < 4*min(m,n)+2";
pub const RANGE_R_FOLD: &str = "i < 4n+2";
pub const RANGE_DOUBLING: &str = "i < n-1";
pub const RANGE_TENSOR_SP_O: &str = "i < 4m+2 and i < n-1";
pub const RANGE_TENSOR_QUOTIENT: &str = "i < 4m+2 and i < n-1, n odd";
pub const RANGE_TENSOR_SP_SP: &str = "m <= n and i < 4m+2";
pub const RANGE_SQUARE_TENSOR: &str = "i < 4m+2";
pub const RANGE_TTILDE: &str = "i < min(4m+2, n-1), |vn-4um^2| = 1";
pub const RANGE_J: &str = "0 < i < min(4m+3, n), n odd, gcd(m,n) = 1";

/// `⊞_* : π_i Sp(m) × π_i Sp(n) → π_i Sp(m+n)`, `(x, y) ↦ x + y`.
pub fn hom_direct_sum(i: u64, m: u64, n: u64) -> Result<AbHom, InducedError> {
    require(i < 4 * m.min(n) + 2, "direct-sum", RANGE_DIRECT_SUM)?;
    emit(&[sp(i, m)?, sp(i, n)?], &[sp(i, m + n)?], &[&[1, 1]])
}

/// `⊞^r_* : π_i Sp(n) → π_i Sp(rn)`, `x ↦ rx`.
pub fn hom_r_fold(i: u64, n: u64, r: u64) -> Result<AbHom, InducedError> {
    require(i < 4 * n + 2, "r-fold", RANGE_R_FOLD)?;
    require(r >= 1, "r-fold", "r >= 1")?;
    emit(&[sp(i, n)?], &[sp(i, r * n)?], &[&[r as i128]])
}

/// `d_* : π_i O(n) → π_i Sp(n)`: multiplication by 2 when `i ≡ 3, 7 (mod 8)`;
/// in every other degree one side is trivial.
pub fn hom_doubling(i: u64, n: u64) -> Result<AbHom, InducedError> {
    require(i < n.saturating_sub(1), "doubling", RANGE_DOUBLING)?;
    let c = if matches!(i % 8, 3 | 7) { 2 } else { 0 };
    emit(&[o(i, n)?], &[sp(i, n)?], &[&[c]])
}

/// `⊗_* : π_i Sp(m) × π_i O(n) → π_i Sp(mn)`, `(x, y) ↦ nx + 2my`.
pub fn hom_tensor_sp_o(i: u64, m: u64, n: u64) -> Result<AbHom, InducedError> {
    require(i < 4 * m + 2 && i < n.saturating_sub(1), "tensor-sp-o", RANGE_TENSOR_SP_O)?;
    emit(
        &[sp(i, m)?, o(i, n)?],
        &[sp(i, m * n)?],
        &[&[n as i128, 2 * m as i128]],
    )
}

/// `⊗_* : π_i PSp(m) × π_i SO(n) → π_i PSp(mn)` for odd `n`, again
/// `(x, y) ↦ nx + 2my`.
///
/// At `i = 1` this is `x ↦ x` on `ℤ/2 × ℤ/2 → ℤ/2` (the loop from `I` to
/// `−I` tensored with `I_n`, `n` odd, ends at `−I`), which is the first row of
/// `J₂`. At `i = 0` all groups are trivial.
pub fn hom_tensor_quotient(i: u64, m: u64, n: u64) -> Result<AbHom, InducedError> {
    if n % 2 == 0 {
        return Err(InducedError::EvenN(n));
    }
    require(i < 4 * m + 2 && i < n.saturating_sub(1), "tensor-quotient", RANGE_TENSOR_QUOTIENT)?;
    emit(
        &[psp(i, m)?, so(i, n)?],
        &[psp(i, m * n)?],
        &[&[n as i128, 2 * m as i128]],
    )
}

/// `⊗̃_* : π_i Sp(m) × π_i Sp(n) → π_i O(4mn)`: `nx + my` for `i ≡ 3`,
/// `4(nx + my)` for `i ≡ 7`, zero otherwise.
pub fn hom_tensor_sp_sp(i: u64, m: u64, n: u64) -> Result<AbHom, InducedError> {
    require(m <= n && i < 4 * m + 2, "tensor-sp-sp", RANGE_TENSOR_SP_SP)?;
    let (a, b) = match i % 8 {
        3 => (n as i128, m as i128),
        7 => (4 * n as i128, 4 * m as i128),
        _ => (0, 0),
    };
    emit(&[sp(i, m)?, sp(i, n)?], &[o(i, 4 * m * n)?], &[&[a, b]])
}

/// `⊗̃²_* : π_i Sp(m) → π_i O(4m²)`: `2mx` for `i ≡ 3`, `8mx` for `i ≡ 7`,
/// zero otherwise.
pub fn hom_square_tensor(i: u64, m: u64) -> Result<AbHom, InducedError> {
    require(i < 4 * m + 2, "square-tensor", RANGE_SQUARE_TENSOR)?;
    let c = match i % 8 {
        3 => 2 * m as i128,
        7 => 8 * m as i128,
        _ => 0,
    };
    emit(&[sp(i, m)?], &[o(i, 4 * m * m)?], &[&[c]])
}

/// The unknown bit `z = T̃₁(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZParam {
    Zero,
    One,
    Unknown,
}

impl ZParam {
    pub fn values(self) -> Vec<u8> {
        match self {
            ZParam::Zero => vec![0],
            ZParam::One => vec![1],
            ZParam::Unknown => vec![0, 1],
        }
    }
}

fn check_bezout(m: u64, n: u64, u: u64, v: u64) -> Result<u64, InducedError> {
    let lhs = v as i128 * n as i128 - 4 * u as i128 * (m as i128).pow(2);
    if u == 0 || v == 0 || lhs.abs() != 1 {
        return Err(InducedError::BadBezout { m, n, u, v });
    }
    Ok(4 * u * m * m + v * n)
}

/// `T̃_* : π_i PSp(m) × π_i SO(n) → π_i SO(N)`, `N = 4um² + vn`.
///
/// `zx + y` at `i = 1`; for `1 < i`: `vy` when `i ≡ 0, 1`, `2umx + vy` when
/// `i ≡ 3`, `8umx + vy` when `i ≡ 7`, zero otherwise (mod 8).
pub fn hom_ttilde(i: u64, m: u64, n: u64, u: u64, v: u64, z: u8) -> Result<AbHom, InducedError> {
    let big_n = check_bezout(m, n, u, v)?;
    require(i < (4 * m + 2).min(n.saturating_sub(1)), "ttilde", RANGE_TTILDE)?;
    let (um, v) = ((u * m) as i128, v as i128);
    let row: [i128; 2] = if i == 1 {
        [(z & 1) as i128, 1]
    } else {
        match i % 8 {
            0 | 1 => [0, v],
            3 => [2 * um, v],
            7 => [8 * um, v],
            _ => [0, 0],
        }
    };
    emit(&[psp(i, m)?, so(i, n)?], &[so(i, big_n)?], &[&row])
}

/// One hom per admissible value of `z`.
pub fn hom_ttilde_candidates(
    i: u64,
    m: u64,
    n: u64,
    u: u64,
    v: u64,
    z: ZParam,
) -> Result<Vec<(u8, AbHom)>, InducedError> {
    z.values()
        .into_iter()
        .map(|b| Ok((b, hom_ttilde(i, m, n, u, v, b)?)))
        .collect()
}

/// `J_i` on `π_i BPSp(m) × π_i BSO(n) → π_i BPSp(mn) × π_i BSO(N)`, the
/// degree `i − 1` tensor-quotient row stacked over the `T̃` row.
pub fn hom_j(i: u64, m: u64, n: u64, u: u64, v: u64, z: u8) -> Result<AbHom, InducedError> {
    if n % 2 == 0 {
        return Err(InducedError::EvenN(n));
    }
    if m.gcd(&n) != 1 {
        return Err(InducedError::NotCoprime { m, n });
    }
    require(i > 0 && i < (4 * m + 3).min(n), "J", RANGE_J)?;
    let top = hom_tensor_quotient(i - 1, m, n)?;
    let bottom = hom_ttilde(i - 1, m, n, u, v, z)?;
    let matrix = top.matrix().vconcat(bottom.matrix()).expect("same source");
    AbHom::new(
        top.source().clone(),
        FgAbGroup::product(&[top.target(), bottom.target()]),
        matrix,
    )
}

pub fn hom_j_candidates(
    i: u64,
    m: u64,
    n: u64,
    u: u64,
    v: u64,
    z: ZParam,
) -> Result<Vec<(u8, AbHom)>, InducedError> {
    z.values()
        .into_iter()
        .map(|b| Ok((b, hom_j(i, m, n, u, v, b)?)))
        .collect()
}

/// `x ↦ (x, x)`
pub fn diagonal(g: &FgAbGroup) -> AbHom {
    let k = g.rank();
    let m = IntMatrix::identity(k).vconcat(&IntMatrix::identity(k)).expect("same width");
    AbHom::new(g.clone(), FgAbGroup::product(&[g, g]), m).expect("diagonal is well defined")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn grp(orders: &[u64]) -> FgAbGroup {
        FgAbGroup::from_orders(orders)
    }

    #[test]
    fn direct_sum_examples() {
        let h = hom_direct_sum(3, 2, 3).unwrap();
        assert_eq!(h.matrix(), &mat(&[&[1, 1]]));
        assert_eq!(h.source(), &grp(&[0, 0]));
        let h = hom_direct_sum(4, 2, 3).unwrap();
        assert_eq!(h.source(), &grp(&[2, 2]));
        assert_eq!(h.matrix(), &mat(&[&[1, 1]]));
        let h = hom_direct_sum(2, 2, 3).unwrap();
        assert!(h.source().is_trivial() && h.target().is_trivial());
        assert!(hom_direct_sum(10, 2, 3).is_err());
    }

    #[test]
    fn r_fold_examples() {
        assert!(hom_r_fold(3, 2, 1).unwrap().is_isomorphism());
        assert_eq!(hom_r_fold(3, 2, 5).unwrap().matrix(), &mat(&[&[5]]));
        let h = hom_r_fold(4, 2, 2).unwrap();
        assert_eq!(h.matrix(), &mat(&[&[0]]));
        assert_eq!(h.source(), &grp(&[2]));
    }

    #[test]
    fn doubling_examples() {
        assert_eq!(hom_doubling(3, 9).unwrap().matrix(), &mat(&[&[2]]));
        let h = hom_doubling(1, 9).unwrap();
        assert_eq!(h.source(), &grp(&[2]));
        assert!(h.target().is_trivial());
        let h = hom_doubling(4, 9).unwrap();
        assert!(h.source().is_trivial());
        assert_eq!(h.target(), &grp(&[2]));
        assert!(hom_doubling(8, 9).is_err());
        assert_eq!(
            hom_doubling(5, 9).unwrap(),
            AbHom::zero(grp(&[]), grp(&[2]))
        );
    }

    #[test]
    fn tensor_sp_o_examples() {
        assert_eq!(hom_tensor_sp_o(3, 2, 5).unwrap().matrix(), &mat(&[&[5, 4]]));
        // π₄O(9) = 0, so only the Sp column survives and 9 ≡ 1 (mod 2)
        let h = hom_tensor_sp_o(4, 2, 9).unwrap();
        assert_eq!(h.source(), &grp(&[2]));
        assert_eq!(h.matrix(), &mat(&[&[1]]));
        let h = hom_tensor_sp_o(2, 2, 9).unwrap();
        assert_eq!(h, AbHom::zero(grp(&[]), grp(&[])));
    }

    #[test]
    fn tensor_quotient_examples() {
        assert_eq!(hom_tensor_quotient(3, 2, 5).unwrap().matrix(), &mat(&[&[5, 4]]));
        let h = hom_tensor_quotient(1, 2, 5).unwrap();
        assert_eq!(h.source(), &grp(&[2, 2]));
        assert_eq!(h.matrix(), &mat(&[&[1, 0]]));
        let h = hom_tensor_quotient(5, 2, 11).unwrap();
        assert_eq!(h.source(), &grp(&[2]));
        assert_eq!(h.matrix(), &mat(&[&[1]]));
        assert_eq!(hom_tensor_quotient(3, 2, 4), Err(InducedError::EvenN(4)));
        // π₃SO(3) lies outside the tabulated range 0 < i < n−1
        assert!(matches!(
            hom_tensor_quotient(3, 1, 3),
            Err(InducedError::OutOfRange { .. })
        ));
    }

    #[test]
    fn tensor_sp_sp_and_square() {
        assert_eq!(hom_tensor_sp_sp(3, 2, 3).unwrap().matrix(), &mat(&[&[3, 2]]));
        assert_eq!(hom_tensor_sp_sp(7, 2, 3).unwrap().matrix(), &mat(&[&[12, 8]]));
        let h = hom_tensor_sp_sp(4, 2, 3).unwrap();
        assert!(h.target().is_trivial());
        assert!(hom_tensor_sp_sp(3, 3, 2).is_err());
        assert_eq!(hom_square_tensor(3, 2).unwrap().matrix(), &mat(&[&[4]]));
        assert_eq!(hom_square_tensor(7, 2).unwrap().matrix(), &mat(&[&[16]]));
        assert!(hom_square_tensor(5, 2).unwrap().matrix().is_zero());
    }

    #[test]
    fn ttilde_examples() {
        // 7·9 − 4·4·4 = −1
        let (m, n, u, v) = (2, 9, 4, 7);
        for z in 0..2u8 {
            let h = hom_ttilde(1, m, n, u, v, z).unwrap();
            assert_eq!(h.source(), &grp(&[2, 2]));
            assert_eq!(h.matrix(), &mat(&[&[z as i64, 1]]));
        }
        assert_eq!(hom_ttilde(3, m, n, u, v, 0).unwrap().matrix(), &mat(&[&[16, 7]]));
        assert_eq!(hom_ttilde(7, m, n, u, v, 0).unwrap().matrix(), &mat(&[&[64, 7]]));
        assert!(matches!(
            hom_ttilde(3, m, n, 1, 1, 0),
            Err(InducedError::BadBezout { .. })
        ));
        // 11·13 − 4·4·9 = −1; π₉PSp(3) = 0 and v ≡ 1 (mod 2)
        let h = hom_ttilde(9, 3, 13, 4, 11, 0).unwrap();
        assert_eq!(h.source(), &grp(&[2]));
        assert_eq!(h.matrix(), &mat(&[&[1]]));
    }

    #[test]
    fn j_examples() {
        let (m, n, u, v) = (2, 9, 4, 7);
        let j4 = hom_j(4, m, n, u, v, 0).unwrap();
        assert_eq!(j4.matrix(), &mat(&[&[9, 4], &[16, 7]]));
        assert_eq!(j4.matrix().det().unwrap(), BigInt::from(-1));
        assert!(j4.is_isomorphism());
        for z in 0..2u8 {
            let j2 = hom_j(2, m, n, u, v, z).unwrap();
            assert_eq!(j2.matrix(), &mat(&[&[1, 0], &[z as i64, 1]]));
            assert!(j2.is_isomorphism());
        }
        // i = 6: π₅PSp(2) × π₅SO(9) = ℤ/2 × 0
        let j6 = hom_j(6, m, n, u, v, 0).unwrap();
        assert_eq!(j6.source(), &grp(&[2]));
        assert_eq!(j6.matrix(), &mat(&[&[1]]));
        assert!(!hom_j(8, m, n, u, v, 0).unwrap().is_surjective());
        assert!(hom_j(9, m, n, u, v, 0).is_err());
        assert_eq!(hom_j(3, 3, 9, 1, 1, 0), Err(InducedError::NotCoprime { m: 3, n: 9 }));
    }

    #[test]
    fn candidates_cover_both_bits() {
        let c = hom_j_candidates(2, 2, 9, 4, 7, ZParam::Unknown).unwrap();
        assert_eq!(c.len(), 2);
        assert_ne!(c[0].1, c[1].1);
        let c = hom_ttilde_candidates(3, 2, 9, 4, 7, ZParam::One).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn diagonal_map() {
        let d = diagonal(&grp(&[0]));
        assert_eq!(d.matrix(), &mat(&[&[1], &[1]]));
    }
}
