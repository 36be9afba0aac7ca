use num_integer::Integer;
use serde::Serialize;

use super::{bezout_uv, BezoutWitness, LiftingError};
use crate::induced::{hom_j, AbHom};

/// Behaviour of `J_i` in one classifying-space degree, for both values of `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JDegree {
    pub i: u64,
    pub hom: AbHom,
    pub isomorphism: bool,
    pub surjective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub witness: BezoutWitness,
    /// `min(4m+3, n)`; degrees `0 < i < d` are examined.
    pub d: u64,
    pub degrees: Vec<JDegree>,
    pub connectivity: u64,
}

/// `J_i` for `0 < i < min(4m+3, n)`. Both values of `z` are evaluated and
/// must give the same verdicts; the `z = 0` matrix is recorded.
pub fn j_degrees(m: u64, n: u64) -> Result<(BezoutWitness, u64, Vec<JDegree>), LiftingError> {
    let w = bezout_uv(m, n)?;
    let d = (4 * m + 3).min(n);
    let mut out = Vec::new();
    for i in 1..d {
        let mut verdicts = Vec::with_capacity(2);
        for z in 0..2u8 {
            let h = hom_j(i, m, n, w.u, w.v, z)?;
            verdicts.push((h.is_isomorphism(), h.is_surjective(), h));
        }
        let (iso0, surj0, h0) = verdicts.swap_remove(0);
        let (iso1, surj1, _) = &verdicts[0];
        if (iso0, surj0) != (*iso1, *surj1) {
            return Err(LiftingError::HypothesisFailure {
                degree: Some(i),
                reason: "J_i depends on the unknown bit z".into(),
            });
        }
        out.push(JDegree {
            i,
            hom: h0,
            isomorphism: iso0,
            surjective: surj0,
        });
    }
    Ok((w, d, out))
}

/// Largest `c` with `J_i` an isomorphism for `0 < i < c` and onto at `c`.
///
/// Requires `m > 1`, `n > 7`, `n` odd and `gcd(m, n) = 1`. Every degree
/// `i ≢ 0 (mod 8)` below `min(4m+3, n)` must give an isomorphism; the first
/// that does not is reported.
pub fn connectivity_report(m: u64, n: u64) -> Result<ConnectivityReport, LiftingError> {
    if n % 2 == 0 {
        return Err(LiftingError::EvenN(n));
    }
    if m.gcd(&n) != 1 {
        return Err(LiftingError::NotCoprime { m, n });
    }
    if m <= 1 {
        return Err(LiftingError::HypothesisFailure {
            degree: None,
            reason: format!("m > 1 required, got m = {m}"),
        });
    }
    if n <= 7 {
        return Err(LiftingError::HypothesisFailure {
            degree: None,
            reason: format!("n > 7 required, got n = {n}"),
        });
    }
    let (witness, d, degrees) = j_degrees(m, n)?;
    if let Some(bad) = degrees.iter().find(|j| j.i % 8 != 0 && !j.isomorphism) {
        return Err(LiftingError::HypothesisFailure {
            degree: Some(bad.i),
            reason: format!("J_{} is not an isomorphism", bad.i),
        });
    }
    let connectivity = match degrees.iter().find(|j| !j.isomorphism) {
        Some(j) if j.surjective => j.i,
        Some(j) => j.i - 1,
        None => d - 1,
    };
    Ok(ConnectivityReport {
        witness,
        d,
        degrees,
        connectivity,
    })
}

pub fn connectivity_j(m: u64, n: u64) -> Result<u64, LiftingError> {
    Ok(connectivity_report(m, n)?.connectivity)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_connected() {
        assert_eq!(connectivity_j(2, 9), Ok(7));
        assert_eq!(connectivity_j(3, 11), Ok(7));
    }

    #[test]
    fn degree_eight_is_the_obstacle() {
        let r = connectivity_report(2, 9).unwrap();
        let j8 = r.degrees.iter().find(|j| j.i == 8).unwrap();
        assert!(!j8.isomorphism && !j8.surjective);
        assert!(r.degrees.iter().filter(|j| j.i != 8).all(|j| j.isomorphism));
    }

    #[test]
    fn hypotheses() {
        assert!(matches!(
            connectivity_j(1, 3),
            Err(LiftingError::HypothesisFailure { .. })
        ));
        assert!(matches!(
            connectivity_j(2, 5),
            Err(LiftingError::HypothesisFailure { .. })
        ));
        assert_eq!(connectivity_j(2, 10), Err(LiftingError::EvenN(10)));
        assert_eq!(connectivity_j(3, 15), Err(LiftingError::NotCoprime { m: 3, n: 15 }));
    }
}
