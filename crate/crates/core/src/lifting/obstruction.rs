//! Degrees in which `f_⊗ : BPSp(m) × BSO(n) → BPSp(mn)` fails to be onto on
//! homotopy, which rules out a section.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use super::LiftingError;
use crate::homotopy::{pi_classifying, Family, FgAbGroup, TableGroup};
use crate::induced::{AbHom, ImageDescriptor};
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoSectionCase {
    /// `4m+4 < n` and `4m+4 < 4mn`, obstruction in degree `4m+4`
    AboveSymplecticRange,
    /// `n ∈ {3, 5, 7}`, `n < 4m+3`, `n < 4mn`, obstruction in degree 8, 12, 16
    SmallOrthogonal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoSectionWitness {
    pub case: NoSectionCase,
    /// Classifying-space degree.
    pub degree: u64,
    /// `(f_⊗)_*` restricted to the factors that can reach `ℤ`.
    pub map: AbHom,
    pub image: ImageDescriptor,
    pub provenance: String,
}

const SMALL_N_DEGREES: [(u64, u64); 3] = [(8, 3), (12, 5), (16, 7)];

fn z_at(family: Family, i: u64, n: u64) -> bool {
    pi_classifying(family, i, n).group == TableGroup::Group(FgAbGroup::integers())
}

/// The first applicable case, if any, together with the image of
/// `(f_⊗)_*` in the obstruction degree. A witness is returned only when the
/// image is a proper subgroup of `ℤ`.
pub fn no_section_witness(m: u64, n: u64) -> Result<Option<NoSectionWitness>, LiftingError> {
    if n % 2 == 0 {
        return Err(LiftingError::EvenN(n));
    }
    let k = 4 * m + 4;
    if k < n && k < 4 * m * n {
        // π_k BPSp(m) = ℤ/2 (asserted) maps to zero in ℤ; y ↦ m·d_*(y) = 2my
        let source = FgAbGroup::product(&[&FgAbGroup::cyclic(2), &FgAbGroup::integers()]);
        let ok = pi_classifying(Family::PSp, k, m).group == TableGroup::Group(FgAbGroup::cyclic(2))
            && z_at(Family::SO, k, n)
            && z_at(Family::PSp, k, m * n);
        if !ok {
            return Ok(None);
        }
        let matrix = IntMatrix::from_fn(1, 2, |_, c| {
            if c == 0 {
                BigInt::from(0)
            } else {
                BigInt::from(2 * m)
            }
        });
        let map = AbHom::new(source, FgAbGroup::integers(), matrix)?;
        let image = map.image_description();
        return Ok(proper(image).map(|image| NoSectionWitness {
            case: NoSectionCase::AboveSymplecticRange,
            degree: k,
            map,
            image,
            provenance: "pi_{4m+4} BPSp(m) = Z/2 (asserted) and pi_{4m+4} BSO(n) = pi_{4m+4} BPSp(mn) = Z; \
                         (x, y) -> n x + m d_*(y) with d_* = 2 on Z"
                .into(),
        }));
    }
    if let Some(&(i, _)) = SMALL_N_DEGREES.iter().find(|&&(_, nn)| nn == n) {
        if !(n < 4 * m + 3 && n < 4 * m * n) {
            return Ok(None);
        }
        // π_i BSO(n) is torsion, so only x contributes: x ↦ n x
        let torsion = pi_classifying(Family::SO, i, n).group == TableGroup::TorsionOnly;
        if !(torsion && z_at(Family::PSp, i, m) && z_at(Family::PSp, i, m * n)) {
            return Ok(None);
        }
        let map = AbHom::new(
            FgAbGroup::integers(),
            FgAbGroup::integers(),
            IntMatrix::from_fn(1, 1, |_, _| BigInt::from(n)),
        )?;
        let image = map.image_description();
        return Ok(proper(image).map(|image| NoSectionWitness {
            case: NoSectionCase::SmallOrthogonal,
            degree: i,
            map,
            image,
            provenance: "pi_i BPSp(m) = pi_i BPSp(mn) = Z and pi_i BSO(n) torsion for (i, n) in {(8,3), (12,5), (16,7)}; \
                         (x, y) -> n x"
                .into(),
        }));
    }
    Ok(None)
}

fn proper(image: ImageDescriptor) -> Option<ImageDescriptor> {
    match &image.multiple {
        Some(d) if *d != BigUint::one() => Some(image),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn above_symplectic_range() {
        let w = no_section_witness(2, 13).unwrap().unwrap();
        assert_eq!(w.case, NoSectionCase::AboveSymplecticRange);
        assert_eq!(w.degree, 12);
        // n·x vanishes on the ℤ/2 factor and d_* doubles, so the image is 2mℤ
        assert_eq!(w.image.multiple, Some(BigUint::from(4u32)));
    }

    #[test]
    fn small_orthogonal() {
        let w = no_section_witness(4, 3).unwrap().unwrap();
        assert_eq!(w.case, NoSectionCase::SmallOrthogonal);
        assert_eq!(w.degree, 8);
        assert_eq!(w.image.to_string(), "3Z");
    }

    #[test]
    fn neither_case() {
        assert_eq!(no_section_witness(2, 9), Ok(None));
        assert_eq!(no_section_witness(2, 4), Err(LiftingError::EvenN(4)));
        // π₇ Sp(1) lies outside the tables, so nothing is certified
        assert_eq!(no_section_witness(1, 3), Ok(None));
    }
}
