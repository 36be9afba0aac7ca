use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::InducedError;
use crate::homotopy::FgAbGroup;
use crate::linalg::{smith_normal_form, IntMatrix};

/// Homomorphism between finitely generated abelian groups, given by an
/// integer matrix whose columns are the images of the source generators.
///
/// Entries are stored reduced into `[0, k)` for a target factor `ℤ/k`.
#[derive(Clone, PartialEq, Eq)]
pub struct AbHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

fn order_int(k: &BigUint) -> BigInt {
    BigInt::from(k.clone())
}

impl AbHom {
    /// Reduces entries modulo the target orders and checks that every source
    /// relation is sent to zero.
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self, InducedError> {
        if matrix.shape() != (target.rank(), source.rank()) {
            return Err(InducedError::MalformedHom(format!(
                "matrix is {:?}, expected {:?} for {} -> {}",
                matrix.shape(),
                (target.rank(), source.rank()),
                source,
                target
            )));
        }
        let t_orders: Vec<BigInt> = target.factors().iter().map(order_int).collect();
        let s_orders: Vec<BigInt> = source.factors().iter().map(order_int).collect();
        let reduced = IntMatrix::from_fn(matrix.rows(), matrix.cols(), |r, c| {
            let e = matrix.get(r, c);
            if t_orders[r].is_zero() {
                e.clone()
            } else {
                e.mod_floor(&t_orders[r])
            }
        });
        for (c, a) in s_orders.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (r, t) in t_orders.iter().enumerate() {
                let img = a * reduced.get(r, c);
                let ok = if t.is_zero() { img.is_zero() } else { (img % t).is_zero() };
                if !ok {
                    return Err(InducedError::MalformedHom(format!(
                        "generator {c} of order {a} has image {} in a factor of order {t}",
                        reduced.get(r, c)
                    )));
                }
            }
        }
        Ok(AbHom {
            source,
            target,
            matrix: reduced,
        })
    }

    pub fn zero(source: FgAbGroup, target: FgAbGroup) -> Self {
        let matrix = IntMatrix::zeros(target.rank(), source.rank());
        AbHom {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(group: FgAbGroup) -> Self {
        let matrix = IntMatrix::identity(group.rank());
        AbHom {
            source: group.clone(),
            target: group,
            matrix,
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &AbHom) -> Result<AbHom, InducedError> {
        if inner.target != self.source {
            return Err(InducedError::MalformedHom(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, inner.source, inner.target
            )));
        }
        let m = self.matrix.mul(&inner.matrix).expect("ranks match");
        AbHom::new(inner.source.clone(), self.target.clone(), m)
    }

    /// `(x, y) ↦ f(x) + g(y)` on the product of the two sources.
    pub fn sum_on_product(f: &AbHom, g: &AbHom) -> Result<AbHom, InducedError> {
        if f.target != g.target {
            return Err(InducedError::MalformedHom(format!(
                "targets differ: {} and {}",
                f.target, g.target
            )));
        }
        let m = f.matrix.hconcat(&g.matrix).expect("same row count");
        AbHom::new(
            FgAbGroup::product(&[&f.source, &g.source]),
            f.target.clone(),
            m,
        )
    }

    fn target_relations(&self) -> IntMatrix {
        IntMatrix::diagonal(&self.target.factors().iter().map(order_int).collect::<Vec<_>>())
    }

    /// Cokernel `T / im`, read off the Smith form of `[M | D_T]`.
    pub fn cokernel(&self) -> FgAbGroup {
        let k = self.target.rank();
        let aug = self.matrix.hconcat(&self.target_relations()).expect("same row count");
        let snf = smith_normal_form(&aug);
        let mut factors: Vec<BigUint> = snf
            .invariant_factors()
            .into_iter()
            .map(|d| d.magnitude().clone())
            .collect();
        // rows beyond the number of columns contribute free summands
        factors.resize(k, BigUint::zero());
        FgAbGroup::new(factors).canonical()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }

    /// Kernel of `[M | −D_T]` projected to the source coordinates must lie in
    /// the source relation lattice.
    pub fn is_injective(&self) -> bool {
        let s = self.source.rank();
        if s == 0 {
            return true;
        }
        let aug = self.matrix.hconcat(&self.target_relations().neg()).expect("same row count");
        let snf = smith_normal_form(&aug);
        let rank = snf.rank();
        let s_orders: Vec<BigInt> = self.source.factors().iter().map(order_int).collect();
        (rank..aug.cols()).all(|c| {
            (0..s).all(|j| {
                let x = snf.v.get(j, c);
                if s_orders[j].is_zero() {
                    x.is_zero()
                } else {
                    (x % &s_orders[j]).is_zero()
                }
            })
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn image_description(&self) -> ImageDescriptor {
        let multiple = if self.target.factors() == [BigUint::zero()] {
            let g = (0..self.source.rank()).fold(BigInt::zero(), |g, c| g.gcd(self.matrix.get(0, c)));
            Some(g.magnitude().clone())
        } else {
            None
        };
        ImageDescriptor {
            cokernel: self.cokernel(),
            multiple,
        }
    }
}

trait NegInt {
    fn neg(&self) -> IntMatrix;
}

impl NegInt for IntMatrix {
    fn neg(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows(), self.cols(), |r, c| -self.get(r, c))
    }
}

impl fmt::Debug for AbHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbHom({} -> {}, {:?})", self.source, self.target, self.matrix.to_rows())
    }
}

impl fmt::Display for AbHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .matrix
            .to_rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "{} -> {} : [{}]", self.source, self.target, rows.join(", "))
    }
}

pub(crate) fn serialize_int_matrix<S: Serializer>(m: &IntMatrix, serializer: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(m.rows()))?;
    for row in m.to_rows() {
        let row: Vec<JsonInt> = row.into_iter().map(JsonInt).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

/// Integer serialized as a JSON number when it fits `i128`, else a string.
struct JsonInt(BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        match self.0.to_i128() {
            Some(v) => serializer.serialize_i128(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for AbHom {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct M<'a>(&'a IntMatrix);
        impl Serialize for M<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                serialize_int_matrix(self.0, s)
            }
        }
        let mut st = serializer.serialize_struct("AbHom", 3)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("matrix", &M(&self.matrix))?;
        st.end()
    }
}

/// Image of a homomorphism: its cokernel, and for a target `ℤ` the integer
/// `d ≥ 0` with image `dℤ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageDescriptor {
    pub cokernel: FgAbGroup,
    pub multiple: Option<BigUint>,
}

impl ImageDescriptor {
    pub fn is_everything(&self) -> bool {
        self.cokernel.is_trivial()
    }
}

impl fmt::Display for ImageDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.multiple {
            Some(d) if d.is_zero() => write!(f, "0"),
            Some(d) if d.is_one() => write!(f, "Z"),
            Some(d) => write!(f, "{d}Z"),
            None if self.cokernel.is_trivial() => write!(f, "everything"),
            None => write!(f, "subgroup with cokernel {}", self.cokernel),
        }
    }
}

impl Serialize for ImageDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("ImageDescriptor", 3)?;
        st.serialize_field("description", &self.to_string())?;
        st.serialize_field("cokernel", &self.cokernel)?;
        match &self.multiple {
            Some(d) => match d.to_u128() {
                Some(v) => st.serialize_field("multiple", &v)?,
                None => st.serialize_field("multiple", &d.to_string())?,
            },
            None => st.serialize_field("multiple", &Option::<u8>::None)?,
        }
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FgAbGroup {
        FgAbGroup::from_orders(orders)
    }

    fn hom(s: &[u64], t: &[u64], rows: &[&[i64]]) -> Result<AbHom, InducedError> {
        let m = if rows.is_empty() {
            IntMatrix::zeros(0, g(s).rank())
        } else {
            IntMatrix::from_rows(rows)
        };
        AbHom::new(g(s), g(t), m)
    }

    #[test]
    fn reduction_and_well_definedness() {
        let h = hom(&[0], &[2], &[&[5]]).unwrap();
        assert_eq!(h.matrix(), &IntMatrix::from_rows(&[&[1]]));
        assert!(hom(&[2], &[0], &[&[1]]).is_err());
        assert!(hom(&[2], &[4], &[&[1]]).is_err());
        assert!(hom(&[2], &[4], &[&[2]]).is_ok());
        assert!(hom(&[0], &[0], &[&[1, 2]]).is_err());
    }

    #[test]
    fn iso_checks() {
        // nv − 4um² = −1 with (m, n, u, v) = (2, 5, 1, 3)
        let j = hom(&[0, 0], &[0, 0], &[&[5, 4], &[4, 3]]).unwrap();
        assert!(j.is_isomorphism());
        let not = hom(&[0, 0], &[0, 0], &[&[9, 4], &[16, 3]]).unwrap();
        assert!(!not.is_surjective());
        assert!(not.is_injective());
        assert!(hom(&[2], &[2], &[&[1]]).unwrap().is_isomorphism());
        let j2 = hom(&[2, 2], &[2, 2], &[&[1, 0], &[1, 1]]).unwrap();
        assert!(j2.is_isomorphism());
        let proj = hom(&[2, 2], &[2], &[&[1, 0]]).unwrap();
        assert!(proj.is_surjective());
        assert!(!proj.is_injective());
        // ×2 on ℤ/4 is neither
        let two = hom(&[4], &[4], &[&[2]]).unwrap();
        assert!(!two.is_injective() && !two.is_surjective());
        // ℤ/2 → ℤ/4, 1 ↦ 2 is injective
        assert!(hom(&[2], &[4], &[&[2]]).unwrap().is_injective());
        // maps out of and into the trivial group
        assert!(AbHom::zero(g(&[]), g(&[])).is_isomorphism());
        assert!(!AbHom::zero(g(&[]), g(&[2])).is_surjective());
        assert!(!AbHom::zero(g(&[0]), g(&[])).is_injective());
    }

    #[test]
    fn images_in_z() {
        let h = hom(&[2, 0], &[0], &[&[0, 2]]).unwrap();
        let d = h.image_description();
        assert_eq!(d.multiple, Some(BigUint::from(2u32)));
        assert_eq!(d.cokernel, g(&[2]));
        assert_eq!(d.to_string(), "2Z");
        let z = AbHom::zero(g(&[2]), g(&[0])).image_description();
        assert_eq!(z.to_string(), "0");
        assert_eq!(z.cokernel, g(&[0]));
    }

    #[test]
    fn compose_and_sum() {
        let f = hom(&[0], &[0], &[&[3]]).unwrap();
        let h = hom(&[0], &[0], &[&[5]]).unwrap();
        assert_eq!(f.compose(&h).unwrap().matrix(), &IntMatrix::from_rows(&[&[15]]));
        let s = AbHom::sum_on_product(&f, &h).unwrap();
        assert_eq!(s.matrix(), &IntMatrix::from_rows(&[&[3, 5]]));
        assert!(s.is_surjective());
        let bad = hom(&[2], &[2], &[&[1]]).unwrap();
        assert!(f.compose(&bad).is_err());
    }
}
