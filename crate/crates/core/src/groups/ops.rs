use super::{sp_blocks, symplectic_form, ClassicalGroup, GroupElement, GroupError};
use crate::linalg::{CycScalar, ExactMatrix};

/// `diag(F, …, F, X, F, …, F)` with `X` in block `j` (1-based) of `r`, where
/// `F` is the identity for diagonal blocks and zero for off-diagonal ones.
fn place_block(x: &ExactMatrix, j: usize, r: usize, diagonal: bool) -> ExactMatrix {
    let n = x.rows();
    let filler = if diagonal {
        ExactMatrix::identity(n)
    } else {
        ExactMatrix::zeros(n, n)
    };
    let blocks: Vec<&ExactMatrix> = (1..=r).map(|k| if k == j { x } else { &filler }).collect();
    ExactMatrix::block_diag(&blocks)
}

fn assemble_sp(blocks: [ExactMatrix; 4]) -> ExactMatrix {
    let [a11, a12, a21, a22] = blocks;
    ExactMatrix::from_blocks(&[&[&a11, &a12], &[&a21, &a22]]).expect("blocks share a size")
}

/// `A ⊞ B`: the blocks of `A` and `B` interleaved so that the positive
/// coordinates of both come first.
pub fn direct_sum_sp(a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
    let m = a.sp_rank()?;
    let n = b.sp_rank()?;
    let ab = sp_blocks(a.matrix());
    let bb = sp_blocks(b.matrix());
    let blocks = [0, 1, 2, 3].map(|k| ExactMatrix::block_diag(&[&ab[k], &bb[k]]));
    Ok(GroupElement::new_unchecked(
        assemble_sp(blocks),
        ClassicalGroup::Sp(m + n),
    ))
}

/// `A^{⊞r}`, each block replaced by `A_ij^{⊕r}`.
pub fn r_fold_sum_sp(a: &GroupElement, r: usize) -> Result<GroupElement, GroupError> {
    let n = a.sp_rank()?;
    if r == 0 {
        return Err(GroupError::IndexOutOfRange { index: 0, max: 0 });
    }
    let ab = sp_blocks(a.matrix());
    let blocks = [0, 1, 2, 3].map(|k| {
        let reps: Vec<&ExactMatrix> = std::iter::repeat_n(&ab[k], r).collect();
        ExactMatrix::block_diag(&reps)
    });
    Ok(GroupElement::new_unchecked(
        assemble_sp(blocks),
        ClassicalGroup::Sp(r * n),
    ))
}

/// Stabilization `Sp(m) → Sp(m + n)`, `A ↦ A ⊞ I₂ₙ`.
pub fn stabilization(a: &GroupElement, n: usize) -> Result<GroupElement, GroupError> {
    direct_sum_sp(a, &GroupElement::identity(ClassicalGroup::Sp(n)))
}

/// `j`-th stabilization `Sp(n) → Sp(rn)`: each block of `A` placed at
/// diagonal position `j`, padded by identities on the diagonal blocks and by
/// zeros on the off-diagonal blocks.
pub fn stabilization_sj(a: &GroupElement, j: usize, r: usize) -> Result<GroupElement, GroupError> {
    let n = a.sp_rank()?;
    if j == 0 || j > r {
        return Err(GroupError::IndexOutOfRange { index: j, max: r });
    }
    let [a11, a12, a21, a22] = sp_blocks(a.matrix());
    let blocks = [
        place_block(&a11, j, r, true),
        place_block(&a12, j, r, false),
        place_block(&a21, j, r, false),
        place_block(&a22, j, r, true),
    ];
    Ok(GroupElement::new_unchecked(
        assemble_sp(blocks),
        ClassicalGroup::Sp(r * n),
    ))
}

/// `P_j ∈ M(rn)`: swaps the `j`-th and `(j+1)`-st `n × n` diagonal blocks.
pub fn transposition_perm(j: usize, n: usize, r: usize) -> Result<ExactMatrix, GroupError> {
    if j == 0 || j + 1 > r {
        return Err(GroupError::IndexOutOfRange {
            index: j,
            max: r.saturating_sub(1),
        });
    }
    let cols: Vec<usize> = (0..r * n)
        .map(|k| {
            let (block, off) = (k / n, k % n);
            let target = if block == j - 1 {
                j
            } else if block == j {
                j - 1
            } else {
                block
            };
            target * n + off
        })
        .collect();
    Ok(ExactMatrix::perm_matrix(&cols)?)
}

/// `s_{j+1}(A) = diag(P_j, P_j) · s_j(A) · diag(P_j, P_j)`
pub fn verify_sj_conjugation(a: &GroupElement, j: usize, r: usize) -> Result<bool, GroupError> {
    let n = a.sp_rank()?;
    let p = transposition_perm(j, n, r)?;
    let d = ExactMatrix::block_diag(&[&p, &p]);
    let lhs = stabilization_sj(a, j + 1, r)?;
    let rhs = ExactMatrix::product(&[&d, stabilization_sj(a, j, r)?.matrix(), &d])?;
    Ok(*lhs.matrix() == rhs)
}

/// Doubling `O(n) → Sp(n)`, `A ↦ diag(A, A)`.
pub fn doubling(a: &GroupElement) -> Result<GroupElement, GroupError> {
    let n = a.o_rank()?;
    Ok(GroupElement::new_unchecked(
        ExactMatrix::block_diag(&[a.matrix(), a.matrix()]),
        ClassicalGroup::Sp(n),
    ))
}

/// `Sp(m) × O(n) → Sp(mn)`.
///
/// The plain Kronecker product already orders ℂ²ᵐ ⊗ ℂⁿ with the `mn`
/// positive coordinates first, so `J₂ₘ ⊗ Iₙ` is literally `J₂ₘₙ`.
pub fn tensor_sp_o(a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
    let m = a.sp_rank()?;
    let n = b.o_rank()?;
    Ok(GroupElement::new_unchecked(
        a.matrix().kron(b.matrix()),
        ClassicalGroup::Sp(m * n),
    ))
}

/// `L(A) = A ⊗ Iₙ`
pub fn left_tensor(a: &GroupElement, n: usize) -> Result<GroupElement, GroupError> {
    let m = a.sp_rank()?;
    Ok(GroupElement::new_unchecked(
        a.matrix().kron(&ExactMatrix::identity(n)),
        ClassicalGroup::Sp(m * n),
    ))
}

/// `R(B) = I₂ₘ ⊗ B`
pub fn right_tensor(m: usize, b: &GroupElement) -> Result<GroupElement, GroupError> {
    let n = b.o_rank()?;
    Ok(GroupElement::new_unchecked(
        ExactMatrix::identity(2 * m).kron(b.matrix()),
        ClassicalGroup::Sp(m * n),
    ))
}

/// Gram matrix `J₂ₘ ⊗ J₂ₙ` of the tensor product of two skew forms.
pub fn skew_tensor_gram(m: usize, n: usize) -> ExactMatrix {
    symplectic_form(m).kron(&symplectic_form(n))
}

/// A fixed `P` with `Pᵀ (J₂ₘ ⊗ J₂ₙ) P = I₄ₘₙ`.
///
/// `G = J₂ₘ ⊗ J₂ₙ` is a symmetric signed permutation with zero diagonal, so
/// it pairs indices `a < a'` with `G e_a = ε e_a'`. Each pair contributes the
/// columns `(e_a + ε e_a')/√2` and `i(e_a − ε e_a')/√2`, in increasing `a`.
/// Any other choice differs from this one by an element of O(4mn).
pub fn change_of_basis(m: usize, n: usize) -> ExactMatrix {
    let g = skew_tensor_gram(m, n);
    let size = g.rows();
    let h = CycScalar::inv_sqrt2();
    let ih = &CycScalar::i() * &h;
    let mut p = ExactMatrix::zeros(size, size);
    let mut col = 0;
    for a in 0..size {
        let partner = (0..size)
            .find(|&r| !g.get(r, a).is_zero())
            .expect("signed permutation");
        if partner < a {
            continue;
        }
        let eps = g.get(partner, a).clone();
        p.set(a, col, h.clone());
        p.set(partner, col, &eps * &h);
        p.set(a, col + 1, ih.clone());
        p.set(partner, col + 1, -(&eps * &ih));
        col += 2;
    }
    debug_assert_eq!(col, size);
    p
}

/// `Sp(m) × Sp(n) → O(4mn)`, `(A, B) ↦ P⁻¹ (A ⊗ B) P`.
pub fn tensor_sp_sp(a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
    let m = a.sp_rank()?;
    let n = b.sp_rank()?;
    let p = change_of_basis(m, n);
    // PᵀGP = I gives P⁻¹ = PᵀG
    let p_inv = p.transpose().mul(&skew_tensor_gram(m, n))?;
    let prod = a.matrix().kron(b.matrix());
    Ok(GroupElement::new_unchecked(
        ExactMatrix::product(&[&p_inv, &prod, &p])?,
        ClassicalGroup::O(4 * m * n),
    ))
}

/// `A ↦ A ⊗̃ A`, `Sp(m) → O(4m²)`.
pub fn square_tensor(a: &GroupElement) -> Result<GroupElement, GroupError> {
    tensor_sp_sp(a, a)
}

/// Permutation `P_{m,n}` with columns
/// `e₁, e_{n+1}, …, e_{(m−1)n+1}, e₂, e_{n+2}, …` (1-based), i.e. column
/// `b·m + a` is `e_{a·n + b}` (0-based). It satisfies
/// `X ⊗ Iₙ = P_{m,n} X^{⊕n} P_{m,n}⁻¹` for every `m × m` matrix `X`.
pub fn block_perm(m: usize, n: usize) -> ExactMatrix {
    let cols: Vec<usize> = (0..m * n).map(|k| (k % m) * n + k / m).collect();
    ExactMatrix::perm_matrix(&cols).expect("valid permutation")
}

/// `L(A) = diag(P, P) · A^{⊞n} · diag(P⁻¹, P⁻¹)` with `P = P_{m,n}`.
pub fn verify_l_conjugation(a: &GroupElement, n: usize) -> Result<bool, GroupError> {
    let m = a.sp_rank()?;
    let p = block_perm(m, n);
    let p_inv = p.transpose();
    let d = ExactMatrix::block_diag(&[&p, &p]);
    let d_inv = ExactMatrix::block_diag(&[&p_inv, &p_inv]);
    let rhs = ExactMatrix::product(&[&d, r_fold_sum_sp(a, n)?.matrix(), &d_inv])?;
    Ok(*left_tensor(a, n)?.matrix() == rhs)
}

/// `A ⊗ B = (A ⊗ I_q)(I_p ⊗ B)` for square `A` (p × p) and `B` (q × q).
pub fn verify_mixed_product(a: &ExactMatrix, b: &ExactMatrix) -> Result<bool, GroupError> {
    if !a.is_square() {
        return Err(GroupError::ShapeMismatch(a.shape()));
    }
    if !b.is_square() {
        return Err(GroupError::ShapeMismatch(b.shape()));
    }
    let left = a.kron(&ExactMatrix::identity(b.rows()));
    let right = ExactMatrix::identity(a.rows()).kron(b);
    Ok(a.kron(b) == left.mul(&right)?)
}

/// `tensor_sp_o(A, B) = L(A) · R(B)` with both factors computed separately.
pub fn verify_tensor_factorization(a: &GroupElement, b: &GroupElement) -> Result<bool, GroupError> {
    let m = a.sp_rank()?;
    let n = b.o_rank()?;
    let l = left_tensor(a, n)?;
    let r = right_tensor(m, b)?;
    Ok(*tensor_sp_o(a, b)?.matrix() == l.matrix().mul(r.matrix())?)
}

/// `(−I₂ₘ) ⊗ Iₙ = −I₂ₘₙ`: the centre of Sp(m) lands in the centre of Sp(mn).
pub fn verify_center_to_center(m: usize, n: usize) -> Result<bool, GroupError> {
    let minus = GroupElement::new_unchecked(
        ExactMatrix::identity(2 * m).neg(),
        ClassicalGroup::Sp(m),
    );
    let id = GroupElement::identity(ClassicalGroup::SO(n));
    Ok(*tensor_sp_o(&minus, &id)?.matrix() == ExactMatrix::identity(2 * m * n).neg())
}

#[cfg(test)]
mod tests {
    use super::super::{is_orthogonal, is_symplectic, random_so_seeded, random_sp_seeded};
    use super::*;

    fn sp_id(m: usize) -> GroupElement {
        GroupElement::identity(ClassicalGroup::Sp(m))
    }

    #[test]
    fn direct_sum_of_identities() {
        let s = direct_sum_sp(&sp_id(1), &sp_id(1)).unwrap();
        assert!(s.matrix().is_identity());
        assert_eq!(s.group(), ClassicalGroup::Sp(2));
    }

    #[test]
    fn direct_sum_layout() {
        let a = random_sp_seeded(1, 3);
        let b = random_sp_seeded(2, 4);
        let s = direct_sum_sp(&a, &b).unwrap();
        let (am, bm, sm) = (a.matrix(), b.matrix(), s.matrix());
        // Sp(3) index order: [a₊, b₊, b₊, a₋, b₋, b₋]
        let map_a = [0, 3];
        let map_b = [1, 2, 4, 5];
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(sm.get(map_a[r], map_a[c]), am.get(r, c));
            }
        }
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(sm.get(map_b[r], map_b[c]), bm.get(r, c));
            }
            for c in 0..2 {
                assert!(sm.get(map_b[r], map_a[c]).is_zero());
            }
        }
        assert!(is_symplectic(sm).unwrap());
    }

    #[test]
    fn stabilization_matches_first_sj() {
        let a = random_sp_seeded(1, 11);
        let s = stabilization(&a, 2).unwrap();
        let s1 = stabilization_sj(&a, 1, 3).unwrap();
        assert_eq!(s, s1);
    }

    #[test]
    fn r_fold_cases() {
        let a = random_sp_seeded(1, 5);
        assert_eq!(r_fold_sum_sp(&a, 1).unwrap(), a);
        assert!(r_fold_sum_sp(&sp_id(1), 2).unwrap().matrix().is_identity());
        let three = r_fold_sum_sp(&a, 3).unwrap();
        let nested = direct_sum_sp(&a, &direct_sum_sp(&a, &a).unwrap()).unwrap();
        assert_eq!(three, nested);
        assert!(r_fold_sum_sp(&a, 0).is_err());
    }

    #[test]
    fn sj_of_identity_is_identity() {
        for j in 1..=3 {
            assert!(stabilization_sj(&sp_id(2), j, 3).unwrap().matrix().is_identity());
        }
        assert!(matches!(
            stabilization_sj(&sp_id(2), 4, 3),
            Err(GroupError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn sj_conjugation_cases() {
        let a = random_sp_seeded(1, 21);
        assert!(verify_sj_conjugation(&a, 1, 2).unwrap());
        assert!(verify_sj_conjugation(&a, 2, 3).unwrap());
        assert!(verify_sj_conjugation(&sp_id(2), 1, 2).unwrap());
        assert!(verify_sj_conjugation(&a, 2, 2).is_err());
    }

    #[test]
    fn transposition_perm_swaps_blocks() {
        let p = transposition_perm(2, 1, 4).unwrap();
        let expected = ExactMatrix::perm_matrix(&[0, 2, 1, 3]).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn doubling_of_reflection() {
        let mut r = ExactMatrix::identity(3);
        r.set(2, 2, CycScalar::from_int(-1));
        let a = GroupElement::new(r, ClassicalGroup::O(3)).unwrap();
        let d = doubling(&a).unwrap();
        assert!(is_symplectic(d.matrix()).unwrap());
        assert!(doubling(&GroupElement::identity(ClassicalGroup::O(2)))
            .unwrap()
            .matrix()
            .is_identity());
        assert!(doubling(&sp_id(1)).is_err());
    }

    #[test]
    fn tensor_sp_o_center_and_identity() {
        assert!(verify_center_to_center(2, 3).unwrap());
        let t = tensor_sp_o(&sp_id(2), &GroupElement::identity(ClassicalGroup::O(3))).unwrap();
        assert!(t.matrix().is_identity());
        assert_eq!(t.group(), ClassicalGroup::Sp(6));
    }

    #[test]
    fn kron_of_forms_is_standard_form() {
        let j = symplectic_form(2).kron(&ExactMatrix::identity(3));
        assert_eq!(j, symplectic_form(6));
    }

    #[test]
    fn change_of_basis_orthonormalizes() {
        for (m, n) in [(1, 1), (1, 2), (2, 1)] {
            let p = change_of_basis(m, n);
            let g = skew_tensor_gram(m, n);
            let pgp = ExactMatrix::product(&[&p.transpose(), &g, &p]).unwrap();
            assert!(pgp.is_identity(), "m={m} n={n}");
            assert_eq!(p.inverse().unwrap(), p.transpose().mul(&g).unwrap());
        }
    }

    #[test]
    fn tensor_sp_sp_identity_and_random() {
        let t = tensor_sp_sp(&sp_id(1), &sp_id(1)).unwrap();
        assert!(t.matrix().is_identity());
        let t = tensor_sp_sp(&random_sp_seeded(1, 1), &random_sp_seeded(1, 2)).unwrap();
        assert!(is_orthogonal(t.matrix()).unwrap());
    }

    #[test]
    fn l_conjugation_cases() {
        assert_eq!(block_perm(3, 1), ExactMatrix::identity(3));
        let a = random_sp_seeded(1, 8);
        assert_eq!(left_tensor(&a, 1).unwrap().matrix(), a.matrix());
        assert!(verify_l_conjugation(&a, 2).unwrap());
        assert!(verify_l_conjugation(&random_sp_seeded(2, 9), 3).unwrap());
    }

    #[test]
    fn block_perm_columns() {
        // m = 2, n = 3: e1, e4, e2, e5, e3, e6 (1-based)
        let p = block_perm(2, 3);
        assert_eq!(p, ExactMatrix::perm_matrix(&[0, 3, 1, 4, 2, 5]).unwrap());
    }

    #[test]
    fn mixed_product_cases() {
        let a = ExactMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let b = ExactMatrix::from_int_rows(&[&[0, 1, 1], &[2, 0, 1], &[1, 1, 5]]);
        assert!(verify_mixed_product(&a, &b).unwrap());
        assert!(verify_mixed_product(&ExactMatrix::identity(2), &ExactMatrix::identity(3)).unwrap());
        let x = ExactMatrix::from_int_rows(&[&[7]]);
        let y = ExactMatrix::diagonal(&[CycScalar::zeta()]);
        assert!(verify_mixed_product(&x, &y).unwrap());
    }

    #[test]
    fn tensor_factorization_holds() {
        let a = random_sp_seeded(2, 31);
        let b = random_so_seeded(3, 32);
        assert!(verify_tensor_factorization(&a, &b).unwrap());
        let l = left_tensor(&a, 3).unwrap();
        let t = tensor_sp_o(&a, &GroupElement::identity(ClassicalGroup::O(3))).unwrap();
        assert_eq!(l.matrix(), t.matrix());
    }

    #[test]
    fn wrong_group_inputs() {
        let o = GroupElement::identity(ClassicalGroup::O(2));
        assert!(matches!(
            direct_sum_sp(&o, &sp_id(1)),
            Err(GroupError::WrongGroup { .. })
        ));
        assert!(tensor_sp_sp(&sp_id(1), &o).is_err());
    }
}
