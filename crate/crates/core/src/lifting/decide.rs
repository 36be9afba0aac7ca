use num_integer::Integer;
use serde::Serialize;

use super::{bezout_uv, connectivity_j, no_section_witness, BezoutWitness, LiftingError, NoSectionCase, NoSectionWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Decomposable,
    NoSection,
    NotCovered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factors {
    pub first: String,
    pub second: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecisionReport {
    pub verdict: Verdict,
    pub theorem: String,
    pub hypotheses: Vec<Hypothesis>,
    /// First hypothesis that fails, in the order listed.
    pub failed_hypothesis: Option<String>,
    pub witnesses: Option<BezoutWitness>,
    pub connectivity: Option<u64>,
    pub obstruction: Option<NoSectionWitness>,
    pub factors: Option<Factors>,
    pub postnikov: Option<PostnikovReport>,
    pub notes: Vec<String>,
}

fn hyp(name: impl Into<String>, holds: bool) -> Hypothesis {
    Hypothesis {
        name: name.into(),
        holds,
    }
}

fn first_failure(h: &[Hypothesis]) -> Option<String> {
    h.iter().find(|h| !h.holds).map(|h| h.name.clone())
}

pub const AZUMAYA_THEOREM: &str =
    "lifting along BPSp(m) x BSO(n) -> BPSp(mn) over CW complexes of dimension <= 7 \
     (m > 1, n > 7, n odd, gcd(m, n) = 1), via the 7-connected map J";
pub const BUNDLE_THEOREM: &str =
    "lifting along BSp(m) x BSO(n) -> BSp(mn) over CW complexes of dimension <= n (n odd), \
     via the Moore-Postnikov tower";

/// Whether every topological Azumaya algebra of degree `2mn` with symplectic
/// involution over a `dim`-dimensional CW complex splits as a tensor product
/// of degree `2m` (symplectic) and degree `n` (orthogonal) algebras.
pub fn decide_azumaya(m: u64, n: u64, dim: u64) -> DecisionReport {
    let hypotheses = vec![
        hyp("n odd", n % 2 == 1),
        hyp("gcd(m, n) = 1", m.gcd(&n) == 1),
        hyp("m > 1", m > 1),
        hyp("n > 7", n > 7),
        hyp("dim(X) <= 7", dim <= 7),
    ];
    let failed = first_failure(&hypotheses);
    let witnesses = bezout_uv(m, n).ok();
    let obstruction = if n % 2 == 1 {
        no_section_witness(m, n).ok().flatten()
    } else {
        None
    };
    let mut notes = Vec::new();
    if failed.is_none() {
        let connectivity = connectivity_j(m, n).ok();
        let factors = Factors {
            first: format!("degree {} algebra with symplectic involution", 2 * m),
            second: format!("degree {n} algebra with orthogonal involution, Brauer-trivial"),
        };
        notes.push(format!(
            "J is {}-connected and dim(X) = {dim} <= 7, so every map X -> BPSp(mn) lifts",
            connectivity.map_or("?".into(), |c| c.to_string())
        ));
        return DecisionReport {
            verdict: Verdict::Decomposable,
            theorem: AZUMAYA_THEOREM.into(),
            hypotheses,
            failed_hypothesis: None,
            witnesses,
            connectivity,
            obstruction,
            factors: Some(factors),
            postnikov: None,
            notes,
        };
    }
    if let Some(w) = &obstruction {
        notes.push(format!(
            "f_tensor has no section: in degree {} its image is {}",
            w.degree, w.image
        ));
        if w.degree <= dim {
            notes.push(format!(
                "a generator of pi_{} BPSp(mn) over S^{} does not decompose",
                w.degree, w.degree
            ));
        }
    }
    DecisionReport {
        verdict: Verdict::NotCovered,
        theorem: AZUMAYA_THEOREM.into(),
        hypotheses,
        failed_hypothesis: failed,
        witnesses,
        connectivity: None,
        obstruction,
        factors: None,
        postnikov: None,
        notes,
    }
}

/// Whether every symplectic bundle of rank `2mn` over a `dim`-dimensional
/// CW complex is a tensor product of a rank `2m` symplectic and a rank `n`
/// oriented orthogonal bundle.
pub fn decide_bundle(m: u64, n: u64, dim: u64) -> DecisionReport {
    let hypotheses = vec![hyp("n odd", n % 2 == 1), hyp("dim(X) <= n", dim <= n)];
    let failed = first_failure(&hypotheses);
    let postnikov = postnikov_degree_check(m, n).ok();
    let decomposable = failed.is_none() && postnikov.as_ref().is_some_and(|p| p.pass);
    let mut notes = Vec::new();
    if decomposable {
        notes.push(
            "every obstruction group vanishes on the n-skeleton of BSp(mn), whose cohomology \
             is concentrated in degrees divisible by 4"
                .into(),
        );
    }
    DecisionReport {
        verdict: if decomposable {
            Verdict::Decomposable
        } else {
            Verdict::NotCovered
        },
        theorem: BUNDLE_THEOREM.into(),
        hypotheses,
        failed_hypothesis: failed,
        witnesses: None,
        connectivity: None,
        obstruction: None,
        factors: decomposable.then(|| Factors {
            first: format!("rank {} symplectic bundle", 2 * m),
            second: format!("rank {n} oriented orthogonal bundle"),
        }),
        postnikov,
        notes,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PostnikovStage {
    pub i: u64,
    /// `i+2, i+6, i+7, i+8`
    pub degrees: [u64; 4],
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PostnikovReport {
    pub m: u64,
    pub n: u64,
    pub stages: Vec<PostnikovStage>,
    /// The bottom k-invariant lands in `K(ℤ/2, 3)`; it is handled by
    /// factoring through the n-skeleton and is listed, not checked.
    pub k1_degree: u64,
    pub pass: bool,
}

/// Obstruction degrees of the Moore–Postnikov tower for `i ≡ 3 (mod 8)`,
/// `1 < i < n − 1`: each must avoid multiples of 4.
pub fn postnikov_degree_check(m: u64, n: u64) -> Result<PostnikovReport, LiftingError> {
    if n % 2 == 0 {
        return Err(LiftingError::EvenN(n));
    }
    let stages: Vec<PostnikovStage> = (2..n.saturating_sub(1))
        .filter(|i| i % 8 == 3)
        .map(|i| {
            let degrees = [i + 2, i + 6, i + 7, i + 8];
            PostnikovStage {
                i,
                degrees,
                pass: degrees.iter().all(|d| d % 4 != 0),
            }
        })
        .collect();
    let pass = stages.iter().all(|s| s.pass);
    Ok(PostnikovReport {
        m,
        n,
        stages,
        k1_degree: 3,
        pass,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionKind {
    /// Sphere of dimension `4m+4`
    Sphere4m4,
    /// Sphere of dimension 8, 12 or 16 for `n = 3, 5, 7`
    SphereC,
}

/// An algebra on a sphere that generates `π_k BPSp(mn)` and admits no
/// decomposition.
pub fn example_obstruction(kind: ObstructionKind, m: u64, n: u64) -> Result<DecisionReport, LiftingError> {
    let wanted = match kind {
        ObstructionKind::Sphere4m4 => NoSectionCase::AboveSymplecticRange,
        ObstructionKind::SphereC => NoSectionCase::SmallOrthogonal,
    };
    let w = match no_section_witness(m, n)? {
        Some(w) if w.case == wanted => w,
        _ => {
            return Err(LiftingError::CaseMismatch(format!(
                "(m, n) = ({m}, {n}) is not in the {wanted:?} case"
            )))
        }
    };
    let notes = vec![
        format!("sphere S^{}", w.degree),
        format!(
            "class: generator of pi_{} BPSp({}) = Z, a degree {} algebra with symplectic involution",
            w.degree,
            m * n,
            2 * m * n
        ),
        format!(
            "any decomposition would factor the generator through f_tensor, whose image in degree {} is {} != Z",
            w.degree, w.image
        ),
    ];
    Ok(DecisionReport {
        verdict: Verdict::NoSection,
        theorem: "f_tensor: BPSp(m) x BSO(n) -> BPSp(mn) has no section".into(),
        hypotheses: vec![hyp("n odd", true)],
        failed_hypothesis: None,
        witnesses: bezout_uv(m, n).ok(),
        connectivity: None,
        obstruction: Some(w),
        factors: None,
        postnikov: None,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn azumaya_examples() {
        let r = decide_azumaya(2, 9, 7);
        assert_eq!(r.verdict, Verdict::Decomposable);
        assert_eq!(r.connectivity, Some(7));
        let f = r.factors.unwrap();
        assert!(f.first.starts_with("degree 4 ") && f.second.starts_with("degree 9 "));
        assert!(r.witnesses.unwrap().is_valid());

        let r = decide_azumaya(2, 13, 12);
        assert_eq!(r.verdict, Verdict::NotCovered);
        assert_eq!(r.failed_hypothesis.as_deref(), Some("dim(X) <= 7"));
        assert_eq!(r.obstruction.unwrap().degree, 12);

        let r = decide_azumaya(2, 2, 7);
        assert_eq!(r.verdict, Verdict::NotCovered);
        assert_eq!(r.failed_hypothesis.as_deref(), Some("n odd"));
    }

    #[test]
    fn bundle_examples() {
        let r = decide_bundle(3, 11, 11);
        assert_eq!(r.verdict, Verdict::Decomposable);
        assert!(r.postnikov.unwrap().pass);
        assert_eq!(decide_bundle(3, 11, 12).verdict, Verdict::NotCovered);
        let r = decide_bundle(3, 4, 3);
        assert_eq!(r.verdict, Verdict::NotCovered);
        assert_eq!(r.failed_hypothesis.as_deref(), Some("n odd"));
    }

    #[test]
    fn postnikov() {
        let r = postnikov_degree_check(1, 11).unwrap();
        assert_eq!(r.stages.len(), 1);
        assert_eq!(r.stages[0].degrees, [5, 9, 10, 11]);
        assert!(r.pass);
        assert_eq!(postnikov_degree_check(1, 10), Err(LiftingError::EvenN(10)));
        assert!(postnikov_degree_check(1, 3).unwrap().stages.is_empty());
    }

    #[test]
    fn examples_on_spheres() {
        let r = example_obstruction(ObstructionKind::Sphere4m4, 2, 13).unwrap();
        assert_eq!(r.verdict, Verdict::NoSection);
        assert!(r.notes[0].contains("S^12"));
        let r = example_obstruction(ObstructionKind::SphereC, 4, 3).unwrap();
        assert!(r.notes[0].contains("S^8"));
        assert!(matches!(
            example_obstruction(ObstructionKind::Sphere4m4, 2, 9),
            Err(LiftingError::CaseMismatch(_))
        ));
    }
}
