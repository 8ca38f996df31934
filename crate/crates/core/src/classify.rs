//! Normal forms `G(a)` and classification modulo 2k-moves and Ξ-moves.
//!
//! Two diagrams are related by 2k-moves and Ξ-moves exactly when their odd
//! writhes agree modulo `2k`, and by Ξ-moves alone exactly when the odd
//! writhes agree. Classification therefore reads the odd writhe; the
//! shell-pair macros in [`crate::moves`] realize the moves themselves.

use serde::Serialize;

use crate::error::ParamError;
use crate::gauss::{ChordId, Endpoint, GaussDiagram, Sign};
use crate::invariants::odd_writhe;

/// The class of `G(a)` among the `k` classes modulo 2k-moves and Ξ-moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NormalForm {
    pub a: i64,
    pub k: u32,
}

impl NormalForm {
    /// Reduces `a` to `0 <= a < k`.
    pub fn reduced(a: i64, k: u32) -> Result<NormalForm, ParamError> {
        if k == 0 {
            return Err(ParamError::InvalidK);
        }
        Ok(NormalForm { a: a.rem_euclid(k as i64), k })
    }

    pub fn diagram(&self) -> GaussDiagram {
        normal_form_diagram(self.a)
    }
}

/// `|a|` consecutive shell-pairs `O O U U`, positive for `a > 0` and
/// negative for `a < 0`. Each pair carries one chord of index 1 and one of
/// index -1, so the odd writhe is `2a`.
pub fn normal_form_diagram(a: i64) -> GaussDiagram {
    let sign = if a < 0 { Sign::Neg } else { Sign::Pos };
    let n = a.unsigned_abs() as u32;
    let mut circle = Vec::with_capacity(4 * n as usize);
    let mut signs = std::collections::BTreeMap::new();
    for j in 0..n {
        let (x, y) = (ChordId(2 * j + 1), ChordId(2 * j + 2));
        circle.extend([Endpoint::initial(x), Endpoint::initial(y), Endpoint::terminal(x), Endpoint::terminal(y)]);
        signs.insert(x, sign);
        signs.insert(y, sign);
    }
    GaussDiagram::from_parts(circle, signs)
}

/// The unique `0 <= a < k` with `2a = J(G) (mod 2k)`.
pub fn classify_2k_xi(g: &GaussDiagram, k: u32) -> Result<NormalForm, ParamError> {
    NormalForm::reduced(odd_writhe(g) / 2, k)
}

pub fn same_class_2k_xi(g: &GaussDiagram, h: &GaussDiagram, k: u32) -> Result<bool, ParamError> {
    if k == 0 {
        return Err(ParamError::InvalidK);
    }
    Ok((odd_writhe(g) - odd_writhe(h)).rem_euclid(2 * k as i64) == 0)
}

/// Ξ-equivalence: equal odd writhes.
pub fn xi_equivalent(g: &GaussDiagram, h: &GaussDiagram) -> bool {
    odd_writhe(g) == odd_writhe(h)
}

/// Least `k` such that the odd writhes differ modulo `2k`, i.e. the least
/// `k` for which the two diagrams are provably not related by 2k-moves.
/// `None` when the odd writhes are equal.
pub fn separating_k(g: &GaussDiagram, h: &GaussDiagram) -> Option<u32> {
    let d = (odd_writhe(g) - odd_writhe(h)).unsigned_abs();
    if d == 0 {
        return None;
    }
    // d + 1 never divides d, so the scan ends
    (1..).find(|&k: &u32| !d.is_multiple_of(2 * k as u64))
}

/// `[G(0), G(1), ..., G(k-1)]`, one diagram per class.
pub fn representative_system(k: u32) -> Result<Vec<GaussDiagram>, ParamError> {
    if k == 0 {
        return Err(ParamError::InvalidK);
    }
    Ok((0..k as i64).map(normal_form_diagram).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::writhe_vector;

    fn g(s: &str) -> GaussDiagram {
        GaussDiagram::parse(s).unwrap()
    }

    #[test]
    fn normal_forms() {
        assert!(normal_form_diagram(0).is_empty());
        assert_eq!(normal_form_diagram(1).to_string(), "O1+ O2+ U1+ U2+");
        let g2 = normal_form_diagram(2);
        assert_eq!(g2.chord_count(), 4);
        assert_eq!(odd_writhe(&g2), 4);
        assert_eq!(normal_form_diagram(-1).to_string(), "O1- O2- U1- U2-");
        assert_eq!(odd_writhe(&normal_form_diagram(-1)), -2);
        let w = writhe_vector(&normal_form_diagram(3));
        assert_eq!((w.get(1), w.get(-1)), (3, 3));
    }

    #[test]
    fn classification_examples() {
        let trefoil = g("O1+ O2+ U1+ U2+");
        assert_eq!(classify_2k_xi(&trefoil, 3).unwrap().a, 1);
        assert_eq!(classify_2k_xi(&normal_form_diagram(5), 3).unwrap().a, 2);
        assert_eq!(classify_2k_xi(&GaussDiagram::empty(), 7).unwrap().a, 0);
        assert_eq!(classify_2k_xi(&normal_form_diagram(-1), 3).unwrap().a, 2);
        assert!(classify_2k_xi(&trefoil, 0).is_err());
    }

    #[test]
    fn relations() {
        for k in 1..6 {
            assert!(same_class_2k_xi(&normal_form_diagram(1), &normal_form_diagram(k as i64 + 1), k).unwrap());
            if k >= 2 {
                assert!(!same_class_2k_xi(&normal_form_diagram(0), &normal_form_diagram(1), k).unwrap());
            }
        }
        assert!(xi_equivalent(&g("O1+ O2+ U1+ U2+"), &normal_form_diagram(1)));
        assert!(!xi_equivalent(&normal_form_diagram(1), &normal_form_diagram(2)));
    }

    #[test]
    fn separating() {
        let (g0, g1, g3) = (normal_form_diagram(0), normal_form_diagram(1), normal_form_diagram(3));
        assert_eq!(separating_k(&g0, &g1), Some(2));
        assert_eq!(separating_k(&g0, &g3), Some(2));
        assert_eq!(separating_k(&g1, &g1), None);
        // J difference 12 = 2*6: k = 1, 2, 3 divide, 4 does not
        assert_eq!(separating_k(&g0, &normal_form_diagram(6)), Some(4));
    }

    #[test]
    fn representatives() {
        let reps = representative_system(3).unwrap();
        let js: Vec<i64> = reps.iter().map(odd_writhe).collect();
        assert_eq!(js, vec![0, 2, 4]);
        assert_eq!(representative_system(1).unwrap(), vec![GaussDiagram::empty()]);
    }
}
