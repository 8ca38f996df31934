use super::{check_pos, step, Move, MoveScript};
use crate::error::MoveError;
use crate::gauss::{Endpoint, GaussDiagram};

/// Ξ-move: exchanges the endpoints at `at` and `at+2` (cyclic), keeping
/// every sign and chord orientation.
pub fn apply_xi(g: &GaussDiagram, at: usize) -> Result<GaussDiagram, MoveError> {
    let len = g.len();
    if len < 3 {
        return Err(MoveError::TooFewEndpoints);
    }
    check_pos(at, len)?;
    Ok(g.with_swapped(at, (at + 2) % len))
}

/// Rearranges the window of `target.len()` endpoints starting at `start` into
/// `target` using Ξ-moves only. Ξ-moves shift endpoints by two, so every
/// endpoint must keep the parity of its offset inside the window.
pub fn xi_arrange(
    g: &GaussDiagram,
    start: usize,
    target: &[Endpoint],
) -> Result<(GaussDiagram, MoveScript), MoveError> {
    let len = g.len();
    let w = target.len();
    if w > len {
        return Err(MoveError::mismatch("window longer than the circle"));
    }
    let mut cur = g.clone();
    let mut script = MoveScript::new();
    let abs = |i: usize| (start + i) % len;
    for (t, &want) in target.iter().enumerate() {
        let found = (t..w)
            .step_by(2)
            .find(|&i| cur.at(abs(i)) == want)
            .ok_or_else(|| MoveError::mismatch("target is not a parity-preserving rearrangement of the window"))?;
        let mut i = found;
        while i > t {
            step(&mut cur, &mut script, Move::XiSwap { at: abs(i - 2) })?;
            i -= 2;
        }
    }
    Ok((cur, script))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{ChordId, Role};
    use crate::invariants::odd_writhe;

    fn g(s: &str) -> GaussDiagram {
        GaussDiagram::parse(s).unwrap()
    }

    #[test]
    fn reverses_a_shell() {
        let d = g("O1+ O2+ U1+ U2+");
        let after = apply_xi(&d, 0).unwrap();
        assert_eq!(after.to_string(), "U1+ O2+ O1+ U2+");
        assert_eq!(after.chord_positions(ChordId(1)), Some((2, 0)));
    }

    #[test]
    fn involution_and_wraparound() {
        let d = g("O1+ U2- O3+ U1+ O2- U3+");
        for at in 0..d.len() {
            let once = apply_xi(&d, at).unwrap();
            assert_eq!(apply_xi(&once, at).unwrap(), d);
        }
        assert_eq!(apply_xi(&d, 5).unwrap().to_string(), "O1+ U3+ O3+ U1+ O2- U2-");
    }

    #[test]
    fn needs_three_endpoints() {
        assert_eq!(apply_xi(&g("O1+ U1+"), 0), Err(MoveError::TooFewEndpoints));
        assert!(matches!(apply_xi(&g("O1+ O2+ U1+ U2+"), 4), Err(MoveError::OutOfRange { .. })));
    }

    #[test]
    fn preserves_odd_writhe() {
        for seed in 0..200 {
            let d = GaussDiagram::random(2 + (seed % 6) as usize, seed);
            let j = odd_writhe(&d);
            for at in 0..d.len() {
                assert_eq!(odd_writhe(&apply_xi(&d, at).unwrap()), j);
            }
        }
    }

    #[test]
    fn arrange_sorts_within_parity_classes() {
        let d = g("O1+ O2+ U1+ U2+ O3- U3-");
        let target: Vec<Endpoint> = [(1, Role::Terminal), (3, Role::Terminal), (1, Role::Initial), (2, Role::Terminal), (3, Role::Initial), (2, Role::Initial)]
            .iter()
            .map(|&(c, r)| Endpoint::new(ChordId(c), r))
            .collect();
        let (out, script) = xi_arrange(&d, 0, &target).unwrap();
        assert_eq!(out.circle(), &target[..]);
        assert_eq!(script.replay(&d).unwrap(), out);
        let bad = [Endpoint::initial(ChordId(2))];
        assert!(xi_arrange(&d, 0, &bad).is_err());
    }
}
