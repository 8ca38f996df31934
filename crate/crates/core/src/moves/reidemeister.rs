//! Reidemeister moves I, II and III at the Gauss-diagram level.

use std::collections::BTreeSet;

use super::{check_pos, ChordLayout, Move};
use crate::error::MoveError;
use crate::gauss::{ChordId, Endpoint, GaussDiagram, Role, Sign};

fn adjacent(len: usize, p: usize, q: usize) -> bool {
    len >= 2 && ((p + 1) % len == q || (q + 1) % len == p)
}

// start of the adjacent pair {p, q}
fn pair_start(len: usize, p: usize, q: usize) -> usize {
    if (p + 1) % len == q {
        p
    } else {
        q
    }
}

pub(super) fn r1_add(
    g: &GaussDiagram,
    at: usize,
    sign: Sign,
    first: Role,
    id: Option<ChordId>,
) -> Result<GaussDiagram, MoveError> {
    let len = g.len() + 2;
    check_pos(at, len)?;
    let id = fresh_or(g, id)?;
    let e = Endpoint::new(id, first);
    Ok(g.with_inserted(&[(at, e), ((at + 1) % len, e.partner())], &[(id, sign)]))
}

pub(super) fn r1_remove(g: &GaussDiagram, chord: ChordId) -> Result<GaussDiagram, MoveError> {
    let (i, t) = g
        .chord_positions(chord)
        .ok_or_else(|| MoveError::mismatch(format!("no chord {chord}")))?;
    if !adjacent(g.len(), i, t) {
        return Err(MoveError::mismatch(format!("chord {chord} is not isolated")));
    }
    Ok(g.without_chords(&[chord]))
}

pub(super) fn r1_inverse(before: &GaussDiagram, chord: ChordId) -> Result<Move, MoveError> {
    let (i, t) = before
        .chord_positions(chord)
        .ok_or_else(|| MoveError::mismatch(format!("no chord {chord}")))?;
    let at = pair_start(before.len(), i, t);
    Ok(Move::R1Add {
        at,
        sign: before.sign(chord).unwrap(),
        first: before.at(at).role,
        id: Some(chord),
    })
}

fn fresh_or(g: &GaussDiagram, id: Option<ChordId>) -> Result<ChordId, MoveError> {
    match id {
        Some(c) if c.0 == 0 || g.contains_chord(c) => {
            Err(MoveError::mismatch(format!("chord label {c} is already in use")))
        }
        Some(c) => Ok(c),
        None => Ok(g.fresh_id()),
    }
}

pub(super) fn r2_add(
    g: &GaussDiagram,
    initials: usize,
    terminals: usize,
    sign: Sign,
    layout: ChordLayout,
    ids: Option<[ChordId; 2]>,
) -> Result<GaussDiagram, MoveError> {
    let len = g.len() + 4;
    check_pos(initials, len)?;
    check_pos(terminals, len)?;
    let slots = [initials, (initials + 1) % len, terminals, (terminals + 1) % len];
    if slots.iter().collect::<BTreeSet<_>>().len() != 4 {
        return Err(MoveError::mismatch("R2 endpoint pairs overlap"));
    }
    let [x, y] = match ids {
        Some([x, y]) if x == y => return Err(MoveError::mismatch("R2 chords need distinct labels")),
        Some([x, y]) => [fresh_or(g, Some(x))?, fresh_or(g, Some(y))?],
        None => {
            let x = g.fresh_id();
            [x, ChordId(x.0 + 1)]
        }
    };
    let (t_first, t_second) = match layout {
        ChordLayout::Crossed => (x, y),
        ChordLayout::Nested => (y, x),
    };
    let placed = [
        (slots[0], Endpoint::initial(x)),
        (slots[1], Endpoint::initial(y)),
        (slots[2], Endpoint::terminal(t_first)),
        (slots[3], Endpoint::terminal(t_second)),
    ];
    Ok(g.with_inserted(&placed, &[(x, sign), (y, sign.flip())]))
}

fn r2_pattern(g: &GaussDiagram, a: ChordId, b: ChordId) -> Result<(usize, usize, usize, usize), MoveError> {
    let miss = |c: ChordId| MoveError::mismatch(format!("no chord {c}"));
    if a == b {
        return Err(MoveError::mismatch("R2 needs two distinct chords"));
    }
    let (ia, ta) = g.chord_positions(a).ok_or_else(|| miss(a))?;
    let (ib, tb) = g.chord_positions(b).ok_or_else(|| miss(b))?;
    if g.sign(a) == g.sign(b) {
        return Err(MoveError::mismatch(format!("chords {a} and {b} have the same sign")));
    }
    let len = g.len();
    if !adjacent(len, ia, ib) || !adjacent(len, ta, tb) {
        return Err(MoveError::mismatch(format!("chords {a} and {b} do not form an R2 bigon")));
    }
    Ok((ia, ta, ib, tb))
}

pub(super) fn r2_remove(g: &GaussDiagram, chords: [ChordId; 2]) -> Result<GaussDiagram, MoveError> {
    r2_pattern(g, chords[0], chords[1])?;
    Ok(g.without_chords(&chords))
}

pub(super) fn r2_inverse(before: &GaussDiagram, chords: [ChordId; 2]) -> Result<Move, MoveError> {
    let (ia, ta, ib, tb) = r2_pattern(before, chords[0], chords[1])?;
    let len = before.len();
    let initials = pair_start(len, ia, ib);
    let terminals = pair_start(len, ta, tb);
    let x = before.at(initials).chord;
    let y = if x == chords[0] { chords[1] } else { chords[0] };
    let layout = if before.at(terminals).chord == x { ChordLayout::Crossed } else { ChordLayout::Nested };
    Ok(Move::R2Add {
        initials,
        terminals,
        sign: before.sign(x).unwrap(),
        layout,
        ids: Some([x, y]),
    })
}

/// Sign rule for a Reidemeister III triangle.
///
/// The three strands are ranked top, middle and bottom. `top_order` is true
/// when, along the top strand, its crossing with the middle strand comes
/// first; `middle_order` is true when the middle strand meets the top strand
/// before the bottom one; `bottom_order` is true when the bottom strand meets
/// the top strand first. A triangle in the plane with these orders exists
/// exactly when the crossing signs satisfy
/// `s(tm) s(tb) = +1 <=> middle_order == bottom_order` and
/// `s(tb) s(mb) = +1 <=> middle_order == top_order`.
pub fn r3_signs_compatible(
    top_order: bool,
    middle_order: bool,
    bottom_order: bool,
    s_tm: Sign,
    s_tb: Sign,
    s_mb: Sign,
) -> bool {
    let tm_tb = s_tm == s_tb;
    let tb_mb = s_tb == s_mb;
    tm_tb == (middle_order == bottom_order) && tb_mb == (middle_order == top_order)
}

/// The three endpoint pairs of an R3 triangle, identified by strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct R3Frame {
    pub top: usize,
    pub middle: usize,
    pub bottom: usize,
    pub tm: ChordId,
    pub tb: ChordId,
    pub mb: ChordId,
}

impl R3Frame {
    /// Reads the frame at the given pair starts, checking the pattern.
    pub fn read(g: &GaussDiagram, pairs: [usize; 3]) -> Result<R3Frame, MoveError> {
        let len = g.len();
        if len < 6 {
            return Err(MoveError::mismatch("R3 needs at least three chords"));
        }
        for &p in &pairs {
            check_pos(p, len)?;
        }
        let slots: BTreeSet<usize> = pairs.iter().flat_map(|&p| [p, (p + 1) % len]).collect();
        if slots.len() != 6 {
            return Err(MoveError::mismatch("R3 pairs overlap"));
        }
        let (mut top, mut middle, mut bottom) = (None, None, None);
        for &p in &pairs {
            let (a, b) = (g.at(p), g.at(p + 1));
            if a.chord == b.chord {
                return Err(MoveError::mismatch("R3 pair spans a single chord"));
            }
            let slot = match (a.role, b.role) {
                (Role::Initial, Role::Initial) => &mut top,
                (Role::Terminal, Role::Terminal) => &mut bottom,
                _ => &mut middle,
            };
            if slot.replace(p).is_some() {
                return Err(MoveError::mismatch("R3 pairs do not have one top, middle and bottom strand"));
            }
        }
        let (Some(top), Some(middle), Some(bottom)) = (top, middle, bottom) else {
            return Err(MoveError::mismatch("R3 pairs do not have one top, middle and bottom strand"));
        };
        let chords = |p: usize| [g.at(p).chord, g.at(p + 1).chord];
        let shared = |p: usize, q: usize| {
            let (cp, cq) = (chords(p), chords(q));
            cp.into_iter().find(|c| cq.contains(c))
        };
        let fail = || MoveError::mismatch("R3 pairs do not share chords pairwise");
        let tm = shared(top, middle).ok_or_else(fail)?;
        let tb = shared(top, bottom).ok_or_else(fail)?;
        let mb = shared(middle, bottom).ok_or_else(fail)?;
        if tm == tb || tb == mb || tm == mb {
            return Err(fail());
        }
        Ok(R3Frame { top, middle, bottom, tm, tb, mb })
    }

    pub fn signs_ok(&self, g: &GaussDiagram) -> bool {
        let top_order = g.at(self.top).chord == self.tm;
        let middle_order = g.at(self.middle).chord == self.tm;
        let bottom_order = g.at(self.bottom).chord == self.tb;
        r3_signs_compatible(
            top_order,
            middle_order,
            bottom_order,
            g.sign(self.tm).unwrap(),
            g.sign(self.tb).unwrap(),
            g.sign(self.mb).unwrap(),
        )
    }
}

pub(super) fn r3_apply(g: &GaussDiagram, pairs: [usize; 3]) -> Result<GaussDiagram, MoveError> {
    let frame = R3Frame::read(g, pairs)?;
    if !frame.signs_ok(g) {
        return Err(MoveError::mismatch("R3 triangle has incompatible signs"));
    }
    let len = g.len();
    let mut circle = g.circle().to_vec();
    for p in pairs {
        circle.swap(p, (p + 1) % len);
    }
    Ok(GaussDiagram::from_parts(circle, g.signs().clone()))
}

fn r3_sites(g: &GaussDiagram) -> BTreeSet<[usize; 3]> {
    let len = g.len();
    let mut out = BTreeSet::new();
    if len < 6 {
        return out;
    }
    for top in 0..len {
        let (a, b) = (g.at(top), g.at(top + 1));
        if a.role != Role::Initial || b.role != Role::Initial || a.chord == b.chord {
            continue;
        }
        for (tm, tb) in [(a.chord, b.chord), (b.chord, a.chord)] {
            let (_, t_tm) = g.chord_positions(tm).unwrap();
            let (_, t_tb) = g.chord_positions(tb).unwrap();
            for nb in [(t_tm + len - 1) % len, (t_tm + 1) % len] {
                let z = g.at(nb);
                if z.role != Role::Initial || z.chord == tm || z.chord == tb {
                    continue;
                }
                let (_, t_mb) = g.chord_positions(z.chord).unwrap();
                if !adjacent(len, t_tb, t_mb) {
                    continue;
                }
                let mut pairs = [top, pair_start(len, t_tm, nb), pair_start(len, t_tb, t_mb)];
                pairs.sort_unstable();
                if let Ok(frame) = R3Frame::read(g, pairs) {
                    if frame.signs_ok(g) {
                        out.insert(pairs);
                    }
                }
            }
        }
    }
    out
}

/// Every Reidemeister move applicable to `g`: all removals and R3 moves,
/// plus every R1/R2 insertion (one per position and parameter choice).
/// Output order is deterministic.
pub fn enumerate_reidemeister(g: &GaussDiagram) -> Vec<Move> {
    let mut out = reidemeister_reductions(g);
    out.extend(reidemeister_insertions(g));
    out
}

/// Removals and R3 moves; these never grow the diagram.
pub(crate) fn reidemeister_reductions(g: &GaussDiagram) -> Vec<Move> {
    let len = g.len();
    let mut out = Vec::new();
    for c in g.chords() {
        let (i, t) = g.chord_positions(c).unwrap();
        if adjacent(len, i, t) {
            out.push(Move::R1Remove { chord: c });
        }
    }
    let chords: Vec<ChordId> = g.chords().collect();
    for (n, &a) in chords.iter().enumerate() {
        for &b in &chords[n + 1..] {
            if r2_pattern(g, a, b).is_ok() {
                out.push(Move::R2Remove { chords: [a, b] });
            }
        }
    }
    out.extend(r3_sites(g).into_iter().map(|pairs| Move::R3 { pairs }));
    out
}

pub(crate) fn r1_insertions(g: &GaussDiagram) -> Vec<Move> {
    let len = g.len() + 2;
    let mut out = Vec::new();
    for at in 0..len {
        for sign in [Sign::Pos, Sign::Neg] {
            for first in [Role::Initial, Role::Terminal] {
                out.push(Move::R1Add { at, sign, first, id: None });
            }
        }
    }
    out
}

pub(crate) fn r2_insertions(g: &GaussDiagram) -> Vec<Move> {
    let len = g.len() + 4;
    let mut out = Vec::new();
    for initials in 0..len {
        for terminals in 0..len {
            let slots = [initials, (initials + 1) % len, terminals, (terminals + 1) % len];
            if slots.iter().collect::<BTreeSet<_>>().len() != 4 {
                continue;
            }
            for sign in [Sign::Pos, Sign::Neg] {
                for layout in [ChordLayout::Nested, ChordLayout::Crossed] {
                    out.push(Move::R2Add { initials, terminals, sign, layout, ids: None });
                }
            }
        }
    }
    out
}

pub(crate) fn reidemeister_insertions(g: &GaussDiagram) -> Vec<Move> {
    let mut out = r1_insertions(g);
    out.extend(r2_insertions(g));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{affine_index_polynomial, writhe_vector};
    use crate::moves::apply_move;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn g(s: &str) -> GaussDiagram {
        GaussDiagram::parse(s).unwrap()
    }

    #[test]
    fn isolated_chord_offers_r1_removal() {
        let moves = enumerate_reidemeister(&g("O1+ U1+"));
        assert!(moves.contains(&Move::R1Remove { chord: ChordId(1) }));
    }

    #[test]
    fn r2_bigon_is_detected() {
        // initials of 1 and 2 adjacent across the basepoint, terminals adjacent
        let d = g("O1+ U2- U1+ O2-");
        let moves = enumerate_reidemeister(&d);
        assert!(moves.contains(&Move::R2Remove { chords: [ChordId(1), ChordId(2)] }));
        assert!(apply_move(&d, &Move::R2Remove { chords: [ChordId(1), ChordId(2)] })
            .unwrap()
            .is_empty());
        // same layout with equal signs is not a bigon
        assert!(!enumerate_reidemeister(&g("O1+ U2+ U1+ O2+"))
            .iter()
            .any(|m| matches!(m, Move::R2Remove { .. })));
    }

    #[test]
    fn empty_diagram_only_offers_insertions() {
        let moves = enumerate_reidemeister(&GaussDiagram::empty());
        assert!(!moves.is_empty());
        assert!(moves.iter().all(|m| matches!(m, Move::R1Add { .. } | Move::R2Add { .. })));
    }

    #[test]
    fn r2_add_layouts() {
        let e = GaussDiagram::empty();
        let nested = Move::R2Add { initials: 0, terminals: 2, sign: Sign::Pos, layout: ChordLayout::Nested, ids: None };
        let crossed = Move::R2Add { initials: 0, terminals: 2, sign: Sign::Pos, layout: ChordLayout::Crossed, ids: None };
        assert_eq!(apply_move(&e, &nested).unwrap().to_string(), "O1+ O2- U2- U1+");
        assert_eq!(apply_move(&e, &crossed).unwrap().to_string(), "O1+ O2- U1+ U2-");
    }

    #[test]
    fn r3_rejects_incompatible_signs() {
        // top pair O1 O2, middle U1 O3, bottom U2 U3 with all orders true:
        // compatible signs are all equal
        let ok = g("O1+ O2+ U1+ O3+ U2+ U3+");
        assert!(R3Frame::read(&ok, [0, 2, 4]).unwrap().signs_ok(&ok));
        let bad = g("O1+ O2+ U1+ O3- U2+ U3-");
        assert!(apply_move(&bad, &Move::R3 { pairs: [0, 2, 4] }).is_err());
        let after = apply_move(&ok, &Move::R3 { pairs: [0, 2, 4] }).unwrap();
        assert_eq!(after.to_string(), "O2+ O1+ O3+ U1+ U3+ U2+");
    }

    // Three straight oriented lines with random heights; collects the strand
    // orders and crossing signs of every sampled triangle.
    #[test]
    fn sign_rule_matches_planar_triangles() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut seen = BTreeSet::new();
        for _ in 0..20_000 {
            let mut lines = Vec::new();
            for _ in 0..3 {
                let ang: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                let p = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                lines.push((p, (ang.cos(), ang.sin())));
            }
            let mut order = [0usize, 1, 2];
            for i in (1..3).rev() {
                order.swap(i, rng.gen_range(0..=i));
            }
            let [t, m, b] = order.map(|i| lines[i]);
            type L = ((f64, f64), (f64, f64));
            // parameters along l1 and l2 at their intersection
            let meet = |l1: L, l2: L| {
                let (p1, d1) = l1;
                let (p2, d2) = l2;
                let det = -d1.0 * d2.1 + d1.1 * d2.0;
                let (rx, ry) = (p2.0 - p1.0, p2.1 - p1.1);
                ((-rx * d2.1 + ry * d2.0) / det, (d1.0 * ry - d1.1 * rx) / det)
            };
            let sign = |over: L, under: L| {
                if over.1 .0 * under.1 .1 - over.1 .1 * under.1 .0 > 0.0 { Sign::Pos } else { Sign::Neg }
            };
            let (t_tm, m_tm) = meet(t, m);
            let (t_tb, b_tb) = meet(t, b);
            let (m_mb, b_mb) = meet(m, b);
            let key = (t_tm < t_tb, m_tm < m_mb, b_tb < b_mb, sign(t, m), sign(t, b), sign(m, b));
            assert!(r3_signs_compatible(key.0, key.1, key.2, key.3, key.4, key.5), "{key:?}");
            seen.insert(key);
        }
        // every compatible configuration occurs
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn every_enumerated_move_preserves_writhes() {
        for seed in 0..60 {
            let d = GaussDiagram::random(1 + (seed % 5) as usize, seed);
            let w = writhe_vector(&d);
            let p = affine_index_polynomial(&d);
            for m in enumerate_reidemeister(&d) {
                let after = apply_move(&d, &m).unwrap();
                assert_eq!(writhe_vector(&after).entries(), w.entries(), "{d} {m}");
                assert_eq!(affine_index_polynomial(&after), p);
                let back = apply_move(&after, &m.inverse(&d).unwrap()).unwrap();
                assert_eq!(back, d, "{m}");
            }
        }
    }
}
