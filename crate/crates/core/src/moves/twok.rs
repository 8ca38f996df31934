//! 2k-moves: insertion and removal of 2k same-sign chords whose endpoints
//! fill two arcs with alternating roles.

use std::collections::BTreeSet;

use super::{check_pos, ChordLayout, Move, TwoKSite};
use crate::error::MoveError;
use crate::gauss::{ChordId, Endpoint, GaussDiagram, Role, Sign};

/// A 2k-block found in a diagram. Positions refer to that diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoKMatch {
    pub k: u32,
    /// Start of the first arc.
    pub at: usize,
    /// Start of the second arc.
    pub b: usize,
    pub sign: Sign,
    pub lead: Role,
    pub layout: ChordLayout,
    /// Chords in first-arc order.
    pub chords: Vec<ChordId>,
}

impl TwoKMatch {
    pub fn removal(&self) -> Move {
        Move::TwoKRemove { k: self.k, at: self.at }
    }

    /// The insertion that recreates this block on the diagram without it.
    pub fn insertion(&self) -> Move {
        Move::TwoKInsert(TwoKSite {
            k: self.k,
            a: self.at,
            b: self.b,
            sign: self.sign,
            lead: self.lead,
            layout: self.layout,
            ids: Some(self.chords.clone()),
        })
    }
}

fn block_ids(g: &GaussDiagram, n: usize, ids: &Option<Vec<ChordId>>) -> Result<Vec<ChordId>, MoveError> {
    match ids {
        None => {
            let first = g.fresh_id().0;
            Ok((0..n as u32).map(|i| ChordId(first + i)).collect())
        }
        Some(ids) => {
            if ids.len() != n {
                return Err(MoveError::mismatch(format!("expected {n} chord labels, got {}", ids.len())));
            }
            let set: BTreeSet<_> = ids.iter().collect();
            if set.len() != n || ids.iter().any(|c| c.0 == 0 || g.contains_chord(*c)) {
                return Err(MoveError::mismatch("chord labels must be fresh and distinct"));
            }
            Ok(ids.clone())
        }
    }
}

/// Inserts the 2k-block described by `site`.
pub fn apply_2k_insert(g: &GaussDiagram, site: &TwoKSite) -> Result<GaussDiagram, MoveError> {
    if site.k == 0 {
        return Err(MoveError::InvalidK);
    }
    let n = 2 * site.k as usize;
    let len = g.len() + 2 * n;
    check_pos(site.a, len)?;
    check_pos(site.b, len)?;
    let a_slots: Vec<usize> = (0..n).map(|i| (site.a + i) % len).collect();
    let b_slots: Vec<usize> = (0..n).map(|i| (site.b + i) % len).collect();
    let all: BTreeSet<usize> = a_slots.iter().chain(&b_slots).copied().collect();
    if all.len() != 2 * n {
        return Err(MoveError::mismatch("the two arcs of a 2k-move overlap"));
    }
    let ids = block_ids(g, n, &site.ids)?;
    let mut placed = Vec::with_capacity(2 * n);
    for (i, &c) in ids.iter().enumerate() {
        let role = if i % 2 == 0 { site.lead } else { site.lead.opposite() };
        let e = Endpoint::new(c, role);
        let f_slot = match site.layout {
            ChordLayout::Nested => b_slots[n - 1 - i],
            ChordLayout::Crossed => b_slots[i],
        };
        placed.push((a_slots[i], e));
        placed.push((f_slot, e.partner()));
    }
    let signs: Vec<(ChordId, Sign)> = ids.iter().map(|&c| (c, site.sign)).collect();
    Ok(g.with_inserted(&placed, &signs))
}

/// Matches a 2k-block whose first arc starts at `at`.
pub fn match_2k_block(g: &GaussDiagram, k: u32, at: usize) -> Option<TwoKMatch> {
    let n = 2 * k as usize;
    let len = g.len();
    if k == 0 || at >= len || 2 * n > len {
        return None;
    }
    let first = g.at(at);
    let sign = g.sign(first.chord)?;
    let mut chords = Vec::with_capacity(n);
    let mut partners = Vec::with_capacity(n);
    for i in 0..n {
        let e = g.at(at + i);
        let want = if i % 2 == 0 { first.role } else { first.role.opposite() };
        if e.role != want || g.sign(e.chord) != Some(sign) || chords.contains(&e.chord) {
            return None;
        }
        chords.push(e.chord);
        partners.push(g.position(e.partner())?);
    }
    let step = |p: usize, d: isize| ((p as isize + d).rem_euclid(len as isize)) as usize;
    let (layout, b) = if (1..n).all(|i| partners[i] == step(partners[0], -(i as isize))) {
        (ChordLayout::Nested, partners[n - 1])
    } else if (1..n).all(|i| partners[i] == step(partners[0], i as isize)) {
        (ChordLayout::Crossed, partners[0])
    } else {
        return None;
    };
    Some(TwoKMatch { k, at, b, sign, lead: first.role, layout, chords })
}

/// Every removable 2k-block. A block is reported once, from whichever of its
/// arcs comes first along the circle; longer alternating runs yield one match
/// per 2k-window.
pub fn detect_2k_removals(g: &GaussDiagram, k: u32) -> Vec<TwoKMatch> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for at in 0..g.len() {
        if let Some(m) = match_2k_block(g, k, at) {
            let mut key = m.chords.clone();
            key.sort();
            if seen.insert(key) {
                out.push(m);
            }
        }
    }
    out
}

pub(super) fn remove(g: &GaussDiagram, k: u32, at: usize) -> Result<GaussDiagram, MoveError> {
    if k == 0 {
        return Err(MoveError::InvalidK);
    }
    check_pos(at, g.len())?;
    let m = match_2k_block(g, k, at)
        .ok_or_else(|| MoveError::mismatch(format!("no 2k-block with k={k} at position {at}")))?;
    Ok(g.without_chords(&m.chords))
}

pub(super) fn remove_inverse(before: &GaussDiagram, k: u32, at: usize) -> Result<Move, MoveError> {
    if k == 0 {
        return Err(MoveError::InvalidK);
    }
    match_2k_block(before, k, at)
        .map(|m| m.insertion())
        .ok_or_else(|| MoveError::mismatch(format!("no 2k-block with k={k} at position {at}")))
}
