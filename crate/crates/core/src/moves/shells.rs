//! Shells, shell-pairs and the macro-moves built from them.
//!
//! All macros return the rewritten diagram together with a script of
//! elementary moves that replays from the input diagram.

use std::collections::BTreeSet;

use super::xi::xi_arrange;
use super::{step, ChordLayout, Move, MoveScript, TwoKSite};
use crate::error::MoveError;
use crate::gauss::{ChordId, Endpoint, GaussDiagram, Role, Sign};

/// A chord whose endpoints sit at `p` and `p+2` with `center` between them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shell {
    pub chord: ChordId,
    pub center: Endpoint,
}

/// Two same-sign shells on four consecutive positions `start .. start+4`,
/// each centred on an endpoint of the other. `shells[0]` starts at `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShellPair {
    pub start: usize,
    pub shells: [Shell; 2],
    pub sign: Sign,
}

impl ShellPair {
    fn at(g: &GaussDiagram, start: usize) -> Option<ShellPair> {
        let len = g.len();
        if len < 4 {
            return None;
        }
        let e: Vec<Endpoint> = (0..4).map(|i| g.at(start + i)).collect();
        let (a, b) = (e[0].chord, e[1].chord);
        if a == b || e[2].chord != a || e[3].chord != b {
            return None;
        }
        let sign = g.sign(a)?;
        if g.sign(b) != Some(sign) {
            return None;
        }
        Some(ShellPair {
            start,
            shells: [Shell { chord: a, center: e[1] }, Shell { chord: b, center: e[2] }],
            sign,
        })
    }

    pub fn chords(&self) -> [ChordId; 2] {
        [self.shells[0].chord, self.shells[1].chord]
    }
}

/// Every shell-pair, once per chord set, ordered by start position.
pub fn find_shell_pairs(g: &GaussDiagram) -> Vec<ShellPair> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for start in 0..g.len() {
        if let Some(sp) = ShellPair::at(g, start) {
            let mut key = sp.chords();
            key.sort();
            if seen.insert(key) {
                out.push(sp);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Left,
    Right,
}

fn check_pair(g: &GaussDiagram, sp: &ShellPair) -> Result<(), MoveError> {
    match ShellPair::at(g, sp.start) {
        Some(found) if found.chords() == sp.chords() => Ok(()),
        _ => Err(MoveError::mismatch(format!("no shell-pair at position {}", sp.start))),
    }
}

/// Moves the shell-pair past the neighbouring endpoint on the given side.
/// The pair keeps its role pattern; the script uses Ξ-moves only.
pub fn shellpair_transport(
    g: &GaussDiagram,
    sp: &ShellPair,
    direction: Direction,
) -> Result<(GaussDiagram, MoveScript), MoveError> {
    check_pair(g, sp)?;
    let len = g.len();
    if len < 5 {
        return Err(MoveError::mismatch("no endpoint outside the shell-pair"));
    }
    let p = sp.start;
    let at = |d: isize| ((p as isize + d).rem_euclid(len as isize)) as usize;
    let mixed = g.at(p).role != g.at(p + 1).role;
    let swaps: Vec<isize> = match (direction, mixed) {
        (Direction::Right, false) => vec![2, 0],
        (Direction::Right, true) => vec![2, 0, 1, 2],
        (Direction::Left, false) => vec![-1, 1],
        (Direction::Left, true) => vec![-1, 1, -1, 0],
    };
    let mut cur = g.clone();
    let mut script = MoveScript::new();
    for d in swaps {
        step(&mut cur, &mut script, Move::XiSwap { at: at(d) })?;
    }
    Ok((cur, script))
}

/// Removes two adjacent shell-pairs of opposite signs with Ξ-moves followed
/// by two R2 removals.
pub fn shellpair_cancel(
    g: &GaussDiagram,
    sp1: &ShellPair,
    sp2: &ShellPair,
) -> Result<(GaussDiagram, MoveScript), MoveError> {
    check_pair(g, sp1)?;
    check_pair(g, sp2)?;
    if sp1.sign == sp2.sign {
        return Err(MoveError::mismatch("shell-pairs have the same sign"));
    }
    let len = g.len();
    let (first, second) = if (sp1.start + 4) % len == sp2.start {
        (sp1, sp2)
    } else if (sp2.start + 4) % len == sp1.start {
        (sp2, sp1)
    } else {
        return Err(MoveError::mismatch("shell-pairs are not adjacent"));
    };
    if len < 8 {
        return Err(MoveError::mismatch("shell-pairs overlap"));
    }
    let [a, b] = first.chords();
    let [c, d] = second.chords();
    let target = [
        Endpoint::initial(a),
        Endpoint::initial(d),
        Endpoint::terminal(a),
        Endpoint::terminal(d),
        Endpoint::initial(c),
        Endpoint::initial(b),
        Endpoint::terminal(c),
        Endpoint::terminal(b),
    ];
    let (mut cur, mut script) = xi_arrange(g, first.start, &target)?;
    step(&mut cur, &mut script, Move::R2Remove { chords: [a, d] })?;
    step(&mut cur, &mut script, Move::R2Remove { chords: [c, b] })?;
    Ok((cur, script))
}

/// Inserts `k` consecutive shell-pairs of sign `sign` so that they start at
/// position `gap` of the result. Uses one R1 insertion, one 2k-insertion,
/// Ξ-moves and one R1 removal.
pub fn add_k_shellpairs(
    g: &GaussDiagram,
    gap: usize,
    sign: Sign,
    k: u32,
) -> Result<(GaussDiagram, MoveScript), MoveError> {
    if k == 0 {
        return Err(MoveError::InvalidK);
    }
    if gap > g.len() {
        return Err(MoveError::OutOfRange { pos: gap, len: g.len() + 1 });
    }
    let kk = k as usize;
    let mut cur = g.clone();
    let mut script = MoveScript::new();
    let c0 = cur.fresh_id();
    step(&mut cur, &mut script, Move::R1Add { at: gap, sign: Sign::Pos, first: Role::Terminal, id: Some(c0) })?;
    let first = cur.fresh_id().0;
    let ids: Vec<ChordId> = (0..2 * k).map(|i| ChordId(first + i)).collect();
    let site = TwoKSite {
        k,
        a: gap,
        b: (gap + 2 * kk + 1) % (cur.len() + 4 * kk),
        sign,
        lead: Role::Initial,
        layout: ChordLayout::Nested,
        ids: Some(ids.clone()),
    };
    step(&mut cur, &mut script, Move::TwoKInsert(site))?;
    let mut target = vec![Endpoint::terminal(c0), Endpoint::initial(c0)];
    for j in 0..kk {
        let (x, y) = (ids[2 * j], ids[2 * j + 1]);
        target.extend([Endpoint::initial(x), Endpoint::initial(y), Endpoint::terminal(x), Endpoint::terminal(y)]);
    }
    let (arranged, xi) = xi_arrange(&cur, gap, &target)?;
    cur = arranged;
    script.extend(xi);
    step(&mut cur, &mut script, Move::R1Remove { chord: c0 })?;
    Ok((cur, script))
}
