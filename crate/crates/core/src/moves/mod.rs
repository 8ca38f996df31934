//! Local moves on Gauss diagrams.
//!
//! Every move records absolute circle positions (or chord labels) valid for
//! the diagram it is applied to, so a [`MoveScript`] replays only from its
//! start diagram. Insertion moves name the positions the new endpoints occupy
//! in the *resulting* circle; this makes every removal exactly invertible,
//! including blocks that wrap past the basepoint.

mod reidemeister;
mod shells;
mod text;
mod twok;
mod xi;

use std::fmt;

pub use reidemeister::{enumerate_reidemeister, r3_signs_compatible, R3Frame};
pub use shells::{
    add_k_shellpairs, find_shell_pairs, shellpair_cancel, shellpair_transport, Direction, Shell,
    ShellPair,
};
pub use twok::{apply_2k_insert, detect_2k_removals, match_2k_block, TwoKMatch};
pub use xi::{apply_xi, xi_arrange};

pub(crate) use reidemeister::{
    r1_insertions as r1_inserts, r2_insertions as r2_inserts, reidemeister_reductions as reductions,
};

use crate::error::MoveError;
use crate::gauss::{ChordId, GaussDiagram, Role, Sign};

/// How the endpoints on the second arc of a two-arc pattern are ordered
/// relative to the first arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChordLayout {
    /// Second arc in reverse order: the chords are pairwise parallel
    /// (antiparallel strands).
    Nested,
    /// Second arc in the same order: the chords pairwise cross
    /// (parallel strands).
    Crossed,
}

/// Parameters of a 2k-move that adds `2k` chords of one sign.
///
/// Block A occupies positions `a .. a+2k` and block B positions `b .. b+2k`
/// of the resulting circle (cyclically). A holds `e_1..e_2k` with roles
/// alternating from `lead`; chord `i` joins `e_i` to `f_i`, where B holds
/// `f_2k..f_1` for [`ChordLayout::Nested`] and `f_1..f_2k` for
/// [`ChordLayout::Crossed`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoKSite {
    pub k: u32,
    pub a: usize,
    pub b: usize,
    pub sign: Sign,
    pub lead: Role,
    pub layout: ChordLayout,
    /// Labels for the new chords in block-A order; fresh labels when absent.
    pub ids: Option<Vec<ChordId>>,
}

impl TwoKSite {
    pub fn new(k: u32, a: usize, b: usize, sign: Sign) -> Self {
        TwoKSite { k, a, b, sign, lead: Role::Initial, layout: ChordLayout::Nested, ids: None }
    }

    pub fn with_lead(mut self, lead: Role) -> Self {
        self.lead = lead;
        self
    }

    pub fn with_layout(mut self, layout: ChordLayout) -> Self {
        self.layout = layout;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// Adds an isolated chord at result positions `at`, `at+1` (cyclic);
    /// `first` is the role at `at`.
    R1Add { at: usize, sign: Sign, first: Role, id: Option<ChordId> },
    R1Remove { chord: ChordId },
    /// Adds two chords of opposite signs: their initial endpoints at the pair
    /// starting at `initials`, their terminal endpoints at the pair starting
    /// at `terminals` (result positions). `sign` belongs to the chord whose
    /// initial endpoint sits at `initials`.
    R2Add {
        initials: usize,
        terminals: usize,
        sign: Sign,
        layout: ChordLayout,
        ids: Option<[ChordId; 2]>,
    },
    R2Remove { chords: [ChordId; 2] },
    /// Reverses the three adjacent endpoint pairs starting at these positions.
    R3 { pairs: [usize; 3] },
    /// Swaps the endpoints at `at` and `at+2` (cyclic) around the pivot `at+1`.
    XiSwap { at: usize },
    TwoKInsert(TwoKSite),
    /// Removes the 2k-block whose first arc starts at `at`.
    TwoKRemove { k: u32, at: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
    XiSwap,
    TwoKInsert,
    TwoKRemove,
}

impl MoveKind {
    pub fn is_reidemeister(self) -> bool {
        matches!(
            self,
            MoveKind::R1Add | MoveKind::R1Remove | MoveKind::R2Add | MoveKind::R2Remove | MoveKind::R3
        )
    }

    pub fn is_twok(self) -> bool {
        matches!(self, MoveKind::TwoKInsert | MoveKind::TwoKRemove)
    }
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::R1Add { .. } => MoveKind::R1Add,
            Move::R1Remove { .. } => MoveKind::R1Remove,
            Move::R2Add { .. } => MoveKind::R2Add,
            Move::R2Remove { .. } => MoveKind::R2Remove,
            Move::R3 { .. } => MoveKind::R3,
            Move::XiSwap { .. } => MoveKind::XiSwap,
            Move::TwoKInsert(_) => MoveKind::TwoKInsert,
            Move::TwoKRemove { .. } => MoveKind::TwoKRemove,
        }
    }

    /// The move undoing `self` when `self` is applied to `before`.
    pub fn inverse(&self, before: &GaussDiagram) -> Result<Move, MoveError> {
        match self {
            Move::R1Add { id, .. } => {
                Ok(Move::R1Remove { chord: id.unwrap_or_else(|| before.fresh_id()) })
            }
            Move::R1Remove { chord } => reidemeister::r1_inverse(before, *chord),
            Move::R2Add { ids, .. } => {
                let ids = ids.unwrap_or_else(|| {
                    let x = before.fresh_id();
                    [x, ChordId(x.0 + 1)]
                });
                Ok(Move::R2Remove { chords: ids })
            }
            Move::R2Remove { chords } => reidemeister::r2_inverse(before, *chords),
            Move::R3 { .. } | Move::XiSwap { .. } => Ok(self.clone()),
            Move::TwoKInsert(site) => Ok(Move::TwoKRemove { k: site.k, at: site.a }),
            Move::TwoKRemove { k, at } => twok::remove_inverse(before, *k, *at),
        }
    }
}

/// Applies one move, failing if its pattern is not present at its site.
pub fn apply_move(g: &GaussDiagram, m: &Move) -> Result<GaussDiagram, MoveError> {
    match m {
        Move::R1Add { at, sign, first, id } => reidemeister::r1_add(g, *at, *sign, *first, *id),
        Move::R1Remove { chord } => reidemeister::r1_remove(g, *chord),
        Move::R2Add { initials, terminals, sign, layout, ids } => {
            reidemeister::r2_add(g, *initials, *terminals, *sign, *layout, *ids)
        }
        Move::R2Remove { chords } => reidemeister::r2_remove(g, *chords),
        Move::R3 { pairs } => reidemeister::r3_apply(g, *pairs),
        Move::XiSwap { at } => apply_xi(g, *at),
        Move::TwoKInsert(site) => apply_2k_insert(g, site),
        Move::TwoKRemove { k, at } => twok::remove(g, *k, *at),
    }
}

/// An ordered list of moves, replayable from the diagram it was built for.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveScript {
    pub moves: Vec<Move>,
}

impl MoveScript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, m: Move) {
        self.moves.push(m);
    }

    pub fn extend(&mut self, other: MoveScript) {
        self.moves.extend(other.moves);
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Move> {
        self.moves.iter()
    }

    pub fn twok_count(&self) -> usize {
        self.moves.iter().filter(|m| m.kind().is_twok()).count()
    }

    pub fn count(&self, kind: MoveKind) -> usize {
        self.moves.iter().filter(|m| m.kind() == kind).count()
    }

    pub fn replay(&self, start: &GaussDiagram) -> Result<GaussDiagram, MoveError> {
        let mut g = start.clone();
        for (i, m) in self.moves.iter().enumerate() {
            g = apply_move(&g, m)
                .map_err(|e| MoveError::Replay { step: i + 1, source: Box::new(e) })?;
        }
        Ok(g)
    }

    /// Start diagram followed by the diagram after each move.
    pub fn trace(&self, start: &GaussDiagram) -> Result<Vec<GaussDiagram>, MoveError> {
        let mut out = vec![start.clone()];
        for (i, m) in self.moves.iter().enumerate() {
            let next = apply_move(out.last().unwrap(), m)
                .map_err(|e| MoveError::Replay { step: i + 1, source: Box::new(e) })?;
            out.push(next);
        }
        Ok(out)
    }

    /// Parses one move per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<MoveScript, MoveError> {
        let mut moves = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let m = line
                .parse::<Move>()
                .map_err(|e| MoveError::Script { line: i + 1, source: Box::new(e) })?;
            moves.push(m);
        }
        Ok(MoveScript { moves })
    }

    pub fn lines(&self) -> Vec<String> {
        self.moves.iter().map(|m| m.to_string()).collect()
    }
}

impl fmt::Display for MoveScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.moves {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromIterator<Move> for MoveScript {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        MoveScript { moves: iter.into_iter().collect() }
    }
}

/// Applies `m` and keeps the script and the running diagram in step.
pub(crate) fn step(g: &mut GaussDiagram, script: &mut MoveScript, m: Move) -> Result<(), MoveError> {
    *g = apply_move(g, &m)?;
    script.push(m);
    Ok(())
}

fn check_pos(pos: usize, len: usize) -> Result<(), MoveError> {
    if pos >= len {
        Err(MoveError::OutOfRange { pos, len })
    } else {
        Ok(())
    }
}
