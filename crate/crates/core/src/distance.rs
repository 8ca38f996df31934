//! Bounds on the number of 2k-moves needed to pass between two diagrams.
//!
//! Lower bounds come from the n-writhes: a single 2k-move changes `J_n` and
//! `J_-n` by `±k` for one `n` and fixes every other nonzero index.
//! Upper bounds come from a bounded search that returns a replayable script.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use serde::Serialize;

use crate::error::ParamError;
use crate::gauss::{ChordId, Endpoint, GaussDiagram, Role, Sign};
use crate::invariants::writhe_vector;
use crate::moves::{
    apply_move, detect_2k_removals, ChordLayout, Move, MoveScript, TwoKSite,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LowerBound {
    Feasible(u64),
    /// A congruence obstruction: no sequence of 2k-moves and Reidemeister
    /// moves relates the diagrams.
    Infeasible,
}

impl LowerBound {
    pub fn value(self) -> Option<u64> {
        match self {
            LowerBound::Feasible(n) => Some(n),
            LowerBound::Infeasible => None,
        }
    }

    pub fn is_infeasible(self) -> bool {
        self == LowerBound::Infeasible
    }
}

/// `(1/k) sum_{n>0} |J_n(G) - J_n(G')|`, or [`LowerBound::Infeasible`] when
/// some `J_n` difference is not a multiple of `k`, the odd writhes differ
/// modulo `2k`, or `J_n` and `J_-n` move by different amounts.
pub fn lower_bound_2k(g: &GaussDiagram, h: &GaussDiagram, k: u32) -> Result<LowerBound, ParamError> {
    if k == 0 {
        return Err(ParamError::InvalidK);
    }
    let (wg, wh) = (writhe_vector(g), writhe_vector(h));
    Ok(bound_from_difference(&wg.difference(&wh), wg.odd_writhe() - wh.odd_writhe(), k as i64))
}

fn bound_from_difference(diff: &std::collections::BTreeMap<i64, i64>, dj: i64, k: i64) -> LowerBound {
    if dj.rem_euclid(2 * k) != 0 {
        return LowerBound::Infeasible;
    }
    let get = |n: i64| diff.get(&n).copied().unwrap_or(0);
    let mut pos = 0;
    let mut neg = 0;
    for (&n, &d) in diff {
        if d.rem_euclid(k) != 0 || get(-n) != d {
            return LowerBound::Infeasible;
        }
        if n > 0 {
            pos += d.abs();
        } else {
            neg += d.abs();
        }
    }
    if pos != neg {
        return LowerBound::Infeasible;
    }
    LowerBound::Feasible((pos / k) as u64)
}

/// Lower bound for the distance to the trivial knot.
pub fn unknotting_lower_bound(g: &GaussDiagram, k: u32) -> Result<LowerBound, ParamError> {
    lower_bound_2k(g, &GaussDiagram::empty(), k)
}

/// Appends a twist block to `base`: one positive chord `c0` of index 0 and
/// `2ak` positive chords arranged as `a` consecutive 2k-blocks whose second
/// arcs are nested on the other side of `c0`'s terminal endpoint. Half of
/// the new chords have index 1 and half index -1, so `J_1` and `J_-1` both
/// grow by `ak`, and removing the `a` blocks followed by `c0` recovers `base`.
pub fn witness_construction(base: &GaussDiagram, a: u32, k: u32) -> Result<GaussDiagram, ParamError> {
    if a == 0 {
        return Err(ParamError::InvalidA);
    }
    if k == 0 {
        return Err(ParamError::InvalidK);
    }
    let n = 2 * a as usize * k as usize;
    let c0 = base.fresh_id();
    let first = c0.0 + 1;
    let twist: Vec<ChordId> = (0..n as u32).map(|i| ChordId(first + i)).collect();
    let mut circle = base.circle().to_vec();
    let mut signs = base.signs().clone();
    for (i, &c) in twist.iter().enumerate() {
        let role = if i % 2 == 0 { Role::Initial } else { Role::Terminal };
        circle.push(Endpoint::new(c, role));
        signs.insert(c, Sign::Pos);
    }
    circle.push(Endpoint::terminal(c0));
    for &c in twist.iter().rev() {
        let e = circle.iter().find(|e| e.chord == c).copied().unwrap();
        circle.push(e.partner());
    }
    circle.push(Endpoint::initial(c0));
    signs.insert(c0, Sign::Pos);
    Ok(GaussDiagram::from_parts(circle, signs))
}

/// Limits for [`search_upper_bound`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest number of 2k-moves tried.
    pub max_moves: u32,
    /// Chord cap for intermediate diagrams; `None` means
    /// `max(|G|, |G'|) + 2k + 2`.
    pub max_chords: Option<usize>,
    /// Total number of states generated over all deepening rounds.
    pub max_states: usize,
    /// Largest number of R1/R2 insertions allowed in a script.
    pub max_free_insertions: u32,
    /// Also allow Ξ-moves as free moves. Ξ is not an equivalence of
    /// virtual knots, so this explores a different relation.
    pub allow_xi: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_moves: 4, max_chords: None, max_states: 100_000, max_free_insertions: 2, allow_xi: false }
    }
}

impl Budget {
    fn validate(&self) -> Result<(), ParamError> {
        if self.max_moves == 0 || self.max_states == 0 || self.max_chords == Some(0) {
            return Err(ParamError::InvalidBudget);
        }
        Ok(())
    }
}

struct Node {
    diagram: GaussDiagram,
    parent: Option<usize>,
    via: Option<Move>,
    twok: u32,
    radd: u32,
}

/// Iterative deepening on the number of 2k-moves (and, inside each round, on
/// the number of Reidemeister insertions). Removals and R3 moves are free.
/// Each round expands smaller diagrams first and deduplicates states by
/// canonical form; expansion order is fixed, so results are deterministic. Returns the least 2k-move count found within
/// the budget together with a script that replays from `g` to a diagram
/// canonically equal to `h`; `None` when the budget runs out first.
pub fn search_upper_bound(
    g: &GaussDiagram,
    h: &GaussDiagram,
    k: u32,
    budget: &Budget,
) -> Result<Option<(u32, MoveScript)>, ParamError> {
    if k == 0 {
        return Err(ParamError::InvalidK);
    }
    budget.validate()?;
    let start_lb = match lower_bound_2k(g, h, k)? {
        LowerBound::Infeasible => return Ok(None),
        LowerBound::Feasible(n) => n,
    };
    if start_lb > budget.max_moves as u64 {
        return Ok(None);
    }
    let cap = budget
        .max_chords
        .unwrap_or(g.chord_count().max(h.chord_count()) + 2 * k as usize + 2);
    let target = h.canonical_key();
    let mut states = 0usize;
    for d in start_lb as u32..=budget.max_moves {
        for r in 0..=budget.max_free_insertions {
            match search_round(g, h, &target, k, d, r, cap, budget, &mut states) {
                Round::Found(script) => return Ok(Some((script.twok_count() as u32, script))),
                Round::Exhausted => return Ok(None),
                Round::NotFound => {}
            }
        }
    }
    Ok(None)
}

enum Round {
    Found(MoveScript),
    NotFound,
    Exhausted,
}

#[allow(clippy::too_many_arguments)]
fn search_round(
    g: &GaussDiagram,
    h: &GaussDiagram,
    target: &str,
    k: u32,
    d: u32,
    r: u32,
    cap: usize,
    budget: &Budget,
    states: &mut usize,
) -> Round {
    let mut nodes = vec![Node { diagram: g.clone(), parent: None, via: None, twok: 0, radd: 0 }];
    let mut best: HashMap<String, Vec<(u32, u32)>> = HashMap::new();
    let key = g.canonical_key();
    if key == target {
        return Round::Found(MoveScript::new());
    }
    best.insert(key, vec![(0, 0)]);
    // smallest diagrams first, then fewest moves, then insertion order
    let mut queue = BinaryHeap::from([Reverse((g.chord_count(), 0u32, 0usize))]);
    while let Some(Reverse((_, _, idx))) = queue.pop() {
        let (twok, radd) = (nodes[idx].twok, nodes[idx].radd);
        let cur = nodes[idx].diagram.clone();
        for (m, dt, dr) in successors(&cur, k, twok < d, radd < r, cap, budget.allow_xi) {
            let Ok(next) = apply_move(&cur, &m) else { continue };
            let (nt, nr) = (twok + dt, radd + dr);
            if dt > 0 || matches!(m, Move::XiSwap { .. }) {
                match lower_bound_2k(&next, h, k) {
                    Ok(LowerBound::Feasible(lb)) if nt as u64 + lb <= d as u64 => {}
                    _ => continue,
                }
            }
            let nkey = next.canonical_key();
            let seen = best.entry(nkey.clone()).or_default();
            if seen.iter().any(|&(t, q)| t <= nt && q <= nr) {
                continue;
            }
            seen.retain(|&(t, q)| !(nt <= t && nr <= q));
            seen.push((nt, nr));
            *states += 1;
            nodes.push(Node { diagram: next, parent: Some(idx), via: Some(m), twok: nt, radd: nr });
            let new_idx = nodes.len() - 1;
            if nkey == target {
                return Round::Found(path(&nodes, new_idx));
            }
            if *states >= budget.max_states {
                return Round::Exhausted;
            }
            queue.push(Reverse((nodes[new_idx].diagram.chord_count(), nt + nr, new_idx)));
        }
    }
    Round::NotFound
}

fn path(nodes: &[Node], mut idx: usize) -> MoveScript {
    let mut moves = Vec::new();
    while let Some(p) = nodes[idx].parent {
        moves.push(nodes[idx].via.clone().unwrap());
        idx = p;
    }
    moves.reverse();
    MoveScript { moves }
}

// (move, 2k cost, insertion cost)
fn successors(
    g: &GaussDiagram,
    k: u32,
    twok_left: bool,
    radd_left: bool,
    cap: usize,
    allow_xi: bool,
) -> Vec<(Move, u32, u32)> {
    let mut out: Vec<(Move, u32, u32)> = Vec::new();
    if twok_left {
        out.extend(detect_2k_removals(g, k).into_iter().map(|m| (m.removal(), 1, 0)));
    }
    out.extend(crate::moves::reductions(g).into_iter().map(|m| (m, 0, 0)));
    if allow_xi && g.len() >= 3 {
        out.extend((0..g.len()).map(|at| (Move::XiSwap { at }, 0, 0)));
    }
    let chords = g.chord_count();
    if radd_left {
        if chords < cap {
            out.extend(crate::moves::r1_inserts(g).into_iter().map(|m| (m, 0, 1)));
        }
        if chords + 2 <= cap {
            out.extend(crate::moves::r2_inserts(g).into_iter().map(|m| (m, 0, 1)));
        }
    }
    if twok_left && chords + 2 * k as usize <= cap {
        out.extend(twok_insertions(g, k).into_iter().map(|m| (m, 1, 0)));
    }
    out
}

fn twok_insertions(g: &GaussDiagram, k: u32) -> Vec<Move> {
    let n = 2 * k as usize;
    let len = g.len() + 2 * n;
    let mut out = Vec::new();
    for a in 0..len {
        for off in n..=len - n {
            let b = (a + off) % len;
            for sign in [Sign::Pos, Sign::Neg] {
                for lead in [Role::Initial, Role::Terminal] {
                    for layout in [ChordLayout::Nested, ChordLayout::Crossed] {
                        out.push(Move::TwoKInsert(TwoKSite {
                            k,
                            a,
                            b,
                            sign,
                            lead,
                            layout,
                            ids: None,
                        }));
                    }
                }
            }
        }
    }
    out
}

/// Lower and upper bounds for one pair of diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceBound {
    pub k: u32,
    pub lower: LowerBound,
    pub upper: Option<u32>,
    pub certificate: Option<MoveScript>,
}

impl DistanceBound {
    pub fn compute(g: &GaussDiagram, h: &GaussDiagram, k: u32, budget: &Budget) -> Result<DistanceBound, ParamError> {
        let lower = lower_bound_2k(g, h, k)?;
        let found = search_upper_bound(g, h, k, budget)?;
        let (upper, certificate) = match found {
            Some((n, s)) => (Some(n), Some(s)),
            None => (None, None),
        };
        Ok(DistanceBound { k, lower, upper, certificate })
    }

    /// The distance, when the bounds meet.
    pub fn exact(&self) -> Option<u32> {
        match (self.lower, self.upper) {
            (LowerBound::Feasible(l), Some(u)) if l == u as u64 => Some(u),
            _ => None,
        }
    }
}

impl Serialize for DistanceBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("k", &self.k)?;
        match self.lower {
            LowerBound::Feasible(n) => m.serialize_entry("lower", &n)?,
            LowerBound::Infeasible => m.serialize_entry("infeasible", &true)?,
        }
        m.serialize_entry("upper", &self.upper)?;
        m.serialize_entry("exact", &self.exact())?;
        m.serialize_entry("certificate", &self.certificate.as_ref().map(|c| c.lines()))?;
        m.end()
    }
}

/// The 2k-move distance when the lower bound is matched by a certificate.
pub fn exact_distance(g: &GaussDiagram, h: &GaussDiagram, k: u32, budget: &Budget) -> Result<Option<u32>, ParamError> {
    Ok(DistanceBound::compute(g, h, k, budget)?.exact())
}
