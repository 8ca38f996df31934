#![allow(dead_code)]

//! Shared oracles and generators for the integration tests. The writhe
//! oracle walks each chord's arc directly and never calls into the crate's
//! invariant code.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vknot_core::moves::{detect_2k_removals, enumerate_reidemeister};
use vknot_core::{ChordLayout, GaussDiagram, Move, Role, Sign, TwoKSite};

/// Chord id -> index, by walking from the initial endpoint to the terminal
/// endpoint and summing assigned endpoint signs.
pub fn oracle_indices(g: &GaussDiagram) -> BTreeMap<u32, i64> {
    let circle = g.circle();
    let len = circle.len();
    let assigned = |p: usize| {
        let e = circle[p];
        let s = g.sign(e.chord).unwrap().value();
        if e.role == Role::Terminal {
            s
        } else {
            -s
        }
    };
    let mut out = BTreeMap::new();
    for (p, e) in circle.iter().enumerate() {
        if e.role != Role::Initial {
            continue;
        }
        let mut q = (p + 1) % len;
        let mut sum = 0;
        while !(circle[q].chord == e.chord && circle[q].role == Role::Terminal) {
            sum += assigned(q);
            q = (q + 1) % len;
        }
        out.insert(e.chord.0, sum);
    }
    out
}

/// Oracle writhes: `(n -> J_n` for nonzero entries with `n != 0`, `J_0)`.
pub fn oracle_writhes(g: &GaussDiagram) -> (BTreeMap<i64, i64>, i64) {
    let mut w = BTreeMap::new();
    let mut j0 = 0;
    for (c, ind) in oracle_indices(g) {
        let s = g.sign(vknot_core::ChordId(c)).unwrap().value();
        if ind == 0 {
            j0 += s;
        } else {
            *w.entry(ind).or_insert(0) += s;
        }
    }
    w.retain(|_, v| *v != 0);
    (w, j0)
}

pub fn oracle_odd_writhe(g: &GaussDiagram) -> i64 {
    oracle_writhes(g).0.iter().filter(|(n, _)| *n % 2 != 0).map(|(_, j)| j).sum()
}

/// Nonzero entries of `a - b`.
pub fn diff(a: &BTreeMap<i64, i64>, b: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    let mut out = a.clone();
    for (n, j) in b {
        *out.entry(*n).or_insert(0) -= j;
    }
    out.retain(|_, v| *v != 0);
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_sign(r: &mut ChaCha8Rng) -> Sign {
    if r.gen_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// A random valid 2k-insertion site for `g`.
pub fn random_twok_site(g: &GaussDiagram, k: u32, r: &mut ChaCha8Rng) -> TwoKSite {
    let n = 2 * k as usize;
    let len = g.len() + 2 * n;
    let a = r.gen_range(0..len);
    let off = r.gen_range(n..=len - n);
    TwoKSite {
        k,
        a,
        b: (a + off) % len,
        sign: random_sign(r),
        lead: if r.gen_bool(0.5) { Role::Initial } else { Role::Terminal },
        layout: if r.gen_bool(0.5) { ChordLayout::Nested } else { ChordLayout::Crossed },
        ids: None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Reidemeister,
    Xi,
    TwoK,
}

/// One random applicable move of the given family, keeping the diagram
/// below `max_chords` where possible. `None` if the family has no move here.
pub fn random_move(g: &GaussDiagram, family: Family, k: u32, max_chords: usize, r: &mut ChaCha8Rng) -> Option<Move> {
    match family {
        Family::Reidemeister => {
            let all = enumerate_reidemeister(g);
            let (shrink, grow): (Vec<Move>, Vec<Move>) = all.into_iter().partition(|m| {
                matches!(m, Move::R1Remove { .. } | Move::R2Remove { .. } | Move::R3 { .. })
            });
            let grow: Vec<Move> = grow
                .into_iter()
                .filter(|m| {
                    let extra = if matches!(m, Move::R1Add { .. }) { 1 } else { 2 };
                    g.chord_count() + extra <= max_chords
                })
                .collect();
            let pool = if !shrink.is_empty() && (grow.is_empty() || r.gen_bool(0.5)) { shrink } else { grow };
            if pool.is_empty() {
                None
            } else {
                Some(pool[r.gen_range(0..pool.len())].clone())
            }
        }
        Family::Xi => {
            if g.len() < 3 {
                None
            } else {
                Some(Move::XiSwap { at: r.gen_range(0..g.len()) })
            }
        }
        Family::TwoK => {
            let removals = detect_2k_removals(g, k);
            let can_grow = g.chord_count() + 2 * k as usize <= max_chords;
            if !removals.is_empty() && (!can_grow || r.gen_bool(0.5)) {
                Some(removals[r.gen_range(0..removals.len())].removal())
            } else if can_grow {
                Some(Move::TwoKInsert(random_twok_site(g, k, r)))
            } else {
                None
            }
        }
    }
}

pub const CLASSICAL_TREFOIL: &str = "O1+ U2+ O3+ U1+ O2+ U3+";
pub const FIGURE_EIGHT: &str = "O1+ U2- O3- U1+ O4+ U3- O2- U4+";
pub const VIRTUAL_TREFOIL: &str = "O1+ O2+ U1+ U2+";
