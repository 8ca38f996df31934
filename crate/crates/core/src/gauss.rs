//! Gauss diagrams: a based, oriented circle carrying signed, oriented chords.
//!
//! The circle is stored as a linear sequence starting at the basepoint. Every
//! chord contributes exactly two endpoints, one [`Role::Initial`] (the
//! overcrossing preimage) and one [`Role::Terminal`] (the undercrossing
//! preimage). Rotations of the basepoint are only identified by
//! [`GaussDiagram::canonicalize`].

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GaussError;

/// Label of a chord. Labels are positive; canonical diagrams use `1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordId(pub u32);

impl fmt::Display for ChordId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Initial,
    Terminal,
}

impl Role {
    pub fn opposite(self) -> Role {
        match self {
            Role::Initial => Role::Terminal,
            Role::Terminal => Role::Initial,
        }
    }

    /// The Gauss-code letter: `O` for over, `U` for under.
    pub fn letter(self) -> char {
        match self {
            Role::Initial => 'O',
            Role::Terminal => 'U',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Pos),
            '-' => Some(Sign::Neg),
            _ => None,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endpoint {
    pub chord: ChordId,
    pub role: Role,
}

impl Endpoint {
    pub fn new(chord: ChordId, role: Role) -> Self {
        Endpoint { chord, role }
    }

    pub fn initial(chord: ChordId) -> Self {
        Endpoint::new(chord, Role::Initial)
    }

    pub fn terminal(chord: ChordId) -> Self {
        Endpoint::new(chord, Role::Terminal)
    }

    pub fn partner(self) -> Endpoint {
        Endpoint::new(self.chord, self.role.opposite())
    }
}

/// A valid Gauss diagram. Construction always validates, so every value of
/// this type satisfies the chord/endpoint invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussDiagram {
    circle: Vec<Endpoint>,
    signs: BTreeMap<ChordId, Sign>,
}

impl GaussDiagram {
    /// The diagram with no chords (the trivial knot).
    pub fn empty() -> Self {
        GaussDiagram::default()
    }

    pub fn new(circle: Vec<Endpoint>, signs: BTreeMap<ChordId, Sign>) -> Result<Self, GaussError> {
        validate(&circle, &signs)?;
        Ok(GaussDiagram { circle, signs })
    }

    /// Builds a diagram without validating. Callers inside the crate use this
    /// only where the rewrite provably keeps the invariants; debug builds
    /// still check.
    pub(crate) fn from_parts(circle: Vec<Endpoint>, signs: BTreeMap<ChordId, Sign>) -> Self {
        debug_assert!(validate(&circle, &signs).is_ok(), "invalid diagram built internally");
        GaussDiagram { circle, signs }
    }

    pub fn circle(&self) -> &[Endpoint] {
        &self.circle
    }

    pub fn signs(&self) -> &BTreeMap<ChordId, Sign> {
        &self.signs
    }

    /// Number of endpoints on the circle (twice the chord count).
    pub fn len(&self) -> usize {
        self.circle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circle.is_empty()
    }

    pub fn chord_count(&self) -> usize {
        self.signs.len()
    }

    pub fn chords(&self) -> impl Iterator<Item = ChordId> + '_ {
        self.signs.keys().copied()
    }

    pub fn sign(&self, chord: ChordId) -> Option<Sign> {
        self.signs.get(&chord).copied()
    }

    pub fn contains_chord(&self, chord: ChordId) -> bool {
        self.signs.contains_key(&chord)
    }

    pub fn at(&self, pos: usize) -> Endpoint {
        self.circle[pos % self.circle.len()]
    }

    pub fn position(&self, e: Endpoint) -> Option<usize> {
        self.circle.iter().position(|&x| x == e)
    }

    /// Positions of the initial and terminal endpoint of `chord`.
    pub fn chord_positions(&self, chord: ChordId) -> Option<(usize, usize)> {
        let i = self.position(Endpoint::initial(chord))?;
        let t = self.position(Endpoint::terminal(chord))?;
        Some((i, t))
    }

    /// Smallest label not in use, at least 1.
    pub fn fresh_id(&self) -> ChordId {
        ChordId(self.signs.keys().next_back().map_or(1, |c| c.0 + 1))
    }

    /// Inserts endpoints so that, in the resulting circle of length
    /// `len() + placed.len()`, each `(pos, e)` ends up at `pos`. The old
    /// endpoints fill the remaining positions in their original order.
    pub(crate) fn with_inserted(
        &self,
        placed: &[(usize, Endpoint)],
        new_signs: &[(ChordId, Sign)],
    ) -> GaussDiagram {
        let total = self.circle.len() + placed.len();
        let mut slots: Vec<Option<Endpoint>> = vec![None; total];
        for &(pos, e) in placed {
            debug_assert!(slots[pos].is_none());
            slots[pos] = Some(e);
        }
        let mut old = self.circle.iter();
        let circle = slots
            .into_iter()
            .map(|s| s.unwrap_or_else(|| *old.next().expect("slot count mismatch")))
            .collect();
        let mut signs = self.signs.clone();
        signs.extend(new_signs.iter().copied());
        GaussDiagram::from_parts(circle, signs)
    }

    /// Removes every endpoint of the given chords.
    pub(crate) fn without_chords(&self, chords: &[ChordId]) -> GaussDiagram {
        let circle = self
            .circle
            .iter()
            .copied()
            .filter(|e| !chords.contains(&e.chord))
            .collect();
        let mut signs = self.signs.clone();
        for c in chords {
            signs.remove(c);
        }
        GaussDiagram::from_parts(circle, signs)
    }

    pub(crate) fn with_swapped(&self, p: usize, q: usize) -> GaussDiagram {
        let mut circle = self.circle.clone();
        circle.swap(p, q);
        GaussDiagram::from_parts(circle, self.signs.clone())
    }

    /// Relabels chords to `1..=n` in order of first appearance.
    pub fn relabeled(&self) -> GaussDiagram {
        self.rotated_relabeled(0)
    }

    /// Rotates the basepoint forward by `shift` positions.
    pub fn rotated(&self, shift: usize) -> GaussDiagram {
        if self.circle.is_empty() {
            return self.clone();
        }
        let mut circle = self.circle.clone();
        circle.rotate_left(shift % self.circle.len());
        GaussDiagram::from_parts(circle, self.signs.clone())
    }

    fn rotated_relabeled(&self, shift: usize) -> GaussDiagram {
        let n = self.circle.len();
        let mut map: BTreeMap<ChordId, ChordId> = BTreeMap::new();
        let mut circle = Vec::with_capacity(n);
        for i in 0..n {
            let e = self.circle[(i + shift) % n];
            let next = ChordId(map.len() as u32 + 1);
            let id = *map.entry(e.chord).or_insert(next);
            circle.push(Endpoint::new(id, e.role));
        }
        let signs = map.iter().map(|(old, new)| (*new, self.signs[old])).collect();
        GaussDiagram::from_parts(circle, signs)
    }

    /// Least serialization over all basepoint rotations, each relabeled by
    /// first appearance. The circle orientation is never reversed.
    pub fn canonicalize(&self) -> GaussDiagram {
        let n = self.circle.len();
        if n == 0 {
            return GaussDiagram::empty();
        }
        let mut best = self.rotated_relabeled(0);
        let mut best_key = best.to_string();
        for shift in 1..n {
            let cand = self.rotated_relabeled(shift);
            let key = cand.to_string();
            if key < best_key {
                best = cand;
                best_key = key;
            }
        }
        best
    }

    /// Serialization of [`Self::canonicalize`]; equal keys mean equal
    /// diagrams up to basepoint and labels.
    pub fn canonical_key(&self) -> String {
        self.canonicalize().to_string()
    }

    /// Parses the textual Gauss code: tokens `O<id><sign>` / `U<id><sign>`
    /// separated by whitespace or commas.
    pub fn parse(text: &str) -> Result<GaussDiagram, GaussError> {
        let mut circle = Vec::new();
        let mut signs: BTreeMap<ChordId, Sign> = BTreeMap::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let (e, s) = parse_token(token)?;
            match signs.get(&e.chord) {
                Some(&prev) if prev != s => return Err(GaussError::SignMismatch(e.chord)),
                _ => {
                    signs.insert(e.chord, s);
                }
            }
            if circle.contains(&e) {
                return Err(GaussError::DuplicateRole(e.chord, e.role));
            }
            circle.push(e);
        }
        GaussDiagram::new(circle, signs)
    }

    /// Deterministic random diagram: a uniform perfect matching of `2n`
    /// positions with fair signs and orientations, drawn from ChaCha8 seeded
    /// with `seed`.
    pub fn random(n: usize, seed: u64) -> GaussDiagram {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut slots: Vec<usize> = (0..2 * n).collect();
        slots.shuffle(&mut rng);
        let mut circle = vec![Endpoint::initial(ChordId(0)); 2 * n];
        let mut signs = BTreeMap::new();
        for (i, pair) in slots.chunks(2).enumerate() {
            let id = ChordId(i as u32 + 1);
            let (first, second) = if rng.gen::<bool>() { (pair[0], pair[1]) } else { (pair[1], pair[0]) };
            circle[first] = Endpoint::initial(id);
            circle[second] = Endpoint::terminal(id);
            signs.insert(id, if rng.gen::<bool>() { Sign::Pos } else { Sign::Neg });
        }
        GaussDiagram::from_parts(circle, signs).relabeled()
    }
}

fn parse_token(token: &str) -> Result<(Endpoint, Sign), GaussError> {
    let malformed = || GaussError::MalformedToken(token.to_string());
    let mut chars = token.chars();
    let role = match chars.next() {
        Some('O') => Role::Initial,
        Some('U') => Role::Terminal,
        _ => return Err(malformed()),
    };
    let rest = chars.as_str();
    let sign = rest.chars().last().and_then(Sign::from_symbol).ok_or_else(malformed)?;
    let digits = &rest[..rest.len() - 1];
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let id: u32 = digits.parse().map_err(|_| malformed())?;
    Ok((Endpoint::new(ChordId(id), role), sign))
}

fn validate(circle: &[Endpoint], signs: &BTreeMap<ChordId, Sign>) -> Result<(), GaussError> {
    let mut seen: BTreeMap<ChordId, (bool, bool)> = BTreeMap::new();
    for e in circle {
        if e.chord.0 == 0 {
            return Err(GaussError::ZeroChordId);
        }
        let entry = seen.entry(e.chord).or_default();
        let slot = match e.role {
            Role::Initial => &mut entry.0,
            Role::Terminal => &mut entry.1,
        };
        if *slot {
            return Err(GaussError::DuplicateRole(e.chord, e.role));
        }
        *slot = true;
    }
    for (&c, &(i, t)) in &seen {
        if !(i && t) {
            return Err(GaussError::MissingPartner(c));
        }
        if !signs.contains_key(&c) {
            return Err(GaussError::MissingSign(c));
        }
    }
    if let Some(c) = signs.keys().find(|c| !seen.contains_key(c)) {
        return Err(GaussError::UnusedSign(*c));
    }
    Ok(())
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.circle.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}{}", e.role.letter(), e.chord, self.signs[&e.chord].symbol())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for GaussDiagram {
    type Err = GaussError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GaussDiagram::parse(s)
    }
}
