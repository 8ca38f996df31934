//! Chord indices and the writhe invariants derived from them.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::InvariantError;
use crate::gauss::{ChordId, Endpoint, GaussDiagram, Role, Sign};
use crate::laurent::LaurentPolynomial;

/// Sign carried by an endpoint: the chord sign at the terminal endpoint and
/// its negation at the initial one.
pub fn endpoint_sign(g: &GaussDiagram, e: Endpoint) -> Result<Sign, InvariantError> {
    if g.position(e).is_none() {
        return Err(InvariantError::UnknownEndpoint);
    }
    Ok(assigned_sign(g, e))
}

fn assigned_sign(g: &GaussDiagram, e: Endpoint) -> Sign {
    let s = g.signs()[&e.chord];
    match e.role {
        Role::Terminal => s,
        Role::Initial => s.flip(),
    }
}

/// Sum of endpoint signs strictly inside the arc running from the chord's
/// initial endpoint to its terminal endpoint.
pub fn chord_index(g: &GaussDiagram, c: ChordId) -> Result<i64, InvariantError> {
    let (i, t) = g.chord_positions(c).ok_or(InvariantError::UnknownChord(c))?;
    let prefix = prefix_sums(g);
    Ok(arc_sum(&prefix, i, t))
}

/// Index of every chord, computed in one pass with prefix sums.
pub fn chord_indices(g: &GaussDiagram) -> BTreeMap<ChordId, i64> {
    let prefix = prefix_sums(g);
    let mut initial = BTreeMap::new();
    let mut terminal = BTreeMap::new();
    for (p, e) in g.circle().iter().enumerate() {
        match e.role {
            Role::Initial => initial.insert(e.chord, p),
            Role::Terminal => terminal.insert(e.chord, p),
        };
    }
    initial
        .into_iter()
        .map(|(c, i)| (c, arc_sum(&prefix, i, terminal[&c])))
        .collect()
}

// prefix[p] = sum of assigned signs at positions < p
fn prefix_sums(g: &GaussDiagram) -> Vec<i64> {
    let mut prefix = Vec::with_capacity(g.len() + 1);
    let mut acc = 0;
    prefix.push(0);
    for &e in g.circle() {
        acc += assigned_sign(g, e).value();
        prefix.push(acc);
    }
    prefix
}

// open arc (from, to) walking forward; the total over the circle is 0
fn arc_sum(prefix: &[i64], from: usize, to: usize) -> i64 {
    if from < to {
        prefix[to] - prefix[from + 1]
    } else {
        let total = prefix[prefix.len() - 1];
        (total - prefix[from + 1]) + prefix[to]
    }
}

/// The n-writhes of a diagram, `n -> J_n`, with the index-0 sum kept aside.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WritheVector {
    entries: BTreeMap<i64, i64>,
    j0: i64,
}

impl WritheVector {
    /// `J_n` for `n != 0`. Absent entries are zero.
    pub fn get(&self, n: i64) -> i64 {
        if n == 0 {
            return 0;
        }
        self.entries.get(&n).copied().unwrap_or(0)
    }

    /// Nonzero entries `n -> J_n`, ascending in `n`; `n = 0` is never present.
    pub fn entries(&self) -> &BTreeMap<i64, i64> {
        &self.entries
    }

    /// Signed count of index-0 chords. Not a knot invariant: Reidemeister I
    /// moves change it.
    pub fn non_invariant_j0(&self) -> i64 {
        self.j0
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn odd_writhe(&self) -> i64 {
        self.entries.iter().filter(|(n, _)| *n % 2 != 0).map(|(_, j)| j).sum()
    }

    /// Entry-wise difference `self - other` over the nonzero keys of either.
    pub fn difference(&self, other: &WritheVector) -> BTreeMap<i64, i64> {
        let mut out = self.entries.clone();
        for (&n, &j) in &other.entries {
            *out.entry(n).or_insert(0) -= j;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    pub fn from_entries<I: IntoIterator<Item = (i64, i64)>>(entries: I, j0: i64) -> Self {
        let mut w = WritheVector { entries: BTreeMap::new(), j0 };
        for (n, j) in entries {
            w.add(n, j);
        }
        w
    }

    fn add(&mut self, n: i64, j: i64) {
        if n == 0 {
            self.j0 += j;
            return;
        }
        let e = self.entries.entry(n).or_insert(0);
        *e += j;
        if *e == 0 {
            self.entries.remove(&n);
        }
    }
}

/// Serialized as a JSON object keyed by `n` (as a string), `n` descending.
struct Entries<'a>(&'a BTreeMap<i64, i64>);

impl Serialize for Entries<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (n, j) in self.0.iter().rev() {
            m.serialize_entry(&n.to_string(), j)?;
        }
        m.end()
    }
}

impl Serialize for WritheVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("WritheVector", 2)?;
        st.serialize_field("n_writhes", &Entries(&self.entries))?;
        st.serialize_field("j0", &self.j0)?;
        st.end()
    }
}

pub fn writhe_vector(g: &GaussDiagram) -> WritheVector {
    let mut w = WritheVector::default();
    for (c, ind) in chord_indices(g) {
        w.add(ind, g.signs()[&c].value());
    }
    w
}

pub fn n_writhe(g: &GaussDiagram, n: i64) -> Result<i64, InvariantError> {
    if n == 0 {
        return Err(InvariantError::ZeroWrithe);
    }
    Ok(writhe_vector(g).get(n))
}

/// Sum of `J_n` over odd `n`. Always even.
pub fn odd_writhe(g: &GaussDiagram) -> i64 {
    writhe_vector(g).odd_writhe()
}

/// Affine index polynomial `sum_c sign(c) (t^ind(c) - 1)`.
pub fn affine_index_polynomial(g: &GaussDiagram) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero();
    for (c, ind) in chord_indices(g) {
        let s = g.signs()[&c].value();
        p.add_term(ind, s);
        p.add_term(0, -s);
    }
    p
}

/// The same polynomial assembled from the writhe vector, `sum_{n!=0} J_n (t^n - 1)`.
pub fn affine_index_from_writhes(w: &WritheVector) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero();
    for (&n, &j) in w.entries() {
        p.add_term(n, j);
        p.add_term(0, -j);
    }
    p
}

/// Everything the `invariants` command reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub writhes: WritheVector,
    pub odd_writhe: i64,
    pub polynomial: LaurentPolynomial,
}

impl InvariantReport {
    pub fn of(g: &GaussDiagram) -> Self {
        let writhes = writhe_vector(g);
        InvariantReport {
            odd_writhe: writhes.odd_writhe(),
            polynomial: affine_index_polynomial(g),
            writhes,
        }
    }
}

impl Serialize for InvariantReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("InvariantReport", 4)?;
        st.serialize_field("n_writhes", &Entries(self.writhes.entries()))?;
        st.serialize_field("j0", &self.writhes.non_invariant_j0())?;
        st.serialize_field("odd_writhe", &self.odd_writhe)?;
        st.serialize_field("affine_index_polynomial", &self.polynomial.to_pairs_descending())?;
        st.end()
    }
}
