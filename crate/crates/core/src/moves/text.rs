//! Line format for moves.
//!
//! ```text
//! R1+ a=<pos> s=<+|-> o=<I|T> [id=<chord>]
//! R1- c=<chord>
//! R2+ i=<pos> j=<pos> s=<+|-> l=<nested|crossed> [id=<chord>,<chord>]
//! R2- c=<chord>,<chord>
//! R3 at=<pos>,<pos>,<pos>
//! XI <pos>
//! 2K+ k=<k> a=<pos> b=<pos> s=<+|-> [o=<I|T>] [l=<nested|crossed>] [id=<chord>,...]
//! 2K- k=<k> at=<pos>
//! ```
//!
//! Insertion positions refer to the resulting circle. `o` is the role of the
//! first inserted endpoint (default `I` for 2K+), `l` the layout of the
//! second arc (default `nested`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{ChordLayout, Move, TwoKSite};
use crate::error::MoveError;
use crate::gauss::{ChordId, Role, Sign};

fn role_str(r: Role) -> &'static str {
    match r {
        Role::Initial => "I",
        Role::Terminal => "T",
    }
}

fn layout_str(l: ChordLayout) -> &'static str {
    match l {
        ChordLayout::Nested => "nested",
        ChordLayout::Crossed => "crossed",
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::R1Add { at, sign, first, id } => {
                write!(f, "R1+ a={at} s={} o={}", sign.symbol(), role_str(*first))?;
                if let Some(c) = id {
                    write!(f, " id={c}")?;
                }
                Ok(())
            }
            Move::R1Remove { chord } => write!(f, "R1- c={chord}"),
            Move::R2Add { initials, terminals, sign, layout, ids } => {
                write!(f, "R2+ i={initials} j={terminals} s={} l={}", sign.symbol(), layout_str(*layout))?;
                if let Some(ids) = ids {
                    write!(f, " id={}", join(ids))?;
                }
                Ok(())
            }
            Move::R2Remove { chords } => write!(f, "R2- c={}", join(chords)),
            Move::R3 { pairs } => write!(f, "R3 at={}", join(pairs)),
            Move::XiSwap { at } => write!(f, "XI {at}"),
            Move::TwoKInsert(site) => {
                write!(f, "2K+ k={} a={} b={} s={}", site.k, site.a, site.b, site.sign.symbol())?;
                if site.lead != Role::Initial {
                    write!(f, " o={}", role_str(site.lead))?;
                }
                if site.layout != ChordLayout::Nested {
                    write!(f, " l={}", layout_str(site.layout))?;
                }
                if let Some(ids) = &site.ids {
                    write!(f, " id={}", join(ids))?;
                }
                Ok(())
            }
            Move::TwoKRemove { k, at } => write!(f, "2K- k={k} at={at}"),
        }
    }
}

struct Fields<'a> {
    line: &'a str,
    map: BTreeMap<&'a str, &'a str>,
}

impl<'a> Fields<'a> {
    fn err(&self, reason: impl Into<String>) -> MoveError {
        MoveError::Syntax { line: self.line.to_string(), reason: reason.into() }
    }

    fn raw(&self, key: &str) -> Result<&'a str, MoveError> {
        self.map.get(key).copied().ok_or_else(|| self.err(format!("missing `{key}=`")))
    }

    fn num<T: FromStr>(&self, key: &str) -> Result<T, MoveError> {
        let v = self.raw(key)?;
        v.parse().map_err(|_| self.err(format!("bad number `{v}` for `{key}`")))
    }

    fn list<T: FromStr>(&self, key: &str) -> Result<Vec<T>, MoveError> {
        let v = self.raw(key)?;
        v.split(',')
            .map(|x| x.trim().parse().map_err(|_| self.err(format!("bad list `{v}` for `{key}`"))))
            .collect()
    }

    fn chords(&self, key: &str) -> Result<Vec<ChordId>, MoveError> {
        Ok(self.list::<u32>(key)?.into_iter().map(ChordId).collect())
    }

    fn sign(&self) -> Result<Sign, MoveError> {
        let v = self.raw("s")?;
        let mut chars = v.chars();
        match (chars.next().and_then(Sign::from_symbol), chars.next()) {
            (Some(s), None) => Ok(s),
            _ => Err(self.err(format!("bad sign `{v}`"))),
        }
    }

    fn role(&self, default: Option<Role>) -> Result<Role, MoveError> {
        match (self.map.get("o"), default) {
            (None, Some(r)) => Ok(r),
            (None, None) => Err(self.err("missing `o=`")),
            (Some(&"I"), _) => Ok(Role::Initial),
            (Some(&"T"), _) => Ok(Role::Terminal),
            (Some(v), _) => Err(self.err(format!("bad role `{v}` (expected I or T)"))),
        }
    }

    fn layout(&self, default: Option<ChordLayout>) -> Result<ChordLayout, MoveError> {
        match (self.map.get("l"), default) {
            (None, Some(l)) => Ok(l),
            (None, None) => Err(self.err("missing `l=`")),
            (Some(&"nested"), _) => Ok(ChordLayout::Nested),
            (Some(&"crossed"), _) => Ok(ChordLayout::Crossed),
            (Some(v), _) => Err(self.err(format!("bad layout `{v}`"))),
        }
    }
}

impl FromStr for Move {
    type Err = MoveError;

    fn from_str(s: &str) -> Result<Move, MoveError> {
        let line = s.trim();
        let mut words = line.split_whitespace();
        let verb = words
            .next()
            .ok_or_else(|| MoveError::Syntax { line: line.to_string(), reason: "empty line".into() })?;
        let rest: Vec<&str> = words.collect();
        let mut fields = Fields { line, map: BTreeMap::new() };
        if verb == "XI" {
            return match rest.as_slice() {
                [p] => Ok(Move::XiSwap { at: p.parse().map_err(|_| fields.err("bad position"))? }),
                _ => Err(fields.err("expected `XI <pos>`")),
            };
        }
        for w in &rest {
            let (k, v) = w.split_once('=').ok_or_else(|| fields.err(format!("expected key=value, got `{w}`")))?;
            if fields.map.insert(k, v).is_some() {
                return Err(fields.err(format!("repeated key `{k}`")));
            }
        }
        let allowed: &[&str] = match verb {
            "R1+" => &["a", "s", "o", "id"],
            "R1-" => &["c"],
            "R2+" => &["i", "j", "s", "l", "id"],
            "R2-" => &["c"],
            "R3" => &["at"],
            "2K+" => &["k", "a", "b", "s", "o", "l", "id"],
            "2K-" => &["k", "at"],
            _ => return Err(fields.err(format!("unknown move `{verb}`"))),
        };
        if let Some(k) = fields.map.keys().find(|k| !allowed.contains(k)) {
            return Err(fields.err(format!("unexpected key `{k}`")));
        }
        let f = &fields;
        let pair = |v: Vec<ChordId>| -> Result<[ChordId; 2], MoveError> {
            <[ChordId; 2]>::try_from(v).map_err(|_| f.err("expected two chord labels"))
        };
        match verb {
            "R1+" => Ok(Move::R1Add {
                at: f.num("a")?,
                sign: f.sign()?,
                first: f.role(None)?,
                id: if f.map.contains_key("id") { Some(ChordId(f.num("id")?)) } else { None },
            }),
            "R1-" => Ok(Move::R1Remove { chord: ChordId(f.num("c")?) }),
            "R2+" => Ok(Move::R2Add {
                initials: f.num("i")?,
                terminals: f.num("j")?,
                sign: f.sign()?,
                layout: f.layout(None)?,
                ids: if f.map.contains_key("id") { Some(pair(f.chords("id")?)?) } else { None },
            }),
            "R2-" => Ok(Move::R2Remove { chords: pair(f.chords("c")?)? }),
            "R3" => {
                let v: Vec<usize> = f.list("at")?;
                let pairs = <[usize; 3]>::try_from(v).map_err(|_| f.err("expected three positions"))?;
                Ok(Move::R3 { pairs })
            }
            "2K+" => Ok(Move::TwoKInsert(TwoKSite {
                k: f.num("k")?,
                a: f.num("a")?,
                b: f.num("b")?,
                sign: f.sign()?,
                lead: f.role(Some(Role::Initial))?,
                layout: f.layout(Some(ChordLayout::Nested))?,
                ids: if f.map.contains_key("id") { Some(f.chords("id")?) } else { None },
            })),
            "2K-" => Ok(Move::TwoKRemove { k: f.num("k")?, at: f.num("at")? }),
            _ => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_examples_parse() {
        assert_eq!("XI 4".parse::<Move>().unwrap(), Move::XiSwap { at: 4 });
        assert_eq!(
            "2K+ k=2 a=3 b=9 s=+".parse::<Move>().unwrap(),
            Move::TwoKInsert(TwoKSite::new(2, 3, 9, Sign::Pos))
        );
        assert_eq!("2K- k=2 at=3".parse::<Move>().unwrap(), Move::TwoKRemove { k: 2, at: 3 });
        assert_eq!("R1- c=5".parse::<Move>().unwrap(), Move::R1Remove { chord: ChordId(5) });
        assert_eq!(
            "R1+ a=2 s=+ o=I".parse::<Move>().unwrap(),
            Move::R1Add { at: 2, sign: Sign::Pos, first: Role::Initial, id: None }
        );
    }

    #[test]
    fn display_round_trips() {
        let moves = vec![
            Move::R1Add { at: 0, sign: Sign::Neg, first: Role::Terminal, id: Some(ChordId(7)) },
            Move::R1Remove { chord: ChordId(3) },
            Move::R2Add { initials: 1, terminals: 5, sign: Sign::Pos, layout: ChordLayout::Crossed, ids: None },
            Move::R2Add {
                initials: 0,
                terminals: 2,
                sign: Sign::Neg,
                layout: ChordLayout::Nested,
                ids: Some([ChordId(4), ChordId(9)]),
            },
            Move::R2Remove { chords: [ChordId(1), ChordId(2)] },
            Move::R3 { pairs: [0, 3, 7] },
            Move::XiSwap { at: 11 },
            Move::TwoKInsert(
                TwoKSite::new(3, 0, 8, Sign::Neg).with_lead(Role::Terminal).with_layout(ChordLayout::Crossed),
            ),
            Move::TwoKInsert(TwoKSite {
                ids: Some(vec![ChordId(5), ChordId(6)]),
                ..TwoKSite::new(1, 2, 6, Sign::Pos)
            }),
            Move::TwoKRemove { k: 1, at: 0 },
        ];
        for m in moves {
            assert_eq!(m.to_string().parse::<Move>().unwrap(), m, "{m}");
        }
    }

    #[test]
    fn rejects_malformed_lines() {
        for bad in ["", "XI", "XI x", "R1+ a=1 s=+", "R1+ a=1 s=* o=I", "R2- c=1", "R3 at=1,2", "2K- k=1", "FOO", "R1- c=1 c=2", "R1- d=1"] {
            assert!(matches!(bad.parse::<Move>(), Err(MoveError::Syntax { .. })), "{bad}");
        }
    }
}
