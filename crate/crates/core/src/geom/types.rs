//! Reading tile types off the built tessellation.
//!
//! Every corner of a face carries a digit: how far the face's generation
//! sits above the generation of that vertex, plus a side tag telling
//! which slope of the vertex's generation profile the face lies on. The
//! digit profile around a face, read counterclockwise from a canonical
//! corner, determines the face's letter in the substitution alphabet.

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;
use crate::geom::build::Tessellation;
use crate::letter::Letter;
use crate::params::Family;
use crate::subst::Substitution;

/// Side tag of a corner digit. Declaration order is the preference order
/// used to pick the canonical corner among equal indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    LowerL,
    LowerR,
    UpperL,
    None,
    UpperR,
}

impl Side {
    fn rank(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Side::LowerL => "l",
            Side::LowerR => "r",
            Side::UpperL => "L",
            Side::UpperR => "R",
            Side::None => "",
        };
        write!(f, "{s}")
    }
}

/// Corner marking: the face's generation minus the vertex's, plus a side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Digit {
    pub idx: u32,
    pub side: Side,
}

impl Digit {
    pub fn new(idx: u32, side: Side) -> Digit {
        Digit { idx, side }
    }

    pub fn bare(idx: u32) -> Digit {
        Digit { idx, side: Side::None }
    }

    /// Canonical-corner preference: deepest index first, then side rank.
    fn preference(self) -> (u32, std::cmp::Reverse<u8>) {
        (self.idx, std::cmp::Reverse(self.side.rank()))
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.idx, self.side)
    }
}

/// Ring of faces around a complete vertex, rotated to the conventional
/// first element, with the digit each face carries at this vertex.
///
/// The generation profile around a vertex rises from its minima by one
/// per step. Even `q` has a unique minimal face; odd `q` has either two
/// adjacent co-minimal faces (first kind, lower sides) or a unique
/// minimal face (second kind, upper sides).
pub fn vertex_digits(
    tess: &Tessellation,
    v: usize,
) -> Result<(Vec<usize>, Vec<Digit>), Error> {
    let q = tess.params.q();
    let k = tess.params.k();
    if !tess.vertex_complete(v) {
        return Err(Error::Geometry(format!("vertex {v} is not complete")));
    }
    let ring = tess.vertex_ring(v);
    let qs = q as usize;
    let gens: Vec<u32> = ring.iter().map(|&t| tess.tiles[t].gen).collect();
    let g = *gens.iter().min().unwrap();
    let mins: Vec<usize> = (0..qs).filter(|&i| gens[i] == g).collect();

    let (start, digits): (usize, Vec<Digit>) = if q % 2 == 0 {
        if mins.len() != 1 {
            return Err(Error::AmbiguousFirstElement { vertex: v, candidates: mins.len() });
        }
        let digits = (0..q)
            .map(|o| match o {
                0 => Digit::bare(0),
                o if o < k => Digit::new(o, Side::LowerL),
                o if o == k => Digit::bare(k),
                o => Digit::new(q - o, Side::LowerR),
            })
            .collect();
        (mins[0], digits)
    } else {
        match mins[..] {
            [m] => {
                let digits = (0..q)
                    .map(|o| match o {
                        0 => Digit::bare(0),
                        o if o <= k => Digit::new(o, Side::UpperL),
                        o => Digit::new(q - o, Side::UpperR),
                    })
                    .collect();
                (m, digits)
            }
            [a, b] if b == a + 1 || (a == 0 && b == qs - 1) => {
                // First element: the co-minimum whose counterclockwise
                // successor is not the other co-minimum.
                let start = if b == a + 1 { b } else { a };
                let digits = (0..q)
                    .map(|o| match o {
                        0 => Digit::new(0, Side::LowerL),
                        o if o < k => Digit::new(o, Side::LowerL),
                        o if o == k => Digit::bare(k),
                        o if o < 2 * k => Digit::new(2 * k - o, Side::LowerR),
                        _ => Digit::new(0, Side::LowerR),
                    })
                    .collect();
                (start, digits)
            }
            _ => {
                return Err(Error::AmbiguousFirstElement { vertex: v, candidates: mins.len() })
            }
        }
    };

    let rotated: Vec<usize> = (0..qs).map(|o| ring[(start + o) % qs]).collect();
    for (o, d) in digits.iter().enumerate() {
        let got = tess.tiles[rotated[o]].gen;
        if got != g + d.idx {
            return Err(Error::Geometry(format!(
                "vertex {v}: generation ladder broken at offset {o}: expected {}, found {got}",
                g + d.idx
            )));
        }
    }
    Ok((rotated, digits))
}

/// Digit profile of each letter, counterclockwise from its canonical
/// corner. The canonical corner maximises the digit index, breaking ties
/// by side preference.
pub fn type_table(subst: &Substitution) -> Vec<(Letter, Vec<Digit>)> {
    let params = subst.params();
    let p = params.p() as usize;
    let k = params.k();
    let ku = k as u16;
    let d = Digit::new;
    let bare = Digit::bare;
    use Side::{LowerL as L0, LowerR as R0, UpperL as L1, UpperR as R1};

    let pad = |mut head: Vec<Digit>, tail: Vec<Digit>| -> Vec<Digit> {
        let fill = p - head.len() - tail.len();
        head.extend(std::iter::repeat_n(bare(0), fill));
        head.extend(tail);
        head
    };

    let mut out = vec![(Letter::axiom(), vec![bare(0); p])];
    match params.family() {
        Family::EvenGeneral | Family::Square => {
            for i in 1..ku {
                out.push((Letter::a(i), pad(vec![d(i.into(), L0), d(1, R0)], vec![])));
            }
            out.push((Letter::a(ku), pad(vec![bare(k), d(1, R0)], vec![d(1, L0)])));
            for j in 2..ku {
                out.push((Letter::abar(j), pad(vec![d(j.into(), R0)], vec![d(1, L0)])));
            }
        }
        Family::EvenTriangle | Family::HexTriangle => {
            for i in 1..ku {
                out.push((Letter::a(i), vec![d(i.into(), L0), d(1, R0), bare(0)]));
            }
            out.push((Letter::a(ku), vec![bare(k), d(1, R0), d(1, L0)]));
            out.push((Letter::a(ku + 1), vec![d(2, L0), d(2, R0), bare(0)]));
            for j in 2..ku {
                out.push((Letter::abar(j), vec![d(j.into(), R0), bare(0), d(1, L0)]));
            }
        }
        Family::OddGeneral => {
            for i in 1..ku {
                out.push((Letter::a(i), pad(vec![d(i.into(), L0), d(1, R1)], vec![])));
            }
            out.push((Letter::a(ku), pad(vec![bare(k), d(1, R1)], vec![d(1, L1)])));
            for i in 1..ku {
                out.push((Letter::b(i), pad(vec![d(i.into(), L1), d(1, R1)], vec![])));
            }
            out.push((Letter::b(ku), pad(vec![d(k, L1), d(1, R1)], vec![d(0, L0)])));
            for j in 1..ku {
                out.push((Letter::abar(j), pad(vec![d(j.into(), R0)], vec![d(1, L1)])));
            }
            for j in 2..ku {
                out.push((Letter::bbar(j), pad(vec![d(j.into(), R1)], vec![d(1, L1)])));
            }
            out.push((Letter::bbar(ku), pad(vec![d(k, R1), d(0, R0)], vec![d(1, L1)])));
        }
        Family::OddTriangle => {
            out.push((Letter::a(1), vec![d(2, R1), bare(0), d(1, L0)]));
            for i in 2..ku {
                out.push((Letter::a(i), vec![d(i.into(), L0), d(1, R1), bare(0)]));
            }
            out.push((Letter::a(ku), vec![bare(k), d(1, R1), d(1, L1)]));
            out.push((Letter::a(ku + 1), vec![d(2, L1), d(2, R1), bare(0)]));
            for i in 1..ku {
                out.push((Letter::b(i), vec![d(i.into(), L1), d(1, R1), bare(0)]));
            }
            out.push((Letter::b(ku), vec![d(k, L1), d(1, R1), d(0, L0)]));
            out.push((Letter::abar(1), vec![d(2, L1), d(1, R0), bare(0)]));
            for j in 2..ku {
                out.push((Letter::abar(j), vec![d(j.into(), R0), bare(0), d(1, L1)]));
            }
            for j in 2..ku {
                out.push((Letter::bbar(j), vec![d(j.into(), R1), bare(0), d(1, L1)]));
            }
            out.push((Letter::bbar(ku), vec![d(k, R1), d(0, R0), d(1, L1)]));
        }
        Family::ThreeValent => {
            out.push((Letter::a(1), pad(vec![d(1, L1), d(1, R1), d(0, R0)], vec![d(0, L0)])));
            out.push((
                Letter::b(1),
                pad(vec![d(1, L1), bare(1), d(1, R1), d(0, R0)], vec![d(0, L0)]),
            ));
        }
    }
    out
}

/// Full child arc of each letter: the types of the faces of the next
/// generation adjacent to a face of this type, counterclockwise, paired
/// with ownership. A face owns the children the substitution image
/// assigns to it; a child flagged `false` is shared with (and owned by)
/// another parent. Masking the arc by ownership recovers the image.
pub fn successor_arc_table(subst: &Substitution) -> Vec<(Letter, Vec<(Letter, bool)>)> {
    let params = subst.params();
    let p = params.p() as usize;
    let ku = params.k() as u16;
    let own = |l: Letter| (l, true);
    let shared = |l: Letter| (l, false);
    let rep = |l: Letter, n: usize| std::iter::repeat_n(own(l), n);

    let mut out: Vec<(Letter, Vec<(Letter, bool)>)> = Vec::new();
    match params.family() {
        Family::EvenGeneral => {
            out.push((Letter::axiom(), rep(Letter::a(1), p).collect()));
            for i in 1..ku {
                let mut arc = vec![own(Letter::abar(2))];
                arc.extend(rep(Letter::a(1), p - 3));
                arc.push(if i + 1 == ku { shared(Letter::a(ku)) } else { own(Letter::a(i + 1)) });
                out.push((Letter::a(i), arc));
            }
            let mut arc = vec![own(Letter::abar(2))];
            arc.extend(rep(Letter::a(1), p - 4));
            arc.push(own(Letter::a(2)));
            out.push((Letter::a(ku), arc));
            for j in 2..ku {
                let head =
                    if j + 1 == ku { Letter::a(ku) } else { Letter::abar(j + 1) };
                let mut arc = vec![own(head)];
                arc.extend(rep(Letter::a(1), p - 3));
                arc.push(own(Letter::a(2)));
                out.push((Letter::abar(j), arc));
            }
        }
        Family::Square => {
            out.push((Letter::axiom(), rep(Letter::a(1), 4).collect()));
            out.push((Letter::a(1), vec![own(Letter::a(2)), own(Letter::a(1)), shared(Letter::a(2))]));
            out.push((Letter::a(2), vec![own(Letter::a(2)), shared(Letter::a(2))]));
        }
        Family::EvenTriangle | Family::HexTriangle => {
            out.push((Letter::axiom(), rep(Letter::a(1), 3).collect()));
            for i in 1..ku {
                let tail =
                    if i + 1 == ku { shared(Letter::a(ku)) } else { own(Letter::a(i + 1)) };
                out.push((Letter::a(i), vec![own(Letter::abar(2)), tail]));
            }
            out.push((Letter::a(ku), vec![own(Letter::a(ku + 1))]));
            if ku >= 4 {
                out.push((Letter::a(ku + 1), vec![own(Letter::abar(3)), own(Letter::a(3))]));
            } else {
                out.push((Letter::a(ku + 1), vec![own(Letter::a(3)), shared(Letter::a(3))]));
            }
            for j in 2..ku {
                let head =
                    if j + 1 == ku { Letter::a(ku) } else { Letter::abar(j + 1) };
                out.push((Letter::abar(j), vec![own(head), own(Letter::a(2))]));
            }
        }
        Family::OddGeneral => {
            out.push((Letter::axiom(), rep(Letter::b(1), p).collect()));
            for i in 1..ku {
                let mut arc = vec![own(Letter::bbar(2))];
                arc.extend(rep(Letter::b(1), p - 3));
                arc.push(own(Letter::a(i + 1)));
                out.push((Letter::a(i), arc));
            }
            let mut arc = vec![own(Letter::bbar(2))];
            arc.extend(rep(Letter::b(1), p - 4));
            arc.push(own(Letter::b(2)));
            out.push((Letter::a(ku), arc));
            for i in 1..ku {
                let mut arc = vec![own(Letter::bbar(2))];
                arc.extend(rep(Letter::b(1), p - 3));
                arc.push(own(Letter::b(i + 1)));
                out.push((Letter::b(i), arc));
            }
            let mut arc = vec![own(Letter::bbar(2))];
            arc.extend(rep(Letter::b(1), p - 4));
            arc.push(own(Letter::a(1)));
            out.push((Letter::b(ku), arc));
            for j in 1..ku {
                let head = if j + 1 == ku {
                    shared(Letter::a(ku))
                } else {
                    own(Letter::abar(j + 1))
                };
                let mut arc = vec![head];
                arc.extend(rep(Letter::b(1), p - 3));
                arc.push(own(Letter::b(2)));
                out.push((Letter::abar(j), arc));
            }
            for j in 2..ku {
                let mut arc = vec![own(Letter::bbar(j + 1))];
                arc.extend(rep(Letter::b(1), p - 3));
                arc.push(own(Letter::b(2)));
                out.push((Letter::bbar(j), arc));
            }
            let mut arc = vec![own(Letter::abar(1))];
            arc.extend(rep(Letter::b(1), p - 4));
            arc.push(own(Letter::b(2)));
            out.push((Letter::bbar(ku), arc));
        }
        Family::OddTriangle => {
            out.push((Letter::axiom(), rep(Letter::b(1), 3).collect()));
            out.push((Letter::a(1), vec![own(Letter::bbar(3)), own(Letter::a(2))]));
            for i in 2..ku {
                out.push((Letter::a(i), vec![own(Letter::bbar(2)), own(Letter::a(i + 1))]));
            }
            out.push((Letter::a(ku), vec![own(Letter::a(ku + 1))]));
            out.push((Letter::a(ku + 1), vec![own(Letter::bbar(3)), own(Letter::b(3))]));
            for i in 1..ku {
                out.push((Letter::b(i), vec![own(Letter::bbar(2)), own(Letter::b(i + 1))]));
            }
            out.push((Letter::b(ku), vec![own(Letter::a(1))]));
            out.push((Letter::abar(1), vec![own(Letter::abar(2)), own(Letter::b(3))]));
            for j in 2..ku {
                let head = if j + 1 == ku {
                    shared(Letter::a(ku))
                } else {
                    own(Letter::abar(j + 1))
                };
                out.push((Letter::abar(j), vec![head, own(Letter::b(2))]));
            }
            for j in 2..ku {
                out.push((Letter::bbar(j), vec![own(Letter::bbar(j + 1)), own(Letter::b(2))]));
            }
            out.push((Letter::bbar(ku), vec![own(Letter::abar(1))]));
        }
        Family::ThreeValent => {
            out.push((Letter::axiom(), rep(Letter::a(1), p).collect()));
            let mut arc = vec![shared(Letter::b(1))];
            arc.extend(rep(Letter::a(1), p - 5));
            arc.push(own(Letter::b(1)));
            out.push((Letter::a(1), arc));
            let mut arc = vec![shared(Letter::b(1))];
            arc.extend(rep(Letter::a(1), p - 6));
            arc.push(own(Letter::b(1)));
            out.push((Letter::b(1), arc));
        }
    }
    out
}

/// The tessellation with a type assigned to every face whose corners are
/// all complete and consistent.
pub struct TypedTessellation<'a> {
    pub tess: &'a Tessellation,
    pub subst: &'a Substitution,
    /// Per vertex: CCW face ring from the conventional first element,
    /// with the digit each face carries there.
    ring_info: Vec<Option<(Vec<usize>, Vec<Digit>)>>,
    /// Per face: digit profile in stored (CCW) corner order.
    pub profiles: Vec<Option<Vec<Digit>>>,
    pub tile_type: Vec<Option<Letter>>,
    /// Human-readable notes on every vertex or face that could not be
    /// processed cleanly. Empty on a healthy tessellation.
    pub diagnostics: Vec<String>,
}

impl<'a> TypedTessellation<'a> {
    pub fn analyze(tess: &'a Tessellation, subst: &'a Substitution) -> TypedTessellation<'a> {
        let mut diagnostics = Vec::new();

        let mut lookup: HashMap<Vec<Digit>, Letter> = HashMap::new();
        for (letter, profile) in type_table(subst) {
            let prev = lookup.insert(profile, letter);
            debug_assert!(prev.is_none(), "duplicate type profile for {letter}");
        }

        let mut ring_info = Vec::with_capacity(tess.vertices.len());
        for v in 0..tess.vertices.len() {
            if !tess.vertex_complete(v) {
                ring_info.push(None);
                continue;
            }
            match vertex_digits(tess, v) {
                Ok(info) => ring_info.push(Some(info)),
                Err(e) => {
                    diagnostics.push(e.to_string());
                    ring_info.push(None);
                }
            }
        }

        let mut profiles = Vec::with_capacity(tess.tiles.len());
        let mut tile_type = Vec::with_capacity(tess.tiles.len());
        for (t, tile) in tess.tiles.iter().enumerate() {
            let profile: Option<Vec<Digit>> = tile
                .corners
                .iter()
                .map(|&v| {
                    ring_info[v].as_ref().map(|(ring, digits)| {
                        let o = ring.iter().position(|&x| x == t).unwrap();
                        digits[o]
                    })
                })
                .collect();
            let letter = profile.as_ref().and_then(|prof| {
                match classify_profile(&lookup, prof) {
                    Ok(letter) => letter,
                    Err(msg) => {
                        diagnostics.push(format!(
                            "face {t} (generation {}): {msg}",
                            tile.gen
                        ));
                        None
                    }
                }
            });
            profiles.push(profile);
            tile_type.push(letter);
        }

        TypedTessellation { tess, subst, ring_info, profiles, tile_type, diagnostics }
    }

    /// Ring and digits at a complete, consistent vertex.
    pub fn vertex_info(&self, v: usize) -> Option<&(Vec<usize>, Vec<Digit>)> {
        self.ring_info[v].as_ref()
    }

    /// Faces of the next generation adjacent to `t`, counterclockwise.
    /// They must form one contiguous run among the neighbors; the run is
    /// returned from its counterclockwise start. The root's children
    /// wrap all the way around, so its arc starts at the child closest
    /// to the positive x axis.
    pub fn child_arc(&self, t: usize) -> Result<Vec<usize>, String> {
        let tess = self.tess;
        let p = tess.params.p() as usize;
        let gen = tess.tiles[t].gen;
        let mut children = vec![false; p];
        for e in 0..p {
            match tess.neighbors[t][e] {
                Some(n) => children[e] = tess.tiles[n].gen == gen + 1,
                None => return Err(format!("face {t} has an unbuilt neighbor")),
            }
        }
        let count = children.iter().filter(|c| **c).count();
        if count == 0 {
            return Ok(Vec::new());
        }
        let start = if count == p {
            (0..p)
                .min_by(|&a, &b| {
                    let angle = |e: usize| {
                        let n = tess.neighbors[t][e].unwrap();
                        let c = tess.model.klein(&tess.tiles[n].center);
                        let raw = c[1].atan2(c[0]);
                        if raw < 0.0 { raw + 2.0 * std::f64::consts::PI } else { raw }
                    };
                    angle(a).partial_cmp(&angle(b)).unwrap()
                })
                .unwrap()
        } else {
            (0..p)
                .find(|&e| children[e] && !children[(e + p - 1) % p])
                .ok_or_else(|| format!("face {t}: children are not contiguous"))?
        };
        let mut arc = Vec::with_capacity(count);
        for off in 0..count {
            let e = (start + off) % p;
            if !children[e] {
                return Err(format!("face {t}: children are not contiguous"));
            }
            arc.push(tess.neighbors[t][e].unwrap());
        }
        Ok(arc)
    }

    /// Number of built neighbors of the same generation.
    pub fn same_gen_neighbors(&self, t: usize) -> usize {
        let gen = self.tess.tiles[t].gen;
        self.tess.neighbors[t]
            .iter()
            .flatten()
            .filter(|&&n| self.tess.tiles[n].gen == gen)
            .count()
    }

    /// Number of built neighbors of the previous generation.
    pub fn parent_count(&self, t: usize) -> usize {
        let gen = self.tess.tiles[t].gen;
        self.tess.neighbors[t]
            .iter()
            .flatten()
            .filter(|&&n| self.tess.tiles[n].gen + 1 == gen)
            .count()
    }
}

/// Match a digit profile against the type table. The profile is read
/// counterclockwise from each canonical corner (ties allowed); it must
/// match exactly one letter.
fn classify_profile(
    lookup: &HashMap<Vec<Digit>, Letter>,
    profile: &[Digit],
) -> Result<Option<Letter>, String> {
    let best = profile.iter().copied().max_by_key(|d| d.preference()).unwrap();
    let mut matched: Option<Letter> = None;
    for s in 0..profile.len() {
        if profile[s] != best {
            continue;
        }
        let rotation: Vec<Digit> =
            (0..profile.len()).map(|o| profile[(s + o) % profile.len()]).collect();
        if let Some(&letter) = lookup.get(&rotation) {
            match matched {
                None => matched = Some(letter),
                Some(prev) if prev == letter => {}
                Some(prev) => {
                    return Err(format!(
                        "profile [{}] matches both {prev} and {letter}",
                        join_digits(profile)
                    ));
                }
            }
        }
    }
    if matched.is_none() {
        return Err(format!("unmatched profile [{}]", join_digits(profile)));
    }
    Ok(matched)
}

fn join_digits(profile: &[Digit]) -> String {
    profile.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
}
