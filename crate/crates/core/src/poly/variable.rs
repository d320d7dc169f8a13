//! Tagged ring variables and the variable universes of the encodings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Variable families. Declaration order is the enumeration order used by
/// every monomial order: all `E` variables precede all `F` variables, etc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Tag {
    /// Edge indicator of the first graph, `e_i_j`.
    E,
    /// Edge indicator of the second graph, `f_i_j`.
    F,
    /// Vertex colour of the first graph, `x_i`.
    X,
    /// Vertex colour of the second graph, `y_i`.
    Y,
    /// Vertex colour in the product graph, `z_i_j`.
    Z,
    /// Colour of vertex `l` in the first graph with edge `pq` removed.
    XT,
    /// Colour of vertex `l` in the second graph with edge `pq` removed.
    YT,
}

impl Tag {
    const ALL: [Tag; 7] = [Tag::E, Tag::F, Tag::X, Tag::Y, Tag::Z, Tag::XT, Tag::YT];

    pub fn arity(self) -> usize {
        match self {
            Tag::X | Tag::Y => 1,
            Tag::E | Tag::F | Tag::Z => 2,
            Tag::XT | Tag::YT => 3,
        }
    }

    pub fn prefix(self) -> &'static str {
        match self {
            Tag::E => "e",
            Tag::F => "f",
            Tag::X => "x",
            Tag::Y => "y",
            Tag::Z => "z",
            Tag::XT => "xt",
            Tag::YT => "yt",
        }
    }

    fn from_prefix(s: &str) -> Option<Tag> {
        Tag::ALL.into_iter().find(|t| t.prefix() == s)
    }
}

/// A ring variable, packed into a `u64` as `tag:16 | a:16 | b:16 | c:16`.
///
/// The packing makes the integer order coincide with the enumeration order
/// (tag first, then indices lexicographically).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(u64);

impl Variable {
    fn pack(tag: Tag, a: u16, b: u16, c: u16) -> Self {
        Variable(((tag as u64) << 48) | ((a as u64) << 32) | ((b as u64) << 16) | c as u64)
    }

    fn checked(tag: Tag, idx: &[usize]) -> Result<Self> {
        if idx.len() != tag.arity() {
            return Err(Error::param(format!(
                "{} takes {} indices, got {}",
                tag.prefix(),
                tag.arity(),
                idx.len()
            )));
        }
        let mut packed = [0u16; 3];
        for (slot, &i) in packed.iter_mut().zip(idx) {
            if i == 0 || i > u16::MAX as usize {
                return Err(Error::param(format!("index {i} out of range for {}", tag.prefix())));
            }
            *slot = i as u16;
        }
        let ordered = match tag {
            Tag::E | Tag::F => packed[0] < packed[1],
            Tag::XT | Tag::YT => packed[0] < packed[1],
            _ => true,
        };
        if !ordered {
            return Err(Error::param(format!(
                "{} requires its first two indices increasing, got {:?}",
                tag.prefix(),
                idx
            )));
        }
        Ok(Self::pack(tag, packed[0], packed[1], packed[2]))
    }

    /// Builds a variable, validating arity, positivity and `i < j` where the
    /// tag demands it.
    pub fn new(tag: Tag, idx: &[usize]) -> Result<Self> {
        Self::checked(tag, idx)
    }

    /// Edge variable `e_{ij}`; the pair is sorted so either order works.
    pub fn e(i: usize, j: usize) -> Self {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        Self::checked(Tag::E, &[a, b]).expect("invalid e index")
    }

    pub fn f(i: usize, j: usize) -> Self {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        Self::checked(Tag::F, &[a, b]).expect("invalid f index")
    }

    pub fn x(i: usize) -> Self {
        Self::checked(Tag::X, &[i]).expect("invalid x index")
    }

    pub fn y(i: usize) -> Self {
        Self::checked(Tag::Y, &[i]).expect("invalid y index")
    }

    pub fn z(i: usize, ip: usize) -> Self {
        Self::checked(Tag::Z, &[i, ip]).expect("invalid z index")
    }

    pub fn xt(p: usize, q: usize, l: usize) -> Self {
        Self::checked(Tag::XT, &[p, q, l]).expect("invalid xt index")
    }

    pub fn yt(p: usize, q: usize, l: usize) -> Self {
        Self::checked(Tag::YT, &[p, q, l]).expect("invalid yt index")
    }

    pub fn tag(self) -> Tag {
        Tag::ALL[(self.0 >> 48) as usize]
    }

    pub fn indices(self) -> Vec<usize> {
        let all = [
            ((self.0 >> 32) & 0xffff) as usize,
            ((self.0 >> 16) & 0xffff) as usize,
            (self.0 & 0xffff) as usize,
        ];
        all[..self.tag().arity()].to_vec()
    }

    /// True for the edge-indicator families kept by the elimination steps.
    pub fn is_edge(self) -> bool {
        matches!(self.tag(), Tag::E | Tag::F)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag().prefix())?;
        for i in self.indices() {
            write!(f, "_{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split('_');
        let head = parts.next().unwrap_or_default();
        let tag =
            Tag::from_prefix(head).ok_or_else(|| Error::param(format!("unknown variable family `{head}` in `{s}`")))?;
        let idx = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::param(format!("bad index `{p}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Variable::checked(tag, &idx)
    }
}

impl serde::Serialize for Variable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which ring the encoding lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum RingKind {
    /// `e, f, x, y, z`: the ring of the W-side ideal.
    W,
    /// `e, f, xt, yt, z`: the ring of the V-side ideal.
    V,
    /// `e, f, z` only: the ring of the fixed-graph pair ideal.
    Pair,
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// Enumerates the variables of the chosen ring in canonical order.
pub fn var_universe(kind: RingKind, k: usize, n: usize, np: usize) -> Result<Vec<Variable>> {
    if k < 2 {
        return Err(Error::param(format!("k must be at least 2, got {k}")));
    }
    if n == 0 || np == 0 {
        return Err(Error::param("n and n' must be positive"));
    }
    if n > 200 || np > 200 {
        return Err(Error::param("graph orders above 200 are not supported"));
    }
    let mut vars: Vec<Variable> = pairs(n).map(|(i, j)| Variable::e(i, j)).collect();
    vars.extend(pairs(np).map(|(i, j)| Variable::f(i, j)));
    match kind {
        RingKind::W => {
            vars.extend((1..=n).map(Variable::x));
            vars.extend((1..=np).map(Variable::y));
        }
        RingKind::V => {
            for (p, q) in pairs(n) {
                vars.extend((1..=n).map(|l| Variable::xt(p, q, l)));
            }
            for (p, q) in pairs(np) {
                vars.extend((1..=np).map(|l| Variable::yt(p, q, l)));
            }
        }
        RingKind::Pair => {}
    }
    for i in 1..=n {
        vars.extend((1..=np).map(|ip| Variable::z(i, ip)));
    }
    vars.sort();
    Ok(vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order_is_tag_then_indices() {
        let mut v = [
            Variable::z(1, 1),
            Variable::f(1, 2),
            Variable::e(2, 3),
            Variable::e(1, 3),
            Variable::x(2),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(|v| v.to_string()).collect();
        assert_eq!(s, ["e_1_3", "e_2_3", "f_1_2", "x_2", "z_1_1"]);
    }

    #[test]
    fn parse_roundtrip_and_validation() {
        for s in ["e_1_2", "f_3_11", "x_4", "y_1", "z_8_11", "xt_1_2_3", "yt_2_5_1"] {
            assert_eq!(s.parse::<Variable>().unwrap().to_string(), s);
        }
        assert!("e_2_1".parse::<Variable>().is_err());
        assert!("e_0_1".parse::<Variable>().is_err());
        assert!("x_1_2".parse::<Variable>().is_err());
        assert!("w_1".parse::<Variable>().is_err());
    }

    #[test]
    fn universe_sizes() {
        assert_eq!(var_universe(RingKind::W, 3, 2, 2).unwrap().len(), 10);
        assert_eq!(var_universe(RingKind::W, 5, 8, 11).unwrap().len(), 190);
        assert_eq!(var_universe(RingKind::V, 5, 8, 11).unwrap().len(), 1000);
        assert_eq!(var_universe(RingKind::Pair, 5, 8, 11).unwrap().len(), 171);
        assert_eq!(var_universe(RingKind::V, 3, 3, 3).unwrap().len(), 33);
        assert!(var_universe(RingKind::W, 1, 2, 2).is_err());
        assert!(var_universe(RingKind::W, 3, 0, 2).is_err());
    }
}
