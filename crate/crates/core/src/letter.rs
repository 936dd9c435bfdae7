use std::fmt;

/// Series a letter belongs to. The `a`/`b` series are tile types proper;
/// the bar series mark tiles whose expansion borrows from a neighbour.
/// `Axiom` is the seed tile `a0`, which occurs in no image and is not part
/// of the working alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    A,
    B,
    ABar,
    BBar,
    Axiom,
}

/// A letter of the tile-type alphabet, e.g. `a3` or `bbar2`.
///
/// Ordering is the canonical matrix order: all `a`s by index, then `b`s,
/// then `abar`s, then `bbar`s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: LetterKind,
    pub index: u16,
}

impl Letter {
    pub fn axiom() -> Self {
        Letter { kind: LetterKind::Axiom, index: 0 }
    }

    pub fn a(index: u16) -> Self {
        Letter { kind: LetterKind::A, index }
    }

    pub fn b(index: u16) -> Self {
        Letter { kind: LetterKind::B, index }
    }

    pub fn abar(index: u16) -> Self {
        Letter { kind: LetterKind::ABar, index }
    }

    pub fn bbar(index: u16) -> Self {
        Letter { kind: LetterKind::BBar, index }
    }

    pub fn is_axiom(&self) -> bool {
        self.kind == LetterKind::Axiom
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LetterKind::A => write!(f, "a{}", self.index),
            LetterKind::B => write!(f, "b{}", self.index),
            LetterKind::ABar => write!(f, "abar{}", self.index),
            LetterKind::BBar => write!(f, "bbar{}", self.index),
            LetterKind::Axiom => write!(f, "a0"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_names() {
        assert_eq!(Letter::a(1).to_string(), "a1");
        assert_eq!(Letter::abar(2).to_string(), "abar2");
        assert_eq!(Letter::b(3).to_string(), "b3");
        assert_eq!(Letter::bbar(2).to_string(), "bbar2");
        assert_eq!(Letter::axiom().to_string(), "a0");
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![
            Letter::bbar(2),
            Letter::abar(1),
            Letter::b(1),
            Letter::a(2),
            Letter::a(1),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![Letter::a(1), Letter::a(2), Letter::b(1), Letter::abar(1), Letter::bbar(2)]
        );
    }
}
