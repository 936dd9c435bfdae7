use crate::error::Error;
use crate::letter::{Letter, LetterKind};
use crate::params::{Family, TilingParams};
use num::BigUint;
use std::collections::BTreeMap;

/// Default cap on materialized word length (letters). Count iteration is
/// exact and uncapped; words are a debugging and inspection aid.
pub const DEFAULT_WORD_CAP: usize = 10_000_000;

/// One representative `(p, q)` per family shape exercised by the test and
/// verification suites, covering every supported family at small size.
pub const SUPPORTED_PARAMS: &[(u32, u32)] = &[
    (4, 4),
    (4, 6),
    (5, 6),
    (4, 8),
    (3, 6),
    (3, 8),
    (3, 10),
    (4, 5),
    (5, 5),
    (4, 7),
    (3, 7),
    (3, 9),
    (6, 3),
    (7, 3),
    (8, 3),
];

/// The substitution attached to a tiling `{p,q}`: a rule per letter, with
/// the axiom `a0` mapping to `x^p` for the family's seed letter `x`.
///
/// Rules encode unique tree parents: where two tiles of generation `n`
/// both border a tile of generation `n+1`, exactly one rule image lists
/// the child. The geometric successor lists (which keep both) live in
/// [`crate::geom::types`].
#[derive(Debug, Clone)]
pub struct Substitution {
    params: TilingParams,
    alphabet: Vec<Letter>,
    index: BTreeMap<Letter, usize>,
    rules: Vec<Vec<Letter>>,
    rule_counts: Vec<Vec<u64>>,
    axiom_image: Vec<Letter>,
}

fn rep(word: &mut Vec<Letter>, l: Letter, n: u32) {
    for _ in 0..n {
        word.push(l);
    }
}

impl Substitution {
    pub fn new(params: TilingParams) -> Self {
        let alphabet = build_alphabet(params);
        let index: BTreeMap<Letter, usize> =
            alphabet.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let rules: Vec<Vec<Letter>> =
            alphabet.iter().map(|&l| build_rule(params, l)).collect();
        let axiom_image = build_axiom_image(params);
        for word in rules.iter().chain(std::iter::once(&axiom_image)) {
            for l in word {
                debug_assert!(index.contains_key(l), "rule image letter {l} not in alphabet");
            }
        }
        let rule_counts = rules
            .iter()
            .map(|word| {
                let mut counts = vec![0u64; alphabet.len()];
                for l in word {
                    counts[index[l]] += 1;
                }
                counts
            })
            .collect();
        Substitution { params, alphabet, index, rules, rule_counts, axiom_image }
    }

    pub fn for_params(p: u32, q: u32) -> Result<Self, Error> {
        TilingParams::new(p, q).map(Self::new)
    }

    pub fn params(&self) -> TilingParams {
        self.params
    }

    /// Working alphabet in canonical matrix order (axiom excluded).
    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn alphabet_index(&self, l: Letter) -> Option<usize> {
        self.index.get(&l).copied()
    }

    /// The single letter `x` with `sigma(a0) = x^p`.
    pub fn seed_letter(&self) -> Letter {
        self.axiom_image[0]
    }

    /// Rule image of a letter (the axiom included).
    pub fn image(&self, l: Letter) -> &[Letter] {
        if l.is_axiom() {
            &self.axiom_image
        } else {
            let i = self.index.get(&l).unwrap_or_else(|| panic!("letter {l} not in alphabet"));
            &self.rules[*i]
        }
    }

    /// Display name of a letter within this system: `q = 3` uses the bare
    /// two-letter alphabet `a`, `b`; all other families carry subscripts.
    pub fn letter_name(&self, l: Letter) -> String {
        if self.params.q() == 3 && !l.is_axiom() {
            match l.kind {
                LetterKind::A => "a".to_string(),
                LetterKind::B => "b".to_string(),
                _ => l.to_string(),
            }
        } else {
            l.to_string()
        }
    }

    /// One application of the substitution to a word.
    pub fn apply(&self, word: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(word.iter().map(|&l| self.image(l).len()).sum());
        for &l in word {
            out.extend_from_slice(self.image(l));
        }
        out
    }

    /// The word `sigma^n(a0)`, failing if its length would exceed `cap`.
    pub fn generation_word(&self, n: u32, cap: usize) -> Result<Vec<Letter>, Error> {
        if n == 0 {
            return Ok(vec![Letter::axiom()]);
        }
        if self.axiom_image.len() > cap {
            return Err(Error::WordCapExceeded { n: 1, cap });
        }
        let mut word = self.axiom_image.clone();
        for step in 1..n {
            let next_len: usize = word.iter().map(|&l| self.image(l).len()).sum();
            if next_len > cap {
                return Err(Error::WordCapExceeded { n: step + 1, cap });
            }
            word = self.apply(&word);
        }
        Ok(word)
    }

    /// Letter counts of a word, indexed by alphabet position.
    pub fn word_census(&self, word: &[Letter]) -> Vec<BigUint> {
        let mut counts = vec![BigUint::ZERO; self.alphabet.len()];
        for &l in word {
            counts[self.index[&l]] += 1u32;
        }
        counts
    }

    /// Push a count vector through the rules once.
    pub fn step_counts(&self, counts: &[BigUint]) -> Vec<BigUint> {
        let mut next = vec![BigUint::ZERO; self.alphabet.len()];
        for (i, c) in counts.iter().enumerate() {
            if c == &BigUint::ZERO {
                continue;
            }
            for (j, &m) in self.rule_counts[i].iter().enumerate() {
                if m > 0 {
                    next[j] += c * m;
                }
            }
        }
        next
    }

    /// Exact letter counts of `sigma^m(x)` for `m = 0..=m_max`, seeded at
    /// the single letter `x` of the axiom rule. Totals are the tilde counts.
    pub fn seeded_count_vectors(&self, m_max: u32) -> Vec<Vec<BigUint>> {
        let mut out = Vec::with_capacity(m_max as usize + 1);
        let mut counts = vec![BigUint::ZERO; self.alphabet.len()];
        counts[self.index[&self.seed_letter()]] = BigUint::from(1u32);
        out.push(counts);
        for _ in 0..m_max {
            let next = self.step_counts(out.last().unwrap());
            out.push(next);
        }
        out
    }

    /// The sequence `utilde_0..utilde_{m_max}` (totals of `sigma^m(x)`).
    pub fn utilde_sequence(&self, m_max: u32) -> Vec<BigUint> {
        self.seeded_count_vectors(m_max)
            .iter()
            .map(|v| v.iter().sum())
            .collect()
    }

    /// The sequence `u_0..u_{n_max}` of generation sizes: `u_0 = 1` and
    /// `u_{n+1} = p * utilde_n`.
    pub fn u_sequence(&self, n_max: u32) -> Vec<BigUint> {
        let mut out = vec![BigUint::from(1u32)];
        if n_max == 0 {
            return out;
        }
        let p = BigUint::from(self.params.p());
        for utilde in self.utilde_sequence(n_max - 1) {
            out.push(&p * utilde);
        }
        out
    }

    /// Letter census of generation `n`: the multiset of letters of
    /// `sigma^n(a0)`, computed through count vectors (no word needed).
    pub fn census(&self, n: u32) -> BTreeMap<Letter, BigUint> {
        if n == 0 {
            return BTreeMap::from([(Letter::axiom(), BigUint::from(1u32))]);
        }
        let seeded = self.seeded_count_vectors(n - 1);
        let p = BigUint::from(self.params.p());
        let mut out = BTreeMap::new();
        for (i, c) in seeded[n as usize - 1].iter().enumerate() {
            if c != &BigUint::ZERO {
                out.insert(self.alphabet[i], &p * c);
            }
        }
        out
    }
}

fn build_alphabet(params: TilingParams) -> Vec<Letter> {
    let k = params.k() as u16;
    let mut out = Vec::new();
    match params.family() {
        Family::EvenGeneral | Family::Square => {
            (1..=k).for_each(|i| out.push(Letter::a(i)));
            (2..=k.saturating_sub(1)).for_each(|j| out.push(Letter::abar(j)));
        }
        Family::EvenTriangle | Family::HexTriangle => {
            (1..=k + 1).for_each(|i| out.push(Letter::a(i)));
            (2..=k - 1).for_each(|j| out.push(Letter::abar(j)));
        }
        Family::OddGeneral => {
            (1..=k).for_each(|i| out.push(Letter::a(i)));
            (1..=k).for_each(|i| out.push(Letter::b(i)));
            (1..=k - 1).for_each(|j| out.push(Letter::abar(j)));
            (2..=k).for_each(|j| out.push(Letter::bbar(j)));
        }
        Family::OddTriangle => {
            (1..=k + 1).for_each(|i| out.push(Letter::a(i)));
            (1..=k).for_each(|i| out.push(Letter::b(i)));
            (1..=k - 1).for_each(|j| out.push(Letter::abar(j)));
            (2..=k).for_each(|j| out.push(Letter::bbar(j)));
        }
        Family::ThreeValent => {
            out.push(Letter::a(1));
            out.push(Letter::b(1));
        }
    }
    out
}

fn build_axiom_image(params: TilingParams) -> Vec<Letter> {
    let seed = match params.family() {
        Family::EvenGeneral | Family::Square | Family::EvenTriangle | Family::HexTriangle => {
            Letter::a(1)
        }
        Family::OddGeneral | Family::OddTriangle => Letter::b(1),
        Family::ThreeValent => Letter::a(1),
    };
    vec![seed; params.p() as usize]
}

fn build_rule(params: TilingParams, l: Letter) -> Vec<Letter> {
    let p = params.p();
    let k = params.k() as u16;
    let mut w = Vec::new();
    match params.family() {
        // q = 2k >= 6, p >= 4.
        Family::EvenGeneral => match (l.kind, l.index) {
            (LetterKind::A, i) if i <= k - 2 => {
                w.push(Letter::abar(2));
                rep(&mut w, Letter::a(1), p - 3);
                w.push(Letter::a(i + 1));
            }
            (LetterKind::A, i) if i == k - 1 => {
                // Shared child of type a_k omitted: it belongs to abar_{k-1}.
                w.push(Letter::abar(2));
                rep(&mut w, Letter::a(1), p - 3);
            }
            (LetterKind::A, _) => {
                w.push(Letter::abar(2));
                rep(&mut w, Letter::a(1), p - 4);
                w.push(Letter::a(2));
            }
            (LetterKind::ABar, j) if j <= k - 2 => {
                w.push(Letter::abar(j + 1));
                rep(&mut w, Letter::a(1), p - 3);
                w.push(Letter::a(2));
            }
            (LetterKind::ABar, _) => {
                w.push(Letter::a(k));
                rep(&mut w, Letter::a(1), p - 3);
                w.push(Letter::a(2));
            }
            _ => unreachable!("letter {l} not in EvenGeneral alphabet"),
        },
        // {4,4}.
        Family::Square => match (l.kind, l.index) {
            (LetterKind::A, 1) => w = vec![Letter::a(2), Letter::a(1)],
            (LetterKind::A, 2) => w = vec![Letter::a(2)],
            _ => unreachable!("letter {l} not in Square alphabet"),
        },
        // q = 2k >= 6, p = 3 (k = 3 is the Euclidean triangle tiling).
        Family::EvenTriangle | Family::HexTriangle => match (l.kind, l.index) {
            (LetterKind::A, i) if i <= k - 2 => {
                w = vec![Letter::abar(2), Letter::a(i + 1)];
            }
            (LetterKind::A, i) if i == k - 1 => {
                // Shared child of type a_k omitted: it belongs to abar_{k-1}.
                w = vec![Letter::abar(2)];
            }
            (LetterKind::A, i) if i == k => {
                w = vec![Letter::a(k + 1)];
            }
            (LetterKind::A, _) => {
                // a_{k+1}; at k = 3 there is no abar_3 and the image is a_3 alone.
                if k >= 4 {
                    w = vec![Letter::abar(3), Letter::a(3)];
                } else {
                    w = vec![Letter::a(3)];
                }
            }
            (LetterKind::ABar, j) if j <= k - 2 => {
                w = vec![Letter::abar(j + 1), Letter::a(2)];
            }
            (LetterKind::ABar, _) => {
                w = vec![Letter::a(k), Letter::a(2)];
            }
            _ => unreachable!("letter {l} not in EvenTriangle alphabet"),
        },
        // q = 2k+1 >= 5, p >= 4.
        Family::OddGeneral => match (l.kind, l.index) {
            (LetterKind::A, i) if i <= k - 1 => {
                w.push(Letter::bbar(2));
                rep(&mut w, Letter::b(1), p - 3);
                w.push(Letter::a(i + 1));
            }
            (LetterKind::A, _) => {
                w.push(Letter::bbar(2));
                rep(&mut w, Letter::b(1), p - 4);
                w.push(Letter::b(2));
            }
            (LetterKind::B, i) if i <= k - 1 => {
                w.push(Letter::bbar(2));
                rep(&mut w, Letter::b(1), p - 3);
                w.push(Letter::b(i + 1));
            }
            (LetterKind::B, _) => {
                w.push(Letter::bbar(2));
                rep(&mut w, Letter::b(1), p - 4);
                w.push(Letter::a(1));
            }
            (LetterKind::ABar, j) if j <= k - 2 => {
                w.push(Letter::abar(j + 1));
                rep(&mut w, Letter::b(1), p - 3);
                w.push(Letter::b(2));
            }
            (LetterKind::ABar, _) => {
                // Shared child of type a_k omitted: it belongs to a_{k-1}.
                rep(&mut w, Letter::b(1), p - 3);
                w.push(Letter::b(2));
            }
            (LetterKind::BBar, j) if j <= k - 1 => {
                w.push(Letter::bbar(j + 1));
                rep(&mut w, Letter::b(1), p - 3);
                w.push(Letter::b(2));
            }
            (LetterKind::BBar, _) => {
                w.push(Letter::abar(1));
                rep(&mut w, Letter::b(1), p - 4);
                w.push(Letter::b(2));
            }
            _ => unreachable!("letter {l} not in OddGeneral alphabet"),
        },
        // q = 2k+1 >= 7, p = 3.
        Family::OddTriangle => match (l.kind, l.index) {
            (LetterKind::A, 1) => w = vec![Letter::bbar(3), Letter::a(2)],
            (LetterKind::A, i) if i <= k - 1 => {
                w = vec![Letter::bbar(2), Letter::a(i + 1)];
            }
            (LetterKind::A, i) if i == k => {
                w = vec![Letter::a(k + 1)];
            }
            (LetterKind::A, _) => {
                w = vec![Letter::bbar(3), Letter::b(3)];
            }
            (LetterKind::B, i) if i <= k - 1 => {
                w = vec![Letter::bbar(2), Letter::b(i + 1)];
            }
            (LetterKind::B, _) => {
                w = vec![Letter::a(1)];
            }
            (LetterKind::ABar, 1) if k >= 3 => {
                w = vec![Letter::abar(2), Letter::b(3)];
            }
            (LetterKind::ABar, j) if j <= k - 2 => {
                w = vec![Letter::abar(j + 1), Letter::b(2)];
            }
            (LetterKind::ABar, _) => {
                // Shared child of type a_k omitted: it belongs to a_{k-1}.
                w = vec![Letter::b(2)];
            }
            (LetterKind::BBar, j) if j <= k - 1 => {
                w = vec![Letter::bbar(j + 1), Letter::b(2)];
            }
            (LetterKind::BBar, _) => {
                w = vec![Letter::abar(1)];
            }
            _ => unreachable!("letter {l} not in OddTriangle alphabet"),
        },
        // q = 3, p >= 6.
        Family::ThreeValent => match l.kind {
            LetterKind::A => {
                rep(&mut w, Letter::a(1), p - 5);
                w.push(Letter::b(1));
            }
            LetterKind::B => {
                rep(&mut w, Letter::a(1), p - 6);
                w.push(Letter::b(1));
            }
            _ => unreachable!("letter {l} not in ThreeValent alphabet"),
        },
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn img(s: &Substitution, l: Letter) -> String {
        s.image(l).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }

    fn u_small(s: &Substitution, n_max: u32) -> Vec<u64> {
        s.u_sequence(n_max).iter().map(|x| u64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn square_rules_and_counts() {
        let s = Substitution::for_params(4, 4).unwrap();
        assert_eq!(img(&s, Letter::axiom()), "a1 a1 a1 a1");
        assert_eq!(img(&s, Letter::a(1)), "a2 a1");
        assert_eq!(img(&s, Letter::a(2)), "a2");
        assert_eq!(u_small(&s, 4), vec![1, 4, 8, 12, 16]);
    }

    #[test]
    fn three_valent_rules_and_counts() {
        let s = Substitution::for_params(7, 3).unwrap();
        assert_eq!(img(&s, Letter::axiom()), "a1 a1 a1 a1 a1 a1 a1");
        assert_eq!(img(&s, Letter::a(1)), "a1 a1 b1");
        assert_eq!(img(&s, Letter::b(1)), "a1 b1");
        assert_eq!(u_small(&s, 5), vec![1, 7, 21, 56, 147, 385]);

        let hex = Substitution::for_params(6, 3).unwrap();
        assert_eq!(img(&hex, Letter::a(1)), "a1 b1");
        assert_eq!(img(&hex, Letter::b(1)), "b1");
        assert_eq!(u_small(&hex, 4), vec![1, 6, 12, 18, 24]);
    }

    #[test]
    fn odd_general_rules_and_counts() {
        let s = Substitution::for_params(4, 5).unwrap();
        assert_eq!(
            s.alphabet().iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            vec!["a1", "a2", "b1", "b2", "abar1", "bbar2"]
        );
        assert_eq!(img(&s, Letter::axiom()), "b1 b1 b1 b1");
        assert_eq!(img(&s, Letter::a(1)), "bbar2 b1 a2");
        assert_eq!(img(&s, Letter::a(2)), "bbar2 b2");
        assert_eq!(img(&s, Letter::b(1)), "bbar2 b1 b2");
        assert_eq!(img(&s, Letter::b(2)), "bbar2 a1");
        assert_eq!(img(&s, Letter::abar(1)), "b1 b2");
        assert_eq!(img(&s, Letter::bbar(2)), "abar1 b2");
        assert_eq!(u_small(&s, 3), vec![1, 4, 12, 28]);
    }

    #[test]
    fn even_general_rules_and_counts() {
        let s = Substitution::for_params(4, 6).unwrap();
        assert_eq!(img(&s, Letter::a(1)), "abar2 a1 a2");
        assert_eq!(img(&s, Letter::a(2)), "abar2 a1");
        assert_eq!(img(&s, Letter::a(3)), "abar2 a2");
        assert_eq!(img(&s, Letter::abar(2)), "a3 a1 a2");
        assert_eq!(u_small(&s, 3), vec![1, 4, 12, 32]);
    }

    #[test]
    fn hex_triangle_rules_and_counts() {
        let s = Substitution::for_params(3, 6).unwrap();
        assert_eq!(img(&s, Letter::a(1)), "abar2 a2");
        assert_eq!(img(&s, Letter::a(2)), "abar2");
        assert_eq!(img(&s, Letter::a(3)), "a4");
        assert_eq!(img(&s, Letter::a(4)), "a3");
        assert_eq!(img(&s, Letter::abar(2)), "a3 a2");
        assert_eq!(u_small(&s, 4), vec![1, 3, 6, 9, 12]);
        let census: Vec<(String, u64)> = s
            .census(3)
            .iter()
            .map(|(l, c)| (l.to_string(), u64::try_from(c).unwrap()))
            .collect();
        assert_eq!(
            census,
            vec![("a2".to_string(), 3), ("a3".to_string(), 3), ("abar2".to_string(), 3)]
        );
    }

    #[test]
    fn alphabet_sizes_per_family() {
        let n = |p, q| Substitution::for_params(p, q).unwrap().alphabet().len() as u32;
        // Even q: 2k-2 in general, 2k-1 for triangles.
        assert_eq!(n(4, 6), 4);
        assert_eq!(n(5, 8), 6);
        assert_eq!(n(4, 4), 2);
        assert_eq!(n(3, 8), 7);
        assert_eq!(n(3, 10), 9);
        assert_eq!(n(3, 6), 5);
        // Odd q: 4k-2 in general, 4k-1 for triangles; two letters for q=3.
        assert_eq!(n(4, 5), 6);
        assert_eq!(n(4, 7), 10);
        assert_eq!(n(3, 7), 11);
        assert_eq!(n(3, 9), 15);
        assert_eq!(n(7, 3), 2);
    }

    #[test]
    fn even_triangle_rules_k4() {
        let s = Substitution::for_params(3, 8).unwrap();
        assert_eq!(img(&s, Letter::a(1)), "abar2 a2");
        assert_eq!(img(&s, Letter::a(2)), "abar2 a3");
        assert_eq!(img(&s, Letter::a(3)), "abar2");
        assert_eq!(img(&s, Letter::a(4)), "a5");
        assert_eq!(img(&s, Letter::a(5)), "abar3 a3");
        assert_eq!(img(&s, Letter::abar(2)), "abar3 a2");
        assert_eq!(img(&s, Letter::abar(3)), "a4 a2");
    }

    #[test]
    fn odd_triangle_rules_k3() {
        let s = Substitution::for_params(3, 7).unwrap();
        assert_eq!(img(&s, Letter::a(1)), "bbar3 a2");
        assert_eq!(img(&s, Letter::a(2)), "bbar2 a3");
        assert_eq!(img(&s, Letter::a(3)), "a4");
        assert_eq!(img(&s, Letter::a(4)), "bbar3 b3");
        assert_eq!(img(&s, Letter::b(1)), "bbar2 b2");
        assert_eq!(img(&s, Letter::b(2)), "bbar2 b3");
        assert_eq!(img(&s, Letter::b(3)), "a1");
        assert_eq!(img(&s, Letter::abar(1)), "abar2 b3");
        assert_eq!(img(&s, Letter::abar(2)), "b2");
        assert_eq!(img(&s, Letter::bbar(2)), "bbar3 b2");
        assert_eq!(img(&s, Letter::bbar(3)), "abar1");
    }

    #[test]
    fn word_cap_enforced() {
        let s = Substitution::for_params(4, 5).unwrap();
        assert!(s.generation_word(6, 1_000_000).is_ok());
        assert!(matches!(
            s.generation_word(20, 1000),
            Err(Error::WordCapExceeded { cap: 1000, .. })
        ));
    }

    fn supported_params() -> Vec<(u32, u32)> {
        SUPPORTED_PARAMS.to_vec()
    }

    #[test]
    fn axiom_isolation() {
        for (p, q) in supported_params() {
            let s = Substitution::for_params(p, q).unwrap();
            for &l in s.alphabet() {
                assert!(!s.image(l).iter().any(|x| x.is_axiom()));
            }
            assert!(!s.image(Letter::axiom()).iter().any(|x| x.is_axiom()));
        }
    }

    #[test]
    fn alphabet_saturation() {
        use crate::params::Family;
        for (p, q) in supported_params() {
            let s = Substitution::for_params(p, q).unwrap();
            let steps = 2 * s.params().k() + 3;
            let seeded = s.seeded_count_vectors(steps);
            let support: Vec<Letter> = seeded
                .last()
                .unwrap()
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != BigUint::ZERO)
                .map(|(i, _)| s.alphabet()[i])
                .collect();
            // The seed-chain openers never reappear in triangle families.
            let transient: Vec<Letter> = match s.params().family() {
                Family::EvenTriangle | Family::HexTriangle => vec![Letter::a(1)],
                Family::OddTriangle => vec![Letter::b(1)],
                _ => vec![],
            };
            let expected: Vec<Letter> = s
                .alphabet()
                .iter()
                .copied()
                .filter(|l| !transient.contains(l))
                .collect();
            assert_eq!(support, expected, "saturation mismatch for p={p} q={q}");
        }
    }

    proptest! {
        #[test]
        fn word_census_matches_count_vectors(
            idx in 0usize..15,
            n in 1u32..5,
        ) {
            let (p, q) = supported_params()[idx];
            let s = Substitution::for_params(p, q).unwrap();
            let word = s.generation_word(n, 10_000_000).unwrap();
            let u = s.u_sequence(n);
            prop_assert_eq!(BigUint::from(word.len()), u[n as usize].clone());
            let census = s.word_census(&word);
            let seeded = s.seeded_count_vectors(n - 1);
            let p_big = BigUint::from(p);
            let expected: Vec<BigUint> =
                seeded[n as usize - 1].iter().map(|c| &p_big * c).collect();
            prop_assert_eq!(census, expected);
        }

        #[test]
        fn apply_concatenates(idx in 0usize..15, n in 1u32..4) {
            let (p, q) = supported_params()[idx];
            let s = Substitution::for_params(p, q).unwrap();
            let word = s.generation_word(n, 10_000_000).unwrap();
            let applied = s.apply(&word);
            let direct = s.generation_word(n + 1, 10_000_000).unwrap();
            prop_assert_eq!(applied, direct);
        }
    }
}
