use crate::error::Error;
use std::fmt;

/// Which rule family the parameters `{p,q}` fall into.
///
/// The substitution rules split by the parity of the vertex valence `q` and
/// by whether the tile is a triangle (`p = 3`). Within each branch the rules
/// are uniform in `k`, where `k = q/2` for even `q` and `k = (q-1)/2` for
/// odd `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Even `q >= 6`, `p >= 4`.
    EvenGeneral,
    /// `q = 4`, `p = 4`: the square grid.
    Square,
    /// Even `q >= 8`, `p = 3`.
    EvenTriangle,
    /// `q = 6`, `p = 3`: the Euclidean triangle tiling.
    HexTriangle,
    /// Odd `q >= 5`, `p >= 4`.
    OddGeneral,
    /// Odd `q >= 7`, `p = 3`.
    OddTriangle,
    /// `q = 3`, `p >= 6`: tiles meet three at a corner.
    ThreeValent,
}

/// Sign of the curvature of the plane the tiling lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Curvature {
    Euclidean,
    Hyperbolic,
}

/// Validated parameters of a regular tiling `{p,q}`: `p`-gons, `q` around
/// each vertex.
///
/// Construction rejects parameter pairs with `(p-2)(q-2) < 4` (no plane
/// tiling) and the pair family `q = 4`, `p >= 5`, for which no substitution
/// rule set is defined here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TilingParams {
    p: u32,
    q: u32,
    family: Family,
    curvature: Curvature,
}

impl TilingParams {
    pub fn new(p: u32, q: u32) -> Result<Self, Error> {
        if p < 3 || q < 3 || (p - 2) * (q - 2) < 4 {
            return Err(Error::NotATiling { p, q });
        }
        let family = if q % 2 == 0 {
            match (q, p) {
                (4, 4) => Family::Square,
                (4, _) => return Err(Error::UnsupportedFamily { p, q }),
                (6, 3) => Family::HexTriangle,
                (_, 3) => Family::EvenTriangle,
                _ => Family::EvenGeneral,
            }
        } else {
            match (q, p) {
                (3, _) => Family::ThreeValent,
                (_, 3) => Family::OddTriangle,
                _ => Family::OddGeneral,
            }
        };
        let curvature = if (p - 2) * (q - 2) == 4 {
            Curvature::Euclidean
        } else {
            Curvature::Hyperbolic
        };
        Ok(TilingParams { p, q, family, curvature })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn curvature(&self) -> Curvature {
        self.curvature
    }

    /// The index bound `k` the rule tables are written in terms of:
    /// `q/2` for even `q`, `(q-1)/2` for odd `q`. For `q = 3` this is 1.
    pub fn k(&self) -> u32 {
        self.q / 2
    }

    /// True if the letters carry `b`/`b-bar` series in addition to the
    /// `a`/`a-bar` series (odd `q >= 5`, plus the two-letter `q = 3` system
    /// which uses one letter of each series).
    pub fn has_b_series(&self) -> bool {
        self.q % 2 == 1
    }
}

impl fmt::Display for TilingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_spherical_and_degenerate() {
        for (p, q) in [(3, 3), (3, 4), (4, 3), (3, 5), (5, 3), (2, 7), (7, 2), (1, 1)] {
            assert_eq!(TilingParams::new(p, q), Err(Error::NotATiling { p, q }));
        }
    }

    #[test]
    fn rejects_q4_p_at_least_5() {
        for p in [5, 6, 7, 12] {
            assert_eq!(TilingParams::new(p, 4), Err(Error::UnsupportedFamily { p, q: 4 }));
        }
    }

    #[test]
    fn classifies_families() {
        let f = |p, q| TilingParams::new(p, q).unwrap().family();
        assert_eq!(f(4, 4), Family::Square);
        assert_eq!(f(4, 6), Family::EvenGeneral);
        assert_eq!(f(5, 6), Family::EvenGeneral);
        assert_eq!(f(4, 8), Family::EvenGeneral);
        assert_eq!(f(3, 6), Family::HexTriangle);
        assert_eq!(f(3, 8), Family::EvenTriangle);
        assert_eq!(f(3, 10), Family::EvenTriangle);
        assert_eq!(f(4, 5), Family::OddGeneral);
        assert_eq!(f(4, 7), Family::OddGeneral);
        assert_eq!(f(3, 7), Family::OddTriangle);
        assert_eq!(f(3, 9), Family::OddTriangle);
        assert_eq!(f(6, 3), Family::ThreeValent);
        assert_eq!(f(7, 3), Family::ThreeValent);
    }

    #[test]
    fn classifies_curvature() {
        let c = |p, q| TilingParams::new(p, q).unwrap().curvature();
        assert_eq!(c(4, 4), Curvature::Euclidean);
        assert_eq!(c(3, 6), Curvature::Euclidean);
        assert_eq!(c(6, 3), Curvature::Euclidean);
        assert_eq!(c(4, 5), Curvature::Hyperbolic);
        assert_eq!(c(7, 3), Curvature::Hyperbolic);
        assert_eq!(c(5, 5), Curvature::Hyperbolic);
    }

    #[test]
    fn k_matches_parity() {
        assert_eq!(TilingParams::new(4, 6).unwrap().k(), 3);
        assert_eq!(TilingParams::new(4, 7).unwrap().k(), 3);
        assert_eq!(TilingParams::new(4, 5).unwrap().k(), 2);
        assert_eq!(TilingParams::new(7, 3).unwrap().k(), 1);
    }
}
