//! Seeded generators for test corpora.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use knotstate::montesinos::{self, MontesinosNormalForm};
use knotstate::notation::{BraidWord, MontesinosVector};
use knotstate::LinkDiagram;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Random braids with mixed signs.
    Braids,
    /// Positive braids with every exponent at least 3.
    PositiveBraids,
    /// Mirrors of `PositiveBraids`.
    NegativeBraids,
    /// Reduced Montesinos vectors with at least 3 positive and 3 negative tangles.
    Montesinos,
    /// Slopes `±1/k`.
    Pretzels,
    /// All slopes of one sign.
    AlternatingMontesinos,
    /// 2- and 3-cables of small braid closures.
    Cables,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Braids,
        Family::PositiveBraids,
        Family::NegativeBraids,
        Family::Montesinos,
        Family::Pretzels,
        Family::AlternatingMontesinos,
        Family::Cables,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Braids => "braids",
            Family::PositiveBraids => "positive-braids",
            Family::NegativeBraids => "negative-braids",
            Family::Montesinos => "montesinos",
            Family::Pretzels => "pretzels",
            Family::AlternatingMontesinos => "alternating-montesinos",
            Family::Cables => "cables",
        }
    }

    fn salt(self) -> u64 {
        Family::ALL.iter().position(|&f| f == self).unwrap_or(0) as u64 + 1
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| CliError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub family: Family,
    pub label: String,
    pub diagram: LinkDiagram,
    pub braid: Option<BraidWord>,
    pub montesinos: Option<MontesinosNormalForm>,
    /// Base diagram and cable count for `Cables` items.
    pub cable: Option<(LinkDiagram, usize)>,
}

const ATTEMPTS: usize = 100_000;

/// `count` items of `family`, each with at most `max_crossings` crossings.
/// Same seed, same items.
pub fn generate(seed: u64, family: Family, count: usize, max_crossings: usize) -> Result<Vec<CorpusItem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ family.salt());
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > ATTEMPTS {
            return Err(CliError::Usage(format!(
                "could not generate {count} {family} items within {max_crossings} crossings"
            )));
        }
        if let Some(item) = attempt(&mut rng, family, max_crossings) {
            out.push(item);
        }
    }
    Ok(out)
}

fn attempt(rng: &mut ChaCha8Rng, family: Family, max: usize) -> Option<CorpusItem> {
    match family {
        Family::Braids => {
            let b = random_braid(rng, false)?;
            braid_item(family, b, max)
        }
        Family::PositiveBraids => {
            let b = random_braid(rng, true)?;
            braid_item(family, b, max)
        }
        Family::NegativeBraids => {
            let b = random_braid(rng, true)?.inverse_signs();
            braid_item(family, b, max)
        }
        Family::Montesinos => {
            let (r, s) = (rng.gen_range(3..=4), rng.gen_range(3..=4));
            let mut slopes: Vec<BigRational> = (0..r).map(|_| unit_slope(rng, 5)).collect();
            slopes.extend((0..s).map(|_| -unit_slope(rng, 5)));
            slopes.shuffle(rng);
            montesinos_item(family, slopes, max)
        }
        Family::Pretzels => {
            let n = rng.gen_range(3..=6);
            let slopes = (0..n)
                .map(|_| {
                    let k: i64 = rng.gen_range(2..=5);
                    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                    BigRational::new(sign.into(), k.into())
                })
                .collect();
            montesinos_item(family, slopes, max)
        }
        Family::AlternatingMontesinos => {
            let n = rng.gen_range(3..=5);
            let negative = rng.gen_bool(0.5);
            let slopes = (0..n)
                .map(|_| {
                    let q = unit_slope(rng, 5);
                    if negative {
                        -q
                    } else {
                        q
                    }
                })
                .collect();
            montesinos_item(family, slopes, max)
        }
        Family::Cables => {
            let n = rng.gen_range(2..=3);
            let b = random_braid(rng, false)?;
            if n * n * b.crossing_count() > max {
                return None;
            }
            let base = LinkDiagram::braid_closure(&b).ok()?;
            let diagram = base.cable(n).ok()?;
            Some(CorpusItem {
                family,
                label: format!("cable {n} of {b}"),
                diagram,
                braid: Some(b),
                montesinos: None,
                cable: Some((base, n)),
            })
        }
    }
}

/// Braid on 2..=4 strands using every generator; positive words get
/// exponents 3..=5.
fn random_braid(rng: &mut ChaCha8Rng, positive: bool) -> Option<BraidWord> {
    let strands = rng.gen_range(2..=4);
    let syllables = rng.gen_range(strands - 1..=6);
    let letters: Vec<(usize, i64)> = (0..syllables)
        .map(|_| {
            let g = rng.gen_range(1..strands);
            let e = if positive {
                rng.gen_range(3..=5)
            } else {
                let m = rng.gen_range(1..=4);
                if rng.gen_bool(0.5) {
                    m
                } else {
                    -m
                }
            };
            (g, e)
        })
        .collect();
    let b = BraidWord::new(strands, letters);
    let covers = (1..strands).all(|i| b.letters.iter().any(|&(g, _)| g == i));
    (covers && !b.letters.is_empty()).then_some(b)
}

fn braid_item(family: Family, b: BraidWord, max: usize) -> Option<CorpusItem> {
    if b.crossing_count() > max {
        return None;
    }
    let diagram = LinkDiagram::braid_closure(&b).ok()?;
    Some(CorpusItem { family, label: b.to_string(), diagram, braid: Some(b), montesinos: None, cable: None })
}

/// `p/q` in `(0, 1)` with `q <= max_q`, in lowest terms.
fn unit_slope(rng: &mut ChaCha8Rng, max_q: i64) -> BigRational {
    loop {
        let q = rng.gen_range(2..=max_q);
        let p = rng.gen_range(1..q);
        if p.gcd(&q) == 1 {
            return BigRational::new(p.into(), q.into());
        }
    }
}

fn montesinos_item(family: Family, slopes: Vec<BigRational>, max: usize) -> Option<CorpusItem> {
    let n = montesinos::normalize(&MontesinosVector::new(slopes).ok()?);
    if montesinos::expected_crossings(&n) > max {
        return None;
    }
    let diagram = montesinos::build_diagram(&n).ok()?;
    Some(CorpusItem {
        family,
        label: n.to_vector().to_string(),
        diagram,
        braid: None,
        montesinos: Some(n),
        cable: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = generate(7, Family::PositiveBraids, 10, 18).unwrap();
        let b = generate(7, Family::PositiveBraids, 10, 18).unwrap();
        let labels = |v: &[CorpusItem]| v.iter().map(|i| i.label.clone()).collect::<Vec<_>>();
        assert_eq!(labels(&a), labels(&b));
        assert_ne!(labels(&a), labels(&generate(8, Family::PositiveBraids, 10, 18).unwrap()));
    }

    #[test]
    fn montesinos_items_have_three_of_each() {
        for item in generate(3, Family::Montesinos, 20, 30).unwrap() {
            let n = item.montesinos.unwrap();
            assert!(n.positive_count >= 3 && n.negative_count >= 3, "{}", item.label);
        }
    }

    #[test]
    fn caps_respected() {
        for f in Family::ALL {
            for item in generate(1, f, 5, 18).unwrap() {
                assert!(item.diagram.crossing_count() <= 18, "{f} {}", item.label);
            }
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("knots".parse::<Family>().is_err());
    }
}
