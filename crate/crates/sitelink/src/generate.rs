//! Seeded synthetic alignments with planted bijective links.
//!
//! Rows are split into blocks. Inside a block, each planted link `(i, j)` sets
//! column `j` to the image of column `i` under a symbol bijection, after which
//! the `j` symbol is redrawn uniformly with probability `noise_rate`. All other
//! cells are independent and uniform.
//!
//! Column indices in a spec are 1-based, like everywhere else in the tool.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sitelink_core::{Alphabet, System};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlantedLink {
    pub i: usize,
    pub j: usize,
    /// Images of the alphabet symbols in alphabet order; identity when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bijection: Option<String>,
    #[serde(default)]
    pub noise_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Block {
    pub row_count: usize,
    #[serde(default)]
    pub planted_links: Vec<PlantedLink>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticSpec {
    pub k: usize,
    pub n: usize,
    pub alphabet: String,
    pub blocks: Vec<Block>,
    pub seed: u64,
}

/// A planted link resolved to 0-based columns and a code permutation.
struct Plant {
    i: usize,
    j: usize,
    map: Vec<u8>,
    noise: f64,
}

impl SyntheticSpec {
    fn invalid(msg: impl Into<String>) -> Error {
        Error::InvalidSpec(msg.into())
    }

    fn resolve(&self) -> Result<(Alphabet, Vec<Vec<Plant>>)> {
        let alphabet = Alphabet::new(self.alphabet.as_bytes())?;
        let a = alphabet.size();
        let rows: usize = self.blocks.iter().map(|b| b.row_count).sum();
        if rows != self.k {
            return Err(Self::invalid(format!(
                "block row counts sum to {rows}, k is {}",
                self.k
            )));
        }
        if self.k == 0 || self.n == 0 {
            return Err(Self::invalid("k and n must be positive"));
        }
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (b, block) in self.blocks.iter().enumerate() {
            let mut plants = Vec::with_capacity(block.planted_links.len());
            let mut targets = vec![false; self.n];
            for pl in &block.planted_links {
                if pl.i == 0 || pl.j == 0 || pl.i > self.n || pl.j > self.n || pl.i == pl.j {
                    return Err(Self::invalid(format!(
                        "block {}: link ({}, {}) needs two distinct columns in 1..={}",
                        b + 1,
                        pl.i,
                        pl.j,
                        self.n
                    )));
                }
                if !(0.0..=1.0).contains(&pl.noise_rate) {
                    return Err(Self::invalid(format!(
                        "block {}: noise rate {} outside [0, 1]",
                        b + 1,
                        pl.noise_rate
                    )));
                }
                let (i, j) = (pl.i - 1, pl.j - 1);
                if std::mem::replace(&mut targets[j], true) {
                    return Err(Self::invalid(format!(
                        "block {}: column {} is the target of two planted links",
                        b + 1,
                        pl.j
                    )));
                }
                let map = match &pl.bijection {
                    None => (0..a as u8).collect(),
                    Some(images) => {
                        let images = images.as_bytes();
                        let map: Option<Vec<u8>> =
                            images.iter().map(|&s| alphabet.code(s)).collect();
                        let mut sorted = map.clone().unwrap_or_default();
                        sorted.sort_unstable();
                        sorted.dedup();
                        match map {
                            Some(m) if m.len() == a && sorted.len() == a => m,
                            _ => {
                                return Err(Self::invalid(format!(
                                    "block {}: {:?} is not a permutation of {:?}",
                                    b + 1,
                                    String::from_utf8_lossy(images),
                                    self.alphabet
                                )))
                            }
                        }
                    }
                };
                plants.push(Plant {
                    i,
                    j,
                    map,
                    noise: pl.noise_rate,
                });
            }
            if let Some(p) = plants.iter().find(|p| targets[p.i]) {
                return Err(Self::invalid(format!(
                    "block {}: column {} is both a planted source and a planted target",
                    b + 1,
                    p.i + 1
                )));
            }
            blocks.push(plants);
        }
        Ok((alphabet, blocks))
    }

    /// A two-block alignment shaped like an inverse-folding experiment:
    /// 100 rows by 99 columns over `ACGU`; the first 85 rows carry 21
    /// complementary column pairs with 5% noise, the last 15 rows carry 21
    /// different pairs. Pair positions are drawn from `seed`.
    pub fn two_block_anomaly(seed: u64) -> Self {
        const N: usize = 99;
        const PAIRS: usize = 21;
        // A<->U, C<->G
        let complement = Some(String::from("UGCA"));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(1);
        let mut draw_pairs = |avoid: &[(usize, usize)]| -> Vec<(usize, usize)> {
            loop {
                let mut cols: Vec<usize> = (1..=N).collect();
                cols.shuffle(&mut rng);
                let pairs: Vec<(usize, usize)> = cols[..2 * PAIRS]
                    .chunks_exact(2)
                    .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
                    .collect();
                if !pairs.iter().any(|p| avoid.contains(p)) {
                    return pairs;
                }
            }
        };
        let major = draw_pairs(&[]);
        let minor = draw_pairs(&major);
        let plant = |pairs: &[(usize, usize)]| -> Vec<PlantedLink> {
            pairs
                .iter()
                .map(|&(i, j)| PlantedLink {
                    i,
                    j,
                    bijection: complement.clone(),
                    noise_rate: 0.05,
                })
                .collect()
        };
        SyntheticSpec {
            k: 100,
            n: N,
            alphabet: String::from("ACGU"),
            blocks: vec![
                Block {
                    row_count: 85,
                    planted_links: plant(&major),
                },
                Block {
                    row_count: 15,
                    planted_links: plant(&minor),
                },
            ],
            seed,
        }
    }
}

/// Draws the system described by `spec`. Identical specs give identical
/// systems.
pub fn generate(spec: &SyntheticSpec) -> Result<System> {
    let (alphabet, blocks) = spec.resolve()?;
    let a = alphabet.size();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut rows = Vec::with_capacity(spec.k);
    for (block, plants) in spec.blocks.iter().zip(&blocks) {
        for _ in 0..block.row_count {
            let mut row: Vec<u8> = (0..spec.n).map(|_| rng.gen_range(0..a) as u8).collect();
            for p in plants {
                row[p.j] = p.map[row[p.i] as usize];
                let coin: f64 = rng.gen();
                if coin < p.noise {
                    row[p.j] = rng.gen_range(0..a) as u8;
                }
            }
            rows.push(row);
        }
    }
    Ok(System::from_rows(alphabet, &rows)?)
}
