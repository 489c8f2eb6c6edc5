//! Minimal vertex covers (minimal transversals), minimal primes of edge
//! ideals, and the persistent-minimal-prime barcode of a filtration.
//!
//! A cover `C` corresponds to the monomial prime `p_C = (x_i : i ∈ C)`;
//! the minimal primes of `I(H)` are exactly the `p_C` over minimal covers,
//! and `I(H) = ∩ p_C`. Along a filtration, `𝒫^t` is the set of minimal
//! covers at level `t`, a bar records the half-open interval
//! `[b(C), d(C))` on which `C` stays minimal, and
//! `Π^{t,t'} = |𝒫^t ∩ 𝒫^{t'}|`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::complexes::{Hypergraph, HypergraphFiltration};
use crate::error::{Error, Result};
use crate::transversal::{berge_extend, minimal_transversals};

/// Default output cap per level.
pub const DEFAULT_COVER_BUDGET: u64 = 1_000_000;

/// Exactly the inclusion-minimal transversals, in bitset order.
///
/// The edgeless hypergraph has the single minimal cover `∅`.
pub fn minimal_vertex_covers(h: &Hypergraph, budget: u64) -> Result<Vec<VertexSet>> {
    minimal_transversals(h.n(), h.edges(), budget)
}

/// The minimal primes `p_C` of an edge ideal, together with the intersection
/// decomposition `I(H) = ∩_C p_C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeDecomposition {
    n: usize,
    primes: Vec<VertexSet>,
}

impl PrimeDecomposition {
    pub fn primes(&self) -> &[VertexSet] {
        &self.primes
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl fmt::Display for PrimeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, prime) in self.primes.iter().enumerate() {
            if idx > 0 {
                write!(f, " ∩ ")?;
            }
            if prime.is_empty() {
                // the edgeless case: the unique minimal cover ∅ gives the zero ideal
                write!(f, "(0)")?;
            } else {
                write!(f, "(")?;
                for (k, v) in prime.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "x{v}")?;
                }
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

pub fn minimal_primes(h: &Hypergraph, budget: u64) -> Result<PrimeDecomposition> {
    let covers = minimal_vertex_covers(h, budget)?;
    Ok(PrimeDecomposition {
        n: h.n(),
        primes: covers,
    })
}

/// One bar of the cover barcode: the cover is minimal exactly on
/// `[birth, death)`, with `death = None` encoding `+∞`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverBar {
    pub cover: VertexSet,
    pub birth: f64,
    pub death: Option<f64>,
}

impl CoverBar {
    pub fn size(&self) -> usize {
        self.cover.card()
    }
}

/// The persistent-minimal-prime barcode of a filtration.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverBarcode {
    grid: Vec<f64>,
    bars: Vec<CoverBar>,
    level_covers: Vec<Vec<VertexSet>>,
}

impl CoverBarcode {
    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn bars(&self) -> &[CoverBar] {
        &self.bars
    }

    /// The minimal covers `𝒫^t` at a grid index, in bitset order.
    pub fn covers_at(&self, level: usize) -> &[VertexSet] {
        &self.level_covers[level]
    }

    fn grid_index(&self, t: f64) -> Result<usize> {
        self.grid
            .iter()
            .position(|&g| g == t)
            .ok_or_else(|| Error::precondition(format!("{t} is not a grid value")))
    }

    /// `Π^{t,t'} = |𝒫^t ∩ 𝒫^{t'}|` for grid values `t ≤ t'`.
    pub fn pi(&self, t: f64, t_prime: f64) -> Result<u64> {
        let (a, b) = (self.grid_index(t)?, self.grid_index(t_prime)?);
        if a > b {
            return Err(Error::precondition(format!(
                "pi requires t <= t', got {t} > {t_prime}"
            )));
        }
        Ok(self.pi_by_index(a, b, None))
    }

    /// `Π^{t,t'}_k`: only covers of cardinality `k`.
    pub fn pi_sized(&self, t: f64, t_prime: f64, k: usize) -> Result<u64> {
        let (a, b) = (self.grid_index(t)?, self.grid_index(t_prime)?);
        if a > b {
            return Err(Error::precondition(format!(
                "pi requires t <= t', got {t} > {t_prime}"
            )));
        }
        Ok(self.pi_by_index(a, b, Some(k)))
    }

    /// Intersection count on sorted level sets, optionally size-filtered.
    pub fn pi_by_index(&self, a: usize, b: usize, size: Option<usize>) -> u64 {
        let (xs, ys) = (&self.level_covers[a], &self.level_covers[b]);
        let mut count = 0u64;
        let (mut i, mut j) = (0, 0);
        while i < xs.len() && j < ys.len() {
            match xs[i].cmp(&ys[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if size.map_or(true, |k| xs[i].card() == k) {
                        count += 1;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// The full `Π` matrix over grid-index pairs `a ≤ b`.
    pub fn pi_matrix(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for a in 0..self.grid.len() {
            for b in a..self.grid.len() {
                out.push((a, b, self.pi_by_index(a, b, None)));
            }
        }
        out
    }
}

/// Computes `𝒫^t` at every level and assembles birth/death bars.
///
/// Graph levels are enumerated independently (maximal independent sets via
/// the complement); general hypergraph levels reuse the previous level's
/// transversals as Berge seeds, feeding only the newly appearing edges.
pub fn cover_barcode(filtration: &HypergraphFiltration, budget: u64) -> Result<CoverBarcode> {
    let level_covers: Vec<Vec<VertexSet>> = if filtration.is_graph_filtration() {
        filtration
            .levels()
            .par_iter()
            .map(|h| minimal_vertex_covers(h, budget))
            .collect::<Result<_>>()?
    } else {
        let mut out = Vec::with_capacity(filtration.len());
        let mut transversals = vec![VertexSet::EMPTY];
        let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
        for level in filtration.levels() {
            let new_edges: Vec<VertexSet> = level
                .edges()
                .iter()
                .copied()
                .filter(|e| !seen.contains(e))
                .collect();
            seen.extend(new_edges.iter().copied());
            transversals = berge_extend(transversals, &new_edges, budget)?;
            out.push(transversals.clone());
        }
        out
    };

    let mut ever: BTreeSet<VertexSet> = BTreeSet::new();
    for covers in &level_covers {
        ever.extend(covers.iter().copied());
    }

    let grid = filtration.grid().to_vec();
    let mut bars = Vec::with_capacity(ever.len());
    for cover in ever {
        let first = level_covers
            .iter()
            .position(|lvl| lvl.binary_search(&cover).is_ok())
            .expect("cover taken from the union of level sets");
        let death = (first + 1..grid.len())
            .find(|&s| level_covers[s].binary_search(&cover).is_err())
            .map(|s| grid[s]);
        bars.push(CoverBar {
            cover,
            birth: grid[first],
            death,
        });
    }

    Ok(CoverBarcode {
        grid,
        bars,
        level_covers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v).unwrap()
    }

    #[test]
    fn paper_cover_lists() {
        let p3 = Hypergraph::path(3).unwrap();
        assert_eq!(
            minimal_vertex_covers(&p3, DEFAULT_COVER_BUDGET).unwrap(),
            vec![vs(&[2]), vs(&[1, 3])]
        );

        let star = Hypergraph::star(4, 1, &[2, 3, 4]).unwrap();
        assert_eq!(
            minimal_vertex_covers(&star, DEFAULT_COVER_BUDGET).unwrap(),
            vec![vs(&[1]), vs(&[2, 3, 4])]
        );

        let k4 = Hypergraph::complete(4).unwrap();
        let covers = minimal_vertex_covers(&k4, DEFAULT_COVER_BUDGET).unwrap();
        assert_eq!(covers.len(), 4);
        assert!(covers.iter().all(|c| c.card() == 3));
    }

    #[test]
    fn prime_decompositions_display() {
        let p3 = Hypergraph::path(3).unwrap();
        let dec = minimal_primes(&p3, DEFAULT_COVER_BUDGET).unwrap();
        assert_eq!(dec.to_string(), "(x2) ∩ (x1,x3)");

        let edgeless = Hypergraph::graph(2, &[]).unwrap();
        let dec = minimal_primes(&edgeless, DEFAULT_COVER_BUDGET).unwrap();
        assert_eq!(dec.to_string(), "(0)");
    }

    #[test]
    fn barcode_two_level_example() {
        // single edge {1,2}, then P3
        let f = HypergraphFiltration::new(
            3,
            vec![0.0, 1.0],
            vec![vec![vs(&[1, 2])], vec![vs(&[1, 2]), vs(&[2, 3])]],
        )
        .unwrap();
        let barcode = cover_barcode(&f, DEFAULT_COVER_BUDGET).unwrap();

        let expect = |cover: VertexSet, birth: f64, death: Option<f64>| {
            assert!(
                barcode
                    .bars()
                    .iter()
                    .any(|b| b.cover == cover && b.birth == birth && b.death == death),
                "missing bar for {cover}"
            );
        };
        expect(vs(&[2]), 0.0, None);
        expect(vs(&[1]), 0.0, Some(1.0));
        expect(vs(&[1, 3]), 1.0, None);

        assert_eq!(barcode.pi(0.0, 1.0).unwrap(), 1);
        assert_eq!(barcode.pi_sized(0.0, 1.0, 1).unwrap(), 1);
        assert_eq!(barcode.pi_sized(0.0, 1.0, 2).unwrap(), 0);
        assert_eq!(barcode.pi(0.0, 0.0).unwrap(), 2);
        assert!(barcode.pi(0.5, 1.0).is_err());
        assert!(barcode.pi(1.0, 0.0).is_err());
    }

    #[test]
    fn barcode_k2_to_k3() {
        let f = HypergraphFiltration::new(
            3,
            vec![0.0, 1.0],
            vec![
                vec![vs(&[1, 2])],
                vec![vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])],
            ],
        )
        .unwrap();
        let barcode = cover_barcode(&f, DEFAULT_COVER_BUDGET).unwrap();
        assert_eq!(barcode.pi(0.0, 1.0).unwrap(), 0);
        assert_eq!(barcode.covers_at(0), &[vs(&[1]), vs(&[2])]);
        assert_eq!(barcode.covers_at(1).len(), 3);
    }

    #[test]
    fn constant_filtration_bars_never_die() {
        let f = HypergraphFiltration::constant(
            Hypergraph::path(3).unwrap(),
            vec![0.0, 1.0, 2.0],
        )
        .unwrap();
        let barcode = cover_barcode(&f, DEFAULT_COVER_BUDGET).unwrap();
        assert!(barcode.bars().iter().all(|b| b.birth == 0.0 && b.death.is_none()));
    }

    #[test]
    fn hypergraph_filtration_berge_path() {
        // a 3-edge first, then a refining pair
        let f = HypergraphFiltration::new(
            3,
            vec![0.0, 1.0],
            vec![vec![vs(&[1, 2, 3])], vec![vs(&[1, 2])]],
        )
        .unwrap();
        let barcode = cover_barcode(&f, DEFAULT_COVER_BUDGET).unwrap();
        assert_eq!(
            barcode.covers_at(0),
            &[vs(&[1]), vs(&[2]), vs(&[3])]
        );
        assert_eq!(barcode.covers_at(1), &[vs(&[1]), vs(&[2])]);
        assert_eq!(barcode.pi(0.0, 1.0).unwrap(), 2);
    }
}
