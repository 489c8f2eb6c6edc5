//! Minimal transversal (minimal vertex cover) enumeration.
//!
//! Graphs go through maximal-clique enumeration on the complement
//! (Bron–Kerbosch with pivoting); general hypergraphs use Berge's
//! incremental extension, which also supports reusing one filtration
//! level's transversals as seeds for the next.

use crate::bitset::{antichain_minimal, VertexSet};
use crate::error::{Error, Result};

/// Minimal transversals of an inclusion-antichain of edges on `[n]`.
///
/// The empty edge family has the single transversal `∅`; a family containing
/// the empty edge has none (nothing can meet the empty set).
pub(crate) fn minimal_transversals(
    n: usize,
    edges: &[VertexSet],
    cap: u64,
) -> Result<Vec<VertexSet>> {
    if edges.is_empty() {
        return Ok(vec![VertexSet::EMPTY]);
    }
    if edges.iter().all(|e| e.card() == 2) {
        graph_minimal_covers(n, edges, cap)
    } else {
        berge_extend(vec![VertexSet::EMPTY], edges, cap)
    }
}

/// Minimal vertex covers of a graph as complements of maximal independent
/// sets, i.e. maximal cliques of the complement graph.
fn graph_minimal_covers(n: usize, edges: &[VertexSet], cap: u64) -> Result<Vec<VertexSet>> {
    let mut complement_adj = vec![0u64; n];
    for i in 1..=n {
        for j in (i + 1)..=n {
            let e = VertexSet::singleton(i).insert(j);
            if !edges.contains(&e) {
                complement_adj[i - 1] |= 1 << (j - 1);
                complement_adj[j - 1] |= 1 << (i - 1);
            }
        }
    }
    let cliques = maximal_cliques(n, &complement_adj, cap)?;
    let full = VertexSet::full(n);
    let mut covers: Vec<VertexSet> = cliques.into_iter().map(|q| full.difference(q)).collect();
    covers.sort();
    Ok(covers)
}

/// Bron–Kerbosch with pivoting over single-word vertex sets.
pub(crate) fn maximal_cliques(n: usize, adj: &[u64], cap: u64) -> Result<Vec<VertexSet>> {
    fn recurse(
        r: u64,
        mut p: u64,
        mut x: u64,
        adj: &[u64],
        out: &mut Vec<VertexSet>,
        cap: u64,
    ) -> Result<()> {
        if p == 0 && x == 0 {
            if out.len() as u64 >= cap {
                return Err(Error::Budget {
                    needed: out.len() as u64 + 1,
                    budget: cap,
                });
            }
            out.push(VertexSet::from_bits(r));
            return Ok(());
        }
        let mut pivot = 0usize;
        let mut best: i64 = -1;
        let mut pool = p | x;
        while pool != 0 {
            let v = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            let gain = (p & adj[v]).count_ones() as i64;
            if gain > best {
                best = gain;
                pivot = v;
            }
        }
        let mut candidates = p & !adj[pivot];
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            let vbit = 1u64 << v;
            candidates &= candidates - 1;
            recurse(r | vbit, p & adj[v], x & adj[v], adj, out, cap)?;
            p &= !vbit;
            x |= vbit;
        }
        Ok(())
    }

    let mut out = Vec::new();
    let p = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    recurse(0, p, 0, adj, &mut out, cap)?;
    out.sort();
    Ok(out)
}

/// One round of Berge extension per new edge: transversals already meeting
/// the edge survive, the rest branch over the edge's vertices, and the
/// result is re-minimized.
pub(crate) fn berge_extend(
    seed: Vec<VertexSet>,
    new_edges: &[VertexSet],
    cap: u64,
) -> Result<Vec<VertexSet>> {
    let mut transversals = seed;
    for &edge in new_edges {
        let mut candidates = Vec::with_capacity(transversals.len());
        for t in &transversals {
            if t.intersects(edge) {
                candidates.push(*t);
            } else {
                for v in edge.iter() {
                    candidates.push(t.insert(v));
                }
            }
        }
        transversals = antichain_minimal(candidates);
        if transversals.len() as u64 > cap {
            return Err(Error::Budget {
                needed: transversals.len() as u64,
                budget: cap,
            });
        }
    }
    transversals.sort();
    Ok(transversals)
}
