//! Minimal vertex covers, minimal primes, and the persistent-minimal-prime
//! barcode of a filtration.
//!
//! Run with: cargo run --example cover_barcodes

use edge_ideals::covers::{cover_barcode, minimal_primes, minimal_vertex_covers, DEFAULT_COVER_BUDGET};
use edge_ideals::{Hypergraph, HypergraphFiltration, VertexSet};

fn main() -> edge_ideals::Result<()> {
    // P3: covers {2} and {1,3}, hence I(P3) = (x2) ∩ (x1,x3).
    let p3 = Hypergraph::path(3)?;
    let covers = minimal_vertex_covers(&p3, DEFAULT_COVER_BUDGET)?;
    println!("minimal covers of P3: {covers:?}");
    println!("I(P3) = {}\n", minimal_primes(&p3, DEFAULT_COVER_BUDGET)?);

    // Hypergraphs work the same way through minimal transversals.
    let triangle_hyperedge = Hypergraph::new(4, vec![VertexSet::from_vertices(&[1, 2, 3])?])?;
    println!(
        "minimal transversals of one 3-edge: {:?}\n",
        minimal_vertex_covers(&triangle_hyperedge, DEFAULT_COVER_BUDGET)?
    );

    // A three-level filtration: edge, then path, then triangle.
    let filtration = HypergraphFiltration::new(
        3,
        vec![0.0, 1.0, 2.0],
        vec![
            vec![VertexSet::from_vertices(&[1, 2])?],
            vec![
                VertexSet::from_vertices(&[1, 2])?,
                VertexSet::from_vertices(&[2, 3])?,
            ],
            vec![
                VertexSet::from_vertices(&[1, 2])?,
                VertexSet::from_vertices(&[2, 3])?,
                VertexSet::from_vertices(&[1, 3])?,
            ],
        ],
    )?;
    let barcode = cover_barcode(&filtration, DEFAULT_COVER_BUDGET)?;

    println!("cover barcode (cover, birth, death):");
    for bar in barcode.bars() {
        let death = bar
            .death
            .map_or_else(|| "inf".to_string(), |d| d.to_string());
        println!("  {} born {} dies {}", bar.cover, bar.birth, death);
    }

    println!("\npersistent prime counts:");
    for (a, b, pi) in barcode.pi_matrix() {
        println!("  Pi^({}, {}) = {pi}", barcode.grid()[a], barcode.grid()[b]);
    }

    // Stratified by cover size.
    println!(
        "\nPi^(0,1) restricted to size-1 covers: {}",
        barcode.pi_sized(0.0, 1.0, 1)?
    );
    Ok(())
}
