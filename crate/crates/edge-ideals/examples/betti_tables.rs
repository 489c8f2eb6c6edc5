//! Classical graded Betti tables of edge ideals via Hochster's formula.
//!
//! Run with: cargo run --example betti_tables

use edge_ideals::betti::{
    betti_table_ideal, betti_table_quotient, hochster_multigraded, Subject, DEFAULT_BUDGET,
};
use edge_ideals::complexes::{edge_ideal, independence_complex, Hypergraph};
use edge_ideals::{Field, VertexSet};

fn print_table(name: &str, entries: &std::collections::BTreeMap<(u32, u32), u64>) {
    println!("{name}");
    println!("{:>4} {:>4} {:>8}", "i", "j", "beta");
    for (&(i, j), &v) in entries {
        println!("{i:>4} {j:>4} {v:>8}");
    }
    println!();
}

fn main() -> edge_ideals::Result<()> {
    let field = Field::GF2;

    // The path on three vertices: I(P3) = (x1x2, x2x3).
    let p3 = Hypergraph::path(3)?;
    let ind = independence_complex(&p3);
    println!("Ind(P3) facets: {:?}\n", ind.facets());

    let quotient = betti_table_quotient(&ind, field, 8, 8, DEFAULT_BUDGET, true)?;
    print_table("S/I(P3) over GF(2):", &quotient.entries);

    // The multigraded refinement locates beta_{2,3} at W = {1,2,3}.
    let w = VertexSet::full(3);
    println!(
        "beta_{{2, (1,1,1)}}(S/I(P3)) = {}\n",
        hochster_multigraded(&ind, 2, w, field)
    );

    // Ideal-side tables are the quotient tables shifted by one.
    let ideal = betti_table_ideal(&edge_ideal(&p3), field, 8, 8, DEFAULT_BUDGET, false)?;
    assert_eq!(ideal.subject, Subject::Ideal);
    print_table("I(P3) (resolution S(-2)^2 <- S(-3)):", &ideal.entries);

    // Star ideals are 2-linear: beta_{i,i+2}(I) = C(t, i+1).
    let star = Hypergraph::star(5, 1, &[2, 3, 4, 5])?;
    let star_ideal = betti_table_ideal(&edge_ideal(&star), field, 8, 8, DEFAULT_BUDGET, false)?;
    print_table("I(star with 4 leaves):", &star_ideal.entries);

    // Complete graphs have the pure linear pattern beta_{i,i+1} = i C(n,i+1).
    let k5 = Hypergraph::complete(5)?;
    let k5_table =
        betti_table_quotient(&independence_complex(&k5), field, 8, 8, DEFAULT_BUDGET, false)?;
    print_table("S/I(K_5):", &k5_table.entries);

    // Betti numbers may depend on the characteristic; the field is explicit.
    let rational =
        betti_table_quotient(&independence_complex(&k5), Field::Rational, 8, 8, DEFAULT_BUDGET, false)?;
    assert_eq!(k5_table.entries, rational.entries);
    println!("K_5 table agrees over GF(2) and QQ (no torsion here).");
    Ok(())
}
