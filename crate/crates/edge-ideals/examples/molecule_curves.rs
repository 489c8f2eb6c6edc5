//! Distinguishing cis- and trans-dichloroethene by graded Betti curves of
//! their Vietoris-Rips edge ideals over [0, 5] Å.
//!
//! Run with: cargo run --example molecule_curves

use edge_ideals::betti::DEFAULT_BUDGET;
use edge_ideals::pipelines::{molecule_betti_curves, parse_xyz, vr_graph_filtration, MoleculeCurves};
use edge_ideals::Field;

fn curves_of(xyz: &[u8]) -> edge_ideals::Result<MoleculeCurves> {
    let points = parse_xyz(xyz)?;
    let filtration = vr_graph_filtration(&points, 0.0, 5.0, 64)?;
    molecule_betti_curves(&filtration, &[2, 3], Field::GF2, DEFAULT_BUDGET, false)
}

fn activation_summary(name: &str, curves: &MoleculeCurves) {
    println!("{name}:");
    for (&(i, d), curve) in &curves.curves {
        let first_active = curve.iter().position(|&v| v > 0);
        let peak = curve.iter().max().copied().unwrap_or(0);
        match first_active {
            Some(idx) => println!(
                "  beta_({i},{}) activates at r = {:.3} Å, peak value {peak}",
                i + d,
                curves.grid[idx]
            ),
            None => println!("  beta_({i},{}) never activates", i + d),
        }
    }
}

fn main() -> edge_ideals::Result<()> {
    let cis = curves_of(include_bytes!("../data/cis_dichloroethene.xyz"))?;
    let trans = curves_of(include_bytes!("../data/trans_dichloroethene.xyz"))?;

    activation_summary("cis-C2H2Cl2", &cis);
    println!();
    activation_summary("trans-C2H2Cl2", &trans);

    let differing: Vec<_> = cis
        .curves
        .iter()
        .filter(|(key, curve)| trans.curves.get(key) != Some(curve))
        .map(|(&(i, d), _)| (i, i + d))
        .collect();
    println!(
        "\ncurve slots where the isomers differ: {differing:?} — the compact cis \
         geometry activates edge generators earlier than the elongated trans form."
    );
    assert!(!differing.is_empty());
    Ok(())
}
