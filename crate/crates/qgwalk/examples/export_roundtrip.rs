//! Export a quantum group to its descriptor JSON and load it back: the
//! structure constants survive bit for bit and the reloaded descriptor passes
//! the axiom suite.

use qgwalk::catalog;
use qgwalk::io::{descriptor_from_group, group_from_descriptor, load_descriptor, save_descriptor};

fn main() -> qgwalk::Result<()> {
    let dir = std::env::temp_dir();
    let path = dir.join("qgwalk_sekine3.json");

    let qg = catalog::sekine(3)?;
    let irreps = catalog::sekine_irreps(3)?;
    save_descriptor(&path, &descriptor_from_group(&qg, Some(&irreps)))?;
    println!("wrote {}", path.display());

    let loaded = load_descriptor(&path)?;
    let (back, back_irreps) = group_from_descriptor(&loaded)?;
    assert_eq!(back.delta.matrix, qg.delta.matrix, "delta is bit-exact");
    assert_eq!(back.antipode.matrix, qg.antipode.matrix);
    assert_eq!(back.counit, qg.counit);
    assert_eq!(back.haar.weights, qg.haar.weights);

    let report = back.verify()?;
    println!("reloaded {}: max residual {:.2e}", back.label, report.max_residual());
    assert!(report.is_quantum_group());

    let diag = back_irreps.expect("irreps were exported").diagnostics(&back);
    println!("irrep table: complete = {}, pass = {}", diag.complete, diag.pass());
    assert!(diag.pass());

    std::fs::remove_file(&path).ok();
    Ok(())
}
