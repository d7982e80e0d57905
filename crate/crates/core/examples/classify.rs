//! Isomorphism classes of representations of A_3 over F_2, with the indecomposables marked.

use std::sync::Arc;

use quiver_hall::classify::ClassRegistry;
use quiver_hall::gfq::Prime;
use quiver_hall::quiver::Quiver;

fn main() -> quiver_hall::Result<()> {
    let quiver = Arc::new(Quiver::builtin("a3")?);
    println!("{}", quiver.describe());
    let registry = ClassRegistry::build(quiver, Prime::new(2)?, 3)?;
    for class in registry.classes() {
        println!(
            "{:<22} dim {}  |Aut| = {:<4} orbit = {:<3} {}",
            class.label,
            class.dims,
            class.aut_order,
            class.orbit_size,
            if class.indecomposable {
                "indecomposable"
            } else {
                ""
            }
        );
    }
    println!("{} indecomposables", registry.indecomposables().len());
    Ok(())
}
