//! A quiver from JSON: D_4 with every arrow pointing into the centre.

use std::sync::Arc;

use quiver_hall::classify::ClassRegistry;
use quiver_hall::gfq::Prime;
use quiver_hall::quiver::Quiver;

const SPEC: &str = r#"{
  "format_version": 1,
  "vertices": ["c", "x", "y", "z"],
  "edges": [["x", "c"], ["y", "c"], ["z", "c"]]
}"#;

fn main() -> quiver_hall::Result<()> {
    let quiver = Quiver::from_json(SPEC)?;
    println!(
        "{} — {} positive roots",
        quiver.describe(),
        quiver.positive_root_count()
    );
    let bound = quiver.highest_root_height();
    let registry = ClassRegistry::build(Arc::new(quiver), Prime::new(2)?, bound)?;
    for c in registry.indecomposables() {
        println!("  {}", registry.class(c).dims);
    }
    Ok(())
}
