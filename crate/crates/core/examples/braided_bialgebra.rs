//! `Δ(xy) = Δ(x)Δ(y)` holds when `H ⊗ H` is multiplied with the Euler-form braiding and fails
//! with the plain flip.

use quiver_hall::gfq::Prime;
use quiver_hall::hall::{Braiding, HallAlgebra};
use quiver_hall::quiver::Quiver;
use quiver_hall::verify::{run_suite, verify_bialgebra, Suite};

fn main() -> quiver_hall::Result<()> {
    let braided = HallAlgebra::new(Quiver::builtin("a2")?, Prime::new(2)?, 3)?;
    let flat = HallAlgebra::new(Quiver::builtin("a2")?, Prime::new(2)?, 3)?
        .with_braiding(Braiding::Trivial);

    for (name, h) in [("braided", &braided), ("unbraided", &flat)] {
        let s1 = h.registry().by_label("(1,0)")?;
        let s2 = h.registry().by_label("(0,1)")?;
        let r = verify_bialgebra(h, s1, s2)?;
        println!("{name}: Δ(S1·S2) vs Δ(S1)Δ(S2): {:?}", r.verdict);
        let failures = run_suite(h, Suite::Bialgebra)?
            .iter()
            .filter(|r| !r.passed())
            .count();
        println!("{name}: {failures} failing pairs with total dimension ≤ 3");
    }
    Ok(())
}
