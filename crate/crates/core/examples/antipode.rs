//! The antipode from the graded recursion, compared with minus the identity.

use quiver_hall::gfq::Prime;
use quiver_hall::hall::HallAlgebra;
use quiver_hall::quiver::Quiver;
use quiver_hall::verify::{verify_antipode_axiom, Antipode};

fn main() -> quiver_hall::Result<()> {
    let h = HallAlgebra::new(Quiver::builtin("a2")?, Prime::new(2)?, 3)?;
    let s = Antipode::new(&h);
    for c in h.registry().classes_up_to(3) {
        let report = verify_antipode_axiom(&h, &s, c)?;
        println!(
            "S[{}] = {}\n    axiom {:?}; minus identity {}",
            h.label(c),
            report.notes["antipode"],
            report.verdict,
            report.notes["minus_identity_axiom"]
        );
    }
    Ok(())
}
