//! The quantum Serre relations between the two simples of A_2, and a perturbed combination
//! that does not vanish.

use quiver_hall::gfq::Prime;
use quiver_hall::hall::{rat, HallAlgebra};
use quiver_hall::quiver::Quiver;
use quiver_hall::verify::{serre_combination, verify_serre};

fn main() -> quiver_hall::Result<()> {
    for q in [2, 3, 5] {
        let h = HallAlgebra::new(Quiver::builtin("a2")?, Prime::new(q)?, 3)?;
        for r in verify_serre(&h)? {
            println!("{}: {:?}", r.instance, r.verdict);
        }
        let u = h.basis(h.registry().simple(0));
        let w = h.basis(h.registry().simple(1));
        let qq = rat(q as i64);
        let off = serre_combination(&h, &u, &w, [rat(1), -(&qq + rat(2)), qq])?;
        println!("  with -(q+2) in the middle: {:?}", h.render(&off));
    }
    Ok(())
}
